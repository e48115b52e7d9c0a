use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// One step of a lattice path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    Up,
    Down,
}

/// A Dyck path: a balanced sequence of `U`/`D` steps in which every prefix
/// has at least as many `U`s as `D`s.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DyckPath {
    steps: Vec<Step>,
}

/// Run statistics of a Dyck path: semi-length, number of long ascents
/// (maximal `U`-runs of length >= 2), number of singletons (maximal
/// `U`-runs of length 1), and whether the final ascent is long.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DyckStats {
    pub n: usize,
    pub long_ascents: usize,
    pub singletons: usize,
    pub last_ascent_long: bool,
}

impl DyckPath {
    /// Validates a step sequence. The first index where the prefix dips
    /// below zero, or the path length on imbalance, is reported.
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        let mut height: isize = 0;
        for (index, step) in steps.iter().enumerate() {
            match step {
                Step::Up => height += 1,
                Step::Down => height -= 1,
            }
            if height < 0 {
                return Err(Error::NotDyck { index });
            }
        }
        if height != 0 {
            return Err(Error::NotDyck { index: steps.len() });
        }
        Ok(DyckPath { steps })
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Number of `U` steps.
    pub fn semi_length(&self) -> usize {
        self.steps.len() / 2
    }

    /// Maximal runs as `(ascent length, descent length)` pairs. A Dyck path
    /// always alternates `U`-runs and `D`-runs starting with a `U`-run, so
    /// this decomposition is total.
    pub fn runs(&self) -> Vec<(usize, usize)> {
        let mut runs = Vec::new();
        let mut k = 0;
        while k < self.steps.len() {
            let mut up = 0;
            while k < self.steps.len() && self.steps[k] == Step::Up {
                up += 1;
                k += 1;
            }
            let mut down = 0;
            while k < self.steps.len() && self.steps[k] == Step::Down {
                down += 1;
                k += 1;
            }
            runs.push((up, down));
        }
        runs
    }

    pub fn stats(&self) -> DyckStats {
        let runs = self.runs();
        DyckStats {
            n: self.semi_length(),
            long_ascents: runs.iter().filter(|(u, _)| *u >= 2).count(),
            singletons: runs.iter().filter(|(u, _)| *u == 1).count(),
            last_ascent_long: runs.last().map(|(u, _)| *u >= 2).unwrap_or(false),
        }
    }

    /// Whether no singleton ascent appears after the last long ascent,
    /// checked run by run. Paths failing this belong to no class.
    pub fn is_classified(&self) -> bool {
        let runs = self.runs();
        let last_long = runs.iter().rposition(|(u, _)| *u >= 2);
        match last_long {
            None => runs.is_empty(),
            Some(j) => runs[j + 1..].iter().all(|(u, _)| *u >= 2),
        }
    }

    /// Membership in the class of semi-length `n`, `long` long ascents and
    /// `singletons` singletons.
    pub fn in_class(&self, n: usize, long: usize, singletons: usize) -> bool {
        let st = self.stats();
        st.n == n && st.long_ascents == long && st.singletons == singletons && self.is_classified()
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for step in &self.steps {
            f.write_str(match step {
                Step::Up => "U",
                Step::Down => "D",
            })?;
        }
        Ok(())
    }
}

impl FromStr for DyckPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut steps = Vec::with_capacity(s.len());
        for (col, ch) in s.chars().enumerate() {
            match ch {
                'U' => steps.push(Step::Up),
                'D' => steps.push(Step::Down),
                _ => {
                    return Err(Error::SyntaxError {
                        line: 1,
                        col: col + 1,
                        msg: format!("expected U or D, found {ch:?}"),
                    })
                }
            }
        }
        DyckPath::new(steps)
    }
}
