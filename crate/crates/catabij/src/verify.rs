//! Brute-force verification of the counting identities and round-trip laws
//! at desk scale.
//!
//! Every check enumerates both sides independently; the bijections are never
//! used to produce the counts they are being checked against. Reports are
//! deterministic: parameter cells are generated in a fixed nested order and
//! aggregation preserves it regardless of `jobs`.

use std::collections::BTreeMap;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::bridge::{dissection_to_triangulation, triangulation_to_dissection};
use crate::enumerate;
use crate::error::{Error, Result};
use crate::fans::classify_triangulation;
use crate::maps;

/// The identities the harness knows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Identity {
    /// `#Skyt(a,i,b) = #Skyt(b,i,a)`.
    SkytSym,
    /// `#Dyck(n,l,s) = #Dyck(n,l,n-s-2l)`.
    DyckSym,
    /// `#Tri(n,t,s) = #Tri(n,t,n-2t-s-2)`.
    TriSym,
    /// `#Skyt(a,i,b) = #Dyck(a+b+2i-2,i+1,b-2) = #Tri(a+b+2i,i+1,b-2)`.
    TheoremCardinalities,
    /// `#Dis(m,i) = #Skyt(m-i-1,i,2) = #Dyck(m+i-1,i+1,0) = #Tri(m+i+1,i+1,0)`.
    CorollaryDissection,
    /// All six maps and the dissection bridge compose to identities.
    BijectionRoundtrips,
}

impl Identity {
    pub const ALL: [Identity; 6] = [
        Identity::SkytSym,
        Identity::DyckSym,
        Identity::TriSym,
        Identity::TheoremCardinalities,
        Identity::CorollaryDissection,
        Identity::BijectionRoundtrips,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Identity::SkytSym => "skyt_sym",
            Identity::DyckSym => "dyck_sym",
            Identity::TriSym => "tri_sym",
            Identity::TheoremCardinalities => "theorem_cardinalities",
            Identity::CorollaryDissection => "corollary_dissection",
            Identity::BijectionRoundtrips => "bijection_roundtrips",
        }
    }
}

impl FromStr for Identity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Identity> {
        Identity::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::UnknownIdentity(s.to_string()))
    }
}

/// Size bounds for the parameter grids. `max_cells` bounds tableau sizes
/// (and path semi-lengths, as `max_cells - 2`); `max_polygon` bounds polygon
/// vertex counts (and the triangulation-side path lengths).
#[derive(Debug, Clone, Copy, Serialize)]
pub struct VerifyConfig {
    pub max_cells: usize,
    pub max_polygon: usize,
    pub jobs: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_cells: 11,
            max_polygon: 13,
            jobs: 1,
        }
    }
}

/// One parameter cell of an identity check.
#[derive(Debug, Clone, Serialize)]
pub struct CellReport {
    pub label: String,
    /// Named counts: the sides of a counting identity, or checked/failed
    /// totals for round-trip cells.
    pub counts: Vec<(String, u64)>,
    pub pass: bool,
    /// Compact form of the first failing object, if any.
    pub counterexample: Option<String>,
}

impl CellReport {
    fn counting(label: String, sides: Vec<(String, u64)>) -> CellReport {
        let pass = sides.windows(2).all(|w| w[0].1 == w[1].1);
        CellReport {
            label,
            counts: sides,
            pass,
            counterexample: None,
        }
    }

    fn roundtrip(
        label: String,
        checked: u64,
        failures: u64,
        witness: Option<String>,
    ) -> CellReport {
        CellReport {
            label,
            counts: vec![("checked".into(), checked), ("failures".into(), failures)],
            pass: failures == 0,
            counterexample: witness,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct IdentityReport {
    pub identity: &'static str,
    pub config: VerifyConfig,
    /// Anything non-obvious about the tested statement.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<&'static str>,
    pub cells: Vec<CellReport>,
    pub pass: bool,
}

pub fn check_identity(identity: Identity, config: &VerifyConfig) -> IdentityReport {
    let cells = match identity {
        Identity::SkytSym => skyt_sym_cells(config),
        Identity::DyckSym => dyck_sym_cells(config),
        Identity::TriSym => tri_sym_cells(config),
        Identity::TheoremCardinalities => theorem_cells(config),
        Identity::CorollaryDissection => corollary_cells(config),
        Identity::BijectionRoundtrips => roundtrip_cells(config),
    };
    let note = match identity {
        Identity::TriSym => Some(
            "tested in the derived form s <-> n - 2t - s - 2, the involution obtained by \
             carrying the shape symmetry across the triangulation bijection",
        ),
        _ => None,
    };
    let pass = cells.iter().all(|c| c.pass);
    IdentityReport {
        identity: identity.name(),
        config: *config,
        note,
        cells,
        pass,
    }
}

pub fn check_identity_named(name: &str, config: &VerifyConfig) -> Result<IdentityReport> {
    Ok(check_identity(name.parse()?, config))
}

/// Runs cell evaluations, across a local thread pool when `jobs > 1`;
/// collection preserves the input order either way.
fn run<P, F>(params: Vec<P>, eval: F, jobs: usize) -> Vec<CellReport>
where
    P: Send + Sync,
    F: Fn(&P) -> CellReport + Send + Sync,
{
    if jobs <= 1 {
        return params.iter().map(eval).collect();
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool");
    pool.install(|| params.par_iter().map(eval).collect())
}

/// The `(a, i, b)` grid shared by the theorem-level checks.
fn shape_grid(config: &VerifyConfig) -> Vec<(usize, usize, usize)> {
    let mut grid = Vec::new();
    for a in 2..=6 {
        for b in 2..=6 {
            for i in 1..=3 {
                if a + b + 2 * i - 2 <= config.max_cells {
                    grid.push((a, i, b));
                }
            }
        }
    }
    grid
}

fn skyt_sym_cells(config: &VerifyConfig) -> Vec<CellReport> {
    run(
        shape_grid(config),
        |&(a, i, b)| {
            CellReport::counting(
                format!("skyt({a},{i},{b}) vs skyt({b},{i},{a})"),
                vec![
                    (
                        format!("skyt({a},{i},{b})"),
                        enumerate::skyt(a, i, b).len() as u64,
                    ),
                    (
                        format!("skyt({b},{i},{a})"),
                        enumerate::skyt(b, i, a).len() as u64,
                    ),
                ],
            )
        },
        config.jobs,
    )
}

/// Class counts of all paths of semi-length `n`, plus the rejects whose last
/// ascent is a singleton (they belong to no class).
fn dyck_census(n: usize) -> (BTreeMap<(usize, usize), u64>, u64) {
    let mut classes = BTreeMap::new();
    let mut rejects = 0;
    for p in enumerate::dyck_paths(n) {
        let st = p.stats();
        if p.is_classified() {
            *classes.entry((st.long_ascents, st.singletons)).or_insert(0) += 1;
        } else {
            rejects += 1;
        }
    }
    (classes, rejects)
}

fn dyck_sym_cells(config: &VerifyConfig) -> Vec<CellReport> {
    let mut cells = Vec::new();
    for n in 1..=config.max_cells.saturating_sub(2) {
        let (classes, _) = dyck_census(n);
        for l in 0..=n / 2 {
            for s in 0..=n.saturating_sub(2 * l) {
                let mirror = n - s - 2 * l;
                let left = classes.get(&(l, s)).copied().unwrap_or(0);
                let right = classes.get(&(l, mirror)).copied().unwrap_or(0);
                cells.push(CellReport::counting(
                    format!("dyck({n},{l},{s}) vs dyck({n},{l},{mirror})"),
                    vec![
                        (format!("dyck({n},{l},{s})"), left),
                        (format!("dyck({n},{l},{mirror})"), right),
                    ],
                ));
            }
        }
    }
    cells
}

/// Class counts of all triangulations of the `n`-gon, plus the rejects
/// whose last fan is singular.
fn tri_census(n: usize) -> (BTreeMap<(usize, usize), u64>, u64) {
    let mut classes = BTreeMap::new();
    let mut rejects = 0;
    for t in enumerate::triangulations(n) {
        let c = classify_triangulation(&t).expect("stream yields triangulations");
        if c.last_fan_big {
            *classes.entry((c.non_singular, c.singular)).or_insert(0) += 1;
        } else {
            rejects += 1;
        }
    }
    (classes, rejects)
}

fn tri_sym_cells(config: &VerifyConfig) -> Vec<CellReport> {
    let mut cells = Vec::new();
    for n in 4..=config.max_polygon.saturating_sub(2) {
        let (classes, _) = tri_census(n);
        for t in 1..=(n - 2) / 2 {
            for s in 0..=n.saturating_sub(2 * t + 2) {
                let mirror = n - 2 * t - s - 2;
                let left = classes.get(&(t, s)).copied().unwrap_or(0);
                let right = classes.get(&(t, mirror)).copied().unwrap_or(0);
                cells.push(CellReport::counting(
                    format!("tri({n},{t},{s}) vs tri({n},{t},{mirror})"),
                    vec![
                        (format!("tri({n},{t},{s})"), left),
                        (format!("tri({n},{t},{mirror})"), right),
                    ],
                ));
            }
        }
    }
    cells
}

fn theorem_cells(config: &VerifyConfig) -> Vec<CellReport> {
    run(
        shape_grid(config),
        |&(a, i, b)| {
            let n = a + b + 2 * i - 2;
            let skyt = enumerate::skyt(a, i, b).len() as u64;
            let dyck = enumerate::dyck_class(n, i + 1, b - 2).len() as u64;
            let tri = enumerate::triangulation_class(n + 2, i + 1, b - 2).len() as u64;
            CellReport::counting(
                format!(
                    "skyt({a},{i},{b}) vs dyck({n},{},{}) vs tri({},{},{})",
                    i + 1,
                    b - 2,
                    n + 2,
                    i + 1,
                    b - 2
                ),
                vec![
                    (format!("skyt({a},{i},{b})"), skyt),
                    (format!("dyck({n},{},{})", i + 1, b - 2), dyck),
                    (format!("tri({},{},{})", n + 2, i + 1, b - 2), tri),
                ],
            )
        },
        config.jobs,
    )
}

fn corollary_cells(config: &VerifyConfig) -> Vec<CellReport> {
    let top = 8.min(config.max_cells.saturating_sub(3)).max(4);
    let mut params = Vec::new();
    for m in 4..=top {
        for i in 0..=m - 3 {
            params.push((m, i));
        }
    }
    run(
        params,
        |&(m, i)| {
            let dis = enumerate::dissections(m, i).len() as u64;
            let skyt = enumerate::skyt(m - i - 1, i, 2).len() as u64;
            let dyck = enumerate::dyck_class(m + i - 1, i + 1, 0).len() as u64;
            let tri = enumerate::triangulation_class(m + i + 1, i + 1, 0).len() as u64;
            CellReport::counting(
                format!(
                    "dis({m},{i}) vs skyt({},{i},2) vs dyck({},{},0) vs tri({},{},0)",
                    m - i - 1,
                    m + i - 1,
                    i + 1,
                    m + i + 1,
                    i + 1
                ),
                vec![
                    (format!("dis({m},{i})"), dis),
                    (format!("skyt({},{i},2)", m - i - 1), skyt),
                    (format!("dyck({},{},0)", m + i - 1, i + 1), dyck),
                    (format!("tri({},{},0)", m + i + 1, i + 1), tri),
                ],
            )
        },
        config.jobs,
    )
}

fn tableau_roundtrips(a: usize, i: usize, b: usize) -> CellReport {
    let n = a + b + 2 * i - 2;
    let mut checked = 0;
    let mut failures = 0;
    let mut witness = None;
    for t in enumerate::skyt(a, i, b) {
        checked += 1;
        let path = maps::tableau_to_dyck(&t);
        let tri = maps::tableau_to_triangulation(&t);
        let ok = path.in_class(n, i + 1, b - 2)
            && maps::dyck_to_tableau(&path)
                .map(|back| back == t)
                .unwrap_or(false)
            && maps::dyck_to_triangulation(&path)
                .map(|v| v == tri)
                .unwrap_or(false)
            && classify_triangulation(&tri)
                .map(|c| c.in_class(n + 2, i + 1, b - 2))
                .unwrap_or(false)
            && maps::triangulation_to_tableau(&tri)
                .map(|back| back == t)
                .unwrap_or(false);
        if !ok {
            failures += 1;
            witness.get_or_insert_with(|| t.to_string());
        }
    }
    CellReport::roundtrip(
        format!("tableaux ({a},{i},{b})"),
        checked,
        failures,
        witness,
    )
}

fn path_roundtrips(n: usize) -> CellReport {
    let mut checked = 0;
    let mut failures = 0;
    let mut witness = None;
    for p in enumerate::dyck_paths(n) {
        if !p.is_classified() {
            continue;
        }
        checked += 1;
        let st = p.stats();
        let ok = maps::dyck_to_tableau(&p)
            .map(|t| {
                (t.a(), t.i(), t.b())
                    == (
                        n - st.singletons - 2 * st.long_ascents + 2,
                        st.long_ascents - 1,
                        st.singletons + 2,
                    )
                    && maps::tableau_to_dyck(&t) == p
            })
            .unwrap_or(false)
            && maps::dyck_to_triangulation(&p)
                .and_then(|t| maps::triangulation_to_dyck(&t))
                .map(|back| back == p)
                .unwrap_or(false);
        if !ok {
            failures += 1;
            witness.get_or_insert_with(|| p.to_string());
        }
    }
    CellReport::roundtrip(format!("paths n={n}"), checked, failures, witness)
}

fn triangulation_roundtrips(n: usize) -> CellReport {
    let mut checked = 0;
    let mut failures = 0;
    let mut witness = None;
    for t in enumerate::triangulations(n) {
        let class = classify_triangulation(&t).expect("triangulation");
        if !class.last_fan_big {
            continue;
        }
        checked += 1;
        let ok = maps::triangulation_to_dyck(&t)
            .and_then(|p| {
                let direct = maps::triangulation_to_tableau(&t)?;
                let through = maps::dyck_to_tableau(&p)?;
                let back = maps::dyck_to_triangulation(&p)?;
                Ok(direct == through && back == t && maps::tableau_to_triangulation(&direct) == t)
            })
            .unwrap_or(false);
        if !ok {
            failures += 1;
            witness.get_or_insert_with(|| t.to_string().replace('\n', " "));
        }
    }
    CellReport::roundtrip(format!("triangulations n={n}"), checked, failures, witness)
}

fn bridge_roundtrips_from_dissections(m: usize) -> CellReport {
    let mut checked = 0;
    let mut failures = 0;
    let mut witness = None;
    for i in 0..=m - 3 {
        for d in enumerate::dissections(m, i) {
            checked += 1;
            let ok = dissection_to_triangulation(&d)
                .and_then(|t| {
                    let c = classify_triangulation(&t)?;
                    let back = triangulation_to_dissection(&t)?;
                    Ok(c.in_class(m + i + 1, i + 1, 0) && back == d)
                })
                .unwrap_or(false);
            if !ok {
                failures += 1;
                witness.get_or_insert_with(|| d.to_string().replace('\n', " "));
            }
        }
    }
    CellReport::roundtrip(format!("dissections m={m}"), checked, failures, witness)
}

fn bridge_roundtrips_from_triangulations(n: usize) -> CellReport {
    let mut checked = 0;
    let mut failures = 0;
    let mut witness = None;
    for t in enumerate::triangulations(n) {
        let class = classify_triangulation(&t).expect("triangulation");
        if class.singular != 0 || !class.last_fan_big {
            continue;
        }
        checked += 1;
        let ok = triangulation_to_dissection(&t)
            .and_then(|d| dissection_to_triangulation(&d))
            .map(|back| back == t)
            .unwrap_or(false);
        if !ok {
            failures += 1;
            witness.get_or_insert_with(|| t.to_string().replace('\n', " "));
        }
    }
    CellReport::roundtrip(
        format!("fan triangulations n={n}"),
        checked,
        failures,
        witness,
    )
}

/// Round-trip cells for every family at every size in range.
fn roundtrip_cells(config: &VerifyConfig) -> Vec<CellReport> {
    enum Task {
        Tableaux(usize, usize, usize),
        Paths(usize),
        Triangulations(usize),
        BridgeDis(usize),
        BridgeTri(usize),
    }
    let mut tasks: Vec<Task> = Vec::new();
    for (a, i, b) in shape_grid(config) {
        tasks.push(Task::Tableaux(a, i, b));
    }
    for n in 1..=config.max_cells.saturating_sub(2) {
        tasks.push(Task::Paths(n));
    }
    for n in 4..=config.max_polygon {
        tasks.push(Task::Triangulations(n));
    }
    for m in 4..=8.min(config.max_cells.saturating_sub(3)).max(4) {
        tasks.push(Task::BridgeDis(m));
    }
    for n in 4..=10.min(config.max_polygon) {
        tasks.push(Task::BridgeTri(n));
    }
    run(
        tasks,
        |task| match *task {
            Task::Tableaux(a, i, b) => tableau_roundtrips(a, i, b),
            Task::Paths(n) => path_roundtrips(n),
            Task::Triangulations(n) => triangulation_roundtrips(n),
            Task::BridgeDis(m) => bridge_roundtrips_from_dissections(m),
            Task::BridgeTri(n) => bridge_roundtrips_from_triangulations(n),
        },
        config.jobs,
    )
}

/// Totality check used by the tests: paths of semi-length `n` split into
/// the classes plus the last-ascent-singleton rejects, and the total is the
/// Catalan number.
pub fn dyck_class_totals(n: usize) -> (u64, u64) {
    let (classes, rejects) = dyck_census(n);
    (classes.values().sum::<u64>(), rejects)
}

/// Same for triangulations of the `n`-gon against `C_{n-2}`.
pub fn tri_class_totals(n: usize) -> (u64, u64) {
    let (classes, rejects) = tri_census(n);
    (classes.values().sum::<u64>(), rejects)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> VerifyConfig {
        VerifyConfig {
            max_cells: 8,
            max_polygon: 8,
            jobs: 1,
        }
    }

    #[test]
    fn all_identities_pass_at_small_sizes() {
        for id in Identity::ALL {
            let report = check_identity(id, &small());
            assert!(
                report.pass,
                "{} failed: {:?}",
                id.name(),
                report.cells.iter().find(|c| !c.pass)
            );
            assert!(!report.cells.is_empty());
        }
    }

    #[test]
    fn parallel_runs_are_deterministic() {
        let sequential = check_identity(Identity::TheoremCardinalities, &small());
        let parallel = check_identity(
            Identity::TheoremCardinalities,
            &VerifyConfig { jobs: 4, ..small() },
        );
        let left: Vec<&String> = sequential.cells.iter().map(|c| &c.label).collect();
        let right: Vec<&String> = parallel.cells.iter().map(|c| &c.label).collect();
        assert_eq!(left, right);
    }

    #[test]
    fn unknown_identities_are_rejected() {
        assert!(matches!(
            check_identity_named("no_such_identity", &small()),
            Err(Error::UnknownIdentity(_))
        ));
    }

    #[test]
    fn theorem_triple_at_the_smallest_shape() {
        assert_eq!(enumerate::skyt(2, 1, 2).len(), 2);
        assert_eq!(enumerate::dyck_class(4, 2, 0).len(), 2);
        assert_eq!(enumerate::triangulation_class(6, 2, 0).len(), 2);
    }

    #[test]
    fn class_totals_cover_all_objects() {
        for n in 1..=6 {
            let (classes, rejects) = dyck_class_totals(n);
            assert_eq!(classes + rejects, enumerate::catalan(n), "paths n={n}");
        }
        for n in 4..=8 {
            let (classes, rejects) = tri_class_totals(n);
            assert_eq!(classes + rejects, enumerate::catalan(n - 2), "tris n={n}");
        }
    }
}
