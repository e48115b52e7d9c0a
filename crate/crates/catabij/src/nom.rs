use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::tableau::SkewTableau;

/// An ordered set partition `(A_1, ..., A_t)` of `1..=N` whose block minima
/// strictly increase and whose second-smallest elements strictly increase
/// along the blocks of size greater than one.
///
/// This is the shared intermediate between tableaux, paths, and
/// triangulations: block sizes become ascent lengths and fan sizes, block
/// minima become origins.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NomincreasingPartition {
    blocks: Vec<BTreeSet<usize>>,
}

impl NomincreasingPartition {
    pub fn new(blocks: Vec<BTreeSet<usize>>) -> Result<Self> {
        if blocks.is_empty() {
            return Err(Error::NotNomincreasing("no blocks".into()));
        }
        let n: usize = blocks.iter().map(|b| b.len()).sum();
        let mut seen = vec![false; n + 1];
        for block in &blocks {
            if block.is_empty() {
                return Err(Error::NotNomincreasing("empty block".into()));
            }
            for &v in block {
                if v < 1 || v > n {
                    return Err(Error::NotNomincreasing(format!(
                        "element {v} outside 1..={n}"
                    )));
                }
                if seen[v] {
                    return Err(Error::NotNomincreasing(format!("element {v} repeated")));
                }
                seen[v] = true;
            }
        }
        let minima: Vec<usize> = blocks.iter().map(|b| *b.iter().next().unwrap()).collect();
        if !minima.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::NotNomincreasing(
                "block minima do not increase".into(),
            ));
        }
        let seconds: Vec<usize> = blocks
            .iter()
            .filter(|b| b.len() > 1)
            .map(|b| *b.iter().nth(1).unwrap())
            .collect();
        if !seconds.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::NotNomincreasing(
                "second minima of the big blocks do not increase".into(),
            ));
        }
        Ok(NomincreasingPartition { blocks })
    }

    pub fn blocks(&self) -> &[BTreeSet<usize>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// Total number of elements, `N`.
    pub fn n(&self) -> usize {
        self.blocks.iter().map(|b| b.len()).sum()
    }

    pub fn minima(&self) -> Vec<usize> {
        self.blocks
            .iter()
            .map(|b| *b.iter().next().unwrap())
            .collect()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.len()).collect()
    }

    pub fn big_count(&self) -> usize {
        self.blocks.iter().filter(|b| b.len() > 1).count()
    }

    pub fn singleton_count(&self) -> usize {
        self.blocks.iter().filter(|b| b.len() == 1).count()
    }

    pub fn last_is_big(&self) -> bool {
        self.blocks.last().map(|b| b.len() > 1).unwrap_or(false)
    }
}

/// Reads the block partition off a tableau.
///
/// The minima are the entries of the top `b - 1` rows in increasing order.
/// An upper-stem entry forms a singleton block. A row-`(b-1)` entry `x` in
/// column `c`, with `y` the entry directly below it, takes the interval from
/// `y` up to (exclusive) the next row-`b` entry — or to `N` inclusive for the
/// last column — minus the minima themselves.
pub fn nom(t: &SkewTableau) -> NomincreasingPartition {
    let b = t.b();
    let i = t.i();
    let n = t.cell_count();

    let upper: BTreeSet<usize> = t.upper_stem().into_iter().collect();
    // (x, y) per column of the two full rows, in column order.
    let pairs: Vec<(usize, usize)> = (1..=i + 1)
        .map(|c| (t.entry(b - 1, c).unwrap(), t.entry(b, c).unwrap()))
        .collect();
    let x_by_value: BTreeMap<usize, usize> = pairs
        .iter()
        .enumerate()
        .map(|(k, &(x, _))| (x, k))
        .collect();

    let mut top: BTreeSet<usize> = upper.clone();
    top.extend(pairs.iter().map(|&(x, _)| x));

    let mut blocks = Vec::with_capacity(top.len());
    for &x in &top {
        if upper.contains(&x) {
            blocks.push(BTreeSet::from([x]));
            continue;
        }
        let k = x_by_value[&x];
        let y = pairs[k].1;
        let end = if k + 1 < pairs.len() {
            pairs[k + 1].1 - 1
        } else {
            n
        };
        let mut block = BTreeSet::from([x]);
        block.extend((y..=end).filter(|v| !top.contains(v)));
        blocks.push(block);
    }
    debug_assert_eq!(blocks.iter().map(|b| b.len()).sum::<usize>(), n);
    NomincreasingPartition { blocks }
}

/// Rebuilds the tableau with the `(a, i, b)` profile from its blocks:
/// singleton blocks fill the upper stem top-down, each big block puts its
/// minimum in row `b - 1` and its second element in row `b` at the next free
/// column, and the rest of a big block goes down the lower stem in order.
///
/// Increasing minima and second minima alone do not pin which block owns a
/// lower-stem entry (`({1,2,6},{3},{4,5})` and `({1,2},{3},{4,5,6})` fill
/// the same diagram), so the rebuilt tableau's own block partition is
/// compared against the input; a mismatch is a `FillViolation`, keeping
/// [`nom`] and `unnom` exact inverses on everything `unnom` accepts.
pub fn unnom(p: &NomincreasingPartition, a: usize, i: usize, b: usize) -> Result<SkewTableau> {
    let profile_err = |reason: String| Error::ProfileMismatch { a, i, b, reason };
    if a < 2 || b < 2 {
        return Err(profile_err("parameters require a >= 2 and b >= 2".into()));
    }
    let n = a + b + 2 * i - 2;
    if p.n() != n {
        return Err(profile_err(format!(
            "partition covers 1..={}, need 1..={n}",
            p.n()
        )));
    }
    if p.block_count() != i + b - 1 {
        return Err(profile_err(format!(
            "{} blocks, need {}",
            p.block_count(),
            i + b - 1
        )));
    }
    if p.big_count() != i + 1 {
        return Err(profile_err(format!(
            "{} big blocks, need {}",
            p.big_count(),
            i + 1
        )));
    }
    if !p.last_is_big() {
        return Err(profile_err("last block is a singleton".into()));
    }

    let mut entries = BTreeMap::new();
    let mut upper_row = 1;
    let mut col = 1;
    let mut lower_row = b + 1;
    for block in p.blocks() {
        let mut it = block.iter().copied();
        if block.len() == 1 {
            entries.insert((upper_row, i + 1), it.next().unwrap());
            upper_row += 1;
        } else {
            entries.insert((b - 1, col), it.next().unwrap());
            entries.insert((b, col), it.next().unwrap());
            col += 1;
            for v in it {
                entries.insert((lower_row, 1), v);
                lower_row += 1;
            }
        }
    }
    let t = SkewTableau::new(a, i, b, &entries).map_err(|e| Error::FillViolation(e.to_string()))?;
    if &nom(&t) != p {
        return Err(Error::FillViolation(
            "the filled diagram reads back as a different block partition".into(),
        ));
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn blocks(sets: &[&[usize]]) -> Vec<BTreeSet<usize>> {
        sets.iter().map(|s| s.iter().copied().collect()).collect()
    }

    fn seven_two_six() -> SkewTableau {
        let mut entries = BTreeMap::new();
        for (r, v) in (5..=11).zip([2, 3, 6, 8, 9, 14, 15]) {
            entries.insert((r, 1), v);
        }
        for (r, v) in (5..=6).zip([7, 11]) {
            entries.insert((r, 2), v);
        }
        for (r, v) in (1..=6).zip([1, 4, 5, 10, 12, 13]) {
            entries.insert((r, 3), v);
        }
        SkewTableau::new(7, 2, 6, &entries).unwrap()
    }

    #[test]
    fn blocks_of_the_worked_tableau() {
        let p = nom(&seven_two_six());
        let expected = blocks(&[
            &[1],
            &[2, 3, 6, 8, 9],
            &[4],
            &[5],
            &[7, 11],
            &[10],
            &[12, 13, 14, 15],
        ]);
        assert_eq!(p.blocks(), &expected[..]);
    }

    #[test]
    fn blocks_of_the_two_by_two_tableaux() {
        let t = SkewTableau::from_rows(
            2,
            1,
            2,
            vec![vec![Some(1), Some(2)], vec![Some(3), Some(4)]],
        )
        .unwrap();
        assert_eq!(nom(&t).blocks(), &blocks(&[&[1, 3], &[2, 4]])[..]);

        let t = SkewTableau::from_rows(
            2,
            1,
            2,
            vec![vec![Some(1), Some(3)], vec![Some(2), Some(4)]],
        )
        .unwrap();
        assert_eq!(nom(&t).blocks(), &blocks(&[&[1, 2], &[3, 4]])[..]);
    }

    #[test]
    fn unnom_rebuilds_the_fifteen_cell_example() {
        let p = NomincreasingPartition::new(blocks(&[
            &[1],
            &[2, 3, 6],
            &[4],
            &[5],
            &[7, 8, 9, 11],
            &[10],
            &[12, 13, 14, 15],
        ]))
        .unwrap();
        let t = unnom(&p, 7, 2, 6).unwrap();
        let col1: Vec<usize> = (5..=11).map(|r| t.entry(r, 1).unwrap()).collect();
        let col2: Vec<usize> = (5..=6).map(|r| t.entry(r, 2).unwrap()).collect();
        let col3: Vec<usize> = (1..=6).map(|r| t.entry(r, 3).unwrap()).collect();
        assert_eq!(col1, vec![2, 3, 6, 9, 11, 14, 15]);
        assert_eq!(col2, vec![7, 8]);
        assert_eq!(col3, vec![1, 4, 5, 10, 12, 13]);
        assert_eq!(nom(&t), p);
    }

    #[test]
    fn unnom_rebuilds_the_ten_cell_example() {
        let p =
            NomincreasingPartition::new(blocks(&[&[1], &[2, 3], &[4], &[5, 6, 8], &[7, 9, 10]]))
                .unwrap();
        let t = unnom(&p, 4, 2, 4).unwrap();
        assert_eq!(t.upper_stem(), vec![1, 4]);
        assert_eq!(t.lower_stem(), vec![8, 10]);
        let row3: Vec<usize> = (1..=3).map(|c| t.entry(3, c).unwrap()).collect();
        let row4: Vec<usize> = (1..=3).map(|c| t.entry(4, c).unwrap()).collect();
        assert_eq!(row3, vec![2, 5, 7]);
        assert_eq!(row4, vec![3, 6, 9]);
    }

    #[test]
    fn unnom_inverts_nom_on_small_squares() {
        let p = NomincreasingPartition::new(blocks(&[&[1, 3], &[2, 4]])).unwrap();
        let t = unnom(&p, 2, 1, 2).unwrap();
        assert_eq!(t.entry(1, 1), Some(1));
        assert_eq!(t.entry(1, 2), Some(2));
        assert_eq!(t.entry(2, 1), Some(3));
        assert_eq!(t.entry(2, 2), Some(4));
    }

    #[test]
    fn profile_mismatches_are_rejected() {
        let p = NomincreasingPartition::new(blocks(&[&[1, 3], &[2, 4]])).unwrap();
        assert!(matches!(
            unnom(&p, 3, 1, 2),
            Err(Error::ProfileMismatch { .. })
        ));
        let p = NomincreasingPartition::new(blocks(&[&[1, 2], &[3], &[4, 5]])).unwrap();
        assert!(matches!(
            unnom(&p, 2, 1, 2),
            Err(Error::ProfileMismatch { .. })
        ));
        // Last block must be big.
        let p = NomincreasingPartition::new(blocks(&[&[1, 2, 3], &[4]])).unwrap();
        assert!(matches!(
            unnom(&p, 2, 0, 3),
            Err(Error::ProfileMismatch { .. })
        ));
    }

    #[test]
    fn interval_breaking_blocks_fail_the_fill() {
        // Minima and second minima increase, but the tails land out of order
        // in the lower stem: 9 before 7 and 8.
        let p = NomincreasingPartition::new(blocks(&[&[1, 2, 9], &[3, 4], &[5, 6, 7, 8]])).unwrap();
        assert!(matches!(unnom(&p, 5, 2, 2), Err(Error::FillViolation(_))));
    }

    #[test]
    fn misattributed_tails_fail_the_fill() {
        // Fills to a valid diagram, but that diagram's own partition hands
        // the 6 to the last block instead of the first.
        let p = NomincreasingPartition::new(blocks(&[&[1, 2, 6], &[3], &[4, 5]])).unwrap();
        assert!(matches!(unnom(&p, 3, 1, 3), Err(Error::FillViolation(_))));
        let p = NomincreasingPartition::new(blocks(&[&[1, 2], &[3], &[4, 5, 6]])).unwrap();
        let t = unnom(&p, 3, 1, 3).unwrap();
        assert_eq!(nom(&t), p);
    }

    #[test]
    fn structural_violations_are_rejected_at_construction() {
        assert!(matches!(
            NomincreasingPartition::new(blocks(&[&[2, 3], &[1, 4]])),
            Err(Error::NotNomincreasing(_))
        ));
        // Second minima must increase along big blocks: {1,5} then {2,3}.
        assert!(matches!(
            NomincreasingPartition::new(blocks(&[&[1, 5], &[2, 3], &[4]])),
            Err(Error::NotNomincreasing(_))
        ));
        assert!(matches!(
            NomincreasingPartition::new(blocks(&[&[1], &[3]])),
            Err(Error::NotNomincreasing(_))
        ));
    }

    #[test]
    fn minimum_of_the_first_block_is_one() {
        let p = nom(&seven_two_six());
        assert_eq!(p.minima()[0], 1);
        assert_eq!(p.n(), 15);
    }
}
