//! The six bijections between tableaux, Dyck paths, and triangulations.
//!
//! All three directions out of a tableau factor through its block partition
//! ([`crate::nom`]): block sizes become ascent lengths and fan sizes, block
//! minima become fan origins, and the gaps between minima become descent
//! runs and origin gaps. The inverse maps rebuild the blocks by a greedy
//! smallest-unused labeling and feed them to [`crate::unnom`].

use std::collections::BTreeSet;

use crate::dyck::{DyckPath, Step};
use crate::error::{Error, Result};
use crate::fans::{fan_decompose, reconstruct_from_fans, FanDecomposition};
use crate::nom::{nom, unnom, NomincreasingPartition};
use crate::polygon::PolygonSubdivision;
use crate::tableau::SkewTableau;

/// Tableau to Dyck path: with blocks `A_1..A_t` and minima `x_1..x_t`, the
/// path is `U^{|A_1|} D^{x_2-x_1} ... U^{|A_t|} D^{N-x_t+x_1}`.
///
/// A tableau with parameters `(a, i, b)` lands in the class
/// `(a+b+2i-2, i+1, b-2)`.
pub fn tableau_to_dyck(t: &SkewTableau) -> DyckPath {
    let p = nom(t);
    let sizes = p.sizes();
    let minima = p.minima();
    let n = p.n();
    let mut steps = Vec::with_capacity(2 * n);
    for (j, &size) in sizes.iter().enumerate() {
        steps.extend(std::iter::repeat_n(Step::Up, size));
        let descent = if j + 1 < minima.len() {
            minima[j + 1] - minima[j]
        } else {
            n - minima[j] + minima[0]
        };
        steps.extend(std::iter::repeat_n(Step::Down, descent));
    }
    DyckPath::new(steps).expect("block partition always yields a Dyck path")
}

/// Dyck path to tableau, inverse to [`tableau_to_dyck`].
///
/// Label the down-steps 1..n left to right; each peak's label transfers to
/// the ascent it tops; the remaining up-steps take the smallest numbers not
/// yet on any up-step, ascent by ascent. The label sets per ascent are the
/// blocks of the output tableau, whose parameters are
/// `(n-s-2l+2, l-1, s+2)` for a path with `l` long ascents and `s`
/// singletons.
pub fn dyck_to_tableau(p: &DyckPath) -> Result<SkewTableau> {
    let runs = p.runs();
    if runs.last().map(|&(u, _)| u < 2).unwrap_or(true) {
        return Err(Error::ClassViolation(
            "the last ascent is a singleton; the path is outside every class".into(),
        ));
    }
    let n = p.semi_length();

    // Peak labels: 1 + (number of down-steps strictly before the ascent).
    let mut peaks = Vec::with_capacity(runs.len());
    let mut downs_before = 0;
    for &(_, d) in &runs {
        peaks.push(downs_before + 1);
        downs_before += d;
    }
    let peak_set: BTreeSet<usize> = peaks.iter().copied().collect();
    let mut pool = (1..=n).filter(|v| !peak_set.contains(v));

    let mut blocks = Vec::with_capacity(runs.len());
    for (j, &(u, _)) in runs.iter().enumerate() {
        let mut block = BTreeSet::from([peaks[j]]);
        for _ in 0..u - 1 {
            block.insert(pool.next().expect("n labels cover all up-steps"));
        }
        blocks.push(block);
    }

    let st = p.stats();
    let (long, s) = (st.long_ascents, st.singletons);
    let partition = NomincreasingPartition::new(blocks)?;
    unnom(&partition, n - s - 2 * long + 2, long - 1, s + 2)
}

/// Dyck path to triangulation: the ascent lengths are the fan sizes, the
/// inner descent lengths the origin gaps, on an `(n+2)`-gon. The final
/// descent is not consumed as a gap; it must equal `(n+2) - x_k - 1`, which
/// holds for every balanced path and is still checked.
pub fn dyck_to_triangulation(p: &DyckPath) -> Result<PolygonSubdivision> {
    let runs = p.runs();
    if runs.is_empty() {
        return Err(Error::InconsistentDecomposition("empty path".into()));
    }
    let sizes: Vec<usize> = runs.iter().map(|&(u, _)| u).collect();
    let gaps: Vec<usize> = runs[..runs.len() - 1].iter().map(|&(_, d)| d).collect();
    let fd = FanDecomposition::new(sizes, gaps)?;
    let n = p.semi_length() + 2;
    let implied = n - fd.origins().last().unwrap() - 1;
    if runs.last().unwrap().1 != implied {
        return Err(Error::InconsistentDecomposition(format!(
            "final descent {} does not close the polygon (need {implied})",
            runs.last().unwrap().1
        )));
    }
    reconstruct_from_fans(&fd, n)
}

/// Triangulation to Dyck path, inverse to [`dyck_to_triangulation`]: read
/// `U^{u_j} D^{d_j}` off the fan decomposition, closing with
/// `d_k = n - x_k - 1`.
pub fn triangulation_to_dyck(t: &PolygonSubdivision) -> Result<DyckPath> {
    let fd = fan_decompose(t)?;
    if !fd.last_fan_big() {
        return Err(Error::ClassViolation(
            "the last fan is singular; the triangulation is outside every class".into(),
        ));
    }
    let n = t.n();
    let origins = fd.origins();
    let mut steps = Vec::with_capacity(2 * (n - 2));
    for (j, &u) in fd.sizes().iter().enumerate() {
        steps.extend(std::iter::repeat_n(Step::Up, u));
        let d = if j < fd.gaps().len() {
            fd.gaps()[j]
        } else {
            n - origins[j] - 1
        };
        steps.extend(std::iter::repeat_n(Step::Down, d));
    }
    Ok(DyckPath::new(steps).expect("fan decomposition always yields a Dyck path"))
}

/// Tableau to triangulation: block sizes as fan sizes, gaps between block
/// minima as origin gaps, on an `(a+b+2i)`-gon. Coincides with
/// [`dyck_to_triangulation`] after [`tableau_to_dyck`].
pub fn tableau_to_triangulation(t: &SkewTableau) -> PolygonSubdivision {
    let p = nom(t);
    let minima = p.minima();
    let gaps: Vec<usize> = minima.windows(2).map(|w| w[1] - w[0]).collect();
    let fd = FanDecomposition::new(p.sizes(), gaps)
        .expect("block partition always yields a decomposition");
    reconstruct_from_fans(&fd, t.cell_count() + 2)
        .expect("block partition always fills the polygon")
}

/// Triangulation to tableau, inverse to [`tableau_to_triangulation`].
///
/// One triangle per fan is labeled with the fan's origin; the remaining
/// triangles take the smallest unused vertex labels, fan by fan. The label
/// sets per fan are the blocks of the output tableau.
pub fn triangulation_to_tableau(t: &PolygonSubdivision) -> Result<SkewTableau> {
    let fd = fan_decompose(t)?;
    if !fd.last_fan_big() {
        return Err(Error::ClassViolation(
            "the last fan is singular; the triangulation is outside every class".into(),
        ));
    }
    let origins = fd.origins();
    let origin_set: BTreeSet<usize> = origins.iter().copied().collect();
    let mut pool = (1..=t.n()).filter(|v| !origin_set.contains(v));

    let mut blocks = Vec::with_capacity(origins.len());
    for (j, &u) in fd.sizes().iter().enumerate() {
        let mut block = BTreeSet::from([origins[j]]);
        for _ in 0..u - 1 {
            block.insert(pool.next().expect("labels 1..=n cover all triangles"));
        }
        blocks.push(block);
    }

    let big = fd.sizes().iter().filter(|&&u| u >= 2).count();
    let singular = fd.sizes().iter().filter(|&&u| u == 1).count();
    let partition = NomincreasingPartition::new(blocks)?;
    unnom(
        &partition,
        t.n() - singular - 2 * big,
        big - 1,
        singular + 2,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;

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

    fn square(rows: [[usize; 2]; 2]) -> SkewTableau {
        SkewTableau::from_rows(
            2,
            1,
            2,
            vec![
                vec![Some(rows[0][0]), Some(rows[0][1])],
                vec![Some(rows[1][0]), Some(rows[1][1])],
            ],
        )
        .unwrap()
    }

    fn twelve_gon() -> PolygonSubdivision {
        PolygonSubdivision::new(
            12,
            [
                (2, 4),
                (2, 7),
                (2, 12),
                (4, 7),
                (5, 7),
                (7, 9),
                (7, 10),
                (7, 11),
                (7, 12),
            ],
        )
        .unwrap()
    }

    #[test]
    fn tableau_to_dyck_on_the_worked_example() {
        // U D U^5 D^2 U D U D^2 U^2 D^3 U D^2 U^4 D^4
        assert_eq!(
            tableau_to_dyck(&seven_two_six()).to_string(),
            "UDUUUUUDDUDUDDUUDDDUDDUUUUDDDD"
        );
    }

    #[test]
    fn tableau_to_dyck_on_the_squares() {
        assert_eq!(
            tableau_to_dyck(&square([[1, 2], [3, 4]])).to_string(),
            "UUDUUDDD"
        );
        assert_eq!(
            tableau_to_dyck(&square([[1, 3], [2, 4]])).to_string(),
            "UUDDUUDD"
        );
    }

    #[test]
    fn dyck_to_tableau_on_the_fifteen_step_example() {
        // U D U^3 D^2 U D U D^2 U^4 D^3 U D^2 U^4 D^4 in class (15, 3, 4).
        let p: DyckPath = "UDUUUDDUDUDDUUUUDDDUDDUUUUDDDD".parse().unwrap();
        assert!(p.in_class(15, 3, 4));
        let t = dyck_to_tableau(&p).unwrap();
        assert_eq!((t.a(), t.i(), t.b()), (7, 2, 6));
        let col1: Vec<usize> = (5..=11).map(|r| t.entry(r, 1).unwrap()).collect();
        assert_eq!(col1, vec![2, 3, 6, 9, 11, 14, 15]);
        assert_eq!(t.upper_stem(), vec![1, 4, 5, 10]);
        assert_eq!(tableau_to_dyck(&t), p);
    }

    #[test]
    fn dyck_to_tableau_on_the_squares() {
        let t = dyck_to_tableau(&"UUDUUDDD".parse().unwrap()).unwrap();
        assert_eq!(t, square([[1, 2], [3, 4]]));
        let t = dyck_to_tableau(&"UUDDUUDD".parse().unwrap()).unwrap();
        assert_eq!(t, square([[1, 3], [2, 4]]));
    }

    #[test]
    fn dyck_to_tableau_rejects_trailing_singletons() {
        let p: DyckPath = "UUDDUD".parse().unwrap();
        assert!(matches!(dyck_to_tableau(&p), Err(Error::ClassViolation(_))));
    }

    #[test]
    fn dyck_to_triangulation_on_the_ten_step_example() {
        // U D U^3 D^2 U D U D^2 U^4 D^4
        let p: DyckPath = "UDUUUDDUDUDDUUUUDDDD".parse().unwrap();
        assert_eq!(dyck_to_triangulation(&p).unwrap(), twelve_gon());
    }

    #[test]
    fn dyck_to_triangulation_small_cases() {
        let quad = dyck_to_triangulation(&"UUDD".parse().unwrap()).unwrap();
        assert_eq!(quad, PolygonSubdivision::new(4, [(1, 3)]).unwrap());

        let pent = dyck_to_triangulation(&"UDUUDD".parse().unwrap()).unwrap();
        assert_eq!(pent, PolygonSubdivision::new(5, [(2, 4), (2, 5)]).unwrap());
    }

    #[test]
    fn triangulation_to_dyck_on_the_twelve_gon() {
        assert_eq!(
            triangulation_to_dyck(&twelve_gon()).unwrap().to_string(),
            "UDUUUDDUDUDDUUUUDDDD"
        );
    }

    #[test]
    fn triangulation_to_dyck_small_cases() {
        let quad = PolygonSubdivision::new(4, [(1, 3)]).unwrap();
        assert_eq!(triangulation_to_dyck(&quad).unwrap().to_string(), "UUDD");

        let triangle = PolygonSubdivision::new(3, []).unwrap();
        assert!(matches!(
            triangulation_to_dyck(&triangle),
            Err(Error::ClassViolation(_))
        ));
    }

    #[test]
    fn tableau_to_triangulation_on_the_ten_cell_example() {
        let p = NomincreasingPartition::new(
            [&[1][..], &[2, 3], &[4], &[5, 6, 8], &[7, 9, 10]]
                .iter()
                .map(|s| s.iter().copied().collect())
                .collect(),
        )
        .unwrap();
        let t = unnom(&p, 4, 2, 4).unwrap();
        let expected = PolygonSubdivision::new(
            12,
            [
                (2, 4),
                (2, 12),
                (4, 12),
                (5, 7),
                (5, 11),
                (5, 12),
                (7, 9),
                (7, 10),
                (7, 11),
            ],
        )
        .unwrap();
        assert_eq!(tableau_to_triangulation(&t), expected);
    }

    #[test]
    fn tableau_to_triangulation_on_a_square() {
        let hexagon = tableau_to_triangulation(&square([[1, 2], [3, 4]]));
        assert_eq!(
            hexagon,
            PolygonSubdivision::new(6, [(1, 5), (2, 4), (2, 5)]).unwrap()
        );
    }

    #[test]
    fn triangulation_to_tableau_on_the_worked_example() {
        let t = PolygonSubdivision::new(
            12,
            [
                (2, 4),
                (2, 12),
                (4, 12),
                (5, 7),
                (5, 11),
                (5, 12),
                (7, 9),
                (7, 10),
                (7, 11),
            ],
        )
        .unwrap();
        let tab = triangulation_to_tableau(&t).unwrap();
        assert_eq!((tab.a(), tab.i(), tab.b()), (4, 2, 4));
        assert_eq!(tab.upper_stem(), vec![1, 4]);
        assert_eq!(tab.lower_stem(), vec![8, 10]);
        assert_eq!(tableau_to_triangulation(&tab), t);
    }

    #[test]
    fn triangulation_to_tableau_on_the_quadrilateral() {
        let quad = PolygonSubdivision::new(4, [(1, 3)]).unwrap();
        let tab = triangulation_to_tableau(&quad).unwrap();
        assert_eq!((tab.a(), tab.i(), tab.b()), (2, 0, 2));
        assert_eq!(tab.entry(1, 1), Some(1));
        assert_eq!(tab.entry(2, 1), Some(2));
    }

    #[test]
    fn the_triangle_of_maps_commutes_on_the_worked_example() {
        let t = seven_two_six();
        assert_eq!(
            tableau_to_triangulation(&t),
            dyck_to_triangulation(&tableau_to_dyck(&t)).unwrap()
        );
    }
}
