use crate::error::{Error, Result};
use crate::polygon::PolygonSubdivision;

/// A fan of a triangulation: the maximal set of triangles at `origin` within
/// the sub-polygon the recursion reached it in. `corners` lists the other
/// vertices counter-clockwise; the triangles are
/// `(origin, corners[k], corners[k+1])`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fan {
    pub origin: usize,
    pub corners: Vec<usize>,
}

impl Fan {
    /// Number of triangles.
    pub fn size(&self) -> usize {
        self.corners.len() - 1
    }
}

/// Fan sizes plus the label gaps between consecutive origins. The origins
/// are recovered as `x_1 = 1`, `x_{j+1} = x_j + d_j`; a triangulation is
/// uniquely determined by this data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FanDecomposition {
    sizes: Vec<usize>,
    gaps: Vec<usize>,
}

impl FanDecomposition {
    pub fn new(sizes: Vec<usize>, gaps: Vec<usize>) -> Result<Self> {
        if sizes.is_empty() {
            return Err(Error::InconsistentDecomposition("no fans".into()));
        }
        if gaps.len() + 1 != sizes.len() {
            return Err(Error::InconsistentDecomposition(format!(
                "{} fans need {} gaps, got {}",
                sizes.len(),
                sizes.len() - 1,
                gaps.len()
            )));
        }
        if sizes.contains(&0) || gaps.contains(&0) {
            return Err(Error::InconsistentDecomposition(
                "fan sizes and gaps must be positive".into(),
            ));
        }
        Ok(FanDecomposition { sizes, gaps })
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn gaps(&self) -> &[usize] {
        &self.gaps
    }

    pub fn fan_count(&self) -> usize {
        self.sizes.len()
    }

    pub fn triangle_count(&self) -> usize {
        self.sizes.iter().sum()
    }

    /// Origins `x_1 = 1 < x_2 < ...` derived from the gaps.
    pub fn origins(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.sizes.len());
        let mut x = 1;
        out.push(x);
        for &d in &self.gaps {
            x += d;
            out.push(x);
        }
        out
    }

    pub fn last_fan_big(&self) -> bool {
        *self.sizes.last().unwrap() >= 2
    }
}

/// The fan list of a triangulation in recursion preorder: peel the fan at
/// the smallest vertex, then recurse on the sub-polygons between consecutive
/// fan corners in counter-clockwise order.
pub fn fans(t: &PolygonSubdivision) -> Result<Vec<Fan>> {
    if !t.is_triangulation() {
        return Err(Error::NotTriangulation {
            n: t.n(),
            chords: t.chord_count(),
        });
    }
    let n = t.n();
    let mut by_vertex: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    for c in t.chords() {
        by_vertex[c.lo()].push(c.hi());
        by_vertex[c.hi()].push(c.lo());
    }
    for nbrs in &mut by_vertex {
        nbrs.sort_unstable();
    }
    let mut out = Vec::new();
    peel(1, n, &by_vertex, &mut out);
    debug_assert_eq!(out.iter().map(Fan::size).sum::<usize>(), n - 2);
    Ok(out)
}

/// Sub-polygon on the contiguous vertex arc `lo..=hi` (closing edge
/// `(lo, hi)`). Its smallest vertex is `lo`; the fan there is read off the
/// chord neighbors of `lo` inside the arc.
fn peel(lo: usize, hi: usize, by_vertex: &[Vec<usize>], out: &mut Vec<Fan>) {
    if hi - lo + 1 < 3 {
        return;
    }
    let mut corners = Vec::new();
    corners.push(lo + 1);
    corners.extend(
        by_vertex[lo]
            .iter()
            .copied()
            .filter(|&w| w > lo + 1 && w < hi),
    );
    corners.push(hi);
    out.push(Fan {
        origin: lo,
        corners: corners.clone(),
    });
    for pair in corners.windows(2) {
        peel(pair[0], pair[1], by_vertex, out);
    }
}

/// Sizes and origin gaps of the fan list.
pub fn fan_decompose(t: &PolygonSubdivision) -> Result<FanDecomposition> {
    let fans = fans(t)?;
    let sizes: Vec<usize> = fans.iter().map(Fan::size).collect();
    let gaps: Vec<usize> = fans
        .windows(2)
        .map(|pair| pair[1].origin - pair[0].origin)
        .collect();
    FanDecomposition::new(sizes, gaps)
}

/// The unique triangulation of the `n`-gon with the given fan decomposition.
///
/// Recursive arc-filling: a call at vertex `p` consumes the next fan (whose
/// origin must be `p`), then walks one corner per triangle; when the next
/// unconsumed fan's origin equals the current corner, a child sub-polygon
/// starts there and its final corner is the recursive result. Every corner
/// visited yields an edge back to `p`; the non-boundary ones are the chords.
pub fn reconstruct_from_fans(fd: &FanDecomposition, n: usize) -> Result<PolygonSubdivision> {
    if n < 3 {
        return Err(Error::ShapeMismatch(format!(
            "polygon needs n >= 3, got {n}"
        )));
    }
    if fd.triangle_count() != n - 2 {
        return Err(Error::InconsistentDecomposition(format!(
            "{} triangles cannot triangulate a {n}-gon (need {})",
            fd.triangle_count(),
            n - 2
        )));
    }
    let origins = fd.origins();
    if *origins.last().unwrap() > n - 1 {
        return Err(Error::InconsistentDecomposition(format!(
            "origin {} exceeds n - 1 = {}",
            origins.last().unwrap(),
            n - 1
        )));
    }
    let stream: Vec<(usize, usize)> = origins
        .into_iter()
        .zip(fd.sizes().iter().copied())
        .collect();
    let mut pos = 0;
    let mut edges = Vec::new();
    let end = fill(1, &stream, &mut pos, &mut edges, n)?;
    if end != n {
        return Err(Error::InconsistentDecomposition(format!(
            "filling ends at vertex {end}, not {n}"
        )));
    }
    if pos != stream.len() {
        return Err(Error::InconsistentDecomposition(format!(
            "{} fans left unplaced",
            stream.len() - pos
        )));
    }
    let chords = edges.into_iter().filter(|&(p, w)| {
        let gap = w - p;
        gap >= 2 && gap <= n - 2
    });
    PolygonSubdivision::new(n, chords)
}

/// Fills the sub-polygon rooted at `p`; returns its final corner.
fn fill(
    p: usize,
    stream: &[(usize, usize)],
    pos: &mut usize,
    edges: &mut Vec<(usize, usize)>,
    n: usize,
) -> Result<usize> {
    let (origin, size) = stream[*pos];
    if origin != p {
        return Err(Error::InconsistentDecomposition(format!(
            "expected a fan at vertex {p}, next origin is {origin}"
        )));
    }
    *pos += 1;
    let mut cur = p + 1;
    edges.push((p, cur));
    for _ in 0..size {
        if *pos < stream.len() && stream[*pos].0 == cur {
            cur = fill(cur, stream, pos, edges, n)?;
        } else {
            cur += 1;
        }
        if cur > n {
            return Err(Error::InconsistentDecomposition(format!(
                "filling walked past vertex {n}"
            )));
        }
        edges.push((p, cur));
    }
    Ok(cur)
}

/// Class data of a triangulation: the number of non-singular and singular
/// fans. Membership in a class additionally requires the last fan to be
/// non-singular.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TriangulationClass {
    pub n: usize,
    pub non_singular: usize,
    pub singular: usize,
    pub last_fan_big: bool,
}

impl TriangulationClass {
    pub fn in_class(&self, n: usize, t: usize, s: usize) -> bool {
        self.n == n && self.non_singular == t && self.singular == s && self.last_fan_big
    }
}

pub fn classify_triangulation(t: &PolygonSubdivision) -> Result<TriangulationClass> {
    let fd = fan_decompose(t)?;
    Ok(TriangulationClass {
        n: t.n(),
        non_singular: fd.sizes().iter().filter(|&&u| u >= 2).count(),
        singular: fd.sizes().iter().filter(|&&u| u == 1).count(),
        last_fan_big: fd.last_fan_big(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

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

    fn sixteen_gon() -> PolygonSubdivision {
        PolygonSubdivision::new(
            16,
            [
                (1, 3),
                (1, 4),
                (1, 5),
                (5, 16),
                (5, 12),
                (6, 10),
                (6, 11),
                (6, 12),
                (7, 9),
                (7, 10),
                (12, 14),
                (12, 15),
                (12, 16),
            ],
        )
        .unwrap()
    }

    #[test]
    fn decomposes_the_twelve_gon() {
        let fd = fan_decompose(&twelve_gon()).unwrap();
        assert_eq!(fd.sizes(), &[1, 3, 1, 1, 4]);
        assert_eq!(fd.origins(), vec![1, 2, 4, 5, 7]);
        assert_eq!(fd.gaps(), &[1, 2, 1, 2]);
    }

    #[test]
    fn decomposes_a_bare_triangle() {
        let t = PolygonSubdivision::new(3, []).unwrap();
        let fd = fan_decompose(&t).unwrap();
        assert_eq!(fd.sizes(), &[1]);
        assert!(fd.gaps().is_empty());
    }

    #[test]
    fn decomposes_the_pentagon() {
        let t = PolygonSubdivision::new(5, [(2, 4), (2, 5)]).unwrap();
        let fd = fan_decompose(&t).unwrap();
        assert_eq!(fd.sizes(), &[1, 2]);
        assert_eq!(fd.origins(), vec![1, 2]);
    }

    #[test]
    fn reconstructs_the_twelve_gon() {
        let fd = FanDecomposition::new(vec![1, 3, 1, 1, 4], vec![1, 2, 1, 2]).unwrap();
        assert_eq!(reconstruct_from_fans(&fd, 12).unwrap(), twelve_gon());
    }

    #[test]
    fn reconstructs_degenerate_cases() {
        let fd = FanDecomposition::new(vec![1], vec![]).unwrap();
        assert_eq!(
            reconstruct_from_fans(&fd, 3).unwrap(),
            PolygonSubdivision::new(3, []).unwrap()
        );

        let fd = FanDecomposition::new(vec![4], vec![]).unwrap();
        assert_eq!(
            reconstruct_from_fans(&fd, 6).unwrap(),
            PolygonSubdivision::new(6, [(1, 3), (1, 4), (1, 5)]).unwrap()
        );
    }

    #[test]
    fn inconsistent_decompositions_are_rejected() {
        let fd = FanDecomposition::new(vec![1, 3], vec![3]).unwrap();
        assert!(matches!(
            reconstruct_from_fans(&fd, 6),
            Err(Error::InconsistentDecomposition(_))
        ));
        let fd = FanDecomposition::new(vec![2], vec![]).unwrap();
        assert!(matches!(
            reconstruct_from_fans(&fd, 6),
            Err(Error::InconsistentDecomposition(_))
        ));
    }

    #[test]
    fn classifies_the_worked_triangulations() {
        let c = classify_triangulation(&twelve_gon()).unwrap();
        assert!(c.in_class(12, 2, 3));

        let c = classify_triangulation(&sixteen_gon()).unwrap();
        assert!(c.in_class(16, 5, 0));

        let hexagon = PolygonSubdivision::new(6, [(1, 3), (1, 4), (1, 5)]).unwrap();
        assert!(classify_triangulation(&hexagon).unwrap().in_class(6, 1, 0));
    }

    #[test]
    fn triangle_is_in_no_class() {
        let t = PolygonSubdivision::new(3, []).unwrap();
        let c = classify_triangulation(&t).unwrap();
        assert!(!c.last_fan_big);
        assert_eq!((c.non_singular, c.singular), (0, 1));
    }

    #[test]
    fn non_triangulations_are_rejected() {
        let d = PolygonSubdivision::new(6, [(1, 3)]).unwrap();
        assert_eq!(
            fan_decompose(&d).unwrap_err(),
            Error::NotTriangulation { n: 6, chords: 1 }
        );
    }

    #[test]
    fn sixteen_gon_fan_corners() {
        let fans = fans(&sixteen_gon()).unwrap();
        let summary: Vec<(usize, usize)> = fans.iter().map(|f| (f.origin, f.size())).collect();
        assert_eq!(summary, vec![(1, 4), (5, 2), (6, 3), (7, 2), (12, 3)]);
        assert_eq!(fans[0].corners, vec![2, 3, 4, 5, 16]);
        assert_eq!(fans[1].corners, vec![6, 12, 16]);
    }
}
