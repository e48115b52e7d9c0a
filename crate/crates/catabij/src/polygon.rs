use std::fmt;

use crate::error::{Error, Result};

/// An unordered pair of non-adjacent vertices of an `n`-gon, stored with the
/// smaller label first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Chord {
    lo: usize,
    hi: usize,
}

impl Chord {
    pub fn new(p: usize, q: usize) -> Chord {
        Chord {
            lo: p.min(q),
            hi: p.max(q),
        }
    }

    pub fn lo(&self) -> usize {
        self.lo
    }

    pub fn hi(&self) -> usize {
        self.hi
    }

    /// Circular-order crossing test for chords of a convex polygon: the
    /// chords cross in the interior iff each separates the other's
    /// endpoints. Chords sharing an endpoint do not cross.
    pub fn crosses(&self, other: &Chord) -> bool {
        let (a, b) = (self.lo, self.hi);
        let (c, d) = (other.lo, other.hi);
        (a < c && c < b && b < d) || (c < a && a < d && d < b)
    }
}

impl fmt::Display for Chord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.lo, self.hi)
    }
}

/// An `n`-gon, vertices labeled 1..=n counter-clockwise, together with a set
/// of pairwise non-crossing chords. With `n - 3` chords every interior face
/// is a triangle and the subdivision is a triangulation.
///
/// Chords are kept canonically sorted so equal subdivisions compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolygonSubdivision {
    n: usize,
    chords: Vec<Chord>,
}

impl PolygonSubdivision {
    pub fn new(n: usize, chords: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n < 3 {
            return Err(Error::ShapeMismatch(format!(
                "polygon needs n >= 3, got {n}"
            )));
        }
        let mut normalized = Vec::new();
        for (p, q) in chords {
            for v in [p, q] {
                if v < 1 || v > n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            let c = Chord::new(p, q);
            let gap = c.hi - c.lo;
            if gap <= 1 || gap >= n - 1 {
                return Err(Error::AdjacentEndpoints(c.lo, c.hi));
            }
            normalized.push(c);
        }
        normalized.sort();
        for pair in normalized.windows(2) {
            if pair[0] == pair[1] {
                return Err(Error::DuplicateChord(pair[0].lo, pair[0].hi));
            }
        }
        for (k, c) in normalized.iter().enumerate() {
            for d in &normalized[k + 1..] {
                if c.crosses(d) {
                    return Err(Error::CrossingChords(c.lo, c.hi, d.lo, d.hi));
                }
            }
        }
        Ok(PolygonSubdivision {
            n,
            chords: normalized,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn chords(&self) -> &[Chord] {
        &self.chords
    }

    pub fn chord_count(&self) -> usize {
        self.chords.len()
    }

    pub fn is_triangulation(&self) -> bool {
        self.chords.len() == self.n - 3
    }

    pub fn has_chord(&self, p: usize, q: usize) -> bool {
        self.chords.binary_search(&Chord::new(p, q)).is_ok()
    }

    /// Neighbors of `v` along chords, in increasing label order.
    pub fn chord_neighbors(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .chords
            .iter()
            .filter_map(|c| {
                if c.lo == v {
                    Some(c.hi)
                } else if c.hi == v {
                    Some(c.lo)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }
}

impl fmt::Display for PolygonSubdivision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "poly {}", self.n)?;
        for (k, c) in self.chords.iter().enumerate() {
            if k == 0 {
                write!(f, "\n{c}")?;
            } else {
                write!(f, ",{c}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accepts_the_twelve_gon_triangulation() {
        let t = PolygonSubdivision::new(
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
        .unwrap();
        assert!(t.is_triangulation());
        assert_eq!(t.chord_count(), 9);
    }

    #[test]
    fn accepts_the_eleven_gon_dissection() {
        let d = PolygonSubdivision::new(11, [(4, 11), (4, 8), (4, 6), (8, 11)]).unwrap();
        assert!(!d.is_triangulation());
        assert_eq!(d.chord_count(), 4);
    }

    #[test]
    fn detects_crossing_chords() {
        // 2-5 separates {3,4} from {6,1}; 1-3 has an endpoint on each side.
        let err = PolygonSubdivision::new(6, [(1, 3), (2, 5)]).unwrap_err();
        assert_eq!(err, Error::CrossingChords(1, 3, 2, 5));
    }

    #[test]
    fn rejects_adjacent_endpoints_including_wraparound() {
        assert_eq!(
            PolygonSubdivision::new(6, [(1, 2)]).unwrap_err(),
            Error::AdjacentEndpoints(1, 2)
        );
        assert_eq!(
            PolygonSubdivision::new(6, [(1, 6)]).unwrap_err(),
            Error::AdjacentEndpoints(1, 6)
        );
    }

    #[test]
    fn rejects_duplicates_and_out_of_range() {
        assert_eq!(
            PolygonSubdivision::new(6, [(1, 3), (3, 1)]).unwrap_err(),
            Error::DuplicateChord(1, 3)
        );
        assert_eq!(
            PolygonSubdivision::new(6, [(0, 3)]).unwrap_err(),
            Error::VertexOutOfRange { vertex: 0, n: 6 }
        );
    }

    #[test]
    fn chords_are_canonically_sorted() {
        let d = PolygonSubdivision::new(8, [(5, 7), (1, 3), (3, 8)]).unwrap();
        let listed: Vec<(usize, usize)> = d.chords().iter().map(|c| (c.lo(), c.hi())).collect();
        assert_eq!(listed, vec![(1, 3), (3, 8), (5, 7)]);
    }

    #[test]
    fn sharing_an_endpoint_is_not_a_crossing() {
        assert!(PolygonSubdivision::new(6, [(1, 3), (3, 5), (1, 5)]).is_ok());
    }
}
