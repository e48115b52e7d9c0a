//! Exhaustive, duplicate-free generators for the four families.
//!
//! Orders are deterministic: tableaux come out in lexicographic order of
//! their entries read row-major, paths in lexicographic step order with
//! `U < D`, and subdivisions in lexicographic order of their sorted chord
//! lists. Counting never consults a closed form; Catalan numbers are
//! offered separately as labeled cross-checks.

use std::collections::BTreeMap;

use crate::dyck::{DyckPath, Step};
use crate::polygon::PolygonSubdivision;
use crate::tableau::{shape_cells, SkewTableau};

/// Every standard filling of the `(a, i, b)` diagram. Values are placed in
/// increasing order into cells whose upper and left diagram neighbors are
/// already filled, so no partial state is a dead end. Out-of-range
/// parameters yield an empty stream.
pub fn skyt(a: usize, i: usize, b: usize) -> Vec<SkewTableau> {
    if a < 2 || b < 2 {
        return Vec::new();
    }
    let cells = shape_cells(a, i, b);
    let index: BTreeMap<(usize, usize), usize> =
        cells.iter().enumerate().map(|(k, &c)| (c, k)).collect();
    // Cells whose filling must precede each cell.
    let preds: Vec<Vec<usize>> = cells
        .iter()
        .map(|&(r, c)| {
            [(r, c.wrapping_sub(1)), (r.wrapping_sub(1), c)]
                .iter()
                .filter_map(|p| index.get(p).copied())
                .collect()
        })
        .collect();

    let mut filling = vec![0usize; cells.len()];
    let mut out = Vec::new();
    place(1, &mut filling, &preds, &mut out, a, i, b);
    out.sort_by_key(|t| t.row_major_values());
    out
}

fn place(
    value: usize,
    filling: &mut Vec<usize>,
    preds: &[Vec<usize>],
    out: &mut Vec<SkewTableau>,
    a: usize,
    i: usize,
    b: usize,
) {
    if value > filling.len() {
        out.push(SkewTableau::from_row_major(a, i, b, filling).expect("placement respects order"));
        return;
    }
    for k in 0..filling.len() {
        if filling[k] == 0 && preds[k].iter().all(|&p| filling[p] != 0) {
            filling[k] = value;
            place(value + 1, filling, preds, out, a, i, b);
            filling[k] = 0;
        }
    }
}

/// Every Dyck path of semi-length `n`, lexicographic with `U < D`.
pub fn dyck_paths(n: usize) -> Vec<DyckPath> {
    let mut out = Vec::new();
    let mut steps = Vec::with_capacity(2 * n);
    grow(&mut steps, 0, 0, n, &mut out);
    out
}

fn grow(steps: &mut Vec<Step>, ups: usize, downs: usize, n: usize, out: &mut Vec<DyckPath>) {
    if ups == n && downs == n {
        out.push(DyckPath::new(steps.clone()).expect("construction keeps prefixes valid"));
        return;
    }
    if ups < n {
        steps.push(Step::Up);
        grow(steps, ups + 1, downs, n, out);
        steps.pop();
    }
    if downs < ups {
        steps.push(Step::Down);
        grow(steps, ups, downs + 1, n, out);
        steps.pop();
    }
}

/// Members of the path class `(n, long, singletons)`.
pub fn dyck_class(n: usize, long: usize, singletons: usize) -> Vec<DyckPath> {
    dyck_paths(n)
        .into_iter()
        .filter(|p| p.in_class(n, long, singletons))
        .collect()
}

/// Every triangulation of the labeled `n`-gon, ordered by chord list.
pub fn triangulations(n: usize) -> Vec<PolygonSubdivision> {
    let mut chord_sets = span_triangulations(1, n);
    for set in &mut chord_sets {
        set.sort_unstable();
    }
    chord_sets.sort();
    chord_sets
        .into_iter()
        .map(|set| PolygonSubdivision::new(n, set).expect("recursion emits non-crossing chords"))
        .collect()
}

/// Chord sets triangulating the polygon on the contiguous vertices
/// `lo..=hi`: the edge `(lo, hi)` closes a triangle with every possible
/// apex, splitting the rest.
fn span_triangulations(lo: usize, hi: usize) -> Vec<Vec<(usize, usize)>> {
    if hi - lo < 2 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for apex in lo + 1..hi {
        for left in span_triangulations(lo, apex) {
            for right in span_triangulations(apex, hi) {
                let mut chords = Vec::new();
                if apex - lo >= 2 {
                    chords.push((lo, apex));
                }
                if hi - apex >= 2 {
                    chords.push((apex, hi));
                }
                chords.extend(&left);
                chords.extend(&right);
                out.push(chords);
            }
        }
    }
    out
}

/// Triangulations in the class `(n, t, s)`: `t` non-singular fans, `s`
/// singular, last fan non-singular.
pub fn triangulation_class(n: usize, t: usize, s: usize) -> Vec<PolygonSubdivision> {
    triangulations(n)
        .into_iter()
        .filter(|tri| {
            crate::fans::classify_triangulation(tri)
                .map(|c| c.in_class(n, t, s))
                .unwrap_or(false)
        })
        .collect()
}

/// Every dissection of the `n`-gon with exactly `chords` chords, ordered by
/// chord list.
pub fn dissections(n: usize, chords: usize) -> Vec<PolygonSubdivision> {
    let candidates: Vec<(usize, usize)> = (1..=n)
        .flat_map(|p| (p + 2..=n).map(move |q| (p, q)))
        .filter(|&(p, q)| q - p <= n - 2)
        .collect();
    let mut chosen = Vec::with_capacity(chords);
    let mut out = Vec::new();
    pick(0, &candidates, &mut chosen, chords, n, &mut out);
    out
}

fn pick(
    from: usize,
    candidates: &[(usize, usize)],
    chosen: &mut Vec<(usize, usize)>,
    want: usize,
    n: usize,
    out: &mut Vec<PolygonSubdivision>,
) {
    if chosen.len() == want {
        out.push(
            PolygonSubdivision::new(n, chosen.iter().copied())
                .expect("chosen chords are compatible"),
        );
        return;
    }
    for k in from..candidates.len() {
        let c = crate::polygon::Chord::new(candidates[k].0, candidates[k].1);
        let compatible = chosen
            .iter()
            .all(|&(p, q)| !crate::polygon::Chord::new(p, q).crosses(&c));
        if compatible {
            chosen.push(candidates[k]);
            pick(k + 1, candidates, chosen, want, n, out);
            chosen.pop();
        }
    }
}

/// Catalan numbers by the convolution recurrence, used only as labeled
/// cross-checks next to brute-force counts.
pub fn catalan(k: usize) -> u64 {
    let mut c = vec![1u64];
    for m in 1..=k {
        c.push((0..m).map(|j| c[j] * c[m - 1 - j]).sum());
    }
    c[k]
}
