//! The bijection between triangulations with no singular fan and polygon
//! dissections.
//!
//! Forward: drop each fan's internal spokes, then contract the boundary edge
//! just after every fan origin; chains of consecutive origins merge into one
//! dissection vertex. Backward: walk the chord-incident vertices counter
//! clockwise. Around a visited vertex the incident chords separate `k + 1`
//! regions, fanned from the successor side to the predecessor side; the walk
//! inserts one new vertex and re-homes a rotational prefix of the chords
//! onto it, sized so that the region gaining the new boundary edge is the
//! last one (in that fan order) still missing its edge. A vertex whose
//! surrounding regions are all served is passed over. Every region gains
//! exactly one boundary edge over the whole walk; fanning each final region
//! from its smallest vertex then yields the triangulation.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::fans::fans;
use crate::polygon::{Chord, PolygonSubdivision};

/// What the forward map did to the vertex labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContractionDetail {
    /// The contracted boundary edges `(x, x+1)`, one per fan origin, in the
    /// original labels.
    pub contracted_edges: Vec<(usize, usize)>,
    /// Original vertices merged into each dissection vertex, indexed by new
    /// label minus one.
    pub merged_classes: Vec<Vec<usize>>,
}

/// Triangulation (no singular fans) to dissection.
pub fn triangulation_to_dissection(t: &PolygonSubdivision) -> Result<PolygonSubdivision> {
    triangulation_to_dissection_detailed(t).map(|(d, _)| d)
}

pub fn triangulation_to_dissection_detailed(
    t: &PolygonSubdivision,
) -> Result<(PolygonSubdivision, ContractionDetail)> {
    let fan_list = fans(t)?;
    if let Some(f) = fan_list.iter().find(|f| f.size() < 2) {
        return Err(Error::ClassViolation(format!(
            "singular fan at vertex {}; contraction would destroy its chord",
            f.origin
        )));
    }
    let n = t.n();

    // Internal spokes: origin to every non-extreme corner.
    let mut spokes = Vec::new();
    for f in &fan_list {
        for &w in &f.corners[1..f.corners.len() - 1] {
            spokes.push(Chord::new(f.origin, w));
        }
    }
    let kept: Vec<Chord> = t
        .chords()
        .iter()
        .copied()
        .filter(|c| !spokes.contains(c))
        .collect();

    // Contract (x, x+1) at every origin; consecutive origins chain.
    let mut is_origin = vec![false; n + 1];
    for f in &fan_list {
        is_origin[f.origin] = true;
    }
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for v in 1..=n {
        if v > 1 && is_origin[v - 1] {
            classes.last_mut().unwrap().push(v);
        } else {
            classes.push(vec![v]);
        }
    }
    let mut label = vec![0usize; n + 1];
    for (k, class) in classes.iter().enumerate() {
        for &v in class {
            label[v] = k + 1;
        }
    }

    let dissection = PolygonSubdivision::new(
        classes.len(),
        kept.iter().map(|c| (label[c.lo()], label[c.hi()])),
    )?;
    let detail = ContractionDetail {
        contracted_edges: fan_list.iter().map(|f| (f.origin, f.origin + 1)).collect(),
        merged_classes: classes,
    };
    Ok((dissection, detail))
}

/// Regions of a node cycle with non-crossing chords (endpoints are node
/// ids). Each region comes back as a counter-clockwise node cycle.
fn regions(cycle: &[usize], chords: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let ids: Vec<usize> = (0..chords.len()).collect();
    let mut out = Vec::new();
    split(cycle.to_vec(), ids, chords, &mut out);
    out
}

fn split(part: Vec<usize>, ids: Vec<usize>, chords: &[(usize, usize)], out: &mut Vec<Vec<usize>>) {
    let Some((&first, rest)) = ids.split_first() else {
        out.push(part);
        return;
    };
    let pos: HashMap<usize, usize> = part.iter().enumerate().map(|(k, &v)| (v, k)).collect();
    let (u, v) = chords[first];
    let (pu, pv) = {
        let (a, b) = (pos[&u], pos[&v]);
        (a.min(b), a.max(b))
    };
    let inner: Vec<usize> = part[pu..=pv].to_vec();
    let outer: Vec<usize> = part[pv..].iter().chain(&part[..=pu]).copied().collect();
    let (mut inner_ids, mut outer_ids) = (Vec::new(), Vec::new());
    for &c in rest {
        let (x, y) = chords[c];
        if (pu..=pv).contains(&pos[&x]) && (pu..=pv).contains(&pos[&y]) {
            inner_ids.push(c);
        } else {
            outer_ids.push(c);
        }
    }
    split(inner, inner_ids, chords, out);
    split(outer, outer_ids, chords, out);
}

/// Which side of the chord a region lies on, read off the traversal
/// direction: in a counter-clockwise region cycle the chord is walked
/// `e2 -> e1` exactly when the region sits on the arc side of `e1 -> e2`.
/// This is stable when an endpoint is re-homed onto a freshly inserted
/// neighbor, unlike any test based on vertex positions.
fn chord_side(region: &[usize], e1: usize, e2: usize) -> bool {
    let k = region
        .iter()
        .position(|&v| v == e2)
        .expect("endpoint on region");
    region[(k + 1) % region.len()] == e1
}

struct Walker {
    cycle: Vec<usize>,
    chords: Vec<(usize, usize)>,
    next_node: usize,
    /// (chord, side) token to original-region index; tokens never change as
    /// the walk deforms the polygon.
    token_region: HashMap<(usize, bool), usize>,
    gained: Vec<bool>,
}

impl Walker {
    fn position(&self, node: usize) -> usize {
        self.cycle
            .iter()
            .position(|&v| v == node)
            .expect("node on cycle")
    }

    fn successor(&self, node: usize) -> usize {
        let p = self.position(node);
        self.cycle[(p + 1) % self.cycle.len()]
    }

    fn predecessor(&self, node: usize) -> usize {
        let p = self.position(node);
        self.cycle[(p + self.cycle.len() - 1) % self.cycle.len()]
    }

    fn chords_at(&self, node: usize) -> Vec<usize> {
        (0..self.chords.len())
            .filter(|&k| self.chords[k].0 == node || self.chords[k].1 == node)
            .collect()
    }

    /// Chords at `node` ordered by the counter-clockwise rotation of their
    /// far endpoints, from the successor side around to the predecessor side.
    fn rotational_order(&self, node: usize) -> Vec<usize> {
        let m = self.cycle.len();
        let here = self.position(node);
        let mut order = self.chords_at(node);
        order.sort_by_key(|&k| {
            let (a, b) = self.chords[k];
            let far = if a == node { b } else { a };
            (self.position(far) + m - here) % m
        });
        order
    }

    fn current_regions(&self) -> Vec<Vec<usize>> {
        regions(&self.cycle, &self.chords)
    }

    /// Original-region id of a region of the current polygon, via any chord
    /// on its boundary. With no chords at all there is a single region 0.
    fn region_id(&self, region: &[usize]) -> usize {
        for (k, &(e1, e2)) in self.chords.iter().enumerate() {
            if region.contains(&e1) && region.contains(&e2) {
                return self.token_region[&(k, chord_side(region, e1, e2))];
            }
        }
        0
    }

    /// The region whose boundary walks `from` directly to `to` (a boundary
    /// edge traversed counter-clockwise).
    fn region_at_edge(&self, from: usize, to: usize) -> usize {
        for region in self.current_regions() {
            let len = region.len();
            for k in 0..len {
                if region[k] == from && region[(k + 1) % len] == to {
                    return self.region_id(&region);
                }
            }
        }
        unreachable!("every boundary edge lies on a region")
    }

    /// The region between two rotationally adjacent chords at `node`.
    fn region_between(&self, node: usize, c1: usize, c2: usize) -> usize {
        for region in self.current_regions() {
            if !region.contains(&node) {
                continue;
            }
            let on_boundary = |k: usize| {
                let (e1, e2) = self.chords[k];
                region.contains(&e1) && region.contains(&e2)
            };
            if on_boundary(c1) && on_boundary(c2) {
                return self.region_id(&region);
            }
        }
        unreachable!("rotationally adjacent chords bound a region")
    }

    fn insert_after(&mut self, node: usize) -> usize {
        let fresh = self.next_node;
        self.next_node += 1;
        let p = self.position(node);
        self.cycle.insert(p + 1, fresh);
        fresh
    }

    /// One visit of the walk. The chords at `node` fan out `k + 1` regions
    /// counter-clockwise, from the one on the successor edge to the one on
    /// the predecessor edge; moving the first `p` chords onto a fresh insert
    /// hands the new boundary edge to region `p` of that fan. The visit
    /// serves the last region still missing its edge, or does nothing when
    /// all of them are served.
    fn process(&mut self, node: usize) {
        let order = self.rotational_order(node);
        let k = order.len();
        let mut around = Vec::with_capacity(k + 1);
        around.push(self.region_at_edge(node, self.successor(node)));
        for i in 1..k {
            around.push(self.region_between(node, order[i - 1], order[i]));
        }
        if k >= 1 {
            around.push(self.region_at_edge(self.predecessor(node), node));
        }
        let Some(p) = (0..=k).rev().find(|&p| !self.gained[around[p]]) else {
            return;
        };
        let fresh = self.insert_after(node);
        for &c in &order[..p] {
            let (a, b) = self.chords[c];
            self.chords[c] = if a == node { (fresh, b) } else { (a, fresh) };
        }
        self.gained[around[p]] = true;
    }

    /// First chord-incident node strictly after `node` counter-clockwise.
    fn next_chord_incident(&self, node: usize) -> Option<usize> {
        let m = self.cycle.len();
        let p = self.position(node);
        (1..m)
            .map(|step| self.cycle[(p + step) % m])
            .find(|&v| !self.chords_at(v).is_empty())
    }
}

/// Dissection to triangulation, inverse to [`triangulation_to_dissection`].
pub fn dissection_to_triangulation(d: &PolygonSubdivision) -> Result<PolygonSubdivision> {
    let m = d.n();
    let cycle: Vec<usize> = (0..m).collect();
    let chords: Vec<(usize, usize)> = d
        .chords()
        .iter()
        .map(|c| (c.lo() - 1, c.hi() - 1))
        .collect();

    let initial = regions(&cycle, &chords);
    let mut token_region = HashMap::new();
    for (rid, region) in initial.iter().enumerate() {
        for (k, &(e1, e2)) in chords.iter().enumerate() {
            if region.contains(&e1) && region.contains(&e2) {
                token_region.insert((k, chord_side(region, e1, e2)), rid);
            }
        }
    }

    let mut walker = Walker {
        cycle,
        chords,
        next_node: m,
        token_region,
        gained: vec![false; initial.len()],
    };

    walker.process(0);
    let mut visited = vec![0usize];
    let mut cur = 0;
    while let Some(x) = walker.next_chord_incident(cur) {
        if visited.contains(&x) {
            break;
        }
        visited.push(x);
        walker.process(x);
        cur = x;
    }
    if let Some(r) = walker.gained.iter().position(|&g| !g) {
        return Err(Error::InconsistentDecomposition(format!(
            "region {r} of the dissection never received its boundary edge"
        )));
    }

    // Relabel counter-clockwise from original vertex 1, then fan every
    // region from its smallest label.
    let start = walker.position(0);
    let total = walker.cycle.len();
    let mut label = vec![0usize; walker.next_node];
    for k in 0..total {
        label[walker.cycle[(start + k) % total]] = k + 1;
    }

    let mut final_chords: Vec<(usize, usize)> = walker
        .chords
        .iter()
        .map(|&(a, b)| (label[a], label[b]))
        .collect();
    for region in walker.current_regions() {
        let mut labels: Vec<usize> = region.iter().map(|&v| label[v]).collect();
        let min_at = labels.iter().enumerate().min_by_key(|(_, &l)| l).unwrap().0;
        labels.rotate_left(min_at);
        for &w in &labels[2..labels.len() - 1] {
            final_chords.push((labels[0], w));
        }
    }
    PolygonSubdivision::new(total, final_chords)
}
