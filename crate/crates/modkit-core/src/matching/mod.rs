//! Exact minimum-weight perfect matching and the reduction from
//! minimum-weight edge cover.

mod blossom;

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{EdgeSet, EdgeVector, Graph};

/// A matching together with its total weight under the query weights.
#[derive(Debug, Clone, PartialEq)]
pub struct Matching {
    pub edges: EdgeSet,
    pub weight: f64,
}

fn check_weights(g: &Graph, w: &EdgeVector) -> Result<()> {
    if w.len() != g.num_edges() {
        return Err(Error::Dimension { expected: g.num_edges(), actual: w.len() });
    }
    if !w.all_at_least(0.0) {
        return Err(Error::Domain("matching weights must be nonnegative".into()));
    }
    Ok(())
}

/// Exact minimum-weight perfect matching via the blossom method.
///
/// Internally runs maximum-weight maximum-cardinality matching on the
/// flipped weights `max(w) + 1 - w`, which makes the returned maximum
/// matching a minimum-weight perfect matching whenever one exists.
pub fn min_weight_perfect_matching(g: &Graph, w: &EdgeVector) -> Result<Matching> {
    check_weights(g, w)?;
    let n = g.num_vertices();
    if n % 2 != 0 {
        return Err(Error::Infeasible("perfect matching needs an even vertex count".into()));
    }
    if n == 0 {
        return Ok(Matching { edges: EdgeSet::from_indices([]), weight: 0.0 });
    }
    let max_w = w.iter().fold(0.0_f64, f64::max);
    let edges: Vec<(usize, usize, f64)> = (0..g.num_edges())
        .map(|k| {
            let (u, v) = g.endpoints(k);
            (u, v, max_w + 1.0 - w[k])
        })
        .collect();
    let mate = blossom::max_weight_matching(n, &edges, true)?;
    let mut edge_of_pair: HashMap<(usize, usize), usize> = HashMap::new();
    for k in 0..g.num_edges() {
        let (u, v) = g.endpoints(k);
        edge_of_pair.insert((u.min(v), u.max(v)), k);
    }
    let mut members = Vec::new();
    for v in 0..n {
        match mate[v] {
            None => return Err(Error::Infeasible("graph has no perfect matching".into())),
            Some(u) if u > v => {
                members.push(edge_of_pair[&(v, u)]);
            }
            Some(_) => {}
        }
    }
    let edges = EdgeSet::from_indices(members);
    let weight = edges.weight(w);
    Ok(Matching { edges, weight })
}

/// Exhaustive minimum-weight perfect matching, used as an independent test
/// oracle. Ties are broken toward the lexicographically smallest edge-index
/// set.
pub fn brute_force_mwpm(g: &Graph, w: &EdgeVector) -> Result<Matching> {
    if w.len() != g.num_edges() {
        return Err(Error::Dimension { expected: g.num_edges(), actual: w.len() });
    }
    let n = g.num_vertices();
    if n > 12 {
        return Err(Error::Domain(format!("brute-force matching limited to 12 vertices, got {n}")));
    }
    if n % 2 != 0 {
        return Err(Error::Infeasible("perfect matching needs an even vertex count".into()));
    }
    let mut best: Option<(f64, Vec<usize>)> = None;
    let mut chosen: Vec<usize> = Vec::new();
    let mut matched = vec![false; n];

    fn recurse(
        g: &Graph,
        w: &EdgeVector,
        matched: &mut [bool],
        chosen: &mut Vec<usize>,
        best: &mut Option<(f64, Vec<usize>)>,
    ) {
        let Some(u) = matched.iter().position(|&m| !m) else {
            let weight: f64 = chosen.iter().map(|&k| w[k]).sum();
            let mut key = chosen.clone();
            key.sort_unstable();
            let better = match best {
                None => true,
                Some((bw, bk)) => weight < *bw || (weight == *bw && key < *bk),
            };
            if better {
                *best = Some((weight, key));
            }
            return;
        };
        matched[u] = true;
        for &k in g.incident_edges(u) {
            let (a, b) = g.endpoints(k);
            let v = if a == u { b } else { a };
            if matched[v] {
                continue;
            }
            matched[v] = true;
            chosen.push(k);
            recurse(g, w, matched, chosen, best);
            chosen.pop();
            matched[v] = false;
        }
        matched[u] = false;
    }

    recurse(g, w, &mut matched, &mut chosen, &mut best);
    match best {
        Some((weight, key)) => Ok(Matching { edges: EdgeSet::from_indices(key), weight }),
        None => Err(Error::Infeasible("graph has no perfect matching".into())),
    }
}

/// Minimum-weight edge cover by reduction to perfect matching.
///
/// Builds an auxiliary graph H from two copies of G: every original edge
/// appears in both copies with its weight, and each vertex v gains a cross
/// edge (v, v') weighing twice its cheapest incident edge. A minimum-weight
/// perfect matching of H projects to a minimum-weight edge cover: matched
/// copy-one edges enter the cover and cross-matched vertices take their
/// cheapest incident edge. The cover weight equals half the matching weight.
pub fn min_weight_edge_cover(g: &Graph, w: &EdgeVector) -> Result<EdgeSet> {
    check_weights(g, w)?;
    let n = g.num_vertices();
    let m = g.num_edges();
    if g.has_isolated_vertex() {
        return Err(Error::Infeasible("graph with an isolated vertex has no edge cover".into()));
    }
    if n == 0 {
        return Ok(EdgeSet::from_indices([]));
    }

    let cheapest = |v: usize| -> usize {
        let mut best = g.incident_edges(v)[0];
        for &k in &g.incident_edges(v)[1..] {
            if w[k] < w[best] {
                best = k;
            }
        }
        best
    };

    let mut h_edges: Vec<(usize, usize, f64)> = Vec::with_capacity(2 * m + n);
    for k in 0..m {
        let (u, v) = g.endpoints(k);
        h_edges.push((u, v, w[k]));
    }
    for k in 0..m {
        let (u, v) = g.endpoints(k);
        h_edges.push((u + n, v + n, w[k]));
    }
    for v in 0..n {
        h_edges.push((v, v + n, 2.0 * w[cheapest(v)]));
    }

    let max_w = h_edges.iter().map(|e| e.2).fold(0.0_f64, f64::max);
    let flipped: Vec<(usize, usize, f64)> = h_edges
        .iter()
        .map(|&(a, b, wt)| (a, b, max_w + 1.0 - wt))
        .collect();
    let mate = blossom::max_weight_matching(2 * n, &flipped, true)?;

    let mut edge_of_pair: HashMap<(usize, usize), usize> = HashMap::new();
    for k in 0..m {
        let (u, v) = g.endpoints(k);
        edge_of_pair.insert((u.min(v), u.max(v)), k);
    }

    let mut members = Vec::new();
    for v in 0..n {
        match mate[v] {
            Some(u) if u < n => {
                // Matched inside the first copy: the original edge covers
                // both endpoints.
                if u > v {
                    members.push(edge_of_pair[&(v, u)]);
                }
            }
            Some(u) if u == v + n => {
                members.push(cheapest(v));
            }
            _ => {
                // Cross edges always provide a perfect matching of H, so an
                // unmatched vertex means the matching solver failed.
                return Err(Error::Solver("edge-cover reduction produced a non-perfect matching".into()));
            }
        }
    }
    Ok(EdgeSet::from_indices(members))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::StandardKind;

    fn k4_weighted() -> (Graph, EdgeVector) {
        // Edges in order: ab, ac, ad, bc, bd, cd.
        let g = Graph::parse("a b 1\na c 5\na d 2\nb c 2\nb d 5\nc d 1").unwrap();
        let w = g.sigma();
        (g, w)
    }

    #[test]
    fn mwpm_unit_k4() {
        let g = Graph::standard(StandardKind::Complete, 4).unwrap();
        let m = min_weight_perfect_matching(&g, &g.unit_weights()).unwrap();
        assert_eq!(m.edges.len(), 2);
        assert_eq!(m.weight, 2.0);
    }

    #[test]
    fn mwpm_odd_cycle_is_infeasible() {
        let g = Graph::standard(StandardKind::Cycle, 5).unwrap();
        assert!(matches!(
            min_weight_perfect_matching(&g, &g.unit_weights()),
            Err(Error::Infeasible(_))
        ));
    }

    #[test]
    fn mwpm_matches_brute_force_on_weighted_k4() {
        let (g, w) = k4_weighted();
        let fast = min_weight_perfect_matching(&g, &w).unwrap();
        let slow = brute_force_mwpm(&g, &w).unwrap();
        assert_eq!(fast.weight, 2.0);
        assert_eq!(slow.weight, 2.0);
        // The optimum {ab, cd} is unique here.
        assert_eq!(fast.edges, slow.edges);
        assert_eq!(fast.edges.as_slice(), &[0, 5]);
    }

    #[test]
    fn brute_force_p4() {
        let g = Graph::standard(StandardKind::Path, 4).unwrap();
        let m = brute_force_mwpm(&g, &g.unit_weights()).unwrap();
        assert_eq!(m.weight, 2.0);
        assert_eq!(m.edges.as_slice(), &[0, 2]);
    }

    #[test]
    fn brute_force_guards_size() {
        let g = Graph::standard(StandardKind::Complete, 14).unwrap();
        assert!(matches!(
            brute_force_mwpm(&g, &g.unit_weights()),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn no_perfect_matching_detected() {
        // A star on 4 vertices has even order but no perfect matching.
        let g = Graph::standard(StandardKind::Star, 4).unwrap();
        assert!(matches!(
            min_weight_perfect_matching(&g, &g.unit_weights()),
            Err(Error::Infeasible(_))
        ));
        assert!(matches!(
            brute_force_mwpm(&g, &g.unit_weights()),
            Err(Error::Infeasible(_))
        ));
    }

    #[test]
    fn cover_of_star_is_all_edges() {
        let g = Graph::standard(StandardKind::Star, 6).unwrap();
        let c = min_weight_edge_cover(&g, &g.unit_weights()).unwrap();
        assert_eq!(c.len(), 5);
        assert_eq!(c.weight(&g.unit_weights()), 5.0);
    }

    #[test]
    fn cover_weights_on_cycles() {
        let c6 = Graph::standard(StandardKind::Cycle, 6).unwrap();
        let cover = min_weight_edge_cover(&c6, &c6.unit_weights()).unwrap();
        assert_eq!(cover.weight(&c6.unit_weights()), 3.0);
        let c5 = Graph::standard(StandardKind::Cycle, 5).unwrap();
        let cover = min_weight_edge_cover(&c5, &c5.unit_weights()).unwrap();
        assert_eq!(cover.weight(&c5.unit_weights()), 3.0);
    }

    #[test]
    fn cover_touches_every_vertex() {
        let (g, w) = k4_weighted();
        let cover = min_weight_edge_cover(&g, &w).unwrap();
        for v in 0..g.num_vertices() {
            let covered = g.incident_edges(v).iter().any(|&k| cover.contains(k));
            assert!(covered, "vertex {v} uncovered");
        }
    }

    #[test]
    fn cover_rejects_isolated_vertex() {
        let g = Graph::from_parts(&["a", "b", "c"], &[("a", "b", 1.0)]).unwrap();
        let w = g.sigma();
        assert!(matches!(min_weight_edge_cover(&g, &w), Err(Error::Infeasible(_))));
    }

    #[test]
    fn cover_scales_linearly_with_weights() {
        let (g, w) = k4_weighted();
        let base = min_weight_edge_cover(&g, &w).unwrap().weight(&w);
        let scaled_w = w.scaled(3.5);
        let scaled = min_weight_edge_cover(&g, &scaled_w).unwrap().weight(&scaled_w);
        assert!((scaled - 3.5 * base).abs() < 1e-12);
    }

    #[test]
    fn mwpm_is_deterministic() {
        let g = Graph::standard(StandardKind::Complete, 6).unwrap();
        let w = g.unit_weights();
        let a = min_weight_perfect_matching(&g, &w).unwrap();
        let b = min_weight_perfect_matching(&g, &w).unwrap();
        assert_eq!(a, b);
    }
}
