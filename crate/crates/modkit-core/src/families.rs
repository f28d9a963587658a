//! Families of graph objects: usage rows, shortest-object oracles, and
//! enumerators for minimal edge covers and basic fractional edge covers.
//!
//! A family is presented to the solver only through its `shortest` oracle,
//! which must return an exact minimizer of the rho-length over the family.
//! Explicit row lists exist for small families (stars, enumerated covers).

use std::collections::HashSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{EdgeSet, EdgeVector, Graph};
use crate::matching::min_weight_edge_cover;
use crate::solver::Density;

/// Identifies a family object: a star (by vertex), an edge subset, or a
/// fractional usage vector (sparse, in edge order).
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum RowLabel {
    Star { vertex: String },
    Cover { edges: Vec<usize> },
    Fractional { entries: Vec<(usize, f64)> },
}

/// One row of a family's usage matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct UsageRow {
    pub usage: EdgeVector,
    pub label: RowLabel,
}

impl UsageRow {
    /// Builds a row, rejecting the all-zero usage vector (families must be
    /// nontrivial).
    pub fn new(usage: EdgeVector, label: RowLabel) -> Result<UsageRow> {
        if !usage.iter().any(|x| x > 0.0) {
            return Err(Error::Domain("usage row must have a positive entry".into()));
        }
        if usage.iter().any(|x| x < 0.0 || !x.is_finite()) {
            return Err(Error::Domain("usage row must be nonnegative and finite".into()));
        }
        Ok(UsageRow { usage, label })
    }

    /// Exact bit-level identity of the usage vector, used to detect
    /// repeated active rows.
    pub fn fingerprint(&self) -> Vec<u64> {
        self.usage.iter().map(f64::to_bits).collect()
    }
}

/// A family of objects over a fixed graph, exposed through an exact
/// shortest-object oracle.
pub trait Family {
    fn graph(&self) -> &Graph;

    fn name(&self) -> &'static str;

    /// Returns a row minimizing the rho-length over the family, together
    /// with that length. Must be exact; the solver's exit test relies on it.
    fn shortest(&self, rho: &Density) -> Result<(UsageRow, f64)>;

    /// Explicit rows when the family is small enough to materialize.
    fn explicit_rows(&self) -> Option<Vec<UsageRow>> {
        None
    }
}

/// The family of all stars, one row per vertex.
pub struct StarFamily {
    graph: Graph,
    rows: Vec<UsageRow>,
}

/// Builds the star family. Errors if some vertex is isolated (its star row
/// would be all-zero, violating nontriviality).
pub fn star_family(g: &Graph) -> Result<StarFamily> {
    if g.num_vertices() == 0 {
        return Err(Error::Infeasible("star family of an empty graph".into()));
    }
    if g.has_isolated_vertex() {
        return Err(Error::Infeasible("star family undefined with isolated vertices".into()));
    }
    let m = g.num_edges();
    let rows = (0..g.num_vertices())
        .map(|v| {
            UsageRow::new(
                g.star_of_index(v).indicator(m),
                RowLabel::Star { vertex: g.vertex_id(v).to_string() },
            )
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(StarFamily { graph: g.clone(), rows })
}

impl Family for StarFamily {
    fn graph(&self) -> &Graph {
        &self.graph
    }

    fn name(&self) -> &'static str {
        "stars"
    }

    fn shortest(&self, rho: &Density) -> Result<(UsageRow, f64)> {
        let rho = rho.as_edge_vector();
        if rho.len() != self.graph.num_edges() {
            return Err(Error::Dimension { expected: self.graph.num_edges(), actual: rho.len() });
        }
        let mut best_v = 0usize;
        let mut best_len = f64::INFINITY;
        for v in 0..self.graph.num_vertices() {
            let len: f64 = self.graph.incident_edges(v).iter().map(|&k| rho[k]).sum();
            if len < best_len {
                best_len = len;
                best_v = v;
            }
        }
        Ok((self.rows[best_v].clone(), best_len))
    }

    fn explicit_rows(&self) -> Option<Vec<UsageRow>> {
        Some(self.rows.clone())
    }
}

/// The family of edge covers, with the shortest oracle implemented by the
/// minimum-weight edge cover reduction.
pub struct EdgeCoverFamily {
    graph: Graph,
}

pub fn edge_cover_family(g: &Graph) -> Result<EdgeCoverFamily> {
    if g.num_vertices() == 0 {
        return Err(Error::Infeasible("edge covers of an empty graph".into()));
    }
    if g.has_isolated_vertex() {
        return Err(Error::Infeasible("no edge cover exists with isolated vertices".into()));
    }
    Ok(EdgeCoverFamily { graph: g.clone() })
}

impl Family for EdgeCoverFamily {
    fn graph(&self) -> &Graph {
        &self.graph
    }

    fn name(&self) -> &'static str {
        "ec"
    }

    fn shortest(&self, rho: &Density) -> Result<(UsageRow, f64)> {
        let rho = rho.as_edge_vector();
        let cover = min_weight_edge_cover(&self.graph, rho)?;
        let length = cover.weight(rho);
        let row = UsageRow::new(
            cover.indicator(self.graph.num_edges()),
            RowLabel::Cover { edges: cover.as_slice().to_vec() },
        )?;
        Ok((row, length))
    }
}

/// A family given by explicit (sparse) usage rows; `shortest` is a linear
/// scan. Used for enumerated families such as the basic fractional edge
/// covers.
pub struct ExplicitFamily {
    graph: Graph,
    name: &'static str,
    /// Explicit labels; when absent, rows are labeled by their sparse usage.
    labels: Option<Vec<RowLabel>>,
    sparse_rows: Vec<Vec<(u32, f64)>>,
}

impl ExplicitFamily {
    pub fn from_rows(g: &Graph, name: &'static str, rows: Vec<UsageRow>) -> Result<ExplicitFamily> {
        let mut labels = Vec::with_capacity(rows.len());
        let mut sparse_rows = Vec::with_capacity(rows.len());
        for row in rows {
            let entries: Vec<(u32, f64)> = row
                .usage
                .iter()
                .enumerate()
                .filter(|&(_, x)| x != 0.0)
                .map(|(k, x)| (k as u32, x))
                .collect();
            labels.push(row.label);
            sparse_rows.push(entries);
        }
        Self::from_sparse(g, name, Some(labels), sparse_rows)
    }

    pub fn from_sparse(
        g: &Graph,
        name: &'static str,
        labels: Option<Vec<RowLabel>>,
        sparse_rows: Vec<Vec<(u32, f64)>>,
    ) -> Result<ExplicitFamily> {
        if sparse_rows.is_empty() {
            return Err(Error::Infeasible(format!("family {name} has no objects")));
        }
        if let Some(labels) = &labels {
            if labels.len() != sparse_rows.len() {
                return Err(Error::Dimension { expected: sparse_rows.len(), actual: labels.len() });
            }
        }
        for entries in &sparse_rows {
            if !entries.iter().any(|&(_, x)| x > 0.0) {
                return Err(Error::Domain("usage row must have a positive entry".into()));
            }
        }
        Ok(ExplicitFamily { graph: g.clone(), name, labels, sparse_rows })
    }

    pub fn len(&self) -> usize {
        self.sparse_rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sparse_rows.is_empty()
    }

    fn densify(&self, index: usize) -> UsageRow {
        let mut usage = EdgeVector::zeros(self.graph.num_edges());
        for &(k, x) in &self.sparse_rows[index] {
            usage.as_mut_slice()[k as usize] = x;
        }
        let label = match &self.labels {
            Some(labels) => labels[index].clone(),
            None => RowLabel::Fractional {
                entries: self.sparse_rows[index]
                    .iter()
                    .map(|&(k, x)| (k as usize, x))
                    .collect(),
            },
        };
        UsageRow { usage, label }
    }
}

impl Family for ExplicitFamily {
    fn graph(&self) -> &Graph {
        &self.graph
    }

    fn name(&self) -> &'static str {
        self.name
    }

    fn shortest(&self, rho: &Density) -> Result<(UsageRow, f64)> {
        let rho = rho.as_edge_vector();
        if rho.len() != self.graph.num_edges() {
            return Err(Error::Dimension { expected: self.graph.num_edges(), actual: rho.len() });
        }
        let values = rho.as_slice();
        let mut best = 0usize;
        let mut best_len = f64::INFINITY;
        for (i, entries) in self.sparse_rows.iter().enumerate() {
            let len: f64 = entries.iter().map(|&(k, x)| x * values[k as usize]).sum();
            if len < best_len {
                best_len = len;
                best = i;
            }
        }
        Ok((self.densify(best), best_len))
    }

    fn explicit_rows(&self) -> Option<Vec<UsageRow>> {
        Some((0..self.len()).map(|i| self.densify(i)).collect())
    }
}

/// True iff `gamma` is a fractional edge cover: nonnegative with vertex sums
/// at least 1 (up to 1e-12).
pub fn is_fractional_edge_cover(g: &Graph, gamma: &EdgeVector) -> Result<bool> {
    if gamma.len() != g.num_edges() {
        return Err(Error::Dimension { expected: g.num_edges(), actual: gamma.len() });
    }
    if gamma.iter().any(|x| x < 0.0) {
        return Err(Error::Domain("fractional edge cover test needs nonnegative entries".into()));
    }
    for v in 0..g.num_vertices() {
        let sum: f64 = g.incident_edges(v).iter().map(|&k| gamma[k]).sum();
        if sum < 1.0 - 1e-12 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All minimal edge covers (covers with no removable edge), deduplicated,
/// in a deterministic order. Guarded to 25 edges.
pub fn enumerate_minimal_edge_covers(g: &Graph) -> Result<Vec<EdgeSet>> {
    if g.num_edges() > 25 {
        return Err(Error::Domain(format!(
            "minimal edge cover enumeration limited to 25 edges, got {}",
            g.num_edges()
        )));
    }
    let n = g.num_vertices();
    let mut out: HashSet<Vec<usize>> = HashSet::new();
    let mut chosen: Vec<usize> = Vec::new();
    let mut cover_count = vec![0usize; n];

    fn recurse(
        g: &Graph,
        covered: u32,
        chosen: &mut Vec<usize>,
        cover_count: &mut Vec<usize>,
        out: &mut HashSet<Vec<usize>>,
    ) {
        let n = g.num_vertices();
        let full = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
        if covered == full {
            let minimal = chosen.iter().all(|&k| {
                let (u, v) = g.endpoints(k);
                cover_count[u] < 2 || cover_count[v] < 2
            });
            if minimal {
                let mut key = chosen.clone();
                key.sort_unstable();
                out.insert(key);
            }
            return;
        }
        let v = (0..n).find(|&v| covered & (1 << v) == 0).unwrap();
        for &k in g.incident_edges(v) {
            let (a, b) = g.endpoints(k);
            chosen.push(k);
            cover_count[a] += 1;
            cover_count[b] += 1;
            recurse(g, covered | (1 << a) | (1 << b), chosen, cover_count, out);
            cover_count[a] -= 1;
            cover_count[b] -= 1;
            chosen.pop();
        }
    }

    if n > 0 {
        if n > 32 {
            return Err(Error::Domain("minimal edge cover enumeration limited to 32 vertices".into()));
        }
        recurse(g, 0, &mut chosen, &mut cover_count, &mut out);
    }
    let mut covers: Vec<Vec<usize>> = out.into_iter().collect();
    covers.sort();
    Ok(covers.into_iter().map(EdgeSet::from_indices).collect())
}

/// One connected component of a basic fractional edge cover's support.
#[derive(Debug, Clone, PartialEq)]
pub enum FecComponent {
    /// Edges of a substar, all carrying usage 1.
    Substar { center: usize, edges: Vec<usize> },
    /// Edges of an odd cycle, all carrying usage 1/2.
    OddCycle { edges: Vec<usize> },
}

/// A fractional edge cover with values in {0, 1/2, 1} whose support is a
/// vertex-disjoint union of substars and odd cycles, with 1/2 exactly on
/// the odd-cycle edges.
#[derive(Debug, Clone, PartialEq)]
pub struct BasicFec {
    pub usage: EdgeVector,
    pub components: Vec<FecComponent>,
}

impl BasicFec {
    pub fn to_usage_row(&self) -> Result<UsageRow> {
        let entries: Vec<(usize, f64)> = self
            .usage
            .iter()
            .enumerate()
            .filter(|&(_, x)| x != 0.0)
            .collect();
        UsageRow::new(self.usage.clone(), RowLabel::Fractional { entries })
    }
}

struct FecEnumerator<'a, F: FnMut(&BasicFec)> {
    g: &'a Graph,
    full: u32,
    blocks: Vec<FecComponent>,
    emit: F,
}

impl<'a, F: FnMut(&BasicFec)> FecEnumerator<'a, F> {
    fn uncovered_neighbors(&self, v: usize, covered: u32) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .g
            .incident_edges(v)
            .iter()
            .map(|&k| {
                let (a, b) = self.g.endpoints(k);
                if a == v {
                    b
                } else {
                    a
                }
            })
            .filter(|&w| covered & (1 << w) == 0)
            .collect();
        out.sort_unstable();
        out
    }

    fn emit_current(&mut self) {
        let mut usage = EdgeVector::zeros(self.g.num_edges());
        for block in &self.blocks {
            match block {
                FecComponent::Substar { edges, .. } => {
                    for &k in edges {
                        usage.as_mut_slice()[k] = 1.0;
                    }
                }
                FecComponent::OddCycle { edges } => {
                    for &k in edges {
                        usage.as_mut_slice()[k] = 0.5;
                    }
                }
            }
        }
        let fec = BasicFec { usage, components: self.blocks.clone() };
        (self.emit)(&fec);
    }

    fn partition(&mut self, covered: u32) {
        if covered == self.full {
            self.emit_current();
            return;
        }
        let v = (0..self.g.num_vertices())
            .find(|&v| covered & (1 << v) == 0)
            .expect("some vertex is uncovered");

        // The block containing the lowest uncovered vertex v is chosen here,
        // which enumerates every partition exactly once.

        // v as the center of a substar.
        let neigh = self.uncovered_neighbors(v, covered);
        for mask in 1u32..(1 << neigh.len()) {
            let mut edges = Vec::new();
            let mut newly = 1u32 << v;
            for (i, &l) in neigh.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    edges.push(self.g.edge_between(v, l).expect("neighbor edge exists"));
                    newly |= 1 << l;
                }
            }
            self.blocks.push(FecComponent::Substar { center: v, edges });
            self.partition(covered | newly);
            self.blocks.pop();
        }

        // v as a leaf of a substar centered at an uncovered neighbor u.
        // At least one further leaf is required; the single-edge case is
        // already covered with v as the center.
        for &u in &neigh {
            let cand: Vec<usize> = self
                .uncovered_neighbors(u, covered)
                .into_iter()
                .filter(|&w| w != v)
                .collect();
            for mask in 1u32..(1 << cand.len()) {
                let mut edges = vec![self.g.edge_between(u, v).expect("neighbor edge exists")];
                let mut newly = (1u32 << v) | (1 << u);
                for (i, &l) in cand.iter().enumerate() {
                    if mask & (1 << i) != 0 {
                        edges.push(self.g.edge_between(u, l).expect("neighbor edge exists"));
                        newly |= 1 << l;
                    }
                }
                self.blocks.push(FecComponent::Substar { center: u, edges });
                self.partition(covered | newly);
                self.blocks.pop();
            }
        }

        // v on an odd cycle of uncovered vertices.
        let mut path = vec![v];
        self.cycles(covered, &mut path, 1u32 << v);
    }

    /// Depth-first enumeration of odd cycles through `path[0]` using only
    /// uncovered vertices. Each cycle is visited once: the successor of the
    /// start must be smaller than its predecessor.
    fn cycles(&mut self, covered: u32, path: &mut Vec<usize>, onpath: u32) {
        let last = *path.last().unwrap();
        let start = path[0];
        let nexts = self.uncovered_neighbors(last, covered);
        for w in nexts {
            if onpath & (1 << w) != 0 {
                continue;
            }
            let cycle_len = path.len() + 1;
            if cycle_len >= 3
                && cycle_len % 2 == 1
                && path[1] < w
                && self.g.edge_between(w, start).is_some()
            {
                let mut edges = Vec::with_capacity(cycle_len);
                for i in 0..path.len() - 1 {
                    edges.push(self.g.edge_between(path[i], path[i + 1]).unwrap());
                }
                edges.push(self.g.edge_between(last, w).unwrap());
                edges.push(self.g.edge_between(w, start).unwrap());
                let newly = onpath | (1 << w);
                self.blocks.push(FecComponent::OddCycle { edges });
                self.partition(covered | newly);
                self.blocks.pop();
            }
            path.push(w);
            self.cycles(covered, path, onpath | (1 << w));
            path.pop();
        }
    }
}

/// Streams every basic fractional edge cover of `g` to the visitor.
/// Guarded to 12 vertices.
pub fn for_each_basic_fec<F: FnMut(&BasicFec)>(g: &Graph, emit: F) -> Result<()> {
    let n = g.num_vertices();
    if n > 12 {
        return Err(Error::Domain(format!(
            "basic fractional edge cover enumeration limited to 12 vertices, got {n}"
        )));
    }
    if n == 0 {
        return Ok(());
    }
    let full = (1u32 << n) - 1;
    let mut enumerator = FecEnumerator { g, full, blocks: Vec::new(), emit };
    enumerator.partition(0);
    Ok(())
}

/// All basic fractional edge covers, in a deterministic order.
pub fn enumerate_basic_fecs(g: &Graph) -> Result<Vec<BasicFec>> {
    let mut out: Vec<BasicFec> = Vec::new();
    for_each_basic_fec(g, |fec| out.push(fec.clone()))?;
    let key = |fec: &BasicFec| -> Vec<(usize, u8)> {
        fec.usage
            .iter()
            .enumerate()
            .filter(|&(_, x)| x != 0.0)
            .map(|(k, x)| (k, if x == 1.0 { 2u8 } else { 1u8 }))
            .collect()
    };
    out.sort_by_key(key);
    Ok(out)
}

/// The enumerated family of basic fractional edge covers as explicit sparse
/// rows, suitable for a direct convex solve on small graphs.
pub fn basic_fec_family(g: &Graph) -> Result<ExplicitFamily> {
    let mut rows: Vec<Vec<(u32, f64)>> = Vec::new();
    for_each_basic_fec(g, |fec| {
        let entries: Vec<(u32, f64)> = fec
            .usage
            .iter()
            .enumerate()
            .filter(|&(_, x)| x != 0.0)
            .map(|(k, x)| (k as u32, x))
            .collect();
        rows.push(entries);
    })?;
    ExplicitFamily::from_sparse(g, "bfec", None, rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::StandardKind;
    use crate::solver::Density;

    #[test]
    fn star_family_shortest_on_s6() {
        let g = Graph::standard(StandardKind::Star, 6).unwrap();
        let fam = star_family(&g).unwrap();
        let (row, len) = fam.shortest(&Density::constant(&g, 1.0)).unwrap();
        assert_eq!(len, 1.0);
        assert!(matches!(row.label, RowLabel::Star { ref vertex } if vertex != "v0"));
    }

    #[test]
    fn star_family_shortest_on_c6_half() {
        let g = Graph::standard(StandardKind::Cycle, 6).unwrap();
        let fam = star_family(&g).unwrap();
        let (_, len) = fam.shortest(&Density::constant(&g, 0.5)).unwrap();
        assert_eq!(len, 1.0);
    }

    #[test]
    fn star_family_shortest_prefers_cheapest_leaf() {
        let g = Graph::standard(StandardKind::Path, 3).unwrap();
        let fam = star_family(&g).unwrap();
        let rho = Density::new(&g, EdgeVector::from_vec(vec![1.0, 0.0])).unwrap();
        let (row, len) = fam.shortest(&rho).unwrap();
        assert_eq!(len, 0.0);
        assert!(matches!(row.label, RowLabel::Star { ref vertex } if vertex == "v2"));
    }

    #[test]
    fn star_family_rejects_isolated_vertex() {
        let g = Graph::from_parts(&["a", "b", "c"], &[("a", "b", 1.0)]).unwrap();
        assert!(matches!(star_family(&g), Err(Error::Infeasible(_))));
        assert!(matches!(edge_cover_family(&g), Err(Error::Infeasible(_))));
    }

    #[test]
    fn edge_cover_family_shortest_on_s6_and_c4() {
        let s6 = Graph::standard(StandardKind::Star, 6).unwrap();
        let fam = edge_cover_family(&s6).unwrap();
        let (row, len) = fam.shortest(&Density::constant(&s6, 1.0)).unwrap();
        assert_eq!(len, 5.0);
        assert_eq!(row.usage.sum(), 5.0);

        let c4 = Graph::standard(StandardKind::Cycle, 4).unwrap();
        let fam = edge_cover_family(&c4).unwrap();
        let (_, len) = fam.shortest(&Density::constant(&c4, 1.0)).unwrap();
        assert_eq!(len, 2.0);
    }

    #[test]
    fn edge_cover_shortest_matches_enumeration_on_k4() {
        let g = Graph::standard(StandardKind::Complete, 4).unwrap();
        // Favor the edges at one vertex, then cross-check against the
        // enumerated minimal covers.
        let rho = Density::new(
            &g,
            EdgeVector::from_vec(vec![0.1, 0.1, 0.1, 1.0, 1.0, 1.0]),
        )
        .unwrap();
        let fam = edge_cover_family(&g).unwrap();
        let (_, len) = fam.shortest(&rho).unwrap();
        let best: f64 = enumerate_minimal_edge_covers(&g)
            .unwrap()
            .iter()
            .map(|c| c.weight(rho.as_edge_vector()))
            .fold(f64::INFINITY, f64::min);
        assert!((len - best).abs() < 1e-12);
    }

    #[test]
    fn minimal_cover_counts() {
        let s6 = Graph::standard(StandardKind::Star, 6).unwrap();
        assert_eq!(enumerate_minimal_edge_covers(&s6).unwrap().len(), 1);
        let k4 = Graph::standard(StandardKind::Complete, 4).unwrap();
        assert_eq!(enumerate_minimal_edge_covers(&k4).unwrap().len(), 7);
        let c5 = Graph::standard(StandardKind::Cycle, 5).unwrap();
        let covers = enumerate_minimal_edge_covers(&c5).unwrap();
        assert_eq!(covers.len(), 5);
        assert!(covers.iter().all(|c| c.len() == 3));
    }

    #[test]
    fn minimal_cover_guard() {
        let g = Graph::standard(StandardKind::Complete, 8).unwrap();
        assert!(matches!(enumerate_minimal_edge_covers(&g), Err(Error::Domain(_))));
    }

    #[test]
    fn basic_fec_counts() {
        let c3 = Graph::standard(StandardKind::Cycle, 3).unwrap();
        let fecs = enumerate_basic_fecs(&c3).unwrap();
        assert_eq!(fecs.len(), 4);
        let halves = fecs
            .iter()
            .filter(|f| f.usage.iter().all(|x| x == 0.5))
            .count();
        assert_eq!(halves, 1);

        let w5 = Graph::standard(StandardKind::Wheel, 5).unwrap();
        assert_eq!(enumerate_basic_fecs(&w5).unwrap().len(), 25);
        let w6 = Graph::standard(StandardKind::Wheel, 6).unwrap();
        assert_eq!(enumerate_basic_fecs(&w6).unwrap().len(), 36);
    }

    #[test]
    fn basic_fecs_are_distinct_and_fractional_covers() {
        let w5 = Graph::standard(StandardKind::Wheel, 5).unwrap();
        let fecs = enumerate_basic_fecs(&w5).unwrap();
        let mut seen = HashSet::new();
        for fec in &fecs {
            assert!(is_fractional_edge_cover(&w5, &fec.usage).unwrap());
            let fp: Vec<u64> = fec.usage.iter().map(f64::to_bits).collect();
            assert!(seen.insert(fp), "duplicate basic fec emitted");
        }
    }

    #[test]
    fn bipartite_basic_fecs_are_edge_covers() {
        for g in [
            Graph::standard(StandardKind::Cycle, 6).unwrap(),
            Graph::standard(StandardKind::Path, 6).unwrap(),
            Graph::standard(StandardKind::Star, 5).unwrap(),
        ] {
            for fec in enumerate_basic_fecs(&g).unwrap() {
                assert!(fec.usage.iter().all(|x| x == 0.0 || x == 1.0));
            }
        }
    }

    #[test]
    fn basic_fec_guard() {
        let g = Graph::standard(StandardKind::Barbell, 7).unwrap();
        assert!(matches!(enumerate_basic_fecs(&g), Err(Error::Domain(_))));
    }

    #[test]
    fn fractional_cover_checks() {
        let c5 = Graph::standard(StandardKind::Cycle, 5).unwrap();
        assert!(is_fractional_edge_cover(&c5, &EdgeVector::constant(5, 0.5)).unwrap());
        assert!(!is_fractional_edge_cover(&c5, &EdgeVector::zeros(5)).unwrap());
        let cover = enumerate_minimal_edge_covers(&c5).unwrap().remove(0);
        assert!(is_fractional_edge_cover(&c5, &cover.indicator(5)).unwrap());
        assert!(matches!(
            is_fractional_edge_cover(&c5, &EdgeVector::constant(5, -0.1)),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn substar_only_fecs_are_exactly_minimal_covers() {
        for g in [
            Graph::standard(StandardKind::Complete, 5).unwrap(),
            Graph::standard(StandardKind::Wheel, 5).unwrap(),
            Graph::standard(StandardKind::Cycle, 7).unwrap(),
        ] {
            let star_only: HashSet<Vec<u64>> = enumerate_basic_fecs(&g)
                .unwrap()
                .into_iter()
                .filter(|f| {
                    f.components
                        .iter()
                        .all(|c| matches!(c, FecComponent::Substar { .. }))
                })
                .map(|f| f.usage.iter().map(f64::to_bits).collect())
                .collect();
            let covers: HashSet<Vec<u64>> = enumerate_minimal_edge_covers(&g)
                .unwrap()
                .into_iter()
                .map(|c| c.indicator(g.num_edges()).iter().map(f64::to_bits).collect())
                .collect();
            assert_eq!(star_only, covers);
        }
    }
}
