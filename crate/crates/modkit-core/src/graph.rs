//! Immutable weighted graphs, star extraction, parsing and serialization.
//!
//! A [`Graph`] is a simple undirected graph with positive edge weights.
//! Edge order is stable after construction and defines the coordinate
//! order of every edge-indexed vector in this crate.

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Undirected simple graph with positive per-edge weights.
///
/// Vertices are opaque strings mapped to dense indices in first-appearance
/// order. The graph is immutable after construction and safe to share
/// across threads.
#[derive(Debug, Clone, PartialEq)]
pub struct Graph {
    vertex_ids: Vec<String>,
    index_of: HashMap<String, usize>,
    edges: Vec<(usize, usize)>,
    sigma: Vec<f64>,
    incident: Vec<Vec<usize>>,
}

/// A set of edge indices into a graph's edge order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeSet {
    members: Vec<usize>,
}

impl EdgeSet {
    /// Builds a set from arbitrary indices; sorts and deduplicates.
    pub fn from_indices(indices: impl IntoIterator<Item = usize>) -> Self {
        let mut members: Vec<usize> = indices.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        EdgeSet { members }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, edge: usize) -> bool {
        self.members.binary_search(&edge).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.members
    }

    /// 0/1 indicator vector in the coordinate order of a graph with
    /// `num_edges` edges.
    pub fn indicator(&self, num_edges: usize) -> EdgeVector {
        let mut v = EdgeVector::zeros(num_edges);
        for &e in &self.members {
            v.values[e] = 1.0;
        }
        v
    }

    /// Total weight of the member edges under `w`.
    pub fn weight(&self, w: &EdgeVector) -> f64 {
        self.members.iter().map(|&e| w[e]).sum()
    }
}

/// A real vector indexed by graph edges, in graph edge order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EdgeVector {
    values: Vec<f64>,
}

impl EdgeVector {
    pub fn zeros(len: usize) -> Self {
        EdgeVector { values: vec![0.0; len] }
    }

    pub fn constant(len: usize, value: f64) -> Self {
        EdgeVector { values: vec![value; len] }
    }

    pub fn from_vec(values: Vec<f64>) -> Self {
        EdgeVector { values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = f64> + '_ {
        self.values.iter().copied()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.values
    }

    pub fn as_mut_slice(&mut self) -> &mut [f64] {
        &mut self.values
    }

    pub fn sum(&self) -> f64 {
        self.values.iter().sum()
    }

    pub fn dot(&self, other: &EdgeVector) -> Result<f64> {
        if self.len() != other.len() {
            return Err(Error::Dimension { expected: self.len(), actual: other.len() });
        }
        Ok(self.values.iter().zip(&other.values).map(|(a, b)| a * b).sum())
    }

    pub fn scaled(&self, c: f64) -> EdgeVector {
        EdgeVector { values: self.values.iter().map(|v| c * v).collect() }
    }

    /// True if every entry is at least `bound`.
    pub fn all_at_least(&self, bound: f64) -> bool {
        self.values.iter().all(|&v| v >= bound)
    }
}

impl std::ops::Index<usize> for EdgeVector {
    type Output = f64;

    fn index(&self, index: usize) -> &f64 {
        &self.values[index]
    }
}

/// Standard graph families used throughout the examples and experiments.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StandardKind {
    Star,
    Cycle,
    Complete,
    Path,
    Wheel,
    Barbell,
}

impl StandardKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            StandardKind::Star => "star",
            StandardKind::Cycle => "cycle",
            StandardKind::Complete => "complete",
            StandardKind::Path => "path",
            StandardKind::Wheel => "wheel",
            StandardKind::Barbell => "barbell",
        }
    }
}

impl std::str::FromStr for StandardKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "star" => Ok(StandardKind::Star),
            "cycle" => Ok(StandardKind::Cycle),
            "complete" => Ok(StandardKind::Complete),
            "path" => Ok(StandardKind::Path),
            "wheel" => Ok(StandardKind::Wheel),
            "barbell" => Ok(StandardKind::Barbell),
            other => Err(Error::Domain(format!("unknown standard graph kind: {other}"))),
        }
    }
}

/// Parses a `kind:n` spec such as `complete:6`.
pub fn parse_standard_spec(spec: &str) -> Result<(StandardKind, usize)> {
    let (kind, n) = spec
        .split_once(':')
        .ok_or_else(|| Error::Domain(format!("expected kind:n, got {spec:?}")))?;
    let kind: StandardKind = kind.parse()?;
    let n: usize = n
        .parse()
        .map_err(|_| Error::Domain(format!("invalid size in standard spec {spec:?}")))?;
    Ok((kind, n))
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    vertices: Vec<String>,
    edges: Vec<(String, String, f64)>,
}

impl Graph {
    /// Builds a graph from `(u, v, weight)` triples. Vertices are indexed in
    /// first-appearance order; edges keep the given order.
    pub fn from_weighted_edges<S: AsRef<str>>(edges: &[(S, S, f64)]) -> Result<Graph> {
        Self::from_parts(&[], edges)
    }

    /// Builds a graph from an explicit vertex list plus `(u, v, weight)`
    /// triples. Listed vertices come first (allowing isolated vertices);
    /// endpoints not listed are appended in first-appearance order.
    pub fn from_parts<S: AsRef<str>>(vertices: &[S], edges: &[(S, S, f64)]) -> Result<Graph> {
        let mut g = Graph {
            vertex_ids: Vec::new(),
            index_of: HashMap::new(),
            edges: Vec::new(),
            sigma: Vec::new(),
            incident: Vec::new(),
        };
        for v in vertices {
            g.intern(v.as_ref());
        }
        let mut seen: HashMap<(usize, usize), ()> = HashMap::new();
        for (u, v, w) in edges {
            let (u, v, w) = (u.as_ref(), v.as_ref(), *w);
            if u == v {
                return Err(Error::Domain(format!("self-loop at vertex {u:?}")));
            }
            if !(w > 0.0) || !w.is_finite() {
                return Err(Error::Domain(format!("edge ({u:?}, {v:?}) has non-positive weight {w}")));
            }
            let ui = g.intern(u);
            let vi = g.intern(v);
            let key = (ui.min(vi), ui.max(vi));
            if seen.insert(key, ()).is_some() {
                return Err(Error::Domain(format!("duplicate edge ({u:?}, {v:?})")));
            }
            let k = g.edges.len();
            g.edges.push((ui, vi));
            g.sigma.push(w);
            g.incident[ui].push(k);
            g.incident[vi].push(k);
        }
        Ok(g)
    }

    fn intern(&mut self, id: &str) -> usize {
        if let Some(&i) = self.index_of.get(id) {
            return i;
        }
        let i = self.vertex_ids.len();
        self.vertex_ids.push(id.to_string());
        self.index_of.insert(id.to_string(), i);
        self.incident.push(Vec::new());
        i
    }

    pub fn num_vertices(&self) -> usize {
        self.vertex_ids.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_ids(&self) -> &[String] {
        &self.vertex_ids
    }

    pub fn vertex_id(&self, index: usize) -> &str {
        &self.vertex_ids[index]
    }

    pub fn vertex_index(&self, id: &str) -> Result<usize> {
        self.index_of
            .get(id)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(id.to_string()))
    }

    /// Endpoint indices of edge `k`, in insertion orientation.
    pub fn endpoints(&self, k: usize) -> (usize, usize) {
        self.edges[k]
    }

    /// Human-readable name of edge `k` ("u v").
    pub fn edge_name(&self, k: usize) -> String {
        let (u, v) = self.edges[k];
        format!("{} {}", self.vertex_ids[u], self.vertex_ids[v])
    }

    /// Positive edge weights sigma, in edge order.
    pub fn sigma(&self) -> EdgeVector {
        EdgeVector::from_vec(self.sigma.clone())
    }

    /// Uniform unit weights, in edge order.
    pub fn unit_weights(&self) -> EdgeVector {
        EdgeVector::constant(self.num_edges(), 1.0)
    }

    /// Edge indices incident to vertex `v` (by dense index).
    pub fn incident_edges(&self, v: usize) -> &[usize] {
        &self.incident[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.incident[v].len()
    }

    /// Index of the edge joining `u` and `v`, if present.
    pub fn edge_between(&self, u: usize, v: usize) -> Option<usize> {
        self.incident[u]
            .iter()
            .copied()
            .find(|&k| {
                let (a, b) = self.edges[k];
                (a, b) == (u, v) || (a, b) == (v, u)
            })
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.incident.iter().any(|adj| adj.is_empty())
    }

    /// The star of a vertex: all edges incident to it. Unknown ids error;
    /// isolated vertices yield an empty set.
    pub fn star(&self, vertex: &str) -> Result<EdgeSet> {
        let v = self.vertex_index(vertex)?;
        Ok(self.star_of_index(v))
    }

    pub fn star_of_index(&self, v: usize) -> EdgeSet {
        EdgeSet::from_indices(self.incident[v].iter().copied())
    }

    /// Minimum vertex degree.
    pub fn min_degree(&self) -> Result<usize> {
        self.incident
            .iter()
            .map(Vec::len)
            .min()
            .ok_or_else(|| Error::Domain("min_degree of empty graph".into()))
    }

    /// True if the graph is 2-colorable (checked per connected component).
    pub fn is_bipartite(&self) -> bool {
        let n = self.num_vertices();
        let mut color = vec![u8::MAX; n];
        for start in 0..n {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for &k in &self.incident[v] {
                    let (a, b) = self.edges[k];
                    let w = if a == v { b } else { a };
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[v];
                        stack.push(w);
                    } else if color[w] == color[v] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Parses an edge-list document. Each non-comment line is `u v [w]` with
    /// `w > 0` defaulting to 1; `#` starts a comment.
    pub fn parse(text: &str) -> Result<Graph> {
        let mut edges: Vec<(String, String, f64)> = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let tokens: Vec<&str> = content.split_whitespace().collect();
            let (u, v, w) = match tokens.as_slice() {
                [u, v] => (*u, *v, 1.0),
                [u, v, w] => {
                    let w: f64 = w.parse().map_err(|_| Error::Parse {
                        line,
                        message: format!("invalid weight {w:?}"),
                    })?;
                    (*u, *v, w)
                }
                _ => {
                    return Err(Error::Parse {
                        line,
                        message: format!("expected 'u v [w]', got {content:?}"),
                    })
                }
            };
            if u == v {
                return Err(Error::Parse { line, message: format!("self-loop at {u:?}") });
            }
            if !(w > 0.0) || !w.is_finite() {
                return Err(Error::Parse { line, message: format!("weight must be positive, got {w}") });
            }
            edges.push((u.to_string(), v.to_string(), w));
        }
        // Re-check duplicates through the constructor so the error carries
        // the standard message.
        let mut seen: HashMap<(String, String), usize> = HashMap::new();
        for (i, (u, v, _)) in edges.iter().enumerate() {
            let key = if u <= v { (u.clone(), v.clone()) } else { (v.clone(), u.clone()) };
            if seen.insert(key, i).is_some() {
                return Err(Error::Parse {
                    line: 0,
                    message: format!("duplicate edge ({u:?}, {v:?})"),
                });
            }
        }
        Graph::from_weighted_edges(&edges)
    }

    /// Serializes to the edge-list text format accepted by [`Graph::parse`].
    pub fn to_edge_list_text(&self) -> String {
        let mut out = String::new();
        for (k, &(u, v)) in self.edges.iter().enumerate() {
            let _ = writeln!(
                out,
                "{} {} {:?}",
                self.vertex_ids[u], self.vertex_ids[v], self.sigma[k]
            );
        }
        out
    }

    /// Canonical JSON form `{vertices: [...], edges: [[u, v, w], ...]}` with
    /// edges in coordinate order.
    pub fn to_json(&self) -> serde_json::Value {
        let doc = GraphJson {
            vertices: self.vertex_ids.clone(),
            edges: self
                .edges
                .iter()
                .zip(&self.sigma)
                .map(|(&(u, v), &w)| (self.vertex_ids[u].clone(), self.vertex_ids[v].clone(), w))
                .collect(),
        };
        serde_json::to_value(doc).expect("graph serialization cannot fail")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Graph> {
        let doc: GraphJson = serde_json::from_value(value.clone()).map_err(|e| Error::Parse {
            line: 0,
            message: format!("invalid graph JSON: {e}"),
        })?;
        let vertices: Vec<&str> = doc.vertices.iter().map(String::as_str).collect();
        let edges: Vec<(&str, &str, f64)> = doc
            .edges
            .iter()
            .map(|(u, v, w)| (u.as_str(), v.as_str(), *w))
            .collect();
        Graph::from_parts(&vertices, &edges)
    }

    /// Builds an unweighted standard graph. The wheel `W_n` has one hub of
    /// degree `n - 1` and `n - 1` rim vertices of degree 3; the n-barbell is
    /// two disjoint `K_n` joined by one bridge edge (the bridge is the final
    /// edge in coordinate order).
    pub fn standard(kind: StandardKind, n: usize) -> Result<Graph> {
        let check_min = |min: usize| -> Result<()> {
            if n < min {
                Err(Error::Domain(format!(
                    "{} requires n >= {min}, got {n}",
                    kind.as_str()
                )))
            } else {
                Ok(())
            }
        };
        let v = |i: usize| format!("v{i}");
        let mut edges: Vec<(String, String, f64)> = Vec::new();
        match kind {
            StandardKind::Star => {
                check_min(3)?;
                for i in 1..n {
                    edges.push((v(0), v(i), 1.0));
                }
            }
            StandardKind::Cycle => {
                check_min(3)?;
                for i in 0..n {
                    edges.push((v(i), v((i + 1) % n), 1.0));
                }
            }
            StandardKind::Complete => {
                check_min(2)?;
                for i in 0..n {
                    for j in (i + 1)..n {
                        edges.push((v(i), v(j), 1.0));
                    }
                }
            }
            StandardKind::Path => {
                check_min(3)?;
                for i in 0..n - 1 {
                    edges.push((v(i), v(i + 1), 1.0));
                }
            }
            StandardKind::Wheel => {
                check_min(4)?;
                for i in 1..n {
                    edges.push((v(0), v(i), 1.0));
                }
                for i in 1..n {
                    let j = if i == n - 1 { 1 } else { i + 1 };
                    edges.push((v(i), v(j), 1.0));
                }
            }
            StandardKind::Barbell => {
                check_min(3)?;
                let a = |i: usize| format!("a{i}");
                let b = |i: usize| format!("b{i}");
                for i in 0..n {
                    for j in (i + 1)..n {
                        edges.push((a(i), a(j), 1.0));
                    }
                }
                for i in 0..n {
                    for j in (i + 1)..n {
                        edges.push((b(i), b(j), 1.0));
                    }
                }
                edges.push((a(0), b(0), 1.0));
            }
        }
        Graph::from_weighted_edges(&edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_triangle() {
        let g = Graph::parse("a b\nb c\nc a").unwrap();
        assert_eq!(g.num_vertices(), 3);
        assert_eq!(g.num_edges(), 3);
        assert!(g.sigma().iter().all(|w| w == 1.0));
        assert_eq!(g.vertex_ids(), &["a", "b", "c"]);
    }

    #[test]
    fn parses_weight_and_comments() {
        let g = Graph::parse("# header\na b 2.5  # trailing\n").unwrap();
        assert_eq!(g.num_edges(), 1);
        assert_eq!(g.sigma()[0], 2.5);
    }

    #[test]
    fn rejects_self_loop() {
        assert!(matches!(Graph::parse("a a"), Err(Error::Parse { .. })));
    }

    #[test]
    fn rejects_duplicate_edge() {
        assert!(Graph::parse("a b\nb a").is_err());
    }

    #[test]
    fn rejects_nonpositive_weight() {
        assert!(Graph::parse("a b 0").is_err());
        assert!(Graph::parse("a b -1").is_err());
    }

    #[test]
    fn star_of_center_and_cycle() {
        let s6 = Graph::standard(StandardKind::Star, 6).unwrap();
        assert_eq!(s6.star("v0").unwrap().len(), 5);
        let c5 = Graph::standard(StandardKind::Cycle, 5).unwrap();
        for i in 0..5 {
            assert_eq!(s6.num_vertices(), 6);
            assert_eq!(c5.star(&format!("v{i}")).unwrap().len(), 2);
        }
        assert!(matches!(s6.star("zz"), Err(Error::UnknownVertex(_))));
    }

    #[test]
    fn isolated_vertex_star_is_empty() {
        let g = Graph::from_parts(&["a", "b", "c"], &[("a", "b", 1.0)]).unwrap();
        assert!(g.star("c").unwrap().is_empty());
        assert!(g.has_isolated_vertex());
    }

    #[test]
    fn min_degree_examples() {
        let k6 = Graph::standard(StandardKind::Complete, 6).unwrap();
        assert_eq!(k6.min_degree().unwrap(), 5);
        let p4 = Graph::standard(StandardKind::Path, 4).unwrap();
        assert_eq!(p4.min_degree().unwrap(), 1);
        // Constructed wheel W_6: hub degree 5, rim degree 3.
        let w6 = Graph::standard(StandardKind::Wheel, 6).unwrap();
        assert_eq!(w6.degree(0), 5);
        assert_eq!(w6.min_degree().unwrap(), 3);
    }

    #[test]
    fn standard_sizes() {
        let k6 = Graph::standard(StandardKind::Complete, 6).unwrap();
        assert_eq!((k6.num_vertices(), k6.num_edges()), (6, 15));
        let w6 = Graph::standard(StandardKind::Wheel, 6).unwrap();
        assert_eq!(w6.num_edges(), 10);
        let b7 = Graph::standard(StandardKind::Barbell, 7).unwrap();
        assert_eq!((b7.num_vertices(), b7.num_edges()), (14, 43));
        assert!(Graph::standard(StandardKind::Wheel, 3).is_err());
        assert!(Graph::standard(StandardKind::Cycle, 2).is_err());
    }

    #[test]
    fn handshake_on_standard_graphs() {
        for (kind, n) in [
            (StandardKind::Star, 7),
            (StandardKind::Cycle, 8),
            (StandardKind::Complete, 6),
            (StandardKind::Path, 5),
            (StandardKind::Wheel, 9),
            (StandardKind::Barbell, 4),
        ] {
            let g = Graph::standard(kind, n).unwrap();
            let degree_sum: usize = (0..g.num_vertices()).map(|v| g.degree(v)).sum();
            assert_eq!(degree_sum, 2 * g.num_edges(), "{kind:?}:{n}");
        }
    }

    #[test]
    fn text_round_trip_is_identity() {
        let g = Graph::parse("a b 2.5\nb c\nc d 0.125").unwrap();
        let again = Graph::parse(&g.to_edge_list_text()).unwrap();
        assert_eq!(g, again);
    }

    #[test]
    fn json_round_trip_keeps_isolated_vertices() {
        let g = Graph::from_parts(&["x", "a"], &[("a", "b", 3.0)]).unwrap();
        let again = Graph::from_json(&g.to_json()).unwrap();
        assert_eq!(g, again);
    }

    #[test]
    fn standard_edge_order_is_deterministic() {
        let a = Graph::standard(StandardKind::Wheel, 7).unwrap();
        let b = Graph::standard(StandardKind::Wheel, 7).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn parse_standard_specs() {
        assert_eq!(parse_standard_spec("complete:6").unwrap(), (StandardKind::Complete, 6));
        assert!(parse_standard_spec("complete").is_err());
        assert!(parse_standard_spec("blob:4").is_err());
    }
}
