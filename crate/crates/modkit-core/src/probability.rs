//! Probabilistic interpretation: optimal pmfs from solver multipliers,
//! expected edge usage, expected overlap, and the uniform-pmf lower bound.
//!
//! At the optimum the multipliers satisfy `sum(lambda) = p * Mod`, so the
//! normalized multipliers form a pmf whose expected usage matches the
//! optimality condition `E[usage(e)] = sigma(e) rho*(e)^(p-1) / Mod`.

use serde_json::json;

use crate::error::{Error, Result};
use crate::families::UsageRow;
use crate::graph::{EdgeVector, Graph};
use crate::solver::ModulusResult;

/// A probability mass function over family objects, supported on the
/// active rows of a solve.
#[derive(Debug, Clone)]
pub struct Pmf {
    masses: Vec<f64>,
}

impl Pmf {
    pub fn masses(&self) -> &[f64] {
        &self.masses
    }

    pub fn len(&self) -> usize {
        self.masses.len()
    }

    pub fn is_empty(&self) -> bool {
        self.masses.is_empty()
    }

    /// JSON form `{objects: [{label, mass}], expected_usage: {edge -> value}}`.
    pub fn to_json(&self, rows: &[UsageRow], g: &Graph) -> Result<serde_json::Value> {
        let usage = expected_edge_usage(self, rows)?;
        let usage_map: serde_json::Map<String, serde_json::Value> = (0..g.num_edges())
            .map(|k| (g.edge_name(k), json!(usage[k])))
            .collect();
        Ok(json!({
            "objects": rows
                .iter()
                .zip(&self.masses)
                .map(|(row, &mass)| json!({"label": row.label, "mass": mass}))
                .collect::<Vec<_>>(),
            "expected_usage": usage_map,
        }))
    }
}

/// The multiplier-derived optimal pmf: mass proportional to lambda.
pub fn pmf_from_result(result: &ModulusResult) -> Result<Pmf> {
    let total: f64 = result.lambda.iter().sum();
    if !(total > 0.0) {
        return Err(Error::Degenerate("all multipliers are zero; no pmf can be formed".into()));
    }
    let mut masses: Vec<f64> = result.lambda.iter().map(|&l| l / total).collect();
    // Guard against a tiny negative from the solver and renormalize exactly.
    for m in &mut masses {
        if *m < 0.0 {
            *m = 0.0;
        }
    }
    let sum: f64 = masses.iter().sum();
    for m in &mut masses {
        *m /= sum;
    }
    Ok(Pmf { masses })
}

/// Per-edge expectation of the usage under the pmf.
pub fn expected_edge_usage(pmf: &Pmf, rows: &[UsageRow]) -> Result<EdgeVector> {
    if pmf.len() != rows.len() {
        return Err(Error::Domain(format!(
            "pmf has {} masses but {} rows were supplied",
            pmf.len(),
            rows.len()
        )));
    }
    if rows.is_empty() {
        return Err(Error::Domain("expected usage of an empty family".into()));
    }
    let m = rows[0].usage.len();
    let mut usage = EdgeVector::zeros(m);
    for (row, &mass) in rows.iter().zip(pmf.masses()) {
        if row.usage.len() != m {
            return Err(Error::Dimension { expected: m, actual: row.usage.len() });
        }
        for (e, x) in row.usage.iter().enumerate() {
            if x != 0.0 {
                usage.as_mut_slice()[e] += mass * x;
            }
        }
    }
    Ok(usage)
}

/// Expected overlap `E |gamma ∩ gamma'|` of two objects drawn independently
/// from the pmf. Only defined for indicator (0/1) usage rows, where it
/// equals the sum over edges of the squared expected usage.
pub fn expected_overlap(pmf: &Pmf, rows: &[UsageRow]) -> Result<f64> {
    for row in rows {
        if !row.usage.iter().all(|x| x == 0.0 || x == 1.0) {
            return Err(Error::Domain(
                "expected overlap is defined for indicator usage rows only".into(),
            ));
        }
    }
    let usage = expected_edge_usage(pmf, rows)?;
    Ok(usage.iter().map(|u| u * u).sum())
}

/// Lower bound on the star modulus from the uniform pmf:
/// `(|V|/2)^p * (sum_e sigma(e)^(-q/p))^(-p/q)`.
pub fn uniform_star_lower_bound(g: &Graph, p: f64, sigma: &EdgeVector) -> Result<f64> {
    if !(p > 1.0) || !p.is_finite() {
        return Err(Error::Domain(format!("lower bound needs p in (1, inf), got {p}")));
    }
    if sigma.len() != g.num_edges() {
        return Err(Error::Dimension { expected: g.num_edges(), actual: sigma.len() });
    }
    let q = p / (p - 1.0);
    let s: f64 = sigma.iter().map(|s| s.powf(-q / p)).sum();
    let n = g.num_vertices() as f64;
    Ok((n / 2.0).powf(p) * s.powf(-p / q))
}

/// The expected edge usage under any optimal pmf,
/// `sigma(e) rho*(e)^(p-1) / Mod`. This value is the same for every optimal
/// pmf, unlike the pmf itself.
pub fn optimal_expected_usage(result: &ModulusResult) -> EdgeVector {
    let values: Vec<f64> = (0..result.sigma.len())
        .map(|e| {
            result.sigma[e] * result.rho_star.value(e).powf(result.p - 1.0) / result.modulus
        })
        .collect();
    EdgeVector::from_vec(values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{star_family, Family, RowLabel};
    use crate::graph::{Graph, StandardKind};
    use crate::solver::{basic_algorithm, DEFAULT_TOL};

    fn star_run(kind: StandardKind, n: usize) -> (Graph, ModulusResult) {
        let g = Graph::standard(kind, n).unwrap();
        let fam = star_family(&g).unwrap();
        let res = basic_algorithm(&fam, 2.0, &g.unit_weights(), DEFAULT_TOL).unwrap();
        (g, res)
    }

    fn mass_of(result: &ModulusResult, pmf: &Pmf, vertex: &str) -> f64 {
        result
            .active_rows
            .iter()
            .zip(pmf.masses())
            .find_map(|(row, &m)| match &row.label {
                RowLabel::Star { vertex: v } if v == vertex => Some(m),
                _ => None,
            })
            .unwrap_or(0.0)
    }

    #[test]
    fn pmf_on_star_graph_avoids_center() {
        let (_, res) = star_run(StandardKind::Star, 6);
        let pmf = pmf_from_result(&res).unwrap();
        assert!(mass_of(&res, &pmf, "v0") < 1e-9);
        for v in 1..6 {
            let m = mass_of(&res, &pmf, &format!("v{v}"));
            assert!((m - 0.2).abs() < 1e-7, "leaf v{v} mass {m}");
        }
    }

    #[test]
    fn pmf_on_cycle_and_complete_is_uniform() {
        for (kind, n) in [(StandardKind::Cycle, 5), (StandardKind::Complete, 6)] {
            let (_, res) = star_run(kind, n);
            let pmf = pmf_from_result(&res).unwrap();
            for v in 0..n {
                let m = mass_of(&res, &pmf, &format!("v{v}"));
                assert!((m - 1.0 / n as f64).abs() < 1e-7);
            }
        }
    }

    #[test]
    fn expected_usage_examples() {
        // Uniform pmf over all stars: every edge sees 2/|V|.
        let g = Graph::standard(StandardKind::Wheel, 7).unwrap();
        let rows = star_family(&g).unwrap().explicit_rows().unwrap();
        let uniform = Pmf { masses: vec![1.0 / 7.0; 7] };
        let usage = expected_edge_usage(&uniform, &rows).unwrap();
        for e in 0..g.num_edges() {
            assert!((usage[e] - 2.0 / 7.0).abs() < 1e-12);
        }

        // Point mass on one cover reproduces its indicator.
        let c = rows[0].clone();
        let point = Pmf { masses: vec![1.0] };
        let usage = expected_edge_usage(&point, &[c.clone()]).unwrap();
        assert_eq!(usage, c.usage);
    }

    #[test]
    fn expected_usage_leaf_uniform_star_graph() {
        let g = Graph::standard(StandardKind::Star, 6).unwrap();
        let rows = star_family(&g).unwrap().explicit_rows().unwrap();
        // Mass 1/(n-1) on each leaf star, 0 on the center star (row 0).
        let mut masses = vec![0.2; 6];
        masses[0] = 0.0;
        let usage = expected_edge_usage(&Pmf { masses }, &rows).unwrap();
        for e in 0..5 {
            assert!((usage[e] - 0.2).abs() < 1e-12);
        }
    }

    #[test]
    fn overlap_examples() {
        let n = 8;
        let g = Graph::standard(StandardKind::Cycle, n).unwrap();
        let rows = star_family(&g).unwrap().explicit_rows().unwrap();
        let uniform = Pmf { masses: vec![1.0 / n as f64; n] };
        let overlap = expected_overlap(&uniform, &rows).unwrap();
        assert!((overlap - 4.0 / n as f64).abs() < 1e-12);

        let g = Graph::standard(StandardKind::Complete, 7).unwrap();
        let rows = star_family(&g).unwrap().explicit_rows().unwrap();
        let uniform = Pmf { masses: vec![1.0 / 7.0; 7] };
        let overlap = expected_overlap(&uniform, &rows).unwrap();
        assert!((overlap - 2.0 * 6.0 / 7.0).abs() < 1e-12);

        // Point mass on an object of size k has overlap k.
        let point = Pmf { masses: vec![1.0] };
        let row = rows[0].clone();
        let overlap = expected_overlap(&point, &[row.clone()]).unwrap();
        assert!((overlap - row.usage.sum()).abs() < 1e-12);
    }

    #[test]
    fn overlap_rejects_fractional_rows() {
        let g = Graph::standard(StandardKind::Cycle, 5).unwrap();
        let mut v = EdgeVector::zeros(5);
        for e in 0..5 {
            v.as_mut_slice()[e] = 0.5;
        }
        let row = UsageRow::new(v, RowLabel::Fractional { entries: vec![] }).unwrap();
        let pmf = Pmf { masses: vec![1.0] };
        assert!(matches!(expected_overlap(&pmf, &[row]), Err(Error::Domain(_))));
    }

    #[test]
    fn uniform_lower_bound_examples() {
        let c9 = Graph::standard(StandardKind::Cycle, 9).unwrap();
        let b = uniform_star_lower_bound(&c9, 2.0, &c9.unit_weights()).unwrap();
        assert!((b - 9.0 / 4.0).abs() < 1e-12);

        let k7 = Graph::standard(StandardKind::Complete, 7).unwrap();
        let b = uniform_star_lower_bound(&k7, 2.0, &k7.unit_weights()).unwrap();
        assert!((b - 7.0 / 12.0).abs() < 1e-12);

        // d-regular graphs: the bound equals |E| / d^p for every p.
        for p in [1.5, 2.0, 3.0] {
            let g = Graph::standard(StandardKind::Cycle, 6).unwrap();
            let b = uniform_star_lower_bound(&g, p, &g.unit_weights()).unwrap();
            assert!((b - 6.0 / 2.0_f64.powf(p)).abs() < 1e-12);
        }
    }

    #[test]
    fn degenerate_multipliers_are_rejected() {
        let (_, mut res) = star_run(StandardKind::Cycle, 4);
        for l in &mut res.lambda {
            *l = 0.0;
        }
        assert!(matches!(pmf_from_result(&res), Err(Error::Degenerate(_))));
    }
}
