//! Blocking-duality computations: dual weights, the reciprocal-modulus
//! identity, and the fractional-edge-cover modulus obtained from the star
//! modulus.
//!
//! The stars and the fractional edge covers are dual families: a vector is
//! a fractional edge cover exactly when it is admissible for the stars.
//! With conjugate exponents q = p/(p-1) and dual weights
//! `sigma_hat(e) = sigma(e)^(-q/p)`, the moduli satisfy
//!
//! ```text
//!     Mod_[p,sigma](fec)^(1/p) * Mod_[q,sigma_hat](star)^(1/q) = 1,
//! ```
//!
//! and the fec extremal density is recovered from the star run as
//! `eta(e) = sigma_hat(e) * rho_star(e)^(q-1) / Mod_[q,sigma_hat](star)`.
//! There is no known efficient shortest oracle for fractional edge covers,
//! so this duality is the production path for their modulus; enumeration
//! of the basic fractional edge covers is the independent test path.

use serde::Serialize;
use serde_json::json;

use crate::error::{Error, Result};
use crate::families::{star_family, Family};
use crate::graph::{EdgeVector, Graph};
use crate::solver::{basic_algorithm, Density, ModulusResult};

/// Hölder conjugate of p.
pub fn conjugate_exponent(p: f64) -> Result<f64> {
    if !(p > 1.0) || !p.is_finite() {
        return Err(Error::Domain(format!("conjugate exponent needs p in (1, inf), got {p}")));
    }
    Ok(p / (p - 1.0))
}

/// Dual weights `sigma_hat(e) = sigma(e)^(-q/p)` with q the conjugate of p.
pub fn dual_weights(sigma: &EdgeVector, p: f64) -> Result<EdgeVector> {
    let q = conjugate_exponent(p)?;
    if !sigma.iter().all(|s| s > 0.0 && s.is_finite()) {
        return Err(Error::Domain("sigma must be strictly positive".into()));
    }
    Ok(EdgeVector::from_vec(sigma.iter().map(|s| s.powf(-q / p)).collect()))
}

/// The p=1 / p=infinity reciprocal: a family with 1-modulus `mod_one` has a
/// blocking dual whose infinity-modulus under inverted weights is the exact
/// reciprocal. Formula helper only; no solver path exists for these
/// exponents.
pub fn infinity_modulus_from_one(mod_one: f64) -> Result<f64> {
    if !(mod_one > 0.0) || !mod_one.is_finite() {
        return Err(Error::Domain(format!("1-modulus must be positive, got {mod_one}")));
    }
    Ok(1.0 / mod_one)
}

/// Result of a duality-based fractional-edge-cover solve.
#[derive(Debug, Clone)]
pub struct DualResult {
    /// Mod of the fractional edge covers at (p, sigma).
    pub primal_modulus: f64,
    /// Mod of the stars at (q, sigma_hat), computed by the active-set solver.
    pub dual_modulus: f64,
    pub p: f64,
    pub q: f64,
    pub sigma_hat: EdgeVector,
    /// Extremal density for the fractional edge covers.
    pub eta_star: Density,
    /// The underlying star run.
    pub dual_run: ModulusResult,
    /// |primal^(1/p) * dual^(1/q) - 1|.
    pub product_deviation: f64,
}

impl DualResult {
    /// JSON mirroring the star run plus the duality fields.
    pub fn to_json(&self, g: &Graph) -> serde_json::Value {
        let eta: serde_json::Map<String, serde_json::Value> = (0..g.num_edges())
            .map(|k| (g.edge_name(k), json!(self.eta_star.value(k))))
            .collect();
        let sigma_hat: serde_json::Map<String, serde_json::Value> = (0..g.num_edges())
            .map(|k| (g.edge_name(k), json!(self.sigma_hat[k])))
            .collect();
        json!({
            "modulus": self.primal_modulus,
            "p": self.p,
            "q": self.q,
            "rho": eta,
            "sigma_hat": sigma_hat,
            "eta_star": self.eta_star.as_edge_vector().as_slice(),
            "product_deviation": self.product_deviation,
            "dual": self.dual_run.to_json(g),
        })
    }
}

/// Computes the fractional-edge-cover modulus through the star family:
/// solve the stars at the conjugate exponent under dual weights, invert
/// through the reciprocal identity, and map the star extremal density to
/// the fec extremal density.
pub fn fec_modulus_via_stars(
    g: &Graph,
    p: f64,
    sigma: &EdgeVector,
    tol: f64,
) -> Result<DualResult> {
    let q = conjugate_exponent(p)?;
    if sigma.len() != g.num_edges() {
        return Err(Error::Dimension { expected: g.num_edges(), actual: sigma.len() });
    }
    let sigma_hat = dual_weights(sigma, p)?;
    let family = star_family(g)?;
    let star = basic_algorithm(&family, q, &sigma_hat, tol)?;
    let primal_modulus = star.modulus.powf(-p / q);
    let eta: Vec<f64> = (0..g.num_edges())
        .map(|e| sigma_hat[e] * star.rho_star.value(e).powf(q - 1.0) / star.modulus)
        .collect();
    let eta_star = Density::new(g, EdgeVector::from_vec(eta))?;
    let product_deviation =
        (primal_modulus.powf(1.0 / p) * star.modulus.powf(1.0 / q) - 1.0).abs();
    Ok(DualResult {
        primal_modulus,
        dual_modulus: star.modulus,
        p,
        q,
        sigma_hat,
        eta_star,
        dual_run: star,
        product_deviation,
    })
}

/// Both sides of the reciprocal identity, computed independently.
#[derive(Debug, Clone, Serialize)]
pub struct ReciprocalReport {
    pub family: String,
    pub dual_family: String,
    pub p: f64,
    pub q: f64,
    pub primal_modulus: Option<f64>,
    pub dual_modulus: Option<f64>,
    /// primal^(1/p) * dual^(1/q); 1 when the families are true blocking duals.
    pub product: Option<f64>,
    pub deviation: Option<f64>,
    pub error: Option<String>,
}

/// Solves `family` at (p, sigma) and `dual_family` at (q, sigma_hat) and
/// reports the deviation of the reciprocal product from 1. Solver failures
/// are carried in the report instead of being raised.
pub fn verify_reciprocal(
    g: &Graph,
    family: &dyn Family,
    dual_family: &dyn Family,
    p: f64,
    sigma: &EdgeVector,
    tol: f64,
) -> ReciprocalReport {
    let mut report = ReciprocalReport {
        family: family.name().to_string(),
        dual_family: dual_family.name().to_string(),
        p,
        q: f64::NAN,
        primal_modulus: None,
        dual_modulus: None,
        product: None,
        deviation: None,
        error: None,
    };
    let run = || -> Result<(f64, f64, f64)> {
        let q = conjugate_exponent(p)?;
        if sigma.len() != g.num_edges() {
            return Err(Error::Dimension { expected: g.num_edges(), actual: sigma.len() });
        }
        let sigma_hat = dual_weights(sigma, p)?;
        let primal = basic_algorithm(family, p, sigma, tol)?;
        let dual = basic_algorithm(dual_family, q, &sigma_hat, tol)?;
        Ok((q, primal.modulus, dual.modulus))
    };
    match run() {
        Ok((q, primal, dual)) => {
            report.q = q;
            report.primal_modulus = Some(primal);
            report.dual_modulus = Some(dual);
            let product = primal.powf(1.0 / p) * dual.powf(1.0 / q);
            report.product = Some(product);
            report.deviation = Some((product - 1.0).abs());
        }
        Err(e) => report.error = Some(e.to_string()),
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::basic_fec_family;
    use crate::graph::StandardKind;
    use crate::solver::DEFAULT_TOL;

    #[test]
    fn dual_weight_examples() {
        let ones = EdgeVector::constant(4, 1.0);
        assert_eq!(dual_weights(&ones, 2.0).unwrap().as_slice(), &[1.0; 4]);

        let sigma = EdgeVector::from_vec(vec![2.0, 4.0]);
        let hat = dual_weights(&sigma, 2.0).unwrap();
        assert!((hat[0] - 0.5).abs() < 1e-15);
        assert!((hat[1] - 0.25).abs() < 1e-15);

        let sigma = EdgeVector::from_vec(vec![8.0]);
        let hat = dual_weights(&sigma, 3.0).unwrap();
        assert!((hat[0] - 8.0_f64.powf(-0.5)).abs() < 1e-15);

        assert!(dual_weights(&ones, 1.0).is_err());
    }

    #[test]
    fn dual_weights_invert_under_conjugate() {
        let sigma = EdgeVector::from_vec(vec![0.5, 1.0, 3.25, 7.0]);
        for p in [1.5, 2.0, 3.0] {
            let q = conjugate_exponent(p).unwrap();
            let hat = dual_weights(&sigma, p).unwrap();
            let back = dual_weights(&hat, q).unwrap();
            for (orig, b) in sigma.iter().zip(back.iter()) {
                assert!((orig - b).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn fec_modulus_on_k5_and_c7() {
        let k5 = Graph::standard(StandardKind::Complete, 5).unwrap();
        let res = fec_modulus_via_stars(&k5, 2.0, &k5.unit_weights(), DEFAULT_TOL).unwrap();
        assert!((res.primal_modulus - 1.6).abs() < 1e-7);
        // eta = 2/n on the complete graph.
        for e in 0..k5.num_edges() {
            assert!((res.eta_star.value(e) - 0.4).abs() < 1e-7);
        }

        let c7 = Graph::standard(StandardKind::Cycle, 7).unwrap();
        let res = fec_modulus_via_stars(&c7, 2.0, &c7.unit_weights(), DEFAULT_TOL).unwrap();
        assert!((res.primal_modulus - 4.0 / 7.0).abs() < 1e-7);
    }

    #[test]
    fn reciprocal_star_vs_enumerated_fec() {
        for (kind, n) in [(StandardKind::Cycle, 6), (StandardKind::Complete, 6)] {
            let g = Graph::standard(kind, n).unwrap();
            let stars = star_family(&g).unwrap();
            let fec = basic_fec_family(&g).unwrap();
            let report =
                verify_reciprocal(&g, &stars, &fec, 2.0, &g.unit_weights(), DEFAULT_TOL);
            assert!(report.error.is_none(), "{:?}", report.error);
            assert!(report.deviation.unwrap() < 1e-6, "{report:?}");
        }
    }

    #[test]
    fn one_infinity_helper() {
        assert_eq!(infinity_modulus_from_one(4.0).unwrap(), 0.25);
        assert!(infinity_modulus_from_one(0.0).is_err());
    }
}
