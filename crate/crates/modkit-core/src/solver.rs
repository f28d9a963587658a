//! The p-energy objective and the active-set algorithm computing the
//! p-modulus, the extremal density, and constraint multipliers.
//!
//! The restricted problem over the active rows
//!
//! ```text
//!     minimize   sum_e sigma(e) rho(e)^p
//!     subject to rho >= 0,  N rho >= 1
//! ```
//!
//! is solved through its smooth concave dual: with a = N^T lambda the
//! stationary density is rho(e) = (a(e) / (p sigma(e)))^(1/(p-1)), the dual
//! gradient is 1 - N rho(lambda), and a projected, damped Newton ascent on
//! lambda >= 0 drives the KKT residual below the requested tolerance. The
//! returned density therefore satisfies stationarity by construction and
//! complementary slackness up to the tolerance.

use serde::Serialize;
use serde_json::json;

use crate::error::{Error, Result};
use crate::families::{Family, UsageRow};
use crate::graph::{EdgeVector, Graph};

/// Default constraint-violation tolerance of the active-set loop.
pub const DEFAULT_TOL: f64 = 1e-8;

/// A nonnegative vector on edges.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Density {
    rho: EdgeVector,
}

impl Density {
    pub fn new(g: &Graph, rho: EdgeVector) -> Result<Density> {
        if rho.len() != g.num_edges() {
            return Err(Error::Dimension { expected: g.num_edges(), actual: rho.len() });
        }
        Self::from_vector(rho)
    }

    pub fn from_vector(rho: EdgeVector) -> Result<Density> {
        if rho.iter().any(|x| x < 0.0 || !x.is_finite()) {
            return Err(Error::Domain("density entries must be nonnegative and finite".into()));
        }
        Ok(Density { rho })
    }

    pub fn zeros(g: &Graph) -> Density {
        Density { rho: EdgeVector::zeros(g.num_edges()) }
    }

    pub fn constant(g: &Graph, value: f64) -> Density {
        assert!(value >= 0.0);
        Density { rho: EdgeVector::constant(g.num_edges(), value) }
    }

    pub fn as_edge_vector(&self) -> &EdgeVector {
        &self.rho
    }

    pub fn len(&self) -> usize {
        self.rho.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rho.is_empty()
    }

    pub fn value(&self, edge: usize) -> f64 {
        self.rho[edge]
    }
}

/// Solver output: the modulus, the extremal density, and the active
/// constraints with their nonnegative multipliers.
#[derive(Debug, Clone)]
pub struct ModulusResult {
    pub modulus: f64,
    pub rho_star: Density,
    pub active_rows: Vec<UsageRow>,
    pub lambda: Vec<f64>,
    pub p: f64,
    pub sigma: EdgeVector,
    pub iterations: usize,
    pub tolerance_used: f64,
}

impl ModulusResult {
    /// Worst violation among stationarity, complementary slackness and
    /// primal feasibility of the active rows.
    pub fn max_kkt_violation(&self) -> f64 {
        let m = self.sigma.len();
        let mut worst = 0.0f64;
        for e in 0..m {
            let lhs = self.p * self.sigma[e] * self.rho_star.value(e).powf(self.p - 1.0);
            let rhs: f64 = self
                .active_rows
                .iter()
                .zip(&self.lambda)
                .map(|(row, &l)| l * row.usage[e])
                .sum();
            worst = worst.max((lhs - rhs).abs());
        }
        for (row, &l) in self.active_rows.iter().zip(&self.lambda) {
            let len = row.usage.dot(self.rho_star.as_edge_vector()).unwrap_or(f64::NAN);
            worst = worst.max(l * (len - 1.0).abs());
            worst = worst.max((1.0 - len).max(0.0));
        }
        worst
    }

    /// JSON form `{modulus, p, rho: {edge -> value}, active, lambda,
    /// iterations}`.
    pub fn to_json(&self, g: &Graph) -> serde_json::Value {
        let rho: serde_json::Map<String, serde_json::Value> = (0..g.num_edges())
            .map(|k| (g.edge_name(k), json!(self.rho_star.value(k))))
            .collect();
        json!({
            "modulus": self.modulus,
            "p": self.p,
            "rho": rho,
            "active": self.active_rows.iter().map(|r| &r.label).collect::<Vec<_>>(),
            "lambda": self.lambda,
            "iterations": self.iterations,
            "tolerance": self.tolerance_used,
        })
    }
}

/// The p-energy of a density: `sum sigma rho^p` for finite p, `max sigma
/// rho` for infinite p. Defined for p >= 1.
pub fn energy(rho: &Density, p: f64, sigma: &EdgeVector) -> Result<f64> {
    if !(p >= 1.0) {
        return Err(Error::Domain(format!("energy exponent must satisfy p >= 1, got {p}")));
    }
    if sigma.len() != rho.len() {
        return Err(Error::Dimension { expected: rho.len(), actual: sigma.len() });
    }
    if !sigma.iter().all(|s| s > 0.0) {
        return Err(Error::Domain("sigma must be strictly positive".into()));
    }
    if p.is_infinite() {
        return Ok(rho
            .as_edge_vector()
            .iter()
            .zip(sigma.iter())
            .map(|(r, s)| s * r)
            .fold(0.0, f64::max));
    }
    Ok(rho
        .as_edge_vector()
        .iter()
        .zip(sigma.iter())
        .map(|(r, s)| s * r.powf(p))
        .sum())
}

/// The rho-length of a row: inner product of its usage with rho.
pub fn rho_length(rho: &Density, row: &UsageRow) -> Result<f64> {
    row.usage.dot(rho.as_edge_vector())
}

struct DualState<'a> {
    rows: &'a [UsageRow],
    sigma: &'a [f64],
    p: f64,
    exp: f64,
    m: usize,
}

impl<'a> DualState<'a> {
    /// a = N^T lambda and the induced stationary density.
    fn density_of(&self, lambda: &[f64], a: &mut [f64], rho: &mut [f64]) {
        a.fill(0.0);
        for (row, &l) in self.rows.iter().zip(lambda) {
            if l != 0.0 {
                for (e, x) in row.usage.iter().enumerate() {
                    if x != 0.0 {
                        a[e] += l * x;
                    }
                }
            }
        }
        for e in 0..self.m {
            rho[e] = if a[e] <= 0.0 {
                0.0
            } else {
                (a[e] / (self.p * self.sigma[e])).powf(self.exp)
            };
        }
    }

    fn lengths(&self, rho: &[f64], lens: &mut [f64]) {
        for (i, row) in self.rows.iter().enumerate() {
            lens[i] = row.usage.iter().zip(rho.iter()).map(|(x, r)| x * r).sum();
        }
    }

    /// Dual objective; sum sigma rho^p equals (a . rho) / p at stationarity.
    fn objective(&self, lambda: &[f64], a: &[f64], rho: &[f64]) -> f64 {
        let lam_sum: f64 = lambda.iter().sum();
        let energy: f64 = a.iter().zip(rho.iter()).map(|(ai, ri)| ai * ri).sum::<f64>() / self.p;
        lam_sum - (self.p - 1.0) * energy
    }

    /// Curvature weights c_e of the dual Hessian S = N diag(c) N^T.
    fn curvature(&self, a: &[f64], rho: &[f64], c: &mut [f64]) {
        let a_floor = if self.p > 2.0 {
            1e-12 * a.iter().copied().fold(0.0, f64::max)
        } else {
            0.0
        };
        for e in 0..self.m {
            let denom = (self.p - 1.0) * self.p * self.sigma[e];
            c[e] = if a[e] <= a_floor {
                if self.p == 2.0 {
                    1.0 / denom
                } else if self.p < 2.0 {
                    rho[e].powf(2.0 - self.p) / denom
                } else {
                    0.0
                }
            } else {
                rho[e].powf(2.0 - self.p) / denom
            };
        }
    }
}

/// Dense Cholesky factorization; fails on a non-positive pivot.
fn cholesky_solve(s: &mut [f64], n: usize, rhs: &mut [f64]) -> bool {
    for j in 0..n {
        let mut d = s[j * n + j];
        for t in 0..j {
            d -= s[j * n + t] * s[j * n + t];
        }
        if d <= 0.0 || !d.is_finite() {
            return false;
        }
        let d = d.sqrt();
        s[j * n + j] = d;
        for i in (j + 1)..n {
            let mut v = s[i * n + j];
            for t in 0..j {
                v -= s[i * n + t] * s[j * n + t];
            }
            s[i * n + j] = v / d;
        }
    }
    for i in 0..n {
        let mut v = rhs[i];
        for t in 0..i {
            v -= s[i * n + t] * rhs[t];
        }
        rhs[i] = v / s[i * n + i];
    }
    for i in (0..n).rev() {
        let mut v = rhs[i];
        for t in (i + 1)..n {
            v -= s[t * n + i] * rhs[t];
        }
        rhs[i] = v / s[i * n + i];
    }
    true
}

/// Exact minimizer of the restricted convex program over the given rows,
/// with KKT multipliers. The tolerance bounds the KKT residual.
pub fn solve_subproblem(
    active: &[UsageRow],
    p: f64,
    sigma: &EdgeVector,
    tol: f64,
) -> Result<(Density, Vec<f64>)> {
    solve_subproblem_warm(active, p, sigma, tol, None)
}

pub(crate) fn solve_subproblem_warm(
    active: &[UsageRow],
    p: f64,
    sigma: &EdgeVector,
    tol: f64,
    warm: Option<Vec<f64>>,
) -> Result<(Density, Vec<f64>)> {
    if active.is_empty() {
        return Err(Error::Domain("subproblem needs at least one active row".into()));
    }
    if !(p > 1.0) || !p.is_finite() {
        return Err(Error::Domain(format!("solver exponent must lie in (1, inf), got {p}")));
    }
    if !(tol > 0.0) {
        return Err(Error::Domain("tolerance must be positive".into()));
    }
    if !sigma.iter().all(|s| s > 0.0 && s.is_finite()) {
        return Err(Error::Domain("sigma must be strictly positive".into()));
    }
    let m = sigma.len();
    for row in active {
        if row.usage.len() != m {
            return Err(Error::Dimension { expected: m, actual: row.usage.len() });
        }
        if !row.usage.iter().any(|x| x > 0.0) {
            return Err(Error::Domain("active row must be nontrivial".into()));
        }
    }
    let k = active.len();
    let state = DualState {
        rows: active,
        sigma: sigma.as_slice(),
        p,
        exp: 1.0 / (p - 1.0),
        m,
    };

    let mut lambda = match warm {
        Some(w) if w.len() == k => w,
        _ => vec![1.0; k],
    };
    let mut a = vec![0.0; m];
    let mut rho = vec![0.0; m];
    let mut lens = vec![0.0; k];
    let mut c = vec![0.0; m];
    let mut grad = vec![0.0; k];

    let mut a_new = vec![0.0; m];
    let mut rho_new = vec![0.0; m];

    let mut mu = 1e-10;
    let max_iter = 600 + 30 * k;

    state.density_of(&lambda, &mut a, &mut rho);
    let mut obj = state.objective(&lambda, &a, &rho);

    for _iter in 0..max_iter {
        state.lengths(&rho, &mut lens);
        let mut kkt = 0.0f64;
        for i in 0..k {
            grad[i] = 1.0 - lens[i];
            let viol = if lambda[i] > 0.0 { grad[i].abs() } else { grad[i].max(0.0) };
            kkt = kkt.max(viol);
        }
        if kkt <= tol {
            let rho = Density::from_vector(EdgeVector::from_vec(rho))?;
            return Ok((rho, lambda));
        }

        // Two-metric projection: Newton on the free variables, gradient on
        // the rest.
        let free: Vec<usize> = (0..k).filter(|&i| lambda[i] > 0.0 || grad[i] > 0.0).collect();
        state.curvature(&a, &rho, &mut c);

        let nf = free.len();
        let mut accepted = false;
        while !accepted {
            let mut s = vec![0.0f64; nf * nf];
            for (fi, &i) in free.iter().enumerate() {
                for (fj, &j) in free.iter().enumerate().skip(fi) {
                    let mut v = 0.0;
                    for e in 0..m {
                        let xi = active[i].usage[e];
                        if xi != 0.0 {
                            let xj = active[j].usage[e];
                            if xj != 0.0 {
                                v += xi * xj * c[e];
                            }
                        }
                    }
                    s[fi * nf + fj] = v;
                    s[fj * nf + fi] = v;
                }
            }
            let diag_scale = (0..nf)
                .map(|i| s[i * nf + i])
                .fold(0.0f64, f64::max)
                .max(1e-300);
            for i in 0..nf {
                s[i * nf + i] += mu * diag_scale;
            }
            let mut d = free.iter().map(|&i| grad[i]).collect::<Vec<f64>>();
            if !cholesky_solve(&mut s, nf, &mut d) {
                mu = (mu * 10.0).min(1e16);
                if mu >= 1e16 {
                    return Err(Error::Solver("subproblem Hessian factorization failed".into()));
                }
                continue;
            }

            // Backtracking line search along the projection arc.
            let mut t = 1.0f64;
            for _bt in 0..60 {
                let mut lambda_new = lambda.clone();
                for (fi, &i) in free.iter().enumerate() {
                    lambda_new[i] = (lambda[i] + t * d[fi]).max(0.0);
                }
                let moved: f64 = (0..k)
                    .map(|i| grad[i] * (lambda_new[i] - lambda[i]))
                    .sum();
                if moved <= 0.0 {
                    break;
                }
                state.density_of(&lambda_new, &mut a_new, &mut rho_new);
                let obj_new = state.objective(&lambda_new, &a_new, &rho_new);
                if obj_new >= obj + 1e-4 * moved {
                    lambda = lambda_new;
                    std::mem::swap(&mut a, &mut a_new);
                    std::mem::swap(&mut rho, &mut rho_new);
                    obj = obj_new;
                    accepted = true;
                    mu = (mu / 3.0).max(1e-12);
                    break;
                }
                t *= 0.5;
            }
            if !accepted {
                mu *= 10.0;
                if mu > 1e16 {
                    return Err(Error::Solver("subproblem line search stalled".into()));
                }
            }
        }
    }
    Err(Error::Solver(format!(
        "subproblem did not reach tolerance {tol} within {max_iter} iterations"
    )))
}

/// Active-set computation of the p-modulus of a family.
///
/// Starting from the shortest object at rho = 0, repeatedly solve the
/// restricted problem over the active rows and append the family's
/// rho-shortest object until its length reaches `1 - tol`. Since the
/// shortest oracle is exact, the exit test certifies that the final density
/// is admissible for the whole family up to the tolerance.
pub fn basic_algorithm(
    family: &dyn Family,
    p: f64,
    sigma: &EdgeVector,
    tol: f64,
) -> Result<ModulusResult> {
    if !(p > 1.0) || !p.is_finite() {
        return Err(Error::Domain(format!("solver exponent must lie in (1, inf), got {p}")));
    }
    if !(tol > 0.0) {
        return Err(Error::Domain("tolerance must be positive".into()));
    }
    let g = family.graph();
    if sigma.len() != g.num_edges() {
        return Err(Error::Dimension { expected: g.num_edges(), actual: sigma.len() });
    }
    if !sigma.iter().all(|s| s > 0.0 && s.is_finite()) {
        return Err(Error::Domain("sigma must be strictly positive".into()));
    }

    let subproblem_tol = tol / 10.0;
    let (first, _) = family.shortest(&Density::zeros(g))?;
    let mut active = vec![first];
    let mut fingerprints: Vec<Vec<u64>> = vec![active[0].fingerprint()];
    let mut warm: Option<Vec<f64>> = None;
    let mut iterations = 0usize;

    const MAX_OUTER: usize = 20_000;
    loop {
        iterations += 1;
        if iterations > MAX_OUTER {
            return Err(Error::Solver(format!(
                "active-set loop exceeded {MAX_OUTER} iterations"
            )));
        }
        let (rho, lambda) = solve_subproblem_warm(&active, p, sigma, subproblem_tol, warm.take())?;
        let (row, len) = family.shortest(&rho)?;
        if len >= 1.0 - tol {
            let modulus = energy(&rho, p, sigma)?;
            return Ok(ModulusResult {
                modulus,
                rho_star: rho,
                active_rows: active,
                lambda,
                p,
                sigma: sigma.clone(),
                iterations,
                tolerance_used: tol,
            });
        }
        let fp = row.fingerprint();
        if fingerprints.contains(&fp) {
            return Err(Error::Solver(
                "stalled: shortest object repeated while still violated".into(),
            ));
        }
        fingerprints.push(fp);
        active.push(row);
        let mut w = lambda;
        w.push(0.0);
        warm = Some(w);
    }
}
