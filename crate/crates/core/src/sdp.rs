//! ADMM solver for the three semidefinite programs: the Lovasz theta number
//! in the trace-normalized form max <J,B> s.t. tr B = 1, B[u,v] = 0 on edges,
//! B PSD; and the strict/relaxed vector coloring programs min t s.t. M PSD,
//! unit diagonal, edge entries equal to t (strict) or at most t (relaxed),
//! with kappa = 1 - 1/t.
//!
//! Every certified witness is feasibility-backed: the returned Gram matrix
//! satisfies its constraints to machine precision after an alternating
//! projection polish, so theta values are true lower bounds on the SDP
//! optimum and coloring values are true upper bounds.

use crate::error::Result;
use crate::graph::Graph;
use crate::linalg::{eigen, gram_factor, psd_project_with_min, SymMatrix};
use crate::scalar::Scalar;
use crate::PSD_TOL;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

/// ADMM parameters. `penalty` is the initial step and is self-tuned by
/// primal/dual residual balancing.
#[derive(Clone, Debug)]
pub struct SolverConfig<T> {
    pub tolerance: T,
    pub max_iterations: usize,
    pub penalty: T,
    pub seed: u64,
}

impl<T: Scalar> Default for SolverConfig<T> {
    fn default() -> Self {
        SolverConfig {
            tolerance: T::real(1e-7),
            max_iterations: 50_000,
            penalty: T::one(),
            seed: 0,
        }
    }
}

/// Which SDP a witness certifies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WitnessKind {
    Theta,
    StrictVectorColoring,
    VectorColoring,
}

/// Certified SDP solution: the optimum value together with a unit-diagonal
/// Gram matrix, its factorization into vectors, and measured residuals.
#[derive(Clone, Debug)]
pub struct GramWitness<T> {
    pub kind: WitnessKind,
    pub value: T,
    pub gram: SymMatrix<T>,
    pub vectors: Vec<Vec<T>>,
    /// Max violation of the defining edge/diagonal constraints.
    pub primal_residual: T,
    /// Most negative eigenvalue of the Gram matrix, clamped at zero.
    pub psd_residual: T,
    pub iterations: usize,
    pub certified: bool,
}

/// Residuals recomputed from a witness, independent of the solve path.
#[derive(Clone, Debug)]
pub struct WitnessReport<T> {
    pub psd_residual: T,
    pub diag_residual: T,
    pub constraint_residual: T,
    /// Largest eigenvalue of the Gram matrix (theta witnesses only).
    pub lambda1: Option<T>,
    /// Sampled max over random unit x of sum_v <x, x_v>^2 (theta only).
    pub sampled_quadratic_max: Option<T>,
    pub ok: bool,
}

enum Form {
    /// max <J,B>: tr B = 1, B zero on edges.
    Theta,
    /// min t: unit diagonal, all edge entries equal t.
    Strict,
    /// min t: unit diagonal, all edge entries <= t.
    Relax,
}

/// Lovasz theta of `g` itself (classical theta: for the complement bound
/// use `solve_theta(&g.complement(), ..)`).
pub fn solve_theta<T: Scalar>(g: &Graph, cfg: &SolverConfig<T>) -> GramWitness<T> {
    let n = g.n();
    if n == 0 {
        return trivial_witness(WitnessKind::Theta, T::zero(), SymMatrix::zeros(0));
    }
    let out = admm(g, Form::Theta, cfg);
    finish_theta(g, out)
}

/// Strict vector chromatic number of `g`: minimal kappa >= 2 with unit
/// vectors whose inner product is exactly -1/(kappa-1) on every edge.
/// Equals the Lovasz theta of the complement.
pub fn solve_strict_vector_coloring<T: Scalar>(g: &Graph, cfg: &SolverConfig<T>) -> GramWitness<T> {
    solve_coloring(g, cfg, false)
}

/// Vector chromatic number of `g`: edge inner products at most -1/(kappa-1).
pub fn solve_vector_coloring<T: Scalar>(g: &Graph, cfg: &SolverConfig<T>) -> GramWitness<T> {
    solve_coloring(g, cfg, true)
}

fn solve_coloring<T: Scalar>(g: &Graph, cfg: &SolverConfig<T>, relaxed: bool) -> GramWitness<T> {
    let kind = if relaxed {
        WitnessKind::VectorColoring
    } else {
        WitnessKind::StrictVectorColoring
    };
    let n = g.n();
    // Edgeless graphs floor at kappa = 2; a single edge is met exactly by
    // antipodal unit vectors. Both cases are closed-form.
    if g.m() == 0 {
        return trivial_witness(kind, T::real(2.0), SymMatrix::identity(n));
    }
    if g.m() == 1 {
        let (u, v) = g.edges()[0];
        let mut m = SymMatrix::identity(n);
        m.set(u, v, -T::one());
        return trivial_witness(kind, T::real(2.0), m);
    }
    let form = if relaxed { Form::Relax } else { Form::Strict };
    let out = admm(g, form, cfg);
    finish_coloring(g, kind, out)
}

fn trivial_witness<T: Scalar>(kind: WitnessKind, value: T, gram: SymMatrix<T>) -> GramWitness<T> {
    let vectors = gram_factor(&gram).unwrap_or_default();
    GramWitness {
        kind,
        value,
        gram,
        vectors,
        primal_residual: T::zero(),
        psd_residual: T::zero(),
        iterations: 0,
        certified: true,
    }
}

/// A polished, exactly feasible Gram matrix plus the primal value it
/// certifies (lambda_1 for theta, the common/max edge value t for coloring).
struct Certificate<T> {
    gram: SymMatrix<T>,
    psd_residual: T,
    primal_value: T,
}

struct AdmmOutcome<T> {
    z: SymMatrix<T>,
    certificate: Option<Certificate<T>>,
    converged: bool,
    iterations: usize,
}

/// Scaled-form ADMM with over-relaxation and penalty self-tuning.
///
/// Stopping is certificate-based: once residuals are small and the objective
/// has stagnated, the current iterate is polished into an exactly feasible
/// point and compared against a dual bound recovered from the ADMM
/// multiplier; the solve only counts as converged when the two-sided gap
/// closes below 100x the configured tolerance.
fn admm<T: Scalar>(g: &Graph, form: Form, cfg: &SolverConfig<T>) -> AdmmOutcome<T> {
    let n = g.n();
    let edges = g.edges();
    let m_edges = edges.len();
    let inv_n = T::one() / T::real(n as f64);

    let mut x = match form {
        Form::Theta => {
            let mut x = SymMatrix::zeros(n);
            x.add_to_diagonal(inv_n);
            x
        }
        _ => SymMatrix::identity(n),
    };
    let mut z = x.clone();
    let mut u = SymMatrix::zeros(n);
    let mut rho = cfg.penalty;
    let alpha = T::real(1.6); // over-relaxation
    let mut iters = 0;

    let mut edge_buf: Vec<T> = vec![T::zero(); m_edges];
    // Residuals alone can pass while the objective still drifts at the
    // 1e-4 scale, so candidates also require the objective to stagnate.
    const STALL_WINDOW: usize = 50;
    const CANDIDATE_SPACING: usize = 250;
    let mut obj_window: Vec<T> = Vec::with_capacity(STALL_WINDOW);
    let mut obj_pos = 0usize;
    let mut next_candidate = 0usize;
    let gap_tol = T::real(100.0) * cfg.tolerance;

    for it in 0..cfg.max_iterations {
        iters = it + 1;
        // x-update: projection of Z - U (plus J/rho for theta) onto the
        // affine constraint set.
        x = z.clone();
        x.axpy(-T::one(), &u);
        let objective = match form {
            Form::Theta => {
                x.add_constant(T::one() / rho);
                for &(a, b) in &edges {
                    x.set(a, b, T::zero());
                }
                let shift = (x.trace() - T::one()) * inv_n;
                x.add_to_diagonal(-shift);
                x.sum_entries()
            }
            Form::Strict => {
                let sum: T = edges.iter().map(|&(a, b)| x.get(a, b)).sum();
                let t = (sum - T::one() / (T::real(2.0) * rho)) / T::real(m_edges as f64);
                for &(a, b) in &edges {
                    x.set(a, b, t);
                }
                for i in 0..n {
                    x.set(i, i, T::one());
                }
                t
            }
            Form::Relax => {
                for (slot, &(a, b)) in edge_buf.iter_mut().zip(edges.iter()) {
                    *slot = x.get(a, b);
                }
                let t = waterfill_threshold(&mut edge_buf, T::one() / (T::real(2.0) * rho));
                for &(a, b) in &edges {
                    let v = x.get(a, b);
                    if v > t {
                        x.set(a, b, t);
                    }
                }
                for i in 0..n {
                    x.set(i, i, T::one());
                }
                t
            }
        };
        let obj_stalled = if obj_window.len() < STALL_WINDOW {
            obj_window.push(objective);
            false
        } else {
            obj_window[obj_pos] = objective;
            obj_pos = (obj_pos + 1) % STALL_WINDOW;
            let lo = obj_window.iter().copied().fold(T::infinity(), T::min);
            let hi = obj_window.iter().copied().fold(T::neg_infinity(), T::max);
            hi - lo <= T::real(20.0) * cfg.tolerance * T::one().max(objective.abs())
        };
        // Over-relaxed z-update.
        let mut xr = x.clone();
        xr.scale(alpha);
        xr.axpy(T::one() - alpha, &z);
        let mut w = xr.clone();
        w.axpy(T::one(), &u);
        let z_new = match psd_project_with_min(&w) {
            Ok((p, _)) => p,
            Err(_) => break,
        };
        let primal = x.frob_dist(&z_new);
        let dual = rho * z_new.frob_dist(&z);
        u.axpy(T::one(), &xr);
        u.axpy(-T::one(), &z_new);
        z = z_new;

        let scale = T::one().max(x.frob_norm()).max(z.frob_norm());
        let residuals_ok = primal <= cfg.tolerance * scale && dual <= cfg.tolerance * scale;
        // The duality gap is the real convergence arbiter; candidates fire on
        // the fine residual trigger or periodically once roughly feasible.
        let roughly_feasible = primal <= T::real(1e-2) * scale;
        let periodic = it % CANDIDATE_SPACING == CANDIDATE_SPACING - 1;
        if ((residuals_ok && obj_stalled) || periodic) && roughly_feasible && it >= next_candidate
        {
            next_candidate = it + CANDIDATE_SPACING;
            if let Some(cert) = try_certify(g, &form, &z, &u, rho, gap_tol) {
                return AdmmOutcome {
                    z,
                    certificate: Some(cert),
                    converged: true,
                    iterations: iters,
                };
            }
        }
        // Residual balancing, factor 2, bounded.
        if it % 20 == 19 {
            let ten = T::real(10.0);
            if primal > ten * dual && rho < T::real(1e4) {
                rho *= T::real(2.0);
                u.scale(T::real(0.5));
            } else if dual > ten * primal && rho > T::real(1e-4) {
                rho *= T::real(0.5);
                u.scale(T::real(2.0));
            }
        }
    }
    AdmmOutcome {
        z,
        certificate: None,
        converged: false,
        iterations: iters,
    }
}

/// Polish the iterate into an exactly feasible point and accept it when the
/// gap to a dual bound recovered from the multiplier is below `gap_tol`.
fn try_certify<T: Scalar>(
    g: &Graph,
    form: &Form,
    z: &SymMatrix<T>,
    u: &SymMatrix<T>,
    rho: T,
    gap_tol: T,
) -> Option<Certificate<T>> {
    match form {
        Form::Theta => {
            let mut m = normalize_to_unit_diag(z, g);
            let psd_residual = polish_theta(g, &mut m).ok()?;
            if psd_residual > polish_target::<T>() {
                return None;
            }
            let lower = eigen(&m).ok()?.lambda_max();
            let upper = theta_dual_bound(g, u, rho)?;
            if upper - lower <= gap_tol {
                Some(Certificate {
                    gram: m,
                    psd_residual,
                    primal_value: lower,
                })
            } else {
                None
            }
        }
        Form::Strict | Form::Relax => {
            let relaxed = matches!(form, Form::Relax);
            let mut m = z.clone();
            let (psd_residual, t_up) = polish_coloring(g, &mut m, relaxed)?;
            if psd_residual > polish_target::<T>() {
                return None;
            }
            let t_low = coloring_dual_bound(g, u, rho, relaxed)?;
            // Compare in kappa space, where the reported value lives.
            let (k_up, up_ok) = kappa_from_t(t_up);
            let (k_low, low_ok) = kappa_from_t(t_low.min(-T::real(1e-9)));
            if up_ok && low_ok && k_up - k_low <= gap_tol {
                Some(Certificate {
                    gram: m,
                    psd_residual,
                    primal_value: t_up,
                })
            } else {
                None
            }
        }
    }
}

/// Dual bound for theta: for any Y supported on edges, lambda_1(J - Y) is an
/// upper bound; Y is read off the scaled ADMM multiplier.
fn theta_dual_bound<T: Scalar>(g: &Graph, u: &SymMatrix<T>, rho: T) -> Option<T> {
    let d = SymMatrix::from_fn(g.n(), |i, j| {
        if g.has_edge(i, j) {
            rho * u.get(i, j)
        } else {
            T::one()
        }
    });
    eigen(&d).ok().map(|e| e.lambda_max())
}

/// Dual bound for the coloring forms: t >= -sum(nu) for any diag nu and
/// edge-supported Y with diag(nu) + Y PSD and sum of edge weights 1/2
/// (weights nonnegative in the relaxed form). Read off the multiplier,
/// rescale to meet the weight constraint, and shift the diagonal PSD.
fn coloring_dual_bound<T: Scalar>(g: &Graph, u: &SymMatrix<T>, rho: T, relaxed: bool) -> Option<T> {
    let n = g.n();
    let edges = g.edges();
    let mut y: Vec<T> = edges
        .iter()
        .map(|&(a, b)| {
            let v = -rho * u.get(a, b);
            if relaxed {
                v.max(T::zero())
            } else {
                v
            }
        })
        .collect();
    let total: T = y.iter().copied().sum();
    if total <= T::real(1e-12) {
        return None;
    }
    let c = T::real(0.5) / total;
    for w in y.iter_mut() {
        *w *= c;
    }
    let mut s = SymMatrix::zeros(n);
    for i in 0..n {
        s.set(i, i, (-rho * u.get(i, i)).max(T::zero()));
    }
    for (&(a, b), &w) in edges.iter().zip(y.iter()) {
        s.set(a, b, w);
    }
    let lambda_min = eigen(&s).ok()?.lambda_min();
    let shift = (-lambda_min).max(T::zero());
    let nu_sum = s.trace() + shift * T::real(n as f64);
    Some(-nu_sum)
}

/// Minimizer of phi(t) = t + rho * sum_e (min(v_e, t) - v_e)^2, which is the
/// unique t with sum_{v_e > t} (v_e - t) = c; found by a descending scan.
fn waterfill_threshold<T: Scalar>(vals: &mut [T], c: T) -> T {
    vals.sort_by(|a, b| b.partial_cmp(a).unwrap());
    let mut prefix = T::zero();
    for k in 0..vals.len() {
        prefix += vals[k];
        let t = (prefix - c) / T::real((k + 1) as f64);
        if k + 1 == vals.len() || t >= vals[k + 1] {
            return t;
        }
    }
    -T::one()
}

const MAX_POLISH_ROUNDS: usize = 200;

fn polish_target<T: Scalar>() -> T {
    T::real(1e-9).max(T::epsilon() * T::real(50.0))
}

/// Alternating projections between the PSD cone and an affine set; ends on
/// the affine step and returns the measured PSD residual of the final point.
fn polish<T: Scalar>(
    m: &mut SymMatrix<T>,
    mut affine: impl FnMut(&mut SymMatrix<T>),
    rounds: usize,
) -> Result<T> {
    affine(m);
    let target = polish_target::<T>();
    let mut psd_res = T::zero();
    for _ in 0..rounds {
        let (projected, lambda_min) = psd_project_with_min(m)?;
        psd_res = (-lambda_min).max(T::zero());
        if psd_res <= target {
            break;
        }
        *m = projected;
        affine(m);
    }
    Ok(psd_res)
}

/// Scale B to a unit-diagonal Gram matrix; vertices with numerically zero
/// diagonal weight become isolated unit directions.
fn normalize_to_unit_diag<T: Scalar>(b: &SymMatrix<T>, g: &Graph) -> SymMatrix<T> {
    let n = b.dim();
    let max_diag = (0..n).fold(T::zero(), |acc, i| acc.max(b.get(i, i)));
    let support_tol = T::real(1e-10) * max_diag.max(T::epsilon());
    let scale: Vec<Option<T>> = (0..n)
        .map(|i| {
            let d = b.get(i, i);
            if d > support_tol {
                Some(T::one() / d.sqrt())
            } else {
                None
            }
        })
        .collect();
    let mut m = SymMatrix::zeros(n);
    for i in 0..n {
        m.set(i, i, T::one());
        for j in (i + 1)..n {
            let v = match (scale[i], scale[j]) {
                (Some(si), Some(sj)) if !g.has_edge(i, j) => b.get(i, j) * si * sj,
                _ => T::zero(),
            };
            m.set(i, j, v);
        }
    }
    m
}

/// Feasibility polish for a theta Gram matrix: edges exactly zero, unit
/// diagonal, PSD to the polish target. Returns the measured PSD residual.
fn polish_theta<T: Scalar>(g: &Graph, m: &mut SymMatrix<T>) -> Result<T> {
    let edges = g.edges();
    polish(
        m,
        |mat| {
            for &(a, b) in &edges {
                mat.set(a, b, T::zero());
            }
            for i in 0..mat.dim() {
                mat.set(i, i, T::one());
            }
        },
        MAX_POLISH_ROUNDS,
    )
}

/// Feasibility polish for a coloring Gram matrix; returns the PSD residual
/// and the certified edge value t (common value for strict, max for relaxed).
fn polish_coloring<T: Scalar>(g: &Graph, m: &mut SymMatrix<T>, relaxed: bool) -> Option<(T, T)> {
    let edges = g.edges();
    let max_edge = |mat: &SymMatrix<T>| {
        edges
            .iter()
            .map(|&(a, b)| mat.get(a, b))
            .fold(T::neg_infinity(), T::max)
    };
    if !relaxed {
        // The common edge value floats to the running mean during the polish.
        let m_edges = T::real(edges.len() as f64);
        let psd_residual = polish(
            m,
            |mat| {
                let mean: T = edges.iter().map(|&(a, b)| mat.get(a, b)).sum::<T>() / m_edges;
                for &(a, b) in &edges {
                    mat.set(a, b, mean);
                }
                for i in 0..mat.dim() {
                    mat.set(i, i, T::one());
                }
            },
            MAX_POLISH_ROUNDS,
        )
        .ok()?;
        let t = m.get(edges[0].0, edges[0].1);
        return Some((psd_residual, t));
    }
    // Relaxed form: cap edges at the iterate's threshold; widen the cap if
    // the polish stalls because the cap undershot the true optimum.
    let t_start = max_edge(m);
    let mut slack = T::zero();
    loop {
        let cap = t_start + slack;
        let mut candidate = m.clone();
        let psd_residual = polish(
            &mut candidate,
            |mat| {
                for &(a, b) in &edges {
                    let v = mat.get(a, b);
                    if v > cap {
                        mat.set(a, b, cap);
                    }
                }
                for i in 0..mat.dim() {
                    mat.set(i, i, T::one());
                }
            },
            60,
        )
        .ok()?;
        if psd_residual <= polish_target::<T>() || slack > T::real(1e-4) {
            let t = max_edge(&candidate);
            *m = candidate;
            return Some((psd_residual, t));
        }
        slack = if slack == T::zero() {
            T::real(1e-9)
        } else {
            slack * T::real(10.0)
        };
    }
}

fn finish_theta<T: Scalar>(g: &Graph, out: AdmmOutcome<T>) -> GramWitness<T> {
    let (m, psd_residual, value) = match out.certificate {
        Some(cert) => (cert.gram, cert.psd_residual, cert.primal_value),
        None => {
            let mut m = normalize_to_unit_diag(&out.z, g);
            let psd_residual = polish_theta(g, &mut m).unwrap_or_else(|_| T::infinity());
            let value = eigen(&m).map(|e| e.lambda_max()).unwrap_or_else(|_| T::nan());
            (m, psd_residual, value)
        }
    };
    let vectors = gram_factor(&m).unwrap_or_default();
    let certified = out.converged && psd_residual <= T::real(PSD_TOL) && value.is_finite();
    GramWitness {
        kind: WitnessKind::Theta,
        value,
        gram: m,
        vectors,
        primal_residual: T::zero(),
        psd_residual,
        iterations: out.iterations,
        certified,
    }
}

fn finish_coloring<T: Scalar>(g: &Graph, kind: WitnessKind, out: AdmmOutcome<T>) -> GramWitness<T> {
    let relaxed = kind == WitnessKind::VectorColoring;
    let (m, psd_residual, t_final) = match out.certificate {
        Some(cert) => (cert.gram, cert.psd_residual, cert.primal_value),
        None => {
            let mut m = out.z.clone();
            match polish_coloring(g, &mut m, relaxed) {
                Some((res, t)) => (m, res, t),
                None => (out.z, T::infinity(), T::nan()),
            }
        }
    };
    let (value, sane) = kappa_from_t(t_final);
    let vectors = gram_factor(&m).unwrap_or_default();
    let certified = out.converged && sane && psd_residual <= T::real(PSD_TOL);
    GramWitness {
        kind,
        value,
        gram: m,
        vectors,
        primal_residual: T::zero(),
        psd_residual,
        iterations: out.iterations,
        certified,
    }
}

/// kappa = 1 - 1/t for the common edge value t, floored at 2 (the definition
/// requires kappa >= 2; the optimum dips below only through rounding).
fn kappa_from_t<T: Scalar>(t: T) -> (T, bool) {
    if t >= -T::real(1e-9) || !t.is_finite() {
        return (T::real(2.0), false);
    }
    ((T::one() - T::one() / t).max(T::real(2.0)), true)
}

/// Recompute residuals of a witness against the defining SDP of `kind`;
/// for theta also reports lambda_1 and a sampled statement-2 maximum.
pub fn validate_witness<T: Scalar>(
    w: &GramWitness<T>,
    g: &Graph,
    kind: WitnessKind,
    seed: u64,
) -> WitnessReport<T> {
    let n = g.n();
    let m = &w.gram;
    let mut diag_residual = T::zero();
    for i in 0..n {
        diag_residual = diag_residual.max((m.get(i, i) - T::one()).abs());
    }
    let spectrum = eigen(m).ok();
    let psd_residual = spectrum
        .as_ref()
        .map(|e| (-e.lambda_min()).max(T::zero()))
        .unwrap_or_else(T::infinity);

    let mut constraint_residual = T::zero();
    let mut lambda1 = None;
    let mut sampled = None;
    match kind {
        WitnessKind::Theta => {
            for (u, v) in g.edges() {
                constraint_residual = constraint_residual.max(m.get(u, v).abs());
            }
            lambda1 = Some(
                spectrum
                    .as_ref()
                    .map(|e| e.lambda_max())
                    .unwrap_or_else(T::nan),
            );
            sampled = Some(sample_statement_two(&w.vectors, seed));
        }
        WitnessKind::StrictVectorColoring | WitnessKind::VectorColoring => {
            let t = -T::one() / (w.value - T::one());
            for (u, v) in g.edges() {
                let dev = if kind == WitnessKind::StrictVectorColoring {
                    (m.get(u, v) - t).abs()
                } else {
                    (m.get(u, v) - t).max(T::zero())
                };
                constraint_residual = constraint_residual.max(dev);
            }
        }
    }

    let mut ok = psd_residual <= T::real(PSD_TOL)
        && diag_residual <= T::real(PSD_TOL)
        && constraint_residual <= T::real(1e-6);
    if let Some(s) = sampled {
        ok = ok && s <= w.value + T::real(1e-3);
    }
    WitnessReport {
        psd_residual,
        diag_residual,
        constraint_residual,
        lambda1,
        sampled_quadratic_max: sampled,
        ok,
    }
}

/// Sampled version of theta's second characterization: max over unit x of
/// sum_v <x, x_v>^2, estimated over seeded random unit directions.
fn sample_statement_two<T: Scalar>(vectors: &[Vec<T>], seed: u64) -> T {
    let dim = vectors.first().map(Vec::len).unwrap_or(0);
    if dim == 0 {
        return T::zero();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5a11_ce11);
    let mut best = T::zero();
    for _ in 0..200 {
        let mut x: Vec<T> = (0..dim)
            .map(|_| T::real(StandardNormal.sample(&mut rng)))
            .collect();
        let norm = x.iter().map(|&v| v * v).sum::<T>().sqrt();
        if norm == T::zero() {
            continue;
        }
        for v in x.iter_mut() {
            *v /= norm;
        }
        let total: T = vectors
            .iter()
            .map(|xv| {
                let dot: T = xv.iter().zip(x.iter()).map(|(&a, &b)| a * b).sum();
                dot * dot
            })
            .sum();
        best = best.max(total);
    }
    best
}
