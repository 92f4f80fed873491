//! Exact MaxCut for small graphs by Gray-code enumeration, surplus and
//! Edwards-bound arithmetic, and Goemans-Williamson hyperplane rounding with
//! the arcsin guarantee.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::scalar::Scalar;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

const MAXCUT_MAX_N: usize = 30;

/// Vertex bipartition: bit v of `side_mask` set means v is on the A side.
/// The surplus is cut_size - m/2 for the graph the cut was computed on.
#[derive(Clone, Debug, PartialEq)]
pub struct Cut {
    pub side_mask: u64,
    pub cut_size: usize,
    pub surplus: f64,
}

impl Cut {
    /// Recount the cut size against `g` (consistency check).
    pub fn recount(&self, g: &Graph) -> usize {
        g.edges()
            .iter()
            .filter(|&&(u, v)| (self.side_mask >> u ^ self.side_mask >> v) & 1 == 1)
            .count()
    }
}

/// Outcome of randomized hyperplane rounding.
#[derive(Clone, Debug)]
pub struct RoundingOutcome<T> {
    pub best_cut: Cut,
    pub trials: usize,
    pub empirical_mean_cut: T,
    /// Sum over edges of arccos(<x_u,x_v>)/pi, the exact expected cut size.
    pub closed_form_expected_cut: T,
    /// The arcsin lower bound on the surplus for the same vectors.
    pub arcsin_bound: T,
}

/// Optimal cut via enumeration of the 2^(n-1) bipartitions with vertex 0
/// pinned to the A side; Gray-code order makes each step a single vertex
/// flip with an O(1) popcount update. Among optima the lowest mask wins.
pub fn exact_maxcut(g: &Graph) -> Result<Cut> {
    let n = g.n();
    if n > MAXCUT_MAX_N {
        return Err(Error::SizeLimit {
            what: "exact_maxcut",
            n,
            max: MAXCUT_MAX_N,
        });
    }
    let half_m = g.m() as f64 / 2.0;
    if n <= 1 {
        return Ok(Cut {
            side_mask: if n == 1 { 1 } else { 0 },
            cut_size: 0,
            surplus: -half_m,
        });
    }
    let full: u64 = (1u64 << n) - 1;
    let rows: Vec<u64> = (0..n).map(|v| g.row_word(v)).collect();
    let degs: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();

    let mut mask: u64 = 1;
    let mut cut = degs[0];
    let mut best_cut = cut;
    let mut best_mask = mask;
    for gcode in 1u64..1u64 << (n - 1) {
        let v = gcode.trailing_zeros() as usize + 1;
        let opposite = if mask >> v & 1 == 1 { !mask & full } else { mask };
        let cross = (rows[v] & opposite).count_ones() as usize;
        cut = cut + degs[v] - 2 * cross;
        mask ^= 1 << v;
        if cut > best_cut || (cut == best_cut && mask < best_mask) {
            best_cut = cut;
            best_mask = mask;
        }
    }
    Ok(Cut {
        side_mask: best_mask,
        cut_size: best_cut,
        surplus: best_cut as f64 - half_m,
    })
}

/// Edwards bound: every graph with m edges has surplus at least
/// (sqrt(8m+1) - 1)/8; tight for complete graphs on an odd vertex count.
pub fn edwards_bound(m: usize) -> f64 {
    ((8.0 * m as f64 + 1.0).sqrt() - 1.0) / 8.0
}

fn vector_norms<T: Scalar>(g: &Graph, vectors: &[Vec<T>]) -> Result<Vec<T>> {
    if vectors.len() != g.n() {
        return Err(Error::DimensionMismatch {
            expected: g.n(),
            got: vectors.len(),
        });
    }
    vectors
        .iter()
        .enumerate()
        .map(|(index, x)| {
            let norm = x.iter().map(|&v| v * v).sum::<T>().sqrt();
            if norm <= T::epsilon() {
                Err(Error::ZeroVector { index })
            } else {
                Ok(norm)
            }
        })
        .collect()
}

fn dot<T: Scalar>(a: &[T], b: &[T]) -> T {
    a.iter().zip(b.iter()).map(|(&x, &y)| x * y).sum()
}

fn clamp_unit<T: Scalar>(x: T) -> T {
    x.max(-T::one()).min(T::one())
}

/// Surplus lower bound -(1/pi) sum over edges of arcsin of the normalized
/// inner product; valid for any assignment of non-zero vectors.
pub fn arcsin_bound<T: Scalar>(g: &Graph, vectors: &[Vec<T>]) -> Result<T> {
    let norms = vector_norms(g, vectors)?;
    let mut total = T::zero();
    for (u, v) in g.edges() {
        let c = clamp_unit(dot(&vectors[u], &vectors[v]) / (norms[u] * norms[v]));
        total += c.asin();
    }
    Ok(-total / T::PI())
}

/// Linearized bound -(1/pi) sum over edges of the inner products, valid for
/// unit vectors with non-positive products on edges; never exceeds the
/// arcsin bound there because arcsin(x) <= x for x <= 0.
pub fn corollary_bound<T: Scalar>(g: &Graph, vectors: &[Vec<T>]) -> Result<T> {
    let norms = vector_norms(g, vectors)?;
    for (index, &norm) in norms.iter().enumerate() {
        if (norm - T::one()).abs() > T::real(1e-6) {
            return Err(Error::NonUnitVector {
                index,
                norm: norm.as_f64(),
            });
        }
    }
    let mut total = T::zero();
    for (u, v) in g.edges() {
        let p = dot(&vectors[u], &vectors[v]);
        if p > T::real(1e-9) {
            return Err(Error::PositiveEdgeInnerProduct {
                u,
                v,
                value: p.as_f64(),
            });
        }
        total += p;
    }
    Ok(-total / T::PI())
}

fn trial_seed(seed: u64, trial: u64) -> u64 {
    // splitmix64 of (seed, trial) so parallel and serial runs agree.
    let mut x = seed.wrapping_add(trial.wrapping_mul(0x9E37_79B9_7F4A_7C15));
    x = (x ^ (x >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    x ^ (x >> 31)
}

/// Random hyperplane rounding: per trial draw z with normalized Gaussian
/// coordinates and cut at A = { v : <x_v, z> >= 0 } (ties go to A).
pub fn gw_round<T: Scalar>(
    g: &Graph,
    vectors: &[Vec<T>],
    trials: usize,
    seed: u64,
) -> Result<RoundingOutcome<T>> {
    if trials == 0 {
        return Err(Error::ZeroTrials);
    }
    let n = g.n();
    if n > 64 {
        return Err(Error::SizeLimit {
            what: "gw_round",
            n,
            max: 64,
        });
    }
    let norms = vector_norms(g, vectors)?;
    let arcsin = arcsin_bound(g, vectors)?;
    let edges = g.edges();
    let dim = vectors.iter().map(Vec::len).max().unwrap_or(0);

    let mut closed_form = T::zero();
    for &(u, v) in &edges {
        let c = clamp_unit(dot(&vectors[u], &vectors[v]) / (norms[u] * norms[v]));
        closed_form += c.acos();
    }
    closed_form /= T::PI();

    let half_m = g.m() as f64 / 2.0;
    let mut total_cut = 0usize;
    let mut best: Option<(usize, u64)> = None;
    for trial in 0..trials {
        let mut rng = ChaCha8Rng::seed_from_u64(trial_seed(seed, trial as u64));
        let mut z = vec![T::zero(); dim];
        let mut norm = T::zero();
        for slot in z.iter_mut() {
            let v = T::real(StandardNormal.sample(&mut rng));
            *slot = v;
            norm += v * v;
        }
        let norm = norm.sqrt();
        if norm > T::zero() {
            for slot in z.iter_mut() {
                *slot /= norm;
            }
        }
        let mut mask = 0u64;
        for (v, x) in vectors.iter().enumerate() {
            if dot(x, &z[..x.len()]) >= T::zero() {
                mask |= 1 << v;
            }
        }
        let cut = edges
            .iter()
            .filter(|&&(u, v)| (mask >> u ^ mask >> v) & 1 == 1)
            .count();
        total_cut += cut;
        if best.as_ref().is_none_or(|&(bc, _)| cut > bc) {
            best = Some((cut, mask));
        }
    }
    let (best_size, best_mask) = best.unwrap();
    Ok(RoundingOutcome {
        best_cut: Cut {
            side_mask: best_mask,
            cut_size: best_size,
            surplus: best_size as f64 - half_m,
        },
        trials,
        empirical_mean_cut: T::real(total_cut as f64 / trials as f64),
        closed_form_expected_cut: closed_form,
        arcsin_bound: arcsin,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate::{complete, cycle, erdos_renyi, petersen};
    use approx::assert_abs_diff_eq;
    use std::f64::consts::PI;

    /// Oracle: recount every bipartition from scratch.
    fn maxcut_naive(g: &Graph) -> (usize, u64) {
        let n = g.n();
        let mut best = (0usize, u64::MAX);
        for mask in 0..1u64 << n {
            if n > 0 && mask & 1 == 0 {
                continue; // canonical side: vertex 0 in A
            }
            let cut = g
                .edges()
                .iter()
                .filter(|&&(u, v)| (mask >> u ^ mask >> v) & 1 == 1)
                .count();
            if cut > best.0 || (cut == best.0 && mask < best.1) {
                best = (cut, mask);
            }
        }
        best
    }

    /// Unit vectors at angles 4*pi*k/5: the optimal strict coloring of C_5.
    fn pentagram() -> Vec<Vec<f64>> {
        (0..5)
            .map(|k| {
                let a = 4.0 * PI * k as f64 / 5.0;
                vec![a.cos(), a.sin()]
            })
            .collect()
    }

    #[test]
    fn exact_maxcut_named_graphs() {
        let c = exact_maxcut(&complete(3)).unwrap();
        assert_eq!(c.cut_size, 2);
        assert_abs_diff_eq!(c.surplus, 0.5);

        let c = exact_maxcut(&cycle(5)).unwrap();
        assert_eq!(c.cut_size, 4);
        assert_abs_diff_eq!(c.surplus, 1.5);

        let c = exact_maxcut(&petersen()).unwrap();
        assert_eq!(c.cut_size, 12);
        assert_abs_diff_eq!(c.surplus, 4.5);

        let c = exact_maxcut(&complete(5)).unwrap();
        assert_eq!(c.cut_size, 6);
        assert_abs_diff_eq!(c.surplus, 1.0);
    }

    #[test]
    fn exact_maxcut_matches_naive_and_lex_least() {
        for seed in 0..8 {
            let g = erdos_renyi(9, 0.5, seed);
            let cut = exact_maxcut(&g).unwrap();
            let (best, mask) = maxcut_naive(&g);
            assert_eq!(cut.cut_size, best, "seed {seed}");
            assert_eq!(cut.side_mask, mask, "lexicographically least optimum");
            assert_eq!(cut.recount(&g), cut.cut_size);
        }
    }

    #[test]
    fn exact_maxcut_tiny_and_size_limit() {
        let c = exact_maxcut(&Graph::empty(0)).unwrap();
        assert_eq!((c.cut_size, c.side_mask), (0, 0));
        let c = exact_maxcut(&Graph::empty(1)).unwrap();
        assert_eq!((c.cut_size, c.side_mask), (0, 1));
        assert!(exact_maxcut(&Graph::empty(31)).is_err());
    }

    #[test]
    fn edwards_bound_values() {
        assert_abs_diff_eq!(edwards_bound(1), 0.25);
        assert_abs_diff_eq!(edwards_bound(3), 0.5);
        assert_abs_diff_eq!(edwards_bound(10), 1.0);
        assert_abs_diff_eq!(edwards_bound(0), 0.0);
    }

    #[test]
    fn edwards_tight_on_odd_complete() {
        for n in [3usize, 5, 7, 9] {
            let g = complete(n);
            let sp = exact_maxcut(&g).unwrap().surplus;
            assert_abs_diff_eq!(sp, edwards_bound(g.m()), epsilon = 1e-9);
        }
    }

    #[test]
    fn arcsin_bound_examples() {
        // Orthogonal vectors: bound 0.
        let basis: Vec<Vec<f64>> = (0..4)
            .map(|i| (0..4).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
            .collect();
        assert_abs_diff_eq!(arcsin_bound(&complete(4), &basis).unwrap(), 0.0);

        // Antipodal pair on K_2 matches sp exactly.
        let anti = vec![vec![1.0], vec![-1.0]];
        assert_abs_diff_eq!(arcsin_bound(&complete(2), &anti).unwrap(), 0.5, epsilon = 1e-12);

        // Pentagram on C_5: arcsin(cos(4pi/5)) = -3pi/10, so the bound is 1.5.
        assert_abs_diff_eq!(arcsin_bound(&cycle(5), &pentagram()).unwrap(), 1.5, epsilon = 1e-12);
    }

    #[test]
    fn arcsin_rejects_zero_vector() {
        let vs = vec![vec![1.0], vec![0.0]];
        assert!(matches!(
            arcsin_bound(&complete(2), &vs),
            Err(Error::ZeroVector { index: 1 })
        ));
    }

    #[test]
    fn corollary_bound_examples() {
        let anti = vec![vec![1.0], vec![-1.0]];
        assert_abs_diff_eq!(
            corollary_bound(&complete(2), &anti).unwrap(),
            1.0 / PI,
            epsilon = 1e-12
        );
        let c5 = cycle(5);
        let pent = pentagram();
        let cor = corollary_bound(&c5, &pent).unwrap();
        assert_abs_diff_eq!(cor, 5.0 * (5.0f64.sqrt() + 1.0) / 4.0 / PI, epsilon = 1e-12);
        // arcsin dominates the linearization on nonpositive products.
        assert!(cor <= arcsin_bound(&c5, &pent).unwrap() + 1e-9);
    }

    #[test]
    fn corollary_rejects_bad_inputs() {
        let long = vec![vec![2.0], vec![-1.0]];
        assert!(matches!(
            corollary_bound(&complete(2), &long),
            Err(Error::NonUnitVector { .. })
        ));
        let aligned = vec![vec![1.0], vec![1.0]];
        assert!(matches!(
            corollary_bound(&complete(2), &aligned),
            Err(Error::PositiveEdgeInnerProduct { .. })
        ));
    }

    #[test]
    fn gw_round_antipodal_always_cuts() {
        let anti = vec![vec![1.0], vec![-1.0]];
        let out = gw_round(&complete(2), &anti, 64, 3).unwrap();
        assert_eq!(out.best_cut.cut_size, 1);
        assert_abs_diff_eq!(out.empirical_mean_cut, 1.0);
        assert_abs_diff_eq!(out.closed_form_expected_cut, 1.0, epsilon = 1e-12);
    }

    #[test]
    fn gw_round_c5_pentagram() {
        let out = gw_round(&cycle(5), &pentagram(), 10_000, 0).unwrap();
        assert_abs_diff_eq!(out.closed_form_expected_cut, 4.0, epsilon = 1e-12);
        assert!((out.empirical_mean_cut - 4.0).abs() < 0.1);
        assert!(out.best_cut.cut_size as f64 >= out.empirical_mean_cut - 1e-9);
        assert_abs_diff_eq!(out.arcsin_bound, 1.5, epsilon = 1e-12);
    }

    #[test]
    fn gw_round_orthogonal_halves() {
        let basis: Vec<Vec<f64>> = (0..4)
            .map(|i| (0..4).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
            .collect();
        let out = gw_round(&complete(4), &basis, 2000, 1).unwrap();
        assert_abs_diff_eq!(out.closed_form_expected_cut, 3.0, epsilon = 1e-12);
        assert!((out.empirical_mean_cut - 3.0).abs() < 0.2);
    }

    #[test]
    fn gw_round_deterministic_and_guards() {
        let anti = vec![vec![1.0], vec![-1.0]];
        let a = gw_round(&complete(2), &anti, 100, 7).unwrap();
        let b = gw_round(&complete(2), &anti, 100, 7).unwrap();
        assert_eq!(a.best_cut, b.best_cut);
        assert_eq!(a.empirical_mean_cut, b.empirical_mean_cut);
        assert!(matches!(
            gw_round(&complete(2), &anti, 0, 0),
            Err(Error::ZeroTrials)
        ));
    }
}
