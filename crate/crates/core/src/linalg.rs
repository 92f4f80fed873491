//! Dense symmetric linear algebra: cyclic Jacobi eigendecomposition, PSD
//! projection, Gram factorization, and the absolute-row-sum eigenvalue bound.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::scalar::Scalar;

const MAX_SWEEPS: usize = 100;
const MAX_DIM: usize = 2000;

/// Dense symmetric matrix; only the upper triangle is stored, so symmetry
/// holds exactly by construction.
#[derive(Clone, Debug, PartialEq)]
pub struct SymMatrix<T> {
    n: usize,
    data: Vec<T>,
}

impl<T: Scalar> SymMatrix<T> {
    pub fn zeros(n: usize) -> Self {
        SymMatrix {
            n,
            data: vec![T::zero(); n * (n + 1) / 2],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.set(i, i, T::one());
        }
        m
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            for j in i..n {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    fn idx(&self, i: usize, j: usize) -> usize {
        let (a, b) = if i <= j { (i, j) } else { (j, i) };
        a * self.n - a * (a + 1) / 2 + b
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> T {
        self.data[self.idx(i, j)]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: T) {
        let k = self.idx(i, j);
        self.data[k] = value;
    }

    #[inline]
    pub fn add_to(&mut self, i: usize, j: usize, value: T) {
        let k = self.idx(i, j);
        self.data[k] += value;
    }

    pub fn trace(&self) -> T {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    /// Sum of all n^2 entries (off-diagonal entries counted twice).
    pub fn sum_entries(&self) -> T {
        let mut s = T::zero();
        for i in 0..self.n {
            s += self.get(i, i);
            for j in (i + 1)..self.n {
                s += T::real(2.0) * self.get(i, j);
            }
        }
        s
    }

    pub fn frob_norm(&self) -> T {
        let mut s = T::zero();
        for i in 0..self.n {
            let d = self.get(i, i);
            s += d * d;
            for j in (i + 1)..self.n {
                let x = self.get(i, j);
                s += T::real(2.0) * x * x;
            }
        }
        s.sqrt()
    }

    pub fn frob_dist(&self, other: &Self) -> T {
        assert_eq!(self.n, other.n);
        let mut s = T::zero();
        for i in 0..self.n {
            let d = self.get(i, i) - other.get(i, i);
            s += d * d;
            for j in (i + 1)..self.n {
                let x = self.get(i, j) - other.get(i, j);
                s += T::real(2.0) * x * x;
            }
        }
        s.sqrt()
    }

    /// self += a * x, entrywise.
    pub fn axpy(&mut self, a: T, x: &Self) {
        assert_eq!(self.n, x.n);
        for (d, &s) in self.data.iter_mut().zip(x.data.iter()) {
            *d += a * s;
        }
    }

    pub fn scale(&mut self, a: T) {
        for d in self.data.iter_mut() {
            *d *= a;
        }
    }

    /// Add `c` to every entry (the all-ones matrix direction).
    pub fn add_constant(&mut self, c: T) {
        for d in self.data.iter_mut() {
            *d += c;
        }
    }

    pub fn add_to_diagonal(&mut self, c: T) {
        for i in 0..self.n {
            self.add_to(i, i, c);
        }
    }

    pub fn mat_vec(&self, x: &[T]) -> Vec<T> {
        assert_eq!(x.len(), self.n);
        (0..self.n)
            .map(|i| x.iter().enumerate().map(|(j, &v)| self.get(i, j) * v).sum())
            .collect()
    }

    fn to_dense(&self) -> Vec<T> {
        let n = self.n;
        let mut a = vec![T::zero(); n * n];
        for i in 0..n {
            for j in i..n {
                let v = self.get(i, j);
                a[i * n + j] = v;
                a[j * n + i] = v;
            }
        }
        a
    }
}

/// Full spectrum of a symmetric matrix, eigenvalues sorted descending with
/// matching orthonormal eigenvectors.
#[derive(Clone, Debug)]
pub struct EigenDecomposition<T> {
    pub eigenvalues: Vec<T>,
    pub eigenvectors: Vec<Vec<T>>,
}

impl<T: Scalar> EigenDecomposition<T> {
    pub fn lambda_max(&self) -> T {
        self.eigenvalues.first().copied().unwrap_or_else(T::zero)
    }

    pub fn lambda_min(&self) -> T {
        self.eigenvalues.last().copied().unwrap_or_else(T::zero)
    }
}

/// Cyclic Jacobi eigendecomposition. Converges when the off-diagonal
/// Frobenius norm falls below `Scalar::jacobi_tol()` times the input norm.
pub fn eigen<T: Scalar>(a: &SymMatrix<T>) -> Result<EigenDecomposition<T>> {
    let n = a.dim();
    if n > MAX_DIM {
        return Err(Error::SizeLimit {
            what: "eigen",
            n,
            max: MAX_DIM,
        });
    }
    if n == 0 {
        return Ok(EigenDecomposition {
            eigenvalues: Vec::new(),
            eigenvectors: Vec::new(),
        });
    }
    let mut mat = a.to_dense();
    let mut vec = vec![T::zero(); n * n];
    for i in 0..n {
        vec[i * n + i] = T::one();
    }
    let mut d: Vec<T> = (0..n).map(|i| mat[i * n + i]).collect();
    let mut b = d.clone();
    let mut z = vec![T::zero(); n];

    let norm = a.frob_norm();
    let off_target = T::jacobi_tol() * norm;

    let mut converged = false;
    for sweep in 0..MAX_SWEEPS {
        let mut off_sq = T::zero();
        for p in 0..n {
            for q in (p + 1)..n {
                let x = mat[p * n + q];
                off_sq += T::real(2.0) * x * x;
            }
        }
        if off_sq.sqrt() <= off_target || off_sq == T::zero() {
            converged = true;
            break;
        }
        // Threshold sweeps as in the classical serial Jacobi.
        let sm: T = (0..n)
            .flat_map(|p| ((p + 1)..n).map(move |q| (p, q)))
            .map(|(p, q)| mat[p * n + q].abs())
            .sum();
        let tresh = if sweep < 3 {
            T::real(0.2) * sm / T::real((n * n) as f64)
        } else {
            T::zero()
        };
        for p in 0..n - 1 {
            for q in (p + 1)..n {
                let apq = mat[p * n + q];
                let g = T::real(100.0) * apq.abs();
                if sweep > 3 && d[p].abs() + g == d[p].abs() && d[q].abs() + g == d[q].abs() {
                    mat[p * n + q] = T::zero();
                    continue;
                }
                if apq.abs() <= tresh {
                    continue;
                }
                let h = d[q] - d[p];
                let t = if h.abs() + g == h.abs() {
                    apq / h
                } else {
                    let theta = T::real(0.5) * h / apq;
                    let mut t = T::one() / (theta.abs() + (T::one() + theta * theta).sqrt());
                    if theta < T::zero() {
                        t = -t;
                    }
                    t
                };
                let c = T::one() / (T::one() + t * t).sqrt();
                let s = t * c;
                let tau = s / (T::one() + c);
                let h = t * apq;
                z[p] -= h;
                z[q] += h;
                d[p] -= h;
                d[q] += h;
                mat[p * n + q] = T::zero();
                let rotate = |mat: &mut Vec<T>, i: usize, j: usize, k: usize, l: usize| {
                    let g = mat[i * n + j];
                    let h = mat[k * n + l];
                    mat[i * n + j] = g - s * (h + g * tau);
                    mat[k * n + l] = h + s * (g - h * tau);
                };
                for j in 0..p {
                    rotate(&mut mat, j, p, j, q);
                }
                for j in (p + 1)..q {
                    rotate(&mut mat, p, j, j, q);
                }
                for j in (q + 1)..n {
                    rotate(&mut mat, p, j, q, j);
                }
                for j in 0..n {
                    rotate(&mut vec, j, p, j, q);
                }
            }
        }
        for i in 0..n {
            b[i] += z[i];
            d[i] = b[i];
            z[i] = T::zero();
        }
    }
    if !converged {
        return Err(Error::EigenNonConvergence { sweeps: MAX_SWEEPS });
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| d[j].partial_cmp(&d[i]).unwrap().then(i.cmp(&j)));
    let eigenvalues: Vec<T> = order.iter().map(|&i| d[i]).collect();
    let eigenvectors: Vec<Vec<T>> = order
        .iter()
        .map(|&k| (0..n).map(|i| vec[i * n + k]).collect())
        .collect();
    Ok(EigenDecomposition {
        eigenvalues,
        eigenvectors,
    })
}

/// Frobenius-nearest PSD matrix: eigendecompose, clamp negative eigenvalues
/// to zero, reassemble.
pub fn psd_project<T: Scalar>(a: &SymMatrix<T>) -> Result<SymMatrix<T>> {
    let eig = eigen(a)?;
    Ok(assemble_clamped(a.dim(), &eig))
}

/// PSD projection that also reports the most negative eigenvalue of the input.
pub fn psd_project_with_min<T: Scalar>(a: &SymMatrix<T>) -> Result<(SymMatrix<T>, T)> {
    let eig = eigen(a)?;
    let lambda_min = eig.lambda_min();
    Ok((assemble_clamped(a.dim(), &eig), lambda_min))
}

fn assemble_clamped<T: Scalar>(n: usize, eig: &EigenDecomposition<T>) -> SymMatrix<T> {
    let kept: Vec<(T, &Vec<T>)> = eig
        .eigenvalues
        .iter()
        .zip(eig.eigenvectors.iter())
        .filter(|(&l, _)| l > T::zero())
        .map(|(&l, v)| (l, v))
        .collect();
    let mut out = SymMatrix::zeros(n);
    for i in 0..n {
        for j in i..n {
            let mut acc = T::zero();
            for (l, v) in &kept {
                acc += *l * v[i] * v[j];
            }
            out.set(i, j, acc);
        }
    }
    out
}

/// Factor a PSD matrix M into vectors with pairwise inner products M[u,v];
/// vector dimension equals the numerical rank. Eigenvalues in
/// [-PSD_TOL, 0) are clamped to zero; below that the input is rejected.
pub fn gram_factor<T: Scalar>(m: &SymMatrix<T>) -> Result<Vec<Vec<T>>> {
    let eig = eigen(m)?;
    let lambda_min = eig.lambda_min();
    if lambda_min < -T::real(crate::PSD_TOL) {
        return Err(Error::NotPsd {
            lambda_min: lambda_min.as_f64(),
        });
    }
    let lambda_max = eig.lambda_max().max(T::zero());
    let rank_tol = T::real(1e-9) * lambda_max;
    let kept: Vec<(T, &Vec<T>)> = eig
        .eigenvalues
        .iter()
        .zip(eig.eigenvectors.iter())
        .filter(|(&l, _)| l > rank_tol)
        .map(|(&l, v)| (l.sqrt(), v))
        .collect();
    let n = m.dim();
    Ok((0..n)
        .map(|v| kept.iter().map(|(s, ev)| *s * ev[v]).collect())
        .collect())
}

/// max over rows r of sum_i |A[r,i]|; an upper bound on the largest
/// eigenvalue of any symmetric matrix.
pub fn rowsum_eigen_bound<T: Scalar>(a: &SymMatrix<T>) -> T {
    let n = a.dim();
    let mut best = T::zero();
    for r in 0..n {
        let row: T = (0..n).map(|i| a.get(r, i).abs()).sum();
        best = best.max(row);
    }
    best
}

/// Adjacency matrix of a graph as a 0/1 symmetric matrix.
pub fn adjacency<T: Scalar>(g: &Graph) -> SymMatrix<T> {
    SymMatrix::from_fn(g.n(), |i, j| {
        if g.has_edge(i, j) {
            T::one()
        } else {
            T::zero()
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate::{cycle, petersen};
    use approx::assert_abs_diff_eq;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn random_sym(n: usize, seed: u64) -> SymMatrix<f64> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        SymMatrix::from_fn(n, |_, _| rng.random_range(-1.0..1.0))
    }

    #[test]
    fn eigen_identity() {
        let eig = eigen(&SymMatrix::<f64>::identity(3)).unwrap();
        for l in &eig.eigenvalues {
            assert_abs_diff_eq!(*l, 1.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn eigen_c5_circulant_spectrum() {
        let a = adjacency::<f64>(&cycle(5));
        let eig = eigen(&a).unwrap();
        let phi = (1.0 + 5.0f64.sqrt()) / 2.0;
        let expect = [2.0, phi - 1.0, phi - 1.0, -phi, -phi];
        for (got, want) in eig.eigenvalues.iter().zip(expect.iter()) {
            assert_abs_diff_eq!(*got, *want, epsilon = 1e-10);
        }
    }

    #[test]
    fn eigen_petersen_strongly_regular_spectrum() {
        let a = adjacency::<f64>(&petersen());
        let eig = eigen(&a).unwrap();
        let mut expect = vec![3.0];
        expect.extend(std::iter::repeat_n(1.0, 5));
        expect.extend(std::iter::repeat_n(-2.0, 4));
        for (got, want) in eig.eigenvalues.iter().zip(expect.iter()) {
            assert_abs_diff_eq!(*got, *want, epsilon = 1e-10);
        }
        // Verify by direct multiplication.
        for k in 0..10 {
            let av = a.mat_vec(&eig.eigenvectors[k]);
            for (avi, vi) in av.iter().zip(eig.eigenvectors[k].iter()) {
                assert_abs_diff_eq!(*avi, eig.eigenvalues[k] * vi, epsilon = 1e-9);
            }
        }
    }

    #[test]
    fn eigen_pairs_and_orthonormality_random() {
        for seed in 0..5 {
            let a = random_sym(12, seed);
            let norm = a.frob_norm();
            let eig = eigen(&a).unwrap();
            for k in 0..12 {
                let av = a.mat_vec(&eig.eigenvectors[k]);
                for (avi, vi) in av.iter().zip(eig.eigenvectors[k].iter()) {
                    assert!(
                        (avi - eig.eigenvalues[k] * vi).abs() <= 1e-9 * norm,
                        "eigenpair residual too large"
                    );
                }
            }
            for i in 0..12 {
                for j in i..12 {
                    let dot: f64 = eig.eigenvectors[i]
                        .iter()
                        .zip(eig.eigenvectors[j].iter())
                        .map(|(a, b)| a * b)
                        .sum();
                    let want = if i == j { 1.0 } else { 0.0 };
                    assert_abs_diff_eq!(dot, want, epsilon = 1e-9);
                }
            }
            let sum: f64 = eig.eigenvalues.iter().sum();
            assert_abs_diff_eq!(a.trace(), sum, epsilon = 1e-9 * 12.0);
        }
    }

    #[test]
    fn psd_project_examples() {
        let d = SymMatrix::from_fn(2, |i, j| match (i, j) {
            (0, 0) => 1.0,
            (1, 1) => -1.0,
            _ => 0.0,
        });
        let p = psd_project(&d).unwrap();
        assert_abs_diff_eq!(p.get(0, 0), 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(p.get(1, 1), 0.0, epsilon = 1e-12);

        let neg = SymMatrix::from_fn(4, |i, j| if i == j { -1.0 } else { 0.0 });
        let z = psd_project(&neg).unwrap();
        assert!(z.frob_norm() < 1e-12);
    }

    #[test]
    fn psd_project_fixed_point_and_idempotent() {
        for seed in 0..4 {
            let a = random_sym(8, seed);
            let p = psd_project(&a).unwrap();
            let pp = psd_project(&p).unwrap();
            assert!(p.frob_dist(&pp) <= 1e-9 * (1.0 + p.frob_norm()));
            // Projection of an already PSD matrix stays put.
            let q = psd_project(&pp).unwrap();
            assert!(pp.frob_dist(&q) <= 1e-9 * (1.0 + pp.frob_norm()));
        }
    }

    #[test]
    fn gram_factor_identity_and_antipodal() {
        let vecs = gram_factor(&SymMatrix::<f64>::identity(3)).unwrap();
        for (v, vec) in vecs.iter().enumerate() {
            assert_eq!(vec.len(), 3);
            for (u, x) in vec.iter().enumerate() {
                assert_abs_diff_eq!(x.abs(), if u == v { 1.0 } else { 0.0 }, epsilon = 1e-9);
            }
        }

        let anti = SymMatrix::from_fn(2, |i, j| if i == j { 1.0 } else { -1.0 });
        let vecs = gram_factor(&anti).unwrap();
        assert_eq!(vecs[0].len(), 1, "rank one");
        let dot: f64 = vecs[0].iter().zip(vecs[1].iter()).map(|(a, b)| a * b).sum();
        assert_abs_diff_eq!(dot, -1.0, epsilon = 1e-9);
    }

    #[test]
    fn gram_factor_simplex_sums_to_zero() {
        let n = 4usize;
        let g = SymMatrix::from_fn(n, |i, j| if i == j { 1.0 } else { -1.0 / (n as f64 - 1.0) });
        let vecs = gram_factor(&g).unwrap();
        let dim = vecs[0].len();
        assert_eq!(dim, 3, "simplex Gram has rank n-1");
        for k in 0..dim {
            let s: f64 = vecs.iter().map(|v| v[k]).sum();
            assert_abs_diff_eq!(s, 0.0, epsilon = 1e-8);
        }
    }

    #[test]
    fn gram_factor_rejects_material_negativity() {
        let bad = SymMatrix::from_fn(2, |i, j| if i == j { 1.0 } else { -1.0 - 1e-5 });
        assert!(matches!(gram_factor(&bad), Err(Error::NotPsd { .. })));
    }

    #[test]
    fn gram_factor_reproduces_inner_products() {
        for seed in 0..4 {
            let a = random_sym(7, seed);
            let p = psd_project(&a).unwrap();
            let vecs = gram_factor(&p).unwrap();
            for u in 0..7 {
                for v in 0..7 {
                    let dot: f64 = vecs[u].iter().zip(vecs[v].iter()).map(|(a, b)| a * b).sum();
                    assert_abs_diff_eq!(dot, p.get(u, v), epsilon = 1e-6);
                }
            }
        }
    }

    #[test]
    fn rowsum_bound_examples() {
        assert_abs_diff_eq!(rowsum_eigen_bound(&SymMatrix::<f64>::identity(3)), 1.0);
        let c5 = adjacency::<f64>(&cycle(5));
        assert_abs_diff_eq!(rowsum_eigen_bound(&c5), 2.0);
        let simplex = SymMatrix::from_fn(4, |i, j| if i == j { 1.0 } else { -1.0f64 / 3.0 });
        let bound = rowsum_eigen_bound(&simplex);
        assert_abs_diff_eq!(bound, 2.0, epsilon = 1e-12);
        let l1 = eigen(&simplex).unwrap().lambda_max();
        assert_abs_diff_eq!(l1, 4.0 / 3.0, epsilon = 1e-10);
        assert!(bound >= l1);
    }

    #[test]
    fn rowsum_dominates_lambda_max_random() {
        for seed in 0..10 {
            let a = random_sym(9, seed);
            let l1 = eigen(&a).unwrap().lambda_max();
            assert!(rowsum_eigen_bound(&a) >= l1 - 1e-10);
        }
    }

    #[test]
    fn eigen_works_at_f32() {
        let a = adjacency::<f32>(&cycle(5));
        let eig = eigen(&a).unwrap();
        assert!((eig.lambda_max() - 2.0).abs() < 1e-4);
    }
}
