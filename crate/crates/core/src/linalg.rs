//! Small direct linear-algebra kernels: tridiagonal and banded LU solves,
//! Sturm-sequence bisection for symmetric tridiagonal eigenvalues, a cyclic
//! Jacobi eigensolver for small dense symmetric matrices, and adaptive
//! Simpson quadrature.

use crate::error::{Error, Result};
use num_complex::Complex64;

/// Thomas algorithm for a complex tridiagonal system. No pivoting; callers
/// must guarantee diagonal dominance in magnitude.
pub struct ComplexTridiagLu {
    c_prime: Vec<Complex64>,
    diag_lu: Vec<Complex64>,
    sub: Vec<Complex64>,
}

impl ComplexTridiagLu {
    pub fn factor(sub: &[Complex64], diag: &[Complex64], sup: &[Complex64]) -> Result<Self> {
        let n = diag.len();
        let mut c_prime = vec![Complex64::new(0.0, 0.0); n.saturating_sub(1)];
        let mut diag_lu = vec![Complex64::new(0.0, 0.0); n];
        let mut denom = diag[0];
        if denom.norm() < 1e-300 {
            return Err(Error::SingularSystem("complex tridiagonal factorization"));
        }
        diag_lu[0] = denom;
        if n > 1 {
            c_prime[0] = sup[0] / denom;
        }
        for i in 1..n {
            denom = diag[i] - sub[i - 1] * c_prime[i - 1];
            if denom.norm() < 1e-300 {
                return Err(Error::SingularSystem("complex tridiagonal factorization"));
            }
            diag_lu[i] = denom;
            if i + 1 < n {
                c_prime[i] = sup[i] / denom;
            }
        }
        Ok(Self {
            c_prime,
            diag_lu,
            sub: sub.to_vec(),
        })
    }

    pub fn solve_in_place(&self, rhs: &mut [Complex64]) {
        let n = rhs.len();
        rhs[0] /= self.diag_lu[0];
        for i in 1..n {
            rhs[i] = (rhs[i] - self.sub[i - 1] * rhs[i - 1]) / self.diag_lu[i];
        }
        for i in (0..n - 1).rev() {
            let t = self.c_prime[i] * rhs[i + 1];
            rhs[i] -= t;
        }
    }
}

/// Banded LU with partial pivoting for a real n×n matrix with lower
/// bandwidth `kl` and upper bandwidth `ku`. Pivoting widens the upper band
/// to `ku + kl`. Rows are stored as windows over columns `i-kl ..= i+ku+kl`.
pub struct BandLu {
    n: usize,
    kl: usize,
    width: usize,
    rows: Vec<f64>,
    pivots: Vec<usize>,
}

impl BandLu {
    /// `entry(i, j)` is consulted for |i-j| <= max(kl, ku) only.
    pub fn factor(n: usize, kl: usize, ku: usize, entry: impl Fn(usize, usize) -> f64) -> Result<Self> {
        let ku_ext = ku + kl;
        let width = kl + ku_ext + 1;
        let mut rows = vec![0.0; n * width];
        let idx = |i: usize, j: usize| -> usize {
            debug_assert!(j + kl >= i && j <= i + ku_ext);
            i * width + (j + kl - i)
        };
        for i in 0..n {
            let lo = i.saturating_sub(kl);
            let hi = (i + ku).min(n - 1);
            for j in lo..=hi {
                rows[idx(i, j)] = entry(i, j);
            }
        }
        let mut pivots = vec![0usize; n];
        for col in 0..n {
            // pick pivot among rows col..=col+kl
            let last = (col + kl).min(n - 1);
            let mut piv = col;
            let mut best = rows[idx(col, col)].abs();
            for r in col + 1..=last {
                let v = rows[idx(r, col)].abs();
                if v > best {
                    best = v;
                    piv = r;
                }
            }
            if best == 0.0 {
                return Err(Error::SingularSystem("banded LU"));
            }
            pivots[col] = piv;
            if piv != col {
                // rows col..col+kl are already zero left of `col`, so only
                // the overlap of both windows needs swapping
                let jhi = (col + ku_ext).min(n - 1);
                for j in col..=jhi {
                    rows.swap(idx(col, j), idx(piv, j));
                }
            }
            let pivot_val = rows[idx(col, col)];
            for r in col + 1..=last {
                let factor = rows[idx(r, col)] / pivot_val;
                rows[idx(r, col)] = factor; // store multiplier
                if factor != 0.0 {
                    let jhi = (col + ku_ext).min(n - 1);
                    for j in col + 1..=jhi {
                        rows[idx(r, j)] -= factor * rows[idx(col, j)];
                    }
                }
            }
        }
        Ok(Self {
            n,
            kl,
            width,
            rows,
            pivots,
        })
    }

    #[inline]
    fn at(&self, i: usize, j: usize) -> f64 {
        self.rows[i * self.width + (j + self.kl - i)]
    }

    pub fn solve_in_place(&self, b: &mut [f64]) {
        let n = self.n;
        let kl = self.kl;
        let ku_ext = self.width - 1 - kl;
        for col in 0..n {
            let piv = self.pivots[col];
            if piv != col {
                b.swap(col, piv);
            }
            let last = (col + kl).min(n - 1);
            for r in col + 1..=last {
                b[r] -= self.at(r, col) * b[col];
            }
        }
        for i in (0..n).rev() {
            let jhi = (i + ku_ext).min(n - 1);
            let mut s = b[i];
            for j in i + 1..=jhi {
                s -= self.at(i, j) * b[j];
            }
            b[i] = s / self.at(i, i);
        }
    }

    pub fn solve(&self, b: &[f64]) -> Vec<f64> {
        let mut x = b.to_vec();
        self.solve_in_place(&mut x);
        x
    }
}

/// Number of eigenvalues of the symmetric tridiagonal matrix (diag, off)
/// strictly below `x`, by the Sturm sign-count of the shifted LDLᵀ.
pub fn symtri_count_below(diag: &[f64], off: &[f64], x: f64) -> usize {
    let n = diag.len();
    let mut count = 0;
    let mut q = diag[0] - x;
    if q < 0.0 {
        count += 1;
    }
    for i in 1..n {
        let denom = if q.abs() < 1e-300 { 1e-300f64.copysign(q + 1e-300) } else { q };
        q = diag[i] - x - off[i - 1] * off[i - 1] / denom;
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

/// k-th smallest eigenvalue (0-based) of a symmetric tridiagonal matrix by
/// bisection on the Sturm count.
pub fn symtri_eigenvalue(diag: &[f64], off: &[f64], k: usize) -> f64 {
    // Gershgorin bounds
    let n = diag.len();
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for i in 0..n {
        let r = (if i > 0 { off[i - 1].abs() } else { 0.0 })
            + (if i + 1 < n { off[i].abs() } else { 0.0 });
        lo = lo.min(diag[i] - r);
        hi = hi.max(diag[i] + r);
    }
    let mut a = lo;
    let mut b = hi;
    for _ in 0..200 {
        let mid = 0.5 * (a + b);
        if mid <= a || mid >= b {
            break;
        }
        if symtri_count_below(diag, off, mid) > k {
            b = mid;
        } else {
            a = mid;
        }
    }
    0.5 * (a + b)
}

/// All eigenvalues of a small symmetric tridiagonal matrix, ascending.
pub fn symtri_eigenvalues(diag: &[f64], off: &[f64]) -> Vec<f64> {
    (0..diag.len()).map(|k| symtri_eigenvalue(diag, off, k)).collect()
}

/// Eigenvalues (ascending) and eigenvectors (columns) of a small dense
/// symmetric matrix via cyclic Jacobi rotations. `a` is row-major n×n.
pub fn jacobi_symmetric_eigen(a: &[f64], n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut m = a.to_vec();
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    let off_norm = |m: &[f64]| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in i + 1..n {
                s += m[i * n + j] * m[i * n + j];
            }
        }
        s.sqrt()
    };
    let scale: f64 = (0..n * n).map(|k| a[k] * a[k]).sum::<f64>().sqrt().max(1e-300);
    for _sweep in 0..100 {
        if off_norm(&m) <= 1e-15 * scale {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = m[p * n + q];
                if apq.abs() <= 1e-18 * scale {
                    continue;
                }
                let app = m[p * n + p];
                let aqq = m[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let mkp = m[k * n + p];
                    let mkq = m[k * n + q];
                    m[k * n + p] = c * mkp - s * mkq;
                    m[k * n + q] = s * mkp + c * mkq;
                }
                for k in 0..n {
                    let mpk = m[p * n + k];
                    let mqk = m[q * n + k];
                    m[p * n + k] = c * mpk - s * mqk;
                    m[q * n + k] = s * mpk + c * mqk;
                }
                for k in 0..n {
                    let vkp = v[k * n + p];
                    let vkq = v[k * n + q];
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| m[i * n + i].partial_cmp(&m[j * n + j]).unwrap());
    let values: Vec<f64> = order.iter().map(|&i| m[i * n + i]).collect();
    let mut vectors = vec![0.0; n * n];
    for (col_new, &col_old) in order.iter().enumerate() {
        for row in 0..n {
            vectors[row * n + col_new] = v[row * n + col_old];
        }
    }
    (values, vectors)
}

/// Smallest eigenvalue of a Hermitian matrix given as a complex row-major
/// n×n array, via the real symmetric embedding [[Re, -Im], [Im, Re]].
pub fn hermitian_min_eigenvalue(a: &[Complex64], n: usize) -> f64 {
    let m = 2 * n;
    let mut emb = vec![0.0; m * m];
    for i in 0..n {
        for j in 0..n {
            let z = a[i * n + j];
            emb[i * m + j] = z.re;
            emb[i * m + (j + n)] = -z.im;
            emb[(i + n) * m + j] = z.im;
            emb[(i + n) * m + (j + n)] = z.re;
        }
    }
    let (vals, _) = jacobi_symmetric_eigen(&emb, m);
    vals[0]
}

/// Adaptive Simpson quadrature to absolute tolerance `tol`.
pub fn adaptive_simpson(f: &impl Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    fn simpson(fa: f64, fm: f64, fb: f64, a: f64, b: f64) -> f64 {
        (b - a) / 6.0 * (fa + 4.0 * fm + fb)
    }
    fn recurse(
        f: &impl Fn(f64) -> f64,
        a: f64,
        b: f64,
        fa: f64,
        fm: f64,
        fb: f64,
        whole: f64,
        tol: f64,
        depth: usize,
    ) -> f64 {
        let m = 0.5 * (a + b);
        let lm = 0.5 * (a + m);
        let rm = 0.5 * (m + b);
        let flm = f(lm);
        let frm = f(rm);
        let left = simpson(fa, flm, fm, a, m);
        let right = simpson(fm, frm, fb, m, b);
        let delta = left + right - whole;
        if depth == 0 || delta.abs() <= 15.0 * tol {
            left + right + delta / 15.0
        } else {
            recurse(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1)
                + recurse(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1)
        }
    }
    let fa = f(a);
    let fb = f(b);
    let fm = f(0.5 * (a + b));
    let whole = simpson(fa, fm, fb, a, b);
    recurse(f, a, b, fa, fm, fb, whole, tol, 40)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;
    use std::f64::consts::PI;

    #[test]
    fn band_lu_matches_dense_on_random_pentadiagonal() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for trial in 0..20 {
            let n = 5 + trial % 13;
            let kl = 2;
            let ku = 2;
            let mut a = vec![0.0; n * n];
            for i in 0..n {
                for j in 0..n {
                    if i.abs_diff(j) <= 2 {
                        a[i * n + j] = rng.gen_range(-1.0..1.0);
                    }
                }
                a[i * n + i] += 0.5; // keep it comfortably nonsingular
            }
            let x_true: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
            let b: Vec<f64> = (0..n)
                .map(|i| (0..n).map(|j| a[i * n + j] * x_true[j]).sum())
                .collect();
            let lu = BandLu::factor(n, kl, ku, |i, j| a[i * n + j]).unwrap();
            let x = lu.solve(&b);
            for (xi, ti) in x.iter().zip(&x_true) {
                assert!((xi - ti).abs() < 1e-9, "trial {trial}: {xi} vs {ti}");
            }
        }
    }

    #[test]
    fn band_lu_handles_pivot_requirement() {
        // zero leading pivot forces a row swap
        let a = [0.0, 1.0, 0.0, 1.0, 0.0, 1.0, 0.0, 1.0, 1.0];
        let lu = BandLu::factor(3, 1, 1, |i, j| a[i * 3 + j]).unwrap();
        let x = lu.solve(&[1.0, 2.0, 3.0]);
        // A = [[0,1,0],[1,0,1],[0,1,1]]; solve directly: x2 = 1, x1 = 3-1... check Ax=b
        let ax: Vec<f64> = (0..3)
            .map(|i| (0..3).map(|j| a[i * 3 + j] * x[j]).sum())
            .collect();
        for (l, r) in ax.iter().zip(&[1.0, 2.0, 3.0]) {
            assert!((l - r).abs() < 1e-12);
        }
    }

    #[test]
    fn complex_tridiag_solve() {
        let n = 40;
        let sub = vec![Complex64::new(-1.0, 0.1); n - 1];
        let sup = vec![Complex64::new(-1.0, -0.2); n - 1];
        let diag = vec![Complex64::new(4.0, 1.0); n];
        let lu = ComplexTridiagLu::factor(&sub, &diag, &sup).unwrap();
        let x_true: Vec<Complex64> = (0..n)
            .map(|i| Complex64::new((i as f64).cos(), (i as f64).sin()))
            .collect();
        let mut b = vec![Complex64::new(0.0, 0.0); n];
        for i in 0..n {
            b[i] = diag[i] * x_true[i];
            if i > 0 {
                b[i] += sub[i - 1] * x_true[i - 1];
            }
            if i + 1 < n {
                b[i] += sup[i] * x_true[i + 1];
            }
        }
        lu.solve_in_place(&mut b);
        for (xi, ti) in b.iter().zip(&x_true) {
            assert!((xi - ti).norm() < 1e-12);
        }
    }

    #[test]
    fn sturm_bisection_free_laplacian() {
        // -u'' on (0,1), Dirichlet: eigenvalues n^2 pi^2 + O(h^2 n^4)
        let n = 200;
        let h = 1.0 / (n as f64 + 1.0);
        let diag = vec![2.0 / (h * h); n];
        let off = vec![-1.0 / (h * h); n - 1];
        for k in 0..4 {
            let computed = symtri_eigenvalue(&diag, &off, k);
            let m = (k + 1) as f64;
            // exact discrete eigenvalue: (4/h^2) sin^2(m pi h / 2)
            let exact = 4.0 / (h * h) * (m * PI * h / 2.0).sin().powi(2);
            assert!((computed - exact).abs() < 1e-6 * exact);
        }
        assert_eq!(symtri_count_below(&diag, &off, 5.0 * PI * PI), 2);
    }

    #[test]
    fn jacobi_small_symmetric() {
        let a = [4.0, 1.0, 0.5, 1.0, 3.0, 0.25, 0.5, 0.25, 2.0];
        let (vals, vecs) = jacobi_symmetric_eigen(&a, 3);
        assert!(vals.windows(2).all(|w| w[0] <= w[1]));
        // residual check A v = lambda v
        for k in 0..3 {
            for i in 0..3 {
                let av: f64 = (0..3).map(|j| a[i * 3 + j] * vecs[j * 3 + k]).sum();
                assert!((av - vals[k] * vecs[i * 3 + k]).abs() < 1e-12);
            }
        }
        // trace and determinant invariants
        let trace: f64 = vals.iter().sum();
        assert!((trace - 9.0).abs() < 1e-12);
    }

    #[test]
    fn hermitian_embedding_min_eig() {
        // [[2, i],[-i, 2]] has eigenvalues 1 and 3
        let a = [
            Complex64::new(2.0, 0.0),
            Complex64::new(0.0, 1.0),
            Complex64::new(0.0, -1.0),
            Complex64::new(2.0, 0.0),
        ];
        let min = hermitian_min_eigenvalue(&a, 2);
        assert!((min - 1.0).abs() < 1e-12);
    }

    #[test]
    fn simpson_oscillatory() {
        let val = adaptive_simpson(&|x: f64| (10.0 * x).sin().powi(2), 0.0, 1.0, 1e-12);
        let exact = 0.5 - (20.0f64).sin() / 40.0;
        assert!((val - exact).abs() < 1e-10);
    }
}
