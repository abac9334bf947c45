//! Uniform Dirichlet grid on (0,1) and discrete norms.
//!
//! All fields in this crate store interior values only; the boundary values
//! at x = 0 and x = 1 are implicit zeros. The discrete L² inner product is
//! the h-weighted Euclidean one, which makes every adjointness identity used
//! downstream exact at machine precision. The H¹ seminorm uses forward
//! differences over the n+1 cells, again with the implicit zero boundary.

use crate::error::{Error, Result};

/// Uniform grid of interior points x_i = i·h, i = 1..n, with h = 1/(n+1).
#[derive(Debug, Clone, PartialEq)]
pub struct Grid {
    n_interior: usize,
    h: f64,
}

impl Grid {
    pub fn new(n_interior: usize) -> Result<Self> {
        if n_interior == 0 {
            return Err(Error::Domain("grid needs at least one interior point".into()));
        }
        Ok(Self {
            n_interior,
            h: 1.0 / (n_interior as f64 + 1.0),
        })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n_interior
    }

    #[inline]
    pub fn h(&self) -> f64 {
        self.h
    }

    /// Interior node x_i for i in 0..n (zero-based storage, x = (i+1)h).
    #[inline]
    pub fn node(&self, i: usize) -> f64 {
        (i as f64 + 1.0) * self.h
    }

    pub fn nodes(&self) -> Vec<f64> {
        (0..self.n_interior).map(|i| self.node(i)).collect()
    }

    /// Samples a function on the interior nodes.
    pub fn sample(&self, f: impl Fn(f64) -> f64) -> Vec<f64> {
        (0..self.n_interior).map(|i| f(self.node(i))).collect()
    }

    pub fn zeros(&self) -> Vec<f64> {
        vec![0.0; self.n_interior]
    }

    pub fn check_len(&self, len: usize) -> Result<()> {
        if len != self.n_interior {
            return Err(Error::Dimension {
                expected: self.n_interior,
                got: len,
            });
        }
        Ok(())
    }

    /// h-weighted inner product (rectangle rule; exact trapezoid for
    /// zero-boundary fields).
    pub fn dot(&self, a: &[f64], b: &[f64]) -> f64 {
        debug_assert_eq!(a.len(), b.len());
        self.h * a.iter().zip(b).map(|(x, y)| x * y).sum::<f64>()
    }

    pub fn norm_l2(&self, a: &[f64]) -> f64 {
        self.dot(a, a).sqrt()
    }

    pub fn norm_inf(&self, a: &[f64]) -> f64 {
        a.iter().fold(0.0f64, |m, x| m.max(x.abs()))
    }

    /// Forward-difference gradient including the boundary cells; output has
    /// n+1 entries, one per cell.
    pub fn forward_diff(&self, a: &[f64]) -> Vec<f64> {
        let n = self.n_interior;
        debug_assert_eq!(a.len(), n);
        let mut d = Vec::with_capacity(n + 1);
        d.push(a[0] / self.h);
        for i in 1..n {
            d.push((a[i] - a[i - 1]) / self.h);
        }
        d.push(-a[n - 1] / self.h);
        d
    }

    /// ⟨a_x, b_x⟩ with forward differences, h-weighted over the n+1 cells.
    pub fn dot_h1(&self, a: &[f64], b: &[f64]) -> f64 {
        let da = self.forward_diff(a);
        let db = self.forward_diff(b);
        self.h * da.iter().zip(&db).map(|(x, y)| x * y).sum::<f64>()
    }

    pub fn seminorm_h1(&self, a: &[f64]) -> f64 {
        self.dot_h1(a, a).sqrt()
    }

    pub fn norm_h1(&self, a: &[f64]) -> f64 {
        (self.dot(a, a) + self.dot_h1(a, a)).sqrt()
    }

    /// Centered first derivative, interior-to-interior, with the implicit
    /// zero boundary.
    pub fn centered_diff(&self, a: &[f64]) -> Vec<f64> {
        let n = self.n_interior;
        debug_assert_eq!(a.len(), n);
        let two_h = 2.0 * self.h;
        (0..n)
            .map(|i| {
                let right = if i + 1 < n { a[i + 1] } else { 0.0 };
                let left = if i > 0 { a[i - 1] } else { 0.0 };
                (right - left) / two_h
            })
            .collect()
    }

    /// Counts strict sign changes, skipping (rare) exact zeros.
    pub fn sign_changes(a: &[f64]) -> usize {
        let mut count = 0;
        let mut last = 0.0f64;
        for &v in a {
            if v == 0.0 {
                continue;
            }
            if last != 0.0 && v.signum() != last.signum() {
                count += 1;
            }
            last = v;
        }
        count
    }
}
