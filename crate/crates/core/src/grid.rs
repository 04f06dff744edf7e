//! Wave-number and spatial grids, sampled complex data, difference stencils.
//!
//! Two uniform grids run through the whole pipeline:
//! * a [`FrequencyGrid`] of `nk` equal subintervals on `[k_lo, k_hi]`
//!   carrying sampled boundary data, and
//! * a [`SpatialGrid`] of `nx` equal subintervals on `[0, 1]` carrying the
//!   unknown state and every spatial norm.
//!
//! The spatial stencils are fixed crate-wide: second-order central
//! differences inside, second-order one-sided at both ends. The objective,
//! the constraint elimination, the residual, and the coefficient recovery
//! all share these exact stencils, which keeps the minimized quantity and
//! the recovered coefficient consistent with one another.

use crate::error::{Error, Result};
use crate::quad::trapezoid_weights;
use crate::scalar::{Cplx, Real};

/// Uniform grid of `nk` equal subintervals on the wave-number band.
#[derive(Debug, Clone, PartialEq)]
pub struct FrequencyGrid<T: Real> {
    k_lo: T,
    k_hi: T,
    nk: usize,
    nodes: Vec<T>,
}

impl<T: Real> FrequencyGrid<T> {
    /// Build a grid; requires `0 < k_lo < k_hi` and at least one subinterval.
    pub fn new(k_lo: T, k_hi: T, nk: usize) -> Result<Self> {
        if !(T::zero() < k_lo && k_lo < k_hi) {
            return Err(Error::Domain(format!(
                "wave-number band must satisfy 0 < k_lo < k_hi, got [{k_lo}, {k_hi}]"
            )));
        }
        if nk < 1 {
            return Err(Error::Argument("frequency grid needs nk >= 1".into()));
        }
        let h = (k_hi - k_lo) / T::of(nk as f64);
        let nodes = (0..=nk).map(|m| k_lo + h * T::of(m as f64)).collect();
        Ok(Self { k_lo, k_hi, nk, nodes })
    }

    /// Lower band edge.
    pub fn k_lo(&self) -> T {
        self.k_lo
    }

    /// Upper band edge.
    pub fn k_hi(&self) -> T {
        self.k_hi
    }

    /// Number of subintervals.
    pub fn nk(&self) -> usize {
        self.nk
    }

    /// Number of nodes (`nk + 1`).
    pub fn len(&self) -> usize {
        self.nk + 1
    }

    /// Always false: a grid has at least two nodes.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// Node spacing.
    pub fn h(&self) -> T {
        (self.k_hi - self.k_lo) / T::of(self.nk as f64)
    }

    /// All nodes, ascending.
    pub fn nodes(&self) -> &[T] {
        &self.nodes
    }

    /// Composite trapezoid weights matching the nodes.
    pub fn trapezoid_weights(&self) -> Vec<T> {
        trapezoid_weights(self.len(), self.h())
    }
}

/// Complex values sampled on a frequency grid (one value per node).
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexSamples<T: Real> {
    /// The grid the samples live on.
    pub grid: FrequencyGrid<T>,
    /// One complex value per grid node.
    pub values: Vec<Cplx<T>>,
}

impl<T: Real> ComplexSamples<T> {
    /// Bundle values with their grid; lengths must agree.
    pub fn new(grid: FrequencyGrid<T>, values: Vec<Cplx<T>>) -> Result<Self> {
        if values.len() != grid.len() {
            return Err(Error::Argument(format!(
                "sample count {} does not match grid node count {}",
                values.len(),
                grid.len()
            )));
        }
        Ok(Self { grid, values })
    }

    /// Map the values pointwise, keeping the grid.
    pub fn map(&self, f: impl Fn(T, Cplx<T>) -> Cplx<T>) -> Self {
        let values = self
            .grid
            .nodes()
            .iter()
            .zip(&self.values)
            .map(|(&k, &v)| f(k, v))
            .collect();
        Self {
            grid: self.grid.clone(),
            values,
        }
    }
}

/// Uniform spatial grid on `[0, 1]` with `nx` subintervals.
#[derive(Debug, Clone, PartialEq)]
pub struct SpatialGrid<T: Real> {
    nx: usize,
    h: T,
    xs: Vec<T>,
    trap_w: Vec<T>,
}

impl<T: Real> SpatialGrid<T> {
    /// Build the grid; the residual stencils need at least 4 subintervals.
    pub fn new(nx: usize) -> Result<Self> {
        if nx < 4 {
            return Err(Error::Argument(format!(
                "spatial grid needs nx >= 4 subintervals, got {nx}"
            )));
        }
        let h = T::one() / T::of(nx as f64);
        let xs: Vec<T> = (0..=nx).map(|j| T::of(j as f64) * h).collect();
        let trap_w = trapezoid_weights(nx + 1, h);
        Ok(Self { nx, h, xs, trap_w })
    }

    /// Number of subintervals.
    pub fn nx(&self) -> usize {
        self.nx
    }

    /// Number of nodes (`nx + 1`).
    pub fn len(&self) -> usize {
        self.nx + 1
    }

    /// Always false: a grid has at least five nodes.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// Node spacing.
    pub fn h(&self) -> T {
        self.h
    }

    /// All nodes, ascending from 0 to 1.
    pub fn xs(&self) -> &[T] {
        &self.xs
    }

    /// Composite trapezoid weights matching the nodes.
    pub fn trapezoid_weights(&self) -> &[T] {
        &self.trap_w
    }

    /// First derivative: central inside, one-sided second order at the ends.
    pub fn d1(&self, f: &[Cplx<T>]) -> Vec<Cplx<T>> {
        let n = f.len();
        assert_eq!(n, self.len(), "field length must match grid");
        let two_h = self.h * T::of(2.0);
        let mut out = vec![Cplx::new(T::zero(), T::zero()); n];
        out[0] = (-f[0] * T::of(3.0) + f[1] * T::of(4.0) - f[2]) / two_h;
        for j in 1..n - 1 {
            out[j] = (f[j + 1] - f[j - 1]) / two_h;
        }
        out[n - 1] = (f[n - 1] * T::of(3.0) - f[n - 2] * T::of(4.0) + f[n - 3]) / two_h;
        out
    }

    /// Second derivative: central inside, one-sided second order at the ends.
    pub fn d2(&self, f: &[Cplx<T>]) -> Vec<Cplx<T>> {
        let n = f.len();
        assert_eq!(n, self.len(), "field length must match grid");
        let h2 = self.h * self.h;
        let mut out = vec![Cplx::new(T::zero(), T::zero()); n];
        out[0] = (f[0] * T::of(2.0) - f[1] * T::of(5.0) + f[2] * T::of(4.0) - f[3]) / h2;
        for j in 1..n - 1 {
            out[j] = (f[j + 1] - f[j] * T::of(2.0) + f[j - 1]) / h2;
        }
        out[n - 1] =
            (f[n - 1] * T::of(2.0) - f[n - 2] * T::of(5.0) + f[n - 3] * T::of(4.0) - f[n - 4]) / h2;
        out
    }
}

/// Centered moving average with truncated one-sided windows at the ends.
///
/// `window` must be odd; window 1 is the identity. Node `i` averages the
/// samples in `[i - w/2, i + w/2]` clipped to the valid range, so endpoints
/// average over whatever one-sided stencil is available.
pub fn moving_average_complex<T: Real>(values: &[Cplx<T>], window: usize) -> Result<Vec<Cplx<T>>> {
    check_window(window, values.len())?;
    let half = window / 2;
    Ok((0..values.len())
        .map(|idx| {
            let lo = idx.saturating_sub(half);
            let hi = (idx + half).min(values.len() - 1);
            let count = T::of((hi - lo + 1) as f64);
            let sum = values[lo..=hi]
                .iter()
                .fold(Cplx::new(T::zero(), T::zero()), |acc, &v| acc + v);
            sum / count
        })
        .collect())
}

/// Real-valued counterpart of [`moving_average_complex`].
pub fn moving_average_real<T: Real>(values: &[T], window: usize) -> Result<Vec<T>> {
    check_window(window, values.len())?;
    let half = window / 2;
    Ok((0..values.len())
        .map(|idx| {
            let lo = idx.saturating_sub(half);
            let hi = (idx + half).min(values.len() - 1);
            let count = T::of((hi - lo + 1) as f64);
            let sum: T = values[lo..=hi].iter().copied().sum();
            sum / count
        })
        .collect())
}

fn check_window(window: usize, len: usize) -> Result<()> {
    if window == 0 || window % 2 == 0 {
        return Err(Error::Argument(format!(
            "averaging window must be odd and positive, got {window}"
        )));
    }
    if window > len {
        return Err(Error::Argument(format!(
            "averaging window {window} exceeds sample count {len}"
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::cplx;

    #[test]
    fn frequency_grid_nodes_and_spacing() {
        let g = FrequencyGrid::<f64>::new(0.5, 1.5, 100).unwrap();
        assert_eq!(g.len(), 101);
        assert!((g.h() - 0.01).abs() < 1e-15);
        assert!((g.nodes()[100] - 1.5).abs() < 1e-15);
        assert!(FrequencyGrid::<f64>::new(0.0, 1.0, 10).is_err());
        assert!(FrequencyGrid::<f64>::new(1.5, 0.5, 10).is_err());
    }

    /// Stencils differentiate quadratics exactly (second-order one-sided ends
    /// included), so x^2 is the sharp test.
    #[test]
    fn stencils_exact_on_quadratics() {
        let g = SpatialGrid::<f64>::new(50).unwrap();
        let f: Vec<_> = g.xs().iter().map(|&x| cplx(x * x, -2.0 * x)).collect();
        let d1 = g.d1(&f);
        let d2 = g.d2(&f);
        for (j, &x) in g.xs().iter().enumerate() {
            assert!((d1[j] - cplx(2.0 * x, -2.0)).norm() < 1e-11, "d1 at {x}");
            assert!((d2[j] - cplx(2.0, 0.0)).norm() < 1e-9, "d2 at {x}");
        }
    }

    #[test]
    fn moving_average_window_three_matches_hand_computation() {
        let v = [0.0f64, 1.0, 2.0, 3.0];
        let got = moving_average_real(&v, 3).unwrap();
        assert_eq!(got, vec![0.5, 1.0, 2.0, 2.5]);
    }

    #[test]
    fn moving_average_window_one_is_identity() {
        let v: Vec<Cplx<f64>> = (0..5).map(|j| cplx(j as f64, -(j as f64))).collect();
        let got = moving_average_complex(&v, 1).unwrap();
        assert_eq!(got, v);
    }

    #[test]
    fn moving_average_rejects_even_or_zero_window() {
        let v = [1.0f64; 8];
        assert!(moving_average_real(&v, 2).is_err());
        assert!(moving_average_real(&v, 0).is_err());
        assert!(moving_average_real(&v, 9).is_err());
    }
}
