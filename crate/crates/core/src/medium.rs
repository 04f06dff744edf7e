//! The spatially varying coefficient profile c(x).
//!
//! The profile equals 1 outside the unit interval (homogeneous background)
//! and is bounded below by 0.1 inside. Two kinds exist: an ideal step target
//! (a slab of elevated constant centered at `x_loc`), and a gridded profile
//! given by samples.
//!
//! Step edges are discretized sharply except exactly *at* an edge node,
//! which receives the midpoint value `(c_hat + 1)/2`. A quadrature node
//! sitting on the jump otherwise biases the integral by half a cell in a
//! solver-dependent direction; the midpoint value is the unique convention
//! under which the collocation solver and the finite-difference oracle see
//! the same step, and it changes the profile only on a set of measure zero.

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Lower bound enforced on c(x) everywhere.
pub const C_MIN: f64 = 0.1;

/// Coordinates closer to a step edge than this count as "on the edge".
const EDGE_TOL: f64 = 1e-12;

/// A coefficient profile on the real line, equal to 1 outside (0, 1).
#[derive(Debug, Clone, PartialEq)]
pub enum MediumProfile<T: Real> {
    /// Constant slab `c = c_hat` on `(x_loc - d/2, x_loc + d/2)`.
    Step {
        /// Value of the coefficient inside the slab.
        c_hat: T,
        /// Slab center, in (0, 1).
        x_loc: T,
        /// Slab width.
        d: T,
    },
    /// Piecewise-linear profile through samples at equispaced nodes on [0, 1].
    Gridded {
        /// Sample values; node `j` sits at `j / (len - 1)`.
        samples: Vec<T>,
    },
}

impl<T: Real> MediumProfile<T> {
    /// A step target with the benchmark slab width 0.1.
    pub fn step(c_hat: T, x_loc: T) -> Self {
        MediumProfile::Step {
            c_hat,
            x_loc,
            d: T::of(0.1),
        }
    }

    /// The homogeneous background c = 1.
    pub fn homogeneous() -> Self {
        MediumProfile::Step {
            c_hat: T::one(),
            x_loc: T::of(0.5),
            d: T::of(0.1),
        }
    }

    /// Check the profile invariants: lower bound and slab containment.
    pub fn validate(&self) -> Result<()> {
        match self {
            MediumProfile::Step { c_hat, x_loc, d } => {
                if *c_hat < T::of(C_MIN) {
                    return Err(Error::Domain(format!(
                        "coefficient must stay >= {C_MIN}, got c_hat = {c_hat}"
                    )));
                }
                if *d <= T::zero() {
                    return Err(Error::Domain(format!("slab width must be positive, got {d}")));
                }
                let lo = *x_loc - *d / T::of(2.0);
                let hi = *x_loc + *d / T::of(2.0);
                if !(lo > T::zero() && hi < T::one()) {
                    return Err(Error::Domain(format!(
                        "slab ({lo}, {hi}) must be contained in (0, 1)"
                    )));
                }
                Ok(())
            }
            MediumProfile::Gridded { samples } => {
                if samples.len() < 2 {
                    return Err(Error::Argument(
                        "gridded profile needs at least 2 samples".into(),
                    ));
                }
                if samples.iter().any(|&s| s < T::of(C_MIN)) {
                    return Err(Error::Domain(format!(
                        "gridded profile dips below the lower bound {C_MIN}"
                    )));
                }
                Ok(())
            }
        }
    }

    /// Evaluate c at a coordinate (1 outside the unit interval).
    pub fn eval(&self, x: T) -> T {
        if x < T::zero() || x > T::one() {
            return T::one();
        }
        match self {
            MediumProfile::Step { c_hat, x_loc, d } => {
                let lo = *x_loc - *d / T::of(2.0);
                let hi = *x_loc + *d / T::of(2.0);
                let tol = T::of(EDGE_TOL);
                if (x - lo).abs() <= tol || (x - hi).abs() <= tol {
                    (*c_hat + T::one()) / T::of(2.0)
                } else if x > lo && x < hi {
                    *c_hat
                } else {
                    T::one()
                }
            }
            MediumProfile::Gridded { samples } => {
                let n = samples.len();
                let pos = x.as_f64() * (n - 1) as f64;
                let j = (pos.floor() as usize).min(n - 2);
                let t = T::of(pos - j as f64);
                samples[j] * (T::one() - t) + samples[j + 1] * t
            }
        }
    }

    /// Contrast against the background: c(x) - 1.
    pub fn contrast(&self, x: T) -> T {
        self.eval(x) - T::one()
    }
}

/// The sixteen benchmark step targets: contrasts 3..6 at four depths.
pub fn benchmark_targets<T: Real>() -> Vec<(T, T)> {
    let mut out = Vec::with_capacity(16);
    for c in [3.0, 4.0, 5.0, 6.0] {
        for x in [0.1, 0.2, 0.3, 0.4] {
            out.push((T::of(c), T::of(x)));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn step_evaluates_with_midpoint_edges() {
        let m = MediumProfile::<f64>::step(5.0, 0.4);
        assert_eq!(m.eval(0.2), 1.0);
        assert_eq!(m.eval(0.4), 5.0);
        assert_eq!(m.eval(0.35), 3.0); // exact edge -> midpoint value
        assert_eq!(m.eval(0.45), 3.0);
        assert_eq!(m.eval(-0.3), 1.0); // background outside (0,1)
        assert_eq!(m.eval(1.2), 1.0);
    }

    #[test]
    fn validation_enforces_containment_and_bound() {
        assert!(MediumProfile::<f64>::step(5.0, 0.4).validate().is_ok());
        assert!(MediumProfile::<f64>::step(5.0, 0.03).validate().is_err()); // slab pokes out
        assert!(MediumProfile::<f64>::step(0.05, 0.4).validate().is_err()); // below bound
        assert!(MediumProfile::<f64>::Gridded { samples: vec![1.0, 0.05, 1.0] }
            .validate()
            .is_err());
    }

    #[test]
    fn gridded_interpolates_linearly() {
        let m = MediumProfile::<f64>::Gridded {
            samples: vec![1.0, 3.0, 1.0],
        };
        assert!((m.eval(0.25) - 2.0).abs() < 1e-14);
        assert!((m.eval(0.5) - 3.0).abs() < 1e-14);
        assert!((m.eval(0.75) - 2.0).abs() < 1e-14);
    }

    #[test]
    fn benchmark_target_set_is_complete() {
        let t = benchmark_targets::<f64>();
        assert_eq!(t.len(), 16);
        assert_eq!(t[0], (3.0, 0.1));
        assert_eq!(t[15], (6.0, 0.4));
    }
}
