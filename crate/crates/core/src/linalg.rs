//! Dense and tridiagonal linear solvers over complex scalars.
//!
//! The crate needs exactly three solves, all small enough that hand-rolled
//! textbook algorithms beat pulling in a LAPACK binding:
//! * a dense complex solve for the scattering collocation system
//!   (~400 unknowns) and the location-estimation normal equations (~50),
//! * a dense real inversion for the basis projection matrix (<= 10),
//! * a pivoting tridiagonal complex solve for the finite-difference
//!   Helmholtz oracle (~8000 unknowns).
//!
//! All use partial pivoting and report near-singularity with a pivot-ratio
//! condition estimate instead of returning silent garbage.

use crate::error::{Error, Result};
use crate::scalar::{Cplx, Real};

/// Pivot magnitude below `max_pivot * n * epsilon` is treated as singular.
fn singular_guard<T: Real>(min_piv: T, max_piv: T, n: usize, context: &str) -> Result<()> {
    let thresh = max_piv * T::epsilon() * T::of(n as f64);
    if min_piv <= thresh {
        let cond = if min_piv > T::zero() {
            (max_piv / min_piv).as_f64()
        } else {
            f64::INFINITY
        };
        return Err(Error::Singular {
            context: context.to_string(),
            cond_estimate: cond,
        });
    }
    Ok(())
}

/// Solve the dense complex system `A x = b` in place by LU with partial
/// pivoting. `a` is row-major `n x n` and is destroyed; `b` becomes `x`.
pub fn solve_dense_complex<T: Real>(
    a: &mut [Cplx<T>],
    n: usize,
    b: &mut [Cplx<T>],
    context: &str,
) -> Result<()> {
    assert_eq!(a.len(), n * n, "matrix buffer must be n*n");
    assert_eq!(b.len(), n, "rhs length must be n");
    let mut max_piv = T::zero();
    let mut min_piv = T::infinity();
    for col in 0..n {
        // Partial pivot: largest |entry| in this column at or below the diagonal.
        let mut piv_row = col;
        let mut piv_mag = a[col * n + col].norm_sqr();
        for row in col + 1..n {
            let mag = a[row * n + col].norm_sqr();
            if mag > piv_mag {
                piv_mag = mag;
                piv_row = row;
            }
        }
        if piv_row != col {
            for k in 0..n {
                a.swap(col * n + k, piv_row * n + k);
            }
            b.swap(col, piv_row);
        }
        let piv = a[col * n + col];
        let piv_abs = piv.norm();
        max_piv = max_piv.max(piv_abs);
        min_piv = min_piv.min(piv_abs);
        if piv_abs == T::zero() {
            return Err(Error::Singular {
                context: context.to_string(),
                cond_estimate: f64::INFINITY,
            });
        }
        for row in col + 1..n {
            let factor = a[row * n + col] / piv;
            if factor.norm_sqr() == T::zero() {
                continue;
            }
            a[row * n + col] = factor; // store multiplier (not used again, but cheap)
            for k in col + 1..n {
                let upd = a[col * n + k] * factor;
                a[row * n + k] -= upd;
            }
            let upd = b[col] * factor;
            b[row] -= upd;
        }
    }
    singular_guard(min_piv, max_piv, n, context)?;
    // Back substitution on the upper triangle.
    for row in (0..n).rev() {
        let mut acc = b[row];
        for k in row + 1..n {
            acc -= a[row * n + k] * b[k];
        }
        b[row] = acc / a[row * n + row];
    }
    Ok(())
}

/// Invert a dense real matrix by Gauss–Jordan with partial pivoting.
///
/// Sized for the basis projection matrix (n <= 10); returns the inverse
/// row-major.
pub fn invert_dense_real<T: Real>(a: &[T], n: usize, context: &str) -> Result<Vec<T>> {
    assert_eq!(a.len(), n * n);
    let mut work = a.to_vec();
    let mut inv = vec![T::zero(); n * n];
    for d in 0..n {
        inv[d * n + d] = T::one();
    }
    let mut max_piv = T::zero();
    let mut min_piv = T::infinity();
    for col in 0..n {
        let mut piv_row = col;
        let mut piv_mag = work[col * n + col].abs();
        for row in col + 1..n {
            let mag = work[row * n + col].abs();
            if mag > piv_mag {
                piv_mag = mag;
                piv_row = row;
            }
        }
        if piv_row != col {
            for k in 0..n {
                work.swap(col * n + k, piv_row * n + k);
                inv.swap(col * n + k, piv_row * n + k);
            }
        }
        let piv = work[col * n + col];
        max_piv = max_piv.max(piv.abs());
        min_piv = min_piv.min(piv.abs());
        if piv.abs() == T::zero() {
            return Err(Error::Singular {
                context: context.to_string(),
                cond_estimate: f64::INFINITY,
            });
        }
        let inv_piv = T::one() / piv;
        for k in 0..n {
            work[col * n + k] *= inv_piv;
            inv[col * n + k] *= inv_piv;
        }
        for row in 0..n {
            if row == col {
                continue;
            }
            let factor = work[row * n + col];
            if factor == T::zero() {
                continue;
            }
            for k in 0..n {
                let wu = work[col * n + k] * factor;
                work[row * n + k] -= wu;
                let iu = inv[col * n + k] * factor;
                inv[row * n + k] -= iu;
            }
        }
    }
    singular_guard(min_piv, max_piv, n, context)?;
    Ok(inv)
}

/// Solve a complex tridiagonal system with partial pivoting.
///
/// `sub`, `diag`, `sup` are the three bands (`sub.len() == sup.len() ==
/// diag.len() - 1`); all buffers including `b` are destroyed and `b` becomes
/// the solution. Row swaps introduce a second superdiagonal, which is the
/// price of stability on indefinite Helmholtz stencils.
pub fn solve_tridiag_complex<T: Real>(
    sub: &mut [Cplx<T>],
    diag: &mut [Cplx<T>],
    sup: &mut [Cplx<T>],
    b: &mut [Cplx<T>],
    context: &str,
) -> Result<()> {
    let n = diag.len();
    assert!(n >= 2, "tridiagonal system needs at least 2 unknowns");
    assert_eq!(sub.len(), n - 1);
    assert_eq!(sup.len(), n - 1);
    assert_eq!(b.len(), n);
    // Second superdiagonal fill-in created by row swaps.
    let mut sup2 = vec![Cplx::new(T::zero(), T::zero()); n.saturating_sub(2)];
    let mut max_piv = T::zero();
    let mut min_piv = T::infinity();
    for idx in 0..n - 1 {
        // Row idx holds (diag, sup, sup2) over (x_idx, x_{idx+1}, x_{idx+2});
        // row idx+1 holds (sub, diag, sup) over the same unknowns.
        if diag[idx].norm_sqr() >= sub[idx].norm_sqr() {
            let piv = diag[idx];
            let piv_abs = piv.norm();
            max_piv = max_piv.max(piv_abs);
            min_piv = min_piv.min(piv_abs);
            if piv_abs == T::zero() {
                return Err(Error::Singular {
                    context: context.to_string(),
                    cond_estimate: f64::INFINITY,
                });
            }
            let factor = sub[idx] / piv;
            diag[idx + 1] -= factor * sup[idx];
            if idx + 2 < n {
                let upd = factor * sup2[idx];
                sup[idx + 1] -= upd;
            }
            let upd = factor * b[idx];
            b[idx + 1] -= upd;
        } else {
            // Swap rows idx and idx+1, then eliminate.
            let (r0_d, r0_u, r0_w) = (
                sub[idx],
                diag[idx + 1],
                if idx + 2 < n {
                    sup[idx + 1]
                } else {
                    Cplx::new(T::zero(), T::zero())
                },
            );
            let (r1_d, r1_u, r1_w) = (
                diag[idx],
                sup[idx],
                if idx + 2 < n {
                    sup2[idx]
                } else {
                    Cplx::new(T::zero(), T::zero())
                },
            );
            let bi = b[idx];
            b[idx] = b[idx + 1];
            let piv = r0_d;
            let piv_abs = piv.norm();
            max_piv = max_piv.max(piv_abs);
            min_piv = min_piv.min(piv_abs);
            // |sub| > |diag| >= 0 here, so the pivot cannot vanish.
            let factor = r1_d / piv;
            diag[idx] = r0_d;
            sup[idx] = r0_u;
            if idx + 2 < n {
                sup2[idx] = r0_w;
                sup[idx + 1] = r1_w - factor * r0_w;
            }
            diag[idx + 1] = r1_u - factor * r0_u;
            b[idx + 1] = bi - factor * b[idx];
        }
    }
    let last = diag[n - 1].norm();
    max_piv = max_piv.max(last);
    min_piv = min_piv.min(last);
    singular_guard(min_piv, max_piv, n, context)?;
    // Back substitution with the (possibly) filled second superdiagonal.
    b[n - 1] = b[n - 1] / diag[n - 1];
    if n >= 2 {
        let acc = b[n - 2] - sup[n - 2] * b[n - 1];
        b[n - 2] = acc / diag[n - 2];
    }
    for idx in (0..n.saturating_sub(2)).rev() {
        let acc = b[idx] - sup[idx] * b[idx + 1] - sup2[idx] * b[idx + 2];
        b[idx] = acc / diag[idx];
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::cplx;

    fn splitmix(state: &mut u64) -> f64 {
        // Deterministic light-weight generator for test matrices.
        *state = state.wrapping_add(0x9E3779B97F4A7C15);
        let mut z = *state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        let bits = (z ^ (z >> 31)) >> 11;
        bits as f64 / (1u64 << 53) as f64 * 2.0 - 1.0
    }

    #[test]
    fn dense_solve_matches_hand_2x2() {
        // (1+i) x + 2 y = 3;  x + (1-i) y = 2-i  has solution x = ?, verify by residual.
        let a0 = [cplx(1.0, 1.0), cplx(2.0, 0.0), cplx(1.0, 0.0), cplx(1.0, -1.0)];
        let b0 = [cplx(3.0, 0.0), cplx(2.0, -1.0)];
        let mut a = a0;
        let mut b = b0;
        solve_dense_complex(&mut a, 2, &mut b, "test").unwrap();
        for row in 0..2 {
            let mut acc = cplx(0.0, 0.0);
            for col in 0..2 {
                acc += a0[row * 2 + col] * b[col];
            }
            assert!((acc - b0[row]).norm() < 1e-14);
        }
    }

    #[test]
    fn dense_solve_small_residual_on_random_system() {
        let n = 40;
        let mut state = 7u64;
        let a0: Vec<_> = (0..n * n)
            .map(|idx| {
                let diag_boost = if idx % (n + 1) == 0 { 8.0 } else { 0.0 };
                cplx(splitmix(&mut state) + diag_boost, splitmix(&mut state))
            })
            .collect();
        let b0: Vec<_> = (0..n)
            .map(|_| cplx(splitmix(&mut state), splitmix(&mut state)))
            .collect();
        let mut a = a0.clone();
        let mut b = b0.clone();
        solve_dense_complex(&mut a, n, &mut b, "test").unwrap();
        let mut worst = 0.0f64;
        for row in 0..n {
            let mut acc = cplx(0.0, 0.0);
            for col in 0..n {
                acc += a0[row * n + col] * b[col];
            }
            worst = worst.max((acc - b0[row]).norm());
        }
        assert!(worst < 1e-11, "residual {worst}");
    }

    #[test]
    fn dense_solve_rejects_singular() {
        // Rank-1 matrix.
        let mut a = vec![cplx(1.0, 0.0); 9];
        let mut b = vec![cplx(1.0, 0.0); 3];
        let err = solve_dense_complex(&mut a, 3, &mut b, "rank1").unwrap_err();
        assert!(matches!(err, Error::Singular { .. }), "got {err:?}");
    }

    #[test]
    fn real_inverse_round_trips() {
        let n = 5;
        let mut state = 11u64;
        let a: Vec<f64> = (0..n * n)
            .map(|idx| splitmix(&mut state) + if idx % (n + 1) == 0 { 4.0 } else { 0.0 })
            .collect();
        let inv = invert_dense_real(&a, n, "test").unwrap();
        for row in 0..n {
            for col in 0..n {
                let mut acc = 0.0;
                for k in 0..n {
                    acc += a[row * n + k] * inv[k * n + col];
                }
                let want = if row == col { 1.0 } else { 0.0 };
                assert!((acc - want).abs() < 1e-12, "({row},{col}) -> {acc}");
            }
        }
    }

    #[test]
    fn tridiagonal_matches_dense_with_forced_pivoting() {
        let n = 60;
        let mut state = 3u64;
        // Zero every 7th diagonal entry to force row swaps.
        let sub0: Vec<_> = (0..n - 1)
            .map(|_| cplx(splitmix(&mut state), splitmix(&mut state)))
            .collect();
        let diag0: Vec<_> = (0..n)
            .map(|idx| {
                if idx % 7 == 3 {
                    cplx(0.0, 0.0)
                } else {
                    cplx(splitmix(&mut state) * 2.0, splitmix(&mut state))
                }
            })
            .collect();
        let sup0: Vec<_> = (0..n - 1)
            .map(|_| cplx(splitmix(&mut state), splitmix(&mut state)))
            .collect();
        let b0: Vec<_> = (0..n)
            .map(|_| cplx(splitmix(&mut state), splitmix(&mut state)))
            .collect();

        let mut sub = sub0.clone();
        let mut diag = diag0.clone();
        let mut sup = sup0.clone();
        let mut x = b0.clone();
        solve_tridiag_complex(&mut sub, &mut diag, &mut sup, &mut x, "test").unwrap();

        let mut worst = 0.0f64;
        for row in 0..n {
            let mut acc = cplx(0.0, 0.0);
            if row > 0 {
                acc += sub0[row - 1] * x[row - 1];
            }
            acc += diag0[row] * x[row];
            if row + 1 < n {
                acc += sup0[row] * x[row + 1];
            }
            worst = worst.max((acc - b0[row]).norm());
        }
        assert!(worst < 1e-10, "residual {worst}");
    }
}
