//! Quadrature rules: Gauss–Legendre nodes/weights and composite trapezoid.
//!
//! Gauss–Legendre with 64 points integrates polynomials up to degree 127
//! exactly, which makes it the verification oracle for every wave-number
//! integral in the crate (basis Gram matrices, projection matrices, Galerkin
//! tensors): the integrands are (polynomial of degree <= 2N) x e^{2k}-type
//! products whose quadrature error at N <= 10 is far below every stated
//! tolerance. The composite trapezoid rule is used where the spec demands it
//! (forward-solver collocation, spatial norms, data-grid projections).

use crate::scalar::Real;

/// Gauss–Legendre nodes and weights on `[a, b]`.
///
/// Nodes are computed in `f64` by Newton iteration on the three-term
/// Legendre recurrence (machine-precision roots in < 10 iterations) and
/// then converted to the target scalar.
pub fn gauss_legendre<T: Real>(n: usize, a: T, b: T) -> (Vec<T>, Vec<T>) {
    assert!(n >= 1, "Gauss-Legendre order must be at least 1");
    let mut nodes = vec![T::zero(); n];
    let mut weights = vec![T::zero(); n];
    let af = a.as_f64();
    let bf = b.as_f64();
    let half_len = 0.5 * (bf - af);
    let mid = 0.5 * (bf + af);
    // Roots come in +/- pairs; solve for the non-negative half.
    for i in 0..n.div_ceil(2) {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            // Evaluate P_n(x) and P_n'(x) by the recurrence
            // (j+1) P_{j+1} = (2j+1) x P_j - j P_{j-1}.
            let mut p0 = 1.0f64;
            let mut p1 = x;
            for j in 1..n {
                let p2 = ((2 * j + 1) as f64 * x * p1 - j as f64 * p0) / (j + 1) as f64;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                // One more sweep after convergence polishes the last bit.
            }
            if dx.abs() < 1e-17 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = T::of(mid - half_len * x);
        nodes[n - 1 - i] = T::of(mid + half_len * x);
        weights[i] = T::of(half_len * w);
        weights[n - 1 - i] = T::of(half_len * w);
    }
    (nodes, weights)
}

/// Composite trapezoid weights for `n_nodes` equispaced nodes with spacing `h`.
///
/// Interior nodes weigh `h`, endpoints `h/2`; a single node gets weight 0
/// (degenerate interval).
pub fn trapezoid_weights<T: Real>(n_nodes: usize, h: T) -> Vec<T> {
    assert!(n_nodes >= 1);
    if n_nodes == 1 {
        return vec![T::zero()];
    }
    let mut w = vec![h; n_nodes];
    let half = h / T::of(2.0);
    w[0] = half;
    w[n_nodes - 1] = half;
    w
}

/// Composite trapezoid integral of samples with spacing `h`.
pub fn integrate_trapezoid<T: Real>(values: &[T], h: T) -> T {
    if values.len() < 2 {
        return T::zero();
    }
    let inner: T = values[1..values.len() - 1].iter().copied().sum();
    let ends = (values[0] + values[values.len() - 1]) / T::of(2.0);
    (inner + ends) * h
}
