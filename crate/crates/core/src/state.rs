//! The discrete unknown: `n_comp` complex component functions on the
//! spatial grid, with the small vector-space algebra the minimizers need.
//!
//! Componentwise storage is row-major (`component`-major), so each component
//! function is one contiguous slice — the layout every stencil loop wants.

use crate::scalar::{Cplx, Real};

/// `n_comp` complex functions sampled on `n_nodes` spatial nodes.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector<T: Real> {
    n_comp: usize,
    n_nodes: usize,
    data: Vec<Cplx<T>>,
}

impl<T: Real> StateVector<T> {
    /// All-zero state.
    pub fn zeros(n_comp: usize, n_nodes: usize) -> Self {
        Self {
            n_comp,
            n_nodes,
            data: vec![Cplx::new(T::zero(), T::zero()); n_comp * n_nodes],
        }
    }

    /// Take ownership of raw component-major data.
    pub fn from_raw(n_comp: usize, n_nodes: usize, data: Vec<Cplx<T>>) -> Self {
        assert_eq!(data.len(), n_comp * n_nodes);
        Self {
            n_comp,
            n_nodes,
            data,
        }
    }

    /// Number of component functions.
    pub fn n_comp(&self) -> usize {
        self.n_comp
    }

    /// Number of spatial nodes per component.
    pub fn n_nodes(&self) -> usize {
        self.n_nodes
    }

    /// One component as a slice.
    pub fn comp(&self, s: usize) -> &[Cplx<T>] {
        &self.data[s * self.n_nodes..(s + 1) * self.n_nodes]
    }

    /// One component, mutable.
    pub fn comp_mut(&mut self, s: usize) -> &mut [Cplx<T>] {
        &mut self.data[s * self.n_nodes..(s + 1) * self.n_nodes]
    }

    /// Raw data, component-major.
    pub fn raw(&self) -> &[Cplx<T>] {
        &self.data
    }

    /// Raw data, mutable.
    pub fn raw_mut(&mut self) -> &mut [Cplx<T>] {
        &mut self.data
    }

    /// `self + scale * other`, allocating the result.
    pub fn add_scaled(&self, other: &Self, scale: T) -> Self {
        debug_assert_eq!(self.data.len(), other.data.len());
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| a + b * scale)
            .collect();
        Self {
            n_comp: self.n_comp,
            n_nodes: self.n_nodes,
            data,
        }
    }

    /// `self - other`, allocating the result.
    pub fn sub(&self, other: &Self) -> Self {
        self.add_scaled(other, -T::one())
    }

    /// Real inner product of the underlying 2N real fields:
    /// `sum Re(conj(a) b)`.
    pub fn dot_real(&self, other: &Self) -> T {
        debug_assert_eq!(self.data.len(), other.data.len());
        self.data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| (a.conj() * b).re)
            .sum()
    }

    /// Squared Euclidean norm of the raw node values (not the H2 norm).
    pub fn norm_sqr(&self) -> T {
        self.data.iter().map(|v| v.norm_sqr()).sum()
    }

    /// Scale in place.
    pub fn scale(&mut self, factor: T) {
        for v in &mut self.data {
            *v = *v * factor;
        }
    }

    /// Largest absolute value over all real/imaginary parts; used for
    /// finiteness checks.
    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|v| v.re.is_finite() && v.im.is_finite())
    }
}
