//! Exact dense linear algebra over the two-element field.

mod matrix;
mod subspace;

pub use matrix::{BitMatrix, BitVec, Rref};
pub use subspace::{
    apply, image, induced_map, induced_map_with, kernel_basis, preimage, quotient_dim, Combine,
    QuotientBasis, Subspace,
};

/// Reduced row-echelon form, rank and pivot columns of `m`.
pub fn rref_rank(m: &BitMatrix) -> Rref {
    m.rref()
}
