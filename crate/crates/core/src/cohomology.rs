//! Betti tables, cocycle representatives and induced actions on cohomology.

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{BimoduleSpec, BracketTable, ModuleSpec};
use crate::cochain::{lie_derivative_matrix, ComplexTower, Flavor, TowerKind};
use crate::error::{Error, Result};
use crate::f2la::{image, induced_map, kernel_basis, BitMatrix, BitVec, QuotientBasis, Subspace};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiTable {
    pub kind: TowerKind,
    pub label: String,
    /// `dims[n] = dim H^n` for `n < n_max`.
    pub dims: Vec<usize>,
}

impl BettiTable {
    pub fn get(&self, n: usize) -> usize {
        self.dims[n]
    }

    pub fn len(&self) -> usize {
        self.dims.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dims.is_empty()
    }

    pub fn vanishes_through(&self, n: usize) -> bool {
        self.dims[..=n.min(self.dims.len() - 1)].iter().all(|&x| x == 0)
    }
}

/// Cohomology dimensions in degrees `0..n_max` (the top degree is left out since its
/// outgoing differential is not part of the tower).
pub fn betti_table(c: &ComplexTower) -> Result<BettiTable> {
    c.check_composition()?;
    let ranks: Vec<usize> = c.diffs().par_iter().map(BitMatrix::rank).collect();
    let dims = (0..c.n_max())
        .map(|n| c.dim(n) - ranks[n] - if n > 0 { ranks[n - 1] } else { 0 })
        .collect();
    Ok(BettiTable {
        kind: c.kind.clone(),
        label: c.label.clone(),
        dims,
    })
}

/// `ker d^n` and `im d^{n-1}` inside `C^n`.
pub fn cycles_and_boundaries(c: &ComplexTower, n: usize) -> Result<(Subspace, Subspace)> {
    if n >= c.n_max() {
        return Err(Error::DegreeOutOfRange {
            degree: n,
            max: c.n_max().saturating_sub(1),
        });
    }
    let z = kernel_basis(c.diff(n));
    let b = if n == 0 {
        Subspace::zero(c.dim(0))
    } else {
        image(c.diff(n - 1))
    };
    if !b.is_subspace_of(&z) {
        return Err(Error::NonZeroComposition { degree: n.saturating_sub(1) });
    }
    Ok((z, b))
}

/// Cocycles whose classes form a basis of `H^n`, chosen at echelon pivots.
pub fn cocycle_representatives(c: &ComplexTower, n: usize) -> Result<Vec<BitVec>> {
    let (z, b) = cycles_and_boundaries(c, n)?;
    Ok(QuotientBasis::new(&z, &b)?.representatives().to_vec())
}

/// Map on `H^n` induced by a degree-preserving operator `op` on `C^n`, in the
/// coordinates of [`cocycle_representatives`].
pub fn induced_cohomology_map(op: &BitMatrix, c: &ComplexTower, n: usize) -> Result<BitMatrix> {
    let (z, b) = cycles_and_boundaries(c, n)?;
    if op.rows() != c.dim(n) || op.cols() != c.dim(n) {
        return Err(Error::DimensionMismatch {
            context: "cohomology operator",
            expected: c.dim(n),
            found: op.cols(),
        });
    }
    for v in z.basis_vectors() {
        if !z.contains(&op.mul_vec(&v)) {
            return Err(Error::ActionIllDefined {
                what: "cocycles",
                degree: n,
            });
        }
    }
    for v in b.basis_vectors() {
        if !b.contains(&op.mul_vec(&v)) {
            return Err(Error::ActionIllDefined {
                what: "coboundaries",
                degree: n,
            });
        }
    }
    induced_map(op, &z, &b, &z, &b)
}

/// Action of `x ∈ g` on `HS^n(h, M)` for the commutative cochains of a subalgebra `h`
/// spanned by the first `h_dim` basis vectors of `t` (an adapted basis).
///
/// The operator is the Lie derivative with the adjoint action of `x` on the arguments,
/// restricted to `h`, and the module action of `x` on values.
pub fn induced_cohomology_action(
    x: &BitVec,
    t: &BracketTable,
    h_dim: usize,
    m: &BimoduleSpec,
    h_tower: &ComplexTower,
    n: usize,
) -> Result<BitMatrix> {
    let ad = t.ad(x);
    let mut ad_h = BitMatrix::zeros(h_dim, h_dim);
    for j in 0..h_dim {
        for i in 0..t.dim() {
            if ad.get(i, j) {
                if i >= h_dim {
                    return Err(Error::ActionIllDefined {
                        what: "the subalgebra under the adjoint action",
                        degree: n,
                    });
                }
                ad_h.set(i, j, true);
            }
        }
    }
    let action = ModuleSpec::new(m.dim(), m.left().to_vec()).action_of(x);
    let op = lie_derivative_matrix(Flavor::Sym, &ad_h, &action, n);
    induced_cohomology_map(&op, h_tower, n)
}
