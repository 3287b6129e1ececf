//! Subspaces of GF(2)^n kept in canonical reduced row-echelon form.

use super::matrix::{BitMatrix, BitVec};
use crate::error::{Error, Result};

/// A linear subspace of `GF(2)^ambient_dim`.
///
/// The basis is the reduced row-echelon form of any spanning set, so two equal
/// subspaces always compare equal bit for bit.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace {
    ambient: usize,
    basis: BitMatrix,
    pivots: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Combine {
    Sum,
    Intersect,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Self {
            ambient,
            basis: BitMatrix::zeros(0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Self {
            ambient,
            basis: BitMatrix::identity(ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// Row space of `m`.
    pub fn row_space(m: &BitMatrix) -> Self {
        let mut reduced = m.clone();
        let pivots = reduced.rref_in_place();
        reduced.truncate_rows(pivots.len());
        Self {
            ambient: m.cols(),
            basis: reduced,
            pivots,
        }
    }

    pub fn span(ambient: usize, vectors: &[BitVec]) -> Self {
        Self::row_space(&BitMatrix::from_rows(ambient, vectors))
    }

    /// Span of the standard basis vectors with the given indices.
    pub fn coordinate(ambient: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let vecs: Vec<BitVec> = indices
            .into_iter()
            .map(|i| BitVec::unit(ambient, i))
            .collect();
        Self::span(ambient, &vecs)
    }

    #[inline]
    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    /// Basis in reduced row-echelon form, one vector per row.
    pub fn basis(&self) -> &BitMatrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<BitVec> {
        self.basis.row_vecs()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// Reduces `v` against the echelon basis; the result is zero iff `v` lies in the subspace.
    pub fn reduce(&self, v: &BitVec) -> BitVec {
        assert_eq!(v.len(), self.ambient, "vector length does not match ambient dimension");
        let mut words = v.words().to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            if (words[p / 64] >> (p % 64)) & 1 == 1 {
                for (w, b) in words.iter_mut().zip(self.basis.row_words(i)) {
                    *w ^= b;
                }
            }
        }
        BitVec::from_words(words, self.ambient)
    }

    pub fn contains(&self, v: &BitVec) -> bool {
        self.reduce(v).is_zero()
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient
            && self.dim() <= other.dim()
            && (0..self.dim()).all(|i| other.contains(&self.basis.row(i)))
    }

    fn check_ambient(&self, other: &Subspace, context: &'static str) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch {
                context,
                expected: self.ambient,
                found: other.ambient,
            });
        }
        Ok(())
    }

    pub fn combine(&self, other: &Subspace, mode: Combine) -> Result<Subspace> {
        self.check_ambient(other, "subspace combination")?;
        Ok(match mode {
            Combine::Sum => self.sum_unchecked(other),
            Combine::Intersect => self.intersect_unchecked(other),
        })
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.combine(other, Combine::Sum)
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.combine(other, Combine::Intersect)
    }

    fn sum_unchecked(&self, other: &Subspace) -> Subspace {
        if self.is_full() || other.dim() == 0 {
            return self.clone();
        }
        if other.is_full() || self.dim() == 0 {
            return other.clone();
        }
        Subspace::row_space(&self.basis.vstack(&other.basis))
    }

    /// Zassenhaus: reduce `[A | A ; B | 0]`; rows with vanishing left half span `A ∩ B`.
    fn intersect_unchecked(&self, other: &Subspace) -> Subspace {
        let n = self.ambient;
        if self.is_full() {
            return other.clone();
        }
        if other.is_full() {
            return self.clone();
        }
        if self.dim() == 0 || other.dim() == 0 {
            return Subspace::zero(n);
        }
        let top = self.basis.hstack(&self.basis);
        let bottom = other.basis.hstack(&BitMatrix::zeros(other.dim(), n));
        let mut m = top.vstack(&bottom);
        let pivots = m.rref_in_place();
        let rows: Vec<BitVec> = pivots
            .iter()
            .enumerate()
            .filter(|(_, &p)| p >= n)
            .map(|(i, _)| {
                let mut v = BitVec::zeros(n);
                for c in 0..n {
                    if m.get(i, n + c) {
                        v.set(c, true);
                    }
                }
                v
            })
            .collect();
        Subspace::span(n, &rows)
    }

    /// Vectors `f` of the ambient space with `f · s = 0` for every `s` in the subspace.
    pub fn annihilator(&self) -> Subspace {
        kernel_basis(&self.basis)
    }
}

/// Null space `{x : m x = 0}`.
pub fn kernel_basis(m: &BitMatrix) -> Subspace {
    let n = m.cols();
    let r = m.rref();
    let mut is_pivot = vec![false; n];
    for &p in &r.pivots {
        is_pivot[p] = true;
    }
    let vecs: Vec<BitVec> = (0..n)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = BitVec::unit(n, f);
            for (i, &p) in r.pivots.iter().enumerate() {
                if r.reduced.get(i, f) {
                    v.set(p, true);
                }
            }
            v
        })
        .collect();
    Subspace::span(n, &vecs)
}

/// Column space of `m`.
pub fn image(m: &BitMatrix) -> Subspace {
    Subspace::row_space(&m.transpose())
}

/// The image `m(s)`.
pub fn apply(m: &BitMatrix, s: &Subspace) -> Result<Subspace> {
    if m.cols() != s.ambient_dim() {
        return Err(Error::DimensionMismatch {
            context: "apply",
            expected: m.cols(),
            found: s.ambient_dim(),
        });
    }
    if s.is_full() {
        return Ok(image(m));
    }
    let imgs: Vec<BitVec> = s.basis_vectors().iter().map(|v| m.mul_vec(v)).collect();
    Ok(Subspace::span(m.rows(), &imgs))
}

/// `{x : m x ∈ s}`.
pub fn preimage(m: &BitMatrix, s: &Subspace) -> Result<Subspace> {
    if m.rows() != s.ambient_dim() {
        return Err(Error::DimensionMismatch {
            context: "preimage",
            expected: m.rows(),
            found: s.ambient_dim(),
        });
    }
    if s.is_full() {
        return Ok(Subspace::full(m.cols()));
    }
    if s.dim() == 0 {
        return Ok(kernel_basis(m));
    }
    // Row j of the transpose is m e_j; reducing it modulo s gives the composite
    // with the projection onto the echelon complement of s.
    let t = m.transpose();
    let reduced: Vec<BitVec> = (0..t.rows()).map(|j| s.reduce(&t.row(j))).collect();
    let r = BitMatrix::from_rows(m.rows(), &reduced).transpose();
    Ok(kernel_basis(&r))
}

pub fn quotient_dim(a: &Subspace, b: &Subspace) -> Result<usize> {
    a.check_ambient(b, "quotient")?;
    if !b.is_subspace_of(a) {
        return Err(Error::NotSubspace(
            "denominator is not contained in numerator".into(),
        ));
    }
    Ok(a.dim() - b.dim())
}

/// A chosen basis of `A / B` together with a coordinate map for vectors of `A`.
///
/// Representatives are rows of the echelon basis of `A` that are independent modulo
/// `B`, taken in order; when `A` is the whole space they are the unit vectors at the
/// non-pivot columns of `B`.
#[derive(Clone, Debug)]
pub struct QuotientBasis {
    ambient: usize,
    reps: Vec<BitVec>,
    kind: Reducer,
}

#[derive(Clone, Debug)]
enum Reducer {
    /// `A` is the full space; coordinates are the non-pivot entries after reducing by `B`.
    Full { denom: Subspace, free: Vec<usize> },
    /// Semi-echelon rows with their pivots and representative tags.
    General { rows: Vec<(usize, BitVec, BitVec)> },
}

impl QuotientBasis {
    pub fn new(a: &Subspace, b: &Subspace) -> Result<Self> {
        quotient_dim(a, b)?;
        let n = a.ambient_dim();
        if a.is_full() {
            let mut is_pivot = vec![false; n];
            for &p in b.pivots() {
                is_pivot[p] = true;
            }
            let free: Vec<usize> = (0..n).filter(|&c| !is_pivot[c]).collect();
            let reps = free.iter().map(|&c| BitVec::unit(n, c)).collect();
            return Ok(Self {
                ambient: n,
                reps,
                kind: Reducer::Full {
                    denom: b.clone(),
                    free,
                },
            });
        }
        let k = a.dim() - b.dim();
        let mut rows: Vec<(usize, BitVec, BitVec)> = b
            .basis_vectors()
            .into_iter()
            .zip(b.pivots().iter().copied())
            .map(|(v, p)| (p, v, BitVec::zeros(k)))
            .collect();
        let mut reps = Vec::with_capacity(k);
        for v in a.basis_vectors() {
            if reps.len() == k {
                break;
            }
            let mut r = v.clone();
            let mut tag = BitVec::zeros(k);
            for (p, row, t) in &rows {
                if r.get(*p) {
                    r.xor_assign(row);
                    tag.xor_assign(t);
                }
            }
            if let Some(p) = r.first_one() {
                tag.flip(reps.len());
                reps.push(v);
                rows.push((p, r, tag));
            }
        }
        debug_assert_eq!(reps.len(), k);
        Ok(Self {
            ambient: n,
            reps,
            kind: Reducer::General { rows },
        })
    }

    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn representatives(&self) -> &[BitVec] {
        &self.reps
    }

    /// Coordinates of the coset `y + B`; fails if `y` is not in `A`.
    pub fn coords(&self, y: &BitVec) -> Result<BitVec> {
        match &self.kind {
            Reducer::Full { denom, free } => {
                let r = denom.reduce(y);
                let mut out = BitVec::zeros(free.len());
                for (j, &c) in free.iter().enumerate() {
                    if r.get(c) {
                        out.set(j, true);
                    }
                }
                Ok(out)
            }
            Reducer::General { rows } => {
                let mut r = y.clone();
                let mut tag = BitVec::zeros(self.reps.len());
                for (p, row, t) in rows {
                    if r.get(*p) {
                        r.xor_assign(row);
                        tag.xor_assign(t);
                    }
                }
                if !r.is_zero() {
                    return Err(Error::NotSubspace("vector outside numerator".into()));
                }
                Ok(tag)
            }
        }
    }

    /// Maps a subspace `S` with `B ⊆ S + B ⊆ A` to its image in quotient coordinates.
    pub fn project(&self, s: &Subspace) -> Result<Subspace> {
        let vecs = s
            .basis_vectors()
            .iter()
            .map(|v| self.coords(v))
            .collect::<Result<Vec<_>>>()?;
        Ok(Subspace::span(self.dim(), &vecs))
    }

    /// Lifts quotient coordinates to a vector of `A`.
    pub fn lift(&self, coords: &BitVec) -> BitVec {
        let mut v = BitVec::zeros(self.ambient);
        for j in coords.ones() {
            v.xor_assign(&self.reps[j]);
        }
        v
    }
}

/// Matrix of the map `domA/domB → codC/codD` induced by `m`, in the coordinates of
/// [`QuotientBasis`].
pub fn induced_map(
    m: &BitMatrix,
    dom_a: &Subspace,
    dom_b: &Subspace,
    cod_c: &Subspace,
    cod_d: &Subspace,
) -> Result<BitMatrix> {
    let dom = QuotientBasis::new(dom_a, dom_b)
        .map_err(|_| Error::NotSubspace("domB ⊄ domA".into()))?;
    let cod = QuotientBasis::new(cod_c, cod_d)
        .map_err(|_| Error::NotSubspace("codD ⊄ codC".into()))?;
    induced_map_with(m, &dom, dom_b, &cod, cod_d)
}

/// Same as [`induced_map`] with precomputed quotient bases.
pub fn induced_map_with(
    m: &BitMatrix,
    dom: &QuotientBasis,
    dom_b: &Subspace,
    cod: &QuotientBasis,
    cod_d: &Subspace,
) -> Result<BitMatrix> {
    if m.cols() != dom.ambient_dim() || m.rows() != cod.ambient_dim() {
        return Err(Error::DimensionMismatch {
            context: "induced map",
            expected: m.cols(),
            found: dom.ambient_dim(),
        });
    }
    for v in dom_b.basis_vectors() {
        if !cod_d.contains(&m.mul_vec(&v)) {
            return Err(Error::NotSubspace("m(domB) ⊄ codD".into()));
        }
    }
    let mut out = BitMatrix::zeros(cod.dim(), dom.dim());
    for (j, rep) in dom.representatives().iter().enumerate() {
        let c = cod
            .coords(&m.mul_vec(rep))
            .map_err(|_| Error::NotSubspace("m(domA) ⊄ codC".into()))?;
        for i in c.ones() {
            out.set(i, j, true);
        }
    }
    Ok(out)
}
