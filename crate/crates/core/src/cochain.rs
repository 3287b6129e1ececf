//! Monomial bases of symmetric, exterior and tensor powers, the coboundary
//! matrices of the three cochain complexes, the operators `i_x` and `L_x`, and the
//! inclusions between the complexes.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{check_bimodule_axioms, AlgebraClass, BimoduleSpec, BracketTable};
use crate::error::{Error, Result};
use crate::f2la::{BitMatrix, BitVec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Flavor {
    /// Cochains on `S^n g`: commutative cohomology `HS`.
    Sym,
    /// Cochains on `Λ^n g`: Chevalley-Eilenberg cohomology `H`.
    Ext,
    /// Cochains on `⊗^n g`: Leibniz cohomology `HL`.
    Tensor,
}

impl Flavor {
    pub const ALL: [Flavor; 3] = [Flavor::Sym, Flavor::Ext, Flavor::Tensor];

    pub fn name(self) -> &'static str {
        match self {
            Flavor::Sym => "sym",
            Flavor::Ext => "ext",
            Flavor::Tensor => "tensor",
        }
    }

    pub fn parse(s: &str) -> Result<Flavor> {
        match s {
            "sym" => Ok(Flavor::Sym),
            "ext" => Ok(Flavor::Ext),
            "tensor" => Ok(Flavor::Tensor),
            _ => Err(Error::UnknownName {
                kind: "flavor",
                name: s.to_string(),
            }),
        }
    }

    /// The identities an algebra needs for this complex to be defined.
    pub fn check_algebra(self, class: &AlgebraClass) -> Result<()> {
        let (ok, axiom) = match self {
            Flavor::Sym => (class.commutative && class.jacobi, "commutativity and the Jacobi identity"),
            Flavor::Ext => (class.alternating && class.jacobi, "alternativity and the Jacobi identity"),
            Flavor::Tensor => (class.left_leibniz, "the left Leibniz identity"),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::Precondition {
                axiom,
                needed_for: format!("{} cochains", self.name()),
            })
        }
    }
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as usize
}

/// Number of monomials of degree `n` in `d` variables for the given flavor.
pub fn basis_dim(flavor: Flavor, d: usize, n: usize) -> usize {
    match flavor {
        Flavor::Sym => {
            if n == 0 {
                1
            } else if d == 0 {
                0
            } else {
                binomial(d + n - 1, n)
            }
        }
        Flavor::Ext => binomial(d, n),
        Flavor::Tensor => d.pow(n as u32),
    }
}

/// Monomials of one degree in colexicographic order. Sym and Ext monomials are
/// stored as sorted index tuples; tensor words as they are.
#[derive(Clone, Debug)]
pub struct MonomialBasis {
    flavor: Flavor,
    d: usize,
    n: usize,
    monos: Vec<Vec<u8>>,
    index: HashMap<Vec<u8>, usize>,
}

impl MonomialBasis {
    pub fn new(flavor: Flavor, d: usize, n: usize) -> Self {
        assert!(d < 256, "algebra dimension too large for monomial indexing");
        let mut monos = Vec::with_capacity(basis_dim(flavor, d, n));
        match flavor {
            Flavor::Tensor => {
                let total = basis_dim(flavor, d, n);
                for mut r in 0..total {
                    let mut w = vec![0u8; n];
                    for slot in w.iter_mut() {
                        *slot = (r % d) as u8;
                        r /= d;
                    }
                    monos.push(w);
                }
            }
            Flavor::Sym | Flavor::Ext => {
                let strict = flavor == Flavor::Ext;
                let mut cur = Vec::with_capacity(n);
                gen_sorted(d, n, strict, 0, &mut cur, &mut monos);
                monos.sort_by(|a, b| a.iter().rev().cmp(b.iter().rev()));
            }
        }
        let index = match flavor {
            Flavor::Tensor => HashMap::new(),
            _ => monos.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect(),
        };
        Self {
            flavor,
            d,
            n,
            monos,
            index,
        }
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.monos.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monos.is_empty()
    }

    pub fn monomials(&self) -> &[Vec<u8>] {
        &self.monos
    }

    /// Position of the monomial represented by `word`, or `None` when the word
    /// vanishes in this flavor (a repeated index in an exterior power).
    pub fn rank(&self, word: &[u8]) -> Option<usize> {
        debug_assert_eq!(word.len(), self.n);
        match self.flavor {
            Flavor::Tensor => {
                let mut r = 0usize;
                for &x in word.iter().rev() {
                    r = r * self.d + x as usize;
                }
                Some(r)
            }
            Flavor::Sym => {
                let mut w = word.to_vec();
                w.sort_unstable();
                self.index.get(&w).copied()
            }
            Flavor::Ext => {
                let mut w = word.to_vec();
                w.sort_unstable();
                if w.windows(2).any(|p| p[0] == p[1]) {
                    return None;
                }
                self.index.get(&w).copied()
            }
        }
    }
}

fn gen_sorted(d: usize, n: usize, strict: bool, start: usize, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
    if cur.len() == n {
        out.push(cur.clone());
        return;
    }
    for x in start..d {
        cur.push(x as u8);
        gen_sorted(d, n, strict, if strict { x + 1 } else { x }, cur, out);
        cur.pop();
    }
}

/// Dense builder for block matrices over monomial × coefficient coordinates.
struct BlockBuilder {
    m: usize,
    out: BitMatrix,
}

impl BlockBuilder {
    fn new(row_blocks: usize, col_blocks: usize, m: usize) -> Self {
        Self {
            m,
            out: BitMatrix::zeros(row_blocks * m, col_blocks * m),
        }
    }

    fn add(&mut self, r: usize, c: usize, block: &BitMatrix) {
        for i in 0..self.m {
            for j in 0..self.m {
                if block.get(i, j) {
                    self.out.flip(r * self.m + i, c * self.m + j);
                }
            }
        }
    }

    fn add_identity(&mut self, r: usize, c: usize) {
        for i in 0..self.m {
            self.out.flip(r * self.m + i, c * self.m + i);
        }
    }
}

fn check_inputs(flavor: Flavor, t: &BracketTable, m: &BimoduleSpec) -> Result<()> {
    flavor.check_algebra(&t.classify())?;
    if m.algebra_dim() != t.dim() {
        return Err(Error::DimensionMismatch {
            context: "coefficient module",
            expected: t.dim(),
            found: m.algebra_dim(),
        });
    }
    if flavor != Flavor::Tensor && !m.is_symmetric() {
        return Err(Error::Precondition {
            axiom: "symmetric bimodule coefficients",
            needed_for: format!("{} cochains", flavor.name()),
        });
    }
    check_bimodule_axioms(t, m)?.into_result()
}

/// Matrix of `d^n : C^n → C^{n+1}` for the flavor.
///
/// Sym and Ext use the Chevalley-Eilenberg formula evaluated on sorted
/// representative words. Tensor uses the Loday form
/// `(df)(x_1..x_{n+1}) = Σ_{i≤n} x_i·f(..x̂_i..) + f(x_1..x_n)·x_{n+1}
///   + Σ_{i<j} f(x_1..x̂_i..x_{j-1},[x_i,x_j],x_{j+1}..)`.
pub fn differential_matrix(flavor: Flavor, t: &BracketTable, m: &BimoduleSpec, n: usize) -> Result<BitMatrix> {
    check_inputs(flavor, t, m)?;
    Ok(differential_unchecked(flavor, t, m, n))
}

pub(crate) fn differential_unchecked(flavor: Flavor, t: &BracketTable, m: &BimoduleSpec, n: usize) -> BitMatrix {
    let d = t.dim();
    let src = MonomialBasis::new(flavor, d, n);
    let dst = MonomialBasis::new(flavor, d, n + 1);
    let mut b = BlockBuilder::new(dst.len(), src.len(), m.dim());
    let mut scratch = Vec::with_capacity(n + 1);
    for (r, w) in dst.monomials().iter().enumerate() {
        for i in 0..=n {
            scratch.clear();
            scratch.extend(w.iter().enumerate().filter(|&(k, _)| k != i).map(|(_, &x)| x));
            if let Some(c) = src.rank(&scratch) {
                let act = if flavor == Flavor::Tensor && i == n {
                    &m.right()[w[i] as usize]
                } else {
                    &m.left()[w[i] as usize]
                };
                b.add(r, c, act);
            }
        }
        for i in 0..=n {
            for j in i + 1..=n {
                let br = t.bracket(w[i] as usize, w[j] as usize);
                for k in br.ones() {
                    scratch.clear();
                    match flavor {
                        Flavor::Tensor => {
                            for (p, &x) in w.iter().enumerate() {
                                if p == i {
                                    continue;
                                }
                                scratch.push(if p == j { k as u8 } else { x });
                            }
                        }
                        _ => {
                            scratch.push(k as u8);
                            scratch.extend(
                                w.iter().enumerate().filter(|&(p, _)| p != i && p != j).map(|(_, &x)| x),
                            );
                        }
                    }
                    if let Some(c) = src.rank(&scratch) {
                        b.add_identity(r, c);
                    }
                }
            }
        }
    }
    b.out
}

/// An operator on cochains determined by an element of the algebra.
#[derive(Clone, Debug)]
pub enum OperatorKind {
    Insertion(BitVec),
    LieDerivative(BitVec),
}

/// Matrix of `i_x : C^n → C^{n-1}` or `L_x : C^n → C^n`.
pub fn operator_matrix(
    kind: &OperatorKind,
    flavor: Flavor,
    t: &BracketTable,
    m: &BimoduleSpec,
    n: usize,
) -> Result<BitMatrix> {
    check_inputs(flavor, t, m)?;
    let x = match kind {
        OperatorKind::Insertion(x) | OperatorKind::LieDerivative(x) => x,
    };
    if x.len() != t.dim() {
        return Err(Error::DimensionMismatch {
            context: "operator element",
            expected: t.dim(),
            found: x.len(),
        });
    }
    Ok(match kind {
        OperatorKind::Insertion(x) => insertion_matrix(flavor, t.dim(), m.dim(), x, n),
        OperatorKind::LieDerivative(x) => {
            let action = m.left_module().action_of(x);
            lie_derivative_matrix(flavor, &t.ad(x), &action, n)
        }
    })
}

/// `(i_x f)(x_1..x_{n-1}) = f(x, x_1..x_{n-1})`; for `n = 0` the map to the zero space.
pub fn insertion_matrix(flavor: Flavor, d: usize, mdim: usize, x: &BitVec, n: usize) -> BitMatrix {
    let src = MonomialBasis::new(flavor, d, n);
    if n == 0 {
        return BitMatrix::zeros(0, src.len() * mdim);
    }
    let dst = MonomialBasis::new(flavor, d, n - 1);
    let mut b = BlockBuilder::new(dst.len(), src.len(), mdim);
    let mut scratch = Vec::with_capacity(n);
    for (r, w) in dst.monomials().iter().enumerate() {
        for k in x.ones() {
            scratch.clear();
            scratch.push(k as u8);
            scratch.extend_from_slice(w);
            if let Some(c) = src.rank(&scratch) {
                b.add_identity(r, c);
            }
        }
    }
    b.out
}

/// `(L f)(x_1..x_n) = A·f(x_1..x_n) + Σ_i f(x_1..D x_i..x_n)` for a derivation-like
/// matrix `D` on the argument space and an action `A` on the values.
pub fn lie_derivative_matrix(flavor: Flavor, ad: &BitMatrix, action: &BitMatrix, n: usize) -> BitMatrix {
    let d = ad.rows();
    let mdim = action.rows();
    let basis = MonomialBasis::new(flavor, d, n);
    let mut b = BlockBuilder::new(basis.len(), basis.len(), mdim);
    let mut scratch = Vec::with_capacity(n);
    for (r, w) in basis.monomials().iter().enumerate() {
        b.add(r, r, action);
        for i in 0..n {
            for k in (0..d).filter(|&k| ad.get(k, w[i] as usize)) {
                scratch.clear();
                scratch.extend_from_slice(w);
                scratch[i] = k as u8;
                if let Some(c) = basis.rank(&scratch) {
                    b.add_identity(r, c);
                }
            }
        }
    }
    b.out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Inclusion {
    /// Chevalley-Eilenberg into Leibniz cochains.
    I1,
    /// Chevalley-Eilenberg into commutative cochains.
    I2,
    /// Commutative into Leibniz cochains.
    I3,
}

impl Inclusion {
    pub fn source(self) -> Flavor {
        match self {
            Inclusion::I1 | Inclusion::I2 => Flavor::Ext,
            Inclusion::I3 => Flavor::Sym,
        }
    }

    pub fn target(self) -> Flavor {
        match self {
            Inclusion::I1 | Inclusion::I3 => Flavor::Tensor,
            Inclusion::I2 => Flavor::Sym,
        }
    }
}

/// Pullback along the quotient of argument spaces, from `source` to `target` cochains.
pub fn inclusion_matrix(which: Inclusion, t: &BracketTable, m: &BimoduleSpec, n: usize) -> Result<BitMatrix> {
    let class = t.classify();
    match which {
        Inclusion::I1 | Inclusion::I2 => Flavor::Ext.check_algebra(&class)?,
        Inclusion::I3 => Flavor::Sym.check_algebra(&class)?,
    }
    check_inputs(which.target(), t, m)?;
    Ok(pullback_matrix(which.source(), which.target(), t.dim(), m.dim(), n))
}

/// Block matrix sending `f` on `source` monomials to `f ∘ q` on `target` monomials.
pub(crate) fn pullback_matrix(source: Flavor, target: Flavor, d: usize, mdim: usize, n: usize) -> BitMatrix {
    let src = MonomialBasis::new(source, d, n);
    let dst = MonomialBasis::new(target, d, n);
    let mut b = BlockBuilder::new(dst.len(), src.len(), mdim);
    for (r, w) in dst.monomials().iter().enumerate() {
        if let Some(c) = src.rank(w) {
            b.add_identity(r, c);
        }
    }
    b.out
}

/// Provenance tag of a tower.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TowerKind {
    Sym,
    Ext,
    Tensor,
    Quotient,
}

impl From<Flavor> for TowerKind {
    fn from(f: Flavor) -> Self {
        match f {
            Flavor::Sym => TowerKind::Sym,
            Flavor::Ext => TowerKind::Ext,
            Flavor::Tensor => TowerKind::Tensor,
        }
    }
}

/// Cochain spaces `C^0..C^{n_max}` with differentials `d^0..d^{n_max-1}`.
#[derive(Clone, Debug)]
pub struct ComplexTower {
    pub kind: TowerKind,
    pub label: String,
    dims: Vec<usize>,
    diffs: Vec<BitMatrix>,
}

impl ComplexTower {
    pub fn new(kind: TowerKind, label: impl Into<String>, dims: Vec<usize>, diffs: Vec<BitMatrix>) -> Result<Self> {
        if dims.len() != diffs.len() + 1 {
            return Err(Error::DimensionMismatch {
                context: "tower length",
                expected: diffs.len() + 1,
                found: dims.len(),
            });
        }
        for (n, dm) in diffs.iter().enumerate() {
            if dm.cols() != dims[n] || dm.rows() != dims[n + 1] {
                return Err(Error::DimensionMismatch {
                    context: "tower differential shape",
                    expected: dims[n],
                    found: dm.cols(),
                });
            }
        }
        Ok(Self {
            kind,
            label: label.into(),
            dims,
            diffs,
        })
    }

    /// The complex of `flavor` cochains up to degree `n_max`.
    pub fn build(flavor: Flavor, t: &BracketTable, m: &BimoduleSpec, n_max: usize) -> Result<Self> {
        check_inputs(flavor, t, m)?;
        let diffs: Vec<BitMatrix> = (0..n_max)
            .into_par_iter()
            .map(|n| differential_unchecked(flavor, t, m, n))
            .collect();
        let dims = (0..=n_max).map(|n| basis_dim(flavor, t.dim(), n) * m.dim()).collect();
        Self::new(flavor.into(), flavor.name(), dims, diffs)
    }

    pub fn n_max(&self) -> usize {
        self.diffs.len()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self, n: usize) -> usize {
        self.dims[n]
    }

    pub fn diffs(&self) -> &[BitMatrix] {
        &self.diffs
    }

    pub fn diff(&self, n: usize) -> &BitMatrix {
        &self.diffs[n]
    }

    /// First degree `n` with `d^{n+1} d^n ≠ 0`, if any.
    pub fn composition_defect(&self) -> Option<usize> {
        (0..self.diffs.len().saturating_sub(1)).find(|&n| !self.diffs[n + 1].mul(&self.diffs[n]).is_zero())
    }

    pub fn check_composition(&self) -> Result<()> {
        match self.composition_defect() {
            Some(degree) => Err(Error::NonZeroComposition { degree }),
            None => Ok(()),
        }
    }
}
