//! Structure constants of algebras over GF(2), axiom classification, coefficient
//! modules and bimodules, Leibniz kernels, ideals and quotients.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::f2la::{BitMatrix, BitVec, Subspace};

/// Structure constants of a `dim`-dimensional algebra: `[b_i, b_j] = Σ_k c[i][j]_k b_k`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BracketTable {
    dim: usize,
    labels: Vec<String>,
    c: Vec<BitVec>,
}

/// Which identities a bracket table satisfies, recomputed from the constants.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct AlgebraClass {
    pub commutative: bool,
    pub alternating: bool,
    pub jacobi: bool,
    pub left_leibniz: bool,
}

impl AlgebraClass {
    pub fn is_commutative_lie(&self) -> bool {
        self.commutative && self.jacobi
    }

    pub fn is_lie(&self) -> bool {
        self.alternating && self.jacobi
    }
}

impl BracketTable {
    /// The abelian algebra on `labels`.
    pub fn zero(labels: Vec<String>) -> Self {
        let dim = labels.len();
        Self {
            dim,
            labels,
            c: vec![BitVec::zeros(dim); dim * dim],
        }
    }

    pub fn abelian(dim: usize) -> Self {
        Self::zero((0..dim).map(|i| format!("b{i}")).collect())
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label_index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    #[inline]
    pub fn bracket(&self, i: usize, j: usize) -> &BitVec {
        &self.c[i * self.dim + j]
    }

    pub fn set_bracket(&mut self, i: usize, j: usize, value: BitVec) {
        assert_eq!(value.len(), self.dim, "bracket value has wrong length");
        self.c[i * self.dim + j] = value;
    }

    /// Bilinear extension `[x, y]`.
    pub fn bracket_vec(&self, x: &BitVec, y: &BitVec) -> BitVec {
        let mut out = BitVec::zeros(self.dim);
        for i in x.ones() {
            for j in y.ones() {
                out.xor_assign(self.bracket(i, j));
            }
        }
        out
    }

    /// Matrix of `ad_x = [x, -]` (column `j` is `[x, b_j]`).
    pub fn ad(&self, x: &BitVec) -> BitMatrix {
        let mut m = BitMatrix::zeros(self.dim, self.dim);
        for j in 0..self.dim {
            let v = self.bracket_vec(x, &BitVec::unit(self.dim, j));
            for k in v.ones() {
                m.set(k, j, true);
            }
        }
        m
    }

    pub fn is_abelian(&self) -> bool {
        self.c.iter().all(BitVec::is_zero)
    }

    pub fn classify(&self) -> AlgebraClass {
        let d = self.dim;
        let commutative = (0..d).all(|i| (0..d).all(|j| self.bracket(i, j) == self.bracket(j, i)));
        let alternating = commutative && (0..d).all(|i| self.bracket(i, i).is_zero());
        let mut jacobi = true;
        let mut left_leibniz = true;
        for x in 0..d {
            let ex = BitVec::unit(d, x);
            for y in 0..d {
                let ey = BitVec::unit(d, y);
                for z in 0..d {
                    let ez = BitVec::unit(d, z);
                    let x_yz = self.bracket_vec(&ex, self.bracket(y, z));
                    let y_zx = self.bracket_vec(&ey, self.bracket(z, x));
                    let z_xy = self.bracket_vec(&ez, self.bracket(x, y));
                    let mut cyc = x_yz.clone();
                    cyc.xor_assign(&y_zx);
                    cyc.xor_assign(&z_xy);
                    if !cyc.is_zero() {
                        jacobi = false;
                    }
                    // [x,[y,z]] = [[x,y],z] + [y,[x,z]]
                    let mut lli = x_yz;
                    lli.xor_assign(&self.bracket_vec(self.bracket(x, y), &ez));
                    lli.xor_assign(&self.bracket_vec(&ey, self.bracket(x, z)));
                    if !lli.is_zero() {
                        left_leibniz = false;
                    }
                }
            }
        }
        AlgebraClass {
            commutative,
            alternating,
            jacobi,
            left_leibniz,
        }
    }

    /// Rewrites the table in the basis given by the columns of the invertible matrix `p`.
    pub fn change_basis(&self, p: &BitMatrix) -> Result<BracketTable> {
        let d = self.dim;
        if p.rows() != d || p.cols() != d {
            return Err(Error::DimensionMismatch {
                context: "basis change",
                expected: d,
                found: p.rows(),
            });
        }
        let inv = p
            .inverse()
            .ok_or_else(|| Error::Invariant("basis change matrix is singular".into()))?;
        let cols: Vec<BitVec> = (0..d).map(|j| p.column(j)).collect();
        let mut out = BracketTable::zero((0..d).map(|i| format!("b{i}")).collect());
        for i in 0..d {
            for j in 0..d {
                let v = self.bracket_vec(&cols[i], &cols[j]);
                out.set_bracket(i, j, inv.mul_vec(&v));
            }
        }
        Ok(out)
    }

    /// Span of all squares `[x, x]`: the `[b_i, b_i]` together with `[b_i, b_j] + [b_j, b_i]`.
    pub fn leibniz_kernel(&self) -> Subspace {
        let d = self.dim;
        let mut gens = Vec::new();
        for i in 0..d {
            gens.push(self.bracket(i, i).clone());
            for j in i + 1..d {
                let mut v = self.bracket(i, j).clone();
                v.xor_assign(self.bracket(j, i));
                gens.push(v);
            }
        }
        Subspace::span(d, &gens)
    }

    pub fn is_ideal(&self, h: &Subspace) -> Result<SubalgebraKind> {
        if h.ambient_dim() != self.dim {
            return Err(Error::DimensionMismatch {
                context: "ideal test",
                expected: self.dim,
                found: h.ambient_dim(),
            });
        }
        let hb = h.basis_vectors();
        let closed = hb
            .iter()
            .all(|x| hb.iter().all(|y| h.contains(&self.bracket_vec(x, y))));
        if !closed {
            return Ok(SubalgebraKind::NotSubalgebra);
        }
        let ideal = hb.iter().all(|x| {
            (0..self.dim).all(|j| {
                let ej = BitVec::unit(self.dim, j);
                h.contains(&self.bracket_vec(&ej, x)) && h.contains(&self.bracket_vec(x, &ej))
            })
        });
        Ok(if ideal {
            SubalgebraKind::Ideal
        } else {
            SubalgebraKind::Subalgebra
        })
    }

    /// Basis change matrix whose first columns span `h` (its echelon basis), followed by
    /// the unit vectors at the non-pivot columns.
    pub fn adapted_basis(&self, h: &Subspace) -> BitMatrix {
        let d = self.dim;
        let mut p = BitMatrix::zeros(d, d);
        let mut col = 0;
        for v in h.basis_vectors() {
            for k in v.ones() {
                p.set(k, col, true);
            }
            col += 1;
        }
        let mut is_pivot = vec![false; d];
        for &q in h.pivots() {
            is_pivot[q] = true;
        }
        for k in (0..d).filter(|&k| !is_pivot[k]) {
            p.set(k, col, true);
            col += 1;
        }
        p
    }

    /// The structure on the first `k` basis vectors; only meaningful when they span a
    /// subalgebra.
    pub fn leading_subalgebra(&self, k: usize) -> Result<BracketTable> {
        let mut out = BracketTable::zero(self.labels[..k].to_vec());
        for i in 0..k {
            for j in 0..k {
                let v = self.bracket(i, j);
                if v.ones().any(|t| t >= k) {
                    return Err(Error::NotIdeal {
                        found: "not closed",
                        required: "subalgebra",
                    });
                }
                out.set_bracket(i, j, BitVec::from_bools(&(0..k).map(|t| v.get(t)).collect::<Vec<_>>()));
            }
        }
        Ok(out)
    }

    pub fn quotient_algebra(&self, h: &Subspace) -> Result<QuotientAlgebra> {
        match self.is_ideal(h)? {
            SubalgebraKind::Ideal => {}
            SubalgebraKind::Subalgebra => {
                return Err(Error::NotIdeal {
                    found: "a subalgebra",
                    required: "an ideal",
                })
            }
            SubalgebraKind::NotSubalgebra => {
                return Err(Error::NotIdeal {
                    found: "not a subalgebra",
                    required: "an ideal",
                })
            }
        }
        let d = self.dim;
        let dh = h.dim();
        let dq = d - dh;
        let adapted = self.adapted_basis(h);
        let inv = adapted.inverse().expect("adapted basis is invertible");
        let mut proj = BitMatrix::zeros(dq, d);
        for i in 0..dq {
            for j in 0..d {
                if inv.get(dh + i, j) {
                    proj.set(i, j, true);
                }
            }
        }
        let mut section = BitMatrix::zeros(d, dq);
        for i in 0..d {
            for j in 0..dq {
                if adapted.get(i, dh + j) {
                    section.set(i, j, true);
                }
            }
        }
        let q_labels = (0..dq)
            .map(|j| {
                let col = section.column(j);
                match col.ones().collect::<Vec<_>>()[..] {
                    [k] => self.labels[k].clone(),
                    _ => format!("q{j}"),
                }
            })
            .collect();
        let mut q = BracketTable::zero(q_labels);
        for i in 0..dq {
            for j in 0..dq {
                let v = self.bracket_vec(&section.column(i), &section.column(j));
                q.set_bracket(i, j, proj.mul_vec(&v));
            }
        }
        Ok(QuotientAlgebra {
            q,
            proj,
            section,
            adapted_basis: adapted,
        })
    }

    /// Adapted basis of a subalgebra and the adjoint action of `h` on `g/h`.
    pub fn subalgebra_quotient_module(&self, h: &Subspace) -> Result<(BitMatrix, ModuleSpec)> {
        if self.is_ideal(h)? == SubalgebraKind::NotSubalgebra {
            return Err(Error::NotIdeal {
                found: "not a subalgebra",
                required: "a subalgebra",
            });
        }
        let d = self.dim;
        let dh = h.dim();
        let adapted = self.adapted_basis(h);
        let inv = adapted.inverse().expect("adapted basis is invertible");
        let rho = (0..dh)
            .map(|i| {
                let x = adapted.column(i);
                let mut m = BitMatrix::zeros(d - dh, d - dh);
                for j in 0..d - dh {
                    let v = inv.mul_vec(&self.bracket_vec(&x, &adapted.column(dh + j)));
                    for k in v.ones().filter(|&k| k >= dh) {
                        m.set(k - dh, j, true);
                    }
                }
                m
            })
            .collect();
        Ok((adapted, ModuleSpec::new(d - dh, rho)))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SubalgebraKind {
    NotSubalgebra,
    Subalgebra,
    Ideal,
}

#[derive(Clone, Debug)]
pub struct QuotientAlgebra {
    pub q: BracketTable,
    /// `g → q` in original coordinates.
    pub proj: BitMatrix,
    /// `q → g`, the complement spanned by the non-pivot unit vectors.
    pub section: BitMatrix,
    /// Columns: basis of the ideal first, then the section.
    pub adapted_basis: BitMatrix,
}

/// A left module: `rho[i]` is the action of `b_i`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ModuleSpec {
    dim: usize,
    rho: Vec<BitMatrix>,
}

impl ModuleSpec {
    pub fn new(dim: usize, rho: Vec<BitMatrix>) -> Self {
        for r in &rho {
            assert_eq!((r.rows(), r.cols()), (dim, dim), "action matrix has wrong shape");
        }
        Self { dim, rho }
    }

    pub fn trivial(algebra_dim: usize, dim: usize) -> Self {
        Self::new(dim, vec![BitMatrix::zeros(dim, dim); algebra_dim])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn actions(&self) -> &[BitMatrix] {
        &self.rho
    }

    /// Action of `x = Σ x_k b_k`.
    pub fn action_of(&self, x: &BitVec) -> BitMatrix {
        combine(self.dim, &self.rho, x)
    }

    /// Right action equal to the left action.
    pub fn symmetrize(&self) -> BimoduleSpec {
        BimoduleSpec {
            dim: self.dim,
            left: self.rho.clone(),
            right: self.rho.clone(),
        }
    }

    pub fn change_basis(&self, p: &BitMatrix) -> ModuleSpec {
        let rho = (0..p.cols()).map(|i| self.action_of(&p.column(i))).collect();
        ModuleSpec::new(self.dim, rho)
    }

    /// Restriction to the first `k` basis vectors.
    pub fn restrict_leading(&self, k: usize) -> ModuleSpec {
        ModuleSpec::new(self.dim, self.rho[..k].to_vec())
    }
}

fn combine(dim: usize, mats: &[BitMatrix], x: &BitVec) -> BitMatrix {
    let mut out = BitMatrix::zeros(dim, dim);
    for k in x.ones() {
        out = out.add(&mats[k]);
    }
    out
}

/// A Leibniz bimodule: left actions `rho` and right actions `sigma`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BimoduleSpec {
    dim: usize,
    left: Vec<BitMatrix>,
    right: Vec<BitMatrix>,
}

impl BimoduleSpec {
    pub fn new(dim: usize, left: Vec<BitMatrix>, right: Vec<BitMatrix>) -> Self {
        assert_eq!(left.len(), right.len());
        for r in left.iter().chain(&right) {
            assert_eq!((r.rows(), r.cols()), (dim, dim), "action matrix has wrong shape");
        }
        Self { dim, left, right }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn algebra_dim(&self) -> usize {
        self.left.len()
    }

    pub fn left(&self) -> &[BitMatrix] {
        &self.left
    }

    pub fn right(&self) -> &[BitMatrix] {
        &self.right
    }

    pub fn is_symmetric(&self) -> bool {
        self.left == self.right
    }

    pub fn left_module(&self) -> ModuleSpec {
        ModuleSpec::new(self.dim, self.left.clone())
    }

    pub fn change_basis(&self, p: &BitMatrix) -> BimoduleSpec {
        let left = (0..p.cols()).map(|i| combine(self.dim, &self.left, &p.column(i))).collect();
        let right = (0..p.cols()).map(|i| combine(self.dim, &self.right, &p.column(i))).collect();
        BimoduleSpec::new(self.dim, left, right)
    }

    pub fn restrict_leading(&self, k: usize) -> BimoduleSpec {
        BimoduleSpec::new(self.dim, self.left[..k].to_vec(), self.right[..k].to_vec())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Axiom {
    Module,
    Llm,
    Lml,
    Mll,
}

impl Axiom {
    pub fn name(self) -> &'static str {
        match self {
            Axiom::Module => "[x,y]m = x(ym) + y(xm)",
            Axiom::Llm => "LLM",
            Axiom::Lml => "LML",
            Axiom::Mll => "MLL",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomCheck {
    pub passed: bool,
    /// First violating `(axiom, i, j)` in row-major pair order.
    pub failure: Option<(Axiom, usize, usize)>,
}

impl AxiomCheck {
    fn pass() -> Self {
        Self {
            passed: true,
            failure: None,
        }
    }

    fn fail(axiom: Axiom, i: usize, j: usize) -> Self {
        Self {
            passed: false,
            failure: Some((axiom, i, j)),
        }
    }

    pub fn into_result(self) -> Result<()> {
        match self.failure {
            None => Ok(()),
            Some((axiom, i, j)) => Err(Error::ModuleAxiom {
                axiom: axiom.name(),
                i,
                j,
            }),
        }
    }
}

pub fn check_module_axioms(t: &BracketTable, m: &ModuleSpec) -> Result<AxiomCheck> {
    if m.rho.len() != t.dim() {
        return Err(Error::DimensionMismatch {
            context: "module axioms",
            expected: t.dim(),
            found: m.rho.len(),
        });
    }
    for i in 0..t.dim() {
        for j in 0..t.dim() {
            let lhs = m.action_of(t.bracket(i, j));
            let rhs = m.rho[i].mul(&m.rho[j]).add(&m.rho[j].mul(&m.rho[i]));
            if lhs != rhs {
                return Ok(AxiomCheck::fail(Axiom::Module, i, j));
            }
        }
    }
    Ok(AxiomCheck::pass())
}

pub fn check_bimodule_axioms(t: &BracketTable, m: &BimoduleSpec) -> Result<AxiomCheck> {
    if m.left.len() != t.dim() {
        return Err(Error::DimensionMismatch {
            context: "bimodule axioms",
            expected: t.dim(),
            found: m.left.len(),
        });
    }
    let rho = &m.left;
    let sigma = &m.right;
    for i in 0..t.dim() {
        for j in 0..t.dim() {
            let r_br = combine(m.dim, rho, t.bracket(i, j));
            let s_br = combine(m.dim, sigma, t.bracket(i, j));
            // (LLM) [x,y]·m = x·(y·m) + y·(x·m)
            if r_br != rho[i].mul(&rho[j]).add(&rho[j].mul(&rho[i])) {
                return Ok(AxiomCheck::fail(Axiom::Llm, i, j));
            }
            // (LML) x·(m·y) = (x·m)·y + m·[x,y]
            if rho[i].mul(&sigma[j]) != sigma[j].mul(&rho[i]).add(&s_br) {
                return Ok(AxiomCheck::fail(Axiom::Lml, i, j));
            }
            // (MLL) m·[x,y] = (m·x)·y + x·(m·y)
            if s_br != sigma[j].mul(&sigma[i]).add(&rho[i].mul(&sigma[j])) {
                return Ok(AxiomCheck::fail(Axiom::Mll, i, j));
            }
        }
    }
    Ok(AxiomCheck::pass())
}

/// Requested coefficient construction.
#[derive(Clone, Debug)]
pub enum ModuleKind {
    Trivial(usize),
    /// One-dimensional module where `b_i` acts by `lambda_i`.
    FLambda(BitVec),
    Adjoint,
    Coadjoint,
    Symmetrize(ModuleSpec),
}

/// Builds a coefficient bimodule (symmetric: right action = left action) and verifies
/// its axioms.
pub fn make_module(t: &BracketTable, kind: ModuleKind) -> Result<BimoduleSpec> {
    let d = t.dim();
    let module = match kind {
        ModuleKind::Trivial(m) => ModuleSpec::trivial(d, m),
        ModuleKind::FLambda(lambda) => {
            if lambda.len() != d {
                return Err(Error::DimensionMismatch {
                    context: "F_lambda",
                    expected: d,
                    found: lambda.len(),
                });
            }
            let rho = (0..d)
                .map(|i| {
                    let mut m = BitMatrix::zeros(1, 1);
                    m.set(0, 0, lambda.get(i));
                    m
                })
                .collect();
            ModuleSpec::new(1, rho)
        }
        ModuleKind::Adjoint => {
            let rho = (0..d).map(|i| t.ad(&BitVec::unit(d, i))).collect();
            ModuleSpec::new(d, rho)
        }
        ModuleKind::Coadjoint => {
            if !t.classify().jacobi {
                return Err(Error::Precondition {
                    axiom: "Jacobi identity",
                    needed_for: "coadjoint module".into(),
                });
            }
            // (b_i·φ)(b_l) = φ([b_i, b_l]), so the action is the transpose of ad.
            let rho = (0..d).map(|i| t.ad(&BitVec::unit(d, i)).transpose()).collect();
            ModuleSpec::new(d, rho)
        }
        ModuleKind::Symmetrize(m) => m,
    };
    check_module_axioms(t, &module)?.into_result()?;
    let bimodule = module.symmetrize();
    check_bimodule_axioms(t, &bimodule)?.into_result()?;
    Ok(bimodule)
}

/// All `lambda` for which `F_lambda` is a module: `lambda([b_i, b_j]) = 0` for all pairs.
pub fn consistent_lambdas(t: &BracketTable) -> Vec<BitVec> {
    let d = t.dim();
    (0u32..1 << d)
        .map(|bits| BitVec::from_bools(&(0..d).map(|i| bits >> i & 1 == 1).collect::<Vec<_>>()))
        .filter(|l| (0..d).all(|i| (0..d).all(|j| !l.dot(t.bracket(i, j)))))
        .collect()
}
