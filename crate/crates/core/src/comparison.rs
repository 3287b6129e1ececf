//! The relative complexes comparing exterior, symmetric and tensor cochains, their
//! long exact sequences and filtrations, the CR complexes built from product maps,
//! and the dimension checks of the comparison spectral sequences.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::algebra::{make_module, BimoduleSpec, BracketTable, ModuleKind};
use crate::cochain::{pullback_matrix, ComplexTower, Flavor, MonomialBasis, TowerKind};
use crate::cohomology::{betti_table, cycles_and_boundaries, BettiTable};
use crate::error::{Error, Result};
use crate::f2la::{
    image, induced_map, induced_map_with, kernel_basis, BitMatrix, BitVec, QuotientBasis, Subspace,
};
use crate::spectral::{compute_pages, convergence_check, e_infinity, DegreeCheck, FilteredTower};

/// Which inclusion of cochain complexes a relative complex is the cokernel of.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum RelKind {
    /// Exterior into tensor cochains.
    Lambda,
    /// Exterior into symmetric cochains.
    LambdaSym,
    /// Symmetric into tensor cochains.
    Sym,
}

impl RelKind {
    pub const ALL: [RelKind; 3] = [RelKind::Lambda, RelKind::LambdaSym, RelKind::Sym];

    pub fn sub_flavor(self) -> Flavor {
        match self {
            RelKind::Lambda | RelKind::LambdaSym => Flavor::Ext,
            RelKind::Sym => Flavor::Sym,
        }
    }

    pub fn total_flavor(self) -> Flavor {
        match self {
            RelKind::Lambda | RelKind::Sym => Flavor::Tensor,
            RelKind::LambdaSym => Flavor::Sym,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            RelKind::Lambda => "lambda",
            RelKind::LambdaSym => "lambda-sym",
            RelKind::Sym => "sym",
        }
    }

    /// Offset between the internal filtration index (starting at 0) and the
    /// customary one for this comparison.
    pub fn filtration_offset(self) -> usize {
        match self {
            RelKind::Lambda => 0,
            RelKind::LambdaSym | RelKind::Sym => 1,
        }
    }

    fn check_algebra(self, t: &BracketTable) -> Result<()> {
        let class = t.classify();
        self.sub_flavor().check_algebra(&class)?;
        self.total_flavor().check_algebra(&class)
    }
}

/// The cokernel of an inclusion, shifted so that degree `n` has `n + 2` arguments,
/// together with the short exact sequence it comes from.
#[derive(Clone, Debug)]
pub struct RelativeTower {
    pub kind: RelKind,
    /// The shifted quotient complex, degrees `0..=n_max`.
    pub tower: ComplexTower,
    /// Unshifted quotient complex, degrees `0..=n_max + 2`.
    pub quotient: ComplexTower,
    pub sub: ComplexTower,
    pub total: ComplexTower,
    pub inclusions: Vec<BitMatrix>,
    images: Vec<Subspace>,
    cosets: Vec<QuotientBasis>,
    algebra_dim: usize,
    module_dim: usize,
}

impl RelativeTower {
    /// Matrix of `C^k(total) → C^k(total) / C^k(sub)` in coset coordinates.
    pub fn projection(&self, k: usize) -> Result<BitMatrix> {
        let q = &self.cosets[k];
        let n = q.ambient_dim();
        let mut out = BitMatrix::zeros(q.dim(), n);
        for j in 0..n {
            for i in q.coords(&BitVec::unit(n, j))?.ones() {
                out.set(i, j, true);
            }
        }
        Ok(out)
    }

    pub fn image(&self, k: usize) -> &Subspace {
        &self.images[k]
    }

    pub fn coset_basis(&self, k: usize) -> &QuotientBasis {
        &self.cosets[k]
    }

    pub fn n_max(&self) -> usize {
        self.tower.n_max()
    }
}

pub fn build_relative_complex(kind: RelKind, t: &BracketTable, m: &BimoduleSpec, n_max: usize) -> Result<RelativeTower> {
    kind.check_algebra(t)?;
    let top = n_max + 2;
    let sub = ComplexTower::build(kind.sub_flavor(), t, m, top)?;
    let total = ComplexTower::build(kind.total_flavor(), t, m, top)?;
    let inclusions: Vec<BitMatrix> = (0..=top)
        .map(|k| pullback_matrix(kind.sub_flavor(), kind.total_flavor(), t.dim(), m.dim(), k))
        .collect();
    for k in 0..top {
        if total.diff(k).mul(&inclusions[k]) != inclusions[k + 1].mul(sub.diff(k)) {
            return Err(Error::Invariant(format!("inclusion is not a chain map in degree {k}")));
        }
    }
    let images: Vec<Subspace> = inclusions.iter().map(image).collect();
    for (k, (inc, im)) in inclusions.iter().zip(&images).enumerate() {
        if im.dim() != inc.cols() {
            return Err(Error::Invariant(format!("inclusion is not injective in degree {k}")));
        }
    }
    let cosets = images
        .iter()
        .map(|im| QuotientBasis::new(&Subspace::full(im.ambient_dim()), im))
        .collect::<Result<Vec<_>>>()?;
    let diffs = (0..top)
        .map(|k| induced_map_with(total.diff(k), &cosets[k], &images[k], &cosets[k + 1], &images[k + 1]))
        .collect::<Result<Vec<_>>>()?;
    let dims: Vec<usize> = cosets.iter().map(QuotientBasis::dim).collect();
    if dims[0] != 0 || dims[1] != 0 {
        return Err(Error::Invariant("quotient is nonzero below two arguments".into()));
    }
    let label = format!("rel-{}", kind.name());
    let quotient = ComplexTower::new(TowerKind::Quotient, label.clone(), dims.clone(), diffs.clone())?;
    let tower = ComplexTower::new(TowerKind::Quotient, label, dims[2..].to_vec(), diffs[2..].to_vec())?;
    Ok(RelativeTower {
        kind,
        tower,
        quotient,
        sub,
        total,
        inclusions,
        images,
        cosets,
        algebra_dim: t.dim(),
        module_dim: m.dim(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LesNode {
    Sub,
    Total,
    Quotient,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LesNodeCheck {
    /// Unshifted cochain degree.
    pub degree: usize,
    pub node: LesNode,
    pub dim: usize,
    pub exact: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct LesReport {
    pub kind: RelKind,
    pub sub: BettiTable,
    pub total: BettiTable,
    /// Relative cohomology in unshifted degrees.
    pub quotient: BettiTable,
    pub nodes: Vec<LesNodeCheck>,
    #[serde(skip)]
    pub connecting: Vec<BitMatrix>,
    pub all_exact: bool,
}

/// Assembles `H^k(sub) → H^k(total) → H^k(quot) → H^{k+1}(sub)` with the snake
/// connecting map and verifies exactness at every node.
pub fn long_exact_sequence_check(rel: &RelativeTower) -> Result<LesReport> {
    let top = rel.quotient.n_max();
    let sub_b = betti_table(&rel.sub)?;
    let tot_b = betti_table(&rel.total)?;
    let quo_b = betti_table(&rel.quotient)?;
    let zb = |c: &ComplexTower, k| cycles_and_boundaries(c, k);
    let mut i_star = Vec::with_capacity(top);
    let mut p_star = Vec::with_capacity(top);
    let mut delta = Vec::with_capacity(top);
    let mut classes = Vec::with_capacity(top);
    for k in 0..top {
        let (zs, bs) = zb(&rel.sub, k)?;
        let (zt, bt) = zb(&rel.total, k)?;
        let (zq, bq) = zb(&rel.quotient, k)?;
        i_star.push(induced_map(&rel.inclusions[k], &zs, &bs, &zt, &bt)?);
        p_star.push(induced_map(&rel.projection(k)?, &zt, &bt, &zq, &bq)?);
        classes.push((QuotientBasis::new(&zs, &bs)?, QuotientBasis::new(&zq, &bq)?));
    }
    for k in 0..top - 1 {
        let target = &classes[k + 1].0;
        let reps = classes[k].1.representatives().to_vec();
        let mut dm = BitMatrix::zeros(target.dim(), reps.len());
        for (j, z) in reps.iter().enumerate() {
            let y = rel.cosets[k].lift(z);
            let dy = rel.total.diff(k).mul_vec(&y);
            let x = rel.inclusions[k + 1]
                .solve(&dy)
                .ok_or_else(|| Error::Invariant(format!("connecting map undefined in degree {k}")))?;
            for i in target.coords(&x)?.ones() {
                dm.set(i, j, true);
            }
        }
        delta.push(dm);
    }
    let exact_at = |outgoing: &BitMatrix, incoming: Option<&BitMatrix>| {
        let ker = kernel_basis(outgoing);
        let im = match incoming {
            Some(m) => image(m),
            None => Subspace::zero(outgoing.cols()),
        };
        ker == im
    };
    let mut nodes = Vec::new();
    for k in 0..top {
        nodes.push(LesNodeCheck {
            degree: k,
            node: LesNode::Sub,
            dim: sub_b.get(k),
            exact: exact_at(&i_star[k], if k == 0 { None } else { Some(&delta[k - 1]) }),
        });
        nodes.push(LesNodeCheck {
            degree: k,
            node: LesNode::Total,
            dim: tot_b.get(k),
            exact: exact_at(&p_star[k], Some(&i_star[k])),
        });
        if k + 1 < top {
            nodes.push(LesNodeCheck {
                degree: k,
                node: LesNode::Quotient,
                dim: quo_b.get(k),
                exact: exact_at(&delta[k], Some(&p_star[k])),
            });
        }
    }
    if let Some(bad) = nodes.iter().find(|n| !n.exact) {
        return Err(Error::Invariant(format!(
            "long exact sequence of {} is not exact at the {:?} node in degree {}",
            rel.kind.name(),
            bad.node,
            bad.degree
        )));
    }
    Ok(LesReport {
        kind: rel.kind,
        sub: sub_b,
        total: tot_b,
        quotient: quo_b,
        all_exact: true,
        nodes,
        connecting: delta,
    })
}

/// Functionals on `⊗^k g ⊗ M` invariant under permutations of the first `prefix`
/// arguments, and also vanishing on repeated arguments there when `alternating`.
/// The basis vectors are orbit indicators with disjoint supports.
pub fn tensor_prefix_space(d: usize, k: usize, mdim: usize, prefix: usize, alternating: bool) -> Subspace {
    let basis = MonomialBasis::new(Flavor::Tensor, d, k);
    let ambient = basis.len() * mdim;
    let prefix = prefix.min(k);
    let mut orbits: BTreeMap<(Vec<u8>, Vec<u8>), Vec<usize>> = BTreeMap::new();
    for (r, w) in basis.monomials().iter().enumerate() {
        let mut head = w[..prefix].to_vec();
        head.sort_unstable();
        if alternating && head.windows(2).any(|p| p[0] == p[1]) {
            continue;
        }
        orbits.entry((head, w[prefix..].to_vec())).or_default().push(r);
    }
    let mut vecs = Vec::with_capacity(orbits.len() * mdim);
    for members in orbits.values() {
        for a in 0..mdim {
            let mut v = BitVec::zeros(ambient);
            for &r in members {
                v.set(r * mdim + a, true);
            }
            vecs.push(v);
        }
    }
    Subspace::span(ambient, &vecs)
}

/// Functionals on symmetric monomials that vanish on every monomial with a square.
pub fn squarefree_sym_space(d: usize, k: usize, mdim: usize) -> Subspace {
    let basis = MonomialBasis::new(Flavor::Sym, d, k);
    let keep = basis
        .monomials()
        .iter()
        .enumerate()
        .filter(|(_, w)| w.windows(2).all(|p| p[0] != p[1]))
        .flat_map(|(i, _)| i * mdim..(i + 1) * mdim);
    Subspace::coordinate(basis.len() * mdim, keep)
}

/// `F^p` of the total cochains with `k` arguments, as a subspace containing the
/// sub-complex cochains.
fn total_filtration_step(kind: RelKind, d: usize, mdim: usize, k: usize, p: usize) -> Subspace {
    match kind {
        // vanishing on x_{j-1} = x_j for j ≤ p + 1
        RelKind::Lambda => tensor_prefix_space(d, k, mdim, p + 1, true),
        // functionals on ⊗^k / (I_{k,p+1} + J_k); the image of I_{k,p+1} in S^k is
        // spanned by monomials with a square as soon as it is nonzero
        RelKind::LambdaSym => {
            if p == 0 {
                Subspace::full(crate::cochain::basis_dim(Flavor::Sym, d, k) * mdim)
            } else {
                squarefree_sym_space(d, k, mdim)
            }
        }
        // functionals on S^{p+1} g ⊗ ⊗^{k-p-1} g
        RelKind::Sym => tensor_prefix_space(d, k, mdim, p + 1, false),
    }
}

/// The filtration of a relative complex by alternation or symmetry in the leading
/// arguments, normalized to start at index 0.
pub fn comparison_filtration(rel: &RelativeTower) -> Result<FilteredTower> {
    let filt = (0..=rel.n_max())
        .map(|n| {
            let k = n + 2;
            (0..=n + 1)
                .map(|p| {
                    let s = total_filtration_step(rel.kind, rel.algebra_dim, rel.module_dim, k, p);
                    if !rel.images[k].is_subspace_of(&s) {
                        return Err(Error::Invariant(format!(
                            "filtration step {p} in degree {n} misses the sub-complex"
                        )));
                    }
                    rel.cosets[k].project(&s)
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    FilteredTower::new(rel.tower.clone(), filt)
}

/// Product map used for a CR complex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum CrKind {
    Lambda,
    LambdaSym,
    Sym,
}

impl CrKind {
    pub fn name(self) -> &'static str {
        match self {
            CrKind::Lambda => "lambda",
            CrKind::LambdaSym => "lambda-sym",
            CrKind::Sym => "sym",
        }
    }

    fn flavor(self) -> Flavor {
        match self {
            CrKind::Lambda | CrKind::LambdaSym => Flavor::Ext,
            CrKind::Sym => Flavor::Sym,
        }
    }
}

impl From<RelKind> for CrKind {
    fn from(k: RelKind) -> Self {
        match k {
            RelKind::Lambda => CrKind::Lambda,
            RelKind::LambdaSym => CrKind::LambdaSym,
            RelKind::Sym => CrKind::Sym,
        }
    }
}

#[derive(Clone, Debug)]
pub struct CrTower {
    pub kind: CrKind,
    /// `CR^n = A^{n+1} / m^*(C^{n+2}(g, F))` for `n = 0..=n_max`.
    pub tower: ComplexTower,
}

/// Pullback of the product map: `(m^*ψ)(x_1..x_k)(y) = ψ(x_1, .., x_k, y)`, from
/// `C^{k+1}(g, F)` to `C^k(g, g^*)`.
fn product_pullback(flavor: Flavor, d: usize, k: usize) -> BitMatrix {
    let src = MonomialBasis::new(flavor, d, k + 1);
    let dst = MonomialBasis::new(flavor, d, k);
    let mut out = BitMatrix::zeros(dst.len() * d, src.len());
    let mut word = Vec::with_capacity(k + 1);
    for (u, w) in dst.monomials().iter().enumerate() {
        for l in 0..d {
            word.clear();
            word.extend_from_slice(w);
            word.push(l as u8);
            if let Some(c) = src.rank(&word) {
                out.set(u * d + l, c, true);
            }
        }
    }
    out
}

/// Functionals on `Λ^k g ⊗ g` that factor through `Λ^k g ∨ g`: symmetric under
/// exchanging the last exterior factor with the extra argument.
fn wedge_vee_space(d: usize, k: usize) -> Subspace {
    let ext = MonomialBasis::new(Flavor::Ext, d, k);
    let ambient = ext.len() * d;
    if k == 0 {
        return Subspace::full(ambient);
    }
    let heads = MonomialBasis::new(Flavor::Ext, d, k - 1);
    let mut rels = Vec::new();
    let mut word = Vec::with_capacity(k);
    for x in heads.monomials() {
        for a in 0..d {
            for b in 0..d {
                let mut r = BitVec::zeros(ambient);
                for (s, t) in [(a, b), (b, a)] {
                    word.clear();
                    word.extend_from_slice(x);
                    word.push(s as u8);
                    if let Some(u) = ext.rank(&word) {
                        r.flip(u * d + t);
                    }
                }
                if !r.is_zero() {
                    rels.push(r);
                }
            }
        }
    }
    Subspace::span(ambient, &rels).annihilator()
}

pub fn build_cr_complex(kind: CrKind, t: &BracketTable, n_max: usize) -> Result<CrTower> {
    let flavor = kind.flavor();
    flavor.check_algebra(&t.classify())?;
    let d = t.dim();
    let coadjoint = make_module(t, ModuleKind::Coadjoint)?;
    let trivial = make_module(t, ModuleKind::Trivial(1))?;
    let target = ComplexTower::build(flavor, t, &coadjoint, n_max + 2)?;
    let source = ComplexTower::build(flavor, t, &trivial, n_max + 3)?;
    let pull: Vec<BitMatrix> = (0..=n_max + 2).map(|k| product_pullback(flavor, d, k)).collect();
    for k in 0..=n_max + 1 {
        if target.diff(k).mul(&pull[k]) != pull[k + 1].mul(source.diff(k + 1)) {
            return Err(Error::Invariant(format!("product pullback is not a chain map in degree {k}")));
        }
    }
    let images: Vec<Subspace> = pull.iter().map(image).collect();
    for (k, (pm, im)) in pull.iter().zip(&images).enumerate() {
        if im.dim() != pm.cols() {
            return Err(Error::Invariant(format!("product pullback is not injective in degree {k}")));
        }
    }
    let ambient: Vec<Subspace> = (0..=n_max + 2)
        .map(|k| match kind {
            CrKind::LambdaSym => wedge_vee_space(d, k),
            _ => Subspace::full(target.dim(k)),
        })
        .collect();
    for k in 0..=n_max + 1 {
        if !images[k].is_subspace_of(&ambient[k]) {
            return Err(Error::Invariant(format!("product image leaves the target in degree {k}")));
        }
        if !crate::f2la::apply(target.diff(k), &ambient[k])?.is_subspace_of(&ambient[k + 1]) {
            return Err(Error::Invariant(format!(
                "CR target is not a subcomplex in degree {k}"
            )));
        }
    }
    let dims = (0..=n_max)
        .map(|n| ambient[n + 1].dim() - images[n + 1].dim())
        .collect();
    let diffs = (0..n_max)
        .map(|n| {
            induced_map(
                target.diff(n + 1),
                &ambient[n + 1],
                &images[n + 1],
                &ambient[n + 2],
                &images[n + 2],
            )
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CrTower {
        kind,
        tower: ComplexTower::new(TowerKind::Quotient, format!("cr-{}", kind.name()), dims, diffs)?,
    })
}

/// Comparison theorems with a product-form second page.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ProductTheorem {
    /// Exterior vs tensor: `HR_Λ ⊗ HL`.
    T51,
    /// Exterior vs symmetric: `HR_{Λ,S} ⊗ HS`.
    T52,
    /// Symmetric vs tensor: `HR_S ⊗ HL`.
    T53,
}

impl ProductTheorem {
    pub const ALL: [ProductTheorem; 3] = [ProductTheorem::T51, ProductTheorem::T52, ProductTheorem::T53];

    pub fn rel_kind(self) -> RelKind {
        match self {
            ProductTheorem::T51 => RelKind::Lambda,
            ProductTheorem::T52 => RelKind::LambdaSym,
            ProductTheorem::T53 => RelKind::Sym,
        }
    }

    /// Flavor of the cohomology in the second tensor factor.
    pub fn factor_flavor(self) -> Flavor {
        match self {
            ProductTheorem::T52 => Flavor::Sym,
            _ => Flavor::Tensor,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProductEntry {
    pub p: usize,
    pub q: usize,
    pub engine: usize,
    pub hr: usize,
    pub factor: usize,
    pub agree: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ProductReport {
    pub theorem: ProductTheorem,
    pub filtration_offset: usize,
    pub relative: BettiTable,
    pub hr: BettiTable,
    pub factor: BettiTable,
    pub entries: Vec<ProductEntry>,
    pub all_agree: bool,
    pub convergence: Vec<DegreeCheck>,
}

/// Compares `dim E_2^{p,q}` of the comparison filtration with `dim HR^p · dim H?^q`
/// for `p + q ≤ window`.
pub fn verify_e2_product(theorem: ProductTheorem, t: &BracketTable, m: &BimoduleSpec, window: usize) -> Result<ProductReport> {
    let kind = theorem.rel_kind();
    let rel = build_relative_complex(kind, t, m, window + 1)?;
    let filt = comparison_filtration(&rel)?;
    let pages = compute_pages(&filt, 2)?;
    let e_inf = e_infinity(&filt)?;
    let convergence = convergence_check(&filt, &e_inf)?;
    let hr = betti_table(&build_cr_complex(kind.into(), t, window + 1)?.tower)?;
    let factor = betti_table(&ComplexTower::build(theorem.factor_flavor(), t, m, window + 1)?)?;
    let mut entries = Vec::new();
    for n in 0..=window {
        for p in 0..=n {
            let q = n - p;
            let engine = pages[2].get(p, q);
            let expect = hr.get(p) * factor.get(q);
            entries.push(ProductEntry {
                p,
                q,
                engine,
                hr: hr.get(p),
                factor: factor.get(q),
                agree: engine == expect,
            });
        }
    }
    Ok(ProductReport {
        theorem,
        filtration_offset: kind.filtration_offset(),
        relative: betti_table(&rel.tower)?,
        hr,
        factor,
        all_agree: entries.iter().all(|e| e.agree),
        entries,
        convergence,
    })
}

/// One vanishing-propagation statement: vanishing of `hypothesis` through degree `n`
/// forces vanishing of `conclusion` through `n` and equal dimensions in `n+1`, `n+2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropagationVerdict {
    pub hypothesis: Flavor,
    pub conclusion: Flavor,
    /// Largest `n` for which the hypothesis window holds, if any.
    pub window: Option<usize>,
    pub holds: bool,
    /// Same statement with the roles exchanged.
    pub converse_window: Option<usize>,
    pub converse_holds: bool,
}

fn propagate(hyp: &BettiTable, concl: &BettiTable) -> (Option<usize>, bool) {
    let len = hyp.len().min(concl.len());
    let mut window = None;
    let mut holds = true;
    for n in 0..len {
        if !hyp.dims[..=n].iter().all(|&x| x == 0) {
            break;
        }
        window = Some(n);
        holds &= concl.dims[..=n].iter().all(|&x| x == 0);
        for k in [n + 1, n + 2] {
            if k < len {
                holds &= concl.get(k) == hyp.get(k);
            }
        }
    }
    (window, holds)
}

#[derive(Clone, Debug, Serialize)]
pub struct PropagationReport {
    pub ext: Option<BettiTable>,
    pub sym: BettiTable,
    pub tensor: BettiTable,
    pub verdicts: Vec<PropagationVerdict>,
    /// All three cohomologies vanish in the computed range.
    pub all_vanish: bool,
}

/// Evaluates the vanishing-propagation statements on computed Betti tables through
/// degree `n_max - 1`.
pub fn propagation_check(t: &BracketTable, m: &BimoduleSpec, n_max: usize) -> Result<PropagationReport> {
    let class = t.classify();
    Flavor::Sym.check_algebra(&class)?;
    let sym = betti_table(&ComplexTower::build(Flavor::Sym, t, m, n_max)?)?;
    let tensor = betti_table(&ComplexTower::build(Flavor::Tensor, t, m, n_max)?)?;
    let ext = if class.is_lie() {
        Some(betti_table(&ComplexTower::build(Flavor::Ext, t, m, n_max)?)?)
    } else {
        None
    };
    let mut verdicts = Vec::new();
    let mut push = |hf: Flavor, h: &BettiTable, cf: Flavor, c: &BettiTable| {
        let (window, holds) = propagate(h, c);
        let (converse_window, converse_holds) = propagate(c, h);
        verdicts.push(PropagationVerdict {
            hypothesis: hf,
            conclusion: cf,
            window,
            holds,
            converse_window,
            converse_holds,
        });
    };
    if let Some(e) = &ext {
        push(Flavor::Ext, e, Flavor::Tensor, &tensor);
        push(Flavor::Ext, e, Flavor::Sym, &sym);
    }
    push(Flavor::Sym, &sym, Flavor::Tensor, &tensor);
    let zero = |b: &BettiTable| b.dims.iter().all(|&x| x == 0);
    let all_vanish = zero(&sym) && zero(&tensor) && ext.as_ref().is_none_or(zero);
    Ok(PropagationReport {
        ext,
        sym,
        tensor,
        verdicts,
        all_vanish,
    })
}
