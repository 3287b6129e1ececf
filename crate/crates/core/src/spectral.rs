//! Spectral sequences of finitely filtered cochain towers, the Hochschild-Serre
//! type filtration by a subalgebra, and closed-form checks of its first pages.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::algebra::{
    check_module_axioms, BimoduleSpec, BracketTable, ModuleSpec, SubalgebraKind,
};
use crate::cochain::{basis_dim, ComplexTower, Flavor, MonomialBasis};
use crate::cohomology::{betti_table, induced_cohomology_action, BettiTable};
use crate::error::{Error, Result};
use crate::f2la::{apply, induced_map_with, preimage, BitMatrix, QuotientBasis, Subspace};

/// A tower with a decreasing filtration `F^0 = C^n ⊇ F^1 ⊇ .. ⊇ F^top = 0` per degree.
#[derive(Clone, Debug)]
pub struct FilteredTower {
    tower: ComplexTower,
    /// `filt[n][p] = F^p C^n`; the last entry is the zero subspace.
    filt: Vec<Vec<Subspace>>,
}

impl FilteredTower {
    /// Validates shape, monotonicity, boundary steps and compatibility with `d`.
    pub fn new(tower: ComplexTower, filt: Vec<Vec<Subspace>>) -> Result<Self> {
        if filt.len() != tower.dims().len() {
            return Err(Error::DimensionMismatch {
                context: "filtration degrees",
                expected: tower.dims().len(),
                found: filt.len(),
            });
        }
        for (n, steps) in filt.iter().enumerate() {
            let bad = |msg: &str| Error::Invariant(format!("filtration in degree {n}: {msg}"));
            let (Some(first), Some(last)) = (steps.first(), steps.last()) else {
                return Err(bad("no steps"));
            };
            if steps.len() > n + 2 {
                return Err(bad("F^{n+1} must vanish"));
            }
            if first.ambient_dim() != tower.dim(n) || !first.is_full() {
                return Err(bad("F^0 is not the whole space"));
            }
            if last.dim() != 0 {
                return Err(bad("last step is not zero"));
            }
            if steps.windows(2).any(|w| !w[1].is_subspace_of(&w[0])) {
                return Err(bad("not decreasing"));
            }
        }
        let f = Self { tower, filt };
        for n in 0..f.tower.n_max() {
            for p in 0..f.filt[n].len() {
                let img = apply(f.tower.diff(n), &f.filt[n][p])?;
                if !img.is_subspace_of(f.step(n + 1, p as i64)) {
                    return Err(Error::FiltrationIncompatible { degree: n, step: p });
                }
            }
        }
        Ok(f)
    }

    pub fn tower(&self) -> &ComplexTower {
        &self.tower
    }

    /// `F^p C^n`, with `F^p = C^n` for negative `p` and zero past the top.
    pub fn step(&self, n: usize, p: i64) -> &Subspace {
        let steps = &self.filt[n];
        let idx = p.clamp(0, steps.len() as i64 - 1) as usize;
        &steps[idx]
    }

    pub fn steps(&self, n: usize) -> &[Subspace] {
        &self.filt[n]
    }

    /// Index of the zero step in degree `n`.
    pub fn length(&self, n: usize) -> usize {
        self.filt[n].len() - 1
    }

    pub fn max_length(&self) -> usize {
        (0..self.filt.len()).map(|n| self.length(n)).max().unwrap_or(0)
    }

    /// First page index from which all pages coincide.
    pub fn stable_page(&self) -> usize {
        self.max_length() + 1
    }
}

#[derive(Clone, Debug)]
pub struct Page {
    pub r: usize,
    /// `(p, q) → dim E_r^{p,q}` for `p + q < n_max`.
    pub entries: BTreeMap<(usize, usize), usize>,
    /// `d_r^{p,q}` whenever source and target lie in the reliable window and the
    /// target position carries a filtration step.
    pub diffs: BTreeMap<(usize, usize), BitMatrix>,
    pub stable: bool,
}

impl Page {
    pub fn get(&self, p: usize, q: usize) -> usize {
        self.entries.get(&(p, q)).copied().unwrap_or(0)
    }

    /// Sum of the entries of total degree `n`.
    pub fn total(&self, n: usize) -> usize {
        self.entries
            .iter()
            .filter(|((p, q), _)| p + q == n)
            .map(|(_, &v)| v)
            .sum()
    }

    pub fn rows(&self) -> Vec<PageEntry> {
        self.entries
            .iter()
            .map(|(&(p, q), &dim)| PageEntry { r: self.r, p, q, dim })
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PageEntry {
    pub r: usize,
    pub p: usize,
    pub q: usize,
    pub dim: usize,
}

/// Memoized `Z_r^{p}` spaces: `Z_{-1}^p = F^p`, `Z_r^p = F^p ∩ d^{-1}(F^{p+r})`.
struct ZCache<'a> {
    f: &'a FilteredTower,
    memo: HashMap<(i64, usize, i64), Subspace>,
}

impl<'a> ZCache<'a> {
    fn z(&mut self, r: i64, n: usize, p: i64) -> Result<Subspace> {
        if let Some(s) = self.memo.get(&(r, n, p)) {
            return Ok(s.clone());
        }
        let fp = self.f.step(n, p);
        let out = if r < 0 || n >= self.f.tower.n_max() {
            fp.clone()
        } else {
            let pre = preimage(self.f.tower.diff(n), self.f.step(n + 1, p + r))?;
            fp.intersect(&pre)?
        };
        self.memo.insert((r, n, p), out.clone());
        Ok(out)
    }

    /// Numerator and denominator of `E_r^{p, n-p}`.
    fn terms(&mut self, r: i64, n: usize, p: i64) -> Result<(Subspace, Subspace)> {
        let num = self.z(r, n, p)?;
        let mut den = self.z(r - 1, n, p + 1)?;
        if n > 0 {
            let src = self.z(r - 1, n - 1, p - r + 1)?;
            den = den.sum(&apply(self.f.tower.diff(n - 1), &src)?)?;
        }
        debug_assert!(den.is_subspace_of(&num));
        Ok((num, den))
    }
}

/// Pages `E_0 .. E_{r_max}` by the `Z_r / B_r` construction.
pub fn compute_pages(f: &FilteredTower, r_max: usize) -> Result<Vec<Page>> {
    let mut cache = ZCache {
        f,
        memo: HashMap::new(),
    };
    (0..=r_max).map(|r| page(&mut cache, r)).collect()
}

fn page(cache: &mut ZCache<'_>, r: usize) -> Result<Page> {
    let f = cache.f;
    let n_max = f.tower.n_max();
    let ri = r as i64;
    let mut entries = BTreeMap::new();
    let mut quotients: HashMap<(usize, usize), (QuotientBasis, Subspace)> = HashMap::new();
    for n in 0..n_max {
        for p in 0..f.length(n) {
            let (num, den) = cache.terms(ri, n, p as i64)?;
            let qb = QuotientBasis::new(&num, &den)?;
            entries.insert((p, n - p), qb.dim());
            quotients.insert((n, p), (qb, den));
        }
    }
    let mut diffs = BTreeMap::new();
    for n in 0..n_max.saturating_sub(1) {
        for p in 0..f.length(n) {
            let tp = p + r;
            if tp >= f.length(n + 1) {
                continue;
            }
            let (src, src_den) = &quotients[&(n, p)];
            let (dst, dst_den) = &quotients[&(n + 1, tp)];
            let m = induced_map_with(f.tower.diff(n), src, src_den, dst, dst_den)?;
            diffs.insert((p, n - p), m);
        }
    }
    Ok(Page {
        r,
        entries,
        diffs,
        stable: r >= f.stable_page(),
    })
}

/// The stable page.
pub fn e_infinity(f: &FilteredTower) -> Result<Page> {
    let mut cache = ZCache {
        f,
        memo: HashMap::new(),
    };
    page(&mut cache, f.stable_page())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeCheck {
    pub degree: usize,
    pub expected: usize,
    pub found: usize,
    pub passed: bool,
}

/// `Σ_{p+q=n} dim E_∞^{p,q} = dim H^n` for `n < n_max - 1`.
pub fn convergence_check(f: &FilteredTower, e_inf: &Page) -> Result<Vec<DegreeCheck>> {
    let betti = betti_table(&f.tower)?;
    Ok((0..f.tower.n_max().saturating_sub(1))
        .map(|n| {
            let found = e_inf.total(n);
            DegreeCheck {
                degree: n,
                expected: betti.get(n),
                found,
                passed: found == betti.get(n),
            }
        })
        .collect())
}

/// The filtration by a subalgebra, together with the adapted data it lives on.
#[derive(Clone, Debug)]
pub struct HsFiltration {
    pub filtered: FilteredTower,
    /// Columns: basis of the subalgebra first, then the complement.
    pub adapted_basis: BitMatrix,
    /// Bracket table and module in the adapted basis.
    pub algebra: BracketTable,
    pub module: BimoduleSpec,
    pub h_dim: usize,
    pub kind: SubalgebraKind,
}

/// `F^p CS^n` = cochains vanishing whenever `n - p + 1` arguments lie in `h`.
pub fn hs_filtration(t: &BracketTable, h: &Subspace, m: &BimoduleSpec, n_max: usize) -> Result<HsFiltration> {
    let kind = t.is_ideal(h)?;
    if kind == SubalgebraKind::NotSubalgebra {
        return Err(Error::NotIdeal {
            found: "not a subalgebra",
            required: "a subalgebra",
        });
    }
    hs_filtration_with_basis(t, &t.adapted_basis(h), h.dim(), m, n_max)
}

/// As [`hs_filtration`] with an explicit adapted basis whose first `h_dim` columns
/// span the subalgebra.
pub fn hs_filtration_with_basis(
    t: &BracketTable,
    adapted: &BitMatrix,
    h_dim: usize,
    m: &BimoduleSpec,
    n_max: usize,
) -> Result<HsFiltration> {
    let g = t.change_basis(adapted)?;
    let mm = m.change_basis(adapted);
    let h = Subspace::coordinate(t.dim(), 0..h_dim);
    let kind = g.is_ideal(&h)?;
    if kind == SubalgebraKind::NotSubalgebra {
        return Err(Error::NotIdeal {
            found: "not a subalgebra",
            required: "a subalgebra",
        });
    }
    let tower = ComplexTower::build(Flavor::Sym, &g, &mm, n_max)?;
    let mdim = mm.dim();
    let filt = (0..=n_max)
        .map(|n| {
            let basis = MonomialBasis::new(Flavor::Sym, g.dim(), n);
            let h_count: Vec<usize> = basis
                .monomials()
                .iter()
                .map(|w| w.iter().filter(|&&x| (x as usize) < h_dim).count())
                .collect();
            (0..=n + 1)
                .map(|p| {
                    let keep = h_count
                        .iter()
                        .enumerate()
                        .filter(|&(_, &c)| c + p <= n)
                        .flat_map(|(i, _)| i * mdim..(i + 1) * mdim);
                    Subspace::coordinate(tower.dim(n), keep)
                })
                .collect()
        })
        .collect();
    Ok(HsFiltration {
        filtered: FilteredTower::new(tower, filt)?,
        adapted_basis: adapted.clone(),
        algebra: g,
        module: mm,
        h_dim,
        kind,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosedFormEntry {
    pub r: usize,
    pub p: usize,
    pub q: usize,
    pub engine: usize,
    pub closed_form: usize,
    pub agree: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClosedFormReport {
    /// `dim HS^q(h, M)`.
    pub subalgebra_betti: Vec<usize>,
    pub entries: Vec<ClosedFormEntry>,
    pub all_agree: bool,
}

/// Compares `E_0`, `E_1`, `E_2` of an ideal filtration with
/// `Hom(S^q h, Hom(S^p q, M))`, `Hom(S^p q, HS^q(h, M))` and `HS^p(q, HS^q(h, M))`
/// for `p + q ≤ max_total`.
pub fn e2_closed_form_check(hs: &HsFiltration, pages: &[Page], max_total: usize) -> Result<ClosedFormReport> {
    if hs.kind != SubalgebraKind::Ideal {
        return Err(Error::NotIdeal {
            found: "a subalgebra",
            required: "an ideal",
        });
    }
    if pages.len() < 3 {
        return Err(Error::Invariant("closed-form check needs pages E_0..E_2".into()));
    }
    let n_top = hs.filtered.tower().n_max();
    if max_total >= n_top {
        return Err(Error::DegreeOutOfRange {
            degree: max_total,
            max: n_top.saturating_sub(1),
        });
    }
    let g = &hs.algebra;
    let dh = hs.h_dim;
    let dq = g.dim() - dh;
    let mdim = hs.module.dim();
    let h = g.leading_subalgebra(dh)?;
    let hm = hs.module.restrict_leading(dh);
    let h_tower = ComplexTower::build(Flavor::Sym, &h, &hm, max_total + 1)?;
    let h_betti = betti_table(&h_tower)?;
    let quotient = g.quotient_algebra(&Subspace::coordinate(g.dim(), 0..dh))?;
    let mut entries = Vec::new();
    for q in 0..=max_total {
        let w_dim = h_betti.get(q);
        let actions = (0..dq)
            .map(|j| {
                let x = quotient.section.column(j);
                induced_cohomology_action(&x, g, dh, &hs.module, &h_tower, q)
            })
            .collect::<Result<Vec<_>>>()?;
        let w = ModuleSpec::new(w_dim, actions);
        check_module_axioms(&quotient.q, &w)?.into_result()?;
        let q_tower = ComplexTower::build(Flavor::Sym, &quotient.q, &w.symmetrize(), max_total - q + 1)?;
        let e2_closed: BettiTable = betti_table(&q_tower)?;
        for p in 0..=max_total - q {
            let closed = [
                basis_dim(Flavor::Sym, dh, q) * basis_dim(Flavor::Sym, dq, p) * mdim,
                basis_dim(Flavor::Sym, dq, p) * w_dim,
                e2_closed.get(p),
            ];
            for (r, &closed_form) in closed.iter().enumerate() {
                let engine = pages[r].get(p, q);
                entries.push(ClosedFormEntry {
                    r,
                    p,
                    q,
                    engine,
                    closed_form,
                    agree: engine == closed_form,
                });
            }
        }
    }
    entries.sort_by_key(|e| (e.r, e.p + e.q, e.p));
    Ok(ClosedFormReport {
        subalgebra_betti: h_betti.dims,
        all_agree: entries.iter().all(|e| e.agree),
        entries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{make_module, ModuleKind};
    use crate::cochain::TowerKind;
    use crate::f2la::BitVec;

    fn v(s: &str) -> BitVec {
        BitVec::from_bitstring(s).unwrap()
    }

    fn n_algebra() -> BracketTable {
        let mut t = BracketTable::zero(vec!["e".into(), "f".into()]);
        t.set_bracket(1, 1, v("10"));
        t
    }

    fn a_algebra() -> BracketTable {
        let mut t = BracketTable::zero(vec!["h".into(), "e".into()]);
        t.set_bracket(0, 1, v("01"));
        t.set_bracket(1, 0, v("01"));
        t
    }

    fn trivial(t: &BracketTable) -> BimoduleSpec {
        make_module(t, ModuleKind::Trivial(1)).unwrap()
    }

    #[test]
    fn filtration_boundaries_and_example() {
        let t = n_algebra();
        let hs = hs_filtration(&t, &Subspace::span(2, &[v("10")]), &trivial(&t), 4).unwrap();
        let f = &hs.filtered;
        for n in 0..=4 {
            assert!(f.step(n, 0).is_full());
            assert_eq!(f.step(n, n as i64 + 1).dim(), 0);
        }
        // F^1 C^2 vanishes on ee; F^2 C^2 also on ef
        assert_eq!(f.step(2, 1).dim(), 2);
        assert_eq!(f.step(2, 2).dim(), 1);
    }

    #[test]
    fn graded_pieces_match_e0() {
        let t = a_algebra();
        let m = make_module(&t, ModuleKind::Adjoint).unwrap();
        let hs = hs_filtration(&t, &Subspace::span(2, &[v("01")]), &m, 5).unwrap();
        let f = &hs.filtered;
        for n in 0..=5 {
            for p in 0..=n {
                let graded = f.step(n, p as i64).dim() - f.step(n, p as i64 + 1).dim();
                let expect = basis_dim(Flavor::Sym, 1, n - p) * basis_dim(Flavor::Sym, 1, p) * 2;
                assert_eq!(graded, expect);
            }
        }
    }

    #[test]
    fn not_a_subalgebra_is_rejected() {
        let mut t = BracketTable::abelian(2);
        t.set_bracket(0, 0, v("01"));
        let h = Subspace::span(2, &[v("10")]);
        assert!(hs_filtration(&t, &h, &trivial(&t), 3).is_err());
    }

    #[test]
    fn zero_differential_pages_are_constant() {
        let t = BracketTable::abelian(2);
        let hs = hs_filtration(&t, &Subspace::span(2, &[v("10")]), &trivial(&t), 5).unwrap();
        let pages = compute_pages(&hs.filtered, 4).unwrap();
        for page in &pages[1..] {
            assert_eq!(page.entries, pages[0].entries);
            assert!(page.diffs.values().all(BitMatrix::is_zero));
        }
    }

    #[test]
    fn n_pages_and_convergence() {
        let t = n_algebra();
        let hs = hs_filtration(&t, &Subspace::span(2, &[v("10")]), &trivial(&t), 8).unwrap();
        let pages = compute_pages(&hs.filtered, hs.filtered.stable_page()).unwrap();
        for (&(p, q), &dim) in &pages[2].entries {
            assert_eq!(dim, 1, "E_2^{{{p},{q}}}");
        }
        let checks = convergence_check(&hs.filtered, pages.last().unwrap()).unwrap();
        assert!(checks.iter().all(|c| c.passed), "{checks:?}");
        let report = e2_closed_form_check(&hs, &pages, 6).unwrap();
        assert!(report.all_agree, "{:?}", report.entries.iter().filter(|e| !e.agree).collect::<Vec<_>>());
    }

    #[test]
    fn a_pages_and_convergence() {
        let t = a_algebra();
        let hs = hs_filtration(&t, &Subspace::span(2, &[v("01")]), &trivial(&t), 8).unwrap();
        let pages = compute_pages(&hs.filtered, hs.filtered.stable_page()).unwrap();
        let checks = convergence_check(&hs.filtered, pages.last().unwrap()).unwrap();
        assert!(checks.iter().all(|c| c.passed));
        assert!(e2_closed_form_check(&hs, &pages, 6).unwrap().all_agree);
    }

    #[test]
    fn page_rank_identity() {
        let t = n_algebra();
        let m = make_module(&t, ModuleKind::Adjoint).unwrap();
        let hs = hs_filtration(&t, &Subspace::span(2, &[v("10")]), &m, 7).unwrap();
        let pages = compute_pages(&hs.filtered, 4).unwrap();
        for w in pages.windows(2) {
            let (cur, next) = (&w[0], &w[1]);
            for (&(p, q), &dim) in &next.entries {
                let n = p + q;
                // only positions whose incoming and outgoing maps are both recorded
                if n + 1 >= 6 || (p + cur.r < n + 2 && !cur.diffs.contains_key(&(p, q))) {
                    continue;
                }
                let out_rank = cur.diffs.get(&(p, q)).map_or(0, BitMatrix::rank);
                let in_rank = if p >= cur.r && q + cur.r >= 1 {
                    cur.diffs.get(&(p - cur.r, q + cur.r - 1)).map_or(0, BitMatrix::rank)
                } else {
                    0
                };
                assert_eq!(dim, cur.get(p, q) - out_rank - in_rank, "r={} ({p},{q})", cur.r);
                assert!(dim <= cur.get(p, q));
            }
            for (&(p, q), d) in &cur.diffs {
                if let Some(d2) = cur.diffs.get(&(p + cur.r, q + 1 - cur.r.min(q + 1))) {
                    if q + 1 >= cur.r && d.rows() == d2.cols() {
                        assert!(d2.mul(d).is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn filtration_validation() {
        let tower = ComplexTower::new(
            TowerKind::Quotient,
            "x",
            vec![0, 1, 1],
            vec![BitMatrix::zeros(1, 0), BitMatrix::identity(1)],
        )
        .unwrap();
        let full = Subspace::full(1);
        let zero = Subspace::zero(1);
        let empty = Subspace::zero(0);
        // d(F^1 C^1) = C^2 but F^1 C^2 = 0
        let bad = FilteredTower::new(
            tower.clone(),
            vec![vec![empty.clone()], vec![full.clone(), full.clone(), zero.clone()], vec![full.clone(), zero.clone()]],
        );
        assert!(matches!(bad, Err(Error::FiltrationIncompatible { degree: 1, step: 1 })));
        let too_long = FilteredTower::new(
            tower.clone(),
            vec![
                vec![empty.clone(), empty.clone(), empty.clone()],
                vec![full.clone(), zero.clone()],
                vec![full.clone(), zero.clone()],
            ],
        );
        assert!(too_long.is_err());
        assert!(FilteredTower::new(tower.clone(), vec![vec![empty.clone()], vec![zero.clone()], vec![full.clone(), zero.clone()]]).is_err());
        let ok = FilteredTower::new(tower, vec![vec![empty], vec![full.clone(), zero.clone()], vec![full, zero]]).unwrap();
        assert_eq!(ok.stable_page(), 2);
    }
}
