//! Built-in example algebras and name resolution for modules and subspaces.

use crate::algebra::{consistent_lambdas, make_module, BimoduleSpec, BracketTable, ModuleKind, ModuleSpec};
use crate::error::{Error, Result};
use crate::f2la::{BitVec, Subspace};
use crate::format::{parse_span, read_file, AlgebraFile};

pub const CATALOG_NAMES: &str = "N, a, abelian(d), heis3";

fn unit_span(d: usize, i: usize) -> Subspace {
    Subspace::span(d, &[BitVec::unit(d, i)])
}

fn labels(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

/// `N`: basis (e, f) with `[f, f] = e`.
pub fn n_algebra() -> BracketTable {
    let mut t = BracketTable::zero(labels(&["e", "f"]));
    t.set_bracket(1, 1, BitVec::unit(2, 0));
    t
}

/// `a`: basis (h, e) with `[h, e] = [e, h] = e`.
pub fn a_algebra() -> BracketTable {
    let mut t = BracketTable::zero(labels(&["h", "e"]));
    t.set_bracket(0, 1, BitVec::unit(2, 1));
    t.set_bracket(1, 0, BitVec::unit(2, 1));
    t
}

/// Heisenberg algebra: basis (x, y, z) with `[x, y] = [y, x] = z`.
pub fn heis3() -> BracketTable {
    let mut t = BracketTable::zero(labels(&["x", "y", "z"]));
    t.set_bracket(0, 1, BitVec::unit(3, 2));
    t.set_bracket(1, 0, BitVec::unit(3, 2));
    t
}

fn parse_abelian(name: &str) -> Option<usize> {
    let rest = name.strip_prefix("abelian")?;
    let digits = rest.strip_prefix('(').and_then(|r| r.strip_suffix(')')).unwrap_or(rest);
    digits.parse().ok().filter(|&d| d >= 1)
}

/// Name of the one-dimensional module with weights `lambda`, e.g. `F01`.
pub fn f_lambda_name(lambda: &BitVec) -> String {
    format!("F{}", lambda.to_bitstring())
}

/// The catalog entry `name` with prebuilt trivial, `F_lambda` (every consistent
/// nonzero `lambda`), adjoint and coadjoint modules, and named subspaces.
pub fn load_catalog(name: &str) -> Result<AlgebraFile> {
    let (algebra, subspaces) = match name {
        "N" => (n_algebra(), vec![("e", unit_span(2, 0))]),
        "a" => (a_algebra(), vec![("e", unit_span(2, 1)), ("h", unit_span(2, 0))]),
        "heis3" => (heis3(), vec![("z", unit_span(3, 2)), ("x", unit_span(3, 0))]),
        _ => match parse_abelian(name) {
            Some(d) => (BracketTable::abelian(d), vec![("b0", unit_span(d, 0))]),
            None => {
                return Err(Error::UnknownCatalog {
                    name: name.into(),
                    available: CATALOG_NAMES.into(),
                })
            }
        },
    };
    let mut file = AlgebraFile::new(name, algebra);
    let t = &file.algebra;
    let mut modules: Vec<(String, ModuleSpec)> = vec![("trivial".into(), ModuleSpec::trivial(t.dim(), 1))];
    for lambda in consistent_lambdas(t).into_iter().filter(|l| !l.is_zero()) {
        let m = make_module(t, ModuleKind::FLambda(lambda.clone()))?;
        modules.push((f_lambda_name(&lambda), m.left_module()));
    }
    modules.push(("adjoint".into(), make_module(t, ModuleKind::Adjoint)?.left_module()));
    modules.push(("coadjoint".into(), make_module(t, ModuleKind::Coadjoint)?.left_module()));
    file.modules = modules;
    file.subspaces = subspaces.into_iter().map(|(n, s)| (n.to_string(), s)).collect();
    Ok(file)
}

/// `catalog:NAME` or a path to an algebra file.
pub fn load_algebra(spec: &str) -> Result<AlgebraFile> {
    match spec.strip_prefix("catalog:") {
        Some(name) => load_catalog(name),
        None => read_file(std::path::Path::new(spec)),
    }
}

/// Resolves a module name against the file, then the built-in constructions
/// `trivial`, `trivialM`, `adjoint`, `coadjoint` and `F<bits>`; returns the verified
/// symmetric bimodule.
pub fn resolve_module(file: &AlgebraFile, name: &str) -> Result<BimoduleSpec> {
    let t = &file.algebra;
    if let Some(m) = file.module(name) {
        return make_module(t, ModuleKind::Symmetrize(m.clone()));
    }
    let kind = match name {
        "trivial" => ModuleKind::Trivial(1),
        "adjoint" => ModuleKind::Adjoint,
        "coadjoint" => ModuleKind::Coadjoint,
        _ => {
            if let Some(m) = name.strip_prefix("trivial").and_then(|r| r.parse().ok()) {
                ModuleKind::Trivial(m)
            } else if let Some(lambda) = name
                .strip_prefix('F')
                .and_then(BitVec::from_bitstring)
                .filter(|l| l.len() == t.dim())
            {
                ModuleKind::FLambda(lambda)
            } else {
                return Err(Error::UnknownName {
                    kind: "module",
                    name: name.into(),
                });
            }
        }
    };
    make_module(t, kind)
}

/// A named subspace of the file, or an explicit span such as `e+f, f`.
pub fn resolve_subspace(file: &AlgebraFile, spec: &str) -> Result<Subspace> {
    if let Some(s) = file.subspace(spec) {
        return Ok(s.clone());
    }
    parse_span(file.algebra.labels(), spec, 0).map_err(|_| Error::UnknownName {
        kind: "subspace",
        name: spec.into(),
    })
}
