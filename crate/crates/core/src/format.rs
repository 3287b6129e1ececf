//! Line-oriented algebra files.
//!
//! ```text
//! # comment
//! name N
//! basis e f
//! bracket f f -> e
//! module F1 dim 1
//! act e = 1
//! act f = 0
//! subspace h = e
//! ```
//!
//! Unlisted brackets and actions are zero. Coordinates are `+`-separated labels or
//! basis indices, `()` for the zero vector. An `act` line gives the rows of the action
//! matrix as bitstrings of length `dim`. Subspaces are comma-separated spanning vectors.

use std::fmt::Write as _;

use crate::algebra::{BracketTable, ModuleSpec};
use crate::error::{Error, Result};
use crate::f2la::{BitMatrix, BitVec, Subspace};

/// An algebra with named modules and subspaces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraFile {
    pub name: String,
    pub algebra: BracketTable,
    pub modules: Vec<(String, ModuleSpec)>,
    pub subspaces: Vec<(String, Subspace)>,
}

impl AlgebraFile {
    pub fn new(name: impl Into<String>, algebra: BracketTable) -> Self {
        Self {
            name: name.into(),
            algebra,
            modules: Vec::new(),
            subspaces: Vec::new(),
        }
    }

    pub fn module(&self, name: &str) -> Option<&ModuleSpec> {
        self.modules.iter().find(|(n, _)| n == name).map(|(_, m)| m)
    }

    pub fn subspace(&self, name: &str) -> Option<&Subspace> {
        self.subspaces.iter().find(|(n, _)| n == name).map(|(_, s)| s)
    }
}

fn is_ident(s: &str) -> bool {
    !s.is_empty()
        && s.chars().all(|c| c.is_alphanumeric() || c == '_' || c == '\'')
        && !s.chars().all(|c| c.is_ascii_digit())
}

fn perr(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Resolves a basis label or index.
fn basis_index(labels: &[String], token: &str, line: usize) -> Result<usize> {
    if let Some(i) = labels.iter().position(|l| l == token) {
        return Ok(i);
    }
    match token.parse::<usize>() {
        Ok(i) if i < labels.len() => Ok(i),
        Ok(i) => Err(perr(line, format!("basis index {i} out of range (dim {})", labels.len()))),
        Err(_) => Err(perr(line, format!("unknown basis element `{token}`"))),
    }
}

/// Parses `e+f`, `0+1` (indices) or `()` (zero). Labels are never all digits, so
/// indices are unambiguous.
pub fn parse_vector(labels: &[String], s: &str, line: usize) -> Result<BitVec> {
    let mut v = BitVec::zeros(labels.len());
    let s = s.trim();
    if s == "()" {
        return Ok(v);
    }
    for token in s.split('+') {
        let token = token.trim();
        if token.is_empty() {
            return Err(perr(line, "empty coordinate"));
        }
        v.flip(basis_index(labels, token, line)?);
    }
    Ok(v)
}

pub fn format_vector(labels: &[String], v: &BitVec) -> String {
    if v.is_zero() {
        return "()".into();
    }
    v.ones().map(|i| labels[i].as_str()).collect::<Vec<_>>().join("+")
}

/// Parses a comma-separated list of spanning vectors.
pub fn parse_span(labels: &[String], s: &str, line: usize) -> Result<Subspace> {
    let vecs = s
        .split(',')
        .map(|part| parse_vector(labels, part, line))
        .collect::<Result<Vec<_>>>()?;
    Ok(Subspace::span(labels.len(), &vecs))
}

fn need_algebra<'a>(a: &'a Option<BracketTable>, key: &str, line: usize) -> Result<&'a BracketTable> {
    a.as_ref().ok_or_else(|| perr(line, format!("`{key}` before `basis`")))
}

pub fn parse(text: &str) -> Result<AlgebraFile> {
    let mut name = None;
    let mut algebra: Option<BracketTable> = None;
    let mut modules: Vec<(String, usize, Vec<BitMatrix>)> = Vec::new();
    let mut subspaces: Vec<(String, Subspace)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (key, rest) = content.split_once(char::is_whitespace).unwrap_or((content, ""));
        let rest = rest.trim();
        match key {
            "name" => {
                if name.is_some() {
                    return Err(perr(line, "duplicate `name`"));
                }
                if rest.is_empty() {
                    return Err(perr(line, "empty name"));
                }
                name = Some(rest.to_string());
            }
            "basis" => {
                if algebra.is_some() {
                    return Err(perr(line, "duplicate `basis`"));
                }
                let labels: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
                if labels.is_empty() {
                    return Err(perr(line, "empty basis"));
                }
                if let Some(bad) = labels.iter().find(|l| !is_ident(l)) {
                    return Err(perr(line, format!("invalid label `{bad}`")));
                }
                for (i, l) in labels.iter().enumerate() {
                    if labels[..i].contains(l) {
                        return Err(perr(line, format!("duplicate label `{l}`")));
                    }
                }
                algebra = Some(BracketTable::zero(labels));
            }
            "bracket" => {
                let t = need_algebra(&algebra, key, line)?;
                let (lhs, rhs) = rest
                    .split_once("->")
                    .ok_or_else(|| perr(line, "expected `bracket X Y -> Z`"))?;
                let args: Vec<&str> = lhs.split_whitespace().collect();
                if args.len() != 2 {
                    return Err(perr(line, "a bracket takes two basis elements"));
                }
                let i = basis_index(t.labels(), args[0], line)?;
                let j = basis_index(t.labels(), args[1], line)?;
                let value = parse_vector(t.labels(), rhs, line)?;
                if !t.bracket(i, j).is_zero() {
                    return Err(perr(line, format!("bracket of ({}, {}) given twice", args[0], args[1])));
                }
                algebra.as_mut().expect("checked").set_bracket(i, j, value);
            }
            "module" => {
                let t = need_algebra(&algebra, key, line)?;
                let parts: Vec<&str> = rest.split_whitespace().collect();
                let [mname, "dim", m] = parts[..] else {
                    return Err(perr(line, "expected `module NAME dim M`"));
                };
                if !is_ident(mname) {
                    return Err(perr(line, format!("invalid module name `{mname}`")));
                }
                if modules.iter().any(|(n, _, _)| n == mname) {
                    return Err(perr(line, format!("duplicate module `{mname}`")));
                }
                let m: usize = m.parse().map_err(|_| perr(line, format!("invalid dimension `{m}`")))?;
                modules.push((mname.to_string(), m, vec![BitMatrix::zeros(m, m); t.dim()]));
            }
            "act" => {
                let t = need_algebra(&algebra, key, line)?;
                let (mname, m, acts) = modules
                    .last_mut()
                    .ok_or_else(|| perr(line, "`act` outside of a module"))?;
                let (x, rows) = rest
                    .split_once('=')
                    .ok_or_else(|| perr(line, "expected `act X = ROWS`"))?;
                let i = basis_index(t.labels(), x.trim(), line)?;
                let rows: Vec<&str> = rows.split_whitespace().collect();
                if rows.len() != *m {
                    return Err(perr(line, format!("module `{mname}` needs {m} rows, found {}", rows.len())));
                }
                let mut mat = BitMatrix::zeros(*m, *m);
                for (r, bits) in rows.iter().enumerate() {
                    let v = BitVec::from_bitstring(bits)
                        .filter(|v| v.len() == *m)
                        .ok_or_else(|| perr(line, format!("row `{bits}` is not a bitstring of length {m}")))?;
                    for c in v.ones() {
                        mat.set(r, c, true);
                    }
                }
                if !acts[i].is_zero() {
                    return Err(perr(line, format!("action of `{}` given twice", x.trim())));
                }
                acts[i] = mat;
            }
            "subspace" => {
                let t = need_algebra(&algebra, key, line)?;
                let (sname, span) = rest
                    .split_once('=')
                    .ok_or_else(|| perr(line, "expected `subspace NAME = VECTORS`"))?;
                let sname = sname.trim();
                if !is_ident(sname) {
                    return Err(perr(line, format!("invalid subspace name `{sname}`")));
                }
                if subspaces.iter().any(|(n, _)| n == sname) {
                    return Err(perr(line, format!("duplicate subspace `{sname}`")));
                }
                subspaces.push((sname.to_string(), parse_span(t.labels(), span, line)?));
            }
            other => return Err(perr(line, format!("unknown keyword `{other}`"))),
        }
    }
    let algebra = algebra.ok_or_else(|| perr(text.lines().count().max(1), "missing `basis`"))?;
    Ok(AlgebraFile {
        name: name.unwrap_or_else(|| "unnamed".into()),
        algebra,
        modules: modules
            .into_iter()
            .map(|(n, m, acts)| (n, ModuleSpec::new(m, acts)))
            .collect(),
        subspaces,
    })
}

/// Canonical text; `parse(&serialize(f)) == f`.
pub fn serialize(f: &AlgebraFile) -> String {
    let t = &f.algebra;
    let labels = t.labels();
    let mut out = String::new();
    let _ = writeln!(out, "name {}", f.name);
    let _ = writeln!(out, "basis {}", labels.join(" "));
    for i in 0..t.dim() {
        for j in 0..t.dim() {
            let b = t.bracket(i, j);
            if !b.is_zero() {
                let _ = writeln!(out, "bracket {} {} -> {}", labels[i], labels[j], format_vector(labels, b));
            }
        }
    }
    for (name, m) in &f.modules {
        let _ = writeln!(out, "module {name} dim {}", m.dim());
        for (i, a) in m.actions().iter().enumerate() {
            if !a.is_zero() {
                let rows: Vec<String> = a.row_vecs().iter().map(BitVec::to_bitstring).collect();
                let _ = writeln!(out, "act {} = {}", labels[i], rows.join(" "));
            }
        }
    }
    for (name, s) in &f.subspaces {
        let vecs: Vec<String> = s.basis_vectors().iter().map(|v| format_vector(labels, v)).collect();
        let span = if vecs.is_empty() { "()".to_string() } else { vecs.join(", ") };
        let _ = writeln!(out, "subspace {name} = {span}");
    }
    out
}

pub fn read_file(path: &std::path::Path) -> Result<AlgebraFile> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse(&text)
}
