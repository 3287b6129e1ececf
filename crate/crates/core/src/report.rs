//! Command orchestration and machine-readable reports.
//!
//! A report separates `checks` (internal invariants; any failure means exit code 2)
//! from `comparisons` (agreement with published closed forms and tables; informational).

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::algebra::{BimoduleSpec, BracketTable, ModuleSpec, SubalgebraKind};
use crate::catalog::{load_algebra, resolve_module, resolve_subspace};
use crate::cochain::{ComplexTower, Flavor};
use crate::cohomology::betti_table;
use crate::comparison::{
    build_relative_complex, long_exact_sequence_check, propagation_check, verify_e2_product, ProductTheorem,
    RelKind,
};
use crate::error::{Error, Result};
use crate::f2la::{BitVec, Subspace};
use crate::format::{format_vector, serialize, AlgebraFile};
use crate::spectral::{compute_pages, convergence_check, e2_closed_form_check, hs_filtration, Page};
use crate::survey::{ideal_weight_pairs, survey_enumerate};

pub const SCHEMA_VERSION: u32 = 1;
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Check,
    Cohomology,
    HsSs,
    Compare,
    Les,
    Survey,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Check => "check",
            Command::Cohomology => "cohomology",
            Command::HsSs => "hs-ss",
            Command::Compare => "compare",
            Command::Les => "les",
            Command::Survey => "survey",
        }
    }

    pub fn default_max_degree(self) -> usize {
        match self {
            Command::Check => 0,
            Command::Cohomology | Command::HsSs => 6,
            Command::Les => 5,
            Command::Compare | Command::Survey => 4,
        }
    }
}

/// Parsed command-line request.
#[derive(Clone, Debug)]
pub struct Request {
    pub algebra: Option<String>,
    pub module: String,
    pub subspace: Option<String>,
    /// The subspace was given as an ideal rather than a subalgebra.
    pub require_ideal: bool,
    /// Empty means every flavor the algebra supports.
    pub flavors: Vec<Flavor>,
    pub max_degree: Option<usize>,
    pub survey_dim: usize,
    pub up_to_iso: bool,
}

impl Default for Request {
    fn default() -> Self {
        Self {
            algebra: None,
            module: "trivial".into(),
            subspace: None,
            require_ideal: false,
            flavors: Vec::new(),
            max_degree: None,
            survey_dim: 2,
            up_to_iso: true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Verdict {
    fn new(name: impl Into<String>, passed: bool) -> Self {
        Self {
            name: name.into(),
            passed,
            detail: None,
        }
    }

    fn with(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            passed,
            detail: Some(detail.into()),
        }
    }
}

/// A CSV table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Table {
    pub name: String,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    fn new(name: &str, header: &[&str]) -> Self {
        Self {
            name: name.into(),
            header: header.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub tool_version: &'static str,
    pub command: &'static str,
    /// SHA-256 of the canonical algebra text and every parameter that affects output.
    pub input_digest: String,
    pub checks: Vec<Verdict>,
    pub comparisons: Vec<Verdict>,
    pub payload: Value,
    #[serde(skip)]
    pub tables: Vec<Table>,
}

impl Report {
    pub fn checks_pass(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    /// 0 when every internal check passes, 2 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.checks_pass() {
            0
        } else {
            2
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Tables followed by the check and comparison verdicts.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        let mut verdicts = Table::new("verdicts", &["kind", "name", "passed", "detail"]);
        for (kind, list) in [("check", &self.checks), ("comparison", &self.comparisons)] {
            for v in list {
                verdicts.push(vec![
                    kind.into(),
                    v.name.clone(),
                    v.passed.to_string(),
                    v.detail.clone().unwrap_or_default(),
                ]);
            }
        }
        for t in self.tables.iter().chain(std::iter::once(&verdicts)) {
            let _ = writeln!(out, "# {}", t.name);
            let _ = writeln!(out, "{}", t.header.join(","));
            for row in &t.rows {
                let cells: Vec<String> = row.iter().map(|c| csv_cell(c)).collect();
                let _ = writeln!(out, "{}", cells.join(","));
            }
            out.push('\n');
        }
        out
    }
}

fn csv_cell(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

struct Context {
    file: AlgebraFile,
    module_name: String,
    module: Option<BimoduleSpec>,
    subspace: Option<Subspace>,
}

impl Context {
    fn t(&self) -> &BracketTable {
        &self.file.algebra
    }

    fn module(&self) -> &BimoduleSpec {
        self.module.as_ref().expect("module resolved")
    }

    fn labels(&self) -> &[String] {
        self.file.algebra.labels()
    }

    fn vec(&self, v: &BitVec) -> String {
        format_vector(self.labels(), v)
    }

    fn span(&self, s: &Subspace) -> Vec<String> {
        s.basis_vectors().iter().map(|v| self.vec(v)).collect()
    }

    /// Whether this is the catalog example `name` with trivial coefficients.
    fn is_example(&self, name: &str) -> bool {
        self.file.name == name && self.module_name == "trivial"
    }
}

fn load_context(req: &Request, strict_module: bool) -> Result<Context> {
    let spec = req.algebra.as_deref().ok_or_else(|| Error::UnknownName {
        kind: "algebra",
        name: "(none given)".into(),
    })?;
    let file = load_algebra(spec)?;
    let module = match resolve_module(&file, &req.module) {
        Ok(m) => Some(m),
        Err(Error::ModuleAxiom { .. }) if !strict_module => None,
        Err(e) => return Err(e),
    };
    let subspace = req
        .subspace
        .as_deref()
        .map(|s| resolve_subspace(&file, s))
        .transpose()?;
    Ok(Context {
        file,
        module_name: req.module.clone(),
        module,
        subspace,
    })
}

fn digest(cmd: Command, req: &Request, ctx: Option<&Context>, max_degree: usize) -> String {
    let mut h = Sha256::new();
    h.update(format!("{}\n{}\n", cmd.name(), max_degree));
    if let Some(ctx) = ctx {
        h.update(serialize(&ctx.file));
        h.update(format!("module {}\n", ctx.module_name));
        if let Some(m) = &ctx.module {
            for a in m.left() {
                h.update(format!("{a:?}\n"));
            }
        }
        if let Some(s) = &ctx.subspace {
            h.update(format!("subspace {:?} ideal {}\n", ctx.span(s), req.require_ideal));
        }
    }
    let flavors: Vec<&str> = req.flavors.iter().map(|f| f.name()).collect();
    h.update(format!("flavors {flavors:?}\n"));
    if cmd == Command::Survey {
        h.update(format!("survey {} {}\n", req.survey_dim, req.up_to_iso));
    }
    hex::encode(h.finalize())
}

pub fn run(cmd: Command, req: &Request) -> Result<Report> {
    let max_degree = req.max_degree.unwrap_or(cmd.default_max_degree());
    let ctx = match cmd {
        Command::Survey => None,
        Command::Check => Some(load_context(req, false)?),
        _ => Some(load_context(req, true)?),
    };
    let mut out = Output::default();
    match cmd {
        Command::Check => run_check(ctx.as_ref().expect("context"), &mut out)?,
        Command::Cohomology => run_cohomology(ctx.as_ref().expect("context"), req, max_degree, &mut out)?,
        Command::HsSs => run_hs_ss(ctx.as_ref().expect("context"), req, max_degree, &mut out)?,
        Command::Compare => run_compare(ctx.as_ref().expect("context"), max_degree, &mut out)?,
        Command::Les => run_les(ctx.as_ref().expect("context"), max_degree, &mut out)?,
        Command::Survey => run_survey(req, max_degree, &mut out)?,
    }
    Ok(Report {
        schema_version: SCHEMA_VERSION,
        tool_version: TOOL_VERSION,
        command: cmd.name(),
        input_digest: digest(cmd, req, ctx.as_ref(), max_degree),
        checks: out.checks,
        comparisons: out.comparisons,
        payload: Value::Object(out.payload),
        tables: out.tables,
    })
}

#[derive(Default)]
struct Output {
    checks: Vec<Verdict>,
    comparisons: Vec<Verdict>,
    payload: serde_json::Map<String, Value>,
    tables: Vec<Table>,
}

impl Output {
    fn put(&mut self, key: &str, value: impl Serialize) {
        self.payload
            .insert(key.into(), serde_json::to_value(value).expect("payload serializes"));
    }
}

fn run_check(ctx: &Context, out: &mut Output) -> Result<()> {
    let t = ctx.t();
    let class = t.classify();
    let leib = t.leibniz_kernel();
    let quotient = t.quotient_algebra(&leib)?;
    let mut props = Table::new("properties", &["property", "value"]);
    let mut prop = |k: &str, v: String| props.push(vec![k.into(), v]);
    prop("dim", t.dim().to_string());
    prop("commutative", class.commutative.to_string());
    prop("alternating", class.alternating.to_string());
    prop("jacobi", class.jacobi.to_string());
    prop("left_leibniz", class.left_leibniz.to_string());
    prop("leibniz_kernel", ctx.span(&leib).join(" | "));
    prop("leibniz_quotient_is_lie", quotient.q.classify().is_lie().to_string());
    let module_ok = ctx.module.is_some();
    prop("module_axioms", module_ok.to_string());
    out.put("labels", ctx.labels());
    out.put("class", class);
    out.put("leibniz_kernel", ctx.span(&leib));
    out.put("leibniz_quotient_dim", quotient.q.dim());
    out.put("leibniz_quotient_class", quotient.q.classify());
    out.put(
        "consistent_lambdas",
        crate::algebra::consistent_lambdas(t)
            .iter()
            .map(BitVec::to_bitstring)
            .collect::<Vec<_>>(),
    );
    out.put("module", json!({ "name": ctx.module_name, "axioms_hold": module_ok }));
    if let Some(h) = &ctx.subspace {
        let kind = t.is_ideal(h)?;
        prop("subspace_kind", format!("{kind:?}"));
        out.put("subspace", json!({ "basis": ctx.span(h), "kind": kind }));
    }
    if class.is_commutative_lie() {
        // the quotient by the squares of a commutative Lie algebra is a Lie algebra
        out.checks.push(Verdict::new(
            "leibniz_quotient_is_lie",
            quotient.q.classify().is_lie(),
        ));
    }
    out.tables.push(props);
    Ok(())
}

fn supported_flavors(t: &BracketTable, requested: &[Flavor]) -> Result<Vec<Flavor>> {
    let class = t.classify();
    if requested.is_empty() {
        return Ok(Flavor::ALL
            .into_iter()
            .filter(|f| f.check_algebra(&class).is_ok())
            .collect());
    }
    for f in requested {
        f.check_algebra(&class)?;
    }
    Ok(requested.to_vec())
}

/// `n + 1` if `4 | n`, else 0.
pub fn published_hs_closed_form(n: usize) -> usize {
    if n.is_multiple_of(4) {
        n + 1
    } else {
        0
    }
}

fn run_cohomology(ctx: &Context, req: &Request, max_degree: usize, out: &mut Output) -> Result<()> {
    let t = ctx.t();
    let m = ctx.module();
    let flavors = supported_flavors(t, &req.flavors)?;
    let mut table = Table::new("betti", &["flavor", "degree", "dim"]);
    let mut tables = serde_json::Map::new();
    for &f in &flavors {
        let tower = ComplexTower::build(f, t, m, max_degree + 1)?;
        out.checks.push(Verdict::new(
            format!("d_squared_zero_{}", f.name()),
            tower.check_composition().is_ok(),
        ));
        let b = betti_table(&tower)?;
        for (n, d) in b.dims.iter().enumerate() {
            table.push(vec![f.name().into(), n.to_string(), d.to_string()]);
        }
        if f == Flavor::Sym {
            let h = ctx.subspace.clone().unwrap_or_else(|| t.leibniz_kernel());
            let hs = hs_filtration(t, &h, m, max_degree + 2)?;
            let pages = compute_pages(&hs.filtered, hs.filtered.stable_page())?;
            let conv = convergence_check(&hs.filtered, pages.last().expect("pages"))?;
            let passed = conv.iter().all(|c| c.passed) && conv.iter().map(|c| c.expected).eq(b.dims.iter().copied());
            out.checks.push(Verdict::with(
                "direct_vs_e_infinity",
                passed,
                format!("filtration by {:?}", ctx.span(&h)),
            ));
            if ctx.is_example("N") || ctx.is_example("a") {
                for (n, &d) in b.dims.iter().enumerate() {
                    let expected = published_hs_closed_form(n);
                    out.comparisons.push(Verdict::with(
                        format!("hs_closed_form_degree_{n}"),
                        d == expected,
                        format!("computed {d}, published {expected}"),
                    ));
                }
            }
        }
        tables.insert(f.name().into(), serde_json::to_value(&b.dims).expect("dims"));
    }
    out.put("max_degree", max_degree);
    out.put("betti", Value::Object(tables));
    out.tables.push(table);
    Ok(())
}

fn page_table(pages: &[Page]) -> Table {
    let mut table = Table::new("pages", &["r", "p", "q", "dim"]);
    for page in pages {
        for e in page.rows() {
            table.push(vec![e.r.to_string(), e.p.to_string(), e.q.to_string(), e.dim.to_string()]);
        }
    }
    table
}

/// `d_r ∘ d_r = 0` and `dim E_{r+1} ≤ dim E_r` on every computed page.
fn page_checks(pages: &[Page]) -> (bool, bool) {
    let squares = pages.iter().all(|page| {
        page.diffs.iter().all(|(&(p, q), d)| {
            let next = (p + page.r, (q + 1).checked_sub(page.r));
            match next {
                (np, Some(nq)) => page.diffs.get(&(np, nq)).is_none_or(|d2| d2.mul(d).is_zero()),
                _ => true,
            }
        })
    });
    let shrink = pages.windows(2).all(|w| {
        w[1].entries.iter().all(|(k, &v)| v <= w[0].get(k.0, k.1))
    });
    (squares, shrink)
}

fn run_hs_ss(ctx: &Context, req: &Request, max_degree: usize, out: &mut Output) -> Result<()> {
    let t = ctx.t();
    let m = ctx.module();
    let h = ctx.subspace.as_ref().ok_or_else(|| Error::UnknownName {
        kind: "subspace",
        name: "(none given; use --ideal or --subalgebra)".into(),
    })?;
    let hs = hs_filtration(t, h, m, max_degree + 2)?;
    if req.require_ideal && hs.kind != SubalgebraKind::Ideal {
        return Err(Error::NotIdeal {
            found: "a subalgebra",
            required: "an ideal",
        });
    }
    let pages = compute_pages(&hs.filtered, hs.filtered.stable_page())?;
    let e_inf = pages.last().expect("pages");
    let conv = convergence_check(&hs.filtered, e_inf)?;
    out.checks.push(Verdict::new("convergence", conv.iter().all(|c| c.passed)));
    let (squares, shrink) = page_checks(&pages);
    out.checks.push(Verdict::new("page_differentials_square_to_zero", squares));
    out.checks.push(Verdict::new("pages_shrink", shrink));
    if hs.kind == SubalgebraKind::Ideal {
        let cf = e2_closed_form_check(&hs, &pages, max_degree)?;
        out.checks.push(Verdict::new("e0_e1_e2_closed_forms", cf.all_agree));
        out.put("closed_forms", &cf);
    }
    let e_example = ctx.subspace.as_ref().is_some_and(|s| ctx.span(s) == ["e"]);
    let grid = |name: &str, r: usize, expect: &dyn Fn(usize, usize) -> usize, out: &mut Output| {
        for n in 0..=max_degree {
            for p in 0..=n {
                let found = pages[r].get(p, n - p);
                let expected = expect(p, n - p);
                out.comparisons.push(Verdict::with(
                    format!("{name}_{p}_{}", n - p),
                    found == expected,
                    format!("computed {found}, published {expected}"),
                ));
            }
        }
    };
    let quarter = |p: usize, q: usize| usize::from((p + q).is_multiple_of(4));
    if e_example && ctx.is_example("N") {
        grid("e2", 2, &|_, _| 1, out);
        grid("e3", 3.min(pages.len() - 1), &quarter, out);
    }
    if e_example && ctx.is_example("a") {
        grid("e2", 2, &quarter, out);
    }
    if e_example && (ctx.is_example("N") || ctx.is_example("a")) {
        for c in &conv {
            let expected = published_hs_closed_form(c.degree);
            out.comparisons.push(Verdict::with(
                format!("hs_closed_form_degree_{}", c.degree),
                c.expected == expected,
                format!("computed {}, published {expected}", c.expected),
            ));
        }
    }
    out.put("subspace", json!({ "basis": ctx.span(h), "kind": hs.kind }));
    out.put(
        "adapted_basis",
        (0..t.dim()).map(|j| ctx.vec(&hs.adapted_basis.column(j))).collect::<Vec<_>>(),
    );
    out.put("max_degree", max_degree);
    out.put(
        "pages",
        pages.iter().map(|p| json!({ "r": p.r, "stable": p.stable, "entries": p.rows() })).collect::<Vec<_>>(),
    );
    out.put("convergence", &conv);
    out.tables.push(page_table(&pages));
    Ok(())
}

/// One-dimensional ideals acting by 1 on a one-dimensional module.
fn acting_line_ideals(t: &BracketTable, m: &ModuleSpec) -> Vec<Subspace> {
    if m.dim() != 1 {
        return Vec::new();
    }
    let lambda = BitVec::from_bools(&m.actions().iter().map(|a| a.get(0, 0)).collect::<Vec<_>>());
    ideal_weight_pairs(t)
        .into_iter()
        .filter(|(_, l)| *l == lambda)
        .map(|(h, _)| h)
        .collect()
}

fn run_compare(ctx: &Context, max_degree: usize, out: &mut Output) -> Result<()> {
    let t = ctx.t();
    let m = ctx.module();
    let class = t.classify();
    Flavor::Sym.check_algebra(&class)?;
    let theorems: Vec<ProductTheorem> = ProductTheorem::ALL
        .into_iter()
        .filter(|th| class.is_lie() || *th == ProductTheorem::T53)
        .collect();
    let reports = theorems
        .par_iter()
        .map(|&th| verify_e2_product(th, t, m, max_degree))
        .collect::<Result<Vec<_>>>()?;
    let mut table = Table::new("e2_products", &["theorem", "p", "q", "engine", "hr", "factor", "agree"]);
    for r in &reports {
        let name = format!("{:?}", r.theorem).to_lowercase();
        out.checks.push(Verdict::new(
            format!("convergence_{name}"),
            r.convergence.iter().all(|c| c.passed),
        ));
        let bad: Vec<String> = r.entries.iter().filter(|e| !e.agree).map(|e| format!("({},{})", e.p, e.q)).collect();
        out.comparisons.push(Verdict::with(
            format!("e2_product_{name}"),
            r.all_agree,
            if bad.is_empty() { "all entries agree".into() } else { format!("mismatch at {}", bad.join(" ")) },
        ));
        for e in &r.entries {
            table.push(
                [name.clone(), e.p.to_string(), e.q.to_string(), e.engine.to_string(), e.hr.to_string(), e.factor.to_string(), e.agree.to_string()]
                    .to_vec(),
            );
        }
    }
    let prop = propagation_check(t, m, max_degree + 2)?;
    for v in &prop.verdicts {
        let name = format!("{}_to_{}", v.hypothesis.name(), v.conclusion.name());
        if let Some(w) = v.window {
            out.checks.push(Verdict::with(
                format!("propagation_{name}"),
                v.holds,
                format!("hypothesis holds through degree {w}"),
            ));
        }
        if let Some(w) = v.converse_window {
            out.comparisons.push(Verdict::with(
                format!("converse_propagation_{name}"),
                v.converse_holds,
                format!("hypothesis holds through degree {w}"),
            ));
        }
    }
    let lines = acting_line_ideals(t, &m.left_module());
    if !lines.is_empty() {
        out.checks.push(Verdict::with(
            "one_dim_ideal_vanishing",
            prop.all_vanish,
            format!("ideal {:?}", ctx.span(&lines[0])),
        ));
    }
    out.put("max_degree", max_degree);
    out.put("products", &reports);
    out.put("propagation", &prop);
    out.tables.push(table);
    Ok(())
}

fn run_les(ctx: &Context, max_degree: usize, out: &mut Output) -> Result<()> {
    let t = ctx.t();
    let m = ctx.module();
    let class = t.classify();
    Flavor::Sym.check_algebra(&class)?;
    let kinds: Vec<RelKind> = RelKind::ALL
        .into_iter()
        .filter(|k| class.is_lie() || *k == RelKind::Sym)
        .collect();
    let n_max = max_degree.saturating_sub(1);
    let reports = kinds
        .par_iter()
        .map(|&k| {
            let rel = build_relative_complex(k, t, m, n_max)?;
            let short = (0..=n_max + 2).all(|i| rel.sub.dim(i) + rel.quotient.dim(i) == rel.total.dim(i));
            Ok((short, long_exact_sequence_check(&rel)?))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut table = Table::new("les", &["kind", "degree", "node", "dim", "exact"]);
    for (short, r) in &reports {
        out.checks.push(Verdict::new(format!("short_exact_{}", r.kind.name()), *short));
        out.checks.push(Verdict::new(format!("long_exact_{}", r.kind.name()), r.all_exact));
        for n in &r.nodes {
            table.push(vec![
                r.kind.name().into(),
                n.degree.to_string(),
                format!("{:?}", n.node).to_lowercase(),
                n.dim.to_string(),
                n.exact.to_string(),
            ]);
        }
    }
    out.put("max_degree", max_degree);
    out.put("sequences", reports.iter().map(|(_, r)| r).collect::<Vec<_>>());
    out.tables.push(table);
    Ok(())
}

#[derive(Serialize)]
struct OrbitSummary {
    canonical_code: u32,
    orbit_size: usize,
    abelian: bool,
    alternating: bool,
    brackets: Vec<String>,
    hs_trivial: Vec<usize>,
    vanishing_instances: usize,
    vanishing_holds: bool,
}

fn run_survey(req: &Request, max_degree: usize, out: &mut Output) -> Result<()> {
    let survey = survey_enumerate(req.survey_dim, req.up_to_iso)?;
    let summaries = survey
        .orbits
        .par_iter()
        .map(|o| {
            let t = &o.representative;
            let triv = crate::algebra::make_module(t, crate::algebra::ModuleKind::Trivial(1))?;
            let hs = betti_table(&ComplexTower::build(Flavor::Sym, t, &triv, max_degree + 1)?)?;
            let pairs = ideal_weight_pairs(t);
            let mut holds = true;
            for (_, lambda) in &pairs {
                let f = crate::algebra::make_module(t, crate::algebra::ModuleKind::FLambda(lambda.clone()))?;
                holds &= betti_table(&ComplexTower::build(Flavor::Sym, t, &f, 7)?)?.dims.iter().all(|&x| x == 0);
            }
            let labels = t.labels();
            let mut brackets = Vec::new();
            for i in 0..t.dim() {
                for j in i..t.dim() {
                    if !t.bracket(i, j).is_zero() {
                        brackets.push(format!("[{},{}]={}", labels[i], labels[j], format_vector(labels, t.bracket(i, j))));
                    }
                }
            }
            Ok(OrbitSummary {
                canonical_code: o.canonical_code,
                orbit_size: o.orbit_size,
                abelian: o.abelian,
                alternating: o.alternating,
                brackets,
                hs_trivial: hs.dims,
                vanishing_instances: pairs.len(),
                vanishing_holds: holds,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    out.checks.push(Verdict::new(
        "representatives_are_commutative_lie",
        survey.orbits.iter().all(|o| o.representative.classify().is_commutative_lie()),
    ));
    out.checks.push(Verdict::new(
        "orbits_partition_raw",
        !req.up_to_iso || survey.orbits.iter().map(|o| o.orbit_size).sum::<usize>() == survey.raw_count,
    ));
    let instances: usize = summaries.iter().map(|s| s.vanishing_instances).sum();
    if instances > 0 {
        out.checks.push(Verdict::with(
            "one_dim_ideal_vanishing",
            summaries.iter().all(|s| s.vanishing_holds),
            format!("{instances} instances through degree 6"),
        ));
    }
    let mut header = vec!["code", "orbit_size", "abelian", "alternating", "brackets"];
    let hs_cols: Vec<String> = (0..=max_degree).map(|n| format!("hs{n}")).collect();
    header.extend(hs_cols.iter().map(String::as_str));
    let mut table = Table::new("survey", &header);
    for s in &summaries {
        let mut row = vec![
            s.canonical_code.to_string(),
            s.orbit_size.to_string(),
            s.abelian.to_string(),
            s.alternating.to_string(),
            s.brackets.join(" "),
        ];
        row.extend(s.hs_trivial.iter().map(usize::to_string));
        table.push(row);
    }
    out.put("dim", survey.dim);
    out.put("candidates", survey.candidates);
    out.put("raw_count", survey.raw_count);
    out.put("orbit_count", survey.orbit_count);
    out.put("max_degree", max_degree);
    out.put("orbits", &summaries);
    out.tables.push(table);
    Ok(())
}
