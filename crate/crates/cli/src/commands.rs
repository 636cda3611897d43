//! The `check`, `construct`, `pipeline` and `report` commands.

use std::ffi::OsString;
use std::fmt;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use relpoisson::algebra::{
    bracket_from_derivation, check_comm_assoc, check_derivation, check_jacobi_algebra, check_lie, check_rel_poisson,
    find_unit,
};
use relpoisson::coalgebra::{bialgebra_to_matched_pair, check_bialgebra, check_rel_poisson_coalgebra, dualize_bialgebra};
use relpoisson::jacobi::{check_frobenius_jacobi, extend_jacobi, frobenius_jacobi_pipeline, FrobeniusJacobiAlgebra};
use relpoisson::pairing::{bowtie, check_invariant_form, BilinForm};
use relpoisson::pre_poisson::{check_prelie, check_rel_pre_poisson, check_zinbiel, circ_from_derivation, subadjacent};
use relpoisson::rep::{check_representation, semidirect_product};
use relpoisson::yang_baxter::{check_coboundary_conditions, check_rpybe, check_weak_o_operator, coboundary_bialgebra, o_operator_to_rmatrix};
use relpoisson::{AxiomReport, Error};
use serde_json::{json, Value};

use crate::document::{Kind, StructureDocument};
use crate::format::{combination, field_lines};

pub const EXIT_OK: i32 = 0;
pub const EXIT_AXIOM: i32 = 1;
pub const EXIT_PRECONDITION: i32 = 2;
pub const EXIT_PARSE: i32 = 3;

/// Why a command could not produce a verdict.
#[derive(Debug)]
pub enum Failure {
    Io(String),
    Parse(String),
    Precondition(String),
}

impl Failure {
    pub fn code(&self) -> i32 {
        match self {
            Failure::Io(_) | Failure::Parse(_) => EXIT_PARSE,
            Failure::Precondition(_) => EXIT_PRECONDITION,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Io(m) => write!(f, "I/O error: {m}"),
            Failure::Parse(m) => write!(f, "parse error: {m}"),
            Failure::Precondition(m) => write!(f, "{m}"),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Shape(_) | Error::DuplicateLabel(_) | Error::Scalar(_) => Failure::Parse(e.to_string()),
            _ => Failure::Precondition(e.to_string()),
        }
    }
}

/// Exit code and captured output of one invocation.
#[derive(Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn failed(f: Failure) -> Self {
        Outcome {
            code: f.code(),
            stdout: String::new(),
            stderr: format!("{f}\n"),
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "relpoisson", version, about = "Check and construct relative Poisson structures with exact arithmetic")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the axioms of a structure document.
    Check {
        file: PathBuf,
        /// Read the document as another kind, or as `jacobi`,
        /// `frobenius-jacobi` or `coboundary`.
        #[arg(long = "as", value_name = "KIND")]
        as_kind: Option<String>,
        /// Print the report as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Build a structure from a document.
    Construct {
        recipe: Recipe,
        input: PathBuf,
        /// Write the document here instead of standard output.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Relative pre-Poisson algebra to Frobenius Jacobi algebra, verifying
    /// every stage.
    Pipeline {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Also write every intermediate structure into this directory.
        #[arg(long, value_name = "DIR")]
        keep: Option<PathBuf>,
        /// Print the stage report as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Summarize a document: tables, unit, and every check that applies.
    Report {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Recipe {
    /// comm-assoc with derivation P → rel-poisson with [x,y] = x·P(y) - P(x)·y
    BracketFromDerivation,
    /// zinbiel with derivation P → rel-pre-poisson with x∘y = x⋆P(y) - P(x)⋆y
    CircFromDerivation,
    /// rel-pre-poisson → its sub-adjacent rel-poisson algebra
    Subadjacent,
    /// representation → semidirect product
    Semidirect,
    /// bialgebra → dual bialgebra
    Dualize,
    /// rel-poisson → unital extension
    ExtendJacobi,
    /// rmatrix → coboundary bialgebra
    Coboundary,
    /// representation with operator T → r = T - τ(T) in the semidirect
    /// product with the dual module, using β = -α and Q = -P
    OOperatorRmatrix,
    /// bialgebra → double with its canonical form
    Bowtie,
}

/// What `check` verifies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    Kind(Kind),
    Jacobi,
    FrobeniusJacobi,
    Coboundary,
}

impl Target {
    pub fn all() -> Vec<Target> {
        let mut out: Vec<Target> = Kind::ALL.into_iter().map(Target::Kind).collect();
        out.extend([Target::Jacobi, Target::FrobeniusJacobi, Target::Coboundary]);
        out
    }

    pub fn name(self) -> &'static str {
        match self {
            Target::Kind(k) => k.name(),
            Target::Jacobi => "jacobi",
            Target::FrobeniusJacobi => "frobenius-jacobi",
            Target::Coboundary => "coboundary",
        }
    }

    pub fn from_name(s: &str) -> Option<Target> {
        Target::all().into_iter().find(|t| t.name() == s)
    }

    /// The kind whose fields the check reads.
    fn kind(self) -> Kind {
        match self {
            Target::Kind(k) => k,
            Target::Jacobi => Kind::RelPoisson,
            Target::FrobeniusJacobi => Kind::BilinearForm,
            Target::Coboundary => Kind::RMatrix,
        }
    }
}

/// Fields of `doc` that can stand for `field` of `target`.
fn sources(target: Kind, field: &str) -> &'static [&'static str] {
    match (target, field) {
        (Kind::CommAssoc, "product") => &["product", "dot"],
        (Kind::Lie, "product") => &["product", "bracket"],
        (Kind::Zinbiel, "product") => &["product", "star"],
        (Kind::PreLie, "product") => &["product", "circ"],
        (_, "dot") => &["dot"],
        (_, "bracket") => &["bracket"],
        (_, "star") => &["star"],
        (_, "circ") => &["circ"],
        (_, "derivation") => &["derivation"],
        (_, "mu") => &["mu"],
        (_, "rho") => &["rho"],
        (_, "alpha") => &["alpha"],
        (_, "operator") => &["operator"],
        (_, "coproduct") => &["coproduct"],
        (_, "cobracket") => &["cobracket"],
        (_, "q") => &["q"],
        (_, "r") => &["r"],
        (_, "gram") => &["gram"],
        _ => &[],
    }
}

/// `doc` read as a document of kind `target`. Every field of `target` must
/// come from a field of `doc`, except the optional O-operator.
pub fn view(doc: &StructureDocument, target: Kind) -> Result<StructureDocument, Failure> {
    if doc.kind == target {
        return Ok(doc.clone());
    }
    let mut out = StructureDocument::new(target, doc.basis.clone(), doc.module_basis.clone());
    out.note = doc.note.clone();
    for spec in target.fields() {
        let src = sources(target, spec.name).iter().find(|s| doc.kind.field(s).is_some());
        match src {
            Some(s) => out.set(spec.name, doc.entries(s).to_vec()),
            None if spec.name == "operator" => {}
            None => {
                return Err(Failure::Precondition(format!(
                    "a {} document has nothing to read as `{}` of a {target}",
                    doc.kind, spec.name
                )))
            }
        }
    }
    Ok(out)
}

fn form_checks(f: &FrobeniusJacobiAlgebra) -> AxiomReport {
    let g = &f.form.gram;
    let n = g.rows();
    let mut r = check_rel_poisson(&f.algebra).prefixed("algebra");
    for i in 0..n {
        for j in i + 1..n {
            r.check("form-symmetric", &[i, j], vec![&g[(i, j)] - &g[(j, i)]]);
        }
    }
    if !f.form.is_nondegenerate() {
        r.check("form-nondegenerate", &[], vec![relpoisson::linear::int(1)]);
    }
    r.merge(check_invariant_form(&f.algebra, &BilinForm::new(f.algebra.space().clone(), g.clone()).expect("square")));
    r
}

/// Runs the checks of `target` on `doc`.
pub fn check_document(doc: &StructureDocument, target: Target) -> Result<AxiomReport, Failure> {
    let d = view(doc, target.kind())?;
    let single = |check: fn(&relpoisson::algebra::BilinearOp) -> AxiomReport| {
        let op = d.op("product");
        let mut r = check(&op);
        r.merge(check_derivation(&op, &d.map("derivation")).prefixed("derivation"));
        r
    };
    Ok(match target {
        Target::Kind(Kind::CommAssoc) => single(check_comm_assoc),
        Target::Kind(Kind::Lie) => single(check_lie),
        Target::Kind(Kind::Zinbiel) => single(check_zinbiel),
        Target::Kind(Kind::PreLie) => single(check_prelie),
        Target::Kind(Kind::RelPoisson) => check_rel_poisson(&d.algebra()),
        Target::Kind(Kind::RelPrePoisson) => check_rel_pre_poisson(&d.rel_pre_poisson()),
        Target::Kind(Kind::Representation) => {
            let rep = d.rep();
            let mut r = check_representation(&rep);
            let t = d.map("operator");
            if !t.is_zero() {
                r.merge(check_weak_o_operator(&rep.compat, &rep.alpha, &t)?.prefixed("operator"));
            }
            r
        }
        Target::Kind(Kind::Comultiplication) => {
            check_rel_poisson_coalgebra(&d.comult("coproduct"), &d.comult("cobracket"), &d.map("q"))
        }
        Target::Kind(Kind::Bialgebra) => check_bialgebra(&d.bialgebra()),
        Target::Kind(Kind::RMatrix) => check_rpybe(&d.algebra(), &d.map("q"), &d.rmatrix())?,
        Target::Kind(Kind::BilinearForm) => form_checks(&d.frobenius()),
        Target::Jacobi => {
            let a = d.algebra();
            let unit = find_unit(a.dot()).ok_or(Error::NoUnit)?;
            let mut r = check_jacobi_algebra(a.dot(), a.bracket())?;
            let defect = a.p().sub(&a.bracket().left_of(&unit));
            for j in 0..a.dim() {
                r.check("derivation-is-ad-unit", &[j], defect.column(j));
            }
            r
        }
        Target::FrobeniusJacobi => check_frobenius_jacobi(&d.frobenius())?,
        Target::Coboundary => check_coboundary_conditions(&d.algebra(), &d.map("q"), &d.rmatrix())?,
    })
}

/// Runs `recipe` on `doc`.
pub fn construct(recipe: Recipe, doc: &StructureDocument) -> Result<StructureDocument, Failure> {
    Ok(match recipe {
        Recipe::BracketFromDerivation => {
            let d = view(doc, Kind::CommAssoc)?;
            let (dot, p) = (d.op("product"), d.map("derivation"));
            let br = bracket_from_derivation(&dot, &p)?;
            StructureDocument::from_rel_poisson(&relpoisson::algebra::RelPoissonAlgebra::new(dot, br, p)?)
        }
        Recipe::CircFromDerivation => {
            let d = view(doc, Kind::Zinbiel)?;
            let (star, p) = (d.op("product"), d.map("derivation"));
            let circ = circ_from_derivation(&star, &p)?;
            StructureDocument::from_rel_pre_poisson(&relpoisson::pre_poisson::RelPrePoissonAlgebra::new(star, circ, p)?)
        }
        Recipe::Subadjacent => {
            let pp = view(doc, Kind::RelPrePoisson)?.rel_pre_poisson();
            StructureDocument::from_rel_poisson(&subadjacent(&pp)?.0)
        }
        Recipe::Semidirect => StructureDocument::from_rel_poisson(&semidirect_product(&view(doc, Kind::Representation)?.rep())?),
        Recipe::Dualize => StructureDocument::from_bialgebra(&dualize_bialgebra(&view(doc, Kind::Bialgebra)?.bialgebra())?),
        Recipe::ExtendJacobi => StructureDocument::from_rel_poisson(&extend_jacobi(&view(doc, Kind::RelPoisson)?.algebra())?),
        Recipe::Coboundary => {
            let d = view(doc, Kind::RMatrix)?;
            StructureDocument::from_bialgebra(&coboundary_bialgebra(&d.algebra(), &d.map("q"), &d.rmatrix())?)
        }
        Recipe::OOperatorRmatrix => {
            let d = view(doc, Kind::Representation)?;
            let rep = d.rep();
            let p = rep.compat.algebra.p().neg();
            let built = o_operator_to_rmatrix(&rep, &rep.alpha.neg(), &p, &d.map("operator"))?;
            StructureDocument::from_rmatrix(&built.algebra, &built.q, &built.r)
        }
        Recipe::Bowtie => {
            let b = view(doc, Kind::Bialgebra)?.bialgebra();
            let double = bowtie(&bialgebra_to_matched_pair(&b)?)?;
            let form = BilinForm::canonical_pairing(b.algebra.space());
            StructureDocument::from_frobenius(&FrobeniusJacobiAlgebra { algebra: double, form })
        }
    })
}

fn read(path: &Path) -> Result<StructureDocument, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
    StructureDocument::parse(&text).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

pub fn report_json(r: &AxiomReport) -> Value {
    let violations: Vec<Value> = r
        .violations()
        .iter()
        .map(|v| {
            json!({
                "axiom": v.axiom,
                "indices": v.indices,
                "defect": v.defect.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({
        "ok": r.ok(),
        "count": r.count(),
        "failures": r.failures(),
        "violations": violations,
    })
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

/// Defect listing with basis labels next to the indices.
fn located(r: &AxiomReport, doc: &StructureDocument) -> String {
    let mut out = format!("{} violation(s)\n", r.count());
    for v in r.violations() {
        let labels: Vec<&str> = v.indices.iter().map(|&i| doc.basis.get(i).map_or("?", String::as_str)).collect();
        let defect: Vec<String> = v.defect.iter().map(|c| c.to_string()).collect();
        out.push_str(&format!(
            "  {} at ({}) [{}]: defect [{}]\n",
            v.axiom,
            v.indices.iter().map(usize::to_string).collect::<Vec<_>>().join(", "),
            labels.join(", "),
            defect.join(", ")
        ));
    }
    if r.count() > r.violations().len() {
        out.push_str(&format!("  ... {} more\n", r.count() - r.violations().len()));
    }
    out
}

fn cmd_check(file: &Path, as_kind: Option<&str>, json_out: bool) -> Result<Outcome, Failure> {
    let doc = read(file)?;
    let target = match as_kind {
        None => Target::Kind(doc.kind),
        Some(s) => Target::from_name(s).ok_or_else(|| Failure::Parse(format!("unknown kind `{s}`")))?,
    };
    let r = check_document(&doc, target)?;
    let code = if r.ok() { EXIT_OK } else { EXIT_AXIOM };
    let stdout = if json_out {
        let mut v = report_json(&r);
        v["kind"] = json!(target.name());
        pretty(&v)
    } else if r.ok() {
        format!("{}: ok\n", target.name())
    } else {
        format!("{}: FAILED, {}", target.name(), located(&r, &doc))
    };
    Ok(Outcome {
        code,
        stdout,
        stderr: String::new(),
    })
}

fn emit(text: String, output: Option<&Path>) -> Result<Outcome, Failure> {
    match output {
        Some(p) => {
            write(p, &text)?;
            Ok(Outcome::default())
        }
        None => Ok(Outcome {
            stdout: text,
            ..Outcome::default()
        }),
    }
}

fn cmd_pipeline(file: &Path, output: Option<&Path>, keep: Option<&Path>, json_out: bool) -> Result<Outcome, Failure> {
    let doc = read(file)?;
    let pp = view(&doc, Kind::RelPrePoisson)?.rel_pre_poisson();
    let out = frobenius_jacobi_pipeline(&pp).map_err(|e| match e {
        Error::Precondition { name, report } => Failure::Precondition(format!("stage `{name}` failed\n{report}")),
        other => other.into(),
    })?;
    let mut result = StructureDocument::from_frobenius(&out.frobenius);
    result.note = Some("Frobenius Jacobi algebra: the double of the coboundary bialgebra, with its canonical form".into());
    if let Some(dir) = keep {
        std::fs::create_dir_all(dir).map_err(|e| Failure::Io(format!("{}: {e}", dir.display())))?;
        let files = [
            ("subadjacent.json", StructureDocument::from_rel_poisson(&out.subadjacent)),
            ("extended.json", StructureDocument::from_rel_poisson(&out.extended)),
            ("rmatrix.json", StructureDocument::from_rmatrix(&out.jacobi, &out.q, &out.r)),
            ("bialgebra.json", StructureDocument::from_bialgebra(&out.bialgebra)),
            ("dual.json", StructureDocument::from_rel_poisson(&out.dual)),
            ("double.json", result.clone()),
        ];
        for (name, d) in files {
            write(&dir.join(name), &d.to_text())?;
        }
    }
    let stderr = if json_out {
        let stages: Vec<Value> = out
            .stages
            .iter()
            .map(|s| json!({"stage": s.name, "report": report_json(&s.report)}))
            .collect();
        pretty(&json!({ "dimension": result.dim(), "stages": stages }))
    } else {
        let mut s: String = out.stages.iter().map(|s| format!("stage {}: {}\n", s.name, s.report)).collect();
        s.push_str(&format!("output: {}-dimensional Frobenius Jacobi algebra\n", result.dim()));
        s
    };
    let mut o = emit(result.to_text(), output)?;
    o.stderr = stderr;
    Ok(o)
}

fn cmd_report(file: &Path, json_out: bool) -> Result<Outcome, Failure> {
    let doc = read(file)?;
    let unit_field = ["dot", "product"].into_iter().find(|f| doc.kind.field(f).is_some());
    let unit = unit_field.map(|f| {
        find_unit(&doc.op(f)).map(|u| combination(u.iter().zip(&doc.basis).filter(|(c, _)| !num_traits::Zero::is_zero(*c)).map(|(c, l)| (c, l.clone()))))
    });
    let mut checks = Vec::new();
    for t in Target::all() {
        if view(&doc, t.kind()).is_err() {
            continue;
        }
        let verdict = match check_document(&doc, t) {
            Ok(r) if r.ok() => "ok".to_string(),
            Ok(r) => format!("fails ({} violation(s))", r.count()),
            Err(f) => format!("n/a ({})", f.to_string().lines().next().unwrap_or_default()),
        };
        checks.push((t.name(), verdict));
    }
    let tables: Vec<(&str, Vec<String>)> = doc.kind.fields().iter().map(|f| (f.name, field_lines(&doc, f.name))).collect();
    if json_out {
        let v = json!({
            "kind": doc.kind.name(),
            "note": doc.note,
            "dimension": doc.dim(),
            "basis": doc.basis,
            "module_basis": if doc.kind.has_module() { json!(doc.module_basis) } else { Value::Null },
            "unit": unit.map(|u| u.map_or(Value::Null, Value::String)),
            "tables": tables.iter().map(|(n, ls)| (n.to_string(), json!(ls))).collect::<serde_json::Map<_, _>>(),
            "checks": checks.iter().map(|(n, v)| (n.to_string(), json!(v))).collect::<serde_json::Map<_, _>>(),
        });
        return Ok(Outcome {
            stdout: pretty(&v),
            ..Outcome::default()
        });
    }
    let mut s = format!("kind: {}\n", doc.kind);
    if let Some(n) = &doc.note {
        s.push_str(&format!("note: {n}\n"));
    }
    s.push_str(&format!("dimension: {}\nbasis: {}\n", doc.dim(), doc.basis.join(" ")));
    if doc.kind.has_module() {
        s.push_str(&format!("module basis: {}\n", doc.module_basis.join(" ")));
    }
    if let Some(u) = unit {
        s.push_str(&format!("unit: {}\n", u.as_deref().unwrap_or("none")));
    }
    for (name, lines) in tables {
        if lines.is_empty() {
            s.push_str(&format!("{name}: zero\n"));
        } else {
            s.push_str(&format!("{name}:\n"));
            for l in lines {
                s.push_str(&format!("  {l}\n"));
            }
        }
    }
    s.push_str("checks:\n");
    for (n, v) in checks {
        s.push_str(&format!("  {n:<18} {v}\n"));
    }
    Ok(Outcome {
        stdout: s,
        ..Outcome::default()
    })
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code, stdout: String::new(), stderr: text }
            } else {
                Outcome { code, stdout: text, stderr: String::new() }
            };
        }
    };
    let result = match &cli.command {
        Command::Check { file, as_kind, json } => cmd_check(file, as_kind.as_deref(), *json),
        Command::Construct { recipe, input, output } => {
            read(input).and_then(|d| construct(*recipe, &d)).and_then(|d| emit(d.to_text(), output.as_deref()))
        }
        Command::Pipeline { file, output, keep, json } => cmd_pipeline(file, output.as_deref(), keep.as_deref(), *json),
        Command::Report { file, json } => cmd_report(file, *json),
    };
    result.unwrap_or_else(Outcome::failed)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn doc(text: &str) -> StructureDocument {
        StructureDocument::parse(text).unwrap()
    }

    #[test]
    fn views_rename_products() {
        let d = doc(r#"{"kind": "rel-poisson", "dimension": 1, "dot": [[0, 0, 0, "1"]]}"#);
        let v = view(&d, Kind::CommAssoc).unwrap();
        assert_eq!(v.entries("product"), d.entries("dot"));
        assert!(view(&d, Kind::Representation).is_err());
        assert!(view(&v, Kind::RelPoisson).is_err());
    }

    #[test]
    fn every_kind_checks_its_zero_structure() {
        for k in Kind::ALL {
            for n in [0, 2] {
                let d = StructureDocument::new(k, (1..=n).map(|i| format!("e{i}")).collect(), vec!["v1".into()]);
                let r = check_document(&d, Target::Kind(k));
                // zero gram is degenerate
                let expect_ok = k != Kind::BilinearForm || n == 0;
                assert_eq!(r.unwrap().ok(), expect_ok, "{k} in dimension {n}");
            }
        }
    }

    #[test]
    fn target_names_round_trip() {
        for t in Target::all() {
            assert_eq!(Target::from_name(t.name()), Some(t));
        }
        assert_eq!(Target::from_name("poisson"), None);
    }

    #[test]
    fn jacobi_needs_a_unit() {
        let d = doc(r#"{"kind": "rel-poisson", "dimension": 1}"#);
        let f = check_document(&d, Target::Jacobi).unwrap_err();
        assert_eq!(f.code(), EXIT_PRECONDITION);
    }

    #[test]
    fn construct_coboundary_with_zero_r() {
        let d = doc(r#"{"kind": "rmatrix", "dimension": 2, "dot": [[0, 0, 1, "1"]], "derivation": [[0, 0, "1"], [1, 1, "2"]]}"#);
        let b = construct(Recipe::Coboundary, &d).unwrap();
        assert_eq!(b.kind, Kind::Bialgebra);
        assert!(b.entries("coproduct").is_empty() && b.entries("cobracket").is_empty());
        assert_eq!(b.entries("dot"), d.entries("dot"));
    }

    #[test]
    fn construct_reports_failing_precondition() {
        // x·x = x with P = id is not a derivation
        let d = doc(r#"{"kind": "comm-assoc", "dimension": 1, "product": [[0, 0, 0, "1"]], "derivation": [[0, 0, "1"]]}"#);
        let f = construct(Recipe::BracketFromDerivation, &d).unwrap_err();
        assert_eq!(f.code(), EXIT_PRECONDITION);
        assert!(f.to_string().contains("derivation"), "{f}");
    }

    #[test]
    fn help_and_usage_errors() {
        assert_eq!(run(["relpoisson", "--help"]).code, EXIT_OK);
        assert_eq!(run(["relpoisson", "frobnicate"]).code, EXIT_PARSE);
        assert_eq!(run(["relpoisson", "check", "/nonexistent/file.json"]).code, EXIT_PARSE);
    }
}
