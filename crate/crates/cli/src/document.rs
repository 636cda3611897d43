//! The structure document: a JSON object holding a kind tag, a labeled basis
//! and sparse exact entries. Scalars are `"p/q"` strings.
//!
//! Index conventions, inputs first and output last:
//!
//! | layout  | entry                            | meaning                              |
//! |---------|----------------------------------|--------------------------------------|
//! | product | `[i, j, k, c]`                   | `e_i ∗ e_j` has `c` on `e_k`         |
//! | map     | `[i, k, c]`                      | `f(e_i)` has `c` on `e_k`            |
//! | actions | `[x, i, k, c]`                   | `μ(e_x) v_i` has `c` on `v_k`        |
//! | coprod  | `[k, i, j, c]`                   | `Δ(e_k)` has `c` on `e_i ⊗ e_j`      |
//! | tensor  | `[i, j, c]`                      | `c e_i ⊗ e_j`, or `B(e_i, e_j) = c`  |

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use relpoisson::linear::parse_scalar;
use relpoisson::{Scalar, Space};
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Kind {
    CommAssoc,
    Lie,
    Zinbiel,
    PreLie,
    RelPoisson,
    RelPrePoisson,
    Representation,
    Comultiplication,
    Bialgebra,
    RMatrix,
    BilinearForm,
}

impl Kind {
    pub const ALL: [Kind; 11] = [
        Kind::CommAssoc,
        Kind::Lie,
        Kind::Zinbiel,
        Kind::PreLie,
        Kind::RelPoisson,
        Kind::RelPrePoisson,
        Kind::Representation,
        Kind::Comultiplication,
        Kind::Bialgebra,
        Kind::RMatrix,
        Kind::BilinearForm,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Kind::CommAssoc => "comm-assoc",
            Kind::Lie => "lie",
            Kind::Zinbiel => "zinbiel",
            Kind::PreLie => "pre-lie",
            Kind::RelPoisson => "rel-poisson",
            Kind::RelPrePoisson => "rel-pre-poisson",
            Kind::Representation => "representation",
            Kind::Comultiplication => "comultiplication",
            Kind::Bialgebra => "bialgebra",
            Kind::RMatrix => "rmatrix",
            Kind::BilinearForm => "bilinear-form",
        }
    }

    pub fn from_name(s: &str) -> Option<Kind> {
        Kind::ALL.into_iter().find(|k| k.name() == s)
    }

    pub fn fields(self) -> &'static [FieldSpec] {
        use Layout::*;
        const fn f(name: &'static str, layout: Layout) -> FieldSpec {
            FieldSpec { name, layout }
        }
        const AA: Layout = Map(Axis::A, Axis::A);
        const SINGLE: &[FieldSpec] = &[f("product", Product), f("derivation", AA)];
        const REL_POISSON: &[FieldSpec] = &[f("dot", Product), f("bracket", Product), f("derivation", AA)];
        const REL_PRE_POISSON: &[FieldSpec] = &[f("star", Product), f("circ", Product), f("derivation", AA)];
        const REPRESENTATION: &[FieldSpec] = &[
            f("dot", Product),
            f("bracket", Product),
            f("derivation", AA),
            f("mu", Actions),
            f("rho", Actions),
            f("alpha", Map(Axis::V, Axis::V)),
            f("operator", Map(Axis::V, Axis::A)),
        ];
        const COMULTIPLICATION: &[FieldSpec] = &[f("coproduct", Coproduct), f("cobracket", Coproduct), f("q", AA)];
        const BIALGEBRA: &[FieldSpec] = &[
            f("dot", Product),
            f("bracket", Product),
            f("derivation", AA),
            f("coproduct", Coproduct),
            f("cobracket", Coproduct),
            f("q", AA),
        ];
        const RMATRIX: &[FieldSpec] =
            &[f("dot", Product), f("bracket", Product), f("derivation", AA), f("q", AA), f("r", Tensor)];
        const FORM: &[FieldSpec] = &[f("dot", Product), f("bracket", Product), f("derivation", AA), f("gram", Tensor)];
        match self {
            Kind::CommAssoc | Kind::Lie | Kind::Zinbiel | Kind::PreLie => SINGLE,
            Kind::RelPoisson => REL_POISSON,
            Kind::RelPrePoisson => REL_PRE_POISSON,
            Kind::Representation => REPRESENTATION,
            Kind::Comultiplication => COMULTIPLICATION,
            Kind::Bialgebra => BIALGEBRA,
            Kind::RMatrix => RMATRIX,
            Kind::BilinearForm => FORM,
        }
    }

    pub fn has_module(self) -> bool {
        self == Kind::Representation
    }

    pub fn field(self, name: &str) -> Option<FieldSpec> {
        self.fields().iter().copied().find(|f| f.name == name)
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The algebra or the module.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axis {
    A,
    V,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Layout {
    Product,
    Map(Axis, Axis),
    Actions,
    Coproduct,
    Tensor,
}

impl Layout {
    pub fn axes(self) -> Vec<Axis> {
        match self {
            Layout::Product | Layout::Coproduct => vec![Axis::A; 3],
            Layout::Map(from, to) => vec![from, to],
            Layout::Actions => vec![Axis::A, Axis::V, Axis::V],
            Layout::Tensor => vec![Axis::A, Axis::A],
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FieldSpec {
    pub name: &'static str,
    pub layout: Layout,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Entry {
    pub index: Vec<usize>,
    pub value: Scalar,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError(pub String);

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for ParseError {}

fn err<T>(msg: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError(msg.into()))
}

/// A parsed document. Every field of the kind is present; a field with no
/// entries is zero. Entries are sorted by index and never zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureDocument {
    pub kind: Kind,
    pub note: Option<String>,
    pub basis: Vec<String>,
    pub module_basis: Vec<String>,
    fields: BTreeMap<&'static str, Vec<Entry>>,
}

impl StructureDocument {
    /// The zero structure of `kind` on the given bases.
    pub fn new(kind: Kind, basis: Vec<String>, module_basis: Vec<String>) -> Self {
        let fields = kind.fields().iter().map(|f| (f.name, Vec::new())).collect();
        let module_basis = if kind.has_module() { module_basis } else { Vec::new() };
        StructureDocument {
            kind,
            note: None,
            basis,
            module_basis,
            fields,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn module_dim(&self) -> usize {
        self.module_basis.len()
    }

    pub fn space(&self) -> Space {
        Space::new(self.basis.iter().cloned()).expect("labels checked on construction")
    }

    pub fn module_space(&self) -> Space {
        Space::new(self.module_basis.iter().cloned()).expect("labels checked on construction")
    }

    fn axis_dim(&self, a: Axis) -> usize {
        match a {
            Axis::A => self.dim(),
            Axis::V => self.module_dim(),
        }
    }

    pub fn entries(&self, name: &str) -> &[Entry] {
        self.fields.get(name).map(Vec::as_slice).unwrap_or_else(|| panic!("{} has no field `{name}`", self.kind))
    }

    /// Replaces a field, dropping zeros and sorting. Panics on a name that is
    /// not in the schema or an index out of range.
    pub fn set(&mut self, name: &str, entries: Vec<Entry>) {
        let spec = self.kind.field(name).unwrap_or_else(|| panic!("{} has no field `{name}`", self.kind));
        let bounds: Vec<usize> = spec.layout.axes().into_iter().map(|a| self.axis_dim(a)).collect();
        let mut entries: Vec<Entry> = entries.into_iter().filter(|e| !e.value.is_zero()).collect();
        for e in &entries {
            assert!(e.index.len() == bounds.len() && e.index.iter().zip(&bounds).all(|(i, b)| i < b));
        }
        entries.sort();
        *self.fields.get_mut(spec.name).unwrap() = entries;
    }

    pub fn parse(text: &str) -> Result<StructureDocument, ParseError> {
        let v: Value = serde_json::from_str(text).map_err(|e| ParseError(format!("invalid JSON: {e}")))?;
        let obj = match v {
            Value::Object(o) => o,
            _ => return err("document must be a JSON object"),
        };
        let kind_name = match obj.get("kind") {
            Some(Value::String(s)) => s.as_str(),
            Some(_) => return err("`kind` must be a string"),
            None => return err("missing `kind`"),
        };
        let kind = Kind::from_name(kind_name).ok_or_else(|| ParseError(format!("unknown kind `{kind_name}`")))?;
        for key in obj.keys() {
            let known = matches!(key.as_str(), "kind" | "note" | "dimension" | "basis")
                || (kind.has_module() && matches!(key.as_str(), "module_dimension" | "module_basis"))
                || kind.field(key).is_some();
            if !known {
                return err(format!("unknown field `{key}` for kind `{kind}`"));
            }
        }
        let note = match obj.get("note") {
            None => None,
            Some(Value::String(s)) => Some(s.clone()),
            Some(_) => return err("`note` must be a string"),
        };
        let basis = read_basis(&obj, "dimension", "basis", "e")?;
        let module_basis = if kind.has_module() {
            read_basis(&obj, "module_dimension", "module_basis", "v")?
        } else {
            Vec::new()
        };
        let mut doc = StructureDocument::new(kind, basis, module_basis);
        doc.note = note;
        for spec in kind.fields() {
            let Some(raw) = obj.get(spec.name) else { continue };
            let bounds: Vec<usize> = spec.layout.axes().into_iter().map(|a| doc.axis_dim(a)).collect();
            let entries = read_entries(spec.name, raw, &bounds)?;
            doc.set(spec.name, entries);
        }
        Ok(doc)
    }

    /// Canonical text: fixed key order, one entry per line, entries sorted
    /// by index, reduced fractions, zero entries omitted.
    pub fn to_text(&self) -> String {
        let q = |s: &str| serde_json::to_string(s).expect("strings serialize");
        let list = |xs: &[String]| format!("[{}]", xs.iter().map(|s| q(s)).collect::<Vec<_>>().join(", "));
        let mut lines = vec![format!("  \"kind\": {}", q(self.kind.name()))];
        if let Some(n) = &self.note {
            lines.push(format!("  \"note\": {}", q(n)));
        }
        lines.push(format!("  \"dimension\": {}", self.dim()));
        lines.push(format!("  \"basis\": {}", list(&self.basis)));
        if self.kind.has_module() {
            lines.push(format!("  \"module_dimension\": {}", self.module_dim()));
            lines.push(format!("  \"module_basis\": {}", list(&self.module_basis)));
        }
        for spec in self.kind.fields() {
            let entries = &self.fields[spec.name];
            if entries.is_empty() {
                lines.push(format!("  {}: []", q(spec.name)));
                continue;
            }
            let rows: Vec<String> = entries
                .iter()
                .map(|e| {
                    let idx: Vec<String> = e.index.iter().map(usize::to_string).collect();
                    format!("    [{}, {}]", idx.join(", "), q(&e.value.to_string()))
                })
                .collect();
            lines.push(format!("  {}: [\n{}\n  ]", q(spec.name), rows.join(",\n")));
        }
        format!("{{\n{}\n}}\n", lines.join(",\n"))
    }
}

fn read_basis(obj: &serde_json::Map<String, Value>, dim_key: &str, basis_key: &str, prefix: &str) -> Result<Vec<String>, ParseError> {
    let n = match obj.get(dim_key) {
        Some(v) => v.as_u64().ok_or_else(|| ParseError(format!("`{dim_key}` must be a non-negative integer")))? as usize,
        None => return err(format!("missing `{dim_key}`")),
    };
    let labels: Vec<String> = match obj.get(basis_key) {
        None => (1..=n).map(|i| format!("{prefix}{i}")).collect(),
        Some(Value::Array(xs)) => xs
            .iter()
            .map(|x| x.as_str().map(str::to_string).ok_or_else(|| ParseError(format!("`{basis_key}` labels must be strings"))))
            .collect::<Result<_, _>>()?,
        Some(_) => return err(format!("`{basis_key}` must be an array of strings")),
    };
    if labels.len() != n {
        return err(format!("`{basis_key}` has {} labels but `{dim_key}` is {n}", labels.len()));
    }
    if labels.iter().any(|l| l.is_empty()) {
        return err(format!("`{basis_key}` has an empty label"));
    }
    Space::new(labels.iter().cloned()).map_err(|e| ParseError(e.to_string()))?;
    Ok(labels)
}

fn read_entries(field: &str, raw: &Value, bounds: &[usize]) -> Result<Vec<Entry>, ParseError> {
    let Value::Array(rows) = raw else {
        return err(format!("`{field}` must be an array of entries"));
    };
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::with_capacity(rows.len());
    for (pos, row) in rows.iter().enumerate() {
        let at = || format!("`{field}` entry {pos}");
        let Value::Array(items) = row else {
            return err(format!("{} must be an array", at()));
        };
        if items.len() != bounds.len() + 1 {
            return err(format!("{} needs {} indices and a value", at(), bounds.len()));
        }
        let mut index = Vec::with_capacity(bounds.len());
        for (x, &b) in items.iter().zip(bounds) {
            let i = x.as_u64().ok_or_else(|| ParseError(format!("{}: index `{x}` is not a non-negative integer", at())))?;
            if i as usize >= b {
                return err(format!("{}: index {i} out of range for dimension {b}", at()));
            }
            index.push(i as usize);
        }
        let value = match &items[bounds.len()] {
            Value::String(s) => parse_scalar(s).map_err(|_| ParseError(format!("{}: malformed scalar `{s}`", at())))?,
            other => return err(format!("{}: value `{other}` must be a \"p/q\" string", at())),
        };
        if !seen.insert(index.clone()) {
            return err(format!("{}: duplicate entry at {index:?}", at()));
        }
        out.push(Entry { index, value });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use relpoisson::linear::{int, ratio};

    const ZINBIEL: &str = r#"{
  "kind": "zinbiel",
  "dimension": 3,
  "basis": ["e1", "e2", "e3"],
  "product": [
    [0, 1, 2, "1"],
    [0, 0, 2, "1"]
  ],
  "derivation": [
    [0, 0, "1"],
    [0, 1, "1"],
    [1, 1, "2"],
    [2, 2, "3"]
  ]
}"#;

    #[test]
    fn zinbiel_document_round_trips() {
        let doc = StructureDocument::parse(ZINBIEL).unwrap();
        assert_eq!(doc.entries("product").len(), 2);
        // sorted on read
        assert_eq!(doc.entries("product")[0].index, vec![0, 0, 2]);
        let text = doc.to_text();
        assert_eq!(StructureDocument::parse(&text).unwrap(), doc);
        assert_eq!(StructureDocument::parse(&text).unwrap().to_text(), text);
    }

    #[test]
    fn normalization() {
        let text = r#"{"kind": "lie", "dimension": 2, "product": [[1, 0, 1, "-2/2"], [0, 1, 1, "3/3"], [1, 1, 0, "0"]]}"#;
        let doc = StructureDocument::parse(text).unwrap();
        assert_eq!(doc.basis, vec!["e1", "e2"]);
        let es = doc.entries("product");
        assert_eq!(es.len(), 2);
        assert_eq!(es[0], Entry { index: vec![0, 1, 1], value: int(1) });
        assert_eq!(es[1].value, int(-1));
        assert!(doc.to_text().contains("[1, 0, 1, \"-1\"]"));
    }

    #[test]
    fn empty_lists_are_zero() {
        let doc = StructureDocument::parse(r#"{"kind": "rel-poisson", "dimension": 2, "dot": []}"#).unwrap();
        assert!(doc.entries("dot").is_empty() && doc.entries("bracket").is_empty());
        let zero = StructureDocument::parse(r#"{"kind": "bialgebra", "dimension": 0}"#).unwrap();
        assert_eq!(zero.dim(), 0);
    }

    #[test]
    fn fractions_survive() {
        let mut doc = StructureDocument::new(Kind::RMatrix, vec!["a".into(), "b".into()], vec![]);
        doc.set("r", vec![Entry { index: vec![0, 1], value: ratio(-7, 3) }]);
        let text = doc.to_text();
        assert!(text.contains("\"-7/3\""));
        assert_eq!(StructureDocument::parse(&text).unwrap(), doc);
    }

    #[test]
    fn representation_has_module_basis() {
        let text = r#"{"kind": "representation", "dimension": 1, "module_dimension": 2,
            "mu": [[0, 1, 0, "1"]], "alpha": [[1, 1, "1/2"]]}"#;
        let doc = StructureDocument::parse(text).unwrap();
        assert_eq!(doc.module_basis, vec!["v1", "v2"]);
        assert_eq!(StructureDocument::parse(&doc.to_text()).unwrap(), doc);
        let bad = r#"{"kind": "representation", "dimension": 1, "module_dimension": 2, "mu": [[0, 2, 0, "1"]]}"#;
        assert!(StructureDocument::parse(bad).is_err());
    }

    #[test]
    fn rejects_bad_input() {
        let cases = [
            (r#"{"kind": "lie", "dimension": 1, "product": [[0, 0, 0, "1/0"]]}"#, "malformed scalar"),
            (r#"{"kind": "lie", "dimension": 1, "product": [[0, 0, 0, "x"]]}"#, "malformed scalar"),
            (r#"{"kind": "lie", "dimension": 1, "product": [[0, 0, 0, 1.5]]}"#, "string"),
            (r#"{"kind": "lie", "dimension": 1, "product": [[0, 1, 0, "1"]]}"#, "out of range"),
            (r#"{"kind": "lie", "dimension": 1, "product": [[0, 0, 0, "1"], [0, 0, 0, "2"]]}"#, "duplicate"),
            (r#"{"kind": "jordan", "dimension": 1}"#, "unknown kind"),
            (r#"{"kind": "lie", "dimension": 1, "dot": []}"#, "unknown field"),
            (r#"{"kind": "lie", "dimension": 2, "basis": ["x", "x"]}"#, "duplicate basis"),
            (r#"{"kind": "lie", "dimension": 2, "basis": ["x"]}"#, "labels"),
            (r#"{"kind": "lie"}"#, "missing `dimension`"),
            (r#"{"kind": "lie", "dimension": 1, "product": [[0, 0, "1"]]}"#, "indices"),
            ("[1, 2", "invalid JSON"),
        ];
        for (text, needle) in cases {
            let e = StructureDocument::parse(text).unwrap_err();
            assert!(e.0.contains(needle), "{text}: {e}");
        }
    }
}
