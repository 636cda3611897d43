//! Human-readable tables of a document's entries.

use num_traits::{One, Signed};
use relpoisson::Scalar;

use crate::document::{Entry, Kind, Layout, StructureDocument};

/// `-E4+2E1*+(1/2)E2*`; `0` for no terms.
pub fn combination<'a>(terms: impl IntoIterator<Item = (&'a Scalar, String)>) -> String {
    let mut out = String::new();
    for (c, label) in terms {
        let neg = c.is_negative();
        if neg {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        let a = c.abs();
        if !a.is_one() {
            if a.is_integer() {
                out.push_str(&a.to_string());
            } else {
                out.push_str(&format!("({a})"));
            }
        }
        out.push_str(&label);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Consecutive entries sharing all but the last index.
fn groups(entries: &[Entry], key_len: usize) -> Vec<(&[usize], Vec<&Entry>)> {
    let mut out: Vec<(&[usize], Vec<&Entry>)> = Vec::new();
    for e in entries {
        let key = &e.index[..key_len];
        match out.last_mut() {
            Some((k, es)) if *k == key => es.push(e),
            _ => out.push((key, vec![e])),
        }
    }
    out
}

fn product_symbol(kind: Kind, field: &str) -> &'static str {
    match (kind, field) {
        (Kind::CommAssoc, _) | (_, "dot") => "·",
        (Kind::Zinbiel, _) | (_, "star") => "⋆",
        (Kind::PreLie, _) | (_, "circ") => "∘",
        _ => "bracket",
    }
}

fn map_symbol(field: &str) -> &'static str {
    match field {
        "derivation" => "P",
        "q" => "Q",
        "alpha" => "α",
        "operator" => "T",
        "mu" => "μ",
        "rho" => "ρ",
        "coproduct" => "Δ",
        "cobracket" => "δ",
        _ => "f",
    }
}

/// One line per nonzero value, e.g. `e1·e2 = e3`, `P(e1) = e1+e2`,
/// `Δ(E6) = -2E4⊗E4-E4⊗E5-E5⊗E4`.
pub fn field_lines(doc: &StructureDocument, field: &str) -> Vec<String> {
    let spec = doc.kind.field(field).expect("field of the kind");
    let a = &doc.basis;
    let v = &doc.module_basis;
    let es = doc.entries(field);
    match spec.layout {
        Layout::Product => groups(es, 2)
            .into_iter()
            .map(|(k, g)| {
                let rhs = combination(g.iter().map(|e| (&e.value, a[e.index[2]].clone())));
                match product_symbol(doc.kind, field) {
                    "bracket" => format!("[{},{}] = {rhs}", a[k[0]], a[k[1]]),
                    s => format!("{}{s}{} = {rhs}", a[k[0]], a[k[1]]),
                }
            })
            .collect(),
        Layout::Map(from, to) => {
            let (from, to) = (pick(from, a, v), pick(to, a, v));
            groups(es, 1)
                .into_iter()
                .map(|(k, g)| {
                    let rhs = combination(g.iter().map(|e| (&e.value, to[e.index[1]].clone())));
                    format!("{}({}) = {rhs}", map_symbol(field), from[k[0]])
                })
                .collect()
        }
        Layout::Actions => groups(es, 2)
            .into_iter()
            .map(|(k, g)| {
                let rhs = combination(g.iter().map(|e| (&e.value, v[e.index[2]].clone())));
                format!("{}({}){} = {rhs}", map_symbol(field), a[k[0]], v[k[1]])
            })
            .collect(),
        Layout::Coproduct => groups(es, 1)
            .into_iter()
            .map(|(k, g)| {
                let rhs = combination(g.iter().map(|e| (&e.value, format!("{}⊗{}", a[e.index[1]], a[e.index[2]]))));
                format!("{}({}) = {rhs}", map_symbol(field), a[k[0]])
            })
            .collect(),
        Layout::Tensor if field == "gram" => {
            es.iter().map(|e| format!("B({},{}) = {}", a[e.index[0]], a[e.index[1]], e.value)).collect()
        }
        Layout::Tensor => {
            let sum = combination(es.iter().map(|e| (&e.value, format!("{}⊗{}", a[e.index[0]], a[e.index[1]]))));
            vec![format!("{field} = {sum}")]
        }
    }
}

fn pick<'a>(axis: crate::document::Axis, a: &'a [String], v: &'a [String]) -> &'a [String] {
    match axis {
        crate::document::Axis::A => a,
        crate::document::Axis::V => v,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use relpoisson::linear::{int, ratio};

    #[test]
    fn combinations() {
        let (m1, two, one, half) = (int(-1), int(2), int(1), ratio(-1, 2));
        let terms = vec![(&m1, "E4".to_string()), (&two, "E1*".to_string()), (&one, "E2*".to_string())];
        assert_eq!(combination(terms), "-E4+2E1*+E2*");
        assert_eq!(combination(vec![(&half, "x".to_string())]), "-(1/2)x");
        assert_eq!(combination(Vec::<(&Scalar, String)>::new()), "0");
    }

    #[test]
    fn tables() {
        let text = r#"{"kind": "bialgebra", "dimension": 2, "basis": ["x", "y"],
            "dot": [[0, 0, 1, "2"]], "bracket": [[0, 1, 1, "1"], [1, 0, 1, "-1"]],
            "derivation": [[0, 0, "1"], [0, 1, "1"]], "coproduct": [[1, 0, 0, "-2"], [1, 0, 1, "-1"]]}"#;
        let doc = StructureDocument::parse(text).unwrap();
        assert_eq!(field_lines(&doc, "dot"), vec!["x·x = 2y"]);
        assert_eq!(field_lines(&doc, "bracket"), vec!["[x,y] = y", "[y,x] = -y"]);
        assert_eq!(field_lines(&doc, "derivation"), vec!["P(x) = x+y"]);
        assert_eq!(field_lines(&doc, "coproduct"), vec!["Δ(y) = -2x⊗x-x⊗y"]);
        assert!(field_lines(&doc, "cobracket").is_empty());
    }
}
