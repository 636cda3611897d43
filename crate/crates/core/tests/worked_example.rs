//! The 3-dimensional relative pre-Poisson algebra `e1⋆e1 = e1⋆e2 = e3` with
//! `P = [[1,0,0],[1,2,0],[0,0,3]]`, pushed through the whole construction and
//! compared entry by entry with hand-written tables.

use relpoisson::algebra::{find_unit, BilinearOp};
use relpoisson::coalgebra::Comultiplication;
use relpoisson::jacobi::frobenius_jacobi_pipeline;
use relpoisson::linear::{int, Matrix, Scalar, Space};
use relpoisson::pre_poisson::{circ_from_derivation, RelPrePoissonAlgebra};

fn input() -> RelPrePoissonAlgebra {
    let star = BilinearOp::from_int_entries(&Space::standard("e", 3), &[(0, 0, 2, 1), (0, 1, 2, 1)]);
    let p = Matrix::from_ints(&[&[1, 0, 0], &[1, 2, 0], &[0, 0, 3]]);
    let circ = circ_from_derivation(&star, &p).unwrap();
    RelPrePoissonAlgebra::new(star, circ, p).unwrap()
}

/// Parses `-E4+2E1*+E2*` into a coefficient vector over `space`.
fn combo(space: &Space, s: &str) -> Vec<Scalar> {
    let mut v = vec![int(0); space.dim()];
    let s = s.replace(' ', "");
    let mut terms = Vec::new();
    let mut cur = String::new();
    for ch in s.chars() {
        if (ch == '+' || ch == '-') && !cur.is_empty() {
            terms.push(std::mem::take(&mut cur));
        }
        cur.push(ch);
    }
    terms.push(cur);
    for t in terms {
        let (sign, body) = match t.strip_prefix('-') {
            Some(b) => (-1, b),
            None => (1, t.trim_start_matches('+')),
        };
        let split = body.find(|c: char| !c.is_ascii_digit()).unwrap();
        let coeff: i64 = if split == 0 { 1 } else { body[..split].parse().unwrap() };
        let k = space.index_of(&body[split..]).unwrap_or_else(|| panic!("unknown label {}", &body[split..]));
        v[k] += int(sign * coeff);
    }
    v
}

type Rows = &'static [(&'static str, &'static str, &'static str)];

/// Builds the operator with the listed products, completed by the given
/// symmetry (`1` commutative, `-1` antisymmetric), with `unit` acting as the
/// identity when present.
fn table(space: &Space, sym: i64, unit: Option<&str>, lists: &[Rows]) -> BilinearOp {
    let mut op = BilinearOp::zero(space);
    let mut set = |x: &str, y: &str, v: Vec<Scalar>| {
        let (i, j) = (space.index_of(x).unwrap(), space.index_of(y).unwrap());
        for (k, c) in v.iter().enumerate() {
            op.set(i, j, k, c.clone());
            op.set(j, i, k, c * int(sym));
        }
    };
    if let Some(u) = unit {
        for l in space.labels() {
            set(u, l, combo(space, l));
        }
    }
    for (x, y, val) in lists.iter().flat_map(|l| l.iter()) {
        set(x, y, combo(space, val));
    }
    op
}

const J_DOT: Rows = &[("E1", "E1", "2E3"), ("E1", "E2", "E3"), ("E1", "E6", "E4+E5")];
const J_BRACKET: Rows = &[
    ("E", "E1", "E1+E2"),
    ("E", "E2", "2E2"),
    ("E", "E3", "3E3"),
    ("E", "E4", "-E4"),
    ("E", "E5", "-E4-2E5"),
    ("E", "E6", "-3E6"),
    ("E1", "E2", "E3"),
    ("E1", "E6", "-E4-E5"),
];
const DUAL_DOT: Rows =
    &[("E3*", "E4*", "-E1*-E2*"), ("E4*", "E4*", "-2E6*"), ("E4*", "E5*", "-E6*")];
const DUAL_BRACKET: Rows = &[("E3*", "E4*", "-E1*-E2*"), ("E4*", "E5*", "-E6*")];
const MIXED_DOT: Rows = &[
    ("E1", "E1*", "E*"),
    ("E1", "E3*", "-E4+2E1*+E2*"),
    ("E1", "E4*", "-E3+E6*"),
    ("E1", "E5*", "E6*"),
    ("E2", "E2*", "E*"),
    ("E2", "E3*", "-E4+E1*"),
    ("E2", "E4*", "-E3"),
    ("E3", "E3*", "E*"),
    ("E4", "E4*", "E*"),
    ("E5", "E5*", "E*"),
    ("E6", "E4*", "-2E4-E5+E1*"),
    ("E6", "E5*", "-E4+E1*"),
    ("E6", "E6*", "E*"),
];
const MIXED_BRACKET: Rows = &[
    ("E", "E1*", "-E1*"),
    ("E", "E2*", "-E1*-2E2*"),
    ("E", "E3*", "-3E3*"),
    ("E", "E4*", "E4*+E5*"),
    ("E", "E5*", "2E5*"),
    ("E", "E6*", "3E6*"),
    ("E1", "E1*", "E*"),
    ("E1", "E2*", "E*"),
    ("E1", "E3*", "-E4-E2*"),
    ("E1", "E4*", "E3+E6*"),
    ("E1", "E5*", "E6*"),
    ("E2", "E2*", "2E*"),
    ("E2", "E3*", "-E4+E1*"),
    ("E2", "E4*", "E3"),
    ("E3", "E3*", "3E*"),
    ("E4", "E4*", "-E*"),
    ("E5", "E4*", "-E*"),
    ("E5", "E5*", "-2E*"),
    ("E6", "E4*", "-E5-E1*"),
    ("E6", "E5*", "E4-E1*"),
    ("E6", "E6*", "-3E*"),
];

#[test]
fn seven_dimensional_jacobi_algebra() {
    let out = frobenius_jacobi_pipeline(&input()).unwrap();
    let j = &out.jacobi;
    let s = j.space().clone();
    assert_eq!(s.labels(), &["E", "E1", "E2", "E3", "E4", "E5", "E6"]);
    assert_eq!(j.dot(), &table(&s, 1, Some("E"), &[J_DOT]));
    assert_eq!(j.bracket(), &table(&s, -1, None, &[J_BRACKET]));
    assert_eq!(find_unit(j.dot()), Some(combo(&s, "E")));
    // derivation and Q are ±ad(E)
    assert_eq!(j.p(), &j.bracket().left(0));
    assert_eq!(out.q, j.bracket().left(0).neg());
    let r = out.r.coeffs();
    for (a, b) in [(1, 4), (2, 5), (3, 6)] {
        assert_eq!(r[(a, b)], int(1));
        assert_eq!(r[(b, a)], int(-1));
    }
    assert_eq!(r.as_slice().iter().filter(|x| **x != int(0)).count(), 6);
}

fn comult(space: &Space, images: &[(&str, &[(&str, &str, i64)])]) -> Comultiplication {
    let mut entries = Vec::new();
    for (k, terms) in images {
        let k = space.index_of(k).unwrap();
        for (a, b, c) in terms.iter() {
            entries.push((space.index_of(a).unwrap(), space.index_of(b).unwrap(), k, int(*c)));
        }
    }
    Comultiplication::from_entries(space, &entries).unwrap()
}

#[test]
fn coboundary_comultiplications() {
    let out = frobenius_jacobi_pipeline(&input()).unwrap();
    let s = out.jacobi.space().clone();
    let d12: &[(&str, &str, i64)] = &[("E3", "E4", -1), ("E4", "E3", -1)];
    let coproduct = comult(
        &s,
        &[("E1", d12), ("E2", d12), ("E6", &[("E4", "E4", -2), ("E4", "E5", -1), ("E5", "E4", -1)])],
    );
    let b12: &[(&str, &str, i64)] = &[("E3", "E4", -1), ("E4", "E3", 1)];
    let cobracket = comult(&s, &[("E1", b12), ("E2", b12), ("E6", &[("E4", "E5", -1), ("E5", "E4", 1)])]);
    assert_eq!(out.bialgebra.coproduct, coproduct);
    assert_eq!(out.bialgebra.cobracket, cobracket);
}

#[test]
fn dual_algebra() {
    let out = frobenius_jacobi_pipeline(&input()).unwrap();
    let s = out.dual.space().clone();
    assert_eq!(s.label(0), "E*");
    assert_eq!(out.dual.dot(), &table(&s, 1, None, &[DUAL_DOT]));
    assert_eq!(out.dual.bracket(), &table(&s, -1, None, &[DUAL_BRACKET]));
}

#[test]
fn fourteen_dimensional_double() {
    let out = frobenius_jacobi_pipeline(&input()).unwrap();
    let d = &out.frobenius.algebra;
    let s = d.space().clone();
    assert_eq!(s.dim(), 14);

    assert_eq!(d.dot(), &table(&s, 1, Some("E"), &[J_DOT, DUAL_DOT, MIXED_DOT]));
    assert_eq!(d.bracket(), &table(&s, -1, None, &[J_BRACKET, DUAL_BRACKET, MIXED_BRACKET]));
    assert_eq!(find_unit(d.dot()), Some(combo(&s, "E")));
    let gram = Matrix::from_fn(14, 14, |a, b| int((a.abs_diff(b) == 7) as i64));
    assert_eq!(out.frobenius.form.gram, gram);
    for st in &out.stages {
        assert!(st.report.ok(), "{}: {}", st.name, st.report);
    }
}
