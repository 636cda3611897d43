//! Small named structures of dimension at most 3, and families built from
//! them. Every entry here is verified by the unit tests below.

use crate::algebra::{bracket_from_derivation_unchecked, derivation_basis, BilinearOp, RelPoissonAlgebra};
use crate::jacobi::extend_jacobi_unchecked;
use crate::linear::{int, Matrix, Space};
use crate::pre_poisson::RelPrePoissonAlgebra;
use crate::rep::{adjoint_rep, RepData};
use crate::yang_baxter::RMatrix;

type Named<T> = Vec<(String, T)>;

fn op(n: usize, entries: &[(usize, usize, usize, i64)]) -> BilinearOp {
    BilinearOp::from_int_entries(&Space::standard("e", n), entries)
}

/// Commutative associative products, listed with both orders of every
/// off-diagonal product.
pub fn comm_assoc() -> Named<BilinearOp> {
    let sym = |n: usize, es: &[(usize, usize, usize, i64)]| {
        let mut all: Vec<_> = es.to_vec();
        all.extend(es.iter().filter(|e| e.0 != e.1).map(|&(i, j, k, c)| (j, i, k, c)));
        op(n, &all)
    };
    vec![
        ("zero-1", op(1, &[])),
        ("field", op(1, &[(0, 0, 0, 1)])),
        ("zero-2", op(2, &[])),
        ("nil-2", op(2, &[(0, 0, 1, 1)])),
        ("dual-numbers", sym(2, &[(0, 0, 0, 1), (0, 1, 1, 1)])),
        ("split-2", op(2, &[(0, 0, 0, 1), (1, 1, 1, 1)])),
        ("field-plus-zero", op(2, &[(0, 0, 0, 1)])),
        ("nil-3", sym(3, &[(0, 0, 1, 1), (0, 1, 2, 1)])),
        ("nil-square-3", op(3, &[(0, 0, 2, 1), (1, 1, 2, 1)])),
        ("subadjacent-3", sym(3, &[(0, 0, 2, 2), (0, 1, 2, 1)])),
        ("truncated-poly-3", sym(3, &[(0, 0, 0, 1), (0, 1, 1, 1), (0, 2, 2, 1), (1, 1, 2, 1)])),
        ("split-3", op(3, &[(0, 0, 0, 1), (1, 1, 1, 1), (2, 2, 2, 1)])),
    ]
    .into_iter()
    .map(|(n, o)| (n.to_string(), o))
    .collect()
}

/// Lie brackets.
pub fn lie() -> Named<BilinearOp> {
    let anti = |n: usize, es: &[(usize, usize, usize, i64)]| {
        let mut all: Vec<_> = es.to_vec();
        all.extend(es.iter().map(|&(i, j, k, c)| (j, i, k, -c)));
        op(n, &all)
    };
    vec![
        ("abelian-1", op(1, &[])),
        ("abelian-2", op(2, &[])),
        ("affine-2", anti(2, &[(0, 1, 1, 1)])),
        ("abelian-3", op(3, &[])),
        ("heisenberg", anti(3, &[(0, 1, 2, 1)])),
        ("sl2", anti(3, &[(0, 1, 1, 2), (0, 2, 2, -2), (1, 2, 0, 1)])),
    ]
    .into_iter()
    .map(|(n, o)| (n.to_string(), o))
    .collect()
}

/// Zinbiel products, including truncated shuffle algebras
/// `x_i ⋆ x_j = C(i+j-1, i) x_{i+j}`.
pub fn zinbiel() -> Named<BilinearOp> {
    vec![
        ("zero-1", op(1, &[])),
        ("zero-2", op(2, &[])),
        ("shuffle-2", op(2, &[(0, 0, 1, 1)])),
        ("zero-3", op(3, &[])),
        ("shuffle-3", op(3, &[(0, 0, 1, 1), (0, 1, 2, 2), (1, 0, 2, 1)])),
        ("two-generator-3", op(3, &[(0, 0, 2, 1), (0, 1, 2, 1)])),
    ]
    .into_iter()
    .map(|(n, o)| (n.to_string(), o))
    .collect()
}

/// The basis of the derivation space, followed by the sum of its elements
/// and the zero map.
fn derivation_choices(ops: &[&BilinearOp]) -> Vec<Matrix> {
    let n = ops[0].dim();
    let basis = derivation_basis(ops);
    let mut out = basis.clone();
    if basis.len() > 1 {
        out.push(basis.iter().fold(Matrix::zeros(n, n), |acc, b| acc.add(b)));
    }
    out.push(Matrix::zeros(n, n));
    out
}

/// Relative Poisson algebras: every commutative associative product with each
/// derivation choice and the bracket `x·P(y) - P(x)·y`, and every Lie bracket
/// with the zero product and each derivation choice.
pub fn rel_poisson() -> Named<RelPoissonAlgebra> {
    let mut out = Vec::new();
    for (name, dot) in comm_assoc() {
        for (k, p) in derivation_choices(&[&dot]).into_iter().enumerate() {
            let br = bracket_from_derivation_unchecked(&dot, &p);
            out.push((format!("{name}/d{k}"), RelPoissonAlgebra::new(dot.clone(), br, p).unwrap()));
        }
    }
    for (name, br) in lie() {
        let dot = BilinearOp::zero(br.space());
        for (k, p) in derivation_choices(&[&br]).into_iter().enumerate() {
            out.push((format!("{name}/d{k}"), RelPoissonAlgebra::new(dot.clone(), br.clone(), p).unwrap()));
        }
    }
    out
}

/// Jacobi algebras of dimension at most 3, as unital extensions.
pub fn jacobi() -> Named<RelPoissonAlgebra> {
    rel_poisson()
        .into_iter()
        .filter(|(_, a)| a.dim() <= 2)
        .map(|(n, a)| (format!("extended {n}"), extend_jacobi_unchecked(&a)))
        .collect()
}

/// Relative pre-Poisson algebras `(⋆, x⋆P(y) - P(x)⋆y, P)` for every Zinbiel
/// product and derivation choice.
pub fn rel_pre_poisson() -> Named<RelPrePoissonAlgebra> {
    let mut out = Vec::new();
    for (name, star) in zinbiel() {
        for (k, p) in derivation_choices(&[&star]).into_iter().enumerate() {
            let circ = bracket_from_derivation_unchecked(&star, &p);
            out.push((format!("{name}/d{k}"), RelPrePoissonAlgebra::new(star.clone(), circ, p).unwrap()));
        }
    }
    out
}

/// `e1⋆e1 = e3`, `e1⋆e2 = e3`, `P(e1) = e1+e2`, `P(e2) = 2e2`, `P(e3) = 3e3`.
pub fn three_dim_pre_poisson() -> RelPrePoissonAlgebra {
    let star = op(3, &[(0, 0, 2, 1), (0, 1, 2, 1)]);
    let p = Matrix::from_ints(&[&[1, 0, 0], &[1, 2, 0], &[0, 0, 3]]);
    let circ = bracket_from_derivation_unchecked(&star, &p);
    RelPrePoissonAlgebra::new(star, circ, p).unwrap()
}

/// Adjoint representations of the relative Poisson algebras.
pub fn representations() -> Named<RepData> {
    rel_poisson().into_iter().map(|(n, a)| (format!("adjoint of {n}"), adjoint_rep(&a))).collect()
}

/// A candidate for the coboundary construction: an algebra, a map `Q` and a
/// 2-tensor `r`, with no compatibility assumed.
#[derive(Clone, Debug)]
pub struct CoboundaryCandidate {
    pub name: String,
    pub algebra: RelPoissonAlgebra,
    pub q: Matrix,
    pub r: RMatrix,
}

/// 2-tensors on a space of dimension `n`: every antisymmetric one with
/// coefficients in {-1, 0, 1} above the diagonal, plus `e1⊗e1` and, if
/// `n > 1`, `e1⊗e2`.
pub fn small_tensors(n: usize) -> Vec<Matrix> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let mut out = Vec::new();
    for code in 0..3usize.pow(pairs.len() as u32) {
        let mut m = Matrix::zeros(n, n);
        let mut c = code;
        for &(i, j) in &pairs {
            let v = int(c as i64 % 3 - 1);
            c /= 3;
            m[(i, j)] = v.clone();
            m[(j, i)] = -v;
        }
        out.push(m);
    }
    let mut diag = Matrix::zeros(n, n);
    diag[(0, 0)] = int(1);
    out.push(diag);
    if n > 1 {
        let mut off = Matrix::zeros(n, n);
        off[(0, 1)] = int(1);
        out.push(off);
    }
    out
}

/// `(A, Q, r)` over a spread of relative Poisson and Jacobi algebras, with
/// `Q ∈ {-P, 0}` and `r` from [`small_tensors`]. Every `stride`-th algebra is
/// used, to bound the size.
pub fn coboundary_candidates(stride: usize) -> Vec<CoboundaryCandidate> {
    let algebras: Vec<_> = rel_poisson().into_iter().chain(jacobi()).step_by(stride.max(1)).collect();
    let mut out = Vec::new();
    for (name, a) in algebras {
        let n = a.dim();
        for (qn, q) in [("-P", a.p().neg()), ("0", Matrix::zeros(n, n))] {
            for (k, r) in small_tensors(n).into_iter().enumerate() {
                out.push(CoboundaryCandidate {
                    name: format!("{name}, Q={qn}, r{k}"),
                    algebra: a.clone(),
                    q: q.clone(),
                    r: RMatrix::new(a.space().clone(), r).unwrap(),
                });
            }
        }
    }
    out
}
