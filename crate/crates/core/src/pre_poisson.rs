//! Zinbiel, pre-Lie and relative pre-Poisson algebras, and the relative
//! Poisson structures and r-matrices they produce.

use crate::algebra::{bracket_from_derivation_unchecked, check_derivation, BilinearOp, RelPoissonAlgebra};
use crate::error::{require, Error};
use crate::linear::{add_vec, axpy, basis_vec, int, sub_vec, Matrix};
use crate::rep::{CompatibleStructure, RepData};
use crate::report::AxiomReport;
use crate::yang_baxter::{o_operator_to_rmatrix, OOperatorRMatrix};

/// Checks `x⋆(y⋆z) = (y⋆x)⋆z + (x⋆y)⋆z` on basis triples.
pub fn check_zinbiel(star: &BilinearOp) -> AxiomReport {
    let n = star.dim();
    let mut r = AxiomReport::new();
    for i in 0..n {
        let x = basis_vec(n, i);
        for j in 0..n {
            let sym = add_vec(star.basis_product(j, i), star.basis_product(i, j));
            for k in 0..n {
                let z = basis_vec(n, k);
                let lhs = star.apply(&x, star.basis_product(j, k));
                let rhs = star.apply(&sym, &z);
                r.check("zinbiel", &[i, j, k], sub_vec(&lhs, &rhs));
            }
        }
    }
    r
}

/// Checks `(x∘y)∘z - x∘(y∘z) = (y∘x)∘z - y∘(x∘z)` on basis triples.
pub fn check_prelie(circ: &BilinearOp) -> AxiomReport {
    let n = circ.dim();
    let mut r = AxiomReport::new();
    for i in 0..n {
        let x = basis_vec(n, i);
        for j in 0..n {
            let y = basis_vec(n, j);
            for k in 0..n {
                let z = basis_vec(n, k);
                let mut d = circ.apply(circ.basis_product(i, j), &z);
                axpy(&mut d, &int(-1), &circ.apply(&x, circ.basis_product(j, k)));
                axpy(&mut d, &int(-1), &circ.apply(circ.basis_product(j, i), &z));
                axpy(&mut d, &int(1), &circ.apply(&y, circ.basis_product(i, k)));
                r.check("pre-lie", &[i, j, k], d);
            }
        }
    }
    r
}

/// A candidate relative pre-Poisson algebra `(A, ⋆, ∘, P)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelPrePoissonAlgebra {
    star: BilinearOp,
    circ: BilinearOp,
    p: Matrix,
}

impl RelPrePoissonAlgebra {
    pub fn new(star: BilinearOp, circ: BilinearOp, p: Matrix) -> Result<Self, Error> {
        let n = star.dim();
        if circ.space() != star.space() {
            return Err(Error::Shape("both products must live on the same space".into()));
        }
        if p.rows() != n || p.cols() != n {
            return Err(Error::Shape(format!("derivation must be {n}x{n}")));
        }
        Ok(RelPrePoissonAlgebra { star, circ, p })
    }

    pub fn star(&self) -> &BilinearOp {
        &self.star
    }

    pub fn circ(&self) -> &BilinearOp {
        &self.circ
    }

    pub fn p(&self) -> &Matrix {
        &self.p
    }

    pub fn dim(&self) -> usize {
        self.star.dim()
    }
}

/// Full check: Zinbiel, pre-Lie, `P` a derivation of both, and
///
/// * `gppa3`: `(x⋆y + y⋆x)∘z - x⋆(y∘z) - y⋆(x∘z) + (x⋆y + y⋆x)⋆P(z) = 0`
/// * `gppa4`: `y∘(x⋆z) - x⋆(y∘z) + (x∘y - y∘x)⋆z - (x⋆P(y) + P(y)⋆x)⋆z = 0`
pub fn check_rel_pre_poisson(a: &RelPrePoissonAlgebra) -> AxiomReport {
    let (s, c) = (&a.star, &a.circ);
    let n = a.dim();
    let mut r = check_zinbiel(s);
    r.merge(check_prelie(c));
    r.merge(check_derivation(s, &a.p).prefixed("star"));
    r.merge(check_derivation(c, &a.p).prefixed("circ"));
    for i in 0..n {
        let x = basis_vec(n, i);
        for j in 0..n {
            let y = basis_vec(n, j);
            let py = a.p.column(j);
            let sym = add_vec(s.basis_product(i, j), s.basis_product(j, i));
            let comm = sub_vec(c.basis_product(i, j), c.basis_product(j, i));
            let xpy = add_vec(&s.apply(&x, &py), &s.apply(&py, &x));
            for k in 0..n {
                let z = basis_vec(n, k);
                let pz = a.p.column(k);
                let mut d = c.apply(&sym, &z);
                axpy(&mut d, &int(-1), &s.apply(&x, c.basis_product(j, k)));
                axpy(&mut d, &int(-1), &s.apply(&y, c.basis_product(i, k)));
                axpy(&mut d, &int(1), &s.apply(&sym, &pz));
                r.check("gppa3", &[i, j, k], d);
                let mut d = c.apply(&y, s.basis_product(i, k));
                axpy(&mut d, &int(-1), &s.apply(&x, c.basis_product(j, k)));
                axpy(&mut d, &int(1), &s.apply(&comm, &z));
                axpy(&mut d, &int(-1), &s.apply(&xpy, &z));
                r.check("gppa4", &[i, j, k], d);
            }
        }
    }
    r
}

/// `x∘y = x⋆P(y) - P(x)⋆y`. Requires `⋆` Zinbiel and `P` a derivation of it.
pub fn circ_from_derivation(star: &BilinearOp, p: &Matrix) -> Result<BilinearOp, Error> {
    require("Zinbiel", check_zinbiel(star))?;
    require("derivation", check_derivation(star, p))?;
    Ok(bracket_from_derivation_unchecked(star, p))
}

/// The sub-adjacent relative Poisson algebra `x·y = x⋆y + y⋆x`,
/// `[x,y] = x∘y - y∘x` with derivation `P`, together with its representation
/// `(L_⋆, L_∘, P, A)`.
pub fn subadjacent(a: &RelPrePoissonAlgebra) -> Result<(RelPoissonAlgebra, RepData), Error> {
    require("relative pre-Poisson algebra", check_rel_pre_poisson(a))?;
    Ok(subadjacent_unchecked(a))
}

pub fn subadjacent_unchecked(a: &RelPrePoissonAlgebra) -> (RelPoissonAlgebra, RepData) {
    let dot = a.star.add(&a.star.opposite());
    let bracket = a.circ.add(&a.circ.opposite().scale(&int(-1)));
    let alg = RelPoissonAlgebra::new(dot, bracket, a.p.clone()).expect("shapes agree");
    let rep = RepData {
        compat: CompatibleStructure {
            algebra: alg.clone(),
            module: alg.space().clone(),
            mu: a.star.left_all(),
            rho: a.circ.left_all(),
        },
        alpha: a.p.clone(),
    };
    (alg, rep)
}

/// `r = Σ e_i ⊗ e_i* - e_i* ⊗ e_i` in `A ⋉_{-L_⋆*, L_∘*} A*` with derivation
/// `P - P*`, solving the `(-P + P*)`-relative Poisson Yang-Baxter equation.
pub fn prepoisson_to_rmatrix(a: &RelPrePoissonAlgebra) -> Result<OOperatorRMatrix, Error> {
    let (alg, rep) = subadjacent(a)?;
    let n = alg.dim();
    let minus_p = a.p.neg();
    o_operator_to_rmatrix(&rep, &minus_p, &minus_p, &Matrix::identity(n))
}

/// The sub-adjacent product alone; convenient for unit and Jacobi checks.
pub fn symmetrized(star: &BilinearOp) -> BilinearOp {
    star.add(&star.opposite())
}
