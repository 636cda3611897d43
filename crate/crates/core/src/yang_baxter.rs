//! Yang-Baxter type equations for `r ∈ A ⊗ A`, coboundary bialgebras, and
//! r-matrices built from weak O-operators.

use num_traits::Zero;

use crate::algebra::{BilinearOp, RelPoissonAlgebra};
use crate::coalgebra::{BialgebraData, Comultiplication};
use crate::error::{require, Error};
use crate::linear::{
    add_vec, apply_left, apply_right, axpy, basis_vec, int, sub_vec, Array3, Matrix, Scalar, Space, Tensor2,
};
use crate::rep::{
    check_dual_conditions, check_dually_represents, check_representation, dual_rep, semidirect_product_unchecked,
    CompatibleStructure, RepData,
};
use crate::report::AxiomReport;

/// An element `r = Σ r[i][j] e_i ⊗ e_j` of `A ⊗ A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RMatrix {
    space: Space,
    coeffs: Matrix,
}

impl RMatrix {
    pub fn new(space: Space, coeffs: Matrix) -> Result<Self, Error> {
        let n = space.dim();
        if coeffs.rows() != n || coeffs.cols() != n {
            return Err(Error::Shape(format!("r needs a {n}x{n} coefficient matrix")));
        }
        Ok(RMatrix { space, coeffs })
    }

    pub fn from_tensor(t: &Tensor2) -> Result<Self, Error> {
        if t.left != t.right {
            return Err(Error::Shape("r must lie in A ⊗ A".into()));
        }
        RMatrix::new(t.left.clone(), t.coeffs.clone())
    }

    pub fn to_tensor(&self) -> Tensor2 {
        Tensor2 {
            left: self.space.clone(),
            right: self.space.clone(),
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn coeffs(&self) -> &Matrix {
        &self.coeffs
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.coeffs == self.coeffs.transpose().neg()
    }

    /// `τ(r)`
    pub fn flipped(&self) -> RMatrix {
        RMatrix {
            space: self.space.clone(),
            coeffs: self.coeffs.transpose(),
        }
    }

    pub fn relabeled(&self, space: &Space) -> Result<RMatrix, Error> {
        RMatrix::new(space.clone(), self.coeffs.clone())
    }
}

/// `r₁₂ ∗ r₁₃`, `r₁₂ ∗ r₂₃`, `r₁₃ ∗ r₂₃` for `r = Σ a_i ⊗ b_i`:
/// `Σ a_i∗a_j ⊗ b_i ⊗ b_j`, `Σ a_i ⊗ b_i∗a_j ⊗ b_j`, `Σ a_i ⊗ a_j ⊗ b_i∗b_j`.
fn yb_terms(r: &Matrix, op: &BilinearOp) -> [Array3; 3] {
    let n = op.dim();
    let nz: Vec<(usize, usize, &Scalar)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .map(|(i, j)| (i, j, &r[(i, j)]))
        .filter(|(_, _, v)| !v.is_zero())
        .collect();
    let mut t = [Array3::cube(n), Array3::cube(n), Array3::cube(n)];
    for &(i, j, x) in &nz {
        for &(k, l, y) in &nz {
            let s = x * y;
            for (c, v) in op.basis_product(i, k).iter().enumerate() {
                if !v.is_zero() {
                    *t[0].get_mut(c, j, l) += &s * v;
                }
            }
            for (c, v) in op.basis_product(j, k).iter().enumerate() {
                if !v.is_zero() {
                    *t[1].get_mut(i, c, l) += &s * v;
                }
            }
            for (c, v) in op.basis_product(j, l).iter().enumerate() {
                if !v.is_zero() {
                    *t[2].get_mut(i, k, c) += &s * v;
                }
            }
        }
    }
    t
}

/// `A(r) = r₁₂·r₁₃ - r₁₂·r₂₃ + r₁₃·r₂₃`
pub fn aybe_tensor(r: &RMatrix, dot: &BilinearOp) -> Array3 {
    let [a, b, c] = yb_terms(&r.coeffs, dot);
    a.sub(&b).add(&c)
}

/// `C(r) = [r₁₂, r₁₃] + [r₁₂, r₂₃] + [r₁₃, r₂₃]`
pub fn cybe_tensor(r: &RMatrix, bracket: &BilinearOp) -> Array3 {
    let [a, b, c] = yb_terms(&r.coeffs, bracket);
    a.add(&b).add(&c)
}

fn flat(m: &Matrix) -> Vec<Scalar> {
    m.as_slice().to_vec()
}

fn flat3(t: &Array3) -> Vec<Scalar> {
    t.as_slice().to_vec()
}

fn shape_check(a: &RelPoissonAlgebra, q: &Matrix, r: &RMatrix) -> Result<(), Error> {
    let n = a.dim();
    if r.space.dim() != n || q.rows() != n || q.cols() != n {
        return Err(Error::Shape("r, Q and A must share a dimension".into()));
    }
    Ok(())
}

/// Checks the `Q`-relative Poisson Yang-Baxter equation: `A(r) = 0`,
/// `C(r) = 0`, `(P ⊗ id - id ⊗ Q)r = 0` and `(Q ⊗ id - id ⊗ P)r = 0`.
pub fn check_rpybe(a: &RelPoissonAlgebra, q: &Matrix, r: &RMatrix) -> Result<AxiomReport, Error> {
    shape_check(a, q, r)?;
    let mut rep = AxiomReport::new();
    rep.check("aybe", &[], flat3(&aybe_tensor(r, a.dot())));
    rep.check("cybe", &[], flat3(&cybe_tensor(r, a.bracket())));
    let p = a.p();
    let c = &r.coeffs;
    rep.check("pybe1", &[], flat(&apply_left(p, c).sub(&apply_right(q, c))));
    rep.check("pybe2", &[], flat(&apply_left(q, c).sub(&apply_right(p, c))));
    Ok(rep)
}

/// The same equation for antisymmetric `r`, read through the map
/// `r: A* → A`:
///
/// * `[r(a*), r(b*)] = r(ad*(r a*)b* - ad*(r b*)a*)`
/// * `r(a*)·r(b*) = -r(L*(r a*)b* + L*(r b*)a*)`
/// * `P r = r Q*`
pub fn check_rpybe_via_maps(a: &RelPoissonAlgebra, q: &Matrix, r: &RMatrix) -> Result<AxiomReport, Error> {
    shape_check(a, q, r)?;
    if !r.is_antisymmetric() {
        return Err(Error::Invalid("the operator form needs an antisymmetric r".into()));
    }
    let n = a.dim();
    let rm = r.coeffs.transpose();
    let mut rep = AxiomReport::new();
    for i in 0..n {
        let u = rm.column(i);
        let ea = basis_vec(n, i);
        // ad*(x) = -ad(x)ᵀ and L*(x) = -L(x)ᵀ on A*
        let adu = a.bracket().left_of(&u).transpose().neg();
        let lu = a.dot().left_of(&u).transpose().neg();
        for j in 0..n {
            let w = rm.column(j);
            let eb = basis_vec(n, j);
            let adw = a.bracket().left_of(&w).transpose().neg();
            let lw = a.dot().left_of(&w).transpose().neg();
            let rhs = rm.apply(&sub_vec(&adu.apply(&eb), &adw.apply(&ea)));
            rep.check("pybe-bracket", &[i, j], sub_vec(&a.br(&u, &w), &rhs));
            let inner = add_vec(&lu.apply(&eb), &lw.apply(&ea));
            let rhs = rm.apply(&inner);
            rep.check("pybe-product", &[i, j], add_vec(&a.mul(&u, &w), &rhs));
        }
    }
    rep.check("pybe-intertwining", &[], flat(&a.p().mul(&rm).sub(&rm.mul(&q.transpose()))));
    Ok(rep)
}

/// `Δ(x) = (id ⊗ L(x) - L(x) ⊗ id)r` and `δ(x) = (ad x ⊗ id + id ⊗ ad x)r`.
pub fn coboundary_comults(a: &RelPoissonAlgebra, r: &RMatrix) -> Result<(Comultiplication, Comultiplication), Error> {
    let n = a.dim();
    if r.space.dim() != n {
        return Err(Error::Shape("r and A must share a dimension".into()));
    }
    let c = &r.coeffs;
    let mut dl = Vec::with_capacity(n);
    let mut dr = Vec::with_capacity(n);
    for k in 0..n {
        let l = a.l(k);
        let ad = a.ad(k);
        dl.push(apply_right(&l, c).sub(&apply_left(&l, c)));
        dr.push(apply_left(&ad, c).add(&apply_right(&ad, c)));
    }
    let coproduct = Comultiplication::from_fn(a.space(), |i, j, k| dl[k][(i, j)].clone());
    let cobracket = Comultiplication::from_fn(a.space(), |i, j, k| dr[k][(i, j)].clone());
    Ok((coproduct, cobracket))
}

/// The bialgebra data `(A, Δ_r, δ_r, P, Q)`.
pub fn coboundary_bialgebra(a: &RelPoissonAlgebra, q: &Matrix, r: &RMatrix) -> Result<BialgebraData, Error> {
    let (dl, dr) = coboundary_comults(a, r)?;
    BialgebraData::new(a.clone(), dl, dr, q.clone())
}

/// The tensor expression of the third coboundary condition at `x = e_i`:
///
/// ```text
/// (ad x ⊗ id ⊗ id + Q ⊗ id ⊗ L(x)) A(r)
///   + (id ⊗ id ⊗ L(x) - id ⊗ L(x) ⊗ id) C(r)
///   + Σ_j (ad(a_j) ⊗ id)(L(x) ⊗ id - id ⊗ L(x))(r + τr) ⊗ b_j
///   + Σ_j (id ⊗ L(x·a_j))(Q ⊗ id - id ⊗ P)r ⊗ b_j
///   + Σ_j (id ⊗ id ⊗ L(x·b_j))(id ⊗ τ)((id ⊗ P - Q ⊗ id)r ⊗ a_j)
/// ```
///
/// for `r = Σ_j a_j ⊗ b_j`.
pub fn coboundary_tr3(a: &RelPoissonAlgebra, q: &Matrix, r: &RMatrix, i: usize) -> Array3 {
    let n = a.dim();
    let p = a.p();
    let c = &r.coeffs;
    let ar = aybe_tensor(r, a.dot());
    let cr = cybe_tensor(r, a.bracket());
    let lx = a.l(i);
    let adx = a.ad(i);
    let x = basis_vec(n, i);
    let s = c.add(&c.transpose());
    let m1 = apply_right(p, c).sub(&apply_left(q, c));
    let mut t = ar.map_factor(0, &adx);
    t = t.add(&ar.map_factor(0, q).map_factor(2, &lx));
    t = t.add(&cr.map_factor(2, &lx)).sub(&cr.map_factor(1, &lx));
    let ls = apply_left(&lx, &s).sub(&apply_right(&lx, &s));
    for pj in 0..n {
        for qj in 0..n {
            let w = &c[(pj, qj)];
            if w.is_zero() {
                continue;
            }
            let bq = basis_vec(n, qj);
            let ap = basis_vec(n, pj);
            let term = apply_left(&a.ad(pj), &ls);
            t.add_scaled(w, &Array3::outer(&term, &bq));
            let lxa = a.dot().left_of(&a.mul(&x, &ap));
            let term = apply_right(&lxa, &m1.neg());
            t.add_scaled(w, &Array3::outer(&term, &bq));
            let lxb = a.dot().left_of(&a.mul(&x, &bq));
            let term = Array3::outer(&m1, &ap).swap23().map_factor(2, &lxb);
            t.add_scaled(w, &term);
        }
    }
    t
}

/// Checks the conditions under which the coboundary data `(Δ_r, δ_r)` makes
/// `(A, Δ_r, δ_r, P, Q)` a bialgebra: `aybe1`, `aybe2`, `cybe1`, `cybe2` and
/// `tr1`-`tr7`. Requires that `Q` dually represents `A`.
pub fn check_coboundary_conditions(a: &RelPoissonAlgebra, q: &Matrix, r: &RMatrix) -> Result<AxiomReport, Error> {
    shape_check(a, q, r)?;
    require("Q dually represents A", check_dually_represents(a, q))?;
    let n = a.dim();
    let p = a.p();
    let c = &r.coeffs;
    let s = c.add(&c.transpose());
    let ar = aybe_tensor(r, a.dot());
    let cr = cybe_tensor(r, a.bracket());
    // (id ⊗ P - Q ⊗ id)r and (id ⊗ Q - P ⊗ id)r
    let m1 = apply_right(p, c).sub(&apply_left(q, c));
    let m2 = apply_right(q, c).sub(&apply_left(p, c));
    let pq = p.add(q);
    let mut rep = AxiomReport::new();
    for i in 0..n {
        let l = a.l(i);
        let ad = a.ad(i);
        rep.check("aybe1", &[i], flat(&apply_right(&l, &s).sub(&apply_left(&l, &s))));
        rep.check("aybe2", &[i], flat3(&ar.map_factor(2, &l).sub(&ar.map_factor(0, &l))));
        rep.check("cybe1", &[i], flat(&apply_left(&ad, &s).add(&apply_right(&ad, &s))));
        let t = cr.map_factor(0, &ad).add(&cr.map_factor(1, &ad)).add(&cr.map_factor(2, &ad));
        rep.check("cybe2", &[i], flat3(&t));
        rep.check("tr1", &[i], flat(&apply_right(&l, &m1).add(&apply_left(&l, &m2))));
        rep.check("tr2", &[i], flat(&apply_right(&ad, &m1).sub(&apply_left(&ad, &m2))));
        rep.check("tr3", &[i], flat3(&coboundary_tr3(a, q, r, i)));
        rep.check("tr4", &[i], flat(&apply_right(&l, &m2).sub(&apply_left(&l, &m2))));
        rep.check("tr5", &[i], flat(&apply_left(&ad, &m2).add(&apply_right(&ad, &m2))));
        let lpq = a.dot().left_of(&pq.column(i));
        rep.check("tr6", &[i], flat3(&ar.map_factor(2, &lpq)));
        for j in 0..n {
            let lxy = a.dot().left_of(a.dot().basis_product(i, j));
            rep.check("tr7", &[i, j], flat(&apply_left(&lxy, &m2)));
        }
    }
    Ok(rep)
}

/// Checks that `T: V → A` is a weak O-operator of `(A, P)` associated to
/// `(μ, ρ, α, V)`:
///
/// * `T(u)·T(v) = T(μ(Tu)v + μ(Tv)u)`
/// * `[Tu, Tv] = T(ρ(Tu)v - ρ(Tv)u)`
/// * `P T = T α`
pub fn check_weak_o_operator(c: &CompatibleStructure, alpha: &Matrix, t: &Matrix) -> Result<AxiomReport, Error> {
    let a = &c.algebra;
    let (n, m) = (a.dim(), c.module_dim());
    if t.rows() != n || t.cols() != m || alpha.rows() != m || alpha.cols() != m {
        return Err(Error::Shape(format!("T must be {n}x{m} and alpha {m}x{m}")));
    }
    let mut rep = AxiomReport::new();
    let tv: Vec<Vec<Scalar>> = (0..m).map(|i| t.column(i)).collect();
    for i in 0..m {
        let u = basis_vec(m, i);
        for j in 0..m {
            let v = basis_vec(m, j);
            let mut inner = c.mu_of(&tv[i]).apply(&v);
            axpy(&mut inner, &int(1), &c.mu_of(&tv[j]).apply(&u));
            rep.check("o-product", &[i, j], sub_vec(&a.mul(&tv[i], &tv[j]), &t.apply(&inner)));
            let inner = sub_vec(&c.rho_of(&tv[i]).apply(&v), &c.rho_of(&tv[j]).apply(&u));
            rep.check("o-bracket", &[i, j], sub_vec(&a.br(&tv[i], &tv[j]), &t.apply(&inner)));
        }
    }
    crate::rep::check_columns(&mut rep, "o-derivation", &[], &a.p().mul(t).sub(&t.mul(alpha)));
    Ok(rep)
}

/// Output of [`o_operator_to_rmatrix`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OOperatorRMatrix {
    /// `(A ⋉_{-μ*, ρ*} V*, P + β*)`
    pub algebra: RelPoissonAlgebra,
    /// `T - τ(T)` with `T = Σ T(v_i) ⊗ v_i*`
    pub r: RMatrix,
    /// `Q + α*`, for which `r` solves the relative Poisson Yang-Baxter equation
    pub q: Matrix,
}

/// `r = T - τ(T)` in the semidirect product `A ⋉_{-μ*, ρ*} V*` with
/// derivation `P + β*`, a solution of the `(Q + α*)`-relative Poisson
/// Yang-Baxter equation.
///
/// Preconditions: `(μ, ρ, α, V)` is a representation, `β` dually represents
/// `A` on `(μ, ρ, V)`, `T` is a weak O-operator, and `T β = Q T`.
pub fn o_operator_to_rmatrix(rep: &RepData, beta: &Matrix, q: &Matrix, t: &Matrix) -> Result<OOperatorRMatrix, Error> {
    let c = &rep.compat;
    let (n, m) = (c.algebra.dim(), c.module_dim());
    if beta.rows() != m || beta.cols() != m || q.rows() != n || q.cols() != n {
        return Err(Error::Shape("beta must act on V and Q on A".into()));
    }
    require("representation", check_representation(rep))?;
    require("beta dually represents A on V", check_dual_conditions(c, beta))?;
    require("weak O-operator", check_weak_o_operator(c, &rep.alpha, t)?)?;
    let mut inter = AxiomReport::new();
    crate::rep::check_columns(&mut inter, "t-beta", &[], &t.mul(beta).sub(&q.mul(t)));
    require("T beta = Q T", inter)?;
    Ok(o_operator_to_rmatrix_unchecked(rep, beta, q, t))
}

pub fn o_operator_to_rmatrix_unchecked(rep: &RepData, beta: &Matrix, q: &Matrix, t: &Matrix) -> OOperatorRMatrix {
    let c = &rep.compat;
    let (n, m) = (c.algebra.dim(), c.module_dim());
    let dual = dual_rep(c, beta).expect("beta is square");
    let algebra = semidirect_product_unchecked(&dual);
    let mut coeffs = Matrix::zeros(n + m, n + m);
    for a in 0..n {
        for i in 0..m {
            let v = &t[(a, i)];
            coeffs[(a, n + i)] += v;
            coeffs[(n + i, a)] -= v;
        }
    }
    let r = RMatrix::new(algebra.space().clone(), coeffs).expect("square");
    OOperatorRMatrix {
        algebra,
        r,
        q: q.direct_sum(&rep.alpha.transpose()),
    }
}

/// The conditions under which `Q + β` dually represents `(A ⋉ V, P + α)`:
/// `(μ, ρ, α, V)` is a representation, `β` dually represents `A` on
/// `(μ, ρ, V)`, `Q` dually represents `A`, and
///
/// * `cond1`: `μ(Q x)v - μ(x)α(v) - β(μ(x)v) = 0`
/// * `cond2`: `ρ(Q x)v - ρ(x)α(v) - β(ρ(x)v) = 0`
pub fn check_semidirect_dual_conditions(
    c: &CompatibleStructure,
    alpha: &Matrix,
    q: &Matrix,
    beta: &Matrix,
) -> Result<AxiomReport, Error> {
    let rep = RepData::new(c.clone(), alpha.clone())?;
    let mut r = check_representation(&rep).prefixed("representation");
    r.merge(check_dual_conditions(c, beta).prefixed("beta"));
    r.merge(check_dually_represents(&c.algebra, q).prefixed("q"));
    for i in 0..c.algebra.dim() {
        let qx = q.column(i);
        let d = c.mu_of(&qx).sub(&c.mu[i].mul(alpha)).sub(&beta.mul(&c.mu[i]));
        crate::rep::check_columns(&mut r, "cond1", &[i], &d);
        let d = c.rho_of(&qx).sub(&c.rho[i].mul(alpha)).sub(&beta.mul(&c.rho[i]));
        crate::rep::check_columns(&mut r, "cond2", &[i], &d);
    }
    Ok(r)
}

/// The bialgebra `(A ⋉ V*, Δ_r, δ_r, P + β*, Q + α*)` from an O-operator,
/// additionally requiring that `Q` dually represents `A` and the two
/// conditions `cond1`, `cond2` of [`check_semidirect_dual_conditions`].
pub fn o_operator_bialgebra(rep: &RepData, beta: &Matrix, q: &Matrix, t: &Matrix) -> Result<BialgebraData, Error> {
    let out = o_operator_to_rmatrix(rep, beta, q, t)?;
    require(
        "semidirect dual conditions",
        check_semidirect_dual_conditions(&rep.compat, &rep.alpha, q, beta)?,
    )?;
    coboundary_bialgebra(&out.algebra, &out.q, &out.r)
}
