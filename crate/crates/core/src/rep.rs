//! Representations of relative Poisson algebras, their duals, semidirect
//! products, and representations of Jacobi algebras.

use crate::algebra::{find_unit, BilinearOp, RelPoissonAlgebra};
use crate::error::{require, Error};
use crate::linear::{add_vec, basis_vec, combine, sub_vec, Matrix, Scalar, Space};
use crate::report::AxiomReport;

/// Actions `μ` of `(A, ·)` and `ρ` of `(A, [-,-])` on `V`, one matrix per
/// basis element of `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompatibleStructure {
    pub algebra: RelPoissonAlgebra,
    pub module: Space,
    pub mu: Vec<Matrix>,
    pub rho: Vec<Matrix>,
}

impl CompatibleStructure {
    pub fn new(algebra: RelPoissonAlgebra, module: Space, mu: Vec<Matrix>, rho: Vec<Matrix>) -> Result<Self, Error> {
        let (n, m) = (algebra.dim(), module.dim());
        if mu.len() != n || rho.len() != n {
            return Err(Error::Shape(format!("need {n} action matrices")));
        }
        if mu.iter().chain(&rho).any(|a| a.rows() != m || a.cols() != m) {
            return Err(Error::Shape(format!("action matrices must be {m}x{m}")));
        }
        Ok(CompatibleStructure {
            algebra,
            module,
            mu,
            rho,
        })
    }

    pub fn module_dim(&self) -> usize {
        self.module.dim()
    }

    /// `μ(x)` for a general `x ∈ A`.
    pub fn mu_of(&self, x: &[Scalar]) -> Matrix {
        let m = self.module_dim();
        combine(&self.mu, x, m, m)
    }

    /// `ρ(x)` for a general `x ∈ A`.
    pub fn rho_of(&self, x: &[Scalar]) -> Matrix {
        let m = self.module_dim();
        combine(&self.rho, x, m, m)
    }
}

/// A representation `(μ, ρ, α, V)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepData {
    pub compat: CompatibleStructure,
    pub alpha: Matrix,
}

impl RepData {
    pub fn new(compat: CompatibleStructure, alpha: Matrix) -> Result<Self, Error> {
        let m = compat.module_dim();
        if alpha.rows() != m || alpha.cols() != m {
            return Err(Error::Shape(format!("alpha must be {m}x{m}")));
        }
        Ok(RepData { compat, alpha })
    }

    pub fn algebra(&self) -> &RelPoissonAlgebra {
        &self.compat.algebra
    }

    pub fn module(&self) -> &Space {
        &self.compat.module
    }
}

/// Records every nonzero column of `d` as a violation at `(idx.., v)`.
pub(crate) fn check_columns(r: &mut AxiomReport, axiom: &str, idx: &[usize], d: &Matrix) {
    for v in 0..d.cols() {
        let col = d.column(v);
        let mut at = idx.to_vec();
        at.push(v);
        r.check(axiom, &at, col);
    }
}

fn check_actions(c: &CompatibleStructure, r: &mut AxiomReport) {
    let a = &c.algebra;
    let n = a.dim();
    for i in 0..n {
        for j in 0..n {
            let d = c.mu_of(a.dot().basis_product(i, j)).sub(&c.mu[i].mul(&c.mu[j]));
            check_columns(r, "mu-multiplicative", &[i, j], &d);
            let comm = c.rho[i].mul(&c.rho[j]).sub(&c.rho[j].mul(&c.rho[i]));
            let d = c.rho_of(a.bracket().basis_product(i, j)).sub(&comm);
            check_columns(r, "rho-lie", &[i, j], &d);
        }
    }
}

/// Checks all five condition families of a representation: `μ` represents
/// `(A, ·)`, `ρ` represents `(A, [-,-])`, their compatibility, and the three
/// identities involving `α`.
///
/// A unital algebra is not required to act unitally here; see
/// [`check_jacobi_representation`] for that.
pub fn check_representation(rep: &RepData) -> AxiomReport {
    let c = &rep.compat;
    let a = &c.algebra;
    let n = a.dim();
    let alpha = &rep.alpha;
    let mut r = AxiomReport::new();
    check_actions(c, &mut r);
    let pe: Vec<Vec<Scalar>> = (0..n).map(|i| a.p().column(i)).collect();
    for i in 0..n {
        let x = basis_vec(n, i);
        for j in 0..n {
            let y = basis_vec(n, j);
            // ρ(y)μ(x) - μ(x)ρ(y) + μ([x,y]) - μ(x·P(y))
            let d = c.rho[j]
                .mul(&c.mu[i])
                .sub(&c.mu[i].mul(&c.rho[j]))
                .add(&c.mu_of(a.bracket().basis_product(i, j)))
                .sub(&c.mu_of(&a.mul(&x, &pe[j])));
            check_columns(&mut r, "compatibility", &[i, j], &d);
            // ρ(x·y) - μ(x)ρ(y) - μ(y)ρ(x) + μ(x·y)α
            let xy = a.mul(&x, &y);
            let d = c
                .rho_of(&xy)
                .sub(&c.mu[i].mul(&c.rho[j]))
                .sub(&c.mu[j].mul(&c.rho[i]))
                .add(&c.mu_of(&xy).mul(alpha));
            check_columns(&mut r, "rep3", &[i, j], &d);
        }
        // αμ(x) - μ(P x) - μ(x)α, and the same for ρ
        let d = alpha.mul(&c.mu[i]).sub(&c.mu_of(&pe[i])).sub(&c.mu[i].mul(alpha));
        check_columns(&mut r, "rep1", &[i], &d);
        let d = alpha.mul(&c.rho[i]).sub(&c.rho_of(&pe[i])).sub(&c.rho[i].mul(alpha));
        check_columns(&mut r, "rep2", &[i], &d);
    }
    r
}

/// Adjoint representation `(L, ad, P, A)`.
pub fn adjoint_rep(a: &RelPoissonAlgebra) -> RepData {
    let n = a.dim();
    RepData {
        compat: CompatibleStructure {
            algebra: a.clone(),
            module: a.space().clone(),
            mu: (0..n).map(|i| a.l(i)).collect(),
            rho: (0..n).map(|i| a.ad(i)).collect(),
        },
        alpha: a.p().clone(),
    }
}

/// `(-μ*, ρ*, β*, V*)` with `⟨φ*(x)u*, v⟩ = -⟨u*, φ(x)v⟩`; so `-μ*(x)` has
/// matrix `μ(x)ᵀ`, `ρ*(x)` has matrix `-ρ(x)ᵀ`, and `β*` is `βᵀ`.
pub fn dual_rep(c: &CompatibleStructure, beta: &Matrix) -> Result<RepData, Error> {
    let m = c.module_dim();
    if beta.rows() != m || beta.cols() != m {
        return Err(Error::Shape(format!("beta must be {m}x{m}")));
    }
    Ok(RepData {
        compat: CompatibleStructure {
            algebra: c.algebra.clone(),
            module: c.module.dual(),
            mu: c.mu.iter().map(Matrix::transpose).collect(),
            rho: c.rho.iter().map(|r| r.transpose().neg()).collect(),
        },
        alpha: beta.transpose(),
    })
}

/// The identities on `(μ, ρ, V)` and `β` under which `(-μ*, ρ*, β*, V*)` is a
/// representation, given that `(μ, ρ)` is a compatible structure:
///
/// * `dualrep1`: `μ(x)β(v) - μ(P x)v - β(μ(x)v) = 0`
/// * `dualrep2`: the same with `ρ`
/// * `dualrep3`: `-ρ(x·y)v + ρ(y)μ(x)v + ρ(x)μ(y)v + β(μ(x·y)v) = 0`
pub fn check_dual_conditions(c: &CompatibleStructure, beta: &Matrix) -> AxiomReport {
    let a = &c.algebra;
    let n = a.dim();
    let mut r = AxiomReport::new();
    for i in 0..n {
        let pe = a.p().column(i);
        let d = c.mu[i].mul(beta).sub(&c.mu_of(&pe)).sub(&beta.mul(&c.mu[i]));
        check_columns(&mut r, "dualrep1", &[i], &d);
        let d = c.rho[i].mul(beta).sub(&c.rho_of(&pe)).sub(&beta.mul(&c.rho[i]));
        check_columns(&mut r, "dualrep2", &[i], &d);
        for j in 0..n {
            let xy = a.dot().basis_product(i, j);
            let d = c
                .rho[j]
                .mul(&c.mu[i])
                .add(&c.rho[i].mul(&c.mu[j]))
                .sub(&c.rho_of(xy))
                .add(&beta.mul(&c.mu_of(xy)));
            check_columns(&mut r, "dualrep3", &[i, j], &d);
        }
    }
    r
}

/// For a representation `(μ, ρ, α, V)` and `β`, the identities
///
/// * `alpha-beta1`: `(α+β)μ(x) - μ(x)(α+β) = 0`
/// * `alpha-beta2`: the same with `ρ`
/// * `eqdualrep1`: `(α+β)μ(x·y) = 0`
/// * `eqdualrep2`: `μ(x·y)(α+β) = 0`
pub fn check_alpha_beta_conditions(rep: &RepData, beta: &Matrix) -> AxiomReport {
    let c = &rep.compat;
    let a = &c.algebra;
    let n = a.dim();
    let s = rep.alpha.add(beta);
    let mut r = AxiomReport::new();
    for i in 0..n {
        check_columns(&mut r, "alpha-beta1", &[i], &s.mul(&c.mu[i]).sub(&c.mu[i].mul(&s)));
        check_columns(&mut r, "alpha-beta2", &[i], &s.mul(&c.rho[i]).sub(&c.rho[i].mul(&s)));
        for j in 0..n {
            let mxy = c.mu_of(a.dot().basis_product(i, j));
            check_columns(&mut r, "eqdualrep1", &[i, j], &s.mul(&mxy));
            check_columns(&mut r, "eqdualrep2", &[i, j], &mxy.mul(&s));
        }
    }
    r
}

/// The identities under which `Q` dually represents `A`, i.e.
/// `(-L*, ad*, Q*, A*)` is a representation:
///
/// * `dualadj1`: `x·Q(y) - P(x)·y - Q(x·y) = 0`
/// * `dualadj2`: `[x, Q(y)] - [P(x), y] - Q([x,y]) = 0`
/// * `dualadj3`: `[x, y·z] + [y, z·x] + [z, x·y] + Q(x·y·z) = 0`
pub fn check_dually_represents(a: &RelPoissonAlgebra, q: &Matrix) -> AxiomReport {
    let mut r = AxiomReport::new();
    dualadj12(a, q, &mut r);
    let n = a.dim();
    for i in 0..n {
        let x = basis_vec(n, i);
        for j in 0..n {
            let y = basis_vec(n, j);
            for k in 0..n {
                let z = basis_vec(n, k);
                let mut d = a.br(&x, a.dot().basis_product(j, k));
                d = add_vec(&d, &a.br(&y, a.dot().basis_product(k, i)));
                d = add_vec(&d, &a.br(&z, a.dot().basis_product(i, j)));
                let xyz = a.mul(a.dot().basis_product(i, j), &z);
                d = add_vec(&d, &q.apply(&xyz));
                r.check("dualadj3", &[i, j, k], d);
            }
        }
    }
    r
}

/// Same as [`check_dually_represents`] with `dualadj3` replaced by
/// `eqdualadj1`: `(P+Q)(x·y·z) = 0`. Both forms agree on relative Poisson
/// algebras.
pub fn check_dually_represents_unit_form(a: &RelPoissonAlgebra, q: &Matrix) -> AxiomReport {
    let mut r = AxiomReport::new();
    dualadj12(a, q, &mut r);
    let n = a.dim();
    let s = a.p().add(q);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let xyz = a.mul(a.dot().basis_product(i, j), &basis_vec(n, k));
                r.check("eqdualadj1", &[i, j, k], s.apply(&xyz));
            }
        }
    }
    r
}

fn dualadj12(a: &RelPoissonAlgebra, q: &Matrix, r: &mut AxiomReport) {
    let n = a.dim();
    for i in 0..n {
        let x = basis_vec(n, i);
        let px = a.p().column(i);
        for j in 0..n {
            let y = basis_vec(n, j);
            let qy = q.column(j);
            let mut d = a.mul(&x, &qy);
            d = sub_vec(&d, &a.mul(&px, &y));
            d = sub_vec(&d, &q.apply(a.dot().basis_product(i, j)));
            r.check("dualadj1", &[i, j], d);
            let mut d = a.br(&x, &qy);
            d = sub_vec(&d, &a.br(&px, &y));
            d = sub_vec(&d, &q.apply(a.bracket().basis_product(i, j)));
            r.check("dualadj2", &[i, j], d);
        }
    }
}

/// Assembles the relative Poisson structure on `A₁ ⊕ A₂` from mutual
/// actions: `μ₁, ρ₁` of `A₁` on `A₂` and `μ₂, ρ₂` of `A₂` on `A₁`.
pub(crate) fn assemble(
    a1: &RelPoissonAlgebra,
    a2: &RelPoissonAlgebra,
    mu1: &[Matrix],
    rho1: &[Matrix],
    mu2: &[Matrix],
    rho2: &[Matrix],
) -> RelPoissonAlgebra {
    let (n1, n2) = (a1.dim(), a2.dim());
    let space = a1.space().direct_sum(a2.space());
    let mut dot = BilinearOp::zero(&space);
    let mut br = BilinearOp::zero(&space);
    for i in 0..n1 {
        for j in 0..n1 {
            for k in 0..n1 {
                dot.set(i, j, k, a1.dot().get(i, j, k).clone());
                br.set(i, j, k, a1.bracket().get(i, j, k).clone());
            }
        }
    }
    for a in 0..n2 {
        for b in 0..n2 {
            for c in 0..n2 {
                dot.set(n1 + a, n1 + b, n1 + c, a2.dot().get(a, b, c).clone());
                br.set(n1 + a, n1 + b, n1 + c, a2.bracket().get(a, b, c).clone());
            }
        }
    }
    for x in 0..n1 {
        for b in 0..n2 {
            // x·b = μ₂(b)x + μ₁(x)b, [x, b] = -ρ₂(b)x + ρ₁(x)b
            for k in 0..n1 {
                let m = mu2[b][(k, x)].clone();
                dot.set(x, n1 + b, k, m.clone());
                dot.set(n1 + b, x, k, m);
                let r = rho2[b][(k, x)].clone();
                br.set(x, n1 + b, k, -r.clone());
                br.set(n1 + b, x, k, r);
            }
            for c in 0..n2 {
                let m = mu1[x][(c, b)].clone();
                dot.set(x, n1 + b, n1 + c, m.clone());
                dot.set(n1 + b, x, n1 + c, m);
                let r = rho1[x][(c, b)].clone();
                br.set(x, n1 + b, n1 + c, r.clone());
                br.set(n1 + b, x, n1 + c, -r);
            }
        }
    }
    let p = a1.p().direct_sum(a2.p());
    RelPoissonAlgebra::new(dot, br, p).expect("shapes agree by construction")
}

/// `A ⋉ V` without checking that the data is a representation.
pub fn semidirect_product_unchecked(rep: &RepData) -> RelPoissonAlgebra {
    let c = &rep.compat;
    let m = c.module_dim();
    let zero = BilinearOp::zero(&c.module);
    let v = RelPoissonAlgebra::new(zero.clone(), zero, rep.alpha.clone()).expect("square alpha");
    let none = vec![Matrix::zeros(c.algebra.dim(), c.algebra.dim()); m];
    assemble(&c.algebra, &v, &c.mu, &c.rho, &none, &none)
}

/// `A ⋉_{μ,ρ} V` with derivation `P + α`:
/// `(x+u)·(y+v) = x·y + μ(x)v + μ(y)u`,
/// `[x+u, y+v] = [x,y] + ρ(x)v - ρ(y)u`.
pub fn semidirect_product(rep: &RepData) -> Result<RelPoissonAlgebra, Error> {
    require("representation", check_representation(rep))?;
    Ok(semidirect_product_unchecked(rep))
}

/// Whether invertible `phi: V₁ → V₂` intertwines `μ`, `ρ` and `α`.
pub fn check_rep_equivalence(r1: &RepData, r2: &RepData, phi: &Matrix) -> bool {
    let n = r1.algebra().dim();
    if r2.algebra().dim() != n
        || phi.rows() != r2.module().dim()
        || phi.cols() != r1.module().dim()
        || phi.inverse().is_none()
    {
        return false;
    }
    (0..n).all(|i| {
        phi.mul(&r1.compat.mu[i]) == r2.compat.mu[i].mul(phi)
            && phi.mul(&r1.compat.rho[i]) == r2.compat.rho[i].mul(phi)
    }) && phi.mul(&r1.alpha) == r2.alpha.mul(phi)
}

/// Checks that `(μ, ρ, V)` represents the Jacobi algebra `(A, ·, [-,-])`:
/// `μ` is a unital representation of `(A, ·)`, `ρ` one of `(A, [-,-])`, and
///
/// * `jacobi-rep2`: `ρ(x·y) - μ(x)ρ(y) - μ(y)ρ(x) + μ(x·y)ρ(1) = 0`
/// * `jacobi-rep3`: `ρ(y)μ(x) - μ(x)ρ(y) + μ([x,y]) - μ(x·[1,y]) = 0`
pub fn check_jacobi_representation(
    dot: &BilinearOp,
    bracket: &BilinearOp,
    module: &Space,
    mu: &[Matrix],
    rho: &[Matrix],
) -> Result<AxiomReport, Error> {
    let unit = find_unit(dot).ok_or(Error::NoUnit)?;
    let n = dot.dim();
    let m = module.dim();
    let a = RelPoissonAlgebra::new(dot.clone(), bracket.clone(), Matrix::zeros(n, n))?;
    let c = CompatibleStructure::new(a, module.clone(), mu.to_vec(), rho.to_vec())?;
    let mut r = AxiomReport::new();
    check_columns(&mut r, "unital", &[], &c.mu_of(&unit).sub(&Matrix::identity(m)));
    check_actions(&c, &mut r);
    let rho1 = c.rho_of(&unit);
    for i in 0..n {
        let x = basis_vec(n, i);
        for j in 0..n {
            let xy = dot.basis_product(i, j);
            let d = c
                .rho_of(xy)
                .sub(&mu[i].mul(&rho[j]))
                .sub(&mu[j].mul(&rho[i]))
                .add(&c.mu_of(xy).mul(&rho1));
            check_columns(&mut r, "jacobi-rep2", &[i, j], &d);
            let one_y = bracket.apply(&unit, &basis_vec(n, j));
            let d = rho[j]
                .mul(&mu[i])
                .sub(&mu[i].mul(&rho[j]))
                .add(&c.mu_of(bracket.basis_product(i, j)))
                .sub(&c.mu_of(&dot.apply(&x, &one_y)));
            check_columns(&mut r, "jacobi-rep3", &[i, j], &d);
        }
    }
    Ok(r)
}
