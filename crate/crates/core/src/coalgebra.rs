//! Comultiplications, relative Poisson coalgebras and bialgebras, and the
//! passage between a bialgebra, its dual, and the induced matched pair.

use crate::algebra::{check_rel_poisson, BilinearOp, RelPoissonAlgebra};
use crate::error::{require, Error};
use crate::linear::{apply_left, apply_right, basis_vec, Array3, Matrix, Scalar, Space};
use crate::pairing::{dual_matched_pair, MatchedPairData};
use crate::rep::{check_dually_represents, check_dually_represents_unit_form};
use crate::report::AxiomReport;

use num_traits::Zero;

/// A linear map `A → A ⊗ A`, `e_k ↦ Σ d[i][j][k] e_i ⊗ e_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comultiplication {
    space: Space,
    d: Array3,
}

impl Comultiplication {
    pub fn zero(space: &Space) -> Self {
        Comultiplication {
            space: space.clone(),
            d: Array3::cube(space.dim()),
        }
    }

    pub fn from_fn(space: &Space, mut f: impl FnMut(usize, usize, usize) -> Scalar) -> Self {
        let n = space.dim();
        let mut d = Array3::cube(n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    *d.get_mut(i, j, k) = f(i, j, k);
                }
            }
        }
        Comultiplication {
            space: space.clone(),
            d,
        }
    }

    /// From nonzero coefficients `(i, j, k, d[i][j][k])`.
    pub fn from_entries(space: &Space, entries: &[(usize, usize, usize, Scalar)]) -> Result<Self, Error> {
        let n = space.dim();
        let mut c = Comultiplication::zero(space);
        for (i, j, k, v) in entries {
            if *i >= n || *j >= n || *k >= n {
                return Err(Error::Shape(format!("index ({i}, {j}, {k}) out of range for dimension {n}")));
            }
            *c.d.get_mut(*i, *j, *k) = v.clone();
        }
        Ok(c)
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        self.d.get(i, j, k)
    }

    pub fn coeffs(&self) -> &Array3 {
        &self.d
    }

    pub fn is_zero(&self) -> bool {
        self.d.is_zero()
    }

    /// Nonzero coefficients as `(i, j, k, value)`.
    pub fn entries(&self) -> Vec<(usize, usize, usize, Scalar)> {
        self.d.nonzero().map(|((i, j, k), v)| (i, j, k, v.clone())).collect()
    }

    /// Coefficient matrix of `Δ(e_k)`.
    pub fn image(&self, k: usize) -> Matrix {
        let n = self.dim();
        Matrix::from_fn(n, n, |i, j| self.d.get(i, j, k).clone())
    }

    /// Coefficient matrix of `Δ(x)`.
    pub fn apply(&self, x: &[Scalar]) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for (k, c) in x.iter().enumerate() {
            if !c.is_zero() {
                m.add_scaled(c, &self.image(k));
            }
        }
        m
    }

    pub fn scale(&self, s: &Scalar) -> Comultiplication {
        Comultiplication {
            space: self.space.clone(),
            d: self.d.scale(s),
        }
    }

    pub fn relabeled(&self, space: &Space) -> Result<Comultiplication, Error> {
        if space.dim() != self.dim() {
            return Err(Error::Shape("relabeling changes the dimension".into()));
        }
        Ok(Comultiplication {
            space: space.clone(),
            d: self.d.clone(),
        })
    }

    /// `(id ⊗ Δ)(m)` for a 2-tensor `m`.
    pub fn after_right(&self, m: &Matrix) -> Array3 {
        let n = self.dim();
        let mut out = Array3::cube(n);
        for a in 0..n {
            for j in 0..n {
                let c = &m[(a, j)];
                if c.is_zero() {
                    continue;
                }
                for ((b, cc, k), v) in self.d.nonzero() {
                    if k == j {
                        *out.get_mut(a, b, cc) += c * v;
                    }
                }
            }
        }
        out
    }

    /// `(Δ ⊗ id)(m)` for a 2-tensor `m`.
    pub fn after_left(&self, m: &Matrix) -> Array3 {
        let n = self.dim();
        let mut out = Array3::cube(n);
        for i in 0..n {
            for c in 0..n {
                let x = &m[(i, c)];
                if x.is_zero() {
                    continue;
                }
                for ((a, b, k), v) in self.d.nonzero() {
                    if k == i {
                        *out.get_mut(a, b, c) += x * v;
                    }
                }
            }
        }
        out
    }
}

/// The product on `A*` dual to `Δ`: the coefficient of `e_k*` in
/// `e_i* · e_j*` is `d[i][j][k]`.
pub fn comult_to_dual_algebra(d: &Comultiplication) -> BilinearOp {
    BilinearOp::from_fn(&d.space.dual(), |i, j, k| d.get(i, j, k).clone())
}

/// Inverse of [`comult_to_dual_algebra`]: the comultiplication on the predual
/// of `op`'s space.
pub fn dual_algebra_to_comult(op: &BilinearOp) -> Comultiplication {
    Comultiplication::from_fn(&op.space().dual(), |i, j, k| op.get(i, j, k).clone())
}

fn flat(m: &Matrix) -> Vec<Scalar> {
    m.as_slice().to_vec()
}

fn flat3(t: &Array3) -> Vec<Scalar> {
    t.as_slice().to_vec()
}

/// Checks `τΔ = Δ` and `(id ⊗ Δ)Δ = (Δ ⊗ id)Δ` on basis elements.
pub fn check_cocomm_coassoc(d: &Comultiplication) -> AxiomReport {
    let mut r = AxiomReport::new();
    for k in 0..d.dim() {
        let img = d.image(k);
        r.check("cocommutativity", &[k], flat(&img.sub(&img.transpose())));
        r.check("coassociativity", &[k], flat3(&d.after_right(&img).sub(&d.after_left(&img))));
    }
    r
}

/// Checks `τδ = -δ` and `(id + ξ + ξ²)(id ⊗ δ)δ = 0` on basis elements.
pub fn check_lie_coalgebra(d: &Comultiplication) -> AxiomReport {
    let mut r = AxiomReport::new();
    for k in 0..d.dim() {
        let img = d.image(k);
        r.check("coantisymmetry", &[k], flat(&img.add(&img.transpose())));
        let t = d.after_right(&img);
        let c = t.cycle();
        r.check("cojacobi", &[k], flat3(&t.add(&c).add(&c.cycle())));
    }
    r
}

/// `(id ⊗ Δ)δ(x) - (δ ⊗ id)Δ(x) - (τ ⊗ id)(id ⊗ δ)Δ(x) - (Q ⊗ id ⊗ id)(Δ ⊗ id)Δ(x)`
/// at `x = e_k`; the coalgebra counterpart of the relative Leibniz rule.
pub fn coleibniz_defect(coproduct: &Comultiplication, cobracket: &Comultiplication, q: &Matrix, k: usize) -> Array3 {
    let dk = coproduct.image(k);
    let bk = cobracket.image(k);
    coproduct
        .after_right(&bk)
        .sub(&cobracket.after_left(&dk))
        .sub(&cobracket.after_right(&dk).swap12())
        .sub(&coproduct.after_left(&dk).map_factor(0, q))
}

/// Checks that `(A, Δ, δ, Q)` is a relative Poisson coalgebra.
pub fn check_rel_poisson_coalgebra(coproduct: &Comultiplication, cobracket: &Comultiplication, q: &Matrix) -> AxiomReport {
    let mut r = check_cocomm_coassoc(coproduct);
    r.merge(check_lie_coalgebra(cobracket));
    for k in 0..coproduct.dim() {
        let qk = q.column(k);
        for (d, name) in [(coproduct, "coderivation-of-coproduct"), (cobracket, "coderivation-of-cobracket")] {
            // ΔQ = (Q ⊗ id + id ⊗ Q)Δ
            let img = d.image(k);
            let rhs = apply_left(q, &img).add(&apply_right(q, &img));
            r.check(name, &[k], flat(&d.apply(&qk).sub(&rhs)));
        }
        r.check("coleibniz", &[k], flat3(&coleibniz_defect(coproduct, cobracket, q, k)));
    }
    r
}

/// `(A, ·, [-,-], P, Δ, δ, Q)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BialgebraData {
    pub algebra: RelPoissonAlgebra,
    pub coproduct: Comultiplication,
    pub cobracket: Comultiplication,
    pub q: Matrix,
}

impl BialgebraData {
    pub fn new(
        algebra: RelPoissonAlgebra,
        coproduct: Comultiplication,
        cobracket: Comultiplication,
        q: Matrix,
    ) -> Result<Self, Error> {
        let n = algebra.dim();
        if coproduct.space() != algebra.space() || cobracket.space() != algebra.space() {
            return Err(Error::Shape("comultiplications live on a different space".into()));
        }
        if q.rows() != n || q.cols() != n {
            return Err(Error::Shape(format!("Q must be {n}x{n}")));
        }
        Ok(BialgebraData {
            algebra,
            coproduct,
            cobracket,
            q,
        })
    }

    /// `(A*, Δ*, δ*, Q*)`.
    pub fn dual_algebra(&self) -> RelPoissonAlgebra {
        RelPoissonAlgebra::new(
            comult_to_dual_algebra(&self.coproduct),
            comult_to_dual_algebra(&self.cobracket),
            self.q.transpose(),
        )
        .expect("shapes agree")
    }

    pub fn relabeled(&self, space: &Space) -> Result<Self, Error> {
        Ok(BialgebraData {
            algebra: self.algebra.relabeled(space)?,
            coproduct: self.coproduct.relabeled(space)?,
            cobracket: self.cobracket.relabeled(space)?,
            q: self.q.clone(),
        })
    }
}

/// Checks the seven condition groups of a relative Poisson bialgebra:
///
/// 1. `(A, ·, [-,-], P)` is a relative Poisson algebra;
/// 2. `(A, Δ, δ, Q)` is a relative Poisson coalgebra;
/// 3. `Δ(x·y) = (L(x) ⊗ id)Δ(y) + (id ⊗ L(y))Δ(x)`;
/// 4. `δ([x,y]) = (ad x ⊗ id + id ⊗ ad x)δ(y) - (ad y ⊗ id + id ⊗ ad y)δ(x)`;
/// 5. `Q` dually represents `A`;
/// 6. `ΔP = (P ⊗ id - id ⊗ Q)Δ`, `δP = (P ⊗ id - id ⊗ Q)δ`,
///    `(Δ ⊗ id)Δ(P + Q) = 0`;
/// 7. the two mixed compatibilities `bi4` and `bi5` between `·`, `[-,-]`, `Δ`, `δ`.
///
/// Group 5 is tested in the `dualadj3` form. If the alternative
/// `(P+Q)(x·y·z) = 0` form ever disagrees, both sets of defects are reported.
pub fn check_bialgebra(b: &BialgebraData) -> AxiomReport {
    let a = &b.algebra;
    let (dl, dr) = (&b.coproduct, &b.cobracket);
    let (p, q) = (a.p(), &b.q);
    let n = a.dim();
    let mut r = AxiomReport::new();
    r.merge(check_rel_poisson(a).prefixed("1"));
    r.merge(check_rel_poisson_coalgebra(dl, dr, q).prefixed("2"));

    let ls: Vec<Matrix> = (0..n).map(|i| a.l(i)).collect();
    let ads: Vec<Matrix> = (0..n).map(|i| a.ad(i)).collect();
    let dli: Vec<Matrix> = (0..n).map(|k| dl.image(k)).collect();
    let dri: Vec<Matrix> = (0..n).map(|k| dr.image(k)).collect();
    for i in 0..n {
        for j in 0..n {
            let y = basis_vec(n, j);
            let xy = a.dot().basis_product(i, j);
            let d = dl
                .apply(xy)
                .sub(&apply_left(&ls[i], &dli[j]))
                .sub(&apply_right(&ls[j], &dli[i]));
            r.check("3/infinitesimal", &[i, j], flat(&d));
            let both = |m: &Matrix, t: &Matrix| apply_left(m, t).add(&apply_right(m, t));
            let d = dr
                .apply(a.bracket().basis_product(i, j))
                .sub(&both(&ads[i], &dri[j]))
                .add(&both(&ads[j], &dri[i]));
            r.check("4/lie-bialgebra", &[i, j], flat(&d));
            // δ(x·y) - (id⊗ad y)Δ(x) - (L(x)⊗id)δ(y) - (id⊗ad x)Δ(y)
            //   - (L(y)⊗id)δ(x) - (id⊗Q)Δ(x·y)
            let d = dr
                .apply(xy)
                .sub(&apply_right(&ads[j], &dli[i]))
                .sub(&apply_left(&ls[i], &dri[j]))
                .sub(&apply_right(&ads[i], &dli[j]))
                .sub(&apply_left(&ls[j], &dri[i]))
                .sub(&apply_right(q, &dl.apply(xy)));
            r.check("7/bi4", &[i, j], flat(&d));
            // Δ([x,y]) - (L(y)⊗id)δ(x) - (id⊗ad x)Δ(y) + (id⊗L(y))δ(x)
            //   - (ad x⊗id)Δ(y) + Δ(P(x)·y)
            let pxy = a.mul(&p.column(i), &y);
            let d = dl
                .apply(a.bracket().basis_product(i, j))
                .sub(&apply_left(&ls[j], &dri[i]))
                .sub(&apply_right(&ads[i], &dli[j]))
                .add(&apply_right(&ls[j], &dri[i]))
                .sub(&apply_left(&ads[i], &dli[j]))
                .add(&dl.apply(&pxy));
            r.check("7/bi5", &[i, j], flat(&d));
        }
    }

    let primary = check_dually_represents(a, q);
    let alternative = check_dually_represents_unit_form(a, q);
    let diverge = primary.ok() != alternative.ok();
    r.merge(primary.prefixed("5"));
    if diverge {
        r.merge(alternative.prefixed("5-unit-form"));
    }

    let pq = p.add(q);
    for k in 0..n {
        let pk = p.column(k);
        let rhs = apply_left(p, &dli[k]).sub(&apply_right(q, &dli[k]));
        r.check("6/bi1", &[k], flat(&dl.apply(&pk).sub(&rhs)));
        let rhs = apply_left(p, &dri[k]).sub(&apply_right(q, &dri[k]));
        r.check("6/bi2", &[k], flat(&dr.apply(&pk).sub(&rhs)));
        r.check("6/bi3", &[k], flat3(&dl.after_left(&dl.apply(&pq.column(k)))));
    }
    r
}

/// The dual bialgebra `(A*, Δ*, δ*, Q*, Δ_{A*}, δ_{A*}, P*)` with
/// `⟨Δ_{A*}(a*), x ⊗ y⟩ = -⟨a*, x·y⟩` and `⟨δ_{A*}(a*), x ⊗ y⟩ = -⟨a*, [x,y]⟩`.
pub fn dualize_bialgebra(b: &BialgebraData) -> Result<BialgebraData, Error> {
    require("bialgebra", check_bialgebra(b))?;
    Ok(dualize_bialgebra_unchecked(b))
}

pub fn dualize_bialgebra_unchecked(b: &BialgebraData) -> BialgebraData {
    let minus = crate::linear::int(-1);
    BialgebraData {
        algebra: b.dual_algebra(),
        coproduct: dual_algebra_to_comult(b.algebra.dot()).scale(&minus),
        cobracket: dual_algebra_to_comult(b.algebra.bracket()).scale(&minus),
        q: b.algebra.p().transpose(),
    }
}

/// The matched pair `(A, A*, -L*_A, ad*_A, -L*_{A*}, ad*_{A*})`.
pub fn bialgebra_to_matched_pair(b: &BialgebraData) -> Result<MatchedPairData, Error> {
    require("bialgebra", check_bialgebra(b))?;
    bialgebra_to_matched_pair_unchecked(b)
}

pub fn bialgebra_to_matched_pair_unchecked(b: &BialgebraData) -> Result<MatchedPairData, Error> {
    dual_matched_pair(&b.algebra, &b.dual_algebra())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linear::int;

    fn sp(n: usize) -> Space {
        Space::standard("e", n)
    }

    #[test]
    fn group_like_coproduct_is_coassociative() {
        // Δ(e1) = e1 ⊗ e1
        let d = Comultiplication::from_entries(&sp(1), &[(0, 0, 0, int(1))]).unwrap();
        assert!(check_cocomm_coassoc(&d).ok());
        let dual = comult_to_dual_algebra(&d);
        assert_eq!(dual.space().label(0), "e1*");
        assert_eq!(dual.get(0, 0, 0), &int(1));
        assert_eq!(dual_algebra_to_comult(&dual), d);
    }

    #[test]
    fn non_cocommutative_is_located() {
        // Δ(e3) = e1 ⊗ e2
        let d = Comultiplication::from_entries(&sp(3), &[(0, 1, 2, int(1))]).unwrap();
        let r = check_cocomm_coassoc(&d);
        assert!(!r.holds("cocommutativity"));
        assert_eq!(r.violations()[0].indices, vec![2]);
    }

    #[test]
    fn antisymmetric_cobracket() {
        // δ(e3) = e1 ⊗ e2 - e2 ⊗ e1 is a Lie coalgebra (dual of the Heisenberg bracket)
        let d = Comultiplication::from_entries(&sp(3), &[(0, 1, 2, int(1)), (1, 0, 2, int(-1))]).unwrap();
        assert!(check_lie_coalgebra(&d).ok());
        let half = Comultiplication::from_entries(&sp(3), &[(0, 1, 2, int(1))]).unwrap();
        assert!(!check_lie_coalgebra(&half).holds("coantisymmetry"));
    }

    #[test]
    fn zero_comultiplications_over_relative_poisson_algebra() {
        let s = sp(3);
        let dot = BilinearOp::from_int_entries(&s, &[(0, 0, 2, 2), (0, 1, 2, 1), (1, 0, 2, 1)]);
        let br = BilinearOp::from_int_entries(&s, &[(0, 1, 2, 1), (1, 0, 2, -1)]);
        let p = Matrix::from_ints(&[&[1, 0, 0], &[1, 2, 0], &[0, 0, 3]]);
        let a = RelPoissonAlgebra::verified(dot, br, p.clone()).unwrap();
        let z = Comultiplication::zero(&s);
        let b = BialgebraData::new(a, z.clone(), z, p.neg()).unwrap();
        assert!(check_bialgebra(&b).ok());
        let d = dualize_bialgebra(&b).unwrap();
        assert!(check_bialgebra(&d).ok());
        assert!(d.algebra.dot().is_zero());
        assert_eq!(d.coproduct.get(0, 0, 2), &int(-2));
    }
}
