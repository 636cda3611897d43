//! Bilinear forms, matched pairs of relative Poisson algebras, and Manin
//! triples with respect to the canonical pairing on `A ⊕ A*`.

use num_traits::{One, Zero};

use crate::algebra::{check_rel_poisson, RelPoissonAlgebra};
use crate::error::{require, Error};
use crate::linear::{axpy, basis_vec, combine, int, sub_vec, Matrix, Scalar, Space};
use crate::rep::{assemble, check_representation, CompatibleStructure, RepData};
use crate::report::AxiomReport;

/// `B(x, y) = xᵀ G y` on a based space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinForm {
    pub space: Space,
    pub gram: Matrix,
}

impl BilinForm {
    pub fn new(space: Space, gram: Matrix) -> Result<Self, Error> {
        let n = space.dim();
        if gram.rows() != n || gram.cols() != n {
            return Err(Error::Shape(format!("Gram matrix must be {n}x{n}")));
        }
        Ok(BilinForm { space, gram })
    }

    /// `B_d(x + a*, y + b*) = ⟨x, b*⟩ + ⟨a*, y⟩` on `A ⊕ A*`, with the basis of
    /// `A` first.
    pub fn canonical_pairing(a: &Space) -> BilinForm {
        let n = a.dim();
        let gram = Matrix::from_fn(2 * n, 2 * n, |i, j| {
            if i + n == j || j + n == i {
                Scalar::one()
            } else {
                Scalar::zero()
            }
        });
        BilinForm {
            space: a.direct_sum(&a.dual()),
            gram,
        }
    }

    pub fn eval(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        x.iter()
            .zip(self.gram.apply(y))
            .fold(Scalar::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn is_symmetric(&self) -> bool {
        self.gram == self.gram.transpose()
    }

    pub fn is_nondegenerate(&self) -> bool {
        !self.gram.determinant().is_zero()
    }
}

/// Checks `B(x·y, z) = B(x, y·z)` and `B([x,y], z) = B(x, [y,z])` on basis
/// triples. Symmetry and nondegeneracy are separate predicates on the form.
pub fn check_invariant_form(a: &RelPoissonAlgebra, b: &BilinForm) -> AxiomReport {
    let n = a.dim();
    let mut r = AxiomReport::new();
    for i in 0..n {
        let x = basis_vec(n, i);
        for j in 0..n {
            for k in 0..n {
                let z = basis_vec(n, k);
                let d = b.eval(a.dot().basis_product(i, j), &z) - b.eval(&x, a.dot().basis_product(j, k));
                r.check("invariant-product", &[i, j, k], vec![d]);
                let d = b.eval(a.bracket().basis_product(i, j), &z) - b.eval(&x, a.bracket().basis_product(j, k));
                r.check("invariant-bracket", &[i, j, k], vec![d]);
            }
        }
    }
    r
}

/// The map `P̂` with `B(P x, y) = B(x, P̂ y)`, namely `G⁻¹ Pᵀ G`.
pub fn adjoint_of(p: &Matrix, b: &BilinForm) -> Result<Matrix, Error> {
    let gi = b.gram.inverse().ok_or(Error::Degenerate)?;
    Ok(gi.mul(&p.transpose()).mul(&b.gram))
}

/// Two relative Poisson algebras acting on each other: `μ₁, ρ₁` send a basis
/// element of `A₁` to an endomorphism of `A₂`, and `μ₂, ρ₂` the other way.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchedPairData {
    pub a1: RelPoissonAlgebra,
    pub a2: RelPoissonAlgebra,
    pub mu1: Vec<Matrix>,
    pub rho1: Vec<Matrix>,
    pub mu2: Vec<Matrix>,
    pub rho2: Vec<Matrix>,
}

impl MatchedPairData {
    pub fn new(
        a1: RelPoissonAlgebra,
        a2: RelPoissonAlgebra,
        mu1: Vec<Matrix>,
        rho1: Vec<Matrix>,
        mu2: Vec<Matrix>,
        rho2: Vec<Matrix>,
    ) -> Result<Self, Error> {
        let (n1, n2) = (a1.dim(), a2.dim());
        let ok1 = mu1.len() == n1 && rho1.len() == n1;
        let ok2 = mu2.len() == n2 && rho2.len() == n2;
        let sq1 = mu1.iter().chain(&rho1).all(|m| m.rows() == n2 && m.cols() == n2);
        let sq2 = mu2.iter().chain(&rho2).all(|m| m.rows() == n1 && m.cols() == n1);
        if !(ok1 && ok2 && sq1 && sq2) {
            return Err(Error::Shape("matched pair actions have the wrong shape".into()));
        }
        Ok(MatchedPairData {
            a1,
            a2,
            mu1,
            rho1,
            mu2,
            rho2,
        })
    }

    fn rep1(&self) -> RepData {
        RepData {
            compat: CompatibleStructure {
                algebra: self.a1.clone(),
                module: self.a2.space().clone(),
                mu: self.mu1.clone(),
                rho: self.rho1.clone(),
            },
            alpha: self.a2.p().clone(),
        }
    }

    fn rep2(&self) -> RepData {
        RepData {
            compat: CompatibleStructure {
                algebra: self.a2.clone(),
                module: self.a1.space().clone(),
                mu: self.mu2.clone(),
                rho: self.rho2.clone(),
            },
            alpha: self.a1.p().clone(),
        }
    }
}

/// The matched pair carried by `A ⊕ A*` for relative Poisson algebras on `A`
/// and `A*`: `(-L*_A, ad*_A, -L*_{A*}, ad*_{A*})`.
pub fn dual_matched_pair(a: &RelPoissonAlgebra, a_dual: &RelPoissonAlgebra) -> Result<MatchedPairData, Error> {
    if a_dual.dim() != a.dim() {
        return Err(Error::Shape("dual algebra has a different dimension".into()));
    }
    let n = a.dim();
    let coadj = |alg: &RelPoissonAlgebra| -> (Vec<Matrix>, Vec<Matrix>) {
        (
            (0..n).map(|i| alg.l(i).transpose()).collect(),
            (0..n).map(|i| alg.ad(i).transpose().neg()).collect(),
        )
    };
    let (mu1, rho1) = coadj(a);
    let (mu2, rho2) = coadj(a_dual);
    MatchedPairData::new(a.clone(), a_dual.clone(), mu1, rho1, mu2, rho2)
}

/// Checks a matched pair: both algebras, both representations
/// `(μ₁, ρ₁, P₂, A₂)` and `(μ₂, ρ₂, P₁, A₁)`, the commutative associative and
/// Lie matched pair identities, and the four mixed identities `mp1`-`mp4`.
pub fn check_matched_pair(m: &MatchedPairData) -> AxiomReport {
    let mut r = AxiomReport::new();
    r.merge(check_rel_poisson(&m.a1).prefixed("a1"));
    r.merge(check_rel_poisson(&m.a2).prefixed("a2"));
    r.merge(check_representation(&m.rep1()).prefixed("rep-of-a1"));
    r.merge(check_representation(&m.rep2()).prefixed("rep-of-a2"));

    let (a1, a2) = (&m.a1, &m.a2);
    let (n1, n2) = (a1.dim(), a2.dim());
    let mu1 = |x: &[Scalar]| combine(&m.mu1, x, n2, n2);
    let rho1 = |x: &[Scalar]| combine(&m.rho1, x, n2, n2);
    let mu2 = |a: &[Scalar]| combine(&m.mu2, a, n1, n1);
    let rho2 = |a: &[Scalar]| combine(&m.rho2, a, n1, n1);
    let minus = int(-1);
    let one = int(1);
    let sum = |terms: &[(&Scalar, Vec<Scalar>)], len: usize| {
        let mut acc = vec![Scalar::zero(); len];
        for (s, v) in terms {
            axpy(&mut acc, s, v);
        }
        acc
    };

    // Families indexed by (x, y) ∈ A₁² and a ∈ A₂.
    for i in 0..n1 {
        let x = basis_vec(n1, i);
        for j in 0..n1 {
            let y = basis_vec(n1, j);
            let xy = a1.mul(&x, &y);
            for k in 0..n2 {
                let a = basis_vec(n2, k);
                let idx = [i, j, k];
                // μ₂(a)(x·y) - (μ₂(a)x)·y - μ₂(μ₁(x)a)y
                let d = sum(
                    &[
                        (&one, mu2(&a).apply(&xy)),
                        (&minus, a1.mul(&mu2(&a).apply(&x), &y)),
                        (&minus, mu2(&mu1(&x).apply(&a)).apply(&y)),
                    ],
                    n1,
                );
                r.check("assoc-mp2", &idx, d);
                // ρ₂(a)[x,y] - [ρ₂(a)x, y] - [x, ρ₂(a)y] + ρ₂(ρ₁(x)a)y - ρ₂(ρ₁(y)a)x
                let d = sum(
                    &[
                        (&one, rho2(&a).apply(&a1.br(&x, &y))),
                        (&minus, a1.br(&rho2(&a).apply(&x), &y)),
                        (&minus, a1.br(&x, &rho2(&a).apply(&y))),
                        (&one, rho2(&rho1(&x).apply(&a)).apply(&y)),
                        (&minus, rho2(&rho1(&y).apply(&a)).apply(&x)),
                    ],
                    n1,
                );
                r.check("lie-mp2", &idx, d);
                // ρ₂(a)(x·y) + μ₂(ρ₁(y)a)x - x·ρ₂(a)y + μ₂(ρ₁(x)a)y - y·ρ₂(a)x
                //   - μ₂(P₂ a)(x·y)
                let pa = a2.p().apply(&a);
                let d = sum(
                    &[
                        (&one, rho2(&a).apply(&xy)),
                        (&one, mu2(&rho1(&y).apply(&a)).apply(&x)),
                        (&minus, a1.mul(&x, &rho2(&a).apply(&y))),
                        (&one, mu2(&rho1(&x).apply(&a)).apply(&y)),
                        (&minus, a1.mul(&y, &rho2(&a).apply(&x))),
                        (&minus, mu2(&pa).apply(&xy)),
                    ],
                    n1,
                );
                r.check("mp1", &idx, d);
                // ρ₂(μ₁(x)a)y + [μ₂(a)x, y] - x·ρ₂(a)y + μ₂(ρ₁(y)a)x - μ₂(a)[x,y]
                //   + μ₂(a)(x·P₁ y)
                let py = a1.p().apply(&y);
                let d = sum(
                    &[
                        (&one, rho2(&mu1(&x).apply(&a)).apply(&y)),
                        (&one, a1.br(&mu2(&a).apply(&x), &y)),
                        (&minus, a1.mul(&x, &rho2(&a).apply(&y))),
                        (&one, mu2(&rho1(&y).apply(&a)).apply(&x)),
                        (&minus, mu2(&a).apply(&a1.br(&x, &y))),
                        (&one, mu2(&a).apply(&a1.mul(&x, &py))),
                    ],
                    n1,
                );
                r.check("mp3", &idx, d);
            }
        }
    }

    // Families indexed by x ∈ A₁ and (a, b) ∈ A₂².
    for i in 0..n1 {
        let x = basis_vec(n1, i);
        for k in 0..n2 {
            let a = basis_vec(n2, k);
            for l in 0..n2 {
                let b = basis_vec(n2, l);
                let ab = a2.mul(&a, &b);
                let idx = [i, k, l];
                // μ₁(x)(a·b) - (μ₁(x)a)·b - μ₁(μ₂(a)x)b
                let d = sum(
                    &[
                        (&one, mu1(&x).apply(&ab)),
                        (&minus, a2.mul(&mu1(&x).apply(&a), &b)),
                        (&minus, mu1(&mu2(&a).apply(&x)).apply(&b)),
                    ],
                    n2,
                );
                r.check("assoc-mp1", &idx, d);
                // ρ₁(x)[a,b] - [ρ₁(x)a, b] - [a, ρ₁(x)b] + ρ₁(ρ₂(a)x)b - ρ₁(ρ₂(b)x)a
                let d = sum(
                    &[
                        (&one, rho1(&x).apply(&a2.br(&a, &b))),
                        (&minus, a2.br(&rho1(&x).apply(&a), &b)),
                        (&minus, a2.br(&a, &rho1(&x).apply(&b))),
                        (&one, rho1(&rho2(&a).apply(&x)).apply(&b)),
                        (&minus, rho1(&rho2(&b).apply(&x)).apply(&a)),
                    ],
                    n2,
                );
                r.check("lie-mp1", &idx, d);
                // ρ₁(x)(a·b) + μ₁(ρ₂(b)x)a - a·ρ₁(x)b + μ₁(ρ₂(a)x)b - b·ρ₁(x)a
                //   - μ₁(P₁ x)(a·b)
                let px = a1.p().apply(&x);
                let d = sum(
                    &[
                        (&one, rho1(&x).apply(&ab)),
                        (&one, mu1(&rho2(&b).apply(&x)).apply(&a)),
                        (&minus, a2.mul(&a, &rho1(&x).apply(&b))),
                        (&one, mu1(&rho2(&a).apply(&x)).apply(&b)),
                        (&minus, a2.mul(&b, &rho1(&x).apply(&a))),
                        (&minus, mu1(&px).apply(&ab)),
                    ],
                    n2,
                );
                r.check("mp2", &idx, d);
                // ρ₁(μ₂(a)x)b + [μ₁(x)a, b] - a·ρ₁(x)b + μ₁(ρ₂(b)x)a - μ₁(x)[a,b]
                //   + μ₁(x)(a·P₂ b)
                let pb = a2.p().apply(&b);
                let d = sum(
                    &[
                        (&one, rho1(&mu2(&a).apply(&x)).apply(&b)),
                        (&one, a2.br(&mu1(&x).apply(&a), &b)),
                        (&minus, a2.mul(&a, &rho1(&x).apply(&b))),
                        (&one, mu1(&rho2(&b).apply(&x)).apply(&a)),
                        (&minus, mu1(&x).apply(&a2.br(&a, &b))),
                        (&one, mu1(&x).apply(&a2.mul(&a, &pb))),
                    ],
                    n2,
                );
                r.check("mp4", &idx, d);
            }
        }
    }
    r
}

/// `A₁ ⋈ A₂` without checking the matched pair identities.
pub fn bowtie_unchecked(m: &MatchedPairData) -> RelPoissonAlgebra {
    assemble(&m.a1, &m.a2, &m.mu1, &m.rho1, &m.mu2, &m.rho2)
}

/// The relative Poisson algebra `A₁ ⋈ A₂` on `A₁ ⊕ A₂` with derivation
/// `P₁ + P₂`:
/// `(x+a)·(y+b) = x·y + μ₂(a)y + μ₂(b)x + a·b + μ₁(x)b + μ₁(y)a`,
/// `[x+a, y+b] = [x,y] + ρ₂(a)y - ρ₂(b)x + [a,b] + ρ₁(x)b - ρ₁(y)a`.
pub fn bowtie(m: &MatchedPairData) -> Result<RelPoissonAlgebra, Error> {
    require("matched pair", check_matched_pair(m))?;
    Ok(bowtie_unchecked(m))
}

/// Checks that `double` on `A ⊕ A*` is a Manin triple for `A` and `A*` with
/// respect to `B_d`: the double is a relative Poisson algebra, its derivation
/// is `P + Q*`, both halves are subalgebras carrying the given structures, and
/// `B_d` is invariant (it is symmetric and nondegenerate by construction).
pub fn check_manin_triple(
    a: &RelPoissonAlgebra,
    a_dual: &RelPoissonAlgebra,
    double: &RelPoissonAlgebra,
) -> Result<AxiomReport, Error> {
    let n = a.dim();
    if a_dual.dim() != n || double.dim() != 2 * n {
        return Err(Error::Shape("Manin triple needs dim(double) = 2 dim(A) = 2 dim(A*)".into()));
    }
    let mut r = check_rel_poisson(double).prefixed("double");
    let expected_p = a.p().direct_sum(a_dual.p());
    check_blocks(&mut r, "derivation-split", double.p(), &expected_p);
    for (half, off, name) in [(a, 0, "subalgebra-a"), (a_dual, n, "subalgebra-a*")] {
        for i in 0..n {
            for j in 0..n {
                for (ops, label) in [
                    ((double.dot(), half.dot()), "product"),
                    ((double.bracket(), half.bracket()), "bracket"),
                ] {
                    let got = ops.0.basis_product(off + i, off + j);
                    let mut want = vec![Scalar::zero(); 2 * n];
                    for k in 0..n {
                        want[off + k] = ops.1.get(i, j, k).clone();
                    }
                    r.check(&format!("{name}/{label}"), &[i, j], sub_vec(got, &want));
                }
            }
        }
    }
    let b = BilinForm::canonical_pairing(a.space());
    r.merge(check_invariant_form(double, &b).prefixed("pairing"));
    Ok(r)
}

fn check_blocks(r: &mut AxiomReport, axiom: &str, got: &Matrix, want: &Matrix) {
    crate::rep::check_columns(r, axiom, &[], &got.sub(want));
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::BilinearOp;

    #[test]
    fn canonical_pairing_is_symmetric_nondegenerate() {
        let b = BilinForm::canonical_pairing(&Space::standard("e", 3));
        assert!(b.is_symmetric());
        assert!(b.is_nondegenerate());
        assert_eq!(b.space.label(3), "e1*");
        assert_eq!(b.eval(&basis_vec(6, 0), &basis_vec(6, 3)), int(1));
        assert_eq!(b.eval(&basis_vec(6, 0), &basis_vec(6, 4)), int(0));
    }

    #[test]
    fn adjoint_under_pairing_swaps_blocks() {
        // P ⊕ Q* has adjoint Q ⊕ P* under B_d.
        let p = Matrix::from_ints(&[&[1, 0], &[1, 2]]);
        let q = Matrix::from_ints(&[&[0, 3], &[0, -1]]);
        let b = BilinForm::canonical_pairing(&Space::standard("e", 2));
        let hat = adjoint_of(&p.direct_sum(&q.transpose()), &b).unwrap();
        assert_eq!(hat, q.direct_sum(&p.transpose()));
    }

    #[test]
    fn degenerate_form_has_no_adjoint() {
        let b = BilinForm::new(Space::standard("e", 2), Matrix::from_ints(&[&[1, 1], &[1, 1]])).unwrap();
        assert!(!b.is_nondegenerate());
        assert!(matches!(adjoint_of(&Matrix::identity(2), &b), Err(Error::Degenerate)));
    }

    #[test]
    fn trace_form_on_unital_algebra_is_invariant() {
        // K[x]/(x²) with B(1, x) = B(x, 1) = 1
        let s = Space::standard("e", 2);
        let dot = BilinearOp::from_int_entries(&s, &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1)]);
        let a = RelPoissonAlgebra::new(dot, BilinearOp::zero(&s), Matrix::zeros(2, 2)).unwrap();
        let b = BilinForm::new(s, Matrix::from_ints(&[&[0, 1], &[1, 0]])).unwrap();
        assert!(check_invariant_form(&a, &b).ok());
        let bad = BilinForm::new(b.space.clone(), Matrix::from_ints(&[&[1, 0], &[0, 1]])).unwrap();
        assert!(!check_invariant_form(&a, &bad).ok());
    }
}
