//! Unital extensions of relative Poisson algebras and the full passage from a
//! relative pre-Poisson algebra to a Frobenius Jacobi algebra.

use num_traits::Zero;

use crate::algebra::{check_jacobi_algebra, check_rel_poisson, find_unit, BilinearOp, RelPoissonAlgebra};
use crate::coalgebra::{bialgebra_to_matched_pair, check_bialgebra, BialgebraData};
use crate::error::{require, Error};
use crate::linear::{sub_vec, Matrix, Scalar, Space};
use crate::pairing::{bowtie, check_invariant_form, check_manin_triple, check_matched_pair, BilinForm, MatchedPairData};
use crate::pre_poisson::{check_rel_pre_poisson, subadjacent, RelPrePoissonAlgebra};
use crate::rep::{check_representation, CompatibleStructure, RepData};
use crate::report::AxiomReport;
use crate::yang_baxter::{check_rpybe, check_weak_o_operator, coboundary_comults, o_operator_to_rmatrix, RMatrix};

/// Label of the adjoined unit, primed until it is fresh.
fn unit_label(space: &Space) -> String {
    let mut l = String::from("e");
    while space.index_of(&l).is_some() {
        l.push('\'');
    }
    l
}

/// `Ã = K e ⊕ A` with `e·x = x`, `e·e = e`, `[e, x] = P(x)`, `[e, e] = 0`;
/// `e` is the first basis vector. The result is a Jacobi algebra whose
/// derivation `P̃ = 0 ⊕ P` equals `ad(e)`.
pub fn extend_jacobi(a: &RelPoissonAlgebra) -> Result<RelPoissonAlgebra, Error> {
    require("relative Poisson algebra", check_rel_poisson(a))?;
    Ok(extend_jacobi_unchecked(a))
}

pub fn extend_jacobi_unchecked(a: &RelPoissonAlgebra) -> RelPoissonAlgebra {
    let n = a.dim();
    let labels = std::iter::once(unit_label(a.space())).chain(a.space().labels().iter().cloned());
    let space = Space::new(labels).expect("fresh unit label");
    let one = Scalar::from_integer(1.into());
    let mut dot = BilinearOp::zero(&space);
    let mut br = BilinearOp::zero(&space);
    dot.set(0, 0, 0, one.clone());
    for i in 0..n {
        dot.set(0, i + 1, i + 1, one.clone());
        dot.set(i + 1, 0, i + 1, one.clone());
        for k in 0..n {
            let pik = a.p()[(k, i)].clone();
            br.set(0, i + 1, k + 1, pik.clone());
            br.set(i + 1, 0, k + 1, -pik);
            for j in 0..n {
                dot.set(i + 1, j + 1, k + 1, a.dot().get(i, j, k).clone());
                br.set(i + 1, j + 1, k + 1, a.bracket().get(i, j, k).clone());
            }
        }
    }
    let p = Matrix::zeros(1, 1).direct_sum(a.p());
    RelPoissonAlgebra::new(dot, br, p).expect("shapes agree")
}

/// The representation `(μ̃, ρ̃, α, V)` of `Ã` with `μ̃(e) = id` and
/// `ρ̃(e) = α`.
pub fn extend_representation(rep: &RepData) -> Result<RepData, Error> {
    require("representation", check_representation(rep))?;
    Ok(extend_representation_unchecked(rep))
}

pub fn extend_representation_unchecked(rep: &RepData) -> RepData {
    let c = &rep.compat;
    let m = c.module_dim();
    let algebra = extend_jacobi_unchecked(&c.algebra);
    let mu = std::iter::once(Matrix::identity(m)).chain(c.mu.iter().cloned()).collect();
    let rho = std::iter::once(rep.alpha.clone()).chain(c.rho.iter().cloned()).collect();
    RepData {
        compat: CompatibleStructure {
            algebra,
            module: c.module.clone(),
            mu,
            rho,
        },
        alpha: rep.alpha.clone(),
    }
}

/// A weak O-operator `T: V → A` seen as a map `V → Ã` (zero `e`-component),
/// together with the extended representation it is an O-operator of.
pub fn lift_o_operator(rep: &RepData, t: &Matrix) -> Result<(RepData, Matrix), Error> {
    require("weak O-operator", check_weak_o_operator(&rep.compat, &rep.alpha, t)?)?;
    let ext = extend_representation(rep)?;
    let lifted = Matrix::zeros(1, t.cols()).vstack(t);
    require("lifted O-operator", check_weak_o_operator(&ext.compat, &ext.alpha, &lifted)?)?;
    Ok((ext, lifted))
}

/// A Jacobi algebra with a symmetric, nondegenerate, invariant bilinear form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusJacobiAlgebra {
    pub algebra: RelPoissonAlgebra,
    pub form: BilinForm,
}

/// Checks the Jacobi algebra axioms, `P = ad(1)`, and that the form is
/// symmetric, nondegenerate and invariant.
pub fn check_frobenius_jacobi(f: &FrobeniusJacobiAlgebra) -> Result<AxiomReport, Error> {
    let a = &f.algebra;
    let unit = find_unit(a.dot()).ok_or(Error::NoUnit)?;
    let mut r = check_jacobi_algebra(a.dot(), a.bracket())?;
    let ad1 = a.bracket().left_of(&unit);
    crate::rep::check_columns(&mut r, "derivation-is-ad-unit", &[], &a.p().sub(&ad1));
    crate::rep::check_columns(&mut r, "form-symmetric", &[], &f.form.gram.sub(&f.form.gram.transpose()));
    if !f.form.is_nondegenerate() {
        r.check("form-nondegenerate", &[], vec![Scalar::from_integer(1.into())]);
    }
    r.merge(check_invariant_form(a, &f.form));
    Ok(r)
}

/// A named stage of the pipeline and the checks run on its output.
#[derive(Clone, Debug)]
pub struct Stage {
    pub name: &'static str,
    pub report: AxiomReport,
}

/// Every intermediate structure of [`frobenius_jacobi_pipeline`].
#[derive(Clone, Debug)]
pub struct PipelineOutput {
    pub input: RelPrePoissonAlgebra,
    /// Sub-adjacent relative Poisson algebra `A` with representation
    /// `(L_⋆, L_∘, P, A)`.
    pub subadjacent: RelPoissonAlgebra,
    pub subadjacent_rep: RepData,
    /// `Ã` with its extended representation.
    pub extended: RelPoissonAlgebra,
    pub extended_rep: RepData,
    /// `J = Ã ⋉ A*` with basis relabeled `E, E1, ..., Em`.
    pub jacobi: RelPoissonAlgebra,
    pub r: RMatrix,
    pub q: Matrix,
    pub bialgebra: BialgebraData,
    pub dual: RelPoissonAlgebra,
    pub matched_pair: MatchedPairData,
    pub frobenius: FrobeniusJacobiAlgebra,
    pub stages: Vec<Stage>,
}

fn stage(stages: &mut Vec<Stage>, name: &'static str, report: AxiomReport) -> Result<(), Error> {
    stages.push(Stage {
        name,
        report: report.clone(),
    });
    require(name, report)
}

/// Relative pre-Poisson algebra `(A, ⋆, ∘, P)` to the Frobenius Jacobi
/// algebra `J ⋈ J*`:
///
/// 1. sub-adjacent algebra `A` and its representation `(L_⋆, L_∘, P, A)`;
/// 2. unital extension `Ã` and the extended representation;
/// 3. `J = Ã ⋉_{-L̃_⋆*, L̃_∘*} A*` with derivation `P̃ - P*` and
///    `r = Σ e_i ⊗ e_i* - e_i* ⊗ e_i`, a solution of the
///    `(-P̃ + P*)`-relative Poisson Yang-Baxter equation;
/// 4. the coboundary bialgebra `(J, Δ_r, δ_r, P̃ - P*, -P̃ + P*)`;
/// 5. the induced matched pair and its double `J ⋈ J*` with the form `B_d`.
///
/// Every stage is verified; the first failing stage aborts with a
/// precondition error carrying its report.
pub fn frobenius_jacobi_pipeline(pp: &RelPrePoissonAlgebra) -> Result<PipelineOutput, Error> {
    let mut stages = Vec::new();
    stage(&mut stages, "relative pre-Poisson input", check_rel_pre_poisson(pp))?;

    let (sub, rep) = subadjacent(pp)?;
    let n = sub.dim();
    let mut r = check_rel_poisson(&sub);
    r.merge(check_representation(&rep).prefixed("representation"));
    r.merge(check_weak_o_operator(&rep.compat, &rep.alpha, &Matrix::identity(n))?.prefixed("identity"));
    stage(&mut stages, "sub-adjacent algebra", r)?;

    let (ext_rep, t) = lift_o_operator(&rep, &Matrix::identity(n))?;
    let ext = ext_rep.compat.algebra.clone();
    let mut r = check_jacobi_algebra(ext.dot(), ext.bracket())?;
    r.merge(check_rel_poisson(&ext).prefixed("relative"));
    r.merge(check_representation(&ext_rep).prefixed("representation"));
    stage(&mut stages, "unital extension", r)?;

    let alpha = ext_rep.alpha.clone();
    let beta = alpha.neg();
    let q_ext = ext.p().neg();
    let built = o_operator_to_rmatrix(&ext_rep, &beta, &q_ext, &t)?;
    let m = built.algebra.dim();
    let labels = std::iter::once("E".to_string()).chain((1..m).map(|i| format!("E{i}")));
    let j_space = Space::new(labels)?;
    let jacobi = built.algebra.relabeled(&j_space)?;
    let rm = built.r.relabeled(&j_space)?;
    let q = built.q.clone();
    let mut r = check_rpybe(&jacobi, &q, &rm)?;
    r.merge(check_jacobi_algebra(jacobi.dot(), jacobi.bracket())?.prefixed("jacobi"));
    stage(&mut stages, "r-matrix", r)?;

    let (dl, dr) = coboundary_comults(&jacobi, &rm)?;
    let unit = find_unit(jacobi.dot()).ok_or(Error::NoUnit)?;
    let bialgebra = BialgebraData::new(jacobi.clone(), dl, dr, q.clone())?;
    let mut r = check_bialgebra(&bialgebra);
    let n_j = jacobi.dim();
    r.check("unit-coproduct", &[], bialgebra.coproduct.apply(&unit).as_slice().to_vec());
    r.check("unit-cobracket", &[], bialgebra.cobracket.apply(&unit).as_slice().to_vec());
    stage(&mut stages, "bialgebra", r)?;

    let mp = bialgebra_to_matched_pair(&bialgebra)?;
    let dual = mp.a2.clone();
    stage(&mut stages, "matched pair", check_matched_pair(&mp))?;

    let double = bowtie(&mp)?;
    let mut r = check_manin_triple(&jacobi, &dual, &double)?;
    let form = BilinForm::canonical_pairing(jacobi.space());
    let frobenius = FrobeniusJacobiAlgebra {
        algebra: double,
        form,
    };
    r.merge(check_frobenius_jacobi(&frobenius)?.prefixed("frobenius"));
    let big_unit = find_unit(frobenius.algebra.dot()).ok_or(Error::NoUnit)?;
    let mut expect = unit.clone();
    expect.resize(2 * n_j, Scalar::zero());
    r.check("unit-of-double", &[], sub_vec(&big_unit, &expect));
    stage(&mut stages, "Frobenius Jacobi double", r)?;

    Ok(PipelineOutput {
        input: pp.clone(),
        subadjacent: sub,
        subadjacent_rep: rep,
        extended: ext,
        extended_rep: ext_rep,
        jacobi,
        r: rm,
        q,
        bialgebra,
        dual,
        matched_pair: mp,
        frobenius,
        stages,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linear::int;

    #[test]
    fn extension_of_zero_algebra() {
        // A = K with zero products and P = 2: Ã has [e, e1] = 2 e1.
        let s = Space::standard("e", 1);
        let a = RelPoissonAlgebra::new(BilinearOp::zero(&s), BilinearOp::zero(&s), Matrix::from_ints(&[&[2]]))
            .unwrap();
        let x = extend_jacobi(&a).unwrap();
        assert_eq!(x.space().labels(), &["e".to_string(), "e1".to_string()]);
        assert_eq!(x.bracket().basis_product(0, 1), &[int(0), int(2)]);
        assert_eq!(find_unit(x.dot()), Some(vec![int(1), int(0)]));
        assert!(check_jacobi_algebra(x.dot(), x.bracket()).unwrap().ok());
        assert_eq!(x.p(), &x.bracket().left(0));
    }

    #[test]
    fn unit_label_avoids_collisions() {
        let s = Space::new(["e", "f"]).unwrap();
        let a = RelPoissonAlgebra::new(BilinearOp::zero(&s), BilinearOp::zero(&s), Matrix::zeros(2, 2)).unwrap();
        assert_eq!(extend_jacobi(&a).unwrap().space().label(0), "e'");
    }

    fn worked() -> RelPrePoissonAlgebra {
        let star = BilinearOp::from_int_entries(&Space::standard("e", 3), &[(0, 0, 2, 1), (0, 1, 2, 1)]);
        let p = Matrix::from_ints(&[&[1, 0, 0], &[1, 2, 0], &[0, 0, 3]]);
        let circ = crate::pre_poisson::circ_from_derivation(&star, &p).unwrap();
        RelPrePoissonAlgebra::new(star, circ, p).unwrap()
    }

    #[test]
    fn extended_worked_example() {
        let (a, rep) = subadjacent(&worked()).unwrap();
        let x = extend_jacobi(&a).unwrap();
        assert_eq!(x.bracket().basis_product(0, 1), &[int(0), int(1), int(1), int(0)]);
        assert_eq!(x.bracket().basis_product(0, 2), &[int(0), int(0), int(2), int(0)]);
        assert_eq!(x.bracket().basis_product(0, 3), &[int(0), int(0), int(0), int(3)]);
        let ext = extend_representation(&rep).unwrap();
        assert_eq!(ext.compat.rho[0], *a.p());
        assert_eq!(ext.compat.mu[0], Matrix::identity(3));
        assert!(check_representation(&ext).ok());
        let c = &ext.compat;
        let jr = crate::rep::check_jacobi_representation(c.algebra.dot(), c.algebra.bracket(), &c.module, &c.mu, &c.rho);
        assert!(jr.unwrap().ok());
    }

    #[test]
    fn poisson_extension_has_central_unit() {
        let s = Space::standard("e", 2);
        let br = BilinearOp::from_int_entries(&s, &[(0, 1, 1, 1), (1, 0, 1, -1)]);
        let a = RelPoissonAlgebra::new(BilinearOp::zero(&s), br.clone(), Matrix::zeros(2, 2)).unwrap();
        let x = extend_jacobi(&a).unwrap();
        assert!(x.bracket().left(0).is_zero());
        assert_eq!(x.bracket().basis_product(1, 2), &[int(0), int(0), int(1)]);
    }

    #[test]
    fn zero_representation_extends() {
        let (a, _) = subadjacent(&worked()).unwrap();
        let v = Space::standard("v", 2);
        let c = CompatibleStructure::new(a, v, vec![Matrix::zeros(2, 2); 3], vec![Matrix::zeros(2, 2); 3]).unwrap();
        let rep = RepData::new(c, Matrix::zeros(2, 2)).unwrap();
        let ext = extend_representation(&rep).unwrap();
        assert_eq!(ext.compat.mu[0], Matrix::identity(2));
        assert!(ext.compat.rho[0].is_zero());
        assert!(check_representation(&ext).ok());

        let mut bad = ext.clone();
        bad.compat.mu[0] = Matrix::identity(2).scale(&int(2));
        assert!(!check_representation(&bad).ok());
    }

    #[test]
    fn lifting_o_operators() {
        let (_, rep) = subadjacent(&worked()).unwrap();
        let (_, t) = lift_o_operator(&rep, &Matrix::identity(3)).unwrap();
        assert_eq!(t.rows(), 4);
        assert!((0..3).all(|j| t[(0, j)] == int(0)));
        let (_, z) = lift_o_operator(&rep, &Matrix::zeros(3, 3)).unwrap();
        assert!(z.is_zero());
        // does not commute with P
        let bad = Matrix::from_ints(&[&[1, 0, 0], &[0, 0, 0], &[0, 0, 0]]);
        assert!(matches!(lift_o_operator(&rep, &bad), Err(Error::Precondition { .. })));
    }

    #[test]
    fn zero_input_gives_six_dimensional_double() {
        let s = Space::standard("e", 1);
        let pp = RelPrePoissonAlgebra::new(BilinearOp::zero(&s), BilinearOp::zero(&s), Matrix::zeros(1, 1)).unwrap();
        let out = frobenius_jacobi_pipeline(&pp).unwrap();
        assert_eq!(out.frobenius.algebra.dim(), 6);
        assert!(check_frobenius_jacobi(&out.frobenius).unwrap().ok());
        assert_eq!(find_unit(out.frobenius.algebra.dot()).unwrap(), crate::linear::basis_vec(6, 0));
    }

    #[test]
    fn invalid_input_names_the_stage() {
        let s = Space::standard("e", 1);
        let star = BilinearOp::from_int_entries(&s, &[(0, 0, 0, 1)]);
        let pp = RelPrePoissonAlgebra::new(star, BilinearOp::zero(&s), Matrix::zeros(1, 1)).unwrap();
        match frobenius_jacobi_pipeline(&pp) {
            Err(Error::Precondition { name, .. }) => assert_eq!(name, "relative pre-Poisson input"),
            other => panic!("{other:?}"),
        }
    }
}
