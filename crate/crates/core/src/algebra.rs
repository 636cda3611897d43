//! Bilinear products given by structure constants, and the axiom checkers for
//! commutative associative, Lie, and relative Poisson structures.

use num_traits::Zero;

use crate::error::{require, Error};
use crate::linear::{add_vec, axpy, basis_vec, int, sub_vec, zero_vec, Matrix, Scalar, Space};
use crate::report::AxiomReport;

/// A bilinear product on a based space: `e_i ∗ e_j = Σ_k c[i][j][k] e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearOp {
    space: Space,
    c: Vec<Scalar>,
}

impl BilinearOp {
    pub fn zero(space: &Space) -> Self {
        let n = space.dim();
        BilinearOp {
            space: space.clone(),
            c: zero_vec(n * n * n),
        }
    }

    pub fn from_fn(space: &Space, mut f: impl FnMut(usize, usize, usize) -> Scalar) -> Self {
        let n = space.dim();
        let mut c = Vec::with_capacity(n * n * n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    c.push(f(i, j, k));
                }
            }
        }
        BilinearOp {
            space: space.clone(),
            c,
        }
    }

    /// Product from its nonzero constants `(i, j, k, c[i][j][k])`.
    pub fn from_entries(space: &Space, entries: &[(usize, usize, usize, Scalar)]) -> Result<Self, Error> {
        let mut op = BilinearOp::zero(space);
        let n = space.dim();
        for (i, j, k, v) in entries {
            if *i >= n || *j >= n || *k >= n {
                return Err(Error::Shape(format!("index ({i}, {j}, {k}) out of range for dimension {n}")));
            }
            op.set(*i, *j, *k, v.clone());
        }
        Ok(op)
    }

    /// Like `from_entries` with integer constants; intended for literals.
    pub fn from_int_entries(space: &Space, entries: &[(usize, usize, usize, i64)]) -> Self {
        let e: Vec<_> = entries.iter().map(|&(i, j, k, v)| (i, j, k, int(v))).collect();
        BilinearOp::from_entries(space, &e).expect("indices in range")
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    fn offset(&self, i: usize, j: usize) -> usize {
        (i * self.dim() + j) * self.dim()
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.c[self.offset(i, j) + k]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: Scalar) {
        let o = self.offset(i, j) + k;
        self.c[o] = v;
    }

    /// Coefficient vector of `e_i ∗ e_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[Scalar] {
        let o = self.offset(i, j);
        &self.c[o..o + self.dim()]
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    /// Nonzero constants as `(i, j, k, value)` in lexicographic order.
    pub fn entries(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for (k, v) in self.basis_product(i, j).iter().enumerate() {
                    if !v.is_zero() {
                        out.push((i, j, k, v.clone()));
                    }
                }
            }
        }
        out
    }

    pub fn apply(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        let mut out = zero_vec(n);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                axpy(&mut out, &(xi * yj), self.basis_product(i, j));
            }
        }
        out
    }

    /// Left multiplication operator `L(e_i)`.
    pub fn left(&self, i: usize) -> Matrix {
        let n = self.dim();
        Matrix::from_fn(n, n, |k, j| self.get(i, j, k).clone())
    }

    /// Left multiplication operator `L(x)` of a general element.
    pub fn left_of(&self, x: &[Scalar]) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for (i, xi) in x.iter().enumerate() {
            if !xi.is_zero() {
                m.add_scaled(xi, &self.left(i));
            }
        }
        m
    }

    pub fn left_all(&self) -> Vec<Matrix> {
        (0..self.dim()).map(|i| self.left(i)).collect()
    }

    pub fn scale(&self, s: &Scalar) -> BilinearOp {
        BilinearOp {
            space: self.space.clone(),
            c: self.c.iter().map(|x| s * x).collect(),
        }
    }

    pub fn add(&self, other: &BilinearOp) -> BilinearOp {
        assert_eq!(self.dim(), other.dim());
        BilinearOp {
            space: self.space.clone(),
            c: add_vec(&self.c, &other.c),
        }
    }

    /// `(x, y) ↦ y ∗ x`
    pub fn opposite(&self) -> BilinearOp {
        BilinearOp::from_fn(&self.space, |i, j, k| self.get(j, i, k).clone())
    }

    /// Same constants on a relabeled basis of equal dimension.
    pub fn relabeled(&self, space: &Space) -> Result<BilinearOp, Error> {
        if space.dim() != self.dim() {
            return Err(Error::Shape("relabeling changes the dimension".into()));
        }
        Ok(BilinearOp {
            space: space.clone(),
            c: self.c.clone(),
        })
    }

    /// Structure transported along an invertible `g`:
    /// `x ∗' y = g⁻¹(g x ∗ g y)`.
    pub fn transported(&self, g: &Matrix) -> Result<BilinearOp, Error> {
        let gi = g
            .inverse()
            .ok_or_else(|| Error::Invalid("change of basis is not invertible".into()))?;
        let n = self.dim();
        let cols: Vec<Vec<Scalar>> = (0..n).map(|j| g.column(j)).collect();
        let mut out = BilinearOp::zero(&self.space);
        for i in 0..n {
            for j in 0..n {
                let p = gi.apply(&self.apply(&cols[i], &cols[j]));
                for (k, v) in p.into_iter().enumerate() {
                    out.set(i, j, k, v);
                }
            }
        }
        Ok(out)
    }
}

/// Checks `x·y = y·x` on basis pairs and `(x·y)·z = x·(y·z)` on basis triples.
pub fn check_comm_assoc(m: &BilinearOp) -> AxiomReport {
    let mut r = AxiomReport::new();
    let n = m.dim();
    for i in 0..n {
        for j in i + 1..n {
            r.check("commutativity", &[i, j], sub_vec(m.basis_product(i, j), m.basis_product(j, i)));
        }
    }
    check_associativity(m, &mut r);
    r
}

fn check_associativity(m: &BilinearOp, r: &mut AxiomReport) {
    let n = m.dim();
    for i in 0..n {
        for j in 0..n {
            let ij = m.basis_product(i, j);
            for k in 0..n {
                let lhs = m.apply(ij, &basis_vec(n, k));
                let rhs = m.apply(&basis_vec(n, i), m.basis_product(j, k));
                r.check("associativity", &[i, j, k], sub_vec(&lhs, &rhs));
            }
        }
    }
}

/// Checks associativity alone.
pub fn check_assoc(m: &BilinearOp) -> AxiomReport {
    let mut r = AxiomReport::new();
    check_associativity(m, &mut r);
    r
}

/// Checks antisymmetry (`[x,x] = 0` and `[x,y] = -[y,x]`) and the Jacobi
/// identity on basis triples.
pub fn check_lie(m: &BilinearOp) -> AxiomReport {
    let mut r = AxiomReport::new();
    let n = m.dim();
    for i in 0..n {
        for j in i..n {
            r.check("antisymmetry", &[i, j], add_vec(m.basis_product(i, j), m.basis_product(j, i)));
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let (x, y, z) = (basis_vec(n, i), basis_vec(n, j), basis_vec(n, k));
                let mut d = m.apply(&x, m.basis_product(j, k));
                axpy(&mut d, &int(1), &m.apply(&y, m.basis_product(k, i)));
                axpy(&mut d, &int(1), &m.apply(&z, m.basis_product(i, j)));
                r.check("jacobi", &[i, j, k], d);
            }
        }
    }
    r
}

/// Checks `P(x∗y) = P(x)∗y + x∗P(y)` on basis pairs.
pub fn check_derivation(m: &BilinearOp, p: &Matrix) -> AxiomReport {
    let mut r = AxiomReport::new();
    derivation_into(m, p, "derivation", &mut r);
    r
}

fn derivation_into(m: &BilinearOp, p: &Matrix, name: &str, r: &mut AxiomReport) {
    let n = m.dim();
    let pe: Vec<Vec<Scalar>> = (0..n).map(|i| p.column(i)).collect();
    for i in 0..n {
        for j in 0..n {
            let mut d = p.apply(m.basis_product(i, j));
            axpy(&mut d, &int(-1), &m.apply(&pe[i], &basis_vec(n, j)));
            axpy(&mut d, &int(-1), &m.apply(&basis_vec(n, i), &pe[j]));
            r.check(name, &[i, j], d);
        }
    }
}

/// A basis of the space of maps that are derivations of every given product
/// simultaneously.
pub fn derivation_basis(ops: &[&BilinearOp]) -> Vec<Matrix> {
    let Some(first) = ops.first() else {
        return Vec::new();
    };
    let n = first.dim();
    // unknown P[k][m] at k*n + m; one row per (op, i, j, k)
    let mut sys = Matrix::zeros(ops.len() * n * n * n, n * n);
    for (o, op) in ops.iter().enumerate() {
        assert_eq!(op.dim(), n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let row = ((o * n + i) * n + j) * n + k;
                    for m in 0..n {
                        sys[(row, k * n + m)] += op.get(i, j, m);
                        sys[(row, m * n + i)] -= op.get(m, j, k);
                        sys[(row, m * n + j)] -= op.get(i, m, k);
                    }
                }
            }
        }
    }
    sys.nullspace()
        .into_iter()
        .map(|v| Matrix::from_fn(n, n, |k, m| v[k * n + m].clone()))
        .collect()
}

/// Checks `[z, x·y] = [z,x]·y + x·[z,y] + x·y·P(z)` on basis triples `(x, y, z)`.
pub fn check_relative_leibniz(dot: &BilinearOp, bracket: &BilinearOp, p: &Matrix) -> AxiomReport {
    let mut r = AxiomReport::new();
    let n = dot.dim();
    for k in 0..n {
        let z = basis_vec(n, k);
        let pz = p.column(k);
        for i in 0..n {
            let x = basis_vec(n, i);
            let zx = bracket.basis_product(k, i);
            for j in 0..n {
                let y = basis_vec(n, j);
                let xy = dot.basis_product(i, j);
                let mut d = bracket.apply(&z, xy);
                axpy(&mut d, &int(-1), &dot.apply(zx, &y));
                axpy(&mut d, &int(-1), &dot.apply(&x, bracket.basis_product(k, j)));
                axpy(&mut d, &int(-1), &dot.apply(xy, &pz));
                r.check("relative-leibniz", &[i, j, k], d);
            }
        }
    }
    r
}

/// A candidate relative Poisson algebra `(A, ·, [-,-], P)`. Construction only
/// checks shapes; use [`check_rel_poisson`] or [`RelPoissonAlgebra::verified`]
/// for the axioms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelPoissonAlgebra {
    dot: BilinearOp,
    bracket: BilinearOp,
    p: Matrix,
}

impl RelPoissonAlgebra {
    pub fn new(dot: BilinearOp, bracket: BilinearOp, p: Matrix) -> Result<Self, Error> {
        let n = dot.dim();
        if bracket.space() != dot.space() {
            return Err(Error::Shape("product and bracket live on different spaces".into()));
        }
        if p.rows() != n || p.cols() != n {
            return Err(Error::Shape(format!("derivation must be {n}x{n}")));
        }
        Ok(RelPoissonAlgebra { dot, bracket, p })
    }

    /// Builds and checks every axiom.
    pub fn verified(dot: BilinearOp, bracket: BilinearOp, p: Matrix) -> Result<Self, Error> {
        let a = RelPoissonAlgebra::new(dot, bracket, p)?;
        require("relative Poisson algebra", check_rel_poisson(&a))?;
        Ok(a)
    }

    pub fn space(&self) -> &Space {
        self.dot.space()
    }

    pub fn dim(&self) -> usize {
        self.dot.dim()
    }

    pub fn dot(&self) -> &BilinearOp {
        &self.dot
    }

    pub fn bracket(&self) -> &BilinearOp {
        &self.bracket
    }

    pub fn p(&self) -> &Matrix {
        &self.p
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        self.dot.apply(x, y)
    }

    pub fn br(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        self.bracket.apply(x, y)
    }

    /// `L(e_i)`
    pub fn l(&self, i: usize) -> Matrix {
        self.dot.left(i)
    }

    /// `ad(e_i)`
    pub fn ad(&self, i: usize) -> Matrix {
        self.bracket.left(i)
    }

    pub fn relabeled(&self, space: &Space) -> Result<Self, Error> {
        Ok(RelPoissonAlgebra {
            dot: self.dot.relabeled(space)?,
            bracket: self.bracket.relabeled(space)?,
            p: self.p.clone(),
        })
    }

    pub fn with_p(&self, p: Matrix) -> Result<Self, Error> {
        RelPoissonAlgebra::new(self.dot.clone(), self.bracket.clone(), p)
    }
}

/// Full axiom check of a relative Poisson algebra.
pub fn check_rel_poisson(a: &RelPoissonAlgebra) -> AxiomReport {
    let mut r = check_comm_assoc(&a.dot);
    r.merge(check_lie(&a.bracket));
    derivation_into(&a.dot, &a.p, "derivation-of-product", &mut r);
    derivation_into(&a.bracket, &a.p, "derivation-of-bracket", &mut r);
    r.merge(check_relative_leibniz(&a.dot, &a.bracket, &a.p));
    r
}

/// `[x, y] = x·P(y) - P(x)·y`. Requires `·` commutative associative and `P`
/// a derivation of it.
pub fn bracket_from_derivation(dot: &BilinearOp, p: &Matrix) -> Result<BilinearOp, Error> {
    require("commutative associative", check_comm_assoc(dot))?;
    require("derivation", check_derivation(dot, p))?;
    Ok(bracket_from_derivation_unchecked(dot, p))
}

pub(crate) fn bracket_from_derivation_unchecked(dot: &BilinearOp, p: &Matrix) -> BilinearOp {
    let n = dot.dim();
    let pe: Vec<Vec<Scalar>> = (0..n).map(|i| p.column(i)).collect();
    let mut out = BilinearOp::zero(dot.space());
    for i in 0..n {
        for j in 0..n {
            let v = sub_vec(
                &dot.apply(&basis_vec(n, i), &pe[j]),
                &dot.apply(&pe[i], &basis_vec(n, j)),
            );
            for (k, c) in v.into_iter().enumerate() {
                out.set(i, j, k, c);
            }
        }
    }
    out
}

/// The two-sided unit of the product, if any.
pub fn find_unit(dot: &BilinearOp) -> Option<Vec<Scalar>> {
    let n = dot.dim();
    // Unknown u: Σ_i u_i c[i][j][k] = δ_jk and Σ_i u_i c[j][i][k] = δ_jk.
    let rows = 2 * n * n;
    let mut sys = Matrix::zeros(rows, n);
    let mut rhs = zero_vec(rows);
    for j in 0..n {
        for k in 0..n {
            let r0 = j * n + k;
            let r1 = n * n + r0;
            for i in 0..n {
                sys[(r0, i)] = dot.get(i, j, k).clone();
                sys[(r1, i)] = dot.get(j, i, k).clone();
            }
            if j == k {
                rhs[r0] = int(1);
                rhs[r1] = int(1);
            }
        }
    }
    sys.solve(&rhs)
}

/// Checks that `(A, ·, [-,-])` is a Jacobi algebra: `·` unital commutative
/// associative, `[-,-]` Lie, and
/// `[z, x·y] = [z,x]·y + x·[z,y] - x·y·[z, 1]`.
pub fn check_jacobi_algebra(dot: &BilinearOp, bracket: &BilinearOp) -> Result<AxiomReport, Error> {
    let unit = find_unit(dot).ok_or(Error::NoUnit)?;
    let n = dot.dim();
    let mut r = check_comm_assoc(dot);
    r.merge(check_lie(bracket));
    for k in 0..n {
        let z = basis_vec(n, k);
        let z1 = bracket.apply(&z, &unit);
        for i in 0..n {
            let x = basis_vec(n, i);
            for j in 0..n {
                let y = basis_vec(n, j);
                let xy = dot.basis_product(i, j);
                let mut d = bracket.apply(&z, xy);
                axpy(&mut d, &int(-1), &dot.apply(bracket.basis_product(k, i), &y));
                axpy(&mut d, &int(-1), &dot.apply(&x, bracket.basis_product(k, j)));
                axpy(&mut d, &int(1), &dot.apply(xy, &z1));
                r.check("jacobi-leibniz", &[i, j, k], d);
            }
        }
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linear::ratio;

    fn sp(n: usize) -> Space {
        Space::standard("e", n)
    }

    #[test]
    fn failing_associativity_is_located() {
        // e1·e1 = e2, e2·e1 = e1, everything else zero
        let m = BilinearOp::from_int_entries(&sp(2), &[(0, 0, 1, 1), (1, 0, 0, 1), (0, 1, 0, 1)]);
        let r = check_comm_assoc(&m);
        assert!(!r.ok());
        assert!(r.holds("commutativity"));
        assert!(!r.holds("associativity"));
    }

    #[test]
    fn one_sided_bracket_is_not_antisymmetric() {
        // [e1,e2] = e3 but [e2,e1] = 0
        let m = BilinearOp::from_int_entries(&sp(3), &[(0, 1, 2, 1)]);
        let r = check_lie(&m);
        assert!(!r.holds("antisymmetry"));
        assert_eq!(r.violations()[0].indices, vec![0, 1]);
    }

    #[test]
    fn empty_algebra_is_vacuously_ok() {
        let a = RelPoissonAlgebra::new(BilinearOp::zero(&sp(0)), BilinearOp::zero(&sp(0)), Matrix::zeros(0, 0))
            .unwrap();
        assert!(check_rel_poisson(&a).ok());
    }

    #[test]
    fn bracket_from_derivation_worked_example() {
        // Sub-adjacent product of the 3-dimensional Zinbiel example.
        let dot = BilinearOp::from_int_entries(&sp(3), &[(0, 0, 2, 2), (0, 1, 2, 1), (1, 0, 2, 1)]);
        let p = Matrix::from_ints(&[&[1, 0, 0], &[1, 2, 0], &[0, 0, 3]]);
        let br = bracket_from_derivation(&dot, &p).unwrap();
        // [e1,e2] = e1·2e2 - (e1+e2)·e2 = 2e3 - e3 = e3
        assert_eq!(br.basis_product(0, 1), &[int(0), int(0), int(1)]);
        assert_eq!(br.basis_product(1, 0), &[int(0), int(0), int(-1)]);
        assert_eq!(br.entries().len(), 2);
        assert!(check_rel_poisson(&RelPoissonAlgebra::new(dot, br, p).unwrap()).ok());
    }

    #[test]
    fn bracket_from_non_derivation_is_rejected() {
        let dot = BilinearOp::from_int_entries(&sp(2), &[(0, 0, 1, 1)]);
        let p = Matrix::from_ints(&[&[1, 0], &[0, 1]]);
        assert!(matches!(bracket_from_derivation(&dot, &p), Err(Error::Precondition { .. })));
    }

    #[test]
    fn unit_of_truncated_polynomials() {
        // basis 1, x, x² of K[x]/(x³)
        let dot = BilinearOp::from_int_entries(
            &sp(3),
            &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1), (0, 2, 2, 1), (2, 0, 2, 1), (1, 1, 2, 1)],
        );
        assert_eq!(find_unit(&dot), Some(vec![int(1), int(0), int(0)]));
        let nil = BilinearOp::from_int_entries(&sp(2), &[(0, 0, 1, 1)]);
        assert_eq!(find_unit(&nil), None);
    }

    #[test]
    fn unit_in_non_standard_basis() {
        // K × K with e1·e1 = e1, e2·e2 = e2: unit e1 + e2; rescale e2 by 1/2.
        let dot = BilinearOp::from_int_entries(&sp(2), &[(0, 0, 0, 1), (1, 1, 1, 1)]);
        let g = Matrix::from_rows(vec![vec![int(1), int(0)], vec![int(0), ratio(1, 2)]]).unwrap();
        let t = dot.transported(&g).unwrap();
        assert_eq!(find_unit(&t), Some(vec![int(1), int(2)]));
    }

    #[test]
    fn jacobi_check_needs_unit() {
        let nil = BilinearOp::from_int_entries(&sp(2), &[(0, 0, 1, 1)]);
        assert!(matches!(check_jacobi_algebra(&nil, &BilinearOp::zero(&sp(2))), Err(Error::NoUnit)));
    }
}
