//! Exact linear algebra over the rationals: based spaces, dense matrices,
//! and coefficient arrays for two- and three-fold tensor products.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::Error;

/// Field element. Always stored in lowest terms with a positive denominator.
pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

/// `n/d`; panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Scalar {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p"` or `"p/q"` (surrounding whitespace allowed).
pub fn parse_scalar(s: &str) -> Result<Scalar, Error> {
    s.trim()
        .parse::<BigRational>()
        .map_err(|_| Error::Scalar(s.to_string()))
}

pub fn zero_vec(n: usize) -> Vec<Scalar> {
    vec![Scalar::zero(); n]
}

pub fn basis_vec(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = zero_vec(n);
    v[i] = Scalar::one();
    v
}

pub fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// `acc += s * v`
pub fn axpy(acc: &mut [Scalar], s: &Scalar, v: &[Scalar]) {
    if s.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += s * x;
        }
    }
}

pub fn add_vec(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub_vec(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale_vec(s: &Scalar, v: &[Scalar]) -> Vec<Scalar> {
    v.iter().map(|x| s * x).collect()
}

/// An ordered basis of a finite-dimensional vector space, identified by labels.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Space {
    labels: Vec<String>,
}

impl Space {
    pub fn new<I, S>(labels: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        for (i, l) in labels.iter().enumerate() {
            if l.is_empty() {
                return Err(Error::Shape("empty basis label".into()));
            }
            if labels[..i].contains(l) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        Ok(Space { labels })
    }

    /// `prefix1, ..., prefixN`
    pub fn standard(prefix: &str, n: usize) -> Self {
        Space {
            labels: (1..=n).map(|i| format!("{prefix}{i}")).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Dual basis. A trailing `*` is toggled, so the dual of the dual is the
    /// original space.
    pub fn dual(&self) -> Space {
        Space {
            labels: self
                .labels
                .iter()
                .map(|l| match l.strip_suffix('*') {
                    Some(base) => base.to_string(),
                    None => format!("{l}*"),
                })
                .collect(),
        }
    }

    /// Basis of `self ⊕ other`, `self` first. Colliding labels of `other` get
    /// primes appended.
    pub fn direct_sum(&self, other: &Space) -> Space {
        let mut labels = self.labels.clone();
        for l in &other.labels {
            let mut l = l.clone();
            while labels.contains(&l) {
                l.push('\'');
            }
            labels.push(l);
        }
        Space { labels }
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.labels.join(", "))
    }
}

/// Dense row-major matrix. Entry `(i, j)` is the coefficient of the `i`-th
/// output basis vector in the image of the `j`-th input basis vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: zero_vec(rows * cols),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self, Error> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Shape("ragged matrix rows".into()));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Convenience for tests and fixtures: integer entries, row by row.
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect())
            .expect("rectangular")
    }

    /// Matrix whose `j`-th column is `cols[j]`.
    pub fn from_columns(rows: usize, cols: &[Vec<Scalar>]) -> Self {
        Matrix::from_fn(rows, cols.len(), |i, j| cols[j][i].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn as_slice(&self) -> &[Scalar] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.data)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape");
        let mut out = zero_vec(self.rows);
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                let a = &self[(i, j)];
                if !a.is_zero() {
                    *o += a * x;
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: add_vec(&self.data, &other.data),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: sub_vec(&self.data, &other.data),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: scale_vec(s, &self.data),
        }
    }

    pub fn neg(&self) -> Matrix {
        self.scale(&int(-1))
    }

    /// `self += s * other`
    pub fn add_scaled(&mut self, s: &Scalar, other: &Matrix) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        axpy(&mut self.data, s, &other.data);
    }

    /// Block diagonal `diag(self, other)`.
    pub fn direct_sum(&self, other: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] = self[(i, j)].clone();
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                out[(self.rows + i, self.cols + j)] = other[(i, j)].clone();
            }
        }
        out
    }

    /// Rows of `self` above rows of `other`.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Reduced row echelon form, returning the pivot columns.
    fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !self[(r, col)].is_zero()) else {
                continue;
            };
            if p != row {
                for j in 0..self.cols {
                    self.data.swap(p * self.cols + j, row * self.cols + j);
                }
            }
            let inv = self[(row, col)].recip();
            for j in col..self.cols {
                let v = &self[(row, j)] * &inv;
                self[(row, j)] = v;
            }
            for r in 0..self.rows {
                if r == row || self[(r, col)].is_zero() {
                    continue;
                }
                let f = self[(r, col)].clone();
                for j in col..self.cols {
                    if !self[(row, j)].is_zero() {
                        let v = &self[(row, j)] * &f;
                        self[(r, j)] -= v;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    pub fn determinant(&self) -> Scalar {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Scalar::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !m[(r, col)].is_zero()) else {
                return Scalar::zero();
            };
            if p != col {
                for j in 0..n {
                    m.data.swap(p * n + j, col * n + j);
                }
                det = -det;
            }
            let pivot = m[(col, col)].clone();
            det *= &pivot;
            for r in col + 1..n {
                if m[(r, col)].is_zero() {
                    continue;
                }
                let f = &m[(r, col)] / &pivot;
                for j in col..n {
                    let v = &m[(col, j)] * &f;
                    m[(r, j)] -= v;
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut aug = Matrix::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self[(i, j)].clone()
            } else if j - n == i {
                Scalar::one()
            } else {
                Scalar::zero()
            }
        });
        let pivots = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(Matrix::from_fn(n, n, |i, j| aug[(i, n + j)].clone()))
    }

    /// One solution of `self · x = b`, or `None` if the system is inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(self.rows, b.len());
        let n = self.cols;
        let mut aug = Matrix::from_fn(self.rows, n + 1, |i, j| {
            if j < n {
                self[(i, j)].clone()
            } else {
                b[i].clone()
            }
        });
        let pivots = aug.rref();
        if pivots.last() == Some(&n) {
            return None;
        }
        let mut x = zero_vec(n);
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = aug[(r, n)].clone();
        }
        Some(x)
    }

    /// Basis of the kernel.
    pub fn nullspace(&self) -> Vec<Vec<Scalar>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = zero_vec(self.cols);
                v[f] = Scalar::one();
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = -m[(r, f)].clone();
                }
                v
            })
            .collect()
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }
}

/// Sum `Σ x_i mats[i]`, the action of a general element given the actions of
/// basis elements.
pub fn combine(mats: &[Matrix], x: &[Scalar], rows: usize, cols: usize) -> Matrix {
    let mut out = Matrix::zeros(rows, cols);
    for (m, c) in mats.iter().zip(x) {
        if !c.is_zero() {
            out.add_scaled(c, m);
        }
    }
    out
}

/// A linear map between based spaces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMap {
    pub domain: Space,
    pub codomain: Space,
    pub matrix: Matrix,
}

impl LinearMap {
    pub fn new(domain: Space, codomain: Space, matrix: Matrix) -> Result<Self, Error> {
        if matrix.rows() != codomain.dim() || matrix.cols() != domain.dim() {
            return Err(Error::Shape(format!(
                "{}x{} matrix for a map of dimension {} -> {}",
                matrix.rows(),
                matrix.cols(),
                domain.dim(),
                codomain.dim()
            )));
        }
        Ok(LinearMap {
            domain,
            codomain,
            matrix,
        })
    }

    pub fn identity(space: &Space) -> Self {
        LinearMap {
            domain: space.clone(),
            codomain: space.clone(),
            matrix: Matrix::identity(space.dim()),
        }
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.matrix.apply(v)
    }
}

/// Transpose map `T*: W* → V*` with `⟨v, T*(w*)⟩ = ⟨T v, w*⟩`.
pub fn dual_map(t: &LinearMap) -> LinearMap {
    LinearMap {
        domain: t.codomain.dual(),
        codomain: t.domain.dual(),
        matrix: t.matrix.transpose(),
    }
}

/// Element of `left ⊗ right`; `coeffs[(i, j)]` multiplies `e_i ⊗ f_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor2 {
    pub left: Space,
    pub right: Space,
    pub coeffs: Matrix,
}

impl Tensor2 {
    pub fn zero(left: &Space, right: &Space) -> Self {
        Tensor2 {
            left: left.clone(),
            right: right.clone(),
            coeffs: Matrix::zeros(left.dim(), right.dim()),
        }
    }

    pub fn new(left: Space, right: Space, coeffs: Matrix) -> Result<Self, Error> {
        if coeffs.rows() != left.dim() || coeffs.cols() != right.dim() {
            return Err(Error::Shape("tensor coefficients do not match factors".into()));
        }
        Ok(Tensor2 {
            left,
            right,
            coeffs,
        })
    }

    /// `(f ⊗ g)(self)`
    pub fn map(&self, f: &LinearMap, g: &LinearMap) -> Result<Tensor2, Error> {
        if f.domain != self.left || g.domain != self.right {
            return Err(Error::Shape("tensor factor mismatch".into()));
        }
        Ok(Tensor2 {
            left: f.codomain.clone(),
            right: g.codomain.clone(),
            coeffs: apply_pair(&f.matrix, &g.matrix, &self.coeffs),
        })
    }
}

/// `τ(x ⊗ y) = y ⊗ x`
pub fn tau(t: &Tensor2) -> Tensor2 {
    Tensor2 {
        left: t.right.clone(),
        right: t.left.clone(),
        coeffs: t.coeffs.transpose(),
    }
}

/// `r ∈ A ⊗ A` as the map `A* → A`, `a* ↦ Σ ⟨a*, a_i⟩ b_i` for `r = Σ a_i ⊗ b_i`.
pub fn tensor2_as_map(r: &Tensor2) -> Result<LinearMap, Error> {
    if r.left != r.right {
        return Err(Error::Shape("both tensor factors must be the same space".into()));
    }
    Ok(LinearMap {
        domain: r.left.dual(),
        codomain: r.right.clone(),
        matrix: r.coeffs.transpose(),
    })
}

/// Coefficients of `(F ⊗ G)(m)` for a 2-tensor with coefficient matrix `m`:
/// `F m Gᵀ`.
pub fn apply_pair(f: &Matrix, g: &Matrix, m: &Matrix) -> Matrix {
    f.mul(m).mul(&g.transpose())
}

/// `(F ⊗ id)(m) = F m`
pub fn apply_left(f: &Matrix, m: &Matrix) -> Matrix {
    f.mul(m)
}

/// `(id ⊗ G)(m) = m Gᵀ`
pub fn apply_right(g: &Matrix, m: &Matrix) -> Matrix {
    m.mul(&g.transpose())
}

/// Dense coefficient array of an element of `U ⊗ V ⊗ W`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Array3 {
    dims: [usize; 3],
    data: Vec<Scalar>,
}

impl Array3 {
    pub fn zeros(dims: [usize; 3]) -> Self {
        Array3 {
            dims,
            data: zero_vec(dims[0] * dims[1] * dims[2]),
        }
    }

    pub fn cube(n: usize) -> Self {
        Array3::zeros([n, n, n])
    }

    pub fn dims(&self) -> [usize; 3] {
        self.dims
    }

    fn offset(&self, a: usize, b: usize, c: usize) -> usize {
        (a * self.dims[1] + b) * self.dims[2] + c
    }

    pub fn get(&self, a: usize, b: usize, c: usize) -> &Scalar {
        &self.data[self.offset(a, b, c)]
    }

    pub fn get_mut(&mut self, a: usize, b: usize, c: usize) -> &mut Scalar {
        let o = self.offset(a, b, c);
        &mut self.data[o]
    }

    pub fn as_slice(&self) -> &[Scalar] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.data)
    }

    /// Nonzero entries as `((a, b, c), value)`.
    pub fn nonzero(&self) -> impl Iterator<Item = ((usize, usize, usize), &Scalar)> {
        let [_, n1, n2] = self.dims;
        self.data
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(move |(o, v)| ((o / (n1 * n2), (o / n2) % n1, o % n2), v))
    }

    pub fn add(&self, other: &Array3) -> Array3 {
        assert_eq!(self.dims, other.dims);
        Array3 {
            dims: self.dims,
            data: add_vec(&self.data, &other.data),
        }
    }

    pub fn sub(&self, other: &Array3) -> Array3 {
        assert_eq!(self.dims, other.dims);
        Array3 {
            dims: self.dims,
            data: sub_vec(&self.data, &other.data),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Array3 {
        Array3 {
            dims: self.dims,
            data: scale_vec(s, &self.data),
        }
    }

    pub fn add_scaled(&mut self, s: &Scalar, other: &Array3) {
        assert_eq!(self.dims, other.dims);
        axpy(&mut self.data, s, &other.data);
    }

    /// Applies `f` to tensor factor `axis` (0, 1 or 2).
    pub fn map_factor(&self, axis: usize, f: &Matrix) -> Array3 {
        assert_eq!(f.cols(), self.dims[axis], "factor map shape");
        let mut dims = self.dims;
        dims[axis] = f.rows();
        let mut out = Array3::zeros(dims);
        for ((a, b, c), v) in self.nonzero() {
            let idx = [a, b, c];
            for r in 0..f.rows() {
                let m = &f[(r, idx[axis])];
                if m.is_zero() {
                    continue;
                }
                let mut t = idx;
                t[axis] = r;
                *out.get_mut(t[0], t[1], t[2]) += m * v;
            }
        }
        out
    }

    /// `(τ ⊗ id)`: `x ⊗ y ⊗ z ↦ y ⊗ x ⊗ z`
    pub fn swap12(&self) -> Array3 {
        self.permute([1, 0, 2])
    }

    /// `(id ⊗ τ)`: `x ⊗ y ⊗ z ↦ x ⊗ z ⊗ y`
    pub fn swap23(&self) -> Array3 {
        self.permute([0, 2, 1])
    }

    /// `ξ(x ⊗ y ⊗ z) = y ⊗ z ⊗ x`
    pub fn cycle(&self) -> Array3 {
        self.permute([1, 2, 0])
    }

    /// Sends the factor in position `perm[p]` to position `p`.
    fn permute(&self, perm: [usize; 3]) -> Array3 {
        let dims = [self.dims[perm[0]], self.dims[perm[1]], self.dims[perm[2]]];
        let mut out = Array3::zeros(dims);
        for ((a, b, c), v) in self.nonzero() {
            let idx = [a, b, c];
            *out.get_mut(idx[perm[0]], idx[perm[1]], idx[perm[2]]) = v.clone();
        }
        out
    }

    /// `m ⊗ v`
    pub fn outer(m: &Matrix, v: &[Scalar]) -> Array3 {
        let mut out = Array3::zeros([m.rows(), m.cols(), v.len()]);
        for a in 0..m.rows() {
            for b in 0..m.cols() {
                let x = &m[(a, b)];
                if x.is_zero() {
                    continue;
                }
                for (c, y) in v.iter().enumerate() {
                    if !y.is_zero() {
                        *out.get_mut(a, b, c) = x * y;
                    }
                }
            }
        }
        out
    }
}

/// Element of `U ⊗ V ⊗ W`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor3 {
    pub spaces: [Space; 3],
    pub coeffs: Array3,
}

impl Tensor3 {
    pub fn new(spaces: [Space; 3], coeffs: Array3) -> Result<Self, Error> {
        if coeffs.dims() != [spaces[0].dim(), spaces[1].dim(), spaces[2].dim()] {
            return Err(Error::Shape("tensor coefficients do not match factors".into()));
        }
        Ok(Tensor3 { spaces, coeffs })
    }
}

/// `ξ` on `A ⊗ A ⊗ A`.
pub fn xi(t: &Tensor3) -> Result<Tensor3, Error> {
    if t.spaces[0] != t.spaces[1] || t.spaces[1] != t.spaces[2] {
        return Err(Error::Shape("cyclic permutation needs equal factors".into()));
    }
    Ok(Tensor3 {
        spaces: t.spaces.clone(),
        coeffs: t.coeffs.cycle(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scalar_parsing_reduces() {
        assert_eq!(parse_scalar("4/6").unwrap(), ratio(2, 3));
        assert_eq!(parse_scalar("-3").unwrap(), int(-3));
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_scalar("x").is_err());
        assert_eq!(ratio(4, -6).to_string(), "-2/3");
    }

    #[test]
    fn dual_toggles_star() {
        let s = Space::new(["e", "e1*"]).unwrap();
        assert_eq!(s.dual().labels(), &["e*".to_string(), "e1".to_string()]);
        assert_eq!(s.dual().dual(), s);
    }

    #[test]
    fn duplicate_labels_rejected() {
        assert!(matches!(Space::new(["a", "a"]), Err(Error::DuplicateLabel(_))));
    }

    #[test]
    fn dual_map_of_derivation() {
        // P(e1) = e1 + e2, P(e2) = 2 e2, P(e3) = 3 e3
        let a = Space::standard("e", 3);
        let p = Matrix::from_ints(&[&[1, 0, 0], &[1, 2, 0], &[0, 0, 3]]);
        let pd = dual_map(&LinearMap::new(a.clone(), a.clone(), p).unwrap());
        assert_eq!(pd.domain, a.dual());
        // P*(e1*) = e1*, P*(e2*) = e1* + 2 e2*, P*(e3*) = 3 e3*
        assert_eq!(pd.matrix.column(0), vec![int(1), int(0), int(0)]);
        assert_eq!(pd.matrix.column(1), vec![int(1), int(2), int(0)]);
        assert_eq!(pd.matrix.column(2), vec![int(0), int(0), int(3)]);
    }

    #[test]
    fn tau_of_elementary_tensor() {
        let a = Space::standard("e", 2);
        let mut t = Tensor2::zero(&a, &a);
        t.coeffs[(0, 1)] = int(1);
        assert_eq!(tau(&t).coeffs[(1, 0)], int(1));
        assert_eq!(tau(&t).coeffs[(0, 1)], int(0));
    }

    #[test]
    fn xi_cycles_factors() {
        let a = Space::standard("e", 3);
        let mut c = Array3::cube(3);
        *c.get_mut(0, 1, 2) = int(1);
        let t = Tensor3::new([a.clone(), a.clone(), a.clone()], c).unwrap();
        let x = xi(&t).unwrap();
        assert_eq!(x.coeffs.get(1, 2, 0), &int(1));
        assert_eq!(xi(&xi(&x).unwrap()).unwrap(), t);
    }

    #[test]
    fn tensor_as_map_rejects_mixed_factors() {
        let r = Tensor2::zero(&Space::standard("e", 2), &Space::standard("f", 2));
        assert!(tensor2_as_map(&r).is_err());
    }

    #[test]
    fn canonical_tensor_is_identity_block() {
        // Σ e_i ⊗ e_i* in (A ⊕ A*) ⊗ (A ⊕ A*)
        let a = Space::standard("e", 2);
        let d = a.direct_sum(&a.dual());
        let mut r = Tensor2::zero(&d, &d);
        for i in 0..2 {
            r.coeffs[(i, 2 + i)] = int(1);
        }
        let m = tensor2_as_map(&r).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                let expect = if i == j { int(1) } else { int(0) };
                assert_eq!(m.matrix[(2 + i, j)], expect);
            }
        }
    }

    #[test]
    fn inverse_and_determinant() {
        let m = Matrix::from_ints(&[&[2, 1], &[1, 1]]);
        assert_eq!(m.determinant(), int(1));
        assert_eq!(m.mul(&m.inverse().unwrap()), Matrix::identity(2));
        let s = Matrix::from_ints(&[&[1, 2], &[2, 4]]);
        assert_eq!(s.determinant(), int(0));
        assert!(s.inverse().is_none());
        assert_eq!(s.nullspace().len(), 1);
    }

    #[test]
    fn solve_detects_inconsistency() {
        let m = Matrix::from_ints(&[&[1, 1], &[1, 1]]);
        assert!(m.solve(&[int(1), int(2)]).is_none());
        let x = m.solve(&[int(3), int(3)]).unwrap();
        assert_eq!(&x[0] + &x[1], int(3));
    }
}
