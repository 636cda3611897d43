//! Dense core structures from document fields, and back.

use relpoisson::algebra::{BilinearOp, RelPoissonAlgebra};
use relpoisson::coalgebra::{BialgebraData, Comultiplication};
use relpoisson::jacobi::FrobeniusJacobiAlgebra;
use relpoisson::pre_poisson::RelPrePoissonAlgebra;
use relpoisson::rep::{CompatibleStructure, RepData};
use relpoisson::yang_baxter::RMatrix;
use relpoisson::{Matrix, Scalar, Space};

use crate::document::{Axis, Entry, Kind, Layout, StructureDocument};

fn entry(index: Vec<usize>, value: &Scalar) -> Entry {
    Entry {
        index,
        value: value.clone(),
    }
}

impl StructureDocument {
    fn layout(&self, name: &str) -> Layout {
        self.kind.field(name).unwrap_or_else(|| panic!("{} has no field `{name}`", self.kind)).layout
    }

    fn axis(&self, a: Axis) -> usize {
        match a {
            Axis::A => self.dim(),
            Axis::V => self.module_dim(),
        }
    }

    pub fn op(&self, name: &str) -> BilinearOp {
        assert_eq!(self.layout(name), Layout::Product);
        let es: Vec<_> = self.entries(name).iter().map(|e| (e.index[0], e.index[1], e.index[2], e.value.clone())).collect();
        BilinearOp::from_entries(&self.space(), &es).expect("indices checked on parse")
    }

    pub fn set_op(&mut self, name: &str, op: &BilinearOp) {
        let es = op.entries().iter().map(|(i, j, k, v)| entry(vec![*i, *j, *k], v)).collect();
        self.set(name, es);
    }

    /// A map field as a matrix acting on column vectors.
    pub fn map(&self, name: &str) -> Matrix {
        let Layout::Map(from, to) = self.layout(name) else { panic!("`{name}` is not a map") };
        let mut m = Matrix::zeros(self.axis(to), self.axis(from));
        for e in self.entries(name) {
            m[(e.index[1], e.index[0])] = e.value.clone();
        }
        m
    }

    pub fn set_map(&mut self, name: &str, m: &Matrix) {
        let es = cells(m).map(|(r, c, v)| entry(vec![c, r], v)).collect();
        self.set(name, es);
    }

    /// A 2-tensor or Gram matrix, `(i, j)` entry for `e_i ⊗ e_j`.
    pub fn tensor(&self, name: &str) -> Matrix {
        assert_eq!(self.layout(name), Layout::Tensor);
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for e in self.entries(name) {
            m[(e.index[0], e.index[1])] = e.value.clone();
        }
        m
    }

    pub fn set_tensor(&mut self, name: &str, m: &Matrix) {
        let es = cells(m).map(|(r, c, v)| entry(vec![r, c], v)).collect();
        self.set(name, es);
    }

    pub fn comult(&self, name: &str) -> Comultiplication {
        assert_eq!(self.layout(name), Layout::Coproduct);
        let es: Vec<_> = self.entries(name).iter().map(|e| (e.index[1], e.index[2], e.index[0], e.value.clone())).collect();
        Comultiplication::from_entries(&self.space(), &es).expect("indices checked on parse")
    }

    pub fn set_comult(&mut self, name: &str, d: &Comultiplication) {
        let es = d.entries().iter().map(|(i, j, k, v)| entry(vec![*k, *i, *j], v)).collect();
        self.set(name, es);
    }

    pub fn actions(&self, name: &str) -> Vec<Matrix> {
        assert_eq!(self.layout(name), Layout::Actions);
        let m = self.module_dim();
        let mut out = vec![Matrix::zeros(m, m); self.dim()];
        for e in self.entries(name) {
            out[e.index[0]][(e.index[2], e.index[1])] = e.value.clone();
        }
        out
    }

    pub fn set_actions(&mut self, name: &str, ms: &[Matrix]) {
        let es = ms
            .iter()
            .enumerate()
            .flat_map(|(x, m)| cells(m).map(move |(r, c, v)| entry(vec![x, c, r], v)))
            .collect();
        self.set(name, es);
    }

    /// `(dot, bracket, derivation)`; kinds without those fields panic.
    pub fn algebra(&self) -> RelPoissonAlgebra {
        RelPoissonAlgebra::new(self.op("dot"), self.op("bracket"), self.map("derivation")).expect("shapes agree")
    }

    fn set_algebra(&mut self, a: &RelPoissonAlgebra) {
        self.set_op("dot", a.dot());
        self.set_op("bracket", a.bracket());
        self.set_map("derivation", a.p());
    }

    pub fn rel_pre_poisson(&self) -> RelPrePoissonAlgebra {
        RelPrePoissonAlgebra::new(self.op("star"), self.op("circ"), self.map("derivation")).expect("shapes agree")
    }

    pub fn rep(&self) -> RepData {
        let c = CompatibleStructure::new(self.algebra(), self.module_space(), self.actions("mu"), self.actions("rho"))
            .expect("shapes agree");
        RepData::new(c, self.map("alpha")).expect("shapes agree")
    }

    pub fn bialgebra(&self) -> BialgebraData {
        BialgebraData::new(self.algebra(), self.comult("coproduct"), self.comult("cobracket"), self.map("q"))
            .expect("shapes agree")
    }

    pub fn rmatrix(&self) -> RMatrix {
        RMatrix::new(self.space(), self.tensor("r")).expect("shapes agree")
    }

    pub fn frobenius(&self) -> FrobeniusJacobiAlgebra {
        let form = relpoisson::pairing::BilinForm::new(self.space(), self.tensor("gram")).expect("shapes agree");
        FrobeniusJacobiAlgebra {
            algebra: self.algebra(),
            form,
        }
    }

    pub fn from_single(kind: Kind, op: &BilinearOp, p: &Matrix) -> Self {
        let mut d = StructureDocument::new(kind, labels(op.space()), vec![]);
        d.set_op("product", op);
        d.set_map("derivation", p);
        d
    }

    pub fn from_rel_poisson(a: &RelPoissonAlgebra) -> Self {
        let mut d = StructureDocument::new(Kind::RelPoisson, labels(a.space()), vec![]);
        d.set_algebra(a);
        d
    }

    pub fn from_rel_pre_poisson(a: &RelPrePoissonAlgebra) -> Self {
        let mut d = StructureDocument::new(Kind::RelPrePoisson, labels(a.star().space()), vec![]);
        d.set_op("star", a.star());
        d.set_op("circ", a.circ());
        d.set_map("derivation", a.p());
        d
    }

    pub fn from_rep(rep: &RepData, operator: Option<&Matrix>) -> Self {
        let c = &rep.compat;
        let mut d = StructureDocument::new(Kind::Representation, labels(c.algebra.space()), labels(&c.module));
        d.set_algebra(&c.algebra);
        d.set_actions("mu", &c.mu);
        d.set_actions("rho", &c.rho);
        d.set_map("alpha", &rep.alpha);
        if let Some(t) = operator {
            d.set_map("operator", t);
        }
        d
    }

    pub fn from_bialgebra(b: &BialgebraData) -> Self {
        let mut d = StructureDocument::new(Kind::Bialgebra, labels(b.algebra.space()), vec![]);
        d.set_algebra(&b.algebra);
        d.set_comult("coproduct", &b.coproduct);
        d.set_comult("cobracket", &b.cobracket);
        d.set_map("q", &b.q);
        d
    }

    pub fn from_rmatrix(a: &RelPoissonAlgebra, q: &Matrix, r: &RMatrix) -> Self {
        let mut d = StructureDocument::new(Kind::RMatrix, labels(a.space()), vec![]);
        d.set_algebra(a);
        d.set_map("q", q);
        d.set_tensor("r", r.coeffs());
        d
    }

    pub fn from_frobenius(f: &FrobeniusJacobiAlgebra) -> Self {
        let mut d = StructureDocument::new(Kind::BilinearForm, labels(f.algebra.space()), vec![]);
        d.set_algebra(&f.algebra);
        d.set_tensor("gram", &f.form.gram);
        d
    }
}

fn labels(s: &Space) -> Vec<String> {
    s.labels().to_vec()
}

fn cells(m: &Matrix) -> impl Iterator<Item = (usize, usize, &Scalar)> {
    let cols = m.cols();
    m.as_slice().iter().enumerate().map(move |(i, v)| (i / cols.max(1), i % cols.max(1), v))
}
