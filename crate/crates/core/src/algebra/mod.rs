//! Finite-dimensional associative algebras given by structure constants.

mod idempotents;

use crate::error::{check_dim, Error, Result};
use crate::field::{FieldSpec, Poly, Scalar};
use crate::linalg::{bilinear_image, is_zero_vec, unit, vec_add, vec_scale, vec_sub, Matrix, StructureTensor, Subspace};

/// `e_i e_j = sum_k c[i][j][k] e_k`, with an optional unit vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructAlgebra {
    field: FieldSpec,
    dim: usize,
    table: StructureTensor,
    unit: Option<Vec<Scalar>>,
}

/// A linear map between algebras, by its matrix (columns are images of basis vectors).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMap {
    pub source_dim: usize,
    pub target_dim: usize,
    pub matrix: Matrix,
}

impl LinearMap {
    pub fn new(matrix: Matrix) -> Self {
        LinearMap { source_dim: matrix.cols(), target_dim: matrix.rows(), matrix }
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.matrix.apply(v)
    }
}

/// `A / I` with the basis given by the unit vectors at the free columns of `I`.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub algebra: StructAlgebra,
    pub ideal: Subspace,
    /// `A -> A/I`
    pub projection: Matrix,
    /// Linear section `A/I -> A` onto the span of the chosen unit vectors.
    pub section: Matrix,
}

impl StructAlgebra {
    /// Validates shapes and, if given, the unit. Associativity is checked separately.
    pub fn new(field: FieldSpec, dim: usize, table: StructureTensor, unit: Option<Vec<Scalar>>) -> Result<Self> {
        let (l, r, o) = table.dims();
        check_dim("structure tensor left index", dim, l)?;
        check_dim("structure tensor right index", dim, r)?;
        check_dim("structure tensor output", dim, o)?;
        if let Some(s) = table.raw().iter().find(|s| !field.contains(s)) {
            return Err(Error::Schema(format!("structure constant {s} is not in {field}")));
        }
        let alg = StructAlgebra { field, dim, table, unit: None };
        match unit {
            None => Ok(alg),
            Some(u) => {
                check_dim("unit vector", dim, u.len())?;
                if !alg.is_unit(&u) {
                    return Err(Error::Schema("declared unit is not a two-sided identity".into()));
                }
                Ok(StructAlgebra { unit: Some(u), ..alg })
            }
        }
    }

    /// Builds the table from `f(i, j)`, the sparse expansion of `e_i e_j`.
    pub fn from_products<F>(field: FieldSpec, dim: usize, f: F) -> Result<Self>
    where
        F: Fn(usize, usize) -> Vec<(usize, Scalar)>,
    {
        let mut t = StructureTensor::zero(dim, dim, dim);
        for i in 0..dim {
            for j in 0..dim {
                for (k, c) in f(i, j) {
                    let v = t.entry(i, j, k) + &c;
                    t.set(i, j, k, v);
                }
            }
        }
        let alg = StructAlgebra::new(field, dim, t, None)?;
        Ok(alg.with_detected_unit())
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn table(&self) -> &StructureTensor {
        &self.table
    }

    pub fn unit(&self) -> Option<&[Scalar]> {
        self.unit.as_deref()
    }

    pub fn is_unital(&self) -> bool {
        self.unit.is_some()
    }

    /// Same algebra with its unit recorded if one exists.
    pub fn with_detected_unit(mut self) -> Self {
        if self.unit.is_none() {
            self.unit = self.find_unit();
        }
        self
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        unit(self.dim, i)
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &[Scalar] {
        self.table.basis_product(i, j)
    }

    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        self.table.apply(a, b)
    }

    /// `L_a : x -> a x`
    pub fn left_mult(&self, a: &[Scalar]) -> Matrix {
        let cols: Vec<Vec<Scalar>> = (0..self.dim).map(|j| self.mul(a, &unit(self.dim, j))).collect();
        Matrix::from_columns(self.dim, &cols).expect("square")
    }

    /// `R_a : x -> x a`
    pub fn right_mult(&self, a: &[Scalar]) -> Matrix {
        let cols: Vec<Vec<Scalar>> = (0..self.dim).map(|j| self.mul(&unit(self.dim, j), a)).collect();
        Matrix::from_columns(self.dim, &cols).expect("square")
    }

    /// All `L_{e_i}` followed by all `R_{e_i}`.
    pub fn multiplication_operators(&self) -> Vec<Matrix> {
        let mut ops: Vec<Matrix> = (0..self.dim).map(|i| self.left_mult(&unit(self.dim, i))).collect();
        ops.extend((0..self.dim).map(|i| self.right_mult(&unit(self.dim, i))));
        ops
    }

    /// First basis triple violating associativity, if any.
    pub fn associativity_failure(&self) -> Option<(usize, usize, usize)> {
        let n = self.dim;
        for i in 0..n {
            for j in 0..n {
                let ij = self.basis_product(i, j).to_vec();
                for k in 0..n {
                    let left = self.mul(&ij, &unit(n, k));
                    let right = self.mul(&unit(n, i), self.basis_product(j, k));
                    if left != right {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    pub fn check_associativity(&self) -> bool {
        self.associativity_failure().is_none()
    }

    fn is_unit(&self, u: &[Scalar]) -> bool {
        (0..self.dim).all(|i| {
            let e = unit(self.dim, i);
            self.mul(u, &e) == e && self.mul(&e, u) == e
        })
    }

    /// Solves `u e_i = e_i = e_i u` for all `i`.
    pub fn find_unit(&self) -> Option<Vec<Scalar>> {
        let n = self.dim;
        if n == 0 {
            return Some(Vec::new());
        }
        let mut rows = Vec::with_capacity(2 * n * n);
        let mut rhs = Vec::with_capacity(2 * n * n);
        for i in 0..n {
            for l in 0..n {
                let target = if i == l { Scalar::one() } else { Scalar::zero() };
                rows.push((0..n).map(|k| self.table.entry(k, i, l).clone()).collect::<Vec<_>>());
                rhs.push(target.clone());
                rows.push((0..n).map(|k| self.table.entry(i, k, l).clone()).collect::<Vec<_>>());
                rhs.push(target);
            }
        }
        Matrix::from_rows(rows).ok()?.solve(&rhs).ok()?
    }

    /// `A^+ = A + F 1` with the formal unit as the last basis vector.
    pub fn adjoin_unit(&self) -> StructAlgebra {
        let n = self.dim;
        let mut t = StructureTensor::zero(n + 1, n + 1, n + 1);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    t.set(i, j, k, self.table.entry(i, j, k).clone());
                }
            }
        }
        for i in 0..=n {
            t.set(i, n, i, Scalar::one());
            t.set(n, i, i, Scalar::one());
        }
        StructAlgebra { field: self.field, dim: n + 1, table: t, unit: Some(unit(n + 1, n)) }
    }

    /// `Tr(L_x)` on `A` (equal to the trace on `A^+` for `x` in `A`).
    pub fn trace(&self, x: &[Scalar]) -> Scalar {
        self.left_mult(x).trace()
    }

    /// Gram matrix of the trace form restricted to the span of `vectors`.
    pub fn trace_form(&self, vectors: &[Vec<Scalar>]) -> Matrix {
        let m = vectors.len();
        let mut g = Matrix::zeros(m, m);
        for i in 0..m {
            for j in 0..m {
                g.set(i, j, self.trace(&self.mul(&vectors[i], &vectors[j])));
            }
        }
        g
    }

    /// Jacobson radical: the kernel of the trace form `(a, b) -> Tr(L_{ab})`.
    pub fn jacobson_radical(&self) -> Subspace {
        let n = self.dim;
        let t: Vec<Scalar> = (0..n).map(|l| (0..n).map(|k| self.table.entry(l, k, k).clone()).sum()).collect();
        let mut g = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let v: Scalar = self
                    .basis_product(i, j)
                    .iter()
                    .zip(&t)
                    .filter(|(c, _)| !c.is_zero())
                    .map(|(c, tl)| c * tl)
                    .sum();
                g.set(i, j, v);
            }
        }
        Subspace::span(n, &g.kernel()).expect("kernel vectors have ambient length")
    }

    /// `V W` as a subspace of `A`.
    pub fn product(&self, v: &Subspace, w: &Subspace) -> Result<Subspace> {
        bilinear_image(v, w, &self.table)
    }

    /// `V^k` (the span of all `k`-fold products of elements of `V`).
    pub fn power(&self, v: &Subspace, k: usize) -> Result<Subspace> {
        check_dim("power of subspace", self.dim, v.ambient())?;
        let mut p = v.clone();
        for _ in 1..k {
            p = self.product(&p, v)?;
        }
        Ok(p)
    }

    /// Least `p` with `V^p = 0`, or `None` if `V` is not nilpotent.
    pub fn nilpotency_index(&self, v: &Subspace) -> Result<Option<usize>> {
        check_dim("nilpotency test", self.dim, v.ambient())?;
        let mut p = v.clone();
        for k in 1..=self.dim + 1 {
            if p.is_zero() {
                return Ok(Some(k));
            }
            let next = self.product(&p, v)?;
            if next == p {
                return Ok(None);
            }
            p = next;
        }
        Ok(None)
    }

    pub fn is_nilpotent(&self, v: &Subspace) -> Result<bool> {
        Ok(self.nilpotency_index(v)?.is_some())
    }

    pub fn is_ideal(&self, v: &Subspace) -> Result<bool> {
        check_dim("ideal test", self.dim, v.ambient())?;
        let full = Subspace::full(self.dim);
        Ok(self.product(&full, v)?.is_subspace_of(v)? && self.product(v, &full)?.is_subspace_of(v)?)
    }

    pub fn is_subalgebra(&self, v: &Subspace) -> Result<bool> {
        self.product(v, v)?.is_subspace_of(v)
    }

    /// Smallest two-sided ideal containing `v`.
    pub fn ideal_closure(&self, v: &Subspace) -> Result<Subspace> {
        let mut ops = self.multiplication_operators();
        ops.push(Matrix::identity(self.dim));
        let mut cur = v.clone();
        loop {
            let mut vs = cur.basis().to_vec();
            for t in &ops {
                vs.extend(cur.basis().iter().map(|b| t.apply(b)));
            }
            let next = Subspace::span(self.dim, &vs)?;
            if next == cur {
                return Ok(cur);
            }
            cur = next;
        }
    }

    /// The algebra structure on a subalgebra, in its canonical basis.
    pub fn subalgebra(&self, v: &Subspace) -> Result<StructAlgebra> {
        check_dim("subalgebra", self.dim, v.ambient())?;
        let b = v.basis();
        let m = b.len();
        let mut t = StructureTensor::zero(m, m, m);
        for i in 0..m {
            for j in 0..m {
                let c = v
                    .coordinates(&self.mul(&b[i], &b[j]))
                    .ok_or_else(|| Error::Precondition("subspace is not closed under multiplication".into()))?;
                for (k, x) in c.into_iter().enumerate() {
                    t.set(i, j, k, x);
                }
            }
        }
        Ok(StructAlgebra { field: self.field, dim: m, table: t, unit: None }.with_detected_unit())
    }

    /// `A / I` for a two-sided ideal `I`.
    pub fn quotient(&self, ideal: &Subspace) -> Result<Quotient> {
        if !self.is_ideal(ideal)? {
            return Err(Error::Precondition("quotient by a subspace that is not a two-sided ideal".into()));
        }
        let free = ideal.free_columns();
        let q = free.len();
        let mut t = StructureTensor::zero(q, q, q);
        for (a, &fa) in free.iter().enumerate() {
            for (b, &fb) in free.iter().enumerate() {
                for (c, x) in ideal.quotient_coords(self.basis_product(fa, fb)).into_iter().enumerate() {
                    t.set(a, b, c, x);
                }
            }
        }
        let proj_cols: Vec<Vec<Scalar>> = (0..self.dim).map(|i| ideal.quotient_coords(&unit(self.dim, i))).collect();
        let projection = Matrix::from_columns(q, &proj_cols)?;
        let sec_cols: Vec<Vec<Scalar>> = free.iter().map(|&f| unit(self.dim, f)).collect();
        let section = Matrix::from_columns(self.dim, &sec_cols)?;
        let unit = self.unit.as_ref().map(|u| projection.apply(u));
        let algebra = StructAlgebra { field: self.field, dim: q, table: t, unit }.with_detected_unit();
        Ok(Quotient { algebra, ideal: ideal.clone(), projection, section })
    }

    /// The same algebra in the basis `f_j = sum_i p[i][j] e_i` (columns of `p`).
    pub fn change_basis(&self, p: &Matrix) -> Result<StructAlgebra> {
        let inv = p.inverse().ok_or_else(|| Error::Precondition("change of basis is not invertible".into()))?;
        let n = self.dim;
        let f: Vec<Vec<Scalar>> = (0..n).map(|j| p.column(j)).collect();
        let mut t = StructureTensor::zero(n, n, n);
        for i in 0..n {
            for j in 0..n {
                for (k, x) in inv.apply(&self.mul(&f[i], &f[j])).into_iter().enumerate() {
                    t.set(i, j, k, x);
                }
            }
        }
        let unit = self.unit.as_ref().map(|u| inv.apply(u));
        Ok(StructAlgebra { field: self.field, dim: n, table: t, unit })
    }

    /// Maximal semisimple subalgebra `B0` with `A = B0 ⊕ J(A)`, by lifting a
    /// complement of the radical multiplicatively modulo `J, J^2, J^4, ...`.
    pub fn wedderburn_malcev(&self) -> Result<Subspace> {
        let j = self.jacobson_radical();
        if j.is_zero() {
            return Ok(Subspace::full(self.dim));
        }
        let free = j.free_columns();
        let q = free.len();
        // gamma[a][b] = coordinates of e_a e_b modulo J
        let gamma: Vec<Vec<Vec<Scalar>>> = free
            .iter()
            .map(|&fa| free.iter().map(|&fb| j.quotient_coords(self.basis_product(fa, fb))).collect())
            .collect();
        let mut lift: Vec<Vec<Scalar>> = free.iter().map(|&f| unit(self.dim, f)).collect();
        let error = |lift: &[Vec<Scalar>], a: usize, b: usize| -> Vec<Scalar> {
            let mut e = self.mul(&lift[a], &lift[b]);
            for (c, g) in gamma[a][b].iter().enumerate() {
                if !g.is_zero() {
                    e = vec_sub(&e, &vec_scale(g, &lift[c]));
                }
            }
            e
        };
        let mut k = 1;
        loop {
            let errors: Vec<Vec<Vec<Scalar>>> = (0..q).map(|a| (0..q).map(|b| error(&lift, a, b)).collect()).collect();
            if errors.iter().flatten().all(|e| is_zero_vec(e)) {
                break;
            }
            let jk = self.power(&j, k)?;
            let j2k = self.power(&j, 2 * k)?;
            if jk.is_zero() {
                return Err(Error::Internal("Wedderburn-Malcev lifting did not converge".into()));
            }
            // unknowns: delta_a = sum_t x[a][t] jk_t
            let r = jk.dim();
            let var = |a: usize, t: usize| a * r + t;
            let nvars = q * r;
            let mut eqs: Vec<Vec<Scalar>> = Vec::new();
            let mut rhs: Vec<Scalar> = Vec::new();
            let jb = jk.basis();
            for a in 0..q {
                for b in 0..q {
                    // lift_a delta_b + delta_a lift_b - sum_c gamma_abc delta_c = -E_ab (mod J^{2k})
                    let mut cols: Vec<Vec<Scalar>> = vec![vec![Scalar::zero(); self.dim]; nvars];
                    for t in 0..r {
                        let x = self.mul(&lift[a], &jb[t]);
                        cols[var(b, t)] = vec_add(&cols[var(b, t)], &x);
                        let y = self.mul(&jb[t], &lift[b]);
                        cols[var(a, t)] = vec_add(&cols[var(a, t)], &y);
                        for (c, g) in gamma[a][b].iter().enumerate() {
                            if !g.is_zero() {
                                cols[var(c, t)] = vec_sub(&cols[var(c, t)], &vec_scale(g, &jb[t]));
                            }
                        }
                    }
                    let qcols: Vec<Vec<Scalar>> = cols.iter().map(|c| j2k.quotient_coords(c)).collect();
                    let target = j2k.quotient_coords(&errors[a][b]);
                    for row in 0..target.len() {
                        eqs.push(qcols.iter().map(|c| c[row].clone()).collect());
                        rhs.push(-&target[row]);
                    }
                }
            }
            let x = Matrix::from_rows(eqs)?
                .solve(&rhs)?
                .ok_or_else(|| Error::Internal("Wedderburn-Malcev correction system is inconsistent".into()))?;
            for a in 0..q {
                let coords: Vec<Scalar> = (0..r).map(|t| x[var(a, t)].clone()).collect();
                lift[a] = vec_add(&lift[a], &jk.combine(&coords));
            }
            k *= 2;
        }
        Subspace::span(self.dim, &lift)
    }

    /// `{ x : x e_i = e_i x for all i }`
    pub fn center(&self) -> Subspace {
        let n = self.dim;
        let mut rows = Vec::with_capacity(n * n);
        for i in 0..n {
            for l in 0..n {
                rows.push((0..n).map(|k| self.table.entry(k, i, l) - self.table.entry(i, k, l)).collect::<Vec<_>>());
            }
        }
        if rows.is_empty() {
            return Subspace::zero(0);
        }
        let m = Matrix::from_rows(rows).expect("rectangular");
        Subspace::span(n, &m.kernel()).expect("ambient length")
    }

    /// Minimal polynomial of an element of a unital algebra.
    pub fn minimal_polynomial(&self, s: &[Scalar]) -> Result<Poly> {
        let one = self.unit().ok_or_else(|| Error::NotUnital("minimal polynomial needs a unit".into()))?;
        Ok(idempotents::minimal_polynomial(self, s, one))
    }

    /// Basis vectors `e_0, ..., e_{n-1}`.
    pub fn basis(&self) -> Vec<Vec<Scalar>> {
        (0..self.dim).map(|i| unit(self.dim, i)).collect()
    }

    /// Primitive central idempotents of a unital algebra, sorted by their
    /// coordinate vectors. Fails with `FieldTooSmall` if the center does not
    /// split over the ground field.
    pub fn primitive_central_idempotents(&self) -> Result<Vec<Vec<Scalar>>> {
        idempotents::primitive_central_idempotents(self)
    }
}

/// Small standard algebras over Q.
pub mod examples {
    use super::*;

    pub fn q() -> FieldSpec {
        FieldSpec::Rational
    }

    /// `M_k` with basis `e_{ij}` at index `k*i + j`.
    pub fn matrix_algebra(k: usize) -> StructAlgebra {
        StructAlgebra::from_products(q(), k * k, |a, b| {
            let (i, j) = (a / k, a % k);
            let (j2, l) = (b / k, b % k);
            if j == j2 {
                vec![(k * i + l, Scalar::one())]
            } else {
                vec![]
            }
        })
        .expect("matrix units multiply associatively")
    }

    /// Upper triangular `k x k` matrices (strict if `strict`), basis `e_{ij}`, `i <= j`, row by row.
    pub fn triangular(k: usize, strict: bool) -> StructAlgebra {
        let idx: Vec<(usize, usize)> =
            (0..k).flat_map(|i| (i..k).map(move |j| (i, j))).filter(|(i, j)| !strict || i < j).collect();
        let pos = |p: (usize, usize)| idx.iter().position(|&x| x == p);
        StructAlgebra::from_products(q(), idx.len(), |a, b| {
            let (i, j) = idx[a];
            let (j2, l) = idx[b];
            if j == j2 {
                pos((i, l)).map(|p| vec![(p, Scalar::one())]).unwrap_or_default()
            } else {
                vec![]
            }
        })
        .expect("triangular units multiply associatively")
    }

    /// `F[x]/(x^m)` with basis `1, x, ..., x^{m-1}`.
    pub fn truncated(m: usize) -> StructAlgebra {
        StructAlgebra::from_products(q(), m, |i, j| if i + j < m { vec![(i + j, Scalar::one())] } else { vec![] })
            .expect("monomials multiply associatively")
    }

    /// `F^k` with orthogonal idempotents.
    pub fn diagonal(k: usize) -> StructAlgebra {
        StructAlgebra::from_products(q(), k, |i, j| if i == j { vec![(i, Scalar::one())] } else { vec![] }).expect("idempotents multiply associatively")
    }
}

#[cfg(test)]
mod tests {
    use super::examples::*;
    use super::*;
    use proptest::prelude::*;

    fn v(x: &[i64]) -> Vec<Scalar> {
        x.iter().map(|&a| Scalar::from(a)).collect()
    }

    #[test]
    fn associativity() {
        assert!(matrix_algebra(2).check_associativity());
        assert!(diagonal(1).check_associativity());
        let m2 = matrix_algebra(2);
        let mut t = m2.table().clone();
        t.set(0, 1, 1, Scalar::from(2));
        let bad = StructAlgebra::new(q(), 4, t, None).unwrap();
        assert!(!bad.check_associativity());
    }

    #[test]
    fn units() {
        assert_eq!(matrix_algebra(2).unit().unwrap(), v(&[1, 0, 0, 1]).as_slice());
        assert!(triangular(3, true).unit().is_none());
        let zero = StructAlgebra::from_products(q(), 1, |_, _| vec![]).unwrap();
        let plus = zero.adjoin_unit();
        assert_eq!(plus.dim(), 2);
        assert!(plus.check_associativity());
        // x^2 = 0 with unit: isomorphic to F[x]/(x^2)
        assert!(plus.basis_product(0, 0).iter().all(Scalar::is_zero));
        assert_eq!(plus.jacobson_radical(), Subspace::coordinate(2, &[0]));
        let m2p = matrix_algebra(2).adjoin_unit();
        assert_eq!(m2p.dim(), 5);
        assert_eq!(m2p.jacobson_radical().dim(), 0);
    }

    #[test]
    fn radicals() {
        assert!(matrix_algebra(2).jacobson_radical().is_zero());
        let ut2 = triangular(2, false);
        let j = ut2.jacobson_radical();
        assert_eq!(j, Subspace::coordinate(3, &[1]));
        assert_eq!(truncated(2).jacobson_radical(), Subspace::coordinate(2, &[1]));
        assert_eq!(ut2.nilpotency_index(&j).unwrap(), Some(2));
        assert_eq!(ut2.nilpotency_index(&Subspace::full(3)).unwrap(), None);
        let n3 = triangular(3, true);
        assert_eq!(n3.nilpotency_index(&Subspace::full(3)).unwrap(), Some(3));
        assert!(matrix_algebra(2).nilpotency_index(&Subspace::full(4)).unwrap().is_none());
    }

    #[test]
    fn radical_properties() {
        for a in [triangular(2, false), triangular(3, false), truncated(3), matrix_algebra(2), triangular(3, true)] {
            let j = a.jacobson_radical();
            assert!(a.is_ideal(&j).unwrap());
            assert!(a.is_nilpotent(&j).unwrap());
            let quot = a.quotient(&j).unwrap();
            assert!(quot.algebra.jacobson_radical().is_zero());
            let plus = a.adjoin_unit();
            let embedded: Vec<Vec<Scalar>> =
                j.basis().iter().map(|b| b.iter().cloned().chain([Scalar::zero()]).collect()).collect();
            assert_eq!(plus.jacobson_radical(), Subspace::span(a.dim() + 1, &embedded).unwrap());
        }
    }

    #[test]
    fn wedderburn_malcev_splittings() {
        let m2 = matrix_algebra(2);
        assert!(m2.wedderburn_malcev().unwrap().is_full());
        let ut2 = triangular(2, false);
        assert_eq!(ut2.wedderburn_malcev().unwrap(), Subspace::coordinate(3, &[0, 2]));
        assert_eq!(truncated(2).wedderburn_malcev().unwrap(), Subspace::coordinate(2, &[0]));
    }

    #[test]
    fn wedderburn_malcev_needs_correction() {
        // UT2 in the basis f0 = e11 + e12, f1 = e12, f2 = e22: the naive
        // complement span{f0, f2} is not a subalgebra.
        let p = Matrix::from_ints(&[&[1, 0, 0], &[1, 1, 0], &[0, 0, 1]]);
        let a = triangular(2, false).change_basis(&p).unwrap();
        let j = a.jacobson_radical();
        let b0 = a.wedderburn_malcev().unwrap();
        check_wm(&a, &j, &b0);
        // UT3 in a sheared basis
        let ut3 = triangular(3, false);
        let n = ut3.dim();
        let mut p = Matrix::identity(n);
        for i in 0..n {
            for k in 0..n {
                if k > i && (i + k) % 2 == 1 {
                    p.set(k, i, Scalar::from(1));
                }
            }
        }
        let a = ut3.change_basis(&p).unwrap();
        let j = a.jacobson_radical();
        check_wm(&a, &j, &a.wedderburn_malcev().unwrap());
    }

    fn check_wm(a: &StructAlgebra, j: &Subspace, b0: &Subspace) {
        assert!(b0.intersect(j).unwrap().is_zero());
        assert!(b0.sum(j).unwrap().is_full());
        assert!(a.is_subalgebra(b0).unwrap());
        let g = a.trace_form(b0.basis());
        assert_eq!(g.rank(), b0.dim());
    }

    #[test]
    fn centers_and_idempotents() {
        let m2 = matrix_algebra(2);
        assert_eq!(m2.center().dim(), 1);
        assert_eq!(m2.primitive_central_idempotents().unwrap(), vec![v(&[1, 0, 0, 1])]);
        assert_eq!(diagonal(2).primitive_central_idempotents().unwrap(), vec![v(&[1, 0]), v(&[0, 1])]);
        let ut2 = triangular(2, false);
        assert_eq!(ut2.center(), Subspace::span(3, &[v(&[1, 0, 1])]).unwrap());
        assert_eq!(ut2.primitive_central_idempotents().unwrap(), vec![v(&[1, 0, 1])]);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]
        #[test]
        fn radical_is_basis_independent(d in proptest::collection::vec(-2i64..3, 9)) {
            let mut p = Matrix::from_flat(3, 3, d.into_iter().map(Scalar::from).collect());
            for i in 0..3 {
                p.set(i, i, Scalar::from(5));
            }
            let a = triangular(2, false);
            let b = a.change_basis(&p).unwrap();
            prop_assert!(b.check_associativity());
            let j = b.jacobson_radical();
            prop_assert_eq!(j.dim(), 1);
            prop_assert_eq!(j.image(&p).unwrap(), a.jacobson_radical());
            let b0 = b.wedderburn_malcev().unwrap();
            check_wm(&b, &j, &b0);
        }
    }
}
