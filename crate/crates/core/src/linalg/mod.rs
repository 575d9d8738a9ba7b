//! Exact linear algebra: matrices, canonical subspaces, bilinear images,
//! invariant shrinking, equivariant projections and streaming rank.

mod matrix;
mod stream;
mod subspace;

pub use matrix::Matrix;
pub use stream::RankAccumulator;
pub use subspace::Subspace;
pub(crate) use subspace::unit;

use crate::error::{check_dim, Error, Result};
use crate::field::Scalar;

/// Bilinear map `F^left x F^right -> F^out`: `B(e_i, e_j) = sum_k data[i][j][k] e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureTensor {
    left: usize,
    right: usize,
    out: usize,
    data: Vec<Scalar>,
}

impl StructureTensor {
    pub fn new(left: usize, right: usize, out: usize, data: Vec<Scalar>) -> Result<Self> {
        check_dim("structure tensor size", left * right * out, data.len())?;
        Ok(StructureTensor { left, right, out, data })
    }

    pub fn zero(left: usize, right: usize, out: usize) -> Self {
        StructureTensor { left, right, out, data: vec![Scalar::zero(); left * right * out] }
    }

    pub fn dims(&self) -> (usize, usize, usize) {
        (self.left, self.right, self.out)
    }

    pub fn entry(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.data[(i * self.right + j) * self.out + k]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: Scalar) {
        self.data[(i * self.right + j) * self.out + k] = v;
    }

    /// `B(e_i, e_j)`
    pub fn basis_product(&self, i: usize, j: usize) -> &[Scalar] {
        let s = (i * self.right + j) * self.out;
        &self.data[s..s + self.out]
    }

    pub fn apply(&self, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        let mut acc = vec![Scalar::zero(); self.out];
        for (i, a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in v.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (o, c) in acc.iter_mut().zip(self.basis_product(i, j)) {
                    if !c.is_zero() {
                        *o = &*o + &(&ab * c);
                    }
                }
            }
        }
        acc
    }

    pub fn raw(&self) -> &[Scalar] {
        &self.data
    }
}

pub fn vec_add(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_scale(c: &Scalar, a: &[Scalar]) -> Vec<Scalar> {
    a.iter().map(|x| c * x).collect()
}

pub fn is_zero_vec(a: &[Scalar]) -> bool {
    a.iter().all(Scalar::is_zero)
}

/// Span of `B(v, w)` over the bases of `v` and `w`.
/// Coordinates against a fixed list of independent vectors, computed once.
#[derive(Clone, Debug)]
pub struct SpanCoordinates {
    span: Subspace,
    to_basis: Matrix,
}

impl SpanCoordinates {
    pub fn new(ambient: usize, vectors: &[Vec<Scalar>]) -> Result<Self> {
        let span = Subspace::span(ambient, vectors)?;
        if span.dim() != vectors.len() {
            return Err(Error::Precondition("vectors are linearly dependent".into()));
        }
        let k = vectors.len();
        let cols: Vec<Vec<Scalar>> =
            vectors.iter().map(|v| span.coordinates(v).expect("vector lies in its own span")).collect();
        let to_basis = Matrix::from_columns(k, &cols)?.inverse().expect("independent vectors");
        Ok(SpanCoordinates { span, to_basis })
    }

    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        self.span.coordinates(v).map(|c| self.to_basis.apply(&c))
    }
}

pub fn bilinear_image(v: &Subspace, w: &Subspace, b: &StructureTensor) -> Result<Subspace> {
    check_dim("bilinear image, left argument", b.left, v.ambient())?;
    check_dim("bilinear image, right argument", b.right, w.ambient())?;
    let mut out = Vec::with_capacity(v.dim() * w.dim());
    for x in v.basis() {
        for y in w.basis() {
            out.push(b.apply(x, y));
        }
    }
    Subspace::span(b.out, &out)
}

/// Largest `U` inside `v` with `T(U) ⊆ U` for every operator `T`.
pub fn stable_closure_shrink(v: &Subspace, operators: &[Matrix]) -> Result<Subspace> {
    for t in operators {
        check_dim("operator rows", v.ambient(), t.rows())?;
        check_dim("operator cols", v.ambient(), t.cols())?;
    }
    let mut u = v.clone();
    loop {
        if u.is_zero() || operators.is_empty() {
            return Ok(u);
        }
        // Columns indexed by basis vectors of U; rows stack quotient
        // coordinates of T u_i over all operators.
        let q = u.ambient() - u.dim();
        let mut rows: Vec<Vec<Scalar>> = Vec::new();
        let images: Vec<Vec<Vec<Scalar>>> =
            operators.iter().map(|t| u.basis().iter().map(|b| u.quotient_coords(&t.apply(b))).collect()).collect();
        for img in &images {
            for r in 0..q {
                rows.push(img.iter().map(|c| c[r].clone()).collect());
            }
        }
        if rows.iter().all(|r| r.iter().all(Scalar::is_zero)) {
            return Ok(u);
        }
        let m = Matrix::from_rows(rows)?;
        let keep: Vec<Vec<Scalar>> = m.kernel().iter().map(|c| u.combine(c)).collect();
        let next = Subspace::span(u.ambient(), &keep)?;
        debug_assert!(next.dim() < u.dim());
        u = next;
    }
}

/// A projection `P` onto the stable subspace `s` commuting with all operators.
/// Its kernel is then a stable complement of `s`.
pub fn equivariant_projection(ambient: usize, operators: &[Matrix], s: &Subspace) -> Result<Matrix> {
    check_dim("projection target", ambient, s.ambient())?;
    let n = ambient;
    let k = s.dim();
    if k == 0 {
        return Ok(Matrix::zeros(n, n));
    }
    if k == n {
        return Ok(Matrix::identity(n));
    }
    // P = B X with B the basis matrix of s and X a k x n unknown.
    // Conditions: X s_i = e_i, and X T = M_T X with M_T = T restricted to s.
    let restricted = operators
        .iter()
        .map(|t| s.restrict(t).map_err(|_| Error::Precondition("target subspace is not operator-stable".into())))
        .collect::<Result<Vec<_>>>()?;
    let var = |r: usize, c: usize| r * n + c;
    let nvars = k * n;
    let mut eqs: Vec<Vec<Scalar>> = Vec::new();
    let mut rhs: Vec<Scalar> = Vec::new();
    for (i, si) in s.basis().iter().enumerate() {
        for r in 0..k {
            let mut row = vec![Scalar::zero(); nvars];
            for (c, x) in si.iter().enumerate() {
                row[var(r, c)] = x.clone();
            }
            eqs.push(row);
            rhs.push(if r == i { Scalar::one() } else { Scalar::zero() });
        }
    }
    for (t, mt) in operators.iter().zip(&restricted) {
        // (X T)[r][c] - (M_T X)[r][c] = 0
        for r in 0..k {
            for c in 0..n {
                let mut row = vec![Scalar::zero(); nvars];
                for j in 0..n {
                    let a = t.get(j, c);
                    if !a.is_zero() {
                        row[var(r, j)] = &row[var(r, j)] + a;
                    }
                }
                for j in 0..k {
                    let a = mt.get(r, j);
                    if !a.is_zero() {
                        row[var(j, c)] = &row[var(j, c)] - a;
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    eqs.push(row);
                    rhs.push(Scalar::zero());
                }
            }
        }
    }
    let x = Matrix::from_rows(eqs)?.solve(&rhs)?.ok_or(Error::NotCompletelyReducible)?;
    let xm = Matrix::from_flat(k, n, x);
    Ok(s.basis_matrix().compose(&xm))
}
