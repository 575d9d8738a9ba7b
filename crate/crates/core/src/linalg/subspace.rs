use std::fmt;

use crate::error::{check_dim, Error, Result};
use crate::field::Scalar;

use super::Matrix;

/// A subspace of `F^n`, stored by its reduced row-echelon basis. Two subspaces
/// are equal iff their canonical bases coincide.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        let basis = (0..ambient).map(|i| unit(ambient, i)).collect();
        Subspace { ambient, basis, pivots: (0..ambient).collect() }
    }

    pub fn span<V: AsRef<[Scalar]>>(ambient: usize, vectors: &[V]) -> Result<Self> {
        let mut rows = Vec::with_capacity(vectors.len());
        for v in vectors {
            let v = v.as_ref();
            check_dim("vector in span", ambient, v.len())?;
            if v.iter().any(|x| !x.is_zero()) {
                rows.push(v.to_vec());
            }
        }
        if rows.is_empty() {
            return Ok(Subspace::zero(ambient));
        }
        let (r, pivots) = Matrix::from_rows(rows)?.rref();
        let basis = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Ok(Subspace { ambient, basis, pivots })
    }

    /// Span of the standard basis vectors with the given indices.
    pub fn coordinate(ambient: usize, indices: &[usize]) -> Self {
        let vs: Vec<Vec<Scalar>> = indices.iter().map(|&i| unit(ambient, i)).collect();
        Subspace::span(ambient, &vs).expect("indices within ambient dimension")
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Columns that are not pivots; the unit vectors there span a complement.
    pub fn free_columns(&self) -> Vec<usize> {
        let mut piv = self.pivots.iter().peekable();
        (0..self.ambient)
            .filter(|c| {
                if piv.peek() == Some(&c) {
                    piv.next();
                    false
                } else {
                    true
                }
            })
            .collect()
    }

    pub fn complement_basis(&self) -> Vec<Vec<Scalar>> {
        self.free_columns().into_iter().map(|c| unit(self.ambient, c)).collect()
    }

    /// Canonical representative of `v` modulo this subspace (zero at every pivot).
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut out = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if out[p].is_zero() {
                continue;
            }
            let f = out[p].clone();
            for (o, r) in out.iter_mut().zip(row) {
                if !r.is_zero() {
                    *o = &*o - &(&f * r);
                }
            }
        }
        out
    }

    /// Coordinates of the class of `v` in the quotient, in the basis given by
    /// `complement_basis`.
    pub fn quotient_coords(&self, v: &[Scalar]) -> Vec<Scalar> {
        let r = self.reduce(v);
        self.free_columns().into_iter().map(|c| r[c].clone()).collect()
    }

    pub fn contains(&self, v: &[Scalar]) -> Result<bool> {
        check_dim("membership test", self.ambient, v.len())?;
        Ok(self.reduce(v).iter().all(Scalar::is_zero))
    }

    /// Coordinates of `v` against the canonical basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if v.len() != self.ambient || !self.reduce(v).iter().all(Scalar::is_zero) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Vector with the given coordinates against the canonical basis.
    pub fn combine(&self, coords: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.ambient];
        for (c, row) in coords.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for (o, r) in out.iter_mut().zip(row) {
                if !r.is_zero() {
                    *o = &*o + &(c * r);
                }
            }
        }
        out
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        check_dim("subspace inclusion", other.ambient, self.ambient)?;
        Ok(self.basis.iter().all(|b| other.reduce(b).iter().all(Scalar::is_zero)))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        check_dim("subspace sum", self.ambient, other.ambient)?;
        let mut vs = self.basis.clone();
        vs.extend(other.basis.iter().cloned());
        Subspace::span(self.ambient, &vs)
    }

    /// Intersection, via the kernel of the system `sum a_i v_i = 0 (mod other)`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        check_dim("subspace intersection", self.ambient, other.ambient)?;
        if self.is_zero() || other.is_full() {
            return Ok(self.clone());
        }
        let cols: Vec<Vec<Scalar>> = self.basis.iter().map(|b| other.quotient_coords(b)).collect();
        let m = Matrix::from_columns(self.ambient - other.dim(), &cols)?;
        let vs: Vec<Vec<Scalar>> = m.kernel().iter().map(|c| self.combine(c)).collect();
        Subspace::span(self.ambient, &vs)
    }

    /// Image under a linear map given by its matrix (acting on column vectors).
    pub fn image(&self, map: &Matrix) -> Result<Subspace> {
        check_dim("image of subspace", self.ambient, map.cols())?;
        let vs: Vec<Vec<Scalar>> = self.basis.iter().map(|b| map.apply(b)).collect();
        Subspace::span(map.rows(), &vs)
    }

    pub fn is_stable_under(&self, map: &Matrix) -> Result<bool> {
        check_dim("stability test", self.ambient, map.cols())?;
        check_dim("stability test", self.ambient, map.rows())?;
        Ok(self.basis.iter().all(|b| self.reduce(&map.apply(b)).iter().all(Scalar::is_zero)))
    }

    /// Matrix of `map` restricted to this (stable) subspace, in canonical coordinates.
    pub fn restrict(&self, map: &Matrix) -> Result<Matrix> {
        let cols = self
            .basis
            .iter()
            .map(|b| {
                self.coordinates(&map.apply(b))
                    .ok_or_else(|| Error::Precondition("subspace is not stable under the map".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Matrix::from_columns(self.dim(), &cols)
    }

    /// `ambient x dim` matrix whose columns are the canonical basis vectors.
    pub fn basis_matrix(&self) -> Matrix {
        Matrix::from_columns(self.ambient, &self.basis).expect("basis vectors have ambient length")
    }
}

pub(crate) fn unit(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); n];
    v[i] = Scalar::one();
    v
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} in {}) [", self.dim(), self.ambient)?;
        for (i, b) in self.basis.iter().enumerate() {
            let row: Vec<String> = b.iter().map(|x| x.to_string()).collect();
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "({})", row.join(", "))?;
        }
        f.write_str("]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(x: &[i64]) -> Vec<Scalar> {
        x.iter().map(|&a| Scalar::from(a)).collect()
    }

    #[test]
    fn intersection_and_sum() {
        let a = Subspace::span(2, &[v(&[1, 0]), v(&[0, 1])]).unwrap();
        let b = Subspace::span(2, &[v(&[1, 1])]).unwrap();
        assert_eq!(a.intersect(&b).unwrap(), b);
        let c = Subspace::span(2, &[v(&[1, 0])]).unwrap();
        assert!(c.sum(&b).unwrap().is_full());
        assert!(c.intersect(&b).unwrap().is_zero());
        assert!(matches!(c.sum(&Subspace::zero(3)), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn canonical_form() {
        let a = Subspace::span(3, &[v(&[2, 4, 0]), v(&[1, 2, 1])]).unwrap();
        let b = Subspace::span(3, &[v(&[0, 0, 5]), v(&[-1, -2, 3])]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.free_columns(), vec![1]);
        assert_eq!(a.quotient_coords(&v(&[0, 1, 0])), v(&[1]));
        let x = v(&[3, 6, -2]);
        assert_eq!(a.combine(&a.coordinates(&x).unwrap()), x);
        assert!(a.coordinates(&v(&[0, 1, 0])).is_none());
    }

    #[test]
    fn images_and_restriction() {
        let shift = Matrix::from_ints(&[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]);
        let s = Subspace::coordinate(3, &[0, 1]);
        assert!(s.is_stable_under(&shift).unwrap());
        assert_eq!(s.restrict(&shift).unwrap(), Matrix::from_ints(&[&[0, 1], &[0, 0]]));
        assert_eq!(Subspace::full(3).image(&shift).unwrap(), s);
        assert!(!Subspace::coordinate(3, &[2]).is_stable_under(&shift).unwrap());
    }
}
