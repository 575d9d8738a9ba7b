use crate::error::{Error, Result};
use crate::field::{factor, Poly, Scalar};
use crate::linalg::{is_zero_vec, vec_add, vec_scale, Matrix};

use super::StructAlgebra;

/// Minimal polynomial of `s` inside the unital corner with unit `e`
/// (found from the Krylov sequence `e, s, s^2, ...`).
pub(super) fn minimal_polynomial(a: &StructAlgebra, s: &[Scalar], e: &[Scalar]) -> Poly {
    let mut powers: Vec<Vec<Scalar>> = vec![e.to_vec()];
    loop {
        let next = a.mul(powers.last().unwrap(), s);
        let m = Matrix::from_columns(a.dim(), &powers).expect("columns have ambient length");
        if let Some(b) = m.solve(&next).expect("dims") {
            let mut coeffs: Vec<Scalar> = b.into_iter().map(|x| -x).collect();
            coeffs.push(Scalar::one());
            return Poly::new(coeffs);
        }
        powers.push(next);
    }
}

pub(super) fn eval_in(a: &StructAlgebra, p: &Poly, s: &[Scalar], e: &[Scalar]) -> Vec<Scalar> {
    let mut acc = vec![Scalar::zero(); a.dim()];
    for c in p.coeffs().iter().rev() {
        acc = a.mul(&acc, s);
        if !c.is_zero() {
            acc = vec_add(&acc, &vec_scale(c, e));
        }
    }
    acc
}

/// Splits `e` along the factorization of the minimal polynomial of `s e`.
/// Returns `None` when the minimal polynomial is a power of one linear factor.
fn split(a: &StructAlgebra, e: &[Scalar], s: &[Scalar]) -> Result<Option<Vec<Vec<Scalar>>>> {
    let se = a.mul(s, e);
    let m = minimal_polynomial(a, &se, e);
    let factors = factor(&m, a.field().order());
    if let Some((f, _)) = factors.iter().find(|(f, _)| f.degree() != Some(1)) {
        return Err(Error::FieldTooSmall { factor: f.to_string(), field: a.field().to_string() });
    }
    if factors.len() < 2 {
        return Ok(None);
    }
    let parts: Vec<Poly> = factors.iter().map(|(f, k)| f.pow(*k as u32)).collect();
    let mut out = Vec::with_capacity(parts.len());
    for (i, g) in parts.iter().enumerate() {
        let cofactor = parts.iter().enumerate().filter(|(j, _)| *j != i).fold(Poly::one(), |acc, (_, p)| acc.mul(p));
        let (one, u, _) = cofactor.ext_gcd(g);
        debug_assert!(one == Poly::one());
        let idem = u.mul(&cofactor).rem(&m);
        out.push(eval_in(a, &idem, &se, e));
    }
    Ok(Some(out))
}

pub(super) fn primitive_central_idempotents(a: &StructAlgebra) -> Result<Vec<Vec<Scalar>>> {
    let one = a
        .unit()
        .ok_or_else(|| Error::NotUnital("central idempotents require a unit".into()))?
        .to_vec();
    if a.dim() == 0 {
        return Ok(Vec::new());
    }
    let z = a.center();
    let mut work = vec![one];
    let mut done: Vec<Vec<Scalar>> = Vec::new();
    'outer: while let Some(e) = work.pop() {
        for s in z.basis() {
            if let Some(pieces) = split(a, &e, s)? {
                work.extend(pieces.into_iter().filter(|p| !is_zero_vec(p)));
                continue 'outer;
            }
        }
        done.push(e);
    }
    done.sort_by_cached_key(|v| {
        let first = v.iter().position(|x| !x.is_zero()).unwrap_or(usize::MAX);
        (first, v.iter().map(|x| x.to_string()).collect::<Vec<_>>())
    });
    Ok(done)
}

#[cfg(test)]
mod tests {
    use super::super::examples::*;
    use super::*;
    use crate::field::FieldSpec;

    fn check_complete_orthogonal(a: &StructAlgebra, es: &[Vec<Scalar>]) {
        let mut sum = vec![Scalar::zero(); a.dim()];
        for (i, e) in es.iter().enumerate() {
            for (j, f) in es.iter().enumerate() {
                let p = a.mul(e, f);
                if i == j {
                    assert_eq!(&p, e);
                } else {
                    assert!(is_zero_vec(&p));
                }
            }
            sum = vec_add(&sum, e);
        }
        assert_eq!(sum.as_slice(), a.unit().unwrap());
    }

    #[test]
    fn splits_products() {
        let d3 = diagonal(3);
        let es = primitive_central_idempotents(&d3).unwrap();
        assert_eq!(es.len(), 3);
        check_complete_orthogonal(&d3, &es);
        // M2 x UT2 x F[x]/(x^2) as a block sum has three central blocks
        let parts = [matrix_algebra(2), triangular(2, false), truncated(2)];
        let dims: Vec<usize> = parts.iter().map(StructAlgebra::dim).collect();
        let offs: Vec<usize> = dims.iter().scan(0, |s, d| { let o = *s; *s += d; Some(o) }).collect();
        let total: usize = dims.iter().sum();
        let block = StructAlgebra::from_products(FieldSpec::Rational, total, |i, j| {
            let bi = offs.iter().rposition(|&o| o <= i).unwrap();
            let bj = offs.iter().rposition(|&o| o <= j).unwrap();
            if bi != bj {
                return vec![];
            }
            parts[bi]
                .basis_product(i - offs[bi], j - offs[bj])
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (k + offs[bi], c.clone()))
                .collect()
        })
        .unwrap();
        let es = primitive_central_idempotents(&block).unwrap();
        assert_eq!(es.len(), 3);
        check_complete_orthogonal(&block, &es);
    }

    #[test]
    fn nonsplit_center_is_reported() {
        // Q(i) as a 2-dimensional Q-algebra: basis 1, i
        let qi = StructAlgebra::from_products(FieldSpec::Rational, 2, |a, b| match (a, b) {
            (0, k) | (k, 0) => vec![(k, Scalar::one())],
            _ => vec![(0, Scalar::from(-1))],
        })
        .unwrap();
        match primitive_central_idempotents(&qi) {
            Err(Error::FieldTooSmall { factor, .. }) => assert_eq!(factor, "x^2 + 1"),
            other => panic!("expected FieldTooSmall, got {other:?}"),
        }
        // the same algebra over Q(z_4) splits
        let qi4 = StructAlgebra::from_products(FieldSpec::Cyclotomic(4), 2, |a, b| match (a, b) {
            (0, k) | (k, 0) => vec![(k, Scalar::one())],
            _ => vec![(0, Scalar::from(-1))],
        })
        .unwrap();
        let es = primitive_central_idempotents(&qi4).unwrap();
        assert_eq!(es.len(), 2);
        check_complete_orthogonal(&qi4, &es);
    }

    #[test]
    fn local_algebra_has_one_idempotent() {
        let a = truncated(3);
        assert_eq!(primitive_central_idempotents(&a).unwrap(), vec![a.unit().unwrap().to_vec()]);
        assert!(matches!(primitive_central_idempotents(&triangular(2, true)), Err(Error::NotUnital(_))));
    }
}
