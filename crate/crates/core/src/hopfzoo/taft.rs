use crate::algebra::StructAlgebra;
use crate::error::{Error, Result};
use crate::field::{is_primitive_root, FieldSpec, Scalar};
use crate::linalg::{vec_add, Matrix};

use super::{taft_presentation, HopfPresentation};

/// `H_{m²}(ζ)` materialized on the basis `c^i v^k` (index `i*m + k`).
#[derive(Clone, Debug)]
pub struct TaftAlgebra {
    pub m: u32,
    pub zeta: Scalar,
    pub algebra: StructAlgebra,
    /// `Δ(c^i v^k)` as a vector over the basis `b_x ⊗ b_y` (index `x*m² + y`).
    pub coproduct: Vec<Vec<Scalar>>,
    pub counit: Vec<Scalar>,
    pub antipode: Matrix,
}

pub fn taft(m: u32, zeta: &Scalar) -> Result<TaftAlgebra> {
    if m < 2 || !is_primitive_root(zeta, m) {
        return Err(Error::Precondition(format!("{zeta} is not a primitive {m}-th root of unity")));
    }
    let field = match zeta.order() {
        None => FieldSpec::Rational,
        Some(o) => FieldSpec::Cyclotomic(o),
    };
    let mu = m as usize;
    let idx = |i: usize, k: usize| (i % mu) * mu + k;
    // (c^i v^k)(c^j v^l) = ζ^{kj} c^{i+j} v^{k+l}
    let algebra = StructAlgebra::from_products(field, mu * mu, |x, y| {
        let (i, k) = (x / mu, x % mu);
        let (j, l) = (y / mu, y % mu);
        if k + l >= mu {
            vec![]
        } else {
            vec![(idx(i + j, k + l), zeta.pow((k * j) as u64))]
        }
    })?;
    let d = mu * mu;
    let tensor_mul = |a: &[Scalar], b: &[Scalar]| -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); d * d];
        for (p, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (q, y) in b.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                let (a1, a2) = (p / d, p % d);
                let (b1, b2) = (q / d, q % d);
                let c = x * y;
                for (u, s) in algebra.basis_product(a1, b1).iter().enumerate().filter(|(_, s)| !s.is_zero()) {
                    for (w, t) in algebra.basis_product(a2, b2).iter().enumerate().filter(|(_, t)| !t.is_zero()) {
                        let k = u * d + w;
                        out[k] = &out[k] + &(&c * &(s * t));
                    }
                }
            }
        }
        out
    };
    let simple = |x: usize, y: usize| {
        let mut v = vec![Scalar::zero(); d * d];
        v[x * d + y] = Scalar::one();
        v
    };
    let (c, v, one) = (idx(1, 0), idx(0, 1), idx(0, 0));
    let delta_c = simple(c, c);
    let delta_v = vec_add(&simple(c, v), &simple(v, one));
    let mut coproduct = Vec::with_capacity(d);
    for x in 0..d {
        let (i, k) = (x / mu, x % mu);
        let mut acc = simple(one, one);
        for _ in 0..i {
            acc = tensor_mul(&acc, &delta_c);
        }
        for _ in 0..k {
            acc = tensor_mul(&acc, &delta_v);
        }
        coproduct.push(acc);
    }
    let counit = (0..d).map(|x| if x % mu == 0 { Scalar::one() } else { Scalar::zero() }).collect();
    // S(c) = c^{m-1}, S(v) = -c^{m-1} v, and S(c^i v^k) = S(v)^k S(c)^i.
    let basis = |x: usize| algebra.basis_vector(x);
    let s_c = basis(idx(mu - 1, 0));
    let s_v = algebra.mul(&basis(idx(mu - 1, 0)), &basis(v)).iter().map(|x| -x).collect::<Vec<_>>();
    let mut cols = Vec::with_capacity(d);
    for x in 0..d {
        let (i, k) = (x / mu, x % mu);
        let mut acc = basis(one);
        for _ in 0..k {
            acc = algebra.mul(&acc, &s_v);
        }
        for _ in 0..i {
            acc = algebra.mul(&acc, &s_c);
        }
        cols.push(acc);
    }
    let antipode = Matrix::from_columns(d, &cols)?;
    Ok(TaftAlgebra { m, zeta: zeta.clone(), algebra, coproduct, counit, antipode })
}

impl TaftAlgebra {
    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// Index of `c^i v^k`.
    pub fn index(&self, i: usize, k: usize) -> usize {
        let mu = self.m as usize;
        (i % mu) * mu + k
    }

    pub fn presentation(&self) -> HopfPresentation {
        taft_presentation(self.m, &self.zeta).expect("validated on construction")
    }

    /// `Δ(x)` for an arbitrary element.
    pub fn delta(&self, x: &[Scalar]) -> Vec<Scalar> {
        let d = self.dim();
        x.iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .fold(vec![Scalar::zero(); d * d], |acc, (i, c)| {
                vec_add(&acc, &self.coproduct[i].iter().map(|y| c * y).collect::<Vec<_>>())
            })
    }

    pub fn epsilon(&self, x: &[Scalar]) -> Scalar {
        x.iter().zip(&self.counit).map(|(a, b)| a * b).sum()
    }
}
