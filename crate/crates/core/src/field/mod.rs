//! Exact ground fields: the rationals and cyclotomic extensions `Q(z)` with
//! `z` a primitive `m`-th root of unity.
//!
//! Every value is a [`Scalar`]. Rational values are always stored as
//! [`Scalar::Rat`], whatever cyclotomic field they are viewed in, so that the
//! representation is canonical and equality is structural. Values with a
//! nonzero irrational part carry their order `m` and are reduced residues
//! modulo the cyclotomic polynomial `Phi_m`.

mod factor;
mod poly;

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub use factor::{factor, factor_squarefree, roots};
pub use poly::Poly;

pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot mix elements of Q(z_{left}) and Q(z_{right})")]
    OrderMismatch { left: u32, right: u32 },
    #[error("invalid cyclotomic order {0}")]
    InvalidOrder(u32),
    #[error("cannot parse scalar {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

/// Returns `Phi_m` as integer coefficients, lowest degree first.
pub fn cyclotomic_polynomial(m: u32) -> Vec<BigInt> {
    assert!(m >= 1, "cyclotomic order must be positive");
    // x^m - 1 divided by Phi_d for every proper divisor d.
    let mut num: Vec<BigInt> = vec![BigInt::zero(); m as usize + 1];
    num[0] = BigInt::from(-1);
    num[m as usize] = BigInt::one();
    for d in 1..m {
        if m.is_multiple_of(d) {
            let phi_d = cyclotomic_polynomial(d);
            num = exact_div_monic(&num, &phi_d);
        }
    }
    num
}

fn exact_div_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let nd = rem.len() - 1;
    let mut quot = vec![BigInt::zero(); nd - dd + 1];
    for i in (0..=nd - dd).rev() {
        let c = rem[i + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (j, dj) in den.iter().enumerate() {
            rem[i + j] -= &c * dj;
        }
        quot[i] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    quot
}

/// Euler's totient.
pub fn totient(m: u32) -> usize {
    let mut n = m;
    let mut result = m;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result as usize
}

#[derive(Debug)]
pub(crate) struct CycloCtx {
    order: u32,
    phi: usize,
    /// Phi_m, lowest degree first, monic.
    modulus: Vec<Rational>,
}

fn context(m: u32) -> Arc<CycloCtx> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<CycloCtx>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().expect("cyclotomic context cache poisoned");
    guard
        .entry(m)
        .or_insert_with(|| {
            let modulus: Vec<Rational> = cyclotomic_polynomial(m)
                .into_iter()
                .map(Rational::from_integer)
                .collect();
            Arc::new(CycloCtx { order: m, phi: modulus.len() - 1, modulus })
        })
        .clone()
}

/// A residue modulo `Phi_m` with at least one nonzero coefficient in front of
/// `z^k`, `k >= 1`. Rational values never take this form.
#[derive(Clone)]
pub struct Cyclotomic {
    ctx: Arc<CycloCtx>,
    coeffs: Vec<Rational>,
}

impl Cyclotomic {
    pub fn order(&self) -> u32 {
        self.ctx.order
    }

    /// Coefficients in the power basis `1, z, ..., z^(phi(m)-1)`.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        self.ctx.order == other.ctx.order && self.coeffs == other.coeffs
    }
}
impl Eq for Cyclotomic {}

impl Hash for Cyclotomic {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.ctx.order.hash(state);
        self.coeffs.hash(state);
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (m={})", Scalar::Cyc(self.clone()), self.ctx.order)
    }
}

/// An exact element of `Q` or of some `Q(z_m)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(Rational),
    Cyc(Cyclotomic),
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl From<i64> for Scalar {
    fn from(v: i64) -> Self {
        Scalar::Rat(Rational::from_integer(BigInt::from(v)))
    }
}

impl From<Rational> for Scalar {
    fn from(v: Rational) -> Self {
        Scalar::Rat(v)
    }
}

impl From<BigInt> for Scalar {
    fn from(v: BigInt) -> Self {
        Scalar::Rat(Rational::from_integer(v))
    }
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Rat(Rational::zero())
    }

    pub fn one() -> Self {
        Scalar::Rat(Rational::one())
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        Scalar::Rat(Rational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// The generator `z` of `Q(z_m)`; for `m <= 2` this is the rational `1` or `-1`.
    pub fn zeta(m: u32) -> Result<Self, FieldError> {
        if m == 0 {
            return Err(FieldError::InvalidOrder(m));
        }
        Ok(Self::zeta_power(m, 1))
    }

    fn zeta_power(m: u32, k: u64) -> Self {
        let ctx = context(m);
        let mut coeffs = vec![Rational::zero(); ctx.phi.max((k % m as u64) as usize + 1)];
        coeffs[(k % m as u64) as usize] = Rational::one();
        Self::from_residue(ctx, coeffs)
    }

    /// Builds the canonical scalar from an unreduced coefficient vector.
    fn from_residue(ctx: Arc<CycloCtx>, mut coeffs: Vec<Rational>) -> Self {
        reduce_mod(&mut coeffs, &ctx.modulus);
        coeffs.resize(ctx.phi, Rational::zero());
        if coeffs.iter().skip(1).all(Zero::is_zero) {
            let c0 = coeffs.into_iter().next().unwrap_or_else(Rational::zero);
            Scalar::Rat(c0)
        } else {
            Scalar::Cyc(Cyclotomic { ctx, coeffs })
        }
    }

    /// Builds `sum c_k z^k` in `Q(z_m)`.
    pub fn from_power_coeffs(m: u32, coeffs: Vec<Rational>) -> Result<Self, FieldError> {
        if m == 0 {
            return Err(FieldError::InvalidOrder(m));
        }
        Ok(Self::from_residue(context(m), coeffs))
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Scalar::Rat(r) if r.is_zero())
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Scalar::Rat(r) if r.is_one())
    }

    pub fn is_rational(&self) -> bool {
        matches!(self, Scalar::Rat(_))
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            Scalar::Rat(r) => Some(r),
            Scalar::Cyc(_) => None,
        }
    }

    /// The cyclotomic order for irrational values; `None` for rationals.
    pub fn order(&self) -> Option<u32> {
        match self {
            Scalar::Rat(_) => None,
            Scalar::Cyc(c) => Some(c.ctx.order),
        }
    }

    /// Coefficient vector in the power basis of `Q(z_m)`, padded to `phi(m)`.
    pub fn power_coeffs(&self, m: u32) -> Vec<Rational> {
        let phi = totient(m);
        match self {
            Scalar::Rat(r) => {
                let mut v = vec![Rational::zero(); phi];
                v[0] = r.clone();
                v
            }
            Scalar::Cyc(c) => {
                assert_eq!(c.ctx.order, m, "scalar does not live in Q(z_{m})");
                c.coeffs.clone()
            }
        }
    }

    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar, FieldError> {
        Ok(match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Rat(a), Scalar::Cyc(b)) | (Scalar::Cyc(b), Scalar::Rat(a)) => {
                let mut coeffs = b.coeffs.clone();
                coeffs[0] += a;
                Scalar::Cyc(Cyclotomic { ctx: b.ctx.clone(), coeffs })
            }
            (Scalar::Cyc(a), Scalar::Cyc(b)) => {
                check_orders(a, b)?;
                let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect();
                Scalar::from_residue(a.ctx.clone(), coeffs)
            }
        })
    }

    pub fn checked_sub(&self, other: &Scalar) -> Result<Scalar, FieldError> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar, FieldError> {
        Ok(match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Rat(a), Scalar::Cyc(b)) | (Scalar::Cyc(b), Scalar::Rat(a)) => {
                if a.is_zero() {
                    return Ok(Scalar::zero());
                }
                let coeffs = b.coeffs.iter().map(|x| x * a).collect();
                Scalar::Cyc(Cyclotomic { ctx: b.ctx.clone(), coeffs })
            }
            (Scalar::Cyc(a), Scalar::Cyc(b)) => {
                check_orders(a, b)?;
                let mut prod = vec![Rational::zero(); a.coeffs.len() + b.coeffs.len() - 1];
                for (i, x) in a.coeffs.iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    for (j, y) in b.coeffs.iter().enumerate() {
                        if !y.is_zero() {
                            prod[i + j] += x * y;
                        }
                    }
                }
                Scalar::from_residue(a.ctx.clone(), prod)
            }
        })
    }

    pub fn inv(&self) -> Result<Scalar, FieldError> {
        match self {
            Scalar::Rat(r) => {
                if r.is_zero() {
                    Err(FieldError::DivisionByZero)
                } else {
                    Ok(Scalar::Rat(r.recip()))
                }
            }
            Scalar::Cyc(c) => {
                // a^-1 = (product of the other Galois conjugates) / N(a)
                let m = c.ctx.order;
                let mut others = Scalar::one();
                for k in 2..m {
                    if gcd_u32(k, m) == 1 {
                        others = others.checked_mul(&self.galois(k))?;
                    }
                }
                let norm = self.checked_mul(&others)?;
                match norm {
                    Scalar::Rat(n) => Ok(others.checked_mul(&Scalar::Rat(n.recip()))?),
                    Scalar::Cyc(_) => unreachable!("norm of a cyclotomic element is rational"),
                }
            }
        }
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar, FieldError> {
        self.checked_mul(&other.inv()?)
    }

    pub fn pow(&self, mut e: u64) -> Scalar {
        let mut base = self.clone();
        let mut acc = Scalar::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Applies the automorphism `z -> z^k` (`k` coprime to the order).
    pub fn galois(&self, k: u32) -> Scalar {
        match self {
            Scalar::Rat(_) => self.clone(),
            Scalar::Cyc(c) => {
                let m = c.ctx.order as u64;
                let mut out = vec![Rational::zero(); c.ctx.order as usize];
                for (i, x) in c.coeffs.iter().enumerate() {
                    if !x.is_zero() {
                        out[((i as u64 * k as u64) % m) as usize] += x;
                    }
                }
                Scalar::from_residue(c.ctx.clone(), out)
            }
        }
    }

    /// Parses the canonical string form (`p`, `p/q`, or `c0 + c1*z + c2*z^2 ...`).
    /// `order` is the ambient cyclotomic order (1 for `Q`).
    pub fn parse(input: &str, order: u32) -> Result<Scalar, FieldError> {
        let err = |reason: &str| FieldError::Parse { input: input.to_string(), reason: reason.to_string() };
        if order == 0 {
            return Err(FieldError::InvalidOrder(order));
        }
        let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(err("empty string"));
        }
        // split into signed terms at top-level '+'/'-'
        let bytes = s.as_bytes();
        let mut terms: Vec<(bool, &str)> = Vec::new();
        let mut start = 0;
        let mut negative = false;
        if bytes[0] == b'+' || bytes[0] == b'-' {
            negative = bytes[0] == b'-';
            start = 1;
        }
        let mut i = start;
        while i <= bytes.len() {
            if i == bytes.len() || ((bytes[i] == b'+' || bytes[i] == b'-') && i > start) {
                let prev = bytes[i - 1];
                if i < bytes.len() && (prev == b'^' || prev == b'*' || prev == b'/') {
                    return Err(err("unexpected sign"));
                }
                terms.push((negative, &s[start..i]));
                if i < bytes.len() {
                    negative = bytes[i] == b'-';
                }
                start = i + 1;
            }
            i += 1;
        }
        let mut total = Scalar::zero();
        for (neg, term) in terms {
            if term.is_empty() {
                return Err(err("empty term"));
            }
            let (coef_str, power) = match term.find('z') {
                None => (term, 0u64),
                Some(pos) => {
                    let (c, rest) = term.split_at(pos);
                    let c = c.strip_suffix('*').unwrap_or(c);
                    if !c.is_empty() && term.as_bytes()[pos - 1] != b'*' {
                        return Err(err("expected '*' before z"));
                    }
                    let rest = &rest[1..];
                    let power = if rest.is_empty() {
                        1
                    } else if let Some(p) = rest.strip_prefix('^') {
                        p.parse::<u64>().map_err(|_| err("bad exponent"))?
                    } else {
                        return Err(err("trailing characters after z"));
                    };
                    if order == 1 {
                        return Err(err("z is not available over Q"));
                    }
                    (c, power)
                }
            };
            let coef = if coef_str.is_empty() {
                Rational::one()
            } else {
                parse_rational(coef_str).ok_or_else(|| err("bad rational coefficient"))?
            };
            let coef = if neg { -coef } else { coef };
            let mono = if power == 0 { Scalar::one() } else { Scalar::zeta_power(order, power) };
            total = total.checked_add(&(&mono * &Scalar::Rat(coef)))?;
        }
        Ok(total)
    }
}

fn parse_rational(s: &str) -> Option<Rational> {
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    if n.is_empty() || d.is_empty() || d.starts_with('-') || d.starts_with('+') {
        return None;
    }
    let n: BigInt = n.parse().ok()?;
    let d: BigInt = d.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(Rational::new(n, d))
}

fn gcd_u32(a: u32, b: u32) -> u32 {
    a.gcd(&b)
}

fn check_orders(a: &Cyclotomic, b: &Cyclotomic) -> Result<(), FieldError> {
    if a.ctx.order == b.ctx.order {
        Ok(())
    } else {
        Err(FieldError::OrderMismatch { left: a.ctx.order, right: b.ctx.order })
    }
}

fn reduce_mod(coeffs: &mut Vec<Rational>, modulus: &[Rational]) {
    let dm = modulus.len() - 1;
    while coeffs.len() > dm {
        let top = coeffs.pop().expect("nonempty");
        if top.is_zero() {
            continue;
        }
        let base = coeffs.len() - dm;
        for (j, mj) in modulus.iter().take(dm).enumerate() {
            coeffs[base + j] -= &top * mj;
        }
    }
}

fn fmt_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => f.write_str(&fmt_rational(r)),
            Scalar::Cyc(c) => {
                let mut first = true;
                for (i, x) in c.coeffs.iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    let mag = x.abs();
                    let mono = match i {
                        0 => String::new(),
                        1 => "z".to_string(),
                        _ => format!("z^{i}"),
                    };
                    let body = if i == 0 {
                        fmt_rational(&mag)
                    } else if mag.is_one() {
                        mono
                    } else {
                        format!("{}*{}", fmt_rational(&mag), mono)
                    };
                    if first {
                        if x.is_negative() {
                            f.write_str("-")?;
                        }
                        first = false;
                    } else if x.is_negative() {
                        f.write_str(" - ")?;
                    } else {
                        f.write_str(" + ")?;
                    }
                    f.write_str(&body)?;
                }
                Ok(())
            }
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rat(r) => Scalar::Rat(-r),
            Scalar::Cyc(c) => Scalar::Cyc(Cyclotomic {
                ctx: c.ctx.clone(),
                coeffs: c.coeffs.iter().map(|x| -x).collect(),
            }),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

// Operator impls panic on mixed cyclotomic orders; use the checked_* methods
// where inputs come from untrusted documents.
macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
        impl $trait<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);
binop!(Div, div, checked_div);

impl std::iter::Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |a, b| a + b)
    }
}

/// True iff `z^m = 1` and no smaller positive power is 1.
pub fn is_primitive_root(z: &Scalar, m: u32) -> bool {
    if m == 0 {
        return false;
    }
    let mut power = z.clone();
    for k in 1..=m {
        if power.is_one() {
            return k == m;
        }
        power = &power * z;
    }
    false
}

/// The ground field of a document: `Q` or `Q(z_m)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rational,
    Cyclotomic(u32),
}

impl FieldSpec {
    pub fn order(self) -> u32 {
        match self {
            FieldSpec::Rational => 1,
            FieldSpec::Cyclotomic(m) => m,
        }
    }

    pub fn degree(self) -> usize {
        totient(self.order())
    }

    pub fn parse_scalar(self, s: &str) -> Result<Scalar, FieldError> {
        Scalar::parse(s, self.order())
    }

    /// Whether `s` is an element of this field.
    pub fn contains(self, s: &Scalar) -> bool {
        match s.order() {
            None => true,
            Some(m) => m == self.order(),
        }
    }

    pub fn zeta(self) -> Scalar {
        Scalar::zeta(self.order()).expect("order is positive")
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rational => f.write_str("Q"),
            FieldSpec::Cyclotomic(m) => write!(f, "Q(z_{m})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int_poly(c: &[i64]) -> Vec<BigInt> {
        c.iter().map(|&x| BigInt::from(x)).collect()
    }

    /// Schoolbook long division, kept separate from `exact_div_monic`.
    fn naive_divide(num: &[i64], den: &[i64]) -> (Vec<i64>, Vec<i64>) {
        let mut r = num.to_vec();
        let mut q = vec![0; num.len() - den.len() + 1];
        let lead = *den.last().unwrap();
        for i in (0..q.len()).rev() {
            let c = r[i + den.len() - 1] / lead;
            q[i] = c;
            for (j, d) in den.iter().enumerate() {
                r[i + j] -= c * d;
            }
        }
        (q, r)
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), int_poly(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(2), int_poly(&[1, 1]));
        // x^4 - 1 = (x - 1)(x + 1)(x^2 + 1)
        let (q1, r1) = naive_divide(&[-1, 0, 0, 0, 1], &[-1, 1]);
        assert!(r1.iter().all(|&x| x == 0));
        let (q2, r2) = naive_divide(&q1, &[1, 1]);
        assert!(r2.iter().all(|&x| x == 0));
        assert_eq!(q2, vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(4), int_poly(&q2));
        assert_eq!(cyclotomic_polynomial(12), int_poly(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn phi_vanishes_at_zeta() {
        for m in 1..=12u32 {
            let z = Scalar::zeta(m).unwrap();
            let mut acc = Scalar::zero();
            let mut power = Scalar::one();
            for c in cyclotomic_polynomial(m) {
                acc = acc + &power * Scalar::from(c);
                power = &power * &z;
            }
            assert!(acc.is_zero(), "Phi_{m}(z) != 0");
            assert_eq!(cyclotomic_polynomial(m).len() - 1, totient(m));
        }
    }

    #[test]
    fn defining_relations() {
        let z2 = Scalar::zeta(2).unwrap();
        assert!((&z2 * &z2).is_one());
        let z4 = Scalar::zeta(4).unwrap();
        assert_eq!(&z4 * &z4, Scalar::from(-1));
        let inv = z4.inv().unwrap();
        assert_eq!(inv, -&z4);
        assert!((&z4 * &inv).is_one());
    }

    #[test]
    fn primitive_roots() {
        let z4 = Scalar::zeta(4).unwrap();
        assert!(is_primitive_root(&z4, 4));
        assert!(!is_primitive_root(&Scalar::from(-1), 4));
        let z6 = Scalar::zeta(6).unwrap();
        let w = &z6 * &z6;
        // enumerate powers independently
        let powers: Vec<Scalar> = (1..=3).map(|k| w.pow(k)).collect();
        assert!(powers[2].is_one() && !powers[0].is_one() && !powers[1].is_one());
        assert!(is_primitive_root(&w, 3));
        assert!(!is_primitive_root(&z6, 3));
    }

    #[test]
    fn errors() {
        assert_eq!(Scalar::zero().inv(), Err(FieldError::DivisionByZero));
        let a = Scalar::zeta(3).unwrap();
        let b = Scalar::zeta(4).unwrap();
        assert_eq!(a.checked_add(&b), Err(FieldError::OrderMismatch { left: 3, right: 4 }));
        assert!(a.checked_add(&Scalar::ratio(1, 2)).is_ok());
    }

    #[test]
    fn string_forms() {
        let z = Scalar::zeta(5).unwrap();
        let x = Scalar::ratio(1, 2) - &z + Scalar::from(3) * z.pow(3);
        let s = x.to_string();
        assert_eq!(s, "1/2 - z + 3*z^3");
        assert_eq!(Scalar::parse(&s, 5).unwrap(), x);
        assert_eq!(Scalar::parse("-2/6", 1).unwrap(), Scalar::ratio(-1, 3));
        assert_eq!(Scalar::parse("z^4", 5).unwrap(), Scalar::parse("-1 - z - z^2 - z^3", 5).unwrap());
        assert_eq!(Scalar::parse("z", 2).unwrap(), Scalar::from(-1));
        assert!(Scalar::parse("z", 1).is_err());
        assert!(Scalar::parse("1/0", 1).is_err());
        assert!(Scalar::parse("2z", 3).is_err());
        assert_eq!(Scalar::parse("-z", 4).unwrap().to_string(), "-z");
    }
}

#[cfg(test)]
mod proptests {
    use super::*;
    use proptest::prelude::*;

    fn arb_scalar(m: u32) -> impl Strategy<Value = Scalar> {
        let phi = totient(m);
        prop::collection::vec((-20i64..20, 1i64..6), phi).prop_map(move |v| {
            let coeffs = v.into_iter().map(|(n, d)| Rational::new(n.into(), d.into())).collect();
            Scalar::from_power_coeffs(m, coeffs).unwrap()
        })
    }

    fn arb_triple() -> impl Strategy<Value = (Scalar, Scalar, Scalar)> {
        (1u32..=12).prop_flat_map(|m| (arb_scalar(m), arb_scalar(m), arb_scalar(m)))
    }

    proptest! {
        #[test]
        fn field_axioms((a, b, c) in arb_triple()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            if !a.is_zero() {
                prop_assert!((&a * &a.inv().unwrap()).is_one());
            }
        }

        #[test]
        fn canonical_strings_round_trip((a, _b, _c) in arb_triple()) {
            let m = a.order().unwrap_or(7);
            let parsed = Scalar::parse(&a.to_string(), m).unwrap();
            prop_assert_eq!(parsed, a);
        }
    }
}
