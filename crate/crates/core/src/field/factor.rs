//! Polynomial factorization over `Q` (Zassenhaus: modular factorization,
//! Hensel lifting, subset recombination) and over `Q(z_m)` (norms down to `Q`).

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{totient, Poly, Rational, Scalar};

/// Monic irreducible factors with multiplicities over `Q(z_order)`
/// (`order = 1` for `Q`). Constants have no factors.
pub fn factor(p: &Poly, order: u32) -> Vec<(Poly, usize)> {
    let mut out = Vec::new();
    for (sqf, mult) in squarefree_decomposition(p) {
        for f in factor_squarefree(&sqf, order) {
            out.push((f, mult));
        }
    }
    out
}

/// Factors a squarefree polynomial into monic irreducibles over `Q(z_order)`.
pub fn factor_squarefree(p: &Poly, order: u32) -> Vec<Poly> {
    match p.degree() {
        None | Some(0) => return Vec::new(),
        Some(1) => return vec![p.monic()],
        _ => {}
    }
    if totient(order) == 1 {
        assert!(p.is_rational(), "irrational coefficients over Q");
        factor_rational(p)
    } else {
        factor_cyclotomic(p, order)
    }
}

/// Roots in `Q(z_order)` and the remaining irreducible factors of degree > 1.
pub fn roots(p: &Poly, order: u32) -> (Vec<Scalar>, Vec<Poly>) {
    let mut rts = Vec::new();
    let mut rest = Vec::new();
    for (f, _) in factor(p, order) {
        if f.degree() == Some(1) {
            rts.push(-&f.coeff(0));
        } else {
            rest.push(f);
        }
    }
    (rts, rest)
}

fn squarefree_decomposition(p: &Poly) -> Vec<(Poly, usize)> {
    let f = p.monic();
    if f.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut c = f.gcd(&f.derivative());
    let mut w = f.div_rem(&c).0;
    let mut i = 1;
    while w.degree().unwrap_or(0) > 0 {
        let y = w.gcd(&c);
        let z = w.div_rem(&y).0;
        if z.degree().unwrap_or(0) > 0 {
            out.push((z.monic(), i));
        }
        i += 1;
        c = c.div_rem(&y).0;
        w = y;
    }
    out
}

// ---------------------------------------------------------------- over Q(z_m)

fn factor_cyclotomic(p: &Poly, order: u32) -> Vec<Poly> {
    let p = p.monic();
    let zeta = Scalar::zeta(order).expect("positive order");
    let mut shift = 0i64;
    for attempt in 0.. {
        shift = if attempt % 2 == 0 { attempt / 2 } else { -(attempt + 1) / 2 };
        let g = p.shift(&(&zeta * &Scalar::from(-shift)));
        let n = norm(&g, order);
        if n.gcd(&n.derivative()).degree() == Some(0) {
            break;
        }
        assert!(attempt < 64, "no squarefree norm found");
    }
    let s = &zeta * &Scalar::from(shift);
    let g = p.shift(&-&s);
    let n = norm(&g, order);
    let mut out: Vec<Poly> = factor_rational(&n)
        .into_iter()
        .map(|r| g.gcd(&r).shift(&s).monic())
        .filter(|h| h.degree().unwrap_or(0) > 0)
        .collect();
    out.sort_by_key(|h| h.degree());
    out
}

fn norm(g: &Poly, order: u32) -> Poly {
    let mut acc = g.clone();
    for k in 2..order {
        if k.gcd(&order) == 1 {
            acc = acc.mul(&g.galois(k));
        }
    }
    debug_assert!(acc.is_rational(), "norm must have rational coefficients");
    acc
}

// ---------------------------------------------------------------- over Q

type IntPoly = Vec<BigInt>;

fn factor_rational(p: &Poly) -> Vec<Poly> {
    let ip = to_primitive_int(p);
    let mut factors: Vec<Poly> = zassenhaus(&ip)
        .into_iter()
        .map(|f| {
            Poly::new(f.into_iter().map(|c| Scalar::Rat(Rational::from_integer(c))).collect()).monic()
        })
        .collect();
    factors.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.to_string().cmp(&b.to_string())));
    factors
}

fn to_primitive_int(p: &Poly) -> IntPoly {
    let rats: Vec<&Rational> = p.coeffs().iter().map(|c| c.as_rational().expect("rational")).collect();
    let lcm = rats.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let ints: IntPoly = rats.iter().map(|r| (r.numer() * &lcm) / r.denom()).collect();
    primitive(ints)
}

fn trim(mut a: IntPoly) -> IntPoly {
    while a.last().is_some_and(Zero::is_zero) {
        a.pop();
    }
    a
}

fn primitive(a: IntPoly) -> IntPoly {
    let a = trim(a);
    let content = a.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    if content.is_zero() {
        return a;
    }
    let sign = if a.last().unwrap().is_negative() { -BigInt::one() } else { BigInt::one() };
    let content = content * sign;
    a.into_iter().map(|c| c / &content).collect()
}

fn int_mul(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

/// Exact division over Z, or `None` if `b` does not divide `a`.
fn int_div_exact(a: &[BigInt], b: &[BigInt]) -> Option<IntPoly> {
    let db = b.len() - 1;
    if a.len() < b.len() {
        return if a.is_empty() { Some(Vec::new()) } else { None };
    }
    let mut rem = a.to_vec();
    let mut quot = vec![BigInt::zero(); a.len() - db];
    let lead = &b[db];
    for i in (0..quot.len()).rev() {
        let (q, r) = rem[i + db].div_rem(lead);
        if !r.is_zero() {
            return None;
        }
        if !q.is_zero() {
            for (j, bj) in b.iter().enumerate() {
                rem[i + j] -= &q * bj;
            }
        }
        quot[i] = q;
    }
    if rem.iter().all(Zero::is_zero) {
        Some(trim(quot))
    } else {
        None
    }
}

fn zassenhaus(f: &IntPoly) -> Vec<IntPoly> {
    let n = f.len() - 1;
    if n <= 1 {
        return vec![f.clone()];
    }
    let lc = f[n].clone();

    // pick the admissible prime with the fewest modular factors among a few candidates
    let mut best: Option<(u64, Vec<ModPoly>)> = None;
    let mut tried = 0;
    for p in small_primes() {
        if (&lc % BigInt::from(p)).is_zero() {
            continue;
        }
        let fp = ModPoly::from_int(f, p);
        if fp.gcd(&fp.derivative()).degree() != 0 {
            continue;
        }
        let facs = fp.monic().factor();
        if facs.len() == 1 {
            return vec![f.clone()];
        }
        if best.as_ref().is_none_or(|(_, b)| facs.len() < b.len()) {
            best = Some((p, facs));
        }
        tried += 1;
        if tried >= 6 {
            break;
        }
    }
    let (p, modular) = best.expect("some prime keeps f squarefree");

    // coefficient bound for lc * (any factor)
    let norm2 = f.iter().fold(BigInt::zero(), |acc, c| acc + c * c).sqrt() + BigInt::one();
    let bound = lc.abs() * (BigInt::one() << n) * norm2 * 2u32;
    let pb = BigInt::from(p);
    let mut k = 1u32;
    let mut pk = pb.clone();
    while pk <= bound {
        pk *= &pb;
        k += 1;
    }
    let lifted = hensel_lift(f, &lc, &modular, p, k, &pk);
    recombine(f.clone(), lifted, &pk)
}

fn small_primes() -> impl Iterator<Item = u64> {
    (3u64..).filter(|&n| (2..).take_while(|d| d * d <= n).all(|d| n % d != 0))
}

fn symmetric_mod(c: &BigInt, m: &BigInt) -> BigInt {
    let r = c.mod_floor(m);
    if &r * 2u32 > *m {
        r - m
    } else {
        r
    }
}

fn recombine(mut f: IntPoly, mut lifted: Vec<IntPoly>, pk: &BigInt) -> Vec<IntPoly> {
    let mut out = Vec::new();
    let mut size = 1;
    while 2 * size <= lifted.len() {
        let mut found = None;
        for subset in Subsets::new(lifted.len(), size) {
            let lc = f.last().unwrap().clone();
            let mut cand: IntPoly = vec![lc];
            for &i in &subset {
                cand = int_mul(&cand, &lifted[i]).into_iter().map(|c| c.mod_floor(pk)).collect();
            }
            let cand = primitive(cand.iter().map(|c| symmetric_mod(c, pk)).collect());
            if let Some(q) = int_div_exact(&f, &cand) {
                found = Some((subset, cand, q));
                break;
            }
        }
        match found {
            Some((subset, cand, q)) => {
                out.push(cand);
                f = primitive(q);
                lifted = lifted
                    .into_iter()
                    .enumerate()
                    .filter(|(i, _)| !subset.contains(i))
                    .map(|(_, g)| g)
                    .collect();
            }
            None => size += 1,
        }
    }
    if f.len() > 1 {
        out.push(f);
    }
    out
}

struct Subsets {
    n: usize,
    idx: Vec<usize>,
    done: bool,
}

impl Subsets {
    fn new(n: usize, k: usize) -> Self {
        Subsets { n, idx: (0..k).collect(), done: k > n }
    }
}

impl Iterator for Subsets {
    type Item = Vec<usize>;
    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let cur = self.idx.clone();
        let k = self.idx.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] < self.n - k + i {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(cur)
    }
}

fn hensel_lift(f: &IntPoly, lc: &BigInt, modular: &[ModPoly], p: u64, k: u32, pk: &BigInt) -> Vec<IntPoly> {
    if modular.len() == 1 {
        let inv = mod_inverse_big(lc, pk);
        return vec![f.iter().map(|c| (c * &inv).mod_floor(pk)).collect()];
    }
    let mid = modular.len() / 2;
    let g = modular[..mid].iter().fold(ModPoly::one(p), |acc, x| acc.mul(x));
    let h = modular[mid..].iter().fold(ModPoly::one(p), |acc, x| acc.mul(x));
    let (gl, hl) = lift_pair(f, lc, &g, &h, p, k, pk);
    let mut out = hensel_lift(&gl, &BigInt::one(), &modular[..mid], p, k, pk);
    out.extend(hensel_lift(&hl, &BigInt::one(), &modular[mid..], p, k, pk));
    out
}

/// Lifts `f = lc*g*h (mod p)` with monic coprime `g, h` to a factorization mod `p^k`.
fn lift_pair(
    f: &IntPoly,
    lc: &BigInt,
    g: &ModPoly,
    h: &ModPoly,
    p: u64,
    k: u32,
    pk: &BigInt,
) -> (IntPoly, IntPoly) {
    let (one, s, t) = g.ext_gcd(h);
    debug_assert_eq!(one.degree(), 0);
    let lc_inv = inv_mod(lc.mod_floor(&BigInt::from(p)).to_u64().unwrap(), p);
    let mut big_g: IntPoly = g.to_int();
    let mut big_h: IntPoly = h.to_int();
    let mut pj = BigInt::from(p);
    for _ in 1..k {
        let prod = int_mul(&int_mul(std::slice::from_ref(lc), &big_g), &big_h);
        let len = f.len().max(prod.len());
        let diff: IntPoly = (0..len)
            .map(|i| {
                let a = f.get(i).cloned().unwrap_or_default();
                let b = prod.get(i).cloned().unwrap_or_default();
                let d = a - b;
                debug_assert!((&d % &pj).is_zero());
                d / &pj
            })
            .collect();
        let e = ModPoly::from_int(&diff, p).scale(lc_inv);
        let dg = e.mul(&t).div_rem(g).1;
        let dh = e.mul(&s).div_rem(h).1;
        big_g = add_scaled(&big_g, &dg, &pj);
        big_h = add_scaled(&big_h, &dh, &pj);
        pj *= p;
    }
    let reduce = |v: IntPoly| -> IntPoly { v.into_iter().map(|c| c.mod_floor(pk)).collect() };
    (reduce(big_g), reduce(big_h))
}

fn add_scaled(a: &IntPoly, d: &ModPoly, scale: &BigInt) -> IntPoly {
    let mut out = a.clone();
    for (i, c) in d.c.iter().enumerate() {
        if i >= out.len() {
            out.resize(i + 1, BigInt::zero());
        }
        out[i] += BigInt::from(*c) * scale;
    }
    out
}

fn mod_inverse_big(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.extended_gcd(m);
    debug_assert!(e.gcd.is_one());
    e.x.mod_floor(m)
}

// ---------------------------------------------------------------- mod p

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

fn inv_mod(a: u64, p: u64) -> u64 {
    assert!(!a.is_multiple_of(p));
    pow_mod(a, p - 2, p)
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct ModPoly {
    p: u64,
    c: Vec<u64>,
}

impl ModPoly {
    fn new(p: u64, mut c: Vec<u64>) -> Self {
        while c.last() == Some(&0) {
            c.pop();
        }
        ModPoly { p, c }
    }

    fn one(p: u64) -> Self {
        ModPoly::new(p, vec![1])
    }

    fn x(p: u64) -> Self {
        ModPoly::new(p, vec![0, 1])
    }

    fn from_int(f: &[BigInt], p: u64) -> Self {
        let pb = BigInt::from(p);
        ModPoly::new(p, f.iter().map(|c| c.mod_floor(&pb).to_u64().unwrap()).collect())
    }

    fn to_int(&self) -> IntPoly {
        self.c.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn degree(&self) -> isize {
        self.c.len() as isize - 1
    }

    fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    fn scale(&self, s: u64) -> Self {
        ModPoly::new(self.p, self.c.iter().map(|&x| mul_mod(x, s, self.p)).collect())
    }

    fn monic(&self) -> Self {
        match self.c.last() {
            None => self.clone(),
            Some(&l) => self.scale(inv_mod(l, self.p)),
        }
    }

    fn sub(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        let p = self.p;
        ModPoly::new(
            p,
            (0..n)
                .map(|i| (self.c.get(i).unwrap_or(&0) + p - o.c.get(i).unwrap_or(&0)) % p)
                .collect(),
        )
    }

    fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return ModPoly::new(self.p, Vec::new());
        }
        let p = self.p;
        let mut out = vec![0u64; self.c.len() + o.c.len() - 1];
        for (i, &a) in self.c.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in o.c.iter().enumerate() {
                out[i + j] = (out[i + j] + mul_mod(a, b, p)) % p;
            }
        }
        ModPoly::new(p, out)
    }

    fn div_rem(&self, d: &Self) -> (Self, Self) {
        let p = self.p;
        let dd = d.c.len() - 1;
        if self.c.len() <= dd {
            return (ModPoly::new(p, Vec::new()), self.clone());
        }
        let li = inv_mod(*d.c.last().unwrap(), p);
        let mut rem = self.c.clone();
        let mut quot = vec![0u64; rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = mul_mod(rem[i + dd], li, p);
            if c == 0 {
                continue;
            }
            for (j, &dj) in d.c.iter().enumerate() {
                rem[i + j] = (rem[i + j] + p - mul_mod(c, dj, p)) % p;
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        (ModPoly::new(p, quot), ModPoly::new(p, rem))
    }

    fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    fn ext_gcd(&self, o: &Self) -> (Self, Self, Self) {
        let p = self.p;
        let (mut r0, mut r1) = (self.clone(), o.clone());
        let (mut s0, mut s1) = (ModPoly::one(p), ModPoly::new(p, Vec::new()));
        let (mut t0, mut t1) = (ModPoly::new(p, Vec::new()), ModPoly::one(p));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s2 = s0.sub(&q.mul(&s1));
            let t2 = t0.sub(&q.mul(&t1));
            (r0, r1) = (r1, r);
            (s0, s1) = (s1, s2);
            (t0, t1) = (t1, t2);
        }
        let li = inv_mod(*r0.c.last().unwrap(), p);
        (r0.scale(li), s0.scale(li), t0.scale(li))
    }

    fn derivative(&self) -> Self {
        let p = self.p;
        ModPoly::new(
            p,
            self.c.iter().enumerate().skip(1).map(|(i, &c)| mul_mod(c, i as u64 % p, p)).collect(),
        )
    }

    fn pow_mod_poly(&self, e: &BigUint, m: &Self) -> Self {
        let mut result = ModPoly::one(self.p);
        let base = self.div_rem(m).1;
        for bit in (0..e.bits()).rev() {
            result = result.mul(&result).div_rem(m).1;
            if e.bit(bit) {
                result = result.mul(&base).div_rem(m).1;
            }
        }
        result
    }

    /// Monic irreducible factors of a monic squarefree polynomial.
    fn factor(&self) -> Vec<ModPoly> {
        let p = self.p;
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed ^ p);
        let mut out = Vec::new();
        // distinct-degree
        let mut rest = self.clone();
        let mut h = ModPoly::x(p);
        let mut d = 1;
        let pbig = BigUint::from(p);
        while rest.degree() >= 2 * d {
            h = h.pow_mod_poly(&pbig, &rest);
            let g = h.sub(&ModPoly::x(p)).gcd(&rest);
            if g.degree() > 0 {
                rest = rest.div_rem(&g).0;
                h = h.div_rem(&rest).1;
                out.extend(equal_degree(&g, d as u32, &mut rng));
            }
            d += 1;
        }
        if rest.degree() > 0 {
            out.push(rest.monic());
        }
        out.sort_by(|a, b| a.c.len().cmp(&b.c.len()).then_with(|| a.c.cmp(&b.c)));
        out
    }
}

fn equal_degree(f: &ModPoly, d: u32, rng: &mut ChaCha8Rng) -> Vec<ModPoly> {
    let p = f.p;
    let n = f.degree() as u32;
    if n == d {
        return vec![f.monic()];
    }
    let exp = (BigUint::from(p).pow(d) - BigUint::one()) >> 1u32;
    loop {
        let a = ModPoly::new(p, (0..n).map(|_| rng.gen_range(0..p)).collect());
        if a.degree() <= 0 {
            continue;
        }
        let b = a.pow_mod_poly(&exp, f).sub(&ModPoly::one(p));
        let g = b.gcd(f);
        if g.degree() > 0 && g.degree() < f.degree() {
            let mut out = equal_degree(&g, d, rng);
            out.extend(equal_degree(&f.div_rem(&g).0, d, rng));
            return out;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn expand(factors: &[(Poly, usize)]) -> Poly {
        factors.iter().fold(Poly::one(), |acc, (f, m)| acc.mul(&f.pow(*m as u32)))
    }

    #[test]
    fn rational_factorizations() {
        // (x - 1)(x + 2)(x^2 + 1)
        let p = Poly::from_ints(&[-1, 1]).mul(&Poly::from_ints(&[2, 1])).mul(&Poly::from_ints(&[1, 0, 1]));
        let f = factor(&p, 1);
        assert_eq!(f.len(), 3);
        assert_eq!(expand(&f), p.monic());
        let (r, rest) = roots(&p, 1);
        assert_eq!(r.len(), 2);
        assert_eq!(rest, vec![Poly::from_ints(&[1, 0, 1])]);
    }

    #[test]
    fn swinnerton_dyer_like_case_is_irreducible() {
        // x^4 - 10x^2 + 1 splits into quadratics mod every prime
        let p = Poly::from_ints(&[1, 0, -10, 0, 1]);
        let f = factor(&p, 1);
        assert_eq!(f.len(), 1);
        assert_eq!(f[0].0, p);
    }

    #[test]
    fn non_monic_and_repeated() {
        // (2x + 3)^2 (3x - 1)
        let a = Poly::from_ints(&[3, 2]);
        let b = Poly::from_ints(&[-1, 3]);
        let p = a.mul(&a).mul(&b);
        let f = factor(&p, 1);
        assert_eq!(expand(&f), p.monic());
        assert!(f.iter().any(|(g, m)| *m == 2 && *g == a.monic()));
    }

    #[test]
    fn larger_degree() {
        // product of x^3 - 2, x^2 + x + 1, x^3 + x + 1, x - 5
        let p = Poly::from_ints(&[-2, 0, 0, 1])
            .mul(&Poly::from_ints(&[1, 1, 1]))
            .mul(&Poly::from_ints(&[1, 1, 0, 1]))
            .mul(&Poly::from_ints(&[-5, 1]));
        let f = factor(&p, 1);
        assert_eq!(f.len(), 4);
        assert_eq!(expand(&f), p);
    }

    #[test]
    fn splitting_over_cyclotomic_fields() {
        // x^2 + 1 splits over Q(z_4)
        let (r, rest) = roots(&Poly::from_ints(&[1, 0, 1]), 4);
        assert_eq!(r.len(), 2);
        assert!(rest.is_empty());
        let i = Scalar::zeta(4).unwrap();
        assert!(r.contains(&i) && r.contains(&-&i));
        // x^2 + x + 1 splits over Q(z_3) but x^2 - 2 does not
        let (r, _) = roots(&Poly::from_ints(&[1, 1, 1]), 3);
        assert_eq!(r.len(), 2);
        let (r, rest) = roots(&Poly::from_ints(&[-2, 0, 1]), 3);
        assert!(r.is_empty());
        assert_eq!(rest.len(), 1);
        // x^4 - 1 over Q(z_8): four roots
        let (r, _) = roots(&Poly::from_ints(&[-1, 0, 0, 0, 1]), 8);
        assert_eq!(r.len(), 4);
    }

    #[test]
    fn irrational_coefficients() {
        // (x - z)(x - z^2)(x^2 - 3) over Q(z_5)
        let z = Scalar::zeta(5).unwrap();
        let p = Poly::linear(&z).mul(&Poly::linear(&z.pow(2))).mul(&Poly::from_ints(&[-3, 0, 1]));
        let f = factor(&p, 5);
        assert_eq!(expand(&f), p);
        let (r, rest) = roots(&p, 5);
        assert_eq!(r.len(), 2);
        assert_eq!(rest.len(), 1);
    }

    #[test]
    fn modular_factorization() {
        let f = ModPoly::from_int(&[-1, 0, 0, 0, 1].map(BigInt::from), 5);
        assert_eq!(f.factor().len(), 4);
        let f = ModPoly::from_int(&[1, 0, 1].map(BigInt::from), 7);
        assert_eq!(f.factor().len(), 1);
    }
}
