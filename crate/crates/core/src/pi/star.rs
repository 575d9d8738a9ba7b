use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::haction::{is_h_simple, HAction};
use crate::linalg::is_zero_vec;

use super::codim::CodimOptions;
use super::{alternate, evaluate, permutations, sign, HMonomial, HPolynomial};

/// An alternating non-identity: `polynomial` alternates in the variable
/// blocks `[bℓ, (b+1)ℓ)` for `b < 2k`; evaluated with block variables at
/// `e_0..e_{ℓ-1}` and the remaining `n1` variables at the basis vectors
/// `z`, it gives the nonzero `value`.
#[derive(Clone, Debug)]
pub struct StarWitness {
    pub k: usize,
    pub ell: usize,
    pub n1: usize,
    pub generator: HMonomial,
    pub polynomial: HPolynomial,
    pub z: Vec<usize>,
    pub value: Vec<Scalar>,
}

impl StarWitness {
    pub fn degree(&self) -> usize {
        self.generator.degree()
    }

    /// Basis index assigned to each variable.
    pub fn point_indices(&self) -> Vec<usize> {
        let blocks = 2 * self.k * self.ell;
        (0..blocks).map(|v| v % self.ell).chain(self.z.iter().copied()).collect()
    }
}

/// Whether the variables of each block occur in increasing order along the
/// positions; such `σ` are the lexicographically least in their orbit under
/// the block permutations.
fn is_block_canonical(sigma: &[usize], ell: usize, blocks: usize) -> bool {
    let mut last = vec![None; blocks];
    for &v in sigma {
        let b = v / ell;
        if b < blocks {
            if last[b].is_some_and(|p| p > v) {
                return false;
            }
            last[b] = Some(v);
        }
    }
    true
}

fn binomial_orbits(n: usize, ell: usize, blocks: usize) -> u128 {
    let fact = |m: usize| (1..=m as u128).fold(1u128, |a, b| a.saturating_mul(b));
    fact(n) / fact(ell).saturating_pow(blocks as u32).max(1)
}

/// Searches `n1 = 0..=n0` for a generator `Alt_1 ... Alt_{2k}(m)` that does
/// not vanish at the fixed block points, trying monomials `m` in
/// lexicographic `(σ, labels)` order and `z`-tuples lexicographically.
pub fn property_star_witness(act: &HAction, k: usize, n0: usize, opts: &CodimOptions) -> Result<Option<StarWitness>> {
    let a = act.algebra();
    if k == 0 {
        return Err(Error::Precondition("k must be at least 1".into()));
    }
    if !a.is_unital() && a.find_unit().is_none() {
        return Err(Error::NotUnital("alternating non-identities are searched in unital H-simple algebras".into()));
    }
    if !is_h_simple(act)? {
        return Err(Error::Precondition("the algebra is not H-simple".into()));
    }
    let ell = a.dim();
    let h = act.htilde();
    let hl = h.len();
    let blocks = 2 * k;
    let images: Vec<Vec<Vec<Scalar>>> = h.iter().map(|m| (0..ell).map(|i| m.column(i)).collect()).collect();
    let block_perms = permutations(ell);
    let block_signs: Vec<i64> = block_perms.iter().map(|p| sign(p)).collect();
    for n1 in 0..=n0 {
        let n = blocks * ell + n1;
        let est = binomial_orbits(n, ell, blocks)
            .saturating_mul((hl as u128).saturating_pow(n as u32))
            .saturating_mul((ell as u128).saturating_pow(n1 as u32));
        if est > opts.row_cap {
            return Err(Error::ResourceCap { estimate: est, cap: opts.row_cap });
        }
        let label_tuples = hl.pow(n as u32);
        let z_tuples = ell.pow(n1 as u32);
        for sigma in permutations(n).into_iter().filter(|s| is_block_canonical(s, ell, blocks)) {
            for t in 0..label_tuples {
                let labels = digits(t, hl, n);
                for zt in 0..z_tuples {
                    let z = digits(zt, ell, n1);
                    let value = alternated_value(act, &images, &block_perms, &block_signs, &sigma, &labels, ell, blocks, &z);
                    if !is_zero_vec(&value) {
                        let generator = HMonomial::new(sigma.clone(), labels)?;
                        let mut poly = HPolynomial::from_monomial(generator.clone());
                        for b in 0..blocks {
                            let vars: Vec<usize> = (b * ell..(b + 1) * ell).collect();
                            poly = alternate(&poly, &vars)?;
                        }
                        let w = StarWitness { k, ell, n1, generator, polynomial: poly, z, value };
                        let points: Vec<Vec<Scalar>> = w.point_indices().iter().map(|&i| a.basis_vector(i)).collect();
                        if evaluate(&w.polynomial, act, &points)? != w.value {
                            return Err(Error::Internal("expanded alternation disagrees with direct evaluation".into()));
                        }
                        return Ok(Some(w));
                    }
                }
            }
        }
    }
    Ok(None)
}

fn digits(mut t: usize, base: usize, n: usize) -> Vec<usize> {
    let mut out = vec![0; n];
    for j in (0..n).rev() {
        out[j] = t % base;
        t /= base;
    }
    out
}

/// `sum_τ sgn(τ) prod_j ρ(h_{l_j})(point of τσ(j))` over the block permutations `τ`.
#[allow(clippy::too_many_arguments)]
fn alternated_value(
    act: &HAction,
    images: &[Vec<Vec<Scalar>>],
    perms: &[Vec<usize>],
    signs: &[i64],
    sigma: &[usize],
    labels: &[usize],
    ell: usize,
    blocks: usize,
    z: &[usize],
) -> Vec<Scalar> {
    let a = act.algebra();
    let mut total = vec![Scalar::zero(); ell];
    let mut choice = vec![0usize; blocks];
    loop {
        let s: i64 = choice.iter().map(|&c| signs[c]).product();
        let mut acc: Option<Vec<Scalar>> = None;
        for (&v, &l) in sigma.iter().zip(labels) {
            let idx = if v < blocks * ell { perms[choice[v / ell]][v % ell] } else { z[v - blocks * ell] };
            let x = &images[l][idx];
            acc = Some(match acc {
                None => x.clone(),
                Some(y) => a.mul(&y, x),
            });
            if acc.as_deref().is_some_and(is_zero_vec) {
                break;
            }
        }
        if let Some(p) = acc {
            let c = Scalar::from(s);
            for (t, x) in total.iter_mut().zip(&p) {
                if !x.is_zero() {
                    *t = &*t + &(&c * x);
                }
            }
        }
        // odometer over the block permutations
        let mut b = 0;
        while b < blocks {
            choice[b] += 1;
            if choice[b] < perms.len() {
                break;
            }
            choice[b] = 0;
            b += 1;
        }
        if b == blocks {
            break;
        }
    }
    total
}
