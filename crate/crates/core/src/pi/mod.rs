//! Multilinear H-polynomials: evaluation, identity testing, codimensions,
//! alternation and alternating non-identity search.

mod codim;
mod star;

pub use codim::{codimension, exponent_report, graded_codimension, CodimOptions, ExponentReport};
pub use star::{property_star_witness, StarWitness};

use std::collections::BTreeMap;

use crate::error::{check_dim, Error, Result};
use crate::field::Scalar;
use crate::haction::HAction;
use crate::linalg::is_zero_vec;

/// `x^{h_{l_1}}_{σ(1)} ... x^{h_{l_n}}_{σ(n)}`: position `j` carries variable
/// `sigma[j]` (0-based) with label `labels[j]`, an index into the basis of `H̃`.
/// Ordered lexicographically by `(sigma, labels)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HMonomial {
    sigma: Vec<usize>,
    labels: Vec<usize>,
}

impl HMonomial {
    pub fn new(sigma: Vec<usize>, labels: Vec<usize>) -> Result<Self> {
        check_dim("monomial labels", sigma.len(), labels.len())?;
        let mut seen = vec![false; sigma.len()];
        for &v in &sigma {
            if v >= sigma.len() || std::mem::replace(&mut seen[v], true) {
                return Err(Error::Precondition(format!("{sigma:?} is not a permutation")));
            }
        }
        Ok(HMonomial { sigma, labels })
    }

    /// `x_1 x_2 ... x_n` with every label 0 (the identity of `H̃`).
    pub fn identity(n: usize) -> Self {
        HMonomial { sigma: (0..n).collect(), labels: vec![0; n] }
    }

    pub fn degree(&self) -> usize {
        self.sigma.len()
    }

    pub fn sigma(&self) -> &[usize] {
        &self.sigma
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    /// Renames variables: position `j` now carries `tau[sigma[j]]`.
    pub fn substitute(&self, tau: &[usize]) -> HMonomial {
        HMonomial { sigma: self.sigma.iter().map(|&v| tau[v]).collect(), labels: self.labels.clone() }
    }

    pub fn display(&self, label_names: &[String]) -> String {
        self.sigma
            .iter()
            .zip(&self.labels)
            .map(|(v, l)| {
                let name = label_names.get(*l).map_or_else(|| l.to_string(), Clone::clone);
                format!("x{}^{{{name}}}", v + 1)
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Finite linear combination of monomials of one degree; no zero coefficients are stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HPolynomial {
    degree: usize,
    terms: BTreeMap<HMonomial, Scalar>,
}

impl HPolynomial {
    pub fn zero(degree: usize) -> Self {
        HPolynomial { degree, terms: BTreeMap::new() }
    }

    pub fn from_monomial(m: HMonomial) -> Self {
        let mut p = HPolynomial::zero(m.degree());
        p.terms.insert(m, Scalar::one());
        p
    }

    pub fn from_terms(degree: usize, terms: impl IntoIterator<Item = (Scalar, HMonomial)>) -> Result<Self> {
        let mut p = HPolynomial::zero(degree);
        for (c, m) in terms {
            p.add_term(c, m)?;
        }
        Ok(p)
    }

    pub fn add_term(&mut self, c: Scalar, m: HMonomial) -> Result<()> {
        check_dim("monomial degree", self.degree, m.degree())?;
        if c.is_zero() {
            return Ok(());
        }
        let sum = match self.terms.remove(&m) {
            Some(old) => &old + &c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(m, sum);
        }
        Ok(())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&HMonomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Scalar) -> HPolynomial {
        let mut p = HPolynomial::zero(self.degree);
        for (m, x) in &self.terms {
            p.add_term(x * c, m.clone()).expect("same degree");
        }
        p
    }

    pub fn display(&self, label_names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|(m, c)| {
                if c.is_one() {
                    m.display(label_names)
                } else {
                    format!("({c}) {}", m.display(label_names))
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

fn check_labels(p: &HPolynomial, act: &HAction) -> Result<()> {
    let h = act.htilde().len();
    if let Some((m, _)) = p.terms().find(|(m, _)| m.labels.iter().any(|&l| l >= h)) {
        return Err(Error::Precondition(format!("monomial labels {:?} exceed the {h} basis elements of H̃", m.labels)));
    }
    Ok(())
}

/// Value of one monomial at the given points (a point per variable).
fn eval_monomial(act: &HAction, m: &HMonomial, points: &[Vec<Scalar>]) -> Vec<Scalar> {
    let a = act.algebra();
    let h = act.htilde();
    let mut acc: Option<Vec<Scalar>> = None;
    for (&v, &l) in m.sigma.iter().zip(&m.labels) {
        let x = h[l].apply(&points[v]);
        acc = Some(match acc {
            None => x,
            Some(y) => a.mul(&y, &x),
        });
        if acc.as_deref().is_some_and(is_zero_vec) {
            break;
        }
    }
    acc.unwrap_or_else(|| vec![Scalar::zero(); a.dim()])
}

/// `sum coeff * prod_j ρ(h_{l_j})(a_{σ(j)})`, multiplied left to right.
pub fn evaluate(p: &HPolynomial, act: &HAction, points: &[Vec<Scalar>]) -> Result<Vec<Scalar>> {
    check_dim("evaluation points", p.degree, points.len())?;
    let n = act.algebra().dim();
    for pt in points {
        check_dim("evaluation point length", n, pt.len())?;
    }
    check_labels(p, act)?;
    let mut out = vec![Scalar::zero(); n];
    for (m, c) in p.terms() {
        let v = eval_monomial(act, m, points);
        for (o, x) in out.iter_mut().zip(&v) {
            if !x.is_zero() {
                *o = &*o + &(c * x);
            }
        }
    }
    Ok(out)
}

/// The multilinear map `A^{⊗n} -> A` of a polynomial, as coefficients indexed
/// by `((i_1 d + i_2) d + ... + i_n) d + k` for variables `x_1..x_n` at
/// `e_{i_1}..e_{i_n}` and output coordinate `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvalTensor {
    pub degree: usize,
    pub dim: usize,
    pub data: Vec<Scalar>,
}

impl EvalTensor {
    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.data)
    }
}

pub fn eval_tensor(p: &HPolynomial, act: &HAction) -> Result<EvalTensor> {
    check_labels(p, act)?;
    let d = act.algebra().dim();
    let n = p.degree;
    let len = d.checked_pow(n as u32 + 1).ok_or(Error::ResourceCap { estimate: u128::MAX, cap: usize::MAX as u128 })?;
    let mut data = vec![Scalar::zero(); len];
    let ops = codim::LabelImages::new(act);
    for (m, c) in p.terms() {
        let q = ops.position_tensor(&m.labels);
        for (col, x) in codim::permute_row(&q, &m.sigma, d) {
            data[col] = &data[col] + &(c * &x);
        }
    }
    Ok(EvalTensor { degree: n, dim: d, data })
}

pub fn is_h_identity(p: &HPolynomial, act: &HAction) -> Result<bool> {
    Ok(eval_tensor(p, act)?.is_zero())
}

/// Sign of a permutation given as images of `0..n`.
pub(crate) fn sign(perm: &[usize]) -> i64 {
    let mut seen = vec![false; perm.len()];
    let mut s = 1;
    for i in 0..perm.len() {
        if seen[i] {
            continue;
        }
        let mut j = i;
        let mut len = 0;
        while !seen[j] {
            seen[j] = true;
            j = perm[j];
            len += 1;
        }
        if len % 2 == 0 {
            s = -s;
        }
    }
    s
}

/// All permutations of `0..n` in lexicographic order.
pub(crate) fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else { break };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).expect("successor exists");
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
    out
}

/// `sum_{τ ∈ Sym(varset)} sgn(τ) τ·p` with variables renamed by `τ`.
/// Variables are 0-based.
pub fn alternate(p: &HPolynomial, varset: &[usize]) -> Result<HPolynomial> {
    let n = p.degree;
    let mut vars = varset.to_vec();
    vars.sort_unstable();
    vars.dedup();
    if vars.len() != varset.len() || vars.iter().any(|&v| v >= n) {
        return Err(Error::Precondition(format!("{varset:?} is not a set of variables of a degree {n} polynomial")));
    }
    let mut out = HPolynomial::zero(n);
    for perm in permutations(vars.len()) {
        let mut tau: Vec<usize> = (0..n).collect();
        for (i, &j) in perm.iter().enumerate() {
            tau[vars[i]] = vars[j];
        }
        let s = Scalar::from(sign(&perm));
        for (m, c) in p.terms() {
            out.add_term(&s * c, m.substitute(&tau))?;
        }
    }
    Ok(out)
}
