use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::StructAlgebra;
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::haction::{decompose, ExponentOptions, HAction};
use crate::hopfzoo::Grading;
use crate::linalg::RankAccumulator;

use super::permutations;

#[derive(Clone, Debug)]
pub struct CodimOptions {
    /// Largest number of monomials that may be streamed.
    pub row_cap: u128,
    pub time_budget: Option<Duration>,
    /// Worker threads for row generation; `None` uses the global pool.
    pub threads: Option<usize>,
}

impl Default for CodimOptions {
    fn default() -> Self {
        CodimOptions { row_cap: 2_000_000, time_budget: Some(Duration::from_secs(600)), threads: None }
    }
}

type SparseVec = Vec<(usize, Scalar)>;

/// `ρ(h)e_i` for every basis element `h` of `H̃`, and the sparse multiplication table of `A`.
pub(crate) struct LabelImages {
    dim: usize,
    images: Vec<Vec<SparseVec>>,
    products: Vec<Vec<SparseVec>>,
}

fn sparse(v: &[Scalar]) -> SparseVec {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect()
}

fn product_table(a: &StructAlgebra) -> Vec<Vec<SparseVec>> {
    let d = a.dim();
    (0..d).map(|l| (0..d).map(|m| sparse(a.basis_product(l, m))).collect()).collect()
}

impl LabelImages {
    pub(crate) fn new(act: &HAction) -> Self {
        let a = act.algebra();
        let d = a.dim();
        let images = act.htilde().iter().map(|h| (0..d).map(|i| sparse(&h.column(i))).collect()).collect();
        LabelImages { dim: d, images, products: product_table(a) }
    }

    /// Nonzero entries `(p, k, x)` of `prod_j ρ(h_{l_j})(e_{i_j})` where `p`
    /// encodes the basis indices `i_1..i_n` by position, most significant first.
    pub(crate) fn position_tensor(&self, labels: &[usize]) -> Vec<(usize, usize, Scalar)> {
        let d = self.dim;
        let Some((&first, rest)) = labels.split_first() else { return Vec::new() };
        let mut cur: Vec<SparseVec> = self.images[first].clone();
        for &l in rest {
            let mut next: Vec<SparseVec> = Vec::with_capacity(cur.len() * d);
            let mut acc = vec![Scalar::zero(); d];
            for v in &cur {
                for i in 0..d {
                    if v.is_empty() {
                        next.push(Vec::new());
                        continue;
                    }
                    let img = &self.images[l][i];
                    let mut touched = false;
                    for (m, c) in img {
                        for (u, x) in v {
                            for (k, s) in &self.products[*u][*m] {
                                acc[*k] = &acc[*k] + &(&(x * c) * s);
                                touched = true;
                            }
                        }
                    }
                    if touched {
                        next.push(drain_nonzero(&mut acc));
                    } else {
                        next.push(Vec::new());
                    }
                }
            }
            cur = next;
        }
        cur.into_iter()
            .enumerate()
            .flat_map(|(p, v)| v.into_iter().map(move |(k, x)| (p, k, x)))
            .collect()
    }
}

fn drain_nonzero(acc: &mut [Scalar]) -> SparseVec {
    let mut out = Vec::new();
    for (k, x) in acc.iter_mut().enumerate() {
        if !x.is_zero() {
            out.push((k, std::mem::take(x)));
        }
    }
    out
}

/// Reindexes a position tensor to variable order for the permutation `sigma`
/// (position `j` holds variable `sigma[j]`), sorted by column.
pub(crate) fn permute_row(q: &[(usize, usize, Scalar)], sigma: &[usize], d: usize) -> SparseVec {
    let n = sigma.len();
    let pow: Vec<usize> = (0..n).map(|e| d.pow(e as u32)).collect();
    let weight: Vec<usize> = sigma.iter().map(|&v| pow[n - 1 - v]).collect();
    let mut row: SparseVec = q
        .iter()
        .map(|(p, k, x)| {
            let mut rem = *p;
            let mut var = 0;
            for j in (0..n).rev() {
                var += (rem % d) * weight[j];
                rem /= d;
            }
            (var * d + k, x.clone())
        })
        .collect();
    row.sort_unstable_by_key(|(c, _)| *c);
    row
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).fold(1u128, |a, b| a.saturating_mul(b))
}

fn estimate(n: usize, labels: usize) -> u128 {
    factorial(n).saturating_mul((labels as u128).saturating_pow(n as u32))
}

fn columns(d: usize, n: usize) -> Result<usize> {
    d.checked_pow(n as u32 + 1)
        .ok_or_else(|| Error::ResourceCap { estimate: (d as u128).saturating_pow(n as u32 + 1), cap: usize::MAX as u128 })
}

fn digits(mut t: usize, base: usize, n: usize) -> Vec<usize> {
    let mut out = vec![0; n];
    for j in (0..n).rev() {
        out[j] = t % base;
        t /= base;
    }
    out
}

/// Streams the rows produced for each label tuple into a rank accumulator.
/// Label tuples are processed in lexicographic order, each with all
/// permutations in lexicographic order.
fn stream_rank<F>(cols: usize, tuples: usize, n: usize, opts: &CodimOptions, deadline: Option<Instant>, rows_for: F) -> Result<usize>
where
    F: Fn(usize) -> Vec<SparseVec> + Sync,
{
    let total = estimate(n, 1).saturating_mul(tuples as u128);
    let mut acc = RankAccumulator::new(cols);
    let batch = 64usize;
    let run = |acc: &mut RankAccumulator| -> Result<()> {
        let mut start = 0;
        while start < tuples {
            let end = (start + batch).min(tuples);
            let rows: Vec<Vec<SparseVec>> = (start..end).into_par_iter().map(&rows_for).collect();
            for row in rows.into_iter().flatten() {
                acc.push_sparse(row);
                if acc.is_full() || acc.rank() as u128 == total {
                    return Ok(());
                }
            }
            if let Some(dl) = deadline {
                if Instant::now() > dl {
                    return Err(Error::TimeBudget { seconds: opts.time_budget.map_or(0, |b| b.as_secs()) });
                }
            }
            start = end;
        }
        Ok(())
    };
    match opts.threads {
        Some(t) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(t)
                .build()
                .map_err(|e| Error::Internal(format!("thread pool: {e}")))?;
            pool.install(|| run(&mut acc))?;
        }
        None => run(&mut acc)?,
    }
    Ok(acc.rank())
}

fn codimension_until(act: &HAction, n: usize, opts: &CodimOptions, deadline: Option<Instant>) -> Result<usize> {
    if n == 0 {
        return Err(Error::Precondition("codimension needs degree n >= 1".into()));
    }
    let h = act.htilde().len();
    let est = estimate(n, h);
    if est > opts.row_cap {
        return Err(Error::ResourceCap { estimate: est, cap: opts.row_cap });
    }
    let d = act.algebra().dim();
    if d == 0 {
        return Ok(0);
    }
    let cols = columns(d, n)?;
    let ops = LabelImages::new(act);
    let perms = permutations(n);
    let tuples = h.pow(n as u32);
    let rank = stream_rank(cols, tuples, n, opts, deadline, |t| {
        let q = ops.position_tensor(&digits(t, h, n));
        if q.is_empty() {
            return Vec::new();
        }
        perms.iter().map(|s| permute_row(&q, s, d)).collect()
    })?;
    debug_assert!(rank <= cols);
    Ok(rank)
}

/// `c_n^H(A)`: rank of the evaluation tensors of all `n!·(dim H̃)^n`
/// monomials built on the basis of `H̃`.
pub fn codimension(act: &HAction, n: usize, opts: &CodimOptions) -> Result<usize> {
    let deadline = opts.time_budget.map(|b| Instant::now() + b);
    codimension_until(act, n, opts, deadline)
}

/// Codimension of multilinear graded polynomials: a monomial carries a
/// component per position and is evaluated only at homogeneous basis
/// vectors of those components.
pub fn graded_codimension(a: &StructAlgebra, grading: &Grading, n: usize, opts: &CodimOptions) -> Result<usize> {
    if n == 0 {
        return Err(Error::Precondition("codimension needs degree n >= 1".into()));
    }
    grading.validate(a)?;
    let t = grading.support.len();
    let est = estimate(n, t);
    if est > opts.row_cap {
        return Err(Error::ResourceCap { estimate: est, cap: opts.row_cap });
    }
    let d = a.dim();
    if d == 0 {
        return Ok(0);
    }
    let cols = columns(d, n)?;
    let members: Vec<Vec<usize>> =
        (0..t).map(|c| (0..d).filter(|&i| grading.components[i] == c).collect()).collect();
    let perms = permutations(n);
    let deadline = opts.time_budget.map(|b| Instant::now() + b);
    stream_rank(cols, t.pow(n as u32), n, opts, deadline, |idx| {
        let comps = digits(idx, t, n);
        // products e_{i_1} ... e_{i_j} over homogeneous prefixes
        let mut cur: Vec<(usize, Vec<Scalar>)> = members[comps[0]].iter().map(|&i| (i, a.basis_vector(i))).collect();
        for &c in &comps[1..] {
            let mut next = Vec::new();
            for (p, v) in &cur {
                for &i in &members[c] {
                    let w = a.mul(v, &a.basis_vector(i));
                    if w.iter().any(|x| !x.is_zero()) {
                        next.push((p * d + i, w));
                    }
                }
            }
            cur = next;
        }
        let q: Vec<(usize, usize, Scalar)> = cur
            .into_iter()
            .flat_map(|(p, v)| v.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).map(move |(k, x)| (p, k, x)))
            .collect();
        if q.is_empty() {
            return Vec::new();
        }
        perms.iter().map(|s| permute_row(&q, s, d)).collect()
    })
}

/// Codimension sequence with its `n`-th roots next to the structural `d`.
#[derive(Clone, Debug, Serialize)]
pub struct ExponentReport {
    pub n: Vec<usize>,
    pub codim: Vec<usize>,
    pub roots: Vec<f64>,
    /// `None` for nilpotent algebras.
    pub d: Option<usize>,
    pub witness_chain: Vec<usize>,
}

impl ExponentReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("{:>3}  {:>12}  {:>10}\n", "n", "c_n", "c_n^(1/n)"));
        for ((n, c), r) in self.n.iter().zip(&self.codim).zip(&self.roots) {
            out.push_str(&format!("{n:>3}  {c:>12}  {r:>10.6}\n"));
        }
        match self.d {
            Some(d) => out.push_str(&format!("d = {d}, witness chain {:?}\n", self.witness_chain)),
            None => out.push_str("d not reported: the algebra is nilpotent\n"),
        }
        out
    }
}

pub fn exponent_report(act: &HAction, n_max: usize, opts: &CodimOptions, exp: &ExponentOptions) -> Result<ExponentReport> {
    let deadline = opts.time_budget.map(|b| Instant::now() + b);
    let structure = decompose(act, exp)?;
    let mut report = ExponentReport {
        n: Vec::new(),
        codim: Vec::new(),
        roots: Vec::new(),
        d: (!structure.nilpotent).then_some(structure.d),
        witness_chain: if structure.nilpotent { Vec::new() } else { structure.witness },
    };
    for n in 1..=n_max {
        let c = codimension_until(act, n, opts, deadline)?;
        report.n.push(n);
        report.codim.push(c);
        report.roots.push((c as f64).powf(1.0 / n as f64));
    }
    Ok(report)
}
