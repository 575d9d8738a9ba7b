use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::field::Scalar;

type IntRow = Vec<(usize, BigInt)>;
type ScalarRow = Vec<(usize, Scalar)>;

enum Store {
    /// Primitive integer rows, eliminated fraction-free.
    Integer(Vec<IntRow>),
    /// Rows with leading coefficient 1.
    Field(Vec<ScalarRow>),
}

/// Rank of a stream of rows against a fixed column count. Only an echelon
/// basis is kept; rows may arrive in any order and the rank does not depend
/// on it. Pivot of a row is its first nonzero column.
pub struct RankAccumulator {
    cols: usize,
    pivot_of: Vec<Option<usize>>,
    store: Store,
    rank: usize,
}

impl RankAccumulator {
    pub fn new(cols: usize) -> Self {
        RankAccumulator { cols, pivot_of: vec![None; cols], store: Store::Integer(Vec::new()), rank: 0 }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_full(&self) -> bool {
        self.rank == self.cols
    }

    /// Adds a dense row; returns whether it increased the rank.
    pub fn push(&mut self, row: &[Scalar]) -> bool {
        assert_eq!(row.len(), self.cols, "row length does not match column count");
        let sparse: ScalarRow =
            row.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect();
        self.push_sparse(sparse)
    }

    /// Adds a row given as `(column, value)` pairs in increasing column order.
    pub fn push_sparse(&mut self, row: ScalarRow) -> bool {
        if self.is_full() || row.is_empty() {
            return false;
        }
        debug_assert!(row.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(row.last().is_some_and(|(c, _)| *c < self.cols));
        if matches!(self.store, Store::Integer(_)) {
            if row.iter().all(|(_, x)| x.is_rational()) {
                return self.push_integer(integerize(&row));
            }
            self.switch_to_field();
        }
        self.push_field(row)
    }

    /// Adds a row of integers given as `(column, value)` pairs in increasing column order.
    pub fn push_integer_sparse(&mut self, row: IntRow) -> bool {
        if self.is_full() || row.is_empty() {
            return false;
        }
        match self.store {
            Store::Integer(_) => self.push_integer(row),
            Store::Field(_) => self.push_field(row.into_iter().map(|(c, x)| (c, Scalar::from(x))).collect()),
        }
    }

    fn push_integer(&mut self, mut row: IntRow) -> bool {
        let Store::Integer(rows) = &mut self.store else { unreachable!() };
        make_primitive(&mut row);
        while let Some((c, _)) = row.first() {
            match self.pivot_of[*c] {
                None => {
                    self.pivot_of[*c] = Some(rows.len());
                    rows.push(row);
                    self.rank += 1;
                    return true;
                }
                Some(p) => {
                    row = eliminate_int(&row, &rows[p]);
                    make_primitive(&mut row);
                }
            }
        }
        false
    }

    fn push_field(&mut self, mut row: ScalarRow) -> bool {
        let Store::Field(rows) = &mut self.store else { unreachable!() };
        while let Some((c, lead)) = row.first() {
            let c = *c;
            match self.pivot_of[c] {
                None => {
                    let inv = lead.inv().expect("nonzero lead");
                    for (_, x) in row.iter_mut() {
                        *x = &*x * &inv;
                    }
                    self.pivot_of[c] = Some(rows.len());
                    rows.push(row);
                    self.rank += 1;
                    return true;
                }
                Some(p) => {
                    let f = lead.clone();
                    row = axpy(&row, &f, &rows[p]);
                }
            }
        }
        false
    }

    fn switch_to_field(&mut self) {
        let Store::Integer(rows) = &self.store else { return };
        let converted = rows
            .iter()
            .map(|r| {
                let lead = Scalar::from(r[0].1.clone()).inv().expect("nonzero lead");
                r.iter().map(|(c, x)| (*c, &Scalar::from(x.clone()) * &lead)).collect()
            })
            .collect();
        self.store = Store::Field(converted);
    }
}

fn integerize(row: &ScalarRow) -> IntRow {
    let lcm = row
        .iter()
        .map(|(_, x)| x.as_rational().expect("rational").denom().clone())
        .fold(BigInt::one(), |a, d| a.lcm(&d));
    row.iter()
        .map(|(c, x)| {
            let r = x.as_rational().unwrap();
            (*c, r.numer() * (&lcm / r.denom()))
        })
        .collect()
}

fn make_primitive(row: &mut IntRow) {
    let Some((_, first)) = row.first() else { return };
    let mut g = first.abs();
    for (_, x) in row.iter().skip(1) {
        if g.is_one() {
            break;
        }
        g = g.gcd(x);
    }
    let negate = first.is_negative();
    if !g.is_one() {
        for (_, x) in row.iter_mut() {
            *x = &*x / &g;
        }
    }
    if negate {
        for (_, x) in row.iter_mut() {
            *x = -&*x;
        }
    }
}

/// `lead(p) * row - lead(row) * p`, which cancels the shared leading column.
fn eliminate_int(row: &IntRow, p: &IntRow) -> IntRow {
    let a = &p[0].1;
    let b = &row[0].1;
    let mut out = Vec::with_capacity(row.len() + p.len());
    let (mut i, mut j) = (1, 1);
    while i < row.len() || j < p.len() {
        let ci = row.get(i).map_or(usize::MAX, |e| e.0);
        let cj = p.get(j).map_or(usize::MAX, |e| e.0);
        let (c, v) = if ci < cj {
            i += 1;
            (ci, a * &row[i - 1].1)
        } else if cj < ci {
            j += 1;
            (cj, -(b * &p[j - 1].1))
        } else {
            i += 1;
            j += 1;
            (ci, a * &row[i - 1].1 - b * &p[j - 1].1)
        };
        if !v.is_zero() {
            out.push((c, v));
        }
    }
    out
}

/// `row - f * p`, dropping the leading column which cancels exactly.
fn axpy(row: &ScalarRow, f: &Scalar, p: &ScalarRow) -> ScalarRow {
    let mut out = Vec::with_capacity(row.len() + p.len());
    let (mut i, mut j) = (1, 1);
    while i < row.len() || j < p.len() {
        let ci = row.get(i).map_or(usize::MAX, |e| e.0);
        let cj = p.get(j).map_or(usize::MAX, |e| e.0);
        let (c, v) = if ci < cj {
            i += 1;
            (ci, row[i - 1].1.clone())
        } else if cj < ci {
            j += 1;
            (cj, -(f * &p[j - 1].1))
        } else {
            i += 1;
            j += 1;
            (ci, &row[i - 1].1 - &(f * &p[j - 1].1))
        };
        if !v.is_zero() {
            out.push((c, v));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Matrix;
    use proptest::prelude::*;

    #[test]
    fn matches_dense_rank() {
        let m = Matrix::from_ints(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1], &[1, 3, 4]]);
        let mut acc = RankAccumulator::new(3);
        let grew: Vec<bool> = m.row_vecs().iter().map(|r| acc.push(r)).collect();
        assert_eq!(grew, vec![true, false, true, false]);
        assert_eq!(acc.rank(), m.rank());
        assert!(!acc.push(&[Scalar::zero(), Scalar::zero(), Scalar::zero()]));
    }

    #[test]
    fn switches_to_cyclotomic_rows() {
        let z = Scalar::zeta(3).unwrap();
        let mut acc = RankAccumulator::new(2);
        assert!(acc.push(&[Scalar::from(2), Scalar::from(4)]));
        assert!(!acc.push(&[z.clone(), &z * &Scalar::from(2)]));
        assert!(acc.push(&[z.clone(), Scalar::one()]));
        assert!(acc.is_full());
        assert!(!acc.push(&[Scalar::one(), Scalar::one()]));
    }

    proptest! {
        #[test]
        fn streaming_equals_dense(d in proptest::collection::vec(-2i64..3, 30), shuffle in any::<u64>()) {
            let m = Matrix::from_flat(6, 5, d.into_iter().map(Scalar::from).collect());
            let mut rows = m.row_vecs();
            let k = (shuffle % 6) as usize;
            rows.rotate_left(k);
            let mut acc = RankAccumulator::new(5);
            for r in &rows {
                acc.push(r);
            }
            prop_assert_eq!(acc.rank(), m.rank());
        }
    }
}
