//! Smith normal form over the integers.
//!
//! Elimination always pivots on the nonzero entry of least absolute value in
//! the remaining block (ties: lowest row, then lowest column). The reduction
//! first runs on machine words with checked arithmetic and restarts on
//! `BigInt` as soon as any operation would overflow.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::IntegerMatrix;

/// `left · A · right = diagonal`, with both transforms unimodular.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub diagonal: IntegerMatrix,
    pub left: IntegerMatrix,
    pub right: IntegerMatrix,
}

impl SmithForm {
    /// Nonzero diagonal entries `d₁ | d₂ | …`, all positive.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        (0..self.diagonal.rows().min(self.diagonal.cols()))
            .map(|i| self.diagonal.get(i, i).clone())
            .take_while(|d| !Zero::is_zero(d))
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

trait Entry: Clone {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn cmp_abs(&self, other: &Self) -> Ordering;
    fn is_negative(&self) -> bool;
    fn checked_neg(&self) -> Option<Self>;
    /// Quotient truncated toward zero.
    fn checked_quot(&self, d: &Self) -> Option<Self>;
    /// `self - q * b`
    fn checked_sub_mul(&self, q: &Self, b: &Self) -> Option<Self>;
    fn checked_add(&self, b: &Self) -> Option<Self>;
    fn divides(&self, other: &Self) -> bool;
    fn is_unit(&self) -> bool;
}

impl Entry for i64 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn cmp_abs(&self, other: &Self) -> Ordering {
        self.unsigned_abs().cmp(&other.unsigned_abs())
    }
    fn is_negative(&self) -> bool {
        *self < 0
    }
    fn checked_neg(&self) -> Option<Self> {
        i64::checked_neg(*self)
    }
    fn checked_quot(&self, d: &Self) -> Option<Self> {
        i64::checked_div(*self, *d)
    }
    fn checked_sub_mul(&self, q: &Self, b: &Self) -> Option<Self> {
        i64::checked_sub(*self, q.checked_mul(*b)?)
    }
    fn checked_add(&self, b: &Self) -> Option<Self> {
        i64::checked_add(*self, *b)
    }
    fn divides(&self, other: &Self) -> bool {
        // self is a nonzero pivot here.
        other.checked_rem(*self).is_none_or(|r| r == 0)
    }
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
}

impl Entry for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        num_traits::One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn cmp_abs(&self, other: &Self) -> Ordering {
        self.magnitude().cmp(other.magnitude())
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn checked_neg(&self) -> Option<Self> {
        Some(-self)
    }
    fn checked_quot(&self, d: &Self) -> Option<Self> {
        Some(self / d)
    }
    fn checked_sub_mul(&self, q: &Self, b: &Self) -> Option<Self> {
        Some(self - q * b)
    }
    fn checked_add(&self, b: &Self) -> Option<Self> {
        Some(self + b)
    }
    fn divides(&self, other: &Self) -> bool {
        other.is_multiple_of(self)
    }
    fn is_unit(&self) -> bool {
        self.magnitude().is_one()
    }
}

struct Overflow;

struct Dense<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: Entry> Dense<E> {
    fn identity(n: usize) -> Self {
        let mut data = vec![E::zero(); n * n];
        for i in 0..n {
            data[i * n + i] = E::one();
        }
        Self {
            rows: n,
            cols: n,
            data,
        }
    }

    fn at(&self, i: usize, j: usize) -> &E {
        &self.data[i * self.cols + j]
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// row[target] -= q * row[source], on columns `from..`.
    fn row_sub(
        &mut self,
        target: usize,
        source: usize,
        q: &E,
        from: usize,
    ) -> Result<(), Overflow> {
        for j in from..self.cols {
            let s = &self.data[source * self.cols + j];
            if s.is_zero() {
                continue;
            }
            let v = self.data[target * self.cols + j]
                .checked_sub_mul(q, s)
                .ok_or(Overflow)?;
            self.data[target * self.cols + j] = v;
        }
        Ok(())
    }

    /// col[target] -= q * col[source], on rows `from..`.
    fn col_sub(
        &mut self,
        target: usize,
        source: usize,
        q: &E,
        from: usize,
    ) -> Result<(), Overflow> {
        for i in from..self.rows {
            let s = &self.data[i * self.cols + source];
            if s.is_zero() {
                continue;
            }
            let v = self.data[i * self.cols + target]
                .checked_sub_mul(q, s)
                .ok_or(Overflow)?;
            self.data[i * self.cols + target] = v;
        }
        Ok(())
    }

    fn row_add(&mut self, target: usize, source: usize, from: usize) -> Result<(), Overflow> {
        for j in from..self.cols {
            let v = self.data[target * self.cols + j]
                .checked_add(&self.data[source * self.cols + j])
                .ok_or(Overflow)?;
            self.data[target * self.cols + j] = v;
        }
        Ok(())
    }

    fn negate_row(&mut self, r: usize) -> Result<(), Overflow> {
        for j in 0..self.cols {
            let v = self.data[r * self.cols + j].checked_neg().ok_or(Overflow)?;
            self.data[r * self.cols + j] = v;
        }
        Ok(())
    }
}

struct Reduction<E> {
    diagonal: Dense<E>,
    left: Option<Dense<E>>,
    right: Option<Dense<E>>,
}

fn reduce<E: Entry>(mut a: Dense<E>, track: bool) -> Result<Reduction<E>, Overflow> {
    let (m, n) = (a.rows, a.cols);
    let mut left = track.then(|| Dense::identity(m));
    let mut right = track.then(|| Dense::identity(n));

    for t in 0..m.min(n) {
        loop {
            let mut pivot: Option<(usize, usize)> = None;
            'scan: for i in t..m {
                for j in t..n {
                    let e = a.at(i, j);
                    if e.is_zero() {
                        continue;
                    }
                    if pivot.is_none_or(|(pi, pj)| e.cmp_abs(a.at(pi, pj)) == Ordering::Less) {
                        pivot = Some((i, j));
                        // Nothing beats a unit, and later units lose the tie.
                        if e.is_unit() {
                            break 'scan;
                        }
                    }
                }
            }
            let Some((pi, pj)) = pivot else {
                return Ok(Reduction {
                    diagonal: a,
                    left,
                    right,
                });
            };
            a.swap_rows(t, pi);
            a.swap_cols(t, pj);
            if let Some(l) = left.as_mut() {
                l.swap_rows(t, pi);
            }
            if let Some(r) = right.as_mut() {
                r.swap_cols(t, pj);
            }

            let mut clean = true;
            for i in t + 1..m {
                if a.at(i, t).is_zero() {
                    continue;
                }
                let q = a.at(i, t).checked_quot(a.at(t, t)).ok_or(Overflow)?;
                a.row_sub(i, t, &q, t)?;
                if let Some(l) = left.as_mut() {
                    l.row_sub(i, t, &q, 0)?;
                }
                clean &= a.at(i, t).is_zero();
            }
            for j in t + 1..n {
                if a.at(t, j).is_zero() {
                    continue;
                }
                let q = a.at(t, j).checked_quot(a.at(t, t)).ok_or(Overflow)?;
                a.col_sub(j, t, &q, t)?;
                if let Some(r) = right.as_mut() {
                    r.col_sub(j, t, &q, 0)?;
                }
                clean &= a.at(t, j).is_zero();
            }
            if !clean {
                continue;
            }

            // Pivot must divide the rest of the block; otherwise fold the
            // offending row into row t and reduce again.
            if a.at(t, t).is_unit() {
                break;
            }
            let offending =
                (t + 1..m).find(|&i| (t + 1..n).any(|j| !a.at(t, t).divides(a.at(i, j))));
            match offending {
                Some(i) => {
                    a.row_add(t, i, t)?;
                    if let Some(l) = left.as_mut() {
                        l.row_add(t, i, 0)?;
                    }
                }
                None => break,
            }
        }
        if a.at(t, t).is_negative() {
            a.negate_row(t)?;
            if let Some(l) = left.as_mut() {
                l.negate_row(t)?;
            }
        }
    }
    Ok(Reduction {
        diagonal: a,
        left,
        right,
    })
}

fn run(a: &IntegerMatrix, track: bool) -> Reduction<BigInt> {
    if let Some(small) = a.to_i64() {
        let dense = Dense {
            rows: a.rows(),
            cols: a.cols(),
            data: small,
        };
        if let Ok(r) = reduce(dense, track) {
            let widen = |d: Dense<i64>| Dense {
                rows: d.rows,
                cols: d.cols,
                data: d.data.into_iter().map(BigInt::from).collect(),
            };
            return Reduction {
                diagonal: widen(r.diagonal),
                left: r.left.map(widen),
                right: r.right.map(widen),
            };
        }
    }
    let dense = Dense {
        rows: a.rows(),
        cols: a.cols(),
        data: a.entries().to_vec(),
    };
    match reduce(dense, track) {
        Ok(r) => r,
        Err(Overflow) => unreachable!("BigInt arithmetic cannot overflow"),
    }
}

fn to_matrix(d: Dense<BigInt>) -> IntegerMatrix {
    IntegerMatrix::from_entries(d.rows, d.cols, d.data)
}

pub fn smith_normal_form(a: &IntegerMatrix) -> SmithForm {
    let r = run(a, true);
    SmithForm {
        diagonal: to_matrix(r.diagonal),
        left: to_matrix(r.left.expect("tracked")),
        right: to_matrix(r.right.expect("tracked")),
    }
}

/// Nonzero Smith diagonal without the transforms.
pub fn invariant_factors(a: &IntegerMatrix) -> Vec<BigInt> {
    let r = run(a, false);
    let d = r.diagonal;
    (0..d.rows.min(d.cols))
        .map(|i| d.at(i, i).clone())
        .take_while(|x| !Entry::is_zero(x))
        .collect()
}

/// Invariant factors of a machine-word matrix; promotes to `BigInt` on overflow.
pub(crate) fn invariant_factors_i64(rows: usize, cols: usize, data: Vec<i64>) -> Vec<BigInt> {
    let dense = Dense { rows, cols, data };
    let snapshot = dense.data.clone();
    match reduce(dense, false) {
        Ok(r) => {
            let d = r.diagonal;
            (0..rows.min(cols))
                .map(|i| *d.at(i, i))
                .take_while(|&x| x != 0)
                .map(BigInt::from)
                .collect()
        }
        Err(Overflow) => invariant_factors(&IntegerMatrix::from_i64(rows, cols, snapshot)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(a: &IntegerMatrix) -> SmithForm {
        let s = smith_normal_form(a);
        assert_eq!(&(&s.left * a) * &s.right, s.diagonal);
        assert!(s.left.determinant().abs().is_one());
        assert!(s.right.determinant().abs().is_one());
        s
    }

    #[test]
    fn zero_matrix() {
        let a = IntegerMatrix::zeros(2, 3);
        let s = check(&a);
        assert!(s.diagonal.is_zero());
        assert_eq!(s.left, IntegerMatrix::identity(2));
        assert_eq!(s.right, IntegerMatrix::identity(3));
    }

    #[test]
    fn two_by_two_example() {
        // gcd of entries is 2 and |det| = 8, so the diagonal is (2, 4).
        let s = check(&IntegerMatrix::from_rows(&[vec![2, 4], vec![6, 8]]));
        assert_eq!(
            s.invariant_factors(),
            vec![BigInt::from(2), BigInt::from(4)]
        );
    }

    #[test]
    fn identity_is_fixed() {
        let s = check(&IntegerMatrix::identity(4));
        assert_eq!(s.diagonal, IntegerMatrix::identity(4));
    }

    #[test]
    fn divisibility_needs_row_folding() {
        // diag(2, 3) is diagonal but not in normal form: expect (1, 6).
        let s = check(&IntegerMatrix::from_rows(&[vec![2, 0], vec![0, 3]]));
        assert_eq!(
            s.invariant_factors(),
            vec![BigInt::from(1), BigInt::from(6)]
        );
    }

    #[test]
    fn empty_shapes() {
        for (r, c) in [(0, 0), (0, 3), (2, 0)] {
            let s = check(&IntegerMatrix::zeros(r, c));
            assert_eq!(s.rank(), 0);
        }
    }

    #[test]
    fn overflow_promotes_to_bigint() {
        let big = i64::MAX / 2 + 7;
        let a = IntegerMatrix::from_rows(&[vec![big, big - 1], vec![big - 3, big + 5]]);
        let s = check(&a);
        let det = a.determinant().abs();
        let prod: BigInt = s.invariant_factors().iter().product();
        assert_eq!(prod, det);
        assert_eq!(
            invariant_factors_i64(2, 2, vec![big, big - 1, big - 3, big + 5]),
            s.invariant_factors()
        );
    }
}
