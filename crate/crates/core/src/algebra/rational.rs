//! Exact rank over ℚ by fraction Gaussian elimination. Kept independent of the
//! Smith reduction so the two can cross-check each other.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::matrix::IntegerMatrix;

pub fn rational_rank(a: &IntegerMatrix) -> usize {
    let (m, n) = (a.rows(), a.cols());
    let mut rows: Vec<Vec<BigRational>> = (0..m)
        .map(|i| {
            (0..n)
                .map(|j| BigRational::from_integer(a.get(i, j).clone()))
                .collect()
        })
        .collect();
    let mut rank = 0;
    for col in 0..n {
        let Some(p) = (rank..m).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot_row = rows[rank].clone();
        for row in rows.iter_mut().skip(rank + 1) {
            if row[col].is_zero() {
                continue;
            }
            let factor = &row[col] / &pivot_row[col];
            for j in col..n {
                let delta = &factor * &pivot_row[j];
                row[j] -= delta;
            }
        }
        rank += 1;
        if rank == m {
            break;
        }
    }
    rank
}

/// Rank of a matrix given as machine-word rows.
pub fn rational_rank_of_rows(rows: &[Vec<i64>]) -> usize {
    let m = IntegerMatrix::from_rows(
        &rows
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
    );
    rational_rank(&m)
}
