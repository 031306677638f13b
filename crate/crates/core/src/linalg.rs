//! Exact linear algebra over the integers and rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Rank of an integer matrix by fraction-free (Bareiss) elimination.
///
/// After `k` pivots every active entry is a `(k+1)`-minor of the input, so the
/// division by the previous pivot is exact.
pub fn bareiss_rank(rows: Vec<Vec<BigInt>>) -> usize {
    let mut a = rows;
    let nrows = a.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = a[0].len();
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(p) = (rank..nrows).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let (top, bottom) = a.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        let pivot = &pivot_row[col];
        for row in bottom.iter_mut() {
            let factor = std::mem::take(&mut row[col]);
            for j in col + 1..ncols {
                let lead = if row[j].is_zero() {
                    None
                } else {
                    Some(pivot * &row[j])
                };
                let cross = if factor.is_zero() || pivot_row[j].is_zero() {
                    None
                } else {
                    Some(&factor * &pivot_row[j])
                };
                row[j] = match (lead, cross) {
                    (None, None) => continue,
                    (Some(x), None) => x,
                    (None, Some(y)) => -y,
                    (Some(x), Some(y)) => x - y,
                };
                if !prev.is_one() {
                    let (q, r) = row[j].div_rem(&prev);
                    debug_assert!(r.is_zero(), "Bareiss division must be exact");
                    row[j] = q;
                }
            }
        }
        prev = pivot.clone();
        rank += 1;
    }
    rank
}

/// Bareiss rank of a machine-integer matrix.
pub fn rank_i64(rows: &[Vec<i64>]) -> usize {
    bareiss_rank(
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect(),
    )
}

/// Basis of the right nullspace `{x : A x = 0}` over the rationals, read off
/// the reduced row echelon form. One vector per free column.
pub fn nullspace(rows: &[Vec<i64>], ncols: usize) -> Vec<Vec<BigRational>> {
    let mut a: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
        .collect();
    let nrows = a.len();
    let mut pivots: Vec<usize> = Vec::new();
    let mut rank = 0;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(p) = (rank..nrows).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let inv = a[rank][col].recip();
        for x in a[rank].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..nrows {
            if i == rank || a[i][col].is_zero() {
                continue;
            }
            let factor = a[i][col].clone();
            for j in col..ncols {
                if a[rank][j].is_zero() {
                    continue;
                }
                let delta = &factor * &a[rank][j];
                a[i][j] -= delta;
            }
        }
        pivots.push(col);
        rank += 1;
    }
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![BigRational::zero(); ncols];
        v[free] = BigRational::one();
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = -a[r][free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Integer matrix times rational vector; used to check kernel vectors.
pub fn apply(rows: &[Vec<i64>], v: &[BigRational]) -> Vec<BigRational> {
    rows.iter()
        .map(|r| {
            r.iter()
                .zip(v)
                .filter(|(a, _)| **a != 0)
                .fold(BigRational::zero(), |acc, (a, x)| {
                    acc + BigRational::from_integer(BigInt::from(*a)) * x
                })
        })
        .collect()
}

pub fn is_zero_vector(v: &[BigRational]) -> bool {
    v.iter().all(|x| x.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_ranks() {
        assert_eq!(rank_i64(&[]), 0);
        assert_eq!(rank_i64(&[vec![0, 0], vec![0, 0]]), 0);
        assert_eq!(rank_i64(&[vec![1, 2], vec![2, 4]]), 1);
        assert_eq!(rank_i64(&[vec![0, 2], vec![-2, 0]]), 2);
        assert_eq!(rank_i64(&[vec![0, 1, 0], vec![0, 0, 1], vec![0, 1, 1]]), 2);
        assert_eq!(rank_i64(&[vec![2, 3, 5], vec![7, 11, 13], vec![17, 19, 23]]), 3);
    }

    #[test]
    fn nullspace_of_rank_deficient_matrix() {
        let m = vec![vec![1, 2, 3], vec![2, 4, 6]];
        let k = nullspace(&m, 3);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(is_zero_vector(&apply(&m, v)));
        }
        assert_eq!(nullspace(&[vec![0, 0]], 2).len(), 2);
        assert!(nullspace(&[vec![0, 2], vec![-2, 0]], 2).is_empty());
    }
}
