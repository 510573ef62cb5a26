//! Exact rational linear algebra used by the lattice-geometry modules.
//!
//! Everything here works over arbitrary-precision rationals; no floating
//! point anywhere. Matrices are dense row-major `Vec<Vec<_>>`, which is
//! adequate at the ranks this crate handles.

use num::{BigInt, BigRational, One, Signed, Zero};

pub type Q = BigRational;

pub fn q_from(v: i64) -> Q {
    Q::from_integer(BigInt::from(v))
}

pub fn row_from(v: &[i64]) -> Vec<Q> {
    v.iter().map(|&x| q_from(x)).collect()
}

pub fn mat_from(m: &[Vec<i64>]) -> Vec<Vec<Q>> {
    m.iter().map(|r| row_from(r)).collect()
}

/// Determinant of a square integer matrix, exact. Small matrices go
/// through a checked i128 fast path; anything that would overflow falls
/// back to big integers.
pub fn det_int(m: &[Vec<i64>]) -> BigInt {
    match det_i128_checked(m) {
        Some(d) => BigInt::from(d),
        None => det_bigint(&bigint_mat_from(m)),
    }
}

/// Fraction-free Bareiss over i128 with overflow detection.
fn det_i128_checked(m: &[Vec<i64>]) -> Option<i128> {
    let n = m.len();
    if n == 0 {
        return Some(1);
    }
    let mut a: Vec<Vec<i128>> = m
        .iter()
        .map(|row| row.iter().map(|&x| x as i128).collect())
        .collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for col in 0..n - 1 {
        let pivot = (col..n).find(|&r| a[r][col] != 0);
        let Some(pivot) = pivot else {
            return Some(0);
        };
        if pivot != col {
            a.swap(pivot, col);
            sign = -sign;
        }
        for r in col + 1..n {
            for c in col + 1..n {
                let num = a[col][col]
                    .checked_mul(a[r][c])?
                    .checked_sub(a[r][col].checked_mul(a[col][c])?)?;
                if num % prev != 0 {
                    return None;
                }
                a[r][c] = num / prev;
            }
            a[r][col] = 0;
        }
        prev = a[col][col];
    }
    Some(sign * a[n - 1][n - 1])
}

/// Rank-equals-row-count test for an integer matrix, via checked
/// fraction-free elimination; `None` on potential overflow.
pub fn full_row_rank_i128(rows: &[Vec<i64>]) -> Option<bool> {
    let k = rows.len();
    if k == 0 {
        return Some(true);
    }
    let n = rows[0].len();
    if k > n {
        return Some(false);
    }
    let mut a: Vec<Vec<i128>> = rows
        .iter()
        .map(|row| row.iter().map(|&x| x as i128).collect())
        .collect();
    let mut rank = 0;
    let mut prev = 1i128;
    for col in 0..n {
        let Some(pivot) = (rank..k).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(pivot, rank);
        for r in rank + 1..k {
            for c in col + 1..n {
                let num = a[rank][col]
                    .checked_mul(a[r][c])?
                    .checked_sub(a[r][col].checked_mul(a[rank][c])?)?;
                if num % prev != 0 {
                    return None;
                }
                a[r][c] = num / prev;
            }
            a[r][col] = 0;
        }
        prev = a[rank][col];
        rank += 1;
        if rank == k {
            return Some(true);
        }
    }
    Some(rank == k)
}

/// Fraction-free Bareiss determinant; all intermediate divisions are
/// exact.
pub fn det_bigint(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for col in 0..n - 1 {
        let Some(pivot) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return BigInt::zero();
        };
        if pivot != col {
            a.swap(pivot, col);
            sign = -sign;
        }
        for r in col + 1..n {
            for c in col + 1..n {
                let v = (&a[col][col] * &a[r][c] - &a[r][col] * &a[col][c]) / &prev;
                a[r][c] = v;
            }
            a[r][col] = BigInt::zero();
        }
        prev = a[col][col].clone();
    }
    sign * a[n - 1][n - 1].clone()
}

/// Adjugate of a square integer matrix: `adj(m) * m = det(m) * I`.
pub fn adjugate_bigint(m: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let n = m.len();
    if n == 1 {
        return vec![vec![BigInt::one()]];
    }
    let mut adj = vec![vec![BigInt::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            // Cofactor of entry (j, i).
            let minor: Vec<Vec<BigInt>> = (0..n)
                .filter(|&r| r != j)
                .map(|r| {
                    (0..n)
                        .filter(|&c| c != i)
                        .map(|c| m[r][c].clone())
                        .collect()
                })
                .collect();
            let mut cof = det_bigint(&minor);
            if (i + j) % 2 == 1 {
                cof = -cof;
            }
            adj[i][j] = cof;
        }
    }
    adj
}

pub fn bigint_mat_from(m: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    m.iter()
        .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
        .collect()
}

pub fn bigint_mat_vec(m: &[Vec<BigInt>], v: &[BigInt]) -> Vec<BigInt> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

/// Inverse of a square rational matrix; `None` when singular.
pub fn inverse(m: &[Vec<Q>]) -> Option<Vec<Vec<Q>>> {
    let n = m.len();
    let mut a: Vec<Vec<Q>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut ext = row.clone();
            ext.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
            ext
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(pivot, col);
        let inv = a[col][col].clone();
        for c in col..2 * n {
            a[col][c] = &a[col][c] / &inv;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone();
            for c in col..2 * n {
                let sub = &factor * &a[col][c];
                a[r][c] -= sub;
            }
        }
    }
    Some(a.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Solve the square system `a * x = b`; `None` when `a` is singular.
pub fn solve(a: &[Vec<Q>], b: &[Q]) -> Option<Vec<Q>> {
    let n = a.len();
    let mut m: Vec<Vec<Q>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut ext = row.clone();
            ext.push(rhs.clone());
            ext
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(pivot, col);
        let inv = m[col][col].clone();
        for c in col..=n {
            m[col][c] = &m[col][c] / &inv;
        }
        for r in 0..n {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].clone();
            for c in col..=n {
                let sub = &factor * &m[col][c];
                m[r][c] -= sub;
            }
        }
    }
    Some(m.into_iter().map(|row| row[n].clone()).collect())
}

pub fn mat_vec_i64(m: &[Vec<i64>], v: &[i64]) -> Vec<i64> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

pub fn mat_mul_i64(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    let m = b[0].len();
    let k = b.len();
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| (0..k).map(|l| a[i][l] * b[l][j]).sum())
                .collect()
        })
        .collect()
}

pub fn mat_vec_q(m: &[Vec<Q>], v: &[Q]) -> Vec<Q> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

pub fn dot_i64(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Feasibility of `{ x >= 0 : a x = b }`, decided exactly by a phase-one
/// simplex with Bland's rule (guaranteed to terminate).
pub fn feasible(a: &[Vec<Q>], b: &[Q]) -> bool {
    let rows = a.len();
    if rows == 0 {
        return true;
    }
    let cols = a[0].len();
    // Tableau columns: original variables, artificial basis, rhs.
    // Rows are normalized so the rhs is nonnegative.
    let mut tab: Vec<Vec<Q>> = Vec::with_capacity(rows);
    for i in 0..rows {
        let mut row: Vec<Q> = Vec::with_capacity(cols + rows + 1);
        let flip = b[i].is_negative();
        for j in 0..cols {
            row.push(if flip { -a[i][j].clone() } else { a[i][j].clone() });
        }
        for j in 0..rows {
            row.push(if j == i { Q::one() } else { Q::zero() });
        }
        row.push(if flip { -b[i].clone() } else { b[i].clone() });
        tab.push(row);
    }
    let total = cols + rows;
    let mut basis: Vec<usize> = (cols..total).collect();
    // Phase-one objective: minimize the sum of the artificial variables.
    // Reduced-cost row for cost vector (0,...,0,1,...,1) with the
    // artificial columns basic: cost_j = c_j - sum_i tab[i][j].
    let mut cost: Vec<Q> = vec![Q::zero(); total + 1];
    for j in 0..=total {
        let mut s = Q::zero();
        for row in &tab {
            s += &row[j];
        }
        let c_j = if j >= cols && j < total { Q::one() } else { Q::zero() };
        cost[j] = c_j - s;
    }
    loop {
        // Bland: entering column = smallest index with negative reduced cost.
        let Some(enter) = (0..total).find(|&j| cost[j].is_negative()) else {
            break;
        };
        // Ratio test, ties broken by smallest basic variable index.
        let mut leave: Option<usize> = None;
        let mut best: Option<Q> = None;
        for i in 0..rows {
            if tab[i][enter].is_positive() {
                let ratio = &tab[i][total] / &tab[i][enter];
                let better = match &best {
                    None => true,
                    Some(b) => {
                        ratio < *b || (ratio == *b && basis[i] < basis[leave.unwrap()])
                    }
                };
                if better {
                    best = Some(ratio);
                    leave = Some(i);
                }
            }
        }
        let Some(leave) = leave else {
            // Unbounded cannot happen in phase one; treat defensively.
            break;
        };
        // Pivot on (leave, enter).
        let inv = tab[leave][enter].clone();
        for c in 0..=total {
            tab[leave][c] = &tab[leave][c] / &inv;
        }
        for r in 0..rows {
            if r == leave || tab[r][enter].is_zero() {
                continue;
            }
            let factor = tab[r][enter].clone();
            for c in 0..=total {
                let sub = &factor * &tab[leave][c];
                tab[r][c] -= sub;
            }
        }
        if !cost[enter].is_zero() {
            let factor = cost[enter].clone();
            for c in 0..=total {
                let sub = &factor * &tab[leave][c];
                cost[c] -= sub;
            }
        }
        basis[leave] = enter;
    }
    // Feasible iff the artificial variables can all be driven to zero.
    let mut objective = Q::zero();
    for i in 0..rows {
        if basis[i] >= cols {
            objective += &tab[i][total];
        }
    }
    objective.is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qm(m: &[Vec<i64>]) -> Vec<Vec<Q>> {
        mat_from(m)
    }

    #[test]
    fn det_examples() {
        assert_eq!(det_int(&[vec![2, -1], vec![-1, 2]]), BigInt::from(3));
        assert_eq!(det_int(&[vec![1, 2], vec![2, 4]]), BigInt::from(0));
        assert_eq!(det_int(&[vec![-1, -1], vec![-1, -2]]), BigInt::from(1));
    }

    #[test]
    fn inverse_round_trip() {
        let m = qm(&[vec![2, -1], vec![-1, 2]]);
        let inv = inverse(&m).unwrap();
        let e0 = mat_vec_q(&inv, &row_from(&[2, -1]));
        assert_eq!(e0, row_from(&[1, 0]));
        assert!(inverse(&qm(&[vec![1, 2], vec![2, 4]])).is_none());
    }

    #[test]
    fn solve_square() {
        let a = qm(&[vec![2, 1], vec![1, 2]]);
        let x = solve(&a, &row_from(&[4, 5])).unwrap();
        assert_eq!(x, row_from(&[1, 2]));
    }

    #[test]
    fn feasibility_basics() {
        // x + y = 1 has nonnegative solutions.
        assert!(feasible(&[row_from(&[1, 1])], &row_from(&[1])));
        // x + y = -1 does not.
        assert!(!feasible(&[row_from(&[1, 1])], &row_from(&[-1])));
        // x - y = 0, x + y = 2 -> x = y = 1.
        assert!(feasible(
            &[row_from(&[1, -1]), row_from(&[1, 1])],
            &row_from(&[0, 2])
        ));
        // x = 1 and x = 2 simultaneously: infeasible.
        assert!(!feasible(
            &[row_from(&[1]), row_from(&[1])],
            &row_from(&[1, 2])
        ));
    }
}
