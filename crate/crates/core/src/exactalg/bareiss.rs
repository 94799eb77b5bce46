//! Fraction-free elimination over the integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Rank of a dense integer matrix (row-major) by Bareiss elimination.
pub fn rank(mut a: Vec<Vec<BigInt>>) -> usize {
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..n {
        if r == m {
            break;
        }
        let Some(p) = pick_pivot(&a, r, c) else {
            continue;
        };
        a.swap(r, p);
        let (top, rest) = a.split_at_mut(r + 1);
        let piv_row = &top[r];
        for row in rest.iter_mut() {
            let lead = std::mem::take(&mut row[c]);
            if lead.is_zero() {
                for x in row[c + 1..].iter_mut() {
                    if !x.is_zero() {
                        *x = &*x * &piv_row[c] / &prev;
                    }
                }
                continue;
            }
            for j in c + 1..n {
                let v = &row[j] * &piv_row[c] - &lead * &piv_row[j];
                row[j] = exact_div(v, &prev);
            }
        }
        prev = a[r][c].clone();
        r += 1;
    }
    r
}

/// Fraction-free Gauss-Jordan. On return the first `pivots.len()` rows are
/// in reduced echelon form scaled by the common factor `d` (every pivot
/// entry equals `d`); remaining rows are zero.
pub fn gauss_jordan(a: &mut [Vec<BigInt>]) -> (Vec<usize>, BigInt) {
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        if r == m {
            break;
        }
        let Some(p) = pick_pivot(a, r, c) else {
            continue;
        };
        a.swap(r, p);
        let piv_row = std::mem::take(&mut a[r]);
        let pv = piv_row[c].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r {
                continue;
            }
            let lead = std::mem::take(&mut row[c]);
            for j in 0..n {
                if j == c {
                    continue;
                }
                if lead.is_zero() {
                    if !row[j].is_zero() {
                        row[j] = exact_div(&row[j] * &pv, &prev);
                    }
                } else {
                    let v = &row[j] * &pv - &lead * &piv_row[j];
                    row[j] = exact_div(v, &prev);
                }
            }
        }
        a[r] = piv_row;
        prev = pv;
        pivots.push(c);
        r += 1;
    }
    (pivots, prev)
}

fn pick_pivot(a: &[Vec<BigInt>], r: usize, c: usize) -> Option<usize> {
    // smallest magnitude keeps intermediate minors short
    (r..a.len())
        .filter(|&i| !a[i][c].is_zero())
        .min_by_key(|&i| a[i][c].bits())
}

fn exact_div(v: BigInt, d: &BigInt) -> BigInt {
    if d.is_one() {
        return v;
    }
    debug_assert!(v.is_multiple_of(d), "Bareiss division must be exact");
    if d.is_negative() {
        -(v / -d)
    } else {
        v / d
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    #[test]
    fn rank_small() {
        assert_eq!(rank(m(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank(m(&[&[0, 1], &[1, 0]])), 2);
        assert_eq!(rank(m(&[&[2, 4, 6], &[1, 3, 5], &[3, 7, 11]])), 2);
        assert_eq!(rank(Vec::new()), 0);
    }

    #[test]
    fn gauss_jordan_common_pivot() {
        let mut a = m(&[&[2, 1, 1], &[1, 3, 2], &[1, 0, 0]]);
        let (piv, d) = gauss_jordan(&mut a);
        assert_eq!(piv, vec![0, 1, 2]);
        for (k, row) in a.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                let want = if j == k { d.clone() } else { BigInt::zero() };
                assert_eq!(*x, want);
            }
        }
        // |det| of the matrix is 1
        assert_eq!(d.abs(), BigInt::one());
    }
}
