//! Smith normal form over Z (BigInt) and over Z/p^k, plus quotient-group
//! invariants from relation matrices.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// Smith normal form of an integer matrix (row-major, rows x cols). Returns
/// the diagonal entries (non-negative, each dividing the next, zeros last).
pub fn smith_normal_form(mut a: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut diag = Vec::new();
    let mut top = 0usize;
    let mut left = 0usize;
    while top < rows && left < cols {
        // Entry of minimal nonzero absolute value in the working block goes
        // to the pivot position.
        let mut best: Option<(usize, usize)> = None;
        for r in top..rows {
            for c in left..cols {
                if !a[r][c].is_zero()
                    && best
                        .map(|(br, bc): (usize, usize)| a[r][c].abs() < a[br][bc].abs())
                        .unwrap_or(true)
                {
                    best = Some((r, c));
                }
            }
        }
        let Some((br, bc)) = best else { break };
        a.swap(top, br);
        for row in a.iter_mut() {
            row.swap(left, bc);
        }
        // Reduce the pivot row and column until the pivot clears both.
        loop {
            let mut done = true;
            for r in top + 1..rows {
                if !a[r][left].is_zero() {
                    let q = div_round(&a[r][left], &a[top][left]);
                    if !q.is_zero() {
                        for c in left..cols {
                            let t = &q * &a[top][c];
                            a[r][c] -= t;
                        }
                    }
                    if !a[r][left].is_zero() {
                        a.swap(top, r);
                        done = false;
                    }
                }
            }
            for c in left + 1..cols {
                if !a[top][c].is_zero() {
                    let q = div_round(&a[top][c], &a[top][left]);
                    if !q.is_zero() {
                        for r in top..rows {
                            let t = &q * &a[r][left];
                            a[r][c] -= t;
                        }
                    }
                    if !a[top][c].is_zero() {
                        for row in a.iter_mut() {
                            row.swap(left, c);
                        }
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        diag.push(a[top][left].abs());
        top += 1;
        left += 1;
    }
    // Enforce the divisibility chain d_i | d_{i+1}.
    let mut changed = true;
    while changed {
        changed = false;
        for i in 0..diag.len().saturating_sub(1) {
            if diag[i].is_zero() {
                continue;
            }
            if (&diag[i + 1] % &diag[i]) != BigInt::zero() {
                let g = num_integer::Integer::gcd(&diag[i], &diag[i + 1]);
                let l = (&diag[i] * &diag[i + 1]) / &g;
                diag[i] = g;
                diag[i + 1] = l;
                changed = true;
            }
        }
    }
    diag
}

fn div_round(a: &BigInt, b: &BigInt) -> BigInt {
    // Round a/b so remainders shrink in absolute value.
    let two = BigInt::from(2);
    let (q, r) = num_integer::Integer::div_rem(a, b);
    if r.abs() * &two > b.abs() {
        if r.sign() == b.sign() || r.is_zero() {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}

/// Structure of Z^rank / <relations>: elementary divisors > 1 in a
/// divisibility chain, with free summands reported as trailing zeros.
pub fn quotient_invariants(rank: usize, relations: &[Vec<BigInt>]) -> Vec<BigInt> {
    if rank == 0 {
        return Vec::new();
    }
    let mut m = vec![vec![BigInt::zero(); relations.len()]; rank];
    for (j, rel) in relations.iter().enumerate() {
        for (i, entry) in rel.iter().enumerate() {
            m[i][j] = entry.clone();
        }
    }
    let diag = smith_normal_form(m);
    let one = BigInt::from(1);
    let mut out: Vec<BigInt> = diag
        .iter()
        .filter(|d| !d.is_zero() && **d > one)
        .cloned()
        .collect();
    for _ in diag.iter().filter(|d| !d.is_zero()).count()..rank {
        out.push(BigInt::zero());
    }
    out
}

/// Smith normal form over Z/p^e: returns the p-valuations of the diagonal
/// (capped at e), ascending. Classifies cokernels of matrices over Z/p^e.
pub fn snf_valuations_mod_pk(mut a: Vec<Vec<u64>>, p: u64, e: u32) -> Vec<u32> {
    let pe = p.pow(e);
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let val = |x: u64| -> u32 {
        let mut x = x % pe;
        if x == 0 {
            return e;
        }
        let mut v = 0;
        while x % p == 0 {
            x /= p;
            v += 1;
        }
        v
    };
    let mut out = Vec::new();
    let mut top = 0;
    let mut left = 0;
    while top < rows && left < cols {
        let mut best: Option<(usize, usize, u32)> = None;
        for r in top..rows {
            for c in left..cols {
                let v = val(a[r][c]);
                if v < e && best.map(|(_, _, bv)| v < bv).unwrap_or(true) {
                    best = Some((r, c, v));
                }
            }
        }
        let Some((br, bc, v)) = best else { break };
        a.swap(top, br);
        for row in a.iter_mut() {
            row.swap(left, bc);
        }
        // pivot = unit * p^v; normalize to exactly p^v
        let unit = (a[top][left] % pe) / p.pow(v);
        let uinv = inv_mod_pk(unit, p, e);
        for c in left..cols {
            a[top][c] = mulm(a[top][c], uinv, pe);
        }
        for r in top + 1..rows {
            if a[r][left] % pe != 0 {
                let f = (a[r][left] % pe) / p.pow(v);
                for c in left..cols {
                    let t = mulm(f, a[top][c], pe);
                    a[r][c] = (a[r][c] % pe + pe - t) % pe;
                }
            }
        }
        for c in left + 1..cols {
            if a[top][c] % pe != 0 {
                let f = (a[top][c] % pe) / p.pow(v);
                for r in top..rows {
                    let t = mulm(f, a[r][left], pe);
                    a[r][c] = (a[r][c] % pe + pe - t) % pe;
                }
            }
        }
        out.push(v);
        top += 1;
        left += 1;
    }
    for _ in out.len()..rows.min(cols) {
        out.push(e);
    }
    out.sort_unstable();
    out
}

fn mulm(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn inv_mod_pk(a: u64, p: u64, e: u32) -> u64 {
    let pe = p.pow(e);
    // Inverse mod p by Fermat, then Newton-lift to p^e.
    let mut inv = {
        let mut acc = 1u64;
        let mut base = a % p;
        let mut exp = p - 2;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = mulm(acc, base, p);
            }
            base = mulm(base, base, p);
            exp >>= 1;
        }
        acc
    };
    let mut k = 1;
    while k < e {
        let t = (2 + pe as u128 - mulm(a % pe, inv, pe) as u128) % pe as u128;
        inv = mulm(inv, t as u64, pe);
        k *= 2;
    }
    inv
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(v: Vec<Vec<i64>>) -> Vec<Vec<BigInt>> {
        v.into_iter()
            .map(|r| r.into_iter().map(BigInt::from).collect())
            .collect()
    }

    #[test]
    fn snf_small() {
        let d = smith_normal_form(big(vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, 4, 16]]));
        assert_eq!(d, vec![BigInt::from(2), BigInt::from(2), BigInt::from(156)]);
    }

    #[test]
    fn quotient_examples() {
        let inv = quotient_invariants(2, &big(vec![vec![2, 0], vec![0, 3]]));
        assert_eq!(inv, vec![BigInt::from(6)]);
        let inv = quotient_invariants(2, &big(vec![vec![2, 0]]));
        assert_eq!(inv, vec![BigInt::from(2), BigInt::zero()]);
        let inv = quotient_invariants(1, &big(vec![vec![1]]));
        assert!(inv.is_empty());
    }

    #[test]
    fn snf_mod_pk() {
        let vals =
            snf_valuations_mod_pk(vec![vec![1, 0, 0], vec![0, 3, 0], vec![0, 0, 9]], 3, 3);
        assert_eq!(vals, vec![0, 1, 2]);
        let vals = snf_valuations_mod_pk(vec![vec![3, 3], vec![6, 6]], 3, 2);
        assert_eq!(vals, vec![1, 2]);
    }

    #[test]
    fn mod_pk_matches_integer_snf() {
        // cokernel of [[4, 1], [0, 8]] over Z/16: integer SNF diag (1, 32)
        // capped at 16 -> valuations (0, 4 capped) = (0, 4) with e = 4
        let vals = snf_valuations_mod_pk(vec![vec![4, 1], vec![0, 8]], 2, 4);
        let diag = smith_normal_form(big(vec![vec![4, 1, 16, 0], vec![0, 8, 0, 16]]));
        let expect: Vec<u32> = diag
            .iter()
            .map(|d| {
                let mut v = 0u32;
                let mut x = d.clone();
                while (&x % 2) == BigInt::zero() && v < 4 {
                    x /= 2;
                    v += 1;
                }
                v
            })
            .collect();
        assert_eq!(vals, expect);
    }

    proptest! {
        #[test]
        fn snf_chain_and_det(a in -9i64..9, b in -9i64..9, c in -9i64..9, d in -9i64..9) {
            let m = big(vec![vec![a, b], vec![c, d]]);
            let diag = smith_normal_form(m);
            let det = BigInt::from((a * d - b * c).abs());
            if diag.len() == 2 {
                prop_assert_eq!(&diag[0] * &diag[1], det);
                if !diag[0].is_zero() {
                    prop_assert_eq!(&diag[1] % &diag[0], BigInt::zero());
                }
            } else {
                prop_assert_eq!(det, BigInt::zero());
            }
        }

        #[test]
        fn cokernel_valuations_match_integer_route(
            entries in proptest::collection::vec(0u64..27, 9)
        ) {
            let a: Vec<Vec<u64>> = entries.chunks(3).map(|c| c.to_vec()).collect();
            let vals = snf_valuations_mod_pk(a.clone(), 3, 3);
            // integer route: SNF of [A | 27 I]
            let mut m = Vec::new();
            for (i, row) in a.iter().enumerate() {
                let mut r: Vec<BigInt> = row.iter().map(|&x| BigInt::from(x)).collect();
                for j in 0..3 {
                    r.push(if i == j { BigInt::from(27) } else { BigInt::zero() });
                }
                m.push(r);
            }
            let diag = smith_normal_form(m);
            let expect: Vec<u32> = diag.iter().map(|d| {
                let mut v = 0u32;
                let mut x = d.clone();
                while (&x % 3) == BigInt::zero() && v < 3 {
                    x /= 3;
                    v += 1;
                }
                v
            }).collect();
            prop_assert_eq!(vals, expect);
        }
    }
}
