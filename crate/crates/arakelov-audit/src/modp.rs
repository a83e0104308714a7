//! Arithmetic mod a u64 prime: primality testing, primitive roots, square
//! roots, dense linear algebra and polynomial root extraction. Everything
//! here serves the character-table computation, which needs a prime
//! `l = 1 (mod n)` large enough to make lifted values unambiguous.

pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn add_mod(a: u64, b: u64, m: u64) -> u64 {
    let s = a as u128 + b as u128;
    (s % m as u128) as u64
}

pub fn sub_mod(a: u64, b: u64, m: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        m - (b - a)
    }
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

pub fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// Deterministic Miller-Rabin for u64.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Prime factorization by trial division (inputs here are at most ~2^40).
pub fn factor(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// A primitive root mod prime p.
pub fn primitive_root(p: u64) -> u64 {
    if p == 2 {
        return 1;
    }
    let factors = factor(p - 1);
    'candidate: for g in 2..p {
        for &(q, _) in &factors {
            if pow_mod(g, (p - 1) / q, p) == 1 {
                continue 'candidate;
            }
        }
        return g;
    }
    unreachable!("primitive root exists for every prime")
}

/// Tonelli-Shanks square root mod odd prime p; returns a root of `a` or None.
pub fn sqrt_mod(a: u64, p: u64) -> Option<u64> {
    let a = a % p;
    if a == 0 {
        return Some(0);
    }
    if pow_mod(a, (p - 1) / 2, p) != 1 {
        return None;
    }
    if p % 4 == 3 {
        return Some(pow_mod(a, (p + 1) / 4, p));
    }
    let mut q = p - 1;
    let mut s = 0u32;
    while q % 2 == 0 {
        q /= 2;
        s += 1;
    }
    let mut z = 2u64;
    while pow_mod(z, (p - 1) / 2, p) != p - 1 {
        z += 1;
    }
    let mut m = s;
    let mut c = pow_mod(z, q, p);
    let mut t = pow_mod(a, q, p);
    let mut r = pow_mod(a, (q + 1) / 2, p);
    while t != 1 {
        let mut i = 0u32;
        let mut t2 = t;
        while t2 != 1 {
            t2 = mul_mod(t2, t2, p);
            i += 1;
        }
        let b = pow_mod(c, 1u64 << (m - i - 1), p);
        m = i;
        c = mul_mod(b, b, p);
        t = mul_mod(t, c, p);
        r = mul_mod(r, b, p);
    }
    Some(r)
}

/// The least prime `l` with `l = 1 (mod modulus)` and `l >= start`, searching
/// up to `bound`. `skip` suitable primes are passed over first (used to rerun
/// a table computation with a different prime).
pub fn find_prime_one_mod(modulus: u64, start: u64, bound: u64, skip: usize) -> Option<u64> {
    let m = modulus.max(1);
    let mut l = start + (m - (start % m)) % m + 1;
    if l % m != 1 {
        l += m - (l - 1) % m;
    }
    debug_assert_eq!(l % m, 1 % m.max(2).min(m));
    let mut remaining = skip;
    while l <= bound {
        if is_prime(l) {
            if remaining == 0 {
                return Some(l);
            }
            remaining -= 1;
        }
        l += m;
    }
    None
}

// ---------------------------------------------------------------------------
// Dense linear algebra over F_p.
// ---------------------------------------------------------------------------

/// Row-major dense matrix over F_p.
#[derive(Debug, Clone)]
pub struct MatP {
    pub p: u64,
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<u64>,
}

impl MatP {
    pub fn zero(p: u64, rows: usize, cols: usize) -> Self {
        MatP {
            p,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(p: u64, n: usize) -> Self {
        let mut m = Self::zero(p, n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    pub fn mat_vec(&self, v: &[u64]) -> Vec<u64> {
        let mut out = vec![0u64; self.rows];
        for i in 0..self.rows {
            let mut acc = 0u128;
            let row = &self.data[i * self.cols..(i + 1) * self.cols];
            for (a, b) in row.iter().zip(v) {
                acc += *a as u128 * *b as u128;
                // Stay within u128: reduce lazily every few terms is not
                // needed since cols * p^2 < 2^127 for our sizes.
            }
            out[i] = (acc % self.p as u128) as u64;
        }
        out
    }

    /// Solve `self * x = b` where self is square and invertible on the span
    /// needed; returns None if inconsistent or underdetermined.
    pub fn solve(&self, b: &[u64]) -> Option<Vec<u64>> {
        let p = self.p;
        let n = self.rows;
        let m = self.cols;
        let mut a = self.clone();
        let mut rhs = b.to_vec();
        let mut pivot_cols = Vec::new();
        let mut row = 0;
        for col in 0..m {
            let Some(pr) = (row..n).find(|&r| a[(r, col)] != 0) else {
                continue;
            };
            a.swap_rows(row, pr);
            rhs.swap(row, pr);
            let inv = inv_mod(a[(row, col)], p);
            for c in col..m {
                a[(row, c)] = mul_mod(a[(row, c)], inv, p);
            }
            rhs[row] = mul_mod(rhs[row], inv, p);
            for r in 0..n {
                if r != row && a[(r, col)] != 0 {
                    let f = a[(r, col)];
                    for c in col..m {
                        let t = mul_mod(f, a[(row, c)], p);
                        a[(r, c)] = sub_mod(a[(r, c)], t, p);
                    }
                    let t = mul_mod(f, rhs[row], p);
                    rhs[r] = sub_mod(rhs[r], t, p);
                }
            }
            pivot_cols.push(col);
            row += 1;
            if row == n {
                break;
            }
        }
        for r in row..n {
            if rhs[r] != 0 {
                return None;
            }
        }
        if pivot_cols.len() != m {
            return None;
        }
        let mut x = vec![0u64; m];
        for (r, &c) in pivot_cols.iter().enumerate() {
            x[c] = rhs[r];
        }
        Some(x)
    }

    /// Basis of the right kernel, as rows.
    pub fn kernel(&self) -> Vec<Vec<u64>> {
        let p = self.p;
        let n = self.rows;
        let m = self.cols;
        let mut a = self.clone();
        let mut pivot_col_of_row = Vec::new();
        let mut row = 0;
        for col in 0..m {
            let Some(pr) = (row..n).find(|&r| a[(r, col)] != 0) else {
                continue;
            };
            a.swap_rows(row, pr);
            let inv = inv_mod(a[(row, col)], p);
            for c in col..m {
                a[(row, c)] = mul_mod(a[(row, c)], inv, p);
            }
            for r in 0..n {
                if r != row && a[(r, col)] != 0 {
                    let f = a[(r, col)];
                    for c in col..m {
                        let t = mul_mod(f, a[(row, c)], p);
                        a[(r, c)] = sub_mod(a[(r, c)], t, p);
                    }
                }
            }
            pivot_col_of_row.push(col);
            row += 1;
            if row == n {
                break;
            }
        }
        let pivots: std::collections::HashSet<usize> = pivot_col_of_row.iter().copied().collect();
        let mut basis = Vec::new();
        for free in 0..m {
            if pivots.contains(&free) {
                continue;
            }
            let mut v = vec![0u64; m];
            v[free] = 1;
            for (r, &pc) in pivot_col_of_row.iter().enumerate() {
                v[pc] = sub_mod(0, a[(r, free)], p);
            }
            basis.push(v);
        }
        basis
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Characteristic polynomial det(xI - self), coefficients low-to-high:
    /// similarity reduction to upper Hessenberg form, then the leading-minor
    /// recurrence. O(n^3).
    pub fn charpoly(&self) -> Vec<u64> {
        let n = self.rows;
        let p = self.p;
        debug_assert_eq!(n, self.cols);
        if n == 0 {
            return vec![1];
        }
        let mut h = self.clone();
        for j in 0..n.saturating_sub(2) {
            let Some(pr) = (j + 1..n).find(|&r| h[(r, j)] != 0) else {
                continue;
            };
            if pr != j + 1 {
                // swap rows and columns pr <-> j+1 (similarity)
                for c in 0..n {
                    let t = h[(j + 1, c)];
                    h[(j + 1, c)] = h[(pr, c)];
                    h[(pr, c)] = t;
                }
                for r in 0..n {
                    let t = h[(r, j + 1)];
                    h[(r, j + 1)] = h[(r, pr)];
                    h[(r, pr)] = t;
                }
            }
            let inv = inv_mod(h[(j + 1, j)], p);
            for i in j + 2..n {
                if h[(i, j)] != 0 {
                    let f = mul_mod(h[(i, j)], inv, p);
                    for c in 0..n {
                        let t = mul_mod(f, h[(j + 1, c)], p);
                        h[(i, c)] = sub_mod(h[(i, c)], t, p);
                    }
                    for r in 0..n {
                        let t = mul_mod(f, h[(r, i)], p);
                        h[(r, j + 1)] = add_mod(h[(r, j + 1)], t, p);
                    }
                }
            }
        }
        // p_i(x) = (x - h_{ii}) p_{i-1}(x)
        //          - sum_{m=1..i-1} h_{i-1-m, i-1} (prod subdiagonals) p_{i-1-m}(x)
        // with 0-based entries of the Hessenberg matrix.
        let mut polys: Vec<Vec<u64>> = vec![vec![1]];
        for i in 1..=n {
            let mut poly = vec![0u64; i + 1];
            // (x - h[i-1][i-1]) * p_{i-1}
            let prev = &polys[i - 1];
            for (d, &c) in prev.iter().enumerate() {
                poly[d + 1] = add_mod(poly[d + 1], c, p);
                let t = mul_mod(h[(i - 1, i - 1)], c, p);
                poly[d] = sub_mod(poly[d], t, p);
            }
            let mut subdiag = 1u64;
            for m in 1..i {
                subdiag = mul_mod(subdiag, h[(i - m, i - m - 1)], p);
                if subdiag == 0 {
                    break;
                }
                let coeff = mul_mod(h[(i - 1 - m, i - 1)], subdiag, p);
                if coeff == 0 {
                    continue;
                }
                for (d, &c) in polys[i - 1 - m].iter().enumerate() {
                    let t = mul_mod(coeff, c, p);
                    poly[d] = sub_mod(poly[d], t, p);
                }
            }
            polys.push(poly);
        }
        polys.pop().unwrap()
    }

    /// Charpoly by evaluation-interpolation; O(n^4), retained as an
    /// independent route for tests.
    pub fn charpoly_interpolate(&self) -> Vec<u64> {
        let n = self.rows;
        let p = self.p;
        debug_assert_eq!(n, self.cols);
        let points: Vec<u64> = (0..=n as u64).collect();
        let values: Vec<u64> = points
            .iter()
            .map(|&x| {
                let mut m = self.clone();
                for i in 0..n {
                    m[(i, i)] = sub_mod(x, m[(i, i)], p);
                    // det(xI - A): negate off-diagonals
                }
                for r in 0..n {
                    for c in 0..n {
                        if r != c {
                            m[(r, c)] = sub_mod(0, m[(r, c)], p);
                        }
                    }
                }
                m.determinant()
            })
            .collect();
        lagrange_interpolate(&points, &values, p)
    }

    fn determinant(mut self) -> u64 {
        let p = self.p;
        let n = self.rows;
        let mut det = 1u64;
        for col in 0..n {
            let Some(pr) = (col..n).find(|&r| self[(r, col)] != 0) else {
                return 0;
            };
            if pr != col {
                self.swap_rows(col, pr);
                det = sub_mod(0, det, p);
            }
            let pivot = self[(col, col)];
            det = mul_mod(det, pivot, p);
            let inv = inv_mod(pivot, p);
            for r in col + 1..n {
                if self[(r, col)] != 0 {
                    let f = mul_mod(self[(r, col)], inv, p);
                    for c in col..n {
                        let t = mul_mod(f, self[(col, c)], p);
                        self[(r, c)] = sub_mod(self[(r, c)], t, p);
                    }
                }
            }
        }
        det
    }
}

impl std::ops::Index<(usize, usize)> for MatP {
    type Output = u64;
    fn index(&self, (r, c): (usize, usize)) -> &u64 {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for MatP {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut u64 {
        &mut self.data[r * self.cols + c]
    }
}

fn lagrange_interpolate(xs: &[u64], ys: &[u64], p: u64) -> Vec<u64> {
    let n = xs.len();
    let mut coeffs = vec![0u64; n];
    // full = prod (x - x_i)
    let mut full = vec![0u64; n + 1];
    full[0] = 1;
    let mut deg = 0;
    for &x in xs {
        // multiply by (X - x)
        for i in (0..=deg).rev() {
            let c = full[i];
            full[i + 1] = add_mod(full[i + 1], c, p);
            full[i] = mul_mod(c, sub_mod(0, x, p), p);
        }
        deg += 1;
    }
    for i in 0..n {
        // basis_i = full / (X - x_i), synthetic division
        let mut q = vec![0u64; n];
        let mut carry = 0u64;
        for j in (0..=n).rev() {
            let cur = add_mod(full[j], mul_mod(carry, xs[i], p), p);
            if j > 0 {
                q[j - 1] = cur;
                carry = cur;
            }
        }
        // scale by y_i / basis_i(x_i)
        let mut denom = 0u64;
        let mut xp = 1u64;
        for &qc in q.iter().take(n) {
            denom = add_mod(denom, mul_mod(qc, xp, p), p);
            xp = mul_mod(xp, xs[i], p);
        }
        let scale = mul_mod(ys[i], inv_mod(denom, p), p);
        for (c, &qc) in coeffs.iter_mut().zip(q.iter()) {
            *c = add_mod(*c, mul_mod(scale, qc, p), p);
        }
    }
    coeffs
}

// ---------------------------------------------------------------------------
// Polynomials over F_p (dense, low-to-high) and root extraction.
// ---------------------------------------------------------------------------

fn poly_trim(a: &mut Vec<u64>) {
    while a.len() > 1 && *a.last().unwrap() == 0 {
        a.pop();
    }
    if a.is_empty() {
        a.push(0);
    }
}

fn poly_mul_mod(a: &[u64], b: &[u64], modulus: &[u64], p: u64) -> Vec<u64> {
    let mut prod = vec![0u64; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            prod[i + j] = add_mod(prod[i + j], mul_mod(ai, bj, p), p);
        }
    }
    poly_rem(&mut prod, modulus, p);
    prod
}

/// In-place remainder of `a` modulo monic `m`.
fn poly_rem(a: &mut Vec<u64>, m: &[u64], p: u64) {
    let dm = m.len() - 1;
    while a.len() > dm {
        let lead = *a.last().unwrap();
        let da = a.len() - 1;
        if lead != 0 {
            for i in 0..dm {
                let t = mul_mod(lead, m[i], p);
                let idx = da - dm + i;
                a[idx] = sub_mod(a[idx], t, p);
            }
        }
        a.pop();
    }
    poly_trim(a);
}

fn poly_gcd(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> Vec<u64> {
    poly_trim(&mut a);
    poly_trim(&mut b);
    while !(b.len() == 1 && b[0] == 0) {
        let mut r = a.clone();
        // make b monic for division
        let lead = *b.last().unwrap();
        let inv = inv_mod(lead, p);
        let bm: Vec<u64> = b.iter().map(|&c| mul_mod(c, inv, p)).collect();
        poly_rem(&mut r, &bm, p);
        a = b;
        b = r;
    }
    let lead = *a.last().unwrap();
    if lead != 0 && lead != 1 {
        let inv = inv_mod(lead, p);
        for c in a.iter_mut() {
            *c = mul_mod(*c, inv, p);
        }
    }
    a
}

fn poly_pow_mod(base: &[u64], mut exp: u64, modulus: &[u64], p: u64) -> Vec<u64> {
    let mut acc = vec![1u64];
    let mut b = base.to_vec();
    poly_rem(&mut b, modulus, p);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = poly_mul_mod(&acc, &b, modulus, p);
        }
        b = poly_mul_mod(&b, &b, modulus, p);
        exp >>= 1;
    }
    acc
}

/// All roots in F_p of a polynomial (low-to-high coefficients), sorted
/// ascending. Uses x^p - x splitting plus deterministic-shift equal-degree
/// splitting, so the output is reproducible.
pub fn poly_roots(poly: &[u64], p: u64) -> Vec<u64> {
    let mut f = poly.to_vec();
    poly_trim(&mut f);
    if f.len() <= 1 {
        return Vec::new();
    }
    let lead = *f.last().unwrap();
    if lead != 1 {
        let inv = inv_mod(lead, p);
        for c in f.iter_mut() {
            *c = mul_mod(*c, inv, p);
        }
    }
    // Product of distinct linear factors: gcd(f, x^p - x).
    let xp = poly_pow_mod(&[0, 1], p, &f, p);
    let mut xp_minus_x = xp;
    if xp_minus_x.len() < 2 {
        xp_minus_x.resize(2, 0);
    }
    xp_minus_x[1] = sub_mod(xp_minus_x[1], 1, p);
    poly_trim(&mut xp_minus_x);
    let lin = poly_gcd(f, xp_minus_x, p);
    let mut roots = Vec::new();
    split_linear(&lin, p, &mut roots);
    roots.sort_unstable();
    roots
}

fn split_linear(f: &[u64], p: u64, out: &mut Vec<u64>) {
    if f.len() <= 1 {
        return;
    }
    if f.len() == 2 {
        // x + c => root -c (f monic)
        out.push(sub_mod(0, f[0], p));
        return;
    }
    // Deterministic shifts delta = 0, 1, 2, ... always split a product of
    // >= 2 distinct linear factors for some small delta.
    for delta in 0..p {
        let shifted = [delta, 1u64];
        let w = poly_pow_mod(&shifted, (p - 1) / 2, f, p);
        let mut w1 = w.clone();
        if w1.is_empty() {
            w1 = vec![0];
        }
        w1[0] = sub_mod(w1[0], 1, p);
        let g = poly_gcd(f.to_vec(), w1, p);
        if g.len() > 1 && g.len() < f.len() {
            let h = poly_div_exact(f, &g, p);
            split_linear(&g, p, out);
            split_linear(&h, p, out);
            return;
        }
        // Also check the root of (x + delta) itself: x = -delta.
        let val = poly_eval(f, sub_mod(0, delta, p), p);
        if val == 0 {
            let g = vec![delta, 1u64];
            let h = poly_div_exact(f, &g, p);
            out.push(sub_mod(0, delta, p));
            split_linear(&h, p, out);
            return;
        }
    }
    unreachable!("split_linear exhausted field without splitting");
}

fn poly_div_exact(f: &[u64], g: &[u64], p: u64) -> Vec<u64> {
    // f = q*g with g monic; synthetic long division.
    let mut rem = f.to_vec();
    let dg = g.len() - 1;
    let mut q = vec![0u64; f.len() - dg];
    while rem.len() > dg {
        let lead = *rem.last().unwrap();
        let shift = rem.len() - 1 - dg;
        q[shift] = lead;
        if lead != 0 {
            for i in 0..=dg {
                let t = mul_mod(lead, g[i], p);
                rem[shift + i] = sub_mod(rem[shift + i], t, p);
            }
        }
        rem.pop();
    }
    q
}

pub fn poly_eval(f: &[u64], x: u64, p: u64) -> u64 {
    let mut acc = 0u64;
    for &c in f.iter().rev() {
        acc = add_mod(mul_mod(acc, x, p), c, p);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality_and_search() {
        assert!(is_prime(2));
        assert!(is_prime(2297));
        assert!(!is_prime(2296));
        let l = find_prime_one_mod(56, 2240, 1 << 40, 0).unwrap();
        assert_eq!(l % 56, 1);
        assert!(is_prime(l) && l > 2240);
        let l2 = find_prime_one_mod(56, 2240, 1 << 40, 1).unwrap();
        assert!(l2 > l && l2 % 56 == 1 && is_prime(l2));
    }

    #[test]
    fn sqrt_mod_works() {
        let p = 1009;
        for a in 1..50u64 {
            let sq = mul_mod(a, a, p);
            let r = sqrt_mod(sq, p).unwrap();
            assert!(r == a % p || r == p - a % p);
        }
        assert!(sqrt_mod(5, 1009).is_none() || mul_mod(sqrt_mod(5, 1009).unwrap(), sqrt_mod(5, 1009).unwrap(), 1009) == 5);
    }

    #[test]
    fn charpoly_and_roots() {
        let p = 101;
        // companion-ish matrix with eigenvalues 2, 3, 7
        let mut m = MatP::zero(p, 3, 3);
        m[(0, 0)] = 2;
        m[(1, 1)] = 3;
        m[(2, 2)] = 7;
        m[(0, 1)] = 5; // upper triangular keeps eigenvalues
        let cp = m.charpoly();
        let roots = poly_roots(&cp, p);
        assert_eq!(roots, vec![2, 3, 7]);
    }

    #[test]
    fn hessenberg_matches_interpolation() {
        // pseudo-random dense matrices: the two charpoly routes agree
        let p = 10007;
        let mut state = 1u64;
        let mut next = || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 33) % p
        };
        for n in [1usize, 2, 3, 5, 8, 13] {
            let mut m = MatP::zero(p, n, n);
            for r in 0..n {
                for c in 0..n {
                    m[(r, c)] = next();
                }
            }
            assert_eq!(m.charpoly(), m.charpoly_interpolate(), "n = {n}");
        }
        // and on a matrix with a zero subdiagonal structure
        let mut m = MatP::zero(p, 4, 4);
        m[(0, 3)] = 3;
        m[(2, 1)] = 5;
        assert_eq!(m.charpoly(), m.charpoly_interpolate());
    }

    #[test]
    fn kernel_and_solve() {
        let p = 13;
        let mut m = MatP::zero(p, 2, 3);
        m[(0, 0)] = 1;
        m[(0, 1)] = 2;
        m[(0, 2)] = 3;
        m[(1, 0)] = 2;
        m[(1, 1)] = 4;
        m[(1, 2)] = 6;
        let ker = m.kernel();
        assert_eq!(ker.len(), 2);
        for v in &ker {
            assert!(m.mat_vec(v).iter().all(|&x| x == 0));
        }
        let sq = MatP::identity(p, 3);
        assert_eq!(sq.solve(&[5, 6, 7]).unwrap(), vec![5, 6, 7]);
    }

    #[test]
    fn primitive_root_order() {
        for p in [7u64, 13, 1009, 2297] {
            let g = primitive_root(p);
            for (q, _) in factor(p - 1) {
                assert_ne!(pow_mod(g, (p - 1) / q, p), 1);
            }
        }
    }
}
