//! Exact arithmetic in Z[zeta_n], with values kept in canonical form: the
//! power basis zeta^0 .. zeta^(phi(n)-1) after reduction modulo the n-th
//! cyclotomic polynomial. Equality of values is equality of coefficient
//! vectors.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::HashMap;
use std::fmt;
use std::sync::Mutex;
use std::sync::OnceLock;

/// Euler phi.
pub fn euler_phi(n: u64) -> u64 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// Coefficients of the n-th cyclotomic polynomial, low-to-high, computed by
/// dividing x^n - 1 by the cyclotomic polynomials of the proper divisors.
pub fn cyclotomic_polynomial(n: u64) -> Vec<BigInt> {
    fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
        let mut rem = num.to_vec();
        let dd = den.len() - 1;
        let mut q = vec![BigInt::zero(); num.len() - dd];
        for shift in (0..q.len()).rev() {
            let lead = rem[shift + dd].clone();
            if !lead.is_zero() {
                q[shift] = lead.clone();
                for (i, d) in den.iter().enumerate() {
                    rem[shift + i] -= &lead * d;
                }
            }
        }
        debug_assert!(rem.iter().all(|c| c.is_zero()));
        q
    }
    let mut phi: Vec<BigInt> = vec![BigInt::from(-1)];
    phi.resize(n as usize, BigInt::zero());
    phi.push(BigInt::one()); // x^n - 1
    let mut result = phi;
    for d in 1..n {
        if n % d == 0 {
            let cd = cyclotomic_polynomial_cached(d);
            result = poly_div_exact(&result, &cd);
        }
    }
    result
}

fn cyclotomic_polynomial_cached(n: u64) -> Vec<BigInt> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Vec<BigInt>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(c) = cache.lock().unwrap().get(&n) {
        return c.clone();
    }
    let c = cyclotomic_polynomial(n);
    cache.lock().unwrap().insert(n, c.clone());
    c
}

/// An element of Z[zeta_n] in canonical power-basis form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cyclotomic {
    n: u64,
    /// Length phi(n).
    coeffs: Vec<BigInt>,
}

impl Cyclotomic {
    pub fn zero(n: u64) -> Self {
        Cyclotomic {
            n,
            coeffs: vec![BigInt::zero(); euler_phi(n) as usize],
        }
    }

    pub fn from_integer(n: u64, value: impl Into<BigInt>) -> Self {
        let mut c = Self::zero(n);
        c.coeffs[0] = value.into();
        c
    }

    pub fn one(n: u64) -> Self {
        Self::from_integer(n, 1)
    }

    /// zeta_n^k.
    pub fn root_of_unity(n: u64, k: i64) -> Self {
        let mut exps = HashMap::new();
        exps.insert(k.rem_euclid(n as i64) as u64, BigInt::one());
        Self::from_exponents(n, &exps)
    }

    /// Sum of m_e * zeta_n^e over the map entries, reduced to canonical form.
    pub fn from_exponents(n: u64, exps: &HashMap<u64, BigInt>) -> Self {
        let mut poly = vec![BigInt::zero(); n as usize];
        for (&e, m) in exps {
            poly[(e % n) as usize] += m;
        }
        Self::reduce_poly(n, poly)
    }

    fn reduce_poly(n: u64, mut poly: Vec<BigInt>) -> Self {
        let phi = cyclotomic_polynomial_cached(n);
        let deg = phi.len() - 1;
        while poly.len() > deg {
            let lead = poly.pop().unwrap();
            if !lead.is_zero() {
                let shift = poly.len() - deg;
                for (i, c) in phi.iter().take(deg).enumerate() {
                    poly[shift + i] -= &lead * c;
                }
            }
        }
        poly.resize(deg, BigInt::zero());
        Cyclotomic { n, coeffs: poly }
    }

    pub fn order(&self) -> u64 {
        self.n
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Rational integer value, if this element lies in Z.
    pub fn to_integer(&self) -> Option<BigInt> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    pub fn add(&self, other: &Cyclotomic) -> Cyclotomic {
        debug_assert_eq!(self.n, other.n);
        Cyclotomic {
            n: self.n,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Cyclotomic) -> Cyclotomic {
        debug_assert_eq!(self.n, other.n);
        Cyclotomic {
            n: self.n,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn neg(&self) -> Cyclotomic {
        Cyclotomic {
            n: self.n,
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }

    pub fn mul(&self, other: &Cyclotomic) -> Cyclotomic {
        debug_assert_eq!(self.n, other.n);
        let mut prod = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len()];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        Self::reduce_poly(self.n, prod)
    }

    pub fn scale(&self, k: &BigInt) -> Cyclotomic {
        Cyclotomic {
            n: self.n,
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    /// Galois twist zeta -> zeta^t for t coprime to n; a ring automorphism.
    pub fn galois_twist(&self, t: u64) -> Cyclotomic {
        let t = t % self.n;
        debug_assert_eq!(num_integer::gcd(t, self.n), 1);
        let mut poly = vec![BigInt::zero(); self.n as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                poly[(i as u64 * t % self.n) as usize] += c;
            }
        }
        Self::reduce_poly(self.n, poly)
    }

    /// Complex conjugate: the twist by -1.
    pub fn conjugate(&self) -> Cyclotomic {
        if self.n <= 2 {
            return self.clone();
        }
        self.galois_twist(self.n - 1)
    }

    /// Exact division by a rational integer; None if any coefficient is not
    /// divisible.
    pub fn div_exact(&self, k: &BigInt) -> Option<Cyclotomic> {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            let (q, r) = num_integer::Integer::div_rem(c, k);
            if !r.is_zero() {
                return None;
            }
            coeffs.push(q);
        }
        Some(Cyclotomic { n: self.n, coeffs })
    }

    /// Evaluate at zeta -> z (a primitive n-th root of unity mod p).
    pub fn eval_mod(&self, z: u64, p: u64) -> u64 {
        use crate::modp::{add_mod, mul_mod};
        use num_traits::ToPrimitive;
        let big_p = BigInt::from(p);
        let mut acc = 0u64;
        for c in self.coeffs.iter().rev() {
            let cu = c.mod_floor(&big_p).to_u64().unwrap_or(0);
            acc = add_mod(mul_mod(acc, z, p), cu, p);
        }
        acc
    }

    /// Map into Z[zeta_m] for n | m.
    pub fn embed(&self, m: u64) -> Cyclotomic {
        debug_assert_eq!(m % self.n, 0);
        let scale = m / self.n;
        let mut poly = vec![BigInt::zero(); m as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                poly[i * scale as usize] += c;
            }
        }
        Self::reduce_poly(m, poly)
    }

    /// Maximum absolute coefficient, for bound bookkeeping.
    pub fn max_abs_coeff(&self) -> BigInt {
        self.coeffs
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(BigInt::zero)
    }
}

trait ModFloor {
    fn mod_floor(&self, m: &BigInt) -> BigInt;
}

impl ModFloor for BigInt {
    fn mod_floor(&self, m: &BigInt) -> BigInt {
        num_integer::Integer::mod_floor(self, m)
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(z) = self.to_integer() {
            return write!(f, "{z}");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if i == 0 {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "z{}^{}", self.n, i)?;
            } else {
                write!(f, "{c}*z{}^{}", self.n, i)?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Lexicographic-by-coefficients comparison used for the character-table row
/// order (descending puts the trivial character first).
impl PartialOrd for Cyclotomic {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Cyclotomic {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.coeffs.cmp(&other.coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn phi_values() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(12), 4);
        assert_eq!(euler_phi(56), 24);
        assert_eq!(euler_phi(105), 48);
    }

    #[test]
    fn cyclotomic_polys() {
        let to_i64 = |v: Vec<BigInt>| -> Vec<i64> {
            v.into_iter().map(|c| i64::try_from(c).unwrap()).collect()
        };
        assert_eq!(to_i64(cyclotomic_polynomial(1)), vec![-1, 1]);
        assert_eq!(to_i64(cyclotomic_polynomial(4)), vec![1, 0, 1]);
        assert_eq!(to_i64(cyclotomic_polynomial(6)), vec![1, -1, 1]);
        assert_eq!(to_i64(cyclotomic_polynomial(12)), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn roots_of_unity_sum_to_zero() {
        for n in [3u64, 4, 5, 6, 7, 12] {
            let mut acc = Cyclotomic::zero(n);
            for k in 0..n {
                acc = acc.add(&Cyclotomic::root_of_unity(n, k as i64));
            }
            assert!(acc.is_zero(), "sum of all {n}-th roots not zero");
        }
    }

    #[test]
    fn conjugate_is_involution() {
        let x = Cyclotomic::root_of_unity(7, 3).add(&Cyclotomic::from_integer(7, 2));
        assert_eq!(x.conjugate().conjugate(), x);
    }

    #[test]
    fn norm_of_gauss_unit() {
        // (1 + i)(1 - i) = 2 in Z[i]
        let one_plus_i = Cyclotomic::one(4).add(&Cyclotomic::root_of_unity(4, 1));
        let prod = one_plus_i.mul(&one_plus_i.conjugate());
        assert_eq!(prod.to_integer().unwrap(), BigInt::from(2));
    }

    #[test]
    fn embed_consistent() {
        let z3 = Cyclotomic::root_of_unity(3, 1);
        let in12 = z3.embed(12);
        assert_eq!(in12, Cyclotomic::root_of_unity(12, 4));
    }

    proptest! {
        #[test]
        fn twist_is_ring_hom(a in 0i64..12, b in 0i64..12, c in -5i64..5) {
            let n = 12u64;
            let x = Cyclotomic::root_of_unity(n, a).scale(&BigInt::from(c));
            let y = Cyclotomic::root_of_unity(n, b).add(&Cyclotomic::one(n));
            for t in [5u64, 7, 11] {
                let lhs = x.mul(&y).galois_twist(t);
                let rhs = x.galois_twist(t).mul(&y.galois_twist(t));
                prop_assert_eq!(lhs, rhs);
            }
        }

        #[test]
        fn twist_composes(a in 0i64..20) {
            let n = 20u64;
            let x = Cyclotomic::root_of_unity(n, a).add(&Cyclotomic::from_integer(n, 3));
            // 3 * 7 = 21 = 1 mod 20
            let twisted = x.galois_twist(3).galois_twist(7);
            prop_assert_eq!(twisted, x);
        }
    }
}
