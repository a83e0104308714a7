//! Exact complex irreducible character tables by the Dixon-Schneider method:
//! simultaneous diagonalization of the class-multiplication matrices over a
//! prime field F_l with l = 1 (mod exp(G)), followed by exact lifting of the
//! values into Z[zeta_n] by discrete Fourier inversion along power maps.
//!
//! Orthogonality is then certified exactly: the relations live in Z[zeta_n]
//! with explicitly bounded coefficients, and checking them under evaluation
//! at a primitive root modulo one sufficiently large verification prime
//! proves them over Z (see `verify_exact_relations` for the argument).

use crate::cyclo::Cyclotomic;
use crate::fields::AbelianFieldDescriptor;
use crate::group::{ConjugacyData, PermGroup};
use crate::modp::{
    find_prime_one_mod, inv_mod, mul_mod, poly_roots, pow_mod, primitive_root, sqrt_mod, sub_mod,
    MatP,
};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use std::collections::HashMap;

/// One irreducible character: exact values per conjugacy class and the
/// Frobenius-Schur indicator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Character {
    pub degree: u64,
    pub values: Vec<Cyclotomic>,
    pub fs_indicator: i8,
}

/// The full character table of a finite group.
#[derive(Debug, Clone)]
pub struct CharacterTable {
    pub group_order: usize,
    pub exponent: u64,
    pub prime: u64,
    pub conjugacy: ConjugacyData,
    pub characters: Vec<Character>,
}

/// A Galois orbit of characters under the (Z/n)^x twisting action.
#[derive(Debug, Clone)]
pub struct GaloisOrbit {
    /// Sorted row indices of the orbit members.
    pub members: Vec<usize>,
    /// Minimal row index, the orbit representative.
    pub representative: usize,
    /// Stabilizer of the representative in (Z/n)^x, sorted element list.
    pub stabilizer: Vec<u64>,
    /// The character field Q(chi), an abelian field descriptor.
    pub field: AbelianFieldDescriptor,
}

impl CharacterTable {
    /// Compute the table with the least suitable Dixon prime.
    pub fn compute(group: &PermGroup) -> Result<CharacterTable> {
        Self::compute_with_prime_skip(group, 0)
    }

    /// Compute the table, skipping the first `skip` suitable primes. The
    /// lifted output must not depend on the prime; tests rerun with
    /// `skip = 1` and compare.
    pub fn compute_with_prime_skip(group: &PermGroup, skip: usize) -> Result<CharacterTable> {
        let conjugacy = group.conjugacy_classes();
        let k = conjugacy.class_count();
        let order = group.order() as u64;
        let n = conjugacy
            .rep_orders
            .iter()
            .fold(1u64, |acc, &o| num_integer::lcm(acc, o));
        let sqrt_order = (order as f64).sqrt() as u64;
        let start = 2 * sqrt_order * order;
        let bound = (start.max(1 << 20)).saturating_mul(1 << 14);
        let prime = find_prime_one_mod(n, start, bound, skip).ok_or(Error::NoSuitablePrime {
            modulus: n,
            bound,
        })?;

        // Power-map tables per class: class of rep^t for t in 0..order(rep).
        let pow_classes: Vec<Vec<usize>> = (0..k)
            .map(|c| {
                let o = conjugacy.rep_orders[c] as usize;
                let rep = conjugacy.class_reps[c];
                let mut cls = Vec::with_capacity(o);
                let mut x = 0usize; // identity
                for _ in 0..o {
                    cls.push(conjugacy.class_of[x]);
                    x = group.mul(x, rep);
                }
                cls
            })
            .collect();

        let eigenvectors = split_eigenspaces(group, &conjugacy, prime)?;

        // Normalize so the identity-class coordinate is 1; the true vector
        // of central character values has a 1 there.
        let mut omegas = Vec::with_capacity(k);
        for mut v in eigenvectors {
            if v[0] == 0 {
                return Err(Error::Inconsistency(
                    "eigenvector vanishes on the identity class".into(),
                ));
            }
            let inv = inv_mod(v[0], prime);
            for x in v.iter_mut() {
                *x = mul_mod(*x, inv, prime);
            }
            omegas.push(v);
        }

        // Degrees from the orthogonality relation:
        // d^2 * sum_c omega(c) * omega(inv c) / |C_c| = #G.
        let mut raw_chars = Vec::with_capacity(k);
        for omega in &omegas {
            let mut s = 0u64;
            for c in 0..k {
                let term = mul_mod(
                    mul_mod(omega[c], omega[conjugacy.inverse_class[c]], prime),
                    inv_mod(conjugacy.class_sizes[c] as u64 % prime, prime),
                    prime,
                );
                s = (s + term) % prime;
            }
            let d_sq = mul_mod(order % prime, inv_mod(s, prime), prime);
            let root = sqrt_mod(d_sq, prime).ok_or_else(|| {
                Error::Inconsistency("degree squared is not a square mod l".into())
            })?;
            let degree = if root != 0 && root <= sqrt_order {
                root
            } else if prime - root <= sqrt_order {
                prime - root
            } else {
                return Err(Error::Inconsistency(format!(
                    "no degree candidate <= sqrt(#G) for roots {root}/{}",
                    prime - root
                )));
            };
            if degree == 0 || order % degree != 0 {
                return Err(Error::Inconsistency(format!(
                    "recovered degree {degree} does not divide the group order"
                )));
            }
            // chi(c) = d * omega(c) / |C_c| mod l
            let values_mod: Vec<u64> = (0..k)
                .map(|c| {
                    mul_mod(
                        mul_mod(degree, omega[c], prime),
                        inv_mod(conjugacy.class_sizes[c] as u64 % prime, prime),
                        prime,
                    )
                })
                .collect();
            raw_chars.push((degree, values_mod));
        }

        // Lift values: for g of order o, chi(g) = sum_j m_j zeta_o^j with
        // m_j the eigenvalue multiplicities, recovered by Fourier inversion
        // m_j = o^{-1} sum_t chi(g^t) z_o^{-jt} mod l; the m_j are true
        // integers in [0, degree], unique below l.
        let g0 = primitive_root(prime);
        let z = pow_mod(g0, (prime - 1) / n, prime);
        let mut characters = Vec::with_capacity(k);
        for (degree, values_mod) in &raw_chars {
            let mut values = Vec::with_capacity(k);
            for c in 0..k {
                let o = conjugacy.rep_orders[c];
                let z_o = pow_mod(z, n / o, prime);
                let mut exps: HashMap<u64, BigInt> = HashMap::new();
                if *degree == 1 {
                    // A linear character's value is a single root of unity:
                    // the lift is one discrete logarithm against z_o.
                    let target = values_mod[c];
                    let mut j = 0u64;
                    let mut zj = 1u64;
                    while zj != target {
                        zj = mul_mod(zj, z_o, prime);
                        j += 1;
                        if j >= o {
                            return Err(Error::Inconsistency(
                                "linear value is not a root of unity mod l".into(),
                            ));
                        }
                    }
                    exps.insert(j * (n / o), BigInt::one());
                } else {
                    // chi(g) = sum_j m_j zeta_o^j with m_j the eigenvalue
                    // multiplicities, recovered by Fourier inversion along
                    // the power map; each m_j is a true integer in
                    // [0, degree], unique below l.
                    let z_o_inv = inv_mod(z_o, prime);
                    let o_inv = inv_mod(o % prime, prime);
                    let mut total = 0u64;
                    for j in 0..o {
                        let mut acc = 0u64;
                        let w = pow_mod(z_o_inv, j, prime);
                        let mut wt = 1u64;
                        for t in 0..o as usize {
                            acc = (acc + mul_mod(values_mod[pow_classes[c][t]], wt, prime))
                                % prime;
                            wt = mul_mod(wt, w, prime);
                        }
                        let mj = mul_mod(acc, o_inv, prime);
                        if mj > *degree {
                            return Err(Error::Inconsistency(format!(
                                "eigenvalue multiplicity {mj} exceeds degree {degree}"
                            )));
                        }
                        if mj != 0 {
                            total += mj;
                            *exps.entry(j * (n / o)).or_insert_with(BigInt::zero) +=
                                BigInt::from(mj);
                        }
                    }
                    if total != *degree {
                        return Err(Error::Inconsistency(format!(
                            "eigenvalue multiplicities sum to {total}, expected degree {degree}"
                        )));
                    }
                }
                values.push(Cyclotomic::from_exponents(n, &exps));
            }
            characters.push(Character {
                degree: *degree,
                values,
                fs_indicator: 0,
            });
        }

        // Frobenius-Schur indicators: (1/#G) sum_c |C_c| chi(rep_c^2).
        let square_class: Vec<usize> = (0..k).map(|c| conjugacy.power_map(group, c, 2)).collect();
        for ch in characters.iter_mut() {
            let mut acc = Cyclotomic::zero(n);
            for c in 0..k {
                let term = ch.values[square_class[c]]
                    .scale(&BigInt::from(conjugacy.class_sizes[c] as u64));
                acc = acc.add(&term);
            }
            let quotient = acc.div_exact(&BigInt::from(order)).ok_or_else(|| {
                Error::Inconsistency("Frobenius-Schur sum not divisible by #G".into())
            })?;
            let v = quotient
                .to_integer()
                .ok_or_else(|| Error::Inconsistency("Frobenius-Schur sum not rational".into()))?;
            let v = v.to_i64().ok_or_else(|| {
                Error::Inconsistency("Frobenius-Schur indicator out of range".into())
            })?;
            if !(-1..=1).contains(&v) {
                return Err(Error::Inconsistency(format!(
                    "Frobenius-Schur indicator {v} outside -1..=1"
                )));
            }
            ch.fs_indicator = v as i8;
        }

        // Deterministic row order: by degree, then reverse-lexicographic on
        // the canonical value vectors (this puts the trivial character
        // first). Part of the output contract; independent of the prime.
        characters.sort_by(|a, b| {
            a.degree
                .cmp(&b.degree)
                .then_with(|| b.values.cmp(&a.values))
        });

        let table = CharacterTable {
            group_order: group.order(),
            exponent: n,
            prime,
            conjugacy,
            characters,
        };
        table.verify_exact_relations()?;
        for ch in &table.characters {
            let at_identity = ch.values[0].to_integer();
            if at_identity != Some(BigInt::from(ch.degree)) {
                return Err(Error::Inconsistency(
                    "value at the identity class differs from the degree".into(),
                ));
            }
        }
        Ok(table)
    }

    pub fn class_count(&self) -> usize {
        self.characters.len()
    }

    pub fn degrees(&self) -> Vec<u64> {
        self.characters.iter().map(|c| c.degree).collect()
    }

    /// Row permutation induced by the Galois twist zeta -> zeta^t.
    pub fn twist_permutation(&self, t: u64) -> Result<Vec<usize>> {
        if self.exponent > 1 && num_integer::gcd(t % self.exponent, self.exponent) != 1 {
            return Err(Error::Inconsistency(format!(
                "twist parameter {t} not coprime to the exponent {}",
                self.exponent
            )));
        }
        let index: HashMap<&[Cyclotomic], usize> = self
            .characters
            .iter()
            .enumerate()
            .map(|(i, c)| (c.values.as_slice(), i))
            .collect();
        let mut out = Vec::with_capacity(self.characters.len());
        for ch in &self.characters {
            let twisted: Vec<Cyclotomic> =
                ch.values.iter().map(|v| v.galois_twist(t.max(1))).collect();
            let j = index.get(twisted.as_slice()).ok_or_else(|| {
                Error::Inconsistency("Galois twist left the character table".into())
            })?;
            out.push(*j);
        }
        Ok(out)
    }

    /// Row permutation of complex conjugation.
    pub fn conjugation_permutation(&self) -> Vec<usize> {
        if self.exponent <= 2 {
            return (0..self.characters.len()).collect();
        }
        self.twist_permutation(self.exponent - 1)
            .expect("-1 is a unit")
    }

    /// Galois orbits of the characters of degree > 1 (all characters when
    /// `include_linear` is set), with stabilizers and character fields.
    /// Orbits are traced by twisting single rows, so the cost scales with
    /// the selected characters only.
    pub fn galois_orbits(&self, include_linear: bool) -> Result<Vec<GaloisOrbit>> {
        let n = self.exponent;
        let wanted: Vec<usize> = (0..self.characters.len())
            .filter(|&i| include_linear || self.characters[i].degree > 1)
            .collect();
        if wanted.is_empty() {
            return Ok(Vec::new());
        }
        let units: Vec<u64> = if n == 1 {
            vec![1]
        } else {
            (1..n).filter(|&t| num_integer::gcd(t, n) == 1).collect()
        };
        let index: HashMap<&[Cyclotomic], usize> = self
            .characters
            .iter()
            .enumerate()
            .map(|(i, c)| (c.values.as_slice(), i))
            .collect();
        let mut seen = vec![false; self.characters.len()];
        let mut orbits = Vec::new();
        for &start in &wanted {
            if seen[start] {
                continue;
            }
            let mut members = Vec::new();
            let mut stabilizer = Vec::new();
            for &t in &units {
                let twisted: Vec<Cyclotomic> = self.characters[start]
                    .values
                    .iter()
                    .map(|v| v.galois_twist(t))
                    .collect();
                let j = *index.get(twisted.as_slice()).ok_or_else(|| {
                    Error::Inconsistency("Galois twist left the character table".into())
                })?;
                members.push(j);
                if j == start {
                    stabilizer.push(t);
                }
            }
            members.sort_unstable();
            members.dedup();
            for &m in &members {
                seen[m] = true;
            }
            let representative = members[0];
            // stabilizers of orbit members are conjugate inside the abelian
            // group (Z/n)^x, hence equal; the one computed at `start` works
            // for the representative as well.
            stabilizer.sort_unstable();
            let field = AbelianFieldDescriptor::from_subgroup_elements(n, stabilizer.clone());
            debug_assert_eq!(field.degree() as usize, members.len());
            orbits.push(GaloisOrbit {
                members,
                representative,
                stabilizer,
                field,
            });
        }
        orbits.sort_by_key(|o| o.representative);
        Ok(orbits)
    }

    /// The character field Q(chi) of one row, as a canonical descriptor.
    pub fn character_field(&self, row: usize) -> Result<AbelianFieldDescriptor> {
        let n = self.exponent;
        if n == 1 {
            return Ok(AbelianFieldDescriptor::rationals());
        }
        let mut stab = Vec::new();
        for t in (1..n).filter(|&t| num_integer::gcd(t, n) == 1) {
            let fixed = self.characters[row]
                .values
                .iter()
                .all(|v| &v.galois_twist(t) == v);
            if fixed {
                stab.push(t);
            }
        }
        Ok(AbelianFieldDescriptor::from_subgroup_elements(n, stab))
    }

    /// Exact verification of the row and column orthogonality relations.
    ///
    /// Each relation is an identity in Z[zeta_n] whose canonical
    /// coefficients are bounded by B = #G^2 * r(n) + #G, where r(n) bounds
    /// the coefficients of the reductions of zeta^j modulo the cyclotomic
    /// polynomial. The full set of row relations is closed under the Galois
    /// action (twisting permutes rows), and each column relation is Galois
    /// invariant. Hence checking every relation under evaluation at one
    /// primitive n-th root z modulo a verification prime l_v > 2B checks
    /// each relation at all phi(n) conjugate points z^t; a nonzero canonical
    /// representative has degree < phi(n) and coefficients below l_v / 2, so
    /// it cannot vanish at phi(n) distinct points mod l_v. Equality mod l_v
    /// therefore proves the exact identities.
    pub fn verify_exact_relations(&self) -> Result<()> {
        let (lv, zv) = self.verification_prime()?;
        let vals = self.values_mod(zv, lv);
        let k = self.class_count();
        let order = self.group_order as u64 % lv;
        let inv_class = &self.conjugacy.inverse_class;
        for a in 0..k {
            for b in 0..k {
                let mut acc = 0u64;
                for c in 0..k {
                    let w = self.conjugacy.class_sizes[c] as u64 % lv;
                    let t = mul_mod(vals[a][c], vals[b][inv_class[c]], lv);
                    acc = (acc + mul_mod(w, t, lv)) % lv;
                }
                let expect = if a == b { order } else { 0 };
                if acc != expect {
                    return Err(Error::Inconsistency(format!(
                        "row orthogonality failed for rows {a}, {b}"
                    )));
                }
            }
        }
        for c in 0..k {
            for d in 0..k {
                let mut acc = 0u64;
                for ch in &vals {
                    acc = (acc + mul_mod(ch[c], ch[inv_class[d]], lv)) % lv;
                }
                let expect = if c == d {
                    mul_mod(
                        order,
                        inv_mod(self.conjugacy.class_sizes[c] as u64 % lv, lv),
                        lv,
                    )
                } else {
                    0
                };
                if acc != expect {
                    return Err(Error::Inconsistency(format!(
                        "column orthogonality failed for classes {c}, {d}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Check the Frobenius-Schur involution count sum_chi fs(chi) chi(g) =
    /// #{h : h^2 = g} on every element, exactly (same certification scheme
    /// as `verify_exact_relations`).
    pub fn verify_fs_square_counts(&self, group: &PermGroup) -> Result<()> {
        let (lv, zv) = self.verification_prime()?;
        let vals = self.values_mod(zv, lv);
        let mut sqrt_count = vec![0u64; group.order()];
        for h in 0..group.order() {
            sqrt_count[group.mul(h, h)] += 1;
        }
        for g in 0..group.order() {
            let c = self.conjugacy.class_of[g];
            let mut acc = 0u64;
            for (i, ch) in self.characters.iter().enumerate() {
                let term = match ch.fs_indicator {
                    1 => vals[i][c],
                    -1 => sub_mod(0, vals[i][c], lv),
                    _ => 0,
                };
                acc = (acc + term) % lv;
            }
            if acc != sqrt_count[g] % lv {
                return Err(Error::Inconsistency(format!(
                    "Frobenius-Schur square count failed on element {g}"
                )));
            }
        }
        Ok(())
    }

    /// A verification prime l_v = 1 (mod n) with l_v > 2B for the bound B
    /// described at `verify_exact_relations`, plus a primitive n-th root.
    fn verification_prime(&self) -> Result<(u64, u64)> {
        let n = self.exponent;
        let order = self.group_order as u64;
        let rho = reduction_coeff_bound(n);
        let b = BigInt::from(order) * BigInt::from(order) * rho + BigInt::from(order);
        let two_b = (BigInt::from(2) * b)
            .to_u64()
            .ok_or_else(|| Error::Inconsistency("verification bound overflow".into()))?;
        let lv = find_prime_one_mod(n, two_b + 1, two_b.saturating_mul(1 << 12), 0).ok_or(
            Error::NoSuitablePrime {
                modulus: n,
                bound: two_b,
            },
        )?;
        let zv = pow_mod(primitive_root(lv), (lv - 1) / n, lv);
        Ok((lv, zv))
    }

    fn values_mod(&self, z: u64, p: u64) -> Vec<Vec<u64>> {
        self.characters
            .iter()
            .map(|ch| ch.values.iter().map(|v| v.eval_mod(z, p)).collect())
            .collect()
    }
}

/// Max absolute canonical coefficient over the reductions of zeta^j,
/// j < n, modulo the n-th cyclotomic polynomial.
fn reduction_coeff_bound(n: u64) -> BigInt {
    let mut best = BigInt::from(1);
    for j in 0..n {
        let c = Cyclotomic::root_of_unity(n, j as i64);
        let m = c.max_abs_coeff();
        if m > best {
            best = m;
        }
    }
    best
}

/// Simultaneously diagonalize the class-multiplication matrices over F_l,
/// returning one basis vector per common eigenspace (all one-dimensional).
fn split_eigenspaces(
    group: &PermGroup,
    conjugacy: &ConjugacyData,
    prime: u64,
) -> Result<Vec<Vec<u64>>> {
    let k = conjugacy.class_count();
    if k == 1 {
        return Ok(vec![vec![1]]);
    }
    // Basis rows per current subspace.
    let mut spaces: Vec<Vec<Vec<u64>>> = vec![MatP::identity(prime, k)
        .data
        .chunks(k)
        .map(|r| r.to_vec())
        .collect()];
    for i in 1..k {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let m_i = class_matrix(group, conjugacy, i, prime);
        let mut next = Vec::with_capacity(spaces.len());
        for basis in spaces {
            if basis.len() == 1 {
                next.push(basis);
                continue;
            }
            let d = basis.len();
            // Restriction A with M b_r = sum_s A[r][s] b_s; the coordinate
            // action is x -> A^T x.
            let images: Vec<Vec<u64>> = basis.iter().map(|b| m_i.mat_vec(b)).collect();
            let coords = solve_in_span(prime, &basis, &images).ok_or_else(|| {
                Error::Inconsistency("class matrix does not preserve a split subspace".into())
            })?;
            let mut a_t = MatP::zero(prime, d, d);
            for (r, row) in coords.iter().enumerate() {
                for (s, &v) in row.iter().enumerate() {
                    a_t[(s, r)] = v;
                }
            }
            let cp = a_t.charpoly();
            let eigenvalues = poly_roots(&cp, prime);
            if eigenvalues.is_empty() {
                return Err(Error::Inconsistency(
                    "class matrix has no eigenvalues in F_l".into(),
                ));
            }
            for lambda in eigenvalues {
                let mut shifted = a_t.clone();
                for idx in 0..d {
                    shifted[(idx, idx)] = sub_mod(shifted[(idx, idx)], lambda, prime);
                }
                let kernel = shifted.kernel();
                if kernel.is_empty() {
                    return Err(Error::Inconsistency(
                        "charpoly root with empty eigenspace".into(),
                    ));
                }
                let sub_basis: Vec<Vec<u64>> = kernel
                    .iter()
                    .map(|x| {
                        let mut v = vec![0u64; k];
                        for (r, &xr) in x.iter().enumerate() {
                            if xr != 0 {
                                for (vc, &bc) in v.iter_mut().zip(&basis[r]) {
                                    *vc = (*vc + mul_mod(xr, bc, prime)) % prime;
                                }
                            }
                        }
                        v
                    })
                    .collect();
                next.push(sub_basis);
            }
        }
        spaces = next;
    }
    let mut out = Vec::with_capacity(k);
    for s in spaces {
        if s.len() != 1 {
            return Err(Error::Inconsistency(
                "class matrices failed to split the centre into lines".into(),
            ));
        }
        out.push(s.into_iter().next().unwrap());
    }
    if out.len() != k {
        return Err(Error::Inconsistency(format!(
            "found {} common eigenspaces, expected {k}",
            out.len()
        )));
    }
    Ok(out)
}

/// Class-multiplication matrix M_i over F_l: (M_i)[j][m] counts pairs with
/// x in C_i and x^{-1} rep(C_m) in C_j; the central-character vectors are
/// its eigenvectors.
fn class_matrix(group: &PermGroup, conjugacy: &ConjugacyData, i: usize, prime: u64) -> MatP {
    let k = conjugacy.class_count();
    let mut m = MatP::zero(prime, k, k);
    for cm in 0..k {
        let z = conjugacy.class_reps[cm];
        for &x in &conjugacy.class_members[i] {
            let y = group.mul(group.inv(x), z);
            let j = conjugacy.class_of[y];
            m[(j, cm)] = (m[(j, cm)] + 1) % prime;
        }
    }
    m
}

/// Express each target as a coordinate vector against the basis rows;
/// None if some target leaves the span.
fn solve_in_span(prime: u64, basis: &[Vec<u64>], targets: &[Vec<u64>]) -> Option<Vec<Vec<u64>>> {
    let d = basis.len();
    let k = basis[0].len();
    let t = targets.len();
    // Augmented elimination on the k x (d + t) matrix [basis^T | targets^T].
    let mut m = MatP::zero(prime, k, d + t);
    for (s, b) in basis.iter().enumerate() {
        for (row, &v) in b.iter().enumerate() {
            m[(row, s)] = v;
        }
    }
    for (j, tg) in targets.iter().enumerate() {
        for (row, &v) in tg.iter().enumerate() {
            m[(row, d + j)] = v;
        }
    }
    let mut pivot_rows: Vec<(usize, usize)> = Vec::new(); // (row, basis col)
    let mut row = 0usize;
    for col in 0..d {
        let pr = (row..k).find(|&r| m[(r, col)] != 0)?;
        if pr != row {
            for c in 0..d + t {
                let tmp = m[(row, c)];
                m[(row, c)] = m[(pr, c)];
                m[(pr, c)] = tmp;
            }
        }
        let inv = inv_mod(m[(row, col)], prime);
        for c in 0..d + t {
            m[(row, c)] = mul_mod(m[(row, c)], inv, prime);
        }
        for r in 0..k {
            if r != row && m[(r, col)] != 0 {
                let f = m[(r, col)];
                for c in 0..d + t {
                    let s = mul_mod(f, m[(row, c)], prime);
                    m[(r, c)] = sub_mod(m[(r, c)], s, prime);
                }
            }
        }
        pivot_rows.push((row, col));
        row += 1;
    }
    // Rows beyond the pivots must now be zero on the target columns.
    for r in row..k {
        for j in 0..t {
            if m[(r, d + j)] != 0 {
                return None;
            }
        }
    }
    let mut out = vec![vec![0u64; d]; t];
    for &(r, col) in &pivot_rows {
        for (j, target_coords) in out.iter_mut().enumerate() {
            target_coords[col] = m[(r, d + j)];
        }
    }
    Some(out)
}

/// Module-contract convenience wrapper.
pub fn character_table(group: &PermGroup) -> Result<CharacterTable> {
    CharacterTable::compute(group)
}

/// Visible-content equality (degrees, values, indicators); used for the
/// prime-independence contract.
pub fn tables_identical(a: &CharacterTable, b: &CharacterTable) -> bool {
    a.characters == b.characters && a.exponent == b.exponent
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{make_family, FamilySpec};

    fn int(c: &Cyclotomic) -> i64 {
        c.to_integer().unwrap().to_i64().unwrap()
    }

    #[test]
    fn s3_table() {
        let g = make_family(&FamilySpec::Symmetric(3)).unwrap();
        let t = CharacterTable::compute(&g).unwrap();
        assert_eq!(t.degrees(), vec![1, 1, 2]);
        // classes sorted by size: identity, 3-cycles, transpositions
        let two_dim = &t.characters[2];
        assert_eq!(int(&two_dim.values[0]), 2);
        assert_eq!(int(&two_dim.values[1]), -1);
        assert_eq!(int(&two_dim.values[2]), 0);
        assert!(t.characters.iter().all(|c| c.fs_indicator == 1));
        // trivial character first
        assert!(t.characters[0].values.iter().all(|v| int(v) == 1));
    }

    #[test]
    fn q8_table() {
        let g = make_family(&FamilySpec::Quaternion8).unwrap();
        let t = CharacterTable::compute(&g).unwrap();
        assert_eq!(t.degrees(), vec![1, 1, 1, 1, 2]);
        let two_dim = &t.characters[4];
        let vals: Vec<i64> = two_dim.values.iter().map(int).collect();
        assert_eq!(vals, vec![2, -2, 0, 0, 0]);
        assert_eq!(two_dim.fs_indicator, -1);
        assert_eq!(
            t.characters
                .iter()
                .map(|c| c.fs_indicator)
                .collect::<Vec<_>>(),
            vec![1, 1, 1, 1, -1]
        );
    }

    #[test]
    fn cyclic_tables() {
        let c3 = make_family(&FamilySpec::Cyclic(3)).unwrap();
        let t = CharacterTable::compute(&c3).unwrap();
        assert_eq!(t.degrees(), vec![1, 1, 1]);
        assert_eq!(
            t.characters
                .iter()
                .map(|c| c.fs_indicator)
                .collect::<Vec<_>>(),
            vec![1, 0, 0]
        );

        let c4 = make_family(&FamilySpec::Cyclic(4)).unwrap();
        let t4 = CharacterTable::compute(&c4).unwrap();
        assert_eq!(t4.degrees(), vec![1, 1, 1, 1]);
        assert_eq!(t4.degrees().iter().map(|d| d * d).sum::<u64>(), 4);
    }

    #[test]
    fn trivial_group_table() {
        let g = crate::group::PermGroup::from_generators(1, vec![]).unwrap();
        let t = CharacterTable::compute(&g).unwrap();
        assert_eq!(t.degrees(), vec![1]);
    }

    #[test]
    fn prime_independence() {
        for spec in [FamilySpec::Symmetric(4), FamilySpec::Dihedral(5)] {
            let g = make_family(&spec).unwrap();
            let a = CharacterTable::compute(&g).unwrap();
            let b = CharacterTable::compute_with_prime_skip(&g, 1).unwrap();
            assert_ne!(a.prime, b.prime);
            assert!(tables_identical(&a, &b));
        }
    }

    #[test]
    fn fs_square_counts() {
        for spec in [
            FamilySpec::Symmetric(4),
            FamilySpec::Quaternion8,
            FamilySpec::Dihedral(6),
            FamilySpec::Cyclic(12),
        ] {
            let g = make_family(&spec).unwrap();
            let t = CharacterTable::compute(&g).unwrap();
            t.verify_fs_square_counts(&g).unwrap();
        }
    }

    #[test]
    fn galois_orbits_c5() {
        let g = make_family(&FamilySpec::Cyclic(5)).unwrap();
        let t = CharacterTable::compute(&g).unwrap();
        let orbits = t.galois_orbits(true).unwrap();
        // trivial character alone, the four nontrivial in one orbit
        assert_eq!(orbits.len(), 2);
        let sizes: Vec<usize> = orbits.iter().map(|o| o.members.len()).collect();
        assert!(sizes.contains(&1) && sizes.contains(&4));
    }

    #[test]
    fn galois_orbits_s3_rational() {
        let g = make_family(&FamilySpec::Symmetric(3)).unwrap();
        let t = CharacterTable::compute(&g).unwrap();
        let orbits = t.galois_orbits(true).unwrap();
        assert_eq!(orbits.len(), 3);
        assert!(orbits.iter().all(|o| o.members.len() == 1));
        assert!(orbits.iter().all(|o| o.field.is_rationals()));
    }

    #[test]
    fn frobenius_group_21_orbit_and_field() {
        let g = make_family(&FamilySpec::SemidirectCyclic {
            n: 7,
            exponents: vec![2],
        })
        .unwrap();
        assert_eq!(g.order(), 21);
        let t = CharacterTable::compute(&g).unwrap();
        assert_eq!(t.degrees(), vec![1, 1, 1, 3, 3]);
        let orbits = t.galois_orbits(false).unwrap();
        assert_eq!(orbits.len(), 1);
        assert_eq!(orbits[0].members.len(), 2);
        let field = &orbits[0].field;
        assert_eq!(field.degree(), 2);
        assert_eq!(field.conductor(), 7);
        assert!(!field.is_totally_real());
    }

    #[test]
    fn character_fields_examples() {
        // faithful character of C4: field Q(i)
        let c4 = make_family(&FamilySpec::Cyclic(4)).unwrap();
        let t = CharacterTable::compute(&c4).unwrap();
        let faithful = (0..4)
            .find(|&i| t.character_field(i).map(|f| f.conductor()).unwrap_or(0) == 4)
            .unwrap();
        let f = t.character_field(faithful).unwrap();
        assert_eq!(f.degree(), 2);
        assert!(!f.is_totally_real());

        // degree-2 character of D7: field Q(zeta_7)^+, degree 3, real
        let d7 = make_family(&FamilySpec::Dihedral(7)).unwrap();
        let t = CharacterTable::compute(&d7).unwrap();
        let deg2 = (0..t.class_count())
            .find(|&i| t.characters[i].degree == 2)
            .unwrap();
        let f = t.character_field(deg2).unwrap();
        assert_eq!(f.conductor(), 7);
        assert_eq!(f.degree(), 3);
        assert!(f.is_totally_real());
        assert_eq!(f.subgroup(), &[1, 6]);

        // degree-2 character of S3: rational
        let s3 = make_family(&FamilySpec::Symmetric(3)).unwrap();
        let t = CharacterTable::compute(&s3).unwrap();
        let f = t.character_field(2).unwrap();
        assert!(f.is_rationals());
    }

    #[test]
    fn order112_table_shape() {
        let g = make_family(&FamilySpec::Order112A).unwrap();
        let t = CharacterTable::compute(&g).unwrap();
        let degs = t.degrees();
        assert_eq!(degs.iter().map(|d| d * d).sum::<u64>(), 112);
        assert_eq!(degs.iter().filter(|&&d| d == 1).count(), 8);
        assert_eq!(degs.iter().filter(|&&d| d == 2).count(), 26);
    }
}
