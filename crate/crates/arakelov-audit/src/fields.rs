//! Abelian number fields presented by class-field data: a conductor `f` and
//! a subgroup `H` of `(Z/f)^x`, the field being the fixed field of `H` in
//! the f-th cyclotomic field. Provides degree/signature/discriminant, prime
//! splitting, the exact analytic relative class number of imaginary fields,
//! ingestion of external class-group data and the class-group obstruction
//! quotient.

use crate::cyclo::Cyclotomic;
use crate::snf::quotient_invariants;
use crate::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap};

/// Units mod f, ascending. For f = 1 the convention is the single residue 0.
pub fn units_mod(f: u64) -> Vec<u64> {
    if f == 1 {
        return vec![0];
    }
    (1..f).filter(|&x| num_integer::gcd(x, f) == 1).collect()
}

fn expand_subgroup(f: u64, gens: &[u64]) -> Result<Vec<u64>> {
    if f == 1 {
        return Ok(vec![0]);
    }
    for &g in gens {
        if num_integer::gcd(g % f, f) != 1 {
            return Err(Error::InvalidDescriptor(format!(
                "generator {g} is not a unit mod {f}"
            )));
        }
    }
    let mut elems = vec![1u64];
    let mut head = 0;
    while head < elems.len() {
        let x = elems[head];
        for &g in gens {
            let y = x * (g % f) % f;
            if !elems.contains(&y) {
                elems.push(y);
            }
        }
        head += 1;
    }
    elems.sort_unstable();
    Ok(elems)
}

/// Kernel of `(Z/f)^x -> (Z/d)^x` for d | f: units congruent to 1 mod d.
fn reduction_kernel(f: u64, d: u64) -> Vec<u64> {
    units_mod(f)
        .into_iter()
        .filter(|&x| d <= 1 || x % d == 1)
        .collect()
}

fn divisors(n: u64) -> Vec<u64> {
    let mut d: Vec<u64> = (1..=n).filter(|k| n % k == 0).collect();
    d.sort_unstable();
    d
}

/// An abelian number field: the fixed field of `H <= (Z/f)^x` inside the
/// f-th cyclotomic field, with `f` minimal for `H`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AbelianFieldDescriptor {
    conductor: u64,
    /// Sorted full element list of H (residues mod conductor).
    subgroup: Vec<u64>,
}

impl AbelianFieldDescriptor {
    /// The rational field.
    pub fn rationals() -> Self {
        AbelianFieldDescriptor {
            conductor: 1,
            subgroup: vec![0],
        }
    }

    /// Build from generators of H, canonicalizing to the minimal conductor.
    pub fn new(f: u64, h_generators: &[u64]) -> Result<Self> {
        if f == 0 {
            return Err(Error::InvalidDescriptor("conductor 0".into()));
        }
        let h = expand_subgroup(f, h_generators)?;
        Ok(Self::from_subgroup_elements(f, h))
    }

    /// Build from the full element list of a stabilizer subgroup of
    /// `(Z/n)^x`, canonicalizing to the minimal conductor.
    pub fn from_subgroup_elements(n: u64, h: Vec<u64>) -> Self {
        if n <= 2 {
            return Self::rationals();
        }
        for d in divisors(n) {
            let ker = reduction_kernel(n, d);
            if ker.iter().all(|k| h.contains(k)) {
                if d <= 2 {
                    return Self::rationals();
                }
                let mut image: Vec<u64> = h.iter().map(|&x| x % d).collect();
                image.sort_unstable();
                image.dedup();
                return AbelianFieldDescriptor {
                    conductor: d,
                    subgroup: image,
                };
            }
        }
        unreachable!("d = n always admits the trivial kernel")
    }

    /// Build from exact data, rejecting non-canonical input. Used when
    /// ingesting files, where silent canonicalization would hide key errors.
    pub fn new_strict(f: u64, h_generators: &[u64]) -> Result<Self> {
        let canonical = Self::new(f, h_generators)?;
        if canonical.conductor != f {
            return Err(Error::InvalidDescriptor(format!(
                "conductor {f} is not minimal for the given subgroup (reduces to {})",
                canonical.conductor
            )));
        }
        Ok(canonical)
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Sorted element list of H.
    pub fn subgroup(&self) -> &[u64] {
        &self.subgroup
    }

    pub fn is_rationals(&self) -> bool {
        self.conductor == 1
    }

    pub fn degree(&self) -> u64 {
        if self.conductor == 1 {
            return 1;
        }
        units_mod(self.conductor).len() as u64 / self.subgroup.len() as u64
    }

    pub fn is_totally_real(&self) -> bool {
        if self.conductor <= 2 {
            return true;
        }
        self.subgroup.contains(&(self.conductor - 1))
    }

    /// Canonical lookup key: conductor plus the sorted subgroup elements.
    pub fn key(&self) -> (u64, Vec<u64>) {
        (self.conductor, self.subgroup.clone())
    }

    /// Degree, signature (r1, r2) and discriminant, by the
    /// conductor-discriminant formula with the parity rule for the sign.
    pub fn invariants(&self) -> FieldInvariants {
        let degree = self.degree();
        let (r1, r2) = if self.is_totally_real() {
            (degree, 0)
        } else {
            (0, degree / 2)
        };
        let mut disc = BigInt::one();
        for chi in self.dual_characters() {
            disc *= BigInt::from(chi.conductor);
        }
        if r2 % 2 == 1 {
            disc = -disc;
        }
        FieldInvariants {
            degree,
            r1,
            r2,
            discriminant: disc,
        }
    }

    /// Splitting data of a rational prime.
    pub fn frobenius_class(&self, p: u64) -> Splitting {
        let degree = self.degree();
        if self.conductor == 1 {
            return Splitting {
                p,
                e: 1,
                residue_degree: 1,
                g: 1,
                ramified: false,
            };
        }
        let f = self.conductor;
        // Ramification index: size of the image of the p-part kernel in the
        // quotient by H.
        let mut fp_free = f;
        while fp_free % p == 0 {
            fp_free /= p;
        }
        let e = if f % p == 0 {
            let up = reduction_kernel(f, fp_free);
            let mut coset_set: Vec<u64> = Vec::new();
            for &u in &up {
                for &h in &self.subgroup {
                    let x = u * h % f;
                    if !coset_set.contains(&x) {
                        coset_set.push(x);
                    }
                }
            }
            coset_set.len() as u64 / self.subgroup.len() as u64
        } else {
            1
        };
        // Residue degree: order of p in (Z/f0)^x modulo the image of H,
        // where f0 is the prime-to-p part of the conductor.
        let residue_degree = if fp_free <= 2 {
            1
        } else {
            let h_image: Vec<u64> = {
                let mut v: Vec<u64> = self.subgroup.iter().map(|&h| h % fp_free).collect();
                v.sort_unstable();
                v.dedup();
                v
            };
            let p0 = p % fp_free;
            let mut k = 1u64;
            let mut acc = p0;
            while !h_image.contains(&acc) {
                acc = acc * p0 % fp_free;
                k += 1;
            }
            k
        };
        let g = degree / (e * residue_degree);
        Splitting {
            p,
            e,
            residue_degree,
            g,
            ramified: e > 1,
        }
    }

    /// All characters of `(Z/f)^x` trivial on H: the dual group of the
    /// Galois group of this field.
    pub fn dual_characters(&self) -> Vec<DirichletCharacter> {
        if self.conductor == 1 {
            return vec![DirichletCharacter {
                modulus: 1,
                order: 1,
                conductor: 1,
                odd: false,
                exponent_of: HashMap::new(),
                value_modulus: 1,
            }];
        }
        let f = self.conductor;
        let units = UnitStructure::compute(f);
        let m = units
            .orders
            .iter()
            .fold(1u64, |acc, &o| num_integer::lcm(acc, o));
        let mut out = Vec::new();
        let mut tuple = vec![0u64; units.orders.len()];
        loop {
            // character: x -> zeta_M ^ sum_i tuple[i] * log_i(x) * (M / order_i)
            let exponent_of: HashMap<u64, u64> = units
                .log
                .iter()
                .map(|(&x, logv)| {
                    let mut e = 0u64;
                    for (i, &l) in logv.iter().enumerate() {
                        e = (e + tuple[i] % units.orders[i] * (l % units.orders[i]) % m
                            * (m / units.orders[i]))
                            % m;
                    }
                    (x, e)
                })
                .collect();
            let trivial_on_h = self.subgroup.iter().all(|&h| exponent_of[&h] == 0);
            if trivial_on_h {
                let order = {
                    let mut o = 1u64;
                    for (&x, &e) in &exponent_of {
                        let _ = x;
                        if e != 0 {
                            o = num_integer::lcm(o, m / num_integer::gcd(e, m));
                        }
                    }
                    o
                };
                let conductor = {
                    let mut cond = f;
                    for d in divisors(f) {
                        let ker = reduction_kernel(f, d);
                        if ker.iter().all(|k| exponent_of[k] == 0) {
                            cond = d;
                            break;
                        }
                    }
                    if cond <= 2 {
                        1
                    } else {
                        cond
                    }
                };
                // chi(-1) is +-1, so the exponent at -1 is 0 or m/2.
                let odd = exponent_of[&(f - 1)] != 0;
                out.push(DirichletCharacter {
                    modulus: f,
                    order,
                    conductor,
                    odd,
                    exponent_of,
                    value_modulus: m,
                });
            }
            // next tuple
            let mut i = 0;
            loop {
                if i == tuple.len() {
                    let mut out = out;
                    out.sort_by_key(|c| (c.conductor, c.order, c.sort_key()));
                    return out;
                }
                tuple[i] += 1;
                if tuple[i] < units.orders[i] {
                    break;
                }
                tuple[i] = 0;
                i += 1;
            }
            if tuple.iter().all(|&t| t == 0) {
                out.sort_by_key(|c| (c.conductor, c.order, c.sort_key()));
                return out;
            }
        }
    }

    /// Number of roots of unity in the field.
    pub fn roots_of_unity_count(&self) -> u64 {
        if self.conductor <= 2 {
            return 2;
        }
        let f = self.conductor;
        let mut best = 1u64;
        for m in divisors(f) {
            if self.subgroup.iter().all(|&h| h % m == 1 % m) && m > best {
                best = m;
            }
        }
        num_integer::lcm(2, best)
    }

    /// Hasse unit index Q in {1, 2} for imaginary fields.
    ///
    /// Proven cases: imaginary quadratic fields (Q = 1), full cyclotomic
    /// fields (1 for prime-power conductor, 2 otherwise), and fields where
    /// some finite prime ramifies in K/K+ whose residue characteristic p
    /// leaves a nontrivial prime-to-p part of the root-of-unity count (then
    /// a generator of the roots of unity would reduce to 1 on the ramified
    /// prime's residue field, which is impossible, so Q = 1). Remaining
    /// cases default to 1.
    pub fn hasse_unit_index(&self) -> Result<u64> {
        if self.is_totally_real() {
            return Err(Error::InvalidDescriptor(
                "Hasse unit index is defined for imaginary fields".into(),
            ));
        }
        let degree = self.degree();
        if degree == 2 {
            return Ok(1);
        }
        if self.subgroup == [1] {
            let f = self.conductor;
            let distinct_primes = crate::modp::factor(f).len();
            return Ok(if distinct_primes <= 1 { 1 } else { 2 });
        }
        let w = self.roots_of_unity_count();
        let f = self.conductor;
        let complex_conj = f - 1;
        for (p, _) in crate::modp::factor(f) {
            // p ramifies in K/K+ iff complex conjugation lies in the image
            // of the inertia subgroup at p, i.e. -1 in U_p * H mod f.
            let mut fp_free = f;
            while fp_free % p == 0 {
                fp_free /= p;
            }
            let up = reduction_kernel(f, fp_free);
            let ramified_in_quadratic = up
                .iter()
                .any(|&u| self.subgroup.iter().any(|&h| u * h % f == complex_conj));
            if ramified_in_quadratic {
                let mut w_prime_to_p = w;
                while w_prime_to_p % p == 0 {
                    w_prime_to_p /= p;
                }
                if w_prime_to_p > 1 {
                    return Ok(1);
                }
            }
        }
        Ok(1)
    }

    /// Exact relative class number h^- of an imaginary abelian field, by the
    /// analytic formula h^- = Q * w * prod over odd characters of
    /// (-B_{1,psi} / 2), with all arithmetic in cyclotomic integers.
    pub fn h_minus(&self) -> Result<BigInt> {
        if self.is_totally_real() {
            return Err(Error::InvalidDescriptor(
                "h_minus requires an imaginary field".into(),
            ));
        }
        let odd_chars: Vec<DirichletCharacter> = self
            .dual_characters()
            .into_iter()
            .filter(|c| c.odd)
            .collect();
        let r = odd_chars.len() as u32;
        let level = odd_chars
            .iter()
            .fold(1u64, |acc, c| num_integer::lcm(acc, c.order.max(1)));
        let mut numerator = Cyclotomic::one(level);
        let mut denominator = BigInt::one();
        for chi in &odd_chars {
            let b1 = chi.b1_numerator(level); // sum a * chi(a) over a mod f_chi
            numerator = numerator.mul(&b1.neg());
            denominator *= BigInt::from(chi.conductor);
        }
        denominator *= BigInt::from(2u64).pow(r);
        let q = self.hasse_unit_index()?;
        let w = self.roots_of_unity_count();
        let scaled = numerator.scale(&BigInt::from(q * w));
        let rational = scaled.to_integer().ok_or_else(|| {
            Error::Inconsistency("relative class number product is not rational".into())
        })?;
        let (quot, rem) = rational.div_rem(&denominator);
        if !rem.is_zero() || quot <= BigInt::zero() {
            return Err(Error::Inconsistency(format!(
                "non-integral or non-positive relative class number {rational}/{denominator}"
            )));
        }
        Ok(quot)
    }
}

/// Degree, signature and discriminant of a field.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FieldInvariants {
    pub degree: u64,
    pub r1: u64,
    pub r2: u64,
    #[serde(serialize_with = "crate::fields::serialize_bigint")]
    pub discriminant: BigInt,
}

pub(crate) fn serialize_bigint<S: serde::Serializer>(
    v: &BigInt,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// Splitting of a rational prime in an abelian field.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Splitting {
    pub p: u64,
    pub e: u64,
    pub residue_degree: u64,
    pub g: u64,
    pub ramified: bool,
}

/// A character of `(Z/modulus)^x`, stored by its exponent table: the value
/// at x is zeta_{value_modulus}^{exponent_of[x]}.
#[derive(Debug, Clone)]
pub struct DirichletCharacter {
    pub modulus: u64,
    pub order: u64,
    pub conductor: u64,
    pub odd: bool,
    exponent_of: HashMap<u64, u64>,
    value_modulus: u64,
}

impl DirichletCharacter {
    fn sort_key(&self) -> Vec<u64> {
        let mut units: Vec<u64> = self.exponent_of.keys().copied().collect();
        units.sort_unstable();
        units.into_iter().map(|u| self.exponent_of[&u]).collect()
    }

    /// Value exponent at a unit x (mod value_modulus).
    pub fn exponent(&self, x: u64) -> Option<u64> {
        self.exponent_of.get(&(x % self.modulus)).copied()
    }

    /// Numerator of the generalized Bernoulli number B_{1,chi}: the exact
    /// cyclotomic sum of a * chi_prim(a) over a = 1..f_chi, where chi_prim
    /// is the primitive character of conductor f_chi inducing chi. The full
    /// B_1 is this divided by f_chi.
    pub fn b1_numerator(&self, level: u64) -> Cyclotomic {
        let fc = self.conductor;
        let mut exps: HashMap<u64, BigInt> = HashMap::new();
        for a in 1..=fc {
            if num_integer::gcd(a, fc) != 1 {
                continue;
            }
            // lift a to a unit mod the full modulus congruent to a mod fc
            let mut lift = a;
            while num_integer::gcd(lift, self.modulus) != 1 {
                lift += fc;
            }
            let e = self.exponent_of[&(lift % self.modulus)];
            // value = zeta_m^e with m = value_modulus; rescale to zeta_level
            debug_assert_eq!(level % self.order.max(1), 0);
            let m = self.value_modulus;
            debug_assert_eq!(e * self.order % m, 0);
            let e_in_order = e * self.order / m; // exponent w.r.t. zeta_order
            let e_level = e_in_order * (level / self.order.max(1));
            *exps.entry(e_level % level).or_insert_with(BigInt::zero) += BigInt::from(a);
        }
        Cyclotomic::from_exponents(level, &exps)
    }
}

/// Cyclic decomposition of `(Z/f)^x` with discrete logarithms.
struct UnitStructure {
    orders: Vec<u64>,
    /// unit -> exponent vector against the cyclic generators
    log: HashMap<u64, Vec<u64>>,
}

impl UnitStructure {
    fn compute(f: u64) -> UnitStructure {
        let mut gens: Vec<u64> = Vec::new();
        let mut orders: Vec<u64> = Vec::new();
        for (p, a) in crate::modp::factor(f) {
            let pa = p.pow(a);
            let rest = f / pa;
            // CRT embedding: x = g mod pa, 1 mod rest
            let embed = |g: u64| -> u64 {
                if rest == 1 {
                    return g % f;
                }
                // x = g + pa * t with t = (1 - g) * pa^{-1} mod rest
                let painv = mod_inverse(pa % rest, rest);
                let t = ((1 + rest as i128 * 2 - (g % rest) as i128) as u64 % rest) * painv % rest;
                (g + pa * t) % f
            };
            if p == 2 {
                if a >= 2 {
                    gens.push(embed(pa - 1)); // -1 mod 2^a
                    orders.push(2);
                }
                if a >= 3 {
                    gens.push(embed(5 % pa));
                    orders.push(pa / 4);
                }
            } else {
                let g = primitive_root_mod_pk(p, a);
                gens.push(embed(g));
                orders.push(pa - pa / p);
            }
        }
        // Discrete log table by full enumeration of exponent tuples.
        let mut log = HashMap::new();
        let mut tuple = vec![0u64; gens.len()];
        loop {
            let mut x = 1u64 % f;
            for (i, &g) in gens.iter().enumerate() {
                for _ in 0..tuple[i] {
                    x = x * g % f;
                }
            }
            log.entry(if f == 1 { 0 } else { x }).or_insert_with(|| tuple.clone());
            let mut i = 0;
            loop {
                if i == tuple.len() {
                    debug_assert_eq!(log.len(), units_mod(f).len());
                    return UnitStructure { orders, log };
                }
                tuple[i] += 1;
                if tuple[i] < orders[i] {
                    break;
                }
                tuple[i] = 0;
                i += 1;
            }
            if tuple.iter().all(|&t| t == 0) {
                debug_assert_eq!(log.len(), units_mod(f).len());
                return UnitStructure { orders, log };
            }
        }
    }
}

fn mod_inverse(a: u64, m: u64) -> u64 {
    // extended Euclid; m small
    let (mut old_r, mut r) = (a as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    (old_s.rem_euclid(m as i128)) as u64
}

fn primitive_root_mod_pk(p: u64, k: u32) -> u64 {
    let g = crate::modp::primitive_root(p);
    if k == 1 {
        return g;
    }
    // g lifts to a primitive root mod p^2 unless g^(p-1) = 1 mod p^2.
    let p2 = p * p;
    let g = if crate::modp::pow_mod(g, p - 1, p2) == 1 {
        g + p
    } else {
        g
    };
    g % p.pow(k)
}

// ---------------------------------------------------------------------------
// Ingested class data and obstruction quotient.
// ---------------------------------------------------------------------------

/// Class-group data for one field, as carried by the class-data file.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ClassDataEntry {
    pub conductor: u64,
    pub h_generators: Vec<u64>,
    pub h: u64,
    /// Narrow class number; absent means unknown (validation is skipped and
    /// symplectic lookups report inconclusive).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h_narrow: Option<u64>,
    /// Elementary divisors of the ordinary class group, ascending chain.
    #[serde(default)]
    pub cl_structure: Vec<u64>,
    /// Classes of the primes above selected rational primes, as vectors
    /// against the cl_structure basis. Primes above p are indexed 0..g-1.
    #[serde(default)]
    pub prime_classes: Vec<PrimeClassEntry>,
    pub provenance: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PrimeClassEntry {
    pub p: u64,
    pub index: u64,
    pub vector: Vec<i64>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ClassDataFile {
    pub entries: Vec<ClassDataEntry>,
}

/// Validated class data for one field.
#[derive(Debug, Clone)]
pub struct ClassData {
    pub field: AbelianFieldDescriptor,
    pub h: u64,
    pub h_narrow: Option<u64>,
    pub cl_structure: Vec<u64>,
    pub prime_classes: BTreeMap<(u64, u64), Vec<i64>>,
    pub provenance: String,
}

/// The ingested table, keyed by canonical descriptors.
#[derive(Debug, Default)]
pub struct ClassDataTable {
    entries: HashMap<(u64, Vec<u64>), ClassData>,
}

impl ClassDataTable {
    pub fn from_json(text: &str) -> Result<Self> {
        let file: ClassDataFile =
            serde_json::from_str(text).map_err(|e| Error::ClassDataInvalid(e.to_string()))?;
        Self::from_file(file)
    }

    pub fn from_file(file: ClassDataFile) -> Result<Self> {
        let mut table = ClassDataTable::default();
        for entry in file.entries {
            let data = validate_entry(entry)?;
            let key = data.field.key();
            if table.entries.contains_key(&key) {
                return Err(Error::ClassDataInvalid(format!(
                    "duplicate entry for conductor {} subgroup {:?}",
                    key.0, key.1
                )));
            }
            table.entries.insert(key, data);
        }
        Ok(table)
    }

    pub fn lookup(&self, field: &AbelianFieldDescriptor) -> Option<&ClassData> {
        self.entries.get(&field.key())
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

fn validate_entry(entry: ClassDataEntry) -> Result<ClassData> {
    let field = AbelianFieldDescriptor::new_strict(entry.conductor, &entry.h_generators)
        .map_err(|e| Error::ClassDataInvalid(e.to_string()))?;
    if entry.h == 0 {
        return Err(Error::ClassDataInvalid("h must be positive".into()));
    }
    let degree = field.degree();
    if let Some(hn) = entry.h_narrow {
        if hn % entry.h != 0 {
            return Err(Error::ClassDataInvalid(format!(
                "h = {} does not divide h_narrow = {hn}",
                entry.h
            )));
        }
        if field.is_totally_real() {
            let bound = entry.h.saturating_mul(1u64 << (degree - 1).min(62));
            if bound % hn != 0 {
                return Err(Error::ClassDataInvalid(format!(
                    "h_narrow = {hn} does not divide h * 2^(deg-1) = {bound}"
                )));
            }
        } else if hn != entry.h {
            return Err(Error::ClassDataInvalid(format!(
                "field has a complex place, so h_narrow must equal h (got {hn} vs {})",
                entry.h
            )));
        }
    }
    let product: u64 = entry.cl_structure.iter().product();
    if product != entry.h {
        return Err(Error::ClassDataInvalid(format!(
            "cl_structure {:?} has order {product}, expected h = {}",
            entry.cl_structure, entry.h
        )));
    }
    for w in entry.cl_structure.windows(2) {
        if w[0] < 2 || w[1] % w[0] != 0 {
            return Err(Error::ClassDataInvalid(format!(
                "cl_structure {:?} is not an ascending divisibility chain of divisors > 1",
                entry.cl_structure
            )));
        }
    }
    if entry.cl_structure.first().map(|&d| d < 2).unwrap_or(false) {
        return Err(Error::ClassDataInvalid("cl_structure entries must be > 1".into()));
    }
    let mut prime_classes = BTreeMap::new();
    for pc in &entry.prime_classes {
        if pc.vector.len() != entry.cl_structure.len() {
            return Err(Error::ClassDataInvalid(format!(
                "prime class vector for p = {} has length {}, expected {}",
                pc.p,
                pc.vector.len(),
                entry.cl_structure.len()
            )));
        }
        let g = field.frobenius_class(pc.p).g;
        if pc.index >= g {
            return Err(Error::ClassDataInvalid(format!(
                "prime index {} out of range: only {g} primes above {}",
                pc.index, pc.p
            )));
        }
        if prime_classes.insert((pc.p, pc.index), pc.vector.clone()).is_some() {
            return Err(Error::ClassDataInvalid(format!(
                "duplicate prime class for (p, index) = ({}, {})",
                pc.p, pc.index
            )));
        }
    }
    // Cross-validate imaginary entries against the analytic h^-.
    if !field.is_totally_real() && !field.is_rationals() {
        let hm = field.h_minus()?;
        let h_big = BigInt::from(entry.h);
        if (&h_big % &hm) != BigInt::zero() {
            return Err(Error::ClassDataInvalid(format!(
                "h = {} is not divisible by the computed relative class number {hm}",
                entry.h
            )));
        }
    }
    Ok(ClassData {
        field,
        h: entry.h,
        h_narrow: entry.h_narrow,
        cl_structure: entry.cl_structure,
        prime_classes,
        provenance: entry.provenance,
    })
}

/// Verdict strength of an obstruction computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ObstructionMode {
    CertifiedByH1,
    CertifiedByTable,
    Inconclusive,
}

/// The class-group quotient certificate for one field.
#[derive(Debug, Clone, Serialize)]
pub struct ObstructionReport {
    pub conductor: u64,
    pub subgroup: Vec<u64>,
    pub symplectic: bool,
    pub mode: ObstructionMode,
    /// Elementary divisors of the obstruction quotient; empty means trivial.
    pub quotient_invariants: Vec<u64>,
    pub detail: String,
}

impl ObstructionReport {
    pub fn is_trivial_certified(&self) -> bool {
        self.mode != ObstructionMode::Inconclusive && self.quotient_invariants.is_empty()
    }

    pub fn is_nontrivial_certified(&self) -> bool {
        self.mode != ObstructionMode::Inconclusive && !self.quotient_invariants.is_empty()
    }
}

/// Quotient of the (narrow, if symplectic) class group of the field by the
/// subgroup generated by the classes of all primes above `bad_primes`.
/// Missing data yields an inconclusive report, never a false certificate.
pub fn obstruction_group(
    field: &AbelianFieldDescriptor,
    symplectic: bool,
    bad_primes: &[u64],
    data: Option<&ClassData>,
) -> ObstructionReport {
    let base = |mode, quotient_invariants, detail: String| ObstructionReport {
        conductor: field.conductor(),
        subgroup: field.subgroup().to_vec(),
        symplectic,
        mode,
        quotient_invariants,
        detail,
    };
    if field.is_rationals() {
        return base(
            ObstructionMode::CertifiedByH1,
            vec![],
            "class group of Q is trivial".into(),
        );
    }
    let Some(data) = data else {
        return base(
            ObstructionMode::Inconclusive,
            vec![],
            "no class-data entry for this field".into(),
        );
    };
    if symplectic {
        match data.h_narrow {
            Some(1) => {
                return base(
                    ObstructionMode::CertifiedByH1,
                    vec![],
                    "narrow class number is 1".into(),
                )
            }
            Some(hn) if hn == data.h => {} // narrow = ordinary, fall through
            Some(_) => {
                return base(
                    ObstructionMode::Inconclusive,
                    vec![],
                    "narrow class group structure differs from the ordinary one and is not carried by the data file".into(),
                )
            }
            None => {
                return base(
                    ObstructionMode::Inconclusive,
                    vec![],
                    "narrow class number unknown".into(),
                )
            }
        }
    } else if data.h == 1 {
        return base(
            ObstructionMode::CertifiedByH1,
            vec![],
            "class number is 1".into(),
        );
    }
    if symplectic && data.h == 1 {
        return base(
            ObstructionMode::CertifiedByH1,
            vec![],
            "class number is 1".into(),
        );
    }
    // Need the classes of every prime above every bad prime.
    let mut relations: Vec<Vec<BigInt>> = Vec::new();
    let rank = data.cl_structure.len();
    for (i, &d) in data.cl_structure.iter().enumerate() {
        let mut rel = vec![BigInt::zero(); rank];
        rel[i] = BigInt::from(d);
        relations.push(rel);
    }
    let mut missing = Vec::new();
    for &p in bad_primes {
        let g = field.frobenius_class(p).g;
        for idx in 0..g {
            match data.prime_classes.get(&(p, idx)) {
                Some(v) => relations.push(v.iter().map(|&x| BigInt::from(x)).collect()),
                None => missing.push(format!("({p}, {idx})")),
            }
        }
    }
    if !missing.is_empty() {
        return base(
            ObstructionMode::Inconclusive,
            vec![],
            format!("missing prime classes: {}", missing.join(", ")),
        );
    }
    let invariants = quotient_invariants(rank, &relations);
    let quotient: Vec<u64> = invariants
        .iter()
        .map(|d| u64::try_from(d.clone()).unwrap_or(0))
        .collect();
    let detail = if quotient.is_empty() {
        "prime classes generate the full class group".into()
    } else {
        format!("quotient invariants {quotient:?}")
    };
    base(ObstructionMode::CertifiedByTable, quotient, detail)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qi() -> AbelianFieldDescriptor {
        AbelianFieldDescriptor::new(4, &[]).unwrap()
    }

    #[test]
    fn descriptor_basics() {
        let k = qi();
        assert_eq!(k.degree(), 2);
        assert!(!k.is_totally_real());
        let real = AbelianFieldDescriptor::new(5, &[4]).unwrap();
        assert_eq!(real.degree(), 2);
        assert!(real.is_totally_real());
        let q = AbelianFieldDescriptor::new(1, &[]).unwrap();
        assert_eq!(q.degree(), 1);
        assert!(q.is_rationals());
    }

    #[test]
    fn canonicalization_reduces_conductor() {
        // subgroup {1,4,7} of (Z/9)^x contains the kernel of reduction to
        // (Z/3)^x, so the field is the quadratic field of conductor 3.
        let k = AbelianFieldDescriptor::new(9, &[4]).unwrap();
        assert_eq!(k.conductor(), 3);
        assert_eq!(k.degree(), 2);
        assert!(!k.is_totally_real());
        assert!(AbelianFieldDescriptor::new_strict(9, &[4]).is_err());
    }

    #[test]
    fn invariants_examples() {
        let inv = qi().invariants();
        assert_eq!(inv.degree, 2);
        assert_eq!((inv.r1, inv.r2), (0, 1));
        assert_eq!(inv.discriminant, BigInt::from(-4));

        let sqrt5 = AbelianFieldDescriptor::new(5, &[4]).unwrap();
        let inv = sqrt5.invariants();
        assert_eq!(inv.degree, 2);
        assert_eq!((inv.r1, inv.r2), (2, 0));
        assert_eq!(inv.discriminant, BigInt::from(5));

        let q = AbelianFieldDescriptor::rationals();
        assert_eq!(q.invariants().discriminant, BigInt::one());
    }

    #[test]
    fn cyclotomic_discriminants_match_classical_table() {
        // (f, disc of Q(zeta_f))
        let table: [(u64, i64); 7] = [
            (3, -3),
            (4, -4),
            (5, 125),
            (7, -16807),
            (8, 256),
            (9, -19683),
            (11, -2357947691),
        ];
        for (f, d) in table {
            let k = AbelianFieldDescriptor::new(f, &[]).unwrap();
            assert_eq!(k.invariants().discriminant, BigInt::from(d), "f = {f}");
        }
    }

    #[test]
    fn frobenius_examples() {
        let k = qi();
        let s5 = k.frobenius_class(5);
        assert_eq!((s5.e, s5.residue_degree, s5.g, s5.ramified), (1, 1, 2, false));
        let s3 = k.frobenius_class(3);
        assert_eq!((s3.e, s3.residue_degree, s3.g), (1, 2, 1));
        let s2 = k.frobenius_class(2);
        assert!(s2.ramified);
        assert_eq!((s2.e, s2.residue_degree, s2.g), (2, 1, 1));
    }

    #[test]
    fn frobenius_degree_sum() {
        for (f, gens) in [(5u64, vec![]), (7, vec![6]), (12, vec![]), (56, vec![13])] {
            let k = AbelianFieldDescriptor::new(f, &gens).unwrap();
            for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47] {
                let s = k.frobenius_class(p);
                assert_eq!(s.e * s.residue_degree * s.g, k.degree(), "f={f} p={p}");
            }
        }
    }

    #[test]
    fn roots_of_unity() {
        assert_eq!(qi().roots_of_unity_count(), 4);
        let z5 = AbelianFieldDescriptor::new(5, &[]).unwrap();
        assert_eq!(z5.roots_of_unity_count(), 10);
        let k56 = AbelianFieldDescriptor::new(56, &[13]).unwrap();
        assert_eq!(k56.roots_of_unity_count(), 4);
    }

    #[test]
    fn h_minus_small_fields() {
        assert_eq!(qi().h_minus().unwrap(), BigInt::one());
        let z5 = AbelianFieldDescriptor::new(5, &[]).unwrap();
        assert_eq!(z5.h_minus().unwrap(), BigInt::one());
        let z23 = AbelianFieldDescriptor::new(23, &[]).unwrap();
        assert_eq!(z23.h_minus().unwrap(), BigInt::from(3));
    }

    #[test]
    fn h_minus_quadratics_match_classical_class_numbers() {
        // imaginary quadratic fields: h^- = h; classical values
        for (f, gens, h) in [
            (3u64, vec![1u64], 1u64),
            (7, vec![2], 1),  // squares mod 7 = {1,2,4}
            (8, vec![3], 1),  // Q(sqrt(-2)): kernel of chi_{-8} = {1,3}
            (11, vec![3], 1), // squares mod 11
            (20, vec![3], 2), // Q(sqrt(-5)): kernel {1,3,7,9}
            (23, vec![2], 3), // Q(sqrt(-23))
            (56, vec![3, 13], 4), // Q(sqrt(-14)): kernel of chi_{-56}
        ] {
            let k = AbelianFieldDescriptor::new(f, &gens).unwrap();
            assert_eq!(k.degree(), 2, "f={f}");
            assert!(!k.is_totally_real(), "f={f}");
            assert_eq!(k.h_minus().unwrap(), BigInt::from(h), "f={f}");
        }
    }

    #[test]
    fn h_minus_invariant_under_recanonicalization() {
        // Same field, different presentations: conductor 9 reducing to 3.
        let a = AbelianFieldDescriptor::new(3, &[]).unwrap();
        let b = AbelianFieldDescriptor::new(9, &[4]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.h_minus().unwrap(), b.h_minus().unwrap());
    }

    fn entry(conductor: u64, gens: Vec<u64>, h: u64, hn: Option<u64>, cl: Vec<u64>) -> ClassDataEntry {
        ClassDataEntry {
            conductor,
            h_generators: gens,
            h,
            h_narrow: hn,
            cl_structure: cl,
            prime_classes: vec![],
            provenance: "test".into(),
        }
    }

    #[test]
    fn class_data_validation() {
        // Q entry accepted
        let table = ClassDataTable::from_file(ClassDataFile {
            entries: vec![entry(1, vec![], 1, Some(1), vec![])],
        })
        .unwrap();
        assert_eq!(table.len(), 1);

        // real quadratic with norm -1 fundamental unit: h = h_narrow = 1
        ClassDataTable::from_file(ClassDataFile {
            entries: vec![entry(5, vec![4], 1, Some(1), vec![])],
        })
        .unwrap();

        // imaginary entry with h not divisible by h^- is rejected
        let bad = ClassDataFile {
            entries: vec![entry(23, vec![2], 2, Some(2), vec![2])],
        };
        assert!(matches!(
            ClassDataTable::from_file(bad),
            Err(Error::ClassDataInvalid(_))
        ));

        // duplicate keys rejected
        let dup = ClassDataFile {
            entries: vec![
                entry(1, vec![], 1, Some(1), vec![]),
                entry(1, vec![], 1, Some(1), vec![]),
            ],
        };
        assert!(ClassDataTable::from_file(dup).is_err());

        // wrong cl_structure order rejected
        let bad = ClassDataFile {
            entries: vec![entry(20, vec![3], 2, None, vec![])],
        };
        assert!(ClassDataTable::from_file(bad).is_err());
    }

    #[test]
    fn obstruction_modes() {
        // Q: always trivial without data.
        let q = AbelianFieldDescriptor::rationals();
        let rep = obstruction_group(&q, true, &[2, 3], None);
        assert_eq!(rep.mode, ObstructionMode::CertifiedByH1);
        assert!(rep.is_trivial_certified());

        // Missing data: inconclusive.
        let k = AbelianFieldDescriptor::new(23, &[2]).unwrap();
        let rep = obstruction_group(&k, false, &[2], None);
        assert_eq!(rep.mode, ObstructionMode::Inconclusive);

        // h = 1 certificate.
        let table = ClassDataTable::from_file(ClassDataFile {
            entries: vec![entry(7, vec![2], 1, Some(1), vec![])],
        })
        .unwrap();
        let k7 = AbelianFieldDescriptor::new(7, &[2]).unwrap();
        let rep = obstruction_group(&k7, false, &[2, 7], table.lookup(&k7));
        assert_eq!(rep.mode, ObstructionMode::CertifiedByH1);
    }

    #[test]
    fn obstruction_table_and_antitone() {
        // Q(sqrt(-5)): Cl = C2. Prime above 2 is ramified and nonprincipal;
        // primes above 11 are inert hence principal; primes above 3 split
        // and are nonprincipal. Classical binary-quadratic-form facts.
        let mut e = entry(20, vec![3], 2, Some(2), vec![2]);
        e.prime_classes = vec![
            PrimeClassEntry { p: 2, index: 0, vector: vec![1] },
            PrimeClassEntry { p: 3, index: 0, vector: vec![1] },
            PrimeClassEntry { p: 3, index: 1, vector: vec![1] },
            PrimeClassEntry { p: 11, index: 0, vector: vec![0] },
        ];
        let table = ClassDataTable::from_file(ClassDataFile { entries: vec![e] }).unwrap();
        let k = AbelianFieldDescriptor::new(20, &[3]).unwrap();
        let data = table.lookup(&k);

        // bad primes {11}: inert prime is principal, quotient = C2, nontrivial
        let rep = obstruction_group(&k, false, &[11], data);
        assert_eq!(rep.mode, ObstructionMode::CertifiedByTable);
        assert_eq!(rep.quotient_invariants, vec![2]);

        // enlarge bad primes to {2, 11}: quotient collapses (antitone)
        let rep2 = obstruction_group(&k, false, &[2, 11], data);
        assert_eq!(rep2.mode, ObstructionMode::CertifiedByTable);
        assert!(rep2.quotient_invariants.is_empty());

        // symplectic without narrow data is inconclusive
        let mut e2 = entry(20, vec![3], 2, None, vec![2]);
        e2.prime_classes = vec![];
        let table2 = ClassDataTable::from_file(ClassDataFile { entries: vec![e2] }).unwrap();
        let rep3 = obstruction_group(&k, true, &[2], table2.lookup(&k));
        assert_eq!(rep3.mode, ObstructionMode::Inconclusive);

        // missing prime coverage is inconclusive, not wrong
        let rep4 = obstruction_group(&k, false, &[7], data);
        assert_eq!(rep4.mode, ObstructionMode::Inconclusive);
    }

    #[test]
    fn hasse_index_cases() {
        // imaginary quadratic: 1
        assert_eq!(qi().hasse_unit_index().unwrap(), 1);
        // full cyclotomic prime power: 1; composite: 2
        let z8 = AbelianFieldDescriptor::new(8, &[]).unwrap();
        assert_eq!(z8.hasse_unit_index().unwrap(), 1);
        let z12 = AbelianFieldDescriptor::new(12, &[]).unwrap();
        assert_eq!(z12.hasse_unit_index().unwrap(), 2);
        let z39 = AbelianFieldDescriptor::new(39, &[]).unwrap();
        assert_eq!(z39.hasse_unit_index().unwrap(), 2);
    }

    #[test]
    fn h_minus_cyclotomic_39() {
        // classical table value: h^-(Q(zeta_39)) = 2
        let z39 = AbelianFieldDescriptor::new(39, &[]).unwrap();
        assert_eq!(z39.h_minus().unwrap(), BigInt::from(2));
    }
}
