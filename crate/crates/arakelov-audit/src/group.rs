//! Finite permutation groups: closure from generators, conjugacy-class
//! infrastructure, derived subgroup / abelianization, named families and the
//! group file format.

use crate::perm::Permutation;
use crate::{Error, Result};
use std::collections::HashMap;
use std::fmt::Write as _;

/// Default cap on the order of a group built by closure.
pub const DEFAULT_ORDER_BOUND: usize = 10_000;

/// A finite group given by permutation generators, with its full element
/// table. Element 0 is the identity; the ordering is the breadth-first
/// closure from the identity with generators applied in input order, so it is
/// deterministic for fixed input.
#[derive(Debug, Clone)]
pub struct PermGroup {
    degree: usize,
    name: String,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    index: HashMap<Vec<u16>, usize>,
    inverses: Vec<usize>,
}

impl PermGroup {
    /// Closure of the given generators, bounded by [`DEFAULT_ORDER_BOUND`].
    pub fn from_generators(degree: usize, gens: Vec<Permutation>) -> Result<Self> {
        Self::from_generators_bounded(degree, gens, DEFAULT_ORDER_BOUND)
    }

    /// Closure with an explicit order bound.
    pub fn from_generators_bounded(
        degree: usize,
        gens: Vec<Permutation>,
        bound: usize,
    ) -> Result<Self> {
        for g in &gens {
            if g.degree() != degree {
                return Err(Error::InvalidPermutation(format!(
                    "generator degree {} does not match group degree {degree}",
                    g.degree()
                )));
            }
        }
        let mut elements = vec![Permutation::identity(degree)];
        let mut index = HashMap::new();
        index.insert(elements[0].images().to_vec(), 0usize);
        let mut head = 0;
        while head < elements.len() {
            let current = elements[head].clone();
            for g in &gens {
                let next = current.compose(g);
                if !index.contains_key(next.images()) {
                    if elements.len() >= bound {
                        return Err(Error::OrderBoundExceeded { bound });
                    }
                    index.insert(next.images().to_vec(), elements.len());
                    elements.push(next);
                }
            }
            head += 1;
        }
        let inverses = elements
            .iter()
            .map(|e| index[e.inverse().images()])
            .collect();
        Ok(PermGroup {
            degree,
            name: String::new(),
            generators: gens,
            elements,
            index,
            inverses,
        })
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p.images()).copied()
    }

    /// Index of the product `elements[a] * elements[b]` (apply `b` first).
    pub fn mul(&self, a: usize, b: usize) -> usize {
        let prod = self.elements[a].compose(&self.elements[b]);
        self.index[prod.images()]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    /// Index of `elements[a]^k` for any integer `k`.
    pub fn pow(&self, a: usize, k: i64) -> usize {
        let ord = self.elements[a].order() as i64;
        let mut e = k.rem_euclid(ord) as u64;
        let mut base = a;
        let mut acc = 0usize; // identity
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn element_order(&self, a: usize) -> u64 {
        self.elements[a].order()
    }

    /// Exponent of the group: lcm of all element orders.
    pub fn exponent(&self) -> u64 {
        self.elements
            .iter()
            .fold(1u64, |acc, e| num_integer::lcm(acc, e.order()))
    }

    pub fn is_abelian(&self) -> bool {
        self.generators.iter().enumerate().all(|(i, a)| {
            self.generators[i + 1..]
                .iter()
                .all(|b| a.compose(b) == b.compose(a))
        })
    }

    /// Conjugacy-class data. Classes are sorted by (size, minimal element
    /// index), which puts the identity in class 0.
    pub fn conjugacy_classes(&self) -> ConjugacyData {
        let n = self.order();
        let mut class_of = vec![usize::MAX; n];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let gen_indices: Vec<usize> = self
            .generators
            .iter()
            .filter_map(|g| self.index_of(g))
            .collect();
        for start in 0..n {
            if class_of[start] != usize::MAX {
                continue;
            }
            let cls = classes.len();
            let mut orbit = vec![start];
            class_of[start] = cls;
            let mut head = 0;
            while head < orbit.len() {
                let x = orbit[head];
                for &g in &gen_indices {
                    let y = self.mul(self.mul(self.inv(g), x), g);
                    if class_of[y] == usize::MAX {
                        class_of[y] = cls;
                        orbit.push(y);
                    }
                }
                head += 1;
            }
            orbit.sort_unstable();
            classes.push(orbit);
        }
        // Sort classes by (size, minimal element index) and remap.
        let mut order: Vec<usize> = (0..classes.len()).collect();
        order.sort_by_key(|&c| (classes[c].len(), classes[c][0]));
        let mut remap = vec![0usize; classes.len()];
        for (new, &old) in order.iter().enumerate() {
            remap[old] = new;
        }
        let classes: Vec<Vec<usize>> = order.iter().map(|&c| classes[c].clone()).collect();
        for entry in class_of.iter_mut() {
            *entry = remap[*entry];
        }
        let class_reps: Vec<usize> = classes.iter().map(|c| c[0]).collect();
        let class_sizes: Vec<usize> = classes.iter().map(|c| c.len()).collect();
        let rep_orders: Vec<u64> = class_reps.iter().map(|&r| self.element_order(r)).collect();
        let inverse_class: Vec<usize> = class_reps
            .iter()
            .map(|&r| class_of[self.inv(r)])
            .collect();
        ConjugacyData {
            class_reps,
            class_sizes,
            class_members: classes,
            class_of,
            inverse_class,
            rep_orders,
        }
    }

    /// The derived subgroup, generated by all commutators, together with the
    /// abelian invariants (invariant factors, each dividing the next) of
    /// `G/G'`.
    pub fn derived_subgroup(&self) -> Result<DerivedData> {
        let n = self.order();
        // Commutators of all element pairs, closed under multiplication.
        let mut in_sub = vec![false; n];
        in_sub[0] = true;
        let mut members = vec![0usize];
        let push = |x: usize, in_sub: &mut Vec<bool>, members: &mut Vec<usize>| {
            if !in_sub[x] {
                in_sub[x] = true;
                members.push(x);
            }
        };
        let mut comm_gens = Vec::new();
        for a in 0..n {
            for b in 0..n {
                let c = self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b));
                if !in_sub[c] {
                    push(c, &mut in_sub, &mut members);
                    comm_gens.push(c);
                }
            }
        }
        // Close under multiplication (the commutator set need not be closed).
        let mut head = 0;
        while head < members.len() {
            let x = members[head];
            for &g in &comm_gens {
                let y = self.mul(x, g);
                if !in_sub[y] {
                    in_sub[y] = true;
                    members.push(y);
                }
            }
            head += 1;
        }
        members.sort_unstable();
        let sub_gens: Vec<Permutation> = comm_gens
            .iter()
            .map(|&i| self.elements[i].clone())
            .collect();
        let subgroup = PermGroup::from_generators_bounded(self.degree, sub_gens, n.max(1))?
            .with_name(format!("derived({})", self.name));
        debug_assert_eq!(subgroup.order(), members.len());
        let invariants = self.quotient_abelian_invariants(&members);
        Ok(DerivedData {
            subgroup,
            member_indices: members,
            abelian_invariants: invariants,
        })
    }

    /// Invariant factors of the abelian quotient `G/N` for a normal subgroup
    /// `N` given by a sorted element-index list. Computed by counting
    /// solutions of `x^(p^e) = 1` in the quotient, which determines the
    /// p-type partitions.
    fn quotient_abelian_invariants(&self, normal: &[usize]) -> Vec<u64> {
        let n = self.order();
        let in_normal: Vec<bool> = {
            let mut v = vec![false; n];
            for &i in normal {
                v[i] = true;
            }
            v
        };
        // Canonical coset representative: minimal element index in the coset.
        let mut coset_rep = vec![usize::MAX; n];
        let mut reps = Vec::new();
        for x in 0..n {
            if coset_rep[x] != usize::MAX {
                continue;
            }
            let mut coset: Vec<usize> = normal.iter().map(|&h| self.mul(x, h)).collect();
            coset.sort_unstable();
            let rep = coset[0];
            for &y in &coset {
                coset_rep[y] = rep;
            }
            reps.push(rep);
        }
        reps.sort_unstable();
        debug_assert!(in_normal[0]);
        let q = reps.len() as u64;
        if q == 1 {
            return Vec::new();
        }
        // For each prime p | q, recover the partition of the p-part from the
        // counts of solutions of x^(p^e) = 1.
        let mut parts_per_prime: Vec<(u64, Vec<u32>)> = Vec::new();
        let mut m = q;
        let mut p = 2u64;
        let mut primes = Vec::new();
        while p * p <= m {
            if m % p == 0 {
                primes.push(p);
                while m % p == 0 {
                    m /= p;
                }
            }
            p += 1;
        }
        if m > 1 {
            primes.push(m);
        }
        for &p in &primes {
            let mut counts = vec![0u32]; // log_p #{x : x^(p^e)=1} for e = 0, 1, ...
            let mut e = 1u32;
            loop {
                let pe = p.pow(e) as i64;
                let cnt = reps
                    .iter()
                    .filter(|&&r| in_normal[self.pow(r, pe)])
                    .count() as u64;
                let log = {
                    let mut l = 0u32;
                    let mut c = cnt;
                    while c > 1 {
                        debug_assert_eq!(c % p, 0);
                        c /= p;
                        l += 1;
                    }
                    l
                };
                counts.push(log);
                if p.pow(log) == cnt && counts[e as usize] == counts[e as usize - 1] {
                    break;
                }
                e += 1;
            }
            // parts >= e count = counts[e] - counts[e-1]
            let mut partition = Vec::new();
            for e in 1..counts.len() {
                let parts_ge = counts[e] - counts[e - 1];
                for _ in partition.len() as u32..parts_ge {
                    partition.push(0u32);
                }
                for part in partition.iter_mut().take(parts_ge as usize) {
                    *part += 1;
                }
            }
            partition.sort_unstable_by(|a, b| b.cmp(a));
            parts_per_prime.push((p, partition));
        }
        let width = parts_per_prime
            .iter()
            .map(|(_, parts)| parts.len())
            .max()
            .unwrap_or(0);
        // Invariant factors: align largest exponents together.
        let mut factors = vec![1u64; width];
        for (p, parts) in &parts_per_prime {
            for (i, &e) in parts.iter().enumerate() {
                factors[i] *= p.pow(e);
            }
        }
        factors.reverse(); // ascending, each dividing the next
        factors
    }

    /// Fixed points of `elements[g]` acting on the cosets `G/H`, for `H` the
    /// subgroup given by sorted element indices. Used by permutation
    /// characters.
    pub fn coset_fixed_points(&self, subgroup: &[usize], g: usize) -> usize {
        // g fixes xH iff x^{-1} g x in H.
        let n = self.order();
        let in_h: Vec<bool> = {
            let mut v = vec![false; n];
            for &i in subgroup {
                v[i] = true;
            }
            v
        };
        let mut fixed = 0;
        let mut seen = vec![false; n];
        for x in 0..n {
            if seen[x] {
                continue;
            }
            for &h in subgroup {
                seen[self.mul(x, h)] = true;
            }
            if in_h[self.mul(self.mul(self.inv(x), g), x)] {
                fixed += 1;
            }
        }
        fixed
    }
}

/// Conjugacy-class structure of a [`PermGroup`].
#[derive(Debug, Clone)]
pub struct ConjugacyData {
    /// Minimal element index in each class.
    pub class_reps: Vec<usize>,
    pub class_sizes: Vec<usize>,
    /// Sorted element indices per class.
    pub class_members: Vec<Vec<usize>>,
    /// Element index -> class index.
    pub class_of: Vec<usize>,
    /// Class of the inverses of a class.
    pub inverse_class: Vec<usize>,
    /// Order of each class representative.
    pub rep_orders: Vec<u64>,
}

impl ConjugacyData {
    pub fn class_count(&self) -> usize {
        self.class_reps.len()
    }

    /// Class of `rep(c)^k`; well defined on classes.
    pub fn power_map(&self, group: &PermGroup, c: usize, k: i64) -> usize {
        self.class_of[group.pow(self.class_reps[c], k)]
    }
}

/// Output of [`PermGroup::derived_subgroup`].
#[derive(Debug, Clone)]
pub struct DerivedData {
    pub subgroup: PermGroup,
    /// Sorted element indices of `G'` within the parent group.
    pub member_indices: Vec<usize>,
    /// Invariant factors of `G/G'`, ascending, each dividing the next.
    pub abelian_invariants: Vec<u64>,
}

/// Named family selector for [`make_family`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    Cyclic(u64),
    Dihedral(u64),
    Quaternion8,
    Symmetric(u32),
    /// `C_n` acted on by the subgroup of `(Z/n)^x` generated by the listed
    /// exponents; realized on the n translation points plus one regular
    /// point set for the acting group.
    SemidirectCyclic { n: u64, exponents: Vec<u64> },
    Order112A,
    Order112B,
}

/// Construct a named family member on a documented faithful permutation
/// representation.
pub fn make_family(spec: &FamilySpec) -> Result<PermGroup> {
    match spec {
        FamilySpec::Cyclic(n) => {
            let n = *n;
            if n == 0 {
                return Err(Error::UnknownFamily("cyclic(0)".into()));
            }
            if n == 1 {
                return PermGroup::from_generators(1, vec![]).map(|g| g.with_name("C1"));
            }
            let deg = n as usize;
            let rot = Permutation::new((0..deg).map(|i| ((i + 1) % deg) as u16).collect())?;
            PermGroup::from_generators(deg, vec![rot]).map(|g| g.with_name(format!("C{n}")))
        }
        FamilySpec::Dihedral(n) => {
            let n = *n;
            if n < 3 {
                return Err(Error::UnknownFamily(format!(
                    "dihedral({n}): need n >= 3 on this representation"
                )));
            }
            let deg = n as usize;
            let rot = Permutation::new((0..deg).map(|i| ((i + 1) % deg) as u16).collect())?;
            let refl = Permutation::new((0..deg).map(|i| ((deg - i) % deg) as u16).collect())?;
            PermGroup::from_generators(deg, vec![rot, refl])
                .map(|g| g.with_name(format!("D{n}")))
        }
        FamilySpec::Quaternion8 => {
            // Regular representation on 8 points.
            let a = Permutation::parse_cycles(8, "(0 1 2 3)(4 5 6 7)")?;
            let b = Permutation::parse_cycles(8, "(0 4 2 6)(1 7 3 5)")?;
            PermGroup::from_generators(8, vec![a, b]).map(|g| g.with_name("Q8"))
        }
        FamilySpec::Symmetric(n) => {
            let n = *n;
            if n == 0 || n > 5 {
                return Err(Error::UnknownFamily(format!("symmetric({n}): need 1 <= n <= 5")));
            }
            if n == 1 {
                return PermGroup::from_generators(1, vec![]).map(|g| g.with_name("S1"));
            }
            let deg = n as usize;
            let transposition = Permutation::parse_cycles(deg, "(0 1)")?;
            let cycle = {
                let images: Vec<u16> = (0..deg).map(|i| ((i + 1) % deg) as u16).collect();
                Permutation::new(images)?
            };
            PermGroup::from_generators(deg, vec![transposition, cycle])
                .map(|g| g.with_name(format!("S{n}")))
        }
        FamilySpec::SemidirectCyclic { n, exponents } => {
            semidirect_cyclic(*n, exponents, &format!("C{n}:{exponents:?}"))
        }
        FamilySpec::Order112A => semidirect_cyclic(56, &[13], "order112A"),
        FamilySpec::Order112B => semidirect_cyclic(56, &[27], "order112B"),
    }
}

/// `C_n x| H` with `H <= (Z/n)^x` generated by `exponents`, each generator
/// acting by `x -> x^e`. Points 0..n-1 carry the translation action of `C_n`
/// twisted by multiplication; H gets its own regular point block, so the
/// representation is faithful of degree `n + #H`.
fn semidirect_cyclic(n: u64, exponents: &[u64], name: &str) -> Result<PermGroup> {
    if n == 0 {
        return Err(Error::InvalidAction("cyclic part of order 0".into()));
    }
    for &e in exponents {
        if num_integer::gcd(e % n, n) != 1 {
            return Err(Error::InvalidAction(format!(
                "exponent {e} is not coprime to {n}, so x -> x^{e} is not an automorphism"
            )));
        }
    }
    // Enumerate H = <exponents> inside (Z/n)^x.
    let mut h_elems = vec![1u64];
    let mut head = 0;
    while head < h_elems.len() {
        let x = h_elems[head];
        for &e in exponents {
            let y = x * (e % n) % n;
            if !h_elems.contains(&y) {
                h_elems.push(y);
            }
        }
        head += 1;
    }
    h_elems.sort_unstable();
    let h_order = h_elems.len();
    let h_pos: HashMap<u64, usize> = h_elems.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let deg = n as usize + h_order;
    let mut gens = Vec::new();
    // Translation by 1 on the cyclic block.
    let mut images: Vec<u16> = (0..deg as u16).collect();
    for i in 0..n as usize {
        images[i] = ((i + 1) % n as usize) as u16;
    }
    gens.push(Permutation::new(images)?);
    // One generator per exponent: multiplication on the cyclic block,
    // translation on the H block.
    for &e in exponents {
        let e = e % n;
        let mut images: Vec<u16> = (0..deg as u16).collect();
        for i in 0..n as usize {
            images[i] = ((i as u64 * e) % n) as u16;
        }
        for (j, &x) in h_elems.iter().enumerate() {
            let y = x * e % n;
            images[n as usize + j] = (n as usize + h_pos[&y]) as u16;
        }
        gens.push(Permutation::new(images)?);
    }
    PermGroup::from_generators(deg, gens).map(|g| g.with_name(name))
}

/// Parse a family spec string such as `cyclic(7)`, `dihedral(5)`,
/// `quaternion8`, `symmetric(4)`, `semidirect(56;13)`, `order112A`.
pub fn parse_family(text: &str) -> Result<FamilySpec> {
    let t = text.trim();
    let lower = t.to_ascii_lowercase();
    let arg = |s: &str| -> Result<u64> {
        s.trim()
            .parse::<u64>()
            .map_err(|_| Error::UnknownFamily(text.to_string()))
    };
    if let Some(rest) = lower.strip_prefix("cyclic(").and_then(|r| r.strip_suffix(')')) {
        return Ok(FamilySpec::Cyclic(arg(rest)?));
    }
    if let Some(rest) = lower.strip_prefix("dihedral(").and_then(|r| r.strip_suffix(')')) {
        return Ok(FamilySpec::Dihedral(arg(rest)?));
    }
    if lower == "quaternion8" || lower == "q8" {
        return Ok(FamilySpec::Quaternion8);
    }
    if let Some(rest) = lower.strip_prefix("symmetric(").and_then(|r| r.strip_suffix(')')) {
        return Ok(FamilySpec::Symmetric(arg(rest)? as u32));
    }
    if let Some(rest) = lower
        .strip_prefix("semidirect(")
        .and_then(|r| r.strip_suffix(')'))
    {
        let mut parts = rest.split(';');
        let n = arg(parts.next().unwrap_or(""))?;
        let exps: Vec<u64> = parts
            .next()
            .unwrap_or("")
            .split(',')
            .filter(|s| !s.trim().is_empty())
            .map(arg)
            .collect::<Result<_>>()?;
        if exps.is_empty() {
            return Err(Error::UnknownFamily(text.to_string()));
        }
        return Ok(FamilySpec::SemidirectCyclic { n, exponents: exps });
    }
    if lower == "order112a" {
        return Ok(FamilySpec::Order112A);
    }
    if lower == "order112b" {
        return Ok(FamilySpec::Order112B);
    }
    Err(Error::UnknownFamily(text.to_string()))
}

/// Parse the group file format: `degree <n>` on the first effective line,
/// then `gen <cycles>` lines with 0-based points. Blank lines and `#`
/// comments are ignored.
pub fn parse_group_file(text: &str) -> Result<PermGroup> {
    let mut degree: Option<usize> = None;
    let mut gens = Vec::new();
    let mut name = String::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            if let Some(rest) = raw.trim().strip_prefix("# name:") {
                name = rest.trim().to_string();
            }
            continue;
        }
        let (key, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        match key {
            "degree" => {
                let d = rest.trim().parse::<usize>().map_err(|_| Error::GroupFileParse {
                    line: lineno + 1,
                    msg: format!("bad degree '{rest}'"),
                })?;
                degree = Some(d);
            }
            "gen" => {
                let d = degree.ok_or(Error::GroupFileParse {
                    line: lineno + 1,
                    msg: "gen before degree".into(),
                })?;
                let p = Permutation::parse_cycles(d, rest).map_err(|e| Error::GroupFileParse {
                    line: lineno + 1,
                    msg: e.to_string(),
                })?;
                gens.push(p);
            }
            other => {
                return Err(Error::GroupFileParse {
                    line: lineno + 1,
                    msg: format!("unknown directive '{other}'"),
                })
            }
        }
    }
    let degree = degree.ok_or(Error::GroupFileParse {
        line: 0,
        msg: "missing degree line".into(),
    })?;
    PermGroup::from_generators(degree, gens).map(|g| g.with_name(name))
}

/// Serialize a group to the group file format.
pub fn write_group_file(group: &PermGroup) -> String {
    let mut out = String::new();
    if !group.name().is_empty() {
        let _ = writeln!(out, "# name: {}", group.name());
    }
    let _ = writeln!(out, "degree {}", group.degree());
    for g in group.generators() {
        let _ = writeln!(out, "gen {g}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> PermGroup {
        make_family(&FamilySpec::Symmetric(3)).unwrap()
    }

    #[test]
    fn s3_closure() {
        let g = s3();
        assert_eq!(g.order(), 6);
        // Permuting the generator list yields the same element set.
        let gens: Vec<Permutation> = g.generators().iter().rev().cloned().collect();
        let g2 = PermGroup::from_generators(3, gens).unwrap();
        let mut a: Vec<_> = g.elements().to_vec();
        let mut b: Vec<_> = g2.elements().to_vec();
        a.sort();
        b.sort();
        assert_eq!(a, b);
    }

    #[test]
    fn trivial_group() {
        let g = PermGroup::from_generators(1, vec![]).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.conjugacy_classes().class_count(), 1);
    }

    #[test]
    fn order_bound() {
        let gens = vec![
            Permutation::parse_cycles(7, "(0 1 2 3 4 5 6)").unwrap(),
            Permutation::parse_cycles(7, "(0 1)").unwrap(),
        ];
        assert!(matches!(
            PermGroup::from_generators_bounded(7, gens, 100),
            Err(Error::OrderBoundExceeded { .. })
        ));
    }

    #[test]
    fn conjugacy_s3() {
        let g = s3();
        let cc = g.conjugacy_classes();
        assert_eq!(cc.class_sizes, vec![1, 2, 3]);
        let total: usize = cc.class_sizes.iter().sum();
        assert_eq!(total, g.order());
        for c in 0..cc.class_count() {
            assert_eq!(g.order() % cc.class_sizes[c], 0);
            assert_eq!(cc.power_map(&g, c, 1), c);
        }
        assert_eq!(cc.inverse_class[cc.inverse_class[1]], 1);
    }

    #[test]
    fn conjugacy_c4_q8() {
        let c4 = make_family(&FamilySpec::Cyclic(4)).unwrap();
        assert_eq!(c4.conjugacy_classes().class_sizes, vec![1, 1, 1, 1]);
        let q8 = make_family(&FamilySpec::Quaternion8).unwrap();
        assert_eq!(q8.order(), 8);
        assert_eq!(q8.conjugacy_classes().class_sizes, vec![1, 1, 2, 2, 2]);
    }

    #[test]
    fn derived_s3() {
        let g = s3();
        let d = g.derived_subgroup().unwrap();
        assert_eq!(d.subgroup.order(), 3);
        assert_eq!(d.abelian_invariants, vec![2]);
    }

    #[test]
    fn derived_abelian_trivial() {
        let g = make_family(&FamilySpec::Cyclic(12)).unwrap();
        let d = g.derived_subgroup().unwrap();
        assert_eq!(d.subgroup.order(), 1);
        assert_eq!(d.abelian_invariants, vec![12]);
    }

    #[test]
    fn cyclic_family() {
        let g = make_family(&FamilySpec::Cyclic(7)).unwrap();
        assert_eq!(g.order(), 7);
        assert!(g.is_abelian());
        assert_eq!(g.exponent(), 7);
    }

    #[test]
    fn order112_families() {
        let a = make_family(&FamilySpec::Order112A).unwrap();
        assert_eq!(a.order(), 112);
        assert_eq!(a.degree(), 58);
        let da = a.derived_subgroup().unwrap();
        assert_eq!(da.subgroup.order(), 14);
        assert_eq!(da.abelian_invariants, vec![2, 4]);

        let b = make_family(&FamilySpec::Order112B).unwrap();
        assert_eq!(b.order(), 112);
        let db = b.derived_subgroup().unwrap();
        assert_eq!(db.subgroup.order(), 28);
        assert_eq!(db.abelian_invariants, vec![2, 2]);
    }

    #[test]
    fn semidirect_rejects_non_automorphism() {
        let bad = FamilySpec::SemidirectCyclic {
            n: 8,
            exponents: vec![2],
        };
        assert!(matches!(make_family(&bad), Err(Error::InvalidAction(_))));
    }

    #[test]
    fn group_file_roundtrip() {
        let g = s3();
        let text = write_group_file(&g);
        let g2 = parse_group_file(&text).unwrap();
        assert_eq!(g2.order(), 6);
        assert_eq!(g2.degree(), 3);
    }

    #[test]
    fn group_file_comments_and_errors() {
        let ok = "# a comment\n\ndegree 3\ngen (0 1 2) # trailing\ngen (0 1)\n";
        assert_eq!(parse_group_file(ok).unwrap().order(), 6);
        assert!(parse_group_file("gen (0 1)\n").is_err());
        assert!(parse_group_file("degree 2\ngen (0 5)\n").is_err());
    }

    #[test]
    fn class_equation_families() {
        for spec in [
            FamilySpec::Cyclic(9),
            FamilySpec::Dihedral(6),
            FamilySpec::Symmetric(4),
            FamilySpec::Quaternion8,
            FamilySpec::SemidirectCyclic { n: 7, exponents: vec![2] },
        ] {
            let g = make_family(&spec).unwrap();
            let cc = g.conjugacy_classes();
            assert_eq!(cc.class_sizes.iter().sum::<usize>(), g.order());
            assert_eq!(cc.class_sizes[0], 1);
            assert!(cc.class_sizes.iter().all(|s| g.order() % s == 0));
        }
    }
}
