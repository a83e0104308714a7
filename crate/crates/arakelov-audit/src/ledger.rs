//! Exact arithmetic in the rational Grothendieck group G_0(Q[G]) through
//! virtual characters: permutation-module classes, the duality involution,
//! archimedean classes built from inertia data, rational identity
//! verification, and reconstruction of cyclic-stabilizer G-sets from their
//! permutation classes.

use crate::chartab::CharacterTable;
use crate::cyclo::Cyclotomic;
use crate::group::PermGroup;
use crate::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

/// An element of G_0(Q[G]): an integer vector indexed by the character
/// table rows.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VirtualClass(pub Vec<i64>);

impl VirtualClass {
    pub fn zero(k: usize) -> Self {
        VirtualClass(vec![0; k])
    }

    pub fn add(&self, other: &VirtualClass) -> VirtualClass {
        VirtualClass(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &VirtualClass) -> VirtualClass {
        VirtualClass(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: i64) -> VirtualClass {
        VirtualClass(self.0.iter().map(|a| a * k).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }

    /// Index of the first coordinate where the classes differ.
    pub fn first_difference(&self, other: &VirtualClass) -> Option<usize> {
        self.0.iter().zip(&other.0).position(|(a, b)| a != b)
    }
}

/// The class of the regular representation: coefficients are the degrees.
pub fn regular_class(table: &CharacterTable) -> VirtualClass {
    VirtualClass(table.degrees().iter().map(|&d| d as i64).collect())
}

/// The class of the trivial module.
pub fn trivial_class(table: &CharacterTable) -> VirtualClass {
    let mut v = VirtualClass::zero(table.class_count());
    let triv = table
        .characters
        .iter()
        .position(|c| {
            c.degree == 1
                && c.values
                    .iter()
                    .all(|x| x.to_integer().map(|z| z == BigInt::one()).unwrap_or(false))
        })
        .expect("trivial character present");
    v.0[triv] = 1;
    v
}

/// A subgroup given by its sorted element indices.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Subgroup {
    pub elements: Vec<usize>,
}

impl Subgroup {
    pub fn trivial() -> Self {
        Subgroup { elements: vec![0] }
    }

    pub fn whole(group: &PermGroup) -> Self {
        Subgroup {
            elements: (0..group.order()).collect(),
        }
    }

    pub fn generated(group: &PermGroup, gens: &[usize]) -> Self {
        let mut elems = vec![0usize];
        let mut head = 0;
        while head < elems.len() {
            let x = elems[head];
            for &g in gens {
                let y = group.mul(x, g);
                if !elems.contains(&y) {
                    elems.push(y);
                }
            }
            head += 1;
        }
        elems.sort_unstable();
        Subgroup { elements: elems }
    }

    /// Validate closedness of an element list.
    pub fn from_elements(group: &PermGroup, mut elements: Vec<usize>) -> Result<Self> {
        elements.sort_unstable();
        elements.dedup();
        if !elements.contains(&0) {
            return Err(Error::NotASubgroup("missing identity".into()));
        }
        for &a in &elements {
            for &b in &elements {
                if elements.binary_search(&group.mul(a, b)).is_err() {
                    return Err(Error::NotASubgroup(format!(
                        "product of elements {a}, {b} escapes the subset"
                    )));
                }
            }
        }
        Ok(Subgroup { elements })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }
}

/// A formal G-set: orbits given by stabilizer subgroups with multiplicities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GSetSpec {
    pub orbits: Vec<(Subgroup, usize)>,
}

impl GSetSpec {
    pub fn new(orbits: Vec<(Subgroup, usize)>) -> Result<Self> {
        if orbits.iter().any(|&(_, m)| m == 0) {
            return Err(Error::InvalidSignature("zero multiplicity orbit".into()));
        }
        Ok(GSetSpec { orbits })
    }
}

/// Archimedean signature of a hypothetical Galois extension F/K with group
/// G: counts of real places of K that stay split, real places with inertia
/// of order 2, and complex places.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SignatureSpec {
    pub real_split: usize,
    pub real_inert: usize,
    pub complex: usize,
    /// Element index generating the inertia at inert real places; when
    /// absent the minimal order-2 element is used.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub involution: Option<usize>,
}

impl SignatureSpec {
    /// Degree of the base field K over Q forced by the signature.
    pub fn degree(&self) -> u64 {
        (self.real_split + self.real_inert + 2 * self.complex) as u64
    }

    fn inertia(&self, group: &PermGroup) -> Result<Subgroup> {
        if self.real_inert == 0 {
            return Ok(Subgroup::trivial());
        }
        let tau = match self.involution {
            Some(t) => {
                if t >= group.order() || group.element_order(t) != 2 {
                    return Err(Error::InvalidSignature(format!(
                        "element {t} is not an involution"
                    )));
                }
                t
            }
            None => (1..group.order())
                .find(|&t| group.element_order(t) == 2)
                .ok_or_else(|| {
                    Error::InvalidSignature(
                        "no involution available for an inert real place".into(),
                    )
                })?,
        };
        Ok(Subgroup::generated(group, &[tau]))
    }

    /// The G-set of archimedean places of F.
    pub fn to_gset(&self, group: &PermGroup) -> Result<GSetSpec> {
        let mut orbits = Vec::new();
        let trivial_count = self.real_split + self.complex;
        if trivial_count > 0 {
            orbits.push((Subgroup::trivial(), trivial_count));
        }
        if self.real_inert > 0 {
            orbits.push((self.inertia(group)?, self.real_inert));
        }
        GSetSpec::new(orbits)
    }
}

/// Class of the permutation module Q[S] for a formal G-set: the coefficient
/// of chi is the sum over orbits of mult * <chi|_H, 1>, computed by exact
/// summation over H.
pub fn perm_class(
    group: &PermGroup,
    table: &CharacterTable,
    spec: &GSetSpec,
) -> Result<VirtualClass> {
    let k = table.class_count();
    let mut out = VirtualClass::zero(k);
    for (sub, mult) in &spec.orbits {
        Subgroup::from_elements(group, sub.elements.clone())?;
        for (i, ch) in table.characters.iter().enumerate() {
            let mut acc = Cyclotomic::zero(table.exponent);
            for &h in &sub.elements {
                acc = acc.add(&ch.values[table.conjugacy.class_of[h]]);
            }
            let quotient = acc
                .div_exact(&BigInt::from(sub.order() as u64))
                .ok_or_else(|| {
                    Error::Inconsistency("inner product with 1 is not integral".into())
                })?;
            let m = quotient
                .to_integer()
                .and_then(|z| z.to_i64())
                .ok_or_else(|| {
                    Error::Inconsistency("inner product with 1 is not rational".into())
                })?;
            if m < 0 {
                return Err(Error::Inconsistency(
                    "negative multiplicity in a permutation character".into(),
                ));
            }
            out.0[i] += m * *mult as i64;
        }
    }
    Ok(out)
}

/// The duality involution sigma: permutes coefficients by complex
/// conjugation of characters.
pub fn sigma_dual(v: &VirtualClass, table: &CharacterTable) -> VirtualClass {
    let perm = table.conjugation_permutation();
    let mut out = VirtualClass::zero(v.0.len());
    for (i, &coeff) in v.0.iter().enumerate() {
        out.0[perm[i]] += coeff;
    }
    out
}

/// The rational class of the dual of the maximal-compact part at infinity:
/// sum over places v of delta_v * [regular] - [Q[G/I_v]], with delta = 1
/// for real and 2 for complex places. Each orbit kind is cross-checked
/// against the induced-module route for tau_v.
pub fn archimedean_class(
    group: &PermGroup,
    table: &CharacterTable,
    sig: &SignatureSpec,
) -> Result<VirtualClass> {
    let reg = regular_class(table);
    let mut acc = VirtualClass::zero(table.class_count());
    // split real places: tau_v = F_2 is rationally zero and
    // reg - perm(G/1) = 0; the check is trivial but kept explicit.
    if sig.real_split > 0 {
        let perm = perm_class(group, table, &GSetSpec::new(vec![(Subgroup::trivial(), 1)])?)?;
        let contribution = reg.sub(&perm);
        if !contribution.is_zero() {
            return Err(Error::Inconsistency(
                "split real place: regular class differs from the free orbit class".into(),
            ));
        }
    }
    // inert real places: tau_v = sign character of I_v induced up; must
    // equal reg - perm(G/I_v).
    if sig.real_inert > 0 {
        let inertia = sig.inertia(group)?;
        if inertia.order() != 2 {
            return Err(Error::InvalidSignature(
                "inert real place requires inertia of order 2".into(),
            ));
        }
        let tau = inertia.elements[1];
        let perm = perm_class(group, table, &GSetSpec::new(vec![(inertia.clone(), 1)])?)?;
        let lemma_route = reg.sub(&perm);
        // induced route: <chi|_I, sign> = (chi(1) - chi(tau)) / 2 exactly
        let mut induced = VirtualClass::zero(table.class_count());
        for (i, ch) in table.characters.iter().enumerate() {
            let diff = ch.values[0].sub(&ch.values[table.conjugacy.class_of[tau]]);
            let half = diff.div_exact(&BigInt::from(2)).ok_or_else(|| {
                Error::Inconsistency("sign-character inner product not integral".into())
            })?;
            induced.0[i] = half.to_integer().and_then(|z| z.to_i64()).ok_or_else(|| {
                Error::Inconsistency("sign-character inner product not rational".into())
            })?;
        }
        if induced != lemma_route {
            return Err(Error::Inconsistency(
                "inert real place: induced sign class differs from reg - perm(G/I)".into(),
            ));
        }
        acc = acc.add(&lemma_route.scale(sig.real_inert as i64));
    }
    // complex places: tau_v = Z induced from the trivial subgroup is the
    // regular class; 2 reg - perm(G/1) = reg.
    if sig.complex > 0 {
        let perm = perm_class(group, table, &GSetSpec::new(vec![(Subgroup::trivial(), 1)])?)?;
        let route = reg.scale(2).sub(&perm);
        if route != reg {
            return Err(Error::Inconsistency(
                "complex place: 2 reg - perm(G/1) differs from reg".into(),
            ));
        }
        acc = acc.add(&reg.scale(sig.complex as i64));
    }
    Ok(acc)
}

/// Inputs for the rational identity verification.
#[derive(Debug, Clone)]
pub struct ArithmeticInputs {
    /// Degree of the base field K over Q.
    pub degree_over_q: u64,
    pub signature: SignatureSpec,
    /// Rational class of the roots of unity; zero for the finite module.
    pub mu_class: VirtualClass,
    /// Rational class of Q (x) O_F^x.
    pub unit_class: VirtualClass,
}

impl ArithmeticInputs {
    /// Dirichlet-consistent inputs: unit_class = perm(S_inf) - [triv].
    pub fn consistent(
        group: &PermGroup,
        table: &CharacterTable,
        signature: SignatureSpec,
    ) -> Result<Self> {
        let perm = perm_class(group, table, &signature.to_gset(group)?)?;
        let unit_class = perm.sub(&trivial_class(table));
        Ok(ArithmeticInputs {
            degree_over_q: signature.degree(),
            signature,
            mu_class: VirtualClass::zero(table.class_count()),
            unit_class,
        })
    }
}

/// One identity check with an optional witness character on failure.
#[derive(Debug, Clone, Serialize)]
pub struct IdentityCheck {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<IdentityWitness>,
}

#[derive(Debug, Clone, Serialize)]
pub struct IdentityWitness {
    pub character_index: usize,
    pub character_degree: u64,
    pub lhs_coefficient: i64,
    pub rhs_coefficient: i64,
}

#[derive(Debug, Clone, Serialize)]
pub struct RationalCheckReport {
    pub checks: Vec<IdentityCheck>,
    pub all_pass: bool,
}

fn check_equal(
    name: &str,
    lhs: &VirtualClass,
    rhs: &VirtualClass,
    table: &CharacterTable,
) -> IdentityCheck {
    match lhs.first_difference(rhs) {
        None => IdentityCheck {
            name: name.into(),
            pass: true,
            witness: None,
        },
        Some(i) => IdentityCheck {
            name: name.into(),
            pass: false,
            witness: Some(IdentityWitness {
                character_index: i,
                character_degree: table.characters[i].degree,
                lhs_coefficient: lhs.0[i],
                rhs_coefficient: rhs.0[i],
            }),
        },
    }
}

/// Verify the rational-level identities: the Dirichlet relation on the unit
/// class, rational vanishing of the roots-of-unity class, and agreement of
/// the two routes to the difference class (one assembled from the stated
/// identities, one from the archimedean lemma).
pub fn verify_conjecture_rational(
    group: &PermGroup,
    table: &CharacterTable,
    inputs: &ArithmeticInputs,
) -> Result<RationalCheckReport> {
    if inputs.degree_over_q != inputs.signature.degree() {
        return Err(Error::InvalidSignature(format!(
            "stated degree {} conflicts with the signature degree {}",
            inputs.degree_over_q,
            inputs.signature.degree()
        )));
    }
    let k = table.class_count();
    if inputs.mu_class.0.len() != k || inputs.unit_class.0.len() != k {
        return Err(Error::InvalidSignature(
            "class vector length does not match the character count".into(),
        ));
    }
    let d = inputs.degree_over_q as i64;
    let reg = regular_class(table);
    let triv = trivial_class(table);
    let s_inf = perm_class(group, table, &inputs.signature.to_gset(group)?)?;
    let mut checks = Vec::new();

    // (i) Dirichlet: unit_class - perm(S_inf) + [triv] = 0.
    let lhs = inputs.unit_class.sub(&s_inf).add(&triv);
    checks.push(check_equal(
        "dirichlet-unit-relation",
        &lhs,
        &VirtualClass::zero(k),
        table,
    ));

    // roots of unity are finite, so their rational class vanishes.
    checks.push(check_equal(
        "mu-rationally-zero",
        &inputs.mu_class,
        &VirtualClass::zero(k),
        table,
    ));

    // (ii) difference of the two stated identities: assembled from the
    // statement sides it is d*reg - triv - (perm(S_inf) - triv - sigma(mu));
    // the independent route is the archimedean class plus sigma(mu).
    let sigma_mu = sigma_dual(&inputs.mu_class, table);
    let statement_route = reg
        .scale(d)
        .sub(&triv)
        .sub(&s_inf.sub(&triv).sub(&sigma_mu));
    let lemma_route = archimedean_class(group, table, &inputs.signature)?.add(&sigma_mu);
    checks.push(check_equal(
        "difference-class-two-routes",
        &statement_route,
        &lemma_route,
        table,
    ));

    let all_pass = checks.iter().all(|c| c.pass);
    Ok(RationalCheckReport { checks, all_pass })
}

/// Conjugacy-class representatives of the cyclic subgroups of G, sorted by
/// (order, elements).
pub fn cyclic_subgroup_classes(group: &PermGroup) -> Vec<Subgroup> {
    let mut subgroups: Vec<Vec<usize>> = Vec::new();
    for e in 0..group.order() {
        let s = Subgroup::generated(group, &[e]).elements;
        if !subgroups.contains(&s) {
            subgroups.push(s);
        }
    }
    // conjugacy: canonical representative is the minimal conjugate set
    let mut reps: Vec<Vec<usize>> = Vec::new();
    for s in &subgroups {
        let mut best = s.clone();
        for g in 0..group.order() {
            let mut conj: Vec<usize> = s
                .iter()
                .map(|&x| group.mul(group.mul(group.inv(g), x), g))
                .collect();
            conj.sort_unstable();
            if conj < best {
                best = conj;
            }
        }
        if !reps.contains(&best) {
            reps.push(best);
        }
    }
    reps.sort_by_key(|s| (s.len(), s.clone()));
    reps.into_iter()
        .map(|elements| Subgroup { elements })
        .collect()
}

/// Reconstruct a cyclic-stabilizer G-set from its permutation class: solve
/// for non-negative integer multiplicities of the transitive classes G/C
/// over the cyclic subgroup classes C. Those permutation characters are
/// linearly independent, so a solution is unique when it exists.
pub fn artin_reconstruct(
    group: &PermGroup,
    table: &CharacterTable,
    v: &VirtualClass,
) -> Result<GSetSpec> {
    let cyclics = cyclic_subgroup_classes(group);
    let k = table.class_count();
    let columns: Vec<VirtualClass> = cyclics
        .iter()
        .map(|c| perm_class(group, table, &GSetSpec::new(vec![(c.clone(), 1)]).unwrap()))
        .collect::<Result<_>>()?;
    // exact rational elimination on [A | v]
    let m = cyclics.len();
    let mut mat: Vec<Vec<BigRational>> = (0..k)
        .map(|r| {
            let mut row: Vec<BigRational> = columns
                .iter()
                .map(|c| BigRational::from(BigInt::from(c.0[r])))
                .collect();
            row.push(BigRational::from(BigInt::from(v.0[r])));
            row
        })
        .collect();
    let mut pivot_of_col = vec![usize::MAX; m];
    let mut row = 0usize;
    for col in 0..m {
        let Some(pr) = (row..k).find(|&r| !mat[r][col].is_zero()) else {
            continue;
        };
        mat.swap(row, pr);
        let inv = mat[row][col].recip();
        for c in 0..=m {
            mat[row][c] = &mat[row][c] * &inv;
        }
        for r in 0..k {
            if r != row && !mat[r][col].is_zero() {
                let f = mat[r][col].clone();
                for c in 0..=m {
                    let t = &f * &mat[row][c];
                    mat[r][c] = &mat[r][c] - &t;
                }
            }
        }
        pivot_of_col[col] = row;
        row += 1;
    }
    // consistency: residual rows must vanish on the rhs
    for r in row..k {
        if !mat[r][m].is_zero() {
            return Err(Error::Inconsistency(
                "class is not a cyclic-stabilizer permutation class (inconsistent system)".into(),
            ));
        }
    }
    let mut orbits = Vec::new();
    for (col, cyc) in cyclics.iter().enumerate() {
        let value = if pivot_of_col[col] == usize::MAX {
            BigRational::zero()
        } else {
            mat[pivot_of_col[col]][m].clone()
        };
        if value.is_zero() {
            continue;
        }
        if !value.is_integer() || value.is_negative() {
            return Err(Error::Inconsistency(
                "no non-negative integer combination of cyclic-stabilizer classes".into(),
            ));
        }
        let mult = value
            .to_integer()
            .to_usize()
            .ok_or_else(|| Error::Inconsistency("multiplicity out of range".into()))?;
        orbits.push((cyc.clone(), mult));
    }
    GSetSpec::new(orbits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{make_family, FamilySpec};

    fn setup(spec: FamilySpec) -> (PermGroup, CharacterTable) {
        let g = make_family(&spec).unwrap();
        let t = CharacterTable::compute(&g).unwrap();
        (g, t)
    }

    #[test]
    fn perm_class_examples() {
        let (g, t) = setup(FamilySpec::Symmetric(3));
        // free orbit: regular character
        let reg = perm_class(
            &g,
            &t,
            &GSetSpec::new(vec![(Subgroup::trivial(), 1)]).unwrap(),
        )
        .unwrap();
        assert_eq!(reg, regular_class(&t));
        // full stabilizer: trivial class
        let triv = perm_class(
            &g,
            &t,
            &GSetSpec::new(vec![(Subgroup::whole(&g), 1)]).unwrap(),
        )
        .unwrap();
        assert_eq!(triv, trivial_class(&t));
        // S3 / C2: coefficients (1, 0, 1) against (trivial, sign, 2-dim)
        let c2 = (1..6).find(|&e| g.element_order(e) == 2).unwrap();
        let sub = Subgroup::generated(&g, &[c2]);
        let v = perm_class(&g, &t, &GSetSpec::new(vec![(sub, 1)]).unwrap()).unwrap();
        assert_eq!(v.0, vec![1, 0, 1]);
    }

    #[test]
    fn sigma_examples() {
        let (_, t) = setup(FamilySpec::Symmetric(3));
        let v = VirtualClass(vec![2, -1, 3]);
        assert_eq!(sigma_dual(&v, &t), v); // all characters real

        let (_, t3) = setup(FamilySpec::Cyclic(3));
        let v = VirtualClass(vec![0, 1, 0]);
        assert_eq!(sigma_dual(&v, &t3).0, vec![0, 0, 1]);
        // involution
        assert_eq!(sigma_dual(&sigma_dual(&v, &t3), &t3), v);
        // regular class fixed
        let reg = regular_class(&t3);
        assert_eq!(sigma_dual(&reg, &t3), reg);
    }

    #[test]
    fn sigma_fixes_permutation_classes() {
        let (g, t) = setup(FamilySpec::Quaternion8);
        for e in 0..g.order() {
            let sub = Subgroup::generated(&g, &[e]);
            let v = perm_class(&g, &t, &GSetSpec::new(vec![(sub, 1)]).unwrap()).unwrap();
            assert_eq!(sigma_dual(&v, &t), v);
        }
    }

    #[test]
    fn archimedean_examples() {
        // trivial group, one complex place: class = regular = (1)
        let g = PermGroup::from_generators(1, vec![]).unwrap();
        let t = CharacterTable::compute(&g).unwrap();
        let sig = SignatureSpec {
            real_split: 0,
            real_inert: 0,
            complex: 1,
            involution: None,
        };
        let v = archimedean_class(&g, &t, &sig).unwrap();
        assert_eq!(v.0, vec![1]);

        // C2 with one inert real place: the sign character
        let (g2, t2) = setup(FamilySpec::Cyclic(2));
        let sig = SignatureSpec {
            real_split: 0,
            real_inert: 1,
            complex: 0,
            involution: None,
        };
        let v = archimedean_class(&g2, &t2, &sig).unwrap();
        assert_eq!(v.0, vec![0, 1]);

        // C2 with one split real place: zero
        let sig = SignatureSpec {
            real_split: 1,
            real_inert: 0,
            complex: 0,
            involution: None,
        };
        let v = archimedean_class(&g2, &t2, &sig).unwrap();
        assert!(v.is_zero());
    }

    #[test]
    fn archimedean_equals_d_reg_minus_perm() {
        let (g, t) = setup(FamilySpec::Dihedral(4));
        let sig = SignatureSpec {
            real_split: 1,
            real_inert: 2,
            complex: 1,
            involution: None,
        };
        let v = archimedean_class(&g, &t, &sig).unwrap();
        let d = sig.degree() as i64;
        let expected = regular_class(&t)
            .scale(d)
            .sub(&perm_class(&g, &t, &sig.to_gset(&g).unwrap()).unwrap());
        assert_eq!(v, expected);
    }

    #[test]
    fn verify_identities_pass_and_fail() {
        let (g, t) = setup(FamilySpec::Symmetric(3));
        let sig = SignatureSpec {
            real_split: 0,
            real_inert: 1,
            complex: 0,
            involution: None,
        };
        let inputs = ArithmeticInputs::consistent(&g, &t, sig.clone()).unwrap();
        let report = verify_conjecture_rational(&g, &t, &inputs).unwrap();
        assert!(report.all_pass, "{report:?}");

        // perturb the unit class by +[triv]: Dirichlet check fails with the
        // trivial character as witness
        let mut bad = inputs.clone();
        bad.unit_class = bad.unit_class.add(&trivial_class(&t));
        let report = verify_conjecture_rational(&g, &t, &bad).unwrap();
        assert!(!report.all_pass);
        let failing = report.checks.iter().find(|c| !c.pass).unwrap();
        assert_eq!(failing.name, "dirichlet-unit-relation");
        let witness = failing.witness.as_ref().unwrap();
        assert_eq!(witness.character_degree, 1);
    }

    #[test]
    fn c2_difference_class_is_sign() {
        let (g, t) = setup(FamilySpec::Cyclic(2));
        let sig = SignatureSpec {
            real_split: 0,
            real_inert: 1,
            complex: 0,
            involution: None,
        };
        let inputs = ArithmeticInputs::consistent(&g, &t, sig).unwrap();
        let report = verify_conjecture_rational(&g, &t, &inputs).unwrap();
        assert!(report.all_pass);
        // difference class = reg - perm(G/C2) = sign character
        let diff = regular_class(&t).sub(
            &perm_class(
                &g,
                &t,
                &GSetSpec::new(vec![(Subgroup::whole(&g), 1)]).unwrap(),
            )
            .unwrap(),
        );
        assert_eq!(diff.0, vec![0, 1]);
    }

    #[test]
    fn artin_roundtrip_s4() {
        let (g, t) = setup(FamilySpec::Symmetric(4));
        for sub in cyclic_subgroup_classes(&g) {
            let spec = GSetSpec::new(vec![(sub.clone(), 1)]).unwrap();
            let v = perm_class(&g, &t, &spec).unwrap();
            let rec = artin_reconstruct(&g, &t, &v).unwrap();
            assert_eq!(rec.orbits.len(), 1);
            assert_eq!(rec.orbits[0].0.order(), sub.order());
            assert_eq!(rec.orbits[0].1, 1);
        }
        // regular class: the trivial subgroup with multiplicity 1
        let reg = regular_class(&t);
        let rec = artin_reconstruct(&g, &t, &reg).unwrap();
        assert_eq!(rec.orbits.len(), 1);
        assert_eq!(rec.orbits[0].0.order(), 1);
    }

    #[test]
    fn artin_failure_case() {
        let (g, t) = setup(FamilySpec::Symmetric(3));
        // the 2-dimensional character alone is not a permutation class
        let v = VirtualClass(vec![0, 0, 1]);
        assert!(artin_reconstruct(&g, &t, &v).is_err());
    }

    #[test]
    fn perm_class_additive_over_disjoint_unions() {
        let (g, t) = setup(FamilySpec::Dihedral(5));
        let c2 = (1..g.order()).find(|&e| g.element_order(e) == 2).unwrap();
        let a = GSetSpec::new(vec![(Subgroup::trivial(), 1)]).unwrap();
        let b = GSetSpec::new(vec![(Subgroup::generated(&g, &[c2]), 2)]).unwrap();
        let both = GSetSpec::new(vec![
            (Subgroup::trivial(), 1),
            (Subgroup::generated(&g, &[c2]), 2),
        ])
        .unwrap();
        let va = perm_class(&g, &t, &a).unwrap();
        let vb = perm_class(&g, &t, &b).unwrap();
        let vboth = perm_class(&g, &t, &both).unwrap();
        assert_eq!(va.add(&vb), vboth);
    }
}
