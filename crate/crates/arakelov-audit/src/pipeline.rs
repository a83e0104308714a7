//! Orchestration: the per-group audit tying together character tables,
//! Galois orbits, character fields and class-group obstructions, plus the
//! corpus scan and the bundled constructible corpus of groups of order
//! below 112.

use crate::chartab::CharacterTable;
use crate::fields::{obstruction_group, ClassData, ClassDataTable, ObstructionReport};
use crate::group::{make_family, parse_group_file, FamilySpec, PermGroup};
use crate::perm::Permutation;
use crate::Result;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::path::Path;

/// Prime divisors of 2 * order: the worst-case set of retained primes for
/// the obstruction quotient (certifying triviality against all of them
/// certifies it for every admissible localization).
pub fn bad_primes(order: usize) -> Vec<u64> {
    let mut primes = crate::modp::factor(2 * order as u64)
        .into_iter()
        .map(|(p, _)| p)
        .collect::<Vec<_>>();
    primes.sort_unstable();
    primes
}

#[derive(Debug, Clone, Serialize)]
pub struct GroupMeta {
    pub name: String,
    pub order: usize,
    pub degree: usize,
    pub class_count: usize,
    pub exponent: u64,
    pub abelian: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct FieldMeta {
    pub conductor: u64,
    pub subgroup: Vec<u64>,
    pub degree: u64,
    pub totally_real: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassDataSummary {
    pub h: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h_narrow: Option<u64>,
    pub cl_structure: Vec<u64>,
    pub provenance: String,
}

impl ClassDataSummary {
    fn from(data: &ClassData) -> Self {
        ClassDataSummary {
            h: data.h,
            h_narrow: data.h_narrow,
            cl_structure: data.cl_structure.clone(),
            provenance: data.provenance.clone(),
        }
    }
}

/// Per-Galois-orbit audit record.
#[derive(Debug, Clone, Serialize)]
pub struct OrbitRecord {
    pub representative: usize,
    pub degree: u64,
    pub orbit_size: usize,
    pub symplectic: bool,
    pub field: FieldMeta,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub class_data: Option<ClassDataSummary>,
    pub obstruction: ObstructionReport,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    CriterionHolds,
    ObstructionFound,
    Inconclusive,
}

/// Full audit output for one group.
#[derive(Debug, Clone, Serialize)]
pub struct AuditReport {
    pub group: GroupMeta,
    pub bad_primes: Vec<u64>,
    pub orbits: Vec<OrbitRecord>,
    pub verdict: Verdict,
    /// What the verdict covers and what is assumed rather than computed.
    pub assumed: String,
}

impl AuditReport {
    /// Exit code contract: 0 holds, 2 obstruction found, 3 inconclusive.
    pub fn exit_code(&self) -> i32 {
        match self.verdict {
            Verdict::CriterionHolds => 0,
            Verdict::ObstructionFound => 2,
            Verdict::Inconclusive => 3,
        }
    }
}

const ASSUMED_NOTE: &str = "Certified: triviality (or not) of the class-group quotients attached \
to the Galois orbits of characters of degree > 1. Assumed, not computed: the abelianized summand, \
which vanishes for extensions whose subfield fixed by the derived subgroup is abelian over Q; the \
verdict therefore applies to Galois extensions F/K with this Galois group satisfying that \
hypothesis.";

/// Audit one group: compute the character table, the Galois orbits of the
/// characters of degree > 1, each orbit's character field and class-group
/// obstruction, and aggregate the verdict. Missing class data degrades the
/// verdict to inconclusive, never to a false certificate.
pub fn audit(group: &PermGroup, class_data: Option<&ClassDataTable>) -> Result<AuditReport> {
    let table = CharacterTable::compute(group)?;
    let bad = bad_primes(group.order());
    let orbits = table.galois_orbits(false)?;
    let mut records = Vec::with_capacity(orbits.len());
    for orbit in &orbits {
        let rep = orbit.representative;
        let symplectic = table.characters[rep].fs_indicator == -1;
        let data = class_data.and_then(|t| t.lookup(&orbit.field));
        let obstruction = obstruction_group(&orbit.field, symplectic, &bad, data);
        records.push(OrbitRecord {
            representative: rep,
            degree: table.characters[rep].degree,
            orbit_size: orbit.members.len(),
            symplectic,
            field: FieldMeta {
                conductor: orbit.field.conductor(),
                subgroup: orbit.field.subgroup().to_vec(),
                degree: orbit.field.degree(),
                totally_real: orbit.field.is_totally_real(),
            },
            class_data: data.map(ClassDataSummary::from),
            obstruction,
        });
    }
    let all_trivial = records
        .iter()
        .all(|r| r.obstruction.is_trivial_certified());
    let any_nontrivial = records
        .iter()
        .any(|r| r.obstruction.is_nontrivial_certified());
    let verdict = if any_nontrivial {
        Verdict::ObstructionFound
    } else if all_trivial {
        Verdict::CriterionHolds
    } else {
        Verdict::Inconclusive
    };
    Ok(AuditReport {
        group: GroupMeta {
            name: group.name().to_string(),
            order: group.order(),
            degree: group.degree(),
            class_count: table.class_count(),
            exponent: table.exponent,
            abelian: group.is_abelian(),
        },
        bad_primes: bad,
        orbits: records,
        verdict,
        assumed: ASSUMED_NOTE.to_string(),
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct ScanEntry {
    pub file: String,
    pub group_name: String,
    pub order: usize,
    pub verdict: Verdict,
    /// For non-holds entries: which orbits were inconclusive or obstructed
    /// and why.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub reasons: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ScanError {
    pub file: String,
    pub error: String,
}

/// Scan summary: verdict counts, every non-holds entry, per-order coverage.
#[derive(Debug, Clone, Serialize)]
pub struct ScanSummary {
    pub total_files: usize,
    pub criterion_holds: usize,
    pub obstruction_found: usize,
    pub inconclusive: usize,
    pub non_holds: Vec<ScanEntry>,
    pub errors: Vec<ScanError>,
    /// Orders covered: order -> number of groups audited of that order.
    pub coverage: BTreeMap<usize, usize>,
}

impl ScanSummary {
    pub fn exit_code(&self) -> i32 {
        if self.obstruction_found > 0 {
            2
        } else if self.inconclusive > 0 || !self.errors.is_empty() {
            3
        } else {
            0
        }
    }
}

/// Audit every group file (extension `.grp`) in a directory; unreadable
/// entries are recorded and the scan continues. Deterministic output order.
pub fn scan_dir(dir: &Path, class_data: Option<&ClassDataTable>) -> Result<ScanSummary> {
    let mut files: Vec<_> = std::fs::read_dir(dir)?
        .filter_map(|e| e.ok())
        .map(|e| e.path())
        .filter(|p| p.extension().map(|x| x == "grp").unwrap_or(false))
        .collect();
    files.sort();
    let results: Vec<std::result::Result<(String, AuditReport), ScanError>> = files
        .par_iter()
        .map(|path| {
            let file = path
                .file_name()
                .map(|s| s.to_string_lossy().to_string())
                .unwrap_or_default();
            let run = || -> Result<AuditReport> {
                let text = std::fs::read_to_string(path)?;
                let group = parse_group_file(&text)?;
                audit(&group, class_data)
            };
            run()
                .map(|r| (file.clone(), r))
                .map_err(|e| ScanError {
                    file,
                    error: e.to_string(),
                })
        })
        .collect();
    summarize_scan(results)
}

/// Audit a list of already-constructed groups (used by the bundled-corpus
/// tests and examples); same summary shape as [`scan_dir`].
pub fn scan_groups(
    groups: &[PermGroup],
    class_data: Option<&ClassDataTable>,
) -> Result<ScanSummary> {
    let results: Vec<std::result::Result<(String, AuditReport), ScanError>> = groups
        .par_iter()
        .map(|group| {
            audit(group, class_data)
                .map(|r| (group.name().to_string(), r))
                .map_err(|e| ScanError {
                    file: group.name().to_string(),
                    error: e.to_string(),
                })
        })
        .collect();
    summarize_scan(results)
}

fn summarize_scan(
    mut results: Vec<std::result::Result<(String, AuditReport), ScanError>>,
) -> Result<ScanSummary> {
    results.sort_by_key(|r| match r {
        Ok((f, _)) => f.clone(),
        Err(e) => e.file.clone(),
    });
    let mut summary = ScanSummary {
        total_files: results.len(),
        criterion_holds: 0,
        obstruction_found: 0,
        inconclusive: 0,
        non_holds: Vec::new(),
        errors: Vec::new(),
        coverage: BTreeMap::new(),
    };
    for r in results {
        match r {
            Ok((file, report)) => {
                *summary.coverage.entry(report.group.order).or_insert(0) += 1;
                match report.verdict {
                    Verdict::CriterionHolds => summary.criterion_holds += 1,
                    Verdict::ObstructionFound => summary.obstruction_found += 1,
                    Verdict::Inconclusive => summary.inconclusive += 1,
                }
                if report.verdict != Verdict::CriterionHolds {
                    let reasons = report
                        .orbits
                        .iter()
                        .filter(|o| !o.obstruction.is_trivial_certified())
                        .map(|o| {
                            format!(
                                "orbit at row {} (degree {}, field conductor {}): {}",
                                o.representative,
                                o.degree,
                                o.field.conductor,
                                o.obstruction.detail
                            )
                        })
                        .collect();
                    summary.non_holds.push(ScanEntry {
                        file,
                        group_name: report.group.name.clone(),
                        order: report.group.order,
                        verdict: report.verdict,
                        reasons,
                    });
                }
            }
            Err(e) => summary.errors.push(e),
        }
    }
    Ok(summary)
}

/// The constructible corpus of groups of order below 112: all cyclic
/// groups, all dihedral groups, all abelian groups by invariant factors,
/// and a bundle of non-abelian examples (S4, Q8 and several split
/// metacyclic groups).
pub fn bundled_corpus() -> Result<Vec<PermGroup>> {
    let mut corpus = Vec::new();
    for n in 2..=111u64 {
        corpus.push(make_family(&FamilySpec::Cyclic(n))?);
    }
    for n in 3..=55u64 {
        corpus.push(make_family(&FamilySpec::Dihedral(n))?);
    }
    for chain in invariant_factor_chains(112) {
        corpus.push(abelian_group(&chain)?);
    }
    corpus.push(make_family(&FamilySpec::Symmetric(4))?);
    corpus.push(make_family(&FamilySpec::Quaternion8)?);
    for (n, e, name) in [
        (7u64, 2u64, "C7:C3"),
        (9, 4, "C9:C3"),
        (13, 3, "C13:C3"),
        (11, 3, "C11:C5"),
        (5, 2, "C5:C4"),
        (7, 3, "C7:C6"),
    ] {
        corpus.push(
            make_family(&FamilySpec::SemidirectCyclic {
                n,
                exponents: vec![e],
            })?
            .with_name(name),
        );
    }
    Ok(corpus)
}

/// Direct product of cyclic groups on disjoint point blocks.
pub fn abelian_group(invariant_factors: &[u64]) -> Result<PermGroup> {
    let degree: usize = invariant_factors.iter().map(|&d| d as usize).sum();
    let mut gens = Vec::new();
    let mut offset = 0usize;
    for &d in invariant_factors {
        let mut images: Vec<u16> = (0..degree as u16).collect();
        for i in 0..d as usize {
            images[offset + i] = (offset + (i + 1) % d as usize) as u16;
        }
        gens.push(Permutation::new(images)?);
        offset += d as usize;
    }
    let name = format!(
        "Ab({})",
        invariant_factors
            .iter()
            .map(|d| d.to_string())
            .collect::<Vec<_>>()
            .join("x")
    );
    PermGroup::from_generators(degree, gens).map(|g| g.with_name(name))
}

/// All invariant-factor chains (d_1 | d_2 | ... , d_i >= 2, at least two
/// factors) with product strictly below the bound.
pub fn invariant_factor_chains(bound: u64) -> Vec<Vec<u64>> {
    fn extend(current: &mut Vec<u64>, product: u64, bound: u64, out: &mut Vec<Vec<u64>>) {
        let last = *current.last().unwrap();
        let mut next = last;
        loop {
            let p = product.checked_mul(next);
            match p {
                Some(p) if p < bound => {
                    current.push(next);
                    if current.len() >= 2 {
                        out.push(current.clone());
                    }
                    extend(current, p, bound, out);
                    current.pop();
                }
                _ => break,
            }
            next += last;
        }
    }
    let mut out = Vec::new();
    for d1 in 2..bound {
        if d1 * d1 >= bound {
            break;
        }
        let mut current = vec![d1];
        extend(&mut current, d1, bound, &mut out);
    }
    out.sort();
    out
}

/// The two order-112 groups singled out by the audit.
pub fn order112_pair() -> Result<(PermGroup, PermGroup)> {
    Ok((
        make_family(&FamilySpec::Order112A)?,
        make_family(&FamilySpec::Order112B)?,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn load_fixture() -> ClassDataTable {
        let text = include_str!("../fixtures/class_data.json");
        ClassDataTable::from_json(text).expect("bundled fixture must validate")
    }

    #[test]
    fn bad_primes_examples() {
        assert_eq!(bad_primes(112), vec![2, 7]);
        assert_eq!(bad_primes(21), vec![2, 3, 7]);
        assert_eq!(bad_primes(8), vec![2]);
    }

    #[test]
    fn audit_s3_holds() {
        let g = make_family(&FamilySpec::Symmetric(3)).unwrap();
        let table = load_fixture();
        let report = audit(&g, Some(&table)).unwrap();
        assert_eq!(report.verdict, Verdict::CriterionHolds);
        assert_eq!(report.orbits.len(), 1);
        assert_eq!(report.orbits[0].degree, 2);
        assert!(report.orbits[0].field.conductor == 1);
    }

    #[test]
    fn audit_q8_symplectic_holds() {
        let g = make_family(&FamilySpec::Quaternion8).unwrap();
        let report = audit(&g, None).unwrap();
        assert_eq!(report.verdict, Verdict::CriterionHolds);
        assert_eq!(report.orbits.len(), 1);
        assert!(report.orbits[0].symplectic);
        // field Q needs no table entry
        assert_eq!(report.orbits[0].field.conductor, 1);
    }

    #[test]
    fn audit_abelian_vacuous() {
        let g = abelian_group(&[2, 4]).unwrap();
        let report = audit(&g, None).unwrap();
        assert_eq!(report.verdict, Verdict::CriterionHolds);
        assert!(report.orbits.is_empty());
        assert!(report.group.abelian);
    }

    #[test]
    fn audit_missing_data_is_inconclusive() {
        // C7:C3 needs the Q(sqrt(-7)) entry; without data: inconclusive,
        // never a false criterion-holds.
        let g = make_family(&FamilySpec::SemidirectCyclic {
            n: 7,
            exponents: vec![2],
        })
        .unwrap();
        let report = audit(&g, None).unwrap();
        assert_eq!(report.verdict, Verdict::Inconclusive);
        assert_eq!(report.exit_code(), 3);
        let with_data = audit(&g, Some(&load_fixture())).unwrap();
        assert_eq!(with_data.verdict, Verdict::CriterionHolds);
    }

    #[test]
    fn audit_deterministic_json() {
        let g = make_family(&FamilySpec::Symmetric(4)).unwrap();
        let table = load_fixture();
        let a = serde_json::to_string(&audit(&g, Some(&table)).unwrap()).unwrap();
        let b = serde_json::to_string(&audit(&g, Some(&table)).unwrap()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn scan_empty_dir_is_empty_success() {
        let dir = std::env::temp_dir().join("arakelov-audit-empty-scan");
        std::fs::create_dir_all(&dir).unwrap();
        for entry in std::fs::read_dir(&dir).unwrap().flatten() {
            let _ = std::fs::remove_file(entry.path());
        }
        let summary = scan_dir(&dir, None).unwrap();
        assert_eq!(summary.total_files, 0);
        assert_eq!(summary.exit_code(), 0);
    }

    #[test]
    fn invariant_chains_small() {
        let chains = invariant_factor_chains(13);
        assert!(chains.contains(&vec![2, 2]));
        assert!(chains.contains(&vec![2, 4]));
        assert!(chains.contains(&vec![2, 2, 2]));
        assert!(chains.contains(&vec![3, 3]));
        assert!(chains.contains(&vec![2, 6]));
        assert!(!chains.contains(&vec![2, 8])); // 16 >= 13
        assert!(!chains.contains(&vec![2, 3])); // not a divisibility chain
        for c in &chains {
            assert!(c.iter().product::<u64>() < 13);
            for w in c.windows(2) {
                assert_eq!(w[1] % w[0], 0);
            }
        }
    }

    #[test]
    fn order112_audits() {
        let table = load_fixture();
        let (a, b) = order112_pair().unwrap();
        for g in [a, b] {
            let report = audit(&g, Some(&table)).unwrap();
            assert_eq!(report.verdict, Verdict::ObstructionFound, "{}", g.name());
            let offending: Vec<_> = report
                .orbits
                .iter()
                .filter(|o| o.obstruction.is_nontrivial_certified())
                .collect();
            assert_eq!(offending.len(), 1, "{}", g.name());
            assert_eq!(offending[0].degree, 2);
            assert_eq!(report.exit_code(), 2);
        }
    }
}
