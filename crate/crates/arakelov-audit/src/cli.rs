//! The command-line interface: `chartab`, `audit`, `scan`,
//! `verify-identities` and `clm-expect`. All results go to stdout as JSON;
//! diagnostics go to stderr. Exit codes: `audit`/`scan` return 0 when the
//! criterion holds everywhere, 2 when an obstruction was certified, 3 when
//! anything is inconclusive; `verify-identities` returns 1 when an identity
//! fails; other errors exit 1.

use crate::chartab::CharacterTable;
use crate::clm::{
    cokernel_montecarlo, expectation, ComponentSpec, ExpectationValue, Filter, Functional,
    ModuleType,
};
use crate::fields::ClassDataTable;
use crate::group::parse_group_file;
use crate::ledger::{
    verify_conjecture_rational, ArithmeticInputs, SignatureSpec, VirtualClass,
};
use crate::pipeline::{audit, scan_dir};
use crate::{Error, Result};
use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Deserialize;
use serde_json::json;
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "arakelov-audit",
    about = "Exact character tables, class-field obstruction audits and weighted module statistics"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the exact character table of a group file; emits degrees,
    /// cyclotomic values, Frobenius-Schur indicators, Galois orbits and
    /// character fields as JSON.
    Chartab {
        group_file: PathBuf,
        /// Skip the first k suitable table primes (the output must not
        /// change).
        #[arg(long, default_value_t = 0)]
        prime_skip: usize,
    },
    /// Audit one group: per-orbit class-group obstructions and a verdict.
    Audit {
        group_file: PathBuf,
        /// Class-data JSON file with ingested class numbers and prime
        /// classes.
        #[arg(long)]
        class_data: Option<PathBuf>,
    },
    /// Audit every `.grp` file in a directory.
    Scan {
        dir: PathBuf,
        #[arg(long)]
        class_data: Option<PathBuf>,
    },
    /// Check the rational-level identities for a group and an archimedean
    /// signature spec (JSON file).
    VerifyIdentities {
        group_file: PathBuf,
        #[arg(long)]
        signature: PathBuf,
    },
    /// Weighted expectations over finite modules of group-ring components,
    /// or Monte-Carlo cokernel sampling with --mc.
    ClmExpect {
        /// Component spec `q=<prime power>,m=<size>[,label=<name>]`;
        /// repeatable.
        #[arg(long = "component")]
        components: Vec<String>,
        /// Size cutoff, e.g. `81` or `3^4`.
        #[arg(long)]
        cutoff: Option<String>,
        /// Functional: `indicator:<type>`, `surjections:<type>`,
        /// `size_power:<s>`, or `char:k=<k>[,exps=<a/b/...>]`. Types are
        /// partitions per component: parts comma-separated, components
        /// separated by `/`, `-` for the zero component.
        #[arg(long)]
        functional: Option<String>,
        /// Filter: `none`, `nonzero:<component>`, `zero:<component>`.
        #[arg(long, default_value = "none")]
        filter: String,
        /// Monte-Carlo sampling `n=<size>,samples=<count>,seed=<seed>
        /// [,shards=<s>]`; needs exactly one component with prime q.
        #[arg(long)]
        mc: Option<String>,
    },
}

/// JSON input for `verify-identities`.
#[derive(Deserialize)]
struct SignatureInput {
    d: u64,
    real_split: usize,
    real_inert: usize,
    complex: usize,
    #[serde(default)]
    involution: Option<usize>,
    #[serde(default)]
    unit_class: Option<Vec<i64>>,
    #[serde(default)]
    mu_class: Option<Vec<i64>>,
}

pub fn cli_main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(1);
        }
    }
}

fn run(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Chartab {
            group_file,
            prime_skip,
        } => {
            let group = parse_group_file(&std::fs::read_to_string(group_file)?)?;
            let table = CharacterTable::compute_with_prime_skip(&group, prime_skip)?;
            let orbits = table.galois_orbits(true)?;
            let doc = json!({
                "group": {
                    "name": group.name(),
                    "order": group.order(),
                    "degree": group.degree(),
                    "class_count": table.class_count(),
                    "exponent": table.exponent,
                },
                "prime": table.prime,
                "class_sizes": table.conjugacy.class_sizes,
                "class_rep_orders": table.conjugacy.rep_orders,
                "characters": table.characters.iter().map(|c| json!({
                    "degree": c.degree,
                    "fs_indicator": c.fs_indicator,
                    "values": c.values.iter().map(cyclotomic_json).collect::<Vec<_>>(),
                })).collect::<Vec<_>>(),
                "orbits": orbits.iter().map(|o| json!({
                    "members": o.members,
                    "representative": o.representative,
                    "stabilizer": o.stabilizer,
                    "field": {
                        "conductor": o.field.conductor(),
                        "subgroup": o.field.subgroup(),
                        "degree": o.field.degree(),
                        "totally_real": o.field.is_totally_real(),
                    },
                })).collect::<Vec<_>>(),
            });
            println!("{}", serde_json::to_string_pretty(&doc)?);
            Ok(0)
        }
        Command::Audit {
            group_file,
            class_data,
        } => {
            let group = parse_group_file(&std::fs::read_to_string(group_file)?)?;
            let table = load_class_data(class_data)?;
            let report = audit(&group, table.as_ref())?;
            println!("{}", serde_json::to_string_pretty(&report)?);
            Ok(report.exit_code())
        }
        Command::Scan { dir, class_data } => {
            let table = load_class_data(class_data)?;
            let summary = scan_dir(&dir, table.as_ref())?;
            println!("{}", serde_json::to_string_pretty(&summary)?);
            Ok(summary.exit_code())
        }
        Command::VerifyIdentities {
            group_file,
            signature,
        } => {
            let group = parse_group_file(&std::fs::read_to_string(group_file)?)?;
            let input: SignatureInput =
                serde_json::from_str(&std::fs::read_to_string(signature)?)?;
            let table = CharacterTable::compute(&group)?;
            let sig = SignatureSpec {
                real_split: input.real_split,
                real_inert: input.real_inert,
                complex: input.complex,
                involution: input.involution,
            };
            if input.d != sig.degree() {
                return Err(Error::InvalidSignature(format!(
                    "d = {} does not match the signature degree {}",
                    input.d,
                    sig.degree()
                )));
            }
            let mut inputs = ArithmeticInputs::consistent(&group, &table, sig)?;
            if let Some(u) = input.unit_class {
                inputs.unit_class = VirtualClass(u);
            }
            if let Some(m) = input.mu_class {
                inputs.mu_class = VirtualClass(m);
            }
            let report = verify_conjecture_rational(&group, &table, &inputs)?;
            println!("{}", serde_json::to_string_pretty(&report)?);
            Ok(if report.all_pass { 0 } else { 1 })
        }
        Command::ClmExpect {
            components,
            cutoff,
            functional,
            filter,
            mc,
        } => {
            let spec: Vec<ComponentSpec> = components
                .iter()
                .map(|c| parse_component(c))
                .collect::<Result<_>>()?;
            if let Some(mc_spec) = mc {
                if spec.len() != 1 || spec[0].m != 1 {
                    return Err(Error::InvalidModuleSpec(
                        "Monte-Carlo sampling expects exactly one component with m = 1".into(),
                    ));
                }
                let (n, samples, seed, shards) = parse_mc(&mc_spec)?;
                let cutoff_val = cutoff.as_deref().map(parse_cutoff).transpose()?;
                let sample =
                    cokernel_montecarlo(spec[0].q, n, samples, seed, shards, cutoff_val.as_ref())?;
                let doc = json!({
                    "p": sample.p,
                    "n": sample.n,
                    "samples": sample.samples,
                    "seed": sample.seed,
                    "shards": sample.shards,
                    "overflow": sample.overflow,
                    "counts": sample.counts.iter().map(|(part, count)| json!({
                        "type": partition_string(part),
                        "count": count,
                        "frequency": *count as f64 / sample.samples as f64,
                    })).collect::<Vec<_>>(),
                });
                println!("{}", serde_json::to_string_pretty(&doc)?);
                return Ok(0);
            }
            let cutoff = parse_cutoff(cutoff.as_deref().ok_or_else(|| {
                Error::InvalidModuleSpec("--cutoff is required for expectations".into())
            })?)?;
            let functional = parse_functional(
                functional.as_deref().ok_or_else(|| {
                    Error::InvalidModuleSpec("--functional is required".into())
                })?,
                spec.len(),
            )?;
            let filter = parse_filter(&filter)?;
            let e = expectation(&spec, &cutoff, &functional, &filter)?;
            let doc = json!({
                "cutoff": e.cutoff.to_string(),
                "support": e.support,
                "empty_support": e.empty_support,
                "weight_sum": rational_string(&e.weight_sum),
                "numerator": expectation_value_json(&e.numerator),
                "value": expectation_value_json(&e.value),
            });
            println!("{}", serde_json::to_string_pretty(&doc)?);
            Ok(0)
        }
    }
}

fn load_class_data(path: Option<PathBuf>) -> Result<Option<ClassDataTable>> {
    match path {
        None => Ok(None),
        Some(p) => {
            let table = ClassDataTable::from_json(&std::fs::read_to_string(p)?)?;
            Ok(Some(table))
        }
    }
}

fn cyclotomic_json(c: &crate::cyclo::Cyclotomic) -> serde_json::Value {
    json!({
        "n": c.order(),
        "coeffs": c.coeffs().iter().map(|x| x.to_string()).collect::<Vec<_>>(),
    })
}

fn rational_string(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn expectation_value_json(v: &ExpectationValue) -> serde_json::Value {
    match v {
        ExpectationValue::Rational(r) => json!(rational_string(r)),
        ExpectationValue::CharacterSums { k, sums } => json!({
            "zeta_order": k,
            "coefficients": sums.iter().map(rational_string).collect::<Vec<_>>(),
        }),
    }
}

fn partition_string(part: &[u32]) -> String {
    if part.is_empty() {
        "-".to_string()
    } else {
        part.iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

fn parse_kv(text: &str) -> Vec<(String, String)> {
    text.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|pair| {
            let (k, v) = pair.split_once('=').unwrap_or((pair, ""));
            (k.trim().to_string(), v.trim().to_string())
        })
        .collect()
}

fn parse_component(text: &str) -> Result<ComponentSpec> {
    let mut q = None;
    let mut m = 1u64;
    let mut label = String::new();
    for (k, v) in parse_kv(text) {
        match k.as_str() {
            "q" => q = Some(parse_u64(&v)?),
            "m" => m = parse_u64(&v)?,
            "label" => label = v,
            other => {
                return Err(Error::InvalidModuleSpec(format!(
                    "unknown component key '{other}'"
                )))
            }
        }
    }
    let q = q.ok_or_else(|| Error::InvalidModuleSpec("component needs q=<prime power>".into()))?;
    if label.is_empty() {
        label = format!("q{q}m{m}");
    }
    ComponentSpec::new(q, m, label)
}

fn parse_u64(v: &str) -> Result<u64> {
    v.parse::<u64>()
        .map_err(|_| Error::InvalidModuleSpec(format!("bad integer '{v}'")))
}

fn parse_cutoff(text: &str) -> Result<BigInt> {
    let t = text.trim();
    if let Some((base, exp)) = t.split_once('^') {
        let b = parse_u64(base)?;
        let e = parse_u64(exp)?;
        return Ok(BigInt::from(b).pow(e as u32));
    }
    t.parse::<BigInt>()
        .map_err(|_| Error::InvalidModuleSpec(format!("bad cutoff '{t}'")))
}

/// Type syntax: components separated by `/`, parts by `,`, `-` for the zero
/// component: `1,1/-` is ((1,1), ()).
fn parse_module_type(text: &str, components: usize) -> Result<ModuleType> {
    let parts: Vec<Vec<u32>> = text
        .split('/')
        .map(|comp| {
            let comp = comp.trim();
            if comp.is_empty() || comp == "-" || comp == "0" {
                return Ok(Vec::new());
            }
            comp.split(',')
                .map(|p| {
                    p.trim()
                        .parse::<u32>()
                        .map_err(|_| Error::InvalidModuleSpec(format!("bad part '{p}'")))
                })
                .collect()
        })
        .collect::<Result<_>>()?;
    if parts.len() != components {
        return Err(Error::InvalidModuleSpec(format!(
            "type has {} components, expected {components}",
            parts.len()
        )));
    }
    Ok(ModuleType(parts).normalize())
}

fn parse_functional(text: &str, components: usize) -> Result<Functional> {
    let (kind, rest) = text.split_once(':').unwrap_or((text, ""));
    match kind {
        "indicator" => Ok(Functional::IndicatorOfType(parse_module_type(
            rest, components,
        )?)),
        "surjections" => Ok(Functional::SurjectionCountOnto(parse_module_type(
            rest, components,
        )?)),
        "size_power" => {
            let s = rest.trim().parse::<i64>().map_err(|_| {
                Error::InvalidModuleSpec(format!("bad size_power exponent '{rest}'"))
            })?;
            Ok(Functional::SizePower(s))
        }
        "char" => {
            let mut k = None;
            let mut exps = Vec::new();
            for (key, v) in parse_kv(rest) {
                match key.as_str() {
                    "k" => k = Some(parse_u64(&v)?),
                    "exps" => {
                        exps = v
                            .split('/')
                            .map(|x| parse_u64(x.trim()))
                            .collect::<Result<_>>()?
                    }
                    other => {
                        return Err(Error::InvalidModuleSpec(format!(
                            "unknown char key '{other}'"
                        )))
                    }
                }
            }
            let k = k.ok_or_else(|| Error::InvalidModuleSpec("char needs k=<order>".into()))?;
            Ok(Functional::CharOfOrder { k, exps })
        }
        other => Err(Error::InvalidModuleSpec(format!(
            "unknown functional '{other}'"
        ))),
    }
}

fn parse_filter(text: &str) -> Result<Filter> {
    let t = text.trim();
    if t == "none" || t.is_empty() {
        return Ok(Filter::None);
    }
    if let Some(i) = t.strip_prefix("nonzero:") {
        return Ok(Filter::NonzeroComponent(i.trim().parse().map_err(|_| {
            Error::InvalidModuleSpec(format!("bad filter component '{i}'"))
        })?));
    }
    if let Some(i) = t.strip_prefix("zero:") {
        return Ok(Filter::ZeroComponent(i.trim().parse().map_err(|_| {
            Error::InvalidModuleSpec(format!("bad filter component '{i}'"))
        })?));
    }
    Err(Error::InvalidModuleSpec(format!("unknown filter '{t}'")))
}

fn parse_mc(text: &str) -> Result<(u64, u64, u64, u64)> {
    let mut n = None;
    let mut samples = None;
    let mut seed = 0u64;
    let mut shards = 1u64;
    for (k, v) in parse_kv(text) {
        match k.as_str() {
            "n" => n = Some(parse_u64(&v)?),
            "samples" => samples = Some(parse_u64(&v)?),
            "seed" => seed = parse_u64(&v)?,
            "shards" => shards = parse_u64(&v)?,
            other => {
                return Err(Error::InvalidModuleSpec(format!(
                    "unknown mc key '{other}'"
                )))
            }
        }
    }
    Ok((
        n.ok_or_else(|| Error::InvalidModuleSpec("mc needs n=<matrix size>".into()))?,
        samples.ok_or_else(|| Error::InvalidModuleSpec("mc needs samples=<count>".into()))?,
        seed,
        shards,
    ))
}
