//! Inverse-automorphism weighted expectations over finite modules of
//! group-ring components: partial sums below growing cutoffs, an indicator,
//! a surjection-count moment, and a finite-order character of the size.
//!
//! ```bash
//! cargo run -p arakelov-audit --example clm_expectations
//! ```

use arakelov_audit::clm::{
    aut_count, enumerate_modules, expectation, ComponentSpec, ExpectationValue, Filter,
    Functional, ModuleType,
};
use num_bigint::BigInt;

fn main() {
    let spec = vec![ComponentSpec::new(3, 1, "q3").unwrap()];

    println!("modules of size < 3^3 over one residue-3 component:");
    for m in enumerate_modules(&spec, &BigInt::from(27)) {
        println!(
            "  {:?}  size {}  #Aut {}",
            m.0[0],
            m.size(&spec),
            aut_count(&m, &spec).unwrap()
        );
    }

    println!("\nP(module = 0) at growing cutoffs (exact partial sums):");
    for e in [3u32, 4, 5, 6, 7] {
        let x = BigInt::from(3u64).pow(e);
        let r = expectation(
            &spec,
            &x,
            &Functional::IndicatorOfType(ModuleType(vec![vec![]])),
            &Filter::None,
        )
        .unwrap();
        if let ExpectationValue::Rational(v) = &r.value {
            println!("  X = 3^{e}: {v}");
        }
    }

    println!("\nE[#Sur(M, Z/3)] partial sums (limit is 1):");
    for e in [3u32, 4, 5, 6] {
        let x = BigInt::from(3u64).pow(e);
        let r = expectation(
            &spec,
            &x,
            &Functional::SurjectionCountOnto(ModuleType(vec![vec![1]])),
            &Filter::None,
        )
        .unwrap();
        if let ExpectationValue::Rational(v) = &r.value {
            println!("  X = 3^{e}: {v}");
        }
    }

    println!("\nfinite-order character of the size, k = 4, filtered to nonzero modules:");
    let r = expectation(
        &spec,
        &BigInt::from(3u64).pow(6),
        &Functional::CharOfOrder { k: 4, exps: vec![1] },
        &Filter::NonzeroComponent(0),
    )
    .unwrap();
    if let ExpectationValue::CharacterSums { k, sums } = &r.value {
        for (r, s) in sums.iter().enumerate() {
            println!("  coefficient of zeta_{k}^{r}: {s}");
        }
    }
}
