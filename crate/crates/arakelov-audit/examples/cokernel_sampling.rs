//! Seeded Monte-Carlo cokernel sampling as an empirical check on the
//! inverse-automorphism weights: frequency ratios of random-matrix
//! cokernels converge to #Aut ratios.
//!
//! ```bash
//! cargo run -p arakelov-audit --example cokernel_sampling
//! ```

use arakelov_audit::clm::{aut_count, cokernel_montecarlo, ComponentSpec, ModuleType};
use num_traits::ToPrimitive;

fn main() {
    let spec = vec![ComponentSpec::new(3, 1, "q3").unwrap()];
    let samples = 200_000;
    let mc = cokernel_montecarlo(3, 6, samples, 19, 1, None).unwrap();
    println!(
        "cokernels of {} random 6x6 matrices over Z/3^6 (seed {}):",
        mc.samples, mc.seed
    );
    println!("{:>10} {:>9} {:>10} {:>14}", "type", "count", "freq", "c / #Aut");
    let c: f64 = (1..=12).map(|i| 1.0 - 3f64.powi(-i)).product();
    for (part, count) in mc.counts.iter().take(8) {
        let aut = aut_count(&ModuleType(vec![part.clone()]), &spec)
            .unwrap()
            .to_f64()
            .unwrap();
        let label = if part.is_empty() {
            "0".to_string()
        } else {
            part.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
        };
        println!(
            "{label:>10} {count:>9} {:>10.5} {:>14.5}",
            *count as f64 / mc.samples as f64,
            c / aut
        );
    }
    println!("(the last column is the infinite-cutoff prediction)");
}
