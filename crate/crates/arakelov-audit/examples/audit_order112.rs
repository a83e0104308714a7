//! The headline computation: audit the two order-112 groups. Each has
//! exactly one Galois orbit of degree-2 characters whose class-group
//! quotient survives, so the audit reports an obstruction; every smaller
//! constructible group passes.
//!
//! ```bash
//! cargo run -p arakelov-audit --example audit_order112
//! ```

use arakelov_audit::fields::ClassDataTable;
use arakelov_audit::group::{make_family, FamilySpec};
use arakelov_audit::pipeline::audit;

fn main() {
    let fixture = ClassDataTable::from_json(include_str!("../fixtures/class_data.json"))
        .expect("bundled class data");
    for spec in [FamilySpec::Order112A, FamilySpec::Order112B] {
        let group = make_family(&spec).unwrap();
        let report = audit(&group, Some(&fixture)).unwrap();
        println!(
            "{}: verdict {:?} (exit code {})",
            group.name(),
            report.verdict,
            report.exit_code()
        );
        for orbit in &report.orbits {
            println!(
                "  degree-{} orbit (size {:>2}, field conductor {:>2}, degree {:>2}): {:?} {}",
                orbit.degree,
                orbit.orbit_size,
                orbit.field.conductor,
                orbit.field.degree,
                orbit.obstruction.mode,
                if orbit.obstruction.quotient_invariants.is_empty() {
                    "trivial".to_string()
                } else {
                    format!("quotient {:?}", orbit.obstruction.quotient_invariants)
                }
            );
        }
        println!();
    }
}
