//! Degrees, signatures, discriminants and prime splitting of abelian
//! fields given by (conductor, subgroup) descriptors.
//!
//! ```bash
//! cargo run -p arakelov-audit --example field_invariants
//! ```

use arakelov_audit::fields::AbelianFieldDescriptor;

fn main() {
    for (f, gens, name) in [
        (1u64, vec![], "Q"),
        (4, vec![], "Q(i)"),
        (5, vec![4u64], "Q(sqrt(5))"),
        (7, vec![6], "Q(zeta_7)+"),
        (23, vec![], "Q(zeta_23)"),
        (56, vec![13], "the degree-12 CM field of conductor 56"),
    ] {
        let k = AbelianFieldDescriptor::new(f, &gens).unwrap();
        let inv = k.invariants();
        println!(
            "{name}: degree {}, signature ({}, {}), discriminant {}",
            inv.degree, inv.r1, inv.r2, inv.discriminant
        );
        print!("  splitting of small primes:");
        for p in [2u64, 3, 5, 7, 11, 13] {
            let s = k.frobenius_class(p);
            print!(
                " {p}:(e={},f={},g={}{})",
                s.e,
                s.residue_degree,
                s.g,
                if s.ramified { ",ram" } else { "" }
            );
        }
        println!("\n");
    }
}
