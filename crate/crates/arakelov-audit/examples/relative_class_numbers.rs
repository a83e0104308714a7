//! Exact relative class numbers of imaginary abelian fields via the
//! generalized-Bernoulli product, all in cyclotomic integer arithmetic.
//!
//! ```bash
//! cargo run -p arakelov-audit --example relative_class_numbers
//! ```

use arakelov_audit::fields::AbelianFieldDescriptor;

fn main() {
    println!("full cyclotomic fields Q(zeta_f):");
    for f in [4u64, 5, 7, 8, 11, 12, 15, 20, 23, 29, 31, 39, 40, 56] {
        let k = AbelianFieldDescriptor::new(f, &[]).unwrap();
        if k.is_totally_real() {
            continue;
        }
        println!(
            "  f = {f:>2}: degree {:>2}, w = {:>2}, Q = {}, h- = {}",
            k.degree(),
            k.roots_of_unity_count(),
            k.hasse_unit_index().unwrap(),
            k.h_minus().unwrap()
        );
    }
    println!("\nimaginary quadratic fields:");
    for (f, gens, name) in [
        (3u64, vec![], "Q(sqrt(-3))"),
        (4, vec![], "Q(i)"),
        (20, vec![3u64], "Q(sqrt(-5))"),
        (23, vec![2], "Q(sqrt(-23))"),
        (56, vec![3, 13], "Q(sqrt(-14))"),
    ] {
        let k = AbelianFieldDescriptor::new(f, &gens).unwrap();
        println!("  {name}: h = {}", k.h_minus().unwrap());
    }
    println!("\nCM subfields that appear in the order-112 audit:");
    for gens in [[13u64], [27]] {
        let k = AbelianFieldDescriptor::new(56, &gens).unwrap();
        println!(
            "  (56, <{}>): degree {}, h- = {}",
            gens[0],
            k.degree(),
            k.h_minus().unwrap()
        );
    }
}
