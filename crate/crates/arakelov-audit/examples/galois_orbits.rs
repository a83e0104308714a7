//! Galois orbits of irreducible characters and their character fields,
//! presented as abelian field descriptors (conductor, subgroup).
//!
//! ```bash
//! cargo run -p arakelov-audit --example galois_orbits
//! ```

use arakelov_audit::chartab::CharacterTable;
use arakelov_audit::group::{make_family, FamilySpec};

fn main() {
    for spec in [
        FamilySpec::SemidirectCyclic {
            n: 7,
            exponents: vec![2],
        },
        FamilySpec::Order112A,
    ] {
        let group = make_family(&spec).unwrap();
        let table = CharacterTable::compute(&group).unwrap();
        println!("{} (order {}):", group.name(), group.order());
        for orbit in table.galois_orbits(false).unwrap() {
            let f = &orbit.field;
            println!(
                "  orbit of row {:>2}: degree {}, size {:>2}, field conductor {:>2}, degree {:>2}, {}",
                orbit.representative,
                table.characters[orbit.representative].degree,
                orbit.members.len(),
                f.conductor(),
                f.degree(),
                if f.is_rationals() {
                    "Q"
                } else if f.is_totally_real() {
                    "totally real"
                } else {
                    "imaginary (CM)"
                }
            );
        }
        println!();
    }
}
