//! Compute and print exact character tables.
//!
//! ```bash
//! cargo run -p arakelov-audit --example character_table
//! ```

use arakelov_audit::chartab::CharacterTable;
use arakelov_audit::group::{make_family, FamilySpec};

fn main() {
    for spec in [
        FamilySpec::Symmetric(4),
        FamilySpec::Quaternion8,
        FamilySpec::SemidirectCyclic {
            n: 7,
            exponents: vec![2],
        },
    ] {
        let group = make_family(&spec).unwrap();
        let table = CharacterTable::compute(&group).unwrap();
        println!(
            "{} (order {}, {} classes, exponent {}, table prime {})",
            group.name(),
            group.order(),
            table.class_count(),
            table.exponent,
            table.prime
        );
        print!("  class sizes:");
        for s in &table.conjugacy.class_sizes {
            print!(" {s}");
        }
        println!();
        for ch in &table.characters {
            print!("  deg {} fs {:+}:", ch.degree, ch.fs_indicator);
            for v in &ch.values {
                print!("  {v}");
            }
            println!();
        }
        println!();
    }
}
