//! Frobenius-Schur indicators and the symplectic predicate: Q8 carries a
//! quaternionic (indicator -1) character, D4 has the same degrees but is
//! entirely orthogonal.
//!
//! ```bash
//! cargo run -p arakelov-audit --example frobenius_schur
//! ```

use arakelov_audit::chartab::CharacterTable;
use arakelov_audit::group::{make_family, FamilySpec};

fn main() {
    for spec in [FamilySpec::Quaternion8, FamilySpec::Dihedral(4)] {
        let group = make_family(&spec).unwrap();
        let table = CharacterTable::compute(&group).unwrap();
        println!("{}:", group.name());
        for (i, ch) in table.characters.iter().enumerate() {
            let kind = match ch.fs_indicator {
                1 => "orthogonal (real)",
                -1 => "symplectic (quaternionic)",
                _ => "complex",
            };
            println!("  row {i}: degree {} -> {kind}", ch.degree);
        }
        // the involution-count identity behind the indicator
        table.verify_fs_square_counts(&group).unwrap();
        println!("  square-count identity verified exactly\n");
    }
}
