//! Virtual-character arithmetic in G_0(Q[G]): permutation classes, the
//! duality involution, archimedean classes from signature data, and the
//! rational identity checks with a deliberately broken input at the end.
//!
//! ```bash
//! cargo run -p arakelov-audit --example grothendieck_identities
//! ```

use arakelov_audit::chartab::CharacterTable;
use arakelov_audit::group::{make_family, FamilySpec};
use arakelov_audit::ledger::{
    archimedean_class, perm_class, regular_class, sigma_dual, trivial_class,
    verify_conjecture_rational, ArithmeticInputs, GSetSpec, SignatureSpec, Subgroup,
};

fn main() {
    let group = make_family(&FamilySpec::Symmetric(3)).unwrap();
    let table = CharacterTable::compute(&group).unwrap();

    let c2 = (1..group.order())
        .find(|&e| group.element_order(e) == 2)
        .unwrap();
    let coset_class = perm_class(
        &group,
        &table,
        &GSetSpec::new(vec![(Subgroup::generated(&group, &[c2]), 1)]).unwrap(),
    )
    .unwrap();
    println!("S3: [Q[S3/C2]] = {:?} against (trivial, sign, standard)", coset_class.0);
    println!("    sigma fixes it: {}", sigma_dual(&coset_class, &table) == coset_class);
    println!("    regular = {:?}, trivial = {:?}", regular_class(&table).0, trivial_class(&table).0);

    let sig = SignatureSpec {
        real_split: 0,
        real_inert: 1,
        complex: 0,
        involution: None,
    };
    let arch = archimedean_class(&group, &table, &sig).unwrap();
    println!("    archimedean class for one inert real place: {:?}", arch.0);

    let inputs = ArithmeticInputs::consistent(&group, &table, sig).unwrap();
    let report = verify_conjecture_rational(&group, &table, &inputs).unwrap();
    for check in &report.checks {
        println!("    {}: {}", check.name, if check.pass { "pass" } else { "FAIL" });
    }

    // break the Dirichlet relation on purpose: the report localizes the
    // offending character
    let mut broken = inputs;
    broken.unit_class = broken.unit_class.add(&trivial_class(&table));
    let report = verify_conjecture_rational(&group, &table, &broken).unwrap();
    for check in report.checks.iter().filter(|c| !c.pass) {
        let w = check.witness.as_ref().unwrap();
        println!(
            "    perturbed input: {} fails at character {} (degree {}), {} vs {}",
            check.name, w.character_index, w.character_degree, w.lhs_coefficient, w.rhs_coefficient
        );
    }
}
