//! Reconstruct a cyclic-stabilizer G-set from its permutation class alone:
//! the permutation characters of the transitive G-sets with cyclic
//! stabilizers are linearly independent, so the multiset of stabilizers is
//! recoverable.
//!
//! ```bash
//! cargo run -p arakelov-audit --example artin_induction
//! ```

use arakelov_audit::chartab::CharacterTable;
use arakelov_audit::group::{make_family, FamilySpec};
use arakelov_audit::ledger::{
    artin_reconstruct, cyclic_subgroup_classes, perm_class, GSetSpec, VirtualClass,
};

fn main() {
    let group = make_family(&FamilySpec::Symmetric(4)).unwrap();
    let table = CharacterTable::compute(&group).unwrap();
    let cyclics = cyclic_subgroup_classes(&group);
    println!(
        "S4 has {} conjugacy classes of cyclic subgroups, orders {:?}",
        cyclics.len(),
        cyclics.iter().map(|c| c.order()).collect::<Vec<_>>()
    );

    // hide a G-set, publish only its class, reconstruct
    let hidden = GSetSpec::new(vec![
        (cyclics[1].clone(), 2),
        (cyclics[4].clone(), 1),
    ])
    .unwrap();
    let class = perm_class(&group, &table, &hidden).unwrap();
    println!("class of the hidden G-set: {:?}", class.0);
    let recovered = artin_reconstruct(&group, &table, &class).unwrap();
    for (sub, mult) in &recovered.orbits {
        println!("  recovered orbit: stabilizer of order {} x {}", sub.order(), mult);
    }

    // a virtual class that is not a permutation class fails cleanly
    let mut fake = VirtualClass::zero(table.class_count());
    fake.0[4] = 1;
    match artin_reconstruct(&group, &table, &fake) {
        Err(e) => println!("non-permutation class rejected: {e}"),
        Ok(_) => unreachable!(),
    }
}
