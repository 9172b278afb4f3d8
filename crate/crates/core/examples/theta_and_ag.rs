//! The Stickelberger map Theta and the lattice A_G of characters with
//! trivial determinant.

use std::sync::Arc;

use num_bigint::BigInt;
use stickelberger::arith::format_rational;
use stickelberger::chartab::{ag_kernel, character_table, det_character, VirtualCharacter};
use stickelberger::grp::builtin;
use stickelberger::stick::theta_map;

fn main() -> stickelberger::Result<()> {
    let g = Arc::new(builtin("S4")?);
    let t = character_table(&g)?;
    let ag = ag_kernel(&t);
    println!("S4 degrees {:?}", t.degrees());
    println!("A_G index {} (|G^ab| = {})", ag.index(), g.derived_and_abelianization().quotient.order());
    for row in ag.basis() {
        println!("  {:?}", row.iter().map(BigInt::to_string).collect::<Vec<_>>());
    }

    for coords in [[0i64, 1, 0, 0, 0], [0, 2, 0, 0, 0], [0, 0, 1, 0, 0], [0, 1, 0, 1, 0]] {
        let chi = VirtualCharacter::from_int_coords(&t, &coords)?;
        let theta = theta_map(&chi);
        let by_class: Vec<String> = theta
            .class_coefficients()
            .expect("central")
            .iter()
            .map(format_rational)
            .collect();
        println!(
            "chi = {coords:?}: Theta by class {by_class:?}, integral {}, det trivial {}",
            theta.is_integral(),
            det_character(&chi)?.is_trivial()
        );
    }
    Ok(())
}
