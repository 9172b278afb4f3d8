//! The Stickelberger pairing computed directly and through induction of
//! Xi(s), and the class fingerprints it produces.

use std::sync::Arc;

use stickelberger::arith::format_rational;
use stickelberger::chartab::{character_table, VirtualCharacter};
use stickelberger::grp::builtin;
use stickelberger::stick::{class_fingerprint, pairing_matrix, stick_pair, stick_pair_via_induction};

fn show(name: &str) -> stickelberger::Result<()> {
    let g = Arc::new(builtin(name)?);
    let t = character_table(&g)?;
    println!("{name}: <chi_i, g> by class");
    for (c, row) in pairing_matrix(&t).iter().enumerate() {
        let cells: Vec<String> = row.iter().map(format_rational).collect();
        println!("  {:<14} {}", g.label(g.class_rep(c)), cells.join("  "));
    }
    let mut agree = 0;
    for i in 0..t.num_irreducibles() {
        let chi = VirtualCharacter::irreducible(&t, i);
        for s in 0..g.order() {
            agree += usize::from(stick_pair(&chi, s) == stick_pair_via_induction(&chi, s)?);
        }
    }
    println!("  induction route agrees on {agree} of {} pairs", t.num_irreducibles() * g.order());
    Ok(())
}

fn main() -> stickelberger::Result<()> {
    show("S3")?;
    show("D4")?;

    // Real-valued characters cannot separate r from r^2 in D5.
    let g = Arc::new(builtin("D5")?);
    let t = character_table(&g)?;
    let r = g.labels().iter().position(|l| l == "r").unwrap();
    let r2 = g.labels().iter().position(|l| l == "r^2").unwrap();
    println!(
        "D5: fingerprint(r) = {:?}, fingerprint(r^2) = {:?}, conjugate: {}",
        class_fingerprint(&t, r).iter().map(format_rational).collect::<Vec<_>>(),
        class_fingerprint(&t, r2).iter().map(format_rational).collect::<Vec<_>>(),
        g.class_of(r) == g.class_of(r2)
    );
    Ok(())
}
