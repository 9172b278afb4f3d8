//! Resolvends of phi_s and their determinants, which are powers of the
//! uniformiser given by the Stickelberger pairing.

use std::sync::Arc;

use stickelberger::arith::format_rational;
use stickelberger::chartab::{ag_kernel, character_table, VirtualCharacter};
use stickelberger::grp::builtin;
use stickelberger::localtame::{det_distinguishes_classes, det_resolvend_at, phi_map};
use stickelberger::stick::{f_element, stick_pair, theta_transpose};

fn main() -> stickelberger::Result<()> {
    let g = Arc::new(builtin("A4")?);
    let t = character_table(&g)?;
    let q = 7;
    let sigma = g.sigma_set(q, true)?;
    println!("Sigma_{q}(A4) has {} elements", sigma.len());

    let s = *sigma.iter().find(|&&x| g.element_order(x) == 3).unwrap();
    let r = phi_map(&g, q, s, true)?.resolvend();
    println!("s = {}", g.label(s));
    for i in 0..t.num_irreducibles() {
        let chi = VirtualCharacter::irreducible(&t, i);
        let det = det_resolvend_at(&r, s, &chi)?;
        println!("  Det(chi_{i}) = {det}   <chi_{i}, s> = {}", format_rational(&stick_pair(&chi, s)));
    }

    let ag = ag_kernel(&t);
    let f = f_element(&g, q, s, true)?;
    for alpha in ag.basis() {
        let lhs = theta_transpose(&f, &ag, alpha)?;
        let rhs = det_resolvend_at(&r, s, &VirtualCharacter::from_big_coords(&t, alpha)?)?;
        println!("  alpha {:?}: Theta^t(f) = {lhs}, equal to Det: {}", alpha, lhs == rhs);
    }

    let others: Vec<usize> = sigma.iter().copied().filter(|&x| g.element_order(x) == 3).collect();
    for &s2 in &others[..4] {
        println!(
            "  Det agrees for {} and {}: {} (conjugate: {})",
            g.label(s),
            g.label(s2),
            det_distinguishes_classes(&t, q, s, s2, true)?,
            g.class_of(s) == g.class_of(s2)
        );
    }
    Ok(())
}
