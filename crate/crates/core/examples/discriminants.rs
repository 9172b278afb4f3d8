//! Discriminant valuations of tame algebras with inertia generated by s.

use stickelberger::arith::format_rational;
use stickelberger::grp::builtin;
use stickelberger::localtame::disc_valuation;

fn main() -> stickelberger::Result<()> {
    for name in ["S3", "Q8", "A5"] {
        let g = builtin(name)?;
        print!("{name}:");
        for c in 0..g.num_classes() {
            let s = g.class_rep(c);
            print!("  {}->{}", g.label(s), format_rational(&disc_valuation(&g, s)));
        }
        println!();
    }
    Ok(())
}
