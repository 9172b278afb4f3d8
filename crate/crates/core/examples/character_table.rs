//! Character table of a builtin group, checked against the exact Burnside
//! table.
//!
//! cargo run --example character_table -- S4

use std::sync::Arc;

use stickelberger::chartab::{burnside_table, character_table};
use stickelberger::cli::format_value;
use stickelberger::grp::builtin;

fn main() -> stickelberger::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "S4".into());
    let g = Arc::new(builtin(&name)?);
    let t = character_table(&g)?;

    println!("{} order {}, {} classes", g.name(), g.order(), g.num_classes());
    for c in 0..g.num_classes() {
        let rep = g.class_rep(c);
        print!("{:>12}", format!("{}[{}]", g.label(rep), g.class_size(c)));
    }
    println!();
    for row in t.rows() {
        for v in row {
            print!("{:>12}", format_value(v));
        }
        println!();
    }

    match t.validate() {
        Ok(()) => println!("orthogonality and degree sum hold"),
        Err(d) => println!("defect: {} at ({}, {})", d.check, d.i, d.j),
    }
    if g.order() <= 24 {
        let exact = burnside_table(&g)?;
        println!("Burnside table agrees: {}", t.same_rows(&exact));
    }
    Ok(())
}
