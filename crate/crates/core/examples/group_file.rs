//! Groups from text files: permutation generators or a Cayley table.

use stickelberger::grp::{abelian_invariants, parse_group_file};
use std::sync::Arc;

const DIHEDRAL_8: &str = "
# symmetries of a square
group n=8
perm 4: (1 2 3 4)
perm 4: (1 3)
";

const NOT_A_GROUP: &str = "
group n=3
table:
0 1 2
1 1 0
2 0 1
";

fn main() -> stickelberger::Result<()> {
    let g = Arc::new(parse_group_file("square", DIHEDRAL_8)?);
    println!("{}: order {}, exponent {}", g.name(), g.order(), g.exponent());
    for c in 0..g.num_classes() {
        let rep = g.class_rep(c);
        println!("  class of {:<12} size {} order {}", g.label(rep), g.class_size(c), g.element_order(rep));
    }
    let ab = g.derived_and_abelianization();
    println!("derived subgroup order {}, G^ab invariants {:?}", ab.derived.len(), abelian_invariants(&ab.quotient));
    for q in [3, 5] {
        let sigma: Vec<&str> = g.sigma_set(q, true)?.iter().map(|&x| g.label(x)).collect();
        println!("Sigma_{q} = {sigma:?}");
    }

    match parse_group_file("broken", NOT_A_GROUP) {
        Ok(_) => println!("unexpectedly accepted"),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}
