//! The tame quotient <sigma, phi | phi sigma phi^-1 = sigma^q> and the
//! factorisation pi = pi_r pi_nr of a homomorphism into G.

use std::sync::Arc;

use stickelberger::grp::{builtin, is_isomorphic};
use stickelberger::localtame::{admissible_pairs, factorise_hom, TameQuotient};

fn main() -> stickelberger::Result<()> {
    let quot = TameQuotient::new(2, 3, 2)?;
    let g = quot.to_group()?;
    println!("tame quotient (q, M, N) = (2, 3, 2): order {}, isomorphic to S3: {}", g.order(), is_isomorphic(&g, &builtin("S3")?));

    let s4 = Arc::new(builtin("S4")?);
    for q in [2, 3] {
        let pairs = admissible_pairs(&s4, q);
        let passing = pairs
            .iter()
            .map(|(quot, s, t)| factorise_hom(quot, &s4, *s, *t))
            .collect::<stickelberger::Result<Vec<_>>>()?
            .iter()
            .filter(|r| r.all_pass())
            .count();
        println!("S4, q = {q}: {} admissible (s, t) pairs, {passing} factorise", pairs.len());
    }

    let (quot, s, t) = admissible_pairs(&s4, 2)
        .into_iter()
        .find(|(_, s, _)| s4.element_order(*s) == 3)
        .unwrap();
    let report = factorise_hom(&quot, &s4, s, t)?;
    println!("s = {}, t = {}, M = {}, N = {}", report.s, report.t, report.m, report.n);
    for c in &report.checks {
        println!("  {:<22} {}", c.name, if c.pass { "pass" } else { "fail" });
    }
    Ok(())
}
