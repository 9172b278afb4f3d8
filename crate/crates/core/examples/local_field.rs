//! Formal tame local elements: Puiseux-style sums of varpi^(a/m) with
//! cyclotomic coefficients, and the operators sigma and phi.

use num_bigint::BigInt;
use stickelberger::arith::rat;
use stickelberger::localtame::{beta, LocalElement};
use stickelberger::Cyclotomic;

fn main() -> stickelberger::Result<()> {
    let q = 7;
    let x = LocalElement::from_terms(
        q,
        true,
        [
            (rat(1, 3), Cyclotomic::zeta(3, 1)),
            (rat(-2, 5), Cyclotomic::from_rational(rat(3, 4), 1)),
        ],
    )?;
    println!("x = {x}");
    println!("sigma(x) = {}", x.sigma_op());
    println!("phi(x) = {}", x.phi_op()?);

    let lhs = x.phi_inv()?.sigma_op().phi_op()?;
    let rhs = x.sigma_pow(q as i64);
    println!("phi sigma phi^-1 (x) = sigma^{q} (x): {}", lhs == rhs);

    let w = LocalElement::uniformizer_power(q, true, rat(1, 6));
    println!("varpi^(1/6) cubed = {}", w.pow(&BigInt::from(3))?);
    println!("its inverse = {}", w.inverse()?);

    println!("beta_3 = {}", beta(3, q, true)?);

    let parsed: LocalElement = x.to_string().parse()?;
    println!("text round trip: {}", parsed == x);

    match LocalElement::from_terms(q, true, [(rat(1, 7), Cyclotomic::one(1))]) {
        Ok(_) => println!("varpi^(1/7) accepted"),
        Err(e) => println!("varpi^(1/7) rejected: {e}"),
    }
    Ok(())
}
