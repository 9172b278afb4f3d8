//! Exact arithmetic in cyclotomic fields.

use stickelberger::arith::rat;
use stickelberger::Cyclotomic;

fn main() -> stickelberger::Result<()> {
    let z3 = Cyclotomic::zeta(3, 1);
    let i = Cyclotomic::zeta(4, 1);

    // 1 + zeta_3 + zeta_3^2 = 0
    let sum = &(&Cyclotomic::one(3) + &z3) + &z3.pow(2)?;
    println!("1 + z3 + z3^2 = {sum}");

    // mixed levels lift to Q(zeta_12)
    let x = &z3 + &i;
    println!("z3 + i = {x} (level {})", x.level());
    println!("norm(z3 + i) = {}", x.norm());
    println!("1/(z3 + i) = {}", x.inverse()?);

    // Galois action zeta -> zeta^5 on Q(zeta_12)
    println!("sigma_5(z3 + i) = {}", x.galois(5)?);

    let half = Cyclotomic::from_rational(rat(1, 2), 8);
    println!("1/2 at level 8 lowers to {}", half.to_minimal_level());

    let text = x.to_string();
    let back: Cyclotomic = text.parse()?;
    assert_eq!(back, x);
    println!("round trip of `{text}` ok");
    Ok(())
}
