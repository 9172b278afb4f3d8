//! The Stickelberger pairing `<chi, g>`, the virtual characters `Xi(s)`, the
//! map `Theta(chi) = sum_g <chi, g> g` and its transpose on functions of
//! conjugacy classes.

mod group_ring;
mod lambda;

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::arith;
use crate::chartab::{
    induce_from_cyclic, inner_product, restrict_to_cyclic, CharacterTable,
    VirtualCharacter,
};
use crate::error::{Error, Result};

pub use group_ring::GroupRingQ;
pub use lambda::{f_element, theta_transpose, LambdaFunction};

/// `<chi, g> = sum_j a_j {j / |g|}` where `chi|<g> = sum_j a_j xi_g^j`.
pub fn stick_pair(chi: &VirtualCharacter, g: usize) -> BigRational {
    let o = chi.group().element_order(g) as i64;
    restrict_to_cyclic(chi, g)
        .iter()
        .enumerate()
        .filter(|(_, a)| !a.is_zero())
        .map(|(j, a)| a * arith::rat(j as i64, o))
        .sum()
}

/// `Xi(s) = (1/|s|) sum_j j xi_s^j`, as multiplicities over `xi_s^j`.
pub fn xi_element(group: &crate::grp::FiniteGroup, s: usize) -> Vec<BigRational> {
    let o = group.element_order(s) as i64;
    (0..o).map(|j| arith::rat(j, o)).collect()
}

/// `(chi, Ind Xi(s))`.
pub fn stick_pair_via_induction(chi: &VirtualCharacter, s: usize) -> Result<BigRational> {
    let xi = xi_element(chi.group(), s);
    let ind = induce_from_cyclic(chi.table(), &xi, s)?;
    inner_product(chi, &ind)
}

/// `Theta(chi) = sum_g <chi, g> g`.
pub fn theta_map(chi: &VirtualCharacter) -> GroupRingQ {
    let g = chi.group();
    let by_class: Vec<BigRational> = (0..g.num_classes())
        .map(|c| stick_pair(chi, g.class_rep(c)))
        .collect();
    GroupRingQ::from_class_function(g, &by_class)
}

/// Pairings of `s` with every irreducible, in table row order.
pub fn class_fingerprint(table: &Arc<CharacterTable>, s: usize) -> Vec<BigRational> {
    (0..table.num_irreducibles())
        .map(|i| stick_pair(&VirtualCharacter::irreducible(table, i), s))
        .collect()
}

/// Pairing matrix `P[c][i] = <chi_i, g_c>` over class representatives.
pub fn pairing_matrix(table: &Arc<CharacterTable>) -> Vec<Vec<BigRational>> {
    let g = table.group();
    (0..g.num_classes())
        .map(|c| class_fingerprint(table, g.class_rep(c)))
        .collect()
}

/// `(<chi^omega, g>, <chi, g^k>)` with `chi^omega` the value-wise image of
/// `chi` under `zeta -> zeta^k`.
pub fn galois_twist_pair_check(
    chi: &VirtualCharacter,
    g: usize,
    k: i64,
) -> Result<(BigRational, BigRational)> {
    let grp = chi.group();
    let e = grp.exponent();
    if arith::gcd(arith::rem_euclid(k, e), e) != 1 && e > 1 {
        return Err(Error::NotCoprime { k, modulus: e });
    }
    let twisted = chi.galois(k)?;
    Ok((stick_pair(&twisted, g), stick_pair(chi, grp.pow(g, k))))
}

/// Whether `Theta(c)` has integer coefficients, for integer coordinates `c`.
pub fn theta_is_integral(table: &Arc<CharacterTable>, coords: &[BigInt]) -> Result<bool> {
    let chi = VirtualCharacter::from_big_coords(table, coords)?;
    Ok(theta_map(&chi).is_integral())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, rat_int};
    use crate::chartab::character_table;
    use crate::grp::{builtin, FiniteGroup};

    fn setup(name: &str) -> Arc<CharacterTable> {
        character_table(&Arc::new(builtin(name).unwrap())).unwrap()
    }

    fn find(g: &FiniteGroup, o: u64, class_size: usize) -> usize {
        (0..g.order())
            .find(|&x| g.element_order(x) == o && g.class_size(g.class_of(x)) == class_size)
            .unwrap()
    }

    #[test]
    fn pairing_examples() {
        let t = setup("C2");
        assert_eq!(stick_pair(&VirtualCharacter::irreducible(&t, 1), 1), rat(1, 2));
        assert_eq!(stick_pair(&VirtualCharacter::trivial(&t), 1), rat_int(0));

        let t = setup("S3");
        let g = t.group();
        let std = VirtualCharacter::irreducible(&t, 2);
        assert_eq!(stick_pair(&std, find(g, 3, 2)), rat_int(1));
        assert_eq!(stick_pair(&std, find(g, 2, 3)), rat(1, 2));
        assert_eq!(stick_pair(&std, 0), rat_int(0));

        let t = setup("D4");
        let g = t.group();
        let two = VirtualCharacter::irreducible(&t, 4);
        assert_eq!(t.degrees()[4], 2);
        assert_eq!(stick_pair(&two, find(g, 2, 1)), rat_int(1));
        assert_eq!(stick_pair(&two, find(g, 2, 2)), rat(1, 2));
    }

    #[test]
    fn xi_examples() {
        let g = builtin("C6").unwrap();
        assert_eq!(xi_element(&g, 0), vec![rat_int(0)]);
        assert_eq!(xi_element(&g, 3), vec![rat_int(0), rat(1, 2)]);
        assert_eq!(xi_element(&g, 2), vec![rat_int(0), rat(1, 3), rat(2, 3)]);
    }

    #[test]
    fn induced_xi_degree() {
        let t = setup("S4");
        let g = t.group();
        for s in 0..g.order() {
            let o = g.element_order(s) as i64;
            let ind = induce_from_cyclic(&t, &xi_element(g, s), s).unwrap();
            assert_eq!(ind.degree(), rat(24 * (o - 1), 2 * o));
        }
    }

    #[test]
    fn both_routes_agree_on_small_groups() {
        for name in ["S3", "D4", "Q8", "C6", "A4"] {
            let t = setup(name);
            let g = t.group();
            for i in 0..t.num_irreducibles() {
                let chi = VirtualCharacter::irreducible(&t, i);
                for s in 0..g.order() {
                    assert_eq!(stick_pair(&chi, s), stick_pair_via_induction(&chi, s).unwrap());
                }
            }
        }
    }

    #[test]
    fn theta_examples() {
        let t = setup("S3");
        let g = t.group();
        assert!(theta_map(&VirtualCharacter::trivial(&t)).is_zero());
        let std = VirtualCharacter::irreducible(&t, 2);
        let th = theta_map(&std);
        assert!(th.is_central());
        assert_eq!(th.coefficient(find(g, 3, 2)), &rat_int(1));
        assert_eq!(th.coefficient(find(g, 2, 3)), &rat(1, 2));
        assert!(!th.is_integral());
        assert!(theta_map(&std.scale(&rat_int(2))).is_integral());
    }

    #[test]
    fn fingerprints_separate_d4_involutions() {
        let t = setup("D4");
        let g = t.group();
        let a = class_fingerprint(&t, find(g, 2, 1));
        let b = class_fingerprint(&t, find(g, 2, 2));
        assert_ne!(a, b);
        for x in 0..g.order() {
            for h in 0..g.order() {
                assert_eq!(class_fingerprint(&t, x), class_fingerprint(&t, g.conjugate(x, h)));
            }
        }
    }

    #[test]
    fn twist_examples() {
        let t = setup("C3");
        let xi = (0..3)
            .map(|i| VirtualCharacter::irreducible(&t, i))
            .find(|c| c.value_at(1) == &crate::cyclo::Cyclotomic::zeta(3, 1))
            .unwrap();
        assert_eq!(galois_twist_pair_check(&xi, 1, 2).unwrap(), (rat(2, 3), rat(2, 3)));
        assert_eq!(galois_twist_pair_check(&xi, 1, 1).unwrap().0, stick_pair(&xi, 1));
        assert!(galois_twist_pair_check(&xi, 1, 3).is_err());
    }
}
