use std::sync::Arc;

use num_bigint::BigInt;

use crate::arith;
use crate::chartab::{AGLattice, VirtualCharacter};
use crate::error::{Error, Result};
use crate::grp::FiniteGroup;
use crate::localtame::LocalElement;

use super::theta_map;

/// A function on conjugacy classes with values in the formal local field.
#[derive(Debug, Clone)]
pub struct LambdaFunction {
    group: Arc<FiniteGroup>,
    q: u64,
    values: Vec<LocalElement>,
}

impl LambdaFunction {
    pub fn constant_one(group: &Arc<FiniteGroup>, q: u64, strict: bool) -> Self {
        LambdaFunction {
            group: group.clone(),
            q,
            values: vec![LocalElement::one(q, strict); group.num_classes()],
        }
    }

    pub fn from_values(group: &Arc<FiniteGroup>, q: u64, values: Vec<LocalElement>) -> Result<Self> {
        if values.len() != group.num_classes() {
            return Err(Error::InvalidParameter(format!(
                "{} values for {} classes",
                values.len(),
                group.num_classes()
            )));
        }
        Ok(LambdaFunction {
            group: group.clone(),
            q,
            values,
        })
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn value(&self, class: usize) -> &LocalElement {
        &self.values[class]
    }

    pub fn values(&self) -> &[LocalElement] {
        &self.values
    }

    /// Constant on each orbit `{c(g^(q^i))}` of a class whose elements have
    /// order prime to `q`.
    pub fn is_orbit_constant(&self) -> bool {
        let g = &self.group;
        (0..g.num_classes()).all(|c| {
            let rep = g.class_rep(c);
            arith::gcd(g.element_order(rep), self.q) != 1
                || self.values[g.power_class(c, self.q as i64)] == self.values[c]
        })
    }
}

/// `f_{q,s}`: `varpi` on `c(s)` when `s != 1`, and `1` elsewhere.
pub fn f_element(group: &Arc<FiniteGroup>, q: u64, s: usize, strict: bool) -> Result<LambdaFunction> {
    let sigma = group.sigma_set(q, strict)?;
    if sigma.binary_search(&s).is_err() {
        return Err(Error::NotAdmissible { element: s, q });
    }
    let mut f = LambdaFunction::constant_one(group, q, strict);
    if s != group.identity() {
        f.values[group.class_of(s)] = LocalElement::uniformizer_power(q, strict, arith::rat_int(1));
    }
    Ok(f)
}

/// `Theta^t(f)(alpha) = f(Theta(alpha))`, where `f` is extended
/// multiplicatively from class sums: `prod_c f(c)^(n_c)` for
/// `Theta(alpha) = sum_c n_c (sum of c)`.
pub fn theta_transpose(f: &LambdaFunction, ag: &AGLattice, alpha: &[BigInt]) -> Result<LocalElement> {
    if !Arc::ptr_eq(f.group(), ag.group()) {
        return Err(Error::GroupMismatch);
    }
    ag.require(alpha)?;
    let chi = VirtualCharacter::from_big_coords(ag.table(), alpha)?;
    let theta = theta_map(&chi);
    let by_class = theta.class_coefficients().expect("Theta is central");
    let strict = f.values.first().is_some_and(LocalElement::is_strict);
    let mut out = LocalElement::one(f.q, strict);
    for (c, n) in by_class.iter().enumerate() {
        let n = arith::to_integer(n).ok_or(Error::NonIntegral)?;
        if f.values[c].is_one() {
            continue;
        }
        out = &out * &f.values[c].pow(&n)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat_int;
    use crate::chartab::{ag_kernel, character_table};
    use crate::grp::builtin;

    #[test]
    fn f_examples() {
        let g = Arc::new(builtin("S3").unwrap());
        let f1 = f_element(&g, 2, 0, true).unwrap();
        assert!(f1.values().iter().all(LocalElement::is_one));
        let c3 = (0..6).find(|&x| g.element_order(x) == 3).unwrap();
        let f = f_element(&g, 2, c3, true).unwrap();
        for c in 0..3 {
            let expect_varpi = c == g.class_of(c3);
            assert_eq!(f.value(c).uniformizer_exponent() == Some(&rat_int(1)), expect_varpi);
            assert_eq!(f.value(c).is_one(), !expect_varpi);
        }
        assert!(f.is_orbit_constant());
        let t = (0..6).find(|&x| g.element_order(x) == 2).unwrap();
        assert!(matches!(f_element(&g, 2, t, true), Err(Error::NotAdmissible { .. })));
    }

    #[test]
    fn transpose_examples() {
        let g = Arc::new(builtin("S3").unwrap());
        let table = character_table(&g).unwrap();
        let ag = ag_kernel(&table);
        let c3 = (0..6).find(|&x| g.element_order(x) == 3).unwrap();
        let f = f_element(&g, 2, c3, true).unwrap();
        let alpha = [BigInt::from(0), BigInt::from(0), BigInt::from(2)];
        let v = theta_transpose(&f, &ag, &alpha).unwrap();
        assert_eq!(v.uniformizer_exponent(), Some(&rat_int(2)));
        let one = LambdaFunction::constant_one(&g, 2, true);
        assert!(theta_transpose(&one, &ag, &alpha).unwrap().is_one());
        let outside = [BigInt::from(0), BigInt::from(0), BigInt::from(1)];
        assert!(matches!(theta_transpose(&f, &ag, &outside), Err(Error::NotInLattice(_))));
    }
}
