use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::arith;
use crate::chartab::{restrict_to_cyclic, CharacterTable, VirtualCharacter};
use crate::cyclo::Cyclotomic;
use crate::error::{Error, Result};
use crate::grp::FiniteGroup;

use super::local::{beta, LocalElement};

/// An element `sum_g x_g g` of the group algebra over the formal local field.
#[derive(Debug, Clone)]
pub struct Resolvend {
    group: Arc<FiniteGroup>,
    q: u64,
    strict: bool,
    coeffs: BTreeMap<usize, LocalElement>,
}

impl PartialEq for Resolvend {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.group, &other.group) && self.coeffs == other.coeffs
    }
}

impl Resolvend {
    pub fn zero(group: &Arc<FiniteGroup>, q: u64, strict: bool) -> Self {
        Resolvend {
            group: group.clone(),
            q,
            strict,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(group: &Arc<FiniteGroup>, q: u64, strict: bool) -> Self {
        let mut r = Self::zero(group, q, strict);
        r.add_term(group.identity(), LocalElement::one(q, strict));
        r
    }

    /// `r_G(a) = sum_g a(g) g^-1`.
    pub fn from_map(group: &Arc<FiniteGroup>, q: u64, strict: bool, a: &BTreeMap<usize, LocalElement>) -> Self {
        let mut r = Self::zero(group, q, strict);
        for (&g, x) in a {
            r.add_term(group.inv(g), x.clone());
        }
        r
    }

    pub fn add_term(&mut self, g: usize, x: LocalElement) {
        let sum = match self.coeffs.remove(&g) {
            Some(old) => &old + &x,
            None => x,
        };
        if !sum.is_zero() {
            self.coeffs.insert(g, sum);
        }
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn coefficient(&self, g: usize) -> LocalElement {
        self.coeffs
            .get(&g)
            .cloned()
            .unwrap_or_else(|| LocalElement::zero(self.q, self.strict))
    }

    pub fn coefficients(&self) -> &BTreeMap<usize, LocalElement> {
        &self.coeffs
    }

    pub fn support(&self) -> Vec<usize> {
        self.coeffs.keys().copied().collect()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let g = &self.group;
        let mut out = Self::zero(g, self.q, self.strict);
        for (&a, x) in &self.coeffs {
            for (&b, y) in &other.coeffs {
                out.add_term(g.mul(a, b), x * y);
            }
        }
        out
    }

    /// `g^-1 r g`.
    pub fn conjugate_by(&self, g: usize) -> Self {
        let grp = &self.group;
        let mut out = Self::zero(grp, self.q, self.strict);
        for (&x, c) in &self.coeffs {
            out.add_term(grp.conjugate(x, g), c.clone());
        }
        out
    }

    /// Coefficient-wise `sigma`.
    pub fn sigma_op(&self) -> Self {
        self.map_coeffs(|x| Ok(x.sigma_op())).expect("sigma is total")
    }

    /// Coefficient-wise `phi`.
    pub fn phi_op(&self) -> Result<Self> {
        self.map_coeffs(LocalElement::phi_op)
    }

    fn map_coeffs(&self, f: impl Fn(&LocalElement) -> Result<LocalElement>) -> Result<Self> {
        let mut out = Self::zero(&self.group, self.q, self.strict);
        for (&g, x) in &self.coeffs {
            out.add_term(g, f(x)?);
        }
        Ok(out)
    }

    /// A generator of a cyclic subgroup containing the support.
    pub fn cyclic_generator(&self) -> Result<usize> {
        let g = &self.group;
        let support: Vec<usize> = self.support();
        let h = g.generated_subgroup(&support);
        h.iter()
            .copied()
            .find(|&x| g.element_order(x) as usize == h.len())
            .ok_or(Error::NotCyclicSupport)
    }
}

/// The map `phi_{q,s}`: `s^i -> sigma^i(beta_s)`, zero off `<s>`.
#[derive(Debug, Clone)]
pub struct PhiMap {
    group: Arc<FiniteGroup>,
    q: u64,
    strict: bool,
    s: usize,
    values: BTreeMap<usize, LocalElement>,
}

pub fn phi_map(group: &Arc<FiniteGroup>, q: u64, s: usize, strict: bool) -> Result<PhiMap> {
    let sigma = group.sigma_set(q, strict)?;
    if sigma.binary_search(&s).is_err() {
        return Err(Error::NotAdmissible { element: s, q });
    }
    let o = group.element_order(s);
    let b = beta(o, q, strict)?;
    let values = group
        .cyclic_subgroup(s)
        .into_iter()
        .enumerate()
        .map(|(i, g)| (g, b.sigma_pow(i as i64)))
        .collect();
    Ok(PhiMap {
        group: group.clone(),
        q,
        strict,
        s,
        values,
    })
}

impl PhiMap {
    pub fn s(&self) -> usize {
        self.s
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn value(&self, g: usize) -> Option<&LocalElement> {
        self.values.get(&g)
    }

    pub fn support(&self) -> Vec<usize> {
        self.values.keys().copied().collect()
    }

    /// `sum_i sigma^i(beta_s) s^-i`.
    pub fn resolvend(&self) -> Resolvend {
        Resolvend::from_map(&self.group, self.q, self.strict, &self.values)
    }
}

/// `Det(r)(chi)` for `r` supported on a cyclic subgroup: the product over
/// characters `eta` of `<s>` of `(sum_i c_i eta(s^-i))^(a_eta)`, where
/// `r = sum_i c_i s^-i` and `a_eta` are the multiplicities of `chi|<s>`.
pub fn det_resolvend_cyclic(r: &Resolvend, chi: &VirtualCharacter) -> Result<LocalElement> {
    let s = r.cyclic_generator()?;
    det_resolvend_at(r, s, chi)
}

/// As [`det_resolvend_cyclic`] with the generator `s` of the cyclic support
/// given explicitly.
pub fn det_resolvend_at(r: &Resolvend, s: usize, chi: &VirtualCharacter) -> Result<LocalElement> {
    let g = r.group();
    if !Arc::ptr_eq(g, chi.group()) {
        return Err(Error::GroupMismatch);
    }
    if !chi.is_integral() {
        return Err(Error::NonIntegral);
    }
    let powers = g.cyclic_subgroup(s);
    let o = powers.len();
    // c_i = coefficient of s^-i
    let mut c: Vec<Option<&LocalElement>> = vec![None; o];
    for (&x, v) in r.coefficients() {
        let i = powers
            .iter()
            .position(|&p| p == g.inv(x))
            .ok_or(Error::NotCyclicSupport)?;
        c[i] = Some(v);
    }
    let a = restrict_to_cyclic(chi, s);
    let mut out = LocalElement::one(r.q, r.strict);
    for (j, aj) in a.iter().enumerate() {
        if aj.numer() == &BigInt::from(0) {
            continue;
        }
        let mut factor = LocalElement::zero(r.q, r.strict);
        for (i, ci) in c.iter().enumerate() {
            if let Some(ci) = ci {
                let z = Cyclotomic::zeta(o as u64, -((i * j) as i64));
                factor = &factor + &ci.scale(&z);
            }
        }
        if factor.is_zero() {
            return Err(Error::NotInvertible(format!(
                "factor at the character xi^{j} of <{}> vanishes",
                g.label(s)
            )));
        }
        out = &out * &factor.pow(&aj.to_integer())?;
    }
    Ok(out)
}

/// Whether the Det values of the two phi-resolvends agree on every
/// irreducible character.
pub fn det_distinguishes_classes(
    table: &Arc<CharacterTable>,
    q: u64,
    s1: usize,
    s2: usize,
    strict: bool,
) -> Result<bool> {
    let g = table.group();
    let r1 = phi_map(g, q, s1, strict)?.resolvend();
    let r2 = phi_map(g, q, s2, strict)?.resolvend();
    for i in 0..table.num_irreducibles() {
        let chi = VirtualCharacter::irreducible(table, i);
        if det_resolvend_at(&r1, s1, &chi)? != det_resolvend_at(&r2, s2, &chi)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `(|s| - 1) |G| / |s|`, the valuation of the discriminant of the induced
/// algebra with inertia generated by `s`.
pub fn disc_valuation(group: &FiniteGroup, s: usize) -> BigRational {
    let o = group.element_order(s) as i64;
    arith::rat((o - 1) * group.order() as i64, o)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, rat_int};
    use crate::chartab::character_table;
    use crate::grp::builtin;

    fn setup(name: &str) -> Arc<CharacterTable> {
        character_table(&Arc::new(builtin(name).unwrap())).unwrap()
    }

    fn of_order(g: &FiniteGroup, o: u64) -> usize {
        (0..g.order()).find(|&x| g.element_order(x) == o).unwrap()
    }

    #[test]
    fn identity_resolvend_is_one() {
        let t = setup("S3");
        let r = phi_map(t.group(), 2, 0, true).unwrap().resolvend();
        assert_eq!(r, Resolvend::one(t.group(), 2, true));
    }

    #[test]
    fn c2_resolvend() {
        let t = setup("C2");
        let g = t.group();
        let r = phi_map(g, 3, 1, true).unwrap().resolvend();
        let half = Cyclotomic::from_rational(rat(1, 2), 1);
        let plus = LocalElement::from_terms(3, true, [(rat_int(0), half.clone()), (rat(1, 2), half.clone())]).unwrap();
        let minus = LocalElement::from_terms(3, true, [(rat_int(0), half.clone()), (rat(1, 2), -&half)]).unwrap();
        assert_eq!(r.coefficient(0), plus);
        assert_eq!(r.coefficient(1), minus);
        let chi = VirtualCharacter::irreducible(&t, 1);
        let d = det_resolvend_cyclic(&r, &chi).unwrap();
        assert_eq!(d.uniformizer_exponent(), Some(&rat(1, 2)));
    }

    #[test]
    fn s3_phi_value() {
        let t = setup("S3");
        let g = t.group();
        let s = of_order(g, 3);
        let r = phi_map(g, 7, s, true).unwrap().resolvend();
        let d = det_resolvend_cyclic(&r, &VirtualCharacter::irreducible(&t, 2)).unwrap();
        assert_eq!(d.uniformizer_exponent(), Some(&rat_int(1)));
        let d = det_resolvend_cyclic(&r, &VirtualCharacter::trivial(&t)).unwrap();
        assert!(d.is_one());
        assert!(matches!(
            phi_map(g, 2, of_order(g, 2), true),
            Err(Error::NotAdmissible { .. })
        ));
    }

    #[test]
    fn conjugated_resolvend() {
        let t = setup("S4");
        let g = t.group();
        for s in g.sigma_set(5, true).unwrap() {
            let r = phi_map(g, 5, s, true).unwrap().resolvend();
            for h in 0..g.order() {
                let r2 = phi_map(g, 5, g.conjugate(s, h), true).unwrap().resolvend();
                assert_eq!(r2, r.conjugate_by(h));
            }
        }
    }

    #[test]
    fn non_cyclic_support_rejected() {
        let t = setup("D2");
        let g = t.group();
        let mut r = Resolvend::one(g, 3, true);
        r.add_term(1, LocalElement::one(3, true));
        r.add_term(2, LocalElement::one(3, true));
        assert!(matches!(
            det_resolvend_cyclic(&r, &VirtualCharacter::trivial(&t)),
            Err(Error::NotCyclicSupport)
        ));
    }

    #[test]
    fn vanishing_factor_reported() {
        let t = setup("C2");
        let g = t.group();
        let mut r = Resolvend::one(g, 3, true);
        r.add_term(1, LocalElement::one(3, true));
        // 1 + s vanishes at the sign character
        assert!(matches!(
            det_resolvend_cyclic(&r, &VirtualCharacter::irreducible(&t, 1)),
            Err(Error::NotInvertible(_))
        ));
    }

    #[test]
    fn distinguishes_d4_classes() {
        let t = setup("D4");
        let g = t.group();
        let z = (0..g.order())
            .find(|&x| g.element_order(x) == 2 && g.class_size(g.class_of(x)) == 1)
            .unwrap();
        let refl = (0..g.order())
            .find(|&x| g.element_order(x) == 2 && g.class_size(g.class_of(x)) == 2)
            .unwrap();
        assert!(!det_distinguishes_classes(&t, 3, z, refl, true).unwrap());
        assert!(det_distinguishes_classes(&t, 3, z, z, true).unwrap());
    }

    #[test]
    fn discriminant_examples() {
        let g = builtin("S3").unwrap();
        assert_eq!(disc_valuation(&g, 0), rat_int(0));
        assert_eq!(disc_valuation(&g, of_order(&g, 3)), rat_int(4));
        assert_eq!(disc_valuation(&g, of_order(&g, 2)), rat_int(3));
    }
}
