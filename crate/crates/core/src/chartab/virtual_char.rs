use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith;
use crate::cyclo::Cyclotomic;
use crate::error::{Error, Result};
use crate::grp::{Abelianization, FiniteGroup};

use super::CharacterTable;

/// A `Q`-linear combination of irreducible characters, stored both by its
/// coordinates over `Irr(G)` and by its class values.
#[derive(Debug, Clone)]
pub struct VirtualCharacter {
    table: Arc<CharacterTable>,
    coords: Vec<BigRational>,
    values: Vec<Cyclotomic>,
}

impl PartialEq for VirtualCharacter {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(self.table.group(), other.table.group()) && self.coords == other.coords
    }
}

impl VirtualCharacter {
    pub fn from_coords(table: &Arc<CharacterTable>, coords: Vec<BigRational>) -> Result<Self> {
        if coords.len() != table.num_irreducibles() {
            return Err(Error::InvalidParameter(format!(
                "{} coordinates for {} irreducibles",
                coords.len(),
                table.num_irreducibles()
            )));
        }
        let values = table.combine(&coords);
        Ok(VirtualCharacter {
            table: table.clone(),
            coords,
            values,
        })
    }

    pub fn from_int_coords(table: &Arc<CharacterTable>, coords: &[i64]) -> Result<Self> {
        Self::from_coords(table, coords.iter().map(|&c| arith::rat_int(c)).collect())
    }

    pub fn from_big_coords(table: &Arc<CharacterTable>, coords: &[BigInt]) -> Result<Self> {
        Self::from_coords(
            table,
            coords.iter().map(|c| BigRational::from_integer(c.clone())).collect(),
        )
    }

    /// Recover coordinates from class values; fails unless the class function
    /// is a rational combination of irreducibles.
    pub fn from_class_values(table: &Arc<CharacterTable>, values: Vec<Cyclotomic>) -> Result<Self> {
        if values.len() != table.group().num_classes() {
            return Err(Error::InvalidParameter("wrong number of class values".into()));
        }
        let values = values
            .into_iter()
            .map(|v| v.raise(table.level()))
            .collect::<Result<Vec<_>>>()?;
        let coords = table
            .rows()
            .iter()
            .map(|row| table.class_inner(&values, row).to_rational().ok_or(Error::NotRational))
            .collect::<Result<Vec<_>>>()?;
        if table.combine(&coords) != values {
            return Err(Error::NotRational);
        }
        Ok(VirtualCharacter {
            table: table.clone(),
            coords,
            values,
        })
    }

    pub fn irreducible(table: &Arc<CharacterTable>, i: usize) -> Self {
        let mut coords = vec![BigRational::zero(); table.num_irreducibles()];
        coords[i] = BigRational::one();
        VirtualCharacter {
            table: table.clone(),
            coords,
            values: table.row(i).to_vec(),
        }
    }

    pub fn trivial(table: &Arc<CharacterTable>) -> Self {
        Self::irreducible(table, 0)
    }

    /// The character of the regular representation.
    pub fn regular(table: &Arc<CharacterTable>) -> Self {
        let coords = table.degrees().iter().map(|&d| arith::rat_int(d as i64)).collect();
        Self::from_coords(table, coords).expect("shape matches")
    }

    pub fn zero(table: &Arc<CharacterTable>) -> Self {
        Self::from_coords(table, vec![BigRational::zero(); table.num_irreducibles()])
            .expect("shape matches")
    }

    pub fn table(&self) -> &Arc<CharacterTable> {
        &self.table
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        self.table.group()
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn class_values(&self) -> &[Cyclotomic] {
        &self.values
    }

    pub fn value_at(&self, g: usize) -> &Cyclotomic {
        &self.values[self.group().class_of(g)]
    }

    pub fn degree(&self) -> BigRational {
        self.values[0].to_rational().expect("degree is rational")
    }

    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(BigRational::is_integer)
    }

    pub fn integer_coords(&self) -> Option<Vec<BigInt>> {
        self.is_integral()
            .then(|| self.coords.iter().map(BigRational::to_integer).collect())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if !Arc::ptr_eq(self.group(), other.group()) {
            return Err(Error::GroupMismatch);
        }
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect();
        Self::from_coords(&self.table, coords)
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        let coords = self.coords.iter().map(|a| a * r).collect();
        Self::from_coords(&self.table, coords).expect("shape matches")
    }

    /// `chi^omega`: apply `zeta -> zeta^k` to every value.
    pub fn galois(&self, k: i64) -> Result<Self> {
        let values = self
            .values
            .iter()
            .map(|v| v.galois(k))
            .collect::<Result<Vec<_>>>()?;
        Self::from_class_values(&self.table, values)
    }
}

/// Multiplicities `a_j` of `xi_s^j` in the restriction of `chi` to `<s>`,
/// where `xi_s(s^i) = zeta_|s|^i`.
pub fn restrict_to_cyclic(chi: &VirtualCharacter, s: usize) -> Vec<BigRational> {
    let g = chi.group();
    let o = g.element_order(s);
    let e = chi.table.level();
    let step = (e / o) as i64;
    let powers = g.cyclic_subgroup(s);
    let vals: Vec<&Cyclotomic> = powers.iter().map(|&x| chi.value_at(x)).collect();
    let inv_o = arith::rat(1, o as i64);
    (0..o as i64)
        .map(|j| {
            let mut acc = Cyclotomic::zero(e);
            for (i, v) in vals.iter().enumerate() {
                if !v.is_zero() {
                    acc = acc + v.mul_zeta(-step * i as i64 * j);
                }
            }
            acc.to_rational().expect("multiplicities are rational") * &inv_o
        })
        .collect()
}

/// `Ind_<s>^G eta` for `eta = sum_j eta_j xi_s^j`.
pub fn induce_from_cyclic(
    table: &Arc<CharacterTable>,
    eta: &[BigRational],
    s: usize,
) -> Result<VirtualCharacter> {
    let g = table.group();
    let o = g.element_order(s);
    if eta.len() as u64 != o {
        return Err(Error::InvalidParameter(format!(
            "expected {o} multiplicities, got {}",
            eta.len()
        )));
    }
    let e = table.level();
    let step = (e / o) as i64;
    let powers = g.cyclic_subgroup(s);
    // eta(s^i)
    let eta_vals: Vec<Cyclotomic> = (0..o as i64)
        .map(|i| {
            let mut acc = Cyclotomic::zero(e);
            for (j, m) in eta.iter().enumerate() {
                if !m.is_zero() {
                    acc = acc + Cyclotomic::zeta(e, step * i * j as i64).scale(m);
                }
            }
            acc
        })
        .collect();
    // Ind eta(g) = |C_G(g)| / |H| * sum_{h in H, h ~ g} eta(h)
    let values = (0..g.num_classes())
        .map(|c| {
            let mut acc = Cyclotomic::zero(e);
            for (i, &h) in powers.iter().enumerate() {
                if g.class_of(h) == c {
                    acc = acc + &eta_vals[i];
                }
            }
            let centraliser = (g.order() / g.class_size(c)) as i64;
            acc.scale(&arith::rat(centraliser, o as i64))
        })
        .collect();
    VirtualCharacter::from_class_values(table, values)
}

/// `(chi, psi) = |G|^-1 sum_g chi(g) conj(psi(g))`.
pub fn inner_product(chi: &VirtualCharacter, psi: &VirtualCharacter) -> Result<BigRational> {
    if !Arc::ptr_eq(chi.group(), psi.group()) {
        return Err(Error::GroupMismatch);
    }
    chi.table
        .class_inner(&chi.values, &psi.values)
        .to_rational()
        .ok_or(Error::NotRational)
}

/// A degree-one character `g -> exp(2 pi i t_g)`, stored by `t_g` in `[0, 1)`.
#[derive(Debug, Clone)]
pub struct LinearCharacter {
    group: Arc<FiniteGroup>,
    exponents: Vec<BigRational>,
}

impl PartialEq for LinearCharacter {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.group, &other.group) && self.exponents == other.exponents
    }
}

impl LinearCharacter {
    pub fn trivial(group: &Arc<FiniteGroup>) -> Self {
        LinearCharacter {
            group: group.clone(),
            exponents: vec![BigRational::zero(); group.order()],
        }
    }

    pub fn exponents(&self) -> &[BigRational] {
        &self.exponents
    }

    pub fn exponent_at(&self, g: usize) -> &BigRational {
        &self.exponents[g]
    }

    /// Value at `g` as an element of `Q(zeta_e)`.
    pub fn value(&self, g: usize) -> Cyclotomic {
        let e = self.group.exponent();
        let k = &self.exponents[g] * arith::rat_int(e as i64);
        let k: i64 = k.to_integer().try_into().expect("small exponent");
        Cyclotomic::zeta(e, k)
    }

    pub fn is_trivial(&self) -> bool {
        self.exponents.iter().all(Zero::is_zero)
    }

    pub fn mul(&self, other: &Self) -> Self {
        LinearCharacter {
            group: self.group.clone(),
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| arith::frac(&(a + b)))
                .collect(),
        }
    }

    pub fn pow(&self, k: &BigInt) -> Self {
        let k = BigRational::from_integer(k.clone());
        LinearCharacter {
            group: self.group.clone(),
            exponents: self.exponents.iter().map(|a| arith::frac(&(a * &k))).collect(),
        }
    }

    /// Whether `g -> exp(2 pi i t_g)` is multiplicative.
    pub fn is_homomorphism(&self) -> bool {
        let g = &self.group;
        (0..g.order()).all(|a| {
            (0..g.order()).all(|b| {
                self.exponents[g.mul(a, b)] == arith::frac(&(&self.exponents[a] + &self.exponents[b]))
            })
        })
    }

    /// The induced character of `G^ab`, by exponent per quotient element.
    /// Fails if the character is not constant on cosets of `G'`.
    pub fn on_abelianization(&self, ab: &Abelianization) -> Result<Vec<BigRational>> {
        let m = ab.quotient.order();
        let mut out: Vec<Option<BigRational>> = vec![None; m];
        for (g, &img) in ab.projection.images.iter().enumerate() {
            match &out[img] {
                None => out[img] = Some(self.exponents[g].clone()),
                Some(x) if *x == self.exponents[g] => {}
                Some(_) => {
                    return Err(Error::InvalidParameter(
                        "character does not factor through G^ab".into(),
                    ))
                }
            }
        }
        Ok(out.into_iter().map(|x| x.expect("projection is surjective")).collect())
    }
}

/// `det(chi)(g) = zeta_|g|^(sum_j j a_j)` from the restriction of `chi` to `<g>`.
pub fn det_character(chi: &VirtualCharacter) -> Result<LinearCharacter> {
    if !chi.is_integral() {
        return Err(Error::NonIntegral);
    }
    let g = chi.group();
    let mut by_class: Vec<BigRational> = Vec::with_capacity(g.num_classes());
    for c in 0..g.num_classes() {
        let s = g.class_rep(c);
        let o = g.element_order(s);
        let a = restrict_to_cyclic(chi, s);
        let total: BigRational = a
            .iter()
            .enumerate()
            .map(|(j, aj)| aj * arith::rat_int(j as i64))
            .sum();
        by_class.push(arith::frac(&(total / arith::rat_int(o as i64))));
    }
    Ok(LinearCharacter {
        group: g.clone(),
        exponents: (0..g.order()).map(|x| by_class[g.class_of(x)].clone()).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartab::character_table;
    use crate::grp::builtin;
    use crate::arith::{rat, rat_int};

    fn setup(name: &str) -> Arc<CharacterTable> {
        character_table(&Arc::new(builtin(name).unwrap())).unwrap()
    }

    fn element_of_order(g: &FiniteGroup, o: u64, central: Option<bool>) -> usize {
        (0..g.order())
            .find(|&x| {
                g.element_order(x) == o
                    && central.is_none_or(|c| (g.class_size(g.class_of(x)) == 1) == c)
            })
            .unwrap()
    }

    #[test]
    fn restriction_examples() {
        let t = setup("S3");
        let g = t.group().clone();
        let triv = VirtualCharacter::trivial(&t);
        let c3 = element_of_order(&g, 3, None);
        assert_eq!(restrict_to_cyclic(&triv, c3), vec![rat_int(1), rat_int(0), rat_int(0)]);
        let std = VirtualCharacter::irreducible(&t, 2);
        assert_eq!(restrict_to_cyclic(&std, c3), vec![rat_int(0), rat_int(1), rat_int(1)]);

        let t = setup("D4");
        let g = t.group().clone();
        let z = element_of_order(&g, 2, Some(true));
        let two_dim = (0..t.num_irreducibles()).find(|&i| t.degrees()[i] == 2).unwrap();
        let chi = VirtualCharacter::irreducible(&t, two_dim);
        assert_eq!(restrict_to_cyclic(&chi, z), vec![rat_int(0), rat_int(2)]);
    }

    #[test]
    fn restriction_reproduces_values() {
        for name in ["S4", "Q8", "C12", "A4"] {
            let t = setup(name);
            let g = t.group().clone();
            let e = t.level();
            for i in 0..t.num_irreducibles() {
                let chi = VirtualCharacter::irreducible(&t, i);
                for s in 0..g.order() {
                    let a = restrict_to_cyclic(&chi, s);
                    let o = g.element_order(s) as i64;
                    for (k, &x) in g.cyclic_subgroup(s).iter().enumerate() {
                        let mut v = Cyclotomic::zero(e);
                        for (j, aj) in a.iter().enumerate() {
                            v = v + Cyclotomic::zeta(o as u64, (k * j) as i64).scale(aj);
                        }
                        assert_eq!(&v, chi.value_at(x));
                    }
                }
            }
        }
    }

    #[test]
    fn induction_examples() {
        let t = setup("S3");
        let g = t.group().clone();
        let c3 = element_of_order(&g, 3, None);
        let ind = induce_from_cyclic(&t, &[rat_int(1), rat_int(0), rat_int(0)], c3).unwrap();
        assert_eq!(ind.coords(), &[rat_int(1), rat_int(1), rat_int(0)]);
        assert_eq!(ind.degree(), rat_int(2));
        assert!(induce_from_cyclic(&t, &[rat_int(1)], c3).is_err());
    }

    #[test]
    fn inner_product_examples() {
        let t = setup("A4");
        let reg = VirtualCharacter::regular(&t);
        for i in 0..t.num_irreducibles() {
            let chi = VirtualCharacter::irreducible(&t, i);
            assert_eq!(inner_product(&reg, &chi).unwrap(), rat_int(t.degrees()[i] as i64));
            for j in 0..t.num_irreducibles() {
                let psi = VirtualCharacter::irreducible(&t, j);
                let expect = if i == j { 1 } else { 0 };
                assert_eq!(inner_product(&chi, &psi).unwrap(), rat_int(expect));
            }
        }
        let other = setup("C3");
        assert!(matches!(
            inner_product(&VirtualCharacter::trivial(&t), &VirtualCharacter::trivial(&other)),
            Err(Error::GroupMismatch)
        ));
    }

    #[test]
    fn det_examples() {
        let t = setup("S3");
        let sign = det_character(&VirtualCharacter::irreducible(&t, 1)).unwrap();
        let std = det_character(&VirtualCharacter::irreducible(&t, 2)).unwrap();
        assert_eq!(sign, std);
        assert!(!std.is_trivial());
        assert!(std.is_homomorphism());
        // degree-one characters are their own determinant
        for i in 0..2 {
            let d = det_character(&VirtualCharacter::irreducible(&t, i)).unwrap();
            for x in 0..6 {
                assert_eq!(d.value(x), *t.row(i).get(t.group().class_of(x)).unwrap());
            }
        }
        let t = setup("Q8");
        let two = VirtualCharacter::irreducible(&t, 4);
        assert!(det_character(&two).unwrap().is_trivial());
        let half = VirtualCharacter::irreducible(&t, 4).scale(&rat(1, 2));
        assert!(matches!(det_character(&half), Err(Error::NonIntegral)));
    }

    #[test]
    fn det_factors_through_abelianization() {
        let t = setup("S4");
        let ab = t.group().derived_and_abelianization();
        for i in 0..t.num_irreducibles() {
            let d = det_character(&VirtualCharacter::irreducible(&t, i)).unwrap();
            assert_eq!(d.on_abelianization(&ab).unwrap().len(), 2);
        }
    }

    #[test]
    fn galois_twist_of_class_values() {
        let t = setup("C3");
        let xi = VirtualCharacter::irreducible(&t, 1);
        let tw = xi.galois(2).unwrap();
        assert!(tw.coords().iter().filter(|c| c.is_one()).count() == 1);
        assert_ne!(tw.coords(), xi.coords());
    }
}
