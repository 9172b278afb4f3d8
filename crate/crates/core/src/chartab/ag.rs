use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};
use crate::grp::FiniteGroup;
use crate::lattice::{self, IntMatrix};

use super::{restrict_to_cyclic, CharacterTable, VirtualCharacter};

/// The lattice of virtual characters with trivial determinant, as a
/// sublattice of `Z^Irr(G)`.
#[derive(Debug, Clone)]
pub struct AGLattice {
    table: Arc<CharacterTable>,
    basis: IntMatrix,
    index: BigInt,
    quotient_invariants: Vec<BigInt>,
}

/// `D[i][k]`: `det(chi_i)(g_k) = zeta_e^D[i][k]`.
pub(crate) fn det_exponent_matrix(table: &Arc<CharacterTable>) -> IntMatrix {
    let g = table.group();
    let e = g.exponent();
    (0..table.num_irreducibles())
        .map(|i| {
            let chi = VirtualCharacter::irreducible(table, i);
            (0..g.num_classes())
                .map(|k| {
                    let s = g.class_rep(k);
                    let o = g.element_order(s);
                    let a = restrict_to_cyclic(&chi, s);
                    let total: BigInt = a
                        .iter()
                        .enumerate()
                        .map(|(j, aj)| aj.to_integer() * BigInt::from(j))
                        .sum();
                    let v = total * BigInt::from(e / o);
                    v.mod_floor_big(e)
                })
                .collect()
        })
        .collect()
}

trait ModFloor {
    fn mod_floor_big(&self, m: u64) -> BigInt;
}

impl ModFloor for BigInt {
    fn mod_floor_big(&self, m: u64) -> BigInt {
        num_integer::Integer::mod_floor(self, &BigInt::from(m))
    }
}

pub fn ag_kernel(table: &Arc<CharacterTable>) -> AGLattice {
    let g = table.group();
    let e = BigInt::from(g.exponent());
    let d = det_exponent_matrix(table);
    let basis = lattice::kernel_mod(&d, g.num_classes(), &e);
    let index = lattice::hnf_index(&basis);
    let quotient_invariants = lattice::smith_diagonal(&basis)
        .into_iter()
        .filter(|x| !x.is_one())
        .collect();
    AGLattice {
        table: table.clone(),
        basis,
        index,
        quotient_invariants,
    }
}

impl AGLattice {
    pub fn table(&self) -> &Arc<CharacterTable> {
        &self.table
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        self.table.group()
    }

    /// Hermite basis, one row per generator.
    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// `[Z^Irr(G) : A_G]`.
    pub fn index(&self) -> &BigInt {
        &self.index
    }

    /// Invariant factors of `Z^Irr(G) / A_G`.
    pub fn quotient_invariants(&self) -> &[BigInt] {
        &self.quotient_invariants
    }

    pub fn quotient_invariants_u64(&self) -> Vec<u64> {
        self.quotient_invariants
            .iter()
            .map(|x| x.to_u64().expect("invariant fits in u64"))
            .collect()
    }

    pub fn contains(&self, coords: &[BigInt]) -> bool {
        self.coordinates(coords).is_some()
    }

    pub fn contains_char(&self, chi: &VirtualCharacter) -> bool {
        chi.integer_coords().is_some_and(|c| self.contains(&c))
    }

    pub fn coordinates(&self, coords: &[BigInt]) -> Option<Vec<BigInt>> {
        if coords.len() != self.table.num_irreducibles() {
            return None;
        }
        lattice::lattice_coordinates(&self.basis, coords)
    }

    /// Error naming the offending coordinates when `coords` is outside `A_G`.
    pub fn require(&self, coords: &[BigInt]) -> Result<Vec<BigInt>> {
        self.coordinates(coords)
            .ok_or_else(|| Error::NotInLattice(coords.iter().map(|c| c.to_string()).collect()))
    }

    pub fn basis_characters(&self) -> Vec<VirtualCharacter> {
        self.basis
            .iter()
            .map(|row| VirtualCharacter::from_big_coords(&self.table, row).expect("shape matches"))
            .collect()
    }
}

/// Integer combination `c` has trivial determinant iff `c . D = 0 (mod e)`.
#[cfg(test)]
pub(crate) fn det_is_trivial(table: &Arc<CharacterTable>, coords: &[BigInt]) -> bool {
    let e = table.group().exponent();
    let d = det_exponent_matrix(table);
    (0..table.group().num_classes()).all(|k| {
        let s: BigInt = coords.iter().zip(&d).map(|(c, row)| c * &row[k]).sum();
        s.mod_floor_big(e) == BigInt::from(0)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartab::{character_table, det_character};
    use crate::grp::{abelian_invariants, builtin, catalog_up_to};

    fn table(name: &str) -> Arc<CharacterTable> {
        character_table(&Arc::new(builtin(name).unwrap())).unwrap()
    }

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn c2_lattice() {
        let ag = ag_kernel(&table("C2"));
        assert_eq!(ag.basis(), &vec![big(&[1, 0]), big(&[0, 2])]);
        assert_eq!(ag.index(), &BigInt::from(2));
        assert!(ag.contains(&big(&[5, 4])));
        assert!(!ag.contains(&big(&[0, 1])));
        assert!(matches!(ag.require(&big(&[0, 1])), Err(Error::NotInLattice(_))));
    }

    #[test]
    fn quotient_matches_abelianization() {
        for g in catalog_up_to(60) {
            let g = Arc::new(g);
            let t = character_table(&g).unwrap();
            let ag = ag_kernel(&t);
            let ab = g.derived_and_abelianization();
            assert_eq!(ag.quotient_invariants_u64(), abelian_invariants(&ab.quotient), "{}", g.name());
            assert_eq!(ag.index(), &BigInt::from(ab.quotient.order()), "{}", g.name());
            assert_eq!(ag.rank(), t.num_irreducibles());
        }
    }

    #[test]
    fn basis_has_trivial_determinant() {
        for name in ["S3", "D4", "Q8", "A4", "C6"] {
            let ag = ag_kernel(&table(name));
            for chi in ag.basis_characters() {
                assert!(det_character(&chi).unwrap().is_trivial(), "{name}");
                assert!(det_is_trivial(ag.table(), &chi.integer_coords().unwrap()));
            }
        }
    }
}
