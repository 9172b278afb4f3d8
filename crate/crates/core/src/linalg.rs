//! Dense linear algebra over exact fields.
//!
//! Fields are passed as explicit objects so that a single Gaussian
//! elimination serves `Q`, `Q(zeta_N)` and `F_p` alike.

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::cyclo::Cyclotomic;

pub trait Field {
    type Elem: Clone;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse of a nonzero element.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
}

pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        a.recip()
    }
}

/// `Q(zeta_level)`.
pub struct CyclotomicField {
    pub level: u64,
}

impl Field for CyclotomicField {
    type Elem = Cyclotomic;

    fn zero(&self) -> Cyclotomic {
        Cyclotomic::zero(self.level)
    }
    fn one(&self) -> Cyclotomic {
        Cyclotomic::one(self.level)
    }
    fn is_zero(&self, a: &Cyclotomic) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &Cyclotomic, b: &Cyclotomic) -> Cyclotomic {
        a + b
    }
    fn sub(&self, a: &Cyclotomic, b: &Cyclotomic) -> Cyclotomic {
        a - b
    }
    fn mul(&self, a: &Cyclotomic, b: &Cyclotomic) -> Cyclotomic {
        a * b
    }
    fn inv(&self, a: &Cyclotomic) -> Cyclotomic {
        a.inverse().expect("pivot is nonzero")
    }
}

/// The prime field `F_p`, elements as `u64` residues.
pub struct PrimeField {
    pub p: u64,
}

impl PrimeField {
    pub fn reduce(&self, a: i64) -> u64 {
        a.rem_euclid(self.p as i64) as u64
    }

    pub fn pow(&self, a: u64, e: u64) -> u64 {
        crate::arith::mod_pow(a, e, self.p)
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.p - b) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }
    fn inv(&self, a: &u64) -> u64 {
        self.pow(*a, self.p - 2)
    }
}

/// In-place reduced row echelon form. Returns the pivot columns.
pub fn rref<F: Field>(field: &F, m: &mut [Vec<F::Elem>]) -> Vec<usize> {
    let rows = m.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = m[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| !field.is_zero(&m[i][c])) else {
            continue;
        };
        m.swap(r, pr);
        let inv = field.inv(&m[r][c]);
        for x in m[r].iter_mut() {
            *x = field.mul(x, &inv);
        }
        for i in 0..rows {
            if i != r && !field.is_zero(&m[i][c]) {
                let f = m[i][c].clone();
                for j in 0..cols {
                    if !field.is_zero(&m[r][j]) {
                        let t = field.mul(&f, &m[r][j]);
                        m[i][j] = field.sub(&m[i][j], &t);
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Basis of the right null space `{x : m x = 0}`.
pub fn nullspace<F: Field>(field: &F, m: &[Vec<F::Elem>], cols: usize) -> Vec<Vec<F::Elem>> {
    let mut a = m.to_vec();
    let pivots = rref(field, &mut a);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![field.zero(); cols];
            v[f] = field.one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = field.sub(&field.zero(), &a[r][f]);
            }
            v
        })
        .collect()
}

/// Solve `A x = b` given the augmented matrix `[A | b]` with `n` unknowns.
/// Returns `None` if the system is inconsistent; free variables are set to zero.
pub fn solve_augmented<F: Field>(
    field: &F,
    mut m: Vec<Vec<F::Elem>>,
    n: usize,
) -> Option<Vec<F::Elem>> {
    let pivots = rref(field, &mut m);
    if pivots.contains(&n) {
        return None;
    }
    let mut x = vec![field.zero(); n];
    for (r, &pc) in pivots.iter().enumerate() {
        x[pc] = m[r][n].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat_int;

    #[test]
    fn rational_solve_and_kernel() {
        let m = vec![
            vec![rat_int(1), rat_int(2), rat_int(3)],
            vec![rat_int(2), rat_int(4), rat_int(6)],
        ];
        let ns = nullspace(&Rationals, &m, 3);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            let dot: BigRational = m[0].iter().zip(v).map(|(a, b)| a * b).sum();
            assert!(dot.is_zero());
        }
        let aug = vec![
            vec![rat_int(1), rat_int(1), rat_int(3)],
            vec![rat_int(1), rat_int(-1), rat_int(1)],
        ];
        assert_eq!(solve_augmented(&Rationals, aug, 2), Some(vec![rat_int(2), rat_int(1)]));
        let bad = vec![vec![rat_int(1), rat_int(1)], vec![rat_int(2), rat_int(3)]];
        let mut bad = bad.clone();
        bad[1] = vec![rat_int(0), rat_int(1)];
        assert_eq!(solve_augmented(&Rationals, bad, 1), None);
    }

    #[test]
    fn prime_field_inverse() {
        let f = PrimeField { p: 13 };
        for a in 1..13 {
            assert_eq!(f.mul(&a, &f.inv(&a)), 1);
        }
    }
}
