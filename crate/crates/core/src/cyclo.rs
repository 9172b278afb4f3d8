//! Exact arithmetic in cyclotomic fields `Q(zeta_N)`.
//!
//! An element at level `N` is stored as its coefficient vector in the power
//! basis `1, zeta_N, ..., zeta_N^(phi(N)-1)` after reduction modulo the `N`-th
//! cyclotomic polynomial. The roots of unity are compatible across levels:
//! `zeta_(mn)^m = zeta_n`, so raising an element to a multiple level never
//! changes the field element it denotes.
//!
//! Binary operations lift both operands to the lcm of their levels. Results
//! are never lowered automatically; use [`Cyclotomic::lower`] or
//! [`Cyclotomic::to_minimal_level`] for that.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::{self, format_rational, parse_rational};
use crate::error::{Error, Result};

fn poly_cache() -> &'static RwLock<HashMap<u64, Arc<Vec<i64>>>> {
    static CACHE: OnceLock<RwLock<HashMap<u64, Arc<Vec<i64>>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Coefficients (low degree first) of the monic cyclotomic polynomial `Phi_n`.
pub fn cyclotomic_polynomial(n: u64) -> Arc<Vec<i64>> {
    assert!(n >= 1, "cyclotomic polynomial of level 0");
    if let Some(p) = poly_cache().read().unwrap().get(&n) {
        return p.clone();
    }
    // x^n - 1 divided by Phi_d for every proper divisor d.
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in arith::divisors(n) {
        if d == n {
            continue;
        }
        let div = cyclotomic_polynomial(d);
        num = divide_monic(&num, &div);
    }
    let p = Arc::new(num);
    poly_cache().write().unwrap().insert(n, p.clone());
    p
}

fn divide_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let qlen = num.len() - dn;
    let mut quot = vec![0i64; qlen];
    for k in (0..qlen).rev() {
        let c = rem[k + dn];
        quot[k] = c;
        if c != 0 {
            for (i, &d) in den.iter().enumerate() {
                rem[k + i] -= c * d;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0), "inexact cyclotomic division");
    quot
}

/// Reduce a polynomial in `zeta_n` to the canonical power basis.
fn reduce(mut poly: Vec<BigRational>, n: u64) -> Vec<BigRational> {
    let n_us = n as usize;
    if poly.len() > n_us {
        // zeta_n^n = 1
        let extra = poly.split_off(n_us);
        for (i, c) in extra.into_iter().enumerate() {
            if !c.is_zero() {
                poly[i % n_us] += c;
            }
        }
    }
    let phi = cyclotomic_polynomial(n);
    let d = phi.len() - 1;
    if poly.len() > d {
        for k in (d..poly.len()).rev() {
            if poly[k].is_zero() {
                continue;
            }
            let c = std::mem::replace(&mut poly[k], BigRational::zero());
            for (i, &p) in phi[..d].iter().enumerate() {
                if p != 0 {
                    poly[k - d + i] -= &c * BigInt::from(p);
                }
            }
        }
        poly.truncate(d);
    }
    poly.resize(d, BigRational::zero());
    poly
}

/// An exact element of the cyclotomic field `Q(zeta_level)`.
#[derive(Clone, Debug)]
pub struct Cyclotomic {
    level: u64,
    coeffs: Vec<BigRational>,
}

impl Cyclotomic {
    pub fn zero(level: u64) -> Self {
        assert!(level >= 1);
        Cyclotomic {
            level,
            coeffs: vec![BigRational::zero(); arith::totient(level) as usize],
        }
    }

    pub fn one(level: u64) -> Self {
        Self::from_rational(BigRational::one(), level)
    }

    pub fn from_rational(r: BigRational, level: u64) -> Self {
        let mut z = Self::zero(level);
        z.coeffs[0] = r;
        z
    }

    pub fn from_int(n: i64, level: u64) -> Self {
        Self::from_rational(arith::rat_int(n), level)
    }

    /// `zeta_level^k` for any integer `k`.
    pub fn zeta(level: u64, k: i64) -> Self {
        let e = arith::rem_euclid(k, level) as usize;
        let mut poly = vec![BigRational::zero(); e + 1];
        poly[e] = BigRational::one();
        Cyclotomic {
            level,
            coeffs: reduce(poly, level),
        }
    }

    /// Build from arbitrary polynomial coefficients in `zeta_level` (low degree first).
    pub fn from_poly(level: u64, poly: Vec<BigRational>) -> Self {
        Cyclotomic {
            level,
            coeffs: reduce(poly, level),
        }
    }

    /// Build from canonical coordinates; `coeffs.len()` must be `phi(level)`.
    pub fn from_coeffs(level: u64, coeffs: Vec<BigRational>) -> Result<Self> {
        if level == 0 || coeffs.len() as u64 != arith::totient(level) {
            return Err(Error::Parse(format!(
                "level {level} needs {} coefficients, got {}",
                arith::totient(level.max(1)),
                coeffs.len()
            )));
        }
        Ok(Cyclotomic { level, coeffs })
    }

    pub fn level(&self) -> u64 {
        self.level
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.to_rational().is_some_and(|r| r.is_one())
    }

    /// The rational value, if the element lies in `Q`.
    pub fn to_rational(&self) -> Option<BigRational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// The same element expressed at level `target`.
    pub fn raise(&self, target: u64) -> Result<Self> {
        if target == 0 || !target.is_multiple_of(self.level) {
            return Err(Error::LevelMismatch {
                level: self.level,
                target,
            });
        }
        Ok(self.raise_unchecked(target))
    }

    fn raise_unchecked(&self, target: u64) -> Self {
        if target == self.level {
            return self.clone();
        }
        let step = (target / self.level) as usize;
        let mut poly = vec![BigRational::zero(); (self.coeffs.len().max(1) - 1) * step + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                poly[i * step] = c.clone();
            }
        }
        Cyclotomic::from_poly(target, poly)
    }

    /// Express the element at level `d` (a divisor of the current level) if it
    /// lies in `Q(zeta_d)`.
    pub fn lower(&self, d: u64) -> Result<Option<Self>> {
        if d == 0 || !self.level.is_multiple_of(d) {
            return Err(Error::LevelMismatch {
                level: d,
                target: self.level,
            });
        }
        if d == self.level {
            return Ok(Some(self.clone()));
        }
        // Columns: the power basis of level d, raised to this level.
        let phi_d = arith::totient(d) as usize;
        let rows = self.coeffs.len();
        let mut m: Vec<Vec<BigRational>> = vec![vec![BigRational::zero(); phi_d + 1]; rows];
        for j in 0..phi_d {
            let b = Cyclotomic::zeta(d, j as i64).raise_unchecked(self.level);
            for i in 0..rows {
                m[i][j] = b.coeffs[i].clone();
            }
        }
        for i in 0..rows {
            m[i][phi_d] = self.coeffs[i].clone();
        }
        let field = crate::linalg::Rationals;
        match crate::linalg::solve_augmented(&field, m, phi_d) {
            Some(sol) => Ok(Some(Cyclotomic {
                level: d,
                coeffs: sol,
            })),
            None => Ok(None),
        }
    }

    /// The element expressed at the least level containing it.
    pub fn to_minimal_level(&self) -> Self {
        if self.to_rational().is_some() {
            return Cyclotomic::from_rational(self.coeffs[0].clone(), 1);
        }
        let mut cur = self.clone();
        loop {
            let mut lowered = false;
            for p in arith::prime_factors(cur.level) {
                let d = cur.level / p;
                // Q(zeta_d) = Q(zeta_2d) for odd d.
                if let Ok(Some(x)) = cur.lower(d) {
                    cur = x;
                    lowered = true;
                    break;
                }
            }
            if !lowered {
                break;
            }
        }
        if cur.level % 4 == 2 {
            if let Ok(Some(x)) = cur.lower(cur.level / 2) {
                cur = x;
            }
        }
        cur
    }

    fn common_level(a: &Self, b: &Self) -> u64 {
        arith::lcm(a.level, b.level)
    }

    fn lifted(&self, level: u64) -> std::borrow::Cow<'_, Self> {
        if level == self.level {
            std::borrow::Cow::Borrowed(self)
        } else {
            std::borrow::Cow::Owned(self.raise_unchecked(level))
        }
    }

    pub fn add_ref(&self, other: &Self) -> Self {
        let n = Self::common_level(self, other);
        let a = self.lifted(n);
        let b = other.lifted(n);
        Cyclotomic {
            level: n,
            coeffs: a.coeffs.iter().zip(b.coeffs.iter()).map(|(x, y)| x + y).collect(),
        }
    }

    pub fn sub_ref(&self, other: &Self) -> Self {
        let n = Self::common_level(self, other);
        let a = self.lifted(n);
        let b = other.lifted(n);
        Cyclotomic {
            level: n,
            coeffs: a.coeffs.iter().zip(b.coeffs.iter()).map(|(x, y)| x - y).collect(),
        }
    }

    pub fn mul_ref(&self, other: &Self) -> Self {
        let n = Self::common_level(self, other);
        if let Some(r) = self.to_rational() {
            return other.lifted(n).scale(&r);
        }
        if let Some(r) = other.to_rational() {
            return self.lifted(n).scale(&r);
        }
        let a = self.lifted(n);
        let b = other.lifted(n);
        let len = a.coeffs.len() + b.coeffs.len() - 1;
        let mut poly = vec![BigRational::zero(); len];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    poly[i + j] += x * y;
                }
            }
        }
        Cyclotomic::from_poly(n, poly)
    }

    pub fn neg_ref(&self) -> Self {
        Cyclotomic {
            level: self.level,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        Cyclotomic {
            level: self.level,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// Multiply by `zeta_level^k`, staying at the current level.
    pub fn mul_zeta(&self, k: i64) -> Self {
        let n = self.level;
        let shift = arith::rem_euclid(k, n) as usize;
        if shift == 0 {
            return self.clone();
        }
        let mut poly = vec![BigRational::zero(); self.coeffs.len() + shift];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                poly[i + shift] = c.clone();
            }
        }
        Cyclotomic::from_poly(n, poly)
    }

    /// The automorphism `zeta_N -> zeta_N^k` of `Q(zeta_N)`, `N` the current level.
    pub fn galois(&self, k: i64) -> Result<Self> {
        let n = self.level;
        let kk = arith::rem_euclid(k, n);
        if arith::gcd(kk, n) != 1 && n > 1 {
            return Err(Error::NotCoprime { k, modulus: n });
        }
        if kk == 1 % n {
            return Ok(self.clone());
        }
        let mut poly = vec![BigRational::zero(); n as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                let e = (i as u64 * kk % n) as usize;
                poly[e] += c;
            }
        }
        Ok(Cyclotomic::from_poly(n, poly))
    }

    /// Complex conjugation.
    pub fn conj(&self) -> Self {
        self.galois(-1).expect("-1 is a unit")
    }

    /// Field norm to `Q` from the current level.
    pub fn norm(&self) -> BigRational {
        let n = self.level;
        let mut acc = Cyclotomic::one(n);
        for k in 1..=n {
            if arith::gcd(k, n) == 1 {
                acc = acc.mul_ref(&self.galois(k as i64).unwrap());
            }
        }
        acc.to_rational().expect("norm is rational")
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(r) = self.to_rational() {
            return Ok(Cyclotomic::from_rational(r.recip(), self.level));
        }
        // x^{-1} = (prod_{k != 1} sigma_k(x)) / N(x)
        let n = self.level;
        let mut others = Cyclotomic::one(n);
        for k in 2..=n {
            if arith::gcd(k, n) == 1 {
                others = others.mul_ref(&self.galois(k as i64).unwrap());
            }
        }
        let norm = self.mul_ref(&others).to_rational().expect("norm is rational");
        Ok(others.scale(&norm.recip()))
    }

    pub fn div_ref(&self, other: &Self) -> Result<Self> {
        Ok(self.mul_ref(&other.inverse()?))
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut exp = e.unsigned_abs();
        let mut acc = Cyclotomic::one(self.level);
        let mut b = base;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul_ref(&b);
            }
            exp >>= 1;
            if exp > 0 {
                b = b.mul_ref(&b);
            }
        }
        Ok(acc)
    }

    /// Lexicographic comparison of coefficient vectors after lifting to a
    /// common level. A total order used only for deterministic sorting.
    pub fn cmp_coeffs(&self, other: &Self) -> std::cmp::Ordering {
        let n = arith::lcm(self.level, other.level);
        let a = self.lifted(n);
        let b = other.lifted(n);
        a.coeffs.cmp(&b.coeffs)
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.level == other.level {
            return self.coeffs == other.coeffs;
        }
        self.sub_ref(other).is_zero()
    }
}

impl Eq for Cyclotomic {}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $inner:ident) => {
        impl $tr<&Cyclotomic> for &Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: &Cyclotomic) -> Cyclotomic {
                self.$inner(rhs)
            }
        }
        impl $tr<Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$inner(&rhs)
            }
        }
        impl $tr<&Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: &Cyclotomic) -> Cyclotomic {
                (&self).$inner(rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        self.neg_ref()
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        self.neg_ref()
    }
}

/// `cyclo(N; c_0, c_1, ..., c_{phi(N)-1})`
impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "cyclo({};", self.level)?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, " {}", format_rational(c))?;
        }
        write!(f, ")")
    }
}

impl FromStr for Cyclotomic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("invalid cyclotomic `{s}`"));
        let body = s
            .trim()
            .strip_prefix("cyclo(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(bad)?;
        let (level, rest) = body.split_once(';').ok_or_else(bad)?;
        let level: u64 = level.trim().parse().map_err(|_| bad())?;
        if level == 0 {
            return Err(bad());
        }
        let coeffs = rest
            .split(',')
            .map(parse_rational)
            .collect::<Result<Vec<_>>>()?;
        Cyclotomic::from_coeffs(level, coeffs)
    }
}
