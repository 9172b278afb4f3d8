use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::{self, format_rational, parse_rational};
use crate::cyclo::Cyclotomic;
use crate::error::{Error, Result};

/// A finite formal sum `sum_alpha c_alpha varpi^alpha` with rational exponents
/// and cyclotomic coefficients, over a residue field of order `q`.
///
/// Negative exponents are allowed so that monomials are invertible.
#[derive(Debug, Clone)]
pub struct LocalElement {
    q: u64,
    strict: bool,
    terms: BTreeMap<BigRational, Cyclotomic>,
}

impl PartialEq for LocalElement {
    fn eq(&self, other: &Self) -> bool {
        self.q == other.q && self.terms == other.terms
    }
}

impl Eq for LocalElement {}

/// Smallest prime dividing `q`.
pub fn residue_characteristic(q: u64) -> u64 {
    arith::prime_factors(q).first().copied().unwrap_or(1)
}

impl LocalElement {
    pub fn zero(q: u64, strict: bool) -> Self {
        LocalElement {
            q,
            strict,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(q: u64, strict: bool) -> Self {
        Self::constant(q, strict, Cyclotomic::one(1))
    }

    pub fn constant(q: u64, strict: bool, c: Cyclotomic) -> Self {
        let mut x = Self::zero(q, strict);
        x.push(BigRational::zero(), c);
        x
    }

    /// `varpi^alpha`.
    pub fn uniformizer_power(q: u64, strict: bool, alpha: BigRational) -> Self {
        let mut x = Self::zero(q, strict);
        x.push(alpha, Cyclotomic::one(1));
        x
    }

    /// Build from terms, checking tameness in strict mode.
    pub fn from_terms(
        q: u64,
        strict: bool,
        terms: impl IntoIterator<Item = (BigRational, Cyclotomic)>,
    ) -> Result<Self> {
        check_q(q, strict)?;
        let mut x = Self::zero(q, strict);
        for (a, c) in terms {
            x.push(a, c);
        }
        if strict {
            x.check_tame()?;
        }
        Ok(x)
    }

    fn push(&mut self, alpha: BigRational, c: Cyclotomic) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&alpha) {
            Some(old) => {
                let s = &old + &c;
                if !s.is_zero() {
                    self.terms.insert(alpha, s);
                }
            }
            None => {
                self.terms.insert(alpha, c);
            }
        }
    }

    /// Fails if an exponent denominator or coefficient level meets the
    /// residue characteristic.
    pub fn check_tame(&self) -> Result<()> {
        let p = residue_characteristic(self.q);
        for (a, c) in &self.terms {
            if a.denom() % BigInt::from(p) == BigInt::zero() {
                return Err(Error::Wild(format!(
                    "exponent {} has denominator divisible by {p}",
                    format_rational(a)
                )));
            }
            if c.level() % p == 0 && c.to_minimal_level().level() % p == 0 {
                return Err(Error::Wild(format!("coefficient {c} needs roots of unity of order divisible by {p}")));
            }
        }
        Ok(())
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn is_strict(&self) -> bool {
        self.strict
    }

    pub fn terms(&self) -> &BTreeMap<BigRational, Cyclotomic> {
        &self.terms
    }

    pub fn coefficient(&self, alpha: &BigRational) -> Option<&Cyclotomic> {
        self.terms.get(alpha)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_monomial()
            .is_some_and(|(a, c)| a.is_zero() && c.is_one())
    }

    /// `(alpha, c)` if the element is `c varpi^alpha`.
    pub fn as_monomial(&self) -> Option<(&BigRational, &Cyclotomic)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    /// Exponent `alpha` if the element is exactly `varpi^alpha`.
    pub fn uniformizer_exponent(&self) -> Option<&BigRational> {
        self.as_monomial().filter(|(_, c)| c.is_one()).map(|(a, _)| a)
    }

    /// Least exponent present.
    pub fn valuation(&self) -> Option<&BigRational> {
        self.terms.keys().next()
    }

    fn like(&self) -> Self {
        Self::zero(self.q, self.strict)
    }

    fn same_q(&self, other: &Self) {
        assert_eq!(self.q, other.q, "local elements over different residue fields");
    }

    pub fn add_ref(&self, other: &Self) -> Self {
        self.same_q(other);
        let mut out = self.clone();
        for (a, c) in &other.terms {
            out.push(a.clone(), c.clone());
        }
        out
    }

    pub fn neg_ref(&self) -> Self {
        let mut out = self.like();
        out.terms = self.terms.iter().map(|(a, c)| (a.clone(), c.neg_ref())).collect();
        out
    }

    pub fn sub_ref(&self, other: &Self) -> Self {
        self.add_ref(&other.neg_ref())
    }

    pub fn mul_ref(&self, other: &Self) -> Self {
        self.same_q(other);
        let mut out = self.like();
        for (a, c) in &self.terms {
            for (b, d) in &other.terms {
                out.push(a + b, c * d);
            }
        }
        out
    }

    pub fn scale(&self, c: &Cyclotomic) -> Self {
        let mut out = self.like();
        for (a, d) in &self.terms {
            out.push(a.clone(), c * d);
        }
        out
    }

    pub fn scale_rational(&self, r: &BigRational) -> Self {
        let mut out = self.like();
        for (a, d) in &self.terms {
            out.push(a.clone(), d.scale(r));
        }
        out
    }

    /// Inverse, defined for nonzero monomials only.
    pub fn inverse(&self) -> Result<Self> {
        let (a, c) = self
            .as_monomial()
            .ok_or_else(|| Error::NotInvertible(format!("{self} is not a monomial")))?;
        let mut out = self.like();
        out.push(-a, c.inverse()?);
        Ok(out)
    }

    /// Integer power; negative powers need a monomial.
    pub fn pow(&self, e: &BigInt) -> Result<Self> {
        if let Some((a, c)) = self.as_monomial() {
            let k = e
                .to_i64()
                .ok_or_else(|| Error::InvalidParameter("exponent out of range".into()))?;
            let mut out = self.like();
            out.push(a * BigRational::from_integer(e.clone()), c.pow(k)?);
            return Ok(out);
        }
        if e.is_negative() {
            return Err(Error::NotInvertible(format!("{self} is not a monomial")));
        }
        let mut acc = Self::one(self.q, self.strict);
        let mut base = self.clone();
        let mut k = e.clone();
        let two = BigInt::from(2);
        while !k.is_zero() {
            if (&k % &two).is_one() {
                acc = acc.mul_ref(&base);
            }
            k /= &two;
            if !k.is_zero() {
                base = base.mul_ref(&base);
            }
        }
        Ok(acc)
    }

    /// `sigma`: `varpi^(a/m) -> zeta_m^a varpi^(a/m)` with `a/m` in lowest
    /// terms; roots of unity are fixed.
    pub fn sigma_op(&self) -> Self {
        self.sigma_pow(1)
    }

    /// `sigma^k`.
    pub fn sigma_pow(&self, k: i64) -> Self {
        let mut out = self.like();
        for (a, c) in &self.terms {
            let m = a.denom().to_u64().expect("denominator fits in u64");
            let num = a.numer().to_i64().expect("numerator fits in i64");
            let z = Cyclotomic::zeta(m, num * k);
            out.push(a.clone(), c * &z);
        }
        out
    }

    /// `phi`: `zeta_m -> zeta_m^q`, fixing every `varpi^(1/m)`.
    pub fn phi_op(&self) -> Result<Self> {
        self.galois_coefficients(self.q as i64, false)
    }

    pub fn phi_inv(&self) -> Result<Self> {
        self.galois_coefficients(self.q as i64, true)
    }

    /// `phi^k` for any integer `k`.
    pub fn phi_pow(&self, k: i64) -> Result<Self> {
        let mut x = self.clone();
        for _ in 0..k.unsigned_abs() {
            x = if k > 0 { x.phi_op()? } else { x.phi_inv()? };
        }
        Ok(x)
    }

    fn galois_coefficients(&self, q: i64, inverse: bool) -> Result<Self> {
        let mut out = self.like();
        for (a, c) in &self.terms {
            let c = if arith::gcd(c.level(), self.q) == 1 {
                c.clone()
            } else {
                c.to_minimal_level()
            };
            let n = c.level();
            if arith::gcd(n, self.q) != 1 {
                return Err(Error::Wild(format!(
                    "coefficient {c} involves roots of unity of order not prime to q = {}",
                    self.q
                )));
            }
            let k = if inverse {
                arith::mod_inverse(q, n)? as i64
            } else {
                q
            };
            out.push(a.clone(), c.galois(k)?);
        }
        Ok(out)
    }
}

fn check_q(q: u64, strict: bool) -> Result<()> {
    if q < 2 {
        return Err(Error::InvalidParameter(format!("q = {q} must be at least 2")));
    }
    if strict && !arith::is_prime_power(q) {
        return Err(Error::InvalidParameter(format!("q = {q} is not a prime power")));
    }
    Ok(())
}

/// `beta_m = (1/m) sum_{i < m} varpi^(i/m)`.
pub fn beta(m: u64, q: u64, strict: bool) -> Result<LocalElement> {
    check_q(q, strict)?;
    if m == 0 {
        return Err(Error::InvalidParameter("order must be positive".into()));
    }
    if arith::gcd(m, q) != 1 {
        return Err(Error::NotCoprime {
            k: m as i64,
            modulus: q,
        });
    }
    let w = arith::rat(1, m as i64);
    let mut x = LocalElement::zero(q, strict);
    for i in 0..m as i64 {
        x.push(arith::rat(i, m as i64), Cyclotomic::from_rational(w.clone(), 1));
    }
    Ok(x)
}

impl Add for &LocalElement {
    type Output = LocalElement;
    fn add(self, rhs: &LocalElement) -> LocalElement {
        self.add_ref(rhs)
    }
}

impl Sub for &LocalElement {
    type Output = LocalElement;
    fn sub(self, rhs: &LocalElement) -> LocalElement {
        self.sub_ref(rhs)
    }
}

impl Mul for &LocalElement {
    type Output = LocalElement;
    fn mul(self, rhs: &LocalElement) -> LocalElement {
        self.mul_ref(rhs)
    }
}

impl Neg for &LocalElement {
    type Output = LocalElement;
    fn neg(self) -> LocalElement {
        self.neg_ref()
    }
}

/// `local(q; a1:cyclo(...), a2:cyclo(...))`, terms by increasing exponent.
impl fmt::Display for LocalElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "local({};", self.q)?;
        for (i, (a, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, " {}:{}", format_rational(a), c.to_minimal_level())?;
        }
        write!(f, ")")
    }
}

impl FromStr for LocalElement {
    type Err = Error;

    /// Parses in strict mode.
    fn from_str(s: &str) -> Result<Self> {
        parse_local(s, true)
    }
}

pub fn parse_local(s: &str, strict: bool) -> Result<LocalElement> {
    let bad = || Error::Parse(format!("invalid local element `{s}`"));
    let body = s
        .trim()
        .strip_prefix("local(")
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(bad)?;
    let (q, rest) = body.split_once(';').ok_or_else(bad)?;
    let q: u64 = q.trim().parse().map_err(|_| bad())?;
    let mut terms = Vec::new();
    let mut rest = rest.trim();
    while !rest.is_empty() {
        let (alpha, tail) = rest.split_once(':').ok_or_else(bad)?;
        let end = tail.find(')').ok_or_else(bad)? + 1;
        let c: Cyclotomic = tail[..end].parse()?;
        terms.push((parse_rational(alpha)?, c));
        rest = tail[end..].trim_start().trim_start_matches(',').trim_start();
    }
    LocalElement::from_terms(q, strict, terms)
}
