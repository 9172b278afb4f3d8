use std::sync::Arc;

use serde::Serialize;

use crate::arith;
use crate::error::{Error, Result};
use crate::grp::FiniteGroup;

/// The finite quotient `<sigma, phi | sigma^M, phi^N, phi sigma phi^-1 = sigma^q>`
/// with elements `sigma^m phi^n` stored as `(m, n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TameQuotient {
    q: u64,
    m: u64,
    n: u64,
}

pub type Word = (u64, u64);

impl TameQuotient {
    pub fn new(q: u64, m: u64, n: u64) -> Result<Self> {
        if q < 2 || m == 0 || n == 0 {
            return Err(Error::InvalidParameter(format!(
                "tame quotient needs q >= 2 and positive M, N (got q = {q}, M = {m}, N = {n})"
            )));
        }
        if arith::mod_pow(q, n, m) != 1 % m {
            return Err(Error::TameRelation(format!("q^N = {q}^{n} is not 1 mod {m}")));
        }
        Ok(TameQuotient { q, m, n })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn big_m(&self) -> u64 {
        self.m
    }

    pub fn big_n(&self) -> u64 {
        self.n
    }

    pub fn order(&self) -> usize {
        (self.m * self.n) as usize
    }

    pub fn sigma(&self) -> Word {
        (1 % self.m, 0)
    }

    pub fn phi(&self) -> Word {
        (0, 1 % self.n)
    }

    /// `(m1, n1)(m2, n2) = (m1 + m2 q^n1, n1 + n2)`.
    pub fn mul(&self, a: Word, b: Word) -> Word {
        let twist = arith::mod_pow(self.q, a.1, self.m);
        ((a.0 + b.0 * twist) % self.m, (a.1 + b.1) % self.n)
    }

    pub fn inv(&self, a: Word) -> Word {
        let n = (self.n - a.1) % self.n;
        // (m, n)^-1 = (-m q^-n, -n) = (-m q^(N - n), -n)
        let twist = arith::mod_pow(self.q, n, self.m);
        ((self.m - a.0 * twist % self.m) % self.m, n)
    }

    pub fn index(&self, w: Word) -> usize {
        (w.0 + self.m * w.1) as usize
    }

    pub fn word(&self, i: usize) -> Word {
        (i as u64 % self.m, i as u64 / self.m)
    }

    pub fn words(&self) -> impl Iterator<Item = Word> + '_ {
        (0..self.order()).map(|i| self.word(i))
    }

    /// The quotient as an explicit group; the Cayley table is validated.
    pub fn to_group(&self) -> Result<FiniteGroup> {
        let table = (0..self.order())
            .map(|i| {
                (0..self.order())
                    .map(|j| self.index(self.mul(self.word(i), self.word(j))))
                    .collect()
            })
            .collect();
        let labels = self
            .words()
            .map(|(m, n)| format!("s^{m}f^{n}"))
            .collect();
        FiniteGroup::from_table(
            format!("Tame(q={}, M={}, N={})", self.q, self.m, self.n),
            table,
            Some(labels),
        )
    }

    /// `phi sigma phi^-1 = sigma^q`.
    pub fn relation_holds(&self) -> bool {
        let lhs = self.mul(self.mul(self.phi(), self.sigma()), self.inv(self.phi()));
        let mut rhs = (0, 0);
        for _ in 0..self.q {
            rhs = self.mul(rhs, self.sigma());
        }
        lhs == rhs
    }
}

/// One check of a factorisation report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactorCheck {
    pub name: &'static str,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failing_pair: Option<[String; 2]>,
}

/// `pi = pi_r * pi_nr` for the homomorphism `sigma -> s`, `phi -> t`.
#[derive(Debug, Clone, Serialize)]
pub struct FactorisationReport {
    pub q: u64,
    #[serde(rename = "M")]
    pub m: u64,
    #[serde(rename = "N")]
    pub n: u64,
    pub s: String,
    pub t: String,
    pub checks: Vec<FactorCheck>,
    #[serde(skip)]
    pub pi: Vec<usize>,
    #[serde(skip)]
    pub pi_r: Vec<usize>,
    #[serde(skip)]
    pub pi_nr: Vec<usize>,
}

impl FactorisationReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// Fails unless `s^M = e`, `t^N = e` and `t s t^-1 = s^q`.
pub fn check_tame_hom(t_quot: &TameQuotient, g: &FiniteGroup, s: usize, t: usize) -> Result<()> {
    let m = t_quot.big_m() as i64;
    let n = t_quot.big_n() as i64;
    if g.pow(s, m) != g.identity() {
        return Err(Error::TameRelation(format!("s^M != e for s = {}, M = {m}", g.label(s))));
    }
    if g.pow(t, n) != g.identity() {
        return Err(Error::TameRelation(format!("t^N != e for t = {}, N = {n}", g.label(t))));
    }
    if g.mul(g.mul(t, s), g.inv(t)) != g.pow(s, t_quot.q() as i64) {
        return Err(Error::TameRelation(format!(
            "t s t^-1 != s^q for s = {}, t = {}, q = {}",
            g.label(s),
            g.label(t),
            t_quot.q()
        )));
    }
    Ok(())
}

/// Tabulate `pi`, `pi_r`, `pi_nr` and check the factorisation contracts over
/// every pair of words.
pub fn factorise_hom(
    t_quot: &TameQuotient,
    g: &Arc<FiniteGroup>,
    s: usize,
    t: usize,
) -> Result<FactorisationReport> {
    check_tame_hom(t_quot, g, s, t)?;
    let words: Vec<Word> = t_quot.words().collect();
    let pi_r: Vec<usize> = words.iter().map(|&(m, _)| g.pow(s, m as i64)).collect();
    let pi_nr: Vec<usize> = words.iter().map(|&(_, n)| g.pow(t, n as i64)).collect();
    let pi: Vec<usize> = words
        .iter()
        .map(|&(m, n)| g.mul(g.pow(s, m as i64), g.pow(t, n as i64)))
        .collect();

    let fmt_word = |w: Word| format!("s^{}f^{}", w.0, w.1);
    let over_pairs = |name: &'static str, ok: &dyn Fn(usize, usize) -> bool| {
        let mut failing = None;
        'outer: for a in 0..words.len() {
            for b in 0..words.len() {
                if !ok(a, b) {
                    failing = Some([fmt_word(words[a]), fmt_word(words[b])]);
                    break 'outer;
                }
            }
        }
        FactorCheck {
            name,
            pass: failing.is_none(),
            failing_pair: failing,
        }
    };
    let prod = |a: usize, b: usize| t_quot.index(t_quot.mul(words[a], words[b]));

    let mut checks = Vec::new();
    checks.push(over_pairs("pi_homomorphism", &|a, b| {
        pi[prod(a, b)] == g.mul(pi[a], pi[b])
    }));
    checks.push(over_pairs("pi_nr_homomorphism", &|a, b| {
        pi_nr[prod(a, b)] == g.mul(pi_nr[a], pi_nr[b])
    }));
    checks.push(over_pairs("pi_r_cocycle", &|a, b| {
        let rhs = g.mul(
            g.mul(g.mul(pi_r[a], pi_nr[a]), pi_r[b]),
            g.inv(pi_nr[a]),
        );
        pi_r[prod(a, b)] == rhs
    }));
    let pointwise = (0..words.len()).find(|&a| pi[a] != g.mul(pi_r[a], pi_nr[a]));
    checks.push(FactorCheck {
        name: "pi_equals_pi_r_pi_nr",
        pass: pointwise.is_none(),
        failing_pair: pointwise.map(|a| [fmt_word(words[a]), fmt_word((0, 0))]),
    });
    let sigma_set = g.sigma_set(t_quot.q(), false)?;
    checks.push(FactorCheck {
        name: "s_in_sigma_q",
        pass: sigma_set.binary_search(&s).is_ok(),
        failing_pair: None,
    });

    Ok(FactorisationReport {
        q: t_quot.q(),
        m: t_quot.big_m(),
        n: t_quot.big_n(),
        s: g.label(s).to_string(),
        t: g.label(t).to_string(),
        checks,
        pi,
        pi_r,
        pi_nr,
    })
}

/// Every `(s, t)` with `M = |s|` prime to `q`, `N = ord_M(q)`, `t^N = e` and
/// `t s t^-1 = s^q`, paired with its quotient.
pub fn admissible_pairs(g: &FiniteGroup, q: u64) -> Vec<(TameQuotient, usize, usize)> {
    let mut out = Vec::new();
    for s in 0..g.order() {
        let m = g.element_order(s);
        if arith::gcd(m, q) != 1 {
            continue;
        }
        let n = arith::multiplicative_order(q, m).expect("q is a unit mod |s|");
        let quot = TameQuotient::new(q, m, n).expect("q^N = 1 mod M");
        for t in 0..g.order() {
            if check_tame_hom(&quot, g, s, t).is_ok() {
                out.push((quot, s, t));
            }
        }
    }
    out
}
