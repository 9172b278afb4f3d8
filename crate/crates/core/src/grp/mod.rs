//! Explicit finite groups given by Cayley tables.
//!
//! Every construction route (named builtins, permutation generators, table
//! files) normalises to a validated Cayley table over element indices
//! `0..n` with `0` the identity. Conjugacy classes are ordered by their least
//! element, and that least element is the class representative.

mod catalog;
mod iso;
mod parse;
mod perm;

use std::sync::Arc;

use crate::arith;
use crate::error::{Axiom, Error, Result};

pub use catalog::{builtin, catalog, catalog_up_to, BUILTIN_CAP};
pub use iso::{find_isomorphism, is_isomorphic};
pub use parse::{parse_group_file, resolve_group};
pub use perm::Perm;

#[derive(Debug)]
pub struct FiniteGroup {
    name: String,
    n: usize,
    mul: Vec<usize>,
    inv: Vec<usize>,
    orders: Vec<u64>,
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
    labels: Vec<String>,
    exponent: u64,
}

impl FiniteGroup {
    /// Validate a Cayley table and build the group. `labels` defaults to the
    /// element indices.
    pub fn from_table(
        name: impl Into<String>,
        table: Vec<Vec<usize>>,
        labels: Option<Vec<String>>,
    ) -> Result<Self> {
        let n = table.len();
        let fail = |axiom, detail: String| Err(Error::GroupAxiom { axiom, detail });
        if n == 0 {
            return fail(Axiom::Identity, "empty table".into());
        }
        for (a, row) in table.iter().enumerate() {
            if row.len() != n {
                return fail(Axiom::Closure, format!("row {a} has {} entries, expected {n}", row.len()));
            }
            if let Some(&b) = row.iter().find(|&&x| x >= n) {
                return fail(Axiom::Closure, format!("row {a} contains {b}, outside 0..{n}"));
            }
        }
        for a in 0..n {
            if table[0][a] != a || table[a][0] != a {
                return fail(Axiom::Identity, format!("0 is not a two-sided identity at element {a}"));
            }
        }
        let mut inv = vec![usize::MAX; n];
        for a in 0..n {
            let Some(b) = (0..n).find(|&b| table[a][b] == 0) else {
                return fail(Axiom::Inverse, format!("element {a} has no right inverse"));
            };
            if table[b][a] != 0 {
                return fail(Axiom::Inverse, format!("{b} is a right but not left inverse of {a}"));
            }
            inv[a] = b;
        }
        for a in 0..n {
            for b in 0..n {
                let ab = table[a][b];
                for c in 0..n {
                    if table[ab][c] != table[a][table[b][c]] {
                        return fail(
                            Axiom::Associativity,
                            format!("({a}*{b})*{c} != {a}*({b}*{c})"),
                        );
                    }
                }
            }
        }
        Ok(Self::build(name.into(), table, labels))
    }

    /// Build from a table that is known to satisfy the group axioms.
    pub(crate) fn build(name: String, table: Vec<Vec<usize>>, labels: Option<Vec<String>>) -> Self {
        let n = table.len();
        let mul: Vec<usize> = table.into_iter().flatten().collect();
        let mut inv = vec![0; n];
        for a in 0..n {
            inv[a] = (0..n).find(|&b| mul[a * n + b] == 0).expect("inverse exists");
        }
        let mut orders = vec![0u64; n];
        for a in 0..n {
            let mut x = a;
            let mut k = 1;
            while x != 0 {
                x = mul[x * n + a];
                k += 1;
            }
            orders[a] = k;
        }
        let exponent = orders.iter().fold(1, |acc, &o| arith::lcm(acc, o));
        let mut class_of = vec![usize::MAX; n];
        let mut classes = Vec::new();
        for a in 0..n {
            if class_of[a] != usize::MAX {
                continue;
            }
            let mut members: Vec<usize> = (0..n).map(|g| mul[mul[inv[g] * n + a] * n + g]).collect();
            members.sort_unstable();
            members.dedup();
            for &m in &members {
                class_of[m] = classes.len();
            }
            classes.push(members);
        }
        let labels = labels.unwrap_or_else(|| (0..n).map(|i| i.to_string()).collect());
        FiniteGroup {
            name,
            n,
            mul,
            inv,
            orders,
            classes,
            class_of,
            labels,
            exponent,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.n + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn pow(&self, a: usize, k: i64) -> usize {
        let o = self.orders[a];
        let e = arith::rem_euclid(k, o);
        let mut x = 0;
        for _ in 0..e {
            x = self.mul(x, a);
        }
        x
    }

    /// `g^-1 x g`
    pub fn conjugate(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), x), g)
    }

    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    pub fn element_order(&self, a: usize) -> u64 {
        self.orders[a]
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn table(&self) -> Vec<Vec<usize>> {
        self.mul.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn class_of(&self, a: usize) -> usize {
        self.class_of[a]
    }

    pub fn class_rep(&self, c: usize) -> usize {
        self.classes[c][0]
    }

    pub fn class_size(&self, c: usize) -> usize {
        self.classes[c].len()
    }

    /// Class of `g^k` for `g` in class `c`.
    pub fn power_class(&self, c: usize, k: i64) -> usize {
        self.class_of(self.pow(self.class_rep(c), k))
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.n).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// `[s^0, s^1, ..., s^(|s|-1)]`
    pub fn cyclic_subgroup(&self, s: usize) -> Vec<usize> {
        let mut out = vec![0];
        let mut x = s;
        while x != 0 {
            out.push(x);
            x = self.mul(x, s);
        }
        out
    }

    /// Closure of a set of elements under multiplication, sorted.
    pub fn generated_subgroup(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.n];
        seen[0] = true;
        let mut out = vec![0];
        let mut i = 0;
        while i < out.len() {
            let x = out[i];
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    out.push(y);
                }
            }
            i += 1;
        }
        out.sort_unstable();
        out
    }

    /// `{s : s^q in c(s)}`. With `strict`, `q` must be a prime power.
    pub fn sigma_set(&self, q: u64, strict: bool) -> Result<Vec<usize>> {
        if q < 2 {
            return Err(Error::InvalidParameter(format!("q = {q} must be at least 2")));
        }
        if strict && !arith::is_prime_power(q) {
            return Err(Error::InvalidParameter(format!(
                "q = {q} is not a prime power (strict mode)"
            )));
        }
        let out: Vec<usize> = (0..self.n)
            .filter(|&s| self.class_of(self.pow(s, q as i64)) == self.class_of(s))
            .collect();
        debug_assert!(out.iter().all(|&s| arith::gcd(self.element_order(s), q) == 1));
        Ok(out)
    }

    pub fn derived_and_abelianization(self: &Arc<Self>) -> Abelianization {
        let comms: Vec<usize> = (0..self.n)
            .flat_map(|a| (0..self.n).map(move |b| (a, b)))
            .map(|(a, b)| self.commutator(a, b))
            .collect();
        let derived = self.generated_subgroup(&comms);
        let mut coset = vec![usize::MAX; self.n];
        let mut reps = Vec::new();
        for g in 0..self.n {
            if coset[g] != usize::MAX {
                continue;
            }
            for &h in &derived {
                coset[self.mul(g, h)] = reps.len();
            }
            reps.push(g);
        }
        let m = reps.len();
        let table: Vec<Vec<usize>> = (0..m)
            .map(|i| (0..m).map(|j| coset[self.mul(reps[i], reps[j])]).collect())
            .collect();
        let labels = reps.iter().map(|&r| format!("[{}]", self.label(r))).collect();
        let quotient = Arc::new(FiniteGroup::build(
            format!("{}^ab", self.name),
            table,
            Some(labels),
        ));
        let projection = GroupHom {
            source: self.clone(),
            target: quotient.clone(),
            images: coset,
        };
        Abelianization {
            derived,
            quotient,
            projection,
        }
    }
}

/// A group homomorphism given by its image table.
#[derive(Debug, Clone)]
pub struct GroupHom {
    pub source: Arc<FiniteGroup>,
    pub target: Arc<FiniteGroup>,
    pub images: Vec<usize>,
}

impl GroupHom {
    pub fn new(source: Arc<FiniteGroup>, target: Arc<FiniteGroup>, images: Vec<usize>) -> Result<Self> {
        let h = GroupHom {
            source,
            target,
            images,
        };
        if let Some((a, b)) = h.first_failure() {
            return Err(Error::InvalidParameter(format!(
                "map is not multiplicative at ({a}, {b})"
            )));
        }
        Ok(h)
    }

    pub fn apply(&self, g: usize) -> usize {
        self.images[g]
    }

    pub fn first_failure(&self) -> Option<(usize, usize)> {
        if self.images.len() != self.source.order() || self.images[0] != 0 {
            return Some((0, 0));
        }
        let n = self.source.order();
        (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .find(|&(a, b)| {
                self.images[self.source.mul(a, b)] != self.target.mul(self.images[a], self.images[b])
            })
    }

    pub fn kernel(&self) -> Vec<usize> {
        (0..self.source.order()).filter(|&g| self.images[g] == 0).collect()
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![false; self.target.order()];
        for &i in &self.images {
            hit[i] = true;
        }
        hit.into_iter().all(|b| b)
    }
}

#[derive(Debug, Clone)]
pub struct Abelianization {
    pub derived: Vec<usize>,
    pub quotient: Arc<FiniteGroup>,
    pub projection: GroupHom,
}

/// Invariant factors `d_1 | d_2 | ...` (all > 1) of a finite abelian group.
pub fn abelian_invariants(g: &FiniteGroup) -> Vec<u64> {
    assert!(g.is_abelian(), "abelian_invariants on a nonabelian group");
    let n = g.order() as u64;
    // Per prime p: the partition of the p-part is read off from
    // |G[p^i]| = #{x : x^(p^i) = 1}.
    let mut per_prime: Vec<Vec<u64>> = Vec::new();
    for p in arith::prime_factors(n) {
        let mut sizes = vec![1u64];
        let mut pk = 1u64;
        loop {
            pk *= p;
            let cnt = (0..g.order()).filter(|&x| pk.is_multiple_of(g.element_order(x))).count() as u64;
            sizes.push(cnt);
            if cnt == sizes[sizes.len() - 2] {
                sizes.pop();
                break;
            }
        }
        // number of cyclic factors of order >= p^i is log_p(|G[p^i]| / |G[p^(i-1)]|)
        let mut at_least: Vec<u32> = Vec::new();
        for w in sizes.windows(2) {
            let mut ratio = w[1] / w[0];
            let mut e = 0;
            while ratio > 1 {
                ratio /= p;
                e += 1;
            }
            at_least.push(e);
        }
        // descending p-power factors
        let factors: Vec<u64> = (0..at_least[0])
            .map(|j| p.pow(at_least.iter().filter(|&&r| r > j).count() as u32))
            .collect();
        per_prime.push(factors);
    }
    let width = per_prime.iter().map(Vec::len).max().unwrap_or(0);
    let mut out = vec![1u64; width];
    for factors in per_prime {
        // factors sorted descending; align largest with the last invariant
        for (i, f) in factors.iter().enumerate() {
            out[width - 1 - i] *= f;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_classes(g: &FiniteGroup) -> Vec<usize> {
        let mut sizes: Vec<usize> = g.classes().iter().map(Vec::len).collect();
        sizes.sort_unstable();
        sizes
    }

    #[test]
    fn class_sizes() {
        assert_eq!(brute_classes(&builtin("S3").unwrap()), vec![1, 2, 3]);
        assert_eq!(brute_classes(&builtin("Q8").unwrap()), vec![1, 1, 2, 2, 2]);
        let c6 = builtin("C6").unwrap();
        assert_eq!(c6.num_classes(), 6);
        for g in catalog() {
            let total: usize = g.classes().iter().map(Vec::len).sum();
            assert_eq!(total, g.order());
            for c in g.classes() {
                assert_eq!(g.order() % c.len(), 0);
                assert_eq!(c[0], *c.iter().min().unwrap());
            }
            for x in 0..g.order() {
                assert_eq!(g.order() as u64 % g.element_order(x), 0);
            }
        }
    }

    #[test]
    fn sigma_examples() {
        let s3 = builtin("S3").unwrap();
        let sig2 = s3.sigma_set(2, true).unwrap();
        assert_eq!(sig2.len(), 3);
        assert!(sig2.iter().all(|&s| s3.element_order(s) != 2));
        assert_eq!(s3.sigma_set(7, true).unwrap().len(), 6);
        assert_eq!(s3.sigma_set(6, false).unwrap(), vec![0]);
        assert!(s3.sigma_set(6, true).is_err());
        assert!(s3.sigma_set(1, false).is_err());
        // q = 1 mod exponent
        let d4 = builtin("D4").unwrap();
        assert_eq!(d4.sigma_set(5, true).unwrap().len(), 8);
    }

    #[test]
    fn sigma_abelian_is_q_minus_one_torsion() {
        for g in catalog().into_iter().filter(|g| g.is_abelian()) {
            for q in 2..=13u64 {
                let expect: Vec<usize> =
                    (0..g.order()).filter(|&s| g.pow(s, q as i64 - 1) == 0).collect();
                assert_eq!(g.sigma_set(q, false).unwrap(), expect, "{} q={q}", g.name());
            }
        }
    }

    #[test]
    fn sigma_is_union_of_classes() {
        for g in catalog() {
            for q in [2, 3, 4, 5, 6, 7] {
                let sig = g.sigma_set(q, false).unwrap();
                for &s in &sig {
                    for &t in &g.classes()[g.class_of(s)] {
                        assert!(sig.contains(&t));
                    }
                }
            }
        }
    }

    #[test]
    fn derived_subgroups() {
        let s3 = Arc::new(builtin("S3").unwrap());
        let ab = s3.derived_and_abelianization();
        assert_eq!(ab.derived.len(), 3);
        assert_eq!(ab.quotient.order(), 2);
        assert_eq!(ab.projection.kernel(), ab.derived);
        assert!(ab.projection.is_surjective());
        assert!(ab.projection.first_failure().is_none());

        let q8 = Arc::new(builtin("Q8").unwrap());
        let ab = q8.derived_and_abelianization();
        assert_eq!(ab.derived.len(), 2);
        assert_eq!(abelian_invariants(&ab.quotient), vec![2, 2]);

        let c6 = Arc::new(builtin("C6").unwrap());
        let ab = c6.derived_and_abelianization();
        assert_eq!(ab.derived, vec![0]);
        assert!(is_isomorphic(&ab.quotient, &c6));
    }

    #[test]
    fn invariants_of_abelian_groups() {
        assert_eq!(abelian_invariants(&builtin("C12").unwrap()), vec![12]);
        assert_eq!(abelian_invariants(&builtin("C1").unwrap()), Vec::<u64>::new());
        assert_eq!(abelian_invariants(&builtin("D2").unwrap()), vec![2, 2]);
    }

    #[test]
    fn table_validation_names_axiom() {
        let bad_assoc = vec![vec![0, 1, 2], vec![1, 0, 2], vec![2, 2, 0]];
        match FiniteGroup::from_table("x", bad_assoc, None) {
            Err(Error::GroupAxiom { axiom, .. }) => {
                assert!(matches!(axiom, Axiom::Inverse | Axiom::Associativity))
            }
            other => panic!("expected axiom failure, got {other:?}"),
        }
        let no_identity = vec![vec![1, 0], vec![0, 1]];
        assert!(matches!(
            FiniteGroup::from_table("x", no_identity, None),
            Err(Error::GroupAxiom { axiom: Axiom::Identity, .. })
        ));
        let out_of_range = vec![vec![0, 1], vec![1, 2]];
        assert!(matches!(
            FiniteGroup::from_table("x", out_of_range, None),
            Err(Error::GroupAxiom { axiom: Axiom::Closure, .. })
        ));
        let c2 = vec![vec![0, 1], vec![1, 0]];
        assert_eq!(FiniteGroup::from_table("C2", c2, None).unwrap().order(), 2);
    }
}
