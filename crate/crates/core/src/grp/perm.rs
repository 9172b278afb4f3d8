use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

use super::FiniteGroup;

/// A permutation of `0..degree`, stored as its image list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(pub Vec<usize>);

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm((0..degree).collect())
    }

    /// Build from 1-based cycles, e.g. `[[1, 2, 3], [4, 5]]`.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut img: Vec<usize> = (0..degree).collect();
        let mut used = vec![false; degree];
        for cyc in cycles {
            for &p in cyc {
                if p == 0 || p > degree {
                    return Err(Error::Parse(format!("point {p} outside 1..{degree}")));
                }
                if used[p - 1] {
                    return Err(Error::Parse(format!("point {p} repeated in cycles")));
                }
                used[p - 1] = true;
            }
            for (i, &p) in cyc.iter().enumerate() {
                img[p - 1] = cyc[(i + 1) % cyc.len()] - 1;
            }
        }
        Ok(Perm(img))
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    /// `(self * other)(x) = self(other(x))`
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&x| self.0[x]).collect())
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.0[start] == start {
                continue;
            }
            let mut cyc = vec![start];
            seen[start] = true;
            let mut x = self.0[start];
            while x != start {
                seen[x] = true;
                cyc.push(x);
                x = self.0[x];
            }
            out.push(cyc);
        }
        out
    }

    pub fn is_even(&self) -> bool {
        self.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 0
    }
}

/// 1-based cycle notation, `()` for the identity.
impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            let pts: Vec<String> = c.iter().map(|x| (x + 1).to_string()).collect();
            write!(f, "({})", pts.join(" "))?;
        }
        Ok(())
    }
}

/// The group generated by permutations of a common degree, elements sorted
/// lexicographically by image list (so the identity is element 0).
pub fn group_from_permutations(name: &str, gens: &[Perm], cap: usize) -> Result<FiniteGroup> {
    let degree = gens.iter().map(Perm::degree).max().unwrap_or(1);
    let gens: Vec<Perm> = gens
        .iter()
        .map(|g| {
            let mut v = g.0.clone();
            v.extend(g.degree()..degree);
            Perm(v)
        })
        .collect();
    let mut elems = vec![Perm::identity(degree)];
    let mut index: HashMap<Perm, usize> = HashMap::new();
    index.insert(elems[0].clone(), 0);
    let mut i = 0;
    while i < elems.len() {
        for g in &gens {
            let y = elems[i].compose(g);
            if !index.contains_key(&y) {
                index.insert(y.clone(), elems.len());
                elems.push(y);
                if elems.len() > cap {
                    return Err(Error::TooLarge {
                        order: elems.len(),
                        cap,
                    });
                }
            }
        }
        i += 1;
    }
    elems.sort();
    let index: HashMap<&Perm, usize> = elems.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let table: Vec<Vec<usize>> = elems
        .iter()
        .map(|a| elems.iter().map(|b| index[&a.compose(b)]).collect())
        .collect();
    let labels = elems.iter().map(|p| p.to_string()).collect();
    Ok(FiniteGroup::build(name.to_string(), table, Some(labels)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_round_trip() {
        let p = Perm::from_cycles(5, &[vec![1, 3, 2], vec![4, 5]]).unwrap();
        assert_eq!(p.to_string(), "(1 3 2)(4 5)");
        assert!(!p.is_even());
        assert!(Perm::from_cycles(3, &[vec![1, 4]]).is_err());
        assert!(Perm::from_cycles(3, &[vec![1, 2], vec![2, 3]]).is_err());
    }

    #[test]
    fn s3_from_generators() {
        let a = Perm::from_cycles(3, &[vec![1, 2]]).unwrap();
        let b = Perm::from_cycles(3, &[vec![1, 2, 3]]).unwrap();
        let g = group_from_permutations("S3", &[a, b], 100).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.label(0), "()");
        assert!(!g.is_abelian());
    }
}
