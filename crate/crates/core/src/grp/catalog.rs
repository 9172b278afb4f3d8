//! Named builtin groups.

use crate::error::{Error, Result};

use super::perm::{group_from_permutations, Perm};
use super::FiniteGroup;

/// Largest builtin group order.
pub const BUILTIN_CAP: usize = 200;

const CATALOG: &[&str] = &[
    "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9", "C10", "C11", "C12", "D2", "S3", "D4", "D5",
    "D6", "Q8", "A4", "S4", "A5", "S5",
];

/// All catalog groups, smallest first.
pub fn catalog() -> Vec<FiniteGroup> {
    CATALOG.iter().map(|n| builtin(n).expect("catalog entry")).collect()
}

pub fn catalog_up_to(max_order: usize) -> Vec<FiniteGroup> {
    catalog().into_iter().filter(|g| g.order() <= max_order).collect()
}

/// `C<n>`, `D<n>` (order `2n`), `S<n>`, `A<n>`, `Q8`.
pub fn builtin(name: &str) -> Result<FiniteGroup> {
    let upper = name.trim().to_ascii_uppercase();
    let unknown = || Error::UnknownGroup(name.to_string());
    if upper == "Q8" {
        return Ok(quaternion(&upper));
    }
    let (kind, arg) = upper.split_at(1);
    let n: usize = arg.parse().map_err(|_| unknown())?;
    let too_large = |order: usize| Error::TooLarge {
        order,
        cap: BUILTIN_CAP,
    };
    match kind {
        "C" if n >= 1 => {
            if n > BUILTIN_CAP {
                return Err(too_large(n));
            }
            Ok(cyclic(&upper, n))
        }
        "D" if n >= 1 => {
            if 2 * n > BUILTIN_CAP {
                return Err(too_large(2 * n));
            }
            Ok(dihedral(&upper, n))
        }
        "S" if n >= 1 => {
            let order: usize = (1..=n).product();
            if order > BUILTIN_CAP {
                return Err(too_large(order));
            }
            let mut gens = Vec::new();
            if n >= 2 {
                gens.push(Perm::from_cycles(n, &[vec![1, 2]])?);
                gens.push(Perm::from_cycles(n, &[(1..=n).collect()])?);
            }
            group_from_permutations(&upper, &gens, BUILTIN_CAP)
        }
        "A" if n >= 1 => {
            let order: usize = (1..=n).product::<usize>() / if n >= 2 { 2 } else { 1 };
            if order > BUILTIN_CAP {
                return Err(too_large(order));
            }
            let gens: Vec<Perm> = (3..=n)
                .map(|k| Perm::from_cycles(n, &[vec![1, 2, k]]))
                .collect::<Result<_>>()?;
            group_from_permutations(&upper, &gens, BUILTIN_CAP)
        }
        _ => Err(unknown()),
    }
}

fn cyclic(name: &str, n: usize) -> FiniteGroup {
    let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
    let labels = (0..n)
        .map(|k| match k {
            0 => "e".to_string(),
            1 => "g".to_string(),
            _ => format!("g^{k}"),
        })
        .collect();
    FiniteGroup::build(name.to_string(), table, Some(labels))
}

/// Elements `r^k s^e` at index `k + n e`.
fn dihedral(name: &str, n: usize) -> FiniteGroup {
    let decode = |x: usize| (x % n, x / n);
    let table = (0..2 * n)
        .map(|x| {
            (0..2 * n)
                .map(|y| {
                    let (a, e) = decode(x);
                    let (b, f) = decode(y);
                    let k = if e == 0 { (a + b) % n } else { (a + n - b) % n };
                    k + n * ((e + f) % 2)
                })
                .collect()
        })
        .collect();
    let labels = (0..2 * n)
        .map(|x| {
            let (k, e) = decode(x);
            let r = match k {
                0 => String::new(),
                1 => "r".to_string(),
                _ => format!("r^{k}"),
            };
            match (r.is_empty(), e) {
                (true, 0) => "e".to_string(),
                (true, _) => "s".to_string(),
                (false, 0) => r,
                (false, _) => format!("{r} s"),
            }
        })
        .collect();
    FiniteGroup::build(name.to_string(), table, Some(labels))
}

/// `1, -1, i, -i, j, -j, k, -k` at indices `0..8`.
fn quaternion(name: &str) -> FiniteGroup {
    // unit products: (sign, unit) with units 1, i, j, k = 0..4
    const UNIT: [[(bool, usize); 4]; 4] = [
        [(false, 0), (false, 1), (false, 2), (false, 3)],
        [(false, 1), (true, 0), (false, 3), (true, 2)],
        [(false, 2), (true, 3), (true, 0), (false, 1)],
        [(false, 3), (false, 2), (true, 1), (true, 0)],
    ];
    let table = (0..8)
        .map(|x: usize| {
            (0..8)
                .map(|y: usize| {
                    let (neg, u) = UNIT[x / 2][y / 2];
                    let sign = (x % 2 == 1) ^ (y % 2 == 1) ^ neg;
                    2 * u + usize::from(sign)
                })
                .collect()
        })
        .collect();
    let labels = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    FiniteGroup::build(name.to_string(), table, Some(labels))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_orders() {
        for (name, order) in [
            ("C1", 1),
            ("C7", 7),
            ("D2", 4),
            ("D4", 8),
            ("D6", 12),
            ("S3", 6),
            ("S4", 24),
            ("S5", 120),
            ("A4", 12),
            ("A5", 60),
            ("Q8", 8),
        ] {
            assert_eq!(builtin(name).unwrap().order(), order, "{name}");
        }
        assert!(matches!(builtin("S6"), Err(Error::TooLarge { order: 720, .. })));
        assert!(matches!(builtin("X3"), Err(Error::UnknownGroup(_))));
        assert!(matches!(builtin("C201"), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn builtin_tables_satisfy_axioms() {
        for g in super::catalog_up_to(60) {
            let t = g.table();
            FiniteGroup::from_table(g.name(), t, None).unwrap();
        }
    }

    #[test]
    fn quaternion_relations() {
        let q = builtin("Q8").unwrap();
        // i^2 = j^2 = k^2 = ijk = -1
        assert_eq!(q.mul(2, 2), 1);
        assert_eq!(q.mul(4, 4), 1);
        assert_eq!(q.mul(6, 6), 1);
        assert_eq!(q.mul(q.mul(2, 4), 6), 1);
        assert!(!q.is_abelian());
    }
}
