//! Text group files.
//!
//! ```text
//! # comments start with '#'
//! group n=6
//! perm 3: (1 2)
//! perm 3: (1 2 3)
//! ```
//!
//! or an explicit Cayley table with `0` the identity:
//!
//! ```text
//! group n=2
//! table:
//! 0 1
//! 1 0
//! ```
//!
//! In `perm <k>: <cycles>` lines, `k` is the degree and points are 1-based.

use std::path::Path;
use std::sync::Arc;

use crate::error::{Axiom, Error, Result};

use super::catalog::{builtin, BUILTIN_CAP};
use super::perm::{group_from_permutations, Perm};
use super::FiniteGroup;

fn parse_cycles(degree: usize, text: &str) -> Result<Perm> {
    let bad = || Error::Parse(format!("invalid cycle notation `{text}`"));
    let mut cycles = Vec::new();
    let mut rest = text.trim();
    while !rest.is_empty() {
        let inner_end = rest.find(')').ok_or_else(bad)?;
        let inner = rest.strip_prefix('(').ok_or_else(bad)?;
        let body = &inner[..inner_end - 1];
        let pts = body
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .map(|s| s.parse::<usize>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        if !pts.is_empty() {
            cycles.push(pts);
        }
        rest = rest[inner_end + 1..].trim_start();
    }
    Perm::from_cycles(degree, &cycles)
}

pub fn parse_group_file(name: &str, text: &str) -> Result<FiniteGroup> {
    let mut lines = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty());
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty group file".into()))?;
    let order: usize = header
        .strip_prefix("group")
        .map(str::trim)
        .and_then(|r| r.strip_prefix("n="))
        .and_then(|r| r.trim().parse().ok())
        .ok_or_else(|| Error::Parse(format!("expected `group n=<order>`, got `{header}`")))?;
    if order > BUILTIN_CAP.max(720) {
        return Err(Error::TooLarge {
            order,
            cap: BUILTIN_CAP.max(720),
        });
    }
    let body: Vec<&str> = lines.collect();
    let group = if body.first() == Some(&"table:") {
        let rows = body[1..]
            .iter()
            .map(|l| {
                l.split_whitespace()
                    .map(|x| {
                        x.parse::<usize>()
                            .map_err(|_| Error::Parse(format!("bad table entry `{x}`")))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        if rows.len() != order {
            return Err(Error::GroupAxiom {
                axiom: Axiom::Closure,
                detail: format!("table has {} rows, header says {order}", rows.len()),
            });
        }
        FiniteGroup::from_table(name, rows, None)?
    } else {
        let mut gens = Vec::new();
        for line in &body {
            let rest = line
                .strip_prefix("perm")
                .ok_or_else(|| Error::Parse(format!("expected `perm <k>: <cycles>`, got `{line}`")))?;
            let (deg, cycles) = rest
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("missing `:` in `{line}`")))?;
            let deg: usize = deg
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad degree in `{line}`")))?;
            gens.push(parse_cycles(deg, cycles)?);
        }
        let g = group_from_permutations(name, &gens, order)
            .map_err(|_| Error::GroupAxiom {
                axiom: Axiom::Closure,
                detail: format!("generators produce more than {order} elements"),
            })?;
        if g.order() != order {
            return Err(Error::GroupAxiom {
                axiom: Axiom::Closure,
                detail: format!("generators produce {} elements, header says {order}", g.order()),
            });
        }
        g
    };
    Ok(group)
}

/// `file:<path>` or a builtin name.
pub fn resolve_group(source: &str) -> Result<Arc<FiniteGroup>> {
    if let Some(path) = source.strip_prefix("file:") {
        let text = std::fs::read_to_string(path)?;
        let name = Path::new(path)
            .file_stem()
            .and_then(|s| s.to_str())
            .unwrap_or(path);
        return Ok(Arc::new(parse_group_file(name, &text)?));
    }
    Ok(Arc::new(builtin(source)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn perm_file() {
        let g = parse_group_file("s3", "group n=6\nperm 3: (1 2)\nperm 3: (1,2,3) # rotation\n").unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.num_classes(), 3);
    }

    #[test]
    fn table_file() {
        let g = parse_group_file("c3", "group n=3\ntable:\n0 1 2\n1 2 0\n2 0 1\n").unwrap();
        assert!(g.is_abelian());
    }

    #[test]
    fn rejects_non_groups() {
        let err = parse_group_file("bad", "group n=3\ntable:\n0 1 2\n1 1 0\n2 0 1\n").unwrap_err();
        assert!(matches!(err, Error::GroupAxiom { .. }), "{err}");
        assert!(err.to_string().contains("inverse") || err.to_string().contains("associativity"));
        let err = parse_group_file("bad", "group n=4\nperm 3: (1 2 3)\n").unwrap_err();
        assert!(err.to_string().contains("closure"), "{err}");
        assert!(parse_group_file("bad", "grp n=3").is_err());
    }
}
