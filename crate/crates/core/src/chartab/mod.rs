//! Exact character tables, virtual characters and the lattice `A_G`.
//!
//! Tables are computed by the Burnside-Dixon-Schneider method: simultaneous
//! eigenvectors of the class-multiplication matrices are found modulo a prime
//! `p = 1 (mod exp G)` and lifted to exact cyclotomic values. For small
//! groups an exact Burnside splitting over `Q(zeta_e)` is available as an
//! independent cross-check (see [`burnside_table`]).
//!
//! Rows are ordered by degree, then by descending coefficient-vector order of
//! their class values, which places the trivial character first. Columns
//! follow the class order of the group.

mod ag;
mod burnside;
mod dixon;
mod virtual_char;

use std::cmp::Ordering;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith;
use crate::cyclo::Cyclotomic;
use crate::error::{Error, Result};
use crate::grp::FiniteGroup;

pub use ag::{ag_kernel, AGLattice};
pub use virtual_char::{
    det_character, induce_from_cyclic, inner_product, restrict_to_cyclic, LinearCharacter,
    VirtualCharacter,
};

/// Default bound on `|G|` for table computation.
pub const TABLE_CAP: usize = 200;

/// Bound on `|G|` for the exact Burnside cross-check.
pub const BURNSIDE_CAP: usize = 24;

#[derive(Debug, Clone)]
pub struct CharacterTable {
    group: Arc<FiniteGroup>,
    level: u64,
    rows: Vec<Vec<Cyclotomic>>,
    degrees: Vec<u64>,
}

/// A failed table invariant with the offending indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableDefect {
    pub check: &'static str,
    pub i: usize,
    pub j: usize,
    pub value: String,
}

impl std::fmt::Display for TableDefect {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} fails at ({}, {}): {}", self.check, self.i, self.j, self.value)
    }
}

pub fn character_table(group: &Arc<FiniteGroup>) -> Result<Arc<CharacterTable>> {
    character_table_with_cap(group, TABLE_CAP)
}

pub fn character_table_with_cap(group: &Arc<FiniteGroup>, cap: usize) -> Result<Arc<CharacterTable>> {
    if group.order() > cap {
        return Err(Error::TooLarge {
            order: group.order(),
            cap,
        });
    }
    let rows = dixon::dixon_rows(group)?;
    Ok(Arc::new(CharacterTable::from_rows(group.clone(), rows)?))
}

/// Table computed by exact Burnside splitting over `Q(zeta_e)`, with
/// eigenvalues found by enumerating every admissible central-character value.
pub fn burnside_table(group: &Arc<FiniteGroup>) -> Result<CharacterTable> {
    if group.order() > BURNSIDE_CAP {
        return Err(Error::TooLarge {
            order: group.order(),
            cap: BURNSIDE_CAP,
        });
    }
    let rows = burnside::burnside_rows(group)?;
    CharacterTable::from_rows(group.clone(), rows)
}

/// `c[i][j][k] = #{(x, y) in K_i x K_j : x y = z_k}` with `z_k` the rep of `K_k`.
pub(crate) fn class_structure_constants(g: &FiniteGroup) -> Vec<Vec<Vec<u64>>> {
    let r = g.num_classes();
    let mut c = vec![vec![vec![0u64; r]; r]; r];
    for k in 0..r {
        let z = g.class_rep(k);
        for (i, class) in g.classes().iter().enumerate() {
            for &x in class {
                let y = g.mul(g.inv(x), z);
                c[i][g.class_of(y)][k] += 1;
            }
        }
    }
    c
}

impl CharacterTable {
    /// Assemble a table from rows of class values. Values are lifted to the
    /// group exponent; rows are sorted into canonical order. No invariant
    /// beyond the shape and integral positive degrees is checked here.
    pub fn from_rows(group: Arc<FiniteGroup>, rows: Vec<Vec<Cyclotomic>>) -> Result<Self> {
        let level = group.exponent();
        let r = group.num_classes();
        if rows.len() != r {
            return Err(Error::CharacterTable(format!(
                "{} rows for {r} classes",
                rows.len()
            )));
        }
        let mut lifted = Vec::with_capacity(r);
        let mut degrees = Vec::with_capacity(r);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != r {
                return Err(Error::CharacterTable(format!("row {i} has {} entries", row.len())));
            }
            let row = row
                .into_iter()
                .map(|v| v.raise(level))
                .collect::<Result<Vec<_>>>()?;
            let deg = row[0]
                .to_rational()
                .filter(|d| d.is_integer() && *d > BigRational::zero())
                .ok_or_else(|| Error::CharacterTable(format!("row {i} has non-integral degree")))?;
            degrees.push(u64::try_from(deg.to_integer()).map_err(|_| {
                Error::CharacterTable(format!("row {i} degree out of range"))
            })?);
            lifted.push(row);
        }
        let mut order: Vec<usize> = (0..r).collect();
        order.sort_by(|&a, &b| {
            degrees[a].cmp(&degrees[b]).then_with(|| {
                lifted[b]
                    .iter()
                    .zip(&lifted[a])
                    .map(|(x, y)| x.cmp_coeffs(y))
                    .find(|o| *o != Ordering::Equal)
                    .unwrap_or(Ordering::Equal)
            })
        });
        Ok(CharacterTable {
            group,
            level,
            rows: order.iter().map(|&i| lifted[i].clone()).collect(),
            degrees: order.iter().map(|&i| degrees[i]).collect(),
        })
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    /// The cyclotomic level all values live at (the group exponent).
    pub fn level(&self) -> u64 {
        self.level
    }

    pub fn rows(&self) -> &[Vec<Cyclotomic>] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &[Cyclotomic] {
        &self.rows[i]
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    pub fn num_irreducibles(&self) -> usize {
        self.rows.len()
    }

    pub fn value(&self, i: usize, class: usize) -> &Cyclotomic {
        &self.rows[i][class]
    }

    /// Standard inner product of two class functions given by class values.
    pub fn class_inner(&self, a: &[Cyclotomic], b: &[Cyclotomic]) -> Cyclotomic {
        let g = &self.group;
        let mut acc = Cyclotomic::zero(self.level);
        for c in 0..g.num_classes() {
            let term = (&a[c] * &b[c].conj()).scale(&arith::rat_int(g.class_size(c) as i64));
            acc = acc + term;
        }
        acc.scale(&arith::rat(1, g.order() as i64))
    }

    pub fn check_row_orthogonality(&self) -> std::result::Result<(), TableDefect> {
        for i in 0..self.rows.len() {
            for j in 0..=i {
                let ip = self.class_inner(&self.rows[i], &self.rows[j]);
                let expect = if i == j { 1 } else { 0 };
                if ip != Cyclotomic::from_int(expect, self.level) {
                    return Err(TableDefect {
                        check: "row orthogonality",
                        i,
                        j,
                        value: ip.to_string(),
                    });
                }
            }
        }
        Ok(())
    }

    pub fn check_column_orthogonality(&self) -> std::result::Result<(), TableDefect> {
        let g = &self.group;
        let r = g.num_classes();
        for a in 0..r {
            for b in 0..=a {
                let mut s = Cyclotomic::zero(self.level);
                for row in &self.rows {
                    s = s + &row[a] * &row[b].conj();
                }
                let expect = if a == b {
                    (g.order() / g.class_size(a)) as i64
                } else {
                    0
                };
                if s != Cyclotomic::from_int(expect, self.level) {
                    return Err(TableDefect {
                        check: "column orthogonality",
                        i: a,
                        j: b,
                        value: s.to_string(),
                    });
                }
            }
        }
        Ok(())
    }

    pub fn check_degree_sum(&self) -> std::result::Result<(), TableDefect> {
        let total: u64 = self.degrees.iter().map(|d| d * d).sum();
        if total != self.group.order() as u64 || self.rows.len() != self.group.num_classes() {
            return Err(TableDefect {
                check: "degree sum",
                i: 0,
                j: 0,
                value: total.to_string(),
            });
        }
        Ok(())
    }

    /// The first failing table invariant, if any.
    pub fn validate(&self) -> std::result::Result<(), TableDefect> {
        self.check_degree_sum()?;
        self.check_row_orthogonality()?;
        self.check_column_orthogonality()
    }

    /// Index of the row equal to `values`, if any.
    pub fn find_row(&self, values: &[Cyclotomic]) -> Option<usize> {
        self.rows.iter().position(|r| r.as_slice() == values)
    }

    /// `true` when both tables have the same group and the same row set.
    pub fn same_rows(&self, other: &CharacterTable) -> bool {
        self.group.order() == other.group.order()
            && self.rows.len() == other.rows.len()
            && self.rows.iter().all(|r| other.find_row(r).is_some())
    }

    /// Whether `zeta -> zeta^k` permutes the irreducible rows.
    pub fn galois_permutes_rows(&self, k: i64) -> Result<bool> {
        let mut hit = vec![false; self.rows.len()];
        for row in &self.rows {
            let image = row
                .iter()
                .map(|v| v.galois(k))
                .collect::<Result<Vec<_>>>()?;
            match self.find_row(&image) {
                Some(i) if !hit[i] => hit[i] = true,
                _ => return Ok(false),
            }
        }
        Ok(true)
    }

    pub fn degree_of(&self, i: usize) -> u64 {
        self.degrees[i]
    }

    /// `true` if row `i` is the trivial character.
    pub fn is_trivial_row(&self, i: usize) -> bool {
        self.rows[i].iter().all(|v| v.is_one())
    }

    /// Value of `(sum_i coords_i chi_i)` on each class.
    pub fn combine(&self, coords: &[BigRational]) -> Vec<Cyclotomic> {
        let r = self.group.num_classes();
        (0..r)
            .map(|c| {
                let mut acc = Cyclotomic::zero(self.level);
                for (i, x) in coords.iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    let v = if x.is_one() {
                        self.rows[i][c].clone()
                    } else {
                        self.rows[i][c].scale(x)
                    };
                    acc = acc + v;
                }
                acc
            })
            .collect()
    }
}
