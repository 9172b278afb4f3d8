//! Exact Burnside splitting over `Q(zeta_e)`.
//!
//! Independent of the modular route: eigenvalues of the class matrices are
//! located by testing every value a central character can take,
//! `|K| * (sum of d roots of unity of order |g|) / d`, against the exact
//! characteristic polynomial of the restricted operator.

use num_rational::BigRational;
use num_traits::Zero;

use crate::arith;
use crate::cyclo::Cyclotomic;
use crate::error::{Error, Result};
use crate::grp::FiniteGroup;
use crate::linalg::{nullspace, rref, CyclotomicField, Field};

use super::class_structure_constants;

/// Multisets of size `d` from `0..o`, as nondecreasing sequences.
fn multisets(o: u64, d: usize) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let mut cur = vec![0u64; d];
    loop {
        out.push(cur.clone());
        // next nondecreasing sequence
        let mut i = d;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] + 1 < o {
                let v = cur[i] + 1;
                for x in cur[i..].iter_mut() {
                    *x = v;
                }
                break;
            }
        }
    }
}

fn candidates(g: &FiniteGroup, class: usize, level: u64) -> Vec<Cyclotomic> {
    let n = g.order() as u64;
    let o = g.element_order(g.class_rep(class));
    let size = g.class_size(class) as i64;
    let mut out: Vec<Cyclotomic> = Vec::new();
    for d in 1..=n {
        if !n.is_multiple_of(d) || d * d > n {
            continue;
        }
        for ms in multisets(o, d as usize) {
            let mut poly = vec![BigRational::zero(); level as usize];
            for k in ms {
                poly[(k * (level / o)) as usize] += arith::rat_int(1);
            }
            let v = Cyclotomic::from_poly(level, poly).scale(&arith::rat(size, d as i64));
            if !out.contains(&v) {
                out.push(v);
            }
        }
    }
    out
}

/// Characteristic polynomial `det(x I - m)` (low degree first) by
/// Faddeev-LeVerrier.
fn charpoly(field: &CyclotomicField, m: &[Vec<Cyclotomic>]) -> Vec<Cyclotomic> {
    let n = m.len();
    let mut coeffs = vec![field.zero(); n + 1];
    coeffs[n] = field.one();
    let mut acc: Vec<Vec<Cyclotomic>> = vec![vec![field.zero(); n]; n];
    for k in 1..=n {
        // acc <- m * acc + c_{n-k+1} I
        let mut next = vec![vec![field.zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut s = field.zero();
                for l in 0..n {
                    if !m[i][l].is_zero() && !acc[l][j].is_zero() {
                        s = field.add(&s, &field.mul(&m[i][l], &acc[l][j]));
                    }
                }
                next[i][j] = s;
            }
            next[i][i] = field.add(&next[i][i], &coeffs[n - k + 1]);
        }
        acc = next;
        // c_{n-k} = -tr(m * acc) / k
        let mut tr = field.zero();
        for i in 0..n {
            for l in 0..n {
                tr = field.add(&tr, &field.mul(&m[i][l], &acc[l][i]));
            }
        }
        coeffs[n - k] = tr.scale(&arith::rat(-1, k as i64));
    }
    coeffs
}

fn eval(poly: &[Cyclotomic], x: &Cyclotomic) -> Cyclotomic {
    let mut acc = poly.last().unwrap().clone();
    for c in poly.iter().rev().skip(1) {
        acc = &(&acc * x) + c;
    }
    acc
}

pub(crate) fn burnside_rows(g: &FiniteGroup) -> Result<Vec<Vec<Cyclotomic>>> {
    let r = g.num_classes();
    let e = g.exponent();
    let field = CyclotomicField { level: e };
    let c = class_structure_constants(g);

    let full: Vec<Vec<Cyclotomic>> = (0..r)
        .map(|i| (0..r).map(|j| Cyclotomic::from_int(i64::from(i == j), e)).collect())
        .collect();
    let mut spaces: Vec<(Vec<Vec<Cyclotomic>>, Vec<usize>)> = vec![(full, (0..r).collect())];

    for i in 1..r {
        if spaces.iter().all(|(b, _)| b.len() == 1) {
            break;
        }
        let a_i: Vec<Vec<Cyclotomic>> = (0..r)
            .map(|j| (0..r).map(|k| Cyclotomic::from_int(c[i][j][k] as i64, e)).collect())
            .collect();
        let cands = candidates(g, i, e);
        let mut next = Vec::new();
        for (basis, pivots) in spaces {
            let d = basis.len();
            if d == 1 {
                next.push((basis, pivots));
                continue;
            }
            let images: Vec<Vec<Cyclotomic>> = basis
                .iter()
                .map(|b| {
                    (0..r)
                        .map(|j| {
                            (0..r).fold(field.zero(), |acc, k| {
                                if b[k].is_zero() || a_i[j][k].is_zero() {
                                    acc
                                } else {
                                    field.add(&acc, &field.mul(&a_i[j][k], &b[k]))
                                }
                            })
                        })
                        .collect()
                })
                .collect();
            let restricted: Vec<Vec<Cyclotomic>> = (0..d)
                .map(|row| (0..d).map(|col| images[col][pivots[row]].clone()).collect())
                .collect();
            let cp = charpoly(&field, &restricted);
            let mut total = 0;
            for lambda in &cands {
                if !eval(&cp, lambda).is_zero() {
                    continue;
                }
                let shifted: Vec<Vec<Cyclotomic>> = (0..d)
                    .map(|a| {
                        (0..d)
                            .map(|b| {
                                if a == b {
                                    &restricted[a][b] - lambda
                                } else {
                                    restricted[a][b].clone()
                                }
                            })
                            .collect()
                    })
                    .collect();
                let ns = nullspace(&field, &shifted, d);
                let mut vecs: Vec<Vec<Cyclotomic>> = ns
                    .iter()
                    .map(|x| {
                        (0..r)
                            .map(|k| {
                                (0..d).fold(field.zero(), |acc, l| {
                                    field.add(&acc, &field.mul(&x[l], &basis[l][k]))
                                })
                            })
                            .collect()
                    })
                    .collect();
                let piv = rref(&field, &mut vecs);
                total += vecs.len();
                next.push((vecs, piv));
            }
            if total != d {
                return Err(Error::CharacterTable(format!(
                    "exact splitting found {total} of {d} eigenvectors"
                )));
            }
        }
        spaces = next;
    }
    if spaces.len() != r {
        return Err(Error::CharacterTable("exact splitting incomplete".into()));
    }

    let inv_class: Vec<usize> = (0..r).map(|i| g.class_of(g.inv(g.class_rep(i)))).collect();
    let mut rows = Vec::with_capacity(r);
    for (basis, _) in spaces {
        let w0 = basis[0][0].clone();
        let w: Vec<Cyclotomic> = basis[0]
            .iter()
            .map(|x| x.div_ref(&w0))
            .collect::<Result<_>>()?;
        let mut acc = field.zero();
        for i in 0..r {
            let t = (&w[i] * &w[inv_class[i]]).scale(&arith::rat(1, g.class_size(i) as i64));
            acc = acc + t;
        }
        let d2 = acc
            .to_rational()
            .map(|s| arith::rat_int(g.order() as i64) / s)
            .filter(|x| x.is_integer())
            .ok_or_else(|| Error::CharacterTable("degree is not rational".into()))?;
        let d2 = d2.to_integer();
        let d = num_integer::Roots::sqrt(&d2);
        if &d * &d != d2 {
            return Err(Error::CharacterTable("degree is not an integer".into()));
        }
        let d = BigRational::from_integer(d);
        let row = (0..r)
            .map(|i| w[i].scale(&(&d / arith::rat_int(g.class_size(i) as i64))))
            .collect();
        rows.push(row);
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiset_counts() {
        assert_eq!(multisets(4, 1).len(), 4);
        assert_eq!(multisets(4, 2).len(), 10);
        assert_eq!(multisets(12, 3).len(), 364);
        assert_eq!(multisets(1, 3), vec![vec![0, 0, 0]]);
    }

    #[test]
    fn charpoly_of_diagonal() {
        let f = CyclotomicField { level: 1 };
        let m = vec![
            vec![Cyclotomic::from_int(2, 1), Cyclotomic::from_int(0, 1)],
            vec![Cyclotomic::from_int(0, 1), Cyclotomic::from_int(3, 1)],
        ];
        let cp = charpoly(&f, &m);
        // (x-2)(x-3) = x^2 - 5x + 6
        let got: Vec<_> = cp.iter().map(|c| c.to_rational().unwrap()).collect();
        assert_eq!(got, vec![arith::rat_int(6), arith::rat_int(-5), arith::rat_int(1)]);
    }
}
