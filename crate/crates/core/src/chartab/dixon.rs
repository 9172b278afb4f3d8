//! Burnside-Dixon-Schneider over `F_p` with exact cyclotomic lifting.

use num_rational::BigRational;
use num_traits::Zero;

use crate::arith;
use crate::cyclo::Cyclotomic;
use crate::error::{Error, Result};
use crate::grp::FiniteGroup;
use crate::linalg::{nullspace, rref, Field, PrimeField};

use super::class_structure_constants;

/// Smallest prime `p = 1 (mod e)` with `p > 2 sqrt(n)`.
pub(crate) fn dixon_prime(e: u64, n: u64) -> u64 {
    let mut p = e + 1;
    loop {
        if p * p > 4 * n && arith::is_prime(p) {
            return p;
        }
        p += e;
    }
}

/// An element of multiplicative order exactly `e` in `F_p^*`.
pub(crate) fn root_of_unity(p: u64, e: u64) -> u64 {
    let f = PrimeField { p };
    let factors = arith::prime_factors(p - 1);
    let generator = (2..p)
        .find(|&g| factors.iter().all(|&q| f.pow(g, (p - 1) / q) != 1))
        .expect("F_p^* is cyclic");
    f.pow(generator, (p - 1) / e)
}

/// Rows of class values (level = exponent), unsorted.
pub(crate) fn dixon_rows(g: &FiniteGroup) -> Result<Vec<Vec<Cyclotomic>>> {
    let r = g.num_classes();
    let n = g.order() as u64;
    let e = g.exponent();
    let p = dixon_prime(e, n);
    let f = PrimeField { p };
    let z = root_of_unity(p, e);
    let c = class_structure_constants(g);

    // Each space is an RREF basis (rows) plus its pivot columns.
    let full: Vec<Vec<u64>> = (0..r)
        .map(|i| (0..r).map(|j| u64::from(i == j)).collect())
        .collect();
    let mut spaces: Vec<(Vec<Vec<u64>>, Vec<usize>)> = vec![(full, (0..r).collect())];

    for i in 1..r {
        if spaces.iter().all(|(b, _)| b.len() == 1) {
            break;
        }
        let a_i: Vec<Vec<u64>> = (0..r)
            .map(|j| (0..r).map(|k| c[i][j][k] % p).collect())
            .collect();
        let mut next = Vec::new();
        for (basis, pivots) in spaces {
            if basis.len() == 1 {
                next.push((basis, pivots));
                continue;
            }
            next.extend(split_space(&f, &a_i, &basis, &pivots)?);
        }
        spaces = next;
    }
    if spaces.iter().any(|(b, _)| b.len() != 1) || spaces.len() != r {
        return Err(Error::CharacterTable(
            "class matrices did not split into one-dimensional eigenspaces".into(),
        ));
    }

    let inv_class: Vec<usize> = (0..r).map(|i| g.class_of(g.inv(g.class_rep(i)))).collect();
    let sizes: Vec<u64> = (0..r).map(|i| g.class_size(i) as u64).collect();
    // power_class[i][l] = class of rep_i^l
    let power_class: Vec<Vec<usize>> = (0..r)
        .map(|i| {
            let o = g.element_order(g.class_rep(i));
            (0..o).map(|l| g.power_class(i, l as i64)).collect()
        })
        .collect();
    let max_degree = (1..).take_while(|d: &u64| d * d <= n).last().unwrap_or(1);

    let mut rows = Vec::with_capacity(r);
    for (basis, _) in spaces {
        let w0 = basis[0][0];
        if w0 == 0 {
            return Err(Error::CharacterTable("eigenvector vanishes at the identity".into()));
        }
        let s = f.inv(&w0);
        let w: Vec<u64> = basis[0].iter().map(|x| f.mul(x, &s)).collect();
        // d^2 = |G| / sum_i w_i w_{i*} / |K_i|
        let mut acc = 0;
        for i in 0..r {
            let t = f.mul(&f.mul(&w[i], &w[inv_class[i]]), &f.inv(&(sizes[i] % p)));
            acc = f.add(&acc, &t);
        }
        let d2 = f.mul(&(n % p), &f.inv(&acc));
        let d = (1..=max_degree)
            .find(|d| d * d % p == d2)
            .ok_or_else(|| Error::CharacterTable("no admissible degree".into()))?;
        let theta: Vec<u64> = (0..r)
            .map(|i| f.mul(&f.mul(&(d % p), &w[i]), &f.inv(&(sizes[i] % p))))
            .collect();
        let mut row = Vec::with_capacity(r);
        for i in 0..r {
            let o = power_class[i].len() as u64;
            let step = e / o;
            let inv_o = f.inv(&(o % p));
            let mut poly = vec![BigRational::zero(); e as usize];
            for k in 0..o {
                // multiplicity of zeta_o^k among the eigenvalues at rep_i
                let mut m = 0;
                for l in 0..o {
                    let root = f.pow(z, (e - (step * k * l) % e) % e);
                    m = f.add(&m, &f.mul(&theta[power_class[i][l as usize]], &root));
                }
                let m = f.mul(&m, &inv_o);
                if m > d {
                    return Err(Error::CharacterTable(format!(
                        "eigenvalue multiplicity {m} exceeds degree {d}"
                    )));
                }
                poly[(step * k) as usize] = arith::rat_int(m as i64);
            }
            row.push(Cyclotomic::from_poly(e, poly));
        }
        rows.push(row);
    }
    Ok(rows)
}

/// Split an invariant subspace into eigenspaces of `a` (acting on columns).
fn split_space(
    f: &PrimeField,
    a: &[Vec<u64>],
    basis: &[Vec<u64>],
    pivots: &[usize],
) -> Result<Vec<(Vec<Vec<u64>>, Vec<usize>)>> {
    let d = basis.len();
    let r = a.len();
    // images of basis vectors, expressed in the basis via pivot coordinates
    let images: Vec<Vec<u64>> = basis
        .iter()
        .map(|b| {
            (0..r)
                .map(|j| (0..r).fold(0, |acc, k| f.add(&acc, &f.mul(&a[j][k], &b[k]))))
                .collect()
        })
        .collect();
    let restricted: Vec<Vec<u64>> = (0..d)
        .map(|row| (0..d).map(|col| images[col][pivots[row]]).collect())
        .collect();
    let mut out = Vec::new();
    let mut total = 0;
    for lambda in 0..f.p {
        let shifted: Vec<Vec<u64>> = (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| if i == j { f.sub(&restricted[i][j], &lambda) } else { restricted[i][j] })
                    .collect()
            })
            .collect();
        let ns = nullspace(f, &shifted, d);
        if ns.is_empty() {
            continue;
        }
        let mut vecs: Vec<Vec<u64>> = ns
            .iter()
            .map(|x| {
                (0..r)
                    .map(|k| (0..d).fold(0, |acc, l| f.add(&acc, &f.mul(&x[l], &basis[l][k]))))
                    .collect()
            })
            .collect();
        let piv = rref(f, &mut vecs);
        total += vecs.len();
        out.push((vecs, piv));
        if total == d {
            break;
        }
    }
    if total != d {
        return Err(Error::CharacterTable("class matrix is not diagonalisable mod p".into()));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_choice() {
        assert_eq!(dixon_prime(2, 2), 3);
        assert_eq!(dixon_prime(6, 6), 7);
        assert_eq!(dixon_prime(60, 60), 61);
        assert_eq!(dixon_prime(12, 24), 13);
        let p = 61;
        let z = root_of_unity(p, 12);
        let f = PrimeField { p };
        assert_eq!(f.pow(z, 12), 1);
        assert!((1..12).all(|k| f.pow(z, k) != 1));
    }
}
