//! Integer lattices: Hermite and Smith normal forms over arbitrary-precision
//! integers, kernels of homomorphisms into finite abelian groups, membership.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type IntMatrix = Vec<Vec<BigInt>>;

fn axpy(target: &mut [BigInt], factor: &BigInt, source: &[BigInt]) {
    if factor.is_zero() {
        return;
    }
    for (t, s) in target.iter_mut().zip(source) {
        if !s.is_zero() {
            *t -= factor * s;
        }
    }
}

/// Row-style Hermite normal form: rows span the same lattice, the matrix is
/// in echelon form with positive pivots and entries above each pivot reduced
/// into `[0, pivot)`. Zero rows are dropped.
pub fn hnf(mut m: IntMatrix) -> IntMatrix {
    let rows = m.len();
    if rows == 0 {
        return m;
    }
    let cols = m[0].len();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        loop {
            let mut best: Option<usize> = None;
            for i in r..rows {
                if !m[i][c].is_zero()
                    && best.is_none_or(|b| m[i][c].abs() < m[b][c].abs())
                {
                    best = Some(i);
                }
            }
            let Some(b) = best else { break };
            m.swap(r, b);
            let mut done = true;
            for i in (r + 1)..rows {
                if !m[i][c].is_zero() {
                    let q = m[i][c].div_floor(&m[r][c]);
                    let pivot_row = m[r].clone();
                    axpy(&mut m[i], &q, &pivot_row);
                    if !m[i][c].is_zero() {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if m[r][c].is_zero() {
            continue;
        }
        if m[r][c].is_negative() {
            for x in m[r].iter_mut() {
                *x = -&*x;
            }
        }
        let pivot_row = m[r].clone();
        for i in 0..r {
            let q = m[i][c].div_floor(&pivot_row[c]);
            axpy(&mut m[i], &q, &pivot_row);
        }
        r += 1;
    }
    m.truncate(r);
    m
}

/// Pivot column of each HNF row.
pub fn pivots(h: &IntMatrix) -> Vec<usize> {
    h.iter()
        .map(|row| row.iter().position(|x| !x.is_zero()).expect("nonzero row"))
        .collect()
}

/// Diagonal of the Smith normal form (nonzero invariant factors, ascending,
/// each dividing the next).
pub fn smith_diagonal(m: &IntMatrix) -> Vec<BigInt> {
    let mut a = m.clone();
    let rows = a.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = a[0].len();
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // smallest nonzero entry of the trailing block
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !a[i][j].is_zero()
                    && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs())
                {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        a.swap(t, bi);
        for row in a.iter_mut() {
            row.swap(t, bj);
        }
        let mut clean = true;
        for i in (t + 1)..rows {
            if !a[i][t].is_zero() {
                let q = a[i][t].div_floor(&a[t][t]);
                let pr = a[t].clone();
                axpy(&mut a[i], &q, &pr);
                if !a[i][t].is_zero() {
                    clean = false;
                }
            }
        }
        for j in (t + 1)..cols {
            if !a[t][j].is_zero() {
                let q = a[t][j].div_floor(&a[t][t]);
                for i in 0..rows {
                    let v = &q * &a[i][t];
                    a[i][j] -= v;
                }
                if !a[t][j].is_zero() {
                    clean = false;
                }
            }
        }
        if !clean {
            continue;
        }
        // divisibility of the trailing block by the pivot
        let p = a[t][t].clone();
        let offending = ((t + 1)..rows).find(|&i| ((t + 1)..cols).any(|j| !(&a[i][j] % &p).is_zero()));
        if let Some(i) = offending {
            let ri = a[i].clone();
            for (x, y) in a[t].iter_mut().zip(ri.iter()) {
                *x += y;
            }
            continue;
        }
        diag.push(p.abs());
        t += 1;
    }
    diag
}

/// Basis (in Hermite form) of `{c in Z^r : c . D = 0 mod modulus}` where `D`
/// is `r x k`.
pub fn kernel_mod(d: &IntMatrix, k: usize, modulus: &BigInt) -> IntMatrix {
    let r = d.len();
    let mut aug: IntMatrix = Vec::with_capacity(r + k);
    for (i, row) in d.iter().enumerate() {
        let mut v = row.clone();
        v.extend((0..r).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }));
        aug.push(v);
    }
    for col in 0..k {
        let mut v = vec![BigInt::zero(); k + r];
        v[col] = modulus.clone();
        aug.push(v);
    }
    let h = hnf(aug);
    let basis: IntMatrix = h
        .into_iter()
        .filter(|row| row[..k].iter().all(Zero::is_zero))
        .map(|row| row[k..].to_vec())
        .collect();
    hnf(basis)
}

/// Integer coordinates of `v` in the lattice spanned by the HNF rows `h`,
/// or `None` if `v` is not in the lattice.
pub fn lattice_coordinates(h: &IntMatrix, v: &[BigInt]) -> Option<Vec<BigInt>> {
    let mut rest = v.to_vec();
    let mut coords = Vec::with_capacity(h.len());
    for (row, pc) in h.iter().zip(pivots(h)) {
        let (q, r) = rest[pc].div_rem(&row[pc]);
        if !r.is_zero() {
            return None;
        }
        axpy(&mut rest, &q, row);
        coords.push(q);
    }
    rest.iter().all(Zero::is_zero).then_some(coords)
}

/// Absolute determinant of a square HNF basis (product of pivots).
pub fn hnf_index(h: &IntMatrix) -> BigInt {
    h.iter()
        .zip(pivots(h))
        .map(|(row, pc)| row[pc].clone())
        .fold(BigInt::one(), |a, b| a * b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    #[test]
    fn hnf_small() {
        let h = hnf(m(&[&[2, 4], &[3, 5]]));
        assert_eq!(h, m(&[&[1, 1], &[0, 2]]));
        let h = hnf(m(&[&[0, 0], &[4, 6], &[6, 9]]));
        assert_eq!(h, m(&[&[2, 3]]));
    }

    #[test]
    fn smith_small() {
        let d = smith_diagonal(&m(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]));
        assert_eq!(d, vec![BigInt::from(2), BigInt::from(6), BigInt::from(12)]);
        let d = smith_diagonal(&m(&[&[1, 0], &[0, 2]]));
        assert_eq!(d, vec![BigInt::from(1), BigInt::from(2)]);
    }

    #[test]
    fn kernel_and_membership() {
        // c0 * 0 + c1 * 1 = 0 mod 2 -> basis {(1,0),(0,2)}
        let ker = kernel_mod(&m(&[&[0], &[1]]), 1, &BigInt::from(2));
        assert_eq!(ker, m(&[&[1, 0], &[0, 2]]));
        assert_eq!(hnf_index(&ker), BigInt::from(2));
        assert!(lattice_coordinates(&ker, &m(&[&[3, 4]])[0]).is_some());
        assert!(lattice_coordinates(&ker, &m(&[&[3, 1]])[0]).is_none());
    }
}
