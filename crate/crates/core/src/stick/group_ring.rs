use std::sync::Arc;

use num_rational::BigRational;
use num_traits::Zero;

use crate::grp::FiniteGroup;

/// An element `sum_g x_g g` of `QG`, stored densely by element index.
#[derive(Debug, Clone)]
pub struct GroupRingQ {
    group: Arc<FiniteGroup>,
    coeffs: Vec<BigRational>,
}

impl PartialEq for GroupRingQ {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.group, &other.group) && self.coeffs == other.coeffs
    }
}

impl GroupRingQ {
    pub fn zero(group: &Arc<FiniteGroup>) -> Self {
        GroupRingQ {
            group: group.clone(),
            coeffs: vec![BigRational::zero(); group.order()],
        }
    }

    pub fn from_coeffs(group: &Arc<FiniteGroup>, coeffs: Vec<BigRational>) -> Self {
        assert_eq!(coeffs.len(), group.order());
        GroupRingQ {
            group: group.clone(),
            coeffs,
        }
    }

    /// `sum_g f(c(g)) g`.
    pub fn from_class_function(group: &Arc<FiniteGroup>, by_class: &[BigRational]) -> Self {
        let coeffs = (0..group.order())
            .map(|g| by_class[group.class_of(g)].clone())
            .collect();
        GroupRingQ {
            group: group.clone(),
            coeffs,
        }
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn coefficient(&self, g: usize) -> &BigRational {
        &self.coeffs[g]
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Nonzero `(g, x_g)` pairs by element index.
    pub fn support(&self) -> Vec<(usize, &BigRational)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(BigRational::is_integer)
    }

    /// Constant on conjugacy classes, equivalently in the centre of `QG`.
    pub fn is_central(&self) -> bool {
        self.class_coefficients().is_some()
    }

    /// The coefficient on each class, if constant on classes.
    pub fn class_coefficients(&self) -> Option<Vec<BigRational>> {
        self.group
            .classes()
            .iter()
            .map(|class| {
                let x = &self.coeffs[class[0]];
                class.iter().all(|&g| &self.coeffs[g] == x).then(|| x.clone())
            })
            .collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Self::from_coeffs(&self.group, coeffs)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let g = &self.group;
        let mut out = vec![BigRational::zero(); g.order()];
        for (a, x) in self.support() {
            for (b, y) in other.support() {
                out[g.mul(a, b)] += x * y;
            }
        }
        Self::from_coeffs(g, out)
    }

    /// `sum_g x_g g^k`, the action of `k` on `QG(-1)`-style coefficients.
    pub fn power_map(&self, k: i64) -> Self {
        let g = &self.group;
        let mut out = vec![BigRational::zero(); g.order()];
        for (a, x) in self.support() {
            out[g.pow(a, k)] += x;
        }
        Self::from_coeffs(g, out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat_int;
    use crate::grp::builtin;

    #[test]
    fn centre_and_product() {
        let g = Arc::new(builtin("S3").unwrap());
        let mut c = vec![rat_int(0); 6];
        c[1] = rat_int(1);
        let x = GroupRingQ::from_coeffs(&g, c);
        assert!(!x.is_central());
        let sums: Vec<_> = (0..3).map(|i| rat_int(i as i64)).collect();
        let z = GroupRingQ::from_class_function(&g, &sums);
        assert!(z.is_central());
        assert_eq!(z.mul(&x), x.mul(&z));
        assert_eq!(z.class_coefficients().unwrap(), sums);
    }
}
