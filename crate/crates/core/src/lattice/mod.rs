//! Shared lattice substrate: exponent vectors, the componentwise order,
//! numerical semigroups and minimal lattice points of integer halfspaces.

mod halfspace;
mod semigroup;
mod system;
mod vector;

pub use halfspace::minimal_points_halfspace;
pub use semigroup::{semigroup_contains, SemigroupTable};
pub use system::LambdaSystem;
pub(crate) use vector::le_pr as vector_le;
pub use vector::{minimalize, ExponentVector};

use num_integer::Integer;

use crate::error::{Error, Result};

/// Exact rationals, used by the LP route and for user-facing fractions.
pub type RationalNumber = num_rational::BigRational;

/// Upper bound on the number of lattice points any single box scan may visit.
pub const MAX_BOX_POINTS: u128 = 1 << 26;

pub(crate) fn checked_lcm(values: &[u64]) -> Result<u64> {
    values.iter().try_fold(1u64, |acc, &v| {
        let g = acc.gcd(&v);
        (acc / g).checked_mul(v).ok_or(Error::Overflow("lcm"))
    })
}

pub(crate) fn gcd_all(values: &[u64]) -> u64 {
    values.iter().fold(0u64, |acc, &v| acc.gcd(&v))
}

/// Weighted degree `w . a`.
pub fn dot(weights: &[u64], a: &[u64]) -> u128 {
    debug_assert_eq!(weights.len(), a.len());
    weights
        .iter()
        .zip(a)
        .map(|(&w, &x)| w as u128 * x as u128)
        .sum()
}

pub(crate) fn ceil_div(num: u128, den: u128) -> u128 {
    num.div_ceil(den)
}

/// Number of points of the box `prod [0, bounds_i]`, rejecting boxes above [`MAX_BOX_POINTS`].
pub(crate) fn box_size(bounds: &[u64]) -> Result<u128> {
    let mut size: u128 = 1;
    for &b in bounds {
        size = size
            .checked_mul(b as u128 + 1)
            .ok_or(Error::BoxTooLarge(u128::MAX))?;
        if size > MAX_BOX_POINTS {
            return Err(Error::BoxTooLarge(size));
        }
    }
    Ok(size)
}

/// Iterates the box `prod [0, bounds_i]` in lexicographic order (last coordinate fastest).
#[derive(Debug, Clone)]
pub struct BoxIter {
    bounds: Vec<u64>,
    next: Option<Vec<u64>>,
}

impl BoxIter {
    pub fn new(bounds: &[u64]) -> Self {
        BoxIter {
            bounds: bounds.to_vec(),
            next: Some(vec![0; bounds.len()]),
        }
    }
}

impl Iterator for BoxIter {
    type Item = Vec<u64>;

    fn next(&mut self) -> Option<Vec<u64>> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let mut i = succ.len();
        loop {
            if i == 0 {
                break;
            }
            i -= 1;
            if succ[i] < self.bounds[i] {
                succ[i] += 1;
                self.next = Some(succ);
                break;
            }
            succ[i] = 0;
        }
        Some(current)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn box_iter_is_lexicographic_and_complete() {
        let pts: Vec<_> = BoxIter::new(&[1, 2]).collect();
        assert_eq!(
            pts,
            vec![
                vec![0, 0],
                vec![0, 1],
                vec![0, 2],
                vec![1, 0],
                vec![1, 1],
                vec![1, 2]
            ]
        );
        assert_eq!(BoxIter::new(&[]).count(), 1);
    }

    #[test]
    fn lcm_and_gcd() {
        assert_eq!(checked_lcm(&[2, 3, 7]).unwrap(), 42);
        assert_eq!(checked_lcm(&[]).unwrap(), 1);
        assert_eq!(gcd_all(&[4, 6, 10]), 2);
        assert!(checked_lcm(&[u64::MAX, u64::MAX - 1]).is_err());
    }

    #[test]
    fn oversized_boxes_are_rejected() {
        assert!(box_size(&[10, 10]).is_ok());
        assert!(matches!(
            box_size(&[1 << 20, 1 << 20]),
            Err(Error::BoxTooLarge(_))
        ));
    }
}
