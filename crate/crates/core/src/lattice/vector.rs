use std::fmt;
use std::ops::Index;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A point of `N^n`, the exponent of the monomial `x^alpha`.
///
/// The derived `Ord` is lexicographic, which refines the componentwise order:
/// if `a <= b` componentwise then `a <= b` lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExponentVector(Vec<u64>);

impl ExponentVector {
    pub fn new(coords: Vec<u64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::invalid(
                "exponent vectors need at least one coordinate",
            ));
        }
        Ok(ExponentVector(coords))
    }

    pub fn zero(n: usize) -> Self {
        ExponentVector(vec![0; n])
    }

    /// `k * e_i` in `N^n`.
    pub fn axis(n: usize, i: usize, k: u64) -> Self {
        let mut v = vec![0; n];
        v[i] = k;
        ExponentVector(v)
    }

    pub(crate) fn from_vec_unchecked(coords: Vec<u64>) -> Self {
        ExponentVector(coords)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<u64> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// `self <=_pr other`.
    pub fn le_pr(&self, other: &ExponentVector) -> bool {
        le_pr(&self.0, &other.0)
    }

    pub fn add(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self - other`, or `None` unless `other <=_pr self`.
    pub fn checked_sub(&self, other: &ExponentVector) -> Option<ExponentVector> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(ExponentVector)
    }

    pub fn scale(&self, k: u64) -> ExponentVector {
        ExponentVector(self.0.iter().map(|a| a * k).collect())
    }

    /// Number of nonzero coordinates.
    pub fn support_size(&self) -> usize {
        self.0.iter().filter(|&&c| c > 0).count()
    }
}

impl Index<usize> for ExponentVector {
    type Output = u64;

    fn index(&self, i: usize) -> &u64 {
        &self.0[i]
    }
}

impl From<ExponentVector> for Vec<u64> {
    fn from(v: ExponentVector) -> Vec<u64> {
        v.0
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

pub(crate) fn le_pr(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

const GRID_LIMIT: u128 = 1 << 22;

/// The `<=_pr`-minimal elements of `points`, deduplicated and sorted lexicographically.
pub fn minimalize(mut points: Vec<ExponentVector>) -> Vec<ExponentVector> {
    if points.len() <= 1 {
        return points;
    }
    let n = points[0].len();
    let mut bounds = vec![0u64; n];
    for p in &points {
        for (b, &c) in bounds.iter_mut().zip(p.as_slice()) {
            *b = (*b).max(c);
        }
    }
    let cells = bounds
        .iter()
        .try_fold(1u128, |acc, &b| acc.checked_mul(b as u128 + 1));
    match cells {
        Some(c) if points.len() > 64 && c <= GRID_LIMIT => minimalize_grid(&points, &bounds),
        _ => {
            points.sort_unstable();
            points.dedup();
            let mut kept: Vec<ExponentVector> = Vec::new();
            for p in points {
                if !kept.iter().any(|k| k.le_pr(&p)) {
                    kept.push(p);
                }
            }
            kept
        }
    }
}

fn minimalize_grid(points: &[ExponentVector], bounds: &[u64]) -> Vec<ExponentVector> {
    let n = bounds.len();
    let mut strides = vec![1usize; n];
    for i in (0..n.saturating_sub(1)).rev() {
        strides[i] = strides[i + 1] * (bounds[i + 1] as usize + 1);
    }
    let cells = strides[0] * (bounds[0] as usize + 1);
    let index =
        |p: &[u64]| -> usize { p.iter().zip(&strides).map(|(&c, &s)| c as usize * s).sum() };

    let mut marked = vec![false; cells];
    for p in points {
        marked[index(p.as_slice())] = true;
    }
    // above[idx]: some marked point is strictly below idx.
    let mut above = vec![false; cells];
    let mut coords = vec![0u64; n];
    let mut out = Vec::new();
    for idx in 0..cells {
        let mut dominated = false;
        for i in 0..n {
            if coords[i] > 0 {
                let prev = idx - strides[i];
                if marked[prev] || above[prev] {
                    dominated = true;
                    break;
                }
            }
        }
        above[idx] = dominated;
        if marked[idx] && !dominated {
            out.push(ExponentVector(coords.clone()));
        }
        // advance odometer, last coordinate fastest (matches the linear index)
        let mut i = n;
        while i > 0 {
            i -= 1;
            if coords[i] < bounds[i] {
                coords[i] += 1;
                break;
            }
            coords[i] = 0;
        }
    }
    out
}
