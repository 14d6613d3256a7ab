//! Weighted polynomial rings `K[x_1, .., x_n]` with `deg x_i = omega_i`, the
//! ideals `A_{>=d}`, and the power checks that certify normality of `A_{>=kw}`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::lattice::{checked_lcm, minimal_points_halfspace, ExponentVector};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeightedGrading {
    weights: Vec<u64>,
    w: u64,
}

/// `witness` is a minimal generator of `A_{>=pkw}` outside `I^p`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PowerMismatch {
    pub p: u64,
    pub witness: ExponentVector,
}

/// A sufficient criterion: failure leaves normality open.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum FaridiVerdict {
    Normal { checked_powers: Vec<u64> },
    Undecided(PowerMismatch),
}

impl FaridiVerdict {
    pub fn is_normal(&self) -> bool {
        matches!(self, FaridiVerdict::Normal { .. })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PowerComparison {
    /// `I^p = A_{>=pkw}`.
    pub equal: bool,
    pub witness: Option<ExponentVector>,
    /// `closure(I^p) = A_{>=pkw}`.
    pub closure_equal: bool,
}

impl WeightedGrading {
    pub fn new(weights: &[u64]) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::invalid("need at least one weight"));
        }
        if weights.contains(&0) {
            return Err(Error::invalid("weights must be positive"));
        }
        Ok(WeightedGrading {
            weights: weights.to_vec(),
            w: checked_lcm(weights)?,
        })
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    /// `lcm(omega_1, .., omega_n)`.
    pub fn w(&self) -> u64 {
        self.w
    }

    pub fn n(&self) -> usize {
        self.weights.len()
    }

    /// `A_{>=d}`: monomials of weighted degree at least `d`.
    pub fn ideal_at_least(&self, d: u64) -> Result<MonomialIdeal> {
        if d == 0 {
            return Err(Error::invalid("degree bound must be positive"));
        }
        let gens = minimal_points_halfspace(&self.weights, d)?;
        Ok(MonomialIdeal::from_minimal_unchecked(self.n(), gens))
    }

    fn kw(&self, k: u64) -> Result<u64> {
        if k == 0 {
            return Err(Error::invalid("k must be positive"));
        }
        k.checked_mul(self.w).ok_or(Error::Overflow("k * w"))
    }

    /// Compares `(A_{>=kw})^p` with `A_{>=pkw}`, and the integral closure of the
    /// former with the latter.
    pub fn verify_power_equality(&self, k: u64, p: u64) -> Result<PowerComparison> {
        let kw = self.kw(k)?;
        if p == 0 {
            return Err(Error::invalid("p must be positive"));
        }
        let top = self.ideal_at_least(p.checked_mul(kw).ok_or(Error::Overflow("p * k * w"))?)?;
        let power = self.ideal_at_least(kw)?.power(p)?;
        let witness = top
            .generators()
            .iter()
            .find(|g| !power.contains(g))
            .cloned();
        let closure_equal = power.integral_closure()? == top;
        Ok(PowerComparison {
            equal: witness.is_none(),
            witness,
            closure_equal,
        })
    }

    /// Normality of `I = A_{>=kw}` from `I^p = A_{>=pkw}` for
    /// `1 <= p <= floor((n - 2)/k) + 1`. When `k >= n - 1` only `p = 1` is in
    /// range, which always holds.
    pub fn faridi_check(&self, k: u64) -> Result<FaridiVerdict> {
        self.kw(k)?;
        let n = self.n() as u64;
        let top = if n < 2 { 0 } else { (n - 2) / k + 1 };
        let mut checked = Vec::new();
        for p in 1..=top {
            checked.push(p);
            if p == 1 {
                continue;
            }
            if let Some(witness) = self.verify_power_equality(k, p)?.witness {
                return Ok(FaridiVerdict::Undecided(PowerMismatch { p, witness }));
            }
        }
        Ok(FaridiVerdict::Normal {
            checked_powers: checked,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lambda::ideal_of_lambda;
    use crate::lattice::LambdaSystem;

    fn ev(c: &[u64]) -> ExponentVector {
        ExponentVector::new(c.to_vec()).unwrap()
    }

    fn grading(w: &[u64]) -> WeightedGrading {
        WeightedGrading::new(w).unwrap()
    }

    /// Minimal elements of `{a : omega . a >= d}` by scanning a box.
    fn brute_at_least(weights: &[u64], d: u64) -> Vec<ExponentVector> {
        let n = weights.len();
        let side = d + 1;
        let mut members = Vec::new();
        for code in 0..side.pow(n as u32) {
            let mut c = code;
            let a: Vec<u64> = (0..n)
                .map(|_| {
                    let v = c % side;
                    c /= side;
                    v
                })
                .collect();
            if a.iter().zip(weights).map(|(x, y)| x * y).sum::<u64>() >= d {
                members.push(a);
            }
        }
        let mut minimal: Vec<ExponentVector> = members
            .iter()
            .filter(|a| {
                !members
                    .iter()
                    .any(|b| b != *a && b.iter().zip(a.iter()).all(|(x, y)| x <= y))
            })
            .map(|a| ev(a))
            .collect();
        minimal.sort();
        minimal
    }

    #[test]
    fn ideal_at_least_examples() {
        let g = grading(&[1, 1, 1]).ideal_at_least(2).unwrap();
        assert_eq!(g.generators().len(), 6);
        assert_eq!(g.generators(), brute_at_least(&[1, 1, 1], 2).as_slice());
        assert_eq!(
            grading(&[2, 3]).ideal_at_least(6).unwrap().generators(),
            &[ev(&[0, 2]), ev(&[2, 1]), ev(&[3, 0])]
        );
        for (w, d) in [(&[2u64, 3][..], 6u64), (&[3, 5, 2], 9), (&[4, 1], 7)] {
            assert_eq!(
                grading(w).ideal_at_least(d).unwrap().generators(),
                brute_at_least(w, d).as_slice()
            );
        }
        let sys = LambdaSystem::new(&[2, 3, 7]).unwrap();
        assert_eq!(
            grading(&[21, 14, 6]).ideal_at_least(42).unwrap(),
            ideal_of_lambda(&sys).unwrap()
        );
        assert!(grading(&[1]).ideal_at_least(0).is_err());
        assert!(WeightedGrading::new(&[2, 0]).is_err());
        assert_eq!(grading(&[21, 14, 6]).w(), 42);
    }

    #[test]
    fn faridi_examples() {
        assert!(grading(&[1, 1, 1]).faridi_check(2).unwrap().is_normal());
        assert_eq!(
            grading(&[2, 3]).faridi_check(1).unwrap(),
            FaridiVerdict::Normal {
                checked_powers: vec![1]
            }
        );
        assert_eq!(
            grading(&[21, 14, 6]).faridi_check(1).unwrap(),
            FaridiVerdict::Undecided(PowerMismatch {
                p: 2,
                witness: ev(&[1, 2, 6])
            })
        );
        assert!(grading(&[1, 1, 1]).faridi_check(0).is_err());
    }

    #[test]
    fn power_equality_examples() {
        for k in 1..4 {
            for p in 1..4 {
                let c = grading(&[1, 1]).verify_power_equality(k, p).unwrap();
                assert!(c.equal && c.closure_equal);
            }
        }
        let c = grading(&[21, 14, 6]).verify_power_equality(1, 2).unwrap();
        assert!(!c.equal);
        assert_eq!(c.witness, Some(ev(&[1, 2, 6])));
        assert!(c.closure_equal);
    }
}
