//! Brute-force validators kept independent of the main algorithms.
//!
//! * [`np_contains_scaling`]: `alpha in m NP(I)` iff `s alpha in Gamma(I^{sm})`
//!   for some `s >= 1`, searched up to a scale budget.
//! * [`decompose_exhaustive`]: plain backtracking over `Gamma(I(lambda))`.
//! * [`quasinormal_bounded`]: the quasinormality definition for sums below `nL`.

use std::collections::HashSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::lattice::{ExponentVector, LambdaSystem};

/// Default number of search nodes per [`np_contains_scaling`] call.
pub const DEFAULT_NODE_BUDGET: u64 = 2_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ScalingOutcome {
    Yes { scale: u64 },
    NoWitnessFound,
    OutOfBudget,
}

fn le(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

struct Knapsack<'a> {
    generators: &'a [ExponentVector],
    failed: HashSet<(Vec<u64>, u64)>,
    nodes: u64,
    budget: u64,
}

impl Knapsack<'_> {
    /// Whether `rest` dominates a sum of `count` generators. `None` when the
    /// node budget runs out.
    fn search(&mut self, rest: &[u64], count: u64) -> Option<bool> {
        if count == 0 {
            return Some(true);
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return None;
        }
        let key = (rest.to_vec(), count);
        if self.failed.contains(&key) {
            return Some(false);
        }
        for g in self.generators {
            if !le(g.as_slice(), rest) {
                continue;
            }
            let next: Vec<u64> = rest.iter().zip(g.as_slice()).map(|(r, x)| r - x).collect();
            if self.search(&next, count - 1)? {
                return Some(true);
            }
        }
        self.failed.insert(key);
        Some(false)
    }
}

/// Searches scales `s = 1..=m_max` for `s alpha` dominating a sum of `s m`
/// generators of `I`. Only `Yes` is conclusive.
pub fn np_contains_scaling(
    ideal: &MonomialIdeal,
    alpha: &ExponentVector,
    m: u64,
    m_max: u64,
) -> Result<ScalingOutcome> {
    np_contains_scaling_with_budget(ideal, alpha, m, m_max, DEFAULT_NODE_BUDGET)
}

pub fn np_contains_scaling_with_budget(
    ideal: &MonomialIdeal,
    alpha: &ExponentVector,
    m: u64,
    m_max: u64,
    budget: u64,
) -> Result<ScalingOutcome> {
    if alpha.len() != ideal.n() {
        return Err(Error::invalid("alpha has the wrong number of coordinates"));
    }
    if m == 0 || m_max == 0 {
        return Err(Error::invalid("m and m_max must be positive"));
    }
    let mut search = Knapsack {
        generators: ideal.generators(),
        failed: HashSet::new(),
        nodes: 0,
        budget,
    };
    for s in 1..=m_max {
        let target: Vec<u64> = alpha.as_slice().iter().map(|&a| a * s).collect();
        match search.search(&target, s * m) {
            Some(true) => return Ok(ScalingOutcome::Yes { scale: s }),
            Some(false) => {}
            None => return Ok(ScalingOutcome::OutOfBudget),
        }
    }
    Ok(ScalingOutcome::NoWitnessFound)
}

/// Default scale budget for a general ideal: the product of the sides of the
/// bounding box of its generators.
pub fn default_scale_budget(ideal: &MonomialIdeal) -> u64 {
    (0..ideal.n())
        .map(|i| {
            ideal
                .generators()
                .iter()
                .map(|g| g[i])
                .max()
                .unwrap_or(0)
                .max(1)
        })
        .fold(1u64, |acc, s| acc.saturating_mul(s))
}

fn in_gamma(sys: &LambdaSystem, beta: &[u64]) -> bool {
    let total: u128 = beta
        .iter()
        .zip(sys.omega())
        .map(|(&b, &w)| b as u128 * w as u128)
        .sum();
    total >= sys.lcm() as u128
}

fn all_below(alpha: &[u64]) -> Vec<Vec<u64>> {
    let mut out = vec![Vec::new()];
    for &a in alpha {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..=a).map(move |x| {
                    let mut v = prefix.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
    }
    out
}

fn backtrack(
    sys: &LambdaSystem,
    candidates: &[Vec<u64>],
    rest: &[u64],
    p: u64,
    parts: &mut Vec<Vec<u64>>,
) -> bool {
    if p == 1 {
        if in_gamma(sys, rest) {
            parts.push(rest.to_vec());
            return true;
        }
        return false;
    }
    for c in candidates {
        if !le(c, rest) {
            continue;
        }
        let next: Vec<u64> = rest.iter().zip(c).map(|(r, x)| r - x).collect();
        parts.push(c.clone());
        if backtrack(sys, candidates, &next, p - 1, parts) {
            return true;
        }
        parts.pop();
    }
    false
}

/// `alpha = beta_1 + .. + beta_p` with every `beta_j in Gamma(I(lambda))`, found
/// by trying every element of `Gamma` below `alpha`.
pub fn decompose_exhaustive(
    sys: &LambdaSystem,
    alpha: &ExponentVector,
    p: u64,
) -> Result<Option<Vec<ExponentVector>>> {
    if alpha.len() != sys.n() {
        return Err(Error::invalid("alpha has the wrong number of coordinates"));
    }
    if p == 0 {
        return Err(Error::invalid("p must be positive"));
    }
    let candidates: Vec<Vec<u64>> = all_below(alpha.as_slice())
        .into_iter()
        .filter(|b| in_gamma(sys, b))
        .collect();
    let mut parts = Vec::new();
    if !backtrack(sys, &candidates, alpha.as_slice(), p, &mut parts) {
        return Ok(None);
    }
    parts
        .into_iter()
        .map(ExponentVector::new)
        .collect::<Result<Vec<_>>>()
        .map(Some)
}

/// Every `s in <omega>` with `pL <= s < nL`, `1 <= p < n`, is a sum of `p`
/// elements of `<omega>` that are each at least `L`.
pub fn quasinormal_bounded(sys: &LambdaSystem) -> Result<bool> {
    let n = sys.n() as u64;
    let l = sys.lcm();
    let limit = n
        .checked_mul(l)
        .and_then(|v| usize::try_from(v).ok())
        .ok_or(Error::Overflow("quasinormality bound"))?;
    let mut member = vec![false; limit];
    if let Some(first) = member.first_mut() {
        *first = true;
    }
    for s in 1..limit {
        member[s] = sys
            .omega()
            .iter()
            .any(|&w| (w as usize) <= s && member[s - w as usize]);
    }
    // split[p][s]: s is a sum of p members that are each >= L.
    let l = l as usize;
    let mut split = vec![vec![false; limit]; n as usize];
    if n > 1 {
        split[1][l..].copy_from_slice(&member[l..]);
    }
    for p in 2..n as usize {
        for s in (p * l)..limit {
            split[p][s] = (l..=s - (p - 1) * l).any(|s1| member[s1] && split[p - 1][s - s1]);
        }
    }
    for s in 0..limit {
        if !member[s] {
            continue;
        }
        let bad = split
            .iter()
            .enumerate()
            .skip(1)
            .any(|(p, row)| s >= p * l && !row[s]);
        if bad {
            return Ok(false);
        }
    }
    Ok(true)
}
