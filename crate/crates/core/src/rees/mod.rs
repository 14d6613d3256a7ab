//! Minimal generators of the normalized Rees algebra of `I(lambda)`.
//!
//! The normalization is the monoid algebra of
//! `{(a, d) in N^{n+1} : omega . a >= d L}`. Its minimal generators are the
//! variables `(e_i, 0)`, the pure powers `(lambda_i e_i, 1)`, and mixed-support
//! vectors `(a, d)` with `d > 0` that satisfy
//!
//! * (A) `omega . a >= d L`,
//! * (B) lowering any positive `a_i` by one breaks (A),
//! * (C) no split into two vectors satisfying (A) with `0 < d_1, d_2 < d`.
//!
//! Mixed generators have `a <_pr lambda` and `d < n`, and `I(lambda)` is normal
//! iff all of them have `d = 1`.

mod table;
mod transfer;

pub use table::ReesTable;
pub use transfer::{
    transfer_backward, transfer_forward, verify_congruence, CongruenceReport, ReesVector,
    TransferPair,
};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{box_size, ceil_div, BoxIter, ExponentVector, LambdaSystem};
use crate::verdict::Verdict;

/// The four generator shapes, numbered as in the usual tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u8", into = "u8")]
pub enum GeneratorType {
    /// `(e_i, 0)`.
    Variable,
    /// `(lambda_i e_i, 1)`.
    PurePower,
    /// `d > 0`, `a_n = 0`, two of `a_1..a_{n-1}` positive.
    MixedWithoutLast,
    /// `d > 0`, `a_n > 0` and some other `a_i > 0`.
    MixedWithLast,
}

impl GeneratorType {
    pub fn number(self) -> u8 {
        match self {
            GeneratorType::Variable => 1,
            GeneratorType::PurePower => 2,
            GeneratorType::MixedWithoutLast => 3,
            GeneratorType::MixedWithLast => 4,
        }
    }

    pub fn is_mixed(self) -> bool {
        matches!(
            self,
            GeneratorType::MixedWithoutLast | GeneratorType::MixedWithLast
        )
    }
}

impl From<GeneratorType> for u8 {
    fn from(t: GeneratorType) -> u8 {
        t.number()
    }
}

impl TryFrom<u8> for GeneratorType {
    type Error = String;

    fn try_from(v: u8) -> std::result::Result<Self, String> {
        match v {
            1 => Ok(GeneratorType::Variable),
            2 => Ok(GeneratorType::PurePower),
            3 => Ok(GeneratorType::MixedWithoutLast),
            4 => Ok(GeneratorType::MixedWithLast),
            other => Err(format!("generator type must be 1..4, got {other}")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ReesGenerator {
    pub a: ExponentVector,
    pub d: u64,
    #[serde(rename = "type")]
    pub kind: GeneratorType,
}

impl ReesGenerator {
    pub fn row(&self) -> Vec<u64> {
        let mut row = self.a.as_slice().to_vec();
        row.push(self.d);
        row
    }
}

impl fmt::Display for ReesGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.a, self.d)
    }
}

/// Shape of `(a, d)`, if it has one of the four generator shapes.
pub fn classify(sys: &LambdaSystem, a: &ExponentVector, d: u64) -> Option<GeneratorType> {
    let n = sys.n();
    let support = a.support_size();
    if d == 0 {
        return (support == 1 && a.as_slice().iter().sum::<u64>() == 1)
            .then_some(GeneratorType::Variable);
    }
    if support == 1 {
        let i = a.as_slice().iter().position(|&c| c > 0)?;
        return (d == 1 && a[i] == sys.lambda()[i]).then_some(GeneratorType::PurePower);
    }
    if support < 2 {
        return None;
    }
    if a[n - 1] == 0 {
        Some(GeneratorType::MixedWithoutLast)
    } else {
        Some(GeneratorType::MixedWithLast)
    }
}

/// (A): `omega . a >= d L`.
pub fn condition_a(sys: &LambdaSystem, a: &[u64], d: u64) -> bool {
    sys.weight(a) >= d as u128 * sys.lcm() as u128
}

/// (B): every positive coordinate is needed for (A).
fn condition_b(sys: &LambdaSystem, a: &[u64], d: u64) -> bool {
    let w = sys.weight(a);
    let need = d as u128 * sys.lcm() as u128;
    a.iter()
        .zip(sys.omega())
        .all(|(&ai, &wi)| ai == 0 || w - (wi as u128) < need)
}

/// Whether `(a, d)` splits as `(b, d_1) + (a - b, d - d_1)` with `0 < d_1 < d`
/// and both halves satisfying (A). The last coordinate of `b` is solved for.
fn splits(sys: &LambdaSystem, a: &[u64], d: u64) -> Result<bool> {
    if d < 2 {
        return Ok(false);
    }
    let n = a.len();
    let (omega, l) = (sys.omega(), sys.lcm() as u128);
    let last_w = omega[n - 1] as u128;
    let a_last = a[n - 1] as u128;
    let prefix_total = crate::lattice::dot(&omega[..n - 1], &a[..n - 1]);
    box_size(&a[..n - 1])?;
    for b in BoxIter::new(&a[..n - 1]) {
        let wb = crate::lattice::dot(&omega[..n - 1], &b);
        let wc = prefix_total - wb;
        for d1 in 1..d {
            let lo = ceil_div((d1 as u128 * l).saturating_sub(wb), last_w);
            let need_c = ceil_div(((d - d1) as u128 * l).saturating_sub(wc), last_w);
            if need_c > a_last {
                continue;
            }
            if lo <= a_last - need_c {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Whether `(a, d)` is a minimal generator of the normalized Rees algebra.
pub fn is_minimal_generator(sys: &LambdaSystem, a: &ExponentVector, d: u64) -> Result<bool> {
    if a.len() != sys.n() {
        return Err(Error::invalid(format!(
            "vector ({a}) has {} coordinates, expected {}",
            a.len(),
            sys.n()
        )));
    }
    if d == 0 {
        return Ok(classify(sys, a, 0) == Some(GeneratorType::Variable));
    }
    let a = a.as_slice();
    Ok(condition_a(sys, a, d) && condition_b(sys, a, d) && !splits(sys, a, d)?)
}

/// `lambda_i - 1` for every `i`; only the first `n - 1` sides are scanned.
fn prefix_box(sys: &LambdaSystem) -> Result<Vec<u64>> {
    let bounds: Vec<u64> = sys.lambda().iter().map(|&l| l - 1).collect();
    box_size(&bounds[..bounds.len() - 1])?;
    Ok(bounds)
}

/// The complete minimal generating set: variables, pure powers, then mixed
/// generators in lexicographic `(a, d)` order.
pub fn minimal_generators(sys: &LambdaSystem) -> Result<Vec<ReesGenerator>> {
    let n = sys.n();
    let mut out: Vec<ReesGenerator> = (0..n)
        .map(|i| ReesGenerator {
            a: ExponentVector::axis(n, i, 1),
            d: 0,
            kind: GeneratorType::Variable,
        })
        .collect();
    out.extend((0..n).map(|i| ReesGenerator {
        a: sys.vertex(i),
        d: 1,
        kind: GeneratorType::PurePower,
    }));
    out.extend(mixed_generators(sys)?);
    Ok(out)
}

/// Types 3 and 4. For a prefix `(a_1..a_{n-1})` of the box `a <_pr lambda` and a
/// degree `d`, condition (B) pins `a_n` to the least value satisfying (A).
fn mixed_generators(sys: &LambdaSystem) -> Result<Vec<ReesGenerator>> {
    let n = sys.n();
    let bounds = prefix_box(sys)?;
    let (omega, l) = (sys.omega(), sys.lcm() as u128);
    let last_w = omega[n - 1] as u128;
    let mut found = Vec::new();
    for prefix in BoxIter::new(&bounds[..n - 1]) {
        let wp = crate::lattice::dot(&omega[..n - 1], &prefix);
        for d in 1..n as u64 {
            let last = ceil_div((d as u128 * l).saturating_sub(wp), last_w);
            if last > bounds[n - 1] as u128 {
                continue;
            }
            let mut a = prefix.clone();
            a.push(last as u64);
            if sys.weight(&a) / l != d as u128 || !condition_b(sys, &a, d) || splits(sys, &a, d)? {
                continue;
            }
            let a = ExponentVector::from_vec_unchecked(a);
            match classify(sys, &a, d) {
                Some(kind) if kind.is_mixed() => found.push(ReesGenerator { a, d, kind }),
                _ => {}
            }
        }
    }
    found.sort();
    Ok(found)
}

/// Normality of `I(lambda)`: every mixed minimal generator has `d = 1`.
/// The witness is the first offending generator in canonical order.
pub fn is_normal_via_rees(sys: &LambdaSystem) -> Result<Verdict<ReesGenerator>> {
    Ok(
        match mixed_generators(sys)?.into_iter().find(|g| g.d != 1) {
            Some(g) => Verdict::Fails(g),
            None => Verdict::Holds,
        },
    )
}

/// Degree-one generators with `a_n > 0`, one for each `(a_1..a_{n-1})` with
/// `a_1/lambda_1 + .. + a_{n-1}/lambda_{n-1} < 1`, taking `a_n` minimal for (A).
///
/// Requires `lambda_n >= lambda_i` for every `i`.
pub fn enumerate_d1(sys: &LambdaSystem) -> Result<Vec<ReesGenerator>> {
    if !sys.last_is_largest() {
        return Err(Error::invalid(
            "degree-one enumeration needs the last entry of lambda to be the largest",
        ));
    }
    let n = sys.n();
    let bounds = prefix_box(sys)?;
    let (omega, l) = (sys.omega(), sys.lcm() as u128);
    let mut out = Vec::new();
    for mut prefix in BoxIter::new(&bounds[..n - 1]) {
        let wp = crate::lattice::dot(&omega[..n - 1], &prefix);
        if wp >= l {
            continue;
        }
        prefix.push(ceil_div(l - wp, omega[n - 1] as u128) as u64);
        let a = ExponentVector::from_vec_unchecked(prefix);
        let kind = classify(sys, &a, 1).expect("a_n > 0 and d = 1 has a generator shape");
        out.push(ReesGenerator { a, d: 1, kind });
    }
    Ok(out)
}
