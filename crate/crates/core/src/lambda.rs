//! The ideals `I(lambda)`: integral closures of `(x_1^lambda_1, .., x_n^lambda_n)`.
//!
//! With `L = lcm(lambda)` and `omega_i = L / lambda_i`, the exponent set is the
//! halfspace `Gamma = {alpha : omega . alpha >= L}`. Normality of `I(lambda)`
//! reduces to splitting every `alpha <_pr lambda` with `omega . alpha >= pL`
//! (for `2 <= p < n`) into `p` elements of `Gamma`.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::lattice::{
    box_size, minimal_points_halfspace, semigroup_contains, vector_le, BoxIter, ExponentVector,
    LambdaSystem, SemigroupTable,
};
use crate::verdict::Verdict;

/// `alpha = parts[0] + .. + parts[p-1]` with every part in `Gamma`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GammaDecomposition {
    pub parts: Vec<ExponentVector>,
}

impl GammaDecomposition {
    pub fn sum(&self) -> ExponentVector {
        let mut iter = self.parts.iter();
        let first = iter
            .next()
            .expect("decompositions have at least one part")
            .clone();
        iter.fold(first, |acc, p| acc.add(p))
    }
}

/// `alpha <_pr lambda` with `omega . alpha >= pL` that is not a sum of `p` elements of `Gamma`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecompositionFailure {
    pub alpha: ExponentVector,
    pub parts: u64,
}

/// A value `s = omega . alpha >= pL` of `<omega>` that does not split into `p` members of
/// `<omega>` that are each `>= L`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SplitFailure {
    pub value: u64,
    pub parts: u64,
    pub alpha: ExponentVector,
}

pub fn ideal_of_lambda(sys: &LambdaSystem) -> Result<MonomialIdeal> {
    let gens = minimal_points_halfspace(sys.omega(), sys.lcm())?;
    Ok(MonomialIdeal::from_minimal_unchecked(sys.n(), gens))
}

/// `alpha in Gamma(I(lambda))`.
pub fn gamma_contains(sys: &LambdaSystem, alpha: &ExponentVector) -> Result<bool> {
    check_len(sys, alpha)?;
    Ok(sys.weight(alpha.as_slice()) >= sys.lcm() as u128)
}

/// Decides `alpha in p * Gamma`, which is `Gamma(I(lambda)^p)`, and produces a decomposition.
pub fn decompose_gamma(
    sys: &LambdaSystem,
    alpha: &ExponentVector,
    p: u64,
) -> Result<Option<GammaDecomposition>> {
    check_len(sys, alpha)?;
    if p == 0 {
        return Err(Error::invalid("the number of parts must be positive"));
    }
    Ok(GammaSplitter::new(sys)?.decompose(alpha, p))
}

/// Memoized splitter for `alpha in p * Gamma`.
///
/// `alpha` is a sum of `p` elements of `Gamma` iff it dominates a sum of `p`
/// minimal generators, so the search peels one minimal generator at a time and
/// prunes branches whose remainder violates `omega . rest >= (p-1) L`.
pub struct GammaSplitter<'a> {
    sys: &'a LambdaSystem,
    generators: Vec<ExponentVector>,
    memo: HashMap<(Vec<u64>, u64), bool>,
}

impl<'a> GammaSplitter<'a> {
    pub fn new(sys: &'a LambdaSystem) -> Result<Self> {
        Ok(GammaSplitter {
            sys,
            generators: minimal_points_halfspace(sys.omega(), sys.lcm())?,
            memo: HashMap::new(),
        })
    }

    fn threshold(&self, p: u64) -> u128 {
        p as u128 * self.sys.lcm() as u128
    }

    pub fn splits(&mut self, alpha: &[u64], p: u64) -> bool {
        let w = self.sys.weight(alpha);
        if w < self.threshold(p) {
            return false;
        }
        if p <= 1 {
            return true;
        }
        if let Some(&hit) = self.memo.get(&(alpha.to_vec(), p)) {
            return hit;
        }
        let found = self.peel(alpha, p).is_some();
        self.memo.insert((alpha.to_vec(), p), found);
        found
    }

    /// The first generator whose removal leaves a remainder in `(p-1) * Gamma`.
    fn peel(&mut self, alpha: &[u64], p: u64) -> Option<(usize, Vec<u64>)> {
        let next = self.threshold(p - 1);
        for j in 0..self.generators.len() {
            if !vector_le(self.generators[j].as_slice(), alpha) {
                continue;
            }
            let rest: Vec<u64> = alpha
                .iter()
                .zip(self.generators[j].as_slice())
                .map(|(a, g)| a - g)
                .collect();
            if self.sys.weight(&rest) < next {
                continue;
            }
            if self.splits(&rest, p - 1) {
                return Some((j, rest));
            }
        }
        None
    }

    pub fn decompose(&mut self, alpha: &ExponentVector, p: u64) -> Option<GammaDecomposition> {
        if !self.splits(alpha.as_slice(), p) {
            return None;
        }
        let mut parts = Vec::with_capacity(p as usize);
        let mut rest = alpha.as_slice().to_vec();
        for k in (2..=p).rev() {
            let (j, next) = self
                .peel(&rest, k)
                .expect("memo says this remainder splits");
            parts.push(self.generators[j].clone());
            rest = next;
        }
        parts.push(ExponentVector::from_vec_unchecked(rest));
        Some(GammaDecomposition { parts })
    }
}

/// The box `prod [0, lambda_i)` as inclusive bounds.
pub(crate) fn lambda_box(sys: &LambdaSystem) -> Result<Vec<u64>> {
    let bounds: Vec<u64> = sys.lambda().iter().map(|&l| l - 1).collect();
    box_size(&bounds)?;
    Ok(bounds)
}

/// Normality of `I(lambda)` from the finite box criterion: every `alpha <_pr lambda`
/// and `2 <= p < n` with `omega . alpha >= pL` must split into `p` elements of `Gamma`.
/// The witness is the first failure in lexicographic order of `alpha`, then `p`.
pub fn is_normal_lambda(sys: &LambdaSystem) -> Result<Verdict<DecompositionFailure>> {
    let n = sys.n() as u64;
    let bounds = lambda_box(sys)?;
    let mut splitter = GammaSplitter::new(sys)?;
    for alpha in BoxIter::new(&bounds) {
        for p in 2..n {
            if sys.weight(&alpha) < p as u128 * sys.lcm() as u128 {
                break;
            }
            if !splitter.splits(&alpha, p) {
                return Ok(Verdict::Fails(DecompositionFailure {
                    alpha: ExponentVector::from_vec_unchecked(alpha),
                    parts: p,
                }));
            }
        }
    }
    Ok(Verdict::Holds)
}

/// Bitset over `0..=bound`.
#[derive(Clone)]
struct Bits {
    words: Vec<u64>,
    bound: usize,
}

impl Bits {
    fn new(bound: usize) -> Self {
        Bits {
            words: vec![0; bound / 64 + 1],
            bound,
        }
    }

    fn get(&self, i: usize) -> bool {
        i <= self.bound && self.words[i / 64] >> (i % 64) & 1 == 1
    }

    fn set(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    /// `self |= other << shift`, truncated at the bound.
    fn or_shifted(&mut self, other: &Bits, shift: usize) {
        let (word_shift, bit_shift) = (shift / 64, shift % 64);
        for i in (word_shift..self.words.len()).rev() {
            let src = i - word_shift;
            let mut v = other.words[src] << bit_shift;
            if bit_shift > 0 && src > 0 {
                v |= other.words[src - 1] >> (64 - bit_shift);
            }
            self.words[i] |= v;
        }
        let tail = self.bound % 64 + 1;
        if tail < 64 {
            let last = self.words.len() - 1;
            self.words[last] &= (1u64 << tail) - 1;
        }
    }
}

/// Quasinormality of `Lambda = <1/lambda_1, .., 1/lambda_n>`, scaled by `L` to the
/// numerical semigroup `<omega>`.
///
/// Every `x = (omega . alpha) / L` with `alpha <_pr lambda` and every `2 <= p < n`
/// with `x >= p` must split into `p` members of `<omega>` each `>= L`. Values with a
/// representation reaching some `lambda_i` reduce to this box by peeling off 1.
pub fn is_quasinormal(sys: &LambdaSystem) -> Result<Verdict<SplitFailure>> {
    let n = sys.n() as u64;
    if n < 3 {
        return Ok(Verdict::Holds);
    }
    let bounds = lambda_box(sys)?;
    let top = sys.weight(&bounds);
    let top = usize::try_from(top).map_err(|_| Error::Overflow("quasinormality table"))?;
    let l = sys.lcm() as usize;

    let table = SemigroupTable::new(sys.omega(), top as u64)?;
    // sums[p-1]: values that are sums of p members of <omega>, each >= L
    let mut single = Bits::new(top);
    for s in l..=top {
        if table.contains(s as u64) {
            single.set(s);
        }
    }
    let mut sums = vec![single.clone()];
    for _ in 2..n {
        let prev = sums.last().expect("nonempty");
        let mut next = Bits::new(top);
        for s in l..=top {
            if single.get(s) {
                next.or_shifted(prev, s);
            }
        }
        sums.push(next);
    }

    for alpha in BoxIter::new(&bounds) {
        let s = sys.weight(&alpha) as usize;
        for p in 2..n {
            if s < p as usize * l {
                break;
            }
            if !sums[p as usize - 1].get(s) {
                return Ok(Verdict::Fails(SplitFailure {
                    value: s as u64,
                    parts: p,
                    alpha: ExponentVector::from_vec_unchecked(alpha),
                }));
            }
        }
    }
    Ok(Verdict::Holds)
}

/// `L + 1 in <omega_1, .., omega_n>`, a necessary condition for quasinormality.
pub fn lplus1_test(sys: &LambdaSystem) -> Result<bool> {
    let target = sys.lcm().checked_add(1).ok_or(Error::Overflow("L + 1"))?;
    semigroup_contains(sys.omega(), target)
}

fn check_len(sys: &LambdaSystem, alpha: &ExponentVector) -> Result<()> {
    if alpha.len() != sys.n() {
        return Err(Error::invalid(format!(
            "vector ({alpha}) has {} coordinates, expected {}",
            alpha.len(),
            sys.n()
        )));
    }
    Ok(())
}
