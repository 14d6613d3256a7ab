//! The lattice isomorphism between `lambda` and `lambda' = (.., lambda_n + ell)`:
//!
//! `f(u) = (u_1, .., u_{n-1}, u_n + u_{n+1} ell - sum_{i<n} (ell/lambda_i) u_i, u_{n+1})`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{is_normal_via_rees, minimal_generators, GeneratorType, ReesGenerator};
use crate::error::{Error, Result};
use crate::lattice::{ExponentVector, LambdaSystem};

/// A point `(u_1, .., u_n, u_{n+1})` of `Z^{n+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ReesVector(pub Vec<i64>);

impl ReesVector {
    pub fn from_generator(g: &ReesGenerator) -> Result<Self> {
        g.a.as_slice()
            .iter()
            .chain(std::iter::once(&g.d))
            .map(|&c| i64::try_from(c).map_err(|_| Error::Overflow("rees vector coordinate")))
            .collect::<Result<Vec<_>>>()
            .map(ReesVector)
    }

    /// The generator with this data, if every coordinate is nonnegative.
    pub fn to_generator(&self, sys: &LambdaSystem) -> Option<ReesGenerator> {
        let coords: Vec<u64> = self
            .0
            .iter()
            .map(|&c| u64::try_from(c).ok())
            .collect::<Option<_>>()?;
        let (&d, a) = coords.split_last()?;
        let a = ExponentVector::new(a.to_vec()).ok()?;
        let kind = super::classify(sys, &a, d)?;
        Some(ReesGenerator { a, d, kind })
    }
}

impl fmt::Display for ReesVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `u_{n+1} ell - sum_{i<n} (ell/lambda_i) u_i`.
fn shift(sys: &LambdaSystem, u: &[i64]) -> Result<i64> {
    let n = sys.n();
    if u.len() != n + 1 {
        return Err(Error::invalid(format!(
            "transfer needs {} coordinates, got {}",
            n + 1,
            u.len()
        )));
    }
    let overflow = || Error::Overflow("transfer map");
    let ell = i64::try_from(sys.ell()).map_err(|_| overflow())?;
    let mut acc = u[n].checked_mul(ell).ok_or_else(overflow)?;
    for (ui, &li) in u[..n - 1].iter().zip(sys.lambda()) {
        let c = i64::try_from(sys.ell() / li).map_err(|_| overflow())?;
        acc = acc
            .checked_sub(ui.checked_mul(c).ok_or_else(overflow)?)
            .ok_or_else(overflow)?;
    }
    Ok(acc)
}

/// `f(u)`.
pub fn transfer_forward(sys: &LambdaSystem, u: &ReesVector) -> Result<ReesVector> {
    let s = shift(sys, &u.0)?;
    let mut out = u.0.clone();
    let n = sys.n();
    out[n - 1] = out[n - 1]
        .checked_add(s)
        .ok_or(Error::Overflow("transfer map"))?;
    Ok(ReesVector(out))
}

/// `f^{-1}(u)`; `sys` is the base system, not `lambda'`.
pub fn transfer_backward(sys: &LambdaSystem, u: &ReesVector) -> Result<ReesVector> {
    let s = shift(sys, &u.0)?;
    let mut out = u.0.clone();
    let n = sys.n();
    out[n - 1] = out[n - 1]
        .checked_sub(s)
        .ok_or(Error::Overflow("transfer map"))?;
    Ok(ReesVector(out))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TransferPair {
    pub source: ReesGenerator,
    pub image: ReesGenerator,
}

/// Normality of `I(lambda)` and `I(lambda')` with the type-4 correspondence.
#[derive(Debug, Clone, Serialize)]
pub struct CongruenceReport {
    pub lambda: Vec<u64>,
    pub lambda_prime: Vec<u64>,
    pub ell: u64,
    pub normal: bool,
    pub normal_prime: bool,
    pub generators: Vec<ReesGenerator>,
    pub generators_prime: Vec<ReesGenerator>,
    /// Type-4 generators of `lambda` whose image is a type-4 generator of `lambda'`.
    pub pairs: Vec<TransferPair>,
    /// Images of type-4 generators that are not type-4 generators of `lambda'`.
    pub stray_images: Vec<ReesVector>,
    /// Type-4 generators of `lambda'` outside the image.
    pub unreached: Vec<ReesGenerator>,
}

impl CongruenceReport {
    pub fn last_at_least_ell(&self) -> bool {
        self.lambda.last().copied().unwrap_or(0) >= self.ell
    }

    /// `I(lambda')` normal implies `I(lambda)` normal.
    pub fn forward_implication_holds(&self) -> bool {
        !self.normal_prime || self.normal
    }

    pub fn injection_holds(&self) -> bool {
        self.stray_images.is_empty()
    }

    pub fn bijection_holds(&self) -> bool {
        self.injection_holds() && self.unreached.is_empty()
    }

    /// Everything the congruence theorem asserts for this `lambda`.
    pub fn consistent(&self) -> bool {
        self.forward_implication_holds()
            && self.injection_holds()
            && (!self.last_at_least_ell()
                || (self.normal == self.normal_prime && self.bijection_holds()))
    }
}

impl fmt::Display for CongruenceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
        let verdict = |b: bool| if b { "normal" } else { "not normal" };
        writeln!(
            f,
            "lambda  = ({})  {}",
            join(&self.lambda),
            verdict(self.normal)
        )?;
        writeln!(
            f,
            "lambda' = ({})  {}",
            join(&self.lambda_prime),
            verdict(self.normal_prime)
        )?;
        writeln!(f, "ell = {}", self.ell)?;
        writeln!(f, "generators of lambda:")?;
        for g in &self.generators {
            writeln!(f, "  {g}")?;
        }
        writeln!(f, "generators of lambda':")?;
        for g in &self.generators_prime {
            writeln!(f, "  {g}")?;
        }
        writeln!(f, "type-4 pairs:")?;
        for p in &self.pairs {
            writeln!(f, "  {}  ->  {}", p.source, p.image)?;
        }
        for v in &self.stray_images {
            writeln!(f, "  stray image {v}")?;
        }
        for g in &self.unreached {
            writeln!(f, "  unreached {g}")?;
        }
        writeln!(
            f,
            "forward implication: {}",
            if self.forward_implication_holds() {
                "ok"
            } else {
                "VIOLATED"
            }
        )?;
        writeln!(
            f,
            "injection: {}",
            if self.injection_holds() {
                "ok"
            } else {
                "VIOLATED"
            }
        )?;
        if self.last_at_least_ell() {
            writeln!(
                f,
                "lambda_n >= ell: equivalence {}, bijection {}",
                if self.normal == self.normal_prime {
                    "ok"
                } else {
                    "VIOLATED"
                },
                if self.bijection_holds() {
                    "ok"
                } else {
                    "VIOLATED"
                }
            )?;
        } else {
            writeln!(f, "lambda_n < ell: no converse asserted")?;
        }
        Ok(())
    }
}

/// Computes both tables and checks the type-4 correspondence under `f`.
pub fn verify_congruence(sys: &LambdaSystem) -> Result<CongruenceReport> {
    let prime = sys.prime()?;
    let generators = minimal_generators(sys)?;
    let generators_prime = minimal_generators(&prime)?;
    let mut targets: BTreeMap<ReesVector, &ReesGenerator> = BTreeMap::new();
    for g in generators_prime
        .iter()
        .filter(|g| g.kind == GeneratorType::MixedWithLast)
    {
        targets.insert(ReesVector::from_generator(g)?, g);
    }
    let mut pairs = Vec::new();
    let mut stray_images = Vec::new();
    for g in generators
        .iter()
        .filter(|g| g.kind == GeneratorType::MixedWithLast)
    {
        let image = transfer_forward(sys, &ReesVector::from_generator(g)?)?;
        match targets.remove(&image) {
            Some(t) => pairs.push(TransferPair {
                source: g.clone(),
                image: t.clone(),
            }),
            None => stray_images.push(image),
        }
    }
    let unreached = targets.into_values().cloned().collect();
    Ok(CongruenceReport {
        lambda: sys.lambda().to_vec(),
        lambda_prime: prime.lambda().to_vec(),
        ell: sys.ell(),
        normal: is_normal_via_rees(sys)?.holds(),
        normal_prime: is_normal_via_rees(&prime)?.holds(),
        generators,
        generators_prime,
        pairs,
        stray_images,
        unreached,
    })
}
