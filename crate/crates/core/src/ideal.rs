//! Monomial ideals of `K[x_1, .., x_n]` described by their minimal generators.
//!
//! Text format: one generator per line, `n` whitespace-separated nonnegative
//! integers. Blank lines are skipped and `#` starts a comment.

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{minimalize, ExponentVector};
use crate::polyhedron::{np_feasible, NewtonPolyhedron};
use crate::verdict::Verdict;

/// A nonzero proper monomial ideal, stored as its antichain of minimal generators
/// in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct MonomialIdeal {
    n: usize,
    generators: Vec<ExponentVector>,
}

/// `alpha` lies in the integral closure of `I^power` but not in `I^power`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PowerWitness {
    pub power: u64,
    pub alpha: ExponentVector,
}

impl MonomialIdeal {
    /// The ideal generated by `raw`, keeping only its `<=_pr`-minimal elements.
    pub fn from_generators(n: usize, raw: Vec<ExponentVector>) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("need at least one variable"));
        }
        if raw.is_empty() {
            return Err(Error::invalid(
                "empty generator set (the zero ideal is not supported)",
            ));
        }
        if let Some(bad) = raw.iter().find(|g| g.len() != n) {
            return Err(Error::invalid(format!(
                "generator ({bad}) has {} coordinates, expected {n}",
                bad.len()
            )));
        }
        if raw.iter().any(|g| g.is_zero()) {
            return Err(Error::invalid("the unit ideal is not supported"));
        }
        Ok(MonomialIdeal {
            n,
            generators: minimalize(raw),
        })
    }

    pub(crate) fn from_minimal_unchecked(n: usize, generators: Vec<ExponentVector>) -> Self {
        debug_assert_eq!(minimalize(generators.clone()), generators);
        MonomialIdeal { n, generators }
    }

    /// Parses the line-oriented text format.
    pub fn parse(text: &str) -> Result<Self> {
        let mut rows = Vec::new();
        let mut n = None;
        for (idx, raw_line) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw_line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let coords = line
                .split_whitespace()
                .map(|tok| {
                    tok.parse::<u64>().map_err(|_| Error::Parse {
                        line: line_no,
                        message: format!("`{tok}` is not a nonnegative integer"),
                    })
                })
                .collect::<Result<Vec<u64>>>()?;
            match n {
                None => n = Some(coords.len()),
                Some(n) if n != coords.len() => {
                    return Err(Error::Parse {
                        line: line_no,
                        message: format!("expected {n} exponents, found {}", coords.len()),
                    })
                }
                Some(_) => {}
            }
            rows.push(ExponentVector::new(coords)?);
        }
        let n = n.ok_or_else(|| Error::invalid("no generators found"))?;
        Self::from_generators(n, rows)
    }

    /// Renders the generators in the text format, one per line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for g in &self.generators {
            let _ = writeln!(out, "{g}");
        }
        out
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[ExponentVector] {
        &self.generators
    }

    /// `alpha in Gamma(I)`.
    pub fn contains(&self, alpha: &ExponentVector) -> bool {
        self.generators.iter().any(|g| g.le_pr(alpha))
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        if self.n != other.n {
            return Err(Error::invalid("ideals live in different polynomial rings"));
        }
        let sums = self
            .generators
            .iter()
            .flat_map(|a| other.generators.iter().map(move |b| a.add(b)))
            .collect();
        Ok(MonomialIdeal::from_minimal_unchecked(
            self.n,
            minimalize(sums),
        ))
    }

    /// Minimal generators of `I^m`.
    pub fn power(&self, m: u64) -> Result<MonomialIdeal> {
        if m == 0 {
            return Err(Error::invalid(
                "I^0 is the unit ideal, which is not supported",
            ));
        }
        let mut acc = self.clone();
        for _ in 1..m {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// `x^gamma * I`.
    pub fn scale_by_monomial(&self, gamma: &ExponentVector) -> Result<MonomialIdeal> {
        self.check_len(gamma)?;
        let gens = self.generators.iter().map(|g| g.add(gamma)).collect();
        Ok(MonomialIdeal::from_minimal_unchecked(self.n, gens))
    }

    /// `alpha in m * NP(I) = NP(I^m)`, by exact LP feasibility.
    pub fn np_contains(&self, alpha: &ExponentVector, m: u64) -> Result<bool> {
        self.check_len(alpha)?;
        if m == 0 {
            return Err(Error::invalid("m must be positive"));
        }
        Ok(np_feasible(&self.generators, alpha.as_slice(), m).is_some())
    }

    pub fn newton_polyhedron(&self) -> Result<NewtonPolyhedron> {
        NewtonPolyhedron::new(&self.generators)
    }

    /// The integral closure, with `Gamma = NP(I) cap N^n`.
    pub fn integral_closure(&self) -> Result<MonomialIdeal> {
        let gens = self.newton_polyhedron()?.lattice_minimal_points(1)?;
        Ok(MonomialIdeal::from_minimal_unchecked(self.n, gens))
    }

    pub fn is_integrally_closed(&self) -> Result<bool> {
        Ok(self.integral_closure()?.generators == self.generators)
    }

    /// Checks whether `I^m` is integrally closed for each `m` in `powers`, returning
    /// the first failure. The witness is the lexicographically first lattice point
    /// of `NP(I^m)` outside `Gamma(I^m)`.
    pub fn powers_integrally_closed(
        &self,
        powers: impl IntoIterator<Item = u64>,
    ) -> Result<Verdict<PowerWitness>> {
        let np = self.newton_polyhedron()?;
        let mut membership = PowerMembership::new(&self.generators);
        for m in powers {
            if m == 0 {
                return Err(Error::invalid("powers must be positive"));
            }
            for alpha in np.lattice_minimal_points(m)? {
                if !membership.contains(alpha.as_slice(), m) {
                    return Ok(Verdict::Fails(PowerWitness { power: m, alpha }));
                }
            }
        }
        Ok(Verdict::Holds)
    }

    /// Normality test: `I` is normal iff `I^m` is integrally closed for
    /// `m = 1, .., max(1, n - 1)`.
    pub fn is_normal(&self) -> Result<Verdict<PowerWitness>> {
        let top = self.n.saturating_sub(1).max(1) as u64;
        self.powers_integrally_closed(1..=top)
    }

    fn check_len(&self, v: &ExponentVector) -> Result<()> {
        if v.len() != self.n {
            return Err(Error::invalid(format!(
                "vector ({v}) has {} coordinates, expected {}",
                v.len(),
                self.n
            )));
        }
        Ok(())
    }
}

/// Memoized test for `alpha in Gamma(I^m)`: `alpha` dominates a sum of `m` generators.
pub(crate) struct PowerMembership<'a> {
    generators: &'a [ExponentVector],
    memo: HashMap<(Vec<u64>, u64), bool>,
}

impl<'a> PowerMembership<'a> {
    pub(crate) fn new(generators: &'a [ExponentVector]) -> Self {
        PowerMembership {
            generators,
            memo: HashMap::new(),
        }
    }

    pub(crate) fn contains(&mut self, alpha: &[u64], m: u64) -> bool {
        if m == 0 {
            return true;
        }
        let below: Vec<&ExponentVector> = self
            .generators
            .iter()
            .filter(|g| crate::lattice::vector_le(g.as_slice(), alpha))
            .collect();
        if m == 1 {
            return !below.is_empty();
        }
        if let Some(&hit) = self.memo.get(&(alpha.to_vec(), m)) {
            return hit;
        }
        let mut found = false;
        for g in below {
            let rest: Vec<u64> = alpha.iter().zip(g.as_slice()).map(|(a, b)| a - b).collect();
            if self.contains(&rest, m - 1) {
                found = true;
                break;
            }
        }
        self.memo.insert((alpha.to_vec(), m), found);
        found
    }
}
