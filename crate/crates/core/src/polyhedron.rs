//! Newton polyhedra of monomial ideals.
//!
//! Two exact routes are provided. [`np_feasible`] decides a single membership
//! query `alpha in m * NP(I)` as a rational LP feasibility problem, solved with
//! a Phase-I simplex under Bland's rule. [`NewtonPolyhedron`] computes the
//! support hyperplanes of `NP(I)` once and answers bulk queries with integer
//! dot products; it is what the closure and normality scans use.

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, One, Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::{box_size, ceil_div, minimalize, BoxIter, ExponentVector, RationalNumber};

trait Exact:
    Clone + Integer + Signed + CheckedAdd + CheckedSub + CheckedMul + CheckedDiv + From<u64>
{
}
impl<T> Exact for T where
    T: Clone + Integer + Signed + CheckedAdd + CheckedSub + CheckedMul + CheckedDiv + From<u64>
{
}

/// Phase-I simplex for `{c >= 0, sum c = m, sum_j c_j beta_j <= alpha}`.
///
/// Outer `None` signals overflow of the coefficient type; inner `None` means infeasible.
#[allow(clippy::type_complexity)]
fn phase_one<T: Exact>(
    generators: &[&[u64]],
    alpha: &[u64],
    m: u64,
) -> Option<Option<Vec<Ratio<T>>>> {
    let k = generators.len();
    let n = alpha.len();
    let art = k + n;
    let cols = k + n + 1;
    let zero = Ratio::<T>::zero();
    let one = Ratio::<T>::one();
    let int = |v: u64| Ratio::from_integer(T::from(v));

    let mut rows: Vec<Vec<Ratio<T>>> = Vec::with_capacity(n + 1);
    let mut rhs: Vec<Ratio<T>> = Vec::with_capacity(n + 1);
    let mut row0 = vec![zero.clone(); cols];
    for c in row0.iter_mut().take(k) {
        *c = one.clone();
    }
    row0[art] = one.clone();
    rows.push(row0);
    rhs.push(int(m));
    for i in 0..n {
        let mut row = vec![zero.clone(); cols];
        for (j, g) in generators.iter().enumerate() {
            row[j] = int(g[i]);
        }
        row[k + i] = one.clone();
        rows.push(row);
        rhs.push(int(alpha[i]));
    }
    let mut basis: Vec<usize> = std::iter::once(art).chain(k..k + n).collect();

    while let Some(ra) = basis.iter().position(|&b| b == art) {
        if rhs[ra].is_zero() {
            break;
        }
        // Bland: the smallest column with negative reduced cost, i.e. positive entry in the artificial row.
        let Some(enter) = (0..cols).find(|&j| j != art && rows[ra][j].is_positive()) else {
            return Some(None);
        };
        let mut leave: Option<(usize, Ratio<T>)> = None;
        for r in 0..rows.len() {
            if !rows[r][enter].is_positive() {
                continue;
            }
            let ratio = rhs[r].checked_div(&rows[r][enter])?;
            let better = match &leave {
                None => true,
                Some((lr, best)) => ratio < *best || (ratio == *best && basis[r] < basis[*lr]),
            };
            if better {
                leave = Some((r, ratio));
            }
        }
        let (pr, _) = leave.expect("artificial row has a positive entry in the entering column");
        let pivot = rows[pr][enter].clone();
        for v in rows[pr].iter_mut() {
            *v = v.checked_div(&pivot)?;
        }
        rhs[pr] = rhs[pr].checked_div(&pivot)?;
        let (prow, prhs) = (rows[pr].clone(), rhs[pr].clone());
        for r in 0..rows.len() {
            if r == pr || rows[r][enter].is_zero() {
                continue;
            }
            let factor = rows[r][enter].clone();
            for (v, p) in rows[r].iter_mut().zip(&prow) {
                if !p.is_zero() {
                    *v = v.checked_sub(&factor.checked_mul(p)?)?;
                }
            }
            rhs[r] = rhs[r].checked_sub(&factor.checked_mul(&prhs)?)?;
        }
        basis[pr] = enter;
    }

    let mut c = vec![zero; k];
    for (r, &b) in basis.iter().enumerate() {
        if b < k {
            c[b] = rhs[r].clone();
        }
    }
    Some(Some(c))
}

/// Exact multipliers `c` with `c >= 0`, `sum c = m` and `sum c_j beta_j <=_pr alpha`, if any exist.
///
/// Tries 128-bit rationals first and falls back to arbitrary precision on overflow.
pub fn np_feasible(
    generators: &[ExponentVector],
    alpha: &[u64],
    m: u64,
) -> Option<Vec<RationalNumber>> {
    let cols: Vec<&[u64]> = generators.iter().map(|g| g.as_slice()).collect();
    if let Some(res) = phase_one::<i128>(&cols, alpha, m) {
        return res.map(|c| {
            c.into_iter()
                .map(|q| RationalNumber::new(BigInt::from(*q.numer()), BigInt::from(*q.denom())))
                .collect()
        });
    }
    phase_one::<BigInt>(&cols, alpha, m).expect("arbitrary precision does not overflow")
}

/// Indices of vertices found as minimizers of `c . g` for `c` in `{1, 2, 3, 5}^n`.
fn probe_minimizers(gens: &[ExponentVector]) -> Vec<usize> {
    let n = gens.first().map_or(0, |g| g.len());
    let levels = [1u64, 2, 3, 5];
    let mut hits = vec![false; gens.len()];
    let count = levels
        .len()
        .checked_pow(n as u32)
        .unwrap_or(usize::MAX)
        .min(1024);
    for code in 0..count {
        let mut rest = code;
        let c: Vec<u64> = (0..n)
            .map(|_| {
                let v = levels[rest % levels.len()];
                rest /= levels.len();
                v
            })
            .collect();
        let weights: Vec<u128> = gens
            .iter()
            .map(|g| crate::lattice::dot(&c, g.as_slice()))
            .collect();
        let Some(&best) = weights.iter().min() else {
            continue;
        };
        // The face cut out by c is the hull of the tied generators; its
        // lexicographic extremes are vertices.
        let tied = (0..gens.len()).filter(|&i| weights[i] == best);
        if let Some(i) = tied.clone().min_by_key(|&i| &gens[i]) {
            hits[i] = true;
        }
        if let Some(i) = tied.max_by_key(|&i| &gens[i]) {
            hits[i] = true;
        }
    }
    (0..gens.len()).filter(|&i| hits[i]).collect()
}

/// A support inequality `normal . x >= offset` of a Newton polyhedron, with `normal >= 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Facet {
    pub normal: Vec<u64>,
    pub offset: u128,
}

/// `NP(I) = conv(Gamma(I)) + R_>=^n` as its vertices and a complete list of support inequalities.
#[derive(Debug, Clone)]
pub struct NewtonPolyhedron {
    n: usize,
    vertices: Vec<ExponentVector>,
    facets: Vec<Facet>,
}

impl NewtonPolyhedron {
    /// Builds the polyhedron of the ideal generated by `generators` (all of length `n >= 1`).
    pub fn new(generators: &[ExponentVector]) -> Result<Self> {
        let first = generators
            .first()
            .ok_or_else(|| Error::invalid("Newton polyhedron of an empty generator set"))?;
        let n = first.len();
        let gens = minimalize(generators.to_vec());

        // A generator is a vertex unless it lies in NP of the others. Testing first
        // against the minimizers of a few positive functionals settles most cases
        // with a small LP.
        let probes = probe_minimizers(&gens);
        let mut vertices = Vec::with_capacity(gens.len());
        for (j, g) in gens.iter().enumerate() {
            if probes.contains(&j) {
                vertices.push(g.clone());
                continue;
            }
            let shortlist: Vec<ExponentVector> = probes
                .iter()
                .filter(|&&i| i != j)
                .map(|&i| gens[i].clone())
                .collect();
            if !shortlist.is_empty() && np_feasible(&shortlist, g.as_slice(), 1).is_some() {
                continue;
            }
            let others: Vec<ExponentVector> = gens
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != j)
                .map(|(_, h)| h.clone())
                .collect();
            if others.is_empty() || np_feasible(&others, g.as_slice(), 1).is_none() {
                vertices.push(g.clone());
            }
        }

        let mut facets = Vec::new();
        for z in 0..n {
            let take = n - z;
            if take > vertices.len() {
                continue;
            }
            for dirs in (0..n).combinations(z) {
                for subset in vertices.iter().combinations(take) {
                    let mut rows: Vec<Vec<i128>> = dirs
                        .iter()
                        .map(|&i| (0..n).map(|c| i128::from(c == i)).collect())
                        .collect();
                    let base = subset[0].as_slice();
                    for v in &subset[1..] {
                        rows.push(
                            v.as_slice()
                                .iter()
                                .zip(base)
                                .map(|(&a, &b)| a as i128 - b as i128)
                                .collect(),
                        );
                    }
                    if let Some(normal) = kernel_normal(&rows, n)? {
                        let offset = vertices
                            .iter()
                            .map(|v| crate::lattice::dot(&normal, v.as_slice()))
                            .min()
                            .expect("vertices are nonempty");
                        facets.push(Facet { normal, offset });
                    }
                }
            }
        }
        facets.sort();
        facets.dedup();
        Ok(NewtonPolyhedron {
            n,
            vertices,
            facets,
        })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> &[ExponentVector] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    /// `alpha in m * NP(I)`, which equals `NP(I^m)`.
    pub fn contains(&self, alpha: &[u64], m: u64) -> bool {
        self.facets
            .iter()
            .all(|f| crate::lattice::dot(&f.normal, alpha) >= m as u128 * f.offset)
    }

    /// The least `t` with `(prefix, t) in m * NP(I)`, or `None` if no such `t` exists.
    pub fn min_last_coordinate(&self, prefix: &[u64], m: u64) -> Option<u128> {
        let mut need: u128 = 0;
        for f in &self.facets {
            let partial = crate::lattice::dot(&f.normal[..self.n - 1], prefix);
            let target = m as u128 * f.offset;
            if partial >= target {
                continue;
            }
            let last = f.normal[self.n - 1] as u128;
            if last == 0 {
                return None;
            }
            need = need.max(ceil_div(target - partial, last));
        }
        Some(need)
    }

    /// Componentwise maximum of the vertices.
    pub fn vertex_bounds(&self) -> Vec<u64> {
        (0..self.n)
            .map(|i| self.vertices.iter().map(|v| v[i]).max().unwrap_or(0))
            .collect()
    }

    /// Minimal lattice points of `m * NP(I)`, i.e. the minimal generators of the
    /// integral closure of `I^m`, sorted lexicographically.
    ///
    /// A minimal point never exceeds `m * max_v v_i` in coordinate `i`, so the
    /// scan runs over prefixes of that box and solves for the last coordinate.
    pub fn lattice_minimal_points(&self, m: u64) -> Result<Vec<ExponentVector>> {
        let bounds: Vec<u64> = self
            .vertex_bounds()
            .iter()
            .map(|&b| b.checked_mul(m).ok_or(Error::Overflow("closure box")))
            .collect::<Result<_>>()?;
        box_size(&bounds[..self.n - 1])?;
        let mut out = Vec::new();
        for mut prefix in BoxIter::new(&bounds[..self.n - 1]) {
            if let Some(t) = self.min_last_coordinate(&prefix, m) {
                if t <= bounds[self.n - 1] as u128 {
                    prefix.push(t as u64);
                    out.push(ExponentVector::from_vec_unchecked(prefix));
                }
            }
        }
        Ok(minimalize(out))
    }
}

/// The primitive nonnegative normal spanning the kernel of `rows` ((n-1) x n), if the
/// kernel is one-dimensional and sign-definite.
fn kernel_normal(rows: &[Vec<i128>], n: usize) -> Result<Option<Vec<u64>>> {
    debug_assert_eq!(rows.len(), n - 1);
    let mut normal = Vec::with_capacity(n);
    for skip in 0..n {
        let minor: Vec<Vec<i128>> = rows
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != skip)
                    .map(|(_, &v)| v)
                    .collect()
            })
            .collect();
        let det = bareiss_det(minor).ok_or(Error::Overflow("facet normal"))?;
        normal.push(if skip % 2 == 0 { det } else { -det });
    }
    let positive = normal.iter().any(|&v| v > 0);
    let negative = normal.iter().any(|&v| v < 0);
    if positive == negative {
        // all zero (degenerate subset) or mixed signs (not a face of NP)
        return Ok(None);
    }
    let g = normal.iter().fold(0i128, |acc, &v| acc.gcd(&v));
    let sign = if negative { -1 } else { 1 };
    Ok(Some(
        normal
            .into_iter()
            .map(|v| u64::try_from(sign * v / g))
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| Error::Overflow("facet normal"))?,
    ))
}

/// Fraction-free Gaussian elimination; `None` on overflow.
fn bareiss_det(mut a: Vec<Vec<i128>>) -> Option<i128> {
    let size = a.len();
    if size == 0 {
        return Some(1);
    }
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..size {
        if a[k][k] == 0 {
            let Some(swap) = (k + 1..size).find(|&r| a[r][k] != 0) else {
                return Some(0);
            };
            a.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..size {
            for j in k + 1..size {
                let v = a[i][j]
                    .checked_mul(a[k][k])?
                    .checked_sub(a[i][k].checked_mul(a[k][j])?)?;
                a[i][j] = v / prev;
            }
        }
        prev = a[k][k];
    }
    Some(sign * a[size - 1][size - 1])
}
