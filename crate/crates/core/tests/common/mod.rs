//! Shared corpora and property checks for the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use normideal::graded::WeightedGrading;
use normideal::lambda::{
    decompose_gamma, ideal_of_lambda, is_normal_lambda, is_quasinormal, lplus1_test,
};
use normideal::oracle::{
    decompose_exhaustive, default_scale_budget, np_contains_scaling,
    np_contains_scaling_with_budget, quasinormal_bounded, ScalingOutcome,
};
use normideal::rees::{
    condition_a, is_minimal_generator, is_normal_via_rees, verify_congruence, GeneratorType,
    ReesGenerator,
};
use normideal::{ExponentVector, LambdaSystem, MonomialIdeal};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn ev(c: &[u64]) -> ExponentVector {
    ExponentVector::new(c.to_vec()).unwrap()
}

pub fn sys(l: &[u64]) -> LambdaSystem {
    LambdaSystem::new(l).unwrap()
}

/// Every tuple in `[1, max]^n`.
pub fn tuples(n: usize, max: u64) -> Vec<Vec<u64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|p| {
                (1..=max).map(move |x| {
                    let mut v = p.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
    }
    out
}

/// Every point of `prod [0, bounds_i]`.
pub fn grid(bounds: &[u64]) -> Vec<Vec<u64>> {
    let mut out = vec![Vec::new()];
    for &b in bounds {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..=b).map(move |x| {
                    let mut v = p.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
    }
    out
}

/// The exhaustive scan: entries in `1..=8`, `n` in `{2, 3, 4}`.
pub fn lambda_scan() -> Vec<Vec<u64>> {
    (2..=4).flat_map(|n| tuples(n, 8)).collect()
}

pub fn random_ideal(rng: &mut ChaCha8Rng, n: usize, max_exp: u64) -> MonomialIdeal {
    let k = rng.gen_range(1..=4);
    let mut gens = Vec::new();
    while gens.len() < k {
        let g: Vec<u64> = (0..n).map(|_| rng.gen_range(0..=max_exp)).collect();
        if g.iter().any(|&c| c > 0) {
            gens.push(ev(&g));
        }
    }
    MonomialIdeal::from_generators(n, gens).unwrap()
}

/// Random ideals with `n <= 3` and exponents `<= 6`.
pub fn random_corpus(count: usize, seed: u64) -> Vec<MonomialIdeal> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| random_ideal(&mut rng, 1 + i % 3, 6))
        .collect()
}

/// Tally of checks and violations for one property.
#[derive(Debug, Default, Clone)]
pub struct Tally {
    pub checked: u64,
    pub skipped: u64,
    pub violations: Vec<String>,
}

impl Tally {
    pub fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.violations.len() < 20 {
            self.violations.push(what());
        } else if !ok {
            self.violations.push(String::new());
        }
    }

    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn summary(&self) -> String {
        let shown: Vec<&String> = self
            .violations
            .iter()
            .filter(|v| !v.is_empty())
            .take(3)
            .collect();
        if self.ok() {
            format!("{} checks, {} skipped", self.checked, self.skipped)
        } else {
            format!(
                "{} violations in {} checks: {:?}",
                self.violations.len(),
                self.checked,
                shown
            )
        }
    }
}

/// Whether `(a, d)` lies in the monoid generated by `gens`, for every point of the
/// box `prod [0, lambda_i) x [0, n)`, compared with (A).
pub fn rees_completeness(s: &LambdaSystem, gens: &[ReesGenerator]) -> bool {
    let n = s.n();
    let mut sides: Vec<usize> = s.lambda().iter().map(|&l| l as usize).collect();
    sides.push(n);
    let total: usize = sides.iter().product();
    let vectors: Vec<Vec<usize>> = gens
        .iter()
        .map(|g| g.row().iter().map(|&c| c as usize).collect())
        .filter(|v: &Vec<usize>| v.iter().zip(&sides).all(|(c, s)| c < s))
        .collect();
    let mut reach = vec![false; total];
    reach[0] = true;
    let mut point = vec![0usize; n + 1];
    for idx in 0..total {
        let mut rest = idx;
        for j in (0..=n).rev() {
            point[j] = rest % sides[j];
            rest /= sides[j];
        }
        if idx > 0 {
            reach[idx] = vectors.iter().any(|v| {
                if !v.iter().zip(&point).all(|(a, b)| a <= b) {
                    return false;
                }
                let mut k = 0;
                for j in 0..=n {
                    k = k * sides[j] + (point[j] - v[j]);
                }
                reach[k]
            });
        }
        let a: Vec<u64> = point[..n].iter().map(|&c| c as u64).collect();
        if reach[idx] != condition_a(s, &a, point[n] as u64) {
            return false;
        }
    }
    true
}

/// Results of all per-`lambda` properties on one scan.
#[derive(Debug, Default)]
pub struct ScanReport {
    pub lambdas: u64,
    pub criteria_agree: Tally,
    pub normal_quasi_l1: Tally,
    pub coprime_equivalence: Tally,
    pub gcd_bound: Tally,
    pub congruence: Tally,
    pub rees_structure: Tally,
    pub oracles: Tally,
}

/// Runs every per-`lambda` property on `lambdas`. `ideal_route` also runs the
/// closure-based normality test; `exhaustive` selects the `lambda` whose whole box
/// is checked against the exhaustive decomposition oracle.
pub fn run_scan(
    lambdas: &[Vec<u64>],
    ideal_route: bool,
    exhaustive: impl Fn(&[u64]) -> bool,
) -> ScanReport {
    let mut r = ScanReport::default();
    for l in lambdas {
        r.lambdas += 1;
        let s = sys(l);
        let n = s.n();
        let v_lambda = is_normal_lambda(&s).unwrap();
        let v_rees = is_normal_via_rees(&s).unwrap();
        let normal = v_lambda.holds();
        r.criteria_agree.check(normal == v_rees.holds(), || {
            format!("{l:?}: lambda vs rees")
        });
        if ideal_route {
            let v_ideal = ideal_of_lambda(&s).unwrap().is_normal().unwrap();
            r.criteria_agree.check(normal == v_ideal.holds(), || {
                format!("{l:?}: lambda vs ideal")
            });
        }

        let qn = is_quasinormal(&s).unwrap().holds();
        let l1 = lplus1_test(&s).unwrap();
        r.normal_quasi_l1.check(!normal || qn, || {
            format!("{l:?}: normal but not quasinormal")
        });
        r.normal_quasi_l1.check(!qn || l1, || {
            format!("{l:?}: quasinormal but L+1 test fails")
        });
        if s.pairwise_coprime() {
            r.coprime_equivalence.check(normal == qn, || {
                format!("{l:?}: coprime, normal != quasinormal")
            });
        }
        if s.gcd() + 2 > n as u64 {
            r.gcd_bound
                .check(normal, || format!("{l:?}: gcd > n-2 but not normal"));
        }

        let report = verify_congruence(&s).unwrap();
        r.congruence.check(report.forward_implication_holds(), || {
            format!("{l:?}: forward implication")
        });
        r.congruence
            .check(report.injection_holds(), || format!("{l:?}: injection"));
        for p in &report.pairs {
            let ok = is_minimal_generator(&s.prime().unwrap(), &p.image.a, p.image.d).unwrap()
                && p.image.d == p.source.d;
            r.congruence
                .check(ok, || format!("{l:?}: image {} not minimal", p.image));
        }
        if report.last_at_least_ell() {
            r.congruence.check(
                report.bijection_holds() && report.normal == report.normal_prime,
                || format!("{l:?}: bijection/equivalence"),
            );
        }

        let gens = &report.generators;
        rees_structure(&s, gens, &mut r.rees_structure);

        let q_oracle = quasinormal_bounded(&s).unwrap();
        r.oracles.check(q_oracle == qn, || {
            format!("{l:?}: quasinormal oracle disagrees")
        });
        if let Some(w) = v_lambda.witness() {
            let d = decompose_exhaustive(&s, &w.alpha, w.parts).unwrap();
            r.oracles
                .check(d.is_none(), || format!("{l:?}: witness decomposes"));
        }
        if exhaustive(l) {
            let bounds: Vec<u64> = s.lambda().iter().map(|&x| x - 1).collect();
            for alpha in grid(&bounds) {
                let alpha = ev(&alpha);
                for p in 2..n as u64 {
                    let fast = decompose_gamma(&s, &alpha, p).unwrap();
                    let slow = decompose_exhaustive(&s, &alpha, p).unwrap();
                    let valid = fast.as_ref().is_none_or(|d| {
                        d.sum() == alpha
                            && d.parts
                                .iter()
                                .all(|b| s.weight(b.as_slice()) >= s.lcm() as u128)
                    });
                    r.oracles
                        .check(fast.is_some() == slow.is_some() && valid, || {
                            format!("{l:?}: decomposition of {alpha} into {p}")
                        });
                }
            }
        }
    }
    r
}

fn rees_structure(s: &LambdaSystem, gens: &[ReesGenerator], t: &mut Tally) {
    let n = s.n();
    let l = s.lambda();
    for g in gens.iter().filter(|g| g.kind.is_mixed()) {
        let in_box = g.a.as_slice().iter().zip(l).all(|(a, m)| a < m);
        t.check(in_box && g.d >= 1 && (g.d as usize) < n, || {
            format!("{l:?}: {g} outside box or degree range")
        });
        if g.kind == GeneratorType::MixedWithLast {
            let ell = s.ell() as i128;
            let delta = g.d as i128 * ell
                - (0..n - 1)
                    .map(|i| (ell / l[i] as i128) * g.a[i] as i128)
                    .sum::<i128>();
            t.check(delta > 0, || format!("{l:?}: delta <= 0 for {g}"));
        }
    }
    let rows: BTreeSet<Vec<u64>> = gens.iter().map(|g| g.row()).collect();
    t.check(rows.len() == gens.len(), || {
        format!("{l:?}: duplicate generators")
    });
    t.check(rees_completeness(s, gens), || {
        format!("{l:?}: generators incomplete")
    });
    // at most one d per a among (A)+(B) points of the box
    let bounds: Vec<u64> = l.iter().map(|&x| x - 1).collect();
    for a in grid(&bounds) {
        let w = s.weight(&a);
        let degrees = (1..n as u64)
            .filter(|&d| {
                let need = d as u128 * s.lcm() as u128;
                w >= need
                    && a.iter()
                        .zip(s.omega())
                        .all(|(&ai, &wi)| ai == 0 || w - (wi as u128) < need)
            })
            .count();
        t.check(degrees <= 1, || format!("{l:?}: several degrees for {a:?}"));
    }
}

/// Properties of the random monomial-ideal corpus.
#[derive(Debug, Default)]
pub struct CorpusReport {
    pub ideals: u64,
    pub closure: Tally,
    pub power_extension: Tally,
    pub zariski: Tally,
    pub scaling: Tally,
    pub oracles: Tally,
}

pub fn run_corpus(corpus: &[MonomialIdeal], seed: u64) -> CorpusReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut r = CorpusReport::default();
    for ideal in corpus {
        r.ideals += 1;
        let n = ideal.n();
        let closure = ideal.integral_closure().unwrap();
        r.closure
            .check(closure.integral_closure().unwrap() == closure, || {
                format!("closure not idempotent: {:?}", ideal.generators())
            });
        r.closure.check(
            ideal.generators().iter().all(|g| closure.contains(g)),
            || format!("I not inside its closure: {:?}", ideal.generators()),
        );

        let normal = ideal.is_normal().unwrap().holds();
        if normal {
            let top = 2 * n as u64;
            let ext = ideal.powers_integrally_closed(n as u64..=top).unwrap();
            r.power_extension.check(ext.holds(), || {
                format!(
                    "normal but a power in n..2n is not closed: {:?}",
                    ideal.generators()
                )
            });
        }

        if n == 2 {
            let other = random_ideal(&mut rng, 2, 6).integral_closure().unwrap();
            let prod = closure.product(&other).unwrap();
            r.zariski.check(prod.is_integrally_closed().unwrap(), || {
                format!(
                    "product not closed: {:?} * {:?}",
                    closure.generators(),
                    other.generators()
                )
            });
        }

        let gamma: Vec<u64> = (0..n).map(|_| rng.gen_range(0..=3)).collect();
        let gamma = ev(&gamma);
        let scaled = ideal.scale_by_monomial(&gamma).unwrap();
        r.scaling.check(
            scaled.integral_closure().unwrap() == closure.scale_by_monomial(&gamma).unwrap(),
            || {
                format!(
                    "closure not equivariant: {:?} by {gamma}",
                    ideal.generators()
                )
            },
        );
        r.scaling.check(
            scaled.is_integrally_closed().unwrap() == ideal.is_integrally_closed().unwrap(),
            || format!("closedness not equivariant: {:?}", ideal.generators()),
        );
        r.scaling
            .check(scaled.is_normal().unwrap().holds() == normal, || {
                format!("normality not equivariant: {:?}", ideal.generators())
            });

        corpus_oracles(ideal, &closure, &mut rng, &mut r.oracles);
    }
    r
}

fn corpus_oracles(
    ideal: &MonomialIdeal,
    closure: &MonomialIdeal,
    rng: &mut ChaCha8Rng,
    t: &mut Tally,
) {
    let n = ideal.n();
    let np = ideal.newton_polyhedron().unwrap();
    let budget = default_scale_budget(ideal);
    let bounds: Vec<u64> = (0..n)
        .map(|i| ideal.generators().iter().map(|g| g[i]).max().unwrap() + 1)
        .collect();
    let samples: Vec<Vec<u64>> = (0..12)
        .map(|_| bounds.iter().map(|&b| rng.gen_range(0..=b)).collect())
        .collect();
    for alpha in samples {
        let alpha = ev(&alpha);
        for m in 1..=2u64 {
            let scaled: Vec<u64> = alpha.as_slice().iter().map(|&a| a * m).collect();
            let lp = ideal.np_contains(&ev(&scaled), m).unwrap();
            let hrep = np.contains(&scaled, m);
            t.check(lp == hrep, || format!("LP vs facets at {scaled:?}, m={m}"));
            let pow = ideal
                .power(m)
                .unwrap()
                .np_contains(&ev(&scaled), 1)
                .unwrap();
            t.check(lp == pow, || format!("m NP(I) vs NP(I^m) at {scaled:?}"));
            match np_contains_scaling_with_budget(ideal, &ev(&scaled), m, budget, 20_000).unwrap() {
                ScalingOutcome::Yes { .. } => {
                    t.check(lp, || format!("scaling says yes, LP says no at {scaled:?}"))
                }
                _ => t.skipped += 1,
            }
        }
        let in_closure = closure.contains(&alpha);
        t.check(in_closure == ideal.np_contains(&alpha, 1).unwrap(), || {
            format!("closure membership vs NP at {alpha}")
        });
        t.check(
            ideal.np_contains(&alpha, 1).unwrap() == closure.np_contains(&alpha, 1).unwrap(),
            || format!("NP(I) != NP(closure) at {alpha}"),
        );
    }
    for g in closure.generators() {
        match np_contains_scaling(ideal, g, 1, budget).unwrap() {
            ScalingOutcome::Yes { .. } => t.check(true, String::new),
            _ => t.skipped += 1,
        }
    }
}

/// Weighted gradings with weights `<= 6`, `n <= 3`.
pub fn weighted_corpus(count: usize, seed: u64) -> Vec<WeightedGrading> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let n = 1 + i % 3;
            let w: Vec<u64> = (0..n).map(|_| rng.gen_range(1..=6)).collect();
            WeightedGrading::new(&w).unwrap()
        })
        .collect()
}

/// Integral closedness of `A_{>=d}` for `d <= 3w`, and `closure(I^p) = A_{>=pkw}`
/// for `I = A_{>=kw}`, `p <= 3`.
pub fn run_weighted(corpus: &[WeightedGrading], seed: u64) -> Tally {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut t = Tally::default();
    for g in corpus {
        let w = g.w();
        for _ in 0..3 {
            let d = rng.gen_range(1..=3 * w);
            let ideal = g.ideal_at_least(d).unwrap();
            t.check(ideal.is_integrally_closed().unwrap(), || {
                format!("A_>={d} not closed for weights {:?}", g.weights())
            });
        }
        let k = rng.gen_range(1..=2);
        for p in 1..=3 {
            let c = g.verify_power_equality(k, p).unwrap();
            t.check(c.closure_equal, || {
                format!(
                    "closure(I^{p}) != A_>=pkw for weights {:?}, k={k}",
                    g.weights()
                )
            });
        }
        let faridi = g.faridi_check(k).unwrap();
        if faridi.is_normal() {
            let ideal = g.ideal_at_least(k * w).unwrap();
            t.check(ideal.is_normal().unwrap().holds(), || {
                format!(
                    "power criterion says normal but ideal is not: {:?}",
                    g.weights()
                )
            });
        }
    }
    t
}
