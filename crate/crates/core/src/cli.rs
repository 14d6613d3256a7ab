//! Command-line front end. Exit codes: 0 on success, 1 for a negative verdict
//! under `--check`, 2 for malformed input or a failed computation.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use crate::graded::{FaridiVerdict, WeightedGrading};
use crate::ideal::MonomialIdeal;
use crate::lambda::{ideal_of_lambda, is_normal_lambda, is_quasinormal, lplus1_test};
use crate::lattice::LambdaSystem;
use crate::rees::{
    is_normal_via_rees, minimal_generators, transfer_backward, transfer_forward, verify_congruence,
    GeneratorType, ReesTable, ReesVector,
};

#[derive(Debug, Parser)]
#[command(
    name = "normideal",
    version,
    about = "Normality of monomial ideals and of I(lambda)"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Minimal generators of the integral closure.
    Closure(IdealSource),
    /// Minimal generators of I^M.
    Power {
        #[command(flatten)]
        source: IdealSource,
        #[arg(short = 'm', value_name = "M")]
        m: u64,
    },
    /// Decide normality and print a witness when it fails.
    IsNormal {
        #[command(flatten)]
        source: IdealSource,
        /// Exit with 0 when normal and 1 otherwise.
        #[arg(long)]
        check: bool,
        /// Decision route; defaults to `lambda` for --lambda and `ideal` for --ideal.
        #[arg(long, value_enum)]
        method: Option<Method>,
    },
    /// Minimal generators of the normalized Rees algebra of I(lambda).
    Rees {
        #[arg(long, value_parser = parse_lambda)]
        lambda: LambdaArg,
        #[arg(long, value_enum, env = "NORMIDEAL_FORMAT", default_value = "table")]
        format: Format,
    },
    /// Quasinormality of <1/lambda_1, .., 1/lambda_n> and the L+1 test.
    Quasinormal {
        #[arg(long, value_parser = parse_lambda)]
        lambda: LambdaArg,
    },
    /// Apply the transfer map f (or its inverse) for lambda -> lambda'.
    Transfer {
        #[arg(long, value_parser = parse_lambda)]
        lambda: LambdaArg,
        #[arg(long)]
        inverse: bool,
        /// a_1,..,a_n,d; without it the type-4 generators are mapped.
        #[arg(long, value_parser = parse_vector, allow_hyphen_values = true)]
        vector: Option<IntList>,
        /// 1-based coordinate that plays the role of the last one.
        #[arg(long)]
        index: Option<usize>,
    },
    /// Normality of I(lambda) and I(lambda') and the type-4 correspondence.
    Congruence {
        #[arg(long, value_parser = parse_lambda)]
        lambda: LambdaArg,
    },
    /// Normality of I(fix, t) for t in a range, grouped by t mod lcm(fix).
    Scan {
        #[arg(long, value_parser = parse_lambda)]
        fix: LambdaArg,
        /// Inclusive range lo..hi.
        #[arg(long, value_parser = parse_range)]
        last: RangeArg,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, value_enum, default_value = "lambda")]
        method: Method,
    },
    /// Power checks for A_{>=kw} in a weighted polynomial ring.
    Faridi {
        #[arg(long, value_parser = parse_lambda)]
        weights: LambdaArg,
        #[arg(short = 'k')]
        k: u64,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct IdealSource {
    /// File with one generator per line.
    #[arg(long)]
    ideal: Option<PathBuf>,
    /// The ideal I(lambda), e.g. 2,3,7.
    #[arg(long, value_parser = parse_lambda)]
    lambda: Option<LambdaArg>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Ideal,
    Lambda,
    Rees,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Debug, Clone)]
struct LambdaArg(Vec<u64>);

#[derive(Debug, Clone)]
struct IntList(Vec<i64>);

#[derive(Debug, Clone, Copy)]
struct RangeArg(u64, u64);

fn parse_lambda(s: &str) -> Result<LambdaArg, String> {
    let values = s
        .split(',')
        .map(|t| {
            let t = t.trim();
            match t.parse::<u64>() {
                Ok(0) => Err("entries must be positive".to_string()),
                Ok(v) => Ok(v),
                Err(_) => Err(format!("`{t}` is not a positive integer")),
            }
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(LambdaArg(values))
}

fn parse_vector(s: &str) -> Result<IntList, String> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| format!("`{}` is not an integer", t.trim()))
        })
        .collect::<Result<Vec<_>, _>>()
        .map(IntList)
}

fn parse_range(s: &str) -> Result<RangeArg, String> {
    let (lo, hi) = s
        .split_once("..")
        .ok_or_else(|| "expected lo..hi".to_string())?;
    let hi = hi.strip_prefix('=').unwrap_or(hi);
    let lo: u64 = lo
        .trim()
        .parse()
        .map_err(|_| format!("bad lower bound `{lo}`"))?;
    let hi: u64 = hi
        .trim()
        .parse()
        .map_err(|_| format!("bad upper bound `{hi}`"))?;
    if lo == 0 || lo > hi {
        return Err("need 1 <= lo <= hi".into());
    }
    Ok(RangeArg(lo, hi))
}

/// Parses `args` (including the program name), runs the command, and returns the
/// exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    match execute(cli.command) {
        Ok((text, code)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            2
        }
    }
}

fn system(lambda: &LambdaArg) -> anyhow::Result<LambdaSystem> {
    LambdaSystem::new(&lambda.0).context("invalid lambda")
}

fn load_ideal(source: &IdealSource) -> anyhow::Result<MonomialIdeal> {
    if let Some(path) = &source.ideal {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("cannot read {}", path.display()))?;
        return MonomialIdeal::parse(&text).with_context(|| format!("in {}", path.display()));
    }
    let lambda = source.lambda.as_ref().expect("clap enforces one source");
    Ok(ideal_of_lambda(&system(lambda)?)?)
}

fn tuple<T: ToString>(v: &[T]) -> String {
    let parts: Vec<String> = v.iter().map(T::to_string).collect();
    format!("({})", parts.join(","))
}

fn execute(command: Command) -> anyhow::Result<(String, i32)> {
    let mut s = String::new();
    let mut code = 0;
    match command {
        Command::Closure(source) => {
            s = load_ideal(&source)?.integral_closure()?.to_text();
        }
        Command::Power { source, m } => {
            s = load_ideal(&source)?.power(m)?.to_text();
        }
        Command::IsNormal {
            source,
            check,
            method,
        } => {
            let normal = is_normal(&source, method, &mut s)?;
            if check && !normal {
                code = 1;
            }
        }
        Command::Rees { lambda, format } => {
            let table = ReesTable::compute(&system(&lambda)?)?;
            s = match format {
                Format::Table => table.to_table(),
                Format::Json => table.to_json() + "\n",
                Format::Csv => table.to_csv(),
            };
        }
        Command::Quasinormal { lambda } => {
            let sys = system(&lambda)?;
            match is_quasinormal(&sys)? {
                crate::Verdict::Holds => writeln!(s, "quasinormal")?,
                crate::Verdict::Fails(w) => writeln!(
                    s,
                    "not quasinormal: {}/{} (from alpha {}) is not a sum of {} members >= 1",
                    w.value,
                    sys.lcm(),
                    tuple(w.alpha.as_slice()),
                    w.parts
                )?,
            }
            let l1 = lplus1_test(&sys)?;
            writeln!(
                s,
                "L+1 test: {} {} <{}>",
                sys.lcm() + 1,
                if l1 { "in" } else { "not in" },
                tuple(sys.omega()).trim_matches(['(', ')'])
            )?;
        }
        Command::Transfer {
            lambda,
            inverse,
            vector,
            index,
        } => transfer(&lambda, inverse, vector, index, &mut s)?,
        Command::Congruence { lambda } => {
            write!(s, "{}", verify_congruence(&system(&lambda)?)?)?;
        }
        Command::Scan {
            fix,
            last,
            jobs,
            method,
        } => scan(&fix, last, jobs, method, &mut s)?,
        Command::Faridi { weights, k } => {
            let g = WeightedGrading::new(&weights.0)?;
            match g.faridi_check(k)? {
                FaridiVerdict::Normal { checked_powers } => writeln!(
                    s,
                    "normal: I^p = A_>=p*{} for p in {}",
                    k * g.w(),
                    tuple(&checked_powers)
                )?,
                FaridiVerdict::Undecided(m) => writeln!(
                    s,
                    "undecided: {} is in A_>={} but not in I^{}",
                    tuple(m.witness.as_slice()),
                    m.p * k * g.w(),
                    m.p
                )?,
            }
        }
    }
    Ok((s, code))
}

fn is_normal(source: &IdealSource, method: Option<Method>, s: &mut String) -> anyhow::Result<bool> {
    let method = method.unwrap_or(if source.lambda.is_some() {
        Method::Lambda
    } else {
        Method::Ideal
    });
    let sys = match (&source.lambda, method) {
        (_, Method::Ideal) => None,
        (Some(l), _) => Some(system(l)?),
        (None, _) => bail!("--method lambda and --method rees need --lambda"),
    };
    let normal = match (method, sys) {
        (Method::Ideal, _) | (_, None) => match load_ideal(source)?.is_normal()? {
            crate::Verdict::Holds => true,
            crate::Verdict::Fails(w) => {
                writeln!(s, "not normal")?;
                writeln!(
                    s,
                    "witness: {} is integral over I^{} but not in I^{}",
                    tuple(w.alpha.as_slice()),
                    w.power,
                    w.power
                )?;
                false
            }
        },
        (Method::Lambda, Some(sys)) => match is_normal_lambda(&sys)? {
            crate::Verdict::Holds => true,
            crate::Verdict::Fails(w) => {
                writeln!(s, "not normal")?;
                writeln!(
                    s,
                    "witness: {} has weight >= {}L but is not a sum of {} elements of Gamma",
                    tuple(w.alpha.as_slice()),
                    w.parts,
                    w.parts
                )?;
                false
            }
        },
        (Method::Rees, Some(sys)) => match is_normal_via_rees(&sys)? {
            crate::Verdict::Holds => true,
            crate::Verdict::Fails(g) => {
                writeln!(s, "not normal")?;
                writeln!(
                    s,
                    "witness: minimal Rees generator {} of type {} has d = {}",
                    tuple(&g.row()),
                    g.kind.number(),
                    g.d
                )?;
                false
            }
        },
    };
    if normal {
        writeln!(s, "normal")?;
    }
    Ok(normal)
}

/// Swaps coordinate `i` with the last one, in `lambda` and in a vector whose
/// final entry is `d`.
fn swap_to_last<T: Clone>(v: &[T], i: usize, n: usize) -> Vec<T> {
    let mut v = v.to_vec();
    v.swap(i, n - 1);
    v
}

fn transfer(
    lambda: &LambdaArg,
    inverse: bool,
    vector: Option<IntList>,
    index: Option<usize>,
    s: &mut String,
) -> anyhow::Result<()> {
    let n = lambda.0.len();
    let pivot = match index {
        None => n - 1,
        Some(i) if (1..=n).contains(&i) => i - 1,
        Some(i) => bail!("--index must be in 1..={n}, got {i}"),
    };
    let sys = system(&LambdaArg(swap_to_last(&lambda.0, pivot, n)))?;
    let apply = |v: &[i64]| -> anyhow::Result<Vec<i64>> {
        let u = ReesVector(swap_to_last(v, pivot, n));
        let image = if inverse {
            transfer_backward(&sys, &u)?
        } else {
            transfer_forward(&sys, &u)?
        };
        Ok(swap_to_last(&image.0, pivot, n))
    };
    match vector {
        Some(IntList(v)) => {
            if v.len() != n + 1 {
                bail!("--vector needs {} entries, got {}", n + 1, v.len());
            }
            writeln!(s, "{}", tuple(&apply(&v)?))?;
        }
        None => {
            let base = if inverse { sys.prime()? } else { sys.clone() };
            for g in minimal_generators(&base)?
                .iter()
                .filter(|g| g.kind == GeneratorType::MixedWithLast)
            {
                let v = swap_to_last(&ReesVector::from_generator(g)?.0, pivot, n);
                writeln!(s, "{} -> {}", tuple(&v), tuple(&apply(&v)?))?;
            }
        }
    }
    Ok(())
}

fn scan(
    fix: &LambdaArg,
    RangeArg(lo, hi): RangeArg,
    jobs: Option<usize>,
    method: Method,
    s: &mut String,
) -> anyhow::Result<()> {
    let ell = LambdaSystem::new(&fix.0)?.lcm();
    let decide = |t: u64| -> crate::Result<bool> {
        let mut lambda = fix.0.clone();
        lambda.push(t);
        let sys = LambdaSystem::new(&lambda)?;
        Ok(match method {
            Method::Lambda => is_normal_lambda(&sys)?.holds(),
            Method::Rees => is_normal_via_rees(&sys)?.holds(),
            Method::Ideal => ideal_of_lambda(&sys)?.is_normal()?.holds(),
        })
    };
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(j) = jobs {
        if j == 0 {
            bail!("--jobs must be positive");
        }
        builder = builder.num_threads(j);
    }
    let pool = builder.build().context("cannot start worker pool")?;
    let verdicts: Vec<(u64, bool)> = pool.install(|| {
        (lo..=hi)
            .into_par_iter()
            .map(|t| decide(t).map(|v| (t, v)))
            .collect::<crate::Result<Vec<_>>>()
    })?;
    let mut groups: BTreeMap<u64, Vec<(u64, bool)>> = BTreeMap::new();
    for (t, v) in verdicts {
        groups.entry(t % ell).or_default().push((t, v));
    }
    let prefix = fix
        .0
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(",");
    writeln!(s, "I({prefix},t) for t in {lo}..={hi}, ell = {ell}")?;
    let word = |v: bool| if v { "normal" } else { "not normal" };
    for (r, rows) in groups {
        let all = |want: bool| rows.iter().all(|&(_, v)| v == want);
        let summary = if all(true) {
            "all normal"
        } else if all(false) {
            "all not normal"
        } else {
            "mixed"
        };
        writeln!(s, "t = {r} mod {ell}: {summary}")?;
        for (t, v) in rows {
            writeln!(s, "  t = {t}: {}", word(v))?;
        }
    }
    Ok(())
}
