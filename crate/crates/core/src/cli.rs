//! Command-line front end.
//!
//! Exit codes: 0 success, 1 a verification failed, 2 usage error.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::json;

use crate::colored_perm::{enumerate_group, group_order, Permutation, DEFAULT_ENUMERATION_LIMIT};
use crate::descent_basis::{coinvariant_image, decode, gs_element, negative_descent_basis};
use crate::error::{Error, Result};
use crate::groebner::{buchberger, remainder, standard_monomials, BuchbergerOptions};
use crate::ideals::{combined_ideal, predicted_lt_ideal, ParamsJson};
use crate::series::{
    numerator_from_monomials, numerator_negative, verify_with_numerator, IdentityParams,
    DEFAULT_TRUNCATION,
};
use crate::subset_poly::{Monomial, Polynomial, SubsetRing};
use crate::{Basis, Rational};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "cubequot",
    version,
    about = "Groebner bases and descent bases for colored cube quotients"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    /// Table of group elements with their statistics and basis monomials.
    Stats(CommonArgs),
    /// Reduced Groebner basis of the colored invariant ideal.
    Gb(CommonArgs),
    /// Compare the leading-term ideal with the predicted generators.
    VerifyLt(CommonArgs),
    /// Compare the standard monomials with the negative descent basis.
    VerifyBasis(CommonArgs),
    /// Check the Euler-Mahonian identity up to t^trunc.
    VerifyHilbert(CommonArgs),
    /// Dimension of the quotient.
    Dim(CommonArgs),
    /// Images of the descent monomials in the coinvariant algebra.
    Phi(CommonArgs),
}

#[derive(Args, Debug, Clone, Copy, PartialEq, Eq)]
pub struct CommonArgs {
    /// Number of colors.
    #[arg(long, default_value_t = 1)]
    pub r: u32,
    /// Rank of the symmetric group.
    #[arg(long)]
    pub n: usize,
    /// Truncation order in t.
    #[arg(long = "trunc", default_value_t = DEFAULT_TRUNCATION)]
    pub trunc: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Maximum number of group elements to enumerate.
    #[arg(long, default_value_t = DEFAULT_ENUMERATION_LIMIT)]
    pub limit: u128,
    /// Disable the Buchberger pair criteria.
    #[arg(long)]
    pub no_criteria: bool,
    /// Seed for randomized spot checks.
    #[arg(long)]
    pub seed: Option<u64>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

/// A validated invocation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunConfig {
    pub command: Command,
    pub r: u32,
    pub n: usize,
    pub trunc: usize,
    pub format: Format,
    pub limit: u128,
    pub options: BuchbergerOptions,
    pub seed: Option<u64>,
}

impl RunConfig {
    pub fn new(command: Command) -> Result<Self> {
        let a = match command {
            Command::Stats(a)
            | Command::Gb(a)
            | Command::VerifyLt(a)
            | Command::VerifyBasis(a)
            | Command::VerifyHilbert(a)
            | Command::Dim(a)
            | Command::Phi(a) => a,
        };
        if a.r < 1 {
            return Err(Error::InvalidParameter("--r must be at least 1".into()));
        }
        if a.n < 1 || a.n > SubsetRing::MAX_N {
            return Err(Error::InvalidParameter(format!(
                "--n must lie in 1..={}",
                SubsetRing::MAX_N
            )));
        }
        if a.limit < 1 {
            return Err(Error::InvalidParameter("--limit must be at least 1".into()));
        }
        Ok(RunConfig {
            command,
            r: a.r,
            n: a.n,
            trunc: a.trunc,
            format: a.format,
            limit: a.limit,
            options: BuchbergerOptions {
                criteria: !a.no_criteria,
            },
            seed: a.seed,
        })
    }

    fn params(&self) -> ParamsJson {
        ParamsJson {
            r: self.r,
            n: self.n,
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let config = match RunConfig::new(cli.command) {
        Ok(c) => c,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            let _ = writeln!(err, "usage: cubequot <COMMAND> --n <N> [--r <R>] [OPTIONS]");
            return EXIT_USAGE;
        }
    };
    match execute(&config, out) {
        Ok(true) => EXIT_OK,
        Ok(false) => EXIT_FAILED,
        Err(Error::Output {
            kind: std::io::ErrorKind::BrokenPipe,
            ..
        }) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::InvalidParameter(_) | Error::SizeLimit { .. } | Error::Parse(_) => {
                    EXIT_USAGE
                }
                _ => EXIT_FAILED,
            }
        }
    }
}

/// Runs a validated command; `Ok(false)` means a verification failed.
pub fn execute(config: &RunConfig, out: &mut dyn Write) -> Result<bool> {
    let out = &mut Output {
        out,
        format: config.format,
    };
    match config.command {
        Command::Stats(_) => cmd_stats(config, out),
        Command::Gb(_) => cmd_gb(config, out),
        Command::VerifyLt(_) => cmd_verify_lt(config, out),
        Command::VerifyBasis(_) => cmd_verify_basis(config, out),
        Command::VerifyHilbert(_) => cmd_verify_hilbert(config, out),
        Command::Dim(_) => cmd_dim(config, out),
        Command::Phi(_) => cmd_phi(config, out),
    }
}

struct Output<'a> {
    out: &'a mut dyn Write,
    format: Format,
}

impl Output<'_> {
    fn line(&mut self, s: &str) -> Result<()> {
        writeln!(self.out, "{s}").map_err(io_error)
    }

    fn json<T: Serialize>(&mut self, v: &T) -> Result<()> {
        let s = serde_json::to_string_pretty(v).map_err(|e| Error::Parse(e.to_string()))?;
        self.line(&s)
    }

    fn table(&mut self, header: &[&str], rows: &[Vec<String>]) -> Result<()> {
        let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
        for row in rows {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.chars().count());
            }
        }
        let fmt_row = |cells: Vec<&str>| {
            cells
                .iter()
                .zip(&widths)
                .map(|(c, &w)| format!("{c:<w$}"))
                .collect::<Vec<_>>()
                .join("  ")
                .trim_end()
                .to_string()
        };
        self.line(&fmt_row(header.to_vec()))?;
        for row in rows {
            self.line(&fmt_row(row.iter().map(String::as_str).collect()))?;
        }
        Ok(())
    }
}

fn io_error(e: std::io::Error) -> Error {
    Error::Output {
        kind: e.kind(),
        message: e.to_string(),
    }
}

fn ring(config: &RunConfig) -> Result<SubsetRing> {
    SubsetRing::new(config.n)
}

fn compute_gb(config: &RunConfig) -> Result<Basis> {
    let gens = combined_ideal::<Rational>(config.r, config.n)?;
    buchberger(&gens, config.options)
}

fn cmd_stats(config: &RunConfig, out: &mut Output) -> Result<bool> {
    let ring = ring(config)?;
    let mut rows = Vec::new();
    for g in enumerate_group(config.r, config.n, config.limit)? {
        let pair = g.decompose();
        let mono = crate::descent_basis::nd_element(&ring, &pair, config.r)?;
        let bd = ring.bidegree(&mono);
        rows.push((g, pair, mono, bd));
    }
    match out.format {
        Format::Json => {
            let items: Vec<_> = rows
                .iter()
                .map(|(g, pair, mono, bd)| {
                    json!({
                        "element": g.to_string(),
                        "sigma": pair.sigma.values(),
                        "x": pair.x,
                        "monomial": ring.format_monomial(mono),
                        "bidegree": [bd.tdeg, bd.qdeg],
                        "ndes": g.ndes(),
                        "nmajor": g.nmajor(),
                    })
                })
                .collect();
            out.json(&json!({ "params": config.params(), "elements": items }))?;
        }
        Format::Text => {
            let table: Vec<Vec<String>> = rows
                .iter()
                .map(|(g, pair, mono, bd)| {
                    vec![
                        g.to_string(),
                        pair.to_string(),
                        ring.format_monomial(mono),
                        format!("({},{})", bd.tdeg, bd.qdeg),
                        format!("({},{})", g.ndes(), g.nmajor()),
                    ]
                })
                .collect();
            out.table(
                &[
                    "element",
                    "(sigma,X)",
                    "monomial",
                    "bidegree",
                    "(ndes,nmajor)",
                ],
                &table,
            )?;
        }
    }
    Ok(rows
        .iter()
        .all(|(g, _, _, bd)| (bd.tdeg as usize, bd.qdeg as usize) == (g.ndes(), g.nmajor())))
}

/// Random combinations `sum c_i m_i g_i` of the generators must reduce to 0.
fn membership_spot_check(
    config: &RunConfig,
    gb: &Basis,
    seed: u64,
    trials: usize,
) -> Result<usize> {
    let gens = combined_ideal::<Rational>(config.r, config.n)?;
    let vars = gb.ring.num_vars() as u32;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = 0;
    for _ in 0..trials {
        let mut f = Polynomial::<Rational>::zero();
        for _ in 0..rng.gen_range(1..=3) {
            let g = &gens.gens[rng.gen_range(0..gens.gens.len())];
            let m = Monomial::from_exponents(
                (0..rng.gen_range(0..=2)).map(|_| (rng.gen_range(0..vars), rng.gen_range(1..=2))),
            );
            let c = Rational::new(
                rng.gen_range(-9i64..=9).into(),
                rng.gen_range(1i64..=5).into(),
            );
            f = f.add_mul_term(&c, &m, g);
        }
        if !remainder(&f, &gb.basis).is_zero() {
            failures += 1;
        }
    }
    Ok(failures)
}

fn cmd_gb(config: &RunConfig, out: &mut Output) -> Result<bool> {
    let gb = compute_gb(config)?;
    let check = match config.seed {
        Some(seed) => Some((seed, membership_spot_check(config, &gb, seed, 32)?)),
        None => None,
    };
    match out.format {
        Format::Json => {
            let mut v =
                serde_json::to_value(gb.to_json()).map_err(|e| Error::Parse(e.to_string()))?;
            if let Some((seed, failures)) = check {
                v["spot_check"] = json!({ "seed": seed, "trials": 32, "failures": failures });
            }
            out.json(&v)?;
        }
        Format::Text => {
            out.line(&format!(
                "reduced Groebner basis of J_{{{},{}}}: {} elements",
                config.r,
                config.n,
                gb.basis.len()
            ))?;
            for p in &gb.basis {
                out.line(&gb.ring.format_polynomial(p))?;
            }
            let s = gb.stats;
            out.line(&format!(
                "pairs_considered={} criterion1_skips={} criterion2_skips={} reductions_to_zero={}",
                s.pairs_considered, s.criterion1_skips, s.criterion2_skips, s.reductions_to_zero
            ))?;
            if let Some((seed, failures)) = check {
                out.line(&format!(
                    "spot check seed={seed}: {failures} of 32 combinations failed to reduce"
                ))?;
            }
        }
    }
    Ok(check.is_none_or(|(_, f)| f == 0))
}

fn cmd_verify_lt(config: &RunConfig, out: &mut Output) -> Result<bool> {
    let gb = compute_gb(config)?;
    let computed = gb.lt_ideal();
    let predicted = predicted_lt_ideal(config.r, config.n)?;
    let ring = &gb.ring;
    let fmt = |ms: Vec<&Monomial>| {
        ms.into_iter()
            .map(|m| ring.format_monomial(m))
            .collect::<Vec<_>>()
    };
    let missing = fmt(predicted
        .min_gens()
        .iter()
        .filter(|m| !computed.min_gens().contains(m))
        .collect());
    let extra = fmt(computed
        .min_gens()
        .iter()
        .filter(|m| !predicted.min_gens().contains(m))
        .collect());
    let holds = computed == predicted;
    let matched = computed.min_gens().len() - extra.len();
    match out.format {
        Format::Json => out.json(&json!({
            "params": config.params(),
            "holds": holds,
            "matched": matched,
            "computed": fmt(computed.min_gens().iter().collect()),
            "missing": missing,
            "extra": extra,
        }))?,
        Format::Text => {
            out.line(&format!(
                "leading-term ideal of J_{{{},{}}}: {} minimal generators, {} matched",
                config.r,
                config.n,
                computed.min_gens().len(),
                matched
            ))?;
            for m in &missing {
                out.line(&format!("missing  {m}"))?;
            }
            for m in &extra {
                out.line(&format!("extra    {m}"))?;
            }
            out.line(if holds { "verified" } else { "FAILED" })?;
        }
    }
    Ok(holds)
}

fn cmd_verify_basis(config: &RunConfig, out: &mut Output) -> Result<bool> {
    let gb = compute_gb(config)?;
    let ring = &gb.ring;
    let mut standard = standard_monomials(&gb.lt_ideal())?;
    let basis = negative_descent_basis(ring, config.r, config.limit)?;
    let mut descent: Vec<Monomial> = basis.iter().map(|x| x.monomial.clone()).collect();
    standard.sort();
    descent.sort();
    let sets_equal = standard == descent;
    let round_trip_failures = basis
        .iter()
        .filter(|x| decode(ring, &x.monomial, config.r).map_or(true, |p| p != x.pair))
        .count();
    let holds = sets_equal && round_trip_failures == 0;
    match out.format {
        Format::Json => out.json(&json!({
            "params": config.params(),
            "holds": holds,
            "standard_monomials": standard.len(),
            "descent_basis": descent.len(),
            "sets_equal": sets_equal,
            "round_trip_failures": round_trip_failures,
        }))?,
        Format::Text => {
            out.line(&format!(
                "standard monomials: {}  descent basis: {}  equal: {}  decode failures: {}",
                standard.len(),
                descent.len(),
                sets_equal,
                round_trip_failures
            ))?;
            out.line(if holds { "verified" } else { "FAILED" })?;
        }
    }
    Ok(holds)
}

fn cmd_verify_hilbert(config: &RunConfig, out: &mut Output) -> Result<bool> {
    let params = IdentityParams {
        r: config.r,
        n: config.n,
    };
    let kind = params.kind_default();
    let ring = ring(config)?;
    let from_group = numerator_negative::<Rational>(config.r, config.n, config.limit)?;
    let basis = negative_descent_basis(&ring, config.r, config.limit)?;
    let monos: Vec<Monomial> = basis.into_iter().map(|x| x.monomial).collect();
    let from_basis = numerator_from_monomials::<Rational>(&ring, &monos);
    let numerators_agree = from_group == from_basis;
    let report = verify_with_numerator(kind, params, &from_group, config.trunc);
    let holds = report.holds && numerators_agree;
    match out.format {
        Format::Json => {
            let mut v = serde_json::to_value(&report).map_err(|e| Error::Parse(e.to_string()))?;
            v["numerators_agree"] = json!(numerators_agree);
            out.json(&v)?;
        }
        Format::Text => {
            out.line(&format!(
                "{} identity r={} n={} up to t^{}: {} mismatches",
                kind,
                config.r,
                config.n,
                config.trunc,
                report.mismatches.len()
            ))?;
            for m in &report.mismatches {
                out.line(&format!("t^{} q^{}: lhs {} rhs {}", m.t, m.q, m.lhs, m.rhs))?;
            }
            out.line(&format!(
                "basis bidegrees match group statistics: {numerators_agree}"
            ))?;
            out.line(if holds { "verified" } else { "FAILED" })?;
        }
    }
    Ok(holds)
}

fn cmd_dim(config: &RunConfig, out: &mut Output) -> Result<bool> {
    let gb = compute_gb(config)?;
    let count = standard_monomials(&gb.lt_ideal())?.len() as u128;
    let expected = group_order(config.r, config.n);
    let holds = expected == Some(count);
    match out.format {
        Format::Json => out.json(&json!({
            "params": config.params(),
            "dimension": count,
            "group_order": expected.map(|e| e.to_string()),
            "holds": holds,
        }))?,
        Format::Text => out.line(&count.to_string())?,
    }
    Ok(holds)
}

/// Exponent vector of `prod_{i in Des(pi)} x_{pi(1)} ... x_{pi(i)}`.
pub fn classical_descent_exponents(pi: &Permutation) -> Vec<u32> {
    let n = pi.len();
    let mut exps = vec![0u32; n];
    for d in pi.descent_set() {
        for j in 1..=d {
            exps[pi.at(j) - 1] += 1;
        }
    }
    exps
}

fn cmd_phi(config: &RunConfig, out: &mut Output) -> Result<bool> {
    let ring = ring(config)?;
    let order = group_order(1, config.n).unwrap_or(u128::MAX);
    if order > config.limit {
        return Err(Error::SizeLimit {
            requested: order,
            limit: config.limit,
        });
    }
    let mut rows = Vec::new();
    let mut holds = true;
    for pi in Permutation::all(config.n) {
        let a = gs_element(&ring, &pi)?;
        let image = coinvariant_image(&ring, &a);
        let direct = classical_descent_exponents(&pi);
        holds &= image == direct;
        rows.push((pi, a, image, direct));
    }
    match out.format {
        Format::Json => {
            let items: Vec<_> = rows
                .iter()
                .map(|(pi, a, image, direct)| {
                    json!({
                        "pi": pi.values(),
                        "monomial": ring.format_monomial(a),
                        "image": image,
                        "classical": direct,
                    })
                })
                .collect();
            out.json(&json!({ "params": ParamsJson { r: 1, n: config.n }, "holds": holds, "rows": items }))?;
        }
        Format::Text => {
            let table: Vec<Vec<String>> = rows
                .iter()
                .map(|(pi, a, image, direct)| {
                    vec![
                        pi.to_string(),
                        ring.format_monomial(a),
                        x_monomial(image),
                        if image == direct { "ok" } else { "MISMATCH" }.to_string(),
                    ]
                })
                .collect();
            out.table(&["pi", "a_pi", "image", "check"], &table)?;
        }
    }
    Ok(holds)
}

fn x_monomial(exps: &[u32]) -> String {
    let factors: Vec<String> = exps
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| {
            if e == 1 {
                format!("x{}", i + 1)
            } else {
                format!("x{}^{e}", i + 1)
            }
        })
        .collect();
    if factors.is_empty() {
        "1".into()
    } else {
        factors.join("*")
    }
}
