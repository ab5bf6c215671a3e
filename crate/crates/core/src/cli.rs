//! The `bosonic` command line.
//!
//! Exit status is 0 on success, 1 when a verification finds failures and
//! 2 for usage errors (bad arguments or inputs outside a formula's domain).

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::demazure::{apply_operator, p_polynomial, r_polynomial, tau, Operator};
use crate::error::{Error, Result};
use crate::lattice::{
    enumerate_states, partition_function, partition_function_by_enumeration,
    partition_function_transfer, Model, SystemSpec,
};
use crate::laurent::LaurentPoly;
use crate::spherical::{
    check_k_biinvariance, check_macdonald, check_sigma_methods, check_sigma_recursion,
    sigma_via_lattice, sigma_via_tau, HalfPowerValue,
};
use crate::verify::{
    check_color_merge, check_demeval, check_demtrain, check_demtrain_sweep, check_global_lifting,
    check_global_lifting_sweep, check_local_lifting, check_monostatic, check_operator_algebra,
    check_operator_random, check_symmetry_sweep, check_tau_properties, check_uncolored_pf,
    check_ybe_aux_with, check_ybe_colored_with, check_ybe_uncolored_with, Fault,
    VerificationReport,
};
use crate::weights::{
    fused_successors, uncolored_successors, Color, Family, HSpin, Spectral, USpin, VSpinC,
};
use crate::weyl::Permutation;

#[derive(Parser, Debug)]
#[command(
    name = "bosonic",
    version,
    about = "Colored bosonic vertex models, Hall-Littlewood polynomials and Iwahori-spherical functions"
)]
struct Cli {
    /// Worker threads for sweeps (0 uses every core).
    #[arg(long, global = true, env = "BOSONIC_JOBS", default_value_t = 1)]
    jobs: usize,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Hall-Littlewood P-polynomial of a partition.
    HlP(WeightArgs),
    /// Hall-Littlewood R-polynomial of a partition.
    HlR(WeightArgs),
    /// Partition function of a lattice system.
    PartitionFunction(PfArgs),
    /// The polynomial tau^lambda_{w,y}.
    Tau(TauArgs),
    /// Apply a Demazure-type operator to a polynomial.
    DemazureApply(DemArgs),
    /// Iwahori-spherical function sigma_w at varpi^lambda.
    Sigma(SigmaArgs),
    /// Run a verification sweep.
    Verify(VerifyArgs),
    /// List the nonzero vertex weights.
    DumpWeights(DumpArgs),
}

#[derive(Args, Debug)]
struct WeightArgs {
    /// Number of rows; must match the length of lambda when given.
    #[arg(long)]
    rank: Option<usize>,
    /// Comma-separated parts, e.g. 2,1,0.
    #[arg(long, allow_hyphen_values = true, value_parser = parse_ints)]
    lambda: Ints,
}

/// A comma-separated list of integers.
#[derive(Clone, Debug)]
struct Ints(Vec<i32>);

/// A comma-separated list of color indices.
#[derive(Clone, Debug)]
struct Flag(Vec<Color>);

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModelArg {
    Uncolored,
    Colored,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum PfMethod {
    Rows,
    Enumerate,
    Transfer,
}

#[derive(Args, Debug)]
struct PfArgs {
    #[command(flatten)]
    weight: WeightArgs,
    #[arg(long, value_enum, default_value = "uncolored")]
    model: ModelArg,
    #[arg(long, default_value = "R", value_parser = parse_family)]
    family: Family,
    /// Top boundary colors, left to right (1 is the largest color).
    #[arg(long, value_parser = parse_flag)]
    top_flag: Option<Flag>,
    /// Right boundary colors, top to bottom.
    #[arg(long, value_parser = parse_flag)]
    right_flag: Option<Flag>,
    #[arg(long, value_enum, default_value = "rows")]
    method: PfMethod,
    /// Also list up to this many states with their weights.
    #[arg(long)]
    states: Option<usize>,
}

#[derive(Args, Debug)]
struct TauArgs {
    #[command(flatten)]
    weight: WeightArgs,
    /// One-line notation, e.g. 2,1,3.
    #[arg(long, value_parser = parse_perm)]
    w: Permutation,
    #[arg(long, value_parser = parse_perm)]
    y: Permutation,
}

#[derive(Args, Debug)]
struct DemArgs {
    /// partial, partial-circ, dl, dl-inv, dl-word, omega or theta.
    #[arg(long)]
    op: String,
    #[arg(long)]
    rank: usize,
    /// Polynomial such as "z1^2*z2 - t*z3".
    #[arg(long, allow_hyphen_values = true)]
    poly: String,
    /// Simple reflection index for the simple operators.
    #[arg(long)]
    i: Option<usize>,
    #[arg(long, value_parser = parse_perm)]
    w: Option<Permutation>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SigmaMethod {
    Tau,
    Lattice,
}

#[derive(Args, Debug)]
struct SigmaArgs {
    #[command(flatten)]
    weight: WeightArgs,
    #[arg(long, value_parser = parse_perm)]
    w: Permutation,
    #[arg(long, value_enum, default_value = "tau")]
    method: SigmaMethod,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum CheckName {
    YbeUncolored,
    YbeColored,
    YbeAux,
    LocalLifting,
    ColorMerge,
    GlobalLifting,
    Demeval,
    UncoloredPf,
    Demtrain,
    Monostatic,
    Symmetry,
    Operators,
    OperatorsRandom,
    Tau,
    Sigma,
    SigmaRecursion,
    Macdonald,
    KBiinvariance,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    check: CheckName,
    #[arg(long, default_value = "R", value_parser = parse_family)]
    family: Family,
    /// Rank (number of colors for the colored checks).
    #[arg(long)]
    rank: Option<usize>,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_ints)]
    lambda: Option<Ints>,
    #[arg(long, value_parser = parse_flag)]
    top_flag: Option<Flag>,
    /// Vertical occupancy bound for uncolored and lifting sweeps.
    #[arg(long, default_value_t = 4)]
    nmax: u32,
    /// Vertical multiplicity bound for colored sweeps.
    #[arg(long, default_value_t = 3)]
    mmax: u32,
    /// Color of the monochrome column (all colors when omitted).
    #[arg(long)]
    k: Option<usize>,
    /// Simple reflection or merge index.
    #[arg(long)]
    i: Option<usize>,
    #[arg(long, value_parser = parse_perm)]
    w: Option<Permutation>,
    #[arg(long, value_parser = parse_perm)]
    y: Option<Permutation>,
    /// Bound on |lambda_i| or |mu_i| for operator, tau and sigma sweeps;
    /// bound on lambda_1 for partition sweeps.
    #[arg(long, default_value_t = 2)]
    bound: i32,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 100)]
    samples: usize,
    #[arg(long, default_value = "none", value_parser = parse_fault)]
    inject_fault: Fault,
}

#[derive(Args, Debug)]
struct DumpArgs {
    #[arg(long, value_enum, default_value = "uncolored")]
    model: ModelArg,
    #[arg(long, default_value = "R", value_parser = parse_family)]
    family: Family,
    /// Number of colors for the colored model.
    #[arg(long, default_value_t = 2)]
    rank: usize,
    #[arg(long, default_value_t = 2)]
    nmax: u32,
}

fn parse_ints(s: &str) -> std::result::Result<Ints, String> {
    if s.trim().is_empty() {
        return Ok(Ints(Vec::new()));
    }
    s.split(',')
        .map(|p| p.trim().parse::<i32>().map_err(|e| format!("{p:?}: {e}")))
        .collect::<std::result::Result<_, _>>()
        .map(Ints)
}

fn parse_family(s: &str) -> std::result::Result<Family, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_fault(s: &str) -> std::result::Result<Fault, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_flag(s: &str) -> std::result::Result<Flag, String> {
    parse_ints(s)?
        .0
        .into_iter()
        .map(|k| {
            if k >= 1 {
                Ok(Color::new(k as usize))
            } else {
                Err(format!("color index {k} must be positive"))
            }
        })
        .collect::<std::result::Result<_, _>>()
        .map(Flag)
}

fn parse_perm(s: &str) -> std::result::Result<Permutation, String> {
    let v = parse_ints(s)?.0;
    if v.iter().any(|&x| x < 1) {
        return Err("permutation entries are 1-based".into());
    }
    Permutation::from_one_line(v.into_iter().map(|x| x as usize).collect())
        .map_err(|e| e.to_string())
}

impl WeightArgs {
    fn lambda(&self) -> Result<Vec<i32>> {
        if let Some(r) = self.rank {
            if r != self.lambda.0.len() {
                return Err(Error::RankMismatch {
                    left: r,
                    right: self.lambda.0.len(),
                });
            }
        }
        Ok(self.lambda.0.clone())
    }
}

enum Outcome {
    Value(serde_json::Value, String),
    Report(serde_json::Value, String, bool),
}

fn poly_json(f: &LaurentPoly) -> serde_json::Value {
    json!({"poly": f, "text": f.to_string()})
}

fn poly_outcome(f: &LaurentPoly) -> Outcome {
    Outcome::Value(poly_json(f), f.to_string())
}

fn half_outcome(v: &HalfPowerValue) -> Outcome {
    Outcome::Value(
        json!({"half_q_exponent": v.half_q_exponent, "poly": v.poly, "text": v.to_string()}),
        v.to_string(),
    )
}

fn report_outcome(rep: &VerificationReport, extra: Option<(&str, serde_json::Value)>) -> Outcome {
    let mut j = serde_json::to_value(rep).expect("report serialisation cannot fail");
    j["passed"] = json!(rep.passed());
    let mut text = rep.summary_line();
    for f in rep.failures.iter().take(5) {
        text.push_str(&format!("\n  {}: {} != {}", f.configuration, f.lhs, f.rhs));
    }
    if let Some((k, v)) = extra {
        text.push_str(&format!(
            "\n  {k}: {}",
            v.as_str()
                .map(str::to_string)
                .unwrap_or_else(|| v.to_string())
        ));
        j[k] = v;
    }
    Outcome::Report(j, text, rep.passed())
}

/// Runs the command line with the given arguments (including the program
/// name) and writes the result to `out`. Returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = write!(out, "{}", e.render());
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(cli.jobs)
        .build()
    {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(out, "error: {e}");
            return 2;
        }
    };
    match pool.install(|| dispatch(&cli.command)) {
        Ok(outcome) => {
            let (j, text, code) = match outcome {
                Outcome::Value(j, text) => (j, text, 0),
                Outcome::Report(j, text, passed) => (j, text, if passed { 0 } else { 1 }),
            };
            let _ = if cli.json {
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&j).expect("JSON output")
                )
            } else {
                writeln!(out, "{text}")
            };
            code
        }
        Err(e) => {
            let _ = writeln!(out, "error: {e}");
            2
        }
    }
}

/// Entry point for the binary: parses the process arguments and prints to
/// standard output.
pub fn main() -> i32 {
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    run(std::env::args_os(), &mut lock)
}

fn dispatch(cmd: &Command) -> Result<Outcome> {
    match cmd {
        Command::HlP(a) => Ok(poly_outcome(&p_polynomial(&a.lambda()?)?)),
        Command::HlR(a) => Ok(poly_outcome(&r_polynomial(&a.lambda()?)?)),
        Command::PartitionFunction(a) => run_partition_function(a),
        Command::Tau(a) => {
            let lambda = a.weight.lambda()?;
            for p in [&a.w, &a.y] {
                if p.rank() != lambda.len() {
                    return Err(Error::RankMismatch {
                        left: lambda.len(),
                        right: p.rank(),
                    });
                }
            }
            Ok(poly_outcome(&tau(&lambda, &a.w, &a.y)?))
        }
        Command::DemazureApply(a) => {
            let op: Operator = a.op.parse()?;
            let f = LaurentPoly::parse(a.rank, &a.poly)?;
            let rep = apply_operator(op, &f, a.i, a.w.as_ref())?;
            let text = rep.output.to_string();
            let mut j = serde_json::to_value(&rep).expect("serialisation cannot fail");
            j["text"] = json!(text);
            Ok(Outcome::Value(j, text))
        }
        Command::Sigma(a) => {
            let lambda = a.weight.lambda()?;
            let v = match a.method {
                SigmaMethod::Tau => sigma_via_tau(&lambda, &a.w)?,
                SigmaMethod::Lattice => sigma_via_lattice(&lambda, &a.w)?,
            };
            Ok(half_outcome(&v))
        }
        Command::Verify(a) => run_verify(a),
        Command::DumpWeights(a) => Ok(dump_weights(a)),
    }
}

fn run_partition_function(a: &PfArgs) -> Result<Outcome> {
    let lambda = a.weight.lambda()?;
    let r = lambda.len();
    let c0: Vec<Color> = (1..=r).map(Color::new).collect();
    let spec = match a.model {
        ModelArg::Uncolored => SystemSpec::uncolored(a.family, &lambda)?,
        ModelArg::Colored => SystemSpec::colored(
            a.family,
            &lambda,
            a.top_flag
                .clone()
                .map(|f| f.0)
                .unwrap_or_else(|| c0.clone()),
            a.right_flag.clone().map(|f| f.0).unwrap_or(c0),
        )?,
    };
    let z = match a.method {
        PfMethod::Rows => partition_function(&spec),
        PfMethod::Enumerate => partition_function_by_enumeration(&spec),
        PfMethod::Transfer => partition_function_transfer(&spec)?,
    };
    let mut j = poly_json(&z);
    let mut text = z.to_string();
    if let Some(limit) = a.states {
        let model = spec.model();
        let states: Vec<serde_json::Value> = enumerate_states(&spec)
            .take(limit)
            .map(|(s, w)| json!({"state": s.to_json(model), "weight": w.to_string()}))
            .collect();
        for s in &states {
            text.push_str(&format!("\n{}", s));
        }
        j["states"] = json!(states);
    }
    if spec.model() == Model::Colored {
        j["top_flag"] = json!(spec
            .top_flag()
            .iter()
            .map(|c| c.index())
            .collect::<Vec<_>>());
        j["right_flag"] = json!(spec
            .right_flag()
            .iter()
            .map(|c| c.index())
            .collect::<Vec<_>>());
    }
    Ok(Outcome::Value(j, text))
}

fn need<T: Clone>(x: &Option<T>, name: &str) -> Result<T> {
    x.clone()
        .ok_or_else(|| Error::InvalidSpec(format!("this check needs --{name}")))
}

fn run_verify(a: &VerifyArgs) -> Result<Outcome> {
    let rank = a.rank.or(a.lambda.as_ref().map(|l| l.0.len())).unwrap_or(3);
    let lambda = || -> Result<Vec<i32>> {
        let l = need(&a.lambda, "lambda")?.0;
        if l.len() != rank {
            return Err(Error::RankMismatch {
                left: rank,
                right: l.len(),
            });
        }
        Ok(l)
    };
    let c0: Vec<Color> = (1..=rank).map(Color::new).collect();
    let rep = match a.check {
        CheckName::YbeUncolored => check_ybe_uncolored_with(a.family, a.nmax, a.inject_fault),
        CheckName::YbeColored => check_ybe_colored_with(a.family, rank, a.mmax, a.inject_fault),
        CheckName::YbeAux => {
            let ks: Vec<usize> = a.k.map(|k| vec![k]).unwrap_or_else(|| (1..=rank).collect());
            let mut rep = VerificationReport::new(
                "ybe-aux",
                json!({"family": a.family, "colors": rank, "k": ks, "m_max": a.mmax, "fault": a.inject_fault}),
            );
            for k in ks {
                rep.absorb(check_ybe_aux_with(
                    a.family,
                    rank,
                    k,
                    a.mmax,
                    a.inject_fault,
                )?);
            }
            rep
        }
        CheckName::LocalLifting => check_local_lifting(rank, a.nmax),
        CheckName::ColorMerge => {
            let is: Vec<usize> = a.i.map(|i| vec![i]).unwrap_or_else(|| (1..rank).collect());
            let mut rep = VerificationReport::new(
                "color-merge",
                json!({"colors": rank, "i": is, "n_max": a.nmax}),
            );
            for i in is {
                rep.absorb(check_color_merge(rank, i, a.nmax)?);
            }
            rep
        }
        CheckName::GlobalLifting => match &a.lambda {
            Some(_) => check_global_lifting(
                a.family,
                &lambda()?,
                &a.top_flag.clone().map(|f| f.0).unwrap_or(c0),
            )?,
            None => check_global_lifting_sweep(a.family, rank, a.bound)?,
        },
        CheckName::Demeval => check_demeval(&lambda()?)?,
        CheckName::UncoloredPf => check_uncolored_pf(&lambda()?)?,
        CheckName::Demtrain => match (&a.y, a.i, &a.w) {
            (Some(y), Some(i), Some(w)) => check_demtrain(&lambda()?, y, i, w)?,
            _ => check_demtrain_sweep(&lambda()?)?,
        },
        CheckName::Monostatic => {
            let l = lambda()?;
            let flag = a.top_flag.clone().map(|f| f.0).unwrap_or(c0);
            let rep = check_monostatic(&l, &flag)?;
            let z = partition_function(&SystemSpec::colored(a.family, &l, flag.clone(), flag)?);
            return Ok(report_outcome(&rep, Some(("value", json!(z.to_string())))));
        }
        CheckName::Symmetry => check_symmetry_sweep(rank, a.bound)?,
        CheckName::Operators => check_operator_algebra(a.bound)?,
        CheckName::OperatorsRandom => check_operator_random(a.seed, a.samples)?,
        CheckName::Tau => check_tau_properties(rank, a.bound)?,
        CheckName::Sigma => check_sigma_methods(rank, a.bound)?,
        CheckName::SigmaRecursion => check_sigma_recursion(rank, a.bound)?,
        CheckName::Macdonald => check_macdonald(rank, a.bound)?,
        CheckName::KBiinvariance => check_k_biinvariance(&lambda()?)?,
    };
    Ok(report_outcome(&rep, None))
}

fn dump_weights(a: &DumpArgs) -> Outcome {
    let z = Spectral::new(1, 1);
    let mut rows = Vec::new();
    let mut text = Vec::new();
    match a.model {
        ModelArg::Uncolored => {
            for s in USpin::ALL {
                for b in 0..=a.nmax {
                    for (c, d, w) in uncolored_successors(a.family, s, b, z) {
                        text.push(format!("a={s} b={b} c={c} d={d}: {w}"));
                        rows.push(json!({"a": s, "b": b, "c": c, "d": d, "weight": w.to_string()}));
                    }
                }
            }
        }
        ModelArg::Colored => {
            for s in HSpin::all(a.rank) {
                for b in VSpinC::all_up_to(a.rank, a.nmax) {
                    for (c, d, w) in fused_successors(a.family, s, &b, z) {
                        text.push(format!("a={s} b={b} c={c} d={d}: {w}"));
                        rows.push(json!({"a": s, "b": b, "c": c, "d": d, "weight": w.to_string()}));
                    }
                }
            }
        }
    }
    Outcome::Value(
        json!({"family": a.family, "spectral_parameter": "z1", "vertices": rows}),
        text.join("\n"),
    )
}
