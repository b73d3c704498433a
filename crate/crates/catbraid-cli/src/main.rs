//! `catbraid`: braid group actions on zigzag complexes from the command line.
//!
//! Exit status: 0 when every check passes, 1 when a check fails, 2 on bad
//! input, 3 when a time budget ran out before a suite finished.

mod suites;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use anyhow::{bail, Context, Result};
use catbraid::complexes::ProjComplex;
use catbraid::coxeter::{DynkinSpec, WeylElement};
use catbraid::garside::{GarsideStructure, MixedNormalForm};
use catbraid::garside_dual::Orientation;
use catbraid::hom_algorithms::{Basis, HomEngine, LengthReport};
use catbraid::word::BraidWord;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use suites::{Report, RunOptions, Suite};

#[derive(Debug, Parser)]
#[command(name = "catbraid", version, about = "Braid group actions on complexes over zigzag algebras")]
struct Cli {
    /// Dynkin type: A<n>, D<n> or E6/E7/E8.
    #[arg(long = "type", global = true, default_value = "A3")]
    type_name: String,
    /// Orientation as 1-based arrows `i>j`, comma separated. Empty means every
    /// edge points from the smaller to the larger vertex.
    #[arg(long, global = true, default_value = "", allow_hyphen_values = true)]
    orientation: String,
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Sizes of the root system, Weyl group and interval.
    Info,
    /// Apply a braid word to a complex.
    Act {
        #[command(flatten)]
        word: WordArg,
        /// `sum` for the sum of all projectives, `P<i>`, or `C<root>` such
        /// as `C1,1,0` for a reflection complex.
        #[arg(long, default_value = "sum")]
        target: String,
        /// Read the complex from a JSON file instead.
        #[arg(long, conflicts_with = "target")]
        input: Option<PathBuf>,
    },
    /// Homological lengths of a braid.
    Length {
        #[command(flatten)]
        word: WordArg,
        #[arg(long, value_enum, default_value = "both")]
        basis: BasisArg,
    },
    /// Normal form recovered from the action.
    Nf {
        #[command(flatten)]
        word: WordArg,
        #[arg(long, value_enum, default_value = "both")]
        basis: BasisArg,
    },
    /// Monoid membership of a braid.
    Member {
        #[command(flatten)]
        word: WordArg,
        #[arg(long, value_enum)]
        monoid: Monoid,
    },
    /// Run a verification suite.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        /// Seed for the randomized suites.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Time limit in seconds.
        #[arg(long)]
        budget: Option<f64>,
        /// Number of random instances (suite specific default).
        #[arg(long)]
        count: Option<usize>,
    },
}

#[derive(Debug, clap::Args)]
struct WordArg {
    /// Braid word as signed 1-based letters, e.g. `1 -2 3`.
    #[arg(long, num_args = 0.., allow_negative_numbers = true, value_delimiter = ' ')]
    word: Vec<String>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum BasisArg {
    Standard,
    Dual,
    Both,
}

impl BasisArg {
    fn bases(self) -> Vec<Basis> {
        match self {
            BasisArg::Standard => vec![Basis::Standard],
            BasisArg::Dual => vec![Basis::Dual],
            BasisArg::Both => vec![Basis::Standard, Basis::Dual],
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Monoid {
    Positive,
    Negative,
    Bessis,
    DualPositive,
}

/// Validated settings shared by all subcommands.
struct CliConfig {
    spec: DynkinSpec,
    orientation: Orientation,
    json: bool,
}

impl CliConfig {
    fn from_cli(cli: &Cli) -> Result<Self> {
        let spec: DynkinSpec = cli.type_name.parse()?;
        let orientation = Orientation::parse(&spec, &cli.orientation)?;
        Ok(CliConfig { spec, orientation, json: cli.json })
    }

    fn engine(&self) -> HomEngine {
        HomEngine::new(&self.spec, &self.orientation)
    }

    fn word(&self, w: &WordArg) -> Result<BraidWord> {
        Ok(BraidWord::parse(&w.word.join(" "), self.spec.rank())?)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode> {
    let cfg = CliConfig::from_cli(cli)?;
    match &cli.command {
        Command::Info => info(&cfg),
        Command::Act { word, target, input } => act(&cfg, word, target, input.as_ref()),
        Command::Length { word, basis } => length(&cfg, word, *basis),
        Command::Nf { word, basis } => nf(&cfg, word, *basis),
        Command::Member { word, monoid } => member(&cfg, word, *monoid),
        Command::Verify { suite, seed, budget, count } => verify(&cfg, *suite, *seed, *budget, *count),
    }
}

fn one_based(word: &[usize]) -> Vec<usize> {
    word.iter().map(|i| i + 1).collect()
}

fn info(cfg: &CliConfig) -> Result<ExitCode> {
    let e = cfg.engine();
    let weyl = e.dual().weyl();
    let phi = weyl.roots().positive().len();
    let c_word = one_based(e.dual().choice().c_word());
    let interval = e.dual().lattice().len();
    if cfg.json {
        let v = json!({
            "type": cfg.spec.to_string(),
            "orientation": cfg.orientation.to_string(),
            "rank": cfg.spec.rank(),
            "positive_roots": phi,
            "weyl_order": cfg.spec.weyl_order().to_string(),
            "reflections": weyl.roots().reflections().len(),
            "coxeter_number": cfg.spec.coxeter_number(),
            "coxeter_element": c_word,
            "interval_size": interval,
        });
        println!("{}", serde_json::to_string_pretty(&v)?);
    } else {
        println!("type            {}", cfg.spec);
        println!("orientation     {}", cfg.orientation);
        println!("positive roots  {phi}");
        println!("|W|             {}", cfg.spec.weyl_order());
        println!("reflections     {}", weyl.roots().reflections().len());
        println!("coxeter number  {}", cfg.spec.coxeter_number());
        let c: Vec<String> = c_word.iter().map(|i| format!("s{i}")).collect();
        println!("coxeter element {}", c.join(" "));
        println!("interval size   {interval}");
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_target(e: &HomEngine, target: &str) -> Result<ProjComplex> {
    let n = e.spec().rank();
    let t = target.trim();
    if t.eq_ignore_ascii_case("sum") {
        return Ok(ProjComplex::all_projectives(n));
    }
    if let Some(rest) = t.strip_prefix(['P', 'p']) {
        let i: usize = rest.parse().with_context(|| format!("bad target `{t}`"))?;
        if i == 0 || i > n {
            bail!("vertex {i} out of range for rank {n}");
        }
        return Ok(ProjComplex::projective(i - 1));
    }
    if let Some(rest) = t.strip_prefix(['C', 'c']) {
        let root: Vec<i64> = rest
            .split(',')
            .map(|x| x.trim().parse::<i64>())
            .collect::<std::result::Result<_, _>>()
            .with_context(|| format!("bad root `{rest}`"))?;
        let r = e
            .root_complexes()
            .iter()
            .find(|r| r.root == root)
            .with_context(|| format!("{root:?} is not a positive root"))?;
        return Ok(r.complex.clone());
    }
    bail!("unknown target `{t}`: expected sum, P<i> or C<root>")
}

fn act(cfg: &CliConfig, w: &WordArg, target: &str, input: Option<&PathBuf>) -> Result<ExitCode> {
    let e = cfg.engine();
    let alg = e.action().algebra();
    let word = cfg.word(w)?;
    let x = match input {
        Some(path) => {
            let s = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            ProjComplex::from_json(&s, alg)?
        }
        None => parse_target(&e, target)?,
    };
    let y = e.action().apply_word(&x, &word);
    if cfg.json {
        println!("{}", y.to_json());
        return Ok(ExitCode::SUCCESS);
    }
    println!("summands ({}):", y.len());
    for s in y.summands() {
        println!(
            "  #{:<3} P{} hpos {:>3}  <{}> {{{}}}  level {} baric {}",
            s.id,
            s.vertex + 1,
            s.hpos,
            s.pshift,
            s.oshift,
            s.t_level(),
            s.baric_degree()
        );
    }
    let d = y.differential();
    println!("differential ({}):", d.len());
    for entry in d {
        let terms: Vec<String> = entry.terms.iter().map(|t| format!("{} {}", t.coeff, t.basis)).collect();
        println!("  #{} -> #{}: {}", entry.from, entry.to, terms.join(" + "));
    }
    let fmt = |s: Option<(i32, i32)>| s.map_or("empty".to_string(), |(a, b)| format!("[{a}, {b}]"));
    println!("t-support {}  baric support {}", fmt(y.t_support(alg)), fmt(y.baric_support(alg)));
    Ok(ExitCode::SUCCESS)
}

fn length(cfg: &CliConfig, w: &WordArg, basis: BasisArg) -> Result<ExitCode> {
    let e = cfg.engine();
    let word = cfg.word(w)?;
    let reports: Vec<LengthReport> = basis.bases().into_iter().map(|b| e.length(&word, b)).collect();
    if cfg.json {
        println!("{}", serde_json::to_string_pretty(&reports)?);
    } else {
        for r in reports {
            println!("{:<8} plus {:>3}  minus {:>3}  total {:>3}", r.basis.to_string(), r.plus, r.minus, r.total);
        }
    }
    Ok(ExitCode::SUCCESS)
}

/// Each factor as a braid word: a positive lift of a reduced word for
/// standard simples, a product of dual generators for dual simples.
fn factor_words(e: &HomEngine, factors: &[WeylElement], basis: Basis) -> Vec<BraidWord> {
    factors
        .iter()
        .map(|f| match basis {
            Basis::Standard => e.std().simple_word(f),
            Basis::Dual => e.dual().simple_word(f),
        })
        .collect()
}

fn nf_word(e: &HomEngine, nf: &MixedNormalForm, basis: Basis) -> BraidWord {
    match basis {
        Basis::Standard => nf.to_word(e.std()),
        Basis::Dual => nf.to_word(e.dual()),
    }
}

fn nf(cfg: &CliConfig, w: &WordArg, basis: BasisArg) -> Result<ExitCode> {
    let e = cfg.engine();
    let word = cfg.word(w)?;
    let mut out = Vec::new();
    let mut agree = true;
    for b in basis.bases() {
        let nf = e.hom_normal_form(&word, b);
        let matches = nf == e.oracle_normal_form(&word, b);
        agree &= matches;
        let negative = factor_words(&e, &nf.negative, b);
        let positive = factor_words(&e, &nf.positive, b);
        let reduced = nf_word(&e, &nf, b).free_reduce();
        if cfg.json {
            let signed = |fs: &[BraidWord]| fs.iter().map(BraidWord::to_signed).collect::<Vec<_>>();
            out.push(json!({
                "basis": b,
                "negative": signed(&negative),
                "positive": signed(&positive),
                "word": reduced.to_signed(),
                "matches_greedy": matches,
            }));
        } else {
            let show = |fs: &[BraidWord]| {
                if fs.is_empty() {
                    "-".to_string()
                } else {
                    fs.iter().map(|f| format!("[{f}]")).collect::<Vec<_>>().join(" ")
                }
            };
            println!("{b}:");
            println!("  negative {}", show(&negative));
            println!("  positive {}", show(&positive));
            println!("  word     {reduced}");
            if !matches {
                println!("  differs from the greedy normal form");
            }
        }
    }
    if cfg.json {
        println!("{}", serde_json::to_string_pretty(&out)?);
    }
    Ok(if agree { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn member(cfg: &CliConfig, w: &WordArg, monoid: Monoid) -> Result<ExitCode> {
    let e = cfg.engine();
    let word = cfg.word(w)?;
    let (name, v) = match monoid {
        Monoid::Positive => ("positive", e.member_std_positive(&word)),
        Monoid::Negative => ("negative", e.member_std_negative(&word)),
        Monoid::Bessis => ("bessis", e.is_bessis(&word)),
        Monoid::DualPositive => ("dual-positive", e.member_dual_positive(&word)),
    };
    if cfg.json {
        println!("{}", json!({ "word": word.to_signed(), "monoid": name, "member": v }));
    } else {
        println!("{v}");
    }
    Ok(ExitCode::SUCCESS)
}

fn verify(cfg: &CliConfig, suite: Suite, seed: u64, budget: Option<f64>, count: Option<usize>) -> Result<ExitCode> {
    let start = Instant::now();
    let deadline = match budget {
        Some(b) if !(b.is_finite() && b >= 0.0) => bail!("budget must be a nonnegative number of seconds"),
        Some(b) => Some(start + Duration::from_secs_f64(b)),
        None => None,
    };
    let e = cfg.engine();
    let report = suites::run(&e, suite, &RunOptions { seed, count, deadline });
    if cfg.json {
        println!("{}", serde_json::to_string_pretty(&report)?);
    } else {
        println!(
            "{} on {} ({}): {} checked, {} failed{} in {:.1}s",
            suite.name(),
            cfg.spec,
            cfg.orientation,
            report.checked(),
            report.failures().len(),
            if report.complete() { "" } else { ", budget exhausted" },
            start.elapsed().as_secs_f64()
        );
        if let Report::DigneGobet(r) = &report {
            if r.failures.is_empty() {
                println!("every dual simple is x·y⁻¹ with x, y simple");
            }
        }
    }
    if let Some(first) = report.failures().first() {
        eprintln!("first failure: {first}");
        return Ok(ExitCode::from(1));
    }
    Ok(if report.complete() { ExitCode::SUCCESS } else { ExitCode::from(3) })
}
