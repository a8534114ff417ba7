use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use calab::campaign::commutant_campaign;
use calab::coverage::orbit_coverage;
use calab::gens::parse_map;
use calab::lacunary::lacunary_orbit;
use calab::report::opt_field;
use calab::witness::{p_lambda, power_prime, witness_suite};
use calab::{enumeration_cap, render, ExperimentConfig, Format, Report};
use calab_core::ca1d::{construct_table_hitting, BlockMap, HittingSource};
use calab_core::linca::{blockmap_to_poly, construct_linear_hitting, RingSpec, ShiftPolynomial};
use calab_core::mulca::{evaluate, mu_u, preimages, represents_check, MulSpec, RepresentsReport};
use calab_core::symcore::{format_symbols, parse_symbols, EventuallyPeriodicSeq, SequenceLiteral, Word};
use calab_core::Execution;
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

#[derive(Parser)]
#[command(name = "calab", version, about = "Exact experiments on semigroups of cellular automata")]
struct Cli {
    /// Run every check on one thread.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Default)]
struct Common {
    /// Plain key=value config file.
    #[arg(long)]
    config: Option<PathBuf>,
    /// json or csv; block-map verbs print CA1 text unless this is given.
    #[arg(long)]
    format: Option<String>,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Extra config override, repeatable.
    #[arg(long = "set", value_name = "KEY=VALUE")]
    set: Vec<String>,
}

impl Common {
    fn load(&self) -> Result<ExperimentConfig> {
        let mut cfg = match &self.config {
            Some(path) => ExperimentConfig::load(path)?,
            None => ExperimentConfig::new(),
        };
        for kv in &self.set {
            let (k, v) = kv.split_once('=').with_context(|| format!("--set expects KEY=VALUE, got {kv:?}"))?;
            cfg.set(k.trim(), v.trim());
        }
        Ok(cfg)
    }
}

/// Declares a verb whose flags override config keys of the same name.
macro_rules! verb {
    ($(#[$meta:meta])* $name:ident { $($(#[$fmeta:meta])* $field:ident => $key:literal),* $(,)? }) => {
        $(#[$meta])*
        #[derive(Args, Debug)]
        struct $name {
            #[command(flatten)]
            common: Common,
            $(
                $(#[$fmeta])*
                #[arg(long)]
                $field: Option<String>,
            )*
        }

        impl $name {
            fn config(&self) -> Result<ExperimentConfig> {
                #[allow(unused_mut)]
                let mut cfg = self.common.load()?;
                $(
                    if let Some(v) = &self.$field {
                        cfg.set($key, v.clone());
                    }
                )*
                Ok(cfg)
            }
        }
    };
}

verb!(CoverageArgs {
    /// Alphabet size.
    s => "s",
    /// Generator specs, e.g. "mu:2 sigma".
    gens => "gens",
    /// Seed sequence literal, e.g. "gen=champernowne" or "pre=1 cyc=0,1".
    seq => "seq",
    /// Window length.
    k => "k",
    /// Longest generator word.
    depth => "depth",
    /// Length of the seed prefix.
    prefix => "prefix",
});

verb!(CommutantArgs {
    s => "s",
    gens => "gens",
    /// Candidate radius.
    radius => "radius",
    /// Directory receiving one CA1 file per member.
    out_dir => "out_dir",
});

verb!(WitnessArgs {
    seed => "seed",
    /// Flip this table entry of μ_p in the power-prime witness.
    pp_sabotage => "pp_sabotage",
    /// Flip this table entry of the first linear map in the pΛ witness.
    pl_sabotage => "pl_sabotage",
    /// Flip this table entry of the product map in the unit-vector check.
    chr_sabotage => "chr_sabotage",
});

verb!(LacunaryArgs { p => "p", m => "m", terms => "terms", steps => "steps", limit_depth => "limit_depth" });

verb!(ComposeArgs {
    s => "s",
    /// Applied last.
    outer => "outer",
    /// Applied first.
    inner => "inner",
});

verb!(CommuteArgs { s => "s", left => "left", right => "right" });

verb!(MuArgs { s => "s", u => "u" });

verb!(EvalArgs {
    s => "s",
    /// Periodic literal, e.g. "pre=1 cyc=0,1".
    seq => "seq",
});

verb!(Poly2caArgs {
    /// mod:<s> or gf:<p>^<m>.
    ring => "ring",
    /// Comma-separated coefficients c_0,...,c_r.
    coeffs => "coeffs",
});

verb!(Ca2polyArgs { ring => "ring", map => "map" });

verb!(LinhitArgs { ring => "ring", seq => "seq", target => "target", kmax => "kmax" });

verb!(HitArgs { s => "s", seq => "seq", target => "target", prefix => "prefix" });

verb!(RepresentsArgs { s => "s", map => "map", u => "u", trials => "trials", seed => "seed" });

verb!(WitnessPmArgs { p => "p", m => "m", steps => "steps", prefix => "prefix", sabotage => "sabotage" });

verb!(WitnessPlambdaArgs { s => "s", p => "p", trials => "trials", seed => "seed", sabotage => "sabotage" });

#[derive(Subcommand)]
enum Command {
    /// Window coverage of orbits of a seed prefix.
    Coverage(CoverageArgs),
    /// Enumerate and classify the bounded-radius commutant of a generator set.
    Commutant(CommutantArgs),
    /// Run the power-prime, pΛ and unit-vector witnesses.
    Witness(WitnessArgs),
    /// Orbit of a truncated lacunary series under μ_p.
    Lacunary(LacunaryArgs),
    /// Compose two block maps.
    Compose(ComposeArgs),
    /// Decide whether two block maps commute.
    Commute(CommuteArgs),
    /// The block map of μ_u.
    Mu(MuArgs),
    /// Exact torus value of an eventually periodic sequence.
    Eval(EvalArgs),
    /// Block map of a shift polynomial.
    Poly2ca(Poly2caArgs),
    /// Shift polynomial of a linear block map.
    Ca2poly(Ca2polyArgs),
    /// Linear map hitting a target prefix.
    Linhit(LinhitArgs),
    /// Block map hitting a target prefix.
    Hit(HitArgs),
    /// Check V(τ(a)) = u·V(a) on random eventually periodic inputs.
    Represents(RepresentsArgs),
    /// Power-prime non-density witness.
    WitnessPm(WitnessPmArgs),
    /// pΛ_s invariance witness.
    WitnessPlambda(WitnessPlambdaArgs),
}

#[derive(Serialize)]
struct MapJson {
    s: usize,
    radius: usize,
    table: Vec<u8>,
}

#[derive(Serialize)]
struct CommuteReport {
    s: usize,
    left: String,
    right: String,
    commutes: bool,
    counterexample: Option<String>,
}

impl Report for CommuteReport {
    fn passed(&self) -> bool {
        self.commutes
    }

    fn table(&self) -> (Vec<&'static str>, Vec<Vec<String>>) {
        let row = vec![self.left.clone(), self.right.clone(), self.commutes.to_string(), opt_field(&self.counterexample)];
        (vec!["left", "right", "commutes", "counterexample"], vec![row])
    }
}

#[derive(Serialize)]
struct EvalReport {
    sequence: String,
    value: String,
    expansions: Vec<String>,
}

impl Report for EvalReport {
    fn table(&self) -> (Vec<&'static str>, Vec<Vec<String>>) {
        (vec!["sequence", "value", "expansions"], vec![vec![self.sequence.clone(), self.value.clone(), self.expansions.join(" ")]])
    }
}

#[derive(Serialize)]
struct PolyReport {
    ring: String,
    linear: bool,
    polynomial: Option<String>,
}

impl Report for PolyReport {
    fn passed(&self) -> bool {
        self.linear
    }

    fn table(&self) -> (Vec<&'static str>, Vec<Vec<String>>) {
        (vec!["ring", "linear", "polynomial"], vec![vec![self.ring.clone(), self.linear.to_string(), opt_field(&self.polynomial)]])
    }
}

/// Wrapper giving core reports a CSV layout.
#[derive(Serialize)]
#[serde(transparent)]
struct Represents(RepresentsReport);

impl Report for Represents {
    fn passed(&self) -> bool {
        self.0.passed
    }

    fn table(&self) -> (Vec<&'static str>, Vec<Vec<String>>) {
        let r = &self.0;
        let c = r.counterexample.as_ref();
        let row = vec![
            r.s.to_string(),
            r.u.to_string(),
            r.trials.to_string(),
            r.seed.to_string(),
            r.passed.to_string(),
            opt_field(&c.map(|c| c.trial)),
            opt_field(&c.map(|c| c.sequence.clone())),
        ];
        (vec!["s", "u", "trials", "seed", "passed", "trial", "sequence"], vec![row])
    }
}

struct Output<'a> {
    common: &'a Common,
    cfg: &'a ExperimentConfig,
}

impl Output<'_> {
    fn format(&self) -> Result<Option<Format>> {
        let text = self.common.format.as_deref().or(self.cfg.get("format"));
        Ok(text.map(str::parse).transpose()?)
    }

    fn write(&self, text: &str) -> Result<()> {
        let out = self.common.out.clone().or_else(|| self.cfg.get("out").map(PathBuf::from));
        match out {
            Some(path) => std::fs::write(&path, text).with_context(|| format!("writing {}", path.display())),
            None => {
                print!("{text}");
                Ok(())
            }
        }
    }

    fn report<R: Report>(&self, report: &R) -> Result<ExitCode> {
        self.write(&render(report, self.format()?.unwrap_or_default())?)?;
        Ok(if report.passed() { ExitCode::SUCCESS } else { ExitCode::from(1) })
    }

    fn map(&self, map: &BlockMap) -> Result<ExitCode> {
        let text = match self.format()? {
            None => map.to_string(),
            Some(Format::Json) => {
                let json = MapJson { s: map.alphabet().size(), radius: map.radius(), table: map.table().to_vec() };
                serde_json::to_string_pretty(&json)? + "\n"
            }
            Some(Format::Csv) => {
                let mut text = String::from("index,value\n");
                for (i, x) in map.table().iter().enumerate() {
                    text += &format!("{i},{x}\n");
                }
                text
            }
        };
        self.write(&text)?;
        Ok(ExitCode::SUCCESS)
    }
}

fn periodic(cfg: &ExperimentConfig, s: usize) -> Result<EventuallyPeriodicSeq> {
    let text = cfg.require("seq")?;
    let text = if text.contains("s=") { text.to_string() } else { format!("s={s} {text}") };
    Ok(text.parse()?)
}

fn literal(cfg: &ExperimentConfig, s: usize) -> Result<SequenceLiteral> {
    let text = cfg.require("seq")?;
    let text = if text.contains("s=") { text.to_string() } else { format!("s={s} {text}") };
    Ok(text.parse()?)
}

fn run(cli: Cli) -> Result<ExitCode> {
    let exec = if cli.sequential { Execution::Sequential } else { Execution::Parallel };
    match cli.command {
        Command::Coverage(args) => {
            let cfg = args.config()?;
            let report = orbit_coverage(&cfg, enumeration_cap()?, exec)?;
            Output { common: &args.common, cfg: &cfg }.report(&report)
        }
        Command::Commutant(args) => {
            let cfg = args.config()?;
            let out_dir = cfg.get("out_dir").map(PathBuf::from);
            let report = commutant_campaign(&cfg, enumeration_cap()?, exec, out_dir.as_deref())?;
            Output { common: &args.common, cfg: &cfg }.report(&report)
        }
        Command::Witness(args) => {
            let cfg = args.config()?;
            let report = witness_suite(&cfg, exec)?;
            Output { common: &args.common, cfg: &cfg }.report(&report)
        }
        Command::Lacunary(args) => {
            let cfg = args.config()?;
            let report = lacunary_orbit(&cfg)?;
            Output { common: &args.common, cfg: &cfg }.report(&report)
        }
        Command::Compose(args) => {
            let cfg = args.config()?;
            let a = cfg.alphabet()?;
            let map = parse_map(cfg.require("outer")?, a)?.compose(&parse_map(cfg.require("inner")?, a)?)?;
            Output { common: &args.common, cfg: &cfg }.map(&map.normalize())
        }
        Command::Commute(args) => {
            let cfg = args.config()?;
            let a = cfg.alphabet()?;
            let (left, right) = (cfg.require("left")?, cfg.require("right")?);
            let block = parse_map(left, a)?.noncommuting_block(&parse_map(right, a)?)?;
            let report = CommuteReport {
                s: a.size(),
                left: left.to_string(),
                right: right.to_string(),
                commutes: block.is_none(),
                counterexample: block.map(|b| format_symbols(&b)),
            };
            Output { common: &args.common, cfg: &cfg }.report(&report)
        }
        Command::Mu(args) => {
            let cfg = args.config()?;
            let map = mu_u(&MulSpec::new(cfg.alphabet()?, cfg.parse_req("u")?)?)?;
            Output { common: &args.common, cfg: &cfg }.map(&map)
        }
        Command::Eval(args) => {
            let cfg = args.config()?;
            let a = cfg.alphabet()?;
            let seq = periodic(&cfg, a.size())?;
            let value = evaluate(&seq);
            let report = EvalReport {
                sequence: SequenceLiteral::Periodic(seq).to_string(),
                value: value.to_string(),
                expansions: preimages(&value, a, false).into_iter().map(|e| SequenceLiteral::Periodic(e).to_string()).collect(),
            };
            Output { common: &args.common, cfg: &cfg }.report(&report)
        }
        Command::Poly2ca(args) => {
            let cfg = args.config()?;
            let ring: RingSpec = cfg.require("ring")?.parse()?;
            let poly = ShiftPolynomial::new(ring.clone(), parse_symbols(cfg.require("coeffs")?, ring.alphabet())?)?;
            Output { common: &args.common, cfg: &cfg }.map(&poly.to_blockmap())
        }
        Command::Ca2poly(args) => {
            let cfg = args.config()?;
            let ring: RingSpec = cfg.require("ring")?.parse()?;
            let map = parse_map(cfg.require("map")?, ring.alphabet())?;
            let poly = blockmap_to_poly(&map, &ring)?;
            let report = PolyReport { ring: ring.to_string(), linear: poly.is_some(), polynomial: poly.map(|p| p.to_string()) };
            Output { common: &args.common, cfg: &cfg }.report(&report)
        }
        Command::Linhit(args) => {
            let cfg = args.config()?;
            let ring: RingSpec = cfg.require("ring")?.parse()?;
            let a = ring.alphabet();
            let source = literal(&cfg, a.size())?;
            let target = Word::new(a, parse_symbols(cfg.require("target")?, a)?)?;
            let map = construct_linear_hitting(&source, &target, &ring, cfg.parse_or("kmax", 64)?)?;
            Output { common: &args.common, cfg: &cfg }.map(&map)
        }
        Command::Hit(args) => {
            let cfg = args.config()?;
            let a = cfg.alphabet()?;
            let target = Word::new(a, parse_symbols(cfg.require("target")?, a)?)?;
            let map = match literal(&cfg, a.size())? {
                SequenceLiteral::Periodic(seq) => construct_table_hitting(HittingSource::Periodic(&seq), &target)?,
                lazy => {
                    let prefix = Word::new(a, lazy.head(cfg.positive("prefix", 1000)?))?;
                    construct_table_hitting(HittingSource::Prefix(&prefix), &target)?
                }
            };
            Output { common: &args.common, cfg: &cfg }.map(&map)
        }
        Command::Represents(args) => {
            let cfg = args.config()?;
            let map = parse_map(cfg.require("map")?, cfg.alphabet()?)?;
            let report = represents_check(&map, cfg.parse_req("u")?, cfg.positive("trials", 500)?, cfg.parse_or("seed", 0)?, exec);
            Output { common: &args.common, cfg: &cfg }.report(&Represents(report))
        }
        Command::WitnessPm(args) => {
            let cfg = args.config()?;
            let report = power_prime(&cfg)?;
            Output { common: &args.common, cfg: &cfg }.report(&report)
        }
        Command::WitnessPlambda(args) => {
            let cfg = args.config()?;
            let report = p_lambda(&cfg, exec)?;
            Output { common: &args.common, cfg: &cfg }.report(&report)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
