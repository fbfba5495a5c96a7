//! `qsets`: validate quantales and Q-sets, enumerate powersets, and check
//! the powerset monad and split-coequalizer lifting on small instances.
//!
//! Exit status: 0 when every check passes, 1 when a check fails, 2 on
//! input, capability or capacity errors.

mod input;
mod output;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use qsets::demo::{crisp_set, interval_partial_metric, sample_intervals, Interval};
use qsets::monad::potential::enumerate_potential_subsets;
use qsets::monad::{alpha_rows, check_monad_laws, check_naturality, LawMode, LawOptions};
use qsets::monadicity::{verify_split_lift, SplitOptions};
use qsets::presheaf::complete::is_complete;
use qsets::presheaf::{PresheafCategory, DEFAULT_PRESHEAF_CAP};
use qsets::qcat::{validate_qset, validate_qset_map};
use qsets::quantale::{validate_quantale, Lawvere};
use qsets::{build_dstar, validate_quantaloid, LawReport};

use input::{load_instance, load_map, load_qset, load_quantale, Qset, QuantaleSource};
use output::{Format, Output};

#[derive(Parser)]
#[command(
    name = "qsets",
    version,
    about = "Workbench for quantale-valued sets and their powerset monad"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the axioms of a finite involutive quantale.
    ValidateQuantale { file: PathBuf },
    /// Print the objects and hom-sets of D*(Q), and check the quantaloid axioms.
    Dstar { file: PathBuf },
    /// Check a Q-set file, or a map file between two Q-sets (`--map`).
    ValidateQset {
        #[arg(required_unless_present = "map", conflicts_with = "map")]
        file: Option<PathBuf>,
        #[arg(long)]
        map: Option<PathBuf>,
    },
    /// List the potential subsets (presheaves) of a Q-set.
    EnumeratePowerset {
        file: PathBuf,
        /// Also print the hom matrix of the presheaf category.
        #[arg(long)]
        hom: bool,
        /// Also check that the presheaf category is complete.
        #[arg(long)]
        check_complete: bool,
        /// With `--check-complete`, cross-check every presheaf's supremum directly.
        #[arg(long, requires = "check_complete")]
        thorough: bool,
        /// Maximum number of presheaves.
        #[arg(long, default_value_t = DEFAULT_PRESHEAF_CAP, value_parser = positive)]
        max_presheaves: usize,
    },
    /// Check the monad laws (and naturality along `--map`) for a Q-set.
    CheckMonadLaws {
        file: PathBuf,
        #[command(flatten)]
        laws: LawArgs,
        /// A map file out of this Q-set; adds the naturality checks.
        #[arg(long)]
        map: Option<PathBuf>,
    },
    /// Verify the lifting of a split coequalizer instance.
    CheckMonadicity {
        file: PathBuf,
        /// Size bound for generated cocone targets (0 disables generation).
        #[arg(long, default_value_t = SplitOptions::default().auto_max_size)]
        auto_max_size: usize,
        /// Maximum number of enumerated maps or hom matrices.
        #[arg(long, default_value_t = SplitOptions::default().cap, value_parser = positive)]
        max_maps: usize,
    },
    /// Built-in demonstrations.
    #[command(subcommand)]
    Demo(Demo),
}

#[derive(Subcommand)]
enum Demo {
    /// The crisp n-element set over D*(2): its powerset and the monad laws.
    Crisp {
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[command(flatten)]
        laws: LawArgs,
    },
    /// Rational intervals with α([a,b],[c,d]) = b∨d − a∧c over the Lawvere quantale.
    PartialMetric {
        #[arg(long, default_value_t = 20)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Exhaustive,
    Sampled,
}

#[derive(Args)]
struct LawArgs {
    /// How associativity is checked over Ps³X.
    #[arg(long, value_enum)]
    mode: Option<ModeArg>,
    /// Seed for sampled mode.
    #[arg(long)]
    seed: Option<u64>,
    /// Number of samples in sampled mode.
    #[arg(long, default_value_t = 1000, value_parser = positive)]
    samples: usize,
    /// Maximum number of presheaves at any level.
    #[arg(long, default_value_t = DEFAULT_PRESHEAF_CAP, value_parser = positive)]
    max_size: usize,
}

impl LawArgs {
    fn options(&self, default: LawMode) -> Result<LawOptions> {
        let mode = match (self.mode, self.seed) {
            (None, _) => match default {
                LawMode::Sampled { seed, .. } => LawMode::Sampled {
                    seed: self.seed.unwrap_or(seed),
                    count: self.samples,
                },
                LawMode::Exhaustive => LawMode::Exhaustive,
            },
            (Some(ModeArg::Exhaustive), _) => LawMode::Exhaustive,
            (Some(ModeArg::Sampled), Some(seed)) => LawMode::Sampled {
                seed,
                count: self.samples,
            },
            (Some(ModeArg::Sampled), None) => bail!("--seed is required with --mode sampled"),
        };
        Ok(LawOptions {
            mode,
            cap: self.max_size,
        })
    }
}

fn positive(s: &str) -> std::result::Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

fn validate_quantale_cmd(file: &Path, out: &mut Output) -> Result<()> {
    match load_quantale(file)? {
        QuantaleSource::Tables { name, tables } => {
            let mut r = validate_quantale(&tables)?;
            r.subject = format!("quantale {name}");
            out.report(r);
        }
        QuantaleSource::Lawvere => {
            bail!(qsets::Error::Capability(
                "the Lawvere quantale is infinite; its axioms cannot be checked exhaustively"
                    .into()
            ))
        }
    }
    Ok(())
}

fn dstar_cmd(file: &Path, out: &mut Output) -> Result<()> {
    let q = load_quantale(file)?.finite()?;
    let k = build_dstar(q)?;
    out.dstar(&k);
    let mut r = validate_quantaloid(&k);
    r.subject = k.name().to_string();
    out.report(r);
    Ok(())
}

fn validate_qset_file(qset: &Qset) -> Result<LawReport> {
    Ok(match qset {
        Qset::Finite {
            labels,
            quantale,
            alpha,
        } => {
            let mut r = validate_qset(quantale.as_ref(), labels, alpha);
            if r.passed() {
                let cat = qset.category()?;
                r.extend_prefixed("dstar_category", cat.validate());
            }
            r
        }
        Qset::Lawvere { labels, alpha } => validate_qset(&Lawvere, labels, alpha),
    })
}

fn validate_map_file(path: &Path) -> Result<LawReport> {
    let m = load_map(path)?;
    let mut report = LawReport::new("qset_map");
    report.extend_prefixed("source", validate_qset_file(&m.source)?);
    report.extend_prefixed("target", validate_qset_file(&m.target)?);
    let maps = match (&m.source, &m.target) {
        (
            Qset::Finite {
                labels,
                quantale,
                alpha,
            },
            Qset::Finite { alpha: beta, .. },
        ) => validate_qset_map(quantale.as_ref(), labels, alpha, beta, &m.map),
        (Qset::Lawvere { labels, alpha }, Qset::Lawvere { alpha: beta, .. }) => {
            validate_qset_map(&Lawvere, labels, alpha, beta, &m.map)
        }
        _ => unreachable!("load_map checks the quantales agree"),
    };
    report.extend(maps);
    Ok(report)
}

/// A loaded Q-set as a valid category over `D*(Q)`.
fn valid_category(file: &Path) -> Result<qsets::qcat::QCategory> {
    let qset = load_qset(file)?;
    let report = validate_qset_file(&qset)?;
    if !report.passed() {
        let failing: Vec<String> = report.failing().map(|c| c.check.clone()).collect();
        bail!("{}: not a Q-set ({})", file.display(), failing.join(", "));
    }
    qset.category()
}

fn enumerate_cmd(
    file: &Path,
    hom: bool,
    check_complete: bool,
    thorough: bool,
    cap: usize,
    out: &mut Output,
) -> Result<()> {
    let x = valid_category(file)?;
    let px = PresheafCategory::build(&x, cap)?;
    out.presheaves(&x, &px, hom);
    if check_complete {
        out.report(is_complete(px.category(), thorough, cap)?);
    }
    Ok(())
}

fn monad_laws_cmd(
    file: &Path,
    laws: &LawArgs,
    map: Option<&PathBuf>,
    out: &mut Output,
) -> Result<()> {
    let x = valid_category(file)?;
    let opts = laws.options(LawMode::Exhaustive)?;
    let mut report = check_monad_laws(&x, opts).with_context(|| match opts.mode {
        LawMode::Exhaustive => {
            "exhaustive mode enumerates Ps³X in full; try --mode sampled --seed N"
        }
        LawMode::Sampled { .. } => "checking the monad laws",
    })?;
    if let Some(path) = map {
        let m = load_map(path)?;
        if m.source.labels() != x.labels() {
            bail!(
                "{}: the map's source is not {}",
                path.display(),
                file.display()
            );
        }
        let y = m.target.category()?;
        report.extend(check_naturality(&x, &y, &m.map, opts.cap)?);
    }
    out.report(report);
    Ok(())
}

fn monadicity_cmd(file: &Path, auto_max_size: usize, cap: usize, out: &mut Output) -> Result<()> {
    let loaded = load_instance(file)?;
    let opts = SplitOptions { auto_max_size, cap };
    out.report(verify_split_lift(&loaded.instance, &loaded.cocones, opts)?);
    Ok(())
}

fn demo_crisp(n: usize, laws: &LawArgs, out: &mut Output) -> Result<()> {
    let x = crisp_set(n)?;
    let q = x.quantaloid().base().clone();
    let subsets = enumerate_potential_subsets(&q, &alpha_rows(&x), laws.max_size)?;
    out.potential_subsets(&q, x.labels(), &subsets);
    let opts = laws.options(LawMode::Sampled {
        seed: 0,
        count: laws.samples,
    })?;
    out.report(check_monad_laws(&x, opts)?);
    Ok(())
}

fn demo_partial_metric(n: usize, seed: u64, out: &mut Output) -> Result<()> {
    let xs = sample_intervals(n, seed);
    let labels: Vec<String> = xs.iter().map(Interval::label).collect();
    let alpha = interval_partial_metric(&xs);
    out.intervals(&labels, &alpha);
    out.report(validate_qset(&Lawvere, &labels, &alpha));
    Ok(())
}

fn run(cli: &Cli, out: &mut Output) -> Result<()> {
    match &cli.command {
        Command::ValidateQuantale { file } => validate_quantale_cmd(file, out),
        Command::Dstar { file } => dstar_cmd(file, out),
        Command::ValidateQset { file, map } => {
            let report = match (file, map) {
                (_, Some(m)) => validate_map_file(m)?,
                (Some(f), None) => validate_qset_file(&load_qset(f)?)?,
                (None, None) => unreachable!("clap requires one of them"),
            };
            out.report(report);
            Ok(())
        }
        Command::EnumeratePowerset {
            file,
            hom,
            check_complete,
            thorough,
            max_presheaves,
        } => enumerate_cmd(file, *hom, *check_complete, *thorough, *max_presheaves, out),
        Command::CheckMonadLaws { file, laws, map } => {
            monad_laws_cmd(file, laws, map.as_ref(), out)
        }
        Command::CheckMonadicity {
            file,
            auto_max_size,
            max_maps,
        } => monadicity_cmd(file, *auto_max_size, *max_maps, out),
        Command::Demo(Demo::Crisp { n, laws }) => demo_crisp(*n, laws, out),
        Command::Demo(Demo::PartialMetric { n, seed }) => demo_partial_metric(*n, *seed, out),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = Output::new(cli.format);
    match run(&cli, &mut out) {
        Ok(()) => {
            let passed = out.passed();
            out.emit();
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
