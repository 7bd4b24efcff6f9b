use c4lab::conditions::{AnalyzeOptions, RuleRegistry, Strictness};
use c4lab::harness::{cmd_analyze, cmd_morita, cmd_suite, load_guards, parse_realization, read_module_file, AnalyzeCommand, SuiteOptions};
use c4lab::morita::Condition;
use c4lab::{Error, Result};
use clap::{Parser, Subcommand};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "c4lab", version, about = "C4-type summand conditions and Morita transport over finite algebras")]
struct Cli {
    /// Guards file (JSON); falls back to $C4LAB_GUARDS, then the defaults.
    #[arg(long, global = true)]
    guards: Option<PathBuf>,
    /// Write the structured report here.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Witness rule id.
    #[arg(long, global = true, default_value = "mono-image-splits")]
    rule: String,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full defect report for one module.
    Analyze {
        module: PathBuf,
        /// Analyze the regular module of the ring and scan its right ideals.
        #[arg(long)]
        ring: bool,
        /// Extension grid point `m,d`; repeatable.
        #[arg(long = "extensions", value_parser = parse_point)]
        extensions: Vec<(usize, usize)>,
        /// Strict depth chains (the default).
        #[arg(long, conflicts_with = "nonstrict_chains")]
        strict_chains: bool,
        #[arg(long)]
        nonstrict_chains: bool,
    },
    /// Compare conditions on M and F(M) = Hom(P, M).
    Morita {
        module: PathBuf,
        #[arg(long, conflicts_with = "corner")]
        matrix: Option<usize>,
        /// Idempotent as an index into idempotents(R) or as comma-separated coordinates.
        #[arg(long)]
        corner: Option<String>,
        /// Comma-separated: C4, C4star, swCS, strong, index, ext:m:d[:nonstrict].
        #[arg(long, default_value = "C4,C4star,swCS,strong,index")]
        conditions: String,
    },
    /// Run the acceptance suite on the built-in corpus.
    Suite {
        #[arg(long)]
        filter: Option<String>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        threads: Option<usize>,
    },
}

fn parse_point(s: &str) -> std::result::Result<(usize, usize), String> {
    let (m, d) = s.split_once(',').ok_or("expected m,d")?;
    Ok((m.trim().parse().map_err(|_| "bad m")?, d.trim().parse().map_err(|_| "bad d")?))
}

fn write_out(out: Option<&Path>, json: &str) -> Result<()> {
    if let Some(p) = out {
        std::fs::write(p, format!("{json}\n")).map_err(|e| Error::Io(format!("{}: {e}", p.display())))?;
    }
    Ok(())
}

fn module_name(p: &Path) -> String {
    p.file_stem().map_or_else(|| p.display().to_string(), |s| s.to_string_lossy().into_owned())
}

fn run(cli: Cli) -> Result<bool> {
    let mut guards = load_guards(cli.guards.as_deref())?;
    let rule = RuleRegistry::default().get(&cli.rule)?;
    match cli.command {
        Command::Analyze { module, ring, extensions, strict_chains: _, nonstrict_chains } => {
            let (r, m) = read_module_file(&module, &guards)?;
            let mut options = AnalyzeOptions { rule, ..AnalyzeOptions::default() };
            if !extensions.is_empty() {
                options.extensions = extensions;
            }
            if nonstrict_chains {
                options.strictness = Strictness::NonStrict;
            }
            let out = cmd_analyze(&r, &m, &module_name(&module), &guards, &AnalyzeCommand { options, ring_mode: ring })?;
            print!("{}", out.to_text());
            write_out(cli.out.as_deref(), &out.to_json())?;
            Ok(true)
        }
        Command::Morita { module, matrix, corner, conditions } => {
            let (r, m) = read_module_file(&module, &guards)?;
            let realization = parse_realization(&r, matrix, corner.as_deref(), &guards)?;
            let conds = conditions.split(',').map(Condition::parse).collect::<Result<Vec<_>>>()?;
            let cmp = cmd_morita(&r, &m, &module_name(&module), &realization, &conds, rule.as_ref(), &guards)?;
            print!("{}", cmp.to_text());
            write_out(cli.out.as_deref(), &serde_json::to_string_pretty(&cmp)?)?;
            Ok(cmp.violations().is_empty())
        }
        Command::Suite { filter, seed, threads } => {
            if let Some(n) = threads {
                // Only fails if a pool already exists, in which case that pool is used.
                let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
            }
            if let Some(s) = seed {
                guards.rng_seed = s;
            }
            let report = cmd_suite(&SuiteOptions { guards, filter, rule, extra_entries: Vec::new() });
            print!("{}", report.to_text());
            write_out(cli.out.as_deref(), &report.to_json())?;
            Ok(report.passed())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("c4lab: {e}");
            ExitCode::from(2)
        }
    }
}
