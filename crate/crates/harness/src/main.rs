use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use conductor_core::ideal::{is_prime_ideal, is_semiprime_ideal, ExtensionPair};
use conductor_core::ring::{center, characteristic};
use conductor_core::substructures::{enumerate_ideals, maximal_subrings, Side};
use conductor_core::{Caps, RingTable};
use conductor_harness::checks::{conductor_cases, find_check, registry};
use conductor_harness::corpus::{pair_label, parse_generators, Corpus, CorpusSpec};
use conductor_harness::dsl::parse_ring_expr;
use conductor_harness::report::{Format, Report};
use conductor_harness::runner::{run, RunOptions};
use conductor_harness::table_file::render_ring_table;

#[derive(Parser)]
#[command(name = "conductor", about = "Conductor ideals of maximal subrings in finite rings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Human,
    Machine,
}

#[derive(Subcommand)]
enum Command {
    /// Run the check suite over a corpus.
    Verify {
        /// Corpus TOML file; the built-in corpus if omitted.
        #[arg(long)]
        corpus: Option<PathBuf>,
        /// Comma-separated check ids, e.g. C01,C05.
        #[arg(long, value_delimiter = ',')]
        checks: Vec<String>,
        /// Write the report here instead of stdout.
        #[arg(long)]
        report: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "human")]
        format: OutFormat,
        /// Worker threads (0 = one per core).
        #[arg(long, default_value_t = 0)]
        workers: usize,
    },
    /// Conductors, configuration case and primality for one pair.
    Analyze {
        #[arg(long)]
        ring: String,
        /// Generators of R, `;`-separated element names.
        #[arg(long)]
        subring: String,
    },
    /// List the maximal subrings of a ring.
    Census {
        #[arg(long)]
        ring: String,
    },
    /// Print the tables and basic invariants of a ring.
    Show {
        #[arg(long)]
        ring: String,
    },
}

fn load_ring(expr: &str) -> Result<RingTable> {
    parse_ring_expr(expr, &Caps::default()).with_context(|| format!("cannot build `{expr}`"))
}

fn verify(
    corpus: Option<PathBuf>,
    checks: Vec<String>,
    report: Option<PathBuf>,
    format: OutFormat,
    workers: usize,
) -> Result<bool> {
    let spec = match &corpus {
        Some(path) => CorpusSpec::load(path)?,
        None => CorpusSpec::builtin(),
    };
    let base = corpus.as_ref().and_then(|p| p.parent());
    let built = Corpus::build(&spec, &Caps::default(), base);
    let selected = if checks.is_empty() {
        registry().iter().collect()
    } else {
        checks
            .iter()
            .map(|id| find_check(id.trim()).with_context(|| format!("unknown check `{id}`")))
            .collect::<Result<Vec<_>>>()?
    };
    let records = run(&built.pairs, &RunOptions { workers, checks: selected });
    let errors = built.errors.iter().map(|e| e.to_string()).collect();
    let rep = Report::new(records, built.pairs.len(), errors);
    let fmt = match format {
        OutFormat::Human => Format::Human,
        OutFormat::Machine => Format::Machine,
    };
    let text = rep.render(fmt);
    match report {
        Some(path) => {
            std::fs::write(&path, text).with_context(|| format!("cannot write {}", path.display()))?;
            let s = &rep.summary;
            println!(
                "{} results: {} pass, {} fail, {} vacuous, {} error",
                s.records, s.pass, s.fail, s.vacuous, s.error
            );
        }
        None => print!("{text}"),
    }
    Ok(rep.success())
}

fn analyze(ring: &str, gens: &str) -> Result<()> {
    let t = Arc::new(load_ring(ring)?);
    let r = parse_generators(&t, gens)?;
    let pair = ExtensionPair::new(t.clone(), r)?;
    println!("pair      {}", pair_label(&t, pair.r()));
    println!("|T| = {}, |R| = {}, maximal: {}", t.order(), pair.r().count(), pair.is_maximal());
    let (rs, ts) = (pair.r_scope(), pair.t_scope());
    for (name, side) in [("cond", Side::TwoSided), ("cond_l", Side::Left), ("cond_r", Side::Right)] {
        let c = pair.conductor(side);
        println!("{name:<7} {} ({} elements)", t.render(c), c.count());
        println!(
            "        prime in R: {}, semiprime in R: {}",
            is_prime_ideal(&rs, c)?,
            is_semiprime_ideal(&rs, c)?
        );
        if side == Side::TwoSided {
            println!("        prime in T: {}", is_prime_ideal(&ts, c)?);
        }
    }
    let cases = conductor_cases(&pair)?;
    let shown: Vec<String> = cases.iter().map(|c| c.to_string()).collect();
    println!("case    {}", if shown.is_empty() { "none".into() } else { shown.join(", ") });
    Ok(())
}

fn census(ring: &str) -> Result<()> {
    let caps = Caps::default();
    let t = Arc::new(load_ring(ring)?);
    let subs = maximal_subrings(&t, &caps)?;
    println!("{} maximal subrings of {} (order {})", subs.len(), t.label(), t.order());
    for r in subs {
        let pair = ExtensionPair::new(t.clone(), r)?;
        println!(
            "{}  |R|={} |cond|={} |cond_l|={} |cond_r|={}",
            pair_label(&t, pair.r()),
            pair.r().count(),
            pair.cond().count(),
            pair.cond_l().count(),
            pair.cond_r().count()
        );
    }
    Ok(())
}

fn show(ring: &str) -> Result<()> {
    let t = load_ring(ring)?;
    print!("{}", render_ring_table(&t));
    println!("# order {}", t.order());
    println!("# characteristic {}", characteristic(&t));
    println!("# commutative {}", t.is_commutative());
    println!("# center {}", t.render(&center(&t)));
    if let Ok(ideals) = enumerate_ideals(&conductor_core::Scope::whole(&t), Side::TwoSided, &Caps::default()) {
        println!("# two-sided ideals {}", ideals.len());
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Verify { corpus, checks, report, format, workers } => verify(corpus, checks, report, format, workers),
        Command::Analyze { ring, subring } => analyze(&ring, &subring).map(|_| true),
        Command::Census { ring } => census(&ring).map(|_| true),
        Command::Show { ring } => show(&ring).map(|_| true),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
