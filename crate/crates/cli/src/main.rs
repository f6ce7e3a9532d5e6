use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};
use interval_poset::census::{empirical_csv, DEFAULT_MAX_N};
use interval_poset::{
    census, classify_permutation, classify_poset, count_generators, generators, recognize,
    substitution_decomposition, to_dot, verify_identities, CensusOptions, Error, Executor,
    IntervalPoset, Permutation, PosetFile,
};
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "interval-poset",
    version,
    about = "Interval posets of permutations"
)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for census work; 1 runs sequentially.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Write the main output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Intervals, decomposition, poset statistics and properties of a permutation.
    Analyze { perm: String },
    /// Decompose a poset file into blocks and count its generators.
    Recognize {
        #[arg(long)]
        poset: PathBuf,
    },
    /// List every permutation whose interval poset equals the given one.
    Generators(Source),
    /// Tree/binary classification by poset shape and by patterns.
    Classify { perm: String },
    /// Exhaustive census of S_n.
    Census {
        n: usize,
        #[arg(long, default_value_t = DEFAULT_MAX_N)]
        max_n: usize,
        /// Skip the principal-ideal law (the slowest per-permutation check).
        #[arg(long)]
        no_ideals: bool,
    },
    /// Canonical Hasse diagram in Graphviz DOT.
    ExportDot(Source),
    /// Poset file for a permutation's interval poset.
    ExportJson { perm: String },
    /// Census and identity checks for every n from 2 to --max-n.
    Verify {
        #[arg(long, default_value_t = 7)]
        max_n: usize,
        /// Directory for the empirical sequence CSVs.
        #[arg(long)]
        sequences: Option<PathBuf>,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// Permutation in one-line notation.
    perm: Option<String>,
    /// Poset file in JSON.
    #[arg(long)]
    poset: Option<PathBuf>,
}

/// Failure carrying its exit status.
struct Failure {
    code: u8,
    message: String,
}

impl From<anyhow::Error> for Failure {
    fn from(err: anyhow::Error) -> Self {
        let code = match err.downcast_ref::<Error>() {
            Some(Error::NotAnIntervalPoset(_)) => 2,
            _ => 1,
        };
        Failure {
            code,
            message: format!("{err:#}"),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: &Cli) -> Result<u8, Failure> {
    let mut out: Box<dyn Write> = match &cli.out {
        Some(path) => Box::new(BufWriter::new(
            fs::File::create(path).with_context(|| format!("creating {}", path.display()))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    let code = dispatch(cli, &mut out)?;
    out.flush().context("writing output")?;
    Ok(code)
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> anyhow::Result<u8> {
    let executor = Executor::with_threads(cli.threads);
    match &cli.command {
        Command::Analyze { perm } => analyze(&parse_perm(perm)?, cli.json, out)?,
        Command::Recognize { poset } => {
            let poset = read_poset(poset)?;
            let tree = recognize(&poset)?;
            let count = count_generators(&tree);
            if cli.json {
                writeln!(
                    out,
                    "{}",
                    json!({ "blocks": tree.to_string(), "tree": tree, "generator_count": count.to_string() })
                )?;
            } else {
                writeln!(out, "blocks      {tree}")?;
                writeln!(out, "generators  {count}")?;
            }
        }
        Command::Generators(source) => {
            let poset = load(source)?;
            let set = generators(&recognize(&poset)?)?;
            if cli.json {
                let words: Vec<String> = set.permutations.iter().map(|w| w.to_string()).collect();
                writeln!(
                    out,
                    "{}",
                    json!({ "count": set.count.to_string(), "generators": words })
                )?;
            } else {
                for w in &set.permutations {
                    writeln!(out, "{w}")?;
                }
            }
        }
        Command::Classify { perm } => {
            let w = parse_perm(perm)?;
            let by_poset = classify_poset(&IntervalPoset::of(&w));
            let by_pattern = classify_permutation(&w);
            if cli.json {
                writeln!(
                    out,
                    "{}",
                    json!({ "poset": by_poset, "pattern": by_pattern, "agree": by_poset == by_pattern })
                )?;
            } else {
                writeln!(
                    out,
                    "{:<12} {:>7} {:>7} {:>12}",
                    "criterion", "tree", "binary", "binary_tree"
                )?;
                for (name, f) in [("poset", by_poset), ("pattern", by_pattern)] {
                    writeln!(
                        out,
                        "{name:<12} {:>7} {:>7} {:>12}",
                        f.is_tree, f.is_binary, f.is_binary_tree
                    )?;
                }
                writeln!(out, "agree        {}", by_poset == by_pattern)?;
            }
            if by_poset != by_pattern {
                return Ok(3);
            }
        }
        Command::Census {
            n,
            max_n,
            no_ideals,
        } => {
            if *n < 2 || n > max_n {
                bail!("n must lie in 2..={max_n} (raise --max-n for larger n)");
            }
            let options = CensusOptions {
                executor,
                check_ideals: !no_ideals,
                ..Default::default()
            };
            let report = census(*n, &options);
            let verdicts = verify_identities(&report);
            if cli.json {
                writeln!(
                    out,
                    "{}",
                    json!({ "report": report, "identities": verdicts })
                )?;
            } else {
                write!(out, "{}", report.render_text())?;
                for v in &verdicts {
                    writeln!(
                        out,
                        "{} {}",
                        if v.pass { "PASS" } else { "FAIL" },
                        v.identity
                    )?;
                }
            }
            if verdicts.iter().any(|v| !v.pass) {
                return Ok(3);
            }
        }
        Command::ExportDot(source) => write!(out, "{}", to_dot(&load(source)?)?)?,
        Command::ExportJson { perm } => writeln!(
            out,
            "{}",
            PosetFile::from_poset(&IntervalPoset::of(&parse_perm(perm)?)).to_json()
        )?,
        Command::Verify { max_n, sequences } => {
            return verify(*max_n, sequences.as_deref(), executor, cli.json, out)
        }
    }
    Ok(0)
}

fn verify(
    max_n: usize,
    sequences: Option<&Path>,
    executor: Executor,
    as_json: bool,
    out: &mut dyn Write,
) -> anyhow::Result<u8> {
    if max_n < 2 {
        bail!("--max-n must be at least 2");
    }
    let options = CensusOptions {
        executor,
        ..Default::default()
    };
    let mut all_pass = true;
    let mut trees = Vec::new();
    let mut two_gen = Vec::new();
    let mut rows = Vec::new();
    for n in 2..=max_n {
        let report = census(n, &options);
        let verdicts = verify_identities(&report);
        all_pass &= verdicts.iter().all(|v| v.pass);
        trees.push((n, report.tree_poset_count));
        two_gen.push((n, report.two_generator_poset_count));
        if as_json {
            rows.push(json!({ "n": n, "distinct_posets": report.distinct_posets, "violations": report.violations, "identities": verdicts }));
        } else {
            for v in &verdicts {
                writeln!(
                    out,
                    "n={n} {} {} (expected {}, got {})",
                    if v.pass { "PASS" } else { "FAIL" },
                    v.identity,
                    v.expected,
                    v.actual
                )?;
            }
        }
    }
    if as_json {
        writeln!(out, "{}", json!({ "pass": all_pass, "censuses": rows }))?;
    }
    if let Some(dir) = sequences {
        fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
        fs::write(
            dir.join("tree_posets.csv"),
            empirical_csv("tree interval posets", &trees),
        )?;
        fs::write(
            dir.join("two_generator_posets.csv"),
            empirical_csv("interval posets with exactly two generators", &two_gen),
        )?;
    }
    Ok(if all_pass { 0 } else { 3 })
}

fn analyze(w: &Permutation, as_json: bool, out: &mut dyn Write) -> anyhow::Result<()> {
    let poset = IntervalPoset::of(w);
    let closed = poset.close_with_bottom()?;
    let intervals: Vec<String> = poset.intervals().iter().map(|iv| iv.to_string()).collect();
    let decomposition = if w.len() >= 2 {
        substitution_decomposition(w).to_string()
    } else {
        w.to_string()
    };
    let fruitful: Vec<String> = poset
        .fruitful_elements()
        .iter()
        .map(|e| e.to_string())
        .collect();
    let generator_count = count_generators(&recognize(&poset)?).to_string();
    let planar = poset.is_planar_canonical()?;
    let stats = json!({
        "permutation": w.to_string(),
        "intervals": intervals,
        "elements": poset.len(),
        "covers": poset.covers().len(),
        "rank": poset.rank(),
        "decomposition": decomposition,
        "fruitful": fruitful,
        "simple": w.is_simple(),
        "separable": w.is_separable(),
        "lattice": closed.is_lattice(),
        "modular": closed.is_modular()?,
        "distributive": closed.is_distributive()?,
        "planar": planar,
        "generator_count": generator_count,
    });
    if as_json {
        writeln!(out, "{stats}")?;
        return Ok(());
    }
    writeln!(out, "permutation    {w}")?;
    writeln!(out, "intervals      {}", intervals.join(" "))?;
    writeln!(out, "elements       {}", poset.len())?;
    writeln!(out, "covers         {}", poset.covers().len())?;
    writeln!(out, "rank           {}", poset.rank())?;
    writeln!(out, "decomposition  {decomposition}")?;
    writeln!(
        out,
        "fruitful       {}",
        if fruitful.is_empty() {
            "-".into()
        } else {
            fruitful.join(" ")
        }
    )?;
    for key in [
        "simple",
        "separable",
        "lattice",
        "modular",
        "distributive",
        "planar",
    ] {
        writeln!(out, "{key:<14} {}", stats[key])?;
    }
    writeln!(out, "generators     {generator_count}")?;
    Ok(())
}

fn parse_perm(text: &str) -> anyhow::Result<Permutation> {
    Permutation::parse(text).with_context(|| format!("bad permutation {text:?}"))
}

fn read_poset(path: &Path) -> anyhow::Result<IntervalPoset> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Ok(PosetFile::from_json(&text)?.to_interval_poset()?)
}

fn load(source: &Source) -> anyhow::Result<IntervalPoset> {
    match (&source.perm, &source.poset) {
        (Some(perm), _) => Ok(IntervalPoset::of(&parse_perm(perm)?)),
        (None, Some(path)) => read_poset(path),
        (None, None) => bail!("give a permutation or --poset"),
    }
}
