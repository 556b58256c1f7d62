//! `lccp`: build, query, dump, selftest, and benchmark lccp indexes.
//!
//! Exit codes: 0 on success, 1 when the selftest finds a mismatch,
//! 2 on usage or input errors.

use std::fs;
use std::hint::black_box;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use lccp::oracle::{fuzz_compare, random_partial_word, GeneratorParams};
use lccp::{LccpIndex, PartialWord, Symbol};

/// Longest-common-compatible-prefix queries on partial words.
#[derive(Parser)]
#[command(name = "lccp", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Preprocess a word file and report index statistics; optionally save
    /// the index.
    Build {
        word_file: PathBuf,
        /// Byte that marks a hole in the input.
        #[arg(long, value_name = "C", default_value = "?", value_parser = parse_hole_char)]
        hole_char: u8,
        /// Write the index to this file.
        #[arg(short, long, value_name = "index-file")]
        output: Option<PathBuf>,
    },
    /// Answer lccp queries, one integer per line.
    Query {
        word_file: PathBuf,
        /// 1-based start position of the first suffix.
        #[arg(value_name = "i", requires = "j", conflicts_with = "batch")]
        i: Option<usize>,
        /// 1-based start position of the second suffix.
        #[arg(value_name = "j")]
        j: Option<usize>,
        /// File with one "i j" pair per line.
        #[arg(long, value_name = "file")]
        batch: Option<PathBuf>,
        /// Byte that marks a hole in the input.
        #[arg(long, value_name = "C", default_value = "?", value_parser = parse_hole_char)]
        hole_char: u8,
        /// Load a saved index instead of rebuilding from the word file.
        #[arg(long, value_name = "index-file")]
        index: Option<PathBuf>,
    },
    /// Print the LCCP table as TSV: one row per transit position, columns
    /// 1..n.
    Table {
        word_file: PathBuf,
        /// Byte that marks a hole in the input.
        #[arg(long, value_name = "C", default_value = "?", value_parser = parse_hole_char)]
        hole_char: u8,
    },
    /// Cross-check indexed answers against a brute-force scan on random
    /// words.
    Selftest {
        /// Word length.
        #[arg(long, default_value_t = 64)]
        n: usize,
        /// Alphabet size.
        #[arg(long, default_value_t = 4)]
        sigma: u32,
        /// Per-position hole probability.
        #[arg(long, default_value_t = 0.3)]
        density: f64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Number of random words to test.
        #[arg(long, default_value_t = 100)]
        trials: u64,
    },
    /// Measure preprocessing time and query throughput.
    Bench {
        /// Word length.
        #[arg(long, default_value_t = 100_000)]
        n: usize,
        /// Alphabet size.
        #[arg(long, default_value_t = 26)]
        sigma: u32,
        /// Per-position hole probability.
        #[arg(long, default_value_t = 0.0005, conflicts_with = "mu")]
        density: f64,
        /// Exact number of hole blocks, placed as evenly spread single
        /// holes.
        #[arg(long)]
        mu: Option<usize>,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Number of random query pairs to time.
        #[arg(long, default_value_t = 1_000_000)]
        queries: u64,
    },
}

fn parse_hole_char(text: &str) -> Result<u8, String> {
    match text.as_bytes() {
        [b] => Ok(*b),
        _ => Err(format!("hole char must be a single byte, got {text:?}")),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(err) => {
            // dying quietly on a closed pipe lets `lccp ... | head` behave
            let broken_pipe = err
                .chain()
                .filter_map(|cause| cause.downcast_ref::<std::io::Error>())
                .any(|io| io.kind() == std::io::ErrorKind::BrokenPipe);
            if broken_pipe {
                return ExitCode::SUCCESS;
            }
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Build {
            word_file,
            hole_char,
            output,
        } => cmd_build(&word_file, hole_char, output.as_deref()),
        Command::Query {
            word_file,
            i,
            j,
            batch,
            hole_char,
            index,
        } => cmd_query(
            &word_file,
            i.zip(j),
            batch.as_deref(),
            hole_char,
            index.as_deref(),
        ),
        Command::Table {
            word_file,
            hole_char,
        } => cmd_table(&word_file, hole_char),
        Command::Selftest {
            n,
            sigma,
            density,
            seed,
            trials,
        } => cmd_selftest(
            GeneratorParams {
                n,
                sigma,
                hole_density: density,
                seed,
            },
            trials,
        ),
        Command::Bench {
            n,
            sigma,
            density,
            mu,
            seed,
            queries,
        } => cmd_bench(n, sigma, density, mu, seed, queries),
    }
}

fn load_word(word_file: &Path, hole_char: u8) -> anyhow::Result<PartialWord> {
    let text = fs::read(word_file)
        .with_context(|| format!("reading word file {}", word_file.display()))?;
    PartialWord::parse(&text, hole_char)
        .with_context(|| format!("parsing word file {}", word_file.display()))
}

fn load_index(word_file: &Path, hole_char: u8, index: Option<&Path>) -> anyhow::Result<LccpIndex> {
    let word = load_word(word_file, hole_char)?;
    match index {
        None => Ok(LccpIndex::build(word)),
        Some(path) => {
            let file = fs::File::open(path)
                .with_context(|| format!("opening index file {}", path.display()))?;
            let loaded = LccpIndex::read_from(std::io::BufReader::new(file))
                .with_context(|| format!("loading index file {}", path.display()))?;
            if loaded.word() != &word {
                bail!(
                    "index file {} was built from a different word than {}",
                    path.display(),
                    word_file.display()
                );
            }
            Ok(loaded)
        }
    }
}

fn cmd_build(word_file: &Path, hole_char: u8, output: Option<&Path>) -> anyhow::Result<ExitCode> {
    let word = load_word(word_file, hole_char)?;
    let index = LccpIndex::build(word);
    if let Some(path) = output {
        let file = fs::File::create(path)
            .with_context(|| format!("creating index file {}", path.display()))?;
        index
            .write_to(BufWriter::new(file), hole_char)
            .with_context(|| format!("writing index file {}", path.display()))?;
    }
    let stats = index.stats();
    let out = std::io::stdout();
    let mut out = out.lock();
    writeln!(out, "n={}", stats.n)?;
    writeln!(out, "h={}", stats.holes)?;
    writeln!(out, "mu={}", stats.hole_blocks)?;
    writeln!(out, "kappa={}", stats.transit_count)?;
    writeln!(out, "table_cells={}", stats.table_cells)?;
    writeln!(out, "build_seconds={:.6}", stats.build_time.as_secs_f64())?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_query(
    word_file: &Path,
    pair: Option<(usize, usize)>,
    batch: Option<&Path>,
    hole_char: u8,
    index_file: Option<&Path>,
) -> anyhow::Result<ExitCode> {
    let index = load_index(word_file, hole_char, index_file)?;
    let pairs = match (pair, batch) {
        (Some((i, j)), None) => vec![(i, j)],
        (None, Some(path)) => parse_batch(path, index.word().len())?,
        (None, None) => bail!("provide positions <i> <j> or --batch <file>"),
        (Some(_), Some(_)) => unreachable!("clap rejects i/j together with --batch"),
    };
    let out = std::io::stdout();
    let mut out = BufWriter::new(out.lock());
    for (i, j) in pairs {
        writeln!(out, "{}", index.lccp(i, j)?)?;
    }
    out.flush()?;
    Ok(ExitCode::SUCCESS)
}

/// Parses and validates the whole batch before anything is printed, so a
/// bad line can never leave partial output behind.
fn parse_batch(path: &Path, n: usize) -> anyhow::Result<Vec<(usize, usize)>> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("reading batch file {}", path.display()))?;
    let mut pairs = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let lineno = idx + 1;
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [i, j] = fields[..] else {
            bail!(
                "{}:{lineno}: expected \"i j\", got {line:?}",
                path.display()
            );
        };
        let parse = |field: &str| {
            field
                .parse::<usize>()
                .map_err(|_| anyhow::anyhow!("{}:{lineno}: bad position {field:?}", path.display()))
        };
        let (i, j) = (parse(i)?, parse(j)?);
        for pos in [i, j] {
            if pos == 0 || pos > n {
                bail!(
                    "{}:{lineno}: position {pos} out of range (n = {n})",
                    path.display()
                );
            }
        }
        pairs.push((i, j));
    }
    Ok(pairs)
}

fn cmd_table(word_file: &Path, hole_char: u8) -> anyhow::Result<ExitCode> {
    let word = load_word(word_file, hole_char)?;
    let index = LccpIndex::build(word);
    let n = index.word().len();
    let out = std::io::stdout();
    let mut out = BufWriter::new(out.lock());
    write!(out, "j\\i")?;
    for i in 1..=n {
        write!(out, "\t{i}")?;
    }
    writeln!(out)?;
    for &j in index.transit() {
        write!(out, "{j}")?;
        for i in 1..=n {
            write!(out, "\t{}", index.table_get(i, j)?)?;
        }
        writeln!(out)?;
    }
    out.flush()?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_selftest(params: GeneratorParams, trials: u64) -> anyhow::Result<ExitCode> {
    validate_generator_params(&params)?;
    if trials == 0 {
        bail!("--trials must be at least 1");
    }
    let report = fuzz_compare(&params, trials);
    let out = std::io::stdout();
    let mut out = out.lock();
    writeln!(
        out,
        "trials={} words={} pairs={} mismatches={}",
        report.trials,
        report.words_tested,
        report.pairs_checked,
        report.mismatches.len()
    )?;
    if report.passed() {
        writeln!(out, "OK")?;
        Ok(ExitCode::SUCCESS)
    } else {
        for m in &report.mismatches {
            writeln!(
                out,
                "mismatch word={} i={} j={} expected={} actual={}",
                m.word, m.i, m.j, m.expected, m.actual
            )?;
        }
        Ok(ExitCode::from(1))
    }
}

fn validate_generator_params(params: &GeneratorParams) -> anyhow::Result<()> {
    if params.n == 0 {
        bail!("--n must be at least 1");
    }
    if params.sigma == 0 {
        bail!("--sigma must be at least 1");
    }
    if !(0.0..=1.0).contains(&params.hole_density) {
        bail!("--density must be within 0..=1");
    }
    Ok(())
}

fn cmd_bench(
    n: usize,
    sigma: u32,
    density: f64,
    mu: Option<usize>,
    seed: u64,
    queries: u64,
) -> anyhow::Result<ExitCode> {
    if queries == 0 {
        bail!("--queries must be at least 1");
    }
    let word = match mu {
        None => {
            let params = GeneratorParams {
                n,
                sigma,
                hole_density: density,
                seed,
            };
            validate_generator_params(&params)?;
            random_partial_word(&params)
        }
        Some(mu) => spread_hole_word(n, sigma, mu, seed)?,
    };
    let index = LccpIndex::build(word);
    let stats = index.stats();

    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x51c0_de2b_e4c4_17a9);
    let pairs: Vec<(usize, usize)> = (0..queries)
        .map(|_| (rng.random_range(1..=n), rng.random_range(1..=n)))
        .collect();
    let started = Instant::now();
    let mut checksum = 0u64;
    for &(i, j) in &pairs {
        checksum = checksum.wrapping_add(black_box(index.lccp(i, j)?) as u64);
    }
    let query_seconds = started.elapsed().as_secs_f64();

    let out = std::io::stdout();
    let mut out = out.lock();
    writeln!(out, "n={}", stats.n)?;
    writeln!(out, "h={}", stats.holes)?;
    writeln!(out, "mu={}", stats.hole_blocks)?;
    writeln!(out, "kappa={}", stats.transit_count)?;
    writeln!(out, "table_cells={}", stats.table_cells)?;
    writeln!(out, "build_seconds={:.6}", stats.build_time.as_secs_f64())?;
    writeln!(out, "queries={queries}")?;
    writeln!(out, "query_seconds={query_seconds:.6}")?;
    writeln!(
        out,
        "queries_per_second={:.0}",
        queries as f64 / query_seconds
    )?;
    writeln!(out, "checksum={checksum}")?;
    Ok(ExitCode::SUCCESS)
}

/// Random solid word with exactly `mu` isolated holes spread evenly, so the
/// number of hole blocks is exactly `mu`.
fn spread_hole_word(n: usize, sigma: u32, mu: usize, seed: u64) -> anyhow::Result<PartialWord> {
    if n == 0 {
        bail!("--n must be at least 1");
    }
    if sigma == 0 {
        bail!("--sigma must be at least 1");
    }
    if mu > 0 && n < 2 * (mu + 1) {
        bail!("--mu {mu} does not fit in --n {n}: isolated holes need n >= 2*(mu+1)");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut symbols: Vec<Symbol> = (0..n)
        .map(|_| Symbol::Letter(u32::from(b'a') + rng.random_range(0..sigma)))
        .collect();
    for k in 1..=mu {
        // consecutive floor(k*n/(mu+1)) are >= floor(n/(mu+1)) >= 2 apart,
        // so each hole stays its own block
        symbols[k * n / (mu + 1)] = Symbol::Hole;
    }
    Ok(PartialWord::new(symbols).expect("n >= 1"))
}
