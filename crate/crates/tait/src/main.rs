use std::error::Error;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use tait::text::{matrix_triples, parse_color_string, state_lines};
use tait::word_eq::{decide, Verdict};
use tait::{bench, parallel, presentation, verify};
use tait::{parse_graph, parse_presentation, parse_word, serialize_word};
use tait_core::tft::{evaluate_closed_with_stats, evaluate_state};
use tait_core::word_problem::default_max_length;
use tait_core::{reslice_distinct, slice, tait_face_coloring, EmbeddedGraph, MorphismWord, StateVector};

/// Exact Tait-coloring counts of planar trivalent maps.
#[derive(Parser)]
#[command(name = "tait", version)]
struct Cli {
    /// Worker threads for parallel stages (0: all cores).
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Number of Tait colorings, by slicing and evaluating.
    Count {
        graph: PathBuf,
        /// Report the peak state support on stderr.
        #[arg(long)]
        stats: bool,
    },
    /// Brute-force count, or every coloring with --list.
    Oracle {
        graph: PathBuf,
        #[arg(long)]
        list: bool,
    },
    /// Slice a map into a word. Without --seed the slicing is the
    /// deterministic leftmost one.
    Slice {
        graph: PathBuf,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Evaluate a word: a scalar for closed words, else a state.
    EvalWord {
        word: PathBuf,
        /// Input color string for words with input legs (`-` for none).
        #[arg(long)]
        input: Option<String>,
    },
    /// Count matrix of a word as `<output> <input> <count>` triples.
    Matrix { word: PathBuf },
    /// The face 4-coloring of the idx-th coloring in --list order.
    Faces {
        graph: PathBuf,
        #[arg(long)]
        coloring: usize,
    },
    /// Decide w1 = w2 where possible: `equal` plus a certificate,
    /// `unequal`, or `unknown`.
    WordEq(WordArgs),
    /// Search for a rewrite certificate only.
    Cobord(WordArgs),
    /// Run every invariant check on one map.
    Verify {
        graph: PathBuf,
        #[arg(long, default_value_t = 5)]
        seeds: u64,
    },
    /// Count random genus-0 maps; timings go to stderr.
    Bench {
        #[arg(long)]
        vertices: usize,
        #[arg(long, default_value_t = 1)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        rng_seed: u64,
    },
}

#[derive(clap::Args)]
struct WordArgs {
    presentation: PathBuf,
    w1: String,
    w2: String,
    #[arg(long, default_value_t = 6)]
    depth: usize,
    /// Longest intermediate word (default: 4 x the longest input or relator).
    #[arg(long)]
    maxlen: Option<usize>,
}

type Result<T> = std::result::Result<T, Box<dyn Error>>;

#[derive(Debug, thiserror::Error)]
#[error("IoError: {path}: {source}")]
struct IoError {
    path: String,
    source: std::io::Error,
}

#[derive(Debug, thiserror::Error)]
#[error("{0}")]
struct Domain(String);

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| IoError { path: path.display().to_string(), source }.into())
}

fn load_graph(path: &Path) -> Result<EmbeddedGraph> {
    Ok(parse_graph(&read(path)?)?)
}

fn load_word(path: &Path) -> Result<MorphismWord> {
    Ok(parse_word(&read(path)?)?)
}

fn run(cli: Cli) -> Result<String> {
    let mut out = String::new();
    match cli.command {
        Command::Count { graph, stats } => {
            let g = load_graph(&graph)?;
            let (n, st) = evaluate_closed_with_stats(&slice(&g)?)?;
            if stats {
                eprintln!("peak_support {} peak_width {}", st.peak_support, st.peak_width);
            }
            writeln!(out, "{n}")?;
        }
        Command::Oracle { graph, list } => {
            let g = load_graph(&graph)?;
            let all = parallel::enumerate_colorings_par(&g);
            if list {
                for c in &all {
                    writeln!(out, "{c}")?;
                }
            } else {
                writeln!(out, "{}", all.len())?;
            }
        }
        Command::Slice { graph, seed } => {
            let g = load_graph(&graph)?;
            let w = match seed {
                Some(s) => reslice_distinct(&g, s)?,
                None => slice(&g)?,
            };
            writeln!(out, "{}", serialize_word(&w))?;
        }
        Command::EvalWord { word, input } => {
            let w = load_word(&word)?;
            let colors = match input.as_deref() {
                Some(s) => {
                    parse_color_string(s).ok_or_else(|| Domain(format!("ParseError: bad color string `{s}`")))?
                }
                None => Vec::new(),
            };
            let s = evaluate_state(&w, &StateVector::basis(colors))?;
            if s.width() == 0 {
                writeln!(out, "{}", s.scalar())?;
            } else {
                out.push_str(&state_lines(&s));
            }
        }
        Command::Matrix { word } => {
            let w = load_word(&word)?;
            out.push_str(&matrix_triples(&parallel::evaluate_matrix_par(&w)?));
        }
        Command::Faces { graph, coloring } => {
            let g = load_graph(&graph)?;
            let all = parallel::enumerate_colorings_par(&g);
            let col = all
                .get(coloring)
                .ok_or_else(|| Domain(format!("NoSuchColoring: index {coloring}, graph has {}", all.len())))?;
            writeln!(out, "{}", tait_face_coloring(&g, col)?)?;
        }
        Command::WordEq(a) => {
            let (p, w1, w2, maxlen) = word_inputs(&a)?;
            match decide(&p, &w1, &w2, a.depth, maxlen)? {
                Verdict::Equal(cert) => {
                    writeln!(out, "equal")?;
                    out.push_str(&cert.render(p.generators()));
                }
                Verdict::Unequal => writeln!(out, "unequal")?,
                Verdict::Unknown => writeln!(out, "unknown")?,
            }
        }
        Command::Cobord(a) => {
            let (p, w1, w2, maxlen) = word_inputs(&a)?;
            match tait_core::bounded_cobordism_search(&p, &w1, &w2, a.depth, maxlen)? {
                Some(cert) => out.push_str(&cert.render(p.generators())),
                None => writeln!(out, "unknown")?,
            }
        }
        Command::Verify { graph, seeds } => {
            let g = load_graph(&graph)?;
            let checks = verify::run_battery(&g, seeds)?;
            for c in &checks {
                writeln!(out, "{c}")?;
            }
            let failed = checks.iter().filter(|c| !c.ok).count();
            if failed > 0 {
                print!("{out}");
                return Err(Domain(format!("VerifyFailed: {failed} checks failed")).into());
            }
        }
        Command::Bench { vertices, samples, rng_seed } => {
            let results = bench::run(vertices, samples, rng_seed)?;
            for s in &results {
                writeln!(out, "{s}")?;
                eprintln!("sample {}: {:.3} s", s.index, s.elapsed.as_secs_f64());
            }
            let agree = results.iter().filter(|s| s.agree).count();
            writeln!(out, "agree {agree}/{}", results.len())?;
        }
    }
    Ok(out)
}

fn word_inputs(a: &WordArgs) -> Result<(tait_core::GroupPresentation, tait_core::Word, tait_core::Word, usize)> {
    let p = parse_presentation(&read(&a.presentation)?)?;
    let w1 = presentation::parse_word(&p, &a.w1)?;
    let w2 = presentation::parse_word(&p, &a.w2)?;
    let maxlen = a.maxlen.unwrap_or_else(|| default_max_length(&p, &w1, &w2));
    Ok((p, w1, w2, maxlen))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(cli.threads).build_global() {
        eprintln!("ThreadPool: {e}");
        return ExitCode::from(1);
    }
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(1)
        }
    }
}
