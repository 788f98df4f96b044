//! Command-line interface.
//!
//! Exit codes: 0 on success, 1 when a property is falsified or the input
//! automaton is not synchronizing, 2 on input or parse errors.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::automata::{Acceptor, Semiautomaton};
use crate::error::Error;
use crate::factors::{analyze_missing_factors, factor_counts, find_missing_factor, MissingFactorReport};
use crate::io::{
    acceptor_to_dot, parse_aut, parse_words, semiautomaton_to_dot, serialize_acceptor, serialize_semiautomaton, AutFile,
};
use crate::reset::{is_ideal, minimal_words_recognizer, syn_recognizer, sync_report, SyncReport};
use crate::tail::{construct_tail_automaton, lifted_explore, state_bound, GeneratorSet, LiftedTarget};
use crate::verify::{default_bound, render_verdict, verify_syn_equals_ideal, Mode, DEFAULT_BUDGET};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSIFIED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "syncideal", version, about = "Synchronizing automata and ideals of reset words")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct GeneratorSource {
    /// Word list of generators.
    #[arg(long)]
    words: Option<PathBuf>,
    /// Acceptor (.aut) of the generators.
    #[arg(long)]
    dfa: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Synchronization report and missing-factor bounds of a semiautomaton.
    Analyze {
        file: PathBuf,
        #[arg(long)]
        json: bool,
        /// Longest missing factor searched for.
        #[arg(long, default_value_t = 4)]
        max_len: usize,
    },
    /// Minimal acceptor of the reset words.
    Syn {
        file: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Minimal acceptor of the minimal reset words (or of the minimal words
    /// of an ideal given as an acceptor).
    Minwords {
        file: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Shortest missing factor of a language.
    Factors {
        #[arg(required_unless_present = "words", conflicts_with = "words")]
        file: Option<PathBuf>,
        #[arg(long)]
        words: Option<PathBuf>,
        #[arg(long, default_value_t = 4)]
        max_len: usize,
    },
    /// Build the tail structure automaton of Σ*MΣ*.
    Construct {
        #[command(flatten)]
        source: GeneratorSource,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Explore the maximal lifted automaton to a given depth.
    Lifted {
        #[command(flatten)]
        source: GeneratorSource,
        #[arg(long)]
        depth: usize,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Check that the reset words of an automaton are exactly Σ*MΣ*.
    Verify {
        file: PathBuf,
        #[command(flatten)]
        source: GeneratorSource,
        #[arg(long, conflicts_with = "bound")]
        exact: bool,
        #[arg(long)]
        bound: Option<usize>,
    },
    /// Graphviz rendering of an automaton.
    Dot {
        file: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
}

/// A failure with its exit code.
struct Exit(i32, String);

impl From<Error> for Exit {
    fn from(e: Error) -> Self {
        Exit(EXIT_INPUT, e.to_string())
    }
}

type CliResult = Result<i32, Exit>;

fn read(path: &Path) -> Result<String, Exit> {
    fs::read_to_string(path).map_err(|e| Exit(EXIT_INPUT, format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Exit> {
    fs::write(path, text).map_err(|e| Exit(EXIT_INPUT, format!("{}: {e}", path.display())))
}

fn load_aut(path: &Path) -> Result<AutFile, Exit> {
    parse_aut(&read(path)?).map_err(|e| Exit(EXIT_INPUT, format!("{}: {e}", path.display())))
}

fn load_generators(source: &GeneratorSource) -> Result<Acceptor, Exit> {
    match (&source.words, &source.dfa) {
        (Some(path), _) => {
            let (alphabet, words) =
                parse_words(&read(path)?).map_err(|e| Exit(EXIT_INPUT, format!("{}: {e}", path.display())))?;
            Ok(Acceptor::from_words(alphabet, &words)?)
        }
        (None, Some(path)) => Ok(load_aut(path)?.into_acceptor()?),
        (None, None) => Err(Exit(EXIT_INPUT, "one of --words or --dfa is required".into())),
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = if code == EXIT_OK { write!(out, "{e}") } else { write!(err, "{e}") };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(Exit(code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}

#[derive(Serialize)]
struct AnalyzeJson {
    sync: SyncReport,
    missing_factor: Option<MissingFactorReport>,
}

fn dispatch(command: Command, out: &mut dyn Write) -> CliResult {
    match command {
        Command::Analyze { file, json, max_len } => analyze(&file, json, max_len, out),
        Command::Syn { file, out: path } => {
            let a = load_aut(&file)?.into_semiautomaton()?;
            let syn = syn_recognizer(&a);
            write(&path, &serialize_acceptor(&syn))?;
            emit(out, format!("Syn recognizer: {} states -> {}", syn.n(), path.display()))?;
            Ok(EXIT_OK)
        }
        Command::Minwords { file, out: path } => {
            let ideal = match load_aut(&file)? {
                AutFile::Semiautomaton(a) => syn_recognizer(&a),
                AutFile::Acceptor(d) => d,
            };
            if !is_ideal(&ideal) {
                return Err(Exit(EXIT_INPUT, "input acceptor does not recognize an ideal".into()));
            }
            let m = minimal_words_recognizer(&ideal)?;
            write(&path, &serialize_acceptor(&m))?;
            emit(out, format!("minimal words: {} states -> {}", m.n(), path.display()))?;
            Ok(EXIT_OK)
        }
        Command::Factors { file, words, max_len } => {
            let m = match (file, words) {
                (_, Some(path)) => load_generators(&GeneratorSource { words: Some(path), dfa: None })?,
                (Some(path), None) => match load_aut(&path)? {
                    AutFile::Acceptor(d) => d,
                    AutFile::Semiautomaton(a) => minimal_words_recognizer(&syn_recognizer(&a))?,
                },
                (None, None) => unreachable!("clap enforces a source"),
            };
            factors(&m, max_len, out)
        }
        Command::Construct { source, out: path, dot } => {
            let gens = GeneratorSet::new(&load_generators(&source)?)?;
            let tail = construct_tail_automaton(&gens)?;
            let a = &tail.automaton;
            write(&path, &serialize_semiautomaton(a))?;
            if let Some(dot) = dot {
                let labels: Vec<String> = tail.labels.iter().map(|l| l.render(gens.alphabet())).collect();
                write(&dot, &semiautomaton_to_dot(a, Some(&labels)))?;
            }
            let bound = state_bound(gens.k() as u32, gens.modulus() as u32, gens.b().n() as u32);
            emit(
                out,
                format!(
                    "tail automaton: {} states (k={}, m={}, n={}, bound={})\nseed word: {}\nwritten to {}",
                    a.n(),
                    gens.k(),
                    gens.m(),
                    gens.b().n(),
                    bound,
                    gens.alphabet().render(&tail.seed_word),
                    path.display()
                ),
            )?;
            Ok(EXIT_OK)
        }
        Command::Lifted { source, depth, dot } => {
            let gens = GeneratorSet::new(&load_generators(&source)?)?;
            let ex = lifted_explore(&gens, depth)?;
            let alpha = gens.alphabet();
            let mut text = format!("lifted exploration to depth {depth}: {} states\n", ex.states.len());
            for (i, s) in ex.states.iter().enumerate() {
                text.push_str(&format!("state {i} {}\n", s.render(alpha)));
            }
            for t in &ex.transitions {
                let target = match &t.target {
                    LiftedTarget::Explored(id) => id.to_string(),
                    LiftedTarget::Open(s) => format!("open {}", s.render(alpha)),
                };
                text.push_str(&format!("trans {} {} {}\n", t.from, alpha.symbol(t.letter), target));
            }
            if let Some(dot) = dot {
                write(&dot, &lifted_dot(&ex, alpha))?;
            }
            out.write_all(text.as_bytes()).map_err(io_exit)?;
            Ok(EXIT_OK)
        }
        Command::Verify { file, source, exact, bound } => {
            let a = load_aut(&file)?.into_semiautomaton()?;
            let m = load_generators(&source)?;
            let gens = GeneratorSet::new(&m)?;
            let verdict = match (exact, bound) {
                (_, Some(l)) => verify_syn_equals_ideal(&a, gens.b(), Mode::Bounded(l), DEFAULT_BUDGET)?,
                (true, None) => verify_syn_equals_ideal(&a, gens.b(), Mode::Exact, DEFAULT_BUDGET)?,
                (false, None) => match verify_syn_equals_ideal(&a, gens.b(), Mode::Exact, DEFAULT_BUDGET) {
                    Err(Error::BudgetExceeded { .. }) => {
                        verify_syn_equals_ideal(&a, gens.b(), Mode::Bounded(default_bound(gens.m())), DEFAULT_BUDGET)?
                    }
                    other => other?,
                },
            };
            emit(
                out,
                format!(
                    "states: {}\nstrongly connected: {}\n{}",
                    a.n(),
                    yes(a.is_strongly_connected()),
                    render_verdict(&verdict, a.alphabet())
                ),
            )?;
            Ok(if verdict.ok { EXIT_OK } else { EXIT_FALSIFIED })
        }
        Command::Dot { file, out: path } => {
            let text = match load_aut(&file)? {
                AutFile::Semiautomaton(a) => semiautomaton_to_dot(&a, None),
                AutFile::Acceptor(d) => acceptor_to_dot(&d, None),
            };
            write(&path, &text)?;
            Ok(EXIT_OK)
        }
    }
}

fn io_exit(e: std::io::Error) -> Exit {
    Exit(EXIT_INPUT, e.to_string())
}

fn emit(out: &mut dyn Write, text: String) -> Result<(), Exit> {
    writeln!(out, "{text}").map_err(io_exit)
}

fn analyze(file: &Path, json: bool, max_len: usize, out: &mut dyn Write) -> CliResult {
    let a: Semiautomaton = load_aut(file)?.into_semiautomaton()?;
    let sync = sync_report(&a);
    let missing = if sync.is_synchronizing { Some(analyze_missing_factors(&a, max_len)?) } else { None };
    let falsified =
        missing.as_ref().is_some_and(|r| r.bound_holds == Some(false)) || sync.bound_satisfied == Some(false);
    if json {
        let report = AnalyzeJson { sync: sync.clone(), missing_factor: missing.clone() };
        let text = serde_json::to_string_pretty(&report).map_err(|e| Exit(EXIT_INPUT, e.to_string()))?;
        emit(out, text)?;
    } else {
        let mut text = format!("states: {}\nstrongly connected: {}\n", sync.n, yes(sync.strongly_connected));
        match &sync.shortest_reset {
            None => text.push_str("not synchronizing\n"),
            Some(w) => {
                let len = sync.shortest_reset_length.unwrap_or(0);
                let sat = if sync.bound_satisfied == Some(true) { "satisfied" } else { "VIOLATED" };
                text.push_str(&format!(
                    "synchronizing: yes\nshortest reset word: {w} (length {len})\ncerny bound (n-1)^2: {} ({sat})\n",
                    sync.cerny_bound
                ));
            }
        }
        if let Some(r) = &missing {
            match (r.ell_star, &r.witness) {
                (Some(ell), Some(wit)) => {
                    let holds = if r.bound_holds == Some(true) { "holds" } else { "FALSIFIED" };
                    text.push_str(&format!(
                        "missing factor: length {ell}, witness {wit}\nreset length bound n(n-1)/2+2l: {} ({holds})\n\
                         cerny-range missing factor: {}\nquadratic-range missing factor: {} (bound {})\n",
                        r.missing_factor_bound.unwrap_or(0),
                        yes(r.cerny_applicable),
                        yes(r.quadratic_applicable),
                        r.quadratic_bound.as_deref().unwrap_or("-")
                    ));
                }
                _ => text.push_str(&format!("missing factor: none up to length {}\n", r.ell_max)),
            }
        }
        out.write_all(text.as_bytes()).map_err(io_exit)?;
    }
    Ok(if !sync.is_synchronizing || falsified { EXIT_FALSIFIED } else { EXIT_OK })
}

fn factors(m: &Acceptor, max_len: usize, out: &mut dyn Write) -> CliResult {
    let counts = factor_counts(m, max_len);
    let alpha = m.alphabet();
    let mut text = String::new();
    for (l, c) in counts.iter().enumerate().skip(1) {
        text.push_str(&format!("|Fact_{l}| = {c} of {}\n", num_bigint::BigUint::from(alpha.len()).pow(l as u32)));
    }
    match find_missing_factor(m, max_len) {
        Some((ell, w)) => text.push_str(&format!("l* = {ell}\nwitness: {}\n", alpha.render(&w))),
        None => text.push_str(&format!("no missing factor up to length {max_len}\n")),
    }
    out.write_all(text.as_bytes()).map_err(io_exit)?;
    Ok(EXIT_OK)
}

fn lifted_dot(ex: &crate::tail::LiftedExploration, alpha: &crate::alphabet::Alphabet) -> String {
    let mut text = String::from("digraph lifted {\n  rankdir=LR;\n  node [shape=box];\n");
    for (i, s) in ex.states.iter().enumerate() {
        text.push_str(&format!("  {i} [label=\"{}\"];\n", s.render(alpha)));
    }
    for t in &ex.transitions {
        match &t.target {
            LiftedTarget::Explored(id) => {
                text.push_str(&format!("  {} -> {id} [label=\"{}\"];\n", t.from, alpha.symbol(t.letter)))
            }
            LiftedTarget::Open(_) => text.push_str(&format!(
                "  open_{0}_{1} [shape=point];\n  {0} -> open_{0}_{1} [label=\"{2}\", style=dashed];\n",
                t.from,
                t.letter,
                alpha.symbol(t.letter)
            )),
        }
    }
    text.push_str("}\n");
    text
}
