//! Command-line front end.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bbs::{
    box_label_carrier, carrier_trace, evolve, format_letter, format_load, q_evolve, reverse_step,
    Algorithm, Carrier, PassStep, State,
};
use crate::notation::{parse_state, render_range, Notation};
use crate::rsk::{rsk, BiWord};
use crate::tableau::Tableau;
use crate::verify::{check_random, check_state, Report};
use crate::{Color, Label, Letter};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: io::Error,
    },
    #[error("{context}: {source}")]
    Core {
        context: String,
        #[source]
        source: crate::Error,
    },
}

#[derive(Debug, Parser)]
#[command(
    name = "boxball",
    version,
    about = "Box-ball systems and their RSK symbols"
)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the trajectory of a state.
    Evolve(EvolveArgs),
    /// Print the bi-word of a state, its dual, and the P and Q symbols.
    Rsk(SymbolArgs),
    /// Print the Q-symbols of successive times, computed from the first one.
    Qsymbol(QsymbolArgs),
    /// Print the dual bi-word of a state.
    Dual(SymbolArgs),
    /// Print one carrier pass step by step.
    Trace(TraceArgs),
    /// Check the invariants on fixture states and random instances.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Args)]
pub struct Io {
    /// Input file; standard input if absent or `-`.
    pub input: Option<PathBuf>,
    /// Output file; standard output if absent.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
    /// Number of colors; by default the largest color present.
    #[arg(short = 'n', long)]
    pub colors: Option<Color>,
}

#[derive(Debug, Clone, Args)]
pub struct EvolveArgs {
    #[command(flatten)]
    pub io: Io,
    #[arg(short, long, default_value_t = 1)]
    pub steps: usize,
    /// Also show this many earlier times, computed by the reverse step.
    #[arg(long, default_value_t = 0)]
    pub back: usize,
    #[arg(short, long, value_enum, default_value_t = AlgorithmArg::Original)]
    pub algorithm: AlgorithmArg,
    #[arg(long, value_enum, default_value_t = NotationArg::Compact)]
    pub notation: NotationArg,
    /// First box shown; by default the leftmost box of any time.
    #[arg(long, allow_hyphen_values = true)]
    pub from: Option<Label>,
    /// Last box shown; by default the rightmost box of any time.
    #[arg(long, allow_hyphen_values = true)]
    pub to: Option<Label>,
    /// Symbol for a vacancy; `_` in compact and `e` in walled notation.
    #[arg(long)]
    pub vacancy: Option<char>,
    #[arg(long, value_enum, default_value_t = Prefix::None)]
    pub prefix: Prefix,
}

#[derive(Debug, Clone, Args)]
pub struct SymbolArgs {
    #[command(flatten)]
    pub io: Io,
    /// Read a two-line bi-word instead of a state.
    #[arg(long)]
    pub biword: bool,
}

#[derive(Debug, Clone, Args)]
pub struct QsymbolArgs {
    #[command(flatten)]
    pub io: Io,
    #[arg(short, long, default_value_t = 1)]
    pub steps: usize,
}

#[derive(Debug, Clone, Args)]
pub struct TraceArgs {
    #[command(flatten)]
    pub io: Io,
    #[arg(long, value_enum, default_value_t = TraceMode::Slots)]
    pub mode: TraceMode,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    /// Files of states, one per line.
    pub fixtures: Vec<PathBuf>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Random states, bi-words, twin pairs and words to generate.
    #[arg(long, default_value_t = 100)]
    pub cases: usize,
    /// Steps checked from every state.
    #[arg(short, long, default_value_t = 10)]
    pub steps: usize,
    #[arg(short = 'n', long)]
    pub colors: Option<Color>,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AlgorithmArg {
    Original,
    Carrier,
}

impl From<AlgorithmArg> for Algorithm {
    fn from(a: AlgorithmArg) -> Self {
        match a {
            AlgorithmArg::Original => Algorithm::Original,
            AlgorithmArg::Carrier => Algorithm::Carrier,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum NotationArg {
    Compact,
    Walled,
}

impl From<NotationArg> for Notation {
    fn from(n: NotationArg) -> Self {
        match n {
            NotationArg::Compact => Notation::Compact,
            NotationArg::Walled => Notation::Walled,
        }
    }
}

/// Line labels for `evolve`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Prefix {
    None,
    /// `time:1 `, `time:2 `, ... from the first line shown.
    Time,
    /// `Time  t :` on the input state, `Time t+1:` on the next, blanks elsewhere.
    Timeline,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TraceMode {
    /// Ball colors and vacancies slot by slot, through a carrier of `e`s.
    Slots,
    /// Box labels of the balls, through a carrier of vacant labels.
    Labels,
}

/// Runs a command, reading input from `stdin` when no file is given and
/// writing to `stdout` when no output file is given. Returns whether every
/// check passed; only `verify` can report failure this way.
pub fn run(
    config: &RunConfig,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
) -> Result<bool, CliError> {
    let (text, output) = match &config.command {
        Command::Evolve(a) => (cmd_evolve(a, &read_state(&a.io, stdin)?)?, &a.io.output),
        Command::Rsk(a) => (cmd_rsk(&read_biword(a, stdin)?), &a.io.output),
        Command::Dual(a) => (read_biword(a, stdin)?.dual().to_string(), &a.io.output),
        Command::Qsymbol(a) => (cmd_qsymbol(a, &read_state(&a.io, stdin)?)?, &a.io.output),
        Command::Trace(a) => (cmd_trace(a, &read_state(&a.io, stdin)?)?, &a.io.output),
        Command::Verify(a) => {
            let report = cmd_verify(a)?;
            emit(&report.to_string(), &a.output, stdout)?;
            return Ok(report.all_passed());
        }
    };
    emit(&text, output, stdout)?;
    Ok(true)
}

fn emit(text: &str, output: &Option<PathBuf>, stdout: &mut dyn Write) -> Result<(), CliError> {
    match output {
        Some(path) => fs::write(path, text).map_err(|e| io_error(path, e)),
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|e| io_error(Path::new("<stdout>"), e)),
    }
}

fn io_error(path: &Path, source: io::Error) -> CliError {
    CliError::Io {
        path: path.display().to_string(),
        source,
    }
}

fn core_error(context: &str) -> impl FnOnce(crate::Error) -> CliError + '_ {
    move |source| CliError::Core {
        context: context.to_string(),
        source,
    }
}

fn read_input(input: &Option<PathBuf>, stdin: &mut dyn Read) -> Result<(String, String), CliError> {
    match input {
        Some(path) if path.as_os_str() != "-" => {
            let text = fs::read_to_string(path).map_err(|e| io_error(path, e))?;
            Ok((text, path.display().to_string()))
        }
        _ => {
            let mut text = String::new();
            stdin
                .read_to_string(&mut text)
                .map_err(|e| io_error(Path::new("<stdin>"), e))?;
            Ok((text, "<stdin>".to_string()))
        }
    }
}

/// Lines holding states: blank lines and `#` comments are skipped.
fn state_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
        .map(|(i, l)| (i + 1, l))
}

fn read_state(io: &Io, stdin: &mut dyn Read) -> Result<State, CliError> {
    let (text, name) = read_input(&io.input, stdin)?;
    let first = state_lines(&text).next();
    match first {
        Some((line, body)) => {
            parse_state(body, io.colors).map_err(core_error(&format!("{name}:{line}")))
        }
        None => parse_state("", io.colors).map_err(core_error(&name)),
    }
}

fn read_biword(args: &SymbolArgs, stdin: &mut dyn Read) -> Result<BiWord, CliError> {
    if !args.biword {
        return Ok(read_state(&args.io, stdin)?.to_biword());
    }
    let (text, name) = read_input(&args.io.input, stdin)?;
    text.parse::<BiWord>().map_err(core_error(&name))
}

fn cmd_evolve(args: &EvolveArgs, s: &State) -> Result<String, CliError> {
    let notation = Notation::from(args.notation);
    let algorithm = Algorithm::from(args.algorithm);

    let mut past = vec![s.clone()];
    for _ in 0..args.back {
        let earlier = reverse_step(past.last().expect("starts nonempty"));
        past.push(earlier);
    }
    past.reverse();
    let mut states = past;
    states.extend(evolve(s, args.steps, algorithm).into_iter().skip(1));

    let (lo, hi) = match (args.from, args.to) {
        (Some(lo), Some(hi)) => (lo, hi),
        (from, to) => {
            let (lo, hi) = span(&states, notation);
            (from.unwrap_or(lo), to.unwrap_or(hi))
        }
    };
    let vacancy = args.vacancy.unwrap_or(match notation {
        Notation::Compact => '_',
        Notation::Walled => 'e',
    });

    let mut out = String::new();
    for (i, st) in states.iter().enumerate() {
        match args.prefix {
            Prefix::None => {}
            Prefix::Time => out.push_str(&format!("time:{} ", i + 1)),
            Prefix::Timeline => out.push_str(match i.checked_sub(args.back) {
                Some(0) => "Time  t :",
                Some(1) => "Time t+1:",
                _ => "         ",
            }),
        }
        if lo <= hi {
            let line = render_range(st, notation, lo, hi, vacancy).map_err(core_error("render"))?;
            out.push_str(&line);
        }
        out.push('\n');
    }
    Ok(out)
}

/// Boxes covering every state, as the canonical rendering would choose them.
fn span(states: &[State], notation: Notation) -> (Label, Label) {
    let occupied = states
        .iter()
        .flat_map(|s| s.first_label().into_iter().chain(s.last_label()));
    let labels: Vec<Label> = match notation {
        Notation::Compact => occupied.chain([0]).collect(),
        Notation::Walled => occupied
            .chain(
                states
                    .iter()
                    .flat_map(|s| s.capacities().explicit().map(|(j, _)| j)),
            )
            .collect(),
    };
    let lo = labels.iter().copied().min().unwrap_or(1);
    let hi = labels.iter().copied().max().unwrap_or(0);
    // a compact line with no balls anywhere is empty
    if notation == Notation::Compact && states.iter().all(State::is_empty) {
        return (0, -1);
    }
    (lo, hi)
}

fn section(out: &mut String, title: &str, body: &str) {
    if !out.is_empty() {
        out.push('\n');
    }
    out.push_str(title);
    out.push('\n');
    out.push_str(body);
}

fn cmd_rsk(bw: &BiWord) -> String {
    let (p, q) = rsk(bw);
    let mut out = String::new();
    section(&mut out, "w:", &bw.to_string());
    section(&mut out, "w*:", &bw.dual().to_string());
    section(&mut out, "P:", &p.to_string());
    section(&mut out, "Q:", &q.to_string());
    out
}

fn cmd_qsymbol(args: &QsymbolArgs, s: &State) -> Result<String, CliError> {
    let trajectory = evolve(s, args.steps, Algorithm::Original);
    let mut q: Tableau = s.q_symbol();
    let mut out = String::new();
    for (t, st) in trajectory.iter().enumerate() {
        section(&mut out, &format!("t+{t}:"), &q.to_string());
        if t < args.steps {
            q = q_evolve(&q, st).map_err(core_error("q_evolve"))?;
        }
    }
    Ok(out)
}

fn cmd_trace(args: &TraceArgs, s: &State) -> Result<String, CliError> {
    let Some((p, q)) = s.window() else {
        return Ok(String::new());
    };
    let (carrier, word, sentinel) = match args.mode {
        TraceMode::Slots => {
            let e = s.sentinel();
            let word: Vec<Letter> = s
                .slots(p, q)
                .iter()
                .map(|c| c.ball.map_or(e, Letter::from))
                .collect();
            (Carrier::filled(e, s.ball_count()), word, Some(e))
        }
        TraceMode::Labels => (
            box_label_carrier(s).map_err(core_error("carrier"))?,
            s.box_label_sequence(),
            None,
        ),
    };
    let (steps, last) = carrier_trace(&carrier, &word).map_err(core_error("carrier"))?;
    Ok(chain(&steps, &last, &word, sentinel))
}

/// One line per exchange: the letters already passed, the carrier, and the
/// letters still to come, followed by a table of loaded and unloaded letters.
fn chain(steps: &[PassStep], last: &Carrier, word: &[Letter], sentinel: Option<Letter>) -> String {
    let letters = |xs: &[Letter]| -> String {
        xs.iter()
            .map(|&x| format_letter(x, sentinel))
            .collect::<Vec<_>>()
            .join(" ")
    };
    let joined = |parts: [&str; 3]| -> String {
        parts
            .iter()
            .filter(|p| !p.is_empty())
            .copied()
            .collect::<Vec<_>>()
            .join(" ")
    };
    let passed: Vec<Letter> = steps.iter().map(|st| st.unloaded).collect();
    let mut out = String::new();
    for (k, st) in steps.iter().enumerate() {
        let lead = if k == 0 { "  " } else { "~ " };
        let load = format_load(st.before.load(), sentinel);
        out.push_str(&format!(
            "{lead}{}\n",
            joined([&letters(&passed[..k]), &load, &letters(&word[k..])])
        ));
    }
    let lead = if steps.is_empty() { "  " } else { "~ " };
    out.push_str(&format!(
        "{lead}{}\n",
        joined([&letters(&passed), &format_load(last.load(), sentinel), ""])
    ));
    out.push_str("\nk\tcarrier\tload\tunload\n");
    for (k, st) in steps.iter().enumerate() {
        out.push_str(&format!(
            "{}\t{}\t{}\t{}\n",
            k + 1,
            format_load(st.before.load(), sentinel),
            format_letter(st.loaded, sentinel),
            format_letter(st.unloaded, sentinel),
        ));
    }
    out
}

fn cmd_verify(args: &VerifyArgs) -> Result<Report, CliError> {
    let mut report = Report::default();
    for path in &args.fixtures {
        let text = fs::read_to_string(path).map_err(|e| io_error(path, e))?;
        for (line, body) in state_lines(&text) {
            let context = format!("{}:{line}", path.display());
            let s = parse_state(body, args.colors).map_err(core_error(&context))?;
            check_state(&mut report, &s, args.steps);
        }
    }
    check_random(&mut report, args.seed, args.cases, args.steps);
    Ok(report)
}
