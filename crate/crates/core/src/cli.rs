//! Command-line front end. [`run`] parses arguments and returns the text
//! and exit status instead of touching the process, so it can be driven
//! from tests.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand};

use crate::arith::Natural;
use crate::error::{Error, Result};
use crate::guesser::{guess_recurrence, GuessQuery};
use crate::oracle::{count_full_game_playouts, enumerate_gamma_sequences, GameConfig};
use crate::output::{render, OutputFormat};
use crate::sequences::{g_by_sum, g_run, GMethod, SequenceRun};
use crate::stirling::{e_multinomial, e_table_vertical};
use crate::verify::run_verification;

/// Largest gift count for which `oracle --list` prints the sequences.
pub const ORACLE_LIST_MAX_GIFTS: u32 = 3;

#[derive(Debug, Parser)]
#[command(name = "giftcount", version, about = "Exact counts for the gift-exchange game")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print G_sigma(0..=nmax).
    G {
        #[arg(long)]
        sigma: u32,
        #[arg(long)]
        nmax: u32,
        #[arg(long, default_value = "sum")]
        method: GMethod,
        #[arg(long, default_value = "plain")]
        format: OutputFormat,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Index printed for the first term.
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        offset: i64,
    },
    /// Print E_sigma(n, k), or the row k = n..=(sigma+1)n when k is omitted.
    E {
        #[arg(long)]
        sigma: u32,
        #[arg(long)]
        n: u32,
        #[arg(long, allow_hyphen_values = true)]
        k: Option<i64>,
        #[arg(long)]
        format: Option<OutputFormat>,
    },
    /// Run the cross-method verification suite.
    Verify {
        #[arg(long)]
        sigma: u32,
        #[arg(long, default_value_t = 20)]
        nmax: u32,
        /// Also run the brute-force game and partition oracles.
        #[arg(long)]
        deep: bool,
    },
    /// Count full-game playouts H_sigma(gifts) by simulation.
    Oracle {
        #[arg(long)]
        sigma: u32,
        #[arg(long)]
        gifts: u32,
        /// List the steal sequences for gifts - 1 players' worth of gifts.
        #[arg(long)]
        list: bool,
    },
    /// Guess a recurrence from the first `terms` values of G_sigma.
    Guess {
        #[arg(long)]
        sigma: u32,
        #[arg(long)]
        terms: usize,
        #[arg(long)]
        max_order: usize,
        #[arg(long)]
        max_degree: usize,
        /// Held-out terms; defaults to what the budget leaves, at most 10.
        #[arg(long)]
        guard: Option<usize>,
        /// Use a constant sequence instead of G_sigma.
        #[arg(long)]
        demo_constant: bool,
    },
    /// Time several methods and check that they agree.
    Bench {
        #[arg(long)]
        sigma: u32,
        #[arg(long)]
        nmax: u32,
        #[arg(long, value_delimiter = ',', required = true)]
        methods: Vec<GMethod>,
        #[arg(long, default_value_t = 1)]
        repeat: u32,
    },
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: 0, stdout, stderr: String::new() }
    }

    fn from_error(e: &Error) -> Self {
        Outcome { code: e.exit_code(), stdout: String::new(), stderr: format!("error: {e}\n") }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: 2, stdout: String::new(), stderr: text }
            } else {
                Outcome::ok(text)
            };
        }
    };
    match dispatch(cli.command) {
        Ok(o) => o,
        Err(e) => Outcome::from_error(&e),
    }
}

fn dispatch(cmd: Command) -> Result<Outcome> {
    match cmd {
        Command::G { sigma, nmax, method, format, out, offset } => {
            let run = g_run(method, sigma, nmax)?;
            let text = render(&run.values, offset, format);
            match out {
                Some(path) => {
                    std::fs::write(&path, text).map_err(|e| {
                        Error::Precondition(format!("cannot write {}: {e}", path.display()))
                    })?;
                    Ok(Outcome::ok(String::new()))
                }
                None => Ok(Outcome::ok(text)),
            }
        }
        Command::E { sigma, n, k, format } => cmd_e(sigma, n, k, format),
        Command::Verify { sigma, nmax, deep } => {
            let report = run_verification(sigma, nmax, deep);
            let code = if report.all_passed() { 0 } else { 1 };
            Ok(Outcome { code, stdout: report.render(), stderr: String::new() })
        }
        Command::Oracle { sigma, gifts, list } => cmd_oracle(sigma, gifts, list),
        Command::Guess { sigma, terms, max_order, max_degree, guard, demo_constant } => {
            cmd_guess(sigma, terms, max_order, max_degree, guard, demo_constant)
        }
        Command::Bench { sigma, nmax, methods, repeat } => cmd_bench(sigma, nmax, &methods, repeat),
    }
}

fn cmd_e(sigma: u32, n: u32, k: Option<i64>, format: Option<OutputFormat>) -> Result<Outcome> {
    if let Some(k) = k {
        return Ok(Outcome::ok(format!("{}\n", e_multinomial(sigma, n as i64, k))));
    }
    let table = e_table_vertical(sigma, n)?;
    let lo = n as i64;
    let hi = (sigma as i64 + 1) * n as i64;
    let row: Vec<Natural> = (lo..=hi).map(|k| table.get(n as i64, k)).collect();
    let text = match format {
        Some(f) => render(&row, lo, f),
        None => {
            let words: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            format!("{}\n", words.join(" "))
        }
    };
    Ok(Outcome::ok(text))
}

fn cmd_oracle(sigma: u32, gifts: u32, list: bool) -> Result<Outcome> {
    if list && gifts > ORACLE_LIST_MAX_GIFTS {
        return Err(Error::Guard {
            guard: "oracle_list_gifts",
            requested: gifts as u64,
            limit: ORACLE_LIST_MAX_GIFTS as u64,
        });
    }
    let h = count_full_game_playouts(GameConfig::new(sigma, gifts)?)?;
    let mut out = format!("{h}\n");
    if list {
        for seq in enumerate_gamma_sequences(sigma, gifts - 1)? {
            let _ = writeln!(out, "{seq}");
        }
    }
    Ok(Outcome::ok(out))
}

fn cmd_guess(
    sigma: u32,
    terms: usize,
    max_order: usize,
    max_degree: usize,
    guard: Option<usize>,
    demo_constant: bool,
) -> Result<Outcome> {
    let base = GuessQuery::terms_needed(max_order, max_degree, 0);
    let guard = guard.unwrap_or_else(|| terms.saturating_sub(base).min(10));
    let values = if demo_constant {
        vec![Natural::from(1u32); terms]
    } else {
        if terms == 0 {
            return Err(Error::InsufficientTerms { need: base, have: 0 });
        }
        g_by_sum(sigma, terms as u32 - 1)?.values
    };
    let q = GuessQuery::new(values, max_order, max_degree, guard)?;
    let text = match guess_recurrence(&q)? {
        Some(spec) => format!("{spec}\n"),
        None => "NONE\n".to_string(),
    };
    Ok(Outcome::ok(text))
}

/// First disagreement among runs: the two method names and the index.
pub fn first_disagreement(runs: &[SequenceRun]) -> Option<(String, String, usize)> {
    let (first, rest) = runs.split_first()?;
    for other in rest {
        let len = first.values.len().max(other.values.len());
        if let Some(n) = (0..len).find(|&n| first.values.get(n) != other.values.get(n)) {
            return Some((first.method.to_string(), other.method.to_string(), n));
        }
    }
    None
}

fn cmd_bench(sigma: u32, nmax: u32, methods: &[GMethod], repeat: u32) -> Result<Outcome> {
    let mut stdout = String::new();
    let mut stderr = String::new();
    let mut runs = Vec::with_capacity(methods.len());
    for &m in methods {
        let mut best = Duration::MAX;
        let mut last = None;
        for _ in 0..repeat.max(1) {
            let t = Instant::now();
            let run = g_run(m, sigma, nmax)?;
            best = best.min(t.elapsed());
            last = Some(run);
        }
        let run = last.expect("at least one repetition");
        let _ = writeln!(stderr, "{m}: {:.3} ms", best.as_secs_f64() * 1e3);
        let _ = writeln!(stdout, "{m}: peak_bits {}", run.peak_bits());
        runs.push(run);
    }
    match first_disagreement(&runs) {
        None => {
            let _ = writeln!(stdout, "agree: {} methods, n = 0..={nmax}", runs.len());
            Ok(Outcome { code: 0, stdout, stderr })
        }
        Some((a, b, n)) => {
            let _ = writeln!(stderr, "error: {a} and {b} disagree at n = {n}");
            Ok(Outcome { code: 1, stdout, stderr })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequences::Method;

    fn run_args(s: &str) -> Outcome {
        run(std::iter::once("giftcount").chain(s.split_whitespace()))
    }

    #[test]
    fn g_plain_and_bfile() {
        assert_eq!(run_args("g --sigma 1 --nmax 4 --format plain").stdout, "1\n2\n7\n37\n266\n");
        assert_eq!(run_args("g --sigma 2 --nmax 2 --format bfile").stdout, "0 1\n1 3\n2 31\n");
        assert_eq!(run_args("g --sigma 0 --nmax 5").stdout, "1\n".repeat(6));
    }

    #[test]
    fn e_row_and_cells() {
        assert_eq!(run_args("e --sigma 1 --n 2").stdout, "1 3 3\n");
        assert_eq!(run_args("e --sigma 2 --n 3 --k 9").stdout, "280\n");
        assert_eq!(run_args("e --sigma 2 --n 3 --k 2").stdout, "0\n");
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(run_args("g --sigma 1").code, 2);
        assert_eq!(run_args("g --sigma 1 --nmax 3 --method bogus").code, 2);
        assert_eq!(run_args("g --sigma 1 --nmax 9 --method multinomial").code, 2);
        assert_eq!(run_args("--help").code, 0);
    }

    #[test]
    fn disagreement_is_located() {
        let mk = |v: &[u64], m: Method| SequenceRun {
            sigma: 1,
            values: v.iter().map(|&x| Natural::from(x)).collect(),
            method: m,
        };
        let a = mk(&[1, 2, 7], Method::Sum);
        let b = mk(&[1, 2, 8], Method::Moments);
        assert_eq!(first_disagreement(&[a.clone(), a.clone()]), None);
        assert_eq!(
            first_disagreement(&[a.clone(), b]),
            Some(("sum".into(), "moments".into(), 2))
        );
        assert_eq!(first_disagreement(&[a.clone(), mk(&[1, 2], Method::Oracle)]).unwrap().2, 2);
        assert_eq!(first_disagreement(&[]), None);
    }
}
