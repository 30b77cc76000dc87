//! The `stdpuzzle` command line.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O error.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use crate::bijection::{denormalize_bjry_to_bgty, normalize_bgty_to_bjry};
use crate::count::{exact_support_count, profile, sequence, Oracle, DEFAULT_ORACLE_BOUND};
use crate::dictionary::{
    attach_oeis, census, emit_report, oeis_load, MatchOptions, Parallelism, ReportFormat,
};
use crate::error::{Error, Result};
use crate::puzzle::Puzzle;
use crate::support::{enumerate_connected_classes, Support};
use crate::verify::{run_suite, secant_ratio_table, CheckKind, Suite};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IO: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "stdpuzzle",
    version,
    about = "Count and classify standard 2 x n puzzles"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print |P^n| for a range of widths.
    Count(CountArgs),
    /// Print the boundary profile (X, Y, count) at width n.
    Profile(ProfileArgs),
    /// Sequence census of all connected classes of one size.
    Census(CensusArgs),
    /// Check counts against closed forms.
    Verify(VerifyArgs),
    /// Trace the BGTY to BJRY normalisation of a puzzle.
    Biject(BijectArgs),
    /// List the puzzles of P^n by exhaustive search.
    Enumerate(EnumerateArgs),
    /// List connected support classes of one size.
    Classes(ClassesArgs),
}

#[derive(Args, Debug)]
pub struct CountArgs {
    #[arg(long, short)]
    pub support: Support,
    /// Single width; overrides --from/--to.
    #[arg(long, short)]
    pub n: Option<usize>,
    #[arg(long, default_value_t = 2)]
    pub from: usize,
    #[arg(long, default_value_t = 12)]
    pub to: usize,
    /// Count puzzles whose minimal support is exactly P.
    #[arg(long)]
    pub exact: bool,
    #[arg(long, default_value = "text", value_parser = ["text", "json"])]
    pub format: String,
}

#[derive(Args, Debug)]
pub struct ProfileArgs {
    #[arg(long, short)]
    pub support: Support,
    #[arg(long, short)]
    pub n: usize,
}

#[derive(Args, Debug)]
pub struct CensusArgs {
    #[arg(long)]
    pub size: usize,
    /// Number of terms, starting at n = 2.
    #[arg(long, default_value_t = 11)]
    pub terms: usize,
    /// OEIS stripped dump (plain or gzip).
    #[arg(long, env = "STDPUZZLE_OEIS")]
    pub oeis: Option<PathBuf>,
    #[arg(long, default_value = "text")]
    pub format: ReportFormat,
    /// Worker threads; defaults to all cores.
    #[arg(long, conflicts_with = "serial", value_parser = clap::value_parser!(u64).range(1..))]
    pub jobs: Option<u64>,
    #[arg(long)]
    pub serial: bool,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, default_value = "all")]
    pub suite: Suite,
    #[arg(long, default_value_t = 8)]
    pub n_max: usize,
    /// Also fail on conjecture and identity mismatches or deviations.
    #[arg(long)]
    pub strict: bool,
    #[arg(long, default_value = "text", value_parser = ["text", "json"])]
    pub format: String,
}

#[derive(Args, Debug)]
pub struct BijectArgs {
    /// Puzzle literal "top,row/bottom,row".
    pub puzzle: Puzzle,
    /// Map a BJRY puzzle back to BGTY.
    #[arg(long)]
    pub inverse: bool,
}

#[derive(Args, Debug)]
pub struct EnumerateArgs {
    #[arg(long, short)]
    pub support: Support,
    #[arg(long, short)]
    pub n: usize,
    #[arg(long, default_value_t = DEFAULT_ORACLE_BOUND)]
    pub bound: usize,
}

#[derive(Args, Debug)]
pub struct ClassesArgs {
    #[arg(long)]
    pub size: usize,
    /// Also print every orbit member.
    #[arg(long)]
    pub members: bool,
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Io(_) | Error::EmptyOeisTable(_) => EXIT_IO,
        _ => EXIT_USAGE,
    }
}

pub fn main() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Count(a) => cmd_count(a, out),
        Command::Profile(a) => cmd_profile(a, out),
        Command::Census(a) => cmd_census(a, out, err),
        Command::Verify(a) => cmd_verify(a, out),
        Command::Biject(a) => cmd_biject(a, out),
        Command::Enumerate(a) => cmd_enumerate(a, out),
        Command::Classes(a) => cmd_classes(a, out),
    }
}

fn cmd_count(a: CountArgs, out: &mut dyn Write) -> Result<i32> {
    let (from, to) = a.n.map_or((a.from, a.to), |n| (n, n));
    let terms = if a.exact {
        if from < 2 || to < from {
            return Err(Error::WidthTooSmall {
                width: from.min(to),
                min: 2,
            });
        }
        (from..=to)
            .map(|n| exact_support_count(a.support, n))
            .collect::<Result<Vec<_>>>()?
    } else {
        sequence(a.support, from, to)?.terms
    };
    if a.format == "json" {
        let doc = json!({
            "support": a.support.name(),
            "exact": a.exact,
            "n_min": from,
            "terms": terms.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
        });
        writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)?;
    } else {
        for (i, t) in terms.iter().enumerate() {
            writeln!(out, "{} {t}", from + i)?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_profile(a: ProfileArgs, out: &mut dyn Write) -> Result<i32> {
    let prof = profile(a.support, a.n)?;
    for (x, y, c) in prof.nonzero() {
        writeln!(out, "({x}, {y}, {c})")?;
    }
    writeln!(out, "sum {}", prof.total())?;
    Ok(EXIT_OK)
}

fn cmd_census(a: CensusArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let parallel = match (a.serial, a.jobs) {
        (true, _) => Parallelism::Serial,
        (false, Some(j)) => Parallelism::Threads(j as usize),
        (false, None) => Parallelism::Auto,
    };
    let mut records = census(a.size, a.terms + 1, parallel)?;
    if let Some(path) = &a.oeis {
        match oeis_load(path) {
            Ok(table) => {
                if table.skipped() > 0 {
                    writeln!(
                        err,
                        "warning: skipped {} malformed lines in {}",
                        table.skipped(),
                        path.display()
                    )?;
                }
                attach_oeis(&mut records, &table, &MatchOptions::default());
            }
            Err(e) => writeln!(err, "warning: OEIS matching disabled: {e}")?,
        }
    }
    out.write_all(emit_report(&records, a.format)?.as_bytes())?;
    Ok(EXIT_OK)
}

fn cmd_verify(a: VerifyArgs, out: &mut dyn Write) -> Result<i32> {
    let reports = run_suite(a.suite, a.n_max)?;
    let ratios = match a.suite {
        Suite::Secant | Suite::All => Some(secant_ratio_table(a.n_max)?),
        _ => None,
    };
    if a.format == "json" {
        let doc = json!({ "reports": reports, "secant_ratios": ratios });
        writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)?;
    } else {
        for r in &reports {
            writeln!(out, "{r}")?;
        }
        if let Some(rows) = &ratios {
            writeln!(out, "CEHJLPRVX / E_2n")?;
            for r in rows {
                writeln!(
                    out,
                    "  n={:<3} {:>24} / {:<24} = {}",
                    r.n, r.term, r.secant, r.ratio
                )?;
            }
        }
    }
    let failed = reports.iter().any(|r| {
        if a.strict {
            !r.is_strict_pass()
        } else {
            r.kind == CheckKind::Theorem && !r.passed()
        }
    });
    Ok(if failed { EXIT_VERIFY } else { EXIT_OK })
}

fn cmd_biject(a: BijectArgs, out: &mut dyn Write) -> Result<i32> {
    if a.inverse {
        writeln!(out, "{}", denormalize_bjry_to_bgty(&a.puzzle)?)?;
    } else {
        let trace = normalize_bgty_to_bjry(&a.puzzle)?;
        write!(out, "{trace}")?;
        writeln!(out, "{} steps", trace.steps.len())?;
    }
    Ok(EXIT_OK)
}

fn cmd_enumerate(a: EnumerateArgs, out: &mut dyn Write) -> Result<i32> {
    for p in Oracle::with_bound(a.bound).enumerate(a.support, a.n)? {
        writeln!(out, "{p}")?;
    }
    Ok(EXIT_OK)
}

fn cmd_classes(a: ClassesArgs, out: &mut dyn Write) -> Result<i32> {
    for class in enumerate_connected_classes(a.size)? {
        if a.members {
            let names: Vec<String> = class.members.iter().map(|m| m.name()).collect();
            writeln!(out, "{} {}", class.canonical, names.join(" "))?;
        } else {
            writeln!(out, "{}", class.canonical)?;
        }
    }
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn go(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("stdpuzzle").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn count_and_profile() {
        let (c, o, _) = go(&["count", "--support", "A", "--from", "2", "--to", "5"]);
        assert_eq!(c, 0);
        assert_eq!(o, "2 1\n3 1\n4 1\n5 1\n");
        let (c, _, e) = go(&["count", "--support", "QQ"]);
        assert_eq!(c, 2, "{e}");
        let (c, o, _) = go(&["profile", "--support", "BC", "-n", "2"]);
        assert_eq!(c, 0);
        assert_eq!(o, "(2, 3, 1)\n(4, 2, 1)\nsum 2\n");
    }

    #[test]
    fn verify_exit_codes() {
        assert_eq!(go(&["verify", "--suite", "tangent", "--n-max", "6"]).0, 0);
        let (c, o, _) = go(&["verify", "--suite", "secant", "--n-max", "6"]);
        assert_eq!(c, 0);
        assert!(o.contains("DEVIATION") && o.contains("2^(n)"), "{o}");
        assert_eq!(
            go(&["verify", "--suite", "secant", "--n-max", "6", "--strict"]).0,
            1
        );
        assert_eq!(go(&["verify", "--suite", "nope"]).0, 2);
    }

    #[test]
    fn census_missing_oeis_warns() {
        let (c, o, e) = go(&[
            "census",
            "--size",
            "1",
            "--terms",
            "4",
            "--oeis",
            "/nonexistent/x",
        ]);
        assert_eq!(c, 0);
        assert!(e.contains("matching disabled"));
        assert_eq!(o.matches("Seq=").count(), 6);
    }

    #[test]
    fn biject_trace() {
        let (c, o, _) = go(&["biject", "11,13,10,6,12,8,14/7,9,2,1,4,3,5"]);
        assert_eq!(c, 0);
        assert!(o.ends_with("4 steps\n"), "{o}");
        assert!(o.contains("S={3,4,5,6,7}"));
        let (c, _, e) = go(&["biject", "1,5,4/2,3,6"]);
        assert_eq!(c, 2);
        assert!(e.contains("outside BGTY"), "{e}");
    }

    #[test]
    fn help_is_success() {
        assert_eq!(go(&["--help"]).0, 0);
        assert_eq!(go(&[]).0, 2);
    }
}
