mod checks;
mod input;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rational_dyck::inversion::{zeta_inverse_with, Strategy};
use rational_dyck::render::{parse_overlays, render_ascii, render_svg};
use rational_dyck::statistics::all_statistics;
use rational_dyck::verify::RankVariant;
use rational_dyck::zeta::{eta_with, zeta_with, Method};
use rational_dyck::{DyckPath, Error};
use serde::Serialize;

use checks::Check;
use input::PathInput;

#[derive(Debug, Parser)]
#[command(name = "dyck", version, about = "Rational Dyck paths: statistics, zeta and eta, inverses, verification")]
struct Cli {
    /// Emit JSON instead of text
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Area, coarea, rank, skew length, dinv and delta
    Stats {
        #[command(flatten)]
        input: PathInput,
    },
    /// Apply zeta or eta, by one method or all of them cross-checked
    Map {
        #[command(flatten)]
        input: PathInput,
        #[arg(long, value_enum, default_value_t = MapKind::Zeta)]
        map: MapKind,
        /// cores, sweep, laser, intervals or all
        #[arg(long, default_value = "cores")]
        method: String,
    },
    /// Find the path whose zeta image is the given path
    Invert {
        #[command(flatten)]
        input: PathInput,
        /// auto, square, level1, fuss, search or table
        #[arg(long, default_value = "auto")]
        strategy: String,
    },
    /// Exhaustively check an identity or conjecture on every coprime grid
    Verify {
        #[arg(value_enum)]
        check: Check,
        /// Largest a+b to scan
        #[arg(long, default_value_t = 10)]
        max_sum: usize,
        /// Restrict to one grid
        #[arg(long, requires = "b")]
        a: Option<usize>,
        #[arg(long, requires = "a")]
        b: Option<usize>,
        /// Rank used by the q-Catalan check
        #[arg(long, default_value = "core")]
        rank: String,
        /// Worker threads (0 uses all cores)
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
    /// Draw a path as ASCII text or SVG
    Render {
        #[command(flatten)]
        input: PathInput,
        #[arg(long, value_enum, default_value_t = Format::Ascii)]
        format: Format,
        /// Comma-separated: hooks, row-lengths, lasers, levels, bounce, intervals
        #[arg(long, default_value = "")]
        overlay: String,
        /// Write to a file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MapKind {
    Zeta,
    Eta,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Ascii,
    Svg,
}

/// Exit status with the message that explains it.
#[derive(Debug)]
pub struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    pub const USAGE: u8 = 1;
    pub const WITNESS: u8 = 2;
    pub const DISAGREEMENT: u8 = 3;

    pub fn usage(message: impl Into<String>) -> Self {
        Failure { code: Self::USAGE, message: message.into() }
    }

    pub fn witness(message: impl Into<String>) -> Self {
        Failure { code: Self::WITNESS, message: message.into() }
    }

    pub fn disagreement(message: impl Into<String>) -> Self {
        Failure { code: Self::DISAGREEMENT, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let message = e.to_string();
        match e {
            Error::MethodDisagreement { .. } | Error::RoundTripFailure { .. } | Error::Internal(_) => {
                Failure::disagreement(message)
            }
            Error::NoPreimage { .. } => Failure::witness(message),
            _ => Failure::usage(message),
        }
    }
}

fn print_json<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string(value).expect("values serialize"));
}

fn stats(input: &PathInput, json: bool) -> Result<(), Failure> {
    for p in input.paths()? {
        let s = all_statistics(&p);
        if json {
            print_json(&s);
        } else {
            println!(
                "{p} ({},{}): area={} coarea={} rank={} sl={} slp={} dinv={} delta={}",
                p.a(),
                p.b(),
                s.area,
                s.coarea,
                s.rank,
                s.sl,
                s.slp,
                s.dinv,
                s.delta
            );
        }
    }
    Ok(())
}

fn apply(kind: MapKind, p: &DyckPath, m: Method) -> Result<DyckPath, Failure> {
    Ok(match kind {
        MapKind::Zeta => zeta_with(p, m)?,
        MapKind::Eta => eta_with(p, m)?,
    })
}

fn map(input: &PathInput, kind: MapKind, method: &str, json: bool) -> Result<(), Failure> {
    let methods: Vec<Method> = if method == "all" {
        Method::ALL.to_vec()
    } else {
        vec![method.parse::<Method>().map_err(|e| Failure::usage(e.to_string()))?]
    };
    for p in input.paths()? {
        let image = apply(kind, &p, methods[0])?;
        for &m in &methods[1..] {
            let other = apply(kind, &p, m)?;
            if other != image {
                return Err(Failure::disagreement(format!(
                    "{kind:?} of {p}: {} gives {image}, {} gives {other}",
                    methods[0], m
                )));
            }
        }
        if json {
            print_json(&image);
        } else {
            println!("{image}");
        }
    }
    Ok(())
}

fn invert(input: &PathInput, strategy: &str, json: bool) -> Result<(), Failure> {
    let strategy: Strategy = strategy.parse().map_err(|e: Error| Failure::usage(e.to_string()))?;
    for q in input.paths()? {
        let inv = zeta_inverse_with(&q, strategy)?;
        if json {
            print_json(&inv);
        } else {
            println!("{}", inv.path);
        }
    }
    Ok(())
}

fn render(input: &PathInput, format: Format, overlay: &str, out: Option<&PathBuf>) -> Result<(), Failure> {
    let overlays = parse_overlays(overlay)?;
    let mut text = String::new();
    for p in input.paths()? {
        text.push_str(&match format {
            Format::Ascii => render_ascii(&p, &overlays)?,
            Format::Svg => render_svg(&p, &overlays)?,
        });
    }
    match out {
        Some(file) => fs::write(file, text).map_err(|e| Failure::usage(format!("cannot write {}: {e}", file.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let json = cli.json;
    match &cli.command {
        Command::Stats { input } => stats(input, json),
        Command::Map { input, map: kind, method } => map(input, *kind, method, json),
        Command::Invert { input, strategy } => invert(input, strategy, json),
        Command::Verify { check, max_sum, a, b, rank, jobs } => {
            let rank: RankVariant = rank.parse().map_err(|e: Error| Failure::usage(e.to_string()))?;
            let grid = a.zip(*b);
            checks::verify(*check, *max_sum, grid, rank, *jobs, json)
        }
        Command::Render { input, format, overlay, out } => render(input, *format, overlay, out.as_ref()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(Failure::USAGE) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn error_classes_map_to_exit_codes() {
        let disagreement = Error::MethodDisagreement {
            map: "zeta",
            first: "cores",
            second: "sweep",
            path: "NE".into(),
            left: "NE".into(),
            right: "EN".into(),
        };
        assert_eq!(Failure::from(disagreement).code, Failure::DISAGREEMENT);
        assert_eq!(Failure::from(Error::Internal("x".into())).code, Failure::DISAGREEMENT);
        let missing = Error::NoPreimage { path: "NE".into(), detail: String::new() };
        assert_eq!(Failure::from(missing).code, Failure::WITNESS);
        assert_eq!(Failure::from(Error::NotCoprime { a: 2, b: 4 }).code, Failure::USAGE);
    }
}
