//! `ordalg`: check, convert, analyse and enumerate finite ordered algebras.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use ordalg::search::Property;
use ordalg::ClassTag;

#[derive(Parser)]
#[command(
    name = "ordalg",
    version,
    about = "Finite join-semilattices with implication and residuation"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a file against a class.
    Check {
        file: PathBuf,
        #[arg(long, value_parser = parse_class)]
        class: ClassTag,
        /// Also check the derived properties of the class.
        #[arg(long)]
        props: bool,
        /// For R-algebras, also require the divisibility identity.
        #[arg(long)]
        subvariety: bool,
    },
    /// Apply one of the translations between classes and print the result.
    Derive {
        file: PathBuf,
        #[arg(long, value_enum, ignore_case = true)]
        map: MapName,
    },
    /// Translate there and back and compare the tables.
    Roundtrip {
        file: PathBuf,
        #[arg(long, value_enum)]
        pair: Pair,
    },
    /// Congruence lattice and congruence properties of a total algebra.
    Con {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = ConReport::Summary)]
        report: ConReport,
    },
    /// Enumerate models up to isomorphism.
    Search {
        #[arg(long, value_parser = parse_class)]
        class: ClassTag,
        #[arg(long)]
        size: usize,
        /// Include every size from 1.
        #[arg(long)]
        upto: bool,
        /// Print only the number of models.
        #[arg(long)]
        count: bool,
        /// Report the smallest model violating this property.
        #[arg(long, value_parser = parse_property)]
        violate: Option<Property>,
        /// Enumerate `imp` tables from the axioms instead of deriving them.
        #[arg(long)]
        free_imp: bool,
        /// Write each model to `<class>_<size>_<index>.alg` in this directory.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        limit: Option<usize>,
        /// Raise the size cap (slow above the default).
        #[arg(long)]
        max_size: Option<usize>,
    },
    /// Print the binary operation tables.
    Tables { file: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
#[value(rename_all = "UPPER")]
enum MapName {
    /// sectioned -> ncis
    I,
    /// ncis -> sectioned, or rrs -> srs
    S,
    /// srs -> rrs
    R,
    /// ncis -> ialg
    A,
    /// ialg -> ncis
    J,
    /// rrs -> ralg
    B,
    /// ralg -> rrs
    Q,
    /// ncis <-> rrs with the product read as meet
    N,
}

#[derive(Clone, Copy, ValueEnum)]
enum Pair {
    SectionedNcis,
    NcisIalg,
    SrsRrs,
    RrsRalg,
    NcisRrs,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ConReport {
    Summary,
    Full,
}

fn parse_class(s: &str) -> Result<ClassTag, String> {
    s.parse()
}

fn parse_property(s: &str) -> Result<Property, String> {
    s.parse().map_err(|e: ordalg::Error| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Check {
            file,
            class,
            props,
            subvariety,
        } => commands::check(&file, class, props, subvariety),
        Command::Derive { file, map } => commands::derive(&file, map),
        Command::Roundtrip { file, pair } => commands::roundtrip(&file, pair),
        Command::Con { file, report } => commands::con(&file, report == ConReport::Full),
        Command::Search {
            class,
            size,
            upto,
            count,
            violate,
            free_imp,
            out,
            limit,
            max_size,
        } => commands::search(commands::SearchArgs {
            class,
            size,
            upto,
            count,
            violate,
            free_imp,
            out,
            limit,
            max_size,
        }),
        Command::Tables { file } => commands::tables(&file),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(commands::Failure::Check { fail_line, detail }) => {
            println!("{fail_line}");
            if !detail.is_empty() {
                eprintln!("ordalg: {detail}");
            }
            ExitCode::from(1)
        }
        Err(commands::Failure::Mismatch) => ExitCode::from(1),
        Err(commands::Failure::Input(msg)) => {
            eprintln!("ordalg: {msg}");
            ExitCode::from(2)
        }
    }
}
