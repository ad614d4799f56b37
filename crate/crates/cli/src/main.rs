//! `semicolor`: command-line front end for the census engine.

mod commands;
mod error;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use crate::error::CliError;

#[derive(Parser, Debug)]
#[command(name = "semicolor", version, about = "Perfect and semiperfect colorings of symmetric patterns")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum TypeArg {
    #[value(name = "1")]
    One,
    #[value(name = "2")]
    Two,
    All,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum CensusFormat {
    Json,
    Csv,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum PatternArg {
    Hexagon,
    P4m,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List subgroups of a group, or of one of its subgroups.
    Subgroups {
        #[arg(long)]
        group: String,
        /// Only subgroups of this subgroup, e.g. `H=a2,b`.
        #[arg(long)]
        of: Option<String>,
        /// Only subgroups of this index in the ambient (or `--of`) group.
        #[arg(long)]
        index: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Enumerate inequivalent semiperfect colorings.
    Enumerate {
        #[arg(long)]
        group: String,
        /// Color group; repeatable. Defaults to every index-2 subgroup.
        #[arg(long = "H", value_name = "WORDS")]
        h: Vec<String>,
        #[arg(long = "type", value_enum, default_value = "all")]
        kind: TypeArg,
        #[arg(long)]
        max_colors: Option<usize>,
        /// Keep only colorings with exactly this many color orbits.
        #[arg(long)]
        orbits: Option<usize>,
        /// Automorphism used to transport censuses between color groups,
        /// e.g. `a->a5,b->ab`; repeatable.
        #[arg(long = "reduce-by", value_name = "MAP")]
        reduce_by: Vec<String>,
        #[arg(long, value_enum, default_value = "json")]
        format: CensusFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The (J, l, r^l) grid for the hexagon with H = <a^2,b>, as CSV.
    Table1 {
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the oracle-versus-criteria property suites.
    Verify {
        #[arg(long)]
        group: String,
        #[arg(long)]
        exhaustive: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: ReportFormat,
    },
    /// Render the coloring of a spec file as SVG.
    Render {
        spec: PathBuf,
        /// Overrides the group named in the spec file.
        #[arg(long)]
        group: Option<String>,
        #[arg(long, value_enum)]
        pattern: Option<PatternArg>,
        /// Palette name (default, paper-fig1b, paper-fig5a) or JSON file.
        #[arg(long, default_value = "default")]
        palette: String,
        /// Cell blocks for p4m patterns, e.g. `3x2`.
        #[arg(long, default_value = "1x1")]
        repeat: String,
        #[arg(long)]
        scale: Option<f64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Transfer a spec to a conjugate color group.
    Conjugate {
        spec: PathBuf,
        #[arg(long)]
        group: Option<String>,
        /// Explicit automorphism, e.g. `a->a5,b->ab`.
        #[arg(long, conflicts_with = "to", required_unless_present = "to")]
        alpha: Option<String>,
        /// Target color group; an automorphism is searched for.
        #[arg(long)]
        to: Option<String>,
        /// Printed color numbers of the blocks of the original coloring.
        #[arg(long, value_delimiter = ',')]
        numbering: Vec<usize>,
        #[arg(long, default_value = "default")]
        palette: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Symmetry diagram of a subgroup of a p4m quotient.
    Diagram {
        #[arg(long)]
        group: String,
        #[arg(long = "J", value_name = "WORDS")]
        j: String,
        /// Also run the diagram test for this element.
        #[arg(long)]
        r: Option<String>,
    },
    /// Count subgroups of small index in a finitely presented group.
    Lowindex {
        /// Built-in name (p4m, H_p4m_sub, H_p4m_sub_prime) or JSON file.
        #[arg(long)]
        presentation: String,
        #[arg(long)]
        index: usize,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand) {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            let msg = e.to_string();
            let first = msg.lines().next().unwrap_or("").trim_start_matches("error: ");
            return report(&CliError::Usage(first.to_string()));
        }
    };
    match commands::run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => report(&e),
    }
}

fn report(e: &CliError) -> ExitCode {
    eprintln!("error[{}]: {}", e.kind(), e.to_string().replace('\n', " "));
    ExitCode::from(e.exit_code())
}
