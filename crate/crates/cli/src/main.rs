use std::io::IsTerminal;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use faro_core::Family;

mod commands;

use commands::{CliError, Output};

/// Perfect shuffles: periods, orbits, simulations and card-placement plans.
#[derive(Debug, Parser)]
#[command(name = "faro", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct DeckArgs {
    /// in, out, monge-h1..monge-h4, odd-first, odd-second, gen-in, gen-out
    #[arg(long, value_parser = parse_family)]
    pub family: Family,
    /// Total number of cards.
    #[arg(long)]
    pub cards: usize,
    /// Packet count for gen-in / gen-out.
    #[arg(short = 'k', long = "packets")]
    pub packets: Option<usize>,
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse()
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Period from the congruence formulas, cross-checked against cycle lengths.
    Period {
        #[command(flatten)]
        deck: DeckArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Periods of the in-shuffle and both Monge shuffles for 2, 4, .., max cards.
    Table {
        #[arg(long, default_value_t = 64)]
        max_cards: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Cycles of positions under repeated shuffling.
    Orbits {
        #[command(flatten)]
        deck: DeckArgs,
        /// Card numbering (defaults to the family's usual numbering).
        #[arg(long, value_parser = clap::value_parser!(u8).range(0..=1))]
        base: Option<u8>,
        /// Use the shuffle repeated this many times (negative for the inverse).
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        power: i64,
        /// List each orbit in the order a card visits it instead of sorted.
        #[arg(long)]
        traversal: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// In/out-shuffle sequence that moves a card (0 = bottom card).
    Plan {
        #[command(subcommand)]
        mode: PlanMode,
    },
    /// Deck order after each shuffle, starting from an ordered deck.
    Simulate {
        #[command(flatten)]
        deck: DeckArgs,
        #[arg(long, default_value_t = 1)]
        steps: usize,
        #[arg(long, value_parser = clap::value_parser!(u8).range(0..=1))]
        base: Option<u8>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Debug, Subcommand)]
pub enum PlanMode {
    /// Move card `--card` to position `--to` (deck must be a power of two).
    Move {
        #[arg(long)]
        card: usize,
        #[arg(long)]
        to: usize,
        #[arg(long)]
        cards: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Move the bottom card to position `--to` (any even deck).
    BottomTo {
        #[arg(long)]
        to: usize,
        #[arg(long)]
        cards: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Move the top card to position `--to`.
    TopTo {
        #[arg(long)]
        to: usize,
        #[arg(long)]
        cards: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Move card `--card` to the bottom.
    ToBottom {
        #[arg(long)]
        card: usize,
        #[arg(long)]
        cards: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Move card `--card` to the top.
    ToTop {
        #[arg(long)]
        card: usize,
        #[arg(long)]
        cards: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

fn color_enabled() -> bool {
    std::env::var("FARO_COLOR").map_or(true, |v| v != "0") && std::io::stderr().is_terminal()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Period { deck, format } => commands::period(&deck, format),
        Command::Table { max_cards, format } => commands::table(max_cards, format),
        Command::Orbits {
            deck,
            base,
            power,
            traversal,
            format,
        } => commands::orbits(&deck, base, power, traversal, format),
        Command::Plan { mode } => commands::plan(&mode),
        Command::Simulate {
            deck,
            steps,
            base,
            format,
        } => commands::simulate(&deck, steps, base, format),
    };
    match result {
        Ok(Output { stdout, warnings }) => {
            print!("{stdout}");
            for w in warnings {
                if color_enabled() {
                    eprintln!("\x1b[33mwarning:\x1b[0m {w}");
                } else {
                    eprintln!("warning: {w}");
                }
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            let (code, msg) = match e {
                CliError::Usage(m) => (2, m),
                CliError::CrossCheck(m) => (3, m),
            };
            if color_enabled() {
                eprintln!("\x1b[31merror:\x1b[0m {msg}");
            } else {
                eprintln!("error: {msg}");
            }
            ExitCode::from(code)
        }
    }
}
