use std::path::PathBuf;
use std::process::ExitCode;

use bott_samelson::oracle::DEFAULT_BUDGET;
use bott_samelson::perm::Permutation;
use bsdist::{
    cmd_cells, cmd_classes, cmd_compare, cmd_dist, cmd_graph, cmd_invariants, cmd_oracle, cmd_rs,
    cmd_search_collisions, cmd_tl_check, cmd_verify, exit, parse_word, parse_words, CliError, CliResult,
    GraphFormat, Report,
};
use clap::{Parser, Subcommand, ValueEnum};
use num_rational::BigRational;

/// Bott-Samelson distributions, commutation classes and their invariants.
#[derive(Parser, Debug)]
#[command(name = "bsdist", version)]
struct Cli {
    /// Rank of the symmetric group; inferred from the largest letter if omitted.
    #[arg(long, global = true)]
    n: Option<usize>,
    /// Prime for the finite-field oracle.
    #[arg(long, global = true, default_value_t = 2)]
    p: u64,
    /// Value of q for the collision search, an integer or a fraction such as 1/2.
    #[arg(long, global = true, default_value = "1")]
    q: String,
    /// Write the output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Maximum number of points the oracle may enumerate.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u128,
    /// Human-readable tables instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Dot,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Numerators of the distribution of a word.
    Dist { word: String },
    /// Compare two words by class, distribution, TL image and kernel set.
    Compare { first: String, second: String },
    /// Commutation classes of the reduced words of w0, or of --element.
    Classes {
        #[arg(long)]
        element: Option<String>,
    },
    /// The commutation class graph of w0.
    Graph {
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
    },
    /// Digit sum, K-set and the inversion-time tables of a word.
    Invariants { word: String },
    /// Cell-representation matrix and its vanishing columns.
    Cells { word: String },
    /// Temperley-Lieb images of two words against their Hecke products.
    TlCheck { first: String, second: String },
    /// Count Bott-Samelson points over F_p by Schubert cell.
    Oracle { word: String },
    /// Exhaustive checks over the reduced words of w0.
    Verify,
    /// Look for distinct classes whose distributions agree at q = --q.
    SearchCollisions {
        /// Search the reduced words of every permutation, not only w0.
        #[arg(long)]
        all_elements: bool,
    },
    /// Robinson-Schensted tableaux of a permutation.
    Rs { perm: String },
}

fn require_rank(n: Option<usize>) -> CliResult<usize> {
    n.ok_or_else(|| CliError::Input("this command needs --n".into()))
}

fn parse_rational(s: &str) -> CliResult<BigRational> {
    s.trim().parse().map_err(|_| CliError::Input(format!("bad rational {s:?}")))
}

fn parse_perm(s: &str) -> CliResult<Permutation> {
    Ok(s.parse::<Permutation>()?)
}

fn run(cli: &Cli) -> CliResult<Report> {
    match &cli.command {
        Command::Dist { word } => Ok(cmd_dist(&parse_word(word, cli.n)?)),
        Command::Compare { first, second } => {
            let words = parse_words(&[first, second], cli.n)?;
            cmd_compare(&words[0], &words[1])
        }
        Command::Classes { element } => {
            let element = element.as_deref().map(parse_perm).transpose()?;
            let n = match (&element, cli.n) {
                (Some(w), _) => w.n(),
                (None, n) => require_rank(n)?,
            };
            cmd_classes(n, element.as_ref())
        }
        Command::Graph { format } => {
            let format = match format {
                Format::Dot => GraphFormat::Dot,
                Format::Json => GraphFormat::Json,
            };
            cmd_graph(require_rank(cli.n)?, format)
        }
        Command::Invariants { word } => cmd_invariants(&parse_word(word, cli.n)?),
        Command::Cells { word } => cmd_cells(&parse_word(word, cli.n)?),
        Command::TlCheck { first, second } => {
            let words = parse_words(&[first, second], cli.n)?;
            cmd_tl_check(&words[0], &words[1])
        }
        Command::Oracle { word } => cmd_oracle(&parse_word(word, cli.n)?, cli.p, cli.budget),
        Command::Verify => cmd_verify(require_rank(cli.n)?),
        Command::SearchCollisions { all_elements } => {
            cmd_search_collisions(require_rank(cli.n)?, &parse_rational(&cli.q)?, *all_elements)
        }
        Command::Rs { perm } => Ok(cmd_rs(&parse_perm(perm)?)),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { exit::BAD_INPUT as u8 } else { exit::OK as u8 });
        }
    };
    let code = match run(&cli) {
        Ok(report) => {
            let rendered = report.render(cli.pretty);
            match &cli.out {
                Some(path) => match std::fs::write(path, rendered) {
                    Ok(()) => report.exit_code(),
                    Err(e) => {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        exit::BAD_INPUT
                    }
                },
                None => {
                    print!("{rendered}");
                    report.exit_code()
                }
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    };
    ExitCode::from(code as u8)
}
