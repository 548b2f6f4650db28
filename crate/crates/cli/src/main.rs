use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use prym_loci::{BetaMode, TieBreak};
use prym_loci_cli::{
    error_response, render_json, render_table, run, CliError, Command, Request, SytMode,
};

/// Two-pointed Prym–Brill–Noether class computations with exact arithmetic.
///
/// Reads a request from flags or from a JSON file and writes the response as
/// JSON to standard output. Flags given alongside `--json` override the file.
#[derive(Parser, Debug)]
#[command(name = "prym-loci", version)]
struct Cli {
    #[command(subcommand)]
    command: Option<Cmd>,

    /// Full request document.
    #[arg(long, global = true, value_name = "FILE")]
    json: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Check a pair of vanishing sequences and report every violation.
    Validate(Inputs),
    /// Rank-condition triple (p, q, k).
    Triple(Inputs),
    /// Strict partition λ of the triple.
    Partition(Inputs),
    /// Bruhat-minimal signed permutation satisfying the triple.
    Vexillary(Inputs),
    /// Class of the locus in the Chow ring or connective K-theory.
    Class(Inputs),
    /// Number of points when g - 1 = |λ|.
    Degree(Inputs),
    /// Standard shifted tableaux of shape λ.
    Syt(Inputs),
    /// Whether the locus is nonempty for the given genus.
    Nonempty(Inputs),
}

#[derive(Args, Debug, Default)]
struct Inputs {
    #[arg(
        long,
        value_delimiter = ',',
        allow_negative_numbers = true,
        value_name = "LIST"
    )]
    a_prime: Option<Vec<i64>>,
    #[arg(
        long,
        value_delimiter = ',',
        allow_negative_numbers = true,
        value_name = "LIST"
    )]
    b_prime: Option<Vec<i64>>,
    #[arg(long, allow_negative_numbers = true)]
    g: Option<i64>,
    /// Strict partition, instead of a pair.
    #[arg(long, alias = "lambda", value_delimiter = ',', value_name = "LIST")]
    shape: Option<Vec<u32>>,
    #[arg(long, value_enum)]
    mode: Option<SytMode>,
    #[arg(long, value_enum)]
    beta_mode: Option<BetaArg>,
    #[arg(long)]
    max_beta_pow: Option<u32>,
    #[arg(long)]
    max_class_index: Option<u32>,
    /// Rank of the group searched by `vexillary`.
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, value_enum)]
    tie_break: Option<TieArg>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum BetaArg {
    Zero,
    #[value(alias = "minus_one")]
    MinusOne,
    Symbolic,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TieArg {
    PreferB,
    PreferC,
}

impl Cmd {
    fn split(self) -> (Command, Inputs) {
        match self {
            Cmd::Validate(i) => (Command::Validate, i),
            Cmd::Triple(i) => (Command::Triple, i),
            Cmd::Partition(i) => (Command::Partition, i),
            Cmd::Vexillary(i) => (Command::Vexillary, i),
            Cmd::Class(i) => (Command::Class, i),
            Cmd::Degree(i) => (Command::Degree, i),
            Cmd::Syt(i) => (Command::Syt, i),
            Cmd::Nonempty(i) => (Command::Nonempty, i),
        }
    }
}

fn overlay(req: &mut Request, inputs: Inputs) {
    if inputs.a_prime.is_some() {
        req.a_prime = inputs.a_prime;
    }
    if inputs.b_prime.is_some() {
        req.b_prime = inputs.b_prime;
    }
    if inputs.g.is_some() {
        req.g = inputs.g;
    }
    if inputs.shape.is_some() {
        req.lambda = inputs.shape;
    }
    if let Some(mode) = inputs.mode {
        req.mode = mode;
    }
    if let Some(b) = inputs.beta_mode {
        req.options.beta_mode = match b {
            BetaArg::Zero => BetaMode::Zero,
            BetaArg::MinusOne => BetaMode::MinusOne,
            BetaArg::Symbolic => BetaMode::Symbolic,
        };
    }
    if inputs.max_beta_pow.is_some() {
        req.options.max_beta_pow = inputs.max_beta_pow;
    }
    if inputs.max_class_index.is_some() {
        req.options.max_class_index = inputs.max_class_index;
    }
    if inputs.n.is_some() {
        req.options.n = inputs.n;
    }
    if let Some(t) = inputs.tie_break {
        req.options.tie_break = match t {
            TieArg::PreferB => TieBreak::PreferB,
            TieArg::PreferC => TieBreak::PreferC,
        };
    }
}

fn build_request(cli: Cli) -> Result<Request, CliError> {
    let base = match &cli.json {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
            Some(Request::from_json(&text)?)
        }
        None => None,
    };
    match (base, cli.command) {
        (Some(req), None) => Ok(req),
        (Some(mut req), Some(cmd)) => {
            let (command, inputs) = cmd.split();
            req.command = command;
            overlay(&mut req, inputs);
            Ok(req)
        }
        (None, Some(cmd)) => {
            let (command, inputs) = cmd.split();
            let mut req = Request::new(command);
            overlay(&mut req, inputs);
            Ok(req)
        }
        (None, None) => Err(CliError::Parse("no command given; see --help".into())),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => e.exit(),
        Err(e) => {
            eprint!("{e}");
            let err = CliError::Parse(e.kind().to_string());
            print!("{}", render_json(&error_response(&err)));
            return ExitCode::from(err.exit_code() as u8);
        }
    };
    let format = cli.format;
    let outcome = build_request(cli).and_then(|req| run(&req));
    let (doc, code) = match outcome {
        Ok(doc) => (doc, 0),
        Err(err) => {
            eprintln!("error [{}]: {err}", err.code());
            (error_response(&err), err.exit_code())
        }
    };
    match format {
        Format::Json => print!("{}", render_json(&doc)),
        Format::Table => print!("{}", render_table(&doc)),
    }
    ExitCode::from(code as u8)
}
