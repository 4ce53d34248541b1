use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use vnum_core::io::{parse_input, run_command, CliError, Command, Format, ProblemDocument, Settings, CACHE_ENV};

/// v-numbers, associated primes and filtration laws for monomial subquotients.
#[derive(Parser)]
#[command(name = "vnum", version)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Associated primes of the document's module.
    Ass(DocArgs),
    /// v-number report with per-prime values and witnesses.
    Vnumber(DocArgs),
    /// Initial degree (and end degree when the module has finite length).
    Indeg(DocArgs),
    /// Invariant series of the document's family.
    Family(DocArgs),
    /// Radical probe on the Rees quotient of the family.
    Probe(DocArgs),
    /// Cross-check ass and v against brute-force enumeration.
    Oracle(DocArgs),
    /// Recompute the built-in reference examples.
    VerifyGolden(CommonArgs),
    /// Least n with J I^n = I^(n+1), probing up to n_max.
    ReductionCheck(DocArgs),
    /// Theorem-compliance report for the family's data.
    Check(DocArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

#[derive(Args)]
struct CommonArgs {
    #[arg(long)]
    n_max: Option<u32>,
    #[arg(long)]
    window: Option<usize>,
    #[arg(long)]
    s_max: Option<u32>,
    #[arg(long, allow_negative_numbers = true)]
    degree_bound: Option<i64>,
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
    /// Write output here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, env = CACHE_ENV)]
    cache_dir: Option<PathBuf>,
}

#[derive(Args)]
struct DocArgs {
    /// Problem document (JSON); `-` reads standard input.
    input: PathBuf,
    #[command(flatten)]
    common: CommonArgs,
}

impl CommonArgs {
    fn settings(&self) -> Settings {
        Settings {
            n_max: self.n_max,
            window: self.window,
            s_max: self.s_max,
            degree_bound: self.degree_bound,
            format: self.format.map(|f| match f {
                FormatArg::Json => Format::Json,
                FormatArg::Csv => Format::Csv,
            }),
            out: self.out.clone(),
            cache_dir: self.cache_dir.clone(),
        }
    }
}

fn read_doc(path: &PathBuf) -> Result<ProblemDocument, CliError> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::Io(format!("stdin: {e}")))?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?
    };
    Ok(parse_input(&text)?)
}

fn run(cli: Cli) -> Result<bool, CliError> {
    let (cmd, input, common) = match &cli.command {
        Cmd::Ass(a) => (Command::Ass, Some(&a.input), &a.common),
        Cmd::Vnumber(a) => (Command::Vnumber, Some(&a.input), &a.common),
        Cmd::Indeg(a) => (Command::Indeg, Some(&a.input), &a.common),
        Cmd::Family(a) => (Command::Family, Some(&a.input), &a.common),
        Cmd::Probe(a) => (Command::Probe, Some(&a.input), &a.common),
        Cmd::Oracle(a) => (Command::Oracle, Some(&a.input), &a.common),
        Cmd::VerifyGolden(c) => (Command::VerifyGolden, None, c),
        Cmd::ReductionCheck(a) => (Command::ReductionCheck, Some(&a.input), &a.common),
        Cmd::Check(a) => (Command::Check, Some(&a.input), &a.common),
    };
    let doc = input.map(read_doc).transpose()?;
    let settings = common.settings().merged_with(doc.as_ref());
    let out = run_command(doc.as_ref(), cmd, &settings)?;
    let text = out.render(settings.format())?;
    match &settings.out {
        Some(path) => fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?,
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| CliError::Io(e.to_string()))?,
    }
    Ok(!out.verification_failed)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(3),
        Err(e) => {
            eprintln!("error[{}]: {e}", e.code());
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
