use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use mdcodes::oracle::DEFAULT_BUDGET;
use mdcodes_cli::{
    cmd_canonical, cmd_generate, cmd_idempotents, cmd_root, cmd_verify, CliError, CommandOutput, Format, JobConfig,
    MethodChoice, RootConfig,
};

/// Generator sets of cyclic, 2D and nD cyclic codes over finite chain rings.
#[derive(Parser)]
#[command(name = "mdcodes", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Staircase generators of a cyclic code of one length.
    Canonical(JobArgs),
    /// Generators of a 2D or nD code.
    Generate(JobArgs),
    /// Check a generator set against a brute-force enumeration of the code.
    Verify(JobArgs),
    /// Primitive idempotents of R[y]/(y^n - 1).
    Idempotents(RootArgs),
    /// Primitive n-th root of unity, or the lift of a given residue.
    Root(RootArgs),
}

#[derive(Args)]
struct JobArgs {
    /// `Z/p^k`, `Z/N` or `Fq[g]/(g^nu)`.
    #[arg(long)]
    ring: String,
    /// Lengths m_1,..,m_k.
    #[arg(long, value_delimiter = ',', required = true)]
    dims: Vec<usize>,
    /// Generators, inline or `@file`.
    #[arg(long, default_value = "")]
    gens: String,
    /// Level data, inline or `@file`: codes C_j, or witnesses per I_j.
    #[arg(long)]
    levels: Option<String>,
    /// For verify: generator set to check, inline or `@file`.
    #[arg(long)]
    claim: Option<String>,
    #[arg(long, value_enum, default_value_t = MethodChoice::Auto)]
    method: MethodChoice,
    /// Process the variables in reverse order.
    #[arg(long)]
    transpose: bool,
    /// Certify the output.
    #[arg(long)]
    verify: bool,
    /// Oracle budget in enumerated words.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: usize,
    /// Largest word length for the span certificate.
    #[arg(long, default_value_t = 4096)]
    span_budget: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct RootArgs {
    #[arg(long)]
    ring: String,
    #[arg(long)]
    n: usize,
    /// Residue to lift (root only).
    #[arg(long)]
    residue: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

impl From<JobArgs> for JobConfig {
    fn from(a: JobArgs) -> Self {
        JobConfig {
            ring: a.ring,
            dims: a.dims,
            generators: a.gens,
            levels: a.levels,
            claim: a.claim,
            method: a.method,
            transpose: a.transpose,
            verify: a.verify,
            budget: a.budget,
            span_budget: a.span_budget,
            format: a.format,
        }
    }
}

impl From<RootArgs> for RootConfig {
    fn from(a: RootArgs) -> Self {
        RootConfig { ring: a.ring, n: a.n, residue: a.residue, format: a.format }
    }
}

fn run(command: Command) -> (Result<CommandOutput, CliError>, Format) {
    match command {
        Command::Canonical(a) => {
            let c = JobConfig::from(a);
            (cmd_canonical(&c), c.format)
        }
        Command::Generate(a) => {
            let c = JobConfig::from(a);
            (cmd_generate(&c), c.format)
        }
        Command::Verify(a) => {
            let c = JobConfig::from(a);
            (cmd_verify(&c), c.format)
        }
        Command::Idempotents(a) => {
            let c = RootConfig::from(a);
            (cmd_idempotents(&c), c.format)
        }
        Command::Root(a) => {
            let c = RootConfig::from(a);
            (cmd_root(&c), c.format)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (result, format) = run(cli.command);
    match result {
        Ok(out) => {
            print!("{}", out.render(format));
            ExitCode::from(out.exit as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
