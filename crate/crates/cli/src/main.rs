use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Result;
use clap::{Parser, Subcommand};
use hopfgen::commands::{self, parse_kinds};
use hopfgen::schema::{hopf_to_json, read_text};
use hopfgen::{builtin_hopf, load_input, Options, RunReport};

#[derive(Parser)]
#[command(
    name = "hopfgen",
    version,
    about = "Exact checks for generic base algebras of finite-dimensional Hopf algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Seed for every randomized check.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Degree cap for invariant, identity and tensor-algebra searches.
    #[arg(long, global = true, default_value_t = 4)]
    max_degree: usize,
    /// Largest residual block handed to a symbolic determinant.
    #[arg(long, global = true, default_value_t = 8)]
    det_size_limit: usize,
    /// Print a plain-text table instead of JSON.
    #[arg(long, global = true)]
    text: bool,
    /// Write the report here instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Verify the Hopf algebra axioms.
    CheckHopf {
        #[arg(long)]
        input: PathBuf,
    },
    /// Certify the declared group-likes and the coradical count.
    Grouplikes {
        #[arg(long)]
        input: PathBuf,
    },
    /// Compute the largest commutative quotient.
    Hab {
        #[arg(long)]
        input: PathBuf,
    },
    /// Build the Laurent-polynomial presentation of the generic base algebra.
    GenericBase {
        #[arg(long)]
        input: PathBuf,
        /// Explicit retraction: basis label -> {basis label: scalar}.
        #[arg(long)]
        gamma: Option<PathBuf>,
    },
    /// Monomial basis of the kernel lattice for a built-in group.
    Lattice {
        #[arg(long)]
        group: String,
    },
    /// Group determinant of a built-in group, or the localizing pair of a Hopf algebra.
    Dedekind {
        #[arg(long, conflicts_with = "input", required_unless_present = "input")]
        group: Option<String>,
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Generators of the invariant ring of the regular representation.
    Noether {
        #[arg(long)]
        group: String,
    },
    /// Coinvariance of the generators sigma, p, q and their inverses.
    Coinvariance {
        #[arg(long)]
        input: PathBuf,
        /// Restrict to these kinds (sigma, sigma_inv, p, q, p_prime, q_prime).
        #[arg(long, value_delimiter = ',')]
        kinds: Vec<String>,
    },
    /// Universal comodule map: canonical coinvariants, identities, square identity.
    PiIdentity {
        #[arg(long)]
        input: PathBuf,
        /// Evaluate mu on a polynomial: JSON list of [[labels...], scalar].
        #[arg(long)]
        poly: Option<PathBuf>,
    },
    /// Degree-truncated comparison for the function algebra of a built-in group.
    IyerCheck {
        #[arg(long)]
        group: String,
    },
    /// Run every applicable check on a Hopf algebra.
    ReportAll {
        #[arg(long)]
        input: PathBuf,
    },
    /// Print a built-in Hopf algebra in the input format.
    EmitBuiltin {
        /// sweedler, taft<n>, uqbar<e>, kG:<group> or OG:<group>.
        name: String,
    },
}

fn side_file(path: &Option<PathBuf>) -> Result<Option<(String, String)>> {
    path.as_deref().map(|p: &Path| Ok((p.display().to_string(), read_text(p)?))).transpose()
}

fn run(cli: &Cli) -> Result<Option<RunReport>> {
    let opts = Options { seed: cli.seed, max_degree: cli.max_degree, det_size_limit: cli.det_size_limit };
    let report = match &cli.command {
        Command::CheckHopf { input } => commands::check_hopf(&load_input(input)?, &opts)?,
        Command::Grouplikes { input } => commands::grouplikes(&load_input(input)?, &opts)?,
        Command::Hab { input } => commands::hab(&load_input(input)?, &opts)?,
        Command::GenericBase { input, gamma } => {
            let g = side_file(gamma)?;
            commands::generic_base(&load_input(input)?, g.as_ref().map(|(p, t)| (p.as_str(), t.as_str())), &opts)?
        }
        Command::Lattice { group } => commands::lattice(group, &opts)?,
        Command::Dedekind { group: Some(g), .. } => commands::dedekind_group(g, &opts)?,
        Command::Dedekind { input: Some(i), .. } => commands::dedekind_input(&load_input(i)?, &opts)?,
        Command::Dedekind { .. } => unreachable!("clap requires --group or --input"),
        Command::Noether { group } => commands::noether(group, &opts)?,
        Command::Coinvariance { input, kinds } => {
            commands::coinvariance(&load_input(input)?, &parse_kinds(kinds)?, &opts)?
        }
        Command::PiIdentity { input, poly } => {
            let p = side_file(poly)?;
            commands::pi_identity(&load_input(input)?, p.as_ref().map(|(a, b)| (a.as_str(), b.as_str())), &opts)?
        }
        Command::IyerCheck { group } => commands::iyer_check(group, &opts)?,
        Command::ReportAll { input } => commands::report_all(&load_input(input)?, &opts)?,
        Command::EmitBuiltin { name } => {
            write_out(cli, &hopf_to_json(&builtin_hopf(name)?))?;
            return Ok(None);
        }
    };
    Ok(Some(report))
}

fn write_out(cli: &Cli, text: &str) -> Result<()> {
    match &cli.output {
        Some(p) => std::fs::write(p, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli).and_then(|rep| {
        let Some(mut rep) = rep else { return Ok(true) };
        rep.normalize();
        let text = if cli.text { rep.to_text() } else { rep.to_json() };
        write_out(&cli, &text)?;
        Ok(rep.all_pass())
    });
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
