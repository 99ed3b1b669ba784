use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};
use hopfpow_cli::build::cache_dir;
use hopfpow_cli::commands::{self, Outcome, Suite};
use hopfpow_cli::{parse_spec, Builder, Format};

#[derive(Parser, Debug)]
#[command(
    name = "hopfpow",
    version,
    about = "Hopf powers, trivial power dimensions and Hopf orders"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Algebra spec, e.g. `double:S3`, `bismash:S5`, `tensor(dualgroup:S3,group:S3)`
    #[arg(long, global = true)]
    algebra: Option<String>,

    #[arg(long, global = true, value_enum, default_value = "plain")]
    format: Format,

    /// Worker threads; defaults to the available parallelism
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Directory for cached power matrices (else $HOPFPOW_CACHE_DIR)
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
}

#[derive(Args, Debug, Clone, Copy)]
struct HalfArgs {
    /// Print only columns 1..⌈e/2⌉ (default when e > 16)
    #[arg(long, conflicts_with = "full_table")]
    half_table: bool,

    /// Print every column
    #[arg(long)]
    full_table: bool,
}

impl HalfArgs {
    fn choice(self) -> Option<bool> {
        match (self.half_table, self.full_table) {
            (true, _) => Some(true),
            (_, true) => Some(false),
            _ => None,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Emit the tpd_{i,j} table
    Table(HalfArgs),
    /// Realizable Hopf orders with per-n diagnostics
    Orders,
    /// Hopf order of one element
    ElementOrder {
        /// Coordinate vector or signed sum of basis labels
        #[arg(long, conflicts_with = "element_file")]
        element: Option<String>,
        #[arg(long)]
        element_file: Option<PathBuf>,
    },
    /// Exponent, with the group exponent for bismash products
    Exponent,
    /// Run verification suites
    Verify {
        /// Comma-separated: axioms,powers,symmetry,duality,oracle,coprime,tensor or all
        #[arg(long, default_value = "all")]
        suites: String,
    },
    /// Basis labels in index order
    Basis,
    /// Basis of TPS_n in canonical echelon form
    Tps {
        #[arg(long)]
        n: usize,
    },
    /// Tables of H and H^* and the cells where they differ
    CompareDual(HalfArgs),
}

fn run(cli: &Cli) -> anyhow::Result<Outcome> {
    let text = cli.algebra.as_deref().context("--algebra is required")?;
    let spec = parse_spec(text)?;
    let builder = Builder::new(cache_dir(cli.cache_dir.clone()))?;
    let built = builder.build(&spec)?;
    let f = cli.format;
    Ok(match &cli.command {
        Command::Table(h) => commands::cmd_table(&built, f, h.choice())?,
        Command::Orders => commands::cmd_orders(&built, f)?,
        Command::ElementOrder {
            element,
            element_file,
        } => {
            let text = match (element, element_file) {
                (Some(t), _) => t.clone(),
                (None, Some(p)) => std::fs::read_to_string(p)
                    .with_context(|| format!("reading {}", p.display()))?,
                (None, None) => bail!("give --element or --element-file"),
            };
            commands::cmd_element_order(&built, &text, f)?
        }
        Command::Exponent => commands::cmd_exponent(&built, f)?,
        Command::Verify { suites } => commands::cmd_verify(&built, &Suite::parse_list(suites)?)?,
        Command::Basis => commands::cmd_basis(&built, f)?,
        Command::Tps { n } => commands::cmd_tps(&built, *n, f)?,
        Command::CompareDual(h) => commands::cmd_compare_dual(&built, f, h.choice())?,
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(n) = cli.jobs {
        pool = pool.num_threads(n.max(1));
    }
    let pool = match pool.build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    match pool.install(|| run(&cli)) {
        Ok(o) => {
            print!("{}", o.output);
            if o.success {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
