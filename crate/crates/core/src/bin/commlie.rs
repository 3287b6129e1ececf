use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use commlie::cochain::Flavor;
use commlie::report::{run, Command, Request};

#[derive(Parser, Debug)]
#[command(name = "commlie", version, about = "Cohomology of small algebras over GF(2)")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,

    /// `catalog:NAME` (N, a, abelian(d), heis3) or a path to an algebra file.
    #[arg(long, global = true)]
    algebra: Option<String>,

    /// Module name from the file, or trivial, trivialM, adjoint, coadjoint, F<bits>.
    #[arg(long, global = true, default_value = "trivial")]
    module: String,

    /// Named ideal or explicit span such as `e+f, f`.
    #[arg(long, global = true, conflicts_with = "subalgebra")]
    ideal: Option<String>,

    #[arg(long, global = true)]
    subalgebra: Option<String>,

    /// Repeatable; defaults to every flavor the algebra supports.
    #[arg(long, global = true, value_enum)]
    flavor: Vec<FlavorArg>,

    #[arg(long, global = true)]
    max_degree: Option<usize>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
}

#[derive(Subcommand, Debug, Clone, Copy)]
enum Cmd {
    /// Classification, Leibniz kernel and axiom verdicts.
    Check,
    /// Betti tables.
    Cohomology,
    /// Spectral sequence of the filtration by an ideal or subalgebra.
    HsSs,
    /// Relative complexes, CR cohomology, product checks and vanishing propagation.
    Compare,
    /// Long exact sequences of the relative complexes.
    Les,
    /// Enumeration of commutative Lie algebras of small dimension.
    Survey {
        #[arg(long, default_value_t = 2)]
        dim: usize,
        /// Skip the reduction up to isomorphism.
        #[arg(long)]
        raw: bool,
    },
}

#[derive(ValueEnum, Debug, Clone, Copy)]
enum FlavorArg {
    Sym,
    Ext,
    Tensor,
}

impl From<FlavorArg> for Flavor {
    fn from(f: FlavorArg) -> Self {
        match f {
            FlavorArg::Sym => Flavor::Sym,
            FlavorArg::Ext => Flavor::Ext,
            FlavorArg::Tensor => Flavor::Tensor,
        }
    }
}

#[derive(ValueEnum, Debug, Clone, Copy)]
enum Format {
    Json,
    Csv,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let (command, survey_dim, up_to_iso) = match cli.command {
        Cmd::Check => (Command::Check, 2, true),
        Cmd::Cohomology => (Command::Cohomology, 2, true),
        Cmd::HsSs => (Command::HsSs, 2, true),
        Cmd::Compare => (Command::Compare, 2, true),
        Cmd::Les => (Command::Les, 2, true),
        Cmd::Survey { dim, raw } => (Command::Survey, dim, !raw),
    };
    let request = Request {
        algebra: cli.algebra,
        module: cli.module,
        require_ideal: cli.ideal.is_some(),
        subspace: cli.ideal.or(cli.subalgebra),
        flavors: cli.flavor.into_iter().map(Flavor::from).collect(),
        max_degree: cli.max_degree,
        survey_dim,
        up_to_iso,
    };
    match run(command, &request) {
        Ok(report) => {
            match cli.format {
                Format::Json => println!("{}", report.to_json()),
                Format::Csv => print!("{}", report.to_csv()),
            }
            for c in report.checks.iter().filter(|c| !c.passed) {
                eprintln!("check failed: {}", c.name);
            }
            ExitCode::from(report.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_input_error() { 1 } else { 2 })
        }
    }
}
