use clap::{Args, Parser, Subcommand};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;
use supercohom::bar::DEFAULT_BUDGET;
use supercohom::specseq::Reindex;
use supercohom_cli::commands::{self, CohomologyOptions, Method, Sequence, SpecSeqOptions};
use supercohom_cli::{CliError, Input, RunReport};

#[derive(Parser)]
#[command(name = "supercohom", version, about = "Cohomology of restricted Lie superalgebras over F_p")]
struct Cli {
    /// Print the elapsed time to stderr.
    #[arg(long, global = true)]
    timing: bool,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Args)]
struct Source {
    /// Algebra file.
    file: Option<PathBuf>,
    /// Built-in example instead of a file.
    #[arg(long, conflicts_with = "file")]
    example: Option<String>,
    /// Prime for built-in examples.
    #[arg(long, default_value_t = 3)]
    p: u32,
}

impl Source {
    fn load(&self) -> Result<Input, CliError> {
        match (&self.file, &self.example) {
            (Some(path), _) => Input::from_file(path),
            (None, Some(name)) => Input::builtin(name, self.p),
            (None, None) => Err(CliError::Input("give an algebra file or --example NAME".into())),
        }
    }
}

#[derive(Subcommand)]
enum Verb {
    /// Parse and validate an algebra.
    Check {
        #[command(flatten)]
        source: Source,
    },
    /// Betti numbers of ordinary or restricted cohomology.
    Cohomology {
        #[command(flatten)]
        source: Source,
        /// Ordinary Lie superalgebra cohomology H(L,M).
        #[arg(long, conflicts_with = "restricted")]
        lie: bool,
        /// Restricted cohomology H(V(L),M) (the default).
        #[arg(long)]
        restricted: bool,
        #[arg(long)]
        max_degree: Option<usize>,
        #[arg(long, default_value = "k")]
        module: String,
        #[arg(long, default_value = "may")]
        method: Method,
        /// Largest cobar basis allowed.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
    },
    /// Cup products and generator degrees of H(V(L),k).
    Ring {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        max_degree: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
    },
    /// Page dimensions of the E- or D-spectral sequence.
    Specseq {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value = "E")]
        sequence: Sequence,
        /// Print pages 0..=R.
        #[arg(long, default_value_t = 2)]
        pages: usize,
        /// may-original, jantzen or friedlander-parshall.
        #[arg(long, default_value = "may-original")]
        reindex: Reindex,
        #[arg(long, default_value = "k")]
        module: String,
        #[arg(long)]
        max_degree: Option<usize>,
        /// Run the closed-form, permanence, comparison and convergence checks.
        #[arg(long)]
        verify: bool,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
    },
    /// Run the invariant battery.
    Verify {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        max_degree: Option<usize>,
    },
    /// List the built-in examples or print one as a file.
    Examples {
        #[arg(long, default_value_t = 3)]
        p: u32,
        #[arg(long)]
        show: Option<String>,
    },
}

fn run(cli: &Cli, command: &str) -> Result<RunReport, CliError> {
    match &cli.verb {
        Verb::Check { source } => commands::cmd_check(&source.load()?, command),
        Verb::Cohomology { source, lie, restricted: _, max_degree, module, method, budget } => {
            let opts = CohomologyOptions { restricted: !lie, max_degree: *max_degree, module: module.clone(), method: *method, budget: *budget };
            commands::cmd_cohomology(&source.load()?, command, &opts)
        }
        Verb::Ring { source, max_degree, budget } => commands::cmd_ring(&source.load()?, command, *max_degree, *budget),
        Verb::Specseq { source, sequence, pages, reindex, module, max_degree, verify, budget } => {
            let opts = SpecSeqOptions {
                sequence: *sequence,
                pages: *pages,
                reindex: *reindex,
                module: module.clone(),
                max_degree: *max_degree,
                verify: *verify,
                budget: *budget,
            };
            commands::cmd_specseq(&source.load()?, command, &opts)
        }
        Verb::Verify { source, max_degree } => commands::cmd_verify(&source.load()?, command, *max_degree),
        Verb::Examples { p, show } => commands::cmd_examples(command, *p, show.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let command = std::env::args().skip(1).filter(|a| a != "--timing").collect::<Vec<_>>().join(" ");
    let start = Instant::now();
    let result = run(&cli, &command);
    if cli.timing {
        eprintln!("elapsed: {:.3} s", start.elapsed().as_secs_f64());
    }
    match result {
        Ok(report) => {
            let text = report.render();
            match &cli.out {
                Some(path) => {
                    if let Err(e) = std::fs::write(path, &text) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return ExitCode::from(2);
                    }
                }
                None => print!("{text}"),
            }
            ExitCode::from(if report.failed() { 1 } else { 0 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
