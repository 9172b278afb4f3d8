use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{ArgAction, Parser, Subcommand};

use stickelberger::arith::parse_rational;
use stickelberger::cli::{run, Command, Format, GroupSource, RunConfig, DEFAULT_QS};

#[derive(Parser)]
#[command(name = "stickelberger", version, about = "Stickelberger pairings, character tables and tame resolvends")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,

    /// Builtin group name (C6, D4, S4, ...) or file:<path>.
    #[arg(long, global = true)]
    group: Option<String>,

    /// Residue field sizes, comma separated.
    #[arg(long, global = true, value_delimiter = ',', default_values_t = DEFAULT_QS)]
    q: Vec<u64>,

    /// pretty, json or csv.
    #[arg(long, global = true, default_value = "pretty")]
    format: Format,

    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Require q to be a prime power and all data tame.
    #[arg(long, global = true, default_value_t = true, action = ArgAction::Set)]
    strict: bool,

    /// Write output to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Character table.
    Table,
    /// Pairing matrix, Theta images, A_G and Sigma_q sets.
    Pairing,
    /// Theta(chi) for the given coordinates, or for every irreducible.
    Theta {
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        chi: Option<Vec<String>>,
    },
    /// The lattice A_G of characters with trivial determinant.
    Ag,
    /// Sigma_q(G) for each q.
    Sigma,
    /// Class fingerprints.
    Fingerprint,
    /// Det of the phi-resolvend against characters.
    DetResolvend {
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        chi: Option<Vec<String>>,
        /// Element label or #index.
        #[arg(long)]
        s: Option<String>,
    },
    /// Factorise sigma -> s, phi -> t through the tame quotient.
    Factorise {
        #[arg(long)]
        s: Option<String>,
        #[arg(long)]
        t: Option<String>,
    },
    /// Discriminant valuations per class.
    Disc,
    /// Run the verification suite.
    Verify {
        /// Every builtin group instead of --group.
        #[arg(long)]
        all_catalog: bool,
        /// Check a character table in JSON form instead of running the suite.
        #[arg(long)]
        table: Option<PathBuf>,
    },
}

fn parse_chi(chi: Option<Vec<String>>) -> Result<Option<Vec<num_rational::BigRational>>, stickelberger::Error> {
    chi.map(|v| v.iter().map(|s| parse_rational(s)).collect()).transpose()
}

fn config(cli: Cli) -> Result<RunConfig, stickelberger::Error> {
    let (mut chi, mut s, mut t, mut table, mut all) = (None, None, None, None, false);
    let command = match cli.command {
        Cmd::Table => Command::Table,
        Cmd::Pairing => Command::Pairing,
        Cmd::Theta { chi: c } => {
            chi = parse_chi(c)?;
            Command::Theta
        }
        Cmd::Ag => Command::Ag,
        Cmd::Sigma => Command::Sigma,
        Cmd::Fingerprint => Command::Fingerprint,
        Cmd::DetResolvend { chi: c, s: el } => {
            chi = parse_chi(c)?;
            s = el;
            Command::DetResolvend
        }
        Cmd::Factorise { s: a, t: b } => {
            s = a;
            t = b;
            Command::Factorise
        }
        Cmd::Disc => Command::Disc,
        Cmd::Verify { all_catalog, table: tab } => {
            all = all_catalog;
            table = tab;
            Command::Verify
        }
    };
    let group = match (cli.group, all) {
        (Some(_), true) => {
            return Err(stickelberger::Error::InvalidParameter(
                "give either --group or --all-catalog".into(),
            ))
        }
        (Some(name), false) => GroupSource::Named(name),
        (None, true) => GroupSource::AllCatalog,
        (None, false) => {
            return Err(stickelberger::Error::InvalidParameter("--group is required".into()))
        }
    };
    let mut cfg = RunConfig::new(command, group);
    cfg.qs = cli.q;
    cfg.format = cli.format;
    cfg.seed = cli.seed;
    cfg.strict = cli.strict;
    cfg.out = cli.out;
    cfg.chi = chi;
    cfg.s = s;
    cfg.t = t;
    cfg.table = table;
    Ok(cfg)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = match config(cli) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let start = Instant::now();
    let output = match run(&cfg) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let written = match &cfg.out {
        Some(path) => std::fs::write(path, &output.text),
        None => {
            print!("{}", output.text);
            Ok(())
        }
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    if cfg.command == Command::Verify {
        eprintln!("elapsed {:.2}s", start.elapsed().as_secs_f64());
    }
    if output.success {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
