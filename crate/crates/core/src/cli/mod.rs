//! Batch front end: group ingestion, computation commands and the
//! verification suite. Every command renders to a string so output can be
//! compared byte for byte.

mod emit;
mod verify;

use std::path::PathBuf;
use std::sync::Arc;

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::grp::{catalog, resolve_group, FiniteGroup};

pub use emit::{format_value, parse_value, TableJson};
pub use verify::{check_anchor, verify, CheckResult, Status, Summary, VerificationReport, CHECKS};

/// Output flavour.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Pretty,
    Json,
    Csv,
}

impl std::str::FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "pretty" => Ok(Format::Pretty),
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            _ => Err(Error::Parse(format!("unknown format `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Table,
    Pairing,
    Theta,
    Ag,
    Sigma,
    Fingerprint,
    DetResolvend,
    Factorise,
    Disc,
    Verify,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Table => "table",
            Command::Pairing => "pairing",
            Command::Theta => "theta",
            Command::Ag => "ag",
            Command::Sigma => "sigma",
            Command::Fingerprint => "fingerprint",
            Command::DetResolvend => "det-resolvend",
            Command::Factorise => "factorise",
            Command::Disc => "disc",
            Command::Verify => "verify",
        }
    }
}

/// Where the group comes from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSource {
    /// A builtin name or `file:<path>`.
    Named(String),
    AllCatalog,
}

pub const DEFAULT_QS: [u64; 4] = [2, 3, 5, 7];

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub command: Command,
    pub group: GroupSource,
    pub qs: Vec<u64>,
    pub format: Format,
    pub seed: u64,
    pub strict: bool,
    pub out: Option<PathBuf>,
    /// Coordinates over `Irr(G)` for `theta` and `det-resolvend`.
    pub chi: Option<Vec<BigRational>>,
    /// Element designators (label or index) for `det-resolvend` and `factorise`.
    pub s: Option<String>,
    pub t: Option<String>,
    /// Table file for `verify`.
    pub table: Option<PathBuf>,
}

impl RunConfig {
    pub fn new(command: Command, group: GroupSource) -> Self {
        RunConfig {
            command,
            group,
            qs: DEFAULT_QS.to_vec(),
            format: Format::Pretty,
            seed: 0,
            strict: true,
            out: None,
            chi: None,
            s: None,
            t: None,
            table: None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if let Some(q) = self.qs.iter().find(|&&q| q < 2) {
            return Err(Error::InvalidParameter(format!("q = {q} must be at least 2")));
        }
        if self.qs.is_empty() {
            return Err(Error::InvalidParameter("empty q list".into()));
        }
        if self.group == GroupSource::AllCatalog && self.command != Command::Verify {
            return Err(Error::InvalidParameter(
                "--all-catalog is only accepted by verify".into(),
            ));
        }
        Ok(())
    }

    pub fn groups(&self) -> Result<Vec<Arc<FiniteGroup>>> {
        match &self.group {
            GroupSource::Named(name) => Ok(vec![resolve_group(name)?]),
            GroupSource::AllCatalog => Ok(catalog().into_iter().map(Arc::new).collect()),
        }
    }
}

/// Rendered command output. `success` is false when a verification check
/// failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub success: bool,
}

/// Run one command.
pub fn run(config: &RunConfig) -> Result<Output> {
    config.validate()?;
    if config.command == Command::Verify {
        let report = verify(config)?;
        let success = report.summary.failed == 0;
        return Ok(Output {
            text: report.render(config.format)?,
            success,
        });
    }
    let group = config.groups()?.remove(0);
    let text = match config.command {
        Command::Table => emit::table(&group, config.format)?,
        Command::Pairing => emit::pairing(&group, config)?,
        Command::Theta => emit::theta(&group, config)?,
        Command::Ag => emit::ag(&group, config.format)?,
        Command::Sigma => emit::sigma(&group, config)?,
        Command::Fingerprint => emit::fingerprint(&group, config.format)?,
        Command::DetResolvend => emit::det_resolvend(&group, config)?,
        Command::Factorise => emit::factorise(&group, config)?,
        Command::Disc => emit::disc(&group, config.format)?,
        Command::Verify => unreachable!("handled above"),
    };
    Ok(Output {
        text,
        success: true,
    })
}

/// Resolve an element designator: a label, or a decimal index prefixed by `#`.
pub fn resolve_element(group: &FiniteGroup, spec: &str) -> Result<usize> {
    let spec = spec.trim();
    if let Some(i) = spec.strip_prefix('#') {
        let i: usize = i
            .parse()
            .map_err(|_| Error::Parse(format!("invalid element index `{spec}`")))?;
        if i >= group.order() {
            return Err(Error::InvalidParameter(format!("element index {i} out of range")));
        }
        return Ok(i);
    }
    let normalise = |s: &str| s.split_whitespace().collect::<Vec<_>>().join(" ");
    let want = normalise(spec);
    group
        .labels()
        .iter()
        .position(|l| normalise(l) == want)
        .ok_or_else(|| Error::InvalidParameter(format!("no element labelled `{spec}` in {}", group.name())))
}
