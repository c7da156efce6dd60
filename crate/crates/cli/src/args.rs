use clap::{Args, Parser, Subcommand, ValueEnum};
use klcap::{Flavor, GroupConfig, Weight};

use crate::CliError;

/// Arrow, cap and curl diagrams for blocks of GL and Sp in odd characteristic.
#[derive(Debug, Parser)]
#[command(name = "klcap", version)]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Ascii, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Ascii,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Arrow diagram of a weight, optionally with its cap or co-cap diagram.
    Diagram {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long)]
        weight: Weight,
        /// Print the node labels under the diagram.
        #[arg(long)]
        labels: bool,
        #[arg(long, conflicts_with = "cocaps")]
        caps: bool,
        #[arg(long)]
        cocaps: bool,
    },
    /// Members of the orbit of a weight, marking those below it.
    Orbit {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long)]
        weight: Weight,
    },
    /// A row of d, e, p or r over the orbit, or a single entry with --mu.
    Poly {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long)]
        weight: Weight,
        #[arg(long)]
        mu: Option<Weight>,
        #[arg(long, value_enum, default_value_t = FamilyArg::P)]
        family: FamilyArg,
        #[arg(long, value_enum, default_value_t = Algo::Inversion)]
        algo: Algo,
    },
    /// Tilting or injective resolution of a weight.
    Resolve {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        weight: Weight,
    },
    /// Compares stable diagrams and tables between two primes and with characteristic zero.
    Limit {
        #[arg(long)]
        group: Flavor,
        #[arg(long, allow_hyphen_values = true)]
        delta: i64,
        /// `r1,r2,s1,s2` for GL, `r,s` for Sp.
        #[arg(long)]
        bounds: String,
        #[arg(long)]
        p1: Option<u32>,
        #[arg(long)]
        p2: Option<u32>,
        #[arg(long)]
        t: Option<u32>,
        /// Also print the stable diagram of this weight.
        #[arg(long)]
        weight: Option<Weight>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    D,
    E,
    P,
    R,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algo {
    Inversion,
    Recursion,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Tilting,
    Injective,
}

#[derive(Debug, Args)]
pub struct GroupArgs {
    #[arg(long)]
    pub group: Flavor,
    #[arg(long)]
    pub p: u32,
    #[arg(long)]
    pub n: Option<u32>,
    #[arg(long)]
    pub s1: Option<u32>,
    #[arg(long)]
    pub s2: Option<u32>,
    #[arg(long)]
    pub m: Option<u32>,
    #[arg(long)]
    pub s: Option<u32>,
}

fn need(v: Option<u32>, flag: &str, group: Flavor) -> Result<u32, CliError> {
    v.ok_or_else(|| CliError::Usage(format!("--{flag} is required for --group {group}")))
}

impl GroupArgs {
    pub fn config(&self) -> Result<GroupConfig, CliError> {
        let g = self.group;
        let (extra, cfg) = match g {
            Flavor::Gl => (
                [("m", self.m), ("s", self.s)],
                GroupConfig::gl(
                    self.p,
                    need(self.n, "n", g)?,
                    need(self.s1, "s1", g)?,
                    need(self.s2, "s2", g)?,
                ),
            ),
            Flavor::Sp => (
                [("n", self.n), ("s1", self.s1)],
                GroupConfig::sp(self.p, need(self.m, "m", g)?, need(self.s, "s", g)?),
            ),
        };
        if let Some((flag, _)) = extra.iter().find(|(_, v)| v.is_some()) {
            return Err(CliError::Usage(format!("--{flag} does not apply to --group {g}")));
        }
        if g == Flavor::Sp && self.s2.is_some() {
            return Err(CliError::Usage("--s2 does not apply to --group sp".into()));
        }
        cfg.map_err(|e| CliError::Usage(e.to_string()))
    }
}

pub fn parse_bounds(group: Flavor, text: &str) -> Result<Vec<u32>, CliError> {
    let parts = text
        .split(',')
        .map(|t| t.trim().parse::<u32>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| CliError::Usage(format!("bad --bounds `{text}`: {e}")))?;
    let want = match group {
        Flavor::Gl => 4,
        Flavor::Sp => 2,
    };
    if parts.len() != want {
        return Err(CliError::Usage(format!(
            "--bounds for --group {group} takes {want} comma separated numbers"
        )));
    }
    Ok(parts)
}
