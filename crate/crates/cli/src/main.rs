use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;

use commands::{Outcome, Status};

#[derive(Parser)]
#[command(name = "kringoid", version, about = "Bounded K-theory of finite ringoids")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Machine,
}

fn parse_ceiling(s: &str) -> Result<u64, String> {
    let bad = || format!("`{s}` is not a count (use 1048576 or 2^20)");
    match s.split_once('^') {
        Some((b, e)) => {
            let b: u64 = b.trim().parse().map_err(|_| bad())?;
            let e: u32 = e.trim().parse().map_err(|_| bad())?;
            b.checked_pow(e).ok_or_else(bad)
        }
        None => s.trim().parse().map_err(|_| bad()),
    }
}

#[derive(Args, Clone, Debug)]
struct Common {
    /// RGD document to read.
    #[arg(long)]
    input: PathBuf,
    /// Longest object sum considered.
    #[arg(long, default_value_t = 3)]
    bound: usize,
    /// Largest rank of GL computed.
    #[arg(long = "gl-max", default_value_t = 2)]
    gl_max: usize,
    /// Candidates examined per isomorphism search before giving up.
    #[arg(long, default_value = "2^20", value_parser = parse_ceiling)]
    ceiling: u64,
    #[arg(long, value_enum, default_value_t = Format::Human)]
    format: Format,
}

#[derive(Args, Clone, Debug)]
struct Pick {
    /// Ringoid to use; defaults to the last one in the document.
    #[arg(long)]
    ringoid: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Check the axioms of every ringoid, homomorphism and ideal.
    Validate {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        pick: Pick,
    },
    /// Biproducts and isomorphism classes in the additive completion.
    Complete {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        pick: Pick,
    },
    /// Bounded K0 (relative K0 for a moduloid without identities).
    K0 {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        pick: Pick,
    },
    /// Abelianized GL_n and the stabilization maps.
    K1 {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        pick: Pick,
    },
    /// Print the unitization as RGD.
    Unitize {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        pick: Pick,
    },
    /// Print the quotient by an ideal as RGD.
    Quotient {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        ideal: String,
    },
    /// Print the tensor product as RGD.
    Tensor {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
    /// Print the group ringoid of a groupoid as RGD.
    Groupring {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        groupoid: String,
        #[arg(long)]
        ring: String,
    },
    /// Describe the transport groupoid of a G-set.
    Transport {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        gset: String,
    },
    /// Degree-zero assembly for a groupoid or a G-set, or naturality for a G-map.
    Assembly {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        ring: String,
        #[arg(long, conflicts_with_all = ["gset", "gmap"])]
        groupoid: Option<String>,
        #[arg(long, conflicts_with = "gmap")]
        gset: Option<String>,
        #[arg(long)]
        gmap: Option<String>,
    },
    /// Check the simplicial identities of the nerve.
    NerveCheck {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        pick: Pick,
        /// Highest level checked.
        #[arg(long, default_value_t = 3)]
        level: usize,
    },
    /// Compare bounded K0 with the nerve presentation.
    OracleCompare {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        pick: Pick,
    },
}

fn run(cli: Cli) -> Result<(Outcome, Format), commands::CliError> {
    use commands as c;
    let (common, outcome) = match cli.command {
        Command::Validate { common, pick } => {
            let m = c::load(&common.input)?;
            let o = c::validate(&m, pick.ringoid.as_deref())?;
            (common, o)
        }
        Command::Complete { common, pick } => {
            let m = c::load(&common.input)?;
            let o = c::complete(&m, pick.ringoid.as_deref(), common.bound, common.ceiling)?;
            (common, o)
        }
        Command::K0 { common, pick } => {
            let m = c::load(&common.input)?;
            let o = c::k0(&m, pick.ringoid.as_deref(), common.bound, common.ceiling)?;
            (common, o)
        }
        Command::K1 { common, pick } => {
            let m = c::load(&common.input)?;
            let o = c::k1(&m, pick.ringoid.as_deref(), common.gl_max, common.ceiling)?;
            (common, o)
        }
        Command::Unitize { common, pick } => {
            let m = c::load(&common.input)?;
            let o = c::unitize(&m, pick.ringoid.as_deref())?;
            (common, o)
        }
        Command::Quotient { common, ideal } => {
            let m = c::load(&common.input)?;
            let o = c::quotient(&m, &ideal)?;
            (common, o)
        }
        Command::Tensor { common, left, right } => {
            let m = c::load(&common.input)?;
            let o = c::tensor(&m, &left, &right)?;
            (common, o)
        }
        Command::Groupring { common, groupoid, ring } => {
            let m = c::load(&common.input)?;
            let o = c::groupring(&m, &groupoid, &ring)?;
            (common, o)
        }
        Command::Transport { common, gset } => {
            let m = c::load(&common.input)?;
            let o = c::transport(&m, &gset)?;
            (common, o)
        }
        Command::Assembly {
            common,
            ring,
            groupoid,
            gset,
            gmap,
        } => {
            let m = c::load(&common.input)?;
            let target = match (groupoid, gset, gmap) {
                (Some(g), None, None) => c::AssemblyTarget::Groupoid(g),
                (None, Some(x), None) => c::AssemblyTarget::GSet(x),
                (None, None, Some(f)) => c::AssemblyTarget::GMap(f),
                _ => return Err(c::CliError::Usage("give one of --groupoid, --gset or --gmap".into())),
            };
            let o = c::assembly(&m, &ring, &target, common.bound, common.ceiling)?;
            (common, o)
        }
        Command::NerveCheck { common, pick, level } => {
            let m = c::load(&common.input)?;
            let o = c::nerve_check(&m, pick.ringoid.as_deref(), level, common.bound)?;
            (common, o)
        }
        Command::OracleCompare { common, pick } => {
            let m = c::load(&common.input)?;
            let o = c::oracle_compare(&m, pick.ringoid.as_deref(), common.bound, common.ceiling)?;
            (common, o)
        }
    };
    Ok((outcome, common.format))
}

fn main() -> ExitCode {
    // clap reports usage errors with status 2, which is reserved for undecided verdicts
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok((outcome, format)) => {
            match format {
                Format::Human => print!("{}", outcome.human),
                Format::Machine => {
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&outcome.machine).expect("serializable")
                    )
                }
            }
            for note in &outcome.diagnostics {
                eprintln!("{note}");
            }
            match outcome.status {
                Status::Ok => ExitCode::SUCCESS,
                Status::Failed => ExitCode::from(1),
                Status::Undecided => ExitCode::from(2),
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
