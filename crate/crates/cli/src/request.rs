//! Request parsing and validation. Dimensions and eigenvalues travel as
//! comma-separated flag values so that the Lie presets and explicit spaces
//! share one shape; the Lie subcommand forbids explicit dimensions and
//! resolves its preset into the request.

use clap::{Args, Parser, Subcommand, ValueEnum};
use lefzeta::LieGroupPreset;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// Malformed invocation: unknown subcommand, missing or unparsable flags,
    /// mismatched list lengths.
    #[error("{0}")]
    Usage(String),
    /// Structurally valid request rejected by the library's domain rules.
    #[error("{0}")]
    Domain(String),
    /// A cross-check that can only fail on an implementation defect failed.
    #[error("{0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain(_) => 3,
            CliError::Internal(_) => 4,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SubcommandKind {
    Betti,
    Lefschetz,
    Ell,
    Zeta,
    Series,
    Mperl,
    Hyperbolic,
    Transversal,
    Lie,
    Verify,
}

/// A fully validated invocation. For the Lie subcommand `dims` holds the
/// resolved preset dimensions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CommandRequest {
    pub subcommand: SubcommandKind,
    pub dims: Vec<i64>,
    pub eigs: Option<Vec<i64>>,
    pub horizon: u64,
    pub order: usize,
    pub format: OutputFormat,
    pub lie_family: Option<String>,
    pub lie_parameter: Option<u32>,
}

#[derive(Debug, Parser)]
#[command(
    name = "lefzeta",
    version,
    about = "Exact periodic-structure invariants of self-maps on products of spheres",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct CommonArgs {
    /// Comma-separated sphere dimensions, strictly increasing, e.g. 1,2,3.
    #[arg(long, value_name = "N1,N2,...")]
    dims: Option<String>,
    /// Comma-separated basic eigenvalues, one per sphere factor.
    #[arg(long, value_name = "A1,A2,...", allow_hyphen_values = true)]
    eigs: Option<String>,
    /// Largest iterate m for windowed sequences.
    #[arg(long, default_value_t = 20)]
    horizon: u64,
    /// Truncation order for power-series output.
    #[arg(long, default_value_t = 12)]
    order: usize,
    /// Output format.
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
}

#[derive(Debug, Args)]
struct LieArgs {
    /// Lie group family: SU or Sp.
    #[arg(long)]
    family: String,
    /// Family parameter n, as in SU(n) or Sp(n).
    #[arg(long)]
    n: u32,
    /// Comma-separated basic eigenvalues, one per sphere factor of the model.
    #[arg(long, value_name = "A1,A2,...", allow_hyphen_values = true)]
    eigs: Option<String>,
    #[arg(long, default_value_t = 20)]
    horizon: u64,
    #[arg(long, default_value_t = 12)]
    order: usize,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    /// Explicit dimensions are not accepted here; the preset supplies them.
    #[arg(long, value_name = "N1,N2,...", hide = true)]
    dims: Option<String>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Betti numbers of the sphere product.
    Betti(CommonArgs),
    /// Lefschetz numbers L(f^m) for m = 1..=horizon.
    Lefschetz(CommonArgs),
    /// Periodic Lefschetz numbers ell(f^m) for m = 1..=horizon.
    Ell(CommonArgs),
    /// The zeta function in canonical factored form, with its series.
    Zeta(CommonArgs),
    /// Power-series expansion of the zeta function from the Lefschetz sequence.
    Series(CommonArgs),
    /// Minimal set of Lefschetz periods (unit eigenvalues required).
    Mperl(CommonArgs),
    /// Periodic-point verdict for maps with all periodic points hyperbolic.
    Hyperbolic(CommonArgs),
    /// Period-set classification for transversal maps.
    Transversal(CommonArgs),
    /// Run the analyses on a Lie group's sphere-product model.
    Lie(LieArgs),
    /// Cross-validate the closed formulas against brute-force routes.
    Verify(CommonArgs),
}

fn parse_int_list(flag: &str, raw: &str) -> Result<Vec<i64>, CliError> {
    raw.split(',')
        .map(|token| {
            let token = token.trim();
            token.parse::<i64>().map_err(|_| {
                CliError::Usage(format!("--{flag}: `{token}` is not an integer"))
            })
        })
        .collect()
}

fn require_dims(args: &CommonArgs) -> Result<Vec<i64>, CliError> {
    match &args.dims {
        Some(raw) => parse_int_list("dims", raw),
        None => Err(CliError::Usage("--dims is required".to_string())),
    }
}

fn require_eigs(raw: &Option<String>) -> Result<Vec<i64>, CliError> {
    match raw {
        Some(raw) => parse_int_list("eigs", raw),
        None => Err(CliError::Usage("--eigs is required".to_string())),
    }
}

fn check_lengths(dims: &[i64], eigs: &[i64]) -> Result<(), CliError> {
    if dims.len() != eigs.len() {
        return Err(CliError::Usage(format!(
            "--eigs must list one eigenvalue per sphere factor: got {} dimensions but {} eigenvalues",
            dims.len(),
            eigs.len()
        )));
    }
    Ok(())
}

fn check_window(horizon: u64, order: usize) -> Result<(), CliError> {
    if horizon < 1 {
        return Err(CliError::Usage("--horizon must be at least 1".to_string()));
    }
    if order < 1 {
        return Err(CliError::Usage("--order must be at least 1".to_string()));
    }
    Ok(())
}

fn build_map_request(
    subcommand: SubcommandKind,
    args: &CommonArgs,
) -> Result<CommandRequest, CliError> {
    let dims = require_dims(args)?;
    let eigs = require_eigs(&args.eigs)?;
    check_lengths(&dims, &eigs)?;
    check_window(args.horizon, args.order)?;
    Ok(CommandRequest {
        subcommand,
        dims,
        eigs: Some(eigs),
        horizon: args.horizon,
        order: args.order,
        format: args.format,
        lie_family: None,
        lie_parameter: None,
    })
}

fn build_lie_request(args: &LieArgs) -> Result<CommandRequest, CliError> {
    if args.dims.is_some() {
        return Err(CliError::Usage(
            "--dims is not accepted with `lie`; the preset determines the dimensions".to_string(),
        ));
    }
    let preset = match args.family.as_str() {
        "SU" => LieGroupPreset::SpecialUnitary(args.n),
        "Sp" => LieGroupPreset::Symplectic(args.n),
        other => {
            return Err(CliError::Usage(format!(
                "--family must be SU or Sp, got `{other}`"
            )))
        }
    };
    let space = preset.space().map_err(|e| CliError::Domain(e.to_string()))?;
    let dims: Vec<i64> = space.dims().iter().map(|&d| d as i64).collect();
    let eigs = require_eigs(&args.eigs)?;
    check_lengths(&dims, &eigs)?;
    check_window(args.horizon, args.order)?;
    Ok(CommandRequest {
        subcommand: SubcommandKind::Lie,
        dims,
        eigs: Some(eigs),
        horizon: args.horizon,
        order: args.order,
        format: args.format,
        lie_family: Some(args.family.clone()),
        lie_parameter: Some(args.n),
    })
}

/// Parses an argv vector (including the program name) into a validated
/// request. Usage problems, including list-length mismatches, map to exit
/// code 2; only the Lie preset resolution can raise a domain error here.
pub fn parse_request(argv: &[String]) -> Result<CommandRequest, CliError> {
    let cli = Cli::try_parse_from(argv).map_err(|e| {
        let rendered = e.to_string();
        let rendered = rendered
            .strip_prefix("error: ")
            .map(str::to_string)
            .unwrap_or(rendered);
        CliError::Usage(rendered)
    })?;
    match &cli.command {
        Command::Betti(args) => {
            let dims = require_dims(args)?;
            if let Some(raw) = &args.eigs {
                let eigs = parse_int_list("eigs", raw)?;
                check_lengths(&dims, &eigs)?;
            }
            check_window(args.horizon, args.order)?;
            Ok(CommandRequest {
                subcommand: SubcommandKind::Betti,
                dims,
                eigs: None,
                horizon: args.horizon,
                order: args.order,
                format: args.format,
                lie_family: None,
                lie_parameter: None,
            })
        }
        Command::Lefschetz(args) => build_map_request(SubcommandKind::Lefschetz, args),
        Command::Ell(args) => build_map_request(SubcommandKind::Ell, args),
        Command::Zeta(args) => build_map_request(SubcommandKind::Zeta, args),
        Command::Series(args) => build_map_request(SubcommandKind::Series, args),
        Command::Mperl(args) => build_map_request(SubcommandKind::Mperl, args),
        Command::Hyperbolic(args) => build_map_request(SubcommandKind::Hyperbolic, args),
        Command::Transversal(args) => build_map_request(SubcommandKind::Transversal, args),
        Command::Lie(args) => build_lie_request(args),
        Command::Verify(args) => build_map_request(SubcommandKind::Verify, args),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn argv(parts: &[&str]) -> Vec<String> {
        std::iter::once("lefzeta")
            .chain(parts.iter().copied())
            .map(String::from)
            .collect()
    }

    #[test]
    fn parses_zeta_request() {
        let req = parse_request(&argv(&["zeta", "--dims", "1,2,3", "--eigs", "2,3,5"])).unwrap();
        assert_eq!(req.subcommand, SubcommandKind::Zeta);
        assert_eq!(req.dims, vec![1, 2, 3]);
        assert_eq!(req.eigs, Some(vec![2, 3, 5]));
        assert_eq!(req.horizon, 20);
        assert_eq!(req.order, 12);
        assert_eq!(req.format, OutputFormat::Text);
    }

    #[test]
    fn rejects_length_mismatch() {
        let err = parse_request(&argv(&["mperl", "--dims", "1,2", "--eigs", "1"])).unwrap_err();
        assert_eq!(err.exit_code(), 2);
    }

    #[test]
    fn resolves_lie_preset_dims() {
        let req = parse_request(&argv(&[
            "lie", "--family", "SU", "--n", "3", "--eigs", "-1,-1",
        ]))
        .unwrap();
        assert_eq!(req.dims, vec![3, 5]);
        assert_eq!(req.lie_family.as_deref(), Some("SU"));
        assert_eq!(req.lie_parameter, Some(3));
    }

    #[test]
    fn rejects_unknown_subcommand_and_bad_integers() {
        assert_eq!(
            parse_request(&argv(&["frobnicate"])).unwrap_err().exit_code(),
            2
        );
        assert_eq!(
            parse_request(&argv(&["zeta", "--dims", "1,x", "--eigs", "1,1"]))
                .unwrap_err()
                .exit_code(),
            2
        );
        assert_eq!(
            parse_request(&argv(&["zeta", "--eigs", "1,1"]))
                .unwrap_err()
                .exit_code(),
            2
        );
    }

    #[test]
    fn lie_rejects_explicit_dims_and_bad_family() {
        assert_eq!(
            parse_request(&argv(&[
                "lie", "--family", "SU", "--n", "3", "--eigs", "-1,-1", "--dims", "1,2",
            ]))
            .unwrap_err()
            .exit_code(),
            2
        );
        assert_eq!(
            parse_request(&argv(&["lie", "--family", "SO", "--n", "3", "--eigs", "-1"]))
                .unwrap_err()
                .exit_code(),
            2
        );
        // SU(1) resolves to an empty product: a domain rejection, not usage.
        assert_eq!(
            parse_request(&argv(&["lie", "--family", "SU", "--n", "1", "--eigs", "-1"]))
                .unwrap_err()
                .exit_code(),
            3
        );
    }
}
