use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::mellin::{ContourSpec, NormalizationKind, DEFAULT_INNER_RADIUS, DEFAULT_NODES_PER_SEGMENT};
use crate::special::BranchConvention;
use crate::spectrum::Spectrum;
use crate::zeta::{Func, NearIntegerPolicy};

/// Parse `<float>[(+|-)<float>i]` with no spaces, e.g. `0.5+14.13i`, `2`,
/// `-1e-3-4i`.
pub fn parse_complex(s: &str) -> Result<Complex64, String> {
    let bad = || format!("invalid complex literal '{s}' (expected <float>[(+|-)<float>i])");
    if s.is_empty() || s.chars().any(char::is_whitespace) {
        return Err(bad());
    }
    let finite = |x: &str| -> Result<f64, String> {
        let starts_ok = x
            .trim_start_matches(['+', '-'])
            .starts_with(|c: char| c.is_ascii_digit() || c == '.');
        match x.parse::<f64>() {
            Ok(v) if v.is_finite() && starts_ok => Ok(v),
            _ => Err(bad()),
        }
    };
    let Some(body) = s.strip_suffix('i') else {
        return Ok(Complex64::new(finite(s)?, 0.0));
    };
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E'))
        .ok_or_else(bad)?;
    let (re, im) = body.split_at(split);
    if im.len() < 2 {
        return Err(bad());
    }
    Ok(Complex64::new(finite(re)?, finite(im)?))
}

/// Inverse of [`parse_complex`] for finite values.
pub fn format_complex(z: Complex64) -> String {
    if z.im == 0.0 && z.im.is_sign_positive() {
        format!("{:?}", z.re)
    } else {
        let sign = if z.im.is_sign_negative() { '-' } else { '+' };
        format!("{:?}{sign}{:?}i", z.re, z.im.abs())
    }
}

fn parse_spectrum(s: &str) -> Result<Spectrum, String> {
    s.parse().map_err(|e: crate::Error| e.to_string())
}

fn parse_norm(s: &str) -> Result<NormalizationKind, String> {
    s.parse()
}

fn parse_branch(s: &str) -> Result<BranchConvention, String> {
    s.parse()
}

fn parse_func(s: &str) -> Result<Func, String> {
    s.parse()
}

fn parse_sign(s: &str) -> Result<i8, String> {
    match s {
        "+" | "+1" | "1" => Ok(1),
        "-" | "-1" => Ok(-1),
        _ => Err(format!("phase sign must be + or -, got '{s}'")),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Series,
    MellinReal,
    Hankel,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Series => "series",
            Method::MellinReal => "mellin-real",
            Method::Hankel => "hankel",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    Norm,
    ExpTrDet,
    Theorem,
    Involution,
    Hc,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum NearInteger {
    Ring,
    Fallback,
    Reject,
}

impl From<NearInteger> for NearIntegerPolicy {
    fn from(n: NearInteger) -> Self {
        match n {
            NearInteger::Ring => NearIntegerPolicy::Ring,
            NearInteger::Fallback => NearIntegerPolicy::Fallback,
            NearInteger::Reject => NearIntegerPolicy::Reject,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    /// Write to this file instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
pub struct ContourArgs {
    /// Inner circle radius.
    #[arg(long = "r", default_value_t = DEFAULT_INNER_RADIUS)]
    pub inner_radius: f64,
    /// Ray truncation radius (automatic when omitted).
    #[arg(long = "R")]
    pub truncation: Option<f64>,
    /// Node budget per contour segment.
    #[arg(long, default_value_t = DEFAULT_NODES_PER_SEGMENT)]
    pub nodes: usize,
    /// Ray tilt in radians (automatic when omitted).
    #[arg(long)]
    pub ray_angle: Option<f64>,
    #[arg(long, value_parser = parse_branch, default_value = "symmetric")]
    pub branch: BranchConvention,
}

impl ContourArgs {
    pub fn spec(&self) -> ContourSpec {
        ContourSpec {
            inner_radius: self.inner_radius,
            truncation: self.truncation,
            ray_angle: self.ray_angle,
            nodes_per_segment: self.nodes,
            branch: self.branch,
            ..ContourSpec::default()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
pub struct EvalSettings {
    #[arg(long, value_parser = parse_func, default_value = "zeta", help = "Function: zeta or eta")]
    pub func: Func,
    #[arg(long, value_enum, default_value = "hankel")]
    pub method: Method,
    /// Normalization override for the Mellin methods.
    #[arg(long, value_parser = parse_norm)]
    pub norm: Option<NormalizationKind>,
    /// Relative tolerance for quadrature and the series.
    #[arg(long, default_value = "1e-13")]
    pub tol: f64,
    /// Handling of the contour weight's poles at positive integers.
    #[arg(long, value_enum, default_value = "ring")]
    pub near_integer: NearInteger,
    #[command(flatten)]
    pub contour: ContourArgs,
}

#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
pub struct EvalArgs {
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub alpha: Complex64,
    #[command(flatten)]
    pub settings: EvalSettings,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
pub struct SweepArgs {
    /// Explicit points; combined with the grid when both are given.
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub alpha: Vec<Complex64>,
    #[arg(long, allow_hyphen_values = true)]
    pub re_min: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub re_max: Option<f64>,
    #[arg(long, default_value_t = 1)]
    pub re_steps: usize,
    #[arg(long, allow_hyphen_values = true, default_value_t = 0.0)]
    pub im_min: f64,
    #[arg(long, allow_hyphen_values = true, default_value_t = 0.0)]
    pub im_max: f64,
    #[arg(long, default_value_t = 1)]
    pub im_steps: usize,
    #[command(flatten)]
    pub settings: EvalSettings,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
pub struct ZerosArgs {
    #[arg(long)]
    pub t_min: f64,
    #[arg(long)]
    pub t_max: f64,
    #[arg(long, default_value_t = usize::MAX, hide_default_value = true)]
    pub max_count: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
pub struct CountArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub re_lo: f64,
    #[arg(long, allow_hyphen_values = true)]
    pub re_hi: f64,
    #[arg(long, allow_hyphen_values = true)]
    pub t_lo: f64,
    #[arg(long, allow_hyphen_values = true)]
    pub t_hi: f64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub check: Check,
    /// Spectrum: "natural:N" or a comma list of positive values.
    #[arg(long, value_parser = parse_spectrum, default_value = "1")]
    pub spectrum: Spectrum,
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub alpha: Option<Complex64>,
    #[arg(long, default_value_t = 0)]
    pub phase_n: u32,
    #[arg(long, value_parser = parse_sign, default_value = "+", allow_hyphen_values = true)]
    pub phase_sign: i8,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Number of random matrices for the exp-tr-det suite.
    #[arg(long, default_value_t = 200)]
    pub count: usize,
    /// Zero-search range for the involution and hc suites.
    #[arg(long, default_value_t = 1.0)]
    pub t_min: f64,
    #[arg(long, default_value_t = 50.0)]
    pub t_max: f64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, PartialEq, Subcommand, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "lowercase")]
pub enum Command {
    /// Evaluate ζ or η at one point.
    Eval(EvalArgs),
    /// Locate critical-line zeros in a range of ordinates.
    Zeros(ZerosArgs),
    /// Count zeros of ζ in a rectangle by the argument principle.
    Count(CountArgs),
    /// Run a named verification suite.
    Verify(VerifyArgs),
    /// Evaluate over a grid of α values.
    Sweep(SweepArgs),
}

#[derive(Debug, Clone, PartialEq, Parser)]
#[command(name = "hankel-zeta", version, about = "Mellin/Hankel-contour zeta and eta workbench")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

/// Parsed command line together with the argv it came from.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub argv: Vec<String>,
    #[serde(flatten)]
    pub command: Command,
}

impl RunConfig {
    pub fn output(&self) -> &OutputArgs {
        match &self.command {
            Command::Eval(a) => &a.output,
            Command::Zeros(a) => &a.output,
            Command::Count(a) => &a.output,
            Command::Verify(a) => &a.output,
            Command::Sweep(a) => &a.output,
        }
    }

    /// Reject combinations that no operation accepts.
    pub fn validate(&self) -> Result<(), String> {
        match &self.command {
            Command::Eval(a) => a.settings.validate(),
            Command::Sweep(a) => {
                a.settings.validate()?;
                if a.re_min.is_some() != a.re_max.is_some() {
                    return Err("--re-min and --re-max go together".into());
                }
                if a.alpha.is_empty() && a.re_min.is_none() {
                    return Err("sweep needs --alpha or a --re-min/--re-max grid".into());
                }
                if a.re_steps == 0 || a.im_steps == 0 {
                    return Err("grid step counts must be >= 1".into());
                }
                if a.re_steps.saturating_mul(a.im_steps) > 100_000 {
                    return Err("grid larger than 100000 points".into());
                }
                Ok(())
            }
            Command::Zeros(a) => {
                if !(a.t_min > 0.0 && a.t_max > a.t_min && a.t_max.is_finite()) {
                    return Err("zeros needs 0 < --t-min < --t-max".into());
                }
                Ok(())
            }
            Command::Count(a) => {
                if !(a.re_lo < a.re_hi && a.t_lo < a.t_hi) {
                    return Err("count needs --re-lo < --re-hi and --t-lo < --t-hi".into());
                }
                Ok(())
            }
            Command::Verify(a) => {
                if !(a.t_min > 0.0 && a.t_max > a.t_min) {
                    return Err("verify needs 0 < --t-min < --t-max".into());
                }
                if a.count == 0 {
                    return Err("--count must be >= 1".into());
                }
                Ok(())
            }
        }
    }
}

impl EvalSettings {
    fn validate(&self) -> Result<(), String> {
        if self.tol.is_nan() || self.tol <= 0.0 || self.tol >= 1.0 {
            return Err(format!("--tol must be in (0, 1), got {}", self.tol));
        }
        if self.method == Method::Series {
            if self.norm.is_some() {
                return Err("--norm applies only to the Mellin methods".into());
            }
            if self.tol < crate::zeta::MIN_SERIES_TOL {
                return Err(format!("series --tol must be >= {:e}", crate::zeta::MIN_SERIES_TOL));
            }
        }
        let c = &self.contour;
        if c.inner_radius.is_nan() || c.inner_radius <= 0.0 {
            return Err("--r must be positive".into());
        }
        if let Some(r) = c.truncation {
            if r.is_nan() || r <= c.inner_radius {
                return Err("--R must exceed --r".into());
            }
        }
        if let Some(psi) = c.ray_angle {
            if !(0.0..std::f64::consts::FRAC_PI_2).contains(&psi) {
                return Err("--ray-angle must lie in [0, pi/2)".into());
            }
        }
        if c.nodes < 15 {
            return Err("--nodes must be >= 15".into());
        }
        if let Some(n) = self.norm {
            let contour_norm = matches!(n, NormalizationKind::HankelGamma | NormalizationKind::HankelHaar);
            if (self.method == Method::Hankel) != contour_norm {
                return Err(format!("normalization {n} does not belong to method {}", self.method.name()));
            }
        }
        Ok(())
    }
}

/// Parse argv (including the program name).
pub fn parse_args<I, T>(argv: I) -> Result<RunConfig, clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<String>,
{
    let argv: Vec<String> = argv.into_iter().map(Into::into).collect();
    let cli = Cli::try_parse_from(&argv)?;
    Ok(RunConfig {
        argv: argv.into_iter().skip(1).collect(),
        command: cli.command,
    })
}
