//! Command-line front end.
//!
//! Settings come from, in increasing precedence: built-in defaults, a JSON
//! config file (`--config`), command-line flags, and for the seed only the
//! `GDOF_SEED` environment variable.

use std::path::{Path, PathBuf};

use clap::{Parser, ValueEnum};
use gdof_core::polytope::find_split;
use gdof_core::region::Bound7Form;
use gdof_core::{
    dof_region, gdof_region_with, insight_curve, mac_gdof_region, parse_rational, rat, siso_region,
    split_region, symmetric_curve, tin_gdof_region, AntennaConfig, ExponentProfile, InsightCurve,
    MacConfig, Rational, WeightedTerm,
};
use serde::Deserialize;
use serde_json::Value;

use crate::error::{GdofError, Result};
use crate::io;
use crate::verify::{self, SlopeReport, VerifyOptions};

pub const SEED_ENV: &str = "GDOF_SEED";

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_INVALID: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    /// GDoF region: half-spaces and vertices
    Region,
    /// Private/public split constraints, plus a witness for --point
    Split,
    /// Symmetric GDoF sweep, or a named curve with --curve
    Curve,
    /// DoF region (all exponents one)
    Dof,
    /// Single-antenna GDoF region
    Siso,
    /// Two-user MAC GDoF region; --antennas M1,M2,N --alpha a
    Mac,
    /// Treating-interference-as-noise box; --antennas M,N --alpha a
    Tin,
    /// Monte Carlo slope checks
    Verify,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    /// Two-block MAC slope
    Lemma4,
    /// Three-block MAC slope
    Lemma5,
    /// All seven outer bounds of the interference channel
    Theorem1,
    #[default]
    All,
}

impl Suite {
    fn name(&self) -> &'static str {
        match self {
            Suite::Lemma4 => "lemma4",
            Suite::Lemma5 => "lemma5",
            Suite::Theorem1 => "theorem1",
            Suite::All => "all",
        }
    }
}

#[derive(Debug, Parser, Default)]
#[command(name = "gdof", version, about = "GDoF regions of the two-user MIMO interference channel")]
pub struct Cli {
    /// What to compute (may instead come from the config file)
    #[arg(value_enum)]
    pub command: Option<Command>,
    /// Antenna counts: M1,N1,M2,N2 (M1,M2,N for mac; M,N for tin and named curves)
    #[arg(long)]
    pub antennas: Option<String>,
    /// Exponents a11,a12,a21,a22 as exact rationals, e.g. 1,3/5,3/5,1 (one value for mac and tin)
    #[arg(long)]
    pub alpha: Option<String>,
    /// Point d1,d2 to split into private and public parts
    #[arg(long)]
    pub point: Option<String>,
    /// Comma-separated alpha values for curves
    #[arg(long)]
    pub sweep: Option<String>,
    /// Named curve: w-curve-MgeN, v-curve-1121, tin-overlay
    #[arg(long)]
    pub curve: Option<String>,
    #[arg(long, value_enum)]
    pub suite: Option<Suite>,
    /// Receive dimension for the lemma4/lemma5 suites
    #[arg(long)]
    pub u: Option<u32>,
    /// Blocks exponent:width for the lemma4/lemma5 suites, e.g. 1/2:3,1:4
    #[arg(long)]
    pub terms: Option<String>,
    /// Base seed; GDOF_SEED overrides it
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub trials: Option<usize>,
    #[arg(long)]
    pub tolerance: Option<f64>,
    #[arg(long = "rho-lo")]
    pub rho_lo: Option<f64>,
    #[arg(long = "rho-hi")]
    pub rho_hi: Option<f64>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Use the transposed first term in the d1 + 2 a22 d2 bound
    #[arg(long)]
    pub printed_bound7: bool,
    /// JSON file with any of the above settings
    #[arg(long)]
    pub config: Option<PathBuf>,
}

/// Contents of a `--config` file. List-valued fields accept either the
/// command-line string form or a JSON array.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    pub command: Option<Command>,
    pub antennas: Option<Value>,
    pub alpha: Option<Value>,
    pub point: Option<Value>,
    pub sweep: Option<Value>,
    pub curve: Option<String>,
    pub suite: Option<Suite>,
    pub u: Option<u32>,
    pub terms: Option<String>,
    pub seed: Option<u64>,
    pub trials: Option<usize>,
    pub tolerance: Option<f64>,
    pub rho_lo: Option<f64>,
    pub rho_hi: Option<f64>,
    pub format: Option<Format>,
    pub printed_bound7: Option<bool>,
}

impl ConfigFile {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Ok(serde_json::from_str(&text)?)
    }
}

/// Fully resolved settings for one run.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    pub antennas: Option<Vec<u32>>,
    pub alpha: Option<Vec<Rational>>,
    pub point: Option<[Rational; 2]>,
    pub sweep: Option<Vec<Rational>>,
    pub curve: Option<String>,
    pub suite: Suite,
    pub u: Option<u32>,
    pub terms: Option<Vec<WeightedTerm>>,
    pub seed: u64,
    pub trials: usize,
    pub tolerance: f64,
    pub rho_lo: f64,
    pub rho_hi: f64,
    pub format: Format,
    pub bound7: Bound7Form,
}

fn invalid(msg: impl Into<String>) -> GdofError {
    GdofError::Invalid(msg.into())
}

fn list_text(v: &Value) -> Result<String> {
    match v {
        Value::String(s) => Ok(s.clone()),
        Value::Array(items) => items
            .iter()
            .map(|x| match x {
                Value::String(s) => Ok(s.clone()),
                Value::Number(n) => Ok(n.to_string()),
                _ => Err(invalid(format!("unsupported list entry {x}"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(|v| v.join(",")),
        _ => Err(invalid(format!("expected a string or array, found {v}"))),
    }
}

fn split_list(s: &str) -> Vec<&str> {
    s.split(',').map(str::trim).filter(|x| !x.is_empty()).collect()
}

pub fn parse_counts(s: &str) -> Result<Vec<u32>> {
    split_list(s)
        .into_iter()
        .map(|x| x.parse::<u32>().map_err(|_| invalid(format!("invalid antenna count {x:?}"))))
        .collect()
}

pub fn parse_rationals(s: &str) -> Result<Vec<Rational>> {
    split_list(s)
        .into_iter()
        .map(|x| parse_rational(x).map_err(GdofError::from))
        .collect()
}

pub fn parse_terms(s: &str) -> Result<Vec<WeightedTerm>> {
    split_list(s)
        .into_iter()
        .map(|t| {
            let (a, w) = t
                .split_once(':')
                .ok_or_else(|| invalid(format!("term {t:?} should look like exponent:width")))?;
            let width = w.trim().parse::<u32>().map_err(|_| invalid(format!("invalid width in {t:?}")))?;
            Ok(WeightedTerm::new(parse_rational(a)?, width))
        })
        .collect()
}

impl RunConfig {
    /// Merges flags over the config file, then applies `env_seed`.
    pub fn resolve(cli: &Cli, env_seed: Option<&str>) -> Result<Self> {
        let file = match &cli.config {
            Some(p) => ConfigFile::load(p)?,
            None => ConfigFile::default(),
        };
        let text = |flag: &Option<String>, fallback: &Option<Value>| -> Result<Option<String>> {
            match (flag, fallback) {
                (Some(s), _) => Ok(Some(s.clone())),
                (None, Some(v)) => list_text(v).map(Some),
                (None, None) => Ok(None),
            }
        };
        let command = cli
            .command
            .or(file.command)
            .ok_or_else(|| invalid("no command given"))?;
        let point = match text(&cli.point, &file.point)? {
            Some(s) => {
                let p = parse_rationals(&s)?;
                if p.len() != 2 {
                    return Err(invalid("--point needs two values d1,d2"));
                }
                Some([p[0].clone(), p[1].clone()])
            }
            None => None,
        };
        let seed = match env_seed {
            Some(s) => s
                .trim()
                .parse::<u64>()
                .map_err(|_| invalid(format!("{SEED_ENV}={s:?} is not an unsigned integer")))?,
            None => cli.seed.or(file.seed).unwrap_or(0),
        };
        let terms_text = cli.terms.clone().or(file.terms);
        let cfg = RunConfig {
            command,
            antennas: text(&cli.antennas, &file.antennas)?.map(|s| parse_counts(&s)).transpose()?,
            alpha: text(&cli.alpha, &file.alpha)?.map(|s| parse_rationals(&s)).transpose()?,
            point,
            sweep: text(&cli.sweep, &file.sweep)?.map(|s| parse_rationals(&s)).transpose()?,
            curve: cli.curve.clone().or(file.curve),
            suite: cli.suite.or(file.suite).unwrap_or_default(),
            u: cli.u.or(file.u),
            terms: terms_text.map(|s| parse_terms(&s)).transpose()?,
            seed,
            trials: cli.trials.or(file.trials).unwrap_or(verify::DEFAULT_TRIALS),
            tolerance: cli.tolerance.or(file.tolerance).unwrap_or(verify::DEFAULT_TOLERANCE),
            rho_lo: cli.rho_lo.or(file.rho_lo).unwrap_or(verify::DEFAULT_RHO.0),
            rho_hi: cli.rho_hi.or(file.rho_hi).unwrap_or(verify::DEFAULT_RHO.1),
            format: cli.format.or(file.format).unwrap_or_default(),
            bound7: if cli.printed_bound7 || file.printed_bound7.unwrap_or(false) {
                Bound7Form::AsPrinted
            } else {
                Bound7Form::Derived
            },
        };
        if cfg.trials == 0 {
            return Err(invalid("--trials must be at least 1"));
        }
        if cfg.tolerance.is_nan() || cfg.tolerance < 0.0 {
            return Err(invalid("--tolerance must be nonnegative"));
        }
        Ok(cfg)
    }

    fn antennas_or(&self, default: &[u32]) -> Vec<u32> {
        self.antennas.clone().unwrap_or_else(|| default.to_vec())
    }

    fn channel(&self) -> Result<(AntennaConfig, ExponentProfile)> {
        let a = self.antennas_or(&[3, 3, 2, 2]);
        if a.len() != 4 {
            return Err(invalid("--antennas needs four counts M1,N1,M2,N2"));
        }
        let cfg = AntennaConfig::new(a[0], a[1], a[2], a[3])?;
        Ok((cfg, self.profile()?))
    }

    fn profile(&self) -> Result<ExponentProfile> {
        let e = self
            .alpha
            .clone()
            .unwrap_or_else(|| vec![rat(1, 1), rat(3, 5), rat(3, 5), rat(1, 1)]);
        if e.len() != 4 {
            return Err(invalid("--alpha needs four exponents a11,a12,a21,a22"));
        }
        Ok(ExponentProfile::new(e[0].clone(), e[1].clone(), e[2].clone(), e[3].clone())?)
    }

    fn single_alpha(&self, default: Rational) -> Result<Rational> {
        match self.alpha.as_deref() {
            None => Ok(default),
            Some([a]) => Ok(a.clone()),
            Some(_) => Err(invalid("--alpha needs a single exponent here")),
        }
    }

    fn options(&self) -> VerifyOptions {
        VerifyOptions {
            trials: self.trials,
            seed: self.seed,
            rho_lo: self.rho_lo,
            rho_hi: self.rho_hi,
            tolerance: self.tolerance,
        }
    }

    fn sweep(&self) -> Vec<Rational> {
        self.sweep
            .clone()
            .unwrap_or_else(|| (0..=24).map(|k| rat(k, 12)).collect())
    }
}

/// Serialized result and process exit status.
#[derive(Debug, Clone, PartialEq)]
pub struct Output {
    pub text: String,
    pub code: i32,
}

fn json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values are always serializable");
    s.push('\n');
    s
}

fn region_output(r: &gdof_core::Region2, format: Format) -> Output {
    let text = match format {
        Format::Json => json_text(&io::region_to_json(r)),
        Format::Csv => io::vertices_to_csv(r),
    };
    Output { text, code: EXIT_OK }
}

fn verify_reports(cfg: &RunConfig) -> Result<Vec<SlopeReport>> {
    let opts = cfg.options();
    let mac = |default_u: u32, default_terms: Vec<WeightedTerm>| -> Result<(u32, Vec<WeightedTerm>)> {
        Ok((cfg.u.unwrap_or(default_u), cfg.terms.clone().unwrap_or(default_terms)))
    };
    let mut out = Vec::new();
    if matches!(cfg.suite, Suite::Lemma4 | Suite::All) {
        let (u, t) = mac(8, vec![WeightedTerm::new(rat(1, 2), 3), WeightedTerm::new(rat(1, 1), 4)])?;
        if t.len() != 2 {
            return Err(invalid("lemma4 needs two --terms"));
        }
        out.extend(verify::verify_f_approx(u, &t[0], &t[1], &opts)?);
    }
    if matches!(cfg.suite, Suite::Lemma5 | Suite::All) {
        let (u, t) = mac(
            10,
            vec![
                WeightedTerm::new(rat(1, 2), 3),
                WeightedTerm::new(rat(1, 1), 4),
                WeightedTerm::new(rat(6, 5), 2),
            ],
        )?;
        if t.len() != 3 {
            return Err(invalid("lemma5 needs three --terms"));
        }
        out.extend(verify::verify_g_approx(u, &t[0], &t[1], &t[2], &opts)?);
    }
    if matches!(cfg.suite, Suite::Theorem1 | Suite::All) {
        let (c, e) = cfg.channel()?;
        out.extend(verify::verify_theorem1(&c, &e, &opts, cfg.bound7)?);
    }
    Ok(out)
}

pub fn run(cfg: &RunConfig) -> Result<Output> {
    match cfg.command {
        Command::Region => {
            let (c, e) = cfg.channel()?;
            Ok(region_output(&gdof_region_with(&c, &e, cfg.bound7), cfg.format))
        }
        Command::Split => {
            let (c, e) = cfg.channel()?;
            let split = split_region(&c, &e);
            let witness = cfg.point.as_ref().and_then(|p| find_split(&split, &p[0], &p[1]));
            Ok(Output {
                text: json_text(&io::split_to_json(&split, cfg.point.as_ref(), witness.as_ref())),
                code: EXIT_OK,
            })
        }
        Command::Curve => {
            let sweep = cfg.sweep();
            let (name, curve) = match &cfg.curve {
                Some(name) => {
                    let kind: InsightCurve = name.parse()?;
                    let a = cfg.antennas_or(&[3, 2]);
                    if a.len() < 2 {
                        return Err(invalid("named curves need --antennas M,N"));
                    }
                    (kind.name().to_string(), insight_curve(kind, a[0], a[1], &sweep)?)
                }
                None => {
                    let (c, _) = cfg.channel()?;
                    ("symmetric".to_string(), symmetric_curve(&c, &sweep)?)
                }
            };
            let text = match cfg.format {
                Format::Json => json_text(&io::curve_to_json(&name, &curve)),
                Format::Csv => io::curve_to_csv(&curve),
            };
            Ok(Output { text, code: EXIT_OK })
        }
        Command::Dof => {
            let (c, _) = cfg.channel()?;
            Ok(region_output(&dof_region(&c), cfg.format))
        }
        Command::Siso => {
            let e = match &cfg.alpha {
                None => ExponentProfile::symmetric(rat(1, 2))?,
                Some(_) => cfg.profile()?,
            };
            Ok(region_output(&siso_region(&e), cfg.format))
        }
        Command::Mac => {
            let a = cfg.antennas_or(&[2, 2, 5]);
            if a.len() != 3 {
                return Err(invalid("mac needs --antennas M1,M2,N"));
            }
            let mac = MacConfig::new(a[0], a[1], a[2], cfg.single_alpha(rat(1, 2))?)?;
            Ok(region_output(&mac_gdof_region(&mac), cfg.format))
        }
        Command::Tin => {
            let a = cfg.antennas_or(&[3, 2]);
            if a.len() != 2 {
                return Err(invalid("tin needs --antennas M,N"));
            }
            let alpha = cfg.single_alpha(rat(2, 5))?;
            Ok(region_output(&tin_gdof_region(a[0], a[1], &alpha)?, cfg.format))
        }
        Command::Verify => {
            let reports = verify_reports(cfg)?;
            let pass = reports.iter().all(|r| r.pass);
            let text = match cfg.format {
                Format::Json => json_text(&io::reports_to_json(cfg.suite.name(), &reports)),
                Format::Csv => io::reports_to_csv(&reports),
            };
            Ok(Output {
                text,
                code: if pass { EXIT_OK } else { EXIT_VERIFY_FAILED },
            })
        }
    }
}
