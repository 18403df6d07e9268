//! η and ζ evaluators: an accelerated-series oracle, the real-axis and
//! contour Mellin forms, critical-line zeros, rectangle zero counts and the
//! reflection check.

mod involution;
mod representations;
mod series;
mod zeros;

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use involution::{chain_residual, involution_check, reflect, InvolutionRecord};
pub use representations::{
    eta_hankel, eta_mellin_real, functional_equation_residual, zeta_hankel, zeta_mellin_real,
    EtaMode, NearIntegerPolicy, NEAR_INTEGER, RING_POINTS, RING_RADIUS, WARN_FALLBACK, WARN_RING,
};
pub use series::{chi, eta_series, zeta_ref, CONDITIONING_FLOOR, MIN_SERIES_TOL, REF_TOL};
pub use zeros::{
    count_zeros_rectangle, count_zeros_with, find_zeros, hardy_z, hardy_z_complex,
    riemann_siegel_theta, zeta_for_counting, ZeroRecord, BISECTION_WIDTH, MAX_ZERO_RESIDUAL,
    SCAN_STEP,
};

/// Which function an evaluator targets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Func {
    #[default]
    Zeta,
    Eta,
}

impl fmt::Display for Func {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Func::Zeta => "zeta",
            Func::Eta => "eta",
        })
    }
}

impl FromStr for Func {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "zeta" => Ok(Func::Zeta),
            "eta" => Ok(Func::Eta),
            _ => Err(format!("unknown function '{s}' (expected zeta or eta)")),
        }
    }
}

/// Open vertical strip `lo < Re α < hi` minus the lines `Re α = x` for `x` in
/// `excluded`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DomainStrip {
    pub lo: f64,
    pub hi: f64,
    pub excluded: &'static [f64],
}

impl DomainStrip {
    pub const ZETA_REAL_AXIS: DomainStrip = DomainStrip {
        lo: 1.0,
        hi: f64::INFINITY,
        excluded: &[],
    };
    pub const ETA_REAL_AXIS: DomainStrip = DomainStrip {
        lo: 0.0,
        hi: f64::INFINITY,
        excluded: &[],
    };
    pub const ZETA_CONTOUR: DomainStrip = DomainStrip {
        lo: 0.0,
        hi: f64::INFINITY,
        excluded: &[1.0],
    };

    pub fn contains(&self, alpha: Complex64) -> bool {
        alpha.re > self.lo
            && alpha.re < self.hi
            && self.excluded.iter().all(|x| (alpha.re - x).abs() > 1e-9)
    }

    pub(crate) fn require(&self, alpha: Complex64, what: &str) -> Result<()> {
        if self.contains(alpha) {
            Ok(())
        } else {
            Err(Error::Domain(format!("{what} needs {self}, got {alpha}")))
        }
    }
}

impl fmt::Display for DomainStrip {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} < Re a < {}", self.lo, self.hi)?;
        for x in self.excluded {
            write!(f, ", Re a != {x}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests;
