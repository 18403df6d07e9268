//! Finite positive spectra `{ε_j}` used as trace kernels and determinant data.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Spectrum {
    /// Sorted, strictly positive eigenvalues.
    Explicit(Vec<f64>),
    /// `ε_j = j` for `j = 1..=N`.
    Natural(usize),
}

impl Spectrum {
    pub fn explicit(mut values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Config("spectrum must not be empty".into()));
        }
        if let Some(bad) = values.iter().find(|v| !(v.is_finite() && **v > 0.0)) {
            return Err(Error::Config(format!(
                "spectrum values must be finite and > 0, got {bad}"
            )));
        }
        values.sort_by(f64::total_cmp);
        Ok(Spectrum::Explicit(values))
    }

    pub fn natural(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Config("natural spectrum needs N >= 1".into()));
        }
        Ok(Spectrum::Natural(n))
    }

    pub fn len(&self) -> usize {
        match self {
            Spectrum::Explicit(v) => v.len(),
            Spectrum::Natural(n) => *n,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn values(&self) -> Box<dyn Iterator<Item = f64> + '_> {
        match self {
            Spectrum::Explicit(v) => Box::new(v.iter().copied()),
            Spectrum::Natural(n) => Box::new((1..=*n).map(|j| j as f64)),
        }
    }

    pub fn min(&self) -> f64 {
        match self {
            Spectrum::Explicit(v) => v[0],
            Spectrum::Natural(_) => 1.0,
        }
    }

    pub fn max(&self) -> f64 {
        match self {
            Spectrum::Explicit(v) => v[v.len() - 1],
            Spectrum::Natural(n) => *n as f64,
        }
    }

    /// Σ_j ε_j = log det e^β.
    pub fn trace(&self) -> f64 {
        match self {
            Spectrum::Explicit(v) => v.iter().sum(),
            Spectrum::Natural(n) => {
                let n = *n as f64;
                n * (n + 1.0) / 2.0
            }
        }
    }

    /// Heat trace Σ_j e^{−ε_j g}.
    pub fn heat_trace(&self, g: Complex64) -> Complex64 {
        match self {
            Spectrum::Explicit(v) => v.iter().map(|&e| (-e * g).exp()).sum(),
            Spectrum::Natural(n) => {
                // e^{-g} (1 - e^{-Ng}) / (1 - e^{-g})
                let num = crate::special::expm1(-(*n as f64) * g);
                let den = crate::special::expm1(-g);
                (-g).exp() * num / den
            }
        }
    }
}

impl fmt::Display for Spectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Spectrum::Natural(n) => write!(f, "natural:{n}"),
            Spectrum::Explicit(v) => {
                let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
                write!(f, "{}", parts.join(","))
            }
        }
    }
}

impl FromStr for Spectrum {
    type Err = Error;

    /// `natural:N` or a comma-separated list of positive reals.
    fn from_str(s: &str) -> Result<Self> {
        if let Some(n) = s.strip_prefix("natural:") {
            let n: usize = n
                .parse()
                .map_err(|_| Error::Config(format!("bad natural spectrum size '{n}'")))?;
            return Spectrum::natural(n);
        }
        let values = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<f64>()
                    .map_err(|_| Error::Config(format!("bad spectrum value '{p}'")))
            })
            .collect::<Result<Vec<_>>>()?;
        Spectrum::explicit(values)
    }
}
