//! Taxicab length, ink and gap lengths, and the inner product.
//!
//! Lengths are exact rationals: digit counts times configured block lengths.

use num_rational::Ratio;
use num_traits::Zero;

use crate::digit::{Digit, Dimension};
use crate::error::{Error, Result};
use crate::string::QuString;

pub type Rational = Ratio<i64>;

/// Block lengths used to measure strings.
///
/// Either one uniform length `s` for every axis, or one length per axis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MetricConfig {
    unit: Rational,
    per_axis: Option<Vec<Rational>>,
}

impl MetricConfig {
    pub fn uniform(unit: Rational) -> Result<Self> {
        if unit <= Rational::zero() {
            return Err(Error::InvalidMetric(format!(
                "block length {unit} is not positive"
            )));
        }
        Ok(Self {
            unit,
            per_axis: None,
        })
    }

    pub fn per_axis(weights: Vec<Rational>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::InvalidMetric("no per-axis weights given".into()));
        }
        if let Some(w) = weights.iter().find(|w| **w <= Rational::zero()) {
            return Err(Error::InvalidMetric(format!("weight {w} is not positive")));
        }
        Ok(Self {
            unit: Rational::from_integer(1),
            per_axis: Some(weights),
        })
    }

    pub fn unit(&self) -> Rational {
        self.unit
    }

    pub fn weights(&self) -> Option<&[Rational]> {
        self.per_axis.as_deref()
    }

    /// Fails when per-axis weights do not match `dim`.
    pub fn check(&self, dim: Dimension) -> Result<()> {
        match &self.per_axis {
            Some(w) if w.len() != dim.get() as usize => Err(Error::InvalidMetric(format!(
                "{} weights given for dimension {dim}",
                w.len()
            ))),
            _ => Ok(()),
        }
    }

    /// Block length along `axis` (1-based).
    ///
    /// Panics if per-axis weights do not cover `axis`; see [`MetricConfig::check`].
    pub fn weight(&self, axis: u32) -> Rational {
        match &self.per_axis {
            Some(w) => w[axis as usize - 1],
            None => self.unit,
        }
    }
}

impl Default for MetricConfig {
    fn default() -> Self {
        Self {
            unit: Rational::from_integer(1),
            per_axis: None,
        }
    }
}

/// Signed net count per axis; `net[0]` is axis 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DisplacementVector {
    pub net: Vec<i64>,
}

impl DisplacementVector {
    pub fn zero(dim: Dimension) -> Self {
        Self {
            net: vec![0; dim.get() as usize],
        }
    }

    fn tally<'a>(dim: Dimension, digits: impl IntoIterator<Item = &'a Digit>) -> Self {
        let mut v = Self::zero(dim);
        for digit in digits {
            if let (Some(axis), Some(sign)) = (digit.axis(), digit.sign()) {
                v.net[axis as usize - 1] += sign.unit();
            }
        }
        v
    }

    /// Σ|net_i|, the k=1 Minkowski norm in blocks.
    pub fn taxicab_norm(&self) -> i64 {
        self.net.iter().map(|n| n.abs()).sum()
    }
}

/// Net atom count per axis. Blanks and zeros are ignored.
pub fn ink_displacement(a: &QuString) -> DisplacementVector {
    DisplacementVector::tally(a.dim(), a.digits().iter().filter(|d| d.is_atom()))
}

/// Net pen movement per axis, atoms and blanks alike.
pub fn position_displacement(a: &QuString) -> DisplacementVector {
    DisplacementVector::tally(a.dim(), a.digits())
}

/// Σ_i |net_i| · s_i over the ink displacement.
pub fn taxicab_length(a: &QuString, cfg: &MetricConfig) -> Rational {
    ink_displacement(a)
        .net
        .iter()
        .zip(1..)
        .map(|(&n, axis)| cfg.weight(axis) * n.abs())
        .sum()
}

fn sum_weights(a: &QuString, cfg: &MetricConfig, keep: fn(Digit) -> bool) -> Rational {
    a.digits()
        .iter()
        .filter(|d| keep(**d))
        .filter_map(|d| d.axis())
        .map(|axis| cfg.weight(axis))
        .sum()
}

/// Total ink laid down, retraced segments included.
pub fn arc_length(a: &QuString, cfg: &MetricConfig) -> Rational {
    sum_weights(a, cfg, Digit::is_atom)
}

/// Total length of blank (pen-up) moves.
pub fn gap_length(a: &QuString, cfg: &MetricConfig) -> Rational {
    sum_weights(a, cfg, Digit::is_blank)
}

/// Bilinear extension of ⟨i^±, j^±⟩ = ±s²δ_ij over the ink displacements.
pub fn inner_product(a: &QuString, b: &QuString, cfg: &MetricConfig) -> Result<Rational> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            left: a.dim().get(),
            right: b.dim().get(),
        });
    }
    let (da, db) = (ink_displacement(a), ink_displacement(b));
    Ok(da
        .net
        .iter()
        .zip(&db.net)
        .zip(1..)
        .map(|((&x, &y), axis)| {
            let w = cfg.weight(axis);
            w * w * (x * y)
        })
        .sum())
}
