//! QU strings and their algebra: concatenation, normalization, scalar
//! multiplication, subtraction and inversion.

use std::fmt;

use crate::digit::{Digit, Dimension};
use crate::error::{Error, Result};
use crate::notation;

/// A finite sequence of digits with an optional origin marker.
///
/// The marker sits between digits: `origin == Some(k)` places it before
/// `digits[k]`. A missing marker behaves like one at the front, but the two
/// are kept distinct so printing round-trips.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuString {
    dim: Dimension,
    digits: Vec<Digit>,
    origin: Option<usize>,
}

impl QuString {
    pub fn new(dim: Dimension, digits: Vec<Digit>, origin: Option<usize>) -> Result<Self> {
        for digit in &digits {
            if let Some(axis) = digit.axis() {
                dim.check_axis(axis)?;
            }
        }
        if let Some(k) = origin {
            assert!(
                k <= digits.len(),
                "origin index {k} past end of {} digits",
                digits.len()
            );
        }
        Ok(Self {
            dim,
            digits,
            origin,
        })
    }

    pub fn empty(dim: Dimension) -> Self {
        Self {
            dim,
            digits: Vec::new(),
            origin: None,
        }
    }

    /// A string with the origin marker at the front.
    pub fn anchored(dim: Dimension, digits: Vec<Digit>) -> Result<Self> {
        Self::new(dim, digits, Some(0))
    }

    pub fn unanchored(dim: Dimension, digits: Vec<Digit>) -> Result<Self> {
        Self::new(dim, digits, None)
    }

    /// Parse notation text; see [`notation::parse`].
    pub fn parse(text: &str, dim: Dimension) -> Result<Self> {
        notation::parse(text, dim)
    }

    pub fn dim(&self) -> Dimension {
        self.dim
    }

    pub fn digits(&self) -> &[Digit] {
        &self.digits
    }

    pub fn origin(&self) -> Option<usize> {
        self.origin
    }

    /// Origin index with the absent marker read as the front.
    pub fn origin_index(&self) -> usize {
        self.origin.unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    /// Digits before the origin marker.
    pub fn prefix(&self) -> &[Digit] {
        &self.digits[..self.origin_index()]
    }

    /// Digits after the origin marker.
    pub fn suffix(&self) -> &[Digit] {
        &self.digits[self.origin_index()..]
    }

    pub fn with_origin(mut self, origin: Option<usize>) -> Self {
        if let Some(k) = origin {
            assert!(k <= self.digits.len());
        }
        self.origin = origin;
        self
    }

    fn check_same_dim(&self, other: &QuString) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim.get(),
                right: other.dim.get(),
            });
        }
        Ok(())
    }

    /// `self` followed by `other`. Non-commutative.
    pub fn concat(&self, other: &QuString) -> Result<QuString> {
        self.check_same_dim(other)?;
        let origin = match (self.origin, other.origin) {
            (Some(_), Some(_)) => return Err(Error::OriginConflict),
            (Some(k), None) => Some(k),
            (None, Some(k)) => Some(self.len() + k),
            (None, None) => None,
        };
        let mut digits = Vec::with_capacity(self.len() + other.len());
        digits.extend_from_slice(&self.digits);
        digits.extend_from_slice(&other.digits);
        Ok(QuString {
            dim: self.dim,
            digits,
            origin,
        })
    }

    /// Remove every `0` and cascade away adjacent inverse pairs.
    ///
    /// The origin marker is a barrier: a pair with the marker between its two
    /// digits is left alone, so the walk keeps its start and end points.
    pub fn normalize(&self) -> QuString {
        let mut digits = reduce(self.prefix());
        let origin = self.origin.map(|_| digits.len());
        digits.extend(reduce(self.suffix()));
        QuString {
            dim: self.dim,
            digits,
            origin,
        }
    }

    pub fn is_normal(&self) -> bool {
        let adjacent_pair = |side: &[Digit]| side.windows(2).any(|w| w[0].cancels(w[1]));
        !self.digits.iter().any(|d| d.is_zero())
            && !adjacent_pair(self.prefix())
            && !adjacent_pair(self.suffix())
    }

    /// Repeat every digit `factor` times in place; the origin index scales with it.
    pub fn scalar_mul(&self, factor: usize) -> Result<QuString> {
        if factor == 0 {
            return Err(Error::ZeroScalar);
        }
        let digits = self
            .digits
            .iter()
            .flat_map(|&d| std::iter::repeat_n(d, factor))
            .collect();
        Ok(QuString {
            dim: self.dim,
            digits,
            origin: self.origin.map(|k| k * factor),
        })
    }

    /// `self ⊖ suffix`: strip the normal form of `suffix` from the end of the
    /// normal form of `self`.
    pub fn subtract_suffix(&self, suffix: &QuString) -> Result<QuString> {
        self.check_same_dim(suffix)?;
        let whole = self.normalize();
        let tail = suffix.normalize();
        if !whole.digits.ends_with(&tail.digits) {
            return Err(Error::SuffixMismatch);
        }
        let keep = whole.len() - tail.len();
        let mut digits = whole.digits;
        digits.truncate(keep);
        Ok(QuString {
            dim: self.dim,
            digits,
            origin: whole.origin.filter(|&k| k <= keep),
        })
    }

    /// `⊖prefix ⊕ whole`: strip the normal form of `prefix` from the front of
    /// the normal form of `whole`.
    pub fn subtract_prefix(prefix: &QuString, whole: &QuString) -> Result<QuString> {
        whole.check_same_dim(prefix)?;
        let whole = whole.normalize();
        let head = prefix.normalize();
        if !whole.digits.starts_with(&head.digits) {
            return Err(Error::PrefixMismatch);
        }
        let cut = head.len();
        Ok(QuString {
            dim: whole.dim,
            digits: whole.digits[cut..].to_vec(),
            origin: whole.origin.and_then(|k| k.checked_sub(cut)),
        })
    }

    /// Digits reversed with every sign flipped. Carries no origin marker.
    pub fn inverse(&self) -> QuString {
        QuString {
            dim: self.dim,
            digits: self.digits.iter().rev().map(|d| d.inverse()).collect(),
            origin: None,
        }
    }
}

/// Free reduction of one marker-free segment.
fn reduce(digits: &[Digit]) -> Vec<Digit> {
    let mut stack: Vec<Digit> = Vec::with_capacity(digits.len());
    for &digit in digits {
        if digit.is_zero() {
            continue;
        }
        match stack.last() {
            Some(&top) if top.cancels(digit) => {
                stack.pop();
            }
            _ => stack.push(digit),
        }
    }
    stack
}

impl fmt::Display for QuString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&notation::print(self))
    }
}
