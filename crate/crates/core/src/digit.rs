use std::fmt;
use std::ops::Neg;

use crate::error::{Error, Result};

/// Number of axes of the ambient lattice. The digit alphabet has `4n + 1` symbols.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dimension(u32);

impl Dimension {
    pub const PLANE: Dimension = Dimension(2);

    pub fn new(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidDimension(n));
        }
        Ok(Dimension(n))
    }

    pub fn get(self) -> u32 {
        self.0
    }

    /// Size of the digit alphabet, `4n + 1`.
    pub fn base(self) -> u64 {
        4 * u64::from(self.0) + 1
    }

    pub fn contains(self, axis: u32) -> bool {
        (1..=self.0).contains(&axis)
    }

    pub fn check_axis(self, axis: u32) -> Result<()> {
        if self.contains(axis) {
            Ok(())
        } else {
            Err(Error::AxisOutOfRange { axis, dim: self.0 })
        }
    }

    /// Every digit of the alphabet in a fixed order: `0`, then per axis `i+ i- i+o i-o`.
    pub fn alphabet(self) -> Vec<Digit> {
        let mut out = Vec::with_capacity(self.base() as usize);
        out.push(Digit::Zero);
        for axis in 1..=self.0 {
            for sign in [Sign::Plus, Sign::Minus] {
                out.push(Digit::Atom(axis, sign));
            }
            for sign in [Sign::Plus, Sign::Minus] {
                out.push(Digit::Blank(axis, sign));
            }
        }
        out
    }
}

impl Default for Dimension {
    fn default() -> Self {
        Dimension::PLANE
    }
}

impl fmt::Display for Dimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn unit(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

/// One symbol of the base-(4n+1) alphabet.
///
/// `Atom` is a unit pen-down move along an axis; `Blank` moves the pen the
/// same way without drawing. Axes are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Digit {
    Zero,
    Atom(u32, Sign),
    Blank(u32, Sign),
}

impl Digit {
    pub fn axis(self) -> Option<u32> {
        match self {
            Digit::Zero => None,
            Digit::Atom(axis, _) | Digit::Blank(axis, _) => Some(axis),
        }
    }

    pub fn sign(self) -> Option<Sign> {
        match self {
            Digit::Zero => None,
            Digit::Atom(_, sign) | Digit::Blank(_, sign) => Some(sign),
        }
    }

    pub fn is_atom(self) -> bool {
        matches!(self, Digit::Atom(..))
    }

    pub fn is_blank(self) -> bool {
        matches!(self, Digit::Blank(..))
    }

    pub fn is_zero(self) -> bool {
        matches!(self, Digit::Zero)
    }

    /// The digit undoing this one: same axis and pen state, opposite sign.
    pub fn inverse(self) -> Digit {
        match self {
            Digit::Zero => Digit::Zero,
            Digit::Atom(axis, sign) => Digit::Atom(axis, -sign),
            Digit::Blank(axis, sign) => Digit::Blank(axis, -sign),
        }
    }

    /// Whether `self` followed by `other` cancels to nothing.
    pub fn cancels(self, other: Digit) -> bool {
        !self.is_zero() && self.inverse() == other
    }
}

impl fmt::Display for Digit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Digit::Zero => f.write_str("0"),
            Digit::Atom(axis, sign) => write!(f, "{axis}{}", sign.symbol()),
            Digit::Blank(axis, sign) => write!(f, "{axis}{}o", sign.symbol()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alphabet_has_four_n_plus_one_digits() {
        for n in 1..=5 {
            let dim = Dimension::new(n).unwrap();
            let alphabet = dim.alphabet();
            assert_eq!(alphabet.len() as u64, dim.base());
            let mut dedup = alphabet.clone();
            dedup.sort();
            dedup.dedup();
            assert_eq!(dedup.len(), alphabet.len());
        }
    }

    #[test]
    fn zero_dimension_rejected() {
        assert_eq!(Dimension::new(0), Err(Error::InvalidDimension(0)));
    }

    #[test]
    fn inverse_pairs() {
        assert!(Digit::Atom(1, Sign::Plus).cancels(Digit::Atom(1, Sign::Minus)));
        assert!(Digit::Blank(2, Sign::Minus).cancels(Digit::Blank(2, Sign::Plus)));
        assert!(!Digit::Atom(1, Sign::Plus).cancels(Digit::Blank(1, Sign::Minus)));
        assert!(!Digit::Atom(1, Sign::Plus).cancels(Digit::Atom(2, Sign::Minus)));
        assert!(!Digit::Zero.cancels(Digit::Zero));
    }

    #[test]
    fn display() {
        assert_eq!(Digit::Atom(12, Sign::Minus).to_string(), "12-");
        assert_eq!(Digit::Blank(1, Sign::Plus).to_string(), "1+o");
        assert_eq!(Digit::Zero.to_string(), "0");
    }
}
