//! Graphs of integer-sampled functions as planar QU strings.
//!
//! x runs along axis 1 and y along axis 2. Each step between consecutive
//! samples is written as `1+^Δx` followed by `2±^|Δy|`. A flat step that is
//! not the last one is closed with a `0` digit so that its x-run does not
//! merge with the next step's.

use std::str::FromStr;

use crate::digit::{Digit, Dimension, Sign};
use crate::error::{Error, Result};
use crate::string::QuString;

/// Ordered lattice points with strictly increasing x.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeSample {
    points: Vec<(i64, i64)>,
}

impl LatticeSample {
    pub fn new(points: Vec<(i64, i64)>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::InvalidSample("no points".into()));
        }
        if let Some(w) = points.windows(2).find(|w| w[1].0 <= w[0].0) {
            return Err(Error::InvalidSample(format!(
                "x does not increase from {} to {}",
                w[0].0, w[1].0
            )));
        }
        Ok(Self { points })
    }

    /// Samples of `f` at `x = 0, step, 2·step, …` (`count` points).
    pub fn from_fn(count: usize, step: i64, f: impl Fn(i64) -> i64) -> Result<Self> {
        Self::new((0..count as i64).map(|k| (k * step, f(k * step))).collect())
    }

    pub fn points(&self) -> &[(i64, i64)] {
        &self.points
    }
}

/// Plain text, one `x y` pair per line. Blank lines and `#` comments are skipped.
impl FromStr for LatticeSample {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut points = Vec::new();
        for (n, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let parsed = match fields.as_slice() {
                [x, y] => x.parse::<i64>().ok().zip(y.parse::<i64>().ok()),
                _ => None,
            };
            let point = parsed.ok_or_else(|| {
                Error::InvalidSample(format!(
                    "line {}: expected two integers, got {line:?}",
                    n + 1
                ))
            })?;
            points.push(point);
        }
        Self::new(points)
    }
}

/// `.(1+^n 2+^m)^periods`: the line y = (m/n)·x from the origin.
pub fn encode_linear(m: usize, n: usize, periods: usize) -> Result<QuString> {
    if m == 0 || n == 0 || periods == 0 {
        return Err(Error::InvalidSample(
            "m, n and periods must be positive".into(),
        ));
    }
    let mut unit = vec![Digit::Atom(1, Sign::Plus); n];
    unit.extend(std::iter::repeat_n(Digit::Atom(2, Sign::Plus), m));
    QuString::anchored(Dimension::PLANE, unit.repeat(periods))
}

/// Walk through the samples. A first point other than the origin is reached
/// with leading blanks.
pub fn encode_samples(samples: &LatticeSample) -> Result<QuString> {
    let points = samples.points();
    let (x0, y0) = points[0];
    let mut digits = Vec::new();
    push_moves(&mut digits, x0, |s| Digit::Blank(1, s));
    push_moves(&mut digits, y0, |s| Digit::Blank(2, s));
    let steps = points.windows(2).count();
    for (n, w) in points.windows(2).enumerate() {
        let (dx, dy) = (w[1].0 - w[0].0, w[1].1 - w[0].1);
        push_moves(&mut digits, dx, |s| Digit::Atom(1, s));
        push_moves(&mut digits, dy, |s| Digit::Atom(2, s));
        if dy == 0 && n + 1 < steps {
            digits.push(Digit::Zero);
        }
    }
    QuString::anchored(Dimension::PLANE, digits)
}

fn push_moves(digits: &mut Vec<Digit>, delta: i64, digit: impl Fn(Sign) -> Digit) {
    let sign = if delta < 0 { Sign::Minus } else { Sign::Plus };
    digits.extend(std::iter::repeat_n(
        digit(sign),
        delta.unsigned_abs() as usize,
    ));
}

/// Recover the sample points from a graph string.
///
/// A point is recorded at the end of every axis-2 run, at every `0` closing
/// a flat step, and after trailing axis-1 digits.
pub fn decode_to_points(a: &QuString) -> Result<LatticeSample> {
    let malformed = |msg: String| Error::MalformedGraphString(msg);
    if a.dim() != Dimension::PLANE {
        return Err(malformed(format!(
            "graph strings are planar, got dimension {}",
            a.dim()
        )));
    }
    if a.origin().is_some_and(|k| k > 0) {
        return Err(malformed("origin marker must be at the front".into()));
    }

    let digits = a.digits();
    let mut at = (0i64, 0i64);
    let lead = digits.iter().take_while(|d| d.is_blank()).count();
    for d in &digits[..lead] {
        step(&mut at, *d);
    }

    let mut points = vec![at];
    // Whether the pen moved since the last recorded point, and whether the
    // current step has reached its y-run.
    let mut moved = false;
    let mut in_y = false;
    for (n, &d) in digits.iter().enumerate().skip(lead) {
        match d {
            Digit::Zero => {
                if moved {
                    points.push(at);
                    moved = false;
                }
                in_y = false;
            }
            Digit::Atom(1, Sign::Plus) => {
                if in_y {
                    points.push(at);
                    in_y = false;
                }
                step(&mut at, d);
                moved = true;
            }
            Digit::Atom(2, _) => {
                if !moved {
                    return Err(malformed(format!("digit {n} moves y without advancing x")));
                }
                step(&mut at, d);
                in_y = true;
            }
            Digit::Atom(1, Sign::Minus) => {
                return Err(malformed(format!("digit {n} moves backward in x")));
            }
            _ => return Err(malformed(format!("digit {n} ({d}) is not a graph step"))),
        }
    }
    if moved && points.last() != Some(&at) {
        points.push(at);
    }
    LatticeSample::new(points)
}

fn step(at: &mut (i64, i64), d: Digit) {
    if let (Some(axis), Some(sign)) = (d.axis(), d.sign()) {
        match axis {
            1 => at.0 += sign.unit(),
            _ => at.1 += sign.unit(),
        }
    }
}
