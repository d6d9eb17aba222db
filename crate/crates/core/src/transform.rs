//! Translation, rotation, shape transformation and dilation.
//!
//! Rotation and shape transformation act on a single straight run `.k^p`
//! and replace it with a digit pattern repeated enough times to use up the
//! same number of digits.

use crate::digit::{Digit, Dimension, Sign};
use crate::error::{Error, Result};
use crate::string::QuString;

/// Ordered `(digit, multiplicity)` parts; the pattern is `c_1^{q_1} … c_l^{q_l}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransformPattern {
    parts: Vec<(Digit, usize)>,
}

impl TransformPattern {
    pub fn new(parts: Vec<(Digit, usize)>) -> Result<Self> {
        if parts.iter().any(|(d, _)| d.is_zero()) {
            return Err(Error::InvalidPattern("zero digits are not allowed".into()));
        }
        if parts.iter().map(|(_, q)| q).sum::<usize>() == 0 {
            return Err(Error::InvalidPattern("multiplicities sum to zero".into()));
        }
        Ok(Self { parts })
    }

    /// Read a pattern from a dot-free string: each maximal run becomes one part.
    pub fn from_string(s: &QuString) -> Result<Self> {
        if s.origin().is_some() {
            return Err(Error::InvalidPattern(
                "pattern must not carry an origin marker".into(),
            ));
        }
        let parts = s
            .digits()
            .chunk_by(|a, b| a == b)
            .map(|run| (run[0], run.len()))
            .collect();
        Self::new(parts)
    }

    pub fn parts(&self) -> &[(Digit, usize)] {
        &self.parts
    }

    /// Σ q_m.
    pub fn period(&self) -> usize {
        self.parts.iter().map(|(_, q)| q).sum()
    }

    /// One repetition of the pattern, expanded.
    pub fn expand(&self) -> Vec<Digit> {
        self.parts
            .iter()
            .flat_map(|&(d, q)| std::iter::repeat_n(d, q))
            .collect()
    }

    pub fn contains_blank(&self) -> bool {
        self.parts.iter().any(|(d, q)| *q > 0 && d.is_blank())
    }
}

fn require_front_origin(a: &QuString) -> Result<()> {
    match a.origin() {
        None | Some(0) => Ok(()),
        Some(_) => Err(Error::OriginNotAtFront),
    }
}

/// The digit and length of `a` if it normalizes to one run `k^p`, p ≥ 1.
pub fn single_run(a: &QuString) -> Result<(Digit, usize)> {
    require_front_origin(a)?;
    let n = a.normalize();
    match n.digits().first() {
        Some(&k) if n.digits().iter().all(|&d| d == k) => Ok((k, n.len())),
        _ => Err(Error::NotASingleRun),
    }
}

/// Move `a` by `distance` blocks along `(axis, sign)` by inserting blanks
/// right after the origin marker.
pub fn translate(a: &QuString, axis: u32, sign: Sign, distance: usize) -> Result<QuString> {
    a.dim().check_axis(axis)?;
    require_front_origin(a)?;
    let mut digits = vec![Digit::Blank(axis, sign); distance];
    digits.extend_from_slice(a.digits());
    QuString::new(a.dim(), digits, a.origin())
}

/// Replace the run `k^p` in `a` by `pat` repeated `p / Σq` times.
pub fn shape_transform(a: &QuString, pat: &TransformPattern) -> Result<QuString> {
    if let Some(axis) = pat.parts.iter().filter_map(|(d, _)| d.axis()).max() {
        a.dim().check_axis(axis)?;
    }
    let (_, run) = single_run(a)?;
    let period = pat.period();
    if run % period != 0 {
        return Err(Error::IndivisibleLength {
            run,
            pattern: period,
        });
    }
    let digits = pat.expand().repeat(run / period);
    QuString::new(a.dim(), digits, a.origin())
}

/// Steps-type rotation of an atom run: `.k^p → .(i^q j^r)^{p/(q+r)}`.
pub fn rotate(a: &QuString, i: Digit, q: usize, j: Digit, r: usize) -> Result<QuString> {
    for d in [i, j] {
        if !d.is_atom() {
            return Err(Error::InvalidPattern(format!(
                "rotation targets must be atoms, got {d}"
            )));
        }
    }
    let (k, _) = single_run(a)?;
    if !k.is_atom() {
        return Err(Error::NotASingleRun);
    }
    shape_transform(a, &TransformPattern::new(vec![(i, q), (j, r)])?)
}

/// Dilation by `factor`; same as [`QuString::scalar_mul`].
pub fn dilate(factor: usize, a: &QuString) -> Result<QuString> {
    a.scalar_mul(factor)
}

/// Arguments `(i, q, j, r)` rotating a planar run of `k` counterclockwise by
/// `degrees`, a multiple of 45.
///
/// Odd multiples step along the component parallel to `k` first, then the
/// perpendicular one: 45° on `1+` is `(1+2+)`, 135° is `(1-2+)`.
pub fn rotation_for_angle(
    dim: Dimension,
    k: Digit,
    degrees: i64,
) -> Result<(Digit, usize, Digit, usize)> {
    if dim != Dimension::PLANE {
        return Err(Error::DimensionUnsupported(dim.get()));
    }
    let Digit::Atom(axis, sign) = k else {
        return Err(Error::NotASingleRun);
    };
    if degrees % 45 != 0 {
        return Err(Error::UnsupportedAngle(degrees));
    }
    let eighths = (degrees / 45).rem_euclid(8);
    let quarter = |turns: i64| quarter_turns(axis, sign, turns);
    Ok(match eighths {
        0 | 2 | 4 | 6 => (quarter(eighths / 2), 1, quarter(eighths / 2), 0),
        1 => (quarter(0), 1, quarter(1), 1),
        3 => (quarter(2), 1, quarter(1), 1),
        5 => (quarter(2), 1, quarter(3), 1),
        7 => (quarter(0), 1, quarter(3), 1),
        _ => unreachable!(),
    })
}

/// Rotate a planar atom counterclockwise by `turns` quarter turns.
fn quarter_turns(axis: u32, sign: Sign, turns: i64) -> Digit {
    // 1+ → 2+ → 1- → 2- → 1+
    const CYCLE: [(u32, Sign); 4] = [
        (1, Sign::Plus),
        (2, Sign::Plus),
        (1, Sign::Minus),
        (2, Sign::Minus),
    ];
    let at = CYCLE.iter().position(|&c| c == (axis, sign)).unwrap();
    let (axis, sign) = CYCLE[(at as i64 + turns).rem_euclid(4) as usize];
    Digit::Atom(axis, sign)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digit::Sign::{Minus, Plus};

    const PLANE: Dimension = Dimension::PLANE;

    fn q(text: &str) -> QuString {
        QuString::parse(text, PLANE).unwrap()
    }

    fn pattern(text: &str) -> TransformPattern {
        TransformPattern::from_string(&q(text)).unwrap()
    }

    const P1: Digit = Digit::Atom(1, Plus);
    const M1: Digit = Digit::Atom(1, Minus);
    const P2: Digit = Digit::Atom(2, Plus);
    const M2: Digit = Digit::Atom(2, Minus);

    #[test]
    fn translate_inserts_blanks_after_origin() {
        assert_eq!(translate(&q(".1+"), 1, Plus, 2).unwrap(), q(".1+o1+o1+"));
        assert_eq!(translate(&q("2-"), 2, Minus, 1).unwrap(), q("2-o2-"));
        assert_eq!(translate(&q(".1+2+"), 1, Plus, 0).unwrap(), q(".1+2+"));
        assert!(matches!(
            translate(&q("1+"), 3, Plus, 1),
            Err(Error::AxisOutOfRange { axis: 3, .. })
        ));
        assert_eq!(
            translate(&q("1+.1+"), 1, Plus, 1),
            Err(Error::OriginNotAtFront)
        );
    }

    #[test]
    fn rotation_examples() {
        assert_eq!(rotate(&q(".1+{4}"), P1, 1, P2, 1).unwrap(), q(".(1+2+){2}"));
        assert_eq!(rotate(&q(".1+{3}"), P2, 1, P1, 0).unwrap(), q(".2+{3}"));
        assert_eq!(rotate(&q(".1+{2}"), M1, 1, P2, 1).unwrap(), q(".1-2+"));
        assert_eq!(
            rotate(&q(".1+{3}"), P1, 1, P2, 1),
            Err(Error::IndivisibleLength { run: 3, pattern: 2 })
        );
    }

    #[test]
    fn rotation_input_must_be_one_atom_run() {
        assert_eq!(rotate(&q(".1+2+"), P1, 1, P2, 1), Err(Error::NotASingleRun));
        assert_eq!(rotate(&q("."), P1, 1, P2, 1), Err(Error::NotASingleRun));
        assert_eq!(
            rotate(&q(".1+o{2}"), P1, 1, P2, 1),
            Err(Error::NotASingleRun)
        );
        // normalization happens first
        assert_eq!(rotate(&q(".1+2+2-01+"), P1, 1, P2, 1).unwrap(), q(".1+2+"));
        assert!(rotate(&q(".1+{2}"), Digit::Blank(1, Plus), 1, P2, 1).is_err());
        assert!(rotate(&q(".1+{2}"), P1, 0, P2, 0).is_err());
    }

    #[test]
    fn two_squares() {
        let pat = pattern("2+1-2-1+1+o1+2+1-2-");
        assert_eq!(pat.period(), 9);
        let out = shape_transform(&q(".1+{9}"), &pat).unwrap();
        assert_eq!(out.to_string(), ".2+1-2-1+1+o1+2+1-2-");
    }

    #[test]
    fn shape_transform_identity_and_repeats() {
        for p in 1..6 {
            let a = q(&format!(".1+{{{p}}}"));
            assert_eq!(shape_transform(&a, &pattern("1+")).unwrap(), a);
        }
        let out = shape_transform(&q(".2-{6}"), &pattern("1+{2}2+")).unwrap();
        assert_eq!(out, q(".(1+{2}2+){2}"));
        assert_eq!(
            shape_transform(&q(".2-{5}"), &pattern("1+{2}2+")),
            Err(Error::IndivisibleLength { run: 5, pattern: 3 })
        );
    }

    #[test]
    fn pattern_validation() {
        assert!(TransformPattern::new(vec![(Digit::Zero, 1)]).is_err());
        assert!(TransformPattern::new(vec![(P1, 0)]).is_err());
        assert!(TransformPattern::new(vec![]).is_err());
        assert!(TransformPattern::from_string(&q(".1+")).is_err());
        assert!(TransformPattern::from_string(&q("01+")).is_err());
        assert!(pattern("1+1+o").contains_blank());
    }

    #[test]
    fn dilate_unit_square() {
        assert_eq!(
            dilate(2, &q(".1+2+1-2-")).unwrap(),
            q(".1+{2}2+{2}1-{2}2-{2}")
        );
        assert_eq!(dilate(1, &q(".1+2-")).unwrap(), q(".1+2-"));
    }

    #[test]
    fn angle_table() {
        let table = [
            (45, (P1, 1, P2, 1)),
            (90, (P2, 1, P2, 0)),
            (135, (M1, 1, P2, 1)),
            (180, (M1, 1, M1, 0)),
            (225, (M1, 1, M2, 1)),
            (270, (M2, 1, M2, 0)),
            (315, (P1, 1, M2, 1)),
            (360, (P1, 1, P1, 0)),
            (-45, (P1, 1, M2, 1)),
        ];
        for (deg, expected) in table {
            assert_eq!(
                rotation_for_angle(PLANE, P1, deg).unwrap(),
                expected,
                "{deg}"
            );
        }
        // relative to the run direction
        assert_eq!(rotation_for_angle(PLANE, P2, 90).unwrap(), (M1, 1, M1, 0));
        assert_eq!(
            rotation_for_angle(PLANE, P1, 30),
            Err(Error::UnsupportedAngle(30))
        );
        assert!(rotation_for_angle(Dimension::new(3).unwrap(), P1, 45).is_err());
    }
}
