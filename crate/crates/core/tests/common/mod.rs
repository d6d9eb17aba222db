//! Independent oracles and random generators shared by the integration tests.
//!
//! Nothing here calls into the code paths it is used to check: reduction is
//! explored by brute force, distances come from raw coordinates, and the
//! inner product is summed pair by pair from the atomic table.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet, VecDeque};

use qu_core::{Digit, Dimension, QuString, Rational, Sign};
use rand::Rng;

/// A digit or the origin marker, as one token of a word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Tok {
    D(Digit),
    Dot,
}

pub fn tokens(s: &QuString) -> Vec<Tok> {
    let mut out: Vec<Tok> = s.digits().iter().map(|&d| Tok::D(d)).collect();
    if let Some(k) = s.origin() {
        out.insert(k, Tok::Dot);
    }
    out
}

pub fn from_tokens(dim: Dimension, toks: &[Tok]) -> QuString {
    let origin = toks.iter().position(|t| *t == Tok::Dot);
    let digits = toks
        .iter()
        .filter_map(|t| match t {
            Tok::D(d) => Some(*d),
            Tok::Dot => None,
        })
        .collect();
    QuString::new(dim, digits, origin).unwrap()
}

fn opposite(a: Digit, b: Digit) -> bool {
    match (a, b) {
        (Digit::Atom(i, s), Digit::Atom(j, t)) | (Digit::Blank(i, s), Digit::Blank(j, t)) => {
            i == j && s != t
        }
        _ => false,
    }
}

/// Every word reachable by one rewrite: drop a `0`, or drop two adjacent
/// opposite digits.
fn single_steps(word: &[Tok]) -> Vec<Vec<Tok>> {
    let mut out = Vec::new();
    for (n, t) in word.iter().enumerate() {
        if *t == Tok::D(Digit::Zero) {
            let mut w = word.to_vec();
            w.remove(n);
            out.push(w);
        }
    }
    for n in 0..word.len().saturating_sub(1) {
        if let (Tok::D(a), Tok::D(b)) = (word[n], word[n + 1]) {
            if opposite(a, b) {
                let mut w = word.to_vec();
                w.drain(n..n + 2);
                out.push(w);
            }
        }
    }
    out
}

/// All irreducible words reachable from `word` under every rewrite order.
pub fn terminal_forms(word: &[Tok]) -> BTreeSet<Vec<Tok>> {
    let mut seen = HashSet::new();
    let mut queue = VecDeque::from([word.to_vec()]);
    let mut terminals = BTreeSet::new();
    seen.insert(word.to_vec());
    while let Some(w) = queue.pop_front() {
        let next = single_steps(&w);
        if next.is_empty() {
            terminals.insert(w);
            continue;
        }
        for n in next {
            if seen.insert(n.clone()) {
                queue.push_back(n);
            }
        }
    }
    terminals
}

/// Check that every reduction order of `s` ends in `s.normalize()`.
pub fn confluence_holds(s: &QuString) -> Result<(), String> {
    let terminals = terminal_forms(&tokens(s));
    if terminals.len() != 1 {
        return Err(format!("{s}: {} distinct terminal forms", terminals.len()));
    }
    let only = from_tokens(s.dim(), terminals.first().unwrap());
    let normal = s.normalize();
    if only != normal {
        return Err(format!(
            "{s}: oracle gives {only}, normalize gives {normal}"
        ));
    }
    Ok(())
}

/// Minkowski distance of order `k` between two lattice points, raised to the
/// k-th power so it stays an integer.
pub fn minkowski_pow(a: &[i64], b: &[i64], k: u32) -> i64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs().pow(k)).sum()
}

/// ⟨x, y⟩ for single atoms: ±s² on the same axis, zero across axes.
pub fn atomic_inner(x: Digit, y: Digit, s: Rational) -> Rational {
    match (x, y) {
        (Digit::Atom(i, a), Digit::Atom(j, b)) if i == j => {
            let sign = if a == b { 1 } else { -1 };
            s * s * sign
        }
        _ => Rational::from_integer(0),
    }
}

/// Pairwise sum of the atomic table over every digit of `a` and `b`.
pub fn pairwise_inner(a: &QuString, b: &QuString, s: Rational) -> Rational {
    let mut total = Rational::from_integer(0);
    for &x in a.digits() {
        for &y in b.digits() {
            total += atomic_inner(x, y, s);
        }
    }
    total
}

/// Walk the digits by hand and return (start, end).
pub fn walk_endpoints(s: &QuString) -> (Vec<i64>, Vec<i64>) {
    let n = s.dim().get() as usize;
    let step = |p: &mut Vec<i64>, d: Digit, dir: i64| {
        if let Digit::Atom(axis, sign) | Digit::Blank(axis, sign) = d {
            let u = if sign == Sign::Plus { 1 } else { -1 };
            p[axis as usize - 1] += u * dir;
        }
    };
    let mut start = vec![0; n];
    for &d in s.prefix().iter().rev() {
        step(&mut start, d, -1);
    }
    let mut end = vec![0; n];
    for &d in s.suffix() {
        step(&mut end, d, 1);
    }
    (start, end)
}

pub fn random_digit(rng: &mut impl Rng, dim: Dimension, blanks: bool, zeros: bool) -> Digit {
    loop {
        let axis = rng.gen_range(1..=dim.get());
        let sign = if rng.gen_bool(0.5) {
            Sign::Plus
        } else {
            Sign::Minus
        };
        match rng.gen_range(0..5) {
            0 if zeros => return Digit::Zero,
            1 if blanks => return Digit::Blank(axis, sign),
            2..=4 => return Digit::Atom(axis, sign),
            _ => continue,
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct Gen {
    pub max_len: usize,
    pub blanks: bool,
    pub zeros: bool,
    /// Probability of placing an origin marker at a random index.
    pub origin: f64,
    /// When set, a marker is only ever placed at the front.
    pub front_only: bool,
}

impl Default for Gen {
    fn default() -> Self {
        Self {
            max_len: 12,
            blanks: true,
            zeros: true,
            origin: 0.5,
            front_only: false,
        }
    }
}

pub fn random_string(rng: &mut impl Rng, dim: Dimension, g: Gen) -> QuString {
    let len = rng.gen_range(0..=g.max_len);
    let digits: Vec<Digit> = (0..len)
        .map(|_| random_digit(rng, dim, g.blanks, g.zeros))
        .collect();
    let origin = if rng.gen_bool(g.origin) {
        Some(if g.front_only {
            0
        } else {
            rng.gen_range(0..=len)
        })
    } else {
        None
    };
    QuString::new(dim, digits, origin).unwrap()
}

/// All words of exactly `len` digits over the alphabet of `dim`.
pub fn all_words(dim: Dimension, len: usize) -> Vec<Vec<Digit>> {
    let alphabet = dim.alphabet();
    let mut words = vec![Vec::new()];
    for _ in 0..len {
        words = words
            .into_iter()
            .flat_map(|w| {
                alphabet.iter().map(move |&d| {
                    let mut w = w.clone();
                    w.push(d);
                    w
                })
            })
            .collect();
    }
    words
}

/// An undirected unit edge between two planar lattice points.
pub type PlaneEdge = ((i64, i64), (i64, i64));

/// Find the unit squares drawn in an ASCII render.
///
/// Reads the grid glyph by glyph: corners sit on rows and columns that are
/// multiples of two and three, edges between them. Returns the lattice edge
/// set split into connected components.
pub fn ascii_components(text: &str) -> Vec<BTreeSet<PlaneEdge>> {
    let rows: Vec<Vec<char>> = text.lines().map(|l| l.chars().collect()).collect();
    let at = |r: usize, c: usize| {
        rows.get(r)
            .and_then(|row| row.get(c))
            .copied()
            .unwrap_or(' ')
    };
    let mut edges = BTreeSet::new();
    for (r, row) in rows.iter().enumerate() {
        for c in 0..row.len() {
            if r % 2 == 0 && c % 3 == 0 {
                let p = ((c / 3) as i64, -((r / 2) as i64));
                if matches!(at(r, c + 1), '-' | '=') && matches!(at(r, c + 2), '-' | '=') {
                    edges.insert((p, (p.0 + 1, p.1)));
                }
                if r >= 2 && matches!(at(r - 1, c), '|' | '‖') {
                    edges.insert((p, (p.0, p.1 + 1)));
                }
            }
        }
    }
    let mut components: Vec<BTreeSet<_>> = Vec::new();
    for e in edges {
        let touching: Vec<usize> = components
            .iter()
            .enumerate()
            .filter(|(_, comp)| {
                comp.iter()
                    .any(|f: &PlaneEdge| [f.0, f.1].contains(&e.0) || [f.0, f.1].contains(&e.1))
            })
            .map(|(n, _)| n)
            .collect();
        let mut merged = BTreeSet::from([e]);
        for n in touching.into_iter().rev() {
            merged.extend(components.remove(n));
        }
        components.push(merged);
    }
    components
}

/// Whether `edges` are exactly the four sides of one unit square; returns its
/// lower-left corner.
pub fn unit_square_corner(edges: &BTreeSet<PlaneEdge>) -> Option<(i64, i64)> {
    let (x, y) = edges.iter().map(|e| e.0).min()?;
    let expected = BTreeSet::from([
        ((x, y), (x + 1, y)),
        ((x, y + 1), (x + 1, y + 1)),
        ((x, y), (x, y + 1)),
        ((x + 1, y), (x + 1, y + 1)),
    ]);
    (*edges == expected).then_some((x, y))
}
