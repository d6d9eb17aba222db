use std::collections::BTreeMap;

use crate::digit::{Digit, Dimension};
use crate::metric::position_displacement;
use crate::string::QuString;

/// A lattice point; one coordinate per axis.
pub type Point = Vec<i64>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pen {
    Down,
    Up,
    /// A `0` digit: no movement.
    Still,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceEvent {
    pub before: Point,
    pub digit: Digit,
    pub after: Point,
}

impl TraceEvent {
    pub fn pen(&self) -> Pen {
        match self.digit {
            Digit::Atom(..) => Pen::Down,
            Digit::Blank(..) => Pen::Up,
            Digit::Zero => Pen::Still,
        }
    }
}

/// The walk of a string over the lattice.
///
/// The walk starts where the digits before the origin marker must begin so
/// that they end on the all-zeros point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trace {
    dim: Dimension,
    start: Point,
    events: Vec<TraceEvent>,
}

impl Trace {
    pub fn new(a: &QuString) -> Self {
        let lead = QuString::unanchored(a.dim(), a.prefix().to_vec())
            .expect("prefix of a valid string is valid");
        let start: Point = position_displacement(&lead)
            .net
            .iter()
            .map(|n| -n)
            .collect();
        let mut at = start.clone();
        let events = a
            .digits()
            .iter()
            .map(|&digit| {
                let before = at.clone();
                if let (Some(axis), Some(sign)) = (digit.axis(), digit.sign()) {
                    at[axis as usize - 1] += sign.unit();
                }
                TraceEvent {
                    before,
                    digit,
                    after: at.clone(),
                }
            })
            .collect();
        Self {
            dim: a.dim(),
            start,
            events,
        }
    }

    pub fn dim(&self) -> Dimension {
        self.dim
    }

    pub fn start(&self) -> &Point {
        &self.start
    }

    pub fn end(&self) -> &Point {
        self.events.last().map_or(&self.start, |e| &e.after)
    }

    pub fn events(&self) -> &[TraceEvent] {
        &self.events
    }

    /// Every position the pen occupies, start included.
    pub fn positions(&self) -> impl Iterator<Item = &Point> {
        std::iter::once(&self.start).chain(self.events.iter().map(|e| &e.after))
    }

    /// Per-axis minimum and maximum over every visited position.
    pub fn bounds(&self) -> (Point, Point) {
        let n = self.dim.get() as usize;
        let mut lo = self.start.clone();
        let mut hi = self.start.clone();
        for p in self.positions() {
            for i in 0..n {
                lo[i] = lo[i].min(p[i]);
                hi[i] = hi[i].max(p[i]);
            }
        }
        (lo, hi)
    }

    pub fn to_shape(&self) -> DrawnShape {
        let n = self.dim.get() as usize;
        let mut edges = BTreeMap::new();
        for event in &self.events {
            if let (Pen::Down, Some(axis)) = (event.pen(), event.digit.axis()) {
                let i = axis as usize - 1;
                let low = if event.before[i] < event.after[i] {
                    event.before.clone()
                } else {
                    event.after.clone()
                };
                *edges.entry(Edge { low, axis }).or_insert(0) += 1;
            }
        }
        let origin = vec![0; n];
        let mut lo = origin.clone();
        let mut hi = origin.clone();
        for edge in edges.keys() {
            let high = edge.high();
            for i in 0..n {
                lo[i] = lo[i].min(edge.low[i]);
                hi[i] = hi[i].max(high[i]);
            }
        }
        DrawnShape {
            dim: self.dim,
            edges,
            bounds: (lo, hi),
        }
    }
}

/// An undirected unit edge from `low` one step up along `axis`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub low: Point,
    pub axis: u32,
}

impl Edge {
    pub fn high(&self) -> Point {
        let mut p = self.low.clone();
        p[self.axis as usize - 1] += 1;
        p
    }
}

/// Drawn unit edges with multiplicity, plus bounds enclosing them and the origin.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DrawnShape {
    dim: Dimension,
    edges: BTreeMap<Edge, usize>,
    bounds: (Point, Point),
}

impl DrawnShape {
    pub fn from_string(a: &QuString) -> Self {
        Trace::new(a).to_shape()
    }

    pub fn dim(&self) -> Dimension {
        self.dim
    }

    pub fn edges(&self) -> &BTreeMap<Edge, usize> {
        &self.edges
    }

    pub fn multiplicity(&self, edge: &Edge) -> usize {
        self.edges.get(edge).copied().unwrap_or(0)
    }

    pub fn origin(&self) -> Point {
        vec![0; self.dim.get() as usize]
    }

    pub fn bounds(&self) -> (&Point, &Point) {
        (&self.bounds.0, &self.bounds.1)
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}
