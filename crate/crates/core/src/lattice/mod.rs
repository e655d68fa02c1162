//! Convex lattice loops and the ECH capacity sequence.
//!
//! `c_k(A)` is the least `ℓ_A`-length of a clockwise convex lattice loop
//! enclosing at least `k + 1` lattice points (boundary included). Loops may
//! degenerate to a point (`c₀ = 0`) or a doubled segment.

mod brute;
mod search;

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::norm::{LatticeVector, SupportNorm};
use crate::rational::Rational;

pub use brute::{brute_force_capacities, minimal_witness_in_unit_square};
pub use search::{capacities, capacities_with, CountRule, SearchOptions, DEFAULT_MAX_EXTENT};

/// Clockwise order of directions, starting just clockwise of `(−1, 0)`.
///
/// The sweep runs through the upper half-plane from angle π down to 0, then
/// through the lower half-plane down to −π, so `(−1, 0)` comes last. Loops
/// listed in this order start at their bottom-most, then left-most vertex.
pub fn clockwise_cmp(a: LatticeVector, b: LatticeVector) -> Ordering {
    let lower = |v: LatticeVector| v.dy < 0 || (v.dy == 0 && v.dx < 0);
    lower(a).cmp(&lower(b)).then_with(|| a.cross(b).cmp(&0))
}

/// A closed clockwise convex lattice loop, stored canonically.
///
/// Parallel consecutive edges are merged, edges are listed in
/// [`clockwise_cmp`] order, and `base` is the starting vertex (the
/// bottom-most, then left-most one). A point loop has no edges; a segment
/// has two opposite edges.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ConvexLoop {
    base: [i64; 2],
    edges: Vec<LatticeVector>,
}

impl fmt::Debug for ConvexLoop {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let path: Vec<String> = self
            .vertices()
            .iter()
            .chain(std::iter::once(&self.base))
            .map(|[x, y]| format!("({x},{y})"))
            .collect();
        write!(f, "{}", path.join("→"))
    }
}

impl ConvexLoop {
    pub fn point(base: [i64; 2]) -> Self {
        ConvexLoop {
            base,
            edges: Vec::new(),
        }
    }

    /// Validates and canonicalizes a loop given from any starting vertex.
    pub fn new(base: [i64; 2], edges: Vec<LatticeVector>) -> Result<Self> {
        let invalid = |message: &str| Error::InvalidLoop {
            message: message.into(),
            datum: format!("base {base:?}, edges {edges:?}"),
        };
        if edges.iter().any(|e| e.is_zero()) {
            return Err(invalid("zero-length edge"));
        }
        let (sx, sy) = edges
            .iter()
            .fold((0i64, 0i64), |(x, y), e| (x + e.dx, y + e.dy));
        if sx != 0 || sy != 0 {
            return Err(invalid("edges do not close up"));
        }
        if edges.is_empty() {
            return Ok(ConvexLoop::point(base));
        }

        // Merge runs of same-direction edges, cyclically, tracking where the list starts.
        let same_dir =
            |a: LatticeVector, b: LatticeVector| a.cross(b) == 0 && (a.dx * b.dx + a.dy * b.dy) > 0;
        let mut start = base;
        let mut list = edges.clone();
        while list.len() > 1 && same_dir(*list.last().unwrap(), list[0]) {
            let last = list.pop().unwrap();
            start = [start[0] - last.dx, start[1] - last.dy];
            list[0] = LatticeVector::new(list[0].dx + last.dx, list[0].dy + last.dy);
        }
        let mut merged: Vec<LatticeVector> = Vec::with_capacity(list.len());
        for e in list {
            match merged.last_mut() {
                Some(prev) if same_dir(*prev, e) => {
                    *prev = LatticeVector::new(prev.dx + e.dx, prev.dy + e.dy);
                }
                _ => merged.push(e),
            }
        }

        let first = (0..merged.len())
            .min_by(|&i, &j| clockwise_cmp(merged[i], merged[j]))
            .expect("nonempty");
        for e in &merged[..first] {
            start = [start[0] + e.dx, start[1] + e.dy];
        }
        merged.rotate_left(first);
        let sorted = merged
            .windows(2)
            .all(|w| clockwise_cmp(w[0], w[1]) == Ordering::Less);
        if !sorted {
            return Err(invalid("not a clockwise convex loop"));
        }
        Ok(ConvexLoop {
            base: start,
            edges: merged,
        })
    }

    /// Builds a loop from search output that is already canonical.
    pub(crate) fn from_canonical(base: [i64; 2], edges: Vec<LatticeVector>) -> Self {
        debug_assert!(ConvexLoop::new(base, edges.clone())
            .map(|l| l.edges == edges && l.base == base)
            .unwrap_or(false));
        ConvexLoop { base, edges }
    }

    pub fn base(&self) -> [i64; 2] {
        self.base
    }

    pub fn edges(&self) -> &[LatticeVector] {
        &self.edges
    }

    /// Vertices in traversal order, starting with `base`.
    pub fn vertices(&self) -> Vec<[i64; 2]> {
        let mut out = vec![self.base];
        let mut p = self.base;
        for e in self.edges.iter().take(self.edges.len().saturating_sub(1)) {
            p = [p[0] + e.dx, p[1] + e.dy];
            out.push(p);
        }
        out
    }

    pub fn translate(&self, by: [i64; 2]) -> Self {
        ConvexLoop {
            base: [self.base[0] + by[0], self.base[1] + by[1]],
            edges: self.edges.clone(),
        }
    }

    /// Twice the enclosed area.
    pub fn twice_area(&self) -> u64 {
        let mut p = [0i64, 0i64];
        let mut acc: i128 = 0;
        for e in &self.edges {
            acc += p[0] as i128 * e.dy as i128 - p[1] as i128 * e.dx as i128;
            p = [p[0] + e.dx, p[1] + e.dy];
        }
        acc.unsigned_abs() as u64
    }

    /// Lattice points on the boundary (`Σ gcd` over edges); 0 for a point.
    pub fn boundary_points(&self) -> u64 {
        self.edges.iter().map(|e| e.lattice_length()).sum()
    }

    /// Lattice points in the closed region bounded by the loop, by Pick's theorem.
    pub fn enclosed_count(&self) -> u64 {
        (self.twice_area() + self.boundary_points()) / 2 + 1
    }

    pub fn length(&self, norm: &SupportNorm) -> Rational {
        norm.loop_length(&self.edges)
            .expect("canonical loops are closed with nonzero edges")
    }

    /// Serializable summary with exact length and point count.
    pub fn record(&self, norm: &SupportNorm) -> LoopRecord {
        LoopRecord {
            base: self.base,
            edges: self.edges.clone(),
            length: self.length(norm),
            points: self.enclosed_count(),
        }
    }
}

/// JSON form of a witness loop: `{"base":[x,y],"edges":[[dx,dy],...],"length":"p/q","points":n}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LoopRecord {
    pub base: [i64; 2],
    pub edges: Vec<LatticeVector>,
    pub length: Rational,
    pub points: u64,
}

/// `c₀, c₁, …, c_K`, with a minimizing loop per entry when computed by search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CapacitySequence {
    pub values: Vec<Rational>,
    pub witnesses: Option<Vec<ConvexLoop>>,
}

impl CapacitySequence {
    pub fn from_values(values: Vec<Rational>) -> Self {
        CapacitySequence {
            values,
            witnesses: None,
        }
    }

    pub fn max_k(&self) -> usize {
        self.values.len().saturating_sub(1)
    }

    pub fn get(&self, k: usize) -> &Rational {
        &self.values[k]
    }

    /// `c₀ = 0` and the sequence never decreases.
    pub fn is_well_shaped(&self) -> bool {
        self.values.first().is_none_or(|c| c.is_zero())
            && self.values.windows(2).all(|w| w[0] <= w[1])
    }

    /// Multiplies every value by `factor`; witnesses are unchanged.
    pub fn scaled(&self, factor: &Rational) -> Self {
        CapacitySequence {
            values: self.values.iter().map(|v| v * factor).collect(),
            witnesses: self.witnesses.clone(),
        }
    }
}
