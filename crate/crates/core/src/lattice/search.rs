//! Branch-and-bound search for minimal convex lattice loops.
//!
//! Loops are built edge by edge in clockwise direction order, choosing a
//! multiplicity for each primitive direction. Costs are exact integers: the
//! region is recentered at its vertex centroid and scaled by the common
//! denominator of its vertex coordinates. A partial loop is abandoned once its
//! cost plus the support of the closing vector exceeds the largest open bound;
//! this is a valid lower bound because the support function is sublinear.

use std::cmp::Ordering;

use num_traits::ToPrimitive;
use rayon::prelude::*;

use super::{clockwise_cmp, CapacitySequence, ConvexLoop};
use crate::error::{Error, Result};
use crate::norm::LatticeVector;
use crate::rational::{common_denominator, Rational};
use crate::region::{MomentRegion, Polygon};

/// Default cap on the coordinates of candidate edge directions.
pub const DEFAULT_MAX_EXTENT: u64 = 64;

/// How a loop's point count qualifies it for index `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CountRule {
    /// At least `k + 1` enclosed points.
    #[default]
    AtLeast,
    /// Exactly `k + 1` enclosed points.
    Exactly,
}

#[derive(Debug, Clone)]
pub struct SearchOptions {
    pub count_rule: CountRule,
    pub parallel: bool,
    /// Largest coordinate (in absolute value) of an edge direction the search
    /// may need; larger requirements fail with a resource error instead of
    /// running long.
    pub max_extent: u64,
    /// Added to every enclosed-point count. Only for fault-injection tests.
    #[doc(hidden)]
    pub count_offset: i64,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            count_rule: CountRule::AtLeast,
            parallel: false,
            max_extent: DEFAULT_MAX_EXTENT,
            count_offset: 0,
        }
    }
}

/// `c₀ … c_K` with default options.
pub fn capacities(region: &MomentRegion, k_max: usize) -> Result<CapacitySequence> {
    capacities_with(region, k_max, &SearchOptions::default())
}

pub fn capacities_with(
    region: &MomentRegion,
    k_max: usize,
    options: &SearchOptions,
) -> Result<CapacitySequence> {
    let support = ScaledSupport::new(region)?;
    let plan = Plan::new(&support, k_max, options)?;

    let mut best = Best::new(&plan.upper);
    if k_max > 0 {
        if options.parallel {
            let partial: Vec<Best> = (0..plan.dirs.len())
                .into_par_iter()
                .map(|first| {
                    let mut local = Best::new(&plan.upper);
                    plan.run_from(first, &mut local);
                    local
                })
                .collect();
            for local in partial {
                best.absorb(local);
            }
        } else {
            for first in 0..plan.dirs.len() {
                plan.run_from(first, &mut best);
            }
        }
    }

    let scale = Rational::from_bigint(support.scale.clone());
    let mut values = vec![Rational::zero()];
    let mut witnesses = vec![ConvexLoop::point([0, 0])];
    for k in 1..=k_max {
        let Some((cost, edges)) = best.found[k].take() else {
            return Err(Error::ResourceExhausted {
                message: "search finished without a loop for this index".into(),
                datum: format!("k = {k}"),
            });
        };
        values.push(Rational::from_bigint(cost.into()) / &scale);
        witnesses.push(ConvexLoop::from_canonical([0, 0], edges));
    }
    Ok(CapacitySequence {
        values,
        witnesses: Some(witnesses),
    })
}

/// Support function of `scale · (A − centroid)` on integer vectors.
struct ScaledSupport {
    vertices: Vec<[i128; 2]>,
    scale: num_bigint::BigInt,
}

impl ScaledSupport {
    fn new(region: &MomentRegion) -> Result<Self> {
        let c = region.vertex_centroid();
        let rel: Vec<_> = region.vertices().iter().map(|p| p - &c).collect();
        let scale = common_denominator(rel.iter().flat_map(|p| [&p.rho1, &p.rho2]));
        let too_big = || Error::ResourceExhausted {
            message: "vertex coordinates too large for exact integer search".into(),
            datum: format!("{region:?}"),
        };
        let s = Rational::from_bigint(scale.clone());
        let mut vertices = Vec::with_capacity(rel.len());
        for p in &rel {
            let x = (&p.rho1 * &s).numer().to_i64().ok_or_else(too_big)?;
            let y = (&p.rho2 * &s).numer().to_i64().ok_or_else(too_big)?;
            // Keep headroom so costs over many edges stay in range.
            if x.unsigned_abs() > 1 << 40 || y.unsigned_abs() > 1 << 40 {
                return Err(too_big());
            }
            vertices.push([x as i128, y as i128]);
        }
        Ok(ScaledSupport { vertices, scale })
    }

    fn h(&self, dx: i128, dy: i128) -> i128 {
        self.vertices
            .iter()
            .map(|[x, y]| dx * x + dy * y)
            .max()
            .expect("a region has vertices")
    }

    /// Differences of vertex pairs; `width(d) = max |d · u|` over these.
    fn differences(&self) -> Vec<[i128; 2]> {
        let mut out = Vec::new();
        for (i, p) in self.vertices.iter().enumerate() {
            for q in &self.vertices[i + 1..] {
                out.push([p[0] - q[0], p[1] - q[1]]);
            }
        }
        out
    }

    fn width(&self, d: LatticeVector) -> i128 {
        let (dx, dy) = (d.dx as i128, d.dy as i128);
        self.h(dx, dy) + self.h(-dx, -dy)
    }
}

struct Dir {
    v: LatticeVector,
    cost: i128,
}

struct Plan<'a> {
    support: &'a ScaledSupport,
    dirs: Vec<Dir>,
    /// `guard[i]`: the directions from `i` on span at most a half-turn, so the
    /// vector still to be covered must lie between `dirs[i]` and the last one.
    guard: Vec<bool>,
    upper: Vec<i128>,
    rule: CountRule,
    offset: i64,
}

impl<'a> Plan<'a> {
    fn new(support: &'a ScaledSupport, k_max: usize, options: &SearchOptions) -> Result<Self> {
        let wx = support.width(LatticeVector::new(1, 0));
        let wy = support.width(LatticeVector::new(0, 1));
        let mut upper = vec![0i128; k_max + 1];
        for (k, slot) in upper.iter_mut().enumerate().skip(1) {
            *slot = rectangle_bound(k, wx, wy, options.count_rule);
        }
        let ceiling = upper.iter().copied().max().unwrap_or(0);

        let diffs = support.differences();
        let too_wide = |dx: i64| Error::ResourceExhausted {
            message: format!(
                "search would need edge directions with a coordinate above the limit {}",
                options.max_extent
            ),
            datum: format!("K = {k_max}, at dx = {dx}"),
        };
        let limit = options.max_extent as i64;
        // The directions of width at most G form a centrally symmetric convex
        // set; walk its rows outward from dx = 0 until a row is empty.
        let mut dirs = Vec::new();
        let mut dx = 0i64;
        while let Some((lo, hi)) = row(&diffs, dx, ceiling) {
            if dx > limit || lo < -(limit as i128) || hi > limit as i128 {
                return Err(too_wide(dx));
            }
            let (lo, hi) = (lo as i64, hi as i64);
            for sx in if dx == 0 { vec![0] } else { vec![dx, -dx] } {
                let (lo, hi) = if sx < 0 { (-hi, -lo) } else { (lo, hi) };
                for dy in lo..=hi {
                    let v = LatticeVector::new(sx, dy);
                    if v.is_zero() || v.lattice_length() != 1 {
                        continue;
                    }
                    let cost = support.h(sx as i128, dy as i128);
                    dirs.push(Dir { v, cost });
                }
            }
            dx += 1;
        }
        dirs.sort_by(|a, b| clockwise_cmp(a.v, b.v));
        let guard = match dirs.last() {
            Some(last) => dirs.iter().map(|d| d.v.cross(last.v) <= 0).collect(),
            None => Vec::new(),
        };
        Ok(Plan {
            support,
            dirs,
            guard,
            upper,
            rule: options.count_rule,
            offset: options.count_offset,
        })
    }

    fn run_from(&self, first: usize, best: &mut Best) {
        let mut state = Partial {
            pos: (0, 0),
            cost: 0,
            area2: 0,
            boundary: 0,
            edges: Vec::new(),
        };
        self.extend(first, &mut state, best);
    }

    /// Whether `w` can still be written as a nonnegative combination of the
    /// directions from index `from` onward (necessary conditions only).
    fn reachable(&self, from: usize, w: (i64, i64)) -> bool {
        if from >= self.dirs.len() {
            return false;
        }
        if !self.guard[from] {
            return true;
        }
        let w = LatticeVector::new(w.0, w.1);
        let head = self.dirs[from].v;
        let tail = self.dirs[self.dirs.len() - 1].v;
        head.cross(w) <= 0 && w.cross(tail) <= 0
    }

    /// Tries every multiplicity of direction `j`, then recurses on later directions.
    fn extend(&self, j: usize, state: &mut Partial, best: &mut Best) {
        let d = &self.dirs[j];
        let next = j + 1;
        let start_pos = state.pos;
        let start_cost = state.cost;
        let mut m: i64 = 0;
        loop {
            m += 1;
            let cost = start_cost + m as i128 * d.cost;
            let threshold = best.threshold();
            if cost > threshold {
                break;
            }
            let pos = (start_pos.0 + m * d.v.dx, start_pos.1 + m * d.v.dy);
            let edge = LatticeVector::new(m * d.v.dx, m * d.v.dy);
            let area2 = state.area2 + start_pos.0 as i128 * edge.dy as i128
                - start_pos.1 as i128 * edge.dx as i128;
            let boundary = state.boundary + m as u64;

            if pos == (0, 0) {
                state.edges.push(edge);
                self.record(cost, area2, boundary, &state.edges, best);
                state.edges.pop();
                continue;
            }
            let w = (-pos.0, -pos.1);
            if cost + self.support.h(w.0 as i128, w.1 as i128) > threshold {
                continue;
            }
            if !self.reachable(next, w) {
                continue;
            }
            let saved = (state.pos, state.cost, state.area2, state.boundary);
            state.pos = pos;
            state.cost = cost;
            state.area2 = area2;
            state.boundary = boundary;
            state.edges.push(edge);
            for j2 in next..self.dirs.len() {
                self.extend(j2, state, best);
            }
            state.edges.pop();
            (state.pos, state.cost, state.area2, state.boundary) = saved;
        }
    }

    fn record(
        &self,
        cost: i128,
        area2: i128,
        boundary: u64,
        edges: &[LatticeVector],
        best: &mut Best,
    ) {
        let count = (area2.unsigned_abs() as u64 + boundary) / 2 + 1;
        let count = count as i64 + self.offset;
        if count < 2 {
            return;
        }
        let top = (count - 1) as usize;
        let k_max = best.found.len() - 1;
        match self.rule {
            CountRule::AtLeast => {
                for k in 1..=top.min(k_max) {
                    best.offer(k, cost, edges);
                }
            }
            CountRule::Exactly => {
                if top <= k_max {
                    best.offer(top, cost, edges);
                }
            }
        }
    }
}

struct Partial {
    pos: (i64, i64),
    cost: i128,
    area2: i128,
    boundary: u64,
    edges: Vec<LatticeVector>,
}

/// Best loop per index plus the pruning bounds it implies.
struct Best {
    found: Vec<Option<(i128, Vec<LatticeVector>)>>,
    bound: Vec<i128>,
    threshold: i128,
}

impl Best {
    fn new(upper: &[i128]) -> Self {
        let mut best = Best {
            found: vec![None; upper.len()],
            bound: upper.to_vec(),
            threshold: 0,
        };
        best.refresh();
        best
    }

    fn threshold(&self) -> i128 {
        self.threshold
    }

    fn refresh(&mut self) {
        self.threshold = self.bound.iter().skip(1).copied().max().unwrap_or(0);
    }

    fn offer(&mut self, k: usize, cost: i128, edges: &[LatticeVector]) {
        let better = match &self.found[k] {
            None => true,
            Some((c, e)) => match cost.cmp(c) {
                Ordering::Less => true,
                Ordering::Equal => edges < e.as_slice(),
                Ordering::Greater => false,
            },
        };
        if better {
            self.found[k] = Some((cost, edges.to_vec()));
            if cost < self.bound[k] {
                self.bound[k] = cost;
                self.refresh();
            }
        }
    }

    fn absorb(&mut self, other: Best) {
        for (k, entry) in other.found.into_iter().enumerate() {
            if let Some((cost, edges)) = entry {
                self.offer(k, cost, &edges);
            }
        }
    }
}

/// Range of `dy` with `|dx·ux + dy·uy| ≤ g` for every difference `u`, if nonempty.
fn row(diffs: &[[i128; 2]], dx: i64, g: i128) -> Option<(i128, i128)> {
    let dx = dx as i128;
    let (mut lo, mut hi) = (i128::MIN, i128::MAX);
    for &[ux, uy] in diffs {
        let base = dx * ux;
        if uy == 0 {
            if base.abs() > g {
                return None;
            }
            continue;
        }
        let (a, b) = ((-g - base), (g - base));
        let (a, b) = if uy > 0 { (a, b) } else { (-b, -a) };
        let uy = uy.abs();
        lo = lo.max(a.div_euclid(uy) + i128::from(a.rem_euclid(uy) != 0));
        hi = hi.min(b.div_euclid(uy));
    }
    if lo > hi {
        return None;
    }
    Some((lo, hi))
}

/// Cheapest axis-parallel `m × n` rectangle loop with enough points.
fn rectangle_bound(k: usize, wx: i128, wy: i128, rule: CountRule) -> i128 {
    let need = k as i128 + 1;
    let mut best = i128::MAX;
    for m in 0..need {
        for n in 0..need {
            let count = (m + 1) * (n + 1);
            let ok = match rule {
                CountRule::AtLeast => count >= need,
                CountRule::Exactly => count == need,
            };
            if ok {
                best = best.min(m * wx + n * wy);
            }
            if count >= need {
                break;
            }
        }
    }
    best
}
