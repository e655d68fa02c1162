//! Exhaustive reference computation over a bounded box.
//!
//! Every point, segment and strictly convex lattice polygon with vertices in
//! the box is enumerated by walking its vertices clockwise from the lowest
//! one. Enclosed points are counted directly, not through Pick's theorem, and
//! lengths use the support function measured from the coordinate origin. The
//! result is exact for the box; it agrees with the true capacities once the
//! box is large enough to hold a minimizer for every index.

use std::cmp::Ordering;

use num_traits::ToPrimitive;

use super::{clockwise_cmp, CapacitySequence, ConvexLoop};
use crate::norm::LatticeVector;
use crate::rational::{common_denominator, Rational};
use crate::region::{MomentRegion, Polygon};

/// Minimal lengths over loops with vertices in `[−half_width, half_width]²`.
///
/// Witnesses are lexicographically least edge lists among minimizers, placed
/// at the first base found.
pub fn brute_force_capacities(
    region: &MomentRegion,
    k_max: usize,
    half_width: i64,
) -> CapacitySequence {
    let n = half_width;
    let table = BoxSearch::new(region, (-n, n), (-n, n), k_max).run();
    table.into_sequence()
}

/// Cheapest loop with vertices in `{0, 1}²` enclosing at least three points,
/// with its length.
pub fn minimal_witness_in_unit_square(region: &MomentRegion) -> (ConvexLoop, Rational) {
    let seq = BoxSearch::new(region, (0, 1), (0, 1), 2)
        .run()
        .into_sequence();
    let witness = seq.witnesses.expect("brute force keeps witnesses")[2].clone();
    (witness, seq.values[2].clone())
}

struct BoxSearch {
    xs: (i64, i64),
    ys: (i64, i64),
    /// Region vertices times `scale`.
    vertices: Vec<[i128; 2]>,
    scale: Rational,
    best: Vec<Option<(i128, ConvexLoop)>>,
}

struct Table {
    scale: Rational,
    best: Vec<Option<(i128, ConvexLoop)>>,
}

impl Table {
    fn into_sequence(self) -> CapacitySequence {
        let mut values = Vec::new();
        let mut witnesses = Vec::new();
        for (k, entry) in self.best.into_iter().enumerate() {
            let (cost, w) = entry.unwrap_or_else(|| panic!("box too small for k = {k}"));
            values.push(Rational::from_bigint(cost.into()) / &self.scale);
            witnesses.push(w);
        }
        CapacitySequence {
            values,
            witnesses: Some(witnesses),
        }
    }
}

impl BoxSearch {
    fn new(region: &MomentRegion, xs: (i64, i64), ys: (i64, i64), k_max: usize) -> Self {
        let coords = region.vertices().iter().flat_map(|p| [&p.rho1, &p.rho2]);
        let scale = Rational::from_bigint(common_denominator(coords));
        let vertices = region
            .vertices()
            .iter()
            .map(|p| {
                let x = (&p.rho1 * &scale)
                    .numer()
                    .to_i128()
                    .expect("small coordinates");
                let y = (&p.rho2 * &scale)
                    .numer()
                    .to_i128()
                    .expect("small coordinates");
                [x, y]
            })
            .collect();
        BoxSearch {
            xs,
            ys,
            vertices,
            scale,
            best: vec![None; k_max + 1],
        }
    }

    fn cost(&self, e: [i64; 2]) -> i128 {
        self.vertices
            .iter()
            .map(|[x, y]| e[0] as i128 * x + e[1] as i128 * y)
            .max()
            .expect("nonempty")
    }

    fn worst(&self) -> Option<i128> {
        let mut worst = i128::MIN;
        for entry in &self.best {
            worst = worst.max(entry.as_ref()?.0);
        }
        Some(worst)
    }

    fn points(&self) -> Vec<[i64; 2]> {
        let mut pts = Vec::new();
        for y in self.ys.0..=self.ys.1 {
            for x in self.xs.0..=self.xs.1 {
                pts.push([x, y]);
            }
        }
        pts
    }

    fn run(mut self) -> Table {
        let pts = self.points();
        for (i, &p0) in pts.iter().enumerate() {
            self.offer(&[p0]);
            // Points after p0 in (y, x) order are exactly the valid second vertices.
            for &p1 in &pts[i + 1..] {
                self.offer(&[p0, p1]);
                let mut chain = vec![p0, p1];
                let cost = self.cost(sub(p1, p0));
                self.walk(&pts[i + 1..], &mut chain, cost);
            }
        }
        Table {
            scale: self.scale,
            best: self.best,
        }
    }

    /// Extends a convex chain starting at `chain[0]`, recording each closed polygon.
    fn walk(&mut self, later: &[[i64; 2]], chain: &mut Vec<[i64; 2]>, cost: i128) {
        let p0 = chain[0];
        let last = *chain.last().unwrap();
        let first_edge = lv(sub(chain[1], p0));
        let prev = lv(sub(last, chain[chain.len() - 2]));
        for &q in later {
            if chain.contains(&q) {
                continue;
            }
            let e = lv(sub(q, last));
            if clockwise_cmp(prev, e) != Ordering::Less || prev.cross(e) >= 0 {
                continue;
            }
            let cost = cost + self.cost(sub(q, last));
            if let Some(worst) = self.worst() {
                if cost + self.cost(sub(p0, q)) > worst {
                    continue;
                }
            }
            let close = lv(sub(p0, q));
            if clockwise_cmp(e, close) == Ordering::Less
                && e.cross(close) < 0
                && close.cross(first_edge) < 0
            {
                chain.push(q);
                self.offer(chain);
                chain.pop();
            }
            chain.push(q);
            self.walk(later, chain, cost);
            chain.pop();
        }
    }

    fn offer(&mut self, vertices: &[[i64; 2]]) {
        let n = vertices.len();
        let edges: Vec<[i64; 2]> = (0..n)
            .map(|i| sub(vertices[(i + 1) % n], vertices[i]))
            .filter(|e| *e != [0, 0])
            .collect();
        let cost: i128 = edges.iter().map(|&e| self.cost(e)).sum();
        if let Some(worst) = self.worst() {
            if cost > worst {
                return;
            }
        }
        let count = count_enclosed(vertices);
        let edges: Vec<LatticeVector> = edges.into_iter().map(lv).collect();
        for k in 0..self.best.len().min(count) {
            let better = match &self.best[k] {
                None => true,
                Some((c, w)) => cost < *c || (cost == *c && edges.as_slice() < w.edges()),
            };
            if better {
                let w = ConvexLoop::new(vertices[0], edges.clone())
                    .expect("enumerated loops are convex");
                self.best[k] = Some((cost, w));
            }
        }
    }
}

/// Lattice points in the closed hull of a clockwise strictly convex vertex list,
/// a segment, or a single point.
fn count_enclosed(vertices: &[[i64; 2]]) -> usize {
    let (mut x0, mut x1) = (i64::MAX, i64::MIN);
    let (mut y0, mut y1) = (i64::MAX, i64::MIN);
    for &[x, y] in vertices {
        x0 = x0.min(x);
        x1 = x1.max(x);
        y0 = y0.min(y);
        y1 = y1.max(y);
    }
    let n = vertices.len();
    let mut count = 0;
    for y in y0..=y1 {
        for x in x0..=x1 {
            let inside = match n {
                1 => true,
                2 => {
                    let [a, b] = [vertices[0], vertices[1]];
                    cross(sub(b, a), sub([x, y], a)) == 0
                }
                _ => (0..n).all(|i| {
                    let a = vertices[i];
                    let b = vertices[(i + 1) % n];
                    cross(sub(b, a), sub([x, y], a)) <= 0
                }),
            };
            if inside {
                count += 1;
            }
        }
    }
    count
}

fn sub(a: [i64; 2], b: [i64; 2]) -> [i64; 2] {
    [a[0] - b[0], a[1] - b[1]]
}

fn cross(a: [i64; 2], b: [i64; 2]) -> i64 {
    a[0] * b[1] - a[1] * b[0]
}

fn lv(e: [i64; 2]) -> LatticeVector {
    LatticeVector::new(e[0], e[1])
}
