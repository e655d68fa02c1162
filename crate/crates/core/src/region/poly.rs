//! Exact predicates on vertex lists shared by both polygon types.

use std::cmp::Ordering;

use crate::rational::Rational;

use super::point::{orient, Point};

pub(crate) fn signed_area2(vertices: &[Point]) -> Rational {
    let n = vertices.len();
    (0..n)
        .map(|i| vertices[i].cross(&vertices[(i + 1) % n]))
        .sum()
}

/// Drops consecutive (cyclic) duplicates.
pub(crate) fn dedup_cyclic(vertices: &mut Vec<Point>) {
    vertices.dedup();
    while vertices.len() > 1 && vertices.first() == vertices.last() {
        vertices.pop();
    }
}

/// Removes vertices lying on the straight continuation of their neighbours.
///
/// Returns `false` if some vertex is a back-tracking spike (the boundary
/// reverses direction there), which no simple polygon can contain.
pub(crate) fn drop_collinear(vertices: &mut Vec<Point>) -> bool {
    loop {
        let n = vertices.len();
        if n < 3 {
            return true;
        }
        let mut removed = None;
        for i in 0..n {
            let prev = &vertices[(i + n - 1) % n];
            let cur = &vertices[i];
            let next = &vertices[(i + 1) % n];
            if orient(prev, cur, next).is_zero() {
                if (cur - prev).dot(&(next - cur)).is_negative() {
                    return false;
                }
                removed = Some(i);
                break;
            }
        }
        match removed {
            Some(i) => {
                vertices.remove(i);
            }
            None => return true,
        }
    }
}

/// Rotates the list so that it starts at the bottom-most, then left-most vertex.
pub(crate) fn rotate_canonical(vertices: &mut [Point]) {
    if let Some(start) = (0..vertices.len()).min_by(|&i, &j| {
        vertices[i]
            .bottom_left_key()
            .cmp(&vertices[j].bottom_left_key())
    }) {
        vertices.rotate_left(start);
    }
}

/// Angular order of direction vectors on `[0, 2π)`, measured counterclockwise from +ρ₁.
pub(crate) fn angle_cmp(a: &Point, b: &Point) -> Ordering {
    let half = |v: &Point| -> u8 {
        if v.rho2.is_positive() || (v.rho2.is_zero() && v.rho1.is_positive()) {
            0
        } else {
            1
        }
    };
    half(a).cmp(&half(b)).then_with(|| {
        let c = a.cross(b);
        if c.is_positive() {
            Ordering::Less
        } else if c.is_negative() {
            Ordering::Greater
        } else {
            Ordering::Equal
        }
    })
}

pub(crate) fn on_segment(p: &Point, a: &Point, b: &Point) -> bool {
    orient(a, b, p).is_zero()
        && p.rho1 >= a.rho1.clone().min(b.rho1.clone())
        && p.rho1 <= a.rho1.clone().max(b.rho1.clone())
        && p.rho2 >= a.rho2.clone().min(b.rho2.clone())
        && p.rho2 <= a.rho2.clone().max(b.rho2.clone())
}

/// Membership in the closed polygon (boundary included), any orientation.
pub(crate) fn contains_closed(vertices: &[Point], p: &Point) -> bool {
    let n = vertices.len();
    let mut inside = false;
    for i in 0..n {
        let a = &vertices[i];
        let b = &vertices[(i + 1) % n];
        if on_segment(p, a, b) {
            return true;
        }
        if (a.rho2 > p.rho2) != (b.rho2 > p.rho2) {
            let x = &a.rho1 + (&p.rho2 - &a.rho2) * (&b.rho1 - &a.rho1) / (&b.rho2 - &a.rho2);
            if p.rho1 < x {
                inside = !inside;
            }
        }
    }
    inside
}

/// Keeps the part of a convex polygon on the closed left side of the directed line `a → b`.
pub(crate) fn clip_left(poly: &[Point], a: &Point, b: &Point) -> Vec<Point> {
    let n = poly.len();
    let mut out = Vec::with_capacity(n + 1);
    for i in 0..n {
        let cur = &poly[i];
        let next = &poly[(i + 1) % n];
        let sc = orient(a, b, cur);
        let sn = orient(a, b, next);
        if !sc.is_negative() {
            out.push(cur.clone());
        }
        if (sc.is_positive() && sn.is_negative()) || (sc.is_negative() && sn.is_positive()) {
            let t = &sc / (&sc - &sn);
            out.push(cur + &(next - cur).scale(&t));
        }
    }
    dedup_cyclic(&mut out);
    out
}

/// Parameters `t ∈ [0, 1]` at which segment `p → q` meets segment `a → b`.
fn crossing_params(p: &Point, q: &Point, a: &Point, b: &Point) -> Vec<Rational> {
    let d = q - p;
    let e = b - a;
    let denom = d.cross(&e);
    let zero = Rational::zero();
    let one = Rational::one();
    let in_unit = |t: &Rational| *t >= zero && *t <= one;
    if !denom.is_zero() {
        let ap = a - p;
        let t = ap.cross(&e) / &denom;
        let u = ap.cross(&d) / &denom;
        if in_unit(&t) && in_unit(&u) {
            return vec![t];
        }
        return Vec::new();
    }
    if !orient(p, q, a).is_zero() {
        return Vec::new();
    }
    // Collinear: project the edge endpoints onto p → q.
    let len2 = d.dot(&d);
    if len2.is_zero() {
        return Vec::new();
    }
    [a, b]
        .into_iter()
        .map(|x| (x - p).dot(&d) / &len2)
        .filter(in_unit)
        .collect()
}

/// Whether the closed segment `p → q` lies entirely in the closed polygon.
pub(crate) fn segment_inside(vertices: &[Point], p: &Point, q: &Point) -> bool {
    let n = vertices.len();
    let mut ts = vec![Rational::zero(), Rational::one()];
    for i in 0..n {
        ts.extend(crossing_params(p, q, &vertices[i], &vertices[(i + 1) % n]));
    }
    ts.sort();
    ts.dedup();
    let d = q - p;
    let at = |t: &Rational| p + &d.scale(t);
    if !ts.iter().all(|t| contains_closed(vertices, &at(t))) {
        return false;
    }
    ts.windows(2)
        .all(|w| contains_closed(vertices, &at(&w[0].midpoint(&w[1]))))
}
