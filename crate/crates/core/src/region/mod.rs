//! Planar moment regions with exact rational vertices.
//!
//! A toric domain in ℂ² is the preimage of its moment region under
//! `μ(z₁, z₂) = (π|z₁|², π|z₂|²)`. Two polygon types are provided:
//!
//! * [`MomentRegion`]: a convex polygon with nonempty interior. This is the
//!   input of the capacity engine.
//! * [`StarPolygon`]: any simple polygon, used for the disk-degenerate
//!   criterion, the star kernel and the transversality test.
//!
//! Both store their vertices counterclockwise, without repeated or collinear
//! vertices, rotated to start at the bottom-most then left-most vertex, so
//! derived equality is geometric equality.

mod criterion;
mod kernel;
mod point;
pub(crate) mod poly;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::Rational;

pub use criterion::{Axis, AxisVerdict, CriterionReport};
pub use kernel::{Kernel, Transversality};
pub use point::{pt, Point};

fn render(vertices: &[Point]) -> String {
    let parts: Vec<String> = vertices.iter().map(|p| p.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

/// Operations common to both polygon types.
pub trait Polygon: Sized {
    fn vertices(&self) -> &[Point];

    /// Rebuilds the same kind of polygon from an affinely transformed vertex list.
    #[doc(hidden)]
    fn with_vertices(&self, vertices: Vec<Point>) -> Self;

    /// Shifts every vertex by `t`. First-quadrant membership is not checked here.
    fn translate(&self, t: &Point) -> Self {
        self.with_vertices(self.vertices().iter().map(|v| v + t).collect())
    }

    /// Scales by `lambda > 0` about `center`: `q ↦ λ(q − p) + p`.
    fn scale_from(&self, lambda: &Rational, center: &Point) -> Result<Self> {
        if !lambda.is_positive() {
            return Err(Error::InvalidParameter {
                message: "scale factor must be positive".into(),
                datum: lambda.to_string(),
            });
        }
        Ok(self.with_vertices(
            self.vertices()
                .iter()
                .map(|v| &(v - center).scale(lambda) + center)
                .collect(),
        ))
    }

    /// Exact shoelace area, equal to the symplectic volume of the toric domain.
    fn area(&self) -> Rational {
        poly::signed_area2(self.vertices()) / Rational::from_integer(2)
    }

    /// Closed membership (boundary counts as inside).
    fn contains(&self, p: &Point) -> bool {
        poly::contains_closed(self.vertices(), p)
    }

    fn in_first_quadrant(&self) -> bool {
        self.vertices()
            .iter()
            .all(|v| !v.rho1.is_negative() && !v.rho2.is_negative())
    }
}

/// Convex polygon with nonempty interior.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct MomentRegion {
    vertices: Vec<Point>,
}

impl std::fmt::Debug for MomentRegion {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "MomentRegion{}", render(&self.vertices))
    }
}

impl MomentRegion {
    /// Builds a convex region from vertices given in either orientation.
    ///
    /// Repeated and collinear vertices are dropped. Fails if fewer than three
    /// non-collinear vertices remain or if the polygon is not convex.
    pub fn new(vertices: Vec<Point>) -> Result<Self> {
        let datum = render(&vertices);
        let mut v = vertices;
        poly::dedup_cyclic(&mut v);
        if v.len() >= 3 && poly::signed_area2(&v).is_negative() {
            v.reverse();
        }
        let spike_free = poly::drop_collinear(&mut v);
        if v.len() < 3 || poly::signed_area2(&v).is_zero() {
            return Err(Error::DegenerateRegion {
                message: "region has empty interior".into(),
                datum,
            });
        }
        if !spike_free {
            return Err(Error::InvalidPolygon {
                message: "boundary doubles back on itself".into(),
                datum,
            });
        }
        poly::rotate_canonical(&mut v);
        // Convex iff every turn is a left turn and the edge directions make a single revolution.
        let n = v.len();
        let edges: Vec<Point> = (0..n).map(|i| &v[(i + 1) % n] - &v[i]).collect();
        let turns_left = (0..n).all(|i| edges[i].cross(&edges[(i + 1) % n]).is_positive());
        let single_turn = edges
            .windows(2)
            .all(|w| poly::angle_cmp(&w[0], &w[1]) == std::cmp::Ordering::Less);
        if !turns_left || !single_turn {
            return Err(Error::InvalidPolygon {
                message: "polygon is not convex".into(),
                datum,
            });
        }
        Ok(MomentRegion { vertices: v })
    }

    /// Region of `E(a, b)`: the triangle `(0,0), (a,0), (0,b)`.
    pub fn ellipsoid(a: &Rational, b: &Rational) -> Result<Self> {
        positive("a", a)?;
        positive("b", b)?;
        Self::new(vec![
            Point::origin(),
            Point::new(a.clone(), Rational::zero()),
            Point::new(Rational::zero(), b.clone()),
        ])
    }

    /// Region of `B(a) = E(a, a)`.
    pub fn ball(a: &Rational) -> Result<Self> {
        Self::ellipsoid(a, a)
    }

    /// Region of `P(a, b)`: the rectangle `[0,a] × [0,b]`.
    pub fn polydisk(a: &Rational, b: &Rational) -> Result<Self> {
        positive("a", a)?;
        positive("b", b)?;
        Self::new(vec![
            Point::origin(),
            Point::new(a.clone(), Rational::zero()),
            Point::new(a.clone(), b.clone()),
            Point::new(Rational::zero(), b.clone()),
        ])
    }

    /// Exact intersection of two convex regions.
    pub fn intersect(&self, other: &MomentRegion) -> Result<MomentRegion> {
        let mut clipped = self.vertices.clone();
        let n = other.vertices.len();
        for i in 0..n {
            if clipped.is_empty() {
                break;
            }
            clipped = poly::clip_left(&clipped, &other.vertices[i], &other.vertices[(i + 1) % n]);
        }
        MomentRegion::new(clipped).map_err(|_| Error::DegenerateRegion {
            message: "intersection has empty interior".into(),
            datum: format!("{self:?} ∩ {other:?}"),
        })
    }

    /// Smallest `s` with the region inside the region of `B(s)`: `max(ρ₁ + ρ₂)` over vertices.
    pub fn enclosing_ball_radius(&self) -> Rational {
        self.vertices
            .iter()
            .map(|v| &v.rho1 + &v.rho2)
            .max()
            .expect("a region has vertices")
    }

    /// Mean of the vertices; strictly interior for a convex region.
    pub fn vertex_centroid(&self) -> Point {
        let n = Rational::from_integer(self.vertices.len() as i64);
        let sum = self
            .vertices
            .iter()
            .fold(Point::origin(), |acc, v| &acc + v);
        sum.scale(&n.recip())
    }

    /// Vertex-wise containment: every vertex of `inner` lies in `self`.
    pub fn contains_region(&self, inner: &MomentRegion) -> bool {
        inner.vertices.iter().all(|v| self.contains(v))
    }

    pub fn to_star_polygon(&self) -> StarPolygon {
        StarPolygon {
            vertices: self.vertices.clone(),
        }
    }
}

impl Polygon for MomentRegion {
    fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    fn with_vertices(&self, vertices: Vec<Point>) -> Self {
        // Translations and positive scalings preserve convexity and orientation.
        let mut vertices = vertices;
        poly::rotate_canonical(&mut vertices);
        MomentRegion { vertices }
    }

    fn contains(&self, p: &Point) -> bool {
        let n = self.vertices.len();
        (0..n).all(|i| {
            !point::orient(&self.vertices[i], &self.vertices[(i + 1) % n], p).is_negative()
        })
    }
}

fn positive(name: &str, x: &Rational) -> Result<()> {
    if x.is_positive() {
        Ok(())
    } else {
        Err(Error::InvalidParameter {
            message: format!("{name} must be positive"),
            datum: x.to_string(),
        })
    }
}

/// Simple polygon with positive area.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct StarPolygon {
    vertices: Vec<Point>,
}

impl std::fmt::Debug for StarPolygon {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "StarPolygon{}", render(&self.vertices))
    }
}

impl StarPolygon {
    /// Builds a simple polygon from vertices in either orientation.
    pub fn new(vertices: Vec<Point>) -> Result<Self> {
        let datum = render(&vertices);
        let invalid = |message: &str| Error::InvalidPolygon {
            message: message.into(),
            datum: datum.clone(),
        };
        let mut v = vertices.clone();
        poly::dedup_cyclic(&mut v);
        if !poly::drop_collinear(&mut v) {
            return Err(invalid("boundary doubles back on itself"));
        }
        if v.len() < 3 {
            return Err(invalid("fewer than three distinct vertices"));
        }
        if !is_simple(&v) {
            return Err(invalid("polygon is not simple"));
        }
        let area2 = poly::signed_area2(&v);
        if area2.is_zero() {
            return Err(invalid("polygon has zero area"));
        }
        if area2.is_negative() {
            v.reverse();
        }
        poly::rotate_canonical(&mut v);
        Ok(StarPolygon { vertices: v })
    }

    pub fn is_convex(&self) -> bool {
        MomentRegion::new(self.vertices.clone()).is_ok()
    }

    /// Converts to a [`MomentRegion`] when the polygon is convex.
    pub fn to_moment_region(&self) -> Result<MomentRegion> {
        MomentRegion::new(self.vertices.clone()).map_err(|_| Error::UnsupportedRegion {
            message: "capacities are only defined here for convex regions".into(),
            datum: render(&self.vertices),
        })
    }

    /// Whether the closed segment `p → q` lies in the closed polygon.
    pub fn segment_inside(&self, p: &Point, q: &Point) -> bool {
        poly::segment_inside(&self.vertices, p, q)
    }

    /// Edges as `(start, end)` pairs in counterclockwise order.
    pub fn edges(&self) -> impl Iterator<Item = (&Point, &Point)> {
        let n = self.vertices.len();
        (0..n).map(move |i| (&self.vertices[i], &self.vertices[(i + 1) % n]))
    }
}

impl Polygon for StarPolygon {
    fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    fn with_vertices(&self, vertices: Vec<Point>) -> Self {
        let mut vertices = vertices;
        poly::rotate_canonical(&mut vertices);
        StarPolygon { vertices }
    }
}

/// Non-adjacent edges must not touch; adjacent edges may share only their common endpoint.
fn is_simple(v: &[Point]) -> bool {
    let n = v.len();
    for i in 0..n {
        for j in (i + 1)..n {
            let adjacent = j == i + 1 || (i == 0 && j == n - 1);
            if adjacent {
                continue;
            }
            let (a, b) = (&v[i], &v[(i + 1) % n]);
            let (c, d) = (&v[j], &v[(j + 1) % n]);
            if segments_touch(a, b, c, d) {
                return false;
            }
        }
    }
    true
}

fn segments_touch(a: &Point, b: &Point, c: &Point, d: &Point) -> bool {
    let sign = |r: Rational| -> i8 {
        if r.is_positive() {
            1
        } else if r.is_negative() {
            -1
        } else {
            0
        }
    };
    let o1 = sign(point::orient(a, b, c));
    let o2 = sign(point::orient(a, b, d));
    let o3 = sign(point::orient(c, d, a));
    let o4 = sign(point::orient(c, d, b));
    if o1 * o2 < 0 && o3 * o4 < 0 {
        return true;
    }
    (o1 == 0 && poly::on_segment(c, a, b))
        || (o2 == 0 && poly::on_segment(d, a, b))
        || (o3 == 0 && poly::on_segment(a, c, d))
        || (o4 == 0 && poly::on_segment(b, c, d))
}

/// Region of `E(a,b) ∩ E(c,d)`.
pub fn ellipsoid_intersection(
    a: &Rational,
    b: &Rational,
    c: &Rational,
    d: &Rational,
) -> Result<MomentRegion> {
    MomentRegion::ellipsoid(a, b)?.intersect(&MomentRegion::ellipsoid(c, d)?)
}
