use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::Rational;

use super::point::orient;
use super::poly::{self, on_segment};
use super::{MomentRegion, Point, Polygon, StarPolygon};

/// Set of star-centers of a simple polygon.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Kernel {
    Empty,
    Point { at: Point },
    Segment { from: Point, to: Point },
    Region { region: MomentRegion },
}

impl Kernel {
    pub fn is_empty(&self) -> bool {
        matches!(self, Kernel::Empty)
    }

    pub fn contains(&self, p: &Point) -> bool {
        match self {
            Kernel::Empty => false,
            Kernel::Point { at } => at == p,
            Kernel::Segment { from, to } => on_segment(p, from, to),
            Kernel::Region { region } => region.contains(p),
        }
    }

    pub fn as_region(&self) -> Option<&MomentRegion> {
        match self {
            Kernel::Region { region } => Some(region),
            _ => None,
        }
    }
}

/// Outcome of the ray-transversality test.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "lowercase")]
pub enum Transversality {
    Pass,
    /// The supporting line of this edge passes through the center.
    Fail {
        from: Point,
        to: Point,
    },
}

impl StarPolygon {
    /// Intersection of the inner half-planes of all edges.
    pub fn star_kernel(&self) -> Kernel {
        let v = self.vertices();
        let (mut lo1, mut hi1) = (v[0].rho1.clone(), v[0].rho1.clone());
        let (mut lo2, mut hi2) = (v[0].rho2.clone(), v[0].rho2.clone());
        for p in v {
            lo1 = lo1.min(p.rho1.clone());
            hi1 = hi1.max(p.rho1.clone());
            lo2 = lo2.min(p.rho2.clone());
            hi2 = hi2.max(p.rho2.clone());
        }
        let mut cell = vec![
            Point::new(lo1.clone(), lo2.clone()),
            Point::new(hi1.clone(), lo2),
            Point::new(hi1, hi2.clone()),
            Point::new(lo1, hi2),
        ];
        for (a, b) in self.edges() {
            cell = poly::clip_left(&cell, a, b);
            if cell.is_empty() {
                return Kernel::Empty;
            }
        }
        classify(cell)
    }

    /// Checks that rays from `center` cross the boundary transversally.
    ///
    /// For a polygon this holds when no edge's supporting line passes through
    /// `center`; tangency at a vertex is accepted. The center must be a
    /// star-center (boundary points of the kernel allowed).
    pub fn transversality_check(&self, center: &Point) -> Result<Transversality> {
        if !self.star_kernel().contains(center) {
            return Err(Error::InvalidCenter {
                message: "center is not a star-center of the polygon".into(),
                datum: center.to_string(),
            });
        }
        Ok(self
            .edges()
            .find(|(a, b)| orient(a, b, center).is_zero())
            .map(|(a, b)| Transversality::Fail {
                from: a.clone(),
                to: b.clone(),
            })
            .unwrap_or(Transversality::Pass))
    }
}

fn classify(mut cell: Vec<Point>) -> Kernel {
    poly::dedup_cyclic(&mut cell);
    match cell.len() {
        0 => return Kernel::Empty,
        1 => return Kernel::Point { at: cell.remove(0) },
        _ => {}
    }
    if let Ok(region) = MomentRegion::new(cell.clone()) {
        return Kernel::Region { region };
    }
    // All points collinear: keep the two extremes along the common line.
    let base = cell[0].clone();
    let dir = &cell[1] - &base;
    let param = |p: &Point| -> Rational { (p - &base).dot(&dir) };
    let a = cell
        .iter()
        .min_by_key(|p| param(p))
        .expect("nonempty")
        .clone();
    let b = cell
        .iter()
        .max_by_key(|p| param(p))
        .expect("nonempty")
        .clone();
    let (from, to) = if a <= b { (a, b) } else { (b, a) };
    if from == to {
        Kernel::Point { at: from }
    } else {
        Kernel::Segment { from, to }
    }
}
