//! Disk-degenerate criterion.
//!
//! If a region touches the coordinate line `Pᵢ = {ρᵢ = 0}`, every line normal
//! to `Pᵢ` must meet `A ∪ Pᵢ` in a connected set. Equivalently, each chord of
//! `A` perpendicular to `Pᵢ` is a single interval reaching down to `ρᵢ = 0`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::Rational;

use super::poly::contains_closed;
use super::{Point, Polygon, StarPolygon};

/// A coordinate line of moment space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Axis {
    /// `P₁ = {ρ₁ = 0}`; its normal lines are horizontal.
    One,
    /// `P₂ = {ρ₂ = 0}`; its normal lines are vertical.
    Two,
}

impl Axis {
    /// Index of the coordinate that vanishes on this line.
    fn vanishing(self) -> usize {
        match self {
            Axis::One => 0,
            Axis::Two => 1,
        }
    }

    /// Index of the coordinate that is constant along each normal line.
    fn along(self) -> usize {
        1 - self.vanishing()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxisVerdict {
    pub axis: Axis,
    pub passed: bool,
    /// For a failure, the coordinate of the first offending normal line.
    pub witness: Option<Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CriterionReport {
    /// One verdict per touched axis; untouched axes impose no condition.
    pub verdicts: Vec<AxisVerdict>,
}

impl CriterionReport {
    pub fn touched_axes(&self) -> Vec<Axis> {
        self.verdicts.iter().map(|v| v.axis).collect()
    }

    pub fn passed(&self) -> bool {
        self.verdicts.iter().all(|v| v.passed)
    }

    pub fn verdict(&self, axis: Axis) -> Option<&AxisVerdict> {
        self.verdicts.iter().find(|v| v.axis == axis)
    }
}

/// Intersection of the closed polygon with the normal line at `level`,
/// as a sorted list of disjoint closed intervals.
fn chord(vertices: &[Point], axis: Axis, level: &Rational) -> Vec<(Rational, Rational)> {
    let (a, v) = (axis.along(), axis.vanishing());
    let make = |along: &Rational, across: &Rational| {
        if a == 0 {
            Point::new(along.clone(), across.clone())
        } else {
            Point::new(across.clone(), along.clone())
        }
    };
    let n = vertices.len();
    let mut hits = Vec::new();
    for i in 0..n {
        let p = &vertices[i];
        let q = &vertices[(i + 1) % n];
        let (pa, qa) = (p.coord(a), q.coord(a));
        if pa == level && qa == level {
            hits.push(p.coord(v).clone());
            hits.push(q.coord(v).clone());
        } else if (pa <= level && level <= qa) || (qa <= level && level <= pa) {
            let t = (level - pa) / (qa - pa);
            hits.push(p.coord(v) + t * (q.coord(v) - p.coord(v)));
        }
    }
    hits.sort();
    hits.dedup();
    let mut intervals: Vec<(Rational, Rational)> = Vec::new();
    for (i, y) in hits.iter().enumerate() {
        let joined = i > 0 && {
            let mid = hits[i - 1].midpoint(y);
            contains_closed(vertices, &make(level, &mid))
        };
        match intervals.last_mut() {
            Some(last) if joined => last.1 = y.clone(),
            _ => intervals.push((y.clone(), y.clone())),
        }
    }
    intervals
}

fn check_axis(vertices: &[Point], axis: Axis) -> AxisVerdict {
    let a = axis.along();
    let mut levels: Vec<Rational> = vertices.iter().map(|p| p.coord(a).clone()).collect();
    levels.sort();
    levels.dedup();
    let mids: Vec<Rational> = levels.windows(2).map(|w| w[0].midpoint(&w[1])).collect();
    levels.extend(mids);
    levels.sort();
    let witness = levels.into_iter().find(|level| {
        let pieces = chord(vertices, axis, level);
        match pieces.as_slice() {
            [] => false,
            [(lo, _)] => !lo.is_zero(),
            _ => true,
        }
    });
    AxisVerdict {
        axis,
        passed: witness.is_none(),
        witness,
    }
}

impl StarPolygon {
    /// Checks the disk-degenerate criterion on every axis the polygon touches.
    pub fn criterion_check(&self) -> Result<CriterionReport> {
        if !self.in_first_quadrant() {
            return Err(Error::InvalidPolygon {
                message: "criterion requires a polygon in the closed first quadrant".into(),
                datum: format!("{self:?}"),
            });
        }
        let vertices = self.vertices();
        let verdicts = [Axis::One, Axis::Two]
            .into_iter()
            .filter(|axis| vertices.iter().any(|p| p.coord(axis.vanishing()).is_zero()))
            .map(|axis| check_axis(vertices, axis))
            .collect();
        Ok(CriterionReport { verdicts })
    }

    /// Whether the closed polygon contains the whole projection of itself onto `axis`.
    ///
    /// For convex polygons this is equivalent to the criterion on that axis.
    pub fn contains_axis_shadow(&self, axis: Axis) -> bool {
        let a = axis.along();
        let coords = self.vertices().iter().map(|p| p.coord(a));
        let lo = coords.clone().min().expect("nonempty").clone();
        let hi = coords.max().expect("nonempty").clone();
        let zero = Rational::zero();
        let on_axis = |x: &Rational| match axis {
            Axis::Two => Point::new(x.clone(), zero.clone()),
            Axis::One => Point::new(zero.clone(), x.clone()),
        };
        self.segment_inside(&on_axis(&lo), &on_axis(&hi))
    }
}
