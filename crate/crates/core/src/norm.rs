//! The asymmetric norm `ℓ_A` induced by a convex moment region.
//!
//! For a direction `v`, `ℓ_A(v) = v · q` where `q` is the boundary point of
//! `A` whose outward normal is parallel to `v` (a corner when `v` falls
//! between two edge normals). For a convex polygon this is the support
//! function `max_q v · (q − o)` over the vertices, measured from a chosen
//! origin `o`. Single values depend on `o`; lengths of closed loops do not.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::region::{MomentRegion, Point, Polygon};

/// Integer direction or edge vector.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(from = "[i64; 2]", into = "[i64; 2]")]
pub struct LatticeVector {
    pub dx: i64,
    pub dy: i64,
}

impl LatticeVector {
    pub const fn new(dx: i64, dy: i64) -> Self {
        LatticeVector { dx, dy }
    }

    pub fn is_zero(&self) -> bool {
        self.dx == 0 && self.dy == 0
    }

    pub fn to_point(self) -> Point {
        Point::from_ints(self.dx, self.dy)
    }

    pub fn cross(self, other: LatticeVector) -> i64 {
        self.dx * other.dy - self.dy * other.dx
    }

    /// Number of lattice steps along the vector, `gcd(|dx|, |dy|)`.
    pub fn lattice_length(self) -> u64 {
        num_integer::gcd(self.dx.unsigned_abs(), self.dy.unsigned_abs())
    }

    pub fn l1(self) -> u64 {
        self.dx.unsigned_abs() + self.dy.unsigned_abs()
    }
}

impl From<[i64; 2]> for LatticeVector {
    fn from([dx, dy]: [i64; 2]) -> Self {
        LatticeVector { dx, dy }
    }
}

impl From<LatticeVector> for [i64; 2] {
    fn from(v: LatticeVector) -> Self {
        [v.dx, v.dy]
    }
}

impl fmt::Debug for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.dx, self.dy)
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.dx, self.dy)
    }
}

/// `ℓ_A` for a convex region `A`, with position vectors drawn from `origin`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportNorm {
    region: MomentRegion,
    origin: Point,
}

impl SupportNorm {
    pub fn new(region: MomentRegion, origin: Point) -> Self {
        SupportNorm { region, origin }
    }

    /// Norm with its origin at the vertex centroid, an interior point, so
    /// every nonzero vector has positive length.
    pub fn centered(region: MomentRegion) -> Self {
        let origin = region.vertex_centroid();
        SupportNorm { region, origin }
    }

    pub fn region(&self) -> &MomentRegion {
        &self.region
    }

    pub fn origin(&self) -> &Point {
        &self.origin
    }

    pub fn with_origin(&self, origin: Point) -> Self {
        SupportNorm::new(self.region.clone(), origin)
    }

    fn values(&self, v: LatticeVector) -> impl Iterator<Item = Rational> + '_ {
        let v = v.to_point();
        self.region
            .vertices()
            .iter()
            .map(move |q| v.dot(&(q - &self.origin)))
    }

    /// `ℓ_A(v)`; `v` must be nonzero.
    pub fn ell(&self, v: LatticeVector) -> Result<Rational> {
        nonzero(v)?;
        Ok(self.values(v).max().expect("a region has vertices"))
    }

    /// Support value `max_q v · (q − o)`, defined for every `v` (0 at `v = 0`).
    pub(crate) fn support(&self, v: LatticeVector) -> Rational {
        self.values(v).max().expect("a region has vertices")
    }

    /// `ℓ_A(v) + ℓ_A(−v)`: width of the region measured along `v`.
    pub fn width(&self, v: LatticeVector) -> Rational {
        self.support(v) + self.support(-v)
    }

    /// `ℓ_A`-length of a closed edge sequence (empty for a point loop).
    pub fn loop_length(&self, edges: &[LatticeVector]) -> Result<Rational> {
        let (sx, sy) = edges
            .iter()
            .fold((0i64, 0i64), |(x, y), e| (x + e.dx, y + e.dy));
        if sx != 0 || sy != 0 {
            return Err(Error::InvalidLoop {
                message: "edges do not close up".into(),
                datum: format!("{edges:?} sums to ({sx}, {sy})"),
            });
        }
        edges.iter().map(|&e| self.ell(e)).sum()
    }

    /// Index (in [`MomentRegion::vertices`] order) of the first vertex attaining the support in direction `v`.
    pub fn classify_direction(&self, v: LatticeVector) -> Result<usize> {
        nonzero(v)?;
        let values: Vec<Rational> = self.values(v).collect();
        let best = values.iter().max().expect("a region has vertices");
        Ok(values
            .iter()
            .position(|x| x == best)
            .expect("max is attained"))
    }
}

fn nonzero(v: LatticeVector) -> Result<()> {
    if v.is_zero() {
        Err(Error::InvalidVector {
            message: "the zero vector has no direction".into(),
            datum: v.to_string(),
        })
    } else {
        Ok(())
    }
}

impl std::ops::Neg for LatticeVector {
    type Output = LatticeVector;

    fn neg(self) -> LatticeVector {
        LatticeVector::new(-self.dx, -self.dy)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;
    use crate::region::{ellipsoid_intersection, pt};

    fn lv(dx: i64, dy: i64) -> LatticeVector {
        LatticeVector::new(dx, dy)
    }

    fn quad_norm() -> SupportNorm {
        let r = ellipsoid_intersection(&q("2"), &q("4"), &q("4"), &q("2")).unwrap();
        SupportNorm::new(r, Point::origin())
    }

    #[test]
    fn ell_examples() {
        let b = SupportNorm::new(MomentRegion::ball(&q("1")).unwrap(), Point::origin());
        assert_eq!(b.ell(lv(1, 1)).unwrap(), q("1"));
        let n = quad_norm();
        assert_eq!(n.ell(lv(1, 1)).unwrap(), q("8/3"));
        assert_eq!(n.ell(lv(0, 1)).unwrap(), q("2"));
        assert_eq!(n.ell(lv(0, 0)).unwrap_err().code(), "invalid-vector");
    }

    #[test]
    fn loop_length_examples() {
        let n = quad_norm();
        let cw = [lv(1, 1), lv(0, -1), lv(-1, 0)];
        assert_eq!(n.loop_length(&cw).unwrap(), q("8/3"));
        let ccw = [lv(1, 0), lv(0, 1), lv(-1, -1)];
        assert_eq!(n.loop_length(&ccw).unwrap(), q("4"));
        assert_eq!(n.loop_length(&[]).unwrap(), q("0"));
        assert_eq!(
            n.loop_length(&[lv(1, 0)]).unwrap_err().code(),
            "invalid-loop"
        );
    }

    #[test]
    fn loop_length_ignores_origin() {
        let n = quad_norm();
        let cw = [lv(1, 1), lv(0, -1), lv(-1, 0)];
        for o in [pt("1", "1"), pt("-3", "7/2"), pt("4/3", "4/3")] {
            assert_eq!(n.with_origin(o).loop_length(&cw).unwrap(), q("8/3"));
        }
    }

    #[test]
    fn classify_examples() {
        let n = quad_norm();
        let verts = n.region().vertices();
        let i = n.classify_direction(lv(-1, 2)).unwrap();
        assert_eq!(verts[i], pt("0", "2"));
        assert_eq!(n.ell(lv(-1, 2)).unwrap(), q("4"));
        let i = n.classify_direction(lv(1, 1)).unwrap();
        assert_eq!(verts[i], pt("4/3", "4/3"));
        // Dot products 0, 4, 4, 2: tie goes to the lower index.
        let i = n.classify_direction(lv(2, 1)).unwrap();
        assert_eq!(verts[i], pt("2", "0"));
        assert_eq!(
            n.classify_direction(lv(0, 0)).unwrap_err().code(),
            "invalid-vector"
        );
    }

    #[test]
    fn width_is_symmetric() {
        let n = quad_norm();
        assert_eq!(n.width(lv(1, 0)), q("2"));
        assert_eq!(n.width(lv(1, -1)), n.width(lv(-1, 1)));
        assert_eq!(n.width(lv(1, 1)), q("8/3"));
    }

    #[test]
    fn lattice_vector_serde_is_a_pair() {
        let json = serde_json::to_string(&lv(-1, 2)).unwrap();
        assert_eq!(json, "[-1,2]");
        assert_eq!(
            serde_json::from_str::<LatticeVector>("[3,-4]").unwrap(),
            lv(3, -4)
        );
    }
}
