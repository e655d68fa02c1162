use std::fmt;
use std::ops::{Add, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Result;
use crate::rational::Rational;

/// A point of moment space, in action units `(π|z₁|², π|z₂|²)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Point {
    pub rho1: Rational,
    pub rho2: Rational,
}

impl Point {
    pub fn new(rho1: Rational, rho2: Rational) -> Self {
        Point { rho1, rho2 }
    }

    pub fn from_ints(rho1: i64, rho2: i64) -> Self {
        Point::new(rho1.into(), rho2.into())
    }

    /// Parses both coordinates from `"p/q"` strings.
    pub fn parse(rho1: &str, rho2: &str) -> Result<Self> {
        Ok(Point::new(rho1.parse()?, rho2.parse()?))
    }

    pub fn origin() -> Self {
        Point::default()
    }

    pub fn dot(&self, other: &Point) -> Rational {
        &self.rho1 * &other.rho1 + &self.rho2 * &other.rho2
    }

    /// z-component of `self × other`.
    pub fn cross(&self, other: &Point) -> Rational {
        &self.rho1 * &other.rho2 - &self.rho2 * &other.rho1
    }

    pub fn scale(&self, factor: &Rational) -> Point {
        Point::new(&self.rho1 * factor, &self.rho2 * factor)
    }

    /// Coordinate `i` (0 → ρ₁, 1 → ρ₂).
    pub fn coord(&self, i: usize) -> &Rational {
        match i {
            0 => &self.rho1,
            1 => &self.rho2,
            _ => panic!("moment space is two-dimensional"),
        }
    }

    /// Key used for canonical rotations: lowest ρ₂ first, then lowest ρ₁.
    pub(crate) fn bottom_left_key(&self) -> (&Rational, &Rational) {
        (&self.rho2, &self.rho1)
    }
}

impl Add<&Point> for &Point {
    type Output = Point;
    fn add(self, rhs: &Point) -> Point {
        Point::new(&self.rho1 + &rhs.rho1, &self.rho2 + &rhs.rho2)
    }
}

impl Sub<&Point> for &Point {
    type Output = Point;
    fn sub(self, rhs: &Point) -> Point {
        Point::new(&self.rho1 - &rhs.rho1, &self.rho2 - &rhs.rho2)
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.rho1, self.rho2)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.rho1, self.rho2)
    }
}

impl Serialize for Point {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        (&self.rho1, &self.rho2).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Point {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let (rho1, rho2) = <(Rational, Rational)>::deserialize(deserializer)?;
        Ok(Point { rho1, rho2 })
    }
}

/// Twice the signed area of triangle `(a, b, c)`; positive for a left turn.
pub(crate) fn orient(a: &Point, b: &Point, c: &Point) -> Rational {
    (b - a).cross(&(c - a))
}

/// Shorthand for tests and examples: `pt("4/3", "4/3")`. Panics on malformed input.
pub fn pt(rho1: &str, rho2: &str) -> Point {
    Point::parse(rho1, rho2).expect("malformed point literal")
}
