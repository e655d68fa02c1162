//! Closed-form reference values, independent of the lattice search.
//!
//! Ellipsoid and polydisk capacity sequences are standard formulas from the
//! ECH literature. They are used to check the search, never to produce its
//! output.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::CapacitySequence;
use crate::rational::Rational;
use crate::region::Point;

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

/// `N(a, b)`: the values `ma + nb` over `m, n ≥ 0`, sorted with multiplicity, up to index `K`.
pub fn ellipsoid_sequence(a: &Rational, b: &Rational, k_max: usize) -> Result<CapacitySequence> {
    positive("a", a)?;
    positive("b", b)?;
    // Each (m, n) is pushed once: from (m, n) go right always, up only from m = 0.
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((Rational::zero(), 0u64, 0u64)));
    let mut values = Vec::with_capacity(k_max + 1);
    while values.len() <= k_max {
        let Reverse((v, m, n)) = heap.pop().expect("the lattice is infinite");
        heap.push(Reverse((&v + a, m + 1, n)));
        if m == 0 {
            heap.push(Reverse((&v + b, m, n + 1)));
        }
        values.push(v);
    }
    Ok(CapacitySequence::from_values(values))
}

/// `min { am + bn : (m + 1)(n + 1) ≥ k + 1 }` for each `k ≤ K`.
pub fn polydisk_sequence(a: &Rational, b: &Rational, k_max: usize) -> Result<CapacitySequence> {
    positive("a", a)?;
    positive("b", b)?;
    let values = (0..=k_max as u64)
        .map(|k| {
            (0..=k)
                .map(|m| {
                    let n = (k + 1).div_ceil(m + 1) - 1;
                    a * Rational::from_integer(m as i64) + b * Rational::from_integer(n as i64)
                })
                .min()
                .expect("m = 0 is always available")
        })
        .collect();
    Ok(CapacitySequence::from_values(values))
}

/// Parameters of `E(a,b) ∩ E(c,d)` with the two ellipses crossing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntersectionParams {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
}

impl IntersectionParams {
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational) -> Result<Self> {
        for (name, x) in [("a", &a), ("b", &b), ("c", &c), ("d", &d)] {
            positive(name, x)?;
        }
        let datum = format!("a={a}, b={b}, c={c}, d={d}");
        let fail = |message: &str| {
            Err(Error::InvalidParameter {
                message: message.into(),
                datum: datum.clone(),
            })
        };
        if a >= b {
            return fail("need a < b");
        }
        // With a < b and c > d, bc > ad follows.
        if c <= d {
            return fail("need c > d");
        }
        Ok(IntersectionParams { a, b, c, d })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntersectionR {
    pub r: Rational,
    /// Where the two ellipse lines cross.
    pub corner: Point,
    /// `2a ≥ R` and `2d ≥ R`; only then is `R` claimed to equal `c₂`.
    pub hypothesis_met: bool,
}

/// `R = (abc + bcd − acd − abd) / (bc − ad)` and the corner of the intersection.
pub fn intersection_r(p: &IntersectionParams) -> IntersectionR {
    let IntersectionParams { a, b, c, d } = p;
    let den = b * c - a * d;
    let r = (a * b * c + b * c * d - a * c * d - a * b * d) / &den;
    let corner = Point::new(
        (a * b * c - a * c * d) / &den,
        (b * c * d - a * b * d) / &den,
    );
    let two = Rational::from_integer(2);
    let hypothesis_met = &two * a >= r && &two * d >= r;
    IntersectionR {
        r,
        corner,
        hypothesis_met,
    }
}
