//! Embedding obstructions from area and capacity comparisons.
//!
//! Results are qualified by the index range `K` that was checked: passing
//! every test up to `K` does not imply an embedding exists.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{capacities_with, CapacitySequence, SearchOptions};
use crate::oracle::ellipsoid_sequence;
use crate::rational::Rational;
use crate::region::{MomentRegion, Point, Polygon};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CapacityComparison {
    pub k: usize,
    pub source: Rational,
    pub target: Rational,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Obstructed,
    NotObstructedUpToK,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ObstructionReport {
    pub k_max: usize,
    pub source_area: Rational,
    pub target_area: Rational,
    pub volume_ok: bool,
    pub capacity_ok: bool,
    pub first_violation: Option<usize>,
    pub per_k: Vec<CapacityComparison>,
    pub verdict: Verdict,
}

/// Compares areas and `c₀ … c_K` of `source` and `target`.
pub fn obstruct(
    source: &MomentRegion,
    target: &MomentRegion,
    k_max: usize,
    options: &SearchOptions,
) -> Result<ObstructionReport> {
    let src = capacities_with(source, k_max, options)?;
    let tgt = capacities_with(target, k_max, options)?;
    let source_area = source.area();
    let target_area = target.area();
    let volume_ok = source_area <= target_area;
    let per_k: Vec<CapacityComparison> = src
        .values
        .into_iter()
        .zip(tgt.values)
        .enumerate()
        .map(|(k, (source, target))| CapacityComparison { k, source, target })
        .collect();
    let first_violation = per_k.iter().find(|c| c.source > c.target).map(|c| c.k);
    let capacity_ok = first_violation.is_none();
    let verdict = if volume_ok && capacity_ok {
        Verdict::NotObstructedUpToK
    } else {
        Verdict::Obstructed
    };
    Ok(ObstructionReport {
        k_max,
        source_area,
        target_area,
        volume_ok,
        capacity_ok,
        first_violation,
        per_k,
        verdict,
    })
}

/// Bounds on the smallest ball `B(r)` a region embeds into.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BallBound {
    /// `max c_k(A) / N_k(1,1)` over `1 ≤ k ≤ K`.
    pub lower: Rational,
    /// Smallest `k` attaining `lower`.
    pub lower_witness_k: usize,
    /// Radius of the smallest ball region containing `A`.
    pub upper: Rational,
    pub sharp: bool,
    /// Square of the area bound `√(2·area)`, for comparison.
    pub volume_bound_squared: Rational,
}

pub fn min_ball_bounds(
    region: &MomentRegion,
    k_max: usize,
    options: &SearchOptions,
) -> Result<BallBound> {
    if k_max == 0 {
        return Err(Error::InvalidParameter {
            message: "ball bounds need K ≥ 1".into(),
            datum: "K = 0".into(),
        });
    }
    let caps = capacities_with(region, k_max, options)?;
    Ok(ball_bounds_from(region, &caps))
}

fn ball_bounds_from(region: &MomentRegion, caps: &CapacitySequence) -> BallBound {
    let one = Rational::one();
    let ball = ellipsoid_sequence(&one, &one, caps.max_k()).expect("positive parameters");
    let mut lower = Rational::zero();
    let mut lower_witness_k = 1;
    for k in 1..=caps.max_k() {
        let ratio = caps.get(k) / ball.get(k);
        if ratio > lower {
            lower = ratio;
            lower_witness_k = k;
        }
    }
    let upper = region.enclosing_ball_radius();
    BallBound {
        sharp: lower == upper,
        lower,
        lower_witness_k,
        upper,
        volume_bound_squared: Rational::from_integer(2) * region.area(),
    }
}

/// A value quoted from the literature rather than computed here.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CitedConstant {
    pub value: Rational,
    pub source: String,
    pub statement: String,
}

/// Capacity obstruction for embedding the polydisk `P(1,2)` into balls,
/// set against the known sharp answer.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NonsharpnessReport {
    pub k_max: usize,
    pub capacities: Vec<Rational>,
    /// Same sequence for the region translated by `(1, 1)`.
    pub translated_capacities: Vec<Rational>,
    pub translation_invariant: bool,
    pub obstruction: Rational,
    pub obstruction_k: usize,
    pub inclusion_upper: Rational,
    pub cited_threshold: CitedConstant,
}

pub const NONSHARPNESS_K: usize = 10;

pub fn nonsharpness_report(options: &SearchOptions) -> Result<NonsharpnessReport> {
    let region = MomentRegion::polydisk(&Rational::one(), &Rational::from_integer(2))?;
    let moved = region.translate(&Point::from_ints(1, 1));
    let caps = capacities_with(&region, NONSHARPNESS_K, options)?;
    let moved_caps = capacities_with(&moved, NONSHARPNESS_K, options)?;
    let bound = ball_bounds_from(&region, &caps);
    Ok(NonsharpnessReport {
        k_max: NONSHARPNESS_K,
        translation_invariant: caps.values == moved_caps.values,
        capacities: caps.values,
        translated_capacities: moved_caps.values,
        obstruction: bound.lower,
        obstruction_k: bound.lower_witness_k,
        inclusion_upper: bound.upper,
        cited_threshold: CitedConstant {
            value: Rational::from_integer(3),
            source: "Hind–Lisi".into(),
            statement: "P(1,2) embeds symplectically into B⁴(a) exactly when a ≥ 3".into(),
        },
    })
}
