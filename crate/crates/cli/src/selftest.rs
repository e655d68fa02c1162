//! Built-in reference checks, runnable from an installed binary.

use clap::ValueEnum;
use serde::Serialize;
use toric_ech::embed::{min_ball_bounds, nonsharpness_report};
use toric_ech::oracle::{ellipsoid_sequence, polydisk_sequence};
use toric_ech::region::{Axis, StarPolygon};
use toric_ech::{
    brute_force_capacities, capacities_with, ellipsoid_intersection, CapacitySequence,
    LatticeVector, MomentRegion, Point, Polygon, Rational, SearchOptions, SupportNorm,
};

/// Deliberate faults used to confirm that the checks can fail.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Fixture {
    /// Measure the reference triangle counterclockwise.
    ReversedOrientation,
    /// Add one to every enclosed-point count in the search.
    PickPlusOne,
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
    pub passed: bool,
}

impl Report {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let tag = if c.passed { "PASS" } else { "FAIL" };
            out.push_str(&format!("{tag}  {}: {}\n", c.name, c.detail));
        }
        let failed = self.checks.iter().filter(|c| !c.passed).count();
        out.push_str(&format!("{} checks, {failed} failed\n", self.checks.len()));
        out
    }
}

type Outcome = Result<String, String>;
type CheckFn = fn(&Ctx) -> Outcome;

fn q(s: &str) -> Rational {
    s.parse().expect("literal rational")
}

fn shown(values: &[Rational]) -> String {
    values
        .iter()
        .map(Rational::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

struct Ctx {
    fixture: Option<Fixture>,
    opts: SearchOptions,
}

impl Ctx {
    fn caps(&self, r: &MomentRegion, k: usize) -> Result<CapacitySequence, String> {
        capacities_with(r, k, &self.opts).map_err(|e| e.to_string())
    }
}

fn quad() -> MomentRegion {
    ellipsoid_intersection(&q("2"), &q("4"), &q("4"), &q("2")).expect("valid parameters")
}

fn lv(dx: i64, dy: i64) -> LatticeVector {
    LatticeVector::new(dx, dy)
}

fn c2_intersection(ctx: &Ctx) -> Outcome {
    let seq = ctx.caps(&quad(), 2)?;
    let w = &seq.witnesses.as_ref().expect("witnesses")[2];
    let triangle = [lv(1, 1), lv(0, -1), lv(-1, 0)];
    if seq.values[2] != q("8/3") {
        return Err(format!("c_2 = {}, expected 8/3", seq.values[2]));
    }
    if w.edges() != triangle {
        return Err(format!("witness {w:?} is not the unit triangle"));
    }
    Ok("c_2 = 8/3 via (0,0)→(1,1)→(1,0)→(0,0)".into())
}

fn c2_balls(ctx: &Ctx) -> Outcome {
    for r in ["1", "5/2"] {
        let c2 = ctx
            .caps(&MomentRegion::ball(&q(r)).expect("positive"), 2)?
            .values[2]
            .clone();
        if c2 != q(r) {
            return Err(format!("c_2(B({r})) = {c2}"));
        }
    }
    Ok("c_2(B(r)) = r for r = 1, 5/2".into())
}

fn orientation(ctx: &Ctx) -> Outcome {
    let norm = SupportNorm::new(quad(), Point::origin());
    let mut edges = vec![lv(1, 1), lv(0, -1), lv(-1, 0)];
    if ctx.fixture == Some(Fixture::ReversedOrientation) {
        edges = edges.iter().rev().map(|&e| -e).collect();
    }
    let len = norm.loop_length(&edges).map_err(|e| e.to_string())?;
    if len == q("8/3") {
        Ok("clockwise triangle has length 8/3".into())
    } else {
        Err(format!("triangle length {len}, expected 8/3"))
    }
}

fn oracle_equivalence(ctx: &Ctx) -> Outcome {
    for (a, b) in [("1", "1"), ("1", "2"), ("2", "3")] {
        let engine = ctx.caps(&MomentRegion::ellipsoid(&q(a), &q(b)).expect("positive"), 8)?;
        let closed = ellipsoid_sequence(&q(a), &q(b), 8).expect("positive");
        if engine.values != closed.values {
            return Err(format!(
                "E({a},{b}): {} vs {}",
                shown(&engine.values),
                shown(&closed.values)
            ));
        }
    }
    for (a, b) in [("1", "1"), ("1", "2")] {
        let engine = ctx.caps(&MomentRegion::polydisk(&q(a), &q(b)).expect("positive"), 8)?;
        let closed = polydisk_sequence(&q(a), &q(b), 8).expect("positive");
        if engine.values != closed.values {
            return Err(format!(
                "P({a},{b}): {} vs {}",
                shown(&engine.values),
                shown(&closed.values)
            ));
        }
    }
    let engine = ctx.caps(&quad(), 6)?;
    let brute = brute_force_capacities(&quad(), 6, 5);
    if engine.values != brute.values {
        return Err(format!(
            "quad: {} vs brute force {}",
            shown(&engine.values),
            shown(&brute.values)
        ));
    }
    Ok("ellipsoids, polydisks and brute force agree for k ≤ 8".into())
}

fn translation(ctx: &Ctx) -> Outcome {
    let regions = [MomentRegion::ball(&q("1")).expect("positive"), quad()];
    for r in &regions {
        let base = ctx.caps(r, 8)?.values;
        for (x, y) in [(1, 1), (3, 7)] {
            let moved = ctx.caps(&r.translate(&Point::from_ints(x, y)), 8)?.values;
            if moved != base {
                return Err(format!("translate by ({x},{y}) changed {}", shown(&base)));
            }
        }
    }
    Ok("unchanged under (1,1) and (3,7) translations".into())
}

fn conformality(ctx: &Ctx) -> Outcome {
    let regions = [MomentRegion::ball(&q("1")).expect("positive"), quad()];
    for r in &regions {
        let base = ctx.caps(r, 6)?;
        for lambda in [q("2"), q("1/3")] {
            let scaled = r
                .scale_from(&lambda, &Point::origin())
                .map_err(|e| e.to_string())?;
            if ctx.caps(&scaled, 6)?.values != base.scaled(&lambda).values {
                return Err(format!("scaling by {lambda} is not linear"));
            }
        }
    }
    Ok("c_k(λA) = λ c_k(A) for λ = 2, 1/3".into())
}

fn ball_bounds(ctx: &Ctx) -> Outcome {
    for (a, r) in [("2", "8/3"), ("3", "4")] {
        let (a2, b2) = (q(a), q(a) * q("2"));
        let region = ellipsoid_intersection(&a2, &b2, &b2, &a2).map_err(|e| e.to_string())?;
        let b = min_ball_bounds(&region, 6, &ctx.opts).map_err(|e| e.to_string())?;
        if !(b.lower == q(r) && b.upper == q(r) && b.sharp && b.lower_witness_k == 2) {
            return Err(format!(
                "quad({a}): lower {} at k = {}, upper {}",
                b.lower, b.lower_witness_k, b.upper
            ));
        }
    }
    Ok("ball bounds sharp at 8/3 and 4, attained at k = 2".into())
}

fn nonsharpness(ctx: &Ctx) -> Outcome {
    let r = nonsharpness_report(&ctx.opts).map_err(|e| e.to_string())?;
    if !r.translation_invariant {
        return Err("translated sequence differs".into());
    }
    if r.obstruction != q("2") || r.inclusion_upper != q("3") || r.cited_threshold.value != q("3") {
        return Err(format!(
            "obstruction {}, upper {}, cited {}",
            r.obstruction, r.inclusion_upper, r.cited_threshold.value
        ));
    }
    Ok("P(1,2): capacity obstruction 2, inclusion bound 3, cited threshold 3".into())
}

fn criterion(_: &Ctx) -> Outcome {
    let poly = |pts: &[(&str, &str)]| {
        StarPolygon::new(
            pts.iter()
                .map(|(x, y)| Point::parse(x, y).expect("literal"))
                .collect(),
        )
        .expect("simple polygon")
    };
    let rect = poly(&[("1/2", "0"), ("3/2", "0"), ("3/2", "1"), ("1/2", "1")]);
    let slanted = poly(&[("1/2", "0"), ("3/2", "0"), ("5/2", "1"), ("3/2", "1")]);
    let a = rect.criterion_check().map_err(|e| e.to_string())?;
    let c = slanted.criterion_check().map_err(|e| e.to_string())?;
    if !a.passed() {
        return Err("rectangle fails".into());
    }
    let v = c
        .verdict(Axis::Two)
        .ok_or("parallelogram does not touch ρ2 = 0")?;
    if v.passed || v.witness != Some(q("2")) {
        return Err(format!("parallelogram verdict {v:?}"));
    }
    Ok("rectangle passes; parallelogram fails at ρ1 = 2".into())
}

fn determinism(ctx: &Ctx) -> Outcome {
    let parallel = SearchOptions {
        parallel: true,
        ..ctx.opts.clone()
    };
    for r in [
        quad(),
        MomentRegion::polydisk(&q("1"), &q("2")).expect("positive"),
    ] {
        let a = ctx.caps(&r, 10)?;
        let b = capacities_with(&r, 10, &parallel).map_err(|e| e.to_string())?;
        if a != b {
            return Err("parallel search differs from serial".into());
        }
    }
    Ok("parallel and serial searches agree, witnesses included".into())
}

pub fn run(fixture: Option<Fixture>) -> Report {
    let opts = SearchOptions {
        count_offset: i64::from(fixture == Some(Fixture::PickPlusOne)),
        ..SearchOptions::default()
    };
    let ctx = Ctx { fixture, opts };
    let suite: [(&str, CheckFn); 10] = [
        ("c2-intersection", c2_intersection),
        ("c2-ball", c2_balls),
        ("orientation", orientation),
        ("oracle-equivalence", oracle_equivalence),
        ("translation", translation),
        ("conformality", conformality),
        ("ball-bounds", ball_bounds),
        ("nonsharpness", nonsharpness),
        ("criterion", criterion),
        ("determinism", determinism),
    ];
    let checks: Vec<Check> = suite
        .iter()
        .map(|(name, f)| {
            let (passed, detail) = match f(&ctx) {
                Ok(d) => (true, d),
                Err(d) => (false, d),
            };
            Check {
                name: name.to_string(),
                passed,
                detail,
            }
        })
        .collect();
    let passed = checks.iter().all(|c| c.passed);
    Report { checks, passed }
}
