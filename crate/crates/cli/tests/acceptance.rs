//! End-to-end acceptance run: one PASS/FAIL line per criterion, non-zero exit
//! status if any fails.

use std::io::Write;
use std::process::{Command, Stdio};
use std::time::{Duration, Instant};

use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestRng, TestRunner};
use toric_ech::embed::{min_ball_bounds, nonsharpness_report};
use toric_ech::oracle::{ellipsoid_sequence, polydisk_sequence};
use toric_ech::region::Axis;
use toric_ech::{
    brute_force_capacities, capacities, ellipsoid_intersection, ConvexLoop, LatticeVector,
    MomentRegion, Point, Polygon, Rational, SearchOptions, StarPolygon, SupportNorm,
};
use toric_ech_cli::RegionSpec;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome, u64);

fn q(s: &str) -> Rational {
    s.parse().unwrap()
}

fn shown(values: &[Rational]) -> String {
    values
        .iter()
        .map(Rational::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn quad(a: &str, b: &str, c: &str, d: &str) -> MomentRegion {
    ellipsoid_intersection(&q(a), &q(b), &q(c), &q(d)).unwrap()
}

fn test_regions() -> Vec<(String, MomentRegion)> {
    let mut out = Vec::new();
    for r in ["1", "5/2"] {
        out.push((format!("B({r})"), MomentRegion::ball(&q(r)).unwrap()));
    }
    for (a, b) in [("1", "1"), ("1", "2"), ("2", "3")] {
        out.push((
            format!("E({a},{b})"),
            MomentRegion::ellipsoid(&q(a), &q(b)).unwrap(),
        ));
    }
    for (a, b) in [("1", "1"), ("1", "2")] {
        out.push((
            format!("P({a},{b})"),
            MomentRegion::polydisk(&q(a), &q(b)).unwrap(),
        ));
    }
    out.push(("quad(2,4,4,2)".into(), quad("2", "4", "4", "2")));
    out.push(("quad(3,6,6,3)".into(), quad("3", "6", "6", "3")));
    out
}

fn c1_intersection() -> Outcome {
    let seq = capacities(&quad("2", "4", "4", "2"), 2).map_err(err)?;
    let w = &seq.witnesses.as_ref().ok_or("no witnesses")?[2];
    let triangle = ConvexLoop::new(
        [0, 0],
        vec![
            LatticeVector::new(1, 1),
            LatticeVector::new(0, -1),
            LatticeVector::new(-1, 0),
        ],
    )
    .map_err(err)?;
    if seq.values[2] != q("8/3") {
        return Err(format!("c_2 = {}", seq.values[2]));
    }
    if w != &triangle {
        return Err(format!("witness {w:?}"));
    }
    Ok(format!("c_2 = 8/3, witness {w:?}"))
}

fn c2_balls() -> Outcome {
    let mut slowest = Duration::ZERO;
    for r in ["1", "5/2"] {
        let t = Instant::now();
        let c2 = capacities(&MomentRegion::ball(&q(r)).unwrap(), 2)
            .map_err(err)?
            .values[2]
            .clone();
        slowest = slowest.max(t.elapsed());
        if c2 != q(r) {
            return Err(format!("c_2(B({r})) = {c2}"));
        }
    }
    if slowest > Duration::from_secs(5) {
        return Err(format!("slowest ball took {slowest:?}"));
    }
    Ok("c_2(B(1)) = 1, c_2(B(5/2)) = 5/2".into())
}

fn c3_oracles() -> Outcome {
    for (a, b) in [("1", "1"), ("1", "2"), ("2", "3")] {
        let engine = capacities(&MomentRegion::ellipsoid(&q(a), &q(b)).unwrap(), 8).map_err(err)?;
        let closed = ellipsoid_sequence(&q(a), &q(b), 8).map_err(err)?;
        if engine.values != closed.values {
            return Err(format!(
                "E({a},{b}): {} vs {}",
                shown(&engine.values),
                shown(&closed.values)
            ));
        }
    }
    for (a, b) in [("1", "1"), ("1", "2")] {
        let engine = capacities(&MomentRegion::polydisk(&q(a), &q(b)).unwrap(), 8).map_err(err)?;
        let closed = polydisk_sequence(&q(a), &q(b), 8).map_err(err)?;
        if engine.values != closed.values {
            return Err(format!(
                "P({a},{b}): {} vs {}",
                shown(&engine.values),
                shown(&closed.values)
            ));
        }
    }
    Ok("E(1,1), E(1,2), E(2,3), P(1,1), P(1,2) match for k ≤ 8".into())
}

fn c4_translation() -> Outcome {
    let regions = test_regions();
    for (name, r) in &regions {
        let base = capacities(r, 8).map_err(err)?.values;
        for (x, y) in [(1, 1), (3, 7)] {
            let moved = capacities(&r.translate(&Point::from_ints(x, y)), 8)
                .map_err(err)?
                .values;
            if moved != base {
                return Err(format!(
                    "{name} + ({x},{y}): {} vs {}",
                    shown(&moved),
                    shown(&base)
                ));
            }
        }
    }
    Ok(format!(
        "{} regions unchanged under (1,1) and (3,7)",
        regions.len()
    ))
}

fn c5_conformality() -> Outcome {
    for (name, r) in [
        ("B(1)", MomentRegion::ball(&q("1")).unwrap()),
        ("quad(2,4,4,2)", quad("2", "4", "4", "2")),
    ] {
        let base = capacities(&r, 6).map_err(err)?;
        for lambda in [q("2"), q("1/3")] {
            let scaled = capacities(&r.scale_from(&lambda, &Point::origin()).map_err(err)?, 6)
                .map_err(err)?;
            if scaled.values != base.scaled(&lambda).values {
                return Err(format!(
                    "{name} scaled by {lambda}: {}",
                    shown(&scaled.values)
                ));
            }
        }
    }
    Ok("c_k(λA) = λ c_k(A) for λ = 2, 1/3 on B(1) and quad(2,4,4,2)".into())
}

fn c6_ball_bounds() -> Outcome {
    for (params, expected) in [(["2", "4", "4", "2"], "8/3"), (["3", "6", "6", "3"], "4")] {
        let [a, b, c, d] = params;
        let bound =
            min_ball_bounds(&quad(a, b, c, d), 6, &SearchOptions::default()).map_err(err)?;
        let want = q(expected);
        if !(bound.lower == want
            && bound.upper == want
            && bound.sharp
            && bound.lower_witness_k == 2)
        {
            return Err(format!(
                "quad({a},{b},{c},{d}): lower {} (k = {}), upper {}",
                bound.lower, bound.lower_witness_k, bound.upper
            ));
        }
    }
    Ok("quad(2,4,4,2) → 8/3, quad(3,6,6,3) → 4, sharp at k = 2".into())
}

fn c7_nonsharpness() -> Outcome {
    let r = nonsharpness_report(&SearchOptions::default()).map_err(err)?;
    if r.k_max != 10
        || r.obstruction != q("2")
        || r.inclusion_upper != q("3")
        || r.cited_threshold.value != q("3")
    {
        return Err(format!(
            "k ≤ {}: obstruction {}, upper {}, cited {}",
            r.k_max, r.obstruction, r.inclusion_upper, r.cited_threshold.value
        ));
    }
    Ok("P(1,2): obstruction 2 over k ≤ 10, inclusion bound 3, cited 3".into())
}

fn c8_criterion() -> Outcome {
    let poly = |pts: &[(&str, &str)]| {
        StarPolygon::new(
            pts.iter()
                .map(|(x, y)| Point::parse(x, y).unwrap())
                .collect(),
        )
        .map_err(err)
    };
    let rect = poly(&[("1/2", "0"), ("3/2", "0"), ("3/2", "1"), ("1/2", "1")])?;
    let slanted = poly(&[("1/2", "0"), ("3/2", "0"), ("5/2", "1"), ("3/2", "1")])?;
    if !rect.criterion_check().map_err(err)?.passed() {
        return Err("rectangle fails".into());
    }
    let report = slanted.criterion_check().map_err(err)?;
    let v = report
        .verdict(Axis::Two)
        .ok_or("parallelogram does not touch ρ2 = 0")?;
    if v.passed || v.witness != Some(q("2")) {
        return Err(format!("parallelogram verdict {v:?}"));
    }
    Ok("rectangle passes; parallelogram fails with chord at ρ1 = 2".into())
}

fn runner(cases: u32) -> TestRunner {
    let config = Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    };
    TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha))
}

fn positive(max_numer: i64, max_denom: i64) -> impl Strategy<Value = Rational> {
    (1..=max_numer, 1..=max_denom).prop_map(|(n, d)| Rational::new(n, d).unwrap())
}

fn origin() -> impl Strategy<Value = Point> {
    (-9i64..=9, 1i64..=4, -9i64..=9, 1i64..=4).prop_map(|(x, dx, y, dy)| {
        Point::new(Rational::new(x, dx).unwrap(), Rational::new(y, dy).unwrap())
    })
}

fn vector() -> impl Strategy<Value = LatticeVector> {
    (-9i64..=9, -9i64..=9)
        .prop_filter("nonzero", |&(x, y)| x != 0 || y != 0)
        .prop_map(|(x, y)| LatticeVector::new(x, y))
}

fn region() -> impl Strategy<Value = MomentRegion> {
    prop_oneof![
        (positive(8, 3), positive(8, 3))
            .prop_map(|(a, b)| MomentRegion::ellipsoid(&a, &b).unwrap()),
        (positive(8, 3), positive(8, 3)).prop_map(|(a, b)| MomentRegion::polydisk(&a, &b).unwrap()),
        (
            positive(6, 2),
            positive(6, 2),
            positive(6, 2),
            positive(6, 2)
        )
            .prop_map(|(a, db, d, dc)| {
                ellipsoid_intersection(&a, &(&a + &db), &(&d + &dc), &d).unwrap()
            }),
    ]
}

/// Integer hull, clockwise, collinear points dropped.
fn hull_cw(mut pts: Vec<(i64, i64)>) -> Vec<(i64, i64)> {
    pts.sort();
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let cross = |o: (i64, i64), a: (i64, i64), b: (i64, i64)| {
        (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
    };
    let mut chain: Vec<(i64, i64)> = Vec::new();
    for pass in [pts.clone(), pts.iter().rev().copied().collect()] {
        let start = chain.len();
        for p in pass {
            while chain.len() >= start + 2
                && cross(chain[chain.len() - 2], chain[chain.len() - 1], p) >= 0
            {
                chain.pop();
            }
            chain.push(p);
        }
        chain.pop();
    }
    chain
}

fn count_directly(vs: &[(i64, i64)]) -> u64 {
    let n = vs.len();
    let (x0, x1) = (
        vs.iter().map(|v| v.0).min().unwrap(),
        vs.iter().map(|v| v.0).max().unwrap(),
    );
    let (y0, y1) = (
        vs.iter().map(|v| v.1).min().unwrap(),
        vs.iter().map(|v| v.1).max().unwrap(),
    );
    let mut count = 0;
    for x in x0..=x1 {
        for y in y0..=y1 {
            count += (0..n).all(|i| {
                let (a, b) = (vs[i], vs[(i + 1) % n]);
                (b.0 - a.0) * (y - a.1) - (b.1 - a.1) * (x - a.0) <= 0
                    && (n != 2 || (b.0 - a.0) * (y - a.1) == (b.1 - a.1) * (x - a.0))
            }) as u64;
        }
    }
    count
}

fn property(name: &str, result: Result<(), impl std::fmt::Display>) -> Result<(), String> {
    result.map_err(|e| format!("{name}: {e}"))
}

fn c9_properties() -> Outcome {
    property(
        "origin shift",
        runner(500).run(
            &(region(), vector(), origin(), origin()),
            |(r, v, o1, o2)| {
                let n1 = SupportNorm::new(r.clone(), o1.clone());
                let n2 = SupportNorm::new(r, o2.clone());
                let shift = v.to_point().dot(&(&o1 - &o2));
                prop_assert_eq!(n2.ell(v).unwrap(), n1.ell(v).unwrap() + shift);
                Ok(())
            },
        ),
    )?;
    property(
        "subadditivity",
        runner(500).run(&(region(), vector(), vector(), origin()), |(r, v, w, o)| {
            let sum = LatticeVector::new(v.dx + w.dx, v.dy + w.dy);
            if sum.is_zero() {
                return Err(TestCaseError::reject("zero sum"));
            }
            let n = SupportNorm::new(r, o);
            prop_assert!(n.ell(sum).unwrap() <= n.ell(v).unwrap() + n.ell(w).unwrap());
            Ok(())
        }),
    )?;
    property(
        "homogeneity",
        runner(500).run(&(region(), vector(), 1i64..=7, origin()), |(r, v, m, o)| {
            let n = SupportNorm::new(r, o);
            let mv = LatticeVector::new(m * v.dx, m * v.dy);
            prop_assert_eq!(
                n.ell(mv).unwrap(),
                Rational::from_integer(m) * n.ell(v).unwrap()
            );
            Ok(())
        }),
    )?;
    property(
        "Pick",
        runner(200).run(
            &prop::collection::vec((-8i64..=8, -8i64..=8), 1..9),
            |raw| {
                let vs = hull_cw(raw);
                let edges = if vs.len() == 1 {
                    Vec::new()
                } else {
                    (0..vs.len())
                        .map(|i| {
                            let (a, b) = (vs[i], vs[(i + 1) % vs.len()]);
                            LatticeVector::new(b.0 - a.0, b.1 - a.1)
                        })
                        .collect()
                };
                let l = ConvexLoop::new([vs[0].0, vs[0].1], edges).unwrap();
                prop_assert_eq!(l.enclosed_count(), count_directly(&vs));
                Ok(())
            },
        ),
    )?;
    let five = [
        MomentRegion::ball(&q("1")).unwrap(),
        MomentRegion::ellipsoid(&q("1"), &q("2")).unwrap(),
        MomentRegion::polydisk(&q("1"), &q("2")).unwrap(),
        quad("2", "4", "4", "2"),
        MomentRegion::new(
            [("0", "0"), ("3", "0"), ("3", "1"), ("2", "2"), ("0", "3/2")]
                .iter()
                .map(|(x, y)| Point::parse(x, y).unwrap())
                .collect(),
        )
        .unwrap(),
    ];
    for (i, r) in five.iter().enumerate() {
        let engine = capacities(r, 6).map_err(err)?;
        let brute = brute_force_capacities(r, 6, 5);
        if engine.values != brute.values {
            return Err(format!(
                "brute force region {i}: {} vs {}",
                shown(&engine.values),
                shown(&brute.values)
            ));
        }
    }
    property(
        "sequence shape",
        runner(100).run(&region(), |r| {
            let seq = capacities(&r, 8).unwrap();
            prop_assert!(seq.values[0].is_zero());
            prop_assert!(seq.is_well_shaped());
            Ok(())
        }),
    )?;
    Ok("origin shift ×500, subadditivity ×500, homogeneity ×500, Pick ×200, brute force ×5, shape ×100".into())
}

fn cli(args: &[&str], input: &str) -> Result<Vec<u8>, String> {
    let mut child = Command::new(env!("CARGO_BIN_EXE_toric-ech"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .map_err(err)?;
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .map_err(err)?;
    let out = child.wait_with_output().map_err(err)?;
    if !out.status.success() {
        return Err(String::from_utf8_lossy(&out.stderr).into_owned());
    }
    Ok(out.stdout)
}

fn c10_determinism() -> Outcome {
    let regions = test_regions();
    for (name, r) in &regions {
        let spec = serde_json::to_string(&RegionSpec::from_region(r)).map_err(err)?;
        for format in [
            &["caps", "--witness"][..],
            &["caps", "--witness", "--json"][..],
        ] {
            let serial = cli(format, &spec)?;
            let parallel = cli(&[format, &["--parallel"]].concat(), &spec)?;
            if serial != parallel {
                return Err(format!("{name}: output differs for {format:?}"));
            }
        }
    }
    Ok(format!("{} regions, table and JSON, K = 12", regions.len()))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("c_2 of E(2,4) ∩ E(4,2)", c1_intersection, 5),
        ("c_2 of balls", c2_balls, 10),
        ("closed-form oracles", c3_oracles, 60),
        ("translation invariance", c4_translation, 60),
        ("conformality", c5_conformality, 60),
        ("ball bounds", c6_ball_bounds, 30),
        ("non-sharpness", c7_nonsharpness, 60),
        ("criterion checker", c8_criterion, 60),
        ("property suites", c9_properties, 300),
        ("parallel determinism", c10_determinism, 300),
    ];
    let mut failures = 0;
    for (i, (name, check, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let mut result = check();
        let elapsed = start.elapsed();
        if result.is_ok() && elapsed > Duration::from_secs(*limit) {
            result = Err(format!("took {elapsed:.2?}, limit {limit} s"));
        }
        let (tag, detail) = match &result {
            Ok(d) => ("PASS", d),
            Err(d) => ("FAIL", d),
        };
        failures += result.is_err() as usize;
        println!("{tag} {:>2}  {name} ({elapsed:.2?}): {detail}", i + 1);
    }
    println!("{} criteria, {failures} failed", criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}
