#![allow(dead_code)]

use proptest::prelude::*;
use toric_ech::region::pt;
use toric_ech::{ellipsoid_intersection, MomentRegion, Point, Rational};

pub fn q(s: &str) -> Rational {
    s.parse().unwrap()
}

pub fn rational(max_numer: i64, max_denom: i64) -> impl Strategy<Value = Rational> {
    (1..=max_numer, 1..=max_denom).prop_map(|(n, d)| Rational::new(n, d).unwrap())
}

pub fn signed_rational(max_numer: i64, max_denom: i64) -> impl Strategy<Value = Rational> {
    (-max_numer..=max_numer, 1..=max_denom).prop_map(|(n, d)| Rational::new(n, d).unwrap())
}

pub fn point(max_numer: i64, max_denom: i64) -> impl Strategy<Value = Point> {
    (
        signed_rational(max_numer, max_denom),
        signed_rational(max_numer, max_denom),
    )
        .prop_map(|(x, y)| Point::new(x, y))
}

/// Convex hull (counterclockwise, no collinear points) by monotone chain.
pub fn hull(mut pts: Vec<Point>) -> Vec<Point> {
    pts.sort();
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let turn = |o: &Point, a: &Point, b: &Point| (a - o).cross(&(b - o));
    let mut lower: Vec<Point> = Vec::new();
    for p in &pts {
        while lower.len() >= 2
            && !turn(&lower[lower.len() - 2], &lower[lower.len() - 1], p).is_positive()
        {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<Point> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2
            && !turn(&upper[upper.len() - 2], &upper[upper.len() - 1], p).is_positive()
        {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Convex regions of several shapes, all in the first quadrant.
pub fn region() -> impl Strategy<Value = MomentRegion> {
    prop_oneof![
        (rational(8, 3), rational(8, 3))
            .prop_map(|(a, b)| MomentRegion::ellipsoid(&a, &b).unwrap()),
        (rational(8, 3), rational(8, 3)).prop_map(|(a, b)| MomentRegion::polydisk(&a, &b).unwrap()),
        (
            rational(6, 2),
            rational(6, 2),
            rational(6, 2),
            rational(6, 2)
        )
            .prop_map(|(a, db, d, dc)| {
                let b = &a + &db;
                let c = &d + &dc;
                ellipsoid_intersection(&a, &b, &c, &d).unwrap()
            }),
        prop::collection::vec((0i64..=12, 0i64..=12, 1i64..=3), 3..8).prop_filter_map(
            "hull has empty interior",
            |raw| {
                let pts = raw
                    .into_iter()
                    .map(|(x, y, d)| {
                        Point::new(Rational::new(x, d).unwrap(), Rational::new(y, d).unwrap())
                    })
                    .collect();
                MomentRegion::new(hull(pts)).ok()
            }
        ),
    ]
}

/// Named regions used by several suites.
pub fn fixtures() -> Vec<(&'static str, MomentRegion)> {
    vec![
        ("B(1)", MomentRegion::ball(&q("1")).unwrap()),
        ("E(1,2)", MomentRegion::ellipsoid(&q("1"), &q("2")).unwrap()),
        ("P(1,2)", MomentRegion::polydisk(&q("1"), &q("2")).unwrap()),
        (
            "quad(2,4,4,2)",
            ellipsoid_intersection(&q("2"), &q("4"), &q("4"), &q("2")).unwrap(),
        ),
        (
            "pentagon",
            MomentRegion::new(vec![
                pt("0", "0"),
                pt("3", "0"),
                pt("3", "1"),
                pt("2", "2"),
                pt("0", "3/2"),
            ])
            .unwrap(),
        ),
    ]
}
