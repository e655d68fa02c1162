mod common;

use common::{fixtures, q};
use toric_ech::oracle::{
    ellipsoid_sequence, intersection_r, polydisk_sequence, IntersectionParams,
};
use toric_ech::{
    brute_force_capacities, capacities, ellipsoid_intersection, MomentRegion, SupportNorm,
};

#[test]
fn ellipsoids_match_closed_form() {
    for (a, b) in [("1", "1"), ("1", "2"), ("2", "3")] {
        let region = MomentRegion::ellipsoid(&q(a), &q(b)).unwrap();
        let engine = capacities(&region, 8).unwrap();
        let closed = ellipsoid_sequence(&q(a), &q(b), 8).unwrap();
        assert_eq!(engine.values, closed.values, "E({a},{b})");
    }
}

#[test]
fn polydisks_match_closed_form() {
    for (a, b) in [("1", "1"), ("1", "2"), ("2", "3"), ("1/2", "5/3")] {
        let region = MomentRegion::polydisk(&q(a), &q(b)).unwrap();
        let engine = capacities(&region, 8).unwrap();
        let closed = polydisk_sequence(&q(a), &q(b), 8).unwrap();
        assert_eq!(engine.values, closed.values, "P({a},{b})");
    }
}

#[test]
fn brute_force_agrees_on_fixtures() {
    for (name, region) in fixtures() {
        let engine = capacities(&region, 6).unwrap();
        let brute = brute_force_capacities(&region, 6, 5);
        assert_eq!(engine.values, brute.values, "{name}");
        let e = engine.witnesses.unwrap();
        let b = brute.witnesses.unwrap();
        for k in 0..=6 {
            assert_eq!(e[k].edges(), b[k].edges(), "{name} witness {k}");
        }
    }
}

#[test]
fn c2_of_intersections_is_r() {
    for (a, b, c, d) in [
        ("2", "4", "4", "2"),
        ("3", "6", "6", "3"),
        ("2", "5", "5", "3/2"),
    ] {
        let p = IntersectionParams::new(q(a), q(b), q(c), q(d)).unwrap();
        let out = intersection_r(&p);
        let region = ellipsoid_intersection(&p.a, &p.b, &p.c, &p.d).unwrap();
        assert_eq!(out.r, region.enclosing_ball_radius());
        if out.hypothesis_met {
            assert_eq!(capacities(&region, 2).unwrap().values[2], out.r);
        }
    }
}

#[test]
fn witnesses_certify_every_value() {
    for (name, region) in fixtures() {
        let seq = capacities(&region, 10).unwrap();
        assert!(seq.is_well_shaped(), "{name}");
        let norm = SupportNorm::centered(region.clone());
        for (k, w) in seq.witnesses.as_ref().unwrap().iter().enumerate() {
            assert_eq!(&w.length(&norm), seq.get(k), "{name} k={k}");
            assert!(w.enclosed_count() as usize > k, "{name} k={k}");
        }
    }
}
