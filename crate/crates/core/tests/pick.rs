use proptest::prelude::*;
use toric_ech::{ConvexLoop, LatticeVector};

/// Integer convex hull, clockwise, collinear points dropped.
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

fn count_directly(vertices: &[(i64, i64)]) -> u64 {
    let xs = vertices.iter().map(|v| v.0);
    let ys = vertices.iter().map(|v| v.1);
    let (x0, x1) = (xs.clone().min().unwrap(), xs.max().unwrap());
    let (y0, y1) = (ys.clone().min().unwrap(), ys.max().unwrap());
    let n = vertices.len();
    let mut count = 0;
    for x in x0..=x1 {
        for y in y0..=y1 {
            let inside = match n {
                1 => true,
                2 => {
                    let (a, b) = (vertices[0], vertices[1]);
                    (b.0 - a.0) * (y - a.1) == (b.1 - a.1) * (x - a.0)
                }
                _ => (0..n).all(|i| {
                    let a = vertices[i];
                    let b = vertices[(i + 1) % n];
                    (b.0 - a.0) * (y - a.1) - (b.1 - a.1) * (x - a.0) <= 0
                }),
            };
            count += inside as u64;
        }
    }
    count
}

fn as_loop(vertices: &[(i64, i64)]) -> ConvexLoop {
    let n = vertices.len();
    let edges = if n == 1 {
        Vec::new()
    } else {
        (0..n)
            .map(|i| {
                let (a, b) = (vertices[i], vertices[(i + 1) % n]);
                LatticeVector::new(b.0 - a.0, b.1 - a.1)
            })
            .collect()
    };
    ConvexLoop::new([vertices[0].0, vertices[0].1], edges).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn pick_matches_direct_count(raw in prop::collection::vec((-8i64..=8, -8i64..=8), 1..9)) {
        let vertices = hull_cw(raw);
        let l = as_loop(&vertices);
        prop_assert_eq!(l.enclosed_count(), count_directly(&vertices));
    }

    #[test]
    fn canonical_form_ignores_starting_vertex(raw in prop::collection::vec((-8i64..=8, -8i64..=8), 3..9), shift in 0usize..8) {
        let mut vertices = hull_cw(raw);
        prop_assume!(vertices.len() >= 3);
        let a = as_loop(&vertices);
        let k = shift % vertices.len();
        vertices.rotate_left(k);
        prop_assert_eq!(as_loop(&vertices), a);
    }

    #[test]
    fn reversed_loops_are_rejected(raw in prop::collection::vec((-8i64..=8, -8i64..=8), 3..9)) {
        let vertices = hull_cw(raw);
        prop_assume!(vertices.len() >= 3);
        let l = as_loop(&vertices);
        let reversed: Vec<LatticeVector> = l.edges().iter().rev().map(|&e| -e).collect();
        prop_assert!(ConvexLoop::new(l.base(), reversed).is_err());
    }
}
