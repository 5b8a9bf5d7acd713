use intersection::{
    algebraic_intersection, curve_intersection, intersection_report, nonsingular_intersections,
    verify_main_inequality,
};
use std::collections::HashMap;
use surface_model::examples::{square_torus, three_square_l};
use surface_model::{build_bouw_moller, BouwMollerParams, TranslationSurface};
use trajectory::{
    decompose, enumerate_saddle_connections, systoles, EnumerationConfig, SaddleConnection, Slope,
};

fn cfg() -> EnumerationConfig {
    EnumerationConfig::default()
}

fn torus_connections(bound: f64) -> (TranslationSurface, HashMap<(i64, i64), SaddleConnection>) {
    let t = square_torus();
    let scs = enumerate_saddle_connections(&t, bound, &cfg()).unwrap();
    let map = scs
        .into_iter()
        .map(|sc| {
            (
                (sc.holonomy.x.round() as i64, sc.holonomy.y.round() as i64),
                sc,
            )
        })
        .collect();
    (t, map)
}

#[test]
fn torus_unit_loops_cross_once_at_the_cone_point() {
    let (t, map) = torus_connections(1.1);
    let a = &map[&(1, 0)];
    let b = &map[&(0, 1)];
    let rep = intersection_report(&t, a, b).unwrap();
    assert_eq!(rep.nonsingular, 0);
    assert_eq!(rep.singular, 1);
    assert_eq!(rep.singular_signed, 1);
    assert_eq!(rep.algebraic, 1);
    assert_eq!(rep.geometric, 1);
    let back = intersection_report(&t, b, a).unwrap();
    assert_eq!(back.algebraic, -1);
}

#[test]
fn torus_intersection_matches_determinant() {
    let (t, map) = torus_connections(3.7);
    let keys: Vec<(i64, i64)> = map.keys().copied().collect();
    for &(p, q) in &keys {
        for &(r, s) in &keys {
            let a = &map[&(p, q)];
            let b = &map[&(r, s)];
            let det = p * s - q * r;
            let alg = algebraic_intersection(&t, a, b).unwrap();
            assert_eq!(
                alg, det,
                "Int(({p},{q}),({r},{s})) = {alg}, expected {det}"
            );
            // on the torus every crossing of two loops has the same
            // sign, so the total count is |det| as well
            let rep = intersection_report(&t, a, b).unwrap();
            if !((p, q) == (r, s) || (p, q) == (-r, -s)) {
                assert_eq!(rep.geometric as i64, det.abs());
            }
        }
    }
}

#[test]
fn self_and_reverse_intersections_vanish() {
    let s = build_bouw_moller(BouwMollerParams::new(3, 4).unwrap()).unwrap();
    let scs = enumerate_saddle_connections(&s, 1.8, &cfg()).unwrap();
    for sc in &scs {
        assert_eq!(algebraic_intersection(&s, sc, sc).unwrap(), 0);
        let rev = scs
            .iter()
            .find(|o| trajectory::is_reverse(&s, sc, o))
            .expect("reverse connection enumerated");
        assert_eq!(intersection_report(&s, sc, rev).unwrap().geometric, 0);
    }
}

#[test]
fn intersection_is_antisymmetric() {
    let s = build_bouw_moller(BouwMollerParams::new(4, 3).unwrap()).unwrap();
    let scs = enumerate_saddle_connections(&s, 1.6, &cfg()).unwrap();
    for a in &scs {
        for b in &scs {
            let ab = intersection_report(&s, a, b).unwrap();
            let ba = intersection_report(&s, b, a).unwrap();
            assert_eq!(ab.algebraic, -ba.algebraic);
            assert_eq!(ab.geometric, ba.geometric);
        }
    }
}

#[test]
fn horizontal_loops_are_pairwise_disjoint() {
    for (m, n) in [(3, 4), (4, 3), (5, 4)] {
        let s = build_bouw_moller(BouwMollerParams::new(m, n).unwrap()).unwrap();
        let horiz: Vec<SaddleConnection> = enumerate_saddle_connections(&s, 4.0, &cfg())
            .unwrap()
            .into_iter()
            .filter(|sc| sc.slope() == Slope::Infinite)
            .collect();
        assert!(horiz.len() >= 2, "no horizontal connections on ({m},{n})");
        for a in &horiz {
            for b in &horiz {
                let rep = intersection_report(&s, a, b).unwrap();
                assert_eq!(rep.geometric, 0, "horizontal loops cross on ({m},{n})");
            }
        }
    }
}

#[test]
fn parallel_side_loops_with_shared_germ_do_not_cross() {
    // the tie-breaking rule must not create crossings between disjoint
    // parallel loops through the same cone point
    let l = three_square_l();
    let sides: Vec<SaddleConnection> = enumerate_saddle_connections(&l, 1.1, &cfg())
        .unwrap()
        .into_iter()
        .filter(|sc| sc.is_side)
        .collect();
    assert_eq!(sides.len(), 12);
    for a in &sides {
        for b in &sides {
            if a.holonomy.cross(b.holonomy).abs() < 1e-12 {
                let rep = intersection_report(&l, a, b).unwrap();
                assert_eq!(rep.geometric, 0);
            }
        }
    }
}

#[test]
fn tie_rule_is_stable_under_small_rotation() {
    // crossing counts with germ ties must agree with the counts after a
    // small rotation of one surface copy, where no ties occur
    let (t, map) = torus_connections(2.3);
    let keys: Vec<(i64, i64)> = map.keys().copied().collect();
    for &(p, q) in &keys {
        for &(r, s) in &keys {
            if (p, q) == (r, s) || (p, q) == (-r, -s) {
                continue;
            }
            let alg = algebraic_intersection(&t, &map[&(p, q)], &map[&(r, s)]).unwrap();
            assert_eq!(alg, p * s - q * r);
        }
    }
}

#[test]
fn crossing_count_bounded_by_decomposition_product() {
    for (m, n) in [(3, 4), (4, 3), (5, 4)] {
        let s = build_bouw_moller(BouwMollerParams::new(m, n).unwrap()).unwrap();
        let scs = enumerate_saddle_connections(&s, 2.2, &cfg()).unwrap();
        for a in &scs {
            let da = decompose(&s, a);
            for b in &scs {
                let db = decompose(&s, b);
                let pts = nonsingular_intersections(&s, a, b);
                let pts = match pts {
                    Ok(p) => p,
                    Err(intersection::IntersectionError::TangentialOverlap) => continue,
                    Err(e) => panic!("{e}"),
                };
                let bound = (da.p + da.q) * (db.p + db.q);
                assert!(
                    pts.len() <= bound,
                    "|a cap b| = {} > {} on ({m},{n})",
                    pts.len(),
                    bound
                );
                if pts.len() == bound && bound > 0 {
                    assert!(da.is_odd && db.is_odd, "equality off the odd case");
                }
            }
        }
    }
}

#[test]
fn crossing_diagonals_have_long_product() {
    for (m, n) in [(3, 4), (5, 4), (4, 5)] {
        let s = build_bouw_moller(BouwMollerParams::new(m, n).unwrap()).unwrap();
        let l0 = s.min_side_length();
        let diags: Vec<SaddleConnection> = enumerate_saddle_connections(&s, 3.0, &cfg())
            .unwrap()
            .into_iter()
            .filter(|sc| sc.is_diagonal())
            .collect();
        let mut crossing_pairs = 0;
        for a in &diags {
            for b in &diags {
                if a.segments[0].polygon != b.segments[0].polygon {
                    continue;
                }
                let pts = match nonsingular_intersections(&s, a, b) {
                    Ok(p) => p,
                    Err(_) => continue,
                };
                if pts.is_empty() {
                    continue;
                }
                crossing_pairs += 1;
                let product = a.length() * b.length();
                assert!(product >= 2.0 * l0 * l0 - 1e-9);
                if product < 2.0 * l0 * l0 + 1e-9 {
                    let r = 2.0_f64.sqrt() * l0;
                    assert!((a.length() - r).abs() < 1e-9 && (b.length() - r).abs() < 1e-9);
                }
            }
        }
        assert!(crossing_pairs > 0, "no crossing diagonals on ({m},{n})");
    }
}

#[test]
fn composite_curve_bound() {
    // curves built of k and l saddle connections have at most k*l
    // singular crossings, and a pair of single connections at most one
    let s = build_bouw_moller(BouwMollerParams::new(3, 4).unwrap()).unwrap();
    let scs = enumerate_saddle_connections(&s, 1.8, &cfg()).unwrap();
    let closed: Vec<&SaddleConnection> = scs.iter().filter(|sc| sc.is_closed()).collect();
    assert!(closed.len() >= 6);
    let mut tested = 0;
    for i in 0..closed.len().min(8) {
        for j in 0..closed.len().min(8) {
            let g = vec![closed[i].clone(), closed[j].clone()];
            for x in 0..closed.len().min(8) {
                for y in 0..closed.len().min(8) {
                    let d = vec![closed[x].clone(), closed[y].clone()];
                    let rep = match curve_intersection(&s, &g, &d) {
                        Ok(r) => r,
                        Err(intersection::IntersectionError::TangentialOverlap) => continue,
                        Err(e) => panic!("{e}"),
                    };
                    let mut seg_sum = 0;
                    for a in &g {
                        for b in &d {
                            match nonsingular_intersections(&s, a, b) {
                                Ok(p) => seg_sum += p.len(),
                                Err(_) => continue,
                            }
                        }
                    }
                    // each of the 2x2 junction pairs contributes at
                    // most one singular crossing
                    assert!(rep.singular <= 4);
                    assert!(rep.geometric <= seg_sum + 4);
                    tested += 1;
                }
            }
        }
    }
    assert!(tested > 100);
}

#[test]
fn systole_pairs_realize_the_bound() {
    // coprime members: the systoles are closed side loops meeting at
    // the single cone point
    for (m, n) in [(3u32, 4u32), (4, 3), (5, 4)] {
        let p = BouwMollerParams::new(m, n).unwrap();
        let s = build_bouw_moller(p).unwrap();
        let sys = systoles(&s, &cfg()).unwrap();
        let rep = verify_main_inequality(&s, &sys).unwrap();
        assert!(rep.holds(), "bound violated on ({m},{n})");
        assert!(
            (rep.max_ratio - rep.bound).abs() < 1e-9 * rep.bound,
            "systole pair should achieve 1/l0^2 on ({m},{n}): max {} vs bound {}",
            rep.max_ratio,
            rep.bound
        );
        assert!(!rep.achievers.is_empty());
    }
}

#[test]
fn main_inequality_over_corpus() {
    for (m, n) in [(3, 4), (4, 3), (5, 4), (2, 7)] {
        let s = build_bouw_moller(BouwMollerParams::new(m, n).unwrap()).unwrap();
        let scs = enumerate_saddle_connections(&s, 2.2, &cfg()).unwrap();
        let rep = verify_main_inequality(&s, &scs).unwrap();
        assert!(rep.holds(), "main inequality violated on ({m},{n})");
    }
}
