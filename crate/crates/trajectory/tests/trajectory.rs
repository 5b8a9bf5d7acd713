use geom_core::Vec2;
use proptest::prelude::*;
use std::collections::HashSet;
use surface_model::examples::{square_torus, three_square_l};
use surface_model::{build_bouw_moller, BouwMollerParams, Corner};
use trajectory::{
    adjacent_corner_signs, check_length_bounds, decompose, enumerate_saddle_connections, systoles,
    trace_saddle_connection, EnumerationConfig, SegmentKind,
};

fn cfg() -> EnumerationConfig {
    EnumerationConfig::default()
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Saddle connections on the square torus are exactly the primitive
/// lattice vectors.
fn primitive_lattice_count(bound: f64) -> usize {
    let r = bound.floor() as i64;
    let mut count = 0;
    for p in -r..=r {
        for q in -r..=r {
            if (p, q) == (0, 0) {
                continue;
            }
            if ((p * p + q * q) as f64) <= bound * bound && gcd(p, q) == 1 {
                count += 1;
            }
        }
    }
    count
}

#[test]
fn torus_matches_lattice_oracle() {
    let t = square_torus();
    for bound in [1.0, 2.3, 5.0, 10.0] {
        let scs = enumerate_saddle_connections(&t, bound, &cfg()).unwrap();
        assert_eq!(
            scs.len(),
            primitive_lattice_count(bound),
            "count mismatch at bound {bound}"
        );
        let keys: HashSet<(i64, i64)> = scs
            .iter()
            .map(|sc| {
                (
                    sc.holonomy.x.round() as i64,
                    sc.holonomy.y.round() as i64,
                )
            })
            .collect();
        assert_eq!(keys.len(), scs.len(), "duplicate holonomy at bound {bound}");
        for &(p, q) in &keys {
            assert_eq!(gcd(p, q), 1, "non-primitive vector ({p},{q})");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn torus_oracle_random_bound(bound in 0.5f64..6.0) {
        let t = square_torus();
        let scs = enumerate_saddle_connections(&t, bound, &cfg()).unwrap();
        prop_assert_eq!(scs.len(), primitive_lattice_count(bound));
    }

    #[test]
    fn enumeration_is_monotone_in_bound(b1 in 0.8f64..1.6, extra in 0.1f64..1.0) {
        let s = build_bouw_moller(BouwMollerParams::new(4, 3).unwrap()).unwrap();
        let key = |sc: &trajectory::SaddleConnection| {
            (sc.start.polygon, sc.start.vertex,
             (sc.holonomy.x / 1e-9).round() as i64,
             (sc.holonomy.y / 1e-9).round() as i64)
        };
        let small: HashSet<_> = enumerate_saddle_connections(&s, b1, &cfg())
            .unwrap().iter().map(key).collect();
        let large: HashSet<_> = enumerate_saddle_connections(&s, b1 + extra, &cfg())
            .unwrap().iter().map(key).collect();
        prop_assert!(small.is_subset(&large));
    }
}

#[test]
fn retrace_reproduces_connections() {
    let s = build_bouw_moller(BouwMollerParams::new(5, 4).unwrap()).unwrap();
    let scs = enumerate_saddle_connections(&s, 2.0, &cfg()).unwrap();
    assert!(!scs.is_empty());
    for sc in &scs {
        // segment vectors sum to the holonomy
        let total: Vec2 = sc
            .segments
            .iter()
            .fold(Vec2::new(0.0, 0.0), |acc, seg| acc + seg.vector());
        assert!((total - sc.holonomy).norm() < 1e-7);
        let sum: f64 = sc.segments.iter().map(|seg| seg.length()).sum();
        assert!((sum - sc.length()).abs() < 1e-7);
        // independent retrace gives the same endpoint
        let re = trace_saddle_connection(&s, sc.start, sc.holonomy).unwrap();
        assert_eq!(re.end, sc.end);
        assert_eq!(re.segments.len(), sc.segments.len());
    }
}

#[test]
fn shortest_connections_are_the_short_sides() {
    let p = BouwMollerParams::new(3, 4).unwrap();
    let s = build_bouw_moller(p).unwrap();
    let scs = enumerate_saddle_connections(&s, p.l0() * 1.0001, &cfg()).unwrap();
    assert!(!scs.is_empty());
    for sc in &scs {
        assert!((sc.length() - p.l0()).abs() < 1e-9);
        assert!(sc.is_side);
    }
}

#[test]
fn decomposition_invariants_over_corpus() {
    for (m, n) in [(3, 4), (4, 3), (5, 4)] {
        let s = build_bouw_moller(BouwMollerParams::new(m, n).unwrap()).unwrap();
        let scs = enumerate_saddle_connections(&s, 2.0, &cfg()).unwrap();
        assert!(scs.len() > 10);
        for sc in &scs {
            let dec = decompose(&s, sc);
            let k = dec.k();
            assert_eq!(k, sc.segments.len());
            // first and last segments start/end at a vertex
            assert_eq!(dec.kinds[0], SegmentKind::NonAdjacent);
            assert_eq!(dec.kinds[k - 1], SegmentKind::NonAdjacent);
            assert!(dec.p >= 1);
            // ceil(k/2) <= p + q, with equality exactly in the odd case
            let half = k.div_ceil(2);
            assert!(half <= dec.p + dec.q);
            assert_eq!(half == dec.p + dec.q, dec.is_odd, "odd criterion failed");
            if dec.is_side || dec.is_diagonal {
                assert_eq!(k, 1);
            }
        }
    }
}

#[test]
fn length_bounds_hold_on_obtuse_surfaces() {
    // (5,4) and (4,5) satisfy both polygon hypotheses
    for (m, n) in [(5, 4), (4, 5)] {
        let p = BouwMollerParams::new(m, n).unwrap();
        let s = build_bouw_moller(p).unwrap();
        let l0 = s.min_side_length();
        let scs = enumerate_saddle_connections(&s, 2.5, &cfg()).unwrap();
        for sc in &scs {
            let dec = decompose(&s, sc);
            let rep = check_length_bounds(&s, Some(p), sc, &dec).unwrap();
            assert!(rep.base_ok, "base bound failed for {:?}", sc.holonomy);
            assert_eq!(rep.odd_ok, rep.odd_bound.map(|_| true));

            // segment-level bounds
            let lens: Vec<f64> = sc.segments.iter().map(|seg| seg.length()).collect();
            for (i, kind) in dec.kinds.iter().enumerate() {
                if *kind == SegmentKind::NonAdjacent {
                    assert!(lens[i] >= l0 - 1e-9);
                } else if i + 1 < dec.kinds.len() && dec.kinds[i + 1] == SegmentKind::Adjacent {
                    assert!(lens[i] + lens[i + 1] >= l0 - 1e-9);
                }
            }
            for w in dec.kinds.windows(3).zip(lens.windows(3)) {
                let (kinds, l) = w;
                let sum = l[0] + l[1] + l[2];
                if kinds.iter().all(|&k| k == SegmentKind::Adjacent) {
                    assert!(sum >= 2.0_f64.sqrt() * l0 - 1e-9);
                }
                if kinds[0] == SegmentKind::NonAdjacent
                    && kinds[1] == SegmentKind::Adjacent
                    && kinds[2] == SegmentKind::NonAdjacent
                {
                    assert!(sum >= (1.0 + 2.0_f64.sqrt()) * l0 - 1e-9);
                }
            }
        }
    }
}

#[test]
fn length_bound_holds_on_triangle_family() {
    let p = BouwMollerParams::new(4, 3).unwrap();
    let s = build_bouw_moller(p).unwrap();
    let scs = enumerate_saddle_connections(&s, 2.0, &cfg()).unwrap();
    for sc in &scs {
        let dec = decompose(&s, sc);
        let rep = check_length_bounds(&s, Some(p), sc, &dec).unwrap();
        assert!(rep.base_ok);
    }
    // without the family parameters the hypotheses are not satisfied
    let sc = &scs[0];
    let dec = decompose(&s, sc);
    assert!(check_length_bounds(&s, None, sc, &dec).is_err());
}

#[test]
fn corner_cut_sides_alternate_within_runs() {
    let mut seen_run = false;
    let mut corpus = vec![(square_torus(), 6.0), (three_square_l(), 6.0)];
    for (m, n) in [(5, 4), (4, 3)] {
        let s = build_bouw_moller(BouwMollerParams::new(m, n).unwrap()).unwrap();
        corpus.push((s, 3.0));
    }
    for (s, bound) in corpus {
        let scs = enumerate_saddle_connections(&s, bound, &cfg()).unwrap();
        for sc in &scs {
            let signs = adjacent_corner_signs(&s, sc);
            for pair in signs.windows(2) {
                if let (Some(a), Some(b)) = (pair[0], pair[1]) {
                    seen_run = true;
                    assert_ne!(a, b, "consecutive corner cuts on the same side");
                }
            }
        }
    }
    assert!(seen_run, "corpus contained no adjacent runs of length 2");
}

/// Brute-force maximum number of disjoint consecutive pairs of adjacent
/// segments, for cross-checking the run-length formula.
fn max_pairing(kinds: &[SegmentKind]) -> usize {
    fn go(kinds: &[SegmentKind], i: usize) -> usize {
        if i + 1 >= kinds.len() {
            return 0;
        }
        let skip = go(kinds, i + 1);
        if kinds[i] == SegmentKind::Adjacent && kinds[i + 1] == SegmentKind::Adjacent {
            skip.max(1 + go(kinds, i + 2))
        } else {
            skip
        }
    }
    go(kinds, 0)
}

#[test]
fn pair_count_matches_exhaustive_pairing() {
    use trajectory::SegmentKind::{Adjacent, NonAdjacent};
    for len in 1usize..=8 {
        for mask in 0..(1u32 << len) {
            let kinds: Vec<SegmentKind> = (0..len)
                .map(|i| if mask >> i & 1 == 1 { Adjacent } else { NonAdjacent })
                .collect();
            let mut q = 0;
            let mut run = 0;
            for &k in &kinds {
                if k == Adjacent {
                    run += 1;
                } else {
                    q += run / 2;
                    run = 0;
                }
            }
            q += run / 2;
            assert_eq!(q, max_pairing(&kinds), "mismatch for {kinds:?}");
        }
    }
}

#[test]
fn torus_systoles_are_the_four_unit_vectors() {
    let t = square_torus();
    let sys = systoles(&t, &cfg()).unwrap();
    assert_eq!(sys.len(), 4);
    for sc in &sys {
        assert!((sc.length() - 1.0).abs() < 1e-12);
        assert!(sc.is_closed());
    }
}

#[test]
fn l_surface_systoles_are_the_sides() {
    let l = three_square_l();
    let sys = systoles(&l, &cfg()).unwrap();
    // six side arcs, two orientations each
    assert_eq!(sys.len(), 12);
    for sc in &sys {
        assert!((sc.length() - 1.0).abs() < 1e-12);
        assert!(sc.is_side);
    }
}

#[test]
fn start_corner_determines_germ() {
    // every connection leaves through the wedge of its start corner
    let s = build_bouw_moller(BouwMollerParams::new(4, 3).unwrap()).unwrap();
    for sc in enumerate_saddle_connections(&s, 1.5, &cfg()).unwrap() {
        let (lo, hi) = s.corner_wedge(Corner {
            polygon: sc.start.polygon,
            vertex: sc.start.vertex,
        });
        let u = sc.holonomy.normalized();
        assert!(lo.cross(u) > -1e-9 && u.cross(hi) > -1e-9);
    }
}
