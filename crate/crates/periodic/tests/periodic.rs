use geom_core::Vec2;
use periodic::{
    cylinder_decomposition, dual_separatrix_diagram_of, horizontal_geometry,
    kvol_bounded_on_orbit, separatrix_diagram_of, CylinderDecomposition, RibbonGraph,
};
use surface_model::examples::{square_torus, three_square_l};
use surface_model::{build_bouw_moller, BouwMollerParams, TranslationSurface};
use trajectory::{enumerate_saddle_connections, EnumerationConfig, Slope};

fn diag() -> Slope {
    Slope::of_vector(Vec2::new(1.0, 1.0))
}

/// A handful of saddle-connection directions of the surface; on a
/// lattice surface every one of them is periodic.
fn sample_directions(s: &TranslationSurface, bound: f64, max: usize) -> Vec<Slope> {
    let scs = enumerate_saddle_connections(s, bound, &EnumerationConfig::default()).unwrap();
    let mut out: Vec<Slope> = Vec::new();
    for sc in &scs {
        let d = sc.slope();
        if out.iter().all(|o| (o.key() - d.key()).abs() > 1e-9) {
            out.push(d);
        }
        if out.len() == max {
            break;
        }
    }
    out
}

fn check_bookkeeping(dec: &CylinderDecomposition) {
    assert!(dec.is_periodic);
    let rs = &dec.rotated;
    for sc in &dec.connections {
        assert!(sc.holonomy.y.abs() < 1e-9, "connection not horizontal");
        assert!(sc.holonomy.x > 0.0, "connection not oriented rightward");
    }
    let total: f64 = dec.cylinders.iter().map(|c| c.area()).sum();
    assert!(
        (total - rs.area()).abs() < 1e-9 * rs.area(),
        "cylinders cover {total} of area {}",
        rs.area()
    );
    let mut tops = vec![0usize; dec.connections.len()];
    let mut bottoms = vec![0usize; dec.connections.len()];
    for c in &dec.cylinders {
        let top_len: f64 = c.top.iter().map(|&i| dec.connections[i].length()).sum();
        let bottom_len: f64 = c.bottom.iter().map(|&i| dec.connections[i].length()).sum();
        assert!((top_len - c.width).abs() < 1e-9, "top boundary shorter than width");
        assert!((bottom_len - c.width).abs() < 1e-9);
        for &i in &c.top {
            tops[i] += 1;
        }
        for &i in &c.bottom {
            bottoms[i] += 1;
        }
    }
    assert!(tops.iter().all(|&k| k == 1), "each connection bounds one top");
    assert!(bottoms.iter().all(|&k| k == 1));
}

#[test]
fn torus_horizontal_is_the_unit_cylinder() {
    let t = square_torus();
    let dec = cylinder_decomposition(&t, Slope::Infinite).unwrap();
    check_bookkeeping(&dec);
    assert_eq!(dec.cylinders.len(), 1);
    assert_eq!(dec.connections.len(), 1);
    let c = &dec.cylinders[0];
    assert!((c.width - 1.0).abs() < 1e-12);
    assert!((c.height - 1.0).abs() < 1e-12);
    assert!((c.modulus() - 1.0).abs() < 1e-12);
    assert_eq!(c.top, vec![0]);
    assert_eq!(c.bottom, vec![0]);
}

#[test]
fn torus_diagonal_cylinder() {
    let t = square_torus();
    let dec = cylinder_decomposition(&t, diag()).unwrap();
    check_bookkeeping(&dec);
    assert_eq!(dec.cylinders.len(), 1);
    let c = &dec.cylinders[0];
    let r = 2.0_f64.sqrt();
    assert!((c.width - r).abs() < 1e-9);
    assert!((c.height - 1.0 / r).abs() < 1e-9);
    assert!((c.modulus() - 2.0).abs() < 1e-9);
}

#[test]
fn irrational_direction_is_not_periodic() {
    let t = square_torus();
    let dec = cylinder_decomposition(&t, Slope::of_vector(Vec2::new(1.0, 2f64.sqrt()))).unwrap();
    assert!(!dec.is_periodic);
    assert!(dec.cylinders.is_empty());
}

#[test]
fn l_surface_horizontal_two_cylinders() {
    let l = three_square_l();
    let dec = cylinder_decomposition(&l, Slope::Infinite).unwrap();
    check_bookkeeping(&dec);
    assert_eq!(dec.cylinders.len(), 2);
    let mut widths: Vec<f64> = dec.cylinders.iter().map(|c| c.width).collect();
    widths.sort_by(f64::total_cmp);
    assert!((widths[0] - 1.0).abs() < 1e-12 && (widths[1] - 2.0).abs() < 1e-12);
    assert!(dec.cylinders.iter().all(|c| (c.height - 1.0).abs() < 1e-12));
}

#[test]
fn horizontal_geometry_matches_closed_forms() {
    let count = |xs: &[f64], v: f64| xs.iter().filter(|&&x| (x - v).abs() < 1e-9).count();
    for (m, n) in [(3u32, 4u32), (4, 3), (5, 4), (4, 5), (3, 5), (2, 7)] {
        let p = BouwMollerParams::new(m, n).unwrap();
        let s = build_bouw_moller(p).unwrap();
        let g = horizontal_geometry(p);
        let dec = cylinder_decomposition(&s, Slope::Infinite).unwrap();
        check_bookkeeping(&dec);
        assert_eq!(dec.cylinders.len(), g.cylinder_count, "count on ({m},{n})");
        for c in &dec.cylinders {
            assert!(
                (c.modulus() - g.modulus).abs() < 1e-9,
                "modulus {} vs {} on ({m},{n})",
                c.modulus(),
                g.modulus
            );
        }
        let mut lengths: Vec<f64> = dec.connections.iter().map(|sc| sc.length()).collect();
        lengths.sort_by(f64::total_cmp);
        let heights: Vec<f64> = dec.cylinders.iter().map(|c| c.height).collect();
        assert!((lengths[0] - g.l0).abs() < 1e-9, "shortest length on ({m},{n})");
        assert!(
            (heights.iter().fold(f64::INFINITY, |a, &b| a.min(b)) - g.h0).abs() < 1e-9,
            "smallest height on ({m},{n})"
        );
        assert!(count(&lengths, g.l1) >= 1, "l1 missing on ({m},{n})");
        if m >= 3 {
            assert!(count(&lengths, g.l2) >= 1, "l2 missing on ({m},{n})");
            assert!(count(&heights, g.h2) >= 1, "h2 missing on ({m},{n})");
            assert_eq!(count(&heights, g.h0), 2, "h0 count on ({m},{n})");
            if n == 4 {
                assert_eq!(count(&heights, g.h1), 1, "h1 count on ({m},{n})");
            } else if n >= 5 {
                assert_eq!(count(&heights, g.h1), 2, "h1 count on ({m},{n})");
            }
        }
    }
}

#[test]
fn decompositions_cover_the_surface_in_many_directions() {
    let surfaces = vec![
        square_torus(),
        three_square_l(),
        build_bouw_moller(BouwMollerParams::new(3, 4).unwrap()).unwrap(),
        build_bouw_moller(BouwMollerParams::new(2, 7).unwrap()).unwrap(),
    ];
    for s in &surfaces {
        for d in sample_directions(s, 2.0, 8) {
            let dec = cylinder_decomposition(s, d).unwrap();
            check_bookkeeping(&dec);
        }
    }
}

#[test]
fn ribbon_graph_face_tracing() {
    // a path on three vertices: a tree, hence planar with one face
    let tree = RibbonGraph::new(vec![vec![0], vec![1, 2], vec![3]], 4).unwrap();
    assert_eq!(tree.faces().len(), 1);
    assert!(tree.is_planar());
    assert_eq!(tree.component_genera(), vec![0]);

    // one vertex with two interleaved loops: the smallest genus-one
    // ribbon graph
    let bouquet = RibbonGraph::new(vec![vec![0, 2, 1, 3]], 4).unwrap();
    assert_eq!(bouquet.component_genera(), vec![1]);
    assert!(!bouquet.is_planar());

    // nested loops instead: planar
    let nested = RibbonGraph::new(vec![vec![0, 2, 3, 1]], 4).unwrap();
    assert_eq!(nested.component_genera(), vec![0]);

    // faces partition the darts
    for g in [&tree, &bouquet, &nested] {
        let mut darts: Vec<usize> = g.faces().into_iter().flatten().collect();
        darts.sort_unstable();
        assert_eq!(darts, (0..g.dart_count()).collect::<Vec<_>>());
    }
}

#[test]
fn dual_diagram_agrees_with_the_separatrix_diagram() {
    let surfaces = vec![
        square_torus(),
        three_square_l(),
        build_bouw_moller(BouwMollerParams::new(3, 4).unwrap()).unwrap(),
        build_bouw_moller(BouwMollerParams::new(4, 3).unwrap()).unwrap(),
        build_bouw_moller(BouwMollerParams::new(2, 6).unwrap()).unwrap(),
    ];
    for s in &surfaces {
        for d in sample_directions(s, 1.8, 6) {
            let dec = cylinder_decomposition(s, d).unwrap();
            let sep = separatrix_diagram_of(&dec).unwrap();
            let dual = dual_separatrix_diagram_of(&dec).unwrap();
            assert_eq!(sep.vertex_count(), s.singularity_count());
            assert_eq!(sep.edge_count(), dec.connections.len());
            assert_eq!(dual.vertex_count(), 2 * dec.cylinders.len());
            assert_eq!(dual.edge_count(), dec.connections.len());
            // turning around the singularities traces the dual faces
            assert_eq!(dual.faces().len(), s.singularity_count());
            let genus = |g: &RibbonGraph| g.component_genera().iter().sum::<usize>();
            assert_eq!(genus(&sep), genus(&dual));
            assert_eq!(sep.is_planar(), dual.is_planar());
        }
    }
}

#[test]
fn planarity_matches_pairwise_curve_intersections() {
    let cases: Vec<(TranslationSurface, Slope)> = vec![
        (square_torus(), Slope::Infinite),
        (three_square_l(), Slope::Infinite),
        (three_square_l(), diag()),
        (
            build_bouw_moller(BouwMollerParams::new(3, 4).unwrap()).unwrap(),
            Slope::Infinite,
        ),
    ];
    let s43 = build_bouw_moller(BouwMollerParams::new(4, 3).unwrap()).unwrap();
    let mut cases = cases;
    for d in sample_directions(&s43, 1.6, 3) {
        cases.push((s43.clone(), d));
    }
    for (s, d) in &cases {
        let dec = cylinder_decomposition(s, *d).unwrap();
        let planar = separatrix_diagram_of(&dec).unwrap().is_planar();
        let rs = &dec.rotated;
        let loops: Vec<_> = dec
            .connections
            .iter()
            .filter(|sc| sc.is_closed())
            .collect();
        let mut crossing = false;
        for a in &loops {
            for b in &loops {
                let alg = intersection::algebraic_intersection(rs, a, b).unwrap();
                if alg != 0 {
                    crossing = true;
                }
            }
        }
        assert_eq!(planar, !crossing, "planarity criterion mismatch");
    }
}

#[test]
fn boundedness_oracle() {
    for (m, n) in [(3u32, 4u32), (4, 3), (5, 4)] {
        let s = build_bouw_moller(BouwMollerParams::new(m, n).unwrap()).unwrap();
        let dirs = sample_directions(&s, 1.8, 5);
        let rep = kvol_bounded_on_orbit(&s, &dirs).unwrap();
        assert!(rep.bounded, "non-planar direction on ({m},{n})");
        assert!(rep.witness.is_none());
    }
    // the three-square surface has a one-cylinder direction whose
    // diagram is not planar
    let l = three_square_l();
    let rep = kvol_bounded_on_orbit(&l, &[Slope::Infinite, diag()]).unwrap();
    assert!(!rep.bounded);
    assert!((rep.witness.unwrap().key() - diag().key()).abs() < 1e-12);
}
