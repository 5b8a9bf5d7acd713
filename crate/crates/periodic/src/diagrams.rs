use crate::{cylinder_decomposition, CylinderDecomposition, PeriodicError, RibbonGraph};
use geom_core::Vec2;
use surface_model::TranslationSurface;
use trajectory::Slope;

/// Separatrix diagram of a cylinder decomposition: one vertex per
/// singularity, one edge per saddle connection in the periodic
/// direction, darts ordered counterclockwise around each singularity by
/// their angle on the link circle. Dart `2i` is the outgoing germ of
/// connection `i`, dart `2i+1` its incoming germ.
pub fn separatrix_diagram_of(dec: &CylinderDecomposition) -> Result<RibbonGraph, PeriodicError> {
    if !dec.is_periodic {
        return Err(PeriodicError::NotPeriodic);
    }
    let rs = &dec.rotated;
    let mut at_vertex: Vec<Vec<(f64, usize)>> = vec![Vec::new(); rs.singularity_count()];
    for (i, sc) in dec.connections.iter().enumerate() {
        let (k_out, a_out) = rs.germ_angle(sc.start, Vec2::new(1.0, 0.0));
        let (k_in, a_in) = rs.germ_angle(sc.end, Vec2::new(-1.0, 0.0));
        at_vertex[k_out].push((a_out, 2 * i));
        at_vertex[k_in].push((a_in, 2 * i + 1));
    }
    let cycles = at_vertex
        .into_iter()
        .map(|mut v| {
            v.sort_by(|a, b| a.0.total_cmp(&b.0));
            v.into_iter().map(|(_, d)| d).collect()
        })
        .collect();
    RibbonGraph::new(cycles, 2 * dec.connections.len())
}

pub fn separatrix_diagram(
    s: &TranslationSurface,
    d: Slope,
) -> Result<RibbonGraph, PeriodicError> {
    separatrix_diagram_of(&cylinder_decomposition(s, d)?)
}

/// Dual separatrix diagram: two vertices per cylinder (its top and its
/// bottom boundary circle) and one edge per saddle connection, joining
/// the top of the cylinder below it to the bottom of the cylinder above
/// it. The cyclic order at a top vertex is the left-to-right order of
/// its boundary connections, at a bottom vertex the right-to-left
/// order. Dart `2i` sits on the top side, `2i+1` on the bottom side.
pub fn dual_separatrix_diagram_of(
    dec: &CylinderDecomposition,
) -> Result<RibbonGraph, PeriodicError> {
    if !dec.is_periodic {
        return Err(PeriodicError::NotPeriodic);
    }
    let mut cycles = Vec::with_capacity(2 * dec.cylinders.len());
    for c in &dec.cylinders {
        cycles.push(c.top.iter().map(|&i| 2 * i).collect::<Vec<_>>());
        cycles.push(c.bottom.iter().map(|&i| 2 * i + 1).collect::<Vec<_>>());
    }
    RibbonGraph::new(cycles, 2 * dec.connections.len())
}

pub fn dual_separatrix_diagram(
    s: &TranslationSurface,
    d: Slope,
) -> Result<RibbonGraph, PeriodicError> {
    dual_separatrix_diagram_of(&cylinder_decomposition(s, d)?)
}

/// Verdict of the planarity criterion over a set of periodic
/// directions.
#[derive(Clone, Debug)]
pub struct BoundednessReport {
    pub bounded: bool,
    /// First direction whose separatrix diagram is not planar.
    pub witness: Option<Slope>,
}

/// The intersection constant is bounded on the orbit of a lattice
/// surface exactly when the separatrix diagram of every periodic
/// direction is planar; the caller supplies a set of directions
/// covering the orbits of the affine symmetry group.
pub fn kvol_bounded_on_orbit(
    s: &TranslationSurface,
    directions: &[Slope],
) -> Result<BoundednessReport, PeriodicError> {
    for &d in directions {
        let dec = cylinder_decomposition(s, d)?;
        if !dec.is_periodic {
            return Err(PeriodicError::NotPeriodic);
        }
        if !separatrix_diagram_of(&dec)?.is_planar() {
            return Ok(BoundednessReport {
                bounded: false,
                witness: Some(d),
            });
        }
    }
    Ok(BoundednessReport {
        bounded: true,
        witness: None,
    })
}
