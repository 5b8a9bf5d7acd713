use crate::PeriodicError;

/// Graph with a cyclic order of the half-edges (darts) at every vertex.
/// Edge `e` owns darts `2e` and `2e+1`; the involution pairing the two
/// darts of an edge is `d ^ 1`, hence fixed-point free.
#[derive(Clone, Debug)]
pub struct RibbonGraph {
    /// Next dart counterclockwise around the vertex of each dart.
    rotation: Vec<usize>,
    vertex_of: Vec<usize>,
    vertices: usize,
}

impl RibbonGraph {
    /// Build from the cyclic dart lists of the vertices. Every dart in
    /// `0..darts` must appear exactly once and `darts` must be even.
    pub fn new(cycles: Vec<Vec<usize>>, darts: usize) -> Result<Self, PeriodicError> {
        if darts % 2 != 0 {
            return Err(PeriodicError::BadGraph("odd number of darts".into()));
        }
        let mut rotation = vec![usize::MAX; darts];
        let mut vertex_of = vec![usize::MAX; darts];
        for (v, cycle) in cycles.iter().enumerate() {
            for (i, &d) in cycle.iter().enumerate() {
                if d >= darts || rotation[d] != usize::MAX {
                    return Err(PeriodicError::BadGraph(format!(
                        "dart {d} out of range or repeated"
                    )));
                }
                rotation[d] = cycle[(i + 1) % cycle.len()];
                vertex_of[d] = v;
            }
        }
        if rotation.iter().any(|&r| r == usize::MAX) {
            return Err(PeriodicError::BadGraph("dart missing from vertices".into()));
        }
        Ok(RibbonGraph {
            rotation,
            vertex_of,
            vertices: cycles.len(),
        })
    }

    pub fn dart_count(&self) -> usize {
        self.rotation.len()
    }

    pub fn edge_count(&self) -> usize {
        self.rotation.len() / 2
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    pub fn involution(&self, d: usize) -> usize {
        d ^ 1
    }

    /// Boundary cycles of the thickened graph: orbits of the dart
    /// permutation `d -> rotation(involution(d))`. Each dart lies on
    /// exactly one face.
    pub fn faces(&self) -> Vec<Vec<usize>> {
        let n = self.rotation.len();
        let mut seen = vec![false; n];
        let mut faces = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut face = Vec::new();
            let mut d = start;
            while !seen[d] {
                seen[d] = true;
                face.push(d);
                d = self.rotation[d ^ 1];
            }
            faces.push(face);
        }
        faces
    }

    /// Connected components as vertex sets; isolated vertices form
    /// their own components.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut comp = vec![usize::MAX; self.vertices];
        let mut count = 0;
        for v0 in 0..self.vertices {
            if comp[v0] != usize::MAX {
                continue;
            }
            let mut stack = vec![v0];
            comp[v0] = count;
            while let Some(v) = stack.pop() {
                for d in 0..self.rotation.len() {
                    if self.vertex_of[d] != v {
                        continue;
                    }
                    let w = self.vertex_of[d ^ 1];
                    if comp[w] == usize::MAX {
                        comp[w] = count;
                        stack.push(w);
                    }
                }
            }
            count += 1;
        }
        let mut out = vec![Vec::new(); count];
        for (v, &c) in comp.iter().enumerate() {
            out[c].push(v);
        }
        out
    }

    /// Genus of every connected component, from the Euler formula
    /// `V - E + F = 2 - 2g` applied component by component.
    pub fn component_genera(&self) -> Vec<usize> {
        let components = self.components();
        let mut comp_of_vertex = vec![0usize; self.vertices];
        for (c, vs) in components.iter().enumerate() {
            for &v in vs {
                comp_of_vertex[v] = c;
            }
        }
        let mut e = vec![0usize; components.len()];
        let mut f = vec![0usize; components.len()];
        for d in (0..self.rotation.len()).step_by(2) {
            e[comp_of_vertex[self.vertex_of[d]]] += 1;
        }
        for face in self.faces() {
            f[comp_of_vertex[self.vertex_of[face[0]]]] += 1;
        }
        components
            .iter()
            .enumerate()
            .map(|(c, vs)| {
                let v = vs.len() as i64;
                let faces = if e[c] == 0 { 1 } else { f[c] as i64 };
                let chi = v - e[c] as i64 + faces;
                debug_assert!(chi <= 2 && chi % 2 == 0);
                ((2 - chi) / 2) as usize
            })
            .collect()
    }

    /// Planar means every connected component has genus zero, i.e. the
    /// ribbon structure embeds in the sphere.
    pub fn is_planar(&self) -> bool {
        self.component_genera().iter().all(|&g| g == 0)
    }
}
