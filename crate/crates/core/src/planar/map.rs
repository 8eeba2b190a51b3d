//! Rotation systems over multigraphs and the planar embeddings built on them.
//!
//! Edge `e = (a, b)` owns darts `2e` (a to b) and `2e + 1` (b to a). The face
//! successor of a dart `u -> v` is the dart after `v -> u` in the rotation at
//! `v`; with counterclockwise rotations, internal faces are traced
//! counterclockwise and the outer face clockwise.

use crate::graph::Graph;

const ABSENT: usize = usize::MAX;

pub fn twin(d: usize) -> usize {
    d ^ 1
}

/// A rotation system: for each vertex, the cyclic order of its outgoing darts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RotationSystem {
    ends: Vec<(usize, usize)>,
    rot: Vec<Vec<usize>>,
    pos: Vec<usize>,
}

impl RotationSystem {
    /// Builds from per-vertex outgoing dart lists. Edges absent from every
    /// list are ignored; a present edge must have both darts listed.
    pub fn new(ends: Vec<(usize, usize)>, rot: Vec<Vec<usize>>) -> Result<Self, String> {
        let mut pos = vec![ABSENT; 2 * ends.len()];
        for (v, darts) in rot.iter().enumerate() {
            for (i, &d) in darts.iter().enumerate() {
                if d >= pos.len() {
                    return Err(format!("dart {d} out of range"));
                }
                let (a, b) = ends[d / 2];
                let tail = if d % 2 == 0 { a } else { b };
                if tail != v {
                    return Err(format!("dart {d} listed at {v} but leaves {tail}"));
                }
                if pos[d] != ABSENT {
                    return Err(format!("dart {d} listed twice"));
                }
                pos[d] = i;
            }
        }
        for e in 0..ends.len() {
            if (pos[2 * e] == ABSENT) != (pos[2 * e + 1] == ABSENT) {
                return Err(format!("edge {e} has only one dart"));
            }
        }
        Ok(RotationSystem { ends, rot, pos })
    }

    pub fn ends(&self) -> &[(usize, usize)] {
        &self.ends
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rot[v]
    }

    pub fn rotations(&self) -> &[Vec<usize>] {
        &self.rot
    }

    pub fn vertex_count(&self) -> usize {
        self.rot.len()
    }

    pub fn contains(&self, d: usize) -> bool {
        d < self.pos.len() && self.pos[d] != ABSENT
    }

    pub fn tail(&self, d: usize) -> usize {
        let (a, b) = self.ends[d / 2];
        if d % 2 == 0 {
            a
        } else {
            b
        }
    }

    pub fn head(&self, d: usize) -> usize {
        self.tail(twin(d))
    }

    /// Next dart counterclockwise around the tail of `d`.
    pub fn rot_next(&self, d: usize) -> usize {
        let list = &self.rot[self.tail(d)];
        list[(self.pos[d] + 1) % list.len()]
    }

    pub fn face_next(&self, d: usize) -> usize {
        self.rot_next(twin(d))
    }

    /// Face boundaries as dart cycles, in order of their smallest dart.
    pub fn faces(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.pos.len()];
        let mut faces = Vec::new();
        for d in 0..self.pos.len() {
            if seen[d] || self.pos[d] == ABSENT {
                continue;
            }
            let mut face = Vec::new();
            let mut x = d;
            while !seen[x] {
                seen[x] = true;
                face.push(x);
                x = self.face_next(x);
            }
            faces.push(face);
        }
        faces
    }

    /// The same system with every rotation reversed.
    pub fn mirrored(&self) -> Self {
        let rot: Vec<Vec<usize>> = self
            .rot
            .iter()
            .map(|r| r.iter().rev().copied().collect())
            .collect();
        RotationSystem::new(self.ends.clone(), rot).expect("mirror of a valid system")
    }

    fn present_edges(&self) -> usize {
        (0..self.ends.len()).filter(|&e| self.contains(2 * e)).count()
    }

    fn present_vertices(&self) -> usize {
        self.rot.iter().filter(|r| !r.is_empty()).count()
    }

    /// Euler characteristic check for a connected system: `V - E + F = 2`.
    pub fn is_planar(&self) -> bool {
        let v = self.present_vertices() as i64;
        let e = self.present_edges() as i64;
        let f = self.faces().len() as i64;
        v - e + f == 2
    }
}

/// A genus-zero rotation system of a graph with a chosen outer face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanarEmbedding {
    system: RotationSystem,
    faces: Vec<Vec<usize>>,
    face_of: Vec<usize>,
    outer: usize,
}

impl PlanarEmbedding {
    /// Wraps a rotation system of `g` (darts numbered by `g`'s edge ids); the
    /// outer face is the one containing `outer_dart`.
    pub fn new(g: &Graph, system: RotationSystem, outer_dart: usize) -> Result<Self, String> {
        if system.ends() != g.edges() || system.vertex_count() != g.n() {
            return Err("rotation system does not match the graph".into());
        }
        if g.m() > 0 && (0..g.m()).any(|e| !system.contains(2 * e)) {
            return Err("rotation system misses an edge".into());
        }
        if g.m() > 0 && !system.is_planar() {
            return Err("rotation system has positive genus".into());
        }
        let faces = system.faces();
        let mut face_of = vec![ABSENT; 2 * g.m()];
        for (i, f) in faces.iter().enumerate() {
            for &d in f {
                face_of[d] = i;
            }
        }
        let outer = if g.m() == 0 { 0 } else { face_of[outer_dart] };
        Ok(PlanarEmbedding {
            system,
            faces,
            face_of,
            outer,
        })
    }

    /// Embedding of a graph without edges.
    pub fn trivial(g: &Graph) -> Self {
        PlanarEmbedding {
            system: RotationSystem::new(g.edges().to_vec(), vec![vec![]; g.n()]).unwrap(),
            faces: vec![],
            face_of: vec![],
            outer: 0,
        }
    }

    pub fn system(&self) -> &RotationSystem {
        &self.system
    }

    pub fn faces(&self) -> &[Vec<usize>] {
        &self.faces
    }

    pub fn face_of(&self, d: usize) -> usize {
        self.face_of[d]
    }

    pub fn outer_index(&self) -> usize {
        self.outer
    }

    /// Outer face darts, in face order; empty for an edgeless graph.
    pub fn outer_face(&self) -> &[usize] {
        self.faces.get(self.outer).map_or(&[], Vec::as_slice)
    }

    pub fn internal_faces(&self) -> impl Iterator<Item = &Vec<usize>> + '_ {
        self.faces
            .iter()
            .enumerate()
            .filter(move |(i, _)| *i != self.outer)
            .map(|(_, f)| f)
    }

    /// Vertex cycle of a face (the tail of each dart).
    pub fn face_vertices(&self, face: &[usize]) -> Vec<usize> {
        face.iter().map(|&d| self.system.tail(d)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::cycle;

    /// Counterclockwise rotations of a unit square 0,1,2,3.
    fn square() -> (Graph, RotationSystem) {
        let g = cycle(4);
        // edges: 0:(0,1) 1:(1,2) 2:(2,3) 3:(0,3)
        let rot = vec![vec![0, 6], vec![2, 1], vec![4, 3], vec![7, 5]];
        let rs = RotationSystem::new(g.edges().to_vec(), rot).unwrap();
        (g, rs)
    }

    #[test]
    fn square_faces() {
        let (g, rs) = square();
        let faces = rs.faces();
        assert_eq!(faces.len(), 2);
        assert!(rs.is_planar());
        let pe = PlanarEmbedding::new(&g, rs, 1).unwrap();
        // Dart 1 (1 -> 0) runs clockwise, so it bounds the outer face.
        assert_eq!(pe.face_vertices(pe.outer_face()), vec![1, 0, 3, 2]);
        let inner: Vec<_> = pe.internal_faces().collect();
        assert_eq!(pe.face_vertices(inner[0]), vec![0, 1, 2, 3]);
    }

    #[test]
    fn rejects_misplaced_dart() {
        let g = cycle(4);
        assert!(RotationSystem::new(g.edges().to_vec(), vec![vec![1], vec![], vec![], vec![]]).is_err());
    }

    #[test]
    fn mirror_swaps_orientation() {
        let (_, rs) = square();
        let m = rs.mirrored();
        assert!(m.is_planar());
        assert_eq!(m.faces().len(), 2);
    }
}
