//! Vertex placement from chord directions and verification of symmetric
//! planar drawings.

use std::f64::consts::PI;
use std::fmt;

use crate::error::PlanarError;
use crate::graph::Graph;
use crate::planar::arrangement::{ChordAssignment, DualArrangement};
use crate::planar::map::PlanarEmbedding;

/// Tolerance for every floating-point comparison.
pub const EPS: f64 = 1e-9;

type Point = (f64, f64);

#[derive(Clone, Debug, PartialEq)]
pub struct SymmetricDrawing {
    pub pos: Vec<Point>,
    /// `(u, v, class)` per edge of the graph.
    pub edges: Vec<(usize, usize, usize)>,
    /// Unit direction per class.
    pub directions: Vec<Point>,
    /// Internal faces as vertex cycles.
    pub faces: Vec<Vec<usize>>,
    /// Outer face as a vertex walk.
    pub outer: Vec<usize>,
}

/// Places vertex 0 at the origin and walks breadth-first, stepping by the
/// class direction towards the plus side of each crossed curve.
pub fn place_vertices(
    g: &Graph,
    pe: &PlanarEmbedding,
    da: &DualArrangement,
    ca: &ChordAssignment,
) -> Result<SymmetricDrawing, PlanarError> {
    let class_of = |e: usize| da.arcs[e].2;
    let step = |e: usize, to: usize| {
        let c = class_of(e);
        let s = if da.sides[c][to] { 1.0 } else { -1.0 };
        (s * ca.directions[c].0, s * ca.directions[c].1)
    };
    let mut pos: Vec<Option<Point>> = vec![None; g.n()];
    if g.n() > 0 {
        pos[0] = Some((0.0, 0.0));
    }
    let mut queue = std::collections::VecDeque::from([0usize]);
    while let Some(u) = queue.pop_front() {
        let pu = pos[u].expect("queued vertices are placed");
        for &(v, e) in g.adjacent(u) {
            let (dx, dy) = step(e, v);
            let target = (pu.0 + dx, pu.1 + dy);
            match pos[v] {
                None => {
                    pos[v] = Some(target);
                    queue.push_back(v);
                }
                Some(pv) => {
                    if (pv.0 - target.0).abs() > EPS || (pv.1 - target.1).abs() > EPS {
                        return Err(PlanarError::InconsistentPlacement((u, v)));
                    }
                }
            }
        }
    }
    let pos: Vec<Point> = pos.into_iter().map(|p| p.expect("connected graph")).collect();
    Ok(SymmetricDrawing {
        pos,
        edges: da.arcs.clone(),
        directions: ca.directions.clone(),
        faces: pe.internal_faces().map(|f| pe.face_vertices(f)).collect(),
        outer: pe.face_vertices(pe.outer_face()),
    })
}

/// The failed check and a description of where it failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rejection {
    pub check: &'static str,
    pub witness: String,
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.check, self.witness)
    }
}

fn sub(a: Point, b: Point) -> Point {
    (a.0 - b.0, a.1 - b.1)
}

fn cross(a: Point, b: Point) -> f64 {
    a.0 * b.1 - a.1 * b.0
}

fn dot(a: Point, b: Point) -> f64 {
    a.0 * b.0 + a.1 * b.1
}

fn norm(a: Point) -> f64 {
    dot(a, a).sqrt()
}

fn segment_distance(p: Point, a: Point, b: Point) -> f64 {
    let ab = sub(b, a);
    let t = (dot(sub(p, a), ab) / dot(ab, ab)).clamp(0.0, 1.0);
    norm(sub(p, (a.0 + t * ab.0, a.1 + t * ab.1)))
}

fn reject(check: &'static str, witness: String) -> Result<(), Rejection> {
    Err(Rejection { check, witness })
}

/// Accepts a drawing whose edges are unit translates of their class
/// direction, whose internal faces are strictly convex, counterclockwise and
/// centrally symmetric, and whose vertices and edges do not overlap.
pub fn verify_symmetric(sd: &SymmetricDrawing) -> Result<(), Rejection> {
    let pos = &sd.pos;
    for &(u, v, c) in &sd.edges {
        let d = sub(pos[v], pos[u]);
        if (norm(d) - 1.0).abs() > EPS {
            return reject("edge length", format!("edge ({u}, {v}) has length {}", norm(d)));
        }
        let dir = sd.directions[c];
        let off = norm(sub(d, dir)).min(norm((d.0 + dir.0, d.1 + dir.1)));
        if off > EPS {
            return reject("edge direction", format!("edge ({u}, {v}) is off class {c} by {off:e}"));
        }
    }

    for face in &sd.faces {
        let l = face.len();
        let vec_at = |k: usize| sub(pos[face[(k + 1) % l]], pos[face[k % l]]);
        let mut turning = 0.0;
        for k in 0..l {
            let (a, b) = (vec_at(k), vec_at(k + 1));
            let turn = cross(a, b);
            if turn <= EPS {
                return reject(
                    "convexity",
                    format!("face {face:?} turns by {turn:e} at vertex {}", face[(k + 1) % l]),
                );
            }
            turning += turn.atan2(dot(a, b));
        }
        if (turning - 2.0 * PI).abs() > 1e-6 {
            return reject("winding", format!("face {face:?} turns by {turning}"));
        }
        if l % 2 == 1 {
            return reject("central symmetry", format!("face {face:?} has odd length"));
        }
        for k in 0..l / 2 {
            let (a, b) = (vec_at(k), vec_at(k + l / 2));
            if norm((a.0 + b.0, a.1 + b.1)) > EPS {
                return reject("central symmetry", format!("face {face:?} edges {k} and {}", k + l / 2));
            }
        }
    }

    for u in 0..pos.len() {
        for v in u + 1..pos.len() {
            if norm(sub(pos[u], pos[v])) <= EPS {
                return reject("distinct vertices", format!("vertices {u} and {v} coincide"));
            }
        }
    }

    for &(a, b, _) in &sd.edges {
        for (r, &p) in pos.iter().enumerate() {
            if r != a && r != b && segment_distance(p, pos[a], pos[b]) <= EPS {
                return reject("vertex on edge", format!("vertex {r} touches edge ({a}, {b})"));
            }
        }
    }

    for (i, &(a, b, _)) in sd.edges.iter().enumerate() {
        for &(c, d, _) in &sd.edges[i + 1..] {
            let shared = [a, b].iter().find(|x| **x == c || **x == d).copied();
            if let Some(s) = shared {
                let x = if a == s { b } else { a };
                let y = if c == s { d } else { c };
                let (vx, vy) = (sub(pos[x], pos[s]), sub(pos[y], pos[s]));
                if cross(vx, vy).abs() <= EPS && dot(vx, vy) > 0.0 {
                    return reject("overlap", format!("edges ({a}, {b}) and ({c}, {d}) overlap"));
                }
                continue;
            }
            let o1 = cross(sub(pos[b], pos[a]), sub(pos[c], pos[a]));
            let o2 = cross(sub(pos[b], pos[a]), sub(pos[d], pos[a]));
            let o3 = cross(sub(pos[d], pos[c]), sub(pos[a], pos[c]));
            let o4 = cross(sub(pos[d], pos[c]), sub(pos[b], pos[c]));
            let strict = |x: f64, y: f64| (x > EPS && y < -EPS) || (x < -EPS && y > EPS);
            if strict(o1, o2) && strict(o3, o4) {
                return reject("crossing", format!("edges ({a}, {b}) and ({c}, {d}) cross"));
            }
        }
    }

    for face in &sd.faces {
        let l = face.len();
        for (r, &p) in pos.iter().enumerate() {
            if face.contains(&r) {
                continue;
            }
            let inside = (0..l).all(|k| {
                let (a, b) = (pos[face[k]], pos[face[(k + 1) % l]]);
                cross(sub(b, a), sub(p, a)) > EPS
            });
            if inside {
                return reject("vertex in face", format!("vertex {r} lies inside face {face:?}"));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit_square() -> SymmetricDrawing {
        SymmetricDrawing {
            pos: vec![(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)],
            edges: vec![(0, 1, 0), (1, 2, 1), (2, 3, 0), (0, 3, 1)],
            directions: vec![(1.0, 0.0), (0.0, 1.0)],
            faces: vec![vec![0, 1, 2, 3]],
            outer: vec![1, 0, 3, 2],
        }
    }

    #[test]
    fn accepts_unit_square() {
        assert_eq!(verify_symmetric(&unit_square()), Ok(()));
    }

    #[test]
    fn rejects_clockwise_face() {
        let mut sd = unit_square();
        sd.faces = vec![vec![0, 3, 2, 1]];
        assert_eq!(verify_symmetric(&sd).unwrap_err().check, "convexity");
    }

    #[test]
    fn rejects_moved_vertex_by_edge_length() {
        let mut sd = unit_square();
        sd.pos[2] = (1.0, 1.5);
        assert_eq!(verify_symmetric(&sd).unwrap_err().check, "edge length");
    }

    #[test]
    fn rejects_crossing_edges() {
        // Two unit edges crossing at their midpoints.
        let h = 0.5_f64.sqrt();
        let sd = SymmetricDrawing {
            pos: vec![(0.0, 0.0), (h, h), (0.0, h), (h, 0.0)],
            edges: vec![(0, 1, 0), (2, 3, 1)],
            directions: vec![(h, h), (h, -h)],
            faces: vec![],
            outer: vec![],
        };
        assert_eq!(verify_symmetric(&sd).unwrap_err().check, "crossing");
    }
}
