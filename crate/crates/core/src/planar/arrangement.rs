//! Curve arrangement dual to an embedded graph, chord geometry for its
//! curves, and the medium on its cells.
//!
//! A curve enters each internal face through one edge and leaves through the
//! opposite one, half the face length further along the boundary. Curves
//! start and end on the outer face; cells are the vertices of the graph.

use std::f64::consts::PI;

use crate::error::{MediumError, PlanarError};
use crate::graph::Graph;
use crate::medium::{build_medium, Medium};
use crate::partial_cube::EdgeClassPartition;
use crate::planar::map::{twin, PlanarEmbedding};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Curve {
    pub class: usize,
    /// Crossed edges in zone order.
    pub edges: Vec<usize>,
    /// Internal faces between consecutive crossed edges.
    pub faces: Vec<usize>,
    /// Positions of the two curve ends in the outer face, `ends.0 < ends.1`.
    pub ends: (usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualArrangement {
    /// One curve per edge class, indexed by class.
    pub curves: Vec<Curve>,
    /// Class of the curve ending at each outer-face position.
    pub end_order: Vec<usize>,
    /// Head vertex of each outer-face dart.
    pub outer_heads: Vec<usize>,
    /// `sides[i][cell]` is true when the cell lies on the plus side of curve `i`.
    pub sides: Vec<Vec<bool>>,
    /// One arc per graph edge: the two cells it separates and its curve.
    pub arcs: Vec<(usize, usize, usize)>,
    /// Pairs of curves meeting in an internal face, with that face.
    pub crossings: Vec<(usize, usize, usize)>,
}

impl DualArrangement {
    pub fn cell_count(&self) -> usize {
        self.sides.first().map_or(1, Vec::len)
    }

    pub fn crossing_count(&self, i: usize, j: usize) -> usize {
        let (i, j) = (i.min(j), i.max(j));
        self.crossings.iter().filter(|c| (c.0, c.1) == (i, j)).count()
    }

    /// Every pair of curves meets at most once.
    pub fn is_weak(&self) -> bool {
        let mut pairs: Vec<(usize, usize)> = self.crossings.iter().map(|c| (c.0, c.1)).collect();
        pairs.sort_unstable();
        pairs.windows(2).all(|w| w[0] != w[1])
    }
}

/// Traces the curves of the arrangement dual to `pe`.
pub fn dual_arrangement(
    g: &Graph,
    pe: &PlanarEmbedding,
    classes: &EdgeClassPartition,
) -> Result<DualArrangement, PlanarError> {
    for face in pe.faces() {
        if face.len() % 2 == 1 {
            return Err(PlanarError::OddFace {
                face: pe.face_vertices(face),
                len: face.len(),
            });
        }
    }
    let rs = pe.system();
    let outer = pe.outer_face().to_vec();
    let outer_index = pe.outer_index();
    let mut outer_pos = vec![usize::MAX; 2 * g.m()];
    for (j, &d) in outer.iter().enumerate() {
        outer_pos[d] = j;
    }

    let mut covered = vec![false; g.m()];
    let mut traced: Vec<Curve> = Vec::new();
    for (j, &d) in outer.iter().enumerate() {
        if covered[d / 2] {
            continue;
        }
        let class = classes.class_of(d / 2);
        let mut edges = vec![d / 2];
        let mut faces = Vec::new();
        covered[d / 2] = true;
        let mut x = twin(d);
        while pe.face_of(x) != outer_index {
            let f = pe.face_of(x);
            let face = &pe.faces()[f];
            let i = face.iter().position(|&y| y == x).expect("dart on its face");
            let y = face[(i + face.len() / 2) % face.len()];
            if covered[y / 2] {
                return Err(PlanarError::ZoneMismatch(classes.class_of(y / 2)));
            }
            covered[y / 2] = true;
            faces.push(f);
            edges.push(y / 2);
            x = twin(y);
        }
        traced.push(Curve {
            class,
            edges,
            faces,
            ends: (j, outer_pos[x]),
        });
    }
    if let Some(e) = covered.iter().position(|&c| !c) {
        return Err(PlanarError::ClosedCurve(classes.class_of(e)));
    }

    let mut slots: Vec<Option<Curve>> = vec![None; classes.count()];
    for curve in traced {
        if let Some(&e) = curve.edges.iter().find(|&&e| classes.class_of(e) != curve.class) {
            return Err(PlanarError::ZoneMismatch(classes.class_of(e)));
        }
        let class = curve.class;
        if slots[class].replace(curve).is_some() {
            return Err(PlanarError::ZoneMismatch(class));
        }
    }
    let curves: Vec<Curve> = slots
        .into_iter()
        .enumerate()
        .map(|(i, c)| c.ok_or(PlanarError::ZoneMismatch(i)))
        .collect::<Result<_, _>>()?;

    let mut end_order = vec![usize::MAX; outer.len()];
    for c in &curves {
        end_order[c.ends.0] = c.class;
        end_order[c.ends.1] = c.class;
    }
    let outer_heads = outer.iter().map(|&d| rs.head(d)).collect();

    let sides: Vec<Vec<bool>> = (0..classes.count())
        .map(|i| {
            let (_, label) = g.components_with(|e| classes.class_of(e) != i);
            label.iter().map(|&l| l != label[0]).collect()
        })
        .collect();
    let arcs = g
        .edges()
        .iter()
        .enumerate()
        .map(|(e, &(u, v))| (u, v, classes.class_of(e)))
        .collect();

    let mut crossings = Vec::new();
    for (f, face) in pe.faces().iter().enumerate() {
        if f == outer_index {
            continue;
        }
        let mut through: Vec<usize> = face.iter().map(|&d| classes.class_of(d / 2)).collect();
        through.sort_unstable();
        through.dedup();
        for (a, &i) in through.iter().enumerate() {
            for &j in &through[a + 1..] {
                crossings.push((i, j, f));
            }
        }
    }

    Ok(DualArrangement {
        curves,
        end_order,
        outer_heads,
        sides,
        arcs,
        crossings,
    })
}

/// Curve ends equally spaced on the unit circle (clockwise, following the
/// outer face), one chord per curve and the edge direction of each class.
#[derive(Clone, Debug, PartialEq)]
pub struct ChordAssignment {
    pub angles: Vec<f64>,
    pub chords: Vec<(usize, usize)>,
    /// Unit vector from the minus side to the plus side, perpendicular to the chord.
    pub directions: Vec<(f64, f64)>,
}

pub fn chord_layout(da: &DualArrangement) -> ChordAssignment {
    let ends = da.end_order.len();
    let angles: Vec<f64> = (0..ends).map(|j| -2.0 * PI * j as f64 / ends as f64).collect();
    let chords: Vec<(usize, usize)> = da.curves.iter().map(|c| c.ends).collect();
    let directions = da
        .curves
        .iter()
        .map(|c| {
            let (a, b) = c.ends;
            let phi = (angles[a] + angles[b]) / 2.0;
            let sign = if da.sides[c.class][da.outer_heads[a]] { 1.0 } else { -1.0 };
            (sign * phi.cos(), sign * phi.sin())
        })
        .collect();
    ChordAssignment {
        angles,
        chords,
        directions,
    }
}

/// Medium whose states are the cells and whose token `c{i}+` (`c{i}-`) moves
/// a cell across an arc of curve `i` onto its plus (minus) side.
pub fn arrangement_to_medium(da: &DualArrangement) -> Result<Medium, MediumError> {
    let n = da.cell_count();
    let k = da.curves.len();
    let mut action: Vec<Vec<usize>> = (0..n).map(|s| vec![s; 2 * k]).collect();
    for &(u, v, i) in &da.arcs {
        let (minus, plus) = if da.sides[i][u] { (v, u) } else { (u, v) };
        action[minus][2 * i] = plus;
        action[plus][2 * i + 1] = minus;
    }
    let states = (0..n).map(|s| format!("v{s}")).collect();
    let tokens = (0..k).map(|i| (format!("c{i}+"), format!("c{i}-"))).collect();
    build_medium(states, tokens, action)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::cycle;
    use crate::medium::graph_from_medium;
    use crate::partial_cube::theta_classes;
    use crate::planar::select::select_embedding;

    fn arrange(g: &Graph) -> Result<DualArrangement, PlanarError> {
        let classes = theta_classes(g)?;
        dual_arrangement(g, &select_embedding(g)?, &classes)
    }

    #[test]
    fn square_has_two_crossing_curves() {
        let da = arrange(&cycle(4)).unwrap();
        assert_eq!(da.curves.len(), 2);
        assert_eq!(da.crossing_count(0, 1), 1);
        assert!(da.is_weak());
        assert_eq!(da.end_order.len(), 4);
    }

    #[test]
    fn hexagon_curves_cross_pairwise() {
        let da = arrange(&cycle(6)).unwrap();
        assert_eq!(da.curves.len(), 3);
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            assert_eq!(da.crossing_count(i, j), 1);
        }
        // Opposite ends: each chord is a diameter.
        for c in &da.curves {
            assert_eq!(c.ends.1 - c.ends.0, 3);
        }
    }

    #[test]
    fn triangle_has_odd_face() {
        let g = cycle(3);
        let pe = select_embedding(&g).unwrap();
        let classes = EdgeClassPartition::new(vec![0, 1, 2], 3);
        assert!(matches!(dual_arrangement(&g, &pe, &classes), Err(PlanarError::OddFace { len: 3, .. })));
    }

    #[test]
    fn square_chords_are_perpendicular_diameters() {
        let ca = chord_layout(&arrange(&cycle(4)).unwrap());
        let (a, b) = (ca.directions[0], ca.directions[1]);
        assert!((a.0 * b.0 + a.1 * b.1).abs() < 1e-12);
        for d in &ca.directions {
            assert!(((d.0 * d.0 + d.1 * d.1) - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn cells_form_the_input_medium() {
        let g = cycle(6);
        let m = arrangement_to_medium(&arrange(&g).unwrap()).unwrap();
        assert_eq!(m.state_count(), 6);
        let mut edges = graph_from_medium(&m).edges().to_vec();
        edges.sort_unstable();
        let mut expected = g.edges().to_vec();
        expected.sort_unstable();
        assert_eq!(edges, expected);
    }
}
