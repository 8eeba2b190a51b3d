//! Recognition of duals of weak pseudoline arrangements and their
//! symmetric planar drawings.

pub mod arrangement;
pub mod dmp;
pub mod map;
pub mod select;
pub mod spqr;
pub mod symmetric;

pub use arrangement::{arrangement_to_medium, chord_layout, dual_arrangement, ChordAssignment, DualArrangement};
pub use map::{PlanarEmbedding, RotationSystem};
pub use select::{enumerate_embeddings, is_planar, select_embedding, select_embeddings};
pub use spqr::{spqr_tree, NodeKind, SpqrTree};
pub use symmetric::{place_vertices, verify_symmetric, Rejection, SymmetricDrawing};

use crate::error::PlanarError;
use crate::graph::Graph;
use crate::partial_cube::{theta_classes, EdgeClassPartition};

/// Everything produced by a successful recognition.
#[derive(Clone, Debug)]
pub struct Recognition {
    pub classes: EdgeClassPartition,
    pub embedding: PlanarEmbedding,
    pub arrangement: DualArrangement,
    pub chords: ChordAssignment,
    pub drawing: SymmetricDrawing,
}

/// Runs the drawing stages on one embedding.
pub fn draw_embedding(
    g: &Graph,
    classes: &EdgeClassPartition,
    embedding: PlanarEmbedding,
) -> Result<Recognition, PlanarError> {
    let arrangement = dual_arrangement(g, &embedding, classes)?;
    let chords = chord_layout(&arrangement);
    let drawing = place_vertices(g, &embedding, &arrangement, &chords)?;
    verify_symmetric(&drawing).map_err(|r| PlanarError::Rejected(r.to_string()))?;
    Ok(Recognition {
        classes: classes.clone(),
        embedding,
        arrangement,
        chords,
        drawing,
    })
}

/// Full pipeline: embedding selection, face parity, edge classes,
/// arrangement, chords, placement and verification. The first candidate
/// embedding that survives every stage wins; otherwise the first candidate's
/// error is reported.
///
/// Face parity runs before the edge classes: an embedded graph is bipartite
/// exactly when all its faces are even, and the odd face is the sharper
/// diagnostic.
pub fn recognize_and_draw(g: &Graph) -> Result<Recognition, PlanarError> {
    if !g.is_connected() {
        return Err(PlanarError::Disconnected);
    }
    let candidates = select_embeddings(g)?;
    if let Some(face) = candidates[0].faces().iter().find(|f| f.len() % 2 == 1) {
        return Err(PlanarError::OddFace {
            face: candidates[0].face_vertices(face),
            len: face.len(),
        });
    }
    let classes = theta_classes(g)?;
    let mut first_error = None;
    for embedding in candidates {
        match draw_embedding(g, &classes, embedding) {
            Ok(r) => return Ok(r),
            Err(e) => {
                first_error.get_or_insert(e);
            }
        }
    }
    Err(first_error.expect("at least one candidate"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle, path};

    #[test]
    fn even_cycles_draw_as_regular_polygons() {
        for k in 2..=6 {
            let r = recognize_and_draw(&cycle(2 * k)).unwrap();
            let p = &r.drawing.pos;
            let centre = p.iter().fold((0.0, 0.0), |a, q| (a.0 + q.0, a.1 + q.1));
            let centre = (centre.0 / p.len() as f64, centre.1 / p.len() as f64);
            let radii: Vec<f64> = p.iter().map(|q| ((q.0 - centre.0).powi(2) + (q.1 - centre.1).powi(2)).sqrt()).collect();
            for r in &radii {
                assert!((r - radii[0]).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn paths_draw() {
        let r = recognize_and_draw(&path(4)).unwrap();
        assert_eq!(r.drawing.pos.len(), 4);
    }

    #[test]
    fn triangle_rejected_before_drawing() {
        let err = recognize_and_draw(&cycle(3)).unwrap_err();
        assert!(matches!(err, PlanarError::OddFace { len: 3, .. }), "{err}");
    }

    #[test]
    fn cube_is_rejected() {
        let edges: Vec<_> = (0..8usize)
            .flat_map(|v| (0..3).map(move |i| (v, v ^ (1 << i))))
            .filter(|&(a, b)| a < b)
            .collect();
        assert!(recognize_and_draw(&Graph::from_edges(8, edges).unwrap()).is_err());
    }

    #[test]
    fn weak_orders_draw_and_permutations_do_not() {
        use crate::families::generate_family;
        use crate::io::load;
        let wo = load(generate_family("weak-orders", "3").unwrap()).unwrap();
        let r = recognize_and_draw(&wo.graph).unwrap();
        assert_eq!(r.arrangement.curves.len(), 6);
        let perm = load(generate_family("permutations", "4").unwrap()).unwrap();
        assert!(recognize_and_draw(&perm.graph).is_err());
    }
}
