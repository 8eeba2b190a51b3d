//! Semicube graphs and minimum-dimension lattice embeddings.
//!
//! A maximum matching of the semicube graph, completed by the edges joining
//! each semicube to its complement, decomposes the semicubes into paths; each
//! path yields one lattice axis.

use crate::error::LatticeError;
use crate::graph::Graph;
use crate::matching::{maximum_matching, Matching};
use crate::partial_cube::{is_isometric_embedding, HypercubeEmbedding};

/// The vertices whose coordinate `coord` equals `polarity`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Semicube {
    pub coord: usize,
    pub polarity: u8,
    pub members: Vec<bool>,
}

/// Semicube graph; semicube `(i, χ)` is node `2i + χ`.
#[derive(Clone, Debug)]
pub struct SemicubeGraph {
    semicubes: Vec<Semicube>,
    graph: Graph,
}

impl SemicubeGraph {
    pub fn semicubes(&self) -> &[Semicube] {
        &self.semicubes
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn tau(&self) -> usize {
        self.semicubes.len() / 2
    }

    pub fn node(coord: usize, polarity: u8) -> usize {
        2 * coord + polarity as usize
    }

    /// Maximum matching of the semicube graph.
    pub fn maximum_matching(&self) -> Matching {
        maximum_matching(&self.graph)
    }
}

/// Two semicubes are adjacent when they cover every vertex and overlap.
pub fn semicube_graph(emb: &HypercubeEmbedding) -> SemicubeGraph {
    let semicubes: Vec<Semicube> = (0..emb.tau())
        .flat_map(|i| {
            [0u8, 1].map(|chi| Semicube {
                coord: i,
                polarity: chi,
                members: emb.coords().iter().map(|c| c[i] == chi).collect(),
            })
        })
        .collect();
    let mut graph = Graph::new(semicubes.len());
    for a in 0..semicubes.len() {
        for b in a + 1..semicubes.len() {
            let (ma, mb) = (&semicubes[a].members, &semicubes[b].members);
            let covers = ma.iter().zip(mb).all(|(x, y)| *x || *y);
            let overlaps = ma.iter().zip(mb).any(|(x, y)| *x && *y);
            if covers && overlaps {
                graph.add_edge(a, b);
            }
        }
    }
    SemicubeGraph { semicubes, graph }
}

/// Lattice dimension `τ - |M|` for a maximum matching `M`.
pub fn lattice_dimension(tau: usize, matching: &Matching) -> usize {
    tau - matching.size()
}

/// Isometric embedding into `Z^dim`, normalized so every axis uses the
/// contiguous values `0..=max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeEmbedding {
    dim: usize,
    coords: Vec<Vec<i64>>,
}

impl LatticeEmbedding {
    /// Wraps coordinates, translating each axis to start at 0 and
    /// compressing unused values.
    pub fn new(coords: Vec<Vec<i64>>) -> Result<Self, String> {
        let dim = coords.first().map_or(0, Vec::len);
        if coords.iter().any(|c| c.len() != dim) {
            return Err("coordinate vectors differ in length".into());
        }
        let mut coords = coords;
        for axis in 0..dim {
            let mut values: Vec<i64> = coords.iter().map(|c| c[axis]).collect();
            values.sort_unstable();
            values.dedup();
            for c in coords.iter_mut() {
                c[axis] = values.binary_search(&c[axis]).expect("value present") as i64;
            }
        }
        Ok(LatticeEmbedding { dim, coords })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coords(&self) -> &[Vec<i64>] {
        &self.coords
    }

    /// Number of distinct values per axis.
    pub fn extents(&self) -> Vec<i64> {
        (0..self.dim)
            .map(|i| self.coords.iter().map(|c| c[i]).max().unwrap_or(-1) + 1)
            .collect()
    }

    /// Graph joining points at L1 distance one.
    pub fn adjacency_graph(&self) -> Graph {
        let mut g = Graph::new(self.len());
        for u in 0..self.len() {
            for v in u + 1..self.len() {
                if crate::partial_cube::l1(&self.coords[u], &self.coords[v]) == 1 {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Lattice axis along which the edge `uv` runs.
    pub fn edge_axis(&self, u: usize, v: usize) -> usize {
        (0..self.dim)
            .find(|&i| self.coords[u][i] != self.coords[v][i])
            .expect("endpoints differ")
    }

    /// True when the point set is a full product of intervals.
    pub fn is_interval_product(&self) -> bool {
        let product: Option<usize> = self
            .extents()
            .iter()
            .try_fold(1usize, |acc, &e| acc.checked_mul(e as usize));
        product == Some(self.len())
    }
}

/// Decomposes matching + complement edges into paths (semicube node lists),
/// each path starting at its endpoint with the smaller `(coord, polarity)`.
pub fn semicube_paths(tau: usize, matching: &Matching) -> Result<Vec<Vec<usize>>, LatticeError> {
    let nodes = 2 * tau;
    let mut visited = vec![false; nodes];
    let mut paths = Vec::new();
    for start in 0..nodes {
        if visited[start] || matching.mate(start).is_some() {
            continue;
        }
        let mut path = vec![start];
        visited[start] = true;
        let mut cur = start;
        loop {
            let comp = cur ^ 1;
            if visited[comp] {
                return Err(LatticeError::Internal(format!("node {comp} revisited")));
            }
            visited[comp] = true;
            path.push(comp);
            match matching.mate(comp) {
                None => break,
                Some(next) => {
                    if visited[next] {
                        return Err(LatticeError::Internal(format!("node {next} revisited")));
                    }
                    visited[next] = true;
                    path.push(next);
                    cur = next;
                }
            }
        }
        paths.push(path);
    }
    if let Some(v) = visited.iter().position(|&x| !x) {
        return Err(LatticeError::Internal(format!("semicube {v} lies on a cycle")));
    }
    Ok(paths)
}

/// Lattice embedding of dimension `τ - |M|` from a maximum matching.
///
/// Coordinate `k` of a vertex counts the semicubes at even positions along
/// path `k` that contain it.
pub fn lattice_embedding(
    emb: &HypercubeEmbedding,
    matching: &Matching,
) -> Result<LatticeEmbedding, LatticeError> {
    let paths = semicube_paths(emb.tau(), matching)?;
    let coords: Vec<Vec<i64>> = emb
        .coords()
        .iter()
        .map(|bits| {
            paths
                .iter()
                .map(|path| {
                    path.iter()
                        .step_by(2)
                        .filter(|&&node| bits[node / 2] as usize == node % 2)
                        .count() as i64
                })
                .collect()
        })
        .collect();
    let lattice = LatticeEmbedding::new(coords).map_err(LatticeError::Internal)?;
    let g = emb.adjacency_graph();
    is_isometric_embedding(&g, lattice.coords()).map_err(LatticeError::NotIsometric)?;
    Ok(lattice)
}

/// Convenience: semicube graph, maximum matching and lattice embedding.
pub fn minimum_lattice_embedding(
    emb: &HypercubeEmbedding,
) -> Result<(LatticeEmbedding, Matching), LatticeError> {
    let sg = semicube_graph(emb);
    let m = sg.maximum_matching();
    let lattice = lattice_embedding(emb, &m)?;
    Ok((lattice, m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle, path};
    use crate::partial_cube::{hypercube_embedding, theta_classes};

    fn embed(g: &Graph) -> HypercubeEmbedding {
        hypercube_embedding(g, &theta_classes(g).unwrap()).unwrap()
    }

    #[test]
    fn square_semicube_graph_is_edgeless() {
        let sg = semicube_graph(&embed(&cycle(4)));
        assert_eq!(sg.graph().n(), 4);
        assert_eq!(sg.graph().m(), 0);
    }

    #[test]
    fn path_semicube_graph_single_edge() {
        // a-b-c: class 0 = ab, class 1 = bc; a = 00, b = 10, c = 11.
        let sg = semicube_graph(&embed(&path(3)));
        assert_eq!(sg.graph().edges(), &[(1, 2)]);
        let m = sg.maximum_matching();
        assert_eq!(m.size(), 1);
        assert_eq!(lattice_dimension(2, &m), 1);
        let lat = lattice_embedding(&embed(&path(3)), &m).unwrap();
        let xs: Vec<i64> = lat.coords().iter().map(|c| c[0]).collect();
        assert_eq!(xs, vec![2, 1, 0]);
    }

    #[test]
    fn square_keeps_hypercube_dimension() {
        let emb = embed(&cycle(4));
        let (lat, m) = minimum_lattice_embedding(&emb).unwrap();
        assert_eq!(m.size(), 0);
        assert_eq!(lat.dim(), 2);
    }

    #[test]
    fn star_with_three_leaves_fits_the_plane() {
        let g = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let (lat, _) = minimum_lattice_embedding(&embed(&g)).unwrap();
        assert_eq!(lat.dim(), 2);
    }

    #[test]
    fn normalization_compresses_values() {
        let lat = LatticeEmbedding::new(vec![vec![5, -2], vec![6, -2], vec![6, 0]]).unwrap();
        assert_eq!(lat.coords(), &[vec![0, 0], vec![1, 0], vec![1, 1]]);
    }

    #[test]
    fn cyclic_structure_is_internal_error() {
        // Matching pairing (0,0)-(1,0) and (0,1)-(1,1) closes a cycle.
        let m = Matching::from_edges(4, &[(0, 2), (1, 3)]).unwrap();
        assert!(matches!(semicube_paths(2, &m), Err(LatticeError::Internal(_))));
    }
}
