//! Partial cube recognition: Djokovic-Winkler edge classes and isometric
//! hypercube coordinates.

use crate::error::{DistanceWitness, PartialCubeError};
use crate::graph::{Graph, UNREACHABLE};

/// Partition of the edges of a graph into Θ-classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeClassPartition {
    class_of: Vec<usize>,
    count: usize,
}

impl EdgeClassPartition {
    pub fn new(class_of: Vec<usize>, count: usize) -> Self {
        debug_assert!(class_of.iter().all(|&c| c < count));
        EdgeClassPartition { class_of, count }
    }

    /// Isometric dimension τ.
    pub fn count(&self) -> usize {
        self.count
    }

    pub fn class_of(&self, edge: usize) -> usize {
        self.class_of[edge]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.class_of
    }

    /// Edge ids grouped by class.
    pub fn members(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.count];
        for (e, &c) in self.class_of.iter().enumerate() {
            out[c].push(e);
        }
        out
    }
}

/// Per-vertex 0/1 coordinates in the hypercube of dimension τ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypercubeEmbedding {
    coords: Vec<Vec<u8>>,
    tau: usize,
}

impl HypercubeEmbedding {
    /// Wraps raw bit vectors; every coordinate must take both values.
    pub fn new(coords: Vec<Vec<u8>>) -> Result<Self, String> {
        let tau = coords.first().map_or(0, |c| c.len());
        if coords.iter().any(|c| c.len() != tau) {
            return Err("coordinate vectors differ in length".into());
        }
        if coords.iter().flatten().any(|&b| b > 1) {
            return Err("hypercube coordinates must be 0 or 1".into());
        }
        for i in 0..tau {
            let ones = coords.iter().filter(|c| c[i] == 1).count();
            if ones == 0 || ones == coords.len() {
                return Err(format!("coordinate {i} is constant"));
            }
        }
        Ok(HypercubeEmbedding { coords, tau })
    }

    pub fn tau(&self) -> usize {
        self.tau
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coords(&self) -> &[Vec<u8>] {
        &self.coords
    }

    pub fn bit(&self, v: usize, i: usize) -> u8 {
        self.coords[v][i]
    }

    pub fn to_lattice(&self) -> Vec<Vec<i64>> {
        self.coords
            .iter()
            .map(|c| c.iter().map(|&b| b as i64).collect())
            .collect()
    }

    /// Graph on the coordinate vectors with an edge per Hamming-distance-1 pair.
    pub fn adjacency_graph(&self) -> Graph {
        let mut g = Graph::new(self.len());
        let packed = pack(&self.coords);
        for u in 0..self.len() {
            for v in u + 1..self.len() {
                if hamming(&packed[u], &packed[v]) == 1 {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }
}

fn pack(coords: &[Vec<u8>]) -> Vec<Vec<u64>> {
    coords
        .iter()
        .map(|c| {
            let mut words = vec![0u64; c.len().div_ceil(64)];
            for (i, &b) in c.iter().enumerate() {
                if b == 1 {
                    words[i / 64] |= 1 << (i % 64);
                }
            }
            words
        })
        .collect()
}

fn hamming(a: &[u64], b: &[u64]) -> u64 {
    a.iter().zip(b).map(|(x, y)| (x ^ y).count_ones() as u64).sum()
}

/// Computes the Θ-classes of `g`, rejecting graphs that are not partial cubes.
///
/// Each unclassified edge `uv` contributes the cut between `W_uv` and
/// `W_vu`; the cuts must be disjoint and the resulting coordinates must be
/// an isometry.
pub fn theta_classes(g: &Graph) -> Result<EdgeClassPartition, PartialCubeError> {
    if !g.is_connected() {
        return Err(PartialCubeError::Disconnected);
    }
    g.bipartition().map_err(PartialCubeError::NotBipartite)?;

    let mut class_of = vec![UNREACHABLE; g.m()];
    let mut count = 0;
    for e in 0..g.m() {
        if class_of[e] != UNREACHABLE {
            continue;
        }
        let (u, v) = g.edge(e);
        let du = g.bfs(u);
        let dv = g.bfs(v);
        for (f, &(x, y)) in g.edges().iter().enumerate() {
            if (du[x] < dv[x]) != (du[y] < dv[y]) {
                if class_of[f] != UNREACHABLE {
                    return Err(PartialCubeError::NotTransitive(g.edge(e), (x, y)));
                }
                class_of[f] = count;
            }
        }
        count += 1;
    }
    let classes = EdgeClassPartition::new(class_of, count);
    hypercube_embedding(g, &classes)?;
    Ok(classes)
}

/// Coordinates from class cuts: bit `i` of `v` is 1 iff class `i`
/// separates `v` from vertex 0.
pub fn hypercube_embedding(
    g: &Graph,
    classes: &EdgeClassPartition,
) -> Result<HypercubeEmbedding, PartialCubeError> {
    let tau = classes.count();
    let mut coords = vec![vec![0u8; tau]; g.n()];
    for i in 0..tau {
        let (parts, label) = g.components_with(|e| classes.class_of(e) != i);
        if parts != 2 {
            let members = &classes.members()[i];
            return Err(PartialCubeError::NotTransitive(
                g.edge(members[0]),
                g.edge(members[members.len() - 1]),
            ));
        }
        for v in 0..g.n() {
            coords[v][i] = u8::from(label[v] != label[0]);
        }
    }
    let packed = pack(&coords);
    if let Err(w) = check_isometry(g, |u, v| hamming(&packed[u], &packed[v])) {
        return Err(PartialCubeError::NotIsometric(w));
    }
    Ok(HypercubeEmbedding { coords, tau })
}

/// Checks that graph distance equals L1 distance for every vertex pair.
///
/// On failure the witness is the mismatched pair with the smallest
/// coordinate distance (ties broken by vertex order).
pub fn is_isometric_embedding(g: &Graph, coords: &[Vec<i64>]) -> Result<(), DistanceWitness> {
    assert_eq!(coords.len(), g.n(), "coordinates must cover every vertex");
    check_isometry(g, |u, v| l1(&coords[u], &coords[v]))
}

pub fn l1(a: &[i64], b: &[i64]) -> u64 {
    assert_eq!(a.len(), b.len(), "coordinate vectors differ in length");
    a.iter().zip(b).map(|(x, y)| x.abs_diff(*y)).sum()
}

fn check_isometry<F>(g: &Graph, coord_distance: F) -> Result<(), DistanceWitness>
where
    F: Fn(usize, usize) -> u64,
{
    let mut best: Option<DistanceWitness> = None;
    for u in 0..g.n() {
        let dist = g.bfs(u);
        for v in u + 1..g.n() {
            let c = coord_distance(u, v);
            let d = (dist[v] != UNREACHABLE).then_some(dist[v]);
            if d != Some(c as usize) && best.is_none_or(|b| c < b.coord_distance) {
                best = Some(DistanceWitness {
                    u,
                    v,
                    graph_distance: d,
                    coord_distance: c,
                });
            }
        }
    }
    best.map_or(Ok(()), Err)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle, path};

    #[test]
    fn square_has_two_classes_of_opposite_edges() {
        let g = cycle(4);
        let c = theta_classes(&g).unwrap();
        assert_eq!(c.count(), 2);
        assert_eq!(c.class_of(0), c.class_of(2));
        assert_eq!(c.class_of(1), c.class_of(3));
        assert_ne!(c.class_of(0), c.class_of(1));
    }

    #[test]
    fn path_has_singleton_classes() {
        let c = theta_classes(&path(3)).unwrap();
        assert_eq!(c.count(), 2);
    }

    #[test]
    fn hexagon_pairs_opposite_edges() {
        let g = cycle(6);
        let c = theta_classes(&g).unwrap();
        assert_eq!(c.count(), 3);
        for e in 0..3 {
            assert_eq!(c.class_of(e), c.class_of(e + 3));
        }
        let emb = hypercube_embedding(&g, &c).unwrap();
        // Following the cuts around the cycle from vertex 0.
        let weights: Vec<usize> = emb
            .coords()
            .iter()
            .map(|b| b.iter().filter(|&&x| x == 1).count())
            .collect();
        assert_eq!(weights, vec![0, 1, 2, 3, 2, 1]);
    }

    #[test]
    fn grid_4x3_has_five_classes() {
        let mut g = Graph::new(12);
        for r in 0..3 {
            for c in 0..4 {
                let v = r * 4 + c;
                if c + 1 < 4 {
                    g.add_edge(v, v + 1);
                }
                if r + 1 < 3 {
                    g.add_edge(v, v + 4);
                }
            }
        }
        let classes = theta_classes(&g).unwrap();
        assert_eq!(classes.count(), 5);
        let emb = hypercube_embedding(&g, &classes).unwrap();
        // Unary codes: the far corner differs from vertex 0 in every coordinate.
        assert!(emb.coords()[11].iter().all(|&b| b == 1));
    }

    #[test]
    fn rejects_odd_cycle_and_k23() {
        assert!(matches!(
            theta_classes(&cycle(5)),
            Err(PartialCubeError::NotBipartite(_))
        ));
        let k23 = Graph::from_edges(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
        assert!(theta_classes(&k23).is_err());
    }

    #[test]
    fn single_edge_is_isometric() {
        let g = path(2);
        assert!(is_isometric_embedding(&g, &[vec![0], vec![1]]).is_ok());
    }

    #[test]
    fn isometry_witness_prefers_closest_pair() {
        // Path 0-1-2-3 drawn as a unit square: 0 and 3 are one unit apart.
        let g = path(4);
        let coords = vec![vec![0, 0], vec![1, 0], vec![1, 1], vec![0, 1]];
        let w = is_isometric_embedding(&g, &coords).unwrap_err();
        assert_eq!((w.u, w.v, w.graph_distance, w.coord_distance), (0, 3, Some(3), 1));
    }
}
