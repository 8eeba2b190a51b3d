//! Simple undirected graphs over vertices `0..n`.

use std::collections::{HashMap, VecDeque};

pub const UNREACHABLE: usize = usize::MAX;

/// A simple undirected graph. Edges are stored with `u < v` and numbered
/// in insertion order; `adj[v]` lists `(neighbor, edge id)` pairs.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<(usize, usize)>>,
    edges: Vec<(usize, usize)>,
    index: HashMap<(usize, usize), usize>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            edges: Vec::new(),
            index: HashMap::new(),
        }
    }

    /// Builds a graph from an edge list, rejecting loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, String>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(format!("edge ({u}, {v}) out of range for {n} vertices"));
            }
            if u == v {
                return Err(format!("loop at vertex {u}"));
            }
            if g.has_edge(u, v) {
                return Err(format!("duplicate edge ({u}, {v})"));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Adds edge `uv` and returns its id.
    ///
    /// Panics on loops and duplicate edges.
    pub fn add_edge(&mut self, u: usize, v: usize) -> usize {
        assert!(u != v, "loop at vertex {u}");
        let key = (u.min(v), u.max(v));
        assert!(!self.index.contains_key(&key), "duplicate edge {key:?}");
        let id = self.edges.len();
        self.edges.push(key);
        self.index.insert(key, id);
        self.adj[u].push((v, id));
        self.adj[v].push((u, id));
        id
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> (usize, usize) {
        self.edges[id]
    }

    pub fn adjacent(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().map(|&(w, _)| w)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_id(u, v).is_some()
    }

    pub fn edge_id(&self, u: usize, v: usize) -> Option<usize> {
        self.index.get(&(u.min(v), u.max(v))).copied()
    }

    /// Breadth-first distances from `src`; unreachable vertices get [`UNREACHABLE`].
    pub fn bfs(&self, src: usize) -> Vec<usize> {
        let mut dist = vec![UNREACHABLE; self.n()];
        let mut queue = VecDeque::new();
        dist[src] = 0;
        queue.push_back(src);
        while let Some(v) = queue.pop_front() {
            for &(w, _) in &self.adj[v] {
                if dist[w] == UNREACHABLE {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// All-pairs distances by repeated BFS.
    pub fn distances(&self) -> Vec<Vec<usize>> {
        (0..self.n()).map(|v| self.bfs(v)).collect()
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.bfs(0).iter().all(|&d| d != UNREACHABLE)
    }

    /// Two-coloring of a connected graph, or an edge closing an odd cycle.
    pub fn bipartition(&self) -> Result<Vec<u8>, (usize, usize)> {
        if self.n() == 0 {
            return Ok(Vec::new());
        }
        let dist = self.bfs(0);
        for &(u, v) in &self.edges {
            if dist[u] != UNREACHABLE && dist[u] % 2 == dist[v] % 2 {
                return Err((u, v));
            }
        }
        Ok(dist.iter().map(|&d| (d % 2) as u8).collect())
    }

    /// Component label per vertex, counting only the edges accepted by `keep`.
    pub fn components_with<F>(&self, keep: F) -> (usize, Vec<usize>)
    where
        F: Fn(usize) -> bool,
    {
        let mut label = vec![UNREACHABLE; self.n()];
        let mut count = 0;
        for s in 0..self.n() {
            if label[s] != UNREACHABLE {
                continue;
            }
            label[s] = count;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for &(w, e) in &self.adj[v] {
                    if keep(e) && label[w] == UNREACHABLE {
                        label[w] = count;
                        stack.push(w);
                    }
                }
            }
            count += 1;
        }
        (count, label)
    }

    /// Biconnected components as edge-id lists, plus the articulation points.
    /// Each bridge is its own one-edge block.
    pub fn blocks(&self) -> (Vec<Vec<usize>>, Vec<usize>) {
        let n = self.n();
        let mut disc = vec![UNREACHABLE; n];
        let mut low = vec![0; n];
        let mut is_cut = vec![false; n];
        let mut blocks = Vec::new();
        let mut edge_stack: Vec<usize> = Vec::new();
        let mut time = 0;

        for root in 0..n {
            if disc[root] != UNREACHABLE {
                continue;
            }
            disc[root] = time;
            low[root] = time;
            time += 1;
            let mut root_children = 0;
            // (vertex, parent edge, next adjacency index)
            let mut stack = vec![(root, UNREACHABLE, 0usize)];
            while let Some(&mut (v, pe, ref mut i)) = stack.last_mut() {
                if *i < self.adj[v].len() {
                    let (w, e) = self.adj[v][*i];
                    *i += 1;
                    if e == pe {
                        continue;
                    }
                    if disc[w] == UNREACHABLE {
                        edge_stack.push(e);
                        disc[w] = time;
                        low[w] = time;
                        time += 1;
                        if v == root {
                            root_children += 1;
                        }
                        stack.push((w, e, 0));
                    } else if disc[w] < disc[v] {
                        edge_stack.push(e);
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if let Some(&(p, _, _)) = stack.last() {
                        low[p] = low[p].min(low[v]);
                        if low[v] >= disc[p] {
                            if p != root {
                                is_cut[p] = true;
                            }
                            let mut block = Vec::new();
                            while let Some(e) = edge_stack.pop() {
                                block.push(e);
                                if e == pe {
                                    break;
                                }
                            }
                            block.sort_unstable();
                            blocks.push(block);
                        }
                    }
                }
            }
            if root_children > 1 {
                is_cut[root] = true;
            }
        }
        let cuts = (0..n).filter(|&v| is_cut[v]).collect();
        (blocks, cuts)
    }

    pub fn is_biconnected(&self) -> bool {
        self.n() >= 3 && self.is_connected() && self.blocks().0.len() == 1
    }

    /// Subgraph induced by `vertices`, relabelled in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut pos = vec![UNREACHABLE; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            pos[v] = i;
        }
        let mut g = Graph::new(vertices.len());
        for &(u, v) in &self.edges {
            if pos[u] != UNREACHABLE && pos[v] != UNREACHABLE {
                g.add_edge(pos[u], pos[v]);
            }
        }
        g
    }

    /// Graph formed by the given edge ids; vertices keep their labels.
    pub fn edge_subgraph(&self, edge_ids: &[usize]) -> Graph {
        let mut g = Graph::new(self.n());
        for &e in edge_ids {
            let (u, v) = self.edges[e];
            g.add_edge(u, v);
        }
        g
    }
}

/// Cycle graph on `n` vertices.
pub fn cycle(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle")
}

/// Path graph on `n` vertices.
pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("path")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bfs_on_cycle() {
        let g = cycle(6);
        assert_eq!(g.bfs(0), vec![0, 1, 2, 3, 2, 1]);
    }

    #[test]
    fn odd_cycle_not_bipartite() {
        assert!(cycle(5).bipartition().is_err());
        assert!(cycle(6).bipartition().is_ok());
    }

    #[test]
    fn blocks_of_two_triangles_sharing_vertex() {
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap();
        let (blocks, cuts) = g.blocks();
        assert_eq!(blocks.len(), 2);
        assert_eq!(cuts, vec![2]);
    }

    #[test]
    fn blocks_of_path_are_bridges() {
        let (blocks, cuts) = path(4).blocks();
        assert_eq!(blocks.len(), 3);
        assert!(blocks.iter().all(|b| b.len() == 1));
        assert_eq!(cuts, vec![1, 2]);
    }

    #[test]
    fn rejects_duplicate_edges() {
        assert!(Graph::from_edges(2, [(0, 1), (1, 0)]).is_err());
        assert!(Graph::from_edges(2, [(0, 0)]).is_err());
    }
}
