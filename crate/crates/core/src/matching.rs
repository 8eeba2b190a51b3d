//! Maximum cardinality matching in general graphs (Edmonds' blossom
//! algorithm, O(n^3)).

use std::collections::VecDeque;

use crate::graph::Graph;

const NONE: usize = usize::MAX;

/// A set of pairwise vertex-disjoint edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    mate: Vec<usize>,
}

impl Matching {
    pub fn empty(n: usize) -> Self {
        Matching { mate: vec![NONE; n] }
    }

    pub fn size(&self) -> usize {
        self.mate.iter().filter(|&&m| m != NONE).count() / 2
    }

    pub fn mate(&self, v: usize) -> Option<usize> {
        (self.mate[v] != NONE).then_some(self.mate[v])
    }

    /// Matched edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.mate.len())
            .filter(|&u| self.mate[u] != NONE && u < self.mate[u])
            .map(|u| (u, self.mate[u]))
            .collect()
    }

    /// Builds a matching from edges, failing if two edges share a vertex.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Option<Self> {
        let mut mate = vec![NONE; n];
        for &(u, v) in edges {
            if u == v || mate[u] != NONE || mate[v] != NONE {
                return None;
            }
            mate[u] = v;
            mate[v] = u;
        }
        Some(Matching { mate })
    }
}

struct Blossom<'a> {
    g: &'a Graph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl Blossom<'_> {
    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut on_path = vec![false; self.g.n()];
        loop {
            a = self.base[a];
            on_path[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if on_path[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// Grows an alternating tree from `root`; returns an exposed vertex
    /// reached by an augmenting path.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.g.n();
        self.used.fill(false);
        self.parent.fill(NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for (to, _) in self.g.adjacent(v).to_vec() {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.fill(false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        None
    }
}

/// Maximum cardinality matching of `g`.
pub fn maximum_matching(g: &Graph) -> Matching {
    let n = g.n();
    let mut state = Blossom {
        g,
        mate: vec![NONE; n],
        parent: vec![NONE; n],
        base: (0..n).collect(),
        used: vec![false; n],
        in_blossom: vec![false; n],
        queue: VecDeque::new(),
    };
    // Greedy start.
    for &(u, v) in g.edges() {
        if state.mate[u] == NONE && state.mate[v] == NONE {
            state.mate[u] = v;
            state.mate[v] = u;
        }
    }
    for root in 0..n {
        if state.mate[root] != NONE {
            continue;
        }
        if let Some(mut u) = state.find_path(root) {
            while u != NONE {
                let pv = state.parent[u];
                let ppv = state.mate[pv];
                state.mate[u] = pv;
                state.mate[pv] = u;
                u = ppv;
            }
        }
    }
    Matching { mate: state.mate }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle, path};

    #[test]
    fn empty_graph_has_empty_matching() {
        assert_eq!(maximum_matching(&Graph::new(4)).size(), 0);
    }

    #[test]
    fn odd_cycle_with_pendant_needs_blossom() {
        // Triangle 0-1-2 with pendants 3 (on 0) and 4 (on 1), 5 (on 2).
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (0, 3), (1, 4), (2, 5)]).unwrap();
        assert_eq!(maximum_matching(&g).size(), 3);
    }

    #[test]
    fn paths_and_cycles() {
        assert_eq!(maximum_matching(&path(2)).size(), 1);
        assert_eq!(maximum_matching(&path(5)).size(), 2);
        assert_eq!(maximum_matching(&cycle(7)).size(), 3);
        assert_eq!(maximum_matching(&cycle(8)).size(), 4);
    }

    #[test]
    fn petersen_has_perfect_matching() {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((i + 5, (i + 2) % 5 + 5));
        }
        let g = Graph::from_edges(10, edges).unwrap();
        let m = maximum_matching(&g);
        assert_eq!(m.size(), 5);
        for (u, v) in m.edges() {
            assert!(g.has_edge(u, v));
        }
    }
}
