//! SPQR trees by repeated splitting at separation pairs.
//!
//! Parallel bundles are split off as bonds first; then any separation pair
//! splits a component into two, joined by a fresh pair of twin virtual
//! edges. Terminal components are bonds (P), cycles (S) or triconnected
//! graphs (R); adjacent S-S and P-P nodes are merged afterwards. Real edges
//! stay inside the skeletons, so Q-nodes are not materialized.

use std::collections::{BTreeMap, HashMap};

use crate::error::PlanarError;
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SkeletonEdge {
    /// Edge id in the decomposed graph.
    Real(usize),
    /// Virtual edge id, shared by exactly two skeletons.
    Virtual(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NodeKind {
    S,
    P,
    R,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpqrNode {
    pub kind: NodeKind,
    /// Skeleton edges over vertices of the decomposed graph.
    pub edges: Vec<(usize, usize, SkeletonEdge)>,
}

impl SpqrNode {
    pub fn vertices(&self) -> Vec<usize> {
        let mut vs: Vec<usize> = self.edges.iter().flat_map(|&(a, b, _)| [a, b]).collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }

    pub fn virtual_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().enumerate().filter_map(|(i, e)| match e.2 {
            SkeletonEdge::Virtual(v) => Some((i, v)),
            SkeletonEdge::Real(_) => None,
        })
    }

    pub fn real_count(&self) -> usize {
        self.edges
            .iter()
            .filter(|e| matches!(e.2, SkeletonEdge::Real(_)))
            .count()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpqrTree {
    nodes: Vec<SpqrNode>,
    /// For each virtual id, its two `(node, local edge)` occurrences.
    links: Vec<[(usize, usize); 2]>,
    root: usize,
}

impl SpqrTree {
    pub fn nodes(&self) -> &[SpqrNode] {
        &self.nodes
    }

    pub fn links(&self) -> &[[(usize, usize); 2]] {
        &self.links
    }

    pub fn root(&self) -> usize {
        self.root
    }

    /// The other occurrence of the virtual edge at `(node, local)`.
    pub fn twin_of(&self, node: usize, local: usize) -> (usize, usize) {
        let SkeletonEdge::Virtual(v) = self.nodes[node].edges[local].2 else {
            panic!("edge {local} of node {node} is real");
        };
        let [x, y] = self.links[v];
        if x == (node, local) {
            y
        } else {
            x
        }
    }

    /// Tree neighbours of `node`, as `(local edge, neighbour node)`.
    pub fn neighbors(&self, node: usize) -> Vec<(usize, usize)> {
        self.nodes[node]
            .virtual_edges()
            .map(|(i, _)| (i, self.twin_of(node, i).0))
            .collect()
    }
}

type Component = Vec<(usize, usize, SkeletonEdge)>;

fn pair(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

struct Splitter {
    next_virtual: usize,
}

impl Splitter {
    fn fresh(&mut self) -> SkeletonEdge {
        self.next_virtual += 1;
        SkeletonEdge::Virtual(self.next_virtual - 1)
    }

    /// Splits off a bundle of parallel edges, unless the component is a bond.
    fn split_bundle(&mut self, c: &Component) -> Option<(Component, Component)> {
        let mut groups: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
        for (i, &(a, b, _)) in c.iter().enumerate() {
            groups.entry(pair(a, b)).or_default().push(i);
        }
        if groups.len() == 1 {
            return None;
        }
        let (&(a, b), members) = groups.iter().find(|(_, m)| m.len() > 1)?;
        let v = self.fresh();
        let mut bond: Component = members.iter().map(|&i| c[i]).collect();
        bond.push((a, b, v));
        let mut rest: Component = c
            .iter()
            .enumerate()
            .filter(|(i, _)| !members.contains(i))
            .map(|(_, &e)| e)
            .collect();
        rest.push((a, b, v));
        Some((bond, rest))
    }

    /// Splits at the first separation pair, if any.
    fn split_pair(&mut self, c: &Component) -> Option<(Component, Component)> {
        let mut vertices: Vec<usize> = c.iter().flat_map(|&(a, b, _)| [a, b]).collect();
        vertices.sort_unstable();
        vertices.dedup();
        let index: HashMap<usize, usize> = vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        for (ia, &a) in vertices.iter().enumerate() {
            for &b in &vertices[ia + 1..] {
                let classes = separation_classes(c, &index, a, b);
                let count = classes.iter().max().map_or(0, |m| m + 1);
                if count < 2 {
                    continue;
                }
                let mut sizes = vec![0usize; count];
                for &k in &classes {
                    sizes[k] += 1;
                }
                if count == 2 && sizes.contains(&1) {
                    continue;
                }
                let Some(chosen) = (0..count).find(|&k| sizes[k] >= 2 && c.len() - sizes[k] >= 2)
                else {
                    continue;
                };
                let v = self.fresh();
                let mut part: Component = Vec::new();
                let mut rest: Component = Vec::new();
                for (i, &e) in c.iter().enumerate() {
                    if classes[i] == chosen {
                        part.push(e);
                    } else {
                        rest.push(e);
                    }
                }
                part.push((a, b, v));
                rest.push((a, b, v));
                return Some((part, rest));
            }
        }
        None
    }
}

/// Separation class of each edge relative to the pair `{a, b}`, numbered in
/// order of first appearance.
fn separation_classes(c: &Component, index: &HashMap<usize, usize>, a: usize, b: usize) -> Vec<usize> {
    let mut parent: Vec<usize> = (0..index.len()).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let inner = |x: usize| x != a && x != b;
    for &(x, y, _) in c {
        if inner(x) && inner(y) {
            let (rx, ry) = (find(&mut parent, index[&x]), find(&mut parent, index[&y]));
            parent[rx] = ry;
        }
    }
    let mut label: HashMap<usize, usize> = HashMap::new();
    let mut out = Vec::with_capacity(c.len());
    for (i, &(x, y, _)) in c.iter().enumerate() {
        let key = if inner(x) {
            find(&mut parent, index[&x])
        } else if inner(y) {
            find(&mut parent, index[&y])
        } else {
            index.len() + i
        };
        let next = label.len();
        out.push(*label.entry(key).or_insert(next));
    }
    out
}

fn classify(c: &Component) -> NodeKind {
    let first = pair(c[0].0, c[0].1);
    if c.iter().all(|&(a, b, _)| pair(a, b) == first) {
        return NodeKind::P;
    }
    let mut degree: HashMap<usize, usize> = HashMap::new();
    for &(a, b, _) in c {
        *degree.entry(a).or_default() += 1;
        *degree.entry(b).or_default() += 1;
    }
    if degree.values().all(|&d| d == 2) {
        NodeKind::S
    } else {
        NodeKind::R
    }
}

/// SPQR tree of a biconnected graph with at least three edges.
pub fn spqr_tree(g: &Graph) -> Result<SpqrTree, PlanarError> {
    if g.m() < 3 || !g.is_biconnected() {
        return Err(PlanarError::NotBiconnected);
    }
    let mut splitter = Splitter { next_virtual: 0 };
    let initial: Component = g
        .edges()
        .iter()
        .enumerate()
        .map(|(e, &(a, b))| (a, b, SkeletonEdge::Real(e)))
        .collect();
    let mut work = vec![initial];
    let mut done: Vec<(NodeKind, Component)> = Vec::new();
    while let Some(c) = work.pop() {
        if let Some((x, y)) = splitter.split_bundle(&c) {
            work.push(y);
            work.push(x);
        } else if let Some((x, y)) = splitter.split_pair(&c) {
            work.push(y);
            work.push(x);
        } else {
            done.push((classify(&c), c));
        }
    }
    merge_same_kind(&mut done, splitter.next_virtual);
    Ok(finish(g, done))
}

/// Merges S-S and P-P neighbours along their shared virtual edge.
fn merge_same_kind(done: &mut Vec<(NodeKind, Component)>, virtuals: usize) {
    loop {
        let mut owner: Vec<Vec<usize>> = vec![Vec::new(); virtuals];
        for (i, (_, c)) in done.iter().enumerate() {
            for &(_, _, e) in c {
                if let SkeletonEdge::Virtual(v) = e {
                    owner[v].push(i);
                }
            }
        }
        let hit = owner.iter().enumerate().find_map(|(v, o)| match o.as_slice() {
            [x, y] if done[*x].0 == done[*y].0 && done[*x].0 != NodeKind::R => Some((v, *x, *y)),
            _ => None,
        });
        let Some((v, x, y)) = hit else {
            return;
        };
        let shared = SkeletonEdge::Virtual(v);
        let (_, absorbed) = done.remove(y.max(x));
        let keep = &mut done[y.min(x)].1;
        keep.retain(|e| e.2 != shared);
        keep.extend(absorbed.into_iter().filter(|e| e.2 != shared));
    }
}

/// Renumbers virtual ids compactly and roots the tree at the node holding
/// real edge 0.
fn finish(g: &Graph, done: Vec<(NodeKind, Component)>) -> SpqrTree {
    let mut renumber: BTreeMap<usize, usize> = BTreeMap::new();
    for (_, c) in &done {
        for &(_, _, e) in c {
            if let SkeletonEdge::Virtual(v) = e {
                let next = renumber.len();
                renumber.entry(v).or_insert(next);
            }
        }
    }
    let mut links = vec![[(usize::MAX, usize::MAX); 2]; renumber.len()];
    let mut filled = vec![0usize; renumber.len()];
    let mut nodes = Vec::with_capacity(done.len());
    let mut root = 0;
    for (ni, (kind, c)) in done.into_iter().enumerate() {
        let edges: Vec<_> = c
            .into_iter()
            .enumerate()
            .map(|(li, (a, b, e))| match e {
                SkeletonEdge::Virtual(v) => {
                    let id = renumber[&v];
                    links[id][filled[id]] = (ni, li);
                    filled[id] += 1;
                    (a, b, SkeletonEdge::Virtual(id))
                }
                SkeletonEdge::Real(r) => {
                    if r == 0 {
                        root = ni;
                    }
                    (a, b, e)
                }
            })
            .collect();
        nodes.push(SpqrNode { kind, edges });
    }
    debug_assert!(filled.iter().all(|&f| f == 2));
    debug_assert!(g.m() > 0);
    SpqrTree { nodes, links, root }
}
