//! Test corpora: every partial cube up to a vertex bound, seeded random
//! media, and the shipped medium files.
//!
//! Every partial cube with at least one edge is an isometric expansion of a
//! smaller one (contract any Θ-class), so growing from K1 by all expansions
//! and discarding non-partial-cubes reaches each of them.

use std::collections::HashMap;
use std::fs;
use std::path::{Path, PathBuf};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::graph::Graph;
use crate::io::{parse_file, MediumFile};
use crate::iso::{are_isomorphic, invariant};
use crate::partial_cube::theta_classes;

/// Side of a vertex in an expansion cover.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    First,
    Second,
    Both,
}

/// Expands `g` along the cover given by `sides`: vertices on both sides are
/// doubled and joined to their copy. `None` when an edge joins `First` to
/// `Second` or no vertex is on both sides.
pub fn expand(g: &Graph, sides: &[Side]) -> Option<Graph> {
    if !sides.contains(&Side::Both) {
        return None;
    }
    let crossing = |a: Side, b: Side| matches!((a, b), (Side::First, Side::Second) | (Side::Second, Side::First));
    if g.edges().iter().any(|&(u, v)| crossing(sides[u], sides[v])) {
        return None;
    }
    // Copy of `v` on the second side: `v` itself when only on the second
    // side, a fresh vertex when on both.
    let mut second = vec![usize::MAX; g.n()];
    let mut n = g.n();
    for v in 0..g.n() {
        match sides[v] {
            Side::Second => second[v] = v,
            Side::Both => {
                second[v] = n;
                n += 1;
            }
            Side::First => {}
        }
    }
    let mut h = Graph::new(n);
    for &(u, v) in g.edges() {
        if sides[u] != Side::Second && sides[v] != Side::Second {
            h.add_edge(u, v);
        }
        if sides[u] != Side::First && sides[v] != Side::First {
            h.add_edge(second[u], second[v]);
        }
    }
    for v in 0..g.n() {
        if sides[v] == Side::Both {
            h.add_edge(v, second[v]);
        }
    }
    Some(h)
}

fn is_partial_cube(g: &Graph) -> bool {
    theta_classes(g).is_ok()
}

/// Isomorphism classes of graphs, bucketed by a distance invariant.
#[derive(Default)]
struct Catalogue {
    buckets: HashMap<Vec<Vec<usize>>, Vec<usize>>,
    graphs: Vec<Graph>,
}

impl Catalogue {
    fn insert(&mut self, g: Graph) -> bool {
        let bucket = self.buckets.entry(invariant(&g)).or_default();
        if bucket.iter().any(|&i| are_isomorphic(&self.graphs[i], &g)) {
            return false;
        }
        bucket.push(self.graphs.len());
        self.graphs.push(g);
        true
    }
}

/// All partial cubes with at most `max_n` vertices, up to isomorphism,
/// ordered by vertex count.
pub fn partial_cubes_up_to(max_n: usize) -> Vec<Graph> {
    let mut cat = Catalogue::default();
    if max_n == 0 {
        return Vec::new();
    }
    cat.insert(Graph::new(1));
    for n in 1..max_n {
        let layer: Vec<Graph> = cat.graphs.iter().filter(|g| g.n() == n).cloned().collect();
        for g in &layer {
            let budget = max_n - n;
            let mut sides = vec![Side::First; n];
            // Vertex 0 is never only on the second side; swapping the sides
            // gives an isomorphic expansion.
            for_each_cover(&mut sides, 0, budget, &mut |s| {
                if let Some(h) = expand(g, s) {
                    if is_partial_cube(&h) {
                        cat.insert(h);
                    }
                }
            });
        }
    }
    let mut out = cat.graphs;
    out.sort_by_key(|g| (g.n(), g.m()));
    out
}

fn for_each_cover(sides: &mut [Side], i: usize, budget: usize, visit: &mut dyn FnMut(&[Side])) {
    if i == sides.len() {
        visit(sides);
        return;
    }
    let options: &[Side] = if i == 0 { &[Side::First, Side::Both] } else { &[Side::First, Side::Second, Side::Both] };
    for &s in options {
        if s == Side::Both && budget == 0 {
            continue;
        }
        sides[i] = s;
        for_each_cover(sides, i + 1, if s == Side::Both { budget - 1 } else { budget }, visit);
    }
    sides[i] = Side::First;
}

/// A random partial cube with `n` vertices, grown by random expansions.
pub fn random_partial_cube(rng: &mut StdRng, n: usize) -> Graph {
    let mut g = Graph::new(1);
    while g.n() < n {
        let budget = n - g.n();
        let sides: Vec<Side> = (0..g.n())
            .map(|_| match rng.gen_range(0..3) {
                0 => Side::First,
                1 => Side::Second,
                _ => Side::Both,
            })
            .collect();
        let doubled = sides.iter().filter(|&&s| s == Side::Both).count();
        if doubled == 0 || doubled > budget {
            continue;
        }
        if let Some(h) = expand(&g, &sides) {
            if is_partial_cube(&h) {
                g = h;
            }
        }
    }
    g
}

/// `count` random partial cubes with 1 to `max_n` vertices from `seed`.
pub fn random_partial_cubes(seed: u64, count: usize, max_n: usize) -> Vec<Graph> {
    let mut rng = StdRng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=max_n);
            random_partial_cube(&mut rng, n)
        })
        .collect()
}

pub fn corpus_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus")
}

/// Parses every `*.medium` file under `dir`, sorted by file name.
pub fn read_dir(dir: &Path) -> std::io::Result<Vec<(String, Result<MediumFile, crate::error::FileError>)>> {
    let mut paths: Vec<PathBuf> = fs::read_dir(dir)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "medium"))
        .collect();
    paths.sort();
    paths
        .into_iter()
        .map(|p| {
            let stem = p.file_stem().unwrap_or_default().to_string_lossy().into_owned();
            Ok((stem, parse_file(&fs::read(&p)?)))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::cycle;

    #[test]
    fn expanding_an_edge_gives_a_square() {
        let g = Graph::from_edges(2, [(0, 1)]).unwrap();
        let h = expand(&g, &[Side::Both, Side::Both]).unwrap();
        assert!(are_isomorphic(&h, &cycle(4)));
    }

    #[test]
    fn small_counts() {
        let all = partial_cubes_up_to(6);
        let count = |n: usize| all.iter().filter(|g| g.n() == n).count();
        assert_eq!((count(1), count(2), count(3), count(4)), (1, 1, 1, 3));
        // Trees on 5 vertices (3) plus C4 with a pendant edge.
        assert_eq!(count(5), 4);
        for g in &all {
            assert!(is_partial_cube(g));
        }
    }

    #[test]
    fn random_media_have_requested_size() {
        for g in random_partial_cubes(7, 20, 12) {
            assert!(g.n() >= 1 && g.n() <= 12);
            assert!(is_partial_cube(&g));
        }
    }
}
