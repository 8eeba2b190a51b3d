//! Backtracking isomorphism search for small graphs, pruned by distance
//! profiles.

use crate::graph::Graph;

/// Sorted per-vertex distance profiles; equal for isomorphic graphs.
pub fn invariant(g: &Graph) -> Vec<Vec<usize>> {
    let mut profiles: Vec<Vec<usize>> = g
        .distances()
        .into_iter()
        .map(|mut row| {
            row.sort_unstable();
            row
        })
        .collect();
    profiles.sort();
    profiles
}

/// Calls `visit` with each isomorphism `map` (vertex of `g` to vertex of
/// `h`) until it returns `true`. Returns whether a visit returned `true`.
pub fn for_each_isomorphism<F>(g: &Graph, h: &Graph, mut visit: F) -> bool
where
    F: FnMut(&[usize]) -> bool,
{
    let n = g.n();
    if n != h.n() || g.m() != h.m() {
        return false;
    }
    let dg = g.distances();
    let dh = h.distances();
    let profile = |d: &Vec<Vec<usize>>, v: usize| {
        let mut row = d[v].clone();
        row.sort_unstable();
        row
    };
    let pg: Vec<Vec<usize>> = (0..n).map(|v| profile(&dg, v)).collect();
    let ph: Vec<Vec<usize>> = (0..n).map(|v| profile(&dh, v)).collect();

    // Map vertices in BFS order of g so each new vertex touches mapped ones.
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut head = order.len();
        order.push(s);
        while head < order.len() {
            let v = order[head];
            head += 1;
            for w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    order.push(w);
                }
            }
        }
    }

    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let ctx = Ctx {
        order: &order,
        dg: &dg,
        dh: &dh,
        pg: &pg,
        ph: &ph,
    };
    extend(&ctx, 0, &mut map, &mut used, &mut visit)
}

struct Ctx<'a> {
    order: &'a [usize],
    dg: &'a [Vec<usize>],
    dh: &'a [Vec<usize>],
    pg: &'a [Vec<usize>],
    ph: &'a [Vec<usize>],
}

fn extend<F>(ctx: &Ctx<'_>, depth: usize, map: &mut [usize], used: &mut [bool], visit: &mut F) -> bool
where
    F: FnMut(&[usize]) -> bool,
{
    if depth == ctx.order.len() {
        return visit(map);
    }
    let v = ctx.order[depth];
    for w in 0..map.len() {
        if used[w] || ctx.pg[v] != ctx.ph[w] {
            continue;
        }
        let consistent = ctx.order[..depth]
            .iter()
            .all(|&x| ctx.dg[v][x] == ctx.dh[w][map[x]]);
        if !consistent {
            continue;
        }
        map[v] = w;
        used[w] = true;
        if extend(ctx, depth + 1, map, used, visit) {
            return true;
        }
        used[w] = false;
        map[v] = usize::MAX;
    }
    false
}

pub fn find_isomorphism(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    let mut out = None;
    for_each_isomorphism(g, h, |m| {
        out = Some(m.to_vec());
        true
    });
    out
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    find_isomorphism(g, h).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle, path};

    #[test]
    fn cycles_match_and_paths_do_not() {
        let relabelled = Graph::from_edges(6, [(0, 3), (3, 1), (1, 4), (4, 2), (2, 5), (5, 0)]).unwrap();
        let map = find_isomorphism(&cycle(6), &relabelled).unwrap();
        for &(u, v) in cycle(6).edges() {
            assert!(relabelled.has_edge(map[u], map[v]));
        }
        assert!(!are_isomorphic(&cycle(6), &path(6)));
    }

    #[test]
    fn counts_automorphisms_of_square() {
        let mut count = 0;
        for_each_isomorphism(&cycle(4), &cycle(4), |_| {
            count += 1;
            false
        });
        assert_eq!(count, 8);
    }
}
