//! Independent oracles. None of them call the library's algorithms; they
//! work from definitions by exhaustive search and only share `Graph`.

#![allow(dead_code)]

use std::collections::{HashMap, HashSet};

use media_draw::graph::Graph;

/// All-pairs BFS distances; `usize::MAX` when unreachable.
pub fn distances(g: &Graph) -> Vec<Vec<usize>> {
    (0..g.n())
        .map(|s| {
            let mut d = vec![usize::MAX; g.n()];
            d[s] = 0;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for w in g.neighbors(u) {
                    if d[w] == usize::MAX {
                        d[w] = d[u] + 1;
                        queue.push_back(w);
                    }
                }
            }
            d
        })
        .collect()
}

/// Maximum matching size by memoised search over vertex subsets (n <= 20).
pub fn max_matching_dp(g: &Graph) -> usize {
    let n = g.n();
    assert!(n <= 20);
    let adj: Vec<u32> = (0..n).map(|v| g.neighbors(v).fold(0u32, |m, w| m | 1 << w)).collect();
    let mut memo: HashMap<u32, usize> = HashMap::new();
    fn go(mask: u32, adj: &[u32], memo: &mut HashMap<u32, usize>) -> usize {
        if mask == 0 {
            return 0;
        }
        if let Some(&r) = memo.get(&mask) {
            return r;
        }
        let v = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << v);
        let mut best = go(rest, adj, memo);
        let mut nb = adj[v] & rest;
        while nb != 0 {
            let u = nb.trailing_zeros();
            nb &= nb - 1;
            best = best.max(1 + go(rest & !(1 << u), adj, memo));
        }
        memo.insert(mask, best);
        best
    }
    go((1u32 << n) - 1, &adj, &mut memo)
}

/// Djokovic relation classes by definition: edges `xy`, `uv` are related
/// when `d(x,u) + d(y,v) != d(x,v) + d(y,u)`. Returns the classes if the
/// graph is connected, bipartite and the relation is transitive, which
/// characterises partial cubes.
pub fn partial_cube_classes(g: &Graph) -> Option<Vec<usize>> {
    let d = distances(g);
    if g.n() == 0 || d[0].contains(&usize::MAX) {
        return None;
    }
    let e = g.edges();
    if e.iter().any(|&(x, y)| d[0][x] % 2 == d[0][y] % 2) {
        return None;
    }
    let related = |a: usize, b: usize| {
        let ((x, y), (u, v)) = (e[a], e[b]);
        d[x][u] + d[y][v] != d[x][v] + d[y][u]
    };
    let mut class = vec![usize::MAX; e.len()];
    let mut count = 0;
    for a in 0..e.len() {
        if class[a] != usize::MAX {
            continue;
        }
        for b in 0..e.len() {
            if related(a, b) {
                if class[b] != usize::MAX {
                    return None;
                }
                class[b] = count;
            }
        }
        count += 1;
    }
    // Transitivity: members of one class are pairwise related.
    for a in 0..e.len() {
        for b in a + 1..e.len() {
            if (class[a] == class[b]) != related(a, b) {
                return None;
            }
        }
    }
    Some(class)
}

/// Bit vectors from the classes: bit `i` is set when vertex `v` is closer to
/// the far end of a class-`i` edge than to its near end (relative to vertex 0).
pub fn hypercube_bits(g: &Graph, class: &[usize]) -> Vec<Vec<u8>> {
    let d = distances(g);
    let tau = class.iter().map(|c| c + 1).max().unwrap_or(0);
    let mut rep = vec![usize::MAX; tau];
    for (e, &c) in class.iter().enumerate() {
        if rep[c] == usize::MAX {
            rep[c] = e;
        }
    }
    (0..g.n())
        .map(|v| {
            rep.iter()
                .map(|&e| {
                    let (x, y) = g.edge(e);
                    let (near, far) = if d[0][x] < d[0][y] { (x, y) } else { (y, x) };
                    u8::from(d[v][far] < d[v][near])
                })
                .collect()
        })
        .collect()
}

pub fn is_partial_cube(g: &Graph) -> bool {
    partial_cube_classes(g).is_some()
}

/// Minimum lattice dimension by search: every Θ-class gets an axis and a
/// sign; classes sharing an axis must never move a pair of vertices in
/// opposite directions along it. Axes are opened in order and the first
/// class on an axis is positive.
pub fn brute_lattice_dimension(g: &Graph) -> usize {
    let class = partial_cube_classes(g).expect("partial cube");
    let bits = hypercube_bits(g, &class);
    let tau = bits.first().map_or(0, Vec::len);
    // patterns[i][j]: which (bit i, bit j) combinations occur.
    let mut present = vec![vec![[[false; 2]; 2]; tau]; tau];
    for b in &bits {
        for i in 0..tau {
            for j in 0..tau {
                present[i][j][b[i] as usize][b[j] as usize] = true;
            }
        }
    }
    // Same-axis conflict: some u, v with s_i (b_i(u) - b_i(v)) = 1 and
    // s_j (b_j(u) - b_j(v)) = -1.
    let conflict = |i: usize, si: i8, j: usize, sj: i8| {
        let hi = |s: i8| if s > 0 { 1 } else { 0 };
        let (ui, vi) = (hi(si), 1 - hi(si));
        let (uj, vj) = (1 - hi(sj), hi(sj));
        present[i][j][ui][uj] && present[i][j][vi][vj]
    };
    for d in 0..=tau {
        let mut axis = vec![usize::MAX; tau];
        let mut sign = vec![1i8; tau];
        if assign(0, d, 0, &mut axis, &mut sign, &conflict) {
            return d;
        }
    }
    unreachable!("tau axes always suffice")
}

fn assign(
    i: usize,
    d: usize,
    opened: usize,
    axis: &mut [usize],
    sign: &mut [i8],
    conflict: &dyn Fn(usize, i8, usize, i8) -> bool,
) -> bool {
    if i == axis.len() {
        return true;
    }
    for a in 0..d.min(opened + 1) {
        let signs: &[i8] = if a == opened { &[1] } else { &[1, -1] };
        for &s in signs {
            if (0..i).any(|j| axis[j] == a && conflict(i, s, j, sign[j])) {
                continue;
            }
            axis[i] = a;
            sign[i] = s;
            if assign(i + 1, d, opened.max(a + 1), axis, sign, conflict) {
                return true;
            }
        }
    }
    axis[i] = usize::MAX;
    false
}

/// Canonical form by minimising the sorted edge list over all vertex
/// permutations (n <= 7).
pub fn canonical(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.n();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Vec<(usize, usize)>> = None;
    loop {
        let mut e: Vec<(usize, usize)> = g
            .edges()
            .iter()
            .map(|&(a, b)| (perm[a].min(perm[b]), perm[a].max(perm[b])))
            .collect();
        e.sort_unstable();
        if best.as_ref().is_none_or(|b| e < *b) {
            best = Some(e);
        }
        let Some(i) = (1..n).rev().find(|&i| perm[i - 1] < perm[i]) else {
            break;
        };
        let j = (i..n).rev().find(|&j| perm[j] > perm[i - 1]).unwrap();
        perm.swap(i - 1, j);
        perm[i..].reverse();
    }
    best.unwrap_or_default()
}

/// Number of isomorphism classes of partial cubes on exactly `n` vertices,
/// from all labelled graphs (n <= 6).
pub fn count_partial_cubes(n: usize) -> usize {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    let mut seen: HashSet<Vec<(usize, usize)>> = HashSet::new();
    for mask in 0u32..1 << pairs.len() {
        // A partial cube on n vertices has at least n - 1 edges.
        if (mask.count_ones() as usize) + 1 < n {
            continue;
        }
        let edges = pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &p)| p);
        let g = Graph::from_edges(n, edges).unwrap();
        if is_partial_cube(&g) {
            seen.insert(canonical(&g));
        }
    }
    seen.len()
}

/// Number of planar rotation systems of a connected graph, by trying every
/// combination of cyclic orders and checking Euler's formula.
pub fn count_planar_rotations(g: &Graph) -> usize {
    let n = g.n();
    let m = g.m();
    // Darts 2e (u -> v) and 2e + 1 (v -> u) for edge e = (u, v).
    let out: Vec<Vec<usize>> = (0..n)
        .map(|v| {
            g.adjacent(v)
                .iter()
                .map(|&(_, e)| if g.edge(e).0 == v { 2 * e } else { 2 * e + 1 })
                .collect()
        })
        .collect();
    let orders: Vec<Vec<Vec<usize>>> = out.iter().map(|d| cyclic_orders(d)).collect();
    let mut choice = vec![0usize; n];
    let mut count = 0;
    loop {
        let mut next = vec![0usize; 2 * m];
        for v in 0..n {
            let o = &orders[v][choice[v]];
            for k in 0..o.len() {
                next[o[k]] = o[(k + 1) % o.len()];
            }
        }
        // Face successor: twin, then next around the head.
        let mut seen = vec![false; 2 * m];
        let mut faces = 0;
        for s in 0..2 * m {
            if seen[s] {
                continue;
            }
            faces += 1;
            let mut d = s;
            while !seen[d] {
                seen[d] = true;
                d = next[d ^ 1];
            }
        }
        if n + faces == m + 2 {
            count += 1;
        }
        let mut v = 0;
        loop {
            if v == n {
                return count;
            }
            choice[v] += 1;
            if choice[v] < orders[v].len() {
                break;
            }
            choice[v] = 0;
            v += 1;
        }
    }
}

/// Cyclic orders of `items` with the first item fixed in front.
fn cyclic_orders(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 2 {
        return vec![items.to_vec()];
    }
    let mut rest: Vec<usize> = items[1..].to_vec();
    rest.sort_unstable();
    let mut out = Vec::new();
    loop {
        let mut o = vec![items[0]];
        o.extend(&rest);
        out.push(o);
        let k = rest.len();
        let Some(i) = (1..k).rev().find(|&i| rest[i - 1] < rest[i]) else {
            return out;
        };
        let j = (i..k).rev().find(|&j| rest[j] > rest[i - 1]).unwrap();
        rest.swap(i - 1, j);
        rest[i..].reverse();
    }
}

/// Random simple graph with `n` vertices and edge probability `p`.
pub fn random_graph(rng: &mut impl rand::Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::new(n);
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(a, b);
            }
        }
    }
    g
}
