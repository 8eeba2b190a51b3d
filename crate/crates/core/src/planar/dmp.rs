//! Path-addition planarity embedding for biconnected simple graphs
//! (Demoucron, Malgrange and Pertuiset).
//!
//! Faces are kept as oriented vertex cycles in which every directed edge
//! occurs exactly once; the rotation system is read off the faces at the end.

use std::collections::{HashMap, VecDeque};

/// Rotation system (outgoing darts per vertex, edge `e` owning darts `2e`
/// and `2e + 1`) of a planar embedding, or `None` if the graph is not planar.
///
/// The graph on vertices `0..n` with edges `ends` must be simple and
/// biconnected with at least three vertices.
pub fn planar_rotation(n: usize, ends: &[(usize, usize)]) -> Option<Vec<Vec<usize>>> {
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    let mut edge_of: HashMap<(usize, usize), usize> = HashMap::new();
    for (e, &(a, b)) in ends.iter().enumerate() {
        adj[a].push((b, e));
        adj[b].push((a, e));
        edge_of.insert((a.min(b), a.max(b)), e);
    }
    let mut v_in = vec![false; n];
    let mut e_in = vec![false; ends.len()];

    let mut faces = vec![initial_cycle(&adj, ends)?];
    for w in faces[0].clone() {
        v_in[w] = true;
    }
    let c = &faces[0];
    for i in 0..c.len() {
        let (a, b) = (c[i], c[(i + 1) % c.len()]);
        e_in[edge_of[&(a.min(b), a.max(b))]] = true;
    }
    faces.push(c.iter().rev().copied().collect());

    while e_in.iter().any(|&x| !x) {
        let fragments = fragments(&adj, ends, &v_in, &e_in);
        let mut chosen: Option<(usize, usize)> = None;
        for (fi, frag) in fragments.iter().enumerate() {
            let admissible: Vec<usize> = (0..faces.len())
                .filter(|&f| frag.attachments.iter().all(|a| faces[f].contains(a)))
                .collect();
            match admissible.len() {
                0 => return None,
                1 => {
                    chosen = Some((fi, admissible[0]));
                    break;
                }
                _ => {
                    if chosen.is_none() {
                        chosen = Some((fi, admissible[0]));
                    }
                }
            }
        }
        let (fi, f) = chosen?;
        let path = fragment_path(&adj, &fragments[fi], &v_in);
        for w in path.windows(2) {
            e_in[edge_of[&(w[0].min(w[1]), w[0].max(w[1]))]] = true;
        }
        for &w in &path {
            v_in[w] = true;
        }
        let (f1, f2) = split_face(&faces[f], &path);
        faces[f] = f1;
        faces.push(f2);
    }

    let dart = |from: usize, to: usize| {
        let e = edge_of[&(from.min(to), from.max(to))];
        if ends[e].0 == from {
            2 * e
        } else {
            2 * e + 1
        }
    };
    let mut succ: HashMap<usize, usize> = HashMap::new();
    for f in &faces {
        let l = f.len();
        for t in 0..l {
            let (u, v, w) = (f[(t + l - 1) % l], f[t], f[(t + 1) % l]);
            succ.insert(dart(v, u), dart(v, w));
        }
    }
    let mut rot = vec![Vec::new(); n];
    for (v, list) in rot.iter_mut().enumerate() {
        let Some(&(first_nbr, _)) = adj[v].first() else {
            continue;
        };
        let start = dart(v, first_nbr);
        let mut d = start;
        loop {
            list.push(d);
            d = succ[&d];
            if d == start {
                break;
            }
        }
        if list.len() != adj[v].len() {
            return None;
        }
    }
    Some(rot)
}

/// Cycle through edge 0: its endpoints plus a shortest path avoiding it.
fn initial_cycle(adj: &[Vec<(usize, usize)>], ends: &[(usize, usize)]) -> Option<Vec<usize>> {
    let (a, b) = *ends.first()?;
    let mut prev = vec![usize::MAX; adj.len()];
    prev[b] = b;
    let mut queue = VecDeque::from([b]);
    while let Some(x) = queue.pop_front() {
        for &(y, e) in &adj[x] {
            if e != 0 && prev[y] == usize::MAX {
                prev[y] = x;
                queue.push_back(y);
            }
        }
    }
    if prev[a] == usize::MAX {
        return None;
    }
    let mut back = vec![a];
    let mut x = prev[a];
    while x != b {
        back.push(x);
        x = prev[x];
    }
    back.push(b);
    back.reverse();
    // back = b, ..., a; the cycle is a, b, ..., predecessor of a.
    let mut cycle = vec![a];
    cycle.extend(&back[..back.len() - 1]);
    Some(cycle)
}

struct Fragment {
    /// Interior vertices (empty for a single chord edge).
    interior: Vec<usize>,
    /// Chord edge, for fragments without interior vertices.
    chord: Option<usize>,
    attachments: Vec<usize>,
}

fn fragments(
    adj: &[Vec<(usize, usize)>],
    ends: &[(usize, usize)],
    v_in: &[bool],
    e_in: &[bool],
) -> Vec<Fragment> {
    let mut out = Vec::new();
    for (e, &(a, b)) in ends.iter().enumerate() {
        if !e_in[e] && v_in[a] && v_in[b] {
            out.push(Fragment {
                interior: vec![],
                chord: Some(e),
                attachments: vec![a, b],
            });
        }
    }
    let mut seen = vec![false; adj.len()];
    for s in 0..adj.len() {
        if v_in[s] || seen[s] {
            continue;
        }
        seen[s] = true;
        let mut interior = vec![s];
        let mut attachments = Vec::new();
        let mut head = 0;
        while head < interior.len() {
            let x = interior[head];
            head += 1;
            for &(y, _) in &adj[x] {
                if v_in[y] {
                    if !attachments.contains(&y) {
                        attachments.push(y);
                    }
                } else if !seen[y] {
                    seen[y] = true;
                    interior.push(y);
                }
            }
        }
        attachments.sort_unstable();
        out.push(Fragment {
            interior,
            chord: None,
            attachments,
        });
    }
    out
}

/// A path through the fragment between two distinct attachments.
fn fragment_path(adj: &[Vec<(usize, usize)>], frag: &Fragment, v_in: &[bool]) -> Vec<usize> {
    if frag.chord.is_some() {
        return frag.attachments.clone();
    }
    let a = frag.attachments[0];
    let mut prev: HashMap<usize, usize> = HashMap::new();
    let mut queue = VecDeque::new();
    for &(y, _) in &adj[a] {
        if !v_in[y] && frag.interior.contains(&y) && !prev.contains_key(&y) {
            prev.insert(y, a);
            queue.push_back(y);
        }
    }
    while let Some(x) = queue.pop_front() {
        for &(y, _) in &adj[x] {
            if v_in[y] {
                if y != a {
                    let mut path = vec![y, x];
                    let mut z = x;
                    while prev[&z] != a {
                        z = prev[&z];
                        path.push(z);
                    }
                    path.push(a);
                    path.reverse();
                    return path;
                }
            } else if !prev.contains_key(&y) {
                prev.insert(y, x);
                queue.push_back(y);
            }
        }
    }
    unreachable!("fragment of a biconnected graph has two attachments")
}

/// Splits an oriented face cycle by a path joining two of its vertices.
fn split_face(face: &[usize], path: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let l = face.len();
    let a = path[0];
    let b = path[path.len() - 1];
    let i = face.iter().position(|&x| x == a).expect("attachment on face");
    let j = face.iter().position(|&x| x == b).expect("attachment on face");
    let inner = &path[1..path.len() - 1];
    let arc = |from: usize, to: usize| {
        let mut out = vec![face[from]];
        let mut k = from;
        while k != to {
            k = (k + 1) % l;
            out.push(face[k]);
        }
        out
    };
    let mut f1 = arc(i, j);
    f1.extend(inner.iter().rev());
    let mut f2 = arc(j, i);
    f2.extend(inner.iter());
    (f1, f2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planar::map::RotationSystem;

    fn check(n: usize, ends: &[(usize, usize)]) -> Option<usize> {
        let rot = planar_rotation(n, ends)?;
        let rs = RotationSystem::new(ends.to_vec(), rot).unwrap();
        assert!(rs.is_planar());
        Some(rs.faces().len())
    }

    fn complete(n: usize) -> Vec<(usize, usize)> {
        (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect()
    }

    #[test]
    fn k4_is_planar_with_four_faces() {
        assert_eq!(check(4, &complete(4)), Some(4));
    }

    #[test]
    fn k5_and_k33_are_not_planar() {
        assert_eq!(check(5, &complete(5)), None);
        let k33: Vec<_> = (0..3).flat_map(|a| (3..6).map(move |b| (a, b))).collect();
        assert_eq!(check(6, &k33), None);
    }

    #[test]
    fn cube_has_six_faces() {
        let ends: Vec<_> = (0..8usize)
            .flat_map(|v| (0..3).map(move |i| (v, v ^ (1 << i))))
            .filter(|&(a, b)| a < b)
            .collect();
        assert_eq!(check(8, &ends), Some(6));
    }

    #[test]
    fn wheel_is_planar() {
        let mut ends: Vec<_> = (1..7).map(|i| (0, i)).collect();
        ends.extend((1..7).map(|i| (i, i % 6 + 1)));
        assert_eq!(check(7, &ends), Some(7));
    }
}
