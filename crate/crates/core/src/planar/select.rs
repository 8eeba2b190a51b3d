//! Choice of the planar embedding whose outer face can carry the curve ends
//! of a weak pseudoline arrangement.
//!
//! Each SPQR node gets a skeleton rotation and a designated face: the part of
//! its skeleton that lies on the outer face of the whole graph. Designated
//! faces must contain every virtual edge of the skeleton. When a parent's
//! designated face runs through virtual edge `s -> t`, the child's must run
//! through its twin as `t -> s`; the glued faces then merge into one.

use std::collections::VecDeque;

use crate::error::PlanarError;
use crate::graph::Graph;
use crate::planar::dmp::planar_rotation;
use crate::planar::map::{PlanarEmbedding, RotationSystem};
use crate::planar::spqr::{spqr_tree, NodeKind, SkeletonEdge, SpqrTree};

/// Upper bound on the number of embeddings handed to later stages.
pub const MAX_CANDIDATES: usize = 64;

#[derive(Clone, Debug)]
struct NodeChoice {
    system: RotationSystem,
    face: Vec<usize>,
}

/// Skeleton of a node as a rotation system over the graph's vertex ids.
fn skeleton_ends(tree: &SpqrTree, node: usize) -> Vec<(usize, usize)> {
    tree.nodes()[node].edges.iter().map(|&(a, b, _)| (a, b)).collect()
}

fn dart_from(ends: &[(usize, usize)], e: usize, tail: usize) -> usize {
    if ends[e].0 == tail {
        2 * e
    } else {
        2 * e + 1
    }
}

fn cycle_system(n: usize, ends: Vec<(usize, usize)>) -> RotationSystem {
    let mut rot = vec![Vec::new(); n];
    for (e, &(a, b)) in ends.iter().enumerate() {
        rot[a].push(2 * e);
        rot[b].push(2 * e + 1);
    }
    RotationSystem::new(ends, rot).expect("cycle rotation")
}

/// Bond with the given cyclic order of its edges around the first endpoint.
fn bond_system(n: usize, ends: Vec<(usize, usize)>, order: &[usize]) -> RotationSystem {
    let s = ends[0].0;
    let t = ends[0].1;
    let mut rot = vec![Vec::new(); n];
    rot[s] = order.iter().map(|&e| dart_from(&ends, e, s)).collect();
    rot[t] = order.iter().rev().map(|&e| dart_from(&ends, e, t)).collect();
    RotationSystem::new(ends, rot).expect("bond rotation")
}

fn rigid_system(n: usize, ends: Vec<(usize, usize)>) -> Option<RotationSystem> {
    let mut vs: Vec<usize> = ends.iter().flat_map(|&(a, b)| [a, b]).collect();
    vs.sort_unstable();
    vs.dedup();
    let local = |v: usize| vs.binary_search(&v).expect("skeleton vertex");
    let local_ends: Vec<(usize, usize)> = ends.iter().map(|&(a, b)| (local(a), local(b))).collect();
    let local_rot = planar_rotation(vs.len(), &local_ends)?;
    let mut rot = vec![Vec::new(); n];
    for (i, darts) in local_rot.into_iter().enumerate() {
        rot[vs[i]] = darts;
    }
    Some(RotationSystem::new(ends, rot).expect("rigid rotation"))
}

/// All cyclic orders of `0..k` with 0 first.
fn cyclic_orders(k: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, rest: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest.is_empty() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..rest.len() {
            let x = rest.remove(i);
            prefix.push(x);
            rec(prefix, rest, out);
            prefix.pop();
            rest.insert(i, x);
        }
    }
    let mut out = Vec::new();
    rec(&mut vec![0], &mut (1..k).collect(), &mut out);
    out
}

/// Nodes in breadth-first order from the root, with the local edge leading
/// to each node's parent.
fn rooted_order(tree: &SpqrTree) -> (Vec<usize>, Vec<Option<(usize, usize, usize)>>) {
    let n = tree.nodes().len();
    // parent[node] = (parent node, parent's local edge, node's local edge)
    let mut parent: Vec<Option<(usize, usize, usize)>> = vec![None; n];
    let mut seen = vec![false; n];
    let mut order = vec![tree.root()];
    seen[tree.root()] = true;
    let mut queue = VecDeque::from([tree.root()]);
    while let Some(x) = queue.pop_front() {
        for (li, _) in tree.nodes()[x].virtual_edges() {
            let (y, yl) = tree.twin_of(x, li);
            if !seen[y] {
                seen[y] = true;
                parent[y] = Some((x, li, yl));
                order.push(y);
                queue.push_back(y);
            }
        }
    }
    (order, parent)
}

fn face_has_edge(face: &[usize], e: usize) -> bool {
    face.iter().any(|&d| d / 2 == e)
}

/// Candidate choices for one node given the dart its designated face must
/// contain (`None` at the root).
fn node_options(
    tree: &SpqrTree,
    node: usize,
    n: usize,
    rigid: &Option<RotationSystem>,
    required: Option<usize>,
) -> Result<Vec<NodeChoice>, PlanarError> {
    let skel = &tree.nodes()[node];
    let ends = skeleton_ends(tree, node);
    let virtuals: Vec<usize> = skel.virtual_edges().map(|(i, _)| i).collect();
    let holds = |face: &[usize]| {
        virtuals.iter().all(|&e| face_has_edge(face, e)) && required.is_none_or(|r| face.contains(&r))
    };
    let mut out = Vec::new();
    match skel.kind {
        NodeKind::S => {
            let system = cycle_system(n, ends);
            let anchor = required.unwrap_or(0);
            let face = system.faces().into_iter().find(|f| f.contains(&anchor)).expect("dart on a face");
            out.push(NodeChoice { system, face });
        }
        NodeKind::P => {
            if skel.edges.len() != 3 || skel.real_count() != 1 {
                return Err(PlanarError::NoViableEmbedding {
                    case: "parallel",
                    witness: format!(
                        "split pair {:?} with {} edges, {} real",
                        (ends[0].0, ends[0].1),
                        skel.edges.len(),
                        skel.real_count()
                    ),
                });
            }
            let orders: &[&[usize]] = if required.is_none() { &[&[0, 1, 2]] } else { &[&[0, 1, 2], &[0, 2, 1]] };
            for order in orders {
                let system = bond_system(n, ends.clone(), order);
                for face in system.faces() {
                    if holds(&face) {
                        out.push(NodeChoice { system: system.clone(), face });
                    }
                }
            }
        }
        NodeKind::R => {
            let base = rigid.clone().expect("rigid rotation computed");
            let systems = if required.is_none() { vec![base] } else { vec![base.clone(), base.mirrored()] };
            let mut found: Vec<NodeChoice> = Vec::new();
            for system in systems {
                for face in system.faces() {
                    if holds(&face) {
                        found.push(NodeChoice { system: system.clone(), face });
                    }
                }
            }
            if virtuals.is_empty() {
                let max = found.iter().map(|c| c.face.len()).max().unwrap_or(0);
                found.retain(|c| c.face.len() == max);
            }
            found.sort_by_key(|c| std::cmp::Reverse(c.face.len()));
            out = found;
        }
    }
    if out.is_empty() {
        let case = match skel.kind {
            NodeKind::S => "series",
            NodeKind::P => "parallel",
            NodeKind::R => "rigid",
        };
        return Err(PlanarError::NoViableEmbedding {
            case,
            witness: format!("skeleton on vertices {:?}", skel.vertices()),
        });
    }
    Ok(out)
}

/// Rotation at `v` obtained by expanding virtual edges into the adjacent
/// skeletons; starts after `from` (a local edge of `node`) if given.
fn expand(
    g: &Graph,
    tree: &SpqrTree,
    systems: &[RotationSystem],
    node: usize,
    v: usize,
    from: Option<usize>,
    out: &mut Vec<usize>,
) {
    let sys = &systems[node];
    let list = sys.rotation(v);
    let start = match from {
        Some(l) => list.iter().position(|&d| d / 2 == l).expect("virtual edge at vertex") + 1,
        None => 0,
    };
    let count = if from.is_some() { list.len() - 1 } else { list.len() };
    for k in 0..count {
        let d = list[(start + k) % list.len()];
        match tree.nodes()[node].edges[d / 2].2 {
            SkeletonEdge::Real(e) => out.push(dart_from(g.edges(), e, v)),
            SkeletonEdge::Virtual(_) => {
                let (cn, cl) = tree.twin_of(node, d / 2);
                expand(g, tree, systems, cn, v, Some(cl), out);
            }
        }
    }
}

fn assemble(g: &Graph, tree: &SpqrTree, systems: &[RotationSystem]) -> RotationSystem {
    let mut home = vec![usize::MAX; g.n()];
    for (i, node) in tree.nodes().iter().enumerate() {
        for v in node.vertices() {
            if home[v] == usize::MAX {
                home[v] = i;
            }
        }
    }
    let rot: Vec<Vec<usize>> = (0..g.n())
        .map(|v| {
            let mut out = Vec::new();
            expand(g, tree, systems, home[v], v, None, &mut out);
            out
        })
        .collect();
    RotationSystem::new(g.edges().to_vec(), rot).expect("assembled rotation")
}

/// Real darts of the designated faces, as darts of `g`.
fn designated_real_darts(g: &Graph, tree: &SpqrTree, order: &[usize], choices: &[NodeChoice]) -> Vec<usize> {
    let mut out = Vec::new();
    for &node in order {
        let c = &choices[node];
        for &d in &c.face {
            if let SkeletonEdge::Real(e) = tree.nodes()[node].edges[d / 2].2 {
                out.push(dart_from(g.edges(), e, c.system.tail(d)));
            }
        }
    }
    out
}

/// Candidate embeddings of a biconnected graph, most plausible first.
fn biconnected_candidates(g: &Graph) -> Result<Vec<PlanarEmbedding>, PlanarError> {
    let tree = spqr_tree(g)?;
    let n = g.n();
    let rigid: Vec<Option<RotationSystem>> = (0..tree.nodes().len())
        .map(|i| match tree.nodes()[i].kind {
            NodeKind::R => rigid_system(n, skeleton_ends(&tree, i)).map(Some).ok_or(PlanarError::NotPlanar),
            _ => Ok(None),
        })
        .collect::<Result<_, _>>()?;
    let (order, parent) = rooted_order(&tree);

    let mut results = Vec::new();
    let mut first_error = None;
    let mut slots: Vec<Option<NodeChoice>> = vec![None; tree.nodes().len()];
    search(
        &SearchCtx { g, tree: &tree, rigid: &rigid, order: &order, parent: &parent },
        0,
        &mut slots,
        &mut results,
        &mut first_error,
    );
    if results.is_empty() {
        return Err(first_error.unwrap_or(PlanarError::NoViableEmbedding {
            case: "rigid",
            witness: "no consistent designated faces".into(),
        }));
    }
    Ok(results)
}

struct SearchCtx<'a> {
    g: &'a Graph,
    tree: &'a SpqrTree,
    rigid: &'a [Option<RotationSystem>],
    order: &'a [usize],
    parent: &'a [Option<(usize, usize, usize)>],
}

fn search(
    ctx: &SearchCtx<'_>,
    depth: usize,
    slots: &mut Vec<Option<NodeChoice>>,
    results: &mut Vec<PlanarEmbedding>,
    first_error: &mut Option<PlanarError>,
) {
    if results.len() >= MAX_CANDIDATES {
        return;
    }
    if depth == ctx.order.len() {
        let choices: Vec<NodeChoice> = slots.iter().map(|c| c.clone().expect("all nodes chosen")).collect();
        let systems: Vec<RotationSystem> = choices.iter().map(|c| c.system.clone()).collect();
        let system = assemble(ctx.g, ctx.tree, &systems);
        let outer = designated_real_darts(ctx.g, ctx.tree, ctx.order, &choices);
        let Ok(pe) = PlanarEmbedding::new(ctx.g, system, outer[0]) else {
            return;
        };
        let face = pe.outer_index();
        if outer.iter().all(|&d| pe.face_of(d) == face) {
            results.push(pe);
        } else {
            debug_assert!(false, "designated faces did not merge");
        }
        return;
    }
    let node = ctx.order[depth];
    let required = ctx.parent[node].map(|(p, pl, own)| {
        let pc = slots[p].as_ref().expect("parent chosen first");
        let pd = *pc.face.iter().find(|&&d| d / 2 == pl).expect("virtual edge on designated face");
        let head = pc.system.head(pd);
        dart_from(&skeleton_ends(ctx.tree, node), own, head)
    });
    match node_options(ctx.tree, node, ctx.g.n(), &ctx.rigid[node], required) {
        Ok(options) => {
            for choice in options {
                slots[node] = Some(choice);
                search(ctx, depth + 1, slots, results, first_error);
                slots[node] = None;
            }
        }
        Err(e) => {
            if first_error.is_none() {
                *first_error = Some(e);
            }
        }
    }
}

/// Every embedding of a biconnected graph reachable by flipping rigid
/// skeletons and permuting bonds, with every face tried as the outer face.
pub fn enumerate_embeddings(g: &Graph) -> Result<Vec<PlanarEmbedding>, PlanarError> {
    let tree = spqr_tree(g)?;
    let n = g.n();
    let mut per_node: Vec<Vec<RotationSystem>> = Vec::new();
    for i in 0..tree.nodes().len() {
        let ends = skeleton_ends(&tree, i);
        per_node.push(match tree.nodes()[i].kind {
            NodeKind::S => vec![cycle_system(n, ends)],
            NodeKind::P => cyclic_orders(ends.len())
                .iter()
                .map(|o| bond_system(n, ends.clone(), o))
                .collect(),
            NodeKind::R => {
                let base = rigid_system(n, ends).ok_or(PlanarError::NotPlanar)?;
                vec![base.mirrored(), base]
            }
        });
    }
    let mut out = Vec::new();
    let mut pick = vec![0usize; per_node.len()];
    loop {
        let systems: Vec<RotationSystem> = pick.iter().zip(&per_node).map(|(&k, s)| s[k].clone()).collect();
        let system = assemble(g, &tree, &systems);
        for face in system.faces() {
            out.push(PlanarEmbedding::new(g, system.clone(), face[0]).map_err(|_| PlanarError::NotPlanar)?);
        }
        let mut i = 0;
        loop {
            if i == pick.len() {
                return Ok(out);
            }
            pick[i] += 1;
            if pick[i] < per_node[i].len() {
                break;
            }
            pick[i] = 0;
            i += 1;
        }
    }
}

/// Planarity of an arbitrary simple graph: every block must be planar.
pub fn is_planar(g: &Graph) -> bool {
    if quick_nonplanar(g) {
        return false;
    }
    let (blocks, _) = g.blocks();
    blocks.iter().filter(|b| b.len() > 1).all(|block| {
        let mut vs: Vec<usize> = block.iter().flat_map(|&e| [g.edge(e).0, g.edge(e).1]).collect();
        vs.sort_unstable();
        vs.dedup();
        let bg = g.induced(&vs);
        planar_rotation(bg.n(), bg.edges()).is_some()
    })
}

fn quick_nonplanar(g: &Graph) -> bool {
    let (n, m) = (g.n(), g.m());
    if n < 3 {
        return false;
    }
    m > 3 * n - 6 || (g.bipartition().is_ok() && m > 2 * n - 4)
}

/// Embedding candidates of one block, in the block's own edge numbering.
fn block_candidates(bg: &Graph) -> Result<Vec<PlanarEmbedding>, PlanarError> {
    if bg.m() == 1 {
        let rs = RotationSystem::new(bg.edges().to_vec(), vec![vec![0], vec![1]]).expect("edge");
        return Ok(vec![PlanarEmbedding::new(bg, rs, 0).expect("edge embedding")]);
    }
    biconnected_candidates(bg)
}

/// Candidate embeddings for recognition, most plausible first.
pub fn select_embeddings(g: &Graph) -> Result<Vec<PlanarEmbedding>, PlanarError> {
    if !g.is_connected() {
        return Err(PlanarError::Disconnected);
    }
    if g.m() == 0 {
        return Ok(vec![PlanarEmbedding::trivial(g)]);
    }
    if quick_nonplanar(g) {
        return Err(PlanarError::NotPlanar);
    }
    let (blocks, cuts) = g.blocks();
    if blocks.len() == 1 {
        return block_candidates(g);
    }

    // Per block: candidates lifted to g's darts, with cut vertices outside.
    struct Lifted {
        rot: Vec<Vec<usize>>,
        outer: Vec<usize>,
    }
    let mut per_block: Vec<Vec<Lifted>> = Vec::new();
    for block in &blocks {
        let mut vs: Vec<usize> = block.iter().flat_map(|&e| [g.edge(e).0, g.edge(e).1]).collect();
        vs.sort_unstable();
        vs.dedup();
        let bg = g.induced(&vs);
        let lift = |d: usize| 2 * block[d / 2] + d % 2;
        let mut lifted = Vec::new();
        for pe in block_candidates(&bg)? {
            let outer: Vec<usize> = pe.outer_face().iter().map(|&d| lift(d)).collect();
            let on_outer = |v: usize| outer.iter().any(|&d| g.edge(d / 2).0 == v || g.edge(d / 2).1 == v);
            if !vs.iter().filter(|v| cuts.contains(v)).all(|&v| on_outer(v)) {
                continue;
            }
            let mut rot = vec![Vec::new(); g.n()];
            for (i, &v) in vs.iter().enumerate() {
                rot[v] = pe.system().rotation(i).iter().map(|&d| lift(d)).collect();
            }
            lifted.push(Lifted { rot, outer });
        }
        if lifted.is_empty() {
            let cut = vs.iter().copied().find(|v| cuts.contains(v)).unwrap_or(vs[0]);
            return Err(PlanarError::NoViableEmbedding {
                case: "articulation",
                witness: format!("cut vertex {cut} off the outer face of its block"),
            });
        }
        per_block.push(lifted);
    }

    let head = |d: usize| {
        let (a, b) = g.edge(d / 2);
        if d % 2 == 0 {
            b
        } else {
            a
        }
    };
    let mut out = Vec::new();
    let mut pick = vec![0usize; per_block.len()];
    loop {
        let mut rot: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
        for v in 0..g.n() {
            for (b, cands) in per_block.iter().enumerate() {
                let c = &cands[pick[b]];
                if c.rot[v].is_empty() {
                    continue;
                }
                let list = &c.rot[v];
                // Enter the block through its outer-face corner at v. Only
                // cut vertices need one; others lie in this block alone.
                let start = match c.outer.iter().position(|&d| head(d) == v) {
                    Some(k) => {
                        let d_out = c.outer[(k + 1) % c.outer.len()];
                        list.iter().position(|&d| d == d_out).expect("outer dart at vertex")
                    }
                    None => 0,
                };
                rot[v].extend((0..list.len()).map(|i| list[(start + i) % list.len()]));
            }
        }
        let first = &per_block[0][pick[0]];
        let system = RotationSystem::new(g.edges().to_vec(), rot).expect("merged rotation");
        if let Ok(pe) = PlanarEmbedding::new(g, system, first.outer[0]) {
            let face = pe.outer_index();
            let merged = per_block
                .iter()
                .zip(&pick)
                .all(|(c, &k)| c[k].outer.iter().all(|&d| pe.face_of(d) == face));
            debug_assert!(merged, "block outer faces did not merge");
            if merged {
                out.push(pe);
            }
        }
        if out.len() >= MAX_CANDIDATES {
            break;
        }
        let mut i = 0;
        loop {
            if i == pick.len() {
                return finish(out);
            }
            pick[i] += 1;
            if pick[i] < per_block[i].len() {
                break;
            }
            pick[i] = 0;
            i += 1;
        }
    }
    finish(out)
}

fn finish(out: Vec<PlanarEmbedding>) -> Result<Vec<PlanarEmbedding>, PlanarError> {
    if out.is_empty() {
        Err(PlanarError::NoViableEmbedding {
            case: "articulation",
            witness: "block embeddings do not merge".into(),
        })
    } else {
        Ok(out)
    }
}

/// The first candidate of [`select_embeddings`].
pub fn select_embedding(g: &Graph) -> Result<PlanarEmbedding, PlanarError> {
    select_embeddings(g).map(|mut v| v.swap_remove(0))
}
