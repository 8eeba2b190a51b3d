//! Media: finite systems of states and reversible tokens.
//!
//! Axiom 1 is checked directly. Axioms 2-4 are checked through the
//! equivalent partial cube characterization: a connected transition graph
//! that is a partial cube, with every token pair acting as one oriented
//! Θ-class. [`check_axioms_by_enumeration`] is a bounded literal checker
//! used to extract witnesses and to cross-validate at small sizes.

use std::collections::{HashMap, HashSet};

use crate::error::{MediumError, Witness};
use crate::graph::{Graph, UNREACHABLE};
use crate::iso;
use crate::partial_cube::{hypercube_embedding, theta_classes, HypercubeEmbedding};

/// States, tokens and the (total) action table. Tokens `2k` and `2k + 1`
/// form the `k`-th reverse pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Medium {
    states: Vec<String>,
    tokens: Vec<String>,
    action: Vec<Vec<usize>>,
}

impl Medium {
    pub fn states(&self) -> &[String] {
        &self.states
    }

    pub fn tokens(&self) -> &[String] {
        &self.tokens
    }

    pub fn state_count(&self) -> usize {
        self.states.len()
    }

    pub fn token_count(&self) -> usize {
        self.tokens.len()
    }

    pub fn pair_count(&self) -> usize {
        self.tokens.len() / 2
    }

    pub fn reverse(&self, token: usize) -> usize {
        token ^ 1
    }

    pub fn apply(&self, state: usize, token: usize) -> usize {
        self.action[state][token]
    }

    /// Applies a message token by token.
    pub fn apply_message(&self, state: usize, message: &[usize]) -> usize {
        message.iter().fold(state, |s, &t| self.apply(s, t))
    }

    pub fn action_table(&self) -> &[Vec<usize>] {
        &self.action
    }

    fn effective(&self, state: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.token_count()).filter(move |&t| self.action[state][t] != state)
    }
}

/// Builds a medium and validates its axioms.
///
/// `action[s][t]` is the state reached from `s` by token `t`, where token
/// `2k` is `token_pairs[k].0` and `2k + 1` is `token_pairs[k].1`.
pub fn build_medium(
    states: Vec<String>,
    token_pairs: Vec<(String, String)>,
    action: Vec<Vec<usize>>,
) -> Result<Medium, MediumError> {
    let tokens: Vec<String> = token_pairs
        .into_iter()
        .flat_map(|(a, b)| [a, b])
        .collect();
    let m = Medium {
        states,
        tokens,
        action,
    };
    let max_len = m.state_count().min(8);
    validate_medium_axioms(&m, max_len)?;
    Ok(m)
}

fn check_shape(m: &Medium) -> Result<(), MediumError> {
    let n = m.state_count();
    if n == 0 {
        return Err(MediumError::Malformed("no states".into()));
    }
    if m.action.len() != n {
        return Err(MediumError::Malformed(format!(
            "action table has {} rows for {n} states",
            m.action.len()
        )));
    }
    for (s, row) in m.action.iter().enumerate() {
        if row.len() != m.token_count() {
            return Err(MediumError::Malformed(format!(
                "row {s} has {} entries for {} tokens",
                row.len(),
                m.token_count()
            )));
        }
        if let Some(&q) = row.iter().find(|&&q| q >= n) {
            return Err(MediumError::Malformed(format!("row {s} maps to unknown state {q}")));
        }
    }
    let names: HashSet<&String> = m.tokens.iter().collect();
    if names.len() != m.tokens.len() {
        return Err(MediumError::Malformed("duplicate token names".into()));
    }
    Ok(())
}

fn check_reverse_axiom(m: &Medium) -> Result<(), MediumError> {
    for s in 0..m.state_count() {
        for t in 0..m.token_count() {
            let q = m.apply(s, t);
            if q != s && m.apply(q, m.reverse(t)) != s {
                return Err(MediumError::AxiomViolation {
                    axiom: 1,
                    witness: Witness::Transition {
                        state: s,
                        target: q,
                        token: t,
                    },
                });
            }
        }
    }
    Ok(())
}

/// Validates all four axioms.
///
/// Axioms 2-4 use the partial cube characterization; when it fails the
/// literal checker (messages up to `max_message_len`) is consulted for a
/// precise witness.
pub fn validate_medium_axioms(m: &Medium, max_message_len: usize) -> Result<(), MediumError> {
    check_shape(m)?;
    check_reverse_axiom(m)?;
    if let Some(t) = (0..m.token_count()).find(|&t| (0..m.state_count()).all(|s| m.apply(s, t) == s)) {
        return Err(MediumError::IneffectiveToken(t));
    }
    let g = graph_from_medium(m);
    let dist = g.bfs(0);
    if let Some(q) = dist.iter().position(|&d| d == UNREACHABLE) {
        return Err(MediumError::AxiomViolation {
            axiom: 2,
            witness: Witness::States { from: 0, to: q },
        });
    }
    let structural = match theta_classes(&g) {
        Err(_) => Some(Witness::Edges(g.edges().to_vec())),
        Ok(classes) => {
            let emb = hypercube_embedding(&g, &classes).expect("classes are valid");
            token_class_mismatch(m, &g, &classes, &emb).map(Witness::Token)
        }
    };
    match structural {
        None => Ok(()),
        Some(fallback) => {
            check_axioms_by_enumeration(m, max_message_len)?;
            Err(MediumError::AxiomViolation {
                axiom: 3,
                witness: fallback,
            })
        }
    }
}

/// Each token pair must act as exactly one Θ-class, in one direction, on
/// every edge of that class. Returns an offending token.
fn token_class_mismatch(
    m: &Medium,
    g: &Graph,
    classes: &crate::partial_cube::EdgeClassPartition,
    emb: &HypercubeEmbedding,
) -> Option<usize> {
    let sizes: Vec<usize> = classes.members().iter().map(Vec::len).collect();
    let mut used = vec![false; classes.count()];
    for pair in 0..m.pair_count() {
        let t = 2 * pair;
        let mut class = None;
        let mut direction = None;
        let mut count = 0;
        for s in 0..m.state_count() {
            let q = m.apply(s, t);
            if q == s {
                continue;
            }
            let e = g.edge_id(s, q).expect("transition is an edge");
            let c = classes.class_of(e);
            if *class.get_or_insert(c) != c {
                return Some(t);
            }
            let dir = emb.bit(s, c);
            if *direction.get_or_insert(dir) != dir {
                return Some(t);
            }
            count += 1;
        }
        let c = class.expect("token is effective");
        if count != sizes[c] || used[c] {
            return Some(t);
        }
        used[c] = true;
    }
    None
}

/// Literal, bounded check of the axioms by enumerating stepwise effective
/// messages of length at most `max_len`. Exponential; intended for small
/// media.
pub fn check_axioms_by_enumeration(m: &Medium, max_len: usize) -> Result<(), MediumError> {
    check_shape(m)?;
    check_reverse_axiom(m)?;
    if let Some(t) = (0..m.token_count()).find(|&t| (0..m.state_count()).all(|s| m.apply(s, t) == s)) {
        return Err(MediumError::IneffectiveToken(t));
    }
    assert!(m.token_count() <= 128, "enumeration oracle supports at most 128 tokens");
    let n = m.state_count();
    let effective: Vec<Vec<usize>> = (0..n).map(|s| m.effective(s).collect()).collect();

    // Axiom 2: consistent messages reach every state.
    for s in 0..n {
        let mut reached = vec![false; n];
        let mut seen: HashSet<(usize, u128)> = HashSet::new();
        let mut stack = vec![(s, 0u128, 0usize)];
        while let Some((cur, mask, len)) = stack.pop() {
            if !seen.insert((cur, mask)) {
                continue;
            }
            reached[cur] = true;
            if len == max_len {
                continue;
            }
            for &t in &effective[cur] {
                if mask & (1 << m.reverse(t)) == 0 {
                    stack.push((m.apply(cur, t), mask | (1 << t), len + 1));
                }
            }
        }
        if let Some(q) = reached.iter().position(|&r| !r) {
            return Err(MediumError::AxiomViolation {
                axiom: 2,
                witness: Witness::States { from: s, to: q },
            });
        }
    }

    // Axiom 3: a stepwise effective message returns iff it is balanced.
    for s in 0..n {
        let mut msg = Vec::new();
        let mut net = vec![0i32; m.pair_count()];
        if let Some(tokens) = axiom3_search(m, &effective, s, s, max_len, &mut msg, &mut net) {
            return Err(MediumError::AxiomViolation {
                axiom: 3,
                witness: Witness::Message { start: s, tokens },
            });
        }
    }

    // Axiom 4: consistent messages meeting at a state concatenate consistently.
    let mut by_end: HashMap<usize, Vec<(u128, usize, Vec<usize>)>> = HashMap::new();
    for s in 0..n {
        let mut seen = HashSet::new();
        let mut stack = vec![(s, 0u128, Vec::new())];
        while let Some((cur, mask, msg)) = stack.pop() {
            if !seen.insert((cur, mask)) {
                continue;
            }
            by_end.entry(cur).or_default().push((mask, s, msg.clone()));
            if msg.len() == max_len {
                continue;
            }
            for &t in &effective[cur] {
                if mask & (1 << m.reverse(t)) == 0 {
                    let mut next = msg.clone();
                    next.push(t);
                    stack.push((m.apply(cur, t), mask | (1 << t), next));
                }
            }
        }
    }
    let reversed = |mask: u128| -> u128 {
        (0..m.token_count())
            .filter(|&t| mask & (1 << t) != 0)
            .fold(0, |acc, t| acc | (1 << m.reverse(t)))
    };
    let mut ends: Vec<_> = by_end.into_iter().collect();
    ends.sort_by_key(|(end, _)| *end);
    for (_, list) in ends {
        for (mw, sw, w) in &list {
            let rw = reversed(*mw);
            for (mz, sz, z) in &list {
                if rw & mz != 0 {
                    return Err(MediumError::AxiomViolation {
                        axiom: 4,
                        witness: Witness::MessagePair {
                            first: (*sw, w.clone()),
                            second: (*sz, z.clone()),
                        },
                    });
                }
            }
        }
    }
    Ok(())
}

fn axiom3_search(
    m: &Medium,
    effective: &[Vec<usize>],
    start: usize,
    cur: usize,
    remaining: usize,
    msg: &mut Vec<usize>,
    net: &mut Vec<i32>,
) -> Option<Vec<usize>> {
    if !msg.is_empty() {
        let balanced = net.iter().all(|&c| c == 0);
        if (cur == start) != balanced {
            return Some(msg.clone());
        }
    }
    if remaining == 0 {
        return None;
    }
    for &t in &effective[cur] {
        let delta = if t % 2 == 0 { 1 } else { -1 };
        net[t / 2] += delta;
        msg.push(t);
        let found = axiom3_search(m, effective, start, m.apply(cur, t), remaining - 1, msg, net);
        msg.pop();
        net[t / 2] -= delta;
        if found.is_some() {
            return found;
        }
    }
    None
}

/// Transition graph: an edge `{S, Q}` whenever some token maps `S` to `Q != S`.
pub fn graph_from_medium(m: &Medium) -> Graph {
    let mut g = Graph::new(m.state_count());
    for s in 0..m.state_count() {
        for t in 0..m.token_count() {
            let q = m.apply(s, t);
            if q != s && !g.has_edge(s, q) {
                g.add_edge(s, q);
            }
        }
    }
    g
}

/// Medium of a partial cube with states named `v0, v1, ...` and tokens
/// `c{i}+` (set coordinate `i` to 1) and `c{i}-`.
pub fn medium_from_partial_cube(emb: &HypercubeEmbedding) -> Medium {
    let names = (0..emb.len()).map(|v| format!("v{v}")).collect();
    let labels = (0..emb.tau()).map(|i| format!("c{i}")).collect::<Vec<_>>();
    medium_from_partial_cube_named(emb, names, &labels)
}

/// As [`medium_from_partial_cube`], with explicit state names and one label
/// per coordinate.
pub fn medium_from_partial_cube_named(
    emb: &HypercubeEmbedding,
    names: Vec<String>,
    axis_labels: &[String],
) -> Medium {
    assert_eq!(names.len(), emb.len());
    assert_eq!(axis_labels.len(), emb.tau());
    let index: HashMap<&[u8], usize> = emb
        .coords()
        .iter()
        .enumerate()
        .map(|(v, c)| (c.as_slice(), v))
        .collect();
    let tokens = axis_labels
        .iter()
        .flat_map(|l| [format!("{l}+"), format!("{l}-")])
        .collect();
    let action = emb
        .coords()
        .iter()
        .enumerate()
        .map(|(v, c)| {
            (0..2 * emb.tau())
                .map(|t| {
                    let (i, target) = (t / 2, u8::from(t % 2 == 0));
                    if c[i] == target {
                        return v;
                    }
                    let mut flipped = c.clone();
                    flipped[i] = target;
                    index.get(flipped.as_slice()).copied().unwrap_or(v)
                })
                .collect()
        })
        .collect();
    Medium {
        states: names,
        tokens,
        action,
    }
}

/// A state bijection and token bijection commuting with the actions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MediumIsomorphism {
    pub states: Vec<usize>,
    pub tokens: Vec<usize>,
}

/// Finds an isomorphism from `a` to `b`, trying the identity state map first.
pub fn medium_isomorphism(a: &Medium, b: &Medium) -> Option<MediumIsomorphism> {
    if a.state_count() != b.state_count() || a.token_count() != b.token_count() {
        return None;
    }
    let identity: Vec<usize> = (0..a.state_count()).collect();
    if let Some(tokens) = token_map(a, b, &identity) {
        return Some(MediumIsomorphism {
            states: identity,
            tokens,
        });
    }
    let (ga, gb) = (graph_from_medium(a), graph_from_medium(b));
    let mut found = None;
    iso::for_each_isomorphism(&ga, &gb, |map| match token_map(a, b, map) {
        Some(tokens) => {
            found = Some(MediumIsomorphism {
                states: map.to_vec(),
                tokens,
            });
            true
        }
        None => false,
    });
    found
}

fn token_map(a: &Medium, b: &Medium, states: &[usize]) -> Option<Vec<usize>> {
    let columns: HashMap<Vec<usize>, usize> = (0..b.token_count())
        .map(|t| ((0..b.state_count()).map(|s| b.apply(s, t)).collect(), t))
        .collect();
    let mut used = vec![false; b.token_count()];
    let mut out = Vec::with_capacity(a.token_count());
    for t in 0..a.token_count() {
        let mut col = vec![0; a.state_count()];
        for s in 0..a.state_count() {
            col[states[s]] = states[a.apply(s, t)];
        }
        let image = *columns.get(&col)?;
        if std::mem::replace(&mut used[image], true) {
            return None;
        }
        out.push(image);
    }
    Some(out)
}
