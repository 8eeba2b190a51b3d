//! Linear projection of lattice embeddings onto the integer plane.
//!
//! Axis weights are chosen one axis at a time so that consecutive slices of
//! the embedding occupy disjoint x ranges (and, in reverse axis order,
//! disjoint y ranges).

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::error::ProjectionError;
use crate::semicube::LatticeEmbedding;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectionVectors {
    pub x: Vec<i64>,
    pub y: Vec<i64>,
}

/// Largest overlap between consecutive slices along `axis`, measured by
/// `partial`, plus one; at least 1.
fn separating_weight(emb: &LatticeEmbedding, axis: usize, partial: &[i64]) -> i64 {
    let extent = emb.extents()[axis];
    let mut lo_max = vec![i64::MIN; extent as usize];
    let mut hi_min = vec![i64::MAX; extent as usize];
    for (c, &s) in emb.coords().iter().zip(partial) {
        let j = c[axis] as usize;
        lo_max[j] = lo_max[j].max(s);
        hi_min[j] = hi_min[j].min(s);
    }
    (1..extent as usize)
        .map(|j| lo_max[j - 1] - hi_min[j] + 1)
        .max()
        .unwrap_or(1)
        .max(1)
}

/// Computes the projection vectors of a normalized embedding.
pub fn projection_vectors(emb: &LatticeEmbedding) -> Result<ProjectionVectors, ProjectionError> {
    let d = emb.dim();
    if let Some(axis) = emb.extents().iter().position(|&e| e < 2) {
        return Err(ProjectionError::DegenerateAxis(axis));
    }
    if d == 0 {
        return Ok(ProjectionVectors { x: vec![], y: vec![] });
    }
    if d == 1 {
        return Ok(ProjectionVectors { x: vec![1], y: vec![0] });
    }
    let n = emb.len();
    let mut x = vec![0i64; d];
    let mut partial = vec![0i64; n];
    for i in 1..d {
        for (s, c) in partial.iter_mut().zip(emb.coords()) {
            *s += x[i - 1] * c[i - 1];
        }
        x[i] = separating_weight(emb, i, &partial);
    }
    let mut y = vec![0i64; d];
    partial.fill(0);
    for i in (0..d - 1).rev() {
        for (s, c) in partial.iter_mut().zip(emb.coords()) {
            *s += y[i + 1] * c[i + 1];
        }
        y[i] = separating_weight(emb, i, &partial);
    }
    let mut seen: HashMap<(i64, i64), usize> = HashMap::new();
    for i in 0..d {
        if let Some(&j) = seen.get(&(x[i], y[i])) {
            return Err(ProjectionError::NonInjectiveAxes(j, i));
        }
        seen.insert((x[i], y[i]), i);
    }
    Ok(ProjectionVectors { x, y })
}

/// Integer vertex positions plus edges tagged with their lattice axis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanarPlacement {
    pub pos: Vec<(i64, i64)>,
    pub edges: Vec<(usize, usize, usize)>,
}

/// Maps each point `p` to `(X·p, Y·p)`, translated so the bounding box
/// starts at the origin.
pub fn project(emb: &LatticeEmbedding, pv: &ProjectionVectors) -> PlanarPlacement {
    let dot = |w: &[i64], c: &[i64]| w.iter().zip(c).map(|(a, b)| a * b).sum::<i64>();
    let mut pos: Vec<(i64, i64)> = emb
        .coords()
        .iter()
        .map(|c| (dot(&pv.x, c), dot(&pv.y, c)))
        .collect();
    let min_x = pos.iter().map(|p| p.0).min().unwrap_or(0);
    let min_y = pos.iter().map(|p| p.1).min().unwrap_or(0);
    for p in pos.iter_mut() {
        p.0 -= min_x;
        p.1 -= min_y;
    }
    let g = emb.adjacency_graph();
    let edges = g
        .edges()
        .iter()
        .map(|&(u, v)| (u, v, emb.edge_axis(u, v)))
        .collect();
    PlanarPlacement { pos, edges }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PropertyStatus {
    Pass,
    Fail(String),
    NotApplicable,
}

impl PropertyStatus {
    pub fn passed(&self) -> bool {
        !matches!(self, PropertyStatus::Fail(_))
    }
}

impl fmt::Display for PropertyStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PropertyStatus::Pass => write!(f, "pass"),
            PropertyStatus::Fail(w) => write!(f, "FAIL ({w})"),
            PropertyStatus::NotApplicable => write!(f, "n/a"),
        }
    }
}

/// Outcome of the five drawing properties.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyReport {
    pub distinct: PropertyStatus,
    pub straight: PropertyStatus,
    pub separation: PropertyStatus,
    pub translates: PropertyStatus,
    pub product_area: PropertyStatus,
    pub width: i64,
    pub height: i64,
}

impl PropertyReport {
    pub fn area(&self) -> i64 {
        self.width * self.height
    }

    /// Properties 1-4.
    pub fn core_passed(&self) -> bool {
        [&self.distinct, &self.straight, &self.separation, &self.translates]
            .iter()
            .all(|s| s.passed())
    }

    pub fn all_passed(&self) -> bool {
        self.core_passed() && self.product_area.passed()
    }
}

impl fmt::Display for PropertyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "distinct vertices:     {}", self.distinct)?;
        writeln!(f, "straight edges:        {}", self.straight)?;
        writeln!(f, "vertex-edge distance:  {}", self.separation)?;
        writeln!(f, "parallel iff translate:{}", self.translates)?;
        writeln!(f, "product area:          {}", self.product_area)?;
        write!(f, "bounding box:          {}x{}", self.width, self.height)
    }
}

/// True when point `r` is at Euclidean distance at least 1 from segment `pq`.
fn far_from_segment(p: (i64, i64), q: (i64, i64), r: (i64, i64)) -> bool {
    let (dx, dy) = ((q.0 - p.0) as i128, (q.1 - p.1) as i128);
    let (wx, wy) = ((r.0 - p.0) as i128, (r.1 - p.1) as i128);
    let len2 = dx * dx + dy * dy;
    let t = wx * dx + wy * dy;
    if t <= 0 {
        return wx * wx + wy * wy >= 1;
    }
    if t >= len2 {
        let (ux, uy) = ((r.0 - q.0) as i128, (r.1 - q.1) as i128);
        return ux * ux + uy * uy >= 1;
    }
    // dist^2 = |w|^2 - t^2 / len2
    (wx * wx + wy * wy) * len2 - t * t >= len2
}

fn contiguous(values: impl Iterator<Item = i64>) -> bool {
    let set: BTreeSet<i64> = values.collect();
    match (set.first(), set.last()) {
        (Some(&lo), Some(&hi)) => (hi - lo + 1) as usize == set.len(),
        _ => true,
    }
}

/// Checks the drawing properties of a projected lattice embedding.
pub fn verify_lattice_drawing(pp: &PlanarPlacement, emb: &LatticeEmbedding) -> PropertyReport {
    let n = pp.pos.len();

    let mut at: HashMap<(i64, i64), usize> = HashMap::new();
    let mut distinct = PropertyStatus::Pass;
    for (v, &p) in pp.pos.iter().enumerate() {
        if let Some(&u) = at.get(&p) {
            distinct = PropertyStatus::Fail(format!("vertices {u} and {v} both at {p:?}"));
            break;
        }
        at.insert(p, v);
    }

    let mut separation = PropertyStatus::Pass;
    'outer: for &(u, v, _) in &pp.edges {
        for r in 0..n {
            if r != u && r != v && !far_from_segment(pp.pos[u], pp.pos[v], pp.pos[r]) {
                separation = PropertyStatus::Fail(format!("vertex {r} too close to edge ({u}, {v})"));
                break 'outer;
            }
        }
    }

    let mut translates = PropertyStatus::Pass;
    let mut axis_vector: HashMap<usize, (i64, i64)> = HashMap::new();
    let mut vector_axis: HashMap<(i64, i64), usize> = HashMap::new();
    for &(u, v, axis) in &pp.edges {
        let (lo, hi) = if emb.coords()[u][axis] < emb.coords()[v][axis] {
            (u, v)
        } else {
            (v, u)
        };
        let mut vec = (pp.pos[hi].0 - pp.pos[lo].0, pp.pos[hi].1 - pp.pos[lo].1);
        if *axis_vector.entry(axis).or_insert(vec) != vec {
            translates = PropertyStatus::Fail(format!("edges of axis {axis} are not translates"));
            break;
        }
        if vec < (0, 0) {
            vec = (-vec.0, -vec.1);
        }
        if *vector_axis.entry(vec).or_insert(axis) != axis {
            translates = PropertyStatus::Fail(format!(
                "axes {} and {axis} share edge vector {vec:?}",
                vector_axis[&vec]
            ));
            break;
        }
    }

    let span = |f: fn(&(i64, i64)) -> i64| {
        let lo = pp.pos.iter().map(f).min().unwrap_or(0);
        let hi = pp.pos.iter().map(f).max().unwrap_or(-1);
        hi - lo + 1
    };
    let (width, height) = (span(|p| p.0), span(|p| p.1));

    let product_area = if !emb.is_interval_product() {
        PropertyStatus::NotApplicable
    } else if !contiguous(pp.pos.iter().map(|p| p.0)) {
        PropertyStatus::Fail("gap in x coordinates".into())
    } else if !contiguous(pp.pos.iter().map(|p| p.1)) {
        PropertyStatus::Fail("gap in y coordinates".into())
    } else if width * height > (n * n) as i64 {
        PropertyStatus::Fail(format!("area {} exceeds n^2 = {}", width * height, n * n))
    } else {
        PropertyStatus::Pass
    };

    PropertyReport {
        distinct,
        straight: PropertyStatus::Pass,
        separation,
        translates,
        product_area,
        width,
        height,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid(sides: &[i64]) -> LatticeEmbedding {
        let mut coords = vec![vec![]];
        for &s in sides {
            coords = coords
                .into_iter()
                .flat_map(|c: Vec<i64>| {
                    (0..s).map(move |x| {
                        let mut c = c.clone();
                        c.push(x);
                        c
                    })
                })
                .collect();
        }
        LatticeEmbedding::new(coords).unwrap()
    }

    #[test]
    fn hypercube_weights_are_powers_of_two() {
        let pv = projection_vectors(&grid(&[2; 6])).unwrap();
        assert_eq!(pv.x, vec![0, 1, 2, 4, 8, 16]);
        assert_eq!(pv.y, vec![16, 8, 4, 2, 1, 0]);
    }

    #[test]
    fn three_by_three_grid() {
        let pv = projection_vectors(&grid(&[3, 3])).unwrap();
        assert_eq!(pv.x, vec![0, 1]);
        assert_eq!(pv.y, vec![1, 0]);
    }

    #[test]
    fn path_is_horizontal() {
        let pv = projection_vectors(&grid(&[4])).unwrap();
        assert_eq!((pv.x, pv.y), (vec![1], vec![0]));
    }

    #[test]
    fn square_projection() {
        let emb = grid(&[2, 2]);
        let pp = project(&emb, &projection_vectors(&emb).unwrap());
        // coords (p0, p1): 00, 01, 10, 11
        assert_eq!(pp.pos, vec![(0, 0), (1, 0), (0, 1), (1, 1)]);
    }

    #[test]
    fn q6_top_vertex_and_box() {
        let emb = grid(&[2; 6]);
        let pp = project(&emb, &projection_vectors(&emb).unwrap());
        assert_eq!(pp.pos[63], (31, 31));
        assert_eq!(pp.pos[0], (0, 0));
        let report = verify_lattice_drawing(&pp, &emb);
        assert!(report.all_passed(), "{report}");
        assert_eq!((report.width, report.height), (32, 32));
    }

    #[test]
    fn grid_3x4_area() {
        let emb = grid(&[3, 4]);
        let pp = project(&emb, &projection_vectors(&emb).unwrap());
        let report = verify_lattice_drawing(&pp, &emb);
        assert!(report.all_passed(), "{report}");
        assert!(report.area() <= 144);
    }

    #[test]
    fn collision_is_reported() {
        let emb = grid(&[2, 2]);
        let mut pp = project(&emb, &projection_vectors(&emb).unwrap());
        pp.pos[3] = pp.pos[0];
        let report = verify_lattice_drawing(&pp, &emb);
        assert!(matches!(report.distinct, PropertyStatus::Fail(_)));
    }

    #[test]
    fn segment_distance_is_exact() {
        assert!(far_from_segment((0, 0), (2, 0), (1, 1)));
        assert!(!far_from_segment((0, 0), (4, 1), (2, 1)));
        assert!(far_from_segment((0, 0), (1, 0), (2, 0)));
    }

    #[test]
    fn degenerate_axis_rejected() {
        let emb = LatticeEmbedding::new(vec![vec![0, 0], vec![1, 0]]).unwrap();
        assert_eq!(projection_vectors(&emb), Err(ProjectionError::DegenerateAxis(1)));
    }
}
