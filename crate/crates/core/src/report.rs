//! Text reports for the `analyze` and `verify` commands.

use std::fmt;

use crate::io::LoadedMedium;
use crate::medium::{graph_from_medium, medium_isomorphism, validate_medium_axioms};
use crate::partial_cube::is_isometric_embedding;
use crate::planar::{arrangement_to_medium, is_planar, recognize_and_draw, verify_symmetric, Recognition};
use crate::projection::{project, projection_vectors, verify_lattice_drawing, PlanarPlacement, PropertyReport};
use crate::semicube::{minimum_lattice_embedding, LatticeEmbedding};

/// Longest message the literal axiom checker explores when the structural
/// check fails.
pub const AXIOM_MESSAGE_LIMIT: usize = 6;

/// Outcome of one named stage: success or the failing stage and message.
pub type StageResult = Result<(), (String, String)>;

#[derive(Clone, Debug)]
pub struct AnalyzeReport {
    pub states: usize,
    pub edges: usize,
    pub tau: usize,
    pub matching: usize,
    pub lattice_dim: usize,
    pub interval_product: bool,
    pub planar: bool,
    pub drawable: StageResult,
}

impl fmt::Display for AnalyzeReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let yes = |b: bool| if b { "yes" } else { "no" };
        writeln!(f, "states: {}", self.states)?;
        writeln!(f, "edges: {}", self.edges)?;
        writeln!(f, "isometric dimension: {}", self.tau)?;
        writeln!(f, "semicube matching: {}", self.matching)?;
        writeln!(f, "lattice dimension: {}", self.lattice_dim)?;
        writeln!(f, "interval product: {}", yes(self.interval_product))?;
        writeln!(f, "planar: {}", yes(self.planar))?;
        match &self.drawable {
            Ok(()) => writeln!(f, "symmetric drawing: yes"),
            Err((stage, msg)) => writeln!(f, "symmetric drawing: no ({stage}: {msg})"),
        }
    }
}

/// Lattice embedding, matching size and its plane projection.
pub struct LatticeResult {
    pub embedding: LatticeEmbedding,
    pub matching: usize,
    pub placement: Option<PlanarPlacement>,
}

pub fn lattice(m: &LoadedMedium) -> Result<LatticeResult, String> {
    let (embedding, matching) = minimum_lattice_embedding(&m.embedding).map_err(|e| e.to_string())?;
    let placement = projection_vectors(&embedding)
        .ok()
        .map(|pv| project(&embedding, &pv));
    Ok(LatticeResult {
        embedding,
        matching: matching.size(),
        placement,
    })
}

pub fn analyze(m: &LoadedMedium) -> Result<AnalyzeReport, String> {
    let lat = lattice(m)?;
    Ok(AnalyzeReport {
        states: m.graph.n(),
        edges: m.graph.m(),
        tau: m.embedding.tau(),
        matching: lat.matching,
        lattice_dim: lat.embedding.dim(),
        interval_product: lat.embedding.is_interval_product(),
        planar: is_planar(&m.graph),
        drawable: recognize_and_draw(&m.graph)
            .map(|_| ())
            .map_err(|e| (e.stage().to_string(), e.to_string())),
    })
}

/// The `analyze` text for raw file contents; load failures become a single
/// `input error` line.
pub fn analyze_bytes(bytes: &[u8]) -> String {
    match crate::io::parse_medium_file(bytes) {
        Err(e) => format!("input error: {e}\n"),
        Ok(m) => match analyze(&m) {
            Ok(r) => r.to_string(),
            Err(e) => format!("lattice error: {e}\n"),
        },
    }
}

/// One line per invariant suite.
#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub checks: Vec<(String, StageResult)>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.1.is_ok())
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (name, r) in &self.checks {
            match r {
                Ok(()) => writeln!(f, "PASS {name}")?,
                Err((stage, msg)) if stage.is_empty() => writeln!(f, "FAIL {name}: {msg}")?,
                Err((stage, msg)) => writeln!(f, "FAIL {name}: {stage}: {msg}")?,
            }
        }
        Ok(())
    }
}

fn fail(msg: impl Into<String>) -> StageResult {
    Err((String::new(), msg.into()))
}

fn property_check(r: &PropertyReport, full: bool) -> StageResult {
    let ok = if full { r.all_passed() } else { r.core_passed() };
    if ok {
        Ok(())
    } else {
        fail(r.to_string().replace('\n', "; "))
    }
}

/// Runs every invariant suite that applies. Symmetric drawability is
/// reported as skipped rather than failed when recognition rejects.
pub fn verify(m: &LoadedMedium) -> VerifyReport {
    let mut checks: Vec<(String, StageResult)> = Vec::new();
    checks.push((
        "medium axioms".into(),
        validate_medium_axioms(&m.medium, AXIOM_MESSAGE_LIMIT).map_err(|e| (String::new(), e.to_string())),
    ));
    checks.push((
        "hypercube embedding isometric".into(),
        is_isometric_embedding(&m.graph, &m.embedding.to_lattice()).map_err(|w| (String::new(), w.to_string())),
    ));
    let transition = graph_from_medium(&m.medium);
    checks.push((
        "transition graph matches input".into(),
        if transition.m() == m.graph.m() && m.graph.edges().iter().all(|&(u, v)| transition.has_edge(u, v)) {
            Ok(())
        } else {
            fail("transition graph differs from the file's adjacency")
        },
    ));
    match lattice(m) {
        Err(e) => checks.push(("lattice embedding".into(), fail(e))),
        Ok(lat) => {
            checks.push((
                "lattice embedding isometric".into(),
                is_isometric_embedding(&m.graph, lat.embedding.coords()).map_err(|w| (String::new(), w.to_string())),
            ));
            match &lat.placement {
                None => checks.push(("lattice projection".into(), fail("degenerate lattice axes"))),
                Some(pp) => {
                    let r = verify_lattice_drawing(pp, &lat.embedding);
                    checks.push(("lattice drawing properties 1-4".into(), property_check(&r, false)));
                    if lat.embedding.is_interval_product() {
                        checks.push(("lattice drawing property 5".into(), property_check(&r, true)));
                    }
                }
            }
        }
    }
    match recognize_and_draw(&m.graph) {
        Ok(rec) => {
            checks.push(("symmetric drawing".into(), verify_symmetric(&rec.drawing).map_err(|r| (String::new(), r.to_string()))));
            checks.push(("arrangement round trip".into(), arrangement_round_trip(m, &rec)));
        }
        Err(e) => checks.push((
            format!("symmetric drawing (skipped, rejected at {})", e.stage()),
            Ok(()),
        )),
    }
    VerifyReport { checks }
}

fn arrangement_round_trip(m: &LoadedMedium, rec: &Recognition) -> StageResult {
    let cells = arrangement_to_medium(&rec.arrangement).map_err(|e| (String::new(), e.to_string()))?;
    if medium_isomorphism(&cells, &m.medium).is_some() {
        Ok(())
    } else {
        fail("arrangement medium is not isomorphic to the input")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::generate_family;
    use crate::io::load;

    #[test]
    fn analyze_weak_orders() {
        let m = load(generate_family("weak-orders", "3").unwrap()).unwrap();
        let r = analyze(&m).unwrap();
        assert_eq!((r.states, r.edges, r.tau), (13, 18, 6));
        assert!(r.planar);
        assert!(r.drawable.is_ok());
        let v = verify(&m);
        assert!(v.passed(), "{v}");
    }

    #[test]
    fn analyze_permutations() {
        let m = load(generate_family("permutations", "4").unwrap()).unwrap();
        let r = analyze(&m).unwrap();
        assert_eq!(r.tau, 6);
        assert!(r.planar);
        assert!(r.drawable.is_err());
        assert!(verify(&m).passed());
    }

    #[test]
    fn hypercube_lattice_dimension() {
        let m = load(generate_family("hypercube", "4").unwrap()).unwrap();
        let r = analyze(&m).unwrap();
        assert_eq!(r.lattice_dim, 4);
        assert!(!r.planar);
        assert_eq!(r.drawable.as_ref().unwrap_err().0, "select_embedding");
    }
}
