use std::fmt;

use thiserror::Error;

/// Evidence attached to a failed medium axiom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// `action(state, token) = target` without the matching reverse transition.
    Transition {
        state: usize,
        target: usize,
        token: usize,
    },
    /// Two states with no consistent message between them.
    States { from: usize, to: usize },
    /// A message (token indices) applied to `start`.
    Message { start: usize, tokens: Vec<usize> },
    /// Two messages ending at the same state whose concatenation is inconsistent.
    MessagePair {
        first: (usize, Vec<usize>),
        second: (usize, Vec<usize>),
    },
    /// Edges of the transition graph (state pairs) involved in the failure.
    Edges(Vec<(usize, usize)>),
    /// A single token.
    Token(usize),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Transition {
                state,
                target,
                token,
            } => write!(f, "state {state} --token {token}--> {target}"),
            Witness::States { from, to } => write!(f, "states {from} and {to}"),
            Witness::Message { start, tokens } => write!(f, "message {tokens:?} from state {start}"),
            Witness::MessagePair { first, second } => write!(
                f,
                "messages {:?} from {} and {:?} from {}",
                first.1, first.0, second.1, second.0
            ),
            Witness::Edges(e) => write!(f, "edges {e:?}"),
            Witness::Token(t) => write!(f, "token {t}"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MediumError {
    #[error("axiom {axiom} violated: {witness}")]
    AxiomViolation { axiom: u8, witness: Witness },
    #[error("token {0} is never effective")]
    IneffectiveToken(usize),
    #[error("malformed medium: {0}")]
    Malformed(String),
}

/// A pair of vertices whose graph distance differs from the distance of their coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DistanceWitness {
    pub u: usize,
    pub v: usize,
    pub graph_distance: Option<usize>,
    pub coord_distance: u64,
}

impl fmt::Display for DistanceWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.graph_distance {
            Some(d) => write!(
                f,
                "vertices {} and {}: graph distance {}, coordinate distance {}",
                self.u, self.v, d, self.coord_distance
            ),
            None => write!(
                f,
                "vertices {} and {} are disconnected (coordinate distance {})",
                self.u, self.v, self.coord_distance
            ),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PartialCubeError {
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is not bipartite (odd cycle through edge {0:?})")]
    NotBipartite((usize, usize)),
    #[error("not a partial cube: edges {0:?} and {1:?} violate transitivity of the Djokovic-Winkler relation")]
    NotTransitive((usize, usize), (usize, usize)),
    #[error("not a partial cube: {0}")]
    NotIsometric(DistanceWitness),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("matching/complement structure is not a union of paths: {0}")]
    Internal(String),
    #[error("embedding is not isometric: {0}")]
    NotIsometric(DistanceWitness),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ProjectionError {
    #[error("axis {0} takes a single value")]
    DegenerateAxis(usize),
    #[error("axes {0} and {1} project to the same edge vector")]
    NonInjectiveAxes(usize, usize),
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PlanarError {
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is not biconnected")]
    NotBiconnected,
    #[error("graph is not planar")]
    NotPlanar,
    #[error("no viable embedding ({case} case at {witness})")]
    NoViableEmbedding { case: &'static str, witness: String },
    #[error("face of odd length {len}: {face:?}")]
    OddFace { face: Vec<usize>, len: usize },
    #[error("curve of class {0} is closed")]
    ClosedCurve(usize),
    #[error("curve structure does not match edge class {0}")]
    ZoneMismatch(usize),
    #[error("inconsistent placement across edge {0:?}")]
    InconsistentPlacement((usize, usize)),
    #[error("drawing rejected: {0}")]
    Rejected(String),
    #[error(transparent)]
    PartialCube(#[from] PartialCubeError),
}

impl PlanarError {
    /// Name of the recognition stage that produced this error.
    pub fn stage(&self) -> &'static str {
        match self {
            PlanarError::PartialCube(_) => "theta_classes",
            PlanarError::Disconnected
            | PlanarError::NotBiconnected
            | PlanarError::NotPlanar
            | PlanarError::NoViableEmbedding { .. } => "select_embedding",
            PlanarError::OddFace { .. }
            | PlanarError::ClosedCurve(_)
            | PlanarError::ZoneMismatch(_) => "dual_arrangement",
            PlanarError::InconsistentPlacement(_) => "place_vertices",
            PlanarError::Rejected(_) => "verify_symmetric",
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FileError {
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("coordinates are not an isometric embedding: {0}")]
    NotIsometric(DistanceWitness),
    #[error(transparent)]
    PartialCube(#[from] PartialCubeError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("unsupported family {0:?}")]
    UnsupportedFamily(String),
    #[error("{family} size {n} exceeds cap {cap}")]
    SizeCap {
        family: &'static str,
        n: usize,
        cap: usize,
    },
    #[error("invalid size {0:?}")]
    InvalidSize(String),
}
