use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is not an orientation-preserving isometry (determinant {det})")]
    InvalidMatrix { det: f64 },
    #[error("isometry is not hyperbolic (class {class})")]
    NotHyperbolic { class: &'static str },
    #[error("geodesics do not cross")]
    NotCrossing,
    #[error("geodesics are not disjoint")]
    NotDisjoint,
    #[error("point is an endpoint of the target geodesic")]
    DegenerateFoot,
    #[error("geodesics share an endpoint at infinity")]
    SharedEndpoint,
    #[error("degenerate boundary pair: endpoints coincide")]
    DegenerateGeodesic,
    #[error("word is trivial")]
    TrivialWord,
    #[error("invalid word character {0:?} (expected one of x, X, y, Y)")]
    BadLetter(char),
    #[error("axes coincide: conjugator stabilizes the axis")]
    SameAxis,
    #[error("cyclic word is too short (length {len}, need at least {min})")]
    WordTooShort { len: usize, min: usize },
    #[error("word maps to a parabolic or trivial isometry (peripheral class)")]
    PeripheralWord,
    #[error("matrix entries exceed the conditioning limit ({limit:e})")]
    Conditioning { limit: f64 },
    #[error("no self-intersections found at this radius")]
    NoSelfIntersections,
    #[error("no polygons found at this radius")]
    NoPolygonsFound,
    #[error("words represent the same unoriented conjugacy class")]
    SameClass,
    #[error("argument out of domain: {0}")]
    Domain(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
