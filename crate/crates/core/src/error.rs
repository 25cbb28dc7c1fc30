use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MotiveError {
    #[error("blowup center must have codimension >= 2, got {0}")]
    InvalidCodim(u32),
    #[error("not the E-polynomial of a smooth compact variety: h^{{{p},{q}}} = {value}")]
    NonPure { p: u32, q: u32, value: String },
    #[error("conjugation symmetry fails at h^{{{p},{q}}}")]
    Asymmetric { p: u32, q: u32 },
    #[error("h^{{{p},{q}}} does not fit in 64 bits")]
    Overflow { p: u32, q: u32 },
    #[error("diamond of dimension {dim} needs a {n}x{n} table", n = dim + 1)]
    BadShape { dim: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FanError {
    #[error("ray {index} is zero")]
    ZeroRay { index: usize },
    #[error("ray {index} {ray:?} is not primitive")]
    NonPrimitive { index: usize, ray: [i64; 3] },
    #[error("rays {first} and {second} coincide")]
    DuplicateRay { first: usize, second: usize },
    #[error("cone {cone} refers to missing ray {index}")]
    BadIndex { cone: usize, index: usize },
    #[error("cone {cone} repeats a ray")]
    DegenerateCone { cone: usize },
    #[error("cones {first} and {second} coincide")]
    DuplicateCone { first: usize, second: usize },
    #[error("cone {cone} has determinant {det}, fan is not smooth")]
    Singular { cone: usize, det: i64 },
    #[error("face ({0}, {1}) lies in {2} maximal cones, expected 2")]
    OpenFace(usize, usize, usize),
    #[error("cones {first} and {second} lie on the same side of their common face")]
    Overlap { first: usize, second: usize },
    #[error("ray {index} lies in no maximal cone")]
    UnusedRay { index: usize },
    #[error("cone counts give V - E + F = {0}, a complete fan needs 2")]
    EulerMismatch(i64),
    #[error("degenerate fan: {0} face")]
    Degenerate(&'static str),
    #[error("fan is not Fano: cone {cone} fails strict convexity against ray {ray}")]
    NotFano { cone: usize, ray: usize },
    #[error("no built-in fan with id {0} (ids are 1..=18)")]
    UnknownId(usize),
    #[error("fan data: {0}")]
    Data(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolytopeError {
    #[error("polytope is unbounded")]
    Unbounded,
    #[error("polytope is empty or not full-dimensional")]
    Degenerate,
    #[error("volume {0} is not an integer multiple of 1/6")]
    NonIntegralDegree(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ToricError {
    #[error(transparent)]
    Fan(#[from] FanError),
    #[error(transparent)]
    Polytope(#[from] PolytopeError),
    #[error(transparent)]
    Motive(#[from] MotiveError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BaseError {
    #[error("rational surface needs K^2 <= 9, got {0}")]
    InvalidKSquared(i64),
    #[error("genus formula is not integral: {0}")]
    NonIntegral(String),
    #[error("genus formula gives negative genus {0}")]
    Negative(i64),
    #[error("base has dimension {found}, expected {expected}")]
    WrongDimension { expected: usize, found: usize },
    #[error("base '{0}' does not record {1}")]
    MissingData(String, &'static str),
    #[error("unrecognised base descriptor '{0}'")]
    Parse(String),
    #[error(transparent)]
    Toric(#[from] ToricError),
    #[error(transparent)]
    Motive(#[from] MotiveError),
}

impl From<FanError> for BaseError {
    fn from(e: FanError) -> Self {
        BaseError::Toric(e.into())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("family '{family}' cannot be placed over base '{base}': {reason}")]
    IncompatibleBase {
        family: String,
        base: String,
        reason: String,
    },
    #[error("Shioda-Tate-Wazir for Calabi-Yau total spaces needs dimension > 2")]
    SurfaceNotApplicable,
    #[error("family '{0}' does not have a Calabi-Yau total space")]
    NotCalabiYau(String),
    #[error("base violates c1(B)c2(B) = 24 (found {0})")]
    ConstraintViolated(i64),
    #[error("non-integral intermediate value: {0}")]
    NonIntegral(String),
    #[error("family '{family}' has no value for h^{{{p},{q}}} over this base")]
    MissingEntry { family: String, p: u32, q: u32 },
    #[error("unknown family '{0}'")]
    UnknownFamily(String),
    #[error(transparent)]
    Base(#[from] BaseError),
    #[error(transparent)]
    Motive(#[from] MotiveError),
    #[error(transparent)]
    Toric(#[from] ToricError),
}
