use thiserror::Error;

/// Errors produced by the exact-arithmetic kernels and the scenario runner.
#[derive(Debug, Error)]
pub enum Error {
    #[error("duplicate parameter name `{0}`")]
    DuplicateParameter(String),
    #[error("reserved name `{0}` cannot be used as a parameter")]
    ReservedName(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("evaluation at a zero coordinate of a Laurent variable `{0}`")]
    ZeroCoordinate(String),
    #[error("substituting the non-unit `{0}` for a Laurent variable")]
    LaurentViolation(String),
    #[error("result is not polynomial: `{0}` does not divide `{1}`")]
    NotPolynomial(String, String),
    #[error("mismatched rings or scalar fields: {0}")]
    ContextMismatch(String),
    #[error("point has {got} coordinates, ring has {want} variables")]
    PointLength { got: usize, want: usize },
    #[error("substitution maps are not mutually inverse at variable `{0}`")]
    InverseMismatch(String),
    #[error("automorphism generators {0} and {1} do not commute")]
    NonCommutingGenerators(usize, usize),
    #[error("sigma_{i} moves a_{j}: got `{got}`, expected `{expected}`")]
    SigmaMovesForeignA {
        i: usize,
        j: usize,
        got: String,
        expected: String,
    },
    #[error("defining element a_{0} is zero")]
    ZeroDefiningElement(usize),
    #[error("elements belong to different presentations")]
    PresentationMismatch,
    #[error("p = {p} does not divide m = {m}")]
    PNotDividesM { m: u32, p: u32 },
    #[error("group of order {size} exceeds the enumeration limit {limit}")]
    GroupTooLarge { size: u64, limit: u64 },
    #[error("the scalar field has no primitive {0}-th root of unity")]
    RootOfUnityUnavailable(u32),
    #[error("unknown catalog algebra `{0}`")]
    UnknownCatalog(String),
    #[error("unknown automorphism `{0}`")]
    UnknownAutomorphism(String),
    #[error("catalog algebra `{0}` needs the parameter `{1}` in the scalar field")]
    MissingParameter(String, String),
    #[error("cannot certify Z-linear independence of sigma; set `assert_independent`")]
    IndependenceUnknown,
    #[error("element is not invariant under the configured group (witness: element {0})")]
    NotInvariant(usize),
    #[error("weight vector escapes the orbit window at tableau {0}")]
    BoundaryEscape(String),
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("invalid scenario field `{field}`: {msg}")]
    Validation { field: String, msg: String },
    #[error("scenario file error: {0}")]
    Io(#[from] std::io::Error),
    #[error("scenario JSON error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
