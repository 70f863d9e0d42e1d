use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty input: {0}")]
    EmptyInput(&'static str),
    #[error("empty simplex")]
    EmptySimplex,
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("missing face {{{}}} of simplex {{{}}}", .face.join(","), .simplex.join(","))]
    MissingFace { face: Vec<String>, simplex: Vec<String> },
    #[error("duplicate element `{0}`")]
    DuplicateElement(String),
    #[error("relation `{0} < {1}` is not a strict partial order (cycle or reflexive pair)")]
    NotAnOrder(String, String),
    #[error("quiver has an oriented cycle")]
    CyclicQuiver,
    #[error("arrow `{0}` is a loop")]
    LoopArrow(String),
    #[error("duplicate arrow id `{0}`")]
    DuplicateArrow(String),
    #[error("parallel arrows between `{0}` and `{1}`")]
    ParallelArrows(String, String),
    #[error("arrow `{0}` is parallel to a longer path")]
    NotOrdered(String),
    #[error("structure is not connected")]
    Disconnected,
    #[error("unknown basepoint `{0}`")]
    UnknownBasepoint(String),
    #[error("malformed walk: {0}")]
    MalformedWalk(String),
    #[error("not an edge-path: `{0}` and `{1}` are not adjacent")]
    NotAnEdgePath(String, String),
    #[error("generator `{0}` used in a relator but not declared")]
    UnknownGenerator(String),
    #[error("hom count needs {needed} checks, budget is {budget}")]
    TargetTooLarge { needed: u128, budget: u128 },
    #[error("characteristic {0} is not 0 or a prime")]
    NonPrimeCharacteristic(u64),
    #[error("completions of the pieces do not cover the completion of the whole quiver")]
    CoverViolation,
    #[error("`{0}` is not a subquiver of the whole quiver")]
    NotASubquiver(&'static str),
    #[error("piece `{0}` is disconnected")]
    DisconnectedPiece(&'static str),
    #[error("basepoint `{0}` is not a vertex of the intersection quiver")]
    BadBasepoint(String),
    #[error("cannot read file: {0}")]
    Io(String),
    #[error("line {line}: syntax error: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: duplicate id `{id}`")]
    DuplicateId { line: usize, id: String },
    #[error("line {line}: unknown label `{label}`")]
    UnknownLabel { line: usize, label: String },
}

impl Error {
    /// Source line for parse errors.
    pub fn line(&self) -> Option<usize> {
        match self {
            Error::Syntax { line, .. }
            | Error::DuplicateId { line, .. }
            | Error::UnknownLabel { line, .. } => Some(*line),
            _ => None,
        }
    }
}
