use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop ({vertex}, {vertex}) is not allowed")]
    SelfLoop { vertex: usize },

    #[error("graph has {n} vertices, at most {max} are supported")]
    TooManyVertices { n: usize, max: usize },

    #[error("graph is disconnected: no path between {u} and {v}")]
    Disconnected { u: usize, v: usize },

    #[error("set is not co-resolving: its complement fails to resolve ({u}, {v})")]
    NotCoResolving { u: usize, v: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A constructive step the theory guarantees did not verify.
    #[error("internal error: {0}")]
    Internal(String),

    #[error("4^{k} default trials exceeds the guard (k > {max_k}); pass an explicit trial count")]
    TrialsOverflow { k: usize, max_k: usize },

    #[error("universal family strength {t} exceeds ground set size {n}")]
    StrengthTooLarge { t: usize, n: usize },

    #[error(
        "greedy universal family over n={n}, t={t} needs {constraints} constraints (limit {limit})"
    )]
    FamilyTooLarge {
        n: usize,
        t: usize,
        constraints: u128,
        limit: u128,
    },

    #[error("{message} (line {line})")]
    Parse { line: usize, message: String },

    #[error("invalid hitting set instance: {0}")]
    InvalidHittingSet(String),

    #[error("reduction needs n >= 2 and m >= 2, got n={n}, m={m}")]
    DegenerateReduction { n: usize, m: usize },

    #[error(
        "instance with n={n}, m={m} exceeds the verification budget (n <= {max_n}, m <= {max_m})"
    )]
    BudgetExceeded {
        n: usize,
        m: usize,
        max_n: usize,
        max_m: usize,
    },
}
