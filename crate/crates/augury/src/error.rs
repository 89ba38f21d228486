use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    // Display carries the io text; the field is deliberately not named
    // `source` so error chains don't print the io message twice.
    #[error("cannot read {path}: {cause}")]
    Io { path: String, cause: std::io::Error },

    #[error("{path}:{line}: {message}")]
    Parse {
        path: String,
        line: usize,
        message: String,
    },

    #[error("artifact kind mismatch: expected {expected}, found {found}")]
    ArtifactKind { expected: String, found: String },

    #[error("artifact version mismatch for {kind}: expected {expected}, found {found}")]
    ArtifactVersion {
        kind: String,
        expected: u32,
        found: u32,
    },

    #[error("artifact checksum mismatch in {path}")]
    ArtifactChecksum { path: String },

    #[error("ontology self-loop: {label} would be its own super-area")]
    OntologySelfLoop { label: String },

    #[error("no co-occurring topics for {topic}")]
    NoCoOccurringTopics { topic: String },

    #[error("undefined conditional probability: {topic} has no publications in {year}")]
    UndefinedConditional { topic: String, year: i32 },

    #[error("no cliques in window")]
    NoCliques,

    #[error("undefined percentage growth: triad class h{class} starts at zero")]
    UndefinedGrowth { class: usize },

    #[error("series needs at least two points and strictly increasing years")]
    BadSeries,

    #[error("window years must be consecutive, got {0:?}")]
    NonConsecutiveYears(Vec<i32>),

    #[error("window for {year} needs at least {needed} networks")]
    WindowTooShort { year: i32, needed: usize },

    #[error("missing topic network for {year}")]
    MissingYear { year: i32 },

    #[error("window start {start} precedes corpus coverage beginning {corpus_start}")]
    WindowBeforeCorpus { start: i32, corpus_start: i32 },

    #[error("inconsistent counts: co-occurrence {w} with publication counts {p_u} and {p_v}")]
    InconsistentCounts { w: u32, p_u: u32, p_v: u32 },

    #[error("{a}, {b}, {c} is not a clique in this network")]
    NotAClique { a: String, b: String, c: String },

    #[error("clique members must be three distinct topics")]
    DegenerateClique,

    #[error("degenerate community: no induced links")]
    DegenerateCommunity,

    #[error("topic {topic} absent from corpus")]
    TopicAbsent { topic: String },

    #[error("inactive debutant: publication vector is all zero")]
    InactiveDebutant,

    #[error("vectors must have equal length, got {left} and {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("{topic} never reaches a soft debut")]
    NoSoftDebut { topic: String },

    #[error("similarity requires non-empty topic sets")]
    EmptySets,

    #[error("similarity matrix has no rows")]
    EmptyMatrix,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}
