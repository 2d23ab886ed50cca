//! Error types shared across the crate.

use thiserror::Error;

/// Errors surfaced while validating inputs, configuring a model, or evaluating it.
#[derive(Debug, Error)]
pub enum Error {
    #[error("partition cut-points must be strictly increasing (violation at index {index})")]
    PartitionNotIncreasing { index: usize },

    #[error("partition must define at least 2 intervals, got {intervals}")]
    PartitionTooSmall { intervals: usize },

    #[error("subject {id}: entry {entry} precedes partition origin {origin}")]
    EntryPrecedesPartition { id: String, entry: f64, origin: f64 },

    #[error("subject {id}: event or censoring time {time} lies beyond partition end {end}")]
    EventBeyondPartition { id: String, time: f64, end: f64 },

    #[error("subject {id}: invalid record ({reason})")]
    InvalidRecord { id: String, reason: String },

    #[error("subject {id}: time-varying covariate `{name}` has no value at or before interval {k}")]
    MissingTimeVaryingValue { id: String, name: String, k: usize },

    #[error("subject {id}: missing covariate `{name}`")]
    MissingCovariate { id: String, name: String },

    #[error("duplicate subject id `{id}`")]
    DuplicateSubjectId { id: String },

    #[error("spline configuration invalid: {reason}")]
    InvalidSplineConfig { reason: String },

    #[error("more spline terms than intervals ({terms} terms, {intervals} intervals)")]
    TooManySplineTerms { terms: usize, intervals: usize },

    #[error("penalty order {order} must be smaller than the number of spline terms {terms}")]
    PenaltyOrderTooLarge { order: usize, terms: usize },

    #[error("{submodel} design references unknown covariate `{name}`")]
    UnknownCovariate { submodel: String, name: String },

    #[error("prior-event terms are only allowed in the terminal-event design")]
    PriorEventOutsideTerminalDesign,

    #[error("{submodel} design column `{name}` has zero variance over contributing intervals")]
    ZeroVarianceColumn { submodel: String, name: String },

    #[error("{submodel} design is rank deficient; collinear columns: {names:?}")]
    CollinearColumns { submodel: String, names: Vec<String> },

    #[error("penalty weights must be zero in unstructured baseline mode")]
    PenaltyInUnstructuredMode,

    #[error("parameter vector has inconsistent block lengths ({reason})")]
    ParameterShape { reason: String },

    #[error("probability argument outside its domain: {reason}")]
    ProbabilityDomain { reason: String },

    #[error("joint-cell discriminant is negative ({value:.3e}); upstream probabilities are corrupt")]
    NegativeDiscriminant { value: f64 },

    #[error("cell probability {value:.3e} below tolerance for ({context})")]
    NegativeCellProbability { value: f64, context: String },

    #[error("non-finite {what} encountered for subject {id}")]
    NonFinite { what: String, id: String },

    #[error("objective is not finite at the initial point")]
    NonFiniteAtInit,

    #[error("empty dataset: no subject contributes any interval")]
    EmptyData,

    #[error("penalized hessian is singular; consider a larger lambda or a coarser partition")]
    SingularHessian,

    #[error("covariance diagonal entry {index} is negative ({value:.3e})")]
    NegativeVariance { index: usize, value: f64 },

    #[error("lambda grid is empty")]
    EmptyLambdaGrid,

    #[error("all lambda-grid fits failed: {statuses:?}")]
    AllFitsFailed { statuses: Vec<String> },

    #[error("simulation truth produces an invalid cell probability in interval {k}: {reason}")]
    InvalidTruth { k: usize, reason: String },

    #[error("censoring target {target} is unreachable (administrative floor {floor:.3})")]
    CensoringTargetUnreachable { target: f64, floor: f64 },

    #[error("csv error at line {line}: {message}")]
    CsvSchema { line: u64, message: String },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// True for errors caused by user input or configuration (as opposed to
    /// numerical failures discovered mid-computation).
    pub fn is_input_error(&self) -> bool {
        !matches!(
            self,
            Error::NegativeDiscriminant { .. }
                | Error::NegativeCellProbability { .. }
                | Error::NonFinite { .. }
                | Error::NonFiniteAtInit
                | Error::SingularHessian
                | Error::NegativeVariance { .. }
                | Error::AllFitsFailed { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
