use thiserror::Error;
use treestab::census::CensusError;
use treestab::dh::DhError;
use treestab::graph::GraphError;
use treestab::spanning::SpanningError;
use treestab::stability::{CertError, StabilityError};

/// Failure classes, each with its own exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("input error: {0}")]
    Input(String),
    #[error("limit exceeded: {0}")]
    Limit(String),
    #[error("analysis failed: {0}")]
    Analysis(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Limit(_) | CliError::Analysis(_) => 1,
        }
    }
}

impl From<GraphError> for CliError {
    fn from(e: GraphError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<SpanningError> for CliError {
    fn from(e: SpanningError) -> Self {
        match e {
            SpanningError::Graph(g) => g.into(),
            SpanningError::TooManyTrees { .. } => CliError::Limit(e.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<DhError> for CliError {
    fn from(e: DhError) -> Self {
        match e {
            DhError::Graph(g) => g.into(),
            DhError::SizeGuard { .. } => CliError::Limit(e.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<CertError> for CliError {
    fn from(e: CertError) -> Self {
        match e {
            CertError::Spanning(s) => s.into(),
            other => CliError::Input(format!("malformed certificate: {other}")),
        }
    }
}

impl From<StabilityError> for CliError {
    fn from(e: StabilityError) -> Self {
        match e {
            StabilityError::Graph(g) => g.into(),
            StabilityError::Dh(d) => d.into(),
            StabilityError::Spanning(s) => s.into(),
            StabilityError::WeakGuard { .. } => CliError::Limit(e.to_string()),
            StabilityError::Certificate(c) => c.into(),
            StabilityError::Inconsistent(_) => CliError::Analysis(e.to_string()),
        }
    }
}

impl From<CensusError> for CliError {
    fn from(e: CensusError) -> Self {
        match e {
            CensusError::TooLarge { .. } => CliError::Limit(e.to_string()),
            CensusError::Analysis { .. } => CliError::Analysis(e.to_string()),
        }
    }
}
