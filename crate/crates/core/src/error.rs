use thiserror::Error;

/// Errors surfaced by the geometry pipeline.
#[derive(Debug, Error)]
pub enum HxrError {
    #[error("point outside {chart} domain: {detail}")]
    DomainViolation { chart: String, detail: String },

    #[error("chart mismatch: {0}")]
    ChartMismatch(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("operation unsupported in this chart: {0}")]
    UnsupportedChart(String),

    #[error("degenerate geodesic: {0}")]
    DegenerateGeodesic(String),

    #[error("immersion failure at parameter {at:?}: {detail}")]
    ImmersionFailure { at: Vec<f64>, detail: String },

    #[error("non-transversal intersection at parameter {at:?} (measure {measure:.3e})")]
    NonTransversal { at: Vec<f64>, measure: f64 },

    #[error("numerical breakdown: {0}")]
    Numerical(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, HxrError>;

impl HxrError {
    pub fn domain(chart: impl Into<String>, detail: impl Into<String>) -> Self {
        HxrError::DomainViolation {
            chart: chart.into(),
            detail: detail.into(),
        }
    }
}
