use std::fmt;

use distortion_core::algebra::AlgebraError;
use distortion_core::dynamics::DynamicsError;
use distortion_core::groups::ModelError;
use distortion_core::growth::GrowthError;
use distortion_core::words::WordError;

use crate::report::Report;

#[derive(Debug)]
pub enum CliError {
    /// A certificate failed to evaluate to its target.
    Verification(String),
    Overflow(String),
    /// The node cap stopped the search; carries the partial statistics.
    BallTooLarge { message: String, partial: Box<Report> },
    UnknownName(String),
    /// Any other error, with its structured name.
    Failed { name: String, message: String },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Verification(_) => 2,
            CliError::Overflow(_) => 3,
            CliError::BallTooLarge { .. } => 4,
            CliError::UnknownName(_) => 5,
            CliError::Failed { .. } => 1,
        }
    }

    pub fn name(&self) -> &str {
        match self {
            CliError::Verification(_) => "UnverifiedCertificate",
            CliError::Overflow(_) => "Overflow",
            CliError::BallTooLarge { .. } => "BallTooLarge",
            CliError::UnknownName(_) => "UnknownName",
            CliError::Failed { name, .. } => name,
        }
    }

    pub fn invalid(message: impl Into<String>) -> Self {
        CliError::Failed { name: "InvalidArgument".into(), message: message.into() }
    }

    fn failed(message: String) -> Self {
        // core messages lead with their error name, as in "NoReturn: …"
        let name = match message.split_once(':') {
            Some((head, _)) if !head.is_empty() && head.chars().all(|c| c.is_ascii_alphanumeric()) => head.to_string(),
            _ => "InvalidArgument".to_string(),
        };
        CliError::Failed { name, message }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Verification(m) | CliError::Overflow(m) | CliError::UnknownName(m) => f.write_str(m),
            CliError::BallTooLarge { message, .. } => f.write_str(message),
            CliError::Failed { message, .. } => f.write_str(message),
        }
    }
}

impl From<AlgebraError> for CliError {
    fn from(e: AlgebraError) -> Self {
        match e {
            AlgebraError::Overflow(_) => CliError::Overflow(e.to_string()),
            other => CliError::failed(other.to_string()),
        }
    }
}

impl From<WordError> for CliError {
    fn from(e: WordError) -> Self {
        match e {
            WordError::UnverifiedCertificate { .. } => CliError::Verification(e.to_string()),
            WordError::Algebra(a) => a.into(),
            other => CliError::failed(other.to_string()),
        }
    }
}

impl From<ModelError> for CliError {
    fn from(e: ModelError) -> Self {
        match e {
            ModelError::Algebra(a) => a.into(),
            ModelError::Word(w) => w.into(),
            other => CliError::failed(other.to_string()),
        }
    }
}

impl From<DynamicsError> for CliError {
    fn from(e: DynamicsError) -> Self {
        match e {
            DynamicsError::UnknownLift(_) => CliError::UnknownName(e.to_string()),
            other => CliError::failed(other.to_string()),
        }
    }
}

impl From<GrowthError> for CliError {
    fn from(e: GrowthError) -> Self {
        match e {
            GrowthError::UnknownCurve(_) => CliError::UnknownName(e.to_string()),
            GrowthError::Dynamics(d) => d.into(),
            other => CliError::failed(other.to_string()),
        }
    }
}
