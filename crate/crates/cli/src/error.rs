use std::io;
use std::path::PathBuf;

use owjfa::analysis::AnalysisError;
use owjfa::langtools::{FamilyError, LangError};
use owjfa::{EngineError, FormatError, ValidationError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Format(#[from] FormatError),
    #[error("{0}")]
    Validation(#[from] ValidationError),
    #[error("{0}")]
    Engine(#[from] EngineError),
    #[error("{0}")]
    Analysis(#[from] AnalysisError),
    #[error("{0}")]
    Lang(#[from] LangError),
    #[error("{0}")]
    Family(#[from] FamilyError),
    #[error("cannot read {}: {source}", path.display())]
    Read { path: PathBuf, source: io::Error },
    #[error("cannot write output: {0}")]
    Write(#[from] io::Error),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    /// Module the failure originated in.
    pub fn module(&self) -> &'static str {
        match self {
            CliError::Format(_) | CliError::Validation(_) => "core",
            CliError::Engine(_) => "engines",
            CliError::Analysis(_) => "analysis",
            CliError::Lang(LangError::Engine(_)) => "engines",
            CliError::Lang(_) | CliError::Family(_) => "langtools",
            CliError::Read { .. } | CliError::Write(_) | CliError::Usage(_) => "cli",
        }
    }
}
