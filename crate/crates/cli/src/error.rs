use thiserror::Error;

pub mod exit {
    pub const SUCCESS: i32 = 0;
    pub const USAGE: i32 = 1;
    pub const DEGENERATE: i32 = 2;
    pub const INCONSISTENT: i32 = 3;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("usage error: {0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] ph_helix::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        use ph_helix::Error::*;
        match self {
            Self::Parse(_) | Self::Usage(_) => exit::USAGE,
            Self::Core(UnsupportedDegree { .. } | Precondition(_)) => exit::USAGE,
            Self::Core(InternalInconsistency(_)) => exit::INCONSISTENT,
            Self::Core(_) => exit::DEGENERATE,
        }
    }
}
