use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),

    /// A box scan would visit more lattice points than [`crate::lattice::MAX_BOX_POINTS`].
    #[error("search box has {0} lattice points, which exceeds the supported limit")]
    BoxTooLarge(u128),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}
