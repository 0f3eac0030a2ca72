/// Front-end failures. All of them exit with the input-error code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}: {source}")]
    Library { path: String, source: mvlat::Error },
    #[error(transparent)]
    Computation(#[from] mvlat::Error),
}

pub type Result<T> = std::result::Result<T, CliError>;
