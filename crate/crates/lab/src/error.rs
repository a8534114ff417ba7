use thiserror::Error;

#[derive(Debug, Error)]
pub enum LabError {
    #[error("config: {0}")]
    Config(String),
    #[error(transparent)]
    Core(#[from] calab_core::Error),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T, E = LabError> = std::result::Result<T, E>;

pub(crate) fn io_error(path: impl AsRef<std::path::Path>) -> impl FnOnce(std::io::Error) -> LabError {
    let path = path.as_ref().display().to_string();
    move |source| LabError::Io { path, source }
}
