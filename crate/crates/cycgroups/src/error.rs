use cycgroups_core::GroupError;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("catalog line {line}: {reason}")]
    Catalog { line: usize, reason: String },
    #[error("parse error at position {position}: {reason}")]
    Parse { position: usize, reason: String },
    #[error("the catalog covers orders up to {max}, {requested} requested")]
    BeyondCatalog { requested: usize, max: usize },
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
