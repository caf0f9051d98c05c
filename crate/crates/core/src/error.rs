use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator closure exceeds the order cap of {0}")]
    ClosureExceedsCap(usize),
    #[error("invalid generator: {0}")]
    InvalidGenerator(String),
    #[error("subgroup is not normal in its parent")]
    NotNormal,
    #[error("subgroup lattice not enumerated: |G| = {order} exceeds the lattice cap of {limit}")]
    LatticeExceedsCap { order: usize, limit: usize },
    #[error("chief series enumeration exceeds the bound of {0}")]
    SeriesExplosion(usize),
    #[error("subgroup is not fully normalized in the fusion system")]
    NotFullyNormalized,
    #[error("cannot parse group description: {0}")]
    Parse(String),
}
