use thiserror::Error;

/// Errors raised while building algebras or evaluating operations on them.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MtlError {
    #[error("carrier size {0} outside the supported range 2..=64")]
    SizeOutOfRange(usize),
    #[error("{table} table has wrong shape: expected {expected}x{expected}")]
    TableShape {
        table: &'static str,
        expected: usize,
    },
    #[error("{table}[{row}][{col}] = {value} is outside the carrier 0..{n}")]
    EntryOutOfRange {
        table: &'static str,
        row: usize,
        col: usize,
        value: usize,
        n: usize,
    },
    #[error("unknown element label {0:?}")]
    UnknownLabel(String),
    #[error("element {0} is outside the carrier")]
    ElementOutOfRange(usize),
    #[error("implication order is not a partial order: {0}")]
    NotPartialOrder(String),
    #[error("implication order is not a lattice: {x} and {y} have no {missing}")]
    NotLattice {
        x: String,
        y: String,
        missing: &'static str,
    },
    #[error("declared {table} disagrees with the implication order at ({x}, {y})")]
    LatticeDisagrees {
        table: &'static str,
        x: String,
        y: String,
    },
    #[error("labels must be unique and {expected} in number")]
    BadLabels { expected: usize },
    #[error("empty subset where a nonempty one is required")]
    EmptySubset,
    #[error("subset belongs to a carrier of size {found}, algebra has size {expected}")]
    ForeignSubset { expected: usize, found: usize },
    #[error("{0} is not a proper filter")]
    NotProperFilter(String),
    #[error("{0} is not a lattice ideal")]
    NotLatticeIdeal(String),
    #[error("element {0} is not idempotent")]
    NotIdempotent(String),
    #[error("algebra is not an MV-algebra")]
    NotMv,
    #[error("unknown claim id {0:?}")]
    UnknownClaim(String),
    #[error("claim {claim} is checked on {expected}")]
    InstanceShape {
        claim: String,
        expected: &'static str,
    },
    #[error("unknown algebra family {0:?}")]
    UnknownFamily(String),
    #[error("size {size} outside the supported range {range} for {what}")]
    SearchSize {
        size: usize,
        range: &'static str,
        what: &'static str,
    },
}

pub type Result<T, E = MtlError> = std::result::Result<T, E>;
