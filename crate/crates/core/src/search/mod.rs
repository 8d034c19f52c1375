//! Family generators, enumeration up to isomorphism, and the open-problem scans.

pub mod canon;
pub mod corpus;
pub mod enumerate;
pub mod families;
pub mod open;

pub use canon::{canonical_form, canonical_hex, canonicalize};
pub use corpus::standard_corpus;
pub use enumerate::{
    enumerate, enumerate_all, enumerate_chains, enumerate_chains_by_imp, EnumerationSpec,
};
pub use families::{gen_family, Family};
pub use open::{open1_scan, open2_scan, open3_scan, Problem, SearchFinding};
