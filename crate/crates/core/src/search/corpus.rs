//! The reference corpus used by the regression suites.

use crate::algebra::FiniteMtlAlgebra;
use crate::search::enumerate::{enumerate_all, enumerate_chains};
use crate::search::families::{gen_family, Family};

/// All MTL-algebras of size 4, all chains of size 5, and the Łukasiewicz,
/// Gödel and nilpotent-minimum chains of sizes 3 to 7, in that order.
/// Isomorphic copies are kept; a family member keeps its family name.
pub fn standard_corpus() -> Vec<FiniteMtlAlgebra> {
    let mut out = enumerate_all(4, false).expect("size 4 is supported");
    out.extend(enumerate_chains(5).expect("size 5 is supported"));
    for f in Family::ALL {
        for n in 3..=7 {
            out.push(gen_family(f, n).expect("sizes 3..=7 are supported"));
        }
    }
    out
}
