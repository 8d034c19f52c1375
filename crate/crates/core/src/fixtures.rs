//! Algebras from the worked examples, shipped with the crate.

use crate::algebra::FiniteMtlAlgebra;
use crate::format::parse_algebra;

pub const NAMES: [&str; 8] = ["a4", "a5", "b4", "c5", "g6", "i6", "m6", "n5"];

/// Source text of a named fixture.
pub fn source(name: &str) -> &'static str {
    match name {
        "a4" => include_str!("../fixtures/a4.alg"),
        "a5" => include_str!("../fixtures/a5.alg"),
        "b4" => include_str!("../fixtures/b4.alg"),
        "c5" => include_str!("../fixtures/c5.alg"),
        "g6" => include_str!("../fixtures/g6.alg"),
        "i6" => include_str!("../fixtures/i6.alg"),
        "m6" => include_str!("../fixtures/m6.alg"),
        "n5" => include_str!("../fixtures/n5.alg"),
        other => panic!("no fixture named {other:?}"),
    }
}

/// Parses and validates a named fixture. Panics on unknown names or invalid tables.
pub fn load(name: &str) -> FiniteMtlAlgebra {
    let a = parse_algebra(source(name)).unwrap_or_else(|e| panic!("fixture {name}: {e}"));
    a.into_validated()
        .unwrap_or_else(|r| panic!("fixture {name} fails validation: {:?}", r.violations))
}

/// The two-element Boolean algebra.
pub fn boolean2() -> FiniteMtlAlgebra {
    crate::search::families::gen_family(crate::search::families::Family::Godel, 2)
        .expect("two-element chain")
}

/// The four-element Boolean algebra with atoms `a` and `b`.
pub fn boolean4() -> FiniteMtlAlgebra {
    let text = "algebra bool4\nsize 4\nlabels 0 a b 1\nbot 0\ntop 1\n\
                mul\n0 0 0 0\n0 a 0 a\n0 0 b b\n0 a b 1\n\
                imp\n1 1 1 1\nb 1 b 1\na a 1 1\n0 a b 1\nend\n";
    parse_algebra(text)
        .expect("bool4 parses")
        .into_validated()
        .expect("bool4 is valid")
}
