//! Values printed alongside the worked examples, next to what the
//! definitions actually give on the shipped fixtures.
//!
//! Several printed multiplicative stabilizers match an "exists x in X"
//! reading rather than "for all x in X"; for those quantities the
//! existential value is computed too, so a report can show which reading a
//! printed value follows.

use crate::algebra::FiniteMtlAlgebra;
use crate::error::Result;
use crate::fixtures;
use crate::order::generated_filter;
use crate::stabilizers::{
    impl_left, impl_right, impl_stab, mult_left, mult_left_some, mult_right, mult_right_some,
    mult_stab,
};
use crate::subset::Subset;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Quantity {
    ImplLeft,
    ImplRight,
    ImplStab,
    MultLeft,
    MultRight,
    MultStab,
    /// `<X>_l`
    GenImplLeft,
    /// `<X>*_l`
    GenMultLeft,
    /// `(X_r)_r`
    DoubleRight,
}

impl Quantity {
    pub fn name(self) -> &'static str {
        match self {
            Quantity::ImplLeft => "impl_left",
            Quantity::ImplRight => "impl_right",
            Quantity::ImplStab => "impl_stab",
            Quantity::MultLeft => "mult_left",
            Quantity::MultRight => "mult_right",
            Quantity::MultStab => "mult_stab",
            Quantity::GenImplLeft => "gen_impl_left",
            Quantity::GenMultLeft => "gen_mult_left",
            Quantity::DoubleRight => "double_right",
        }
    }

    pub fn compute(self, a: &FiniteMtlAlgebra, x: &Subset) -> Result<Subset> {
        match self {
            Quantity::ImplLeft => impl_left(a, x),
            Quantity::ImplRight => impl_right(a, x),
            Quantity::ImplStab => impl_stab(a, x),
            Quantity::MultLeft => mult_left(a, x),
            Quantity::MultRight => mult_right(a, x),
            Quantity::MultStab => mult_stab(a, x),
            Quantity::GenImplLeft => impl_left(a, &generated_filter(a, x)?),
            Quantity::GenMultLeft => mult_left(a, &generated_filter(a, x)?),
            Quantity::DoubleRight => impl_right(a, &impl_right(a, x)?),
        }
    }

    /// The same quantity with "some x in X" in place of "every x in X",
    /// for the multiplicative stabilizers only.
    pub fn compute_existential(self, a: &FiniteMtlAlgebra, x: &Subset) -> Result<Option<Subset>> {
        Ok(match self {
            Quantity::MultLeft => Some(mult_left_some(a, x)?),
            Quantity::MultRight => Some(mult_right_some(a, x)?),
            Quantity::MultStab => Some(mult_left_some(a, x)?.intersection(&mult_right_some(a, x)?)),
            _ => None,
        })
    }
}

/// One printed value and its recomputation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DocumentedValue {
    pub fixture: &'static str,
    pub quantity: Quantity,
    pub input: Vec<&'static str>,
    pub reported: Vec<&'static str>,
    pub computed: Subset,
    pub existential: Option<Subset>,
    pub mismatch: bool,
}

impl DocumentedValue {
    pub fn input_set(&self, a: &FiniteMtlAlgebra) -> Subset {
        a.subset(self.input.iter().copied())
            .expect("fixture labels")
    }

    pub fn reported_set(&self, a: &FiniteMtlAlgebra) -> Subset {
        a.subset(self.reported.iter().copied())
            .expect("fixture labels")
    }
}

type Entry = (
    &'static str,
    Quantity,
    &'static [&'static str],
    &'static [&'static str],
);

const TABLE: &[Entry] = &[
    ("a4", Quantity::ImplLeft, &["b"], &["1"]),
    ("a4", Quantity::ImplRight, &["b"], &["a", "1"]),
    ("a4", Quantity::ImplStab, &["b"], &["1"]),
    ("a4", Quantity::MultLeft, &["a", "b"], &["b", "1"]),
    ("a4", Quantity::MultRight, &["a", "b"], &["0", "b"]),
    ("a4", Quantity::MultStab, &["a", "b"], &["b"]),
    ("a5", Quantity::ImplLeft, &["b"], &["a", "1"]),
    ("a5", Quantity::GenImplLeft, &["b"], &["1"]),
    ("b4", Quantity::MultLeft, &["b"], &["b", "1"]),
    ("b4", Quantity::GenMultLeft, &["b"], &["1"]),
    ("c5", Quantity::MultRight, &["a", "c"], &["0", "a", "c"]),
    ("g6", Quantity::ImplRight, &["b"], &["a", "1"]),
    ("i6", Quantity::ImplLeft, &["0"], &["1"]),
    ("m6", Quantity::DoubleRight, &["a", "1"], &["a", "b", "1"]),
    ("n5", Quantity::ImplLeft, &["0"], &["c", "a", "b", "1"]),
];

fn evaluate(a: &FiniteMtlAlgebra, e: &Entry) -> DocumentedValue {
    let (fixture, quantity, input, reported) = *e;
    let x = a.subset(input.iter().copied()).expect("fixture labels");
    let computed = quantity.compute(a, &x).expect("nonempty input");
    let existential = quantity.compute_existential(a, &x).expect("nonempty input");
    let printed = a.subset(reported.iter().copied()).expect("fixture labels");
    DocumentedValue {
        fixture,
        quantity,
        input: input.to_vec(),
        reported: reported.to_vec(),
        computed,
        existential,
        mismatch: computed != printed,
    }
}

/// Every printed value, recomputed on the shipped fixtures.
pub fn documented_values() -> Vec<DocumentedValue> {
    TABLE
        .iter()
        .map(|e| evaluate(&fixtures::load(e.0), e))
        .collect()
}

/// Printed values that concern `a` with input `x`: `a` must carry a fixture's
/// name and tables. Any `x` matches when `None`.
pub fn for_algebra(a: &FiniteMtlAlgebra, x: Option<&Subset>) -> Vec<DocumentedValue> {
    let Some(&name) = fixtures::NAMES.iter().find(|&&n| n == a.name()) else {
        return Vec::new();
    };
    if fixtures::load(name).tables() != a.tables() {
        return Vec::new();
    }
    TABLE
        .iter()
        .filter(|e| e.0 == name)
        .filter(|e| x.is_none_or(|x| a.subset(e.2.iter().copied()).ok().as_ref() == Some(x)))
        .map(|e| evaluate(a, e))
        .collect()
}
