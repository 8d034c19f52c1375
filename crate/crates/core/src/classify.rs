//! Subclass predicates and their stabilizer-based characterizations.

use crate::algebra::FiniteMtlAlgebra;
use crate::order::{is_prime_filter, is_prime_lattice_ideal, principal_filter, principal_ideal};
use crate::stabilizers::{impl_left, impl_stab, mult_left, mult_right, ortho};
use crate::subset::Subset;

fn all_pairs(a: &FiniteMtlAlgebra, f: impl Fn(crate::Element, crate::Element) -> bool) -> bool {
    a.elements().all(|x| a.elements().all(|y| f(x, y)))
}

/// Divisibility: `x /\ y = x * (x -> y)`.
pub fn is_bl(a: &FiniteMtlAlgebra) -> bool {
    all_pairs(a, |x, y| a.meet(x, y) == a.mul(x, a.imp(x, y)))
}

/// `(x -> y) -> y = (y -> x) -> x`.
pub fn is_mv(a: &FiniteMtlAlgebra) -> bool {
    all_pairs(a, |x, y| a.imp(a.imp(x, y), y) == a.imp(a.imp(y, x), x))
}

/// Multiplication coincides with meet.
pub fn is_godel(a: &FiniteMtlAlgebra) -> bool {
    all_pairs(a, |x, y| a.mul(x, y) == a.meet(x, y))
}

pub fn is_imtl(a: &FiniteMtlAlgebra) -> bool {
    a.elements().all(|x| a.neg(a.neg(x)) == x)
}

/// No zero divisors.
pub fn is_integral_mtl(a: &FiniteMtlAlgebra) -> bool {
    all_pairs(a, |x, y| {
        a.mul(x, y) != a.bot() || x == a.bot() || y == a.bot()
    })
}

pub fn is_chain(a: &FiniteMtlAlgebra) -> bool {
    all_pairs(a, |x, y| a.leq(x, y) || a.leq(y, x))
}

/// `L_0 = S_0 = ortho({0})`.
pub fn imtl_by_stabilizers(a: &FiniteMtlAlgebra) -> bool {
    let zero = Subset::singleton(a.size(), a.bot());
    let l0 = impl_left(a, &zero).expect("nonempty");
    l0 == impl_stab(a, &zero).expect("nonempty") && l0 == ortho(a, &zero).expect("nonempty")
}

/// `L_0 = L \ {0}`.
pub fn integral_by_stabilizers(a: &FiniteMtlAlgebra) -> bool {
    let zero = Subset::singleton(a.size(), a.bot());
    impl_left(a, &zero).expect("nonempty") == zero.complement()
}

/// For every x, `L*_x = [x)`.
pub fn godel_by_left(a: &FiniteMtlAlgebra) -> bool {
    a.elements().all(|x| {
        mult_left(a, &Subset::singleton(a.size(), x)).expect("nonempty") == principal_filter(a, x)
    })
}

/// For every x, `R*_x = (x]`.
pub fn godel_by_right(a: &FiniteMtlAlgebra) -> bool {
    a.elements().all(|x| {
        mult_right(a, &Subset::singleton(a.size(), x)).expect("nonempty") == principal_ideal(a, x)
    })
}

/// For every x, `L*_x = [x)` and `L*_x` is a prime filter.
///
/// `L*_0 = [0)` is the whole carrier and never a proper filter, so the
/// bottom element is excluded from the primality requirement.
pub fn godel_chain_by_left(a: &FiniteMtlAlgebra) -> bool {
    godel_by_left(a)
        && a.elements().filter(|&x| x != a.bot()).all(|x| {
            let l = principal_filter(a, x);
            is_prime_filter(a, &l).unwrap_or(false)
        })
}

/// For every x, `R*_x = (x]` and `R*_x` is a prime lattice ideal.
pub fn godel_chain_by_right(a: &FiniteMtlAlgebra) -> bool {
    godel_by_right(a)
        && a.elements().all(|x| {
            let r = principal_ideal(a, x);
            is_prime_lattice_ideal(a, &r).unwrap_or(false)
        })
}

/// One row of a classification: a direct predicate or a stabilizer characterization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassRow {
    pub key: &'static str,
    pub value: bool,
}

/// A pair of routes that must agree; `agree == false` refutes the corresponding claim.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossCheck {
    pub key: &'static str,
    pub claim: &'static str,
    pub direct: bool,
    pub via_stabilizers: bool,
}

impl CrossCheck {
    pub fn agree(&self) -> bool {
        self.direct == self.via_stabilizers
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub classes: Vec<ClassRow>,
    pub checks: Vec<CrossCheck>,
}

impl Classification {
    pub fn get(&self, key: &str) -> Option<bool> {
        self.classes.iter().find(|r| r.key == key).map(|r| r.value)
    }

    pub fn disagreements(&self) -> impl Iterator<Item = &CrossCheck> {
        self.checks.iter().filter(|c| !c.agree())
    }
}

pub fn classify(a: &FiniteMtlAlgebra) -> Classification {
    let bl = is_bl(a);
    let mv = is_mv(a);
    let godel = is_godel(a);
    let imtl = is_imtl(a);
    let integral = is_integral_mtl(a);
    let chain = is_chain(a);
    let classes = vec![
        ClassRow {
            key: "mtl",
            value: true,
        },
        ClassRow {
            key: "bl",
            value: bl,
        },
        ClassRow {
            key: "mv",
            value: mv,
        },
        ClassRow {
            key: "godel",
            value: godel,
        },
        ClassRow {
            key: "imtl",
            value: imtl,
        },
        ClassRow {
            key: "integral",
            value: integral,
        },
        ClassRow {
            key: "chain",
            value: chain,
        },
        ClassRow {
            key: "godel_chain",
            value: godel && chain,
        },
    ];
    let checks = vec![
        CrossCheck {
            key: "imtl_via_l0",
            claim: "T3.10-imtl",
            direct: imtl,
            via_stabilizers: imtl_by_stabilizers(a),
        },
        CrossCheck {
            key: "integral_via_l0",
            claim: "T3.11-integral",
            direct: integral,
            via_stabilizers: integral_by_stabilizers(a),
        },
        CrossCheck {
            key: "godel_via_left",
            claim: "T4.9-godel",
            direct: godel,
            via_stabilizers: godel_by_left(a),
        },
        CrossCheck {
            key: "godel_via_right",
            claim: "T4.9-godel",
            direct: godel,
            via_stabilizers: godel_by_right(a),
        },
        CrossCheck {
            key: "godel_chain_via_left",
            claim: "T4.10-godel-chain",
            direct: godel && chain,
            via_stabilizers: godel_chain_by_left(a),
        },
        CrossCheck {
            key: "godel_chain_via_right",
            claim: "T4.10-godel-chain",
            direct: godel && chain,
            via_stabilizers: godel_chain_by_right(a),
        },
    ];
    Classification { classes, checks }
}
