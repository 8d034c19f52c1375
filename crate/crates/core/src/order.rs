//! Filters, lattice ideals, the Goedel center and subalgebra tests.

use crate::algebra::{Element, FiniteMtlAlgebra};
use crate::error::{MtlError, Result};
use crate::subset::Subset;

/// A binary operation of the algebra, used to name closure failures.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Op {
    Mul,
    Imp,
    Meet,
    Join,
}

impl Op {
    pub const ALL: [Op; 4] = [Op::Mul, Op::Imp, Op::Meet, Op::Join];

    pub fn name(self) -> &'static str {
        match self {
            Op::Mul => "mul",
            Op::Imp => "imp",
            Op::Meet => "meet",
            Op::Join => "join",
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Op::Mul => "*",
            Op::Imp => "->",
            Op::Meet => "/\\",
            Op::Join => "\\/",
        }
    }

    pub fn apply(self, a: &FiniteMtlAlgebra, x: Element, y: Element) -> Element {
        match self {
            Op::Mul => a.mul(x, y),
            Op::Imp => a.imp(x, y),
            Op::Meet => a.meet(x, y),
            Op::Join => a.join(x, y),
        }
    }
}

/// Why a subset fails to be a subalgebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SubalgebraFailure {
    MissingConstant(Element),
    NotClosed {
        op: Op,
        x: Element,
        y: Element,
        result: Element,
    },
}

impl SubalgebraFailure {
    pub fn describe(&self, a: &FiniteMtlAlgebra) -> String {
        match self {
            SubalgebraFailure::MissingConstant(e) => format!("missing constant {}", a.label(*e)),
            SubalgebraFailure::NotClosed { op, x, y, result } => format!(
                "{}{}{}={} not in set",
                a.label(*x),
                op.symbol(),
                a.label(*y),
                a.label(*result)
            ),
        }
    }
}

pub fn upset(a: &FiniteMtlAlgebra, s: &Subset) -> Subset {
    let mut out = *s;
    for x in s.iter() {
        for y in a.elements() {
            if a.leq(x, y) {
                out.insert(y);
            }
        }
    }
    out
}

pub fn downset(a: &FiniteMtlAlgebra, s: &Subset) -> Subset {
    let mut out = *s;
    for x in s.iter() {
        for y in a.elements() {
            if a.leq(y, x) {
                out.insert(y);
            }
        }
    }
    out
}

fn closed_under(a: &FiniteMtlAlgebra, s: &Subset, op: Op) -> Option<(Element, Element, Element)> {
    for x in s.iter() {
        for y in s.iter() {
            let r = op.apply(a, x, y);
            if !s.contains(r) {
                return Some((x, y, r));
            }
        }
    }
    None
}

pub fn is_filter(a: &FiniteMtlAlgebra, f: &Subset) -> bool {
    !f.is_empty() && upset(a, f) == *f && closed_under(a, f, Op::Mul).is_none()
}

pub fn is_proper_filter(a: &FiniteMtlAlgebra, f: &Subset) -> bool {
    is_filter(a, f) && !f.is_full()
}

/// Least filter containing `x`, by alternating product and upward closure.
pub fn generated_filter(a: &FiniteMtlAlgebra, x: &Subset) -> Result<Subset> {
    a.own(x)?;
    if x.is_empty() {
        return Err(MtlError::EmptySubset);
    }
    let mut cur = upset(a, x);
    loop {
        let mut next = cur;
        for p in cur.iter() {
            for q in cur.iter() {
                next.insert(a.mul(p, q));
            }
        }
        let next = upset(a, &next);
        if next == cur {
            return Ok(cur);
        }
        cur = next;
    }
}

pub fn is_prime_filter(a: &FiniteMtlAlgebra, f: &Subset) -> Result<bool> {
    a.own(f)?;
    if !is_proper_filter(a, f) {
        return Err(MtlError::NotProperFilter(a.render(f)));
    }
    for x in a.elements() {
        for y in a.elements() {
            if f.contains(a.join(x, y)) && !f.contains(x) && !f.contains(y) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Every filter, including the improper one, ascending by bit pattern.
///
/// Built by closing every nonempty subset of generators reachable from the
/// singletons under pairwise joins of filters, which reaches every filter
/// since a finite filter is generated by its own elements.
pub fn all_filters(a: &FiniteMtlAlgebra) -> Vec<Subset> {
    use std::collections::BTreeSet;
    let mut found: BTreeSet<u64> = BTreeSet::new();
    let mut frontier: Vec<Subset> = a
        .elements()
        .map(|e| generated_filter(a, &Subset::singleton(a.size(), e)).expect("nonempty"))
        .collect();
    for f in &frontier {
        found.insert(f.bits());
    }
    let singles = frontier.clone();
    while let Some(f) = frontier.pop() {
        for g in &singles {
            if g.is_subset_of(&f) {
                continue;
            }
            let h = generated_filter(a, &f.union(g)).expect("nonempty");
            if found.insert(h.bits()) {
                frontier.push(h);
            }
        }
    }
    found
        .into_iter()
        .map(|b| Subset::from_bits(a.size(), b).expect("in range"))
        .collect()
}

pub fn is_lattice_ideal(a: &FiniteMtlAlgebra, i: &Subset) -> bool {
    !i.is_empty() && downset(a, i) == *i && closed_under(a, i, Op::Join).is_none()
}

pub fn principal_ideal(a: &FiniteMtlAlgebra, t: Element) -> Subset {
    Subset::from_elements(a.size(), a.elements().filter(|&x| a.leq(x, t)))
}

pub fn principal_filter(a: &FiniteMtlAlgebra, t: Element) -> Subset {
    Subset::from_elements(a.size(), a.elements().filter(|&x| a.leq(t, x)))
}

pub fn generated_lattice_ideal(a: &FiniteMtlAlgebra, h: &Subset) -> Result<Subset> {
    a.own(h)?;
    if h.is_empty() {
        return Err(MtlError::EmptySubset);
    }
    let top = h
        .iter()
        .fold(h.iter().next().unwrap(), |acc, x| a.join(acc, x));
    Ok(principal_ideal(a, top))
}

pub fn is_prime_lattice_ideal(a: &FiniteMtlAlgebra, i: &Subset) -> Result<bool> {
    a.own(i)?;
    if !is_lattice_ideal(a, i) {
        return Err(MtlError::NotLatticeIdeal(a.render(i)));
    }
    for x in a.elements() {
        for y in a.elements() {
            if i.contains(a.meet(x, y)) && !i.contains(x) && !i.contains(y) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Result of [`godel_center`]: the idempotents plus any failure of the
/// identity `e*(x->y) = e*((e*x)->(e*y))` for `e` in the center.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GodelCenter {
    pub set: Subset,
    pub inconsistencies: Vec<(Element, Element, Element)>,
}

pub fn godel_center(a: &FiniteMtlAlgebra) -> GodelCenter {
    let set = Subset::from_elements(a.size(), a.elements().filter(|&e| a.is_idempotent(e)));
    let mut inconsistencies = Vec::new();
    for e in set.iter() {
        for x in a.elements() {
            for y in a.elements() {
                let lhs = a.mul(e, a.imp(x, y));
                let rhs = a.mul(e, a.imp(a.mul(e, x), a.mul(e, y)));
                if lhs != rhs {
                    inconsistencies.push((e, x, y));
                }
            }
        }
    }
    GodelCenter {
        set,
        inconsistencies,
    }
}

/// Checks that `s` holds both constants and is closed under all four
/// operations; returns the first failure in carrier order.
pub fn subalgebra_failure(a: &FiniteMtlAlgebra, s: &Subset) -> Option<SubalgebraFailure> {
    for c in [a.bot(), a.top()] {
        if !s.contains(c) {
            return Some(SubalgebraFailure::MissingConstant(c));
        }
    }
    for x in s.iter() {
        for y in s.iter() {
            for op in Op::ALL {
                let r = op.apply(a, x, y);
                if !s.contains(r) {
                    return Some(SubalgebraFailure::NotClosed {
                        op,
                        x,
                        y,
                        result: r,
                    });
                }
            }
        }
    }
    None
}

pub fn is_subalgebra(a: &FiniteMtlAlgebra, s: &Subset) -> bool {
    subalgebra_failure(a, s).is_none()
}
