//! Implicative and multiplicative stabilizers and the co-annihilator.
//!
//! Every operator quantifies universally over the members of `X`:
//!
//! | operator     | membership of `a`         |
//! |--------------|---------------------------|
//! | `impl_left`  | `a -> x = x` for all x    |
//! | `impl_right` | `x -> a = a` for all x    |
//! | `ortho`      | `a \/ x = 1` for all x    |
//! | `mult_left`  | `a * x = x` for all x     |
//! | `mult_right` | `x * a = a` for all x     |
//!
//! The `*_stab` variants intersect left and right.

use crate::algebra::{Element, FiniteMtlAlgebra};
use crate::error::{MtlError, Result};
use crate::subset::Subset;

fn scan(
    a: &FiniteMtlAlgebra,
    x: &Subset,
    member: impl Fn(Element, Element) -> bool,
) -> Result<Subset> {
    a.own(x)?;
    if x.is_empty() {
        return Err(MtlError::EmptySubset);
    }
    Ok(Subset::from_elements(
        a.size(),
        a.elements().filter(|&t| x.iter().all(|m| member(t, m))),
    ))
}

pub fn impl_left(a: &FiniteMtlAlgebra, x: &Subset) -> Result<Subset> {
    scan(a, x, |t, m| a.imp(t, m) == m)
}

pub fn impl_right(a: &FiniteMtlAlgebra, x: &Subset) -> Result<Subset> {
    scan(a, x, |t, m| a.imp(m, t) == t)
}

pub fn impl_stab(a: &FiniteMtlAlgebra, x: &Subset) -> Result<Subset> {
    Ok(impl_left(a, x)?.intersection(&impl_right(a, x)?))
}

pub fn ortho(a: &FiniteMtlAlgebra, x: &Subset) -> Result<Subset> {
    scan(a, x, |t, m| a.join(t, m) == a.top())
}

pub fn mult_left(a: &FiniteMtlAlgebra, x: &Subset) -> Result<Subset> {
    scan(a, x, |t, m| a.mul(t, m) == m)
}

pub fn mult_right(a: &FiniteMtlAlgebra, x: &Subset) -> Result<Subset> {
    scan(a, x, |t, m| a.mul(m, t) == t)
}

pub fn mult_stab(a: &FiniteMtlAlgebra, x: &Subset) -> Result<Subset> {
    Ok(mult_left(a, x)?.intersection(&mult_right(a, x)?))
}

/// Existential reading of the multiplicative stabilizers: `a` qualifies when
/// the defining equation holds for at least one member of `X`. Kept only to
/// compare against values documented under that reading.
pub fn mult_left_some(a: &FiniteMtlAlgebra, x: &Subset) -> Result<Subset> {
    a.own(x)?;
    if x.is_empty() {
        return Err(MtlError::EmptySubset);
    }
    Ok(Subset::from_elements(
        a.size(),
        a.elements().filter(|&t| x.iter().any(|m| a.mul(t, m) == m)),
    ))
}

pub fn mult_right_some(a: &FiniteMtlAlgebra, x: &Subset) -> Result<Subset> {
    a.own(x)?;
    if x.is_empty() {
        return Err(MtlError::EmptySubset);
    }
    Ok(Subset::from_elements(
        a.size(),
        a.elements().filter(|&t| x.iter().any(|m| a.mul(m, t) == t)),
    ))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StabKind {
    ImplLeft,
    ImplRight,
    ImplStab,
    Ortho,
    MultLeft,
    MultRight,
    MultStab,
}

impl StabKind {
    pub const ALL: [StabKind; 7] = [
        StabKind::ImplLeft,
        StabKind::ImplRight,
        StabKind::ImplStab,
        StabKind::Ortho,
        StabKind::MultLeft,
        StabKind::MultRight,
        StabKind::MultStab,
    ];

    pub fn name(self) -> &'static str {
        match self {
            StabKind::ImplLeft => "impl_left",
            StabKind::ImplRight => "impl_right",
            StabKind::ImplStab => "impl_stab",
            StabKind::Ortho => "ortho",
            StabKind::MultLeft => "mult_left",
            StabKind::MultRight => "mult_right",
            StabKind::MultStab => "mult_stab",
        }
    }

    pub fn compute(self, a: &FiniteMtlAlgebra, x: &Subset) -> Result<Subset> {
        match self {
            StabKind::ImplLeft => impl_left(a, x),
            StabKind::ImplRight => impl_right(a, x),
            StabKind::ImplStab => impl_stab(a, x),
            StabKind::Ortho => ortho(a, x),
            StabKind::MultLeft => mult_left(a, x),
            StabKind::MultRight => mult_right(a, x),
            StabKind::MultStab => mult_stab(a, x),
        }
    }
}

/// All seven sets for one `X`, in [`StabKind::ALL`] order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilizerSuite {
    pub input: Subset,
    pub sets: [(StabKind, Subset); 7],
}

pub fn stabilizer_suite(a: &FiniteMtlAlgebra, x: &Subset) -> Result<StabilizerSuite> {
    let il = impl_left(a, x)?;
    let ir = impl_right(a, x)?;
    let ml = mult_left(a, x)?;
    let mr = mult_right(a, x)?;
    Ok(StabilizerSuite {
        input: *x,
        sets: [
            (StabKind::ImplLeft, il),
            (StabKind::ImplRight, ir),
            (StabKind::ImplStab, il.intersection(&ir)),
            (StabKind::Ortho, ortho(a, x)?),
            (StabKind::MultLeft, ml),
            (StabKind::MultRight, mr),
            (StabKind::MultStab, ml.intersection(&mr)),
        ],
    })
}

impl StabilizerSuite {
    pub fn get(&self, kind: StabKind) -> Subset {
        self.sets
            .iter()
            .find(|(k, _)| *k == kind)
            .map(|(_, s)| *s)
            .unwrap()
    }
}
