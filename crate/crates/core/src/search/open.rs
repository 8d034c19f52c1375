//! Scans for counterexamples to the three open problems.
//!
//! 1. Is every filter `F` equal to `X_l` for some nonempty `X`?
//! 2. If `X_l = X_r` for every nonempty `X`, is the algebra MV?
//! 3. Are the induced algebras on `R*_x` and `L*_x` isomorphic?

use std::fmt;

use crate::algebra::{Element, FiniteMtlAlgebra};
use crate::classify::is_mv;
use crate::induced::{check_mtl_iso, left_mult_algebra, right_mult_algebra, Induced, Mode};
use crate::order::all_filters;
use crate::stabilizers::{impl_left, impl_right};
use crate::subset::Subset;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Problem {
    Open1,
    Open2,
    Open3,
}

impl Problem {
    pub fn id(self) -> &'static str {
        match self {
            Problem::Open1 => "open1",
            Problem::Open2 => "open2",
            Problem::Open3 => "open3",
        }
    }

    pub fn from_number(k: u8) -> Option<Problem> {
        match k {
            1 => Some(Problem::Open1),
            2 => Some(Problem::Open2),
            3 => Some(Problem::Open3),
            _ => None,
        }
    }
}

impl fmt::Display for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// A filter that is not `X_l` for any nonempty `X`.
    UnreachedFilter(Subset),
    /// The premise holds but the algebra is not MV.
    NotMv,
    /// The induced algebras at `x` are both nontrivial and not isomorphic.
    NonIsomorphic {
        x: Element,
        left_size: usize,
        right_size: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchFinding {
    pub problem: Problem,
    pub algebra: FiniteMtlAlgebra,
    pub witness: Witness,
}

impl SearchFinding {
    /// Re-runs the specific check on the stored algebra.
    pub fn replay(&self) -> bool {
        let a = &self.algebra;
        match (&self.problem, &self.witness) {
            (Problem::Open1, Witness::UnreachedFilter(f)) => {
                !left_stabilizer_values(a).contains(f) && all_filters(a).contains(f)
            }
            (Problem::Open2, Witness::NotMv) => open2_premise(a, false) && !is_mv(a),
            (Problem::Open3, Witness::NonIsomorphic { x, .. }) => {
                matches!(open3_at(a, *x), Some(false))
            }
            _ => false,
        }
    }

    pub fn describe(&self) -> String {
        let a = &self.algebra;
        match &self.witness {
            Witness::UnreachedFilter(f) => format!("filter {{{}}} is no X_l", a.render(f)),
            Witness::NotMv => "X_l = X_r for all X but not MV".to_string(),
            Witness::NonIsomorphic {
                x,
                left_size,
                right_size,
            } => format!(
                "x = {}: L*_x ({left_size} elements) and R*_x ({right_size} elements) not isomorphic",
                a.label(*x)
            ),
        }
    }
}

/// Every value of `X_l` over nonempty `X`. Since `X_l` is the intersection
/// of the `L_x` for `x` in `X`, these are the intersections of nonempty
/// families of singleton stabilizers.
fn left_stabilizer_values(a: &FiniteMtlAlgebra) -> Vec<Subset> {
    let singles: Vec<Subset> = a
        .elements()
        .map(|x| impl_left(a, &Subset::singleton(a.size(), x)).expect("nonempty"))
        .collect();
    let mut values: Vec<Subset> = Vec::new();
    for s in singles {
        let mut next = values.clone();
        next.push(s);
        for v in &values {
            next.push(v.intersection(&s));
        }
        next.sort_by_key(Subset::bits);
        next.dedup();
        values = next;
    }
    values
}

pub fn open1_scan(a: &FiniteMtlAlgebra) -> Vec<SearchFinding> {
    let reached = left_stabilizer_values(a);
    all_filters(a)
        .into_iter()
        .filter(|f| !reached.contains(f))
        .map(|f| SearchFinding {
            problem: Problem::Open1,
            algebra: a.clone(),
            witness: Witness::UnreachedFilter(f),
        })
        .collect()
}

/// `L_x = R_x` for every x, or with `full` set, `X_l = X_r` for every nonempty X.
pub fn open2_premise(a: &FiniteMtlAlgebra, full: bool) -> bool {
    if full {
        Subset::all_nonempty(a.size()).all(|x| impl_left(a, &x) == impl_right(a, &x))
    } else {
        a.elements().all(|x| {
            let s = Subset::singleton(a.size(), x);
            impl_left(a, &s) == impl_right(a, &s)
        })
    }
}

pub fn open2_scan(corpus: &[FiniteMtlAlgebra], full: bool) -> Vec<SearchFinding> {
    corpus
        .iter()
        .filter(|a| open2_premise(a, full) && !is_mv(a))
        .map(|a| SearchFinding {
            problem: Problem::Open2,
            algebra: a.clone(),
            witness: Witness::NotMv,
        })
        .collect()
}

/// `Some(iso?)` when both induced algebras at `x` are nontrivial algebras.
fn open3_at(a: &FiniteMtlAlgebra, x: Element) -> Option<bool> {
    let left = left_mult_algebra(a, x, Mode::Strict).ok()?;
    let right = right_mult_algebra(a, x, Mode::Strict).ok()?;
    match (&left, &right) {
        (Induced::Built(l), Induced::Built(r)) => {
            Some(check_mtl_iso(&l.algebra, &r.algebra).is_some())
        }
        _ => None,
    }
}

pub fn open3_scan(a: &FiniteMtlAlgebra) -> Vec<SearchFinding> {
    a.elements()
        .filter(|&x| a.is_idempotent(x))
        .filter(|&x| open3_at(a, x) == Some(false))
        .map(|x| {
            let sx = Subset::singleton(a.size(), x);
            SearchFinding {
                problem: Problem::Open3,
                algebra: a.clone(),
                witness: Witness::NonIsomorphic {
                    x,
                    left_size: crate::stabilizers::mult_left(a, &sx)
                        .expect("nonempty")
                        .len(),
                    right_size: crate::stabilizers::mult_right(a, &sx)
                        .expect("nonempty")
                        .len(),
                },
            }
        })
        .collect()
}
