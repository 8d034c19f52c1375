//! Finite MTL-algebras given by operation tables.
//!
//! The carrier is `0..n`. Multiplication and implication are always
//! supplied; meet and join may be supplied or derived from the implication
//! order (`x <= y` iff `x -> y = top`). All four tables are stored so every
//! later operation is a lookup.

use std::fmt;

use crate::error::{MtlError, Result};
use crate::subset::Subset;

pub const MAX_CARRIER: usize = 64;

/// Index of an element in the carrier of an algebra.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Element(u8);

impl Element {
    pub fn new(index: usize) -> Self {
        debug_assert!(index < MAX_CARRIER);
        Element(index as u8)
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// Raw input to [`FiniteMtlAlgebra::construct`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AlgebraTables {
    pub name: String,
    pub labels: Vec<String>,
    pub bot: usize,
    pub top: usize,
    pub mul: Vec<Vec<usize>>,
    pub imp: Vec<Vec<usize>>,
    pub meet: Option<Vec<Vec<usize>>>,
    pub join: Option<Vec<Vec<usize>>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteMtlAlgebra {
    name: String,
    n: usize,
    labels: Vec<String>,
    bot: Element,
    top: Element,
    mul: Vec<u8>,
    imp: Vec<u8>,
    meet: Vec<u8>,
    join: Vec<u8>,
    validated: bool,
}

/// Which defining law a [`Violation`] breaks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axiom {
    MeetIdempotent,
    MeetCommutative,
    MeetAssociative,
    JoinIdempotent,
    JoinCommutative,
    JoinAssociative,
    Absorption,
    Bounds,
    MulCommutative,
    MulAssociative,
    MulUnit,
    Adjointness,
    Prelinearity,
    OrderConsistency,
}

impl Axiom {
    pub fn id(self) -> &'static str {
        match self {
            Axiom::MeetIdempotent => "lattice.meet-idempotent",
            Axiom::MeetCommutative => "lattice.meet-commutative",
            Axiom::MeetAssociative => "lattice.meet-associative",
            Axiom::JoinIdempotent => "lattice.join-idempotent",
            Axiom::JoinCommutative => "lattice.join-commutative",
            Axiom::JoinAssociative => "lattice.join-associative",
            Axiom::Absorption => "lattice.absorption",
            Axiom::Bounds => "lattice.bounds",
            Axiom::MulCommutative => "monoid.commutative",
            Axiom::MulAssociative => "monoid.associative",
            Axiom::MulUnit => "monoid.unit",
            Axiom::Adjointness => "adjointness",
            Axiom::Prelinearity => "prelinearity",
            Axiom::OrderConsistency => "order-consistency",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub axiom: Axiom,
    pub witness: Vec<Element>,
}

impl Violation {
    /// Re-evaluates the axiom at the witness; true when the violation is real.
    pub fn replay(&self, a: &FiniteMtlAlgebra) -> bool {
        let w = &self.witness;
        match (self.axiom, w.as_slice()) {
            (Axiom::MeetIdempotent, [x]) => a.meet(*x, *x) != *x,
            (Axiom::JoinIdempotent, [x]) => a.join(*x, *x) != *x,
            (Axiom::MeetCommutative, [x, y]) => a.meet(*x, *y) != a.meet(*y, *x),
            (Axiom::JoinCommutative, [x, y]) => a.join(*x, *y) != a.join(*y, *x),
            (Axiom::MeetAssociative, [x, y, z]) => {
                a.meet(a.meet(*x, *y), *z) != a.meet(*x, a.meet(*y, *z))
            }
            (Axiom::JoinAssociative, [x, y, z]) => {
                a.join(a.join(*x, *y), *z) != a.join(*x, a.join(*y, *z))
            }
            (Axiom::Absorption, [x, y]) => {
                a.meet(*x, a.join(*x, *y)) != *x || a.join(*x, a.meet(*x, *y)) != *x
            }
            (Axiom::Bounds, [x]) => {
                a.meet(a.bot(), *x) != a.bot() || a.join(a.top(), *x) != a.top()
            }
            (Axiom::MulCommutative, [x, y]) => a.mul(*x, *y) != a.mul(*y, *x),
            (Axiom::MulAssociative, [x, y, z]) => {
                a.mul(a.mul(*x, *y), *z) != a.mul(*x, a.mul(*y, *z))
            }
            (Axiom::MulUnit, [x]) => a.mul(a.top(), *x) != *x || a.mul(*x, a.top()) != *x,
            (Axiom::Adjointness, [x, y, z]) => a.leq(a.mul(*x, *y), *z) != a.leq(*x, a.imp(*y, *z)),
            (Axiom::Prelinearity, [x, y]) => a.join(a.imp(*x, *y), a.imp(*y, *x)) != a.top(),
            (Axiom::OrderConsistency, [x, y]) => {
                (a.meet(*x, *y) == *x) != (a.imp(*x, *y) == a.top())
            }
            _ => false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn valid(&self) -> bool {
        self.violations.is_empty()
    }
}

fn flatten(table: &'static str, rows: &[Vec<usize>], n: usize) -> Result<Vec<u8>> {
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return Err(MtlError::TableShape { table, expected: n });
    }
    let mut out = Vec::with_capacity(n * n);
    for (row, r) in rows.iter().enumerate() {
        for (col, &value) in r.iter().enumerate() {
            if value >= n {
                return Err(MtlError::EntryOutOfRange {
                    table,
                    row,
                    col,
                    value,
                    n,
                });
            }
            out.push(value as u8);
        }
    }
    Ok(out)
}

pub fn default_labels(n: usize) -> Vec<String> {
    // 0 and 1 for the bounds, letters for the interior, x<k> once letters run out.
    (0..n)
        .map(|i| {
            if i == 0 {
                "0".to_string()
            } else if i == n - 1 {
                "1".to_string()
            } else if n - 2 <= 26 {
                ((b'a' + (i - 1) as u8) as char).to_string()
            } else {
                format!("x{i}")
            }
        })
        .collect()
}

impl FiniteMtlAlgebra {
    /// Builds an unvalidated algebra, deriving any omitted lattice table from
    /// the implication order.
    pub fn construct(t: AlgebraTables) -> Result<Self> {
        let n = t.mul.len();
        if !(2..=MAX_CARRIER).contains(&n) {
            return Err(MtlError::SizeOutOfRange(n));
        }
        let labels = if t.labels.is_empty() {
            default_labels(n)
        } else {
            t.labels
        };
        let mut seen = std::collections::HashSet::new();
        if labels.len() != n || !labels.iter().all(|l| seen.insert(l.as_str())) {
            return Err(MtlError::BadLabels { expected: n });
        }
        for e in [t.bot, t.top] {
            if e >= n {
                return Err(MtlError::ElementOutOfRange(e));
            }
        }
        let mul = flatten("mul", &t.mul, n)?;
        let imp = flatten("imp", &t.imp, n)?;
        let top = t.top as u8;
        let le = |x: usize, y: usize| imp[x * n + y] == top;

        let mut alg = FiniteMtlAlgebra {
            name: t.name,
            n,
            labels,
            bot: Element::new(t.bot),
            top: Element::new(t.top),
            mul,
            imp: imp.clone(),
            meet: Vec::new(),
            join: Vec::new(),
            validated: false,
        };

        let declared_meet = t
            .meet
            .as_deref()
            .map(|m| flatten("meet", m, n))
            .transpose()?;
        let declared_join = t
            .join
            .as_deref()
            .map(|m| flatten("join", m, n))
            .transpose()?;

        if declared_meet.is_none() || declared_join.is_none() {
            // Derive from the implication order; it has to be a lattice order.
            for x in 0..n {
                if !le(x, x) {
                    return Err(MtlError::NotPartialOrder(format!(
                        "{} -> {} is not top",
                        alg.labels[x], alg.labels[x]
                    )));
                }
                for y in 0..n {
                    if x != y && le(x, y) && le(y, x) {
                        return Err(MtlError::NotPartialOrder(format!(
                            "{} and {} are mutually below each other",
                            alg.labels[x], alg.labels[y]
                        )));
                    }
                    for z in 0..n {
                        if le(x, y) && le(y, z) && !le(x, z) {
                            return Err(MtlError::NotPartialOrder(format!(
                                "{} <= {} <= {} but not {} <= {}",
                                alg.labels[x],
                                alg.labels[y],
                                alg.labels[z],
                                alg.labels[x],
                                alg.labels[z]
                            )));
                        }
                    }
                }
            }
        }

        let derive = |lower: bool| -> Result<Vec<u8>> {
            let mut table = vec![0u8; n * n];
            for x in 0..n {
                for y in 0..n {
                    let bound = |z: usize| {
                        if lower {
                            le(z, x) && le(z, y)
                        } else {
                            le(x, z) && le(y, z)
                        }
                    };
                    let candidates: Vec<usize> = (0..n).filter(|&z| bound(z)).collect();
                    let best = candidates.iter().copied().find(|&c| {
                        candidates
                            .iter()
                            .all(|&d| if lower { le(d, c) } else { le(c, d) })
                    });
                    match best {
                        Some(b) => table[x * n + y] = b as u8,
                        None => {
                            return Err(MtlError::NotLattice {
                                x: alg.labels[x].clone(),
                                y: alg.labels[y].clone(),
                                missing: if lower { "meet" } else { "join" },
                            })
                        }
                    }
                }
            }
            Ok(table)
        };

        alg.meet = match declared_meet {
            Some(m) => m,
            None => derive(true)?,
        };
        alg.join = match declared_join {
            Some(j) => j,
            None => derive(false)?,
        };

        if t.meet.is_some() || t.join.is_some() {
            // Declared tables must induce the same order as the implication.
            for x in 0..n {
                for y in 0..n {
                    let by_imp = le(x, y);
                    if t.meet.is_some() && (alg.meet[x * n + y] as usize == x) != by_imp {
                        return Err(MtlError::LatticeDisagrees {
                            table: "meet",
                            x: alg.labels[x].clone(),
                            y: alg.labels[y].clone(),
                        });
                    }
                    if t.join.is_some() && (alg.join[x * n + y] as usize == y) != by_imp {
                        return Err(MtlError::LatticeDisagrees {
                            table: "join",
                            x: alg.labels[x].clone(),
                            y: alg.labels[y].clone(),
                        });
                    }
                }
            }
        }
        Ok(alg)
    }

    /// Full axiom scan; every violation is collected. Pure.
    pub fn check(&self) -> ValidationReport {
        let n = self.n;
        let els: Vec<Element> = self.elements().collect();
        let mut v = Vec::new();
        let mut push = |axiom, witness: &[Element]| {
            v.push(Violation {
                axiom,
                witness: witness.to_vec(),
            })
        };
        for &x in &els {
            if self.meet(x, x) != x {
                push(Axiom::MeetIdempotent, &[x]);
            }
            if self.join(x, x) != x {
                push(Axiom::JoinIdempotent, &[x]);
            }
            if self.meet(self.bot, x) != self.bot || self.join(self.top, x) != self.top {
                push(Axiom::Bounds, &[x]);
            }
            if self.mul(self.top, x) != x || self.mul(x, self.top) != x {
                push(Axiom::MulUnit, &[x]);
            }
        }
        for &x in &els {
            for &y in &els {
                if self.meet(x, y) != self.meet(y, x) {
                    push(Axiom::MeetCommutative, &[x, y]);
                }
                if self.join(x, y) != self.join(y, x) {
                    push(Axiom::JoinCommutative, &[x, y]);
                }
                if self.meet(x, self.join(x, y)) != x || self.join(x, self.meet(x, y)) != x {
                    push(Axiom::Absorption, &[x, y]);
                }
                if self.mul(x, y) != self.mul(y, x) {
                    push(Axiom::MulCommutative, &[x, y]);
                }
                if self.join(self.imp(x, y), self.imp(y, x)) != self.top {
                    push(Axiom::Prelinearity, &[x, y]);
                }
                if (self.meet(x, y) == x) != (self.imp(x, y) == self.top) {
                    push(Axiom::OrderConsistency, &[x, y]);
                }
            }
        }
        for &x in &els {
            for &y in &els {
                let xy_meet = self.meet(x, y);
                let xy_join = self.join(x, y);
                let xy_mul = self.mul(x, y);
                for &z in &els {
                    if self.meet(xy_meet, z) != self.meet(x, self.meet(y, z)) {
                        push(Axiom::MeetAssociative, &[x, y, z]);
                    }
                    if self.join(xy_join, z) != self.join(x, self.join(y, z)) {
                        push(Axiom::JoinAssociative, &[x, y, z]);
                    }
                    if self.mul(xy_mul, z) != self.mul(x, self.mul(y, z)) {
                        push(Axiom::MulAssociative, &[x, y, z]);
                    }
                    if self.leq(xy_mul, z) != self.leq(x, self.imp(y, z)) {
                        push(Axiom::Adjointness, &[x, y, z]);
                    }
                }
            }
        }
        debug_assert!(n == els.len());
        v.sort_by(|a, b| {
            a.axiom
                .cmp(&b.axiom)
                .then_with(|| a.witness.cmp(&b.witness))
        });
        ValidationReport { violations: v }
    }

    /// Runs [`check`](Self::check) and marks the algebra validated on success.
    pub fn validate(&mut self) -> ValidationReport {
        let report = self.check();
        self.validated = report.valid();
        report
    }

    /// Convenience for code paths that need a validated algebra or nothing.
    pub fn into_validated(mut self) -> std::result::Result<Self, ValidationReport> {
        let report = self.validate();
        if report.valid() {
            Ok(self)
        } else {
            Err(report)
        }
    }

    pub fn is_validated(&self) -> bool {
        self.validated
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = name.into();
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, e: Element) -> &str {
        &self.labels[e.index()]
    }

    pub fn element(&self, label: &str) -> Option<Element> {
        self.labels
            .iter()
            .position(|l| l == label)
            .map(Element::new)
    }

    pub fn bot(&self) -> Element {
        self.bot
    }

    pub fn top(&self) -> Element {
        self.top
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> {
        (0..self.n).map(Element::new)
    }

    #[inline]
    pub fn mul(&self, x: Element, y: Element) -> Element {
        Element(self.mul[x.index() * self.n + y.index()])
    }

    #[inline]
    pub fn imp(&self, x: Element, y: Element) -> Element {
        Element(self.imp[x.index() * self.n + y.index()])
    }

    #[inline]
    pub fn meet(&self, x: Element, y: Element) -> Element {
        Element(self.meet[x.index() * self.n + y.index()])
    }

    #[inline]
    pub fn join(&self, x: Element, y: Element) -> Element {
        Element(self.join[x.index() * self.n + y.index()])
    }

    #[inline]
    pub fn leq(&self, x: Element, y: Element) -> bool {
        self.meet(x, y) == x
    }

    pub fn neg(&self, x: Element) -> Element {
        self.imp(x, self.bot)
    }

    pub fn power(&self, x: Element, k: usize) -> Element {
        (0..k).fold(self.top, |acc, _| self.mul(acc, x))
    }

    pub fn is_idempotent(&self, x: Element) -> bool {
        self.mul(x, x) == x
    }

    /// Row-major tables as nested vectors, suitable for re-construction.
    pub fn tables(&self) -> AlgebraTables {
        let rows = |t: &[u8]| {
            t.chunks(self.n)
                .map(|r| r.iter().map(|&v| v as usize).collect())
                .collect()
        };
        AlgebraTables {
            name: self.name.clone(),
            labels: self.labels.clone(),
            bot: self.bot.index(),
            top: self.top.index(),
            mul: rows(&self.mul),
            imp: rows(&self.imp),
            meet: Some(rows(&self.meet)),
            join: Some(rows(&self.join)),
        }
    }

    /// Checks that a subset was built for a carrier of this size.
    pub fn own(&self, s: &Subset) -> Result<()> {
        if s.universe() != self.n {
            return Err(MtlError::ForeignSubset {
                expected: self.n,
                found: s.universe(),
            });
        }
        Ok(())
    }

    pub fn subset<'a>(&self, labels: impl IntoIterator<Item = &'a str>) -> Result<Subset> {
        let mut s = Subset::empty(self.n);
        for l in labels {
            let e = self
                .element(l)
                .ok_or_else(|| MtlError::UnknownLabel(l.to_string()))?;
            s.insert(e);
        }
        Ok(s)
    }

    /// Renders a subset as comma-joined labels in carrier order, `∅` if empty.
    pub fn render(&self, s: &Subset) -> String {
        if s.is_empty() {
            return "∅".to_string();
        }
        s.iter()
            .map(|e| self.label(e))
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn full(&self) -> Subset {
        Subset::full(self.n)
    }

    pub fn empty(&self) -> Subset {
        Subset::empty(self.n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn boolean2() -> FiniteMtlAlgebra {
        FiniteMtlAlgebra::construct(AlgebraTables {
            name: "b2".into(),
            labels: vec!["0".into(), "1".into()],
            bot: 0,
            top: 1,
            mul: vec![vec![0, 0], vec![0, 1]],
            imp: vec![vec![1, 1], vec![0, 1]],
            meet: None,
            join: None,
        })
        .unwrap()
    }

    #[test]
    fn boolean_two_element_is_valid() {
        let mut b = boolean2();
        assert!(!b.is_validated());
        assert!(b.validate().valid());
        assert!(b.is_validated());
        assert_eq!(b.neg(b.top()), b.bot());
        assert_eq!(b.meet(b.bot(), b.top()), b.bot());
    }

    #[test]
    fn a4_derives_chain_lattice() {
        let a = fixtures::load("a4");
        let e = |l| a.element(l).unwrap();
        assert_eq!(a.meet(e("a"), e("b")), e("a"));
        assert_eq!(a.join(e("a"), e("b")), e("b"));
        assert!(a.leq(e("0"), e("b")));
        assert!(!a.leq(e("b"), e("a")));
        assert_eq!(a.neg(e("a")), e("b"));
        assert_eq!(a.power(e("a"), 2), e("0"));
        assert_eq!(a.power(e("b"), 5), e("b"));
        for x in a.elements() {
            assert_eq!(a.power(x, 0), a.top());
            assert_eq!(a.neg(a.neg(a.neg(x))), a.neg(x));
        }
    }

    #[test]
    fn a5_diamond_has_incomparable_atoms() {
        let a = fixtures::load("a5");
        let e = |l| a.element(l).unwrap();
        assert!(!a.leq(e("a"), e("b")));
        assert!(!a.leq(e("b"), e("a")));
        assert_eq!(a.meet(e("a"), e("b")), e("c"));
        assert_eq!(a.join(e("a"), e("b")), e("1"));
    }

    #[test]
    fn mutated_a4_reports_adjointness_at_a_b() {
        let a = fixtures::load("a4");
        let mut t = a.tables();
        let (ia, ib) = (
            a.element("a").unwrap().index(),
            a.element("b").unwrap().index(),
        );
        t.mul[ia][ib] = ib;
        let m = FiniteMtlAlgebra::construct(t).unwrap();
        let report = m.check();
        assert!(!report.valid());
        let adj: Vec<_> = report
            .violations
            .iter()
            .filter(|v| v.axiom == Axiom::Adjointness)
            .collect();
        assert!(adj
            .iter()
            .any(|v| v.witness[0] == Element::new(ia) && v.witness[1] == Element::new(ib)));
        assert!(report.violations.iter().all(|v| v.replay(&m)));
    }

    #[test]
    fn out_of_range_entry_is_rejected() {
        let mut t = boolean2().tables();
        t.mul[0][1] = 7;
        assert!(matches!(
            FiniteMtlAlgebra::construct(t),
            Err(MtlError::EntryOutOfRange {
                table: "mul",
                row: 0,
                col: 1,
                ..
            })
        ));
    }

    #[test]
    fn non_lattice_order_is_rejected() {
        // 0 below a and b, both below nothing else: a,b have no join.
        let t = AlgebraTables {
            labels: vec!["0".into(), "a".into(), "b".into()],
            bot: 0,
            top: 1,
            mul: vec![vec![0; 3]; 3],
            imp: vec![vec![1, 1, 1], vec![0, 1, 0], vec![0, 0, 1]],
            ..Default::default()
        };
        assert!(matches!(
            FiniteMtlAlgebra::construct(t),
            Err(MtlError::NotLattice { .. })
        ));
    }

    #[test]
    fn declared_lattice_must_agree() {
        let b = boolean2();
        let mut t = b.tables();
        t.meet = Some(vec![vec![0, 1], vec![1, 1]]);
        assert!(matches!(
            FiniteMtlAlgebra::construct(t),
            Err(MtlError::LatticeDisagrees { table: "meet", .. })
        ));
    }

    #[test]
    fn revalidation_is_stable_and_round_trips() {
        for name in fixtures::NAMES {
            let a = fixtures::load(name);
            let r1 = a.check();
            let r2 = a.check();
            assert_eq!(r1, r2);
            let rebuilt = FiniteMtlAlgebra::construct(a.tables()).unwrap();
            assert_eq!(rebuilt.check().valid(), r1.valid());
        }
    }
}
