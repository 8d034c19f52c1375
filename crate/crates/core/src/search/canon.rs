//! Canonical forms for isomorphism dedup.
//!
//! An isomorphism preserves the lattice order, so it carries order-preserving
//! labelings of one algebra onto those of the other. The canonical form is
//! therefore taken as the lexicographically least `(mul, imp)` serialization
//! over the labelings that are linear extensions of the order. Every such
//! labeling sends bot to 0 and top to n-1. On a chain there is exactly one.

use crate::algebra::{default_labels, AlgebraTables, Element, FiniteMtlAlgebra};

/// `[n, mul row-major..., imp row-major...]` under the labeling `p` (old -> new).
fn serialize_under(a: &FiniteMtlAlgebra, p: &[u8], inv: &[u8]) -> Vec<u8> {
    let n = a.size();
    let mut out = Vec::with_capacity(1 + 2 * n * n);
    out.push(n as u8);
    for op in [FiniteMtlAlgebra::mul, FiniteMtlAlgebra::imp] {
        for i in 0..n {
            for j in 0..n {
                let x = Element::new(inv[i] as usize);
                let y = Element::new(inv[j] as usize);
                out.push(p[op(a, x, y).index()]);
            }
        }
    }
    out
}

/// Calls `visit(p, inv)` for every linear extension of the order of `a`.
fn linear_extensions(a: &FiniteMtlAlgebra, visit: &mut dyn FnMut(&[u8], &[u8])) {
    let n = a.size();
    // below[x]: strict lower covers and everything under them
    let below: Vec<u64> = (0..n)
        .map(|x| {
            let x = Element::new(x);
            a.elements()
                .filter(|&y| y != x && a.leq(y, x))
                .fold(0u64, |m, y| m | 1 << y.index())
        })
        .collect();
    let mut p = vec![0u8; n];
    let mut inv = vec![0u8; n];
    fn go(
        k: usize,
        n: usize,
        placed: u64,
        below: &[u64],
        p: &mut [u8],
        inv: &mut [u8],
        visit: &mut dyn FnMut(&[u8], &[u8]),
    ) {
        if k == n {
            visit(p, inv);
            return;
        }
        for x in 0..n {
            if placed & (1 << x) == 0 && below[x] & !placed == 0 {
                p[x] = k as u8;
                inv[k] = x as u8;
                go(k + 1, n, placed | 1 << x, below, p, inv, visit);
            }
        }
    }
    go(0, n, 0, &below, &mut p, &mut inv, visit);
}

/// The least serialization together with a labeling (old -> new) attaining it.
fn best_labeling(a: &FiniteMtlAlgebra) -> (Vec<u8>, Vec<usize>) {
    let mut best: Option<(Vec<u8>, Vec<usize>)> = None;
    linear_extensions(a, &mut |p, inv| {
        let s = serialize_under(a, p, inv);
        if best.as_ref().is_none_or(|(b, _)| s < *b) {
            best = Some((s, p.iter().map(|&v| v as usize).collect()));
        }
    });
    best.expect("a finite poset has a linear extension")
}

pub fn canonical_form(a: &FiniteMtlAlgebra) -> Vec<u8> {
    best_labeling(a).0
}

/// `a` relabeled into its canonical labeling, with default labels.
/// Isomorphic inputs yield identical tables.
pub fn canonicalize(a: &FiniteMtlAlgebra, name: impl Into<String>) -> FiniteMtlAlgebra {
    let (_, p) = best_labeling(a);
    let mut t = permuted(a, &p).tables();
    t.name = name.into();
    t.labels = default_labels(a.size());
    FiniteMtlAlgebra::construct(t).expect("relabeling keeps the tables valid")
}

pub fn canonical_hex(a: &FiniteMtlAlgebra) -> String {
    hex::encode(canonical_form(a))
}

/// Relabels `a` so that old element `i` becomes `p[i]`. Labels travel with
/// their elements. The result is constructed from permuted tables and
/// carries the validation state of a fresh construction.
pub fn permuted(a: &FiniteMtlAlgebra, p: &[usize]) -> FiniteMtlAlgebra {
    let n = a.size();
    let mut inv = vec![0usize; n];
    for (old, &new) in p.iter().enumerate() {
        inv[new] = old;
    }
    let table = |op: fn(&FiniteMtlAlgebra, Element, Element) -> Element| -> Vec<Vec<usize>> {
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| p[op(a, Element::new(inv[i]), Element::new(inv[j])).index()])
                    .collect()
            })
            .collect()
    };
    FiniteMtlAlgebra::construct(AlgebraTables {
        name: a.name().to_string(),
        labels: (0..n).map(|i| a.labels()[inv[i]].clone()).collect(),
        bot: p[a.bot().index()],
        top: p[a.top().index()],
        mul: table(FiniteMtlAlgebra::mul),
        imp: table(FiniteMtlAlgebra::imp),
        meet: Some(table(FiniteMtlAlgebra::meet)),
        join: Some(table(FiniteMtlAlgebra::join)),
    })
    .expect("a relabeling of a valid algebra is constructible")
}
