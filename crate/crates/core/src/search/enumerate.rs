//! Exhaustive enumeration of small MTL-algebras up to isomorphism.
//!
//! Chains are searched multiplication-first: on a finite chain every monotone
//! multiplication has a residuum, so only commutativity, associativity,
//! monotonicity and the unit need filtering. A second, implication-first
//! search exists to cross-check the first. General lattices are enumerated
//! by natural labeling, then multiplications below meet that distribute over
//! joins are kept and their residua derived.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::algebra::{default_labels, AlgebraTables, FiniteMtlAlgebra};
use crate::error::{MtlError, Result};
use crate::search::canon::{canonical_form, canonicalize};
use crate::search::families::chain_from_mul;

/// Parameters of one enumeration run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumerationSpec {
    pub size: usize,
    pub chains_only: bool,
    pub dedup: bool,
    pub limit: Option<usize>,
    /// Permits `size == 6` for the general (non-chain) search.
    pub allow_six: bool,
}

impl EnumerationSpec {
    pub fn new(size: usize) -> Self {
        EnumerationSpec {
            size,
            chains_only: false,
            dedup: true,
            limit: None,
            allow_six: false,
        }
    }
}

fn size_error(size: usize, range: &'static str, what: &'static str) -> MtlError {
    MtlError::SearchSize { size, range, what }
}

/// Runs an enumeration described by `spec`. Output is sorted by canonical form.
pub fn enumerate(spec: &EnumerationSpec) -> Result<Vec<FiniteMtlAlgebra>> {
    let mut out = if spec.chains_only {
        chains_raw(spec.size)?
    } else {
        all_raw(spec.size, spec.allow_six)?
    };
    let prefix = if spec.chains_only { "chain" } else { "mtl" };
    out = finish(out, spec.size, prefix, spec.dedup);
    if let Some(k) = spec.limit {
        out.truncate(k);
    }
    Ok(out)
}

pub fn enumerate_chains(n: usize) -> Result<Vec<FiniteMtlAlgebra>> {
    enumerate(&EnumerationSpec {
        chains_only: true,
        ..EnumerationSpec::new(n)
    })
}

pub fn enumerate_all(n: usize, allow_six: bool) -> Result<Vec<FiniteMtlAlgebra>> {
    enumerate(&EnumerationSpec {
        allow_six,
        ..EnumerationSpec::new(n)
    })
}

/// Sorts by canonical form, optionally drops isomorphic duplicates, and
/// relabels every survivor into its canonical labeling.
fn finish(
    algs: Vec<FiniteMtlAlgebra>,
    n: usize,
    prefix: &str,
    dedup: bool,
) -> Vec<FiniteMtlAlgebra> {
    let mut keyed: Vec<(Vec<u8>, FiniteMtlAlgebra)> = algs
        .into_par_iter()
        .map(|a| (canonical_form(&a), a))
        .collect();
    keyed.sort_by(|x, y| x.0.cmp(&y.0));
    if dedup {
        keyed.dedup_by(|x, y| x.0 == y.0);
    }
    keyed
        .into_par_iter()
        .enumerate()
        .map(|(k, (_, a))| {
            let mut c = canonicalize(&a, format!("{prefix}{n}_{k}"));
            c.validate();
            c
        })
        .collect()
}

/// Interior cells `(i, j)`, `1 <= i <= j <= n-2`, in row-major order.
fn interior_cells(n: usize) -> Vec<(usize, usize)> {
    let mut cells = Vec::new();
    for i in 1..n.saturating_sub(1) {
        for j in i..n - 1 {
            cells.push((i, j));
        }
    }
    cells
}

/// Multiplication table with the constant rows filled in and interior cells zero.
fn base_mul(n: usize, bot: usize, top: usize) -> Vec<u8> {
    let mut m = vec![bot as u8; n * n];
    for x in 0..n {
        m[top * n + x] = x as u8;
        m[x * n + top] = x as u8;
    }
    m
}

fn associative(n: usize, m: &[u8]) -> bool {
    (0..n).all(|x| {
        (0..n).all(|y| {
            let xy = m[x * n + y] as usize;
            (0..n).all(|z| m[xy * n + z] == m[x * n + m[y * n + z] as usize])
        })
    })
}

fn chains_raw(n: usize) -> Result<Vec<FiniteMtlAlgebra>> {
    if !(2..=7).contains(&n) {
        return Err(size_error(n, "2..=7", "chain enumeration"));
    }
    let cells = interior_cells(n);
    let tables: Vec<Vec<u8>> = if cells.is_empty() {
        vec![base_mul(n, 0, n - 1)]
    } else {
        // one task per value of the first free cell
        let (i0, j0) = cells[0];
        (0..=i0.min(j0))
            .into_par_iter()
            .flat_map_iter(|v| {
                let mut m = base_mul(n, 0, n - 1);
                m[i0 * n + j0] = v as u8;
                m[j0 * n + i0] = v as u8;
                let mut found = Vec::new();
                chain_search(n, &cells, 1, &mut m, &mut found);
                found
            })
            .collect()
    };
    tables
        .into_iter()
        .map(|m| chain_from_mul(format!("chain{n}"), n, &m))
        .collect()
}

fn chain_search(
    n: usize,
    cells: &[(usize, usize)],
    k: usize,
    m: &mut Vec<u8>,
    out: &mut Vec<Vec<u8>>,
) {
    if k == cells.len() {
        if associative(n, m) {
            out.push(m.clone());
        }
        return;
    }
    let (i, j) = cells[k];
    // lower neighbours are already fixed: (i, j-1) and (i-1, j)
    let lo = m[i * n + j - 1].max(m[(i - 1) * n + j]);
    for v in lo..=(i as u8) {
        m[i * n + j] = v;
        m[j * n + i] = v;
        chain_search(n, cells, k + 1, m, out);
    }
    m[i * n + j] = 0;
    m[j * n + i] = 0;
}

/// Implication-first chain search: implication tables with `y <= x -> y < 1`
/// for `x > y`, antitone in the first and monotone in the second argument;
/// multiplication is read off as `x * y = min{z | x <= y -> z}` and the pair
/// is kept when it validates. Sorted by canonical form, no relabeling.
pub fn enumerate_chains_by_imp(n: usize) -> Result<Vec<FiniteMtlAlgebra>> {
    if !(2..=6).contains(&n) {
        return Err(size_error(
            n,
            "2..=6",
            "implication-first chain enumeration",
        ));
    }
    let top = n - 1;
    let cells: Vec<(usize, usize)> = (1..n).flat_map(|x| (0..x).map(move |y| (x, y))).collect();
    let mut imp = vec![top as u8; n * n];
    let mut found = Vec::new();
    imp_search(n, &cells, 0, &mut imp, &mut found);
    let mut out: Vec<(Vec<u8>, FiniteMtlAlgebra)> = found
        .into_par_iter()
        .filter_map(|imp| {
            let rows = |t: &[u8]| -> Vec<Vec<usize>> {
                t.chunks(n)
                    .map(|r| r.iter().map(|&v| v as usize).collect())
                    .collect()
            };
            let mul: Vec<u8> = (0..n * n)
                .map(|k| {
                    let (x, y) = (k / n, k % n);
                    (0..n).find(|&z| x <= imp[y * n + z] as usize).unwrap() as u8
                })
                .collect();
            let a = FiniteMtlAlgebra::construct(AlgebraTables {
                name: format!("chain{n}"),
                labels: default_labels(n),
                bot: 0,
                top,
                mul: rows(&mul),
                imp: rows(&imp),
                meet: None,
                join: None,
            })
            .ok()?;
            let a = a.into_validated().ok()?;
            Some((canonical_form(&a), a))
        })
        .collect();
    out.sort_by(|x, y| x.0.cmp(&y.0));
    Ok(out.into_iter().map(|(_, a)| a).collect())
}

fn imp_search(
    n: usize,
    cells: &[(usize, usize)],
    k: usize,
    imp: &mut Vec<u8>,
    out: &mut Vec<Vec<u8>>,
) {
    if k == cells.len() {
        out.push(imp.clone());
        return;
    }
    let (x, y) = cells[k];
    // antitone in x: imp(x, y) <= imp(x-1, y); monotone in y: imp(x, y) >= imp(x, y-1)
    let hi = imp[(x - 1) * n + y].min((n - 2) as u8);
    let lo = if y == 0 { 0 } else { imp[x * n + y - 1] }.max(y as u8);
    if lo <= hi {
        for v in lo..=hi {
            imp[x * n + y] = v;
            imp_search(n, cells, k + 1, imp, out);
        }
    }
    imp[x * n + y] = (n - 1) as u8;
}

/// Order relation of a bounded poset on `0..n` whose order refines index order.
#[derive(Clone)]
struct Lattice {
    n: usize,
    leq: Vec<bool>,
    meet: Vec<u8>,
    join: Vec<u8>,
}

impl Lattice {
    fn le(&self, x: usize, y: usize) -> bool {
        self.leq[x * self.n + y]
    }
}

/// Every lattice on `0..n` with bottom 0, top n-1 and `x <= y => x <= y` as
/// integers, one representative per isomorphism class.
fn lattices(n: usize) -> Vec<Lattice> {
    let pairs: Vec<(usize, usize)> = (1..n - 1)
        .flat_map(|i| (i + 1..n - 1).map(move |j| (i, j)))
        .collect();
    let mut seen: BTreeMap<Vec<bool>, ()> = BTreeMap::new();
    let mut out = Vec::new();
    for mask in 0u32..(1 << pairs.len()) {
        let mut leq = vec![false; n * n];
        for x in 0..n {
            leq[x * n + x] = true;
            leq[x] = true;
            leq[x * n + n - 1] = true;
        }
        for (b, &(i, j)) in pairs.iter().enumerate() {
            if mask & (1 << b) != 0 {
                leq[i * n + j] = true;
            }
        }
        let transitive = (0..n).all(|x| {
            (0..n).all(|y| !leq[x * n + y] || (0..n).all(|z| !leq[y * n + z] || leq[x * n + z]))
        });
        if !transitive {
            continue;
        }
        let Some(l) = complete(n, leq) else { continue };
        let key = order_key(&l);
        if seen.insert(key, ()).is_none() {
            out.push(l);
        }
    }
    out
}

fn complete(n: usize, leq: Vec<bool>) -> Option<Lattice> {
    let mut meet = vec![0u8; n * n];
    let mut join = vec![0u8; n * n];
    for x in 0..n {
        for y in 0..n {
            let lower: Vec<usize> = (0..n)
                .filter(|&z| leq[z * n + x] && leq[z * n + y])
                .collect();
            let m = *lower
                .iter()
                .find(|&&z| lower.iter().all(|&w| leq[w * n + z]))?;
            let upper: Vec<usize> = (0..n)
                .filter(|&z| leq[x * n + z] && leq[y * n + z])
                .collect();
            let j = *upper
                .iter()
                .find(|&&z| upper.iter().all(|&w| leq[z * n + w]))?;
            meet[x * n + y] = m as u8;
            join[x * n + y] = j as u8;
        }
    }
    Some(Lattice { n, leq, meet, join })
}

/// Least order matrix over relabelings of the interior.
fn order_key(l: &Lattice) -> Vec<bool> {
    let n = l.n;
    let mut best: Option<Vec<bool>> = None;
    let mut perm: Vec<usize> = (0..n).collect();
    permute_interior(&mut perm, 1, n, &mut |p| {
        let mut m = vec![false; n * n];
        for x in 0..n {
            for y in 0..n {
                m[p[x] * n + p[y]] = l.le(x, y);
            }
        }
        if best.as_ref().is_none_or(|b| m < *b) {
            best = Some(m);
        }
    });
    best.unwrap()
}

fn permute_interior(p: &mut Vec<usize>, k: usize, n: usize, f: &mut dyn FnMut(&[usize])) {
    if k + 1 >= n {
        f(p);
        return;
    }
    for i in k..n - 1 {
        p.swap(k, i);
        permute_interior(p, k + 1, n, f);
        p.swap(k, i);
    }
}

fn all_raw(n: usize, allow_six: bool) -> Result<Vec<FiniteMtlAlgebra>> {
    let max = if allow_six { 6 } else { 5 };
    if n < 2 || n > max {
        let range = if allow_six {
            "2..=6"
        } else {
            "2..=5 (6 with opt-in)"
        };
        return Err(size_error(n, range, "full enumeration"));
    }
    let cells = interior_cells(n);
    let found: Vec<FiniteMtlAlgebra> = lattices(n)
        .into_par_iter()
        .flat_map_iter(|l| {
            let mut m = base_mul(n, 0, n - 1);
            let mut tables = Vec::new();
            lattice_search(&l, &cells, 0, &mut m, &mut tables);
            tables.into_iter().filter_map(move |m| residuated(&l, &m))
        })
        .collect();
    Ok(found)
}

fn lattice_search(
    l: &Lattice,
    cells: &[(usize, usize)],
    k: usize,
    m: &mut Vec<u8>,
    out: &mut Vec<Vec<u8>>,
) {
    let n = l.n;
    if k == cells.len() {
        if associative(n, m) && distributes(l, m) {
            out.push(m.clone());
        }
        return;
    }
    let (i, j) = cells[k];
    let cap = l.meet[i * n + j] as usize;
    for v in 0..n {
        if !l.le(v, cap) {
            continue;
        }
        let monotone = cells[..k].iter().all(|&(p, q)| {
            let w = m[p * n + q] as usize;
            let below = (l.le(p, i) && l.le(q, j)) || (l.le(q, i) && l.le(p, j));
            let above = (l.le(i, p) && l.le(j, q)) || (l.le(i, q) && l.le(j, p));
            (!below || l.le(w, v)) && (!above || l.le(v, w))
        });
        if monotone {
            m[i * n + j] = v as u8;
            m[j * n + i] = v as u8;
            lattice_search(l, cells, k + 1, m, out);
        }
    }
    m[i * n + j] = 0;
    m[j * n + i] = 0;
}

fn distributes(l: &Lattice, m: &[u8]) -> bool {
    let n = l.n;
    (0..n).all(|x| {
        (0..n).all(|y| {
            (0..n).all(|z| {
                let lhs = m[x * n + l.join[y * n + z] as usize];
                let rhs = l.join[m[x * n + y] as usize * n + m[x * n + z] as usize];
                lhs == rhs
            })
        })
    })
}

/// Derives `y -> z` as the join of `{x | x*y <= z}` and keeps the algebra if it validates.
fn residuated(l: &Lattice, m: &[u8]) -> Option<FiniteMtlAlgebra> {
    let n = l.n;
    let rows = |t: &[u8]| -> Vec<Vec<usize>> {
        t.chunks(n)
            .map(|r| r.iter().map(|&v| v as usize).collect())
            .collect()
    };
    let mut imp = vec![0u8; n * n];
    for y in 0..n {
        for z in 0..n {
            let mut acc = 0usize;
            for x in 0..n {
                if l.le(m[x * n + y] as usize, z) {
                    acc = l.join[acc * n + x] as usize;
                }
            }
            imp[y * n + z] = acc as u8;
        }
    }
    let a = FiniteMtlAlgebra::construct(AlgebraTables {
        name: format!("mtl{n}"),
        labels: default_labels(n),
        bot: 0,
        top: n - 1,
        mul: rows(m),
        imp: rows(&imp),
        meet: Some(rows(&l.meet)),
        join: Some(rows(&l.join)),
    })
    .ok()?;
    a.into_validated().ok()
}
