//! Registry of stated claims and their brute-force verification.
//!
//! Each claim quantifies over a [`Domain`] of instances (element tuples,
//! subsets, subset pairs, idempotents, or a single global instance). The
//! verifier scans instances in a fixed order, counts failures, and keeps the
//! first one as the witness. Ids are stable and independent of any numbering
//! drift in the source statements.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::algebra::{Element, FiniteMtlAlgebra};
use crate::classify::{
    godel_by_left, godel_by_right, godel_chain_by_left, godel_chain_by_right, is_bl, is_chain,
    is_godel, is_imtl, is_integral_mtl, is_mv,
};
use crate::error::{MtlError, Result};
use crate::induced::{
    left_mult_algebra, mv_left_iso, order_iso_right, right_mult_algebra, Induced, Mode,
};
use crate::order::{
    all_filters, generated_filter, godel_center, is_filter, is_lattice_ideal, subalgebra_failure,
};
use crate::stabilizers::{
    impl_left, impl_right, impl_stab, mult_left, mult_right, mult_stab, ortho,
};
use crate::subset::Subset;

/// Subset claims are exhaustive up to this carrier size and sampled above it.
pub const EXHAUSTIVE_SUBSETS_MAX_N: usize = 12;
/// Subset-pair claims are exhaustive up to this carrier size.
pub const EXHAUSTIVE_PAIRS_MAX_N: usize = 7;
pub const SAMPLE_COUNT: usize = 4096;
pub const SAMPLE_SEED: u64 = 0x5eed_0f57;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Holds,
    Refuted,
    NotApplicable,
    /// The statement refers to an undefined notion.
    NotEvaluable,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Holds => "holds",
            Verdict::Refuted => "refuted",
            Verdict::NotApplicable => "not-applicable",
            Verdict::NotEvaluable => "not-evaluable",
        }
    }
}

/// What a regression run should expect from a claim.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Expectation {
    Theorem,
    /// Stated as a theorem but contradicted by a worked example; a run that
    /// stops refuting it on the known counterexample is a regression.
    Refutable,
    /// Stated as an open question with a negative answer by example.
    Question,
    Undefined,
}

impl Expectation {
    pub fn as_str(self) -> &'static str {
        match self {
            Expectation::Theorem => "theorem",
            Expectation::Refutable => "refutable",
            Expectation::Question => "question",
            Expectation::Undefined => "undefined",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Hypothesis {
    Bl,
    Mv,
    Godel,
}

impl Hypothesis {
    pub fn holds(self, a: &FiniteMtlAlgebra) -> bool {
        match self {
            Hypothesis::Bl => is_bl(a),
            Hypothesis::Mv => is_mv(a),
            Hypothesis::Godel => is_godel(a),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Hypothesis::Bl => "BL",
            Hypothesis::Mv => "MV",
            Hypothesis::Godel => "Godel",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Domain {
    /// All k-tuples of elements, lexicographic.
    Elements(usize),
    /// k-tuples whose first entry is idempotent.
    IdempotentTuples(usize),
    /// Nonempty subsets, ascending by bit pattern.
    Subsets,
    /// Pairs `X <= Y` of nonempty subsets, by `Y` then `X`.
    SubsetPairs,
    Idempotents,
    Global,
    Undefined,
}

impl Domain {
    pub fn describe(self) -> &'static str {
        match self {
            Domain::Elements(_) => "element tuples",
            Domain::IdempotentTuples(_) => "tuples led by an idempotent",
            Domain::Subsets => "one nonempty subset",
            Domain::SubsetPairs => "two nested nonempty subsets",
            Domain::Idempotents => "idempotent elements",
            Domain::Global => "the whole algebra",
            Domain::Undefined => "nothing",
        }
    }
}

/// One point of a claim's quantifier domain.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Instance {
    pub sets: Vec<Subset>,
    pub elems: Vec<Element>,
}

/// Why an instance fails: extra elements pinpointing the failure and a readable account.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub elems: Vec<Element>,
    pub detail: String,
}

type BinOp = fn(&FiniteMtlAlgebra, Element, Element) -> Element;

type Check = fn(&FiniteMtlAlgebra, &Instance) -> std::result::Result<(), Failure>;

pub struct Claim {
    pub id: &'static str,
    pub statement: &'static str,
    pub hypothesis: Option<Hypothesis>,
    pub expectation: Expectation,
    pub domain: Domain,
    check: Check,
}

impl std::fmt::Debug for Claim {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Claim").field("id", &self.id).finish()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub instance: Instance,
    pub failure: Failure,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClaimOutcome {
    pub claim: &'static str,
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    /// Instances checked.
    pub scope: usize,
    /// True when subsets were sampled rather than exhausted.
    pub sampled: bool,
    /// Instances that failed.
    pub refuting: usize,
}

impl ClaimOutcome {
    /// Re-checks the witness instance; true iff it still fails the same way.
    pub fn replay(&self, a: &FiniteMtlAlgebra) -> bool {
        let (Some(w), Ok(c)) = (&self.witness, find_claim(self.claim)) else {
            return false;
        };
        (c.check)(a, &w.instance).err().as_ref() == Some(&w.failure)
    }

    /// Witness rendered with labels: sets, then instance elements, then detail.
    pub fn describe_witness(&self, a: &FiniteMtlAlgebra) -> String {
        let Some(w) = &self.witness else {
            return String::new();
        };
        let mut parts: Vec<String> = Vec::new();
        let names = ["X", "Y"];
        for (k, s) in w.instance.sets.iter().enumerate() {
            parts.push(format!("{}={}", names.get(k).unwrap_or(&"Z"), braces(a, s)));
        }
        if !w.instance.elems.is_empty() {
            let e: Vec<&str> = w.instance.elems.iter().map(|&e| a.label(e)).collect();
            parts.push(format!("({})", e.join(",")));
        }
        parts.push(w.failure.detail.clone());
        parts.join(" ")
    }
}

fn fail(elems: Vec<Element>, detail: impl Into<String>) -> std::result::Result<(), Failure> {
    Err(Failure {
        elems,
        detail: detail.into(),
    })
}

fn ensure(
    ok: bool,
    elems: Vec<Element>,
    detail: impl FnOnce() -> String,
) -> std::result::Result<(), Failure> {
    if ok {
        Ok(())
    } else {
        fail(elems, detail())
    }
}

fn single(a: &FiniteMtlAlgebra, x: Element) -> Subset {
    Subset::singleton(a.size(), x)
}

fn braces(a: &FiniteMtlAlgebra, s: &Subset) -> String {
    if s.is_empty() {
        return a.render(s);
    }
    format!("{{{}}}", a.render(s))
}

/// Nonempty subsets in scan order: all of them up to the exhaustive bound,
/// otherwise a fixed-seed sample, sorted and deduplicated.
pub fn subset_scope(n: usize) -> (Vec<Subset>, bool) {
    if n <= EXHAUSTIVE_SUBSETS_MAX_N {
        return (Subset::all_nonempty(n).collect(), false);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);
    let mask = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut bits: Vec<u64> = (0..SAMPLE_COUNT)
        .map(|_| loop {
            let b = rng.gen::<u64>() & mask;
            if b != 0 {
                break b;
            }
        })
        .collect();
    bits.sort_unstable();
    bits.dedup();
    (
        bits.into_iter()
            .map(|b| Subset::from_bits(n, b).expect("masked"))
            .collect(),
        true,
    )
}

/// Nested pairs `(X, Y)`, `X <= Y`, exhaustive up to the pair bound.
pub fn pair_scope(n: usize) -> (Vec<(Subset, Subset)>, bool) {
    if n <= EXHAUSTIVE_PAIRS_MAX_N {
        let mut out = Vec::new();
        for y in Subset::all_nonempty(n) {
            let yb = y.bits();
            let mut subs: Vec<u64> = Vec::new();
            let mut x = yb;
            while x != 0 {
                subs.push(x);
                x = (x - 1) & yb;
            }
            subs.sort_unstable();
            for x in subs {
                out.push((Subset::from_bits(n, x).expect("submask"), y));
            }
        }
        return (out, false);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED ^ 0x9a17);
    let mask = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut pairs: Vec<(u64, u64)> = Vec::with_capacity(SAMPLE_COUNT);
    while pairs.len() < SAMPLE_COUNT {
        let y = rng.gen::<u64>() & mask;
        let x = y & rng.gen::<u64>();
        if x != 0 {
            pairs.push((y, x));
        }
    }
    pairs.sort_unstable();
    pairs.dedup();
    (
        pairs
            .into_iter()
            .map(|(y, x)| {
                (
                    Subset::from_bits(n, x).unwrap(),
                    Subset::from_bits(n, y).unwrap(),
                )
            })
            .collect(),
        true,
    )
}

fn tuples(n: usize, k: usize) -> Vec<Vec<Element>> {
    let mut out = vec![Vec::new()];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..n).map(move |i| {
                    let mut t = t.clone();
                    t.push(Element::new(i));
                    t
                })
            })
            .collect();
    }
    out
}

fn instances(a: &FiniteMtlAlgebra, domain: Domain) -> (Vec<Instance>, bool) {
    let n = a.size();
    let of_elems = |elems: Vec<Element>| Instance {
        sets: Vec::new(),
        elems,
    };
    match domain {
        Domain::Elements(k) => (tuples(n, k).into_iter().map(of_elems).collect(), false),
        Domain::IdempotentTuples(k) => (
            tuples(n, k)
                .into_iter()
                .filter(|t| a.is_idempotent(t[0]))
                .map(of_elems)
                .collect(),
            false,
        ),
        Domain::Idempotents => (
            a.elements()
                .filter(|&e| a.is_idempotent(e))
                .map(|e| of_elems(vec![e]))
                .collect(),
            false,
        ),
        Domain::Subsets => {
            let (sets, sampled) = subset_scope(n);
            (
                sets.into_iter()
                    .map(|s| Instance {
                        sets: vec![s],
                        elems: Vec::new(),
                    })
                    .collect(),
                sampled,
            )
        }
        Domain::SubsetPairs => {
            let (pairs, sampled) = pair_scope(n);
            (
                pairs
                    .into_iter()
                    .map(|(x, y)| Instance {
                        sets: vec![x, y],
                        elems: Vec::new(),
                    })
                    .collect(),
                sampled,
            )
        }
        Domain::Global => (vec![Instance::default()], false),
        Domain::Undefined => (Vec::new(), false),
    }
}

fn e2(i: &Instance) -> (Element, Element) {
    (i.elems[0], i.elems[1])
}

fn e3(i: &Instance) -> (Element, Element, Element) {
    (i.elems[0], i.elems[1], i.elems[2])
}

fn x_of(i: &Instance) -> Subset {
    i.sets[0]
}

// ---- basic identities -------------------------------------------------------

fn p2_2_1(a: &FiniteMtlAlgebra, i: &Instance) -> std::result::Result<(), Failure> {
    let (x, y) = e2(i);
    ensure(a.leq(x, y) == (a.imp(x, y) == a.top()), vec![], || {
        "order and implication disagree".into()
    })
}

fn p2_2_2(a: &FiniteMtlAlgebra, i: &Instance) -> std::result::Result<(), Failure> {
    let (x, y) = e2(i);
    ensure(a.leq(a.mul(x, y), a.meet(x, y)), vec![], || {
        "x*y is not below x/\\y".into()
    })
}

fn p2_2_3(a: &FiniteMtlAlgebra, i: &Instance) -> std::result::Result<(), Failure> {
    let (x, y, z) = e3(i);
    ensure(
        a.imp(x, a.meet(y, z)) == a.meet(a.imp(x, y), a.imp(x, z)),
        vec![],
        || "x->(y/\\z) differs from (x->y)/\\(x->z)".into(),
    )
}

fn p2_2_4(a: &FiniteMtlAlgebra, i: &Instance) -> std::result::Result<(), Failure> {
    let (x, y, z) = e3(i);
    ensure(
        a.imp(a.join(x, y), z) == a.meet(a.imp(x, z), a.imp(y, z)),
        vec![],
        || "(x\\/y)->z differs from (x->z)/\\(y->z)".into(),
    )
}

fn p2_2_5(a: &FiniteMtlAlgebra, i: &Instance) -> std::result::Result<(), Failure> {
    let (x, y) = e2(i);
    ensure(a.imp(x, y) == a.imp(x, a.meet(x, y)), vec![], || {
        "x->y differs from x->(x/\\y)".into()
    })
}

fn p2_2_6(a: &FiniteMtlAlgebra, i: &Instance) -> std::result::Result<(), Failure> {
    let (x, y) = e2(i);
    ensure(a.imp(x, y) == a.imp(a.join(x, y), y), vec![], || {
        "x->y differs from (x\\/y)->y".into()
    })
}

fn p2_2_7(a: &FiniteMtlAlgebra, i: &Instance) -> std::result::Result<(), Failure> {
    let (x, y, z) = e3(i);
    ensure(
        a.imp(a.meet(x, y), z) == a.join(a.imp(x, z), a.imp(y, z)),
        vec![],
        || "(x/\\y)->z differs from (x->z)\\/(y->z)".into(),
    )
}

fn p2_2_8(a: &FiniteMtlAlgebra, i: &Instance) -> std::result::Result<(), Failure> {
    let (x, y) = e2(i);
    let rhs = a.meet(a.imp(a.imp(x, y), y), a.imp(a.imp(y, x), x));
    ensure(a.join(x, y) == rhs, vec![], || {
        format!(
            "x\\/y = {} but the implication form gives {}",
            a.label(a.join(x, y)),
            a.label(rhs)
        )
    })
}

fn p2_2_9(a: &FiniteMtlAlgebra, i: &Instance) -> std::result::Result<(), Failure> {
    let (x, y) = e2(i);
    ensure(a.leq(x, a.imp(y, x)), vec![], || {
        "x is not below y->x".into()
    })
}

fn p2_2_10(a: &FiniteMtlAlgebra, i: &Instance) -> std::result::Result<(), Failure> {
    let x = i.elems[0];
    ensure(a.neg(x) == a.neg(a.neg(a.neg(x))), vec![], || {
        "neg x differs from neg neg neg x".into()
    })
}

fn aux_mul_neg(a: &FiniteMtlAlgebra, i: &Instance) -> std::result::Result<(), Failure> {
    let x = i.elems[0];
    ensure(a.mul(x, a.neg(x)) == a.bot(), vec![], || {
        "x * neg x is not 0".into()
    })
}

fn aux_imp_imp(a: &FiniteMtlAlgebra, i: &Instance) -> std::result::Result<(), Failure> {
    let (x, y) = e2(i);
    ensure(a.leq(x, a.imp(a.imp(x, y), y)), vec![], || {
        "x is not below (x->y)->y".into()
    })
}

fn p2_4_1(a: &FiniteMtlAlgebra, i: &Instance) -> std::result::Result<(), Failure> {
    let e = i.elems[0];
    ensure(
        a.mul(e, e) == e && godel_center(a).set.contains(e),
        vec![],
        || "idempotent missing from the center".into(),
    )
}

fn p2_4_2(a: &FiniteMtlAlgebra, i: &Instance) -> std::result::Result<(), Failure> {
    let (e, x, y) = e3(i);
    let lhs = a.mul(e, a.imp(x, y));
    let rhs = a.mul(e, a.imp(a.mul(e, x), a.mul(e, y)));
    ensure(lhs == rhs, vec![], || {
        format!(
            "e*(x->y) = {} but e*((e*x)->(e*y)) = {}",
            a.label(lhs),
            a.label(rhs)
        )
    })
}

// ---- implicative stabilizers ------------------------------------------------

/// Intersection over members of the singleton stabilizers.
fn meet_of_singles(
    a: &FiniteMtlAlgebra,
    x: &Subset,
    f: fn(&FiniteMtlAlgebra, &Subset) -> Result<Subset>,
) -> Subset {
    x.iter()
        .map(|m| f(a, &single(a, m)).expect("nonempty"))
        .fold(a.full(), |acc, s| acc.intersection(&s))
}

type StabFn = fn(&FiniteMtlAlgebra, &Subset) -> Result<Subset>;

fn compare_by_members(
    a: &FiniteMtlAlgebra,
    x: &Subset,
    ops: &[(&str, StabFn)],
) -> std::result::Result<(), Failure> {
    for (name, f) in ops {
        let direct = f(a, x).expect("nonempty");
        let via = meet_of_singles(a, x, *f);
        if direct != via {
            return fail(
                vec![],
                format!(
                    "{name} = {} but the intersection over members is {}",
                    braces(a, &direct),
                    braces(a, &via)
                ),
            );
        }
    }
    Ok(())
}

fn p3_4_1(a: &FiniteMtlAlgebra, i: &Instance) -> std::result::Result<(), Failure> {
    compare_by_members(
        a,
        &x_of(i),
        &[("X_r", impl_right), ("X_l", impl_left), ("X_s", impl_stab)],
    )
}

fn antitone(
    a: &FiniteMtlAlgebra,
    i: &Instance,
    ops: &[(&str, StabFn)],
) -> std::result::Result<(), Failure> {
    let (x, y) = (i.sets[0], i.sets[1]);
    for (name, f) in ops {
        let (fx, fy) = (f(a, &x).expect("nonempty"), f(a, &y).expect("nonempty"));
        if !fy.is_subset_of(&fx) {
            return fail(
                vec![],
                format!(
                    "{name}(Y) = {} is not inside {name}(X) = {}",
                    braces(a, &fy),
                    braces(a, &fx)
                ),
            );
        }
    }
    Ok(())
}

fn p3_4_2(a: &FiniteMtlAlgebra, i: &Instance) -> std::result::Result<(), Failure> {
    antitone(
        a,
        i,
        &[("r", impl_right), ("l", impl_left), ("s", impl_stab)],
    )
}

fn p3_4_3(a: &FiniteMtlAlgebra, i: &Instance) -> std::result::Result<(), Failure> {
    let x = x_of(i);
    let g = generated_filter(a, &x).expect("nonempty");
    let (lhs, rhs) = (impl_right(a, &g).unwrap(), impl_right(a, &x).unwrap());
    ensure(lhs == rhs, vec![], || {
        format!("<X>_r = {} but X_r = {}", braces(a, &lhs), braces(a, &rhs))
    })
}

fn p3_4_4(a: &FiniteMtlAlgebra, i: &Instance) -> std::result::Result<(), Failure> {
    let x = x_of(i);
    let is_top = x == single(a, a.top());
    let all_full = [impl_left, impl_right, impl_stab]
        .iter()
        .all(|f| f(a, &x).unwrap().is_full());
    ensure(is_top == all_full, vec![], || {
        format!("X = {{1}} is {is_top} but X_l = X_r = X_s = L is {all_full}")
    })
}

fn p3_4_5(a: &FiniteMtlAlgebra, _: &Instance) -> std::result::Result<(), Failure> {
    let top = single(a, a.top());
    for (name, f) in [
        ("L_r", impl_right as StabFn),
        ("L_l", impl_left),
        ("L_s", impl_stab),
    ] {
        let v = f(a, &a.full()).unwrap();
        if v != top {
            return fail(vec![], format!("{name} = {}", braces(a, &v)));
        }
    }
    Ok(())
}

fn p3_4_6(a: &FiniteMtlAlgebra, _: &Instance) -> std::result::Result<(), Failure> {
    let zero = single(a, a.bot());
    let top = single(a, a.top());
    let (r0, s0) = (impl_right(a, &zero).unwrap(), impl_stab(a, &zero).unwrap());
    ensure(r0 == top && s0 == top, vec![], || {
        format!("R_0 = {}, S_0 = {}", braces(a, &r0), braces(a, &s0))
    })
}

fn closure_pairs(
    a: &FiniteMtlAlgebra,
    s: &Subset,
    name: &str,
    ops: &[(&str, BinOp)],
) -> std::result::Result<(), Failure> {
    for p in s.iter() {
        for q in s.iter() {
            for (op, f) in ops {
                let r = f(a, p, q);
                if !s.contains(r) {
                    return fail(
                        vec![p, q],
                        format!(
                            "{} {op} {} = {} is not in {name} = {}",
                            a.label(p),
                            a.label(q),
                            a.label(r),
                            braces(a, s)
                        ),
                    );
                }
            }
        }
    }
    Ok(())
}

fn p3_4_7(a: &FiniteMtlAlgebra, i: &Instance) -> std::result::Result<(), Failure> {
    let xr = impl_right(a, &x_of(i)).unwrap();
    closure_pairs(
        a,
        &xr,
        "X_r",
        &[
            ("/\\", FiniteMtlAlgebra::meet),
            ("->", FiniteMtlAlgebra::imp),
            ("\\/", FiniteMtlAlgebra::join),
        ],
    )
}

fn p3_4_8(a: &FiniteMtlAlgebra, i: &Instance) -> std::result::Result<(), Failure> {
    let xl = impl_left(a, &x_of(i)).unwrap();
    ensure(is_filter(a, &xl), vec![], || {
        format!("X_l = {} is not a filter", braces(a, &xl))
    })
}

fn p3_4_9(a: &FiniteMtlAlgebra, i: &Instance) -> std::result::Result<(), Failure> {
    let x = x_of(i);
    let g = generated_filter(a, &x).unwrap();
    let top = single(a, a.top());
    let r = g.intersection(&impl_right(a, &x).unwrap());
    let s = g.intersection(&impl_stab(a, &x).unwrap());
    ensure(r == top && s == top, vec![], || {
        format!(
            "<X> meets X_r in {} and X_s in {}",
            braces(a, &r),
            braces(a, &s)
        )
    })
}

fn flags(values: &[bool]) -> String {
    values
        .iter()
        .enumerate()
        .map(|(k, v)| format!("({})={}", k + 1, if *v { "T" } else { "F" }))
        .collect::<Vec<_>>()
        .join(" ")
}

fn bundle(values: &[bool]) -> std::result::Result<(), Failure> {
    ensure(values.iter().all(|&v| v == values[0]), vec![], || {
        format!("conditions split: {}", flags(values))
    })
}

fn all_subsets(a: &FiniteMtlAlgebra, f: impl Fn(&Subset) -> bool) -> bool {
    subset_scope(a.size()).0.iter().all(f)
}

fn left_equals_generated(a: &FiniteMtlAlgebra) -> bool {
    all_subsets(a, |x| {
        impl_left(a, x).unwrap() == impl_left(a, &generated_filter(a, x).unwrap()).unwrap()
    })
}

fn symmetric_fixpoints(a: &FiniteMtlAlgebra) -> bool {
    a.elements().all(|p| {
        a.elements()
            .all(|q| (a.imp(p, q) == q) == (a.imp(q, p) == p))
    })
}

fn right_is_filter(a: &FiniteMtlAlgebra) -> bool {
    all_subsets(a, |x| is_filter(a, &impl_right(a, x).unwrap()))
}

fn singles_agree(a: &FiniteMtlAlgebra) -> bool {
    a.elements().all(|x| {
        let s = single(a, x);
        let (l, r, st) = (
            impl_left(a, &s).unwrap(),
            impl_right(a, &s).unwrap(),
            impl_stab(a, &s).unwrap(),
        );
        st == r && r == l
    })
}

fn all_agree(a: &FiniteMtlAlgebra, with_ortho: bool) -> bool {
    all_subsets(a, |x| {
        let (l, r, s) = (
            impl_left(a, x).unwrap(),
            impl_right(a, x).unwrap(),
            impl_stab(a, x).unwrap(),
        );
        r == l && l == s && (!with_ortho || s == ortho(a, x).unwrap())
    })
}

fn l0_condition(a: &FiniteMtlAlgebra) -> bool {
    let zero = single(a, a.bot());
    let l0 = impl_left(a, &zero).unwrap();
    l0 == impl_stab(a, &zero).unwrap() && l0 == ortho(a, &zero).unwrap()
}

fn t3_6(a: &FiniteMtlAlgebra, _: &Instance) -> std::result::Result<(), Failure> {
    bundle(&[
        left_equals_generated(a),
        symmetric_fixpoints(a),
        right_is_filter(a),
        singles_agree(a),
        all_agree(a, false),
    ])
}

fn p3_9_godel_center_r(a: &FiniteMtlAlgebra, _: &Instance) -> std::result::Result<(), Failure> {
    let l0 = impl_left(a, &single(a, a.bot())).unwrap();
    let s = impl_right(a, &l0).unwrap();
    match subalgebra_failure(a, &s) {
        None => Ok(()),
        Some(f) => fail(
            vec![],
            format!("(L_0)_r = {}: {}", braces(a, &s), f.describe(a)),
        ),
    }
}

fn t3_9_ortho(a: &FiniteMtlAlgebra, i: &Instance) -> std::result::Result<(), Failure> {
    let x = x_of(i);
    let o = ortho(a, &x).unwrap();
    let s = impl_stab(a, &x).unwrap();
    ensure(o == s, vec![], || {
        format!("perp X = {} but X_s = {}", braces(a, &o), braces(a, &s))
    })
}

fn t3_10_imtl(a: &FiniteMtlAlgebra, _: &Instance) -> std::result::Result<(), Failure> {
    let l0 = impl_left(a, &single(a, a.bot())).unwrap();
    let separates = a.elements().all(|x| {
        a.elements()
            .all(|y| !(l0.contains(a.imp(x, y)) && l0.contains(a.imp(y, x))) || x == y)
    });
    bundle(&[is_imtl(a), l0_condition(a), separates])
}

fn t3_11_integral(a: &FiniteMtlAlgebra, _: &Instance) -> std::result::Result<(), Failure> {
    let zero = single(a, a.bot());
    bundle(&[
        is_integral_mtl(a),
        impl_left(a, &zero).unwrap() == zero.complement(),
    ])
}

fn t3_15_mv(a: &FiniteMtlAlgebra, i: &Instance) -> std::result::Result<(), Failure> {
    let x = x_of(i);
    let (l, r, s, o) = (
        impl_left(a, &x).unwrap(),
        impl_right(a, &x).unwrap(),
        impl_stab(a, &x).unwrap(),
        ortho(a, &x).unwrap(),
    );
    ensure(l == r && r == s && s == o, vec![], || {
        format!(
            "X_l = {}, X_r = {}, X_s = {}, perp X = {}",
            braces(a, &l),
            braces(a, &r),
            braces(a, &s),
            braces(a, &o)
        )
    })
}

fn t3_16_bl(a: &FiniteMtlAlgebra, _: &Instance) -> std::result::Result<(), Failure> {
    bundle(&[
        is_mv(a),
        all_agree(a, true),
        l0_condition(a),
        left_equals_generated(a),
        symmetric_fixpoints(a),
        right_is_filter(a),
        singles_agree(a),
    ])
}

fn p3_17_rs(a: &FiniteMtlAlgebra, _: &Instance) -> std::result::Result<(), Failure> {
    let premise = all_filters(a)
        .iter()
        .all(|f| impl_right(a, &impl_right(a, f).unwrap()).unwrap() == *f);
    ensure(!premise || is_mv(a), vec![], || {
        "every filter F has F = (F_r)_r but the algebra is not MV".into()
    })
}

fn q_godel_xr_union_subalg(a: &FiniteMtlAlgebra, i: &Instance) -> std::result::Result<(), Failure> {
    let mut s = impl_right(a, &x_of(i)).unwrap();
    s.insert(a.bot());
    match subalgebra_failure(a, &s) {
        None => Ok(()),
        Some(f) => {
            let elems = match &f {
                crate::order::SubalgebraFailure::NotClosed { x, y, .. } => vec![*x, *y],
                crate::order::SubalgebraFailure::MissingConstant(e) => vec![*e],
            };
            fail(
                elems,
                format!("X_r u {{0}} = {}: {}", braces(a, &s), f.describe(a)),
            )
        }
    }
}

// ---- multiplicative stabilizers ---------------------------------------------

fn p4_3_1(a: &FiniteMtlAlgebra, i: &Instance) -> std::result::Result<(), Failure> {
    compare_by_members(
        a,
        &x_of(i),
        &[
            ("X*_r", mult_right),
            ("X*_l", mult_left),
            ("X*_s", mult_stab),
        ],
    )
}

fn p4_3_2(a: &FiniteMtlAlgebra, i: &Instance) -> std::result::Result<(), Failure> {
    antitone(
        a,
        i,
        &[("*r", mult_right), ("*l", mult_left), ("*s", mult_stab)],
    )
}

fn p4_3_3(a: &FiniteMtlAlgebra, i: &Instance) -> std::result::Result<(), Failure> {
    let x = x_of(i);
    let g = generated_filter(a, &x).unwrap();
    let (lhs, rhs) = (mult_right(a, &g).unwrap(), mult_right(a, &x).unwrap());
    ensure(lhs == rhs, vec![], || {
        format!(
            "<X>*_r = {} but X*_r = {}",
            braces(a, &lhs),
            braces(a, &rhs)
        )
    })
}

fn p4_3_4(a: &FiniteMtlAlgebra, i: &Instance) -> std::result::Result<(), Failure> {
    let x = x_of(i);
    let zero = single(a, a.bot());
    let is_zero = x == zero;
    let rhs = mult_left(a, &x).unwrap().is_full()
        && mult_right(a, &x).unwrap() == zero
        && mult_stab(a, &x).unwrap() == zero;
    ensure(is_zero == rhs, vec![], || {
        format!("X = {{0}} is {is_zero} but X*_l = L, X*_r = X*_s = {{0}} is {rhs}")
    })
}

fn p4_3_5(a: &FiniteMtlAlgebra, _: &Instance) -> std::result::Result<(), Failure> {
    let one = single(a, a.top());
    let parts = [
        ("R*_1", mult_right(a, &one).unwrap()),
        ("L*_1", mult_left(a, &one).unwrap()),
        ("S*_1", mult_stab(a, &one).unwrap()),
    ];
    let bad: Vec<String> = parts
        .iter()
        .filter(|(_, v)| *v != one)
        .map(|(name, v)| {
            let note = if v.is_full() {
                " (the whole carrier)"
            } else {
                ""
            };
            format!("{name} = {}{note}", braces(a, v))
        })
        .collect();
    ensure(bad.is_empty(), vec![], || bad.join(", "))
}

fn p4_3_6(a: &FiniteMtlAlgebra, i: &Instance) -> std::result::Result<(), Failure> {
    let x = x_of(i);
    let s = mult_stab(a, &x).unwrap();
    ensure(s == x, vec![], || format!("X*_s = {}", braces(a, &s)))
}

fn p4_3_7(a: &FiniteMtlAlgebra, i: &Instance) -> std::result::Result<(), Failure> {
    let l = mult_left(a, &x_of(i)).unwrap();
    ensure(is_filter(a, &l), vec![], || {
        format!("X*_l = {} is not a filter", braces(a, &l))
    })
}

fn p4_3_8(a: &FiniteMtlAlgebra, i: &Instance) -> std::result::Result<(), Failure> {
    let x = x_of(i);
    let ops: [(&str, BinOp); 2] = [
        ("\\/", FiniteMtlAlgebra::join),
        ("*", FiniteMtlAlgebra::mul),
    ];
    closure_pairs(a, &mult_right(a, &x).unwrap(), "X*_r", &ops)?;
    closure_pairs(a, &mult_left(a, &x).unwrap(), "X*_l", &ops)
}

fn inclusion(
    a: &FiniteMtlAlgebra,
    lhs: Subset,
    rhs: Subset,
    what: &str,
) -> std::result::Result<(), Failure> {
    match lhs.iter().find(|&e| !rhs.contains(e)) {
        None => Ok(()),
        Some(e) => fail(
            vec![e],
            format!(
                "{} is in {what} but not in the bound {}",
                a.label(e),
                braces(a, &rhs)
            ),
        ),
    }
}

fn p4_3_9(a: &FiniteMtlAlgebra, i: &Instance) -> std::result::Result<(), Failure> {
    let x = x_of(i);
    let right_bound = Subset::from_elements(
        a.size(),
        a.elements().filter(|&t| {
            x.iter()
                .all(|m| a.mul(m, a.imp(m, t)) == t && a.mul(t, m) == t)
        }),
    );
    let left_bound = Subset::from_elements(
        a.size(),
        a.elements().filter(|&t| {
            x.iter()
                .all(|m| a.mul(t, a.imp(t, m)) == m && a.mul(t, m) == m)
        }),
    );
    let r = impl_right(a, &x)
        .unwrap()
        .intersection(&mult_right(a, &x).unwrap());
    let l = impl_left(a, &x)
        .unwrap()
        .intersection(&mult_left(a, &x).unwrap());
    inclusion(a, r, right_bound, "X_r n X*_r")?;
    inclusion(a, l, left_bound, "X_l n X*_l")
}

fn p4_3_10(a: &FiniteMtlAlgebra, i: &Instance) -> std::result::Result<(), Failure> {
    let x = x_of(i);
    let below_all = Subset::from_elements(
        a.size(),
        a.elements().filter(|&t| x.iter().all(|m| a.leq(t, m))),
    );
    let above_all = Subset::from_elements(
        a.size(),
        a.elements().filter(|&t| x.iter().all(|m| a.leq(m, t))),
    );
    let r = impl_right(a, &x)
        .unwrap()
        .intersection(&mult_right(a, &x).unwrap());
    let l = impl_left(a, &x)
        .unwrap()
        .intersection(&mult_left(a, &x).unwrap());
    inclusion(a, r, below_all, "X_r n X*_r")?;
    inclusion(a, l, above_all, "X_l n X*_l")
}

fn not_evaluable(_: &FiniteMtlAlgebra, _: &Instance) -> std::result::Result<(), Failure> {
    Ok(())
}

fn p4_6_bl_ideal(a: &FiniteMtlAlgebra, i: &Instance) -> std::result::Result<(), Failure> {
    let r = mult_right(a, &x_of(i)).unwrap();
    ensure(is_lattice_ideal(a, &r), vec![], || {
        format!("X*_r = {} is not a lattice ideal", braces(a, &r))
    })
}

fn induced_check(r: Result<Induced>) -> std::result::Result<(), Failure> {
    match r {
        Ok(Induced::Defective { failures, .. }) => fail(vec![], failures.join("; ")),
        Ok(_) => Ok(()),
        Err(e) => fail(vec![], e.to_string()),
    }
}

fn t4_7_left_alg(a: &FiniteMtlAlgebra, i: &Instance) -> std::result::Result<(), Failure> {
    induced_check(left_mult_algebra(a, i.elems[0], Mode::Strict))
}

fn t4_8_right_alg(a: &FiniteMtlAlgebra, i: &Instance) -> std::result::Result<(), Failure> {
    induced_check(right_mult_algebra(a, i.elems[0], Mode::Strict))
}

fn t4_9_godel(a: &FiniteMtlAlgebra, _: &Instance) -> std::result::Result<(), Failure> {
    bundle(&[is_godel(a), godel_by_left(a), godel_by_right(a)])
}

fn t4_10_godel_chain(a: &FiniteMtlAlgebra, _: &Instance) -> std::result::Result<(), Failure> {
    bundle(&[
        is_godel(a) && is_chain(a),
        godel_chain_by_left(a),
        godel_chain_by_right(a),
    ])
}

fn t4_11_order_iso(a: &FiniteMtlAlgebra, i: &Instance) -> std::result::Result<(), Failure> {
    match order_iso_right(a, i.elems[0], Mode::Strict) {
        Ok(iso) if iso.ok() => Ok(()),
        Ok(iso) => fail(vec![], iso.failures.join("; ")),
        Err(e) => fail(vec![], e.to_string()),
    }
}

fn t4_12_mv_iso(a: &FiniteMtlAlgebra, i: &Instance) -> std::result::Result<(), Failure> {
    match mv_left_iso(a, i.elems[0], Mode::Strict) {
        Ok(iso) if iso.ok() => Ok(()),
        Ok(iso) => fail(vec![], iso.failures.join("; ")),
        Err(e) => fail(vec![], e.to_string()),
    }
}

macro_rules! claim {
    ($id:literal, $stmt:literal, $dom:expr, $check:expr) => {
        claim!($id, $stmt, None, Expectation::Theorem, $dom, $check)
    };
    ($id:literal, $stmt:literal, $hyp:expr, $exp:expr, $dom:expr, $check:expr) => {
        Claim {
            id: $id,
            statement: $stmt,
            hypothesis: $hyp,
            expectation: $exp,
            domain: $dom,
            check: $check,
        }
    };
}

use Domain::*;

/// Every registered claim, in id order.
pub static REGISTRY: &[Claim] = &[
    claim!("P2.2.1", "x <= y iff x -> y = 1", Elements(2), p2_2_1),
    claim!("P2.2.2", "x * y <= x /\\ y", Elements(2), p2_2_2),
    claim!("P2.2.3", "x -> (y /\\ z) = (x -> y) /\\ (x -> z)", Elements(3), p2_2_3),
    claim!("P2.2.4", "(x \\/ y) -> z = (x -> z) /\\ (y -> z)", Elements(3), p2_2_4),
    claim!("P2.2.5", "x -> y = x -> (x /\\ y)", Elements(2), p2_2_5),
    claim!("P2.2.6", "x -> y = (x \\/ y) -> y", Elements(2), p2_2_6),
    claim!("P2.2.7", "(x /\\ y) -> z = (x -> z) \\/ (y -> z)", Elements(3), p2_2_7),
    claim!("P2.2.8", "x \\/ y = ((x -> y) -> y) /\\ ((y -> x) -> x)", Elements(2), p2_2_8),
    claim!("P2.2.9", "x <= y -> x", Elements(2), p2_2_9),
    claim!("P2.2.10", "neg x = neg neg neg x", Elements(1), p2_2_10),
    claim!("AUX-mul-neg", "x * neg x = 0", Elements(1), aux_mul_neg),
    claim!("AUX-imp-imp", "x <= (x -> y) -> y", Elements(2), aux_imp_imp),
    claim!("P2.4.1", "e * e = e for e in G(L)", Idempotents, p2_4_1),
    claim!("P2.4.2", "e * (x -> y) = e * ((e * x) -> (e * y)) for e in G(L)", IdempotentTuples(3), p2_4_2),
    claim!("P3.4.1", "X_r, X_l, X_s are the intersections of R_x, L_x, S_x over x in X", Subsets, p3_4_1),
    claim!("P3.4.2", "X <= Y implies Y_r <= X_r, Y_l <= X_l, Y_s <= X_s", SubsetPairs, p3_4_2),
    claim!("P3.4.3", "<X>_r = X_r", Subsets, p3_4_3),
    claim!("P3.4.4", "X = {1} iff X_l = X_r = X_s = L", Subsets, p3_4_4),
    claim!("P3.4.5", "L_r = L_l = L_s = {1}", Global, p3_4_5),
    claim!("P3.4.6", "R_0 = S_0 = {1}", Global, p3_4_6),
    claim!("P3.4.7", "X_r is closed under /\\, -> and \\/", Subsets, p3_4_7),
    claim!("P3.4.8", "X_l is a filter", Subsets, p3_4_8),
    claim!("P3.4.9", "<X> n X_r = {1} = <X> n X_s", Subsets, p3_4_9),
    claim!("T3.6", "X_l = <X>_l for all X; a->b = b iff b->a = a; X_r is a filter for all X; S_x = R_x = L_x; X_r = X_l = X_s for all X: all or none", Global, t3_6),
    claim!("P3.9-godel-center-r", "(L_0)_r is a subalgebra", Some(Hypothesis::Godel), Expectation::Theorem, Global, p3_9_godel_center_r),
    claim!("T3.9-ortho", "perp X = X_r n X_l = X_s", Subsets, t3_9_ortho),
    claim!("T3.10-imtl", "IMTL iff L_0 = S_0 = perp{0} iff (x->y, y->x in L_0 implies x = y)", Global, t3_10_imtl),
    claim!("T3.11-integral", "integral iff L_0 = L minus {0}", Global, t3_11_integral),
    claim!("T3.15-mv", "X_l = X_r = X_s = perp X", Some(Hypothesis::Mv), Expectation::Theorem, Subsets, t3_15_mv),
    claim!("T3.16-bl", "MV; X_l = X_r = X_s = perp X; L_0 = S_0 = perp{0}; and the four conditions of T3.6: all or none", Some(Hypothesis::Bl), Expectation::Theorem, Global, t3_16_bl),
    claim!("P3.17-rs", "F = (<F>_r)_r for every filter F implies MV", Some(Hypothesis::Bl), Expectation::Theorem, Global, p3_17_rs),
    claim!("Q-godel-xr-union-subalg", "X_r u {0} is a subalgebra", Some(Hypothesis::Godel), Expectation::Question, Subsets, q_godel_xr_union_subalg),
    claim!("P4.3.1", "X*_r, X*_l, X*_s are the intersections of R*_x, L*_x, S*_x over x in X", Subsets, p4_3_1),
    claim!("P4.3.2", "X <= Y implies Y*_r <= X*_r, Y*_l <= X*_l, Y*_s <= X*_s", SubsetPairs, p4_3_2),
    claim!("P4.3.3", "<X>*_r = X*_r", Subsets, p4_3_3),
    claim!("P4.3.4", "X = {0} iff X*_l = L and X*_r = X*_s = {0}", Subsets, p4_3_4),
    claim!("P4.3.5", "R*_1 = L*_1 = S*_1 = {1}", None, Expectation::Refutable, Global, p4_3_5),
    claim!("P4.3.6", "X*_s = X", None, Expectation::Refutable, Subsets, p4_3_6),
    claim!("P4.3.7", "X*_l is a filter", Subsets, p4_3_7),
    claim!("P4.3.8", "X*_r and X*_l are closed under \\/ and *", Subsets, p4_3_8),
    claim!("P4.3.9", "X_r n X*_r <= {a | x*(x->a) = a*x = a}, X_l n X*_l <= {a | a*(a->x) = a*x = x}", Subsets, p4_3_9),
    claim!("P4.3.10", "X_r n X*_r <= lower bounds of X, X_l n X*_l <= upper bounds of X", Some(Hypothesis::Bl), Expectation::Theorem, Subsets, p4_3_10),
    claim!("P4.3.11", "X <= G(L) implies X_r n X*_r <= G(X); G(X) is never defined", None, Expectation::Undefined, Undefined, not_evaluable),
    claim!("P4.6-bl-ideal", "X*_r is a lattice ideal", Some(Hypothesis::Bl), Expectation::Theorem, Subsets, p4_6_bl_ideal),
    claim!("T4.7-left-alg", "(L*_x, *, /\\, \\/, ->, x, 1) is an MTL-algebra for idempotent x", Idempotents, t4_7_left_alg),
    claim!("T4.8-right-alg", "(R*_x, *, /\\, \\/, ~>, 0, x) with a ~> b = x * (a -> b) is an MTL-algebra for idempotent x", Idempotents, t4_8_right_alg),
    claim!("T4.9-godel", "Godel iff L*_x = [x) for all x iff R*_x = (x] for all x", Global, t4_9_godel),
    claim!("T4.10-godel-chain", "Godel chain iff L*_x = [x) prime for all x iff R*_x = (x] prime for all x", Global, t4_10_godel_chain),
    claim!("T4.11-order-iso", "R_x and R*_x are order isomorphic via g(a) = x -> a for idempotent x", Idempotents, t4_11_order_iso),
    claim!("T4.12-mv-iso", "L_x and R*_x are order isomorphic for idempotent x", Some(Hypothesis::Mv), Expectation::Theorem, Idempotents, t4_12_mv_iso),
];

pub fn find_claim(id: &str) -> Result<&'static Claim> {
    REGISTRY
        .iter()
        .find(|c| c.id == id)
        .ok_or_else(|| MtlError::UnknownClaim(id.to_string()))
}

fn run(
    a: &FiniteMtlAlgebra,
    claim: &'static Claim,
    insts: Vec<Instance>,
    sampled: bool,
) -> ClaimOutcome {
    if claim.domain == Domain::Undefined {
        return ClaimOutcome {
            claim: claim.id,
            verdict: Verdict::NotEvaluable,
            witness: None,
            scope: 0,
            sampled: false,
            refuting: 0,
        };
    }
    if let Some(h) = claim.hypothesis {
        if !h.holds(a) {
            return ClaimOutcome {
                claim: claim.id,
                verdict: Verdict::NotApplicable,
                witness: None,
                scope: 0,
                sampled: false,
                refuting: 0,
            };
        }
    }
    let mut witness = None;
    let mut refuting = 0;
    let scope = insts.len();
    for inst in insts {
        if let Err(failure) = (claim.check)(a, &inst) {
            refuting += 1;
            if witness.is_none() {
                witness = Some(Witness {
                    instance: inst,
                    failure,
                });
            }
        }
    }
    ClaimOutcome {
        claim: claim.id,
        verdict: if refuting == 0 {
            Verdict::Holds
        } else {
            Verdict::Refuted
        },
        witness,
        scope,
        sampled,
        refuting,
    }
}

pub fn verify_claim(a: &FiniteMtlAlgebra, id: &str) -> Result<ClaimOutcome> {
    let claim = find_claim(id)?;
    let (insts, sampled) = instances(a, claim.domain);
    Ok(run(a, claim, insts, sampled))
}

/// Verifies a subset claim on the given subsets only (one for subset
/// claims, `X` then `Y` for nested-pair claims).
pub fn verify_claim_at(a: &FiniteMtlAlgebra, id: &str, sets: &[Subset]) -> Result<ClaimOutcome> {
    let claim = find_claim(id)?;
    let arity = match claim.domain {
        Domain::Subsets => 1,
        Domain::SubsetPairs => 2,
        _ => {
            return Err(MtlError::InstanceShape {
                claim: id.to_string(),
                expected: claim.domain.describe(),
            })
        }
    };
    if sets.len() != arity {
        return Err(MtlError::InstanceShape {
            claim: id.to_string(),
            expected: claim.domain.describe(),
        });
    }
    for s in sets {
        a.own(s)?;
        if s.is_empty() {
            return Err(MtlError::EmptySubset);
        }
    }
    if arity == 2 && !sets[0].is_subset_of(&sets[1]) {
        return Err(MtlError::InstanceShape {
            claim: id.to_string(),
            expected: "X inside Y",
        });
    }
    let inst = Instance {
        sets: sets.to_vec(),
        elems: Vec::new(),
    };
    Ok(run(a, claim, vec![inst], false))
}

/// Every claim, in registry order. Claims run in parallel; the order of the
/// result does not depend on scheduling.
pub fn verify_all(a: &FiniteMtlAlgebra) -> Vec<ClaimOutcome> {
    REGISTRY
        .par_iter()
        .map(|c| {
            let (insts, sampled) = instances(a, c.domain);
            run(a, c, insts, sampled)
        })
        .collect()
}
