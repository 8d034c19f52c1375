//! Algebras induced on `L*_x` and `R*_x`, the order isomorphism
//! `g(a) = x -> a`, and isomorphism testing between finite algebras.

use crate::algebra::{AlgebraTables, Element, FiniteMtlAlgebra};
use crate::classify::is_mv;
use crate::error::{MtlError, Result};
use crate::stabilizers::{impl_left, impl_right, mult_left, mult_right};
use crate::subset::Subset;

/// Whether a non-idempotent `x` is rejected or run anyway.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Strict,
    Permissive,
}

/// An algebra living on a subset of a parent algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedAlgebra {
    pub carrier: Subset,
    pub algebra: FiniteMtlAlgebra,
    /// `embed[i]` is the parent element behind induced index `i`.
    pub embed: Vec<Element>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Induced {
    /// A validated algebra on the carrier.
    Built(InducedAlgebra),
    /// One-element carrier; bot and top coincide.
    Trivial { carrier: Subset },
    /// The carrier is not closed, or the induced tables break an axiom.
    Defective {
        carrier: Subset,
        failures: Vec<String>,
    },
}

impl Induced {
    pub fn carrier(&self) -> Subset {
        match self {
            Induced::Built(i) => i.carrier,
            Induced::Trivial { carrier } | Induced::Defective { carrier, .. } => *carrier,
        }
    }

    pub fn algebra(&self) -> Option<&FiniteMtlAlgebra> {
        match self {
            Induced::Built(i) => Some(&i.algebra),
            _ => None,
        }
    }

    pub fn is_defective(&self) -> bool {
        matches!(self, Induced::Defective { .. })
    }
}

fn require_idempotent(a: &FiniteMtlAlgebra, x: Element, mode: Mode) -> Result<()> {
    if mode == Mode::Strict && !a.is_idempotent(x) {
        return Err(MtlError::NotIdempotent(a.label(x).to_string()));
    }
    Ok(())
}

fn build(
    a: &FiniteMtlAlgebra,
    carrier: Subset,
    bot: Element,
    top: Element,
    imp: impl Fn(Element, Element) -> Element,
    tag: &str,
) -> Induced {
    if carrier.len() < 2 {
        return Induced::Trivial { carrier };
    }
    let embed: Vec<Element> = carrier.iter().collect();
    let index = |e: Element| embed.iter().position(|&v| v == e);
    let mut failures = Vec::new();
    for e in [bot, top] {
        if !carrier.contains(e) {
            failures.push(format!("{} is not in the carrier", a.label(e)));
        }
    }
    type OpFn<'f> = Box<dyn Fn(Element, Element) -> Element + 'f>;
    let ops: [(&str, OpFn); 4] = [
        ("mul", Box::new(|p, q| a.mul(p, q))),
        ("imp", Box::new(&imp)),
        ("meet", Box::new(|p, q| a.meet(p, q))),
        ("join", Box::new(|p, q| a.join(p, q))),
    ];
    let mut tables: Vec<Vec<Vec<usize>>> = Vec::new();
    for (name, op) in &ops {
        let mut t = Vec::with_capacity(embed.len());
        for &p in &embed {
            let mut row = Vec::with_capacity(embed.len());
            for &q in &embed {
                let r = op(p, q);
                match index(r) {
                    Some(k) => row.push(k),
                    None => {
                        failures.push(format!(
                            "{name}({}, {}) = {} leaves the carrier",
                            a.label(p),
                            a.label(q),
                            a.label(r)
                        ));
                        row.push(0);
                    }
                }
            }
            t.push(row);
        }
        tables.push(t);
    }
    if !failures.is_empty() {
        return Induced::Defective { carrier, failures };
    }
    let join = tables.pop().unwrap();
    let meet = tables.pop().unwrap();
    let imp_t = tables.pop().unwrap();
    let mul_t = tables.pop().unwrap();
    let built = FiniteMtlAlgebra::construct(AlgebraTables {
        name: format!("{}_{tag}", a.name()),
        labels: embed.iter().map(|&e| a.label(e).to_string()).collect(),
        bot: index(bot).unwrap(),
        top: index(top).unwrap(),
        mul: mul_t,
        imp: imp_t,
        meet: Some(meet),
        join: Some(join),
    });
    match built {
        Err(e) => Induced::Defective {
            carrier,
            failures: vec![e.to_string()],
        },
        Ok(alg) => match alg.into_validated() {
            Ok(algebra) => Induced::Built(InducedAlgebra {
                carrier,
                algebra,
                embed,
            }),
            Err(report) => Induced::Defective {
                carrier,
                failures: report
                    .violations
                    .iter()
                    .map(|v| {
                        let w: Vec<&str> = v
                            .witness
                            .iter()
                            .map(|&e| a.label(embed[e.index()]))
                            .collect();
                        format!("{} fails at ({})", v.axiom.id(), w.join(", "))
                    })
                    .collect(),
            },
        },
    }
}

/// `(L*_x, *, /\, \/, ->, x, 1)`.
pub fn left_mult_algebra(a: &FiniteMtlAlgebra, x: Element, mode: Mode) -> Result<Induced> {
    require_idempotent(a, x, mode)?;
    let carrier = mult_left(a, &Subset::singleton(a.size(), x))?;
    Ok(build(
        a,
        carrier,
        x,
        a.top(),
        |p, q| a.imp(p, q),
        &format!("L*{}", a.label(x)),
    ))
}

/// `(R*_x, *, /\, \/, ~>, 0, x)` with `p ~> q = x * (p -> q)`.
pub fn right_mult_algebra(a: &FiniteMtlAlgebra, x: Element, mode: Mode) -> Result<Induced> {
    require_idempotent(a, x, mode)?;
    let carrier = mult_right(a, &Subset::singleton(a.size(), x))?;
    Ok(build(
        a,
        carrier,
        a.bot(),
        x,
        |p, q| a.mul(x, a.imp(p, q)),
        &format!("R*{}", a.label(x)),
    ))
}

/// A candidate order isomorphism between two subsets of one algebra,
/// together with every property that failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderIso {
    pub domain: Subset,
    pub codomain: Subset,
    /// `(a, f(a))` for every `a` in the domain, ascending in `a`.
    pub map: Vec<(Element, Element)>,
    pub failures: Vec<String>,
}

impl OrderIso {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn apply(&self, e: Element) -> Option<Element> {
        self.map.iter().find(|(d, _)| *d == e).map(|(_, c)| *c)
    }
}

/// Checks that `f: domain -> codomain` and `h: codomain -> domain` are
/// mutually inverse order-preserving maps.
fn check_iso(
    a: &FiniteMtlAlgebra,
    domain: Subset,
    codomain: Subset,
    f: impl Fn(Element) -> Element,
    h: impl Fn(Element) -> Element,
) -> OrderIso {
    let mut failures = Vec::new();
    let l = |e: Element| a.label(e).to_string();
    let map: Vec<(Element, Element)> = domain.iter().map(|d| (d, f(d))).collect();
    for &(d, c) in &map {
        if !codomain.contains(c) {
            failures.push(format!("f({}) = {} is outside the codomain", l(d), l(c)));
        } else if h(c) != d {
            failures.push(format!(
                "inverse sends f({}) = {} to {}",
                l(d),
                l(c),
                l(h(c))
            ));
        }
    }
    for c in codomain.iter() {
        let d = h(c);
        if !domain.contains(d) {
            failures.push(format!(
                "inverse({}) = {} is outside the domain",
                l(c),
                l(d)
            ));
        } else if f(d) != c {
            failures.push(format!("f(inverse({})) = {}", l(c), l(f(d))));
        }
    }
    for p in domain.iter() {
        for q in domain.iter() {
            if a.leq(p, q) && !a.leq(f(p), f(q)) {
                failures.push(format!("f is not monotone at {} <= {}", l(p), l(q)));
            }
        }
    }
    for p in codomain.iter() {
        for q in codomain.iter() {
            if a.leq(p, q) && !a.leq(h(p), h(q)) {
                failures.push(format!("inverse is not monotone at {} <= {}", l(p), l(q)));
            }
        }
    }
    OrderIso {
        domain,
        codomain,
        map,
        failures,
    }
}

/// `g: R*_x -> R_x`, `g(a) = x -> a`, with inverse `a |-> x * a`.
pub fn order_iso_right(a: &FiniteMtlAlgebra, x: Element, mode: Mode) -> Result<OrderIso> {
    require_idempotent(a, x, mode)?;
    let sx = Subset::singleton(a.size(), x);
    let domain = mult_right(a, &sx)?;
    let codomain = impl_right(a, &sx)?;
    Ok(check_iso(
        a,
        domain,
        codomain,
        |p| a.imp(x, p),
        |p| a.mul(x, p),
    ))
}

/// `L_x -> R*_x`, `a |-> x * a`, with inverse `a |-> x -> a`. Requires an MV-algebra.
pub fn mv_left_iso(a: &FiniteMtlAlgebra, x: Element, mode: Mode) -> Result<OrderIso> {
    if !is_mv(a) {
        return Err(MtlError::NotMv);
    }
    require_idempotent(a, x, mode)?;
    let sx = Subset::singleton(a.size(), x);
    let domain = impl_left(a, &sx)?;
    let codomain = mult_right(a, &sx)?;
    Ok(check_iso(
        a,
        domain,
        codomain,
        |p| a.mul(x, p),
        |p| a.imp(x, p),
    ))
}

/// Per-element invariant used to prune the isomorphism search.
fn profile(a: &FiniteMtlAlgebra, e: Element) -> (usize, usize, bool, usize) {
    let below = a.elements().filter(|&y| a.leq(y, e)).count();
    let above = a.elements().filter(|&y| a.leq(e, y)).count();
    let squares = a.elements().filter(|&y| a.mul(y, y) == e).count();
    (below, above, a.is_idempotent(e), squares)
}

/// An isomorphism `A -> B` as `map[i] = image of element i`, if one exists.
pub fn check_mtl_iso(a: &FiniteMtlAlgebra, b: &FiniteMtlAlgebra) -> Option<Vec<Element>> {
    let n = a.size();
    if n != b.size() {
        return None;
    }
    let pa: Vec<_> = a.elements().map(|e| profile(a, e)).collect();
    let pb: Vec<_> = b.elements().map(|e| profile(b, e)).collect();
    let mut sa = pa.clone();
    let mut sb = pb.clone();
    sa.sort();
    sb.sort();
    if sa != sb {
        return None;
    }
    let mut map: Vec<Option<Element>> = vec![None; n];
    let mut used = vec![false; n];
    map[a.bot().index()] = Some(b.bot());
    used[b.bot().index()] = true;
    if a.top() != a.bot() {
        map[a.top().index()] = Some(b.top());
        used[b.top().index()] = true;
    }
    let order: Vec<Element> = a.elements().filter(|&e| map[e.index()].is_none()).collect();

    fn consistent(a: &FiniteMtlAlgebra, b: &FiniteMtlAlgebra, map: &[Option<Element>]) -> bool {
        let ops: [fn(&FiniteMtlAlgebra, Element, Element) -> Element; 4] = [
            FiniteMtlAlgebra::mul,
            FiniteMtlAlgebra::imp,
            FiniteMtlAlgebra::meet,
            FiniteMtlAlgebra::join,
        ];
        for x in a.elements() {
            let Some(fx) = map[x.index()] else { continue };
            for y in a.elements() {
                let Some(fy) = map[y.index()] else { continue };
                for op in ops {
                    if let Some(fr) = map[op(a, x, y).index()] {
                        if fr != op(b, fx, fy) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    #[allow(clippy::too_many_arguments)]
    fn go(
        k: usize,
        order: &[Element],
        a: &FiniteMtlAlgebra,
        b: &FiniteMtlAlgebra,
        pa: &[(usize, usize, bool, usize)],
        pb: &[(usize, usize, bool, usize)],
        map: &mut Vec<Option<Element>>,
        used: &mut Vec<bool>,
    ) -> bool {
        if !consistent(a, b, map) {
            return false;
        }
        if k == order.len() {
            return true;
        }
        let x = order[k];
        for y in b.elements() {
            if used[y.index()] || pa[x.index()] != pb[y.index()] {
                continue;
            }
            map[x.index()] = Some(y);
            used[y.index()] = true;
            if go(k + 1, order, a, b, pa, pb, map, used) {
                return true;
            }
            map[x.index()] = None;
            used[y.index()] = false;
        }
        false
    }

    if go(0, &order, a, b, &pa, &pb, &mut map, &mut used) {
        Some(map.into_iter().map(|m| m.unwrap()).collect())
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::search::canon::permuted;

    fn el(a: &FiniteMtlAlgebra, l: &str) -> Element {
        a.element(l).unwrap()
    }

    #[test]
    fn induced_on_a4() {
        let a4 = fixtures::load("a4");
        let b = el(&a4, "b");
        let left = left_mult_algebra(&a4, b, Mode::Strict).unwrap();
        let right = right_mult_algebra(&a4, b, Mode::Strict).unwrap();
        assert_eq!(a4.render(&left.carrier()), "b,1");
        assert_eq!(a4.render(&right.carrier()), "0,b");
        let (l, r) = (left.algebra().unwrap(), right.algebra().unwrap());
        assert_eq!(r.label(r.top()), "b");
        assert!(check_mtl_iso(l, r).is_some());
        assert!(matches!(
            left_mult_algebra(&a4, a4.top(), Mode::Strict).unwrap(),
            Induced::Trivial { .. }
        ));
        assert!(matches!(
            right_mult_algebra(&a4, a4.bot(), Mode::Strict).unwrap(),
            Induced::Trivial { .. }
        ));
        assert_eq!(
            left_mult_algebra(&a4, el(&a4, "a"), Mode::Strict),
            Err(MtlError::NotIdempotent("a".into()))
        );
    }

    #[test]
    fn induced_on_g6() {
        let g6 = fixtures::load("g6");
        let c = el(&g6, "c");
        let right = right_mult_algebra(&g6, c, Mode::Strict).unwrap();
        assert_eq!(g6.render(&right.carrier()), "0,a,b,c");
        assert!(right.algebra().is_some());
        let left = left_mult_algebra(&g6, c, Mode::Strict).unwrap();
        assert_eq!(g6.render(&left.carrier()), "c,1");
    }

    #[test]
    fn g6_order_iso_at_c() {
        let g6 = fixtures::load("g6");
        let iso = order_iso_right(&g6, el(&g6, "c"), Mode::Strict).unwrap();
        assert!(iso.ok(), "{:?}", iso.failures);
        let pairs: Vec<(String, String)> = iso
            .map
            .iter()
            .map(|&(d, c)| (g6.label(d).to_string(), g6.label(c).to_string()))
            .collect();
        let want = [("0", "0"), ("a", "a"), ("b", "d"), ("c", "1")];
        assert_eq!(pairs, want.map(|(x, y)| (x.to_string(), y.to_string())));
    }

    #[test]
    fn order_iso_on_a4_and_top() {
        let a4 = fixtures::load("a4");
        let iso = order_iso_right(&a4, el(&a4, "b"), Mode::Strict).unwrap();
        assert!(iso.ok());
        assert_eq!(a4.render(&iso.codomain), "a,1");
        assert_eq!(iso.apply(a4.bot()), Some(el(&a4, "a")));
        let top = order_iso_right(&a4, a4.top(), Mode::Strict).unwrap();
        assert!(top.ok());
        assert!(top.map.iter().all(|(d, c)| d == c));
    }

    #[test]
    fn mv_iso() {
        let m6 = fixtures::load("m6");
        for x in m6.elements().filter(|&x| m6.is_idempotent(x)) {
            assert!(mv_left_iso(&m6, x, Mode::Strict).unwrap().ok());
        }
        let a4 = fixtures::load("a4");
        assert_eq!(
            mv_left_iso(&a4, el(&a4, "b"), Mode::Strict),
            Err(MtlError::NotMv)
        );
        let b2 = fixtures::boolean2();
        let iso = mv_left_iso(&b2, b2.bot(), Mode::Strict).unwrap();
        assert!(iso.ok());
        assert_eq!(iso.map, vec![(b2.top(), b2.bot())]);
    }

    #[test]
    fn iso_search() {
        let a4 = fixtures::load("a4");
        let id = check_mtl_iso(&a4, &a4).unwrap();
        assert!(id.iter().enumerate().all(|(i, e)| e.index() == i));
        assert!(check_mtl_iso(&a4, &fixtures::load("a5")).is_none());
        assert!(check_mtl_iso(&a4, &fixtures::load("b4")).is_none());
        let g6 = fixtures::load("g6");
        let p = [0, 4, 2, 3, 1, 5];
        let h = permuted(&g6, &p);
        let m = check_mtl_iso(&g6, &h).unwrap();
        let back = check_mtl_iso(&h, &g6).unwrap();
        for x in g6.elements() {
            assert_eq!(back[m[x.index()].index()], x);
        }
        assert!(check_mtl_iso(&fixtures::load("a5"), &fixtures::load("n5")).is_some());
    }

    #[test]
    fn permissive_mode_reports_defects() {
        let a4 = fixtures::load("a4");
        // L*_a = {1}: trivial even without idempotency
        let l = left_mult_algebra(&a4, el(&a4, "a"), Mode::Permissive).unwrap();
        assert!(matches!(l, Induced::Trivial { .. }));
        let c5 = fixtures::load("c5");
        for x in c5.elements() {
            let r = right_mult_algebra(&c5, x, Mode::Permissive).unwrap();
            if c5.is_idempotent(x) {
                assert!(!r.is_defective());
            }
        }
    }
}
