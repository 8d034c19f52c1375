use std::sync::OnceLock;

use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use mtl_core::classify::{is_bl, is_godel, is_mv};
use mtl_core::fixtures;
use mtl_core::format::{parse_algebra, serialize};
use mtl_core::induced::{
    check_mtl_iso, left_mult_algebra, order_iso_right, right_mult_algebra, Mode,
};
use mtl_core::order::{generated_filter, godel_center, is_filter, is_subalgebra};
use mtl_core::search::canon::permuted;
use mtl_core::search::{canonical_form, standard_corpus};
use mtl_core::stabilizers::{
    impl_left, impl_right, impl_stab, mult_left, mult_right, mult_stab, ortho,
};
use mtl_core::{AlgebraTables, Element, FiniteMtlAlgebra, Subset};

fn pool() -> &'static [FiniteMtlAlgebra] {
    static POOL: OnceLock<Vec<FiniteMtlAlgebra>> = OnceLock::new();
    POOL.get_or_init(|| {
        let mut v: Vec<FiniteMtlAlgebra> =
            fixtures::NAMES.iter().map(|n| fixtures::load(n)).collect();
        v.push(fixtures::boolean4());
        v.extend(standard_corpus());
        v
    })
}

fn pick() -> impl Strategy<Value = &'static FiniteMtlAlgebra> {
    (0..pool().len()).prop_map(|i| &pool()[i])
}

fn subset(a: &FiniteMtlAlgebra, bits: u64) -> Subset {
    let n = a.size();
    let b = bits & ((1u64 << n) - 1);
    Subset::from_bits(n, if b == 0 { 1 << (a.top().index()) } else { b }).unwrap()
}

fn elem(a: &FiniteMtlAlgebra, k: usize) -> Element {
    Element::new(k % a.size())
}

fn upper_bounds_contain(a: &FiniteMtlAlgebra, s: &Subset, x: &Subset) -> bool {
    s.iter().all(|t| x.iter().all(|m| a.leq(m, t)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn lattice_identities(a in pick(), i in 0usize..64, j in 0usize..64, k in 0usize..64) {
        let (x, y, z) = (elem(a, i), elem(a, j), elem(a, k));
        prop_assert!(a.leq(a.mul(x, y), a.meet(x, y)));
        prop_assert_eq!(a.imp(x, a.meet(y, z)), a.meet(a.imp(x, y), a.imp(x, z)));
        prop_assert_eq!(a.imp(a.join(x, y), z), a.meet(a.imp(x, z), a.imp(y, z)));
        prop_assert_eq!(a.join(x, y), a.meet(a.imp(a.imp(x, y), y), a.imp(a.imp(y, x), x)));
    }

    #[test]
    fn validation_is_repeatable_and_tables_round_trip(a in pick()) {
        prop_assert_eq!(a.check(), a.check());
        let rebuilt = FiniteMtlAlgebra::construct(a.tables()).unwrap();
        prop_assert!(rebuilt.check().valid());
        let t: AlgebraTables = a.tables();
        let text = serialize(a, true);
        let back = parse_algebra(&text).unwrap();
        prop_assert_eq!(back.tables(), t);
    }

    #[test]
    fn stabilizers_are_intersections_over_members(a in pick(), bits in any::<u64>()) {
        let x = subset(a, bits);
        type F = fn(&FiniteMtlAlgebra, &Subset) -> mtl_core::Result<Subset>;
        let ops: [F; 6] = [impl_left, impl_right, impl_stab, mult_left, mult_right, mult_stab];
        for f in ops {
            let meet = x.iter()
                .map(|m| f(a, &Subset::singleton(a.size(), m)).unwrap())
                .fold(a.full(), |acc, s| acc.intersection(&s));
            prop_assert_eq!(f(a, &x).unwrap(), meet);
        }
    }

    #[test]
    fn stabilizers_are_antitone(a in pick(), bx in any::<u64>(), by in any::<u64>()) {
        let y = subset(a, bx | by);
        let x = subset(a, bx & y.bits());
        prop_assume!(x.is_subset_of(&y));
        prop_assert!(impl_right(a, &y).unwrap().is_subset_of(&impl_right(a, &x).unwrap()));
        prop_assert!(mult_right(a, &y).unwrap().is_subset_of(&mult_right(a, &x).unwrap()));
    }

    #[test]
    fn generated_filter_invariance(a in pick(), bits in any::<u64>()) {
        let x = subset(a, bits);
        let g = generated_filter(a, &x).unwrap();
        prop_assert_eq!(generated_filter(a, &g).unwrap(), g);
        prop_assert_eq!(impl_right(a, &g).unwrap(), impl_right(a, &x).unwrap());
        prop_assert_eq!(mult_right(a, &g).unwrap(), mult_right(a, &x).unwrap());
        let top = Subset::singleton(a.size(), a.top());
        prop_assert_eq!(g.intersection(&impl_right(a, &x).unwrap()), top);
    }

    #[test]
    fn left_stabilizers_are_filters(a in pick(), bits in any::<u64>()) {
        let x = subset(a, bits);
        prop_assert!(is_filter(a, &impl_left(a, &x).unwrap()));
        let ml = mult_left(a, &x).unwrap();
        prop_assert!(is_filter(a, &ml));
        prop_assert!(upper_bounds_contain(a, &ml, &x));
    }

    #[test]
    fn closure_of_right_stabilizers(a in pick(), bits in any::<u64>()) {
        let x = subset(a, bits);
        let r = impl_right(a, &x).unwrap();
        for p in r.iter() {
            for q in r.iter() {
                prop_assert!(r.contains(a.meet(p, q)) && r.contains(a.imp(p, q)) && r.contains(a.join(p, q)));
            }
        }
        for s in [mult_right(a, &x).unwrap(), mult_left(a, &x).unwrap()] {
            for p in s.iter() {
                for q in s.iter() {
                    prop_assert!(s.contains(a.join(p, q)) && s.contains(a.mul(p, q)));
                }
            }
        }
    }

    #[test]
    fn ortho_is_the_implicative_stabilizer(a in pick(), bits in any::<u64>()) {
        let x = subset(a, bits);
        prop_assert_eq!(ortho(a, &x).unwrap(), impl_stab(a, &x).unwrap());
        let is_top = x == Subset::singleton(a.size(), a.top());
        let full = impl_left(a, &x).unwrap().is_full() && impl_right(a, &x).unwrap().is_full();
        prop_assert_eq!(is_top, full);
    }

    #[test]
    fn class_hierarchy(a in pick()) {
        prop_assert!(!is_mv(a) || is_bl(a));
        prop_assert!(!is_godel(a) || is_bl(a));
        let c = godel_center(a);
        prop_assert!(c.inconsistencies.is_empty());
        for p in c.set.iter() {
            for q in c.set.iter() {
                prop_assert!(c.set.contains(a.mul(p, q)) && c.set.contains(a.meet(p, q)) && c.set.contains(a.join(p, q)));
            }
        }
    }

    #[test]
    fn induced_structures_at_idempotents(a in pick(), k in 0usize..64) {
        let x = elem(a, k);
        prop_assume!(a.is_idempotent(x));
        let sx = Subset::singleton(a.size(), x);
        prop_assert_eq!(mult_right(a, &sx).unwrap().len(), impl_right(a, &sx).unwrap().len());
        let iso = order_iso_right(a, x, Mode::Strict).unwrap();
        prop_assert!(iso.ok(), "{:?}", iso.failures);
        for (d, c) in &iso.map {
            prop_assert_eq!(a.mul(x, *c), *d);
        }
        for r in [left_mult_algebra(a, x, Mode::Strict).unwrap(), right_mult_algebra(a, x, Mode::Strict).unwrap()] {
            prop_assert!(!r.is_defective());
        }
    }

    #[test]
    fn canonical_form_is_a_relabeling_invariant(a in pick(), seed in any::<u64>()) {
        let n = a.size();
        let mut p: Vec<usize> = (0..n).collect();
        p.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let b = permuted(a, &p);
        prop_assert_eq!(canonical_form(a), canonical_form(&b));
        let map = check_mtl_iso(a, &b);
        prop_assert!(map.is_some());
    }
}

#[test]
fn godel_algebras_have_subalgebra_right_center() {
    for a in pool().iter().filter(|a| is_godel(a)) {
        let l0 = impl_left(a, &Subset::singleton(a.size(), a.bot())).unwrap();
        assert!(
            is_subalgebra(a, &impl_right(a, &l0).unwrap()),
            "{}",
            a.name()
        );
    }
}
