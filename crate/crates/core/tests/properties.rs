use std::sync::Arc;

use pasch_core::{
    compose, double_coset_geometry, enumerate_maps, find_isomorphism, fixtures, from_group_table, product,
    to_group_table, trivial_geometry, CayleyTable, Geometry, GeometryMap, MapKind, SearchLimits,
};
use proptest::prelude::*;
use proptest::sample::select;

fn small() -> Vec<Geometry> {
    vec![
        fixtures::trivial(),
        fixtures::z2(),
        fixtures::z3(),
        fixtures::z4(),
        fixtures::klein(),
        fixtures::sign(),
        fixtures::s3(),
    ]
}

fn arb_fixture() -> impl Strategy<Value = Geometry> {
    select(small())
}

#[test]
fn structural_invariants_on_fixtures() {
    let mut all = small();
    all.extend((2..=8).map(fixtures::cyclic));
    all.push(fixtures::s4());
    for g in &all {
        let r = g.validate_axioms();
        assert!(r.all_pass() && r.derived_pass(), "{:?}", g.labels());
        let inv = g.involution_table().unwrap();
        assert_eq!(inv[g.identity()], g.identity());
        for a in 0..g.len() {
            assert_eq!(inv[inv[a]], a);
            for b in 0..g.len() {
                assert!(g.slice(a, b).next().is_some());
            }
        }
        for &[a, b, c] in g.delta() {
            assert!(g.contains(b, c, a) && g.contains(c, a, b));
            assert!(g.contains(inv[c], inv[b], inv[a]));
        }
        if g.is_sharp() {
            assert_eq!(g.delta().len(), g.len() * g.len());
        }
    }
}

#[test]
fn double_cosets_of_trivial_subgroup_are_the_group() {
    for t in [
        CayleyTable::cyclic(1),
        CayleyTable::cyclic(2),
        CayleyTable::cyclic(3),
        CayleyTable::cyclic(4),
        CayleyTable::klein(),
        CayleyTable::cyclic(5),
        CayleyTable::cyclic(6),
        CayleyTable::symmetric(3),
    ] {
        let e = t.validate().unwrap().identity;
        let dc = Arc::new(double_coset_geometry(&t, &[e]).unwrap());
        let g = Arc::new(from_group_table(&t).unwrap());
        assert!(find_isomorphism(&dc, &g).is_some());
        let whole: Vec<usize> = (0..t.order()).collect();
        let one = Arc::new(double_coset_geometry(&t, &whole).unwrap());
        assert_eq!(one.len(), 1);
        assert!(find_isomorphism(&one, &Arc::new(trivial_geometry())).is_some());
    }
}

#[test]
fn maps_to_and_from_trivial_are_unique() {
    let triv = Arc::new(trivial_geometry());
    for g in small() {
        let g = Arc::new(g);
        for kind in [MapKind::Morphism, MapKind::Homomorphism] {
            assert_eq!(enumerate_maps(&g, &triv, kind, SearchLimits::default()).unwrap().len(), 1);
            assert_eq!(enumerate_maps(&triv, &g, kind, SearchLimits::default()).unwrap().len(), 1);
        }
    }
}

#[test]
fn composition_closure_on_all_fixture_pairs() {
    let gs: Vec<Arc<Geometry>> = small().into_iter().filter(|g| g.len() <= 4).map(Arc::new).collect();
    let limits = SearchLimits::default();
    for a in &gs {
        for b in &gs {
            let ab = enumerate_maps(a, b, MapKind::Morphism, limits).unwrap();
            for c in &gs {
                let bc = enumerate_maps(b, c, MapKind::Morphism, limits).unwrap();
                for f in &ab {
                    for g in &bc {
                        let h = compose(g, f).unwrap();
                        assert!(h.morphism_violation().is_none());
                        if f.is_homomorphism() && g.is_homomorphism() {
                            assert!(h.homomorphism_violation().is_none());
                        }
                    }
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn product_counts_and_classification(a in arb_fixture(), b in arb_fixture()) {
        let p = product(&a, &b);
        prop_assert_eq!(p.len(), a.len() * b.len());
        prop_assert_eq!(p.delta().len(), a.delta().len() * b.delta().len());
        prop_assert_eq!(p.is_abelian(), a.is_abelian() && b.is_abelian());
        prop_assert_eq!(p.is_sharp(), a.is_sharp() && b.is_sharp());
        prop_assert!(p.validate_axioms().all_pass());
    }

    #[test]
    fn unit_law(a in arb_fixture()) {
        let p = Arc::new(product(&a, &trivial_geometry()));
        prop_assert!(find_isomorphism(&p, &Arc::new(a)).is_some());
    }

    #[test]
    fn hom_sets_are_consistent(a in arb_fixture(), b in arb_fixture()) {
        let (a, b) = (Arc::new(a), Arc::new(b));
        let limits = SearchLimits::default();
        let morphisms = enumerate_maps(&a, &b, MapKind::Morphism, limits).unwrap();
        let homs = enumerate_maps(&a, &b, MapKind::Homomorphism, limits).unwrap();
        prop_assert!(homs.iter().all(|h| morphisms.contains(h)));
        prop_assert!(morphisms.windows(2).all(|w| w[0].table() < w[1].table()));
        for f in &morphisms {
            prop_assert!(f.is_morphism());
            prop_assert!(f.kernel().unwrap().is_subgeometry());
        }
        for h in &homs {
            prop_assert!(h.homomorphism_violation().is_none());
            prop_assert!(h.image().unwrap().is_subgeometry());
        }
    }

    #[test]
    fn table_round_trip_on_sharp(a in arb_fixture()) {
        prop_assume!(a.is_sharp());
        let t = to_group_table(&a).unwrap();
        prop_assert_eq!(from_group_table(&t).unwrap(), a);
    }

    #[test]
    fn identity_is_neutral(a in arb_fixture(), b in arb_fixture()) {
        let (a, b) = (Arc::new(a), Arc::new(b));
        for f in enumerate_maps(&a, &b, MapKind::Morphism, SearchLimits::default()).unwrap() {
            prop_assert_eq!(&compose(&GeometryMap::identity(&b), &f).unwrap(), &f);
            prop_assert_eq!(&compose(&f, &GeometryMap::identity(&a)).unwrap(), &f);
        }
    }
}
