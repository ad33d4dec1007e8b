use std::sync::Arc;

use proptest::prelude::*;

use dualcox_core::cycles::{cycle_decomposition, decomposition_in_subgroup, verify_decomposition};
use dualcox_core::hurwitz::{hurwitz_orbits, is_parabolic_quasi_coxeter, orbit_subgroup_correspondence};
use dualcox_core::subgroups::ReflectionSubgroup;
use dualcox_core::{CoxeterSystem, Element, DEFAULT_RED_CAP};

fn element_in(types: &'static [&'static str], max_len: usize) -> impl Strategy<Value = Element> {
    prop::sample::select(types).prop_flat_map(move |ty| {
        let g: Arc<CoxeterSystem> = CoxeterSystem::from_type(ty).unwrap();
        let r = g.rank();
        prop::collection::vec(0..r, 0..max_len).prop_map(move |w| g.element_from_simple_word(&w).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn decompositions_of_parabolic_quasi_coxeter_elements_verify(x in element_in(&["A3", "B3", "D4", "H3", "A1xB2"], 12)) {
        prop_assume!(is_parabolic_quasi_coxeter(&x));
        let d = cycle_decomposition(&x).unwrap();
        let closure = x.parabolic_closure();
        prop_assert_eq!(&d.ambient, &closure);
        prop_assert_eq!(d.len(), closure.blocks().len());
        let report = verify_decomposition(&x, &d.factors, &d.ambient).unwrap();
        prop_assert!(report.all_pass(), "{:?}", report);
        let total: usize = d.factors.iter().map(Element::reflection_length).sum();
        prop_assert_eq!(total, x.reflection_length());
        for (f, c) in d.factors.iter().zip(&d.factor_closures) {
            prop_assert!(c.is_irreducible());
            prop_assert_eq!(&f.parabolic_closure(), c);
        }
    }

    #[test]
    fn orbit_subgroups_are_distinct_and_reproduce_decompositions(x in element_in(&["A3", "B3", "G2", "A1xB2"], 10)) {
        let pairs = orbit_subgroup_correspondence(&x, DEFAULT_RED_CAP).unwrap();
        let total: usize = pairs.iter().map(|(o, _)| o.size()).sum();
        prop_assert_eq!(total, x.reduced_expressions(DEFAULT_RED_CAP).complete().unwrap().len());
        for (orbit, sub) in &pairs {
            prop_assert_eq!(sub.rank(), x.reflection_length());
            for w in &orbit.members {
                prop_assert_eq!(&ReflectionSubgroup::closure(x.group(), w.letters()).unwrap(), sub);
            }
            let d = decomposition_in_subgroup(&x, sub).unwrap();
            prop_assert!(verify_decomposition(&x, &d.factors, sub).unwrap().all_pass());
        }
    }

    #[test]
    fn parabolic_quasi_coxeter_elements_have_one_orbit(x in element_in(&["A3", "B3", "D4", "H3"], 12)) {
        prop_assume!(is_parabolic_quasi_coxeter(&x));
        let orbits = hurwitz_orbits(&x, DEFAULT_RED_CAP).unwrap();
        prop_assert_eq!(orbits.len(), 1);
        prop_assert_eq!(&orbits[0].subgroup, &x.parabolic_closure());
    }
}
