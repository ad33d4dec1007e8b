use std::collections::HashSet;
use std::sync::{Arc, OnceLock};

use proptest::prelude::*;

use dualcox_core::coxeter::Descriptor;
use dualcox_core::cycles::{is_indecomposable, is_indecomposable_brute};
use dualcox_core::hurwitz::hurwitz_move;
use dualcox_core::oracle::reflections_in_generated;
use dualcox_core::permmodel::{
    element_from_permutation, element_from_signed, perm_reflection_length, to_permutation, to_signed,
};
use dualcox_core::subgroups::ReflectionSubgroup;
use dualcox_core::{CoxeterSystem, Element, ReflWord};

const TYPES: &[&str] = &["A3", "B3", "D4", "G2", "H3", "I2(5)", "I2(7)", "A1xB2", "A2xA2"];

fn group(ty: &str) -> Arc<CoxeterSystem> {
    static CACHE: OnceLock<Vec<Arc<CoxeterSystem>>> = OnceLock::new();
    let all = CACHE.get_or_init(|| TYPES.iter().map(|t| CoxeterSystem::from_type(t).unwrap()).collect());
    let i = TYPES.iter().position(|t| *t == ty).expect("listed type");
    all[i].clone()
}

/// A group from `types` with a random simple word of length below `max_len`.
fn element_in(types: &'static [&'static str], max_len: usize) -> impl Strategy<Value = Element> {
    prop::sample::select(types).prop_flat_map(move |ty| {
        let g = group(ty);
        let r = g.rank();
        prop::collection::vec(0..r, 0..max_len).prop_map(move |w| g.element_from_simple_word(&w).unwrap())
    })
}

fn any_element() -> impl Strategy<Value = Element> {
    element_in(TYPES, 14)
}

fn product(g: &Arc<CoxeterSystem>, w: &ReflWord) -> Element {
    g.element_from_refl_word(w).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn reflection_length_is_codimension_of_fixed_space(x in any_element()) {
        let n = x.group().rank();
        prop_assert_eq!(x.reflection_length(), n - x.fixed_space_dim());
        prop_assert_eq!(x.first_reduced_expression().len(), x.reflection_length());
        prop_assert_eq!(x.parabolic_closure().rank(), x.reflection_length());
        prop_assert_eq!(x.inverse().reflection_length(), x.reflection_length());
    }

    #[test]
    fn reflection_length_is_subadditive(x in any_element(), seed in any::<u64>()) {
        let g = x.group().clone();
        let t = (seed as usize) % g.n_reflections();
        let y = &x * &g.reflection(t).unwrap();
        prop_assert_eq!(x.reflection_length().abs_diff(y.reflection_length()), 1);
    }

    #[test]
    fn reflections_below_agree_with_absolute_order(x in any_element()) {
        let g = x.group().clone();
        let below: HashSet<usize> = x.reflections_below().into_iter().collect();
        for t in 0..g.n_reflections() {
            let te = g.reflection(t).unwrap();
            let leq = te.absolute_leq(&x).unwrap();
            prop_assert_eq!(leq, x.has_reflection_below(t).unwrap());
            prop_assert_eq!(leq, below.contains(&t));
            let rest = &te * &x;
            prop_assert_eq!(leq, rest.reflection_length() + 1 == x.reflection_length());
        }
    }

    #[test]
    fn reduced_words_multiply_to_the_element_and_prefixes_lie_below(x in element_in(&["A3", "B3", "G2", "I2(5)", "A1xB2"], 10)) {
        let g = x.group().clone();
        let reds = x.reduced_expressions(100_000).complete().unwrap();
        prop_assert!(!reds.is_empty());
        let mut sorted = reds.clone();
        sorted.sort();
        sorted.dedup();
        prop_assert_eq!(sorted.len(), reds.len());
        prop_assert_eq!(&reds[0], &x.first_reduced_expression());
        for w in &reds {
            prop_assert_eq!(w.len(), x.reflection_length());
            prop_assert_eq!(&product(&g, w), &x);
            for k in 0..=w.len() {
                let prefix = product(&g, &ReflWord::new(w.letters()[..k].to_vec()));
                prop_assert_eq!(prefix.reflection_length(), k);
                prop_assert!(prefix.absolute_leq(&x).unwrap());
            }
        }
    }

    #[test]
    fn reduced_words_stay_inside_the_parabolic_closure(x in element_in(&["A3", "B3", "D4", "H3", "I2(7)", "A2xA2"], 12)) {
        let g = x.group().clone();
        let p = x.parabolic_closure();
        let mut mask = vec![false; g.n_reflections()];
        for &t in p.reflections() {
            mask[t] = true;
        }
        let over_t: Vec<ReflWord> = x.reduced_expressions_iter().take(5_000).collect();
        let over_p: Vec<ReflWord> = x.reduced_expressions_within_iter(&mask).take(5_000).collect();
        prop_assert_eq!(&over_t, &over_p);
        for t in x.reflections_below() {
            prop_assert!(p.contains_reflection(t));
        }
    }

    #[test]
    fn parabolic_closure_is_parabolic_and_minimal(x in any_element(), seed in any::<u64>()) {
        let g = x.group().clone();
        let p = x.parabolic_closure();
        prop_assert!(p.is_parabolic());
        // Any standard parabolic containing x contains P(x).
        let simple = g.simple_reflection_ids();
        let subset: Vec<usize> = (0..g.rank()).filter(|i| seed >> i & 1 == 1).map(|i| simple[i]).collect();
        let standard = ReflectionSubgroup::closure(&g, &subset).unwrap();
        if standard.contains_element(&x).unwrap() {
            prop_assert!(p.reflections().iter().all(|&t| standard.contains_reflection(t)));
        }
        prop_assert!(p.contains_element(&x).unwrap());
    }

    #[test]
    fn hurwitz_moves_preserve_product_and_subgroup(x in element_in(&["A3", "B3", "D4", "H3", "A1xB2"], 12), i in 1usize..4) {
        let g = x.group().clone();
        let w = x.first_reduced_expression();
        prop_assume!(w.len() >= 2);
        let i = 1 + (i - 1) % (w.len() - 1);
        let fwd = hurwitz_move(&g, &w, i, false).unwrap();
        let back = hurwitz_move(&g, &fwd, i, true).unwrap();
        prop_assert_eq!(&back, &w);
        prop_assert_eq!(&product(&g, &fwd), &x);
        let before = ReflectionSubgroup::closure(&g, w.letters()).unwrap();
        let after = ReflectionSubgroup::closure(&g, fwd.letters()).unwrap();
        prop_assert_eq!(before, after);
    }

    #[test]
    fn hurwitz_moves_satisfy_braid_relations(x in element_in(&["A3", "B3", "D4", "H3"], 14)) {
        let g = x.group().clone();
        let w = x.first_reduced_expression();
        prop_assume!(w.len() >= 3);
        let s = |w: &ReflWord, i: usize| hurwitz_move(&g, w, i, false).unwrap();
        prop_assert_eq!(s(&s(&s(&w, 1), 2), 1), s(&s(&s(&w, 2), 1), 2));
        if w.len() >= 4 {
            prop_assert_eq!(s(&s(&w, 1), 3), s(&s(&w, 3), 1));
        }
    }

    #[test]
    fn closure_matches_generated_subgroup(seed in any::<u64>(), pick in 0usize..2) {
        let g = group(["A3", "B3"][pick]);
        let n = g.n_reflections();
        let gens: Vec<usize> = (0..n).filter(|t| seed >> (t % 64) & 1 == 1).take(3).collect();
        let sub = ReflectionSubgroup::closure(&g, &gens).unwrap();
        let oracle = reflections_in_generated(&g, &gens, 100_000).unwrap();
        prop_assert_eq!(sub.reflections(), &oracle[..]);
        let again = ReflectionSubgroup::closure(&g, sub.reflections()).unwrap();
        prop_assert_eq!(&again, &sub);
        let from_canonical = ReflectionSubgroup::closure(&g, sub.canonical_gens()).unwrap();
        prop_assert_eq!(&from_canonical, &sub);
        prop_assert_eq!(sub.canonical_gens().len(), sub.rank());
    }

    #[test]
    fn matrices_are_a_representation(x in element_in(&["A3", "B3", "D4", "H3", "I2(5)", "A1xB2"], 12), y in any::<u64>()) {
        let g = x.group().clone();
        let t = (y as usize) % g.n_reflections();
        let r = g.reflection(t).unwrap();
        let xy = &x * &r;
        prop_assert_eq!(xy.matrix().unwrap(), &x.matrix().unwrap() * &r.matrix().unwrap());
        let m = x.matrix().unwrap();
        for root in 0..g.n_reflections() {
            let image = x.image(root);
            let mut expected = g.root_coefficients(image.index()).unwrap();
            if image.is_negative() {
                expected = expected.into_iter().map(|c| -c).collect();
            }
            prop_assert_eq!(m.apply(&g.root_coefficients(root).unwrap()).unwrap(), expected);
        }
    }

    #[test]
    fn conjugation_acts_on_roots(x in any_element(), y in any::<u64>()) {
        let g = x.group().clone();
        let t = (y as usize) % g.n_reflections();
        let r = g.reflection(t).unwrap();
        let conj = &(&x * &r) * &x.inverse();
        prop_assert_eq!(conj.as_reflection(), Some(x.image(t).index()));
        prop_assert_eq!(x.conjugate_reflection(t).unwrap(), x.image(t).index());
    }

    #[test]
    fn type_a_permutations_are_an_isomorphism(x in element_in(&["A3"], 12), y in element_in(&["A3"], 12)) {
        let g = x.group().clone();
        let (px, py) = (to_permutation(&x).unwrap(), to_permutation(&y).unwrap());
        prop_assert_eq!(to_permutation(&(&x * &y)).unwrap(), px.compose(&py));
        prop_assert_eq!(&element_from_permutation(&g, &px).unwrap(), &x);
        prop_assert_eq!(perm_reflection_length(&px), x.reflection_length());
    }

    #[test]
    fn signed_permutations_are_an_isomorphism(x in element_in(&["B3", "D4"], 14), y in any::<u64>()) {
        let g = x.group().clone();
        let z = g.element_from_simple_word(&[(y as usize) % g.rank()]).unwrap();
        let (px, pz) = (to_signed(&x).unwrap(), to_signed(&z).unwrap());
        prop_assert_eq!(to_signed(&(&x * &z)).unwrap(), px.compose(&pz));
        prop_assert_eq!(&element_from_signed(&g, &px).unwrap(), &x);
        if g.descriptor().to_string() == "D4" {
            prop_assert_eq!(px.sign_changes() % 2, 0);
        }
    }

    #[test]
    fn fast_and_brute_indecomposability_agree(x in element_in(&["A3", "B3", "G2", "A1xB2"], 10)) {
        prop_assert_eq!(is_indecomposable(&x).unwrap(), is_indecomposable_brute(&x).unwrap());
    }
}

#[test]
fn type_a_and_b_permutation_models_cover_small_groups() {
    for ty in ["A2", "A3", "A4"] {
        let g = CoxeterSystem::from_type(ty).unwrap();
        let all = g.enumerate(100_000).unwrap();
        let images: HashSet<_> = all.iter().map(|x| to_permutation(x).unwrap()).collect();
        assert_eq!(images.len(), all.len(), "{ty}");
        for x in &all {
            assert_eq!(
                perm_reflection_length(&to_permutation(x).unwrap()),
                x.reflection_length()
            );
        }
    }
    for ty in ["B2", "B3", "B4", "D4"] {
        let g = CoxeterSystem::from_type(ty).unwrap();
        let all = g.enumerate(100_000).unwrap();
        let images: HashSet<_> = all.iter().map(|x| to_signed(x).unwrap()).collect();
        assert_eq!(images.len(), all.len(), "{ty}");
        for x in &all {
            assert_eq!(&element_from_signed(&g, &to_signed(x).unwrap()).unwrap(), x);
        }
    }
}

#[test]
fn group_orders_by_closure() {
    let expected = [
        ("A3", 24),
        ("B3", 48),
        ("D4", 192),
        ("G2", 12),
        ("H3", 120),
        ("F4", 1152),
        ("I2(5)", 10),
        ("I2(7)", 14),
        ("A1xB2", 16),
    ];
    for (ty, order) in expected {
        let g = CoxeterSystem::from_type(ty).unwrap();
        assert_eq!(g.order(100_000).unwrap(), order, "{ty}");
    }
}

#[test]
fn constructors_agree() {
    for ty in TYPES {
        let d: Descriptor = ty.parse().unwrap();
        let a = CoxeterSystem::build(&d);
        let b = CoxeterSystem::from_type(ty).unwrap();
        assert_eq!(a.coxeter_matrix(), b.coxeter_matrix());
        assert_eq!(a.n_reflections(), b.n_reflections());
        assert_eq!(d.to_string(), *ty);
    }
}

#[test]
fn coxeter_matrix_matches_root_permutation_orders() {
    for ty in TYPES {
        let g = group(ty);
        let m = g.coxeter_matrix();
        for i in 0..g.rank() {
            for j in 0..g.rank() {
                let p = &g.simple(i).unwrap() * &g.simple(j).unwrap();
                assert_eq!(p.order() as u32, m[i][j], "{ty} ({i},{j})");
            }
        }
    }
}

#[test]
fn every_element_has_a_parabolic_closure_of_rank_reflection_length() {
    for ty in ["A3", "B3", "H3", "A1xB2"] {
        let g = CoxeterSystem::from_type(ty).unwrap();
        for x in g.enumerate(100_000).unwrap() {
            let p = x.parabolic_closure();
            assert_eq!(p.rank(), x.reflection_length(), "{ty} {x:?}");
            assert!(p.contains_element(&x).unwrap());
        }
    }
}
