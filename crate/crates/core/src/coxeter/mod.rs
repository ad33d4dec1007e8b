//! Finite Coxeter systems: types, root systems, reflections and elements.

mod descriptor;
mod element;
pub mod families;
pub mod geometry;
mod system;
pub mod words;

pub use descriptor::{ComponentType, Descriptor, Family};
pub use element::{Element, ReflWord, SignedRoot};
pub(crate) use system::{bfs_closure, compose as compose_perms, perm_order};
pub use system::{Component, CoxeterSystem};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Matrix;

    #[test]
    fn a2_basics() {
        let g = CoxeterSystem::from_type("A2").unwrap();
        assert_eq!(g.n_reflections(), 3);
        assert_eq!(g.order(100).unwrap(), 6);
        assert_eq!(g.simple_reflection_ids(), &[0, 1]);
        assert_eq!(g.coxeter_matrix(), &[vec![1, 3], vec![3, 1]]);

        assert!(g.element_from_simple_word(&[]).unwrap().is_identity());
        let s0 = g.element_from_simple_word(&[0]).unwrap();
        assert_eq!(s0.image(0), SignedRoot::new(0, true));
        // s0 s1 s0 is the reflection in α0 + α1.
        let x = g.element_from_simple_word(&[0, 1, 0]).unwrap();
        let t = x.as_reflection().unwrap();
        assert_eq!(g.root_coefficients(t).unwrap(), vec![1.into(), 1.into()]);
        assert_eq!(s0.conjugate_reflection(1).unwrap(), t);
        assert!(g.element_from_simple_word(&[2]).is_err());

        let s1 = g.simple(1).unwrap();
        assert_eq!((&s0 * &s1).order(), 3);
        assert_eq!(g.identity().order(), 1);
        assert!((&x * &x.inverse()).is_identity());
    }

    #[test]
    fn canonical_words() {
        let g = CoxeterSystem::from_type("A2").unwrap();
        assert!(g.identity().canonical_s_word().is_empty());
        assert_eq!(g.simple(1).unwrap().canonical_s_word(), vec![1]);
        let w0 = g.element_from_simple_word(&[1, 0, 1]).unwrap();
        assert_eq!(w0.canonical_s_word(), vec![0, 1, 0]);
        for x in CoxeterSystem::from_type("B3").unwrap().enumerate(100).unwrap() {
            let w = x.canonical_s_word();
            assert_eq!(w.len(), x.inversion_count());
            assert_eq!(x.group().element_from_simple_word(&w).unwrap(), x);
        }
    }

    #[test]
    fn conjugate_reflection_edge_cases() {
        let g = CoxeterSystem::from_type("B3").unwrap();
        for t in 0..g.n_reflections() {
            assert_eq!(g.identity().conjugate_reflection(t).unwrap(), t);
            assert_eq!(g.reflection(t).unwrap().conjugate_reflection(t).unwrap(), t);
        }
        assert!(g.identity().conjugate_reflection(9).is_err());
    }

    #[test]
    fn reflection_word_constructor() {
        let g = CoxeterSystem::from_type("G2").unwrap();
        assert!(g.element_from_refl_word(&ReflWord::empty()).unwrap().is_identity());
        for t in 0..6 {
            let r = g.element_from_refl_word(&ReflWord::new(vec![t])).unwrap();
            assert_eq!(r.as_reflection(), Some(t));
            assert!(g
                .element_from_refl_word(&ReflWord::new(vec![t, t]))
                .unwrap()
                .is_identity());
        }
        // (s, tst) multiplies out to stst.
        let s = g.simple_reflection_ids()[0];
        let tst = g.element_from_simple_word(&[1, 0, 1]).unwrap().as_reflection().unwrap();
        assert_eq!(
            g.element_from_refl_word(&ReflWord::new(vec![s, tst])).unwrap(),
            g.element_from_simple_word(&[0, 1, 0, 1]).unwrap()
        );
        assert!(g.element_from_refl_word(&ReflWord::new(vec![6])).is_err());
    }

    #[test]
    fn matrices_follow_roots() {
        for ty in ["A3", "B3", "G2", "H3", "F4", "A1xB2"] {
            let g = CoxeterSystem::from_type(ty).unwrap();
            for x in g.enumerate(2000).unwrap().iter().step_by(7) {
                let m = x.matrix().unwrap();
                for t in 0..g.n_reflections() {
                    let img = x.image(t);
                    let mut expected = g.root_coefficients(img.index()).unwrap();
                    if img.is_negative() {
                        expected = expected.iter().map(|v| -v).collect();
                    }
                    assert_eq!(m.apply(&g.root_coefficients(t).unwrap()).unwrap(), expected, "{ty}");
                }
            }
        }
        let g = CoxeterSystem::from_type("A3").unwrap();
        assert_eq!(g.identity().matrix().unwrap(), Matrix::identity(3));
        assert!(CoxeterSystem::from_type("I2(7)").unwrap().identity().matrix().is_err());
    }

    #[test]
    fn stst_has_no_fixed_vector() {
        let g = CoxeterSystem::from_type("G2").unwrap();
        let x = g.element_from_simple_word(&[0, 1, 0, 1]).unwrap();
        assert_eq!(x.matrix().unwrap().fixed_space_dim().unwrap(), 0);
        let s = g.simple(0).unwrap();
        assert_eq!(s.matrix().unwrap().fixed_space_dim().unwrap(), 1);
    }

    #[test]
    fn conjugation_is_an_action() {
        let g = CoxeterSystem::from_type("B3").unwrap();
        let all = g.enumerate(100).unwrap();
        for x in all.iter().step_by(5) {
            for y in all.iter().step_by(7) {
                let xy = x * y;
                for t in 0..g.n_reflections() {
                    let via = x.conjugate_reflection(y.conjugate_reflection(t).unwrap()).unwrap();
                    assert_eq!(xy.conjugate_reflection(t).unwrap(), via);
                }
            }
        }
    }

    #[test]
    fn reducible_blocks() {
        let g = CoxeterSystem::from_type("B2xB2").unwrap();
        assert_eq!(g.rank(), 4);
        assert_eq!(g.n_reflections(), 8);
        assert_eq!(g.simple_reflection_ids(), &[0, 1, 4, 5]);
        assert_eq!(g.coxeter_matrix()[0][2], 2);
        assert_eq!(g.order(1000).unwrap(), 64);
        let root = g.root_coordinates(5).unwrap();
        assert_eq!(root.len(), 4);
        assert_eq!(g.lookup_root(&root).unwrap(), SignedRoot::new(5, false));
    }

    #[test]
    fn cap_is_enforced() {
        let g = CoxeterSystem::from_type("B4").unwrap();
        assert!(matches!(
            g.enumerate(100),
            Err(crate::Error::GroupTooLarge { cap: 100 })
        ));
    }
}
