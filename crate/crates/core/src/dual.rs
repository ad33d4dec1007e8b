//! Reflection length, the absolute order, reduced reflection factorizations
//! and parabolic closures.
//!
//! Everything here rests on the fixed space `V^w` and its orthogonal
//! complement `Mov(w) = im(w - 1)`: the reflection length is the codimension
//! of `V^w`, and a reflection `t` lies below `w` in the absolute order exactly
//! when its root lies in `Mov(w)`.

use std::collections::HashMap;
use std::sync::Arc;

use crate::algebra::{Scalar, Vector};
use crate::coxeter::{CoxeterSystem, Element, ReflWord, SignedRoot};
use crate::error::{Error, Result};
use crate::subgroups::ReflectionSubgroup;

/// Fixed and moved space of an element, computed once and cached on it.
#[derive(Clone, Debug)]
pub struct MovData {
    pub refl_length: usize,
    pub fixed_dim: usize,
    /// `below[t]` iff reflection `t` lies below the element in the absolute
    /// order.
    pub below: Vec<bool>,
    /// Basis of `V^w` in simple-root coordinates (linear models only).
    pub fixed_basis: Option<Vec<Vector>>,
    /// Basis of `Mov(w)` in simple-root coordinates (linear models only).
    pub mov_basis: Option<Vec<Vector>>,
}

pub(crate) fn analyze(group: &CoxeterSystem, perm: &[SignedRoot]) -> MovData {
    let rank = group.rank();
    let mut below = Vec::with_capacity(perm.len());
    let mut fixed_dim = 0;
    let mut fixed_basis = Some(Vec::new());
    let mut mov_basis = Some(Vec::new());
    let embed = |offset: usize, v: Vector| -> Vector {
        let mut out = vec![Scalar::zero(); rank];
        for (i, x) in v.into_iter().enumerate() {
            out[offset + i] = x;
        }
        out
    };
    for c in group.components() {
        let local = c.geometry.analyze(&c.restrict(perm));
        fixed_dim += local.fixed_dim;
        below.extend(local.below);
        match (fixed_basis.as_mut(), local.fixed_basis) {
            (Some(acc), Some(b)) => acc.extend(b.into_iter().map(|v| embed(c.simple_offset, v))),
            _ => fixed_basis = None,
        }
        match (mov_basis.as_mut(), local.mov_basis) {
            (Some(acc), Some(b)) => acc.extend(b.into_iter().map(|v| embed(c.simple_offset, v))),
            _ => mov_basis = None,
        }
    }
    MovData {
        refl_length: rank - fixed_dim,
        fixed_dim,
        below,
        fixed_basis,
        mov_basis,
    }
}

impl Element {
    pub fn mov_data(&self) -> Arc<MovData> {
        self.mov
            .get_or_init(|| Arc::new(analyze(self.group(), self.perm())))
            .clone()
    }

    /// `ℓ_T(w) = n - dim V^w`.
    pub fn reflection_length(&self) -> usize {
        self.mov_data().refl_length
    }

    pub fn fixed_space_dim(&self) -> usize {
        self.mov_data().fixed_dim
    }

    /// `self ≤_T v`, i.e. `ℓ_T(u) + ℓ_T(u⁻¹v) = ℓ_T(v)`.
    pub fn absolute_leq(&self, v: &Element) -> Result<bool> {
        let rest = self.inverse().checked_mul(v)?;
        Ok(self.reflection_length() + rest.reflection_length() == v.reflection_length())
    }

    /// `t ≤_T self`, tested as `α_t ∈ Mov(self)`.
    pub fn has_reflection_below(&self, t: usize) -> Result<bool> {
        let data = self.mov_data();
        data.below.get(t).copied().ok_or(Error::IndexOutOfRange {
            what: "reflection",
            index: t,
            bound: data.below.len(),
        })
    }

    /// All reflections below `self` in the absolute order, ascending.
    pub fn reflections_below(&self) -> Vec<usize> {
        let data = self.mov_data();
        (0..data.below.len()).filter(|&t| data.below[t]).collect()
    }

    /// Stream of `Red(self)` in lexicographic order.
    pub fn reduced_expressions_iter(&self) -> ReducedExpressions {
        ReducedExpressions::new(self, None)
    }

    /// `Red(self)`, stopping with `truncated = true` if it holds more than
    /// `cap` words.
    pub fn reduced_expressions(&self, cap: usize) -> RedEnumeration {
        RedEnumeration::collect(self.reduced_expressions_iter(), cap)
    }

    /// Reduced expressions all of whose letters satisfy `allowed`.
    pub fn reduced_expressions_within(&self, allowed: &[bool], cap: usize) -> RedEnumeration {
        RedEnumeration::collect(self.reduced_expressions_within_iter(allowed), cap)
    }

    pub fn reduced_expressions_within_iter(&self, allowed: &[bool]) -> ReducedExpressions {
        ReducedExpressions::new(self, Some(allowed.to_vec()))
    }

    /// The lexicographically least reduced expression.
    pub fn first_reduced_expression(&self) -> ReflWord {
        self.reduced_expressions_iter()
            .next()
            .expect("every element has a reduced expression")
    }

    /// `P(w) = Fix(V^w)`: the reflection subgroup generated by all
    /// reflections below `self`. Its rank equals the reflection length.
    pub fn parabolic_closure(&self) -> ReflectionSubgroup {
        ReflectionSubgroup::closure(self.group(), &self.reflections_below()).expect("reflection indices in range")
    }
}

#[derive(Clone, Debug)]
pub struct RedEnumeration {
    pub words: Vec<ReflWord>,
    pub truncated: bool,
    pub cap: usize,
}

impl RedEnumeration {
    fn collect(mut it: ReducedExpressions, cap: usize) -> Self {
        let words: Vec<ReflWord> = it.by_ref().take(cap).collect();
        let truncated = words.len() == cap && it.next().is_some();
        Self { words, truncated, cap }
    }

    /// The words, or [`Error::Truncated`] if the cap was hit.
    pub fn complete(self) -> Result<Vec<ReflWord>> {
        if self.truncated {
            Err(Error::Truncated { cap: self.cap })
        } else {
            Ok(self.words)
        }
    }
}

struct Frame {
    perm: Box<[SignedRoot]>,
    candidates: Arc<[usize]>,
    next: usize,
}

/// Depth-first enumeration of reduced reflection factorizations: a word
/// `(t, rest…)` is reduced for `x` iff `t ≤_T x` and `rest` is reduced for
/// `t·x`. Candidates are tried in increasing index order, so words come out
/// lexicographically sorted and without repetition.
pub struct ReducedExpressions {
    group: Arc<CoxeterSystem>,
    allowed: Option<Vec<bool>>,
    below_cache: HashMap<Box<[SignedRoot]>, Arc<[usize]>>,
    stack: Vec<Frame>,
    word: Vec<usize>,
}

impl ReducedExpressions {
    fn new(x: &Element, allowed: Option<Vec<bool>>) -> Self {
        let mut it = Self {
            group: x.group().clone(),
            allowed,
            below_cache: HashMap::new(),
            stack: Vec::new(),
            word: Vec::new(),
        };
        it.push(x.perm().into());
        it
    }

    fn candidates(&mut self, perm: &[SignedRoot]) -> Arc<[usize]> {
        if let Some(c) = self.below_cache.get(perm) {
            return c.clone();
        }
        let data = analyze(&self.group, perm);
        let c: Arc<[usize]> = (0..data.below.len())
            .filter(|&t| data.below[t] && self.allowed.as_ref().is_none_or(|a| a[t]))
            .collect();
        self.below_cache.insert(perm.into(), c.clone());
        c
    }

    fn push(&mut self, perm: Box<[SignedRoot]>) {
        let candidates = self.candidates(&perm);
        self.stack.push(Frame {
            perm,
            candidates,
            next: 0,
        });
    }
}

impl Iterator for ReducedExpressions {
    type Item = ReflWord;

    fn next(&mut self) -> Option<ReflWord> {
        loop {
            let frame = self.stack.last_mut()?;
            if frame.next == 0 && is_identity(&frame.perm) {
                let word = ReflWord::new(self.word.clone());
                self.stack.pop();
                self.word.pop();
                return Some(word);
            }
            if frame.next < frame.candidates.len() {
                let t = frame.candidates[frame.next];
                frame.next += 1;
                let perm = crate::coxeter::compose_perms(self.group.reflection_perm(t), &frame.perm);
                self.word.push(t);
                self.push(perm);
            } else {
                self.stack.pop();
                self.word.pop();
            }
        }
    }
}

fn is_identity(perm: &[SignedRoot]) -> bool {
    perm.iter().enumerate().all(|(i, r)| *r == SignedRoot::new(i, false))
}
