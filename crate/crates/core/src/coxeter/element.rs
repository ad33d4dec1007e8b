use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::Mul;
use std::sync::{Arc, OnceLock};

use super::system::{compose, CoxeterSystem};
use crate::algebra::Matrix;
use crate::dual::MovData;
use crate::error::{Error, Result};

/// A positive-root index together with a sign: `w(α_i) = ±α_j`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedRoot(u32);

impl SignedRoot {
    pub fn new(index: usize, negative: bool) -> Self {
        Self(((index as u32) << 1) | negative as u32)
    }

    pub fn index(self) -> usize {
        (self.0 >> 1) as usize
    }

    pub fn is_negative(self) -> bool {
        self.0 & 1 == 1
    }

    pub fn negate(self) -> Self {
        Self(self.0 ^ 1)
    }

    pub(crate) fn shift(self, offset: usize) -> Self {
        Self::new(self.index() + offset, self.is_negative())
    }

    pub(crate) fn unshift(self, offset: usize) -> Self {
        Self::new(self.index() - offset, self.is_negative())
    }
}

impl fmt::Debug for SignedRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.is_negative() { "-" } else { "+" };
        write!(f, "{sign}{}", self.index())
    }
}

/// A group element, stored as the signed permutation it induces on the
/// positive roots.
#[derive(Clone)]
pub struct Element {
    group: Arc<CoxeterSystem>,
    perm: Box<[SignedRoot]>,
    pub(crate) mov: OnceLock<Arc<MovData>>,
    matrix: OnceLock<Option<Matrix>>,
}

impl Element {
    pub(crate) fn from_perm(group: Arc<CoxeterSystem>, perm: Box<[SignedRoot]>) -> Self {
        debug_assert_eq!(perm.len(), group.n_reflections());
        Self {
            group,
            perm,
            mov: OnceLock::new(),
            matrix: OnceLock::new(),
        }
    }

    pub fn group(&self) -> &Arc<CoxeterSystem> {
        &self.group
    }

    pub fn perm(&self) -> &[SignedRoot] {
        &self.perm
    }

    /// `w(α_i)` as a signed positive root.
    pub fn image(&self, root: usize) -> SignedRoot {
        self.perm[root]
    }

    pub fn same_group(&self, other: &Element) -> bool {
        Arc::ptr_eq(&self.group, &other.group)
    }

    pub fn is_identity(&self) -> bool {
        self.perm
            .iter()
            .enumerate()
            .all(|(i, r)| *r == SignedRoot::new(i, false))
    }

    /// Number of positive roots sent to negative roots (the length over the
    /// simple generators).
    pub fn inversion_count(&self) -> usize {
        self.perm.iter().filter(|r| r.is_negative()).count()
    }

    pub fn checked_mul(&self, rhs: &Element) -> Result<Element> {
        if !self.same_group(rhs) {
            return Err(Error::MixedGroups);
        }
        let perm = compose(&self.perm, &rhs.perm);
        Ok(Element::from_perm(self.group.clone(), perm))
    }

    pub fn inverse(&self) -> Element {
        let mut perm = vec![SignedRoot::new(0, false); self.perm.len()].into_boxed_slice();
        for (i, r) in self.perm.iter().enumerate() {
            perm[r.index()] = SignedRoot::new(i, r.is_negative());
        }
        Element::from_perm(self.group.clone(), perm)
    }

    pub fn pow(&self, k: usize) -> Element {
        (0..k).fold(self.group.identity(), |acc, _| &acc * self)
    }

    /// Least `k >= 1` with `x^k = 1`.
    pub fn order(&self) -> usize {
        let mut acc = self.clone();
        let mut k = 1;
        while !acc.is_identity() {
            acc = &acc * self;
            k += 1;
        }
        k
    }

    /// `self · other · self⁻¹`.
    pub fn conjugate(&self, other: &Element) -> Result<Element> {
        self.checked_mul(other)?.checked_mul(&self.inverse())
    }

    /// Index of the reflection `x t x⁻¹`, i.e. the reflection whose root is `±x(α_t)`.
    pub fn conjugate_reflection(&self, t: usize) -> Result<usize> {
        self.group.check_reflection(t)?;
        Ok(self.perm[t].index())
    }

    /// The reflection index if this element is a reflection.
    pub fn as_reflection(&self) -> Option<usize> {
        if self.inversion_count() % 2 == 0 {
            return None;
        }
        let t = (0..self.perm.len()).find(|&i| self.perm[i] == SignedRoot::new(i, true))?;
        (self.group.reflection(t).ok()?.perm == self.perm).then_some(t)
    }

    /// Matrix in the basis of simple roots, cached.
    pub fn matrix(&self) -> Result<Matrix> {
        self.matrix
            .get_or_init(|| self.group.matrix_of_perm(&self.perm))
            .clone()
            .ok_or_else(|| Error::NoLinearModel(self.group.descriptor().to_string()))
    }

    /// Matrix in the Euclidean coordinates of the root system.
    pub fn euclidean_matrix(&self) -> Result<Matrix> {
        self.group
            .euclidean_matrix_of_perm(&self.perm)
            .ok_or_else(|| Error::NoLinearModel(self.group.descriptor().to_string()))
    }

    /// A reduced word over the simple generators, found by repeatedly
    /// stripping the smallest right descent.
    pub fn canonical_s_word(&self) -> Vec<usize> {
        let simple = self.group.simple_reflection_ids();
        let mut x = self.clone();
        let mut emitted = Vec::new();
        while !x.is_identity() {
            let s = (0..simple.len())
                .find(|&i| x.perm[simple[i]].is_negative())
                .expect("a nontrivial element has a right descent");
            x = &x * &self.group.simple(s).expect("simple index in range");
            emitted.push(s);
        }
        emitted.reverse();
        emitted
    }
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        self.same_group(other) && self.perm == other.perm
    }
}

impl Eq for Element {}

impl Hash for Element {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.perm.hash(state);
    }
}

impl PartialOrd for Element {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Arbitrary but deterministic total order (by root permutation).
impl Ord for Element {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.perm.cmp(&other.perm)
    }
}

/// Panics when the factors belong to different groups; see
/// [`Element::checked_mul`].
impl Mul<&Element> for &Element {
    type Output = Element;
    fn mul(self, rhs: &Element) -> Element {
        self.checked_mul(rhs).expect("multiplying elements of different groups")
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element({} {:?})", self.group.descriptor(), self.canonical_s_word())
    }
}

/// `s0 s1 s0`, or `1` for the identity.
impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let word = self.canonical_s_word();
        if word.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = word.iter().map(|s| format!("s{s}")).collect();
        f.write_str(&parts.join(" "))
    }
}

/// An ordered tuple of reflection indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ReflWord(Vec<usize>);

impl ReflWord {
    pub fn new(letters: Vec<usize>) -> Self {
        Self(letters)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_letters(self) -> Vec<usize> {
        self.0
    }
}

impl From<Vec<usize>> for ReflWord {
    fn from(v: Vec<usize>) -> Self {
        Self(v)
    }
}

impl fmt::Display for ReflWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, t) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "t{t}")?;
        }
        f.write_str(")")
    }
}
