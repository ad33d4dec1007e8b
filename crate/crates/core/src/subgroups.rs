//! Reflection subgroups of a finite Coxeter group.
//!
//! A reflection subgroup is stored through its reflection set `Ref(W')`,
//! which is closed under mutual conjugation. Its canonical Coxeter
//! generators are the members having exactly one inversion inside the set.

use std::collections::HashSet;
use std::fmt;
use std::sync::{Arc, OnceLock};

use serde::Serialize;

use crate::coxeter::{
    bfs_closure, compose_perms, perm_order, ComponentType, CoxeterSystem, Element, Family, SignedRoot,
};
use crate::error::{Error, Result};
use crate::DEFAULT_ENUM_CAP;

/// An irreducible block of a reflection subgroup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub gens: Vec<usize>,
    pub reflections: Vec<usize>,
    pub kind: ComponentType,
}

#[derive(Clone)]
pub struct ReflectionSubgroup {
    ambient: Arc<CoxeterSystem>,
    reflections: Vec<usize>,
    canonical_gens: Vec<usize>,
    blocks: Vec<Block>,
    parabolic: Arc<OnceLock<bool>>,
    elements: Arc<OnceLock<Option<HashSet<Box<[SignedRoot]>>>>>,
}

/// Serializable summary of a subgroup.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubgroupSummary {
    pub rank: usize,
    #[serde(rename = "type")]
    pub type_label: String,
    pub canonical_gens: Vec<usize>,
    pub reflections: Vec<usize>,
    pub parabolic: bool,
}

/// Smallest set containing `gens` and closed under `(r, r') ↦ r r' r`.
pub fn reflection_closure(group: &CoxeterSystem, gens: &[usize]) -> Result<Vec<usize>> {
    let n = group.n_reflections();
    let mut member = vec![false; n];
    let mut list = Vec::new();
    for &g in gens {
        group.check_reflection(g)?;
        if !member[g] {
            member[g] = true;
            list.push(g);
        }
    }
    let mut i = 0;
    while i < list.len() {
        let a = list[i];
        for j in 0..=i {
            let b = list[j];
            for (x, y) in [(a, b), (b, a)] {
                let c = group.reflection_perm(x)[y].index();
                if !member[c] {
                    member[c] = true;
                    list.push(c);
                }
            }
        }
        i += 1;
    }
    list.sort_unstable();
    Ok(list)
}

/// `{ t ∈ refls : |N(t) ∩ refls| = 1 }`, where `N(t)` holds the reflections
/// whose positive root `t` sends negative.
pub fn canonical_generators(group: &CoxeterSystem, refls: &[usize]) -> Vec<usize> {
    refls
        .iter()
        .copied()
        .filter(|&t| {
            let perm = group.reflection_perm(t);
            refls.iter().filter(|&&r| perm[r].is_negative()).count() == 1
        })
        .collect()
}

fn product_order(group: &CoxeterSystem, a: usize, b: usize) -> u32 {
    perm_order(&compose_perms(group.reflection_perm(a), group.reflection_perm(b))) as u32
}

/// Identifies a connected finite Coxeter diagram given by its Coxeter matrix.
pub fn classify_diagram(m: &[Vec<u32>]) -> Option<ComponentType> {
    let k = m.len();
    let edges: Vec<(usize, usize, u32)> = (0..k)
        .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
        .filter(|&(i, j)| m[i][j] >= 3)
        .map(|(i, j)| (i, j, m[i][j]))
        .collect();
    if edges.len() + 1 != k {
        return None;
    }
    let degree = |v: usize| edges.iter().filter(|e| e.0 == v || e.1 == v).count();
    let ty = |f: Family, p: usize| Some(ComponentType::new(f, p as u32));
    match k {
        1 => return ty(Family::A, 1),
        2 => {
            return match m[0][1] {
                3 => ty(Family::A, 2),
                4 => ty(Family::B, 2),
                6 => ty(Family::G, 2),
                p => Some(ComponentType::new(Family::I2, p)),
            }
        }
        _ => {}
    }
    if edges.iter().any(|e| e.2 > 5) {
        return None;
    }
    if let Some(center) = (0..k).find(|&v| degree(v) == 3) {
        if edges.iter().any(|e| e.2 != 3) || (0..k).any(|v| degree(v) > 3 || (v != center && degree(v) > 2)) {
            return None;
        }
        let mut arms: Vec<usize> = edges
            .iter()
            .filter(|e| e.0 == center || e.1 == center)
            .map(|e| {
                let (mut prev, mut cur) = (center, if e.0 == center { e.1 } else { e.0 });
                let mut len = 1;
                loop {
                    let next = edges.iter().find_map(|f| {
                        let other = if f.0 == cur {
                            f.1
                        } else if f.1 == cur {
                            f.0
                        } else {
                            return None;
                        };
                        (other != prev).then_some(other)
                    });
                    match next {
                        Some(n) => {
                            (prev, cur) = (cur, n);
                            len += 1;
                        }
                        None => return len,
                    }
                }
            })
            .collect();
        arms.sort_unstable();
        return match arms[..] {
            [1, 1, _] => ty(Family::D, k),
            [1, 2, 2] => ty(Family::E, 6),
            [1, 2, 3] => ty(Family::E, 7),
            [1, 2, 4] => ty(Family::E, 8),
            _ => None,
        };
    }
    // A path: walk it from one end and read off the labels.
    let start = (0..k).find(|&v| degree(v) == 1)?;
    let mut labels = Vec::new();
    let (mut prev, mut cur) = (usize::MAX, start);
    for _ in 1..k {
        let (next, label) = edges.iter().find_map(|e| {
            let other = if e.0 == cur {
                e.1
            } else if e.1 == cur {
                e.0
            } else {
                return None;
            };
            (other != prev).then_some((other, e.2))
        })?;
        labels.push(label);
        (prev, cur) = (cur, next);
    }
    let special: Vec<(usize, u32)> = labels.iter().copied().enumerate().filter(|&(_, l)| l != 3).collect();
    let last = labels.len() - 1;
    match special[..] {
        [] => ty(Family::A, k),
        [(i, 4)] if i == 0 || i == last => ty(Family::B, k),
        [(1, 4)] if k == 4 => ty(Family::F, 4),
        [(i, 5)] if (i == 0 || i == last) && (k == 3 || k == 4) => ty(Family::H, k),
        _ => None,
    }
}

impl ReflectionSubgroup {
    /// The reflection subgroup generated by the reflections `gens`.
    pub fn closure(group: &Arc<CoxeterSystem>, gens: &[usize]) -> Result<Self> {
        let reflections = reflection_closure(group, gens)?;
        Self::from_closed(group, reflections)
    }

    pub fn full(group: &Arc<CoxeterSystem>) -> Self {
        Self::from_closed(group, (0..group.n_reflections()).collect()).expect("full reflection set")
    }

    pub fn trivial(group: &Arc<CoxeterSystem>) -> Self {
        Self::from_closed(group, Vec::new()).expect("empty reflection set")
    }

    /// `reflections` must be sorted and conjugation-closed.
    fn from_closed(group: &Arc<CoxeterSystem>, reflections: Vec<usize>) -> Result<Self> {
        let canonical_gens = canonical_generators(group, &reflections);
        let blocks = components(group, &canonical_gens, &reflections)?;
        Ok(Self {
            ambient: group.clone(),
            reflections,
            canonical_gens,
            blocks,
            parabolic: Arc::new(OnceLock::new()),
            elements: Arc::new(OnceLock::new()),
        })
    }

    pub fn ambient(&self) -> &Arc<CoxeterSystem> {
        &self.ambient
    }

    /// `Ref(W')`, ascending.
    pub fn reflections(&self) -> &[usize] {
        &self.reflections
    }

    pub fn canonical_gens(&self) -> &[usize] {
        &self.canonical_gens
    }

    /// Irreducible components, ordered by least reflection index.
    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn rank(&self) -> usize {
        self.canonical_gens.len()
    }

    pub fn is_irreducible(&self) -> bool {
        self.blocks.len() == 1
    }

    pub fn contains_reflection(&self, t: usize) -> bool {
        self.reflections.binary_search(&t).is_ok()
    }

    /// The irreducible component `i` as a subgroup in its own right.
    pub fn block_subgroup(&self, i: usize) -> ReflectionSubgroup {
        Self::from_closed(&self.ambient, self.blocks[i].reflections.clone()).expect("blocks are closed")
    }

    /// Component types in descriptor order joined by `x`; `trivial` for rank 0.
    pub fn type_label(&self) -> String {
        if self.blocks.is_empty() {
            return "trivial".into();
        }
        let mut kinds: Vec<ComponentType> = self.blocks.iter().map(|b| b.kind).collect();
        kinds.sort();
        kinds.iter().map(ToString::to_string).collect::<Vec<_>>().join("x")
    }

    /// Whether the subgroup is `Fix(E)` for `E` the intersection of its
    /// reflecting hyperplanes.
    pub fn is_parabolic(&self) -> bool {
        *self.parabolic.get_or_init(|| {
            self.ambient.components().iter().all(|c| {
                let local = |v: &[usize]| -> Vec<usize> {
                    v.iter()
                        .filter(|&&t| c.roots().contains(&t))
                        .map(|&t| t - c.root_offset)
                        .collect()
                };
                c.geometry
                    .is_parabolic(&local(&self.canonical_gens), &local(&self.reflections))
            })
        })
    }

    pub fn same_as(&self, other: &ReflectionSubgroup) -> Result<bool> {
        if !Arc::ptr_eq(&self.ambient, &other.ambient) {
            return Err(Error::MixedGroups);
        }
        Ok(self.reflections == other.reflections)
    }

    fn element_set(&self) -> Option<&HashSet<Box<[SignedRoot]>>> {
        self.elements
            .get_or_init(|| {
                let gens: Vec<Element> = self
                    .canonical_gens
                    .iter()
                    .map(|&t| self.ambient.reflection(t).expect("valid reflection"))
                    .collect();
                bfs_closure(self.ambient.identity(), &gens, DEFAULT_ENUM_CAP)
                    .map(|els| els.into_iter().map(|e| e.perm().into()).collect())
            })
            .as_ref()
    }

    /// All elements, if the subgroup has at most the default enumeration cap.
    pub fn elements(&self) -> Result<Vec<Element>> {
        let set = self
            .element_set()
            .ok_or(Error::SubgroupTooLarge { cap: DEFAULT_ENUM_CAP })?;
        let mut out: Vec<Element> = set
            .iter()
            .map(|p| Element::from_perm(self.ambient.clone(), p.clone()))
            .collect();
        out.sort();
        Ok(out)
    }

    pub fn contains_element(&self, x: &Element) -> Result<bool> {
        if !Arc::ptr_eq(&self.ambient, x.group()) {
            return Err(Error::MixedGroups);
        }
        if let Some(set) = self.element_set() {
            return Ok(set.contains(x.perm()));
        }
        if !self.is_parabolic() {
            return Err(Error::SubgroupTooLarge { cap: DEFAULT_ENUM_CAP });
        }
        let mut all = true;
        for c in self.ambient.components() {
            let gens: Vec<usize> = self
                .canonical_gens
                .iter()
                .filter(|&&t| c.roots().contains(&t))
                .map(|&t| t - c.root_offset)
                .collect();
            match c.geometry.fixes_intersection(&gens, &c.restrict(x.perm())) {
                Some(b) => all &= b,
                None => return Err(Error::SubgroupTooLarge { cap: DEFAULT_ENUM_CAP }),
            }
        }
        Ok(all)
    }

    pub fn summary(&self) -> SubgroupSummary {
        SubgroupSummary {
            rank: self.rank(),
            type_label: self.type_label(),
            canonical_gens: self.canonical_gens.clone(),
            reflections: self.reflections.clone(),
            parabolic: self.is_parabolic(),
        }
    }
}

fn components(group: &CoxeterSystem, gens: &[usize], reflections: &[usize]) -> Result<Vec<Block>> {
    let k = gens.len();
    let m: Vec<Vec<u32>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| {
                    if i == j {
                        1
                    } else {
                        product_order(group, gens[i], gens[j])
                    }
                })
                .collect()
        })
        .collect();
    let mut label: Vec<usize> = (0..k).collect();
    for i in 0..k {
        for j in 0..k {
            if m[i][j] >= 3 {
                let (a, b) = (label[i], label[j]);
                if a != b {
                    label.iter_mut().filter(|l| **l == b).for_each(|l| *l = a);
                }
            }
        }
    }
    let mut seen = Vec::new();
    for &l in &label {
        if !seen.contains(&l) {
            seen.push(l);
        }
    }
    let mut blocks = Vec::new();
    let mut owner = vec![0usize; group.n_reflections()];
    for l in seen {
        let idx: Vec<usize> = (0..k).filter(|&i| label[i] == l).collect();
        let block_gens: Vec<usize> = idx.iter().map(|&i| gens[i]).collect();
        let sub_m: Vec<Vec<u32>> = idx.iter().map(|&i| idx.iter().map(|&j| m[i][j]).collect()).collect();
        let kind = classify_diagram(&sub_m)
            .ok_or_else(|| Error::InvariantViolation(format!("unrecognized Coxeter diagram {sub_m:?}")))?;
        let block_refls = reflection_closure(group, &block_gens)?;
        for &t in &block_refls {
            owner[t] += 1;
        }
        blocks.push(Block {
            gens: block_gens,
            reflections: block_refls,
            kind,
        });
    }
    for &t in reflections {
        if owner[t] != 1 {
            return Err(Error::InvariantViolation(format!(
                "reflection {t} lies in {} irreducible blocks",
                owner[t]
            )));
        }
    }
    if owner.iter().sum::<usize>() != reflections.len() {
        return Err(Error::InvariantViolation("blocks exceed the reflection set".into()));
    }
    blocks.sort_by_key(|b| b.reflections[0]);
    Ok(blocks)
}

/// Equality of reflection sets within the same ambient group.
impl PartialEq for ReflectionSubgroup {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other).unwrap_or(false)
    }
}

impl Eq for ReflectionSubgroup {}

impl std::hash::Hash for ReflectionSubgroup {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.reflections.hash(state);
    }
}

impl PartialOrd for ReflectionSubgroup {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ReflectionSubgroup {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.reflections.cmp(&other.reflections)
    }
}

impl fmt::Debug for ReflectionSubgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ReflectionSubgroup({} {:?})", self.type_label(), self.reflections)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::words::parse_word;

    fn refl(g: &Arc<CoxeterSystem>, w: &str) -> usize {
        parse_word(g, w).unwrap().element.as_reflection().unwrap()
    }

    #[test]
    fn full_group_generators_are_simple() {
        for ty in ["A1", "A4", "B3", "D4", "E6", "F4", "G2", "H3", "H4", "I2(7)", "B2xA1"] {
            let g = CoxeterSystem::from_type(ty).unwrap();
            let full = ReflectionSubgroup::full(&g);
            assert_eq!(full.canonical_gens(), g.simple_reflection_ids(), "{ty}");
            assert_eq!(
                full.type_label(),
                g.descriptor().to_string().replace("I2(3)", "A2"),
                "{ty}"
            );
            assert!(full.is_parabolic());
        }
    }

    #[test]
    fn g2_subgroups() {
        let g = CoxeterSystem::from_type("G2").unwrap();
        let (s, t) = (refl(&g, "s"), refl(&g, "t"));
        let (tst, sts) = (refl(&g, "(t s t)"), refl(&g, "(s t s)"));
        let a = ReflectionSubgroup::closure(&g, &[s, tst]).unwrap();
        let b = ReflectionSubgroup::closure(&g, &[tst, s]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.reflections().len(), 3);
        assert_eq!(a.type_label(), "A2");
        let mut gens = vec![s, tst];
        gens.sort();
        assert_eq!(a.canonical_gens(), &gens[..]);
        assert!(!a.is_parabolic());
        assert!(!a.contains_element(&g.reflection(t).unwrap()).unwrap());
        assert!(a
            .contains_element(&g.element_from_simple_word(&[0, 1, 0, 1]).unwrap())
            .unwrap());
        assert_eq!(a.elements().unwrap().len(), 6);
        let other = ReflectionSubgroup::closure(&g, &[t, sts]).unwrap();
        assert_ne!(a, other);
    }

    #[test]
    fn commuting_transpositions() {
        let g = CoxeterSystem::from_type("A3").unwrap();
        let sub =
            ReflectionSubgroup::closure(&g, &[g.simple_reflection_ids()[0], g.simple_reflection_ids()[2]]).unwrap();
        assert_eq!(sub.blocks().len(), 2);
        assert_eq!(sub.type_label(), "A1xA1");
        assert!(sub.is_parabolic());
    }

    #[test]
    fn trivial_and_single() {
        let g = CoxeterSystem::from_type("B3").unwrap();
        let triv = ReflectionSubgroup::trivial(&g);
        assert_eq!((triv.rank(), triv.type_label().as_str()), (0, "trivial"));
        assert!(triv.is_parabolic());
        assert!(triv.contains_element(&g.identity()).unwrap());
        let one = ReflectionSubgroup::closure(&g, &[4]).unwrap();
        assert_eq!(one.reflections(), &[4]);
        assert_eq!(one.rank(), 1);
        assert!(ReflectionSubgroup::closure(&g, &[99]).is_err());
    }

    #[test]
    fn d4_inside_b4_is_not_parabolic() {
        let g = CoxeterSystem::from_type("B4").unwrap();
        let long: Vec<usize> = (0..g.n_reflections())
            .filter(|&t| {
                let c = g.root_coordinates(t).unwrap();
                c.iter().filter(|x| !x.is_zero()).count() == 2
            })
            .collect();
        assert_eq!(long.len(), 12);
        let d4 = ReflectionSubgroup::closure(&g, &long).unwrap();
        assert_eq!(d4.type_label(), "D4");
        assert!(!d4.is_parabolic());
    }

    #[test]
    fn diagram_catalogue() {
        let path = |labels: &[u32]| {
            let k = labels.len() + 1;
            let mut m = vec![vec![2; k]; k];
            for i in 0..k {
                m[i][i] = 1;
            }
            for (i, &l) in labels.iter().enumerate() {
                m[i][i + 1] = l;
                m[i + 1][i] = l;
            }
            classify_diagram(&m).map(|c| c.to_string())
        };
        assert_eq!(path(&[3, 3]).as_deref(), Some("A3"));
        assert_eq!(path(&[3, 4]).as_deref(), Some("B3"));
        assert_eq!(path(&[4, 3, 3]).as_deref(), Some("B4"));
        assert_eq!(path(&[3, 4, 3]).as_deref(), Some("F4"));
        assert_eq!(path(&[5, 3, 3]).as_deref(), Some("H4"));
        assert_eq!(path(&[8]).as_deref(), Some("I2(8)"));
        assert_eq!(path(&[4, 4]), None);
    }
}
