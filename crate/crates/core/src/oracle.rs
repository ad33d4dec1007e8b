//! Brute-force reference computations that avoid linear algebra entirely.
//! They serve as independent oracles in sweeps and tests.

use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::Arc;

use crate::coxeter::{compose_perms, CoxeterSystem, Element, ReflWord, SignedRoot};
use crate::subgroups::ReflectionSubgroup;

type Perm = Box<[SignedRoot]>;

/// Distances from the identity in the Cayley graph of `⟨refls⟩` over the
/// generating set `refls`; `None` past `cap` vertices.
#[derive(Clone, Debug)]
pub struct CayleyLengths {
    group: Arc<CoxeterSystem>,
    refls: Vec<usize>,
    dist: HashMap<Perm, usize>,
}

impl CayleyLengths {
    pub fn new(group: &Arc<CoxeterSystem>, refls: &[usize], cap: usize) -> Option<Self> {
        let mut dist: HashMap<Perm, usize> = HashMap::new();
        let id: Perm = group.identity().perm().into();
        dist.insert(id.clone(), 0);
        let mut queue = VecDeque::from([id]);
        while let Some(p) = queue.pop_front() {
            let d = dist[&p];
            for &t in refls {
                let q = compose_perms(&p, group.reflection(t).ok()?.perm());
                if !dist.contains_key(&q) {
                    if dist.len() >= cap {
                        return None;
                    }
                    dist.insert(q.clone(), d + 1);
                    queue.push_back(q);
                }
            }
        }
        Some(Self {
            group: group.clone(),
            refls: refls.to_vec(),
            dist,
        })
    }

    /// Length over the generating reflections, `None` outside the subgroup.
    pub fn length(&self, x: &Element) -> Option<usize> {
        self.dist.get(x.perm()).copied()
    }

    pub fn size(&self) -> usize {
        self.dist.len()
    }

    pub fn contains(&self, x: &Element) -> bool {
        self.dist.contains_key(x.perm())
    }

    /// Every word of minimal length over the generating reflections whose
    /// product is `x`.
    pub fn minimal_words(&self, x: &Element) -> Vec<ReflWord> {
        let mut out = Vec::new();
        if let Some(k) = self.length(x) {
            let mut word = Vec::with_capacity(k);
            self.extend(x.perm(), k, &mut word, &mut out);
        }
        out
    }

    /// `rest` is what remains to be produced, of length `k`.
    fn extend(&self, rest: &[SignedRoot], k: usize, word: &mut Vec<usize>, out: &mut Vec<ReflWord>) {
        if k == 0 {
            out.push(ReflWord::new(word.clone()));
            return;
        }
        for &t in &self.refls {
            let t_perm = self.group.reflection(t).expect("valid reflection");
            let next = compose_perms(t_perm.perm(), rest);
            if self.dist.get(&next) == Some(&(k - 1)) {
                word.push(t);
                self.extend(&next, k - 1, word, out);
                word.pop();
            }
        }
    }
}

/// Reflections lying in the group generated by `gens`, found by enumerating
/// that group.
pub fn reflections_in_generated(group: &Arc<CoxeterSystem>, gens: &[usize], cap: usize) -> Option<Vec<usize>> {
    let lengths = CayleyLengths::new(group, gens, cap)?;
    Some(
        group
            .reflections()
            .iter()
            .enumerate()
            .filter(|(_, r)| lengths.contains(r))
            .map(|(t, _)| t)
            .collect(),
    )
}

/// Closures of all subsets of `T`, deduplicated and sorted.
pub fn all_reflection_subgroups(group: &Arc<CoxeterSystem>) -> Vec<ReflectionSubgroup> {
    let n = group.n_reflections();
    assert!(n < 24, "subset enumeration over {n} reflections");
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        let gens: Vec<usize> = (0..n).filter(|&t| mask >> t & 1 == 1).collect();
        let sub = ReflectionSubgroup::closure(group, &gens).expect("indices in range");
        if seen.insert(sub.reflections().to_vec()) {
            out.push(sub);
        }
    }
    out.sort();
    out
}

/// Whether some minimal-length word for `x` over `Ref(sub)` generates `sub`.
pub fn is_quasi_coxeter_in(x: &Element, sub: &ReflectionSubgroup, lengths: &CayleyLengths) -> bool {
    lengths.minimal_words(x).iter().any(|w| {
        ReflectionSubgroup::closure(x.group(), w.letters())
            .map(|c| c == *sub)
            .unwrap_or(false)
    })
}
