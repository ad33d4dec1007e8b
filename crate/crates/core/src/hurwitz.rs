//! The Hurwitz action of the braid group on reduced reflection
//! factorizations, its orbits, and the quasi-Coxeter tests.

use std::collections::HashMap;
use std::fmt::Write as _;

use petgraph::graph::Graph;
use petgraph::unionfind::UnionFind;

use crate::coxeter::{CoxeterSystem, Element, ReflWord};
use crate::error::{Error, Result};
use crate::subgroups::ReflectionSubgroup;

/// `σ_i` (1-based `i`) or its inverse applied to `w`.
///
/// Forward: `(…, t_i, t_{i+1}, …) ↦ (…, t_i t_{i+1} t_i, t_i, …)`.
/// Inverse: `(…, t_i, t_{i+1}, …) ↦ (…, t_{i+1}, t_{i+1} t_i t_{i+1}, …)`.
pub fn hurwitz_move(group: &CoxeterSystem, w: &ReflWord, i: usize, inverse: bool) -> Result<ReflWord> {
    let len = w.len();
    if i == 0 || i >= len {
        return Err(Error::IndexOutOfRange {
            what: "Hurwitz position",
            index: i,
            bound: len.max(1) - 1,
        });
    }
    for &t in w.letters() {
        group.check_reflection(t)?;
    }
    let mut letters = w.letters().to_vec();
    let (a, b) = (letters[i - 1], letters[i]);
    if inverse {
        letters[i - 1] = b;
        letters[i] = group.reflection_perm(b)[a].index();
    } else {
        letters[i - 1] = group.reflection_perm(a)[b].index();
        letters[i] = a;
    }
    Ok(ReflWord::new(letters))
}

#[derive(Clone, Debug)]
pub struct HurwitzOrbit {
    /// Lexicographically least member.
    pub representative: ReflWord,
    /// All members, ascending.
    pub members: Vec<ReflWord>,
    /// The reflection subgroup generated by the letters of any member.
    pub subgroup: ReflectionSubgroup,
}

impl HurwitzOrbit {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

fn partition(group: &CoxeterSystem, words: &[ReflWord]) -> Vec<Vec<usize>> {
    let index: HashMap<&ReflWord, usize> = words.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let mut uf = UnionFind::<usize>::new(words.len());
    for (i, w) in words.iter().enumerate() {
        for pos in 1..w.len() {
            let moved = hurwitz_move(group, w, pos, false).expect("position in range");
            let j = *index.get(&moved).expect("Hurwitz moves preserve reduced expressions");
            uf.union(i, j);
        }
    }
    let mut classes: HashMap<usize, Vec<usize>> = HashMap::new();
    for i in 0..words.len() {
        classes.entry(uf.find(i)).or_default().push(i);
    }
    let mut out: Vec<Vec<usize>> = classes.into_values().collect();
    out.sort();
    out
}

/// `𝓗(x)`: the partition of the full `Red(x)` into Hurwitz orbits, sorted by
/// representative. Fails with [`Error::Truncated`] if `|Red(x)| > cap`.
pub fn hurwitz_orbits(x: &Element, cap: usize) -> Result<Vec<HurwitzOrbit>> {
    let group = x.group();
    let words = x.reduced_expressions(cap).complete()?;
    partition(group, &words)
        .into_iter()
        .map(|class| {
            let members: Vec<ReflWord> = class.into_iter().map(|i| words[i].clone()).collect();
            let representative = members[0].clone();
            let subgroup = ReflectionSubgroup::closure(group, representative.letters())?;
            Ok(HurwitzOrbit {
                representative,
                members,
                subgroup,
            })
        })
        .collect()
}

/// Parabolic quasi-Coxeter: the letters of one reduced expression of `x` generate a
/// parabolic subgroup.
pub fn is_parabolic_quasi_coxeter(x: &Element) -> bool {
    let word = x.first_reduced_expression();
    ReflectionSubgroup::closure(x.group(), word.letters())
        .expect("letters in range")
        .is_parabolic()
}

/// Parabolic quasi-Coxeter of full reflection length.
pub fn is_quasi_coxeter(x: &Element) -> bool {
    x.reflection_length() == x.group().rank() && is_parabolic_quasi_coxeter(x)
}

/// Orbits paired with the subgroups they generate; these subgroups are
/// pairwise distinct.
pub fn orbit_subgroup_correspondence(x: &Element, cap: usize) -> Result<Vec<(HurwitzOrbit, ReflectionSubgroup)>> {
    let orbits = hurwitz_orbits(x, cap)?;
    for (i, a) in orbits.iter().enumerate() {
        for b in &orbits[i + 1..] {
            if a.subgroup == b.subgroup {
                return Err(Error::InvariantViolation(format!(
                    "orbits of {} and {} generate the same subgroup",
                    a.representative, b.representative
                )));
            }
        }
    }
    Ok(orbits
        .into_iter()
        .map(|o| {
            let s = o.subgroup.clone();
            (o, s)
        })
        .collect())
}

/// The Hurwitz graph on `Red(x)` in DOT format, one edge per forward move
/// labeled `σ_i`.
pub fn orbit_graph_dot(x: &Element, cap: usize) -> Result<String> {
    let group = x.group();
    let words = x.reduced_expressions(cap).complete()?;
    let mut graph: Graph<String, String> = Graph::new();
    let nodes: Vec<_> = words.iter().map(|w| graph.add_node(w.to_string())).collect();
    let index: HashMap<&ReflWord, usize> = words.iter().enumerate().map(|(i, w)| (w, i)).collect();
    for (i, w) in words.iter().enumerate() {
        for pos in 1..w.len() {
            let moved = hurwitz_move(group, w, pos, false)?;
            graph.add_edge(nodes[i], nodes[index[&moved]], format!("σ{pos}"));
        }
    }
    let mut out = String::from("digraph hurwitz {\n");
    for n in graph.node_indices() {
        writeln!(out, "  {} [label=\"{}\"];", n.index(), graph[n]).unwrap();
    }
    for e in graph.edge_indices() {
        let (a, b) = graph.edge_endpoints(e).expect("edge exists");
        writeln!(out, "  {} -> {} [label=\"{}\"];", a.index(), b.index(), graph[e]).unwrap();
    }
    out.push_str("}\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::words::parse_word;

    #[test]
    fn moves() {
        let g = CoxeterSystem::from_type("A3").unwrap();
        let s = g.simple_reflection_ids().to_vec();
        let w = ReflWord::new(vec![s[0], s[0]]);
        assert_eq!(hurwitz_move(&g, &w, 1, false).unwrap(), w);
        let w = ReflWord::new(vec![s[0], s[2]]);
        assert_eq!(hurwitz_move(&g, &w, 1, false).unwrap().letters(), &[s[2], s[0]]);
        let w = ReflWord::new(vec![s[0], s[1]]);
        let moved = hurwitz_move(&g, &w, 1, false).unwrap();
        let s010 = parse_word(&g, "(s0 s1 s0)").unwrap().letters.letters()[0];
        assert_eq!(moved.letters(), &[s010, s[0]]);
        assert_eq!(hurwitz_move(&g, &moved, 1, true).unwrap(), w);
        assert!(hurwitz_move(&g, &w, 0, false).is_err());
        assert!(hurwitz_move(&g, &w, 2, false).is_err());
    }

    #[test]
    fn small_orbits() {
        let g = CoxeterSystem::from_type("G2").unwrap();
        let id = hurwitz_orbits(&g.identity(), 10).unwrap();
        assert_eq!(id.len(), 1);
        assert!(id[0].representative.is_empty());
        let t = hurwitz_orbits(&g.reflection(3).unwrap(), 10).unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!(t[0].members, vec![ReflWord::new(vec![3])]);

        let stst = g.element_from_simple_word(&[0, 1, 0, 1]).unwrap();
        let orbits = hurwitz_orbits(&stst, 100).unwrap();
        assert_eq!(orbits.iter().map(HurwitzOrbit::size).collect::<Vec<_>>(), vec![3, 3]);
        assert_ne!(orbits[0].subgroup, orbits[1].subgroup);
        assert!(!is_parabolic_quasi_coxeter(&stst));
        assert!(!is_quasi_coxeter(&stst));
        assert_eq!(hurwitz_orbits(&stst, 5).unwrap_err(), Error::Truncated { cap: 5 });
    }

    #[test]
    fn dot_export() {
        let g = CoxeterSystem::from_type("A2").unwrap();
        let c = g.element_from_simple_word(&[0, 1]).unwrap();
        let dot = orbit_graph_dot(&c, 10).unwrap();
        assert!(dot.starts_with("digraph"));
        assert_eq!(dot.matches("σ1").count(), 3);
    }

    #[test]
    fn coxeter_elements_are_quasi_coxeter() {
        for ty in ["A3", "B3", "D4", "H3", "I2(7)"] {
            let g = CoxeterSystem::from_type(ty).unwrap();
            let word: Vec<usize> = (0..g.rank()).collect();
            let c = g.element_from_simple_word(&word).unwrap();
            assert!(is_quasi_coxeter(&c), "{ty}");
            assert!(is_parabolic_quasi_coxeter(&g.identity()));
        }
    }
}
