use std::collections::HashSet;
use std::sync::Arc;
use std::time::Duration;

use super::{Checks, Suite};
use crate::coxeter::{CoxeterSystem, Element};
use crate::cycles::{cycle_decomposition, decomposition_from_word, find_splitting_among};
use crate::hurwitz::{hurwitz_orbits, is_parabolic_quasi_coxeter, is_quasi_coxeter};
use crate::oracle::{all_reflection_subgroups, is_quasi_coxeter_in, CayleyLengths};
use crate::permmodel::{classical_cycles, to_permutation};
use crate::{Result, DEFAULT_ENUM_CAP, DEFAULT_RED_CAP};

const DIHEDRAL: [&str; 4] = ["I2(5)", "I2(6)", "I2(7)", "I2(8)"];

/// Collects counterexamples for one property and reports them as a check.
struct Tally {
    name: String,
    tested: usize,
    failures: Vec<String>,
}

impl Tally {
    fn new(name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            tested: 0,
            failures: Vec::new(),
        }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.tested += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn error(&mut self, e: crate::Error) {
        self.tested += 1;
        self.failures.push(e.to_string());
    }

    fn finish(self, c: &mut Checks) {
        let detail = match self.failures.first() {
            None => format!("{} cases", self.tested),
            Some(first) => format!("{} of {} cases fail, e.g. {first}", self.failures.len(), self.tested),
        };
        c.check(self.name, self.failures.is_empty() && self.tested > 0, detail);
    }
}

fn elements(ty: &str) -> Result<(Arc<CoxeterSystem>, Vec<Element>)> {
    let g = CoxeterSystem::from_type(ty)?;
    let all = g.enumerate(DEFAULT_ENUM_CAP)?;
    Ok((g, all))
}

fn sweep(c: &mut Checks, types: &[&str], name: &str, mut body: impl FnMut(&str, &[Element], &mut Tally) -> Result<()>) {
    for ty in types {
        let mut tally = Tally::new(format!("{name} [{ty}]"));
        match elements(ty).and_then(|(_, all)| body(ty, &all, &mut tally)) {
            Ok(()) => {}
            Err(e) => tally.error(e),
        }
        tally.finish(c);
    }
}

pub struct TypeACycles;

impl Suite for TypeACycles {
    fn name(&self) -> &'static str {
        "type-a-cycles"
    }

    fn description(&self) -> &'static str {
        "A4: cycle decomposition factors are the classical nontrivial cycles"
    }

    fn time_limit(&self) -> Option<Duration> {
        Some(Duration::from_secs(10))
    }

    fn run(&self, c: &mut Checks) {
        sweep(c, &["A4"], "factors = classical cycles", |_, all, tally| {
            for x in all {
                let dec = cycle_decomposition(x)?;
                let mut from_factors = dec
                    .factors
                    .iter()
                    .map(|f| {
                        let cycles = classical_cycles(&to_permutation(f)?);
                        Ok(if cycles.len() == 1 { cycles[0].clone() } else { vec![0] })
                    })
                    .collect::<Result<Vec<_>>>()?;
                from_factors.sort();
                let expected = classical_cycles(&to_permutation(x)?);
                tally.record(from_factors == expected, || {
                    format!("{x}: {from_factors:?} vs {expected:?}")
                });
            }
            Ok(())
        });
    }
}

pub struct Carter;

impl Suite for Carter {
    fn name(&self) -> &'static str {
        "carter"
    }

    fn description(&self) -> &'static str {
        "reflection length = rank - dim V^x equals the distance from 1 in the Cayley graph over T"
    }

    fn time_limit(&self) -> Option<Duration> {
        Some(Duration::from_secs(60))
    }

    fn run(&self, c: &mut Checks) {
        let mut types = vec!["A1", "A2", "A3", "A4", "B2", "B3", "B4", "D4", "G2", "H3"];
        types.extend(DIHEDRAL);
        sweep(c, &types, "Carter identity", |ty, all, tally| {
            let g = all[0].group();
            let t: Vec<usize> = (0..g.n_reflections()).collect();
            let lengths = CayleyLengths::new(g, &t, DEFAULT_ENUM_CAP)
                .ok_or(crate::Error::GroupTooLarge { cap: DEFAULT_ENUM_CAP })?;
            tally.record(lengths.size() == all.len(), || format!("{ty}: Cayley graph size"));
            for x in all {
                let rank_formula = g.rank() - x.fixed_space_dim();
                let bfs = lengths.length(x);
                tally.record(
                    x.reflection_length() == rank_formula && bfs == Some(rank_formula),
                    || format!("{x}: {rank_formula} vs {bfs:?}"),
                );
            }
            Ok(())
        });
    }
}

pub struct OrbitSubgroupCount;

impl Suite for OrbitSubgroupCount {
    fn name(&self) -> &'static str {
        "orbit-subgroup-count"
    }

    fn description(&self) -> &'static str {
        "number of Hurwitz orbits equals the number of reflection subgroups in which x is quasi-Coxeter"
    }

    fn time_limit(&self) -> Option<Duration> {
        Some(Duration::from_secs(300))
    }

    fn run(&self, c: &mut Checks) {
        sweep(
            c,
            &["A3", "B3", "G2"],
            "orbits = quasi-Coxeter subgroups",
            |_, all, tally| {
                let g = all[0].group();
                let subs: Vec<_> = all_reflection_subgroups(g)
                    .into_iter()
                    .map(|s| {
                        let lengths = CayleyLengths::new(g, s.reflections(), DEFAULT_ENUM_CAP).expect("finite");
                        (s, lengths)
                    })
                    .collect();
                for x in all {
                    let orbits = hurwitz_orbits(x, DEFAULT_RED_CAP)?.len();
                    let count = subs
                        .iter()
                        .filter(|(s, l)| l.contains(x) && is_quasi_coxeter_in(x, s, l))
                        .count();
                    tally.record(orbits == count, || format!("{x}: {orbits} orbits, {count} subgroups"));
                }
                Ok(())
            },
        );
    }
}

pub struct SubgroupLength;

impl Suite for SubgroupLength {
    fn name(&self) -> &'static str {
        "subgroup-length"
    }

    fn description(&self) -> &'static str {
        "inside every reflection subgroup, length over its own reflections equals reflection length"
    }

    fn time_limit(&self) -> Option<Duration> {
        None
    }

    fn run(&self, c: &mut Checks) {
        sweep(
            c,
            &["A3", "B3"],
            "length over Ref(W') = reflection length",
            |_, all, tally| {
                let g = all[0].group();
                for s in all_reflection_subgroups(g) {
                    let lengths = CayleyLengths::new(g, s.reflections(), DEFAULT_ENUM_CAP).expect("finite");
                    for x in all.iter().filter(|x| lengths.contains(x)) {
                        let l = lengths.length(x);
                        tally.record(l == Some(x.reflection_length()), || {
                            format!("{x} in {}: {l:?} vs {}", s.type_label(), x.reflection_length())
                        });
                    }
                }
                Ok(())
            },
        );
    }
}

pub struct Transitivity;

impl Suite for Transitivity {
    fn name(&self) -> &'static str {
        "transitivity"
    }

    fn description(&self) -> &'static str {
        "the Hurwitz action is transitive exactly on parabolic quasi-Coxeter elements"
    }

    fn time_limit(&self) -> Option<Duration> {
        None
    }

    fn run(&self, c: &mut Checks) {
        let mut types = vec!["A1", "A2", "A3", "A4", "B2", "B3", "G2", "H3"];
        types.extend(DIHEDRAL);
        sweep(c, &types, "one orbit iff parabolic quasi-Coxeter", |_, all, tally| {
            for x in all {
                let orbits = hurwitz_orbits(x, DEFAULT_RED_CAP)?.len();
                let pqc = is_parabolic_quasi_coxeter(x);
                tally.record((orbits == 1) == pqc, || format!("{x}: {orbits} orbits, pqc = {pqc}"));
            }
            Ok(())
        });
    }
}

pub struct Uniqueness;

impl Suite for Uniqueness {
    fn name(&self) -> &'static str {
        "uniqueness"
    }

    fn description(&self) -> &'static str {
        "decompositions agree across all reduced expressions; factors commute, add lengths, are indecomposable"
    }

    fn time_limit(&self) -> Option<Duration> {
        None
    }

    fn run(&self, c: &mut Checks) {
        let types = ["A1", "A2", "A3", "A4", "B2", "B3", "G2", "H3"];
        sweep(
            c,
            &types,
            "decomposition is expression-independent and valid",
            |_, all, tally| {
                let mut indecomposable: HashSet<Element> = HashSet::new();
                for x in all.iter().filter(|x| is_parabolic_quasi_coxeter(x)) {
                    let closure = x.parabolic_closure();
                    let words = x.reduced_expressions(DEFAULT_RED_CAP).complete()?;
                    let reference = decomposition_from_word(x, &words[0], &closure)?;
                    for w in &words[1..] {
                        let d = decomposition_from_word(x, w, &closure)?;
                        tally.record(d == reference, || format!("{x}: {w} disagrees with {}", words[0]));
                    }
                    let f = &reference.factors;
                    let commute = f
                        .iter()
                        .enumerate()
                        .all(|(i, a)| f[i + 1..].iter().all(|b| a * b == b * a));
                    tally.record(commute, || format!("{x}: factors do not commute"));
                    let total: usize = f.iter().map(Element::reflection_length).sum();
                    tally.record(total == x.reflection_length(), || format!("{x}: lengths not additive"));
                    for factor in f {
                        if indecomposable.contains(factor) {
                            continue;
                        }
                        let ok = !factor.is_identity() && find_splitting_among(factor, all)?.is_none();
                        tally.record(ok, || format!("{x}: factor {factor} splits"));
                        if ok {
                            indecomposable.insert(factor.clone());
                        }
                    }
                }
                Ok(())
            },
        );
    }
}

pub struct QuasiCoxeterIndecomposable;

impl Suite for QuasiCoxeterIndecomposable {
    fn name(&self) -> &'static str {
        "quasi-coxeter-indecomposable"
    }

    fn description(&self) -> &'static str {
        "quasi-Coxeter elements admit no commuting length-additive splitting"
    }

    fn time_limit(&self) -> Option<Duration> {
        None
    }

    fn run(&self, c: &mut Checks) {
        sweep(
            c,
            &["B2", "B3", "D4", "G2", "H3"],
            "no splitting of quasi-Coxeter elements",
            |_, all, tally| {
                for x in all.iter().filter(|x| is_quasi_coxeter(x)) {
                    let split = find_splitting_among(x, all)?;
                    tally.record(split.is_none(), || format!("{x} = u v with u = {}", split.unwrap()));
                }
                Ok(())
            },
        );
    }
}

pub struct StructuralCounts;

fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

/// Classical `(|Φ⁺|, |W|)` for an irreducible type.
pub(crate) fn classical_counts(ty: &str) -> Option<(usize, u64)> {
    let d: crate::Descriptor = ty.parse().ok()?;
    let c = d.components()[0];
    let n = c.param as u64;
    use crate::coxeter::Family::*;
    Some(match c.family {
        A => ((n * (n + 1) / 2) as usize, factorial(n + 1)),
        B => ((n * n) as usize, (1 << n) * factorial(n)),
        D => ((n * (n - 1)) as usize, (1 << (n - 1)) * factorial(n)),
        E => match n {
            6 => (36, 51_840),
            7 => (63, 2_903_040),
            _ => (120, 696_729_600),
        },
        F => (24, 1152),
        G => (6, 12),
        H => match n {
            3 => (15, 120),
            _ => (60, 14_400),
        },
        I2 => (n as usize, 2 * n),
    })
}

impl Suite for StructuralCounts {
    fn name(&self) -> &'static str {
        "structural-counts"
    }

    fn description(&self) -> &'static str {
        "positive-root counts and group orders match the classical table"
    }

    fn time_limit(&self) -> Option<Duration> {
        None
    }

    fn run(&self, c: &mut Checks) {
        let mut types: Vec<String> = Vec::new();
        types.extend((1..=8).map(|n| format!("A{n}")));
        types.extend((2..=8).map(|n| format!("B{n}")));
        types.extend((4..=8).map(|n| format!("D{n}")));
        types.extend(["E6", "E7", "E8", "F4", "G2", "H3", "H4"].map(String::from));
        types.extend((3..=12).map(|m| format!("I2({m})")));
        let mut roots = Tally::new("positive-root counts");
        let mut orders = Tally::new("group orders");
        for ty in &types {
            let (n_pos, order) = classical_counts(ty).expect("known type");
            let g = match CoxeterSystem::from_type(ty) {
                Ok(g) => g,
                Err(e) => {
                    roots.error(e);
                    continue;
                }
            };
            roots.record(g.n_reflections() == n_pos, || {
                format!("{ty}: {} vs {n_pos}", g.n_reflections())
            });
            if order <= DEFAULT_ENUM_CAP as u64 {
                let got = g.order(DEFAULT_ENUM_CAP);
                orders.record(got == Ok(order as usize), || format!("{ty}: {got:?} vs {order}"));
            }
        }
        roots.finish(c);
        orders.finish(c);
    }
}
