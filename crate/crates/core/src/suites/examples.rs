use std::collections::HashSet;
use std::sync::Arc;
use std::time::Duration;

use super::{Checks, Suite};
use crate::coxeter::words::parse_word;
use crate::coxeter::{CoxeterSystem, Element};
use crate::cycles::{all_decompositions, cycle_decomposition, decomposition_in_subgroup, is_indecomposable_brute};
use crate::hurwitz::{hurwitz_orbits, is_quasi_coxeter};
use crate::permmodel::{element_from_signed, to_signed};
use crate::subgroups::ReflectionSubgroup;
use crate::{Result, DEFAULT_ENUM_CAP, DEFAULT_RED_CAP};

/// `s1 (s2 s1 s2) (s2 s0 s2) s3` in `D4`.
pub const D4_WORD: &str = "s1 (s2 s1 s2) (s2 s0 s2) s3";

pub(crate) fn d4_example() -> Result<Element> {
    let g = CoxeterSystem::from_type("D4")?;
    Ok(parse_word(&g, D4_WORD)?.element)
}

fn reflection(g: &Arc<CoxeterSystem>, word: &str) -> Result<usize> {
    parse_word(g, word)?
        .element
        .as_reflection()
        .ok_or_else(|| crate::Error::InvariantViolation(format!("{word} is not a reflection")))
}

pub struct G2TwoOrbits;

impl Suite for G2TwoOrbits {
    fn name(&self) -> &'static str {
        "g2-two-orbits"
    }

    fn description(&self) -> &'static str {
        "stst in G2: two Hurwitz orbits generating <s,tst> and <t,sts>, equal factors, distinct closures"
    }

    fn time_limit(&self) -> Option<Duration> {
        Some(Duration::from_secs(1))
    }

    fn run(&self, c: &mut Checks) {
        let Some(g) = c.check_result("build G2", CoxeterSystem::from_type("G2")) else {
            return;
        };
        let w = g.element_from_simple_word(&[0, 1, 0, 1]).expect("valid word");
        let subgroups = (|| -> Result<_> {
            let (s, t) = (reflection(&g, "s")?, reflection(&g, "t")?);
            let (tst, sts) = (reflection(&g, "(t s t)")?, reflection(&g, "(s t s)")?);
            Ok((
                ReflectionSubgroup::closure(&g, &[s, tst])?,
                ReflectionSubgroup::closure(&g, &[t, sts])?,
            ))
        })();
        let Some((a, b)) = c.check_result("subgroups <s,tst>, <t,sts>", subgroups) else {
            return;
        };
        let Some(orbits) = c.check_result("orbits", hurwitz_orbits(&w, DEFAULT_RED_CAP)) else {
            return;
        };
        c.check("two orbits", orbits.len() == 2, format!("{} orbits", orbits.len()));
        let mut found: Vec<ReflectionSubgroup> = orbits.iter().map(|o| o.subgroup.clone()).collect();
        found.sort();
        let mut expected = vec![a, b];
        expected.sort();
        c.check(
            "orbit subgroups are <s,tst> and <t,sts>",
            found == expected,
            format!("{found:?}"),
        );
        c.check(
            "both of type A2",
            found.iter().all(|s| s.type_label() == "A2"),
            found.iter().map(|s| s.type_label()).collect::<Vec<_>>().join(", "),
        );
        let Some(all) = c.check_result("per-orbit decompositions", all_decompositions(&w, DEFAULT_RED_CAP)) else {
            return;
        };
        c.check(
            "each decomposition is the single factor stst",
            all.entries.iter().all(|(_, d)| d.factors == [w.clone()]),
            format!(
                "{:?}",
                all.entries.iter().map(|(_, d)| d.factors.len()).collect::<Vec<_>>()
            ),
        );
        c.check(
            "equal factors, distinct closures",
            all.same_factors_distinct_closures,
            "",
        );
    }
}

pub struct D4QuasiCoxeter;

impl Suite for D4QuasiCoxeter {
    fn name(&self) -> &'static str {
        "d4-quasi-coxeter"
    }

    fn description(&self) -> &'static str {
        "the D4 element s1 (s2 s1 s2) (s2 s0 s2) s3: quasi-Coxeter, one orbit, not a Coxeter element, indecomposable"
    }

    fn time_limit(&self) -> Option<Duration> {
        Some(Duration::from_secs(30))
    }

    fn run(&self, c: &mut Checks) {
        let Some(w) = c.check_result("parse element", d4_example()) else {
            return;
        };
        let g = w.group().clone();
        c.check(
            "reflection length 4",
            w.reflection_length() == 4,
            w.reflection_length().to_string(),
        );
        if let Some(orbits) = c.check_result("orbits", hurwitz_orbits(&w, DEFAULT_RED_CAP)) {
            let reds: usize = orbits.iter().map(|o| o.size()).sum();
            c.check(
                "one Hurwitz orbit",
                orbits.len() == 1,
                format!("{} orbits on {reds} reduced expressions", orbits.len()),
            );
        }
        c.check("quasi-Coxeter", is_quasi_coxeter(&w), "");
        if let Some(all) = c.check_result("enumerate D4", g.enumerate(DEFAULT_ENUM_CAP)) {
            let coxeter = g.element_from_simple_word(&[0, 1, 2, 3]).expect("valid word");
            let class: HashSet<Element> = all.iter().map(|x| &(x * &coxeter) * &x.inverse()).collect();
            c.check(
                "not conjugate to s0 s1 s2 s3",
                all.len() == 192 && !class.contains(&w),
                format!("|W| = {}, class size {}", all.len(), class.len()),
            );
        }
        if let Some(dec) = c.check_result("cycle decomposition", cycle_decomposition(&w)) {
            c.check(
                "single factor w",
                dec.factors == [w.clone()],
                format!("{} factors", dec.len()),
            );
        }
        if let Some(indec) = c.check_result("brute-force indecomposability", is_indecomposable_brute(&w)) {
            c.check("indecomposable", indec, "");
        }
    }
}

pub struct B4Embedding;

impl Suite for B4Embedding {
    fn name(&self) -> &'static str {
        "b4-embedding"
    }

    fn description(&self) -> &'static str {
        "the D4 element inside B4: non-transitive Hurwitz action, non-parabolic D4 copy, B2xB2 factors"
    }

    fn time_limit(&self) -> Option<Duration> {
        Some(Duration::from_secs(120))
    }

    fn run(&self, c: &mut Checks) {
        let setup = (|| -> Result<_> {
            let w = d4_example()?;
            let b4 = CoxeterSystem::from_type("B4")?;
            let wb = element_from_signed(&b4, &to_signed(&w)?)?;
            Ok((b4, wb))
        })();
        let Some((b4, w)) = c.check_result("transport to B4", setup) else {
            return;
        };
        let printed = to_signed(&w).map(|p| p.to_string()).unwrap_or_default();
        c.check("signed cycles", printed == "(1,-2,-1,2)(3,4,-3,-4)", printed);
        let long: Vec<usize> = (0..b4.n_reflections())
            .filter(|&t| {
                b4.root_coordinates(t)
                    .is_some_and(|v| v.iter().filter(|x| !x.is_zero()).count() == 2)
            })
            .collect();
        let Some(d4) = c.check_result("D4 copy", ReflectionSubgroup::closure(&b4, &long)) else {
            return;
        };
        let Some(orbits) = c.check_result("orbits", hurwitz_orbits(&w, DEFAULT_RED_CAP)) else {
            return;
        };
        let labels: Vec<String> = orbits.iter().map(|o| o.subgroup.type_label()).collect();
        c.check(
            "non-transitive",
            orbits.len() > 1,
            format!("{} orbits: {}", orbits.len(), labels.join(", ")),
        );
        let d4_orbit = orbits.iter().find(|o| o.subgroup == d4);
        c.check(
            "the D4 copy is an orbit subgroup",
            d4_orbit.is_some() && d4.type_label() == "D4",
            d4.type_label(),
        );
        c.check("the D4 copy is not parabolic", !d4.is_parabolic(), "");
        let mut matched = false;
        let mut seen = Vec::new();
        for o in orbits.iter().filter(|o| o.subgroup.type_label() == "B2xB2") {
            let Some(dec) = c.check_result("decomposition in B2xB2", decomposition_in_subgroup(&w, &o.subgroup)) else {
                continue;
            };
            let mut forms: Vec<String> = dec
                .factors
                .iter()
                .map(|f| to_signed(f).map(|p| p.to_string()).unwrap_or_default())
                .collect();
            forms.sort();
            let outside = dec
                .factors
                .iter()
                .all(|f| d4.contains_element(f).is_ok_and(|inside| !inside));
            if forms == ["(1,-2,-1,2)", "(3,4,-3,-4)"] && outside {
                matched = true;
            }
            seen.push(format!("{} outside D4: {outside}", forms.join(" ")));
        }
        c.check(
            "B2xB2 factors (1,-2,-1,2) and (3,4,-3,-4), neither in the D4 copy",
            matched,
            seen.join("; "),
        );
    }
}
