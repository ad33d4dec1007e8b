//! Generalized cycle decompositions.
//!
//! A parabolic quasi-Coxeter element `x` factors uniquely (up to order) as a
//! product of pairwise commuting, length-additive, indecomposable factors,
//! one for each irreducible component of its parabolic closure. A factor is
//! the product, in word order, of the letters of one reduced expression that
//! fall into a given component.

use serde::Serialize;

use crate::coxeter::{Element, ReflWord};
use crate::error::{Error, Result};
use crate::hurwitz::{hurwitz_orbits, is_parabolic_quasi_coxeter, HurwitzOrbit};
use crate::subgroups::ReflectionSubgroup;
use crate::{DEFAULT_ENUM_CAP, DEFAULT_RED_CAP};

#[derive(Clone, Debug)]
pub struct CycleDecomposition {
    pub element: Element,
    /// The group the decomposition is taken in.
    pub ambient: ReflectionSubgroup,
    /// Sorted by the least reflection of their closure.
    pub factors: Vec<Element>,
    /// Irreducible closure of each factor, in the same order.
    pub factor_closures: Vec<ReflectionSubgroup>,
}

impl CycleDecomposition {
    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }
}

impl PartialEq for CycleDecomposition {
    fn eq(&self, other: &Self) -> bool {
        self.element == other.element
            && self.ambient == other.ambient
            && self.factors == other.factors
            && self.factor_closures == other.factor_closures
    }
}

/// Splits `word` (a reduced expression of `x` over the reflections of `amb`)
/// along the irreducible blocks of `amb`. Blocks without letters contribute
/// no factor.
pub fn decomposition_from_word(x: &Element, word: &ReflWord, amb: &ReflectionSubgroup) -> Result<CycleDecomposition> {
    let group = x.group();
    let mut factors = Vec::new();
    let mut factor_closures = Vec::new();
    let mut used = 0;
    for (i, block) in amb.blocks().iter().enumerate() {
        let letters: Vec<usize> = word
            .letters()
            .iter()
            .copied()
            .filter(|t| block.reflections.binary_search(t).is_ok())
            .collect();
        if letters.is_empty() {
            continue;
        }
        used += letters.len();
        factors.push(group.element_from_refl_word(&ReflWord::new(letters))?);
        factor_closures.push(amb.block_subgroup(i));
    }
    if used != word.len() {
        return Err(Error::InvariantViolation(format!(
            "{word} has letters outside the subgroup {}",
            amb.type_label()
        )));
    }
    Ok(CycleDecomposition {
        element: x.clone(),
        ambient: amb.clone(),
        factors,
        factor_closures,
    })
}

/// The decomposition of a parabolic quasi-Coxeter element inside `W`.
pub fn cycle_decomposition(x: &Element) -> Result<CycleDecomposition> {
    if !is_parabolic_quasi_coxeter(x) {
        return Err(Error::NotParabolicQuasiCoxeter);
    }
    let closure = x.parabolic_closure();
    decomposition_from_word(x, &x.first_reduced_expression(), &closure)
}

/// The decomposition of `x` inside a reflection subgroup in which it is
/// quasi-Coxeter, i.e. some reduced expression over `Ref(amb)` generates
/// `amb`.
pub fn decomposition_in_subgroup(x: &Element, amb: &ReflectionSubgroup) -> Result<CycleDecomposition> {
    if !std::sync::Arc::ptr_eq(x.group(), amb.ambient()) {
        return Err(Error::MixedGroups);
    }
    if x.reflection_length() != amb.rank() {
        return Err(Error::NotQuasiCoxeterInSubgroup);
    }
    let mut allowed = vec![false; x.group().n_reflections()];
    for &t in amb.reflections() {
        allowed[t] = true;
    }
    for (count, word) in x.reduced_expressions_within_iter(&allowed).enumerate() {
        if count == DEFAULT_RED_CAP {
            return Err(Error::Truncated { cap: DEFAULT_RED_CAP });
        }
        if ReflectionSubgroup::closure(x.group(), word.letters())? == *amb {
            return decomposition_from_word(x, &word, amb);
        }
    }
    Err(Error::NotQuasiCoxeterInSubgroup)
}

#[derive(Clone, Debug)]
pub struct AllDecompositions {
    pub entries: Vec<(HurwitzOrbit, CycleDecomposition)>,
    /// Some two orbits give the same factors with different closures.
    pub same_factors_distinct_closures: bool,
}

/// One decomposition per Hurwitz orbit of `x`, taken inside the subgroup the
/// orbit generates.
pub fn all_decompositions(x: &Element, cap: usize) -> Result<AllDecompositions> {
    let entries = hurwitz_orbits(x, cap)?
        .into_iter()
        .map(|orbit| {
            let dec = decomposition_from_word(x, &orbit.representative, &orbit.subgroup)?;
            Ok((orbit, dec))
        })
        .collect::<Result<Vec<_>>>()?;
    let sorted_factors = |d: &CycleDecomposition| {
        let mut f = d.factors.clone();
        f.sort();
        f
    };
    let sorted_closures = |d: &CycleDecomposition| {
        let mut c = d.factor_closures.clone();
        c.sort();
        c
    };
    let mut flag = false;
    for (i, (_, a)) in entries.iter().enumerate() {
        for (_, b) in &entries[i + 1..] {
            if sorted_factors(a) == sorted_factors(b) && sorted_closures(a) != sorted_closures(b) {
                flag = true;
            }
        }
    }
    Ok(AllDecompositions {
        entries,
        same_factors_distinct_closures: flag,
    })
}

/// Searches for `u` with `0 < ℓ_T(u) < ℓ_T(x)`, `ℓ_T(u) + ℓ_T(u⁻¹x) = ℓ_T(x)`
/// and `u` commuting with `u⁻¹x`, with `u` ranging over `within` (or all of
/// `W`). Returns the first such `u`.
pub fn find_splitting(x: &Element, within: Option<&ReflectionSubgroup>) -> Result<Option<Element>> {
    let group = x.group();
    let lx = x.reflection_length();
    if lx < 2 {
        return Ok(None);
    }
    let candidates = match within {
        Some(sub) => sub.elements()?,
        None => match group.enumerate(DEFAULT_ENUM_CAP) {
            Ok(all) => all,
            // Every `u ≤_T x` is a prefix product of a reduced expression.
            Err(_) => {
                let mut prefixes = Vec::new();
                for word in x.reduced_expressions(DEFAULT_RED_CAP).complete()? {
                    let mut p = group.identity();
                    for &t in word.letters() {
                        p = &p * &group.reflection(t)?;
                        prefixes.push(p.clone());
                    }
                }
                prefixes.sort();
                prefixes.dedup();
                prefixes
            }
        },
    };
    find_splitting_among(x, &candidates)
}

/// [`find_splitting`] with `u` ranging over `candidates`.
pub fn find_splitting_among(x: &Element, candidates: &[Element]) -> Result<Option<Element>> {
    let lx = x.reflection_length();
    for u in candidates {
        let lu = u.reflection_length();
        if lu == 0 || lu >= lx {
            continue;
        }
        let v = u.inverse().checked_mul(x)?;
        if lu + v.reflection_length() == lx && u * &v == &v * u {
            return Ok(Some(u.clone()));
        }
    }
    Ok(None)
}

/// Indecomposability by exhaustive search for a commuting length-additive
/// splitting; the identity counts as decomposable.
pub fn is_indecomposable_brute(x: &Element) -> Result<bool> {
    if x.is_identity() {
        return Ok(false);
    }
    Ok(find_splitting(x, None)?.is_none())
}

/// Indecomposability, answered from the cycle decomposition when `x` is
/// parabolic quasi-Coxeter and by exhaustive search otherwise.
pub fn is_indecomposable(x: &Element) -> Result<bool> {
    if x.is_identity() {
        return Ok(false);
    }
    if is_parabolic_quasi_coxeter(x) {
        return Ok(cycle_decomposition(x)?.len() == 1);
    }
    is_indecomposable_brute(x)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionReport {
    pub product: bool,
    pub in_ambient: bool,
    pub commute: bool,
    pub additive: bool,
    pub indecomposable: bool,
}

impl DecompositionReport {
    pub fn all_pass(&self) -> bool {
        self.product && self.in_ambient && self.commute && self.additive && self.indecomposable
    }
}

/// Checks each defining condition of a generalized cycle decomposition
/// independently of how `factors` were found.
pub fn verify_decomposition(x: &Element, factors: &[Element], amb: &ReflectionSubgroup) -> Result<DecompositionReport> {
    let group = x.group();
    let mut product = group.identity();
    for f in factors {
        product = product.checked_mul(f)?;
    }
    let in_ambient = factors
        .iter()
        .map(|f| amb.contains_element(f))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .all(|b| b);
    let commute = factors
        .iter()
        .enumerate()
        .all(|(i, a)| factors[i + 1..].iter().all(|b| a * b == b * a));
    let total: usize = factors.iter().map(Element::reflection_length).sum();
    let mut indecomposable = true;
    for f in factors {
        let within = if in_ambient { Some(amb) } else { None };
        if f.is_identity() || find_splitting(f, within)?.is_some() {
            indecomposable = false;
            break;
        }
    }
    Ok(DecompositionReport {
        product: product == *x,
        in_ambient,
        commute,
        additive: total == x.reflection_length(),
        indecomposable,
    })
}
