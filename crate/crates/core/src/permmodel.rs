//! Permutation models: `A_n` acting on `{1, …, n+1}` and `B_n`, `D_n` acting
//! by signed permutations of `{±1, …, ±n}`.
//!
//! Conversions read the Euclidean matrix of an element, whose column `j` is
//! the image of the coordinate vector `e_j`.

use std::fmt;
use std::sync::Arc;

use crate::algebra::{Scalar, Vector};
use crate::coxeter::{CoxeterSystem, Element, Family};
use crate::error::{Error, Result};

/// `images[i - 1] = p(i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &i in &images {
            if i == 0 || i > n || std::mem::replace(&mut seen[i], true) {
                return Err(Error::CycleSyntax {
                    input: format!("{images:?}"),
                    reason: "not a bijection of 1..=n".into(),
                });
            }
        }
        Ok(Self { images })
    }

    pub fn identity(degree: usize) -> Self {
        Self {
            images: (1..=degree).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Self {
            images: other.images.iter().map(|&i| self.apply(i)).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &p)| p == i + 1)
    }

    fn act(&self, v: &[Scalar]) -> Vector {
        let mut out = vec![Scalar::zero(); v.len()];
        for (j, x) in v.iter().enumerate() {
            out[self.images[j] - 1] = x.clone();
        }
        out
    }
}

/// `images[i - 1] = p(i)`, with `p(-i) = -p(i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    images: Vec<i64>,
}

impl SignedPermutation {
    pub fn new(images: Vec<i64>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &i in &images {
            let a = i.unsigned_abs() as usize;
            if a == 0 || a > n || std::mem::replace(&mut seen[a], true) {
                return Err(Error::CycleSyntax {
                    input: format!("{images:?}"),
                    reason: "absolute values are not a bijection of 1..=n".into(),
                });
            }
        }
        Ok(Self { images })
    }

    pub fn identity(degree: usize) -> Self {
        Self {
            images: (1..=degree as i64).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[i64] {
        &self.images
    }

    pub fn apply(&self, i: i64) -> i64 {
        let image = self.images[i.unsigned_abs() as usize - 1];
        if i < 0 {
            -image
        } else {
            image
        }
    }

    pub fn compose(&self, other: &SignedPermutation) -> SignedPermutation {
        Self {
            images: other.images.iter().map(|&i| self.apply(i)).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &p)| p == i as i64 + 1)
    }

    pub fn sign_changes(&self) -> usize {
        self.images.iter().filter(|&&p| p < 0).count()
    }

    fn act(&self, v: &[Scalar]) -> Vector {
        let mut out = vec![Scalar::zero(); v.len()];
        for (j, x) in v.iter().enumerate() {
            let p = self.images[j];
            out[p.unsigned_abs() as usize - 1] = if p < 0 { -x } else { x.clone() };
        }
        out
    }
}

fn single_family(group: &CoxeterSystem, allowed: &[Family], expected: &str) -> Result<usize> {
    match group.descriptor().components() {
        [c] if allowed.contains(&c.family) => Ok(c.rank()),
        _ => Err(Error::WrongType {
            expected: expected.into(),
            actual: group.descriptor().to_string(),
        }),
    }
}

fn entry(m: &crate::algebra::Matrix, i: usize, j: usize) -> Option<i64> {
    let x = &m[(i, j)];
    if x.is_zero() {
        Some(0)
    } else if x.is_one() {
        Some(1)
    } else if (-x).is_one() {
        Some(-1)
    } else {
        None
    }
}

fn signed_columns(x: &Element) -> Result<Vec<i64>> {
    let m = x.euclidean_matrix()?;
    let bad = || Error::InvariantViolation(format!("{x} does not act by a signed permutation matrix"));
    (0..m.n_cols())
        .map(|j| {
            let mut found = None;
            for i in 0..m.n_rows() {
                match entry(&m, i, j).ok_or_else(bad)? {
                    0 => {}
                    s if found.is_none() => found = Some(s * (i as i64 + 1)),
                    _ => return Err(bad()),
                }
            }
            found.ok_or_else(bad)
        })
        .collect()
}

/// `A_n` element as a permutation of `{1, …, n+1}`; `s_i ↦ (i+1, i+2)`.
pub fn to_permutation(x: &Element) -> Result<Permutation> {
    single_family(x.group(), &[Family::A], "A_n")?;
    let cols = signed_columns(x)?;
    if cols.iter().any(|&c| c < 0) {
        return Err(Error::InvariantViolation(format!("{x} acts with signs")));
    }
    Permutation::new(cols.into_iter().map(|c| c as usize).collect())
}

/// `B_n` or `D_n` element as a signed permutation of `{±1, …, ±n}`.
pub fn to_signed(x: &Element) -> Result<SignedPermutation> {
    let family = single_family(x.group(), &[Family::B, Family::D], "B_n or D_n")?;
    let p = SignedPermutation::new(signed_columns(x)?)?;
    debug_assert_eq!(p.degree(), family);
    if x.group().descriptor().components()[0].family == Family::D && p.sign_changes() % 2 == 1 {
        return Err(Error::InvariantViolation(format!(
            "{x} has an odd number of sign changes"
        )));
    }
    Ok(p)
}

/// Rebuilds an element from its action on coordinates by stripping right
/// descents, detected as simple roots mapped to negative roots.
fn element_from_action<P: Clone>(
    group: &Arc<CoxeterSystem>,
    p: P,
    act: impl Fn(&P, &[Scalar]) -> Vector,
    compose: impl Fn(&P, &Element) -> Result<P>,
    is_identity: impl Fn(&P) -> bool,
) -> Result<Element> {
    let simple = group.simple_reflection_ids();
    let roots: Vec<Vector> = simple
        .iter()
        .map(|&t| group.root_coordinates(t).expect("linear model"))
        .collect();
    let mut p = p;
    let mut emitted = Vec::new();
    while !is_identity(&p) {
        let mut descent = None;
        for (s, root) in roots.iter().enumerate() {
            let image = group
                .lookup_root(&act(&p, root))
                .ok_or_else(|| Error::InvariantViolation("permutation does not preserve the root system".into()))?;
            if image.is_negative() {
                descent = Some(s);
                break;
            }
        }
        let s = descent.ok_or_else(|| Error::CycleSyntax {
            input: String::new(),
            reason: format!("not an element of {}", group.descriptor()),
        })?;
        p = compose(&p, &group.simple(s)?)?;
        emitted.push(s);
    }
    emitted.reverse();
    group.element_from_simple_word(&emitted)
}

pub fn element_from_permutation(group: &Arc<CoxeterSystem>, p: &Permutation) -> Result<Element> {
    let n = single_family(group, &[Family::A], "A_n")?;
    if p.degree() != n + 1 {
        return Err(Error::DimensionMismatch(format!(
            "permutation of degree {} in {}",
            p.degree(),
            group.descriptor()
        )));
    }
    element_from_action(
        group,
        p.clone(),
        Permutation::act,
        |p, s| Ok(p.compose(&to_permutation(s)?)),
        Permutation::is_identity,
    )
}

pub fn element_from_signed(group: &Arc<CoxeterSystem>, p: &SignedPermutation) -> Result<Element> {
    let n = single_family(group, &[Family::B, Family::D], "B_n or D_n")?;
    if p.degree() != n {
        return Err(Error::DimensionMismatch(format!(
            "signed permutation of degree {} in {}",
            p.degree(),
            group.descriptor()
        )));
    }
    if group.descriptor().components()[0].family == Family::D && p.sign_changes() % 2 == 1 {
        return Err(Error::CycleSyntax {
            input: p.to_string(),
            reason: "odd number of sign changes in type D".into(),
        });
    }
    element_from_action(
        group,
        p.clone(),
        SignedPermutation::act,
        |p, s| Ok(p.compose(&to_signed(s)?)),
        SignedPermutation::is_identity,
    )
}

/// Nontrivial cycles, each starting at its least point, sorted by least point.
pub fn classical_cycles(p: &Permutation) -> Vec<Vec<usize>> {
    let mut seen = vec![false; p.degree() + 1];
    let mut out = Vec::new();
    for start in 1..=p.degree() {
        if seen[start] {
            continue;
        }
        let mut cycle = vec![start];
        seen[start] = true;
        let mut i = p.apply(start);
        while i != start {
            seen[i] = true;
            cycle.push(i);
            i = p.apply(i);
        }
        if cycle.len() > 1 {
            out.push(cycle);
        }
    }
    out
}

/// `(n+1) - #cycles`, fixed points included.
pub fn perm_reflection_length(p: &Permutation) -> usize {
    let nontrivial = classical_cycles(p);
    let moved: usize = nontrivial.iter().map(Vec::len).sum();
    let cycles = nontrivial.len() + (p.degree() - moved);
    p.degree() - cycles
}

/// Signed cycles: a cycle containing both `i` and `-i` is listed once; other
/// cycles come in mirror pairs, of which only the copy whose least-|·| entry
/// is positive is listed. Each cycle starts at its least-|·| entry, and
/// cycles are sorted by it.
pub fn signed_cycles(p: &SignedPermutation) -> Vec<Vec<i64>> {
    let n = p.degree();
    let mut seen = vec![false; n + 1];
    let mut out = Vec::new();
    for start in 1..=n as i64 {
        if seen[start as usize] {
            continue;
        }
        let mut cycle = vec![start];
        seen[start as usize] = true;
        let mut i = p.apply(start);
        while i != start {
            seen[i.unsigned_abs() as usize] = true;
            cycle.push(i);
            i = p.apply(i);
        }
        if cycle.len() > 1 {
            out.push(cycle);
        }
    }
    out
}

fn write_cycles<T: fmt::Display>(f: &mut fmt::Formatter<'_>, cycles: &[Vec<T>]) -> fmt::Result {
    if cycles.is_empty() {
        return f.write_str("()");
    }
    for c in cycles {
        let parts: Vec<String> = c.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))?;
    }
    Ok(())
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_cycles(f, &classical_cycles(self))
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_cycles(f, &signed_cycles(self))
    }
}

fn parse_cycle_list(input: &str) -> Result<Vec<Vec<i64>>> {
    let err = |reason: &str| Error::CycleSyntax {
        input: input.to_string(),
        reason: reason.into(),
    };
    let compact: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    let mut rest = compact.as_str();
    let mut cycles = Vec::new();
    while !rest.is_empty() {
        let body = rest.strip_prefix('(').ok_or_else(|| err("expected `(`"))?;
        let close = body.find(')').ok_or_else(|| err("unclosed `(`"))?;
        let inner = &body[..close];
        rest = &body[close + 1..];
        if inner.is_empty() {
            continue;
        }
        let cycle = inner
            .split(',')
            .map(|t| t.parse::<i64>().map_err(|_| err(&format!("bad entry `{t}`"))))
            .collect::<Result<Vec<_>>>()?;
        cycles.push(cycle);
    }
    Ok(cycles)
}

/// Parses `(1,2,3)(4,5)` into a permutation of degree `degree`.
pub fn parse_cycles(input: &str, degree: usize) -> Result<Permutation> {
    let mut images: Vec<Option<usize>> = vec![None; degree];
    let err = |reason: String| Error::CycleSyntax {
        input: input.to_string(),
        reason,
    };
    for cycle in parse_cycle_list(input)? {
        for (k, &a) in cycle.iter().enumerate() {
            let b = cycle[(k + 1) % cycle.len()];
            for v in [a, b] {
                if v < 1 || v as usize > degree {
                    return Err(err(format!("entry {v} outside 1..={degree}")));
                }
            }
            if images[a as usize - 1].replace(b as usize).is_some() {
                return Err(err(format!("{a} appears twice")));
            }
        }
    }
    let images = images.iter().enumerate().map(|(i, p)| p.unwrap_or(i + 1)).collect();
    Permutation::new(images).map_err(|_| err("cycles are not disjoint".into()))
}

/// Parses signed cycle notation such as `(1,-2,-1,2)(3,4,-3,-4)`; a cycle
/// not containing the negative of its first entry also adds its mirror.
pub fn parse_signed_cycles(input: &str, degree: usize) -> Result<SignedPermutation> {
    let mut images: Vec<Option<i64>> = vec![None; degree];
    let err = |reason: String| Error::CycleSyntax {
        input: input.to_string(),
        reason,
    };
    let mut assign = |a: i64, b: i64| -> Result<()> {
        let (a, b) = if a < 0 { (-a, -b) } else { (a, b) };
        let slot = &mut images[a as usize - 1];
        match slot {
            Some(old) if *old != b => Err(err(format!("{a} is mapped twice"))),
            _ => {
                *slot = Some(b);
                Ok(())
            }
        }
    };
    for cycle in parse_cycle_list(input)? {
        if cycle.iter().any(|&v| v == 0 || v.unsigned_abs() as usize > degree) {
            return Err(err(format!("entries must lie in ±1..=±{degree}")));
        }
        let balanced = cycle.contains(&-cycle[0]);
        for (k, &a) in cycle.iter().enumerate() {
            let b = cycle[(k + 1) % cycle.len()];
            assign(a, b)?;
            if !balanced {
                assign(-a, -b)?;
            }
        }
    }
    let images = images
        .iter()
        .enumerate()
        .map(|(i, p)| p.unwrap_or(i as i64 + 1))
        .collect();
    SignedPermutation::new(images).map_err(|_| err("cycles are not disjoint".into()))
}
