//! Registry of root-system constructions, one builder per Coxeter family.
//!
//! Every builder turns a rank (or dihedral parameter) into a [`RootModel`]:
//! either explicit simple roots in ℚ(√5)-coordinates, or the purely
//! combinatorial dihedral model for `I2(m)` when `2cos(π/m)` lies outside
//! ℚ(√5).

use super::descriptor::Family;
use crate::algebra::{Scalar, Vector};

pub enum RootModel {
    /// Simple roots, in diagram order, as vectors of a Euclidean space.
    Linear {
        simple_roots: Vec<Vector>,
    },
    Dihedral {
        m: u32,
    },
}

pub trait FamilyBuilder: Send + Sync {
    fn family(&self) -> Family;

    /// Accepts or rejects the rank / parameter with a reason.
    fn validate(&self, param: u32) -> Result<(), String>;

    /// Only called with parameters that passed [`FamilyBuilder::validate`].
    fn root_model(&self, param: u32) -> RootModel;
}

static REGISTRY: [&dyn FamilyBuilder; 8] = [&TypeA, &TypeB, &TypeD, &TypeE, &TypeF, &TypeG, &TypeH, &TypeI2];

pub fn registry() -> &'static [&'static dyn FamilyBuilder] {
    &REGISTRY
}

pub fn builder(family: Family) -> &'static dyn FamilyBuilder {
    *REGISTRY
        .iter()
        .find(|b| b.family() == family)
        .expect("every family is registered")
}

fn unit(dim: usize, i: usize, k: i64) -> Vector {
    let mut v = vec![Scalar::zero(); dim];
    v[i] = Scalar::from_int(k);
    v
}

fn ints(v: &[i64]) -> Vector {
    v.iter().map(|&x| Scalar::from_int(x)).collect()
}

fn add(a: &Vector, b: &Vector) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// `e_i - e_j`
fn diff(dim: usize, i: usize, j: usize) -> Vector {
    add(&unit(dim, i, 1), &unit(dim, j, -1))
}

struct TypeA;
impl FamilyBuilder for TypeA {
    fn family(&self) -> Family {
        Family::A
    }
    fn validate(&self, n: u32) -> Result<(), String> {
        (n >= 1).then_some(()).ok_or_else(|| "type A needs rank >= 1".into())
    }
    /// Sum-zero hyperplane of ℚ^{n+1}: α_i = e_i - e_{i+1}.
    fn root_model(&self, n: u32) -> RootModel {
        let n = n as usize;
        RootModel::Linear {
            simple_roots: (0..n).map(|i| diff(n + 1, i, i + 1)).collect(),
        }
    }
}

// B_n and D_n follow the signed-permutation labelling: generator 0 is the
// extra node (sign change of the first coordinate, resp. e1+e2), generator
// i >= 1 swaps coordinates i and i+1.

struct TypeB;
impl FamilyBuilder for TypeB {
    fn family(&self) -> Family {
        Family::B
    }
    fn validate(&self, n: u32) -> Result<(), String> {
        (n >= 2).then_some(()).ok_or_else(|| "type B needs rank >= 2".into())
    }
    fn root_model(&self, n: u32) -> RootModel {
        let n = n as usize;
        let mut simple = vec![unit(n, 0, 1)];
        simple.extend((1..n).map(|i| diff(n, i, i - 1)));
        RootModel::Linear { simple_roots: simple }
    }
}

struct TypeD;
impl FamilyBuilder for TypeD {
    fn family(&self) -> Family {
        Family::D
    }
    fn validate(&self, n: u32) -> Result<(), String> {
        (n >= 4).then_some(()).ok_or_else(|| "type D needs rank >= 4".into())
    }
    fn root_model(&self, n: u32) -> RootModel {
        let n = n as usize;
        let mut simple = vec![add(&unit(n, 0, 1), &unit(n, 1, 1))];
        simple.extend((1..n).map(|i| diff(n, i, i - 1)));
        RootModel::Linear { simple_roots: simple }
    }
}

struct TypeE;
impl FamilyBuilder for TypeE {
    fn family(&self) -> Family {
        Family::E
    }
    fn validate(&self, n: u32) -> Result<(), String> {
        (6..=8)
            .contains(&n)
            .then_some(())
            .ok_or_else(|| "type E needs rank 6, 7 or 8".into())
    }
    /// Bourbaki's simple roots of E8 in ℚ^8; E6 and E7 take the first 6 / 7.
    fn root_model(&self, n: u32) -> RootModel {
        let half = Scalar::ratio(1, 2);
        let mut first: Vector = ints(&[1, -1, -1, -1, -1, -1, -1, 1]);
        first.iter_mut().for_each(|x| *x = &*x * &half);
        let mut simple = vec![first, add(&unit(8, 0, 1), &unit(8, 1, 1))];
        simple.extend((1..7).map(|i| diff(8, i, i - 1)));
        simple.truncate(n as usize);
        RootModel::Linear { simple_roots: simple }
    }
}

struct TypeF;
impl FamilyBuilder for TypeF {
    fn family(&self) -> Family {
        Family::F
    }
    fn validate(&self, n: u32) -> Result<(), String> {
        (n == 4)
            .then_some(())
            .ok_or_else(|| "type F exists only in rank 4".into())
    }
    fn root_model(&self, _: u32) -> RootModel {
        let half = Scalar::ratio(1, 2);
        RootModel::Linear {
            simple_roots: vec![
                ints(&[0, 1, -1, 0]),
                ints(&[0, 0, 1, -1]),
                ints(&[0, 0, 0, 1]),
                ints(&[1, -1, -1, -1]).iter().map(|x| x * &half).collect(),
            ],
        }
    }
}

struct TypeG;
impl FamilyBuilder for TypeG {
    fn family(&self) -> Family {
        Family::G
    }
    fn validate(&self, n: u32) -> Result<(), String> {
        (n == 2)
            .then_some(())
            .ok_or_else(|| "type G exists only in rank 2".into())
    }
    fn root_model(&self, _: u32) -> RootModel {
        g2_roots()
    }
}

/// Short root first, inside the sum-zero plane of ℚ³.
fn g2_roots() -> RootModel {
    RootModel::Linear {
        simple_roots: vec![ints(&[1, -1, 0]), ints(&[-2, 1, 1])],
    }
}

fn golden_vector(entries: &[(i64, i64)]) -> Vector {
    // (a, b) encodes (a + b√5) / 2
    entries
        .iter()
        .map(|&(a, b)| (Scalar::from_int(a) + Scalar::from_int(b) * Scalar::sqrt5()) / Scalar::from_int(2))
        .collect()
}

// φ = (1+√5)/2, φ⁻¹ = (-1+√5)/2.
const NEG_PHI: (i64, i64) = (-1, -1);
const PHI_INV: (i64, i64) = (-1, 1);
const ZERO: (i64, i64) = (0, 0);
const TWO: (i64, i64) = (4, 0);
const NEG_ONE: (i64, i64) = (-2, 0);

struct TypeH;
impl FamilyBuilder for TypeH {
    fn family(&self) -> Family {
        Family::H
    }
    fn validate(&self, n: u32) -> Result<(), String> {
        (n == 3 || n == 4)
            .then_some(())
            .ok_or_else(|| "type H exists only in rank 3 and 4".into())
    }
    /// The 5-labelled edge joins generators 0 and 1.
    fn root_model(&self, n: u32) -> RootModel {
        let simple_roots = if n == 3 {
            vec![
                golden_vector(&[ZERO, TWO, ZERO]),
                golden_vector(&[PHI_INV, NEG_PHI, NEG_ONE]),
                golden_vector(&[ZERO, ZERO, TWO]),
            ]
        } else {
            vec![
                golden_vector(&[ZERO, ZERO, ZERO, TWO]),
                golden_vector(&[ZERO, PHI_INV, NEG_ONE, NEG_PHI]),
                golden_vector(&[ZERO, ZERO, TWO, ZERO]),
                golden_vector(&[PHI_INV, NEG_PHI, NEG_ONE, ZERO]),
            ]
        };
        RootModel::Linear { simple_roots }
    }
}

struct TypeI2;
impl FamilyBuilder for TypeI2 {
    fn family(&self) -> Family {
        Family::I2
    }
    fn validate(&self, m: u32) -> Result<(), String> {
        (m >= 3)
            .then_some(())
            .ok_or_else(|| "dihedral type I2(m) needs m >= 3".into())
    }
    fn root_model(&self, m: u32) -> RootModel {
        match m {
            3 => TypeA.root_model(2),
            4 => TypeB.root_model(2),
            5 => RootModel::Linear {
                simple_roots: vec![
                    golden_vector(&[ZERO, TWO, ZERO]),
                    golden_vector(&[PHI_INV, NEG_PHI, NEG_ONE]),
                ],
            },
            6 => g2_roots(),
            m => RootModel::Dihedral { m },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::dot;

    /// Simple roots must meet at the angle π - π/m prescribed by the diagram.
    #[test]
    fn simple_root_angles() {
        let cos2 = |m: u32| -> Scalar {
            // cos²(π/m)
            match m {
                2 => Scalar::zero(),
                3 => Scalar::ratio(1, 4),
                4 => Scalar::ratio(1, 2),
                5 => (Scalar::from_int(3) + Scalar::sqrt5()) / Scalar::from_int(8),
                6 => Scalar::ratio(3, 4),
                _ => unreachable!(),
            }
        };
        let cases: &[(Family, u32, &[(usize, usize, u32)])] = &[
            (Family::B, 3, &[(0, 1, 4), (1, 2, 3), (0, 2, 2)]),
            (
                Family::D,
                4,
                &[(0, 2, 3), (1, 2, 3), (2, 3, 3), (0, 1, 2), (0, 3, 2), (1, 3, 2)],
            ),
            (
                Family::F,
                4,
                &[(0, 1, 3), (1, 2, 4), (2, 3, 3), (0, 2, 2), (0, 3, 2), (1, 3, 2)],
            ),
            (Family::G, 2, &[(0, 1, 6)]),
            (Family::H, 3, &[(0, 1, 5), (1, 2, 3), (0, 2, 2)]),
            (
                Family::H,
                4,
                &[(0, 1, 5), (1, 2, 3), (2, 3, 3), (0, 2, 2), (0, 3, 2), (1, 3, 2)],
            ),
            (
                Family::E,
                8,
                &[
                    (0, 2, 3),
                    (1, 3, 3),
                    (2, 3, 3),
                    (3, 4, 3),
                    (0, 1, 2),
                    (1, 2, 2),
                    (6, 7, 3),
                ],
            ),
            (Family::I2, 5, &[(0, 1, 5)]),
        ];
        for &(family, param, edges) in cases {
            let RootModel::Linear { simple_roots: r } = builder(family).root_model(param) else {
                panic!("linear model expected");
            };
            for &(i, j, m) in edges {
                let ij = dot(&r[i], &r[j]);
                assert!(!ij.is_positive(), "{family:?}{param} {i}-{j}");
                let lhs = &ij * &ij;
                let rhs = &(&dot(&r[i], &r[i]) * &dot(&r[j], &r[j])) * &cos2(m);
                assert_eq!(lhs, rhs, "{family:?}{param} edge {i}-{j} should be {m}");
            }
        }
    }
}
