//! Per-component geometric models of an irreducible Coxeter group.
//!
//! Group elements are signed permutations of positive roots everywhere in the
//! crate. Whatever needs the reflection representation (fixed spaces, moved
//! spaces, parabolicity) goes through a [`Geometry`] strategy: exact linear
//! algebra over ℚ(√5) for root systems with coordinates, or closed forms for
//! the dihedral groups that have no such model.

use std::collections::HashMap;
use std::fmt;

use super::element::SignedRoot;
use crate::algebra::{dot, Matrix, Scalar, SpanTester, Vector};

/// Fixed-space data of one component's restriction of an element.
#[derive(Clone, Debug)]
pub struct LocalMov {
    pub fixed_dim: usize,
    /// `below[t]`: whether the root of local reflection `t` lies in `Mov`.
    pub below: Vec<bool>,
    pub fixed_basis: Option<Vec<Vector>>,
    pub mov_basis: Option<Vec<Vector>>,
}

pub trait Geometry: Send + Sync + fmt::Debug {
    fn model_name(&self) -> &'static str;

    fn rank(&self) -> usize;

    fn n_roots(&self) -> usize;

    /// Signed permutation of the positive roots induced by each reflection,
    /// in root order.
    fn reflection_perms(&self) -> Vec<Vec<SignedRoot>>;

    fn analyze(&self, perm: &[SignedRoot]) -> LocalMov;

    /// Matrix in the basis of simple roots.
    fn matrix(&self, perm: &[SignedRoot]) -> Option<Matrix>;

    /// Matrix in the Euclidean coordinates the roots were given in.
    fn euclidean_matrix(&self, perm: &[SignedRoot]) -> Option<Matrix>;

    /// Whether the reflection subgroup with canonical generators `gens` and
    /// reflection set `reflections` is the pointwise stabilizer of the
    /// intersection of its reflecting hyperplanes.
    fn is_parabolic(&self, gens: &[usize], reflections: &[usize]) -> bool;

    /// Whether `perm` fixes the intersection of the hyperplanes of `gens`
    /// pointwise; `None` when the model cannot answer.
    fn fixes_intersection(&self, gens: &[usize], perm: &[SignedRoot]) -> Option<bool>;

    fn coordinates(&self, root: usize) -> Option<&[Scalar]>;

    fn coefficients(&self, root: usize) -> Option<&[Scalar]>;

    fn euclidean_dim(&self) -> Option<usize>;

    /// Signed positive root with the given Euclidean coordinates.
    fn lookup(&self, _coords: &[Scalar]) -> Option<SignedRoot> {
        None
    }
}

/// Root system with explicit coordinates.
pub struct LinearGeometry {
    rank: usize,
    dim: usize,
    /// Euclidean coordinates of the positive roots.
    coords: Vec<Vector>,
    /// Coordinates of the positive roots in the basis of simple roots.
    coeffs: Vec<Vector>,
    /// Gram matrix of the simple roots.
    gram: Matrix,
    /// Basis of the orthogonal complement of the root span, fixed by W.
    complement: Vec<Vector>,
    index: HashMap<Vector, SignedRoot>,
}

impl fmt::Debug for LinearGeometry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LinearGeometry")
            .field("rank", &self.rank)
            .field("dim", &self.dim)
            .field("n_roots", &self.coords.len())
            .finish()
    }
}

fn reflect(v: &[Scalar], root: &[Scalar], root_norm: &Scalar) -> Vector {
    let k = (Scalar::from_int(2) * dot(v, root)) / root_norm;
    v.iter().zip(root).map(|(x, a)| x - &(&k * a)).collect()
}

impl LinearGeometry {
    /// Closes the simple roots under the simple reflections and sorts the
    /// positive roots: simple roots first in diagram order, then by height,
    /// ties broken by descending lexicographic order of simple-root
    /// coefficients.
    pub fn new(simple: Vec<Vector>) -> Self {
        let rank = simple.len();
        let dim = simple[0].len();
        let gram = Matrix::from_rows(
            simple
                .iter()
                .map(|a| simple.iter().map(|b| dot(a, b)).collect())
                .collect(),
        )
        .expect("square gram matrix");
        let gram_inv = gram.inverse().expect("simple roots are independent");
        let norms: Vec<Scalar> = (0..rank).map(|i| gram[(i, i)].clone()).collect();

        let mut seen: HashMap<Vector, ()> = simple.iter().map(|r| (r.clone(), ())).collect();
        let mut all = simple.clone();
        let mut cursor = 0;
        while cursor < all.len() {
            let v = all[cursor].clone();
            cursor += 1;
            for (a, n) in simple.iter().zip(&norms) {
                let w = reflect(&v, a, n);
                if seen.insert(w.clone(), ()).is_none() {
                    all.push(w);
                }
            }
        }

        let coefficients = |v: &Vector| -> Vector {
            let pairing: Vector = simple.iter().map(|a| dot(a, v)).collect();
            gram_inv.apply(&pairing).expect("rank-sized pairing")
        };
        let mut positive: Vec<(Vector, Vector)> = all
            .into_iter()
            .map(|v| {
                let c = coefficients(&v);
                (v, c)
            })
            .filter(|(_, c)| c.iter().find(|x| !x.is_zero()).is_some_and(Scalar::is_positive))
            .collect();
        let height = |c: &Vector| c.iter().fold(Scalar::zero(), |acc, x| acc + x);
        let simple_pos = |v: &Vector| simple.iter().position(|s| s == v).unwrap_or(usize::MAX);
        positive.sort_by(|(va, ca), (vb, cb)| {
            simple_pos(va)
                .cmp(&simple_pos(vb))
                .then_with(|| height(ca).cmp(&height(cb)))
                .then_with(|| cb.cmp(ca))
        });

        let mut index = HashMap::new();
        for (i, (v, _)) in positive.iter().enumerate() {
            index.insert(v.clone(), SignedRoot::new(i, false));
            index.insert(v.iter().map(|x| -x).collect(), SignedRoot::new(i, true));
        }
        let complement = Matrix::from_rows(simple.clone())
            .expect("simple roots of equal dimension")
            .kernel_basis();
        let (coords, coeffs) = positive.into_iter().unzip();
        Self {
            rank,
            dim,
            coords,
            coeffs,
            gram,
            complement,
            index,
        }
    }

    fn signed_coeffs(&self, r: SignedRoot) -> Vector {
        let c = &self.coeffs[r.index()];
        if r.is_negative() {
            c.iter().map(|x| -x).collect()
        } else {
            c.clone()
        }
    }

    fn simple_basis_matrix(&self, perm: &[SignedRoot]) -> Matrix {
        let cols: Vec<Vector> = (0..self.rank).map(|i| self.signed_coeffs(perm[i])).collect();
        Matrix::from_columns(self.rank, &cols).expect("rank-sized columns")
    }

    /// Basis of `E`, the intersection of the reflecting hyperplanes of
    /// `gens`, in simple-root coordinates.
    fn hyperplane_intersection(&self, gens: &[usize]) -> Vec<Vector> {
        if gens.is_empty() {
            return Matrix::zeros(self.rank, self.rank).kernel_basis();
        }
        // (v, α_g) = vᵀ G c_g
        let rows: Vec<Vector> = gens
            .iter()
            .map(|&g| self.gram.apply(&self.coeffs[g]).expect("rank-sized"))
            .collect();
        Matrix::from_rows(rows).expect("equal rows").kernel_basis()
    }
}

impl Geometry for LinearGeometry {
    fn model_name(&self) -> &'static str {
        "linear"
    }

    fn rank(&self) -> usize {
        self.rank
    }

    fn n_roots(&self) -> usize {
        self.coords.len()
    }

    fn reflection_perms(&self) -> Vec<Vec<SignedRoot>> {
        self.coords
            .iter()
            .map(|alpha| {
                let norm = dot(alpha, alpha);
                self.coords
                    .iter()
                    .map(|beta| {
                        let image = reflect(beta, alpha, &norm);
                        self.lookup(&image).expect("root system closed under reflections")
                    })
                    .collect()
            })
            .collect()
    }

    fn analyze(&self, perm: &[SignedRoot]) -> LocalMov {
        let m = self.simple_basis_matrix(perm);
        let a = &m - &Matrix::identity(self.rank);
        let fixed_basis = a.kernel_basis();
        let mov_basis = a.column_space_basis();
        let below = match mov_basis.len() {
            0 => vec![false; self.coeffs.len()],
            n if n == self.rank => vec![true; self.coeffs.len()],
            _ => {
                let span = SpanTester::new(self.rank, &mov_basis);
                self.coeffs
                    .iter()
                    .map(|c| span.contains(c).expect("rank-sized"))
                    .collect()
            }
        };
        LocalMov {
            fixed_dim: fixed_basis.len(),
            below,
            fixed_basis: Some(fixed_basis),
            mov_basis: Some(mov_basis),
        }
    }

    fn matrix(&self, perm: &[SignedRoot]) -> Option<Matrix> {
        Some(self.simple_basis_matrix(perm))
    }

    fn euclidean_matrix(&self, perm: &[SignedRoot]) -> Option<Matrix> {
        let signed_coords = |r: SignedRoot| -> Vector {
            let c = &self.coords[r.index()];
            if r.is_negative() {
                c.iter().map(|x| -x).collect()
            } else {
                c.clone()
            }
        };
        let mut source: Vec<Vector> = self.coords[..self.rank].to_vec();
        let mut image: Vec<Vector> = (0..self.rank).map(|i| signed_coords(perm[i])).collect();
        source.extend(self.complement.iter().cloned());
        image.extend(self.complement.iter().cloned());
        let src = Matrix::from_columns(self.dim, &source).ok()?;
        let img = Matrix::from_columns(self.dim, &image).ok()?;
        Some(&img * &src.inverse()?)
    }

    fn is_parabolic(&self, gens: &[usize], reflections: &[usize]) -> bool {
        let e = self.hyperplane_intersection(gens);
        let stabilized: Vec<usize> = (0..self.coeffs.len())
            .filter(|&t| {
                let normal = self.gram.apply(&self.coeffs[t]).expect("rank-sized");
                e.iter().all(|v| dot(v, &normal).is_zero())
            })
            .collect();
        let mut refl = reflections.to_vec();
        refl.sort_unstable();
        stabilized == refl
    }

    fn fixes_intersection(&self, gens: &[usize], perm: &[SignedRoot]) -> Option<bool> {
        let m = self.simple_basis_matrix(perm);
        let e = self.hyperplane_intersection(gens);
        Some(e.iter().all(|v| m.apply(v).expect("rank-sized") == *v))
    }

    fn coordinates(&self, root: usize) -> Option<&[Scalar]> {
        self.coords.get(root).map(Vec::as_slice)
    }

    fn coefficients(&self, root: usize) -> Option<&[Scalar]> {
        self.coeffs.get(root).map(Vec::as_slice)
    }

    fn euclidean_dim(&self) -> Option<usize> {
        Some(self.dim)
    }

    fn lookup(&self, coords: &[Scalar]) -> Option<SignedRoot> {
        self.index.get(coords).copied()
    }
}

/// `I2(m)` without coordinates.
///
/// Roots are unit vectors at angles `kπ/m`, `k = 0..2m`, with `k < m` positive
/// and simple roots at angles `0` and `(m-1)π/m`. The reflection with root at
/// angle `j` sends angle `k` to `2j - k + m` (mod `2m`). Reflection length is
/// 0 for the identity, 1 for reflections and 2 for nontrivial rotations, and
/// the fixed space has dimension 2, 1, 0 respectively.
#[derive(Debug)]
pub struct DihedralGeometry {
    m: usize,
    /// Angle (in units of π/m) of each positive root, in root order.
    angle: Vec<usize>,
    /// Root index of each positive angle.
    root_at: Vec<usize>,
}

enum DihedralKind {
    Identity,
    Reflection(usize),
    Rotation,
}

impl DihedralGeometry {
    pub fn new(m: u32) -> Self {
        let m = m as usize;
        let mut angle: Vec<usize> = (0..m).collect();
        angle.sort_by_key(|&k| (k.min(m - 1 - k), k));
        let mut root_at = vec![0; m];
        for (i, &k) in angle.iter().enumerate() {
            root_at[k] = i;
        }
        Self { m, angle, root_at }
    }

    fn classify(&self, perm: &[SignedRoot]) -> DihedralKind {
        let negatives = perm.iter().filter(|r| r.is_negative()).count();
        if negatives % 2 == 1 {
            let t = (0..self.m)
                .find(|&i| perm[i] == SignedRoot::new(i, true))
                .expect("a reflection negates its own root");
            DihedralKind::Reflection(t)
        } else if perm.iter().enumerate().all(|(i, r)| *r == SignedRoot::new(i, false)) {
            DihedralKind::Identity
        } else {
            DihedralKind::Rotation
        }
    }
}

impl Geometry for DihedralGeometry {
    fn model_name(&self) -> &'static str {
        "dihedral"
    }

    fn rank(&self) -> usize {
        2
    }

    fn n_roots(&self) -> usize {
        self.m
    }

    fn reflection_perms(&self) -> Vec<Vec<SignedRoot>> {
        let m = self.m;
        self.angle
            .iter()
            .map(|&j| {
                self.angle
                    .iter()
                    .map(|&k| {
                        let r = (2 * j + 3 * m - k) % (2 * m);
                        if r < m {
                            SignedRoot::new(self.root_at[r], false)
                        } else {
                            SignedRoot::new(self.root_at[r - m], true)
                        }
                    })
                    .collect()
            })
            .collect()
    }

    fn analyze(&self, perm: &[SignedRoot]) -> LocalMov {
        let (fixed_dim, below) = match self.classify(perm) {
            DihedralKind::Identity => (2, vec![false; self.m]),
            DihedralKind::Reflection(t) => (1, (0..self.m).map(|i| i == t).collect()),
            DihedralKind::Rotation => (0, vec![true; self.m]),
        };
        LocalMov {
            fixed_dim,
            below,
            fixed_basis: None,
            mov_basis: None,
        }
    }

    fn matrix(&self, _: &[SignedRoot]) -> Option<Matrix> {
        None
    }

    fn euclidean_matrix(&self, _: &[SignedRoot]) -> Option<Matrix> {
        None
    }

    fn is_parabolic(&self, gens: &[usize], reflections: &[usize]) -> bool {
        match gens.len() {
            0 | 1 => true,
            _ => reflections.len() == self.m,
        }
    }

    fn fixes_intersection(&self, gens: &[usize], perm: &[SignedRoot]) -> Option<bool> {
        Some(match (gens, self.classify(perm)) {
            (_, DihedralKind::Identity) => true,
            ([], _) => false,
            ([g], DihedralKind::Reflection(t)) => *g == t,
            ([_], DihedralKind::Rotation) => false,
            _ => true,
        })
    }

    fn coordinates(&self, _: usize) -> Option<&[Scalar]> {
        None
    }

    fn coefficients(&self, _: usize) -> Option<&[Scalar]> {
        None
    }

    fn euclidean_dim(&self) -> Option<usize> {
        None
    }
}
