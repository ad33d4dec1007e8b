use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::sync::Arc;

use super::descriptor::{ComponentType, Descriptor};
use super::element::{Element, ReflWord, SignedRoot};
use super::families::{self, RootModel};
use super::geometry::{DihedralGeometry, Geometry, LinearGeometry};
use crate::algebra::{Matrix, Scalar, Vector};
use crate::error::{Error, Result};

/// One irreducible factor of the group. Its positive roots occupy the
/// contiguous global index range `root_offset..root_offset + n_roots`, and its
/// simple generators the range `simple_offset..simple_offset + rank`.
#[derive(Debug)]
pub struct Component {
    pub kind: ComponentType,
    pub root_offset: usize,
    pub simple_offset: usize,
    pub geometry: Box<dyn Geometry>,
}

impl Component {
    pub fn n_roots(&self) -> usize {
        self.geometry.n_roots()
    }

    pub fn rank(&self) -> usize {
        self.geometry.rank()
    }

    pub fn roots(&self) -> std::ops::Range<usize> {
        self.root_offset..self.root_offset + self.n_roots()
    }

    /// The restriction of a global root permutation to this component, in
    /// local indices.
    pub fn restrict(&self, perm: &[SignedRoot]) -> Vec<SignedRoot> {
        perm[self.roots()].iter().map(|r| r.unshift(self.root_offset)).collect()
    }
}

/// An immutable finite Coxeter system: root system, reflections, Coxeter
/// matrix. Reflections are indexed by positive roots.
pub struct CoxeterSystem {
    descriptor: Descriptor,
    components: Vec<Component>,
    reflections: Vec<Box<[SignedRoot]>>,
    root_component: Vec<usize>,
    simple_ids: Vec<usize>,
    coxeter_matrix: Vec<Vec<u32>>,
}

impl fmt::Debug for CoxeterSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CoxeterSystem")
            .field("type", &self.descriptor.to_string())
            .field("n_reflections", &self.reflections.len())
            .finish()
    }
}

impl CoxeterSystem {
    pub fn from_type(type_string: &str) -> Result<Arc<Self>> {
        Ok(Self::build(&type_string.parse()?))
    }

    /// Builds the root system of every component (block-diagonally for
    /// reducible types) and tabulates all reflections.
    pub fn build(descriptor: &Descriptor) -> Arc<Self> {
        let mut components = Vec::new();
        let mut root_offset = 0;
        let mut simple_offset = 0;
        for &kind in descriptor.components() {
            let geometry: Box<dyn Geometry> = match families::builder(kind.family).root_model(kind.param) {
                RootModel::Linear { simple_roots } => Box::new(LinearGeometry::new(simple_roots)),
                RootModel::Dihedral { m } => Box::new(DihedralGeometry::new(m)),
            };
            let c = Component {
                kind,
                root_offset,
                simple_offset,
                geometry,
            };
            root_offset += c.n_roots();
            simple_offset += c.rank();
            components.push(c);
        }
        let n_roots = root_offset;

        let mut reflections = Vec::with_capacity(n_roots);
        let mut root_component = Vec::with_capacity(n_roots);
        let mut simple_ids = Vec::new();
        for (ci, c) in components.iter().enumerate() {
            for local in c.geometry.reflection_perms() {
                let mut perm: Vec<SignedRoot> = (0..n_roots).map(|i| SignedRoot::new(i, false)).collect();
                for (i, r) in local.into_iter().enumerate() {
                    perm[c.root_offset + i] = r.shift(c.root_offset);
                }
                reflections.push(perm.into_boxed_slice());
                root_component.push(ci);
            }
            // Simple roots come first within each component.
            simple_ids.extend(c.root_offset..c.root_offset + c.rank());
        }

        let n = simple_ids.len();
        let mut coxeter_matrix = vec![vec![1u32; n]; n];
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    let prod = compose(&reflections[simple_ids[i]], &reflections[simple_ids[j]]);
                    coxeter_matrix[i][j] = perm_order(&prod) as u32;
                }
            }
        }
        Arc::new(Self {
            descriptor: descriptor.clone(),
            components,
            reflections,
            root_component,
            simple_ids,
            coxeter_matrix,
        })
    }

    pub fn descriptor(&self) -> &Descriptor {
        &self.descriptor
    }

    pub fn rank(&self) -> usize {
        self.simple_ids.len()
    }

    pub fn n_reflections(&self) -> usize {
        self.reflections.len()
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn component_of_root(&self, root: usize) -> usize {
        self.root_component[root]
    }

    pub fn simple_reflection_ids(&self) -> &[usize] {
        &self.simple_ids
    }

    pub fn coxeter_matrix(&self) -> &[Vec<u32>] {
        &self.coxeter_matrix
    }

    /// True when every component carries a linear model.
    pub fn has_linear_model(&self) -> bool {
        self.components.iter().all(|c| c.geometry.coefficients(0).is_some())
    }

    pub(crate) fn check_reflection(&self, t: usize) -> Result<()> {
        if t < self.reflections.len() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                what: "reflection",
                index: t,
                bound: self.reflections.len(),
            })
        }
    }

    pub(crate) fn reflection_perm(&self, t: usize) -> &[SignedRoot] {
        &self.reflections[t]
    }

    pub fn identity(self: &Arc<Self>) -> Element {
        let perm = (0..self.n_reflections()).map(|i| SignedRoot::new(i, false)).collect();
        Element::from_perm(self.clone(), perm)
    }

    pub fn reflection(self: &Arc<Self>, t: usize) -> Result<Element> {
        self.check_reflection(t)?;
        Ok(Element::from_perm(self.clone(), self.reflections[t].clone()))
    }

    pub fn simple(self: &Arc<Self>, i: usize) -> Result<Element> {
        let t = *self.simple_ids.get(i).ok_or(Error::IndexOutOfRange {
            what: "simple generator",
            index: i,
            bound: self.rank(),
        })?;
        self.reflection(t)
    }

    pub fn reflections(self: &Arc<Self>) -> Vec<Element> {
        (0..self.n_reflections())
            .map(|t| self.reflection(t).expect("in range"))
            .collect()
    }

    pub fn element_from_simple_word(self: &Arc<Self>, word: &[usize]) -> Result<Element> {
        let mut x = self.identity();
        for &i in word {
            x = &x * &self.simple(i)?;
        }
        Ok(x)
    }

    /// The product `t_1 t_2 ⋯ t_k`.
    pub fn element_from_refl_word(self: &Arc<Self>, word: &ReflWord) -> Result<Element> {
        let mut x = self.identity();
        for &t in word.letters() {
            x = &x * &self.reflection(t)?;
        }
        Ok(x)
    }

    /// All elements, each exactly once, in breadth-first order over the
    /// simple generators. Fails once more than `cap` elements are found.
    pub fn enumerate(self: &Arc<Self>, cap: usize) -> Result<Vec<Element>> {
        let gens: Vec<Element> = (0..self.rank()).map(|i| self.simple(i).expect("in range")).collect();
        bfs_closure(self.identity(), &gens, cap).ok_or(Error::GroupTooLarge { cap })
    }

    pub fn order(self: &Arc<Self>, cap: usize) -> Result<usize> {
        self.enumerate(cap).map(|v| v.len())
    }

    pub(crate) fn matrix_of_perm(&self, perm: &[SignedRoot]) -> Option<Matrix> {
        let blocks: Vec<Matrix> = self
            .components
            .iter()
            .map(|c| c.geometry.matrix(&c.restrict(perm)))
            .collect::<Option<_>>()?;
        Some(block_diagonal(&blocks))
    }

    pub(crate) fn euclidean_matrix_of_perm(&self, perm: &[SignedRoot]) -> Option<Matrix> {
        let blocks: Vec<Matrix> = self
            .components
            .iter()
            .map(|c| c.geometry.euclidean_matrix(&c.restrict(perm)))
            .collect::<Option<_>>()?;
        Some(block_diagonal(&blocks))
    }

    /// Euclidean coordinates of a positive root; components are placed in
    /// consecutive coordinate blocks.
    pub fn root_coordinates(&self, root: usize) -> Option<Vector> {
        let dims = self.component_dims()?;
        let ci = self.root_component[root];
        let c = &self.components[ci];
        let local = c.geometry.coordinates(root - c.root_offset)?;
        let mut v = Vec::new();
        for (i, d) in dims.iter().enumerate() {
            if i == ci {
                v.extend_from_slice(local);
            } else {
                v.extend(std::iter::repeat_n(Scalar::zero(), *d));
            }
        }
        Some(v)
    }

    /// Inverse of [`CoxeterSystem::root_coordinates`] on all roots.
    pub fn lookup_root(&self, coords: &[Scalar]) -> Option<SignedRoot> {
        let dims = self.component_dims()?;
        if coords.len() != dims.iter().sum::<usize>() {
            return None;
        }
        let mut start = 0;
        let mut found = None;
        for (c, d) in self.components.iter().zip(&dims) {
            let block = &coords[start..start + d];
            start += d;
            if block.iter().all(Scalar::is_zero) {
                continue;
            }
            if found.is_some() {
                return None;
            }
            let local = c.geometry.lookup(block)?;
            found = Some(local.shift(c.root_offset));
        }
        found
    }

    /// Coefficients of a positive root in the basis of simple roots, with
    /// components in consecutive blocks.
    pub fn root_coefficients(&self, root: usize) -> Option<Vector> {
        let ci = self.root_component[root];
        let c = &self.components[ci];
        let local = c.geometry.coefficients(root - c.root_offset)?;
        let mut v = vec![Scalar::zero(); self.rank()];
        v[c.simple_offset..c.simple_offset + c.rank()].clone_from_slice(local);
        Some(v)
    }

    fn component_dims(&self) -> Option<Vec<usize>> {
        self.components.iter().map(|c| c.geometry.euclidean_dim()).collect()
    }
}

/// `(x·y)(α_i) = x(y(α_i))`
pub(crate) fn compose(x: &[SignedRoot], y: &[SignedRoot]) -> Box<[SignedRoot]> {
    y.iter()
        .map(|r| {
            let image = x[r.index()];
            if r.is_negative() {
                image.negate()
            } else {
                image
            }
        })
        .collect()
}

pub(crate) fn perm_order(p: &[SignedRoot]) -> usize {
    let is_identity = |q: &[SignedRoot]| q.iter().enumerate().all(|(i, r)| *r == SignedRoot::new(i, false));
    let mut acc: Box<[SignedRoot]> = p.into();
    let mut k = 1;
    while !is_identity(&acc) {
        acc = compose(&acc, p);
        k += 1;
    }
    k
}

fn block_diagonal(blocks: &[Matrix]) -> Matrix {
    let n: usize = blocks.iter().map(Matrix::n_rows).sum();
    let m: usize = blocks.iter().map(Matrix::n_cols).sum();
    let mut out = Matrix::zeros(n, m);
    let (mut r0, mut c0) = (0, 0);
    for b in blocks {
        for i in 0..b.n_rows() {
            for j in 0..b.n_cols() {
                out[(r0 + i, c0 + j)] = b[(i, j)].clone();
            }
        }
        r0 += b.n_rows();
        c0 += b.n_cols();
    }
    out
}

/// Breadth-first closure of `start` under right multiplication by `gens`;
/// `None` once the closure exceeds `cap` elements.
pub(crate) fn bfs_closure(start: Element, gens: &[Element], cap: usize) -> Option<Vec<Element>> {
    let mut seen: HashSet<Box<[SignedRoot]>> = HashSet::new();
    let mut out = Vec::new();
    let mut queue = VecDeque::new();
    seen.insert(start.perm().into());
    queue.push_back(start);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = &x * g;
            if seen.insert(y.perm().into()) {
                if seen.len() > cap {
                    return None;
                }
                queue.push_back(y);
            }
        }
        out.push(x);
    }
    Some(out)
}
