//! JSON documents emitted by the CLI. Field order is the output order.

use serde::Serialize;

use dualcox_core::cycles::CycleDecomposition;
use dualcox_core::hurwitz::HurwitzOrbit;
use dualcox_core::subgroups::{ReflectionSubgroup, SubgroupSummary};
use dualcox_core::Element;

#[derive(Serialize)]
pub struct Info {
    #[serde(rename = "type")]
    pub type_label: String,
    pub rank: usize,
    pub n_pos_roots: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub roots: Option<Vec<Vec<String>>>,
}

#[derive(Serialize)]
pub struct Reflen {
    pub element: Vec<usize>,
    pub reflen: usize,
}

#[derive(Serialize)]
pub struct Closure {
    pub element: Vec<usize>,
    pub reflen: usize,
    pub closure: SubgroupSummary,
}

#[derive(Serialize)]
pub struct Reds {
    pub element: Vec<usize>,
    pub reflen: usize,
    pub n_reds: usize,
    pub reds: Vec<Vec<usize>>,
}

#[derive(Serialize)]
pub struct Orbit {
    pub size: usize,
    pub rep: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub subgroup: Option<SubgroupSummary>,
}

impl Orbit {
    pub fn new(o: &HurwitzOrbit, with_subgroup: bool) -> Self {
        Self {
            size: o.size(),
            rep: o.representative.letters().to_vec(),
            subgroup: with_subgroup.then(|| o.subgroup.summary()),
        }
    }
}

#[derive(Serialize)]
pub struct Orbits {
    pub element: Vec<usize>,
    pub n_reds: usize,
    pub orbits: Vec<Orbit>,
}

#[derive(Serialize)]
pub struct Factor {
    pub s_word: Vec<usize>,
    pub reflen: usize,
    pub closure: SubgroupSummary,
}

#[derive(Serialize)]
pub struct Decomposition {
    pub element: Vec<usize>,
    pub ambient: SubgroupSummary,
    pub factors: Vec<Factor>,
}

impl Decomposition {
    pub fn new(d: &CycleDecomposition) -> Self {
        Self {
            element: d.element.canonical_s_word(),
            ambient: d.ambient.summary(),
            factors: d
                .factors
                .iter()
                .zip(&d.factor_closures)
                .map(|(f, c)| Factor {
                    s_word: f.canonical_s_word(),
                    reflen: f.reflection_length(),
                    closure: c.summary(),
                })
                .collect(),
        }
    }
}

#[derive(Serialize)]
pub struct OrbitDecomposition {
    pub size: usize,
    pub rep: Vec<usize>,
    pub decomposition: Decomposition,
}

#[derive(Serialize)]
pub struct AllOrbitDecompositions {
    pub element: Vec<usize>,
    pub orbits: Vec<OrbitDecomposition>,
    pub same_factors_distinct_closures: bool,
}

#[derive(Serialize)]
pub struct Indec {
    pub element: Vec<usize>,
    pub indecomposable: bool,
    pub method: &'static str,
}

#[derive(Serialize)]
pub struct Perm {
    pub element: Vec<usize>,
    pub model: &'static str,
    pub cycles: String,
    pub images: Vec<i64>,
}

#[derive(Serialize)]
pub struct ErrorDoc {
    pub error: String,
    pub kind: &'static str,
}

pub fn words(el: &Element) -> Vec<usize> {
    el.canonical_s_word()
}

pub fn subgroup_text(s: &ReflectionSubgroup) -> String {
    format!(
        "{} (rank {}, {}parabolic), generators {:?}, reflections {:?}",
        s.type_label(),
        s.rank(),
        if s.is_parabolic() { "" } else { "not " },
        s.canonical_gens(),
        s.reflections()
    )
}
