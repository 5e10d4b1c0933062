//! Finite-quotient fingerprints of presented metabelian groups: homomorphism
//! and epimorphism counts into small metabelian groups, and finite quotients
//! `N / aN` of the Alexander module. Equal fingerprints mean the groups are
//! indistinguishable at this panel; any difference separates their
//! profinite completions.

mod count;
mod group;
mod module;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::presentations::{alexander_matrix, GroupPresentation};

pub use count::{count_homs, epi_count, hom_count, HomCounts, DEFAULT_ENUMERATION_BUDGET};
pub use group::{abelian_invariant_chains, default_panel, FiniteGroup};
pub use module::{
    module_quotient_invariants, IdealSpec, QuotientInvariants, MAX_QUOTIENT_DIMENSION,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FingerprintError {
    #[error("{name} is not a group: {message}")]
    NotAGroup { name: String, message: String },
    #[error("Cayley table line {line}: {message}")]
    CayleyParse { line: usize, message: String },
    #[error("target {name} is not metabelian")]
    NonMetabelian { name: String },
    #[error("enumeration needs {needed} relator evaluations, budget is {limit}")]
    EnumerationBudget { needed: u64, limit: u64 },
    #[error("invalid ideal {ideal}")]
    InvalidIdeal { ideal: String },
    #[error("quotient has dimension {dimension}, limit is {limit}")]
    QuotientTooLarge { dimension: usize, limit: usize },
    #[error("no Alexander module: {message}")]
    NoModule { message: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TargetRecord {
    pub name: String,
    pub order: usize,
    pub hom: Option<[u64; 2]>,
    pub epi: Option<[u64; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl TargetRecord {
    fn differs(&self) -> bool {
        matches!((self.hom, self.epi), (Some(h), Some(e)) if h[0] != h[1] || e[0] != e[1])
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleRecord {
    pub ideal: String,
    pub invariants: [Option<Vec<u64>>; 2],
    pub image_dims: [Option<Vec<usize>>; 2],
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub errors: Vec<String>,
}

impl ModuleRecord {
    fn differs(&self) -> bool {
        fn pair_differs<T: PartialEq>(pair: &[Option<T>; 2]) -> bool {
            matches!(pair, [Some(a), Some(b)] if a != b)
        }
        pair_differs(&self.invariants) || pair_differs(&self.image_dims)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Distinguished,
    Indistinguishable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FingerprintWitness {
    Target {
        name: String,
        hom: [u64; 2],
        epi: [u64; 2],
    },
    Ideal {
        ideal: String,
        invariants: [Vec<u64>; 2],
        image_dims: [Vec<usize>; 2],
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FingerprintReport {
    pub targets: Vec<TargetRecord>,
    pub modules: Vec<ModuleRecord>,
    pub verdict: Verdict,
    /// First difference: targets in panel order, then ideals in list order.
    pub witness: Option<FingerprintWitness>,
}

/// Compares two presentations over a panel of targets and a list of ideals.
/// Failures on individual targets or ideals are recorded, not propagated.
pub fn fingerprint_compare(
    p1: &GroupPresentation,
    p2: &GroupPresentation,
    panel: &[FiniteGroup],
    ideals: &[IdealSpec],
    budget: u64,
) -> FingerprintReport {
    let targets: Vec<TargetRecord> = panel
        .par_iter()
        .map(|g| {
            let a = count_homs(p1, g, budget);
            let b = count_homs(p2, g, budget);
            match (a, b) {
                (Ok(a), Ok(b)) => TargetRecord {
                    name: g.name().into(),
                    order: g.order(),
                    hom: Some([a.hom, b.hom]),
                    epi: Some([a.epi, b.epi]),
                    error: None,
                },
                (a, b) => TargetRecord {
                    name: g.name().into(),
                    order: g.order(),
                    hom: None,
                    epi: None,
                    error: Some(
                        [a.err(), b.err()]
                            .into_iter()
                            .flatten()
                            .map(|e| e.to_string())
                            .collect::<Vec<_>>()
                            .join("; "),
                    ),
                },
            }
        })
        .collect();

    let matrices = [p1, p2].map(|p| {
        alexander_matrix(p).map_err(|e| FingerprintError::NoModule {
            message: e.to_string(),
        })
    });
    let modules: Vec<ModuleRecord> = ideals
        .iter()
        .map(|ideal| {
            let mut errors = Vec::new();
            let results = matrices.each_ref().map(|m| {
                m.clone()
                    .and_then(|m| module_quotient_invariants(&m, ideal))
                    .map_err(|e| errors.push(e.to_string()))
                    .ok()
            });
            let [a, b] = results;
            ModuleRecord {
                ideal: ideal.to_string(),
                invariants: [
                    a.as_ref().map(|q| q.invariants.clone()),
                    b.as_ref().map(|q| q.invariants.clone()),
                ],
                image_dims: [a.map(|q| q.image_dims), b.map(|q| q.image_dims)],
                errors,
            }
        })
        .collect();

    let witness = targets
        .iter()
        .find(|t| t.differs())
        .map(|t| FingerprintWitness::Target {
            name: t.name.clone(),
            hom: t.hom.expect("differing record has counts"),
            epi: t.epi.expect("differing record has counts"),
        })
        .or_else(|| {
            modules
                .iter()
                .find(|m| m.differs())
                .map(|m| FingerprintWitness::Ideal {
                    ideal: m.ideal.clone(),
                    invariants: m.invariants.clone().map(Option::unwrap_or_default),
                    image_dims: m.image_dims.clone().map(Option::unwrap_or_default),
                })
        });
    FingerprintReport {
        targets,
        modules,
        verdict: if witness.is_some() {
            Verdict::Distinguished
        } else {
            Verdict::Indistinguishable
        },
        witness,
    }
}
