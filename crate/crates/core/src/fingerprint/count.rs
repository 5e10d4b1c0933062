use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{FingerprintError, FiniteGroup};
use crate::presentations::GroupPresentation;

/// Default cap on relator evaluations during tuple enumeration.
pub const DEFAULT_ENUMERATION_BUDGET: u64 = 100_000_000;

const CHUNK: u64 = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomCounts {
    pub hom: u64,
    pub epi: u64,
}

/// Counts homomorphisms and epimorphisms from the group presented by `p`
/// (read in the metabelian variety) to `g` by enumerating generator images.
pub fn count_homs(
    p: &GroupPresentation,
    g: &FiniteGroup,
    budget: u64,
) -> Result<HomCounts, FingerprintError> {
    if !g.is_metabelian() {
        return Err(FingerprintError::NonMetabelian {
            name: g.name().into(),
        });
    }
    let k = p.num_generators();
    let order = g.order() as u64;
    let tuples = u32::try_from(k)
        .ok()
        .and_then(|k| order.checked_pow(k))
        .ok_or(FingerprintError::EnumerationBudget {
            needed: u64::MAX,
            limit: budget,
        })?;
    let needed = tuples.saturating_mul(p.relators().len().max(1) as u64);
    if needed > budget {
        return Err(FingerprintError::EnumerationBudget {
            needed,
            limit: budget,
        });
    }
    let relators: Vec<Vec<(usize, bool)>> = p
        .relators()
        .iter()
        .map(|w| {
            w.letters()
                .iter()
                .map(|l| (l.generator, l.exponent < 0))
                .collect()
        })
        .collect();
    let chunks = tuples.div_ceil(CHUNK);
    let (hom, epi) = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut images = vec![0usize; k];
            let mut counts = (0u64, 0u64);
            for t in c * CHUNK..((c + 1) * CHUNK).min(tuples) {
                let mut rest = t;
                for slot in images.iter_mut() {
                    *slot = (rest % order) as usize;
                    rest /= order;
                }
                let respects = relators.iter().all(|r| {
                    r.iter().fold(0, |acc, &(gen, inv)| {
                        let x = images[gen];
                        g.mul(acc, if inv { g.inverse(x) } else { x })
                    }) == 0
                });
                if respects {
                    counts.0 += 1;
                    if g.generates(&images) {
                        counts.1 += 1;
                    }
                }
            }
            counts
        })
        .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1));
    Ok(HomCounts { hom, epi })
}

pub fn hom_count(p: &GroupPresentation, g: &FiniteGroup) -> Result<u64, FingerprintError> {
    count_homs(p, g, DEFAULT_ENUMERATION_BUDGET).map(|c| c.hom)
}

pub fn epi_count(p: &GroupPresentation, g: &FiniteGroup) -> Result<u64, FingerprintError> {
    count_homs(p, g, DEFAULT_ENUMERATION_BUDGET).map(|c| c.epi)
}
