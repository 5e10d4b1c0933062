//! Report types and command implementations behind the `metarig` binary.

use std::fmt::Write as _;

use metarig_core::fingerprint::{
    fingerprint_compare, FingerprintReport, FingerprintWitness, FiniteGroup, IdealSpec, Verdict,
};
use metarig_core::fitting::{freeness_verdict, FailingTest, FreenessVerdict, Outcome, Witness};
use metarig_core::magnus::{word_to_magnus, MagnusError};
use metarig_core::presentations::{
    abelianization, alexander_matrix_with, parse_word, PresMatrixText,
};
use metarig_core::GroupPresentation;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use metarig_core::grobner::DEFAULT_BUDGET;

pub const ANALYZE_PROVENANCE: &str =
    "Groves-Miller criterion: a finitely presented metabelian group is free metabelian \
of rank n iff its abelianization is Z^n and its relation module over Z[Z^n] is free of rank n; \
projective implies free by Quillen-Suslin";
pub const COMPARE_PROVENANCE: &str =
    "finite quotients: groups with different hom/epi counts or module quotients \
have non-isomorphic profinite completions; equal counts only mean indistinguishable at this panel";
pub const MAGNUS_PROVENANCE: &str =
    "Magnus embedding of the free metabelian group into Z^n x| Z[Z^n]^n; \
the derived subgroup maps to the kernel of e_j -> x_j - 1";

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {message}")]
    Input { path: String, message: String },
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        EXIT_INPUT
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationEcho {
    pub generators: Vec<String>,
    pub relators: Vec<String>,
}

impl From<&GroupPresentation> for PresentationEcho {
    fn from(p: &GroupPresentation) -> Self {
        PresentationEcho {
            generators: p.generators().to_vec(),
            relators: p.render_relators(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbelianizationSummary {
    pub rank: usize,
    pub torsion: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub presentation: PresentationEcho,
    pub abelianization: AbelianizationSummary,
    /// Absent when the abelianization has torsion.
    pub alexander_matrix: Option<PresMatrixText>,
    pub verdict: FreenessVerdict,
    /// Whether the group is free metabelian of rank `abelianization.rank`.
    pub free_metabelian: bool,
    pub budget: u64,
    pub provenance: String,
}

impl AnalysisReport {
    pub fn exit_code(&self) -> i32 {
        if self.verdict.outcome == Outcome::Inconclusive {
            EXIT_BUDGET
        } else {
            EXIT_OK
        }
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let p = &self.presentation;
        let _ = writeln!(out, "generators: {}", p.generators.join(" "));
        for r in &p.relators {
            let _ = writeln!(out, "relator: {r}");
        }
        let ab = &self.abelianization;
        let mut group = format!("Z^{}", ab.rank);
        for t in &ab.torsion {
            let _ = write!(group, " + Z/{t}");
        }
        let _ = writeln!(out, "abelianization: {group}");
        if let Some(m) = &self.alexander_matrix {
            let _ = writeln!(out, "alexander matrix ({} x {}):", m.rows.len(), m.cols);
            for row in &m.rows {
                let _ = writeln!(out, "  [ {} ]", row.join(", "));
            }
        }
        let v = &self.verdict;
        let outcome = match v.outcome {
            Outcome::FreeOfRank => format!("FreeOfRank({})", v.rank),
            Outcome::NotFree => format!("NotFree (rank {})", v.rank),
            Outcome::AbelianizationObstruction => "AbelianizationObstruction".to_string(),
            Outcome::Inconclusive => format!("Inconclusive (rank {})", v.rank),
        };
        let _ = writeln!(out, "verdict: {outcome}");
        if let Some(t) = v.failing_test {
            let what = match t {
                FailingTest::LowerFittingNonzero => {
                    format!("Fitt_{} is not zero", v.rank as i64 - 1)
                }
                FailingTest::FittingNotUnit => format!("Fitt_{} is not the unit ideal", v.rank),
            };
            let _ = writeln!(out, "failing test: {what}");
        }
        if let Some(w) = &v.witness {
            let _ = writeln!(out, "witness: {}", render_witness(w));
        }
        let _ = writeln!(out, "groebner steps: {} of {}", v.budget_used, self.budget);
        let claim = if self.free_metabelian {
            format!("free metabelian of rank {}", ab.rank)
        } else if v.outcome == Outcome::Inconclusive {
            "undecided within budget".to_string()
        } else {
            "not free metabelian".to_string()
        };
        let _ = writeln!(out, "conclusion: {claim}");
        let _ = writeln!(out, "provenance: {}", self.provenance);
        out
    }
}

fn render_witness(w: &Witness) -> String {
    match w {
        Witness::NonzeroMinor { rows, cols, minor } => {
            format!("minor rows {rows:?} cols {cols:?} = {minor}")
        }
        Witness::UnitCombination {
            generators,
            cofactors,
        } => {
            let terms: Vec<String> = cofactors
                .iter()
                .zip(generators)
                .map(|(c, g)| format!("({c})*({g})"))
                .collect();
            format!("{} = 1", terms.join(" + "))
        }
        Witness::Evaluation {
            generators,
            certificate,
        } => {
            let ring = if certificate.modulus == 0 {
                "Z".to_string()
            } else {
                format!("Z/{}", certificate.modulus)
            };
            format!(
                "x -> {:?} in {ring} kills every generator of [{}]",
                certificate.point,
                generators.join(", ")
            )
        }
        Witness::Torsion { torsion } => format!("torsion invariants {torsion:?}"),
        Witness::Budget { limit } => format!("step budget {limit} exhausted"),
    }
}

/// Abelianization, Alexander matrix, then the Fitting-ideal test at the
/// abelianization rank.
pub fn analyze(p: &GroupPresentation, budget: u64) -> AnalysisReport {
    let ab = abelianization(p);
    let summary = AbelianizationSummary {
        rank: ab.rank,
        torsion: ab.torsion.clone(),
    };
    let (matrix, verdict) = if ab.is_free() {
        let m = alexander_matrix_with(p, &ab).expect("abelianization is free");
        let v = freeness_verdict(&m, ab.rank, budget);
        (Some(PresMatrixText::from(&m)), v)
    } else {
        (
            None,
            FreenessVerdict::abelianization_obstruction(ab.torsion.clone()),
        )
    };
    AnalysisReport {
        presentation: PresentationEcho::from(p),
        abelianization: summary,
        alexander_matrix: matrix,
        free_metabelian: verdict.is_free() && verdict.rank == ab.rank,
        verdict,
        budget,
        provenance: ANALYZE_PROVENANCE.into(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompareReport {
    pub inputs: [String; 2],
    #[serde(flatten)]
    pub fingerprint: FingerprintReport,
    pub provenance: String,
}

impl CompareReport {
    pub fn render_text(&self) -> String {
        let f = &self.fingerprint;
        let mut out = format!("comparing {} and {}\n", self.inputs[0], self.inputs[1]);
        let _ = writeln!(
            out,
            "{:<12} {:>6} {:>21} {:>21}",
            "target", "order", "hom", "epi"
        );
        for t in &f.targets {
            match (&t.hom, &t.epi, &t.error) {
                (Some(h), Some(e), _) => {
                    let mark = if h[0] != h[1] || e[0] != e[1] {
                        " *"
                    } else {
                        ""
                    };
                    let _ = writeln!(
                        out,
                        "{:<12} {:>6} {:>21} {:>21}{mark}",
                        t.name,
                        t.order,
                        format!("{} / {}", h[0], h[1]),
                        format!("{} / {}", e[0], e[1])
                    );
                }
                (_, _, err) => {
                    let _ = writeln!(
                        out,
                        "{:<12} {:>6} error: {}",
                        t.name,
                        t.order,
                        err.as_deref().unwrap_or("?")
                    );
                }
            }
        }
        for m in &f.modules {
            let show = |x: &Option<Vec<u64>>| match x {
                Some(v) => format!("{v:?}"),
                None => "n/a".to_string(),
            };
            let _ = writeln!(
                out,
                "module {:<10} {} / {}",
                m.ideal,
                show(&m.invariants[0]),
                show(&m.invariants[1])
            );
            for e in &m.errors {
                let _ = writeln!(out, "  error: {e}");
            }
        }
        let verdict = match (&f.verdict, &f.witness) {
            (Verdict::Distinguished, Some(FingerprintWitness::Target { name, hom, epi })) => {
                format!(
                    "distinguished at {name} (hom {} vs {}, epi {} vs {})",
                    hom[0], hom[1], epi[0], epi[1]
                )
            }
            (
                Verdict::Distinguished,
                Some(FingerprintWitness::Ideal {
                    ideal, invariants, ..
                }),
            ) => format!(
                "distinguished at ideal {ideal} ({} vs {} invariant factors)",
                invariants[0].len(),
                invariants[1].len()
            ),
            _ => "indistinguishable at this panel".to_string(),
        };
        let _ = writeln!(out, "verdict: {verdict}");
        let _ = writeln!(out, "provenance: {}", self.provenance);
        out
    }
}

/// The default panel restricted to order `<= max_order`, followed by `extra`.
pub fn panel(max_order: Option<usize>, extra: Vec<FiniteGroup>) -> Vec<FiniteGroup> {
    let mut panel: Vec<FiniteGroup> = metarig_core::fingerprint::default_panel()
        .into_iter()
        .filter(|g| max_order.is_none_or(|m| g.order() <= m))
        .collect();
    panel.extend(extra);
    panel
}

pub fn compare(
    names: [String; 2],
    p1: &GroupPresentation,
    p2: &GroupPresentation,
    panel: &[FiniteGroup],
    budget: u64,
) -> CompareReport {
    CompareReport {
        inputs: names,
        fingerprint: fingerprint_compare(p1, p2, panel, &IdealSpec::default_list(), budget),
        provenance: COMPARE_PROVENANCE.into(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MagnusReport {
    pub word: String,
    pub rank: usize,
    pub abelian: Vec<i32>,
    pub module: Vec<String>,
    pub normal_form: String,
    pub is_identity: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub augmentation_image: Option<String>,
    pub provenance: String,
}

impl MagnusReport {
    pub fn render_text(&self) -> String {
        let mut out = format!("{}\n", self.normal_form);
        if self.is_identity {
            out.push_str("identity\n");
        }
        if let Some(e) = &self.augmentation_image {
            let _ = writeln!(out, "augmentation image: {e}");
        }
        out
    }
}

/// Evaluates a word over `x1..x{rank}` in the free metabelian group.
pub fn magnus(word: &str, rank: usize, check_derived: bool) -> Result<MagnusReport, CliError> {
    let names: Vec<String> = (1..=rank).map(|i| format!("x{i}")).collect();
    let usage = |m: String| CliError::Usage(m);
    let w = parse_word(word, &names)
        .map_err(|(col, msg)| usage(format!("word column {col}: {msg}")))?;
    let m = word_to_magnus(&w, rank).map_err(|e| usage(e.to_string()))?;
    let var_names = metarig_core::laurent::default_var_names(rank);
    let augmentation_image = if check_derived {
        Some(match m.augmentation_image() {
            Ok(p) => p.render(&var_names),
            Err(MagnusError::NonzeroAbelian { .. }) => {
                "undefined (abelian part is nonzero)".to_string()
            }
            Err(e) => return Err(usage(e.to_string())),
        })
    } else {
        None
    };
    Ok(MagnusReport {
        word: word.to_string(),
        rank,
        abelian: m.abelian().entries().to_vec(),
        module: m.module().iter().map(|p| p.render(&var_names)).collect(),
        normal_form: m.render(),
        is_identity: m.is_identity(),
        augmentation_image,
        provenance: MAGNUS_PROVENANCE.into(),
    })
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

pub fn read_presentation(path: &str) -> Result<GroupPresentation, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Input {
        path: path.into(),
        message: e.to_string(),
    })?;
    GroupPresentation::parse(&text).map_err(|e| CliError::Input {
        path: path.into(),
        message: e.to_string(),
    })
}

pub fn read_target(path: &str) -> Result<FiniteGroup, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Input {
        path: path.into(),
        message: e.to_string(),
    })?;
    FiniteGroup::parse_cayley(&text).map_err(|e| CliError::Input {
        path: path.into(),
        message: e.to_string(),
    })
}
