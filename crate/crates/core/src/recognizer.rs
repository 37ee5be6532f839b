//! The recognition pipeline: abelianization gate, representation-variety
//! equations, reduced Groebner basis, Krull dimension.

use std::fmt;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::abelian::{abelianization, AbelianizationResult};
use crate::dimension::{cross_check, DimensionMismatch};
use crate::groebner::{buchberger_with, Budget, BudgetKind, GroebnerError, GroebnerOptions, GroebnerStats, PairSelection};
use crate::poly::MonomialOrder;
use crate::presentation::{GroupPresentation, HeegaardDiagram};
use crate::repvar::{representation_ideal_with, RelatorForm};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RecognizerConfig {
    pub order: MonomialOrder,
    pub budget: Budget,
    pub selection: PairSelection,
    pub relator_form: RelatorForm,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Decision {
    /// The group is trivial: the manifold is the 3-sphere.
    TrivialGroup,
    NontrivialGroup,
    InconclusiveBudget,
}

impl fmt::Display for Decision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Decision::TrivialGroup => "TRIVIAL_GROUP (S^3)",
            Decision::NontrivialGroup => "NONTRIVIAL_GROUP (not S^3)",
            Decision::InconclusiveBudget => "INCONCLUSIVE_BUDGET",
        })
    }
}

/// Last stage the pipeline entered.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Stage {
    Abelianization,
    Groebner,
    Dimension,
    Done,
}

/// Observations that contradict the theory for genuine 3-manifold inputs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Anomaly {
    /// Trivial first homology with a representation variety of dimension 1 or 2;
    /// any irreducible representation forces dimension at least 3.
    LowDimension { dimension: i64 },
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct StageTimings {
    pub abelianization_us: u64,
    pub equations_us: u64,
    pub groebner_us: u64,
    pub dimension_us: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BudgetReport {
    pub max_pairs: u64,
    pub max_seconds: Option<u64>,
    pub exhausted: Option<BudgetKind>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub schema: u32,
    pub input: String,
    pub generator_count: usize,
    pub relator_count: usize,
    pub abelianization: AbelianizationResult,
    pub stage: Stage,
    pub order: MonomialOrder,
    pub relator_form: RelatorForm,
    pub equation_count: Option<usize>,
    pub basis_size: Option<usize>,
    pub dimension: Option<i64>,
    pub hilbert_degree: Option<i64>,
    pub witness: Option<Vec<usize>>,
    pub decision: Decision,
    pub anomalies: Vec<Anomaly>,
    pub diagnostics: Vec<String>,
    pub groebner_stats: Option<GroebnerStats>,
    pub budget: BudgetReport,
    pub timings: StageTimings,
}

impl Verdict {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("verdict serializes")
    }

    pub fn from_json(text: &str) -> Result<Verdict, serde_json::Error> {
        serde_json::from_str(text)
    }

    /// Process exit status: 0 decided, 2 inconclusive.
    pub fn exit_code(&self) -> i32 {
        match self.decision {
            Decision::InconclusiveBudget => 2,
            _ => 0,
        }
    }

    /// Checks the decision rules and anomaly flags against the recorded data.
    pub fn invariants_hold(&self) -> bool {
        let ab_trivial = self.abelianization.is_trivial;
        let decision_ok = match self.decision {
            Decision::TrivialGroup => ab_trivial && self.dimension == Some(0),
            Decision::NontrivialGroup => !ab_trivial || self.dimension.is_some_and(|d| d > 0),
            Decision::InconclusiveBudget => ab_trivial && self.dimension.is_none(),
        };
        let low = ab_trivial && matches!(self.dimension, Some(1 | 2));
        let flagged = self.anomalies.iter().any(|a| matches!(a, Anomaly::LowDimension { .. }));
        decision_ok && low == flagged
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "input:          {}", self.input)?;
        writeln!(f, "presentation:   {} generators, {} relators", self.generator_count, self.relator_count)?;
        writeln!(f, "abelianization: {}", self.abelianization)?;
        if let Some(n) = self.equation_count {
            writeln!(f, "equations:      {n} in {} variables", 4 * self.generator_count)?;
        }
        if let Some(n) = self.basis_size {
            writeln!(f, "groebner basis: {n} elements ({})", self.order)?;
        }
        if let Some(s) = &self.groebner_stats {
            writeln!(
                f,
                "pairs:          {} processed, {} skipped, {} reduced to zero",
                s.pairs_processed, s.pairs_skipped, s.reductions_to_zero
            )?;
        }
        if let Some(d) = self.dimension {
            writeln!(f, "dimension:      {d}")?;
        }
        for a in &self.anomalies {
            match a {
                Anomaly::LowDimension { dimension } => {
                    writeln!(f, "anomaly:        dimension {dimension} with trivial homology")?
                }
            }
        }
        for d in &self.diagnostics {
            writeln!(f, "note:           {d}")?;
        }
        write!(f, "decision:       {}", self.decision)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum RecognizeError {
    /// The trivial representation always lies on the variety, so an empty variety
    /// means the equations or the basis are wrong.
    #[error("internal inconsistency: the representation variety came out empty")]
    EmptyVariety,
    #[error(transparent)]
    DimensionMismatch(#[from] DimensionMismatch),
}

fn micros(d: Duration) -> u64 {
    d.as_micros().min(u128::from(u64::MAX)) as u64
}

pub fn recognize(p: &GroupPresentation, config: &RecognizerConfig) -> Result<Verdict, RecognizeError> {
    recognize_described(p, config, p.to_string(), Vec::new())
}

pub fn recognize_heegaard(d: &HeegaardDiagram, config: &RecognizerConfig) -> Result<Verdict, RecognizeError> {
    let mut diagnostics = Vec::new();
    if !d.is_closed_manifold_shaped() {
        diagnostics.push(format!(
            "genus {} diagram has {} attaching curves; a closed 3-manifold needs exactly {}",
            d.genus(),
            d.curves().len(),
            d.genus()
        ));
    }
    let p = d.to_presentation();
    let input = format!("heegaard genus {} -> {}", d.genus(), p);
    recognize_described(&p, config, input, diagnostics)
}

fn recognize_described(
    p: &GroupPresentation,
    config: &RecognizerConfig,
    input: String,
    diagnostics: Vec<String>,
) -> Result<Verdict, RecognizeError> {
    let mut timings = StageTimings::default();
    let t = Instant::now();
    let ab = abelianization(p);
    timings.abelianization_us = micros(t.elapsed());

    let mut verdict = Verdict {
        schema: SCHEMA_VERSION,
        input,
        generator_count: p.generator_count(),
        relator_count: p.relator_count(),
        abelianization: ab,
        stage: Stage::Abelianization,
        order: config.order,
        relator_form: config.relator_form,
        equation_count: None,
        basis_size: None,
        dimension: None,
        hilbert_degree: None,
        witness: None,
        decision: Decision::NontrivialGroup,
        anomalies: Vec::new(),
        diagnostics,
        groebner_stats: None,
        budget: BudgetReport {
            max_pairs: config.budget.max_pairs,
            max_seconds: config.budget.max_time.map(|d| d.as_secs()),
            exhausted: None,
        },
        timings,
    };
    if !verdict.abelianization.is_trivial {
        return Ok(verdict);
    }

    let t = Instant::now();
    let rep = representation_ideal_with(p, config.order, config.relator_form);
    let ideal = rep.ideal();
    verdict.equation_count = Some(rep.equation_count());
    verdict.timings.equations_us = micros(t.elapsed());

    verdict.stage = Stage::Groebner;
    let t = Instant::now();
    let options = GroebnerOptions {
        budget: config.budget,
        selection: config.selection,
        ..GroebnerOptions::default()
    };
    let basis = buchberger_with(&ideal, &options);
    verdict.timings.groebner_us = micros(t.elapsed());
    let basis = match basis {
        Ok(b) => b,
        Err(GroebnerError::BudgetExhausted { kind, stats, .. }) => {
            verdict.groebner_stats = Some(stats);
            verdict.budget.exhausted = Some(kind);
            verdict.decision = Decision::InconclusiveBudget;
            verdict
                .diagnostics
                .push(format!("groebner {kind} reached; rerun with a larger --max-seconds / --max-pairs"));
            return Ok(verdict);
        }
    };
    verdict.groebner_stats = Some(basis.stats);
    verdict.basis_size = Some(basis.len());

    verdict.stage = Stage::Dimension;
    let t = Instant::now();
    let report = cross_check(&basis)?;
    verdict.timings.dimension_us = micros(t.elapsed());
    if report.dimension < 0 {
        return Err(RecognizeError::EmptyVariety);
    }
    verdict.dimension = Some(report.dimension);
    verdict.hilbert_degree = Some(report.hilbert_degree);
    verdict.witness = Some(report.witness);
    verdict.stage = Stage::Done;
    verdict.decision = if report.dimension == 0 {
        Decision::TrivialGroup
    } else {
        Decision::NontrivialGroup
    };
    if matches!(report.dimension, 1 | 2) {
        verdict.anomalies.push(Anomaly::LowDimension {
            dimension: report.dimension,
        });
    }
    Ok(verdict)
}
