//! Homothety witnesses and the necessary conditions that obstruct homothety.
//!
//! Two forms `B`, `B'` on one algebra always differ by a unit: `B' = B ρ_u`.
//! They are homothetic iff `ρ_u = α Vᵗ V` for some scalar `α` and invertible
//! `V`. Deciding that in general is open, so [`homothety_probe`] only reports
//! a verdict backed by an explicit witness or by a failed invariant.

use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::algebra::{Algebra, Element};
use crate::error::{ensure, Error, Result};
use crate::frobenius::{automorphism_order, nakayama, transpose, twist, Form};
use crate::linalg::{is_similar, Matrix};
use crate::norms::{central_square_root, norm, NormContext};
use crate::scalar::{square_class_with_bound, FieldElement, SquareClassRep, DEFAULT_FACTOR_BOUND};

/// `B'(r, s) = α B(Vr, Vs)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomothetyWitness {
    pub alpha: FieldElement,
    pub v: Matrix,
}

/// Checks a witness in both formulations: `B' = α Vᵀ B V`, and
/// `ρ_u = α Vᵗ V` with `ρ_u = B⁻¹ B'`.
pub fn verify_witness(form: &Form, other: &Form, w: &HomothetyWitness) -> Result<bool> {
    let m = form.dim();
    if other.dim() != m || w.v.rows() != m || w.v.cols() != m {
        return Err(Error::DimensionMismatch("witness and forms differ in size".into()));
    }
    if w.alpha.is_zero() || w.v.inverse().is_none() {
        return Ok(false);
    }
    let gram = (&(&w.v.transpose() * form.matrix()) * &w.v).scale(&w.alpha);
    let by_matrix = &gram == other.matrix();
    let rho_u = form.inverse() * other.matrix();
    let by_transpose = rho_u == (&transpose(&w.v, form) * &w.v).scale(&w.alpha);
    ensure(by_matrix == by_transpose, || {
        "matrix and transpose formulations of a witness disagree".into()
    })?;
    Ok(by_matrix)
}

/// Witness `(α, ρ_v)` for `B` against `twist(B, u)`, where `B` is symmetric,
/// `u` is central and `α v² = u`.
pub fn symmetric_witness(alg: &Algebra, form: &Form, u: &Element) -> Result<HomothetyWitness> {
    if !form.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    if !alg.is_unit(u) {
        return Err(Error::NotAUnit);
    }
    if !alg.is_central(u) {
        return Err(Error::NotCentral);
    }
    let (alpha, v) = central_square_root(alg, u)?;
    ensure(alg.is_central(&v), || "square root of a central unit is not central".into())?;
    let witness = HomothetyWitness {
        alpha,
        v: alg.right_mul(&v),
    };
    let other = twist(alg, form, u)?;
    ensure(verify_witness(form, &other, &witness)?, || {
        "symmetric witness does not verify".into()
    })?;
    Ok(witness)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CentralNormOutcome {
    /// `N_σ(u)` is central, with `σⁿ = Id`.
    Passes { order: usize, norm: Element },
    /// `N_σ(u)` is not central: the forms are not homothetic.
    Fails { order: usize, norm: Element },
    /// `σ` has no finite order within the bound.
    NotApplicable,
}

impl CentralNormOutcome {
    pub fn failed(&self) -> bool {
        matches!(self, CentralNormOutcome::Fails { .. })
    }
}

/// Necessary condition for `B ~ twist(B, u)` when `σ` has finite order `n`:
/// `N_σ(u)` must be central.
pub fn central_norm_test(alg: &Algebra, form: &Form, u: &Element, bound: usize) -> Result<CentralNormOutcome> {
    let sigma = nakayama(alg, form)?;
    let Some(order) = automorphism_order(&sigma, bound) else {
        return Ok(CentralNormOutcome::NotApplicable);
    };
    let ctx = NormContext::new(alg, sigma, order)?;
    let n = norm(alg, &ctx, u)?;
    Ok(if alg.is_central(&n) {
        CentralNormOutcome::Passes { order, norm: n }
    } else {
        CentralNormOutcome::Fails { order, norm: n }
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Similarity {
    Similar,
    NotSimilar,
}

/// Compares the Nakayama matrices `B⁻¹Bᵀ` and `B'⁻¹B'ᵀ` up to similarity.
/// Homothetic forms always give similar matrices.
pub fn nakayama_similarity(form: &Form, other: &Form) -> Result<Similarity> {
    let s1 = form.inverse() * &form.matrix().transpose();
    let s2 = other.inverse() * &other.matrix().transpose();
    Ok(if is_similar(&s1, &s2)? {
        Similarity::Similar
    } else {
        Similarity::NotSimilar
    })
}

pub fn det_class(form: &Form) -> Result<SquareClassRep> {
    det_class_with_bound(form, DEFAULT_FACTOR_BOUND)
}

/// `det B` in the square class group.
pub fn det_class_with_bound(form: &Form, factor_bound: u64) -> Result<SquareClassRep> {
    let det = form.matrix().det()?;
    if det.is_zero() {
        return Err(Error::Degenerate {
            witness: form.matrix().kernel_basis().swap_remove(0),
        });
    }
    square_class_with_bound(&det, factor_bound)
}

/// True iff `ρ_u`, written in the radical-filtered basis, is upper triangular
/// with ones on the diagonal and has determinant 1. Requires `u ≡ 1 mod m`.
pub fn unipotence_check(alg: &Algebra, u: &Element) -> Result<bool> {
    let local = alg.local_structure()?.ok_or(Error::NotLocal)?;
    if !local.residue(u).is_one() {
        return Err(Error::BadResidue);
    }
    let rho = alg.right_mul(u);
    let filtered = local.in_filtered_basis(&rho);
    Ok(filtered.is_upper_unitriangular() && rho.det()?.is_one())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ObstructionReason {
    CentralNorm,
    NakayamaSimilarity,
    DetClass,
    SymmetryMismatch,
}

impl fmt::Display for ObstructionReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ObstructionReason::CentralNorm => "central-norm",
            ObstructionReason::NakayamaSimilarity => "nakayama-similarity",
            ObstructionReason::DetClass => "det-class",
            ObstructionReason::SymmetryMismatch => "symmetry-mismatch",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    WitnessFound(HomothetyWitness),
    Obstructed(ObstructionReason),
    Inconclusive,
}

/// Per-check results gathered by [`homothety_probe`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProbeDetails {
    /// The unit with `B' = twist(B, u)`.
    pub unit: Element,
    pub first_symmetric: bool,
    pub second_symmetric: bool,
    pub unit_central: bool,
    /// Set when `B` is symmetric, `u` is not central and the algebra is local
    /// with characteristic ≠ 2.
    pub noncentral_symmetric_twist: bool,
    pub central_norm: CentralNormOutcome,
    pub similarity: Similarity,
    /// Determinant classes of `B` and `B'`, compared only in even dimension.
    pub det_classes: Option<(SquareClassRep, SquareClassRep)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObstructionReport {
    pub verdict: Verdict,
    pub details: ProbeDetails,
}

/// Bounds used by the homothety battery.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ProbeConfig {
    pub order_bound: usize,
    pub factor_bound: u64,
}

impl Default for ProbeConfig {
    fn default() -> Self {
        ProbeConfig {
            order_bound: crate::frobenius::DEFAULT_ORDER_BOUND,
            factor_bound: DEFAULT_FACTOR_BOUND,
        }
    }
}

/// Runs every available homothety check on `B` and `B'` and reports the first
/// failed necessary condition, a verified witness, or `Inconclusive`.
///
/// All checks run even after one fails, so the details carry each result.
pub fn homothety_probe(alg: &Algebra, form: &Form, other: &Form, config: ProbeConfig) -> Result<ObstructionReport> {
    let rho_u = form.inverse() * other.matrix();
    let unit = alg.apply(&rho_u, &alg.one());
    if alg.right_mul(&unit) != rho_u || !alg.is_unit(&unit) {
        return Err(Error::NotATwist);
    }
    let unit_central = alg.is_central(&unit);
    let first_symmetric = form.is_symmetric();
    let second_symmetric = other.is_symmetric();
    if first_symmetric {
        ensure(second_symmetric == unit_central, || {
            "twist of a symmetric form is symmetric iff the unit is central".into()
        })?;
    }
    let local = matches!(alg.local_structure(), Ok(Some(_)));
    let good_char = alg.field().characteristic() != 2;

    let mut witness = None;
    let mut noncentral_symmetric_twist = false;
    if first_symmetric && local && good_char {
        if unit_central {
            witness = Some(symmetric_witness(alg, form, &unit)?);
        } else {
            noncentral_symmetric_twist = true;
        }
    }

    let central_norm = central_norm_test(alg, form, &unit, config.order_bound)?;
    let similarity = nakayama_similarity(form, other)?;
    let det_classes = if alg.dim() % 2 == 0 {
        Some((
            det_class_with_bound(form, config.factor_bound)?,
            det_class_with_bound(other, config.factor_bound)?,
        ))
    } else {
        None
    };
    let details = ProbeDetails {
        unit,
        first_symmetric,
        second_symmetric,
        unit_central,
        noncentral_symmetric_twist,
        central_norm,
        similarity,
        det_classes,
    };

    let failures: Vec<ObstructionReason> = [
        (noncentral_symmetric_twist, ObstructionReason::CentralNorm),
        (first_symmetric != second_symmetric, ObstructionReason::SymmetryMismatch),
        (details.central_norm.failed(), ObstructionReason::CentralNorm),
        (details.similarity == Similarity::NotSimilar, ObstructionReason::NakayamaSimilarity),
        (
            details.det_classes.as_ref().is_some_and(|(a, b)| a != b),
            ObstructionReason::DetClass,
        ),
    ]
    .into_iter()
    .filter_map(|(failed, reason)| failed.then_some(reason))
    .collect();

    let verdict = match (witness, failures.first()) {
        (Some(w), None) => Verdict::WitnessFound(w),
        (Some(_), Some(reason)) => {
            return Err(Error::Assertion(format!(
                "verified witness contradicts the {reason} obstruction"
            )))
        }
        (None, Some(reason)) => Verdict::Obstructed(*reason),
        (None, None) => Verdict::Inconclusive,
    };
    Ok(ObstructionReport { verdict, details })
}

/// One sampled unit whose norm is central yet the pair is obstructed.
#[derive(Clone, Debug)]
pub struct CounterexampleCandidate {
    pub trial: usize,
    pub unit: Element,
    pub norm: Element,
    pub report: ObstructionReport,
}

/// Counts gathered by [`conjecture_probe`].
#[derive(Clone, Debug)]
pub struct ConjectureSummary {
    pub trials: usize,
    pub seed: u64,
    pub order: usize,
    pub central_unobstructed: usize,
    pub central_obstructed: usize,
    pub noncentral_obstructed: usize,
    pub noncentral_inconclusive: usize,
    /// Full data for every central-norm trial that was nonetheless obstructed.
    pub candidates: Vec<CounterexampleCandidate>,
}

enum TrialOutcome {
    CentralUnobstructed,
    CentralObstructed(CounterexampleCandidate),
    NoncentralObstructed,
    NoncentralInconclusive,
}

/// Per-trial generator: trial `i` uses stream `i` of the seeded ChaCha generator,
/// so results do not depend on scheduling.
pub fn trial_rng(seed: u64, trial: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial as u64);
    rng
}

/// Samples `trials` random units, splits them by centrality of `N_σ(u)` and
/// runs [`homothety_probe`] on each twist. Trials run in parallel; the summary
/// is identical to a sequential run.
pub fn conjecture_probe(
    alg: &Algebra,
    form: &Form,
    trials: usize,
    seed: u64,
    config: ProbeConfig,
) -> Result<ConjectureSummary> {
    let sigma = nakayama(alg, form)?;
    let order = automorphism_order(&sigma, config.order_bound).ok_or(Error::InfiniteOrder(config.order_bound))?;
    let ctx = NormContext::new(alg, sigma, order)?;
    let local = alg.local_structure().ok().flatten();

    let outcomes: Vec<TrialOutcome> = (0..trials)
        .into_par_iter()
        .map(|trial| -> Result<TrialOutcome> {
            let mut rng = trial_rng(seed, trial);
            let unit = match &local {
                Some(l) => l.sample_unit(alg, &mut rng),
                None => alg.sample_unit(&mut rng),
            };
            let n = norm(alg, &ctx, &unit)?;
            let central = alg.is_central(&n);
            let other = twist(alg, form, &unit)?;
            let report = homothety_probe(alg, form, &other, config)?;
            Ok(match (central, &report.verdict) {
                (true, Verdict::Obstructed(_)) => TrialOutcome::CentralObstructed(CounterexampleCandidate {
                    trial,
                    unit,
                    norm: n,
                    report,
                }),
                (true, _) => TrialOutcome::CentralUnobstructed,
                (false, Verdict::Obstructed(_)) => TrialOutcome::NoncentralObstructed,
                (false, Verdict::Inconclusive) => TrialOutcome::NoncentralInconclusive,
                (false, Verdict::WitnessFound(_)) => {
                    return Err(Error::Assertion(
                        "homothety witness for a unit with non-central norm".into(),
                    ))
                }
            })
        })
        .collect::<Result<_>>()?;

    let mut summary = ConjectureSummary {
        trials,
        seed,
        order,
        central_unobstructed: 0,
        central_obstructed: 0,
        noncentral_obstructed: 0,
        noncentral_inconclusive: 0,
        candidates: Vec::new(),
    };
    for outcome in outcomes {
        match outcome {
            TrialOutcome::CentralUnobstructed => summary.central_unobstructed += 1,
            TrialOutcome::CentralObstructed(c) => {
                summary.central_obstructed += 1;
                summary.candidates.push(c);
            }
            TrialOutcome::NoncentralObstructed => summary.noncentral_obstructed += 1,
            TrialOutcome::NoncentralInconclusive => summary.noncentral_inconclusive += 1,
        }
    }
    Ok(summary)
}
