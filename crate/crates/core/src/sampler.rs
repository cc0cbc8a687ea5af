//! Monte Carlo estimation of correlation expectations from simulated local
//! projective measurements.

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha20Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::correlations::CorrelationOperator;
use crate::error::{Error, Result};
use crate::exactnum::{ExactComplex, ExactScalar};
use crate::generators::{hs_project, Group};
use crate::linalg::{eig_hermitian, ExactMatrix, ExactVector, FloatMatrix, FloatVector};

/// Eigenvalues closer than this share an eigenspace.
const DEGENERACY_TOLERANCE: f64 = 1e-9;

/// `coefficient · obs_a ⊗ obs_b`, with `obs_a = g_l`, `obs_b = g_m`.
#[derive(Debug, Clone, PartialEq)]
pub struct PlanTerm {
    pub l: usize,
    pub m: usize,
    pub coefficient: ExactScalar,
    pub obs_a: ExactMatrix,
    pub obs_b: ExactMatrix,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MeasurementPlan {
    pub group: Group,
    pub terms: Vec<PlanTerm>,
}

impl MeasurementPlan {
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Σ coefficient · obs_a ⊗ obs_b`.
    pub fn reconstruct(&self) -> ExactMatrix {
        let n = self.group.dim() * self.group.dim();
        self.terms.iter().fold(ExactMatrix::zeros(n, n), |acc, t| {
            acc.add(&t.obs_a.kron(&t.obs_b).scale_real(&t.coefficient)).expect("same dimension")
        })
    }
}

/// One term per nonzero generator coefficient.
pub fn plan_from_operator(c: &CorrelationOperator) -> MeasurementPlan {
    let group = c.group();
    let grid = hs_project(c.matrix(), group).expect("operator dimension matches its group");
    let terms = grid
        .nonzero()
        .into_iter()
        .map(|(l, m, coeff)| {
            assert!(coeff.is_real(), "Hermitian operator has real generator coefficients");
            PlanTerm {
                l,
                m,
                coefficient: coeff.re,
                obs_a: group.generator(l).expect("index in range"),
                obs_b: group.generator(m).expect("index in range"),
            }
        })
        .collect();
    MeasurementPlan { group, terms }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SampleResult {
    pub estimate: f64,
    pub stderr: f64,
    pub shots_per_term: u64,
    pub seed: u64,
}

/// Eigenvalues with the projectors onto their eigenspaces.
fn spectral_projectors(obs: &ExactMatrix) -> Result<Vec<(f64, FloatMatrix)>> {
    let eig = eig_hermitian(&obs.to_float())?;
    let n = obs.rows();
    let mut groups: Vec<(Vec<f64>, FloatMatrix)> = Vec::new();
    for k in 0..n {
        let v = eig.vector(k);
        let p = v.outer(&v);
        let w = eig.values[k];
        match groups.last_mut() {
            Some((ws, acc)) if (ws[0] - w).abs() < DEGENERACY_TOLERANCE => {
                ws.push(w);
                *acc = acc.add(&p)?;
            }
            _ => groups.push((vec![w], p)),
        }
    }
    Ok(groups.into_iter().map(|(ws, p)| (ws.iter().sum::<f64>() / ws.len() as f64, p)).collect())
}

/// Joint outcome distribution of one term on one state.
#[derive(Debug, Clone)]
struct TermDistribution {
    coefficient: f64,
    values: Vec<f64>,
    cumulative: Vec<f64>,
}

impl TermDistribution {
    fn new(term: &PlanTerm, s: &FloatVector) -> Result<Self> {
        let pa = spectral_projectors(&term.obs_a)?;
        let pb = spectral_projectors(&term.obs_b)?;
        let mut values = Vec::with_capacity(pa.len() * pb.len());
        let mut probs = Vec::with_capacity(pa.len() * pb.len());
        for (a, p) in &pa {
            for (b, q) in &pb {
                let projected = p.kron(q).mat_vec(s)?;
                values.push(a * b);
                probs.push(projected.norm_sqr().re);
            }
        }
        let total: f64 = probs.iter().sum();
        let mut acc = 0.0;
        let cumulative = probs
            .iter()
            .map(|p| {
                acc += p / total;
                acc
            })
            .collect();
        Ok(Self { coefficient: term.coefficient.to_f64(), values, cumulative })
    }

    fn outcome(&self, u: f64) -> usize {
        self.cumulative.iter().position(|&c| u < c).unwrap_or(self.cumulative.len() - 1)
    }

    /// Outcome counts for `shots` draws from stream `term` of `seed`; draw
    /// `i` always reads counter words `2i` and `2i + 1`.
    fn counts(&self, shots: u64, seed: u64, term: u64) -> Vec<u64> {
        let mut rng = ChaCha20Rng::seed_from_u64(seed);
        rng.set_stream(term);
        let mut counts = vec![0u64; self.values.len()];
        for _ in 0..shots {
            let u = (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64);
            counts[self.outcome(u)] += 1;
        }
        counts
    }

    /// Sample mean and unbiased sample variance of the outcome products.
    fn moments(&self, counts: &[u64]) -> (f64, f64) {
        let n: u64 = counts.iter().sum();
        let nf = n as f64;
        let mean = counts.iter().zip(&self.values).map(|(&c, v)| c as f64 * v).sum::<f64>() / nf;
        if n < 2 {
            return (mean, 0.0);
        }
        let ss: f64 = counts.iter().zip(&self.values).map(|(&c, v)| c as f64 * (v - mean) * (v - mean)).sum();
        (mean, ss / (nf - 1.0))
    }
}

fn distributions(plan: &MeasurementPlan, s: &ExactVector, shots: u64) -> Result<Vec<TermDistribution>> {
    if shots == 0 {
        return Err(Error::ShotsZero);
    }
    let n = plan.group.dim() * plan.group.dim();
    if s.dim() != n {
        return Err(Error::DimensionMismatch(format!(
            "state of dimension {} for a {n}-dimensional plan",
            s.dim()
        )));
    }
    if !s.is_normalized() {
        return Err(Error::NotNormalized);
    }
    let f = s.to_float();
    plan.terms.iter().map(|t| TermDistribution::new(t, &f)).collect()
}

fn combine(dists: &[TermDistribution], counts: &[Vec<u64>], shots: u64, seed: u64) -> SampleResult {
    let mut estimate = 0.0;
    let mut variance = 0.0;
    for (d, c) in dists.iter().zip(counts) {
        let (mean, var) = d.moments(c);
        estimate += d.coefficient * mean;
        variance += d.coefficient * d.coefficient * var;
    }
    SampleResult { estimate, stderr: (variance / shots as f64).sqrt(), shots_per_term: shots, seed }
}

/// Estimates `⟨s|C|s⟩` from `shots` local measurements per term.
pub fn estimate(plan: &MeasurementPlan, s: &ExactVector, shots: u64, seed: u64) -> Result<SampleResult> {
    let dists = distributions(plan, s, shots)?;
    let counts: Vec<Vec<u64>> =
        dists.par_iter().enumerate().map(|(k, d)| d.counts(shots, seed, k as u64)).collect();
    Ok(combine(&dists, &counts, shots, seed))
}

/// As [`estimate`], split into `shards` parts run concurrently. Shard `k`
/// (`1..=shards`) draws with seed `seed ^ k`; counts are pooled in shard
/// order.
pub fn estimate_sharded(
    plan: &MeasurementPlan,
    s: &ExactVector,
    shots: u64,
    seed: u64,
    shards: u32,
) -> Result<SampleResult> {
    let dists = distributions(plan, s, shots)?;
    let shards = u64::from(shards.max(1)).min(shots);
    let per_shard: Vec<(u64, u64)> =
        (1..=shards).map(|k| (k, shots / shards + u64::from(k <= shots % shards))).collect();
    let shard_counts: Vec<Vec<Vec<u64>>> = per_shard
        .par_iter()
        .map(|&(k, n)| dists.iter().enumerate().map(|(t, d)| d.counts(n, seed ^ k, t as u64)).collect())
        .collect();
    let mut merged: Vec<Vec<u64>> = dists.iter().map(|d| vec![0; d.values.len()]).collect();
    for shard in &shard_counts {
        for (acc, c) in merged.iter_mut().zip(shard) {
            for (a, b) in acc.iter_mut().zip(c) {
                *a += b;
            }
        }
    }
    Ok(combine(&dists, &merged, shots, seed))
}

/// `⟨s|C|s⟩` of the plan's operator, exactly.
pub fn exact_value(plan: &MeasurementPlan, s: &ExactVector) -> Result<ExactComplex> {
    s.inner(&plan.reconstruct().mat_vec(s)?)
}
