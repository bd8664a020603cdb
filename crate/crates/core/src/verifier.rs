//! Numerical certification of the masking property.
//!
//! A masker passes when its images are orthonormal and every single-party
//! marginal equals the expected one (here always `I/dim`), both for the basis
//! images themselves and for pseudo-random superpositions of them.

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;
use rand_distr::{Distribution, StandardNormal};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::density::DensityMatrix;
use crate::error::{Error, Result};
use crate::maskers::{encode, root_of_unity_power, InputState, Masker, Scheme};
use crate::state::{partial_trace, partial_trace_general, SparseState};

pub const DEFAULT_SAMPLES: usize = 100;
pub const DEFAULT_SEED: u64 = 42;
pub const DEFAULT_TOL: f64 = 1e-10;

/// Deterministic unit input number `index` of the stream keyed by `seed`.
///
/// Real and imaginary parts are independent standard normals, so after
/// normalization the state is uniform on the unit sphere. The generator is
/// ChaCha20 with `seed` as key and `index` as stream, so each sample depends
/// only on `(seed, index)`.
pub fn sample_input(d: usize, seed: u64, index: u64) -> InputState {
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    rng.set_stream(index);
    loop {
        let coeffs: Vec<Complex64> = (0..d)
            .map(|_| {
                let re: f64 = StandardNormal.sample(&mut rng);
                let im: f64 = StandardNormal.sample(&mut rng);
                Complex64::new(re, im)
            })
            .collect();
        let norm = coeffs.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
        if norm > 0.0 {
            let coeffs = coeffs.into_iter().map(|c| c / norm).collect();
            return InputState::unnormalized(coeffs).expect("d >= 1");
        }
    }
}

/// Largest entry of `|G − I|`, `G_jk = ⟨Φ_j|Φ_k⟩`.
pub fn gram_check(m: &Masker) -> f64 {
    m.gram_deviation()
}

/// All single-party reduced states of `state`, in party order.
pub fn single_party_marginals(state: &SparseState) -> Result<Vec<DensityMatrix>> {
    (0..state.parties()).map(|p| partial_trace(state, p)).collect()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CheckOptions {
    pub samples: usize,
    pub seed: u64,
    pub tol: f64,
    /// Also compute minimum eigenvalues and trace-norm deviations.
    pub diagnostic: bool,
}

impl Default for CheckOptions {
    fn default() -> Self {
        Self {
            samples: DEFAULT_SAMPLES,
            seed: DEFAULT_SEED,
            tol: DEFAULT_TOL,
            diagnostic: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PartyDeviation {
    /// 1-based party label.
    pub party: usize,
    pub basis_dev: f64,
    pub superpos_dev: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Diagnostics {
    /// Smallest eigenvalue over every marginal computed.
    pub min_eigenvalue: f64,
    /// Largest `‖ρ − expected‖₁` over every marginal computed.
    pub max_trace_norm_dev: f64,
    /// Largest Hermiticity defect over every marginal computed.
    pub max_hermiticity_dev: f64,
}

/// Outcome of [`masking_check`]. Field order is the serialized order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MaskingReport {
    pub scheme: String,
    pub d: usize,
    pub parties: usize,
    pub local_dims: Vec<usize>,
    pub tol: f64,
    pub seed: u64,
    pub samples: usize,
    pub gram_dev: f64,
    pub basis_dev: f64,
    pub superpos_dev: f64,
    pub pass: bool,
    pub per_party: Vec<PartyDeviation>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub diagnostics: Option<Diagnostics>,
}

impl MaskingReport {
    pub fn worst_dev(&self) -> f64 {
        self.gram_dev.max(self.basis_dev).max(self.superpos_dev)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

struct Evaluation {
    devs: Vec<f64>,
    diag: Option<Diagnostics>,
}

fn evaluate(m: &Masker, state: &SparseState, diagnostic: bool) -> Result<Evaluation> {
    let marginals = single_party_marginals(state)?;
    let mut devs = Vec::with_capacity(marginals.len());
    let mut diag = diagnostic.then_some(Diagnostics {
        min_eigenvalue: f64::INFINITY,
        max_trace_norm_dev: 0.0,
        max_hermiticity_dev: 0.0,
    });
    for (rho, expected) in marginals.iter().zip(m.expected_marginals()) {
        devs.push(rho.max_abs_diff(expected)?);
        if let Some(d) = diag.as_mut() {
            d.min_eigenvalue = d.min_eigenvalue.min(rho.min_eigenvalue());
            d.max_trace_norm_dev = d.max_trace_norm_dev.max(rho.trace_norm_diff(expected)?);
            d.max_hermiticity_dev = d.max_hermiticity_dev.max(rho.hermiticity_dev());
        }
    }
    Ok(Evaluation { devs, diag })
}

fn merge_diag(acc: &mut Option<Diagnostics>, next: Option<Diagnostics>) {
    if let (Some(a), Some(b)) = (acc.as_mut(), next) {
        a.min_eigenvalue = a.min_eigenvalue.min(b.min_eigenvalue);
        a.max_trace_norm_dev = a.max_trace_norm_dev.max(b.max_trace_norm_dev);
        a.max_hermiticity_dev = a.max_hermiticity_dev.max(b.max_hermiticity_dev);
    }
}

fn nan_max(a: f64, b: f64) -> f64 {
    if a.is_nan() || b.is_nan() {
        f64::NAN
    } else {
        a.max(b)
    }
}

/// Checks every single-party marginal of every basis image and of `samples`
/// random superpositions against the masker's expected marginals.
///
/// Samples are evaluated in parallel; aggregation is a fold in sample order,
/// so the report is identical for identical `(masker, options)`.
pub fn masking_check(m: &Masker, opts: &CheckOptions) -> Result<MaskingReport> {
    if opts.samples == 0 {
        return Err(Error::Argument("samples must be at least 1".into()));
    }
    let parties = m.parties();
    let mut per_party: Vec<PartyDeviation> = (0..parties)
        .map(|p| PartyDeviation {
            party: p + 1,
            basis_dev: 0.0,
            superpos_dev: 0.0,
        })
        .collect();
    let mut diag = opts.diagnostic.then_some(Diagnostics {
        min_eigenvalue: f64::INFINITY,
        max_trace_norm_dev: 0.0,
        max_hermiticity_dev: 0.0,
    });

    let basis: Vec<Evaluation> = m
        .images()
        .par_iter()
        .map(|img| evaluate(m, img, opts.diagnostic))
        .collect::<Result<_>>()?;
    for ev in basis {
        for (pd, dev) in per_party.iter_mut().zip(&ev.devs) {
            pd.basis_dev = nan_max(pd.basis_dev, *dev);
        }
        merge_diag(&mut diag, ev.diag);
    }

    let sampled: Vec<Evaluation> = (0..opts.samples as u64)
        .into_par_iter()
        .map(|i| {
            let x = sample_input(m.input_dim(), opts.seed, i);
            evaluate(m, &encode(m, &x)?, opts.diagnostic)
        })
        .collect::<Result<_>>()?;
    for ev in sampled {
        for (pd, dev) in per_party.iter_mut().zip(&ev.devs) {
            pd.superpos_dev = nan_max(pd.superpos_dev, *dev);
        }
        merge_diag(&mut diag, ev.diag);
    }

    let gram_dev = gram_check(m);
    let basis_dev = per_party.iter().map(|p| p.basis_dev).fold(0.0, nan_max);
    let superpos_dev = per_party.iter().map(|p| p.superpos_dev).fold(0.0, nan_max);
    let worst = nan_max(nan_max(gram_dev, basis_dev), superpos_dev);
    Ok(MaskingReport {
        scheme: m.scheme().name().to_string(),
        d: m.input_dim(),
        parties,
        local_dims: m.local_dims().to_vec(),
        tol: opts.tol,
        seed: opts.seed,
        samples: opts.samples,
        gram_dev,
        basis_dev,
        superpos_dev,
        pass: worst <= opts.tol,
        per_party,
        diagnostics: diag,
    })
}

/// Deviation of the first-two-party marginal of `encode(m, x)` from
/// `Σ_k |α_k|² |ψ_k⟩⟨ψ_k|` built from the generalized Bell states.
pub fn two_party_check(m: &Masker, x: &InputState) -> Result<f64> {
    if m.scheme() != Scheme::Bell {
        return Err(Error::Argument(format!(
            "two-party check applies to the bell scheme, not {}",
            m.scheme()
        )));
    }
    let d = m.input_dim();
    let rho = partial_trace_general(&encode(m, x)?, &[0, 1])?;
    let mut expected = DensityMatrix::zeros(d * d);
    let norm = 1.0 / (d as f64).sqrt();
    for (k, alpha) in x.coeffs().iter().enumerate() {
        let mut psi = vec![Complex64::new(0.0, 0.0); d * d];
        for j in 0..d {
            psi[j * d + j] = root_of_unity_power(d, j * k) * norm;
        }
        expected.add_scaled(alpha.norm_sqr(), &DensityMatrix::projector(&psi))?;
    }
    rho.max_abs_diff(&expected)
}
