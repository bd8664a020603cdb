//! Masking schemes as orthonormal image families `|j⟩ → |Φ_j⟩`.
//!
//! Four constructions are provided:
//!
//! * [`bell_masker`]: `2d` parties of dimension `d`, each image a product of
//!   `d` generalized Bell states sharing the phase index.
//! * [`shor_masker`]: the 9-qubit Shor code viewed as a masker.
//! * [`mols_masker`]: three parties of dimension `d` built from an orthogonal
//!   pair of Latin squares.
//! * [`embedded_masker`]: even `d` embedded into the order-`(d+1)` cyclic
//!   construction.
//!
//! Every scheme here has maximally mixed single-party marginals.

use std::f64::consts::{FRAC_1_SQRT_2, PI};
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::density::DensityMatrix;
use crate::error::{Error, Result};
use crate::latin::{cyclic_pair, LatinSquare, MolsPair};
use crate::state::{inner, MultiIndex, SparseState};

/// Default upper bound on `d` for [`bell_masker`]; `d = 6` already means
/// 46656 nonzeros per image.
pub const DEFAULT_BELL_CAP: usize = 6;

/// Slack on `Σ|α|² = 1` for [`InputState::new`].
pub const INPUT_NORM_TOLERANCE: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Scheme {
    Bell,
    Shor,
    Mols,
    Embedded,
}

impl Scheme {
    pub fn name(self) -> &'static str {
        match self {
            Scheme::Bell => "bell",
            Scheme::Shor => "shor",
            Scheme::Mols => "mols",
            Scheme::Embedded => "embedded",
        }
    }
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Scheme {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "bell" => Ok(Scheme::Bell),
            "shor" => Ok(Scheme::Shor),
            "mols" => Ok(Scheme::Mols),
            "embedded" => Ok(Scheme::Embedded),
            other => Err(Error::Argument(format!(
                "unknown scheme {other:?} (expected bell, shor, mols or embedded)"
            ))),
        }
    }
}

/// A state of the system being masked: `Σ_l α_l |l⟩`.
#[derive(Debug, Clone, PartialEq)]
pub struct InputState {
    coeffs: Vec<Complex64>,
}

impl InputState {
    /// Requires `Σ|α_l|² = 1` within [`INPUT_NORM_TOLERANCE`].
    pub fn new(coeffs: Vec<Complex64>) -> Result<Self> {
        let n: f64 = coeffs.iter().map(|c| c.norm_sqr()).sum();
        if (n - 1.0).abs() > INPUT_NORM_TOLERANCE {
            return Err(Error::Argument(format!(
                "input coefficients are not normalized (sum |a|^2 = {n})"
            )));
        }
        Self::unnormalized(coeffs)
    }

    /// Skips the normalization check. Used for linearity checks.
    pub fn unnormalized(coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Argument("input state needs at least one coefficient".into()));
        }
        Ok(Self { coeffs })
    }

    /// `|j⟩` in dimension `dim`.
    pub fn basis(dim: usize, j: usize) -> Result<Self> {
        if j >= dim {
            return Err(Error::Argument(format!("basis index {j} out of range for dimension {dim}")));
        }
        let mut coeffs = vec![Complex64::new(0.0, 0.0); dim];
        coeffs[j] = Complex64::new(1.0, 0.0);
        Ok(Self { coeffs })
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }
}

/// An encoding `|j⟩ → |Φ_j⟩` into a multipartite system.
#[derive(Debug, Clone, PartialEq)]
pub struct Masker {
    scheme: Scheme,
    input_dim: usize,
    local_dims: Vec<usize>,
    images: Vec<SparseState>,
    expected_marginals: Vec<DensityMatrix>,
}

impl Masker {
    /// Wraps an arbitrary image family. Images must share `local_dims`, and
    /// the expected marginal of every party is `I/dim`. Orthonormality is not
    /// checked here; see [`crate::verifier::gram_check`].
    pub fn from_images(scheme: Scheme, local_dims: Vec<usize>, images: Vec<SparseState>) -> Result<Self> {
        if images.is_empty() {
            return Err(Error::Argument("a masker needs at least one image".into()));
        }
        if let Some(bad) = images.iter().find(|s| s.dims() != local_dims.as_slice()) {
            return Err(Error::DimensionMismatch(format!(
                "image dims {:?} differ from local dims {:?}",
                bad.dims(),
                local_dims
            )));
        }
        let expected_marginals = local_dims
            .iter()
            .map(|&d| DensityMatrix::maximally_mixed(d))
            .collect();
        Ok(Self {
            scheme,
            input_dim: images.len(),
            local_dims,
            images,
            expected_marginals,
        })
    }

    pub fn scheme(&self) -> Scheme {
        self.scheme
    }

    pub fn input_dim(&self) -> usize {
        self.input_dim
    }

    pub fn parties(&self) -> usize {
        self.local_dims.len()
    }

    pub fn local_dims(&self) -> &[usize] {
        &self.local_dims
    }

    pub fn images(&self) -> &[SparseState] {
        &self.images
    }

    pub fn image(&self, j: usize) -> &SparseState {
        &self.images[j]
    }

    pub fn expected_marginals(&self) -> &[DensityMatrix] {
        &self.expected_marginals
    }

    /// Largest `|⟨Φ_j|Φ_k⟩ − δ_jk|`.
    pub fn gram_deviation(&self) -> f64 {
        let mut dev = 0.0f64;
        for (j, a) in self.images.iter().enumerate() {
            for (k, b) in self.images.iter().enumerate().skip(j) {
                let g = inner(a, b).expect("images share dims");
                let target = if j == k { 1.0 } else { 0.0 };
                dev = dev.max((g - Complex64::new(target, 0.0)).norm());
            }
        }
        dev
    }
}

/// `ω^e` for `ω = e^{2πi/d}`, reducing `e mod d` first. Quarter turns are exact.
pub fn root_of_unity_power(d: usize, e: usize) -> Complex64 {
    let e = e % d;
    if e == 0 {
        Complex64::new(1.0, 0.0)
    } else if 2 * e == d {
        Complex64::new(-1.0, 0.0)
    } else if 4 * e == d {
        Complex64::new(0.0, 1.0)
    } else if 4 * e == 3 * d {
        Complex64::new(0.0, -1.0)
    } else {
        Complex64::from_polar(1.0, 2.0 * PI * e as f64 / d as f64)
    }
}

/// Generalized Bell state `|ψ_k⟩ = d^{-1/2} Σ_j ω^{jk} |jj⟩` on two parties.
pub fn generalized_bell(d: usize, k: usize) -> SparseState {
    let norm = 1.0 / (d as f64).sqrt();
    SparseState::new(
        vec![d, d],
        (0..d).map(|j| (MultiIndex::new(vec![j, j]), root_of_unity_power(d, j * k) * norm)),
    )
    .expect("digits are in range")
}

/// The `2d`-party masker with images `|Ψ_l⟩ = |ψ_l⟩^{⊗d}`, default cap.
pub fn bell_masker(d: usize) -> Result<Masker> {
    bell_masker_with_cap(d, DEFAULT_BELL_CAP)
}

/// [`bell_masker`] with an explicit dimension cap.
pub fn bell_masker_with_cap(d: usize, cap: usize) -> Result<Masker> {
    if d < 2 {
        return Err(Error::Argument(format!("bell masker needs d >= 2, got {d}")));
    }
    if d > cap {
        return Err(Error::ResourceCap { d, cap });
    }
    let amp = (d as f64).powf(-(d as f64) / 2.0);
    let terms = d.pow(d as u32);
    let images = (0..d)
        .map(|l| {
            let mut entries = Vec::with_capacity(terms);
            // enumerate (j_0, …, j_{d-1}) in lexicographic order
            let mut js = vec![0usize; d];
            for _ in 0..terms {
                let sum: usize = js.iter().sum();
                let digits: Vec<usize> = js.iter().flat_map(|&j| [j, j]).collect();
                // ω^{l·Σj}, both factors reduced mod d first
                entries.push((MultiIndex::new(digits), root_of_unity_power(d, (l * (sum % d)) % d) * amp));
                for slot in js.iter_mut().rev() {
                    *slot += 1;
                    if *slot < d {
                        break;
                    }
                    *slot = 0;
                }
            }
            SparseState::new(vec![d; 2 * d], entries)
        })
        .collect::<Result<Vec<_>>>()?;
    Masker::from_images(Scheme::Bell, vec![d; 2 * d], images)
}

/// The Shor code: `|0⟩, |1⟩ → ((|000⟩ ± |111⟩)/√2)^{⊗3}`.
pub fn shor_masker() -> Masker {
    let amp = FRAC_1_SQRT_2 * 0.5;
    let images = (0..2)
        .map(|sign_bit| {
            let entries = (0..8usize).map(|bits| {
                let blocks = [(bits >> 2) & 1, (bits >> 1) & 1, bits & 1];
                let digits: Vec<usize> = blocks.iter().flat_map(|&b| [b, b, b]).collect();
                let ones = blocks.iter().sum::<usize>();
                let sign = if sign_bit == 1 && ones % 2 == 1 { -1.0 } else { 1.0 };
                (MultiIndex::new(digits), Complex64::new(sign * amp, 0.0))
            });
            SparseState::new(vec![2; 9], entries).expect("digits are in range")
        })
        .collect();
    Masker::from_images(Scheme::Shor, vec![2; 9], images).expect("images share dims")
}

/// Checks the combinatorial facts behind the tripartite construction with
/// `u_jk = k`: every row of `U`, `V`, `W` is a permutation of `1..=d`, and
/// each of the cell maps `(u,v)`, `(u,w)`, `(v,w)` hits all `d²` pairs.
pub fn check_set_equalities(v: &LatinSquare, w: &LatinSquare) -> Result<()> {
    let d = v.order();
    if w.order() != d {
        return Err(Error::Argument("orders differ".into()));
    }
    let u = |_j: usize, k: usize| k + 1;
    let full_row = |f: &dyn Fn(usize, usize) -> usize, m: usize| {
        let mut seen = vec![false; d + 1];
        (0..d).all(|k| !std::mem::replace(&mut seen[f(m, k)], true))
    };
    let bijective = |f: &dyn Fn(usize, usize) -> usize, g: &dyn Fn(usize, usize) -> usize| {
        let mut seen = vec![false; d * d];
        (0..d).all(|j| {
            (0..d).all(|k| !std::mem::replace(&mut seen[(f(j, k) - 1) * d + g(j, k) - 1], true))
        })
    };
    let vf = |j: usize, k: usize| v.get(j, k);
    let wf = |j: usize, k: usize| w.get(j, k);
    for m in 0..d {
        if !(full_row(&u, m) && full_row(&vf, m) && full_row(&wf, m)) {
            return Err(Error::CertificationRequired);
        }
    }
    if !(bijective(&u, &vf) && bijective(&u, &wf) && bijective(&vf, &wf)) {
        return Err(Error::CertificationRequired);
    }
    Ok(())
}

/// Tripartite images `|Φ_j⟩ = d^{-1/2} Σ_k |k, v_jk, w_jk⟩` for the first
/// `rows` rows, without any orthogonality check. Digits are 0-based.
///
/// This is the raw map; [`mols_masker`] is the certified entry point.
pub fn tripartite_images(v: &LatinSquare, w: &LatinSquare, rows: usize) -> Result<Vec<SparseState>> {
    let d = v.order();
    if w.order() != d {
        return Err(Error::Argument("orders differ".into()));
    }
    if rows > d {
        return Err(Error::Argument(format!("{rows} rows requested from an order-{d} square")));
    }
    let amp = Complex64::new(1.0 / (d as f64).sqrt(), 0.0);
    (0..rows)
        .map(|j| {
            SparseState::new(
                vec![d; 3],
                (0..d).map(|k| (MultiIndex::new(vec![k, v.get(j, k) - 1, w.get(j, k) - 1]), amp)),
            )
        })
        .collect()
}

/// The tripartite masker of a certified orthogonal pair, order `d ≥ 3`.
pub fn mols_masker(pair: &MolsPair) -> Result<Masker> {
    if !pair.is_certified() {
        return Err(Error::CertificationRequired);
    }
    let d = pair.order();
    if d < 3 {
        return Err(Error::UnsupportedOrder {
            order: d,
            msg: "tripartite masking needs an order >= 3".into(),
        });
    }
    check_set_equalities(pair.first(), pair.second())?;
    let images = tripartite_images(pair.first(), pair.second(), d)?;
    Masker::from_images(Scheme::Mols, vec![d; 3], images)
}

/// Masks `d`-level states (even `d`) into `C^{d+1} ⊗ C^{d+1} ⊗ C^{d+1}` using
/// the first `d` images of the order-`(d+1)` cyclic construction.
pub fn embedded_masker(d: usize) -> Result<Masker> {
    if d < 2 || d % 2 == 1 {
        return Err(Error::Argument(format!(
            "embedding needs an even d >= 2, got {d} (use mols_masker with cyclic_pair for odd d)"
        )));
    }
    let pair = cyclic_pair(d + 1)?;
    check_set_equalities(pair.first(), pair.second())?;
    let images = tripartite_images(pair.first(), pair.second(), d)?;
    Masker::from_images(Scheme::Embedded, vec![d + 1; 3], images)
}

/// `Σ_l α_l |Φ_l⟩`.
pub fn encode(m: &Masker, x: &InputState) -> Result<SparseState> {
    if x.dim() != m.input_dim {
        return Err(Error::Argument(format!(
            "input has dimension {}, masker expects {}",
            x.dim(),
            m.input_dim
        )));
    }
    let terms: Vec<(Complex64, &SparseState)> = x.coeffs.iter().copied().zip(&m.images).collect();
    SparseState::linear_combination(&m.local_dims, &terms)
}
