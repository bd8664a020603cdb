//! Sparse multipartite pure states and their reduced density matrices.
//!
//! A [`SparseState`] stores only the nonzero amplitudes of a pure state on
//! `C^{d_1} ⊗ … ⊗ C^{d_n}`, keyed by [`MultiIndex`]. Masked states have at most
//! `d^d` nonzeros inside spaces of dimension up to `d^{2d}`, so nothing here
//! ever materializes a dense state vector.
//!
//! Digits are 0-based in memory. The JSON dump (see [`crate::io`]) is 1-based.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_complex::Complex64;

use crate::density::DensityMatrix;
use crate::error::{Error, Result};

/// Amplitudes with magnitude below this are dropped after arithmetic.
pub const PRUNE_THRESHOLD: f64 = 1e-14;

/// Slack on `Σ|amp|² = 1` before `partial_trace` flags a state as non-normalized.
pub const NORM_TOLERANCE: f64 = 1e-10;

/// One computational-basis label per party.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiIndex(Vec<usize>);

impl MultiIndex {
    pub fn new(digits: Vec<usize>) -> Self {
        MultiIndex(digits)
    }

    pub fn digits(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn check(&self, dims: &[usize]) -> Result<()> {
        if self.0.len() != dims.len() {
            return Err(Error::DimensionMismatch(format!(
                "index {self} has {} digits, state has {} parties",
                self.0.len(),
                dims.len()
            )));
        }
        for (party, (&digit, &dim)) in self.0.iter().zip(dims).enumerate() {
            if digit >= dim {
                return Err(Error::DimensionMismatch(format!(
                    "digit {digit} of party {party} out of range for dimension {dim}"
                )));
            }
        }
        Ok(())
    }
}

impl From<Vec<usize>> for MultiIndex {
    fn from(v: Vec<usize>) -> Self {
        MultiIndex(v)
    }
}

impl<const N: usize> From<[usize; N]> for MultiIndex {
    fn from(v: [usize; N]) -> Self {
        MultiIndex(v.to_vec())
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "|")?;
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, "⟩")
    }
}

/// A multipartite pure state as a map from basis labels to amplitudes.
///
/// Absent keys have amplitude zero. Iteration is lexicographic in the index.
#[derive(Debug, Clone, PartialEq)]
pub struct SparseState {
    dims: Vec<usize>,
    amps: BTreeMap<MultiIndex, Complex64>,
}

impl SparseState {
    /// Builds a state from `(index, amplitude)` pairs. Duplicates are summed,
    /// near-zero results pruned. The state is not normalized.
    pub fn new<I>(dims: Vec<usize>, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (MultiIndex, Complex64)>,
    {
        if dims.is_empty() || dims.contains(&0) {
            return Err(Error::DimensionMismatch(format!(
                "party dimensions must be positive and non-empty, got {dims:?}"
            )));
        }
        let mut amps = BTreeMap::new();
        for (idx, amp) in entries {
            idx.check(&dims)?;
            *amps.entry(idx).or_insert(Complex64::new(0.0, 0.0)) += amp;
        }
        let mut state = Self { dims, amps };
        state.prune();
        Ok(state)
    }

    /// The empty (zero) vector on the given parties.
    pub fn zero(dims: Vec<usize>) -> Result<Self> {
        Self::new(dims, std::iter::empty())
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn parties(&self) -> usize {
        self.dims.len()
    }

    /// Number of stored (nonzero) amplitudes.
    pub fn nnz(&self) -> usize {
        self.amps.len()
    }

    pub fn amplitude(&self, idx: &MultiIndex) -> Complex64 {
        self.amps.get(idx).copied().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&MultiIndex, &Complex64)> {
        self.amps.iter()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.values().map(|a| a.norm_sqr()).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn scaled(&self, factor: Complex64) -> Self {
        let mut out = Self {
            dims: self.dims.clone(),
            amps: self.amps.iter().map(|(k, v)| (k.clone(), v * factor)).collect(),
        };
        out.prune();
        out
    }

    /// Returns `self / ‖self‖`. Errors on the zero vector.
    pub fn normalized(&self) -> Result<Self> {
        let n = self.norm();
        if n == 0.0 {
            return Err(Error::Argument("cannot normalize the zero vector".into()));
        }
        Ok(self.scaled(Complex64::new(1.0 / n, 0.0)))
    }

    /// `Σ_i c_i |s_i⟩`, pruned. All terms must share `dims`.
    pub fn linear_combination(dims: &[usize], terms: &[(Complex64, &SparseState)]) -> Result<Self> {
        let mut amps: BTreeMap<MultiIndex, Complex64> = BTreeMap::new();
        for (coeff, state) in terms {
            if state.dims != dims {
                return Err(Error::DimensionMismatch(format!(
                    "term dims {:?} differ from {:?}",
                    state.dims, dims
                )));
            }
            if *coeff == Complex64::new(0.0, 0.0) {
                continue;
            }
            for (idx, amp) in &state.amps {
                *amps.entry(idx.clone()).or_default() += coeff * amp;
            }
        }
        let mut out = Self {
            dims: dims.to_vec(),
            amps,
        };
        out.prune();
        Ok(out)
    }

    /// Kronecker product `self ⊗ other`; parties of `other` follow those of `self`.
    pub fn tensor(&self, other: &SparseState) -> SparseState {
        let mut dims = self.dims.clone();
        dims.extend_from_slice(&other.dims);
        let mut amps = BTreeMap::new();
        for (a, x) in &self.amps {
            for (b, y) in &other.amps {
                let mut digits = a.0.clone();
                digits.extend_from_slice(&b.0);
                amps.insert(MultiIndex(digits), x * y);
            }
        }
        let mut out = SparseState { dims, amps };
        out.prune();
        out
    }

    /// Mixed-radix strides (last party fastest), or `None` if the full
    /// dimension does not fit in `u128`.
    fn flat_strides(&self) -> Option<Vec<u128>> {
        let mut strides = vec![0u128; self.dims.len()];
        let mut acc: u128 = 1;
        for (s, &d) in strides.iter_mut().zip(&self.dims).rev() {
            *s = acc;
            acc = acc.checked_mul(d as u128)?;
        }
        Some(strides)
    }

    fn prune(&mut self) {
        self.amps.retain(|_, a| a.norm() >= PRUNE_THRESHOLD);
    }
}

/// `⟨a|b⟩ = Σ conj(a_i) b_i` over the shared support.
pub fn inner(a: &SparseState, b: &SparseState) -> Result<Complex64> {
    if a.dims != b.dims {
        return Err(Error::DimensionMismatch(format!(
            "inner product of states with dims {:?} and {:?}",
            a.dims, b.dims
        )));
    }
    let (small, large, conj_small) = if a.nnz() <= b.nnz() {
        (a, b, true)
    } else {
        (b, a, false)
    };
    let mut acc = Complex64::new(0.0, 0.0);
    for (idx, x) in &small.amps {
        if let Some(y) = large.amps.get(idx) {
            acc += if conj_small { x.conj() * y } else { y.conj() * x };
        }
    }
    Ok(acc)
}

/// Side information recorded by [`partial_trace_with_diagnostics`].
#[derive(Debug, Clone, PartialEq)]
pub struct TraceDiagnostics {
    /// `Σ|amp|²` of the input.
    pub norm_sqr: f64,
    pub warning: Option<String>,
}

fn flatten(idx: &MultiIndex, strides: &[u128]) -> u128 {
    idx.0.iter().zip(strides).map(|(&d, &s)| d as u128 * s).sum()
}

/// Reduced state of party `keep`.
///
/// For each stored amplitude with digit `a` at `keep`, the partner amplitudes
/// sharing every other digit are looked up directly by flattened index. No orthonormality is
/// assumed. A non-normalized input is traced as-is (trace equals `‖ψ‖²`).
pub fn partial_trace(state: &SparseState, keep: usize) -> Result<DensityMatrix> {
    partial_trace_with_diagnostics(state, keep).map(|(rho, _)| rho)
}

/// [`partial_trace`] plus the normalization diagnostics.
pub fn partial_trace_with_diagnostics(
    state: &SparseState,
    keep: usize,
) -> Result<(DensityMatrix, TraceDiagnostics)> {
    if keep >= state.parties() {
        return Err(Error::Argument(format!(
            "party {keep} out of range for a {}-party state",
            state.parties()
        )));
    }
    let dim = state.dims[keep];
    let mut rho = DensityMatrix::zeros(dim);
    match state.flat_strides() {
        Some(strides) => {
            let flat: HashMap<u128, Complex64> = state
                .amps
                .iter()
                .map(|(idx, amp)| (flatten(idx, &strides), *amp))
                .collect();
            let stride = strides[keep];
            for (idx, amp) in &state.amps {
                let a = idx.0[keep];
                let base = flatten(idx, &strides) - a as u128 * stride;
                for b in 0..dim {
                    if let Some(partner) = flat.get(&(base + b as u128 * stride)) {
                        rho.add_to(a, b, amp * partner.conj());
                    }
                }
            }
        }
        None => {
            let mut probe = MultiIndex(vec![0; state.parties()]);
            for (idx, amp) in &state.amps {
                let a = idx.0[keep];
                probe.0.copy_from_slice(&idx.0);
                for b in 0..dim {
                    probe.0[keep] = b;
                    if let Some(partner) = state.amps.get(&probe) {
                        rho.add_to(a, b, amp * partner.conj());
                    }
                }
            }
        }
    }
    let norm_sqr = state.norm_sqr();
    let warning = ((norm_sqr - 1.0).abs() > NORM_TOLERANCE).then(|| {
        format!("input state is not normalized (norm^2 = {norm_sqr}); reduced state not rescaled")
    });
    Ok((rho, TraceDiagnostics { norm_sqr, warning }))
}

/// Joint reduced state on the strictly increasing party subset `keep`.
///
/// Row and column indices are the mixed-radix flattening of the kept digits,
/// first kept party most significant. Amplitudes are grouped by their digits on
/// the traced-out parties and each group contributes its outer product.
pub fn partial_trace_general(state: &SparseState, keep: &[usize]) -> Result<DensityMatrix> {
    if keep.is_empty() {
        return Err(Error::Argument("kept party subset is empty".into()));
    }
    if keep.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Argument(format!(
            "kept parties must be strictly increasing, got {keep:?}"
        )));
    }
    if let Some(&last) = keep.last() {
        if last >= state.parties() {
            return Err(Error::Argument(format!(
                "party {last} out of range for a {}-party state",
                state.parties()
            )));
        }
    }
    let mut kept_mask = vec![false; state.parties()];
    for &p in keep {
        kept_mask[p] = true;
    }
    let dim: usize = keep.iter().map(|&p| state.dims[p]).product();

    let mut groups: BTreeMap<Vec<usize>, Vec<(usize, Complex64)>> = BTreeMap::new();
    for (idx, amp) in &state.amps {
        let mut row = 0usize;
        let mut rest = Vec::with_capacity(state.parties() - keep.len());
        for (p, &digit) in idx.0.iter().enumerate() {
            if kept_mask[p] {
                row = row * state.dims[p] + digit;
            } else {
                rest.push(digit);
            }
        }
        groups.entry(rest).or_default().push((row, *amp));
    }

    let mut rho = DensityMatrix::zeros(dim);
    for members in groups.values() {
        for &(r, x) in members {
            for &(c, y) in members {
                rho.add_to(r, c, x * y.conj());
            }
        }
    }
    Ok(rho)
}

/// `Σ_k |c_k|² |ψ_k⟩⟨ψ_k|`: the reduced state of `Σ_k c_k |ψ_k⟩|μ_k⟩` when the
/// complementary factors `μ_k` are orthonormal.
///
/// Any decomposition length is accepted; the closed form itself places no
/// bound on it beyond the orthonormality of the `μ_k`.
pub fn lemma_a_trace(coeffs: &[Complex64], locals: &[Vec<Complex64>]) -> Result<DensityMatrix> {
    if coeffs.len() != locals.len() {
        return Err(Error::Argument(format!(
            "{} coefficients but {} local states",
            coeffs.len(),
            locals.len()
        )));
    }
    let Some(first) = locals.first() else {
        return Err(Error::Argument("empty decomposition".into()));
    };
    let dim = first.len();
    if locals.iter().any(|v| v.len() != dim) {
        return Err(Error::DimensionMismatch(
            "local states have differing dimensions".into(),
        ));
    }
    let mut rho = DensityMatrix::zeros(dim);
    for (c, psi) in coeffs.iter().zip(locals) {
        rho.add_scaled(c.norm_sqr(), &DensityMatrix::projector(psi))?;
    }
    Ok(rho)
}
