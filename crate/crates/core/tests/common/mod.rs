#![allow(dead_code)]

use num_complex::Complex64;
use qmask::state::{MultiIndex, SparseState};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub fn random_complex(rng: &mut ChaCha8Rng) -> Complex64 {
    c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
}

pub fn random_unit(rng: &mut ChaCha8Rng, n: usize) -> Vec<Complex64> {
    loop {
        let v: Vec<Complex64> = (0..n).map(|_| random_complex(rng)).collect();
        let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm > 1e-3 {
            return v.into_iter().map(|z| z / norm).collect();
        }
    }
}

/// `k` orthonormal vectors in `C^n` by modified Gram–Schmidt on random draws.
pub fn random_orthonormal(rng: &mut ChaCha8Rng, n: usize, k: usize) -> Vec<Vec<Complex64>> {
    assert!(k <= n);
    let mut basis: Vec<Vec<Complex64>> = Vec::with_capacity(k);
    while basis.len() < k {
        let mut v: Vec<Complex64> = (0..n).map(|_| random_complex(rng)).collect();
        for b in &basis {
            let proj: Complex64 = b.iter().zip(&v).map(|(x, y)| x.conj() * y).sum();
            for (vi, bi) in v.iter_mut().zip(b) {
                *vi -= proj * bi;
            }
        }
        let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm > 1e-6 {
            basis.push(v.into_iter().map(|z| z / norm).collect());
        }
    }
    basis
}

/// Mixed-radix digits of `flat` (last party fastest).
pub fn unflatten(mut flat: usize, dims: &[usize]) -> Vec<usize> {
    let mut digits = vec![0; dims.len()];
    for (slot, &d) in digits.iter_mut().zip(dims).rev() {
        *slot = flat % d;
        flat /= d;
    }
    digits
}

/// Dense amplitude vector of a small state (last party fastest).
pub fn to_dense(s: &SparseState) -> Vec<Complex64> {
    let total: usize = s.dims().iter().product();
    let mut v = vec![c(0.0, 0.0); total];
    for (idx, amp) in s.iter() {
        let flat = idx.digits().iter().zip(s.dims()).fold(0, |acc, (&x, &d)| acc * d + x);
        v[flat] = *amp;
    }
    v
}

/// Brute-force single-party marginal from the dense vector: for every pair of
/// full basis states that agree off `keep`, add `ψ_a conj(ψ_b)`.
pub fn dense_marginal(s: &SparseState, keep: usize) -> Vec<Vec<Complex64>> {
    let dims = s.dims();
    let psi = to_dense(s);
    let dk = dims[keep];
    let mut rho = vec![vec![c(0.0, 0.0); dk]; dk];
    for (fa, a) in psi.iter().enumerate() {
        let da = unflatten(fa, dims);
        for (fb, b) in psi.iter().enumerate() {
            let db = unflatten(fb, dims);
            if (0..dims.len()).all(|p| p == keep || da[p] == db[p]) {
                rho[da[keep]][db[keep]] += a * b.conj();
            }
        }
    }
    rho
}

/// Random normalized state with random support on small random dims.
pub fn random_sparse_state(rng: &mut ChaCha8Rng) -> SparseState {
    let parties = rng.random_range(2..=4);
    let dims: Vec<usize> = (0..parties).map(|_| rng.random_range(2..=4)).collect();
    let total: usize = dims.iter().product();
    let support = rng.random_range(1..=total.min(12));
    let entries: Vec<(MultiIndex, Complex64)> = (0..support)
        .map(|_| {
            let flat = rng.random_range(0..total);
            (MultiIndex::new(unflatten(flat, &dims)), random_complex(rng))
        })
        .collect();
    let s = SparseState::new(dims.clone(), entries).unwrap();
    if s.nnz() == 0 {
        return random_sparse_state(rng);
    }
    s.normalized().unwrap()
}

/// A random orthonormal decomposition `Σ_k c_k |ψ_k⟩_p |μ_k⟩_rest` with the
/// kept party at a random position. Returns `(state, keep, coeffs, locals)`.
pub struct Decomposition {
    pub state: SparseState,
    pub keep: usize,
    pub coeffs: Vec<Complex64>,
    pub locals: Vec<Vec<Complex64>>,
}

pub fn random_decomposition(rng: &mut ChaCha8Rng) -> Decomposition {
    let others = rng.random_range(1..=2);
    let parties = others + 1;
    let dims: Vec<usize> = (0..parties).map(|_| rng.random_range(2..=5)).collect();
    let keep = rng.random_range(0..parties);
    let rest_dims: Vec<usize> = dims
        .iter()
        .enumerate()
        .filter(|&(p, _)| p != keep)
        .map(|(_, &d)| d)
        .collect();
    let rest_total: usize = rest_dims.iter().product();
    let terms = rng.random_range(1..=rest_total.min(6));
    let coeffs = random_unit(rng, terms);
    let locals: Vec<Vec<Complex64>> = (0..terms).map(|_| random_unit(rng, dims[keep])).collect();
    let mus = random_orthonormal(rng, rest_total, terms);

    let mut entries = Vec::new();
    for k in 0..terms {
        for (a, psi_a) in locals[k].iter().enumerate() {
            for (m, mu_m) in mus[k].iter().enumerate() {
                let mut digits = unflatten(m, &rest_dims);
                digits.insert(keep, a);
                entries.push((MultiIndex::new(digits), coeffs[k] * psi_a * mu_m));
            }
        }
    }
    Decomposition {
        state: SparseState::new(dims, entries).unwrap(),
        keep,
        coeffs,
        locals,
    }
}

pub fn max_dev(a: &[Vec<Complex64>], b: &qmask::density::DensityMatrix) -> f64 {
    let mut dev = 0.0f64;
    for (r, row) in a.iter().enumerate() {
        for (col, z) in row.iter().enumerate() {
            dev = dev.max((z - b.get(r, col)).norm());
        }
    }
    dev
}
