//! Mask a qubit into four qubits and watch every local state stay I/2.

use num_complex::Complex64;
use qmask::density::DensityMatrix;
use qmask::maskers::{bell_masker, encode, InputState};
use qmask::state::partial_trace;

fn main() -> qmask::Result<()> {
    let m = bell_masker(2)?;
    let x = InputState::new(vec![Complex64::new(0.6, 0.0), Complex64::new(0.0, 0.8)])?;
    let psi = encode(&m, &x)?;

    println!("encoded state ({} terms):", psi.nnz());
    for (idx, amp) in psi.iter() {
        println!("  {idx}  {:+.4}{:+.4}i", amp.re, amp.im);
    }

    let target = DensityMatrix::maximally_mixed(2);
    for party in 0..psi.parties() {
        let rho = partial_trace(&psi, party)?;
        println!("party {}: |rho - I/2|_max = {:e}", party + 1, rho.max_abs_diff(&target)?);
    }
    Ok(())
}
