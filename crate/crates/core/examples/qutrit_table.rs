//! Six-qutrit encoding: the 27 nonzero amplitudes fall into three classes
//! keyed by (j0 + j1 + j2) mod 3.

use num_complex::Complex64;
use qmask::maskers::{bell_masker, encode, InputState};
use qmask::state::MultiIndex;

fn main() -> qmask::Result<()> {
    let m = bell_masker(3)?;
    let s = 1.0 / 3f64.sqrt();
    let x = InputState::new(vec![
        Complex64::new(s, 0.0),
        Complex64::new(0.0, s),
        Complex64::new(-s, 0.0),
    ])?;
    let psi = encode(&m, &x)?;

    for t in 0..3 {
        println!("class t={t}:");
        for j0 in 0..3 {
            for j1 in 0..3 {
                let j2 = (3 + t - (j0 + j1) % 3) % 3;
                let idx = MultiIndex::new(vec![j0, j0, j1, j1, j2, j2]);
                let a = psi.amplitude(&idx);
                println!("  {idx}  {:+.5}{:+.5}i", a.re, a.im);
            }
        }
    }
    Ok(())
}
