//! The nine-qubit code as a masker: every single qubit is maximally mixed.

use qmask::maskers::shor_masker;
use qmask::verifier::{masking_check, CheckOptions};

fn main() -> qmask::Result<()> {
    let m = shor_masker();
    println!("parties: {}, terms per image: {}", m.parties(), m.image(0).nnz());
    let report = masking_check(&m, &CheckOptions::default())?;
    for p in &report.per_party {
        println!("qubit {}: basis {:e}, random {:e}", p.party, p.basis_dev, p.superpos_dev);
    }
    println!("pass: {}", report.pass);
    Ok(())
}
