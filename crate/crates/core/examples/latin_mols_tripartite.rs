//! Three parties are enough: a pair of orthogonal Latin squares of order d
//! masks a d-level system into three d-level systems.

use qmask::latin::cyclic_pair;
use qmask::maskers::mols_masker;
use qmask::verifier::{masking_check, CheckOptions};

fn main() -> qmask::Result<()> {
    let d = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(5);
    let pair = cyclic_pair(d)?;
    println!("V =\n{}W =\n{}", pair.first(), pair.second());

    let m = mols_masker(&pair)?;
    let r = masking_check(&m, &CheckOptions::default())?;
    println!(
        "d={d}: {} parties, gram {:e}, basis {:e}, random {:e}, pass {}",
        r.parties, r.gram_dev, r.basis_dev, r.superpos_dev, r.pass
    );
    Ok(())
}
