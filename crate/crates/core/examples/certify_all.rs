//! Certify every construction and print a small table.

use qmask::latin::cyclic_pair;
use qmask::maskers::{bell_masker, embedded_masker, mols_masker, shor_masker, Masker};
use qmask::verifier::{masking_check, CheckOptions};

fn main() -> qmask::Result<()> {
    let mut grid: Vec<Masker> = (2..=5).map(bell_masker).collect::<qmask::Result<_>>()?;
    grid.push(shor_masker());
    for d in [3, 5, 7] {
        grid.push(mols_masker(&cyclic_pair(d)?)?);
    }
    for d in [2, 4, 6] {
        grid.push(embedded_masker(d)?);
    }

    let opts = CheckOptions::default();
    println!("{:<9} {:>2} {:>7} {:>12} {:>5}", "scheme", "d", "parties", "worst", "pass");
    for m in &grid {
        let r = masking_check(m, &opts)?;
        println!("{:<9} {:>2} {:>7} {:>12.3e} {:>5}", r.scheme, r.d, r.parties, r.worst_dev(), r.pass);
    }
    Ok(())
}
