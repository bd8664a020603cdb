//! Even d (including 6, where no orthogonal pair exists) goes into three
//! (d+1)-level systems by borrowing the order d+1 construction.

use qmask::maskers::embedded_masker;
use qmask::verifier::{masking_check, CheckOptions};

fn main() -> qmask::Result<()> {
    for d in [2, 4, 6, 8] {
        let m = embedded_masker(d)?;
        let r = masking_check(&m, &CheckOptions::default())?;
        println!("d={d}: local dims {:?}, worst {:e}, pass {}", m.local_dims(), r.worst_dev(), r.pass);
    }
    Ok(())
}
