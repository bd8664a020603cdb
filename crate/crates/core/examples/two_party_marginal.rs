//! Two adjacent parties of the Bell-pair masker hold a mixture of
//! generalized Bell states weighted by |alpha_k|^2.

use qmask::maskers::bell_masker;
use qmask::verifier::{sample_input, two_party_check};

fn main() -> qmask::Result<()> {
    for d in 2..=4 {
        let m = bell_masker(d)?;
        let worst = (0..50)
            .map(|i| two_party_check(&m, &sample_input(d, 42, i)))
            .collect::<qmask::Result<Vec<f64>>>()?
            .into_iter()
            .fold(0.0, f64::max);
        println!("d={d}: worst deviation over 50 inputs {worst:e}");
    }
    Ok(())
}
