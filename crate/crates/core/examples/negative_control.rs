//! Pairing a Latin square with itself still gives orthonormal images that
//! each look masked, yet superpositions leak. The verifier catches it.

use num_complex::Complex64;
use qmask::latin::read_square;
use qmask::maskers::{encode, tripartite_images, InputState, Masker, Scheme};
use qmask::state::partial_trace;
use qmask::verifier::{masking_check, CheckOptions};

fn main() -> qmask::Result<()> {
    let v = read_square("1 2 3 4\n2 1 4 3\n3 4 1 2\n4 3 2 1\n")?;
    let m = Masker::from_images(Scheme::Mols, vec![4; 3], tripartite_images(&v, &v, 4)?)?;

    let r = masking_check(&m, &CheckOptions::default())?;
    println!("gram {:e}, basis {:e}, random {:e}, pass {}", r.gram_dev, r.basis_dev, r.superpos_dev, r.pass);

    let uniform = InputState::new(vec![Complex64::new(0.5, 0.0); 4])?;
    let rho = partial_trace(&encode(&m, &uniform)?, 0)?;
    println!("first party for the uniform input:\n{}", rho.matrix());
    Ok(())
}
