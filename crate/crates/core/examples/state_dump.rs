//! Round-trip a state and a masker through their JSON forms.

use qmask::io::{dump_masker, dump_state, load_masker, load_state};
use qmask::maskers::{encode, shor_masker};
use qmask::verifier::sample_input;

fn main() -> qmask::Result<()> {
    let m = shor_masker();
    let psi = encode(&m, &sample_input(2, 7, 0))?;
    let text = dump_state(&psi);
    println!("{text}");
    assert_eq!(load_state(&text)?, psi);

    let manifest = dump_masker(&m);
    let back = load_masker(&manifest)?;
    println!("manifest: {} bytes, {} images reloaded", manifest.len(), back.input_dim());
    Ok(())
}
