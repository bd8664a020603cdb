//! Masking quantum information in multipartite systems.
//!
//! An encoding `|j⟩ → |Φ_j⟩` of a `d`-level system into several parties
//! *masks* the input when every single-party reduced state is the same for
//! all inputs. This crate builds the known constructions (generalized-Bell
//! products, the Shor code, and tripartite schemes from orthogonal Latin
//! squares), checks them numerically, and carries the Latin-square
//! combinatorics they need.
//!
//! ```
//! use qmask::maskers::{bell_masker, encode, InputState};
//! use qmask::state::partial_trace;
//! use qmask::density::DensityMatrix;
//! use num_complex::Complex64;
//!
//! let m = bell_masker(2).unwrap();
//! let x = InputState::new(vec![Complex64::new(0.6, 0.0), Complex64::new(0.0, 0.8)]).unwrap();
//! let psi = encode(&m, &x).unwrap();
//! let rho = partial_trace(&psi, 0).unwrap();
//! assert!(rho.max_abs_diff(&DensityMatrix::maximally_mixed(2)).unwrap() < 1e-12);
//! ```

pub mod cli;
pub mod density;
pub mod error;
pub mod io;
pub mod latin;
pub mod maskers;
pub mod state;
pub mod verifier;

pub use error::{Error, Result};
