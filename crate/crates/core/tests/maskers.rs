mod common;

use std::f64::consts::PI;

use common::*;
use num_complex::Complex64;
use proptest::prelude::*;
use qmask::latin::{cyclic_pair, mols_search, LatinSquare, MolsPair, DEFAULT_NODE_BUDGET};
use qmask::maskers::{
    bell_masker, check_set_equalities, embedded_masker, encode, mols_masker, shor_masker,
    InputState, Masker,
};
use qmask::state::{inner, MultiIndex};

fn order_four_pair() -> MolsPair {
    let v = LatinSquare::new(vec![
        vec![1, 2, 3, 4],
        vec![2, 1, 4, 3],
        vec![3, 4, 1, 2],
        vec![4, 3, 2, 1],
    ])
    .unwrap();
    let w = LatinSquare::new(vec![
        vec![1, 2, 3, 4],
        vec![4, 3, 2, 1],
        vec![2, 1, 4, 3],
        vec![3, 4, 1, 2],
    ])
    .unwrap();
    MolsPair::certify(v, w).unwrap()
}

fn all_maskers() -> Vec<Masker> {
    let mut out: Vec<Masker> = (2..=5).map(|d| bell_masker(d).unwrap()).collect();
    out.push(shor_masker());
    out.push(mols_masker(&order_four_pair()).unwrap());
    for d in [3, 5, 7] {
        out.push(mols_masker(&cyclic_pair(d).unwrap()).unwrap());
    }
    out.push(mols_masker(mols_search(4, DEFAULT_NODE_BUDGET).pair().unwrap()).unwrap());
    for d in [2, 4, 6] {
        out.push(embedded_masker(d).unwrap());
    }
    out
}

fn omega(d: usize, e: usize) -> Complex64 {
    Complex64::from_polar(1.0, 2.0 * PI * (e % d) as f64 / d as f64)
}

#[test]
fn gram_identity_for_every_masker() {
    for m in all_maskers() {
        assert!(m.gram_deviation() < 1e-12, "{} d={}", m.scheme(), m.input_dim());
        for img in m.images() {
            assert!((img.norm_sqr() - 1.0).abs() < 1e-12);
            assert_eq!(img.dims(), m.local_dims());
        }
    }
}

#[test]
fn support_counts() {
    for d in 2..=5 {
        let m = bell_masker(d).unwrap();
        assert!(m.images().iter().all(|s| s.nnz() == d.pow(d as u32)));
    }
    assert!(shor_masker().images().iter().all(|s| s.nnz() == 8));
    for d in [3, 5, 7] {
        let m = mols_masker(&cyclic_pair(d).unwrap()).unwrap();
        assert!(m.images().iter().all(|s| s.nnz() == d));
    }
    let m = mols_masker(&order_four_pair()).unwrap();
    assert!(m.images().iter().all(|s| s.nnz() == 4));
}

#[test]
fn qutrit_images() {
    let m = bell_masker(3).unwrap();
    let s3 = 1.0 / 3f64.sqrt();
    for l in 0..3 {
        // (|00⟩ + ω^l|11⟩ + ω^{2l}|22⟩)/√3, three times
        for (idx, amp) in m.image(l).iter() {
            let d = idx.digits();
            assert!(d[0] == d[1] && d[2] == d[3] && d[4] == d[5]);
            let expected: Complex64 = [d[0], d[2], d[4]]
                .iter()
                .map(|&j| omega(3, j * l) * s3)
                .product();
            assert!((amp - expected).norm() < 1e-15);
        }
    }
}

/// The 27 surviving kets `|j0 j0⟩|j1 j1⟩|j2 j2⟩` grouped by coefficient class.
/// The commonly quoted listing puts |11⟩|00⟩|22⟩ in the third class; it
/// belongs to the first (1+0+2 ≡ 0), and |11⟩|00⟩|11⟩ takes its place.
const QUTRIT_CLASSES: [[[usize; 3]; 9]; 3] = [
    [
        [0, 0, 0], [0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 1, 1],
        [1, 2, 0], [2, 0, 1], [2, 1, 0], [2, 2, 2],
    ],
    [
        [0, 0, 1], [0, 1, 0], [0, 2, 2], [1, 0, 0], [1, 1, 2],
        [1, 2, 1], [2, 0, 2], [2, 1, 1], [2, 2, 0],
    ],
    [
        [0, 0, 2], [0, 1, 1], [0, 2, 0], [1, 0, 1], [1, 1, 0],
        [1, 2, 2], [2, 0, 0], [2, 1, 2], [2, 2, 1],
    ],
];

#[test]
fn qutrit_classes_follow_the_sum_rule() {
    let mut seen = std::collections::HashSet::new();
    for (t, column) in QUTRIT_CLASSES.iter().enumerate() {
        for js in column {
            assert_eq!(js.iter().sum::<usize>() % 3, t, "{js:?}");
            assert!(seen.insert(*js));
        }
    }
    assert_eq!(seen.len(), 27);
    // the often-misplaced ket sits in the first class
    assert!(QUTRIT_CLASSES[0].contains(&[1, 0, 2]));
}

#[test]
fn qutrit_class_coefficients() {
    let m = bell_masker(3).unwrap();
    let mut r = rng(3);
    for _ in 0..5 {
        let a = random_unit(&mut r, 3);
        let psi = encode(&m, &InputState::new(a.clone()).unwrap()).unwrap();
        for (t, column) in QUTRIT_CLASSES.iter().enumerate() {
            let coeff = (a[0] + omega(3, t) * a[1] + omega(3, 2 * t) * a[2]) / 3.0 / 3f64.sqrt();
            for js in column {
                let idx = MultiIndex::new(js.iter().flat_map(|&j| [j, j]).collect());
                assert!((psi.amplitude(&idx) - coeff).norm() < 1e-13);
            }
        }
    }
    // |11⟩|22⟩|11⟩ carries the ω-class coefficient
    let a = [c(0.6, 0.0), c(0.0, 0.8), c(0.0, 0.0)];
    let psi = encode(&m, &InputState::new(a.to_vec()).unwrap()).unwrap();
    let expected = (a[0] + omega(3, 1) * a[1] + omega(3, 2) * a[2]) / 3.0 / 3f64.sqrt();
    let idx = MultiIndex::from([1, 1, 2, 2, 1, 1]);
    assert!((psi.amplitude(&idx) - expected).norm() < 1e-13);
}

#[test]
fn order_four_expansion() {
    let m = mols_masker(&order_four_pair()).unwrap();
    let (al, be, ga, de) = (c(0.1, 0.2), c(-0.3, 0.4), c(0.5, -0.1), c(0.2, 0.6));
    let norm = [al, be, ga, de].iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    let coeffs: Vec<Complex64> = [al, be, ga, de].iter().map(|z| z / norm).collect();
    let psi = encode(&m, &InputState::new(coeffs.clone()).unwrap()).unwrap();
    // 1-based triples
    let terms: [[[usize; 3]; 4]; 4] = [
        [[1, 1, 1], [2, 2, 2], [3, 3, 3], [4, 4, 4]],
        [[1, 2, 4], [2, 1, 3], [3, 4, 2], [4, 3, 1]],
        [[1, 3, 2], [2, 4, 1], [3, 1, 4], [4, 2, 3]],
        [[1, 4, 3], [2, 3, 4], [3, 2, 1], [4, 1, 2]],
    ];
    assert_eq!(psi.nnz(), 16);
    for (j, row) in terms.iter().enumerate() {
        for t in row {
            let idx = MultiIndex::new(t.iter().map(|x| x - 1).collect());
            assert!((psi.amplitude(&idx) - coeffs[j] / 2.0).norm() < 1e-15, "{t:?}");
        }
    }
}

#[test]
fn cyclic_three_images() {
    let m = mols_masker(&cyclic_pair(3).unwrap()).unwrap();
    for j in 0..3 {
        assert_eq!(m.image(j).nnz(), 3);
        for k in 0..3 {
            let g = inner(m.image(j), m.image(k)).unwrap();
            let target = if j == k { 1.0 } else { 0.0 };
            assert!((g - c(target, 0.0)).norm() < 1e-12);
        }
    }
}

#[test]
fn shor_basis_amplitudes() {
    let m = shor_masker();
    let a = 1.0 / (2.0 * 2f64.sqrt());
    for (bits, sign) in [([0, 0, 0], 1.0), ([1, 0, 0], -1.0), ([1, 1, 0], 1.0), ([1, 1, 1], -1.0)] {
        let digits: Vec<usize> = bits.iter().flat_map(|&b| [b, b, b]).collect();
        let idx = MultiIndex::new(digits);
        assert!((m.image(0).amplitude(&idx) - c(a, 0.0)).norm() < 1e-16);
        assert!((m.image(1).amplitude(&idx) - c(sign * a, 0.0)).norm() < 1e-16);
    }
}

#[test]
fn embedded_uses_leading_cyclic_images() {
    let full = mols_masker(&cyclic_pair(3).unwrap()).unwrap();
    let emb = embedded_masker(2).unwrap();
    assert_eq!(emb.images(), &full.images()[..2]);
    let six = embedded_masker(6).unwrap();
    assert_eq!(six.local_dims(), &[7, 7, 7]);
    assert_eq!(six.input_dim(), 6);
}

#[test]
fn set_equalities_hold_for_certified_pairs() {
    let mut pairs = vec![order_four_pair()];
    pairs.extend([3, 5, 7, 9].map(|d| cyclic_pair(d).unwrap()));
    pairs.extend([4, 5, 7].map(|d| mols_search(d, DEFAULT_NODE_BUDGET).into_pair().unwrap()));
    for p in pairs {
        check_set_equalities(p.first(), p.second()).unwrap();
    }
}

#[test]
fn encode_of_basis_is_the_image() {
    for m in all_maskers() {
        for j in 0..m.input_dim() {
            let x = InputState::basis(m.input_dim(), j).unwrap();
            assert_eq!(&encode(&m, &x).unwrap(), m.image(j));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn encode_is_linear(seed in any::<u64>(), which in 0usize..5) {
        let m = match which {
            0 => bell_masker(2).unwrap(),
            1 => bell_masker(3).unwrap(),
            2 => shor_masker(),
            3 => mols_masker(&order_four_pair()).unwrap(),
            _ => embedded_masker(4).unwrap(),
        };
        let d = m.input_dim();
        let mut r = rng(seed);
        let x: Vec<Complex64> = (0..d).map(|_| random_complex(&mut r)).collect();
        let y: Vec<Complex64> = (0..d).map(|_| random_complex(&mut r)).collect();
        let (a, b) = (random_complex(&mut r), random_complex(&mut r));
        let combo: Vec<Complex64> = x.iter().zip(&y).map(|(p, q)| a * p + b * q).collect();
        let lhs = encode(&m, &InputState::unnormalized(combo).unwrap()).unwrap();
        let ex = encode(&m, &InputState::unnormalized(x).unwrap()).unwrap();
        let ey = encode(&m, &InputState::unnormalized(y).unwrap()).unwrap();
        let support: std::collections::BTreeSet<_> =
            lhs.iter().chain(ex.iter()).chain(ey.iter()).map(|(k, _)| k.clone()).collect();
        for idx in support {
            let rhs = a * ex.amplitude(&idx) + b * ey.amplitude(&idx);
            prop_assert!((lhs.amplitude(&idx) - rhs).norm() <= 1e-12);
        }
    }

    #[test]
    fn encoding_preserves_norm(seed in any::<u64>()) {
        let mut r = rng(seed);
        for m in [bell_masker(3).unwrap(), shor_masker(), mols_masker(&cyclic_pair(5).unwrap()).unwrap()] {
            let x = InputState::new(random_unit(&mut r, m.input_dim())).unwrap();
            prop_assert!((encode(&m, &x).unwrap().norm() - 1.0).abs() <= 1e-10);
        }
    }
}
