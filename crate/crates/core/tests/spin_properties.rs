use hyperspin::spin::*;
use nalgebra::{DMatrix, DVector};
use proptest::prelude::*;

const TOL: f64 = 1e-12;

/// All doubled (j, m) pairs with j ≤ 4.
fn doubled_js() -> impl Iterator<Item = i32> {
    0..=8
}

#[test]
fn cg_orthogonality_up_to_four() {
    for tj1 in doubled_js() {
        for tj2 in doubled_js() {
            let allowed: Vec<i32> = ((tj1 - tj2).abs()..=tj1 + tj2).step_by(2).collect();
            for &tj in &allowed {
                for &tjp in &allowed {
                    for tm in (-tj.min(tjp)..=tj.min(tjp)).step_by(2) {
                        let mut sum = 0.0;
                        for tm1 in (-tj1..=tj1).step_by(2) {
                            let tm2 = tm - tm1;
                            sum += clebsch_gordan_doubled(tj1, tm1, tj2, tm2, tj, tm)
                                * clebsch_gordan_doubled(tj1, tm1, tj2, tm2, tjp, tm);
                        }
                        let expected = if tj == tjp { 1.0 } else { 0.0 };
                        assert!((sum - expected).abs() < 1e-13, "{tj1} {tj2} {tj} {tjp} {tm}");
                    }
                }
            }
            // completeness over (J, M) for every pair of product states
            for tm1 in (-tj1..=tj1).step_by(2) {
                for tm2 in (-tj2..=tj2).step_by(2) {
                    for tm1p in (-tj1..=tj1).step_by(2) {
                        let tm2p = tm1 + tm2 - tm1p;
                        if tm2p.abs() > tj2 {
                            continue;
                        }
                        let sum: f64 = allowed
                            .iter()
                            .map(|&tj| {
                                clebsch_gordan_doubled(tj1, tm1, tj2, tm2, tj, tm1 + tm2)
                                    * clebsch_gordan_doubled(tj1, tm1p, tj2, tm2p, tj, tm1 + tm2)
                            })
                            .sum();
                        let expected = if tm1 == tm1p { 1.0 } else { 0.0 };
                        assert!((sum - expected).abs() < 1e-13);
                    }
                }
            }
        }
    }
}

#[test]
fn cg_reference_values() {
    let c = clebsch_gordan(2.0, 2.0, 2.0, -2.0, 0.0, 0.0).unwrap();
    assert!((c - 1.0 / 5f64.sqrt()).abs() < 1e-14);
    let c = clebsch_gordan(1.0, -1.0, 1.0, 1.0, 0.0, 0.0).unwrap();
    assert!((c - 1.0 / 3f64.sqrt()).abs() < 1e-14);
    assert_eq!(clebsch_gordan(1.0, 0.0, 1.0, 1.0, 2.0, 0.0).unwrap(), 0.0);
}

/// Two-body f = 1 states as written out by hand, keyed by (F, M), as
/// `(m1, m2, coefficient)` triples.
fn tabulated_pair_states() -> Vec<((u32, i32), Vec<(i32, i32, f64)>)> {
    let r2 = 2f64.sqrt();
    let r3 = 3f64.sqrt();
    let r6 = 6f64.sqrt();
    vec![
        ((0, 0), vec![(-1, 1, 1.0 / r3), (0, 0, -1.0 / r3), (1, -1, 1.0 / r3)]),
        ((1, 0), vec![(-1, 1, -1.0 / r2), (1, -1, 1.0 / r2)]),
        ((1, 1), vec![(0, 1, -1.0 / r2), (1, 0, 1.0 / r2)]),
        ((1, -1), vec![(0, -1, 1.0 / r2), (-1, 0, -1.0 / r2)]),
        ((2, 0), vec![(-1, 1, 1.0 / r6), (0, 0, 1.0 / 1.5f64.sqrt()), (1, -1, 1.0 / r6)]),
        ((2, 1), vec![(0, 1, 1.0 / r2), (1, 0, 1.0 / r2)]),
        ((2, -1), vec![(0, -1, 1.0 / r2), (-1, 0, 1.0 / r2)]),
        ((2, 2), vec![(1, 1, 1.0)]),
        ((2, -2), vec![(-1, -1, 1.0)]),
    ]
}

#[test]
fn two_body_states_match_hand_expansion() {
    let computed = two_body_coupled_states(1).unwrap();
    for ((f2b, m), expected) in tabulated_pair_states() {
        let state = computed.iter().find(|s| s.f2b == f2b && s.m == m).unwrap();
        for (m1, m2, c) in expected {
            let got = state
                .coefficients
                .iter()
                .find(|t| t.0 == m1 && t.1 == m2)
                .map_or(0.0, |t| t.2);
            assert!((got - c).abs() < TOL, "|{f2b}{m}> at ({m1},{m2})");
        }
    }
}

/// Builds `Σ c |F₂ M₂⟩|m₃⟩` over the f = 1, M = 0 product block.
fn compose(block: &ProductSpinBlock, terms: &[((u32, i32), i32, f64)]) -> DVector<f64> {
    let pairs = tabulated_pair_states();
    let mut v = DVector::zeros(block.dim());
    for &(key, m3, c) in terms {
        let pair = &pairs.iter().find(|(k, _)| *k == key).unwrap().1;
        for &(m1, m2, cp) in pair {
            v[block.index_of([m1, m2, m3]).unwrap()] += c * cp;
        }
    }
    v
}

#[test]
fn three_body_states_match_hand_expansion() {
    let block = product_block(1, 0).unwrap();
    let r2 = 2f64.sqrt();
    let r3 = 3f64.sqrt();
    let cases: Vec<(u32, u32, Vec<((u32, i32), i32, f64)>)> = vec![
        (0, 1, vec![((1, -1), 1, 1.0 / r3), ((1, 0), 0, -1.0 / r3), ((1, 1), -1, 1.0 / r3)]),
        (1, 0, vec![((0, 0), 0, 1.0)]),
        (1, 1, vec![((1, -1), 1, -1.0 / r2), ((1, 1), -1, 1.0 / r2)]),
        (
            1,
            2,
            vec![
                ((2, -1), 1, 1.0 / (10.0f64 / 3.0).sqrt()),
                ((2, 0), 0, -1.0 / 2.5f64.sqrt()),
                ((2, 1), -1, 1.0 / (10.0f64 / 3.0).sqrt()),
            ],
        ),
        (
            2,
            1,
            vec![
                ((1, -1), 1, 1.0 / 6f64.sqrt()),
                ((1, 0), 0, 1.0 / 1.5f64.sqrt()),
                ((1, 1), -1, 1.0 / 6f64.sqrt()),
            ],
        ),
        (2, 2, vec![((2, -1), 1, -1.0 / r2), ((2, 1), -1, 1.0 / r2)]),
        (
            3,
            2,
            vec![
                ((2, -1), 1, 1.0 / 5f64.sqrt()),
                ((2, 0), 0, 1.0 / (5.0f64 / 3.0).sqrt()),
                ((2, 1), -1, 1.0 / 5f64.sqrt()),
            ],
        ),
    ];
    for (f3b, f2b, terms) in cases {
        let expected = compose(&block, &terms);
        let states = three_body_coupled_states(1, f3b, 0).unwrap();
        let state = states.iter().find(|s| s.f2b == f2b).unwrap();
        assert!((&state.coefficients - expected).amax() < TOL, "|{f3b}0({f2b})>");
    }
    let sub = symmetrize_states(1, 1, 0).unwrap();
    let weights = &sub.symmetric[0].weights;
    let w = |f2b: u32| weights.iter().find(|w| w.0 == f2b).unwrap().1;
    assert!((w(2) - 2.0 / 3.0).abs() < TOL);
    assert!((w(0) - 5f64.sqrt() / 3.0).abs() < TOL);
    let singlet = &three_body_coupled_states(1, 0, 0).unwrap()[0];
    assert_eq!(singlet.symmetry, Symmetry::Antisymmetric);
    let top = &three_body_coupled_states(1, 3, 0).unwrap()[0];
    assert_eq!(top.symmetry, Symmetry::Symmetric);
}

fn all_blocks() -> Vec<ProductSpinBlock> {
    let mut out = Vec::new();
    for f in [1u32, 2] {
        let top = 3 * f as i32;
        for m in -top..=top {
            out.push(product_block(f, m).unwrap());
        }
    }
    out
}

#[test]
fn projectors_are_orthonormal_and_complete() {
    for block in all_blocks() {
        let n = block.dim();
        let mut total = DMatrix::zeros(n, n);
        for f3b in block.total_spins() {
            let s = projector_matrix(&block, f3b).unwrap().matrix;
            let gram = &s * s.transpose();
            assert!((gram - DMatrix::identity(s.nrows(), s.nrows())).amax() < TOL);
            total += s.transpose() * &s;
        }
        assert!((total - DMatrix::identity(n, n)).amax() < TOL, "f={} M={}", block.f(), block.m_total());
    }
}

#[test]
fn exchange_eigenvalues_per_total_spin() {
    for block in all_blocks() {
        let x = exchange_operator_matrix(&block);
        let f = f64::from(block.f());
        let (p, m) = permutation_matrices(&block);
        assert!((&x * &p - &p * &x).amax() < TOL);
        assert!((&x * &m - &m * &x).amax() < TOL);
        for f3b in block.total_spins() {
            let s = projector_matrix(&block, f3b).unwrap().matrix;
            let big_f = f64::from(f3b);
            let eigenvalue = 0.5 * (big_f * (big_f + 1.0) - 3.0 * f * (f + 1.0));
            let st = s.transpose();
            assert!((&x * &st - &st * eigenvalue).amax() < TOL);
        }
    }
    let block = product_block(1, 0).unwrap();
    assert!((exchange_operator_matrix(&block).trace() + 6.0).abs() < TOL);
}

#[test]
fn odd_pair_states_flip_sign_under_swap() {
    for f in [1, 2] {
        for state in two_body_coupled_states(f).unwrap() {
            let sign = if state.f2b % 2 == 0 { 1.0 } else { -1.0 };
            for &(m1, m2, c) in &state.coefficients {
                let swapped = state
                    .coefficients
                    .iter()
                    .find(|t| t.0 == m2 && t.1 == m1)
                    .map_or(0.0, |t| t.2);
                assert!((swapped - sign * c).abs() < TOL);
            }
        }
    }
}

fn species_strategy() -> impl Strategy<Value = SpinorSpecies> {
    (1u32..=2, prop::collection::vec(-50.0f64..50.0, 3)).prop_map(|(f, a)| {
        let lengths: Vec<(u32, f64)> = (0..=f).map(|i| (2 * i, a[i as usize])).collect();
        SpinorSpecies::new(f, &lengths).unwrap()
    })
}

proptest! {
    #[test]
    fn spectator_relabeling_holds(species in species_strategy(), m_seed in 0i32..100) {
        let top = 3 * species.f() as i32;
        let m = m_seed % (2 * top + 1) - top;
        let block = product_block(species.f(), m).unwrap();
        let (p, q) = permutation_matrices(&block);
        let a1 = pair_scattering_matrix(&block, 1, &species).unwrap();
        let a2 = pair_scattering_matrix(&block, 2, &species).unwrap();
        let a3 = pair_scattering_matrix(&block, 3, &species).unwrap();
        prop_assert!((&q * &a1 * &p - a2).amax() < 1e-11);
        prop_assert!((&p * &a1 * &q - a3).amax() < 1e-11);
        prop_assert!((&a1 - a1.transpose()).amax() < 1e-12);
    }

    #[test]
    fn coupled_states_are_orthonormal(f in 1u32..=2, f3b_seed in 0u32..7, m_seed in 0i32..13) {
        let f3b = f3b_seed % (3 * f + 1);
        let m = m_seed % (2 * f3b as i32 + 1) - f3b as i32;
        let states = three_body_coupled_states(f, f3b, m).unwrap();
        for (i, a) in states.iter().enumerate() {
            prop_assert!((a.coefficients.norm() - 1.0).abs() < 1e-12);
            for b in states.iter().skip(i + 1) {
                prop_assert!(a.coefficients.dot(&b.coefficients).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn cg_exchange_symmetry(tj1 in 0i32..=6, tj2 in 0i32..=6, k in 0i32..=12, a in 0i32..=12, b in 0i32..=12) {
        let tj = (tj1 - tj2).abs() + 2 * (k % ((tj1 + tj2 - (tj1 - tj2).abs()) / 2 + 1));
        let tm1 = -tj1 + 2 * (a % (tj1 + 1));
        let tm2 = -tj2 + 2 * (b % (tj2 + 1));
        let phase = if ((tj1 + tj2 - tj) / 2) % 2 == 0 { 1.0 } else { -1.0 };
        let lhs = clebsch_gordan_doubled(tj1, tm1, tj2, tm2, tj, tm1 + tm2);
        let rhs = clebsch_gordan_doubled(tj2, tm2, tj1, tm1, tj, tm1 + tm2);
        prop_assert!((lhs - phase * rhs).abs() < 1e-13);
    }
}
