//! Acceptance suite: one test per criterion, each printing a PASS line when
//! its assertions hold. Run with `cargo test --test acceptance -- --nocapture`
//! to see the lines.

mod support;

use std::time::Instant;

use num_bigint::BigInt;
use rand::{Rng as _, SeedableRng};
use rand_chacha::ChaCha8Rng;

use quasicartan::companion::{c_plus, find_positive_companion, verify_companion, SearchOptions};
use quasicartan::io::parse_matrix_text;
use quasicartan::matrix::IntMatrix;
use quasicartan::oracle::{cycle_symmetrizable, exhaustive_companion};
use quasicartan::positivity::{all_principal_minors_positive, is_positive};
use quasicartan::symmetrize::{check_skew_symmetrizable, check_symmetrizable};

use support::*;

fn ints(xs: &[i64]) -> Vec<BigInt> {
    xs.iter().map(|&x| BigInt::from(x)).collect()
}

/// All 3x3 skew-symmetric-by-signs matrices with |b_ij| <= 2: every unordered
/// pair is (0, 0) or an opposite-sign pair with magnitudes in {1, 2}.
fn all_3x3_skew_sign_patterns() -> Vec<IntMatrix> {
    let mut pair_options: Vec<(i64, i64)> = vec![(0, 0)];
    for a in [1i64, 2] {
        for b in [1i64, 2] {
            pair_options.push((a, -b));
            pair_options.push((-a, b));
        }
    }
    let mut out = Vec::new();
    for &p01 in &pair_options {
        for &p02 in &pair_options {
            for &p12 in &pair_options {
                let mut b = IntMatrix::zero(3);
                b[(0, 1)] = BigInt::from(p01.0);
                b[(1, 0)] = BigInt::from(p01.1);
                b[(0, 2)] = BigInt::from(p02.0);
                b[(2, 0)] = BigInt::from(p02.1);
                b[(1, 2)] = BigInt::from(p12.0);
                b[(2, 1)] = BigInt::from(p12.1);
                out.push(b);
            }
        }
    }
    out
}

#[test]
fn criterion_1_paper_example_reproduction() {
    let start = Instant::now();
    let b = parse_matrix_text(include_str!("fixtures/paper_b.txt")).unwrap();
    let c = parse_matrix_text(include_str!("fixtures/paper_c.txt")).unwrap();
    let cplus = parse_matrix_text(include_str!("fixtures/paper_cplus.txt")).unwrap();
    assert_eq!(b, paper_b());
    assert_eq!(cplus, c_plus(&b));

    let verdict = is_positive(&cplus).unwrap();
    assert!(!verdict.positive);
    assert_eq!(verdict.first_failure, Some(4));
    assert_eq!(verdict.minors_checked.minors, ints(&[2, 3, 4, 0]));

    assert!(verify_companion(&b, &c).unwrap());
    let c_verdict = is_positive(&c).unwrap();
    assert!(c_verdict.positive);
    assert_eq!(c_verdict.minors_checked.minors, ints(&[2, 3, 4, 4]));

    let result = find_positive_companion(&b, &SearchOptions::default()).unwrap();
    let companion = result.companion.expect("companion exists");
    assert!(verify_companion(&b, &companion).unwrap());
    assert_companion_bounds(&companion);

    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 1.0, "took {elapsed:?}");
    println!("ACCEPTANCE 1 (paper example reproduction): PASS in {elapsed:?}");
}

#[test]
fn criterion_2_all_ones_determinant() {
    let start = Instant::now();
    for n in 2..=10 {
        let b = all_ones_skew(n);
        let cp = c_plus(&b);
        assert_eq!(cp.determinant(), BigInt::from(n as i64 + 1), "n = {n}");
        let result = find_positive_companion(&b, &SearchOptions::default()).unwrap();
        let companion = result.companion.expect("all-ones B has a companion");
        assert_eq!(companion, cp, "companion should be C+ itself at n = {n}");
        assert_companion_bounds(&companion);
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 1.0, "took {elapsed:?}");
    println!("ACCEPTANCE 2 (det(C+) = n + 1 for all-ones skew B): PASS in {elapsed:?}");
}

#[test]
fn criterion_3_symmetrizability_oracle_equivalence() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    let mut checked = 0u64;
    let mut yes_seen = 0u64;
    // 10^4 uniform random matrices plus constructed symmetrizable ones so the
    // yes verdict is exercised heavily.
    for round in 0..12_000 {
        let n = rng.gen_range(2..=5);
        let a = if round < 10_000 {
            random_matrix(&mut rng, n, -3, 3)
        } else {
            random_symmetrizable(&mut rng, n)
        };
        let outcome = check_symmetrizable(&a);
        let expected = cycle_symmetrizable(&a).unwrap();
        assert_eq!(outcome.is_yes(), expected, "disagreement on {a:?}");
        if let Some(d) = outcome.witness() {
            yes_seen += 1;
            assert!(d.certifies(&a), "witness does not symmetrize {a:?}");
        }
        checked += 1;
    }
    assert!(checked >= 10_000);
    assert!(yes_seen >= 1_000, "yes verdicts: {yes_seen}");
    println!(
        "ACCEPTANCE 3 (cycle-oracle equivalence, {checked} samples, {yes_seen} witnesses): PASS"
    );
}

#[test]
fn criterion_4_leading_vs_all_principal_minors() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    let mut checked = 0u64;
    for _ in 0..1_000 {
        let n = rng.gen_range(1..=6);
        let c = random_symmetrizable(&mut rng, n);
        assert_eq!(
            is_positive(&c).unwrap().positive,
            all_principal_minors_positive(&c),
            "route disagreement on {c:?}"
        );
        checked += 1;
    }

    // All 3x3 quasi-Cartan sign patterns with |c_ij| <= 2: diagonal 2 and
    // every off-diagonal tuple over [-2, 2], filtered to symmetrizable.
    let mut patterns = 0u64;
    let range = [-2i64, -1, 0, 1, 2];
    for a in range {
        for b in range {
            for c01 in range {
                for c10 in range {
                    for c20 in range {
                        for c21 in range {
                            let m = IntMatrix::from_i64_rows(&[
                                &[2, c01, a],
                                &[c10, 2, b],
                                &[c20, c21, 2],
                            ]);
                            if !check_symmetrizable(&m).is_yes() {
                                continue;
                            }
                            patterns += 1;
                            assert_eq!(
                                is_positive(&m).unwrap().positive,
                                all_principal_minors_positive(&m),
                                "route disagreement on {m:?}"
                            );
                        }
                    }
                }
            }
        }
    }
    assert!(patterns > 100, "quasi-Cartan patterns: {patterns}");
    println!(
        "ACCEPTANCE 4 (leading == all principal minors, {checked} random + {patterns} patterns): PASS"
    );
}

#[test]
fn criterion_5_three_by_three_c_plus_decides() {
    let start = Instant::now();
    let mut skew_symmetrizable = 0u64;
    for b in all_3x3_skew_sign_patterns() {
        assert!(b.is_skew_symmetric_by_signs());
        // The C+ criterion is stated for skew-symmetrizable matrices; sign
        // patterns whose cycle magnitudes differ have no companion notion.
        if !check_skew_symmetrizable(&b).is_yes() {
            continue;
        }
        skew_symmetrizable += 1;
        let by_c_plus = is_positive(&c_plus(&b)).unwrap().positive;
        let by_search = exhaustive_companion(&b).unwrap();
        assert_eq!(by_c_plus, by_search.found(), "disagreement on {b:?}");
        let fast = find_positive_companion(&b, &SearchOptions::default()).unwrap();
        assert_eq!(fast.found(), by_c_plus);
        if let Some(c) = &fast.companion {
            assert_companion_bounds(c);
        }
    }
    assert_eq!(skew_symmetrizable, 377);
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 60.0, "took {elapsed:?}");
    println!(
        "ACCEPTANCE 5 (3x3 C+ fast path over {skew_symmetrizable} matrices): PASS in {elapsed:?}"
    );
}

#[test]
fn criterion_6_dense_c_plus_decides() {
    let mut rng = ChaCha8Rng::seed_from_u64(61);
    let mut found = 0u64;
    for _ in 0..1_000 {
        let b = random_dense_skew_4x4(&mut rng);
        assert!(check_skew_symmetrizable(&b).is_yes());
        let by_c_plus = is_positive(&c_plus(&b)).unwrap().positive;
        let by_search = exhaustive_companion(&b).unwrap();
        assert_eq!(by_c_plus, by_search.found(), "disagreement on {b:?}");
        let fast = find_positive_companion(&b, &SearchOptions::default()).unwrap();
        assert_eq!(fast.found(), by_c_plus);
        if let Some(c) = &fast.companion {
            assert_companion_bounds(c);
            found += 1;
        }
    }
    assert!(found > 50, "positive cases: {found}");
    println!("ACCEPTANCE 6 (dense 4x4 C+ fast path, 1000 samples, {found} positive): PASS");
}

#[test]
fn criterion_7_companion_bound_invariants() {
    // The bound checks run on every companion produced by criteria 1-6; this
    // sweep re-asserts them over a dedicated mixed sample.
    let mut rng = ChaCha8Rng::seed_from_u64(71);
    let mut companions = 0u64;
    let mut inputs: Vec<IntMatrix> = vec![paper_b()];
    inputs.extend((2..=10).map(all_ones_skew));
    for _ in 0..600 {
        let n = rng.gen_range(1..=4);
        inputs.push(random_skew_symmetrizable(&mut rng, n, 2));
    }
    for _ in 0..100 {
        inputs.push(random_dense_skew_4x4(&mut rng));
    }
    for b in &inputs {
        let Ok(result) = find_positive_companion(b, &SearchOptions::default()) else {
            unreachable!("all inputs are skew-symmetrizable")
        };
        if let Some(c) = &result.companion {
            assert_companion_bounds(c);
            companions += 1;
        }
    }
    assert!(companions > 100, "companions checked: {companions}");
    println!("ACCEPTANCE 7 (pair/triple bounds on {companions} companions): PASS");
}

#[test]
fn criterion_8_submatrix_closure_on_paper_example() {
    let b = paper_b();
    let mut subsets = 0u64;
    for mask in 1usize..16 {
        let keep: Vec<usize> = (0..4).filter(|&i| mask & (1 << i) != 0).collect();
        let sub = b.principal_submatrix(&keep);
        let result = find_positive_companion(&sub, &SearchOptions::default()).unwrap();
        assert!(result.found(), "no companion for subset {keep:?}");
        assert!(exhaustive_companion(&sub).unwrap().found());
        assert_companion_bounds(&result.companion.unwrap());
        subsets += 1;
    }
    assert_eq!(subsets, 15);
    println!("ACCEPTANCE 8 (companions for all 15 principal submatrices): PASS");
}

#[test]
fn criterion_9_complexity_instrumentation() {
    // check_symmetrizable inspects each unordered pair at most once during
    // propagation and once during verification: <= n^2 total, exactly
    // n*(n-1) on a yes verdict.
    for n in [10usize, 50, 120, 200] {
        let mut rows = vec![vec![0i64; n]; n];
        for i in 0..n - 1 {
            rows[i][i + 1] = 2;
            rows[i + 1][i] = 1;
        }
        let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
        let path = IntMatrix::from_i64_rows(&refs);
        let outcome = check_symmetrizable(&path);
        assert!(outcome.is_yes());
        assert_eq!(outcome.pairs_inspected, n * (n - 1));
        assert!(outcome.pairs_inspected <= n * n);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(91);
    for _ in 0..50 {
        let n = rng.gen_range(2..=40);
        let a = random_matrix(&mut rng, n, -3, 3);
        let outcome = check_symmetrizable(&a);
        assert!(outcome.pairs_inspected <= n * n, "n = {n}");
    }

    // is_positive evaluates exactly k determinants, k = first_failure or n.
    let mut verdicts = 0u64;
    for _ in 0..400 {
        let n = rng.gen_range(1..=6);
        let c = random_symmetrizable(&mut rng, n);
        let verdict = is_positive(&c).unwrap();
        let expected = verdict.first_failure.unwrap_or(n);
        assert_eq!(verdict.minors_checked.minors.len(), expected);
        verdicts += 1;
    }
    let paper = is_positive(&paper_c_plus()).unwrap();
    assert_eq!(paper.minors_checked.minors.len(), 4);
    assert!(verdicts > 0);
    println!("ACCEPTANCE 9 (O(n^2) pair inspections, exact determinant counts): PASS");
}
