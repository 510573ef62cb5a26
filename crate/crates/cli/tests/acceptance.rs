//! Acceptance suite. Each test implements one numbered criterion, checks
//! it exactly (integer arithmetic, zero tolerance), and prints a
//! `criterion N: PASS` line. Run with `--nocapture` to see the lines.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use serde_json::{json, Value};

use toromotive::fan::{validate_fan, weyl_chamber_fan, Fan};
use toromotive::motivic::{decompose, sb_copy_count};
use toromotive::poincare::{
    compactification_poincare, flag_poincare, toric_poincare_standard, PoincarePolynomial,
};
use toromotive::root_datum::{build_root_datum, Family, LatticeKind, RootDatum};
use toromotive_testkit::{
    compactification_oracle, hirzebruch_fan, p1_fan, p1xp1_fan, p2_fan, random_admissible_fans,
    sl3_bisected, toric_oracle,
};

fn binary(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_toromotive"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn report(output: &std::process::Output) -> Value {
    assert!(
        output.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&output.stderr)
    );
    serde_json::from_slice(&output.stdout).expect("stdout is JSON")
}

fn work_dir(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("toromotive-acc-{tag}-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

/// Criterion 1: the bisected-chamber compactification of simply
/// connected A2 through the CLI, exact factored output, in under a
/// second.
#[test]
fn criterion_1_bisected_a2_compactification() {
    let dir = work_dir("c1");
    let chambers = dir.join("sc-chambers.json");
    let bisected = dir.join("sl3-bisected.json");
    report(&binary(&[
        "fan", "chambers", "--family", "A", "--rank", "2",
        "--lattice", "simply_connected",
        "-o", chambers.to_str().unwrap(),
    ]));
    report(&binary(&[
        "fan", "subdivide", chambers.to_str().unwrap(),
        "--ray", "-1,-1", "--symmetrize",
        "-o", bisected.to_str().unwrap(),
    ]));

    let start = Instant::now();
    let out = binary(&["poincare", "compactification", bisected.to_str().unwrap()]);
    let elapsed = start.elapsed();
    let result = &report(&out)["result"];
    assert_eq!(result["coeffs"], json!([1, 3, 8, 15, 18, 15, 8, 3, 1]));
    assert_eq!(result["factored"]["first"], json!([1, 1, 4, 4, 1, 1]));
    assert_eq!(result["factored"]["flag"], json!([1, 2, 2, 1]));
    assert_eq!(result["s"], 12);
    assert_eq!(result["k"], 2);
    assert_eq!(result["fixed_points"], 72);
    assert!(
        elapsed < Duration::from_secs(1),
        "took {elapsed:?}, budget 1 s"
    );
    println!(
        "criterion 1: PASS - bisected A2 compactification (t^5+t^4+4t^3+4t^2+t+1)(t^3+2t^2+2t+1), \
         s=12, k=2, 72 fixed points, {elapsed:?}"
    );
}

/// Criterion 2: decomposition of the degree-8 polynomial
/// [1,1,2,3,4,3,2,1,1] at p = 3.
#[test]
fn criterion_2_semenov_decomposition() {
    let poly = PoincarePolynomial::from_coeffs(vec![1, 1, 2, 3, 4, 3, 2, 1, 1]);
    let dec = decompose(&poly, 3, 3).unwrap();
    assert_eq!(dec.rost_shifts(), &[0, 4, 8]);
    let expected: BTreeMap<usize, u64> =
        [(1, 1), (2, 1), (3, 1), (4, 1), (5, 1)].into_iter().collect();
    assert_eq!(dec.sb_multiplicities(), &expected);
    println!(
        "criterion 2: PASS - [1,1,2,3,4,3,2,1,1] = Rost{{0,4,8}} + S(1)+S(2)+S(3)+S(4)+S(5)"
    );
}

/// Criterion 3: decomposition of the bisected-fan product at p = 3 with
/// multiplicity total s(p-1)! - 1.
#[test]
fn criterion_3_toroidal_decomposition() {
    let (rd, fan) = sl3_bisected();
    let product = compactification_poincare(&rd, &fan).unwrap().product;
    let dec = decompose(&product, 3, 3).unwrap();
    let expected: BTreeMap<usize, u64> =
        [(1, 3), (2, 5), (3, 7), (4, 5), (5, 3)].into_iter().collect();
    assert_eq!(dec.sb_multiplicities(), &expected);
    let s = validate_fan(&rd, &fan).unwrap().max_cone_count as u64;
    assert_eq!(s, 12);
    assert_eq!(dec.sb_total(), 23);
    assert_eq!(dec.sb_total(), sb_copy_count(s, 3));
    println!("criterion 3: PASS - multiplicities {{1:3,2:5,3:7,4:5,5:3}}, total 23 = 12*2! - 1");
}

/// Criterion 4: Chow-ring tables for p in {2, 3, 5, 7}.
#[test]
fn criterion_4_chow_ring_tables() {
    for p in [2u64, 3, 5, 7] {
        let ring = toromotive::motivic::chow_ring_sl1(p).unwrap();
        let components = ring.components();
        assert_eq!(components.len(), p as usize);
        assert_eq!(
            components.get(&0).map(ToString::to_string).as_deref(),
            Some("Z")
        );
        for j in 1..p as usize {
            let degree = (p as usize + 1) * j;
            assert_eq!(
                components.get(&degree).map(ToString::to_string),
                Some(format!("Z/{p}")),
                "degree {degree} at p={p}"
            );
        }
        // Nothing else: every nonzero degree is of the form (p+1)j.
        for (&degree, _) in components.iter() {
            assert!(degree == 0 || degree % (p as usize + 1) == 0);
            assert!(degree <= (p * p - 1) as usize);
        }
    }
    println!("criterion 4: PASS - chow rings for p=2,3,5,7 match the torsion pattern");
}

fn admissible_test_fans() -> Vec<(RootDatum, Fan)> {
    let mut fans: Vec<(RootDatum, Fan)> = Vec::new();
    for kind in [LatticeKind::SimplyConnected, LatticeKind::Adjoint] {
        let a1 = build_root_datum(Family::A, 1, kind).unwrap();
        let chamber = weyl_chamber_fan(&a1).unwrap();
        fans.extend(random_admissible_fans(&a1, &chamber, &[0], 5).into_iter().map(|f| (a1.clone(), f)));
    }
    for (kind, seeds) in [
        (LatticeKind::SimplyConnected, [71u64, 72, 73]),
        (LatticeKind::Adjoint, [74, 75, 76]),
    ] {
        let a2 = build_root_datum(Family::A, 2, kind).unwrap();
        let base = match kind {
            LatticeKind::SimplyConnected => sl3_bisected().1,
            LatticeKind::Adjoint => weyl_chamber_fan(&a2).unwrap(),
        };
        fans.push((a2.clone(), base.clone()));
        for seed in seeds {
            for fan in random_admissible_fans(&a2, &base, &[1, 2, 3, 4, 5], seed) {
                fans.push((a2.clone(), fan));
            }
        }
    }
    fans
}

/// Criterion 5: the formula agrees with the brute-force
/// fixed-point/tangent-character oracle on at least 20 admissible fans,
/// and the toric counter agrees with the same oracle on the standard
/// surfaces; the whole run stays under 30 s.
#[test]
fn criterion_5_oracle_equivalence() {
    let start = Instant::now();
    let fans = admissible_test_fans();
    let mut distinct: Vec<(LatticeKind, &Fan)> = Vec::new();
    for (rd, fan) in &fans {
        let key = (rd.lattice_kind(), fan);
        if !distinct.contains(&key) {
            distinct.push(key);
        }
    }
    assert!(
        distinct.len() >= 20,
        "only {} distinct admissible fans",
        distinct.len()
    );
    for (rd, fan) in &fans {
        let fast = compactification_poincare(rd, fan).unwrap();
        let brute = compactification_oracle(rd, fan);
        assert_eq!(fast.product, brute, "fan with {} cones", fan.max_cones().len());
    }
    for (name, fan, expected) in [
        ("P1", p1_fan(), vec![1u64, 1]),
        ("P2", p2_fan(), vec![1, 1, 1]),
        ("P1xP1", p1xp1_fan(), vec![1, 2, 1]),
        ("Hirzebruch F1", hirzebruch_fan(1), vec![1, 2, 1]),
        ("Hirzebruch F2", hirzebruch_fan(2), vec![1, 2, 1]),
    ] {
        let computed = toric_poincare_standard(&fan).unwrap();
        assert_eq!(computed.coeffs(), expected.as_slice(), "{name}");
        assert_eq!(computed, toric_oracle(&fan), "{name}");
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed < Duration::from_secs(30),
        "took {elapsed:?}, budget 30 s"
    );
    println!(
        "criterion 5: PASS - oracle equality on {} admissible fans ({} distinct) and 5 toric \
         surfaces in {elapsed:?}",
        fans.len(),
        distinct.len()
    );
}

/// Criterion 6: palindromy, exact divisibility by the flag polynomial,
/// the fixed-point count identities, and invariance under a permuted
/// lexicographic basis, on every admissible fan tested.
#[test]
fn criterion_6_invariant_suite() {
    let fans = admissible_test_fans();
    for (rd, fan) in &fans {
        let factored = compactification_poincare(rd, fan).unwrap();
        let report = validate_fan(rd, fan).unwrap();
        let order = rd.cartan_type().weyl_order() as u64;
        let s = report.max_cone_count as u64;
        let k = report.negative_chamber_cones as u64;

        assert!(factored.product.is_palindromic(), "palindromy");
        let flag = flag_poincare(rd).unwrap();
        let quotient = factored.product.div_exact(&flag).expect("divisible by flag");
        assert_eq!(quotient, factored.first_factor);
        assert_eq!(factored.product.eval_one(), s * order);
        assert_eq!(factored.product.eval_one(), k * order * order);

        let permuted_rd = if rd.rank() == 2 {
            rd.clone().with_lex_order(vec![1, 0]).unwrap()
        } else {
            rd.clone()
        };
        let permuted = compactification_poincare(&permuted_rd, fan).unwrap();
        assert_eq!(permuted.product, factored.product, "lex-order invariance");

        // Simply connected type A fans also satisfy the decomposition
        // count identity at p = rank + 1.
        if rd.lattice_kind() == LatticeKind::SimplyConnected {
            let p = rd.rank() as u64 + 1;
            let dec = decompose(&factored.product, p, 3).unwrap();
            assert_eq!(dec.sb_total(), sb_copy_count(s, p));
        }
    }
    println!(
        "criterion 6: PASS - palindromy, flag divisibility, s|W| = k|W|^2 count and lex \
         invariance on {} fans",
        fans.len()
    );
}

/// Criterion 7: the chamber fan of adjoint A2 (the wonderful
/// compactification of PGL3).
#[test]
fn criterion_7_wonderful_pgl3() {
    let rd = build_root_datum(Family::A, 2, LatticeKind::Adjoint).unwrap();
    let fan = weyl_chamber_fan(&rd).unwrap();
    let factored = compactification_poincare(&rd, &fan).unwrap();
    assert_eq!(factored.product.coeffs(), &[1, 2, 4, 7, 8, 7, 4, 2, 1]);
    assert_eq!(factored.product, compactification_oracle(&rd, &fan));
    println!("criterion 7: PASS - wonderful PGL3 polynomial [1,2,4,7,8,7,4,2,1]");
}

/// Criterion 8: the flag polynomial of A_n is the t-factorial, n <= 5.
#[test]
fn criterion_8_flag_cross_check() {
    for n in 1..=5 {
        let rd = build_root_datum(Family::A, n, LatticeKind::SimplyConnected).unwrap();
        let flag = flag_poincare(&rd).unwrap();
        let mut product = PoincarePolynomial::one();
        for i in 1..=n {
            product = product.mul(&PoincarePolynomial::from_coeffs(vec![1; i + 1]));
        }
        assert_eq!(flag, product, "A{n}");
    }
    println!("criterion 8: PASS - flag polynomials of A1..A5 match the t-factorials");
}
