//! Agreement between the production formula and the brute-force
//! fixed-point oracles, plus invariance of the outputs under a permuted
//! lexicographic basis order.

use toromotive::fan::weyl_chamber_fan;
use toromotive::poincare::{
    compactification_poincare, toric_poincare, toric_poincare_standard,
};
use toromotive::root_datum::{build_root_datum, Family, LatticeKind};
use toromotive_testkit::{
    compactification_oracle, hirzebruch_fan, p1_fan, p1xp1_fan, p2_fan, random_admissible_fans,
    sl3_bisected, toric_oracle,
};

#[test]
fn toric_oracle_on_standard_surfaces() {
    let cases = [
        (p1_fan(), vec![1u64, 1]),
        (p2_fan(), vec![1, 1, 1]),
        (p1xp1_fan(), vec![1, 2, 1]),
        (hirzebruch_fan(0), vec![1, 2, 1]),
        (hirzebruch_fan(1), vec![1, 2, 1]),
        (hirzebruch_fan(3), vec![1, 2, 1]),
    ];
    for (fan, expected) in cases {
        let computed = toric_poincare_standard(&fan).unwrap();
        assert_eq!(computed.coeffs(), expected.as_slice());
        assert_eq!(computed, toric_oracle(&fan));
        assert_eq!(computed.eval_one() as usize, fan.max_cones().len());
    }
}

#[test]
fn compactification_matches_oracle_on_rank_two_fans() {
    for (rank, kind, seed) in [
        (1, LatticeKind::SimplyConnected, 21),
        (1, LatticeKind::Adjoint, 22),
        (2, LatticeKind::SimplyConnected, 23),
        (2, LatticeKind::Adjoint, 24),
    ] {
        let rd = build_root_datum(Family::A, rank, kind).unwrap();
        let base = if rank == 2 && kind == LatticeKind::SimplyConnected {
            sl3_bisected().1
        } else {
            weyl_chamber_fan(&rd).unwrap()
        };
        for fan in random_admissible_fans(&rd, &base, &[0, 1, 2], seed) {
            let fast = compactification_poincare(&rd, &fan).unwrap();
            let brute = compactification_oracle(&rd, &fan);
            assert_eq!(fast.product, brute);
        }
    }
}

#[test]
fn outputs_do_not_depend_on_lex_basis_order() {
    for kind in [LatticeKind::SimplyConnected, LatticeKind::Adjoint] {
        let rd = build_root_datum(Family::A, 2, kind).unwrap();
        let base = if kind == LatticeKind::SimplyConnected {
            sl3_bisected().1
        } else {
            weyl_chamber_fan(&rd).unwrap()
        };
        let swapped = rd.clone().with_lex_order(vec![1, 0]).unwrap();
        let natural = compactification_poincare(&rd, &base).unwrap();
        let permuted = compactification_poincare(&swapped, &base).unwrap();
        assert_eq!(natural.product, permuted.product);
        assert_eq!(natural.first_factor, permuted.first_factor);

        // The toric polynomial of the associated toric variety is also
        // independent of the basis order.
        if kind == LatticeKind::SimplyConnected {
            assert_eq!(
                toric_poincare(&rd, &base).unwrap(),
                toric_poincare(&swapped, &base).unwrap()
            );
        }
    }
}

#[test]
fn oracle_reproduces_frozen_examples() {
    let (rd, fan) = sl3_bisected();
    let brute = compactification_oracle(&rd, &fan);
    assert_eq!(brute.coeffs(), &[1, 3, 8, 15, 18, 15, 8, 3, 1]);

    let adjoint = build_root_datum(Family::A, 2, LatticeKind::Adjoint).unwrap();
    let chambers = weyl_chamber_fan(&adjoint).unwrap();
    assert_eq!(
        compactification_oracle(&adjoint, &chambers).coeffs(),
        &[1, 2, 4, 7, 8, 7, 4, 2, 1]
    );
}
