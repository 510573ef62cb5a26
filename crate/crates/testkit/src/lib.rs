//! Test-only support: brute-force fixed-point oracles that recount the
//! Poincaré polynomials from first principles, standard fan fixtures,
//! and a seeded generator of admissible fans.
//!
//! The oracles deliberately avoid the library's computation path: dual
//! bases are recovered by Gaussian elimination on freshly assembled
//! systems, coordinates are converted by solving against the simple
//! roots, and the compactification count works through the full
//! 2n-coordinate product-lattice lexicographic comparison instead of the
//! `l(w) + b(sigma, w)` shortcut.

use num::{BigInt, BigRational, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use toromotive::fan::{
    cones_in_negative_chamber, stellar_subdivide, symmetrize, validate_fan, weyl_chamber_fan, Fan,
};
use toromotive::poincare::PoincarePolynomial;
use toromotive::polyhedral::primitive;
use toromotive::root_datum::{build_root_datum, Family, LatticeKind, RootDatum};

type Q = BigRational;

fn q(v: i64) -> Q {
    Q::from_integer(BigInt::from(v))
}

fn qvec(v: &[i64]) -> Vec<Q> {
    v.iter().map(|&x| q(x)).collect()
}

/// Plain Gauss-Jordan solve of a square rational system; panics on
/// singular input (oracle systems are nonsingular by construction).
fn gauss_solve(a: &[Vec<Q>], b: &[Q]) -> Vec<Q> {
    let n = a.len();
    let mut m: Vec<Vec<Q>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut ext = row.clone();
            ext.push(rhs.clone());
            ext
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !m[r][col].is_zero())
            .expect("oracle system is nonsingular");
        m.swap(pivot, col);
        let inv = m[col][col].clone();
        for c in col..=n {
            m[col][c] = &m[col][c] / &inv;
        }
        for r in 0..n {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let f = m[r][col].clone();
            for c in col..=n {
                let sub = &f * &m[col][c];
                m[r][c] -= sub;
            }
        }
    }
    m.into_iter().map(|row| row[n].clone()).collect()
}

/// Dual basis of a full-dimensional cone by solving `<chi_i, r_j> =
/// delta_ij` row by row.
fn oracle_dual_basis(rays: &[Vec<i64>]) -> Vec<Vec<Q>> {
    let n = rays.len();
    // Unknown chi paired against every ray: coefficient matrix has the
    // rays as rows.
    let system: Vec<Vec<Q>> = rays.iter().map(|r| qvec(r)).collect();
    (0..n)
        .map(|i| {
            let rhs: Vec<Q> = (0..n).map(|j| if i == j { q(1) } else { q(0) }).collect();
            gauss_solve(&system, &rhs)
        })
        .collect()
}

/// Character coordinates -> simple-root coordinates, by solving against
/// the simple roots as a basis.
fn oracle_root_coords(rd: &RootDatum, chi: &[Q]) -> Vec<Q> {
    let n = rd.rank();
    let columns: Vec<Vec<i64>> = (0..n).map(|i| rd.simple_root_char(i)).collect();
    let system: Vec<Vec<Q>> = (0..n)
        .map(|row| (0..n).map(|i| q(columns[i][row])).collect())
        .collect();
    gauss_solve(&system, chi)
}

fn lex_positive(coords: &[Q], order: &[usize]) -> bool {
    for &i in order {
        if coords[i].is_positive() {
            return true;
        }
        if coords[i].is_negative() {
            return false;
        }
    }
    false
}

/// Fixed-point count of a smooth complete toric variety: one fixed point
/// per max cone, tangent characters the dual basis, exponent the number
/// of lexicographically positive characters.
pub fn toric_oracle(fan: &Fan) -> PoincarePolynomial {
    let order: Vec<usize> = (0..fan.rank()).collect();
    let mut poly = PoincarePolynomial::zero();
    for cone in fan.max_cones() {
        let rays: Vec<Vec<i64>> = cone
            .iter()
            .map(|&i| fan.rays()[i].coords().to_vec())
            .collect();
        let dual = oracle_dual_basis(&rays);
        let positives = dual
            .iter()
            .filter(|chi| lex_positive(chi, &order))
            .count();
        poly.add_term(positives, 1);
    }
    poly
}

/// Brute-force Poincaré polynomial of the toroidal compactification:
/// enumerate the fixed points `(w1, x0, w2)` over the cones in the
/// negative chamber and count the positive tangent characters
/// `{(w1(beta), 0)} u {(0, -w2(beta))} u {(w1(chi_i), -w2(chi_i))}`
/// (beta over the negative roots, chi_i over the dual basis) under the
/// lexicographic order of the product lattice.
pub fn compactification_oracle(rd: &RootDatum, fan: &Fan) -> PoincarePolynomial {
    let n = rd.rank();
    let group = rd.weyl_group().expect("oracle groups are enumerable");
    let negative_roots: Vec<Vec<i64>> = rd
        .positive_roots()
        .iter()
        .map(|r| r.iter().map(|&x| -x).collect())
        .collect();
    let omega_cones = cones_in_negative_chamber(rd, fan).expect("matching ranks");
    let mut product_order: Vec<usize> = rd.lex_order().to_vec();
    product_order.extend(rd.lex_order().iter().map(|&i| i + n));
    let zeros = vec![Q::zero(); n];
    let mut poly = PoincarePolynomial::zero();
    for sigma in &omega_cones {
        let rays: Vec<Vec<i64>> = sigma.rays().iter().map(|r| r.coords().to_vec()).collect();
        let dual = oracle_dual_basis(&rays);
        for w1 in &group {
            for w2 in &group {
                let mut characters: Vec<Vec<Q>> = Vec::new();
                for beta in &negative_roots {
                    let mut pair = qvec(&w1.apply_char(beta));
                    pair.extend_from_slice(&zeros);
                    characters.push(pair);
                }
                for beta in &negative_roots {
                    let mut pair = zeros.clone();
                    pair.extend(w2.apply_char(beta).iter().map(|&x| q(-x)));
                    characters.push(pair);
                }
                for chi in &dual {
                    let mut pair = w1.apply_char_q(chi);
                    pair.extend(w2.apply_char_q(chi).iter().map(|x| -x.clone()));
                    characters.push(pair);
                }
                let positives = characters
                    .iter()
                    .filter(|c| {
                        let first = oracle_root_coords(rd, &c[..n]);
                        let second = oracle_root_coords(rd, &c[n..]);
                        let mut coords = first;
                        coords.extend(second);
                        lex_positive(&coords, &product_order)
                    })
                    .count();
                poly.add_term(positives, 1);
            }
        }
    }
    poly
}

// ---- Fixtures ----

pub fn a_rd(rank: usize, kind: LatticeKind) -> RootDatum {
    build_root_datum(Family::A, rank, kind).expect("valid type")
}

/// The projective line: rays +1, -1.
pub fn p1_fan() -> Fan {
    Fan::new(1, vec![vec![1], vec![-1]], vec![vec![0], vec![1]]).unwrap()
}

/// The projective plane.
pub fn p2_fan() -> Fan {
    Fan::new(
        2,
        vec![vec![1, 0], vec![0, 1], vec![-1, -1]],
        vec![vec![0, 1], vec![1, 2], vec![0, 2]],
    )
    .unwrap()
}

pub fn p1xp1_fan() -> Fan {
    Fan::new(
        2,
        vec![vec![1, 0], vec![-1, 0], vec![0, 1], vec![0, -1]],
        vec![vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3]],
    )
    .unwrap()
}

/// The Hirzebruch surface of parameter `a >= 0`.
pub fn hirzebruch_fan(a: i64) -> Fan {
    Fan::new(
        2,
        vec![vec![1, 0], vec![0, 1], vec![-1, a], vec![0, -1]],
        vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 0]],
    )
    .unwrap()
}

/// Type A2, simply connected, with each Weyl chamber bisected: the
/// 12-cone smooth projective fan.
pub fn sl3_bisected() -> (RootDatum, Fan) {
    let rd = a_rd(2, LatticeKind::SimplyConnected);
    let chambers = weyl_chamber_fan(&rd).unwrap();
    let subdivided = stellar_subdivide(&chambers, &[-1, -1]).unwrap();
    let fan = symmetrize(&rd, &subdivided).unwrap();
    (rd, fan)
}

// ---- Random admissible fans ----

fn is_admissible(rd: &RootDatum, fan: &Fan) -> bool {
    let report = validate_fan(rd, fan).expect("structurally valid");
    report.smooth
        && report.complete
        && report.faces_ok
        && report.w_invariant
        && report.refines_chambers
}

/// One symmetrized barycentric bisection of a random cone inside the
/// negative chamber. For an admissible rank <= 2 fan the result is again
/// admissible.
fn bisect_random_omega_cone(rd: &RootDatum, fan: &Fan, rng: &mut ChaCha8Rng) -> Fan {
    let omega_cones = cones_in_negative_chamber(rd, fan).expect("matching ranks");
    let pick = rng.random_range(0..omega_cones.len());
    let chosen = &omega_cones[pick];
    let mut sum = vec![0i64; rd.rank()];
    for ray in chosen.rays() {
        for (acc, &x) in sum.iter_mut().zip(ray.coords()) {
            *acc += x;
        }
    }
    let ray = primitive(&sum).expect("cone interior point is nonzero");
    let subdivided = stellar_subdivide(fan, ray.coords()).expect("ray inside support");
    symmetrize(rd, &subdivided).expect("chamber refinement is preserved")
}

/// A deterministic batch of admissible fans: the base fan plus, for each
/// requested round count, the fan obtained by that many random
/// symmetrized stellar bisections.
pub fn random_admissible_fans(
    rd: &RootDatum,
    base: &Fan,
    rounds: &[usize],
    seed: u64,
) -> Vec<Fan> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    assert!(is_admissible(rd, base), "base fan must be admissible");
    let mut fans = Vec::new();
    for &r in rounds {
        let mut fan = base.clone();
        for _ in 0..r {
            fan = bisect_random_omega_cone(rd, &fan, &mut rng);
        }
        assert!(is_admissible(rd, &fan), "bisection must stay admissible");
        fans.push(fan);
    }
    fans
}
