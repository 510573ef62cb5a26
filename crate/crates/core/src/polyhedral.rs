//! Exact lattice geometry: primitive vectors, simplicial cones,
//! unimodularity, dual bases, and the lexicographic sign of characters.
//!
//! All arithmetic is integer or arbitrary-precision rational; floats are
//! banned from the whole crate because determinants and lexicographic
//! signs must be exact.

use num::{BigInt, One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{self, Q};
use crate::root_datum::RootDatum;

/// A lattice point in cocharacter coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeVector(Vec<i64>);

impl LatticeVector {
    /// Wrap a vector that is already primitive.
    pub fn new(coords: Vec<i64>) -> Result<LatticeVector> {
        let v = primitive(&coords)?;
        if v.0 != coords {
            return Err(Error::MalformedFan(format!(
                "ray {coords:?} is not primitive"
            )));
        }
        Ok(v)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Divide out the gcd of the entries, keeping the direction.
pub fn primitive(v: &[i64]) -> Result<LatticeVector> {
    let mut g: i64 = 0;
    for &x in v {
        g = gcd(g, x.abs());
    }
    if g == 0 {
        return Err(Error::ZeroVector);
    }
    Ok(LatticeVector(v.iter().map(|&x| x / g).collect()))
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Clear denominators of a rational direction and make it primitive.
pub(crate) fn primitive_of_rational(v: &[Q]) -> Result<LatticeVector> {
    let mut lcm = BigInt::one();
    for x in v {
        lcm = num::integer::lcm(lcm, x.denom().clone());
    }
    let ints: Vec<i64> = v
        .iter()
        .map(|x| {
            let scaled = x * Q::from_integer(lcm.clone());
            i64::try_from(scaled.to_integer()).expect("coordinate fits in i64")
        })
        .collect();
    primitive(&ints)
}

/// A simplicial cone: an ordered list of primitive, linearly independent
/// rays in cocharacter coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cone {
    rays: Vec<LatticeVector>,
}

impl Cone {
    pub fn new(rays: Vec<LatticeVector>) -> Result<Cone> {
        if let Some(first) = rays.first() {
            let dim = first.len();
            for r in &rays {
                if r.len() != dim {
                    return Err(Error::DimensionMismatch {
                        expected: dim,
                        got: r.len(),
                    });
                }
            }
            if !independent(&rays) {
                return Err(Error::MalformedFan(
                    "cone rays are linearly dependent (not simplicial)".into(),
                ));
            }
        }
        Ok(Cone { rays })
    }

    pub fn from_coords(rays: Vec<Vec<i64>>) -> Result<Cone> {
        Cone::new(
            rays.into_iter()
                .map(LatticeVector::new)
                .collect::<Result<Vec<_>>>()?,
        )
    }

    pub fn rays(&self) -> &[LatticeVector] {
        &self.rays
    }

    pub fn dim(&self) -> usize {
        self.rays.len()
    }

    /// Ambient rank, i.e. the coordinate length of the rays.
    pub fn ambient_rank(&self) -> Option<usize> {
        self.rays.first().map(|r| r.len())
    }

    /// Ray matrix with the rays as columns.
    fn ray_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rays[0].len();
        (0..n)
            .map(|row| self.rays.iter().map(|r| r.coords()[row]).collect())
            .collect()
    }

    /// Barycentric coordinates of `point` in this full-dimensional cone:
    /// the unique solution of `R c = point`, or `None` when some
    /// coefficient is negative (point outside).
    pub(crate) fn coefficients_of(&self, point: &[i64]) -> Option<Vec<Q>> {
        if self.rays.len() != point.len() {
            return None;
        }
        let m = linalg::mat_from(&self.ray_matrix());
        let c = linalg::solve(&m, &linalg::row_from(point))?;
        if c.iter().all(|x| !x.is_negative()) {
            Some(c)
        } else {
            None
        }
    }
}

fn independent(rays: &[LatticeVector]) -> bool {
    if rays.is_empty() {
        return true;
    }
    let n = rays[0].len();
    let k = rays.len();
    if k > n {
        return false;
    }
    let rows: Vec<Vec<i64>> = rays.iter().map(|r| r.coords().to_vec()).collect();
    if let Some(full) = linalg::full_row_rank_i128(&rows) {
        return full;
    }
    // Rank via rational elimination on the k x n matrix of rays.
    let mut m: Vec<Vec<Q>> = rays.iter().map(|r| linalg::row_from(r.coords())).collect();
    let mut rank = 0;
    for col in 0..n {
        let Some(pivot) = (rank..k).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(pivot, rank);
        for r in rank + 1..k {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &m[rank][col];
            for c in col..n {
                let sub = &factor * &m[rank][c];
                m[r][c] -= sub;
            }
        }
        rank += 1;
        if rank == k {
            break;
        }
    }
    rank == k
}

/// Is a full-dimensional simplicial cone unimodular (smooth chart)?
pub fn is_unimodular(cone: &Cone) -> Result<bool> {
    let det = full_dim_det(cone)?;
    Ok(det.abs().is_one())
}

fn full_dim_det(cone: &Cone) -> Result<BigInt> {
    let Some(n) = cone.ambient_rank() else {
        return Err(Error::NotFullDimensional);
    };
    if cone.dim() != n {
        return Err(Error::NotFullDimensional);
    }
    let det = linalg::det_int(&cone.ray_matrix());
    if det.is_zero() {
        return Err(Error::NotFullDimensional);
    }
    Ok(det)
}

/// The dual basis of a full-dimensional unimodular cone: character
/// vectors with `<chars[i], rays[j]> = delta_ij`. These are the rows of
/// the inverse of the ray matrix and are exactly integral.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualBasis {
    chars: Vec<Vec<i64>>,
}

impl DualBasis {
    pub fn chars(&self) -> &[Vec<i64>] {
        &self.chars
    }
}

pub fn dual_basis(cone: &Cone) -> Result<DualBasis> {
    let det = full_dim_det(cone)?;
    if !det.abs().is_one() {
        return Err(Error::NotSmooth);
    }
    // With determinant ±1 the inverse is det times the adjugate, so the
    // dual characters are exactly integral.
    let sign = if det.is_one() { 1 } else { -1 };
    let adj = linalg::adjugate_bigint(&linalg::bigint_mat_from(&cone.ray_matrix()));
    let chars = adj
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|x| sign * i64::try_from(x).expect("entry fits in i64"))
                .collect()
        })
        .collect();
    Ok(DualBasis { chars })
}

/// Sign of a character under the lexicographic order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Positive,
    Zero,
    Negative,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Zero => Sign::Zero,
            Sign::Negative => Sign::Positive,
        }
    }
}

/// Lexicographic sign of a character with respect to the simple-root
/// basis of the datum: convert to simple-root coordinates (exact
/// rationals) and take the sign of the first nonzero coordinate in the
/// datum's lex order.
pub fn lex_sign(rd: &RootDatum, chi: &[i64]) -> Result<Sign> {
    let coords = rd.root_coords(chi)?;
    Ok(sign_by_order(&coords, rd.lex_order()))
}

/// Lexicographic sign over the standard basis in input order; the pure
/// toric mode where no root datum is involved.
pub fn lex_sign_standard(chi: &[i64]) -> Sign {
    let coords = linalg::row_from(chi);
    let order: Vec<usize> = (0..chi.len()).collect();
    sign_by_order(&coords, &order)
}

pub(crate) fn sign_by_order(coords: &[Q], order: &[usize]) -> Sign {
    for &i in order {
        if coords[i].is_positive() {
            return Sign::Positive;
        }
        if coords[i].is_negative() {
            return Sign::Negative;
        }
    }
    Sign::Zero
}

/// Do two simplicial cones intersect exactly in the cone spanned by
/// their shared rays? (`{0}` counts as a common face.)
///
/// A fast dual-functional certificate settles most pairs; the general
/// case falls back to exact rational feasibility: some point of the
/// intersection carries a positive coefficient on a non-shared ray if
/// and only if the cones do not meet along a common face.
pub fn common_face(c1: &Cone, c2: &Cone) -> bool {
    let shared1: Vec<usize> = (0..c1.dim())
        .filter(|&i| c2.rays().contains(&c1.rays()[i]))
        .collect();
    let shared2: Vec<usize> = (0..c2.dim())
        .filter(|&j| c1.rays().contains(&c2.rays()[j]))
        .collect();
    if shared1.len() == c1.dim() || shared2.len() == c2.dim() {
        // One cone is a face of the other.
        return true;
    }
    if separating_certificate(c1, &shared1, c2, &shared2)
        || separating_certificate(c2, &shared2, c1, &shared1)
    {
        return true;
    }
    // Feasibility of R1 l = R2 m with l, m >= 0 and one non-shared
    // coefficient pinned to 1.
    let n = c1.rays()[0].len();
    let k1 = c1.dim();
    let k2 = c2.dim();
    let mut rows: Vec<Vec<Q>> = Vec::with_capacity(n + 1);
    for coord in 0..n {
        let mut row = Vec::with_capacity(k1 + k2);
        for r in c1.rays() {
            row.push(linalg::q_from(r.coords()[coord]));
        }
        for r in c2.rays() {
            row.push(-linalg::q_from(r.coords()[coord]));
        }
        rows.push(row);
    }
    let mut rhs = vec![Q::zero(); n];
    rows.push(vec![Q::zero(); k1 + k2]);
    rhs.push(Q::one());
    let pinned_feasible = |pin: usize, rows: &mut Vec<Vec<Q>>| {
        for x in rows[n].iter_mut() {
            *x = Q::zero();
        }
        rows[n][pin] = Q::one();
        linalg::feasible(rows, &rhs)
    };
    for i in 0..k1 {
        if !shared1.contains(&i) && pinned_feasible(i, &mut rows) {
            return false;
        }
    }
    for j in 0..k2 {
        if !shared2.contains(&j) && pinned_feasible(k1 + j, &mut rows) {
            return false;
        }
    }
    true
}

/// Certify the common face with the functional `h` that pairs to 0 with
/// the shared rays of `c1` and to +1 with its other rays: whenever `h`
/// pairs nonpositively with every non-shared ray of `c2`, any point of
/// the intersection has `h = 0` and therefore lies in the shared face.
///
/// Works entirely over integers: `h` is recovered from the adjugate of
/// the Gram matrix of `c1`, whose determinant is positive, so the scaled
/// pairings have the correct signs.
fn separating_certificate(
    c1: &Cone,
    shared1: &[usize],
    c2: &Cone,
    shared2: &[usize],
) -> bool {
    use num::BigInt;
    let k = c1.dim();
    if k == 0 {
        return c2.dim() == 0;
    }
    let gram: Vec<Vec<BigInt>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| {
                    BigInt::from(linalg::dot_i64(
                        c1.rays()[i].coords(),
                        c1.rays()[j].coords(),
                    ))
                })
                .collect()
        })
        .collect();
    let adj = linalg::adjugate_bigint(&gram);
    let target: Vec<BigInt> = (0..k)
        .map(|i| {
            if shared1.contains(&i) {
                BigInt::zero()
            } else {
                BigInt::one()
            }
        })
        .collect();
    // det(G) * G^{-1} * target; the Gram determinant of independent rays
    // is positive, so signs are preserved.
    let coeffs = linalg::bigint_mat_vec(&adj, &target);
    let n = c1.rays()[0].len();
    let h: Vec<BigInt> = (0..n)
        .map(|coord| {
            (0..k)
                .map(|i| &coeffs[i] * BigInt::from(c1.rays()[i].coords()[coord]))
                .sum()
        })
        .collect();
    (0..c2.dim()).all(|j| {
        if shared2.contains(&j) {
            return true;
        }
        let pairing: BigInt = h
            .iter()
            .zip(c2.rays()[j].coords())
            .map(|(a, &b)| a * BigInt::from(b))
            .sum();
        !pairing.is_positive()
    })
}
