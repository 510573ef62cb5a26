//! Generating (Poincaré) polynomials of split motives: flag varieties,
//! smooth projective toric varieties by fixed-point counting, and smooth
//! equivariant toroidal compactifications of split semisimple groups.
//!
//! For a toroidal compactification with fan refining the Weyl chambers,
//! the polynomial is
//!
//! ```text
//!     P(t) = ( sum over w in W, sigma in Omega of t^{l(w) + b(sigma, w)} ) * P_flag(t)
//! ```
//!
//! where `b(sigma, w)` counts the dual-basis characters of `sigma` sent
//! lexicographically positive by `w`. Each fixed point of the double
//! torus action contributes one Tate summand, so the value at `t = 1` is
//! the fixed-point count `s|W| = k|W|^2`.

use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::fan::{self, Fan};
use crate::polyhedral::{self, Cone, Sign};
use crate::root_datum::{RootDatum, WeylElement};

/// A polynomial with nonnegative integer coefficients in ascending
/// degree, stored without trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PoincarePolynomial {
    coeffs: Vec<u64>,
}

impl PoincarePolynomial {
    pub fn zero() -> PoincarePolynomial {
        PoincarePolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> PoincarePolynomial {
        PoincarePolynomial { coeffs: vec![1] }
    }

    pub fn from_coeffs(mut coeffs: Vec<u64>) -> PoincarePolynomial {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        PoincarePolynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add_term(&mut self, degree: usize, count: u64) {
        if count == 0 {
            return;
        }
        if self.coeffs.len() <= degree {
            self.coeffs.resize(degree + 1, 0);
        }
        self.coeffs[degree] += count;
    }

    /// Exact convolution product.
    pub fn mul(&self, other: &PoincarePolynomial) -> PoincarePolynomial {
        if self.is_zero() || other.is_zero() {
            return PoincarePolynomial::zero();
        }
        let mut coeffs = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        PoincarePolynomial::from_coeffs(coeffs)
    }

    /// Value at `t = 1`: the total number of Tate summands.
    pub fn eval_one(&self) -> u64 {
        self.coeffs.iter().sum()
    }

    pub fn is_palindromic(&self) -> bool {
        let n = self.coeffs.len();
        (0..n / 2).all(|i| self.coeffs[i] == self.coeffs[n - 1 - i])
    }

    /// Exact division, `None` unless the remainder is zero and the
    /// quotient has nonnegative coefficients.
    pub fn div_exact(&self, divisor: &PoincarePolynomial) -> Option<PoincarePolynomial> {
        let quotient = poly_div_exact(
            &self.coeffs.iter().map(|&c| c as i128).collect::<Vec<_>>(),
            &divisor.coeffs.iter().map(|&c| c as i128).collect::<Vec<_>>(),
        )?;
        if quotient.iter().any(|&c| c < 0) {
            return None;
        }
        Some(PoincarePolynomial::from_coeffs(
            quotient.into_iter().map(|c| c as u64).collect(),
        ))
    }
}

/// Long division of integer polynomials (ascending coefficients, divisor
/// with leading coefficient ±1); `None` when the remainder is nonzero.
pub(crate) fn poly_div_exact(dividend: &[i128], divisor: &[i128]) -> Option<Vec<i128>> {
    let mut divisor = divisor.to_vec();
    while divisor.last() == Some(&0) {
        divisor.pop();
    }
    assert!(!divisor.is_empty(), "division by zero polynomial");
    let lead = *divisor.last().unwrap();
    assert!(lead == 1 || lead == -1, "divisor must have leading coefficient ±1");
    let mut rem = dividend.to_vec();
    while rem.last() == Some(&0) {
        rem.pop();
    }
    let d = divisor.len() - 1;
    if rem.is_empty() {
        return Some(Vec::new());
    }
    if rem.len() - 1 < d {
        return None;
    }
    let mut quotient = vec![0i128; rem.len() - d];
    for k in (d..rem.len()).rev() {
        let c = rem[k] / lead;
        if c == 0 {
            continue;
        }
        let shift = k - d;
        quotient[shift] = c;
        for (j, &coef) in divisor.iter().enumerate() {
            rem[shift + j] -= c * coef;
        }
    }
    if rem.iter().any(|&c| c != 0) {
        return None;
    }
    Some(quotient)
}

impl fmt::Display for PoincarePolynomial {
    /// Human-readable descending form, e.g. `t^5+t^4+4t^3+4t^2+t+1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (deg, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            match (deg, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => write!(f, "t")?,
                (1, c) => write!(f, "{c}t")?,
                (d, 1) => write!(f, "t^{d}")?,
                (d, c) => write!(f, "{c}t^{d}")?,
            }
        }
        Ok(())
    }
}

/// A compactification polynomial together with its canonical
/// factorization through the flag-variety polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactoredPoincare {
    pub first_factor: PoincarePolynomial,
    pub flag_factor: PoincarePolynomial,
    pub product: PoincarePolynomial,
}

impl fmt::Display for FactoredPoincare {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})({})", self.first_factor, self.flag_factor)
    }
}

/// Poincaré polynomial of the flag variety: the length generating
/// function of the Weyl group.
pub fn flag_poincare(rd: &RootDatum) -> Result<PoincarePolynomial> {
    let group = rd.weyl_group()?;
    let mut poly = PoincarePolynomial::zero();
    for w in &group {
        poly.add_term(w.length(), 1);
    }
    Ok(poly)
}

/// Poincaré polynomial of a smooth complete toric variety, with the
/// lexicographic order taken from the root datum's simple-root basis.
pub fn toric_poincare(rd: &RootDatum, fan: &Fan) -> Result<PoincarePolynomial> {
    if rd.rank() != fan.rank() {
        return Err(Error::DimensionMismatch {
            expected: rd.rank(),
            got: fan.rank(),
        });
    }
    toric_poincare_with(fan, |chi| polyhedral::lex_sign(rd, chi))
}

/// Poincaré polynomial of a smooth complete toric variety in pure toric
/// mode: the lexicographic order uses the standard basis in input order.
pub fn toric_poincare_standard(fan: &Fan) -> Result<PoincarePolynomial> {
    toric_poincare_with(fan, |chi| Ok(polyhedral::lex_sign_standard(chi)))
}

fn toric_poincare_with(
    fan: &Fan,
    lex: impl Fn(&[i64]) -> Result<Sign>,
) -> Result<PoincarePolynomial> {
    let (smooth, complete, faces_ok) = fan::toric_checks(fan)?;
    if !faces_ok {
        return Err(Error::MalformedFan(
            "max cones do not meet along common faces".into(),
        ));
    }
    if !smooth {
        return Err(Error::NotSmooth);
    }
    if !complete {
        return Err(Error::NotComplete);
    }
    let mut poly = PoincarePolynomial::zero();
    for cone in fan.max_cones() {
        let dual = polyhedral::dual_basis(&fan.cone(cone))?;
        let positives = dual
            .chars()
            .iter()
            .map(|chi| lex(chi))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .filter(|s| *s == Sign::Positive)
            .count();
        poly.add_term(positives, 1);
    }
    Ok(poly)
}

/// Number of dual-basis characters of a unimodular cone sent
/// lexicographically positive by a Weyl element.
pub fn b_count(rd: &RootDatum, sigma: &Cone, w: &WeylElement) -> Result<usize> {
    let dual = polyhedral::dual_basis(sigma)?;
    let mut count = 0;
    for chi in dual.chars() {
        if polyhedral::lex_sign(rd, &w.apply_char(chi))? == Sign::Positive {
            count += 1;
        }
    }
    Ok(count)
}

fn admissibility_gates(rd: &RootDatum, fan: &Fan) -> Result<fan::FanReport> {
    let report = fan::validate_fan(rd, fan)?;
    for (field, ok) in [
        ("faces_ok", report.faces_ok),
        ("smooth", report.smooth),
        ("complete", report.complete),
        ("w_invariant", report.w_invariant),
        ("refines_chambers", report.refines_chambers),
    ] {
        if !ok {
            return Err(Error::FanNotAdmissible { field });
        }
    }
    Ok(report)
}

/// Poincaré polynomial of the smooth toroidal compactification attached
/// to an admissible fan, in factored form.
pub fn compactification_poincare(rd: &RootDatum, fan: &Fan) -> Result<FactoredPoincare> {
    let report = admissibility_gates(rd, fan)?;
    let group = rd.weyl_group()?;
    let omega_cones = fan::cones_in_negative_chamber(rd, fan)?;
    let duals: Vec<Vec<Vec<i64>>> = omega_cones
        .iter()
        .map(|c| polyhedral::dual_basis(c).map(|d| d.chars().to_vec()))
        .collect::<Result<_>>()?;
    let top = rd.positive_roots().len() + rd.rank();
    // The double sum over (w, sigma) is an integer histogram; summing
    // per-element histograms keeps the reduction deterministic.
    let histogram = group
        .par_iter()
        .map(|w| {
            let mut h = vec![0u64; top + 1];
            for dual in &duals {
                let mut b = 0;
                for chi in dual {
                    let sign = polyhedral::lex_sign(rd, &w.apply_char(chi))
                        .expect("dual characters have full rank");
                    if sign == Sign::Positive {
                        b += 1;
                    }
                }
                h[w.length() + b] += 1;
            }
            h
        })
        .reduce(
            || vec![0u64; top + 1],
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(b) {
                    *x += y;
                }
                a
            },
        );
    let first_factor = PoincarePolynomial::from_coeffs(histogram);
    let mut flag_factor = PoincarePolynomial::zero();
    for w in &group {
        flag_factor.add_term(w.length(), 1);
    }
    let product = first_factor.mul(&flag_factor);
    assert_eq!(
        product.eval_one(),
        (report.max_cone_count * group.len()) as u64,
        "Tate-summand count must equal s|W|"
    );
    Ok(FactoredPoincare {
        first_factor,
        flag_factor,
        product,
    })
}

/// Number of fixed points of the double torus action: `k |W|^2`, which
/// equals the compactification polynomial evaluated at 1.
pub fn fixed_point_count(rd: &RootDatum, fan: &Fan) -> Result<u64> {
    let report = admissibility_gates(rd, fan)?;
    let order = rd.cartan_type().weyl_order();
    let count = report.negative_chamber_cones as u128 * order * order;
    Ok(u64::try_from(count).expect("fixed-point count fits in u64"))
}
