//! Motivic arithmetic for compactified torsors of the special linear
//! group of a degree-p division algebra: the Rost summand pattern, the
//! Severi-Brauer polynomial, decomposition of a Poincaré polynomial into
//! `P = P_R + m(t) P_S`, and the Chow-ring presentations.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::poincare::{poly_div_exact, PoincarePolynomial};

fn require_prime(p: u64) -> Result<()> {
    if p < 2 {
        return Err(Error::NotPrime(p));
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return Err(Error::NotPrime(p));
        }
        d += 1;
    }
    Ok(())
}

/// Shift step of the Rost pattern: `b = (p^{n-1} - 1)/(p - 1)`.
fn rost_shift_step(p: u64, n: u32) -> Result<usize> {
    if n < 2 {
        return Err(Error::BadDegree(n));
    }
    let power = (p as u128)
        .checked_pow(n - 1)
        .ok_or(Error::BadDegree(n))?;
    let b = (power - 1) / (p as u128 - 1);
    // Resource guard; the geometric case is n = 3 with small p.
    if b * (p as u128 - 1) > 1 << 20 {
        return Err(Error::BadDegree(n));
    }
    Ok(b as usize)
}

/// The Tate pattern of a degree-n Rost summand at the prime p:
/// `1 + t^b + t^{2b} + ... + t^{(p-1)b}` with `b = (p^{n-1}-1)/(p-1)`.
pub fn rost_polynomial(p: u64, n: u32) -> Result<PoincarePolynomial> {
    require_prime(p)?;
    let b = rost_shift_step(p, n)?;
    let mut poly = PoincarePolynomial::zero();
    for i in 0..p as usize {
        poly.add_term(i * b, 1);
    }
    Ok(poly)
}

/// Split Severi-Brauer polynomial `1 + t + ... + t^{p-1}`; the variety
/// has dimension p - 1.
pub fn severi_brauer_polynomial(p: u64) -> Result<PoincarePolynomial> {
    require_prime(p)?;
    Ok(PoincarePolynomial::from_coeffs(vec![1; p as usize]))
}

/// A decomposition `P = P_R + sum_j m_j t^j P_S` with nonnegative
/// multiplicities: the Poincaré shadow of splitting off the Rost summand
/// and shifted copies of the Severi-Brauer motive.
///
/// This is arithmetic on Poincaré data only; it does not (and cannot)
/// check the geometric splitting hypotheses on the variety behind `P`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MotivicDecomposition {
    p: u64,
    n: u32,
    rost_shifts: Vec<usize>,
    sb_multiplicities: BTreeMap<usize, u64>,
}

impl MotivicDecomposition {
    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn rost_degree(&self) -> u32 {
        self.n
    }

    /// Shifts `0, b, 2b, ..., (p-1)b` of the Rost summand's Tate pieces.
    pub fn rost_shifts(&self) -> &[usize] {
        &self.rost_shifts
    }

    /// Nonzero multiplicities, shift -> copies of the Severi-Brauer
    /// polynomial.
    pub fn sb_multiplicities(&self) -> &BTreeMap<usize, u64> {
        &self.sb_multiplicities
    }

    /// Total number of Severi-Brauer copies.
    pub fn sb_total(&self) -> u64 {
        self.sb_multiplicities.values().sum()
    }

    /// Reassemble `P_R + m(t) P_S`; inverse of `decompose`.
    pub fn reconstruct(&self) -> PoincarePolynomial {
        let mut poly = rost_polynomial(self.p, self.n).expect("fields validated");
        let sb = severi_brauer_polynomial(self.p).expect("fields validated");
        for (&shift, &mult) in &self.sb_multiplicities {
            for (d, &c) in sb.coeffs().iter().enumerate() {
                poly.add_term(shift + d, mult * c);
            }
        }
        poly
    }
}

/// Solve `P = P_R + m(t) P_S` for nonnegative `m` by exact polynomial
/// long division of `P - P_R` by `P_S`; errors with `NotDecomposable`
/// when the remainder is nonzero or a multiplicity would be negative.
pub fn decompose(poly: &PoincarePolynomial, p: u64, n: u32) -> Result<MotivicDecomposition> {
    let rost = rost_polynomial(p, n)?;
    let sb = severi_brauer_polynomial(p)?;
    let len = poly.coeffs().len().max(rost.coeffs().len());
    let mut difference = vec![0i128; len];
    for (i, &c) in poly.coeffs().iter().enumerate() {
        difference[i] += c as i128;
    }
    for (i, &c) in rost.coeffs().iter().enumerate() {
        difference[i] -= c as i128;
    }
    let sb_coeffs: Vec<i128> = sb.coeffs().iter().map(|&c| c as i128).collect();
    let quotient = poly_div_exact(&difference, &sb_coeffs)
        .ok_or_else(|| Error::NotDecomposable("nonzero remainder".into()))?;
    if quotient.iter().any(|&c| c < 0) {
        return Err(Error::NotDecomposable("negative multiplicity".into()));
    }
    let b = rost_shift_step(p, n)?;
    let sb_multiplicities = quotient
        .into_iter()
        .enumerate()
        .filter(|&(_, m)| m > 0)
        .map(|(j, m)| (j, m as u64))
        .collect();
    Ok(MotivicDecomposition {
        p,
        n,
        rost_shifts: (0..p as usize).map(|i| i * b).collect(),
        sb_multiplicities,
    })
}

/// Number of Severi-Brauer copies in the decomposition of a toroidal
/// compactification whose fan has `s` cones of maximal dimension:
/// `s (p-1)! - 1`.
pub fn sb_copy_count(s: u64, p: u64) -> u64 {
    let factorial: u64 = (1..p).product();
    s * factorial - 1
}

/// One graded component of a Chow-ring presentation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupDescriptor {
    /// Free abelian of the given rank.
    Free(u64),
    /// Cyclic of the given order.
    Torsion(u64),
}

impl fmt::Display for GroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupDescriptor::Free(1) => write!(f, "Z"),
            GroupDescriptor::Free(r) => write!(f, "Z^{r}"),
            GroupDescriptor::Torsion(n) => write!(f, "Z/{n}"),
        }
    }
}

/// Graded presentation of a Chow ring with a single generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChowRingPresentation {
    p: u64,
    generator_degree: usize,
    components: BTreeMap<usize, GroupDescriptor>,
    relations: Vec<String>,
    note: Option<&'static str>,
}

impl ChowRingPresentation {
    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn generator_degree(&self) -> usize {
        self.generator_degree
    }

    /// Degree -> group, only the nontrivial components.
    pub fn components(&self) -> &BTreeMap<usize, GroupDescriptor> {
        &self.components
    }

    pub fn relations(&self) -> &[String] {
        &self.relations
    }

    pub fn note(&self) -> Option<&'static str> {
        self.note
    }
}

/// Chow ring of the norm-one group of a degree-p division algebra:
/// free of rank 1 in degree 0 and p-torsion generated by the powers of a
/// single class h of degree p+1, up to degree p^2 - 1.
pub fn chow_ring_sl1(p: u64) -> Result<ChowRingPresentation> {
    require_prime(p)?;
    let h_degree = p as usize + 1;
    let mut components = BTreeMap::new();
    components.insert(0, GroupDescriptor::Free(1));
    for j in 1..p as usize {
        components.insert(h_degree * j, GroupDescriptor::Torsion(p));
    }
    Ok(ChowRingPresentation {
        p,
        generator_degree: h_degree,
        components,
        relations: vec!["p*h=0".into(), "h^p=0".into()],
        note: None,
    })
}

/// Chow ring of a nonsplit torsor under that group: the constant answer,
/// established in characteristic zero.
pub fn chow_torsor(p: u64) -> Result<ChowRingPresentation> {
    require_prime(p)?;
    let mut components = BTreeMap::new();
    components.insert(0, GroupDescriptor::Free(1));
    Ok(ChowRingPresentation {
        p,
        generator_degree: 0,
        components,
        relations: Vec::new(),
        note: Some("char 0"),
    })
}

/// The exponent pairs of the diagonal expression
/// `sum_{i=0}^{p-1} h^i x h^{p-1-i}`, which equals c times the diagonal
/// class for some integer c prime to p.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagonalExpression {
    pub pairs: Vec<(u32, u32)>,
    pub scalar_note: &'static str,
}

pub fn diagonal_pairs(p: u64) -> Result<DiagonalExpression> {
    require_prime(p)?;
    let top = (p - 1) as u32;
    Ok(DiagonalExpression {
        pairs: (0..=top).map(|i| (i, top - i)).collect(),
        scalar_note: "equals c times the diagonal class for some integer c prime to p",
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rost_patterns() {
        assert_eq!(
            rost_polynomial(3, 3).unwrap().coeffs(),
            &[1, 0, 0, 0, 1, 0, 0, 0, 1]
        );
        assert_eq!(rost_polynomial(2, 3).unwrap().coeffs(), &[1, 0, 0, 1]);
        assert_eq!(rost_polynomial(5, 2).unwrap().coeffs(), &[1, 1, 1, 1, 1]);
        assert_eq!(rost_polynomial(4, 3), Err(Error::NotPrime(4)));
        assert_eq!(rost_polynomial(3, 1), Err(Error::BadDegree(1)));
        // degree = p^2 - 1 for n = 3.
        for p in [2u64, 3, 5, 7] {
            let poly = rost_polynomial(p, 3).unwrap();
            assert_eq!(poly.degree().unwrap() as u64, p * p - 1);
        }
    }

    #[test]
    fn severi_brauer_patterns() {
        assert_eq!(severi_brauer_polynomial(3).unwrap().coeffs(), &[1, 1, 1]);
        assert_eq!(severi_brauer_polynomial(2).unwrap().coeffs(), &[1, 1]);
        assert_eq!(
            severi_brauer_polynomial(5).unwrap().coeffs(),
            &[1, 1, 1, 1, 1]
        );
        assert_eq!(severi_brauer_polynomial(6), Err(Error::NotPrime(6)));
    }

    #[test]
    fn decompose_examples() {
        let poly = PoincarePolynomial::from_coeffs(vec![1, 1, 2, 3, 4, 3, 2, 1, 1]);
        let dec = decompose(&poly, 3, 3).unwrap();
        assert_eq!(dec.rost_shifts(), &[0, 4, 8]);
        let expected: BTreeMap<usize, u64> =
            [(1, 1), (2, 1), (3, 1), (4, 1), (5, 1)].into_iter().collect();
        assert_eq!(dec.sb_multiplicities(), &expected);
        assert_eq!(dec.reconstruct(), poly);

        let product = PoincarePolynomial::from_coeffs(vec![1, 3, 8, 15, 18, 15, 8, 3, 1]);
        let dec = decompose(&product, 3, 3).unwrap();
        let expected: BTreeMap<usize, u64> =
            [(1, 3), (2, 5), (3, 7), (4, 5), (5, 3)].into_iter().collect();
        assert_eq!(dec.sb_multiplicities(), &expected);
        assert_eq!(dec.sb_total(), 23);

        let too_small = PoincarePolynomial::from_coeffs(vec![1, 1]);
        assert!(matches!(
            decompose(&too_small, 3, 3),
            Err(Error::NotDecomposable(_))
        ));

        // A pure Rost pattern decomposes with no Severi-Brauer copies.
        let pure = rost_polynomial(3, 3).unwrap();
        let dec = decompose(&pure, 3, 3).unwrap();
        assert!(dec.sb_multiplicities().is_empty());
    }

    #[test]
    fn copy_counts() {
        assert_eq!(sb_copy_count(12, 3), 23);
        assert_eq!(sb_copy_count(3, 3), 5);
        assert_eq!(sb_copy_count(1, 2), 0);
    }

    #[test]
    fn chow_ring_tables() {
        let ring = chow_ring_sl1(3).unwrap();
        assert_eq!(ring.generator_degree(), 4);
        let expected: BTreeMap<usize, GroupDescriptor> = [
            (0, GroupDescriptor::Free(1)),
            (4, GroupDescriptor::Torsion(3)),
            (8, GroupDescriptor::Torsion(3)),
        ]
        .into_iter()
        .collect();
        assert_eq!(ring.components(), &expected);
        assert_eq!(ring.relations(), &["p*h=0".to_string(), "h^p=0".to_string()]);

        let ring = chow_ring_sl1(2).unwrap();
        assert_eq!(
            ring.components().get(&3),
            Some(&GroupDescriptor::Torsion(2))
        );
        assert_eq!(ring.components().len(), 2);

        let ring = chow_ring_sl1(5).unwrap();
        let torsion_degrees: Vec<usize> = ring
            .components()
            .iter()
            .filter(|(_, g)| matches!(g, GroupDescriptor::Torsion(_)))
            .map(|(&d, _)| d)
            .collect();
        assert_eq!(torsion_degrees, vec![6, 12, 18, 24]);
    }

    #[test]
    fn torsor_ring_is_constant() {
        for p in [2u64, 3, 5] {
            let ring = chow_torsor(p).unwrap();
            assert_eq!(ring.components().len(), 1);
            assert_eq!(ring.components().get(&0), Some(&GroupDescriptor::Free(1)));
            assert_eq!(ring.note(), Some("char 0"));
        }
    }

    #[test]
    fn diagonal_pair_lists() {
        assert_eq!(
            diagonal_pairs(3).unwrap().pairs,
            vec![(0, 2), (1, 1), (2, 0)]
        );
        assert_eq!(diagonal_pairs(2).unwrap().pairs, vec![(0, 1), (1, 0)]);
        let five = diagonal_pairs(5).unwrap();
        assert_eq!(five.pairs.len(), 5);
        assert!(five.pairs.iter().all(|&(a, b)| a + b == 4));
    }

    #[test]
    fn group_descriptor_display() {
        assert_eq!(GroupDescriptor::Free(1).to_string(), "Z");
        assert_eq!(GroupDescriptor::Torsion(3).to_string(), "Z/3");
    }
}
