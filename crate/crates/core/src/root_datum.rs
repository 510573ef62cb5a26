//! Root data of split semisimple groups: Cartan matrices of the
//! irreducible types, the two lattice flavors, and Weyl groups enumerated
//! with reduced words and lengths.
//!
//! Coordinate convention, fixed once for the whole crate:
//!
//! * simply connected: characters are written in the fundamental-weight
//!   basis, cocharacters in the simple-coroot basis;
//! * adjoint: characters in the simple-root basis, cocharacters in the
//!   fundamental-coweight basis.
//!
//! In both flavors the pairing of a character with a cocharacter is the
//! plain dot product, the i-th simple root has character coordinates equal
//! to row i of the Cartan matrix (simply connected) or the i-th standard
//! basis vector (adjoint), and the i-th simple coroot has cocharacter
//! coordinates equal to the i-th standard basis vector (simply connected)
//! or column i of the Cartan matrix (adjoint).

use std::collections::{HashMap, HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::linalg::{self, Q};

/// Hard limit on Weyl-group enumeration.
pub const WEYL_GROUP_LIMIT: usize = 1_000_000;

/// The irreducible Cartan families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Family> {
        match c.to_ascii_uppercase() {
            'A' => Some(Family::A),
            'B' => Some(Family::B),
            'C' => Some(Family::C),
            'D' => Some(Family::D),
            'E' => Some(Family::E),
            'F' => Some(Family::F),
            'G' => Some(Family::G),
            _ => None,
        }
    }
}

/// An irreducible Cartan type `X_n` with the rank constraint of its family
/// already checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CartanType {
    family: Family,
    rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<CartanType> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if !ok {
            return Err(Error::InvalidRank {
                family: family.letter(),
                rank,
            });
        }
        Ok(CartanType { family, rank })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Cartan matrix `A` with `A[i][j] = <alpha_i, alpha_j^v>`, simple
    /// roots in Bourbaki order.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut a = vec![vec![0i64; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let bond = |a: &mut Vec<Vec<i64>>, i: usize, j: usize| {
            a[i][j] = -1;
            a[j][i] = -1;
        };
        match self.family {
            Family::A => {
                for i in 0..n - 1 {
                    bond(&mut a, i, i + 1);
                }
            }
            Family::B => {
                for i in 0..n - 1 {
                    bond(&mut a, i, i + 1);
                }
                // alpha_{n-1} long, alpha_n short.
                a[n - 2][n - 1] = -2;
                a[n - 1][n - 2] = -1;
            }
            Family::C => {
                for i in 0..n - 1 {
                    bond(&mut a, i, i + 1);
                }
                a[n - 2][n - 1] = -1;
                a[n - 1][n - 2] = -2;
            }
            Family::D => {
                // Chain on the first n-2 nodes, then a fork at node n-2.
                for i in 0..n - 3 {
                    bond(&mut a, i, i + 1);
                }
                bond(&mut a, n - 3, n - 2);
                bond(&mut a, n - 3, n - 1);
            }
            Family::E => {
                // Chain 1-3-4-5-6(-7)(-8) plus node 2 attached to node 4.
                bond(&mut a, 0, 2);
                bond(&mut a, 2, 3);
                bond(&mut a, 3, 4);
                bond(&mut a, 4, 5);
                if n >= 7 {
                    bond(&mut a, 5, 6);
                }
                if n == 8 {
                    bond(&mut a, 6, 7);
                }
                bond(&mut a, 1, 3);
            }
            Family::F => {
                bond(&mut a, 0, 1);
                bond(&mut a, 2, 3);
                a[1][2] = -2;
                a[2][1] = -1;
            }
            Family::G => {
                a[0][1] = -1;
                a[1][0] = -3;
            }
        }
        a
    }

    /// Order of the Weyl group, from the classical formulas.
    pub fn weyl_order(&self) -> u128 {
        let n = self.rank as u128;
        let factorial = |k: u128| (1..=k).product::<u128>();
        match self.family {
            Family::A => factorial(n + 1),
            Family::B | Family::C => (1u128 << n) * factorial(n),
            Family::D => (1u128 << (n - 1)) * factorial(n),
            Family::E => match self.rank {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            Family::F => 1_152,
            Family::G => 12,
        }
    }
}

/// Character-lattice flavor of the root datum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LatticeKind {
    SimplyConnected,
    Adjoint,
}

/// A root datum: Cartan matrix, lattice flavor, and the cached rational
/// data needed for coordinate conversions.
#[derive(Debug, Clone)]
pub struct RootDatum {
    cartan_type: CartanType,
    cartan: Vec<Vec<i64>>,
    kind: LatticeKind,
    rank: usize,
    /// Inverse of the transposed Cartan matrix; converts simply-connected
    /// character coordinates (weight basis) to simple-root coordinates.
    cartan_t_inv: Vec<Vec<Q>>,
    /// Order in which simple-root coordinates are compared
    /// lexicographically. Natural order unless overridden.
    lex_order: Vec<usize>,
}

impl RootDatum {
    pub fn new(cartan_type: CartanType, kind: LatticeKind) -> RootDatum {
        let cartan = cartan_type.cartan_matrix();
        let n = cartan_type.rank();
        let transpose: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| cartan[j][i]).collect())
            .collect();
        let cartan_t_inv = linalg::inverse(&linalg::mat_from(&transpose))
            .expect("Cartan matrices are invertible");
        RootDatum {
            cartan_type,
            cartan,
            kind,
            rank: n,
            cartan_t_inv,
            lex_order: (0..n).collect(),
        }
    }

    /// Same datum with a permuted simple-root order for the lexicographic
    /// comparison. The final Poincaré polynomials do not depend on this
    /// choice; individual cone/element counts may.
    pub fn with_lex_order(mut self, order: Vec<usize>) -> Result<RootDatum> {
        let mut seen = vec![false; self.rank];
        if order.len() != self.rank {
            return Err(Error::DimensionMismatch {
                expected: self.rank,
                got: order.len(),
            });
        }
        for &i in &order {
            if i >= self.rank || seen[i] {
                return Err(Error::DimensionMismatch {
                    expected: self.rank,
                    got: order.len(),
                });
            }
            seen[i] = true;
        }
        self.lex_order = order;
        Ok(self)
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn lattice_kind(&self) -> LatticeKind {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn lex_order(&self) -> &[usize] {
        &self.lex_order
    }

    /// Character coordinates of the i-th simple root.
    pub fn simple_root_char(&self, i: usize) -> Vec<i64> {
        match self.kind {
            LatticeKind::SimplyConnected => self.cartan[i].clone(),
            LatticeKind::Adjoint => unit(self.rank, i),
        }
    }

    /// Cocharacter coordinates of the i-th simple coroot.
    pub fn simple_coroot_cochar(&self, i: usize) -> Vec<i64> {
        match self.kind {
            LatticeKind::SimplyConnected => unit(self.rank, i),
            LatticeKind::Adjoint => (0..self.rank).map(|j| self.cartan[j][i]).collect(),
        }
    }

    /// Simple-root coordinates of a character, exact rationals.
    pub fn root_coords(&self, chi: &[i64]) -> Result<Vec<Q>> {
        self.check_dim(chi.len())?;
        Ok(match self.kind {
            LatticeKind::SimplyConnected => {
                linalg::mat_vec_q(&self.cartan_t_inv, &linalg::row_from(chi))
            }
            LatticeKind::Adjoint => linalg::row_from(chi),
        })
    }

    /// Simple reflection s_i on character coordinates.
    pub fn reflect_char(&self, i: usize, chi: &[i64]) -> Vec<i64> {
        let root = self.simple_root_char(i);
        let coroot = self.simple_coroot_cochar(i);
        let pairing = linalg::dot_i64(chi, &coroot);
        chi.iter()
            .zip(&root)
            .map(|(&c, &r)| c - pairing * r)
            .collect()
    }

    /// Simple reflection s_i on cocharacter coordinates.
    pub fn reflect_cochar(&self, i: usize, v: &[i64]) -> Vec<i64> {
        let root = self.simple_root_char(i);
        let coroot = self.simple_coroot_cochar(i);
        let pairing = linalg::dot_i64(&root, v);
        v.iter()
            .zip(&coroot)
            .map(|(&c, &r)| c - pairing * r)
            .collect()
    }

    fn reflection_matrices(&self, i: usize) -> (Vec<Vec<i64>>, Vec<Vec<i64>>) {
        let n = self.rank;
        let root = self.simple_root_char(i);
        let coroot = self.simple_coroot_cochar(i);
        let mut char_m = vec![vec![0i64; n]; n];
        let mut cochar_m = vec![vec![0i64; n]; n];
        for r in 0..n {
            for c in 0..n {
                let delta = i64::from(r == c);
                char_m[r][c] = delta - coroot[c] * root[r];
                cochar_m[r][c] = delta - root[c] * coroot[r];
            }
        }
        (char_m, cochar_m)
    }

    /// All roots, in character coordinates: the closure of the simple
    /// roots under the simple reflections.
    fn all_roots(&self) -> Vec<Vec<i64>> {
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
        for i in 0..self.rank {
            let r = self.simple_root_char(i);
            if seen.insert(r.clone()) {
                queue.push_back(r);
            }
        }
        while let Some(r) = queue.pop_front() {
            for i in 0..self.rank {
                let image = self.reflect_char(i, &r);
                if seen.insert(image.clone()) {
                    queue.push_back(image);
                }
            }
        }
        let mut roots: Vec<Vec<i64>> = seen.into_iter().collect();
        roots.sort();
        roots
    }

    /// The positive roots, in character coordinates.
    pub fn positive_roots(&self) -> Vec<Vec<i64>> {
        use num::Signed;
        self.all_roots()
            .into_iter()
            .filter(|r| {
                self.root_coords(r)
                    .expect("root has full rank coordinates")
                    .iter()
                    .all(|c| !c.is_negative())
            })
            .collect()
    }

    /// An integer cocharacter strictly inside the positive chamber; its
    /// stabilizer in the Weyl group is trivial, so its orbit indexes the
    /// group.
    fn regular_cocharacter(&self) -> Vec<i64> {
        match self.kind {
            LatticeKind::Adjoint => vec![1; self.rank],
            LatticeKind::SimplyConnected => {
                let ones = vec![linalg::q_from(1); self.rank];
                let coords = linalg::solve(&linalg::mat_from(&self.cartan), &ones)
                    .expect("Cartan matrices are invertible");
                crate::polyhedral::primitive_of_rational(&coords)
                    .expect("dominant regular vector is nonzero")
                    .coords()
                    .to_vec()
            }
        }
    }

    /// Complete enumeration of the Weyl group by breadth-first closure
    /// over the simple reflections. Each element carries a reduced word;
    /// elements are ordered by length, then by discovery.
    pub fn weyl_group(&self) -> Result<Vec<WeylElement>> {
        if self.cartan_type.weyl_order() > WEYL_GROUP_LIMIT as u128 {
            return Err(Error::GroupTooLarge {
                limit: WEYL_GROUP_LIMIT,
            });
        }
        let n = self.rank;
        let gens: Vec<(Vec<Vec<i64>>, Vec<Vec<i64>>)> =
            (0..n).map(|i| self.reflection_matrices(i)).collect();
        // Deduplicate by the image of a regular vector rather than the
        // whole matrix: one matrix-vector product per candidate edge.
        let rho = self.regular_cocharacter();
        let reflected_rho: Vec<Vec<i64>> =
            (0..n).map(|i| linalg::mat_vec_i64(&gens[i].1, &rho)).collect();
        let identity = WeylElement {
            char_matrix: (0..n).map(|i| unit(n, i)).collect(),
            cochar_matrix: (0..n).map(|i| unit(n, i)).collect(),
            word: Vec::new(),
        };
        let mut seen: HashMap<Vec<i64>, usize> = HashMap::new();
        seen.insert(rho.clone(), 0);
        let mut elements = vec![identity];
        let mut cursor = 0;
        while cursor < elements.len() {
            for i in 0..n {
                let key = linalg::mat_vec_i64(&elements[cursor].cochar_matrix, &reflected_rho[i]);
                if seen.contains_key(&key) {
                    continue;
                }
                let (char_m, cochar_m, mut word) = {
                    let w = &elements[cursor];
                    (
                        linalg::mat_mul_i64(&w.char_matrix, &gens[i].0),
                        linalg::mat_mul_i64(&w.cochar_matrix, &gens[i].1),
                        w.word.clone(),
                    )
                };
                word.push(i);
                seen.insert(key, elements.len());
                elements.push(WeylElement {
                    char_matrix: char_m,
                    cochar_matrix: cochar_m,
                    word,
                });
                if elements.len() > WEYL_GROUP_LIMIT {
                    return Err(Error::GroupTooLarge {
                        limit: WEYL_GROUP_LIMIT,
                    });
                }
            }
            cursor += 1;
        }
        Ok(elements)
    }
}

fn unit(n: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0i64; n];
    v[i] = 1;
    v
}


/// A Weyl-group element: its action on both lattices, plus a reduced word
/// in the simple reflections.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylElement {
    /// Action on character coordinates (matrix times column vector).
    char_matrix: Vec<Vec<i64>>,
    /// Action on cocharacter coordinates; the inverse transpose of
    /// `char_matrix`, maintained alongside it.
    cochar_matrix: Vec<Vec<i64>>,
    word: Vec<usize>,
}

impl WeylElement {
    pub fn char_matrix(&self) -> &[Vec<i64>] {
        &self.char_matrix
    }

    pub fn cochar_matrix(&self) -> &[Vec<i64>] {
        &self.cochar_matrix
    }

    /// Reduced word in the simple reflections; `w = s_{w0} s_{w1} ...`
    /// acting by function composition (rightmost letter applied first).
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    pub fn apply_char(&self, chi: &[i64]) -> Vec<i64> {
        linalg::mat_vec_i64(&self.char_matrix, chi)
    }

    pub fn apply_cochar(&self, v: &[i64]) -> Vec<i64> {
        linalg::mat_vec_i64(&self.cochar_matrix, v)
    }

    pub fn apply_char_q(&self, chi: &[Q]) -> Vec<Q> {
        linalg::mat_vec_q(&linalg::mat_from(&self.char_matrix), chi)
    }
}

impl RootDatum {
    fn check_dim(&self, got: usize) -> Result<()> {
        if got != self.rank {
            return Err(Error::DimensionMismatch {
                expected: self.rank,
                got,
            });
        }
        Ok(())
    }

    /// Action of a Weyl element on a character vector.
    pub fn act_on_character(&self, w: &WeylElement, chi: &[i64]) -> Result<Vec<i64>> {
        self.check_dim(chi.len())?;
        Ok(w.apply_char(chi))
    }
}

/// Convenience constructor matching the CLI surface.
pub fn build_root_datum(family: Family, rank: usize, kind: LatticeKind) -> Result<RootDatum> {
    Ok(RootDatum::new(CartanType::new(family, rank)?, kind))
}
