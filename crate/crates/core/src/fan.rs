//! Fans as shared-ray index structures: the Weyl-chamber fan, validity
//! checks (smooth / complete / W-invariant / chamber-refining), stellar
//! subdivision and W-symmetrization.
//!
//! A fan stores a deduplicated list of primitive rays in cocharacter
//! coordinates plus its maximal cones as sorted index sets; everything is
//! canonicalized (rays sorted, cones sorted) so that structural equality
//! is meaningful and output ordering is deterministic.

use std::collections::{BTreeMap, HashMap, HashSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg;
use crate::polyhedral::{self, Cone, LatticeVector};
use crate::root_datum::RootDatum;

/// A fan of full-dimensional simplicial cones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fan {
    rank: usize,
    rays: Vec<LatticeVector>,
    max_cones: Vec<Vec<usize>>,
}

impl Fan {
    /// Build a fan from raw ray coordinates and cone index sets, checking
    /// the structural invariants (primitive deduplicated rays, index sets
    /// of size `rank` spanning simplicial full-dimensional cones, no
    /// duplicate cones).
    pub fn new(rank: usize, rays: Vec<Vec<i64>>, max_cones: Vec<Vec<usize>>) -> Result<Fan> {
        let rays = rays
            .into_iter()
            .map(|r| {
                if r.len() != rank {
                    return Err(Error::MalformedFan(format!(
                        "ray {r:?} does not have {rank} coordinates"
                    )));
                }
                if r.iter().all(|&x| x == 0) {
                    return Err(Error::MalformedFan("zero ray".into()));
                }
                LatticeVector::new(r)
            })
            .collect::<Result<Vec<_>>>()?;
        for cone in &max_cones {
            for &i in cone {
                if i >= rays.len() {
                    return Err(Error::MalformedFan(format!(
                        "cone {cone:?} references ray index {i} out of range"
                    )));
                }
            }
        }
        Fan::canonicalize(rank, rays, max_cones)
    }

    /// Build a fan from materialized cones, deduplicating rays.
    pub fn from_max_cones(rank: usize, cones: Vec<Vec<LatticeVector>>) -> Result<Fan> {
        let mut index: BTreeMap<LatticeVector, usize> = BTreeMap::new();
        let mut rays: Vec<LatticeVector> = Vec::new();
        let mut max_cones = Vec::with_capacity(cones.len());
        for cone in cones {
            let mut ids = Vec::with_capacity(cone.len());
            for ray in cone {
                let next = rays.len();
                let id = *index.entry(ray.clone()).or_insert_with(|| {
                    rays.push(ray);
                    next
                });
                ids.push(id);
            }
            max_cones.push(ids);
        }
        Fan::canonicalize(rank, rays, max_cones)
    }

    fn canonicalize(
        rank: usize,
        rays: Vec<LatticeVector>,
        max_cones: Vec<Vec<usize>>,
    ) -> Result<Fan> {
        // Sort rays, remap cone indices, sort each cone and the cone list.
        let mut order: Vec<usize> = (0..rays.len()).collect();
        order.sort_by(|&a, &b| rays[a].cmp(&rays[b]));
        let mut position = vec![0usize; rays.len()];
        for (new, &old) in order.iter().enumerate() {
            position[old] = new;
        }
        let mut sorted_rays: Vec<LatticeVector> = Vec::with_capacity(rays.len());
        for &old in &order {
            sorted_rays.push(rays[old].clone());
        }
        for window in sorted_rays.windows(2) {
            if window[0] == window[1] {
                return Err(Error::MalformedFan(format!(
                    "duplicate ray {:?}",
                    window[0].coords()
                )));
            }
        }
        let mut cones: Vec<Vec<usize>> = max_cones
            .into_iter()
            .map(|cone| {
                let mut c: Vec<usize> = cone.into_iter().map(|i| position[i]).collect();
                c.sort_unstable();
                c
            })
            .collect();
        cones.sort();
        for window in cones.windows(2) {
            if window[0] == window[1] {
                return Err(Error::MalformedFan(format!(
                    "duplicate max cone {:?}",
                    window[0]
                )));
            }
        }
        let fan = Fan {
            rank,
            rays: sorted_rays,
            max_cones: cones,
        };
        fan.check_structure()?;
        Ok(fan)
    }

    fn check_structure(&self) -> Result<()> {
        for cone in &self.max_cones {
            if cone.len() != self.rank {
                return Err(Error::MalformedFan(format!(
                    "max cone {cone:?} has {} rays, expected {}",
                    cone.len(),
                    self.rank
                )));
            }
            if cone.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::MalformedFan(format!(
                    "max cone {cone:?} repeats a ray"
                )));
            }
            let rays: Vec<LatticeVector> = cone.iter().map(|&i| self.rays[i].clone()).collect();
            if Cone::new(rays).is_err() {
                return Err(Error::MalformedFan(format!(
                    "max cone {cone:?} is not simplicial"
                )));
            }
        }
        Ok(())
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn rays(&self) -> &[LatticeVector] {
        &self.rays
    }

    pub fn max_cones(&self) -> &[Vec<usize>] {
        &self.max_cones
    }

    /// Materialize a cone from an index set.
    pub fn cone(&self, indices: &[usize]) -> Cone {
        Cone::new(
            indices
                .iter()
                .map(|&i| self.rays[i].clone())
                .collect(),
        )
        .expect("fan cones are simplicial by construction")
    }

    fn cones(&self) -> impl Iterator<Item = Cone> + '_ {
        self.max_cones.iter().map(|c| self.cone(c))
    }
}

/// Outcome of the validity checks on a fan.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FanReport {
    /// Every max cone is simplicial and full-dimensional.
    pub simplicial: bool,
    /// Every max cone is unimodular.
    pub smooth: bool,
    /// Every facet of a max cone is shared by exactly two max cones and
    /// the wall-adjacency graph is connected.
    pub complete: bool,
    /// Every pair of max cones meets along a common face.
    pub faces_ok: bool,
    /// The Weyl group permutes the max cones.
    pub w_invariant: bool,
    /// Every max cone lies inside a single Weyl chamber.
    pub refines_chambers: bool,
    /// Number of max cones.
    #[serde(rename = "s")]
    pub max_cone_count: usize,
    /// Number of max cones inside the negative chamber.
    #[serde(rename = "k")]
    pub negative_chamber_cones: usize,
}

/// The fan of all Weyl chambers: the images of the negative chamber
/// `{x : <alpha_i, x> <= 0}` under the Weyl group, with primitive rays in
/// the negative fundamental-coweight directions.
pub fn weyl_chamber_fan(rd: &RootDatum) -> Result<Fan> {
    let omega = negative_chamber_rays(rd);
    let group = rd.weyl_group()?;
    let cones = group
        .iter()
        .map(|w| {
            omega
                .iter()
                .map(|r| {
                    LatticeVector::new(w.apply_cochar(r.coords()))
                        .expect("Weyl images of primitive rays are primitive")
                })
                .collect()
        })
        .collect();
    Fan::from_max_cones(rd.rank(), cones)
}

/// Primitive generators of the negative Weyl chamber.
fn negative_chamber_rays(rd: &RootDatum) -> Vec<LatticeVector> {
    use crate::root_datum::LatticeKind;
    let n = rd.rank();
    match rd.lattice_kind() {
        LatticeKind::Adjoint => (0..n)
            .map(|i| {
                let mut v = vec![0i64; n];
                v[i] = -1;
                LatticeVector::new(v).expect("unit vector is primitive")
            })
            .collect(),
        LatticeKind::SimplyConnected => {
            // Fundamental coweights are the columns of the inverse Cartan
            // matrix in coroot coordinates; scale each to a primitive
            // lattice vector and negate.
            let inv = linalg::inverse(&linalg::mat_from(rd.cartan_matrix()))
                .expect("Cartan matrices are invertible");
            (0..n)
                .map(|i| {
                    let column: Vec<linalg::Q> = (0..n).map(|j| -inv[j][i].clone()).collect();
                    polyhedral::primitive_of_rational(&column)
                        .expect("coweight directions are nonzero")
                })
                .collect()
        }
    }
}

/// Pairing of every simple root against a cocharacter vector.
fn in_negative_chamber(rd: &RootDatum, v: &[i64]) -> bool {
    (0..rd.rank()).all(|i| linalg::dot_i64(&rd.simple_root_char(i), v) <= 0)
}

/// Drive a cocharacter point into the negative chamber by simple
/// reflections; returns the sequence of reflections applied. Each step
/// strictly decreases the number of positive roots pairing positively
/// with the point, so the loop ends within |positive roots| steps; the
/// bound is a generous constant cover for every supported type.
fn descend_to_negative_chamber(rd: &RootDatum, point: &[i64]) -> Vec<usize> {
    let mut q = point.to_vec();
    let mut word = Vec::new();
    let bound = 4096;
    for _ in 0..bound {
        let ascent = (0..rd.rank())
            .find(|&i| linalg::dot_i64(&rd.simple_root_char(i), &q) > 0);
        match ascent {
            Some(i) => {
                q = rd.reflect_cochar(i, &q);
                word.push(i);
            }
            None => return word,
        }
    }
    unreachable!("descent to the negative chamber terminates");
}

/// The word of the chamber containing the whole cone, if there is one.
fn chamber_word(rd: &RootDatum, cone: &Cone) -> Option<Vec<usize>> {
    let n = rd.rank();
    let mut interior = vec![0i64; n];
    for ray in cone.rays() {
        for (acc, &x) in interior.iter_mut().zip(ray.coords()) {
            *acc += x;
        }
    }
    let word = descend_to_negative_chamber(rd, &interior);
    let moved = |v: &[i64]| {
        let mut image = v.to_vec();
        for &i in &word {
            image = rd.reflect_cochar(i, &image);
        }
        image
    };
    if cone
        .rays()
        .iter()
        .all(|r| in_negative_chamber(rd, &moved(r.coords())))
    {
        Some(word)
    } else {
        None
    }
}

/// Run every validity check and aggregate the outcome.
pub fn validate_fan(rd: &RootDatum, fan: &Fan) -> Result<FanReport> {
    if rd.rank() != fan.rank() {
        return Err(Error::DimensionMismatch {
            expected: rd.rank(),
            got: fan.rank(),
        });
    }
    let (smooth, complete, faces_ok) = toric_checks(fan)?;
    let w_invariant = is_w_invariant(rd, fan);
    let refines_chambers = fan.cones().all(|c| chamber_word(rd, &c).is_some());
    let negative_chamber_cones = fan
        .max_cones()
        .iter()
        .filter(|c| {
            c.iter()
                .all(|&i| in_negative_chamber(rd, fan.rays()[i].coords()))
        })
        .count();
    Ok(FanReport {
        simplicial: true,
        smooth,
        complete,
        faces_ok,
        w_invariant,
        refines_chambers,
        max_cone_count: fan.max_cones().len(),
        negative_chamber_cones,
    })
}

/// The root-datum-free part of the validity checks: unimodularity of
/// every max cone, the wall condition for completeness, and pairwise
/// common faces.
pub(crate) fn toric_checks(fan: &Fan) -> Result<(bool, bool, bool)> {
    fan.check_structure()?;
    let cones: Vec<Cone> = fan.cones().collect();
    let smooth = cones
        .iter()
        .map(polyhedral::is_unimodular)
        .collect::<Result<Vec<bool>>>()?
        .into_iter()
        .all(|b| b);
    let complete = wall_condition(fan);
    let mut faces_ok = true;
    'outer: for i in 0..cones.len() {
        for j in i + 1..cones.len() {
            if !polyhedral::common_face(&cones[i], &cones[j]) {
                faces_ok = false;
                break 'outer;
            }
        }
    }
    Ok((smooth, complete, faces_ok))
}

/// Every facet of a max cone shared by exactly two max cones, and the
/// wall-adjacency graph connected.
fn wall_condition(fan: &Fan) -> bool {
    let s = fan.max_cones().len();
    if s == 0 {
        return false;
    }
    let mut facets: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
    for (ci, cone) in fan.max_cones().iter().enumerate() {
        for drop in 0..cone.len() {
            let mut facet = cone.clone();
            facet.remove(drop);
            facets.entry(facet).or_default().push(ci);
        }
    }
    if facets.values().any(|owners| owners.len() != 2) {
        return false;
    }
    // Union-find over wall adjacency.
    let mut parent: Vec<usize> = (0..s).collect();
    fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for owners in facets.values() {
        let a = find(&mut parent, owners[0]);
        let b = find(&mut parent, owners[1]);
        parent[a] = b;
    }
    let root = find(&mut parent, 0);
    (0..s).all(|i| find(&mut parent, i) == root)
}

/// W-invariance: the simple reflections (hence the whole group) permute
/// the max cones.
fn is_w_invariant(rd: &RootDatum, fan: &Fan) -> bool {
    let ray_index: HashMap<&[i64], usize> = fan
        .rays()
        .iter()
        .enumerate()
        .map(|(i, r)| (r.coords(), i))
        .collect();
    let cone_set: HashSet<&[usize]> = fan.max_cones().iter().map(|c| c.as_slice()).collect();
    for i in 0..rd.rank() {
        // Image of every ray must be a ray.
        let mut image_of = vec![0usize; fan.rays().len()];
        for (idx, ray) in fan.rays().iter().enumerate() {
            let image = rd.reflect_cochar(i, ray.coords());
            match ray_index.get(image.as_slice()) {
                Some(&j) => image_of[idx] = j,
                None => return false,
            }
        }
        for cone in fan.max_cones() {
            let mut image: Vec<usize> = cone.iter().map(|&r| image_of[r]).collect();
            image.sort_unstable();
            if !cone_set.contains(image.as_slice()) {
                return false;
            }
        }
    }
    true
}

/// Replace every max cone containing `ray` by the cones spanned by `ray`
/// together with the facets not containing it; all other cones are kept.
/// The result has the same support.
pub fn stellar_subdivide(fan: &Fan, ray: &[i64]) -> Result<Fan> {
    if ray.len() != fan.rank() {
        return Err(Error::DimensionMismatch {
            expected: fan.rank(),
            got: ray.len(),
        });
    }
    let ray = LatticeVector::new(ray.to_vec())?;
    let mut cones: Vec<Vec<LatticeVector>> = Vec::new();
    let mut contained = false;
    for cone in fan.cones() {
        match cone.coefficients_of(ray.coords()) {
            Some(coeffs) => {
                use num::Zero;
                contained = true;
                for (i, coeff) in coeffs.iter().enumerate() {
                    if coeff.is_zero() {
                        continue;
                    }
                    let mut new_cone: Vec<LatticeVector> = cone.rays().to_vec();
                    new_cone[i] = ray.clone();
                    cones.push(new_cone);
                }
            }
            None => cones.push(cone.rays().to_vec()),
        }
    }
    if !contained {
        return Err(Error::RayOutsideSupport);
    }
    // Subdividing at an existing ray regenerates the same cone; the
    // duplicate collapses here.
    dedup_cones(&mut cones);
    Fan::from_max_cones(fan.rank(), cones)
}

fn dedup_cones(cones: &mut Vec<Vec<LatticeVector>>) {
    for cone in cones.iter_mut() {
        cone.sort();
    }
    cones.sort();
    cones.dedup();
}

/// Close the cones inside the negative chamber under the Weyl action.
///
/// Every max cone of the input must lie inside a single chamber
/// (otherwise `NotRefinement`); the cones inside the negative chamber are
/// then swept around by the group. Cones of the input outside the
/// negative chamber are superseded by the orbit of the chamber pattern,
/// which is exactly what turns a locally subdivided fan into a
/// W-invariant one.
pub fn symmetrize(rd: &RootDatum, fan: &Fan) -> Result<Fan> {
    if rd.rank() != fan.rank() {
        return Err(Error::DimensionMismatch {
            expected: rd.rank(),
            got: fan.rank(),
        });
    }
    for cone in fan.cones() {
        if chamber_word(rd, &cone).is_none() {
            return Err(Error::NotRefinement);
        }
    }
    let seeds = cones_in_negative_chamber(rd, fan)?;
    if seeds.is_empty() {
        return Err(Error::NotRefinement);
    }
    let group = rd.weyl_group()?;
    let mut cones: Vec<Vec<LatticeVector>> = Vec::new();
    for w in &group {
        for seed in &seeds {
            cones.push(
                seed.rays()
                    .iter()
                    .map(|r| {
                        LatticeVector::new(w.apply_cochar(r.coords()))
                            .expect("Weyl images of primitive rays are primitive")
                    })
                    .collect(),
            );
        }
    }
    dedup_cones(&mut cones);
    Fan::from_max_cones(fan.rank(), cones)
}

/// The max cones all of whose rays pair nonpositively with every simple
/// root.
pub fn cones_in_negative_chamber(rd: &RootDatum, fan: &Fan) -> Result<Vec<Cone>> {
    if rd.rank() != fan.rank() {
        return Err(Error::DimensionMismatch {
            expected: rd.rank(),
            got: fan.rank(),
        });
    }
    Ok(fan
        .max_cones()
        .iter()
        .filter(|c| {
            c.iter()
                .all(|&i| in_negative_chamber(rd, fan.rays()[i].coords()))
        })
        .map(|c| fan.cone(c))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_datum::{build_root_datum, Family, LatticeKind};

    fn a2(kind: LatticeKind) -> RootDatum {
        build_root_datum(Family::A, 2, kind).unwrap()
    }

    fn sl3_bisected() -> (RootDatum, Fan) {
        let rd = a2(LatticeKind::SimplyConnected);
        let chambers = weyl_chamber_fan(&rd).unwrap();
        let subdivided = stellar_subdivide(&chambers, &[-1, -1]).unwrap();
        let fan = symmetrize(&rd, &subdivided).unwrap();
        (rd, fan)
    }

    #[test]
    fn chamber_fan_ranks() {
        let a1 = build_root_datum(Family::A, 1, LatticeKind::SimplyConnected).unwrap();
        let fan = weyl_chamber_fan(&a1).unwrap();
        assert_eq!(fan.rays().len(), 2);
        assert_eq!(fan.max_cones().len(), 2);
        assert!(fan.rays().iter().any(|r| r.coords() == [1]));
        assert!(fan.rays().iter().any(|r| r.coords() == [-1]));

        let adjoint = weyl_chamber_fan(&a2(LatticeKind::Adjoint)).unwrap();
        assert_eq!(adjoint.rays().len(), 6);
        assert_eq!(adjoint.max_cones().len(), 6);
        // The negative chamber is the negative orthant.
        let omega: Vec<Vec<i64>> = vec![vec![-1, 0], vec![0, -1]];
        assert!(adjoint
            .max_cones()
            .iter()
            .any(|c| c.iter().all(|&i| omega.contains(&adjoint.rays()[i].coords().to_vec()))));

        let sc = weyl_chamber_fan(&a2(LatticeKind::SimplyConnected)).unwrap();
        assert_eq!(sc.max_cones().len(), 6);
        let omega_sc: Vec<Vec<i64>> = vec![vec![-2, -1], vec![-1, -2]];
        assert!(sc
            .max_cones()
            .iter()
            .any(|c| c.iter().all(|&i| omega_sc.contains(&sc.rays()[i].coords().to_vec()))));
    }

    #[test]
    fn validate_chamber_fans() {
        let rd = a2(LatticeKind::Adjoint);
        let fan = weyl_chamber_fan(&rd).unwrap();
        let report = validate_fan(&rd, &fan).unwrap();
        assert!(report.smooth && report.complete && report.w_invariant);
        assert!(report.faces_ok && report.refines_chambers);
        assert_eq!(report.max_cone_count, 6);
        assert_eq!(report.negative_chamber_cones, 1);

        let rd = a2(LatticeKind::SimplyConnected);
        let fan = weyl_chamber_fan(&rd).unwrap();
        let report = validate_fan(&rd, &fan).unwrap();
        assert!(!report.smooth);
        assert!(report.complete && report.w_invariant && report.refines_chambers);
    }

    #[test]
    fn validate_bisected_fan() {
        let (rd, fan) = sl3_bisected();
        assert_eq!(fan.max_cones().len(), 12);
        let report = validate_fan(&rd, &fan).unwrap();
        assert!(report.smooth && report.complete && report.w_invariant);
        assert!(report.refines_chambers && report.faces_ok);
        assert_eq!(report.max_cone_count, 12);
        assert_eq!(report.negative_chamber_cones, 2);
    }

    #[test]
    fn stellar_subdivision_examples() {
        let rd = a2(LatticeKind::SimplyConnected);
        let chambers = weyl_chamber_fan(&rd).unwrap();
        let subdivided = stellar_subdivide(&chambers, &[-1, -1]).unwrap();
        assert_eq!(subdivided.max_cones().len(), 7);
        let in_omega = cones_in_negative_chamber(&rd, &subdivided).unwrap();
        assert_eq!(in_omega.len(), 2);
        let ray_sets: Vec<Vec<Vec<i64>>> = in_omega
            .iter()
            .map(|c| c.rays().iter().map(|r| r.coords().to_vec()).collect())
            .collect();
        assert!(ray_sets.contains(&vec![vec![-2, -1], vec![-1, -1]]));
        assert!(ray_sets.contains(&vec![vec![-1, -2], vec![-1, -1]])
            || ray_sets.contains(&vec![vec![-1, -1], vec![-1, -2]]));

        // Subdividing at an existing ray changes nothing.
        let again = stellar_subdivide(&subdivided, &[-1, -1]).unwrap();
        assert_eq!(again, subdivided);

        // A ray outside the support of a partial fan is rejected.
        let omega_only = Fan::new(
            2,
            vec![vec![-1, 0], vec![0, -1]],
            vec![vec![0, 1]],
        )
        .unwrap();
        assert_eq!(
            stellar_subdivide(&omega_only, &[1, 1]),
            Err(Error::RayOutsideSupport)
        );
    }

    #[test]
    fn symmetrize_examples() {
        let (rd, fan) = sl3_bisected();
        // The W-orbit of the two bisected chamber cones is the full fan.
        let seeds = cones_in_negative_chamber(&rd, &fan).unwrap();
        let seed_fan = Fan::from_max_cones(
            2,
            seeds.iter().map(|c| c.rays().to_vec()).collect(),
        )
        .unwrap();
        assert_eq!(symmetrize(&rd, &seed_fan).unwrap(), fan);

        // The chamber fan is already invariant.
        let chambers = weyl_chamber_fan(&rd).unwrap();
        assert_eq!(symmetrize(&rd, &chambers).unwrap(), chambers);

        // Idempotence.
        assert_eq!(symmetrize(&rd, &fan).unwrap(), fan);

        // A cone spanning two chambers is rejected.
        let adjoint = a2(LatticeKind::Adjoint);
        let straddling = Fan::new(
            2,
            vec![vec![-1, 0], vec![1, -1]],
            vec![vec![0, 1]],
        )
        .unwrap();
        assert_eq!(symmetrize(&adjoint, &straddling), Err(Error::NotRefinement));
    }

    #[test]
    fn negative_chamber_cones_examples() {
        let (rd, fan) = sl3_bisected();
        assert_eq!(cones_in_negative_chamber(&rd, &fan).unwrap().len(), 2);

        let chambers = weyl_chamber_fan(&rd).unwrap();
        assert_eq!(cones_in_negative_chamber(&rd, &chambers).unwrap().len(), 1);

        let a1 = build_root_datum(Family::A, 1, LatticeKind::SimplyConnected).unwrap();
        let fan1 = weyl_chamber_fan(&a1).unwrap();
        let omega = cones_in_negative_chamber(&a1, &fan1).unwrap();
        assert_eq!(omega.len(), 1);
        assert_eq!(omega[0].rays()[0].coords(), &[-1]);
    }

    #[test]
    fn malformed_fans_rejected() {
        // Non-primitive ray.
        assert!(matches!(
            Fan::new(2, vec![vec![2, 4], vec![0, -1]], vec![vec![0, 1]]),
            Err(Error::MalformedFan(_))
        ));
        // Index out of range.
        assert!(matches!(
            Fan::new(2, vec![vec![1, 0], vec![0, 1]], vec![vec![0, 2]]),
            Err(Error::MalformedFan(_))
        ));
        // Dependent rays in a cone.
        assert!(matches!(
            Fan::new(2, vec![vec![1, 0], vec![-1, 0]], vec![vec![0, 1]]),
            Err(Error::MalformedFan(_))
        ));
        // Duplicate cones.
        assert!(matches!(
            Fan::new(
                2,
                vec![vec![1, 0], vec![0, 1]],
                vec![vec![0, 1], vec![1, 0]]
            ),
            Err(Error::MalformedFan(_))
        ));
    }

    #[test]
    fn incomplete_fan_detected() {
        let rd = a2(LatticeKind::Adjoint);
        let omega_only = Fan::new(
            2,
            vec![vec![-1, 0], vec![0, -1]],
            vec![vec![0, 1]],
        )
        .unwrap();
        let report = validate_fan(&rd, &omega_only).unwrap();
        assert!(!report.complete);
        assert!(report.smooth && report.refines_chambers);
        assert!(!report.w_invariant);
    }
}
