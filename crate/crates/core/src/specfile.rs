//! JSON spec files describing a root datum plus a fan.
//!
//! The schema is shared by the CLI commands that read or write fans:
//!
//! ```json
//! {
//!   "coordinates": "cocharacter",
//!   "root_datum": { "family": "A", "rank": 2, "lattice": "simply_connected" },
//!   "fan": {
//!     "rays": [[-2, -1], [-1, -2]],
//!     "max_cones": [[0, 1]]
//!   }
//! }
//! ```
//!
//! The `coordinates` header is mandatory and must be `"cocharacter"`; it
//! pins the convention in which the rays are expressed. `root_datum` may
//! be omitted for pure toric fans, in which case a bare `rank` field is
//! required instead.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fan::Fan;
use crate::root_datum::{build_root_datum, Family, LatticeKind, RootDatum};

pub const COORDINATES: &str = "cocharacter";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecFile {
    pub coordinates: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub root_datum: Option<RootDatumSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rank: Option<usize>,
    pub fan: FanSpec,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RootDatumSpec {
    pub family: String,
    pub rank: usize,
    pub lattice: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FanSpec {
    pub rays: Vec<Vec<i64>>,
    pub max_cones: Vec<Vec<usize>>,
}

impl SpecFile {
    /// Parse and check the schema-level invariants. Geometric validity of
    /// the fan is checked separately by [`SpecFile::fan`].
    pub fn from_json(text: &str) -> Result<SpecFile> {
        let spec: SpecFile =
            serde_json::from_str(text).map_err(|e| Error::SpecFile(e.to_string()))?;
        if spec.coordinates != COORDINATES {
            return Err(Error::SpecFile(format!(
                "coordinates header must be \"{COORDINATES}\", got \"{}\"",
                spec.coordinates
            )));
        }
        if spec.root_datum.is_none() && spec.rank.is_none() {
            return Err(Error::SpecFile(
                "either root_datum or rank is required".into(),
            ));
        }
        if let (Some(rd), Some(rank)) = (&spec.root_datum, spec.rank) {
            if rd.rank != rank {
                return Err(Error::SpecFile(format!(
                    "rank field {rank} contradicts root_datum rank {}",
                    rd.rank
                )));
            }
        }
        spec.ambient_rank()?;
        Ok(spec)
    }

    /// Canonical compact serialization; the digest input for reports.
    pub fn to_canonical_json(&self) -> String {
        serde_json::to_string(self).expect("spec files serialize")
    }

    pub fn to_pretty_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("spec files serialize")
    }

    pub fn ambient_rank(&self) -> Result<usize> {
        match (&self.root_datum, self.rank) {
            (Some(rd), _) => Ok(rd.rank),
            (None, Some(rank)) => Ok(rank),
            (None, None) => Err(Error::SpecFile(
                "either root_datum or rank is required".into(),
            )),
        }
    }

    /// The root datum, when one is declared.
    pub fn root_datum(&self) -> Result<Option<RootDatum>> {
        let Some(spec) = &self.root_datum else {
            return Ok(None);
        };
        let mut letters = spec.family.chars();
        let (Some(letter), None) = (letters.next(), letters.next()) else {
            return Err(Error::SpecFile(format!(
                "family must be a single letter A-G, got \"{}\"",
                spec.family
            )));
        };
        let family = Family::from_letter(letter).ok_or_else(|| {
            Error::SpecFile(format!(
                "family must be a single letter A-G, got \"{}\"",
                spec.family
            ))
        })?;
        let kind = match spec.lattice.as_str() {
            "simply_connected" => LatticeKind::SimplyConnected,
            "adjoint" => LatticeKind::Adjoint,
            other => {
                return Err(Error::SpecFile(format!(
                    "lattice must be \"simply_connected\" or \"adjoint\", got \"{other}\""
                )))
            }
        };
        Ok(Some(build_root_datum(family, spec.rank, kind)?))
    }

    /// Build the fan, running the structural checks.
    pub fn fan(&self) -> Result<Fan> {
        Fan::new(
            self.ambient_rank()?,
            self.fan.rays.clone(),
            self.fan.max_cones.clone(),
        )
    }

    /// Assemble a spec file from computed objects.
    pub fn from_fan(rd: Option<&RootDatum>, fan: &Fan) -> SpecFile {
        SpecFile {
            coordinates: COORDINATES.into(),
            root_datum: rd.map(|rd| RootDatumSpec {
                family: rd.cartan_type().family().letter().to_string(),
                rank: rd.rank(),
                lattice: match rd.lattice_kind() {
                    LatticeKind::SimplyConnected => "simply_connected".into(),
                    LatticeKind::Adjoint => "adjoint".into(),
                },
            }),
            rank: if rd.is_some() { None } else { Some(fan.rank()) },
            fan: FanSpec {
                rays: fan.rays().iter().map(|r| r.coords().to_vec()).collect(),
                max_cones: fan.max_cones().to_vec(),
            },
        }
    }
}
