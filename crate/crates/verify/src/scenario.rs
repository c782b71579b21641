//! Scenario files. Every embedded value is validated while deserialising,
//! so a bad value is reported with the line and column where it appears.

use std::path::Path;

use serde::Deserialize;
use torsion_maxwell::dirac::{check_potential_2d, no_potential, Sign, SignPair, SpinorPair2D};
use torsion_maxwell::lorentz::{LorentzMap, MapKind};
use torsion_maxwell::scalar::{parse_rational, ComplexRational};
use torsion_maxwell::serial::FieldRepr;
use torsion_maxwell::ExpField;

use crate::error::CliError;

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    pub name: String,
    pub signs: SignPair,
    /// Gauge constant of the photon.
    #[serde(rename = "C", default)]
    pub c: Scalar,
    /// Further gauge constants for the charge sweep.
    #[serde(default)]
    pub gauges: Vec<Scalar>,
    #[serde(default)]
    pub potential: Potential,
    #[serde(default)]
    pub spinor: Option<Spinor>,
    #[serde(default)]
    pub maps: Vec<MapSpec>,
    #[serde(default)]
    pub seed: u64,
    #[serde(default)]
    pub expect_charge: Option<Sign>,
}

impl Scenario {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Scenario { path: path.display().to_string(), message: e.to_string() })?;
        Self::parse(&text, &path.display().to_string())
    }

    /// `origin` only labels error messages, which also name the offending
    /// field and the position just past its value.
    pub fn parse(text: &str, origin: &str) -> Result<Self, CliError> {
        let mut de = serde_json::Deserializer::from_str(text);
        let scenario: Self = serde_path_to_error::deserialize(&mut de).map_err(|e| {
            let field = e.path().to_string();
            CliError::Scenario { path: origin.to_string(), message: format!("{field}: {}", e.into_inner()) }
        })?;
        de.end().map_err(|e| CliError::Scenario { path: origin.to_string(), message: e.to_string() })?;
        Ok(scenario)
    }

    pub fn spinor(&self) -> Option<&SpinorPair2D> {
        self.spinor.as_ref().map(|s| &s.0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default, Deserialize)]
#[serde(try_from = "String")]
pub struct Scalar(pub ComplexRational);

impl TryFrom<String> for Scalar {
    type Error = torsion_maxwell::Error;
    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse().map(Scalar)
    }
}

/// Real rank-1 field with `k_3 = 0` modes and `A_3 = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
#[serde(try_from = "FieldRepr")]
pub struct Potential(pub ExpField);

impl Default for Potential {
    fn default() -> Self {
        Potential(no_potential())
    }
}

impl TryFrom<FieldRepr> for Potential {
    type Error = torsion_maxwell::Error;
    fn try_from(repr: FieldRepr) -> Result<Self, Self::Error> {
        let a = ExpField::try_from(&repr)?;
        check_potential_2d(&a)?;
        Ok(Potential(a))
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SpinorRepr {
    phi: FieldRepr,
    chi: FieldRepr,
}

#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
#[serde(try_from = "SpinorRepr")]
pub struct Spinor(pub SpinorPair2D);

impl TryFrom<SpinorRepr> for Spinor {
    type Error = torsion_maxwell::Error;
    fn try_from(repr: SpinorRepr) -> Result<Self, Self::Error> {
        let phi = ExpField::try_from(&repr.phi)?;
        let chi = ExpField::try_from(&repr.chi)?;
        SpinorPair2D::new(phi, chi).map(Spinor)
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MapRepr {
    kind: MapKind,
    #[serde(default)]
    param: Option<[String; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
#[serde(try_from = "MapRepr")]
pub struct MapSpec {
    pub kind: MapKind,
    pub map: LorentzMap,
}

impl TryFrom<MapRepr> for MapSpec {
    type Error = torsion_maxwell::Error;
    fn try_from(repr: MapRepr) -> Result<Self, Self::Error> {
        let param = match repr.param {
            Some([a, b]) => Some((parse_rational(&a)?, parse_rational(&b)?)),
            None => None,
        };
        Ok(MapSpec { kind: repr.kind, map: LorentzMap::build(repr.kind, param)? })
    }
}

/// Scenarios shipped with the binary.
pub const BUNDLED: [(&str, &str); 6] = [
    ("charge_electron.json", include_str!("../scenarios/charge_electron.json")),
    ("charge_positron.json", include_str!("../scenarios/charge_positron.json")),
    ("free_electron.json", include_str!("../scenarios/free_electron.json")),
    ("plane_wave_A.json", include_str!("../scenarios/plane_wave_A.json")),
    ("random_A_constant.json", include_str!("../scenarios/random_A_constant.json")),
    ("solution_A_constant.json", include_str!("../scenarios/solution_A_constant.json")),
];

pub fn bundled() -> Vec<Scenario> {
    BUNDLED.iter().map(|(name, text)| Scenario::parse(text, name).expect("bundled scenarios are valid")).collect()
}
