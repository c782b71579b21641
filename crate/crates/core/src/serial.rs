//! JSON representations with exact rationals written as strings.
//!
//! Tensor: `{"rank": 2, "entries": [[[0, 1], "1/2+1*i"], ...]}`
//! Field:  `{"rank": 1, "orientation": 1, "modes": [{"k": ["1","0","0","1"], "coeff": <tensor>}]}`

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{ExpField, WaveCovector};
use crate::scalar::{format_rational, parse_rational, ComplexRational};
use crate::tensor::{AntisymTensor, Orientation};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TensorRepr {
    pub rank: usize,
    pub entries: Vec<(Vec<usize>, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModeRepr {
    pub k: [String; 4],
    pub coeff: TensorRepr,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldRepr {
    pub rank: usize,
    #[serde(default = "positive")]
    pub orientation: i64,
    #[serde(default)]
    pub modes: Vec<ModeRepr>,
}

fn positive() -> i64 {
    1
}

impl From<&AntisymTensor> for TensorRepr {
    fn from(t: &AntisymTensor) -> Self {
        TensorRepr { rank: t.rank(), entries: t.entries().map(|(set, v)| (set.indices(), v.to_string())).collect() }
    }
}

impl TryFrom<&TensorRepr> for AntisymTensor {
    type Error = Error;
    fn try_from(repr: &TensorRepr) -> Result<Self> {
        let entries = repr
            .entries
            .iter()
            .map(|(idx, v)| Ok((idx.clone(), v.parse::<ComplexRational>()?)))
            .collect::<Result<Vec<_>>>()?;
        AntisymTensor::from_entries(repr.rank, entries)
    }
}

impl From<&WaveCovector> for [String; 4] {
    fn from(k: &WaveCovector) -> Self {
        std::array::from_fn(|mu| format_rational(k.component(mu)))
    }
}

pub fn parse_covector(k: &[String; 4]) -> Result<WaveCovector> {
    let parsed = k.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>>>()?;
    Ok(WaveCovector(parsed.try_into().expect("four components")))
}

impl From<&ExpField> for FieldRepr {
    fn from(f: &ExpField) -> Self {
        FieldRepr {
            rank: f.rank(),
            orientation: f.orientation().sign().into(),
            modes: f.modes().map(|(k, c)| ModeRepr { k: k.into(), coeff: c.into() }).collect(),
        }
    }
}

impl TryFrom<&FieldRepr> for ExpField {
    type Error = Error;
    fn try_from(repr: &FieldRepr) -> Result<Self> {
        let orientation = Orientation::from_sign(repr.orientation)?;
        let modes = repr
            .modes
            .iter()
            .map(|m| Ok((parse_covector(&m.k)?, AntisymTensor::try_from(&m.coeff)?)))
            .collect::<Result<Vec<_>>>()?;
        ExpField::from_modes(repr.rank, orientation, modes)
    }
}

pub fn field_to_json(f: &ExpField) -> serde_json::Value {
    serde_json::to_value(FieldRepr::from(f)).expect("field repr serialises")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_json_shape() {
        let f = ExpField::plane_wave(
            WaveCovector::from_ints([1, 0, 0, -1]),
            AntisymTensor::basis(&[0, 3])
                .unwrap()
                .scale(&ComplexRational::new(crate::scalar::rat(1, 2), crate::scalar::int(-1))),
        );
        let json = field_to_json(&f);
        assert_eq!(
            json,
            serde_json::json!({
                "rank": 2,
                "orientation": 1,
                "modes": [{"k": ["1", "0", "0", "-1"], "coeff": {"rank": 2, "entries": [[[0, 3], "1/2-1*i"]]}}]
            })
        );
        let back: FieldRepr = serde_json::from_value(json).unwrap();
        assert_eq!(ExpField::try_from(&back).unwrap(), f);
    }

    #[test]
    fn unsorted_entries_fold_with_sign() {
        let repr: TensorRepr = serde_json::from_str(r#"{"rank": 2, "entries": [[[3, 0], "1"]]}"#).unwrap();
        let t = AntisymTensor::try_from(&repr).unwrap();
        assert_eq!(t.get(&[0, 3]).unwrap(), -ComplexRational::one());
    }

    #[test]
    fn bad_orientation_is_rejected() {
        let repr = FieldRepr { rank: 0, orientation: 2, modes: vec![] };
        assert!(ExpField::try_from(&repr).is_err());
    }
}
