//! Exact Lorentz maps that preserve the hyperplane `{x^3 = 0}`, acting
//! passively on tensors and fields.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{ExpField, WaveCovector};
use crate::scalar::{int, ComplexRational, Rational};
use crate::tensor::{metric, perm_sign, AntisymTensor, IndexSet, Orientation, DIM};

pub type Matrix4 = [[Rational; 4]; 4];

fn identity() -> Matrix4 {
    std::array::from_fn(|r| std::array::from_fn(|c| if r == c { Rational::one() } else { Rational::zero() }))
}

fn diag(entries: [i64; 4]) -> Matrix4 {
    std::array::from_fn(|r| std::array::from_fn(|c| if r == c { int(entries[r]) } else { Rational::zero() }))
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Determinant of the submatrix with the given rows and columns.
fn minor(m: &Matrix4, rows: &[usize], cols: &[usize]) -> Rational {
    let mut acc = Rational::zero();
    for p in permutations(rows.len()) {
        let sign = perm_sign(&p);
        let mut term = int(sign.into());
        for (a, &b) in p.iter().enumerate() {
            term *= &m[rows[a]][cols[b]];
        }
        acc += term;
    }
    acc
}

/// Generators of the constructible subgroup.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MapKind {
    BoostX1,
    RotationX1x2,
    ReverseX3,
    ReverseX0,
    ReverseX1,
}

impl MapKind {
    pub const ALL: [MapKind; 5] =
        [MapKind::BoostX1, MapKind::RotationX1x2, MapKind::ReverseX3, MapKind::ReverseX0, MapKind::ReverseX1];

    pub fn name(self) -> &'static str {
        match self {
            MapKind::BoostX1 => "boost-x1",
            MapKind::RotationX1x2 => "rotation-x1x2",
            MapKind::ReverseX3 => "reverse-x3",
            MapKind::ReverseX0 => "reverse-x0",
            MapKind::ReverseX1 => "reverse-x1",
        }
    }

    pub fn takes_parameter(self) -> bool {
        matches!(self, MapKind::BoostX1 | MapKind::RotationX1x2)
    }
}

impl fmt::Display for MapKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MapKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        MapKind::ALL.into_iter().find(|k| k.name() == s).ok_or_else(|| Error::Parse(format!("unknown map kind {s:?}")))
    }
}

/// `L[mu][nu] = L^mu_nu`, with new coordinates `x'^mu = L^mu_nu x^nu`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LorentzMap {
    matrix: Matrix4,
    orientation: Orientation,
    orthochronous: bool,
}

impl LorentzMap {
    pub fn identity() -> Self {
        Self::new(identity()).expect("identity is a Lorentz map")
    }

    /// Validates metric and hyperplane preservation and derives the flags.
    pub fn new(matrix: Matrix4) -> Result<Self> {
        for a in 0..DIM {
            for b in 0..DIM {
                let mut v = Rational::zero();
                for (mu, row) in matrix.iter().enumerate() {
                    v += &row[a] * &row[b] * int(metric(mu).into());
                }
                let expected = if a == b { int(metric(a).into()) } else { Rational::zero() };
                if v != expected {
                    return Err(Error::InvalidMap(format!("L^T g L differs from g at ({a},{b})")));
                }
            }
        }
        for (mu, row) in matrix.iter().enumerate().take(3) {
            if !matrix[3][mu].is_zero() || !row[3].is_zero() {
                return Err(Error::InvalidMap("map does not preserve the hyperplane x^3 = 0".into()));
            }
        }
        let all: Vec<usize> = (0..DIM).collect();
        let det = minor(&matrix, &all, &all);
        let orientation = if det == Rational::one() {
            Orientation::Positive
        } else if det == -Rational::one() {
            Orientation::Negative
        } else {
            return Err(Error::InvalidMap(format!("determinant {det} is not +-1")));
        };
        let orthochronous = matrix[0][0].is_positive();
        Ok(Self { matrix, orientation, orthochronous })
    }

    /// Builds a generator. Boosts take `(cosh, sinh)` on the unit hyperbola
    /// with positive cosh; rotations take `(cos, sin)` on the unit circle.
    pub fn build(kind: MapKind, param: Option<(Rational, Rational)>) -> Result<Self> {
        let need = |p: Option<(Rational, Rational)>| {
            p.ok_or_else(|| Error::InvalidMap(format!("{kind} needs a rational pair parameter")))
        };
        if !kind.takes_parameter() && param.is_some() {
            return Err(Error::InvalidMap(format!("{kind} takes no parameter")));
        }
        let matrix = match kind {
            MapKind::BoostX1 => {
                let (ch, sh) = need(param)?;
                if &ch * &ch - &sh * &sh != Rational::one() || !ch.is_positive() {
                    return Err(Error::InvalidMap(format!("({ch}, {sh}) is not on the unit hyperbola with ch > 0")));
                }
                let mut m = identity();
                m[0][0] = ch.clone();
                m[0][1] = sh.clone();
                m[1][0] = sh;
                m[1][1] = ch;
                m
            }
            MapKind::RotationX1x2 => {
                let (c, s) = need(param)?;
                if &c * &c + &s * &s != Rational::one() {
                    return Err(Error::InvalidMap(format!("({c}, {s}) is not on the unit circle")));
                }
                let mut m = identity();
                m[1][1] = c.clone();
                m[1][2] = -s.clone();
                m[2][1] = s;
                m[2][2] = c;
                m
            }
            MapKind::ReverseX3 => diag([1, 1, 1, -1]),
            MapKind::ReverseX0 => diag([-1, 1, 1, 1]),
            MapKind::ReverseX1 => diag([1, -1, 1, 1]),
        };
        Self::new(matrix)
    }

    pub fn matrix(&self) -> &Matrix4 {
        &self.matrix
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn is_orthochronous(&self) -> bool {
        self.orthochronous
    }

    /// Apply `self` after `first`.
    pub fn compose(&self, first: &LorentzMap) -> Result<Self> {
        let m: Matrix4 = std::array::from_fn(|r| {
            std::array::from_fn(|c| {
                let mut acc = Rational::zero();
                for k in 0..DIM {
                    acc += &self.matrix[r][k] * &first.matrix[k][c];
                }
                acc
            })
        });
        Self::new(m)
    }

    /// `L^{-1} = g L^T g`.
    pub fn inverse_matrix(&self) -> Matrix4 {
        std::array::from_fn(|r| std::array::from_fn(|c| &self.matrix[c][r] * int((metric(r) * metric(c)).into())))
    }

    /// Passive change of components: every lower index contracts with
    /// `L^{-1}`, so `Q'_J = sum_I Q_I det(Linv[I, J])`.
    pub fn transform_tensor(&self, t: &AntisymTensor) -> AntisymTensor {
        let inv = self.inverse_matrix();
        let rank = t.rank();
        let mut entries = Vec::new();
        for j in IndexSet::of_rank(rank) {
            let cols = j.indices();
            let mut acc = ComplexRational::zero();
            for (i, q) in t.entries() {
                let d = minor(&inv, &i.indices(), &cols);
                if !d.is_zero() {
                    acc += &q.scale(&d);
                }
            }
            entries.push((cols, acc));
        }
        AntisymTensor::from_entries(rank, entries).expect("rank preserved")
    }

    pub fn transform_covector(&self, k: &WaveCovector) -> WaveCovector {
        let inv = self.inverse_matrix();
        WaveCovector(std::array::from_fn(|mu| {
            let mut acc = Rational::zero();
            for (nu, row) in inv.iter().enumerate() {
                acc += k.component(nu) * &row[mu];
            }
            acc
        }))
    }

    /// Components and covectors change covariantly; the orientation flag is
    /// multiplied by `det L` so the Hodge star keeps `eps_0123 = +1` in
    /// positively oriented frames.
    pub fn transform_field(&self, f: &ExpField) -> ExpField {
        let modes = f.modes().map(|(k, c)| (self.transform_covector(k), self.transform_tensor(c)));
        ExpField::from_modes(f.rank(), f.orientation() * self.orientation, modes).expect("rank preserved")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn generator_flags() {
        let rot = LorentzMap::build(MapKind::RotationX1x2, Some((rat(3, 5), rat(4, 5)))).unwrap();
        assert_eq!(rot.orientation(), Orientation::Positive);
        assert!(rot.is_orthochronous());
        let boost = LorentzMap::build(MapKind::BoostX1, Some((rat(5, 4), rat(3, 4)))).unwrap();
        assert_eq!(boost.orientation(), Orientation::Positive);
        assert!(boost.is_orthochronous());
        let rev3 = LorentzMap::build(MapKind::ReverseX3, None).unwrap();
        assert_eq!(rev3.matrix(), &diag([1, 1, 1, -1]));
        assert_eq!(rev3.orientation(), Orientation::Negative);
        assert!(rev3.is_orthochronous());
        let rev0 = LorentzMap::build(MapKind::ReverseX0, None).unwrap();
        assert!(!rev0.is_orthochronous());
        assert_eq!(rev0.orientation(), Orientation::Negative);
    }

    #[test]
    fn bad_parameters_are_rejected() {
        assert!(LorentzMap::build(MapKind::BoostX1, Some((rat(1, 2), rat(1, 2)))).is_err());
        assert!(LorentzMap::build(MapKind::BoostX1, Some((rat(-5, 4), rat(3, 4)))).is_err());
        assert!(LorentzMap::build(MapKind::RotationX1x2, Some((rat(1, 2), rat(1, 2)))).is_err());
        assert!(LorentzMap::build(MapKind::RotationX1x2, None).is_err());
        assert!(LorentzMap::build(MapKind::ReverseX3, Some((rat(1, 1), rat(0, 1)))).is_err());
    }

    #[test]
    fn matrices_outside_the_subgroup_are_rejected() {
        // boost along x^3 moves the hyperplane
        let mut m = identity();
        m[0][0] = rat(5, 4);
        m[0][3] = rat(3, 4);
        m[3][0] = rat(3, 4);
        m[3][3] = rat(5, 4);
        assert!(LorentzMap::new(m).is_err());
        assert!(LorentzMap::new(diag([2, 1, 1, 1])).is_err());
    }

    #[test]
    fn reverse_x3_flips_k3() {
        let rev3 = LorentzMap::build(MapKind::ReverseX3, None).unwrap();
        let f = ExpField::plane_wave(WaveCovector::from_ints([1, 0, 0, 1]), AntisymTensor::basis(&[0]).unwrap());
        let g = rev3.transform_field(&f);
        assert!(g.coefficient(&WaveCovector::from_ints([1, 0, 0, -1])).is_some());
        assert_eq!(g.orientation(), Orientation::Negative);
    }

    #[test]
    fn identity_leaves_fields_unchanged() {
        let f = ExpField::plane_wave(WaveCovector::from_ints([1, 2, 0, 1]), AntisymTensor::basis(&[0, 2]).unwrap());
        assert_eq!(LorentzMap::identity().transform_field(&f), f);
    }

    #[test]
    fn inverse_is_exact() {
        let boost = LorentzMap::build(MapKind::BoostX1, Some((rat(5, 4), rat(3, 4)))).unwrap();
        let inv = LorentzMap::new(boost.inverse_matrix()).unwrap();
        assert_eq!(boost.compose(&inv).unwrap(), LorentzMap::identity());
    }
}
