//! The metric-compatible connection whose torsion is the Hodge dual of a
//! real vector potential, and the covariant exterior derivative `d_A` it
//! induces on scalars and vectors.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::field::ExpField;
use crate::scalar::{int, rat, ComplexRational, Rational};
use crate::tensor::{levi_civita, metric, AntisymTensor, IndexSet, DIM};

/// A rank-3 array indexed `[lambda][mu][nu]` for `X^lambda_{mu nu}`.
pub type Array3 = [[[Rational; 4]; 4]; 4];

fn zero_array() -> Array3 {
    std::array::from_fn(|_| std::array::from_fn(|_| std::array::from_fn(|_| Rational::zero())))
}

/// Checks the potential preconditions shared by `d_A` and the residual
/// evaluators: rank 1, real, and independent of `x^3`.
pub fn check_potential(a: &ExpField) -> Result<()> {
    if a.rank() != 1 {
        return Err(Error::RankMismatch(format!("potential must have rank 1, got {}", a.rank())));
    }
    if !a.is_real() {
        return Err(Error::Precondition("potential A must be real".into()));
    }
    if !a.all_modes_have_k3(&Rational::zero()) {
        return Err(Error::Precondition("potential A must not depend on x^3 (k_3 = 0 on every mode)".into()));
    }
    Ok(())
}

/// Real components `A_mu` of a constant real potential.
pub fn constant_components(a: &ExpField) -> Result<[Rational; 4]> {
    if a.rank() != 1 {
        return Err(Error::RankMismatch(format!("potential must have rank 1, got {}", a.rank())));
    }
    let coeff = a
        .as_constant()
        .ok_or_else(|| Error::Precondition("explicit connection coefficients need a constant potential".into()))?;
    if !coeff.is_real() {
        return Err(Error::Precondition("potential A must be real".into()));
    }
    Ok(std::array::from_fn(|mu| coeff.component(IndexSet::new(&[mu]).expect("valid index")).re))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Connection {
    gamma: Array3,
}

impl Connection {
    /// `Gamma^lambda_{mu nu} = 1/2 A_kappa eps^{kappa lambda}_{mu nu}` for a
    /// constant real potential.
    pub fn from_potential(a: &ExpField) -> Result<Self> {
        let comps = constant_components(a)?;
        let half = rat(1, 2);
        let mut gamma = zero_array();
        for (lambda, plane) in gamma.iter_mut().enumerate() {
            for (mu, row) in plane.iter_mut().enumerate() {
                for (nu, entry) in row.iter_mut().enumerate() {
                    let mut acc = Rational::zero();
                    for (kappa, a_k) in comps.iter().enumerate() {
                        let sign = metric(kappa) * metric(lambda) * levi_civita([kappa, lambda, mu, nu]);
                        if sign != 0 {
                            acc += a_k * int(sign.into());
                        }
                    }
                    *entry = acc * &half;
                }
            }
        }
        Ok(Self { gamma })
    }

    pub fn coefficient(&self, lambda: usize, mu: usize, nu: usize) -> &Rational {
        &self.gamma[lambda][mu][nu]
    }

    pub fn coefficients(&self) -> &Array3 {
        &self.gamma
    }

    /// `T^lambda_{mu nu} = Gamma^lambda_{mu nu} - Gamma^lambda_{nu mu}`.
    pub fn torsion(&self) -> Array3 {
        let mut t = zero_array();
        for (plane, gamma) in t.iter_mut().zip(&self.gamma) {
            for (mu, row) in plane.iter_mut().enumerate() {
                for (nu, entry) in row.iter_mut().enumerate() {
                    *entry = &gamma[mu][nu] - &gamma[nu][mu];
                }
            }
        }
        t
    }

    /// Entries `(lambda, mu, nu)` where
    /// `Gamma^kappa_{lambda mu} g_{kappa nu} + Gamma^kappa_{lambda nu} g_{kappa mu}`
    /// fails to vanish.
    pub fn metric_compatibility_defects(&self) -> Vec<([usize; 3], Rational)> {
        let mut defects = Vec::new();
        for lambda in 0..DIM {
            for mu in 0..DIM {
                for nu in 0..DIM {
                    let v = &self.gamma[nu][lambda][mu] * int(metric(nu).into())
                        + &self.gamma[mu][lambda][nu] * int(metric(mu).into());
                    if !v.is_zero() {
                        defects.push(([lambda, mu, nu], v));
                    }
                }
            }
        }
        defects
    }

    /// `(dv)_{mu nu} - T^lambda_{mu nu} v_lambda`, the coordinate expansion
    /// of `d_A v` for a vector field `v`.
    pub fn covariant_curl(&self, v: &ExpField) -> Result<ExpField> {
        if v.rank() != 1 {
            return Err(Error::UnsupportedRank { op: "covariant_curl", rank: v.rank() });
        }
        let torsion = self.torsion();
        let mut correction = Vec::new();
        for (k, c) in v.modes() {
            let mut entries = Vec::new();
            for set in IndexSet::of_rank(2) {
                let [mu, nu] = <[usize; 2]>::try_from(set.indices()).expect("rank-2 set");
                let mut acc = ComplexRational::zero();
                for (lambda, plane) in torsion.iter().enumerate() {
                    let t = &plane[mu][nu];
                    if !t.is_zero() {
                        acc += &c.get(&[lambda])?.scale(t);
                    }
                }
                entries.push((vec![mu, nu], acc));
            }
            correction.push((k.clone(), AntisymTensor::from_entries(2, entries)?));
        }
        let correction = ExpField::from_modes(2, v.orientation(), correction)?;
        v.ext_d()?.sub(&correction)
    }
}

/// `(*A)` with its first index raised, read as `X^lambda_{mu nu}`.
pub fn dual_potential_array(a: &ExpField) -> Result<Array3> {
    let comps = constant_components(a)?;
    let dual = AntisymTensor::covector(comps.map(ComplexRational::real)).hodge(a.orientation());
    let mut out = zero_array();
    for (lambda, plane) in out.iter_mut().enumerate() {
        for (mu, row) in plane.iter_mut().enumerate() {
            for (nu, entry) in row.iter_mut().enumerate() {
                let v = dual.get(&[lambda, mu, nu])?;
                *entry = v.re * int(metric(lambda).into());
            }
        }
    }
    Ok(out)
}

/// Covariant exterior derivative for ranks 0 and 1:
/// `d_A s = ds` and `d_A v = dv - *(A ^ v)`.
pub fn ext_d_a(f: &ExpField, a: &ExpField) -> Result<ExpField> {
    check_potential(a)?;
    match f.rank() {
        0 => f.ext_d(),
        1 => f.ext_d()?.sub(&a.wedge(f)?.hodge()),
        rank => Err(Error::UnsupportedRank { op: "ext_d_a", rank }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::WaveCovector;

    fn constant_a(comps: [i64; 4]) -> ExpField {
        ExpField::constant(AntisymTensor::covector(comps.map(ComplexRational::from)))
    }

    #[test]
    fn zero_potential_gives_zero_connection() {
        let conn = Connection::from_potential(&constant_a([0, 0, 0, 0])).unwrap();
        assert!(conn.coefficients().iter().flatten().flatten().all(Zero::is_zero));
    }

    #[test]
    fn timelike_potential_is_metric_compatible_and_recovers_torsion() {
        let a = constant_a([1, 0, 0, 0]);
        let conn = Connection::from_potential(&a).unwrap();
        assert!(conn.metric_compatibility_defects().is_empty());
        assert_eq!(conn.torsion(), dual_potential_array(&a).unwrap());
        // Gamma^1_{23} = 1/2 A_0 eps^{01}_{23} = 1/2 * g^00 g^11 = -1/2
        assert_eq!(conn.coefficient(1, 2, 3), &rat(-1, 2));
    }

    #[test]
    fn non_constant_or_complex_potential_is_rejected() {
        let wave = ExpField::plane_wave(WaveCovector::from_ints([1, 0, 0, 0]), AntisymTensor::basis(&[1]).unwrap());
        assert!(Connection::from_potential(&wave).is_err());
        let complex = ExpField::constant(AntisymTensor::basis(&[1]).unwrap().scale(&ComplexRational::i()));
        assert!(Connection::from_potential(&complex).is_err());
    }

    #[test]
    fn ext_d_a_rank_rules() {
        let a = constant_a([1, 0, 2, 0]);
        let s = ExpField::scalar_wave(WaveCovector::from_ints([1, 1, 0, 1]), ComplexRational::one());
        assert_eq!(ext_d_a(&s, &a).unwrap(), s.ext_d().unwrap());
        let two_form = ExpField::constant(AntisymTensor::basis(&[0, 1]).unwrap());
        assert!(matches!(ext_d_a(&two_form, &a), Err(Error::UnsupportedRank { rank: 2, .. })));
        let complex = ExpField::constant(AntisymTensor::basis(&[1]).unwrap().scale(&ComplexRational::i()));
        assert!(ext_d_a(&s, &complex).is_err());
        let x3_dependent =
            ExpField::plane_wave(WaveCovector::from_ints([0, 0, 0, 1]), AntisymTensor::basis(&[1]).unwrap());
        let x3_dependent = x3_dependent.add(&x3_dependent.conjugate()).unwrap();
        assert!(ext_d_a(&s, &x3_dependent).is_err());
    }
}
