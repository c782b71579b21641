use num_traits::Signed;

use crate::error::{Error, Result};
use crate::field::ExpField;
use crate::scalar::ComplexRational;

use super::Sign;

/// The charge sign together with the constant it was read from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChargeValue {
    pub c: Sign,
    pub witness: ComplexRational,
}

/// The scalar field `i *(du ^ conj(R du))`, with `R` the reflection in the
/// hyperplane `x^3 = 0`.
pub fn charge_witness(u: &ExpField) -> Result<ExpField> {
    if u.rank() != 1 {
        return Err(Error::RankMismatch(format!("charge needs a vector field, got rank {}", u.rank())));
    }
    let du = u.ext_d()?;
    let top = du.wedge(&du.reflect().conjugate())?;
    Ok(top.hodge().scale(&ComplexRational::i()))
}

/// `c = -sgn(i *(du ^ conj(R du)))`. Only defined when the witness is a
/// nonzero real constant.
pub fn charge(u: &ExpField) -> Result<ChargeValue> {
    let witness = charge_witness(u)?;
    let constant = witness
        .as_constant()
        .ok_or_else(|| Error::ChargeUndefined(format!("witness has {} modes", witness.mode_count())))?;
    let value = constant.component(crate::tensor::IndexSet::EMPTY);
    if value.is_zero() {
        return Err(Error::ChargeDegenerate);
    }
    if !value.is_real() {
        return Err(Error::Inconsistent(format!("charge witness {value} is not real")));
    }
    let c = if value.re.is_positive() { Sign::Minus } else { Sign::Plus };
    Ok(ChargeValue { c, witness: value })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dirac::{make_photon, PhotonSpec, SignPair};
    use crate::field::WaveCovector;
    use crate::tensor::AntisymTensor;

    #[test]
    fn electron_photon_witness_is_four() {
        let u = make_photon(&PhotonSpec { signs: SignPair::ALL[0], c: ComplexRational::zero() });
        let q = charge(&u).unwrap();
        assert_eq!(q.witness, ComplexRational::from(4));
        assert_eq!(q.c, Sign::Minus);
    }

    #[test]
    fn undefined_and_degenerate_cases() {
        let k1 = WaveCovector::from_ints([1, 0, 0, 1]);
        let k2 = WaveCovector::from_ints([2, 1, 0, 1]);
        let e1 = AntisymTensor::basis(&[1]).unwrap();
        let e2 = AntisymTensor::basis(&[2]).unwrap().scale(&ComplexRational::i());
        let two_modes = ExpField::plane_wave(k1.clone(), e1.clone()).add(&ExpField::plane_wave(k2, e2)).unwrap();
        assert!(matches!(charge(&two_modes), Err(Error::ChargeUndefined(_))));
        // a real linearly polarised wave: du ^ conj(R du) has no 0123 part
        let linear = ExpField::plane_wave(k1, e1);
        assert_eq!(charge(&linear), Err(Error::ChargeDegenerate));
    }
}
