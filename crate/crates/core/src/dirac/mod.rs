//! The tensor model of the 2D Dirac equation: photons solve the polarised
//! Maxwell equation `*du = i beta du`, electrons/positrons solve its torsion
//! perturbation `*d_A v = i beta d_A v` subject to `v perp u` and `v perp k`.

mod charge;
mod dispersion;
mod operator;
mod theorem;

use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

pub use charge::{charge, charge_witness, ChargeValue};
pub use dispersion::{dispersion_solve, Branch, DispersionResult};
pub use operator::{dirac_residual_2d, dirac_residual_3d, nabla, DiracOperator, Term};
pub use theorem::{
    conjugation_symmetry_check, theorem1_check, theorem1_check_with, CONJUGATION_ANCHOR, THEOREM1_ANCHOR,
};

use crate::connection::{check_potential, ext_d_a};
use crate::error::{Error, Result};
use crate::field::{ExpField, WaveCovector};
use crate::scalar::ComplexRational;
use crate::tensor::AntisymTensor;

/// A value in `{+1, -1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "i64", into = "i64")]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn scalar(self) -> ComplexRational {
        ComplexRational::from(self.value())
    }
}

impl std::ops::Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl TryFrom<i64> for Sign {
    type Error = Error;
    fn try_from(v: i64) -> Result<Self> {
        match v {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            other => Err(Error::Precondition(format!("sign must be +1 or -1, got {other}"))),
        }
    }
}

impl From<Sign> for i64 {
    fn from(s: Sign) -> i64 {
        s.value()
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// `alpha` selects the `x^3` oscillation `exp(-i alpha x^3)`, `beta` the
/// eigenvalue `i beta` of the Hodge star.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SignPair {
    pub alpha: Sign,
    pub beta: Sign,
}

impl SignPair {
    pub const ALL: [SignPair; 4] = [
        SignPair { alpha: Sign::Plus, beta: Sign::Plus },
        SignPair { alpha: Sign::Plus, beta: Sign::Minus },
        SignPair { alpha: Sign::Minus, beta: Sign::Plus },
        SignPair { alpha: Sign::Minus, beta: Sign::Minus },
    ];

    pub fn new(alpha: Sign, beta: Sign) -> Self {
        Self { alpha, beta }
    }

    pub fn flipped(self) -> Self {
        Self { alpha: self.alpha.flip(), beta: self.beta.flip() }
    }

    pub fn alpha_beta(self) -> Sign {
        self.alpha * self.beta
    }
}

impl fmt::Display for SignPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "alpha={}1 beta={}1", self.alpha, self.beta)
    }
}

/// `(phi, chi)`: scalar fields of `(x^0, x^1, x^2)` only.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpinorPair2D {
    phi: ExpField,
    chi: ExpField,
}

impl SpinorPair2D {
    pub fn new(phi: ExpField, chi: ExpField) -> Result<Self> {
        for (name, f) in [("phi", &phi), ("chi", &chi)] {
            if f.rank() != 0 {
                return Err(Error::RankMismatch(format!("{name} must be a scalar field")));
            }
            if !f.all_modes_have_k3(&Zero::zero()) {
                return Err(Error::Precondition(format!("{name} must not depend on x^3 (k_3 = 0 on every mode)")));
            }
        }
        if phi.orientation() != chi.orientation() {
            return Err(Error::OrientationMismatch);
        }
        Ok(Self { phi, chi })
    }

    pub fn zero() -> Self {
        let z = ExpField::zero(0, Default::default()).expect("rank 0");
        Self { phi: z.clone(), chi: z }
    }

    pub fn phi(&self) -> &ExpField {
        &self.phi
    }

    pub fn chi(&self) -> &ExpField {
        &self.chi
    }

    pub fn is_zero(&self) -> bool {
        self.phi.is_zero() && self.chi.is_zero()
    }
}

/// `psi = (phi_1, phi_2, chi_1, chi_2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bispinor3D {
    pub components: [ExpField; 4],
}

impl Bispinor3D {
    pub fn new(phi1: ExpField, phi2: ExpField, chi1: ExpField, chi2: ExpField) -> Result<Self> {
        let components = [phi1, phi2, chi1, chi2];
        if components.iter().any(|f| f.rank() != 0) {
            return Err(Error::RankMismatch("bispinor components must be scalar fields".into()));
        }
        Ok(Self { components })
    }

    /// Assembles `psi = (phi^{-+}, phi^{++}, chi^{++}, chi^{-+})` from the
    /// `beta = +1` spinor pairs with `alpha = -1` and `alpha = +1`.
    pub fn from_pairs(alpha_minus: &SpinorPair2D, alpha_plus: &SpinorPair2D) -> Self {
        Self {
            components: [
                alpha_minus.phi.clone(),
                alpha_plus.phi.clone(),
                alpha_plus.chi.clone(),
                alpha_minus.chi.clone(),
            ],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhotonSpec {
    pub signs: SignPair,
    /// Gauge constant.
    pub c: ComplexRational,
}

/// `(1, 0, 0, alpha)`, the photon wave covector in the canonical frame.
pub fn photon_covector(alpha: Sign) -> WaveCovector {
    WaveCovector::from_ints([1, 0, 0, alpha.value()])
}

/// `(0, 0, 0, alpha)`: the factor `exp(-i alpha x^3)`.
pub fn mass_covector(alpha: Sign) -> WaveCovector {
    WaveCovector::from_ints([0, 0, 0, alpha.value()])
}

/// `u = (C, 1, -i alpha beta, C alpha) exp(-i (x^0 + alpha x^3))`.
pub fn make_photon(spec: &PhotonSpec) -> ExpField {
    let SignPair { alpha, beta } = spec.signs;
    let ab = (alpha * beta).scalar();
    let coeff = AntisymTensor::covector([
        spec.c.clone(),
        ComplexRational::one(),
        -(&ComplexRational::i() * &ab),
        &spec.c * &alpha.scalar(),
    ]);
    ExpField::plane_wave(photon_covector(alpha), coeff)
}

/// `v = { phi (1, 0, 0, alpha) - chi (0, 1, i alpha beta, 0) } exp(-i alpha x^3)`.
pub fn make_electron_candidate(signs: SignPair, s: &SpinorPair2D) -> ExpField {
    let along_k = AntisymTensor::covector([
        ComplexRational::one(),
        ComplexRational::zero(),
        ComplexRational::zero(),
        signs.alpha.scalar(),
    ]);
    let transverse = AntisymTensor::covector([
        ComplexRational::zero(),
        ComplexRational::one(),
        &ComplexRational::i() * &signs.alpha_beta().scalar(),
        ComplexRational::zero(),
    ]);
    let phi_part = s.phi.wedge(&ExpField::constant(along_k).with_orientation(s.phi.orientation()));
    let chi_part = s.chi.wedge(&ExpField::constant(transverse).with_orientation(s.chi.orientation()));
    phi_part.and_then(|p| p.sub(&chi_part?)).expect("scalar times covector").shifted(&mass_covector(signs.alpha))
}

/// Recovers `(phi, chi)` from a vector field of the electron form. Fails
/// unless `v` is exactly `make_electron_candidate(signs, ..)` of some pair.
pub fn project_to_spinor(v: &ExpField, signs: SignPair) -> Result<SpinorPair2D> {
    if v.rank() != 1 {
        return Err(Error::RankMismatch(format!("expected a vector field, got rank {}", v.rank())));
    }
    let back = mass_covector(signs.alpha).neg();
    let phi = v.component_field(&[0])?.shifted(&back);
    let chi = v.component_field(&[1])?.shifted(&back).neg();
    let s = SpinorPair2D::new(phi, chi)
        .map_err(|_| Error::Precondition("field does not oscillate as exp(-i alpha x^3)".into()))?;
    if make_electron_candidate(signs, &s) != *v {
        return Err(Error::Precondition("field is not orthogonal to the photon and its wave vector".into()));
    }
    Ok(s)
}

/// `*du - i beta du`.
pub fn polarised_residual(u: &ExpField, beta: Sign) -> Result<ExpField> {
    if u.rank() != 1 {
        return Err(Error::RankMismatch(format!("expected a vector field, got rank {}", u.rank())));
    }
    let du = u.ext_d()?;
    du.hodge().sub(&du.scale(&(&ComplexRational::i() * &beta.scalar())))
}

/// `*d_A v - i beta d_A v`.
pub fn perturbed_residual(v: &ExpField, a: &ExpField, beta: Sign) -> Result<ExpField> {
    if v.rank() != 1 {
        return Err(Error::RankMismatch(format!("expected a vector field, got rank {}", v.rank())));
    }
    let dav = ext_d_a(v, a)?;
    dav.hodge().sub(&dav.scale(&(&ComplexRational::i() * &beta.scalar())))
}

/// Both orthogonality constraints against the photon `u` with wave
/// covector `k`.
pub fn satisfies_constraints(v: &ExpField, u: &ExpField, k: &WaveCovector) -> Result<bool> {
    let k_field = ExpField::constant(k.as_tensor()).with_orientation(v.orientation());
    Ok(v.perp(u)? && v.perp(&k_field)?)
}

/// A photon together with its free electron/positron partner.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreePair {
    pub u: ExpField,
    pub v: ExpField,
    pub k: WaveCovector,
}

/// `u` as in [`make_photon`] and `v = (1, 0, 0, alpha) exp(-i (x^0 + alpha x^3))`,
/// checked to be the gradient of `i exp(-i k.x)` and to share `u`'s covector.
pub fn free_catalogue(signs: SignPair, c: ComplexRational) -> Result<FreePair> {
    let k = photon_covector(signs.alpha);
    let u = make_photon(&PhotonSpec { signs, c });
    let v = ExpField::plane_wave(k.clone(), k.as_tensor());
    let potential = ExpField::scalar_wave(k.clone(), ComplexRational::i());
    if v != potential.ext_d()? {
        return Err(Error::Inconsistent("free electron is not the gradient of i exp(-i k.x)".into()));
    }
    let covectors: Vec<_> = u.modes().chain(v.modes()).map(|(k, _)| k.clone()).collect();
    if covectors.iter().any(|q| *q != k) {
        return Err(Error::Inconsistent("photon and electron wave covectors differ".into()));
    }
    Ok(FreePair { u, v, k })
}

/// Zero constant potential.
pub fn no_potential() -> ExpField {
    ExpField::zero(1, Default::default()).expect("rank 1")
}

/// `(A0, 0, 0, 0)`.
pub fn electric_potential(a0: &crate::scalar::Rational) -> ExpField {
    ExpField::constant(AntisymTensor::covector([
        ComplexRational::real(a0.clone()),
        ComplexRational::zero(),
        ComplexRational::zero(),
        ComplexRational::zero(),
    ]))
}

/// Potential preconditions for the 2D reduction: those of `d_A` plus `A_3 = 0`.
pub fn check_potential_2d(a: &ExpField) -> Result<()> {
    check_potential(a)?;
    if !a.component_field(&[3])?.is_zero() {
        return Err(Error::Precondition("potential must satisfy A_3 = 0".into()));
    }
    Ok(())
}
