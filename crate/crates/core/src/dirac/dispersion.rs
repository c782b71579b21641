use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{ExpField, WaveCovector};
use crate::scalar::{ComplexRational, Rational};
use crate::tensor::IndexSet;

use super::{charge, dirac_residual_2d, electric_potential, make_photon, PhotonSpec, Sign, SignPair, SpinorPair2D};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Branch {
    Electron,
    Positron,
}

impl Branch {
    /// Label implied by a charge sign.
    pub fn from_charge(c: Sign) -> Self {
        match c {
            Sign::Minus => Branch::Electron,
            Sign::Plus => Branch::Positron,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DispersionResult {
    pub epsilon: Rational,
    pub branch: Branch,
}

fn ansatz(epsilon: &Rational) -> SpinorPair2D {
    let k = WaveCovector([epsilon.clone(), Rational::zero(), Rational::zero(), Rational::zero()]);
    SpinorPair2D::new(ExpField::scalar_wave(k, ComplexRational::one()), ExpField::zero(0, Default::default()).unwrap())
        .expect("k_3 = 0")
}

/// Amplitude of `row` on `exp(-i epsilon x^0)`; zero if that mode is absent.
fn amplitude(row: &ExpField, epsilon: &Rational) -> Result<ComplexRational> {
    let k = WaveCovector([epsilon.clone(), Rational::zero(), Rational::zero(), Rational::zero()]);
    let stray = row.modes().any(|(q, _)| *q != k);
    if stray {
        return Err(Error::Inconsistent("residual of a single-mode ansatz left its mode".into()));
    }
    Ok(row.coefficient(&k).map(|c| c.component(IndexSet::EMPTY)).unwrap_or_default())
}

/// Solves the combined 2D system for `phi = exp(-i epsilon x^0)`, `chi = 0`
/// in the potential `A = (A0, 0, 0, 0)`.
///
/// The residual amplitude is affine in `epsilon`, so two exact evaluations
/// determine it. The branch label comes from the charge of the photon
/// `make_photon(signs, 0)` and is cross-checked against
/// `epsilon = 1 + A0` (electron) or `epsilon = 1 - A0` (positron).
pub fn dispersion_solve(a0: &Rational, signs: SignPair) -> Result<DispersionResult> {
    let a = electric_potential(a0);
    let eval = |eps: &Rational| -> Result<[ComplexRational; 2]> {
        let rows = dirac_residual_2d(&ansatz(eps), &a, signs)?;
        Ok([amplitude(&rows[0], eps)?, amplitude(&rows[1], eps)?])
    };
    let zero = Rational::zero();
    let one = Rational::one();
    let [c0, _] = eval(&zero)?;
    let [c1, _] = eval(&one)?;
    let slope = &c1 - &c0;
    if slope.is_zero() {
        return Err(Error::Degenerate("ansatz residual does not depend on epsilon".into()));
    }
    let root = -(&c0 * &slope.inv()?);
    if !root.is_real() {
        return Err(Error::Degenerate(format!("no real frequency solves the ansatz (root {root})")));
    }
    let epsilon = root.re;
    let [r1, r2] = eval(&epsilon)?;
    if !r1.is_zero() || !r2.is_zero() {
        return Err(Error::Degenerate(format!("ansatz has no solution: residual ({r1}, {r2}) at epsilon = {epsilon}")));
    }

    let photon = make_photon(&PhotonSpec { signs, c: ComplexRational::zero() });
    let branch = Branch::from_charge(charge(&photon)?.c);
    let expected = match branch {
        Branch::Electron => &one + a0,
        Branch::Positron => &one - a0,
    };
    if epsilon != expected {
        return Err(Error::Inconsistent(format!(
            "{signs}: epsilon = {epsilon} but the photon charge labels this branch {branch:?}"
        )));
    }
    Ok(DispersionResult { epsilon, branch })
}
