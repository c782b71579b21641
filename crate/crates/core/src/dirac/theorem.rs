use serde_json::json;

use crate::error::Result;
use crate::field::ExpField;
use crate::report::{ReportBuilder, VerificationReport};
use crate::scalar::ComplexRational;

use super::{
    check_potential_2d, make_electron_candidate, make_photon, mass_covector, perturbed_residual, photon_covector,
    polarised_residual, satisfies_constraints, DiracOperator, PhotonSpec, SignPair, SpinorPair2D,
};

pub const THEOREM1_ANCHOR: &str =
    "*d_A v = i beta d_A v with v perp u, v perp k  <=>  combined 2D Dirac system for (phi, chi)";

/// Equivalence of the perturbed polarised Maxwell system and the combined
/// 2D Dirac system, with the standard operator.
pub fn theorem1_check(s: &SpinorPair2D, a: &ExpField, signs: SignPair) -> Result<VerificationReport> {
    theorem1_check_with(s, a, signs, &DiracOperator::two_dimensional(signs))
}

/// Builds `v` from `(phi, chi)`, evaluates `R = *d_A v - i beta d_A v` and
/// the rows `D` of `operator`, and checks
///
/// * `R^{03} = alpha beta D_1`, `R^{13} = alpha beta D_2` and
///   `R^{23} = i D_2`, each times `exp(-i alpha x^3)`;
/// * `*R = -i beta R`, so those three components determine `R`;
/// * `R = 0` exactly when `D = 0`.
pub fn theorem1_check_with(
    s: &SpinorPair2D,
    a: &ExpField,
    signs: SignPair,
    operator: &DiracOperator,
) -> Result<VerificationReport> {
    check_potential_2d(a)?;
    let mut report = ReportBuilder::new("theorem1", THEOREM1_ANCHOR);
    report.case();

    let v = make_electron_candidate(signs, s);
    let k = photon_covector(signs.alpha);
    for c in [ComplexRational::zero(), ComplexRational::one()] {
        let u = make_photon(&PhotonSpec { signs, c: c.clone() });
        let ok = satisfies_constraints(&v, &u, &k)?;
        report.expect(format!("constraints v perp u, v perp k (C = {c})"), ok, || json!(false));
    }

    let r = perturbed_residual(&v, a, signs.beta)?;
    let rows = operator.apply(&[s.phi().clone(), s.chi().clone()], a)?;
    let shift = mass_covector(signs.alpha);
    let ab = signs.alpha_beta().scalar();
    let d1 = rows[0].shifted(&shift);
    let d2 = rows[1].shifted(&shift);

    report.expect_equal("R^03 - alpha beta D_1", &r.raised_component_field(&[0, 3])?, &d1.scale(&ab));
    report.expect_equal("R^13 - alpha beta D_2", &r.raised_component_field(&[1, 3])?, &d2.scale(&ab));
    report.expect_equal("R^23 - i D_2", &r.raised_component_field(&[2, 3])?, &d2.scale(&ComplexRational::i()));

    let minus_i_beta = -(&ComplexRational::i() * &signs.beta.scalar());
    report.expect_equal("*R + i beta R", &r.hodge(), &r.scale(&minus_i_beta));

    let tensor_side = r.is_zero();
    let spinor_side = rows.iter().all(ExpField::is_zero);
    report.expect(
        "R = 0 <=> D = 0",
        tensor_side == spinor_side,
        || json!({"tensor_residual_zero": tensor_side, "dirac_residual_zero": spinor_side}),
    );
    if tensor_side && spinor_side {
        report.note(format!("{signs}: instance is a solution of both systems"));
    }
    Ok(report.finish())
}

pub const CONJUGATION_ANCHOR: &str =
    "u, v solutions for (alpha, beta) => conj(u), conj(v) solutions for (-alpha, -beta)";

/// Checks `P(conj u, -beta) = conj P(u, beta)` for the polarised residual
/// and the same for the perturbed residual with a real potential.
pub fn conjugation_symmetry_check(
    u: &ExpField,
    v: &ExpField,
    a: &ExpField,
    signs: SignPair,
) -> Result<VerificationReport> {
    let mut report = ReportBuilder::new("conjugation-symmetry", CONJUGATION_ANCHOR);
    report.case();
    let flipped = signs.flipped();

    let pu = polarised_residual(u, signs.beta)?;
    let pu_bar = polarised_residual(&u.conjugate(), flipped.beta)?;
    report.expect_equal("polarised: P(conj u, -beta) - conj P(u, beta)", &pu_bar, &pu.conjugate());

    let pv = perturbed_residual(v, a, signs.beta)?;
    let pv_bar = perturbed_residual(&v.conjugate(), a, flipped.beta)?;
    report.expect_equal("perturbed: P(conj v, -beta) - conj P(v, beta)", &pv_bar, &pv.conjugate());

    report.expect(
        "zero sets agree",
        pu.is_zero() == pu_bar.is_zero() && pv.is_zero() == pv_bar.is_zero(),
        || json!({"u": [pu.is_zero(), pu_bar.is_zero()], "v": [pv.is_zero(), pv_bar.is_zero()]}),
    );
    Ok(report.finish())
}
