use serde_json::json;
use torsion_maxwell::dirac::{charge, dispersion_solve, make_photon, Branch, PhotonSpec, Sign, SignPair};
use torsion_maxwell::report::{ReportBuilder, VerificationReport};
use torsion_maxwell::scalar::{format_rational, rat};

use super::guarded;
use crate::registry::{Check, Context};

pub struct ChargeCheck;

impl Check for ChargeCheck {
    fn name(&self) -> &'static str {
        "charge"
    }

    fn summary(&self) -> &'static str {
        "charge sign of the photon families, swept over gauges, Lorentz maps and conjugation"
    }

    fn run(&self, ctx: &Context) -> VerificationReport {
        let mut report = ReportBuilder::new(self.name(), "c = -sgn(i *(du ^ conj(R du))), R: x^3 -> -x^3");
        for scenario in &ctx.scenarios {
            report.case();
            let name = &scenario.name;
            guarded(&mut report, name, |report| {
                let signs = scenario.signs;
                let u = make_photon(&PhotonSpec { signs, c: scenario.c.0.clone() });
                let base = charge(&u)?;
                report.note(format!("{name}: {signs} c = {} (witness {})", base.c.value(), base.witness));

                let family = signs.beta.flip();
                report.expect(
                    format!("{name}: beta = {}1 family has c = {}1", signs.beta, family),
                    base.c == family,
                    || json!(base.c.value()),
                );
                if let Some(expected) = scenario.expect_charge {
                    report.expect(format!("{name}: expected charge"), base.c == expected, || json!(base.c.value()));
                }
                for gauge in &scenario.gauges {
                    let other = charge(&make_photon(&PhotonSpec { signs, c: gauge.0.clone() }))?;
                    report.expect(
                        format!("{name}: gauge C = {}", gauge.0),
                        other == base,
                        || json!({"c": other.c.value(), "witness": other.witness.to_string()}),
                    );
                }
                for spec in &scenario.maps {
                    let moved = charge(&spec.map.transform_field(&u))?;
                    if spec.map.is_orthochronous() {
                        report
                            .expect(format!("{name}: map {}", spec.kind), moved.c == base.c, || json!(moved.c.value()));
                    } else {
                        report.note(format!("{name}: non-orthochronous {} gives c = {}", spec.kind, moved.c.value()));
                    }
                }
                let conj = charge(&u.conjugate())?;
                report.expect(format!("{name}: conj u flips the sign"), conj.c == base.c.flip(), || {
                    json!(conj.c.value())
                });
                report.note(format!("{name}: conj u gives c = {}", conj.c.value()));
                Ok(())
            });
        }
        report.finish()
    }
}

pub struct DispersionCheck;

impl Check for DispersionCheck {
    fn name(&self) -> &'static str {
        "dispersion"
    }

    fn summary(&self) -> &'static str {
        "frequency of phi = exp(-i eps x^0) in A = (A0, 0, 0, 0), labelled by charge"
    }

    fn run(&self, ctx: &Context) -> VerificationReport {
        let mut report = ReportBuilder::new(
            self.name(),
            "electron: eps = 1 + A0, positron: eps = 1 - A0; branch label from the photon charge",
        );
        for a0 in &ctx.a0 {
            for signs in SignPair::ALL {
                report.case();
                let label = format!("A0={} {signs}", format_rational(a0));
                guarded(&mut report, &label, |report| {
                    let result = dispersion_solve(a0, signs)?;
                    let photon = charge(&make_photon(&PhotonSpec { signs, c: Default::default() }))?;
                    let expected = match signs.beta {
                        Sign::Plus => rat(1, 1) + a0,
                        Sign::Minus => rat(1, 1) - a0,
                    };
                    report.expect(format!("{label}: eps - (1 + beta A0)"), result.epsilon == expected, || {
                        json!(format_rational(&(&result.epsilon - &expected)))
                    });
                    report.expect(
                        format!("{label}: branch label matches photon charge"),
                        result.branch == Branch::from_charge(photon.c),
                        || json!(result.branch),
                    );
                    let branch = match result.branch {
                        Branch::Electron => "electron",
                        Branch::Positron => "positron",
                    };
                    report.note(format!("{label}: eps = {} ({branch})", format_rational(&result.epsilon)));
                    Ok(())
                });
            }
        }
        report.finish()
    }
}
