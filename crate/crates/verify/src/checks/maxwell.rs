use serde_json::json;
use torsion_maxwell::dirac::{
    conjugation_symmetry_check, free_catalogue, make_photon, no_potential, perturbed_residual, polarised_residual,
    satisfies_constraints, PhotonSpec, SignPair,
};
use torsion_maxwell::report::{ReportBuilder, VerificationReport};
use torsion_maxwell::sample::Sampler;
use torsion_maxwell::scalar::ComplexRational;
use torsion_maxwell::ExpField;

use super::guarded;
use crate::registry::{Check, Context};

pub struct PhotonCheck;

impl Check for PhotonCheck {
    fn name(&self) -> &'static str {
        "photon"
    }

    fn summary(&self) -> &'static str {
        "plane-wave photons solve *du = i beta du in every sign and gauge"
    }

    fn run(&self, _ctx: &Context) -> VerificationReport {
        let mut report = ReportBuilder::new(
            self.name(),
            "u = (C, 1, -i alpha beta, C alpha) exp(-i(x^0 + alpha x^3)) solves *du = i beta du; u_3 = 0 when C = 0",
        );
        for signs in SignPair::ALL {
            for c in [ComplexRational::zero(), ComplexRational::one()] {
                report.case();
                let label = format!("{signs} C={c}");
                guarded(&mut report, &label, |report| {
                    let u = make_photon(&PhotonSpec { signs, c: c.clone() });
                    report.expect_zero(format!("{label}: *du - i beta du"), &polarised_residual(&u, signs.beta)?);
                    if c.is_zero() {
                        report.expect_zero(format!("{label}: u_3"), &u.component_field(&[3])?);
                    }
                    let forward = u.modes().all(|(k, _)| k.component(0) > &num_traits::Zero::zero());
                    report.expect(format!("{label}: forward light cone"), forward, || json!(false));
                    Ok(())
                });
            }
        }
        report.finish()
    }
}

pub struct FreeParticleCheck;

impl Check for FreeParticleCheck {
    fn name(&self) -> &'static str {
        "free-particles"
    }

    fn summary(&self) -> &'static str {
        "free electrons and positrons are gradient solutions orthogonal to their photon"
    }

    fn run(&self, _ctx: &Context) -> VerificationReport {
        let mut report = ReportBuilder::new(
            self.name(),
            "v = d(i exp(-i(x^0 + alpha x^3))) solves *dv = i beta dv with v perp u, v perp k",
        );
        for signs in SignPair::ALL {
            for c in [ComplexRational::zero(), ComplexRational::one(), ComplexRational::i()] {
                report.case();
                let label = format!("{signs} C={c}");
                guarded(&mut report, &label, |report| {
                    let pair = free_catalogue(signs, c.clone())?;
                    report.expect(format!("{label}: v nonzero"), !pair.v.is_zero(), || json!(false));
                    report.expect_zero(
                        format!("{label}: *dv - i beta dv"),
                        &perturbed_residual(&pair.v, &no_potential(), signs.beta)?,
                    );
                    let ok = satisfies_constraints(&pair.v, &pair.u, &pair.k)?;
                    report.expect(format!("{label}: v perp u, v perp k"), ok, || json!(false));
                    let gradient = ExpField::scalar_wave(pair.k.clone(), ComplexRational::i()).ext_d()?;
                    report.expect_equal(format!("{label}: v - d(i exp(-i k.x))"), &pair.v, &gradient);
                    Ok(())
                });
            }
        }
        report.finish()
    }
}

pub struct ConjugationCheck;

impl Check for ConjugationCheck {
    fn name(&self) -> &'static str {
        "conjugation"
    }

    fn summary(&self) -> &'static str {
        "complex conjugation maps (alpha, beta) solutions to (-alpha, -beta) solutions"
    }

    fn run(&self, ctx: &Context) -> VerificationReport {
        let mut parts = Vec::new();
        let mut report = ReportBuilder::new(self.name(), torsion_maxwell::dirac::CONJUGATION_ANCHOR).seed(ctx.seed);
        let mut s = Sampler::new(ctx.seed);
        for i in 0..ctx.count {
            let signs = SignPair::ALL[i % 4];
            let (u, v, a) = (s.field(1, 3), s.field(1, 3), s.potential_2d());
            match conjugation_symmetry_check(&u, &v, &a, signs) {
                Ok(mut part) => {
                    part.check = format!("triple {i}");
                    parts.push(part);
                }
                Err(e) => report.error(format!("triple {i}"), &e),
            }
        }
        for signs in SignPair::ALL {
            report.case();
            guarded(&mut report, &format!("photon {signs}"), |report| {
                let u = make_photon(&PhotonSpec { signs, c: ComplexRational::one() });
                let flipped = polarised_residual(&u.conjugate(), signs.beta.flip())?;
                report.expect_zero(format!("photon {signs}: conj u under -beta"), &flipped);
                Ok(())
            });
        }
        let mut out = report.finish();
        for part in parts {
            out.absorb(part);
        }
        out
    }
}
