use num_traits::Zero;
use serde_json::json;
use torsion_maxwell::connection::{dual_potential_array, ext_d_a, Connection};
use torsion_maxwell::report::{ReportBuilder, VerificationReport};
use torsion_maxwell::sample::Sampler;
use torsion_maxwell::scalar::{format_rational, ComplexRational};
use torsion_maxwell::tensor::AntisymTensor;
use torsion_maxwell::ExpField;

use super::guarded;
use crate::registry::{Check, Context};

/// `** = (-1)^{q(4-q)+1}` on rank `q` in signature (+,-,-,-).
fn double_hodge_sign(q: usize) -> i64 {
    if (q * (4 - q) + 1).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

pub struct IdentitiesCheck;

impl Check for IdentitiesCheck {
    fn name(&self) -> &'static str {
        "identities"
    }

    fn summary(&self) -> &'static str {
        "exterior algebra and field identities on seeded random inputs"
    }

    fn run(&self, ctx: &Context) -> VerificationReport {
        let mut report = ReportBuilder::new(
            self.name(),
            "a^b = (-1)^{qr} b^a; ** = (-1)^{q(4-q)+1}; dd = 0; delta delta = 0; delta * d = 0; conj d = d conj; L commutes with * and ^",
        )
        .seed(ctx.seed);
        let mut s = Sampler::new(ctx.seed);
        for case in 0..ctx.count {
            report.case();
            for q in 0..=4 {
                guarded(&mut report, &format!("case {case} rank {q}"), |report| {
                    let a = s.tensor(q);
                    for r in 0..=4 - q {
                        let b = s.tensor(r);
                        let sign = if (q * r) % 2 == 0 || ctx.inject_fault { 1 } else { -1 };
                        let lhs = ExpField::constant(a.wedge(&b)?);
                        let rhs = ExpField::constant(b.wedge(&a)?.scale(&ComplexRational::from(sign)));
                        report.expect_equal(format!("case {case}: a^b - (-1)^(qr) b^a, q={q} r={r}"), &lhs, &rhs);
                    }
                    let f = s.field(q, 3);
                    let twice = f.hodge().hodge();
                    report.expect_equal(
                        format!("case {case}: **f - sign f, q={q}"),
                        &twice,
                        &f.scale(&ComplexRational::from(double_hodge_sign(q))),
                    );
                    if q <= 2 {
                        report.expect_zero(format!("case {case}: dd f, q={q}"), &f.ext_d()?.ext_d()?);
                        report.expect_zero(format!("case {case}: delta * d f, q={q}"), &f.ext_d()?.hodge().codiff()?);
                    }
                    if q >= 2 {
                        report.expect_zero(format!("case {case}: delta delta f, q={q}"), &f.codiff()?.codiff()?);
                    }
                    if q <= 3 {
                        report.expect_equal(
                            format!("case {case}: conj d f - d conj f, q={q}"),
                            &f.ext_d()?.conjugate(),
                            &f.conjugate().ext_d()?,
                        );
                    }
                    let map = s.any_lorentz_map(false);
                    report.expect_equal(
                        format!("case {case}: L(*f) - *(Lf), q={q}"),
                        &map.transform_field(&f.hodge()),
                        &map.transform_field(&f).hodge(),
                    );
                    Ok(())
                });
            }
        }
        report.finish()
    }
}

pub struct ConnectionCheck;

fn real_constant_potential(s: &mut Sampler) -> ExpField {
    let comps: [ComplexRational; 4] = std::array::from_fn(|_| ComplexRational::real(s.rational()));
    ExpField::constant(AntisymTensor::covector(comps))
}

impl Check for ConnectionCheck {
    fn name(&self) -> &'static str {
        "connection"
    }

    fn summary(&self) -> &'static str {
        "metric compatibility, torsion = *A and d_A d_A s = -*(A ^ ds)"
    }

    fn run(&self, ctx: &Context) -> VerificationReport {
        let mut report = ReportBuilder::new(
            self.name(),
            "Gamma^l_mn = 1/2 A_k eps^kl_mn is metric compatible with torsion *A; d_A d_A s = -*(A ^ ds)",
        )
        .seed(ctx.seed);
        let mut s = Sampler::new(ctx.seed);
        let timelike = ExpField::constant(AntisymTensor::covector([1.into(), 0.into(), 0.into(), 0.into()]));
        let mut potentials = vec![timelike];
        potentials.extend((0..(ctx.count / 5).max(10)).map(|_| real_constant_potential(&mut s)));
        for (i, a) in potentials.iter().enumerate() {
            report.case();
            guarded(&mut report, &format!("potential {i}"), |report| {
                let conn = Connection::from_potential(a)?;
                let defects = conn.metric_compatibility_defects();
                report.expect(format!("potential {i}: metric compatibility"), defects.is_empty(), || {
                    json!(defects.iter().map(|(idx, v)| json!([idx, format_rational(v)])).collect::<Vec<_>>())
                });
                let torsion = conn.torsion();
                let expected = dual_potential_array(a)?;
                report.expect(format!("potential {i}: T - *A"), torsion == expected, || {
                    let mut diff = Vec::new();
                    for l in 0..4 {
                        for m in 0..4 {
                            for n in 0..4 {
                                let d = &torsion[l][m][n] - &expected[l][m][n];
                                if !d.is_zero() {
                                    diff.push(json!([[l, m, n], format_rational(&d)]));
                                }
                            }
                        }
                    }
                    json!(diff)
                });
                let v = s.field(1, 2);
                report.expect_equal(
                    format!("potential {i}: (dv - T.v) - d_A v"),
                    &conn.covariant_curl(&v)?,
                    &ext_d_a(&v, a)?,
                );
                Ok(())
            });
        }
        for i in 0..(2 * ctx.count / 5).max(20) {
            report.case();
            guarded(&mut report, &format!("scalar {i}"), |report| {
                let f = s.field(0, 3);
                let a = s.potential_2d();
                let twice = ext_d_a(&ext_d_a(&f, &a)?, &a)?;
                let expected = a.wedge(&f.ext_d()?)?.hodge().neg();
                report.expect_equal(format!("scalar {i}: d_A d_A s + *(A ^ ds)"), &twice, &expected);
                Ok(())
            });
        }
        report.finish()
    }
}
