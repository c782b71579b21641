use serde_json::json;
use torsion_maxwell::dirac::{
    dirac_residual_2d, dirac_residual_3d, theorem1_check_with, Bispinor3D, DiracOperator, Sign, SignPair,
    THEOREM1_ANCHOR,
};
use torsion_maxwell::report::{ReportBuilder, Status, VerificationReport};
use torsion_maxwell::sample::Sampler;
use torsion_maxwell::ExpField;

use super::guarded;
use crate::registry::{Check, Context};

/// The operator used for the identity; with a fault injected, one sign of
/// the off-diagonal entry is flipped.
fn operator(signs: SignPair, fault: bool) -> DiracOperator {
    let op = DiracOperator::two_dimensional(signs);
    if fault {
        op.with_negated_term(0, 1, 1)
    } else {
        op
    }
}

pub struct Theorem1Check;

impl Check for Theorem1Check {
    fn name(&self) -> &'static str {
        "theorem1"
    }

    fn summary(&self) -> &'static str {
        "perturbed polarised Maxwell system vs combined 2D Dirac system on scenario inputs"
    }

    fn run(&self, ctx: &Context) -> VerificationReport {
        let mut report = ReportBuilder::new(self.name(), THEOREM1_ANCHOR);
        let mut parts = Vec::new();
        for scenario in &ctx.scenarios {
            let Some(spinor) = scenario.spinor() else { continue };
            let op = operator(scenario.signs, ctx.inject_fault);
            match theorem1_check_with(spinor, &scenario.potential.0, scenario.signs, &op) {
                Ok(mut part) => {
                    part.check = scenario.name.clone();
                    part.notes = part.notes.iter().map(|n| format!("{}: {n}", scenario.name)).collect();
                    parts.push(part);
                }
                Err(e) => report.error(&scenario.name, &e),
            }
        }
        if parts.is_empty() {
            report.residual("no scenario carries a spinor", json!(null));
        }
        let mut out = report.finish();
        for part in parts {
            out.absorb(part);
        }
        out
    }
}

pub struct Theorem1SweepCheck;

impl Theorem1SweepCheck {
    pub fn instances(ctx: &Context) -> usize {
        (2 * ctx.count).max(100)
    }
}

impl Check for Theorem1SweepCheck {
    fn name(&self) -> &'static str {
        "theorem1-sweep"
    }

    fn summary(&self) -> &'static str {
        "the Maxwell/Dirac identity on random spinors, generated solutions and a negative control"
    }

    fn run(&self, ctx: &Context) -> VerificationReport {
        let mut report = ReportBuilder::new(self.name(), THEOREM1_ANCHOR).seed(ctx.seed);
        let mut s = Sampler::new(ctx.seed);
        let mut parts = Vec::new();
        let mut absorb =
            |label: String, result: torsion_maxwell::Result<VerificationReport>, report: &mut ReportBuilder| {
                match result {
                    Ok(mut part) => {
                        part.check = label;
                        part.notes.clear();
                        parts.push(part);
                    }
                    Err(e) => report.error(label, &e),
                }
            };
        let (mut constant, mut waves) = (0, 0);
        for i in 0..Self::instances(ctx) {
            let signs = SignPair::ALL[i % 4];
            let spinor = s.spinor(3);
            let a = if (i / 4) % 2 == 0 {
                constant += 1;
                s.constant_potential_2d()
            } else {
                waves += 1;
                s.plane_wave_potential_2d()
            };
            let result = theorem1_check_with(&spinor, &a, signs, &operator(signs, ctx.inject_fault));
            absorb(format!("instance {i} {signs}"), result, &mut report);
        }
        let mut solutions = 0;
        for signs in SignPair::ALL {
            for j in 0..3 {
                let a = s.constant_potential_2d();
                let spinor = s.spinor_solution(&a, signs);
                let result = theorem1_check_with(&spinor, &a, signs, &operator(signs, ctx.inject_fault));
                if let Ok(part) = &result {
                    if part.passed() && part.notes.len() == 1 {
                        solutions += 1;
                    } else if part.passed() {
                        report.residual(format!("solution {signs} #{j}: not a solution of both systems"), json!(null));
                    }
                }
                absorb(format!("solution {signs} #{j}"), result, &mut report);
            }
        }
        report.note(format!("{constant} constant and {waves} plane-wave potentials; {solutions} generated solutions"));

        report.case();
        guarded(&mut report, "negative control", |report| {
            let signs = SignPair::ALL[0];
            let spinor = s.spinor(2);
            let bad = DiracOperator::two_dimensional(signs).with_negated_term(0, 1, 1);
            let control = theorem1_check_with(&spinor, &s.constant_potential_2d(), signs, &bad)?;
            report.expect("negative control: corrupted operator detected", control.status == Status::Fail, || {
                json!(control.status)
            });
            Ok(())
        });

        let mut out = report.finish();
        for part in parts {
            out.absorb(part);
        }
        out
    }
}

pub struct Dirac3dCheck;

impl Check for Dirac3dCheck {
    fn name(&self) -> &'static str {
        "dirac-3d"
    }

    fn summary(&self) -> &'static str {
        "the 4x4 Dirac operator on x^3-independent data splits into the 2D systems"
    }

    fn run(&self, ctx: &Context) -> VerificationReport {
        let mut report = ReportBuilder::new(
            self.name(),
            "psi = (phi^{-+}, phi^{++}, chi^{++}, chi^{-+}) with A_3 = 0: Dirac rows = combined 2D rows; A -> -A gives beta = -1",
        )
        .seed(ctx.seed);
        let mut s = Sampler::new(ctx.seed);
        let (plus, minus) = (Sign::Plus, Sign::Minus);
        for i in 0..ctx.count {
            report.case();
            guarded(&mut report, &format!("bispinor {i}"), |report| {
                let (sm, sp) = (s.spinor(3), s.spinor(3));
                let a = s.potential_2d();
                let psi = Bispinor3D::from_pairs(&sm, &sp);
                let compare =
                    |report: &mut ReportBuilder, tag: &str, rows: [ExpField; 4], m: [ExpField; 2], p: [ExpField; 2]| {
                        let [m0, m1] = m;
                        let [p0, p1] = p;
                        for (row, (lhs, rhs)) in rows.iter().zip([m0, p0, p1, m1].iter()).enumerate() {
                            report.expect_equal(format!("bispinor {i} {tag}: row {row}"), lhs, rhs);
                        }
                    };
                compare(
                    report,
                    "A",
                    dirac_residual_3d(&psi, &a)?,
                    dirac_residual_2d(&sm, &a, SignPair::new(minus, plus))?,
                    dirac_residual_2d(&sp, &a, SignPair::new(plus, plus))?,
                );
                compare(
                    report,
                    "-A",
                    dirac_residual_3d(&psi, &a.neg())?,
                    dirac_residual_2d(&sm, &a, SignPair::new(plus, minus))?,
                    dirac_residual_2d(&sp, &a, SignPair::new(minus, minus))?,
                );
                Ok(())
            });
        }
        report.finish()
    }
}
