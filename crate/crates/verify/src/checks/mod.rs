//! The registered checks, grouped by subject.

mod algebra;
mod charge;
mod maxwell;
mod theorem;

use torsion_maxwell::report::ReportBuilder;
use torsion_maxwell::Result;

pub use algebra::{ConnectionCheck, IdentitiesCheck};
pub use charge::{ChargeCheck, DispersionCheck};
pub use maxwell::{ConjugationCheck, FreeParticleCheck, PhotonCheck};
pub use theorem::{Dirac3dCheck, Theorem1Check, Theorem1SweepCheck};

use crate::registry::Check;

pub fn all() -> Vec<Box<dyn Check>> {
    vec![
        Box::new(IdentitiesCheck),
        Box::new(ConnectionCheck),
        Box::new(PhotonCheck),
        Box::new(FreeParticleCheck),
        Box::new(ConjugationCheck),
        Box::new(Theorem1Check),
        Box::new(Theorem1SweepCheck),
        Box::new(Dirac3dCheck),
        Box::new(ChargeCheck),
        Box::new(DispersionCheck),
    ]
}

/// Runs `body`, turning an error into an `error` residual.
fn guarded(report: &mut ReportBuilder, label: &str, body: impl FnOnce(&mut ReportBuilder) -> Result<()>) {
    if let Err(e) = body(report) {
        report.error(label, &e);
    }
}
