//! Verification harness: a registry of named checks over the tensor model,
//! scenario loading, and JSON reports.

pub mod checks;
pub mod error;
pub mod registry;
pub mod scenario;

pub use error::CliError;
pub use registry::{default_registry, Check, CheckRegistry, Context};
pub use scenario::Scenario;
