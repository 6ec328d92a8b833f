//! Report assembly and suite orchestration on top of the qaw-core kernel.
//! The binary in `main.rs` is a thin argument layer over this.

pub mod poly;
pub mod report;
pub mod suites;

pub use poly::{run_poly, Family, PolyOutput, PolyRequest};
pub use report::{point_digest, Document, Status, Summary, VerificationReport};
pub use suites::{parse_seeds, parse_suites, run_verify, RunOptions, Suite};
