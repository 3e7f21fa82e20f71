//! Library half of the `ditkit` command-line tool: JSON document types,
//! report structures, the canned interference scenarios, and the
//! theorem-verification suites. The binary in `main.rs` is a thin
//! argument-parsing layer over these modules.

pub mod error;
pub mod io;
pub mod report;
pub mod scenario;
pub mod verify;

pub use error::CliError;
