//! Command-line front end for [`krfusion_core`]: request parsing, result
//! documents, a content-addressed cache and the verification suites.

pub mod cache;
pub mod parse;
pub mod render;
pub mod request;
pub mod run;
pub mod selfcheck;

pub use request::{Args, Command, Format, Request, VariantChoice};
pub use run::{main_with, run, Outcome};
