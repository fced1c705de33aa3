//! Expression language and command surface for `mring`.

pub mod commands;
pub mod expr;

pub use commands::run;
