//! Command-line front end for `hdgroups`: the classification table, the
//! structure inspector, conversions and axiom checks, plus the cache and
//! the text format they share.

pub mod cache;
pub mod commands;
pub mod format;
pub mod inspect;
pub mod table;
