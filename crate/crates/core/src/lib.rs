//! Finite groups, crossed modules, cat¹- and cat²-groups and crossed squares,
//! with enumeration and classification over the groups of order at most 30.

pub mod action;
pub mod cat1;
pub mod cat2;
pub mod catalog;
mod catalog_data;
pub mod error;
pub mod group;
pub mod hom;
pub mod perm;
pub mod report;
pub mod xmod;
pub mod xsq;

pub use action::{conjugation_action, GroupAction};
pub use catalog::{groups_of_order, identify_group, small_group, CatalogEntry};
pub use error::{Error, Result};
pub use group::{direct_product, semidirect_product, Elem, GroupTable, Subgroup};
pub use hom::{all_homomorphisms, automorphism_group, idempotent_endomorphisms, Homomorphism};
pub use perm::Perm;
pub use report::Report;
