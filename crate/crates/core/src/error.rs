use thiserror::Error;

use crate::report::Report;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("group of order {order} is too large to materialize (cap {cap})")]
    TooLarge { order: usize, cap: usize },

    #[error("malformed permutation `{0}`")]
    BadPermutation(String),

    #[error("permutations act on different domains ({0} vs {1} points)")]
    DomainMismatch(usize, usize),

    #[error("group axiom violated: {0}")]
    NotAGroup(String),

    #[error("map is not a homomorphism: f({x})·f({y}) != f({x}·{y})")]
    NotHomomorphism { x: u32, y: u32 },

    #[error("generator images are inconsistent with the group relations")]
    InconsistentImages,

    #[error("invalid group action: {0}")]
    InvalidAction(String),

    #[error("subgroup is not normal: {g}·{s}·{g}^-1 leaves the subgroup")]
    NotNormal { g: u32, s: u32 },

    #[error("group is not abelian: {0} and {1} do not commute")]
    NotAbelian(u32, u32),

    #[error("homomorphism is not surjective")]
    NotSurjective,

    #[error("homomorphism is not injective")]
    NotInjective,

    #[error("kernel is not central: {0} does not commute with {1}")]
    KernelNotCentral(u32, u32),

    #[error("intersection mismatch: L is not M ∩ N")]
    NotIntersection,

    #[error("maps live on different groups")]
    GroupMismatch,

    #[error("identity {identity} fails at element {witness}")]
    Identity { identity: &'static str, witness: u32 },

    #[error("kernels do not commute: [{0}, {1}] != 1")]
    KernelCommutator(u32, u32),

    #[error("structures {i} and {j}: identity {identity} fails at element {witness}")]
    PairwiseIdentity { i: usize, j: usize, identity: &'static str, witness: u32 },

    #[error("axiom check failed:\n{0}")]
    Axioms(Report),

    #[error("no catalog group with order {order} and id {id}; valid ids: {valid:?}")]
    UnknownGroup { order: usize, id: usize, valid: Vec<usize> },

    #[error("order {0} is outside the catalog (1..=30)")]
    OutsideCatalog(usize),
}
