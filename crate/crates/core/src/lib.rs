//! Exact computer algebra for repeated-root cyclic and negacyclic codes of
//! length p^s over Galois rings GR(p^a, m).
//!
//! The pipeline: construct the ambient ring `GR(p^a,m)[x]/(x^(p^s) +- 1)`,
//! normalize ideal generators ([`Ideal::reduce_generators`],
//! [`Ideal::groebner_form`]), and read the exact minimum Hamming distance
//! off a closed-form chain-ring table ([`Ideal::code_distance`]). The
//! [`oracle`] module re-derives everything by brute force on desk-scale
//! parameters, so the algebraic route never has to be taken on faith.
//!
//! All coefficient arithmetic is generic over the integer [`Scalar`]; the
//! aliases below fix `u64`, which is ample for anything the exhaustive
//! oracles can reach. Swap in `num_bigint::BigUint` for arbitrary precision.

pub mod ambient;
pub mod canonical;
pub mod distance;
pub mod error;
pub mod galois;
pub mod groebner;
mod howell;
pub mod ideal;
pub mod oracle;
pub mod report;
pub mod scalar;
pub mod textio;

pub use ambient::{Ambient, AmbientElement, CodeKind};
pub use canonical::{CanonicalForm, CanonicalTerm};
pub use distance::{
    chain_distance_cyclic_p2, chain_distance_negacyclic, ChainTable, DistanceResult,
    DistanceRoute, TableCase,
};
pub use error::{Error, Result};
pub use galois::{GaloisRing, GrElement, DEFAULT_RING_LIMIT};
pub use groebner::{GroebnerForm, GroebnerPair};
pub use ideal::{Ideal, SpanBasis};
pub use oracle::{
    brute_distance, build_lattice, principal_ideals, verify_binomial_lemma,
    verify_main_expansion, verify_structure, LatticeNode, LatticeReport, StructureReport,
    DEFAULT_ENUM_BOUND,
};
pub use report::Check;
pub use scalar::Scalar;

/// Default scalar for desk-scale work.
pub type Int = u64;
/// GR(p^a, m) over the default scalar.
pub type Ring = GaloisRing<Int>;
/// Element of [`Ring`].
pub type RingElem = GrElement<Int>;
/// Ambient quotient ring over the default scalar.
pub type AmbientRing = Ambient<Int>;
/// Element of [`AmbientRing`].
pub type AmbientPoly = AmbientElement<Int>;
/// Code (ideal) over the default scalar.
pub type Code = Ideal<Int>;
