//! Non-realizability certificates for simplicial spheres and orientable
//! pseudomanifolds via positive Plücker trees.
//!
//! The pipeline: parse a facet list into an oriented complex
//! ([`complex`]), classify every solid by a normal form that pins its
//! determinant sign in any convex realization ([`solids`]), enumerate
//! 3-term Plücker relations over the exact certificate ring ([`plucker`]),
//! assemble the multigraph of sign-compatible relations ([`gpgraph`]),
//! search it for a minimum tree with an exact 0/1 integer program
//! ([`search`]), and eliminate the tree into a final polynomial whose
//! manifest positivity contradicts realizability ([`certificate`]).
//! Reference datasets and programmatic families live in [`generators`].

pub mod certificate;
pub mod complex;
pub mod generators;
pub mod gpgraph;
pub mod plucker;
pub mod search;
pub mod solids;

pub use complex::{Complex, OrientedComplex, PseudomanifoldClass, VertexTable};
pub use plucker::{CertPolynomial, PointConfiguration, Relation};
pub use search::{SearchLimits, SolveOutcome};
pub use solids::{FuzzySign, SolidId, SolidTable};

/// Vertex index into a [`VertexTable`]. Complexes are capped at 255 vertices,
/// far beyond anything the search can handle anyway.
pub type Vertex = u8;

/// Stable 64-bit FNV-1a, used to pin dataset content inside certificate files.
pub fn content_hash(data: &str) -> String {
    let mut h: u64 = 0xcbf29ce484222325;
    for b in data.as_bytes() {
        h ^= u64::from(*b);
        h = h.wrapping_mul(0x100000001b3);
    }
    format!("fnv1a64:{h:016x}")
}
