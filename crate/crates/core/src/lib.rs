//! Exact-arithmetic chain-level topology on finite delta-complexes.
//!
//! The crate computes the canonical Steenrod coalgebra structure (the family of
//! cup-i coproducts extending the Alexander-Whitney diagonal) on the normalized
//! chains of a delta-complex, verifies Steenrod-coalgebra morphisms, rebuilds
//! the 2-skeleton of a complex from its coalgebra alone, and derives edge-path
//! fundamental-group presentations together with induced homomorphisms.
//!
//! Everything is integer-exact: chains are sparse integer combinations and
//! homology goes through Smith normal form.
//!
//! ```
//! use steenrod_chains::*;
//!
//! // the minimal delta-complex torus: 1 vertex, 3 edges, 2 triangles
//! let torus = fixtures::torus();
//! assert_eq!(homology(&normalized_chains(&torus)).betti_numbers(), vec![1, 2, 1]);
//!
//! // its canonical Steenrod structure satisfies the coherence contracts ...
//! let structure = canonical_structure(&torus);
//! assert!(verify_structure(&structure, 3).is_valid());
//!
//! // ... and the 2-skeleton comes back from the coalgebra alone
//! let rebuilt = reconstruct_2_skeleton(&normalized_chains(&torus), &structure).unwrap();
//! assert_eq!(rebuilt.witness_counts(), vec![1, 3, 2]);
//!
//! // π₁ presentation and abelianization
//! let p = presentation(&torus, "v").unwrap();
//! assert_eq!(abelianization(&p).rank, 2);
//! ```

pub mod chain;
pub mod complex;
pub mod error;
pub mod fixtures;
pub mod homology;
pub mod io;
pub mod pi1;
pub mod random;
pub mod reconstruct;
pub mod report;
pub mod simplicial;
pub mod snf;
pub mod steenrod;

pub use chain::{
    chains_of_map, normalized_chains, tensor_boundary, tensor_square, unnormalized_chains,
    verify_chain_map, Chain, ChainComplex, ChainMap, TensorChain, TensorGenerator,
};
pub use complex::{
    coface_map, simplex_inclusion, skeleton, standard_simplex, validate_delta, ComplexSpec,
    ComplexViolation, DeltaComplex, DeltaMap, MapViolation, SimplexRef, SimplexSpec,
};
pub use error::Error;
pub use homology::{homology, HomologyGroup, HomologySummary};
pub use pi1::{
    abelianization, induced_homomorphism, presentation, spanning_tree, AbelianInvariants,
    GroupPresentation, InducedHomomorphism, Word,
};
pub use reconstruct::{
    enumerate_simplices, induced_map, reconstruct_2_skeleton, unit_comparison, Enumeration,
    ReconstructedComplex, RejectedCandidate, SimplexWitness,
};
pub use report::ValidationReport;
pub use simplicial::{
    adjunction_unit, free_inclusion, freely_degenerate, surjection_count, DegeneratePair,
    SimplicialMap, SimplicialSet, Surjection,
};
pub use snf::{smith_normal_form, SmithForm};
pub use steenrod::{
    bar_differential, canonical_structure, koszul_swap, verify_morphism, verify_structure,
    BarGenerator, MorphismCertificate, MorphismViolation, SteenrodStructure, StructureViolation,
};
