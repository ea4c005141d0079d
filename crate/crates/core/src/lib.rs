//! Exact-arithmetic kernels for a family of lattice computations:
//! the binary Golay code, the Leech lattice, Leech roots in the even
//! Lorentzian lattice of signature (1, 25), finite quadratic forms,
//! and the character and orbit machinery of the alternating group on
//! six letters.
//!
//! All arithmetic is integer or rational; nothing is floating point,
//! sampled, or approximated. Each module carries its own consistency
//! checks, and the crate-level integration tests tie the pieces
//! together.

pub mod eisenstein;
pub mod golay;
pub mod hesse;
pub mod hyperbolic;
pub mod leech;
pub mod niemeier;
pub mod permchar;
pub mod quadform;

pub use eisenstein::Eisenstein;
pub use golay::{GolayCode, GolayError, GolaySet};
pub use hesse::{
    base_change_fibers, base_fibers, euler_sum, fiber_csv, pencil_member, preimage_count,
    pulled_back_family, shioda_tate_bound, six_node_check, transcendental_report,
    triangle_factorization, BasePoint, CycloPoly, Fiber, NodeReport, TranscendentalReport,
};
pub use hyperbolic::{
    ade_string, coxeter_type, leech_root_of, lorentz_inner, lorentz_norm, Ade, LorentzVector,
    RootSet,
};
pub use leech::{inner, norm, LeechLattice, LeechVector, Pentagon};
pub use niemeier::{
    feasible_orbit_sizes, invariant_lattices, partitions_a1_24, partitions_a2_12, NiemeierError,
    PartitionReport,
};
pub use permchar::{
    character_table, cube_twist_exponent_candidates, decomposition_solutions,
    fixed_total_dimension, galois_swapped, invariant_cohomology_rank, table_grid, twisted_trace,
    verify_character_table, AltSix, Perm, PermCharError, QuadInt, SubgroupLattice, TableReport,
};
pub use quadform::{
    discriminant_form, endgame_solver, isotropic_elements, orthogonal_group_of_form, row_hnf,
    short_vector_counts, smith_normal_form, FiniteQuadraticForm, GramMatrix, QuadformError, Rat,
};
