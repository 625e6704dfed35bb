//! Partial transformations, nilpotents and loop-augmented labeled rooted
//! forests, with the characters of their conjugation orbits.
//!
//! A partial transformation whose only cycles are fixed points is the same
//! thing as a loop-augmented forest: edges `i -> f(i)` point from a vertex to
//! its parent, undefined points are roots and fixed points are looped roots.
//! Conjugating by a permutation relabels the vertices.

mod enumerate;
mod forest;
mod odun;
pub mod perm;
mod transform;

pub use enumerate::{
    brute_force_odun, brute_force_orbit, cap, count_forests, count_loop_forests, count_nilpotents, enumerate_forests,
    enumerate_labeled, forest_types, orbit_character, LabeledKind, DEFAULT_CAP,
};
pub use forest::{LoopAugmentedForest, ShapeCode, TreeCode};
pub use odun::{
    cycle_type_factored, cyclic_induced, example_forest, forest_stabilizer_order, master_character, odun_dimension,
    odun_factored, odun_frobenius, stabilizer_order, BlockForm, Factor, Factored,
};
pub use transform::PartialTransformation;

pub(crate) use enumerate::env_cap;

/// The forest of a nilpotent partial transformation.
pub fn forest_of(f: &PartialTransformation) -> crate::Result<LoopAugmentedForest> {
    if !f.is_nilpotent() {
        return Err(crate::Error::NotNilpotent);
    }
    LoopAugmentedForest::from_transformation(f)
}
