//! Words in the modular group, the representation `φ` and the subgroup
//! families it defines.

pub mod phi;
pub mod subgroup;
pub mod word;

pub use phi::{phi, phi_s, phi_t, PhiImage};
pub use subgroup::{index_of, subgroup_member, SubgroupSpec};
pub use word::{eval_word, relations_check, Gen, Word};
