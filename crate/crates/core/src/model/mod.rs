//! Semidirect-product models for the Coxeter quotient.

pub mod free;
pub mod instance;
pub mod reduced;
pub mod semidirect;
pub mod snf;

pub use free::{evaluate_word_semidirect, phi, phi_images, FreeTuple, SemidirectElement};
pub use instance::{
    center_check, center_witness, kernel_abelianization, kernel_relation_matrix,
    nilpotency_class_check, verify_relators, CenterReport, CenterWitness, FixtureModel,
    NilpotencyReport, RelatorCheck,
};
pub use reduced::{
    ab_image, heisenberg_mul, kernel_member, rho, rho_tuple, AbImage, ModelElement, ReducedElement,
};
pub use semidirect::{evaluate, Semidirect, TupleGroup};
pub use snf::{abelianization, smith_diagonal, AbelianGroup};
