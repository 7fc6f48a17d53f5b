//! Generic finite posets and lattices.

mod forbidden;
mod iso;
mod laws;
mod poset;
mod reference;

pub use forbidden::{
    exhaustive_forbidden_search, find_forbidden_sublattice, is_shape, ForbiddenShape, Pentad,
    EXHAUSTIVE_LIMIT,
};
pub use iso::{are_isomorphic, is_order_isomorphism, ISOMORPHISM_CAP};
pub use laws::{as_lattice, check_laws, FiniteLattice, LawVerdict, NonLattice};
pub use poset::{build_poset, FinitePoset};
pub use reference::{make_reference_lattice, ReferenceLattice};
