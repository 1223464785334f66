//! Finite posets, the poset of noncrossing 2-partitions and the permutahedron.

mod finite;
mod parking;
mod permutahedron;

pub use finite::FinitePoset;
pub use parking::{
    build_pp_poset, eta_leq, nc_poset, pp_ideal, pp_join, pp_leq, pp_leq_by_definition,
    pp_lower_covers, pp_meet, pp_upper_covers, pp_upper_covers_by_splitting, tree_surgeries,
    HatElement, ParkingPoset, MAX_POSET_N,
};
pub use permutahedron::{
    composition_leq, ordered_set_compositions, permutahedron_faces, permutahedron_isomorphism,
    right_comb_elements, IsomorphismWitness,
};
