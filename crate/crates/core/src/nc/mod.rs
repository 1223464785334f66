//! Set partitions, noncrossing partitions, permutations and counting numbers.

mod numbers;
mod partition;
mod permutation;

pub use numbers::{
    binomial, catalan, combinatorial_number, factorial, fuss_catalan, stirling2, NumberKind,
};
pub use partition::{
    elements_mask, enumerate_noncrossing, lukasiewicz_decode, lukasiewicz_encode, mask_elements,
    nc_leq, NoncrossingPartition, SetPartition, WeakComposition, MAX_GROUND,
};
pub use permutation::{integer_partitions, permutation_of_type, Permutation};

/// The code of a permutation, see [`Permutation::code`].
pub fn permutation_code(sigma: &Permutation) -> Vec<usize> {
    sigma.code()
}
