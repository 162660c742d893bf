//! Executable bijections and involutions behind the generating-function
//! identities.

pub mod factorization;
pub mod good_pairs;
pub mod marked_pairs;
pub mod mblocks;
pub mod signed_tuples;

pub use factorization::{factor_few_inversions, Factorization};
pub use good_pairs::{class_ladder, enumerate_good_pairs, ClassLadder, GoodPair};
pub use marked_pairs::{
    enumerate_marked_pairs, fixed_point_split, psi, psi_case, theta, theta_inverse,
    FixedPointSplit, MarkedPair, PsiCase,
};
pub use mblocks::{enumerate_m_blocks, is_m_block, m_block_factorization};
pub use signed_tuples::{enumerate_signed_tuples, phi, phi_fixed_points, SignedTuple};
