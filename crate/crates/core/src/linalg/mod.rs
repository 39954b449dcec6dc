//! Exact integer linear algebra: determinants, Smith normal form,
//! cokernel structure and ranks over prime fields.

mod bareiss;
mod matrix;
mod modp;
mod snf;

pub use bareiss::{bareiss_determinant, ExactRing};
pub use matrix::IntMatrix;
pub use modp::{is_prime, null_space_mod_p, nullity_mod_p, rank_mod_p};
pub use snf::{cokernel_structure, smith_normal_form, torsion_complexity, AbelianGroupStructure, SmithForm};

use crate::error::Result;
use num_bigint::BigInt;

/// Exact determinant by fraction-free elimination.
pub fn determinant(m: &IntMatrix) -> Result<BigInt> {
    m.determinant()
}
