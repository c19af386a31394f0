//! The free commutative Hopf algebra `S(t_H)_Θ` on the coalgebra of `H`.
//!
//! Elements are Laurent polynomials in one variable `t_i` per basis vector
//! (negative exponents only on group-like variables) and fractions of them.
//! The module solves for `t⁻¹_x`, builds the determinants `Θ`, `Θ′`, and
//! evaluates `q̃` and the coaction `δ_S` of `H_ab`.

mod frac;
mod laurent;
mod takeuchi;

pub use frac::{substitute_frac, FracElem, LaurentRing};
pub use laurent::{bareiss_det, LaurentPoly, Monomial};
pub use takeuchi::{
    antipode_comatrix, antipode_s, antipode_squared_holds, coaction_delta_s, comatrix, coproduct_s, counit_s,
    hab_inverse, invertible_mask, is_coinvariant, is_coinvariant_frac, is_grouplike_s, laurent_det, laurent_solve,
    qtilde, qtilde_frac, ring_of, t_of, tensor_s, theta_pair, theta_pair_with_limit, tinv_relation_failure, tinv_solve,
    tinv_solve_with_limit, CoactionValue, FreeHopf, ThetaPair, DEFAULT_SCHUR_LIMIT,
};
