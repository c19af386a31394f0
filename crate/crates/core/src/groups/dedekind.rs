use alloc::string::ToString;
use alloc::vec::Vec;

use super::FiniteGroup;
use crate::error::{Error, Result};
use crate::freehopf::{bareiss_det, LaurentPoly};

/// Default bound on `|G|` for symbolic group determinants.
pub const DEFAULT_DET_SIZE_LIMIT: usize = 8;

/// `Θ_G = det(t_{g h^{-1}})_{g,h}` with one variable per group element (in
/// element order), by fraction-free elimination.
pub fn dedekind_determinant(g: &FiniteGroup, limit: usize) -> Result<LaurentPoly> {
    let n = g.order();
    if n > limit {
        return Err(Error::SizeLimit { what: "group determinant".to_string(), size: n, limit });
    }
    let m: Vec<Vec<LaurentPoly>> =
        (0..n).map(|a| (0..n).map(|b| LaurentPoly::var(n, 1, g.mul(a, g.inv(b)))).collect()).collect();
    Ok(bareiss_det(m, n, 1))
}

/// The regular action `t_g ↦ t_{h g}`.
pub fn regular_action(g: &FiniteGroup, h: usize, p: &LaurentPoly) -> LaurentPoly {
    p.map_vars(&g.left_translation(h), g.order())
}

#[cfg(test)]
mod tests {
    use super::super::*;
    use super::*;
    use crate::scalars::CycScalar;
    use proptest::prelude::*;

    #[test]
    fn small_determinants() {
        let t = |n, i| LaurentPoly::var(n, 1, i);
        assert_eq!(dedekind_determinant(&cyclic(1), 8).unwrap(), t(1, 0));
        let z2 = dedekind_determinant(&cyclic(2), 8).unwrap();
        assert_eq!(z2, &t(2, 0).pow(2) - &t(2, 1).pow(2));
        let z3 = dedekind_determinant(&cyclic(3), 8).unwrap();
        let mut expected = &(&t(3, 0).pow(3) + &t(3, 1).pow(3)) + &t(3, 2).pow(3);
        expected.sub_assign(&(&(&t(3, 0) * &t(3, 1)) * &t(3, 2)).scale(&CycScalar::from_int(1, 3)));
        assert_eq!(z3, expected);
        assert!(matches!(dedekind_determinant(&cyclic(9), 8), Err(Error::SizeLimit { .. })));
    }

    #[test]
    fn sign_character_for_z2() {
        let g = cyclic(2);
        let theta = dedekind_determinant(&g, 8).unwrap();
        assert_eq!(regular_action(&g, 0, &LaurentPoly::var(2, 1, 0)), LaurentPoly::var(2, 1, 0));
        assert_eq!(regular_action(&g, 1, &LaurentPoly::var(2, 1, 0)), LaurentPoly::var(2, 1, 1));
        assert_eq!(regular_action(&g, 1, &theta), -&theta);
        let sq = theta.pow(2);
        assert_eq!(regular_action(&g, 1, &sq), sq);
    }

    proptest! {
        #[test]
        fn action_is_a_group_action(h in 0usize..6, k in 0usize..6, exps in proptest::collection::vec(0i64..3, 6)) {
            let g = symmetric(3);
            let p = LaurentPoly::monomial(6, 1, crate::freehopf::Monomial(exps), CycScalar::one(1));
            let hk = g.mul(h, k);
            prop_assert_eq!(regular_action(&g, hk, &p), regular_action(&g, h, &regular_action(&g, k, &p)));
            prop_assert_eq!(regular_action(&g, g.identity(), &p), p);
        }
    }
}
