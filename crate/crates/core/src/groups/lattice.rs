use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Signed;

use super::{AbelianDecomposition, FiniteGroup};
use crate::error::{Error, Result};
use crate::linalg::{kernel_mod, same_lattice, IntMatrix};

/// Where a basis column of the kernel lattice comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BasisTag {
    /// `t_e`
    Identity,
    /// `t_{σ_i}^{p_i^{e_i}}`
    SigmaPower(usize),
    /// `u_g = t_g ∏_{i∈I} t_{σ_i}^{p_i^{e_i} − f_i(g)}`
    U(usize),
}

/// Monomial basis of `ker(ℤ^G → Ḡ)`, one exponent vector per column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeBasis {
    pub ambient_rank: usize,
    pub columns: Vec<Vec<i64>>,
    pub tags: Vec<BasisTag>,
    /// Lifts `σ_i ∈ G` of the primary generators `s_i`.
    pub lifts: Vec<usize>,
}

impl LatticeBasis {
    pub fn to_matrix(&self) -> IntMatrix {
        let cols: Vec<Vec<BigInt>> =
            self.columns.iter().map(|c| c.iter().map(|&x| BigInt::from(x)).collect()).collect();
        IntMatrix::from_columns(self.ambient_rank, &cols)
    }

    /// `|det|` of the square column matrix.
    pub fn abs_det(&self) -> BigInt {
        self.to_matrix().det().abs()
    }

    pub fn max_degree(&self) -> i64 {
        self.columns.iter().map(|c| c.iter().sum()).max().unwrap_or(0)
    }
}

/// The explicit basis `{t_e} ∪ {t_{σ_i}^{p_i^{e_i}}} ∪ {u_g}` of the kernel of
/// `ℤ^G → Ḡ`, where `proj` maps `G` onto the group decomposed by `dec`.
///
/// Each lift `σ_i` is the first element of `G` (in input order) mapping to `s_i`.
pub fn lattice_basis_paper(g: &FiniteGroup, proj: &[usize], dec: &AbelianDecomposition) -> Result<LatticeBasis> {
    let n = g.order();
    if proj.len() != n {
        return Err(Error::ShapeMismatch("projection must be defined on every element".into()));
    }
    let lifts: Vec<usize> = dec
        .generators
        .iter()
        .map(|&s| (0..n).find(|&x| proj[x] == s).ok_or_else(|| Error::Structure("projection is not surjective".into())))
        .collect::<Result<_>>()?;
    let orders = dec.primary_orders();
    let unit = |i: usize| {
        let mut v = alloc::vec![0i64; n];
        v[i] = 1;
        v
    };
    let mut columns = Vec::with_capacity(n);
    let mut tags = Vec::with_capacity(n);
    columns.push(unit(g.identity()));
    tags.push(BasisTag::Identity);
    for (i, &sigma) in lifts.iter().enumerate() {
        let mut v = alloc::vec![0i64; n];
        v[sigma] = orders[i] as i64;
        columns.push(v);
        tags.push(BasisTag::SigmaPower(i));
    }
    for x in 0..n {
        if x == g.identity() || lifts.contains(&x) {
            continue;
        }
        let f = &dec.coordinates[proj[x]];
        let mut v = unit(x);
        for (i, &sigma) in lifts.iter().enumerate() {
            if f[i] != 0 {
                v[sigma] += (orders[i] - f[i]) as i64;
            }
        }
        columns.push(v);
        tags.push(BasisTag::U(x));
    }
    Ok(LatticeBasis { ambient_rank: n, columns, tags, lifts })
}

/// Compares the lattice spanned by `basis` with `ker(ℤ^G → Ḡ)` computed
/// independently through modulus columns and a Hermite kernel, and checks
/// `|det| = |Ḡ|`.
pub fn lattice_equals_oracle(
    basis: &LatticeBasis,
    g: &FiniteGroup,
    proj: &[usize],
    dec: &AbelianDecomposition,
) -> bool {
    let n = g.order();
    let r = dec.r();
    let mut f = IntMatrix::zeros(r, n);
    for x in 0..n {
        for i in 0..r {
            f[(i, x)] = BigInt::from(dec.coordinates[proj[x]][i]);
        }
    }
    let moduli: Vec<BigInt> = dec.primary_orders().into_iter().map(BigInt::from).collect();
    let kernel = kernel_mod(&f, &moduli);
    let m = basis.to_matrix();
    m.cols() == n && same_lattice(&m, &kernel) && basis.abs_det() == BigInt::from(dec.group_order())
}

#[cfg(test)]
mod tests {
    use super::super::*;
    use super::*;

    fn basis_for(g: &FiniteGroup) -> (LatticeBasis, Vec<usize>, AbelianDecomposition) {
        let (gbar, proj) = abelianization(g);
        let dec = primary_decompose(&gbar).unwrap();
        (lattice_basis_paper(g, &proj, &dec).unwrap(), proj, dec)
    }

    #[test]
    fn z2_basis() {
        let g = cyclic(2);
        let (b, proj, dec) = basis_for(&g);
        assert_eq!(b.columns, vec![vec![1, 0], vec![0, 2]]);
        assert_eq!(b.abs_det(), BigInt::from(2));
        assert!(lattice_equals_oracle(&b, &g, &proj, &dec));
    }

    #[test]
    fn s3_basis() {
        let g = symmetric(3);
        let (b, proj, dec) = basis_for(&g);
        assert_eq!(b.abs_det(), BigInt::from(2));
        assert_eq!(b.max_degree(), 2);
        let sigma = b.lifts[0];
        // 3-cycles are degree-one generators, other transpositions pair with σ
        for (col, tag) in b.columns.iter().zip(&b.tags) {
            if let BasisTag::U(x) = tag {
                if proj[*x] == proj[g.identity()] {
                    assert_eq!(col.iter().sum::<i64>(), 1);
                } else {
                    assert_eq!(col[sigma], 1);
                    assert_eq!(col.iter().sum::<i64>(), 2);
                }
            }
        }
        assert!(lattice_equals_oracle(&b, &g, &proj, &dec));
    }

    #[test]
    fn trivial_basis() {
        let (b, _, _) = basis_for(&cyclic(1));
        assert_eq!(b.columns, vec![vec![1]]);
    }

    #[test]
    fn doubled_generator_fails_oracle() {
        let g = cyclic(4);
        let (mut b, proj, dec) = basis_for(&g);
        assert!(lattice_equals_oracle(&b, &g, &proj, &dec));
        let last = b.columns.len() - 1;
        for x in b.columns[last].iter_mut() {
            *x *= 2;
        }
        assert!(!lattice_equals_oracle(&b, &g, &proj, &dec));
    }

    #[test]
    fn degree_bound_holds() {
        for g in [cyclic(6), cyclic(8), klein4(), dihedral(4), quaternion8(), symmetric(3)] {
            let (b, _, dec) = basis_for(&g);
            let bound = (dec.d() as i64 - dec.r() as i64 + 1).max(1);
            assert!(b.max_degree() <= bound);
        }
    }
}
