use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{Elem, HopfAlgebraData};
use crate::error::{Error, Result};
use crate::groups::FiniteGroup;
use crate::linalg::Matrix;
use crate::scalars::CycScalar;

/// Certified group of group-likes `G(H)` together with the coradical count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupLikeCertificate {
    /// `G(H)` with the declared names as labels, in declaration order.
    pub group: FiniteGroup,
    pub elements: Vec<Elem>,
    pub pointed: bool,
    pub coradical_dim: usize,
}

impl GroupLikeCertificate {
    pub fn element(&self, name: &str) -> Option<&Elem> {
        self.group.index_of(name).map(|i| &self.elements[i])
    }
}

/// Dimension of the coradical of `H`: the rank of the trace form
/// `(a, b) ↦ tr(L_{ab})` on the dual algebra, whose product is the transposed
/// coproduct.
pub fn coradical_dim(h: &HopfAlgebraData) -> usize {
    let n = h.dim();
    // τ_i = tr(L_{e^i}) = Σ_m c_m^{im}
    let mut tau = h.zero();
    for m in 0..n {
        for (i, k, c) in &h.comul[m] {
            if *k == m {
                tau[*i] += c;
            }
        }
    }
    let mut form = Matrix::zeros(n, n, h.order);
    for i in 0..n {
        if tau[i].is_zero() {
            continue;
        }
        for (a, b, c) in &h.comul[i] {
            let t = c * &tau[i];
            form[(*a, *b)] += &t;
        }
    }
    form.rank()
}

/// Verifies the declared group-likes (`Δx = x⊗x`, `ε(x) = 1`, closure under
/// products and antipode), assembles `G(H)`, and compares its order with the
/// coradical dimension.
pub fn grouplike_certify(h: &HopfAlgebraData) -> Result<GroupLikeCertificate> {
    let declared = &h.declared_grouplikes;
    for (name, x) in declared {
        if x.len() != h.dim() {
            return Err(Error::ShapeMismatch(format!("group-like {name} has wrong length")));
        }
        if h.comul(x) != h.tensor(x, x) || !h.counit(x).is_one() {
            return Err(Error::NotGrouplike(name.clone()));
        }
    }
    let find = |e: &Elem| declared.iter().position(|(_, x)| x == e);
    let m = declared.len();
    if m == 0 {
        return Err(Error::Structure("no group-likes declared".into()));
    }
    let mut table = Vec::with_capacity(m);
    for (na, a) in declared {
        let mut row = Vec::with_capacity(m);
        for (nb, b) in declared {
            let ab = h.mul(a, b);
            let k = find(&ab).ok_or_else(|| Error::Structure(format!("group-likes not closed: {na}*{nb}")))?;
            row.push(k);
        }
        table.push(row);
    }
    for (na, a) in declared {
        if find(&h.antipode(a)).is_none() {
            return Err(Error::Structure(format!("inverse of {na} is not declared")));
        }
    }
    let labels: Vec<String> = declared.iter().map(|(n, _)| n.clone()).collect();
    let group = FiniteGroup::from_table(labels, table)?;
    let cdim = coradical_dim(h);
    if cdim > m {
        return Err(Error::UndeclaredCoradical { coradical_dim: cdim, declared: m });
    }
    Ok(GroupLikeCertificate {
        group,
        elements: declared.iter().map(|(_, x)| x.clone()).collect(),
        pointed: cdim == m,
        coradical_dim: cdim,
    })
}

/// Basis of the `(g, h)`-skew-primitives `{x : Δx = g⊗x + x⊗h}`.
pub fn skew_primitives(h: &HopfAlgebraData, g: &[CycScalar], k: &[CycScalar]) -> Vec<Elem> {
    let n = h.dim();
    // column x = e_c contributes Δ(e_c) − g⊗e_c − e_c⊗k at row (a, b)
    let mut m = Matrix::zeros(n * n, n, h.order);
    for c in 0..n {
        for (a, b, v) in &h.comul[c] {
            m[(a * n + b, c)] += v;
        }
        for a in 0..n {
            if !g[a].is_zero() {
                m[(a * n + c, c)] -= &g[a];
            }
            if !k[a].is_zero() {
                m[(c * n + a, c)] -= &k[a];
            }
        }
    }
    m.kernel()
}
