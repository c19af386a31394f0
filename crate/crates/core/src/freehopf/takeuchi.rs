use alloc::collections::BTreeMap;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use super::frac::{substitute_frac, FracElem, LaurentRing};
use super::{bareiss_det, LaurentPoly, Monomial};
use crate::error::{Error, Result};
use crate::hopf::{hab_quotient, Elem, HopfAlgebraData, QuotientHopf};
use crate::linalg::Matrix;
use crate::scalars::CycScalar;

/// Largest residual block handed to fraction-free Cramer elimination.
pub const DEFAULT_SCHUR_LIMIT: usize = 8;

/// Variables `t_b` that may be inverted: those of group-like basis vectors.
pub fn invertible_mask(h: &HopfAlgebraData) -> Vec<bool> {
    let mut mask = vec![false; h.dim()];
    for (_, x) in &h.declared_grouplikes {
        if let Some(i) = h.basis_index(x) {
            if h.comul(x) == h.tensor(x, x) {
                mask[i] = true;
            }
        }
    }
    mask
}

pub fn ring_of(h: &HopfAlgebraData) -> LaurentRing {
    LaurentRing::new(h.dim(), h.order, invertible_mask(h))
}

/// The linear form `t_x` for `x ∈ H`.
pub fn t_of(h: &HopfAlgebraData, x: &[CycScalar]) -> LaurentPoly {
    LaurentPoly::linear(h.order, x)
}

/// `A_{ik} = Σ_j c_i^{jk} t_j`, so that `Δ(e_i) = Σ_k y_{ik} ⊗ e_k` with `t_{y_{ik}} = A_{ik}`.
pub fn comatrix(h: &HopfAlgebraData) -> Vec<Vec<LaurentPoly>> {
    let n = h.dim();
    let mut a = vec![vec![LaurentPoly::zero(n, h.order); n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        for (j, k, c) in &h.comul[i] {
            row[*k].add_term(Monomial::var(n, *j), c);
        }
    }
    a
}

/// `B_{ik} = Σ_j c_i^{jk} t_{S(e_j)}`, the comatrix of antipode images.
pub fn antipode_comatrix(h: &HopfAlgebraData) -> Vec<Vec<LaurentPoly>> {
    let n = h.dim();
    let s: Vec<LaurentPoly> = (0..n).map(|j| t_of(h, &h.antipode_basis(j))).collect();
    let mut b = vec![vec![LaurentPoly::zero(n, h.order); n]; n];
    for (i, row) in b.iter_mut().enumerate() {
        for (j, k, c) in &h.comul[i] {
            row[*k].add_assign(&s[*j].scale(c));
        }
    }
    b
}

/// Gauss–Jordan elimination on unit pivots, leaving a residual block.
struct Reduced {
    m: Vec<Vec<LaurentPoly>>,
    rhs: Vec<LaurentPoly>,
    pivots: Vec<(usize, usize)>,
    rest_rows: Vec<usize>,
    rest_cols: Vec<usize>,
}

fn unit_eliminate(ring: &LaurentRing, mut m: Vec<Vec<LaurentPoly>>, mut rhs: Vec<LaurentPoly>) -> Reduced {
    let n = m.len();
    let mut rows: Vec<usize> = (0..n).collect();
    let mut cols: Vec<usize> = (0..n).collect();
    let mut pivots = Vec::new();
    loop {
        let mut best: Option<(usize, usize, usize)> = None;
        for &r in &rows {
            let row_nnz = cols.iter().filter(|&&c| !m[r][c].is_zero()).count();
            for &c in &cols {
                if !ring.is_unit(&m[r][c]) {
                    continue;
                }
                let col_nnz = rows.iter().filter(|&&x| !m[x][c].is_zero()).count();
                let cost = (row_nnz - 1) * (col_nnz - 1);
                if best.is_none_or(|(_, _, b)| cost < b) {
                    best = Some((r, c, cost));
                }
            }
        }
        let Some((r, c, _)) = best else { break };
        let inv = ring.unit_inverse(&m[r][c]).expect("unit pivot");
        for r2 in 0..n {
            if r2 == r || m[r2][c].is_zero() {
                continue;
            }
            let f = &m[r2][c] * &inv;
            for j in 0..n {
                if !m[r][j].is_zero() {
                    let t = &f * &m[r][j];
                    m[r2][j].sub_assign(&t);
                }
            }
            let t = &f * &rhs[r];
            rhs[r2].sub_assign(&t);
        }
        rows.retain(|&x| x != r);
        cols.retain(|&x| x != c);
        pivots.push((r, c));
    }
    Reduced { m, rhs, pivots, rest_rows: rows, rest_cols: cols }
}

fn permutation_sign(p: &[usize]) -> bool {
    let mut odd = false;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                odd = !odd;
            }
        }
    }
    odd
}

fn check_limit(size: usize, limit: usize) -> Result<()> {
    if size > limit {
        return Err(Error::SizeLimit { what: "residual determinant block".to_string(), size, limit });
    }
    Ok(())
}

/// Determinant of a square Laurent matrix: unit pivots first, Bareiss on
/// whatever is left (at most `limit` rows).
pub fn laurent_det(ring: &LaurentRing, m: Vec<Vec<LaurentPoly>>, limit: usize) -> Result<LaurentPoly> {
    let n = m.len();
    let zero_rhs = vec![ring.zero(); n];
    let red = unit_eliminate(ring, m, zero_rhs);
    check_limit(red.rest_rows.len(), limit)?;
    let block: Vec<Vec<LaurentPoly>> =
        red.rest_rows.iter().map(|&r| red.rest_cols.iter().map(|&c| red.m[r][c].clone()).collect()).collect();
    let mut det = bareiss_det(block, ring.nvars, ring.order);
    for &(r, c) in &red.pivots {
        det = &det * &red.m[r][c];
    }
    let row_perm: Vec<usize> = red.pivots.iter().map(|p| p.0).chain(red.rest_rows.iter().copied()).collect();
    let col_perm: Vec<usize> = red.pivots.iter().map(|p| p.1).chain(red.rest_cols.iter().copied()).collect();
    if permutation_sign(&row_perm) != permutation_sign(&col_perm) {
        det = -&det;
    }
    Ok(det)
}

/// Solves `M x = rhs` over the fraction field; all entries share one
/// denominator, the determinant of the residual block.
pub fn laurent_solve(
    ring: &LaurentRing,
    m: Vec<Vec<LaurentPoly>>,
    rhs: Vec<LaurentPoly>,
    limit: usize,
) -> Result<Vec<FracElem>> {
    let n = m.len();
    let red = unit_eliminate(ring, m, rhs);
    let k = red.rest_rows.len();
    check_limit(k, limit)?;
    let block: Vec<Vec<LaurentPoly>> =
        red.rest_rows.iter().map(|&r| red.rest_cols.iter().map(|&c| red.m[r][c].clone()).collect()).collect();
    let det = bareiss_det(block.clone(), ring.nvars, ring.order);
    if det.is_zero() {
        return Err(Error::SingularComatrix);
    }
    // numerators of the residual unknowns by Cramer's rule
    let mut num: BTreeMap<usize, LaurentPoly> = BTreeMap::new();
    for (jj, &c) in red.rest_cols.iter().enumerate() {
        let mut replaced = block.clone();
        for (ii, &r) in red.rest_rows.iter().enumerate() {
            replaced[ii][jj] = red.rhs[r].clone();
        }
        num.insert(c, bareiss_det(replaced, ring.nvars, ring.order));
    }
    for &(r, c) in &red.pivots {
        let mut acc = &red.rhs[r] * &det;
        for &c2 in &red.rest_cols {
            if !red.m[r][c2].is_zero() {
                acc.sub_assign(&(&red.m[r][c2] * &num[&c2]));
            }
        }
        let inv = ring.unit_inverse(&red.m[r][c]).expect("unit pivot");
        num.insert(c, &acc * &inv);
    }
    (0..n).map(|c| FracElem::new(num.remove(&c).expect("every column solved"), det.clone())).collect()
}

/// `t⁻¹_{e_k}` for every basis vector, solving `A · (t⁻¹_k)_k = (ε_i)_i`.
/// Both defining relations are verified before returning.
pub fn tinv_solve(h: &HopfAlgebraData) -> Result<Vec<FracElem>> {
    tinv_solve_with_limit(h, DEFAULT_SCHUR_LIMIT)
}

pub fn tinv_solve_with_limit(h: &HopfAlgebraData, limit: usize) -> Result<Vec<FracElem>> {
    let ring = ring_of(h);
    let rhs = h.counit.iter().map(|e| LaurentPoly::constant(h.dim(), e.clone())).collect();
    let tinv = laurent_solve(&ring, comatrix(h), rhs, limit)?;
    if let Some(i) = tinv_relation_failure(h, &tinv) {
        return Err(Error::Structure(alloc::format!("t-inverse relation fails at {}", h.labels[i])));
    }
    Ok(tinv)
}

/// First basis index where `t_{x₁}t⁻¹_{x₂} = ε(x) = t⁻¹_{x₁}t_{x₂}` fails,
/// checked after clearing a common denominator.
pub fn tinv_relation_failure(h: &HopfAlgebraData, tinv: &[FracElem]) -> Option<usize> {
    let n = h.dim();
    let mut den = LaurentPoly::one(n, h.order);
    for f in tinv {
        if f.den() != &den && !f.den().as_constant().is_some_and(|c| c.is_one()) {
            den = &den * f.den();
        }
    }
    // numerators over the common denominator
    let nums: Vec<LaurentPoly> = tinv
        .iter()
        .map(|f| {
            let scaled =
                FracElem::from_poly(f.num().clone()).mul(&FracElem::new(den.clone(), f.den().clone()).unwrap());
            scaled.as_laurent().expect("common denominator clears")
        })
        .collect();
    for i in 0..n {
        let mut left = LaurentPoly::zero(n, h.order);
        let mut right = LaurentPoly::zero(n, h.order);
        for (j, k, c) in &h.comul[i] {
            left.add_assign(&(&LaurentPoly::var(n, h.order, *j) * &nums[*k]).scale(c));
            right.add_assign(&(&nums[*j] * &LaurentPoly::var(n, h.order, *k)).scale(c));
        }
        let target = den.scale(&h.counit[i]);
        if left != target || right != target {
            return Some(i);
        }
    }
    None
}

/// `Δ` on `S(t_H)` (group-like variables may be inverted). The result lives
/// in `2n` variables: `t_i ⊗ 1` is variable `i`, `1 ⊗ t_i` is `n + i`.
pub fn coproduct_s(h: &HopfAlgebraData, p: &LaurentPoly) -> Result<LaurentPoly> {
    let n = h.dim();
    ring_of(h).check(p)?;
    let images: Vec<LaurentPoly> = (0..n)
        .map(|i| {
            let mut d = LaurentPoly::zero(2 * n, h.order);
            for (j, k, c) in &h.comul[i] {
                let mut e = vec![0i64; 2 * n];
                e[*j] += 1;
                e[n + *k] += 1;
                d.add_term(Monomial(e), c);
            }
            d
        })
        .collect();
    p.substitute(&images)
}

/// `P ⊗ Q` in the doubled variable set.
pub fn tensor_s(p: &LaurentPoly, q: &LaurentPoly) -> LaurentPoly {
    let n = p.nvars();
    &p.embed(2 * n, 0) * &q.embed(2 * n, n)
}

/// `ε` on `S(t_H)`: `t_x ↦ ε(x)`.
pub fn counit_s(h: &HopfAlgebraData, p: &LaurentPoly) -> Result<CycScalar> {
    ring_of(h).check(p)?;
    let images: Vec<LaurentPoly> = h.counit.iter().map(|e| LaurentPoly::constant(0, e.clone())).collect();
    let v = p.substitute(&images)?;
    Ok(v.as_constant().unwrap_or_else(|| CycScalar::zero(h.order)))
}

pub fn is_grouplike_s(h: &HopfAlgebraData, p: &LaurentPoly) -> Result<bool> {
    Ok(coproduct_s(h, p)? == tensor_s(p, p) && counit_s(h, p)?.is_one())
}

/// The antipode on `S(t_H)_Θ`: `t_x ↦ t⁻¹_x`, extended as an algebra map.
pub fn antipode_s(tinv: &[FracElem], p: &LaurentPoly) -> Result<FracElem> {
    substitute_frac(p, tinv)
}

/// Whether `S(S(t_x)) = t_x` for every basis vector, comparing fractions by
/// cross-multiplication.
pub fn antipode_squared_holds(h: &HopfAlgebraData, tinv: &[FracElem]) -> Result<bool> {
    let n = h.dim();
    for (i, f) in tinv.iter().enumerate() {
        let s_num = antipode_s(tinv, f.num())?;
        let s_den = antipode_s(tinv, f.den())?;
        if s_num.div(&s_den)? != FracElem::from_poly(LaurentPoly::var(n, h.order, i)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `q̃ : S(t_H)_Θ → H_ab`, the algebra map with `t_x ↦ q(x)` and
/// `t_g⁻¹ ↦ q(S(g))` on group-like variables.
pub fn qtilde(h: &HopfAlgebraData, q: &QuotientHopf, p: &LaurentPoly) -> Result<Elem> {
    let ring = ring_of(h);
    ring.check(p)?;
    let qa = &q.quotient;
    let mut cache: BTreeMap<(usize, i64), Elem> = BTreeMap::new();
    let mut out = qa.zero();
    for (m, c) in p.terms() {
        let mut acc = qa.one();
        for (i, &e) in m.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !cache.contains_key(&(i, e)) {
                let base = if e > 0 { q.projection[i].clone() } else { q.project(&h.antipode_basis(i)) };
                let mut pw = qa.one();
                for _ in 0..e.unsigned_abs() {
                    pw = qa.mul(&pw, &base);
                }
                cache.insert((i, e), pw);
            }
            acc = qa.mul(&acc, &cache[&(i, e)]);
        }
        for (t, v) in acc.iter().enumerate() {
            if !v.is_zero() {
                out[t] += &(c * v);
            }
        }
    }
    Ok(out)
}

/// Inverse of `a` in the commutative algebra `H_ab`, if it exists.
pub fn hab_inverse(q: &QuotientHopf, a: &[CycScalar]) -> Option<Elem> {
    let qa = &q.quotient;
    let m = qa.dim();
    let l = Matrix::from_fn(m, m, qa.order, |r, c| qa.mul(a, &qa.basis(c))[r].clone());
    l.solve(&qa.unit)
}

/// `q̃(num) · q̃(den)⁻¹`.
pub fn qtilde_frac(h: &HopfAlgebraData, q: &QuotientHopf, f: &FracElem) -> Result<Elem> {
    let n = qtilde(h, q, f.num())?;
    let d = qtilde(h, q, f.den())?;
    let inv = hab_inverse(q, &d).ok_or(Error::NonInvertibleDenominator)?;
    Ok(q.quotient.mul(&n, &inv))
}

/// An element of `S(t_H)_Θ ⊗ H_ab`, one Laurent polynomial per basis vector of `H_ab`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoactionValue {
    pub components: Vec<LaurentPoly>,
}

impl CoactionValue {
    /// `P ⊗ a`.
    pub fn pure(p: &LaurentPoly, a: &[CycScalar]) -> Self {
        CoactionValue { components: a.iter().map(|c| p.scale(c)).collect() }
    }

    pub fn mul(&self, other: &CoactionValue, qa: &HopfAlgebraData) -> CoactionValue {
        let nvars = self.components[0].nvars();
        let mut out = vec![LaurentPoly::zero(nvars, qa.order); qa.dim()];
        for (a, p) in self.components.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            for (b, r) in other.components.iter().enumerate() {
                if r.is_zero() {
                    continue;
                }
                let pr = p * r;
                for (k, c) in &qa.mul[a][b] {
                    out[*k].add_assign(&pr.scale(c));
                }
            }
        }
        CoactionValue { components: out }
    }
}

/// `δ_S = (id ⊗ q̃) ∘ Δ`, so `δ_S(t_x) = t_{x₁} ⊗ q(x₂)`, extended as an
/// algebra map.
pub fn coaction_delta_s(h: &HopfAlgebraData, q: &QuotientHopf, p: &LaurentPoly) -> Result<CoactionValue> {
    let ring = ring_of(h);
    ring.check(p)?;
    let n = h.dim();
    let qa = &q.quotient;
    let m = qa.dim();
    let gen = |i: usize| -> CoactionValue {
        let mut comps = vec![LaurentPoly::zero(n, h.order); m];
        for (j, k, c) in &h.comul[i] {
            for (t, v) in q.projection[*k].iter().enumerate() {
                if !v.is_zero() {
                    comps[t].add_term(Monomial::var(n, *j), &(c * v));
                }
            }
        }
        CoactionValue { components: comps }
    };
    let mut cache: BTreeMap<(usize, i64), CoactionValue> = BTreeMap::new();
    let one = CoactionValue::pure(&LaurentPoly::one(n, h.order), &qa.unit);
    let mut out = CoactionValue { components: vec![LaurentPoly::zero(n, h.order); m] };
    for (mono, c) in p.terms() {
        let mut acc = one.clone();
        for (i, &e) in mono.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !cache.contains_key(&(i, e)) {
                let base = if e > 0 {
                    gen(i)
                } else {
                    CoactionValue::pure(&ring.var_inv(i)?, &q.project(&h.antipode_basis(i)))
                };
                let mut pw = one.clone();
                for _ in 0..e.unsigned_abs() {
                    pw = pw.mul(&base, qa);
                }
                cache.insert((i, e), pw);
            }
            acc = acc.mul(&cache[&(i, e)], qa);
        }
        for (t, comp) in acc.components.iter().enumerate() {
            out.components[t].add_assign(&comp.scale(c));
        }
    }
    Ok(out)
}

/// `δ_S(P) = P ⊗ 1`.
pub fn is_coinvariant(h: &HopfAlgebraData, q: &QuotientHopf, p: &LaurentPoly) -> Result<bool> {
    Ok(coaction_delta_s(h, q, p)? == CoactionValue::pure(p, &q.quotient.unit))
}

/// Coinvariance of a fraction. The denominator `D` must satisfy
/// `δ_S(D) = D ⊗ q̃(D)` with `q̃(D)` of finite order `k`; then `P/D` is
/// coinvariant iff `P·D^{k−1}` is.
pub fn is_coinvariant_frac(h: &HopfAlgebraData, q: &QuotientHopf, f: &FracElem) -> Result<bool> {
    let d = f.den();
    let u = qtilde(h, q, d)?;
    if coaction_delta_s(h, q, d)? != CoactionValue::pure(d, &u) {
        return Err(Error::DenominatorNotTrivializable);
    }
    let qa = &q.quotient;
    let mut pw = u.clone();
    let mut k = 1u32;
    while pw != qa.unit {
        if k as usize > qa.dim().max(1) * 2 {
            return Err(Error::DenominatorNotTrivializable);
        }
        pw = qa.mul(&pw, &u);
        k += 1;
    }
    is_coinvariant(h, q, &(f.num() * &d.pow(k - 1)))
}

/// `Θ = det A`, `Θ′ = det B` and the checks that both are group-like and
/// that `q̃(Θ·Θ′) = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaPair {
    pub theta: LaurentPoly,
    pub theta_prime: LaurentPoly,
    pub theta_grouplike: bool,
    pub theta_prime_grouplike: bool,
    pub qtilde_product: Elem,
    pub qtilde_product_is_one: bool,
}

pub fn theta_pair(h: &HopfAlgebraData, q: &QuotientHopf) -> Result<ThetaPair> {
    theta_pair_with_limit(h, q, DEFAULT_SCHUR_LIMIT)
}

pub fn theta_pair_with_limit(h: &HopfAlgebraData, q: &QuotientHopf, limit: usize) -> Result<ThetaPair> {
    let ring = ring_of(h);
    let theta = laurent_det(&ring, comatrix(h), limit)?;
    let theta_prime = laurent_det(&ring, antipode_comatrix(h), limit)?;
    let qa = &q.quotient;
    let qtilde_product = qa.mul(&qtilde(h, q, &theta)?, &qtilde(h, q, &theta_prime)?);
    Ok(ThetaPair {
        theta_grouplike: is_grouplike_s(h, &theta)?,
        theta_prime_grouplike: is_grouplike_s(h, &theta_prime)?,
        qtilde_product_is_one: qtilde_product == qa.unit,
        qtilde_product,
        theta,
        theta_prime,
    })
}

/// `H` with its quotient `H_ab`, ring mask and `t⁻¹` table, bundled for the
/// constructions built on `S(t_H)_Θ`.
#[derive(Clone, Debug)]
pub struct FreeHopf {
    pub h: HopfAlgebraData,
    pub q: QuotientHopf,
    pub ring: LaurentRing,
    pub tinv: Vec<FracElem>,
}

impl FreeHopf {
    pub fn new(h: &HopfAlgebraData) -> Result<Self> {
        Self::with_limit(h, DEFAULT_SCHUR_LIMIT)
    }

    /// As [`FreeHopf::new`] with an explicit residual-block limit.
    pub fn with_limit(h: &HopfAlgebraData, limit: usize) -> Result<Self> {
        let q = hab_quotient(h)?;
        let tinv = tinv_solve_with_limit(h, limit)?;
        Ok(FreeHopf { h: h.clone(), q, ring: ring_of(h), tinv })
    }

    pub fn nvars(&self) -> usize {
        self.h.dim()
    }

    /// `t_x`.
    pub fn t(&self, x: &[CycScalar]) -> FracElem {
        FracElem::from_poly(t_of(&self.h, x))
    }

    /// `t⁻¹_x` by linearity.
    pub fn t_inv(&self, x: &[CycScalar]) -> FracElem {
        let mut acc = FracElem::from_poly(LaurentPoly::zero(self.nvars(), self.h.order));
        for (i, c) in x.iter().enumerate() {
            if !c.is_zero() {
                acc = acc.add(&self.tinv[i].scale(c));
            }
        }
        acc
    }

    pub fn qtilde(&self, f: &FracElem) -> Result<Elem> {
        qtilde_frac(&self.h, &self.q, f)
    }

    pub fn is_coinvariant(&self, f: &FracElem) -> Result<bool> {
        is_coinvariant_frac(&self.h, &self.q, f)
    }

    pub fn coaction(&self, p: &LaurentPoly) -> Result<CoactionValue> {
        coaction_delta_s(&self.h, &self.q, p)
    }

    pub fn variable_names(&self) -> Vec<alloc::string::String> {
        self.h.labels.iter().map(|l| alloc::format!("t_{l}")).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{cyclic, dedekind_determinant, symmetric};
    use crate::hopf::{functions_on_group, group_algebra, sweedler, taft, uqbar_sl2};

    fn var(h: &HopfAlgebraData, label: &str) -> LaurentPoly {
        LaurentPoly::var(h.dim(), h.order, h.index_of(label).unwrap())
    }

    #[test]
    fn coproduct_examples() {
        let h = group_algebra(&cyclic(2));
        let ts = var(&h, "a");
        assert_eq!(coproduct_s(&h, &ts).unwrap(), tensor_s(&ts, &ts));
        let s = sweedler();
        let (t1, tg, tv) = (var(&s, "1"), var(&s, "g"), var(&s, "v"));
        let expected = &tensor_s(&t1, &tv) + &tensor_s(&tv, &tg);
        assert_eq!(coproduct_s(&s, &tv).unwrap(), expected);
        let p = &t1 * &tg;
        assert_eq!(coproduct_s(&s, &p).unwrap(), tensor_s(&p, &p));
        let bad = LaurentPoly::monomial(4, 1, Monomial(vec![0, 0, -1, 0]), CycScalar::one(1));
        assert_eq!(coproduct_s(&s, &bad), Err(Error::NegativeExponent(2)));
    }

    #[test]
    fn tinv_for_builtins() {
        for h in [
            sweedler(),
            taft(3),
            group_algebra(&symmetric(3)),
            functions_on_group(&cyclic(3)),
            functions_on_group(&symmetric(3)),
            uqbar_sl2(2),
        ] {
            let tinv = tinv_solve(&h).unwrap();
            assert_eq!(tinv_relation_failure(&h, &tinv), None, "{}", h.name);
        }
        let g = group_algebra(&cyclic(2));
        let tinv = tinv_solve(&g).unwrap();
        assert_eq!(tinv[1], FracElem::new(LaurentPoly::one(2, 1), var(&g, "a")).unwrap());
    }

    #[test]
    fn sweedler_tinv_of_v() {
        let h = sweedler();
        let tinv = tinv_solve(&h).unwrap();
        let (t1, tg, tv) = (var(&h, "1"), var(&h, "g"), var(&h, "v"));
        let expected = FracElem::new(-&tv, &t1 * &tg).unwrap();
        assert_eq!(tinv[2], expected);
        assert!(antipode_squared_holds(&h, &tinv).unwrap());
    }

    #[test]
    fn theta_for_builtins() {
        let g = cyclic(2);
        let h = functions_on_group(&g);
        let q = hab_quotient(&h).unwrap();
        let tp = theta_pair(&h, &q).unwrap();
        let ded = dedekind_determinant(&g, 8).unwrap();
        assert!(tp.theta == ded || tp.theta == -&ded, "{} vs {}", tp.theta, ded);
        for h in [sweedler(), taft(3), group_algebra(&symmetric(3)), uqbar_sl2(2)] {
            let q = hab_quotient(&h).unwrap();
            let tp = theta_pair(&h, &q).unwrap();
            assert!(tp.theta_grouplike && tp.theta_prime_grouplike && tp.qtilde_product_is_one, "{}", h.name);
        }
    }

    #[test]
    fn sweedler_coaction() {
        let h = sweedler();
        let q = hab_quotient(&h).unwrap();
        let (t1, tg, tv) = (var(&h, "1"), var(&h, "g"), var(&h, "v"));
        let gbar = q.project(&h.basis(1));
        assert_eq!(coaction_delta_s(&h, &q, &tv).unwrap(), CoactionValue::pure(&tv, &gbar));
        assert!(is_coinvariant(&h, &q, &(&tv * &tg)).unwrap());
        assert!(is_coinvariant(&h, &q, &t1).unwrap());
        assert!(!is_coinvariant(&h, &q, &tv).unwrap());
        assert_eq!(qtilde(&h, &q, &tv).unwrap(), q.quotient.zero());
        assert_eq!(qtilde(&h, &q, &tg).unwrap(), gbar);
        let frac = FracElem::new(tv.clone(), tg.clone()).unwrap();
        assert!(is_coinvariant_frac(&h, &q, &frac).unwrap());
        let frac = FracElem::new(tv.clone(), &t1 + &tv).unwrap();
        assert_eq!(is_coinvariant_frac(&h, &q, &frac), Err(Error::DenominatorNotTrivializable));
    }
}
