//! Invariants of the regular representation `h · t_g = t_{hg}` of a finite
//! group on `k[t_g | g ∈ G]`, and its dictionary with the coaction of the
//! function algebra `O(G)`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::freehopf::{coaction_delta_s, coproduct_s, is_coinvariant, tensor_s, CoactionValue, LaurentPoly, Monomial};
use crate::groups::{dedekind_determinant, regular_action, FiniteGroup, DEFAULT_DET_SIZE_LIMIT};
use crate::hopf::{functions_on_group, hab_quotient};
use crate::linalg::Matrix;
use crate::scalars::{CycScalar, Rational};

/// Largest group handled by the graded computations.
pub const MAX_GROUP_ORDER: usize = 6;

/// `(1/|G|) Σ_h h·P`.
pub fn reynolds(g: &FiniteGroup, p: &LaurentPoly) -> LaurentPoly {
    let mut acc = LaurentPoly::zero(p.nvars(), p.order());
    for h in 0..g.order() {
        acc.add_assign(&regular_action(g, h, p));
    }
    acc.scale(&CycScalar::from_rational(p.order(), Rational::new(1.into(), (g.order() as i64).into())))
}

pub fn is_invariant(g: &FiniteGroup, p: &LaurentPoly) -> bool {
    (0..g.order()).all(|h| regular_action(g, h, p) == *p)
}

/// Exponent vectors of all monomials of total degree `d` in `m` variables,
/// in lexicographic order.
pub fn monomials_of_degree(m: usize, d: usize) -> Vec<Vec<i64>> {
    fn rec(m: usize, d: usize, prefix: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if prefix.len() + 1 == m {
            prefix.push(d as i64);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for e in (0..=d).rev() {
            prefix.push(e as i64);
            rec(m, d - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if m == 0 {
        if d == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(m, d, &mut Vec::new(), &mut out);
    out
}

/// Orbit sums of the degree-`d` monomials: a basis of the degree-`d`
/// invariants of a permutation action.
pub fn orbit_sums(g: &FiniteGroup, d: usize) -> Vec<LaurentPoly> {
    let m = g.order();
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut out = Vec::new();
    for v in monomials_of_degree(m, d) {
        if seen.contains(&v) {
            continue;
        }
        let mono = LaurentPoly::monomial(m, 1, Monomial(v), CycScalar::one(1));
        let mut orbit = LaurentPoly::zero(m, 1);
        let mut members = BTreeSet::new();
        for h in 0..m {
            let img = regular_action(g, h, &mono);
            let (e, _) = img.as_monomial().expect("permutations map monomials to monomials");
            if members.insert(e.0.clone()) {
                orbit.add_assign(&img);
            }
        }
        seen.extend(members);
        out.push(orbit);
    }
    out
}

/// Invariant generators up to a degree bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantRingSlice {
    pub group: FiniteGroup,
    pub max_degree: usize,
    pub generators_by_degree: BTreeMap<usize, Vec<LaurentPoly>>,
    /// `(dim of invariants, dim of the span of products of lower generators)`.
    pub dims_by_degree: BTreeMap<usize, (usize, usize)>,
}

impl InvariantRingSlice {
    /// Largest degree in which a new generator was needed.
    pub fn top_degree(&self) -> usize {
        self.generators_by_degree.iter().filter(|(_, g)| !g.is_empty()).map(|(d, _)| *d).max().unwrap_or(0)
    }

    pub fn generator_count(&self) -> usize {
        self.generators_by_degree.values().map(Vec::len).sum()
    }
}

struct Coordinates {
    index: BTreeMap<Vec<i64>, usize>,
}

impl Coordinates {
    fn new(m: usize, d: usize) -> Self {
        Coordinates { index: monomials_of_degree(m, d).into_iter().enumerate().map(|(i, v)| (v, i)).collect() }
    }

    fn row(&self, p: &LaurentPoly) -> Vec<CycScalar> {
        let mut r = vec![CycScalar::zero(p.order()); self.index.len()];
        for (m, c) in p.terms() {
            r[self.index[&m.0]] = c.clone();
        }
        r
    }
}

fn size_check(g: &FiniteGroup, d: usize) -> Result<()> {
    if g.order() > MAX_GROUP_ORDER {
        return Err(Error::SizeLimit { what: "group order".to_string(), size: g.order(), limit: MAX_GROUP_ORDER });
    }
    if d > g.order() + 1 {
        return Err(Error::SizeLimit { what: "degree bound".to_string(), size: d, limit: g.order() + 1 });
    }
    Ok(())
}

/// Degree by degree, adds orbit sums not already spanned by products of
/// lower-degree generators with lower-degree invariants.
pub fn invariant_generators(g: &FiniteGroup, max_degree: usize) -> Result<InvariantRingSlice> {
    size_check(g, max_degree)?;
    let m = g.order();
    let mut generators_by_degree: BTreeMap<usize, Vec<LaurentPoly>> = BTreeMap::new();
    let mut dims_by_degree = BTreeMap::new();
    let mut bases: Vec<Vec<LaurentPoly>> = vec![vec![LaurentPoly::one(m, 1)]];
    for d in 1..=max_degree {
        let invariants = orbit_sums(g, d);
        let coords = Coordinates::new(m, d);
        let mut span = Matrix::zeros(0, coords.index.len(), 1);
        for (&a, gens) in &generators_by_degree {
            for gen in gens {
                for b in &bases[d - a] {
                    span.push_row(coords.row(&(gen * b)));
                }
            }
        }
        let mut rank = span.rank();
        let decomposable = rank;
        let mut new = Vec::new();
        for p in &invariants {
            span.push_row(coords.row(p));
            let r = span.rank();
            if r > rank {
                rank = r;
                new.push(p.clone());
            }
        }
        dims_by_degree.insert(d, (invariants.len(), decomposable));
        generators_by_degree.insert(d, new);
        bases.push(invariants);
    }
    Ok(InvariantRingSlice { group: g.clone(), max_degree, generators_by_degree, dims_by_degree })
}

/// Cycle lengths of `x ↦ h x`.
fn cycle_type(g: &FiniteGroup, h: usize) -> Vec<usize> {
    let perm = g.left_translation(h);
    let mut seen = vec![false; perm.len()];
    let mut out = Vec::new();
    for s in 0..perm.len() {
        if seen[s] {
            continue;
        }
        let mut len = 0;
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            x = perm[x];
            len += 1;
        }
        out.push(len);
    }
    out
}

/// Coefficients `0..=max_degree` of the Molien series
/// `(1/|G|) Σ_h 1/det(1 − z·P_h)`; for a permutation with cycle lengths
/// `c_j` the determinant is `∏ (1 − z^{c_j})`.
pub fn molien_series(g: &FiniteGroup, max_degree: usize) -> Vec<Rational> {
    let len = max_degree + 1;
    let mut total = vec![Rational::from_integer(0.into()); len];
    for h in 0..g.order() {
        let mut series = vec![Rational::from_integer(0.into()); len];
        series[0] = Rational::from_integer(1.into());
        for c in cycle_type(g, h) {
            // multiply by 1/(1 − z^c) = Σ z^{kc}
            for i in c..len {
                let prev = series[i - c].clone();
                series[i] += prev;
            }
        }
        for (t, s) in total.iter_mut().zip(series) {
            *t += s;
        }
    }
    let n = Rational::from_integer((g.order() as i64).into());
    total.into_iter().map(|t| t / &n).collect()
}

/// Whether the invariant dimensions of the slice agree with the Molien series.
pub fn molien_agrees(slice: &InvariantRingSlice) -> bool {
    let series = molien_series(&slice.group, slice.max_degree);
    slice.dims_by_degree.iter().all(|(&d, &(dim, _))| series[d] == Rational::from_integer((dim as i64).into()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaInvarianceReport {
    pub theta: LaurentPoly,
    /// `χ(h)` with `h·Θ = χ(h)Θ`, or `None` when `h·Θ ≠ ±Θ`.
    pub character: Vec<Option<i8>>,
    /// First `h` with `h·Θ² ≠ Θ²`.
    pub square_failure: Option<usize>,
}

impl ThetaInvarianceReport {
    pub fn all_pass(&self) -> bool {
        self.square_failure.is_none() && self.character.iter().all(Option::is_some)
    }
}

/// `h·Θ_G = ±Θ_G` and `h·Θ_G² = Θ_G²` for every `h`.
pub fn theta_invariance_check(g: &FiniteGroup) -> Result<ThetaInvarianceReport> {
    let theta = dedekind_determinant(g, DEFAULT_DET_SIZE_LIMIT.min(MAX_GROUP_ORDER))?;
    let square = theta.pow(2);
    let mut character = Vec::with_capacity(g.order());
    let mut square_failure = None;
    for h in 0..g.order() {
        let img = regular_action(g, h, &theta);
        character.push(if img == theta {
            Some(1)
        } else if img == -&theta {
            Some(-1)
        } else {
            None
        });
        if square_failure.is_none() && regular_action(g, h, &square) != square {
            square_failure = Some(h);
        }
    }
    Ok(ThetaInvarianceReport { theta, character, square_failure })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DictionaryReport {
    pub samples: usize,
    pub failures: Vec<String>,
}

impl DictionaryReport {
    pub fn all_pass(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks, through `H = O(G)` with `t_g = t_{e_{g⁻¹}}`:
/// `δ_S(P) = Σ_h h·P ⊗ e_h` on every variable, every quadratic monomial and
/// `random_samples` random cubic monomials; `is_coinvariant(P) ⇔ P invariant`
/// on the same samples and on the orbit sum; and
/// `Δ(t_g) = Σ_h t_{hg} ⊗ t_{h⁻¹}`.
pub fn coaction_action_dictionary_check(g: &FiniteGroup, random_samples: usize, seed: u64) -> Result<DictionaryReport> {
    if g.order() > MAX_GROUP_ORDER {
        return Err(Error::SizeLimit { what: "group order".to_string(), size: g.order(), limit: MAX_GROUP_ORDER });
    }
    let h = functions_on_group(g);
    let q = hab_quotient(&h)?;
    let m = g.order();
    let order = h.order;
    let relabel: Vec<usize> = (0..m).map(|x| g.inv(x)).collect();
    let to_h = |p: &LaurentPoly| p.map_vars(&relabel, m);
    let lift = |p: &LaurentPoly| {
        let mut out = LaurentPoly::zero(m, order);
        for (mono, c) in p.terms() {
            out.add_term(mono.clone(), &c.coerce(order).expect("rational coerces"));
        }
        out
    };

    let mut samples: Vec<LaurentPoly> = Vec::new();
    for d in 1..=2 {
        for v in monomials_of_degree(m, d) {
            samples.push(LaurentPoly::monomial(m, 1, Monomial(v), CycScalar::one(1)));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..random_samples {
        let mut v = vec![0i64; m];
        for _ in 0..3 {
            v[rng.random_range(0..m)] += 1;
        }
        samples.push(LaurentPoly::monomial(m, 1, Monomial(v), CycScalar::one(1)));
    }
    let orbit_sum = orbit_sums(g, 1).remove(0);
    samples.push(orbit_sum);

    let mut failures = Vec::new();
    for p in &samples {
        let ph = lift(&to_h(p));
        let got = coaction_delta_s(&h, &q, &ph)?;
        let mut expected = CoactionValue { components: vec![LaurentPoly::zero(m, order); q.dim()] };
        for x in 0..m {
            let img = lift(&to_h(&regular_action(g, x, p)));
            let e = CoactionValue::pure(&img, &q.projection[x]);
            for (t, c) in e.components.iter().enumerate() {
                expected.components[t].add_assign(c);
            }
        }
        if got != expected {
            failures.push(format!("coaction/action mismatch at {p}"));
        }
        if is_coinvariant(&h, &q, &ph)? != is_invariant(g, p) {
            failures.push(format!("coinvariance and invariance disagree at {p}"));
        }
    }
    for x in 0..m {
        let tg = LaurentPoly::var(m, order, relabel[x]);
        let mut expected = LaurentPoly::zero(2 * m, order);
        for y in 0..m {
            let left = LaurentPoly::var(m, order, relabel[g.mul(y, x)]);
            let right = LaurentPoly::var(m, order, relabel[g.inv(y)]);
            expected.add_assign(&tensor_s(&left, &right));
        }
        if coproduct_s(&h, &tg)? != expected {
            failures.push(format!("coproduct of t_{} differs from the group formula", g.label(x)));
        }
    }
    Ok(DictionaryReport { samples: samples.len() + m, failures })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{cyclic, klein4, symmetric};

    fn t(m: usize, i: usize) -> LaurentPoly {
        LaurentPoly::var(m, 1, i)
    }

    #[test]
    fn reynolds_examples() {
        let g = cyclic(2);
        let half = CycScalar::ratio(1, 2);
        assert_eq!(reynolds(&g, &t(2, 0)), (&t(2, 0) + &t(2, 1)).scale(&half));
        let p = &t(2, 0) * &t(2, 1);
        assert_eq!(reynolds(&g, &p), p);
        let s3 = symmetric(3);
        let r = reynolds(&s3, &t(6, 0).pow(2));
        let mut sum = LaurentPoly::zero(6, 1);
        for i in 0..6 {
            sum.add_assign(&t(6, i).pow(2));
        }
        assert_eq!(r, sum.scale(&CycScalar::ratio(1, 6)));
    }

    #[test]
    fn z2_generators() {
        let s = invariant_generators(&cyclic(2), 2).unwrap();
        assert_eq!(s.generators_by_degree[&1], vec![&t(2, 0) + &t(2, 1)]);
        assert_eq!(s.generators_by_degree[&2].len(), 1);
        assert_eq!(s.top_degree(), 2);
        assert!(molien_agrees(&s));
    }

    #[test]
    fn cyclic_noether_numbers() {
        for n in 1..=5 {
            let s = invariant_generators(&cyclic(n), n).unwrap();
            assert_eq!(s.top_degree(), n, "Z/{n}");
            assert!(molien_agrees(&s));
        }
    }

    #[test]
    fn klein_four_needs_less_than_its_order() {
        let s = invariant_generators(&klein4(), 4).unwrap();
        assert!(s.top_degree() < 4);
        assert!(s.generators_by_degree[&4].is_empty());
        assert!(molien_agrees(&s));
    }

    #[test]
    fn trivial_group_generators() {
        let s = invariant_generators(&cyclic(1), 1).unwrap();
        assert_eq!(s.generators_by_degree[&1], vec![t(1, 0)]);
    }

    #[test]
    fn size_limits() {
        assert!(matches!(invariant_generators(&cyclic(7), 2), Err(Error::SizeLimit { .. })));
        assert!(matches!(invariant_generators(&cyclic(2), 4), Err(Error::SizeLimit { .. })));
    }

    #[test]
    fn molien_for_z2() {
        let s = molien_series(&cyclic(2), 3);
        let r = |k: i64| Rational::from_integer(k.into());
        assert_eq!(s, vec![r(1), r(1), r(2), r(2)]);
    }

    #[test]
    fn theta_characters() {
        let r = theta_invariance_check(&cyclic(2)).unwrap();
        assert_eq!(r.character, vec![Some(1), Some(-1)]);
        assert!(r.all_pass());
        let r = theta_invariance_check(&cyclic(3)).unwrap();
        assert!(r.character.iter().all(|c| *c == Some(1)));
        assert!(theta_invariance_check(&symmetric(3)).unwrap().all_pass());
    }

    #[test]
    fn dictionary_holds() {
        for g in [cyclic(1), cyclic(2), cyclic(3), symmetric(3)] {
            let r = coaction_action_dictionary_check(&g, 5, 0).unwrap();
            assert!(r.all_pass(), "{:?}", r.failures);
        }
    }

    #[test]
    fn dictionary_detects_wrong_relabeling() {
        // without g ↦ g⁻¹ the two sides differ for Z/3
        let g = cyclic(3);
        let h = functions_on_group(&g);
        let q = hab_quotient(&h).unwrap();
        let ta = LaurentPoly::var(3, h.order, 1);
        let got = coaction_delta_s(&h, &q, &ta).unwrap();
        let mut expected = CoactionValue { components: vec![LaurentPoly::zero(3, h.order); q.dim()] };
        for x in 0..3 {
            let e = CoactionValue::pure(&regular_action(&g, x, &ta), &q.projection[x]);
            for (t, c) in e.components.iter().enumerate() {
                expected.components[t].add_assign(c);
            }
        }
        assert_ne!(got, expected);
    }
}
