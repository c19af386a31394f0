//! The tensor algebra `T(X_H)` as a right `H`-comodule algebra, the
//! universal map `μ : T(X_H) → S(t_H) ⊗ H`, `μ(X_x) = t_{x₁} ⊗ x₂`, and the
//! abelianization `π : T(X_H) → S(t_H)`.

mod ncpoly;

pub use ncpoly::{NcPoly, Word};

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::freehopf::{coaction_delta_s, is_coinvariant, CoactionValue, LaurentPoly, Monomial};
use crate::groups::FiniteGroup;
use crate::hopf::{functions_on_group, hab_quotient, HopfAlgebraData, QuotientHopf};
use crate::linalg::Matrix;
use crate::noether::{molien_series, monomials_of_degree};
use crate::scalars::{CycScalar, Rational};

/// An element of `S(t_H) ⊗ H`, one polynomial per basis vector of `H`.
pub type ComoduleValue = CoactionValue;

/// Longest word handled by degree-sliced computations.
pub const DEFAULT_MAX_WORD_LEN: usize = 6;

/// `δ_T(P) ∈ T(X_H) ⊗ H`, one noncommutative polynomial per basis vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TCoaction {
    pub components: Vec<NcPoly>,
}

impl TCoaction {
    pub fn pure(p: &NcPoly, a: &[CycScalar]) -> Self {
        TCoaction { components: a.iter().map(|c| p.scale(c)).collect() }
    }

    fn mul(&self, other: &TCoaction, h: &HopfAlgebraData) -> TCoaction {
        let n = h.dim();
        let mut out = vec![NcPoly::zero(n, h.order); n];
        for (a, p) in self.components.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            for (b, r) in other.components.iter().enumerate() {
                if r.is_zero() {
                    continue;
                }
                let pr = p * r;
                for (k, c) in &h.mul[a][b] {
                    out[*k] = &out[*k] + &pr.scale(c);
                }
            }
        }
        TCoaction { components: out }
    }
}

/// `δ_T(X_x) = X_{x₁} ⊗ x₂`, extended multiplicatively over words.
pub fn delta_t(h: &HopfAlgebraData, p: &NcPoly) -> TCoaction {
    let n = h.dim();
    let letters: Vec<TCoaction> = (0..n)
        .map(|i| {
            let mut comps = vec![NcPoly::zero(n, h.order); n];
            for (j, k, c) in &h.comul[i] {
                comps[*k].add_term(vec![*j], c);
            }
            TCoaction { components: comps }
        })
        .collect();
    let one = TCoaction::pure(&NcPoly::one(n, h.order), &h.unit);
    let mut out = TCoaction { components: vec![NcPoly::zero(n, h.order); n] };
    for (w, c) in p.terms() {
        let mut acc = one.clone();
        for &i in w {
            acc = acc.mul(&letters[i], h);
        }
        for (t, comp) in acc.components.iter().enumerate() {
            out.components[t] = &out.components[t] + &comp.scale(c);
        }
    }
    out
}

pub fn is_t_coinvariant(h: &HopfAlgebraData, p: &NcPoly) -> bool {
    delta_t(h, p) == TCoaction::pure(p, &h.unit)
}

fn mu_letters(h: &HopfAlgebraData) -> Vec<ComoduleValue> {
    let n = h.dim();
    (0..n)
        .map(|i| {
            let mut comps = vec![LaurentPoly::zero(n, h.order); n];
            for (j, k, c) in &h.comul[i] {
                comps[*k].add_term(Monomial::var(n, *j), c);
            }
            CoactionValue { components: comps }
        })
        .collect()
}

/// `μ(X_x) = t_{x₁} ⊗ x₂`, extended as an algebra map.
pub fn mu(h: &HopfAlgebraData, p: &NcPoly) -> ComoduleValue {
    let n = h.dim();
    let letters = mu_letters(h);
    let one = CoactionValue::pure(&LaurentPoly::one(n, h.order), &h.unit);
    let mut out = CoactionValue { components: vec![LaurentPoly::zero(n, h.order); n] };
    let mut cache: BTreeMap<Word, ComoduleValue> = BTreeMap::new();
    for (w, c) in p.terms() {
        // reuse the longest cached prefix
        let mut start = 0;
        let mut acc = one.clone();
        for len in (1..=w.len()).rev() {
            if let Some(v) = cache.get(&w[..len]) {
                acc = v.clone();
                start = len;
                break;
            }
        }
        for end in start..w.len() {
            acc = acc.mul(&letters[w[end]], h);
            cache.insert(w[..=end].to_vec(), acc.clone());
        }
        for (t, comp) in acc.components.iter().enumerate() {
            out.components[t].add_assign(&comp.scale(c));
        }
    }
    out
}

/// `P ∈ ker μ`.
pub fn is_identity(h: &HopfAlgebraData, p: &NcPoly) -> bool {
    mu(h, p).components.iter().all(LaurentPoly::is_zero)
}

/// `(μ ⊗ id) ∘ δ_T = (id ⊗ Δ) ∘ μ` on `p`.
pub fn mu_is_colinear_on(h: &HopfAlgebraData, p: &NcPoly) -> bool {
    let n = h.dim();
    let mut lhs: BTreeMap<(usize, usize), LaurentPoly> = BTreeMap::new();
    for (k, pk) in delta_t(h, p).components.iter().enumerate() {
        if pk.is_zero() {
            continue;
        }
        for (j, m) in mu(h, pk).components.into_iter().enumerate() {
            if !m.is_zero() {
                lhs.insert((j, k), m);
            }
        }
    }
    let mut rhs: BTreeMap<(usize, usize), LaurentPoly> = BTreeMap::new();
    for (i, m) in mu(h, p).components.iter().enumerate() {
        if m.is_zero() {
            continue;
        }
        for (j, k, c) in &h.comul[i] {
            rhs.entry((*j, *k)).or_insert_with(|| LaurentPoly::zero(n, h.order)).add_assign(&m.scale(c));
        }
    }
    rhs.retain(|_, v| !v.is_zero());
    lhs == rhs
}

/// The abelianization `π(X_x) = t_x`.
pub fn pi_abelianize(p: &NcPoly) -> LaurentPoly {
    let n = p.nletters();
    let mut out = LaurentPoly::zero(n, p.order());
    for (w, c) in p.terms() {
        let mut e = vec![0i64; n];
        for &i in w {
            e[i] += 1;
        }
        out.add_term(Monomial(e), c);
    }
    out
}

/// `P_x = X_{x₁} X_{S(x₂)}` or `Q_{x,y} = X_{x₁} X_{y₁} X_{S(x₂y₂)}`.
pub fn canonical_coinvariants(h: &HopfAlgebraData, x: usize, y: Option<usize>) -> NcPoly {
    let n = h.dim();
    let mut out = NcPoly::zero(n, h.order);
    let x_of = |e: &[CycScalar]| NcPoly::linear(h.order, e);
    for (a, b, c1) in &h.comul[x] {
        match y {
            None => {
                let term = &NcPoly::letter(n, h.order, *a) * &x_of(&h.antipode_basis(*b));
                out = &out + &term.scale(c1);
            }
            Some(y) => {
                for (c, d, c2) in &h.comul[y] {
                    let front = &NcPoly::letter(n, h.order, *a) * &NcPoly::letter(n, h.order, *c);
                    let term = &front * &x_of(&h.antipode(&h.mul_basis(*b, *d)));
                    out = &out + &term.scale(&(c1 * c2));
                }
            }
        }
    }
    out
}

/// `(id ⊗ q) ∘ μ = δ_S ∘ π` on `p`.
pub fn square_check(h: &HopfAlgebraData, q: &QuotientHopf, p: &NcPoly) -> Result<bool> {
    let n = h.dim();
    let m = mu(h, p);
    let mut lhs = CoactionValue { components: vec![LaurentPoly::zero(n, h.order); q.dim()] };
    for (i, comp) in m.components.iter().enumerate() {
        if comp.is_zero() {
            continue;
        }
        for (t, c) in q.projection[i].iter().enumerate() {
            if !c.is_zero() {
                lhs.components[t].add_assign(&comp.scale(c));
            }
        }
    }
    Ok(lhs == coaction_delta_s(h, q, &pi_abelianize(p))?)
}

/// A word of length `1..=max_len` with uniformly chosen letters.
pub fn random_word(rng: &mut ChaCha8Rng, nletters: usize, order: u32, max_len: usize) -> NcPoly {
    let len = rng.random_range(1..=max_len);
    let w: Word = (0..len).map(|_| rng.random_range(0..nletters)).collect();
    NcPoly::word(nletters, order, w, CycScalar::one(order))
}

/// Outcome of [`square_check`] over seeded random words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareSampleReport {
    pub samples: usize,
    pub failures: Vec<NcPoly>,
}

pub fn square_check_random(
    h: &HopfAlgebraData,
    q: &QuotientHopf,
    samples: usize,
    max_len: usize,
    seed: u64,
) -> Result<SquareSampleReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    for _ in 0..samples {
        let w = random_word(&mut rng, h.dim(), h.order, max_len);
        if !square_check(h, q, &w)? {
            failures.push(w);
        }
    }
    Ok(SquareSampleReport { samples, failures })
}

fn all_words(n: usize, d: usize) -> Vec<Word> {
    let mut words: Vec<Word> = vec![Vec::new()];
    for _ in 0..d {
        words = words
            .into_iter()
            .flat_map(|w| {
                (0..n).map(move |i| {
                    let mut v = w.clone();
                    v.push(i);
                    v
                })
            })
            .collect();
    }
    words
}

fn check_words(n: usize, d: usize) -> Result<()> {
    if d > DEFAULT_MAX_WORD_LEN {
        return Err(Error::SizeLimit { what: "word length".to_string(), size: d, limit: DEFAULT_MAX_WORD_LEN });
    }
    let count = n.checked_pow(d as u32).unwrap_or(usize::MAX);
    const MAX_WORDS: usize = 4096;
    if count > MAX_WORDS {
        return Err(Error::SizeLimit { what: "words in one degree".to_string(), size: count, limit: MAX_WORDS });
    }
    Ok(())
}

/// A basis of `ker μ` in degree `d`: the kernel of the linear map from
/// word coefficients to the coordinates of `μ`.
pub fn identities_in_degree(h: &HopfAlgebraData, d: usize) -> Result<Vec<NcPoly>> {
    let n = h.dim();
    check_words(n, d)?;
    let words = all_words(n, d);
    let images: Vec<ComoduleValue> =
        words.iter().map(|w| mu(h, &NcPoly::word(n, h.order, w.clone(), CycScalar::one(h.order)))).collect();
    let mut rows: BTreeMap<(Monomial, usize), usize> = BTreeMap::new();
    for img in &images {
        for (k, comp) in img.components.iter().enumerate() {
            for (m, _) in comp.terms() {
                let next = rows.len();
                rows.entry((m.clone(), k)).or_insert(next);
            }
        }
    }
    let mut mat = Matrix::zeros(rows.len(), words.len(), h.order);
    for (col, img) in images.iter().enumerate() {
        for (k, comp) in img.components.iter().enumerate() {
            for (m, c) in comp.terms() {
                mat[(rows[&(m.clone(), k)], col)] = c.clone();
            }
        }
    }
    Ok(mat
        .kernel()
        .into_iter()
        .map(|v| {
            let mut p = NcPoly::zero(n, h.order);
            for (w, c) in words.iter().zip(v) {
                p.add_term(w.clone(), &c);
            }
            p
        })
        .collect())
}

/// Per-degree data of the truncated check for `O(G)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IyerDegree {
    pub degree: usize,
    pub t_coinvariant_dim: usize,
    pub s_invariant_dim: usize,
    pub pi_image_rank: usize,
    pub molien: Rational,
    /// Every computed `T`-coinvariant `P` satisfies `δ_T(P) = P ⊗ 1` and
    /// `μ(P) = π(P) ⊗ 1`.
    pub mu_equals_pi: bool,
    /// Every `S`-invariant basis element is `δ_S`-coinvariant.
    pub s_coinvariant: bool,
}

impl IyerDegree {
    pub fn passed(&self) -> bool {
        self.mu_equals_pi
            && self.s_coinvariant
            && self.pi_image_rank == self.s_invariant_dim
            && self.molien == Rational::from_integer((self.s_invariant_dim as i64).into())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IyerReport {
    pub group_order: usize,
    pub degrees: Vec<IyerDegree>,
}

impl IyerReport {
    pub fn all_pass(&self) -> bool {
        self.degrees.iter().all(IyerDegree::passed)
    }
}

/// Orbit sums of `items` under a group acting through `act(h, item)`.
fn orbit_sums_by<T: Ord + Clone>(items: &[T], order: usize, act: impl Fn(usize, &T) -> T) -> Vec<Vec<T>> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for it in items {
        if seen.contains(it) {
            continue;
        }
        let orbit: BTreeSet<T> = (0..order).map(|h| act(h, it)).collect();
        seen.extend(orbit.iter().cloned());
        out.push(orbit.into_iter().collect());
    }
    out
}

/// Degree-truncated comparison of `T(X_H)^{co H}`, `S(t_H)^{co H}` and `π`
/// for `H = O(G)`, where coinvariance is invariance under
/// `h · X_{e_a} = X_{e_{a h⁻¹}}`.
pub fn iyer_truncated_check(g: &FiniteGroup, max_degree: usize) -> Result<IyerReport> {
    const MAX_ORDER: usize = 3;
    const MAX_DEGREE: usize = 4;
    if g.order() > MAX_ORDER {
        return Err(Error::SizeLimit { what: "group order".to_string(), size: g.order(), limit: MAX_ORDER });
    }
    if max_degree > MAX_DEGREE {
        return Err(Error::SizeLimit { what: "degree".to_string(), size: max_degree, limit: MAX_DEGREE });
    }
    let h = functions_on_group(g);
    let q = hab_quotient(&h)?;
    let n = g.order();
    let order = h.order;
    let one = CycScalar::one(order);
    let letter_action = |x: usize, a: usize| g.mul(a, g.inv(x));
    let molien = molien_series(g, max_degree);
    let mut degrees = Vec::new();
    for d in 0..=max_degree {
        let words = all_words(n, d);
        let t_orbits = orbit_sums_by(&words, n, |x, w: &Word| w.iter().map(|&a| letter_action(x, a)).collect());
        let t_basis: Vec<NcPoly> = t_orbits
            .iter()
            .map(|orbit| {
                let mut p = NcPoly::zero(n, order);
                for w in orbit {
                    p.add_term(w.clone(), &one);
                }
                p
            })
            .collect();
        let mut mu_equals_pi = true;
        for p in &t_basis {
            let pi = pi_abelianize(p);
            if !is_t_coinvariant(&h, p) || mu(&h, p) != CoactionValue::pure(&pi, &h.unit) {
                mu_equals_pi = false;
            }
        }

        let monos = monomials_of_degree(n, d);
        let s_orbits = orbit_sums_by(&monos, n, |x, v: &Vec<i64>| {
            let mut out = vec![0i64; n];
            for (a, &e) in v.iter().enumerate() {
                out[letter_action(x, a)] += e;
            }
            out
        });
        let mut s_coinvariant = true;
        for orbit in &s_orbits {
            let mut p = LaurentPoly::zero(n, order);
            for v in orbit {
                p.add_term(Monomial(v.clone()), &one);
            }
            if !is_coinvariant(&h, &q, &p)? {
                s_coinvariant = false;
            }
        }

        let index: BTreeMap<&Vec<i64>, usize> = monos.iter().enumerate().map(|(i, v)| (v, i)).collect();
        let mut image = Matrix::zeros(t_basis.len(), monos.len(), order);
        for (r, p) in t_basis.iter().enumerate() {
            for (m, c) in pi_abelianize(p).terms() {
                image[(r, index[&m.0])] += c;
            }
        }
        degrees.push(IyerDegree {
            degree: d,
            t_coinvariant_dim: t_basis.len(),
            s_invariant_dim: s_orbits.len(),
            pi_image_rank: image.rank(),
            molien: molien[d].clone(),
            mu_equals_pi,
            s_coinvariant,
        });
    }
    Ok(IyerReport { group_order: n, degrees })
}
