use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::freehopf::{FreeHopf, LaurentPoly, Monomial};
use crate::groups::{lattice_basis_paper, primary_decompose, LatticeBasis};
use crate::hopf::{Elem, GroupAlgebraCheck, GroupLikeCertificate, HopfAlgebraData, QuotientHopf};
use crate::linalg::Matrix;
use crate::scalars::{CycScalar, Rational};

pub const DEFAULT_SEED: u64 = 0;

const JACOBIAN_ATTEMPTS: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum GammaPredicate {
    ImageInGroupAlgebra,
    IdentityOnGroupAlgebra,
    RightModuleMap,
    CoalgebraMap,
    CounitPreserved,
    FactorsQuotient,
}

impl GammaPredicate {
    pub const ALL: [GammaPredicate; 6] = [
        GammaPredicate::ImageInGroupAlgebra,
        GammaPredicate::IdentityOnGroupAlgebra,
        GammaPredicate::RightModuleMap,
        GammaPredicate::CoalgebraMap,
        GammaPredicate::CounitPreserved,
        GammaPredicate::FactorsQuotient,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GammaPredicate::ImageInGroupAlgebra => "image_in_group_algebra",
            GammaPredicate::IdentityOnGroupAlgebra => "identity_on_group_algebra",
            GammaPredicate::RightModuleMap => "right_module_map",
            GammaPredicate::CoalgebraMap => "coalgebra_map",
            GammaPredicate::CounitPreserved => "counit_preserved",
            GammaPredicate::FactorsQuotient => "factors_quotient",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GammaSource {
    /// Projection onto `k[G]` along the non-group-like basis vectors.
    Default,
    Explicit,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaCheck {
    pub predicate: GammaPredicate,
    pub passed: bool,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaCertificate {
    pub source: GammaSource,
    /// `γ(e_b)` for every basis vector.
    pub images: Vec<Elem>,
    pub checks: Vec<GammaCheck>,
}

impl GammaCertificate {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, p: GammaPredicate) -> &GammaCheck {
        self.checks.iter().find(|c| c.predicate == p).expect("every predicate is checked")
    }
}

/// `γ(e_b) = e_b` on group-like basis vectors and `0` elsewhere. Needs the
/// adapted-basis data `group_part`.
pub fn default_gamma(h: &HopfAlgebraData, cert: &GroupLikeCertificate) -> Result<Vec<Elem>> {
    if h.group_part.is_none() {
        return Err(Error::MissingAdaptedBasis(format!("{} declares no group_part", h.name)));
    }
    let gl = grouplike_indices(h, cert)?;
    Ok((0..h.dim()).map(|b| if gl.contains(&b) { h.basis(b) } else { h.zero() }).collect())
}

fn grouplike_indices(h: &HopfAlgebraData, cert: &GroupLikeCertificate) -> Result<Vec<usize>> {
    cert.elements
        .iter()
        .enumerate()
        .map(|(i, g)| {
            h.basis_index(g).ok_or_else(|| {
                Error::MissingAdaptedBasis(format!("group-like {} is not a basis vector", cert.group.label(i)))
            })
        })
        .collect()
}

fn apply(gamma: &[Elem], h: &HopfAlgebraData, x: &[CycScalar]) -> Elem {
    let mut out = h.zero();
    for (b, c) in x.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for (t, v) in gamma[b].iter().enumerate() {
            if !v.is_zero() {
                out[t] += &(c * v);
            }
        }
    }
    out
}

/// Certifies the predicates making `γ : H → k[G]` a right `k[G]`-module
/// coalgebra retraction compatible with `q`.
pub fn verify_gamma(
    h: &HopfAlgebraData,
    cert: &GroupLikeCertificate,
    q: &QuotientHopf,
    gamma: &[Elem],
    source: GammaSource,
) -> Result<GammaCertificate> {
    let n = h.dim();
    if gamma.len() != n || gamma.iter().any(|e| e.len() != n) {
        return Err(Error::ShapeMismatch(format!("gamma must be {n} vectors of length {n}")));
    }
    let labels = &h.labels;
    let mut checks = Vec::new();
    let mut record = |predicate, witness: Option<String>| {
        checks.push(GammaCheck { predicate, passed: witness.is_none(), witness });
    };

    let kg = Matrix::from_rows(cert.elements.clone(), n, h.order)?;
    let kg_rank = kg.rank();
    let outside = (0..n).find(|&b| {
        let mut m = kg.clone();
        m.push_row(gamma[b].clone());
        m.rank() > kg_rank
    });
    record(GammaPredicate::ImageInGroupAlgebra, outside.map(|b| labels[b].clone()));

    let not_fixed = cert.elements.iter().position(|g| apply(gamma, h, g) != *g);
    record(GammaPredicate::IdentityOnGroupAlgebra, not_fixed.map(|i| cert.group.label(i).into()));

    let mut module = None;
    'outer: for b in 0..n {
        for (i, g) in cert.elements.iter().enumerate() {
            let lhs = apply(gamma, h, &h.mul(&h.basis(b), g));
            if lhs != h.mul(&gamma[b], g) {
                module = Some(format!("{}*{}", labels[b], cert.group.label(i)));
                break 'outer;
            }
        }
    }
    record(GammaPredicate::RightModuleMap, module);

    let coalg = (0..n).find(|&b| {
        let mut lhs = crate::hopf::Tensor2::new();
        for (j, k, c) in &h.comul[b] {
            for (key, v) in h.tensor(&gamma[*j], &gamma[*k]) {
                let e = lhs.entry(key).or_insert_with(|| CycScalar::zero(h.order));
                *e += &(c * &v);
                if e.is_zero() {
                    lhs.remove(&key);
                }
            }
        }
        lhs != h.comul(&gamma[b])
    });
    record(GammaPredicate::CoalgebraMap, coalg.map(|b| labels[b].clone()));

    let counit = (0..n).find(|&b| h.counit(&gamma[b]) != h.counit[b]);
    record(GammaPredicate::CounitPreserved, counit.map(|b| labels[b].clone()));

    let quot = (0..n).find(|&b| q.project(&gamma[b]) != q.projection[b]);
    record(GammaPredicate::FactorsQuotient, quot.map(|b| labels[b].clone()));

    Ok(GammaCertificate { source, images: gamma.to_vec(), checks })
}

/// The monoid `{u^a v^b : a ∈ ℤ^{units}, b ∈ ℕ^{cone}}` of Laurent
/// monomials generated by linearly independent exponent vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialMonoid {
    pub nvars: usize,
    pub units: Vec<Vec<i64>>,
    pub cone: Vec<Vec<i64>>,
    columns: Matrix,
}

impl MonomialMonoid {
    pub fn new(nvars: usize, units: Vec<Vec<i64>>, cone: Vec<Vec<i64>>) -> Result<Self> {
        let k = units.len() + cone.len();
        if units.iter().chain(&cone).any(|v| v.len() != nvars) {
            return Err(Error::ShapeMismatch("generator exponent vector has the wrong length".into()));
        }
        let gens: Vec<&Vec<i64>> = units.iter().chain(&cone).collect();
        let columns = Matrix::from_fn(nvars, k, 1, |i, j| CycScalar::from_int(1, gens[j][i]));
        if columns.rank() != k {
            return Err(Error::Structure("monoid generators are not linearly independent".into()));
        }
        Ok(MonomialMonoid { nvars, units, cone, columns })
    }

    /// Exponents expressing `v` in the generators, when `v` lies in the monoid.
    /// With independent generators the rational solution is unique, so
    /// membership reduces to integrality and a sign check.
    pub fn decompose(&self, v: &[i64]) -> Option<Vec<BigInt>> {
        if v.len() != self.nvars {
            return None;
        }
        let rhs: Vec<CycScalar> = v.iter().map(|&e| CycScalar::from_int(1, e)).collect();
        let sol = self.columns.solve(&rhs)?;
        let mut out = Vec::with_capacity(sol.len());
        for (j, c) in sol.iter().enumerate() {
            let r: &Rational = c.as_rational()?;
            if !r.is_integer() {
                return None;
            }
            if j >= self.units.len() && r.is_negative() {
                return None;
            }
            out.push(r.to_integer());
        }
        Some(out)
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        self.decompose(v).is_some()
    }
}

/// `B_H = k[u_1^{±1}, …, u_ℓ^{±1}, u_{ℓ+1}, …, u_n]` with every `u_i` a
/// monomial in the `t_b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentationBH {
    pub n: usize,
    pub ell: usize,
    pub d: u64,
    pub r: usize,
    pub degree_bound: u64,
    pub gbar_order: u64,
    /// Kernel basis of `ℤ^{G(H)} → Ḡ`, indexed by group elements.
    pub lattice: LatticeBasis,
    /// The same basis as exponent vectors over all `n` variables.
    pub laurent_gens: Vec<Vec<i64>>,
    pub poly_gens: Vec<Vec<i64>>,
    /// `(b, g(b))` for each polynomial generator.
    pub poly_sources: Vec<(usize, usize)>,
    pub gamma: GammaCertificate,
    /// Generators (by position, Laurent first) that fail `δ_S(u) = u ⊗ 1`.
    pub non_coinvariant: Vec<usize>,
    pub jacobian_rank: usize,
    pub seed: u64,
}

impl PresentationBH {
    pub fn generators(&self) -> impl Iterator<Item = &Vec<i64>> {
        self.laurent_gens.iter().chain(&self.poly_gens)
    }

    pub fn monoid(&self) -> Result<MonomialMonoid> {
        MonomialMonoid::new(self.n, self.laurent_gens.clone(), self.poly_gens.clone())
    }

    pub fn max_laurent_degree(&self) -> i64 {
        self.laurent_gens.iter().map(|v| v.iter().sum()).max().unwrap_or(0)
    }

    pub fn max_poly_degree(&self) -> i64 {
        self.poly_gens.iter().map(|v| v.iter().sum()).max().unwrap_or(0)
    }

    pub fn generator_poly(&self, i: usize, order: u32) -> LaurentPoly {
        let v = self.generators().nth(i).expect("generator index");
        LaurentPoly::monomial(self.n, order, Monomial(v.clone()), CycScalar::one(order))
    }

    /// All structural invariants at once.
    pub fn is_consistent(&self) -> bool {
        self.laurent_gens.len() == self.ell
            && self.poly_gens.len() == self.n - self.ell
            && self.max_laurent_degree() <= self.degree_bound as i64
            && self.max_poly_degree() <= 2
            && self.lattice.abs_det() == BigInt::from(self.gbar_order)
            && self.non_coinvariant.is_empty()
            && self.jacobian_rank == self.n
            && self.gamma.all_pass()
    }
}

/// Rank of the Jacobian of the monomials `gens` at a point drawn from `rng`
/// with coordinates in `1..=97`.
fn jacobian_rank_at(gens: &[&Vec<i64>], n: usize, rng: &mut ChaCha8Rng) -> usize {
    let point: Vec<Rational> =
        (0..n).map(|_| Rational::from_integer(BigInt::from(rng.random_range(1..=97i64)))).collect();
    let value = |v: &[i64]| -> Rational {
        let mut acc = Rational::one();
        for (p, &e) in point.iter().zip(v) {
            let f = if e >= 0 { p.clone() } else { p.recip() };
            for _ in 0..e.unsigned_abs() {
                acc *= &f;
            }
        }
        acc
    };
    // ∂(t^v)/∂t_j = v_j t^v / t_j
    let jac = Matrix::from_fn(gens.len(), n, 1, |i, j| {
        let e = gens[i][j];
        if e == 0 {
            return CycScalar::zero(1);
        }
        let entry = value(gens[i]) * Rational::from_integer(BigInt::from(e)) / &point[j];
        CycScalar::rational(entry)
    });
    jac.rank()
}

/// Explicit presentation of `B_H` for pointed `H` with `H_ab = k[Ḡ]`.
///
/// Laurent generators come from the kernel basis of `ℤ^{G(H)} → Ḡ`, the
/// polynomial ones are `t_b t_{g(b)⁻¹}` (or `t_b` when `g(b) = 1`) for each
/// non-group-like basis vector `b` with group part `g(b)`. The retraction
/// `γ` is the default projection unless `gamma` is supplied.
pub fn build_presentation(
    fh: &FreeHopf,
    cert: &GroupLikeCertificate,
    gac: &GroupAlgebraCheck,
    gamma: Option<&[Elem]>,
    seed: u64,
) -> Result<PresentationBH> {
    let h = &fh.h;
    let n = h.dim();
    if !cert.pointed {
        return Err(Error::HypothesisNotMet(format!("{} is not pointed", h.name)));
    }
    if !gac.is_group_algebra {
        let why = gac.witness.clone().unwrap_or_default();
        return Err(Error::HypothesisNotMet(format!("H_ab is not a group algebra: {why}")));
    }
    let gl = grouplike_indices(h, cert)?;
    let (images, source) = match gamma {
        Some(g) => (g.to_vec(), GammaSource::Explicit),
        None => (default_gamma(h, cert)?, GammaSource::Default),
    };
    let gamma = verify_gamma(h, cert, &fh.q, &images, source)?;
    if let Some(bad) = gamma.checks.iter().find(|c| !c.passed) {
        return Err(Error::GammaInvalid(format!(
            "{} fails at {}",
            bad.predicate.name(),
            bad.witness.as_deref().unwrap_or("?")
        )));
    }
    let group_part = h
        .group_part
        .as_ref()
        .ok_or_else(|| Error::MissingAdaptedBasis("group_part is needed for the polynomial generators".into()))?;

    let dec = primary_decompose(&gac.gbar)?;
    let lattice = lattice_basis_paper(&cert.group, &gac.surjection, &dec)?;
    let laurent_gens: Vec<Vec<i64>> = lattice
        .columns
        .iter()
        .map(|col| {
            let mut v = vec![0i64; n];
            for (gi, &e) in col.iter().enumerate() {
                v[gl[gi]] += e;
            }
            v
        })
        .collect();

    let unit = h.basis_index(&h.unit);
    let mut poly_gens = Vec::new();
    let mut poly_sources = Vec::new();
    for b in 0..n {
        if gl.contains(&b) {
            continue;
        }
        let g = *group_part
            .get(&b)
            .ok_or_else(|| Error::MissingAdaptedBasis(format!("no group part for {}", h.labels[b])))?;
        if !gl.contains(&g) {
            return Err(Error::MissingAdaptedBasis(format!("group part of {} is not group-like", h.labels[b])));
        }
        let g_inv = h
            .basis_index(&h.antipode_basis(g))
            .ok_or_else(|| Error::Structure(format!("inverse of {} is not a basis vector", h.labels[g])))?;
        let mut v = vec![0i64; n];
        v[b] += 1;
        if Some(g) != unit {
            v[g_inv] += 1;
        }
        poly_gens.push(v);
        poly_sources.push((b, g));
    }

    let mut non_coinvariant = Vec::new();
    for (i, v) in laurent_gens.iter().chain(&poly_gens).enumerate() {
        let p = LaurentPoly::monomial(n, h.order, Monomial(v.clone()), CycScalar::one(h.order));
        let coinvariant = fh.coaction(&p)? == crate::freehopf::CoactionValue::pure(&p, &fh.q.quotient.unit);
        if !coinvariant {
            non_coinvariant.push(i);
        }
    }

    let gens: Vec<&Vec<i64>> = laurent_gens.iter().chain(&poly_gens).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut jacobian_rank = 0;
    for _ in 0..JACOBIAN_ATTEMPTS {
        jacobian_rank = jacobian_rank.max(jacobian_rank_at(&gens, n, &mut rng));
        if jacobian_rank == n {
            break;
        }
    }

    let (d, r) = (dec.d(), dec.r());
    Ok(PresentationBH {
        n,
        ell: gl.len(),
        d,
        r,
        degree_bound: d + 1 - r as u64,
        gbar_order: dec.group_order(),
        lattice,
        laurent_gens,
        poly_gens,
        poly_sources,
        gamma,
        non_coinvariant,
        jacobian_rank,
        seed,
    })
}

/// Whether every monomial of `p` lies in the monoid generated by the Laurent
/// generators, their inverses and the polynomial generators.
pub fn monoid_membership(p: &LaurentPoly, pres: &PresentationBH) -> bool {
    if p.nvars() != pres.n {
        return false;
    }
    let Ok(monoid) = pres.monoid() else { return false };
    p.terms().all(|(m, _)| monoid.contains(&m.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genbase::{p_poly, q_poly};
    use crate::groups::{cyclic, symmetric};
    use crate::hopf::{group_algebra, grouplike_certify, hab_is_group_algebra, sweedler, taft, uqbar_sl2};

    fn present(h: &HopfAlgebraData) -> (FreeHopf, PresentationBH) {
        let fh = FreeHopf::new(h).unwrap();
        let cert = grouplike_certify(h).unwrap();
        let gac = hab_is_group_algebra(h, &cert, &fh.q).unwrap();
        let p = build_presentation(&fh, &cert, &gac, None, DEFAULT_SEED).unwrap();
        (fh, p)
    }

    fn exps(h: &HopfAlgebraData, parts: &[(&str, i64)]) -> Vec<i64> {
        let mut v = vec![0; h.dim()];
        for (l, e) in parts {
            v[h.index_of(l).unwrap()] += e;
        }
        v
    }

    #[test]
    fn sweedler_presentation() {
        let h = sweedler();
        let (_, p) = present(&h);
        assert_eq!((p.n, p.ell, p.degree_bound), (4, 2, 2));
        assert_eq!(p.laurent_gens, vec![exps(&h, &[("1", 1)]), exps(&h, &[("g", 2)])]);
        assert_eq!(p.poly_gens, vec![exps(&h, &[("v", 1), ("g", 1)]), exps(&h, &[("gv", 1)])]);
        assert!(p.is_consistent());
    }

    #[test]
    fn taft3_presentation() {
        let h = taft(3);
        let (_, p) = present(&h);
        assert_eq!((p.n, p.ell, p.degree_bound), (9, 3, 3));
        assert_eq!(p.laurent_gens[1], exps(&h, &[("g", 3)]));
        assert_eq!(p.laurent_gens[2], exps(&h, &[("g^2", 1), ("g", 1)]));
        assert_eq!(p.poly_gens.len(), 6);
        assert!(p.is_consistent());
    }

    #[test]
    fn group_algebra_presentations() {
        let h = group_algebra(&cyclic(2));
        let (_, p) = present(&h);
        assert_eq!((p.n, p.ell), (2, 2));
        assert!(p.poly_gens.is_empty());
        assert_eq!(p.laurent_gens, vec![exps(&h, &[("e", 1)]), exps(&h, &[("a", 2)])]);
        let (_, p) = present(&group_algebra(&symmetric(3)));
        assert_eq!((p.n, p.ell, p.degree_bound), (6, 6, 2));
        assert!(p.is_consistent());
    }

    #[test]
    fn trivial_gbar_has_degree_bound_one() {
        let (_, p) = present(&uqbar_sl2(3));
        assert_eq!((p.n, p.ell, p.d, p.r, p.degree_bound), (27, 3, 0, 0, 1));
        assert!(p.is_consistent());
    }

    #[test]
    fn canonical_generators_are_members() {
        let h = sweedler();
        let (fh, p) = present(&h);
        for x in 0..4 {
            assert!(monoid_membership(&p_poly(&fh, x).unwrap(), &p));
            for y in 0..4 {
                assert!(monoid_membership(&q_poly(&fh, x, y).unwrap(), &p));
            }
        }
        let tv = LaurentPoly::var(4, 1, h.index_of("v").unwrap());
        assert!(!monoid_membership(&tv, &p));
        assert!(monoid_membership(&LaurentPoly::one(4, 1), &p));
    }

    #[test]
    fn gamma_through_one_minus_g() {
        let h = sweedler();
        let cert = grouplike_certify(&h).unwrap();
        let fh = FreeHopf::new(&h).unwrap();
        let mut gamma = default_gamma(&h, &cert).unwrap();
        let mut one_minus_g = h.one();
        one_minus_g[1] = CycScalar::from_int(1, -1);
        gamma[h.index_of("v").unwrap()] = one_minus_g;
        let c = verify_gamma(&h, &cert, &fh.q, &gamma, GammaSource::Explicit).unwrap();
        assert!(c.check(GammaPredicate::CoalgebraMap).passed);
        assert!(!c.check(GammaPredicate::RightModuleMap).passed);
        assert!(!c.check(GammaPredicate::FactorsQuotient).passed);
        let gac = hab_is_group_algebra(&h, &cert, &fh.q).unwrap();
        assert!(matches!(build_presentation(&fh, &cert, &gac, Some(&gamma), 0), Err(Error::GammaInvalid(_))));
    }

    #[test]
    fn missing_group_part_is_reported() {
        let mut h = sweedler();
        h.group_part = None;
        let cert = grouplike_certify(&h).unwrap();
        assert!(matches!(default_gamma(&h, &cert), Err(Error::MissingAdaptedBasis(_))));
    }

    #[test]
    fn monoid_rejects_dependent_generators() {
        assert!(MonomialMonoid::new(2, vec![vec![1, 0]], vec![vec![2, 0]]).is_err());
        let m = MonomialMonoid::new(2, vec![vec![1, 0]], vec![vec![1, 1]]).unwrap();
        assert!(m.contains(&[-3, 2]));
        assert!(!m.contains(&[0, -1]));
    }
}
