//! The generic base algebra `B_H ⊂ S(t_H)_Θ`.
//!
//! `B_H` is generated by the elements
//! `σ(x,y) = t_{x₁}t_{y₁}t⁻¹_{x₂y₂}` and `σ⁻¹(x,y) = t_{x₁y₁}t⁻¹_{x₂}t⁻¹_{y₂}`,
//! or equivalently by the families
//!
//! ```text
//! p_x    = t_{x₁} t_{S(x₂)}            q_{x,y}  = t_{x₁} t_{y₁} t_{S(x₂y₂)}
//! p′_x   = t⁻¹_{S(x₁)} t⁻¹_{x₂}        q′_{x,y} = t⁻¹_{S(x₁y₁)} t⁻¹_{x₂} t⁻¹_{y₂}
//! ```
//!
//! For pointed `H` with `H_ab` a group algebra, [`build_presentation`] writes
//! `B_H` as a Laurent polynomial ring in `ℓ = |G(H)|` monomials tensored with
//! a polynomial ring in `n − ℓ` monomials of degree at most two.

mod presentation;

pub use presentation::{
    build_presentation, default_gamma, monoid_membership, verify_gamma, GammaCertificate, GammaCheck, GammaPredicate,
    GammaSource, MonomialMonoid, PresentationBH, DEFAULT_SEED,
};

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::freehopf::{CoactionValue, FracElem, FreeHopf, LaurentPoly};
use crate::hopf::HopfAlgebraData;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum GeneratorKind {
    Sigma,
    SigmaInv,
    P,
    Q,
    PPrime,
    QPrime,
}

impl GeneratorKind {
    pub const ALL: [GeneratorKind; 6] = [
        GeneratorKind::Sigma,
        GeneratorKind::SigmaInv,
        GeneratorKind::P,
        GeneratorKind::Q,
        GeneratorKind::PPrime,
        GeneratorKind::QPrime,
    ];

    pub fn binary(self) -> bool {
        matches!(self, GeneratorKind::Sigma | GeneratorKind::SigmaInv | GeneratorKind::Q | GeneratorKind::QPrime)
    }

    pub fn name(self) -> &'static str {
        match self {
            GeneratorKind::Sigma => "sigma",
            GeneratorKind::SigmaInv => "sigma_inv",
            GeneratorKind::P => "p",
            GeneratorKind::Q => "q",
            GeneratorKind::PPrime => "p_prime",
            GeneratorKind::QPrime => "q_prime",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        GeneratorKind::ALL.into_iter().find(|k| k.name() == s)
    }
}

impl fmt::Display for GeneratorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorElement {
    pub kind: GeneratorKind,
    pub x: usize,
    pub y: Option<usize>,
    pub value: FracElem,
}

impl GeneratorElement {
    pub fn label(&self, h: &HopfAlgebraData) -> String {
        match self.y {
            Some(y) => format!("{}({},{})", self.kind, h.labels[self.x], h.labels[y]),
            None => format!("{}({})", self.kind, h.labels[self.x]),
        }
    }
}

fn frac_zero(fh: &FreeHopf) -> FracElem {
    FracElem::from_poly(LaurentPoly::zero(fh.nvars(), fh.h.order))
}

/// Evaluates a generator from its defining formula.
pub fn make_generator(fh: &FreeHopf, kind: GeneratorKind, x: usize, y: Option<usize>) -> Result<GeneratorElement> {
    let h = &fh.h;
    let n = h.dim();
    if x >= n || y.is_some_and(|y| y >= n) {
        return Err(Error::ShapeMismatch("generator argument out of range".into()));
    }
    if kind.binary() != y.is_some() {
        return Err(Error::ShapeMismatch(format!("{kind} takes {} arguments", if kind.binary() { 2 } else { 1 })));
    }
    let t = |e: &[crate::scalars::CycScalar]| fh.t(e);
    let ti = |e: &[crate::scalars::CycScalar]| fh.t_inv(e);
    let mut value = frac_zero(fh);
    match y {
        None => {
            for (a, b, c) in &h.comul[x] {
                let (ea, eb) = (h.basis(*a), h.basis(*b));
                let term = match kind {
                    GeneratorKind::P => t(&ea).mul(&t(&h.antipode(&eb))),
                    _ => ti(&h.antipode(&ea)).mul(&ti(&eb)),
                };
                value = value.add(&term.scale(c));
            }
        }
        Some(y) => {
            for (a, b, c1) in &h.comul[x] {
                for (c, d, c2) in &h.comul[y] {
                    let term = match kind {
                        GeneratorKind::Sigma => t(&h.basis(*a)).mul(&t(&h.basis(*c))).mul(&ti(&h.mul_basis(*b, *d))),
                        GeneratorKind::SigmaInv => {
                            t(&h.mul_basis(*a, *c)).mul(&ti(&h.basis(*b))).mul(&ti(&h.basis(*d)))
                        }
                        GeneratorKind::Q => {
                            t(&h.basis(*a)).mul(&t(&h.basis(*c))).mul(&t(&h.antipode(&h.mul_basis(*b, *d))))
                        }
                        _ => ti(&h.antipode(&h.mul_basis(*a, *c))).mul(&ti(&h.basis(*b))).mul(&ti(&h.basis(*d))),
                    };
                    value = value.add(&term.scale(&(c1 * c2)));
                }
            }
        }
    }
    Ok(GeneratorElement { kind, x, y, value })
}

/// `p_x` as a polynomial.
pub fn p_poly(fh: &FreeHopf, x: usize) -> Result<LaurentPoly> {
    let g = make_generator(fh, GeneratorKind::P, x, None)?;
    Ok(g.value.as_laurent().expect("p is polynomial"))
}

/// `q_{x,y}` as a polynomial.
pub fn q_poly(fh: &FreeHopf, x: usize, y: usize) -> Result<LaurentPoly> {
    let g = make_generator(fh, GeneratorKind::Q, x, Some(y))?;
    Ok(g.value.as_laurent().expect("q is polynomial"))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoinvarianceFailure {
    pub generator: String,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoinvarianceReport {
    pub checked: usize,
    pub failures: Vec<CoinvarianceFailure>,
}

impl CoinvarianceReport {
    pub fn all_pass(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks `δ_S(u) = u ⊗ 1` for the chosen generator kinds over all basis
/// arguments.
pub fn verify_generator_coinvariance(fh: &FreeHopf, kinds: &[GeneratorKind]) -> Result<CoinvarianceReport> {
    let n = fh.h.dim();
    let mut report = CoinvarianceReport { checked: 0, failures: Vec::new() };
    for &kind in kinds {
        for x in 0..n {
            let ys: Vec<Option<usize>> = if kind.binary() { (0..n).map(Some).collect() } else { alloc::vec![None] };
            for y in ys {
                let g = make_generator(fh, kind, x, y)?;
                report.checked += 1;
                let verdict = match g.value.as_laurent().filter(|p| fh.ring.check(p).is_ok()) {
                    Some(p) => fh.coaction(&p).map(|v| v == CoactionValue::pure(&p, &fh.q.quotient.unit)),
                    None => fh.is_coinvariant(&g.value),
                };
                match verdict {
                    Ok(true) => {}
                    Ok(false) => report.failures.push(CoinvarianceFailure {
                        generator: g.label(&fh.h),
                        reason: "coaction is not u ⊗ 1".into(),
                    }),
                    Err(e) => {
                        report.failures.push(CoinvarianceFailure { generator: g.label(&fh.h), reason: format!("{e}") })
                    }
                }
            }
        }
    }
    Ok(report)
}

/// Which closed formula a localization witness instantiates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WitnessCase {
    /// `x` (and `y`) group-like: `p′_x p_x = 1`, `q′_{x,y} q_{x,y} = 1`.
    GroupLike,
    /// `Δx = g⊗x + x⊗h`, `y` group-like: `p′_x p_g p_h = −p_x`,
    /// `q′_{x,y} q_{g,y} q_{h,y} = −q_{x,y}`.
    SkewPrimitive { g: usize, h: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalizationWitness {
    pub case: WitnessCase,
    pub x: usize,
    pub y: Option<usize>,
    pub identity: String,
    pub lhs: FracElem,
    pub rhs: FracElem,
    pub holds: bool,
}

fn grouplike_basis(fh: &FreeHopf, x: usize) -> bool {
    fh.ring.invertible[x]
}

/// `(g, h)` with `Δ(e_x) = g⊗e_x + e_x⊗h` for group-like basis vectors `g`, `h`.
pub fn skew_primitive_type(h: &HopfAlgebraData, invertible: &[bool], x: usize) -> Option<(usize, usize)> {
    let d = h.comul_basis(x);
    let gl: Vec<usize> = (0..h.dim()).filter(|&i| invertible[i]).collect();
    for &g in &gl {
        for &k in &gl {
            let expected = h.tensor(&h.basis(g), &h.basis(x));
            let mut t = expected;
            for (key, c) in h.tensor(&h.basis(x), &h.basis(k)) {
                let e = t.entry(key).or_insert_with(|| crate::scalars::CycScalar::zero(h.order));
                *e += &c;
                if e.is_zero() {
                    t.remove(&key);
                }
            }
            if t == d {
                return Some((g, k));
            }
        }
    }
    None
}

/// Builds and checks the localization identity for `x` (and `y`).
pub fn localization_witness(fh: &FreeHopf, x: usize, y: Option<usize>) -> Result<LocalizationWitness> {
    let h = &fh.h;
    let labels = &h.labels;
    if let Some(y) = y {
        if !grouplike_basis(fh, y) {
            return Err(Error::HypothesisNotMet(format!("{} is not a group-like basis vector", labels[y])));
        }
    }
    let one = FracElem::from_poly(LaurentPoly::one(fh.nvars(), h.order));
    let gen = |kind, a, b| make_generator(fh, kind, a, b).map(|g| g.value);
    let (case, identity, lhs, rhs) = if grouplike_basis(fh, x) {
        match y {
            None => (
                WitnessCase::GroupLike,
                format!("p'_{0} * p_{0} = 1", labels[x]),
                gen(GeneratorKind::PPrime, x, None)?.mul(&gen(GeneratorKind::P, x, None)?),
                one,
            ),
            Some(y) => (
                WitnessCase::GroupLike,
                format!("q'_{{{0},{1}}} * q_{{{0},{1}}} = 1", labels[x], labels[y]),
                gen(GeneratorKind::QPrime, x, Some(y))?.mul(&gen(GeneratorKind::Q, x, Some(y))?),
                one,
            ),
        }
    } else if let Some((g, k)) = skew_primitive_type(h, &fh.ring.invertible, x) {
        let case = WitnessCase::SkewPrimitive { g, h: k };
        match y {
            None => (
                case,
                format!("p'_{0} * p_{1} * p_{2} = -p_{0}", labels[x], labels[g], labels[k]),
                gen(GeneratorKind::PPrime, x, None)?.mul(&gen(GeneratorKind::P, g, None)?).mul(&gen(
                    GeneratorKind::P,
                    k,
                    None,
                )?),
                gen(GeneratorKind::P, x, None)?.neg(),
            ),
            Some(y) => (
                case,
                format!(
                    "q'_{{{0},{3}}} * q_{{{1},{3}}} * q_{{{2},{3}}} = -q_{{{0},{3}}}",
                    labels[x], labels[g], labels[k], labels[y]
                ),
                gen(GeneratorKind::QPrime, x, Some(y))?.mul(&gen(GeneratorKind::Q, g, Some(y))?).mul(&gen(
                    GeneratorKind::Q,
                    k,
                    Some(y),
                )?),
                gen(GeneratorKind::Q, x, Some(y))?.neg(),
            ),
        }
    } else {
        return Err(Error::HypothesisNotMet(format!(
            "{} is neither group-like nor skew-primitive between group-like basis vectors",
            labels[x]
        )));
    };
    let holds = lhs == rhs;
    Ok(LocalizationWitness { case, x, y, identity, lhs, rhs, holds })
}

/// All witnesses the closed formulas cover: every group-like `x` and every
/// skew-primitive basis `x`, alone and paired with each group-like `y`.
pub fn all_localization_witnesses(fh: &FreeHopf) -> Result<Vec<LocalizationWitness>> {
    let n = fh.h.dim();
    let gl: Vec<usize> = (0..n).filter(|&i| grouplike_basis(fh, i)).collect();
    let mut out = Vec::new();
    for x in 0..n {
        if !grouplike_basis(fh, x) && skew_primitive_type(&fh.h, &fh.ring.invertible, x).is_none() {
            continue;
        }
        out.push(localization_witness(fh, x, None)?);
        for &y in &gl {
            out.push(localization_witness(fh, x, Some(y))?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{cyclic, symmetric};
    use crate::hopf::{group_algebra, sweedler, taft};

    fn var(fh: &FreeHopf, label: &str) -> LaurentPoly {
        LaurentPoly::var(fh.nvars(), fh.h.order, fh.h.index_of(label).unwrap())
    }

    #[test]
    fn group_algebra_p_is_square() {
        let fh = FreeHopf::new(&group_algebra(&cyclic(2))).unwrap();
        let s = fh.h.index_of("a").unwrap();
        assert_eq!(p_poly(&fh, s).unwrap(), var(&fh, "a").pow(2));
    }

    #[test]
    fn sigma_of_unit_is_t1() {
        for h in [sweedler(), taft(3), group_algebra(&symmetric(3))] {
            let fh = FreeHopf::new(&h).unwrap();
            let u = fh.h.index_of("1").or_else(|| fh.h.index_of("e")).unwrap();
            let s = make_generator(&fh, GeneratorKind::Sigma, u, Some(u)).unwrap();
            assert_eq!(s.value, FracElem::from_poly(LaurentPoly::var(fh.nvars(), fh.h.order, u)), "{}", h.name);
        }
    }

    #[test]
    fn sweedler_q_gg() {
        let fh = FreeHopf::new(&sweedler()).unwrap();
        let g = fh.h.index_of("g").unwrap();
        let expected = &var(&fh, "g").pow(2) * &var(&fh, "1");
        assert_eq!(q_poly(&fh, g, g).unwrap(), expected);
    }

    #[test]
    fn arity_is_checked() {
        let fh = FreeHopf::new(&sweedler()).unwrap();
        assert!(make_generator(&fh, GeneratorKind::Q, 0, None).is_err());
        assert!(make_generator(&fh, GeneratorKind::P, 0, Some(1)).is_err());
    }

    #[test]
    fn sweedler_generators_are_coinvariant() {
        let fh = FreeHopf::new(&sweedler()).unwrap();
        let r = verify_generator_coinvariance(&fh, &GeneratorKind::ALL).unwrap();
        assert_eq!(r.checked, 2 * (4 + 16) + 2 * 16);
        assert!(r.all_pass(), "{:?}", r.failures);
    }

    #[test]
    fn corrupted_projection_is_detected() {
        let mut fh = FreeHopf::new(&sweedler()).unwrap();
        let v = fh.h.index_of("v").unwrap();
        fh.q.projection[v] = fh.q.quotient.unit.clone();
        let r = verify_generator_coinvariance(&fh, &[GeneratorKind::P, GeneratorKind::Q]).unwrap();
        assert!(!r.all_pass());
    }

    #[test]
    fn sweedler_skew_witness() {
        let fh = FreeHopf::new(&sweedler()).unwrap();
        let v = fh.h.index_of("v").unwrap();
        let w = localization_witness(&fh, v, None).unwrap();
        assert_eq!(w.case, WitnessCase::SkewPrimitive { g: 0, h: 1 });
        assert!(w.holds, "{}: {} vs {}", w.identity, w.lhs, w.rhs);
        assert!(matches!(localization_witness(&fh, v, Some(v)), Err(Error::HypothesisNotMet(_))));
    }

    #[test]
    fn witnesses_hold_for_taft3() {
        let fh = FreeHopf::new(&taft(3)).unwrap();
        let ws = all_localization_witnesses(&fh).unwrap();
        assert_eq!(ws.len(), 6 * 4);
        assert!(ws.iter().all(|w| w.holds));
    }

    #[test]
    fn grouplike_witness_in_z3() {
        let fh = FreeHopf::new(&group_algebra(&cyclic(3))).unwrap();
        for x in 0..3 {
            assert!(localization_witness(&fh, x, None).unwrap().holds);
        }
    }
}
