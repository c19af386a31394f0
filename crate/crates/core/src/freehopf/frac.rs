use alloc::vec::Vec;
use core::fmt;

use super::{LaurentPoly, Monomial};
use crate::error::{Error, Result};
use crate::scalars::CycScalar;

/// Variable count, coefficient field and the variables allowed to carry
/// negative exponents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentRing {
    pub nvars: usize,
    pub order: u32,
    pub invertible: Vec<bool>,
}

impl LaurentRing {
    pub fn new(nvars: usize, order: u32, invertible: Vec<bool>) -> Self {
        assert_eq!(invertible.len(), nvars, "one mask entry per variable");
        LaurentRing { nvars, order, invertible }
    }

    pub fn polynomial(nvars: usize, order: u32) -> Self {
        Self::new(nvars, order, alloc::vec![false; nvars])
    }

    pub fn zero(&self) -> LaurentPoly {
        LaurentPoly::zero(self.nvars, self.order)
    }

    pub fn one(&self) -> LaurentPoly {
        LaurentPoly::one(self.nvars, self.order)
    }

    pub fn var(&self, i: usize) -> LaurentPoly {
        LaurentPoly::var(self.nvars, self.order, i)
    }

    /// `t_i^{-1}` for an invertible variable.
    pub fn var_inv(&self, i: usize) -> Result<LaurentPoly> {
        if !self.invertible[i] {
            return Err(Error::NegativeExponent(i));
        }
        let mut e = alloc::vec![0i64; self.nvars];
        e[i] = -1;
        Ok(LaurentPoly::monomial(self.nvars, self.order, Monomial(e), CycScalar::one(self.order)))
    }

    /// Rejects negative exponents on non-invertible variables.
    pub fn check(&self, p: &LaurentPoly) -> Result<()> {
        for (m, _) in p.terms() {
            for (i, &e) in m.0.iter().enumerate() {
                if e < 0 && !self.invertible[i] {
                    return Err(Error::NegativeExponent(i));
                }
            }
        }
        Ok(())
    }

    /// Whether `p` is a unit of the ring: a single term in invertible variables.
    pub fn is_unit(&self, p: &LaurentPoly) -> bool {
        p.as_monomial().is_some_and(|(m, _)| m.0.iter().enumerate().all(|(i, &e)| e == 0 || self.invertible[i]))
    }

    /// Inverse of a unit.
    pub fn unit_inverse(&self, p: &LaurentPoly) -> Option<LaurentPoly> {
        if !self.is_unit(p) {
            return None;
        }
        let (m, c) = p.as_monomial()?;
        Some(LaurentPoly::monomial(self.nvars, self.order, m.inv(), c.checked_inv().ok()?))
    }
}

/// A fraction `num / den` of Laurent polynomials.
///
/// Fractions are kept with the monomial content of the denominator moved
/// into the numerator, the leading denominator coefficient equal to one, and
/// the denominator dropped whenever it divides the numerator.
/// Equality is decided by cross-multiplication.
#[derive(Clone, Debug)]
pub struct FracElem {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl FracElem {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DegenerateScalar);
        }
        let mut f = FracElem { num, den };
        f.normalize();
        Ok(f)
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        let den = LaurentPoly::one(p.nvars(), p.order());
        FracElem { num: p, den }
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The Laurent polynomial this fraction equals, when the denominator is
    /// a single term.
    pub fn as_laurent(&self) -> Option<LaurentPoly> {
        let (m, c) = self.den.as_monomial()?;
        Some(self.num.mul_monomial(&m.inv()).scale(&c.checked_inv().ok()?))
    }

    fn normalize(&mut self) {
        let content = self.den.content_monomial().inv();
        self.den = self.den.mul_monomial(&content);
        self.num = self.num.mul_monomial(&content);
        if let Some((_, lc)) = self.den.leading() {
            if !lc.is_one() {
                let inv = lc.checked_inv().expect("nonzero leading coefficient");
                self.den = self.den.scale(&inv);
                self.num = self.num.scale(&inv);
            }
        }
        if self.num.is_zero() {
            self.den = LaurentPoly::one(self.den.nvars(), self.den.order());
        } else if let Some(q) = self.num.div_exact(&self.den) {
            self.num = q;
            self.den = LaurentPoly::one(self.den.nvars(), self.den.order());
        }
    }

    pub fn add(&self, other: &FracElem) -> FracElem {
        if self.den == other.den {
            let mut f = FracElem { num: &self.num + &other.num, den: self.den.clone() };
            f.normalize();
            return f;
        }
        let num = &(&self.num * &other.den) + &(&other.num * &self.den);
        FracElem::new(num, &self.den * &other.den).expect("product of nonzero denominators")
    }

    pub fn neg(&self) -> FracElem {
        FracElem { num: -&self.num, den: self.den.clone() }
    }

    pub fn sub(&self, other: &FracElem) -> FracElem {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &FracElem) -> FracElem {
        FracElem::new(&self.num * &other.num, &self.den * &other.den).expect("product of nonzero denominators")
    }

    pub fn scale(&self, c: &CycScalar) -> FracElem {
        FracElem { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn inv(&self) -> Result<FracElem> {
        FracElem::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, other: &FracElem) -> Result<FracElem> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, k: u32) -> FracElem {
        FracElem { num: self.num.pow(k), den: self.den.pow(k) }
    }
}

impl PartialEq for FracElem {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for FracElem {}

impl fmt::Display for FracElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.as_constant().is_some_and(|c| c.is_one()) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

/// Evaluates `p` at fractional images of its variables (an algebra map).
pub fn substitute_frac(p: &LaurentPoly, images: &[FracElem]) -> Result<FracElem> {
    let target = images.first().map_or(p.nvars(), |f| f.num.nvars());
    let mut out = FracElem::from_poly(LaurentPoly::zero(target, p.order()));
    for (m, c) in p.terms() {
        let mut acc = FracElem::from_poly(LaurentPoly::constant(target, c.clone()));
        for (i, &e) in m.0.iter().enumerate() {
            if e > 0 {
                acc = acc.mul(&images[i].pow(e as u32));
            } else if e < 0 {
                acc = acc.mul(&images[i].inv()?.pow((-e) as u32));
            }
        }
        out = out.add(&acc);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cross_multiplied_equality() {
        let r = LaurentRing::new(2, 1, alloc::vec![true, false]);
        let (x, y) = (r.var(0), r.var(1));
        let a = FracElem::new(&x * &y, &x * &x).unwrap();
        let b = FracElem::new(y.clone(), x.clone()).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.num(), &(&y * &r.var_inv(0).unwrap()));
        assert!(r.var_inv(1).is_err());
        let c = FracElem::new(x.clone(), &x + &y).unwrap();
        let d = FracElem::new(y.clone(), &x + &y).unwrap();
        assert_eq!(c.add(&d), FracElem::from_poly(r.one()));
    }

    #[test]
    fn mask_is_enforced() {
        let r = LaurentRing::new(2, 1, alloc::vec![true, false]);
        let bad = LaurentPoly::monomial(2, 1, Monomial(alloc::vec![0, -1]), CycScalar::one(1));
        assert_eq!(r.check(&bad), Err(Error::NegativeExponent(1)));
        assert!(r.check(&r.var_inv(0).unwrap()).is_ok());
        assert!(FracElem::new(r.one(), r.zero()).is_err());
    }
}
