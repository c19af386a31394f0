use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalars::CycScalar;

/// Exponent vector in `ℤ^n`, ordered graded-lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<i64>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_polynomial(&self) -> bool {
        self.0.iter().all(|&e| e >= 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn div(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn inv(&self) -> Monomial {
        Monomial(self.0.iter().map(|a| -a).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse Laurent polynomial in `t_0, …, t_{n−1}` over `ℚ(ζ_N)`.
///
/// Equality compares variable count and terms; coefficients compare across
/// compatible cyclotomic orders.
#[derive(Clone, Debug)]
pub struct LaurentPoly {
    nvars: usize,
    order: u32,
    terms: BTreeMap<Monomial, CycScalar>,
}

impl PartialEq for LaurentPoly {
    fn eq(&self, other: &Self) -> bool {
        self.nvars == other.nvars && self.terms == other.terms
    }
}

impl Eq for LaurentPoly {}

impl LaurentPoly {
    pub fn zero(nvars: usize, order: u32) -> Self {
        LaurentPoly { nvars, order, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: CycScalar) -> Self {
        let order = c.order();
        Self::monomial(nvars, order, Monomial::one(nvars), c)
    }

    pub fn one(nvars: usize, order: u32) -> Self {
        Self::constant(nvars, CycScalar::one(order))
    }

    pub fn var(nvars: usize, order: u32, i: usize) -> Self {
        Self::monomial(nvars, order, Monomial::var(nvars, i), CycScalar::one(order))
    }

    pub fn monomial(nvars: usize, order: u32, m: Monomial, c: CycScalar) -> Self {
        assert_eq!(m.0.len(), nvars, "exponent length");
        let mut p = Self::zero(nvars, order);
        p.add_term(m, &c);
        p
    }

    /// `Σ_i coeffs[i] t_i`.
    pub fn linear(order: u32, coeffs: &[CycScalar]) -> Self {
        let n = coeffs.len();
        let mut p = Self::zero(n, order);
        for (i, c) in coeffs.iter().enumerate() {
            p.add_term(Monomial::var(n, i), c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &CycScalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> CycScalar {
        self.terms.get(m).cloned().unwrap_or_else(|| CycScalar::zero(self.order))
    }

    pub fn leading(&self) -> Option<(&Monomial, &CycScalar)> {
        self.terms.iter().next_back()
    }

    /// `Some(c)` if the polynomial is the constant `c`.
    pub fn as_constant(&self) -> Option<CycScalar> {
        match self.terms.len() {
            0 => Some(CycScalar::zero(self.order)),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.0.iter().all(|&e| e == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    /// `Some((m, c))` if the polynomial is a single term.
    pub fn as_monomial(&self) -> Option<(&Monomial, &CycScalar)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(Monomial::is_polynomial)
    }

    /// Index of the first variable with a negative exponent, if any.
    pub fn first_negative_var(&self) -> Option<usize> {
        self.terms.keys().filter_map(|m| m.0.iter().position(|&e| e < 0)).min()
    }

    pub fn total_degree(&self) -> Option<i64> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn add_term(&mut self, m: Monomial, c: &CycScalar) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(m.0.len(), self.nvars);
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                let c = if c.order() == self.order {
                    c.clone()
                } else {
                    c.coerce(self.order).unwrap_or_else(|_| c.clone())
                };
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add_assign(&mut self, other: &LaurentPoly) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c);
        }
    }

    pub fn sub_assign(&mut self, other: &LaurentPoly) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), &-c);
        }
    }

    pub fn scale(&self, c: &CycScalar) -> LaurentPoly {
        let mut out = Self::zero(self.nvars, self.order);
        if c.is_zero() {
            return out;
        }
        for (m, a) in &self.terms {
            out.add_term(m.clone(), &(a * c));
        }
        out
    }

    pub fn mul_monomial(&self, m: &Monomial) -> LaurentPoly {
        LaurentPoly {
            nvars: self.nvars,
            order: self.order,
            terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect(),
        }
    }

    pub fn mul_poly(&self, other: &LaurentPoly) -> LaurentPoly {
        assert_eq!(self.nvars, other.nvars, "variable counts");
        let mut out = Self::zero(self.nvars, self.order);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), &(ca * cb));
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> LaurentPoly {
        let mut acc = Self::one(self.nvars, self.order);
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_poly(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_poly(&base);
            }
        }
        acc
    }

    /// Componentwise minimum exponent over all terms.
    pub fn content_monomial(&self) -> Monomial {
        let mut it = self.terms.keys();
        let Some(first) = it.next() else {
            return Monomial::one(self.nvars);
        };
        let mut m = first.0.clone();
        for k in it {
            for (a, b) in m.iter_mut().zip(&k.0) {
                *a = (*a).min(*b);
            }
        }
        Monomial(m)
    }

    /// Exact quotient `self / d` in the Laurent ring, or `None` when `d` does
    /// not divide `self`.
    pub fn div_exact(&self, d: &LaurentPoly) -> Option<LaurentPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(self.clone());
        }
        let cn = self.content_monomial();
        let cd = d.content_monomial();
        let mut rem = self.mul_monomial(&cn.inv());
        let den = d.mul_monomial(&cd.inv());
        let (lm, lc) = den.leading().map(|(m, c)| (m.clone(), c.clone()))?;
        let lc_inv = lc.checked_inv().ok()?;
        let mut quot = Self::zero(self.nvars, self.order);
        while let Some((m, c)) = rem.leading().map(|(m, c)| (m.clone(), c.clone())) {
            let qm = m.div(&lm);
            if !qm.is_polynomial() {
                return None;
            }
            let qc = &c * &lc_inv;
            let mut step = Self::zero(self.nvars, self.order);
            for (dm, dc) in &den.terms {
                step.add_term(dm.mul(&qm), &(dc * &qc));
            }
            rem.sub_assign(&step);
            quot.add_term(qm, &qc);
        }
        Some(quot.mul_monomial(&cn.div(&cd)))
    }

    /// Renames variable `i` to `map[i]` in a ring with `nvars` variables.
    pub fn map_vars(&self, map: &[usize], nvars: usize) -> LaurentPoly {
        let mut out = Self::zero(nvars, self.order);
        for (m, c) in &self.terms {
            let mut e = vec![0i64; nvars];
            for (i, &x) in m.0.iter().enumerate() {
                e[map[i]] += x;
            }
            out.add_term(Monomial(e), c);
        }
        out
    }

    /// Algebra-map substitution `t_i ↦ images[i]`. A negative exponent needs a
    /// single-term image; otherwise `NegativeExponent(i)` is returned.
    pub fn substitute(&self, images: &[LaurentPoly]) -> Result<LaurentPoly> {
        assert_eq!(images.len(), self.nvars, "one image per variable");
        let target = images.first().map_or(self.nvars, |p| p.nvars);
        let mut cache: BTreeMap<(usize, i64), LaurentPoly> = BTreeMap::new();
        let mut out = Self::zero(target, self.order);
        for (m, c) in &self.terms {
            let mut acc = Self::constant(target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !cache.contains_key(&(i, e)) {
                    let p = if e > 0 {
                        images[i].pow(e as u32)
                    } else {
                        let (im, ic) = images[i].as_monomial().ok_or(Error::NegativeExponent(i))?;
                        let inv = LaurentPoly::monomial(target, self.order, im.inv(), ic.checked_inv()?);
                        inv.pow((-e) as u32)
                    };
                    cache.insert((i, e), p);
                }
                acc = acc.mul_poly(&cache[&(i, e)]);
            }
            out.add_assign(&acc);
        }
        Ok(out)
    }

    /// Places the variables at positions `offset..offset+nvars` of a larger ring.
    pub fn embed(&self, nvars: usize, offset: usize) -> LaurentPoly {
        let map: Vec<usize> = (0..self.nvars).map(|i| i + offset).collect();
        self.map_vars(&map, nvars)
    }

    /// Text form with the given variable names, monomials in descending order.
    pub fn to_string_with(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let mono = format_monomial(m, names);
            let coeff = c.to_string();
            let simple = c.as_rational().is_some();
            let (neg, body) =
                if simple && coeff.starts_with('-') { (true, coeff[1..].to_string()) } else { (false, coeff) };
            if k > 0 {
                out.push_str(if neg { " - " } else { " + " });
            } else if neg {
                out.push('-');
            }
            let body = if simple { body } else { format!("({body})") };
            match (mono.is_empty(), body.as_str()) {
                (true, _) => out.push_str(&body),
                (false, "1") => out.push_str(&mono),
                (false, _) => {
                    out.push_str(&body);
                    out.push('*');
                    out.push_str(&mono);
                }
            }
        }
        out
    }
}

fn format_monomial(m: &Monomial, names: &[String]) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.0.iter().enumerate() {
        if e == 0 {
            continue;
        }
        let name = names.get(i).cloned().unwrap_or_else(|| format!("t{i}"));
        if e == 1 {
            parts.push(name);
        } else {
            parts.push(format!("{name}^{e}"));
        }
    }
    parts.join("*")
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.nvars).map(|i| format!("t{i}")).collect();
        f.write_str(&self.to_string_with(&names))
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out.add_assign(rhs);
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out.sub_assign(rhs);
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.mul_poly(rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            nvars: self.nvars,
            order: self.order,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

/// Determinant of a square matrix of Laurent polynomials by fraction-free
/// Bareiss elimination with exact division.
pub fn bareiss_det(mut m: Vec<Vec<LaurentPoly>>, nvars: usize, order: u32) -> LaurentPoly {
    let n = m.len();
    if n == 0 {
        return LaurentPoly::one(nvars, order);
    }
    let mut sign = false;
    let mut prev = LaurentPoly::one(nvars, order);
    for k in 0..n {
        // prefer the sparsest nonzero pivot in column k
        let pivot = (k..n).filter(|&i| !m[i][k].is_zero()).min_by_key(|&i| m[i][k].len());
        let Some(p) = pivot else {
            return LaurentPoly::zero(nvars, order);
        };
        if p != k {
            m.swap(p, k);
            sign = !sign;
        }
        if k + 1 == n {
            break;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let a = m[i][j].mul_poly(&m[k][k]);
                let b = m[i][k].mul_poly(&m[k][j]);
                let num = &a - &b;
                m[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
            m[i][k] = LaurentPoly::zero(nvars, order);
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign {
        -&d
    } else {
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn t(n: usize, i: usize) -> LaurentPoly {
        LaurentPoly::var(n, 1, i)
    }

    #[test]
    fn graded_lex_order() {
        let a = Monomial(vec![2, 0]);
        let b = Monomial(vec![1, 1]);
        let c = Monomial(vec![0, 3]);
        assert!(a > b);
        assert!(c > a);
    }

    #[test]
    fn division_roundtrip() {
        let x = t(2, 0);
        let y = t(2, 1);
        let f = &(&x * &x) - &(&y * &y);
        let g = &x + &y;
        assert_eq!(f.div_exact(&g).unwrap(), &x - &y);
        assert!(f.div_exact(&(&(&x + &y) + &x)).is_none());
    }

    #[test]
    fn laurent_division() {
        let x = t(2, 0);
        let y = t(2, 1);
        let inv = LaurentPoly::monomial(2, 1, Monomial(vec![-1, 0]), CycScalar::one(1));
        let f = (&(&x * &y) + &y).mul_monomial(&Monomial(vec![-2, 0]));
        assert_eq!(f.div_exact(&(&x + &LaurentPoly::one(2, 1))).unwrap(), &y * &(&inv * &inv));
    }

    #[test]
    fn circulant_determinant() {
        let v: Vec<LaurentPoly> = (0..3).map(|i| t(3, i)).collect();
        let m = (0..3).map(|i| (0..3).map(|j| v[(i + 3 - j) % 3].clone()).collect()).collect();
        let det = bareiss_det(m, 3, 1);
        let expected = {
            let mut e = &(&v[0].pow(3) + &v[1].pow(3)) + &v[2].pow(3);
            e.sub_assign(&(&(&v[0] * &v[1]) * &v[2]).scale(&CycScalar::from_int(1, 3)));
            e
        };
        assert_eq!(det, expected);
    }

    #[test]
    fn printing() {
        let x = t(2, 0);
        let y = t(2, 1);
        let f = &(&x * &x).scale(&CycScalar::from_int(1, 3)) - &y;
        assert_eq!(f.to_string(), "3*t0^2 - t1");
        let names = ["a".to_string(), "b".to_string()];
        assert_eq!((&y - &x).to_string_with(&names), "-a + b");
    }

    proptest! {
        #[test]
        fn product_then_divide(a in proptest::collection::vec((0i64..3, 0i64..3, -3i64..4), 1..4),
                               b in proptest::collection::vec((0i64..3, 0i64..3, -3i64..4), 1..4)) {
            let build = |v: &[(i64, i64, i64)]| {
                let mut p = LaurentPoly::zero(2, 1);
                for &(i, j, c) in v {
                    p.add_term(Monomial(vec![i, j]), &CycScalar::from_int(1, c));
                }
                p
            };
            let (pa, pb) = (build(&a), build(&b));
            if !pb.is_zero() {
                let prod = &pa * &pb;
                prop_assert_eq!(prod.div_exact(&pb).unwrap(), pa);
            }
        }
    }
}
