//! Exact scalars: rationals and elements of cyclotomic fields `ℚ(ζ_N)`.
//!
//! A [`CycScalar`] stores its coordinates in the power basis
//! `1, z, …, z^{φ(N)−1}` of `ℚ[z]/(Φ_N(z))`. Order `1` encodes plain
//! rationals. Arithmetic between an order-`M` and an order-`N` scalar is
//! allowed when one order divides the other; the smaller field is embedded by
//! `z ↦ z^{N/M}`.

mod cyclotomic;
mod parse;

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub use cyclotomic::{cyclotomic_polynomial, totient};
pub use parse::parse_scalar;

use crate::error::{Error, Result};

/// Arbitrary-precision rational number, always kept in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

/// Element of the cyclotomic field `ℚ(ζ_N)`.
#[derive(Clone, Debug)]
pub struct CycScalar {
    order: u32,
    coeffs: Vec<Rational>,
}

/// Arithmetic operation selector for [`scalar_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScalarOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Checked field arithmetic: orders must agree exactly and division needs a
/// nonzero divisor.
pub fn scalar_arith(a: &CycScalar, b: &CycScalar, op: ScalarOp) -> Result<CycScalar> {
    if a.order != b.order {
        return Err(Error::OrderMismatch { left: a.order, right: b.order });
    }
    Ok(match op {
        ScalarOp::Add => a + b,
        ScalarOp::Sub => a - b,
        ScalarOp::Mul => a * b,
        ScalarOp::Div => a.checked_div(b)?,
    })
}

impl CycScalar {
    pub fn zero(order: u32) -> Self {
        CycScalar { order, coeffs: vec![Rational::zero(); totient(order)] }
    }

    pub fn one(order: u32) -> Self {
        Self::from_rational(order, Rational::one())
    }

    pub fn from_int(order: u32, value: i64) -> Self {
        Self::from_rational(order, Rational::from_integer(BigInt::from(value)))
    }

    pub fn from_rational(order: u32, value: Rational) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = value;
        s
    }

    /// Plain rational scalar (order 1).
    pub fn rational(value: Rational) -> Self {
        Self::from_rational(1, value)
    }

    /// Rational scalar `num/den` (order 1).
    pub fn ratio(num: i64, den: i64) -> Self {
        Self::rational(Rational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// Builds `Σ c_k z^k` and reduces it modulo `Φ_order`.
    pub fn from_poly(order: u32, coeffs: Vec<Rational>) -> Self {
        let mut s = CycScalar { order, coeffs };
        s.reduce();
        s
    }

    /// The primitive root `ζ_N^k`.
    pub fn zeta_pow(order: u32, k: i64) -> Self {
        let e = k.rem_euclid(order as i64) as usize;
        let mut c = vec![Rational::zero(); e + 1];
        c[e] = Rational::one();
        Self::from_poly(order, c)
    }

    pub fn zeta(order: u32) -> Self {
        Self::zeta_pow(order, 1)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Power-basis coordinates, length `φ(N)`.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// `Some(r)` when the scalar lies in `ℚ`.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    /// Embeds into `ℚ(ζ_target)`; requires `order | target`.
    pub fn coerce(&self, target: u32) -> Result<CycScalar> {
        if self.order == target {
            return Ok(self.clone());
        }
        if let Some(r) = self.as_rational() {
            return Ok(Self::from_rational(target, r.clone()));
        }
        if target % self.order != 0 {
            return Err(Error::OrderMismatch { left: self.order, right: target });
        }
        let step = (target / self.order) as usize;
        let mut c = vec![Rational::zero(); step * (self.coeffs.len() - 1) + 1];
        for (k, x) in self.coeffs.iter().enumerate() {
            c[k * step] = x.clone();
        }
        Ok(Self::from_poly(target, c))
    }

    fn common_order(&self, other: &CycScalar) -> u32 {
        if self.order == other.order || other.as_rational().is_some() {
            self.order
        } else if self.as_rational().is_some() {
            other.order
        } else if self.order % other.order == 0 {
            self.order
        } else if other.order % self.order == 0 {
            other.order
        } else {
            panic!("incompatible cyclotomic orders {} and {}", self.order, other.order)
        }
    }

    fn aligned<'a>(&'a self, order: u32) -> alloc::borrow::Cow<'a, CycScalar> {
        if self.order == order {
            alloc::borrow::Cow::Borrowed(self)
        } else {
            alloc::borrow::Cow::Owned(self.coerce(order).expect("compatible order"))
        }
    }

    fn reduce(&mut self) {
        let phi = totient(self.order);
        if self.coeffs.len() <= phi {
            self.coeffs.resize(phi, Rational::zero());
            return;
        }
        let modulus = cyclotomic::cyclotomic_small(self.order);
        for k in (phi..self.coeffs.len()).rev() {
            if self.coeffs[k].is_zero() {
                continue;
            }
            let c = core::mem::replace(&mut self.coeffs[k], Rational::zero());
            for (i, m) in modulus.iter().enumerate().take(phi) {
                if *m != 0 {
                    self.coeffs[k - phi + i] -= &c * Rational::from_integer(BigInt::from(*m));
                }
            }
        }
        self.coeffs.truncate(phi);
    }

    pub fn checked_inv(&self) -> Result<CycScalar> {
        if self.is_zero() {
            return Err(Error::DegenerateScalar);
        }
        if let Some(r) = self.as_rational() {
            return Ok(Self::from_rational(self.order, r.recip()));
        }
        let modulus: Vec<Rational> =
            cyclotomic_polynomial(self.order).into_iter().map(Rational::from_integer).collect();
        let inv = cyclotomic::poly_inverse_mod(&self.coeffs, &modulus).ok_or(Error::DegenerateScalar)?;
        Ok(Self::from_poly(self.order, inv))
    }

    pub fn checked_div(&self, other: &CycScalar) -> Result<CycScalar> {
        Ok(self * &other.checked_inv()?)
    }

    pub fn pow(&self, exp: i64) -> Result<CycScalar> {
        let mut base = if exp < 0 { self.checked_inv()? } else { self.clone() };
        let mut e = exp.unsigned_abs();
        let mut acc = Self::one(self.order);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        Ok(acc)
    }

    fn add_impl(&self, other: &CycScalar, negate: bool) -> CycScalar {
        let order = self.common_order(other);
        let a = self.aligned(order);
        let b = other.aligned(order);
        let coeffs = a.coeffs.iter().zip(b.coeffs.iter()).map(|(x, y)| if negate { x - y } else { x + y }).collect();
        CycScalar { order, coeffs }
    }

    fn mul_impl(&self, other: &CycScalar) -> CycScalar {
        if let Some(r) = other.as_rational() {
            return CycScalar { order: self.order, coeffs: self.coeffs.iter().map(|c| c * r).collect() };
        }
        if let Some(r) = self.as_rational() {
            return CycScalar { order: other.order, coeffs: other.coeffs.iter().map(|c| c * r).collect() };
        }
        let order = self.common_order(other);
        let a = self.aligned(order);
        let b = other.aligned(order);
        let mut out = vec![Rational::zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    out[i + j] += x * y;
                }
            }
        }
        Self::from_poly(order, out)
    }
}

impl PartialEq for CycScalar {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.coeffs == other.coeffs;
        }
        match (self.as_rational(), other.as_rational()) {
            (Some(a), Some(b)) => a == b,
            (None, None) => {
                let order = self.common_order(other);
                self.aligned(order).coeffs == other.aligned(order).coeffs
            }
            _ => false,
        }
    }
}

impl Eq for CycScalar {}

impl fmt::Display for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if neg {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            first = false;
            if k == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            if k == 1 {
                f.write_str("z")?;
            } else {
                write!(f, "z^{k}")?;
            }
        }
        Ok(())
    }
}

impl Neg for &CycScalar {
    type Output = CycScalar;
    fn neg(self) -> CycScalar {
        CycScalar { order: self.order, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for CycScalar {
    type Output = CycScalar;
    fn neg(self) -> CycScalar {
        -&self
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl $tr<&CycScalar> for &CycScalar {
            type Output = CycScalar;
            fn $method(self, rhs: &CycScalar) -> CycScalar {
                let f: fn(&CycScalar, &CycScalar) -> CycScalar = $body;
                f(self, rhs)
            }
        }
        impl $tr<CycScalar> for CycScalar {
            type Output = CycScalar;
            fn $method(self, rhs: CycScalar) -> CycScalar {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&CycScalar> for CycScalar {
            type Output = CycScalar;
            fn $method(self, rhs: &CycScalar) -> CycScalar {
                (&self).$method(rhs)
            }
        }
        impl $tr<CycScalar> for &CycScalar {
            type Output = CycScalar;
            fn $method(self, rhs: CycScalar) -> CycScalar {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| a.add_impl(b, false));
forward_binop!(Sub, sub, |a, b| a.add_impl(b, true));
forward_binop!(Mul, mul, |a, b| a.mul_impl(b));

impl AddAssign<&CycScalar> for CycScalar {
    fn add_assign(&mut self, rhs: &CycScalar) {
        if self.order == rhs.order {
            for (x, y) in self.coeffs.iter_mut().zip(rhs.coeffs.iter()) {
                *x += y;
            }
        } else {
            *self = &*self + rhs;
        }
    }
}

impl SubAssign<&CycScalar> for CycScalar {
    fn sub_assign(&mut self, rhs: &CycScalar) {
        if self.order == rhs.order {
            for (x, y) in self.coeffs.iter_mut().zip(rhs.coeffs.iter()) {
                *x -= y;
            }
        } else {
            *self = &*self - rhs;
        }
    }
}

impl MulAssign<&CycScalar> for CycScalar {
    fn mul_assign(&mut self, rhs: &CycScalar) {
        *self = &*self * rhs;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn i_squared_is_minus_one() {
        let i = CycScalar::zeta(4);
        assert_eq!(&i * &i, CycScalar::from_int(4, -1));
    }

    #[test]
    fn inverse_of_zeta3() {
        // z * (-1 - z) = -z - z^2 = 1 modulo z^2 + z + 1
        let inv = CycScalar::zeta(3).checked_inv().unwrap();
        let expected = CycScalar::from_poly(3, vec![q(-1, 1), q(-1, 1)]);
        assert_eq!(inv, expected);
    }

    #[test]
    fn rational_product() {
        let a = CycScalar::ratio(2, 3);
        let b = CycScalar::ratio(3, 2);
        assert!((a * b).is_one());
    }

    #[test]
    fn division_by_zero() {
        let z = CycScalar::zero(5);
        assert_eq!(CycScalar::one(5).checked_div(&z), Err(Error::DegenerateScalar));
        assert_eq!(
            scalar_arith(&CycScalar::one(3), &CycScalar::one(4), ScalarOp::Add),
            Err(Error::OrderMismatch { left: 3, right: 4 })
        );
    }

    #[test]
    fn primitivity_up_to_twelve() {
        for n in 1..=12u32 {
            let z = CycScalar::zeta(n);
            assert!(z.pow(n as i64).unwrap().is_one());
            for k in 1..n as i64 {
                assert!(!z.pow(k).unwrap().is_one(), "zeta_{n}^{k} = 1");
            }
        }
    }

    #[test]
    fn coerce_embeds_subfield() {
        // ζ_4 embedded in ℚ(ζ_8) is ζ_8^2
        let i = CycScalar::zeta(4).coerce(8).unwrap();
        assert_eq!(i, CycScalar::zeta_pow(8, 2));
        let mixed = CycScalar::zeta(4) * CycScalar::zeta(8);
        assert_eq!(mixed, CycScalar::zeta_pow(8, 3));
    }

    #[test]
    fn display_roundtrip() {
        let s = CycScalar::from_poly(5, vec![q(1, 1), q(0, 1), q(-2, 3)]);
        assert_eq!(s.to_string(), "1-2/3*z^2");
        assert_eq!(parse_scalar(&s.to_string(), 5).unwrap(), s);
        assert_eq!(CycScalar::zeta(3).to_string(), "z");
        assert_eq!((-CycScalar::zeta_pow(7, 3)).to_string(), "-z^3");
    }

    fn arb_scalar(order: u32) -> impl Strategy<Value = CycScalar> {
        let phi = totient(order);
        proptest::collection::vec((-20i64..20, 1i64..6), phi)
            .prop_map(move |v| CycScalar::from_poly(order, v.into_iter().map(|(n, d)| q(n, d)).collect()))
    }

    proptest! {
        #[test]
        fn inverse_is_two_sided(a in prop::sample::select(vec![1u32, 3, 4, 5, 7, 8, 9, 12])
                                    .prop_flat_map(arb_scalar)) {
            if !a.is_zero() {
                let inv = a.checked_inv().unwrap();
                prop_assert!((&a * &inv).is_one());
                prop_assert!((&inv * &a).is_one());
            }
        }

        #[test]
        fn canonical_equality(a in arb_scalar(12), b in arb_scalar(12)) {
            let lhs = &(&a + &b) * &b;
            let rhs = &(&a * &b) + &(&b * &b);
            prop_assert_eq!(lhs.coeffs(), rhs.coeffs());
        }
    }
}
