use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{CycScalar, Rational};
use crate::error::{Error, Result};

/// Parses the scalar literal syntax: a rational `"a/b"` or a polynomial in `z`
/// such as `"1-2/3*z^2"`, reduced into `ℚ(ζ_order)`.
pub fn parse_scalar(text: &str, order: u32) -> Result<CycScalar> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(Error::ParseScalar(format!("empty scalar literal {text:?}")));
    }
    let bytes = s.as_bytes();
    let mut coeffs: Vec<Rational> = vec![Rational::zero()];
    let mut pos = 0;
    while pos < bytes.len() {
        let mut sign = Rational::one();
        if bytes[pos] == b'+' || bytes[pos] == b'-' {
            if bytes[pos] == b'-' {
                sign = -sign;
            }
            pos += 1;
        } else if pos != 0 {
            return Err(bad(text));
        }
        let (coef, next) = parse_rational(&s, pos);
        pos = next;
        let mut exp = 0usize;
        let has_coef = coef.is_some();
        if has_coef && pos < bytes.len() && bytes[pos] == b'*' {
            pos += 1;
            if pos >= bytes.len() || bytes[pos] != b'z' {
                return Err(bad(text));
            }
        }
        if pos < bytes.len() && bytes[pos] == b'z' {
            pos += 1;
            exp = 1;
            if pos < bytes.len() && bytes[pos] == b'^' {
                pos += 1;
                let start = pos;
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                exp = s[start..pos].parse().map_err(|_| bad(text))?;
            }
        } else if !has_coef {
            return Err(bad(text));
        }
        if coeffs.len() <= exp {
            coeffs.resize(exp + 1, Rational::zero());
        }
        coeffs[exp] += sign * coef.unwrap_or_else(Rational::one);
    }
    Ok(CycScalar::from_poly(order, coeffs))
}

fn bad(text: &str) -> Error {
    Error::ParseScalar(format!("malformed scalar literal {text:?}"))
}

fn parse_rational(s: &str, start: usize) -> (Option<Rational>, usize) {
    let bytes = s.as_bytes();
    let mut pos = start;
    while pos < bytes.len() && bytes[pos].is_ascii_digit() {
        pos += 1;
    }
    if pos == start {
        return (None, start);
    }
    let num: BigInt = s[start..pos].parse().expect("digits");
    if pos + 1 < bytes.len() && bytes[pos] == b'/' && bytes[pos + 1].is_ascii_digit() {
        let dstart = pos + 1;
        let mut dend = dstart;
        while dend < bytes.len() && bytes[dend].is_ascii_digit() {
            dend += 1;
        }
        let den: BigInt = s[dstart..dend].parse().expect("digits");
        if den.is_zero() {
            return (None, start);
        }
        return (Some(Rational::new(num, den)), dend);
    }
    (Some(Rational::from_integer(num)), pos)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_rationals_and_polynomials() {
        assert_eq!(parse_scalar("-3/6", 1).unwrap(), CycScalar::ratio(-1, 2));
        assert_eq!(parse_scalar("z", 4).unwrap(), CycScalar::zeta(4));
        assert_eq!(parse_scalar("z^2", 4).unwrap(), CycScalar::from_int(4, -1));
        assert_eq!(parse_scalar(" 1 + z + z^2 ", 3).unwrap(), CycScalar::zero(3));
        assert_eq!(parse_scalar("2*z-z", 5).unwrap(), CycScalar::zeta(5));
    }

    #[test]
    fn rejects_garbage() {
        for s in ["", "x", "1/0", "z^", "1**z", "1+"] {
            assert!(parse_scalar(s, 3).is_err(), "{s:?}");
        }
    }
}
