//! Cyclotomic polynomials and univariate helpers over ℤ and ℚ.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::Rational;

/// Euler's totient.
pub fn totient(n: u32) -> usize {
    assert!(n >= 1, "totient of zero");
    let mut n = n as u64;
    let mut result = n;
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result as usize
}

fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n % d == 0).collect()
}

/// Exact division of integer polynomials (coefficients ascending), divisor monic.
fn div_monic_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem: Vec<BigInt> = num.to_vec();
    let dd = den.len() - 1;
    debug_assert!(den[dd].is_one());
    if rem.len() <= dd {
        return vec![BigInt::zero()];
    }
    let mut quot = vec![BigInt::zero(); rem.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (i, d) in den.iter().enumerate() {
            rem[k + i] -= &c * d;
        }
        quot[k] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero), "non-exact cyclotomic division");
    quot
}

/// The `n`-th cyclotomic polynomial `Φ_n`, coefficients in ascending degree.
///
/// Computed as `(x^n − 1) / ∏ Φ_d` over the proper divisors `d | n`.
pub fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    assert!(n >= 1, "cyclotomic order must be positive");
    let mut num = vec![BigInt::zero(); n as usize + 1];
    num[0] = -BigInt::one();
    num[n as usize] = BigInt::one();
    for d in divisors(n) {
        if d == n {
            continue;
        }
        num = div_monic_exact(&num, &cyclotomic_polynomial(d));
    }
    num
}

/// `Φ_n` with machine-integer coefficients, via the Möbius product
/// `∏_{d | n} (x^d − 1)^{μ(n/d)}`.
pub(crate) fn cyclotomic_small(n: u32) -> Vec<i64> {
    match n {
        1 => return vec![-1, 1],
        2 => return vec![1, 1],
        _ => {}
    }
    let mut num: Vec<i64> = vec![1];
    let mut den: Vec<i64> = vec![1];
    for d in divisors(n) {
        match mobius(n / d) {
            1 => num = mul_xd_minus_one(&num, d as usize),
            -1 => den = mul_xd_minus_one(&den, d as usize),
            _ => {}
        }
    }
    // exact division of num by den; den has leading coefficient ±1
    let dd = den.len() - 1;
    let lead = den[dd];
    let mut rem = num;
    let mut quot = vec![0i64; rem.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd] * lead;
        if c == 0 {
            continue;
        }
        for (i, d) in den.iter().enumerate() {
            rem[k + i] -= c * d;
        }
        quot[k] = c;
    }
    if *quot.last().unwrap() < 0 {
        for c in quot.iter_mut() {
            *c = -*c;
        }
    }
    quot
}

fn mul_xd_minus_one(p: &[i64], d: usize) -> Vec<i64> {
    let mut out = vec![0i64; p.len() + d];
    for (i, c) in p.iter().enumerate() {
        out[i + d] += c;
        out[i] -= c;
    }
    out
}

fn mobius(mut n: u32) -> i32 {
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

// Univariate polynomial arithmetic over ℚ, used for inverses modulo Φ_N.

pub(crate) fn trim(p: &mut Vec<Rational>) {
    while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    if p.is_empty() {
        p.push(Rational::zero());
    }
}

fn is_zero_poly(p: &[Rational]) -> bool {
    p.iter().all(Zero::is_zero)
}

fn degree(p: &[Rational]) -> usize {
    p.iter().rposition(|c| !c.is_zero()).unwrap_or(0)
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    let mut out = vec![Rational::zero(); n];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c;
    }
    trim(&mut out);
    out
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

fn poly_divmod(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let db = degree(b);
    let lead = b[db].clone();
    let mut rem = a.to_vec();
    trim(&mut rem);
    let da = degree(&rem);
    if is_zero_poly(&rem) || da < db {
        return (vec![Rational::zero()], rem);
    }
    let mut quot = vec![Rational::zero(); da - db + 1];
    for k in (0..=da - db).rev() {
        let c = &rem[k + db] / &lead;
        if c.is_zero() {
            continue;
        }
        for i in 0..=db {
            let t = &c * &b[i];
            rem[k + i] -= t;
        }
        quot[k] = c;
    }
    trim(&mut rem);
    trim(&mut quot);
    (quot, rem)
}

/// Inverse of `a` modulo `m` in `ℚ[z]`, by the extended Euclidean algorithm.
/// Returns `None` when `gcd(a, m) ≠ 1`.
pub(crate) fn poly_inverse_mod(a: &[Rational], m: &[Rational]) -> Option<Vec<Rational>> {
    let (mut r0, mut r1) = (m.to_vec(), a.to_vec());
    trim(&mut r0);
    trim(&mut r1);
    let (mut s0, mut s1) = (vec![Rational::zero()], vec![Rational::one()]);
    while !is_zero_poly(&r1) {
        let (q, r) = poly_divmod(&r0, &r1);
        let s = poly_sub(&s0, &poly_mul(&q, &s1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
    }
    if degree(&r0) != 0 || r0[0].is_zero() {
        return None;
    }
    let c = r0[0].clone();
    let mut inv: Vec<Rational> = s0.iter().map(|x| x / &c).collect();
    let (_, r) = poly_divmod(&inv, m);
    inv = r;
    Some(inv)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic_polynomial(1), ints(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(4), ints(&[1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(12), ints(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn phi12_by_dividing_out_divisors() {
        // x^12 - 1 = Φ1 Φ2 Φ3 Φ4 Φ6 Φ12, multiply back and compare
        let mut prod = ints(&[1]);
        for d in [1u32, 2, 3, 4, 6, 12] {
            let p = cyclotomic_polynomial(d);
            let mut out = vec![BigInt::zero(); prod.len() + p.len() - 1];
            for (i, a) in prod.iter().enumerate() {
                for (j, b) in p.iter().enumerate() {
                    out[i + j] += a * b;
                }
            }
            prod = out;
        }
        let mut expected = vec![BigInt::zero(); 13];
        expected[0] = BigInt::from(-1);
        expected[12] = BigInt::one();
        assert_eq!(prod, expected);
    }

    #[test]
    fn small_and_big_agree() {
        for n in 1..=40u32 {
            let big = cyclotomic_polynomial(n);
            let small: Vec<BigInt> = cyclotomic_small(n).into_iter().map(BigInt::from).collect();
            assert_eq!(big, small, "n = {n}");
            assert_eq!(big.len() - 1, totient(n));
        }
    }
}
