use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use crate::scalars::CycScalar;

/// A word in the letters `X_0, …, X_{n−1}`; the empty word is `1`.
pub type Word = Vec<usize>;

/// Noncommutative polynomial: a finite combination of words with nonzero
/// coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NcPoly {
    nletters: usize,
    order: u32,
    terms: BTreeMap<Word, CycScalar>,
}

impl NcPoly {
    pub fn zero(nletters: usize, order: u32) -> Self {
        NcPoly { nletters, order, terms: BTreeMap::new() }
    }

    pub fn one(nletters: usize, order: u32) -> Self {
        Self::word(nletters, order, Vec::new(), CycScalar::one(order))
    }

    pub fn letter(nletters: usize, order: u32, i: usize) -> Self {
        Self::word(nletters, order, alloc::vec![i], CycScalar::one(order))
    }

    pub fn word(nletters: usize, order: u32, w: Word, c: CycScalar) -> Self {
        assert!(w.iter().all(|&i| i < nletters), "letter out of range");
        let mut p = Self::zero(nletters, order);
        p.add_term(w, &c);
        p
    }

    /// `X_x = Σ_i x_i X_i`.
    pub fn linear(order: u32, x: &[CycScalar]) -> Self {
        let mut p = Self::zero(x.len(), order);
        for (i, c) in x.iter().enumerate() {
            p.add_term(alloc::vec![i], c);
        }
        p
    }

    pub fn nletters(&self) -> usize {
        self.nletters
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &CycScalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &[usize]) -> CycScalar {
        self.terms.get(w).cloned().unwrap_or_else(|| CycScalar::zero(self.order))
    }

    /// Longest word length, `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Vec::len).max()
    }

    pub fn add_term(&mut self, w: Word, c: &CycScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c.clone());
            }
        }
    }

    pub fn scale(&self, c: &CycScalar) -> NcPoly {
        let mut out = NcPoly::zero(self.nletters, self.order);
        for (w, v) in &self.terms {
            out.add_term(w.clone(), &(v * c));
        }
        out
    }

    /// Applies `f` to every letter (a relabeling of the alphabet).
    pub fn map_letters(&self, f: impl Fn(usize) -> usize) -> NcPoly {
        let mut out = NcPoly::zero(self.nletters, self.order);
        for (w, v) in &self.terms {
            out.add_term(w.iter().map(|&i| f(i)).collect(), v);
        }
        out
    }

    pub fn to_string_with(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (w, c)) in self.terms.iter().enumerate() {
            let word: String = if w.is_empty() {
                "1".into()
            } else {
                w.iter().map(|&i| format!("X_{{{}}}", names[i])).collect::<Vec<_>>().join(" ")
            };
            let coeff = format!("{c}");
            if k > 0 {
                out.push_str(" + ");
            }
            if c.is_one() {
                out.push_str(&word);
            } else {
                out.push_str(&format!("({coeff})*{word}"));
            }
        }
        out
    }
}

impl Add for &NcPoly {
    type Output = NcPoly;
    fn add(self, rhs: &NcPoly) -> NcPoly {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c);
        }
        out
    }
}

impl Neg for &NcPoly {
    type Output = NcPoly;
    fn neg(self) -> NcPoly {
        self.scale(&CycScalar::from_int(self.order, -1))
    }
}

impl Sub for &NcPoly {
    type Output = NcPoly;
    fn sub(self, rhs: &NcPoly) -> NcPoly {
        self + &(-rhs)
    }
}

impl Mul for &NcPoly {
    type Output = NcPoly;
    fn mul(self, rhs: &NcPoly) -> NcPoly {
        let mut out = NcPoly::zero(self.nletters.max(rhs.nletters), self.order);
        for (a, c) in &self.terms {
            for (b, d) in &rhs.terms {
                let mut w = a.clone();
                w.extend_from_slice(b);
                out.add_term(w, &(c * d));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn noncommutative_product() {
        let x = NcPoly::letter(2, 1, 0);
        let y = NcPoly::letter(2, 1, 1);
        let comm = &(&x * &y) - &(&y * &x);
        assert!(!comm.is_zero());
        assert_eq!(comm.degree(), Some(2));
        assert!((&comm - &comm).is_zero());
        assert_eq!(&NcPoly::one(2, 1) * &x, x);
        let names = alloc::vec!["g".into(), "v".into()];
        assert_eq!(comm.to_string_with(&names), "X_{g} X_{v} + (-1)*X_{v} X_{g}");
    }
}
