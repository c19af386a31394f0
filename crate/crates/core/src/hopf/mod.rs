//! Finite-dimensional Hopf algebras as structure-constant tensors.
//!
//! A [`HopfAlgebraData`] stores the product `e_i e_j = Σ m_{ij}^k e_k`, the
//! coproduct `Δ(e_i) = Σ c_i^{jk} e_j ⊗ e_k`, counit, unit and antipode in a
//! fixed basis. Elements are dense coordinate vectors ([`Elem`]); elements of
//! `H ⊗ H` are sparse maps ([`Tensor2`]).

mod builders;
mod grouplike;
mod quotient;
mod verify;

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

pub use builders::{functions_on_group, group_algebra, sweedler, taft, uqbar_sl2};
pub use grouplike::{grouplike_certify, skew_primitives, GroupLikeCertificate};
pub use quotient::{hab_is_group_algebra, hab_quotient, GroupAlgebraCheck, QuotientHopf};
pub use verify::{verify_hopf, Axiom, AxiomFailure, HopfReport};

use crate::scalars::CycScalar;

/// Dense coordinates of an element of `H`.
pub type Elem = Vec<CycScalar>;

/// Sparse element of `H ⊗ H`, keyed by basis index pairs.
pub type Tensor2 = BTreeMap<(usize, usize), CycScalar>;

/// Structure constants of a finite-dimensional Hopf algebra over `ℚ(ζ_N)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfAlgebraData {
    pub name: String,
    /// Cyclotomic order `N` of the coefficient field.
    pub order: u32,
    pub labels: Vec<String>,
    pub unit: Elem,
    pub counit: Vec<CycScalar>,
    /// `mul[i][j]` lists the nonzero `(k, m_{ij}^k)`.
    pub mul: Vec<Vec<Vec<(usize, CycScalar)>>>,
    /// `comul[i]` lists the nonzero `(j, k, c_i^{jk})`.
    pub comul: Vec<Vec<(usize, usize, CycScalar)>>,
    /// `antipode[i]` lists the nonzero coordinates of `S(e_i)`.
    pub antipode: Vec<Vec<(usize, CycScalar)>>,
    /// Declared group-like elements with display names.
    pub declared_grouplikes: Vec<(String, Elem)>,
    /// Adapted-basis data: non-group basis index `b` ↦ group-like basis index `g(b)`.
    pub group_part: Option<BTreeMap<usize, usize>>,
}

pub(crate) fn add_into(e: &mut Elem, i: usize, c: &CycScalar) {
    if !c.is_zero() {
        e[i] += c;
    }
}

pub(crate) fn tensor_add(t: &mut Tensor2, key: (usize, usize), c: &CycScalar) {
    if c.is_zero() {
        return;
    }
    match t.get_mut(&key) {
        Some(v) => {
            *v += c;
            if v.is_zero() {
                t.remove(&key);
            }
        }
        None => {
            t.insert(key, c.clone());
        }
    }
}

pub(crate) fn elem_is_zero(e: &[CycScalar]) -> bool {
    e.iter().all(CycScalar::is_zero)
}

impl HopfAlgebraData {
    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn zero(&self) -> Elem {
        vec![CycScalar::zero(self.order); self.dim()]
    }

    pub fn basis(&self, i: usize) -> Elem {
        let mut e = self.zero();
        e[i] = CycScalar::one(self.order);
        e
    }

    pub fn one(&self) -> Elem {
        self.unit.clone()
    }

    pub fn scalar(&self, c: i64) -> CycScalar {
        CycScalar::from_int(self.order, c)
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> Elem {
        let mut e = self.zero();
        for (k, c) in &self.mul[i][j] {
            add_into(&mut e, *k, c);
        }
        e
    }

    pub fn mul(&self, a: &[CycScalar], b: &[CycScalar]) -> Elem {
        let mut out = self.zero();
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let xy = x * y;
                for (k, c) in &self.mul[i][j] {
                    add_into(&mut out, *k, &(&xy * c));
                }
            }
        }
        out
    }

    pub fn comul_basis(&self, i: usize) -> Tensor2 {
        let mut t = Tensor2::new();
        for (j, k, c) in &self.comul[i] {
            tensor_add(&mut t, (*j, *k), c);
        }
        t
    }

    pub fn comul(&self, a: &[CycScalar]) -> Tensor2 {
        let mut t = Tensor2::new();
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, k, c) in &self.comul[i] {
                tensor_add(&mut t, (*j, *k), &(x * c));
            }
        }
        t
    }

    pub fn counit(&self, a: &[CycScalar]) -> CycScalar {
        let mut s = CycScalar::zero(self.order);
        for (x, e) in a.iter().zip(&self.counit) {
            if !x.is_zero() && !e.is_zero() {
                s += &(x * e);
            }
        }
        s
    }

    pub fn antipode_basis(&self, i: usize) -> Elem {
        let mut e = self.zero();
        for (k, c) in &self.antipode[i] {
            add_into(&mut e, *k, c);
        }
        e
    }

    pub fn antipode(&self, a: &[CycScalar]) -> Elem {
        let mut out = self.zero();
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (k, c) in &self.antipode[i] {
                add_into(&mut out, *k, &(x * c));
            }
        }
        out
    }

    /// `a ⊗ b` as a sparse tensor.
    pub fn tensor(&self, a: &[CycScalar], b: &[CycScalar]) -> Tensor2 {
        let mut t = Tensor2::new();
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                tensor_add(&mut t, (i, j), &(x * y));
            }
        }
        t
    }

    /// Product in the algebra `H ⊗ H`.
    pub fn tensor_mul(&self, a: &Tensor2, b: &Tensor2) -> Tensor2 {
        let mut out = Tensor2::new();
        for ((i, j), x) in a {
            for ((k, l), y) in b {
                let xy = x * y;
                for (p, c1) in &self.mul[*i][*k] {
                    let xyc = &xy * c1;
                    for (q, c2) in &self.mul[*j][*l] {
                        tensor_add(&mut out, (*p, *q), &(&xyc * c2));
                    }
                }
            }
        }
        out
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (i + 1..n).all(|j| self.mul_basis(i, j) == self.mul_basis(j, i)))
    }

    /// Index of the basis vector equal to `e`, if `e` is a basis vector.
    pub fn basis_index(&self, e: &[CycScalar]) -> Option<usize> {
        let nz: Vec<usize> = (0..e.len()).filter(|&i| !e[i].is_zero()).collect();
        (nz.len() == 1 && e[nz[0]].is_one()).then(|| nz[0])
    }

    /// Basis indices of the declared group-likes, when all of them are basis vectors.
    pub fn grouplike_basis_indices(&self) -> Option<Vec<usize>> {
        self.declared_grouplikes.iter().map(|(_, e)| self.basis_index(e)).collect()
    }

    /// Human-readable form such as `1 - g` or `1/2*v + z*gv`.
    pub fn format_elem(&self, e: &[CycScalar]) -> String {
        let mut out = String::new();
        for (i, c) in e.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let s = c.to_string();
            let rational = c.as_rational().is_some();
            let (neg, body) = if rational && s.starts_with('-') { (true, s[1..].to_string()) } else { (false, s) };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if body == "1" {
                out.push_str(&self.labels[i]);
            } else if rational {
                out.push_str(&format!("{body}*{}", self.labels[i]));
            } else {
                out.push_str(&format!("({body})*{}", self.labels[i]));
            }
        }
        if out.is_empty() {
            "0".to_string()
        } else {
            out
        }
    }

    /// The dual Hopf algebra `H*` in the dual basis: the product is the
    /// transposed coproduct and vice versa, unit and counit swap, and the
    /// antipode is transposed.
    pub fn dual(&self) -> HopfAlgebraData {
        let n = self.dim();
        let mut mul = vec![vec![Vec::new(); n]; n];
        for i in 0..n {
            for (j, k, c) in &self.comul[i] {
                mul[*j][*k].push((i, c.clone()));
            }
        }
        for row in mul.iter_mut() {
            for entry in row.iter_mut() {
                entry.sort_by_key(|(k, _)| *k);
            }
        }
        let mut comul = vec![Vec::new(); n];
        for i in 0..n {
            for j in 0..n {
                for (k, c) in &self.mul[i][j] {
                    comul[*k].push((i, j, c.clone()));
                }
            }
        }
        let mut antipode = vec![Vec::new(); n];
        for i in 0..n {
            for (k, c) in &self.antipode[i] {
                antipode[*k].push((i, c.clone()));
            }
        }
        for a in antipode.iter_mut() {
            a.sort_by_key(|(k, _)| *k);
        }
        HopfAlgebraData {
            name: format!("{}*", self.name),
            order: self.order,
            labels: self.labels.iter().map(|l| format!("{l}*")).collect(),
            unit: self.counit.clone(),
            counit: self.unit.clone(),
            mul,
            comul,
            antipode,
            declared_grouplikes: Vec::new(),
            group_part: None,
        }
    }
}
