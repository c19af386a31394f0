use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{add_into, Elem, HopfAlgebraData};
use crate::error::{Error, Result};
use crate::scalars::CycScalar;

/// The identities checked by [`verify_hopf`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Axiom {
    Associativity,
    Unit,
    Coassociativity,
    Counit,
    ComulMultiplicative,
    ComulUnital,
    CounitMultiplicative,
    CounitUnital,
    AntipodeLeft,
    AntipodeRight,
}

impl Axiom {
    pub const ALL: [Axiom; 10] = [
        Axiom::Associativity,
        Axiom::Unit,
        Axiom::Coassociativity,
        Axiom::Counit,
        Axiom::ComulMultiplicative,
        Axiom::ComulUnital,
        Axiom::CounitMultiplicative,
        Axiom::CounitUnital,
        Axiom::AntipodeLeft,
        Axiom::AntipodeRight,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Axiom::Associativity => "associativity",
            Axiom::Unit => "unit",
            Axiom::Coassociativity => "coassociativity",
            Axiom::Counit => "counit",
            Axiom::ComulMultiplicative => "comultiplication_multiplicative",
            Axiom::ComulUnital => "comultiplication_unital",
            Axiom::CounitMultiplicative => "counit_multiplicative",
            Axiom::CounitUnital => "counit_unital",
            Axiom::AntipodeLeft => "antipode_left",
            Axiom::AntipodeRight => "antipode_right",
        }
    }
}

/// A failed identity: how many basis instances violate it and the first one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomFailure {
    pub axiom: Axiom,
    pub count: usize,
    pub witness: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfReport {
    pub failures: Vec<AxiomFailure>,
}

impl HopfReport {
    pub fn all_pass(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn failure(&self, axiom: Axiom) -> Option<&AxiomFailure> {
        self.failures.iter().find(|f| f.axiom == axiom)
    }
}

fn check_shape(h: &HopfAlgebraData) -> Result<()> {
    let n = h.dim();
    let bad = |what: &str| Err(Error::ShapeMismatch(format!("{what} does not match dimension {n}")));
    if n == 0 {
        return Err(Error::ShapeMismatch("empty basis".into()));
    }
    if h.unit.len() != n {
        return bad("unit");
    }
    if h.counit.len() != n {
        return bad("counit");
    }
    if h.mul.len() != n || h.mul.iter().any(|r| r.len() != n) {
        return bad("product tensor");
    }
    if h.comul.len() != n || h.antipode.len() != n {
        return bad("coproduct or antipode");
    }
    let in_range = h.mul.iter().flatten().flatten().all(|(k, _)| *k < n)
        && h.comul.iter().flatten().all(|(j, k, _)| *j < n && *k < n)
        && h.antipode.iter().flatten().all(|(k, _)| *k < n);
    if !in_range {
        return Err(Error::ShapeMismatch("basis index out of range".into()));
    }
    if let Some(gp) = &h.group_part {
        if gp.iter().any(|(b, g)| *b >= n || *g >= n) {
            return Err(Error::ShapeMismatch("group_part index out of range".into()));
        }
    }
    if h.declared_grouplikes.iter().any(|(_, e)| e.len() != n) {
        return Err(Error::ShapeMismatch("declared group-like has wrong length".into()));
    }
    Ok(())
}

type Tensor3 = BTreeMap<(usize, usize, usize), CycScalar>;

fn t3_add(t: &mut Tensor3, key: (usize, usize, usize), c: &CycScalar) {
    if c.is_zero() {
        return;
    }
    let v = t.entry(key).or_insert_with(|| CycScalar::zero(c.order()));
    *v += c;
    if v.is_zero() {
        t.remove(&key);
    }
}

#[derive(Default)]
struct Tally {
    counts: BTreeMap<Axiom, (usize, String)>,
}

impl Tally {
    fn record(&mut self, axiom: Axiom, ok: bool, witness: impl FnOnce() -> String) {
        if !ok {
            let e = self.counts.entry(axiom).or_insert_with(|| (0, witness()));
            e.0 += 1;
        }
    }
}

/// Checks every Hopf algebra identity on basis elements and reports each
/// failed identity with the number of violating instances and a witness.
pub fn verify_hopf(h: &HopfAlgebraData) -> Result<HopfReport> {
    check_shape(h)?;
    let n = h.dim();
    let mut tally = Tally::default();
    let pair = |i: usize, j: usize| format!("{}*{}", h.labels[i], h.labels[j]);

    for i in 0..n {
        for j in 0..n {
            let ij = h.mul_basis(i, j);
            for k in 0..n {
                let left = h.mul(&ij, &h.basis(k));
                let right = h.mul(&h.basis(i), &h.mul_basis(j, k));
                tally.record(Axiom::Associativity, left == right, || {
                    format!("{}*{}*{}", h.labels[i], h.labels[j], h.labels[k])
                });
            }
        }
        let b = h.basis(i);
        let ok = h.mul(&h.unit, &b) == b && h.mul(&b, &h.unit) == b;
        tally.record(Axiom::Unit, ok, || h.labels[i].clone());
    }

    let one = CycScalar::one(h.order);
    for i in 0..n {
        let d = h.comul_basis(i);
        let mut left = Tensor3::new();
        let mut right = Tensor3::new();
        for (&(j, k), c) in &d {
            for (a, b, c2) in &h.comul[j] {
                t3_add(&mut left, (*a, *b, k), &(c * c2));
            }
            for (a, b, c2) in &h.comul[k] {
                t3_add(&mut right, (j, *a, *b), &(c * c2));
            }
        }
        tally.record(Axiom::Coassociativity, left == right, || h.labels[i].clone());

        let mut l = h.zero();
        let mut r = h.zero();
        for (&(j, k), c) in &d {
            add_into(&mut l, k, &(&h.counit[j] * c));
            add_into(&mut r, j, &(&h.counit[k] * c));
        }
        let b = h.basis(i);
        tally.record(Axiom::Counit, l == b && r == b, || h.labels[i].clone());

        // S(x₁)x₂ = ε(x)1 = x₁S(x₂)
        let mut sl = h.zero();
        let mut sr = h.zero();
        for (&(j, k), c) in &d {
            for (t, v) in h.mul(&h.antipode_basis(j), &h.basis(k)).iter().enumerate() {
                add_into(&mut sl, t, &(c * v));
            }
            for (t, v) in h.mul(&h.basis(j), &h.antipode_basis(k)).iter().enumerate() {
                add_into(&mut sr, t, &(c * v));
            }
        }
        let target: Elem = h.unit.iter().map(|u| u * &h.counit[i]).collect();
        tally.record(Axiom::AntipodeLeft, sl == target, || h.labels[i].clone());
        tally.record(Axiom::AntipodeRight, sr == target, || h.labels[i].clone());
    }

    let deltas: Vec<_> = (0..n).map(|i| h.comul_basis(i)).collect();
    for i in 0..n {
        for j in 0..n {
            let ij = h.mul_basis(i, j);
            let lhs = h.comul(&ij);
            let rhs = h.tensor_mul(&deltas[i], &deltas[j]);
            tally.record(Axiom::ComulMultiplicative, lhs == rhs, || pair(i, j));
            let eps = h.counit(&ij);
            tally.record(Axiom::CounitMultiplicative, eps == &h.counit[i] * &h.counit[j], || pair(i, j));
        }
    }
    let unit_delta = h.comul(&h.unit);
    tally.record(Axiom::ComulUnital, unit_delta == h.tensor(&h.unit, &h.unit), || "1".into());
    tally.record(Axiom::CounitUnital, h.counit(&h.unit) == one, || "1".into());

    let failures =
        tally.counts.into_iter().map(|(axiom, (count, witness))| AxiomFailure { axiom, count, witness }).collect();
    Ok(HopfReport { failures })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::cyclic;
    use crate::hopf::{group_algebra, sweedler};

    #[test]
    fn sweedler_and_group_algebra_pass() {
        assert!(verify_hopf(&sweedler()).unwrap().all_pass());
        assert!(verify_hopf(&group_algebra(&cyclic(3))).unwrap().all_pass());
    }

    #[test]
    fn corrupted_coproduct_is_caught_at_v() {
        let mut h = sweedler();
        h.comul[2].push((2, 0, CycScalar::one(1)));
        let r = verify_hopf(&h).unwrap();
        let f = r.failure(Axiom::Coassociativity).expect("coassociativity should fail");
        assert_eq!(f.witness, "v");
    }

    #[test]
    fn malformed_tensor_is_rejected() {
        let mut h = sweedler();
        h.counit.pop();
        assert!(matches!(verify_hopf(&h), Err(Error::ShapeMismatch(_))));
    }
}
