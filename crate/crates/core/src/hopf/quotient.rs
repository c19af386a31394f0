use alloc::collections::{BTreeMap, VecDeque};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{elem_is_zero, grouplike::GroupLikeCertificate, tensor_add, Elem, HopfAlgebraData, Tensor2};
use crate::error::{Error, Result};
use crate::groups::FiniteGroup;
use crate::linalg::Matrix;
use crate::scalars::CycScalar;

/// `H_ab = H / I` for the commutator ideal `I`, with the canonical map `q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientHopf {
    pub quotient: HopfAlgebraData,
    /// `projection[i] = q(e_i)` in quotient coordinates.
    pub projection: Vec<Elem>,
    /// Basis indices of `H` whose classes form the quotient basis.
    pub section: Vec<usize>,
    /// Reduced echelon basis of `I`.
    pub ideal: Vec<Elem>,
}

impl QuotientHopf {
    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }

    /// `q(x)`.
    pub fn project(&self, x: &[CycScalar]) -> Elem {
        let mut out = self.quotient.zero();
        for (i, c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (t, v) in self.projection[i].iter().enumerate() {
                if !v.is_zero() {
                    out[t] += &(c * v);
                }
            }
        }
        out
    }

    /// `(q ⊗ q)(t)`.
    pub fn project_tensor(&self, t: &Tensor2) -> Tensor2 {
        let mut out = Tensor2::new();
        for (&(a, b), c) in t {
            for (x, u) in self.projection[a].iter().enumerate() {
                if u.is_zero() {
                    continue;
                }
                for (y, v) in self.projection[b].iter().enumerate() {
                    if !v.is_zero() {
                        tensor_add(&mut out, (x, y), &(&(c * u) * v));
                    }
                }
            }
        }
        out
    }
}

/// Incremental echelon basis used for the ideal closure.
struct Echelon {
    rows: Vec<(usize, Elem)>,
}

impl Echelon {
    /// Reduces `v`; keeps it and returns true when it is independent.
    fn insert(&mut self, mut v: Elem) -> Option<Elem> {
        for (p, row) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let f = v[*p].clone();
            for (t, r) in row.iter().enumerate() {
                if !r.is_zero() {
                    v[t] -= &(&f * r);
                }
            }
        }
        let p = v.iter().position(|c| !c.is_zero())?;
        let inv = v[p].checked_inv().expect("nonzero pivot");
        for c in v.iter_mut() {
            if !c.is_zero() {
                *c = &*c * &inv;
            }
        }
        self.rows.push((p, v.clone()));
        Some(v)
    }
}

/// Two-sided ideal generated by all commutators, closed under left and
/// right multiplication by basis vectors.
fn commutator_ideal(h: &HopfAlgebraData) -> Vec<Elem> {
    let n = h.dim();
    let mut ech = Echelon { rows: Vec::new() };
    let mut queue = VecDeque::new();
    for i in 0..n {
        for j in i + 1..n {
            let ij = h.mul_basis(i, j);
            let ji = h.mul_basis(j, i);
            let c: Elem = ij.iter().zip(&ji).map(|(a, b)| a - b).collect();
            if let Some(v) = ech.insert(c) {
                queue.push_back(v);
            }
        }
    }
    while let Some(v) = queue.pop_front() {
        for k in 0..n {
            let b = h.basis(k);
            for w in [h.mul(&b, &v), h.mul(&v, &b)] {
                if let Some(w) = ech.insert(w) {
                    queue.push_back(w);
                }
            }
        }
    }
    ech.rows.into_iter().map(|(_, v)| v).collect()
}

/// The largest commutative quotient `H_ab` and `q : H → H_ab`. The Hopf ideal
/// conditions `Δ(I) ⊆ I⊗H + H⊗I`, `ε(I) = 0` and `S(I) ⊆ I` are asserted.
pub fn hab_quotient(h: &HopfAlgebraData) -> Result<QuotientHopf> {
    let n = h.dim();
    let gens = commutator_ideal(h);
    let (ideal, pivots) = if gens.is_empty() {
        (Vec::new(), Vec::new())
    } else {
        let (r, pivots) = Matrix::from_rows(gens, n, h.order)?.rref();
        ((0..pivots.len()).map(|i| r.row(i).to_vec()).collect::<Vec<_>>(), pivots)
    };
    let section: Vec<usize> = (0..n).filter(|i| !pivots.contains(i)).collect();
    let m = section.len();
    let zero_q = || alloc::vec![CycScalar::zero(h.order); m];
    let mut projection = alloc::vec![zero_q(); n];
    for (pos, &i) in section.iter().enumerate() {
        projection[i][pos] = CycScalar::one(h.order);
    }
    for (row, &p) in ideal.iter().zip(&pivots) {
        for (pos, &j) in section.iter().enumerate() {
            if !row[j].is_zero() {
                projection[p][pos] = -&row[j];
            }
        }
    }

    let labels: Vec<String> = section.iter().map(|&i| h.labels[i].clone()).collect();
    let mut q = QuotientHopf {
        quotient: HopfAlgebraData {
            name: format!("{}_ab", h.name),
            order: h.order,
            labels,
            unit: Vec::new(),
            counit: Vec::new(),
            mul: Vec::new(),
            comul: Vec::new(),
            antipode: Vec::new(),
            declared_grouplikes: Vec::new(),
            group_part: None,
        },
        projection,
        section: section.clone(),
        ideal,
    };

    for (k, row) in q.ideal.iter().enumerate() {
        if !h.counit(row).is_zero() {
            return Err(Error::ClosureFailure(format!("counit is nonzero on ideal vector {k}")));
        }
        if !q.project_tensor(&h.comul(row)).is_empty() {
            return Err(Error::ClosureFailure(format!("coproduct leaves the ideal at vector {k}")));
        }
        if !elem_is_zero(&q.project(&h.antipode(row))) {
            return Err(Error::ClosureFailure(format!("antipode leaves the ideal at vector {k}")));
        }
    }

    let sparse =
        |e: Elem| -> Vec<(usize, CycScalar)> { e.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect() };
    let unit = q.project(&h.unit);
    let counit = section.iter().map(|&i| h.counit[i].clone()).collect();
    let mut mul = Vec::with_capacity(m);
    let mut comul = Vec::with_capacity(m);
    let mut antipode = Vec::with_capacity(m);
    for &a in &section {
        mul.push(section.iter().map(|&b| sparse(q.project(&h.mul_basis(a, b)))).collect());
        comul.push(q.project_tensor(&h.comul_basis(a)).into_iter().map(|((x, y), c)| (x, y, c)).collect());
        antipode.push(sparse(q.project(&h.antipode_basis(a))));
    }
    let mut declared: Vec<(String, Elem)> = Vec::new();
    for (name, g) in &h.declared_grouplikes {
        let img = q.project(g);
        if declared.iter().all(|(_, x)| *x != img) {
            declared.push((name.clone(), img));
        }
    }
    let quot = &mut q.quotient;
    quot.unit = unit;
    quot.counit = counit;
    quot.mul = mul;
    quot.comul = comul;
    quot.antipode = antipode;
    quot.declared_grouplikes = declared;
    Ok(q)
}

/// Whether `H_ab` is the group algebra of the image of `G(H)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAlgebraCheck {
    pub is_group_algebra: bool,
    /// `Ḡ = q(G(H))` with labels taken from the first preimage.
    pub gbar: FiniteGroup,
    /// `G(H) → Ḡ` by element index.
    pub surjection: Vec<usize>,
    pub witness: Option<String>,
}

/// Computes `q(g)` for every `g ∈ G(H)`, the group they form and whether they
/// are a basis of `H_ab`.
pub fn hab_is_group_algebra(
    h: &HopfAlgebraData,
    cert: &GroupLikeCertificate,
    q: &QuotientHopf,
) -> Result<GroupAlgebraCheck> {
    let qa = &q.quotient;
    let mut images: Vec<Elem> = Vec::new();
    let mut labels: Vec<String> = Vec::new();
    let mut surjection = Vec::with_capacity(cert.elements.len());
    for (i, g) in cert.elements.iter().enumerate() {
        let img = q.project(g);
        let k = match images.iter().position(|x| *x == img) {
            Some(k) => k,
            None => {
                images.push(img);
                labels.push(cert.group.label(i).into());
                images.len() - 1
            }
        };
        surjection.push(k);
    }
    let mut witness = None;
    for (name, img) in labels.iter().zip(&images) {
        if qa.comul(img) != qa.tensor(img, img) || !qa.counit(img).is_one() {
            witness = Some(format!("image of {name} is not group-like"));
        }
    }
    let mut table: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for a in 0..images.len() {
        for b in 0..images.len() {
            let ab = qa.mul(&images[a], &images[b]);
            let k = images
                .iter()
                .position(|x| *x == ab)
                .ok_or_else(|| Error::Structure("images of group-likes are not closed".into()))?;
            table.insert((a, b), k);
        }
    }
    let ng = images.len();
    let rows = (0..ng).map(|a| (0..ng).map(|b| table[&(a, b)]).collect()).collect();
    let gbar = FiniteGroup::from_table(labels, rows)?;
    let rank = Matrix::from_rows(images.clone(), qa.dim(), h.order)?.rank();
    if witness.is_none() && rank < qa.dim() {
        witness = Some(format!("images span {rank} of {} dimensions", qa.dim()));
    }
    Ok(GroupAlgebraCheck { is_group_algebra: witness.is_none(), gbar, surjection, witness })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{cyclic, symmetric};
    use crate::hopf::{functions_on_group, group_algebra, grouplike_certify, sweedler, taft, uqbar_sl2, verify_hopf};

    fn check(h: &HopfAlgebraData) -> (QuotientHopf, GroupAlgebraCheck) {
        let q = hab_quotient(h).unwrap();
        assert!(verify_hopf(&q.quotient).unwrap().all_pass(), "{}", h.name);
        assert!(q.quotient.is_commutative());
        let cert = grouplike_certify(h).unwrap();
        let g = hab_is_group_algebra(h, &cert, &q).unwrap();
        (q, g)
    }

    #[test]
    fn sweedler_abelianizes_to_z2() {
        let (q, g) = check(&sweedler());
        assert_eq!(q.dim(), 2);
        assert!(g.is_group_algebra);
        assert_eq!(g.gbar.order(), 2);
        let v = sweedler().basis(2);
        assert!(elem_is_zero(&q.project(&v)));
    }

    #[test]
    fn group_algebra_of_s3() {
        let (q, g) = check(&group_algebra(&symmetric(3)));
        assert_eq!(q.dim(), 2);
        assert!(g.is_group_algebra);
        assert_eq!(g.surjection.len(), 6);
    }

    #[test]
    fn taft_and_uqbar() {
        for n in 2..=4 {
            let (q, g) = check(&taft(n));
            assert_eq!(q.dim(), n);
            assert!(g.is_group_algebra);
            assert_eq!(g.gbar.order(), n);
        }
        let (q, g) = check(&uqbar_sl2(3));
        assert_eq!(q.dim(), 1);
        assert!(g.is_group_algebra);
        let (q, g) = check(&uqbar_sl2(2));
        assert_eq!(q.dim(), 2);
        assert_eq!(g.gbar.order(), 2);
    }

    #[test]
    fn commutative_input_is_its_own_quotient() {
        let h = functions_on_group(&cyclic(3));
        let q = hab_quotient(&h).unwrap();
        assert_eq!(q.dim(), 3);
        assert!(q.ideal.is_empty());
    }

    #[test]
    fn corrupted_counit_is_reported() {
        let mut h = group_algebra(&symmetric(3));
        h.counit[1] = CycScalar::from_int(1, 2);
        assert!(matches!(hab_quotient(&h), Err(Error::ClosureFailure(_))));
    }
}
