use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use super::{add_into, Elem, HopfAlgebraData, Tensor2};
use crate::groups::{abelianization, primary_decompose, FiniteGroup};
use crate::scalars::CycScalar;

type MulTable = Vec<Vec<Vec<(usize, CycScalar)>>>;

fn sparse(e: &Elem) -> Vec<(usize, CycScalar)> {
    e.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.clone())).collect()
}

fn sparse_tensor(t: &Tensor2) -> Vec<(usize, usize, CycScalar)> {
    t.iter().map(|(&(j, k), c)| (j, k, c.clone())).collect()
}

/// Fills in coproduct, counit and antipode from their values on generators,
/// given each basis vector as a word in the generators.
fn complete_from_generators(
    mut h: HopfAlgebraData,
    words: &[Vec<usize>],
    gen_comul: &[Tensor2],
    gen_counit: &[CycScalar],
    gen_antipode: &[Elem],
) -> HopfAlgebraData {
    let n = h.dim();
    let mut comul = Vec::with_capacity(n);
    let mut counit = Vec::with_capacity(n);
    let mut antipode = Vec::with_capacity(n);
    let one = h.one();
    let one_one = h.tensor(&one, &one);
    for word in words {
        let mut d = one_one.clone();
        let mut eps = CycScalar::one(h.order);
        let mut s = one.clone();
        for &x in word {
            d = h.tensor_mul(&d, &gen_comul[x]);
            eps *= &gen_counit[x];
            s = h.mul(&gen_antipode[x], &s);
        }
        comul.push(sparse_tensor(&d));
        counit.push(eps);
        antipode.push(sparse(&s));
    }
    h.comul = comul;
    h.counit = counit;
    h.antipode = antipode;
    h
}

fn skeleton(name: String, order: u32, labels: Vec<String>, unit_index: usize, mul: MulTable) -> HopfAlgebraData {
    let n = labels.len();
    let mut unit = vec![CycScalar::zero(order); n];
    unit[unit_index] = CycScalar::one(order);
    HopfAlgebraData {
        name,
        order,
        labels,
        unit,
        counit: Vec::new(),
        mul,
        comul: Vec::new(),
        antipode: Vec::new(),
        declared_grouplikes: Vec::new(),
        group_part: None,
    }
}

/// The group algebra `k[G]`, every group element declared group-like.
pub fn group_algebra(g: &FiniteGroup) -> HopfAlgebraData {
    let n = g.order();
    let one = CycScalar::one(1);
    let mul = (0..n).map(|a| (0..n).map(|b| vec![(g.mul(a, b), one.clone())]).collect()).collect();
    let mut h = skeleton(format!("k[{}]", n), 1, g.labels().to_vec(), g.identity(), mul);
    h.comul = (0..n).map(|a| vec![(a, a, one.clone())]).collect();
    h.counit = vec![one.clone(); n];
    h.antipode = (0..n).map(|a| vec![(g.inv(a), one.clone())]).collect();
    h.declared_grouplikes = (0..n).map(|a| (g.label(a).to_string(), h.basis(a))).collect();
    h.group_part = Some(BTreeMap::new());
    h
}

/// The dual group algebra `O(G)` with basis `e_g` of delta functions, over
/// `ℚ(ζ_N)` where `N` is the exponent of `G_ab`, so that every character is
/// available as a declared group-like (trivial character first).
pub fn functions_on_group(g: &FiniteGroup) -> HopfAlgebraData {
    let n = g.order();
    let (gab, proj) = abelianization(g);
    let dec = primary_decompose(&gab).expect("abelianization is abelian");
    let order = gab.exponent().max(1) as u32;
    let one = CycScalar::one(order);
    let labels = g.labels().iter().map(|l| format!("e_{l}")).collect();
    let mut mul: MulTable = vec![vec![Vec::new(); n]; n];
    for (a, row) in mul.iter_mut().enumerate() {
        row[a].push((a, one.clone()));
    }
    let mut h = skeleton(format!("O({})", n), order, labels, 0, mul);
    h.unit = vec![one.clone(); n];
    h.comul = (0..n)
        .map(|a| {
            let mut terms: Vec<(usize, usize, CycScalar)> =
                (0..n).map(|b| (g.mul(a, g.inv(b)), b, one.clone())).collect();
            terms.sort_by_key(|&(x, y, _)| (x, y));
            terms
        })
        .collect();
    h.counit = (0..n).map(|a| if a == g.identity() { one.clone() } else { CycScalar::zero(order) }).collect();
    h.antipode = (0..n).map(|a| vec![(g.inv(a), one.clone())]).collect();

    let orders = dec.primary_orders();
    let mut k = vec![0u64; orders.len()];
    let mut idx = 0;
    loop {
        let chi: Elem = (0..n)
            .map(|x| {
                let f = &dec.coordinates[proj[x]];
                let e: u64 = (0..orders.len()).map(|i| k[i] * f[i] * (order as u64 / orders[i])).sum();
                CycScalar::zeta_pow(order, (e % order as u64) as i64)
            })
            .collect();
        h.declared_grouplikes.push((format!("chi{idx}"), chi));
        idx += 1;
        let mut i = 0;
        while i < k.len() {
            k[i] += 1;
            if k[i] < orders[i] {
                break;
            }
            k[i] = 0;
            i += 1;
        }
        if i == k.len() {
            break;
        }
    }
    h
}

/// Sweedler's four-dimensional Hopf algebra with basis `1, g, v, gv`:
/// `g² = 1`, `v² = 0`, `vg = −gv`, `Δv = 1⊗v + v⊗g`.
pub fn sweedler() -> HopfAlgebraData {
    let one = CycScalar::one(1);
    let neg = CycScalar::from_int(1, -1);
    let mut mul: MulTable = vec![vec![Vec::new(); 4]; 4];
    for i in 0..4 {
        mul[0][i].push((i, one.clone()));
        if i > 0 {
            mul[i][0].push((i, one.clone()));
        }
    }
    mul[1][1].push((0, one.clone()));
    mul[1][2].push((3, one.clone()));
    mul[1][3].push((2, one.clone()));
    mul[2][1].push((3, neg.clone()));
    mul[3][1].push((2, neg.clone()));
    let labels = ["1", "g", "v", "gv"].iter().map(|s| s.to_string()).collect();
    let mut h = skeleton("sweedler".into(), 1, labels, 0, mul);
    h.comul = vec![
        vec![(0, 0, one.clone())],
        vec![(1, 1, one.clone())],
        vec![(0, 2, one.clone()), (2, 1, one.clone())],
        vec![(1, 3, one.clone()), (3, 0, one.clone())],
    ];
    h.counit = vec![one.clone(), one.clone(), CycScalar::zero(1), CycScalar::zero(1)];
    h.antipode = vec![vec![(0, one.clone())], vec![(1, one.clone())], vec![(3, one.clone())], vec![(2, neg)]];
    h.declared_grouplikes = vec![("1".into(), h.basis(0)), ("g".into(), h.basis(1))];
    h.group_part = Some(BTreeMap::from([(2, 1), (3, 0)]));
    h
}

fn power_label(base: &str, k: usize) -> String {
    match k {
        0 => String::new(),
        1 => base.to_string(),
        _ => format!("{base}^{k}"),
    }
}

fn word_label(parts: &[(&str, usize)]) -> String {
    let s: String = parts.iter().map(|&(b, k)| power_label(b, k)).collect();
    if s.is_empty() {
        "1".into()
    } else {
        s
    }
}

/// The Taft algebra of dimension `n²` over `ℚ(ζ_n)`: `g^n = 1`, `x^n = 0`,
/// `xg = ζ^{-1} gx`, `Δx = x⊗1 + g⊗x`. Basis `g^i x^j` sits at index `j·n + i`.
pub fn taft(n: usize) -> HopfAlgebraData {
    assert!(n >= 2, "taft algebras need n >= 2");
    let order = n as u32;
    let idx = |i: usize, j: usize| j * n + i;
    let dim = n * n;
    let mut mul: MulTable = vec![vec![Vec::new(); dim]; dim];
    for j in 0..n {
        for i in 0..n {
            for l in 0..n {
                for k in 0..n {
                    if j + l < n {
                        let c = CycScalar::zeta_pow(order, -((j * k) as i64));
                        mul[idx(i, j)][idx(k, l)].push((idx((i + k) % n, j + l), c));
                    }
                }
            }
        }
    }
    let labels = (0..dim).map(|b| word_label(&[("g", b % n), ("x", b / n)])).collect();
    let h = skeleton(format!("taft({n})"), order, labels, 0, mul);
    let (g, x) = (h.basis(idx(1, 0)), h.basis(idx(0, 1)));
    let one = h.one();
    let gen_comul = [h.tensor(&g, &g), {
        let mut t = h.tensor(&x, &one);
        for (k, v) in h.tensor(&g, &x) {
            super::tensor_add(&mut t, k, &v);
        }
        t
    }];
    let ginv = h.basis(idx(n - 1, 0));
    let mut sx = h.mul(&ginv, &x);
    for c in sx.iter_mut() {
        *c = -&*c;
    }
    let gen_antipode = [ginv.clone(), sx];
    let gen_counit = [CycScalar::one(order), CycScalar::zero(order)];
    let words: Vec<Vec<usize>> = (0..dim)
        .map(|b| {
            let mut w = vec![0; b % n];
            w.extend(vec![1; b / n]);
            w
        })
        .collect();
    let mut h = complete_from_generators(h, &words, &gen_comul, &gen_counit, &gen_antipode);
    h.declared_grouplikes = (0..n).map(|i| (h.labels[idx(i, 0)].clone(), h.basis(idx(i, 0)))).collect();
    h.group_part = Some((0..dim).filter(|&b| b >= n).map(|b| (b, b % n)).collect());
    h
}

/// The small quantum group `ū_q(sl₂)` of dimension `e³` with basis
/// `E^a F^b K^c` at index `(a·e + b)·e + c`. The parameter `q` is `ζ_e` for
/// odd `e` and `ζ_{2e}` for even `e`, so that `q²` has order `e`.
pub fn uqbar_sl2(e: usize) -> HopfAlgebraData {
    assert!(e >= 2, "the small quantum group needs e >= 2");
    let order = if e % 2 == 1 { e as u32 } else { 2 * e as u32 };
    let idx = |a: usize, b: usize, c: usize| (a * e + b) * e + c;
    let dim = e * e * e;
    let q = |k: i64| CycScalar::zeta_pow(order, k);
    let zero = || vec![CycScalar::zero(order); dim];

    // left multiplication by K^{±1}, E, F on basis words
    let k_left = |w: &Elem, sign: i64| -> Elem {
        let mut out = zero();
        for (i, c) in w.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (a, b, cc) = (i / (e * e), (i / e) % e, i % e);
            let s = q(sign * (2 * a as i64 - 2 * b as i64));
            let nc = (cc as i64 + sign).rem_euclid(e as i64) as usize;
            add_into(&mut out, idx(a, b, nc), &(c * &s));
        }
        out
    };
    let e_left = |w: &Elem| -> Elem {
        let mut out = zero();
        for (i, c) in w.iter().enumerate() {
            let (a, b, cc) = (i / (e * e), (i / e) % e, i % e);
            if !c.is_zero() && a + 1 < e {
                add_into(&mut out, idx(a + 1, b, cc), c);
            }
        }
        out
    };
    let denom = (&q(1) - &q(-1)).checked_inv().expect("q is not ±1");
    // F·E^a F^b K^c by FE = EF − (K − K⁻¹)/(q − q⁻¹), by induction on a
    let mut f_cache: Vec<Elem> = Vec::with_capacity(dim);
    for i in 0..dim {
        let (a, b, cc) = (i / (e * e), (i / e) % e, i % e);
        let v = if a == 0 {
            let mut out = zero();
            if b + 1 < e {
                out[idx(0, b + 1, cc)] = CycScalar::one(order);
            }
            out
        } else {
            // w = E·w', F·w = E·(F·w') − (K·w' − K⁻¹·w')/(q − q⁻¹)
            let mut wp = zero();
            wp[idx(a - 1, b, cc)] = CycScalar::one(order);
            let fw = &f_cache[idx(a - 1, b, cc)];
            let mut out = e_left(fw);
            let kw = k_left(&wp, 1);
            let kinvw = k_left(&wp, -1);
            for t in 0..dim {
                let d = &kw[t] - &kinvw[t];
                if !d.is_zero() {
                    out[t] -= &(&d * &denom);
                }
            }
            out
        };
        f_cache.push(v);
    }
    let f_left = |w: &Elem| -> Elem {
        let mut out = zero();
        for (i, c) in w.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (t, v) in f_cache[i].iter().enumerate() {
                if !v.is_zero() {
                    out[t] += &(c * v);
                }
            }
        }
        out
    };

    let mut mul: MulTable = vec![vec![Vec::new(); dim]; dim];
    for j in 0..dim {
        let mut col = zero();
        col[j] = CycScalar::one(order);
        // K^c · e_j, then F^b, then E^a
        let mut by_k = vec![col];
        for _ in 1..e {
            let next = k_left(by_k.last().unwrap(), 1);
            by_k.push(next);
        }
        for c in 0..e {
            let mut by_f = by_k[c].clone();
            for b in 0..e {
                let mut by_e = by_f.clone();
                for a in 0..e {
                    mul[idx(a, b, c)][j] = sparse(&by_e);
                    by_e = e_left(&by_e);
                }
                by_f = f_left(&by_f);
            }
        }
    }

    let labels = (0..dim).map(|i| word_label(&[("E", i / (e * e)), ("F", (i / e) % e), ("K", i % e)])).collect();
    let h = skeleton(format!("uqbar_sl2({e})"), order, labels, 0, mul);
    let (eb, fb, kb, kinv) =
        (h.basis(idx(1, 0, 0)), h.basis(idx(0, 1, 0)), h.basis(idx(0, 0, 1)), h.basis(idx(0, 0, e - 1)));
    let one = h.one();
    let sum = |a: Tensor2, b: Tensor2| {
        let mut t = a;
        for (k, v) in b {
            super::tensor_add(&mut t, k, &v);
        }
        t
    };
    let gen_comul = [
        sum(h.tensor(&one, &eb), h.tensor(&eb, &kb)),
        sum(h.tensor(&kinv, &fb), h.tensor(&fb, &one)),
        h.tensor(&kb, &kb),
    ];
    let neg = |v: Elem| -> Elem { v.into_iter().map(|c| -&c).collect() };
    let gen_antipode = [neg(h.mul(&eb, &kinv)), neg(h.mul(&kb, &fb)), kinv.clone()];
    let gen_counit = [CycScalar::zero(order), CycScalar::zero(order), CycScalar::one(order)];
    let words: Vec<Vec<usize>> = (0..dim)
        .map(|i| {
            let mut w = vec![0; i / (e * e)];
            w.extend(vec![1; (i / e) % e]);
            w.extend(vec![2; i % e]);
            w
        })
        .collect();
    let mut h = complete_from_generators(h, &words, &gen_comul, &gen_counit, &gen_antipode);
    h.declared_grouplikes = (0..e).map(|c| (h.labels[c].clone(), h.basis(c))).collect();
    h.group_part = Some((0..dim).filter(|&i| i >= e).map(|i| (i, (i / (e * e) + i % e) % e)).collect());
    h
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{cyclic, symmetric};
    use crate::hopf::verify_hopf;

    #[test]
    fn builders_satisfy_axioms() {
        for h in [
            sweedler(),
            taft(2),
            taft(3),
            taft(4),
            group_algebra(&cyclic(3)),
            group_algebra(&symmetric(3)),
            functions_on_group(&cyclic(2)),
            functions_on_group(&symmetric(3)),
            uqbar_sl2(2),
            uqbar_sl2(3),
        ] {
            let r = verify_hopf(&h).unwrap();
            assert!(r.all_pass(), "{}: {:?}", h.name, r.failures);
        }
    }

    #[test]
    fn sweedler_relations() {
        let h = sweedler();
        assert_eq!(h.dim(), 4);
        let (g, v) = (h.basis(1), h.basis(2));
        assert_eq!(h.mul(&g, &g), h.one());
        assert_eq!(h.mul(&v, &v), h.zero());
        let gv = h.mul(&g, &v);
        let vg: Elem = h.mul(&v, &g).into_iter().map(|c| -&c).collect();
        assert_eq!(gv, vg);
    }

    #[test]
    fn functions_on_z2_coproduct() {
        let h = functions_on_group(&cyclic(2));
        let sigma = h.index_of("e_a").unwrap();
        let e = h.index_of("e_e").unwrap();
        let one = CycScalar::one(h.order);
        let expected = Tensor2::from([((sigma, e), one.clone()), ((e, sigma), one)]);
        assert_eq!(h.comul_basis(sigma), expected);
    }

    #[test]
    fn taft2_matches_sweedler() {
        // x ↦ gv, gx ↦ v
        let (t, s) = (taft(2), sweedler());
        let perm = [0usize, 1, 3, 2];
        for i in 0..4 {
            let mapped = |e: &Elem| -> Elem {
                let mut out = s.zero();
                for (k, c) in e.iter().enumerate() {
                    out[perm[k]] = c.clone();
                }
                out
            };
            let mapped_t =
                |t2: &Tensor2| -> Tensor2 { t2.iter().map(|(&(a, b), c)| ((perm[a], perm[b]), c.clone())).collect() };
            assert_eq!(mapped_t(&t.comul_basis(i)), s.comul_basis(perm[i]));
            assert_eq!(mapped(&t.antipode_basis(i)), s.antipode_basis(perm[i]));
            for j in 0..4 {
                assert_eq!(mapped(&t.mul_basis(i, j)), s.mul_basis(perm[i], perm[j]));
            }
        }
    }

    #[test]
    fn uqbar_commutator() {
        let h = uqbar_sl2(3);
        let (e, f, k) = (h.basis(9), h.basis(3), h.basis(1));
        let kinv = h.basis(2);
        let ef = h.mul(&e, &f);
        let fe = h.mul(&f, &e);
        let q = CycScalar::zeta(3);
        let denom = (&q - &q.checked_inv().unwrap()).checked_inv().unwrap();
        for t in 0..h.dim() {
            assert_eq!(&ef[t] - &fe[t], &(&k[t] - &kinv[t]) * &denom);
        }
        assert_eq!(h.labels[9], "E");
        assert_eq!(h.labels[3], "F");
    }
}
