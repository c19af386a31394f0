use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::FiniteGroup;
use crate::error::{Error, Result};
use crate::linalg::{smith_normal_form, IntMatrix};

/// Quotient of `G` by its commutator subgroup, with the projection map.
///
/// Cosets are represented by their smallest element index; the quotient keeps
/// the labels of the representatives.
pub fn abelianization(g: &FiniteGroup) -> (FiniteGroup, Vec<usize>) {
    let n = g.order();
    let mut commutators = Vec::new();
    for a in 0..n {
        for b in 0..n {
            let c = g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b)));
            if !commutators.contains(&c) {
                commutators.push(c);
            }
        }
    }
    let normal = g.subgroup_closure(&commutators);
    let rep: Vec<usize> = (0..n).map(|x| normal.iter().map(|&m| g.mul(x, m)).min().unwrap()).collect();
    let mut reps: Vec<usize> = rep.clone();
    reps.sort_unstable();
    reps.dedup();
    let coset = |x: usize| reps.binary_search(&rep[x]).unwrap();
    let proj: Vec<usize> = (0..n).map(coset).collect();
    let labels = reps.iter().map(|&r| g.label(r).into()).collect();
    let table = reps.iter().map(|&a| reps.iter().map(|&b| coset(g.mul(a, b))).collect()).collect();
    let quotient = FiniteGroup::from_table(labels, table).expect("quotient of a group is a group");
    (quotient, proj)
}

/// Decomposition `A ≅ ⊕ ℤ/p_i^{e_i}` with realized generators `s_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianDecomposition {
    /// Prime and exponent of each cyclic factor.
    pub prime_powers: Vec<(u64, u32)>,
    /// Element indices `s_i`.
    pub generators: Vec<usize>,
    /// For each element, the exponents `(f_1, …, f_r)` with `0 ≤ f_i < p_i^{e_i}`.
    pub coordinates: Vec<Vec<u64>>,
}

impl AbelianDecomposition {
    /// Orders `p_i^{e_i}` of the cyclic factors.
    pub fn primary_orders(&self) -> Vec<u64> {
        self.prime_powers.iter().map(|&(p, e)| p.pow(e)).collect()
    }

    pub fn r(&self) -> usize {
        self.prime_powers.len()
    }

    /// `d = Σ p_i^{e_i}` (zero for the trivial group).
    pub fn d(&self) -> u64 {
        self.primary_orders().iter().sum()
    }

    /// Order of the decomposed group.
    pub fn group_order(&self) -> u64 {
        self.primary_orders().iter().product()
    }
}

/// Primary decomposition of a finite abelian group through the Smith form of
/// its relation matrix.
pub fn primary_decompose(a: &FiniteGroup) -> Result<AbelianDecomposition> {
    if !a.is_abelian() {
        return Err(Error::NonAbelianInput);
    }
    let n = a.order();
    // greedy generators and a full-rank triangular relation matrix
    let mut gens: Vec<usize> = Vec::new();
    let mut relations: Vec<Vec<i64>> = Vec::new();
    let mut coords: BTreeMap<usize, Vec<i64>> = BTreeMap::new();
    coords.insert(a.identity(), Vec::new());
    for x in 0..n {
        if coords.contains_key(&x) {
            continue;
        }
        let k = gens.len();
        let mut m = 1i64;
        let mut y = x;
        while !coords.contains_key(&y) {
            y = a.mul(y, x);
            m += 1;
        }
        let mut row: Vec<i64> = coords[&y].iter().map(|c| -c).collect();
        row.resize(k, 0);
        row.push(m);
        relations.push(row);
        gens.push(x);
        coords = exponent_coordinates(a, &gens);
    }
    let k = gens.len();
    if k == 0 {
        return Ok(AbelianDecomposition {
            prime_powers: Vec::new(),
            generators: Vec::new(),
            coordinates: vec![Vec::new(); n],
        });
    }
    let mut flat = Vec::with_capacity(k * k);
    for row in &relations {
        for j in 0..k {
            flat.push(row.get(j).copied().unwrap_or(0));
        }
    }
    let smith = smith_normal_form(&IntMatrix::from_i64(k, k, &flat));
    let mut factors: Vec<(u64, u32, usize)> = Vec::new();
    for j in 0..k {
        let dj = smith.d[(j, j)].to_u64().expect("invariant factor fits in u64");
        if dj <= 1 {
            continue;
        }
        // h_j = Σ_i (V^{-1})_{ji} g_i
        let mut h = a.identity();
        for (i, &g) in gens.iter().enumerate() {
            let c = smith.v_inv[(j, i)].clone() % BigInt::from(a.element_order(g));
            h = a.mul(h, a.pow(g, c.to_i64().unwrap()));
        }
        for (p, e) in factorize(dj) {
            let pe = p.pow(e);
            factors.push((p, e, a.pow(h, (dj / pe) as i64)));
        }
    }
    factors.sort_by_key(|&(p, e, _)| (p, e));
    let prime_powers: Vec<(u64, u32)> = factors.iter().map(|&(p, e, _)| (p, e)).collect();
    let generators: Vec<usize> = factors.iter().map(|&(_, _, s)| s).collect();
    let orders: Vec<u64> = prime_powers.iter().map(|&(p, e)| p.pow(e)).collect();

    let mut coordinates: Vec<Option<Vec<u64>>> = vec![None; n];
    let mut f = vec![0u64; orders.len()];
    loop {
        let mut x = a.identity();
        for (i, &s) in generators.iter().enumerate() {
            x = a.mul(x, a.pow(s, f[i] as i64));
        }
        if coordinates[x].is_some() {
            return Err(Error::Structure("primary generators are not independent".into()));
        }
        coordinates[x] = Some(f.clone());
        // odometer increment
        let mut i = 0;
        while i < f.len() {
            f[i] += 1;
            if f[i] < orders[i] {
                break;
            }
            f[i] = 0;
            i += 1;
        }
        if i == f.len() {
            break;
        }
    }
    let coordinates = coordinates
        .into_iter()
        .map(|c| c.ok_or_else(|| Error::Structure("primary generators do not generate".into())))
        .collect::<Result<Vec<_>>>()?;
    Ok(AbelianDecomposition { prime_powers, generators, coordinates })
}

/// Exponent tuples reaching each element of `⟨gens⟩` by breadth-first search.
fn exponent_coordinates(a: &FiniteGroup, gens: &[usize]) -> BTreeMap<usize, Vec<i64>> {
    let mut coords = BTreeMap::new();
    coords.insert(a.identity(), vec![0i64; gens.len()]);
    let mut queue = alloc::collections::VecDeque::from([a.identity()]);
    while let Some(x) = queue.pop_front() {
        for (i, &g) in gens.iter().enumerate() {
            let y = a.mul(x, g);
            if !coords.contains_key(&y) {
                let mut c: Vec<i64> = coords[&x].clone();
                c[i] += 1;
                coords.insert(y, c);
                queue.push_back(y);
            }
        }
    }
    coords
}

fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        let mut e = 0;
        while n % p == 0 {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::super::*;
    use super::*;

    fn check(dec: &AbelianDecomposition, a: &FiniteGroup) {
        for x in 0..a.order() {
            let mut y = a.identity();
            for (i, &s) in dec.generators.iter().enumerate() {
                y = a.mul(y, a.pow(s, dec.coordinates[x][i] as i64));
            }
            assert_eq!(y, x);
        }
        for (i, &s) in dec.generators.iter().enumerate() {
            assert_eq!(a.element_order(s) as u64, dec.primary_orders()[i]);
        }
        assert_eq!(dec.group_order(), a.order() as u64);
    }

    #[test]
    fn abelianization_examples() {
        let (q, proj) = abelianization(&symmetric(3));
        assert_eq!(q.order(), 2);
        assert_eq!(proj.len(), 6);
        let (q, _) = abelianization(&cyclic(6));
        assert_eq!(q.order(), 6);
        let (q, _) = abelianization(&quaternion8());
        assert_eq!(q.order(), 4);
        assert_eq!(primary_decompose(&q).unwrap().primary_orders(), vec![2, 2]);
    }

    #[test]
    fn decompositions() {
        let z6 = cyclic(6);
        let dec = primary_decompose(&z6).unwrap();
        assert_eq!(dec.primary_orders(), vec![2, 3]);
        assert_eq!((dec.d(), dec.r()), (5, 2));
        check(&dec, &z6);

        let dec = primary_decompose(&cyclic(1)).unwrap();
        assert_eq!((dec.d(), dec.r()), (0, 0));

        let z4 = cyclic(4);
        let dec = primary_decompose(&z4).unwrap();
        assert_eq!(dec.primary_orders(), vec![4]);
        assert_eq!((dec.d(), dec.r()), (4, 1));
        check(&dec, &z4);

        let g = direct_product(&cyclic(4), &cyclic(6));
        let dec = primary_decompose(&g).unwrap();
        assert_eq!(dec.primary_orders(), vec![2, 4, 3]);
        check(&dec, &g);
    }

    #[test]
    fn nonabelian_rejected() {
        assert_eq!(primary_decompose(&symmetric(3)), Err(Error::NonAbelianInput));
    }
}
