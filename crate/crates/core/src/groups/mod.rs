//! Finite groups given by multiplication tables.
//!
//! Besides validation and the built-in families, this module computes
//! abelianizations, primary decompositions of finite abelian groups, the
//! kernel lattice of `ℤ^G → Ḡ` with its explicit monomial basis, and the
//! Dedekind group determinant together with the regular action on
//! polynomials in the variables `t_g`.

mod abelian;
mod dedekind;
mod lattice;

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

pub use abelian::{abelianization, primary_decompose, AbelianDecomposition};
pub use dedekind::{dedekind_determinant, regular_action, DEFAULT_DET_SIZE_LIMIT};
pub use lattice::{lattice_basis_paper, lattice_equals_oracle, BasisTag, LatticeBasis};

use crate::error::{Error, Result};

/// A finite group stored as its full multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    labels: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
}

impl FiniteGroup {
    /// Validates a multiplication table: Latin square, associativity, a
    /// two-sided identity and two-sided inverses.
    pub fn from_table(labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::InvalidGroup("empty element list".into()));
        }
        let distinct: BTreeSet<&String> = labels.iter().collect();
        if distinct.len() != n {
            return Err(Error::InvalidGroup("duplicate element labels".into()));
        }
        if table.len() != n || table.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidGroup(format!("table must be {n}x{n}")));
        }
        for (i, row) in table.iter().enumerate() {
            let mut seen = vec![false; n];
            for &x in row {
                if x >= n || seen[x] {
                    return Err(Error::InvalidGroup(format!("row {} is not a permutation", labels[i])));
                }
                seen[x] = true;
            }
        }
        for j in 0..n {
            let mut seen = vec![false; n];
            for row in &table {
                if seen[row[j]] {
                    return Err(Error::InvalidGroup(format!("column {} is not a permutation", labels[j])));
                }
                seen[row[j]] = true;
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or_else(|| Error::InvalidGroup("no identity element".into()))?;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::InvalidGroup(format!(
                            "associativity fails at ({}, {}, {})",
                            labels[a], labels[b], labels[c]
                        )));
                    }
                }
            }
        }
        let inverse = (0..n).map(|a| (0..n).find(|&b| table[a][b] == identity).expect("Latin square")).collect();
        Ok(FiniteGroup { labels, table, identity, inverse })
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn pow(&self, a: usize, k: i64) -> usize {
        let base = if k < 0 { self.inv(a) } else { a };
        let mut acc = self.identity;
        for _ in 0..k.unsigned_abs() {
            acc = self.mul(acc, base);
        }
        acc
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> usize {
        (0..self.order()).map(|a| self.element_order(a)).fold(1, num_integer::lcm)
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.table[a][b] == self.table[b][a]))
    }

    /// Closure of `gens` under multiplication (a subgroup, as the group is finite).
    pub fn subgroup_closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut members = vec![false; self.order()];
        members[self.identity] = true;
        let mut frontier = vec![self.identity];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if !members[y] {
                    members[y] = true;
                    frontier.push(y);
                }
            }
        }
        (0..self.order()).filter(|&i| members[i]).collect()
    }

    /// The permutation `g ↦ h g` of the element indices.
    pub fn left_translation(&self, h: usize) -> Vec<usize> {
        (0..self.order()).map(|g| self.mul(h, g)).collect()
    }
}

/// Cyclic group `ℤ/n` with elements `e, a, a^2, …`.
pub fn cyclic(n: usize) -> FiniteGroup {
    assert!(n >= 1, "cyclic group of order zero");
    let labels = (0..n).map(|k| power_label("a", k)).collect();
    let table = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
    FiniteGroup::from_table(labels, table).expect("cyclic table is valid")
}

fn power_label(base: &str, k: usize) -> String {
    match k {
        0 => "e".to_string(),
        1 => base.to_string(),
        _ => format!("{base}^{k}"),
    }
}

/// Dihedral group of order `2n`: `r^i s^j` with `s r = r^{-1} s`.
pub fn dihedral(n: usize) -> FiniteGroup {
    assert!(n >= 1, "dihedral group needs n >= 1");
    let idx = |i: usize, j: usize| j * n + i;
    let mut labels = vec![String::new(); 2 * n];
    for j in 0..2 {
        for i in 0..n {
            labels[idx(i, j)] = match (i, j) {
                (0, 0) => "e".to_string(),
                (_, 0) => power_label("r", i),
                (0, 1) => "s".to_string(),
                _ => format!("{}s", power_label("r", i)),
            };
        }
    }
    let mut table = vec![vec![0; 2 * n]; 2 * n];
    for (i, j) in (0..n).flat_map(|i| (0..2).map(move |j| (i, j))) {
        for (k, l) in (0..n).flat_map(|k| (0..2).map(move |l| (k, l))) {
            // r^i s^j r^k s^l = r^{i ± k} s^{j + l}
            let rk = if j == 0 { (i + k) % n } else { (i + n - k) % n };
            table[idx(i, j)][idx(k, l)] = idx(rk, (j + l) % 2);
        }
    }
    FiniteGroup::from_table(labels, table).expect("dihedral table is valid")
}

/// Symmetric group on `n ≤ 5` letters, elements as one-line permutations in
/// lexicographic order, composed right to left.
pub fn symmetric(n: usize) -> FiniteGroup {
    assert!((1..=5).contains(&n), "symmetric group size out of range");
    let mut perms: Vec<Vec<usize>> = Vec::new();
    permutations(&mut (0..n).collect(), 0, &mut perms);
    perms.sort();
    let labels = perms
        .iter()
        .map(|p| if p.iter().enumerate().all(|(i, &x)| i == x) { "e".to_string() } else { perm_label(p) })
        .collect();
    let find = |p: &Vec<usize>| perms.iter().position(|q| q == p).unwrap();
    let table =
        perms.iter().map(|a| perms.iter().map(|b| find(&b.iter().map(|&x| a[x]).collect())).collect()).collect();
    FiniteGroup::from_table(labels, table).expect("symmetric table is valid")
}

fn permutations(cur: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == cur.len() {
        out.push(cur.clone());
        return;
    }
    for i in k..cur.len() {
        cur.swap(k, i);
        permutations(cur, k + 1, out);
        cur.swap(k, i);
    }
}

/// Cycle notation with letters numbered from 1.
fn perm_label(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for s in 0..p.len() {
        if seen[s] || p[s] == s {
            continue;
        }
        out.push('(');
        let mut x = s;
        let mut first = true;
        while !seen[x] {
            seen[x] = true;
            if !first {
                out.push(' ');
            }
            out.push_str(&(x + 1).to_string());
            first = false;
            x = p[x];
        }
        out.push(')');
    }
    out
}

/// Quaternion group `{±1, ±i, ±j, ±k}`.
pub fn quaternion8() -> FiniteGroup {
    // unit quaternion basis 1, i, j, k with signs; element index = 2*unit + sign
    let labels: Vec<String> = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"].iter().map(|s| s.to_string()).collect();
    // products of units: (unit, sign) for u*v
    let unit_mul = |u: usize, v: usize| -> (usize, bool) {
        match (u, v) {
            (0, x) | (x, 0) => (x, false),
            (a, b) if a == b => (0, true),
            (1, 2) => (3, false),
            (2, 1) => (3, true),
            (2, 3) => (1, false),
            (3, 2) => (1, true),
            (3, 1) => (2, false),
            (1, 3) => (2, true),
            _ => unreachable!(),
        }
    };
    let table = (0..8)
        .map(|a| {
            (0..8)
                .map(|b| {
                    let (u, neg) = unit_mul(a / 2, b / 2);
                    let sign = (a % 2 == 1) ^ (b % 2 == 1) ^ neg;
                    2 * u + usize::from(sign)
                })
                .collect()
        })
        .collect();
    FiniteGroup::from_table(labels, table).expect("quaternion table is valid")
}

/// Direct product with labels `(a,b)` and lexicographic element order.
pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> FiniteGroup {
    let (na, nb) = (a.order(), b.order());
    let labels = (0..na * nb)
        .map(|x| {
            let (i, j) = (x / nb, x % nb);
            if i == a.identity && j == b.identity {
                "e".to_string()
            } else {
                format!("({},{})", a.label(i), b.label(j))
            }
        })
        .collect();
    let table = (0..na * nb)
        .map(|x| (0..na * nb).map(|y| a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb)).collect())
        .collect();
    FiniteGroup::from_table(labels, table).expect("product table is valid")
}

/// Klein four-group `ℤ/2 × ℤ/2`.
pub fn klein4() -> FiniteGroup {
    direct_product(&cyclic(2), &cyclic(2))
}

/// Looks up a built-in group by name: `trivial`, `Z<n>`, `D<n>`, `S3`, `Q8`, `V4`.
pub fn builtin_group(name: &str) -> Option<FiniteGroup> {
    let lower = name.to_ascii_lowercase();
    let parse_n = |s: &str| s.parse::<usize>().ok().filter(|&n| (1..=24).contains(&n));
    match lower.as_str() {
        "trivial" => Some(cyclic(1)),
        "s3" => Some(symmetric(3)),
        "q8" => Some(quaternion8()),
        "v4" | "klein4" | "z2xz2" => Some(klein4()),
        _ => {
            if let Some(n) = lower.strip_prefix('z').and_then(parse_n) {
                Some(cyclic(n))
            } else if let Some(n) = lower.strip_prefix('d').and_then(parse_n) {
                Some(dihedral(n))
            } else {
                None
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtins_validate() {
        for (g, n) in [(cyclic(6), 6), (dihedral(4), 8), (symmetric(3), 6), (quaternion8(), 8), (klein4(), 4)] {
            assert_eq!(g.order(), n);
        }
        assert!(!symmetric(3).is_abelian());
        assert!(!quaternion8().is_abelian());
        assert!(klein4().is_abelian());
        assert_eq!(quaternion8().element_order(2), 4);
        assert_eq!(dihedral(4).exponent(), 4);
    }

    #[test]
    fn rejects_bad_tables() {
        let labels = vec!["e".to_string(), "a".to_string()];
        assert!(FiniteGroup::from_table(labels.clone(), vec![vec![0, 1], vec![1, 1]]).is_err());
        assert!(FiniteGroup::from_table(labels, vec![vec![0, 1]]).is_err());
        // a Latin square without associativity (loop of order 5)
        let t = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let labels = (0..5).map(|i| i.to_string()).collect();
        assert!(FiniteGroup::from_table(labels, t).is_err());
    }

    #[test]
    fn labels_and_lookup() {
        let s3 = symmetric(3);
        assert_eq!(s3.label(s3.identity()), "e");
        assert!(s3.index_of("(1 2)").is_some());
        assert_eq!(builtin_group("Z4").unwrap().labels(), ["e", "a", "a^2", "a^3"]);
        assert_eq!(builtin_group("D4").unwrap().order(), 8);
    }
}
