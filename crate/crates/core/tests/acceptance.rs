//! Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
//! criterion fails. Every comparison is exact.

use std::collections::{BTreeMap, BTreeSet};
use std::process::ExitCode;
use std::time::Instant;

use hopfgen_core::freehopf::{
    is_coinvariant, theta_pair, tinv_relation_failure, tinv_solve, CoactionValue, FreeHopf, LaurentPoly, Monomial,
};
use hopfgen_core::genbase::{
    all_localization_witnesses, build_presentation, monoid_membership, p_poly, q_poly, MonomialMonoid, PresentationBH,
    WitnessCase, DEFAULT_SEED,
};
use hopfgen_core::groups::{
    abelianization, builtin_group, cyclic, dedekind_determinant, dihedral, klein4, lattice_basis_paper,
    lattice_equals_oracle, primary_decompose, quaternion8, symmetric, FiniteGroup, DEFAULT_DET_SIZE_LIMIT,
};
use hopfgen_core::hopf::{
    functions_on_group, group_algebra, grouplike_certify, hab_is_group_algebra, hab_quotient, sweedler, taft,
    uqbar_sl2, verify_hopf, HopfAlgebraData,
};
use hopfgen_core::noether::{coaction_action_dictionary_check, invariant_generators, monomials_of_degree};
use hopfgen_core::pitheory::{canonical_coinvariants, is_t_coinvariant, iyer_truncated_check, mu, square_check_random};
use hopfgen_core::{CycScalar, Rational};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

/// Every built-in used below, in a fixed order.
fn builtins() -> Vec<HopfAlgebraData> {
    let mut out = Vec::new();
    for n in 1..=8 {
        out.push(group_algebra(&cyclic(n)));
    }
    out.push(group_algebra(&symmetric(3)));
    out.push(group_algebra(&klein4()));
    for n in 2..=4 {
        out.push(functions_on_group(&cyclic(n)));
    }
    out.push(functions_on_group(&symmetric(3)));
    out.push(sweedler());
    for n in 2..=4 {
        out.push(taft(n));
    }
    out.push(uqbar_sl2(2));
    out.push(uqbar_sl2(3));
    out
}

fn var(n: usize, i: usize) -> LaurentPoly {
    LaurentPoly::var(n, 1, i)
}

fn mono(exps: &[i64]) -> LaurentPoly {
    LaurentPoly::monomial(exps.len(), 1, Monomial(exps.to_vec()), CycScalar::one(1))
}

/// Prime-power orders of the cyclic factors of an abelian group, read off
/// from how many elements have order dividing `p^k`.
fn primary_oracle(g: &FiniteGroup) -> Vec<u64> {
    let n = g.order() as u64;
    let mut out = Vec::new();
    let mut m = n;
    let mut p = 2;
    while m > 1 {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            // |{x : x^{p^k} = 1}| = p^{Σ_i min(k, e_i)}; successive
            // differences count the factors with e_i ≥ k.
            let log = |k: u32| -> u32 {
                let c =
                    (0..g.order()).filter(|&x| (p.pow(k) as usize).is_multiple_of(g.element_order(x))).count() as u64;
                (c as f64).log(p as f64).round() as u32
            };
            let mut k = 1;
            let mut at_least = Vec::new();
            loop {
                let c = log(k) - log(k - 1);
                if c == 0 {
                    break;
                }
                at_least.push(c);
                k += 1;
            }
            for (i, &c) in at_least.iter().enumerate() {
                let next = at_least.get(i + 1).copied().unwrap_or(0);
                for _ in 0..(c - next) {
                    out.push(p.pow(i as u32 + 1));
                }
            }
        }
        p += 1;
    }
    out.sort_unstable();
    out
}

/// Order of the abelianization via an explicit commutator subgroup.
fn abelianization_order_oracle(g: &FiniteGroup) -> usize {
    let mut comms = Vec::new();
    for a in 0..g.order() {
        for b in 0..g.order() {
            comms.push(g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b))));
        }
    }
    g.order() / g.subgroup_closure(&comms).len()
}

fn presentation_of(h: &HopfAlgebraData) -> Result<(PresentationBH, FreeHopf), String> {
    let fh = FreeHopf::new(h).map_err(err)?;
    let cert = grouplike_certify(h).map_err(err)?;
    let gac = hab_is_group_algebra(h, &cert, &fh.q).map_err(err)?;
    let pres = build_presentation(&fh, &cert, &gac, None, DEFAULT_SEED).map_err(err)?;
    Ok((pres, fh))
}

// ------------------------------------------------------------- criteria

fn c1_axioms() -> Outcome {
    let mut list: Vec<HopfAlgebraData> = (1..=8).map(|n| group_algebra(&cyclic(n))).collect();
    list.extend((1..=4).map(|n| functions_on_group(&cyclic(n))));
    list.push(functions_on_group(&symmetric(3)));
    list.push(sweedler());
    list.extend((2..=4).map(taft));
    list.extend([uqbar_sl2(2), uqbar_sl2(3)]);
    for h in &list {
        let rep = verify_hopf(h).map_err(err)?;
        ensure(rep.all_pass(), || format!("{}: {:?}", h.name, rep.failures.first()))?;
    }
    Ok(format!("{} algebras, zero failures", list.len()))
}

fn c2_sweedler_monoid() -> Outcome {
    let h = sweedler();
    let (pres, _) = presentation_of(&h)?;
    // basis order 1, g, v, gv; g plays the group-like x, v the skew-primitive y
    let reference =
        MonomialMonoid::new(4, vec![vec![1, 0, 0, 0], vec![0, 2, 0, 0]], vec![vec![0, 1, 1, 0], vec![0, 0, 0, 1]])
            .map_err(err)?;
    for (i, v) in pres.generators().enumerate() {
        ensure(reference.contains(v), || format!("generator {i} = {v:?} not in the reference monoid"))?;
        // inverses of the Laurent part
        if i < pres.ell {
            let inv: Vec<i64> = v.iter().map(|e| -e).collect();
            ensure(reference.contains(&inv), || format!("inverse of generator {i} not in the reference monoid"))?;
        }
    }
    for e in [[1, 0, 0, 0], [-1, 0, 0, 0], [0, 2, 0, 0], [0, -2, 0, 0], [0, 1, 1, 0], [0, 0, 0, 1], [0, 0, 2, 0]] {
        ensure(monoid_membership(&mono(&e), &pres), || format!("reference monomial {e:?} not generated"))?;
    }
    ensure(!monoid_membership(&mono(&[0, 1, 0, 0]), &pres), || "t_g must not be generated".into())?;
    Ok("both directions on all generators".into())
}

fn c3_census() -> Outcome {
    let h = sweedler();
    let q = hab_quotient(&h).map_err(err)?;
    let mut count = 0;
    for deg in 0..=4 {
        for e in monomials_of_degree(4, deg) {
            let got = is_coinvariant(&h, &q, &mono(&e)).map_err(err)?;
            let expected = (e[1] + e[2]) % 2 == 0;
            ensure(got == expected, || format!("t^{e:?}: coinvariant = {got}"))?;
            count += 1;
        }
    }
    ensure(count == 70, || format!("{count} monomials"))?;
    Ok("70 monomials, coinvariant iff b + c even".into())
}

fn c4_counts() -> Outcome {
    let mut seen = 0;
    let mut full = 0;
    let mut lattice_only = 0;
    for h in builtins() {
        let cert = grouplike_certify(&h);
        let Ok(cert) = cert else { continue };
        if !cert.pointed {
            continue;
        }
        let name = &h.name;
        let q = hab_quotient(&h).map_err(err)?;
        let gac = hab_is_group_algebra(&h, &cert, &q).map_err(err)?;
        let orders = primary_oracle(&gac.gbar);
        let d: u64 = orders.iter().sum();
        let bound = d + 1 - orders.len() as u64;
        if h.grouplike_basis_indices().is_none() {
            // no adapted basis: only the group side can be checked
            let dec = primary_decompose(&gac.gbar).map_err(err)?;
            let basis = lattice_basis_paper(&cert.group, &gac.surjection, &dec).map_err(err)?;
            ensure(basis.columns.len() == cert.group.order(), || format!("{name}: ell"))?;
            ensure(basis.max_degree() <= bound as i64, || format!("{name}: Laurent degree"))?;
            ensure(basis.abs_det() == (gac.gbar.order() as u64).into(), || format!("{name}: det"))?;
            lattice_only += 1;
            continue;
        }
        let (pres, _) = presentation_of(&h)?;
        ensure(pres.n == h.dim(), || format!("{name}: n = {}", pres.n))?;
        ensure(pres.ell == cert.group.order() && pres.laurent_gens.len() == pres.ell, || format!("{name}: ell"))?;
        ensure(pres.poly_gens.len() == pres.n - pres.ell, || format!("{name}: poly count"))?;
        ensure(pres.degree_bound == bound, || format!("{name}: bound {} vs oracle {bound}", pres.degree_bound))?;
        ensure(pres.max_laurent_degree() <= bound as i64, || format!("{name}: Laurent degree"))?;
        ensure(pres.max_poly_degree() <= 2, || format!("{name}: poly degree"))?;
        ensure(pres.lattice.abs_det() == (gac.gbar.order() as u64).into(), || format!("{name}: det"))?;
        let expected = match name.as_str() {
            "sweedler" => Some((4, 2, 2)),
            "taft(3)" => Some((9, 3, 3)),
            "taft(4)" => Some((16, 4, 4)),
            "k[6]" if !cert.group.is_abelian() => Some((6, 6, 2)),
            _ => None,
        };
        full += 1;
        if let Some((n, l, b)) = expected {
            ensure((pres.n, pres.ell, pres.degree_bound) == (n, l, b), || {
                format!("{name}: (n, l, bound) = ({}, {}, {})", pres.n, pres.ell, pres.degree_bound)
            })?;
            seen += 1;
        }
    }
    ensure(seen == 4, || format!("only {seen} of the named algebras were checked"))?;
    Ok(format!("{full} presentations, {lattice_only} without adapted basis checked on the lattice; named values match"))
}

fn c5_lattice() -> Outcome {
    let mut groups: Vec<FiniteGroup> = (1..=8).map(cyclic).collect();
    groups.extend([klein4(), symmetric(3), dihedral(4), quaternion8()]);
    for g in &groups {
        let (ab, proj) = abelianization(g);
        let dec = primary_decompose(&ab).map_err(err)?;
        let basis = lattice_basis_paper(g, &proj, &dec).map_err(err)?;
        ensure(lattice_equals_oracle(&basis, g, &proj, &dec), || format!("|G| = {}: HNF kernel differs", g.order()))?;
        // independent: columns lie in the kernel of Z^G -> G/[G,G] and the
        // index matches, so the lattices coincide
        let ab_order = abelianization_order_oracle(g);
        ensure(basis.abs_det() == (ab_order as u64).into(), || format!("|G| = {}: index", g.order()))?;
        for col in &basis.columns {
            let mut acc = ab.identity();
            for (x, &e) in col.iter().enumerate() {
                acc = ab.mul(acc, ab.pow(proj[x], e));
            }
            ensure(acc == ab.identity(), || format!("|G| = {}: column {col:?} not in kernel", g.order()))?;
        }
    }
    Ok(format!("{} groups", groups.len()))
}

fn c6_hab() -> Outcome {
    let cases: Vec<(HopfAlgebraData, Vec<u64>)> = vec![
        (sweedler(), vec![2]),
        (taft(2), vec![2]),
        (taft(3), vec![3]),
        (taft(4), vec![4]),
        (group_algebra(&symmetric(3)), vec![2]),
        (uqbar_sl2(3), vec![]),
        (uqbar_sl2(2), vec![2]),
    ];
    for (h, orders) in cases {
        let q = hab_quotient(&h).map_err(err)?;
        let cert = grouplike_certify(&h).map_err(err)?;
        let gac = hab_is_group_algebra(&h, &cert, &q).map_err(err)?;
        let dim: u64 = orders.iter().product();
        ensure(q.dim() as u64 == dim, || format!("{}: dim H_ab = {}", h.name, q.dim()))?;
        ensure(gac.is_group_algebra, || format!("{}: not a group algebra", h.name))?;
        ensure(primary_oracle(&gac.gbar) == orders, || format!("{}: group {:?}", h.name, primary_oracle(&gac.gbar)))?;
        ensure(q.quotient.is_commutative(), || format!("{}: quotient not commutative", h.name))?;
    }
    Ok("7 algebras".into())
}

fn c7_tinv() -> Outcome {
    let list = builtins();
    for h in &list {
        let tinv = tinv_solve(h).map_err(err)?;
        ensure(tinv_relation_failure(h, &tinv).is_none(), || h.name.to_string())?;
    }
    Ok(format!("{} algebras, every basis element", list.len()))
}

fn c8_theta() -> Outcome {
    let list: Vec<_> = builtins().into_iter().filter(|h| h.dim() <= 16).collect();
    for h in &list {
        let q = hab_quotient(h).map_err(err)?;
        let t = theta_pair(h, &q).map_err(err)?;
        ensure(t.theta_grouplike && t.theta_prime_grouplike, || format!("{}: not group-like", h.name))?;
        ensure(t.qtilde_product_is_one, || format!("{}: qtilde(Theta Theta') != 1", h.name))?;
    }
    Ok(format!("{} algebras of dimension <= 16", list.len()))
}

fn c9_dedekind() -> Outcome {
    let z3 = cyclic(3);
    let theta = dedekind_determinant(&z3, DEFAULT_DET_SIZE_LIMIT).map_err(err)?;
    let (e, a, b) = (var(3, 0), var(3, 1), var(3, 2));
    let circulant = &(&(&e.pow(3) + &a.pow(3)) + &b.pow(3)) - &(&(&e * &a) * &b).scale(&CycScalar::from_int(1, 3));
    ensure(theta == circulant, || format!("Theta_Z3 = {theta}"))?;
    let mut groups: Vec<FiniteGroup> = (1..=5).map(cyclic).collect();
    groups.push(symmetric(3));
    for g in &groups {
        let n = g.order();
        let sq = dedekind_determinant(g, DEFAULT_DET_SIZE_LIMIT).map_err(err)?.pow(2);
        for h in 0..n {
            let perm: Vec<usize> = (0..n).map(|x| g.mul(h, x)).collect();
            ensure(sq.map_vars(&perm, n) == sq, || format!("|G| = {n}: h = {h} moves Theta^2"))?;
        }
        let dict = coaction_action_dictionary_check(g, 10, 0).map_err(err)?;
        ensure(dict.all_pass(), || format!("|G| = {n}: dictionary {:?}", dict.failures.first()))?;
    }
    Ok("circulant, squares and dictionary".into())
}

fn c10_mu() -> Outcome {
    for h in [sweedler(), taft(3)] {
        let n = h.dim();
        let fh = FreeHopf::new(&h).map_err(err)?;
        for x in 0..n {
            let big = canonical_coinvariants(&h, x, None);
            let p = p_poly(&fh, x).map_err(err)?;
            ensure(mu(&h, &big) == CoactionValue::pure(&p, &h.unit), || format!("{}: mu(P_{x})", h.name))?;
            ensure(is_t_coinvariant(&h, &big), || format!("{}: P_{x} not coinvariant", h.name))?;
            for y in 0..n {
                let big = canonical_coinvariants(&h, x, Some(y));
                let qv = q_poly(&fh, x, y).map_err(err)?;
                ensure(mu(&h, &big) == CoactionValue::pure(&qv, &h.unit), || format!("{}: mu(Q_{x},{y})", h.name))?;
                ensure(is_t_coinvariant(&h, &big), || format!("{}: Q_{x},{y} not coinvariant", h.name))?;
            }
        }
    }
    let list = builtins();
    for h in &list {
        let q = hab_quotient(h).map_err(err)?;
        let rep = square_check_random(h, &q, 100, 4, 0).map_err(err)?;
        ensure(rep.samples == 100 && rep.failures.is_empty(), || format!("{}: square identity", h.name))?;
    }
    Ok(format!("canonical elements on sweedler, taft(3); square identity on {} algebras", list.len()))
}

/// Basis vectors `x` with `Δx = g⊗x + x⊗k` for group-like basis vectors.
fn skew_count_oracle(h: &HopfAlgebraData) -> usize {
    let gl: BTreeSet<usize> = h.grouplike_basis_indices().unwrap_or_default().into_iter().collect();
    (0..h.dim())
        .filter(|x| !gl.contains(x))
        .filter(|&x| {
            let terms = &h.comul[x];
            terms.len() == 2
                && terms
                    .iter()
                    .all(|(a, b, c)| c.is_one() && ((gl.contains(a) && *b == x) || (*a == x && gl.contains(b))))
        })
        .count()
}

fn c11_localization() -> Outcome {
    let mut total = 0;
    for h in [sweedler(), taft(3)] {
        let fh = FreeHopf::new(&h).map_err(err)?;
        let ws = all_localization_witnesses(&fh).map_err(err)?;
        let l = h.grouplike_basis_indices().map(|v| v.len()).unwrap_or(0);
        let s = skew_count_oracle(&h);
        let expected = l + l * l + s + s * l;
        ensure(ws.len() == expected, || format!("{}: {} witnesses, expected {expected}", h.name, ws.len()))?;
        let skew = ws.iter().filter(|w| matches!(w.case, WitnessCase::SkewPrimitive { .. })).count();
        ensure(skew == s + s * l, || format!("{}: {skew} skew-primitive witnesses", h.name))?;
        for w in &ws {
            ensure(w.holds, || format!("{}: {}", h.name, w.identity))?;
        }
        total += ws.len();
    }
    Ok(format!("{total} identities"))
}

/// Number of orbits of degree-`d` monomials under translation (Burnside).
fn orbit_count(g: &FiniteGroup, d: usize) -> usize {
    let n = g.order();
    let mut seen = BTreeSet::new();
    let mut orbits = 0;
    for e in monomials_of_degree(n, d) {
        if seen.contains(&e) {
            continue;
        }
        orbits += 1;
        for h in 0..n {
            let mut img = vec![0; n];
            for (x, &k) in e.iter().enumerate() {
                img[g.mul(h, x)] = k;
            }
            seen.insert(img);
        }
    }
    orbits
}

fn c12_iyer() -> Outcome {
    let mut dims = Vec::new();
    for n in [2, 3] {
        let g = cyclic(n);
        let rep = iyer_truncated_check(&g, 3).map_err(err)?;
        ensure(rep.degrees.len() == 4, || format!("Z{n}: {} degrees", rep.degrees.len()))?;
        for d in &rep.degrees {
            ensure(d.passed(), || format!("Z{n} degree {}: {d:?}", d.degree))?;
            let orbits = orbit_count(&g, d.degree);
            ensure(d.s_invariant_dim == orbits, || format!("Z{n} degree {}: orbit count {orbits}", d.degree))?;
            ensure(d.molien == Rational::from_integer((orbits as i64).into()), || format!("Z{n}: Molien"))?;
        }
        dims.push(format!("Z{n}: {:?}", rep.degrees.iter().map(|d| d.s_invariant_dim).collect::<Vec<_>>()));
    }
    Ok(dims.join(", "))
}

fn c13_noether() -> Outcome {
    for n in [2usize, 3] {
        let s = invariant_generators(&cyclic(n), n).map_err(err)?;
        ensure(s.top_degree() == n, || format!("Z{n}: top degree {}", s.top_degree()))?;
    }
    let v4 = builtin_group("V4").ok_or("no V4")?;
    let s = invariant_generators(&v4, 4).map_err(err)?;
    let by_degree: BTreeMap<usize, usize> = s.generators_by_degree.iter().map(|(d, g)| (*d, g.len())).collect();
    ensure(s.top_degree() < 4, || format!("V4: top degree {}", s.top_degree()))?;
    ensure(by_degree.get(&4).copied().unwrap_or(0) == 0, || "V4: new generator in degree 4".into())?;
    Ok(format!("Z2 -> 2, Z3 -> 3, V4 generators by degree {by_degree:?}"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 13] = [
        ("Hopf axiom suite", c1_axioms),
        ("Sweedler presentation monoid", c2_sweedler_monoid),
        ("Sweedler coinvariance census", c3_census),
        ("presentation counts and bounds", c4_counts),
        ("lattice oracle equivalence", c5_lattice),
        ("H_ab values", c6_hab),
        ("inverse variable relations", c7_tinv),
        ("localizing determinants", c8_theta),
        ("group determinant machinery", c9_dedekind),
        ("universal comodule map", c10_mu),
        ("localization witnesses", c11_localization),
        ("truncated invariant comparison", c12_iyer),
        ("Noether bound", c13_noether),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = f();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2}: PASS  {name} ({detail}) [{secs:.1}s]", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {name}: {why} [{secs:.1}s]", i + 1);
            }
        }
    }
    println!("acceptance: {}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
