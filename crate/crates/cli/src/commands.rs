//! Command implementations. Each command assembles a [`RunReport`] from
//! reusable sections.

use std::collections::BTreeMap;
use std::path::Path;

use anyhow::{anyhow, bail, Context as _, Result};
use hopfgen_core::freehopf::{
    antipode_squared_holds, is_grouplike_s, t_of, theta_pair_with_limit, tinv_relation_failure, CoactionValue,
    FracElem, FreeHopf, LaurentPoly,
};
use hopfgen_core::genbase::{
    all_localization_witnesses, build_presentation, default_gamma, monoid_membership, p_poly, q_poly, verify_gamma,
    verify_generator_coinvariance, GammaCertificate, GammaSource, GeneratorKind, PresentationBH, WitnessCase,
};
use hopfgen_core::groups::{
    abelianization, builtin_group, dedekind_determinant, lattice_basis_paper, lattice_equals_oracle, primary_decompose,
    BasisTag, FiniteGroup,
};
use hopfgen_core::hopf::{
    functions_on_group, group_algebra, grouplike_certify, hab_is_group_algebra, hab_quotient, sweedler, taft,
    uqbar_sl2, verify_hopf, Axiom, GroupAlgebraCheck, GroupLikeCertificate, HopfAlgebraData, QuotientHopf,
};
use hopfgen_core::noether::{
    coaction_action_dictionary_check, invariant_generators, molien_agrees, theta_invariance_check,
};
use hopfgen_core::pitheory::{
    canonical_coinvariants, identities_in_degree, is_identity, is_t_coinvariant, iyer_truncated_check, mu,
    mu_is_colinear_on, square_check_random, NcPoly,
};
use hopfgen_core::scalars::parse_scalar;
use hopfgen_core::Error as CoreError;
use serde_json::{json, Value};

use crate::report::RunReport;
use crate::schema::{parse_gamma, parse_hopf, read_text};

/// Size knobs shared by all commands.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Options {
    pub seed: u64,
    pub max_degree: usize,
    pub det_size_limit: usize,
}

impl Default for Options {
    fn default() -> Self {
        Options { seed: 0, max_degree: 4, det_size_limit: 8 }
    }
}

/// Random words sampled by the square identity.
pub const SQUARE_SAMPLES: usize = 100;
pub const SQUARE_WORD_LEN: usize = 4;
/// Random polynomials sampled by the coaction/action dictionary.
pub const DICTIONARY_SAMPLES: usize = 20;
/// Largest word count enumerated when searching for identities.
const IDENTITY_WORD_LIMIT: usize = 4096;

fn params(opts: &Options, extra: &[(&str, Value)]) -> BTreeMap<String, Value> {
    let mut p = BTreeMap::new();
    p.insert("det_size_limit".into(), json!(opts.det_size_limit));
    p.insert("max_degree".into(), json!(opts.max_degree));
    for (k, v) in extra {
        p.insert((*k).into(), v.clone());
    }
    p
}

/// A Hopf algebra loaded from disk with its raw bytes.
pub struct Input {
    pub path: String,
    pub text: String,
    pub hopf: HopfAlgebraData,
}

pub fn load_input(path: &Path) -> Result<Input> {
    let text = read_text(path)?;
    let name = path.display().to_string();
    let hopf = parse_hopf(&text, &name)?;
    Ok(Input { path: name, text, hopf })
}

fn file_name(path: &str) -> Value {
    json!(Path::new(path).file_name().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default())
}

fn lookup_group(name: &str) -> Result<FiniteGroup> {
    builtin_group(name).ok_or_else(|| anyhow!("unknown group `{name}` (try trivial, Z<n>, D<n>, S3, Q8, V4)"))
}

/// Builds a named built-in Hopf algebra: `sweedler`, `taft<n>`,
/// `uqbar<e>`, `kG:<group>` or `OG:<group>`.
pub fn builtin_hopf(name: &str) -> Result<HopfAlgebraData> {
    let num = |s: &str| s.parse::<usize>().ok().filter(|&n| (2..=8).contains(&n));
    if name == "sweedler" {
        return Ok(sweedler());
    }
    if let Some(n) = name.strip_prefix("taft").and_then(num) {
        return Ok(taft(n));
    }
    if let Some(e) = name.strip_prefix("uqbar").and_then(num) {
        return Ok(uqbar_sl2(e));
    }
    if let Some(g) = name.strip_prefix("kG:") {
        return Ok(group_algebra(&lookup_group(g)?));
    }
    if let Some(g) = name.strip_prefix("OG:") {
        return Ok(functions_on_group(&lookup_group(g)?));
    }
    bail!("unknown built-in `{name}` (try sweedler, taft<n>, uqbar<e>, kG:<group>, OG:<group>)")
}

fn is_size_limit(e: &CoreError) -> bool {
    matches!(e, CoreError::SizeLimit { .. })
}

fn poly_str(p: &LaurentPoly, names: &[String]) -> String {
    p.to_string_with(names)
}

fn frac_str(f: &FracElem, names: &[String]) -> String {
    let den = f.den();
    if den.as_constant().is_some_and(|c| c.is_one()) {
        poly_str(f.num(), names)
    } else {
        format!("({}) / ({})", poly_str(f.num(), names), poly_str(den, names))
    }
}

/// `t_g`, or `t_{g^2}` when the label needs grouping.
fn t_name(label: &str) -> String {
    if label.chars().all(char::is_alphanumeric) {
        format!("t_{label}")
    } else {
        format!("t_{{{label}}}")
    }
}

fn t_names(h: &HopfAlgebraData) -> Vec<String> {
    t_names_of(&h.labels)
}

fn t_names_of(labels: &[String]) -> Vec<String> {
    labels.iter().map(|l| t_name(l)).collect()
}

fn x_names(h: &HopfAlgebraData) -> Vec<String> {
    h.labels.clone()
}

// ---------------------------------------------------------------- sections

pub fn section_axioms(r: &mut RunReport, h: &HopfAlgebraData) -> Result<()> {
    let rep = verify_hopf(h)?;
    for axiom in Axiom::ALL {
        let f = rep.failure(axiom);
        r.check(
            "hopf-axioms",
            axiom.name(),
            f.is_none(),
            f.map(|f| format!("{} ({} failing entries)", f.witness, f.count)),
        );
    }
    r.artifact("hopf", json!({ "name": h.name, "dim": h.dim(), "cyclotomic_order": h.order, "basis": h.labels }));
    Ok(())
}

pub fn section_grouplikes(r: &mut RunReport, h: &HopfAlgebraData) -> Result<Option<GroupLikeCertificate>> {
    match grouplike_certify(h) {
        Ok(cert) => {
            let g = &cert.group;
            r.check("grouplikes", "declared group-likes form a group", true, None);
            r.check("grouplikes", "group-likes span the coradical", cert.pointed, None);
            r.artifact(
                "grouplikes",
                json!({
                    "order": g.order(),
                    "names": g.labels(),
                    "abelian": g.is_abelian(),
                    "element_orders": (0..g.order()).map(|i| g.element_order(i)).collect::<Vec<_>>(),
                    "coradical_dim": cert.coradical_dim,
                    "pointed": cert.pointed,
                }),
            );
            Ok(Some(cert))
        }
        Err(e) if is_size_limit(&e) => Err(e.into()),
        Err(CoreError::UndeclaredCoradical { coradical_dim, declared }) => {
            r.check("grouplikes", "declared group-likes form a group", true, None);
            r.check(
                "grouplikes",
                "group-likes span the coradical",
                false,
                Some(format!("coradical has dimension {coradical_dim}, {declared} group-likes declared")),
            );
            Ok(None)
        }
        Err(e) => {
            r.check("grouplikes", "declared group-likes form a group", false, Some(e.to_string()));
            Ok(None)
        }
    }
}

pub fn section_hab(
    r: &mut RunReport,
    h: &HopfAlgebraData,
    cert: Option<&GroupLikeCertificate>,
) -> Result<(QuotientHopf, Option<GroupAlgebraCheck>)> {
    let q = hab_quotient(h)?;
    let qa = &q.quotient;
    let hopf_ok = verify_hopf(qa)?.all_pass();
    r.check("commutative-pointed", "H_ab is a commutative Hopf algebra", hopf_ok && qa.is_commutative(), None);
    let mut art =
        json!({ "dim": qa.dim(), "basis_preimages": q.section.iter().map(|&i| &h.labels[i]).collect::<Vec<_>>() });
    let mut gac_out = None;
    if let Some(cert) = cert {
        let gac = hab_is_group_algebra(h, cert, &q)?;
        if cert.pointed {
            r.check(
                "commutative-pointed",
                "H_ab is the group algebra of the image of G(H)",
                gac.is_group_algebra,
                gac.witness.clone(),
            );
        }
        let dec = primary_decompose(&gac.gbar).ok();
        art["is_group_algebra"] = json!(gac.is_group_algebra);
        art["image_group"] = json!({
            "order": gac.gbar.order(),
            "names": gac.gbar.labels(),
            "primary_orders": dec.map(|d| d.primary_orders()),
        });
        art["surjection"] = json!(gac.surjection.iter().map(|&k| gac.gbar.label(k)).collect::<Vec<_>>());
        gac_out = Some(gac);
    }
    r.artifact("hab", art);
    Ok((q, gac_out))
}

pub fn section_free(
    r: &mut RunReport,
    h: &HopfAlgebraData,
    q: &QuotientHopf,
    cert: Option<&GroupLikeCertificate>,
    opts: &Options,
) -> Result<FreeHopf> {
    let fh = FreeHopf::with_limit(h, opts.det_size_limit)?;
    let names = t_names(h);
    let fail = tinv_relation_failure(h, &fh.tinv);
    r.check(
        "free-hopf-inverse",
        "t_x1 t^-1_x2 = eps(x) = t^-1_x1 t_x2",
        fail.is_none(),
        fail.map(|i| h.labels[i].clone()),
    );
    r.check("free-hopf-inverse", "S(S(t_x)) = t_x", antipode_squared_holds(h, &fh.tinv)?, None);
    let theta = theta_pair_with_limit(h, q, opts.det_size_limit)?;
    r.check("localization-units", "Delta(Theta) = Theta (x) Theta", theta.theta_grouplike, None);
    r.check("localization-units", "Delta(Theta') = Theta' (x) Theta'", theta.theta_prime_grouplike, None);
    r.check(
        "localization-units",
        "qtilde(Theta Theta') = 1",
        theta.qtilde_product_is_one,
        (!theta.qtilde_product_is_one).then(|| q.quotient.format_elem(&theta.qtilde_product)),
    );
    if let Some(cert) = cert {
        let mut bad = None;
        for (i, g) in cert.elements.iter().enumerate() {
            if !is_grouplike_s(h, &t_of(h, g))? {
                bad = Some(cert.group.label(i).to_string());
                break;
            }
        }
        r.check("free-hopf-pointed", "t_g is group-like for every g in G(H)", bad.is_none(), bad);
    }
    let tinv: BTreeMap<&str, String> =
        h.labels.iter().zip(&fh.tinv).map(|(l, f)| (l.as_str(), frac_str(f, &names))).collect();
    r.artifact(
        "free_hopf",
        json!({
            "invertible": h.labels.iter().zip(&fh.ring.invertible).filter(|(_, &b)| b).map(|(l, _)| l).collect::<Vec<_>>(),
            "tinv": tinv,
            "theta": poly_str(&theta.theta, &names),
            "theta_prime": poly_str(&theta.theta_prime, &names),
        }),
    );
    Ok(fh)
}

pub fn section_coinvariance(r: &mut RunReport, fh: &FreeHopf, kinds: &[GeneratorKind]) -> Result<()> {
    let rep = verify_generator_coinvariance(fh, kinds)?;
    for &kind in kinds {
        let prefix = format!("{kind}(");
        let fails: Vec<_> = rep.failures.iter().filter(|f| f.generator.starts_with(&prefix)).collect();
        r.check(
            "generators-coinvariant",
            format!("{kind} is coinvariant on all basis arguments"),
            fails.is_empty(),
            fails.first().map(|f| format!("{}: {}", f.generator, f.reason)),
        );
    }
    r.artifact(
        "coinvariance",
        json!({ "checked": rep.checked, "kinds": kinds.iter().map(|k| k.name()).collect::<Vec<_>>(), "failures": rep.failures.len() }),
    );
    Ok(())
}

fn record_gamma(r: &mut RunReport, g: &GammaCertificate) {
    for c in &g.checks {
        r.check("retraction", c.predicate.name(), c.passed, c.witness.clone());
    }
}

fn presentation_json(pres: &PresentationBH, h: &HopfAlgebraData, cert: &GroupLikeCertificate) -> Value {
    let names = t_names(h);
    let mono = |i: usize, v: &Vec<i64>| json!({ "exponents": v, "monomial": poly_str(&pres.generator_poly(i, h.order), &names) });
    let laurent: Vec<Value> = pres
        .laurent_gens
        .iter()
        .enumerate()
        .map(|(i, v)| {
            let mut m = mono(i, v);
            m["source"] = json!(match pres.lattice.tags.get(i) {
                Some(BasisTag::Identity) => "identity".to_string(),
                Some(BasisTag::SigmaPower(k)) => format!("power of {}", cert.group.label(pres.lattice.lifts[*k])),
                Some(BasisTag::U(g)) => format!("u({})", cert.group.label(*g)),
                None => "lattice".to_string(),
            });
            m
        })
        .collect();
    let ell = pres.laurent_gens.len();
    let poly: Vec<Value> = pres
        .poly_gens
        .iter()
        .enumerate()
        .map(|(i, v)| {
            let mut m = mono(ell + i, v);
            if let Some(&(b, g)) = pres.poly_sources.get(i) {
                m["basis"] = json!(h.labels[b]);
                m["group_part"] = json!(h.labels[g]);
            }
            m
        })
        .collect();
    json!({
        "n": pres.n,
        "ell": pres.ell,
        "d": pres.d,
        "r": pres.r,
        "degree_bound": pres.degree_bound,
        "image_group_order": pres.gbar_order,
        "laurent_generators": laurent,
        "polynomial_generators": poly,
        "gamma_source": match pres.gamma.source { GammaSource::Default => "default", GammaSource::Explicit => "explicit" },
        "jacobian_rank": pres.jacobian_rank,
        "seed": pres.seed,
    })
}

/// Builds and certifies the presentation. Returns `Ok(None)` when an
/// explicit retraction fails its predicates (recorded as failing checks).
pub fn section_presentation(
    r: &mut RunReport,
    fh: &FreeHopf,
    cert: &GroupLikeCertificate,
    gac: &GroupAlgebraCheck,
    gamma: Option<&[hopfgen_core::hopf::Elem]>,
    opts: &Options,
) -> Result<Option<PresentationBH>> {
    let h = &fh.h;
    let pres = match build_presentation(fh, cert, gac, gamma, opts.seed) {
        Ok(p) => p,
        Err(CoreError::GammaInvalid(_)) if gamma.is_some() => {
            let g = verify_gamma(h, cert, &fh.q, gamma.unwrap(), GammaSource::Explicit)?;
            record_gamma(r, &g);
            return Ok(None);
        }
        Err(e) => return Err(e.into()),
    };
    record_gamma(r, &pres.gamma);
    r.check(
        "presentation-degrees",
        "number of Laurent generators equals |G(H)|",
        pres.laurent_gens.len() == pres.ell && pres.ell == cert.group.order(),
        None,
    );
    r.check(
        "presentation-degrees",
        "Laurent generators have degree <= d - r + 1",
        pres.max_laurent_degree() <= pres.degree_bound as i64,
        Some(format!("max degree {} vs bound {}", pres.max_laurent_degree(), pres.degree_bound)),
    );
    r.check(
        "polynomial-generators",
        "number of polynomial generators equals n - l",
        pres.poly_gens.len() == pres.n - pres.ell,
        None,
    );
    r.check(
        "polynomial-generators",
        "polynomial generators have degree <= 2",
        pres.max_poly_degree() <= 2,
        Some(format!("max degree {}", pres.max_poly_degree())),
    );
    let dec = primary_decompose(&gac.gbar)?;
    r.check(
        "lattice-basis",
        "|det| of the lattice basis equals |image group|",
        pres.lattice.abs_det() == pres.gbar_order.into(),
        Some(format!("|det| = {}", pres.lattice.abs_det())),
    );
    r.check(
        "lattice-basis",
        "lattice basis spans the kernel lattice",
        lattice_equals_oracle(&pres.lattice, &cert.group, &gac.surjection, &dec),
        None,
    );
    let non_coinv: Vec<String> =
        pres.non_coinvariant.iter().map(|&i| pres.generator_poly(i, h.order).to_string_with(&t_names(h))).collect();
    r.check(
        "generators-coinvariant",
        "presentation generators are coinvariant",
        non_coinv.is_empty(),
        non_coinv.first().cloned(),
    );
    r.check(
        "pointed-presentation",
        "generators are algebraically independent",
        pres.jacobian_rank == pres.n,
        Some(format!("jacobian rank {} of {}", pres.jacobian_rank, pres.n)),
    );
    let n = h.dim();
    let mut bad_p = None;
    for x in 0..n {
        if !monoid_membership(&p_poly(fh, x)?, &pres) {
            bad_p = Some(format!("p_{}", h.labels[x]));
            break;
        }
    }
    r.check("pointed-presentation", "every monomial of p_x lies in the presented monoid", bad_p.is_none(), bad_p);
    let mut bad_q = None;
    'outer: for x in 0..n {
        for y in 0..n {
            if !monoid_membership(&q_poly(fh, x, y)?, &pres) {
                bad_q = Some(format!("q_{{{},{}}}", h.labels[x], h.labels[y]));
                break 'outer;
            }
        }
    }
    r.check("pointed-presentation", "every monomial of q_xy lies in the presented monoid", bad_q.is_none(), bad_q);
    r.artifact("presentation", presentation_json(&pres, h, cert));
    Ok(Some(pres))
}

pub fn section_localization(r: &mut RunReport, fh: &FreeHopf) -> Result<()> {
    let ws = all_localization_witnesses(fh)?;
    let (mut gl, mut sk) = (0, 0);
    for w in &ws {
        match w.case {
            WitnessCase::GroupLike => gl += 1,
            WitnessCase::SkewPrimitive { .. } => sk += 1,
        }
        r.check("localization-formulas", w.identity.clone(), w.holds, None);
    }
    r.artifact("localization", json!({ "group_like_witnesses": gl, "skew_primitive_witnesses": sk }));
    Ok(())
}

fn first_failure(labels: impl Iterator<Item = (String, bool)>) -> Option<String> {
    labels.into_iter().find(|(_, ok)| !ok).map(|(l, _)| l)
}

pub fn section_pi(r: &mut RunReport, h: &HopfAlgebraData, q: &QuotientHopf, opts: &Options) -> Result<()> {
    let n = h.dim();
    let fh = FreeHopf::with_limit(h, opts.det_size_limit)?;
    let one = &h.unit;
    let mut mu_p = Vec::new();
    let mut t_co = Vec::new();
    for x in 0..n {
        let big_p = canonical_coinvariants(h, x, None);
        let p = p_poly(&fh, x)?;
        mu_p.push((format!("P_{}", h.labels[x]), mu(h, &big_p) == CoactionValue::pure(&p, one)));
        t_co.push((format!("P_{}", h.labels[x]), is_t_coinvariant(h, &big_p)));
    }
    let mut mu_q = Vec::new();
    for x in 0..n {
        for y in 0..n {
            let big_q = canonical_coinvariants(h, x, Some(y));
            let q = q_poly(&fh, x, y)?;
            let label = format!("Q_{{{},{}}}", h.labels[x], h.labels[y]);
            mu_q.push((label.clone(), mu(h, &big_q) == CoactionValue::pure(&q, one)));
            t_co.push((label, is_t_coinvariant(h, &big_q)));
        }
    }
    let f = first_failure(mu_p.into_iter());
    r.check("canonical-coinvariants", "mu(P_x) = p_x (x) 1 for every basis x", f.is_none(), f);
    let f = first_failure(mu_q.into_iter());
    r.check("canonical-coinvariants", "mu(Q_xy) = q_xy (x) 1 for every basis pair", f.is_none(), f);
    let f = first_failure(t_co.into_iter());
    r.check("canonical-coinvariants", "P_x and Q_xy are coinvariant in the tensor algebra", f.is_none(), f);

    let sq = square_check_random(h, q, SQUARE_SAMPLES, SQUARE_WORD_LEN, opts.seed)?;
    r.check(
        "coideal-subalgebra",
        format!("(id (x) q) mu = delta pi on {} random words", sq.samples),
        sq.failures.is_empty(),
        sq.failures.first().map(|p| p.to_string_with(&x_names(h))),
    );

    let mut dims = BTreeMap::new();
    let mut id_fail = None;
    let mut colinear_fail = None;
    for d in 1..=opts.max_degree {
        if n.checked_pow(d as u32).is_none_or(|w| w > IDENTITY_WORD_LIMIT) {
            break;
        }
        let ids = identities_in_degree(h, d)?;
        dims.insert(d.to_string(), ids.len());
        for p in &ids {
            if id_fail.is_none() && !is_identity(h, p) {
                id_fail = Some(p.to_string_with(&x_names(h)));
            }
        }
    }
    r.check("comodule-map", "mu vanishes on the computed identities", id_fail.is_none(), id_fail);
    for x in 0..n {
        for y in 0..n {
            let w = NcPoly::word(n, h.order, vec![x, y], hopfgen_core::CycScalar::one(h.order));
            if colinear_fail.is_none() && !mu_is_colinear_on(h, &w) {
                colinear_fail = Some(w.to_string_with(&x_names(h)));
            }
        }
    }
    r.check("comodule-map", "mu is colinear on all words of length 2", colinear_fail.is_none(), colinear_fail);
    r.artifact("identities", json!({ "dimension_by_degree": dims }));
    Ok(())
}

pub fn section_lattice(r: &mut RunReport, g: &FiniteGroup) -> Result<()> {
    let (ab, proj) = abelianization(g);
    let dec = primary_decompose(&ab)?;
    let basis = lattice_basis_paper(g, &proj, &dec)?;
    let bound = dec.d() as i64 - dec.r() as i64 + 1;
    r.check(
        "lattice-basis",
        "|det| of the lattice basis equals |G_ab|",
        basis.abs_det() == dec.group_order().into(),
        Some(format!("|det| = {}", basis.abs_det())),
    );
    r.check(
        "lattice-basis",
        "lattice basis spans the kernel lattice",
        lattice_equals_oracle(&basis, g, &proj, &dec),
        None,
    );
    r.check(
        "presentation-degrees",
        "basis monomials have degree <= d - r + 1",
        basis.max_degree() <= bound,
        Some(format!("max degree {} vs bound {bound}", basis.max_degree())),
    );
    let names = t_names_of(g.labels());
    let cols: Vec<Value> = basis
        .columns
        .iter()
        .zip(&basis.tags)
        .map(|(c, tag)| {
            let mono: Vec<String> = c
                .iter()
                .enumerate()
                .filter(|(_, &e)| e != 0)
                .map(|(i, &e)| if e == 1 { names[i].clone() } else { format!("{}^{e}", names[i]) })
                .collect();
            let source = match tag {
                BasisTag::Identity => "identity".to_string(),
                BasisTag::SigmaPower(k) => format!("power of {}", g.label(basis.lifts[*k])),
                BasisTag::U(h) => format!("u({})", g.label(*h)),
            };
            json!({ "exponents": c, "monomial": mono.join("*"), "source": source })
        })
        .collect();
    r.artifact(
        "lattice",
        json!({
            "group_order": g.order(),
            "abelianization_primary_orders": dec.primary_orders(),
            "d": dec.d(),
            "r": dec.r(),
            "degree_bound": bound,
            "lifts": basis.lifts.iter().map(|&i| g.label(i)).collect::<Vec<_>>(),
            "basis": cols,
        }),
    );
    Ok(())
}

pub fn section_dedekind_group(r: &mut RunReport, g: &FiniteGroup, opts: &Options) -> Result<()> {
    let theta = dedekind_determinant(g, opts.det_size_limit)?;
    let names = t_names_of(g.labels());
    let rep = theta_invariance_check(g)?;
    r.check(
        "dedekind-determinant",
        "h Theta^2 = Theta^2 for every h",
        rep.square_failure.is_none(),
        rep.square_failure.map(|h| g.label(h).to_string()),
    );
    let chars: BTreeMap<&str, Value> =
        (0..g.order()).map(|h| (g.label(h), rep.character[h].map_or(Value::Null, |c| json!(c)))).collect();
    let dict = coaction_action_dictionary_check(g, DICTIONARY_SAMPLES, opts.seed)?;
    r.check(
        "noether-dictionary",
        "coaction of O(G) matches the regular action",
        dict.all_pass(),
        dict.failures.first().cloned(),
    );
    r.artifact(
        "dedekind",
        json!({
            "theta": poly_str(&theta, &names),
            "degree": theta.total_degree(),
            "terms": theta.len(),
            "translation_character": chars,
            "dictionary_samples": dict.samples,
        }),
    );
    Ok(())
}

pub fn section_noether(r: &mut RunReport, g: &FiniteGroup, opts: &Options) -> Result<()> {
    let slice = invariant_generators(g, opts.max_degree)?;
    r.check("invariant-generators", "invariant dimensions agree with the Molien series", molien_agrees(&slice), None);
    let top = slice.top_degree();
    let cyclic = (0..g.order()).any(|a| g.element_order(a) == g.order());
    if cyclic && opts.max_degree >= g.order() {
        r.check(
            "invariant-generators",
            "cyclic group: top generator degree equals |G|",
            top == g.order(),
            Some(format!("top degree {top}")),
        );
    }
    let names = t_names_of(g.labels());
    let gens: BTreeMap<String, Vec<String>> = slice
        .generators_by_degree
        .iter()
        .map(|(d, ps)| (d.to_string(), ps.iter().map(|p| poly_str(p, &names)).collect()))
        .collect();
    let dims: BTreeMap<String, Value> = slice
        .dims_by_degree
        .iter()
        .map(|(d, (inv, dec))| (d.to_string(), json!({ "invariants": inv, "decomposable": dec })))
        .collect();
    r.artifact(
        "noether",
        json!({
            "group_order": g.order(),
            "max_degree": opts.max_degree,
            "top_generator_degree": top,
            "generator_count": slice.generator_count(),
            "generators": gens,
            "dimensions": dims,
        }),
    );
    Ok(())
}

pub fn section_iyer(r: &mut RunReport, g: &FiniteGroup, opts: &Options) -> Result<()> {
    let rep = iyer_truncated_check(g, opts.max_degree)?;
    let mut rows = Vec::new();
    for d in &rep.degrees {
        r.check(
            "invariant-comparison",
            format!("degree {}: mu = pi on coinvariants and pi onto invariants", d.degree),
            d.passed(),
            Some(format!(
                "T-coinvariants {}, S-invariants {}, pi rank {}, Molien {}",
                d.t_coinvariant_dim, d.s_invariant_dim, d.pi_image_rank, d.molien
            )),
        );
        rows.push(json!({
            "degree": d.degree,
            "t_coinvariant_dim": d.t_coinvariant_dim,
            "s_invariant_dim": d.s_invariant_dim,
            "pi_image_rank": d.pi_image_rank,
            "molien": d.molien.to_string(),
            "mu_equals_pi": d.mu_equals_pi,
            "s_coinvariant": d.s_coinvariant,
        }));
    }
    r.artifact("iyer", json!({ "group_order": rep.group_order, "degrees": rows }));
    Ok(())
}

// ---------------------------------------------------------------- commands

fn hopf_report(cmd: &str, input: &Input, opts: &Options, extra: &[(&str, Value)], digest_extra: &[u8]) -> RunReport {
    let mut ex = vec![("input", file_name(&input.path))];
    ex.extend_from_slice(extra);
    let mut bytes = input.text.as_bytes().to_vec();
    bytes.extend_from_slice(digest_extra);
    RunReport::new(cmd, params(opts, &ex), &bytes, opts.seed)
}

fn group_report(cmd: &str, g: &str, opts: &Options) -> RunReport {
    RunReport::new(cmd, params(opts, &[("group", json!(g))]), g.as_bytes(), opts.seed)
}

pub fn check_hopf(input: &Input, opts: &Options) -> Result<RunReport> {
    let mut r = hopf_report("check-hopf", input, opts, &[], b"");
    section_axioms(&mut r, &input.hopf)?;
    Ok(r)
}

pub fn grouplikes(input: &Input, opts: &Options) -> Result<RunReport> {
    let mut r = hopf_report("grouplikes", input, opts, &[], b"");
    section_grouplikes(&mut r, &input.hopf)?;
    Ok(r)
}

pub fn hab(input: &Input, opts: &Options) -> Result<RunReport> {
    let mut r = hopf_report("hab", input, opts, &[], b"");
    let cert = section_grouplikes(&mut r, &input.hopf)?;
    section_hab(&mut r, &input.hopf, cert.as_ref())?;
    Ok(r)
}

fn pointed_chain(
    r: &mut RunReport,
    h: &HopfAlgebraData,
) -> Result<(GroupLikeCertificate, QuotientHopf, GroupAlgebraCheck)> {
    let cert =
        section_grouplikes(r, h)?.ok_or_else(|| anyhow!("{} is not pointed with the declared group-likes", h.name))?;
    let (q, gac) = section_hab(r, h, Some(&cert))?;
    Ok((cert, q, gac.expect("certificate given")))
}

pub fn generic_base(input: &Input, gamma: Option<(&str, &str)>, opts: &Options) -> Result<RunReport> {
    let extra: Vec<(&str, Value)> = gamma.iter().map(|(p, _)| ("gamma", file_name(p))).collect();
    let mut r = hopf_report("generic-base", input, opts, &extra, gamma.map_or(&b""[..], |(_, t)| t.as_bytes()));
    let h = &input.hopf;
    let (cert, q, gac) = pointed_chain(&mut r, h)?;
    let fh = section_free(&mut r, h, &q, Some(&cert), opts)?;
    let gamma_vec = match gamma {
        Some((path, text)) => Some(parse_gamma(text, path, h, &default_gamma(h, &cert)?)?),
        None => None,
    };
    section_presentation(&mut r, &fh, &cert, &gac, gamma_vec.as_deref(), opts)?;
    Ok(r)
}

pub fn lattice(group: &str, opts: &Options) -> Result<RunReport> {
    let g = lookup_group(group)?;
    let mut r = group_report("lattice", group, opts);
    section_lattice(&mut r, &g)?;
    Ok(r)
}

pub fn dedekind_group(group: &str, opts: &Options) -> Result<RunReport> {
    let g = lookup_group(group)?;
    let mut r = group_report("dedekind", group, opts);
    section_dedekind_group(&mut r, &g, opts)?;
    Ok(r)
}

pub fn dedekind_input(input: &Input, opts: &Options) -> Result<RunReport> {
    let mut r = hopf_report("dedekind", input, opts, &[], b"");
    let q = hab_quotient(&input.hopf)?;
    section_free(&mut r, &input.hopf, &q, None, opts)?;
    Ok(r)
}

pub fn noether(group: &str, opts: &Options) -> Result<RunReport> {
    let g = lookup_group(group)?;
    let mut r = group_report("noether", group, opts);
    section_noether(&mut r, &g, opts)?;
    Ok(r)
}

pub fn iyer_check(group: &str, opts: &Options) -> Result<RunReport> {
    let g = lookup_group(group)?;
    let mut r = group_report("iyer-check", group, opts);
    section_iyer(&mut r, &g, opts)?;
    Ok(r)
}

pub fn parse_kinds(list: &[String]) -> Result<Vec<GeneratorKind>> {
    if list.is_empty() {
        return Ok(GeneratorKind::ALL.to_vec());
    }
    list.iter()
        .map(|s| {
            GeneratorKind::parse(s)
                .ok_or_else(|| anyhow!("unknown generator kind `{s}` (sigma, sigma_inv, p, q, p_prime, q_prime)"))
        })
        .collect()
}

pub fn coinvariance(input: &Input, kinds: &[GeneratorKind], opts: &Options) -> Result<RunReport> {
    let names: Vec<&str> = kinds.iter().map(|k| k.name()).collect();
    let mut r = hopf_report("coinvariance", input, opts, &[("kinds", json!(names))], b"");
    let fh = FreeHopf::with_limit(&input.hopf, opts.det_size_limit)?;
    section_coinvariance(&mut r, &fh, kinds)?;
    Ok(r)
}

/// Parses `[[["g","v"], "1"], [["v","g"], "-1"]]`: a list of
/// (word of basis labels, scalar) pairs.
pub fn parse_ncpoly(text: &str, path: &str, h: &HopfAlgebraData) -> Result<NcPoly> {
    let raw: Vec<(Vec<String>, String)> = serde_json::from_str(text).map_err(|e| crate::schema::json_error(path, e))?;
    let n = h.dim();
    let mut p = NcPoly::zero(n, h.order);
    for (i, (word, c)) in raw.iter().enumerate() {
        let w = word
            .iter()
            .map(|l| h.index_of(l).ok_or_else(|| anyhow!("{path}: term [{i}]: unknown basis label `{l}`")))
            .collect::<Result<Vec<_>>>()?;
        let c = parse_scalar(c, h.order).with_context(|| format!("{path}: term [{i}]"))?;
        p.add_term(w, &c);
    }
    Ok(p)
}

pub fn pi_identity(input: &Input, poly: Option<(&str, &str)>, opts: &Options) -> Result<RunReport> {
    let extra: Vec<(&str, Value)> = poly.iter().map(|(p, _)| ("poly", file_name(p))).collect();
    let mut r = hopf_report("pi-identity", input, opts, &extra, poly.map_or(&b""[..], |(_, t)| t.as_bytes()));
    let h = &input.hopf;
    match poly {
        Some((path, text)) => {
            let p = parse_ncpoly(text, path, h)?;
            let ident = is_identity(h, &p);
            r.check("comodule-map", "the polynomial is an identity (mu(P) = 0)", ident, None);
            r.check("comodule-map", "mu is colinear on the polynomial", mu_is_colinear_on(h, &p), None);
            let m = mu(h, &p);
            let names = t_names(h);
            let comps: BTreeMap<&str, String> = h
                .labels
                .iter()
                .zip(&m.components)
                .filter(|(_, c)| !c.is_zero())
                .map(|(l, c)| (l.as_str(), poly_str(c, &names)))
                .collect();
            r.artifact(
                "polynomial",
                json!({ "input": p.to_string_with(&x_names(h)), "mu": comps, "t_coinvariant": is_t_coinvariant(h, &p) }),
            );
        }
        None => {
            let q = hab_quotient(h)?;
            section_pi(&mut r, h, &q, opts)?;
        }
    }
    Ok(r)
}

/// Every section that applies to the input, with independent parts run
/// on separate threads. Sections whose hypotheses fail are listed under
/// the `skipped` artifact.
pub fn report_all(input: &Input, opts: &Options) -> Result<RunReport> {
    let h = &input.hopf;
    let base = hopf_report("report-all", input, opts, &[], b"");
    let fresh = || RunReport { checks: Vec::new(), artifacts: BTreeMap::new(), ..base.clone() };

    let (axioms, pi, main) = std::thread::scope(|s| {
        let a = s.spawn(|| {
            let mut r = fresh();
            section_axioms(&mut r, h).map(|_| r)
        });
        let p = s.spawn(|| {
            let mut r = fresh();
            let q = hab_quotient(h)?;
            section_pi(&mut r, h, &q, opts).map(|_| r)
        });
        let m = s.spawn(|| report_all_main(fresh(), h, opts));
        (a.join(), p.join(), m.join())
    });
    let join = |res: std::thread::Result<Result<RunReport>>| res.unwrap_or_else(|_| Err(anyhow!("worker panicked")));
    let mut out = base.clone();
    for part in [join(axioms)?, join(main)?, join(pi)?] {
        out.checks.extend(part.checks);
        out.artifacts.extend(part.artifacts);
    }
    Ok(out)
}

fn skip(skipped: &mut BTreeMap<String, String>, section: &str, e: impl std::fmt::Display) {
    skipped.insert(section.into(), e.to_string());
}

fn report_all_main(mut r: RunReport, h: &HopfAlgebraData, opts: &Options) -> Result<RunReport> {
    let mut skipped = BTreeMap::new();
    let cert = section_grouplikes(&mut r, h)?;
    let (q, gac) = section_hab(&mut r, h, cert.as_ref())?;
    let fh = section_free(&mut r, h, &q, cert.as_ref(), opts)?;
    section_coinvariance(&mut r, &fh, &GeneratorKind::ALL)?;
    match (&cert, &gac) {
        (Some(cert), Some(gac)) => match section_presentation(&mut r, &fh, cert, gac, None, opts) {
            Ok(_) => {}
            Err(e) => match e.downcast_ref::<CoreError>() {
                Some(CoreError::HypothesisNotMet(_) | CoreError::MissingAdaptedBasis(_)) => {
                    skip(&mut skipped, "presentation", e)
                }
                _ => return Err(e),
            },
        },
        _ => skip(&mut skipped, "presentation", "group-likes not certified"),
    }
    match section_localization(&mut r, &fh) {
        Ok(()) => {}
        Err(e) => match e.downcast_ref::<CoreError>() {
            Some(CoreError::HypothesisNotMet(_)) => skip(&mut skipped, "localization", e),
            _ => return Err(e),
        },
    }
    if !skipped.is_empty() {
        r.artifact("skipped", json!(skipped));
    }
    Ok(r)
}
