//! Run reports: tagged checks plus serialized artifacts.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

pub const REPORT_VERSION: u32 = 1;

/// Every tag a check may carry, with a one-line description.
pub const TAG_REGISTRY: &[(&str, &str)] = &[
    ("hopf-axioms", "structure constants satisfy the Hopf algebra axioms"),
    ("grouplikes", "declared group-likes form a group and span the coradical"),
    ("commutative-pointed", "a commutative pointed quotient is a group algebra"),
    ("retraction", "module coalgebra retraction onto the group algebra"),
    ("free-hopf-inverse", "the inverse variables satisfy the antipode relations"),
    ("free-hopf-pointed", "the free commutative Hopf algebra stays pointed"),
    ("localization-units", "the localizing determinants are group-like with trivial image"),
    ("generators-coinvariant", "sigma, p, q and their inverses are coinvariant"),
    ("noether-dictionary", "coaction of the function algebra matches the regular action"),
    ("dedekind-determinant", "the group determinant and its square under translation"),
    ("pointed-presentation", "explicit Laurent-polynomial presentation of the base algebra"),
    ("presentation-degrees", "generator counts and degree bounds of the presentation"),
    ("lattice-basis", "monomial basis of the kernel lattice"),
    ("polynomial-generators", "n - l polynomial generators of degree at most two"),
    ("canonical-coinvariants", "mu sends P_x and Q_xy to p_x and q_xy"),
    ("coideal-subalgebra", "the image of mu is compatible with the H_ab coaction"),
    ("localization-formulas", "p', q' invert p, q on group-likes and skew-primitives"),
    ("localization-witnesses", "witness identities for localizing the image of mu"),
    ("comodule-map", "mu is an H-colinear algebra map and kills identities"),
    ("invariant-comparison", "mu and abelianization agree on coinvariants of the tensor algebra"),
    ("invariant-generators", "generators of the invariant ring of the regular representation"),
];

pub fn tag_is_registered(tag: &str) -> bool {
    TAG_REGISTRY.iter().any(|(t, _)| *t == tag)
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Check {
    pub tag: &'static str,
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CommandInfo {
    pub name: String,
    pub params: BTreeMap<String, Value>,
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct RunReport {
    pub report_version: u32,
    pub command: CommandInfo,
    pub input_digest: String,
    pub seed: u64,
    pub checks: Vec<Check>,
    pub artifacts: BTreeMap<String, Value>,
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

impl RunReport {
    pub fn new(command: &str, params: BTreeMap<String, Value>, input: &[u8], seed: u64) -> Self {
        RunReport {
            report_version: REPORT_VERSION,
            command: CommandInfo { name: command.to_string(), params },
            input_digest: sha256_hex(input),
            seed,
            checks: Vec::new(),
            artifacts: BTreeMap::new(),
        }
    }

    /// Records a check. Panics on an unregistered tag.
    pub fn check(&mut self, tag: &'static str, name: impl Into<String>, passed: bool, witness: Option<String>) {
        assert!(tag_is_registered(tag), "unregistered check tag {tag}");
        self.checks.push(Check { tag, name: name.into(), passed, witness });
    }

    pub fn artifact(&mut self, key: &str, value: Value) {
        self.artifacts.insert(key.to_string(), value);
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    /// Checks sorted by (tag, name) so that assembly order never leaks
    /// into the output.
    pub fn normalize(&mut self) {
        self.checks.sort_by(|a, b| (a.tag, &a.name).cmp(&(b.tag, &b.name)));
    }

    pub fn to_json(&self) -> String {
        // Round-trip through Value so every object has sorted keys.
        let v = serde_json::to_value(self).expect("serializable");
        let mut s = serde_json::to_string_pretty(&v).expect("serializable");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "command: {}", self.command.name);
        for (k, v) in &self.command.params {
            let _ = writeln!(out, "  {k} = {v}");
        }
        let _ = writeln!(out, "input_digest: {}", self.input_digest);
        let _ = writeln!(out, "seed: {}", self.seed);
        let tw = self.checks.iter().map(|c| c.tag.len()).max().unwrap_or(3).max(3);
        let nw = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(5).max(5);
        let _ = writeln!(out, "{:<6} {:<tw$} {:<nw$} witness", "result", "tag", "check");
        for c in &self.checks {
            let res = if c.passed { "PASS" } else { "FAIL" };
            let w = c.witness.as_deref().unwrap_or("-");
            let _ = writeln!(out, "{res:<6} {:<tw$} {:<nw$} {w}", c.tag, c.name);
        }
        let passed = self.checks.iter().filter(|c| c.passed).count();
        let _ = writeln!(out, "{passed}/{} checks passed", self.checks.len());
        out
    }
}
