//! JSON file formats for Hopf algebras and retractions.
//!
//! Structure constants are stored sparsely and addressed by basis label;
//! scalars are literal strings such as `"-1"`, `"1/2"` or `"1+z^2"`.

use std::collections::BTreeMap;
use std::path::Path;

use hopfgen_core::hopf::{Elem, HopfAlgebraData};
use hopfgen_core::scalars::parse_scalar;
use hopfgen_core::CycScalar;
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum SchemaError {
    #[error("{path}:{line}:{column}: {message}")]
    Json { path: String, line: usize, column: usize, message: String },
    #[error("{path}: field `{field}`: {message}")]
    Field { path: String, field: String, message: String },
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
}

/// On-disk form of [`HopfAlgebraData`].
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct HopfFile {
    pub name: String,
    pub cyclotomic_order: u32,
    pub basis: Vec<String>,
    /// Dense coordinates of `1`.
    pub unit: Vec<String>,
    /// Dense values `ε(e_i)`.
    pub counit: Vec<String>,
    /// `[a, b, c, k]`: the coefficient of `c` in `a·b` is `k`.
    pub mul: Vec<[String; 4]>,
    /// `[a, b, c, k]`: the coefficient of `b ⊗ c` in `Δ(a)` is `k`.
    pub comul: Vec<[String; 4]>,
    /// `[a, b, k]`: the coefficient of `b` in `S(a)` is `k`.
    pub antipode: Vec<[String; 3]>,
    #[serde(default)]
    pub declared_grouplikes: Vec<NamedVector>,
    /// Non-group-like basis label ↦ label of its group part.
    #[serde(default)]
    pub group_part: Option<BTreeMap<String, String>>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct NamedVector {
    pub name: String,
    pub vector: Vec<String>,
}

fn scalars(e: &[CycScalar]) -> Vec<String> {
    e.iter().map(ToString::to_string).collect()
}

impl HopfFile {
    pub fn from_data(h: &HopfAlgebraData) -> Self {
        let l = |i: usize| h.labels[i].clone();
        let mut mul = Vec::new();
        for (i, row) in h.mul.iter().enumerate() {
            for (j, entries) in row.iter().enumerate() {
                for (k, c) in entries {
                    mul.push([l(i), l(j), l(*k), c.to_string()]);
                }
            }
        }
        let mut comul = Vec::new();
        for (i, entries) in h.comul.iter().enumerate() {
            for (j, k, c) in entries {
                comul.push([l(i), l(*j), l(*k), c.to_string()]);
            }
        }
        let mut antipode = Vec::new();
        for (i, entries) in h.antipode.iter().enumerate() {
            for (k, c) in entries {
                antipode.push([l(i), l(*k), c.to_string()]);
            }
        }
        HopfFile {
            name: h.name.clone(),
            cyclotomic_order: h.order,
            basis: h.labels.clone(),
            unit: scalars(&h.unit),
            counit: scalars(&h.counit),
            mul,
            comul,
            antipode,
            declared_grouplikes: h
                .declared_grouplikes
                .iter()
                .map(|(name, v)| NamedVector { name: name.clone(), vector: scalars(v) })
                .collect(),
            group_part: h.group_part.as_ref().map(|gp| gp.iter().map(|(&b, &g)| (l(b), l(g))).collect()),
        }
    }

    /// Validates labels, shapes and scalar literals.
    pub fn to_data(&self, path: &str) -> Result<HopfAlgebraData, SchemaError> {
        let err = |field: String, message: String| SchemaError::Field { path: path.to_string(), field, message };
        let order = self.cyclotomic_order;
        if order == 0 {
            return Err(err("cyclotomic_order".into(), "must be positive".into()));
        }
        let n = self.basis.len();
        if n == 0 {
            return Err(err("basis".into(), "must be nonempty".into()));
        }
        let mut index = BTreeMap::new();
        for (i, b) in self.basis.iter().enumerate() {
            if index.insert(b.as_str(), i).is_some() {
                return Err(err(format!("basis[{i}]"), format!("duplicate label `{b}`")));
            }
        }
        let label = |field: String, s: &str| {
            index.get(s).copied().ok_or_else(|| err(field, format!("unknown basis label `{s}`")))
        };
        let scalar = |field: String, s: &str| parse_scalar(s, order).map_err(|e| err(field, e.to_string()));
        let dense = |field: &str, v: &[String]| -> Result<Elem, SchemaError> {
            if v.len() != n {
                return Err(err(field.into(), format!("expected {n} entries, found {}", v.len())));
            }
            v.iter().enumerate().map(|(i, s)| scalar(format!("{field}[{i}]"), s)).collect()
        };

        let unit = dense("unit", &self.unit)?;
        let counit = dense("counit", &self.counit)?;

        let mut mul_acc: BTreeMap<(usize, usize, usize), CycScalar> = BTreeMap::new();
        for (r, [a, b, c, k]) in self.mul.iter().enumerate() {
            let f = |j: usize| format!("mul[{r}][{j}]");
            let key = (label(f(0), a)?, label(f(1), b)?, label(f(2), c)?);
            let v = scalar(f(3), k)?;
            *mul_acc.entry(key).or_insert_with(|| CycScalar::zero(order)) += &v;
        }
        let mut mul = vec![vec![Vec::new(); n]; n];
        for ((i, j, k), c) in mul_acc {
            if !c.is_zero() {
                mul[i][j].push((k, c));
            }
        }

        let mut comul_acc: BTreeMap<(usize, usize, usize), CycScalar> = BTreeMap::new();
        for (r, [a, b, c, k]) in self.comul.iter().enumerate() {
            let f = |j: usize| format!("comul[{r}][{j}]");
            let key = (label(f(0), a)?, label(f(1), b)?, label(f(2), c)?);
            let v = scalar(f(3), k)?;
            *comul_acc.entry(key).or_insert_with(|| CycScalar::zero(order)) += &v;
        }
        let mut comul = vec![Vec::new(); n];
        for ((i, j, k), c) in comul_acc {
            if !c.is_zero() {
                comul[i].push((j, k, c));
            }
        }

        let mut anti_acc: BTreeMap<(usize, usize), CycScalar> = BTreeMap::new();
        for (r, [a, b, k]) in self.antipode.iter().enumerate() {
            let f = |j: usize| format!("antipode[{r}][{j}]");
            let key = (label(f(0), a)?, label(f(1), b)?);
            let v = scalar(f(2), k)?;
            *anti_acc.entry(key).or_insert_with(|| CycScalar::zero(order)) += &v;
        }
        let mut antipode = vec![Vec::new(); n];
        for ((i, k), c) in anti_acc {
            if !c.is_zero() {
                antipode[i].push((k, c));
            }
        }

        let mut declared = Vec::new();
        for (r, g) in self.declared_grouplikes.iter().enumerate() {
            declared.push((g.name.clone(), dense(&format!("declared_grouplikes[{r}].vector"), &g.vector)?));
        }

        let group_part = match &self.group_part {
            None => None,
            Some(gp) => {
                let mut out = BTreeMap::new();
                for (b, g) in gp {
                    let f = format!("group_part.{b}");
                    out.insert(label(f.clone(), b)?, label(f, g)?);
                }
                Some(out)
            }
        };

        Ok(HopfAlgebraData {
            name: self.name.clone(),
            order,
            labels: self.basis.clone(),
            unit,
            counit,
            mul,
            comul,
            antipode,
            declared_grouplikes: declared,
            group_part,
        })
    }
}

pub(crate) fn json_error(path: &str, e: serde_json::Error) -> SchemaError {
    let full = e.to_string();
    let suffix = format!(" at line {} column {}", e.line(), e.column());
    let message = full.strip_suffix(&suffix).unwrap_or(&full).to_string();
    SchemaError::Json { path: path.to_string(), line: e.line(), column: e.column(), message }
}

/// Parses a Hopf algebra from JSON text; `path` is used in diagnostics.
pub fn parse_hopf(text: &str, path: &str) -> Result<HopfAlgebraData, SchemaError> {
    let file: HopfFile = serde_json::from_str(text).map_err(|e| json_error(path, e))?;
    file.to_data(path)
}

pub fn read_text(path: &Path) -> Result<String, SchemaError> {
    std::fs::read_to_string(path).map_err(|source| SchemaError::Io { path: path.display().to_string(), source })
}

/// Pretty JSON with one structure constant per line.
pub fn hopf_to_json(h: &HopfAlgebraData) -> String {
    let f = HopfFile::from_data(h);
    let list = |rows: Vec<String>| {
        if rows.is_empty() {
            "[]".to_string()
        } else {
            format!("[\n    {}\n  ]", rows.join(",\n    "))
        }
    };
    let fields = [
        ("name", c(&f.name)),
        ("cyclotomic_order", c(&f.cyclotomic_order)),
        ("basis", c(&f.basis)),
        ("unit", c(&f.unit)),
        ("counit", c(&f.counit)),
        ("mul", list(f.mul.iter().map(c).collect())),
        ("comul", list(f.comul.iter().map(c).collect())),
        ("antipode", list(f.antipode.iter().map(c).collect())),
        ("declared_grouplikes", list(f.declared_grouplikes.iter().map(c).collect())),
        ("group_part", c(&f.group_part)),
    ];
    let body: Vec<String> = fields.iter().map(|(k, v)| format!("  \"{k}\": {v}")).collect();
    format!("{{\n{}\n}}\n", body.join(",\n"))
}

fn c<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("serializable")
}

/// A retraction file maps basis labels to images, each a map from basis
/// label to scalar. Labels that are absent keep the default image.
pub fn parse_gamma(text: &str, path: &str, h: &HopfAlgebraData, default: &[Elem]) -> Result<Vec<Elem>, SchemaError> {
    let raw: BTreeMap<String, BTreeMap<String, String>> =
        serde_json::from_str(text).map_err(|e| json_error(path, e))?;
    let err = |field: String, message: String| SchemaError::Field { path: path.to_string(), field, message };
    let mut out = default.to_vec();
    for (b, image) in &raw {
        let i = h.index_of(b).ok_or_else(|| err(b.clone(), format!("unknown basis label `{b}`")))?;
        let mut v = h.zero();
        for (c, k) in image {
            let f = format!("{b}.{c}");
            let j = h.index_of(c).ok_or_else(|| err(f.clone(), format!("unknown basis label `{c}`")))?;
            v[j] = parse_scalar(k, h.order).map_err(|e| err(f, e.to_string()))?;
        }
        out[i] = v;
    }
    Ok(out)
}
