//! Combinatorial log-resolution data and its JSON form.
//!
//! ```json
//! {"dimension": 2, "local": true, "functions": ["g"],
//!  "components": [{"id": "E", "Ng": 2, "nu": 1}],
//!  "strata": [{"components": ["E"], "base_class": [[0,0,1]], "cover": "split"}]}
//! ```

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::classes::MonClass;
use crate::error::CoreError;
use crate::spectra::{Frac, QmodZ};

/// Which functions the multiplicities refer to.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Functions {
    /// A single function `g`; `n_f` holds the boundary multiplicity `N_F`.
    G,
    /// A pair `(f, g)`.
    FG,
}

impl Functions {
    pub fn count(self) -> usize {
        match self {
            Functions::G => 1,
            Functions::FG => 2,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Component {
    pub id: String,
    pub n_f: u64,
    pub n_g: u64,
    pub nu: u64,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Cover {
    /// `[U_I]` is the base class times the torus-fiber class of the stratum.
    Split,
    /// `[U_I]` supplied directly, with one monodromy per function.
    Explicit(MonClass),
}

/// A nonempty stratum `E_I°` and its class data.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Stratum {
    /// Sorted component indices.
    pub components: Vec<usize>,
    /// Arity-0 class of `E_I°`.
    pub base_class: MonClass,
    pub cover: Cover,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ResolutionDatum {
    dimension: usize,
    local: bool,
    functions: Functions,
    components: Vec<Component>,
    strata: Vec<Stratum>,
}

fn schema(path: impl fmt::Display, msg: impl fmt::Display) -> CoreError {
    CoreError::Datum(format!("{path}: {msg}"))
}

impl ResolutionDatum {
    pub fn new(dimension: usize, local: bool, functions: Functions) -> Result<ResolutionDatum, CoreError> {
        if dimension == 0 {
            return Err(schema("dimension", "must be at least 1"));
        }
        Ok(ResolutionDatum {
            dimension,
            local,
            functions,
            components: Vec::new(),
            strata: Vec::new(),
        })
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn is_local(&self) -> bool {
        self.local
    }

    pub fn functions(&self) -> Functions {
        self.functions
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn strata(&self) -> &[Stratum] {
        &self.strata
    }

    pub fn component_index(&self, id: &str) -> Option<usize> {
        self.components.iter().position(|c| c.id == id)
    }

    pub fn add_component(&mut self, id: &str, n_f: u64, n_g: u64, nu: u64) -> Result<(), CoreError> {
        let path = format!("components[{}]", self.components.len());
        if id.is_empty() {
            return Err(schema(format!("{path}.id"), "must be nonempty"));
        }
        if self.component_index(id).is_some() {
            return Err(schema(format!("{path}.id"), format!("duplicate component id {id:?}")));
        }
        if nu == 0 {
            return Err(schema(format!("{path}.nu"), "must be at least 1"));
        }
        if n_f == 0 && n_g == 0 {
            return Err(schema(path, "component must have Ng > 0 or Nf > 0"));
        }
        self.components.push(Component {
            id: id.to_string(),
            n_f,
            n_g,
            nu,
        });
        Ok(())
    }

    pub fn add_stratum(&mut self, ids: &[&str], base_class: MonClass, cover: Cover) -> Result<(), CoreError> {
        let path = format!("strata[{}]", self.strata.len());
        if ids.is_empty() {
            return Err(schema(format!("{path}.components"), "must be nonempty"));
        }
        if ids.len() > self.dimension {
            return Err(schema(
                format!("{path}.components"),
                format!("{} components cannot meet in dimension {}", ids.len(), self.dimension),
            ));
        }
        let mut idx = BTreeSet::new();
        for (k, id) in ids.iter().enumerate() {
            let i = self
                .component_index(id)
                .ok_or_else(|| schema(format!("{path}.components[{k}]"), format!("unknown component {id:?}")))?;
            if !idx.insert(i) {
                return Err(schema(format!("{path}.components[{k}]"), format!("repeated component {id:?}")));
            }
        }
        let components: Vec<usize> = idx.into_iter().collect();
        if self.strata.iter().any(|s| s.components == components) {
            return Err(schema(format!("{path}.components"), "duplicate stratum"));
        }
        if base_class.arity() != 0 {
            return Err(schema(format!("{path}.base_class"), "must be a plain Hodge class"));
        }
        if let Cover::Explicit(c) = &cover {
            if c.arity() != self.functions.count() {
                return Err(schema(
                    format!("{path}.cover.explicit"),
                    format!("expected {} eigenvalues per term, got {}", self.functions.count(), c.arity()),
                ));
            }
            if base_class != MonClass::one(0) {
                return Err(schema(format!("{path}.base_class"), "must be omitted when the cover is explicit"));
            }
        }
        self.strata.push(Stratum {
            components,
            base_class,
            cover,
        });
        Ok(())
    }

    /// Identifiers of a stratum, joined by commas.
    pub fn stratum_label(&self, s: &Stratum) -> String {
        s.components.iter().map(|&i| self.components[i].id.as_str()).collect::<Vec<_>>().join(",")
    }

    pub fn from_json_str(text: &str) -> Result<ResolutionDatum, CoreError> {
        let de = &mut serde_json::Deserializer::from_str(text);
        let raw: RawDatum = serde_path_to_error::deserialize(de).map_err(|e| {
            let path = e.path().to_string();
            CoreError::Parse(format!("at {path}: {}", e.into_inner()))
        })?;
        raw.into_datum()
    }

    pub fn to_json_value(&self) -> Value {
        let raw = RawDatum {
            dimension: self.dimension as i64,
            local: self.local,
            functions: match self.functions {
                Functions::G => vec!["g".into()],
                Functions::FG => vec!["f".into(), "g".into()],
            },
            components: self
                .components
                .iter()
                .map(|c| RawComponent {
                    id: c.id.clone(),
                    nf: c.n_f as i64,
                    ng: c.n_g as i64,
                    nu: c.nu as i64,
                })
                .collect(),
            strata: self
                .strata
                .iter()
                .map(|s| RawStratum {
                    components: s.components.iter().map(|&i| self.components[i].id.clone()).collect(),
                    base_class: match s.cover {
                        Cover::Split => Some(s.base_class.terms().map(|(k, m)| [k.p, k.q, m]).collect()),
                        Cover::Explicit(_) => None,
                    },
                    cover: match &s.cover {
                        Cover::Split => RawCover::Tag("split".into()),
                        Cover::Explicit(c) => RawCover::Explicit {
                            explicit: class_to_json(c).as_array().cloned().unwrap_or_default(),
                        },
                    },
                })
                .collect(),
        };
        serde_json::to_value(raw).expect("datum serializes")
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json_value()).expect("datum serializes")
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDatum {
    dimension: i64,
    local: bool,
    functions: Vec<String>,
    components: Vec<RawComponent>,
    strata: Vec<RawStratum>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawComponent {
    id: String,
    #[serde(rename = "Nf", default)]
    nf: i64,
    #[serde(rename = "Ng")]
    ng: i64,
    nu: i64,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawStratum {
    components: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    base_class: Option<Vec<[i64; 3]>>,
    cover: RawCover,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum RawCover {
    Tag(String),
    Explicit { explicit: Vec<Value> },
}

fn nonneg(v: i64, path: &str) -> Result<u64, CoreError> {
    u64::try_from(v).map_err(|_| schema(path, "must be nonnegative"))
}

impl RawDatum {
    fn into_datum(self) -> Result<ResolutionDatum, CoreError> {
        if self.dimension < 1 {
            return Err(schema("dimension", "must be at least 1"));
        }
        let functions = match self.functions.iter().map(String::as_str).collect::<Vec<_>>().as_slice() {
            ["g"] => Functions::G,
            ["f", "g"] => Functions::FG,
            _ => return Err(schema("functions", "must be [\"g\"] or [\"f\", \"g\"]")),
        };
        let mut d = ResolutionDatum::new(self.dimension as usize, self.local, functions)?;
        for (i, c) in self.components.iter().enumerate() {
            let nf = nonneg(c.nf, &format!("components[{i}].Nf"))?;
            let ng = nonneg(c.ng, &format!("components[{i}].Ng"))?;
            let nu = nonneg(c.nu, &format!("components[{i}].nu"))?;
            d.add_component(&c.id, nf, ng, nu)?;
        }
        for (i, s) in self.strata.iter().enumerate() {
            let path = format!("strata[{i}]");
            let ids: Vec<&str> = s.components.iter().map(String::as_str).collect();
            let cover = match &s.cover {
                RawCover::Tag(t) if t == "split" => Cover::Split,
                RawCover::Tag(t) => {
                    return Err(schema(format!("{path}.cover"), format!("unknown cover {t:?}; use \"split\" or {{\"explicit\": ...}}")))
                }
                RawCover::Explicit { explicit } => Cover::Explicit(class_from_json_terms(
                    explicit,
                    functions.count(),
                    &format!("{path}.cover.explicit"),
                )?),
            };
            let base_class = match &s.base_class {
                Some(terms) => {
                    let mut b = MonClass::zero(0);
                    for [p, q, m] in terms {
                        b.add_monomial(Vec::new(), *p, *q, *m);
                    }
                    b
                }
                None => MonClass::one(0),
            };
            d.add_stratum(&ids, base_class, cover)?;
        }
        Ok(d)
    }
}

/// Parses `[[[anum,aden],...,p,q,mult], ...]` with exactly `arity` eigenvalues
/// per term.
pub fn class_from_json_terms(terms: &[Value], arity: usize, path: &str) -> Result<MonClass, CoreError> {
    let mut out = MonClass::zero(arity);
    for (t, term) in terms.iter().enumerate() {
        let tp = format!("{path}[{t}]");
        let items = term.as_array().ok_or_else(|| schema(&tp, "expected an array"))?;
        if items.len() != arity + 3 {
            return Err(schema(&tp, format!("expected {} eigenvalue pairs followed by p, q, mult", arity)));
        }
        let mut eigen = Vec::with_capacity(arity);
        for (k, e) in items[..arity].iter().enumerate() {
            let ep = format!("{tp}[{k}]");
            let pair = e.as_array().filter(|a| a.len() == 2).ok_or_else(|| schema(&ep, "expected [num, den]"))?;
            let num = pair[0].as_i64().ok_or_else(|| schema(format!("{ep}[0]"), "expected an integer"))?;
            let den = pair[1].as_i64().ok_or_else(|| schema(format!("{ep}[1]"), "expected an integer"))?;
            if den <= 0 {
                return Err(schema(format!("{ep}[1]"), "denominator must be positive"));
            }
            eigen.push(QmodZ::new(&Frac::new(num, den)));
        }
        let int_at = |k: usize| {
            items[k]
                .as_i64()
                .ok_or_else(|| schema(format!("{tp}[{k}]"), "expected an integer"))
        };
        out.add_monomial(eigen, int_at(arity)?, int_at(arity + 1)?, int_at(arity + 2)?);
    }
    Ok(out)
}

/// Inverse of [`class_from_json_terms`].
pub fn class_to_json(c: &MonClass) -> Value {
    Value::Array(
        c.terms()
            .map(|(k, m)| {
                let mut items: Vec<Value> = k
                    .eigen
                    .iter()
                    .map(|e| {
                        let n: i64 = e.s().numer().try_into().expect("numerator fits in i64");
                        let d: i64 = e.s().denom().try_into().expect("denominator fits in i64");
                        Value::from(vec![n, d])
                    })
                    .collect();
                items.extend([Value::from(k.p), Value::from(k.q), Value::from(m)]);
                Value::Array(items)
            })
            .collect(),
    )
}

/// Parses a class file `{"class": [...], "arity": k}`; the arity defaults to 1.
pub fn class_from_json_str(text: &str) -> Result<MonClass, CoreError> {
    #[derive(Deserialize)]
    #[serde(deny_unknown_fields)]
    struct RawClass {
        #[serde(default = "one")]
        arity: usize,
        class: Vec<Value>,
    }
    fn one() -> usize {
        1
    }
    let de = &mut serde_json::Deserializer::from_str(text);
    let raw: RawClass = serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        CoreError::Parse(format!("at {path}: {}", e.into_inner()))
    })?;
    class_from_json_terms(&raw.class, raw.arity, "class")
}

pub fn class_to_json_string(c: &MonClass) -> String {
    let v = serde_json::json!({"arity": c.arity(), "class": class_to_json(c)});
    serde_json::to_string_pretty(&v).expect("class serializes")
}
