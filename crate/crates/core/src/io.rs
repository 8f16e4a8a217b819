//! JSON formats for algebras and cochains, and the built-in corpus by name.
//!
//! An algebra file looks like
//!
//! ```json
//! {"dim": 2, "basis": ["1", "x"], "parity": [0, 0], "unit": 0,
//!  "products": [{"i": 0, "j": 0, "terms": [{"k": 0, "coeff": "1"}]}]}
//! ```
//!
//! and a cochain file like `{"degree": 2, "entries": [{"i": [1, 1], "l": 0, "coeff": "1"}]}`.
//! Indices are 0-based. Coefficients are strings holding an integer or `p/q`.

use std::path::Path;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::algebra::{
    exterior_algebra, ground_field, self_module, tensor_product, truncated_polynomial, SuperAlgebra,
    SuperModule,
};
use crate::cochain::{hochschild_dim, Cochain};
use crate::combinatorics::{Parity, ParityVector};
use crate::error::{Error, Result};
use crate::exactla::{format_rational, parse_rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub dim: usize,
    pub basis: Vec<String>,
    pub parity: Vec<u8>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<usize>,
    #[serde(default)]
    pub products: Vec<ProductRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProductRecord {
    pub i: usize,
    pub j: usize,
    pub terms: Vec<TermRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermRecord {
    pub k: usize,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CochainFile {
    pub degree: usize,
    pub entries: Vec<CochainEntry>,
}

/// One nonzero coefficient `f(e_{i₁} ⊗ … ⊗ e_{i_n}) ∋ coeff · m_l`. The label
/// fields are written for readers and ignored on input.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CochainEntry {
    pub i: Vec<usize>,
    pub l: usize,
    pub coeff: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub input: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output: Option<String>,
}

fn parse_json<T: for<'de> Deserialize<'de>>(text: &str, what: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(format!("{what}: {e}")))
}

impl AlgebraFile {
    pub fn into_algebra(self) -> Result<SuperAlgebra> {
        if self.basis.len() != self.dim || self.parity.len() != self.dim {
            return Err(Error::Parse(format!(
                "dim is {} but basis has {} names and parity has {} entries",
                self.dim,
                self.basis.len(),
                self.parity.len()
            )));
        }
        let parity = ParityVector::from_bits(&self.parity)?;
        let mut products = Vec::new();
        for rec in &self.products {
            for term in &rec.terms {
                products.push((rec.i, rec.j, term.k, parse_rational(&term.coeff)?));
            }
        }
        SuperAlgebra::from_products(self.basis, parity, self.unit, products)
    }

    pub fn from_algebra(a: &SuperAlgebra) -> Self {
        let mut products = Vec::new();
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                let terms: Vec<TermRecord> = a
                    .product_terms(i, j)
                    .iter()
                    .map(|(k, c)| TermRecord {
                        k: *k,
                        coeff: format_rational(c),
                    })
                    .collect();
                if !terms.is_empty() {
                    products.push(ProductRecord { i, j, terms });
                }
            }
        }
        AlgebraFile {
            dim: a.dim(),
            basis: a.names().to_vec(),
            parity: a.parities().as_slice().iter().map(|p| p.bit()).collect(),
            unit: a.unit(),
            products,
        }
    }
}

pub fn parse_algebra(text: &str) -> Result<SuperAlgebra> {
    parse_json::<AlgebraFile>(text, "algebra")?.into_algebra()
}

pub fn algebra_to_json(a: &SuperAlgebra) -> String {
    serde_json::to_string_pretty(&AlgebraFile::from_algebra(a)).expect("plain data serializes")
}

/// Resolves a `builtin:` name. The grammar is `ground`, `exterior:K`,
/// `truncpoly:N` and `tensor:X:Y` with `X`, `Y` again names, for example
/// `builtin:tensor:truncpoly:2:exterior:1`. A nested `builtin:` prefix is
/// accepted and ignored.
pub fn builtin(name: &str) -> Result<SuperAlgebra> {
    let body = name.strip_prefix("builtin:").unwrap_or(name);
    let tokens: Vec<&str> = body.split(':').filter(|t| *t != "builtin").collect();
    let mut pos = 0;
    let a = builtin_tokens(&tokens, &mut pos, name)?;
    if pos != tokens.len() {
        return Err(Error::Parse(format!("trailing tokens in builtin name `{name}`")));
    }
    Ok(a)
}

fn builtin_tokens(tokens: &[&str], pos: &mut usize, name: &str) -> Result<SuperAlgebra> {
    let bad = || Error::Parse(format!("cannot parse builtin name `{name}`"));
    let number = |pos: &mut usize| -> Result<usize> {
        let t = tokens.get(*pos).ok_or_else(bad)?;
        *pos += 1;
        t.parse().map_err(|_| bad())
    };
    let head = *tokens.get(*pos).ok_or_else(bad)?;
    *pos += 1;
    match head {
        "ground" => Ok(ground_field()),
        "exterior" => exterior_algebra(number(pos)?),
        "truncpoly" => truncated_polynomial(number(pos)?),
        "tensor" => {
            let x = builtin_tokens(tokens, pos, name)?;
            let y = builtin_tokens(tokens, pos, name)?;
            tensor_product(&x, &y)
        }
        _ => Err(bad()),
    }
}

/// Loads a `builtin:` name or reads a JSON file.
pub fn load_algebra(spec: &str) -> Result<SuperAlgebra> {
    if spec.starts_with("builtin:") {
        return builtin(spec);
    }
    parse_algebra(&read(spec)?)
}

pub fn read(path: impl AsRef<Path>) -> Result<String> {
    let path = path.as_ref();
    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

/// Only the self-module is supported.
pub fn load_module(a: &SuperAlgebra, spec: &str) -> Result<SuperModule> {
    match spec {
        "self" => Ok(self_module(a)),
        other => Err(Error::Parse(format!("unsupported module `{other}` (only `self`)"))),
    }
}

const MAX_PARSED_COCHAIN_DIM: usize = 1 << 22;

pub fn parse_cochain(a: &SuperAlgebra, m: &SuperModule, text: &str) -> Result<Cochain> {
    let file: CochainFile = parse_json(text, "cochain")?;
    match hochschild_dim(a, m, file.degree) {
        Some(d) if d <= MAX_PARSED_COCHAIN_DIM => {}
        _ => {
            return Err(Error::ResourceLimit(format!(
                "a degree-{} cochain is too large to materialize",
                file.degree
            )))
        }
    }
    let mut f = Cochain::zero(a, m, file.degree);
    for e in file.entries {
        if e.i.len() != file.degree {
            return Err(Error::Parse(format!(
                "entry {:?} has {} indices for a degree-{} cochain",
                e.i,
                e.i.len(),
                file.degree
            )));
        }
        if e.i.iter().any(|&i| i >= a.dim()) || e.l >= m.dim() {
            return Err(Error::Parse(format!("entry {:?} -> {} is out of range", e.i, e.l)));
        }
        let c = parse_rational(&e.coeff)?;
        let sum = f.get(&e.i, e.l) + c;
        f.set(&e.i, e.l, sum);
    }
    Ok(f)
}

pub fn load_cochain(a: &SuperAlgebra, m: &SuperModule, path: &str) -> Result<Cochain> {
    parse_cochain(a, m, &read(path)?)
}

/// Nonzero entries of `f` with basis-name labels.
pub fn cochain_file(a: &SuperAlgebra, m: &SuperModule, f: &Cochain) -> CochainFile {
    let entries = f
        .entries()
        .into_iter()
        .filter(|(_, _, c)| !c.is_zero())
        .map(|(i, l, c)| CochainEntry {
            input: Some(if i.is_empty() {
                "()".to_string()
            } else {
                i.iter().map(|&k| a.name(k)).collect::<Vec<_>>().join(" ⊗ ")
            }),
            output: Some(m.name(l).to_string()),
            i,
            l,
            coeff: format_rational(&c),
        })
        .collect();
    CochainFile {
        degree: f.degree(),
        entries,
    }
}

pub fn cochain_to_json(a: &SuperAlgebra, m: &SuperModule, f: &Cochain) -> String {
    serde_json::to_string_pretty(&cochain_file(a, m, f)).expect("plain data serializes")
}

/// `f(x ⊗ x) = 1·1 + …` style rendering for terminal output.
pub fn describe_cochain(a: &SuperAlgebra, m: &SuperModule, f: &Cochain) -> String {
    let parts: Vec<String> = cochain_file(a, m, f)
        .entries
        .into_iter()
        .map(|e| format!("({}) ↦ {}·{}", e.input.unwrap_or_default(), e.coeff, e.output.unwrap_or_default()))
        .collect();
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(", ")
    }
}

pub fn parity_label(p: Parity) -> &'static str {
    if p.is_odd() {
        "odd"
    } else {
        "even"
    }
}
