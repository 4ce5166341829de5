//! Algebra files and generator expressions.
//!
//! An algebra file is a JSON object with keys `field`, `dim`, `basis` and
//! `products`; unlisted products are zero.

use std::collections::HashSet;
use std::path::Path;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use crate::algebra::LeibnizAlgebra;
use crate::error::{LeibError, Result};
use crate::matrix::Vector;
use crate::scalar::FieldSpec;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub field: FieldSpec,
    pub dim: usize,
    pub basis: Vec<String>,
    #[serde(default)]
    pub products: Vec<ProductEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProductEntry {
    pub left: String,
    pub right: String,
    pub value: IndexMap<String, String>,
}

fn schema(msg: impl Into<String>) -> LeibError {
    LeibError::Schema(msg.into())
}

impl AlgebraFile {
    pub fn from_algebra(a: &LeibnizAlgebra) -> Self {
        let names = a.names();
        let mut products = Vec::new();
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                let value: IndexMap<String, String> = a
                    .product_basis(i, j)
                    .iter()
                    .enumerate()
                    .filter(|(_, s)| !s.is_zero())
                    .map(|(k, s)| (names[k].clone(), s.canonical()))
                    .collect();
                if !value.is_empty() {
                    products.push(ProductEntry {
                        left: names[i].clone(),
                        right: names[j].clone(),
                        value,
                    });
                }
            }
        }
        AlgebraFile {
            field: a.field(),
            dim: a.dim(),
            basis: names.to_vec(),
            products,
        }
    }

    /// Builds the table; with `validate` the left Leibniz identity is checked.
    pub fn to_algebra(&self, validate: bool) -> Result<LeibnizAlgebra> {
        let field = self.field.validated()?;
        let n = self.dim;
        if self.basis.len() != n {
            return Err(schema(format!("dim is {n} but {} basis names are given", self.basis.len())));
        }
        let mut index = IndexMap::new();
        for (i, name) in self.basis.iter().enumerate() {
            if !is_valid_name(name) {
                return Err(schema(format!("invalid basis name {name:?}")));
            }
            if index.insert(name.as_str(), i).is_some() {
                return Err(schema(format!("duplicate basis name {name:?}")));
            }
        }
        let lookup = |name: &str| {
            index
                .get(name)
                .copied()
                .ok_or_else(|| schema(format!("unknown basis name {name:?}")))
        };
        let mut tensor = vec![field.zero(); n * n * n];
        let mut seen = HashSet::new();
        for p in &self.products {
            let (i, j) = (lookup(&p.left)?, lookup(&p.right)?);
            if !seen.insert((i, j)) {
                return Err(schema(format!("product [{}, {}] listed twice", p.left, p.right)));
            }
            for (name, text) in &p.value {
                let k = lookup(name)?;
                tensor[(i * n + j) * n + k] = field.parse_scalar(text)?;
            }
        }
        let names = self.basis.clone();
        if validate {
            LeibnizAlgebra::new(field, names, tensor)
        } else {
            LeibnizAlgebra::new_unchecked(field, names, tensor)
        }
    }
}

/// Names start with a letter or `_` and use letters, digits and `_` only.
pub fn is_valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_alphanumeric() || c == '_')
}

pub fn parse_algebra_str(text: &str, validate: bool) -> Result<LeibnizAlgebra> {
    let file: AlgebraFile = serde_json::from_str(text).map_err(|e| schema(e.to_string()))?;
    file.to_algebra(validate)
}

pub fn parse_algebra(path: &Path, validate: bool) -> Result<LeibnizAlgebra> {
    parse_algebra_str(&std::fs::read_to_string(path)?, validate)
}

/// Pretty JSON with a trailing newline; product order follows the basis order.
pub fn emit_algebra_string(a: &LeibnizAlgebra) -> String {
    let mut s = serde_json::to_string_pretty(&AlgebraFile::from_algebra(a)).expect("plain data serializes");
    s.push('\n');
    s
}

pub fn emit_algebra(a: &LeibnizAlgebra, path: &Path) -> Result<()> {
    std::fs::write(path, emit_algebra_string(a))?;
    Ok(())
}

/// Parses `[coeff*]name` terms joined by `+` or `-`, e.g. `x2 + 3/2*x3`.
pub fn parse_linear_combination(a: &LeibnizAlgebra, expr: &str) -> Result<Vector> {
    let bad = |msg: &str| LeibError::InvalidParameter(format!("{msg} in expression {expr:?}"));
    let field = a.field();
    let mut out = a.zero_vector();
    let text: String = expr.chars().filter(|c| !c.is_whitespace()).collect();
    if text.is_empty() {
        return Err(bad("empty expression"));
    }
    let mut terms: Vec<(bool, String)> = Vec::new();
    let mut negative = false;
    let mut current = String::new();
    for (pos, c) in text.chars().enumerate() {
        match c {
            '+' | '-' => {
                if current.is_empty() && pos != 0 {
                    return Err(bad("dangling sign"));
                }
                if !current.is_empty() {
                    terms.push((negative, std::mem::take(&mut current)));
                }
                negative = c == '-';
            }
            _ => current.push(c),
        }
    }
    if current.is_empty() {
        return Err(bad("dangling sign"));
    }
    terms.push((negative, current));
    for (neg, term) in terms {
        let (coeff, name) = match term.split_once('*') {
            Some((c, n)) => (field.parse_scalar(c).map_err(|_| bad("invalid coefficient"))?, n),
            None => (field.one(), term.as_str()),
        };
        let k = a
            .index_of(name)
            .ok_or_else(|| LeibError::InvalidParameter(format!("unknown basis name {name:?} in expression {expr:?}")))?;
        let c = if neg { -coeff } else { coeff };
        out[k] = &out[k] + &c;
    }
    Ok(out)
}
