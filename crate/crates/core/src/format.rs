//! Algebra definition files.
//!
//! ```json
//! {
//!   "field": "Q",
//!   "dim": 2,
//!   "basis": ["one", "t"],
//!   "one": ["1", "0"],
//!   "mul": [[0, 0, 0, "1"], [0, 1, 1, "1"], [1, 0, 1, "1"]],
//!   "functionals": {"lambda": ["0", "1"]}
//! }
//! ```
//!
//! `field` is `"Q"` or `{"GF": p}`. Scalars are literals such as `"-3/4"`;
//! plain JSON integers are accepted on input. `radical_basis` and
//! `functionals` are optional.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::algebra::{Algebra, AlgebraData};
use crate::error::{Error, Result};
use crate::frobenius::Functional;
use crate::scalar::{FieldElement, FieldSpec};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
enum FieldRepr {
    Named(String),
    Prime {
        #[serde(rename = "GF")]
        gf: u64,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
enum Literal {
    Text(String),
    Int(i64),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileRepr {
    field: FieldRepr,
    dim: usize,
    basis: Vec<String>,
    one: Vec<Literal>,
    mul: Vec<(usize, usize, usize, Literal)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    radical_basis: Option<Vec<Vec<Literal>>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    functionals: BTreeMap<String, Vec<Literal>>,
}

/// An algebra together with its named functionals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraFile {
    pub algebra: Algebra,
    pub functionals: BTreeMap<String, Functional>,
}

impl AlgebraFile {
    pub fn new(algebra: Algebra) -> Self {
        AlgebraFile {
            algebra,
            functionals: BTreeMap::new(),
        }
    }

    pub fn functional(&self, name: &str) -> Result<&Functional> {
        self.functionals
            .get(name)
            .ok_or_else(|| Error::Format(format!("no functional named {name}")))
    }
}

fn parse_literal(field: FieldSpec, lit: &Literal) -> Result<FieldElement> {
    match lit {
        Literal::Text(s) => field.parse(s),
        Literal::Int(n) => Ok(field.int(*n)),
    }
}

fn parse_vector(field: FieldSpec, dim: usize, lits: &[Literal], what: &str) -> Result<Vec<FieldElement>> {
    if lits.len() != dim {
        return Err(Error::DimensionMismatch(format!("{what} has {} entries, expected {dim}", lits.len())));
    }
    lits.iter().map(|l| parse_literal(field, l)).collect()
}

fn write_vector(v: &[FieldElement]) -> Vec<Literal> {
    v.iter().map(|x| Literal::Text(x.to_string())).collect()
}

/// Parses and validates an algebra file.
pub fn parse_algebra_file(text: &str) -> Result<AlgebraFile> {
    let repr: FileRepr = serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
    let field = match &repr.field {
        FieldRepr::Named(s) if s == "Q" => FieldSpec::Rationals,
        FieldRepr::Named(s) => return Err(Error::Format(format!("unknown field {s:?}"))),
        FieldRepr::Prime { gf } => FieldSpec::prime(*gf)?,
    };
    let dim = repr.dim;
    if repr.basis.len() != dim {
        return Err(Error::DimensionMismatch(format!(
            "{} basis names for dimension {dim}",
            repr.basis.len()
        )));
    }
    let one = parse_vector(field, dim, &repr.one, "one")?;
    let mul = repr
        .mul
        .iter()
        .map(|(i, j, k, c)| Ok((*i, *j, *k, parse_literal(field, c)?)))
        .collect::<Result<Vec<_>>>()?;
    let radical_basis = repr
        .radical_basis
        .as_ref()
        .map(|vs| vs.iter().map(|v| parse_vector(field, dim, v, "radical vector")).collect::<Result<Vec<_>>>())
        .transpose()?;
    let algebra = Algebra::validate(AlgebraData {
        field,
        basis: repr.basis,
        one,
        mul,
        radical_basis,
    })?;
    let functionals = repr
        .functionals
        .iter()
        .map(|(name, v)| Ok((name.clone(), Functional::new(parse_vector(field, dim, v, name)?))))
        .collect::<Result<_>>()?;
    Ok(AlgebraFile { algebra, functionals })
}

/// Serializes deterministically; [`parse_algebra_file`] inverts it exactly.
pub fn write_algebra_file(file: &AlgebraFile) -> String {
    let data = file.algebra.to_data();
    let repr = FileRepr {
        field: match data.field {
            FieldSpec::Rationals => FieldRepr::Named("Q".into()),
            FieldSpec::Prime(p) => FieldRepr::Prime { gf: p },
        },
        dim: data.basis.len(),
        basis: data.basis,
        one: write_vector(&data.one),
        mul: data
            .mul
            .iter()
            .map(|(i, j, k, c)| (*i, *j, *k, Literal::Text(c.to_string())))
            .collect(),
        radical_basis: data.radical_basis.map(|vs| vs.iter().map(|v| write_vector(v)).collect()),
        functionals: file
            .functionals
            .iter()
            .map(|(name, f)| (name.clone(), write_vector(&f.covector)))
            .collect(),
    };
    let mut out = serde_json::to_string_pretty(&repr).expect("file representation serializes");
    out.push('\n');
    out
}
