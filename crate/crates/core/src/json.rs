//! Canonical JSON wire format.
//!
//! Rationals travel as `"p/q"` strings (bare `"p"` for integers) and index
//! words as arrays of 1-based letters. Terms are emitted sorted by grade,
//! then combination rank, then graded-lex exponent order, so equal values
//! always serialize to identical bytes. Any decoding problem, including a
//! well-formed document describing an invalid value, is a parse error.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::forms::{PolyForm, Polynomial};
use crate::index::Combination;
use crate::matrix::Matrix;
use crate::multivector::{GradedElement, Multivector};
use crate::scalar::{format_rational, parse_rational};
use crate::tensor::Tensor;
use crate::Rational;

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MatrixWire {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TensorWire {
    dim: usize,
    order: usize,
    components: Vec<String>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TermWire {
    index: Vec<usize>,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MultivectorWire {
    dim: usize,
    terms: Vec<TermWire>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MonomialWire {
    exps: Vec<u32>,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FormTermWire {
    index: Vec<usize>,
    poly: Vec<MonomialWire>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FormWire {
    vars: usize,
    terms: Vec<FormTermWire>,
}

fn as_parse(e: Error) -> Error {
    match e {
        Error::Parse(_) => e,
        other => Error::Parse(other.to_string()),
    }
}

fn decode<'a, W: Deserialize<'a>>(s: &'a str) -> Result<W> {
    serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
}

fn encode<W: Serialize>(w: &W) -> String {
    serde_json::to_string(w).expect("wire types always serialize")
}

fn rat_strings<'a>(xs: impl IntoIterator<Item = &'a Rational>) -> Vec<String> {
    xs.into_iter().map(format_rational).collect()
}

fn parse_all(xs: &[String]) -> Result<Vec<Rational>> {
    xs.iter().map(|s| parse_rational(s)).collect()
}

/// Types with a canonical JSON form.
pub trait Json: Sized {
    fn to_json(&self) -> String;

    fn from_json(s: &str) -> Result<Self>;
}

impl Json for Matrix<Rational> {
    fn to_json(&self) -> String {
        encode(&MatrixWire {
            rows: self.rows(),
            cols: self.cols(),
            entries: (0..self.rows()).map(|i| rat_strings(self.row(i))).collect(),
        })
    }

    fn from_json(s: &str) -> Result<Self> {
        let w: MatrixWire = decode(s)?;
        if w.entries.len() != w.rows || w.entries.iter().any(|r| r.len() != w.cols) {
            return Err(Error::Parse(format!(
                "entries do not form a {}x{} array",
                w.rows, w.cols
            )));
        }
        let mut entries = Vec::with_capacity(w.rows * w.cols);
        for row in &w.entries {
            entries.extend(parse_all(row)?);
        }
        Matrix::new(w.rows, w.cols, entries).map_err(as_parse)
    }
}

impl Json for Tensor<Rational> {
    fn to_json(&self) -> String {
        encode(&TensorWire {
            dim: self.dim(),
            order: self.order(),
            components: rat_strings(self.components()),
        })
    }

    fn from_json(s: &str) -> Result<Self> {
        let w: TensorWire = decode(s)?;
        Tensor::new(w.dim, w.order, parse_all(&w.components)?).map_err(as_parse)
    }
}

fn graded_terms(dim: usize, terms: &[TermWire]) -> Result<GradedElement<Rational>> {
    let mut parsed = Vec::with_capacity(terms.len());
    let mut seen = std::collections::BTreeSet::new();
    for t in terms {
        let c = Combination::new(dim, t.index.clone()).map_err(as_parse)?;
        if !seen.insert(c.clone()) {
            return Err(Error::Parse(format!("index ({c}) listed twice")));
        }
        parsed.push((c, parse_rational(&t.coeff)?));
    }
    GradedElement::from_terms(dim, parsed).map_err(as_parse)
}

fn term_wires<'a>(terms: impl Iterator<Item = (&'a Combination, &'a Rational)>) -> Vec<TermWire> {
    terms
        .map(|(k, c)| TermWire { index: k.word().to_vec(), coeff: format_rational(c) })
        .collect()
}

impl Json for GradedElement<Rational> {
    fn to_json(&self) -> String {
        encode(&MultivectorWire { dim: self.dim(), terms: term_wires(self.terms()) })
    }

    fn from_json(s: &str) -> Result<Self> {
        let w: MultivectorWire = decode(s)?;
        graded_terms(w.dim, &w.terms)
    }
}

/// A homogeneous multivector; a document without terms decodes as the
/// zero of grade 0.
impl Json for Multivector<Rational> {
    fn to_json(&self) -> String {
        encode(&MultivectorWire { dim: self.dim(), terms: term_wires(self.terms().iter()) })
    }

    fn from_json(s: &str) -> Result<Self> {
        GradedElement::from_json(s)?
            .homogeneous()
            .ok_or_else(|| Error::Parse("expected terms of a single grade".into()))
    }
}

/// A homogeneous form; a document without terms decodes as the zero
/// 0-form.
impl Json for PolyForm<Rational> {
    fn to_json(&self) -> String {
        let terms = self
            .terms()
            .iter()
            .map(|(k, f)| FormTermWire {
                index: k.word().to_vec(),
                poly: f
                    .terms()
                    .iter()
                    .map(|(m, c)| MonomialWire { exps: m.exps().to_vec(), coeff: format_rational(c) })
                    .collect(),
            })
            .collect();
        encode(&FormWire { vars: self.nvars(), terms })
    }

    fn from_json(s: &str) -> Result<Self> {
        let w: FormWire = decode(s)?;
        let grade = w.terms.first().map_or(0, |t| t.index.len());
        let mut seen = std::collections::BTreeSet::new();
        let mut terms = Vec::with_capacity(w.terms.len());
        for t in &w.terms {
            let c = Combination::new(w.vars, t.index.clone()).map_err(as_parse)?;
            if !seen.insert(c.clone()) {
                return Err(Error::Parse(format!("index ({c}) listed twice")));
            }
            let mut mono = Vec::with_capacity(t.poly.len());
            for m in &t.poly {
                mono.push((m.exps.clone(), parse_rational(&m.coeff)?));
            }
            terms.push((c, Polynomial::from_terms(w.vars, mono).map_err(as_parse)?));
        }
        PolyForm::from_terms(w.vars, grade, terms).map_err(as_parse)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rational};

    #[test]
    fn matrix_wire() {
        let m = Matrix::new(2, 2, vec![int(1), rational(-1, 2), int(0), int(4)]).unwrap();
        let s = m.to_json();
        assert_eq!(s, r#"{"rows":2,"cols":2,"entries":[["1","-1/2"],["0","4"]]}"#);
        assert_eq!(Matrix::from_json(&s).unwrap(), m);
        assert!(Matrix::<Rational>::from_json(r#"{"rows":2,"cols":2,"entries":[["1"]]}"#).is_err());
        assert!(Matrix::<Rational>::from_json(r#"{"rows":1,"cols":1,"entries":[["x"]]}"#).is_err());
    }

    #[test]
    fn multivector_wire_is_sorted() {
        let s = r#"{"dim":3,"terms":[{"index":[2,3],"coeff":"2/4"},{"index":[1],"coeff":"5"},{"index":[1,2],"coeff":"-1"}]}"#;
        let g = GradedElement::from_json(s).unwrap();
        assert_eq!(
            g.to_json(),
            r#"{"dim":3,"terms":[{"index":[1],"coeff":"5"},{"index":[1,2],"coeff":"-1"},{"index":[2,3],"coeff":"1/2"}]}"#
        );
        assert!(Multivector::from_json(s).is_err());
        let bad = r#"{"dim":3,"terms":[{"index":[3,2],"coeff":"1"}]}"#;
        assert!(matches!(GradedElement::from_json(bad), Err(Error::Parse(_))));
        let dup = r#"{"dim":3,"terms":[{"index":[1],"coeff":"1"},{"index":[1],"coeff":"1"}]}"#;
        assert!(GradedElement::from_json(dup).is_err());
    }

    #[test]
    fn tensor_and_form_wire() {
        let t = Tensor::new(2, 1, vec![int(3), rational(1, 3)]).unwrap();
        assert_eq!(t.to_json(), r#"{"dim":2,"order":1,"components":["3","1/3"]}"#);
        assert!(Tensor::<Rational>::from_json(r#"{"dim":2,"order":2,"components":["1"]}"#).is_err());
        let s = r#"{"vars":2,"terms":[{"index":[2],"poly":[{"exps":[2,0],"coeff":"1"},{"exps":[0,0],"coeff":"-3"}]}]}"#;
        let f = PolyForm::from_json(s).unwrap();
        assert_eq!(f.grade(), 1);
        assert_eq!(
            f.to_json(),
            r#"{"vars":2,"terms":[{"index":[2],"poly":[{"exps":[0,0],"coeff":"-3"},{"exps":[2,0],"coeff":"1"}]}]}"#
        );
        let mixed = r#"{"vars":2,"terms":[{"index":[],"poly":[]},{"index":[1],"poly":[]}]}"#;
        assert!(PolyForm::from_json(mixed).is_err());
    }
}
