//! JSON input documents.
//!
//! Scalars are exact strings (`"3"`, `"-1/2"`, `"1/2+3/4 i"`) or
//! `{"sqrt": "2", "scale": "3"}` for `3·√2`. Forms are lists of
//! `[[e0, e1, e2], coefficient]`, chart-0 polynomials lists of
//! `[[a, b], coefficient]` for `c·z^a w^b`.
//!
//! ```json
//! {"kind": "k0field", "lambda": [[[1,0,0], "1"]], "mu": [[[0,0,2], "1"]], "c": ["0","0","1"]}
//! {"kind": "k1field", "a": [["1","0","0"],["0","-1","0"],["0","0","0"]], "b": ..., "c": ...}
//! {"kind": "k2field", "f": [[[1,0], "1"]], "g": [], "h": "1", "c": ["0","0","1"]}
//! {"kind": "kbigfield", "k": 5, "rho": [...], "lambda": "2", "c": [...]}
//! {"kind": "section", "tangent": [[...],[...],[...]]}   or "tm1": [..] or "line": {"k": 2, "form": [...]}
//! {"kind": "pair", "q": [...], "c": [...]}
//! ```

use serde::Deserialize;
use thiserror::Error;

use crate::algebra::{Form, Gaussian, Mat, Monomial, Poly, Scalar};
use crate::cohiggs::{CoHiggsField, CoHiggsK0, CoHiggsK1, CoHiggsK2, CoHiggsKBig};
use crate::geometry::{LineSection, TangentSection, Tm1Section};

#[derive(Debug, Error)]
pub enum InputError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{path}: {msg}")]
    Invalid { path: String, msg: String },
}

fn invalid(path: &str, msg: impl ToString) -> InputError {
    InputError::Invalid { path: path.to_string(), msg: msg.to_string() }
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum ScalarDoc {
    Plain(String),
    Sqrt { sqrt: String, scale: Option<String> },
}

type FormDoc = Vec<([u32; 3], ScalarDoc)>;
type PolyDoc = Vec<([u32; 2], ScalarDoc)>;
type VecDoc = [ScalarDoc; 3];
type MatDoc = [[ScalarDoc; 3]; 3];

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct LineDoc {
    k: u32,
    form: FormDoc,
}

#[derive(Debug, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
enum Document {
    K0field { lambda: FormDoc, mu: FormDoc, c: VecDoc },
    K1field { a: MatDoc, b: MatDoc, c: MatDoc },
    K2field { f: PolyDoc, g: PolyDoc, h: ScalarDoc, c: VecDoc },
    Kbigfield { k: u32, rho: FormDoc, lambda: ScalarDoc, c: VecDoc },
    Section { tangent: Option<MatDoc>, tm1: Option<VecDoc>, line: Option<LineDoc> },
    Pair { q: FormDoc, c: VecDoc },
}

/// A parsed input document.
#[derive(Clone, Debug, PartialEq)]
pub enum Input {
    Field(CoHiggsField),
    Tangent(TangentSection),
    Tm1(Tm1Section),
    Line(LineSection),
    Pair(LineSection, Tm1Section),
}

fn gaussian(path: &str, s: &str) -> Result<Gaussian, InputError> {
    s.parse().map_err(|e| invalid(path, e))
}

fn scalar(path: &str, d: &ScalarDoc) -> Result<Scalar, InputError> {
    match d {
        ScalarDoc::Plain(s) => Ok(Scalar::from(gaussian(path, s)?)),
        ScalarDoc::Sqrt { sqrt, scale } => {
            let r = Scalar::from(gaussian(path, sqrt)?).exact_sqrt().map_err(|e| invalid(path, e))?.root;
            match scale {
                Some(c) => Ok(&r * &Scalar::from(gaussian(path, c)?)),
                None => Ok(r),
            }
        }
    }
}

fn form(path: &str, degree: u32, d: &FormDoc) -> Result<Form, InputError> {
    let mut terms = Vec::new();
    for (i, (e, c)) in d.iter().enumerate() {
        let p = format!("{path}[{i}]");
        if e.iter().sum::<u32>() != degree {
            return Err(invalid(&p, format!("exponents {e:?} do not have total degree {degree}")));
        }
        terms.push((*e, scalar(&p, c)?));
    }
    Ok(Form::from_terms(degree, terms))
}

fn poly(path: &str, d: &PolyDoc) -> Result<Poly, InputError> {
    let mut terms = Vec::new();
    for (i, ([a, b], c)) in d.iter().enumerate() {
        terms.push((Monomial(*a, *b), scalar(&format!("{path}[{i}]"), c)?));
    }
    Ok(Poly::from_terms(terms))
}

fn vector(path: &str, d: &VecDoc) -> Result<Tm1Section, InputError> {
    let [a, b, c] = d;
    Ok(Tm1Section::new([
        scalar(&format!("{path}[0]"), a)?,
        scalar(&format!("{path}[1]"), b)?,
        scalar(&format!("{path}[2]"), c)?,
    ]))
}

fn tangent(path: &str, d: &MatDoc) -> Result<TangentSection, InputError> {
    let mut rows = Vec::new();
    for (i, r) in d.iter().enumerate() {
        let row = r
            .iter()
            .enumerate()
            .map(|(j, x)| scalar(&format!("{path}[{i}][{j}]"), x))
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(row);
    }
    Ok(TangentSection::new(Mat::from_rows(rows)))
}

fn field_err(path: &str) -> impl Fn(crate::cohiggs::CoHiggsError) -> InputError + '_ {
    move |e| invalid(path, e)
}

pub fn parse_input(text: &str) -> Result<Input, InputError> {
    let doc: Document = serde_json::from_str(text)?;
    Ok(match doc {
        Document::K0field { lambda, mu, c } => {
            let f = CoHiggsK0::new(
                LineSection::new(form("lambda", 1, &lambda)?),
                LineSection::new(form("mu", 2, &mu)?),
                vector("c", &c)?,
            )
            .map_err(field_err("k0field"))?;
            Input::Field(CoHiggsField::K0(f))
        }
        Document::K1field { a, b, c } => {
            Input::Field(CoHiggsField::K1(CoHiggsK1::new(tangent("a", &a)?, tangent("b", &b)?, tangent("c", &c)?)))
        }
        Document::K2field { f, g, h, c } => {
            let k2 = CoHiggsK2::new(poly("f", &f)?, poly("g", &g)?, scalar("h", &h)?, vector("c", &c)?)
                .map_err(field_err("k2field"))?;
            Input::Field(CoHiggsField::K2(k2))
        }
        Document::Kbigfield { k, rho, lambda, c } => {
            let kb = CoHiggsKBig::new(k, LineSection::new(form("rho", 2, &rho)?), scalar("lambda", &lambda)?, vector("c", &c)?)
                .map_err(field_err("kbigfield"))?;
            Input::Field(CoHiggsField::KBig(kb))
        }
        Document::Section { tangent: t, tm1, line } => match (t, tm1, line) {
            (Some(m), None, None) => Input::Tangent(tangent("tangent", &m)?),
            (None, Some(v), None) => Input::Tm1(vector("tm1", &v)?),
            (None, None, Some(l)) => Input::Line(LineSection::new(form("line.form", l.k, &l.form)?)),
            _ => return Err(invalid("section", "give exactly one of `tangent`, `tm1`, `line`")),
        },
        Document::Pair { q, c } => Input::Pair(LineSection::new(form("q", 2, &q)?), vector("c", &c)?),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_each_kind() {
        let k0 = r#"{"kind":"k0field","lambda":[],"mu":[[[0,0,2],"1"]],"c":["0","0","1"]}"#;
        assert!(matches!(parse_input(k0).unwrap(), Input::Field(CoHiggsField::K0(_))));
        let k2 = r#"{"kind":"k2field","f":[[[1,0],"1/2"]],"g":[],"h":"1+2 i","c":["0","1","1"]}"#;
        assert!(matches!(parse_input(k2).unwrap(), Input::Field(CoHiggsField::K2(_))));
        let pair = r#"{"kind":"pair","q":[[[2,0,0],{"sqrt":"2","scale":"3"}]],"c":["2","0","0"]}"#;
        let Input::Pair(q, _) = parse_input(pair).unwrap() else { panic!() };
        assert_eq!(q.form().coeff([2, 0, 0]).pow(2), Scalar::int(18));
        let sec = r#"{"kind":"section","tm1":["1","-1","0"]}"#;
        assert_eq!(parse_input(sec).unwrap(), Input::Tm1(Tm1Section::from_ints([1, -1, 0])));
    }

    #[test]
    fn reports_positions() {
        let e = parse_input("{\"kind\": \"pair\",\n \"q\": [}").unwrap_err();
        assert!(e.to_string().contains("line 2"), "{e}");
        let e = parse_input(r#"{"kind":"pair","q":[[[1,0,0],"1"]],"c":["1","0","0"]}"#).unwrap_err();
        assert!(e.to_string().starts_with("q[0]"), "{e}");
        let e = parse_input(r#"{"kind":"pair","q":[],"c":["1/0","0","0"]}"#).unwrap_err();
        assert!(e.to_string().starts_with("c[0]"), "{e}");
        assert!(parse_input(r#"{"kind":"section"}"#).is_err());
    }
}
