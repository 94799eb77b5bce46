//! JSON description of a complete intersection.
//!
//! ```json
//! { "n": 2, "degrees": [6], "forms": "fermat", "label": "sextic" }
//! ```
//!
//! `forms` is `"fermat"` (form `j` is `sum_i (i+1)^j X_i^{d_j}`), `"random"`
//! (coefficients in `-3..=3` drawn from `seed`), or one entry per degree. An
//! entry is either a polynomial string such as `"X0^6 + X1^6 + X2^6"` or a
//! list of `[num, den, [e_0, ..., e_n]]` terms. `"preset": name` may replace
//! everything else.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::cring::CompleteIntersection;
use crate::error::{Error, Result};
use crate::field::int;
use crate::polyring::{format_poly, parse_poly, Monomial};
use crate::{presets, Poly, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FormsKind {
    Fermat,
    Random,
    Explicit,
    Preset,
}

/// A parsed and validated curve spec.
#[derive(Clone, Debug)]
pub struct CurveSpec {
    pub label: String,
    pub n: usize,
    pub degrees: Vec<i64>,
    pub kind: FormsKind,
    pub seed: Option<u64>,
    pub forms: Vec<Poly>,
}

fn err(location: impl Into<String>, message: impl Into<String>) -> Error {
    Error::parse(location, message)
}

fn as_u64(v: &Value, loc: &str) -> Result<u64> {
    v.as_u64().ok_or_else(|| err(loc, format!("expected a nonnegative integer, found {v}")))
}

fn big(v: &Value, loc: &str) -> Result<BigInt> {
    match v {
        Value::Number(num) if num.is_i64() || num.is_u64() => Ok(num.to_string().parse().expect("integer literal")),
        Value::String(s) => s.trim().parse().map_err(|_| err(loc, format!("{s:?} is not an integer"))),
        other => Err(err(loc, format!("expected an integer, found {other}"))),
    }
}

fn fermat_family(n: usize, degrees: &[i64]) -> Vec<Poly> {
    degrees
        .iter()
        .enumerate()
        .map(|(j, &d)| {
            Poly::from_terms(
                n + 1,
                (0..=n).map(|i| {
                    let mut e = vec![0; n + 1];
                    e[i] = d as u32;
                    (Monomial::new(e), int((i as i64 + 1).pow(j as u32)))
                }),
            )
        })
        .collect()
}

fn parse_term(v: &Value, nvars: usize, loc: &str) -> Result<(Monomial, Rational)> {
    let arr = v
        .as_array()
        .filter(|a| a.len() == 3)
        .ok_or_else(|| err(loc, "a term is [num, den, [exponents]]"))?;
    let num = big(&arr[0], &format!("{loc}[0]"))?;
    let den = big(&arr[1], &format!("{loc}[1]"))?;
    if den == BigInt::from(0) {
        return Err(err(format!("{loc}[1]"), "zero denominator"));
    }
    let exps = arr[2]
        .as_array()
        .ok_or_else(|| err(format!("{loc}[2]"), "exponents must be a list"))?;
    if exps.len() != nvars {
        return Err(err(
            format!("{loc}[2]"),
            format!("{} exponents for {nvars} variables", exps.len()),
        ));
    }
    let exps = exps
        .iter()
        .enumerate()
        .map(|(i, x)| {
            let loc = format!("{loc}[2][{i}]");
            u32::try_from(as_u64(x, &loc)?).map_err(|_| err(loc, "exponent too large"))
        })
        .collect::<Result<Vec<u32>>>()?;
    Ok((Monomial::new(exps), Rational::new(num, den)))
}

fn parse_form(v: &Value, nvars: usize, loc: &str) -> Result<Poly> {
    match v {
        Value::String(s) => parse_poly(s, nvars).map_err(|e| match e {
            Error::Parse { location, message } => err(format!("{loc} {location}"), message),
            other => other,
        }),
        Value::Array(terms) => {
            let mut p = Poly::zero(nvars);
            for (k, t) in terms.iter().enumerate() {
                let (m, c) = parse_term(t, nvars, &format!("{loc}[{k}]"))?;
                p.add_term(m, c);
            }
            Ok(p)
        }
        other => Err(err(loc, format!("expected a polynomial string or term list, found {other}"))),
    }
}

impl CurveSpec {
    pub fn from_json_str(text: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(text)
            .map_err(|e| err(format!("line {} column {}", e.line(), e.column()), e.to_string()))?;
        Self::from_value(&v)
    }

    pub fn from_value(v: &Value) -> Result<Self> {
        let obj = v.as_object().ok_or_else(|| err("$", "expected a JSON object"))?;
        for key in obj.keys() {
            if !["n", "degrees", "forms", "seed", "label", "preset"].contains(&key.as_str()) {
                return Err(err(key.as_str(), "unknown field"));
            }
        }
        let label = match obj.get("label") {
            None => None,
            Some(Value::String(s)) => Some(s.clone()),
            Some(other) => return Err(err("label", format!("expected a string, found {other}"))),
        };
        let seed = obj.get("seed").map(|s| as_u64(s, "seed")).transpose()?;

        if let Some(p) = obj.get("preset") {
            let name = p.as_str().ok_or_else(|| err("preset", "expected a string"))?;
            let ci = presets::by_name(name).ok_or_else(|| {
                let known: Vec<&str> = presets::curve_presets().into_iter().map(|(n, _)| n).collect();
                err("preset", format!("unknown preset {name:?}; known: {}", known.join(", ")))
            })?;
            return Ok(CurveSpec {
                label: label.unwrap_or_else(|| name.to_string()),
                n: ci.n(),
                degrees: ci.degrees().to_vec(),
                kind: FormsKind::Preset,
                seed,
                forms: ci.forms().to_vec(),
            });
        }

        let n = as_u64(obj.get("n").ok_or_else(|| err("n", "missing field"))?, "n")? as usize;
        if n < 1 {
            return Err(err("n", "need n >= 1"));
        }
        let degrees = obj
            .get("degrees")
            .ok_or_else(|| err("degrees", "missing field"))?
            .as_array()
            .ok_or_else(|| err("degrees", "expected a list"))?
            .iter()
            .enumerate()
            .map(|(j, d)| {
                let loc = format!("degrees[{j}]");
                let d = as_u64(d, &loc)?;
                if d < 2 {
                    return Err(err(loc, "degrees must be >= 2"));
                }
                Ok(d as i64)
            })
            .collect::<Result<Vec<i64>>>()?;
        if degrees.is_empty() {
            return Err(err("degrees", "need at least one form"));
        }
        let forms_v = obj.get("forms").ok_or_else(|| err("forms", "missing field"))?;
        let (kind, forms) = match forms_v {
            Value::String(s) if s == "fermat" => (FormsKind::Fermat, fermat_family(n, &degrees)),
            Value::String(s) if s == "random" => {
                let seed = seed.ok_or_else(|| err("seed", "random forms need a seed"))?;
                let ds: Vec<u32> = degrees.iter().map(|&d| d as u32).collect();
                (FormsKind::Random, presets::random_forms(n, &ds, seed))
            }
            Value::String(s) => {
                return Err(err("forms", format!("{s:?} is not \"fermat\", \"random\" or a list")))
            }
            Value::Array(list) => {
                if list.len() != degrees.len() {
                    return Err(err(
                        "forms",
                        format!("{} forms for {} degrees", list.len(), degrees.len()),
                    ));
                }
                let mut forms = Vec::with_capacity(list.len());
                for (j, f) in list.iter().enumerate() {
                    let loc = format!("forms[{j}]");
                    let p = parse_form(f, n + 1, &loc)?;
                    match p.homogeneous_degree() {
                        Some(d) if d as i64 == degrees[j] => forms.push(p),
                        Some(d) => {
                            return Err(err(loc, format!("degree {d}, but degrees[{j}] = {}", degrees[j])))
                        }
                        None => return Err(err(loc, "form is zero or not homogeneous")),
                    }
                }
                (FormsKind::Explicit, forms)
            }
            other => return Err(err("forms", format!("unexpected {other}"))),
        };
        let label = label.unwrap_or_else(|| {
            let ds: Vec<String> = degrees.iter().map(i64::to_string).collect();
            format!("P^{n} ({})", ds.join(","))
        });
        Ok(CurveSpec {
            label,
            n,
            degrees,
            kind,
            seed,
            forms,
        })
    }

    pub fn from_file(path: &std::path::Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| err(path.display().to_string(), e.to_string()))?;
        Self::from_json_str(&text).map_err(|e| match e {
            Error::Parse { location, message } => err(format!("{}: {location}", path.display()), message),
            other => other,
        })
    }

    /// Builds the ring; certification failures surface here.
    pub fn build(&self) -> Result<CompleteIntersection> {
        CompleteIntersection::new(self.n, self.forms.clone())
    }

    /// Explicit JSON form that reloads to the same forms.
    pub fn to_json(&self) -> Value {
        serde_json::json!({
            "label": self.label,
            "n": self.n,
            "degrees": self.degrees,
            "forms": self.forms.iter().map(format_poly).collect::<Vec<_>>(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fermat_sextic() {
        let s = CurveSpec::from_json_str(r#"{ "n": 2, "degrees": [6], "forms": "fermat", "seed": 42 }"#).unwrap();
        let ci = s.build().unwrap();
        assert_eq!(ci.hilbert_function(6).unwrap(), 27);
        assert_eq!(s.forms[0], presets::fermat(2, 6));
    }

    #[test]
    fn fermat_pencil_matches_preset() {
        let s = CurveSpec::from_json_str(r#"{ "n": 3, "degrees": [2, 2], "forms": "fermat" }"#).unwrap();
        assert_eq!(s.forms, presets::elliptic_quartic().forms().to_vec());
    }

    #[test]
    fn explicit_forms() {
        let s = CurveSpec::from_json_str(
            r#"{ "n": 2, "degrees": [5], "forms": [[[1, 1, [5, 0, 0]], [1, 1, [0, 5, 0]], ["1", "1", [0, 0, 5]]]] }"#,
        )
        .unwrap();
        assert_eq!(s.forms[0], presets::fermat(2, 5));
        let t = CurveSpec::from_json_str(r#"{ "n": 2, "degrees": [5], "forms": ["X0^5 + X1^5 + X2^5"] }"#).unwrap();
        assert_eq!(t.forms, s.forms);
        let back = CurveSpec::from_value(&t.to_json()).unwrap();
        assert_eq!(back.forms, t.forms);
    }

    #[test]
    fn errors_name_the_field() {
        let cases = [
            (r#"{ "n": 2, "degrees": [6] "#, "line"),
            (r#"{ "degrees": [6], "forms": "fermat" }"#, "n"),
            (r#"{ "n": 2, "degrees": [1], "forms": "fermat" }"#, "degrees[0]"),
            (r#"{ "n": 2, "degrees": [6], "forms": "random" }"#, "seed"),
            (r#"{ "n": 2, "degrees": [2], "forms": [[[1, 0, [2, 0, 0]]]] }"#, "forms[0][0][1]"),
            (r#"{ "n": 2, "degrees": [2], "forms": [[[1, 1, [2, 0]]]] }"#, "forms[0][0][2]"),
            (r#"{ "n": 2, "degrees": [3], "forms": ["X0^2"] }"#, "forms[0]"),
            (r#"{ "n": 2, "degrees": [2], "forms": ["X0^2 + * X1"] }"#, "forms[0] column"),
            (r#"{ "n": 2, "degrees": [2], "forms": "fermat", "colour": 1 }"#, "colour"),
        ];
        for (text, want) in cases {
            match CurveSpec::from_json_str(text) {
                Err(Error::Parse { location, .. }) => assert!(location.starts_with(want), "{text}: {location}"),
                other => panic!("{text}: {other:?}"),
            }
        }
    }

    #[test]
    fn presets_and_random() {
        let p = CurveSpec::from_json_str(r#"{ "preset": "canonical-genus5" }"#).unwrap();
        assert_eq!(p.degrees, vec![2, 2, 2]);
        let r = CurveSpec::from_json_str(r#"{ "n": 4, "degrees": [2, 2, 2], "forms": "random", "seed": 5 }"#).unwrap();
        assert_eq!(r.forms, p.forms);
    }
}
