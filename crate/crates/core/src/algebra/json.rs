//! Canonical JSON form of polynomials.
//!
//! `{"vars": ["x1", …, "t"], "terms": [{"c": "3/2", "e": {"x1": 2, "a3": 1}}]}`
//! with terms leading-first and exponent keys in block order.

use serde_json::{json, Map, Value};

use super::monomial::Monomial;
use super::poly::MultiPoly;
use super::rational::Rational;
use super::var::{Var, VarTable};
use super::AlgebraError;

pub fn poly_to_json(p: &MultiPoly, vt: &VarTable) -> Value {
    let vars: Vec<String> = vt.vars().iter().map(|v| v.to_string()).collect();
    json!({ "vars": vars, "terms": terms_json(p) })
}

/// Just the `terms` array, for embedding (path edge weights).
pub fn terms_json(p: &MultiPoly) -> Value {
    let terms: Vec<Value> = p
        .sorted_terms()
        .into_iter()
        .map(|(m, c)| {
            let mut e = Map::new();
            for (v, k) in m.iter() {
                e.insert(v.to_string(), Value::from(k));
            }
            json!({ "c": c.to_string(), "e": e })
        })
        .collect();
    Value::Array(terms)
}

pub fn poly_from_json(v: &Value) -> Result<MultiPoly, AlgebraError> {
    let bad = |msg: &str| AlgebraError::Json(msg.to_string());
    let terms = match v {
        Value::Array(_) => v,
        _ => v.get("terms").ok_or_else(|| bad("missing terms"))?,
    };
    let terms = terms.as_array().ok_or_else(|| bad("terms is not an array"))?;
    let mut out = MultiPoly::zero();
    for t in terms {
        let c: Rational = t
            .get("c")
            .and_then(Value::as_str)
            .ok_or_else(|| bad("term without coefficient"))?
            .parse()
            .map_err(|_| bad("bad coefficient"))?;
        let e = t
            .get("e")
            .and_then(Value::as_object)
            .ok_or_else(|| bad("term without exponents"))?;
        let mut pairs = Vec::with_capacity(e.len());
        for (name, k) in e {
            let var: Var = name.parse()?;
            let k = k.as_i64().ok_or_else(|| bad("bad exponent"))?;
            pairs.push((var, k as i32));
        }
        out.add_term(Monomial::from_pairs(pairs), &c);
    }
    Ok(out)
}
