//! Scalars, fields and sparse tensors as JSON values. Prime-field scalars
//! are integers in `0..p`, rationals are reduced `"a/b"` strings and
//! extension scalars are coefficient arrays over the base field.

use serde_json::Value;

use crate::error::{Error, Result};
use crate::linalg::field::{parse_rational, rational_string};
use crate::linalg::{Field, Scalar, SparseMatrix, SparseVec};

/// Entry `[a, b, c, x]`: coefficient `x` at index `b * m + c` of vector `a`.
pub type Entry3 = (usize, usize, usize, Value);
/// Entry `[a, b, x]`.
pub type Entry2 = (usize, usize, Value);
/// Entry `[a, x]`.
pub type Entry1 = (usize, Value);

pub fn schema(path: &str, message: impl Into<String>) -> Error {
    Error::Schema { path: path.to_string(), message: message.into() }
}

pub fn field_string(f: &Field) -> String {
    f.to_string()
}

fn parse_poly(base: &Field, text: &str, path: &str) -> Result<Vec<Scalar>> {
    let mut coeffs: Vec<Scalar> = Vec::new();
    for term in text.split('+') {
        let (c, e) = term.trim().split_once("x^").ok_or_else(|| schema(path, format!("bad term {term:?}")))?;
        let e: usize = e.trim().parse().map_err(|_| schema(path, format!("bad exponent in {term:?}")))?;
        let c = match c.trim() {
            "" => base.one(),
            "-" => base.neg(&base.one()),
            s => match base {
                Field::Rational => Scalar::Q(parse_rational(s).ok_or_else(|| schema(path, format!("bad coefficient {s:?}")))?),
                _ => base.from_i64(s.parse().map_err(|_| schema(path, format!("bad coefficient {s:?}")))?),
            },
        };
        if coeffs.len() <= e {
            coeffs.resize(e + 1, base.zero());
        }
        coeffs[e] = base.add(&coeffs[e], &c);
    }
    Ok(coeffs)
}

/// Inverse of the `Display` form of [`Field`], plus the aliases `Q(i)` and
/// `GF(4)`.
pub fn parse_field(text: &str, path: &str) -> Result<Field> {
    let t = text.trim();
    match t {
        "Q" => return Ok(Field::rationals()),
        "Q(i)" => return Ok(Field::gaussian_rationals()),
        "GF(4)" => return Field::finite(2, &[1, 1, 1]),
        _ => {}
    }
    if let Some(inner) = t.strip_prefix("GF(").and_then(|r| r.strip_suffix(')')) {
        let bad = || schema(path, format!("bad field {t:?}"));
        return match inner.split_once(';') {
            None => Field::prime(inner.trim().parse().map_err(|_| bad())?),
            Some((pn, poly)) => {
                let p: u64 = pn.split_once('^').ok_or_else(bad)?.0.trim().parse().map_err(|_| bad())?;
                let base = Field::prime(p)?;
                Field::extension(base.clone(), parse_poly(&base, poly, path)?)
            }
        };
    }
    if let Some(poly) = t.strip_prefix("Q(").and_then(|r| r.strip_suffix(')')) {
        let base = Field::rationals();
        return Field::extension(base.clone(), parse_poly(&base, poly, path)?);
    }
    Err(schema(path, format!("unknown field {t:?}")))
}

pub fn encode_scalar(f: &Field, a: &Scalar) -> Value {
    match a {
        Scalar::Fp(x) => Value::from(*x),
        Scalar::Q(q) => Value::from(rational_string(q)),
        Scalar::Ext(v) => {
            let base = f.base();
            Value::Array(v.iter().map(|c| encode_scalar(&base, c)).collect())
        }
    }
}

pub fn decode_scalar(f: &Field, v: &Value, path: &str) -> Result<Scalar> {
    let s = match (f, v) {
        (Field::Prime(p), Value::Number(n)) => {
            let x = n.as_u64().filter(|x| x < p).ok_or_else(|| schema(path, format!("{n} is not a residue mod {p}")))?;
            Scalar::Fp(x)
        }
        (Field::Rational, Value::String(s)) => Scalar::Q(parse_rational(s).ok_or_else(|| schema(path, format!("bad rational {s:?}")))?),
        (Field::Rational, Value::Number(n)) => f.from_i64(n.as_i64().ok_or_else(|| schema(path, "integer out of range"))?),
        (Field::Extension(_), Value::Array(items)) => {
            let base = f.base();
            if items.len() != f.degree() {
                return Err(schema(path, format!("expected {} coefficients", f.degree())));
            }
            let cs = items.iter().enumerate().map(|(i, x)| decode_scalar(&base, x, &format!("{path}/{i}"))).collect::<Result<Vec<_>>>()?;
            Scalar::Ext(cs)
        }
        _ => return Err(schema(path, format!("expected a scalar of {f}"))),
    };
    Ok(s)
}

fn check_index(i: usize, bound: usize, path: &str) -> Result<usize> {
    if i >= bound {
        return Err(schema(path, format!("index {i} out of range 0..{bound}")));
    }
    Ok(i)
}

pub fn encode_vec(f: &Field, v: &SparseVec) -> Vec<Entry1> {
    v.iter().map(|(i, x)| (*i, encode_scalar(f, x))).collect()
}

pub fn decode_vec(f: &Field, entries: &[Entry1], dim: usize, path: &str) -> Result<SparseVec> {
    let mut out = Vec::with_capacity(entries.len());
    for (e, (i, x)) in entries.iter().enumerate() {
        let p = format!("{path}/{e}");
        out.push((check_index(*i, dim, &p)?, decode_scalar(f, x, &format!("{p}/1"))?));
    }
    Ok(SparseVec::from_entries(out, f))
}

/// A list of vectors, vector `a` having coefficient `x` at index `b`.
pub fn encode_table(f: &Field, vs: &[SparseVec]) -> Vec<Entry2> {
    vs.iter().enumerate().flat_map(|(a, v)| v.iter().map(move |(b, x)| (a, *b, encode_scalar(f, x)))).collect()
}

pub fn decode_table(f: &Field, entries: &[Entry2], count: usize, dim: usize, path: &str) -> Result<Vec<SparseVec>> {
    let mut cols: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); count];
    for (e, (a, b, x)) in entries.iter().enumerate() {
        let p = format!("{path}/{e}");
        let a = check_index(*a, count, &p)?;
        cols[a].push((check_index(*b, dim, &p)?, decode_scalar(f, x, &format!("{p}/2"))?));
    }
    Ok(cols.into_iter().map(|c| SparseVec::from_entries(c, f)).collect())
}

/// A list of vectors in a tensor square, index `b * m + c` written `[a, b, c, x]`.
pub fn encode_table3(f: &Field, vs: &[SparseVec], m: usize) -> Vec<Entry3> {
    vs.iter()
        .enumerate()
        .flat_map(|(a, v)| v.iter().map(move |(bc, x)| (a, bc / m, bc % m, encode_scalar(f, x))))
        .collect()
}

pub fn decode_table3(f: &Field, entries: &[Entry3], count: usize, l: usize, m: usize, path: &str) -> Result<Vec<SparseVec>> {
    let flat: Vec<Entry2> = entries
        .iter()
        .enumerate()
        .map(|(e, (a, b, c, x))| {
            let p = format!("{path}/{e}");
            Ok((*a, check_index(*b, l, &p)? * m + check_index(*c, m, &p)?, x.clone()))
        })
        .collect::<Result<_>>()?;
    decode_table(f, &flat, count, l * m, path)
}

/// Matrix entries `[row, col, x]`.
pub fn encode_matrix(f: &Field, a: &SparseMatrix) -> Vec<Entry2> {
    a.entries().into_iter().map(|(i, j, x)| (i, j, encode_scalar(f, &x))).collect()
}

pub fn decode_matrix(f: &Field, entries: &[Entry2], rows: usize, cols: usize, path: &str) -> Result<SparseMatrix> {
    let swapped: Vec<Entry2> = entries.iter().map(|(i, j, x)| (*j, *i, x.clone())).collect();
    let columns = decode_table(f, &swapped, cols, rows, path)?;
    Ok(SparseMatrix::from_columns(f, rows, columns))
}

/// Operators `[t, row, col, x]`, one square matrix per `t`.
pub fn encode_actions(f: &Field, mats: &[SparseMatrix]) -> Vec<Entry3> {
    mats.iter()
        .enumerate()
        .flat_map(|(t, a)| a.entries().into_iter().map(move |(i, j, x)| (t, i, j, encode_scalar(f, &x))))
        .collect()
}

pub fn decode_actions(f: &Field, entries: &[Entry3], count: usize, dim: usize, path: &str) -> Result<Vec<SparseMatrix>> {
    let mut per: Vec<Vec<Entry2>> = vec![Vec::new(); count];
    for (e, (t, i, j, x)) in entries.iter().enumerate() {
        let p = format!("{path}/{e}");
        per[check_index(*t, count, &p)?].push((*j, *i, x.clone()));
    }
    per.iter()
        .map(|es| Ok(SparseMatrix::from_columns(f, dim, decode_table(f, es, dim, dim, path)?)))
        .collect()
}
