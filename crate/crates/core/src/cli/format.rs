//! Text formats for algebras (`.alg`) and representations (`.rep`).
//!
//! ```text
//! # N(2,3)
//! field Q
//! vertex 1 2
//! arrow alpha1: 1 -> 2
//! arrow alpha2: 2 -> 1
//! zero-paths-of-length 3
//! bound 3
//! ```
//!
//! Relation lines are sums of terms `coeff * a1.a2.....ak`, joined by `+`
//! or `-`; the coefficient defaults to 1 and `e(v)` is the trivial path at
//! `v`. Paths compose left to right.

use std::fmt::Write;

use crate::bqa::{paths_of_length, BoundAlgebra, Path, Quiver, Relation};
use crate::exactla::{Field, FieldSpec, Matrix, PrimeField, Rationals};
use crate::rep::Representation;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    /// 1-based; 0 for errors about the file as a whole.
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError { line, message: message.into() }
}

/// An algebra over whichever field its file names.
#[derive(Clone, Debug)]
pub enum AnyAlgebra {
    Rational(BoundAlgebra<Rationals>),
    Prime(BoundAlgebra<PrimeField>),
}

impl AnyAlgebra {
    pub fn field(&self) -> FieldSpec {
        match self {
            AnyAlgebra::Rational(_) => FieldSpec::Rationals,
            AnyAlgebra::Prime(a) => a.field().spec(),
        }
    }

    pub fn to_text(&self) -> String {
        match self {
            AnyAlgebra::Rational(a) => serialize_algebra(a),
            AnyAlgebra::Prime(a) => serialize_algebra(a),
        }
    }
}

pub fn parse_field(s: &str) -> Option<FieldSpec> {
    let s = s.trim();
    if s == "Q" {
        return Some(FieldSpec::Rationals);
    }
    let p = s.strip_prefix("GF(")?.strip_suffix(')')?.trim().parse().ok()?;
    FieldSpec::prime(p).ok()
}

fn lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then_some((i + 1, l))
    })
}

fn bad_id(id: &str) -> bool {
    id.is_empty() || id.starts_with("e(") || id.chars().any(|c| c.is_whitespace() || ".:+-*#>".contains(c))
}

/// Parses an algebra file. `field_override` replaces the `field` line.
pub fn parse_algebra(text: &str, field_override: Option<FieldSpec>) -> Result<AnyAlgebra, ParseError> {
    let mut spec = None;
    for (n, l) in lines(text) {
        if let Some(rest) = l.strip_prefix("field ") {
            spec = Some(parse_field(rest).ok_or_else(|| err(n, format!("unknown field `{}`", rest.trim())))?);
        }
    }
    match field_override.or(spec).unwrap_or(FieldSpec::Rationals) {
        FieldSpec::Rationals => Ok(AnyAlgebra::Rational(parse_algebra_over(Rationals, text)?)),
        FieldSpec::Prime(p) => {
            let f = PrimeField::new(p).map_err(|e| err(0, e.to_string()))?;
            Ok(AnyAlgebra::Prime(parse_algebra_over(f, text)?))
        }
    }
}

enum Pending {
    Relation(usize, String),
    ZeroPaths(usize, usize),
}

/// Parses an algebra file over a given field, ignoring its `field` line.
pub fn parse_algebra_over<F: Field>(f: F, text: &str) -> Result<BoundAlgebra<F>, ParseError> {
    let mut q = Quiver::new();
    let mut pending = Vec::new();
    let mut bound = None;
    for (n, l) in lines(text) {
        let (kw, rest) = l.split_once(char::is_whitespace).unwrap_or((l, ""));
        let rest = rest.trim();
        match kw {
            "field" => {}
            "vertex" => {
                if rest.is_empty() {
                    return Err(err(n, "`vertex` needs at least one id"));
                }
                for id in rest.split_whitespace() {
                    if bad_id(id) {
                        return Err(err(n, format!("invalid vertex id `{id}`")));
                    }
                    q.add_vertex(id).map_err(|e| err(n, e.to_string()))?;
                }
            }
            "arrow" => {
                let (id, ends) = rest.split_once(':').ok_or_else(|| err(n, "expected `arrow id: source -> target`"))?;
                let (s, t) = ends.split_once("->").ok_or_else(|| err(n, "expected `source -> target`"))?;
                let id = id.trim();
                if bad_id(id) {
                    return Err(err(n, format!("invalid arrow id `{id}`")));
                }
                let s = q.vertex_index(s.trim()).map_err(|e| err(n, e.to_string()))?;
                let t = q.vertex_index(t.trim()).map_err(|e| err(n, e.to_string()))?;
                q.add_arrow(id, s, t).map_err(|e| err(n, e.to_string()))?;
            }
            "relation" => pending.push(Pending::Relation(n, rest.to_string())),
            "zero-paths-of-length" => {
                let k = rest.parse().map_err(|_| err(n, format!("expected a length, found `{rest}`")))?;
                if k == 0 {
                    return Err(err(n, "length must be positive"));
                }
                pending.push(Pending::ZeroPaths(n, k));
            }
            "bound" => bound = Some(rest.parse::<usize>().map_err(|_| err(n, format!("expected a number, found `{rest}`")))?),
            other => return Err(err(n, format!("unknown keyword `{other}`"))),
        }
    }
    let mut relations = Vec::new();
    for p in pending {
        match p {
            Pending::Relation(n, body) => relations.push(parse_relation(f, &q, &body).map_err(|m| err(n, m))?),
            Pending::ZeroPaths(n, k) => {
                let all: Vec<usize> = (0..q.num_arrows()).collect();
                let paths = paths_of_length(&q, &all, k);
                if paths.is_empty() {
                    return Err(err(n, format!("no paths of length {k}")));
                }
                relations.extend(paths.into_iter().map(|p| Relation::monomial(f, p)));
            }
        }
    }
    let bound = bound.ok_or_else(|| err(0, "missing `bound` line"))?;
    BoundAlgebra::build(f, q, relations, bound).map_err(|e| err(0, e.to_string()))
}

enum Token<'a> {
    Plus,
    Minus,
    Star,
    Word(&'a str),
}

fn tokenize(s: &str) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut rest = s.trim_start();
    while let Some(c) = rest.chars().next() {
        let len = match c {
            '+' => {
                out.push(Token::Plus);
                1
            }
            '-' => {
                out.push(Token::Minus);
                1
            }
            '*' => {
                out.push(Token::Star);
                1
            }
            _ => {
                let end = rest.find(|c: char| c.is_whitespace() || "+-*".contains(c)).unwrap_or(rest.len());
                out.push(Token::Word(&rest[..end]));
                end
            }
        };
        rest = rest[len..].trim_start();
    }
    out
}

fn parse_path(q: &Quiver, word: &str) -> Result<Path, String> {
    if let Some(v) = word.strip_prefix("e(").and_then(|w| w.strip_suffix(')')) {
        return q.vertex_index(v).map(Path::trivial).map_err(|e| e.to_string());
    }
    let ids: Vec<&str> = word.split('.').collect();
    Path::from_ids(q, &ids).map_err(|e| e.to_string())
}

pub fn parse_relation<F: Field>(f: F, q: &Quiver, body: &str) -> Result<Relation<F>, String> {
    let tokens = tokenize(body);
    let mut terms = Vec::new();
    let mut i = 0;
    while i < tokens.len() {
        let mut sign = f.one();
        let mut signed = false;
        while let Some(t @ (Token::Plus | Token::Minus)) = tokens.get(i) {
            if matches!(t, Token::Minus) {
                sign = f.neg(&sign);
            }
            signed = true;
            i += 1;
        }
        if !terms.is_empty() && !signed {
            return Err("terms must be joined by `+` or `-`".into());
        }
        let Some(Token::Word(w)) = tokens.get(i) else {
            return Err("expected a term".into());
        };
        i += 1;
        let (coeff, path) = if let Some(Token::Star) = tokens.get(i) {
            let Some(Token::Word(p)) = tokens.get(i + 1) else {
                return Err(format!("expected a path after `{w} *`"));
            };
            i += 2;
            (f.parse(w).map_err(|e| e.to_string())?, parse_path(q, p)?)
        } else {
            (f.one(), parse_path(q, w)?)
        };
        terms.push((f.mul(&sign, &coeff), path));
    }
    if terms.is_empty() {
        return Err("empty relation".into());
    }
    Relation::new(f, terms).map_err(|e| e.to_string())
}

pub fn serialize_algebra<F: Field>(alg: &BoundAlgebra<F>) -> String {
    let q = alg.quiver();
    let mut s = String::new();
    let _ = writeln!(s, "field {}", alg.field().spec());
    let _ = writeln!(s, "vertex {}", q.vertices().join(" "));
    for a in q.arrows() {
        let _ = writeln!(s, "arrow {}: {} -> {}", a.id, q.vertex(a.source), q.vertex(a.target));
    }
    for r in alg.relations() {
        let _ = writeln!(s, "relation {}", r.display(alg.field(), q));
    }
    let _ = writeln!(s, "bound {}", alg.bound());
    s
}

/// Parses a representation file against an algebra:
///
/// ```text
/// field Q
/// dim 1 1
/// dim 2 1
/// map alpha1 1x1: 1
/// map beta 2x1: 1 ; 0
/// ```
///
/// Rows are separated by `;`. Unlisted vertices have dimension 0 and
/// unlisted arrows act by zero.
pub fn parse_rep<F: Field>(alg: &BoundAlgebra<F>, text: &str) -> Result<Representation<F>, ParseError> {
    let f = alg.field();
    let q = alg.quiver();
    let mut dims = vec![0; q.num_vertices()];
    let mut maps: Vec<Option<(usize, Matrix<F>)>> = vec![None; q.num_arrows()];
    for (n, l) in lines(text) {
        let (kw, rest) = l.split_once(char::is_whitespace).unwrap_or((l, ""));
        let rest = rest.trim();
        match kw {
            "field" => {
                let spec = parse_field(rest).ok_or_else(|| err(n, format!("unknown field `{rest}`")))?;
                if spec != f.spec() {
                    return Err(err(n, format!("representation is over {spec}, algebra over {}", f.spec())));
                }
            }
            "dim" => {
                let (v, d) = rest.rsplit_once(char::is_whitespace).ok_or_else(|| err(n, "expected `dim vertex n`"))?;
                let v = q.vertex_index(v.trim()).map_err(|e| err(n, e.to_string()))?;
                dims[v] = d.parse().map_err(|_| err(n, format!("bad dimension `{d}`")))?;
            }
            "map" => {
                let (head, body) = rest.split_once(':').ok_or_else(|| err(n, "expected `map arrow RxC: rows`"))?;
                let (id, shape) = head.trim().rsplit_once(char::is_whitespace).ok_or_else(|| err(n, "missing shape"))?;
                let a = q.arrow_index(id.trim()).map_err(|e| err(n, e.to_string()))?;
                let (r, c) = shape.split_once('x').ok_or_else(|| err(n, format!("bad shape `{shape}`")))?;
                let (r, c): (usize, usize) = match (r.parse(), c.parse()) {
                    (Ok(r), Ok(c)) => (r, c),
                    _ => return Err(err(n, format!("bad shape `{shape}`"))),
                };
                let mut rows = Vec::new();
                if r > 0 {
                    for row in body.split(';') {
                        let entries = row
                            .split_whitespace()
                            .map(|x| f.parse(x).map_err(|e| err(n, e.to_string())))
                            .collect::<Result<Vec<_>, _>>()?;
                        if entries.len() != c {
                            return Err(err(n, format!("row has {} entries, expected {c}", entries.len())));
                        }
                        rows.push(entries);
                    }
                }
                if rows.len() != r {
                    return Err(err(n, format!("found {} rows, expected {r}", rows.len())));
                }
                maps[a] = Some((n, Matrix::from_rows(f, rows, c)));
            }
            other => return Err(err(n, format!("unknown keyword `{other}`"))),
        }
    }
    let mut out = Vec::new();
    for (a, m) in maps.into_iter().enumerate() {
        let arrow = q.arrow(a);
        let (r, c) = (dims[arrow.target], dims[arrow.source]);
        out.push(match m {
            None => Matrix::zeros(f, r, c),
            Some((n, m)) if m.shape() != (r, c) => {
                return Err(err(n, format!("map {} should be {r}x{c}", arrow.id)));
            }
            Some((_, m)) => m,
        });
    }
    let rep = Representation::new(alg, dims, out).map_err(|e| err(0, e.to_string()))?;
    if let Some(r) = rep.first_violated_relation(alg) {
        return Err(err(0, format!("relation `{}` does not hold", alg.relations()[r].display(f, q))));
    }
    Ok(rep)
}

pub fn serialize_rep<F: Field>(alg: &BoundAlgebra<F>, m: &Representation<F>) -> String {
    let q = alg.quiver();
    let mut s = String::new();
    let _ = writeln!(s, "field {}", alg.field().spec());
    for (v, d) in m.dims().iter().enumerate() {
        let _ = writeln!(s, "dim {} {d}", q.vertex(v));
    }
    for (a, mat) in m.maps().iter().enumerate() {
        let rows: Vec<String> = (0..mat.rows()).map(|i| mat.row(i).iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")).collect();
        let _ = writeln!(s, "map {} {}x{}: {}", q.arrow(a).id, mat.rows(), mat.cols(), rows.join(" ; "));
    }
    s
}
