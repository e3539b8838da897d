//! JSON and DOT serialization. Vertices, seed ids, mutation directions, and
//! permutation images are 1-based in every external format; the in-memory API
//! is 0-based throughout.
//!
//! Integer entries are emitted as JSON numbers when they fit in `i64` and as
//! decimal strings otherwise; Laurent coefficients are always decimal strings
//! so that round-trips are exact no matter the size.

use crate::autgroup::GroupTable;
use crate::error::Error;
use crate::explore::MutationClassGraph;
use crate::laurent::LaurentPoly;
use crate::matrix::ExchangeMatrix;
use crate::parity::{ParityPattern, Reachability, TripleReason, UnreachabilityCertificate};
use crate::perm::Permutation;
use crate::quiver::{ArrowMap, ValuedQuiver};
use crate::seed::{MutationWord, Seed};
use crate::similarity::{Sign, SimilarityWitness};
use num_bigint::BigInt;
use serde_json::{json, Map, Value};
use std::fmt::Write as _;

fn bigint_to_json(b: &BigInt) -> Value {
    match i64::try_from(b) {
        Ok(v) => json!(v),
        Err(_) => json!(b.to_string()),
    }
}

fn bigint_from_json(v: &Value) -> Result<BigInt, Error> {
    if let Some(n) = v.as_i64() {
        return Ok(BigInt::from(n));
    }
    if let Some(s) = v.as_str() {
        return s
            .parse()
            .map_err(|_| Error::Parse(format!("not an integer: {s:?}")));
    }
    Err(Error::Parse(format!(
        "expected an integer or decimal string, got {v}"
    )))
}

fn field<'v>(obj: &'v Value, key: &str) -> Result<&'v Value, Error> {
    obj.get(key)
        .ok_or_else(|| Error::Parse(format!("missing field {key:?}")))
}

fn as_array<'v>(v: &'v Value, what: &str) -> Result<&'v Vec<Value>, Error> {
    v.as_array()
        .ok_or_else(|| Error::Parse(format!("{what} must be an array")))
}

fn as_usize(v: &Value, what: &str) -> Result<usize, Error> {
    v.as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| Error::Parse(format!("{what} must be a non-negative integer")))
}

fn one_based_index(v: &Value, what: &str, n: usize) -> Result<usize, Error> {
    let raw = as_usize(v, what)?;
    if raw == 0 || raw > n {
        return Err(Error::Parse(format!(
            "{what} must be between 1 and {n}, got {raw}"
        )));
    }
    Ok(raw - 1)
}

pub fn matrix_to_json(m: &ExchangeMatrix) -> Value {
    let rows: Vec<Value> = (0..m.n())
        .map(|i| Value::Array((0..m.n()).map(|j| bigint_to_json(m.entry(i, j))).collect()))
        .collect();
    json!({ "matrix": rows })
}

pub fn matrix_from_json(v: &Value) -> Result<ExchangeMatrix, Error> {
    let rows_json = as_array(field(v, "matrix")?, "\"matrix\"")?;
    let mut rows = Vec::with_capacity(rows_json.len());
    for row in rows_json {
        let entries = as_array(row, "matrix row")?;
        rows.push(
            entries
                .iter()
                .map(bigint_from_json)
                .collect::<Result<Vec<_>, _>>()?,
        );
    }
    ExchangeMatrix::from_rows(rows)
}

pub fn quiver_to_json(q: &ValuedQuiver) -> Value {
    let arrows: Vec<Value> = q
        .arrows()
        .iter()
        .map(|(&(i, j), (v, w))| {
            json!({
                "from": i + 1,
                "to": j + 1,
                "v": [bigint_to_json(v), bigint_to_json(w)],
            })
        })
        .collect();
    let d: Vec<Value> = q.weights().iter().map(bigint_to_json).collect();
    json!({ "n": q.n(), "arrows": arrows, "d": d })
}

pub fn quiver_from_json(v: &Value) -> Result<ValuedQuiver, Error> {
    let n = as_usize(field(v, "n")?, "\"n\"")?;
    let mut arrows = ArrowMap::new();
    for arrow in as_array(field(v, "arrows")?, "\"arrows\"")? {
        let from = one_based_index(field(arrow, "from")?, "\"from\"", n)?;
        let to = one_based_index(field(arrow, "to")?, "\"to\"", n)?;
        let pair = as_array(field(arrow, "v")?, "\"v\"")?;
        if pair.len() != 2 {
            return Err(Error::Parse("\"v\" must hold exactly two values".into()));
        }
        let val = (bigint_from_json(&pair[0])?, bigint_from_json(&pair[1])?);
        if arrows.insert((from, to), val).is_some() {
            return Err(Error::Parse(format!(
                "duplicate arrow {} -> {}",
                from + 1,
                to + 1
            )));
        }
    }
    match v.get("d") {
        Some(dv) => {
            let d = as_array(dv, "\"d\"")?
                .iter()
                .map(bigint_from_json)
                .collect::<Result<Vec<_>, _>>()?;
            ValuedQuiver::new(n, arrows, d)
        }
        None => ValuedQuiver::from_arrows(n, arrows),
    }
}

pub fn poly_to_json(p: &LaurentPoly) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .map(|(m, c)| json!({ "e": m.exps(), "c": c.to_string() }))
        .collect();
    json!({ "n": p.n(), "terms": terms })
}

pub fn poly_from_json(v: &Value) -> Result<LaurentPoly, Error> {
    let n = as_usize(field(v, "n")?, "\"n\"")?;
    let mut terms = Vec::new();
    for term in as_array(field(v, "terms")?, "\"terms\"")? {
        let exps = as_array(field(term, "e")?, "\"e\"")?
            .iter()
            .map(|e| {
                e.as_i64()
                    .ok_or_else(|| Error::Parse("exponents must be integers".into()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let coeff = bigint_from_json(field(term, "c")?)?;
        terms.push((exps, coeff));
    }
    LaurentPoly::from_terms(n, terms)
}

pub fn seed_to_json(s: &Seed) -> Value {
    let cluster: Vec<Value> = s.cluster().iter().map(poly_to_json).collect();
    json!({ "cluster": cluster, "quiver": quiver_to_json(s.quiver()) })
}

pub fn seed_from_json(v: &Value) -> Result<Seed, Error> {
    let quiver = quiver_from_json(field(v, "quiver")?)?;
    let cluster = as_array(field(v, "cluster")?, "\"cluster\"")?
        .iter()
        .map(poly_from_json)
        .collect::<Result<Vec<_>, _>>()?;
    Seed::new(cluster, quiver)
}

pub fn quiver_to_text(q: &ValuedQuiver) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "n = {}", q.n());
    for (&(i, j), (v, w)) in q.arrows() {
        let _ = writeln!(out, "{} -> {} ({v},{w})", i + 1, j + 1);
    }
    let d: Vec<String> = q.weights().iter().map(|x| x.to_string()).collect();
    let _ = writeln!(out, "d = [{}]", d.join(", "));
    out
}

pub fn seed_to_text(s: &Seed) -> String {
    let mut out = String::new();
    for (i, x) in s.cluster().iter().enumerate() {
        let _ = writeln!(out, "x{} = {}", i + 1, x);
    }
    let _ = writeln!(out, "B = {}", s.matrix());
    out
}

/// Any of the three accepted input shapes, recognized by its distinguishing
/// key.
#[derive(Debug, Clone)]
pub enum InputObject {
    Matrix(ExchangeMatrix),
    Quiver(ValuedQuiver),
    Seed(Seed),
}

impl InputObject {
    pub fn kind(&self) -> &'static str {
        match self {
            InputObject::Matrix(_) => "matrix",
            InputObject::Quiver(_) => "quiver",
            InputObject::Seed(_) => "seed",
        }
    }

    /// A seed view of the input: matrices and quivers get their initial seed.
    pub fn into_seed(self) -> Result<Seed, Error> {
        match self {
            InputObject::Matrix(m) => Ok(Seed::initial(ValuedQuiver::from_matrix(&m)?)),
            InputObject::Quiver(q) => Ok(Seed::initial(q)),
            InputObject::Seed(s) => Ok(s),
        }
    }

    pub fn matrix(&self) -> Result<ExchangeMatrix, Error> {
        match self {
            InputObject::Matrix(m) => Ok(m.clone()),
            InputObject::Quiver(q) => Ok(q.matrix()),
            InputObject::Seed(s) => Ok(s.matrix()),
        }
    }
}

/// Parses a JSON document holding a seed, quiver, or matrix.
pub fn parse_object(text: &str) -> Result<InputObject, Error> {
    let value: Value =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("invalid JSON: {e}")))?;
    if value.get("cluster").is_some() {
        Ok(InputObject::Seed(seed_from_json(&value)?))
    } else if value.get("arrows").is_some() {
        Ok(InputObject::Quiver(quiver_from_json(&value)?))
    } else if value.get("matrix").is_some() {
        Ok(InputObject::Matrix(matrix_from_json(&value)?))
    } else {
        Err(Error::Parse(
            "expected an object with a \"cluster\", \"arrows\", or \"matrix\" field".into(),
        ))
    }
}

pub fn word_to_json(w: &MutationWord) -> Value {
    Value::Array(w.0.iter().map(|k| json!(k + 1)).collect())
}

pub fn permutation_to_json(p: &Permutation) -> Value {
    Value::Array((0..p.n()).map(|i| json!(p.apply(i) + 1)).collect())
}

pub fn graph_summary_line(g: &MutationClassGraph) -> String {
    format!(
        "labeled={} clusters={} variables={} complete={} positive={}",
        g.len(),
        g.cluster_count(),
        g.variable_count(),
        g.complete(),
        g.all_variables_positive()
    )
}

pub fn graph_to_json(g: &MutationClassGraph) -> Value {
    let seeds: Vec<Value> = g
        .seeds()
        .iter()
        .enumerate()
        .map(|(id, s)| {
            json!({
                "id": id + 1,
                "depth": g.depth(id),
                "word": word_to_json(&g.word_to(id)),
                "seed": seed_to_json(s),
            })
        })
        .collect();
    let edges: Vec<Value> = g
        .steps()
        .map(|(from, k, to)| json!({ "from": from + 1, "direction": k + 1, "to": to + 1 }))
        .collect();
    json!({
        "summary": {
            "labeled": g.len(),
            "clusters": g.cluster_count(),
            "variables": g.variable_count(),
            "complete": g.complete(),
            "positive": g.all_variables_positive(),
        },
        "seeds": seeds,
        "edges": edges,
    })
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// DOT rendering of the labeled exchange graph: nodes are seed ids, edges are
/// labeled by their mutation direction. With `verbose`, node labels carry the
/// cluster contents (which can be large).
pub fn graph_to_dot(g: &MutationClassGraph, verbose: bool) -> String {
    let mut out = String::from("graph mutation_class {\n  node [shape=circle];\n");
    for (id, seed) in g.seeds().iter().enumerate() {
        if verbose {
            let cluster = seed
                .cluster()
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(", ");
            let _ = writeln!(
                out,
                "  s{} [label=\"{}: {}\"];",
                id + 1,
                id + 1,
                dot_escape(&cluster)
            );
        } else {
            let _ = writeln!(out, "  s{} [label=\"{}\"];", id + 1, id + 1);
        }
    }
    for (from, k, to) in g.steps() {
        if from < to {
            let _ = writeln!(out, "  s{} -- s{} [label=\"{}\"];", from + 1, to + 1, k + 1);
        }
    }
    out.push_str("}\n");
    out
}

pub fn pattern_to_json(p: &ParityPattern) -> Value {
    let rows: Vec<Value> = (0..p.n())
        .map(|i| {
            Value::Array(
                (0..p.n())
                    .map(|j| json!(p.entry(i, j).to_string()))
                    .collect(),
            )
        })
        .collect();
    json!({ "n": p.n(), "rows": rows })
}

pub fn certificate_to_json(c: &UnreachabilityCertificate) -> Value {
    let justifications: Vec<Value> = c
        .justifications
        .iter()
        .map(|tj| {
            json!({
                "k": tj.k + 1,
                "i": tj.i + 1,
                "j": tj.j + 1,
                "reason": match tj.reason {
                    TripleReason::IkEven => "ik_even",
                    TripleReason::KjEven => "kj_even",
                },
            })
        })
        .collect();
    let violations: Vec<Value> = c
        .violations
        .iter()
        .map(|&(i, j)| json!([i + 1, j + 1]))
        .collect();
    json!({
        "pattern": pattern_to_json(&c.pattern),
        "start": matrix_to_json(&c.start),
        "target": matrix_to_json(&c.target),
        "justifications": justifications,
        "violations": violations,
    })
}

pub fn certificate_to_text(c: &UnreachabilityCertificate) -> String {
    let mut out = String::from("certified unreachable\n");
    let _ = writeln!(out, "pattern (parities of the start matrix):");
    for i in 0..c.pattern.n() {
        let row: Vec<String> = (0..c.pattern.n())
            .map(|j| c.pattern.entry(i, j).to_string())
            .collect();
        let _ = writeln!(out, "  [{}]", row.join(", "));
    }
    let _ = writeln!(
        out,
        "closure: {} justified triples (k, i, j)",
        c.justifications.len()
    );
    for tj in &c.justifications {
        let reason = match tj.reason {
            TripleReason::IkEven => format!("entry ({},{}) is even", tj.i + 1, tj.k + 1),
            TripleReason::KjEven => format!("entry ({},{}) is even", tj.k + 1, tj.j + 1),
        };
        let _ = writeln!(
            out,
            "  mu_{} keeps ({},{}): {}",
            tj.k + 1,
            tj.i + 1,
            tj.j + 1,
            reason
        );
    }
    let spots: Vec<String> = c
        .violations
        .iter()
        .map(|&(i, j)| format!("({},{})", i + 1, j + 1))
        .collect();
    let _ = writeln!(out, "target violates the pattern at: {}", spots.join(", "));
    out
}

pub fn reachability_to_json(r: &Reachability) -> Value {
    match r {
        Reachability::Reached(word) => json!({
            "outcome": "reached",
            "word": word_to_json(word),
        }),
        Reachability::NotFoundWithinLimits { explored, exhausted } => json!({
            "outcome": if *exhausted { "unreachable_exhausted" } else { "unknown" },
            "explored": explored,
            "exhausted": exhausted,
        }),
    }
}

pub fn witnesses_to_json(witnesses: &[SimilarityWitness]) -> Value {
    let list: Vec<Value> = witnesses
        .iter()
        .map(|w| {
            json!({
                "sigma": permutation_to_json(&w.sigma),
                "sign": match w.sign { Sign::Plus => 1, Sign::Minus => -1 },
            })
        })
        .collect();
    json!({ "similar": !witnesses.is_empty(), "witnesses": list })
}

pub fn group_to_json(table: &GroupTable) -> Value {
    let elements: Vec<Value> = table
        .elements
        .iter()
        .enumerate()
        .map(|(id, e)| {
            let images: Vec<Value> = e.images.iter().map(poly_to_json).collect();
            let display: Vec<String> = e.images.iter().map(|p| p.to_string()).collect();
            json!({
                "id": id + 1,
                "images": images,
                "display": display,
                "seed": e.seed + 1,
                "sigma": permutation_to_json(&e.sigma),
                "sign": match e.sign { Sign::Plus => 1, Sign::Minus => -1 },
                "order": table.element_orders[id],
            })
        })
        .collect();
    let row_major: Vec<Value> = table
        .multiplication
        .iter()
        .map(|row| Value::Array(row.iter().map(|x| json!(x + 1)).collect()))
        .collect();
    let squares: Vec<Value> = table
        .element_orders
        .iter()
        .enumerate()
        .filter(|(_, &o)| o == 2)
        .map(|(id, _)| json!(id + 1))
        .collect();
    let mut pair_orders = Vec::new();
    for a in 0..table.order() {
        if table.element_orders[a] != 2 {
            continue;
        }
        for b in (a + 1)..table.order() {
            if table.element_orders[b] != 2 {
                continue;
            }
            let m = table.element_orders[table.multiplication[a][b]];
            if m <= 12 {
                pair_orders.push(json!({ "a": a + 1, "b": b + 1, "m": m }));
            }
        }
    }
    let mut relations = Map::new();
    relations.insert("squares".into(), Value::Array(squares));
    relations.insert("pair_orders".into(), Value::Array(pair_orders));
    json!({
        "order": table.order(),
        "identity": table.identity + 1,
        "elements": elements,
        "table": row_major,
        "inverses": table.inverses.iter().map(|x| json!(x + 1)).collect::<Vec<_>>(),
        "relations": Value::Object(relations),
    })
}

pub fn group_to_text(table: &GroupTable) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "order={}", table.order());
    let _ = writeln!(
        out,
        "element orders: {}",
        table
            .element_orders
            .iter()
            .map(|o| o.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    );
    if let Some((a, b, m)) = table.dihedral_presentation() {
        let _ = writeln!(
            out,
            "dihedral presentation: T1^2 = T2^2 = (T1 T2)^{m} = 1 with T1 = g{}, T2 = g{}",
            a + 1,
            b + 1
        );
    }
    for (id, e) in table.elements.iter().enumerate() {
        let images: Vec<String> = e.images.iter().map(|p| p.to_string()).collect();
        let _ = writeln!(
            out,
            "g{} (order {}): x_i -> [{}]",
            id + 1,
            table.element_orders[id],
            images.join(", ")
        );
    }
    out
}
