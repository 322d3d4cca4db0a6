//! Line-oriented ideal input files.
//!
//! ```text
//! # comment
//! vars: x y z
//! deg x = (1, 2)
//! deg y = (2, 1)
//! deg z = (3, -3)
//! order: grevlex
//! gen: x^4
//! gen: y^3 - x^3*z
//! ```
//!
//! `deg` lines are optional; omitting them selects the standard grading.
//! When present, every variable needs one and all degree vectors must have
//! the same length. Generators use the polynomial expression grammar.

use hilbtan::groebner::Ideal;
use hilbtan::poly::{parse_polynomial, MonomialOrder, MultiGrading, RingContext};

#[derive(Debug)]
pub struct InputError {
    pub line: usize,
    pub msg: String,
}

impl std::fmt::Display for InputError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "line {}: {}", self.line, self.msg)
    }
}

fn err(line: usize, msg: impl Into<String>) -> InputError {
    InputError {
        line,
        msg: msg.into(),
    }
}

#[derive(Debug)]
pub struct IdealInput {
    pub ideal: Ideal,
}

/// Parses the file contents; `order_override` takes precedence over an
/// `order:` line in the file.
pub fn parse_ideal_file(
    text: &str,
    order_override: Option<MonomialOrder>,
) -> Result<IdealInput, InputError> {
    let mut vars: Option<Vec<String>> = None;
    let mut degrees: Vec<(usize, String, Vec<i64>)> = Vec::new();
    let mut gens: Vec<(usize, String)> = Vec::new();
    let mut order_from_file: Option<MonomialOrder> = None;

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("vars:") {
            if vars.is_some() {
                return Err(err(lineno, "duplicate vars line"));
            }
            let names: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
            if names.is_empty() {
                return Err(err(lineno, "vars line lists no variables"));
            }
            vars = Some(names);
        } else if let Some(rest) = line.strip_prefix("deg") {
            let rest = rest.trim();
            let Some((name, vec_part)) = rest.split_once('=') else {
                return Err(err(lineno, "expected `deg <var> = (d1, d2, ...)`"));
            };
            let name = name.trim().to_string();
            let vec_part = vec_part.trim();
            let inner = vec_part
                .strip_prefix('(')
                .and_then(|s| s.strip_suffix(')'))
                .ok_or_else(|| err(lineno, "degree vector must be parenthesized"))?;
            let entries = inner
                .split(',')
                .map(|s| s.trim().parse::<i64>())
                .collect::<Result<Vec<i64>, _>>()
                .map_err(|e| err(lineno, format!("bad degree entry: {e}")))?;
            if entries.is_empty() {
                return Err(err(lineno, "empty degree vector"));
            }
            degrees.push((lineno, name, entries));
        } else if let Some(rest) = line.strip_prefix("gen:") {
            gens.push((lineno, rest.trim().to_string()));
        } else if let Some(rest) = line.strip_prefix("order:") {
            order_from_file = Some(
                parse_order_name(rest.trim())
                    .ok_or_else(|| err(lineno, format!("unknown order `{}`", rest.trim())))?,
            );
        } else {
            return Err(err(lineno, format!("unrecognized line `{line}`")));
        }
    }

    let vars = vars.ok_or_else(|| err(0, "missing vars line"))?;
    let grading = if degrees.is_empty() {
        MultiGrading::standard(vars.len())
    } else {
        let rows = degrees[0].2.len();
        let mut per_var: Vec<Option<Vec<i64>>> = vec![None; vars.len()];
        for (lineno, name, entries) in degrees {
            let Some(vi) = vars.iter().position(|v| v == &name) else {
                return Err(err(
                    lineno,
                    format!("deg line for unknown variable `{name}`"),
                ));
            };
            if entries.len() != rows {
                return Err(err(lineno, "degree vectors must all have the same length"));
            }
            if per_var[vi].replace(entries).is_some() {
                return Err(err(lineno, format!("duplicate deg line for `{name}`")));
            }
        }
        let collected = per_var
            .into_iter()
            .enumerate()
            .map(|(vi, d)| d.ok_or_else(|| err(0, format!("missing deg line for `{}`", vars[vi]))))
            .collect::<Result<Vec<Vec<i64>>, InputError>>()?;
        MultiGrading::new(collected)
    };

    let order = order_override
        .or_else(|| order_from_file.clone())
        .unwrap_or(MonomialOrder::Grevlex);
    let ring = RingContext::new(vars, grading, order).map_err(|e| err(0, e.to_string()))?;

    let mut polys = Vec::with_capacity(gens.len());
    for (lineno, text) in gens {
        let f = parse_polynomial(&text, &ring).map_err(|e| err(lineno, e.to_string()))?;
        polys.push(f);
    }
    if polys.iter().all(|f| f.is_zero()) {
        return Err(err(0, "input defines the zero ideal"));
    }
    Ok(IdealInput {
        ideal: Ideal::new(ring, polys),
    })
}

pub fn parse_order_name(name: &str) -> Option<MonomialOrder> {
    match name {
        "grevlex" => Some(MonomialOrder::Grevlex),
        "lex" => Some(MonomialOrder::Lex),
        _ => None,
    }
}
