//! Line-oriented structure files.
//!
//! ```text
//! # comment
//! dim 2                  first line of geometric files
//! point a 0 1/2          geometric element
//! elem x y z             relational elements (optional; tuples declare names on use)
//! pred P a b             unary predicate
//! rel H/2                relation header, followed by
//! tuple x y              its tuples
//! ```
//!
//! Geometric files get `beta` computed from their points and may not declare it.

use std::collections::HashSet;
use std::fmt::Write as _;

use super::{
    build_finite_grid, build_recurrence_prefix, build_torus, geometric_structure, FinStructure, StructureError,
};
use crate::geometry::{Point, Rational};

struct RelBlock {
    name: String,
    arity: usize,
    tuples: Vec<Vec<String>>,
}

pub fn parse_structure(text: &str) -> Result<FinStructure, StructureError> {
    let mut dim: Option<usize> = None;
    let mut points: Vec<(String, Point)> = Vec::new();
    let mut names: Vec<String> = Vec::new();
    let mut seen: HashSet<String> = HashSet::new();
    let mut preds: Vec<(String, Vec<String>)> = Vec::new();
    let mut rels: Vec<RelBlock> = Vec::new();
    let mut first = true;

    for (no, raw) in text.lines().enumerate() {
        let line_no = no + 1;
        let err = |msg: String| StructureError::Parse { line: line_no, msg };
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut words = line.split_whitespace();
        let kw = words.next().expect("non-empty line");
        let args: Vec<&str> = words.collect();
        let is_first = std::mem::replace(&mut first, false);
        let mut declare = |name: &str, explicit: bool| -> Result<(), StructureError> {
            if seen.insert(name.to_string()) {
                if dim.is_some() && !explicit {
                    return Err(err(format!("element `{name}` has no point")));
                }
                names.push(name.to_string());
            } else if explicit {
                return Err(StructureError::DuplicateElement(name.to_string()));
            }
            Ok(())
        };
        match kw {
            "dim" => {
                if !is_first {
                    return Err(err("`dim` must be the first line".into()));
                }
                let [d] = args[..] else { return Err(err("usage: dim <n>".into())) };
                let d: usize = d.parse().map_err(|_| err(format!("bad dimension `{d}`")))?;
                if d == 0 {
                    return Err(err("dimension must be positive".into()));
                }
                dim = Some(d);
            }
            "point" => {
                let Some(d) = dim else { return Err(err("`point` needs a preceding `dim`".into())) };
                let Some((name, coords)) = args.split_first() else {
                    return Err(err("usage: point <name> <r1> ... <rn>".into()));
                };
                if coords.len() != d {
                    return Err(err(format!("expected {d} coordinates, got {}", coords.len())));
                }
                let coords = coords
                    .iter()
                    .map(|c| c.parse::<Rational>())
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|e| err(e.to_string()))?;
                declare(name, true)?;
                points.push((name.to_string(), Point::new(coords)?));
            }
            "elem" => {
                if dim.is_some() {
                    return Err(err("geometric files declare elements with `point`".into()));
                }
                for a in &args {
                    declare(a, true)?;
                }
            }
            "pred" => {
                let Some((name, members)) = args.split_first() else {
                    return Err(err("usage: pred <Name> <elem> ...".into()));
                };
                for m in members {
                    declare(m, false)?;
                }
                preds.push((name.to_string(), members.iter().map(|m| m.to_string()).collect()));
            }
            "rel" => {
                let [spec] = args[..] else { return Err(err("usage: rel <Name>/<arity>".into())) };
                let (name, arity) = spec.split_once('/').ok_or_else(|| err("usage: rel <Name>/<arity>".into()))?;
                let arity: usize = arity.parse().map_err(|_| err(format!("bad arity `{arity}`")))?;
                if dim.is_some() && name == "beta" {
                    return Err(err("`beta` is computed from the points of a geometric file".into()));
                }
                rels.push(RelBlock { name: name.to_string(), arity, tuples: Vec::new() });
            }
            "tuple" => {
                for a in &args {
                    declare(a, false)?;
                }
                let Some(block) = rels.last_mut() else { return Err(err("`tuple` outside a `rel` block".into())) };
                if args.len() != block.arity {
                    return Err(err(format!("`{}` has arity {}, got {} names", block.name, block.arity, args.len())));
                }
                block.tuples.push(args.iter().map(|a| a.to_string()).collect());
            }
            other => return Err(err(format!("unknown directive `{other}`"))),
        }
    }

    let mut s = if dim.is_some() { geometric_structure(points)? } else { FinStructure::new(names)? };
    for (name, members) in preds {
        s.add_predicate(&name, members)?;
    }
    for block in rels {
        s.add_relation(&block.name, block.arity, block.tuples)?;
    }
    Ok(s)
}

pub fn write_structure(s: &FinStructure) -> String {
    let mut out = String::new();
    let derived_beta = s.geometry().is_some();
    match s.geometry() {
        Some(points) => {
            let _ = writeln!(out, "dim {}", points.first().map_or(1, Point::dim));
            for (name, p) in s.elements().iter().zip(points) {
                let coords: Vec<String> = p.coords().iter().map(ToString::to_string).collect();
                let _ = writeln!(out, "point {name} {}", coords.join(" "));
            }
        }
        None => {
            for chunk in s.elements().chunks(16) {
                let _ = writeln!(out, "elem {}", chunk.join(" "));
            }
        }
    }
    for (name, members) in s.predicates() {
        let names: Vec<&str> = members.iter().map(|&m| s.name(m)).collect();
        let _ = writeln!(out, "pred {name}{}{}", if names.is_empty() { "" } else { " " }, names.join(" "));
    }
    for (name, rel) in s.relations() {
        if derived_beta && name == "beta" {
            continue;
        }
        let _ = writeln!(out, "rel {name}/{}", rel.arity());
        for t in rel.tuples() {
            let names: Vec<&str> = t.iter().map(|&e| s.name(e)).collect();
            let _ = writeln!(out, "tuple {}", names.join(" "));
        }
    }
    out
}

fn parse_size(text: &str) -> Option<(usize, usize)> {
    let (m, n) = text.split_once('x')?;
    Some((m.parse().ok()?, n.parse().ok()?))
}

/// Loads a structure from a file path or a `builtin:torus:MxN`, `builtin:grid:MxN`
/// or `builtin:recurrence:MxN` URI.
pub fn load_structure(spec: &str) -> Result<FinStructure, StructureError> {
    if let Some(rest) = spec.strip_prefix("builtin:") {
        let bad = || StructureError::Parse { line: 0, msg: format!("unknown builtin structure `{spec}`") };
        let (kind, size) = rest.split_once(':').ok_or_else(bad)?;
        let (m, n) = parse_size(size).ok_or_else(bad)?;
        return match kind {
            "torus" => build_torus(m, n),
            "grid" => build_finite_grid(m, n),
            "recurrence" => build_recurrence_prefix(m, n),
            _ => Err(bad()),
        };
    }
    let text = std::fs::read_to_string(spec).map_err(|source| StructureError::Io { path: spec.to_string(), source })?;
    parse_structure(&text)
}
