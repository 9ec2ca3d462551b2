//! Interpretation files.
//!
//! ```text
//! source H/2 V/2          relations being defined
//! target E/2 D            relations (with arity) and unary symbols the formulas use
//! dom(u): D(u)            parameter list optional, defaults to `x`
//! rel H(u,v): E(u,v)      defaults to `x,y,z` (arity <= 3) or `x1..xk`
//! ```

use std::collections::BTreeMap;
use std::fmt::Write as _;

use super::{Definition, Interpretation, InterpretationError};
use crate::logic::{is_fo_name, parse_formula, print_formula, Vocabulary};

fn default_params(arity: usize) -> Vec<String> {
    if arity <= 3 {
        ["x", "y", "z"][..arity].iter().map(|s| s.to_string()).collect()
    } else {
        (1..=arity).map(|i| format!("x{i}")).collect()
    }
}

/// Splits `Name(a,b)` into its name and parameters.
fn head(text: &str) -> Result<(String, Option<Vec<String>>), String> {
    let text = text.trim();
    let Some(open) = text.find('(') else { return Ok((text.to_string(), None)) };
    let inner = text[open + 1..].strip_suffix(')').ok_or_else(|| format!("unclosed parameter list in `{text}`"))?;
    let params: Vec<String> = inner.split(',').map(|p| p.trim().to_string()).filter(|p| !p.is_empty()).collect();
    if let Some(bad) = params.iter().find(|p| !is_fo_name(p)) {
        return Err(format!("`{bad}` is not a variable name"));
    }
    Ok((text[..open].trim().to_string(), Some(params)))
}

fn vocabulary(words: &[&str], sets_allowed: bool) -> Result<Vocabulary, String> {
    let mut v = Vocabulary::new();
    for w in words {
        match w.split_once('/') {
            Some((name, arity)) => {
                let arity = arity.parse().map_err(|_| format!("bad arity in `{w}`"))?;
                v.add_relation(name, arity).map_err(|e| e.to_string())?;
            }
            None if sets_allowed => v.add_set(w).map_err(|e| e.to_string())?,
            None => return Err(format!("expected `Name/arity`, got `{w}`")),
        }
    }
    Ok(v)
}

pub fn parse_interpretation(text: &str) -> Result<Interpretation, InterpretationError> {
    let mut source: Option<Vocabulary> = None;
    let mut target: Option<Vocabulary> = None;
    let mut dom: Option<Definition> = None;
    let mut rels = BTreeMap::new();
    for (no, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |msg: String| InterpretationError::Parse { line: no + 1, msg };
        if let Some(rest) = line.strip_prefix("source ") {
            source = Some(vocabulary(&rest.split_whitespace().collect::<Vec<_>>(), false).map_err(err)?);
            continue;
        }
        if let Some(rest) = line.strip_prefix("target ") {
            target = Some(vocabulary(&rest.split_whitespace().collect::<Vec<_>>(), true).map_err(err)?);
            continue;
        }
        let (lhs, formula) = line.split_once(':').ok_or_else(|| err(format!("cannot read `{line}`")))?;
        let tv = target.as_ref().ok_or_else(|| err("`target` must precede formulas".into()))?;
        let parsed = parse_formula(formula, tv).map_err(|e| err(e.to_string()))?;
        if lhs.trim_start().starts_with("dom") {
            let (name, params) = head(lhs).map_err(err)?;
            if name != "dom" {
                return Err(err(format!("unknown directive `{name}`")));
            }
            dom = Some(Definition { params: params.unwrap_or_else(|| default_params(1)), formula: parsed });
        } else if let Some(rest) = lhs.trim_start().strip_prefix("rel ") {
            let (name, params) = head(rest).map_err(err)?;
            let sv = source.as_ref().ok_or_else(|| err("`source` must precede `rel`".into()))?;
            let arity = sv.arity(&name).ok_or_else(|| err(format!("`{name}` is not a source relation")))?;
            let params = params.unwrap_or_else(|| default_params(arity));
            if rels.insert(name.clone(), Definition { params, formula: parsed }).is_some() {
                return Err(err(format!("`{name}` defined twice")));
            }
        } else {
            return Err(err(format!("unknown directive in `{line}`")));
        }
    }
    let missing = |what: &str| InterpretationError::Parse { line: 0, msg: format!("missing `{what}`") };
    Interpretation::new(
        source.ok_or_else(|| missing("source"))?,
        target.ok_or_else(|| missing("target"))?,
        dom.ok_or_else(|| missing("dom"))?,
        rels,
    )
}

pub fn write_interpretation(i: &Interpretation) -> String {
    let mut out = String::new();
    let rels = |v: &Vocabulary| v.relations().map(|(r, a)| format!("{r}/{a}")).collect::<Vec<_>>();
    let _ = writeln!(out, "source {}", rels(i.source()).join(" "));
    let mut target = rels(i.target());
    target.extend(i.target().sets().map(str::to_string));
    let _ = writeln!(out, "target {}", target.join(" "));
    let _ = writeln!(out, "dom({}): {}", i.dom().params.join(","), print_formula(&i.dom().formula));
    for (name, def) in i.relations() {
        let _ = writeln!(out, "rel {name}({}): {}", def.params.join(","), print_formula(&def.formula));
    }
    out
}
