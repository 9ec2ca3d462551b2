use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;

use super::{LogicError, Vocabulary};

/// The target of a membership atom `X(v)`: either a monadic predicate of the
/// vocabulary or a set variable bound by a second-order quantifier.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SetRef {
    Symbol(String),
    Var(String),
}

impl SetRef {
    pub fn name(&self) -> &str {
        match self {
            SetRef::Symbol(n) | SetRef::Var(n) => n,
        }
    }
}

/// Formulas of first-order logic extended with monadic second-order quantifiers.
///
/// Set quantifiers carry a `weak` flag; weak quantifiers range over finite subsets.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Formula {
    Rel(String, Vec<String>),
    Member(SetRef, String),
    Eq(String, String),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Exists(String, Box<Formula>),
    Forall(String, Box<Formula>),
    ExistsSet { var: String, weak: bool, body: Box<Formula> },
    ForallSet { var: String, weak: bool, body: Box<Formula> },
}

/// Free first-order variables and free set variables of a formula.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FreeVars {
    pub fo: BTreeSet<String>,
    pub sets: BTreeSet<String>,
}

impl FreeVars {
    pub fn is_empty(&self) -> bool {
        self.fo.is_empty() && self.sets.is_empty()
    }
}

impl Formula {
    pub fn rel(name: &str, args: &[&str]) -> Formula {
        Formula::Rel(name.to_string(), args.iter().map(|s| s.to_string()).collect())
    }

    /// Membership in a vocabulary predicate, `P(x)`.
    pub fn pred(set: &str, var: &str) -> Formula {
        Formula::Member(SetRef::Symbol(set.to_string()), var.to_string())
    }

    /// Membership in a set variable, `X(x)`.
    pub fn member(set: &str, var: &str) -> Formula {
        Formula::Member(SetRef::Var(set.to_string()), var.to_string())
    }

    pub fn eq(a: &str, b: &str) -> Formula {
        Formula::Eq(a.to_string(), b.to_string())
    }

    pub fn neq(a: &str, b: &str) -> Formula {
        Formula::eq(a, b).not()
    }

    /// `x = x`, used as the empty conjunction.
    pub fn truth(var: &str) -> Formula {
        Formula::eq(var, var)
    }

    /// `!(x = x)`, used as the empty disjunction.
    pub fn falsity(var: &str) -> Formula {
        Formula::truth(var).not()
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(self) -> Formula {
        Formula::Not(Box::new(self))
    }

    pub fn and(self, rhs: Formula) -> Formula {
        Formula::And(Box::new(self), Box::new(rhs))
    }

    pub fn or(self, rhs: Formula) -> Formula {
        Formula::Or(Box::new(self), Box::new(rhs))
    }

    pub fn implies(self, rhs: Formula) -> Formula {
        Formula::Implies(Box::new(self), Box::new(rhs))
    }

    pub fn exists(var: &str, body: Formula) -> Formula {
        Formula::Exists(var.to_string(), Box::new(body))
    }

    pub fn forall(var: &str, body: Formula) -> Formula {
        Formula::Forall(var.to_string(), Box::new(body))
    }

    /// `∃v1 ... ∃vk body`, innermost quantifier last.
    pub fn exists_many<S: AsRef<str>>(vars: &[S], body: Formula) -> Formula {
        vars.iter().rev().fold(body, |acc, v| Formula::exists(v.as_ref(), acc))
    }

    pub fn forall_many<S: AsRef<str>>(vars: &[S], body: Formula) -> Formula {
        vars.iter().rev().fold(body, |acc, v| Formula::forall(v.as_ref(), acc))
    }

    pub fn exists_set(var: &str, weak: bool, body: Formula) -> Formula {
        Formula::ExistsSet { var: var.to_string(), weak, body: Box::new(body) }
    }

    pub fn forall_set(var: &str, weak: bool, body: Formula) -> Formula {
        Formula::ForallSet { var: var.to_string(), weak, body: Box::new(body) }
    }

    /// Left-nested conjunction; `None` for an empty iterator.
    pub fn conj(items: impl IntoIterator<Item = Formula>) -> Option<Formula> {
        items.into_iter().reduce(Formula::and)
    }

    /// Left-nested disjunction; `None` for an empty iterator.
    pub fn disj(items: impl IntoIterator<Item = Formula>) -> Option<Formula> {
        items.into_iter().reduce(Formula::or)
    }

    pub fn free_variables(&self) -> FreeVars {
        let mut out = FreeVars::default();
        let mut bound_fo = Vec::new();
        let mut bound_sets = Vec::new();
        collect_free(self, &mut bound_fo, &mut bound_sets, &mut out);
        out
    }

    pub fn is_sentence(&self) -> bool {
        self.free_variables().is_empty()
    }

    /// Relation symbols (with arity) and predicate symbols occurring in the formula.
    pub fn vocabulary(&self) -> Result<Vocabulary, LogicError> {
        let mut voc = Vocabulary::new();
        let mut err = None;
        self.visit(&mut |f| match f {
            Formula::Rel(r, args) => {
                if let Err(e) = voc.add_relation(r, args.len()) {
                    err.get_or_insert(e);
                }
            }
            Formula::Member(SetRef::Symbol(s), _) => {
                if let Err(e) = voc.add_set(s) {
                    err.get_or_insert(e);
                }
            }
            _ => {}
        });
        match err {
            Some(e) => Err(e),
            None => Ok(voc),
        }
    }

    /// Every variable name (free or bound, both name spaces) in the formula.
    pub fn all_names(&self) -> HashSet<String> {
        let mut names = HashSet::new();
        self.visit(&mut |f| match f {
            Formula::Rel(_, args) => names.extend(args.iter().cloned()),
            Formula::Member(s, v) => {
                names.insert(s.name().to_string());
                names.insert(v.clone());
            }
            Formula::Eq(a, b) => {
                names.insert(a.clone());
                names.insert(b.clone());
            }
            Formula::Exists(v, _)
            | Formula::Forall(v, _)
            | Formula::ExistsSet { var: v, .. }
            | Formula::ForallSet { var: v, .. } => {
                names.insert(v.clone());
            }
            _ => {}
        });
        names
    }

    /// Pre-order traversal.
    pub fn visit<'a>(&'a self, f: &mut impl FnMut(&'a Formula)) {
        f(self);
        match self {
            Formula::Rel(..) | Formula::Member(..) | Formula::Eq(..) => {}
            Formula::Not(a) => a.visit(f),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                a.visit(f);
                b.visit(f);
            }
            Formula::Exists(_, a) | Formula::Forall(_, a) => a.visit(f),
            Formula::ExistsSet { body, .. } | Formula::ForallSet { body, .. } => body.visit(f),
        }
    }

    /// Number of AST nodes.
    pub fn size(&self) -> usize {
        let mut n = 0;
        self.visit(&mut |_| n += 1);
        n
    }

    /// Maximum nesting depth of quantifiers (both kinds).
    pub fn quantifier_depth(&self) -> usize {
        match self {
            Formula::Rel(..) | Formula::Member(..) | Formula::Eq(..) => 0,
            Formula::Not(a) => a.quantifier_depth(),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                a.quantifier_depth().max(b.quantifier_depth())
            }
            Formula::Exists(_, a) | Formula::Forall(_, a) => 1 + a.quantifier_depth(),
            Formula::ExistsSet { body, .. } | Formula::ForallSet { body, .. } => 1 + body.quantifier_depth(),
        }
    }

    pub fn has_weak_quantifier(&self) -> bool {
        let mut found = false;
        self.visit(&mut |f| {
            if let Formula::ExistsSet { weak: true, .. } | Formula::ForallSet { weak: true, .. } = f {
                found = true;
            }
        });
        found
    }

    /// Flips every set quantifier to the given weakness flag.
    pub fn with_set_quantifiers(&self, weak: bool) -> Formula {
        self.map_set_quantifiers(&mut |kind, var, _, body| match kind {
            SetQuantifier::Exists => Formula::exists_set(var, weak, body),
            SetQuantifier::Forall => Formula::forall_set(var, weak, body),
        })
    }

    /// Rebuilds set quantifier nodes bottom-up through `rebuild`.
    pub fn map_set_quantifiers(
        &self,
        rebuild: &mut impl FnMut(SetQuantifier, &str, bool, Formula) -> Formula,
    ) -> Formula {
        match self {
            Formula::Rel(..) | Formula::Member(..) | Formula::Eq(..) => self.clone(),
            Formula::Not(a) => a.map_set_quantifiers(rebuild).not(),
            Formula::And(a, b) => a.map_set_quantifiers(rebuild).and(b.map_set_quantifiers(rebuild)),
            Formula::Or(a, b) => a.map_set_quantifiers(rebuild).or(b.map_set_quantifiers(rebuild)),
            Formula::Implies(a, b) => a.map_set_quantifiers(rebuild).implies(b.map_set_quantifiers(rebuild)),
            Formula::Exists(v, a) => Formula::exists(v, a.map_set_quantifiers(rebuild)),
            Formula::Forall(v, a) => Formula::forall(v, a.map_set_quantifiers(rebuild)),
            Formula::ExistsSet { var, weak, body } => {
                let inner = body.map_set_quantifiers(rebuild);
                rebuild(SetQuantifier::Exists, var, *weak, inner)
            }
            Formula::ForallSet { var, weak, body } => {
                let inner = body.map_set_quantifiers(rebuild);
                rebuild(SetQuantifier::Forall, var, *weak, inner)
            }
        }
    }

    /// Capture-avoiding simultaneous substitution of free first-order variables.
    ///
    /// Bound variables that would capture a substituted name are renamed with `fresh`.
    pub fn substitute(&self, map: &BTreeMap<String, String>, fresh: &mut Fresh) -> Formula {
        let look = |v: &String, m: &BTreeMap<String, String>| m.get(v).cloned().unwrap_or_else(|| v.clone());
        match self {
            Formula::Rel(r, args) => Formula::Rel(r.clone(), args.iter().map(|a| look(a, map)).collect()),
            Formula::Member(s, v) => Formula::Member(s.clone(), look(v, map)),
            Formula::Eq(a, b) => Formula::Eq(look(a, map), look(b, map)),
            Formula::Not(a) => a.substitute(map, fresh).not(),
            Formula::And(a, b) => a.substitute(map, fresh).and(b.substitute(map, fresh)),
            Formula::Or(a, b) => a.substitute(map, fresh).or(b.substitute(map, fresh)),
            Formula::Implies(a, b) => a.substitute(map, fresh).implies(b.substitute(map, fresh)),
            Formula::Exists(v, body) | Formula::Forall(v, body) => {
                let mut inner = map.clone();
                inner.remove(v);
                let body_free = body.free_variables().fo;
                let captures = inner.iter().any(|(from, to)| to == v && body_free.contains(from));
                let (var, body) = if captures {
                    let renamed = fresh.var();
                    inner.insert(v.clone(), renamed.clone());
                    (renamed, body.substitute(&inner, fresh))
                } else {
                    (v.clone(), body.substitute(&inner, fresh))
                };
                if matches!(self, Formula::Exists(..)) {
                    Formula::exists(&var, body)
                } else {
                    Formula::forall(&var, body)
                }
            }
            Formula::ExistsSet { var, weak, body } => Formula::exists_set(var, *weak, body.substitute(map, fresh)),
            Formula::ForallSet { var, weak, body } => Formula::forall_set(var, *weak, body.substitute(map, fresh)),
        }
    }

    /// Substitutes a single free variable.
    pub fn substitute_one(&self, from: &str, to: &str, fresh: &mut Fresh) -> Formula {
        let map = BTreeMap::from([(from.to_string(), to.to_string())]);
        self.substitute(&map, fresh)
    }

    /// Replaces every membership atom over predicate symbol `symbol` by membership in `to`.
    ///
    /// Set binders named like the replacement variable are renamed so the new
    /// occurrences stay free.
    pub fn replace_set_symbol(&self, symbol: &str, to: &SetRef, fresh: &mut Fresh) -> Formula {
        match self {
            Formula::Member(SetRef::Symbol(s), v) if s == symbol => Formula::Member(to.clone(), v.clone()),
            Formula::Rel(..) | Formula::Member(..) | Formula::Eq(..) => self.clone(),
            Formula::Not(a) => a.replace_set_symbol(symbol, to, fresh).not(),
            Formula::And(a, b) => a.replace_set_symbol(symbol, to, fresh).and(b.replace_set_symbol(symbol, to, fresh)),
            Formula::Or(a, b) => a.replace_set_symbol(symbol, to, fresh).or(b.replace_set_symbol(symbol, to, fresh)),
            Formula::Implies(a, b) => {
                a.replace_set_symbol(symbol, to, fresh).implies(b.replace_set_symbol(symbol, to, fresh))
            }
            Formula::Exists(v, a) => Formula::exists(v, a.replace_set_symbol(symbol, to, fresh)),
            Formula::Forall(v, a) => Formula::forall(v, a.replace_set_symbol(symbol, to, fresh)),
            Formula::ExistsSet { var, weak, body } | Formula::ForallSet { var, weak, body } => {
                let (var, body) = match to {
                    SetRef::Var(x) if x == var => {
                        let renamed = fresh.set_var();
                        (renamed.clone(), body.rename_set_var(var, &renamed))
                    }
                    _ => (var.clone(), (**body).clone()),
                };
                let body = body.replace_set_symbol(symbol, to, fresh);
                if matches!(self, Formula::ExistsSet { .. }) {
                    Formula::exists_set(&var, *weak, body)
                } else {
                    Formula::forall_set(&var, *weak, body)
                }
            }
        }
    }

    fn rename_set_var(&self, from: &str, to: &str) -> Formula {
        match self {
            Formula::Member(SetRef::Var(s), v) if s == from => Formula::member(to, v),
            Formula::Rel(..) | Formula::Member(..) | Formula::Eq(..) => self.clone(),
            Formula::Not(a) => a.rename_set_var(from, to).not(),
            Formula::And(a, b) => a.rename_set_var(from, to).and(b.rename_set_var(from, to)),
            Formula::Or(a, b) => a.rename_set_var(from, to).or(b.rename_set_var(from, to)),
            Formula::Implies(a, b) => a.rename_set_var(from, to).implies(b.rename_set_var(from, to)),
            Formula::Exists(v, a) => Formula::exists(v, a.rename_set_var(from, to)),
            Formula::Forall(v, a) => Formula::forall(v, a.rename_set_var(from, to)),
            Formula::ExistsSet { var, .. } | Formula::ForallSet { var, .. } if var == from => self.clone(),
            Formula::ExistsSet { var, weak, body } => Formula::exists_set(var, *weak, body.rename_set_var(from, to)),
            Formula::ForallSet { var, weak, body } => Formula::forall_set(var, *weak, body.rename_set_var(from, to)),
        }
    }

    /// Top-level conjuncts of a left- or right-nested conjunction.
    pub fn conjuncts(&self) -> Vec<&Formula> {
        match self {
            Formula::And(a, b) => {
                let mut out = a.conjuncts();
                out.extend(b.conjuncts());
                out
            }
            other => vec![other],
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SetQuantifier {
    Exists,
    Forall,
}

fn collect_free(f: &Formula, bound_fo: &mut Vec<String>, bound_sets: &mut Vec<String>, out: &mut FreeVars) {
    let fo = |v: &String, bound: &Vec<String>, out: &mut FreeVars| {
        if !bound.contains(v) {
            out.fo.insert(v.clone());
        }
    };
    match f {
        Formula::Rel(_, args) => args.iter().for_each(|a| fo(a, bound_fo, out)),
        Formula::Member(s, v) => {
            fo(v, bound_fo, out);
            if let SetRef::Var(x) = s {
                if !bound_sets.contains(x) {
                    out.sets.insert(x.clone());
                }
            }
        }
        Formula::Eq(a, b) => {
            fo(a, bound_fo, out);
            fo(b, bound_fo, out);
        }
        Formula::Not(a) => collect_free(a, bound_fo, bound_sets, out),
        Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
            collect_free(a, bound_fo, bound_sets, out);
            collect_free(b, bound_fo, bound_sets, out);
        }
        Formula::Exists(v, a) | Formula::Forall(v, a) => {
            bound_fo.push(v.clone());
            collect_free(a, bound_fo, bound_sets, out);
            bound_fo.pop();
        }
        Formula::ExistsSet { var, body, .. } | Formula::ForallSet { var, body, .. } => {
            bound_sets.push(var.clone());
            collect_free(body, bound_fo, bound_sets, out);
            bound_sets.pop();
        }
    }
}

/// Generator of fresh variable names `v0, v1, ...` (and `V0, V1, ...` for set
/// variables) that skips every name it was told to avoid.
#[derive(Clone, Debug, Default)]
pub struct Fresh {
    used: HashSet<String>,
    next: usize,
}

impl Fresh {
    pub fn new() -> Self {
        Self::default()
    }

    /// A generator that never returns a name occurring in any of `formulas`.
    pub fn avoiding<'a>(formulas: impl IntoIterator<Item = &'a Formula>) -> Self {
        let mut fresh = Fresh::new();
        for f in formulas {
            fresh.avoid_all(f.all_names());
        }
        fresh
    }

    pub fn avoid(&mut self, name: &str) {
        self.used.insert(name.to_string());
    }

    pub fn avoid_all(&mut self, names: impl IntoIterator<Item = String>) {
        self.used.extend(names);
    }

    fn take(&mut self, stem: &str) -> String {
        loop {
            let name = format!("{stem}{}", self.next);
            self.next += 1;
            if self.used.insert(name.clone()) {
                return name;
            }
        }
    }

    pub fn var(&mut self) -> String {
        self.take("v")
    }

    pub fn vars(&mut self, n: usize) -> Vec<String> {
        (0..n).map(|_| self.var()).collect()
    }

    pub fn set_var(&mut self) -> String {
        self.take("V")
    }
}

// Binding strength used by the printer; quantifiers extend as far right as possible.
fn precedence(f: &Formula) -> u8 {
    match f {
        Formula::Exists(..) | Formula::Forall(..) | Formula::ExistsSet { .. } | Formula::ForallSet { .. } => 0,
        Formula::Implies(..) => 1,
        Formula::Or(..) => 2,
        Formula::And(..) => 3,
        Formula::Not(..) => 4,
        Formula::Rel(..) | Formula::Member(..) | Formula::Eq(..) => 5,
    }
}

struct Wrapped<'a>(&'a Formula, bool);

impl fmt::Display for Wrapped<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.1 {
            write!(f, "({})", self.0)
        } else {
            write!(f, "{}", self.0)
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let binary = |f: &mut fmt::Formatter<'_>, op: &str, l: &Formula, r: &Formula, p: u8, right_assoc: bool| {
            let (lp, rp) = (precedence(l), precedence(r));
            let wrap_l = if right_assoc { lp <= p } else { lp < p };
            let wrap_r = if right_assoc { rp < p } else { rp <= p };
            write!(f, "{} {op} {}", Wrapped(l, wrap_l), Wrapped(r, wrap_r))
        };
        match self {
            Formula::Rel(r, args) => write!(f, "{r}({})", args.join(",")),
            Formula::Member(s, v) => write!(f, "{}({v})", s.name()),
            Formula::Eq(a, b) => write!(f, "{a} = {b}"),
            Formula::Not(a) => {
                let bare = matches!(**a, Formula::Rel(..) | Formula::Member(..) | Formula::Not(..));
                write!(f, "!{}", Wrapped(a, !bare))
            }
            Formula::And(a, b) => binary(f, "&", a, b, 3, false),
            Formula::Or(a, b) => binary(f, "|", a, b, 2, false),
            Formula::Implies(a, b) => binary(f, "->", a, b, 1, true),
            Formula::Exists(v, a) => write!(f, "E {v}. {a}"),
            Formula::Forall(v, a) => write!(f, "A {v}. {a}"),
            Formula::ExistsSet { var, weak, body } => write!(f, "E{} {var}. {body}", if *weak { "w" } else { "2" }),
            Formula::ForallSet { var, weak, body } => write!(f, "A{} {var}. {body}", if *weak { "w" } else { "2" }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_variables_examples() {
        let f = Formula::rel("beta", &["x", "y", "z"]);
        assert_eq!(f.free_variables().fo, BTreeSet::from(["x".into(), "y".into(), "z".into()]));
        let g = Formula::exists("x", Formula::rel("beta", &["x", "y", "y"]));
        assert_eq!(g.free_variables().fo, BTreeSet::from(["y".into()]));
        let h = Formula::exists_set("X", false, Formula::member("X", "y"));
        let fv = h.free_variables();
        assert_eq!(fv.fo, BTreeSet::from(["y".into()]));
        assert!(fv.sets.is_empty());
        assert_eq!(Formula::member("X", "y").free_variables().sets, BTreeSet::from(["X".into()]));
        assert!(Formula::pred("P", "y").free_variables().sets.is_empty());
    }

    #[test]
    fn printing_is_canonical() {
        assert_eq!(Formula::neq("x", "y").to_string(), "!(x = y)");
        let f = Formula::exists("x", Formula::rel("beta", &["x", "y", "z"]).and(Formula::pred("P", "x")));
        assert_eq!(f.to_string(), "E x. beta(x,y,z) & P(x)");
        let g = Formula::exists("x", Formula::pred("P", "x")).and(Formula::forall("y", Formula::pred("P", "y")));
        assert_eq!(g.to_string(), "(E x. P(x)) & (A y. P(y))");
        let imp = Formula::pred("P", "x").implies(Formula::pred("P", "y")).implies(Formula::pred("P", "z"));
        assert_eq!(imp.to_string(), "(P(x) -> P(y)) -> P(z)");
        let nested = Formula::pred("P", "x").and(Formula::pred("P", "y").and(Formula::pred("P", "z")));
        assert_eq!(nested.to_string(), "P(x) & (P(y) & P(z))");
    }

    #[test]
    fn substitution_avoids_capture() {
        // phi(y) := E x. e(x,y); substituting y := x must rename the binder.
        let phi = Formula::exists("x", Formula::rel("e", &["x", "y"]));
        let mut fresh = Fresh::avoiding([&phi]);
        fresh.avoid("x");
        let out = phi.substitute_one("y", "x", &mut fresh);
        assert_eq!(out.free_variables().fo, BTreeSet::from(["x".into()]));
        match &out {
            Formula::Exists(v, body) => {
                assert_ne!(v, "x");
                assert_eq!(**body, Formula::Rel("e".into(), vec![v.clone(), "x".into()]));
            }
            other => panic!("unexpected {other}"),
        }
    }

    #[test]
    fn substitution_respects_shadowing() {
        let phi = Formula::pred("P", "y").and(Formula::exists("y", Formula::pred("Q", "y")));
        let out = phi.substitute_one("y", "z", &mut Fresh::new());
        assert_eq!(out, Formula::pred("P", "z").and(Formula::exists("y", Formula::pred("Q", "y"))));
    }

    #[test]
    fn set_symbol_replacement() {
        let f = Formula::forall("x", Formula::pred("P", "x"));
        let g = f.replace_set_symbol("P", &SetRef::Var("X".into()), &mut Fresh::new());
        assert_eq!(g.free_variables().sets, BTreeSet::from(["X".into()]));
        let shadow = Formula::exists_set("X", false, Formula::member("X", "x").and(Formula::pred("P", "x")));
        let h = shadow.replace_set_symbol("P", &SetRef::Var("X".into()), &mut Fresh::new());
        assert_eq!(h.free_variables().sets, BTreeSet::from(["X".into()]));
    }

    #[test]
    fn fresh_names_skip_used_ones() {
        let f = Formula::eq("v0", "v2");
        let mut fresh = Fresh::avoiding([&f]);
        assert_eq!(fresh.vars(3), vec!["v1", "v3", "v4"]);
    }
}
