//! One-dimensional first-order interpretations: a domain formula and one
//! defining formula per source relation, evaluated inside a target structure.
//!
//! [`Interpretation::translate`] pulls a source formula back to the target
//! vocabulary; [`Interpretation::induced_structure`] builds the interpreted
//! structure. Unary predicates outside both vocabularies pass through unchanged,
//! which is what lets expansions by fresh predicates commute with the translation.

mod io;

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::eval::{satisfying_elements, Checker, EvalBudget, EvalError};
use crate::formulas::{frame_formulas, instantiate, FrameKind};
use crate::logic::{Formula, Fresh, LogicError, Vocabulary};
use crate::structure::{FinStructure, StructureError};

pub use io::{parse_interpretation, write_interpretation};

#[derive(Debug, Error)]
pub enum InterpretationError {
    #[error("symbol `{0}` is used both as an expansion predicate and in the interpretation's vocabularies")]
    SymbolClash(String),
    #[error("relation `{name}` has arity {expected}, used with {found} argument(s)")]
    Arity { name: String, expected: usize, found: usize },
    #[error("relation `{0}` is not in the source vocabulary")]
    UnknownRelation(String),
    #[error("source relation `{0}` has no defining formula")]
    MissingRelation(String),
    #[error("formula for `{name}` has free variables {found:?} outside its parameters {params:?}")]
    FreeVariables { name: String, params: Vec<String>, found: Vec<String> },
    #[error("set quantifiers cannot be translated (binder `{0}`)")]
    SetQuantifier(String),
    #[error("formula for `{0}` mentions symbols outside the target vocabulary")]
    Vocabulary(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Logic(#[from] LogicError),
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error(transparent)]
    Structure(#[from] StructureError),
}

/// A defining formula together with the order of its parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct Definition {
    pub params: Vec<String>,
    pub formula: Formula,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Interpretation {
    source: Vocabulary,
    target: Vocabulary,
    dom: Definition,
    rels: BTreeMap<String, Definition>,
}

impl Interpretation {
    /// Validates arities, free variables and vocabularies.
    pub fn new(
        source: Vocabulary,
        target: Vocabulary,
        dom: Definition,
        rels: BTreeMap<String, Definition>,
    ) -> Result<Self, InterpretationError> {
        check_definition("dom", &dom, 1, &target)?;
        for (name, arity) in source.relations() {
            let def = rels.get(name).ok_or_else(|| InterpretationError::MissingRelation(name.to_string()))?;
            check_definition(name, def, arity, &target)?;
        }
        if let Some(extra) = rels.keys().find(|r| source.arity(r).is_none()) {
            return Err(InterpretationError::UnknownRelation(extra.clone()));
        }
        Ok(Interpretation { source, target, dom, rels })
    }

    /// The finite or infinite frame interpretation of `{H, V}` in `{beta, P, Q}`.
    pub fn frame(kind: FrameKind) -> Self {
        let f = frame_formulas(kind);
        let source = Vocabulary::new().with_relation("H", 2).unwrap().with_relation("V", 2).unwrap();
        let target = Vocabulary::new().with_relation("beta", 3).unwrap().with_set("P").unwrap().with_set("Q").unwrap();
        let uv = || vec!["u".to_string(), "v".to_string()];
        let rels = BTreeMap::from([
            ("H".to_string(), Definition { params: uv(), formula: f.h }),
            ("V".to_string(), Definition { params: uv(), formula: f.v }),
        ]);
        let dom = Definition { params: vec!["u".into()], formula: f.dom };
        Interpretation::new(source, target, dom, rels).expect("frame formulas are well formed")
    }

    pub fn source(&self) -> &Vocabulary {
        &self.source
    }

    pub fn target(&self) -> &Vocabulary {
        &self.target
    }

    pub fn dom(&self) -> &Definition {
        &self.dom
    }

    pub fn relation(&self, name: &str) -> Option<&Definition> {
        self.rels.get(name)
    }

    pub fn relations(&self) -> impl Iterator<Item = (&str, &Definition)> {
        self.rels.iter().map(|(k, v)| (k.as_str(), v))
    }

    fn clash(&self, name: &str) -> bool {
        self.source.mentions(name) || self.target.mentions(name)
    }

    /// Translates a first-order formula over the source vocabulary plus fresh
    /// unary predicates into the target vocabulary plus the same predicates.
    pub fn translate(&self, f: &Formula) -> Result<Formula, InterpretationError> {
        let mut fresh = Fresh::avoiding(
            std::iter::once(f).chain(std::iter::once(&self.dom.formula)).chain(self.rels.values().map(|d| &d.formula)),
        );
        let mut err = None;
        f.visit(&mut |g| {
            if err.is_some() {
                return;
            }
            match g {
                Formula::Member(set, _) if self.clash(set.name()) => {
                    err = Some(InterpretationError::SymbolClash(set.name().to_string()))
                }
                Formula::ExistsSet { var, .. } | Formula::ForallSet { var, .. } => {
                    err = Some(InterpretationError::SetQuantifier(var.clone()))
                }
                Formula::Rel(name, args) => match self.source.arity(name) {
                    None => err = Some(InterpretationError::UnknownRelation(name.clone())),
                    Some(a) if a != args.len() => {
                        err = Some(InterpretationError::Arity { name: name.clone(), expected: a, found: args.len() })
                    }
                    _ => {}
                },
                _ => {}
            }
        });
        if let Some(e) = err {
            return Err(e);
        }
        Ok(self.tr(f, &mut fresh))
    }

    fn relativize(&self, var: &str, fresh: &mut Fresh) -> Formula {
        let params: Vec<&str> = self.dom.params.iter().map(String::as_str).collect();
        instantiate(&self.dom.formula, &params, &[var], fresh)
    }

    fn tr(&self, f: &Formula, fresh: &mut Fresh) -> Formula {
        match f {
            Formula::Member(..) | Formula::Eq(..) => f.clone(),
            Formula::Rel(name, args) => {
                let def = &self.rels[name];
                let params: Vec<&str> = def.params.iter().map(String::as_str).collect();
                let args: Vec<&str> = args.iter().map(String::as_str).collect();
                instantiate(&def.formula, &params, &args, fresh)
            }
            Formula::Not(a) => self.tr(a, fresh).not(),
            Formula::And(a, b) => self.tr(a, fresh).and(self.tr(b, fresh)),
            Formula::Or(a, b) => self.tr(a, fresh).or(self.tr(b, fresh)),
            Formula::Implies(a, b) => self.tr(a, fresh).implies(self.tr(b, fresh)),
            Formula::Exists(x, body) => {
                let dom = self.relativize(x, fresh);
                Formula::exists(x, dom.and(self.tr(body, fresh)))
            }
            Formula::Forall(x, body) => {
                let dom = self.relativize(x, fresh);
                Formula::forall(x, dom.implies(self.tr(body, fresh)))
            }
            Formula::ExistsSet { .. } | Formula::ForallSet { .. } => unreachable!("rejected by translate"),
        }
    }

    /// The interpreted structure: elements of `b` satisfying the domain formula,
    /// under their own names, with each source relation evaluated on them and
    /// every unary predicate of `b` restricted to the new domain.
    pub fn induced_structure(
        &self,
        b: &FinStructure,
        budget: &EvalBudget,
    ) -> Result<FinStructure, InterpretationError> {
        let domain: Vec<usize> =
            satisfying_elements(b, &self.dom.formula, &self.dom.params[0], budget)?.into_iter().collect();
        if domain.is_empty() {
            log::warn!("interpretation domain is empty");
        }
        let position: BTreeMap<usize, usize> = domain.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let mut out = FinStructure::new(domain.iter().map(|&e| b.name(e).to_string()))?;
        for (name, def) in &self.rels {
            let params: Vec<&str> = def.params.iter().map(String::as_str).collect();
            let mut checker = Checker::new(b, &def.formula, &params, &[], budget)?;
            let arity = params.len();
            let mut tuples = BTreeSet::new();
            let mut tuple = vec![0usize; arity];
            let mut values = vec![0usize; arity];
            'all: loop {
                if domain.is_empty() && arity > 0 {
                    break;
                }
                for (slot, &i) in values.iter_mut().zip(&tuple) {
                    *slot = domain[i];
                }
                if checker.holds(&values, &[]) {
                    tuples.insert(tuple.clone());
                }
                for k in (0..arity).rev() {
                    tuple[k] += 1;
                    if tuple[k] < domain.len() {
                        continue 'all;
                    }
                    tuple[k] = 0;
                }
                break;
            }
            out.add_relation_indexed(name, arity, tuples)?;
        }
        for (name, members) in b.predicates() {
            let kept = members.iter().filter_map(|m| position.get(m).copied()).collect();
            out.add_predicate_indexed(name, kept)?;
        }
        Ok(out)
    }
}

fn check_definition(
    name: &str,
    def: &Definition,
    arity: usize,
    target: &Vocabulary,
) -> Result<(), InterpretationError> {
    if def.params.len() != arity {
        return Err(InterpretationError::Arity { name: name.to_string(), expected: arity, found: def.params.len() });
    }
    let free = def.formula.free_variables();
    let outside: Vec<String> = free.fo.iter().filter(|v| !def.params.contains(v)).cloned().collect();
    if !outside.is_empty() || !free.sets.is_empty() {
        return Err(InterpretationError::FreeVariables {
            name: name.to_string(),
            params: def.params.clone(),
            found: outside.into_iter().chain(free.sets).collect(),
        });
    }
    let voc = def.formula.vocabulary()?;
    let within = voc.relations().all(|(r, a)| target.arity(r) == Some(a)) && voc.sets().all(|s| target.has_set(s));
    if !within {
        return Err(InterpretationError::Vocabulary(name.to_string()));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eval::{eval_sentence, Assignment};
    use crate::logic::{parse_formula, print_formula};
    use crate::structure::build_torus;

    fn graph_interp(dom: &str, e: &str) -> Interpretation {
        let target = Vocabulary::new().with_relation("E", 2).unwrap().with_set("D").unwrap();
        let source = Vocabulary::new().with_relation("R", 2).unwrap();
        let dom = Definition { params: vec!["x".into()], formula: parse_formula(dom, &target).unwrap() };
        let r = Definition { params: vec!["x".into(), "y".into()], formula: parse_formula(e, &target).unwrap() };
        Interpretation::new(source, target, dom, BTreeMap::from([("R".to_string(), r)])).unwrap()
    }

    fn psrc() -> Vocabulary {
        Vocabulary::new().with_relation("R", 2).unwrap().with_set("P").unwrap()
    }

    #[test]
    fn atoms_follow_the_rules() {
        let i = graph_interp("D(x)", "E(x,y) | E(y,x)");
        let p = parse_formula("P(x)", &psrc()).unwrap();
        assert_eq!(i.translate(&p).unwrap(), p);
        let eq = parse_formula("x = y", &psrc()).unwrap();
        assert_eq!(i.translate(&eq).unwrap(), eq);
        let r = parse_formula("R(a,b)", &psrc()).unwrap();
        assert_eq!(print_formula(&i.translate(&r).unwrap()), "E(a,b) | E(b,a)");
        let ex = parse_formula("E z. P(z) & !R(z,z)", &psrc()).unwrap();
        assert_eq!(print_formula(&i.translate(&ex).unwrap()), "E z. D(z) & (P(z) & !(E(z,z) | E(z,z)))");
        let all = parse_formula("A z. P(z)", &psrc()).unwrap();
        assert_eq!(print_formula(&i.translate(&all).unwrap()), "A z. D(z) -> P(z)");
    }

    #[test]
    fn translation_avoids_capture() {
        let target = Vocabulary::new().with_relation("E", 2).unwrap();
        let i = {
            let source = Vocabulary::new().with_relation("R", 1).unwrap();
            let dom = Definition { params: vec!["x".into()], formula: Formula::truth("x") };
            let r = Definition { params: vec!["y".into()], formula: parse_formula("E x. E(y,x)", &target).unwrap() };
            Interpretation::new(source, target, dom, BTreeMap::from([("R".to_string(), r)])).unwrap()
        };
        let f = parse_formula("R(x)", &Vocabulary::new().with_relation("R", 1).unwrap()).unwrap();
        let g = i.translate(&f).unwrap();
        assert_eq!(g.free_variables().fo.into_iter().collect::<Vec<_>>(), ["x"]);
        let Formula::Exists(bound, _) = &g else { panic!() };
        assert_ne!(bound, "x");
    }

    #[test]
    fn errors() {
        let i = graph_interp("D(x)", "E(x,y)");
        let clash = Vocabulary::new().with_relation("R", 2).unwrap().with_set("D").unwrap();
        let f = parse_formula("E x. D(x)", &clash).unwrap();
        assert!(matches!(i.translate(&f), Err(InterpretationError::SymbolClash(s)) if s == "D"));
        let g = parse_formula("E2 X. E x. X(x)", &psrc()).unwrap();
        assert!(matches!(i.translate(&g), Err(InterpretationError::SetQuantifier(_))));
        let bad = Formula::rel("R", &["x"]);
        assert!(matches!(i.translate(&bad), Err(InterpretationError::Arity { .. })));

        let target = Vocabulary::new().with_relation("E", 2).unwrap();
        let source = Vocabulary::new().with_relation("R", 2).unwrap();
        let dom = Definition { params: vec!["x".into()], formula: Formula::truth("x") };
        let open = Definition { params: vec!["x".into(), "y".into()], formula: Formula::rel("E", &["x", "z"]) };
        let e = Interpretation::new(source.clone(), target.clone(), dom.clone(), BTreeMap::from([("R".into(), open)]));
        assert!(matches!(e, Err(InterpretationError::FreeVariables { .. })));
        assert!(matches!(
            Interpretation::new(source, target, dom, BTreeMap::new()),
            Err(InterpretationError::MissingRelation(_))
        ));
    }

    #[test]
    fn induced_structure_relativizes() {
        let mut b = build_torus(3, 1).unwrap();
        let target_b = {
            let mut t = FinStructure::new(b.elements().to_vec()).unwrap();
            let h: Vec<Vec<String>> = b.named_tuples("H");
            t.add_relation("E", 2, h).unwrap();
            t.add_predicate("D", ["0_0", "1_0"]).unwrap();
            t.add_predicate("P", ["1_0", "2_0"]).unwrap();
            t
        };
        b = target_b;
        let i = graph_interp("D(x)", "E(x,y)");
        let f = i.induced_structure(&b, &EvalBudget::default()).unwrap();
        assert_eq!(f.elements(), ["0_0", "1_0"]);
        assert_eq!(f.named_tuples("R"), vec![vec!["0_0".to_string(), "1_0".to_string()]]);
        assert_eq!(f.predicate("P").unwrap().len(), 1);

        let empty = graph_interp("!(x = x)", "E(x,y)");
        let g = empty.induced_structure(&b, &EvalBudget::default()).unwrap();
        assert!(g.is_empty());
        assert!(g.relation("R").unwrap().is_empty());
    }

    #[test]
    fn pointwise_expansion_law_on_a_fixed_case() {
        let mut b = FinStructure::new(["a", "b", "c", "d"]).unwrap();
        b.add_relation("E", 2, [vec!["a", "b"], vec!["b", "c"], vec!["c", "d"], vec!["d", "a"]]).unwrap();
        b.add_predicate("D", ["a", "b", "c"]).unwrap();
        let i = graph_interp("D(x)", "E(x,y)");
        let f = parse_formula("A x. P(x) -> E y. R(x,y) & !P(y)", &psrc()).unwrap();
        let t = i.translate(&f).unwrap();
        let induced = i.induced_structure(&b, &EvalBudget::default()).unwrap();
        for inside in [vec![], vec!["a"], vec!["a", "b"], vec!["b"], vec!["c"]] {
            let mut fb = induced.clone();
            fb.add_predicate("P", inside.clone()).unwrap();
            let want = eval_sentence(&fb, &f, &EvalBudget::default()).unwrap();
            for outside in [false, true] {
                let mut members = inside.clone();
                if outside {
                    members.push("d");
                }
                let a = Assignment::new();
                let mut bb = b.clone();
                bb.add_predicate("P", members).unwrap();
                assert_eq!(crate::eval::eval(&bb, &t, &a, &EvalBudget::default()).unwrap(), want, "{inside:?}");
            }
        }
    }
}
