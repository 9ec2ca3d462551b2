//! Brute-force model checking of FO, MSO and WMSO formulas on finite structures.
//!
//! Formulas are compiled against a structure: every binder gets its own slot,
//! relations become lookup tables and unary predicates become bitsets.
//! Quantifier nodes are memoized on the values of their free variables, so
//! nested relativizations (as produced by interpretations) stay polynomial.
//! Weak and strong set quantifiers are evaluated identically, since every
//! subset of a finite structure is finite.

mod search;

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};

use fixedbitset::FixedBitSet;
use thiserror::Error;

use crate::logic::{Formula, SetRef};
use crate::structure::FinStructure;

pub use search::{expansion_search, expansion_search_within, Expansion};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("unbound variable `{0}`")]
    UnboundVariable(String),
    #[error("vocabulary mismatch: {0}")]
    VocabularyMismatch(String),
    #[error("expected a sentence, found free variables {0:?}")]
    OpenSentence(Vec<String>),
    #[error("predicate name `{0}` clashes with the structure or repeats")]
    NameClash(String),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
}

/// Limits guarding exponential and large enumerations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EvalBudget {
    /// Largest domain over which subsets are enumerated.
    pub max_set_domain: usize,
    /// Largest domain a first-order quantifier may range over.
    pub max_fo_domain: usize,
}

impl Default for EvalBudget {
    fn default() -> Self {
        EvalBudget { max_set_domain: 16, max_fo_domain: 10_000 }
    }
}

/// Values for the free variables of a formula, by element name.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Assignment {
    pub fo: BTreeMap<String, String>,
    pub sets: BTreeMap<String, BTreeSet<String>>,
}

impl Assignment {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, var: &str, element: &str) -> Self {
        self.fo.insert(var.to_string(), element.to_string());
        self
    }

    pub fn with_set<S: AsRef<str>>(mut self, var: &str, elements: impl IntoIterator<Item = S>) -> Self {
        self.sets.insert(var.to_string(), elements.into_iter().map(|e| e.as_ref().to_string()).collect());
        self
    }
}

/// Evaluates `f` on `s` under assignment `a`.
pub fn eval(s: &FinStructure, f: &Formula, a: &Assignment, budget: &EvalBudget) -> Result<bool, EvalError> {
    let fo_names: Vec<&str> = a.fo.keys().map(String::as_str).collect();
    let set_names: Vec<&str> = a.sets.keys().map(String::as_str).collect();
    let mut checker = Checker::new(s, f, &fo_names, &set_names, budget)?;
    let lookup = |e: &String| s.index_of(e).ok_or_else(|| EvalError::UnknownElement(e.clone()));
    let fo_vals = a.fo.values().map(lookup).collect::<Result<Vec<_>, _>>()?;
    let mut set_vals = Vec::new();
    for members in a.sets.values() {
        let mut bits = FixedBitSet::with_capacity(s.len());
        for m in members {
            bits.insert(lookup(m)?);
        }
        set_vals.push(bits);
    }
    Ok(checker.holds(&fo_vals, &set_vals))
}

/// Evaluates a sentence.
pub fn eval_sentence(s: &FinStructure, f: &Formula, budget: &EvalBudget) -> Result<bool, EvalError> {
    eval(s, f, &Assignment::new(), budget)
}

/// Elements `e` with `s ⊨ f(e)`, where `var` is the only free variable of `f`.
pub fn satisfying_elements(
    s: &FinStructure,
    f: &Formula,
    var: &str,
    budget: &EvalBudget,
) -> Result<BTreeSet<usize>, EvalError> {
    let mut checker = Checker::new(s, f, &[var], &[], budget)?;
    Ok((0..s.len()).filter(|&e| checker.holds(&[e], &[])).collect())
}

type NodeId = usize;

#[derive(Clone, Copy, Debug)]
enum SetSource {
    Const(usize),
    Slot(usize),
}

#[derive(Debug)]
enum Node {
    Rel { table: usize, args: Box<[usize]> },
    Mem { set: SetSource, arg: usize },
    Eq(usize, usize),
    Not(NodeId),
    And(NodeId, NodeId),
    Or(NodeId, NodeId),
    Implies(NodeId, NodeId),
    Quant { exists: bool, var: usize, body: NodeId, memo: usize },
    SetQuant { exists: bool, var: usize, body: NodeId, memo: usize },
}

enum Table {
    Dense { bits: FixedBitSet },
    Sparse(HashSet<Box<[usize]>>),
}

const DENSE_TABLE_LIMIT: usize = 1 << 22;
const DENSE_MEMO_LIMIT: usize = 1 << 20;
const MEMO_MAP_LIMIT: usize = 1 << 22;

struct MemoSpec {
    fo: Vec<usize>,
    sets: Vec<usize>,
}

enum Memo {
    Dense(Vec<u8>),
    Map(HashMap<Box<[u64]>, bool>),
}

struct Compiler<'a> {
    s: &'a FinStructure,
    nodes: Vec<Node>,
    tables: Vec<Table>,
    table_ids: HashMap<String, usize>,
    consts: Vec<FixedBitSet>,
    const_ids: HashMap<String, usize>,
    fo_scope: HashMap<String, Vec<usize>>,
    set_scope: HashMap<String, Vec<usize>>,
    fo_slots: usize,
    set_slots: usize,
    // Free slots of each node, kept sorted.
    free_fo: Vec<Vec<usize>>,
    free_sets: Vec<Vec<usize>>,
    memo_specs: Vec<MemoSpec>,
    has_fo_quant: bool,
    has_set_quant: bool,
}

fn union(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out: Vec<usize> = a.iter().chain(b).copied().collect();
    out.sort_unstable();
    out.dedup();
    out
}

fn without(a: &[usize], x: usize) -> Vec<usize> {
    a.iter().copied().filter(|&v| v != x).collect()
}

impl Compiler<'_> {
    fn push(&mut self, node: Node, fo: Vec<usize>, sets: Vec<usize>) -> NodeId {
        self.nodes.push(node);
        self.free_fo.push(fo);
        self.free_sets.push(sets);
        self.nodes.len() - 1
    }

    fn fo_var(&self, v: &str) -> Result<usize, EvalError> {
        self.fo_scope.get(v).and_then(|st| st.last().copied()).ok_or_else(|| EvalError::UnboundVariable(v.to_string()))
    }

    fn table(&mut self, name: &str, arity: usize) -> Result<usize, EvalError> {
        if let Some(&t) = self.table_ids.get(name) {
            return Ok(t);
        }
        let rel = self
            .s
            .relation(name)
            .ok_or_else(|| EvalError::VocabularyMismatch(format!("structure has no relation `{name}`")))?;
        if rel.arity() != arity {
            return Err(EvalError::VocabularyMismatch(format!(
                "`{name}` has arity {} in the structure but {arity} in the formula",
                rel.arity()
            )));
        }
        let n = self.s.len();
        let dense_size = n.checked_pow(arity as u32).filter(|&sz| sz <= DENSE_TABLE_LIMIT);
        let table = match dense_size {
            Some(size) => {
                let mut bits = FixedBitSet::with_capacity(size);
                for t in rel.tuples() {
                    bits.insert(t.iter().fold(0, |acc, &e| acc * n + e));
                }
                Table::Dense { bits }
            }
            None => Table::Sparse(rel.tuples().iter().map(|t| t.clone().into_boxed_slice()).collect()),
        };
        self.tables.push(table);
        self.table_ids.insert(name.to_string(), self.tables.len() - 1);
        Ok(self.tables.len() - 1)
    }

    fn set_source(&mut self, r: &SetRef) -> Result<SetSource, EvalError> {
        if let Some(&slot) = self.set_scope.get(r.name()).and_then(|st| st.last()) {
            return Ok(SetSource::Slot(slot));
        }
        match r {
            SetRef::Var(x) => Err(EvalError::UnboundVariable(x.clone())),
            SetRef::Symbol(p) => {
                if let Some(&c) = self.const_ids.get(p) {
                    return Ok(SetSource::Const(c));
                }
                let members = self
                    .s
                    .predicate(p)
                    .ok_or_else(|| EvalError::VocabularyMismatch(format!("structure has no predicate `{p}`")))?;
                let mut bits = FixedBitSet::with_capacity(self.s.len());
                members.iter().for_each(|&m| bits.insert(m));
                self.consts.push(bits);
                self.const_ids.insert(p.clone(), self.consts.len() - 1);
                Ok(SetSource::Const(self.consts.len() - 1))
            }
        }
    }

    fn compile(&mut self, f: &Formula) -> Result<NodeId, EvalError> {
        Ok(match f {
            Formula::Rel(r, args) => {
                let table = self.table(r, args.len())?;
                let slots = args.iter().map(|a| self.fo_var(a)).collect::<Result<Vec<_>, _>>()?;
                let fo = union(&slots, &[]);
                self.push(Node::Rel { table, args: slots.into_boxed_slice() }, fo, vec![])
            }
            Formula::Member(r, v) => {
                let set = self.set_source(r)?;
                let arg = self.fo_var(v)?;
                let sets = match set {
                    SetSource::Slot(s) => vec![s],
                    SetSource::Const(_) => vec![],
                };
                self.push(Node::Mem { set, arg }, vec![arg], sets)
            }
            Formula::Eq(a, b) => {
                let (a, b) = (self.fo_var(a)?, self.fo_var(b)?);
                self.push(Node::Eq(a, b), union(&[a], &[b]), vec![])
            }
            Formula::Not(a) => {
                let a = self.compile(a)?;
                let (fo, sets) = (self.free_fo[a].clone(), self.free_sets[a].clone());
                self.push(Node::Not(a), fo, sets)
            }
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                let (a, b) = (self.compile(a)?, self.compile(b)?);
                let fo = union(&self.free_fo[a], &self.free_fo[b]);
                let sets = union(&self.free_sets[a], &self.free_sets[b]);
                let node = match f {
                    Formula::And(..) => Node::And(a, b),
                    Formula::Or(..) => Node::Or(a, b),
                    _ => Node::Implies(a, b),
                };
                self.push(node, fo, sets)
            }
            Formula::Exists(v, body) | Formula::Forall(v, body) => {
                self.has_fo_quant = true;
                let var = self.fo_slots;
                self.fo_slots += 1;
                self.fo_scope.entry(v.clone()).or_default().push(var);
                let body = self.compile(body);
                self.fo_scope.get_mut(v).expect("pushed above").pop();
                let body = body?;
                let fo = without(&self.free_fo[body], var);
                let sets = self.free_sets[body].clone();
                let memo = self.memo_specs.len();
                self.memo_specs.push(MemoSpec { fo: fo.clone(), sets: sets.clone() });
                let exists = matches!(f, Formula::Exists(..));
                self.push(Node::Quant { exists, var, body, memo }, fo, sets)
            }
            Formula::ExistsSet { var: v, body, .. } | Formula::ForallSet { var: v, body, .. } => {
                self.has_set_quant = true;
                let var = self.set_slots;
                self.set_slots += 1;
                self.set_scope.entry(v.clone()).or_default().push(var);
                let body = self.compile(body);
                self.set_scope.get_mut(v).expect("pushed above").pop();
                let body = body?;
                let fo = self.free_fo[body].clone();
                let sets = without(&self.free_sets[body], var);
                let memo = self.memo_specs.len();
                self.memo_specs.push(MemoSpec { fo: fo.clone(), sets: sets.clone() });
                let exists = matches!(f, Formula::ExistsSet { .. });
                self.push(Node::SetQuant { exists, var, body, memo }, fo, sets)
            }
        })
    }
}

/// A formula compiled against one structure, answering repeated queries for
/// different values of its declared free variables.
///
/// Memoized subresults are kept across queries; they are keyed on every free
/// variable a subformula depends on, so reuse never changes a verdict.
pub struct Checker {
    n: usize,
    nodes: Vec<Node>,
    root: NodeId,
    tables: Vec<Table>,
    consts: Vec<FixedBitSet>,
    memo_specs: Vec<MemoSpec>,
    memo: Vec<Memo>,
    memo_enabled: bool,
    fo_params: Vec<usize>,
    set_params: Vec<usize>,
    fo_env: Vec<usize>,
    set_env: Vec<FixedBitSet>,
    key_buf: Vec<u64>,
}

impl Checker {
    /// Compiles `f` with free first-order variables `fo_params` and free set names
    /// `set_params`. A set name binds both set variables and predicate symbols of
    /// that name, which is how expansion predicates are supplied.
    pub fn new(
        s: &FinStructure,
        f: &Formula,
        fo_params: &[&str],
        set_params: &[&str],
        budget: &EvalBudget,
    ) -> Result<Checker, EvalError> {
        let mut c = Compiler {
            s,
            nodes: Vec::new(),
            tables: Vec::new(),
            table_ids: HashMap::new(),
            consts: Vec::new(),
            const_ids: HashMap::new(),
            fo_scope: HashMap::new(),
            set_scope: HashMap::new(),
            fo_slots: 0,
            set_slots: 0,
            free_fo: Vec::new(),
            free_sets: Vec::new(),
            memo_specs: Vec::new(),
            has_fo_quant: false,
            has_set_quant: false,
        };
        for (i, v) in fo_params.iter().enumerate() {
            c.fo_scope.entry(v.to_string()).or_default().push(i);
        }
        c.fo_slots = fo_params.len();
        for (i, v) in set_params.iter().enumerate() {
            c.set_scope.entry(v.to_string()).or_default().push(i);
        }
        c.set_slots = set_params.len();
        let root = c.compile(f)?;

        let n = s.len();
        if c.has_set_quant && n > budget.max_set_domain {
            return Err(EvalError::BudgetExceeded(format!(
                "set quantifier over {n} elements (max_set_domain = {})",
                budget.max_set_domain
            )));
        }
        if c.has_fo_quant && n > budget.max_fo_domain {
            return Err(EvalError::BudgetExceeded(format!(
                "first-order quantifier over {n} elements (max_fo_domain = {})",
                budget.max_fo_domain
            )));
        }

        let memo = c
            .memo_specs
            .iter()
            .map(|spec| {
                let dense = spec.sets.is_empty()
                    && n.checked_pow(spec.fo.len() as u32).is_some_and(|sz| sz <= DENSE_MEMO_LIMIT);
                if dense {
                    Memo::Dense(vec![0; n.pow(spec.fo.len() as u32).max(1)])
                } else {
                    Memo::Map(HashMap::new())
                }
            })
            .collect();
        Ok(Checker {
            n,
            nodes: c.nodes,
            root,
            tables: c.tables,
            consts: c.consts,
            memo_specs: c.memo_specs,
            memo,
            memo_enabled: true,
            fo_params: (0..fo_params.len()).collect(),
            set_params: (0..set_params.len()).collect(),
            fo_env: vec![0; c.fo_slots],
            set_env: vec![FixedBitSet::with_capacity(n); c.set_slots],
            key_buf: Vec::new(),
        })
    }

    /// Turns memoization off; used to cross-check that it never changes results.
    pub fn without_memo(mut self) -> Self {
        self.memo_enabled = false;
        self
    }

    /// Truth of the formula with the declared parameters bound to the given
    /// element indices and element sets (in declaration order).
    pub fn holds(&mut self, fo: &[usize], sets: &[FixedBitSet]) -> bool {
        assert_eq!(fo.len(), self.fo_params.len(), "wrong number of first-order values");
        assert_eq!(sets.len(), self.set_params.len(), "wrong number of set values");
        for (&slot, &v) in self.fo_params.iter().zip(fo) {
            assert!(v < self.n, "element index {v} out of range");
            self.fo_env[slot] = v;
        }
        for (&slot, v) in self.set_params.iter().zip(sets) {
            let mut bits = v.clone();
            bits.grow(self.n);
            self.set_env[slot] = bits;
        }
        self.eval(self.root)
    }

    fn memo_get(&mut self, id: usize) -> (Option<bool>, usize) {
        let spec = &self.memo_specs[id];
        match &self.memo[id] {
            Memo::Dense(table) => {
                let idx = spec.fo.iter().fold(0, |acc, &s| acc * self.n + self.fo_env[s]);
                let v = table[idx];
                ((v != 0).then_some(v == 2), idx)
            }
            Memo::Map(map) => {
                self.key_buf.clear();
                self.key_buf.extend(spec.fo.iter().map(|&s| self.fo_env[s] as u64));
                for &s in &spec.sets {
                    self.key_buf.extend(self.set_env[s].as_slice().iter().map(|&w| w as u64));
                }
                (map.get(self.key_buf.as_slice()).copied(), 0)
            }
        }
    }

    fn memo_put(&mut self, id: usize, idx: usize, value: bool) {
        match &mut self.memo[id] {
            Memo::Dense(table) => table[idx] = if value { 2 } else { 1 },
            Memo::Map(map) => {
                if map.len() >= MEMO_MAP_LIMIT {
                    map.clear();
                }
                // Nested lookups reuse key_buf, so the key is rebuilt here.
                let spec = &self.memo_specs[id];
                let mut key: Vec<u64> = spec.fo.iter().map(|&s| self.fo_env[s] as u64).collect();
                for &s in &spec.sets {
                    key.extend(self.set_env[s].as_slice().iter().map(|&w| w as u64));
                }
                map.insert(key.into_boxed_slice(), value);
            }
        }
    }

    fn eval(&mut self, id: NodeId) -> bool {
        match self.nodes[id] {
            Node::Rel { table, ref args } => match &self.tables[table] {
                Table::Dense { bits } => {
                    let idx = args.iter().fold(0, |acc, &s| acc * self.n + self.fo_env[s]);
                    bits.contains(idx)
                }
                Table::Sparse(set) => {
                    let key: Vec<usize> = args.iter().map(|&s| self.fo_env[s]).collect();
                    set.contains(key.as_slice())
                }
            },
            Node::Mem { set, arg } => {
                let e = self.fo_env[arg];
                match set {
                    SetSource::Const(c) => self.consts[c].contains(e),
                    SetSource::Slot(s) => self.set_env[s].contains(e),
                }
            }
            Node::Eq(a, b) => self.fo_env[a] == self.fo_env[b],
            Node::Not(a) => !self.eval(a),
            Node::And(a, b) => self.eval(a) && self.eval(b),
            Node::Or(a, b) => self.eval(a) || self.eval(b),
            Node::Implies(a, b) => !self.eval(a) || self.eval(b),
            Node::Quant { exists, var, body, memo } => {
                let mut slot = 0;
                if self.memo_enabled {
                    let (hit, idx) = self.memo_get(memo);
                    if let Some(v) = hit {
                        return v;
                    }
                    slot = idx;
                }
                let saved = self.fo_env[var];
                let mut result = !exists;
                for e in 0..self.n {
                    self.fo_env[var] = e;
                    if self.eval(body) == exists {
                        result = exists;
                        break;
                    }
                }
                self.fo_env[var] = saved;
                if self.memo_enabled {
                    self.memo_put(memo, slot, result);
                }
                result
            }
            Node::SetQuant { exists, var, body, memo } => {
                let mut slot = 0;
                if self.memo_enabled {
                    let (hit, idx) = self.memo_get(memo);
                    if let Some(v) = hit {
                        return v;
                    }
                    slot = idx;
                }
                let saved = std::mem::replace(&mut self.set_env[var], FixedBitSet::with_capacity(self.n));
                let mut result = !exists;
                for mask in 0u64..(1u64 << self.n) {
                    let bits = &mut self.set_env[var];
                    bits.clear();
                    (0..self.n).filter(|i| mask >> i & 1 == 1).for_each(|i| bits.insert(i));
                    if self.eval(body) == exists {
                        result = exists;
                        break;
                    }
                }
                self.set_env[var] = saved;
                if self.memo_enabled {
                    self.memo_put(memo, slot, result);
                }
                result
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{collinear_points, Point};
    use crate::logic::{parse_formula, Vocabulary};
    use crate::structure::{build_torus, geometric_structure};

    fn torus_voc() -> Vocabulary {
        Vocabulary::new().with_relation("H", 2).unwrap().with_relation("V", 2).unwrap()
    }

    #[test]
    fn torus_successor_is_total() {
        let t = build_torus(2, 2).unwrap();
        let f = parse_formula("A x. E y. H(x,y)", &torus_voc()).unwrap();
        assert!(eval_sentence(&t, &f, &EvalBudget::default()).unwrap());
        let g = parse_formula("E x. A y. H(x,y)", &torus_voc()).unwrap();
        assert!(!eval_sentence(&t, &g, &EvalBudget::default()).unwrap());
    }

    #[test]
    fn full_set_witness() {
        let t = build_torus(3, 2).unwrap();
        let f = parse_formula("E2 X. A x. X(x)", &torus_voc()).unwrap();
        assert!(eval_sentence(&t, &f, &EvalBudget::default()).unwrap());
        let w = parse_formula("Aw X. E x. X(x)", &torus_voc()).unwrap();
        assert!(!eval_sentence(&t, &w, &EvalBudget::default()).unwrap());
    }

    #[test]
    fn set_quantifier_budget() {
        let t = build_torus(5, 4).unwrap();
        let f = parse_formula("E2 X. A x. X(x)", &torus_voc()).unwrap();
        assert!(matches!(eval_sentence(&t, &f, &EvalBudget::default()), Err(EvalError::BudgetExceeded(_))));
        let small = EvalBudget { max_set_domain: 16, max_fo_domain: 10 };
        let g = parse_formula("A x. E y. H(x,y)", &torus_voc()).unwrap();
        assert!(matches!(eval_sentence(&t, &g, &small), Err(EvalError::BudgetExceeded(_))));
    }

    #[test]
    fn unbound_and_mismatched() {
        let t = build_torus(2, 1).unwrap();
        let f = parse_formula("H(x,y)", &torus_voc()).unwrap();
        assert_eq!(eval_sentence(&t, &f, &EvalBudget::default()), Err(EvalError::UnboundVariable("x".into())));
        let a = Assignment::new().with("x", "0_0").with("y", "1_0");
        assert!(eval(&t, &f, &a, &EvalBudget::default()).unwrap());
        let voc = Vocabulary::new().with_relation("beta", 3).unwrap();
        let g = parse_formula("E x. beta(x,x,x)", &voc).unwrap();
        assert!(matches!(eval_sentence(&t, &g, &EvalBudget::default()), Err(EvalError::VocabularyMismatch(_))));
        let bad = Assignment::new().with("x", "9_9").with("y", "0_0");
        assert!(matches!(eval(&t, &f, &bad, &EvalBudget::default()), Err(EvalError::UnknownElement(_))));
    }

    #[test]
    fn free_set_variables_from_assignment() {
        let t = build_torus(2, 2).unwrap();
        let f = crate::logic::parse_formula_with_sets("A x. X(x) -> E y. H(x,y) & X(y)", &torus_voc(), &["X"]).unwrap();
        let row = Assignment::new().with_set("X", ["0_0", "1_0"]);
        assert!(eval(&t, &f, &row, &EvalBudget::default()).unwrap());
        let single = Assignment::new().with_set("X", ["0_0"]);
        assert!(!eval(&t, &f, &single, &EvalBudget::default()).unwrap());
    }

    #[test]
    fn collinear_formula_matches_geometry() {
        let coords = [(0, 0), (1, 0), (2, 0), (0, 1), (1, 1), (3, 3)];
        let pts: Vec<(String, Point)> =
            coords.iter().enumerate().map(|(i, &(x, y))| (format!("p{i}"), Point::from_ints(&[x, y]))).collect();
        let s = geometric_structure(pts.clone()).unwrap();
        let voc = Vocabulary::new().with_relation("beta", 3).unwrap();
        let col = parse_formula("beta(x,y,z) | beta(x,z,y) | beta(y,x,z)", &voc).unwrap();
        let mut checker = Checker::new(&s, &col, &["x", "y", "z"], &[], &EvalBudget::default()).unwrap();
        for a in 0..6 {
            for b in 0..6 {
                for c in 0..6 {
                    let want = collinear_points(&pts[a].1, &pts[b].1, &pts[c].1).unwrap();
                    assert_eq!(checker.holds(&[a, b, c], &[]), want);
                }
            }
        }
    }

    #[test]
    fn shadowed_variables_are_distinct_slots() {
        let t = build_torus(3, 1).unwrap();
        // The inner x shadows the outer one; y must still see the outer binding.
        let f = parse_formula("E x. E y. H(x,y) & (E x. H(y,x) & !(x = y))", &torus_voc()).unwrap();
        assert!(eval_sentence(&t, &f, &EvalBudget::default()).unwrap());
    }
}
