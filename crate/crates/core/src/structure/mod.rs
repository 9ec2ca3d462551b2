//! Finite relational structures and builders for grids, tori and point sets.
//!
//! Grid-like structures name the cell `(i, j)` as `"i_j"` and list elements row by
//! row: index `j * m + i`.

mod io;

use std::collections::{BTreeMap, BTreeSet, HashMap};

use thiserror::Error;

use crate::geometry::{between, GeometryError, Point};
use crate::logic::{LogicError, Vocabulary};

pub use io::{load_structure, parse_structure, write_structure};

#[derive(Debug, Error)]
pub enum StructureError {
    #[error("duplicate element `{0}`")]
    DuplicateElement(String),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("relation `{name}` has arity {arity} but got a tuple of length {found}")]
    ArityMismatch { name: String, arity: usize, found: usize },
    #[error("name `{0}` is already used by the structure")]
    NameClash(String),
    #[error("grid dimensions must be positive, got {0}x{1}")]
    BadSize(usize, usize),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Logic(#[from] LogicError),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
}

/// A relation of fixed arity stored as tuples of element indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    arity: usize,
    tuples: BTreeSet<Vec<usize>>,
}

impl Relation {
    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn tuples(&self) -> &BTreeSet<Vec<usize>> {
        &self.tuples
    }

    pub fn len(&self) -> usize {
        self.tuples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tuples.is_empty()
    }

    pub fn contains(&self, tuple: &[usize]) -> bool {
        self.tuples.contains(tuple)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinStructure {
    elements: Vec<String>,
    index: HashMap<String, usize>,
    relations: BTreeMap<String, Relation>,
    unary: BTreeMap<String, BTreeSet<usize>>,
    geometry: Option<Vec<Point>>,
}

impl FinStructure {
    pub fn new<S: Into<String>>(elements: impl IntoIterator<Item = S>) -> Result<Self, StructureError> {
        let mut s = FinStructure {
            elements: Vec::new(),
            index: HashMap::new(),
            relations: BTreeMap::new(),
            unary: BTreeMap::new(),
            geometry: None,
        };
        for e in elements {
            s.push_element(e.into())?;
        }
        Ok(s)
    }

    fn push_element(&mut self, name: String) -> Result<usize, StructureError> {
        if self.index.contains_key(&name) {
            return Err(StructureError::DuplicateElement(name));
        }
        let i = self.elements.len();
        self.index.insert(name.clone(), i);
        self.elements.push(name);
        Ok(i)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn name(&self, i: usize) -> &str {
        &self.elements[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    fn resolve(&self, name: &str) -> Result<usize, StructureError> {
        self.index_of(name).ok_or_else(|| StructureError::UnknownElement(name.to_string()))
    }

    fn check_fresh(&self, name: &str) -> Result<(), StructureError> {
        if self.relations.contains_key(name) || self.unary.contains_key(name) {
            return Err(StructureError::NameClash(name.to_string()));
        }
        Ok(())
    }

    /// Adds a relation given by element names.
    pub fn add_relation<S: AsRef<str>>(
        &mut self,
        name: &str,
        arity: usize,
        tuples: impl IntoIterator<Item = Vec<S>>,
    ) -> Result<(), StructureError> {
        let mut idx = Vec::new();
        for t in tuples {
            idx.push(t.iter().map(|e| self.resolve(e.as_ref())).collect::<Result<Vec<_>, _>>()?);
        }
        self.add_relation_indexed(name, arity, idx)
    }

    /// Adds a relation given by element indices.
    pub fn add_relation_indexed(
        &mut self,
        name: &str,
        arity: usize,
        tuples: impl IntoIterator<Item = Vec<usize>>,
    ) -> Result<(), StructureError> {
        self.check_fresh(name)?;
        Vocabulary::new().add_relation(name, arity)?;
        let mut set = BTreeSet::new();
        for t in tuples {
            if t.len() != arity {
                return Err(StructureError::ArityMismatch { name: name.to_string(), arity, found: t.len() });
            }
            if let Some(&bad) = t.iter().find(|&&e| e >= self.len()) {
                return Err(StructureError::UnknownElement(format!("#{bad}")));
            }
            set.insert(t);
        }
        self.relations.insert(name.to_string(), Relation { arity, tuples: set });
        Ok(())
    }

    /// Adds a unary predicate given by element names.
    pub fn add_predicate<S: AsRef<str>>(
        &mut self,
        name: &str,
        members: impl IntoIterator<Item = S>,
    ) -> Result<(), StructureError> {
        let idx = members.into_iter().map(|e| self.resolve(e.as_ref())).collect::<Result<BTreeSet<_>, _>>()?;
        self.add_predicate_indexed(name, idx)
    }

    pub fn add_predicate_indexed(&mut self, name: &str, members: BTreeSet<usize>) -> Result<(), StructureError> {
        self.check_fresh(name)?;
        Vocabulary::new().add_set(name)?;
        if let Some(&bad) = members.iter().find(|&&e| e >= self.len()) {
            return Err(StructureError::UnknownElement(format!("#{bad}")));
        }
        self.unary.insert(name.to_string(), members);
        Ok(())
    }

    pub fn relation(&self, name: &str) -> Option<&Relation> {
        self.relations.get(name)
    }

    pub fn relations(&self) -> impl Iterator<Item = (&str, &Relation)> {
        self.relations.iter().map(|(k, v)| (k.as_str(), v))
    }

    pub fn predicate(&self, name: &str) -> Option<&BTreeSet<usize>> {
        self.unary.get(name)
    }

    pub fn predicates(&self) -> impl Iterator<Item = (&str, &BTreeSet<usize>)> {
        self.unary.iter().map(|(k, v)| (k.as_str(), v))
    }

    /// Truth of `name(elements...)`; unknown relations are false.
    pub fn holds(&self, name: &str, tuple: &[usize]) -> bool {
        self.relations.get(name).is_some_and(|r| r.contains(tuple))
    }

    /// Like [`FinStructure::holds`] with element names.
    pub fn holds_named(&self, name: &str, tuple: &[&str]) -> bool {
        let idx: Option<Vec<usize>> = tuple.iter().map(|e| self.index_of(e)).collect();
        idx.is_some_and(|t| self.holds(name, &t))
    }

    /// Named tuples of a relation, in index order.
    pub fn named_tuples(&self, name: &str) -> Vec<Vec<String>> {
        self.relations.get(name).map_or_else(Vec::new, |r| {
            r.tuples.iter().map(|t| t.iter().map(|&e| self.elements[e].clone()).collect()).collect()
        })
    }

    pub fn vocabulary(&self) -> Vocabulary {
        let mut v = Vocabulary::new();
        for (name, r) in &self.relations {
            v.add_relation(name, r.arity).expect("structure names are validated on insertion");
        }
        for name in self.unary.keys() {
            v.add_set(name).expect("structure names are validated on insertion");
        }
        v
    }

    pub fn geometry(&self) -> Option<&[Point]> {
        self.geometry.as_deref()
    }

    pub fn point(&self, i: usize) -> Option<&Point> {
        self.geometry.as_ref().map(|g| &g[i])
    }

    /// The same structure with extra unary predicates attached.
    pub fn expand<S: AsRef<str>>(&self, preds: &BTreeMap<String, BTreeSet<S>>) -> Result<FinStructure, StructureError> {
        let mut out = self.clone();
        for (name, members) in preds {
            out.add_predicate(name, members.iter().map(|m| m.as_ref()))?;
        }
        Ok(out)
    }

    /// Like [`FinStructure::expand`] with index sets.
    pub fn expand_indexed(&self, preds: &BTreeMap<String, BTreeSet<usize>>) -> Result<FinStructure, StructureError> {
        let mut out = self.clone();
        for (name, members) in preds {
            out.add_predicate_indexed(name, members.clone())?;
        }
        Ok(out)
    }
}

/// Element name of grid cell `(i, j)`.
pub fn cell_name(i: usize, j: usize) -> String {
    format!("{i}_{j}")
}

/// Splits a grid cell name back into `(i, j)`.
pub fn parse_cell_name(name: &str) -> Option<(usize, usize)> {
    let (i, j) = name.split_once('_')?;
    Some((i.parse().ok()?, j.parse().ok()?))
}

fn grid_cells(m: usize, n: usize) -> Result<FinStructure, StructureError> {
    if m == 0 || n == 0 {
        return Err(StructureError::BadSize(m, n));
    }
    FinStructure::new((0..n).flat_map(|j| (0..m).map(move |i| cell_name(i, j))))
}

/// The `m × n` torus: horizontal successor `H` and vertical successor `V`, both wrapping.
pub fn build_torus(m: usize, n: usize) -> Result<FinStructure, StructureError> {
    let mut s = grid_cells(m, n)?;
    let at = |i: usize, j: usize| j * m + i;
    let h = (0..n).flat_map(|j| (0..m).map(move |i| vec![at(i, j), at((i + 1) % m, j)]));
    let v = (0..n).flat_map(|j| (0..m).map(move |i| vec![at(i, j), at(i, (j + 1) % n)]));
    s.add_relation_indexed("H", 2, h.collect::<Vec<_>>())?;
    s.add_relation_indexed("V", 2, v.collect::<Vec<_>>())?;
    Ok(s)
}

/// The `m × n` grid without wrap pairs.
pub fn build_finite_grid(m: usize, n: usize) -> Result<FinStructure, StructureError> {
    let mut s = grid_cells(m, n)?;
    let at = |i: usize, j: usize| j * m + i;
    let h: Vec<_> = (0..n).flat_map(|j| (0..m - 1).map(move |i| vec![at(i, j), at(i + 1, j)])).collect();
    let v: Vec<_> = (0..n - 1).flat_map(|j| (0..m).map(move |i| vec![at(i, j), at(i, j + 1)])).collect();
    s.add_relation_indexed("H", 2, h)?;
    s.add_relation_indexed("V", 2, v)?;
    Ok(s)
}

/// A finite prefix of the recurrence grid: the grid plus `R`, the strict order on
/// the first column.
pub fn build_recurrence_prefix(m: usize, n: usize) -> Result<FinStructure, StructureError> {
    let mut s = build_finite_grid(m, n)?;
    let r: Vec<_> = (0..n).flat_map(|i| (i + 1..n).map(move |j| vec![i * m, j * m])).collect();
    s.add_relation_indexed("R", 2, r)?;
    Ok(s)
}

/// The structure `(T, beta)` of a named point set, with `beta` computed over all triples.
pub fn geometric_structure<S: Into<String>>(
    points: impl IntoIterator<Item = (S, Point)>,
) -> Result<FinStructure, StructureError> {
    let (names, pts): (Vec<String>, Vec<Point>) = points.into_iter().map(|(n, p)| (n.into(), p)).unzip();
    if let Some(first) = pts.first() {
        if let Some(bad) = pts.iter().find(|p| p.dim() != first.dim()) {
            return Err(GeometryError::DimensionMismatch(first.dim(), bad.dim()).into());
        }
    }
    let mut s = FinStructure::new(names)?;
    let n = pts.len();
    let mut beta = Vec::new();
    for a in 0..n {
        for c in 0..n {
            for b in 0..n {
                if between(&pts[a], &pts[b], &pts[c])? {
                    beta.push(vec![a, b, c]);
                }
            }
        }
    }
    s.add_relation_indexed("beta", 3, beta)?;
    s.geometry = Some(pts);
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pairs(s: &FinStructure, rel: &str) -> BTreeSet<(String, String)> {
        s.named_tuples(rel).into_iter().map(|t| (t[0].clone(), t[1].clone())).collect()
    }

    fn pair(a: &str, b: &str) -> (String, String) {
        (a.to_string(), b.to_string())
    }

    #[test]
    fn torus_examples() {
        let t = build_torus(3, 2).unwrap();
        assert!(t.holds_named("H", &["2_0", "0_0"]));
        assert!(t.holds_named("H", &["2_1", "0_1"]));
        assert!(t.holds_named("V", &["1_1", "1_0"]));
        assert_eq!(t.relation("H").unwrap().len(), 6);
        assert_eq!(t.relation("V").unwrap().len(), 6);
        assert_eq!(t.elements()[..4], ["0_0", "1_0", "2_0", "0_1"]);

        let one = build_torus(1, 1).unwrap();
        assert_eq!(pairs(&one, "H"), BTreeSet::from([pair("0_0", "0_0")]));
        assert_eq!(pairs(&one, "V"), BTreeSet::from([pair("0_0", "0_0")]));
        assert!(build_torus(0, 3).is_err());
    }

    #[test]
    fn torus_successors_are_permutations() {
        for (m, n) in [(1, 1), (1, 4), (3, 2), (4, 5)] {
            let t = build_torus(m, n).unwrap();
            for rel in ["H", "V"] {
                let r = t.relation(rel).unwrap();
                assert_eq!(r.len(), m * n);
                let sources: BTreeSet<_> = r.tuples().iter().map(|p| p[0]).collect();
                let targets: BTreeSet<_> = r.tuples().iter().map(|p| p[1]).collect();
                assert_eq!(sources.len(), m * n);
                assert_eq!(targets.len(), m * n);
            }
        }
    }

    #[test]
    fn grid_examples() {
        let g = build_finite_grid(3, 2).unwrap();
        assert_eq!(g.relation("H").unwrap().len(), 4);
        assert_eq!(g.relation("V").unwrap().len(), 3);
        let one = build_finite_grid(1, 1).unwrap();
        assert!(one.relation("H").unwrap().is_empty() && one.relation("V").unwrap().is_empty());
        let g2 = build_finite_grid(2, 2).unwrap();
        assert_eq!(pairs(&g2, "H"), BTreeSet::from([pair("0_0", "1_0"), pair("0_1", "1_1")]));
    }

    #[test]
    fn grid_is_torus_minus_wrap() {
        for (m, n) in [(2, 3), (4, 4), (5, 1)] {
            let g = build_finite_grid(m, n).unwrap();
            let t = build_torus(m, n).unwrap();
            assert_eq!(g.elements(), t.elements());
            let wrap_h: BTreeSet<_> = (0..n).map(|j| pair(&cell_name(m - 1, j), &cell_name(0, j))).collect();
            let wrap_v: BTreeSet<_> = (0..m).map(|i| pair(&cell_name(i, n - 1), &cell_name(i, 0))).collect();
            let gh = pairs(&g, "H");
            let gv = pairs(&g, "V");
            assert_eq!(gh, pairs(&t, "H").difference(&wrap_h).cloned().collect());
            assert_eq!(gv, pairs(&t, "V").difference(&wrap_v).cloned().collect());
        }
    }

    #[test]
    fn recurrence_prefix_examples() {
        let r = build_recurrence_prefix(2, 3).unwrap();
        assert_eq!(pairs(&r, "R"), BTreeSet::from([pair("0_0", "0_1"), pair("0_0", "0_2"), pair("0_1", "0_2")]));
        assert!(build_recurrence_prefix(2, 1).unwrap().relation("R").unwrap().is_empty());
        assert_eq!(build_recurrence_prefix(3, 4).unwrap().relation("R").unwrap().len(), 6);
    }

    #[test]
    fn geometric_examples() {
        let line = geometric_structure([
            ("a", Point::from_ints(&[0, 0])),
            ("b", Point::from_ints(&[1, 0])),
            ("c", Point::from_ints(&[2, 0])),
        ])
        .unwrap();
        assert!(line.holds_named("beta", &["a", "b", "c"]));
        assert!(line.holds_named("beta", &["a", "a", "c"]));
        assert!(!line.holds_named("beta", &["b", "a", "c"]));

        let tri = geometric_structure([
            ("a", Point::from_ints(&[0, 0])),
            ("b", Point::from_ints(&[1, 0])),
            ("c", Point::from_ints(&[0, 1])),
        ])
        .unwrap();
        for t in tri.relation("beta").unwrap().tuples() {
            assert!(t[0] == t[1] || t[1] == t[2], "non-degenerate triple {t:?}");
        }
        // (s,s,u) and (s,u,u) for all s,u: 9 + 9 - 3 overlapping (s,s,s).
        assert_eq!(tri.relation("beta").unwrap().len(), 15);
    }

    #[test]
    fn geometric_errors() {
        let dup = geometric_structure([("a", Point::from_ints(&[0, 0])), ("a", Point::from_ints(&[1, 0]))]);
        assert!(matches!(dup, Err(StructureError::DuplicateElement(_))));
        let dims = geometric_structure([("a", Point::from_ints(&[0, 0])), ("b", Point::from_ints(&[1]))]);
        assert!(matches!(dims, Err(StructureError::Geometry(GeometryError::DimensionMismatch(2, 1)))));
    }

    #[test]
    fn expand_examples() {
        let t = build_torus(2, 2).unwrap();
        let e = t.expand(&BTreeMap::from([("P".to_string(), BTreeSet::from(["0_0"]))])).unwrap();
        assert_eq!(e.predicate("P").unwrap(), &BTreeSet::from([0]));
        let empty = t.expand(&BTreeMap::from([("P".to_string(), BTreeSet::<&str>::new())])).unwrap();
        assert!(empty.predicate("P").unwrap().is_empty());
        let twice = e.expand(&BTreeMap::from([("P".to_string(), BTreeSet::from(["0_1"]))]));
        assert!(matches!(twice, Err(StructureError::NameClash(_))));
        let clash = t.expand(&BTreeMap::from([("H".to_string(), BTreeSet::from(["0_1"]))]));
        assert!(matches!(clash, Err(StructureError::NameClash(_))));
        let unknown = t.expand(&BTreeMap::from([("P".to_string(), BTreeSet::from(["9_9"]))]));
        assert!(matches!(unknown, Err(StructureError::UnknownElement(_))));
    }

    #[test]
    fn cell_names_round_trip() {
        assert_eq!(parse_cell_name(&cell_name(12, 3)), Some((12, 3)));
        assert_eq!(parse_cell_name("pe"), None);
    }
}
