//! Seeded generators shared by the integration and acceptance tests.
#![allow(dead_code)]

use std::collections::BTreeMap;

use betweenness::geometry::{Point, Rational};
use betweenness::interpret::{Definition, Interpretation};
use betweenness::logic::{Formula, Vocabulary};
use betweenness::structure::FinStructure;
use betweenness::tiling::{Tile, TileSet};
use rand::seq::SliceRandom;
use rand::Rng;

pub type Atom<'a, R> = &'a dyn Fn(&mut R, &[String]) -> Formula;

const BOUND: [&str; 3] = ["x", "y", "z"];

/// A formula whose free variables lie in `scope`, with quantifier depth at most
/// `depth` and at most `fuel` connectives.
pub fn formula<R: Rng>(rng: &mut R, depth: usize, fuel: usize, scope: &[String], atom: Atom<R>) -> Formula {
    let must_bind = scope.is_empty();
    if !must_bind && (fuel == 0 || rng.gen_bool(0.3)) {
        return atom(rng, scope);
    }
    assert!(depth > 0 || !must_bind, "a sentence needs quantifier depth");
    let choice =
        if depth == 0 || (!must_bind && rng.gen_bool(0.5)) { rng.gen_range(0..4) } else { rng.gen_range(4..6) };
    let fuel = fuel.saturating_sub(1);
    match choice {
        0 => formula(rng, depth, fuel, scope, atom).not(),
        1..=3 => {
            let a = formula(rng, depth, fuel / 2, scope, atom);
            let b = formula(rng, depth, fuel / 2, scope, atom);
            match choice {
                1 => a.and(b),
                2 => a.or(b),
                _ => a.implies(b),
            }
        }
        _ => {
            let v = *BOUND.choose(rng).unwrap();
            let mut inner: Vec<String> = scope.to_vec();
            if !inner.iter().any(|s| s == v) {
                inner.push(v.to_string());
            }
            let body = formula(rng, depth - 1, fuel, &inner, atom);
            if choice == 4 {
                Formula::exists(v, body)
            } else {
                Formula::forall(v, body)
            }
        }
    }
}

fn pick<R: Rng>(rng: &mut R, scope: &[String]) -> String {
    scope.choose(rng).unwrap().clone()
}

/// Atoms over the target vocabulary `{h/2}`.
pub fn target_atom<R: Rng>(rng: &mut R, scope: &[String]) -> Formula {
    if rng.gen_bool(0.75) {
        Formula::rel("h", &[&pick(rng, scope), &pick(rng, scope)])
    } else {
        Formula::eq(&pick(rng, scope), &pick(rng, scope))
    }
}

/// Atoms over the source vocabulary `{r/2, s/1}` and the predicates `P`, `Q`.
pub fn source_atom<R: Rng>(rng: &mut R, scope: &[String]) -> Formula {
    match rng.gen_range(0..5) {
        0 | 1 => Formula::rel("r", &[&pick(rng, scope), &pick(rng, scope)]),
        2 => Formula::rel("s", &[&pick(rng, scope)]),
        3 => Formula::pred(if rng.gen_bool(0.5) { "P" } else { "Q" }, &pick(rng, scope)),
        _ => Formula::eq(&pick(rng, scope), &pick(rng, scope)),
    }
}

pub fn source_vocabulary() -> Vocabulary {
    Vocabulary::new().with_relation("r", 2).and_then(|v| v.with_relation("s", 1)).unwrap()
}

pub fn target_vocabulary() -> Vocabulary {
    Vocabulary::new().with_relation("h", 2).unwrap()
}

/// A structure over `{h/2}` with between one and `max` elements.
pub fn target_structure<R: Rng>(rng: &mut R, max: usize) -> FinStructure {
    let n = rng.gen_range(1..=max);
    let mut s = FinStructure::new((0..n).map(|i| format!("e{i}"))).unwrap();
    let density = rng.gen_range(0.2..0.7);
    let tuples: std::collections::BTreeSet<Vec<usize>> =
        (0..n).flat_map(|a| (0..n).map(move |b| vec![a, b])).filter(|_| rng.gen_bool(density)).collect();
    s.add_relation_indexed("h", 2, tuples).unwrap();
    s
}

fn definition<R: Rng>(rng: &mut R, params: &[&str], depth: usize) -> Definition {
    let scope: Vec<String> = params.iter().map(|p| p.to_string()).collect();
    Definition { params: scope.clone(), formula: formula(rng, depth, 4, &scope, &target_atom) }
}

/// An interpretation of `{r/2, s/1}` in `{h/2}` with quantifier depth at most `depth`.
pub fn interpretation<R: Rng>(rng: &mut R, depth: usize) -> Interpretation {
    let dom = definition(rng, &["u"], depth);
    let rels = BTreeMap::from([
        ("r".to_string(), definition(rng, &["a", "b"], depth)),
        ("s".to_string(), definition(rng, &["a"], depth)),
    ]);
    Interpretation::new(source_vocabulary(), target_vocabulary(), dom, rels).unwrap()
}

/// A sentence over `{r/2, s/1, P, Q}` with quantifier depth at most `depth`.
pub fn source_sentence<R: Rng>(rng: &mut R, depth: usize) -> Formula {
    formula(rng, depth, 6, &[], &source_atom)
}

/// A rational point in the plane with small numerators and denominators.
pub fn small_point<R: Rng>(rng: &mut R) -> Point {
    let mut c = || Rational::new(rng.gen_range(-4..=4), rng.gen_range(1..=3)).unwrap();
    Point::new(vec![c(), c()]).unwrap()
}

/// Every tile set of one or two distinct tiles over the colours `{0, 1}`, in a
/// fixed order. Names are `a` and `b`.
pub fn two_colour_corpus() -> Vec<TileSet> {
    let tiles: Vec<Tile> = (0..16u64).map(|k| Tile::new(k >> 3 & 1, k >> 2 & 1, k >> 1 & 1, k & 1)).collect();
    let mut out: Vec<TileSet> = tiles.iter().map(|&t| TileSet::new([("a", t)]).unwrap()).collect();
    for i in 0..tiles.len() {
        for j in i + 1..tiles.len() {
            out.push(TileSet::new([("a", tiles[i]), ("b", tiles[j])]).unwrap());
        }
    }
    out
}
