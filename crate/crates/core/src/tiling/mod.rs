//! Wang tiles: tile sets, the sentences stating tilability, and direct
//! backtracking solvers that never touch the formula machinery.

mod solve;

use std::collections::BTreeMap;
use std::fmt::Write as _;

use thiserror::Error;

use crate::logic::Formula;
use crate::structure::FinStructure;

pub use solve::{periodic_sizes, solve_bounded_grid, solve_periodic, solve_torus};

#[derive(Debug, Error)]
pub enum TilingError {
    #[error("a tile set needs at least one tile")]
    Empty,
    #[error("duplicate tile `{0}`")]
    DuplicateTile(String),
    #[error("unknown tile `{0}`")]
    UnknownTile(String),
    #[error("bad tile name `{0}`")]
    BadName(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
}

/// Edge colours in the order top, right, bottom, left.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Tile {
    pub top: u64,
    pub right: u64,
    pub bottom: u64,
    pub left: u64,
}

impl Tile {
    pub fn new(top: u64, right: u64, bottom: u64, left: u64) -> Self {
        Tile { top, right, bottom, left }
    }
}

/// Tiles in declaration order, which is also the solvers' search order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TileSet {
    tiles: Vec<(String, Tile)>,
}

impl TileSet {
    pub fn new<S: Into<String>>(tiles: impl IntoIterator<Item = (S, Tile)>) -> Result<Self, TilingError> {
        let mut out: Vec<(String, Tile)> = Vec::new();
        for (name, tile) in tiles {
            let name = name.into();
            if name.is_empty() || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
                return Err(TilingError::BadName(name));
            }
            if out.iter().any(|(n, _)| *n == name) {
                return Err(TilingError::DuplicateTile(name));
            }
            out.push((name, tile));
        }
        if out.is_empty() {
            return Err(TilingError::Empty);
        }
        Ok(TileSet { tiles: out })
    }

    pub fn len(&self) -> usize {
        self.tiles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tiles.is_empty()
    }

    pub fn tiles(&self) -> &[(String, Tile)] {
        &self.tiles
    }

    pub fn name(&self, i: usize) -> &str {
        &self.tiles[i].0
    }

    pub fn tile(&self, i: usize) -> Tile {
        self.tiles[i].1
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.tiles.iter().position(|(n, _)| n == name)
    }

    /// Predicate symbols `P_<tile>` in tile order.
    pub fn predicate_names(&self) -> Vec<String> {
        self.tiles.iter().map(|(n, _)| pred_name(n)).collect()
    }

    /// The same tiles under new names.
    pub fn renamed(&self, rename: impl Fn(&str) -> String) -> Result<Self, TilingError> {
        TileSet::new(self.tiles.iter().map(|(n, t)| (rename(n), *t)))
    }
}

pub fn pred_name(tile: &str) -> String {
    format!("P_{tile}")
}

pub fn parse_tileset(text: &str) -> Result<TileSet, TilingError> {
    let mut tiles = Vec::new();
    for (no, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |msg: String| TilingError::Parse { line: no + 1, msg };
        let words: Vec<&str> = line.split_whitespace().collect();
        let ["tile", name, cs @ ..] = &words[..] else { return Err(err(format!("expected `tile`, got `{line}`"))) };
        let [t, r, b, l] = cs[..] else {
            return Err(err("usage: tile <name> <top> <right> <bottom> <left>".into()));
        };
        let colour = |c: &str| c.parse::<u64>().map_err(|_| err(format!("bad colour `{c}`")));
        tiles.push((name.to_string(), Tile::new(colour(t)?, colour(r)?, colour(b)?, colour(l)?)));
    }
    TileSet::new(tiles)
}

pub fn write_tileset(s: &TileSet) -> String {
    let mut out = String::new();
    for (name, t) in s.tiles() {
        let _ = writeln!(out, "tile {name} {} {} {} {}", t.top, t.right, t.bottom, t.left);
    }
    out
}

pub fn load_tileset(path: &str) -> Result<TileSet, TilingError> {
    let text = std::fs::read_to_string(path).map_err(|source| TilingError::Io { path: path.to_string(), source })?;
    parse_tileset(&text)
}

fn or_else_false(items: Vec<Formula>, var: &str) -> Formula {
    Formula::disj(items).unwrap_or_else(|| Formula::falsity(var))
}

fn matching_pairs(s: &TileSet, rel: &str, ok: impl Fn(Tile, Tile) -> bool) -> Formula {
    let mut pairs = Vec::new();
    for (a, ta) in s.tiles() {
        for (b, tb) in s.tiles() {
            if ok(*ta, *tb) {
                pairs.push(Formula::pred(&pred_name(a), "x").and(Formula::pred(&pred_name(b), "y")));
            }
        }
    }
    Formula::forall_many(&["x", "y"], Formula::rel(rel, &["x", "y"]).implies(or_else_false(pairs, "x")))
}

/// Every element carries exactly one tile predicate, and `H`/`V` neighbours match
/// right-to-left and top-to-bottom.
pub fn make_tiling_sentence(s: &TileSet) -> Formula {
    let names = s.predicate_names();
    let exactly_one = names.iter().map(|p| {
        let others = names.iter().filter(|q| *q != p).map(|q| Formula::pred(q, "x").not());
        Formula::conj(std::iter::once(Formula::pred(p, "x")).chain(others)).expect("nonempty")
    });
    let one = Formula::forall("x", Formula::disj(exactly_one).expect("tile sets are nonempty"));
    let h = matching_pairs(s, "H", |a, b| a.right == b.left);
    let v = matching_pairs(s, "V", |a, b| a.top == b.bottom);
    one.and(h).and(v)
}

/// The tiling sentence plus: every cell of the `R`-column sees a later cell
/// carrying `tile`.
pub fn make_recurrent_sentence(tile: &str, s: &TileSet) -> Result<Formula, TilingError> {
    if s.index_of(tile).is_none() {
        return Err(TilingError::UnknownTile(tile.to_string()));
    }
    let in_column = Formula::exists("y", Formula::rel("R", &["x", "y"]).or(Formula::rel("R", &["y", "x"])));
    let recurs = Formula::exists("y", Formula::rel("R", &["x", "y"]).and(Formula::pred(&pred_name(tile), "y")));
    Ok(make_tiling_sentence(s).and(Formula::forall("x", in_column.implies(recurs))))
}

/// A tile per element of a structure, by name.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TilingCertificate {
    pub assignment: BTreeMap<String, String>,
}

impl TilingCertificate {
    /// Rows from top to bottom, for grid and torus structures with `i_j` names.
    pub fn render(&self, m: usize, n: usize) -> String {
        let mut out = String::new();
        for j in (0..n).rev() {
            let row: Vec<&str> = (0..m)
                .map(|i| self.assignment.get(&crate::structure::cell_name(i, j)).map_or("?", String::as_str))
                .collect();
            let _ = writeln!(out, "{}", row.join(" "));
        }
        out
    }

    /// Walks every `H` and `V` pair of `structure`; reports the first mismatch.
    pub fn check(&self, s: &TileSet, structure: &FinStructure) -> Result<(), String> {
        let tile_of = |e: &str| -> Result<Tile, String> {
            let name = self.assignment.get(e).ok_or_else(|| format!("element `{e}` has no tile"))?;
            s.index_of(name).map(|i| s.tile(i)).ok_or_else(|| format!("unknown tile `{name}`"))
        };
        for e in structure.elements() {
            tile_of(e)?;
        }
        if let Some(extra) = self.assignment.keys().find(|k| structure.index_of(k).is_none()) {
            return Err(format!("`{extra}` is not an element"));
        }
        for (rel, ok) in [
            ("H", (|a: Tile, b: Tile| a.right == b.left) as fn(Tile, Tile) -> bool),
            ("V", |a: Tile, b: Tile| a.top == b.bottom),
        ] {
            for pair in structure.named_tuples(rel) {
                let (a, b) = (tile_of(&pair[0])?, tile_of(&pair[1])?);
                if !ok(a, b) {
                    return Err(format!("{rel}({}, {}) joins mismatched edges", pair[0], pair[1]));
                }
            }
        }
        Ok(())
    }
}
