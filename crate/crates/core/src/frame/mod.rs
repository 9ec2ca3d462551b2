//! Finite frames in the rational plane, the tori they interpret, and the
//! end-to-end check that the logical tiling reduction agrees with the solver.

mod reduce;

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::eval::{EvalBudget, EvalError};
use crate::formulas::FrameKind;
use crate::geometry::{intersect_lines, GeometryError, LineSpec, Point};
use crate::interpret::{Interpretation, InterpretationError};
use crate::structure::{build_torus, cell_name, geometric_structure, FinStructure, StructureError};

pub use reduce::{make_reduction_sentence, reduce_end_to_end, ReductionReport, SizeOutcome};

#[derive(Debug, Error)]
pub enum FrameError {
    #[error("frame sides must be positive, got {0}x{1}")]
    BadSize(usize, usize),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error(transparent)]
    Interpretation(#[from] InterpretationError),
    #[error(transparent)]
    Eval(#[from] EvalError),
}

/// An `m × n` frame: the axis sequences `P` and `Q` with the interior points
/// where their connecting lines cross.
#[derive(Debug, Clone, PartialEq)]
pub struct FrameBundle {
    pub m: usize,
    pub n: usize,
    /// Geometric structure carrying the predicates `P` and `Q`.
    pub structure: FinStructure,
    pub p: BTreeSet<String>,
    pub q: BTreeSet<String>,
    pub origo: String,
    pub pe: String,
    pub qe: String,
    /// Torus cell `(i, j)` to the frame point meant to represent it.
    pub expected_map: BTreeMap<(usize, usize), String>,
}

/// Builds the frame with `P` on the x-axis up to `(m, 0)` and `Q` on the y-axis
/// up to `(0, n)`. Cell `(i, j)` is the crossing of the line from `(i, 0)` to
/// `(0, n)` with the line from `(0, j)` to `(m, 0)`, named `i_j`.
pub fn build_frame(m: usize, n: usize) -> Result<FrameBundle, FrameError> {
    if m == 0 || n == 0 {
        return Err(FrameError::BadSize(m, n));
    }
    let int = |v: usize| i64::try_from(v).expect("frame side fits in i64");
    let pe_pt = Point::from_ints(&[int(m), 0]);
    let qe_pt = Point::from_ints(&[0, int(n)]);
    let mut points = Vec::with_capacity(m * n + 2);
    let mut expected_map = BTreeMap::new();
    for j in 0..n {
        for i in 0..m {
            let pt = if i == 0 || j == 0 {
                Point::from_ints(&[int(i), int(j)])
            } else {
                let down = LineSpec::new(Point::from_ints(&[int(i), 0]), qe_pt.clone())?;
                let across = LineSpec::new(Point::from_ints(&[0, int(j)]), pe_pt.clone())?;
                intersect_lines(&down, &across)?.point().expect("connecting lines cross").clone()
            };
            let name = cell_name(i, j);
            expected_map.insert((i, j), name.clone());
            points.push((name, pt));
        }
    }
    points.push(("pe".to_string(), pe_pt));
    points.push(("qe".to_string(), qe_pt));

    let p: BTreeSet<String> = (0..m).map(|i| cell_name(i, 0)).chain(["pe".to_string()]).collect();
    let q: BTreeSet<String> = (0..n).map(|j| cell_name(0, j)).chain(["qe".to_string()]).collect();
    let mut structure = geometric_structure(points)?;
    structure.add_predicate("P", &p)?;
    structure.add_predicate("Q", &q)?;
    Ok(FrameBundle { m, n, structure, p, q, origo: cell_name(0, 0), pe: "pe".into(), qe: "qe".into(), expected_map })
}

/// The structure interpreted in a frame by the finite frame formulas.
pub fn extract_interpreted_torus(s: &FinStructure, budget: &EvalBudget) -> Result<FinStructure, FrameError> {
    Ok(Interpretation::frame(FrameKind::Finite).induced_structure(s, budget)?)
}

/// Outcome of an isomorphism check; `diagnostic` names the first failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoReport {
    pub ok: bool,
    pub diagnostic: Option<String>,
}

impl IsoReport {
    fn fail(msg: String) -> Self {
        IsoReport { ok: false, diagnostic: Some(msg) }
    }
}

/// Checks that `map` is a bijection from the cells of the `m × n` torus onto
/// the elements of `extracted` that carries `H` and `V` exactly.
pub fn check_torus_isomorphism(
    extracted: &FinStructure,
    m: usize,
    n: usize,
    map: &BTreeMap<(usize, usize), String>,
) -> IsoReport {
    let Ok(torus) = build_torus(m, n) else {
        return IsoReport::fail(format!("no {m}x{n} torus"));
    };
    let mut image = vec![usize::MAX; m * n];
    let mut hit = BTreeSet::new();
    for j in 0..n {
        for i in 0..m {
            let Some(name) = map.get(&(i, j)) else {
                return IsoReport::fail(format!("cell ({i},{j}) is not mapped"));
            };
            let Some(e) = extracted.index_of(name) else {
                return IsoReport::fail(format!("cell ({i},{j}) maps to `{name}`, which is not an element"));
            };
            if !hit.insert(e) {
                return IsoReport::fail(format!("`{name}` is the image of two cells"));
            }
            image[j * m + i] = e;
        }
    }
    if let Some(k) = map.keys().find(|&&(i, j)| i >= m || j >= n) {
        return IsoReport::fail(format!("cell {k:?} lies outside the {m}x{n} torus"));
    }
    if hit.len() != extracted.len() {
        let missed = (0..extracted.len()).find(|e| !hit.contains(e)).expect("some element is missed");
        return IsoReport::fail(format!("`{}` is not the image of any cell", extracted.name(missed)));
    }
    for rel in ["H", "V"] {
        for a in 0..m * n {
            for b in 0..m * n {
                let want = torus.holds(rel, &[a, b]);
                let got = extracted.holds(rel, &[image[a], image[b]]);
                if want != got {
                    let (x, y) = (extracted.name(image[a]), extracted.name(image[b]));
                    let cells = (torus.name(a), torus.name(b));
                    return IsoReport::fail(if want {
                        format!("{rel}({}, {}) holds in the torus but {rel}({x}, {y}) is missing", cells.0, cells.1)
                    } else {
                        format!("{rel}({x}, {y}) holds but {rel}({}, {}) is not a torus edge", cells.0, cells.1)
                    });
                }
            }
        }
    }
    IsoReport { ok: true, diagnostic: None }
}

/// The map sending cell `(i, j)` to the element named `i_j`.
pub fn name_map(m: usize, n: usize) -> BTreeMap<(usize, usize), String> {
    (0..n).flat_map(|j| (0..m).map(move |i| ((i, j), cell_name(i, j)))).collect()
}

fn successor(s: &FinStructure, rel: &str, from: usize) -> Option<usize> {
    let mut it = (0..s.len()).filter(|&b| s.holds(rel, &[from, b]));
    let first = it.next()?;
    it.next().is_none().then_some(first)
}

/// Searches for an isomorphism from the `m × n` torus. Once the image of
/// `(0, 0)` is fixed the successors determine the rest, so trying every
/// element as that image is exhaustive.
pub fn find_torus_isomorphism(
    extracted: &FinStructure,
    m: usize,
    n: usize,
) -> Option<BTreeMap<(usize, usize), String>> {
    if extracted.len() != m * n {
        return None;
    }
    'start: for origin in 0..extracted.len() {
        let mut map = BTreeMap::new();
        let mut row = origin;
        for j in 0..n {
            let mut cur = row;
            for i in 0..m {
                map.insert((i, j), extracted.name(cur).to_string());
                if i + 1 < m {
                    let Some(next) = successor(extracted, "H", cur) else { continue 'start };
                    cur = next;
                }
            }
            if j + 1 < n {
                let Some(next) = successor(extracted, "V", row) else { continue 'start };
                row = next;
            }
        }
        if check_torus_isomorphism(extracted, m, n, &map).ok {
            return Some(map);
        }
    }
    None
}
