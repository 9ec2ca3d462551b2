use std::collections::BTreeMap;

use super::{TileSet, TilingCertificate};
use crate::structure::cell_name;

struct Search<'a> {
    s: &'a TileSet,
    m: usize,
    n: usize,
    wrap: bool,
    cells: Vec<usize>,
}

impl Search<'_> {
    /// Checks tile `t` at cell `(i, j)` against every already placed neighbour,
    /// including its own wrap partner on one-wide axes.
    fn fits(&self, i: usize, j: usize, t: usize) -> bool {
        let tile = self.s.tile(t);
        let at = |i: usize, j: usize| self.s.tile(self.cells[j * self.m + i]);
        if i > 0 && at(i - 1, j).right != tile.left {
            return false;
        }
        if j > 0 && at(i, j - 1).top != tile.bottom {
            return false;
        }
        if self.wrap {
            if i == self.m - 1 {
                let first = if self.m == 1 { tile } else { at(0, j) };
                if tile.right != first.left {
                    return false;
                }
            }
            if j == self.n - 1 {
                let first = if self.n == 1 { tile } else { at(i, 0) };
                if tile.top != first.bottom {
                    return false;
                }
            }
        }
        true
    }

    fn run(&mut self, k: usize) -> bool {
        if k == self.cells.len() {
            return true;
        }
        let (i, j) = (k % self.m, k / self.m);
        for t in 0..self.s.len() {
            if self.fits(i, j, t) {
                self.cells[k] = t;
                if self.run(k + 1) {
                    return true;
                }
            }
        }
        false
    }

    fn certificate(&self) -> TilingCertificate {
        let assignment: BTreeMap<String, String> = self
            .cells
            .iter()
            .enumerate()
            .map(|(k, &t)| (cell_name(k % self.m, k / self.m), self.s.name(t).to_string()))
            .collect();
        TilingCertificate { assignment }
    }
}

fn solve(s: &TileSet, m: usize, n: usize, wrap: bool) -> Option<TilingCertificate> {
    if m == 0 || n == 0 {
        return None;
    }
    let mut search = Search { s, m, n, wrap, cells: vec![0; m * n] };
    search.run(0).then(|| search.certificate())
}

/// First tiling of the `m × n` torus in row-major cell order and tile order.
pub fn solve_torus(s: &TileSet, m: usize, n: usize) -> Option<TilingCertificate> {
    solve(s, m, n, true)
}

/// As [`solve_torus`] without the wrap-around edges.
pub fn solve_bounded_grid(s: &TileSet, m: usize, n: usize) -> Option<TilingCertificate> {
    solve(s, m, n, false)
}

/// Torus sizes with `max(m, n) <= bound`, by `m + n` and then `m`.
pub fn periodic_sizes(bound: usize) -> Vec<(usize, usize)> {
    let mut sizes: Vec<(usize, usize)> = (1..=bound).flat_map(|m| (1..=bound).map(move |n| (m, n))).collect();
    sizes.sort_by_key(|&(m, n)| (m + n, m));
    sizes
}

/// The first torus size in [`periodic_sizes`] order that admits a tiling.
pub fn solve_periodic(s: &TileSet, bound: usize) -> Option<(usize, usize, TilingCertificate)> {
    periodic_sizes(bound).into_iter().find_map(|(m, n)| solve_torus(s, m, n).map(|c| (m, n, c)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::{build_finite_grid, build_torus};
    use crate::tiling::Tile;

    fn set(tiles: &[(&str, [u64; 4])]) -> TileSet {
        TileSet::new(tiles.iter().map(|(n, [t, r, b, l])| (*n, Tile::new(*t, *r, *b, *l)))).unwrap()
    }

    #[test]
    fn uniform_tile() {
        let s = set(&[("u", [0, 0, 0, 0])]);
        let c = solve_torus(&s, 1, 1).unwrap();
        assert_eq!(c.assignment, BTreeMap::from([("0_0".to_string(), "u".to_string())]));
        let (m, n, _) = solve_periodic(&s, 3).unwrap();
        assert_eq!((m, n), (1, 1));
    }

    #[test]
    fn horizontal_cycle_mismatch() {
        let s = set(&[("h", [0, 1, 0, 0])]);
        for m in 1..=3 {
            for n in 1..=3 {
                assert!(solve_torus(&s, m, n).is_none());
            }
        }
        assert!(solve_bounded_grid(&s, 1, 2).is_some());
        assert!(solve_bounded_grid(&s, 2, 1).is_none());
    }

    #[test]
    fn alternating_column() {
        let s = set(&[("A", [0, 0, 1, 0]), ("B", [1, 0, 0, 0])]);
        assert!(solve_torus(&s, 1, 1).is_none());
        assert!(solve_torus(&s, 2, 1).is_none());
        let c = solve_torus(&s, 1, 2).unwrap();
        assert_eq!(c.render(1, 2), "B\nA\n");
        let (m, n, p) = solve_periodic(&s, 2).unwrap();
        assert_eq!((m, n), (1, 2));
        assert_eq!(p, c);
    }

    #[test]
    fn vertical_mismatch_up_to_six() {
        let s = set(&[("m", [0, 0, 1, 0])]);
        assert!(solve_periodic(&s, 6).is_none());
    }

    #[test]
    fn certificates_pass_the_edge_checker() {
        let s = set(&[("a", [0, 1, 1, 0]), ("b", [1, 0, 0, 1]), ("c", [1, 1, 0, 1])]);
        for (m, n) in [(1, 1), (2, 1), (2, 2), (3, 2), (2, 3), (4, 4)] {
            if let Some(c) = solve_torus(&s, m, n) {
                c.check(&s, &build_torus(m, n).unwrap()).unwrap();
            }
            if let Some(c) = solve_bounded_grid(&s, m, n) {
                c.check(&s, &build_finite_grid(m, n).unwrap()).unwrap();
            }
        }
    }

    #[test]
    fn first_certificate_is_lexicographically_least() {
        let s = set(&[("a", [0, 0, 0, 0]), ("b", [0, 0, 0, 0])]);
        let c = solve_torus(&s, 2, 2).unwrap();
        assert!(c.assignment.values().all(|t| t == "a"));
    }

    #[test]
    fn size_order() {
        assert_eq!(periodic_sizes(2), [(1, 1), (1, 2), (2, 1), (2, 2)]);
    }
}
