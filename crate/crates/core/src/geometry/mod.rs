//! Exact rational geometry: points of ℚⁿ and the betweenness predicates that every
//! geometric structure in this crate is built from.
//!
//! Betweenness is decided through the affine characterisation: `t` lies on the closed
//! segment `[s, u]` iff `t - s = λ·(u - s)` for some `λ ∈ [0, 1]`. For points of ℝⁿ this
//! coincides with metric additivity `d(s,u) = d(s,t) + d(t,u)`, and it needs no square
//! roots, so every predicate here is decided exactly.

mod rational;

use std::fmt;

use thiserror::Error;

pub use rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("malformed rational `{0}`")]
    BadRational(String),
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("points must have at least one coordinate")]
    EmptyPoint,
    #[error("operation needs dimension {expected}, got {found}")]
    WrongDimension { expected: usize, found: usize },
    #[error("a line needs two distinct anchor points")]
    DegenerateLine,
    #[error("simplex vertices are affinely dependent")]
    AffinelyDependent,
    #[error("a simplex in dimension {dim} has at most {max} vertices, got {found}")]
    TooManyVertices { dim: usize, max: usize, found: usize },
}

/// A point of ℚⁿ.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point {
    coords: Vec<Rational>,
}

impl Point {
    pub fn new(coords: Vec<Rational>) -> Result<Self, GeometryError> {
        if coords.is_empty() {
            return Err(GeometryError::EmptyPoint);
        }
        Ok(Point { coords })
    }

    /// Convenience constructor from integer coordinates.
    pub fn from_ints(coords: &[i64]) -> Self {
        assert!(!coords.is_empty(), "points must have at least one coordinate");
        Point { coords: coords.iter().map(|&c| Rational::from(c)).collect() }
    }

    /// Planar point with rational coordinates given as `(numer, denom)` pairs.
    pub fn xy(x: (i64, i64), y: (i64, i64)) -> Result<Self, GeometryError> {
        Point::new(vec![Rational::new(x.0, x.1)?, Rational::new(y.0, y.1)?])
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    fn delta(&self, from: &Point) -> Vec<Rational> {
        self.coords.iter().zip(&from.coords).map(|(a, b)| a - b).collect()
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A line of ℚⁿ given by two distinct anchor points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineSpec {
    a: Point,
    b: Point,
}

impl LineSpec {
    pub fn new(a: Point, b: Point) -> Result<Self, GeometryError> {
        same_dim(&[&a, &b])?;
        if a == b {
            return Err(GeometryError::DegenerateLine);
        }
        Ok(LineSpec { a, b })
    }

    pub fn anchors(&self) -> (&Point, &Point) {
        (&self.a, &self.b)
    }

    /// True when `p` lies on this line.
    pub fn contains(&self, p: &Point) -> Result<bool, GeometryError> {
        collinear_points(&self.a, &self.b, p)
    }

    /// Two specs denote the same line iff each anchor of one is collinear with the
    /// anchors of the other.
    pub fn same_line(&self, other: &LineSpec) -> Result<bool, GeometryError> {
        Ok(self.contains(&other.a)?
            && self.contains(&other.b)?
            && other.contains(&self.a)?
            && other.contains(&self.b)?)
    }
}

/// Outcome of intersecting two planar lines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LineIntersection {
    Point(Point),
    /// Distinct parallel lines.
    Parallel,
    /// Both specs span the same line.
    Identical,
}

impl LineIntersection {
    pub fn point(&self) -> Option<&Point> {
        match self {
            LineIntersection::Point(p) => Some(p),
            _ => None,
        }
    }
}

fn same_dim(points: &[&Point]) -> Result<usize, GeometryError> {
    let d = points[0].dim();
    for p in &points[1..] {
        if p.dim() != d {
            return Err(GeometryError::DimensionMismatch(d, p.dim()));
        }
    }
    Ok(d)
}

/// `t` lies on the closed segment `[s, u]`.
pub fn between(s: &Point, t: &Point, u: &Point) -> Result<bool, GeometryError> {
    same_dim(&[s, t, u])?;
    if s == u {
        return Ok(t == s);
    }
    let dir = u.delta(s);
    let off = t.delta(s);
    // The first nonzero direction coordinate fixes the only candidate λ.
    let pivot = dir.iter().position(|c| !c.is_zero()).expect("s != u");
    let lambda = &off[pivot] / &dir[pivot];
    if lambda.is_negative() || lambda > Rational::one() {
        return Ok(false);
    }
    Ok(dir.iter().zip(&off).all(|(d, o)| &(&lambda * d) == o))
}

/// Strict betweenness: `between(s,t,u)` with `s ≠ t` and `t ≠ u`.
pub fn strictly_between(s: &Point, t: &Point, u: &Point) -> Result<bool, GeometryError> {
    Ok(between(s, t, u)? && s != t && t != u)
}

/// `β(x,y,z) ∨ β(x,z,y) ∨ β(y,x,z)`.
pub fn collinear_points(x: &Point, y: &Point, z: &Point) -> Result<bool, GeometryError> {
    Ok(between(x, y, z)? || between(x, z, y)? || between(y, x, z)?)
}

fn cross2(a: &[Rational], b: &[Rational]) -> Rational {
    &(&a[0] * &b[1]) - &(&a[1] * &b[0])
}

/// Intersects two lines of the plane exactly.
pub fn intersect_lines(l1: &LineSpec, l2: &LineSpec) -> Result<LineIntersection, GeometryError> {
    let dim = same_dim(&[&l1.a, &l2.a])?;
    if dim != 2 {
        return Err(GeometryError::WrongDimension { expected: 2, found: dim });
    }
    let d1 = l1.b.delta(&l1.a);
    let d2 = l2.b.delta(&l2.a);
    let w = l2.a.delta(&l1.a);
    let det = cross2(&d1, &d2);
    if det.is_zero() {
        return Ok(if cross2(&d1, &w).is_zero() { LineIntersection::Identical } else { LineIntersection::Parallel });
    }
    let s = &cross2(&w, &d2) / &det;
    let coords = l1.a.coords.iter().zip(&d1).map(|(a, d)| a + &(&s * d)).collect();
    Ok(LineIntersection::Point(Point { coords }))
}

/// Solves `A·λ = b` exactly for an `rows × cols` system by Gauss–Jordan elimination.
///
/// Returns `Err(AffinelyDependent)` if the columns are linearly dependent and
/// `Ok(None)` if the system is inconsistent.
#[allow(clippy::needless_range_loop)]
fn solve_full_column_rank(
    mut a: Vec<Vec<Rational>>,
    mut b: Vec<Rational>,
    cols: usize,
) -> Result<Option<Vec<Rational>>, GeometryError> {
    let rows = a.len();
    let mut pivot_row = 0;
    for col in 0..cols {
        let Some(found) = (pivot_row..rows).find(|&r| !a[r][col].is_zero()) else {
            return Err(GeometryError::AffinelyDependent);
        };
        a.swap(pivot_row, found);
        b.swap(pivot_row, found);
        let p = a[pivot_row][col].clone();
        for c in 0..cols {
            a[pivot_row][c] = &a[pivot_row][c] / &p;
        }
        b[pivot_row] = &b[pivot_row] / &p;
        for r in 0..rows {
            if r != pivot_row && !a[r][col].is_zero() {
                let factor = a[r][col].clone();
                for c in 0..cols {
                    let sub = &factor * &a[pivot_row][c];
                    a[r][c] = &a[r][c] - &sub;
                }
                let sub = &factor * &b[pivot_row];
                b[r] = &b[r] - &sub;
            }
        }
        pivot_row += 1;
    }
    if b[pivot_row..].iter().any(|v| !v.is_zero()) {
        return Ok(None);
    }
    Ok(Some(b[..cols].to_vec()))
}

/// Barycentric coordinates of `z` with respect to affinely independent `vertices`,
/// or `None` when `z` is outside their affine hull.
pub fn barycentric(vertices: &[Point], z: &Point) -> Result<Option<Vec<Rational>>, GeometryError> {
    let Some(v0) = vertices.first() else {
        return Err(GeometryError::AffinelyDependent);
    };
    let mut all: Vec<&Point> = vertices.iter().collect();
    all.push(z);
    let n = same_dim(&all)?;
    let k = vertices.len() - 1;
    if k > n {
        return Err(GeometryError::TooManyVertices { dim: n, max: n + 1, found: vertices.len() });
    }
    let edges: Vec<Vec<Rational>> = vertices[1..].iter().map(|v| v.delta(v0)).collect();
    let a: Vec<Vec<Rational>> = (0..n).map(|r| edges.iter().map(|e| e[r].clone()).collect()).collect();
    let Some(lambdas) = solve_full_column_rank(a, z.delta(v0), k)? else {
        return Ok(None);
    };
    let rest = lambdas.iter().fold(Rational::one(), |acc, l| &acc - l);
    let mut out = Vec::with_capacity(k + 1);
    out.push(rest);
    out.extend(lambdas);
    Ok(Some(out))
}

/// `z` lies strictly inside the simplex spanned by `vertices` (all barycentric
/// coordinates positive).
pub fn in_open_simplex(vertices: &[Point], z: &Point) -> Result<bool, GeometryError> {
    Ok(barycentric(vertices, z)?.is_some_and(|l| l.iter().all(Rational::is_positive)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: i64, y: i64) -> Point {
        Point::from_ints(&[x, y])
    }

    fn q(x: (i64, i64), y: (i64, i64)) -> Point {
        Point::xy(x, y).unwrap()
    }

    #[test]
    fn between_examples() {
        assert!(between(&p(0, 0), &p(1, 1), &p(2, 2)).unwrap());
        assert!(between(&p(0, 0), &p(0, 0), &p(5, 7)).unwrap());
        assert!(!between(&p(0, 0), &p(3, 0), &p(2, 0)).unwrap());
        assert!(between(&p(3, 3), &p(3, 3), &p(3, 3)).unwrap());
        assert!(!between(&p(3, 3), &p(1, 3), &p(3, 3)).unwrap());
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        let e = between(&p(0, 0), &Point::from_ints(&[1, 1, 1]), &p(2, 2));
        assert_eq!(e, Err(GeometryError::DimensionMismatch(2, 3)));
    }

    #[test]
    fn strict_betweenness_examples() {
        assert!(strictly_between(&p(0, 0), &p(1, 1), &p(2, 2)).unwrap());
        assert!(!strictly_between(&p(0, 0), &p(0, 0), &p(2, 2)).unwrap());
        assert!(!strictly_between(&p(0, 0), &p(2, 2), &p(2, 2)).unwrap());
    }

    #[test]
    fn collinear_examples() {
        assert!(collinear_points(&p(0, 0), &p(1, 1), &p(2, 2)).unwrap());
        assert!(!collinear_points(&p(0, 0), &p(1, 0), &p(0, 1)).unwrap());
        assert!(collinear_points(&p(0, 0), &p(2, 4), &p(1, 2)).unwrap());
    }

    #[test]
    fn line_intersection_examples() {
        // 2x + y = 2 and x + 2y = 2 meet at (2/3, 2/3).
        let l1 = LineSpec::new(p(1, 0), p(0, 2)).unwrap();
        let l2 = LineSpec::new(p(0, 1), p(2, 0)).unwrap();
        assert_eq!(intersect_lines(&l1, &l2).unwrap(), LineIntersection::Point(q((2, 3), (2, 3))));

        let h1 = LineSpec::new(p(0, 0), p(1, 0)).unwrap();
        let h2 = LineSpec::new(p(0, 1), p(1, 1)).unwrap();
        assert_eq!(intersect_lines(&h1, &h2).unwrap(), LineIntersection::Parallel);

        let d1 = LineSpec::new(p(0, 0), p(2, 2)).unwrap();
        let d2 = LineSpec::new(p(1, 1), p(3, 3)).unwrap();
        assert_eq!(intersect_lines(&d1, &d2).unwrap(), LineIntersection::Identical);
        assert!(d1.same_line(&d2).unwrap());
    }

    #[test]
    fn line_intersection_requires_the_plane() {
        let a = LineSpec::new(Point::from_ints(&[0, 0, 0]), Point::from_ints(&[1, 0, 0])).unwrap();
        let b = LineSpec::new(Point::from_ints(&[0, 1, 0]), Point::from_ints(&[1, 1, 1])).unwrap();
        assert!(matches!(intersect_lines(&a, &b), Err(GeometryError::WrongDimension { .. })));
        assert_eq!(LineSpec::new(p(1, 1), p(1, 1)), Err(GeometryError::DegenerateLine));
    }

    #[test]
    fn open_simplex_examples() {
        let tri = [p(0, 0), p(1, 0), p(0, 1)];
        assert!(in_open_simplex(&tri, &q((1, 3), (1, 3))).unwrap());
        assert!(!in_open_simplex(&tri, &q((1, 2), (0, 1))).unwrap());
        assert!(!in_open_simplex(&tri, &p(1, 1)).unwrap());
        for v in &tri {
            assert!(!in_open_simplex(&tri, v).unwrap());
        }
    }

    #[test]
    fn open_simplex_lower_dimensional() {
        // A segment in the plane: interior points only on the open segment.
        let seg = [p(0, 0), p(2, 2)];
        assert!(in_open_simplex(&seg, &p(1, 1)).unwrap());
        assert!(!in_open_simplex(&seg, &p(1, 0)).unwrap());
        // A triangle embedded in 3-space.
        let tri = [Point::from_ints(&[0, 0, 1]), Point::from_ints(&[3, 0, 1]), Point::from_ints(&[0, 3, 1])];
        assert!(in_open_simplex(&tri, &Point::from_ints(&[1, 1, 1])).unwrap());
        assert!(!in_open_simplex(&tri, &Point::from_ints(&[1, 1, 0])).unwrap());
    }

    #[test]
    fn dependent_vertices_are_rejected() {
        let flat = [p(0, 0), p(1, 1), p(2, 2)];
        assert_eq!(in_open_simplex(&flat, &p(1, 1)), Err(GeometryError::AffinelyDependent));
    }
}
