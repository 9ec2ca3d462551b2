use anyhow::Result;
use betweenness::geometry::{barycentric, between, in_open_simplex, intersect_lines, LineSpec, Point, Rational};

pub fn run_example() -> Result<()> {
    let s = Point::from_ints(&[0, 0]);
    let u = Point::from_ints(&[4, 2]);
    let mid = Point::new(vec![Rational::from_integer(2), Rational::one()])?;
    println!("beta({s}, {mid}, {u}) = {}", between(&s, &mid, &u)?);
    println!("beta({s}, {u}, {mid}) = {}", between(&s, &u, &mid)?);

    let a = LineSpec::new(Point::from_ints(&[1, 0]), Point::from_ints(&[0, 3]))?;
    let b = LineSpec::new(Point::from_ints(&[0, 1]), Point::from_ints(&[2, 0]))?;
    if let Some(p) = intersect_lines(&a, &b)?.point() {
        println!("lines meet at {p}");
    }

    let triangle = [Point::from_ints(&[0, 0]), Point::from_ints(&[3, 0]), Point::from_ints(&[0, 3])];
    let z = Point::from_ints(&[1, 1]);
    let weights = barycentric(&triangle, &z)?.expect("triangle is not degenerate");
    let shown: Vec<String> = weights.iter().map(|w| w.to_string()).collect();
    println!("barycentric({z}) = [{}], inside = {}", shown.join(", "), in_open_simplex(&triangle, &z)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
