use anyhow::Result;
use betweenness::eval::{eval, Assignment, EvalBudget};
use betweenness::formulas::{make_collinear, make_finiteness_sentence, make_opentriangle, weak_to_strong};
use betweenness::geometry::Point;
use betweenness::logic::print_formula;
use betweenness::structure::geometric_structure;

pub fn run_example() -> Result<()> {
    let budget = EvalBudget::default();
    let pts = [(0, 0), (2, 0), (0, 2), (1, 0), (1, 1), (0, 1), (4, 0)];
    let plane = geometric_structure(pts.iter().map(|&(x, y)| (format!("p{x}{y}"), Point::from_ints(&[x, y]))))?;

    let col = make_collinear();
    println!("collinear(x,y,z) := {}", print_formula(&col));
    for (x, y, z) in [("p00", "p20", "p40"), ("p00", "p20", "p11")] {
        let a = Assignment::new().with("x", x).with("y", y).with("z", z);
        println!("  collinear({x}, {y}, {z}) = {}", eval(&plane, &col, &a, &budget)?);
    }

    // The open-triangle formula needs its witnesses present in the point set.
    let closed = [
        (0, 0, 1),
        (4, 0, 1),
        (0, 4, 1),
        (1, 1, 1),
        (4, 0, 3),
        (0, 4, 3),
        (2, 2, 1),
        (0, 2, 1),
        (4, 4, 3),
        (2, 0, 1),
        (4, 4, 1),
        (3, 1, 1),
    ];
    let named = closed
        .iter()
        .enumerate()
        .map(|(i, &(x, y, d))| -> Result<_> { Ok((format!("q{i}"), Point::xy((x, d), (y, d))?)) });
    let witnessed = geometric_structure(named.collect::<Result<Vec<_>>>()?)?;
    let tri = make_opentriangle(2)?;
    let a = Assignment::new().with("x0", "q0").with("x1", "q1").with("x2", "q2");
    for (z, label) in [("q3", "(1, 1)"), ("q11", "(3, 1)"), ("q6", "(2, 2)")] {
        println!("  {label} inside (0,0) (4,0) (0,4): {}", eval(&witnessed, &tri, &a.clone().with("z", z), &budget)?);
    }

    let fin = make_finiteness_sentence(2, "P")?;
    println!("finiteness sentence has {} nodes", fin.size());
    let strong = weak_to_strong(&fin.clone().not().not(), 2)?;
    println!("weak quantifiers left after weak_to_strong: {}", strong.has_weak_quantifier());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
