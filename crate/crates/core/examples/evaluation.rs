use anyhow::Result;
use betweenness::eval::{eval, eval_sentence, expansion_search, Assignment, EvalBudget};
use betweenness::logic::{parse_formula, parse_formula_with_sets};
use betweenness::structure::{build_torus, load_structure};

pub fn run_example() -> Result<()> {
    let budget = EvalBudget::default();
    let torus = build_torus(3, 2)?;
    let voc = torus.vocabulary();

    let f = parse_formula("A x. E y. H(x,y) & !(x = y)", &voc)?;
    println!("every cell has another right neighbour: {}", eval_sentence(&torus, &f, &budget)?);

    let g = parse_formula_with_sets("E x. X(x) & V(x,y)", &voc, &["X"])?;
    let a = Assignment::new().with("y", "1_1").with_set("X", ["1_0"]);
    println!("1_0 in X is below 1_1: {}", eval(&torus, &g, &a, &budget)?);

    // A two-colouring of the 2x2 torus with no horizontal neighbours sharing a colour.
    let square = load_structure("builtin:torus:2x2")?;
    let voc = square.vocabulary().with_set("R")?;
    let colouring = parse_formula("A x. A y. H(x,y) -> (R(x) -> !R(y)) & (!R(x) -> R(y))", &voc)?;
    match expansion_search(&square, &colouring, &["R"], &budget)? {
        Some(exp) => println!("least colouring: R = {:?}", exp["R"]),
        None => println!("no colouring"),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
