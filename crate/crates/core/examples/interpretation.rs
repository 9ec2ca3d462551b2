use anyhow::Result;
use betweenness::eval::{eval_sentence, EvalBudget};
use betweenness::interpret::{parse_interpretation, write_interpretation};
use betweenness::logic::{parse_formula, print_formula};
use betweenness::structure::build_torus;

// Cells with a vertical successor, joined when horizontally adjacent either way.
const TEXT: &str = "\
source E/2
target H/2 V/2
dom(u): E w. V(u,w)
rel E(x,y): H(x,y) | H(y,x)
";

pub fn run_example() -> Result<()> {
    let budget = EvalBudget::default();
    let i = parse_interpretation(TEXT)?;
    print!("{}", write_interpretation(&i));

    let torus = build_torus(3, 2)?;
    let graph = i.induced_structure(&torus, &budget)?;
    println!("induced domain: {:?}", graph.elements());
    println!("induced edges:  {:?}", graph.named_tuples("E"));

    let phi = parse_formula("A x. E y. E(x,y)", i.source())?;
    let translated = i.translate(&phi)?;
    println!("I(phi) = {}", print_formula(&translated));
    println!(
        "B |= I(phi): {}, I(B) |= phi: {}",
        eval_sentence(&torus, &translated, &budget)?,
        eval_sentence(&graph, &phi, &budget)?
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
