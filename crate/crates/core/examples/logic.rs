use std::collections::BTreeMap;

use anyhow::Result;
use betweenness::logic::{parse_formula, print_formula, Fresh, Vocabulary};

pub fn run_example() -> Result<()> {
    let voc = Vocabulary::new().with_relation("E", 2)?.with_set("P")?;
    let f = parse_formula("A x. P(x) -> E y. E(x,y) & !(y = z)", &voc)?;
    println!("parsed:  {}", print_formula(&f));
    println!("free:    {:?}", f.free_variables().fo);
    println!("depth:   {}", f.quantifier_depth());

    // Replacing z by y must rename the bound y.
    let mut fresh = Fresh::avoiding([&f]);
    let g = f.substitute(&BTreeMap::from([("z".to_string(), "y".to_string())]), &mut fresh);
    println!("z := y:  {}", print_formula(&g));
    assert_eq!(parse_formula(&print_formula(&g), &voc)?, g);

    let w = parse_formula("Ew X. A x. X(x) -> P(x)", &voc)?;
    println!("weak:    {} (weak quantifier: {})", print_formula(&w), w.has_weak_quantifier());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
