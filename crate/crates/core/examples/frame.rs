use anyhow::Result;
use betweenness::eval::EvalBudget;
use betweenness::frame::{build_frame, check_torus_isomorphism, extract_interpreted_torus, find_torus_isomorphism};
use betweenness::structure::write_structure;

pub fn run_example() -> Result<()> {
    let budget = EvalBudget::default();
    let frame = build_frame(3, 2)?;
    println!("origo {}, ends {} and {}", frame.origo, frame.pe, frame.qe);
    for (name, p) in frame.structure.elements().iter().zip(frame.structure.geometry().unwrap_or(&[])) {
        println!("  {name:>3} at {p}");
    }

    let torus = extract_interpreted_torus(&frame.structure, &budget)?;
    print!("{}", write_structure(&torus));
    let report = check_torus_isomorphism(&torus, 3, 2, &frame.expected_map);
    println!("expected map is an isomorphism: {}", report.ok);
    println!("search finds one too: {}", find_torus_isomorphism(&torus, 3, 2).is_some());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
