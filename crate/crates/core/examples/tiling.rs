use anyhow::Result;
use betweenness::eval::{expansion_search, EvalBudget};
use betweenness::structure::build_torus;
use betweenness::tiling::{make_tiling_sentence, parse_tileset, solve_bounded_grid, solve_periodic, solve_torus};

const TILES: &str = "\
# stripes that only close up vertically on even heights
tile A 0 0 1 0
tile B 1 0 0 0
";

pub fn run_example() -> Result<()> {
    let s = parse_tileset(TILES)?;
    println!("torus 2x1: {}", solve_torus(&s, 2, 1).is_some());
    println!("grid 2x1:  {}", solve_bounded_grid(&s, 2, 1).is_some());
    if let Some((m, n, cert)) = solve_periodic(&s, 4) {
        print!("first torus {m}x{n}:\n{}", cert.render(m, n));
        cert.check(&s, &build_torus(m, n)?).map_err(anyhow::Error::msg)?;
    }

    let torus = build_torus(2, 2)?;
    let preds = s.predicate_names();
    let names: Vec<&str> = preds.iter().map(String::as_str).collect();
    let found = expansion_search(&torus, &make_tiling_sentence(&s), &names, &EvalBudget::default())?;
    println!("tiling sentence on the 2x2 torus: {:?}", found);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
