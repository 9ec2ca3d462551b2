use anyhow::Result;
use betweenness::eval::EvalBudget;
use betweenness::formulas::FrameKind;
use betweenness::frame::{make_reduction_sentence, reduce_end_to_end};
use betweenness::tiling::{parse_tileset, Tile, TileSet};

pub fn run_example() -> Result<()> {
    let budget = EvalBudget::default();
    let uniform = TileSet::new([("u", Tile::new(0, 0, 0, 0))])?;
    let alternating = parse_tileset("tile A 0 0 1 0\ntile B 1 0 0 0\n")?;

    for (label, s) in [("uniform", &uniform), ("alternating", &alternating)] {
        let sentence = make_reduction_sentence(s, FrameKind::Finite);
        println!("{label}: reduction sentence has {} nodes", sentence.size());
        let report = reduce_end_to_end(s, 2, &budget)?;
        print!("{}", report.render());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
