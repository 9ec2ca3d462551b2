mod geometry_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/geometry.rs"));
}

#[test]
fn geometry_example_runs() {
    geometry_example::run_example().expect("geometry example should run");
}

mod logic_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/logic.rs"));
}

#[test]
fn logic_example_runs() {
    logic_example::run_example().expect("logic example should run");
}

mod evaluation_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/evaluation.rs"));
}

#[test]
fn evaluation_example_runs() {
    evaluation_example::run_example().expect("evaluation example should run");
}

mod formulas_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/formulas.rs"));
}

#[test]
fn formulas_example_runs() {
    formulas_example::run_example().expect("formulas example should run");
}

mod interpretation_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/interpretation.rs"));
}

#[test]
fn interpretation_example_runs() {
    interpretation_example::run_example().expect("interpretation example should run");
}

mod tiling_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/tiling.rs"));
}

#[test]
fn tiling_example_runs() {
    tiling_example::run_example().expect("tiling example should run");
}

mod frame_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/frame.rs"));
}

#[test]
fn frame_example_runs() {
    frame_example::run_example().expect("frame example should run");
}

mod reduction_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/reduction.rs"));
}

#[test]
fn reduction_example_runs() {
    reduction_example::run_example().expect("reduction example should run");
}
