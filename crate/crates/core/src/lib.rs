pub mod eval;
pub mod formulas;
pub mod frame;
pub mod geometry;
pub mod interpret;
pub mod logic;
pub mod structure;
pub mod tiling;
