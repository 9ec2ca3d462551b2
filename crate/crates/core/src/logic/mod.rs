//! Formulas of first-order and (weak) monadic second-order logic over relational
//! vocabularies, with a text parser and a canonical printer.
//!
//! Grammar, loosest binding first:
//!
//! ```text
//! formula  := disj ( "->" formula )?
//! disj     := conj ( "|" conj )*
//! conj     := unary ( "&" unary )*
//! unary    := "!" unary | quant var "." formula | atom | "(" formula ")"
//! quant    := "E" | "A" | "E2" | "A2" | "Ew" | "Aw"
//! atom     := name "(" var ("," var)* ")" | var "=" var
//! ```
//!
//! First-order variables start with a lowercase letter, set symbols and set
//! variables with an uppercase one.

mod formula;
mod parse;
mod vocabulary;

use thiserror::Error;

pub use formula::{Formula, FreeVars, Fresh, SetQuantifier, SetRef};
pub use parse::{parse_formula, parse_formula_with_sets};
pub use vocabulary::Vocabulary;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LogicError {
    #[error("syntax error at offset {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("arity error at offset {pos}: `{name}` expects {expected} argument(s), got {found}")]
    Arity { pos: usize, name: String, expected: usize, found: usize },
    #[error("unknown symbol `{name}` at offset {pos}")]
    UnknownSymbol { pos: usize, name: String },
    #[error("invalid vocabulary: {0}")]
    BadVocabulary(String),
}

pub fn is_fo_name(name: &str) -> bool {
    name.chars().next().is_some_and(|c| c.is_ascii_lowercase())
}

pub fn is_set_name(name: &str) -> bool {
    name.chars().next().is_some_and(|c| c.is_ascii_uppercase())
}

/// Renders a formula in the concrete syntax accepted by [`parse_formula`].
pub fn print_formula(f: &Formula) -> String {
    f.to_string()
}
