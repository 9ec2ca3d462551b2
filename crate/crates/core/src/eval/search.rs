use std::collections::{BTreeMap, BTreeSet};

use fixedbitset::FixedBitSet;

use super::{Checker, EvalBudget, EvalError};
use crate::logic::Formula;
use crate::structure::FinStructure;

/// A witness of an expansion search: element names per predicate.
pub type Expansion = BTreeMap<String, BTreeSet<String>>;

/// Finds the least interpretation of `prednames` under which `sentence` holds.
///
/// Candidates are ordered by their characteristic vector: predicate by predicate
/// in `prednames` order, elements in structure order, `0 < 1`. The search is
/// exhaustive, so `None` means no expansion satisfies the sentence.
pub fn expansion_search(
    s: &FinStructure,
    sentence: &Formula,
    prednames: &[&str],
    budget: &EvalBudget,
) -> Result<Option<Expansion>, EvalError> {
    let all: Vec<usize> = (0..s.len()).collect();
    expansion_search_within(s, sentence, prednames, &all, budget)
}

/// Like [`expansion_search`] with every predicate confined to `support`
/// (element indices, in the order that defines the characteristic vector).
pub fn expansion_search_within(
    s: &FinStructure,
    sentence: &Formula,
    prednames: &[&str],
    support: &[usize],
    budget: &EvalBudget,
) -> Result<Option<Expansion>, EvalError> {
    let free = sentence.free_variables();
    let open: Vec<String> =
        free.fo.iter().chain(free.sets.iter().filter(|x| !prednames.contains(&x.as_str()))).cloned().collect();
    if !open.is_empty() {
        return Err(EvalError::OpenSentence(open));
    }
    let mut seen = BTreeSet::new();
    for &p in prednames {
        if !seen.insert(p) || s.relation(p).is_some() || s.predicate(p).is_some() {
            return Err(EvalError::NameClash(p.to_string()));
        }
    }
    if let Some(&bad) = support.iter().find(|&&e| e >= s.len()) {
        return Err(EvalError::UnknownElement(format!("#{bad}")));
    }
    let width = prednames.len() * support.len();
    if support.len() > budget.max_set_domain || width >= 63 {
        return Err(EvalError::BudgetExceeded(format!(
            "{} predicates over {} elements (max_set_domain = {})",
            prednames.len(),
            support.len(),
            budget.max_set_domain
        )));
    }

    let mut checker = Checker::new(s, sentence, &[], prednames, budget)?;
    let k = support.len();
    let mut sets = vec![FixedBitSet::with_capacity(s.len()); prednames.len()];
    for c in 0u64..(1u64 << width) {
        for (p, bits) in sets.iter_mut().enumerate() {
            bits.clear();
            for (i, &e) in support.iter().enumerate() {
                // Position p*k + i is the (width - 1 - pos)-th bit: earlier positions weigh more.
                let pos = p * k + i;
                if c >> (width - 1 - pos) & 1 == 1 {
                    bits.insert(e);
                }
            }
        }
        if checker.holds(&[], &sets) {
            let witness = prednames
                .iter()
                .zip(&sets)
                .map(|(name, bits)| (name.to_string(), bits.ones().map(|e| s.name(e).to_string()).collect()))
                .collect();
            return Ok(Some(witness));
        }
    }
    Ok(None)
}
