use std::collections::{BTreeMap, BTreeSet};

use super::LogicError;

/// A relational vocabulary: relation symbols with arities plus monadic predicate symbols.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Vocabulary {
    relations: BTreeMap<String, usize>,
    sets: BTreeSet<String>,
}

impl Vocabulary {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_relation(mut self, name: &str, arity: usize) -> Result<Self, LogicError> {
        self.add_relation(name, arity)?;
        Ok(self)
    }

    pub fn with_set(mut self, name: &str) -> Result<Self, LogicError> {
        self.add_set(name)?;
        Ok(self)
    }

    pub fn add_relation(&mut self, name: &str, arity: usize) -> Result<(), LogicError> {
        if arity == 0 {
            return Err(LogicError::BadVocabulary(format!("relation `{name}` must have arity >= 1")));
        }
        if self.sets.contains(name) {
            return Err(LogicError::BadVocabulary(format!("`{name}` is already a set symbol")));
        }
        match self.relations.get(name) {
            Some(&a) if a != arity => {
                Err(LogicError::BadVocabulary(format!("relation `{name}` declared with arities {a} and {arity}")))
            }
            _ => {
                self.relations.insert(name.to_string(), arity);
                Ok(())
            }
        }
    }

    pub fn add_set(&mut self, name: &str) -> Result<(), LogicError> {
        if !super::is_set_name(name) {
            return Err(LogicError::BadVocabulary(format!("set symbol `{name}` must start uppercase")));
        }
        if self.relations.contains_key(name) {
            return Err(LogicError::BadVocabulary(format!("`{name}` is already a relation symbol")));
        }
        self.sets.insert(name.to_string());
        Ok(())
    }

    pub fn arity(&self, name: &str) -> Option<usize> {
        self.relations.get(name).copied()
    }

    pub fn has_set(&self, name: &str) -> bool {
        self.sets.contains(name)
    }

    /// True when `name` is used by this vocabulary in either name space.
    pub fn mentions(&self, name: &str) -> bool {
        self.relations.contains_key(name) || self.sets.contains(name)
    }

    pub fn relations(&self) -> impl Iterator<Item = (&str, usize)> {
        self.relations.iter().map(|(k, &v)| (k.as_str(), v))
    }

    pub fn sets(&self) -> impl Iterator<Item = &str> {
        self.sets.iter().map(String::as_str)
    }

    /// Union of two vocabularies; fails on conflicting declarations.
    pub fn merged(&self, other: &Vocabulary) -> Result<Vocabulary, LogicError> {
        let mut out = self.clone();
        for (r, a) in other.relations() {
            out.add_relation(r, a)?;
        }
        for s in other.sets() {
            out.add_set(s)?;
        }
        Ok(out)
    }
}
