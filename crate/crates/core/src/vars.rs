//! Ordered variable contexts.
//!
//! Every polynomial carries an explicit, ordered list of variable names.
//! Cross-context arithmetic is an error — the only exception is that
//! constants built without a context (e.g. through `Zero::zero`) embed into
//! any context on demand.

use crate::error::{Error, Result};
use std::fmt;
use std::sync::Arc;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VarContext {
    names: Arc<Vec<String>>,
}

impl VarContext {
    /// Creates a context from distinct, non-empty variable names.
    pub fn new<S: Into<String>>(names: Vec<S>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() {
                return Err(Error::Input("empty variable name".into()));
            }
            if names[..i].contains(n) {
                return Err(Error::Input(format!("duplicate variable name `{n}`")));
            }
        }
        Ok(VarContext { names: Arc::new(names) })
    }

    /// The empty context; home of context-free constants.
    pub fn empty() -> Self {
        VarContext { names: Arc::new(Vec::new()) }
    }

    /// Concatenation of several contexts, preserving order.
    pub fn concat(parts: &[&VarContext]) -> Result<Self> {
        let mut names = Vec::new();
        for p in parts {
            names.extend(p.names.iter().cloned());
        }
        VarContext::new(names)
    }

    pub fn arity(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Fast pointer comparison with a content fallback.
    pub fn same(&self, other: &VarContext) -> bool {
        Arc::ptr_eq(&self.names, &other.names) || self.names == other.names
    }
}

impl fmt::Debug for VarContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.names.join(", "))
    }
}

impl fmt::Display for VarContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.names.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicate_names() {
        assert!(VarContext::new(vec!["z1", "z2", "z1"]).is_err());
    }

    #[test]
    fn concat_preserves_order() {
        let a = VarContext::new(vec!["l1", "l2"]).unwrap();
        let b = VarContext::new(vec!["z1"]).unwrap();
        let c = VarContext::concat(&[&a, &b]).unwrap();
        assert_eq!(c.names(), &["l1", "l2", "z1"]);
        assert_eq!(c.index_of("z1"), Some(2));
    }

    #[test]
    fn concat_rejects_collisions() {
        let a = VarContext::new(vec!["z1"]).unwrap();
        assert!(VarContext::concat(&[&a, &a]).is_err());
    }
}
