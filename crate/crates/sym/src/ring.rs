use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::SymError;
use crate::poly::Polynomial;

#[derive(Debug)]
struct RingInner {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

/// Ordered variable universe. Cloning is cheap; two rings are equal when
/// they declare the same names in the same order.
#[derive(Clone)]
pub struct Ring(Arc<RingInner>);

impl Ring {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Self, SymError> {
        let mut index = HashMap::with_capacity(names.len());
        let mut owned = Vec::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            let name = name.as_ref();
            if !is_identifier(name) {
                return Err(SymError::Parse(format!(
                    "`{name}` is not a valid variable name"
                )));
            }
            if index.insert(name.to_string(), i).is_some() {
                return Err(SymError::DuplicateVariable(name.to_string()));
            }
            owned.push(name.to_string());
        }
        Ok(Ring(Arc::new(RingInner {
            names: owned,
            index,
        })))
    }

    pub fn len(&self) -> usize {
        self.0.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0.names
    }

    pub fn name(&self, idx: usize) -> &str {
        &self.0.names[idx]
    }

    pub fn index_of(&self, name: &str) -> Result<usize, SymError> {
        self.0
            .index
            .get(name)
            .copied()
            .ok_or_else(|| SymError::UnknownVariable(name.to_string()))
    }

    pub fn contains(&self, name: &str) -> bool {
        self.0.index.contains_key(name)
    }

    /// The polynomial consisting of the single variable `name`.
    pub fn var(&self, name: &str) -> Result<Polynomial, SymError> {
        let idx = self.index_of(name)?;
        Ok(Polynomial::variable(self, idx))
    }

    pub(crate) fn check_same(&self, other: &Ring) -> Result<(), SymError> {
        if self == other {
            Ok(())
        } else {
            Err(SymError::RingMismatch {
                left: self.0.names.join(", "),
                right: other.0.names.join(", "),
            })
        }
    }
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.names == other.0.names
    }
}

impl Eq for Ring {}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ring[{}]", self.0.names.join(", "))
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}
