use std::fmt;
use std::sync::Arc;

use super::PolyError;

/// Ordered variable set of a polynomial ring.
///
/// The first `geometric_count` variables are projective coordinates; the
/// rest are formal parameters living in the coefficient ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingDescriptor {
    names: Vec<String>,
    geometric_count: usize,
}

pub type RingRef = Arc<RingDescriptor>;

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric())
}

impl RingDescriptor {
    pub fn new<S: AsRef<str>>(names: &[S], geometric_count: usize) -> Result<RingRef, PolyError> {
        if names.is_empty() {
            return Err(PolyError::InvalidRing("no variables".into()));
        }
        if geometric_count > names.len() {
            return Err(PolyError::InvalidRing(format!(
                "geometric count {geometric_count} exceeds {} variables",
                names.len()
            )));
        }
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        for (i, n) in names.iter().enumerate() {
            if !valid_name(n) {
                return Err(PolyError::InvalidRing(format!("invalid variable name {n:?}")));
            }
            if names[..i].contains(n) {
                return Err(PolyError::InvalidRing(format!("duplicate variable {n}")));
            }
        }
        Ok(Arc::new(RingDescriptor {
            names,
            geometric_count,
        }))
    }

    /// `x0,x1,x2,x3` followed by the parameters `t, s, lam`.
    pub fn standard() -> RingRef {
        Self::new(&["x0", "x1", "x2", "x3", "t", "s", "lam"], 4).expect("valid ring")
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn geometric_count(&self) -> usize {
        self.geometric_count
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn name(&self, index: usize) -> &str {
        &self.names[index]
    }

    /// Same ring with the geometric variables renamed `y0, y1, ...`, used for
    /// local coordinates after an affine shift. Parameters keep their names.
    pub fn local(&self) -> Result<RingRef, PolyError> {
        let names: Vec<String> = (0..self.geometric_count)
            .map(|i| format!("y{i}"))
            .chain(self.names[self.geometric_count..].iter().cloned())
            .collect();
        Self::new(&names, self.geometric_count)
    }

    /// This ring with `extra` appended as additional geometric-degree-zero
    /// variables.
    pub fn extended(&self, extra: &[&str]) -> Result<RingRef, PolyError> {
        let names: Vec<String> = self
            .names
            .iter()
            .cloned()
            .chain(extra.iter().map(|s| s.to_string()))
            .collect();
        Self::new(&names, self.geometric_count)
    }
}

impl fmt::Display for RingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q[{}]", self.names.join(","))
    }
}
