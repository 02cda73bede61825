use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::axioms::{self, AxiomReport};
use crate::error::{Error, StructureError};
use crate::triples::{Triple, TripleSet};

/// A finite carrier with identity and ternary relation `Δ`.
///
/// Elements are identified by position; labels only matter for I/O.
/// Construction checks well-formedness, not the axioms: call
/// [`Geometry::validate_axioms`] for that.
#[derive(Debug, Clone)]
pub struct Geometry {
    name: Option<String>,
    labels: Vec<String>,
    identity: usize,
    delta: TripleSet,
    // `a#` for every `a`, present only when axiom 1 holds.
    involution: Option<Vec<usize>>,
}

/// Structural equality: labels, identity and `Δ`. The name is ignored.
impl PartialEq for Geometry {
    fn eq(&self, other: &Self) -> bool {
        self.identity == other.identity && self.labels == other.labels && self.delta == other.delta
    }
}

impl Eq for Geometry {}

pub(crate) fn valid_label(label: &str) -> bool {
    !label.is_empty() && !label.contains('#') && !label.chars().any(char::is_whitespace)
}

impl Geometry {
    pub fn new<I>(labels: Vec<String>, identity: usize, triples: I) -> Result<Self, StructureError>
    where
        I: IntoIterator<Item = Triple>,
    {
        let delta = TripleSet::new(labels.len(), triples)?;
        Self::from_parts(labels, identity, delta)
    }

    pub(crate) fn from_parts(
        labels: Vec<String>,
        identity: usize,
        delta: TripleSet,
    ) -> Result<Self, StructureError> {
        let n = labels.len();
        if n == 0 {
            return Err(StructureError::Empty);
        }
        if identity >= n {
            return Err(StructureError::IdentityOutOfRange { identity, n });
        }
        debug_assert_eq!(delta.carrier_size(), n);
        if let Some(bad) = labels.iter().find(|l| !valid_label(l)) {
            return Err(StructureError::InvalidLabel(bad.clone()));
        }
        let mut sorted: Vec<&String> = labels.iter().collect();
        sorted.sort();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(StructureError::DuplicateElement(w[0].clone()));
        }
        let involution = (0..n)
            .map(|a| {
                let mut it = (0..n).filter(|&b| delta.contains(a, b, identity));
                match (it.next(), it.next()) {
                    (Some(b), None) => Some(b),
                    _ => None,
                }
            })
            .collect();
        Ok(Self { name: None, labels, identity, delta, involution })
    }

    /// Like [`Geometry::new`] with labels given as `&str`.
    pub fn from_labels<I>(labels: &[&str], identity: usize, triples: I) -> Result<Self, StructureError>
    where
        I: IntoIterator<Item = Triple>,
    {
        Self::new(labels.iter().map(|l| l.to_string()).collect(), identity, triples)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    /// Always false: a geometry has at least its identity.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, index: usize) -> &str {
        &self.labels[index]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn delta(&self) -> &TripleSet {
        &self.delta
    }

    pub fn contains(&self, a: usize, b: usize, c: usize) -> bool {
        self.delta.contains(a, b, c)
    }

    pub fn slice(&self, a: usize, b: usize) -> impl Iterator<Item = usize> + '_ {
        self.delta.slice(a, b)
    }

    pub fn validate_axioms(&self) -> AxiomReport {
        axioms::validate(self)
    }

    /// The unique `b` with `(a, b, e) ∈ Δ`.
    pub fn involution(&self, a: usize) -> Result<usize, Error> {
        if a >= self.len() {
            return Err(Error::ElementOutOfRange(a));
        }
        if let Some(table) = &self.involution {
            return Ok(table[a]);
        }
        let candidates = (0..self.len()).filter(|&b| self.contains(a, b, self.identity)).count();
        if candidates == 1 {
            Ok((0..self.len()).find(|&b| self.contains(a, b, self.identity)).unwrap())
        } else {
            Err(Error::NoInvolution { element: a, candidates })
        }
    }

    /// `a ↦ a#` for every element, or `None` if axiom 1 fails somewhere.
    pub fn involution_table(&self) -> Option<&[usize]> {
        self.involution.as_deref()
    }

    /// Swapping the first two coordinates preserves `Δ`.
    pub fn is_abelian(&self) -> bool {
        self.delta.iter().all(|t| self.contains(t[1], t[0], t[2]))
    }

    /// Every pair `(a, b)` has at most one completing `c`.
    pub fn is_sharp(&self) -> bool {
        let n = self.len();
        (0..n).all(|a| (0..n).all(|b| self.delta.slice_len(a, b) <= 1))
    }

    /// `{ c# : (a, b, c) ∈ Δ }`, sorted. Requires axiom 1.
    pub fn hyperproduct(&self, a: usize, b: usize) -> Result<Vec<usize>, Error> {
        if a >= self.len() {
            return Err(Error::ElementOutOfRange(a));
        }
        if b >= self.len() {
            return Err(Error::ElementOutOfRange(b));
        }
        let mut out = self.slice(a, b).map(|c| self.involution(c)).collect::<Result<Vec<_>, _>>()?;
        out.sort_unstable();
        out.dedup();
        Ok(out)
    }
}
