//! Subsets of a geometry: subgeometry and normality checks, generated
//! subgeometries, and restriction of `Δ` to a subset.

use alloc::collections::BTreeSet;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::error::Error;
use crate::geometry::Geometry;
use crate::triples::TripleSet;

/// A sorted set of element indices of a parent geometry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subset {
    parent: Arc<Geometry>,
    members: Vec<usize>,
}

impl Subset {
    pub fn new<I>(parent: Arc<Geometry>, members: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = usize>,
    {
        let set: BTreeSet<usize> = members.into_iter().collect();
        if let Some(&bad) = set.iter().find(|&&i| i >= parent.len()) {
            return Err(Error::ElementOutOfRange(bad));
        }
        Ok(Self { parent, members: set.into_iter().collect() })
    }

    pub fn parent(&self) -> &Arc<Geometry> {
        &self.parent
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, index: usize) -> bool {
        self.members.binary_search(&index).is_ok()
    }

    /// Position of a parent index within the subset.
    pub fn position(&self, index: usize) -> Option<usize> {
        self.members.binary_search(&index).ok()
    }

    pub fn contains_identity(&self) -> bool {
        self.contains(self.parent.identity())
    }

    /// `e ∈ S` and `slice(s₁, s₂) ⊆ S` for all `s₁, s₂ ∈ S`.
    pub fn is_subgeometry(&self) -> bool {
        self.contains_identity()
            && self.members.iter().all(|&s1| {
                self.members.iter().all(|&s2| self.parent.slice(s1, s2).all(|x| self.contains(x)))
            })
    }

    /// For all `a, b` with `(s, a, b) ∈ Δ` for some `s ∈ S` there is an
    /// `s₁ ∈ S` with `(s₁, b, a) ∈ Δ`.
    pub fn is_normal(&self) -> bool {
        self.normality_witness().is_none()
    }

    /// A pair `(a, b)` violating normality, if any.
    pub fn normality_witness(&self) -> Option<(usize, usize)> {
        let g = &self.parent;
        for &s in &self.members {
            for a in 0..g.len() {
                for b in g.slice(s, a) {
                    if !self.members.iter().any(|&s1| g.contains(s1, b, a)) {
                        return Some((a, b));
                    }
                }
            }
        }
        None
    }

    /// `Δ` restricted to `S³`, reindexed by position in the subset. The
    /// identity of the result is the parent identity, which must belong to `S`.
    pub fn to_geometry(&self) -> Result<Geometry, Error> {
        let identity = self
            .position(self.parent.identity())
            .ok_or_else(|| Error::Shape("subset does not contain the identity".into()))?;
        let labels = self.members.iter().map(|&i| self.parent.labels()[i].clone()).collect();
        let triples = self.parent.delta().iter().filter_map(|t| {
            Some([self.position(t[0])?, self.position(t[1])?, self.position(t[2])?])
        });
        // Positions preserve order, so the restricted list stays sorted and distinct.
        let delta = TripleSet::collect_dedup(self.len(), triples);
        Ok(Geometry::from_parts(labels, identity, delta)?)
    }
}

/// Least subgeometry containing `seed`: close `S ∪ {e}` under
/// `s₁, s₂ ∈ S ⇒ slice(s₁, s₂) ⊆ S`.
pub fn generated_subgeometry<I>(g: &Arc<Geometry>, seed: I) -> Result<Subset, Error>
where
    I: IntoIterator<Item = usize>,
{
    let mut members: BTreeSet<usize> = seed.into_iter().collect();
    if let Some(&bad) = members.iter().find(|&&i| i >= g.len()) {
        return Err(Error::ElementOutOfRange(bad));
    }
    members.insert(g.identity());
    loop {
        let current: Vec<usize> = members.iter().copied().collect();
        let before = members.len();
        for &s1 in &current {
            for &s2 in &current {
                members.extend(g.slice(s1, s2));
            }
        }
        if members.len() == before {
            break;
        }
    }
    Subset::new(g.clone(), members)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn s3_index(g: &Geometry, label: &str) -> usize {
        g.index_of(label).unwrap()
    }

    #[test]
    fn subgeometry_checks_on_z4() {
        let z4 = Arc::new(fixtures::z4());
        assert!(Subset::new(z4.clone(), [0, 2]).unwrap().is_subgeometry());
        assert!(!Subset::new(z4.clone(), [0, 1]).unwrap().is_subgeometry());
        assert!(Subset::new(z4.clone(), [0]).unwrap().is_subgeometry());
        assert!(!Subset::new(z4, [2]).unwrap().is_subgeometry());
    }

    #[test]
    fn generated() {
        let z4 = Arc::new(fixtures::z4());
        assert_eq!(generated_subgeometry(&z4, [2]).unwrap().members(), &[0, 2]);
        assert_eq!(generated_subgeometry(&z4, [1]).unwrap().members(), &[0, 1, 2, 3]);
        let s3 = Arc::new(fixtures::s3());
        let c = s3_index(&s3, "(123)");
        let a3 = generated_subgeometry(&s3, [c]).unwrap();
        let mut expected = [0, c, s3_index(&s3, "(132)")];
        expected.sort();
        assert_eq!(a3.members(), &expected[..]);
    }

    #[test]
    fn normality() {
        let s3 = Arc::new(fixtures::s3());
        let a3 = generated_subgeometry(&s3, [s3_index(&s3, "(123)")]).unwrap();
        assert!(a3.is_normal());
        let h = Subset::new(s3.clone(), [0, s3_index(&s3, "(12)")]).unwrap();
        assert!(h.is_subgeometry());
        assert!(!h.is_normal());
        assert!(h.normality_witness().is_some());
        for g in fixtures::all() {
            let e = g.identity();
            assert!(Subset::new(Arc::new(g), [e]).unwrap().is_normal());
        }
    }

    #[test]
    fn restriction() {
        let z4 = Arc::new(fixtures::z4());
        let sub = Subset::new(z4, [0, 2]).unwrap().to_geometry().unwrap();
        assert_eq!(sub.labels(), &["0", "2"]);
        assert_eq!(sub.delta(), fixtures::z2().delta());
    }
}
