//! Total maps between geometries, morphism and homomorphism checks,
//! composition, kernels and images.

use alloc::format;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;
use crate::geometry::Geometry;
use crate::subgeometry::Subset;
use crate::triples::Triple;

/// Tri-state verification flag.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Verified {
    #[default]
    Unchecked,
    Yes,
    No,
}

impl From<bool> for Verified {
    fn from(b: bool) -> Self {
        if b {
            Verified::Yes
        } else {
            Verified::No
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MorphismViolation {
    /// `f(e_A) = image ≠ e_B`.
    IdentityNotPreserved { image: usize },
    /// `triple ∈ Δ_A` but `image ∉ Δ_B`.
    TripleNotPreserved { triple: Triple, image: Triple },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HomomorphismViolation {
    NotMorphism(MorphismViolation),
    /// `(f x, f y, b) ∈ Δ_B` but no `z` with `f z = b` and `(x, y, z) ∈ Δ_A`.
    NoLift { x: usize, y: usize, b: usize },
}

impl fmt::Display for MorphismViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MorphismViolation::IdentityNotPreserved { image } => {
                write!(f, "identity sent to {image}")
            }
            MorphismViolation::TripleNotPreserved { triple, image } => {
                write!(f, "{triple:?} maps to {image:?}, not in target delta")
            }
        }
    }
}

impl fmt::Display for HomomorphismViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HomomorphismViolation::NotMorphism(v) => write!(f, "not a morphism: {v}"),
            HomomorphismViolation::NoLift { x, y, b } => {
                write!(f, "({x}, {y}) has image triple completed by {b} with no lift")
            }
        }
    }
}

/// A total map `source → target` given as a table of target indices.
#[derive(Debug, Clone)]
pub struct GeometryMap {
    source: Arc<Geometry>,
    target: Arc<Geometry>,
    table: Vec<usize>,
    morphism: Verified,
    homomorphism: Verified,
}

/// Maps are equal when source, target and table agree; flags are ignored.
impl PartialEq for GeometryMap {
    fn eq(&self, other: &Self) -> bool {
        self.table == other.table && same_geometry(&self.source, &other.source) && same_geometry(&self.target, &other.target)
    }
}

impl Eq for GeometryMap {}

pub(crate) fn same_geometry(a: &Arc<Geometry>, b: &Arc<Geometry>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl GeometryMap {
    pub fn new(source: Arc<Geometry>, target: Arc<Geometry>, table: Vec<usize>) -> Result<Self, Error> {
        if table.len() != source.len() {
            return Err(Error::TableLength { got: table.len(), expected: source.len() });
        }
        if let Some((source_index, &value)) = table.iter().enumerate().find(|(_, &v)| v >= target.len()) {
            return Err(Error::TableOutOfRange { source_index, value });
        }
        Ok(Self::new_unchecked(source, target, table))
    }

    pub(crate) fn new_unchecked(source: Arc<Geometry>, target: Arc<Geometry>, table: Vec<usize>) -> Self {
        Self { source, target, table, morphism: Verified::Unchecked, homomorphism: Verified::Unchecked }
    }

    pub fn identity(g: &Arc<Geometry>) -> Self {
        Self::new_unchecked(g.clone(), g.clone(), (0..g.len()).collect()).verified()
    }

    /// The map sending everything to `e_B`.
    pub fn constant(source: &Arc<Geometry>, target: &Arc<Geometry>) -> Self {
        Self::new_unchecked(source.clone(), target.clone(), alloc::vec![target.identity(); source.len()])
    }

    pub fn source(&self) -> &Arc<Geometry> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Geometry> {
        &self.target
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn apply(&self, x: usize) -> usize {
        self.table[x]
    }

    pub fn morphism_flag(&self) -> Verified {
        self.morphism
    }

    pub fn homomorphism_flag(&self) -> Verified {
        self.homomorphism
    }

    /// Runs both checks and records the results in the flags.
    pub fn verified(mut self) -> Self {
        self.verify();
        self
    }

    pub fn verify(&mut self) {
        self.morphism = self.morphism_violation().is_none().into();
        self.homomorphism = if self.morphism == Verified::Yes {
            self.homomorphism_violation().is_none().into()
        } else {
            Verified::No
        };
    }

    pub fn morphism_violation(&self) -> Option<MorphismViolation> {
        let image = self.table[self.source.identity()];
        if image != self.target.identity() {
            return Some(MorphismViolation::IdentityNotPreserved { image });
        }
        self.source.delta().iter().find_map(|t| {
            let image = t.map(|i| self.table[i]);
            (!self.target.delta().contains_triple(image))
                .then_some(MorphismViolation::TripleNotPreserved { triple: *t, image })
        })
    }

    pub fn homomorphism_violation(&self) -> Option<HomomorphismViolation> {
        if let Some(v) = self.morphism_violation() {
            return Some(HomomorphismViolation::NotMorphism(v));
        }
        let (a, b) = (&self.source, &self.target);
        for x in 0..a.len() {
            for y in 0..a.len() {
                for t in b.slice(self.table[x], self.table[y]) {
                    if !a.slice(x, y).any(|z| self.table[z] == t) {
                        return Some(HomomorphismViolation::NoLift { x, y, b: t });
                    }
                }
            }
        }
        None
    }

    /// `f(e_A) = e_B` and `f` carries `Δ_A` into `Δ_B`. Uses the flag when set.
    pub fn is_morphism(&self) -> bool {
        match self.morphism {
            Verified::Unchecked => self.morphism_violation().is_none(),
            v => v == Verified::Yes,
        }
    }

    /// A morphism with the lifting property. Uses the flag when set.
    pub fn is_homomorphism(&self) -> bool {
        match self.homomorphism {
            Verified::Unchecked => self.is_morphism() && self.homomorphism_violation().is_none(),
            v => v == Verified::Yes,
        }
    }

    pub(crate) fn set_flags(&mut self, morphism: Verified, homomorphism: Verified) {
        self.morphism = morphism;
        self.homomorphism = homomorphism;
    }

    fn require_morphism(&self) -> Result<(), Error> {
        if self.is_morphism() {
            Ok(())
        } else {
            Err(Error::NotMorphism)
        }
    }

    /// `K_f = { a : f(a) = e_B }`, always a subgeometry of the source.
    pub fn kernel(&self) -> Result<Subset, Error> {
        self.require_morphism()?;
        let e = self.target.identity();
        let k = Subset::new(self.source.clone(), (0..self.source.len()).filter(|&a| self.table[a] == e))?;
        if !k.is_subgeometry() {
            return Err(Error::Inconsistent(format!("kernel {:?} is not a subgeometry", k.members())));
        }
        Ok(k)
    }

    /// `{ f(a) : a ∈ A }`. Need not be a subgeometry; ask the returned subset.
    pub fn image(&self) -> Result<Subset, Error> {
        self.require_morphism()?;
        Subset::new(self.target.clone(), self.table.iter().copied())
    }

    pub fn is_bijective(&self) -> bool {
        if self.source.len() != self.target.len() {
            return false;
        }
        let mut seen = alloc::vec![false; self.target.len()];
        self.table.iter().all(|&v| !core::mem::replace(&mut seen[v], true))
    }
}

/// `g ∘ f`. Requires `f.target` and `g.source` to be structurally equal.
///
/// The result is flagged a morphism when both inputs are; the homomorphism
/// flag is always recomputed when both inputs are verified homomorphisms.
pub fn compose(g: &GeometryMap, f: &GeometryMap) -> Result<GeometryMap, Error> {
    if !same_geometry(&f.target, &g.source) {
        return Err(Error::Shape("target of the first map is not the source of the second".into()));
    }
    let table = f.table.iter().map(|&x| g.table[x]).collect();
    let mut h = GeometryMap::new_unchecked(f.source.clone(), g.target.clone(), table);
    if f.morphism == Verified::Yes && g.morphism == Verified::Yes {
        h.morphism = Verified::Yes;
        if f.homomorphism == Verified::Yes && g.homomorphism == Verified::Yes {
            h.homomorphism = h.homomorphism_violation().is_none().into();
            debug_assert_eq!(h.homomorphism, Verified::Yes, "composite of homomorphisms");
        }
    }
    Ok(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::product;
    use crate::fixtures;
    use alloc::vec;

    fn arc(g: Geometry) -> Arc<Geometry> {
        Arc::new(g)
    }

    #[test]
    fn morphism_examples() {
        let z2 = arc(fixtures::z2());
        let l = arc(fixtures::sign());
        assert!(GeometryMap::identity(&z2).is_morphism());
        let f = GeometryMap::new(z2.clone(), l.clone(), vec![0, 1]).unwrap();
        assert!(f.is_morphism());
        let back = GeometryMap::new(l.clone(), z2.clone(), vec![0, 1]).unwrap();
        assert!(!back.is_morphism());
        assert_eq!(
            back.morphism_violation(),
            Some(MorphismViolation::TripleNotPreserved { triple: [1, 1, 1], image: [1, 1, 1] })
        );
    }

    #[test]
    fn homomorphism_examples() {
        let z2 = arc(fixtures::z2());
        let l = arc(fixtures::sign());
        let f = GeometryMap::new(z2.clone(), l.clone(), vec![0, 1]).unwrap();
        assert!(!f.is_homomorphism());
        assert_eq!(f.homomorphism_violation(), Some(HomomorphismViolation::NoLift { x: 1, y: 1, b: 1 }));
        assert!(GeometryMap::constant(&l, &z2).is_homomorphism());
        let z4 = arc(fixtures::z4());
        let mod2 = GeometryMap::new(z4, z2, vec![0, 1, 0, 1]).unwrap();
        assert!(mod2.is_homomorphism());
    }

    #[test]
    fn composition() {
        let z4 = arc(fixtures::z4());
        let z2 = arc(fixtures::z2());
        let v = arc(product(&z2, &z2));
        let mod2 = GeometryMap::new(z4.clone(), z2.clone(), vec![0, 1, 0, 1]).unwrap().verified();
        let incl = GeometryMap::new(z2.clone(), v.clone(), vec![0, 2]).unwrap().verified();
        assert!(incl.is_homomorphism() || incl.is_morphism());
        let h = compose(&incl, &mod2).unwrap();
        assert_eq!(h.table(), &[0, 2, 0, 2]);
        assert_eq!(v.label(h.apply(1)), "(a,e)");
        assert_eq!(h.morphism_flag(), Verified::Yes);
        assert!(h.is_morphism());

        let id = GeometryMap::identity(&z2);
        assert_eq!(compose(&id, &mod2).unwrap(), mod2);
        assert!(matches!(compose(&mod2, &mod2), Err(Error::Shape(_))));
    }

    #[test]
    fn kernels_and_images() {
        let z4 = arc(fixtures::z4());
        let z2 = arc(fixtures::z2());
        let mod2 = GeometryMap::new(z4.clone(), z2.clone(), vec![0, 1, 0, 1]).unwrap();
        assert_eq!(mod2.kernel().unwrap().members(), &[0, 2]);
        assert_eq!(mod2.image().unwrap().members(), &[0, 1]);
        assert_eq!(GeometryMap::identity(&z4).kernel().unwrap().members(), &[0]);
        let triv = arc(fixtures::trivial());
        assert_eq!(GeometryMap::constant(&z4, &triv).kernel().unwrap().members(), &[0, 1, 2, 3]);
        assert_eq!(GeometryMap::constant(&z4, &z2).image().unwrap().members(), &[0]);

        let l = arc(fixtures::sign());
        let f = GeometryMap::new(z2.clone(), l, vec![0, 1]).unwrap();
        let im = f.image().unwrap();
        assert_eq!(im.members(), &[0, 1]);
        assert!(im.is_subgeometry());

        let bad = GeometryMap::new(z2.clone(), z4, vec![0, 1]).unwrap();
        assert_eq!(bad.kernel(), Err(Error::NotMorphism));
    }

    #[test]
    fn table_validation() {
        let z2 = arc(fixtures::z2());
        assert!(matches!(GeometryMap::new(z2.clone(), z2.clone(), vec![0]), Err(Error::TableLength { .. })));
        assert!(matches!(GeometryMap::new(z2.clone(), z2, vec![0, 2]), Err(Error::TableOutOfRange { .. })));
    }
}
