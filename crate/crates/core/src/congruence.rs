//! Conjugacy of homomorphisms into a sharp geometry: `f ~ g` iff some `b`
//! in the target has `f(a) = b·g(a)·b#` for all `a`. The relation is a
//! congruence, so hom-set classes compose (`[g]∘[f] = [g∘f]`).
//!
//! Products here are the group product of the sharp target, so `~` is only
//! defined for sharp targets. [`are_hyper_conjugate`] is an experimental
//! set-valued variant for arbitrary targets with no guarantees attached.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::enumerate::{enumerate_maps, MapKind, SearchLimits};
use crate::error::Error;
use crate::geometry::Geometry;
use crate::group::{to_group_table, CayleyTable};
use crate::maps::{compose, same_geometry, GeometryMap, Verified};

/// Group structure of a sharp geometry, for conjugating by its elements.
struct Conjugator {
    table: CayleyTable,
    inverse: Vec<usize>,
}

impl Conjugator {
    fn new(target: &Geometry) -> Result<Self, Error> {
        if !target.is_sharp() {
            return Err(Error::NotSharp);
        }
        let table = to_group_table(target)?;
        let inverse = table.validate()?.inverses;
        Ok(Self { table, inverse })
    }

    /// `b·x·b#`
    fn apply(&self, b: usize, x: usize) -> usize {
        self.table.mul(self.table.mul(b, x), self.inverse[b])
    }

    fn conjugate(&self, b: usize, g: &GeometryMap) -> GeometryMap {
        let table = g.table().iter().map(|&x| self.apply(b, x)).collect();
        let mut out = GeometryMap::new(g.source().clone(), g.target().clone(), table).expect("same shape as g");
        if g.homomorphism_flag() == Verified::Yes {
            out.verify();
        }
        out
    }

    fn related(&self, f: &GeometryMap, g: &GeometryMap) -> Option<usize> {
        (0..self.table.order()).find(|&b| f.table().iter().zip(g.table()).all(|(&y, &x)| y == self.apply(b, x)))
    }
}

fn same_shape(f: &GeometryMap, g: &GeometryMap) -> Result<(), Error> {
    if same_geometry(f.source(), g.source()) && same_geometry(f.target(), g.target()) {
        Ok(())
    } else {
        Err(Error::Shape(String::from("maps have different sources or targets")))
    }
}

/// `a ↦ b·g(a)·b#` using the group product of the (sharp) target.
pub fn conjugate_map(b: usize, g: &GeometryMap) -> Result<GeometryMap, Error> {
    if b >= g.target().len() {
        return Err(Error::ElementOutOfRange(b));
    }
    Ok(Conjugator::new(g.target())?.conjugate(b, g))
}

/// Whether `f = conjugate_map(b, g)` for some `b` in the target.
pub fn are_equivalent(f: &GeometryMap, g: &GeometryMap) -> Result<bool, Error> {
    same_shape(f, g)?;
    Ok(Conjugator::new(f.target())?.related(f, g).is_some())
}

/// An equivalence class of homomorphisms `A → B` under `~`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomClass {
    members: Vec<GeometryMap>,
}

impl HomClass {
    fn from_members(mut members: Vec<GeometryMap>) -> Self {
        members.sort_by(|x, y| x.table().cmp(y.table()));
        members.dedup();
        Self { members }
    }

    pub fn source(&self) -> &Arc<Geometry> {
        self.members[0].source()
    }

    pub fn target(&self) -> &Arc<Geometry> {
        self.members[0].target()
    }

    /// The member with the lexicographically least table.
    pub fn representative(&self) -> &GeometryMap {
        &self.members[0]
    }

    pub fn members(&self) -> &[GeometryMap] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, f: &GeometryMap) -> bool {
        self.members.binary_search_by(|m| m.table().cmp(f.table())).is_ok()
            && same_geometry(f.source(), self.source())
            && same_geometry(f.target(), self.target())
    }
}

/// The class of a single homomorphism: its conjugation orbit.
fn class_of(conj: &Conjugator, h: &GeometryMap) -> HomClass {
    HomClass::from_members((0..conj.table.order()).map(|c| conj.conjugate(c, h)).collect())
}

/// Partition of `Hom(A, B)` into `~`-classes, ordered by representative.
pub fn equivalence_classes(
    a: &Arc<Geometry>,
    b: &Arc<Geometry>,
    limits: SearchLimits,
) -> Result<Vec<HomClass>, Error> {
    let conj = Conjugator::new(b)?;
    let homs = enumerate_maps(a, b, MapKind::Homomorphism, limits)?;
    let mut assigned = alloc::vec![false; homs.len()];
    let mut classes = Vec::new();
    for i in 0..homs.len() {
        if assigned[i] {
            continue;
        }
        let mut members = Vec::new();
        for j in i..homs.len() {
            if !assigned[j] && conj.related(&homs[j], &homs[i]).is_some() {
                assigned[j] = true;
                members.push(homs[j].clone());
            }
        }
        classes.push(HomClass::from_members(members));
    }
    Ok(classes)
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CongruenceReport {
    pub triples_checked: usize,
    /// Number of `(f ~ f′, g ~ g′)` combinations whose composites were compared.
    pub pairs_checked: usize,
    pub failures: Vec<String>,
}

impl CongruenceReport {
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }
}

fn check_equivalence(conj: &Conjugator, homs: &[GeometryMap], what: &str, failures: &mut Vec<String>) {
    let n = homs.len();
    let rel: Vec<Vec<bool>> =
        homs.iter().map(|f| homs.iter().map(|g| conj.related(f, g).is_some()).collect()).collect();
    for i in 0..n {
        if !rel[i][i] {
            failures.push(format!("{what}: not reflexive at {:?}", homs[i].table()));
        }
        for j in 0..n {
            if rel[i][j] != rel[j][i] {
                failures.push(format!("{what}: not symmetric for {:?}, {:?}", homs[i].table(), homs[j].table()));
            }
            for k in 0..n {
                if rel[i][j] && rel[j][k] && !rel[i][k] {
                    failures.push(format!("{what}: not transitive through {:?}", homs[j].table()));
                }
            }
        }
    }
    let order = conj.table.order();
    for g in homs {
        for b in 0..order {
            let inner: Vec<GeometryMap> = (0..order).map(|d| conj.conjugate(d, g)).collect();
            for (d, gd) in inner.iter().enumerate() {
                if conj.conjugate(b, gd).table() != conj.conjugate(conj.table.mul(b, d), g).table() {
                    failures.push(format!("{what}: action law fails for b={b}, d={d}"));
                }
            }
        }
    }
}

/// Exhaustively checks that `~` is an equivalence on `Hom(A, B)` and
/// `Hom(B, C)`, that conjugation is a group action, and that
/// `f ~ f′, g ~ g′ ⇒ g∘f ~ g′∘f′` with witness `g(b₁)·c₁`.
pub fn verify_congruence(
    triples: &[(Arc<Geometry>, Arc<Geometry>, Arc<Geometry>)],
    limits: SearchLimits,
) -> Result<CongruenceReport, Error> {
    let mut report = CongruenceReport::default();
    for (a, b, c) in triples {
        let conj_b = Conjugator::new(b)?;
        let conj_c = Conjugator::new(c)?;
        let homs_ab = enumerate_maps(a, b, MapKind::Homomorphism, limits)?;
        let homs_bc = enumerate_maps(b, c, MapKind::Homomorphism, limits)?;
        check_equivalence(&conj_b, &homs_ab, "Hom(A,B)", &mut report.failures);
        check_equivalence(&conj_c, &homs_bc, "Hom(B,C)", &mut report.failures);
        for f in &homs_ab {
            for fp in &homs_ab {
                let Some(b1) = conj_b.related(f, fp) else { continue };
                for g in &homs_bc {
                    for gp in &homs_bc {
                        let Some(c1) = conj_c.related(g, gp) else { continue };
                        report.pairs_checked += 1;
                        let gf = compose(g, f)?;
                        let gpfp = compose(gp, fp)?;
                        let witness = conj_c.table.mul(g.apply(b1), c1);
                        if conj_c.conjugate(witness, &gpfp).table() != gf.table() {
                            report.failures.push(format!(
                                "composites {:?} and {:?} not related by g(b1)c1",
                                gf.table(),
                                gpfp.table()
                            ));
                        }
                        if !gf.is_homomorphism() {
                            report.failures.push(format!("composite {:?} is not a homomorphism", gf.table()));
                        }
                    }
                }
            }
        }
        report.triples_checked += 1;
    }
    Ok(report)
}

/// `[g] ∘ [f] = [g ∘ f]`. Every member pair is composed and must land in
/// the same class; otherwise the result would depend on representatives.
pub fn quotient_compose(gclass: &HomClass, fclass: &HomClass) -> Result<HomClass, Error> {
    if !same_geometry(fclass.target(), gclass.source()) {
        return Err(Error::Shape(String::from("class targets and sources do not match")));
    }
    let conj = Conjugator::new(gclass.target())?;
    let result = class_of(&conj, &compose(gclass.representative(), fclass.representative())?);
    for g in gclass.members() {
        for f in fclass.members() {
            let h = compose(g, f)?;
            if !result.contains(&h) {
                return Err(Error::Inconsistent(format!(
                    "composite {:?} falls outside the class of the representatives",
                    h.table()
                )));
            }
        }
    }
    if let Some(m) = result.members().iter().find(|m| !m.is_homomorphism()) {
        return Err(Error::Inconsistent(format!("class member {:?} is not a homomorphism", m.table())));
    }
    Ok(result)
}

/// Experimental: `f(a) ∈ (b * g(a)) * b#` for some `b` and all `a`, with
/// `*` the set-valued hyperproduct. Works for any target satisfying axiom 1;
/// no equivalence-relation properties are claimed.
pub fn are_hyper_conjugate(f: &GeometryMap, g: &GeometryMap) -> Result<bool, Error> {
    same_shape(f, g)?;
    let t = f.target();
    let set_product = |xs: &BTreeSet<usize>, y: usize| -> Result<BTreeSet<usize>, Error> {
        let mut out = BTreeSet::new();
        for &x in xs {
            out.extend(t.hyperproduct(x, y)?);
        }
        Ok(out)
    };
    for b in 0..t.len() {
        let bs = t.involution(b)?;
        let mut ok = true;
        for a in 0..f.source().len() {
            let left = set_product(&BTreeSet::from([b]), g.apply(a))?;
            if !set_product(&left, bs)?.contains(&f.apply(a)) {
                ok = false;
                break;
            }
        }
        if ok {
            return Ok(true);
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use alloc::vec;

    fn arc(g: Geometry) -> Arc<Geometry> {
        Arc::new(g)
    }

    fn embedding(s3: &Arc<Geometry>, z3: &Arc<Geometry>, image: &str) -> GeometryMap {
        let c = s3.index_of(image).unwrap();
        let c2 = to_group_table(s3).unwrap().mul(c, c);
        GeometryMap::new(z3.clone(), s3.clone(), vec![s3.identity(), c, c2]).unwrap().verified()
    }

    #[test]
    fn conjugation_examples() {
        let s3 = arc(fixtures::s3());
        let z3 = arc(fixtures::z3());
        let g = embedding(&s3, &z3, "(123)");
        assert!(g.is_homomorphism());
        assert_eq!(conjugate_map(s3.identity(), &g).unwrap(), g);
        let t12 = s3.index_of("(12)").unwrap();
        let h = conjugate_map(t12, &g).unwrap();
        assert_eq!(s3.label(h.apply(1)), "(132)");
        assert!(h.is_homomorphism());

        let z4 = arc(fixtures::z4());
        let g = GeometryMap::new(z4.clone(), z4.clone(), vec![0, 3, 2, 1]).unwrap();
        for b in 0..4 {
            assert_eq!(conjugate_map(b, &g).unwrap(), g);
        }
        let l = arc(fixtures::sign());
        assert_eq!(conjugate_map(0, &GeometryMap::identity(&l)).unwrap_err(), Error::NotSharp);
    }

    #[test]
    fn equivalence_examples() {
        let s3 = arc(fixtures::s3());
        let z3 = arc(fixtures::z3());
        let g = embedding(&s3, &z3, "(123)");
        let h = embedding(&s3, &z3, "(132)");
        let triv = GeometryMap::constant(&z3, &s3);
        assert!(are_equivalent(&g, &g).unwrap());
        assert!(are_equivalent(&g, &h).unwrap());
        assert!(!are_equivalent(&triv, &g).unwrap());
        let z2 = arc(fixtures::z2());
        assert!(matches!(are_equivalent(&g, &GeometryMap::identity(&z2)), Err(Error::Shape(_))));
    }

    #[test]
    fn classes() {
        let s3 = arc(fixtures::s3());
        let z3 = arc(fixtures::z3());
        let classes = equivalence_classes(&z3, &s3, SearchLimits::default()).unwrap();
        let sizes: Vec<usize> = classes.iter().map(HomClass::len).collect();
        assert_eq!(sizes, vec![1, 2]);
        let z2 = arc(fixtures::z2());
        let classes = equivalence_classes(&z2, &z2, SearchLimits::default()).unwrap();
        assert_eq!(classes.len(), 2);
        assert!(classes.iter().all(|c| c.len() == 1));
        let triv = arc(fixtures::trivial());
        assert_eq!(equivalence_classes(&s3, &triv, SearchLimits::default()).unwrap().len(), 1);
    }

    #[test]
    fn congruence() {
        let s3 = arc(fixtures::s3());
        let z3 = arc(fixtures::z3());
        let r = verify_congruence(&[(z3.clone(), s3.clone(), s3.clone())], SearchLimits::default()).unwrap();
        assert!(r.pass(), "{r:?}");
        assert!(r.pairs_checked > 0);
        let z2 = arc(fixtures::z2());
        let z4 = arc(fixtures::z4());
        assert!(verify_congruence(&[(z2.clone(), z4.clone(), z2)], SearchLimits::default()).unwrap().pass());
        assert!(verify_congruence(&[], SearchLimits::default()).unwrap().pass());
    }

    #[test]
    fn quotient_composition() {
        let s3 = arc(fixtures::s3());
        let z3 = arc(fixtures::z3());
        let limits = SearchLimits::default();
        let zz = equivalence_classes(&z3, &z3, limits).unwrap();
        let id_class = zz.iter().find(|c| c.contains(&GeometryMap::identity(&z3))).unwrap();
        let emb = equivalence_classes(&z3, &s3, limits).unwrap().pop().unwrap();
        assert_eq!(emb.len(), 2);
        assert_eq!(quotient_compose(&emb, id_class).unwrap(), emb);

        let ss = equivalence_classes(&s3, &s3, limits).unwrap();
        let id_s3 = ss.iter().find(|c| c.contains(&GeometryMap::identity(&s3))).unwrap();
        assert_eq!(quotient_compose(id_s3, &emb).unwrap(), emb);
        for g in &ss {
            for f in &ss {
                quotient_compose(g, f).unwrap();
            }
        }
        assert!(matches!(quotient_compose(&emb, &emb), Err(Error::Shape(_))));
    }

    #[test]
    fn hyper_conjugacy_agrees_on_sharp_targets() {
        let s3 = arc(fixtures::s3());
        let z3 = arc(fixtures::z3());
        let g = embedding(&s3, &z3, "(123)");
        let h = embedding(&s3, &z3, "(132)");
        assert!(are_hyper_conjugate(&g, &h).unwrap());
        assert!(!are_hyper_conjugate(&GeometryMap::constant(&z3, &s3), &g).unwrap());
        let l = arc(fixtures::sign());
        let z2 = arc(fixtures::z2());
        let c = GeometryMap::constant(&z2, &l);
        let x = GeometryMap::new(z2, l, vec![0, 1]).unwrap();
        // x ∈ x * e * x = {e, x}: the constant map is hyper-conjugate to a↦x
        assert!(are_hyper_conjugate(&x, &c).unwrap());
    }
}
