//! Exhaustive enumeration of hom-sets and isomorphism search, both by
//! backtracking over the source elements in index order.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::geometry::Geometry;
use crate::maps::{GeometryMap, Verified};
use crate::triples::Triple;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MapKind {
    Morphism,
    Homomorphism,
}

/// Bounds on the `|B|^|A|` search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchLimits {
    pub max_source: usize,
    pub max_target: usize,
}

impl Default for SearchLimits {
    fn default() -> Self {
        Self { max_source: 8, max_target: 12 }
    }
}

impl SearchLimits {
    /// Same bound on both sides.
    pub fn uniform(max: usize) -> Self {
        Self { max_source: max, max_target: max }
    }

    pub fn check(&self, source: usize, target: usize) -> Result<(), Error> {
        if source > self.max_source || target > self.max_target {
            return Err(Error::SizeLimit {
                source_size: source,
                target_size: target,
                max_source: self.max_source,
                max_target: self.max_target,
            });
        }
        Ok(())
    }
}

/// Assignment order (identity first, then ascending indices) and, for each
/// step, the source triples that become fully assigned at that step.
struct Plan {
    order: Vec<usize>,
    ready: Vec<Vec<Triple>>,
}

impl Plan {
    fn new(a: &Geometry) -> Self {
        let n = a.len();
        let e = a.identity();
        let order: Vec<usize> = core::iter::once(e).chain((0..n).filter(|&i| i != e)).collect();
        let mut step = vec![0; n];
        for (k, &i) in order.iter().enumerate() {
            step[i] = k;
        }
        let mut ready = vec![Vec::new(); n];
        for t in a.delta() {
            let k = t.iter().map(|&i| step[i]).max().expect("three coordinates");
            ready[k].push(*t);
        }
        Self { order, ready }
    }

    fn consistent(&self, step: usize, table: &[usize], b: &Geometry) -> bool {
        self.ready[step].iter().all(|t| b.contains(table[t[0]], table[t[1]], table[t[2]]))
    }
}

/// All maps `A → B` of the given kind, in lexicographic table order.
///
/// `f(e_A) = e_B` is fixed, elements are assigned in index order and a branch
/// is cut as soon as a fully assigned triple of `Δ_A` leaves `Δ_B`. The
/// lifting condition is checked on complete candidates only.
pub fn enumerate_maps(
    a: &Arc<Geometry>,
    b: &Arc<Geometry>,
    kind: MapKind,
    limits: SearchLimits,
) -> Result<Vec<GeometryMap>, Error> {
    limits.check(a.len(), b.len())?;
    let plan = Plan::new(a);
    let mut table = vec![0; a.len()];
    table[a.identity()] = b.identity();
    let mut out = Vec::new();
    if plan.consistent(0, &table, b) {
        extend(&plan, 1, &mut table, a, b, kind, &mut out);
    }
    Ok(out)
}

fn extend(
    plan: &Plan,
    step: usize,
    table: &mut [usize],
    a: &Arc<Geometry>,
    b: &Arc<Geometry>,
    kind: MapKind,
    out: &mut Vec<GeometryMap>,
) {
    if step == plan.order.len() {
        let mut f = GeometryMap::new_unchecked(a.clone(), b.clone(), table.to_vec());
        let hom: Verified = f.homomorphism_violation().is_none().into();
        if kind == MapKind::Homomorphism && hom != Verified::Yes {
            return;
        }
        f.set_flags(Verified::Yes, hom);
        out.push(f);
        return;
    }
    let x = plan.order[step];
    for y in 0..b.len() {
        table[x] = y;
        if plan.consistent(step, table, b) {
            extend(plan, step + 1, table, a, b, kind, out);
        }
    }
}

/// Per-element data preserved by every isomorphism.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Signature {
    is_identity: bool,
    participation: usize,
    self_pairs: usize,
    involution_orbit: usize,
}

fn signatures(g: &Geometry) -> Vec<Signature> {
    let n = g.len();
    let inv = g.involution_table();
    (0..n)
        .map(|x| Signature {
            is_identity: x == g.identity(),
            participation: (0..n).map(|y| g.delta().slice_len(x, y)).sum(),
            self_pairs: g.delta().slice_len(x, x),
            involution_orbit: match inv {
                Some(inv) if inv[x] == x => 1,
                Some(_) => 2,
                None => 0,
            },
        })
        .collect()
}

/// A bijection `A → B` such that it and its inverse are homomorphisms.
pub fn find_isomorphism(a: &Arc<Geometry>, b: &Arc<Geometry>) -> Option<GeometryMap> {
    if a.len() != b.len() || a.delta().len() != b.delta().len() {
        return None;
    }
    let (sig_a, sig_b) = (signatures(a), signatures(b));
    let mut counts_a = sig_a.clone();
    let mut counts_b = sig_b.clone();
    let key = |s: &Signature| (s.is_identity, s.participation, s.self_pairs, s.involution_orbit);
    counts_a.sort_by_key(key);
    counts_b.sort_by_key(key);
    if counts_a != counts_b {
        return None;
    }
    let plan = Plan::new(a);
    let mut table = vec![0; a.len()];
    let mut used = vec![false; b.len()];
    table[a.identity()] = b.identity();
    used[b.identity()] = true;
    if !plan.consistent(0, &table, b) {
        return None;
    }
    let table = search_iso(&plan, 1, &mut table, &mut used, &sig_a, &sig_b, b)?;
    // Injective on a finite set of equal size, so Δ_A maps onto Δ_B.
    let f = GeometryMap::new_unchecked(a.clone(), b.clone(), table.clone()).verified();
    let mut inverse = vec![0; b.len()];
    for (x, &y) in table.iter().enumerate() {
        inverse[y] = x;
    }
    let g = GeometryMap::new_unchecked(b.clone(), a.clone(), inverse).verified();
    (f.is_homomorphism() && g.is_homomorphism()).then_some(f)
}

#[allow(clippy::too_many_arguments)]
fn search_iso(
    plan: &Plan,
    step: usize,
    table: &mut Vec<usize>,
    used: &mut [bool],
    sig_a: &[Signature],
    sig_b: &[Signature],
    b: &Geometry,
) -> Option<Vec<usize>> {
    if step == plan.order.len() {
        return Some(table.clone());
    }
    let x = plan.order[step];
    for y in 0..b.len() {
        if used[y] || sig_a[x] != sig_b[y] {
            continue;
        }
        table[x] = y;
        used[y] = true;
        if plan.consistent(step, table, b) {
            if let Some(found) = search_iso(plan, step + 1, table, used, sig_a, sig_b, b) {
                return Some(found);
            }
        }
        used[y] = false;
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{double_coset_geometry, product};
    use crate::fixtures;
    use crate::group::CayleyTable;

    fn arc(g: Geometry) -> Arc<Geometry> {
        Arc::new(g)
    }

    #[test]
    fn z2_to_sign() {
        let z2 = arc(fixtures::z2());
        let l = arc(fixtures::sign());
        let morphisms = enumerate_maps(&z2, &l, MapKind::Morphism, SearchLimits::default()).unwrap();
        let tables: Vec<&[usize]> = morphisms.iter().map(|f| f.table()).collect();
        assert_eq!(tables, vec![&[0, 0][..], &[0, 1][..]]);
        let homs = enumerate_maps(&z2, &l, MapKind::Homomorphism, SearchLimits::default()).unwrap();
        assert_eq!(homs.len(), 1);
        assert_eq!(homs[0].table(), &[0, 0]);
    }

    #[test]
    fn z3_to_s3() {
        let homs = enumerate_maps(
            &arc(fixtures::z3()),
            &arc(fixtures::s3()),
            MapKind::Homomorphism,
            SearchLimits::default(),
        )
        .unwrap();
        assert_eq!(homs.len(), 3);
    }

    #[test]
    fn size_limit() {
        let s4 = arc(fixtures::s4());
        let z2 = arc(fixtures::z2());
        assert!(matches!(
            enumerate_maps(&s4, &z2, MapKind::Morphism, SearchLimits::default()),
            Err(Error::SizeLimit { .. })
        ));
        assert!(matches!(
            enumerate_maps(&z2, &s4, MapKind::Morphism, SearchLimits::default()),
            Err(Error::SizeLimit { .. })
        ));
        assert_eq!(
            enumerate_maps(&z2, &s4, MapKind::Homomorphism, SearchLimits::uniform(24)).unwrap().len(),
            10
        );
    }

    #[test]
    fn isomorphisms() {
        let z4 = arc(fixtures::z4());
        let z2 = fixtures::z2();
        let v = arc(product(&z2, &z2));
        assert!(find_isomorphism(&z4, &v).is_none());
        assert!(find_isomorphism(&v, &arc(fixtures::klein())).is_some());

        let s3 = CayleyTable::symmetric(3);
        let t12 = s3.index_of("(12)").unwrap();
        let dc = arc(double_coset_geometry(&s3, &[0, t12]).unwrap());
        let l = arc(fixtures::sign());
        assert!(find_isomorphism(&dc, &l).is_some());

        for g in fixtures::all() {
            let g = arc(g);
            let f = find_isomorphism(&g, &g).expect("self-isomorphism");
            assert!(f.is_bijective());
        }
    }
}
