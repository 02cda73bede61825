//! Constructions producing new geometries.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::geometry::Geometry;
use crate::group::CayleyTable;
use crate::triples::TripleSet;

/// The one-element geometry `{e}` with `Δ = {(e, e, e)}`.
pub fn trivial_geometry() -> Geometry {
    Geometry::from_labels(&["e"], 0, [[0, 0, 0]]).expect("well-formed")
}

/// The two-element non-sharp geometry `{e, x}`: the cyclic closure of
/// `(e, e, e)`, `(e, x, x)` and `(x, x, x)`, five triples in all.
pub fn sign_geometry() -> Geometry {
    Geometry::from_labels(&["e", "x"], 0, [[0, 0, 0], [0, 1, 1], [1, 1, 0], [1, 0, 1], [1, 1, 1]])
        .expect("well-formed")
}

/// `A × B` with componentwise `Δ`. Element `(i, j)` sits at index
/// `i·|B| + j` and is labelled `(aLabel,bLabel)`.
pub fn product(a: &Geometry, b: &Geometry) -> Geometry {
    let m = b.len();
    let labels = a
        .labels()
        .iter()
        .flat_map(|x| b.labels().iter().map(move |y| format!("({x},{y})")))
        .collect();
    let identity = a.identity() * m + b.identity();
    // Row-major indices make the componentwise product of two sorted lists sorted.
    let triples = a.delta().iter().flat_map(|s| {
        b.delta().iter().map(move |t| [s[0] * m + t[0], s[1] * m + t[1], s[2] * m + t[2]])
    });
    let delta = TripleSet::collect_dedup(a.len() * m, triples);
    Geometry::from_parts(labels, identity, delta).expect("product of well-formed geometries")
}

/// Geometry of the double cosets `HgH` of a subgroup `H`.
///
/// `(X, Y, Z) ∈ Δ` iff the group identity lies in the product set `X·Y·Z`.
/// Cosets are ordered by their least element index and labelled by that
/// element; the coset `H` itself carries the identity's label.
pub fn double_coset_geometry(table: &CayleyTable, subgroup: &[usize]) -> Result<Geometry, Error> {
    table.check_subgroup(subgroup)?;
    let info = table.validate()?;
    let n = table.order();
    let mut coset_of: Vec<Option<usize>> = vec![None; n];
    let mut labels: Vec<String> = Vec::new();
    for g in 0..n {
        if coset_of[g].is_some() {
            continue;
        }
        let id = labels.len();
        let mut holds_identity = false;
        for &h1 in subgroup {
            for &h2 in subgroup {
                let x = table.mul(table.mul(h1, g), h2);
                coset_of[x] = Some(id);
                holds_identity |= x == info.identity;
            }
        }
        let rep = if holds_identity { info.identity } else { g };
        labels.push(table.labels()[rep].to_string());
    }
    let coset_of: Vec<usize> = coset_of.into_iter().map(|c| c.expect("partition covers group")).collect();
    // identity ∈ X·Y·Z  ⇔  some x ∈ X, y ∈ Y has (xy)⁻¹ ∈ Z
    let triples = (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).map(|(x, y)| {
        [coset_of[x], coset_of[y], coset_of[info.inverses[table.mul(x, y)]]]
    });
    let delta = TripleSet::collect_dedup(labels.len(), triples);
    Ok(Geometry::from_parts(labels, coset_of[info.identity], delta)?)
}
