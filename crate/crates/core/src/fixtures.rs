//! Small named geometries used as examples, test objects and the default
//! apex family for universal-property checks.

use alloc::vec::Vec;

use crate::construct::{sign_geometry, trivial_geometry};
use crate::geometry::Geometry;
use crate::group::{from_group_table, CayleyTable};

fn from_table(t: &CayleyTable) -> Geometry {
    from_group_table(t).expect("built-in tables are groups")
}

pub fn trivial() -> Geometry {
    trivial_geometry()
}

/// `Z2 = {e, a}`.
pub fn z2() -> Geometry {
    from_table(&CayleyTable::cyclic_labeled(&["e", "a"]))
}

/// `Z3 = {e, a, b}` with `a² = b`.
pub fn z3() -> Geometry {
    from_table(&CayleyTable::cyclic_labeled(&["e", "a", "b"]))
}

/// `Z4 = {0, 1, 2, 3}`.
pub fn z4() -> Geometry {
    cyclic(4)
}

/// `Z_n` labelled `0..n-1`.
pub fn cyclic(n: usize) -> Geometry {
    from_table(&CayleyTable::cyclic(n))
}

pub fn klein() -> Geometry {
    from_table(&CayleyTable::klein())
}

/// The sign geometry `L = {e, x}`.
pub fn sign() -> Geometry {
    sign_geometry()
}

pub fn s3() -> Geometry {
    from_table(&CayleyTable::symmetric(3))
}

pub fn s4() -> Geometry {
    from_table(&CayleyTable::symmetric(4))
}

/// Every built-in geometry with at most six elements.
pub fn all() -> Vec<Geometry> {
    Vec::from([trivial(), z2(), z3(), z4(), klein(), sign(), cyclic(5), cyclic(6), s3()])
}
