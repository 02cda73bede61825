//! Axiom engine: checks the four defining axioms of a Pasch geometry plus
//! the two properties that follow from them.
//!
//! Every violation is reported (not just the first) together with a
//! witness that can be replayed against `Δ`.

use alloc::vec::Vec;
use core::fmt;

use crate::geometry::Geometry;
use crate::triples::Triple;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axiom {
    /// (1) each `a` has exactly one `b` with `(a, b, e) ∈ Δ`.
    InvolutionExists,
    /// (2) `e# = e` and `a## = a`.
    InvolutionLaws,
    /// (3) `(a, b, c) ∈ Δ ⇒ (b, c, a) ∈ Δ`.
    Cyclic,
    /// (4) the Pasch exchange rule.
    Pasch,
    /// (5, derived) `(a, b, c) ∈ Δ ⇒ (c#, b#, a#) ∈ Δ`.
    Reversal,
    /// (6, derived) every `slice(x, y)` is nonempty.
    Totality,
}

impl Axiom {
    pub const ALL: [Axiom; 6] = [
        Axiom::InvolutionExists,
        Axiom::InvolutionLaws,
        Axiom::Cyclic,
        Axiom::Pasch,
        Axiom::Reversal,
        Axiom::Totality,
    ];

    /// Numbering used in the literature: 1–4 defining, 5–6 derived.
    pub fn number(self) -> u8 {
        match self {
            Axiom::InvolutionExists => 1,
            Axiom::InvolutionLaws => 2,
            Axiom::Cyclic => 3,
            Axiom::Pasch => 4,
            Axiom::Reversal => 5,
            Axiom::Totality => 6,
        }
    }

    pub fn is_derived(self) -> bool {
        self.number() > 4
    }
}

/// A single violation with its witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AxiomFailure {
    /// `element` has `candidates.len() != 1` partners `b` with `(element, b, e) ∈ Δ`.
    InvolutionCount { element: usize, candidates: Vec<usize> },
    /// `e# = image` with `image != e`.
    IdentityNotFixed { image: usize },
    /// `element# = image` but `image# = back != element`.
    NotInvolutive { element: usize, image: usize, back: usize },
    /// `present ∈ Δ` but its rotation `missing ∉ Δ`.
    NotCyclic { present: Triple, missing: Triple },
    /// No `a6` completes the exchange for the two triples sharing a first coordinate.
    Pasch { first: Triple, second: Triple },
    /// `present ∈ Δ` but `missing = (c#, b#, a#) ∉ Δ`.
    NotReversible { present: Triple, missing: Triple },
    /// `slice(x, y)` is empty.
    EmptySlice { x: usize, y: usize },
}

impl AxiomFailure {
    pub fn axiom(&self) -> Axiom {
        match self {
            AxiomFailure::InvolutionCount { .. } => Axiom::InvolutionExists,
            AxiomFailure::IdentityNotFixed { .. } | AxiomFailure::NotInvolutive { .. } => {
                Axiom::InvolutionLaws
            }
            AxiomFailure::NotCyclic { .. } => Axiom::Cyclic,
            AxiomFailure::Pasch { .. } => Axiom::Pasch,
            AxiomFailure::NotReversible { .. } => Axiom::Reversal,
            AxiomFailure::EmptySlice { .. } => Axiom::Totality,
        }
    }

    /// Re-checks the witness against `g`; true iff the violation is real.
    pub fn replay(&self, g: &Geometry) -> bool {
        let e = g.identity();
        let n = g.len();
        match self {
            AxiomFailure::InvolutionCount { element, candidates } => {
                let found: Vec<usize> = (0..n).filter(|&b| g.contains(*element, b, e)).collect();
                found == *candidates && found.len() != 1
            }
            AxiomFailure::IdentityNotFixed { image } => *image != e && g.contains(e, *image, e),
            AxiomFailure::NotInvolutive { element, image, back } => {
                back != element && g.contains(*element, *image, e) && g.contains(*image, *back, e)
            }
            AxiomFailure::NotCyclic { present, missing } | AxiomFailure::NotReversible { present, missing } => {
                g.delta().contains_triple(*present) && !g.delta().contains_triple(*missing)
            }
            AxiomFailure::Pasch { first, second } => {
                let (Ok(a4s), Ok(a3s)) = (g.involution(second[1]), g.involution(first[2])) else {
                    return false;
                };
                first[0] == second[0]
                    && g.delta().contains_triple(*first)
                    && g.delta().contains_triple(*second)
                    && !(0..n).any(|a6| g.contains(a6, a4s, first[1]) && g.contains(a6, second[2], a3s))
            }
            AxiomFailure::EmptySlice { x, y } => g.slice(*x, *y).next().is_none(),
        }
    }
}

impl fmt::Display for AxiomFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxiomFailure::InvolutionCount { element, candidates } => {
                write!(f, "element {element} has {} involution candidates {candidates:?}", candidates.len())
            }
            AxiomFailure::IdentityNotFixed { image } => write!(f, "e# = {image}, not e"),
            AxiomFailure::NotInvolutive { element, image, back } => {
                write!(f, "{element}# = {image} but {image}# = {back}")
            }
            AxiomFailure::NotCyclic { present, missing } => {
                write!(f, "{present:?} in delta but rotation {missing:?} is not")
            }
            AxiomFailure::Pasch { first, second } => {
                write!(f, "no a6 completes the exchange for {first:?} and {second:?}")
            }
            AxiomFailure::NotReversible { present, missing } => {
                write!(f, "{present:?} in delta but reversal {missing:?} is not")
            }
            AxiomFailure::EmptySlice { x, y } => write!(f, "no z with ({x}, {y}, z) in delta"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AxiomStatus {
    Pass,
    Fail,
    /// Not evaluated because axiom 1 failed and `#` is not a function.
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AxiomReport {
    failures: Vec<AxiomFailure>,
    skipped: Vec<Axiom>,
}

impl AxiomReport {
    pub fn failures(&self) -> &[AxiomFailure] {
        &self.failures
    }

    pub fn failures_of(&self, axiom: Axiom) -> impl Iterator<Item = &AxiomFailure> {
        self.failures.iter().filter(move |f| f.axiom() == axiom)
    }

    pub fn status(&self, axiom: Axiom) -> AxiomStatus {
        if self.skipped.contains(&axiom) {
            AxiomStatus::Skipped
        } else if self.failures_of(axiom).next().is_some() {
            AxiomStatus::Fail
        } else {
            AxiomStatus::Pass
        }
    }

    /// Axioms 1–4 all pass.
    pub fn all_pass(&self) -> bool {
        Axiom::ALL
            .iter()
            .filter(|a| !a.is_derived())
            .all(|&a| self.status(a) == AxiomStatus::Pass)
    }

    pub fn derived_pass(&self) -> bool {
        self.status(Axiom::Reversal) == AxiomStatus::Pass && self.status(Axiom::Totality) == AxiomStatus::Pass
    }

    /// Axioms 1–4 hold yet a derived property fails: a bug in the checker
    /// or in the construction of `Δ`, never a property of the input.
    pub fn internally_inconsistent(&self) -> bool {
        self.all_pass() && !self.derived_pass()
    }
}

pub(crate) fn validate(g: &Geometry) -> AxiomReport {
    let n = g.len();
    let e = g.identity();
    let delta = g.delta();
    let mut report = AxiomReport::default();

    // (1)
    for a in 0..n {
        let candidates: Vec<usize> = (0..n).filter(|&b| delta.contains(a, b, e)).collect();
        if candidates.len() != 1 {
            report.failures.push(AxiomFailure::InvolutionCount { element: a, candidates });
        }
    }

    // (3)
    for t in delta {
        let [a, b, c] = *t;
        for missing in [[b, c, a], [c, a, b]] {
            if !delta.contains_triple(missing) {
                report.failures.push(AxiomFailure::NotCyclic { present: *t, missing });
                break;
            }
        }
    }

    // (6)
    for x in 0..n {
        for y in 0..n {
            if delta.slice_len(x, y) == 0 {
                report.failures.push(AxiomFailure::EmptySlice { x, y });
            }
        }
    }

    let Some(inv) = g.involution_table() else {
        report.skipped.extend([Axiom::InvolutionLaws, Axiom::Pasch, Axiom::Reversal]);
        return report;
    };

    // (2)
    if inv[e] != e {
        report.failures.push(AxiomFailure::IdentityNotFixed { image: inv[e] });
    }
    for a in 0..n {
        if inv[inv[a]] != a {
            report.failures.push(AxiomFailure::NotInvolutive { element: a, image: inv[a], back: inv[inv[a]] });
        }
    }

    // (4): triples sharing a first coordinate form a contiguous run.
    let all = delta.as_slice();
    let mut start = 0;
    while start < all.len() {
        let a1 = all[start][0];
        let end = start + all[start..].partition_point(|t| t[0] == a1);
        let run = &all[start..end];
        for first in run {
            let [_, a2, a3] = *first;
            for second in run {
                let [_, a4, a5] = *second;
                let exists = (0..n).any(|a6| delta.contains(a6, inv[a4], a2) && delta.contains(a6, a5, inv[a3]));
                if !exists {
                    report.failures.push(AxiomFailure::Pasch { first: *first, second: *second });
                }
            }
        }
        start = end;
    }

    // (5)
    for t in delta {
        let [a, b, c] = *t;
        let missing = [inv[c], inv[b], inv[a]];
        if !delta.contains_triple(missing) {
            report.failures.push(AxiomFailure::NotReversible { present: *t, missing });
        }
    }

    report
}
