//! Limits in the category of Pasch geometries with homomorphisms: the zero
//! object, binary products, and (for sharp geometries) equalizers and
//! pullbacks, each with an exhaustive check of its universal property over a
//! finite family of test objects.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::construct::{product, trivial_geometry};
use crate::enumerate::{enumerate_maps, find_isomorphism, MapKind, SearchLimits};
use crate::error::Error;
use crate::fixtures;
use crate::geometry::Geometry;
use crate::maps::{compose, same_geometry, GeometryMap};
use crate::subgeometry::Subset;

/// The finite stand-in for "every object D": which apexes to test and with
/// which kind of arrows.
#[derive(Debug, Clone)]
pub struct ConeCheckSpec {
    pub apexes: Vec<Arc<Geometry>>,
    pub kind: MapKind,
    pub limits: SearchLimits,
    /// Build equalizers/pullbacks of non-sharp inputs too, recording which
    /// expected properties fail instead of rejecting the input.
    pub diagnostic: bool,
}

impl Default for ConeCheckSpec {
    /// Built-in geometries of size at most six, homomorphisms, default limits.
    fn default() -> Self {
        Self::new(fixtures::all().into_iter().map(Arc::new).collect())
    }
}

impl ConeCheckSpec {
    pub fn new(apexes: Vec<Arc<Geometry>>) -> Self {
        Self { apexes, kind: MapKind::Homomorphism, limits: SearchLimits::default(), diagnostic: false }
    }

    pub fn with_kind(mut self, kind: MapKind) -> Self {
        self.kind = kind;
        self
    }

    pub fn with_limits(mut self, limits: SearchLimits) -> Self {
        self.limits = limits;
        self
    }

    pub fn with_diagnostic(mut self, diagnostic: bool) -> Self {
        self.diagnostic = diagnostic;
        self
    }
}

/// One tested cone: its legs and how many mediating maps were found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeOutcome {
    /// Position of the apex in `ConeCheckSpec::apexes`.
    pub apex: usize,
    pub legs: Vec<Vec<usize>>,
    pub mediating: usize,
}

impl ConeOutcome {
    pub fn exists(&self) -> bool {
        self.mediating >= 1
    }

    pub fn unique(&self) -> bool {
        self.mediating <= 1
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct UniversalCheckReport {
    pub outcomes: Vec<ConeOutcome>,
    /// Side conditions that failed, in human-readable form.
    pub violations: Vec<String>,
}

impl UniversalCheckReport {
    /// Every cone has exactly one mediating map and no side condition failed.
    pub fn pass(&self) -> bool {
        self.violations.is_empty() && self.outcomes.iter().all(|o| o.mediating == 1)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ConeOutcome> {
        self.outcomes.iter().filter(|o| o.mediating != 1)
    }
}

fn require_homomorphism(f: &GeometryMap) -> Result<(), Error> {
    if f.is_homomorphism() {
        Ok(())
    } else {
        Err(Error::NotHomomorphism)
    }
}

fn require_sharp(gs: &[&Geometry]) -> Result<(), Error> {
    if gs.iter().all(|g| g.is_sharp()) {
        Ok(())
    } else {
        Err(Error::NotSharp)
    }
}

/// The unique homomorphism `A → {e}`.
pub fn terminal_map(a: &Arc<Geometry>) -> GeometryMap {
    GeometryMap::constant(a, &Arc::new(trivial_geometry())).verified()
}

/// The unique homomorphism `{e} → B`.
pub fn initial_map(b: &Arc<Geometry>) -> GeometryMap {
    GeometryMap::constant(&Arc::new(trivial_geometry()), b).verified()
}

/// Checks that the one-element geometry is initial and terminal with respect
/// to every fixture, and that all one-element geometries among the fixtures
/// are isomorphic to it with identity round trips.
pub fn check_zero_object(
    fixtures: &[Arc<Geometry>],
    limits: SearchLimits,
) -> Result<UniversalCheckReport, Error> {
    let zero = Arc::new(trivial_geometry());
    let mut report = UniversalCheckReport::default();
    for (apex, a) in fixtures.iter().enumerate() {
        let out = enumerate_maps(a, &zero, MapKind::Homomorphism, limits)?;
        if out.first() != Some(&terminal_map(a)) {
            report.violations.push(format!("fixture {apex}: terminal map not among homomorphisms"));
        }
        report.outcomes.push(ConeOutcome { apex, legs: Vec::from([Vec::from([0])]), mediating: out.len() });
        let into = enumerate_maps(&zero, a, MapKind::Homomorphism, limits)?;
        if into.first() != Some(&initial_map(a)) {
            report.violations.push(format!("fixture {apex}: initial map not among homomorphisms"));
        }
        report.outcomes.push(ConeOutcome { apex, legs: Vec::from([Vec::from([1])]), mediating: into.len() });
    }
    let singletons: Vec<Arc<Geometry>> =
        core::iter::once(zero).chain(fixtures.iter().filter(|g| g.len() == 1).cloned()).collect();
    for (i, t) in singletons.iter().enumerate() {
        for u in &singletons[i + 1..] {
            let (Some(f), Some(g)) = (find_isomorphism(u, t), find_isomorphism(t, u)) else {
                report.violations.push(String::from("two one-element geometries are not isomorphic"));
                continue;
            };
            let fg = compose(&f, &g)?;
            let gf = compose(&g, &f)?;
            if fg != GeometryMap::identity(t) || gf != GeometryMap::identity(u) {
                report.violations.push(String::from("connecting maps do not compose to identities"));
            }
        }
    }
    Ok(report)
}

/// `A × B` with its two coordinate projections.
#[derive(Debug, Clone)]
pub struct ProductCone {
    pub object: Arc<Geometry>,
    pub first: GeometryMap,
    pub second: GeometryMap,
}

pub fn product_with_projections(a: &Arc<Geometry>, b: &Arc<Geometry>) -> Result<ProductCone, Error> {
    let object = Arc::new(product(a, b));
    let m = b.len();
    let first = GeometryMap::new(object.clone(), a.clone(), (0..object.len()).map(|k| k / m).collect())?.verified();
    let second = GeometryMap::new(object.clone(), b.clone(), (0..object.len()).map(|k| k % m).collect())?.verified();
    if !first.is_homomorphism() || !second.is_homomorphism() {
        return Err(Error::Inconsistent(String::from("product projection is not a homomorphism")));
    }
    Ok(ProductCone { object, first, second })
}

/// `x ↦ (q1 x, q2 x)` into `q1.target × q2.target`.
pub fn pair_map(q1: &GeometryMap, q2: &GeometryMap) -> Result<GeometryMap, Error> {
    if !same_geometry(q1.source(), q2.source()) {
        return Err(Error::Shape(String::from("paired maps have different sources")));
    }
    let target = Arc::new(product(q1.target(), q2.target()));
    let m = q2.target().len();
    let table = q1.table().iter().zip(q2.table()).map(|(&x, &y)| x * m + y).collect();
    GeometryMap::new(q1.source().clone(), target, table)
}

/// Counts, for every apex `D` and every pair `(q1, q2)`, the maps
/// `q : D → A×B` with `π₁∘q = q1` and `π₂∘q = q2`.
pub fn check_product_universal(
    a: &Arc<Geometry>,
    b: &Arc<Geometry>,
    spec: &ConeCheckSpec,
) -> Result<UniversalCheckReport, Error> {
    let cone = product_with_projections(a, b)?;
    let mut report = UniversalCheckReport::default();
    for (apex, d) in spec.apexes.iter().enumerate() {
        let to_a = enumerate_maps(d, a, spec.kind, spec.limits)?;
        let to_b = enumerate_maps(d, b, spec.kind, spec.limits)?;
        let mut counts: BTreeMap<(Vec<usize>, Vec<usize>), usize> = BTreeMap::new();
        for q in enumerate_maps(d, &cone.object, spec.kind, spec.limits)? {
            let key = (compose(&cone.first, &q)?.table().to_vec(), compose(&cone.second, &q)?.table().to_vec());
            *counts.entry(key).or_default() += 1;
        }
        for q1 in &to_a {
            for q2 in &to_b {
                let key = (q1.table().to_vec(), q2.table().to_vec());
                let mediating = counts.get(&key).copied().unwrap_or(0);
                report.outcomes.push(ConeOutcome { apex, legs: Vec::from([key.0, key.1]), mediating });
            }
        }
    }
    Ok(report)
}

/// Which of the properties expected of an equalizer or pullback hold.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Findings {
    /// The carrier set is a subgeometry of its parent.
    pub subgeometry: bool,
    /// The restricted structure satisfies axioms 1–4.
    pub axioms: bool,
    /// The structure maps are homomorphisms.
    pub legs_are_homomorphisms: bool,
}

impl Findings {
    pub fn all(&self) -> bool {
        self.subgeometry && self.axioms && self.legs_are_homomorphisms
    }

    fn describe(&self) -> Vec<String> {
        let mut out = Vec::new();
        if !self.subgeometry {
            out.push(String::from("carrier is not a subgeometry"));
        }
        if !self.axioms {
            out.push(String::from("restricted structure fails the axioms"));
        }
        if !self.legs_are_homomorphisms {
            out.push(String::from("structure map is not a homomorphism"));
        }
        out
    }
}

/// `E = { x : f(x) = g(x) }` with its inclusion into `A`.
#[derive(Debug, Clone)]
pub struct Equalizer {
    pub subset: Subset,
    pub object: Arc<Geometry>,
    pub inclusion: GeometryMap,
    pub findings: Findings,
}

/// Equalizer of a parallel pair of homomorphisms between sharp geometries.
pub fn equalizer(f: &GeometryMap, g: &GeometryMap) -> Result<Equalizer, Error> {
    let eq = build_equalizer(f, g, false)?;
    if !eq.findings.all() {
        return Err(Error::Inconsistent(eq.findings.describe().join("; ")));
    }
    Ok(eq)
}

/// Same construction without the sharpness requirement; inspect `findings`.
pub fn equalizer_diagnostic(f: &GeometryMap, g: &GeometryMap) -> Result<Equalizer, Error> {
    build_equalizer(f, g, true)
}

fn build_equalizer(f: &GeometryMap, g: &GeometryMap, diagnostic: bool) -> Result<Equalizer, Error> {
    if !same_geometry(f.source(), g.source()) || !same_geometry(f.target(), g.target()) {
        return Err(Error::Shape(String::from("equalizer needs a parallel pair")));
    }
    require_homomorphism(f)?;
    require_homomorphism(g)?;
    if !diagnostic {
        require_sharp(&[f.source(), f.target()])?;
    }
    let a = f.source();
    let subset = Subset::new(a.clone(), (0..a.len()).filter(|&x| f.apply(x) == g.apply(x)))?;
    let object = Arc::new(subset.to_geometry()?);
    let inclusion = GeometryMap::new(object.clone(), a.clone(), subset.members().to_vec())?.verified();
    let findings = Findings {
        subgeometry: subset.is_subgeometry(),
        axioms: object.validate_axioms().all_pass(),
        legs_are_homomorphisms: inclusion.is_homomorphism(),
    };
    Ok(Equalizer { subset, object, inclusion, findings })
}

/// For every apex `E′` and every `k : E′ → A` with `f∘k = g∘k`, counts the
/// `h : E′ → E` with `i∘h = k`, and checks `Im(k) ⊆ E`.
pub fn check_equalizer_universal(
    f: &GeometryMap,
    g: &GeometryMap,
    spec: &ConeCheckSpec,
) -> Result<UniversalCheckReport, Error> {
    let eq = build_equalizer(f, g, spec.diagnostic)?;
    let mut report = UniversalCheckReport::default();
    if spec.diagnostic {
        report.violations.extend(eq.findings.describe());
    } else if !eq.findings.all() {
        return Err(Error::Inconsistent(eq.findings.describe().join("; ")));
    }
    let a = f.source();
    for (apex, d) in spec.apexes.iter().enumerate() {
        let mut counts: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
        for h in enumerate_maps(d, &eq.object, spec.kind, spec.limits)? {
            *counts.entry(compose(&eq.inclusion, &h)?.table().to_vec()).or_default() += 1;
        }
        for k in enumerate_maps(d, a, spec.kind, spec.limits)? {
            if compose(f, &k)? != compose(g, &k)? {
                continue;
            }
            if !k.table().iter().all(|&x| eq.subset.contains(x)) {
                report.violations.push(format!("apex {apex}: image of {:?} not inside E", k.table()));
            }
            let mediating = counts.get(k.table()).copied().unwrap_or(0);
            report.outcomes.push(ConeOutcome { apex, legs: Vec::from([k.table().to_vec()]), mediating });
        }
    }
    Ok(report)
}

/// `Y = { (a, b) : f(a) = g(b) } ⊆ A × B` with its two projections.
#[derive(Debug, Clone)]
pub struct Pullback {
    pub product: ProductCone,
    pub subset: Subset,
    pub object: Arc<Geometry>,
    pub alpha: GeometryMap,
    pub beta: GeometryMap,
    pub findings: Findings,
}

/// Pullback of a cospan of homomorphisms between sharp geometries.
pub fn pullback(f: &GeometryMap, g: &GeometryMap) -> Result<Pullback, Error> {
    let pb = build_pullback(f, g, false)?;
    if !pb.findings.all() {
        return Err(Error::Inconsistent(pb.findings.describe().join("; ")));
    }
    Ok(pb)
}

/// Same construction without the sharpness requirement; inspect `findings`.
pub fn pullback_diagnostic(f: &GeometryMap, g: &GeometryMap) -> Result<Pullback, Error> {
    build_pullback(f, g, true)
}

fn build_pullback(f: &GeometryMap, g: &GeometryMap, diagnostic: bool) -> Result<Pullback, Error> {
    if !same_geometry(f.target(), g.target()) {
        return Err(Error::Shape(String::from("pullback needs a cospan with a common target")));
    }
    require_homomorphism(f)?;
    require_homomorphism(g)?;
    if !diagnostic {
        require_sharp(&[f.source(), g.source(), f.target()])?;
    }
    let (a, b) = (f.source(), g.source());
    let product = product_with_projections(a, b)?;
    let m = b.len();
    let pairs = (0..product.object.len()).filter(|&k| f.apply(k / m) == g.apply(k % m));
    let subset = Subset::new(product.object.clone(), pairs)?;
    let object = Arc::new(subset.to_geometry()?);
    let alpha = GeometryMap::new(object.clone(), a.clone(), subset.members().iter().map(|&k| k / m).collect())?.verified();
    let beta = GeometryMap::new(object.clone(), b.clone(), subset.members().iter().map(|&k| k % m).collect())?.verified();
    if compose(f, &alpha)? != compose(g, &beta)? {
        return Err(Error::Inconsistent(String::from("pullback square does not commute")));
    }
    let findings = Findings {
        subgeometry: subset.is_subgeometry(),
        axioms: object.validate_axioms().all_pass(),
        legs_are_homomorphisms: alpha.is_homomorphism() && beta.is_homomorphism(),
    };
    Ok(Pullback { product, subset, object, alpha, beta, findings })
}

/// For every apex `Z` and every pair `(f′, g′)` with `f∘f′ = g∘g′`, counts the
/// `ε : Z → Y` with `α∘ε = f′` and `β∘ε = g′`.
pub fn check_pullback_universal(
    f: &GeometryMap,
    g: &GeometryMap,
    spec: &ConeCheckSpec,
) -> Result<UniversalCheckReport, Error> {
    let pb = build_pullback(f, g, spec.diagnostic)?;
    let mut report = UniversalCheckReport::default();
    if spec.diagnostic {
        report.violations.extend(pb.findings.describe());
    } else if !pb.findings.all() {
        return Err(Error::Inconsistent(pb.findings.describe().join("; ")));
    }
    for (apex, z) in spec.apexes.iter().enumerate() {
        let mut counts: BTreeMap<(Vec<usize>, Vec<usize>), usize> = BTreeMap::new();
        for eps in enumerate_maps(z, &pb.object, spec.kind, spec.limits)? {
            let key = (compose(&pb.alpha, &eps)?.table().to_vec(), compose(&pb.beta, &eps)?.table().to_vec());
            *counts.entry(key).or_default() += 1;
        }
        let to_a = enumerate_maps(z, f.source(), spec.kind, spec.limits)?;
        let to_b = enumerate_maps(z, g.source(), spec.kind, spec.limits)?;
        for fp in &to_a {
            let ffp = compose(f, fp)?;
            for gp in &to_b {
                if ffp != compose(g, gp)? {
                    continue;
                }
                let key = (fp.table().to_vec(), gp.table().to_vec());
                let mediating = counts.get(&key).copied().unwrap_or(0);
                report.outcomes.push(ConeOutcome { apex, legs: Vec::from([key.0, key.1]), mediating });
            }
        }
    }
    Ok(report)
}
