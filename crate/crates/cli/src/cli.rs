//! Command-line front end. `run` is the whole program minus process exit,
//! so tests can drive it in-process.
//!
//! Exit codes: 0 success, 1 a checked property fails (witness on stdout),
//! 2 parse, usage or shape error, 3 search size limit exceeded.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use pasch_core::{
    check_equalizer_universal, check_product_universal, check_pullback_universal, check_zero_object,
    double_coset_geometry, enumerate_maps, equalizer, equalizer_diagnostic, equivalence_classes,
    find_isomorphism, fixtures, from_group_table, product, pullback, pullback_diagnostic, to_group_table,
    trivial_geometry, verify_congruence, Axiom, AxiomFailure, AxiomStatus, CayleyTable, ConeCheckSpec, Error,
    Geometry, GeometryMap, MapKind, MorphismViolation, HomomorphismViolation, SearchLimits,
    UniversalCheckReport,
};

use crate::format::{parse_geometry, parse_map, serialize_geometry, serialize_map};

#[derive(Debug, Parser)]
#[command(name = "pasch", version, about = "Work with finite Pasch geometries")]
struct Cli {
    /// Bound on source and target size for map enumeration.
    #[arg(long, global = true, value_name = "N")]
    limit: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check axioms 1-4 and the derived properties, with witnesses.
    Check { geometry: PathBuf },
    /// Size, classification and involution table.
    Info { geometry: PathBuf },
    /// Print a built-in geometry.
    #[command(subcommand)]
    Gen(Gen),
    /// Print the product geometry A x B.
    Product { a: PathBuf, b: PathBuf },
    /// Equalizer of two parallel maps.
    Equalizer(Construction),
    /// Pullback of a cospan f: A -> X <- B: g.
    Pullback(Construction),
    /// List morphisms (or homomorphisms) A -> B.
    Maps {
        a: PathBuf,
        b: PathBuf,
        #[arg(long)]
        homs: bool,
    },
    /// Search for an isomorphism A -> B.
    Iso { a: PathBuf, b: PathBuf },
    /// Kernel of a morphism.
    Kernel { map: PathBuf },
    /// Image of a morphism.
    Image { map: PathBuf },
    /// Congruence classes of Hom(A, B) for a sharp B.
    Classes { a: PathBuf, b: PathBuf },
    /// Check a universal property or the congruence laws on finite families.
    #[command(subcommand)]
    Verify(Verify),
}

#[derive(Debug, Subcommand)]
enum Gen {
    Trivial,
    Cyclic { n: usize },
    Klein,
    Sign,
    /// Symmetric group, n <= 4.
    Sym { n: usize },
    /// Double cosets of the subgroup H in a sharp geometry.
    Dcoset {
        geometry: PathBuf,
        #[arg(required = true)]
        subgroup: Vec<String>,
    },
}

#[derive(Debug, Args)]
struct Construction {
    f: PathBuf,
    g: PathBuf,
    /// Write the object and its maps into this directory.
    #[arg(long, value_name = "DIR")]
    out: Option<PathBuf>,
    /// Accept non-sharp inputs and report which properties fail.
    #[arg(long)]
    diagnostic: bool,
}

#[derive(Debug, Args)]
struct ApexOptions {
    /// Apex geometry; repeatable. Defaults to the built-in fixtures.
    #[arg(long = "apex", value_name = "GEOM")]
    apexes: Vec<PathBuf>,
    /// Test cones of morphisms instead of homomorphisms.
    #[arg(long)]
    morphisms: bool,
    #[arg(long)]
    diagnostic: bool,
}

#[derive(Debug, Subcommand)]
enum Verify {
    Product {
        a: PathBuf,
        b: PathBuf,
        #[command(flatten)]
        opts: ApexOptions,
    },
    Equalizer {
        f: PathBuf,
        g: PathBuf,
        #[command(flatten)]
        opts: ApexOptions,
    },
    Pullback {
        f: PathBuf,
        g: PathBuf,
        #[command(flatten)]
        opts: ApexOptions,
    },
    /// One-element geometry is initial and terminal for the given geometries.
    Zero { geometries: Vec<PathBuf> },
    /// Congruence laws for each consecutive triple A B C.
    Congruence {
        #[arg(required = true)]
        geometries: Vec<PathBuf>,
    },
}

enum Failure {
    Usage(String),
    Parse(String),
    Core(Error),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Core(Error::SizeLimit { .. }) => 3,
            Failure::Core(Error::Inconsistent(_) | Error::NotMorphism | Error::NotHomomorphism) => 1,
            _ => 2,
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Usage(m) | Failure::Parse(m) => f.write_str(m),
            Failure::Core(e) => write!(f, "{e}"),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Parse(e.to_string())
    }
}

type Outcome = Result<bool, Failure>;

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let limits = cli.limit.map(SearchLimits::uniform).unwrap_or_default();
    let mut ctx = Ctx { out, limits };
    match ctx.dispatch(cli.command) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(f) => {
            let _ = writeln!(err, "error: {f}");
            f.code()
        }
    }
}

struct Ctx<'a> {
    out: &'a mut dyn Write,
    limits: SearchLimits,
}

macro_rules! say {
    ($ctx:expr, $($arg:tt)*) => {
        writeln!($ctx.out, $($arg)*)?
    };
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))
}

fn load_geometry(path: &Path) -> Result<Arc<Geometry>, Failure> {
    let text = read(path)?;
    parse_geometry(&text).map(Arc::new).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))
}

struct LoadedMap {
    map: GeometryMap,
    source_path: PathBuf,
}

fn load_map(path: &Path) -> Result<LoadedMap, Failure> {
    let text = read(path)?;
    let doc = parse_map(&text).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))?;
    let base = path.parent().unwrap_or(Path::new(""));
    let source_path = base.join(&doc.source);
    let source = load_geometry(&source_path)?;
    let target = load_geometry(&base.join(&doc.target))?;
    let map = doc.resolve(source, target).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))?;
    Ok(LoadedMap { map, source_path })
}

fn absolute(path: &Path) -> PathBuf {
    std::fs::canonicalize(path).unwrap_or_else(|_| path.to_path_buf())
}

fn triple(g: &Geometry, t: [usize; 3]) -> String {
    format!("({}, {}, {})", g.label(t[0]), g.label(t[1]), g.label(t[2]))
}

fn describe_failure(g: &Geometry, f: &AxiomFailure) -> String {
    let l = |i: usize| g.label(i);
    match f {
        AxiomFailure::InvolutionCount { element, candidates } => {
            let c: Vec<&str> = candidates.iter().map(|&i| l(i)).collect();
            format!("{} has {} candidates for # [{}]", l(*element), c.len(), c.join(" "))
        }
        AxiomFailure::IdentityNotFixed { image } => format!("{}# = {}", l(g.identity()), l(*image)),
        AxiomFailure::NotInvolutive { element, image, back } => {
            format!("{}# = {} but {}# = {}", l(*element), l(*image), l(*image), l(*back))
        }
        AxiomFailure::NotCyclic { present, missing } => {
            format!("{} present, rotation {} missing", triple(g, *present), triple(g, *missing))
        }
        AxiomFailure::Pasch { first, second } => {
            format!("no a6 completes {} and {}", triple(g, *first), triple(g, *second))
        }
        AxiomFailure::NotReversible { present, missing } => {
            format!("{} present, reversal {} missing", triple(g, *present), triple(g, *missing))
        }
        AxiomFailure::EmptySlice { x, y } => format!("no z with ({}, {}, z)", l(*x), l(*y)),
    }
}

fn render_map(f: &GeometryMap) -> String {
    let parts: Vec<String> =
        f.table().iter().enumerate().map(|(x, &y)| format!("{}->{}", f.source().label(x), f.target().label(y))).collect();
    parts.join(" ")
}

fn render_members(g: &Geometry, members: &[usize]) -> String {
    let labels: Vec<&str> = members.iter().map(|&i| g.label(i)).collect();
    format!("{{{}}}", labels.join(" "))
}

fn map_witness(f: &GeometryMap) -> Option<String> {
    let (s, t) = (f.source(), f.target());
    let m = match f.homomorphism_violation()? {
        HomomorphismViolation::NotMorphism(v) => match v {
            MorphismViolation::IdentityNotPreserved { image } => {
                format!("identity sent to {}", t.label(image))
            }
            MorphismViolation::TripleNotPreserved { triple: tr, image } => {
                format!("{} sent to {} outside the target", triple(s, tr), triple(t, image))
            }
        },
        HomomorphismViolation::NoLift { x, y, b } => {
            format!("no lift of ({}, {}, {})", s.label(x), s.label(y), t.label(b))
        }
    };
    Some(m)
}

impl Ctx<'_> {
    fn dispatch(&mut self, command: Command) -> Outcome {
        match command {
            Command::Check { geometry } => self.check(&geometry),
            Command::Info { geometry } => self.info(&geometry),
            Command::Gen(g) => self.gen(g),
            Command::Product { a, b } => {
                let (a, b) = (load_geometry(&a)?, load_geometry(&b)?);
                write!(self.out, "{}", serialize_geometry(&product(&a, &b)))?;
                Ok(true)
            }
            Command::Equalizer(c) => self.equalizer(c),
            Command::Pullback(c) => self.pullback(c),
            Command::Maps { a, b, homs } => self.maps(&a, &b, homs),
            Command::Iso { a, b } => {
                let (a, b) = (load_geometry(&a)?, load_geometry(&b)?);
                match find_isomorphism(&a, &b) {
                    Some(f) => {
                        say!(self, "isomorphic");
                        say!(self, "{}", render_map(&f));
                        Ok(true)
                    }
                    None => {
                        say!(self, "not isomorphic");
                        Ok(false)
                    }
                }
            }
            Command::Kernel { map } => self.kernel_or_image(&map, true),
            Command::Image { map } => self.kernel_or_image(&map, false),
            Command::Classes { a, b } => self.classes(&a, &b),
            Command::Verify(v) => self.verify(v),
        }
    }

    fn check(&mut self, path: &Path) -> Outcome {
        let g = load_geometry(path)?;
        let report = g.validate_axioms();
        for axiom in Axiom::ALL {
            let tag = if axiom.is_derived() { " (derived)" } else { "" };
            let status = match report.status(axiom) {
                AxiomStatus::Pass => "pass",
                AxiomStatus::Fail => "FAIL",
                AxiomStatus::Skipped => "skipped",
            };
            say!(self, "axiom {}{tag}: {status}", axiom.number());
            for f in report.failures_of(axiom) {
                say!(self, "  witness: {}", describe_failure(&g, f));
            }
        }
        let ok = report.all_pass() && report.derived_pass();
        say!(self, "{}", if ok { "geometry: ok" } else { "geometry: axioms fail" });
        Ok(ok)
    }

    fn info(&mut self, path: &Path) -> Outcome {
        let g = load_geometry(path)?;
        if let Some(name) = g.name() {
            say!(self, "name {name}");
        }
        say!(self, "elements {}", g.len());
        say!(self, "triples {}", g.delta().len());
        say!(self, "abelian {}", g.is_abelian());
        say!(self, "sharp {}", g.is_sharp());
        match g.involution_table() {
            Some(inv) => {
                say!(self, "involution");
                for (a, &b) in inv.iter().enumerate() {
                    say!(self, "  {} {}", g.label(a), g.label(b));
                }
            }
            None => say!(self, "involution undefined"),
        }
        Ok(true)
    }

    fn gen(&mut self, gen: Gen) -> Outcome {
        let g = match gen {
            Gen::Trivial => trivial_geometry().with_name("trivial"),
            Gen::Cyclic { n } => {
                if n == 0 {
                    return Err(Failure::Usage(String::from("cyclic order must be at least 1")));
                }
                fixtures::cyclic(n).with_name(format!("Z{n}"))
            }
            Gen::Klein => fixtures::klein().with_name("V4"),
            Gen::Sign => fixtures::sign().with_name("sign"),
            Gen::Sym { n } => {
                if !(1..=4).contains(&n) {
                    return Err(Failure::Usage(String::from("symmetric degree must be between 1 and 4")));
                }
                from_group_table(&CayleyTable::symmetric(n))?.with_name(format!("S{n}"))
            }
            Gen::Dcoset { geometry, subgroup } => {
                let g = load_geometry(&geometry)?;
                let table = to_group_table(&g)?;
                let h = subgroup
                    .iter()
                    .map(|l| g.index_of(l).ok_or_else(|| Failure::Usage(format!("unknown element {l}"))))
                    .collect::<Result<Vec<_>, _>>()?;
                double_coset_geometry(&table, &h)?
            }
        };
        write!(self.out, "{}", serialize_geometry(&g))?;
        Ok(true)
    }

    fn emit(&mut self, dir: Option<&Path>, files: &[(&str, String)]) -> Result<(), Failure> {
        match dir {
            Some(dir) => {
                std::fs::create_dir_all(dir)?;
                for (name, text) in files {
                    std::fs::write(dir.join(name), text)?;
                    say!(self, "wrote {}", dir.join(name).display());
                }
            }
            None => {
                for (i, (name, text)) in files.iter().enumerate() {
                    if i > 0 {
                        say!(self, "");
                    }
                    say!(self, "# {name}");
                    write!(self.out, "{text}")?;
                }
            }
        }
        Ok(())
    }

    fn equalizer(&mut self, c: Construction) -> Outcome {
        let (f, g) = (load_map(&c.f)?, load_map(&c.g)?);
        let eq = if c.diagnostic { equalizer_diagnostic(&f.map, &g.map)? } else { equalizer(&f.map, &g.map)? };
        let a = path_string(c.out.as_deref(), &f.source_path);
        let files = [
            ("equalizer.pg", serialize_geometry(&eq.object)),
            ("inclusion.map", serialize_map(&eq.inclusion, "equalizer.pg", &a)),
        ];
        self.emit(c.out.as_deref(), &files)?;
        self.findings(eq.findings)
    }

    fn pullback(&mut self, c: Construction) -> Outcome {
        let (f, g) = (load_map(&c.f)?, load_map(&c.g)?);
        let pb = if c.diagnostic { pullback_diagnostic(&f.map, &g.map)? } else { pullback(&f.map, &g.map)? };
        let a = path_string(c.out.as_deref(), &f.source_path);
        let b = path_string(c.out.as_deref(), &g.source_path);
        let files = [
            ("pullback.pg", serialize_geometry(&pb.object)),
            ("alpha.map", serialize_map(&pb.alpha, "pullback.pg", &a)),
            ("beta.map", serialize_map(&pb.beta, "pullback.pg", &b)),
        ];
        self.emit(c.out.as_deref(), &files)?;
        self.findings(pb.findings)
    }

    fn findings(&mut self, f: pasch_core::Findings) -> Outcome {
        if f.all() {
            return Ok(true);
        }
        say!(self, "# subgeometry {}", f.subgeometry);
        say!(self, "# axioms {}", f.axioms);
        say!(self, "# legs are homomorphisms {}", f.legs_are_homomorphisms);
        Ok(false)
    }

    fn maps(&mut self, a: &Path, b: &Path, homs: bool) -> Outcome {
        let (a, b) = (load_geometry(a)?, load_geometry(b)?);
        let kind = if homs { MapKind::Homomorphism } else { MapKind::Morphism };
        let found = enumerate_maps(&a, &b, kind, self.limits)?;
        let noun = if homs { "homomorphisms" } else { "morphisms" };
        say!(self, "{} {noun}", found.len());
        for f in &found {
            let mark = if !homs && f.is_homomorphism() { "  [homomorphism]" } else { "" };
            say!(self, "{}{mark}", render_map(f));
        }
        Ok(true)
    }

    fn kernel_or_image(&mut self, path: &Path, kernel: bool) -> Outcome {
        let f = load_map(path)?.map;
        if let Some(v) = f.morphism_violation() {
            say!(self, "not a morphism: {v}");
            if let Some(w) = map_witness(&f) {
                say!(self, "  witness: {w}");
            }
            return Ok(false);
        }
        let (subset, g) = if kernel { (f.kernel()?, f.source()) } else { (f.image()?, f.target()) };
        say!(self, "{} {}", if kernel { "kernel" } else { "image" }, render_members(g, subset.members()));
        say!(self, "subgeometry {}", subset.is_subgeometry());
        say!(self, "normal {}", subset.is_normal());
        Ok(true)
    }

    fn classes(&mut self, a: &Path, b: &Path) -> Outcome {
        let (a, b) = (load_geometry(a)?, load_geometry(b)?);
        let classes = equivalence_classes(&a, &b, self.limits)?;
        say!(self, "{} classes", classes.len());
        for (i, c) in classes.iter().enumerate() {
            say!(self, "class {} size {}", i + 1, c.len());
            for f in c.members() {
                say!(self, "  {}", render_map(f));
            }
        }
        Ok(true)
    }

    fn spec(&self, opts: &ApexOptions) -> Result<(ConeCheckSpec, Vec<String>), Failure> {
        let (apexes, names) = if opts.apexes.is_empty() {
            let gs: Vec<Arc<Geometry>> = fixtures::all().into_iter().map(Arc::new).collect();
            let names = (0..gs.len()).map(|i| format!("fixture {i}")).collect();
            (gs, names)
        } else {
            let gs = opts.apexes.iter().map(|p| load_geometry(p)).collect::<Result<Vec<_>, _>>()?;
            (gs, opts.apexes.iter().map(|p| p.display().to_string()).collect())
        };
        let kind = if opts.morphisms { MapKind::Morphism } else { MapKind::Homomorphism };
        let spec = ConeCheckSpec::new(apexes).with_kind(kind).with_limits(self.limits).with_diagnostic(opts.diagnostic);
        Ok((spec, names))
    }

    fn universal(&mut self, report: &UniversalCheckReport, names: &[String]) -> Outcome {
        say!(self, "cones {}", report.outcomes.len());
        for o in report.failures() {
            say!(self, "  apex {}: legs {:?} have {} mediating maps", names[o.apex], o.legs, o.mediating);
        }
        for v in &report.violations {
            say!(self, "  {v}");
        }
        let ok = report.pass();
        say!(self, "{}", if ok { "pass" } else { "FAIL" });
        Ok(ok)
    }

    fn verify(&mut self, v: Verify) -> Outcome {
        match v {
            Verify::Product { a, b, opts } => {
                let (a, b) = (load_geometry(&a)?, load_geometry(&b)?);
                let (spec, names) = self.spec(&opts)?;
                let report = check_product_universal(&a, &b, &spec)?;
                self.universal(&report, &names)
            }
            Verify::Equalizer { f, g, opts } => {
                let (f, g) = (load_map(&f)?.map, load_map(&g)?.map);
                let (spec, names) = self.spec(&opts)?;
                let report = check_equalizer_universal(&f, &g, &spec)?;
                self.universal(&report, &names)
            }
            Verify::Pullback { f, g, opts } => {
                let (f, g) = (load_map(&f)?.map, load_map(&g)?.map);
                let (spec, names) = self.spec(&opts)?;
                let report = check_pullback_universal(&f, &g, &spec)?;
                self.universal(&report, &names)
            }
            Verify::Zero { geometries } => {
                let (gs, names): (Vec<Arc<Geometry>>, Vec<String>) = if geometries.is_empty() {
                    let gs: Vec<_> = fixtures::all().into_iter().map(Arc::new).collect();
                    let names = (0..gs.len()).map(|i| format!("fixture {i}")).collect();
                    (gs, names)
                } else {
                    let gs = geometries.iter().map(|p| load_geometry(p)).collect::<Result<Vec<_>, _>>()?;
                    (gs, geometries.iter().map(|p| p.display().to_string()).collect())
                };
                let report = check_zero_object(&gs, self.limits)?;
                self.universal(&report, &names)
            }
            Verify::Congruence { geometries } => {
                if geometries.len() % 3 != 0 {
                    return Err(Failure::Usage(String::from("congruence takes geometries in groups of three")));
                }
                let gs = geometries.iter().map(|p| load_geometry(p)).collect::<Result<Vec<_>, _>>()?;
                let triples: Vec<_> = gs.chunks(3).map(|c| (c[0].clone(), c[1].clone(), c[2].clone())).collect();
                let report = verify_congruence(&triples, self.limits)?;
                say!(self, "triples {}", report.triples_checked);
                say!(self, "pairs {}", report.pairs_checked);
                for f in &report.failures {
                    say!(self, "  {f}");
                }
                let ok = report.pass();
                say!(self, "{}", if ok { "pass" } else { "FAIL" });
                Ok(ok)
            }
        }
    }
}

/// Path of a map's endpoint as written into an emitted map file: absolute
/// when files go to a directory, as resolved otherwise.
fn path_string(out: Option<&Path>, path: &Path) -> String {
    match out {
        Some(_) => absolute(path).display().to_string(),
        None => path.display().to_string(),
    }
}
