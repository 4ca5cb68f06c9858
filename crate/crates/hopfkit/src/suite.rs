//! Named verification suites and their inputs.

use std::path::Path;

use hopfkit_core::catalog::boolean::{boolean_suite, LatticeSpec};
use hopfkit_core::catalog::crossed::{crossed_suite, CrossedModule};
use hopfkit_core::catalog::mackey::mackey_suite;
use hopfkit_core::catalog::reconstruction::reconstruction_suite;
use hopfkit_core::catalog::{build_example, Example, ExampleName, GroupSpec};
use hopfkit_core::hopf::{Bialgebra, Hopf};
use hopfkit_core::quasi::{braiding_axioms, check_rmatrix, double_opmonoidal_check, r_inverse, RMatrix};
use hopfkit_core::rep::{hom_space, Comodule, Module, Rep};
use hopfkit_core::trimodule::{
    chi_associativity, cofree_monad_oracle, fusion_bridge, interchange_chi, small_left_comodules, structure_map_gamma,
    validate_trimodule, validate_trimodule_algebra, Trimodule, TrimoduleAlgebra,
};
use hopfkit_core::yd::{
    braid_relation, braiding_natural, check_yd, drinfeld_double, one_dim_ayd, small_yd_objects, yd_to_double_module,
    Flavor, YdObject,
};
use hopfkit_core::{Error, Field, Matrix, Report, Result, Status};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::format::{parse_spec, Kind, SpecFile};
use crate::output::SuiteReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SuiteName {
    HopfCheck,
    PairInvolution,
    Double,
    Rmatrix,
    Trimodule,
    Boolean,
    Mackey,
    Crossed,
    Reconstruction,
    All,
}

impl SuiteName {
    pub const ALL: [SuiteName; 10] = [
        SuiteName::HopfCheck,
        SuiteName::PairInvolution,
        SuiteName::Double,
        SuiteName::Rmatrix,
        SuiteName::Trimodule,
        SuiteName::Boolean,
        SuiteName::Mackey,
        SuiteName::Crossed,
        SuiteName::Reconstruction,
        SuiteName::All,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SuiteName::HopfCheck => "hopf-check",
            SuiteName::PairInvolution => "pair-involution",
            SuiteName::Double => "double",
            SuiteName::Rmatrix => "rmatrix",
            SuiteName::Trimodule => "trimodule",
            SuiteName::Boolean => "boolean",
            SuiteName::Mackey => "mackey",
            SuiteName::Crossed => "crossed",
            SuiteName::Reconstruction => "reconstruction",
            SuiteName::All => "all",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        // older scripts use the historical name of the monoid reconstruction suite
        if s == "section94" {
            return Some(SuiteName::Reconstruction);
        }
        Self::ALL.into_iter().find(|n| n.as_str() == s)
    }
}

#[derive(Clone, Debug)]
pub struct Options {
    pub field: Field,
    /// A file path or a catalog name.
    pub input: Option<String>,
    pub seed: u64,
    pub budget: u128,
}

impl Default for Options {
    fn default() -> Self {
        Options { field: Field::Rationals, input: None, seed: 0, budget: 1 << 16 }
    }
}

/// A bialgebra under test with whatever extra data its source supplies.
#[derive(Clone, Debug)]
pub struct Subject {
    pub name: String,
    pub bialgebra: Bialgebra,
    pub grouplikes: Vec<Matrix>,
    pub characters: Vec<Matrix>,
    pub stated_antipode: Option<Matrix>,
    pub rmatrix: Option<Matrix>,
    pub file: Option<SpecFile>,
}

impl Subject {
    fn from_example(ex: Example) -> Self {
        Subject {
            name: ex.name,
            bialgebra: ex.bialgebra,
            grouplikes: ex.grouplikes,
            characters: ex.characters,
            stated_antipode: None,
            rmatrix: None,
            file: None,
        }
    }

    fn from_file(name: &str, spec: SpecFile, budget: u128) -> Result<Self> {
        let b = spec.bialgebra()?;
        // over a finite field group-likes and characters are found by exhaustion
        let (grouplikes, characters) = match (b.grouplikes_brute_force(budget), b.characters_brute_force(budget)) {
            (Ok(g), Ok(c)) => (g, c),
            _ => (Vec::new(), Vec::new()),
        };
        Ok(Subject {
            name: name.to_string(),
            bialgebra: b,
            grouplikes,
            characters,
            stated_antipode: spec.antipode(),
            rmatrix: spec.rmatrix(),
            file: Some(spec),
        })
    }
}

/// Resolves `--input`: an existing file is parsed, anything else is a catalog name.
pub fn load_subject(input: &str, opts: &Options) -> Result<Subject> {
    let path = Path::new(input);
    if path.exists() {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Invalid(format!("{input}: {e}")))?;
        let spec = parse_spec(&text)?;
        return Subject::from_file(input, spec, opts.budget);
    }
    Ok(Subject::from_example(build_example(ExampleName::parse(input)?, opts.field)?))
}

fn catalog(names: &[ExampleName], field: Field) -> Result<Vec<Subject>> {
    names.iter().map(|&n| build_example(n, field).map(Subject::from_example)).collect()
}

fn subjects(opts: &Options, default: &[ExampleName]) -> Result<Vec<Subject>> {
    match &opts.input {
        Some(input) => Ok(vec![load_subject(input, opts)?]),
        None => catalog(default, opts.field),
    }
}

pub fn run_suite(name: SuiteName, opts: &Options) -> Result<SuiteReport> {
    let mut out = SuiteReport::new(name.as_str());
    match name {
        SuiteName::HopfCheck => {
            for s in subjects(opts, &[ExampleName::Sweedler])? {
                out.push(hopf_check(&s, opts.seed));
            }
        }
        SuiteName::PairInvolution => {
            for s in subjects(opts, &[ExampleName::Sweedler])? {
                out.push(pair_involution(&s)?);
            }
        }
        SuiteName::Double => {
            for s in subjects(opts, &[ExampleName::Cyclic(2)])? {
                out.push(double(&s)?);
            }
        }
        SuiteName::Rmatrix => {
            let subjects = match &opts.input {
                Some(_) => subjects(opts, &[])?,
                None => {
                    let mut s = catalog(&[ExampleName::Cyclic(2)], opts.field)?;
                    s[0].rmatrix = Some(RMatrix::c2_nontrivial(opts.field)?.r);
                    s
                }
            };
            for s in subjects {
                out.push(rmatrix(&s)?);
            }
        }
        SuiteName::Trimodule => {
            for s in subjects(opts, &[ExampleName::MonoidS])? {
                out.push(trimodule(&s)?);
            }
        }
        SuiteName::Boolean => {
            for k in 0..=3 {
                out.push(boolean_suite(&LatticeSpec::boolean(k)?, opts.field)?);
            }
        }
        SuiteName::Mackey => {
            for n in 1..=3 {
                out.push(mackey_suite(&GroupSpec::cyclic(n), opts.field)?);
            }
        }
        SuiteName::Crossed => {
            out.push(crossed_suite(&CrossedModule::trivial_c2(), opts.field)?);
        }
        SuiteName::Reconstruction => out.push(reconstruction_suite(opts.field)?),
        SuiteName::All => return run_all(opts),
    }
    Ok(out)
}

/// Every suite on its default inputs, over the rationals unless a suite needs more.
fn run_all(opts: &Options) -> Result<SuiteReport> {
    let mut out = SuiteReport::new("all");
    let q = Field::Rationals;
    let base = Options { field: q, input: None, ..opts.clone() };
    for ex in hopfkit_core::catalog::standard_catalog()? {
        out.push(hopf_check(&Subject::from_example(ex), opts.seed));
    }
    for s in catalog(&[ExampleName::Cyclic(2), ExampleName::Sweedler], q)? {
        out.push(pair_involution(&s)?);
        out.push(double(&s)?);
    }
    out.extend(run_suite(SuiteName::Rmatrix, &base)?);
    for s in catalog(&[ExampleName::Cyclic(2), ExampleName::MonoidS, ExampleName::Sweedler], q)? {
        out.push(trimodule(&s)?);
    }
    for field in [q, Field::Prime(2), Field::Prime(3)] {
        let o = Options { field, ..base.clone() };
        out.extend(run_suite(SuiteName::Boolean, &o)?);
        out.extend(run_suite(SuiteName::Mackey, &o)?);
        out.extend(run_suite(SuiteName::Crossed, &o)?);
    }
    out.extend(run_suite(SuiteName::Reconstruction, &base)?);
    Ok(out)
}

/// Bialgebra axioms, antipode solving, Galois agreement and a seeded random multiplicativity sweep.
pub fn hopf_check(s: &Subject, seed: u64) -> Report {
    let b = &s.bialgebra;
    let mut r = Report::new(&s.name);
    r.absorb("bialgebra", b.validate());
    let antipode = match Hopf::new(b.clone()) {
        Ok(h) => {
            r.absorb("hopf", h.validate());
            let table: Vec<String> = h
                .antipode
                .entries()
                .map(|(j, i, c)| format!("S({}) ∋ {c}·{}", b.algebra.labels[i], b.algebra.labels[j]))
                .collect();
            r.finding(format!("antipode: {}", table.join(", ")));
            if let Some(stated) = &s.stated_antipode {
                r.expect("stated-antipode", *stated == h.antipode, "the file's antipode equals the solved one");
            }
            true
        }
        Err(e) => {
            r.finding(e.to_string());
            if s.stated_antipode.is_some() {
                r.fail("stated-antipode", "the file states an antipode but none exists", None);
            }
            false
        }
    };
    let left = b.left_galois().is_invertible();
    let right = b.right_galois().is_invertible();
    r.expect(
        "galois-agrees",
        antipode == left && left == right,
        format!("antipode {antipode}, left Galois {left}, right Galois {right}"),
    );

    let f = b.field();
    let n = b.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let random = |rng: &mut ChaCha8Rng| {
        let v: Vec<_> = (0..n).map(|_| f.from_i64(rng.gen_range(-3..=3))).collect();
        Matrix::column(f, &v)
    };
    let middle = hopfkit_core::matrix::tensor_permutation(f, &[n, n, n, n], &[0, 2, 1, 3]);
    let mut ok = Ok(());
    for trial in 0..8 {
        let (x, y) = (random(&mut rng), random(&mut rng));
        let lhs = b.comul().mul(&b.algebra.product(&x, &y));
        let rhs = Matrix::chain(&[&b.mul().kron(b.mul()), &middle, &b.comul().mul(&x).kron(&b.comul().mul(&y))]);
        if lhs != rhs {
            ok = Err(hopfkit_core::Witness::at(&[trial]));
            break;
        }
    }
    r.record("random-multiplicativity", ok);
    r
}

fn hopf_or_finding(s: &Subject, r: &mut Report) -> Option<Hopf> {
    match Hopf::new(s.bialgebra.clone()) {
        Ok(h) => Some(h),
        Err(e) => {
            r.finding(e.to_string());
            None
        }
    }
}

/// One-dimensional anti-YD objects against the pair-in-involution checks.
pub fn pair_involution(s: &Subject) -> Result<Report> {
    let mut r = Report::new(format!("{} pairs in involution", s.name));
    let Some(h) = hopf_or_finding(s, &mut r) else {
        return Ok(r);
    };
    if s.grouplikes.is_empty() || s.characters.is_empty() {
        r.skip("biconditional", "no group-like or character candidates");
        return Ok(r);
    }
    let pairs = one_dim_ayd(&h, &s.grouplikes, &s.characters)?;
    r.finding(format!("{} anti-YD pairs among {} candidates", pairs.len(), s.grouplikes.len() * s.characters.len()));
    // check B in the (g, β) convention matches the anti-YD condition for (g, β∘S)
    let passes = |rep: &Report, id: &str| rep.status_of(id) == Some(&Status::Pass);
    let mut ok = Ok(());
    let mut same_convention = true;
    for (gi, g) in s.grouplikes.iter().enumerate() {
        for (ci, beta) in s.characters.iter().enumerate() {
            let ayd = check_yd(&h, &YdObject::one_dim(&h, g, beta, Flavor::AntiYd)).passed();
            let direct = h.pair_in_involution(g, beta)?;
            let twisted = h.pair_in_involution(g, &beta.mul(&h.antipode))?;
            let listed = pairs.iter().any(|(pg, pb)| pg == g && pb == beta);
            if ayd != passes(&direct, "A") || ayd != passes(&twisted, "B") || ayd != listed {
                ok = ok.and(Err(hopfkit_core::Witness::at(&[gi, ci])));
            }
            same_convention &= passes(&direct, "A") == passes(&direct, "B");
        }
    }
    if !same_convention {
        r.finding("checks A and B disagree on (g, β); they agree after β ↦ β∘S");
    }
    r.record("biconditional", ok);
    r.expect("nonempty", !pairs.is_empty(), "at least one pair in involution");
    Ok(r)
}

/// Double validators, YD-to-double hom preservation, braid relation and naturality.
pub fn double(s: &Subject) -> Result<Report> {
    let mut r = Report::new(format!("{} double", s.name));
    let Some(h) = hopf_or_finding(s, &mut r) else {
        return Ok(r);
    };
    let d = drinfeld_double(&h)?;
    r.absorb("double", d.validate());
    r.finding(format!("double has dimension {}", d.dim()));
    let objs = small_yd_objects(&h, &s.grouplikes, &s.characters);
    if objs.is_empty() {
        r.skip("hom-preserved", "no one-dimensional YD objects available");
        return Ok(r);
    }
    let mods: Vec<Module> = objs.iter().map(|x| yd_to_double_module(&h, &d, x)).collect::<Result<_>>()?;
    let mut homs = Ok(());
    for (i, x) in objs.iter().enumerate() {
        for (j, y) in objs.iter().enumerate() {
            if hom_space(x, y)?.len() != hom_space(&mods[i], &mods[j])?.len() {
                homs = homs.and(Err(hopfkit_core::Witness::at(&[i, j])));
            }
        }
    }
    r.record("hom-preserved", homs);
    let small: Vec<&YdObject> = objs.iter().filter(|x| x.dim() <= 2).collect();
    let mut braid = Ok(());
    let mut natural = Ok(());
    for (i, x) in small.iter().enumerate() {
        for (j, y) in small.iter().enumerate() {
            for (k, z) in small.iter().enumerate() {
                if !braid_relation(&h, x, y, z) {
                    braid = braid.and(Err(hopfkit_core::Witness::at(&[i, j, k])));
                }
                if !braiding_natural(&h, x, y, z)? {
                    natural = natural.and(Err(hopfkit_core::Witness::at(&[i, j, k])));
                }
            }
        }
    }
    r.record("braid-relation", braid);
    r.record("braiding-natural", natural);
    Ok(r)
}

/// Small modules for braiding sweeps: characters, their pairwise sums and the regular module.
fn small_modules(s: &Subject, max_dim: usize) -> Vec<Module> {
    let a = &s.bialgebra.algebra;
    let ones: Vec<Module> = s.characters.iter().map(|c| Module::from_character(a, c)).collect();
    let mut out = ones.clone();
    for i in 0..ones.len() {
        for j in i..ones.len() {
            out.push(ones[i].direct_sum(&ones[j]));
        }
    }
    if a.dim() <= max_dim {
        out.push(Module::regular(a));
        if let Some(c) = ones.first() {
            if a.dim() < max_dim {
                out.push(Module::regular(a).direct_sum(c));
            }
        }
    }
    out.retain(|m| m.dim() <= max_dim);
    out
}

pub fn rmatrix(s: &Subject) -> Result<Report> {
    let b = &s.bialgebra;
    let mut r = Report::new(format!("{} R-matrix", s.name));
    let dop = double_opmonoidal_check(b, 2);
    if dop.status_of("cocommutative") != Some(&Status::Pass) {
        r.finding("not cocommutative: B ⊗ − is not double opmonoidal");
    }
    r.expect(
        "opmonoidal-tests-agree",
        dop.status_of("tests-agree") == Some(&Status::Pass),
        "element and diagram tests agree",
    );
    let Some(rmat) = &s.rmatrix else {
        r.skip("rmatrix", "no R-matrix given");
        return Ok(r);
    };
    let mut rm = RMatrix { r: rmat.clone(), r_inv: None };
    rm.r_inv = r_inverse(b, &rm);
    r.absorb("axioms", check_rmatrix(b, &rm));
    let mods = small_modules(s, 3);
    let mut ok = Ok(());
    for (i, x) in mods.iter().enumerate() {
        for (j, y) in mods.iter().enumerate() {
            for (k, z) in mods.iter().enumerate() {
                if x.dim() * y.dim() * z.dim() > 12 {
                    continue;
                }
                if !braiding_axioms(b, &rm, x, y, z)?.passed() {
                    ok = ok.and(Err(hopfkit_core::Witness::at(&[i, j, k])));
                }
            }
        }
    }
    r.record("hexagons-and-yang-baxter", ok);
    Ok(r)
}

/// `B • B` algebra checks, the interchange law, Γ on free objects and the fusion bridge.
pub fn trimodule(s: &Subject) -> Result<Report> {
    let b = &s.bialgebra;
    let mut r = Report::new(format!("{} trimodules", s.name));
    if let Some(spec) = &s.file {
        if spec.kind() == Kind::Tri {
            let t = spec.trimodule(b)?;
            r.absorb("file", validate_trimodule(&t));
            match structure_map_gamma(&t) {
                Ok(g) => r.absorb("file-gamma", g.report),
                Err(e) => r.finding(format!("Γ: {e}")),
            }
            return Ok(r);
        }
    }
    let alg = TrimoduleAlgebra::bullet_square(b)?;
    r.absorb("bullet-square", validate_trimodule_algebra(&alg)?);
    let comods: Vec<Comodule> = small_left_comodules(b, &s.grouplikes).into_iter().filter(|m| m.dim() <= 2).collect();
    let cofree = comods.iter().map(|m| cofree_monad_oracle(b, m)).collect::<Result<Vec<bool>>>()?;
    r.expect("cofree-monad", cofree.iter().all(|&x| x), "μ agrees with the cofree comodule monad");
    let x = &alg.trimodule;
    let mut chi = Ok(());
    for (i, m) in comods.iter().enumerate() {
        for (j, n) in comods.iter().enumerate() {
            if !interchange_chi(x, m, n)?.report.passed() {
                chi = chi.and(Err(hopfkit_core::Witness::at(&[i, j])));
            }
        }
    }
    r.record("interchange", chi);
    let ones: Vec<&Comodule> = comods.iter().filter(|m| m.dim() == 1).collect();
    let mut assoc = Ok(());
    for (i, m) in ones.iter().enumerate() {
        for (j, n) in ones.iter().enumerate() {
            for (k, p) in ones.iter().enumerate() {
                if !chi_associativity(x, m, n, p)? {
                    assoc = assoc.and(Err(hopfkit_core::Witness::at(&[i, j, k])));
                }
            }
        }
    }
    r.record("interchange-associative", assoc);
    if b.solve_twisted_antipode().is_some() {
        let mut gamma = Ok(());
        for (i, m) in comods.iter().enumerate() {
            let free = Trimodule::free(b, m)?;
            let g = structure_map_gamma(&free)?;
            if !g.is_iso || !g.report.passed() {
                gamma = gamma.and(Err(hopfkit_core::Witness::at(&[i])));
            }
        }
        r.record("gamma-on-free", gamma);
    } else {
        r.finding("no twisted antipode: Γ is not available");
    }
    r.absorb("fusion", fusion_bridge(b, 2));
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for n in SuiteName::ALL {
            assert_eq!(SuiteName::parse(n.as_str()), Some(n));
        }
        assert_eq!(SuiteName::parse("nope"), None);
    }

    #[test]
    fn monoid_has_no_antipode_as_finding() {
        let opts = Options { input: Some("monoid_s".into()), ..Options::default() };
        let rep = run_suite(SuiteName::HopfCheck, &opts).unwrap();
        assert_eq!(rep.exit_code(), 0);
        assert!(rep.reports[0].findings.iter().any(|f| f.contains("no antipode")));
    }

    #[test]
    fn sweedler_antipode_emitted() {
        let rep = run_suite(SuiteName::HopfCheck, &Options::default()).unwrap();
        assert!(rep.passed());
        assert!(rep.reports[0].findings.iter().any(|f| f.starts_with("antipode")));
    }
}
