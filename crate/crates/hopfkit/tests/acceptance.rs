//! End-to-end acceptance sweep: one line per criterion, nonzero exit on any failure.

use std::process::ExitCode;
use std::time::Instant;

use hopfkit::output::Format;
use hopfkit::suite::{run_suite, Options, SuiteName};
use hopfkit_core::algebra::Algebra;
use hopfkit_core::catalog::boolean::{boolean_suite, LatticeSpec};
use hopfkit_core::catalog::crossed::{crossed_suite, CrossedModule};
use hopfkit_core::catalog::mackey::mackey_suite;
use hopfkit_core::catalog::reconstruction::{quotient_algebra, reconstruction_suite};
use hopfkit_core::catalog::{
    build_example, dual_numbers, group_algebra, monoid_s, split_pair, standard_catalog, Example, ExampleName, GroupSpec,
};
use hopfkit_core::hopf::{Bialgebra, Hopf};
use hopfkit_core::quasi::{
    braiding_axioms, braiding_natural, check_rmatrix, double_opmonoidal_check, family_dual_numbers, family_ground,
    family_split, r_inverse, tuples, Bimodule, RMatrix,
};
use hopfkit_core::rep::{hom_space, is_reflexive, phi_projectivity, projective_by_cover, Comodule, Module, Rep, Side};
use hopfkit_core::trimodule::{
    chi_associativity, cofree_monad_oracle, interchange_chi, not_free_by_dimension, small_left_comodules,
    structure_map_gamma, validate_trimodule_algebra, Trimodule, TrimoduleAlgebra,
};
use hopfkit_core::yd::{
    braid_relation, braiding_natural as yd_natural, check_yd, drinfeld_double, one_dim_ayd, small_yd_objects,
    yd_to_double_module, Flavor, YdObject,
};
use hopfkit_core::{Field, Matrix, Report, Status};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn report_ok(r: &Report, ctx: &str) -> Result<(), String> {
    let bad: Vec<&str> = r.failures().map(|c| c.id.as_str()).collect();
    ensure(bad.is_empty(), format!("{ctx}: {bad:?}"))
}

fn q() -> Field {
    Field::Rationals
}

fn f2() -> Field {
    Field::prime(2).unwrap()
}

fn example(name: ExampleName) -> Example {
    build_example(name, q()).unwrap()
}

fn passes(r: &Report, id: &str) -> bool {
    r.status_of(id) == Some(&Status::Pass)
}

fn antipode_iff_galois() -> Outcome {
    let cat = standard_catalog().map_err(|e| e.to_string())?;
    for ex in &cat {
        let b = &ex.bialgebra;
        report_ok(&b.validate(), &ex.name)?;
        let s = b.solve_antipode();
        let hopf = ex.name != "monoid_s";
        ensure(s.is_some() == hopf, format!("{}: antipode solver verdict", ex.name))?;
        let galois = b.left_galois().is_invertible() && b.right_galois().is_invertible();
        let some_singular = !b.left_galois().is_invertible() || !b.right_galois().is_invertible();
        ensure(galois == s.is_some() && some_singular != s.is_some(), format!("{}: Galois disagrees", ex.name))?;
        if let Ok(h) = Hopf::new(b.clone()) {
            report_ok(&h.validate(), &ex.name)?;
        }
    }
    Ok(format!("{} catalog members, antipode exactly on the {} Hopf ones", cat.len(), cat.len() - 1))
}

fn one_dim_anti_yd() -> Outcome {
    let mut total = 0;
    for name in [ExampleName::Sweedler, ExampleName::Cyclic(2)] {
        let ex = example(name);
        let h = Hopf::new(ex.bialgebra.clone()).unwrap();
        let pairs = one_dim_ayd(&h, &ex.grouplikes, &ex.characters).map_err(|e| e.to_string())?;
        let (one, g) = (&ex.grouplikes[0], ex.grouplikes.get(1));
        let eps = ex.bialgebra.counit();
        let has = |x: &Matrix| pairs.iter().any(|(pg, pb)| pg == x && pb == eps);
        match name {
            ExampleName::Sweedler => ensure(g.is_some_and(&has) && !has(one), "Sweedler: (g, ε) in, (1, ε) out")?,
            _ => ensure(has(one), "kC2: (1, ε) missing")?,
        }
        for gl in &ex.grouplikes {
            for beta in &ex.characters {
                let ayd = check_yd(&h, &YdObject::one_dim(&h, gl, beta, Flavor::AntiYd)).passed();
                let pr = h.pair_in_involution(gl, beta).unwrap();
                let listed = pairs.iter().any(|(pg, pb)| pg == gl && pb == beta);
                ensure(
                    listed == ayd && listed == (passes(&pr, "A") && passes(&pr, "B")),
                    format!("{}: biconditional", ex.name),
                )?;
                total += 1;
            }
        }
    }
    Ok(format!("{total} candidates on Sweedler and kC2"))
}

fn drinfeld_doubles() -> Outcome {
    for (name, dim) in [(ExampleName::Cyclic(2), 4), (ExampleName::Sweedler, 16)] {
        let h = Hopf::new(example(name).bialgebra).unwrap();
        let d = drinfeld_double(&h).map_err(|e| e.to_string())?;
        ensure(d.dim() == dim, format!("D({name}) has dimension {}", d.dim()))?;
        report_ok(&d.bialgebra.validate(), "double bialgebra")?;
        report_ok(&d.validate(), "double antipode")?;
    }
    let ex = example(ExampleName::Cyclic(2));
    let h = Hopf::new(ex.bialgebra.clone()).unwrap();
    let d = drinfeld_double(&h).unwrap();
    let objs: Vec<YdObject> =
        small_yd_objects(&h, &ex.grouplikes, &ex.characters).into_iter().filter(|x| x.dim() <= 2).collect();
    let mods: Vec<Module> = objs.iter().map(|x| yd_to_double_module(&h, &d, x).unwrap()).collect();
    for i in 0..objs.len() {
        for j in 0..objs.len() {
            let a = hom_space(&objs[i], &objs[j]).unwrap().len();
            let b = hom_space(&mods[i], &mods[j]).unwrap().len();
            ensure(a == b, format!("hom dimensions differ at ({i}, {j})"))?;
        }
    }
    let mut triples = 0;
    for x in &objs {
        for y in &objs {
            for z in &objs {
                ensure(braid_relation(&h, x, y, z), "braid relation")?;
                ensure(yd_natural(&h, x, y, z).unwrap(), "braiding naturality")?;
                triples += 1;
            }
        }
    }
    Ok(format!("dims 4 and 16 validate; {} YD objects, {triples} triples", objs.len()))
}

fn quasitriangular() -> Outcome {
    let b = example(ExampleName::Cyclic(2)).bialgebra;
    let mut rm = RMatrix::c2_nontrivial(q()).unwrap();
    rm.r_inv = r_inverse(&b, &rm);
    report_ok(&check_rmatrix(&b, &rm), "R-matrix axioms")?;
    let a = &b.algebra;
    let triv = Module::from_character(a, &Matrix::from_i64(q(), &[&[1, 1]]));
    let sign = Module::from_character(a, &Matrix::from_i64(q(), &[&[1, -1]]));
    let mut mods = vec![Module::regular(a)];
    for d in 1..=3 {
        for s in 0..=d {
            let parts: Vec<&Module> = (0..d).map(|i| if i < s { &sign } else { &triv }).collect();
            mods.push(Module::direct_sum_all(a, &parts));
        }
    }
    let mut count = 0;
    for x in &mods {
        for y in &mods {
            for z in &mods {
                report_ok(&braiding_axioms(&b, &rm, x, y, z).unwrap(), "hexagons and Yang-Baxter")?;
                count += 1;
            }
        }
        for y in &mods {
            ensure(braiding_natural(&b, &rm, x, x, y).unwrap(), "R-braiding naturality")?;
        }
    }
    for ex in standard_catalog().unwrap() {
        let max_dim = if ex.bialgebra.dim() <= 4 { 2 } else { 1 };
        let r = double_opmonoidal_check(&ex.bialgebra, max_dim);
        ensure(passes(&r, "tests-agree"), format!("{}: element and diagram tests disagree", ex.name))?;
        let expected = ex.bialgebra.is_cocommutative();
        ensure(ex.name != "sweedler" || !expected, "Sweedler is cocommutative")?;
        ensure(passes(&r, "cocommutative") == expected, format!("{}: cocommutativity verdict", ex.name))?;
    }
    Ok(format!("{count} triples over {} modules; opmonoidal tests agree across the catalog", mods.len()))
}

fn duoidal() -> Outcome {
    let mut quads = 0;
    for (d, cap6) in [(family_ground(q()), 8), (family_split(q()), 1), (family_dual_numbers(q()), 8)] {
        let dims: Vec<usize> = d.objects.iter().map(Bimodule::dim).collect();
        let all4 = tuples::<4>(&dims, usize::MAX);
        quads += all4.len();
        report_ok(&d.verify(&all4, &tuples::<6>(&dims, cap6)), "duoidal")?;
    }
    Ok(format!("{quads} stored quadruples across k, k×k, k[x]/(x²)"))
}

/// Catalog comodules of dimension at most two, including Sweedler's non-split ones.
fn comodules(b: &Bialgebra, grouplikes: &[Matrix], sweedler: bool) -> Vec<Comodule> {
    let mut out: Vec<Comodule> = small_left_comodules(b, grouplikes).into_iter().filter(|m| m.dim() <= 2).collect();
    if sweedler {
        let one = q().one();
        let span_1x = [(0, 0, 0, one.clone()), (1, 2, 0, one.clone()), (1, 1, 1, one.clone())];
        let span_g_gx = [(0, 1, 0, one.clone()), (1, 3, 0, one.clone()), (1, 0, 1, one)];
        for t in [&span_1x[..], &span_g_gx[..]] {
            out.push(Comodule::from_table(&b.coalgebra, Side::Left, 2, t).unwrap());
        }
    }
    out
}

fn trimodules() -> Outcome {
    let mut pairs = 0;
    for ex in [example(ExampleName::Cyclic(2)), monoid_s(q()).unwrap(), example(ExampleName::Sweedler)] {
        let b = &ex.bialgebra;
        let alg = TrimoduleAlgebra::bullet_square(b).unwrap();
        report_ok(&validate_trimodule_algebra(&alg).unwrap(), &ex.name)?;
        let comods = comodules(b, &ex.grouplikes, ex.name == "sweedler");
        for m in &comods {
            report_ok(&m.validate(), "comodule")?;
            ensure(cofree_monad_oracle(b, m).unwrap(), format!("{}: cofree monad oracle", ex.name))?;
        }
        for m in &comods {
            for n in &comods {
                report_ok(&interchange_chi(&alg.trimodule, m, n).unwrap().report, &ex.name)?;
                pairs += 1;
            }
        }
        let ones: Vec<&Comodule> = comods.iter().filter(|m| m.dim() == 1).collect();
        for m in &ones {
            for n in &ones {
                for p in &comods {
                    ensure(chi_associativity(&alg.trimodule, m, n, p).unwrap(), "χ associativity")?;
                }
            }
        }
    }
    Ok(format!("B•B validates over kC2, k[S], Sweedler; χ checked on {pairs} pairs"))
}

fn fundamental_theorem() -> Outcome {
    let mut free = 0;
    for ex in standard_catalog().unwrap() {
        let b = &ex.bialgebra;
        if b.solve_twisted_antipode().is_none() {
            continue;
        }
        for m in small_left_comodules(b, &ex.grouplikes).into_iter().filter(|m| m.dim() <= 2) {
            let g = structure_map_gamma(&Trimodule::free(b, &m).unwrap()).unwrap();
            ensure(g.is_iso && g.report.passed(), format!("{}: Γ on a free object", ex.name))?;
            free += 1;
        }
    }
    let ks = monoid_s(q()).unwrap().bialgebra;
    ensure(ks.solve_twisted_antipode().is_none(), "k[S] has a twisted antipode")?;
    let a = quotient_algebra(&ks).unwrap();
    ensure(not_free_by_dimension(&a.trimodule), "quotient trimodule looks free")?;
    Ok(format!("Γ iso on {free} free objects; 1-dim k[S] trimodule is not free"))
}

fn two_element_monoid() -> Outcome {
    for f in [q(), Field::prime(3).unwrap()] {
        report_ok(&reconstruction_suite(f).unwrap(), "two-element monoid")?;
    }
    Ok("all checks pass over Q and F3".into())
}

fn lattice_mackey_crossed() -> Outcome {
    let fields = [q(), f2(), Field::prime(3).unwrap()];
    for k in 0..=3 {
        let l = LatticeSpec::boolean(k).unwrap();
        let r = boolean_suite(&l, q()).unwrap();
        report_ok(&r, &format!("Boolean |L| = {}", 1 << k))?;
        ensure(passes(&r, "qf2-right") && passes(&r, "qf2-left"), "QF-2")?;
        ensure(passes(&r, "quasi-frobenius-iff-trivial"), "QF iff |L| = 1")?;
    }
    for f in fields {
        for n in 1..=3 {
            let r = mackey_suite(&GroupSpec::cyclic(n), f).unwrap();
            report_ok(&r, &format!("Mackey C{n} over {f}"))?;
            ensure(passes(&r, "semisimple-iff-coprime"), "semisimplicity")?;
        }
        let r = crossed_suite(&CrossedModule::trivial_c2(), f).unwrap();
        report_ok(&r, &format!("crossed module over {f}"))?;
        ensure(passes(&r, "rigid-iff-coprime"), "rigidity")?;
    }
    Ok("|L| ∈ {1,2,4,8}; G ∈ {1,C2,C3} and crossed C2 over Q, F2, F3".into())
}

/// Every module of dimension `d` over a two-dimensional algebra with basis `1, x`
/// over F2: all `x`-matrices, kept when the action is a module.
fn all_modules_f2(a: &Algebra, unit_index: usize, d: usize) -> Vec<Module> {
    let f = a.field();
    let mut out = Vec::new();
    for bits in 0u32..(1 << (d * d)) {
        let x =
            Matrix::from_entries(f, d, d, (0..d * d).filter(|b| bits >> b & 1 == 1).map(|b| (b / d, b % d, f.one())));
        let id = Matrix::identity(f, d);
        let parts = if unit_index == 0 { [id, x] } else { [x.clone(), id.sub(&x)] };
        let m = Module::new(a, parts[0].hstack(&parts[1])).unwrap();
        if m.validate().passed() {
            out.push(m);
        }
    }
    out
}

/// Direct sums of the given modules with total dimension in `1..=3`.
fn sums_up_to_three(a: &Algebra, blocks: &[Module]) -> Vec<Module> {
    let mut out: Vec<Vec<usize>> = vec![vec![]];
    let mut all = Vec::new();
    while let Some(v) = out.pop() {
        let d: usize = v.iter().map(|&i| blocks[i].dim()).sum();
        if d > 0 {
            let parts: Vec<&Module> = v.iter().map(|&i| &blocks[i]).collect();
            all.push(Module::direct_sum_all(a, &parts));
        }
        let start = v.last().copied().unwrap_or(0);
        for (i, block) in blocks.iter().enumerate().skip(start) {
            if d + block.dim() <= 3 {
                let mut w = v.clone();
                w.push(i);
                out.push(w);
            }
        }
    }
    all
}

struct PhiCase {
    name: String,
    algebra: Algebra,
    /// Split simples as (character, idempotent) pairs for the cover oracle.
    simples: Vec<(Matrix, Matrix)>,
    frobenius: bool,
    modules: Vec<Module>,
}

fn phi_criterion() -> Outcome {
    let mut cases = Vec::new();
    for f in [q(), f2()] {
        let dn = dual_numbers(f);
        let k = Module::from_character(&dn, &Matrix::from_i64(f, &[&[1, 0]]));
        let simples = vec![(Matrix::from_i64(f, &[&[1, 0]]), dn.unit.clone())];
        let mods = if f == q() {
            sums_up_to_three(&dn, &[k, Module::regular(&dn)])
        } else {
            (1..=3).flat_map(|d| all_modules_f2(&dn, 0, d)).collect()
        };
        cases.push(PhiCase {
            name: format!("k[x]/(x²) over {f}"),
            algebra: dn,
            simples,
            frobenius: true,
            modules: mods,
        });

        let kk = split_pair(f);
        let s1 = Module::from_character(&kk, &Matrix::from_i64(f, &[&[1, 0]]));
        let s2 = Module::from_character(&kk, &Matrix::from_i64(f, &[&[0, 1]]));
        let simples =
            vec![(Matrix::from_i64(f, &[&[1, 0]]), kk.basis(0)), (Matrix::from_i64(f, &[&[0, 1]]), kk.basis(1))];
        let mods = if f == q() {
            sums_up_to_three(&kk, &[s1, s2])
        } else {
            (1..=3).flat_map(|d| all_modules_f2(&kk, 1, d)).collect()
        };
        cases.push(PhiCase { name: format!("k×k over {f}"), algebra: kk, simples, frobenius: false, modules: mods });
    }
    let kc2 = group_algebra(&GroupSpec::cyclic(2), f2());
    let simples = vec![(Matrix::from_i64(f2(), &[&[1, 1]]), kc2.unit.clone())];
    let mods = (1..=3).flat_map(|d| all_modules_f2(&kc2, 0, d)).collect();
    cases.push(PhiCase { name: "kC2 over F2".into(), algebra: kc2, simples, frobenius: true, modules: mods });

    let mut checked = 0;
    for PhiCase { name, algebra: a, simples, frobenius, modules: mods } in &cases {
        let targets = sums_up_to_three(a, &[Module::regular(a)]);
        let targets: Vec<&Module> = targets.iter().chain(mods.iter().take(8)).collect();
        for (i, m) in mods.iter().enumerate() {
            let oracle = projective_by_cover(m, simples).unwrap();
            let verdict = phi_projectivity(m, m).unwrap().invertible;
            ensure(verdict == oracle, format!("{name}: module {i} φ verdict {verdict}, oracle {oracle}"))?;
            if oracle {
                for n in &targets {
                    ensure(
                        phi_projectivity(m, n).unwrap().invertible,
                        format!("{name}: φ(M, N) singular for projective M"),
                    )?;
                }
            }
            if *frobenius {
                ensure(is_reflexive(m).unwrap(), format!("{name}: module {i} not reflexive"))?;
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} modules over k[x]/(x²), k×k and kC2 (all modules over F2)"))
}

fn determinism() -> Outcome {
    let opts = Options { seed: 11, ..Options::default() };
    let mut bytes = 0;
    for suite in
        [SuiteName::HopfCheck, SuiteName::Double, SuiteName::Trimodule, SuiteName::Boolean, SuiteName::Reconstruction]
    {
        let a = run_suite(suite, &opts).unwrap().render(Format::Structured);
        let b = run_suite(suite, &opts).unwrap().render(Format::Structured);
        ensure(a == b, format!("{} output differs between runs", suite.as_str()))?;
        bytes += a.len();
    }
    let taft =
        Options { field: Field::prime(7).unwrap(), input: Some("taft:3:2".into()), seed: 3, ..Options::default() };
    let a = run_suite(SuiteName::HopfCheck, &taft).unwrap().render(Format::Structured);
    ensure(a == run_suite(SuiteName::HopfCheck, &taft).unwrap().render(Format::Structured), "taft output differs")?;
    Ok(format!("{} bytes of structured output reproduced exactly", bytes + a.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("antipode-iff-galois-on-catalog", antipode_iff_galois),
        ("one-dim-anti-yd-pairs", one_dim_anti_yd),
        ("drinfeld-double-and-yd-braiding", drinfeld_doubles),
        ("quasitriangular-braiding", quasitriangular),
        ("duoidal-interchange", duoidal),
        ("trimodule-algebras-and-interchange", trimodules),
        ("structure-map-on-free-trimodules", fundamental_theorem),
        ("two-element-monoid-reconstruction", two_element_monoid),
        ("lattice-mackey-crossed-sweeps", lattice_mackey_crossed),
        ("phi-projectivity-criterion", phi_criterion),
        ("deterministic-structured-reports", determinism),
    ];
    let mut failed = 0;
    for (id, run) in criteria {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {id} ({secs:.2}s): {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL {id} ({secs:.2}s): {why}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
