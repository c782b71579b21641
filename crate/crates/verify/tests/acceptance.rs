//! The ten acceptance criteria, each at zero tolerance. Prints one line per
//! criterion and fails if any criterion fails.

use std::time::Instant;

use torsion_maxwell::dirac::{
    charge, dispersion_solve, make_photon, perturbed_residual, theorem1_check, theorem1_check_with, Branch,
    DiracOperator, PhotonSpec, Sign, SignPair,
};
use torsion_maxwell::lorentz::MapKind;
use torsion_maxwell::report::{Status, VerificationReport};
use torsion_maxwell::sample::Sampler;
use torsion_maxwell::scalar::{rat, ComplexRational};
use verify::scenario::bundled;
use verify::{default_registry, Context};

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn run_check(name: &str, ctx: &Context) -> VerificationReport {
    default_registry().get(name).expect("registered").run(ctx)
}

fn require(report: &VerificationReport, min_cases: usize) -> Outcome {
    if !report.passed() {
        let first = report.residuals.first().map(|r| format!("{}: {}", r.label, r.value)).unwrap_or_default();
        return Err(format!("{:?} with {} residual(s); first {first}", report.status, report.residuals.len()));
    }
    if report.cases < min_cases {
        return Err(format!("only {} cases, need {min_cases}", report.cases));
    }
    Ok(format!("{} cases", report.cases))
}

fn ctx() -> Context {
    Context { seed: 1, count: 50, ..Context::default() }
}

fn algebra_identities() -> Outcome {
    require(&run_check("identities", &ctx()), 50)
}

fn photon_validity() -> Outcome {
    require(&run_check("photon", &ctx()), 8)
}

fn connection_checks() -> Outcome {
    require(&run_check("connection", &ctx()), 31)
}

/// Random instances shared by the Theorem 1 and anti-self-duality criteria.
struct Instance {
    signs: SignPair,
    spinor: torsion_maxwell::dirac::SpinorPair2D,
    a: torsion_maxwell::ExpField,
}

fn instances() -> Vec<Instance> {
    let mut s = Sampler::new(2024);
    (0..120)
        .map(|i| {
            let signs = SignPair::ALL[i % 4];
            let spinor = s.spinor(3);
            let a = if (i / 4) % 2 == 0 { s.constant_potential_2d() } else { s.plane_wave_potential_2d() };
            Instance { signs, spinor, a }
        })
        .collect()
}

fn theorem1(instances: &[Instance]) -> Outcome {
    for (i, inst) in instances.iter().enumerate() {
        let report = theorem1_check(&inst.spinor, &inst.a, inst.signs).map_err(|e| format!("instance {i}: {e}"))?;
        require(&report, 1).map_err(|e| format!("instance {i}: {e}"))?;
    }
    let sweep = run_check("theorem1-sweep", &ctx());
    require(&sweep, 100)?;

    let mut s = Sampler::new(99);
    let signs = SignPair::ALL[3];
    let bad = DiracOperator::two_dimensional(signs).with_negated_term(1, 0, 1);
    let control =
        theorem1_check_with(&s.spinor(3), &s.constant_potential_2d(), signs, &bad).map_err(|e| e.to_string())?;
    if control.status != Status::Fail {
        return Err("negative control was not detected".into());
    }
    Ok(format!("{} direct + {} sweep instances, negative control fails", instances.len(), sweep.cases))
}

fn anti_self_duality(instances: &[Instance]) -> Outcome {
    for (i, inst) in instances.iter().enumerate() {
        let v = torsion_maxwell::dirac::make_electron_candidate(inst.signs, &inst.spinor);
        let r = perturbed_residual(&v, &inst.a, inst.signs.beta).map_err(|e| e.to_string())?;
        let minus_i_beta = -(&ComplexRational::i() * &inst.signs.beta.scalar());
        if r.hodge() != r.scale(&minus_i_beta) {
            return Err(format!("instance {i}: *R != -i beta R"));
        }
    }
    Ok(format!("{} residuals", instances.len()))
}

fn free_particles() -> Outcome {
    require(&run_check("free-particles", &ctx()), 12)
}

/// `(F ^ G)_{0123}` summed over all 24 orderings of full antisymmetric matrices.
fn top_component(f: &[[ComplexRational; 4]; 4], g: &[[ComplexRational; 4]; 4]) -> ComplexRational {
    let mut acc = ComplexRational::zero();
    let mut perm = [0usize, 1, 2, 3];
    for_each_permutation(&mut perm, 0, &mut |p, sign| {
        let term = &f[p[0]][p[1]] * &g[p[2]][p[3]];
        acc = &acc + &term.scale(&rat(sign, 4));
    });
    acc
}

fn for_each_permutation(p: &mut [usize; 4], start: usize, visit: &mut impl FnMut(&[usize; 4], i64)) {
    if start == 4 {
        let mut inversions = 0;
        for i in 0..4 {
            for j in i + 1..4 {
                if p[i] > p[j] {
                    inversions += 1;
                }
            }
        }
        visit(p, if inversions % 2 == 0 { 1 } else { -1 });
        return;
    }
    for i in start..4 {
        p.swap(start, i);
        for_each_permutation(p, start + 1, visit);
        p.swap(start, i);
    }
}

/// `i *(du ^ conj(R du))` for the `alpha = 1`, `beta = 1`, `C = 0` photon,
/// with `du_{mn} = -i (k_m c_n - k_n c_m)` written out by hand.
fn brute_force_witness() -> ComplexRational {
    let i = ComplexRational::i;
    let k = [1, 0, 0, 1].map(ComplexRational::from);
    let c = [ComplexRational::zero(), ComplexRational::one(), -i(), ComplexRational::zero()];
    let f: [[ComplexRational; 4]; 4] =
        std::array::from_fn(|m| std::array::from_fn(|n| -(&i() * &(&(&k[m] * &c[n]) - &(&k[n] * &c[m])))));
    let g: [[ComplexRational; 4]; 4] = std::array::from_fn(|m| {
        std::array::from_fn(|n| {
            let flips = (m == 3) as i64 + (n == 3) as i64;
            let v = f[m][n].conj();
            if flips == 1 {
                -v
            } else {
                v
            }
        })
    });
    // raising 0123 contributes (+1)(-1)^3 and eps^{0123} eps_{0123} pairs to the scalar
    let top = top_component(&f, &g);
    &i() * &(-top)
}

fn charge_criterion() -> Outcome {
    let electron = PhotonSpec { signs: SignPair::new(Sign::Plus, Sign::Plus), c: ComplexRational::zero() };
    let value = charge(&make_photon(&electron)).map_err(|e| e.to_string())?;
    let brute = brute_force_witness();
    if value.witness != ComplexRational::from(4) || brute != value.witness {
        return Err(format!("witness {} (brute force {brute}), expected 4", value.witness));
    }
    let scenarios: Vec<_> = bundled().into_iter().filter(|s| s.expect_charge.is_some()).collect();
    let families: Vec<_> = scenarios.iter().map(|s| (s.signs.beta, s.expect_charge.unwrap())).collect();
    if !families.contains(&(Sign::Plus, Sign::Minus)) || !families.contains(&(Sign::Minus, Sign::Plus)) {
        return Err(format!("bundled charge scenarios do not cover both families: {families:?}"));
    }
    for s in &scenarios {
        let orthochronous = s.maps.iter().filter(|m| m.map.is_orthochronous()).count();
        let improper = s.maps.iter().any(|m| m.kind == MapKind::ReverseX3);
        let gauges: Vec<_> = s.gauges.iter().map(|g| g.0.clone()).collect();
        if orthochronous < 4
            || !improper
            || gauges != [ComplexRational::zero(), ComplexRational::one(), ComplexRational::i()]
        {
            return Err(format!("{}: sweep too small", s.name));
        }
    }
    let report = run_check("charge", &Context { scenarios, ..ctx() });
    require(&report, 2)?;
    Ok("c = -1 / +1, witness 4, 4 maps, 3 gauges, conjugation flips".into())
}

fn dispersion_criterion() -> Outcome {
    for a0 in [rat(1, 10), rat(-1, 4), rat(3, 7)] {
        for signs in SignPair::ALL {
            let result = dispersion_solve(&a0, signs).map_err(|e| e.to_string())?;
            let (expected, branch) = match signs.beta {
                Sign::Plus => (rat(1, 1) + &a0, Branch::Electron),
                Sign::Minus => (rat(1, 1) - &a0, Branch::Positron),
            };
            let photon =
                charge(&make_photon(&PhotonSpec { signs, c: ComplexRational::zero() })).map_err(|e| e.to_string())?;
            if result.epsilon != expected || result.branch != branch || Branch::from_charge(photon.c) != branch {
                return Err(format!("A0 = {a0}, {signs}: got {result:?}"));
            }
        }
    }
    let report = run_check("dispersion", &Context { a0: vec![rat(1, 10), rat(-1, 4), rat(3, 7)], ..ctx() });
    require(&report, 12)
}

fn conjugation_symmetry() -> Outcome {
    require(&run_check("conjugation", &ctx()), 54)
}

fn dirac_3d() -> Outcome {
    require(&run_check("dirac-3d", &ctx()), 50)
}

#[test]
fn acceptance() {
    let started = Instant::now();
    let shared = instances();
    let criteria: Vec<Criterion> = vec![
        ("algebra identities", Box::new(algebra_identities)),
        ("photon validity", Box::new(photon_validity)),
        ("connection", Box::new(connection_checks)),
        ("theorem 1 equivalence", Box::new(|| theorem1(&shared))),
        ("anti-self-duality", Box::new(|| anti_self_duality(&shared))),
        ("free particles", Box::new(free_particles)),
        ("charge", Box::new(charge_criterion)),
        ("dispersion", Box::new(dispersion_criterion)),
        ("conjugation symmetry", Box::new(conjugation_symmetry)),
        ("3D specialization", Box::new(dirac_3d)),
    ];
    let mut failed = Vec::new();
    for (n, (name, criterion)) in criteria.iter().enumerate() {
        match criterion() {
            Ok(detail) => println!("criterion {:>2} {name}: PASS ({detail})", n + 1),
            Err(why) => {
                println!("criterion {:>2} {name}: FAIL ({why})", n + 1);
                failed.push(n + 1);
            }
        }
    }
    println!("acceptance finished in {:.2}s", started.elapsed().as_secs_f64());
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
