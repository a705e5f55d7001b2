//! End-to-end acceptance checks. Each test covers one criterion and prints a
//! single PASS/FAIL line; the frozen reference values were computed with an
//! independent implementation.

use povmlab_core::bloch::{povm_bloch_vectors, pure_state_from_bloch, BlochVector};
use povmlab_core::catalog::{
    builtin_sic, cube_vertices, dodecahedron_vertices, hoggar_sic, hs_povm,
    icosahedron_vertices, octahedron_vertices, pvm_from_basis, tetrahedron_vertices, BuiltinSic,
    FiducialRecord, PolyhedronName, PolyhedronSpec,
};
use povmlab_core::certify::{build_certificate, Decomposition, SignVerdict};
use povmlab_core::design::is_t_design;
use povmlab_core::entropy::{
    index_of_coincidence, jones_average, relative_entropy_from_bloch, shannon_entropy,
    sic_min_relative_entropy, AlphaKind,
};
use povmlab_core::hermite::{check_from_above, hermite_interpolate_fn, HermiteSpec};
use povmlab_core::invariants::PrimaryInvariant;
use povmlab_core::linalg::C64;
use povmlab_core::optimize::{
    optimize, verify_maximizer_set, Objective, OptConfig, Sense,
};
use povmlab_core::quantum::{Povm, PureState};
use povmlab_core::random::{average_relative_entropy, haar_bloch, haar_state};
use povmlab_core::Tolerances;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn hoggar_fiducial() -> FiducialRecord {
    let s = 1.0 / 12f64.sqrt();
    let mut v = vec![C64::new(s, 0.0); 8];
    v[0] = C64::new(-s, 2.0 * s);
    FiducialRecord::new(8, v, "acceptance fixture").unwrap()
}

fn hs(name: PolyhedronName) -> Povm {
    hs_povm(&PolyhedronSpec::new(name).unwrap()).unwrap()
}

fn states_of(vs: &[[f64; 3]]) -> Vec<PureState> {
    vs.iter()
        .map(|v| pure_state_from_bloch(&BlochVector::qubit(v[0], v[1], v[2])).unwrap())
        .collect()
}

fn bloch_of(vs: &[[f64; 3]]) -> Vec<BlochVector> {
    vs.iter()
        .map(|v| BlochVector::qubit(v[0], v[1], v[2]))
        .collect()
}

fn report(criterion: &str, failures: &[String]) {
    if failures.is_empty() {
        println!("acceptance {criterion}: PASS");
    } else {
        println!("acceptance {criterion}: FAIL");
        for f in failures {
            println!("  - {f}");
        }
        panic!("{criterion} failed");
    }
}

#[test]
fn criterion_1_sic_closed_form() {
    let mut failures = Vec::new();
    // closed form ln d - ((d-1)/d) ln(d+1) to five decimals
    for (d, expected) in [(2usize, 0.14384), (3, 0.17442), (8, 0.15687)] {
        let got = sic_min_relative_entropy(d);
        if (got - expected).abs() >= 5e-6 {
            failures.push(format!("closed form d={d}: {got} vs {expected}"));
        }
    }
    // direct evaluation at every SIC state matches the closed form to 1e-10
    let sics: Vec<(usize, Povm)> = vec![
        (2, builtin_sic(BuiltinSic::Tetrahedral).unwrap()),
        (3, builtin_sic(BuiltinSic::Hesse).unwrap()),
        (8, hoggar_sic(&hoggar_fiducial()).unwrap()),
    ];
    for (d, povm) in &sics {
        let vs = povm_bloch_vectors(povm).unwrap();
        let closed = sic_min_relative_entropy(*d);
        for w in &vs {
            let h = relative_entropy_from_bloch(w, &vs).unwrap();
            if (h - closed).abs() >= 1e-10 {
                failures.push(format!("d={d}: direct {h} vs closed {closed}"));
                break;
            }
        }
    }
    report("criterion 1 (SIC closed form)", &failures);
}

#[test]
fn criterion_2_optimizer_matches_reference_table() {
    // (POVM, min relative entropy, max relative entropy, maximizer orbit)
    let cases: Vec<(PolyhedronName, f64, f64, Vec<[f64; 3]>)> = vec![
        (
            PolyhedronName::Tetrahedron,
            0.1438410,
            0.2876821,
            tetrahedron_vertices(),
        ),
        (PolyhedronName::Octahedron, 0.1774404, 0.2310491, cube_vertices()),
        (PolyhedronName::Cube, 0.1774404, 0.2157616, octahedron_vertices()),
        (
            PolyhedronName::Icosahedron,
            0.1899655,
            0.2018851,
            dodecahedron_vertices(),
        ),
        (
            PolyhedronName::Dodecahedron,
            0.1899655,
            0.1968595,
            icosahedron_vertices(),
        ),
        (
            PolyhedronName::Cuboctahedron,
            0.1844344,
            0.2027326,
            octahedron_vertices(),
        ),
        (
            PolyhedronName::Icosidodecahedron,
            0.1909913,
            0.1948586,
            icosahedron_vertices(),
        ),
    ];
    let mut failures = Vec::new();
    for (name, min_hrel, max_hrel, maximizers) in cases {
        let povm = hs(name);
        let max_run = optimize(
            &povm,
            &OptConfig {
                starts: 256,
                seed: 7,
                ..OptConfig::default()
            },
        )
        .unwrap();
        if (max_run.relative_entropy - min_hrel).abs() >= 5e-5 {
            failures.push(format!(
                "{name:?}: min relative entropy {} vs {min_hrel}",
                max_run.relative_entropy
            ));
        }
        let found: Vec<PureState> = max_run.optima.iter().map(|o| o.state.clone()).collect();
        let expected = states_of(&maximizers);
        let m = verify_maximizer_set(&found, &expected, 1.0 - 1e-6);
        if !m.ok {
            failures.push(format!("{name:?}: maximizer set mismatch {m:?}"));
        }
        let min_run = optimize(
            &povm,
            &OptConfig {
                sense: Sense::Minimize,
                starts: 128,
                seed: 8,
                ..OptConfig::default()
            },
        )
        .unwrap();
        if (min_run.relative_entropy - max_hrel).abs() >= 5e-5 {
            failures.push(format!(
                "{name:?}: max relative entropy {} vs {max_hrel}",
                min_run.relative_entropy
            ));
        }
    }
    report("criterion 2 (optimizer vs reference table)", &failures);
}

#[test]
fn criterion_3_certificates() {
    let mut failures = Vec::new();
    let tol = Tolerances::default();
    let mut rng = ChaCha8Rng::seed_from_u64(31);

    // constant-bound certificates: the three SICs and the cube/octahedron pair
    let constant_cases: Vec<(Povm, Vec<BlochVector>, f64)> = {
        let tetra = builtin_sic(BuiltinSic::Tetrahedral).unwrap();
        let tetra_vs = povm_bloch_vectors(&tetra).unwrap();
        let hesse = builtin_sic(BuiltinSic::Hesse).unwrap();
        let hesse_vs = povm_bloch_vectors(&hesse).unwrap();
        let hoggar = hoggar_sic(&hoggar_fiducial()).unwrap();
        let hoggar_vs = povm_bloch_vectors(&hoggar).unwrap();
        vec![
            (tetra, tetra_vs, 0.1438410),
            (hesse, hesse_vs, 0.1744163),
            (hoggar, hoggar_vs, 0.1568699),
            (
                hs(PolyhedronName::Cube),
                bloch_of(&octahedron_vertices()),
                0.1774404,
            ),
            (
                hs(PolyhedronName::Octahedron),
                bloch_of(&cube_vertices()),
                0.1774404,
            ),
        ]
    };
    for (povm, cand, expected) in &constant_cases {
        match build_certificate(povm, cand, None, &tol, &mut rng) {
            Ok(r) => {
                if !matches!(r.decomposition, Decomposition::Constant { .. }) {
                    failures.push(format!("{}: expected constant bound", povm.label()));
                }
                if (r.certified_min_relative_entropy - expected).abs() >= 1e-6 {
                    failures.push(format!(
                        "{}: certified {} vs {expected}",
                        povm.label(),
                        r.certified_min_relative_entropy
                    ));
                }
                if let Some(msg) = certified_bounds_optimizer(povm, r.certified_value) {
                    failures.push(msg);
                }
            }
            Err(e) => failures.push(format!("{}: {e}", povm.label())),
        }
    }

    // invariant-fit certificates with the expected sign of B
    let fit_cases: Vec<(PolyhedronName, Vec<[f64; 3]>, PrimaryInvariant, bool, f64)> = vec![
        (
            PolyhedronName::Icosahedron,
            dodecahedron_vertices(),
            PrimaryInvariant::I6p,
            true,
            0.1899655,
        ),
        (
            PolyhedronName::Cuboctahedron,
            octahedron_vertices(),
            PrimaryInvariant::I4,
            true,
            0.1844344,
        ),
        (
            PolyhedronName::Dodecahedron,
            icosahedron_vertices(),
            PrimaryInvariant::I6p,
            false,
            0.1899655,
        ),
        (
            PolyhedronName::Icosidodecahedron,
            icosahedron_vertices(),
            PrimaryInvariant::I6p,
            false,
            0.1909913,
        ),
    ];
    for (name, cand, inv, positive, expected) in fit_cases {
        let povm = hs(name);
        match build_certificate(&povm, &bloch_of(&cand), None, &tol, &mut rng) {
            Ok(r) => {
                match r.decomposition {
                    Decomposition::InvariantFit { invariant, b, .. } => {
                        if invariant != inv {
                            failures.push(format!("{name:?}: invariant {}", invariant.name()));
                        }
                        if (b > 0.0) != positive {
                            failures.push(format!("{name:?}: B = {b:e}, wrong sign"));
                        }
                    }
                    _ => failures.push(format!("{name:?}: expected invariant fit")),
                }
                let want = if positive {
                    SignVerdict::PositiveAtInvariantMax
                } else {
                    SignVerdict::NegativeAtInvariantMin
                };
                if r.sign_verdict != want {
                    failures.push(format!("{name:?}: verdict {:?}", r.sign_verdict));
                }
                if (r.certified_min_relative_entropy - expected).abs() >= 1e-6 {
                    failures.push(format!(
                        "{name:?}: certified {} vs {expected}",
                        r.certified_min_relative_entropy
                    ));
                }
                if let Some(msg) = certified_bounds_optimizer(&povm, r.certified_value) {
                    failures.push(msg);
                }
            }
            Err(e) => failures.push(format!("{name:?}: {e}")),
        }
    }
    report("criterion 3 (optimality certificates)", &failures);
}

/// The certified maximum must dominate whatever the optimizer finds.
fn certified_bounds_optimizer(povm: &Povm, certified_value: f64) -> Option<String> {
    let run = optimize(
        povm,
        &OptConfig {
            starts: 32,
            seed: 33,
            ..OptConfig::default()
        },
    )
    .unwrap();
    if run.entropy > certified_value + 1e-8 {
        Some(format!(
            "{}: optimizer entropy {} exceeds certified bound {certified_value}",
            povm.label(),
            run.entropy
        ))
    } else {
        None
    }
}

#[test]
fn criterion_4_monte_carlo_average() {
    let mut failures = Vec::new();
    let cases: Vec<(usize, Povm)> = vec![
        (2, builtin_sic(BuiltinSic::Tetrahedral).unwrap()),
        (3, builtin_sic(BuiltinSic::Hesse).unwrap()),
    ];
    for (d, povm) in cases {
        let mut rng = ChaCha8Rng::seed_from_u64(41 + d as u64);
        let mc = average_relative_entropy(&povm, 100_000, &mut rng).unwrap();
        let exact = jones_average(d);
        let sigmas = (mc.estimate - exact).abs() / mc.stderr;
        if sigmas >= 3.0 {
            failures.push(format!(
                "d={d}: estimate {} vs {exact} is {sigmas:.2} sigma (stderr {})",
                mc.estimate, mc.stderr
            ));
        }
    }
    report("criterion 4 (Haar-average Monte Carlo)", &failures);
}

#[test]
fn criterion_5_structural_properties() {
    let mut failures = Vec::new();
    let tol = Tolerances::default();
    let mut rng = ChaCha8Rng::seed_from_u64(51);

    // every catalog POVM validates
    let mut all: Vec<Povm> = vec![
        builtin_sic(BuiltinSic::Tetrahedral).unwrap(),
        builtin_sic(BuiltinSic::Hesse).unwrap(),
        builtin_sic(BuiltinSic::Generic3(1.0)).unwrap(),
        hoggar_sic(&hoggar_fiducial()).unwrap(),
        pvm_from_basis(&(0..3).map(|i| PureState::basis_state(3, i)).collect::<Vec<_>>())
            .unwrap(),
    ];
    for name in [
        PolyhedronName::Tetrahedron,
        PolyhedronName::Octahedron,
        PolyhedronName::Cube,
        PolyhedronName::Icosahedron,
        PolyhedronName::Dodecahedron,
        PolyhedronName::Cuboctahedron,
        PolyhedronName::Icosidodecahedron,
        PolyhedronName::Ngon(7),
    ] {
        all.push(hs(name));
    }
    for povm in &all {
        let v = povm.validate(&tol);
        if !v.accepted() {
            failures.push(format!("{} fails validation: {v:?}", povm.label()));
        }
    }

    // Bloch inner-product relation tr(rho sigma) = ((d-1) u.v + 1)/d
    for d in [2usize, 3, 4, 8] {
        for _ in 0..5 {
            let a = haar_state(d, &mut rng).to_density();
            let b = haar_state(d, &mut rng).to_density();
            let overlap = a.matrix().trace_product(b.matrix()).re;
            let u = povmlab_core::bloch::bloch_vector(&a);
            let v = povmlab_core::bloch::bloch_vector(&b);
            let rhs = ((d as f64 - 1.0) * u.dot(&v) + 1.0) / d as f64;
            if (overlap - rhs).abs() >= 1e-10 {
                failures.push(format!("Bloch relation d={d}: {overlap} vs {rhs}"));
            }
        }
    }

    // SIC Bloch configurations are projective 2-designs; the index of
    // coincidence at any pure state is 2/(d(d+1))
    for (d, povm) in [
        (2usize, builtin_sic(BuiltinSic::Tetrahedral).unwrap()),
        (3, builtin_sic(BuiltinSic::Hesse).unwrap()),
        (8, hoggar_sic(&hoggar_fiducial()).unwrap()),
    ] {
        let vs = povm_bloch_vectors(&povm).unwrap();
        let probes: Vec<BlochVector> = (0..100).map(|_| haar_bloch(d, &mut rng)).collect();
        let design = is_t_design(&vs, 2, &probes);
        if !design.ok {
            failures.push(format!("d={d} SIC is not a 2-design: {design:?}"));
        }
        let expected_ioc = 2.0 / (d as f64 * (d as f64 + 1.0));
        for _ in 0..1000 {
            let psi = haar_state(d, &mut rng);
            let p = povm.outcome_probabilities_pure(&psi).unwrap();
            let ioc = index_of_coincidence(&p);
            if (ioc - expected_ioc).abs() >= 1e-10 {
                failures.push(format!("d={d}: IoC {ioc} vs {expected_ioc}"));
                break;
            }
        }
    }

    // every maximizer candidate orbit is a spherical 2-design
    {
        let probes: Vec<BlochVector> = (0..100).map(|_| haar_bloch(2, &mut rng)).collect();
        for (name, orbit) in [
            ("tetrahedron", tetrahedron_vertices()),
            ("cube", cube_vertices()),
            ("octahedron", octahedron_vertices()),
            ("icosahedron", icosahedron_vertices()),
            ("dodecahedron", dodecahedron_vertices()),
        ] {
            let vs: Vec<BlochVector> = orbit
                .iter()
                .map(|v| BlochVector::qubit(v[0], v[1], v[2]))
                .collect();
            if !is_t_design(&vs, 2, &probes).ok {
                failures.push(format!("{name} orbit is not a 2-design"));
            }
        }
    }

    // Hermite interpolants dominate h on the certificate node sets
    for (d, nodes) in [
        (2usize, vec![(-1.0 / 3f64.sqrt(), 2), (1.0 / 3f64.sqrt(), 2)]),
        (2, vec![(-1.0 / 3.0, 2), (1.0, 1)]),
        (3, vec![(-1.0 / 8.0, 2), (1.0, 1)]),
    ] {
        let interval = (-1.0 / (d as f64 - 1.0), 1.0);
        let spec = HermiteSpec::new(nodes, interval).unwrap();
        let p = hermite_interpolate_fn(
            &spec,
            |t| povmlab_core::entropy::h_function(t, d).unwrap(),
            |_, t| povmlab_core::entropy::h_derivative(t, d).unwrap(),
        )
        .unwrap();
        let r = check_from_above(
            &p,
            |t| povmlab_core::entropy::h_function(t, d).unwrap(),
            interval,
            &spec.nodes,
            2000,
        );
        if !r.ok {
            failures.push(format!("domination fails for d={d}: {r:?}"));
        }
    }

    // PVM: uniform-modulus states with arbitrary phases reach ln d exactly
    let basis: Vec<PureState> = (0..3).map(|i| PureState::basis_state(3, i)).collect();
    let pvm = pvm_from_basis(&basis).unwrap();
    for phases in [[0.0, 0.0, 0.0], [0.3, 1.1, -0.4], [2.0, -2.0, 0.5]] {
        let s = 1.0 / 3f64.sqrt();
        let amps: Vec<C64> = phases
            .iter()
            .map(|&t: &f64| C64::new(s * t.cos(), s * t.sin()))
            .collect();
        let psi = PureState::new(amps).unwrap();
        let h = shannon_entropy(&pvm.outcome_probabilities_pure(&psi).unwrap()).unwrap();
        if (h - 3f64.ln()).abs() >= 1e-12 {
            failures.push(format!("PVM torus state entropy {h} vs ln 3"));
        }
    }
    let skew = PureState::normalized(vec![
        C64::new(0.9, 0.0),
        C64::new(0.3, 0.1),
        C64::new(0.2, 0.0),
    ])
    .unwrap();
    let h = shannon_entropy(&pvm.outcome_probabilities_pure(&skew).unwrap()).unwrap();
    if h >= 3f64.ln() - 1e-6 {
        failures.push("non-uniform state reaches the PVM entropy bound".to_string());
    }

    // alpha-entropy maximizers coincide with the Shannon ones for the
    // cube/octahedron pair
    for alpha in [0.5, 1.5] {
        for (name, expected) in [
            (PolyhedronName::Cube, octahedron_vertices()),
            (PolyhedronName::Octahedron, cube_vertices()),
        ] {
            for kind in [AlphaKind::Tsallis, AlphaKind::Renyi] {
                let res = optimize(
                    &hs(name),
                    &OptConfig {
                        objective: Objective::AlphaEntropy { alpha, kind },
                        starts: 96,
                        seed: 52,
                        ..OptConfig::default()
                    },
                )
                .unwrap();
                let found: Vec<PureState> =
                    res.optima.iter().map(|o| o.state.clone()).collect();
                let m = verify_maximizer_set(&found, &states_of(&expected), 1.0 - 1e-6);
                if !m.ok {
                    failures.push(format!(
                        "alpha={alpha} {kind:?} {name:?}: maximizer mismatch {m:?}"
                    ));
                }
            }
        }
    }
    report("criterion 5 (structural properties)", &failures);
}
