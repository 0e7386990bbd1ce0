//! Acceptance suite: one test per criterion, each printing a PASS line
//! (run with `--nocapture` to see them). Every tolerance here is exact —
//! the arithmetic is rational, so equality is equality.

use std::time::Instant;

use fujita_core::bundle::{PeLineClass, SlopeProfile};
use fujita_core::catalog::{
    enriques_example_24, enriques_example_47, hirzebruch_is_nef, isotrivial_classes,
    k3_special_class_report, pencil_blowup_numbers, AbelianData, BiellipticGroup, EllFibData,
    EnriquesData, K3Data, SurfaceModel,
};
use fujita_core::engine::{classify, reider_upper_bound};
use fujita_core::lattice::IntersectionLattice;
use fujita_core::oracle::{
    critical_equation_solvable, critical_tuple_search, hirzebruch_adjoint_counterexample,
    hirzebruch_adjoint_oracle, hirzebruch_ample_box, SearchBox,
};
use fujita_core::rational::{gcd_i64, odd_part_is_square, rat, ratio, Rat};

fn assert_fn(model: &SurfaceModel, expected: u32, label: &str) {
    let verdict = classify(model).unwrap_or_else(|e| panic!("{label}: classify failed: {e}"));
    assert_eq!(
        verdict.exact_value(),
        Some(expected),
        "{label}: expected FN = {expected}, got {}",
        verdict.bounds_string()
    );
}

/// Criterion 1 — the engine reproduces every determined value of the
/// headline classification, exactly, in under 5 seconds.
#[test]
fn criterion_1_headline_regression() {
    let start = Instant::now();

    assert_fn(&SurfaceModel::projective_plane(), 3, "projective plane");
    for n in 0..=6 {
        assert_fn(
            &SurfaceModel::hirzebruch(n),
            2,
            &format!("Hirzebruch n={n}"),
        );
    }
    // ruled: stable odd degree → 3, everything else → 2
    for d in [-3i64, -1, 1, 5] {
        let m = SurfaceModel::ruled_surface(SlopeProfile::stable(2, d, false, 2).unwrap()).unwrap();
        assert_fn(&m, 3, &format!("ruled stable d={d}"));
    }
    for d in [-2i64, 0, 2, 4] {
        let m = SurfaceModel::ruled_surface(SlopeProfile::stable(2, d, false, 2).unwrap()).unwrap();
        assert_fn(&m, 2, &format!("ruled stable even d={d}"));
    }
    for d in [-1i64, 0, 3] {
        let m =
            SurfaceModel::ruled_surface(SlopeProfile::semistable(2, d, false, false, 1).unwrap())
                .unwrap();
        assert_fn(&m, 2, &format!("ruled strictly semistable d={d}"));
    }
    // abelian: 2 iff min ample self-intersection ≤ 4, else 0
    for min in [2u32, 4] {
        let m = SurfaceModel::abelian(AbelianData::new(min, false, None).unwrap()).unwrap();
        assert_fn(&m, 2, &format!("abelian min L²={min}"));
    }
    for min in [6u32, 8] {
        let m = SurfaceModel::abelian(AbelianData::new(min, false, None).unwrap()).unwrap();
        assert_fn(&m, 0, &format!("abelian min L²={min}"));
    }
    // bielliptic: always 2
    for g in BiellipticGroup::ALL {
        assert_fn(
            &SurfaceModel::bielliptic(g),
            2,
            &format!("bielliptic {}", g.label()),
        );
    }
    // K3: 2 with the special fibration, 0 without
    assert_fn(
        &SurfaceModel::k3(K3Data {
            has_special_fibration: true,
        }),
        2,
        "K3 with fibration",
    );
    assert_fn(
        &SurfaceModel::k3(K3Data {
            has_special_fibration: false,
        }),
        0,
        "K3 without fibration",
    );
    // Enriques: the two table rows give 1, the unnodal surrogate 2
    assert_fn(
        &SurfaceModel::enriques(enriques_example_24()).unwrap(),
        1,
        "Enriques no. 24",
    );
    assert_fn(
        &SurfaceModel::enriques(enriques_example_47()).unwrap(),
        1,
        "Enriques no. 47",
    );
    assert_fn(
        &SurfaceModel::enriques(EnriquesData::unnodal()).unwrap(),
        2,
        "Enriques unnodal",
    );
    // Kodaira dimension 1
    let section_fibration =
        SurfaceModel::elliptic_kd1(EllFibData::new(true, true, true, vec![], 2).unwrap()).unwrap();
    assert_fn(&section_fibration, 2, "elliptic fibration with section");
    assert_fn(
        &SurfaceModel::isotrivial_example(),
        3,
        "isotrivial fibration",
    );
    // general type
    assert_fn(
        &SurfaceModel::product_of_curves(2, 3),
        2,
        "product of curves",
    );
    assert_fn(
        &SurfaceModel::very_general_hypersurface(5).unwrap(),
        0,
        "very general quintic",
    );
    assert_fn(&SurfaceModel::godeaux_quotient(), 3, "Godeaux quotient");

    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 5, "criterion 1 took {elapsed:?}");
    println!("acceptance criterion 1 (headline regression): PASS ({elapsed:?})");
}

/// Criterion 2 — exhaustive Hirzebruch adjoint enumeration at B = 6 for
/// n ∈ [0,6]: one ample summand admits a non-globally-generated adjoint,
/// two never do, and the enumeration agrees with the closed nef form.
#[test]
fn criterion_2_hirzebruch_oracle() {
    let start = Instant::now();
    let search = SearchBox::new(6).unwrap();

    for n in 0..=6u32 {
        // s = 1: a witness exists, and the canonical witness family is
        // L = S + (n+1)F
        let ce = hirzebruch_adjoint_counterexample(n, 1, search)
            .unwrap_or_else(|| panic!("n = {n}: expected a single-summand witness"));
        assert_eq!(ce.len(), 1);
        assert!(
            !hirzebruch_is_nef(n, ce[0].0 - 2, ce[0].1 - (n as i64 + 2)),
            "counterexample must fail the closed nef form too"
        );
        let witness = (1i64, n as i64 + 1);
        let k_plus_witness = (witness.0 - 2, witness.1 - (n as i64 + 2));
        assert!(
            !hirzebruch_is_nef(n, k_plus_witness.0, k_plus_witness.1),
            "S + (n+1)F must itself be a witness at n = {n}"
        );

        // s = 2: no counterexample
        assert!(hirzebruch_adjoint_oracle(n, 2, search), "n = {n}, s = 2");

        // closed form ⟺ pairing route over the ample box, and every box
        // member is ample per the closed form
        let model = SurfaceModel::hirzebruch(n);
        let s_class = model.lattice().basis_class(0);
        let f_class = model.lattice().basis_class(1);
        for (a, b) in hirzebruch_ample_box(n, search) {
            assert!(fujita_core::catalog::hirzebruch_is_ample(n, a, b));
            let l = model.lattice().class_i64(&[a, b]).unwrap();
            let nef_by_pairing =
                l.pair(&s_class).unwrap() >= rat(0) && l.pair(&f_class).unwrap() >= rat(0);
            assert_eq!(
                nef_by_pairing,
                hirzebruch_is_nef(n, a, b),
                "({a}, {b}) on n = {n}"
            );
        }
    }

    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 30, "criterion 2 took {elapsed:?}");
    println!("acceptance criterion 2 (Hirzebruch adjoint oracle): PASS ({elapsed:?})");
}

/// Criterion 3 — critical tuples for n ∈ [2,6], |d| ≤ 10 at B = 12:
/// nonemptiness ⟺ gcd(n,d) = 1, and for d ≡ 1 (mod n) the canonical
/// witness tuple (aᵢ = 1, deg Mᵢ = (1−d)/n) is found.
#[test]
fn criterion_3_critical_tuples() {
    let start = Instant::now();
    let search = SearchBox::new(12).unwrap();

    for n in 2..=6u32 {
        for d in -10i64..=10 {
            let profile = SlopeProfile::semistable(n, d, false, false, 2).unwrap();
            let found = critical_tuple_search(&profile, search).unwrap();
            let coprime = gcd_i64(n as i64, d) == 1;
            assert_eq!(critical_equation_solvable(n, d), coprime);
            assert_eq!(
                !found.is_empty(),
                coprime,
                "(n, d) = ({n}, {d}): box B = 12 contains a solution iff coprime"
            );
            if d.rem_euclid(n as i64) == 1 {
                let k = (1 - d) / n as i64;
                let witness = vec![PeLineClass::new(1, k); n as usize];
                assert!(
                    found.contains(&witness),
                    "(n, d) = ({n}, {d}): witness tuple (a = 1, deg M = {k}) missing"
                );
            }
        }
    }

    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 60, "criterion 3 took {elapsed:?}");
    println!("acceptance criterion 3 (critical tuples on ℙ(E)): PASS ({elapsed:?})");
}

/// Criterion 4 — exact numeric pins.
#[test]
fn criterion_4_numeric_pins() {
    let start = Instant::now();

    // K3 fibration class reports: (2m−2, 1, m−2), ample ⟺ m ≥ 3
    for m in -10i64..=10 {
        let report = k3_special_class_report(m);
        assert_eq!(report.l_sq, rat(2 * m - 2), "m = {m}");
        assert_eq!(report.l_dot_fiber, rat(1), "m = {m}");
        assert_eq!(report.l_dot_section, rat(m - 2), "m = {m}");
        assert_eq!(report.ample, m >= 3, "m = {m}");
    }

    // isotrivial fibration pins: K·L = 1, L² = 1, F·H = 4, h⁰(F) = 2,
    // h⁰(F+H) = 3, deg Z = 4
    let iso = SurfaceModel::isotrivial_example();
    let classes = isotrivial_classes(&iso).unwrap();
    assert_eq!(
        classes.canonical.pair(&classes.ample_generator).unwrap(),
        rat(1)
    );
    assert_eq!(classes.ample_generator.self_intersection(), rat(1));
    assert_eq!(classes.fiber.pair(&classes.horizontal).unwrap(), rat(4));
    assert_eq!(classes.h0_fiber, 2);
    assert_eq!(classes.h0_fiber_plus_horizontal, 3);
    assert_eq!(classes.base_scheme_degree, 4);

    // bielliptic table: L² column (2,2,2,2,4,4,6) plus the descent value 2
    let expected_l_sq = [2u32, 2, 2, 2, 4, 4, 6];
    for (group, expected) in BiellipticGroup::ALL.iter().zip(expected_l_sq) {
        assert_eq!(group.distinguished_l_sq(), expected, "{}", group.label());
    }
    assert_eq!(BiellipticGroup::Mu3xZ3.descended_l_sq(), Some(2));

    // Godeaux: C₁·C₂ = K² = 1
    let godeaux = SurfaceModel::godeaux_quotient();
    let k = godeaux.lattice().basis_class(0);
    assert_eq!(k.pair(&k).unwrap(), rat(1));

    // pencil blow-up: C² = 1 for d ∈ [3, 10]
    for d in 3..=10u32 {
        let numbers = pencil_blowup_numbers(d).unwrap();
        assert_eq!(numbers.c_sq, rat(1), "d = {d}");
        assert_eq!(numbers.c_dot_h, rat(d as i64), "d = {d}");
        assert_eq!(numbers.c_dot_e, rat(1), "d = {d}");
        assert_eq!(numbers.num_blown_points, d * d - 1, "d = {d}");
    }

    // abelian isogeny rule: L² ≤ 4 rejected ⟺ an odd prime divides #G to an
    // odd power; cross-checked against solvability of 2m² = #G·L²
    let cases = [
        (2u64, false),
        (3, true),
        (5, true),
        (6, true),
        (7, true),
        (10, true),
        (12, true),
    ];
    let is_square = |x: u64| {
        let mut r = 0u64;
        while r * r < x {
            r += 1;
        }
        r * r == x
    };
    for (order, rejects) in cases {
        assert_eq!(!odd_part_is_square(order), rejects, "#G = {order}");
        // 2m² = #G·L² with L² ∈ {2, 4} ⟺ #G or 2#G is a perfect square
        let solvable = is_square(order) || is_square(2 * order);
        assert_eq!(!solvable, rejects, "#G = {order} via 2m² = #G·L²");
        // engine-level consequence
        let model =
            SurfaceModel::abelian(AbelianData::new(6, false, Some(order)).unwrap()).unwrap();
        let v = classify(&model).unwrap();
        if rejects {
            assert_eq!(v.exact_value(), Some(0), "#G = {order}");
            assert!(v
                .trace
                .iter()
                .any(|s| s.rule == "abelian.isogeny-obstruction"));
        }
    }

    let elapsed = start.elapsed();
    println!("acceptance criterion 4 (numeric pins): PASS ({elapsed:?})");
}

/// Criterion 5 — property checks stated by the invariants: exact
/// bilinearity/symmetry over 1000 pseudo-random rational cases, verdict
/// bounds and extreme witnesses on the full catalog sweep, and no
/// contradictory interval intersections.
#[test]
fn criterion_5_property_suites() {
    let start = Instant::now();

    // deterministic linear congruential generator — exact inputs, exact checks
    let mut state = 0x2545F4914F6CDD1Du64;
    let mut next = move || {
        state = state
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        state
    };
    let lattices = [
        IntersectionLattice::new(vec!["a"], vec![vec![1]]).unwrap(),
        IntersectionLattice::new(vec!["a", "b"], vec![vec![0, 1], vec![1, 0]]).unwrap(),
        IntersectionLattice::new(vec!["a", "b"], vec![vec![-3, 1], vec![1, 0]]).unwrap(),
        IntersectionLattice::new(
            vec!["a", "b", "c"],
            vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]],
        )
        .unwrap(),
    ];
    let mut rat_from = |next: &mut dyn FnMut() -> u64| {
        let numer = (next() % 41) as i64 - 20;
        let denom = (next() % 8) as i64 + 1;
        ratio(numer, denom)
    };
    for case in 0..1000 {
        let lat = &lattices[(next() % lattices.len() as u64) as usize];
        let rank = lat.rank();
        let coords =
            |next: &mut dyn FnMut() -> u64,
             rat_from: &mut dyn FnMut(&mut dyn FnMut() -> u64) -> Rat| {
                (0..rank).map(|_| rat_from(next)).collect::<Vec<_>>()
            };
        let a = lat.class(coords(&mut next, &mut rat_from)).unwrap();
        let b = lat.class(coords(&mut next, &mut rat_from)).unwrap();
        let c = lat.class(coords(&mut next, &mut rat_from)).unwrap();
        let alpha = rat_from(&mut next);
        let beta = rat_from(&mut next);
        assert_eq!(a.pair(&b).unwrap(), b.pair(&a).unwrap(), "case {case}");
        let lhs = a
            .scale(&alpha)
            .add(&b.scale(&beta))
            .unwrap()
            .pair(&c)
            .unwrap();
        let rhs = alpha * a.pair(&c).unwrap() + beta * b.pair(&c).unwrap();
        assert_eq!(lhs, rhs, "case {case}");
    }

    // full catalog sweep: verdict bounds, extreme witnesses, intersections
    let mut models: Vec<SurfaceModel> = vec![
        SurfaceModel::projective_plane(),
        SurfaceModel::isotrivial_example(),
        SurfaceModel::godeaux_quotient(),
        SurfaceModel::double_cover_ppav(true),
        SurfaceModel::double_cover_ppav(false),
        SurfaceModel::enriques(enriques_example_24()).unwrap(),
        SurfaceModel::enriques(enriques_example_47()).unwrap(),
        SurfaceModel::enriques(EnriquesData::unnodal()).unwrap(),
        SurfaceModel::k3(K3Data {
            has_special_fibration: true,
        }),
        SurfaceModel::k3(K3Data {
            has_special_fibration: false,
        }),
    ];
    for n in 0..=8 {
        models.push(SurfaceModel::hirzebruch(n));
    }
    for min in [2u32, 4, 6, 8] {
        models.push(SurfaceModel::abelian(AbelianData::new(min, false, None).unwrap()).unwrap());
    }
    models.push(SurfaceModel::abelian(AbelianData::product_of_elliptic_curves()).unwrap());
    for g in BiellipticGroup::ALL {
        models.push(SurfaceModel::bielliptic(g));
    }
    for d in -6i64..=6 {
        models.push(
            SurfaceModel::ruled_surface(SlopeProfile::semistable(2, d, false, false, 1).unwrap())
                .unwrap(),
        );
        models.push(
            SurfaceModel::ruled_surface(SlopeProfile::stable(2, d, false, 2).unwrap()).unwrap(),
        );
    }
    for (g1, g2) in [(0, 0), (0, 2), (1, 1), (2, 2), (2, 5)] {
        models.push(SurfaceModel::product_of_curves(g1, g2));
    }
    for degree in 5..=8 {
        models.push(SurfaceModel::very_general_hypersurface(degree).unwrap());
    }
    for genus in 0..=5 {
        models.push(SurfaceModel::sym_square(genus));
    }
    for d in 3..=8 {
        models.push(SurfaceModel::pencil_blowup(d).unwrap());
    }
    for (sec, irr, even) in [
        (true, true, true),
        (true, true, false),
        (true, false, true),
        (false, true, true),
        (false, false, false),
    ] {
        let multiple = if sec { vec![] } else { vec![2, 2] };
        models.push(
            SurfaceModel::elliptic_kd1(EllFibData::new(sec, irr, even, multiple, 2).unwrap())
                .unwrap(),
        );
    }

    for model in &models {
        // intersection with the Reider bound never contradicts: classify
        // succeeds on every valid model
        let verdict = classify(model).unwrap_or_else(|e| panic!("{}: {e}", model.name()));
        verdict
            .check_surface_invariants()
            .unwrap_or_else(|e| panic!("{}: {e}", model.name()));
        assert!(
            verdict.upper <= reider_upper_bound(model),
            "{}",
            model.name()
        );
        // verdict-3 witness presence is part of the invariants; re-assert
        // explicitly for the extreme models
        if verdict.exact_value() == Some(3) {
            assert!(
                verdict.trace.iter().any(|s| s
                    .witness
                    .as_ref()
                    .is_some_and(fujita_core::verdict::Witness::certifies_extreme)),
                "{}: extreme verdict without unit witness",
                model.name()
            );
        }
    }

    let elapsed = start.elapsed();
    println!("acceptance criterion 5 (property suites): PASS ({elapsed:?})");
}

/// Criterion 6 — the cofinality and fundamental-group realization theorems
/// are not desk-reproducible beyond their numeric skeletons; the
/// pencil-blow-up pins of criterion 4 are the explicit substitution, so this
/// criterion re-asserts exactly those pins together with the engine verdict
/// on the blow-up models.
#[test]
fn criterion_6_birational_cofinality_substitution() {
    let start = Instant::now();
    for d in 3..=10u32 {
        let numbers = pencil_blowup_numbers(d).unwrap();
        assert_eq!(numbers.c_sq, rat(1), "d = {d}");
        assert_eq!(numbers.num_blown_points, d * d - 1, "d = {d}");
        let model = SurfaceModel::pencil_blowup(d).unwrap();
        let verdict = classify(&model).unwrap();
        assert_eq!(verdict.exact_value(), Some(3), "d = {d}");
    }
    let elapsed = start.elapsed();
    println!(
        "acceptance criterion 6 (cofinality substitution): PASS ({elapsed:?}) — the \
         blow-up lattice pins C² = 1 on d²−1 points stand in for the birational \
         cofinality and fundamental-group realization statements, whose proofs are \
         not desk-reproducible"
    );
}
