//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line
//! (run with `cargo test -p puregaps --test acceptance -- --nocapture`).
//!
//! 1. gap count = genus on every catalog curve at desk parameters
//! 2. floor criterion == dimension oracle, exhaustively
//! 3. every closed-form family verifies over its full parameter range
//! 4. Suzuki suite at q0 in {2, 4, 8}
//! 5. Riemann-Hurwitz genus == closed-form genus, degree sums vanish
//! 6. two-point code designs and the printed-parameter audit
//! 7. randomized property suite, >= 10^4 cases per property, fixed seed

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use puregaps::catalog::{self, CatalogCurve};
use puregaps::codes::{self, AuditStatus, TableRow};
use puregaps::families::{self, FamilyId};
use puregaps::kummer::{CGapQuery, KummerCurve, PlaceHandle};
use puregaps::suzuki::SuzukiProfile;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn check(failures: &mut Vec<String>, ok: bool, msg: impl FnOnce() -> String) {
    if !ok {
        failures.push(msg());
    }
}

fn conclude(name: &str, started: Instant, budget: Option<Duration>, mut failures: Vec<String>) {
    let elapsed = started.elapsed();
    if let Some(budget) = budget {
        check(&mut failures, elapsed <= budget, || {
            format!("runtime {elapsed:?} exceeded target {budget:?}")
        });
    }
    if failures.is_empty() {
        println!("{name}: PASS ({elapsed:.2?})");
    } else {
        println!("{name}: FAIL ({elapsed:.2?})");
        for f in &failures {
            println!("  - {f}");
        }
        panic!("{name}: {} issue(s)", failures.len());
    }
}

fn desk_curves() -> Vec<CatalogCurve> {
    vec![
        catalog::gk(2).unwrap(),
        catalog::gk(3).unwrap(),
        catalog::x1(2, 1, 3).unwrap(),
        catalog::x1(2, 2, 5).unwrap(),
        catalog::x2(4, 15).unwrap(),
        catalog::x2(5, 24).unwrap(),
        catalog::x2(7, 48).unwrap(),
        catalog::ggs(2, 5).unwrap(),
    ]
}

#[test]
fn criterion_1_gap_count_equals_genus() {
    let started = Instant::now();
    let mut failures = Vec::new();
    for cat in desk_curves() {
        let g = cat.genus();
        for class in 0..cat.curve.classes.len() {
            if !cat.curve.is_totally_ramified_class(class) {
                continue;
            }
            let place = cat.curve.place(class, 0).unwrap();
            let gaps = cat.curve.gaps_at_place(place).unwrap();
            check(&mut failures, gaps.len() as i128 == g, || {
                format!(
                    "{} class {class}: {} gaps, genus {g}",
                    cat.describe(),
                    gaps.len()
                )
            });
            check(
                &mut failures,
                gaps.iter().all(|&n| (1..=2 * g - 1).contains(&n)),
                || format!("{} class {class}: gap outside [1, 2g-1]", cat.describe()),
            );
        }
    }
    conclude(
        "criterion 1 (gap count = genus)",
        started,
        Some(Duration::from_secs(10)),
        failures,
    );
}

#[test]
fn criterion_2_criterion_equals_oracle_exhaustive() {
    let started = Instant::now();
    let mut failures = Vec::new();
    let c_set: [[i128; 2]; 5] = [[0, 0], [1, 0], [0, 1], [1, 1], [2, 1]];
    let curves = [
        catalog::gk(2).unwrap(),
        catalog::ggs(2, 5).unwrap(),
        catalog::x2(5, 24).unwrap(),
    ];
    for cat in &curves {
        let curve = &cat.curve;
        let g = cat.genus();
        let places = vec![
            cat.resolve_place("P1").unwrap(),
            cat.resolve_place("P2").unwrap(),
        ];
        let mut disagreements = 0u64;
        for n1 in 0..=2 * g {
            for n2 in 0..=2 * g {
                for c in c_set {
                    let q =
                        CGapQuery::new(curve, places.clone(), vec![n1, n2], c.to_vec()).unwrap();
                    let by_def = curve.is_c_gap_by_def(&q).unwrap();
                    let by_criterion = curve.is_c_gap_criterion(&q).unwrap();
                    if by_def != by_criterion {
                        disagreements += 1;
                    }
                }
            }
        }
        check(&mut failures, disagreements == 0, || {
            format!("{}: {disagreements} disagreements", cat.describe())
        });
    }
    conclude(
        "criterion 2 (criterion == oracle, exhaustive)",
        started,
        Some(Duration::from_secs(60)),
        failures,
    );
}

#[test]
fn criterion_3_family_verification() {
    let started = Instant::now();
    let mut failures = Vec::new();
    let runs: [(FamilyId, i128, Option<i128>); 13] = [
        (FamilyId::Prop34, 2, None),
        (FamilyId::Prop34, 3, None),
        (FamilyId::Prop35, 2, None),
        (FamilyId::Prop35, 3, None),
        (FamilyId::Prop36, 2, None),
        (FamilyId::Prop36, 3, None),
        (FamilyId::Prop37, 2, Some(2)),
        (FamilyId::Prop37, 2, Some(3)),
        (FamilyId::Prop38, 4, None),
        (FamilyId::Prop38, 7, None),
        (FamilyId::Prop39, 2, Some(5)),
        (FamilyId::Prop310, 2, Some(5)),
        (FamilyId::Prop310, 2, Some(7)),
    ];
    for (family, q, n) in runs {
        let report = families::verify_family(family, q, n).unwrap();
        check(&mut failures, report.failed == 0, || {
            format!(
                "{family} q={q} n={n:?}: {}/{} passed",
                report.passed, report.total
            )
        });
    }
    // q = 5 is the informational residue for the x2 family: run and report,
    // assert only that it is marked non-asserting.
    let report = families::verify_family(FamilyId::Prop38, 5, None).unwrap();
    check(&mut failures, !report.asserting, || {
        "prop38 q=5 should be informational".to_string()
    });
    println!(
        "  prop38 q=5 (informational, q = 2 mod 3): {}/{} instances hold",
        report.passed, report.total
    );
    conclude("criterion 3 (family verification)", started, None, failures);
}

#[test]
fn criterion_4_suzuki_suite() {
    let started = Instant::now();
    let mut failures = Vec::new();
    for q0 in [2i128, 4, 8] {
        let p = SuzukiProfile::new(q0).unwrap();
        check(&mut failures, p.gaps.len() as i128 == p.genus, || {
            format!("q0={q0}: |gaps| = {} != genus {}", p.gaps.len(), p.genus)
        });
        let image: BTreeSet<i128> = p.gaps.iter().map(|&n| p.beta(n).unwrap()).collect();
        let gap_set: BTreeSet<i128> = p.gaps.iter().copied().collect();
        check(&mut failures, image == gap_set, || {
            format!("q0={q0}: beta is not a bijection of the gap set")
        });
        println!(
            "  q0={q0}: beta involution status: {}",
            p.beta_is_involution()
        );
        let pure: BTreeSet<(i128, i128)> = p.pure_gaps().into_iter().collect();
        let mut family: BTreeSet<(i128, i128)> = BTreeSet::new();
        for eps in 0..=2 * q0 - 3 {
            let (a, b) = p.max_sum_pair(eps).unwrap();
            check(
                &mut failures,
                pure.contains(&(a, b)) && pure.contains(&(b, a)),
                || format!("q0={q0} eps={eps}: ({a},{b}) or swap not pure"),
            );
            family.insert((a, b));
            family.insert((b, a));
        }
        let max_sum = p.max_pure_gap_sum();
        check(&mut failures, max_sum == 2 * p.genus - p.q, || {
            format!("q0={q0}: max sum {max_sum} != 2g-q = {}", 2 * p.genus - p.q)
        });
        let classified: BTreeSet<(i128, i128)> = p.classify_max_sum().into_iter().collect();
        if q0 > 2 {
            check(&mut failures, classified == family, || {
                format!(
                    "q0={q0}: max-sum pure gaps ({}) != closed-form family ({})",
                    classified.len(),
                    family.len()
                )
            });
        } else {
            println!(
                "  q0=2: max-sum set equals closed-form family: {}",
                classified == family
            );
        }
    }
    conclude(
        "criterion 4 (suzuki suite)",
        started,
        Some(Duration::from_secs(120)),
        failures,
    );
}

#[test]
fn criterion_5_genus_formulas_and_degree_sums() {
    let started = Instant::now();
    let mut failures = Vec::new();
    // desk curves plus a q = 0 (mod 3) instance so all three x2 residues run
    let mut curves = desk_curves();
    curves.push(catalog::x2(9, 80).unwrap());
    for cat in &curves {
        let rh = cat.curve.genus().unwrap();
        check(&mut failures, rh == cat.genus_formula_value, || {
            format!(
                "{}: Riemann-Hurwitz {rh} != closed form {}",
                cat.describe(),
                cat.genus_formula_value
            )
        });
        let degree_sum: i128 = cat
            .curve
            .classes
            .iter()
            .map(|c| c.lambda * c.count as i128)
            .sum();
        check(&mut failures, degree_sum == 0, || {
            format!("{}: degree sum {degree_sum}", cat.describe())
        });
        check(&mut failures, cat.curve.validate().is_ok(), || {
            format!("{}: validation violations", cat.describe())
        });
    }
    conclude(
        "criterion 5 (genus formulas, degree sums)",
        started,
        None,
        failures,
    );
}

#[test]
fn criterion_6_code_designs_and_audit() {
    let started = Instant::now();
    let mut failures = Vec::new();

    // GK q=2 design from (1,13), certified pure first
    let gk = catalog::gk(2).unwrap();
    let places = [
        gk.resolve_place("P1").unwrap(),
        gk.resolve_place("P2").unwrap(),
    ];
    check(
        &mut failures,
        gk.curve.is_pure_gap(&places, &[1, 13]).unwrap(),
        || "(1,13) not pure on gk(q=2)".to_string(),
    );
    let d = codes::design_two_point(gk.genus(), gk.rational_places, (1, 13)).unwrap();
    check(
        &mut failures,
        (d.n, d.k, d.deg_g, d.d_bound) == (223, 206, 26, 10),
        || {
            format!(
                "gk design: got ({}, {}, {}, {})",
                d.n, d.k, d.deg_g, d.d_bound
            )
        },
    );

    // Suzuki q0=2 design from (1,19)
    let sz = SuzukiProfile::new(2).unwrap();
    check(&mut failures, sz.pure_gaps().contains(&(1, 19)), || {
        "(1,19) not a suzuki pure gap".to_string()
    });
    let d = codes::design_two_point(sz.genus, sz.q * sz.q + 1, (1, 19)).unwrap();
    check(
        &mut failures,
        (d.n, d.k, d.deg_g, d.d_bound) == (63, 38, 38, 14),
        || {
            format!(
                "suzuki design: got ({}, {}, {}, {})",
                d.n, d.k, d.deg_g, d.d_bound
            )
        },
    );

    // audit findings: GK k and d must be flagged, GK degG must match
    let audit = codes::table1_audit(TableRow::Gk, 2, None).unwrap();
    let col = |name: &str| audit.columns.iter().find(|c| c.column == name).unwrap();
    check(
        &mut failures,
        col("k").status == AuditStatus::Mismatch,
        || format!("gk k column: {:?}", col("k").status),
    );
    check(
        &mut failures,
        col("d").status == AuditStatus::Mismatch,
        || format!("gk d column: {:?}", col("d").status),
    );
    check(
        &mut failures,
        col("degG").status == AuditStatus::Match,
        || format!("gk degG column: {:?}", col("degG").status),
    );

    // suzuki degG printed polynomial disagrees with the identity
    let audit = codes::table1_audit(TableRow::Suzuki, 2, None).unwrap();
    let degg = audit.columns.iter().find(|c| c.column == "degG").unwrap();
    check(&mut failures, degg.status == AuditStatus::Mismatch, || {
        format!("suzuki degG column: {:?}", degg.status)
    });

    // x2 at q=7: the degG polynomial agrees exactly
    let audit = codes::table1_audit(TableRow::X2, 7, None).unwrap();
    let degg = audit.columns.iter().find(|c| c.column == "degG").unwrap();
    check(&mut failures, degg.status == AuditStatus::Match, || {
        format!("x2 degG column: {:?}", degg.status)
    });
    conclude(
        "criterion 6 (code designs and audit)",
        started,
        None,
        failures,
    );
}

/// Module-invariant coverage beyond criterion 2's s = 2 matrix: the two
/// c-gap routes agree on 10^4 random s = 3 queries per curve (the curves
/// with exactly three totally ramified places make (P1, P2, P_inf) the
/// natural triple).
#[test]
fn invariant_criterion_oracle_s3_random() {
    let started = Instant::now();
    let mut failures = Vec::new();
    let mut rng = StdRng::seed_from_u64(SEED ^ 0x53);
    for cat in [catalog::gk(2).unwrap(), catalog::ggs(2, 5).unwrap()] {
        let curve = &cat.curve;
        let g = cat.genus();
        let places = vec![
            cat.resolve_place("P1").unwrap(),
            cat.resolve_place("P2").unwrap(),
            cat.resolve_place("P_inf").unwrap(),
        ];
        let mut disagreements = 0u64;
        for _ in 0..CASES_PER_PROPERTY {
            let n: Vec<i128> = (0..3).map(|_| rng.gen_range(0..=2 * g)).collect();
            let c: Vec<i128> = (0..3).map(|_| rng.gen_range(0..=2)).collect();
            let q = CGapQuery::new(curve, places.clone(), n, c).unwrap();
            if curve.is_c_gap_by_def(&q).unwrap() != curve.is_c_gap_criterion(&q).unwrap() {
                disagreements += 1;
            }
        }
        check(&mut failures, disagreements == 0, || {
            format!("{}: {disagreements} s=3 disagreements", cat.describe())
        });
    }
    conclude(
        "invariant (criterion == oracle, s = 3 random)",
        started,
        None,
        failures,
    );
}

/// Module-invariant coverage: every desk design window 2g-2 < deg(G) < n
/// holds, so `design_two_point` accepts each family's representative gap.
#[test]
fn invariant_desk_designs_fit_window() {
    let started = Instant::now();
    let mut failures = Vec::new();
    let designs: Vec<(String, i128, i128, (i128, i128))> = vec![
        {
            let c = catalog::gk(2).unwrap();
            let i = families::prop34(2, 0, 0).unwrap();
            (c.describe(), c.genus(), c.rational_places, (i.n[0], i.n[1]))
        },
        {
            let c = catalog::gk(3).unwrap();
            let i = families::prop34(3, 0, 0).unwrap();
            (c.describe(), c.genus(), c.rational_places, (i.n[0], i.n[1]))
        },
        {
            let c = catalog::x1(2, 2, 5).unwrap();
            let (_, i) = families::prop37(2, 2, 1).unwrap();
            (c.describe(), c.genus(), c.rational_places, (i.n[0], i.n[1]))
        },
        {
            let c = catalog::x2(4, 15).unwrap();
            let i = families::prop38(4, 0, 0).unwrap();
            (c.describe(), c.genus(), c.rational_places, (i.n[0], i.n[1]))
        },
        {
            let c = catalog::x2(5, 24).unwrap();
            let i = families::prop38(5, 0, 0).unwrap();
            (c.describe(), c.genus(), c.rational_places, (i.n[0], i.n[1]))
        },
        {
            let c = catalog::x2(7, 48).unwrap();
            let i = families::prop38(7, 0, 0).unwrap();
            (c.describe(), c.genus(), c.rational_places, (i.n[0], i.n[1]))
        },
        {
            let c = catalog::ggs(2, 5).unwrap();
            let i = families::prop39(2, 5, 0, 0).unwrap();
            (c.describe(), c.genus(), c.rational_places, (i.n[0], i.n[1]))
        },
        {
            let c = catalog::ggs(2, 5).unwrap();
            let i = families::prop310(2, 5, 0).unwrap();
            (c.describe(), c.genus(), c.rational_places, (i.n[0], i.n[1]))
        },
    ];
    for (label, genus, places, gap) in designs {
        let d = codes::design_two_point(genus, places, gap);
        check(&mut failures, d.is_ok(), || {
            format!("{label}: design from {gap:?} rejected: {d:?}")
        });
    }
    for q0 in [2i128, 4, 8] {
        let p = SuzukiProfile::new(q0).unwrap();
        let gap = p.max_sum_pair(0).unwrap();
        let d = codes::design_two_point(p.genus, p.q * p.q + 1, gap);
        check(&mut failures, d.is_ok(), || {
            format!("suzuki q0={q0}: design from {gap:?} rejected")
        });
    }
    conclude(
        "invariant (desk designs fit 2g-2 < degG < n)",
        started,
        None,
        failures,
    );
}

const CASES_PER_PROPERTY: usize = 10_000;
const SEED: u64 = 0x50524547_41505353; // fixed; reruns are byte-identical

struct Pool {
    curves: Vec<CatalogCurve>,
}

impl Pool {
    fn new() -> Self {
        Pool {
            curves: vec![
                catalog::gk(2).unwrap(),
                catalog::x1(2, 2, 5).unwrap(),
                catalog::x2(4, 15).unwrap(),
                catalog::ggs(2, 5).unwrap(),
            ],
        }
    }

    fn pick<'a>(&'a self, rng: &mut StdRng) -> (&'a KummerCurve, i128, Vec<PlaceHandle>) {
        let cat = &self.curves[rng.gen_range(0..self.curves.len())];
        let curve = &cat.curve;
        let mut tr = Vec::new();
        for (ci, class) in curve.classes.iter().enumerate() {
            if curve.is_totally_ramified_class(ci) {
                for index in 0..class.count.min(3) {
                    tr.push(PlaceHandle { class: ci, index });
                }
            }
        }
        (curve, cat.genus(), tr)
    }

    fn pick_support(&self, rng: &mut StdRng, tr: &[PlaceHandle], s: usize) -> Vec<PlaceHandle> {
        let mut picked = Vec::new();
        while picked.len() < s {
            let p = tr[rng.gen_range(0..tr.len())];
            if !picked.contains(&p) {
                picked.push(p);
            }
        }
        picked
    }
}

#[test]
fn criterion_7_randomized_properties() {
    let started = Instant::now();
    let mut failures = Vec::new();
    let pool = Pool::new();

    // monotone dimension: l(D) <= l(D + P) <= l(D) + 1
    let mut rng = StdRng::seed_from_u64(SEED);
    for case in 0..CASES_PER_PROPERTY {
        let (curve, g, tr) = pool.pick(&mut rng);
        let s = rng.gen_range(1..=3.min(tr.len()));
        let support = pool.pick_support(&mut rng, &tr, s);
        let mut coeffs: Vec<(PlaceHandle, i128)> = support
            .iter()
            .map(|&p| (p, rng.gen_range(-2 * g..=2 * g)))
            .collect();
        let bump = tr[rng.gen_range(0..tr.len())];
        let before = curve.rr_dim(&coeffs).unwrap();
        match coeffs.iter_mut().find(|(p, _)| *p == bump) {
            Some(entry) => entry.1 += 1,
            None => coeffs.push((bump, 1)),
        }
        let after = curve.rr_dim(&coeffs).unwrap();
        if !(before <= after && after <= before + 1) {
            failures.push(format!("monotonicity broken at case {case}"));
            break;
        }
    }

    // degree bound: deg(D) > 2g-2 forces l(D) = deg(D) + 1 - g
    let mut rng = StdRng::seed_from_u64(SEED ^ 1);
    for case in 0..CASES_PER_PROPERTY {
        let (curve, g, tr) = pool.pick(&mut rng);
        let s = rng.gen_range(1..=3.min(tr.len()));
        let support = pool.pick_support(&mut rng, &tr, s);
        let mut coeffs: Vec<(PlaceHandle, i128)> = support
            .iter()
            .map(|&p| (p, rng.gen_range(-g..=2 * g)))
            .collect();
        let deg: i128 = coeffs.iter().map(|&(_, v)| v).sum();
        let target = 2 * g - 1 + rng.gen_range(0..=10);
        coeffs[0].1 += target - deg; // now deg(D) = target > 2g-2
        let dim = curve.rr_dim(&coeffs).unwrap();
        if dim != target + 1 - g {
            failures.push(format!(
                "degree bound broken at case {case}: l = {dim}, deg = {target}, g = {g}"
            ));
            break;
        }
    }

    // cascade: a c-gap with delta = min(c) >= 1 yields delta pure gaps below it
    let mut rng = StdRng::seed_from_u64(SEED ^ 2);
    let mut cascade_hits = 0u64;
    for case in 0..CASES_PER_PROPERTY {
        let (curve, g, tr) = pool.pick(&mut rng);
        let s = rng.gen_range(1..=3.min(tr.len()));
        let support = pool.pick_support(&mut rng, &tr, s);
        let n: Vec<i128> = (0..s).map(|_| rng.gen_range(0..=2 * g)).collect();
        let c: Vec<i128> = (0..s).map(|_| rng.gen_range(1..=3)).collect();
        let query = CGapQuery::new(curve, support.clone(), n.clone(), c.clone()).unwrap();
        if curve.is_c_gap_criterion(&query).unwrap() {
            cascade_hits += 1;
            let delta = *c.iter().min().unwrap();
            for k in 0..delta {
                let shifted: Vec<i128> = n.iter().map(|&v| v - k).collect();
                if !curve.is_pure_gap(&support, &shifted).unwrap() {
                    failures.push(format!(
                        "cascade broken at case {case}, step {k}: n = {n:?}, c = {c:?}"
                    ));
                    break;
                }
            }
        }
    }
    check(&mut failures, cascade_hits > 100, || {
        format!("cascade property exercised only {cascade_hits} times")
    });

    // symmetry: permuting (places, n, c) together preserves c-gap status
    let mut rng = StdRng::seed_from_u64(SEED ^ 3);
    for case in 0..CASES_PER_PROPERTY {
        let (curve, g, tr) = pool.pick(&mut rng);
        let s = rng.gen_range(2..=3.min(tr.len()));
        let support = pool.pick_support(&mut rng, &tr, s);
        let n: Vec<i128> = (0..s).map(|_| rng.gen_range(0..=2 * g)).collect();
        let c: Vec<i128> = (0..s).map(|_| rng.gen_range(0..=2)).collect();
        let mut perm: Vec<usize> = (0..s).collect();
        for i in (1..s).rev() {
            perm.swap(i, rng.gen_range(0..=i));
        }
        let query = CGapQuery::new(curve, support.clone(), n.clone(), c.clone()).unwrap();
        let permuted = CGapQuery::new(
            curve,
            perm.iter().map(|&i| support[i]).collect(),
            perm.iter().map(|&i| n[i]).collect(),
            perm.iter().map(|&i| c[i]).collect(),
        )
        .unwrap();
        let lhs = curve.is_c_gap_criterion(&query).unwrap();
        let rhs = curve.is_c_gap_criterion(&permuted).unwrap();
        if lhs != rhs {
            failures.push(format!("symmetry broken at case {case}"));
            break;
        }
    }

    println!("  {CASES_PER_PROPERTY} cases per property, cascade hits: {cascade_hits}");
    conclude(
        "criterion 7 (randomized properties)",
        started,
        None,
        failures,
    );
}
