//! One line per acceptance criterion; exits nonzero if any fails.

use std::process::{Command, Stdio};
use std::io::Write;
use std::time::Instant;

use zinbiel::format::{algebra_from_json, algebra_json, parse_json, to_text};
use zinbiel_core::catalog::{build, is_filiform_family, reference_instances, FamilyId, FamilySpec};
use zinbiel_core::exactla::int;
use zinbiel_core::graded::{associated_graded, natural_grading_verdict, NaturalGrading};
use zinbiel_core::maps::{distinguish, invariant_battery, seeded_graded_maps, transport, verify_reduction, Distinction, Reduction};
use zinbiel_core::polysys::{
    cross_validate, generic_superidentity_system, sign_outcome, system_matches_paper, transcribed_system, verify_family,
    Family, RECORDED_SIGN_OUTCOME,
};
use zinbiel_core::series::{is_solvable, nilpotency_index, power_sequence, Nilpotency};
use zinbiel_core::spectra::{char_sequence_at, CharSequence, DEFAULT_SEED};
use zinbiel_core::structure::{
    find_left_annihilating_homogeneous, is_ideal, left_product_ideal, minimal_graded_ideal, rc_monotonicity_check,
    type_n1_structure_check,
};
use zinbiel_core::superalg::{SignConvention, SuperAlgebra, ZinbielVerdict};

type Check = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Check + 'a>);

fn instances() -> Vec<(FamilySpec, SuperAlgebra)> {
    reference_instances()
        .into_iter()
        .map(|s| {
            let a = build(&s).unwrap_or_else(|e| panic!("{s:?}: {e}"));
            (s, a)
        })
        .collect()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn exe(args: &[&str], stdin: &str) -> (i32, String) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_zinbiel"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .expect("spawn zinbiel");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap())
}

fn e1(a: &SuperAlgebra) -> zinbiel_core::superalg::SuperElement {
    a.basis_element(0)
}

fn is_nf(f: FamilyId) -> bool {
    matches!(f, FamilyId::NF1 | FamilyId::NF2 | FamilyId::NF3 | FamilyId::NF4 | FamilyId::NF5)
}

fn c1_identity(all: &[(FamilySpec, SuperAlgebra)]) -> Check {
    let families: std::collections::BTreeSet<_> = all.iter().map(|(s, _)| s.family).collect();
    ensure(families.len() == FamilyId::ALL.len(), || format!("{} families covered", families.len()))?;
    for (spec, a) in all {
        if let ZinbielVerdict::Violation { triple, residual } = a.is_zinbiel() {
            return Err(format!("{spec:?}: residual {residual:?} at {triple:?}"));
        }
    }
    Ok(format!("{} instances over {} families", all.len(), families.len()))
}

fn c2_null_filiform_law() -> Check {
    for d in 3..=11 {
        let a = build(&FamilySpec::null_filiform_super(d)).map_err(|e| e.to_string())?;
        let expected: Vec<usize> = (1..=d + 1).map(|i| d + 1 - i).collect();
        let dims = power_sequence(&a).full_dims();
        ensure(dims == expected, || format!("d={d}: dims {dims:?}"))?;
        ensure(nilpotency_index(&a) == Nilpotency::Index(d + 1), || format!("d={d}: index"))?;
    }
    Ok("d = 3..11".into())
}

fn c3_parity_gate() -> Check {
    let mut rejected = 0;
    for n in 0..=5usize {
        for m in 0..=6usize {
            let (ns, ms) = (n.to_string(), m.to_string());
            let (code, out) = exe(&["catalog", "build", "NullFiliformSuper", "--n", &ns, "--m", &ms], "");
            let allowed = n + m > 0 && (m == n || m == n + 1);
            if allowed {
                ensure(code == 0, || format!("({n},{m}) rejected: {out}"))?;
            } else {
                ensure(code == 2 && out.contains("\"error\""), || format!("({n},{m}) exit {code}"))?;
                rejected += 1;
            }
        }
    }
    Ok(format!("{rejected} patterns rejected with exit 2"))
}

fn c4_charseq(all: &[(FamilySpec, SuperAlgebra)]) -> Check {
    let mut count = 0;
    for (spec, a) in all {
        let got = char_sequence_at(a, &e1(a)).map_err(|e| format!("{spec:?}: {e}"))?;
        if is_filiform_family(spec.family) {
            let want = CharSequence::filiform(a.dim_even(), a.dim_odd());
            ensure(got == want, || format!("{spec:?}: {got:?}"))?;
            count += 1;
        } else if spec.family == FamilyId::NullFiliformAlg {
            ensure(got.c0 == vec![a.dim_even()] && got.c1.is_empty(), || format!("{spec:?}: {got:?}"))?;
            count += 1;
        }
    }
    Ok(format!("{count} instances"))
}

fn displayed_layers(n: usize, m: usize) -> Vec<(usize, usize)> {
    let mut out = vec![(2, 1)];
    for i in 2..=(n - 1).max(m) {
        out.push((usize::from(i < n), usize::from(i <= m)));
    }
    out
}

fn c5_layers(all: &[(FamilySpec, SuperAlgebra)]) -> Check {
    let mut count = 0;
    for (spec, a) in all.iter().filter(|(s, _)| is_nf(s.family)) {
        let ag = associated_graded(a).map_err(|e| format!("{spec:?}: {e}"))?;
        let want = displayed_layers(spec.n, spec.m);
        ensure(ag.layers.layers == want, || format!("{spec:?}: {:?}", ag.layers.layers))?;
        ensure(natural_grading_verdict(a, DEFAULT_SEED) == NaturalGrading::Yes, || format!("{spec:?}: verdict"))?;
        count += 1;
    }
    Ok(format!("{count} NF instances"))
}

fn c6_reductions() -> Check {
    for r in Reduction::ALL {
        let samples = r.seeded_samples(DEFAULT_SEED, 5);
        ensure(samples.len() == 5, || format!("{}: {} samples", r.name(), samples.len()))?;
        for s in &samples {
            let check = verify_reduction(r, s).map_err(|e| format!("{}: {e}", r.name()))?;
            ensure(check.is_isomorphism, || format!("{} at {s:?}: {:?}", r.name(), check.first_failure))?;
        }
    }
    Ok("phi1, phi2, phi3 at 5 samples each".into())
}

fn c7_system() -> Check {
    let mismatch = cross_validate(1, 2, SignConvention::SecondThird, DEFAULT_SEED, 200).map_err(|e| e.to_string())?;
    ensure(mismatch.is_none(), || format!("cross validation: {mismatch:?}"))?;
    for f in Family::ALL {
        let check = verify_family(f, &f.seeded_samples(DEFAULT_SEED, 5)).map_err(|e| e.to_string())?;
        ensure(check.passed(), || format!("family {f}: {:?}", check.failure))?;
    }
    let report = system_matches_paper(&generic_superidentity_system(1, 2), &transcribed_system());
    ensure(report.all_transcribed_matched(), || format!("unmatched {:?}", report.unmatched()))?;
    let outcome = sign_outcome();
    ensure(outcome == RECORDED_SIGN_OUTCOME, || format!("sign outcome {outcome:?}"))?;
    Ok(format!(
        "200 assignments, 8 families, {} transcribed equations matched; first-second sign misses {}",
        outcome.transcribed, outcome.unmatched_first_second
    ))
}

fn c8_structure(all: &[(FamilySpec, SuperAlgebra)]) -> Check {
    for (spec, a) in all {
        let basis: Vec<_> = (0..a.dim()).map(|i| a.basis_element(i)).collect();
        let e = find_left_annihilating_homogeneous(a).map_err(|e| format!("{spec:?}: {e}"))?;
        for y in &basis {
            ensure(a.multiply(&e.element, y).unwrap().is_zero(), || format!("{spec:?}: eZ != 0"))?;
        }
        let mi = minimal_graded_ideal(a).map_err(|e| format!("{spec:?}: {e}"))?;
        ensure(mi.ideal.dim() == 1, || format!("{spec:?}: ideal dim {}", mi.ideal.dim()))?;
        ensure(is_ideal(a, &mi.ideal).unwrap(), || format!("{spec:?}: not an ideal"))?;
        ensure(mi.left_zero && mi.right_zero, || format!("{spec:?}: IZ or ZI nonzero"))?;
        ensure(left_product_ideal(a, &mi.ideal).unwrap().dim() == 0, || format!("{spec:?}: ZI"))?;
        for x in &basis {
            for y in &basis {
                ensure(rc_monotonicity_check(a, x, y).unwrap(), || format!("{spec:?}: RC"))?;
            }
        }
    }
    let z39 = build(&FamilySpec::fixed(FamilyId::LowerZ39)).unwrap();
    let r = type_n1_structure_check(&z39).map_err(|e| e.to_string())?;
    ensure(r.holds(), || format!("z39: {r:?}"))?;
    Ok(format!("{} instances, z39 type n1", all.len()))
}

fn c9_derived(all: &[(FamilySpec, SuperAlgebra)]) -> Check {
    for (spec, a) in all {
        ensure(a.right_supercommutativity_violation().is_none(), || format!("{spec:?}: right supercommutativity"))?;
        ensure(is_solvable(a), || format!("{spec:?}: not solvable"))?;
        match nilpotency_index(a) {
            Nilpotency::Index(s) => ensure(s <= a.dim() + 1, || format!("{spec:?}: index {s}"))?,
            Nilpotency::NotNilpotent => return Err(format!("{spec:?}: not nilpotent")),
        }
    }
    Ok(format!("{} instances", all.len()))
}

fn c10_transport(all: &[(FamilySpec, SuperAlgebra)]) -> Check {
    let mut maps = 0;
    for (k, (spec, a)) in all.iter().filter(|(_, a)| a.dim() == 3).enumerate() {
        let battery = invariant_battery(a, DEFAULT_SEED);
        let dims = power_sequence(a);
        for p in seeded_graded_maps(a.dim_even(), a.dim_odd(), DEFAULT_SEED + k as u64, 20) {
            let b = transport(a, &p).map_err(|e| e.to_string())?;
            ensure(b.is_zinbiel().is_ok(), || format!("{spec:?}: transport not Zinbiel"))?;
            ensure(nilpotency_index(&b) == nilpotency_index(a), || format!("{spec:?}: index"))?;
            let db = power_sequence(&b);
            ensure(
                db.full_dims() == dims.full_dims() && db.even_dims() == dims.even_dims() && db.odd_dims() == dims.odd_dims(),
                || format!("{spec:?}: series dims"),
            )?;
            ensure(invariant_battery(&b, DEFAULT_SEED) == battery, || format!("{spec:?}: battery"))?;
            maps += 1;
        }
    }
    let fixed = |f| build(&FamilySpec::fixed(f)).unwrap();
    let pairs = [
        ("z33|z34", fixed(FamilyId::LowerZ33), fixed(FamilyId::LowerZ34)),
        ("z35|z36", fixed(FamilyId::LowerZ35), fixed(FamilyId::LowerZ36)),
        ("z33|z39", fixed(FamilyId::LowerZ33), fixed(FamilyId::LowerZ39)),
    ];
    let mut used = Vec::new();
    for (name, a, b) in &pairs {
        match distinguish(a, b, DEFAULT_SEED).map_err(|e| e.to_string())? {
            Distinction::Distinguishable(inv) => used.push(format!("{name} by {inv}")),
            Distinction::Inconclusive => return Err(format!("{name} inconclusive")),
        }
    }
    Ok(format!("{maps} maps; {}", used.join(", ")))
}

fn c11_cli(all: &[(FamilySpec, SuperAlgebra)]) -> Check {
    for (spec, a) in all {
        let text = to_text(&algebra_json(a));
        let back = algebra_from_json(&parse_json(&text).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        ensure(&back == a, || format!("{spec:?}: round trip changed the table"))?;
        ensure(to_text(&algebra_json(&back)) == text, || format!("{spec:?}: text not stable"))?;
    }
    // a process pipeline round trip on the exact bytes
    let (_, z34) = exe(&["catalog", "build", "z34"], "");
    let (code, _) = exe(&["check"], &z34);
    ensure(code == 0, || "catalog build z34 | check".into())?;
    let runs: [&[&str]; 3] = [
        &["--seed", "7", "charseq"],
        &["--seed", "7", "classify-verify", "--family", "d", "--samples", "5"],
        &["--seed", "7", "gr"],
    ];
    let nf2 = to_text(&algebra_json(&build(&FamilySpec::new(FamilyId::NF2, 6, 5).with_alpha(int(3))).unwrap()));
    for args in runs {
        let first = exe(args, &nf2);
        let second = exe(args, &nf2);
        ensure(first == second, || format!("{args:?} not reproducible"))?;
        ensure(first.0 == 0, || format!("{args:?} exit {}: {}", first.0, first.1))?;
    }
    Ok(format!("{} members round-trip; seeded runs byte-identical", all.len()))
}

fn main() {
    let start = Instant::now();
    let all = instances();
    let criteria: Vec<Criterion> = vec![
        ("catalog identity", Box::new(|| c1_identity(&all))),
        ("null-filiform dimension law", Box::new(c2_null_filiform_law)),
        ("dimension-parity gate", Box::new(c3_parity_gate)),
        ("characteristic sequences", Box::new(|| c4_charseq(&all))),
        ("natural gradation layers", Box::new(|| c5_layers(&all))),
        ("reduction maps", Box::new(c6_reductions)),
        ("(1,2) polynomial system", Box::new(c7_system)),
        ("structure theory", Box::new(|| c8_structure(&all))),
        ("derived properties", Box::new(|| c9_derived(&all))),
        ("transport invariance", Box::new(|| c10_transport(&all))),
        ("CLI round trip and reproducibility", Box::new(|| c11_cli(&all))),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = std::panic::catch_unwind(std::panic::AssertUnwindSafe(check))
            .unwrap_or_else(|_| Err("panicked".into()));
        let ms = t.elapsed().as_millis();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS {name}: {detail} ({ms} ms)", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL {name}: {why} ({ms} ms)", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed in {:.1}s", criteria.len() - failed, criteria.len(), start.elapsed().as_secs_f64());
    if failed > 0 {
        std::process::exit(1);
    }
}
