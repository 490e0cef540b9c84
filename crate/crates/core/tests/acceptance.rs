//! One line per acceptance criterion. Criteria listed in `EXPECTED_FAILURES`
//! fail because the published data disagrees with the exact computation;
//! the run exits non-zero on any other failure, or if one of those starts
//! passing.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use htype_core::clifford::{
    is_skew_adjoint_form, minimal_admissible_module, satisfies_clifford_relations, Signature,
    MINIMAL_DIMENSION_FIXTURE,
};
use htype_core::exact::ExactMatrix;
use htype_core::htype::{build_htype, heisenberg_uniqueness_check, verify_su33_fixture};
use htype_core::prolong::{
    identify_complex_type, killing_report, prolong, ProlongError, ProlongationResult,
    DEFAULT_MAX_DEGREE,
};
use htype_core::rhe::{dn_pair_choice_search, exceptional_screen, rho, rho_decomposition, verify_bn_empty};
use htype_core::rootsys::{Family, SimpleType};
use htype_core::tables::{complex_name, contact_growth, ReproduceOptions, ReproducerRegistry};
use rand::{Rng, SeedableRng};

/// Criteria whose published values differ from what is computed.
const EXPECTED_FAILURES: &[u32] = &[7, 8];

type Outcome = Result<String, String>;

fn check(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn reproduce(id: &str, long: bool) -> Result<htype_core::tables::Reproduction, String> {
    let opts = ReproduceOptions {
        long,
        ..ReproduceOptions::default()
    };
    ReproducerRegistry::default()
        .reproduce(id, &opts)
        .map_err(|e| e.to_string())
}

fn table_match(id: &str, rows: usize) -> Outcome {
    let r = reproduce(id, false)?;
    check(r.is_match(), r.summary().trim_end().replace('\n', "; "))?;
    check(r.expected.rows.len() == rows, format!("{} expected rows", r.expected.rows.len()))?;
    Ok(format!("{} rows match", r.computed.rows.len()))
}

fn c1() -> Outcome {
    let got: Vec<u64> = [20, 16, 15, 32, 64, 8].iter().map(|&n| rho(n).unwrap()).collect();
    check(got == [4, 9, 1, 10, 12, 8], format!("rho values {got:?}"))?;
    let mut cases = 0;
    for alpha in 0..5u32 {
        for beta in 0..4u32 {
            let value = 8 * alpha as u64 + (1 << beta);
            if value > 40 {
                continue;
            }
            for u in (1..=15u64).step_by(2) {
                let n = u << (4 * alpha + beta);
                let d = rho_decomposition(n).unwrap();
                check(
                    (d.u, d.alpha, d.beta, d.rho) == (u, alpha, beta, value),
                    format!("decomposition of {n}: {d:?}"),
                )?;
                cases += 1;
            }
        }
    }
    Ok(format!("6 values and {cases} case-formula checks"))
}

fn c2() -> Outcome {
    let r = reproduce("2", false)?;
    check(r.is_match(), r.summary())?;
    Ok(format!("{} gradings, formulas equal root counts", r.computed.rows.len()))
}

fn c4() -> Outcome {
    let got: BTreeSet<(String, Vec<usize>)> = exceptional_screen()
        .into_iter()
        .filter(|v| v.dims.d2 > 1 && v.candidate)
        .map(|v| (v.ty.to_string(), v.sigma))
        .collect();
    let want: BTreeSet<(String, Vec<usize>)> =
        [("E6".to_string(), vec![1, 6]), ("F4".to_string(), vec![4])].into();
    check(got == want, format!("survivors {got:?}"))?;
    Ok("survivors E6 Σ{1,6}, F4 Σ4".into())
}

fn c5() -> Outcome {
    let bn = verify_bn_empty(50);
    check(bn.candidates().count() == 0, "a B_n candidate survived")?;
    let dn = dn_pair_choice_search(50);
    let got: Vec<(usize, Vec<usize>)> = dn.iter().map(|v| (v.ty.rank, v.sigma.clone())).collect();
    check(got == vec![(5, vec![4, 5])], format!("D_n survivors {got:?}"))?;
    Ok(format!("B_n: 0 of {} cases; D_n: only D5 Σ{{4,5}}", bn.cases.len()))
}

fn c7() -> Outcome {
    let r = reproduce("3a", false)?;
    if r.is_match() {
        return Ok("10 rows match".into());
    }
    let cells: Vec<String> = r.diffs.iter().map(|d| d.to_string()).collect();
    Err(cells.join("; "))
}

fn c8() -> Outcome {
    let rep = verify_su33_fixture();
    let status = format!(
        "listed labels {} of 64 entries differ, relabeled {} differ; J by signed identity differs for k={:?}, by dual pairing for k={:?}; Clifford {}, membership {}",
        rep.literal_mismatches.len(),
        rep.relabeled_mismatches.len(),
        rep.strict_j_mismatches.iter().map(|k| k + 1).collect::<Vec<_>>(),
        rep.dual_j_mismatches.iter().map(|k| k + 1).collect::<Vec<_>>(),
        rep.clifford_relations && rep.clifford_relations_library_order,
        rep.membership_failures.is_empty() && rep.outside_center.is_empty(),
    );
    let literal = rep.literal_mismatches.is_empty()
        && rep.strict_j_mismatches.is_empty()
        && rep.clifford_relations
        && rep.skew_adjoint
        && rep.membership_failures.is_empty()
        && rep.outside_center.is_empty();
    if literal {
        Ok(status)
    } else {
        Err(status)
    }
}

fn c9() -> Outcome {
    let mut checked = 0;
    for n in 1..=8 {
        for sig in Signature::with_total(n) {
            let rep = minimal_admissible_module(sig).map_err(|e| e.to_string())?;
            check(satisfies_clifford_relations(&rep.generators, sig), format!("{sig}: relations"))?;
            check(is_skew_adjoint_form(&rep.generators, &rep.form), format!("{sig}: skew"))?;
            check(
                !rep.form.determinant().unwrap().is_zero(),
                format!("{sig}: degenerate form"),
            )?;
            let (alg, metric) = build_htype(&rep).map_err(|e| e.to_string())?;
            let js: Vec<ExactMatrix> = metric.reconstruct_j(&alg).map_err(|e| e.to_string())?;
            check(js == rep.generators, format!("{sig}: J reconstruction"))?;
            checked += 1;
        }
    }
    for &((r, s), d) in MINIMAL_DIMENSION_FIXTURE {
        let rep = minimal_admissible_module(Signature::new(r, s).unwrap()).unwrap();
        check(rep.module_dim == d, format!("({r},{s}): dim {} not {d}", rep.module_dim))?;
    }
    Ok(format!(
        "{checked} signatures, {} fixture dimensions",
        MINIMAL_DIMENSION_FIXTURE.len()
    ))
}

fn run(r: usize, s: usize, max_degree: i32) -> Result<ProlongationResult, String> {
    let rep = minimal_admissible_module(Signature::new(r, s).unwrap()).map_err(|e| e.to_string())?;
    let (alg, _) = build_htype(&rep).map_err(|e| e.to_string())?;
    prolong(&alg, max_degree).map_err(|e| e.to_string())
}

fn c10() -> Outcome {
    let t = reproduce("8", false)?;
    check(t.is_match(), t.summary())?;
    for n in 1..=4 {
        for sig in Signature::with_total(n) {
            let res = run(sig.r, sig.s, DEFAULT_MAX_DEGREE)?;
            if n <= 2 {
                let prefix = &res.growth_vector[..5];
                check(
                    !res.terminated && prefix == contact_growth(n, 5),
                    format!("{sig}: {:?}", res.growth_vector),
                )?;
            } else {
                check(res.terminated, format!("{sig}: not terminated"))?;
                check(killing_report(&res.algebra).nondegenerate, format!("{sig}: Killing degenerate"))?;
                let want = match (n, sig.r, sig.s) {
                    (3, 3, 0) | (3, 1, 2) => "sp(6,C)",
                    (3, _, _) => "sp(8,C)",
                    _ => "sl(6,C)",
                };
                let got = identify_complex_type(&res).unique().map(|(t, _)| complex_name(t));
                check(got.as_deref() == Some(want), format!("{sig}: {got:?}"))?;
            }
        }
    }
    Ok("14 signatures, Killing non-degenerate and types identified for r+s = 3, 4".into())
}

fn c11() -> Outcome {
    let t = reproduce("9", false)?;
    check(t.is_match(), t.summary())?;
    for n in 5..=6 {
        for sig in Signature::with_total(n) {
            let res = run(sig.r, sig.s, DEFAULT_MAX_DEGREE)?;
            check(
                res.terminated && res.growth_vector.len() == 3,
                format!("{sig}: {:?}", res.growth_vector),
            )?;
        }
    }
    Ok("13 signatures vanish at degree 1 with the listed g0".into())
}

fn c12() -> Outcome {
    let t = reproduce("9", true)?;
    check(t.is_match() && t.skipped.is_empty(), t.summary())?;
    let f4 = SimpleType::new(Family::F, 4).unwrap();
    let e6 = SimpleType::new(Family::E, 6).unwrap();
    let cases = [
        ((7, 0), vec![7, 8, 22, 8, 7], f4),
        ((3, 4), vec![7, 8, 22, 8, 7], f4),
        ((8, 0), vec![8, 16, 30, 16, 8], e6),
        ((7, 1), vec![8, 16, 30, 16, 8], e6),
        ((4, 4), vec![8, 16, 30, 16, 8], e6),
        ((3, 5), vec![8, 16, 30, 16, 8], e6),
    ];
    for ((r, s), growth, ty) in cases {
        let res = run(r, s, DEFAULT_MAX_DEGREE)?;
        check(res.growth_vector == growth, format!("({r},{s}): {:?}", res.growth_vector))?;
        check(killing_report(&res.algebra).nondegenerate, format!("({r},{s}): Killing degenerate"))?;
        let got = identify_complex_type(&res).unique().map(|(t, _)| t);
        check(got == Some(ty), format!("({r},{s}): {got:?}"))?;
    }
    Ok("F4 for (7,0), (3,4); E6 for (8,0), (7,1), (4,4), (3,5)".into())
}

fn c13() -> Outcome {
    // Invariants on every prolongation in the growth tables.
    let mut runs = 0;
    for n in 1..=8 {
        for sig in Signature::with_total(n) {
            let degree = if n <= 2 { 4 } else { DEFAULT_MAX_DEGREE };
            let res = run(sig.r, sig.s, degree)?;
            check(res.jacobi_violations().is_empty(), format!("{sig}: Jacobi"))?;
            check(res.is_transitive(), format!("{sig}: transitivity"))?;
            if res.terminated {
                check(killing_report(&res.algebra).off_diagonal_zero, format!("{sig}: Killing blocks"))?;
            }
            runs += 1;
        }
    }
    // Degree zero against brute-force derivations on seeded random algebras.
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(13);
    let mut compared = 0;
    for _ in 0..300 {
        let d1 = rng.gen_range(2..=6);
        let d2 = rng.gen_range(1..=(8 - d1).min(3));
        let mut c = vec![vec![vec![0i64; d2]; d1]; d1];
        for a in 0..d1 {
            for b in a + 1..d1 {
                for t in 0..d2 {
                    let v = if rng.gen_bool(0.4) { rng.gen_range(-2..=2) } else { 0 };
                    c[a][b][t] = v;
                    c[b][a][t] = -v;
                }
            }
        }
        let alg = common::algebra(d1, d2, &c);
        match prolong(&alg, 0) {
            Err(ProlongError::NotGenerated) => {
                check(!common::brackets_span(d1, d2, &c), "spanning algebra rejected")?
            }
            Err(e) => return Err(e.to_string()),
            Ok(res) => {
                let want = common::derivation_dim(d1, d2, &c);
                check(res.growth_vector[2] == want, format!("dim g0 {} vs {want}", res.growth_vector[2]))?;
                compared += 1;
            }
        }
    }
    // Rank and kernel identities on seeded random matrices.
    for _ in 0..300 {
        let r = rng.gen_range(1..=9);
        let cols = rng.gen_range(1..=9);
        let rows: Vec<Vec<i64>> = (0..r).map(|_| (0..cols).map(|_| rng.gen_range(-3..=3)).collect()).collect();
        let m = ExactMatrix::from_i64_rows(&rows);
        let (rref, _) = m.rref();
        check(rref.rref().0 == rref, "rref not idempotent")?;
        let k = m.kernel_vectors();
        check(m.rank() + k.len() == cols, "rank + nullity")?;
        for v in &k {
            check(m.mul_vec(v).unwrap().iter().all(|x| x.is_zero()), "kernel vector")?;
        }
    }
    Ok(format!(
        "{runs} prolongations, {compared} random g0 comparisons, 300 random matrices"
    ))
}

fn c14() -> Outcome {
    let rep = heisenberg_uniqueness_check(12).map_err(|e| e.to_string())?;
    check(rep.closed_forms_ok(), "a kernel dimension differs from its closed form")?;
    for (n, survivors) in rep.survivors() {
        let contact: Vec<(usize, usize)> = rep
            .rows
            .iter()
            .filter(|r| r.n == n && r.d2 == 1)
            .map(|r| (r.i, r.j))
            .collect();
        check(survivors == contact, format!("n={n}: {survivors:?} vs {contact:?}"))?;
    }
    Ok(format!("{} gradings, survivors are the contact gradings", rep.rows.len()))
}

fn main() -> ExitCode {
    let criteria: Vec<(u32, &str, fn() -> Outcome)> = vec![
        (1, "rho values and case formula", c1),
        (2, "dimension formulas against root counts", c2),
        (3, "exceptional gradings table", || table_match("5", 11)),
        (4, "exceptional screen survivors", c4),
        (5, "B_n and D_n screens", c5),
        (6, "C_n rank table", || table_match("4a", 12)),
        (7, "A_n families table", c7),
        (8, "su(3,3) example", c8),
        (9, "Clifford modules", c9),
        (10, "growth vectors, centre dimension up to 4", c10),
        (11, "growth vectors, centre dimension 5 and 6", c11),
        (12, "growth vectors, centre dimension 7 and 8", c12),
        (13, "property suites", c13),
        (14, "Heisenberg uniqueness", c14),
    ];
    let mut unexpected = 0;
    for (id, name, f) in criteria {
        let start = Instant::now();
        let out = f();
        let secs = start.elapsed().as_secs_f64();
        let expected_fail = EXPECTED_FAILURES.contains(&id);
        let (tag, detail) = match (&out, expected_fail) {
            (Ok(d), false) => ("PASS", d.clone()),
            (Err(d), true) => ("FAIL (expected)", d.clone()),
            (Ok(d), true) => {
                unexpected += 1;
                ("PASS (unexpected)", d.clone())
            }
            (Err(d), false) => {
                unexpected += 1;
                ("FAIL", d.clone())
            }
        };
        println!("criterion {id:>2} {tag}: {name} [{secs:.2}s] {detail}");
    }
    if unexpected == 0 {
        println!("acceptance: all outcomes as expected");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {unexpected} unexpected outcome(s)");
        ExitCode::FAILURE
    }
}
