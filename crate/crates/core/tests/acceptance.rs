//! Acceptance criteria. Each criterion prints one PASS or FAIL line; the
//! process fails if any criterion fails. All comparisons are exact.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use cqsym::combinatorics::{
    acyclic_orientations, family_generator, is_proper_circular_arc, Digraph, FamilyKind,
    OrientationRecord, Partition, Permutation,
};
use cqsym::cqsf::{
    ao_lambda_polynomial, chromatic_qsym_direct, cycle_p_coefficient, g_descent_set, gap_partition,
    in_n_g_lambda, n_g_lambda, ChainShape, DEFAULT_FACTORIAL_BUDGET as B,
};
use cqsym::cycle_series::cycle_e_expansion_series;
use cqsym::qsym::{e_positivity_report, m_to_e, SymT};
use cqsym::tpoly::{rat, t_bracket, TPoly};
use cqsym::verify::{proper_circular_arc_pool, run_suite, Suite, VerifyParams, DEFAULT_SEED};
use cqsym::Basis;

type Outcome = Result<(), String>;
type Check = fn() -> Outcome;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn suite(suite: Suite, configure: impl FnOnce(&mut VerifyParams)) -> Result<usize, String> {
    let mut p = VerifyParams::defaults(suite, 0);
    configure(&mut p);
    let r = run_suite(suite, &p).map_err(|e| e.to_string())?;
    match r.counterexample {
        None => Ok(r.checked),
        Some(c) => Err(format!("{} counterexample: {}", suite.name(), serde_json::to_string(&c).unwrap())),
    }
}

fn dg(n: usize, edges: &[(usize, usize)]) -> Digraph {
    Digraph::from_edges(n, edges).unwrap()
}

fn part(p: &[usize]) -> Partition {
    Partition::new(p.to_vec()).unwrap()
}

fn sources(rec: &OrientationRecord, n: usize) -> Vec<usize> {
    (1..=n).filter(|&v| rec.arcs.iter().all(|&(_, h)| h != v)).collect()
}

fn f_basis_expansion() -> Outcome {
    let checked = suite(Suite::FBasis, |p| {
        p.max_n = 4;
        p.samples = 200;
        p.sample_max_n = 5;
    })?;
    ensure(checked == 1 + 3 + 27 + 729 + 200, || format!("expected 960 digraphs, checked {checked}"))
}

fn worked_example_c9() -> Outcome {
    let g = family_generator(FamilyKind::Cycle, 9, 0).unwrap().underlying();
    let sigma = Permutation::from_digits("234658971").unwrap();
    let data = g_descent_set(&g, &sigma).map_err(|e| e.to_string())?;
    ensure(data.descents == [3, 5, 7], || format!("DES_G = {:?}", data.descents))?;
    let classes: Vec<Vec<usize>> = (1..=4).map(|r| data.rank_class(r)).collect();
    ensure(classes == [vec![2, 6, 8], vec![3, 7, 9], vec![1, 4], vec![5]], || format!("rank classes {classes:?}"))?;
    ensure(data.rank_class(5).is_empty(), || "unexpected rank 5".into())?;
    ensure(in_n_g_lambda(&g, &sigma, &part(&[3, 2, 2, 1, 1])).unwrap(), || "σ ∉ N_{G,(3,2,2,1,1)}".into())?;
    ensure(!in_n_g_lambda(&g, &sigma, &part(&[3, 2, 2, 2])).unwrap(), || "σ ∈ N_{G,(3,2,2,2)}".into())
}

fn p_basis_expansion() -> Outcome {
    suite(Suite::PBasis, |p| {
        p.max_n = 7;
        p.samples = 50;
        p.sample_max_n = 6;
    })
    .map(drop)
}

fn cycle_p_factorization() -> Outcome {
    suite(Suite::CycleP, |p| p.max_n = 8)?;
    let spot = [
        (part(&[3]), TPoly::from_ints([0, 3, 3])),
        (part(&[2, 1]), TPoly::from_ints([0, 3, 3])),
    ];
    for (lambda, expected) in spot {
        let got = cycle_p_coefficient(3, &lambda).map_err(|e| e.to_string())?;
        ensure(got == expected, || format!("cycle_p_coefficient(3, {lambda}) = {got}"))?;
    }
    // The closed form against N_{C_3,λ} listed permutation by permutation.
    let c3 = family_generator(FamilyKind::Cycle, 3, 0).unwrap();
    let listed = n_g_lambda(&c3.underlying(), &c3, &part(&[3])).unwrap();
    let total = listed.iter().fold(TPoly::zero(), |acc, (_, inv)| &acc + &TPoly::t_pow(*inv));
    ensure(total == TPoly::from_ints([0, 3, 3]), || format!("N_(3) sum = {total}"))
}

fn proper_arc_symmetry() -> Outcome {
    let pool = proper_circular_arc_pool(6, 50, 6, DEFAULT_SEED);
    for d in &pool {
        ensure(is_proper_circular_arc(d).is_proper(), || format!("{:?} is not in the class", d.edges()))?;
        let x = chromatic_qsym_direct(d, B).map_err(|e| e.to_string())?;
        ensure(x.is_symmetric().unwrap(), || format!("X not symmetric for {:?}", d.edges()))?;
    }
    for edges in [[(1, 3), (2, 3)], [(3, 1), (3, 2)]] {
        let x = chromatic_qsym_direct(&dg(3, &edges), B).unwrap();
        ensure(!x.is_symmetric().unwrap(), || format!("{edges:?} reported symmetric"))?;
    }
    let bent = dg(5, &[(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)]);
    ensure(!is_proper_circular_arc(&bent).is_proper(), || "reversed-edge C5 reported proper".into())?;
    let x = chromatic_qsym_direct(&bent, B).unwrap();
    ensure(x.is_symmetric().unwrap(), || "reversed-edge C5 not symmetric".into())
}

fn cycle_e_series() -> Outcome {
    suite(Suite::CycleE, |p| p.max_n = 8)?;
    let series = cycle_e_expansion_series(8).map_err(|e| e.to_string())?;
    let c4 = series.coefficient(4).unwrap();
    let expected = SymT::zero(4, Basis::Elementary)
        .unwrap()
        .with_term(&[4], &TPoly::from_ints([0, 4]) * &t_bracket(3))
        .unwrap()
        .with_term(&[2, 2], TPoly::from_ints([0, 0, 2]))
        .unwrap();
    ensure(*c4 == expected, || format!("X_C4 = {c4}"))?;
    for n in 2..=8 {
        let r = e_positivity_report(series.coefficient(n).unwrap()).unwrap();
        ensure(r.positive && r.palindromic && r.unimodal, || format!("X_C{n}: {r:?}"))?;
    }
    Ok(())
}

fn sink_identity() -> Outcome {
    suite(Suite::Sinks, |p| {
        p.max_n = 6;
        p.samples = 50;
        p.sample_max_n = 6;
    })
    .map(drop)
}

fn ao_lambda() -> Outcome {
    suite(Suite::AoLambda, |p| p.max_n = 8)?;

    let examples = [
        (FamilyKind::Cycle, 9, 3, [4, 3, 2], vec![1, 5, 7]),
        (FamilyKind::Path, 8, 4, [4, 2, 2], vec![1, 4, 7]),
    ];
    for (kind, n, asc, lambda, expected_sources) in examples {
        let d = family_generator(kind, n, 0).unwrap();
        let shape = ChainShape::detect(&d).unwrap();
        let matches: Vec<OrientationRecord> = acyclic_orientations(&d.underlying(), &d)
            .unwrap()
            .into_iter()
            .filter(|r| r.sinks == [2, 6, 8] && r.asc == asc)
            .collect();
        ensure(matches.len() == 1, || format!("{kind:?} {n}: {} orientations with sinks 2,6,8 and {asc} ascents", matches.len()))?;
        let rec = &matches[0];
        ensure(sources(rec, n) == expected_sources, || format!("sources {:?}", sources(rec, n)))?;
        let lambda = part(&lambda);
        let gaps = gap_partition(shape, n, &rec.sinks).unwrap();
        ensure(gaps == lambda, || format!("gap partition {gaps}"))?;

        let c = ao_lambda_polynomial(&d, &lambda).unwrap();
        ensure(c.coeff(asc) >= rat(1), || format!("c_{lambda} = {c} lacks t^{asc}"))?;
        let oracle = m_to_e(&chromatic_qsym_direct(&d, B).unwrap().to_sym_m().unwrap()).unwrap();
        ensure(oracle.coeff(&lambda) == c, || format!("{kind:?} {n}: c_{lambda} = {} vs AO {c}", oracle.coeff(&lambda)))?;
    }
    Ok(())
}

fn conjecture_checker() -> Outcome {
    let circular = suite(Suite::Conjecture, |p| {
        p.max_n = 8;
        p.family = Some(FamilyKind::Circular);
    })?;
    let interval = suite(Suite::Conjecture, |p| {
        p.max_n = 7;
        p.family = Some(FamilyKind::Interval);
    })?;
    let expected_circular: usize = (1..=8usize).map(|n| n.div_ceil(2)).sum();
    let expected_interval: usize = (1..=7).sum();
    ensure(circular == expected_circular && interval == expected_interval, || {
        format!("checked {circular} circular and {interval} interval members")
    })
}

fn specialization() -> Outcome {
    for n in 1..=4 {
        for (n, edges) in common::all_digraphs(n) {
            let d = dg(n, &edges);
            let x = chromatic_qsym_direct(&d, B).unwrap();
            let chi = common::chromatic_polynomial(n, &edges);
            for k in 0..=5 {
                let got = x.principal_specialization(k, &rat(1)).unwrap();
                let want = common::eval(&chi, k as i64);
                ensure(got == rat(want), || format!("{edges:?}, k = {k}: {got} vs χ = {want}"))?;
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [(&str, Check); 10] = [
        ("F-basis expansion", f_basis_expansion),
        ("C9 worked example", worked_example_c9),
        ("p-basis expansion", p_basis_expansion),
        ("cycle p-coefficient factorization", cycle_p_factorization),
        ("symmetry of proper circular arc digraphs", proper_arc_symmetry),
        ("cycle e-expansion generating function", cycle_e_series),
        ("sink count identity", sink_identity),
        ("AO_λ for cycle and path", ao_lambda),
        ("e-positivity and unimodality of banded families", conjecture_checker),
        ("specialization to the chromatic polynomial", specialization),
    ];
    let mut failures = 0;
    for (i, (name, check)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or(p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default())
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("criterion {:>2} PASS  {name} ({secs:.2}s)", i + 1),
            Err(msg) => {
                failures += 1;
                println!("criterion {:>2} FAIL  {name} ({secs:.2}s): {msg}", i + 1);
            }
        }
    }
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
