//! Two-sided checks of the expansion formulas over families and samples of
//! digraphs. Each suite stops at the first mismatch and reports it.

use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::combinatorics::{
    family_generator, is_proper_circular_arc, partitions, Digraph, DigraphJson, FamilyKind,
};
use crate::cqsf::{
    ao_lambda_polynomial, chromatic_qsym_direct, chromatic_qsym_via_f_m, cycle_p_coefficient,
    n_lambda_polynomials, p_expansion_via_n, sink_generating_polynomial,
};
use crate::cycle_series::cycle_e_expansion_series;
use crate::error::{Error, Result};
use crate::qsym::{e_positivity_report, m_to_e, m_to_p, omega_sym, SymT};
use crate::tpoly::TPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    FBasis,
    PBasis,
    CycleP,
    CycleE,
    Sinks,
    AoLambda,
    Conjecture,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::FBasis,
        Suite::PBasis,
        Suite::CycleP,
        Suite::CycleE,
        Suite::Sinks,
        Suite::AoLambda,
        Suite::Conjecture,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::FBasis => "f-basis",
            Suite::PBasis => "p-basis",
            Suite::CycleP => "cycle-p",
            Suite::CycleE => "cycle-e",
            Suite::Sinks => "sinks",
            Suite::AoLambda => "ao-lambda",
            Suite::Conjecture => "conjecture",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::invalid(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyParams {
    pub max_n: usize,
    /// Restricts the conjecture suite to one family; `None` runs both.
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "ser_family")]
    pub family: Option<FamilyKind>,
    /// Random digraphs added to the f-basis, p-basis and sinks pools.
    pub samples: usize,
    /// Largest size of those random digraphs.
    pub sample_max_n: usize,
    pub seed: u64,
    pub budget: usize,
}

fn ser_family<S: serde::Serializer>(f: &Option<FamilyKind>, s: S) -> std::result::Result<S::Ok, S::Error> {
    let name = match f {
        Some(FamilyKind::Interval) => "interval",
        Some(FamilyKind::Circular) => "circular",
        Some(FamilyKind::Path) => "path",
        Some(FamilyKind::Cycle) => "cycle",
        None => return s.serialize_none(),
    };
    s.serialize_str(name)
}

pub const DEFAULT_SEED: u64 = 0x5eed_c0de;

impl VerifyParams {
    /// Defaults per suite: 200 random digraphs one size above `max_n` for
    /// the f-basis check, 50 one size below for the p-basis and sinks checks.
    pub fn defaults(suite: Suite, max_n: usize) -> Self {
        let (samples, sample_max_n) = match suite {
            Suite::FBasis => (200, max_n + 1),
            Suite::PBasis | Suite::Sinks => (50, max_n.saturating_sub(1).max(1)),
            _ => (0, max_n),
        };
        VerifyParams {
            max_n,
            family: None,
            samples,
            sample_max_n,
            seed: DEFAULT_SEED,
            budget: crate::cqsf::DEFAULT_FACTORIAL_BUDGET,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Counterexample {
    pub graph: DigraphJson,
    pub detail: String,
    pub left: Value,
    pub right: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifyReport {
    pub suite: String,
    pub params: VerifyParams,
    pub status: String,
    /// Number of individual equalities or predicates checked.
    pub checked: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

struct Tally {
    checked: usize,
    failure: Option<Counterexample>,
}

impl Tally {
    fn new() -> Self {
        Tally { checked: 0, failure: None }
    }

    /// Records one comparison; returns `false` once something has failed.
    fn check(&mut self, ok: bool, d: &Digraph, detail: impl FnOnce() -> (String, Value, Value)) -> bool {
        self.checked += 1;
        if !ok && self.failure.is_none() {
            let (detail, left, right) = detail();
            self.failure = Some(Counterexample { graph: d.to_json(), detail, left, right });
        }
        self.failure.is_none()
    }
}

fn tpoly_json(p: &TPoly) -> Value {
    json!(p.coeffs().iter().map(crate::qsym::format_rational).collect::<Vec<_>>())
}

/// Every orientation pattern of the `n(n-1)/2` pairs: absent, `u → v` or
/// `v → u` for `u < v`.
pub fn oriented_digraphs(n: usize) -> impl Iterator<Item = Digraph> {
    let pairs: Vec<(usize, usize)> = (1..=n)
        .flat_map(|u| ((u + 1)..=n).map(move |v| (u, v)))
        .collect();
    let total = 3usize.pow(pairs.len() as u32);
    (0..total).map(move |mut code| {
        let mut edges = Vec::new();
        for &(u, v) in &pairs {
            match code % 3 {
                1 => edges.push((u, v)),
                2 => edges.push((v, u)),
                _ => {}
            }
            code /= 3;
        }
        Digraph::from_edges(n, &edges).expect("generated arcs are valid")
    })
}

/// A random digraph on `n` vertices in which each pair is absent, one-way
/// or bidirected; at least one pair is bidirected when `n ≥ 2`.
pub fn random_digraph_with_bidirected(rng: &mut impl Rng, n: usize) -> Digraph {
    loop {
        let mut edges = Vec::new();
        for u in 1..=n {
            for v in (u + 1)..=n {
                match rng.gen_range(0..4) {
                    1 => edges.push((u, v)),
                    2 => edges.push((v, u)),
                    3 => edges.extend([(u, v), (v, u)]),
                    _ => {}
                }
            }
        }
        let d = Digraph::from_edges(n, &edges).expect("generated arcs are valid");
        if n < 2 || !d.is_oriented() {
            return d;
        }
    }
}

/// A random proper circular arc digraph on `n` vertices, by rejection over
/// oriented graphs with a randomly chosen edge density.
pub fn random_proper_circular_arc(rng: &mut impl Rng, n: usize) -> Digraph {
    loop {
        let density: f64 = rng.gen_range(0.1..0.9);
        let mut edges = Vec::new();
        for u in 1..=n {
            for v in (u + 1)..=n {
                if rng.gen_bool(density) {
                    edges.push(if rng.gen_bool(0.5) { (u, v) } else { (v, u) });
                }
            }
        }
        let d = Digraph::from_edges(n, &edges).expect("generated arcs are valid");
        if is_proper_circular_arc(&d).is_proper() {
            return d;
        }
    }
}

/// `G*_{n,r}` for `1 ≤ n ≤ max_n`, `1 ≤ r ≤ ⌈n/2⌉`.
pub fn circular_family(max_n: usize) -> Vec<Digraph> {
    (1..=max_n)
        .flat_map(|n| (1..=n.div_ceil(2)).map(move |r| family_generator(FamilyKind::Circular, n, r).unwrap()))
        .collect()
}

/// `G_{n,r}` for `1 ≤ n ≤ max_n`, `1 ≤ r ≤ n`.
pub fn interval_family(max_n: usize) -> Vec<Digraph> {
    (1..=max_n)
        .flat_map(|n| (1..=n).map(move |r| family_generator(FamilyKind::Interval, n, r).unwrap()))
        .collect()
}

/// Proper circular arc digraphs used by the symmetry-dependent suites: both
/// banded families up to `max_n`, every proper circular arc orientation on
/// at most 4 vertices, and `samples` random ones on `2..=sample_max_n`
/// vertices.
pub fn proper_circular_arc_pool(max_n: usize, samples: usize, sample_max_n: usize, seed: u64) -> Vec<Digraph> {
    let mut pool = circular_family(max_n);
    pool.extend(interval_family(max_n));
    for n in 1..=max_n.min(4) {
        pool.extend(oriented_digraphs(n).filter(|d| is_proper_circular_arc(d).is_proper()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let n = rng.gen_range(2..=sample_max_n.max(2));
        pool.push(random_proper_circular_arc(&mut rng, n));
    }
    pool
}

/// The `m`-basis form of `X` from the coloring oracle.
fn oracle_m(d: &Digraph, budget: usize) -> Result<SymT> {
    chromatic_qsym_direct(d, budget)?.to_sym_m()
}

fn f_basis(p: &VerifyParams, tally: &mut Tally) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
    let random: Vec<Digraph> = (0..p.samples)
        .map(|_| {
            let n = rng.gen_range(2..=p.sample_max_n.max(2));
            random_digraph_with_bidirected(&mut rng, n)
        })
        .collect();
    let exhaustive = (1..=p.max_n).flat_map(oriented_digraphs);
    for d in exhaustive.chain(random) {
        let direct = chromatic_qsym_direct(&d, p.budget)?;
        let via_f = chromatic_qsym_via_f_m(&d, p.budget)?;
        if !tally.check(direct == via_f, &d, || {
            ("coloring oracle vs F-basis expansion".into(), json!(direct.to_json()), json!(via_f.to_json()))
        }) {
            break;
        }
    }
    Ok(())
}

fn p_basis(p: &VerifyParams, tally: &mut Tally) -> Result<()> {
    let mut pool = circular_family(p.max_n);
    let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
    for _ in 0..p.samples {
        let n = rng.gen_range(2..=p.sample_max_n.max(2));
        pool.push(random_proper_circular_arc(&mut rng, n));
    }
    for d in &pool {
        let direct = chromatic_qsym_direct(d, p.budget)?;
        let via_f = chromatic_qsym_via_f_m(d, p.budget)?;
        if !tally.check(direct == via_f, d, || {
            ("coloring oracle vs F-basis expansion".into(), json!(direct.to_json()), json!(via_f.to_json()))
        }) {
            break;
        }
        let expected = omega_sym(&m_to_p(&direct.to_sym_m()?)?)?;
        let got = p_expansion_via_n(d, p.budget)?;
        if !tally.check(expected == got, d, || {
            ("omega of oracle in p vs N_{G,λ} sums".into(), json!(expected.to_json()), json!(got.to_json()))
        }) {
            break;
        }
    }
    Ok(())
}

fn cycle_p(p: &VerifyParams, tally: &mut Tally) -> Result<()> {
    'outer: for n in 2..=p.max_n {
        let d = family_generator(FamilyKind::Cycle, n, 0)?;
        for (lambda, enumerated) in n_lambda_polynomials(&d, p.budget)? {
            let closed = cycle_p_coefficient(n, &lambda)?;
            if !tally.check(closed == enumerated, &d, || {
                (format!("λ = {lambda}: closed form vs N enumeration"), tpoly_json(&closed), tpoly_json(&enumerated))
            }) {
                break 'outer;
            }
        }
    }
    Ok(())
}

fn cycle_e(p: &VerifyParams, tally: &mut Tally) -> Result<()> {
    if p.max_n < 2 {
        return Ok(());
    }
    let series = cycle_e_expansion_series(p.max_n)?;
    for n in 2..=p.max_n {
        let d = family_generator(FamilyKind::Cycle, n, 0)?;
        let from_series = &series.coefficients[&n];
        let from_oracle = m_to_e(&oracle_m(&d, p.budget)?)?;
        if !tally.check(*from_series == from_oracle, &d, || {
            ("generating function vs oracle".into(), json!(from_series.to_json()), json!(from_oracle.to_json()))
        }) {
            break;
        }
        let report = e_positivity_report(from_series)?;
        if !tally.check(report.all_pass(), &d, || {
            ("palindromic, e-positive, e-unimodal".into(), json!(from_series.to_json()), json!(report))
        }) {
            break;
        }
    }
    Ok(())
}

fn sinks(p: &VerifyParams, tally: &mut Tally) -> Result<()> {
    'outer: for d in proper_circular_arc_pool(p.max_n, p.samples, p.sample_max_n, p.seed) {
        let e = m_to_e(&oracle_m(&d, p.budget)?)?;
        for k in 1..=d.n() {
            let by_length = e
                .terms()
                .iter()
                .filter(|(l, _)| l.len() == k)
                .fold(TPoly::zero(), |acc, (_, c)| &acc + c);
            let by_sinks = sink_generating_polynomial(&d, k)?;
            if !tally.check(by_length == by_sinks, &d, || {
                (format!("k = {k}: Σ_{{l(λ)=k}} c_λ vs sink polynomial"), tpoly_json(&by_length), tpoly_json(&by_sinks))
            }) {
                break 'outer;
            }
        }
    }
    Ok(())
}

fn ao_lambda(p: &VerifyParams, tally: &mut Tally) -> Result<()> {
    let cycles = (2..=p.max_n).map(|n| family_generator(FamilyKind::Cycle, n, 0));
    let paths = (1..=p.max_n).map(|n| family_generator(FamilyKind::Path, n, 0));
    'outer: for d in cycles.chain(paths) {
        let d = d?;
        let e = m_to_e(&oracle_m(&d, p.budget)?)?;
        for lambda in partitions(d.n()) {
            let expected = e.coeff(&lambda);
            let got = ao_lambda_polynomial(&d, &lambda)?;
            if !tally.check(expected == got, &d, || {
                (format!("λ = {lambda}: e-coefficient vs AO_λ"), tpoly_json(&expected), tpoly_json(&got))
            }) {
                break 'outer;
            }
        }
    }
    Ok(())
}

fn conjecture(p: &VerifyParams, tally: &mut Tally) -> Result<()> {
    let mut pool = Vec::new();
    if matches!(p.family, None | Some(FamilyKind::Circular) | Some(FamilyKind::Cycle)) {
        pool.extend(circular_family(p.max_n));
    }
    if matches!(p.family, None | Some(FamilyKind::Interval) | Some(FamilyKind::Path)) {
        pool.extend(interval_family(p.max_n));
    }
    for d in &pool {
        let e = m_to_e(&oracle_m(d, p.budget)?)?;
        let report = e_positivity_report(&e)?;
        if !tally.check(report.all_pass(), d, || {
            ("palindromic, e-positive, e-unimodal".into(), json!(e.to_json()), json!(report))
        }) {
            break;
        }
    }
    Ok(())
}

/// Runs one suite. Resource and input errors are returned as `Err`; a
/// mathematical mismatch is a failed report.
pub fn run_suite(suite: Suite, params: &VerifyParams) -> Result<VerifyReport> {
    crate::cqsf::check_budget(params.max_n.max(if params.samples > 0 { params.sample_max_n } else { 0 }), params.budget)?;
    let mut tally = Tally::new();
    match suite {
        Suite::FBasis => f_basis(params, &mut tally)?,
        Suite::PBasis => p_basis(params, &mut tally)?,
        Suite::CycleP => cycle_p(params, &mut tally)?,
        Suite::CycleE => cycle_e(params, &mut tally)?,
        Suite::Sinks => sinks(params, &mut tally)?,
        Suite::AoLambda => ao_lambda(params, &mut tally)?,
        Suite::Conjecture => conjecture(params, &mut tally)?,
    }
    Ok(VerifyReport {
        suite: suite.name().to_string(),
        params: params.clone(),
        status: if tally.failure.is_none() { "pass" } else { "fail" }.to_string(),
        checked: tally.checked,
        counterexample: tally.failure,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oriented_digraph_counts() {
        assert_eq!(oriented_digraphs(3).count(), 27);
        assert_eq!(oriented_digraphs(4).count(), 729);
        assert!(oriented_digraphs(4).all(|d| d.is_oriented()));
    }

    #[test]
    fn random_generators_respect_their_classes() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 2..=6 {
            assert!(!random_digraph_with_bidirected(&mut rng, n).is_oriented());
            assert!(is_proper_circular_arc(&random_proper_circular_arc(&mut rng, n)).is_proper());
        }
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn small_suites_pass() {
        for s in Suite::ALL {
            let mut p = VerifyParams::defaults(s, 4);
            p.samples = p.samples.min(10);
            let r = run_suite(s, &p).unwrap();
            assert!(r.passed(), "{}: {:?}", s.name(), r.counterexample);
            assert!(r.checked > 0);
        }
    }

    #[test]
    fn first_mismatch_is_kept() {
        let d = Digraph::empty(2).unwrap();
        let mut t = Tally::new();
        assert!(t.check(true, &d, || unreachable!()));
        assert!(!t.check(false, &d, || ("first".into(), json!(1), json!(2))));
        assert!(!t.check(false, &d, || ("second".into(), json!(3), json!(4))));
        assert_eq!(t.checked, 3);
        let c = t.failure.unwrap();
        assert_eq!(c.detail, "first");
        assert_eq!(
            serde_json::to_string(&c).unwrap(),
            r#"{"graph":{"n":2,"edges":[]},"detail":"first","left":1,"right":2}"#
        );
    }

    #[test]
    fn budget_applies_to_suites() {
        let mut p = VerifyParams::defaults(Suite::CycleP, 6);
        p.budget = 5;
        assert!(matches!(run_suite(Suite::CycleP, &p), Err(Error::Budget { .. })));
    }
}
