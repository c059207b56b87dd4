use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::Zero;

use super::{render_terms, Basis, QSymT};
use crate::combinatorics::{compositions, partitions, Partition};
use crate::error::{Error, Result};
use crate::tpoly::{Rational, TPoly};

/// A homogeneous degree-`n` symmetric function with `Q[t]` coefficients in
/// one of the `m`, `e`, `p` bases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymT {
    n: usize,
    basis: Basis,
    terms: BTreeMap<Partition, TPoly>,
}

impl SymT {
    pub fn zero(n: usize, basis: Basis) -> Result<Self> {
        if !basis.is_symmetric_basis() {
            return Err(Error::invalid(format!("{basis} is not a symmetric function basis")));
        }
        Ok(SymT { n, basis, terms: BTreeMap::new() })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> &BTreeMap<Partition, TPoly> {
        &self.terms
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, key: Partition, coeff: &TPoly) -> Result<()> {
        if key.weight() != self.n {
            return Err(Error::invalid(format!("partition {key:?} does not have weight {}", self.n)));
        }
        let mut entry = self.terms.remove(&key).unwrap_or_default();
        entry += coeff;
        if !entry.is_zero() {
            self.terms.insert(key, entry);
        }
        Ok(())
    }

    pub fn with_term(mut self, parts: &[usize], coeff: TPoly) -> Result<Self> {
        self.add_term(Partition::new(parts.to_vec())?, &coeff)?;
        Ok(self)
    }

    pub fn coeff(&self, key: &Partition) -> TPoly {
        self.terms.get(key).cloned().unwrap_or_default()
    }

    pub fn scale(&self, c: &TPoly) -> SymT {
        let mut out = SymT { n: self.n, basis: self.basis, terms: BTreeMap::new() };
        for (k, v) in &self.terms {
            let p = v * c;
            if !p.is_zero() {
                out.terms.insert(k.clone(), p);
            }
        }
        out
    }

    fn require(&self, basis: Basis) -> Result<()> {
        if self.basis != basis {
            return Err(Error::invalid(format!("expected basis {basis}, got {}", self.basis)));
        }
        Ok(())
    }

    /// Expands an `m`-basis function into `M`, one term per rearrangement.
    pub fn to_qsym_m(&self) -> Result<QSymT> {
        self.require(Basis::Monomial)?;
        let mut out = QSymT::zero(self.n, Basis::QuasiMonomial)?;
        for comp in compositions(self.n) {
            if let Some(c) = self.terms.get(&comp.sorted()) {
                out.add_term(comp.into(), c)?;
            }
        }
        Ok(out)
    }

    pub fn is_palindromic(&self) -> bool {
        super::quasi::palindromic(self.terms.values())
    }

    /// Terms in reverse lexicographic order of their partitions.
    pub fn sorted_terms(&self) -> impl Iterator<Item = (&Partition, &TPoly)> {
        self.terms.iter().rev()
    }

    pub fn to_json(&self) -> super::PolyJson {
        super::PolyJson::from_terms(
            self.n,
            self.basis,
            self.sorted_terms().map(|(k, v)| (k.parts().to_vec(), v)),
        )
    }

    pub fn from_json(j: &super::PolyJson) -> Result<Self> {
        let basis: Basis = j.basis.parse()?;
        let mut out = SymT::zero(j.n, basis)?;
        for (key, coeff) in j.parse_terms()? {
            out.add_term(Partition::new(key)?, &coeff)?;
        }
        Ok(out)
    }
}

impl fmt::Display for SymT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        render_terms(f, self.basis.tag(), self.sorted_terms().map(|(k, v)| (k.parts(), v)))
    }
}

type MonomialExpansion = HashMap<Partition, i128>;

/// `e_λ` and `p_λ` written in the monomial basis, for every `λ ⊢ n`.
#[derive(Debug)]
pub struct TransitionTable {
    pub n: usize,
    /// Reverse lexicographic order.
    pub partitions: Vec<Partition>,
    pub e_in_m: HashMap<Partition, MonomialExpansion>,
    pub p_in_m: HashMap<Partition, MonomialExpansion>,
}

fn sorted_nonzero(v: &[usize]) -> Partition {
    Partition::from_parts(v.iter().copied().filter(|&x| x > 0).collect()).expect("positive parts")
}

/// Product of two monomial expansions of degrees `df` and `dg`. The
/// coefficient of `m_μ` is the coefficient of `x^μ`, found by splitting the
/// exponent vector `μ` into `a + b` in every way.
fn monomial_product(f: &MonomialExpansion, df: usize, g: &MonomialExpansion, dg: usize) -> MonomialExpansion {
    fn splits(
        mu: &[usize],
        i: usize,
        left: usize,
        a: &mut Vec<usize>,
        f: &MonomialExpansion,
        g: &MonomialExpansion,
        acc: &mut i128,
    ) {
        if i == mu.len() {
            if left == 0 {
                let b: Vec<usize> = mu.iter().zip(a.iter()).map(|(m, x)| m - x).collect();
                if let (Some(x), Some(y)) = (f.get(&sorted_nonzero(a)), g.get(&sorted_nonzero(&b))) {
                    *acc += x * y;
                }
            }
            return;
        }
        let rest_capacity: usize = mu[i + 1..].iter().sum();
        for ai in 0..=mu[i].min(left) {
            if left - ai > rest_capacity {
                continue;
            }
            a.push(ai);
            splits(mu, i + 1, left - ai, a, f, g, acc);
            a.pop();
        }
    }

    let mut out = HashMap::new();
    for mu in partitions(df + dg) {
        let mut acc = 0i128;
        splits(mu.parts(), 0, df, &mut Vec::new(), f, g, &mut acc);
        if acc != 0 {
            out.insert(mu, acc);
        }
    }
    out
}

fn expand_product(lambda: &Partition, factor: impl Fn(usize) -> MonomialExpansion) -> MonomialExpansion {
    let mut acc: MonomialExpansion = HashMap::from([(Partition::new(vec![]).unwrap(), 1)]);
    let mut degree = 0;
    for &k in lambda.parts() {
        acc = monomial_product(&acc, degree, &factor(k), k);
        degree += k;
    }
    acc
}

impl TransitionTable {
    pub fn build(n: usize) -> Self {
        let parts = partitions(n);
        let e_k = |k: usize| HashMap::from([(Partition::new(vec![1; k]).unwrap(), 1i128)]);
        let p_k = |k: usize| HashMap::from([(Partition::new(vec![k]).unwrap(), 1i128)]);
        let e_in_m = parts.iter().map(|l| (l.clone(), expand_product(l, e_k))).collect();
        let p_in_m = parts.iter().map(|l| (l.clone(), expand_product(l, p_k))).collect();
        TransitionTable { n, partitions: parts, e_in_m, p_in_m }
    }

    /// Shared, lazily built table for degree `n`.
    pub fn get(n: usize) -> Arc<TransitionTable> {
        static CACHE: OnceLock<Mutex<HashMap<usize, Arc<TransitionTable>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(t) = cache.lock().expect("transition cache poisoned").get(&n) {
            return Arc::clone(t);
        }
        let built = Arc::new(TransitionTable::build(n));
        cache
            .lock()
            .expect("transition cache poisoned")
            .entry(n)
            .or_insert(built)
            .clone()
    }
}

fn expand_into_m(s: &SymT, rows: &HashMap<Partition, MonomialExpansion>) -> Result<SymT> {
    let mut out = SymT::zero(s.n, Basis::Monomial)?;
    for (lambda, coeff) in &s.terms {
        for (mu, &c) in &rows[lambda] {
            out.add_term(mu.clone(), &coeff.scale(&Rational::from_integer(BigInt::from(c))))?;
        }
    }
    Ok(out)
}

/// Peels basis elements off the residual in `order`; each entry names the
/// basis element and its pivot column in the `m` basis. Rows later in the
/// order must vanish on earlier pivot columns.
fn triangular_solve(
    s: &SymT,
    target: Basis,
    rows: &HashMap<Partition, MonomialExpansion>,
    order: impl Iterator<Item = (Partition, Partition)>,
) -> Result<SymT> {
    let mut residual = s.terms.clone();
    let mut out = SymT::zero(s.n, target)?;
    for (lambda, pivot) in order {
        let Some(r) = residual.get(&pivot).cloned() else {
            continue;
        };
        let row = &rows[&lambda];
        let lead = Rational::from_integer(BigInt::from(row[&pivot]));
        let b = r.scale(&(Rational::from_integer(1.into()) / lead));
        for (mu, &c) in row {
            let delta = b.scale(&Rational::from_integer(BigInt::from(c)));
            let entry = residual.entry(mu.clone()).or_default();
            *entry = &*entry - &delta;
            if entry.is_zero() {
                residual.remove(mu);
            }
        }
        out.add_term(lambda, &b)?;
    }
    debug_assert!(residual.values().all(TPoly::is_zero));
    Ok(out)
}

pub fn m_to_e(s: &SymT) -> Result<SymT> {
    s.require(Basis::Monomial)?;
    let table = TransitionTable::get(s.n);
    // e_λ = m_{λ'} + (terms dominated by λ'); reverse lex refines dominance.
    let order = table.partitions.iter().map(|nu| (nu.conjugate(), nu.clone()));
    triangular_solve(s, Basis::Elementary, &table.e_in_m, order)
}

pub fn e_to_m(s: &SymT) -> Result<SymT> {
    s.require(Basis::Elementary)?;
    expand_into_m(s, &TransitionTable::get(s.n).e_in_m)
}

pub fn m_to_p(s: &SymT) -> Result<SymT> {
    s.require(Basis::Monomial)?;
    let table = TransitionTable::get(s.n);
    // p_λ = c·m_λ + (terms dominating λ), so start from (1^n).
    let order = table.partitions.iter().rev().map(|l| (l.clone(), l.clone()));
    triangular_solve(s, Basis::PowerSum, &table.p_in_m, order)
}

pub fn p_to_m(s: &SymT) -> Result<SymT> {
    s.require(Basis::PowerSum)?;
    expand_into_m(s, &TransitionTable::get(s.n).p_in_m)
}

/// The involution `ω`, computed as `p_λ ↦ (-1)^{n - l(λ)} p_λ` and returned
/// in the input's basis.
pub fn omega_sym(s: &SymT) -> Result<SymT> {
    let as_p = match s.basis {
        Basis::PowerSum => s.clone(),
        Basis::Monomial => m_to_p(s)?,
        _ => m_to_p(&e_to_m(s)?)?,
    };
    let mut flipped = SymT::zero(s.n, Basis::PowerSum)?;
    for (lambda, c) in &as_p.terms {
        let c = if (s.n - lambda.len()) % 2 == 1 { -c } else { c.clone() };
        flipped.add_term(lambda.clone(), &c)?;
    }
    Ok(match s.basis {
        Basis::PowerSum => flipped,
        Basis::Monomial => p_to_m(&flipped)?,
        _ => m_to_e(&p_to_m(&flipped)?)?,
    })
}

impl SymT {
    /// Value at `x_1 = ... = x_k = 1`, other variables 0.
    pub fn principal_specialization(&self, k: usize, t: &Rational) -> Result<Rational> {
        let per_part = |lambda: &Partition| -> BigInt {
            match self.basis {
                Basis::Elementary => lambda.parts().iter().map(|&p| super::quasi::binomial(k, p)).product(),
                Basis::PowerSum => BigInt::from(k).pow(lambda.len() as u32),
                _ => {
                    let mut count = super::quasi::binomial(k, lambda.len());
                    let m = lambda.multiplicities();
                    let mut arrangements = crate::combinatorics::factorial(lambda.len());
                    for &mi in m.iter().skip(1) {
                        arrangements /= crate::combinatorics::factorial(mi);
                    }
                    count *= arrangements;
                    count
                }
            }
        };
        Ok(self
            .terms
            .iter()
            .map(|(l, c)| c.eval(t) * Rational::from_integer(per_part(l)))
            .fold(Rational::zero(), |a, b| a + b))
    }
}
