use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{render_terms, Basis, SymT};
use crate::combinatorics::{Composition, Partition};
use crate::error::{Error, Result};
use crate::tpoly::{Rational, TPoly};

/// A homogeneous degree-`n` quasisymmetric function with `Q[t]` coefficients.
///
/// Keys are composition parts in the `M` basis and descent sets
/// `S ⊆ [n-1]` in the `F` basis. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QSymT {
    n: usize,
    basis: Basis,
    terms: BTreeMap<Vec<usize>, TPoly>,
}

impl QSymT {
    pub fn zero(n: usize, basis: Basis) -> Result<Self> {
        if basis.is_symmetric_basis() {
            return Err(Error::invalid(format!("{basis} is not a quasisymmetric basis")));
        }
        Ok(QSymT { n, basis, terms: BTreeMap::new() })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> &BTreeMap<Vec<usize>, TPoly> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn check_key(&self, key: &[usize]) -> Result<()> {
        match self.basis {
            Basis::QuasiMonomial => {
                let c = Composition::new(key.to_vec())?;
                if c.weight() != self.n {
                    return Err(Error::invalid(format!("composition {key:?} does not have weight {}", self.n)));
                }
            }
            _ => {
                Composition::from_descent_set(self.n, key)?;
            }
        }
        Ok(())
    }

    /// Adds `coeff` to the coefficient at `key`.
    pub fn add_term(&mut self, key: Vec<usize>, coeff: &TPoly) -> Result<()> {
        self.check_key(&key)?;
        let mut entry = self.terms.remove(&key).unwrap_or_default();
        entry += coeff;
        if !entry.is_zero() {
            self.terms.insert(key, entry);
        }
        Ok(())
    }

    pub fn with_term(mut self, key: Vec<usize>, coeff: TPoly) -> Result<Self> {
        self.add_term(key, &coeff)?;
        Ok(self)
    }

    pub fn coeff(&self, key: &[usize]) -> TPoly {
        self.terms.get(key).cloned().unwrap_or_default()
    }

    /// Terms with keys ordered reverse-lexicographically by composition.
    pub fn sorted_terms(&self) -> Vec<(&Vec<usize>, &TPoly)> {
        let mut out: Vec<_> = self.terms.iter().collect();
        if self.basis == Basis::Fundamental {
            let n = self.n;
            out.sort_by_cached_key(|(k, _)| {
                std::cmp::Reverse(Composition::from_descent_set(n, k).expect("stored keys are valid"))
            });
        } else {
            out.reverse();
        }
        out
    }

    fn require(&self, basis: Basis) -> Result<()> {
        if self.basis != basis {
            return Err(Error::invalid(format!("expected basis {basis}, got {}", self.basis)));
        }
        Ok(())
    }

    /// Finds two rearrangements of one partition whose `M` coefficients
    /// differ. `None` means the function is symmetric.
    pub fn symmetry_witness(&self) -> Result<Option<(Vec<usize>, Vec<usize>)>> {
        self.require(Basis::QuasiMonomial)?;
        let mut classes: BTreeMap<Partition, Vec<&Vec<usize>>> = BTreeMap::new();
        for key in self.terms.keys() {
            classes
                .entry(Composition::new(key.clone())?.sorted())
                .or_default()
                .push(key);
        }
        for (shape, members) in classes.iter().rev() {
            let first = members[0];
            let value = &self.terms[first];
            if let Some(other) = members.iter().find(|k| self.terms[**k] != *value) {
                return Ok(Some((first.clone(), (*other).clone())));
            }
            let total = rearrangement_count(shape);
            if BigInt::from(members.len()) != total {
                let missing = first_missing_rearrangement(shape, members);
                return Ok(Some((first.clone(), missing)));
            }
        }
        Ok(None)
    }

    /// Equal coefficients on every rearrangement class, one `t`-degree at a
    /// time.
    pub fn is_symmetric(&self) -> Result<bool> {
        Ok(self.symmetry_witness()?.is_none())
    }

    /// The `m`-basis form of a symmetric function given in `M`.
    pub fn to_sym_m(&self) -> Result<SymT> {
        if let Some((left, right)) = self.symmetry_witness()? {
            return Err(Error::NotSymmetric { left, right });
        }
        let mut out = SymT::zero(self.n, Basis::Monomial)?;
        for (key, coeff) in &self.terms {
            if key.windows(2).all(|w| w[0] >= w[1]) {
                out.add_term(Partition::new(key.clone())?, coeff)?;
            }
        }
        Ok(out)
    }

    /// Value at `x_1 = ... = x_k = 1`, other variables 0, and the given `t`.
    pub fn principal_specialization(&self, k: usize, t: &Rational) -> Result<Rational> {
        let m = if self.basis == Basis::Fundamental { f_to_m(self)? } else { self.clone() };
        Ok(m.terms
            .iter()
            .map(|(key, c)| c.eval(t) * Rational::from_integer(binomial(k, key.len())))
            .sum())
    }

    /// `Q[t]`-coefficients read degree by degree are palindromic about the
    /// center of the overall `t`-support.
    pub fn is_palindromic(&self) -> bool {
        palindromic(self.terms.values())
    }

    pub fn to_json(&self) -> super::PolyJson {
        super::PolyJson::from_terms(
            self.n,
            self.basis,
            self.sorted_terms().into_iter().map(|(k, v)| (k.clone(), v)),
        )
    }

    pub fn from_json(j: &super::PolyJson) -> Result<Self> {
        let basis: Basis = j.basis.parse()?;
        let mut out = QSymT::zero(j.n, basis)?;
        for (key, coeff) in j.parse_terms()? {
            out.add_term(key, &coeff)?;
        }
        Ok(out)
    }
}

impl fmt::Display for QSymT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        render_terms(
            f,
            self.basis.tag(),
            self.sorted_terms().into_iter().map(|(k, v)| (k.as_slice(), v)),
        )
    }
}

pub(crate) fn palindromic<'a>(coeffs: impl Iterator<Item = &'a TPoly> + Clone) -> bool {
    let lo = coeffs.clone().filter_map(TPoly::valuation).min();
    let hi = coeffs.clone().filter_map(TPoly::degree).max();
    let (Some(lo), Some(hi)) = (lo, hi) else {
        return true;
    };
    coeffs.into_iter().all(|c| (0..=(hi - lo)).all(|j| c.coeff(lo + j) == c.coeff(hi - j)))
}

pub(crate) fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

fn rearrangement_count(shape: &Partition) -> BigInt {
    let mut total = crate::combinatorics::factorial(shape.len());
    for &m in shape.multiplicities().iter().skip(1) {
        total /= crate::combinatorics::factorial(m);
    }
    total
}

fn first_missing_rearrangement(shape: &Partition, present: &[&Vec<usize>]) -> Vec<usize> {
    let mut word: Vec<usize> = shape.parts().iter().rev().copied().collect();
    loop {
        if !present.iter().any(|p| **p == word) {
            return word;
        }
        if !crate::combinatorics::next_permutation(&mut word) {
            unreachable!("a class with fewer members than rearrangements has a missing one");
        }
    }
}

fn all_subsets_containing(n: usize, set: &[usize]) -> Vec<Vec<usize>> {
    let free: Vec<usize> = (1..n).filter(|i| !set.contains(i)).collect();
    (0u64..(1 << free.len()))
        .map(|mask| {
            let mut t: Vec<usize> = set.to_vec();
            t.extend(free.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &v)| v));
            t.sort_unstable();
            t
        })
        .collect()
}

/// `F_{n,S} = Σ_{T ⊇ S} M_{comp(T)}`.
pub fn f_to_m(q: &QSymT) -> Result<QSymT> {
    q.require(Basis::Fundamental)?;
    let mut out = QSymT::zero(q.n, Basis::QuasiMonomial)?;
    for (set, coeff) in &q.terms {
        for sup in all_subsets_containing(q.n, set) {
            let comp = Composition::from_descent_set(q.n, &sup)?;
            out.add_term(comp.into(), coeff)?;
        }
    }
    Ok(out)
}

/// Inverse of [`f_to_m`]: `M_{comp(S)} = Σ_{T ⊇ S} (-1)^{|T ∖ S|} F_{n,T}`.
pub fn m_to_f(q: &QSymT) -> Result<QSymT> {
    q.require(Basis::QuasiMonomial)?;
    let mut out = QSymT::zero(q.n, Basis::Fundamental)?;
    for (parts, coeff) in &q.terms {
        let set = Composition::new(parts.clone())?.descent_set();
        let neg = -coeff;
        for sup in all_subsets_containing(q.n, &set) {
            let c = if (sup.len() - set.len()) % 2 == 0 { coeff } else { &neg };
            out.add_term(sup, c)?;
        }
    }
    Ok(out)
}

/// `ω F_{n,S} = F_{n,[n-1] ∖ S}`.
pub fn omega_f(q: &QSymT) -> Result<QSymT> {
    q.require(Basis::Fundamental)?;
    let mut out = QSymT::zero(q.n, Basis::Fundamental)?;
    for (set, coeff) in &q.terms {
        let comp: Vec<usize> = (1..q.n).filter(|i| !set.contains(i)).collect();
        out.add_term(comp, coeff)?;
    }
    Ok(out)
}

/// The reversal `F_{n,S} ↦ F_{n,{n-i : i ∈ S}}`, matching `M_α ↦ M_{rev α}`.
pub fn reverse_f(q: &QSymT) -> Result<QSymT> {
    q.require(Basis::Fundamental)?;
    let mut out = QSymT::zero(q.n, Basis::Fundamental)?;
    for (set, coeff) in &q.terms {
        let mut rev: Vec<usize> = set.iter().map(|i| q.n - i).collect();
        rev.sort_unstable();
        out.add_term(rev, coeff)?;
    }
    Ok(out)
}
