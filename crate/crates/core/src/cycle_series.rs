//! The `e`-expansion of `X` for the directed cycle, read off the generating
//! function
//!
//! ```text
//! Σ_{n≥2} X_{C_n} z^n = t Σ_{k≥2} k[k-1]_t e_k z^k / (1 - t Σ_{k≥2} [k-1]_t e_k z^k)
//! ```
//!
//! Products of `e_k` concatenate indices, so the series is computed in the
//! graded algebra indexed by partitions without any change of basis.

use std::collections::BTreeMap;

use crate::combinatorics::Partition;
use crate::error::{Error, Result};
use crate::qsym::{Basis, SymT};
use crate::tpoly::{rat, t_bracket, TPoly};

/// Truncated series `Σ_{2 ≤ n ≤ N} c_n z^n` with `c_n` in the `e` basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ESeries {
    pub truncation: usize,
    pub coefficients: BTreeMap<usize, SymT>,
}

impl ESeries {
    pub fn coefficient(&self, n: usize) -> Option<&SymT> {
        self.coefficients.get(&n)
    }
}

type Graded = BTreeMap<usize, BTreeMap<Vec<usize>, TPoly>>;

fn multiply(a: &Graded, b: &Graded, max_degree: usize) -> Graded {
    let mut out: Graded = BTreeMap::new();
    for (&da, ta) in a {
        for (&db, tb) in b {
            if da + db > max_degree {
                continue;
            }
            let slot = out.entry(da + db).or_default();
            for (la, ca) in ta {
                for (lb, cb) in tb {
                    let mut key: Vec<usize> = la.iter().chain(lb).copied().collect();
                    key.sort_unstable_by(|x, y| y.cmp(x));
                    let prod = ca * cb;
                    let entry = slot.entry(key).or_default();
                    *entry = &*entry + &prod;
                }
            }
        }
    }
    out
}

fn single_e_terms(max_degree: usize, coeff: impl Fn(usize) -> TPoly) -> Graded {
    (2..=max_degree)
        .map(|k| (k, BTreeMap::from([(vec![k], coeff(k))])))
        .collect()
}

pub fn cycle_e_expansion_series(max_degree: usize) -> Result<ESeries> {
    if max_degree < 2 {
        return Err(Error::invalid("the cycle series starts at z^2; need N >= 2"));
    }
    let t = TPoly::t_pow(1);
    let numerator = single_e_terms(max_degree, |k| (&t * &t_bracket(k - 1)).scale(&rat(k as i64)));
    let tail = single_e_terms(max_degree, |k| &t * &t_bracket(k - 1));

    // 1 / (1 - D) = Σ_j D^j; D has z-valuation 2, so j ≤ N/2 suffices.
    let mut geometric: Graded = BTreeMap::from([(0, BTreeMap::from([(vec![], TPoly::one())]))]);
    let mut power = geometric.clone();
    for _ in 0..max_degree / 2 {
        power = multiply(&power, &tail, max_degree);
        for (d, terms) in &power {
            let slot = geometric.entry(*d).or_default();
            for (k, c) in terms {
                let entry = slot.entry(k.clone()).or_default();
                *entry = &*entry + c;
            }
        }
    }
    let product = multiply(&numerator, &geometric, max_degree);

    let mut coefficients = BTreeMap::new();
    for n in 2..=max_degree {
        let mut s = SymT::zero(n, Basis::Elementary)?;
        if let Some(terms) = product.get(&n) {
            for (k, c) in terms {
                s.add_term(Partition::new(k.clone())?, c)?;
            }
        }
        coefficients.insert(n, s);
    }
    Ok(ESeries { truncation: max_degree, coefficients })
}

/// `c_λ(t)` in `X_{C_n} = Σ_λ c_λ(t) e_λ`.
pub fn cycle_e_coefficient(n: usize, lambda: &Partition) -> Result<TPoly> {
    if n < 2 {
        return Err(Error::invalid("the directed cycle needs n >= 2"));
    }
    if lambda.weight() != n {
        return Err(Error::invalid(format!("partition {lambda} does not have weight {n}")));
    }
    let series = cycle_e_expansion_series(n)?;
    Ok(series.coefficients[&n].coeff(lambda))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn low_degrees() {
        let s = cycle_e_expansion_series(4).unwrap();
        assert_eq!(s.coefficient(2).unwrap().to_string(), "2t·e[2]");
        assert_eq!(s.coefficient(3).unwrap().to_string(), "(3t+3t²)·e[3]");
        assert_eq!(s.coefficient(4).unwrap().to_string(), "(4t+4t²+4t³)·e[4] + 2t²·e[2 2]");
    }

    #[test]
    fn projections() {
        assert_eq!(cycle_e_coefficient(4, &part(&[2, 2])).unwrap(), TPoly::from_ints([0, 0, 2]));
        assert_eq!(cycle_e_coefficient(3, &part(&[3])).unwrap(), TPoly::from_ints([0, 3, 3]));
        assert_eq!(cycle_e_coefficient(4, &part(&[3, 1])).unwrap(), TPoly::zero());
        assert!(cycle_e_coefficient(4, &part(&[3])).is_err());
        assert!(cycle_e_expansion_series(1).is_err());
    }
}
