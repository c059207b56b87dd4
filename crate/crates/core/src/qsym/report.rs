use num_traits::Signed;
use serde::Serialize;

use super::{Basis, SymT};
use crate::combinatorics::Partition;
use crate::error::{Error, Result};
use crate::tpoly::{rat, Rational};

/// A location in an `e`-expansion: the partition and a `t`-degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub partition: Partition,
    pub degree: usize,
}

/// Positivity, palindromicity and unimodality of `Σ_j a_j t^j` in the `e`
/// basis.
///
/// Palindromicity and unimodality are measured after shifting the lowest
/// nonzero `t`-degree to 0; their witnesses use the shifted degree. The
/// positivity witness uses the actual degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EPositivityReport {
    pub positive: bool,
    pub palindromic: bool,
    pub unimodal: bool,
    /// Midpoint of the nonzero `t`-support, in actual degrees.
    #[serde(serialize_with = "ser_rational")]
    pub center: Rational,
    pub lowest_degree: Option<usize>,
    pub highest_degree: Option<usize>,
    pub positivity_witness: Option<Witness>,
    pub palindromic_witness: Option<Witness>,
    pub unimodal_witness: Option<Witness>,
}

impl EPositivityReport {
    pub fn all_pass(&self) -> bool {
        self.positive && self.palindromic && self.unimodal
    }
}

fn ser_rational<S: serde::Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

pub fn e_positivity_report(s: &SymT) -> Result<EPositivityReport> {
    if s.basis() != Basis::Elementary {
        return Err(Error::invalid(format!("expected basis e, got {}", s.basis())));
    }
    let terms = s.terms();
    let positivity_witness = s.sorted_terms().find_map(|(lambda, c)| {
        c.coeffs().iter().position(Signed::is_negative).map(|degree| Witness {
            partition: lambda.clone(),
            degree,
        })
    });

    let lo = terms.values().filter_map(|c| c.valuation()).min();
    let hi = terms.values().filter_map(|c| c.degree()).max();
    let (Some(lo), Some(hi)) = (lo, hi) else {
        return Ok(EPositivityReport {
            positive: true,
            palindromic: true,
            unimodal: true,
            center: rat(0),
            lowest_degree: None,
            highest_degree: None,
            positivity_witness: None,
            palindromic_witness: None,
            unimodal_witness: None,
        });
    };
    let m = hi - lo;

    let palindromic_witness = s.sorted_terms().find_map(|(lambda, c)| {
        (0..=m)
            .find(|&j| c.coeff(lo + j) != c.coeff(hi - j))
            .map(|degree| Witness { partition: lambda.clone(), degree })
    });

    // a_{j+1} - a_j must be e-positive for 0 <= j < (m-1)/2, i.e. 2j + 1 < m.
    let unimodal_witness = (0..m)
        .take_while(|j| 2 * j + 1 < m)
        .find_map(|j| {
            s.sorted_terms().find_map(|(lambda, c)| {
                (c.coeff(lo + j + 1) - c.coeff(lo + j)).is_negative().then(|| Witness {
                    partition: lambda.clone(),
                    degree: j,
                })
            })
        });

    Ok(EPositivityReport {
        positive: positivity_witness.is_none(),
        palindromic: palindromic_witness.is_none(),
        unimodal: unimodal_witness.is_none(),
        center: Rational::new((lo + hi).into(), 2.into()),
        lowest_degree: Some(lo),
        highest_degree: Some(hi),
        positivity_witness,
        palindromic_witness,
        unimodal_witness,
    })
}
