use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::Basis;
use crate::error::{Error, Result};
use crate::tpoly::{Rational, TPoly};

/// `{"n": 3, "basis": "e", "terms": [{"index": [3], "t": ["0", "3", "3"]}]}`
///
/// `index` is a composition (`M`), a descent set (`F`) or a partition
/// (`m`, `e`, `p`); `t` lists exact rationals by ascending `t`-degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub n: usize,
    pub basis: String,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub index: Vec<usize>,
    pub t: Vec<String>,
}

pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub(crate) fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Parse(format!("bad rational {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s.trim(), "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den == BigInt::from(0) {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

impl PolyJson {
    pub(crate) fn from_terms<'a>(
        n: usize,
        basis: Basis,
        terms: impl Iterator<Item = (Vec<usize>, &'a TPoly)>,
    ) -> Self {
        PolyJson {
            n,
            basis: basis.tag().to_string(),
            terms: terms
                .map(|(index, c)| TermJson {
                    index,
                    t: c.coeffs().iter().map(format_rational).collect(),
                })
                .collect(),
        }
    }

    pub(crate) fn parse_terms(&self) -> Result<Vec<(Vec<usize>, TPoly)>> {
        self.terms
            .iter()
            .map(|term| {
                let coeffs = term.t.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>>>()?;
                Ok((term.index.clone(), TPoly::from_coeffs(coeffs)))
            })
            .collect()
    }
}
