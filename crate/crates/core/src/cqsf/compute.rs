use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::{chromatic_qsym_direct, chromatic_qsym_via_f_m, p_expansion_via_n, ChainShape};
use crate::combinatorics::{is_proper_circular_arc, is_unit_interval_digraph, Digraph, Obstruction};
use crate::cycle_series::cycle_e_expansion_series;
use crate::error::{Error, Result};
use crate::qsym::{omega_sym, Basis, Function};

/// Which route produces `X`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    /// Sum over proper colorings.
    Direct,
    /// The permutation formula in the `F` basis.
    FBasis,
    /// The `N_{G,λ}` formula in the `p` basis; needs a symmetric `X`.
    PBasis,
    /// Coefficient extraction from the cycle generating function; needs the
    /// directed cycle `1 → 2 → ... → n → 1`.
    Series,
}

impl Method {
    pub const ALL: [Method; 4] = [Method::Direct, Method::FBasis, Method::PBasis, Method::Series];

    pub fn tag(self) -> &'static str {
        match self {
            Method::Direct => "direct",
            Method::FBasis => "f-basis",
            Method::PBasis => "p-basis",
            Method::Series => "series",
        }
    }
}

impl FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.tag() == s)
            .ok_or_else(|| Error::Parse(format!("unknown method {s:?}")))
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// `X` for `d`, computed by `method` and expressed in `basis`.
pub fn compute(d: &Digraph, basis: Basis, method: Method, budget: usize) -> Result<Function> {
    let x = match method {
        Method::Direct => Function::Quasi(chromatic_qsym_direct(d, budget)?),
        Method::FBasis => Function::Quasi(chromatic_qsym_via_f_m(d, budget)?),
        Method::PBasis => Function::Sym(omega_sym(&p_expansion_via_n(d, budget)?)?),
        Method::Series => {
            if ChainShape::detect(d) != Some(ChainShape::Cycle) {
                return Err(Error::invalid("the series method needs the directed cycle 1 → 2 → ... → n → 1"));
            }
            let n = d.n();
            let series = cycle_e_expansion_series(n)?;
            Function::Sym(series.coefficients[&n].clone())
        }
    };
    x.to_basis(basis)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ObstructionJson {
    pub kind: &'static str,
    pub vertices: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub center: Option<usize>,
}

impl From<&Obstruction> for ObstructionJson {
    fn from(o: &Obstruction) -> Self {
        let (kind, center) = match *o {
            Obstruction::Bidirected(..) => ("bidirected", None),
            Obstruction::OutStar { center, .. } => ("out-star", Some(center)),
            Obstruction::InStar { center, .. } => ("in-star", Some(center)),
        };
        ObstructionJson { kind, vertices: o.vertices(), center }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassifyReport {
    pub oriented: bool,
    pub acyclic: bool,
    pub proper_circular_arc: bool,
    pub unit_interval: bool,
    pub symmetric: bool,
    pub palindromic: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub circular_arc_witness: Option<ObstructionJson>,
    /// Two rearranged compositions with different `M` coefficients.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub symmetry_witness: Option<[Vec<usize>; 2]>,
}

pub fn classify(d: &Digraph, budget: usize) -> Result<ClassifyReport> {
    let x = chromatic_qsym_direct(d, budget)?;
    let pca = is_proper_circular_arc(d);
    let sym = x.symmetry_witness()?;
    Ok(ClassifyReport {
        oriented: d.is_oriented(),
        acyclic: d.is_acyclic(),
        proper_circular_arc: pca.is_proper(),
        unit_interval: is_unit_interval_digraph(d),
        symmetric: sym.is_none(),
        palindromic: x.is_palindromic(),
        circular_arc_witness: pca.witness().map(ObstructionJson::from),
        symmetry_witness: sym.map(|(a, b)| [a, b]),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{family_generator, FamilyKind};
    use crate::cqsf::DEFAULT_FACTORIAL_BUDGET as B;

    fn dg(n: usize, e: &[(usize, usize)]) -> Digraph {
        Digraph::from_edges(n, e).unwrap()
    }

    #[test]
    fn methods_agree_on_c3() {
        let c3 = family_generator(FamilyKind::Cycle, 3, 0).unwrap();
        for m in Method::ALL {
            assert_eq!(compute(&c3, Basis::Elementary, m, B).unwrap().to_string(), "(3t+3t²)·e[3]", "{m}");
        }
    }

    #[test]
    fn single_vertex() {
        assert_eq!(compute(&Digraph::empty(1).unwrap(), Basis::QuasiMonomial, Method::Direct, B).unwrap().to_string(), "M[1]");
    }

    #[test]
    fn symmetric_bases_need_symmetry() {
        let k21 = dg(3, &[(1, 3), (2, 3)]);
        assert!(matches!(compute(&k21, Basis::Elementary, Method::Direct, B), Err(Error::NotSymmetric { .. })));
        assert!(matches!(compute(&k21, Basis::PowerSum, Method::PBasis, B), Err(Error::NotSymmetric { .. })));
        assert!(compute(&k21, Basis::Fundamental, Method::FBasis, B).is_ok());
    }

    #[test]
    fn series_needs_the_cycle() {
        let p3 = family_generator(FamilyKind::Path, 3, 0).unwrap();
        assert!(matches!(compute(&p3, Basis::Elementary, Method::Series, B), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn classify_examples() {
        let c5 = family_generator(FamilyKind::Cycle, 5, 0).unwrap();
        let r = classify(&c5, B).unwrap();
        assert!(r.oriented && !r.acyclic && r.proper_circular_arc && !r.unit_interval && r.symmetric && r.palindromic);

        let bent = dg(5, &[(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)]);
        let r = classify(&bent, B).unwrap();
        assert!(!r.proper_circular_arc && r.symmetric);
        assert_eq!(r.circular_arc_witness.unwrap().kind, "out-star");

        let r = classify(&dg(3, &[(1, 3), (2, 3)]), B).unwrap();
        assert!(!r.proper_circular_arc && !r.symmetric);
        assert!(r.symmetry_witness.is_some());
    }
}
