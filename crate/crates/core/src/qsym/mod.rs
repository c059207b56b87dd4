//! Homogeneous quasisymmetric (`M`, `F`) and symmetric (`m`, `e`, `p`)
//! functions with coefficients in `Q[t]`, and the changes of basis between
//! them.

mod json;
mod quasi;
mod report;
mod sym;

use std::fmt;
use std::str::FromStr;

pub use json::{PolyJson, TermJson};
pub use json::format_rational;
pub use quasi::{f_to_m, m_to_f, omega_f, reverse_f, QSymT};
pub use report::{e_positivity_report, EPositivityReport};
pub use sym::{
    e_to_m, m_to_e, m_to_p, omega_sym, p_to_m, SymT, TransitionTable,
};

use crate::error::{Error, Result};
use crate::tpoly::TPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    /// Monomial quasisymmetric `M_α`.
    QuasiMonomial,
    /// Fundamental quasisymmetric `F_{n,S}`.
    Fundamental,
    /// Monomial symmetric `m_λ`.
    Monomial,
    /// Elementary `e_λ`.
    Elementary,
    /// Power sum `p_λ`.
    PowerSum,
}

impl Basis {
    pub fn tag(self) -> &'static str {
        match self {
            Basis::QuasiMonomial => "M",
            Basis::Fundamental => "F",
            Basis::Monomial => "m",
            Basis::Elementary => "e",
            Basis::PowerSum => "p",
        }
    }

    pub fn is_symmetric_basis(self) -> bool {
        matches!(self, Basis::Monomial | Basis::Elementary | Basis::PowerSum)
    }
}

impl FromStr for Basis {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "M" => Ok(Basis::QuasiMonomial),
            "F" => Ok(Basis::Fundamental),
            "m" => Ok(Basis::Monomial),
            "e" => Ok(Basis::Elementary),
            "p" => Ok(Basis::PowerSum),
            other => Err(Error::invalid(format!("unknown basis {other:?}"))),
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Either kind of function, for code that does not care which.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Function {
    Quasi(QSymT),
    Sym(SymT),
}

impl Function {
    pub fn n(&self) -> usize {
        match self {
            Function::Quasi(q) => q.n(),
            Function::Sym(s) => s.n(),
        }
    }

    pub fn basis(&self) -> Basis {
        match self {
            Function::Quasi(q) => q.basis(),
            Function::Sym(s) => s.basis(),
        }
    }

    /// Expresses the function in `target`. Moving from a quasisymmetric
    /// basis to a symmetric one fails with [`Error::NotSymmetric`] when the
    /// function is not symmetric.
    pub fn to_basis(&self, target: Basis) -> Result<Function> {
        if self.basis() == target {
            return Ok(self.clone());
        }
        let as_m = match self {
            Function::Quasi(q) => {
                let qm = if q.basis() == Basis::Fundamental { f_to_m(q)? } else { q.clone() };
                if !target.is_symmetric_basis() {
                    return Ok(Function::Quasi(match target {
                        Basis::QuasiMonomial => qm,
                        _ => m_to_f(&qm)?,
                    }));
                }
                qm.to_sym_m()?
            }
            Function::Sym(s) => match s.basis() {
                Basis::Monomial => s.clone(),
                Basis::Elementary => e_to_m(s)?,
                _ => p_to_m(s)?,
            },
        };
        Ok(match target {
            Basis::Monomial => Function::Sym(as_m),
            Basis::Elementary => Function::Sym(m_to_e(&as_m)?),
            Basis::PowerSum => Function::Sym(m_to_p(&as_m)?),
            Basis::QuasiMonomial => Function::Quasi(as_m.to_qsym_m()?),
            Basis::Fundamental => Function::Quasi(m_to_f(&as_m.to_qsym_m()?)?),
        })
    }

    pub fn to_json(&self) -> PolyJson {
        match self {
            Function::Quasi(q) => q.to_json(),
            Function::Sym(s) => s.to_json(),
        }
    }

    pub fn from_json(j: &PolyJson) -> Result<Function> {
        let basis: Basis = j.basis.parse()?;
        if basis.is_symmetric_basis() {
            SymT::from_json(j).map(Function::Sym)
        } else {
            QSymT::from_json(j).map(Function::Quasi)
        }
    }
}

impl fmt::Display for Function {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Function::Quasi(q) => q.fmt(f),
            Function::Sym(s) => s.fmt(f),
        }
    }
}

/// Joins `coefficient·basis[index]` terms for display.
pub(crate) fn render_terms<'a>(
    f: &mut fmt::Formatter<'_>,
    tag: &str,
    terms: impl Iterator<Item = (&'a [usize], &'a TPoly)>,
) -> fmt::Result {
    let mut first = true;
    for (index, coeff) in terms {
        let mut body = coeff.to_string();
        let single_term = coeff.coeffs().iter().filter(|c| !num_traits::Zero::is_zero(*c)).count() == 1;
        let negative = body.starts_with('-') && single_term;
        if negative {
            body.remove(0);
        }
        if !first {
            f.write_str(if negative { " - " } else { " + " })?;
        } else if negative {
            f.write_str("-")?;
        }
        first = false;
        if body != "1" {
            if single_term {
                write!(f, "{body}·")?;
            } else {
                write!(f, "({body})·")?;
            }
        }
        write!(f, "{tag}")?;
        f.write_str("[")?;
        for (i, p) in index.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")?;
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}
