//! The chromatic quasisymmetric function of a digraph, computed three
//! independent ways: by summing over proper colorings, from the `F`-basis
//! permutation formula, and from the `p`-basis formula over `N_{G,λ}`.

mod compute;
mod fexpansion;
mod oracle;
mod orientations;
mod pexpansion;
mod statistics;
mod sweep;

pub use compute::{classify, compute, ClassifyReport, Method, ObstructionJson};
pub use fexpansion::{chromatic_qsym_via_f, chromatic_qsym_via_f_m};
pub use oracle::{chromatic_qsym_direct, colorings_with_content, ColoringClass};
pub use orientations::{ao_lambda_polynomial, gap_partition, sink_generating_polynomial, ChainShape};
pub use pexpansion::{
    cycle_p_coefficient, in_n_g_lambda, n_g_lambda, n_lambda_polynomials, p_expansion_via_n,
};
pub use statistics::{g_descent_set, inv_digraph, GDescentData};

use crate::error::{Error, Result};

/// Largest `n` for which the factorial-size sweeps run unless overridden.
pub const DEFAULT_FACTORIAL_BUDGET: usize = 10;

pub fn check_budget(n: usize, budget: usize) -> Result<()> {
    if n > budget {
        return Err(Error::Budget { n, budget });
    }
    Ok(())
}

