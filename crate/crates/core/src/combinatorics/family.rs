use std::str::FromStr;

use super::Digraph;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    /// `G_{n,r}`: `i → j` when `0 < j - i < r`.
    Interval,
    /// `G*_{n,r}`: `i → j` when `0 < (j - i) mod n < r`.
    Circular,
    /// `G_{n,2}`.
    Path,
    /// `G*_{n,2}`, the cyclically directed cycle.
    Cycle,
}

impl FromStr for FamilyKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "interval" => Ok(FamilyKind::Interval),
            "circular" => Ok(FamilyKind::Circular),
            "path" => Ok(FamilyKind::Path),
            "cycle" => Ok(FamilyKind::Cycle),
            other => Err(Error::invalid(format!("unknown family {other:?}"))),
        }
    }
}

/// Builds a member of one of the banded families. `r` is ignored for
/// `Path` and `Cycle`.
///
/// `Cycle` also accepts `n = 2`, giving the bidirected 2-cycle, which lies
/// outside the `circular` parameter range.
pub fn family_generator(kind: FamilyKind, n: usize, r: usize) -> Result<Digraph> {
    match kind {
        FamilyKind::Interval => {
            if r < 1 || r > n {
                return Err(Error::invalid(format!("interval family needs 1 <= r <= n, got n={n}, r={r}")));
            }
            let mut edges = Vec::new();
            for i in 1..=n {
                for j in (i + 1)..=n {
                    if j - i < r {
                        edges.push((i, j));
                    }
                }
            }
            Digraph::from_edges(n, &edges)
        }
        FamilyKind::Circular => {
            if r < 1 || r > n.div_ceil(2) {
                return Err(Error::invalid(format!(
                    "circular family needs 1 <= r <= ceil(n/2), got n={n}, r={r}"
                )));
            }
            circular_band(n, r)
        }
        FamilyKind::Path => {
            if n < 1 {
                return Err(Error::invalid("path needs n >= 1"));
            }
            family_generator(FamilyKind::Interval, n, 2.min(n))
        }
        FamilyKind::Cycle => {
            if n < 2 {
                return Err(Error::invalid("directed cycle needs n >= 2"));
            }
            circular_band(n, 2)
        }
    }
}

fn circular_band(n: usize, r: usize) -> Result<Digraph> {
    let mut edges = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            let gap = (j + n - i) % n;
            if gap > 0 && gap < r {
                edges.push((i, j));
            }
        }
    }
    Digraph::from_edges(n, &edges)
}
