use crate::combinatorics::{acyclic_orientations, family_generator, Digraph, FamilyKind, Partition};
use crate::error::{Error, Result};
use crate::tpoly::TPoly;

use super::sweep::bump;

/// `Σ t^{asc(ā)}` over acyclic orientations `ā` of the underlying graph with
/// exactly `k` sinks.
///
/// The identity with the `e`-expansion holds for proper circular arc
/// digraphs; this function does not check that.
pub fn sink_generating_polynomial(d: &Digraph, k: usize) -> Result<TPoly> {
    let mut counts = Vec::new();
    for rec in acyclic_orientations(&d.underlying(), d)? {
        if rec.sink_count() == k {
            bump(&mut counts, rec.asc);
        }
    }
    Ok(TPoly::from_counts(&counts))
}

/// The two digraphs whose `e`-coefficients have a sink-gap description.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChainShape {
    /// `1 → 2 → ... → n → 1`.
    Cycle,
    /// `1 → 2 → ... → n`.
    Path,
}

impl ChainShape {
    pub fn detect(d: &Digraph) -> Option<ChainShape> {
        let n = d.n();
        if n >= 2 && family_generator(FamilyKind::Cycle, n, 0).ok().as_ref() == Some(d) {
            return Some(ChainShape::Cycle);
        }
        if n >= 1 && family_generator(FamilyKind::Path, n, 0).ok().as_ref() == Some(d) {
            return Some(ChainShape::Path);
        }
        None
    }
}

/// Turns the ascending sink list of an orientation into the partition with
/// parts `gap + 1`, where the gaps count vertices between consecutive sinks.
/// On the cycle the gaps wrap around; on the path the segments before the
/// first sink and after the last sink form one combined gap, possibly empty.
pub fn gap_partition(shape: ChainShape, n: usize, sinks: &[usize]) -> Result<Partition> {
    if sinks.is_empty() || sinks.windows(2).any(|w| w[0] >= w[1]) || sinks[sinks.len() - 1] > n || sinks[0] == 0 {
        return Err(Error::invalid(format!("{sinks:?} is not an ascending sink list in 1..={n}")));
    }
    let mut gaps: Vec<usize> = sinks.windows(2).map(|w| w[1] - w[0] - 1).collect();
    let first = sinks[0];
    let last = sinks[sinks.len() - 1];
    gaps.push(match shape {
        ChainShape::Cycle => n - last + first - 1,
        ChainShape::Path => (first - 1) + (n - last),
    });
    Partition::from_parts(gaps.into_iter().map(|g| g + 1).collect())
}

/// `Σ t^{asc(ā)}` over acyclic orientations of the directed cycle or
/// directed path whose sink gaps give `λ`.
pub fn ao_lambda_polynomial(d: &Digraph, lambda: &Partition) -> Result<TPoly> {
    let shape = ChainShape::detect(d).ok_or_else(|| {
        Error::invalid("expected the directed cycle 1→…→n→1 or the directed path 1→…→n")
    })?;
    if lambda.weight() != d.n() {
        return Err(Error::invalid(format!("partition {lambda} does not have weight {}", d.n())));
    }
    let mut counts = Vec::new();
    for rec in acyclic_orientations(&d.underlying(), d)? {
        if gap_partition(shape, d.n(), &rec.sinks)? == *lambda {
            bump(&mut counts, rec.asc);
        }
    }
    Ok(TPoly::from_counts(&counts))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::OrientationRecord;

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn cycle(n: usize) -> Digraph {
        family_generator(FamilyKind::Cycle, n, 0).unwrap()
    }

    fn path(n: usize) -> Digraph {
        family_generator(FamilyKind::Path, n, 0).unwrap()
    }

    fn find(d: &Digraph, arcs: &[(usize, usize)]) -> OrientationRecord {
        acyclic_orientations(&d.underlying(), d)
            .unwrap()
            .into_iter()
            .find(|r| arcs.iter().all(|&(u, v)| r.has_arc(u, v)))
            .unwrap()
    }

    #[test]
    fn sink_polynomials() {
        assert_eq!(sink_generating_polynomial(&cycle(3), 1).unwrap(), TPoly::from_ints([0, 3, 3]));
        assert_eq!(sink_generating_polynomial(&cycle(3), 3).unwrap(), TPoly::zero());
        assert_eq!(sink_generating_polynomial(&path(2), 1).unwrap(), TPoly::from_ints([1, 1]));
    }

    #[test]
    fn nine_cycle_orientation() {
        // sinks 2, 6, 8 with sources 5 and 1
        let d = cycle(9);
        let rec = find(&d, &[(1, 2), (3, 2), (4, 3), (5, 4), (5, 6), (7, 6), (7, 8), (9, 8), (1, 9)]);
        assert_eq!(rec.sinks, vec![2, 6, 8]);
        assert_eq!(rec.asc, 3);
        assert_eq!(gap_partition(ChainShape::Cycle, 9, &rec.sinks).unwrap(), part(&[4, 3, 2]));
        let c = ao_lambda_polynomial(&d, &part(&[4, 3, 2])).unwrap();
        assert!(c.coeff(3) >= crate::tpoly::rat(1));
    }

    #[test]
    fn eight_path_orientation() {
        let d = path(8);
        let rec = find(&d, &[(1, 2), (3, 2), (4, 3), (4, 5), (5, 6), (7, 6), (7, 8)]);
        assert_eq!(rec.sinks, vec![2, 6, 8]);
        assert_eq!(rec.asc, 4);
        assert_eq!(gap_partition(ChainShape::Path, 8, &rec.sinks).unwrap(), part(&[4, 2, 2]));
    }

    #[test]
    fn triangle_single_gap() {
        assert_eq!(ao_lambda_polynomial(&cycle(3), &part(&[3])).unwrap(), TPoly::from_ints([0, 3, 3]));
    }

    #[test]
    fn unsupported_shapes() {
        let d = Digraph::from_edges(3, &[(2, 1), (2, 3)]).unwrap();
        assert!(ao_lambda_polynomial(&d, &part(&[3])).is_err());
        assert!(ao_lambda_polynomial(&cycle(3), &part(&[2])).is_err());
        assert_eq!(ChainShape::detect(&cycle(2)), Some(ChainShape::Cycle));
        assert_eq!(ChainShape::detect(&path(1)), Some(ChainShape::Path));
    }

    #[test]
    fn path_end_segments_may_be_empty() {
        // 1 ← 2 → 3: sinks at both ends, combined end gap 0
        assert_eq!(gap_partition(ChainShape::Path, 3, &[1, 3]).unwrap(), part(&[2, 1]));
    }
}
