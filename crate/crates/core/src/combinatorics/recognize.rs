use super::Digraph;

/// Why a digraph fails to be a proper circular arc digraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Obstruction {
    /// The pair carries arcs in both directions.
    Bidirected(usize, usize),
    /// `center → a`, `center → b` with `a`, `b` non-adjacent.
    OutStar { center: usize, leaves: (usize, usize) },
    /// `a → center`, `b → center` with `a`, `b` non-adjacent.
    InStar { center: usize, leaves: (usize, usize) },
}

impl Obstruction {
    /// The offending vertices, ascending.
    pub fn vertices(&self) -> Vec<usize> {
        let mut v = match *self {
            Obstruction::Bidirected(u, w) => vec![u, w],
            Obstruction::OutStar { center, leaves: (a, b) }
            | Obstruction::InStar { center, leaves: (a, b) } => vec![center, a, b],
        };
        v.sort_unstable();
        v
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CircularArcCheck {
    Proper,
    Fails(Obstruction),
}

impl CircularArcCheck {
    pub fn is_proper(&self) -> bool {
        matches!(self, CircularArcCheck::Proper)
    }

    pub fn witness(&self) -> Option<&Obstruction> {
        match self {
            CircularArcCheck::Proper => None,
            CircularArcCheck::Fails(o) => Some(o),
        }
    }
}

/// Checks for an oriented graph with no induced out-star or in-star on three
/// vertices. The first obstruction in lexicographic order is reported.
pub fn is_proper_circular_arc(d: &Digraph) -> CircularArcCheck {
    if let Some((u, v)) = d.bidirected_pair() {
        return CircularArcCheck::Fails(Obstruction::Bidirected(u, v));
    }
    let n = d.n();
    for center in 1..=n {
        for a in 1..=n {
            for b in (a + 1)..=n {
                if a == center || b == center || d.adjacent(a, b) {
                    continue;
                }
                if d.has_edge(center, a) && d.has_edge(center, b) {
                    return CircularArcCheck::Fails(Obstruction::OutStar { center, leaves: (a, b) });
                }
                if d.has_edge(a, center) && d.has_edge(b, center) {
                    return CircularArcCheck::Fails(Obstruction::InStar { center, leaves: (a, b) });
                }
            }
        }
    }
    CircularArcCheck::Proper
}

/// A proper circular arc digraph without directed cycles.
pub fn is_unit_interval_digraph(d: &Digraph) -> bool {
    is_proper_circular_arc(d).is_proper() && d.is_acyclic()
}
