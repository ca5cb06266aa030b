//! Brute-force closure of a labeled graph under edge-local or local
//! complementation.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::gf2::BitVector;
use crate::graph::Graph;

pub const DEFAULT_ORBIT_CAP: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MoveKind {
    Elc,
    Lc,
}

impl fmt::Display for MoveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MoveKind::Elc => "elc",
            MoveKind::Lc => "lc",
        })
    }
}

/// The orbit of `source`, keyed by the upper triangle of each labeled
/// adjacency matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphOrbit {
    kind: MoveKind,
    source: Graph,
    members: BTreeMap<BitVector, Graph>,
}

impl GraphOrbit {
    pub fn kind(&self) -> MoveKind {
        self.kind
    }

    pub fn source(&self) -> &Graph {
        &self.source
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, graph: &Graph) -> bool {
        self.members.contains_key(&graph.upper_triangle_key())
    }

    /// Members in key order.
    pub fn graphs(&self) -> impl Iterator<Item = &Graph> + '_ {
        self.members.values()
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.members.keys().all(|k| other.members.contains_key(k))
    }
}

fn neighbours(graph: &Graph, kind: MoveKind) -> Vec<Graph> {
    match kind {
        MoveKind::Elc => graph
            .edges()
            .into_iter()
            .map(|(i, j)| graph.edge_local_complement(i, j).expect("edge"))
            .collect(),
        MoveKind::Lc => (0..graph.n())
            .map(|i| graph.local_complement(i).expect("vertex in range"))
            .collect(),
    }
}

/// Breadth-first closure. Each layer is expanded in key order, so the
/// result and the point of failure do not depend on hashing.
pub fn orbit(graph: &Graph, kind: MoveKind, cap: usize) -> Result<GraphOrbit> {
    let mut members = BTreeMap::new();
    members.insert(graph.upper_triangle_key(), graph.clone());
    let mut frontier = vec![graph.clone()];
    while !frontier.is_empty() {
        let mut next = BTreeMap::new();
        for g in &frontier {
            for h in neighbours(g, kind) {
                let key = h.upper_triangle_key();
                if !members.contains_key(&key) {
                    next.entry(key).or_insert(h);
                }
            }
        }
        if members.len() + next.len() > cap {
            return Err(Error::CapExceeded {
                cap,
                partial: members.len(),
            });
        }
        frontier = next.values().cloned().collect();
        members.extend(next);
    }
    Ok(GraphOrbit {
        kind,
        source: graph.clone(),
        members,
    })
}

pub fn elc_orbit(graph: &Graph, cap: usize) -> Result<GraphOrbit> {
    orbit(graph, MoveKind::Elc, cap)
}

pub fn lc_orbit(graph: &Graph, cap: usize) -> Result<GraphOrbit> {
    orbit(graph, MoveKind::Lc, cap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::GraphKind;

    fn gen(kind: GraphKind) -> Graph {
        Graph::generate(kind).unwrap()
    }

    #[test]
    fn examples() {
        let k2 = gen(GraphKind::Complete(2));
        let p3 = gen(GraphKind::Path(3));
        let k3 = gen(GraphKind::Complete(3));
        assert_eq!(elc_orbit(&k2, DEFAULT_ORBIT_CAP).unwrap().len(), 1);
        assert_eq!(lc_orbit(&k2, DEFAULT_ORBIT_CAP).unwrap().len(), 1);
        assert_eq!(elc_orbit(&p3, DEFAULT_ORBIT_CAP).unwrap().len(), 3);
        let lc = lc_orbit(&p3, DEFAULT_ORBIT_CAP).unwrap();
        assert_eq!(lc.len(), 4);
        assert!(lc.contains(&k3));
        assert_eq!(elc_orbit(&k3, DEFAULT_ORBIT_CAP).unwrap().len(), 1);
        assert_eq!(lc_orbit(&Graph::empty(4), DEFAULT_ORBIT_CAP).unwrap().len(), 1);
    }

    #[test]
    fn elc_inside_lc() {
        for kind in [GraphKind::Path(5), GraphKind::Cycle(5), GraphKind::Complete(4)] {
            let g = gen(kind);
            let e = elc_orbit(&g, DEFAULT_ORBIT_CAP).unwrap();
            let l = lc_orbit(&g, DEFAULT_ORBIT_CAP).unwrap();
            assert!(e.contains(&g));
            assert!(e.is_subset_of(&l));
        }
    }

    #[test]
    fn cap_reports_partial() {
        let g = gen(GraphKind::Path(3));
        match elc_orbit(&g, 2) {
            Err(Error::CapExceeded { cap: 2, partial }) => assert_eq!(partial, 1),
            other => panic!("unexpected {other:?}"),
        }
    }
}
