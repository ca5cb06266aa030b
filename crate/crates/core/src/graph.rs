//! Simple labeled graphs and the two complementation moves.
//!
//! Vertices are `0..n` in this API. Text formats and the command line use
//! 1-based labels.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitVector};

/// A subset of `{0, .., n-1}`. Doubles as the diagonal of a GF(2) diagonal matrix.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet {
    bits: BitVector,
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        Self {
            bits: BitVector::zeros(n),
        }
    }

    pub fn full(n: usize) -> Self {
        Self {
            bits: BitVector::ones(n),
        }
    }

    pub fn from_bits(bits: BitVector) -> Self {
        Self { bits }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(n: usize, members: I) -> Result<Self> {
        let mut bits = BitVector::zeros(n);
        for v in members {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            bits.set(v, true);
        }
        Ok(Self { bits })
    }

    /// Size of the ambient vertex set.
    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_zero()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.bits.get(v)
    }

    pub fn insert(&mut self, v: usize) {
        self.bits.set(v, true);
    }

    pub fn remove(&mut self, v: usize) {
        self.bits.set(v, false);
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.iter_ones()
    }

    pub fn complement(&self) -> Self {
        Self {
            bits: self.bits.not(),
        }
    }

    pub fn symmetric_difference(&self, other: &Self) -> Self {
        Self {
            bits: self.bits.xor(&other.bits),
        }
    }

    pub fn bits(&self) -> &BitVector {
        &self.bits
    }

    pub fn into_bits(self) -> BitVector {
        self.bits
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Formats as 1-based labels, e.g. `{1,2}`.
impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, v) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", v + 1)?;
        }
        f.write_str("}")
    }
}

/// A simple undirected graph on `0..n`, held as its adjacency matrix.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    adj: BitMatrix,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Self {
            adj: BitMatrix::zeros(n, n),
        }
    }

    /// Validates symmetry and zero diagonal.
    pub fn from_adjacency(adj: BitMatrix) -> Result<Self> {
        if !adj.is_square() {
            return Err(Error::SizeMismatch {
                expected: adj.rows(),
                actual: adj.cols(),
            });
        }
        let n = adj.rows();
        for i in 0..n {
            if adj.get(i, i) {
                return Err(Error::DiagonalViolation { i });
            }
            for j in i + 1..n {
                if adj.get(i, j) != adj.get(j, i) {
                    return Err(Error::SymmetryViolation { i, j });
                }
            }
        }
        Ok(Self { adj })
    }

    pub(crate) fn from_adjacency_unchecked(adj: BitMatrix) -> Self {
        debug_assert!(adj.is_symmetric() && adj.diagonal_bits().is_zero());
        Self { adj }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = BitMatrix::zeros(n, n);
        for &(i, j) in edges {
            for v in [i, j] {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            if i == j {
                return Err(Error::DiagonalViolation { i });
            }
            adj.set(i, j, true);
            adj.set(j, i, true);
        }
        Ok(Self { adj })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.rows()
    }

    pub fn adjacency(&self) -> &BitMatrix {
        &self.adj
    }

    #[inline]
    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adj.get(i, j)
    }

    /// `N(i)` as a bit vector (the `i`-th row of the adjacency matrix).
    #[inline]
    pub fn neighbors(&self, i: usize) -> &BitVector {
        self.adj.row(i)
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adj.row(i).count_ones()
    }

    /// Edges `(i, j)` with `i < j`, lexicographic.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n())
            .flat_map(|i| self.adj.row(i).iter_ones().filter(move |&j| j > i).map(move |j| (i, j)))
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.row_slice().iter().map(BitVector::count_ones).sum::<usize>() / 2
    }

    /// Row-major upper triangle of the adjacency matrix; identifies the labeled graph.
    pub fn upper_triangle_key(&self) -> BitVector {
        let n = self.n();
        let mut key = BitVector::zeros(n * n.saturating_sub(1) / 2);
        let mut pos = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.adj.get(i, j) {
                    key.set(pos, true);
                }
                pos += 1;
            }
        }
        key
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n() {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n() })
        } else {
            Ok(())
        }
    }

    /// `G*i`: complements the subgraph induced by `N(i)`.
    ///
    /// In matrix form `Γ + Γ_i Γ_iᵀ + diag(Γ_i)`.
    pub fn local_complement(&self, i: usize) -> Result<Self> {
        self.check_vertex(i)?;
        let nbrs = self.adj.row(i).clone();
        let mut adj = self.adj.clone();
        for k in nbrs.iter_ones() {
            let row = adj.row_mut(k);
            row.xor_assign(&nbrs);
            row.flip(k);
        }
        Ok(Self { adj })
    }

    /// `G*e` for the edge `e = {i, j}`.
    ///
    /// Uses the block form: the rows of `i` and `j` outside `e` swap, and
    /// `Γ[ē]` gains `Γ⟨e⟩ᵀ X Γ⟨e⟩` with `X = [[0,1],[1,0]]`, which expands to
    /// the rank-two update `a bᵀ + b aᵀ` for `a = N(i) \ e`, `b = N(j) \ e`.
    pub fn edge_local_complement(&self, i: usize, j: usize) -> Result<Self> {
        self.check_vertex(i)?;
        self.check_vertex(j)?;
        if i == j || !self.has_edge(i, j) {
            return Err(Error::NotAnEdge { i, j });
        }
        let mut outside = BitVector::ones(self.n());
        outside.set(i, false);
        outside.set(j, false);
        let a = self.adj.row(i).and(&outside);
        let b = self.adj.row(j).and(&outside);

        let mut adj = self.adj.clone();
        for k in outside.iter_ones() {
            let (ak, bk) = (a.get(k), b.get(k));
            let row = adj.row_mut(k);
            if ak {
                row.xor_assign(&b);
            }
            if bk {
                row.xor_assign(&a);
            }
            // Column block: k ~ i in the result iff k ~ j before.
            row.set(i, bk);
            row.set(j, ak);
        }
        let mut new_i = b.clone();
        new_i.set(j, true);
        let mut new_j = a;
        new_j.set(i, true);
        *adj.row_mut(i) = new_i;
        *adj.row_mut(j) = new_j;
        Ok(Self::from_adjacency_unchecked(adj))
    }

    /// Pairs `{i, j}` with `i ~ j` and `N(i) \ {j} = N(j) \ {i}`, ascending.
    pub fn twins(&self) -> Vec<(usize, usize)> {
        self.edges()
            .into_iter()
            .filter(|&(i, j)| {
                let mut ni = self.adj.row(i).clone();
                ni.set(j, false);
                let mut nj = self.adj.row(j).clone();
                nj.set(i, false);
                ni == nj
            })
            .collect()
    }

    /// Length of a shortest cycle, `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let n = self.n();
        let mut best: Option<usize> = None;
        for root in 0..n {
            let mut dist = vec![usize::MAX; n];
            let mut parent = vec![usize::MAX; n];
            let mut queue = VecDeque::from([root]);
            dist[root] = 0;
            while let Some(u) = queue.pop_front() {
                for w in self.adj.row(u).iter_ones() {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let len = dist[u] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// Strongly regular with parameters `(n, k, a, c)`.
    pub fn is_strongly_regular(&self, n: usize, k: usize, a: usize, c: usize) -> bool {
        if self.n() != n || (0..n).any(|i| self.degree(i) != k) {
            return false;
        }
        (0..n).all(|i| {
            (i + 1..n).all(|j| {
                let common = self.adj.row(i).and(self.adj.row(j)).count_ones();
                common == if self.has_edge(i, j) { a } else { c }
            })
        })
    }

    pub fn generate(kind: GraphKind) -> Result<Self> {
        match kind {
            GraphKind::Empty(n) => Ok(Self::empty(n)),
            GraphKind::Complete(n) => {
                let edges: Vec<_> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
                Self::from_edges(n, &edges)
            }
            GraphKind::Path(n) => {
                if n == 0 {
                    return Err(Error::InvalidSize { kind: "path", size: n });
                }
                let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
                Self::from_edges(n, &edges)
            }
            GraphKind::Cycle(n) => {
                if n < 3 {
                    return Err(Error::InvalidSize { kind: "cycle", size: n });
                }
                let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
                Self::from_edges(n, &edges)
            }
            GraphKind::Petersen => {
                let mut edges = Vec::with_capacity(15);
                for i in 0..5 {
                    edges.push((i, (i + 1) % 5));
                    edges.push((i, i + 5));
                    edges.push((i + 5, (i + 2) % 5 + 5));
                }
                Self::from_edges(10, &edges)
            }
            GraphKind::Clebsch => {
                // Vertices are the 16 four-bit strings; x ~ y iff x + y has weight 1 or 4.
                let mut edges = Vec::with_capacity(40);
                for x in 0usize..16 {
                    for y in x + 1..16 {
                        if matches!((x ^ y).count_ones(), 1 | 4) {
                            edges.push((x, y));
                        }
                    }
                }
                Self::from_edges(16, &edges)
            }
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n())?;
        for (k, (i, j)) in self.edges().into_iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}-{}", i + 1, j + 1)?;
        }
        f.write_str("])")
    }
}

/// Built-in graph families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphKind {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Empty(usize),
    Petersen,
    Clebsch,
}
