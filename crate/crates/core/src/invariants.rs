//! Counting and invariants of edge-local equivalence classes.
//!
//! The class of `G` has `|Δ_e(G)| / |Σ_e(G)|` members, where `Δ_e(G)` is the
//! set of vertex subsets with a nonsingular principal submatrix and
//! `Σ_e(G) = {x : (Γ + I) diag(x) (Γ + I) = 0}` is the stabiliser of `Γ`
//! inside the `H^A` group.

use std::collections::VecDeque;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gf2::{rank_words, BitMatrix, BitVector};
use crate::graph::Graph;

/// Default upper bound on `n` for the `2ⁿ` subset walks.
pub const DEFAULT_SUBSET_CAP: usize = 24;

/// Hard limit of the walker: rows are packed into single words and the
/// subset counter is a `u64`.
const WALKER_LIMIT: usize = 63;

/// Settings for the exhaustive walk over vertex subsets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Enumeration {
    pub cap: usize,
    pub parallel: bool,
}

impl Default for Enumeration {
    fn default() -> Self {
        Self {
            cap: DEFAULT_SUBSET_CAP,
            parallel: false,
        }
    }
}

impl Enumeration {
    pub fn with_cap(cap: usize) -> Self {
        Self { cap, ..Self::default() }
    }

    pub fn parallel(self) -> Self {
        Self { parallel: true, ..self }
    }

    fn check(&self, n: usize) -> Result<()> {
        let cap = self.cap.min(WALKER_LIMIT);
        if n > cap {
            Err(Error::TooLarge { n, cap })
        } else {
            Ok(())
        }
    }
}

const CHUNK_BITS: u32 = 14;

fn histogram_range(rows: &[u64], n: usize, range: std::ops::Range<u64>) -> Vec<u128> {
    let mut hist = vec![0u128; n + 1];
    let mut buf = [0u64; 64];
    for mask in range {
        let mut k = 0;
        let mut m = mask;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            buf[k] = rows[v] & mask;
            k += 1;
            m &= m - 1;
        }
        let rank = rank_words(&mut buf[..k]);
        hist[k - rank] += 1;
    }
    hist
}

/// `hist[s]` is the number of subsets `ω` with corank `s(Γ[ω]) = s`, the
/// empty set counting as corank 0. Subsets are visited in ascending binary
/// order; the parallel walk splits that order into fixed chunks and sums, so
/// both give identical counts.
pub fn corank_histogram(graph: &Graph, opts: &Enumeration) -> Result<Vec<u128>> {
    let n = graph.n();
    opts.check(n)?;
    let rows: Vec<u64> = graph.adjacency().row_slice().iter().map(BitVector::low_word).collect();
    let total = 1u64 << n;
    if !opts.parallel || n <= CHUNK_BITS as usize {
        return Ok(histogram_range(&rows, n, 0..total));
    }
    let chunk = 1u64 << CHUNK_BITS;
    let hist = (0..total / chunk)
        .into_par_iter()
        .map(|c| histogram_range(&rows, n, c * chunk..(c + 1) * chunk))
        .reduce(
            || vec![0u128; n + 1],
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(b) {
                    *x += y;
                }
                a
            },
        );
    Ok(hist)
}

/// `|Δ_e(G)|`: the number of subsets with a nonsingular principal submatrix,
/// the empty set included.
pub fn delta_count(graph: &Graph) -> Result<u128> {
    delta_count_with(graph, &Enumeration::default())
}

pub fn delta_count_with(graph: &Graph, opts: &Enumeration) -> Result<u128> {
    Ok(corank_histogram(graph, opts)?[0])
}

/// The space `Σ_e(G)`, held as a basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaSpace {
    n: usize,
    basis: BitMatrix,
}

impl SigmaSpace {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Columns span the space.
    pub fn basis(&self) -> &BitMatrix {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    /// `|Σ_e(G)| = 2^dim`.
    pub fn size(&self) -> u128 {
        1u128 << self.dim()
    }

    pub fn contains(&self, x: &BitVector) -> bool {
        self.basis.column_span_contains(x)
    }

    /// Reduced basis; equal for equal spaces.
    pub fn canonical_basis(&self) -> BitMatrix {
        self.basis.column_space_basis()
    }

    pub fn same_span(&self, other: &Self) -> bool {
        self.n == other.n && self.canonical_basis() == other.canonical_basis()
    }
}

/// `(Γ + I) diag(x) (Γ + I) = 0`, checked directly.
pub fn stabilises(graph: &Graph, x: &BitVector) -> bool {
    let g = graph.adjacency().add_identity();
    g.scale_cols(x).mul(&g).is_zero()
}

/// `Σ_e(G)` as the null space of the `n² × n` matrix with columns `Γ̃_i ⊗ Γ̃_i`.
pub fn sigma_space(graph: &Graph) -> SigmaSpace {
    let m = crate::equivalence::recognition_matrix(graph, graph).expect("same size");
    let basis = m.kernel_basis();
    for x in basis.columns() {
        assert!(stabilises(graph, &x), "kernel vector {x} does not fix the graph");
    }
    SigmaSpace { n: graph.n(), basis }
}

/// `|L_e(G)| = |Δ_e(G)| / |Σ_e(G)|`.
pub fn class_size(graph: &Graph) -> Result<u128> {
    class_size_with(graph, &Enumeration::default())
}

pub fn class_size_with(graph: &Graph, opts: &Enumeration) -> Result<u128> {
    let delta = delta_count_with(graph, opts)?;
    Ok(divide_exact(delta, sigma_space(graph).size()))
}

fn divide_exact(delta: u128, sigma: u128) -> u128 {
    assert_eq!(delta % sigma, 0, "|Δ_e| = {delta} is not a multiple of |Σ_e| = {sigma}");
    delta / sigma
}

/// `ν_ij`: entrywise product of rows `i` and `j`.
fn nu(graph: &Graph, i: usize, j: usize) -> BitVector {
    graph.neighbors(i).and(graph.neighbors(j))
}

/// The bineighborhood space `ν(G)`, as a reduced basis in the columns.
///
/// Generated by `ν_ij` for every non-adjacent pair `i ≠ j`, and by
/// `Σ_{(i,j) ∈ C} ν_ij` over the fundamental cycles of a BFS spanning forest
/// rooted at the smallest vertex of each component. The map from edge sets
/// to these sums is linear, and fundamental cycles span the cycle space, so
/// this equals the span over all cycles.
pub fn bineighborhood_space(graph: &Graph) -> BitMatrix {
    let n = graph.n();
    let mut generators = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if !graph.has_edge(i, j) {
                generators.push(nu(graph, i, j));
            }
        }
    }

    let mut parent = vec![usize::MAX; n];
    let mut order = vec![usize::MAX; n];
    let mut tick = 0;
    for root in 0..n {
        if order[root] != usize::MAX {
            continue;
        }
        order[root] = tick;
        tick += 1;
        parent[root] = root;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for w in graph.neighbors(u).iter_ones() {
                if order[w] == usize::MAX {
                    order[w] = tick;
                    tick += 1;
                    parent[w] = u;
                    queue.push_back(w);
                }
            }
        }
    }
    // Sum of ν along the tree path from v up to its root.
    let mut to_root: Vec<Option<BitVector>> = vec![None; n];
    fn path_sum(graph: &Graph, parent: &[usize], memo: &mut [Option<BitVector>], v: usize) -> BitVector {
        if let Some(s) = &memo[v] {
            return s.clone();
        }
        let s = if parent[v] == v {
            BitVector::zeros(graph.n())
        } else {
            path_sum(graph, parent, memo, parent[v]).xor(&nu(graph, v, parent[v]))
        };
        memo[v] = Some(s.clone());
        s
    }
    for (u, w) in graph.edges() {
        if parent[w] == u || parent[u] == w {
            continue;
        }
        // The two root paths share a prefix that cancels mod 2.
        let cycle = path_sum(graph, &parent, &mut to_root, u)
            .xor(&path_sum(graph, &parent, &mut to_root, w))
            .xor(&nu(graph, u, w));
        generators.push(cycle);
    }
    BitMatrix::from_columns(&generators, n).column_space_basis()
}

/// Everything the class-level invariants say about one graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantReport {
    pub n: usize,
    /// `None` when `n` exceeds the enumeration cap.
    pub delta_count: Option<u128>,
    pub sigma_dim: usize,
    pub sigma_basis: BitMatrix,
    pub class_size: Option<u128>,
    pub rank_gamma_plus_i: usize,
    /// Columns span `ker(Γ + I)`.
    pub kernel_basis: BitMatrix,
    pub twin_pairs: Vec<(usize, usize)>,
    /// `Γ² = I`.
    pub orthogonal: bool,
}

pub fn invariant_report(graph: &Graph) -> InvariantReport {
    invariant_report_with(graph, &Enumeration::default())
}

pub fn invariant_report_with(graph: &Graph, opts: &Enumeration) -> InvariantReport {
    let n = graph.n();
    let sigma = sigma_space(graph);
    let delta = delta_count_with(graph, opts).ok();
    let class = delta.map(|d| divide_exact(d, sigma.size()));
    let g_plus_i = graph.adjacency().add_identity();
    let gamma = graph.adjacency();
    let orthogonal = gamma.mul(gamma) == BitMatrix::identity(n);
    assert_eq!(orthogonal, sigma.contains(&BitVector::ones(n)), "Γ² = I iff the all-ones vector is in Σ_e");
    InvariantReport {
        n,
        delta_count: delta,
        sigma_dim: sigma.dim(),
        sigma_basis: sigma.basis().clone(),
        class_size: class,
        rank_gamma_plus_i: g_plus_i.rank(),
        kernel_basis: g_plus_i.kernel_basis(),
        twin_pairs: graph.twins(),
        orthogonal,
    }
}
