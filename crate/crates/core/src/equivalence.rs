//! Recognition of edge-local equivalence and constructive move sequences.
//!
//! Two graphs are edge-locally equivalent exactly when some `H^A` maps one
//! adjacency matrix onto the other. Finding `A` is an affine system of `n²`
//! equations in `n` unknowns; turning `A` into an explicit sequence of
//! edge-local complementations is a reduction of `R = AΓ + A + I` to the
//! identity, two support vertices at a time.

use std::fmt;

use crate::error::{DomainFailure, Error, Result};
use crate::gf2::{kronecker, AffineSolution, BitMatrix, BitVector};
use crate::graph::{Graph, VertexSet};
use crate::lft::{h_in_domain, LftOp};

/// An ordered list of edges `{i, j}` to complement along.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct ElcSequence(Vec<(usize, usize)>);

impl ElcSequence {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_pairs(pairs: Vec<(usize, usize)>) -> Self {
        Self(pairs)
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, i: usize, j: usize) {
        self.0.push((i, j));
    }

    /// Union of the pairs as a multiset mod 2, i.e. the `A` this sequence realises.
    pub fn support(&self, n: usize) -> VertexSet {
        let mut bits = BitVector::zeros(n);
        for &(i, j) in &self.0 {
            bits.flip(i);
            bits.flip(j);
        }
        VertexSet::from_bits(bits)
    }

    /// Applies the moves in order, failing if a pair is not an edge when its turn comes.
    pub fn replay(&self, graph: &Graph) -> Result<Graph> {
        let mut current = graph.clone();
        for (step, &(i, j)) in self.0.iter().enumerate() {
            current = current.edge_local_complement(i, j).map_err(|e| match e {
                Error::NotAnEdge { i, j } => Error::IllegalMove { step, i, j },
                other => other,
            })?;
        }
        Ok(current)
    }
}

/// 1-based, space separated: `1,2 3,4`.
impl fmt::Display for ElcSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (i, j)) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{},{}", i + 1, j + 1)?;
        }
        Ok(())
    }
}

/// `f_i(X) = X (E_i X + X_ii E_i + I)`.
pub fn f_transform(x: &BitMatrix, i: usize) -> Result<BitMatrix> {
    if !x.is_square() {
        return Err(Error::SizeMismatch {
            expected: x.rows(),
            actual: x.cols(),
        });
    }
    let n = x.rows();
    if i >= n {
        return Err(Error::VertexOutOfRange { vertex: i, n });
    }
    // E_i X keeps only row i of X.
    let mut factor = BitMatrix::identity(n);
    factor.row_mut(i).xor_assign(x.row(i));
    if x.get(i, i) {
        factor.flip(i, i);
    }
    Ok(x.mul(&factor))
}

/// `f_ij = f_i ∘ f_j ∘ f_i`.
pub fn f_pair(x: &BitMatrix, i: usize, j: usize) -> Result<BitMatrix> {
    f_transform(&f_transform(&f_transform(x, i)?, j)?, i)
}

/// Working state of the reduction: the current graph, the support still to
/// be consumed, and the moves emitted so far. `R = AΓ + A + I` is derived
/// from the first two.
#[derive(Debug, Clone)]
pub struct ReductionState {
    graph: Graph,
    support: VertexSet,
    emitted: ElcSequence,
}

impl ReductionState {
    pub fn new(graph: &Graph, support: &VertexSet) -> Result<Self> {
        if support.universe() != graph.n() {
            return Err(Error::SizeMismatch {
                expected: graph.n(),
                actual: support.universe(),
            });
        }
        if !h_in_domain(support, graph) {
            return Err(Error::NotInDomain(DomainFailure::SingularDenominator));
        }
        Ok(Self {
            graph: graph.clone(),
            support: support.clone(),
            emitted: ElcSequence::new(),
        })
    }

    /// `R = AΓ + A + I`.
    pub fn r_matrix(&self) -> BitMatrix {
        let a = self.support.bits();
        self.graph.adjacency().scale_rows(a).add_diagonal(a).add_identity()
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn support(&self) -> &VertexSet {
        &self.support
    }

    pub fn emitted(&self) -> &ElcSequence {
        &self.emitted
    }

    pub fn is_done(&self) -> bool {
        self.support.is_empty()
    }

    /// One round: `i` is the smallest vertex left in the support and `j` the
    /// smallest row with `R_ji = 1`. Column `i` of `R` is column `i` of `Γ`
    /// restricted to the support (the diagonal entry vanishes), so `{i, j}`
    /// is an edge of the current graph. Returns the emitted pair.
    pub fn step(&mut self) -> Option<(usize, usize)> {
        let i = self.support.iter().next()?;
        let r = self.r_matrix();
        debug_assert!(!r.get(i, i), "R_ii must vanish on the support");
        let j = (0..r.rows())
            .find(|&j| r.get(j, i))
            .expect("R is nonsingular, so column i is nonzero");
        debug_assert!(self.support.contains(j) && j != i);

        self.graph = self
            .graph
            .edge_local_complement(i, j)
            .expect("R_ji = 1 implies {i, j} is an edge");
        self.support.remove(i);
        self.support.remove(j);
        self.emitted.push(i, j);

        debug_assert_eq!(
            f_pair(&r, i, j).expect("square"),
            self.r_matrix(),
            "f_ij(R) must equal A'Γ' + A' + I"
        );
        debug_assert!(self.r_matrix().is_nonsingular());
        Some((i, j))
    }

    pub fn into_sequence(self) -> ElcSequence {
        self.emitted
    }
}

/// Splits `H^A` into edge-local complementations: replaying the result from
/// `graph` gives `H^A(Γ)`, and the sequence has `|supp(A)| / 2` moves.
pub fn decompose_h(graph: &Graph, support: &VertexSet) -> Result<ElcSequence> {
    let mut state = ReductionState::new(graph, support)?;
    while state.step().is_some() {}
    Ok(state.into_sequence())
}

/// The `n² × n` matrix whose `i`-th column is `Γ̃'_i ⊗ Γ̃_i`, where `Γ̃_i` is
/// column `i` of `Γ + I`. Row `r n + c` holds entry `(r, c)` of
/// `(Γ' + I) A (Γ + I)` as a function of the diagonal of `A`.
pub fn recognition_matrix(graph: &Graph, target: &Graph) -> Result<BitMatrix> {
    let n = graph.n();
    if target.n() != n {
        return Err(Error::SizeMismatch {
            expected: n,
            actual: target.n(),
        });
    }
    // Γ + I is symmetric, so its rows are its columns.
    let g = graph.adjacency().add_identity();
    let t = target.adjacency().add_identity();
    let columns: Vec<BitVector> = (0..n).map(|i| kronecker(t.row(i), g.row(i))).collect();
    Ok(BitMatrix::from_columns(&columns, n * n))
}

fn flatten(m: &BitMatrix) -> BitVector {
    let n = m.cols();
    let mut v = BitVector::zeros(m.rows() * n);
    for (r, row) in m.row_slice().iter().enumerate() {
        for c in row.iter_ones() {
            v.set(r * n + c, true);
        }
    }
    v
}

/// Full solution set of `(Γ' + I) A (Γ + I) = Γ + Γ'`, or `None` if empty.
pub fn recognition_solutions(graph: &Graph, target: &Graph) -> Result<Option<AffineSolution>> {
    let m = recognition_matrix(graph, target)?;
    let rhs = flatten(&graph.adjacency().add(target.adjacency()));
    Ok(m.solve_affine(&rhs))
}

/// Finds `A` with `H^A(Γ) = Γ'`, or `None` when the graphs are not
/// edge-locally equivalent. Identical graphs always give the empty set.
pub fn recognize_elc(graph: &Graph, target: &Graph) -> Result<Option<VertexSet>> {
    if graph.n() != target.n() {
        return Err(Error::SizeMismatch {
            expected: graph.n(),
            actual: target.n(),
        });
    }
    if graph == target {
        return Ok(Some(VertexSet::empty(graph.n())));
    }
    let Some(solution) = recognition_solutions(graph, target)? else {
        return Ok(None);
    };
    let support = VertexSet::from_bits(solution.particular);
    debug_assert!(LftOp::make_h(&support).bilinear_check(graph, target));
    Ok(Some(support))
}

pub fn elc_sequence_between(graph: &Graph, target: &Graph) -> Result<Option<ElcSequence>> {
    match recognize_elc(graph, target)? {
        None => Ok(None),
        Some(support) => decompose_h(graph, &support).map(Some),
    }
}

/// Inverts a nonsingular adjacency matrix by edge-local complementations,
/// since `H^I(Γ) = Γ⁻¹`. Returns the moves and the graph of `Γ⁻¹`.
pub fn invert_via_elc(graph: &Graph) -> Result<(ElcSequence, Graph)> {
    let full = VertexSet::full(graph.n());
    if !h_in_domain(&full, graph) {
        return Err(Error::Singular);
    }
    let sequence = decompose_h(graph, &full)?;
    let inverse = sequence.replay(graph)?;
    debug_assert_eq!(Ok(inverse.adjacency().clone()), graph.adjacency().inverse());
    Ok((sequence, inverse))
}
