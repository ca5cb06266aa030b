//! Linear fractional transformations `Γ ↦ (AΓ + B)(CΓ + D)⁻¹` over GF(2)
//! with diagonal `A, B, C, D`.
//!
//! An operator is stored as its four diagonals. Each vertex carries a 2×2
//! block `[[a, b], [c, d]]`, and `ad + bc = 1` must hold at every vertex, so
//! the operators form the group `GL(2, GF(2))ⁿ`. The operators
//! `H^A = [A + I, A, A, A + I]` form an abelian subgroup isomorphic to
//! `(GF(2)ⁿ, +)`, and their action on adjacency matrices is exactly
//! edge-local complementation.

use crate::error::{DomainFailure, Error, Result};
use crate::gf2::{BitMatrix, BitVector};
use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LftOp {
    a: BitVector,
    b: BitVector,
    c: BitVector,
    d: BitVector,
}

impl LftOp {
    pub fn new(a: BitVector, b: BitVector, c: BitVector, d: BitVector) -> Result<Self> {
        let n = a.len();
        for v in [&b, &c, &d] {
            if v.len() != n {
                return Err(Error::SizeMismatch { expected: n, actual: v.len() });
            }
        }
        let det = a.and(&d).xor(&b.and(&c));
        if let Some(vertex) = det.not().first_one() {
            return Err(Error::NotInvertibleBlock { vertex });
        }
        Ok(Self { a, b, c, d })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            a: BitVector::ones(n),
            b: BitVector::zeros(n),
            c: BitVector::zeros(n),
            d: BitVector::ones(n),
        }
    }

    /// `H^A = [A + I, A, A, A + I]`.
    pub fn make_h(set: &VertexSet) -> Self {
        let s = set.bits().clone();
        let not_s = s.not();
        Self {
            a: not_s.clone(),
            b: s.clone(),
            c: s,
            d: not_s,
        }
    }

    /// `[I, diag(Γ_i), E_i, I]`, which maps `Γ` to `Γ*i`.
    pub fn local_complement_op(graph: &Graph, i: usize) -> Result<Self> {
        let n = graph.n();
        if i >= n {
            return Err(Error::VertexOutOfRange { vertex: i, n });
        }
        Ok(Self {
            a: BitVector::ones(n),
            b: graph.neighbors(i).clone(),
            c: BitVector::unit(n, i),
            d: BitVector::ones(n),
        })
    }

    pub fn n(&self) -> usize {
        self.a.len()
    }

    pub fn a(&self) -> &BitVector {
        &self.a
    }
    pub fn b(&self) -> &BitVector {
        &self.b
    }
    pub fn c(&self) -> &BitVector {
        &self.c
    }
    pub fn d(&self) -> &BitVector {
        &self.d
    }

    /// If this operator is `H^A` for some `A`, returns `supp(A)`.
    pub fn as_h(&self) -> Option<VertexSet> {
        let s = &self.b;
        (self.c == *s && self.a == s.not() && self.d == s.not()).then(|| VertexSet::from_bits(s.clone()))
    }

    /// `self ∘ first`, i.e. the block product `self · first` at every vertex.
    pub fn compose(&self, first: &Self) -> Result<Self> {
        if self.n() != first.n() {
            return Err(Error::SizeMismatch {
                expected: self.n(),
                actual: first.n(),
            });
        }
        let (a2, b2, c2, d2) = (&self.a, &self.b, &self.c, &self.d);
        let (a1, b1, c1, d1) = (&first.a, &first.b, &first.c, &first.d);
        Ok(Self {
            a: a2.and(a1).xor(&b2.and(c1)),
            b: a2.and(b1).xor(&b2.and(d1)),
            c: c2.and(a1).xor(&d2.and(c1)),
            d: c2.and(b1).xor(&d2.and(d1)),
        })
    }

    fn check_size(&self, graph: &Graph) {
        assert_eq!(self.n(), graph.n(), "operator and graph sizes differ");
    }

    /// Domain membership without inverting anything: with `ω = supp(C)`,
    /// `Γ[ω] + D[ω]` must be nonsingular and `Γ · diag(AC) = diag(BD)`.
    ///
    /// Panics if sizes differ.
    pub fn in_domain(&self, graph: &Graph) -> bool {
        self.domain_failure(graph).is_none()
    }

    pub fn domain_failure(&self, graph: &Graph) -> Option<DomainFailure> {
        self.check_size(graph);
        let omega = VertexSet::from_bits(self.c.clone());
        let idx: Vec<usize> = omega.iter().collect();
        let block = graph
            .adjacency()
            .principal_submatrix(&omega)
            .add_diagonal(&self.d.select(&idx));
        if !block.is_nonsingular() {
            return Some(DomainFailure::SingularDenominator);
        }
        let ac = self.a.and(&self.c);
        let bd = self.b.and(&self.d);
        if graph.adjacency().mul_vec(&ac) != bd {
            return Some(DomainFailure::NonzeroDiagonal);
        }
        None
    }

    /// `(AΓ + B)(CΓ + D)⁻¹`, computed directly.
    pub fn apply(&self, graph: &Graph) -> Result<Graph> {
        if self.n() != graph.n() {
            return Err(Error::SizeMismatch {
                expected: self.n(),
                actual: graph.n(),
            });
        }
        let gamma = graph.adjacency();
        let denominator = gamma.scale_rows(&self.c).add_diagonal(&self.d);
        let inv = denominator
            .inverse()
            .map_err(|_| Error::NotInDomain(DomainFailure::SingularDenominator))?;
        let numerator = gamma.scale_rows(&self.a).add_diagonal(&self.b);
        let image = numerator.mul(&inv);
        if !image.diagonal_bits().is_zero() {
            return Err(Error::NotInDomain(DomainFailure::NonzeroDiagonal));
        }
        Graph::from_adjacency(image)
    }

    /// `Γ₂ C Γ + A Γ + Γ₂ D + B = 0`. Holds exactly when `Γ` is in the domain
    /// and the operator maps it to `Γ₂`.
    ///
    /// Panics if sizes differ.
    pub fn bilinear_check(&self, graph: &Graph, image: &Graph) -> bool {
        self.check_size(graph);
        self.check_size(image);
        let g = graph.adjacency();
        let g2 = image.adjacency();
        let lhs = g2
            .scale_cols(&self.c)
            .mul(g)
            .add(&g.scale_rows(&self.a))
            .add(&g2.scale_cols(&self.d))
            .add_diagonal(&self.b);
        lhs.is_zero()
    }
}

/// Domain test specialised to `H^A`: `Γ[supp(A)]` nonsingular.
pub fn h_in_domain(set: &VertexSet, graph: &Graph) -> bool {
    graph.adjacency().principal_submatrix(set).is_nonsingular()
}

/// `H^A(Γ)` assembled block by block, with `ω = supp(A)`:
///
/// ```text
/// H^A(Γ)[ω]  = Γ[ω]⁻¹
/// H^A(Γ)⟨ω⟩ = Γ[ω]⁻¹ Γ⟨ω⟩
/// H^A(Γ)[ω̄]  = Γ[ω̄] + Γ⟨ω⟩ᵀ Γ[ω]⁻¹ Γ⟨ω⟩
/// ```
pub fn apply_h_blockwise(set: &VertexSet, graph: &Graph) -> Result<Graph> {
    let n = graph.n();
    if set.universe() != n {
        return Err(Error::SizeMismatch {
            expected: n,
            actual: set.universe(),
        });
    }
    let gamma = graph.adjacency();
    let inside: Vec<usize> = set.iter().collect();
    let outside: Vec<usize> = set.complement().iter().collect();

    let inv = gamma
        .principal_submatrix(set)
        .inverse()
        .map_err(|_| Error::NotInDomain(DomainFailure::SingularDenominator))?;
    let off = gamma.offdiag_submatrix(set);
    let inv_off = inv.mul(&off);
    let rest = gamma.submatrix(&outside, &outside).add(&off.transpose().mul(&inv_off));

    let mut out = BitMatrix::zeros(n, n);
    for (r, &i) in inside.iter().enumerate() {
        for c in inv.row(r).iter_ones() {
            out.set(i, inside[c], true);
        }
        for c in inv_off.row(r).iter_ones() {
            out.set(i, outside[c], true);
            out.set(outside[c], i, true);
        }
    }
    for (r, &i) in outside.iter().enumerate() {
        for c in rest.row(r).iter_ones() {
            out.set(i, outside[c], true);
        }
    }
    Graph::from_adjacency(out)
}
