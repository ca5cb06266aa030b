//! The global interlace polynomial `q(G, x) = Σ_ω (x - 1)^{s(Γ[ω])}`.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::invariants::{corank_histogram, sigma_space, Enumeration};

/// `q(G, x)` in two bases: `b[m]` counts subsets of corank `m`, so
/// `q = Σ b_m (x - 1)^m`, and `a` holds the monomial coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InterlacePoly {
    n: usize,
    b: Vec<i128>,
    a: Vec<i128>,
}

fn binomial(n: usize, k: usize) -> Result<i128> {
    let mut c: i128 = 1;
    for t in 0..k.min(n - k) {
        c = c.checked_mul((n - t) as i128).ok_or(Error::Overflow)? / (t as i128 + 1);
    }
    Ok(c)
}

/// `a_i = Σ_{k ≥ i} (-1)^{i+k} C(k, i) b_k`.
fn to_monomial(b: &[i128]) -> Result<Vec<i128>> {
    let mut a = vec![0i128; b.len()];
    for (i, ai) in a.iter_mut().enumerate() {
        for (k, &bk) in b.iter().enumerate().skip(i) {
            let term = binomial(k, i)?.checked_mul(bk).ok_or(Error::Overflow)?;
            *ai = if (i + k) % 2 == 0 { ai.checked_add(term) } else { ai.checked_sub(term) }.ok_or(Error::Overflow)?;
        }
    }
    Ok(a)
}

/// `b_m = Σ_{i ≥ m} C(i, m) a_i`, from expanding `x^i = ((x - 1) + 1)^i`.
fn to_shifted(a: &[i128]) -> Result<Vec<i128>> {
    let mut b = vec![0i128; a.len()];
    for (m, bm) in b.iter_mut().enumerate() {
        for (i, &ai) in a.iter().enumerate().skip(m) {
            let term = binomial(i, m)?.checked_mul(ai).ok_or(Error::Overflow)?;
            *bm = bm.checked_add(term).ok_or(Error::Overflow)?;
        }
    }
    Ok(b)
}

impl InterlacePoly {
    /// Builds the polynomial from its corank counts.
    pub fn from_corank_counts(b: Vec<i128>) -> Result<Self> {
        let n = b.len().saturating_sub(1);
        let a = to_monomial(&b)?;
        Ok(Self { n, b, a })
    }

    pub fn from_monomial(a: Vec<i128>) -> Result<Self> {
        let n = a.len().saturating_sub(1);
        let b = to_shifted(&a)?;
        Ok(Self { n, b, a })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Coefficients of `(x - 1)^m`, indexed by `m`.
    pub fn corank_counts(&self) -> &[i128] {
        &self.b
    }

    /// Coefficients of `x^i`, indexed by `i`.
    pub fn coefficients(&self) -> &[i128] {
        &self.a
    }

    pub fn evaluate(&self, x: i128) -> Result<i128> {
        let mut acc: i128 = 0;
        for &c in self.b.iter().rev() {
            acc = acc
                .checked_mul(x - 1)
                .and_then(|v| v.checked_add(c))
                .ok_or(Error::Overflow)?;
        }
        Ok(acc)
    }

    /// Number of subsets `ω` with `Γ[ω]` nonsingular.
    pub fn value_at_one(&self) -> i128 {
        self.b.first().copied().unwrap_or(0)
    }
}

impl fmt::Display for InterlacePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.a.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.unsigned_abs();
            match (i, mag) {
                (0, _) => write!(f, "{mag}")?,
                (1, 1) => write!(f, "x")?,
                (1, _) => write!(f, "{mag}x")?,
                (_, 1) => write!(f, "x^{i}")?,
                _ => write!(f, "{mag}x^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

pub fn interlace_poly(graph: &Graph) -> Result<InterlacePoly> {
    interlace_poly_with(graph, &Enumeration::default())
}

pub fn interlace_poly_with(graph: &Graph, opts: &Enumeration) -> Result<InterlacePoly> {
    let hist = corank_histogram(graph, opts)?;
    let b = hist
        .into_iter()
        .map(|c| i128::try_from(c).map_err(|_| Error::Overflow))
        .collect::<Result<Vec<_>>>()?;
    InterlacePoly::from_corank_counts(b)
}

/// Returns `|Σ_e(G)|` and whether it divides every monomial coefficient.
pub fn divisibility_check(graph: &Graph, poly: &InterlacePoly) -> (u128, bool) {
    let size = sigma_space(graph).size();
    let ok = poly
        .coefficients()
        .iter()
        .all(|&c| c.unsigned_abs() % size == 0);
    (size, ok)
}

/// A structural reason forcing every coefficient of `q` to be even.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EvennessReason {
    /// Adjacent vertices with the same remaining neighbours.
    Twins(usize, usize),
    /// Every degree is odd and every two neighbourhoods meet evenly.
    OddDegreeEvenIntersections,
}

/// Checks the two sufficient conditions for `|Σ_e(G)| > 1`. The empty
/// graph on zero vertices satisfies the second vacuously but has a trivial
/// stabiliser, so it is excluded.
pub fn evenness_sufficient(graph: &Graph) -> Option<EvennessReason> {
    if let Some(&(i, j)) = graph.twins().first() {
        debug_assert!(sigma_space(graph).dim() > 0);
        return Some(EvennessReason::Twins(i, j));
    }
    let n = graph.n();
    if n == 0 {
        return None;
    }
    let odd = (0..n).all(|i| graph.degree(i) % 2 == 1);
    let even_meets = (0..n).all(|i| {
        (i + 1..n).all(|j| !graph.neighbors(i).dot(graph.neighbors(j)))
    });
    let reason = (odd && even_meets).then_some(EvennessReason::OddDegreeEvenIntersections);
    debug_assert!(reason.is_none() || graph.adjacency().mul(graph.adjacency()) == crate::gf2::BitMatrix::identity(n));
    reason
}
