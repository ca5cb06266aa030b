//! Dense bit-packed linear algebra over GF(2).
//!
//! Matrices are stored row-major, one [`BitVector`] per row, so that the row
//! XOR at the heart of Gaussian elimination touches `cols / 64` words.
//! Elimination always pivots on the leftmost remaining column and the
//! topmost available row, which makes every result (kernel bases,
//! particular solutions) deterministic.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::VertexSet;

const WORD_BITS: usize = 64;

fn word_count(len: usize) -> usize {
    len.div_ceil(WORD_BITS)
}

/// A vector over GF(2). Bits past `len` in the last word are always zero.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitVector {
    len: usize,
    words: Vec<u64>,
}

impl BitVector {
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            words: vec![0; word_count(len)],
        }
    }

    pub fn ones(len: usize) -> Self {
        let mut v = Self {
            len,
            words: vec![u64::MAX; word_count(len)],
        };
        v.mask_tail();
        v
    }

    /// The canonical basis vector `e_i`.
    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(i, true);
        v
    }

    pub fn from_bools<I: IntoIterator<Item = bool>>(bits: I) -> Self {
        let bits: Vec<bool> = bits.into_iter().collect();
        let mut v = Self::zeros(bits.len());
        for (i, b) in bits.into_iter().enumerate() {
            if b {
                v.set(i, true);
            }
        }
        v
    }

    /// Builds a vector from the set positions. Panics if an index is out of range.
    pub fn from_indices<I: IntoIterator<Item = usize>>(len: usize, ones: I) -> Self {
        let mut v = Self::zeros(len);
        for i in ones {
            v.set(i, true);
        }
        v
    }

    /// Reads the low `len` bits of `word`, bit `i` of the word becoming entry `i`.
    pub fn from_word(len: usize, word: u64) -> Self {
        assert!(len <= WORD_BITS);
        let mut v = Self::zeros(len);
        if len > 0 {
            v.words[0] = word;
            v.mask_tail();
        }
        v
    }

    /// Parses a string of `'0'`/`'1'` characters.
    pub fn parse_bits(s: &str) -> Option<Self> {
        let mut bits = Vec::with_capacity(s.len());
        for ch in s.chars() {
            match ch {
                '0' => bits.push(false),
                '1' => bits.push(true),
                _ => return None,
            }
        }
        Some(Self::from_bools(bits))
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// The first word, i.e. entries `0..64`. Zero for empty vectors.
    #[inline]
    pub fn low_word(&self) -> u64 {
        self.words.first().copied().unwrap_or(0)
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit index {i} out of range (len={})", self.len);
        (self.words[i / WORD_BITS] >> (i % WORD_BITS)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit index {i} out of range (len={})", self.len);
        let mask = 1u64 << (i % WORD_BITS);
        if value {
            self.words[i / WORD_BITS] |= mask;
        } else {
            self.words[i / WORD_BITS] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "bit index {i} out of range (len={})", self.len);
        self.words[i / WORD_BITS] ^= 1u64 << (i % WORD_BITS);
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Positions of the set bits, ascending.
    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let bit = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * WORD_BITS + bit)
            })
        })
    }

    pub fn first_one(&self) -> Option<usize> {
        self.iter_ones().next()
    }

    pub fn xor_assign(&mut self, other: &Self) {
        assert_eq!(self.len, other.len, "length mismatch in xor");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn and_assign(&mut self, other: &Self) {
        assert_eq!(self.len, other.len, "length mismatch in and");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn xor(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.xor_assign(other);
        out
    }

    pub fn and(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.and_assign(other);
        out
    }

    pub fn not(&self) -> Self {
        let mut out = self.clone();
        for w in &mut out.words {
            *w = !*w;
        }
        out.mask_tail();
        out
    }

    /// GF(2) inner product.
    pub fn dot(&self, other: &Self) -> bool {
        assert_eq!(self.len, other.len, "length mismatch in dot");
        self.words
            .iter()
            .zip(&other.words)
            .fold(0u32, |acc, (a, b)| acc ^ (a & b).count_ones())
            & 1
            == 1
    }

    /// Keeps only the entries listed in `indices`, in that order.
    pub fn select(&self, indices: &[usize]) -> Self {
        Self::from_bools(indices.iter().map(|&i| self.get(i)))
    }

    pub fn to_bools(&self) -> Vec<bool> {
        (0..self.len).map(|i| self.get(i)).collect()
    }

    fn mask_tail(&mut self) {
        let rem = self.len % WORD_BITS;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVector({self})")
    }
}

impl fmt::Display for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// Kronecker product: entry `i * v.len() + j` is `u_i v_j`.
pub fn kronecker(u: &BitVector, v: &BitVector) -> BitVector {
    let mut out = BitVector::zeros(u.len() * v.len());
    for i in u.iter_ones() {
        let base = i * v.len();
        for j in v.iter_ones() {
            out.set(base + j, true);
        }
    }
    out
}

/// A dense GF(2) matrix stored as packed rows.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BitVector>,
}

/// Reduced row echelon form together with the pivot column of each nonzero row.
#[derive(Debug, Clone)]
struct Echelon {
    matrix: BitMatrix,
    pivots: Vec<usize>,
}

/// Solution set of an affine system `M x = y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineSolution {
    pub particular: BitVector,
    /// Columns span the kernel of `M`.
    pub homogeneous_basis: BitMatrix,
}

impl AffineSolution {
    pub fn dimension(&self) -> usize {
        self.homogeneous_basis.cols()
    }

    /// Enumerates all `2^dim` solutions, in the order of the binary counter
    /// over the homogeneous basis. Intended for small kernels.
    pub fn iter(&self) -> impl Iterator<Item = BitVector> + '_ {
        let dim = self.dimension();
        assert!(dim < 64, "solution space too large to enumerate");
        let basis = self.homogeneous_basis.columns();
        (0u64..(1u64 << dim)).map(move |mask| {
            let mut x = self.particular.clone();
            for (k, b) in basis.iter().enumerate() {
                if (mask >> k) & 1 == 1 {
                    x.xor_assign(b);
                }
            }
            x
        })
    }
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![BitVector::zeros(cols); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            rows: n,
            cols: n,
            data: (0..n).map(|i| BitVector::unit(n, i)).collect(),
        }
    }

    pub fn ones(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![BitVector::ones(cols); rows],
        }
    }

    /// Diagonal matrix with `diag` on the diagonal.
    pub fn diagonal(diag: &BitVector) -> Self {
        let n = diag.len();
        let mut m = Self::zeros(n, n);
        for i in diag.iter_ones() {
            m.data[i].set(i, true);
        }
        m
    }

    /// Builds a matrix from rows. All rows must share the length `cols`.
    pub fn from_rows(rows: Vec<BitVector>, cols: usize) -> Self {
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Self {
            rows: rows.len(),
            cols,
            data: rows,
        }
    }

    /// Builds a matrix whose columns are the given vectors (all of length `rows`).
    pub fn from_columns(columns: &[BitVector], rows: usize) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "ragged columns");
            for i in col.iter_ones() {
                m.data[i].set(j, true);
            }
        }
        m
    }

    /// Parses rows written as `'0'`/`'1'` strings. Panics on malformed input;
    /// meant for fixtures.
    pub fn from_strs(rows: &[&str]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let data = rows
            .iter()
            .map(|r| BitVector::parse_bits(r).expect("row must be 0/1"))
            .collect();
        Self::from_rows(data, cols)
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.data[i].get(j)
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        self.data[i].set(j, value);
    }

    #[inline]
    pub fn flip(&mut self, i: usize, j: usize) {
        self.data[i].flip(j);
    }

    #[inline]
    pub fn row(&self, i: usize) -> &BitVector {
        &self.data[i]
    }

    #[inline]
    pub fn row_mut(&mut self, i: usize) -> &mut BitVector {
        &mut self.data[i]
    }

    pub fn row_slice(&self) -> &[BitVector] {
        &self.data
    }

    pub fn column(&self, j: usize) -> BitVector {
        BitVector::from_bools(self.data.iter().map(|r| r.get(j)))
    }

    pub fn columns(&self) -> Vec<BitVector> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn diagonal_bits(&self) -> BitVector {
        BitVector::from_bools((0..self.rows.min(self.cols)).map(|i| self.get(i, i)))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(BitVector::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (i + 1..self.cols).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for (i, row) in self.data.iter().enumerate() {
            for j in row.iter_ones() {
                t.data[j].set(i, true);
            }
        }
        t
    }

    /// Entrywise sum over GF(2).
    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch in add");
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            a.xor_assign(b);
        }
        out
    }

    pub fn add_identity(&self) -> Self {
        assert!(self.is_square());
        let mut out = self.clone();
        for i in 0..self.rows {
            out.flip(i, i);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "shape mismatch in mul");
        let mut out = Self::zeros(self.rows, other.cols);
        for (i, row) in self.data.iter().enumerate() {
            let acc = &mut out.data[i];
            for k in row.iter_ones() {
                acc.xor_assign(&other.data[k]);
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &BitVector) -> BitVector {
        assert_eq!(self.cols, v.len(), "shape mismatch in mul_vec");
        BitVector::from_bools(self.data.iter().map(|r| r.dot(v)))
    }

    /// `D * self` for a diagonal `D` given by its diagonal: keeps rows where `diag` is set.
    pub fn scale_rows(&self, diag: &BitVector) -> Self {
        assert_eq!(diag.len(), self.rows);
        let mut out = self.clone();
        for (i, row) in out.data.iter_mut().enumerate() {
            if !diag.get(i) {
                *row = BitVector::zeros(self.cols);
            }
        }
        out
    }

    /// `self * D` for a diagonal `D`: keeps columns where `diag` is set.
    pub fn scale_cols(&self, diag: &BitVector) -> Self {
        assert_eq!(diag.len(), self.cols);
        let mut out = self.clone();
        for row in &mut out.data {
            row.and_assign(diag);
        }
        out
    }

    /// `self + D` for a diagonal `D`.
    pub fn add_diagonal(&self, diag: &BitVector) -> Self {
        assert!(self.is_square());
        assert_eq!(diag.len(), self.rows);
        let mut out = self.clone();
        for i in diag.iter_ones() {
            out.flip(i, i);
        }
        out
    }

    /// Rows and columns restricted to the given ascending index lists.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        let data = rows.iter().map(|&i| self.data[i].select(cols)).collect();
        Self::from_rows(data, cols.len())
    }

    /// `X[ω]`: the principal submatrix on `ω`, indices ascending.
    pub fn principal_submatrix(&self, set: &VertexSet) -> Self {
        assert!(self.is_square());
        assert_eq!(set.universe(), self.rows, "vertex set size mismatch");
        let idx: Vec<usize> = set.iter().collect();
        self.submatrix(&idx, &idx)
    }

    /// `X⟨ω⟩`: rows in `ω`, columns in the complement of `ω`.
    pub fn offdiag_submatrix(&self, set: &VertexSet) -> Self {
        assert!(self.is_square());
        assert_eq!(set.universe(), self.rows, "vertex set size mismatch");
        let inside: Vec<usize> = set.iter().collect();
        let outside: Vec<usize> = set.complement().iter().collect();
        self.submatrix(&inside, &outside)
    }

    fn echelon(&self) -> Echelon {
        self.echelon_with(None).0
    }

    /// Gauss-Jordan elimination. When `rhs` is given, the same row operations
    /// are replayed on it.
    fn echelon_with(&self, mut rhs: Option<BitVector>) -> (Echelon, Option<BitVector>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| m.data[i].get(c)) else {
                continue;
            };
            m.data.swap(r, p);
            if let Some(y) = rhs.as_mut() {
                let (yr, yp) = (y.get(r), y.get(p));
                y.set(r, yp);
                y.set(p, yr);
            }
            let pivot_row = m.data[r].clone();
            let pivot_bit = rhs.as_ref().map(|y| y.get(r));
            for i in 0..m.rows {
                if i != r && m.data[i].get(c) {
                    m.data[i].xor_assign(&pivot_row);
                    if let (Some(y), Some(true)) = (rhs.as_mut(), pivot_bit) {
                        y.flip(i);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (Echelon { matrix: m, pivots }, rhs)
    }

    pub fn rank(&self) -> usize {
        self.echelon().pivots.len()
    }

    /// Dimension of the null space.
    pub fn corank(&self) -> usize {
        self.cols - self.rank()
    }

    pub fn is_nonsingular(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Kernel basis as the columns of a `cols × (cols - rank)` matrix, one
    /// vector per free column in ascending order.
    pub fn kernel_basis(&self) -> Self {
        Self::kernel_from_echelon(&self.echelon(), self.cols)
    }

    fn kernel_from_echelon(ech: &Echelon, cols: usize) -> Self {
        let mut is_pivot = vec![false; cols];
        for &c in &ech.pivots {
            is_pivot[c] = true;
        }
        let basis: Vec<BitVector> = (0..cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = BitVector::unit(cols, f);
                for (r, &pc) in ech.pivots.iter().enumerate() {
                    if ech.matrix.data[r].get(f) {
                        v.set(pc, true);
                    }
                }
                v
            })
            .collect();
        Self::from_columns(&basis, cols)
    }

    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::SizeMismatch {
                expected: self.rows,
                actual: self.cols,
            });
        }
        let n = self.rows;
        // Eliminate on [M | I].
        let mut aug = Self::zeros(n, 2 * n);
        for i in 0..n {
            for j in self.data[i].iter_ones() {
                aug.data[i].set(j, true);
            }
            aug.data[i].set(n + i, true);
        }
        let ech = aug.echelon();
        if ech.pivots.iter().filter(|&&c| c < n).count() < n {
            return Err(Error::Singular);
        }
        let right: Vec<usize> = (n..2 * n).collect();
        let all: Vec<usize> = (0..n).collect();
        Ok(ech.matrix.submatrix(&all, &right))
    }

    /// Solves `M x = y`. Returns `None` when the system is inconsistent. The
    /// particular solution sets every free variable to zero.
    pub fn solve_affine(&self, y: &BitVector) -> Option<AffineSolution> {
        assert_eq!(y.len(), self.rows, "right-hand side length must equal row count");
        let (ech, y) = self.echelon_with(Some(y.clone()));
        let y = y.expect("rhs carried through elimination");
        let rank = ech.pivots.len();
        if (rank..self.rows).any(|i| y.get(i)) {
            return None;
        }
        let mut particular = BitVector::zeros(self.cols);
        for (r, &c) in ech.pivots.iter().enumerate() {
            if y.get(r) {
                particular.set(c, true);
            }
        }
        Some(AffineSolution {
            particular,
            homogeneous_basis: Self::kernel_from_echelon(&ech, self.cols),
        })
    }

    /// Canonical basis of the row space (the nonzero rows of the RREF).
    pub fn row_space_basis(&self) -> Self {
        let ech = self.echelon();
        let r = ech.pivots.len();
        let data = ech.matrix.data.into_iter().take(r).collect();
        Self::from_rows(data, self.cols)
    }

    /// Canonical basis of the column space, returned as columns.
    pub fn column_space_basis(&self) -> Self {
        self.transpose().row_space_basis().transpose()
    }

    /// Whether `v` lies in the span of the columns.
    pub fn column_span_contains(&self, v: &BitVector) -> bool {
        self.solve_affine(v).is_some()
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitMatrix {}x{} [", self.rows, self.cols)?;
        for (i, r) in self.data.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{r}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Display for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.data {
            writeln!(f, "{r}")?;
        }
        Ok(())
    }
}

/// Rank of `k` rows packed into single words. Used by the subset walkers,
/// where every row fits in one `u64`.
pub(crate) fn rank_words(rows: &mut [u64]) -> usize {
    let mut rank = 0;
    for i in 0..rows.len() {
        let row = rows[i];
        if row == 0 {
            continue;
        }
        let low = row & row.wrapping_neg();
        for r in rows.iter_mut().skip(i + 1) {
            if *r & low != 0 {
                *r ^= row;
            }
        }
        rank += 1;
    }
    rank
}
