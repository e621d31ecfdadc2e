//! Dense matrices over a semiring, plus the neutrosophic adjacency and
//! incidence constructions.
//!
//! Over the indeterminacy semiring an entry `a + bI` of `A^k` counts walks of
//! length `k`: `a` walks that use only real edges and `b` walks that use at
//! least one indeterminate edge. This holds because a product of edge values
//! along a walk is `1` when every edge is real and `I` otherwise.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Kind, NeutroGraph};
use crate::number::{Indeterminate, Semiring};

#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
    row_labels: Vec<String>,
    col_labels: Vec<String>,
}

impl<S: Semiring> Matrix<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![S::zero(); rows * cols],
            row_labels: (0..rows).map(|i| i.to_string()).collect(),
            col_labels: (0..cols).map(|j| j.to_string()).collect(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = S::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::InvalidMatrix("ragged rows".into()));
        }
        let mut m = Self::zeros(r, c);
        m.data = rows.into_iter().flatten().collect();
        Ok(m)
    }

    pub fn with_labels(mut self, rows: Vec<String>, cols: Vec<String>) -> Self {
        assert_eq!(rows.len(), self.rows, "row label count");
        assert_eq!(cols.len(), self.cols, "column label count");
        self.row_labels = rows;
        self.col_labels = cols;
        self
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row_labels(&self) -> &[String] {
        &self.row_labels
    }

    pub fn col_labels(&self) -> &[String] {
        &self.col_labels
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: S) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[S] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<S>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &S)> {
        self.data.iter().enumerate().map(move |(k, s)| (k / self.cols.max(1), k % self.cols.max(1), s))
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t.row_labels = self.col_labels.clone();
        t.col_labels = self.row_labels.clone();
        t
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} + {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = self.clone();
        for (x, y) in out.data.iter_mut().zip(&other.data) {
            *x = x.clone() + y.clone();
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = a.clone() * other.get(k, j).clone();
                    let slot = &mut out.data[i * other.cols + j];
                    *slot = slot.clone() + prod;
                }
            }
        }
        out.row_labels = self.row_labels.clone();
        out.col_labels = other.col_labels.clone();
        Ok(out)
    }

    /// `self^k` by repeated squaring; `k = 0` gives the identity.
    pub fn pow(&self, k: u32) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(format!("power of a {}x{} matrix", self.rows, self.cols)));
        }
        let mut result = Self::identity(self.rows).with_labels(self.row_labels.clone(), self.col_labels.clone());
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(result)
    }

    /// Applies a row and column permutation: entry `(i, j)` of the result is
    /// entry `(rows[i], cols[j])` of `self`.
    pub fn permuted(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut out = Self::zeros(rows.len(), cols.len());
        for (i, &r) in rows.iter().enumerate() {
            for (j, &c) in cols.iter().enumerate() {
                out.set(i, j, self.get(r, c).clone());
            }
        }
        out.row_labels = rows.iter().map(|&r| self.row_labels[r].clone()).collect();
        out.col_labels = cols.iter().map(|&c| self.col_labels[c].clone()).collect();
        out
    }
}

impl<S: Semiring + fmt::Display> fmt::Display for Matrix<S> {
    /// Aligned text with a header row of column labels.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = (0..self.rows).map(|i| self.row(i).iter().map(|s| s.to_string()).collect()).collect();
        let label_w = self.row_labels.iter().map(String::len).max().unwrap_or(0);
        let widths: Vec<usize> = (0..self.cols)
            .map(|j| cells.iter().map(|r| r[j].len()).chain([self.col_labels[j].len()]).max().unwrap_or(1))
            .collect();
        write!(f, "{:label_w$}", "")?;
        for (j, w) in widths.iter().enumerate() {
            write!(f, "  {:>w$}", self.col_labels[j])?;
        }
        writeln!(f)?;
        for (i, row) in cells.iter().enumerate() {
            write!(f, "{:label_w$}", self.row_labels[i])?;
            for (cell, w) in row.iter().zip(&widths) {
                write!(f, "  {cell:>w$}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// The neutrosophic adjacency matrix: `1` for a real edge, `I` for an
/// indeterminate one, `0` otherwise. Rows follow the graph's vertex order.
pub fn adjacency<S: Indeterminate>(g: &NeutroGraph) -> Matrix<S> {
    let n = g.vertex_count();
    let mut m = Matrix::zeros(n, n);
    for e in g.edges() {
        let value = kind_value::<S>(e.kind);
        m.set(e.a, e.b, value.clone());
        m.set(e.b, e.a, value);
    }
    let labels: Vec<String> = g.vertices().iter().map(|v| v.id.clone()).collect();
    m.with_labels(labels.clone(), labels)
}

/// Vertices-by-edges incidence matrix; the column of edge `e` holds the
/// edge's value at both endpoints.
pub fn incidence<S: Indeterminate>(g: &NeutroGraph) -> Result<Matrix<S>> {
    if g.edge_count() == 0 {
        return Err(Error::NoEdges);
    }
    let mut m = Matrix::zeros(g.vertex_count(), g.edge_count());
    for (j, e) in g.edges().iter().enumerate() {
        let value = kind_value::<S>(e.kind);
        m.set(e.a, j, value.clone());
        m.set(e.b, j, value);
    }
    let rows = g.vertices().iter().map(|v| v.id.clone()).collect();
    let cols = g.edges().iter().map(|e| format!("{}-{}", g.id(e.a), g.id(e.b))).collect();
    Ok(m.with_labels(rows, cols))
}

fn kind_value<S: Indeterminate>(kind: Kind) -> S {
    match kind {
        Kind::Real => S::one(),
        Kind::Indeterminate => S::indeterminate(),
    }
}

/// Rebuilds an all-real-vertex graph from an adjacency matrix, rejecting
/// anything that is not square, symmetric, zero on the diagonal and valued in
/// `{0, 1, I}`. Vertex ids come from the row labels.
pub fn graph_from_adjacency<S: Indeterminate>(m: &Matrix<S>) -> Result<NeutroGraph> {
    if !m.is_square() {
        return Err(Error::InvalidMatrix("adjacency matrix must be square".into()));
    }
    if !m.is_symmetric() {
        return Err(Error::InvalidMatrix("adjacency matrix must be symmetric".into()));
    }
    let mut g = NeutroGraph::new();
    for label in m.row_labels() {
        g.add_vertex(label.clone(), Kind::Real)?;
    }
    for i in 0..m.rows() {
        if !m.get(i, i).is_zero() {
            return Err(Error::InvalidMatrix(format!("nonzero diagonal at {i}")));
        }
        for j in i + 1..m.cols() {
            let x = m.get(i, j);
            if x.is_zero() {
                continue;
            }
            let kind = if x.is_one() {
                Kind::Real
            } else if *x == S::indeterminate() {
                Kind::Indeterminate
            } else {
                return Err(Error::InvalidMatrix(format!("entry ({i},{j}) is not 0, 1 or I")));
            };
            g.add_edge_ix(i, j, kind)?;
        }
    }
    Ok(g)
}

/// `A^k` for the graph's adjacency matrix, `k >= 1`.
pub fn walk_counts<S: Indeterminate>(g: &NeutroGraph, k: u32) -> Result<Matrix<S>> {
    if k == 0 {
        return Err(Error::ZeroPower);
    }
    adjacency::<S>(g).pow(k)
}

#[derive(Clone, Debug, PartialEq)]
pub struct YConnectivity<S> {
    pub connected: bool,
    /// `A + A^2 + ... + A^(n-1)`; empty for a single vertex.
    pub y: Matrix<S>,
    /// First off-diagonal zero entry in row-major order, if any.
    pub zero_witness: Option<(usize, usize)>,
}

/// Connectivity from the partial power sum `Y = A + ... + A^(n-1)`.
///
/// Only off-diagonal entries are tested. The diagonal of `Y` can be zero on a
/// connected graph: for `K2` the sum stops at `A` itself.
pub fn connectivity_by_y<S: Indeterminate>(g: &NeutroGraph) -> YConnectivity<S> {
    let n = g.vertex_count();
    if n <= 1 {
        return YConnectivity { connected: true, y: Matrix::zeros(0, 0), zero_witness: None };
    }
    let a = adjacency::<S>(g);
    let mut power = a.clone();
    let mut y = a.clone();
    for _ in 2..n {
        power = power.mul(&a).expect("square");
        y = y.add(&power).expect("same shape");
    }
    let zero_witness = y.entries().find(|&(i, j, s)| i != j && s.is_zero()).map(|(i, j, _)| (i, j));
    YConnectivity { connected: zero_witness.is_none(), y, zero_witness }
}

/// Connected components as vertex-id lists (graph search).
pub fn components(g: &NeutroGraph) -> Vec<Vec<String>> {
    crate::graph::ids_of(g, &g.connected_components())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MatrixKind {
    Adjacency,
    Incidence,
}

/// A matrix permuted into block-diagonal form, one block per component.
#[derive(Clone, Debug, PartialEq)]
pub struct BlockDecomposition<S> {
    /// Original row index of each row of `matrix`.
    pub row_order: Vec<usize>,
    /// Original column index of each column of `matrix`.
    pub col_order: Vec<usize>,
    pub row_block_sizes: Vec<usize>,
    pub col_block_sizes: Vec<usize>,
    pub matrix: Matrix<S>,
}

impl<S: Semiring> BlockDecomposition<S> {
    pub fn block_count(&self) -> usize {
        self.row_block_sizes.len()
    }

    /// True when every entry outside the diagonal blocks is zero. Rows past
    /// the last row block (isolated vertices of an incidence matrix) must be
    /// entirely zero.
    pub fn is_block_diagonal(&self) -> bool {
        let row_block = block_index(&self.row_block_sizes, self.matrix.rows());
        let col_block = block_index(&self.col_block_sizes, self.matrix.cols());
        self.matrix.entries().all(|(i, j, s)| s.is_zero() || (row_block[i].is_some() && row_block[i] == col_block[j]))
    }
}

fn block_index(sizes: &[usize], len: usize) -> Vec<Option<usize>> {
    let mut out: Vec<Option<usize>> = sizes.iter().enumerate().flat_map(|(b, &s)| std::iter::repeat_n(Some(b), s)).collect();
    out.resize(len, None);
    out
}

/// Permutes `m` so that each connected component of `g` owns one diagonal
/// block.
///
/// For an adjacency matrix every component (isolated vertices included) is a
/// block. For an incidence matrix only components with edges form blocks;
/// rows of isolated vertices are moved after the last block.
pub fn block_decompose<S: Semiring>(m: &Matrix<S>, which: MatrixKind, g: &NeutroGraph) -> Result<BlockDecomposition<S>> {
    let comps = g.connected_components();
    match which {
        MatrixKind::Adjacency => {
            if m.rows() != g.vertex_count() || !m.is_square() {
                return Err(Error::DimensionMismatch("adjacency matrix does not match graph".into()));
            }
            let order: Vec<usize> = comps.iter().flatten().copied().collect();
            let sizes: Vec<usize> = comps.iter().map(Vec::len).collect();
            Ok(BlockDecomposition {
                matrix: m.permuted(&order, &order),
                row_order: order.clone(),
                col_order: order,
                row_block_sizes: sizes.clone(),
                col_block_sizes: sizes,
            })
        }
        MatrixKind::Incidence => {
            if g.edge_count() == 0 {
                return Err(Error::NoEdges);
            }
            if m.rows() != g.vertex_count() || m.cols() != g.edge_count() {
                return Err(Error::DimensionMismatch("incidence matrix does not match graph".into()));
            }
            let mut comp_of = vec![0; g.vertex_count()];
            for (c, comp) in comps.iter().enumerate() {
                for &v in comp {
                    comp_of[v] = c;
                }
            }
            let (mut rows, mut cols) = (Vec::new(), Vec::new());
            let (mut row_sizes, mut col_sizes) = (Vec::new(), Vec::new());
            let mut isolated = Vec::new();
            for (c, comp) in comps.iter().enumerate() {
                let edges: Vec<usize> = (0..g.edge_count()).filter(|&e| comp_of[g.edge(e).a] == c).collect();
                if edges.is_empty() {
                    isolated.extend_from_slice(comp);
                    continue;
                }
                rows.extend_from_slice(comp);
                row_sizes.push(comp.len());
                col_sizes.push(edges.len());
                cols.extend(edges);
            }
            rows.extend(isolated);
            Ok(BlockDecomposition {
                matrix: m.permuted(&rows, &cols),
                row_order: rows,
                col_order: cols,
                row_block_sizes: row_sizes,
                col_block_sizes: col_sizes,
            })
        }
    }
}
