//! Vietoris-Rips filtrations and signed boundary operators.
//!
//! Simplices are stored as strictly ascending vertex tuples (the canonical
//! orientation); within each dimension they are kept in lexicographic order.
//! Filtrations are built by clique expansion of the neighborhood graph at
//! the largest scale rather than by filtering all vertex subsets.

use crate::error::Error;
use crate::geometry::ScaleGrid;
use crate::Result;
use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

/// A simplex as a strictly ascending tuple of vertex indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Simplex {
    vertices: Vec<u32>,
}

impl Simplex {
    pub fn new(vertices: Vec<u32>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::InvalidInput("simplex needs at least one vertex".into()));
        }
        for w in vertices.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::InvalidInput(format!(
                    "simplex vertices must be strictly ascending, got {:?}",
                    vertices
                )));
            }
        }
        Ok(Self { vertices })
    }

    pub(crate) fn from_sorted_unchecked(vertices: Vec<u32>) -> Self {
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        Self { vertices }
    }

    pub fn vertices(&self) -> &[u32] {
        &self.vertices
    }

    /// Topological dimension: vertex count minus one.
    pub fn dim(&self) -> usize {
        self.vertices.len() - 1
    }

    /// The face omitting the `i`-th vertex. Only valid for `dim >= 1`.
    pub fn face(&self, i: usize) -> Simplex {
        let mut v = self.vertices.clone();
        v.remove(i);
        Simplex { vertices: v }
    }
}

/// One complex of the filtration: per-dimension lexicographically sorted
/// simplex lists, downward closed.
#[derive(Clone, Debug, PartialEq)]
pub struct SimplicialComplex {
    n_vertices: usize,
    dims: Vec<Vec<Simplex>>,
}

impl SimplicialComplex {
    pub fn new(n_vertices: usize, mut dims: Vec<Vec<Simplex>>) -> Result<Self> {
        for level in dims.iter_mut() {
            level.sort();
            level.dedup();
        }
        let complex = Self { n_vertices, dims };
        complex.check_closure()?;
        Ok(complex)
    }

    fn check_closure(&self) -> Result<()> {
        for k in (1..self.dims.len()).rev() {
            for s in &self.dims[k] {
                for i in 0..=k {
                    let f = s.face(i);
                    if self.index_of(k - 1, &f).is_none() {
                        return Err(Error::InvalidInput(format!(
                            "complex not downward closed: {:?} lacks face {:?}",
                            s.vertices(),
                            f.vertices()
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    /// Highest dimension with storage allocated (levels may be empty).
    pub fn max_dim(&self) -> usize {
        self.dims.len().saturating_sub(1)
    }

    pub fn simplices(&self, k: usize) -> &[Simplex] {
        self.dims.get(k).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn count(&self, k: usize) -> usize {
        self.simplices(k).len()
    }

    pub fn counts(&self) -> Vec<usize> {
        self.dims.iter().map(Vec::len).collect()
    }

    /// Position of `simplex` in the sorted list of `k`-simplices.
    pub fn index_of(&self, k: usize, simplex: &Simplex) -> Option<usize> {
        self.simplices(k).binary_search(simplex).ok()
    }

    /// Alternating sum of simplex counts.
    pub fn euler_characteristic(&self) -> i64 {
        self.dims
            .iter()
            .enumerate()
            .map(|(k, level)| if k % 2 == 0 { level.len() as i64 } else { -(level.len() as i64) })
            .sum()
    }
}

/// Sparse signed boundary matrix: columns index `k`-simplices, rows index
/// `(k-1)`-simplices; each column holds `k+1` entries of value +-1.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundaryOperator {
    rows: usize,
    cols: usize,
    /// Per column: (row index, sign), sorted by row index.
    columns: Vec<Vec<(usize, i8)>>,
}

impl BoundaryOperator {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn column(&self, j: usize) -> &[(usize, i8)] {
        &self.columns[j]
    }

    pub fn to_dense(&self) -> DMatrix<f64> {
        let mut m = DMatrix::zeros(self.rows, self.cols);
        for (j, col) in self.columns.iter().enumerate() {
            for &(i, s) in col {
                m[(i, j)] = s as f64;
            }
        }
        m
    }

    /// Exact integer composition `self * rhs`; returns the nonzero entries.
    ///
    /// Used to verify the chain-complex identity: `boundary(k)` composed
    /// with `boundary(k+1)` must have no nonzero entries at all.
    pub fn compose_nonzeros(&self, rhs: &BoundaryOperator) -> Vec<(usize, usize, i64)> {
        assert_eq!(self.cols, rhs.rows, "boundary composition shape mismatch");
        let mut nonzeros = Vec::new();
        for (j, col) in rhs.columns.iter().enumerate() {
            let mut acc: HashMap<usize, i64> = HashMap::new();
            for &(mid, s_rhs) in col {
                for &(row, s_lhs) in &self.columns[mid] {
                    *acc.entry(row).or_insert(0) += (s_lhs as i64) * (s_rhs as i64);
                }
            }
            for (row, v) in acc {
                if v != 0 {
                    nonzeros.push((row, j, v));
                }
            }
        }
        nonzeros
    }
}

/// Signed boundary operator of the `k`-simplices of `complex`.
///
/// The column for `[v_0, ..., v_k]` carries `(-1)^i` on the face omitting
/// `v_i`. For `k = 0` the operator maps onto the zero space by convention.
pub fn boundary(complex: &SimplicialComplex, k: usize) -> BoundaryOperator {
    let cols = complex.count(k);
    if k == 0 {
        return BoundaryOperator { rows: 0, cols, columns: vec![Vec::new(); cols] };
    }
    let rows = complex.count(k - 1);
    let columns = complex
        .simplices(k)
        .iter()
        .map(|s| {
            let mut col: Vec<(usize, i8)> = (0..=k)
                .map(|i| {
                    let face = s.face(i);
                    let row = complex
                        .index_of(k - 1, &face)
                        .expect("downward closure guarantees every face is present");
                    (row, if i % 2 == 0 { 1 } else { -1 })
                })
                .collect();
            col.sort_by_key(|&(row, _)| row);
            col
        })
        .collect();
    BoundaryOperator { rows, cols, columns }
}

/// A simplex together with its exact birth value (the largest pairwise
/// distance among its vertices).
#[derive(Clone, Debug, PartialEq)]
pub struct BornSimplex {
    pub simplex: Simplex,
    pub birth: f64,
}

/// Enumerates every clique of the `threshold`-neighborhood graph with at
/// most `k_max + 1` vertices, tagged with its exact birth value.
///
/// Output is grouped by dimension, lexicographically sorted within each.
pub fn enumerate_cliques(
    distances: &DMatrix<f64>,
    threshold: f64,
    k_max: usize,
) -> Result<Vec<Vec<BornSimplex>>> {
    let n = distances.nrows();
    if n == 0 {
        return Err(Error::InvalidInput("empty distance matrix".into()));
    }
    if k_max + 1 > n {
        return Err(Error::DimensionExceedsVertices { k_max, n });
    }
    // Ascending adjacency: u -> sorted neighbors v > u within threshold.
    let higher_neighbors: Vec<Vec<u32>> = (0..n)
        .map(|u| {
            ((u + 1)..n)
                .filter(|&v| distances[(u, v)] <= threshold)
                .map(|v| v as u32)
                .collect()
        })
        .collect();

    let mut levels: Vec<Vec<BornSimplex>> = vec![Vec::new(); k_max + 1];
    for v in 0..n as u32 {
        levels[0].push(BornSimplex { simplex: Simplex::from_sorted_unchecked(vec![v]), birth: 0.0 });
    }

    // Depth-first extension by ascending vertex keeps each level sorted.
    fn extend(
        clique: &mut Vec<u32>,
        candidates: &[u32],
        diameter: f64,
        distances: &DMatrix<f64>,
        higher_neighbors: &[Vec<u32>],
        k_max: usize,
        levels: &mut [Vec<BornSimplex>],
    ) {
        for (ci, &v) in candidates.iter().enumerate() {
            let mut birth = diameter;
            for &u in clique.iter() {
                birth = birth.max(distances[(u as usize, v as usize)]);
            }
            clique.push(v);
            let dim = clique.len() - 1;
            levels[dim].push(BornSimplex {
                simplex: Simplex::from_sorted_unchecked(clique.clone()),
                birth,
            });
            if dim < k_max {
                let next: Vec<u32> = intersect_sorted(&candidates[ci + 1..], &higher_neighbors[v as usize]);
                if !next.is_empty() {
                    extend(clique, &next, birth, distances, higher_neighbors, k_max, levels);
                }
            }
            clique.pop();
        }
    }

    if k_max >= 1 {
        for u in 0..n as u32 {
            let mut clique = vec![u];
            let candidates = higher_neighbors[u as usize].clone();
            extend(&mut clique, &candidates, 0.0, distances, &higher_neighbors, k_max, &mut levels);
        }
    }
    Ok(levels)
}

fn intersect_sorted(a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// The nested family of Vietoris-Rips complexes over a scale grid.
///
/// Birth scales are snapped upward to the grid; the complex at grid index
/// `j` therefore equals the exact Rips complex at scale `scales[j]`.
#[derive(Clone, Debug)]
pub struct FiltrationComplex {
    grid: ScaleGrid,
    n_vertices: usize,
    k_max: usize,
    /// Per dimension, lexicographically sorted: (simplex, snapped birth).
    births: Vec<Vec<(Simplex, f64)>>,
    /// Per grid scale, the materialized complex.
    complexes: Vec<SimplicialComplex>,
}

impl FiltrationComplex {
    pub fn grid(&self) -> &ScaleGrid {
        &self.grid
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn k_max(&self) -> usize {
        self.k_max
    }

    pub fn complex_at(&self, j: usize) -> &SimplicialComplex {
        &self.complexes[j]
    }

    /// Snapped birth scales of the `k`-simplices, lexicographically sorted.
    pub fn births(&self, k: usize) -> &[(Simplex, f64)] {
        self.births.get(k).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Simplex counts per dimension at grid index `j`.
    pub fn counts_at(&self, j: usize) -> Vec<usize> {
        self.complexes[j].counts()
    }

    /// Debug dump: per-dimension vertex tuples with snapped birth scales.
    pub fn to_dump_json(&self) -> serde_json::Value {
        let dims: Vec<serde_json::Value> = self
            .births
            .iter()
            .enumerate()
            .map(|(k, level)| {
                serde_json::json!({
                    "k": k,
                    "simplices": level.iter().map(|(s, _)| s.vertices().to_vec()).collect::<Vec<_>>(),
                    "births": level.iter().map(|(_, b)| *b).collect::<Vec<_>>(),
                })
            })
            .collect();
        serde_json::json!({
            "n": self.n_vertices,
            "k_max": self.k_max,
            "scales": self.grid.scales(),
            "dims": dims,
        })
    }
}

/// Builds the Vietoris-Rips filtration over `grid` up to dimension `k_max`.
///
/// A simplex is present at scale `eps` exactly when all pairwise distances
/// among its vertices are `<= eps`; birth scales are the exact birth values
/// rounded up to the grid.
pub fn build_vr(distances: &DMatrix<f64>, grid: &ScaleGrid, k_max: usize) -> Result<FiltrationComplex> {
    let n = distances.nrows();
    if n != distances.ncols() {
        return Err(Error::InvalidInput("distance matrix must be square".into()));
    }
    let levels = enumerate_cliques(distances, grid.last(), k_max)?;
    let births: Vec<Vec<(Simplex, f64)>> = levels
        .into_iter()
        .map(|level| {
            level
                .into_iter()
                .map(|bs| {
                    let snapped = grid
                        .snap_up(bs.birth)
                        .expect("cliques are enumerated within the largest grid scale");
                    (bs.simplex, snapped)
                })
                .collect()
        })
        .collect();

    let complexes: Vec<SimplicialComplex> = grid
        .scales()
        .iter()
        .map(|&eps| {
            let dims: Vec<Vec<Simplex>> = births
                .iter()
                .map(|level| {
                    level
                        .iter()
                        .filter(|(_, birth)| *birth <= eps)
                        .map(|(s, _)| s.clone())
                        .collect()
                })
                .collect();
            SimplicialComplex { n_vertices: n, dims }
        })
        .collect();

    Ok(FiltrationComplex { grid: grid.clone(), n_vertices: n, k_max, births, complexes })
}
