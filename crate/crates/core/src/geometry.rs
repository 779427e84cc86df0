//! Point clouds, distance matrices, scale grids, and synthetic generators.

use crate::error::Error;
use crate::rng::{derive_seed, rng_from_seed, GENERATOR_VERSION};
use crate::Result;
use nalgebra::DMatrix;
use rand::Rng;
use rand_distr::{Distribution, Normal};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// Provenance of a generated cloud, written to metadata sidecars.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CloudMeta {
    pub shape: String,
    pub n: usize,
    pub noise: f64,
    pub seed: u64,
    pub generator_version: String,
}

/// A labeled finite point set in Euclidean space.
///
/// All points share one ambient dimension `d >= 1`; the cloud is never empty.
#[derive(Clone, Debug, PartialEq)]
pub struct PointCloud {
    points: Vec<Vec<f64>>,
    dim: usize,
    metadata: Option<CloudMeta>,
}

impl PointCloud {
    pub fn new(points: Vec<Vec<f64>>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::InvalidInput("point cloud must be nonempty".into()));
        }
        let dim = points[0].len();
        if dim == 0 {
            return Err(Error::InvalidInput("points must have dimension >= 1".into()));
        }
        for (i, p) in points.iter().enumerate() {
            if p.len() != dim {
                return Err(Error::InvalidInput(format!(
                    "point {i} has dimension {} but point 0 has {dim}",
                    p.len()
                )));
            }
            if p.iter().any(|x| !x.is_finite()) {
                return Err(Error::InvalidInput(format!("point {i} has non-finite coordinate")));
            }
        }
        Ok(Self { points, dim, metadata: None })
    }

    pub fn with_metadata(points: Vec<Vec<f64>>, metadata: CloudMeta) -> Result<Self> {
        let mut cloud = Self::new(points)?;
        cloud.metadata = Some(metadata);
        Ok(cloud)
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        false // n >= 1 by construction
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn points(&self) -> &[Vec<f64>] {
        &self.points
    }

    pub fn metadata(&self) -> Option<&CloudMeta> {
        self.metadata.as_ref()
    }

    pub fn set_metadata(&mut self, meta: CloudMeta) {
        self.metadata = Some(meta);
    }

    /// Reorders points by `perm`, where `perm[new_index] = old_index`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.len() {
            return Err(Error::InvalidInput("permutation length mismatch".into()));
        }
        let points = perm.iter().map(|&i| self.points[i].clone()).collect();
        Self::new(points)
    }

    /// One point per line, comma-separated decimal coordinates, no header.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for p in &self.points {
            let fields: Vec<String> = p.iter().map(|x| format!("{x}")).collect();
            out.push_str(&fields.join(","));
            out.push('\n');
        }
        out
    }

    pub fn from_csv(text: &str) -> Result<Self> {
        let mut points = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let coords: Result<Vec<f64>> = line
                .split(',')
                .map(|f| {
                    f.trim()
                        .parse::<f64>()
                        .map_err(|e| Error::Malformed(format!("CSV line {}: {e}", lineno + 1)))
                })
                .collect();
            points.push(coords?);
        }
        Self::new(points).map_err(|e| Error::Malformed(format!("CSV: {e}")))
    }
}

/// Strictly increasing scales over which the filtration is built.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScaleGrid {
    scales: Vec<f64>,
}

impl ScaleGrid {
    pub fn new(scales: Vec<f64>) -> Result<Self> {
        if scales.len() < 2 {
            return Err(Error::InvalidInput("scale grid needs at least two scales".into()));
        }
        for w in scales.windows(2) {
            if !(w[0] < w[1]) {
                return Err(Error::InvalidInput(format!(
                    "scale grid must be strictly increasing, got {} then {}",
                    w[0], w[1]
                )));
            }
        }
        if scales[0] < 0.0 || scales.iter().any(|s| !s.is_finite()) {
            return Err(Error::InvalidInput("scales must be finite and non-negative".into()));
        }
        Ok(Self { scales })
    }

    /// `count` equally spaced scales over `(0, max]`; the last scale equals
    /// `max` exactly.
    pub fn uniform(max: f64, count: usize) -> Result<Self> {
        if !(max > 0.0) {
            return Err(Error::InvalidInput(format!("grid maximum must be positive, got {max}")));
        }
        let t = count as f64;
        let scales = (1..=count).map(|i| max * (i as f64 / t)).collect();
        Self::new(scales)
    }

    pub fn len(&self) -> usize {
        self.scales.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn scales(&self) -> &[f64] {
        &self.scales
    }

    pub fn last(&self) -> f64 {
        *self.scales.last().unwrap()
    }

    /// Smallest grid scale `>= value`, if any.
    pub fn snap_up(&self, value: f64) -> Option<f64> {
        let idx = self.scales.partition_point(|&s| s < value);
        self.scales.get(idx).copied()
    }
}

/// Policy for placing scales over the observed distance distribution.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GridPolicy {
    Uniform,
    Quantile,
}

impl FromStr for GridPolicy {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "uniform" => Ok(GridPolicy::Uniform),
            "quantile" => Ok(GridPolicy::Quantile),
            other => Err(Error::InvalidInput(format!("unknown grid policy: {other}"))),
        }
    }
}

/// Euclidean distance matrix: symmetric, zero diagonal.
pub fn pairwise_distances(cloud: &PointCloud) -> DMatrix<f64> {
    let n = cloud.len();
    let mut d = DMatrix::zeros(n, n);
    for i in 0..n {
        for j in (i + 1)..n {
            let dist = euclidean(&cloud.points[i], &cloud.points[j]);
            d[(i, j)] = dist;
            d[(j, i)] = dist;
        }
    }
    d
}

fn euclidean(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y) * (x - y))
        .sum::<f64>()
        .sqrt()
}

/// Builds a scale grid from a distance matrix.
///
/// `Uniform` spaces `count` scales equally over `(0, d_max]`. `Quantile`
/// takes `count` empirical quantiles of the off-diagonal distances and
/// nudges duplicates apart so the grid stays strictly increasing.
pub fn make_scale_grid(distances: &DMatrix<f64>, count: usize, policy: GridPolicy) -> Result<ScaleGrid> {
    if count < 2 {
        return Err(Error::InvalidInput("scale grid needs at least two scales".into()));
    }
    let d_max = distances.iter().cloned().fold(0.0f64, f64::max);
    if d_max <= 0.0 {
        return Err(Error::DegenerateCloud);
    }
    match policy {
        GridPolicy::Uniform => ScaleGrid::uniform(d_max, count),
        GridPolicy::Quantile => {
            let n = distances.nrows();
            let mut offdiag = Vec::with_capacity(n * (n - 1) / 2);
            for i in 0..n {
                for j in (i + 1)..n {
                    offdiag.push(distances[(i, j)]);
                }
            }
            offdiag.sort_by(|a, b| a.partial_cmp(b).unwrap());
            let m = offdiag.len();
            // Nearest-rank quantiles at levels i/count for i = 1..=count.
            let mut scales: Vec<f64> = (1..=count)
                .map(|i| {
                    let level = i as f64 / count as f64;
                    let idx = ((level * m as f64).ceil() as usize).clamp(1, m) - 1;
                    offdiag[idx]
                })
                .collect();
            // De-duplicate by nudging earlier entries downward.
            let delta = d_max * 1e-9;
            for i in (0..count - 1).rev() {
                if scales[i] >= scales[i + 1] {
                    scales[i] = scales[i + 1] - delta;
                }
            }
            if scales[0] <= 0.0 {
                return Err(Error::InvalidInput(
                    "quantile grid collapsed below zero after de-duplication".into(),
                ));
            }
            ScaleGrid::new(scales)
        }
    }
}

/// Synthetic shapes with known ground-truth topology.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Shape {
    Circle,
    TwoCircles,
    Sphere,
    Torus,
    Blob,
}

impl Shape {
    pub fn as_str(&self) -> &'static str {
        match self {
            Shape::Circle => "circle",
            Shape::TwoCircles => "two_circles",
            Shape::Sphere => "sphere",
            Shape::Torus => "torus",
            Shape::Blob => "blob",
        }
    }

    pub fn min_points(&self) -> usize {
        match self {
            Shape::Circle => 3,
            Shape::TwoCircles => 6,
            Shape::Sphere => 4,
            Shape::Torus => 8,
            Shape::Blob => 1,
        }
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Shape {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "circle" => Ok(Shape::Circle),
            "two_circles" => Ok(Shape::TwoCircles),
            "sphere" => Ok(Shape::Sphere),
            "torus" => Ok(Shape::Torus),
            "blob" => Ok(Shape::Blob),
            other => Err(Error::UnknownShape(other.to_string())),
        }
    }
}

const CIRCLE_RADIUS: f64 = 1.0;
const TWO_CIRCLES_RADIUS: f64 = 0.7;
const TWO_CIRCLES_CENTER_X: f64 = 1.05;
const TORUS_MAJOR: f64 = 2.0;
const TORUS_MINOR: f64 = 0.7;
const BLOB_SIGMA: f64 = 0.5;

/// Samples `n` points from `shape`, perturbed by per-coordinate Gaussian
/// noise of amplitude `noise`, deterministically for a fixed `seed`.
///
/// Placement is stratified (seed-dependent jitter over a quasi-uniform
/// layout) so that small samples still cover the shape. Provenance is
/// recorded in the cloud metadata.
pub fn generate(shape: Shape, n: usize, noise: f64, seed: u64) -> Result<PointCloud> {
    if n < shape.min_points() {
        return Err(Error::InvalidInput(format!(
            "shape {shape} needs at least {} points, got {n}",
            shape.min_points()
        )));
    }
    if noise < 0.0 || !noise.is_finite() {
        return Err(Error::InvalidInput(format!("noise must be a non-negative real, got {noise}")));
    }
    let mut rng = rng_from_seed(derive_seed(seed, &[shape as u64, n as u64]));
    let mut points = match shape {
        Shape::Circle => circle_points(n, CIRCLE_RADIUS, [0.0, 0.0], &mut rng),
        Shape::TwoCircles => {
            let n_left = n / 2 + n % 2;
            let mut pts = circle_points(n_left, TWO_CIRCLES_RADIUS, [-TWO_CIRCLES_CENTER_X, 0.0], &mut rng);
            pts.extend(circle_points(n - n_left, TWO_CIRCLES_RADIUS, [TWO_CIRCLES_CENTER_X, 0.0], &mut rng));
            pts
        }
        Shape::Sphere => sphere_points(n, &mut rng),
        Shape::Torus => torus_points(n, &mut rng),
        Shape::Blob => blob_points(n, &mut rng),
    };
    if noise > 0.0 {
        let normal = Normal::new(0.0, noise).unwrap();
        for p in &mut points {
            for x in p.iter_mut() {
                *x += normal.sample(&mut rng);
            }
        }
    }
    PointCloud::with_metadata(
        points,
        CloudMeta {
            shape: shape.as_str().to_string(),
            n,
            noise,
            seed,
            generator_version: GENERATOR_VERSION.to_string(),
        },
    )
}

fn circle_points<R: Rng>(n: usize, radius: f64, center: [f64; 2], rng: &mut R) -> Vec<Vec<f64>> {
    (0..n)
        .map(|i| {
            let jitter: f64 = rng.random();
            let theta = std::f64::consts::TAU * (i as f64 + jitter) / n as f64;
            vec![center[0] + radius * theta.cos(), center[1] + radius * theta.sin()]
        })
        .collect()
}

/// Fibonacci lattice on the unit sphere, randomly rotated.
fn sphere_points<R: Rng>(n: usize, rng: &mut R) -> Vec<Vec<f64>> {
    let golden = (1.0 + 5.0f64.sqrt()) / 2.0;
    let rot = random_rotation(rng);
    (0..n)
        .map(|i| {
            let z = 1.0 - 2.0 * (i as f64 + 0.5) / n as f64;
            let r = (1.0 - z * z).max(0.0).sqrt();
            let phi = std::f64::consts::TAU * (i as f64 / golden).fract();
            apply_rotation(&rot, [r * phi.cos(), r * phi.sin(), z])
        })
        .collect()
}

/// Quasi-uniform angle lattice on the embedded torus, with random angular
/// offsets so distinct seeds give distinct clouds.
fn torus_points<R: Rng>(n: usize, rng: &mut R) -> Vec<Vec<f64>> {
    let golden = (1.0 + 5.0f64.sqrt()) / 2.0;
    let off_theta: f64 = rng.random::<f64>() * std::f64::consts::TAU;
    let off_phi: f64 = rng.random::<f64>() * std::f64::consts::TAU;
    (0..n)
        .map(|i| {
            let theta = std::f64::consts::TAU * (i as f64 / n as f64) + off_theta;
            let phi = std::f64::consts::TAU * (i as f64 / golden).fract() + off_phi;
            let ring = TORUS_MAJOR + TORUS_MINOR * phi.cos();
            vec![ring * theta.cos(), ring * theta.sin(), TORUS_MINOR * phi.sin()]
        })
        .collect()
}

fn blob_points<R: Rng>(n: usize, rng: &mut R) -> Vec<Vec<f64>> {
    let normal = Normal::new(0.0, BLOB_SIGMA).unwrap();
    (0..n)
        .map(|_| (0..3).map(|_| normal.sample(rng)).collect())
        .collect()
}

/// Uniform random rotation of R^3 from a random unit quaternion.
fn random_rotation<R: Rng>(rng: &mut R) -> [[f64; 3]; 3] {
    let std_normal = Normal::new(0.0, 1.0).unwrap();
    let q: Vec<f64> = (0..4).map(|_| std_normal.sample(rng)).collect();
    let norm = q.iter().map(|x| x * x).sum::<f64>().sqrt();
    let (w, x, y, z) = (q[0] / norm, q[1] / norm, q[2] / norm, q[3] / norm);
    [
        [1.0 - 2.0 * (y * y + z * z), 2.0 * (x * y - w * z), 2.0 * (x * z + w * y)],
        [2.0 * (x * y + w * z), 1.0 - 2.0 * (x * x + z * z), 2.0 * (y * z - w * x)],
        [2.0 * (x * z - w * y), 2.0 * (y * z + w * x), 1.0 - 2.0 * (x * x + y * y)],
    ]
}

fn apply_rotation(rot: &[[f64; 3]; 3], p: [f64; 3]) -> Vec<f64> {
    (0..3)
        .map(|r| rot[r][0] * p[0] + rot[r][1] * p[1] + rot[r][2] * p[2])
        .collect()
}

/// Deterministic reference samples whose Vietoris-Rips complexes recover the
/// exact homology of the underlying manifold at a known scale band.
pub mod lattice {
    use super::PointCloud;

    /// The 12 icosahedron vertices (circumradius sqrt(1 + phi^2)).
    ///
    /// Pairwise distances take three values: 2 (edges), 2*phi (diagonals),
    /// and 2*sqrt(1+phi^2) (antipodes). Any scale in `[2, 2*phi)` yields the
    /// icosahedral sphere surface: Betti numbers (1, 0, 1).
    pub fn icosahedron() -> PointCloud {
        let phi = (1.0 + 5.0f64.sqrt()) / 2.0;
        let mut pts = Vec::with_capacity(12);
        for &a in &[1.0, -1.0] {
            for &b in &[phi, -phi] {
                pts.push(vec![0.0, a, b]);
                pts.push(vec![a, b, 0.0]);
                pts.push(vec![b, 0.0, a]);
            }
        }
        PointCloud::new(pts).expect("icosahedron vertices are valid")
    }

    /// Sheared angle grid on the Clifford torus in R^4.
    ///
    /// The half-step shear in the second angle turns the grid into a
    /// triangular lattice, so at the right scale the Vietoris-Rips complex
    /// is a genuine triangulated torus: Betti numbers (1, 2, 1). The grid
    /// side must be even so the shear closes onto itself. The working scale
    /// band sits between the longest lattice edge and the shortest excluded
    /// chord; [`clifford_torus_scale`] returns a scale inside it.
    pub fn clifford_torus(n: usize) -> PointCloud {
        assert!(n >= 6 && n % 2 == 0, "shear grid needs an even side >= 6");
        let tau = std::f64::consts::TAU;
        let mut pts = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let theta = tau * i as f64 / n as f64;
                let phi = tau * (j as f64 + 0.5 * i as f64) / n as f64;
                pts.push(vec![theta.cos(), theta.sin(), phi.cos(), phi.sin()]);
            }
        }
        PointCloud::new(pts).expect("torus grid points are valid")
    }

    /// A scale strictly inside the torus-recovery band of [`clifford_torus`].
    pub fn clifford_torus_scale(n: usize) -> f64 {
        let u = std::f64::consts::PI / n as f64;
        // Squared chords by lattice offset (di, dj), with half-angles
        // u*di and u*(dj + di/2): the longest kept edge is (1, 0); the
        // shortest excluded offsets are (1, 1) and (0, 2).
        let edge2 = 4.0 * (u.sin().powi(2) + (0.5 * u).sin().powi(2));
        let diag2 = 4.0 * (u.sin().powi(2) + (1.5 * u).sin().powi(2));
        let two_step2 = 4.0 * (2.0 * u).sin().powi(2);
        (0.5 * (edge2 + diag2.min(two_step2))).sqrt()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn distances_single_point() {
        let c = PointCloud::new(vec![vec![1.0, 2.0]]).unwrap();
        let d = pairwise_distances(&c);
        assert_eq!(d.nrows(), 1);
        assert_eq!(d[(0, 0)], 0.0);
    }

    #[test]
    fn distances_three_four_five() {
        let c = PointCloud::new(vec![vec![0.0, 0.0], vec![3.0, 4.0]]).unwrap();
        let d = pairwise_distances(&c);
        assert_eq!(d[(0, 1)], 5.0);
        assert_eq!(d[(1, 0)], 5.0);
    }

    #[test]
    fn distances_equilateral() {
        let h = 3.0f64.sqrt() / 2.0;
        let c = PointCloud::new(vec![vec![0.0, 0.0], vec![1.0, 0.0], vec![0.5, h]]).unwrap();
        let d = pairwise_distances(&c);
        for i in 0..3 {
            for j in 0..3 {
                if i != j {
                    assert_abs_diff_eq!(d[(i, j)], 1.0, epsilon = 1e-12);
                }
            }
        }
    }

    #[test]
    fn uniform_grid_spacing() {
        let d = DMatrix::from_row_slice(2, 2, &[0.0, 2.0, 2.0, 0.0]);
        let g = make_scale_grid(&d, 4, GridPolicy::Uniform).unwrap();
        assert_eq!(g.scales(), &[0.5, 1.0, 1.5, 2.0]);
        let g2 = make_scale_grid(&DMatrix::from_row_slice(2, 2, &[0.0, 1.0, 1.0, 0.0]), 2, GridPolicy::Uniform)
            .unwrap();
        assert_eq!(g2.scales(), &[0.5, 1.0]);
    }

    #[test]
    fn uniform_grid_last_is_exact_max() {
        let d = DMatrix::from_row_slice(2, 2, &[0.0, 0.3137, 0.3137, 0.0]);
        let g = make_scale_grid(&d, 7, GridPolicy::Uniform).unwrap();
        assert_eq!(g.last(), 0.3137);
    }

    #[test]
    fn degenerate_cloud_rejected() {
        let d = DMatrix::zeros(3, 3);
        assert!(matches!(make_scale_grid(&d, 3, GridPolicy::Uniform), Err(Error::DegenerateCloud)));
    }

    #[test]
    fn quantile_grid_deduplicates_ties() {
        // Equilateral triple: off-diagonal distances {1, 1, 1}.
        let mut d = DMatrix::zeros(3, 3);
        for i in 0..3 {
            for j in 0..3 {
                if i != j {
                    d[(i, j)] = 1.0;
                }
            }
        }
        let g = make_scale_grid(&d, 3, GridPolicy::Quantile).unwrap();
        let s = g.scales();
        assert_eq!(s.len(), 3);
        assert!(s[0] < s[1] && s[1] < s[2]);
        assert_eq!(s[2], 1.0);
        for &v in s {
            assert!(v >= 1.0 - 5e-9 && v <= 1.0, "scale {v} escaped the tie band");
        }
    }

    #[test]
    fn generate_is_deterministic_per_seed() {
        let a = generate(Shape::Circle, 40, 0.0, 7).unwrap();
        let b = generate(Shape::Circle, 40, 0.0, 7).unwrap();
        assert_eq!(a, b);
        let c = generate(Shape::Circle, 40, 0.0, 8).unwrap();
        assert_ne!(a.points(), c.points());
    }

    #[test]
    fn generate_records_provenance() {
        let c = generate(Shape::Torus, 16, 0.05, 3).unwrap();
        let m = c.metadata().unwrap();
        assert_eq!(m.shape, "torus");
        assert_eq!(m.n, 16);
        assert_eq!(m.noise, 0.05);
        assert_eq!(m.seed, 3);
        assert_eq!(m.generator_version, GENERATOR_VERSION);
        assert_eq!(c.dim(), 3);
    }

    #[test]
    fn generate_rejects_tiny_samples() {
        assert!(generate(Shape::Sphere, 3, 0.0, 0).is_err());
        assert!(generate(Shape::Torus, 7, 0.0, 0).is_err());
    }

    #[test]
    fn shape_parsing() {
        assert_eq!("two_circles".parse::<Shape>().unwrap(), Shape::TwoCircles);
        assert!(matches!("klein".parse::<Shape>(), Err(Error::UnknownShape(_))));
    }

    #[test]
    fn csv_roundtrip_is_exact() {
        let c = generate(Shape::Blob, 10, 0.1, 11).unwrap();
        let parsed = PointCloud::from_csv(&c.to_csv()).unwrap();
        assert_eq!(c.points(), parsed.points());
    }

    #[test]
    fn csv_rejects_garbage() {
        assert!(matches!(PointCloud::from_csv("1.0,2.0\n3.0,x\n"), Err(Error::Malformed(_))));
        assert!(matches!(PointCloud::from_csv("1.0,2.0\n3.0\n"), Err(Error::Malformed(_))));
    }

    #[test]
    fn snap_up_picks_smallest_not_below() {
        let g = ScaleGrid::new(vec![0.5, 1.0, 1.5]).unwrap();
        assert_eq!(g.snap_up(0.0), Some(0.5));
        assert_eq!(g.snap_up(0.5), Some(0.5));
        assert_eq!(g.snap_up(0.6), Some(1.0));
        assert_eq!(g.snap_up(1.5), Some(1.5));
        assert_eq!(g.snap_up(1.6), None);
    }

    #[test]
    fn icosahedron_has_three_distances() {
        let cloud = lattice::icosahedron();
        let d = pairwise_distances(&cloud);
        let phi = (1.0 + 5.0f64.sqrt()) / 2.0;
        let mut seen = Vec::new();
        for i in 0..12 {
            for j in (i + 1)..12 {
                seen.push(d[(i, j)]);
            }
        }
        for v in seen {
            let ok = (v - 2.0).abs() < 1e-9
                || (v - 2.0 * phi).abs() < 1e-9
                || (v - 2.0 * (1.0 + phi * phi).sqrt()).abs() < 1e-9;
            assert!(ok, "unexpected icosahedron distance {v}");
        }
    }

    mod properties {
        use super::super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn triangle_inequality_on_generated_clouds(seed in 0u64..500, n in 4usize..20) {
                let cloud = generate(Shape::Blob, n, 0.0, seed).unwrap();
                let d = pairwise_distances(&cloud);
                let mut rng = crate::rng::rng_from_seed(seed ^ 0xabcd);
                for _ in 0..20 {
                    let i = rng.random_range(0..n);
                    let j = rng.random_range(0..n);
                    let k = rng.random_range(0..n);
                    prop_assert!(d[(i, k)] <= d[(i, j)] + d[(j, k)] + 1e-12);
                }
            }

            #[test]
            fn uniform_grid_strictly_increasing_ends_at_max(seed in 0u64..200, t in 2usize..12) {
                let cloud = generate(Shape::Circle, 10, 0.05, seed).unwrap();
                let d = pairwise_distances(&cloud);
                let d_max = d.iter().cloned().fold(0.0f64, f64::max);
                let g = make_scale_grid(&d, t, GridPolicy::Uniform).unwrap();
                prop_assert_eq!(g.last(), d_max);
                for w in g.scales().windows(2) {
                    prop_assert!(w[0] < w[1]);
                }
            }

            #[test]
            fn quantile_grid_strictly_increasing(seed in 0u64..200, t in 2usize..12) {
                let cloud = generate(Shape::TwoCircles, 12, 0.02, seed).unwrap();
                let d = pairwise_distances(&cloud);
                let g = make_scale_grid(&d, t, GridPolicy::Quantile).unwrap();
                for w in g.scales().windows(2) {
                    prop_assert!(w[0] < w[1]);
                }
            }
        }
    }
}
