//! Exterior derivative, Dirac and Hodge matrices, Betti numbers, supertraces,
//! and spectral functions of finite simplicial complexes.
//!
//! Matrices are dense and indexed by the canonical simplex order of the
//! complex. The exterior derivative `d` sits below the block diagonal: row
//! `x` (a `(k+1)`-simplex) and column `y` (a `k`-simplex) hold the sign with
//! which `y` appears in the boundary of `x`, so `(d f)(x) = Σ_j (-1)^j f(δ_j x)`.

pub mod exact;

use nalgebra::DMatrix;
use serde::Serialize;

use crate::complex::{Complex, Simplex};
use crate::error::{invalid, Error, Result};
use crate::graph::Graph;
use crate::linalg;

pub const DEFAULT_TOL: f64 = 1e-8;

/// `(-1)^j` when `y` is `x` with its `j`-th vertex removed, otherwise 0.
pub fn incidence_sign(x: &Simplex, y: &Simplex) -> i8 {
    if x.len() != y.len() + 1 {
        return 0;
    }
    let (xv, yv) = (x.vertices(), y.vertices());
    // first position where the lists differ is the dropped vertex
    let j = xv.iter().zip(yv).position(|(a, b)| a != b).unwrap_or(yv.len());
    if xv[..j] == yv[..j] && xv[j + 1..] == yv[j..] {
        if j % 2 == 0 {
            1
        } else {
            -1
        }
    } else {
        0
    }
}

/// `D = d + d*` with its block boundaries.
#[derive(Clone, Debug, PartialEq)]
pub struct DiracMatrix {
    pub matrix: DMatrix<f64>,
    pub offsets: Vec<usize>,
}

impl DiracMatrix {
    pub fn n(&self) -> usize {
        self.matrix.nrows()
    }

    /// Number of dimension sectors `q + 1`.
    pub fn sectors(&self) -> usize {
        self.offsets.len().saturating_sub(1)
    }

    /// The part below the block diagonal.
    pub fn exterior_derivative(&self) -> DMatrix<f64> {
        let sector = sector_map(&self.offsets);
        DMatrix::from_fn(self.n(), self.n(), |i, j| {
            if sector[i] > sector[j] {
                self.matrix[(i, j)]
            } else {
                0.0
            }
        })
    }

    pub fn hodge(&self) -> HodgeBlocks {
        let square = &self.matrix * &self.matrix;
        HodgeBlocks::from_diagonal_blocks(&square, &self.offsets)
    }
}

/// Dimension sector of every row index.
pub fn sector_map(offsets: &[usize]) -> Vec<usize> {
    let n = offsets.last().copied().unwrap_or(0);
    let mut out = vec![0; n];
    for (k, w) in offsets.windows(2).enumerate() {
        for s in &mut out[w[0]..w[1]] {
            *s = k;
        }
    }
    out
}

pub fn dirac(c: &Complex) -> DiracMatrix {
    let n = c.len();
    let mut m = DMatrix::zeros(n, n);
    for (i, x) in c.simplices().iter().enumerate() {
        for j in 0..x.len() {
            if let Some(y) = x.face(j) {
                let col = c.index_of(&y).expect("complex is closed");
                let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
                m[(i, col)] = sign;
                m[(col, i)] = sign;
            }
        }
    }
    DiracMatrix { matrix: m, offsets: c.offsets().to_vec() }
}

/// Kirchhoff (graph) Laplacian `deg - adjacency`.
pub fn kirchhoff(g: &Graph) -> DMatrix<f64> {
    let n = g.n();
    let mut m = DMatrix::zeros(n, n);
    for (a, b) in g.edges() {
        m[(a, b)] = -1.0;
        m[(b, a)] = -1.0;
        m[(a, a)] += 1.0;
        m[(b, b)] += 1.0;
    }
    m
}

/// The diagonal blocks `L_0 .. L_q` of `L = D²`.
#[derive(Clone, Debug, PartialEq)]
pub struct HodgeBlocks {
    pub blocks: Vec<DMatrix<f64>>,
}

impl HodgeBlocks {
    pub fn from_diagonal_blocks(m: &DMatrix<f64>, offsets: &[usize]) -> Self {
        let blocks = offsets
            .windows(2)
            .map(|w| m.view((w[0], w[0]), (w[1] - w[0], w[1] - w[0])).into_owned())
            .collect();
        HodgeBlocks { blocks }
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.nrows()).collect()
    }

    pub fn betti(&self, tol: f64) -> Result<Vec<usize>> {
        self.blocks.iter().map(|b| linalg::nullity(b, tol)).collect()
    }

    /// `Σ_k (-1)^k tr exp(-t L_k)`.
    pub fn supertrace(&self, t: f64) -> Result<f64> {
        let mut total = 0.0;
        for (k, b) in self.blocks.iter().enumerate() {
            let (values, _) = linalg::symmetric_eigen(b)?;
            let tr: f64 = values.iter().map(|&l| (-t * l).exp()).sum();
            total += if k % 2 == 0 { tr } else { -tr };
        }
        Ok(total)
    }

    /// `Σ_k (-1)^k tr L_k^p`.
    pub fn supertrace_power(&self, p: u32) -> f64 {
        let mut total = 0.0;
        for (k, b) in self.blocks.iter().enumerate() {
            let mut power = DMatrix::identity(b.nrows(), b.ncols());
            for _ in 0..p {
                power = &power * b;
            }
            let tr = power.trace();
            total += if k % 2 == 0 { tr } else { -tr };
        }
        total
    }
}

pub fn hodge(c: &Complex) -> HodgeBlocks {
    dirac(c).hodge()
}

/// Nullity of each Hodge block; singular values below `tol · max(1, σ_max)`
/// count as zero.
pub fn betti(c: &Complex, tol: f64) -> Result<Vec<usize>> {
    if !(tol > 0.0) {
        return invalid(format!("tolerance must be positive, got {tol}"));
    }
    hodge(c).betti(tol)
}

pub fn supertrace(h: &HodgeBlocks, t: f64) -> Result<f64> {
    if t < 0.0 {
        return invalid(format!("heat time must be non-negative, got {t}"));
    }
    h.supertrace(t)
}

/// Parity-weighted trace `Σ_i (-1)^{sector(i)} m_ii` of any square matrix.
pub fn supertrace_of(m: &DMatrix<f64>, offsets: &[usize]) -> f64 {
    sector_map(offsets)
        .iter()
        .enumerate()
        .map(|(i, &k)| if k % 2 == 0 { m[(i, i)] } else { -m[(i, i)] })
        .sum()
}

/// Ascending eigenvalues of a symmetric matrix.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Spectrum {
    values: Vec<f64>,
}

impl Spectrum {
    pub fn from_values(mut values: Vec<f64>) -> Self {
        values.sort_by(f64::total_cmp);
        Spectrum { values }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn max(&self) -> f64 {
        self.values.last().copied().unwrap_or(0.0)
    }

    /// One value per line, shortest round-trip decimal representation.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for v in &self.values {
            out.push_str(&format!("{v:?}\n"));
        }
        out
    }
}

pub fn spectrum(m: &DMatrix<f64>) -> Result<Spectrum> {
    let (values, _) = linalg::symmetric_eigen(m)?;
    Ok(Spectrum { values })
}

/// The step function `F(x) = λ_{⌈n x⌉}` on `[0, 1]` with `F(0) = 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectralFunction {
    pub spectrum: Spectrum,
}

impl SpectralFunction {
    pub fn new(spectrum: Spectrum) -> Self {
        SpectralFunction { spectrum }
    }

    pub fn value(&self, x: f64) -> Result<f64> {
        spectral_function_value(&self.spectrum, x)
    }

    /// Integrated density of states: the fraction of eigenvalues `<= λ`.
    pub fn ids(&self, lambda: f64) -> f64 {
        ids_value(&self.spectrum, lambda)
    }
}

pub fn spectral_function_value(s: &Spectrum, x: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&x) {
        return invalid(format!("spectral function argument {x} outside [0, 1]"));
    }
    let n = s.len();
    if x == 0.0 || n == 0 {
        return Ok(0.0);
    }
    let i = ((n as f64) * x).ceil() as usize;
    Ok(s.values[i.clamp(1, n) - 1])
}

pub fn ids_value(s: &Spectrum, lambda: f64) -> f64 {
    if s.is_empty() {
        return 0.0;
    }
    let count = s.values.partition_point(|&v| v <= lambda);
    count as f64 / s.len() as f64
}

/// `∫_0^1 |F_a - F_b| dx`, exact for the two step functions: the breakpoints
/// `i/n_a` and `j/n_b` are merged with integer comparisons.
pub fn l1_distance(a: &SpectralFunction, b: &SpectralFunction) -> f64 {
    let (va, vb) = (a.spectrum.values(), b.spectrum.values());
    let (na, nb) = (va.len() as u128, vb.len() as u128);
    match (na, nb) {
        (0, 0) => return 0.0,
        (0, _) => return vb.iter().map(|v| v.abs()).sum::<f64>() / nb as f64,
        (_, 0) => return va.iter().map(|v| v.abs()).sum::<f64>() / na as f64,
        _ => {}
    }
    // interval (x0, x1] with x = k / (na·nb) in common units
    let total = na * nb;
    let (mut i, mut j) = (1u128, 1u128);
    let mut x0 = 0u128;
    let mut sum = 0.0;
    while x0 < total {
        let end_a = i * nb;
        let end_b = j * na;
        let x1 = end_a.min(end_b);
        let diff = (va[i as usize - 1] - vb[j as usize - 1]).abs();
        sum += diff * ((x1 - x0) as f64);
        x0 = x1;
        if end_a == x1 {
            i += 1;
        }
        if end_b == x1 {
            j += 1;
        }
    }
    sum / total as f64
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LidskiiCheck {
    pub lhs: f64,
    pub rhs: f64,
    pub ok: bool,
}

/// Compares `Σ |α_j - β_j|` over sorted eigenvalues with the entrywise
/// absolute sum of `A - B`.
pub fn lidskii_check(a: &DMatrix<f64>, b: &DMatrix<f64>) -> Result<LidskiiCheck> {
    if a.shape() != b.shape() {
        return Err(Error::DimensionMismatch(format!(
            "{:?} vs {:?}",
            a.shape(),
            b.shape()
        )));
    }
    let sa = spectrum(a)?;
    let sb = spectrum(b)?;
    let lhs = sa.values().iter().zip(sb.values()).map(|(x, y)| (x - y).abs()).sum();
    let rhs = (a - b).abs().sum();
    Ok(LidskiiCheck { lhs, rhs, ok: lhs <= rhs + 1e-9 })
}

/// CDF of the arcsin law on `[0, 4]`: `(2/π) arcsin(√x / 2)`, clamped outside.
pub fn arcsin_cdf(x: f64) -> f64 {
    let x = x.clamp(0.0, 4.0);
    std::f64::consts::FRAC_2_PI * (x.sqrt() / 2.0).min(1.0).asin()
}

/// `sup |ids(λ) - cdf(λ)|` over `points` equally spaced grid values in `[lo, hi]`.
pub fn sup_distance_on_grid(
    f: &SpectralFunction,
    cdf: impl Fn(f64) -> f64,
    lo: f64,
    hi: f64,
    points: usize,
) -> f64 {
    let steps = points.max(2) - 1;
    (0..=steps)
        .map(|i| lo + (hi - lo) * i as f64 / steps as f64)
        .map(|l| (f.ids(l) - cdf(l)).abs())
        .fold(0.0, f64::max)
}
