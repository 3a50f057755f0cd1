//! Density of states along a sequence of Barycentric refinements.

use std::str::FromStr;

use nalgebra::DMatrix;
use serde::Serialize;

use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::spectral::{self, arcsin_cdf, l1_distance, SpectralFunction, Spectrum};

pub const DEFAULT_MAX_DENSE: usize = 6000;

/// Grid used for the sup-distance to the arcsin law.
pub const ARCSIN_WINDOW: (f64, f64) = (0.05, 3.95);
pub const ARCSIN_POINTS: usize = 3901;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Operator {
    /// Graph Laplacian of the 1-skeleton.
    Kirchhoff,
    /// `L = D²` on all simplices.
    Hodge,
    Dirac,
}

impl FromStr for Operator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "kirchhoff" => Ok(Operator::Kirchhoff),
            "hodge" => Ok(Operator::Hodge),
            "dirac" => Ok(Operator::Dirac),
            other => Err(Error::InvalidInput(format!("unknown operator '{other}' (kirchhoff|hodge|dirac)"))),
        }
    }
}

impl std::fmt::Display for Operator {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Operator::Kirchhoff => "kirchhoff",
            Operator::Hodge => "hodge",
            Operator::Dirac => "dirac",
        })
    }
}

pub fn operator_size(c: &Complex, op: Operator) -> usize {
    match op {
        Operator::Kirchhoff => c.simplices_of_dim(0).len(),
        Operator::Hodge | Operator::Dirac => c.len(),
    }
}

pub fn operator_matrix(c: &Complex, op: Operator) -> DMatrix<f64> {
    match op {
        Operator::Kirchhoff => spectral::kirchhoff(&c.skeleton_graph().0),
        Operator::Hodge => {
            let d = spectral::dirac(c).matrix;
            &d * &d
        }
        Operator::Dirac => spectral::dirac(c).matrix,
    }
}

/// Spectrum of the operator, refusing matrices larger than `max_dense`.
pub fn operator_spectrum(c: &Complex, op: Operator, max_dense: usize) -> Result<Spectrum> {
    let n = operator_size(c, op);
    if n > max_dense {
        return Err(Error::TooLarge { size: n, limit: max_dense });
    }
    spectral::spectrum(&operator_matrix(c, op))
}

/// `c, refine(c), ..., refine^r(c)`.
pub fn generations(c: &Complex, refinements: usize) -> Vec<Complex> {
    let mut out = vec![c.clone()];
    for _ in 0..refinements {
        let next = out.last().expect("non-empty").barycentric_refine();
        out.push(next);
    }
    out
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DosReport {
    pub operator: Operator,
    pub sizes: Vec<usize>,
    /// `‖F_m - F_{m+1}‖₁`
    pub distances: Vec<f64>,
    /// `distances[m+1] / distances[m]`
    pub ratios: Vec<f64>,
    /// Sup-distance of the last IDS to the arcsin law, for 1-dimensional inputs
    /// with the Kirchhoff operator.
    pub arcsin_sup: Option<f64>,
}

pub fn convergence_report(c: &Complex, op: Operator, spectra: &[Spectrum]) -> DosReport {
    let functions: Vec<SpectralFunction> = spectra.iter().cloned().map(SpectralFunction::new).collect();
    let distances: Vec<f64> = functions.windows(2).map(|w| l1_distance(&w[0], &w[1])).collect();
    let ratios = distances.windows(2).map(|w| w[1] / w[0]).collect();
    let arcsin_sup = (op == Operator::Kirchhoff && c.dim() == Some(1)).then(|| {
        let last = functions.last().expect("at least one generation");
        spectral::sup_distance_on_grid(last, arcsin_cdf, ARCSIN_WINDOW.0, ARCSIN_WINDOW.1, ARCSIN_POINTS)
    });
    DosReport { operator: op, sizes: spectra.iter().map(Spectrum::len).collect(), distances, ratios, arcsin_sup }
}

/// `‖F_{G_m} - F_{H_m}‖₁` for two refinement sequences of equal length.
pub fn cross_distances(a: &[Spectrum], b: &[Spectrum]) -> Vec<f64> {
    a.iter()
        .zip(b)
        .map(|(x, y)| l1_distance(&SpectralFunction::new(x.clone()), &SpectralFunction::new(y.clone())))
        .collect()
}
