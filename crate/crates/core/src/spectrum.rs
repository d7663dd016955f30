//! Full eigenvalue spectrum of a Google matrix.

use std::cmp::Ordering;

use crate::eigen::{eigenvalues, Eigenvalue};
use crate::error::Result;
use crate::google::{DampingFactor, GoogleMatrix};

#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    /// Sorted by modulus, then real part, then imaginary part, all descending.
    pub eigenvalues: Vec<Eigenvalue>,
    pub alpha: DampingFactor,
}

impl Spectrum {
    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    pub fn sum(&self) -> (f64, f64) {
        self.eigenvalues
            .iter()
            .fold((0.0, 0.0), |(re, im), e| (re + e.re, im + e.im))
    }
}

fn spectrum_order(a: &Eigenvalue, b: &Eigenvalue) -> Ordering {
    b.modulus()
        .total_cmp(&a.modulus())
        .then(b.re.total_cmp(&a.re))
        .then(b.im.total_cmp(&a.im))
}

/// All `n` eigenvalues of the dense Google matrix.
pub fn full_spectrum(gm: &GoogleMatrix) -> Result<Spectrum> {
    let dense = gm.materialize()?;
    let mut ev = eigenvalues(&dense)?;
    ev.sort_by(spectrum_order);
    Ok(Spectrum {
        eigenvalues: ev,
        alpha: gm.alpha(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralStats {
    /// Share of eigenvalues with modulus strictly above the threshold.
    pub fraction_above: f64,
    pub lambda2_modulus: f64,
}

pub fn spectral_stats(s: &Spectrum, threshold: f64) -> SpectralStats {
    let n = s.len();
    let above = s
        .eigenvalues
        .iter()
        .filter(|e| e.modulus() > threshold)
        .count();
    SpectralStats {
        fraction_above: if n == 0 { 0.0 } else { above as f64 / n as f64 },
        lambda2_modulus: s.eigenvalues.get(1).map_or(0.0, Eigenvalue::modulus),
    }
}

/// `|trace(G) − Σ λ|`, a cheap self-check of the eigensolver.
pub fn trace_check(gm: &GoogleMatrix, s: &Spectrum) -> Result<f64> {
    let trace = gm.materialize()?.trace();
    let (re, im) = s.sum();
    Ok((trace - re).hypot(im))
}
