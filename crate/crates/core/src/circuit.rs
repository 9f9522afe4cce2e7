//! Exact state-vector simulation of the one-query promise circuit.
//!
//! The register `X` is treated as `ℤ_{|X|}`; basis state `|g, h⟩` has
//! index `g·|H| + h`.

use num_complex::Complex64;
use rand::distributions::{Distribution, WeightedIndex};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::{Deserialize, Serialize};

use crate::linalg::{CMatrix, ONE, ZERO};
use crate::promise::PromiseFunction;
use crate::qft::{cyclic_fourier_matrix, fourier_matrix, FourierMatrix};
use crate::representation::{EntryIndex, IrrepSet};
use crate::{Error, Result};

/// The permutation `(g, h) ↦ (g, f(g)·h)` of the `X × H` basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleMatrix {
    h_size: usize,
    perm: Vec<usize>,
}

impl OracleMatrix {
    /// Image index of each basis index.
    pub fn permutation(&self) -> &[usize] {
        &self.perm
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(a, &b)| a == b)
    }

    pub fn compose(&self, other: &OracleMatrix) -> OracleMatrix {
        OracleMatrix {
            h_size: self.h_size,
            perm: other.perm.iter().map(|&i| self.perm[i]).collect(),
        }
    }

    pub fn to_matrix(&self) -> CMatrix {
        let n = self.perm.len();
        let mut m = CMatrix::zeros(n, n);
        for (a, &b) in self.perm.iter().enumerate() {
            m[(b, a)] = ONE;
        }
        m
    }

    pub fn apply(&self, amplitudes: &[Complex64]) -> Vec<Complex64> {
        let mut out = vec![ZERO; amplitudes.len()];
        for (a, &b) in self.perm.iter().enumerate() {
            out[b] = amplitudes[a];
        }
        out
    }
}

pub fn oracle_matrix(f: &PromiseFunction) -> Result<OracleMatrix> {
    let h = f.codomain();
    let hs = h.order();
    let mut perm = Vec::with_capacity(f.domain_size() * hs);
    for g in 0..f.domain_size() {
        for x in h.elements() {
            perm.push(g * hs + h.mul(f.eval(g), x));
        }
    }
    let mut seen = vec![false; perm.len()];
    for &p in &perm {
        if std::mem::replace(&mut seen[p], true) {
            return Err(Error::Inconsistent("oracle is not a permutation".into()));
        }
    }
    Ok(OracleMatrix { h_size: hs, perm })
}

/// Amplitudes over the `X × H` basis.
#[derive(Debug, Clone, PartialEq)]
pub struct QuantumState {
    x_size: usize,
    h_size: usize,
    amplitudes: Vec<Complex64>,
}

impl QuantumState {
    pub fn basis(x_size: usize, h_size: usize, g: usize, h: usize) -> Self {
        let mut amplitudes = vec![ZERO; x_size * h_size];
        amplitudes[g * h_size + h] = ONE;
        QuantumState {
            x_size,
            h_size,
            amplitudes,
        }
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn amplitude(&self, g: usize, h: usize) -> Complex64 {
        self.amplitudes[g * self.h_size + h]
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Applies `A ⊗ B` in the ket convention of [`FourierMatrix::apply`],
    /// one register at a time.
    pub fn apply_registers(&mut self, a: &FourierMatrix, b: &FourierMatrix) {
        let (xs, hs) = (self.x_size, self.h_size);
        let (ma, mb) = (a.entries(), b.entries());
        let mut tmp = vec![ZERO; xs * hs];
        for g in 0..xs {
            for h2 in 0..hs {
                tmp[g * hs + h2] = (0..hs).map(|h| mb[(h, h2)] * self.amplitudes[g * hs + h]).sum();
            }
        }
        for g2 in 0..xs {
            for h in 0..hs {
                self.amplitudes[g2 * hs + h] = (0..xs).map(|g| ma[(g, g2)] * tmp[g * hs + h]).sum();
            }
        }
    }

    pub fn apply_oracle(&mut self, oracle: &OracleMatrix) {
        self.amplitudes = oracle.apply(&self.amplitudes);
    }

    /// `Pr[first register = g]` for every `g`.
    pub fn first_register_distribution(&self) -> Vec<f64> {
        self.amplitudes
            .chunks(self.h_size)
            .map(|c| c.iter().map(|z| z.norm_sqr()).sum())
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CircuitVerdict {
    Constant,
    Balanced,
    PromiseViolated,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CircuitReport {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub function_id: Option<String>,
    pub domain_size: usize,
    pub codomain_order: usize,
    /// `(i, j, k)`, one-based.
    pub index: [usize; 3],
    pub h0: usize,
    pub h0_label: String,
    pub probability_identity: f64,
    pub verdict: CircuitVerdict,
    /// State norm after each of the three layers.
    pub layer_norms: [f64; 3],
    /// `|⟨1_X, h|ψ⟩|²` for every `h`.
    pub identity_block: Vec<f64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub final_state: Option<Vec<Complex64>>,
}

pub fn verdict_from_probability(p: f64, tol: f64) -> CircuitVerdict {
    if p >= 1.0 - tol {
        CircuitVerdict::Constant
    } else if p <= tol {
        CircuitVerdict::Balanced
    } else {
        CircuitVerdict::PromiseViolated
    }
}

/// Runs the circuit from `|1_X, h₀⟩` with `β(h₀) = idx`.
pub fn run_djh(f: &PromiseFunction, set: &IrrepSet, idx: EntryIndex, verdict_tol: f64) -> Result<CircuitReport> {
    if f.codomain() != set.group() {
        return Err(Error::Domain("the irrep set belongs to a different group".into()));
    }
    if set.is_trivial_irrep(idx.irrep) {
        return Err(Error::TrivialRepresentation(
            "the trivial irrep selects the identity of H as the starting state".into(),
        ));
    }
    let h0 = set
        .element_at(idx)
        .ok_or_else(|| Error::Index(format!("{idx} is not a valid entry position")))?;
    let (xs, hs) = (f.domain_size(), set.group().order());
    let fx = cyclic_fourier_matrix(xs);
    let fh = fourier_matrix(set);
    let oracle = oracle_matrix(f)?;

    let mut state = QuantumState::basis(xs, hs, 0, h0);
    state.apply_registers(&fx, &fh);
    let n1 = state.norm();
    state.apply_oracle(&oracle);
    let n2 = state.norm();
    state.apply_registers(&fx.adjoint(), &fh.adjoint());
    let n3 = state.norm();

    let identity_block: Vec<f64> = (0..hs).map(|h| state.amplitude(0, h).norm_sqr()).collect();
    let probability_identity = identity_block.iter().sum();
    Ok(CircuitReport {
        function_id: None,
        domain_size: xs,
        codomain_order: hs,
        index: [idx.row + 1, idx.col + 1, idx.irrep + 1],
        h0,
        h0_label: set.group().label(h0).to_string(),
        probability_identity,
        verdict: verdict_from_probability(probability_identity, verdict_tol),
        layer_norms: [n1, n2, n3],
        identity_block,
        final_state: Some(state.amplitudes),
    })
}

/// Closed form of the amplitudes on `|1_X, h⟩` with `β(h) = (k, r, j)`:
/// `(1/|X|) Σ_g conj(ρᵏ_{r,i}(f(g)))` for each `r`.
///
/// This is column `i` of `ρᵏ(f(g))`, equivalently row `i` of
/// `ρᵏ(f(g)⁻¹)`.
pub fn amplitude_identity_block(f: &PromiseFunction, set: &IrrepSet, k: usize, i: usize) -> Result<Vec<Complex64>> {
    set.check_position(k, i)?;
    let scale = 1.0 / f.domain_size() as f64;
    Ok((0..set.irrep(k).dim())
        .map(|r| f.image().iter().map(|&y| set.rho(k, r, i, y).conj()).sum::<Complex64>() * scale)
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LemmaReport {
    pub trials: usize,
    pub max_deviation: f64,
}

/// Random checks of
/// `Σ_h τᵏᵢⱼ(h)·conj(τᵗᵣₛ(y·h)) = conj(ρᵏᵣᵢ(y))·δ_{j,s}·δ_{k,t}`.
pub fn verify_matrixmult_lemma(set: &IrrepSet, trials: usize, seed: u64) -> LemmaReport {
    let mut rng = StdRng::seed_from_u64(seed);
    let group = set.group();
    let dims = set.dims();
    let mut max_deviation = 0.0f64;
    for _ in 0..trials {
        let k = rng.gen_range(0..dims.len());
        let (i, j) = (rng.gen_range(0..dims[k]), rng.gen_range(0..dims[k]));
        // half the trials hit the diagonal case k = t, j = s
        let (t, s) = if rng.gen_bool(0.5) {
            (k, j)
        } else {
            let t = rng.gen_range(0..dims.len());
            (t, rng.gen_range(0..dims[t]))
        };
        let r = rng.gen_range(0..dims[t]);
        let y = rng.gen_range(0..group.order());
        let lhs: Complex64 = group
            .elements()
            .map(|h| set.tau(k, i, j, h) * set.tau(t, r, s, group.mul(y, h)).conj())
            .sum();
        let rhs = if j == s && k == t {
            set.rho(k, r, i, y).conj()
        } else {
            ZERO
        };
        max_deviation = max_deviation.max((lhs - rhs).norm());
    }
    LemmaReport { trials, max_deviation }
}

/// Draws `shots` measurements of the first register; returns counts per
/// outcome.
pub fn sample_first_register(report: &CircuitReport, shots: usize, seed: u64) -> Result<Vec<u64>> {
    let state = report
        .final_state
        .as_ref()
        .ok_or_else(|| Error::Domain("report carries no final state".into()))?;
    let probs: Vec<f64> = state
        .chunks(report.codomain_order)
        .map(|c| c.iter().map(|z| z.norm_sqr()).sum())
        .collect();
    let dist = WeightedIndex::new(&probs).map_err(|e| Error::Domain(e.to_string()))?;
    let mut rng = StdRng::seed_from_u64(seed);
    let mut counts = vec![0; probs.len()];
    for _ in 0..shots {
        counts[dist.sample(&mut rng)] += 1;
    }
    Ok(counts)
}
