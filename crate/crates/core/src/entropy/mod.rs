//! Von Neumann entropies of dense states across bipartitions.
//!
//! For a cut `A | B` the amplitudes are gathered into a `d^|A| × d^|B|`
//! matrix `M` and the reduced spectrum is read off the Gram matrix of the
//! smaller side. All-zero rows and columns of `M` are dropped first, and the
//! Gram matrix is split into the connected components of its nonzero
//! pattern before diagonalizing; both steps leave the nonzero spectrum
//! unchanged.

mod partitions;
mod sweep;

pub use partitions::{binomial, partitions, structured_partitions, PartitionMode};
pub use sweep::{entropy_sweep, value_key, EntropyReport, PlanRow, ReportRow, SweepPlan, Tolerances, DEFAULT_BUDGET};

use faer::Mat;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::state::StateVector;

/// Eigenvalues below this are dropped from `-λ log₂ λ`.
pub const EIG_CUTOFF: f64 = 1e-12;
/// Distance to the nearest integer under which an entropy counts as integral.
pub const INTEGER_TOLERANCE: f64 = 1e-9;
/// Allowed deviation of `Σ|a|²` from 1.
pub const NORM_TOLERANCE: f64 = 1e-9;

/// The `A` side of a cut of `n` sites (0-based, sorted, no duplicates).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Bipartition {
    n: usize,
    sites: Vec<usize>,
}

impl Bipartition {
    pub fn new(n: usize, sites: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut sites: Vec<usize> = sites.into_iter().collect();
        let len = sites.len();
        sites.sort_unstable();
        sites.dedup();
        if sites.len() != len {
            return Err(Error::invalid("bipartition repeats a site"));
        }
        if let Some(&bad) = sites.iter().find(|&&s| s >= n) {
            return Err(Error::IndexError { index: bad, len: n });
        }
        if sites.is_empty() || sites.len() >= n {
            return Err(Error::invalid(format!(
                "block of {} sites is not a proper cut of {n}",
                sites.len()
            )));
        }
        Ok(Self { n, sites })
    }

    /// From 1-based site labels.
    pub fn from_labels(n: usize, labels: &[usize]) -> Result<Self> {
        if labels.contains(&0) {
            return Err(Error::invalid("site labels start at 1"));
        }
        Self::new(n, labels.iter().map(|&l| l - 1))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn sites(&self) -> &[usize] {
        &self.sites
    }

    pub fn len(&self) -> usize {
        self.sites.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sites.is_empty()
    }

    pub fn labels(&self) -> Vec<usize> {
        self.sites.iter().map(|&s| s + 1).collect()
    }

    pub fn complement_sites(&self) -> Vec<usize> {
        (0..self.n).filter(|s| self.sites.binary_search(s).is_err()).collect()
    }

    pub fn complement(&self) -> Self {
        Self {
            n: self.n,
            sites: self.complement_sites(),
        }
    }

    pub fn contains(&self, site: usize) -> bool {
        self.sites.binary_search(&site).is_ok()
    }
}

/// Offsets into the full amplitude array of every digit assignment of
/// `sites`, enumerated big-endian in the order given.
fn scatter_offsets(n: usize, d: usize, sites: &[usize]) -> Vec<usize> {
    let mut offsets = vec![0usize];
    for &s in sites {
        let w = d.pow((n - 1 - s) as u32);
        offsets = offsets
            .iter()
            .flat_map(|&o| (0..d).map(move |digit| o + digit * w))
            .collect();
    }
    offsets
}

fn check_normalized<F: Real>(sv: &StateVector<F>) -> Result<()> {
    let norm = sv.norm_sqr();
    if (norm - 1.0).abs() > NORM_TOLERANCE {
        return Err(Error::NotNormalized(norm));
    }
    Ok(())
}

fn check_cut<F: Real>(sv: &StateVector<F>, bp: &Bipartition) -> Result<()> {
    if bp.n() != sv.n() {
        return Err(Error::ShapeMismatch(format!(
            "cut of {} sites applied to a {}-site state",
            bp.n(),
            sv.n()
        )));
    }
    Ok(())
}

/// Eigenvalues of the reduced density matrix of the smaller side of the cut,
/// restricted to the support of the Gram matrix. Unnormalized states give
/// the spectrum scaled by their norm.
pub fn reduced_spectrum<F: Real>(sv: &StateVector<F>, bp: &Bipartition) -> Result<Vec<F>> {
    check_cut(sv, bp)?;
    Ok(spectrum_unchecked(sv, bp))
}

fn spectrum_unchecked<F: Real>(sv: &StateVector<F>, bp: &Bipartition) -> Vec<F> {
    let (n, d) = (sv.n(), sv.d());
    let a_sites = bp.sites().to_vec();
    let b_sites = bp.complement_sites();
    let (small, large) = if a_sites.len() <= b_sites.len() {
        (a_sites, b_sites)
    } else {
        (b_sites, a_sites)
    };
    let row_off = scatter_offsets(n, d, &small);
    let col_off = scatter_offsets(n, d, &large);
    let amps = sv.amps();

    let mut row_live = vec![false; row_off.len()];
    let mut col_live = vec![false; col_off.len()];
    for (r, &ro) in row_off.iter().enumerate() {
        for (c, &co) in col_off.iter().enumerate() {
            if !amps[ro + co].is_zero() {
                row_live[r] = true;
                col_live[c] = true;
            }
        }
    }
    let rows: Vec<usize> = (0..row_off.len()).filter(|&r| row_live[r]).map(|r| row_off[r]).collect();
    let cols: Vec<usize> = (0..col_off.len()).filter(|&c| col_live[c]).map(|c| col_off[c]).collect();
    if rows.is_empty() {
        return Vec::new();
    }
    let m = Mat::<F>::from_fn(rows.len(), cols.len(), |r, c| amps[rows[r] + cols[c]]);
    let gram = if rows.len() <= cols.len() {
        &m * m.transpose()
    } else {
        m.transpose() * &m
    };
    block_eigenvalues(&gram)
}

/// Eigenvalues of a symmetric matrix, diagonalizing each connected block of
/// its nonzero pattern separately.
fn block_eigenvalues<F: Real>(g: &Mat<F>) -> Vec<F> {
    let k = g.nrows();
    let mut parent: Vec<usize> = (0..k).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for i in 0..k {
        for j in i + 1..k {
            if !g[(i, j)].is_zero() {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
    }
    let mut blocks: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for i in 0..k {
        let root = find(&mut parent, i);
        blocks.entry(root).or_default().push(i);
    }
    let mut out = Vec::with_capacity(k);
    for idx in blocks.values() {
        if idx.len() == 1 {
            out.push(g[(idx[0], idx[0])]);
            continue;
        }
        let block = Mat::<F>::from_fn(idx.len(), idx.len(), |r, c| g[(idx[r], idx[c])]);
        let ev = block
            .self_adjoint_eigenvalues(faer::Side::Lower)
            .expect("symmetric eigensolver converges");
        out.extend(ev);
    }
    out
}

/// `-Σ λ log₂ λ` over eigenvalues above `cutoff`.
pub fn shannon_bits<F: Real>(eigenvalues: &[F], cutoff: F) -> F {
    eigenvalues
        .iter()
        .filter(|&&l| l > cutoff)
        .map(|&l| -l * l.log2())
        .sum()
}

/// Entanglement entropy in bits of `sv` across `bp`.
pub fn entropy<F: Real>(sv: &StateVector<F>, bp: &Bipartition) -> Result<F> {
    check_cut(sv, bp)?;
    check_normalized(sv)?;
    Ok(entropy_unchecked(sv, bp))
}

pub(crate) fn entropy_unchecked<F: Real>(sv: &StateVector<F>, bp: &Bipartition) -> F {
    shannon_bits(&spectrum_unchecked(sv, bp), F::default_eig_cutoff())
}

/// Entropies of many cuts, in the order given. Runs on the rayon pool.
pub fn entropies<F: Real>(sv: &StateVector<F>, cuts: &[Bipartition]) -> Result<Vec<F>> {
    check_normalized(sv)?;
    for bp in cuts {
        check_cut(sv, bp)?;
    }
    Ok(cuts.par_iter().map(|bp| entropy_unchecked(sv, bp)).collect())
}

/// Outcome of checking every balanced cut for maximal entanglement.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AmeVerdict {
    pub pass: bool,
    pub cuts_checked: usize,
    /// Largest `|S_A - m log₂ d|` over the cuts.
    pub worst_deviation: f64,
    /// The cut attaining `worst_deviation`.
    pub witness: Bipartition,
    pub witness_entropy: f64,
}

/// Checks that every cut of `⌊n/2⌋` sites carries `⌊n/2⌋ log₂ d` bits, which
/// is enough for every smaller block to be maximally mixed as well.
pub fn verify_ame<F: Real>(sv: &StateVector<F>, tol: f64) -> Result<AmeVerdict> {
    let m = sv.n() / 2;
    let cuts = partitions(sv.n(), m, &PartitionMode::Exhaustive, None, usize::MAX)?;
    let values = entropies(sv, &cuts)?;
    let target = m as f64 * (sv.d() as f64).log2();
    let (worst, dev) = values
        .iter()
        .enumerate()
        .map(|(i, v)| (i, (v.to_f64().unwrap() - target).abs()))
        .fold((0, -1.0), |acc, x| if x.1 > acc.1 { x } else { acc });
    Ok(AmeVerdict {
        pass: dev < tol,
        cuts_checked: cuts.len(),
        worst_deviation: dev,
        witness: cuts[worst].clone(),
        witness_entropy: values[worst].to_f64().unwrap(),
    })
}
