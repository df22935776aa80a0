//! Laplacian matrices and their spectra.

use crate::error::SpectraError;
use crate::graph::Graph;

/// Sweep cap for the Jacobi solver.
pub const MAX_SWEEPS: usize = 100;

/// Convergence threshold: off-diagonal Frobenius mass relative to `‖M‖_F`.
pub const RELATIVE_OFF_DIAGONAL: f64 = 1e-12;

/// Absolute tolerance for spectral assertions on an `n`-vertex graph.
pub fn spectral_tolerance(n: usize) -> f64 {
    1e-8 * (n.max(1) as f64)
}

/// Dense real symmetric matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct SymmetricMatrix {
    order: usize,
    entries: Vec<f64>,
}

impl SymmetricMatrix {
    /// Checks shape and exact symmetry.
    pub fn new(order: usize, entries: Vec<f64>) -> Result<Self, SpectraError> {
        if order == 0 || entries.len() != order * order {
            return Err(SpectraError::Shape {
                order,
                len: entries.len(),
            });
        }
        for i in 0..order {
            for j in i + 1..order {
                if entries[i * order + j] != entries[j * order + i] {
                    return Err(SpectraError::NotSymmetric { i, j });
                }
            }
        }
        Ok(SymmetricMatrix { order, entries })
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self, SpectraError> {
        let order = rows.len();
        let entries: Vec<f64> = rows.iter().flatten().copied().collect();
        if rows.iter().any(|r| r.len() != order) {
            return Err(SpectraError::Shape {
                order,
                len: entries.len(),
            });
        }
        Self::new(order, entries)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.order + j]
    }

    pub fn trace(&self) -> f64 {
        (0..self.order).map(|i| self.get(i, i)).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.entries.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        self.entries.chunks(self.order).map(<[f64]>::to_vec).collect()
    }
}

/// `L = D - A`.
pub fn laplacian(g: &Graph) -> SymmetricMatrix {
    let n = g.n();
    let mut entries = vec![0.0; n * n];
    for (i, &d) in g.degrees().iter().enumerate() {
        entries[i * n + i] = f64::from(d);
    }
    for (i, j) in g.edges() {
        entries[i * n + j] = -1.0;
        entries[j * n + i] = -1.0;
    }
    SymmetricMatrix { order: n, entries }
}

/// `L' = J - L`, entrywise `1 - l_ij`.
pub fn complement_l(g: &Graph) -> SymmetricMatrix {
    let mut l = laplacian(g);
    for x in &mut l.entries {
        *x = 1.0 - *x;
    }
    l
}

/// Eigenvalues sorted non-increasing, with solver diagnostics.
#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum {
    values: Vec<f64>,
    /// Off-diagonal Frobenius mass when the solver stopped. Bounds the
    /// distance of `values` from the true spectrum (Wielandt–Hoffman).
    pub residual: f64,
    /// `|Σ values - trace(M)|`.
    pub trace_error: f64,
}

impl Spectrum {
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Largest eigenvalue.
    pub fn largest(&self) -> f64 {
        self.values[0]
    }

    /// Smallest eigenvalue.
    pub fn smallest(&self) -> f64 {
        self.values[self.values.len() - 1]
    }

    /// `S_k`, the sum of the `k` largest eigenvalues.
    pub fn partial_sum(&self, k: usize) -> Result<f64, SpectraError> {
        let n = self.values.len();
        if k == 0 || k > n {
            return Err(SpectraError::KOutOfRange { k, n });
        }
        Ok(self.values[..k].iter().sum())
    }

    /// `[S_1, .., S_n]`.
    pub fn partial_sums(&self) -> Vec<f64> {
        self.values
            .iter()
            .scan(0.0, |acc, &x| {
                *acc += x;
                Some(*acc)
            })
            .collect()
    }

    pub fn sum_of_squares(&self) -> f64 {
        self.values.iter().map(|x| x * x).sum()
    }
}

/// `S_k` of `spectrum`.
pub fn s_k(spectrum: &Spectrum, k: usize) -> Result<f64, SpectraError> {
    spectrum.partial_sum(k)
}

/// All eigenvalues of `m` by cyclic Jacobi rotations.
///
/// Sweeps visit pairs `(p, q)`, `p < q`, in row order and annihilate each
/// nonzero off-diagonal entry. Iteration stops once the off-diagonal
/// Frobenius mass drops below `1e-12 · ‖M‖_F`; the arithmetic is sequential
/// so identical inputs give bit-identical outputs.
pub fn eigenvalues_sym(m: &SymmetricMatrix) -> Result<Spectrum, SpectraError> {
    let n = m.order;
    let mut a = m.entries.clone();
    let target = RELATIVE_OFF_DIAGONAL * m.frobenius_norm();

    let mut sweeps = 0;
    let mut off = off_diagonal_mass(&a, n);
    while off > target {
        if sweeps == MAX_SWEEPS {
            return Err(SpectraError::NotConverged {
                sweeps,
                residual: off,
            });
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, n, p, q);
            }
        }
        sweeps += 1;
        off = off_diagonal_mass(&a, n);
    }

    let mut values: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    values.sort_by(|x, y| y.total_cmp(x));
    let trace_error = (values.iter().sum::<f64>() - m.trace()).abs();
    Ok(Spectrum {
        values,
        residual: off,
        trace_error,
    })
}

fn off_diagonal_mass(a: &[f64], n: usize) -> f64 {
    let mut sum = 0.0;
    for p in 0..n {
        for q in p + 1..n {
            sum += a[p * n + q] * a[p * n + q];
        }
    }
    (2.0 * sum).sqrt()
}

/// Zeroes `a[p][q]` with a two-sided rotation in the (p, q) plane.
fn rotate(a: &mut [f64], n: usize, p: usize, q: usize) {
    let apq = a[p * n + q];
    if apq == 0.0 {
        return;
    }
    let app = a[p * n + p];
    let aqq = a[q * n + q];
    let theta = (aqq - app) / (2.0 * apq);
    // Smaller root of t^2 + 2 theta t - 1 = 0.
    let t = if theta.abs() > 1e150 {
        0.5 / theta
    } else {
        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;

    a[p * n + p] = app - t * apq;
    a[q * n + q] = aqq + t * apq;
    a[p * n + q] = 0.0;
    a[q * n + p] = 0.0;
    for r in 0..n {
        if r == p || r == q {
            continue;
        }
        let arp = a[r * n + p];
        let arq = a[r * n + q];
        let new_rp = c * arp - s * arq;
        let new_rq = s * arp + c * arq;
        a[r * n + p] = new_rp;
        a[p * n + r] = new_rp;
        a[r * n + q] = new_rq;
        a[q * n + r] = new_rq;
    }
}
