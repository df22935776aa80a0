//! Closed-form upper bounds on `S_k` and the k-intervals on which the
//! conjecture `S_k <= m + C(k+1, 2)` is known to hold.
//!
//! Every function here is plain double-precision arithmetic on `(n, m, k)`.
//! Interval endpoints go through [`ceil_snap`] / [`floor_snap`] so that a
//! root landing a rounding error away from an integer does not move the
//! integer endpoint.

use std::fmt;

use serde::Serialize;

use crate::error::BoundsError;
use crate::graph::pair_count;

/// Distance within which a real endpoint is treated as the nearby integer.
pub const SNAP_EPS: f64 = 1e-9;

/// `(√3 - 1) / 4`, the edge-density limit for the cube-root interval.
pub fn cube_root_density_limit() -> f64 {
    (3f64.sqrt() - 1.0) / 4.0
}

pub fn snap(x: f64) -> f64 {
    let r = x.round();
    if (x - r).abs() <= SNAP_EPS {
        r
    } else {
        x
    }
}

pub fn ceil_snap(x: f64) -> f64 {
    snap(x).ceil()
}

pub fn floor_snap(x: f64) -> f64 {
    snap(x).floor()
}

fn need_two(n: usize) -> Result<(), BoundsError> {
    if n < 2 {
        Err(BoundsError::TooFewVertices(n))
    } else {
        Ok(())
    }
}

fn need_k(n: usize, k: usize) -> Result<(), BoundsError> {
    if k == 0 || k > n {
        Err(BoundsError::KOutOfRange { k, n })
    } else {
        Ok(())
    }
}

/// `m + k(k+1)/2`.
pub fn brouwer_rhs(m: usize, k: usize) -> f64 {
    (m as u128 + (k as u128) * (k as u128 + 1) / 2) as f64
}

/// `2m²/(n-1) + mn`, shared by the square-root bounds.
fn degree_mass(n: f64, m: f64) -> f64 {
    2.0 * m * m / (n - 1.0) + m * n
}

/// `n + sqrt((k-1)(2m²/(n-1) + mn + n²/4))`.
pub fn theorem4_bound(n: usize, m: usize, k: usize) -> Result<f64, BoundsError> {
    need_two(n)?;
    need_k(n, k)?;
    let (nf, mf) = (n as f64, m as f64);
    Ok(nf + ((k - 1) as f64 * (degree_mass(nf, mf) + nf * nf / 4.0)).sqrt())
}

/// `g(t) = nt + sqrt((k-1)(2m²/(n-1) + mn + n²t(1-t)))` for `t` in `[0, 1]`.
pub fn g_function(n: usize, m: usize, k: usize, t: f64) -> Result<f64, BoundsError> {
    need_two(n)?;
    need_k(n, k)?;
    if !(0.0..=1.0).contains(&t) {
        return Err(BoundsError::TOutOfRange(t));
    }
    let (nf, mf) = (n as f64, m as f64);
    Ok(nf * t + ((k - 1) as f64 * (degree_mass(nf, mf) + nf * nf * t * (1.0 - t))).sqrt())
}

/// Zhou: `(2mk + sqrt(mk(n-k-1)(n²-n-2m))) / (n-1)` for `1 <= k <= n-2`.
pub fn zhou_bound(n: usize, m: usize, k: usize) -> Result<f64, BoundsError> {
    need_two(n)?;
    if k == 0 || k + 2 > n {
        return Err(BoundsError::ZhouInapplicable { k, n });
    }
    if m > pair_count(n) {
        return Err(BoundsError::TooManyEdges { n, m });
    }
    let (nf, mf, kf) = (n as f64, m as f64, k as f64);
    let spare = (n * (n - 1) - 2 * m) as f64;
    let radicand = mf * kf * (n - k - 1) as f64 * spare;
    Ok((2.0 * mf * kf + radicand.sqrt()) / (nf - 1.0))
}

/// de Caen: `M₁ <= 2m²/(n-1) + mn - 2m`.
pub fn de_caen_m1_bound(n: usize, m: usize) -> Result<f64, BoundsError> {
    need_two(n)?;
    let (nf, mf) = (n as f64, m as f64);
    Ok(degree_mass(nf, mf) - 2.0 * mf)
}

/// Every bound for one `(n, m, k)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundEvaluation {
    pub n: usize,
    pub m: usize,
    pub k: usize,
    pub brouwer_rhs: f64,
    pub theorem4: f64,
    /// `g(1) = n + sqrt((k-1)(2m²/(n-1) + mn))`.
    pub g_at_1: f64,
    /// Absent when `k > n - 2`.
    pub zhou: Option<f64>,
    pub de_caen_m1: f64,
}

impl BoundEvaluation {
    pub fn evaluate(n: usize, m: usize, k: usize) -> Result<Self, BoundsError> {
        if m > pair_count(n) {
            return Err(BoundsError::TooManyEdges { n, m });
        }
        let zhou = match zhou_bound(n, m, k) {
            Ok(z) => Some(z),
            Err(BoundsError::ZhouInapplicable { .. }) => None,
            Err(e) => return Err(e),
        };
        Ok(BoundEvaluation {
            n,
            m,
            k,
            brouwer_rhs: brouwer_rhs(m, k),
            theorem4: theorem4_bound(n, m, k)?,
            g_at_1: g_function(n, m, k, 1.0)?,
            zhou,
            de_caen_m1: de_caen_m1_bound(n, m)?,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Theorem {
    /// Cube-root interval `[cbrt(8m²/(n-1) + 4mn + n²), n]`.
    T5,
    /// Square-root interval `[sqrt(2n - 2m + 2sqrt(2m² + mn(n-1))), 1 + 8m²/(n²(n-1)) + 4m/n]`.
    T7,
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Theorem::T5 => "T5",
            Theorem::T7 => "T7",
        })
    }
}

/// Integer range of `k` covered by one of the interval theorems.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct KInterval {
    pub theorem: Theorem,
    pub n: usize,
    pub m: usize,
    pub lo: usize,
    pub hi: usize,
    /// Real endpoints before rounding.
    pub lower: f64,
    pub upper: f64,
    pub applicable: bool,
    pub reason: Option<String>,
}

impl KInterval {
    /// The `k` values covered; empty when inapplicable.
    pub fn ks(&self) -> std::ops::RangeInclusive<usize> {
        if self.applicable {
            self.lo..=self.hi
        } else {
            #[allow(clippy::reversed_empty_ranges)]
            {
                1..=0
            }
        }
    }

    pub fn contains(&self, k: usize) -> bool {
        self.applicable && self.lo <= k && k <= self.hi
    }

    fn inapplicable(mut self, reason: String) -> Self {
        self.applicable = false;
        self.reason = Some(reason);
        self
    }
}

impl fmt::Display for KInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.applicable {
            write!(f, "[{}, {}]", self.lo, self.hi)
        } else {
            f.write_str("-")
        }
    }
}

/// Real value `cbrt(8m²/(n-1) + 4mn + n²)`.
pub fn theorem5_lower(n: usize, m: usize) -> f64 {
    let (nf, mf) = (n as f64, m as f64);
    (8.0 * mf * mf / (nf - 1.0) + 4.0 * mf * nf + nf * nf).cbrt()
}

/// `[n, floor((√3-1)/4 · n(n-1))]`, the edge counts for which the cube-root
/// interval applies; `None` when empty.
pub fn theorem5_m_range(n: usize) -> Option<(usize, usize)> {
    if n < 2 {
        return None;
    }
    let top = floor_snap(cube_root_density_limit() * (n * (n - 1)) as f64) as usize;
    (n <= top).then_some((n, top))
}

pub fn theorem5_interval(n: usize, m: usize) -> Result<KInterval, BoundsError> {
    need_two(n)?;
    let lower = theorem5_lower(n, m);
    let lo = (ceil_snap(lower).max(1.0)) as usize;
    let interval = KInterval {
        theorem: Theorem::T5,
        n,
        m,
        lo,
        hi: n,
        lower,
        upper: n as f64,
        applicable: true,
        reason: None,
    };
    let limit = cube_root_density_limit() * (n * (n - 1)) as f64;
    if m < n {
        return Ok(interval.inapplicable(format!("needs m >= n (m = {m}, n = {n})")));
    }
    if m as f64 > limit {
        return Ok(interval.inapplicable(format!(
            "needs m <= (sqrt(3)-1)/4 * n(n-1) = {limit:.4} (m = {m})"
        )));
    }
    if lo > n {
        return Ok(interval.inapplicable(format!("lower endpoint {lower:.6} exceeds n = {n}")));
    }
    Ok(interval)
}

/// Real endpoints of the square-root interval. A negative inner radicand
/// puts the lower endpoint at 1.
pub fn theorem7_endpoints(n: usize, m: usize) -> (f64, f64) {
    let (nf, mf) = (n as f64, m as f64);
    let radicand = 2.0 * nf - 2.0 * mf + 2.0 * (2.0 * mf * mf + mf * nf * (nf - 1.0)).sqrt();
    let lower = if radicand < 0.0 { 1.0 } else { radicand.sqrt() };
    let upper = 1.0 + 8.0 * mf * mf / (nf * nf * (nf - 1.0)) + 4.0 * mf / nf;
    (lower, upper)
}

/// Real-valued precondition of the square-root interval: lower < upper.
pub fn theorem7_precondition(n: usize, m: usize) -> bool {
    let (lower, upper) = theorem7_endpoints(n, m);
    lower < upper
}

pub fn theorem7_interval(n: usize, m: usize) -> Result<KInterval, BoundsError> {
    need_two(n)?;
    let (lower, upper) = theorem7_endpoints(n, m);
    let lo = ceil_snap(lower).max(1.0) as usize;
    let hi = floor_snap(upper).min(n as f64).max(0.0) as usize;
    let interval = KInterval {
        theorem: Theorem::T7,
        n,
        m,
        lo,
        hi,
        lower,
        upper,
        applicable: true,
        reason: None,
    };
    if lower >= upper {
        return Ok(interval.inapplicable(format!(
            "lower endpoint {lower:.6} is not below upper endpoint {upper:.6}"
        )));
    }
    if lo > hi {
        return Ok(interval.inapplicable(format!(
            "no natural k in [{lower:.6}, {:.6}]",
            upper.min(n as f64)
        )));
    }
    Ok(interval)
}

/// Smallest `m` in `0..=n(n-1)/2` satisfying the square-root interval's
/// real-valued precondition.
pub fn theorem7_threshold_m(n: usize) -> Result<Option<usize>, BoundsError> {
    need_two(n)?;
    Ok((0..=pair_count(n)).find(|&m| theorem7_precondition(n, m)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() <= tol, "{a} vs {b}");
    }

    #[test]
    fn brouwer_rhs_examples() {
        assert_eq!(brouwer_rhs(6, 2), 9.0);
        assert_eq!(brouwer_rhs(0, 1), 1.0);
        assert_eq!(brouwer_rhs(100, 38), 841.0);
    }

    #[test]
    fn theorem4_examples() {
        assert_eq!(theorem4_bound(4, 3, 1).unwrap(), 4.0);
        close(theorem4_bound(4, 3, 2).unwrap(), 4.0 + 22f64.sqrt(), 1e-12);
        close(theorem4_bound(4, 3, 2).unwrap(), 8.6904, 1e-4);
        let expected = 100.0 + (37.0_f64 * (20000.0 / 99.0 + 10000.0 + 2500.0)).sqrt();
        close(theorem4_bound(100, 100, 38).unwrap(), expected, 1e-9);
        close(theorem4_bound(100, 100, 38).unwrap(), 785.55, 0.01);
        assert_eq!(theorem4_bound(1, 0, 1), Err(BoundsError::TooFewVertices(1)));
        assert_eq!(theorem4_bound(4, 3, 5), Err(BoundsError::KOutOfRange { k: 5, n: 4 }));
    }

    #[test]
    fn g_examples() {
        for t in [0.0, 0.3, 1.0] {
            close(g_function(7, 9, 1, t).unwrap(), 7.0 * t, 1e-12);
        }
        close(g_function(4, 3, 2, 1.0).unwrap(), 4.0 + 18f64.sqrt(), 1e-12);
        close(g_function(4, 3, 2, 1.0).unwrap(), 8.2426, 1e-4);
        close(g_function(4, 3, 2, 0.5).unwrap(), 2.0 + 22f64.sqrt(), 1e-12);
        assert_eq!(g_function(4, 3, 2, 1.5), Err(BoundsError::TOutOfRange(1.5)));
        assert_eq!(g_function(4, 3, 2, -0.1), Err(BoundsError::TOutOfRange(-0.1)));
    }

    #[test]
    fn zhou_examples() {
        close(zhou_bound(4, 3, 1).unwrap(), 4.0, 1e-12);
        for n in 3..20 {
            for k in 1..=n - 2 {
                assert_eq!(zhou_bound(n, n * (n - 1) / 2, k).unwrap(), (n * k) as f64);
            }
        }
        close(zhou_bound(5, 4, 2).unwrap(), (16.0 + 192f64.sqrt()) / 4.0, 1e-12);
        close(zhou_bound(5, 4, 2).unwrap(), 7.4641, 1e-4);
        assert_eq!(zhou_bound(4, 3, 3), Err(BoundsError::ZhouInapplicable { k: 3, n: 4 }));
        assert_eq!(zhou_bound(4, 3, 0), Err(BoundsError::ZhouInapplicable { k: 0, n: 4 }));
        assert_eq!(zhou_bound(4, 7, 1), Err(BoundsError::TooManyEdges { n: 4, m: 7 }));
    }

    #[test]
    fn de_caen_examples() {
        assert_eq!(de_caen_m1_bound(5, 4).unwrap(), 20.0);
        assert_eq!(de_caen_m1_bound(4, 6).unwrap(), 36.0);
        assert_eq!(de_caen_m1_bound(2, 1).unwrap(), 2.0);
        assert!(de_caen_m1_bound(1, 0).is_err());
    }

    #[test]
    fn evaluation_row() {
        let e = BoundEvaluation::evaluate(4, 3, 2).unwrap();
        assert_eq!(e.brouwer_rhs, 6.0);
        close(e.theorem4, 8.6904, 1e-4);
        assert!(e.zhou.is_some());
        assert!(BoundEvaluation::evaluate(4, 3, 3).unwrap().zhou.is_none());
        assert!(BoundEvaluation::evaluate(4, 9, 3).is_err());
    }

    #[test]
    fn theorem5_table_rows() {
        let rows = [(100, 38), (200, 46), (300, 52), (400, 57), (500, 62), (600, 66), (700, 70)];
        for (m, lo) in rows {
            let iv = theorem5_interval(100, m).unwrap();
            assert!(iv.applicable, "{iv:?}");
            assert_eq!((iv.lo, iv.hi), (lo, 100), "m = {m}");
        }
        assert_eq!(theorem5_m_range(100), Some((100, 1811)));
        assert!(theorem5_interval(100, 1811).unwrap().applicable);
        assert!(!theorem5_interval(100, 1812).unwrap().applicable);
        assert!(!theorem5_interval(100, 99).unwrap().applicable);
        assert!(theorem5_interval(100, 99).unwrap().ks().is_empty());
    }

    #[test]
    fn theorem7_table_rows() {
        for (m, lo, hi) in [(1500, 78, 79), (1600, 79, 85), (1700, 80, 92), (1800, 81, 99), (1900, 82, 100), (2000, 83, 100)] {
            let iv = theorem7_interval(100, m).unwrap();
            assert!(iv.applicable, "{iv:?}");
            assert_eq!((iv.lo, iv.hi), (lo, hi), "m = {m}");
        }
        // The real lower endpoint at m = 2100 is 82.9639..., so ceil gives 83.
        let iv = theorem7_interval(100, 2100).unwrap();
        assert_eq!((iv.lo, iv.hi), (83, 100));
        close(iv.lower, 82.963_933_659_935_83, 1e-9);
    }

    #[test]
    fn theorem7_threshold() {
        assert_eq!(theorem7_threshold_m(100).unwrap(), Some(1468));
        assert!(!theorem7_precondition(100, 1467));
        // Precondition holds but no integer k fits until m = 1482.
        let iv = theorem7_interval(100, 1468).unwrap();
        assert!(!iv.applicable);
        assert!(iv.reason.unwrap().contains("no natural k"));
        assert!(!theorem7_interval(100, 1481).unwrap().applicable);
        assert!(theorem7_interval(100, 1482).unwrap().applicable);
        // n = 2: m = 0 gives lower 2 > upper 1; m = 1 gives sqrt(6) < 5.
        assert_eq!(theorem7_threshold_m(2).unwrap(), Some(1));
        assert!(theorem7_threshold_m(1).is_err());
    }

    #[test]
    fn snapping() {
        assert_eq!(ceil_snap(38.0 + 1e-12), 38.0);
        assert_eq!(ceil_snap(38.0 + 1e-6), 39.0);
        assert_eq!(floor_snap(79.0 - 1e-12), 79.0);
        assert_eq!(floor_snap(79.0 - 1e-6), 78.0);
    }
}
