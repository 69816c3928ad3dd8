//! Elliptic conjugacy classes in `PSL₂(ℝ)`.
//!
//! The exact test [`orevkov_solvable`] decides whether `1 ∈ C_a C_b C_c` from
//! the rational sum of representatives. [`numeric_triple_solvable`] is an
//! independent floating-point check that searches for a conjugator; it never
//! feeds into the exact verdicts.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// An element of `ℚ/ℤ`, stored as its representative `p/q ∈ [0,1)` in
/// lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Angle(Ratio<i64>);

impl Angle {
    pub fn new(p: i64, q: i64) -> Result<Self> {
        if q == 0 {
            return Err(Error::InvalidAngle(format!("{p}/0")));
        }
        let (p, q) = if q < 0 { (-p, -q) } else { (p, q) };
        Ok(Angle(Ratio::new(p.mod_floor(&q), q)))
    }

    pub fn zero() -> Self {
        Angle(Ratio::from_integer(0))
    }

    pub fn numer(&self) -> i64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i64 {
        *self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.numer() == 0
    }

    pub fn ratio(&self) -> Ratio<i64> {
        self.0
    }

    pub fn to_f64(&self) -> f64 {
        self.numer() as f64 / self.denom() as f64
    }

    /// All nonzero angles with denominator at most `q_max`, in increasing order.
    pub fn all_up_to(q_max: i64) -> Vec<Angle> {
        let mut out: Vec<Angle> = (2..=q_max)
            .flat_map(|q| {
                (1..q)
                    .filter(move |p| p.gcd(&q) == 1)
                    .map(move |p| Angle(Ratio::new(p, q)))
            })
            .collect();
        out.sort();
        out
    }
}

impl fmt::Display for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer(), self.denom())
    }
}

impl FromStr for Angle {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidAngle(format!("expected p/q, got {s:?}"));
        let (p, q) = match s.trim().split_once('/') {
            Some((p, q)) => (
                p.trim().parse().map_err(|_| bad())?,
                q.trim().parse().map_err(|_| bad())?,
            ),
            None => (s.trim().parse().map_err(|_| bad())?, 1),
        };
        Angle::new(p, q)
    }
}

impl Serialize for Angle {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn nonzero(angles: &[Angle]) -> Result<()> {
    match angles.iter().find(|a| a.is_zero()) {
        Some(a) => Err(Error::InvalidAngle(format!("angle {a} is zero"))),
        None => Ok(()),
    }
}

/// Whether `1 ∈ C_a C_b C_c`, i.e. `[a]+[b]+[c] ∉ (1,2)`, in exact arithmetic.
pub fn orevkov_solvable(a: Angle, b: Angle, c: Angle) -> Result<bool> {
    nonzero(&[a, b, c])?;
    let sum = a.0 + b.0 + c.0;
    Ok(sum <= Ratio::from_integer(1) || sum >= Ratio::from_integer(2))
}

/// A real 2×2 matrix `[[a, b], [c, d]]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Matrix2 {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

impl Matrix2 {
    pub const IDENTITY: Matrix2 = Matrix2 {
        a: 1.0,
        b: 0.0,
        c: 0.0,
        d: 1.0,
    };

    pub fn new(a: f64, b: f64, c: f64, d: f64) -> Self {
        Self { a, b, c, d }
    }

    /// Rotation by `t·π`.
    pub fn rotation(t: f64) -> Self {
        let (sin, cos) = (t * std::f64::consts::PI).sin_cos();
        Self::new(cos, -sin, sin, cos)
    }

    pub fn diagonal(s: f64) -> Self {
        Self::new(s.exp(), 0.0, 0.0, (-s).exp())
    }

    pub fn mul(&self, o: &Matrix2) -> Matrix2 {
        Matrix2::new(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
        )
    }

    /// Inverse of a determinant-one matrix.
    pub fn inverse_sl2(&self) -> Matrix2 {
        Matrix2::new(self.d, -self.b, -self.c, self.a)
    }

    pub fn neg(&self) -> Matrix2 {
        Matrix2::new(-self.a, -self.b, -self.c, -self.d)
    }

    pub fn trace(&self) -> f64 {
        self.a + self.d
    }

    pub fn det(&self) -> f64 {
        self.a * self.d - self.b * self.c
    }

    pub fn is_elliptic(&self) -> bool {
        self.trace().abs() < 2.0
    }

    pub fn conjugate_by(&self, g: &Matrix2) -> Matrix2 {
        g.mul(self).mul(&g.inverse_sl2())
    }
}

/// `σ_a`, the rotation by `[a]π`.
pub fn sigma_matrix(a: Angle) -> Matrix2 {
    Matrix2::rotation(a.to_f64())
}

/// The class parameter `θ ∈ (0,1)` of an elliptic element: the lift with
/// positive lower-left entry is conjugate to `σ_θ`.
pub fn class_of(w: &Matrix2) -> Result<f64> {
    let t = w.trace();
    if !w.is_elliptic() || !t.is_finite() {
        return Err(Error::NotElliptic { trace: t });
    }
    let lift = if w.c < 0.0 { w.neg() } else { *w };
    Ok((lift.trace() / 2.0).acos() / std::f64::consts::PI)
}

/// Grid and tolerance settings for [`numeric_triple_solvable`]. Angles are in
/// units of `π`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct NumericConfig {
    pub phi_step: f64,
    pub s_max: f64,
    pub s_step: f64,
    pub tolerance: f64,
    pub boundary_margin: f64,
    /// Number of best grid points handed to local refinement.
    pub refine_candidates: usize,
}

impl Default for NumericConfig {
    fn default() -> Self {
        Self {
            phi_step: 0.005,
            s_max: 5.0,
            s_step: 0.01,
            tolerance: 1e-3,
            boundary_margin: 0.02,
            refine_candidates: 16,
        }
    }
}

/// The best conjugator `g = R(φ)·diag(e^s, e^-s)` found and its class
/// mismatch.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct NumericSearch {
    pub solvable: bool,
    pub phi: f64,
    pub s: f64,
    pub residual: f64,
}

fn residual(sa: &Matrix2, sb: &Matrix2, target: f64, phi: f64, s: f64) -> f64 {
    let g = Matrix2::rotation(phi).mul(&Matrix2::diagonal(s));
    let m = sa.mul(&sb.conjugate_by(&g));
    match class_of(&m.inverse_sl2()) {
        Ok(theta) => (theta - target).abs(),
        Err(_) => f64::INFINITY,
    }
}

/// Pattern search from `(phi, s)`, halving steps until the match is within
/// tolerance or the steps are negligible.
fn refine(
    f: &impl Fn(f64, f64) -> f64,
    mut phi: f64,
    mut s: f64,
    cfg: &NumericConfig,
) -> (f64, f64, f64) {
    let mut best = f(phi, s);
    let (mut dp, mut ds) = (cfg.phi_step, cfg.s_step);
    while best > cfg.tolerance && (dp > 1e-9 || ds > 1e-9) {
        let mut moved = false;
        for (ip, is) in [
            (1.0, 0.0),
            (-1.0, 0.0),
            (0.0, 1.0),
            (0.0, -1.0),
            (1.0, 1.0),
            (1.0, -1.0),
            (-1.0, 1.0),
            (-1.0, -1.0),
        ] {
            let (p2, s2) = (phi + ip * dp, s + is * ds);
            let v = f(p2, s2);
            if v < best {
                (phi, s, best) = (p2, s2, v);
                moved = true;
            }
        }
        if !moved {
            dp /= 2.0;
            ds /= 2.0;
        }
    }
    (phi, s, best)
}

/// Searches for `g` with `(σ_a · gσ_bg^-1)^-1 ∈ C_c`.
pub fn numeric_search(a: Angle, b: Angle, c: Angle, cfg: &NumericConfig) -> Result<NumericSearch> {
    nonzero(&[a, b, c])?;
    let sum = a.to_f64() + b.to_f64() + c.to_f64();
    if (sum - 1.0).abs() < cfg.boundary_margin || (sum - 2.0).abs() < cfg.boundary_margin {
        return Err(Error::Inconclusive(format!(
            "{a} + {b} + {c} lies within {} of the degenerate boundary",
            cfg.boundary_margin
        )));
    }
    let (sa, sb, target) = (sigma_matrix(a), sigma_matrix(b), c.to_f64());
    let f = |phi: f64, s: f64| residual(&sa, &sb, target, phi, s);
    let n_phi = (1.0 / cfg.phi_step).round() as usize;
    let n_s = (cfg.s_max / cfg.s_step).round() as usize + 1;

    let mut grid: Vec<(f64, f64, f64)> = (0..n_phi)
        .into_par_iter()
        .flat_map_iter(|i| {
            let phi = i as f64 * cfg.phi_step;
            let f = &f;
            (0..n_s).map(move |j| {
                let s = j as f64 * cfg.s_step;
                (f(phi, s), phi, s)
            })
        })
        .filter(|(r, _, _)| r.is_finite())
        .collect();
    grid.sort_by(|x, y| {
        x.0.total_cmp(&y.0)
            .then(x.1.total_cmp(&y.1))
            .then(x.2.total_cmp(&y.2))
    });

    let mut best = NumericSearch {
        solvable: false,
        phi: 0.0,
        s: 0.0,
        residual: f64::INFINITY,
    };
    for &(r, phi, s) in grid.iter().take(cfg.refine_candidates) {
        let (phi, s, r) = if r <= cfg.tolerance {
            (phi, s, r)
        } else {
            refine(&f, phi, s, cfg)
        };
        // diag(e^-s) = R(1/2) diag(e^s) R(-1/2), and R(-1/2) commutes with σ_b
        let (phi, s) = if s < 0.0 { (phi + 0.5, -s) } else { (phi, s) };
        let phi = phi.rem_euclid(1.0);
        if r < best.residual {
            best = NumericSearch {
                solvable: r <= cfg.tolerance,
                phi,
                s,
                residual: r,
            };
        }
        if best.solvable {
            break;
        }
    }
    Ok(best)
}

/// Floating-point verdict for `1 ∈ C_a C_b C_c`; errors with
/// [`Error::Inconclusive`] near the degenerate sums 1 and 2.
pub fn numeric_triple_solvable(a: Angle, b: Angle, c: Angle, cfg: &NumericConfig) -> Result<bool> {
    Ok(numeric_search(a, b, c, cfg)?.solvable)
}
