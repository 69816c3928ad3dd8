//! Exact arithmetic on the finite lattice `H = (1/k Z/Z) ⊕ (1/l Z/Z) ⊕ (1/m Z/Z)`.
//!
//! A point `(a/k, b/l, c/m)` is stored as the integer triple `(a, b, c)`.
//! Membership in the open simplex `S`, its negative `-S`, and the zero-sum set
//! `T` is decided after clearing denominators by `klm`; nothing here uses
//! floating point.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::residue::{lcm3, unit_group, UnitResidue};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TriangleSignature {
    k: u64,
    l: u64,
    m: u64,
}

impl TriangleSignature {
    pub fn new(k: u64, l: u64, m: u64) -> Result<Self> {
        for x in [k, l, m] {
            if x < 2 {
                return Err(Error::InvalidSignature(x));
            }
        }
        Ok(Self { k, l, m })
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn l(&self) -> u64 {
        self.l
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn lcm(&self) -> u64 {
        lcm3(self.k, self.l, self.m)
    }

    /// Compares `1/k + 1/l + 1/m` with `1`.
    pub fn angle_sum_vs_one(&self) -> Ordering {
        let (k, l, m) = (self.k as u128, self.l as u128, self.m as u128);
        (l * m + k * m + k * l).cmp(&(k * l * m))
    }

    /// `1/k + 1/l + 1/m > 1`: the von Dyck group is finite.
    pub fn is_spherical(&self) -> bool {
        self.angle_sum_vs_one() == Ordering::Greater
    }

    pub fn is_euclidean(&self) -> bool {
        self.angle_sum_vs_one() == Ordering::Equal
    }

    pub fn is_hyperbolic(&self) -> bool {
        self.angle_sum_vs_one() == Ordering::Less
    }

    pub fn point(&self, a: i64, b: i64, c: i64) -> LatticePoint {
        LatticePoint {
            signature: *self,
            a: a.rem_euclid(self.k as i64) as u64,
            b: b.rem_euclid(self.l as i64) as u64,
            c: c.rem_euclid(self.m as i64) as u64,
        }
    }

    /// All points of `H`, lexicographic in `(a, b, c)`.
    pub fn points(&self) -> impl Iterator<Item = LatticePoint> + '_ {
        let sig = *self;
        (0..sig.k).flat_map(move |a| {
            (0..sig.l).flat_map(move |b| {
                (0..sig.m).map(move |c| LatticePoint {
                    signature: sig,
                    a,
                    b,
                    c,
                })
            })
        })
    }
}

impl fmt::Display for TriangleSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.k, self.l, self.m)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LatticePoint {
    pub signature: TriangleSignature,
    pub a: u64,
    pub b: u64,
    pub c: u64,
}

impl LatticePoint {
    /// Scalar action `r · (a/k, b/l, c/m) = (ra/k, rb/l, rc/m)`.
    pub fn scale(&self, r: &UnitResidue) -> LatticePoint {
        let sig = self.signature;
        let rv = r.value();
        LatticePoint {
            signature: sig,
            a: rv * self.a % sig.k,
            b: rv * self.b % sig.l,
            c: rv * self.c % sig.m,
        }
    }

    fn all_nonzero(&self) -> bool {
        self.a != 0 && self.b != 0 && self.c != 0
    }

    /// `a·lm + b·km + c·kl`, i.e. the coordinate sum scaled by `klm`.
    fn scaled_sum(&self) -> u128 {
        let s = self.signature;
        let (k, l, m) = (s.k as u128, s.l as u128, s.m as u128);
        self.a as u128 * l * m + self.b as u128 * k * m + self.c as u128 * k * l
    }

    pub fn region(&self) -> RegionTag {
        region_of(self)
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.signature;
        write!(
            f,
            "({}/{}, {}/{}, {}/{})",
            self.a, s.k, self.b, s.l, self.c, s.m
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum RegionTag {
    S,
    NegS,
    T,
    None,
}

impl RegionTag {
    pub fn in_s_or_neg_s(self) -> bool {
        matches!(self, RegionTag::S | RegionTag::NegS)
    }

    pub fn is_tagged(self) -> bool {
        self != RegionTag::None
    }
}

/// Classifies a point against `S`, `-S` and `T`. Points with a zero
/// coordinate are `None`; so are points whose coordinate sum (using
/// representatives in `(0,1)`) lies strictly between 1 and 2.
pub fn region_of(p: &LatticePoint) -> RegionTag {
    if !p.all_nonzero() {
        return RegionTag::None;
    }
    let s = p.signature;
    let klm = s.k as u128 * s.l as u128 * s.m as u128;
    let sum = p.scaled_sum();
    if sum < klm {
        RegionTag::S
    } else if sum > 2 * klm {
        RegionTag::NegS
    } else if sum.is_multiple_of(klm) {
        RegionTag::T
    } else {
        RegionTag::None
    }
}

/// `H ∩ (S ∪ -S ∪ T)` in lexicographic order.
pub fn bset_points(sig: &TriangleSignature) -> Vec<LatticePoint> {
    sig.points().filter(|p| region_of(p).is_tagged()).collect()
}

/// Units `r` with `r · (H ∩ (S ∪ -S)) = H ∩ (S ∪ -S)`, by full enumeration.
pub fn multiplier_set(sig: &TriangleSignature) -> Vec<UnitResidue> {
    let simplex: Vec<LatticePoint> = sig
        .points()
        .filter(|p| region_of(p).in_s_or_neg_s())
        .collect();
    unit_group(sig.lcm() as i64)
        .expect("lcm of integers >= 2 is >= 2")
        .into_iter()
        // Scaling by a unit is injective on H, so inclusion gives equality.
        .filter(|r| {
            simplex
                .iter()
                .all(|p| region_of(&p.scale(r)).in_s_or_neg_s())
        })
        .collect()
}

fn honda_signature(k: u64, m: u64) -> Result<TriangleSignature> {
    TriangleSignature::new(k, k, m)
}

/// `{ r : (-ra, ra, rc) ∈ H∩(S∪-S∪T) for all (a,b,c) ∈ H∩(S∪-S∪T) }` for the
/// signature `(k,k,m)`, by direct enumeration.
pub fn n_set_direct(k: u64, m: u64) -> Result<Vec<UnitResidue>> {
    let sig = honda_signature(k, m)?;
    let tagged = bset_points(&sig);
    Ok(unit_group(sig.lcm() as i64)?
        .into_iter()
        .filter(|r| {
            tagged.iter().all(|p| {
                let ra = r.value() as i64 * p.a as i64;
                let rc = r.value() as i64 * p.c as i64;
                region_of(&sig.point(-ra, ra, rc)).is_tagged()
            })
        })
        .collect())
}

/// The same set via the emptiness criterion: everything if
/// `H∩(S∪-S∪T) = ∅`, nothing otherwise.
pub fn n_set_by_emptiness(k: u64, m: u64) -> Result<Vec<UnitResidue>> {
    let sig = honda_signature(k, m)?;
    if sig.points().any(|p| region_of(&p).is_tagged()) {
        Ok(Vec::new())
    } else {
        unit_group(sig.lcm() as i64)
    }
}

/// Computes both routes and fails if they disagree.
pub fn n_set(k: u64, m: u64) -> Result<Vec<UnitResidue>> {
    let direct = n_set_direct(k, m)?;
    let shortcut = n_set_by_emptiness(k, m)?;
    if direct != shortcut {
        return Err(Error::InternalInconsistency(format!(
            "N set for (k,m)=({k},{m}): enumeration gives {} units, emptiness criterion gives {}",
            direct.len(),
            shortcut.len()
        )));
    }
    Ok(direct)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FiberCount {
    pub enumerated: u64,
    pub formula: i64,
}

/// Closed form `⌈m - am/k - bm/l⌉ - 1`, as an exact ceiling division.
pub fn fiber_formula(sig: &TriangleSignature, a: i64, b: i64) -> i64 {
    let (k, l, m) = (sig.k as i128, sig.l as i128, sig.m as i128);
    let num = m * k * l - a as i128 * m * l - b as i128 * m * k;
    let den = k * l;
    (num.div_euclid(den) + i128::from(num.rem_euclid(den) != 0) - 1) as i64
}

/// Number of `z ∈ (1/m)Z/Z` with `(a/k, b/l, z) ∈ S`, together with the
/// closed-form value. Errors if the two disagree.
pub fn fiber_count(sig: &TriangleSignature, a: i64, b: i64) -> Result<FiberCount> {
    let (k, l) = (sig.k as i64, sig.l as i64);
    let valid = 0 < a
        && a < k
        && 0 < b
        && b < l
        && (a as i128 * l as i128 + b as i128 * k as i128) < (k as i128 * l as i128);
    if !valid {
        return Err(Error::InvalidFiber { a, b });
    }
    let enumerated = (0..sig.m as i64)
        .filter(|&c| region_of(&sig.point(a, b, c)) == RegionTag::S)
        .count() as u64;
    let formula = fiber_formula(sig, a, b);
    if formula != enumerated as i64 {
        return Err(Error::InternalInconsistency(format!(
            "fiber over ({a},{b}) in {sig}: enumerated {enumerated}, formula {formula}"
        )));
    }
    Ok(FiberCount {
        enumerated,
        formula,
    })
}
