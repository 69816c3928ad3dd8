//! Closed-form decision procedures for universal quasi-Burnside and
//! quasi-Honda parameters.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::TriangleSignature;
use crate::residue::{crt_star, UnitResidue};

/// Which clause of the classification makes the parameters universal.
/// Clause order: angle-sum condition, then `r = ±1`, then `r* = ±1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Reason {
    SumAtLeastOne,
    RIsPm1,
    RstarIsPm1,
    None,
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Reason::SumAtLeastOne => "SUM_AT_LEAST_ONE",
            Reason::RIsPm1 => "R_IS_PM1",
            Reason::RstarIsPm1 => "RSTAR_IS_PM1",
            Reason::None => "NONE",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BurnsideVerdict {
    pub universal: bool,
    pub reason: Reason,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct HondaVerdict {
    pub universal: bool,
    pub reason: Reason,
}

impl BurnsideVerdict {
    fn from_reason(reason: Reason) -> Self {
        Self {
            universal: reason != Reason::None,
            reason,
        }
    }
}

impl HondaVerdict {
    fn from_reason(reason: Reason) -> Self {
        Self {
            universal: reason != Reason::None,
            reason,
        }
    }
}

fn check_modulus(r: &UnitResidue, expected: u64) -> Result<()> {
    if r.modulus() != expected {
        return Err(Error::ModulusMismatch {
            expected,
            actual: r.modulus(),
        });
    }
    Ok(())
}

/// Every group is `(k,l,m,r)`-quasi-Burnside iff `1/k+1/l+1/m >= 1` or `r = ±1`.
pub fn classify_burnside(k: u64, l: u64, m: u64, r: &UnitResidue) -> Result<BurnsideVerdict> {
    let sig = TriangleSignature::new(k, l, m)?;
    check_modulus(r, sig.lcm())?;
    let reason = if !sig.is_hyperbolic() {
        Reason::SumAtLeastOne
    } else if r.is_plus_minus_one() {
        Reason::RIsPm1
    } else {
        Reason::None
    };
    Ok(BurnsideVerdict::from_reason(reason))
}

/// Every group is `(k,m,r)`-quasi-Honda iff `2/k+1/m >= 1`, or `r = ±1`, or
/// `gcd(k,m) <= 2` and `r* = ±1`.
pub fn classify_honda(k: u64, m: u64, r: &UnitResidue) -> Result<HondaVerdict> {
    let sig = TriangleSignature::new(k, k, m)?;
    check_modulus(r, sig.lcm())?;
    let reason = if !sig.is_hyperbolic() {
        Reason::SumAtLeastOne
    } else if r.is_plus_minus_one() {
        Reason::RIsPm1
    } else if k.gcd(&m) <= 2 && crt_star(k, m, r)?.is_plus_minus_one() {
        Reason::RstarIsPm1
    } else {
        Reason::None
    };
    Ok(HondaVerdict::from_reason(reason))
}

/// The Honda verdict routed through the Burnside classification of `(k,k,m)`
/// at `r` and, when `gcd(k,m) <= 2`, at `r*`.
pub fn classify_honda_via_burnside(k: u64, m: u64, r: &UnitResidue) -> Result<HondaVerdict> {
    let direct = classify_burnside(k, k, m, r)?;
    if direct.universal {
        return Ok(HondaVerdict::from_reason(direct.reason));
    }
    if k.gcd(&m) <= 2 {
        let star = crt_star(k, m, r)?;
        if classify_burnside(k, k, m, &star)?.universal {
            return Ok(HondaVerdict::from_reason(Reason::RstarIsPm1));
        }
    }
    Ok(HondaVerdict::from_reason(Reason::None))
}
