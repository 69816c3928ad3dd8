//! Modular arithmetic on unit groups `(Z/nZ)*`.
//!
//! [`UnitResidue`] is the parameter `r` everywhere in the crate: a unit modulo
//! `lcm(k,l,m)` (Burnside side) or `lcm(k,m)` (Honda side). Values are kept as
//! least positive representatives so equality is structural.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A unit modulo `modulus`, stored as its least positive representative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct UnitResidue {
    modulus: u64,
    value: u64,
}

impl UnitResidue {
    /// Reduces `value` modulo `modulus` and checks that it is a unit.
    pub fn new(value: i64, modulus: u64) -> Result<Self> {
        if modulus < 2 {
            return Err(Error::InvalidModulus(modulus as i64));
        }
        let reduced = value.rem_euclid(modulus as i64) as u64;
        if reduced.gcd(&modulus) != 1 {
            return Err(Error::NotCoprime { value, modulus });
        }
        Ok(Self {
            modulus,
            value: reduced,
        })
    }

    pub fn one(modulus: u64) -> Result<Self> {
        Self::new(1, modulus)
    }

    pub fn minus_one(modulus: u64) -> Result<Self> {
        Self::new(-1, modulus)
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Least positive representative, in `[1, modulus-1]`.
    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn is_one(&self) -> bool {
        self.value == 1
    }

    /// `r ∈ {1, -1}`.
    pub fn is_plus_minus_one(&self) -> bool {
        self.value == 1 || self.value == self.modulus - 1
    }

    pub fn neg(&self) -> Self {
        Self {
            modulus: self.modulus,
            value: (self.modulus - self.value) % self.modulus,
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch {
                expected: self.modulus,
                actual: other.modulus,
            });
        }
        let v = (self.value as u128 * other.value as u128 % self.modulus as u128) as u64;
        Ok(Self {
            modulus: self.modulus,
            value: v,
        })
    }

    pub fn inverse(&self) -> Self {
        // Units of a finite ring have finite order, so r^(ord-1) is the inverse;
        // a scan is fine at the moduli used here.
        let n = self.modulus;
        let v = (1..n)
            .find(|&x| (x as u128 * self.value as u128) % n as u128 == 1)
            .expect("a unit always has an inverse");
        Self {
            modulus: n,
            value: v,
        }
    }

    /// Reduces the residue to a divisor of its modulus.
    pub fn reduce_to(&self, divisor: u64) -> Result<Self> {
        if divisor < 2 || !self.modulus.is_multiple_of(divisor) {
            return Err(Error::ModulusMismatch {
                expected: self.modulus,
                actual: divisor,
            });
        }
        Self::new(self.value as i64, divisor)
    }
}

impl fmt::Display for UnitResidue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.value, self.modulus)
    }
}

pub fn lcm3(k: u64, l: u64, m: u64) -> u64 {
    k.lcm(&l).lcm(&m)
}

/// Enumerates `(Z/nZ)*` in increasing order of representative.
pub fn unit_group(n: i64) -> Result<Vec<UnitResidue>> {
    if n < 2 {
        return Err(Error::InvalidModulus(n));
    }
    let modulus = n as u64;
    Ok((1..modulus)
        .filter(|v| v.gcd(&modulus) == 1)
        .map(|value| UnitResidue { modulus, value })
        .collect())
}

/// The twist `r*`: the unique unit mod `lcm(k,m)` congruent to `r` mod `k` and
/// to `-r` mod `m`. Exists iff `gcd(k,m) <= 2`.
pub fn crt_star(k: u64, m: u64, r: &UnitResidue) -> Result<UnitResidue> {
    if k < 2 {
        return Err(Error::InvalidSignature(k));
    }
    if m < 2 {
        return Err(Error::InvalidSignature(m));
    }
    let g = k.gcd(&m);
    if g > 2 {
        return Err(Error::StarUndefined { k, m, gcd: g });
    }
    let n = k.lcm(&m);
    if r.modulus() != n {
        return Err(Error::ModulusMismatch {
            expected: n,
            actual: r.modulus(),
        });
    }
    let rv = r.value();
    let want_k = rv % k;
    let want_m = (m - rv % m) % m;
    let mut hits = (1..=n).filter(|x| x % k == want_k && x % m == want_m);
    let found = hits.next().ok_or_else(|| {
        Error::InternalInconsistency(format!("no r* for r={rv} with k={k}, m={m}"))
    })?;
    if hits.next().is_some() {
        return Err(Error::InternalInconsistency(format!(
            "r* not unique for r={rv} with k={k}, m={m}"
        )));
    }
    UnitResidue::new(found as i64, n)
}

/// Returns `r' = r + n·q > 0` with `q` the product of the primes in `primes`
/// that do not divide `r`; then `r' ≡ r (mod n)` and no listed prime divides `r'`.
///
/// Members of `primes` are trusted to be prime.
pub fn lift_coprime(r: i64, n: i64, primes: &[u64]) -> Result<u64> {
    if n.gcd(&r) != 1 {
        return Err(Error::NotCoprime {
            value: r,
            modulus: n.unsigned_abs(),
        });
    }
    let mut uniq: Vec<u64> = primes.to_vec();
    uniq.sort_unstable();
    uniq.dedup();
    let n = n.unsigned_abs() as i128;
    let construct = |r: i128| -> i128 {
        let q: i128 = uniq
            .iter()
            .filter(|&&p| r.rem_euclid(p as i128) != 0)
            .map(|&p| p as i128)
            .product();
        r + n * q
    };
    let mut lifted = construct(r as i128);
    if lifted <= 0 {
        // r + nq can be non-positive for negative r; restart from the least
        // positive representative of r mod n.
        let base = match (r as i128).rem_euclid(n) {
            0 => n,
            v => v,
        };
        lifted = construct(base);
    }
    u64::try_from(lifted).map_err(|_| Error::InternalInconsistency("lift overflow".into()))
}

/// Whether `{1,…,c} ≡ {r,2r,…,cr} (mod m)` as residue sets.
pub fn segment_perm_check(m: u64, r: &UnitResidue, c: i64) -> Result<bool> {
    if m < 3 {
        return Err(Error::InvalidModulus(m as i64));
    }
    if r.modulus() != m {
        return Err(Error::ModulusMismatch {
            expected: m,
            actual: r.modulus(),
        });
    }
    let max = m as i64 - 2;
    if c < 1 || c > max {
        return Err(Error::InvalidSegment { c, max });
    }
    let c = c as u64;
    let mut seen = vec![false; m as usize];
    for i in 1..=c {
        seen[i as usize] = true;
    }
    // Both sides have c distinct residues (r is a unit), so inclusion suffices.
    Ok((1..=c).all(|i| seen[(i * r.value() % m) as usize]))
}
