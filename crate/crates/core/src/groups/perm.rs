use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A permutation of `{0, …, n-1}` stored as its image list.
///
/// Products compose right to left: `(p * q)(i) = p(q(i))`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Self((0..degree).collect())
    }

    /// Accepts an image list of `{1..n}` (one-line notation) or of `{0..n-1}`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let one_based = !images.contains(&0);
        let mut seen = vec![false; n];
        let mut out = Vec::with_capacity(n);
        for &img in images {
            let i = if one_based {
                img.checked_sub(1)
            } else {
                Some(img)
            };
            match i {
                Some(i) if i < n && !seen[i] => {
                    seen[i] = true;
                    out.push(i);
                }
                _ => {
                    return Err(Error::Parse(format!("{images:?} is not a permutation")));
                }
            }
        }
        Ok(Self(out))
    }

    /// Parses 1-based cycle notation such as `(1 2)(3 4 5)`; `()` is the identity.
    pub fn from_cycles(text: &str, degree: usize) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut touched = vec![false; degree];
        let bad = || Error::Parse(format!("bad cycle notation {text:?}"));
        let mut rest = text.trim();
        while !rest.is_empty() {
            let open = rest.strip_prefix('(').ok_or_else(bad)?;
            let close = open.find(')').ok_or_else(bad)?;
            let points = open[..close]
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| match t.parse::<usize>() {
                    Ok(p) if p >= 1 && p <= degree => Ok(p - 1),
                    _ => Err(bad()),
                })
                .collect::<Result<Vec<_>>>()?;
            for (idx, &p) in points.iter().enumerate() {
                if touched[p] {
                    return Err(bad());
                }
                touched[p] = true;
                images[p] = points[(idx + 1) % points.len()];
            }
            rest = open[close + 1..].trim_start();
        }
        Ok(Self(images))
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn compose(&self, other: &Self) -> Self {
        debug_assert_eq!(self.degree(), other.degree());
        Self(other.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.0.len()];
        for (i, &img) in self.0.iter().enumerate() {
            inv[img] = i;
        }
        Self(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// Pads with fixed points up to `degree`.
    pub fn extended(&self, degree: usize) -> Self {
        let mut v = self.0.clone();
        v.extend(self.0.len()..degree);
        Self(v)
    }
}

impl fmt::Display for Permutation {
    /// 1-based disjoint cycle notation; the identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.0.len()];
        let mut wrote = false;
        for start in 0..self.0.len() {
            if seen[start] || self.0[start] == start {
                continue;
            }
            let mut cycle = vec![start + 1];
            seen[start] = true;
            let mut i = self.0[start];
            while i != start {
                seen[i] = true;
                cycle.push(i + 1);
                i = self.0[i];
            }
            let body: Vec<String> = cycle.iter().map(|p| p.to_string()).collect();
            write!(f, "({})", body.join(" "))?;
            wrote = true;
        }
        if !wrote {
            f.write_str("()")?;
        }
        Ok(())
    }
}
