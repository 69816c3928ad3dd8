//! Explicit solutions for `r = -1`.

use super::{ElementId, FiniteGroup};
use crate::error::{Error, Result};

/// With `z = [x, u]`: `w = xu` satisfies `[x^-1, w] = z^-1`, and with
/// `y = x^-1 z` the triple `(x^-1, x y^-1 x^-1, z^-1)` satisfies `x'y' = z'`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RMinusOneWitness {
    pub z: ElementId,
    pub w: ElementId,
    pub y: ElementId,
    pub x_prime: ElementId,
    pub y_prime: ElementId,
    pub z_prime: ElementId,
}

pub fn witness_r_minus_one(
    g: &FiniteGroup,
    x: ElementId,
    u: ElementId,
) -> Result<RMinusOneWitness> {
    g.check_element(x)?;
    g.check_element(u)?;
    let z = g.commutator(x, u);
    let w = g.mul(x, u);
    if g.commutator(g.inv(x), w) != g.inv(z) {
        return Err(Error::InternalInconsistency("[x^-1, xu] != z^-1".into()));
    }
    let y = g.mul(g.inv(x), z);
    let x_prime = g.inv(x);
    let y_prime = g.product([x, g.inv(y), g.inv(x)]);
    let z_prime = g.inv(z);
    if g.mul(x_prime, y_prime) != z_prime || g.mul(x, y) != z {
        return Err(Error::InternalInconsistency("x'y' != z'".into()));
    }
    Ok(RMinusOneWitness {
        z,
        w,
        y,
        x_prime,
        y_prime,
        z_prime,
    })
}
