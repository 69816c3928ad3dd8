//! Permutation realizations of the finite von Dyck groups
//! `⟨a, c | a^k = (a^-1 c)^l = c^m = 1⟩` and witness searches inside them.

use super::{ElementId, FiniteGroup, Permutation, DEFAULT_ORDER_CAP};
use crate::error::{Error, Result};
use crate::lattice::TriangleSignature;
use crate::residue::UnitResidue;

#[derive(Debug, Clone)]
pub struct VonDyckRealization {
    pub signature: TriangleSignature,
    pub group: FiniteGroup,
    pub a: ElementId,
    pub c: ElementId,
}

impl VonDyckRealization {
    pub fn a_inv_c(&self) -> ElementId {
        self.group.mul(self.group.inv(self.a), self.c)
    }

    /// Checks the three relations, generation, and `|G| = 2/(1/k+1/l+1/m-1)`.
    pub fn verify(&self) -> Result<()> {
        let g = &self.group;
        let s = self.signature;
        let relations = [(self.a, s.k()), (self.a_inv_c(), s.l()), (self.c, s.m())];
        for (x, e) in relations {
            if g.pow(x, e as i64) != g.identity() {
                return Err(Error::InternalInconsistency(format!(
                    "relation x^{e} = 1 fails for {} in the realization of {s}",
                    g.label(x)
                )));
            }
        }
        let expected = spherical_order(&s)?;
        if g.order() as u64 != expected {
            return Err(Error::InternalInconsistency(format!(
                "realization of {s} has order {}, expected {expected}",
                g.order()
            )));
        }
        if g.generated_subgroup(&[self.a, self.c]).len() != g.order() {
            return Err(Error::InternalInconsistency(format!(
                "a, c do not generate the realization of {s}"
            )));
        }
        Ok(())
    }
}

/// `2 / (1/k + 1/l + 1/m - 1) = 2klm / (kl + lm + mk - klm)`.
pub fn spherical_order(sig: &TriangleSignature) -> Result<u64> {
    if !sig.is_spherical() {
        return Err(not_finite(sig));
    }
    let (k, l, m) = (sig.k(), sig.l(), sig.m());
    let den = k * l + l * m + m * k - k * l * m;
    Ok(2 * k * l * m / den)
}

fn not_finite(sig: &TriangleSignature) -> Error {
    Error::NotFinite {
        k: sig.k(),
        l: sig.l(),
        m: sig.m(),
    }
}

/// Generators of the family group together with preferred images of `a` and
/// `c` for the listed ordering of the triple. Cycles are 1-based.
struct FamilyEntry {
    triple: (u64, u64, u64),
    degree: usize,
    a: String,
    c: String,
}

fn family_entry(sorted: (u64, u64, u64)) -> Option<FamilyEntry> {
    let entry = |degree, a: &str, c: &str| FamilyEntry {
        triple: sorted,
        degree,
        a: a.into(),
        c: c.into(),
    };
    match sorted {
        (2, 2, 2) => Some(entry(4, "(1 2)(3 4)", "(1 3)(2 4)")),
        (2, 2, n) => {
            // Dihedral group of order 2n: a reflection and a rotation of an n-gon.
            let n = n as usize;
            let rotation: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
            let reflection: String = (2..=n)
                .filter(|&i| i < n + 2 - i)
                .map(|i| format!("({} {})", i, n + 2 - i))
                .collect();
            Some(FamilyEntry {
                triple: sorted,
                degree: n,
                a: reflection,
                c: format!("({})", rotation.join(" ")),
            })
        }
        (2, 3, 3) => Some(entry(4, "(1 2)(3 4)", "(1 2 3)")),
        (2, 3, 4) => Some(entry(4, "(1 2)", "(1 2 3 4)")),
        (2, 3, 5) => Some(entry(5, "(1 2)(3 4)", "(1 2 3 4 5)")),
        _ => None,
    }
}

/// A permutation realization of the spherical von Dyck group `B_{k,l,m}`.
///
/// The group comes from a fixed table per family (dihedral, A4, S4, A5). When
/// the requested ordering of `(k,l,m)` differs from the table's, `(a, c)` is
/// the lexicographically first generating pair satisfying the relations.
pub fn vondyck(k: u64, l: u64, m: u64) -> Result<VonDyckRealization> {
    let sig = TriangleSignature::new(k, l, m)?;
    if !sig.is_spherical() {
        return Err(not_finite(&sig));
    }
    let mut sorted = [k, l, m];
    sorted.sort_unstable();
    let entry = family_entry((sorted[0], sorted[1], sorted[2])).ok_or_else(|| {
        Error::InternalInconsistency(format!("no table entry for spherical triple {sig}"))
    })?;
    let a_perm = Permutation::from_cycles(&entry.a, entry.degree)?;
    let c_perm = Permutation::from_cycles(&entry.c, entry.degree)?;
    let group =
        FiniteGroup::from_permutations(&[a_perm.clone(), c_perm.clone()], DEFAULT_ORDER_CAP)?;
    let (a, c) = if (k, l, m) == entry.triple {
        let a = group
            .find_permutation(&a_perm)
            .expect("generator is in the group");
        let c = group
            .find_permutation(&c_perm)
            .expect("generator is in the group");
        (a, c)
    } else {
        search_generators(&group, &sig)?
    };
    let realization = VonDyckRealization {
        signature: sig,
        group,
        a,
        c,
    };
    realization.verify()?;
    Ok(realization)
}

fn search_generators(g: &FiniteGroup, sig: &TriangleSignature) -> Result<(ElementId, ElementId)> {
    let divides = |x: ElementId, n: u64| n.is_multiple_of(g.element_order(x));
    for a in g.elements().filter(|&a| divides(a, sig.k())) {
        for c in g.elements().filter(|&c| divides(c, sig.m())) {
            let y = g.mul(g.inv(a), c);
            if divides(y, sig.l()) && g.generated_subgroup(&[a, c]).len() == g.order() {
                return Ok((a, c));
            }
        }
    }
    Err(Error::InternalInconsistency(format!(
        "no generating pair for {sig}"
    )))
}

/// Elements `g, h` with `a^r · g (a^-1 c)^r g^-1 = h c^r h^-1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniversalWitness {
    pub r: u64,
    pub g: ElementId,
    pub h: ElementId,
    /// `a^r · g (a^-1 c)^r g^-1`
    pub lhs: ElementId,
    /// `h c^r h^-1`
    pub rhs: ElementId,
}

impl UniversalWitness {
    pub fn verify(&self, v: &VonDyckRealization) -> bool {
        let g = &v.group;
        let e = self.r as i64;
        let lhs = g.mul(g.pow(v.a, e), g.conj(self.g, g.pow(v.a_inv_c(), e)));
        let rhs = g.conj(self.h, g.pow(v.c, e));
        lhs == rhs && lhs == self.lhs && rhs == self.rhs
    }
}

/// Lexicographically first `(g, h)` solving the witness identity in the
/// realization of `B_{k,l,m}`, using the least positive representative of `r`.
pub fn universal_witness(
    k: u64,
    l: u64,
    m: u64,
    r: &UnitResidue,
) -> Result<(VonDyckRealization, UniversalWitness)> {
    let v = vondyck(k, l, m)?;
    let n = v.signature.lcm();
    if r.modulus() != n {
        return Err(Error::ModulusMismatch {
            expected: n,
            actual: r.modulus(),
        });
    }
    let g = &v.group;
    let e = r.value() as i64;
    let ar = g.pow(v.a, e);
    let yr = g.pow(v.a_inv_c(), e);
    let cr = g.pow(v.c, e);
    // first_h[t] = least h with h c^r h^-1 = t
    let mut first_h = vec![None; g.order()];
    for h in g.elements().rev() {
        first_h[g.conj(h, cr)] = Some(h);
    }
    for cand in g.elements() {
        let lhs = g.mul(ar, g.conj(cand, yr));
        if let Some(h) = first_h[lhs] {
            let w = UniversalWitness {
                r: r.value(),
                g: cand,
                h,
                lhs,
                rhs: g.conj(h, cr),
            };
            if !w.verify(&v) {
                return Err(Error::InternalInconsistency(
                    "witness failed re-verification".into(),
                ));
            }
            return Ok((v, w));
        }
    }
    Err(Error::InternalInconsistency(format!(
        "no witness (g, h) in the finite von Dyck group {} for r = {}",
        v.signature, r
    )))
}

/// In the realization of `B_{k,k,m}` with `c_i = a^i c a^-i`, checks
/// `c_{r-1} ⋯ c_1 c_0 = a^r (a^-1 c)^r` at the least positive representative of `r`.
pub fn conjugate_product_check(k: u64, m: u64, r: &UnitResidue) -> Result<bool> {
    let v = vondyck(k, k, m)?;
    let n = v.signature.lcm();
    if r.modulus() != n {
        return Err(Error::ModulusMismatch {
            expected: n,
            actual: r.modulus(),
        });
    }
    let g = &v.group;
    let e = r.value() as i64;
    let c_i = |i: i64| g.conj(g.pow(v.a, i), v.c);
    let lhs = g.product((0..e).rev().map(c_i));
    let rhs = g.mul(g.pow(v.a, e), g.pow(v.a_inv_c(), e));
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(v: i64, n: u64) -> UnitResidue {
        UnitResidue::new(v, n).unwrap()
    }

    #[test]
    fn vondyck_examples() {
        let v = vondyck(2, 3, 3).unwrap();
        assert_eq!(v.group.order(), 12);
        assert_eq!(v.group.label(v.a), "(1 2)(3 4)");
        assert_eq!(v.group.label(v.c), "(1 2 3)");
        assert_eq!(vondyck(2, 2, 5).unwrap().group.order(), 10);
        assert!(matches!(
            vondyck(2, 3, 7),
            Err(Error::NotFinite { k: 2, l: 3, m: 7 })
        ));
        assert!(matches!(vondyck(2, 3, 6), Err(Error::NotFinite { .. })));
    }

    #[test]
    fn all_spherical_orderings_realize() {
        for k in 2..=12 {
            for l in 2..=12 {
                for m in 2..=12 {
                    let sig = TriangleSignature::new(k, l, m).unwrap();
                    if sig.is_spherical() {
                        let v = vondyck(k, l, m).unwrap();
                        assert_eq!(v.group.order() as u64, spherical_order(&sig).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn witness_examples() {
        let (_, w) = universal_witness(2, 2, 3, &u(1, 6)).unwrap();
        assert_eq!((w.g, w.h), (0, 0));
        let (v, w) = universal_witness(2, 2, 5, &u(3, 10)).unwrap();
        assert!(w.verify(&v));
        let (v, w) = universal_witness(2, 3, 5, &u(7, 30)).unwrap();
        assert!(w.verify(&v));
        assert!(matches!(
            universal_witness(2, 3, 7, &u(5, 42)),
            Err(Error::NotFinite { .. })
        ));
    }

    #[test]
    fn conjugate_product_examples() {
        assert!(conjugate_product_check(2, 3, &u(1, 6)).unwrap());
        assert!(conjugate_product_check(2, 5, &u(3, 10)).unwrap());
        assert!(conjugate_product_check(3, 2, &u(5, 6)).unwrap());
        assert!(matches!(
            conjugate_product_check(3, 4, &u(5, 12)),
            Err(Error::NotFinite { .. })
        ));
    }
}
