//! Class-product counting, the multiplier set `M_G`, and the counting identity
//! `#{(x,y) ∈ C×D : xy = z} = #{(x',y') ∈ C^s×D^s : x'y' = z'}`.

use num_integer::Integer;

use super::{ConjClass, ElementId, FiniteGroup};
use crate::error::{Error, Result};
use crate::residue::{lcm3, unit_group, UnitResidue};

/// Class indices `(C, D, E)`.
pub type ClassTriple = (usize, usize, usize);

/// `#{(x,y) ∈ C×D : xy = z}` by double loop.
pub fn count_products(g: &FiniteGroup, c: &ConjClass, d: &ConjClass, z: ElementId) -> Result<u64> {
    g.check_class(c)?;
    g.check_class(d)?;
    g.check_element(z)?;
    let mut n = 0;
    for &x in c.members() {
        for &y in d.members() {
            if g.mul(x, y) == z {
                n += 1;
            }
        }
    }
    Ok(n)
}

/// For every element `z`, the number of `(x,y) ∈ C×D` with `xy = z`.
pub fn product_counts(g: &FiniteGroup, c: usize, d: usize) -> Vec<u64> {
    let mut counts = vec![0u64; g.order()];
    let cm = g.class(c);
    let dm = g.class(d);
    for &x in cm.members() {
        for &y in dm.members() {
            counts[g.mul(x, y)] += 1;
        }
    }
    counts
}

/// Checks the counting identity for every `C, D, E`, `z ∈ E`, `z' ∈ E^s`.
pub fn burnside_count_check(g: &FiniteGroup, s: i64) -> Result<bool> {
    let exponent = g.exponent();
    if (s.unsigned_abs()).gcd(&exponent) != 1 {
        return Err(Error::InvalidS { s, exponent });
    }
    let nc = g.num_classes();
    let classes = g.classes();
    let power: Vec<usize> = (0..nc).map(|i| g.class_power_index(i, s)).collect();
    for c in 0..nc {
        for d in 0..nc {
            let lhs = product_counts(g, c, d);
            let rhs = product_counts(g, power[c], power[d]);
            for (e, class) in classes.iter().enumerate() {
                let target = &classes[power[e]];
                for &z in class.members() {
                    for &zp in target.members() {
                        if lhs[z] != rhs[zp] {
                            return Ok(false);
                        }
                    }
                }
            }
        }
    }
    Ok(true)
}

fn torsion_classes(g: &FiniteGroup, n: u64) -> Vec<usize> {
    // Classes inside G[n] \ {1}; class 0 is the identity.
    (1..g.num_classes())
        .filter(|&i| n.is_multiple_of(g.element_order(g.class(i).representative())))
        .collect()
}

/// `B_G = {(C,D,E) : 1 ∈ CDE, C ⊆ G[k]⁰, D ⊆ G[l]⁰, E ⊆ G[m]⁰}`.
pub fn b_set(g: &FiniteGroup, k: u64, l: u64, m: u64) -> Vec<ClassTriple> {
    let ck = torsion_classes(g, k);
    let cl = torsion_classes(g, l);
    let cm = torsion_classes(g, m);
    let mut out = Vec::new();
    for &c in &ck {
        for &d in &cl {
            // 1 ∈ CDE iff some product cd has its inverse in E.
            let counts = product_counts(g, c, d);
            let mut hit = vec![false; g.num_classes()];
            for (z, &n) in counts.iter().enumerate() {
                if n > 0 {
                    hit[g.class_index_of(g.inv(z))] = true;
                }
            }
            for &e in &cm {
                if hit[e] {
                    out.push((c, d, e));
                }
            }
        }
    }
    out
}

/// `M_G = {r : (C^r, D^r, E^r) ∈ B_G for all (C,D,E) ∈ B_G}`.
pub fn multiplier_set_finite(g: &FiniteGroup, k: u64, l: u64, m: u64) -> Result<Vec<UnitResidue>> {
    for x in [k, l, m] {
        if x < 2 {
            return Err(Error::InvalidSignature(x));
        }
    }
    let triples = b_set(g, k, l, m);
    let mut sorted = triples.clone();
    sorted.sort_unstable();
    let n = lcm3(k, l, m);
    Ok(unit_group(n as i64)?
        .into_iter()
        .filter(|r| {
            let e = r.value() as i64;
            triples.iter().all(|&(c, d, f)| {
                let image = (
                    g.class_power_index(c, e),
                    g.class_power_index(d, e),
                    g.class_power_index(f, e),
                );
                sorted.binary_search(&image).is_ok()
            })
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::corpus::corpus_group;

    #[test]
    fn count_examples() {
        let s3 = corpus_group("S3").unwrap();
        let transpositions = s3.classes().into_iter().find(|c| c.len() == 3).unwrap();
        let three_cycle = s3.elements().find(|&x| s3.element_order(x) == 3).unwrap();
        assert_eq!(
            count_products(&s3, &transpositions, &transpositions, three_cycle).unwrap(),
            3
        );
        assert_eq!(
            count_products(&s3, &transpositions, &transpositions, 0).unwrap(),
            3
        );
        let id = s3.class(0);
        assert_eq!(count_products(&s3, &id, &id, 0).unwrap(), 1);
    }

    #[test]
    fn mixed_groups_rejected() {
        let s3 = corpus_group("S3").unwrap();
        let a4 = corpus_group("A4").unwrap();
        let c = a4.class(1);
        assert_eq!(count_products(&s3, &c, &c, 0), Err(Error::MixedGroups));
    }

    #[test]
    fn multiplier_examples() {
        let s3 = corpus_group("S3").unwrap();
        let vals: Vec<u64> = multiplier_set_finite(&s3, 2, 2, 3)
            .unwrap()
            .iter()
            .map(|r| r.value())
            .collect();
        assert_eq!(vals, vec![1, 5]);
        assert_eq!(b_set(&s3, 2, 2, 3).len(), 1);
        // Q8 has no element of order 5: B_G is empty and every unit qualifies.
        let q8 = corpus_group("Q8").unwrap();
        assert!(b_set(&q8, 5, 2, 2).is_empty());
        assert_eq!(multiplier_set_finite(&q8, 5, 2, 2).unwrap().len(), 4);
        let a4 = corpus_group("A4").unwrap();
        assert!(!b_set(&a4, 2, 3, 3).is_empty());
        let vals: Vec<u64> = multiplier_set_finite(&a4, 2, 3, 3)
            .unwrap()
            .iter()
            .map(|r| r.value())
            .collect();
        assert_eq!(vals, vec![1, 5]);
    }

    #[test]
    fn burnside_examples() {
        let s3 = corpus_group("S3").unwrap();
        assert!(burnside_count_check(&s3, 5).unwrap());
        assert!(burnside_count_check(&s3, 1).unwrap());
        assert!(matches!(
            burnside_count_check(&s3, 3),
            Err(Error::InvalidS { .. })
        ));
        let s4 = corpus_group("S4").unwrap();
        assert!(burnside_count_check(&s4, 5).unwrap());
    }
}
