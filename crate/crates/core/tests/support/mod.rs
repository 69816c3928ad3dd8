//! Oracles and generators shared by the integration tests.
#![allow(dead_code)]

use rand::rngs::StdRng;
use rand::seq::IndexedRandom;
use rand::RngExt;
use triangle_words::groups::corpus::corpus_group;
use triangle_words::groups::{FiniteGroup, Permutation};
use triangle_words::words::{BExp, FreeProduct, Letter, ReducedWord, TwistedAutomorphism};

/// Reduces a letter sequence by plain rewriting: drop identity base letters,
/// merge adjacent base letters, cancel adjacent `b b^-1`, until nothing
/// changes; then pad with identities into the alternating shape.
pub fn naive_reduce(g: &FiniteGroup, letters: &[Letter]) -> Vec<Letter> {
    let mut w: Vec<Letter> = letters.to_vec();
    loop {
        let mut out: Vec<Letter> = Vec::with_capacity(w.len());
        let mut changed = false;
        for &l in &w {
            match (out.last().copied(), l) {
                (_, Letter::Base(0)) => changed = true,
                (Some(Letter::Base(x)), Letter::Base(y)) => {
                    out.pop();
                    out.push(Letter::Base(g.mul(x, y)));
                    changed = true;
                }
                (Some(Letter::B(e)), Letter::B(f)) if e == f.inverse() => {
                    out.pop();
                    changed = true;
                }
                _ => out.push(l),
            }
        }
        w = out;
        if !changed {
            break;
        }
    }
    let mut padded = Vec::with_capacity(2 * w.len() + 1);
    for l in w {
        let want_base = padded.len() % 2 == 0;
        match (want_base, l) {
            (true, Letter::B(_)) => padded.extend([Letter::Base(0), l]),
            (false, Letter::Base(_)) => unreachable!("adjacent base letters were merged"),
            _ => padded.push(l),
        }
    }
    if padded.len() % 2 == 0 {
        padded.push(Letter::Base(0));
    }
    padded
}

pub fn random_letters(g: &FiniteGroup, rng: &mut StdRng, max_len: usize) -> Vec<Letter> {
    let len = rng.random_range(0..=max_len);
    (0..len)
        .map(|_| match rng.random_range(0..5) {
            0 => Letter::B(BExp::Plus),
            1 => Letter::B(BExp::Minus),
            2 => Letter::Base(0),
            _ => Letter::Base(rng.random_range(0..g.order())),
        })
        .collect()
}

pub fn random_word(
    fp: &FreeProduct<'_, FiniteGroup>,
    rng: &mut StdRng,
    max_len: usize,
) -> ReducedWord {
    let letters = random_letters(fp.base(), rng, max_len);
    fp.normalize(&letters).unwrap()
}

/// Every automorphism of `g` as an id map, found by sending a generating
/// pair to every pair and keeping the well-defined bijections.
pub fn automorphisms(g: &FiniteGroup) -> Vec<Vec<usize>> {
    let n = g.order();
    let gens = (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .find(|&(x, y)| g.generated_subgroup(&[x, y]).len() == n)
        .expect("every test group is 2-generated");
    let mut out = Vec::new();
    for h1 in 0..n {
        for h2 in 0..n {
            if let Some(map) = extend_hom(g, [gens.0, gens.1], [h1, h2]) {
                let mut seen = vec![false; n];
                if map.iter().all(|&y| !std::mem::replace(&mut seen[y], true)) {
                    out.push(map);
                }
            }
        }
    }
    out
}

fn extend_hom(g: &FiniteGroup, gens: [usize; 2], imgs: [usize; 2]) -> Option<Vec<usize>> {
    let n = g.order();
    let mut map = vec![usize::MAX; n];
    map[0] = 0;
    let mut queue = vec![0usize];
    while let Some(x) = queue.pop() {
        for i in 0..2 {
            let (y, fy) = (g.mul(x, gens[i]), g.mul(map[x], imgs[i]));
            if map[y] == usize::MAX {
                map[y] = fy;
                queue.push(y);
            } else if map[y] != fy {
                return None;
            }
        }
    }
    Some(map)
}

pub fn cyclic(n: usize) -> FiniteGroup {
    let rows: Vec<Vec<usize>> = (0..n)
        .map(|x| (0..n).map(|y| (x + y) % n).collect())
        .collect();
    FiniteGroup::from_table(&rows, 10_000).unwrap()
}

/// A selection of groups of order at most 12, each with its automorphisms.
pub fn small_groups() -> Vec<(String, FiniteGroup, Vec<Vec<usize>>)> {
    let mut gs: Vec<(String, FiniteGroup)> =
        (2..=12).map(|n| (format!("Z{n}"), cyclic(n))).collect();
    let v4 = FiniteGroup::from_permutations(
        &[
            Permutation::from_cycles("(1 2)", 4).unwrap(),
            Permutation::from_cycles("(3 4)", 4).unwrap(),
        ],
        10_000,
    )
    .unwrap();
    gs.push(("V4".into(), v4));
    let d6 = FiniteGroup::from_permutations(
        &[
            Permutation::from_cycles("(1 2 3 4 5 6)", 6).unwrap(),
            Permutation::from_cycles("(1 6)(2 5)(3 4)", 6).unwrap(),
        ],
        10_000,
    )
    .unwrap();
    gs.push(("D6".into(), d6));
    for name in ["S3", "D4", "Q8", "D5", "A4"] {
        gs.push((name.into(), corpus_group(name).unwrap()));
    }
    gs.into_iter()
        .map(|(name, g)| {
            let auts = automorphisms(&g);
            (name, g, auts)
        })
        .collect()
}

pub fn random_twist(
    fp: &FreeProduct<'_, FiniteGroup>,
    auts: &[Vec<usize>],
    rng: &mut StdRng,
) -> TwistedAutomorphism {
    let phi = auts.choose(rng).unwrap().clone();
    let p = rng.random_range(0..fp.base().order());
    fp.twisted(phi, p).unwrap()
}

/// All reduced words of length at most `max_s`.
pub fn all_words(fp: &FreeProduct<'_, FiniteGroup>, max_s: usize) -> Vec<ReducedWord> {
    let n = fp.base().order();
    let mut level: Vec<Vec<Letter>> = (0..n).map(|x| vec![Letter::Base(x)]).collect();
    let mut out = Vec::new();
    for s in 0..=max_s {
        out.extend(
            level
                .iter()
                .map(|l| fp.reduced_from_letters(l.clone()).unwrap()),
        );
        if s == max_s {
            break;
        }
        let mut next = Vec::new();
        for w in &level {
            for e in [BExp::Plus, BExp::Minus] {
                for x in 0..n {
                    let mut l = w.clone();
                    l.extend([Letter::B(e), Letter::Base(x)]);
                    if fp.is_reduced(&l) {
                        next.push(l);
                    }
                }
            }
        }
        level = next;
    }
    out
}
