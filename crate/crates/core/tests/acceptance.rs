//! Acceptance suite. Each test prints one `[PASS]`/`[FAIL]` line; run with
//! `--nocapture` to see them.

mod support;

use std::time::Instant;

use rand::rngs::StdRng;
use rand::{RngExt, SeedableRng};
use triangle_words::classify::{classify_burnside, classify_honda, classify_honda_via_burnside};
use triangle_words::groups::corpus::corpus_group;
use triangle_words::groups::{burnside_count_check, multiplier_set_finite};
use triangle_words::groups::{conjugate_product_check, universal_witness};
use triangle_words::lattice::{fiber_count, multiplier_set, TriangleSignature};
use triangle_words::psl2::{numeric_search, orevkov_solvable, Angle, NumericConfig};
use triangle_words::residue::{segment_perm_check, unit_group, UnitResidue};
use triangle_words::words::{BExp, FreeProduct};

fn report(n: u32, what: &str, failures: &[String], detail: String) {
    let ok = failures.is_empty();
    println!(
        "[{}] criterion {n}: {what} ({detail})",
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(
        ok,
        "criterion {n} failed on {} cases, first: {}",
        failures.len(),
        failures[0]
    );
}

fn units(n: u64) -> Vec<UnitResidue> {
    unit_group(n as i64).unwrap()
}

fn sig(k: u64, l: u64, m: u64) -> TriangleSignature {
    TriangleSignature::new(k, l, m).unwrap()
}

#[test]
fn criterion_01_burnside_verdict_matches_multiplier_set() {
    let start = Instant::now();
    let mut fails = Vec::new();
    let mut cases = 0;
    for k in 2..=10 {
        for l in 2..=10 {
            for m in 2..=10 {
                let s = sig(k, l, m);
                let mset = multiplier_set(&s);
                for r in units(s.lcm()) {
                    cases += 1;
                    let verdict = classify_burnside(k, l, m, &r).unwrap().universal;
                    if verdict != mset.contains(&r) {
                        fails.push(format!("({k},{l},{m}) r={r}"));
                    }
                }
            }
        }
    }
    report(
        1,
        "classify_burnside universal iff r in multiplier_set, k,l,m <= 10",
        &fails,
        format!("{cases} cases, {:.1?}", start.elapsed()),
    );
}

#[test]
fn criterion_02_multiplier_set_by_geometry() {
    let start = Instant::now();
    let mut fails = Vec::new();
    let (mut hyp, mut sph) = (0, 0);
    for k in 2..=12 {
        for l in 2..=12 {
            for m in 2..=12 {
                let s = sig(k, l, m);
                let got: Vec<u64> = multiplier_set(&s).iter().map(|r| r.value()).collect();
                let n = s.lcm();
                let want: Vec<u64> = if s.is_hyperbolic() {
                    hyp += 1;
                    vec![1, n - 1]
                } else if s.is_spherical() {
                    sph += 1;
                    units(n).iter().map(|r| r.value()).collect()
                } else {
                    continue;
                };
                if got != want {
                    fails.push(format!("({k},{l},{m}): {got:?}"));
                }
            }
        }
    }
    report(
        2,
        "multiplier_set is {±1} (hyperbolic) or all units (spherical), k,l,m <= 12",
        &fails,
        format!("{hyp} hyperbolic, {sph} spherical, {:.1?}", start.elapsed()),
    );
}

#[test]
fn criterion_03_honda_routes_agree() {
    let start = Instant::now();
    let mut fails = Vec::new();
    let mut cases = 0;
    for k in 2..=50u64 {
        for m in 2..=50u64 {
            for r in units(sig(k, k, m).lcm()) {
                cases += 1;
                let a = classify_honda(k, m, &r).unwrap();
                let b = classify_honda_via_burnside(k, m, &r).unwrap();
                if a.universal != b.universal {
                    fails.push(format!("(k,m)=({k},{m}) r={r}"));
                }
            }
        }
    }
    report(
        3,
        "classify_honda agrees with classify_honda_via_burnside, k,m <= 50",
        &fails,
        format!("{cases} cases, {:.1?}", start.elapsed()),
    );
}

#[test]
fn criterion_04_fiber_ceiling_formula() {
    let mut fails = Vec::new();
    let mut cases = 0;
    for k in 2..=12u64 {
        for l in 2..=12u64 {
            for m in 2..=30u64 {
                let s = sig(k, l, m);
                for a in 1..k as i64 {
                    for b in 1..l as i64 {
                        if a * l as i64 + b * k as i64 >= (k * l) as i64 {
                            continue;
                        }
                        cases += 1;
                        match fiber_count(&s, a, b) {
                            Ok(fc) if fc.enumerated as i64 == fc.formula => {}
                            other => fails.push(format!("({k},{l},{m}) a={a} b={b}: {other:?}")),
                        }
                    }
                }
            }
        }
    }
    report(
        4,
        "enumerated fiber count equals ceil(m - am/k - bm/l) - 1",
        &fails,
        format!("{cases} fibers"),
    );
}

#[test]
fn criterion_05_no_segment_is_permuted() {
    let start = Instant::now();
    let mut fails = Vec::new();
    let mut cases = 0u64;
    for m in 3..=200u64 {
        for r in units(m).into_iter().filter(|r| !r.is_one()) {
            for c in 1..=m as i64 - 2 {
                cases += 1;
                if segment_perm_check(m, &r, c).unwrap() {
                    fails.push(format!("m={m} r={r} c={c}"));
                }
            }
        }
    }
    report(
        5,
        "segment_perm_check false for m <= 200, r != 1, c <= m-2",
        &fails,
        format!("{cases} cases, {:.1?}", start.elapsed()),
    );
}

#[test]
fn criterion_06_burnside_counting_in_corpus() {
    let mut fails = Vec::new();
    let mut checks = 0;
    for name in ["S3", "D4", "Q8", "A4", "D5", "S4", "A5"] {
        let g = corpus_group(name).unwrap();
        let e = g.exponent() as i64;
        for s in (-e..=e).filter(|s| num_integer::Integer::gcd(s, &e) == 1) {
            checks += 1;
            if !burnside_count_check(&g, s).unwrap() {
                fails.push(format!("{name} s={s}"));
            }
        }
        for k in 2..=5 {
            for l in 2..=5 {
                for m in 2..=5 {
                    checks += 1;
                    let got = multiplier_set_finite(&g, k, l, m).unwrap();
                    if got != units(sig(k, l, m).lcm()) {
                        fails.push(format!("{name} M_G({k},{l},{m}) has {} units", got.len()));
                    }
                }
            }
        }
    }
    report(
        6,
        "Burnside counting identity and full M_G on S3, D4, Q8, A4, D5, S4, A5",
        &fails,
        format!("{checks} checks"),
    );
}

#[test]
fn criterion_07_word_suite() {
    let start = Instant::now();
    let g = corpus_group("S3").unwrap();
    let fp = FreeProduct::new(&g);
    let auts = support::automorphisms(&g);
    let mut rng = StdRng::seed_from_u64(7);
    let mut fails = Vec::new();
    let trials = 10_000;
    for i in 0..trials {
        let letters = support::random_letters(&g, &mut rng, 14);
        let w = fp.normalize(&letters).unwrap();
        if w.letters() != support::naive_reduce(&g, &letters).as_slice() {
            fails.push(format!("#{i} normalize vs oracle on {letters:?}"));
        }
        if fp.normalize(w.letters()).unwrap() != w {
            fails.push(format!("#{i} normalize not idempotent"));
        }
        let inv = fp.invert(&w).unwrap();
        if inv.length() != w.length() || !fp.multiply(&w, &inv).unwrap().0.is_identity() {
            fails.push(format!("#{i} invert"));
        }
        let v = support::random_word(&fp, &mut rng, 14);
        let (uv, n) = fp.multiply(&w, &v).unwrap();
        let mut cat = w.letters().to_vec();
        cat.extend_from_slice(v.letters());
        if uv.length() + 2 * n != w.length() + v.length()
            || n > w.length().min(v.length())
            || uv != fp.normalize(&cat).unwrap()
        {
            fails.push(format!("#{i} multiply length identity"));
        }
        let t = support::random_twist(&fp, &auts, &mut rng);
        let (pw, pv, puv) = (
            fp.apply_twisted(&t, &w).unwrap(),
            fp.apply_twisted(&t, &v).unwrap(),
            fp.apply_twisted(&t, &uv).unwrap(),
        );
        if pw.length() != w.length() || pv.length() != v.length() {
            fails.push(format!("#{i} apply_twisted changed a length"));
        }
        if fp.multiply(&pw, &pv).unwrap().0 != puv {
            fails.push(format!("#{i} apply_twisted not multiplicative"));
        }
        if fp.apply_twisted_by_substitution(&t, &w).unwrap() != pw {
            fails.push(format!("#{i} apply_twisted vs substitution"));
        }
        // phi has order dividing 6 in Aut(S3)
        let d = rng.random_range(1..=3u64) * 6;
        let mut prod = 0;
        let mut pi = t.p();
        for _ in 0..d {
            prod = g.mul(pi, prod);
            pi = t.phi(pi);
        }
        if fp.twisted_order_check(&t, d).unwrap() != (prod == 0) {
            fails.push(format!("#{i} twisted_order_check d={d}"));
        }
    }
    let bw = fp.b_word(BExp::Plus);
    debug_assert_eq!(bw.length(), 1);
    report(
        7,
        "normal form, length identities and twisted automorphisms over S3",
        &fails,
        format!("{trials} random instances, {:.1?}", start.elapsed()),
    );
}

#[test]
fn criterion_08_b_elimination_sound_and_complete() {
    let start = Instant::now();
    let groups = support::small_groups();
    let word_lists: Vec<_> = groups
        .iter()
        .map(|(_, g, _)| support::all_words(&FreeProduct::new(g), 3))
        .collect();
    let mut rng = StdRng::seed_from_u64(8);
    let mut fails = Vec::new();
    let (mut solvable, mut searched_hits) = (0, 0);
    let trials = 1000;
    for i in 0..trials {
        let gi = rng.random_range(0..groups.len());
        let (name, g, auts) = &groups[gi];
        let fp = FreeProduct::new(g);
        let t = support::random_twist(&fp, auts, &mut rng);
        let q = rng.random_range(1..g.order());
        let found = fp.eliminate_b(&t, q).unwrap();
        if let Some(e) = found {
            solvable += 1;
            let (v, w) = fp.construct_vw(e.case, e.x, e.y).unwrap();
            if !fp.satisfies_twisted_equation(&t, q, &v, &w).unwrap() {
                fails.push(format!("#{i} {name}: {e:?} does not re-verify"));
            }
        }
        let w = support::random_word(&fp, &mut rng, 3);
        let qw = fp.base_word(q).unwrap();
        let u = fp.product(&[&w, &qw, &fp.invert(&w).unwrap()]).unwrap();
        let hit = word_lists[gi].iter().any(|v| {
            let uv = fp.multiply(&u, v).unwrap().0;
            fp.apply_twisted(&t, v).unwrap() == uv
        });
        if hit {
            searched_hits += 1;
            if found.is_none() {
                fails.push(format!(
                    "#{i} {name}: search found v but eliminate_b reports none"
                ));
            }
        }
    }
    report(
        8,
        "eliminate_b solutions re-verify; bounded search never beats it",
        &fails,
        format!(
            "{trials} instances, {solvable} solvable, {searched_hits} search hits, {:.1?}",
            start.elapsed()
        ),
    );
}

#[test]
fn criterion_09_spherical_witnesses() {
    let start = Instant::now();
    let mut fails = Vec::new();
    let (mut witnesses, mut lemma) = (0, 0);
    for k in 2..=12 {
        for l in 2..=12 {
            for m in 2..=12 {
                let s = sig(k, l, m);
                if !s.is_spherical() {
                    continue;
                }
                for r in units(s.lcm()) {
                    witnesses += 1;
                    match universal_witness(k, l, m, &r) {
                        Ok((v, w)) if w.verify(&v) => {}
                        other => fails.push(format!("({k},{l},{m}) r={r}: {:?}", other.err())),
                    }
                    if k == l {
                        lemma += 1;
                        if !conjugate_product_check(k, m, &r).unwrap() {
                            fails.push(format!("conjugate product ({k},{k},{m}) r={r}"));
                        }
                    }
                }
            }
        }
    }
    report(
        9,
        "witnesses for every spherical triple and unit, c_(r-1)...c_0 identity",
        &fails,
        format!(
            "{witnesses} witnesses, {lemma} product checks, {:.1?}",
            start.elapsed()
        ),
    );
}

#[test]
fn criterion_10_numeric_orevkov_agreement() {
    let start = Instant::now();
    let cfg = NumericConfig::default();
    let angles = Angle::all_up_to(8);
    let mut fails = Vec::new();
    let (mut cases, mut solvable) = (0, 0);
    let mut worst_hit = 0.0f64;
    let mut closest_miss = f64::INFINITY;
    for &a in &angles {
        for &b in &angles {
            for &c in &angles {
                let sum = a.to_f64() + b.to_f64() + c.to_f64();
                if (sum - 1.0).abs() < cfg.boundary_margin
                    || (sum - 2.0).abs() < cfg.boundary_margin
                {
                    continue;
                }
                cases += 1;
                let exact = orevkov_solvable(a, b, c).unwrap();
                let numeric = numeric_search(a, b, c, &cfg).unwrap();
                if exact {
                    solvable += 1;
                    worst_hit = worst_hit.max(numeric.residual);
                } else {
                    closest_miss = closest_miss.min(numeric.residual);
                }
                if numeric.solvable != exact {
                    fails.push(format!(
                        "({a},{b},{c}): exact {exact}, numeric residual {:.2e}",
                        numeric.residual
                    ));
                }
            }
        }
    }
    report(10, "numeric conjugator search agrees with the exact criterion, denominators <= 8", &fails,
        format!("{cases} ordered triples, {solvable} solvable, worst hit {worst_hit:.1e}, closest miss {closest_miss:.1e}, {:.1?}",
            start.elapsed()));
}
