//! Acceptance suite: one line per criterion, non-zero exit on any failure.

use std::collections::HashSet;
use std::process::ExitCode;
use std::time::Instant;

use apery_core::compositions::{admissible, all_compositions, classes};
use apery_core::delta::families::t_family;
use apery_core::delta::{delta_class, delta_explicit, delta_submatrix, p7_blocks, DeltaValue};
use apery_core::exact_linalg::{
    alpha_matrix, delta_k_matrix, ker_alpha_ranks, m_k_ranks, m_k_via_intersection, th7_block_matrix, ExactMatrix,
    KER_ALPHA_RANKS, M_K_RANKS,
};
use apery_core::lincomb::{mu, mu_invert, parse_rational};
use apery_core::numerics::identities::t1_checks;
use apery_core::numerics::{
    bbb_coefficient, sigma_oracle, sigma_tail, verify, zeta_double_tail_oracle, ZetaTailEvaluator,
};
use apery_core::stuffle::{boxast, phi, phi_single};
use apery_core::{Composition, DualityClass, LinComb};
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn comp(s: &str) -> Composition {
    s.parse().expect("literal composition")
}

fn class(s: &str) -> DualityClass {
    s.parse().expect("literal class")
}

fn lc(terms: &[(i64, &str)]) -> DeltaValue {
    terms.iter().map(|&(c, a)| (comp(a), BigInt::from(c))).collect()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn delta_tables() -> Outcome {
    let expected: [(&str, DeltaValue); 10] = [
        ("2", lc(&[(3, "2")])),
        ("3", lc(&[(2, "3"), (3, "2,1")])),
        ("4", lc(&[(2, "4"), (2, "3,1"), (3, "2,1,1")])),
        ("3,1", lc(&[(4, "3,1"), (3, "2,2"), (6, "2,1,1")])),
        ("2,2", lc(&[(1, "4"), (6, "2,2")])),
        ("5", lc(&[(2, "5"), (2, "4,1"), (2, "3,1,1"), (3, "2,1,1,1")])),
        ("4,1", lc(&[(2, "4,1"), (2, "3,2"), (6, "3,1,1"), (3, "2,2,1"), (3, "2,1,2"), (9, "2,1,1,1")])),
        ("3,2", lc(&[(1, "4,1"), (2, "3,2"), (3, "2,3"), (6, "2,2,1"), (3, "2,1,2")])),
        ("2,3", lc(&[(1, "5"), (2, "3,2"), (3, "2,3"), (3, "2,1,2")])),
        // the listed weight-7 term (3,3,1) is read as (2,3,1)
        ("3,3", lc(&[(3, "2,1,2,1"), (3, "2,3,1"), (3, "2,1,3"), (3, "2,4"), (2, "3,2,1"), (2, "3,3"), (1, "5,1")])),
    ];
    for (c, want) in &expected {
        let got = delta_class(&class(c));
        ensure(*got == *want, || format!("delta([{c}]) = {got}, expected {want}"))?;
    }
    let all: Vec<DualityClass> = (0..=12).flat_map(classes).collect();
    let bad: Vec<String> = all
        .par_iter()
        .filter(|c| *delta_class(c) != delta_explicit(c))
        .map(|c| c.to_string())
        .collect();
    ensure(bad.is_empty(), || format!("methods disagree on {bad:?}"))?;
    Ok(format!("10 listed values, both methods agree on {} classes", all.len()))
}

/// The weight-6 generator as a column vector over `B_6`.
fn weight6_generator() -> Vec<BigInt> {
    let terms = [
        (2, "6"),
        (-2, "5,1"),
        (4, "4,2"),
        (1, "4,1,1"),
        (1, "3,3"),
        (-2, "3,2,1"),
        (-1, "3,1,2"),
        (-2, "2,4"),
        (1, "2,2,2"),
        (-2, "2,1,3"),
    ];
    let cols = classes(6);
    let mut v = vec![BigInt::from(0); cols.len()];
    for (c, s) in terms {
        let i = cols.iter().position(|x| *x == class(s)).expect("class of weight 6");
        v[i] += c;
    }
    v
}

fn rank_tables() -> Outcome {
    let alpha: Vec<usize> = ker_alpha_ranks(12).into_iter().map(|(_, r)| r).collect();
    ensure(alpha == KER_ALPHA_RANKS[..12], || format!("Ker(alpha_k) ranks {alpha:?}"))?;
    let m: Vec<usize> = m_k_ranks(12).into_iter().map(|(_, r)| r).collect();
    ensure(m == M_K_RANKS[..=12], || format!("rk(M_k) {m:?}"))?;
    let ker6 = alpha_matrix(6).kernel_basis();
    ensure(ker6.rank() == 1, || format!("Ker(alpha_6) has rank {}", ker6.rank()))?;
    let g = weight6_generator();
    ensure(ker6.contains(&g), || "weight-6 generator is not in Ker(alpha_6)".into())?;
    ensure(ker6.coordinates(&g).is_some_and(|c| c[0].magnitude() == &1u32.into()), || {
        "weight-6 generator is not primitive in the lattice".into()
    })?;
    Ok(format!("alpha {alpha:?}, M_k {m:?}"))
}

fn intersection() -> Outcome {
    let reports = m_k_via_intersection(10);
    for r in &reports {
        ensure(r.same_lattice, || format!("lattices differ at k = {}", r.k))?;
        ensure(r.intersection.rank() == M_K_RANKS[r.k as usize], || format!("rank at k = {}", r.k))?;
    }
    let ranks: Vec<usize> = reports.iter().map(|r| r.intersection.rank()).collect();
    Ok(format!("k = 0..10 ranks {ranks:?}"))
}

fn run_identities(list: &[(&str, &[u32])], digits: u32, tolerance: f64) -> Result<(usize, f64), String> {
    let reports: Vec<_> = list
        .par_iter()
        .map(|(name, params)| verify(name, params, digits).map_err(|e| format!("{name}: {e}")))
        .collect::<Result<Vec<_>, String>>()?;
    let mut worst = 0.0f64;
    let mut count = 0;
    for r in &reports {
        for c in &r.checks {
            ensure(c.passed && c.residual < tolerance, || {
                format!("{} / {}: residual {:.3e}", r.name, c.label, c.residual)
            })?;
            worst = worst.max(c.residual);
            count += 1;
        }
    }
    Ok((count, worst))
}

fn numeric_suite() -> Outcome {
    let list: &[(&str, &[u32])] = &[
        ("euler", &[]),
        ("zeta3", &[0]),
        ("zeta3", &[3]),
        ("weight4", &[]),
        ("sigma-twos", &[5]),
        ("eu87", &[]),
        ("eu88", &[]),
        ("zucker", &[]),
        ("ct2", &[8]),
        ("bbb", &[4, 6, 8]),
        ("leshchiner", &[4, 6, 8]),
        ("all-twos", &[4, 0, 2]),
    ];
    let (count, worst) = run_identities(list, 40, 1e-35)?;
    Ok(format!("{count} checks at 40 digits, max residual {worst:.2e}"))
}

fn t1_spot() -> Outcome {
    let low: Vec<DualityClass> = (0..=6).flat_map(classes).collect();
    // B_7 has fewer than twenty classes, so all of them are checked
    let mut checks = t1_checks(&low, &[0, 1, 3], 30);
    checks.extend(t1_checks(&classes(7), &[0, 1, 3], 30));
    let tol = 1e-25;
    let worst = checks.iter().map(|c| c.residual).fold(0.0, f64::max);
    let bad: Vec<&str> = checks.iter().filter(|c| !(c.passed && c.residual < tol)).map(|c| c.label.as_str()).collect();
    ensure(bad.is_empty(), || format!("failed: {bad:?}"))?;
    Ok(format!("{} checks, max residual {worst:.2e}", checks.len()))
}

fn closed_forms() -> Outcome {
    let list: &[(&str, &[u32])] =
        &[("th7", &[]), ("th8", &[]), ("zagier", &[]), ("eu127", &[]), ("eu128", &[]), ("eu129", &[])];
    let (count, worst) = run_identities(list, 40, 1e-35)?;
    Ok(format!("{count} checks, max residual {worst:.2e}"))
}

fn th18() -> Outcome {
    for k in (0..=10).step_by(2) {
        ensure(t_family(k).map_err(|e| e.to_string())?.holds(), || format!("polynomial identity fails at k = {k}"))?;
    }
    let (count, _) = run_identities(&[("th18", &[10])], 40, 1e-35)?;
    Ok(format!("k = 0..10, {count} exact checks including t = 1, 4, -1, -2, -1/2"))
}

fn bbb_constants() -> Outcome {
    let want = [
        (4, "17/16"),
        (6, "163/128"),
        (8, "1373/1024"),
        (10, "11143/8192"),
        (12, "61835987/45285376"),
    ];
    for (k, v) in want {
        let got = bbb_coefficient(k).map_err(|e| e.to_string())?;
        ensure(got == parse_rational(v).expect("literal"), || format!("c_{k} = {got}, expected {v}"))?;
    }
    Ok("c_4, c_6, c_8, c_10, c_12 exact".into())
}

fn delta_matrices() -> Outcome {
    let printed: [(u32, &[&[i64]]); 5] = [
        (0, &[&[1]]),
        (2, &[&[3]]),
        (4, &[&[3, 6], &[0, 1]]),
        (6, &[&[3, 6, 12, 0], &[0, 1, 2, 0], &[0, 0, 3, 0], &[0, 0, 0, 1]]),
        (
            8,
            &[
                &[3, 6, 12, 0, 6, 24, 0, 0],
                &[0, 1, 2, 0, 0, 4, 0, 0],
                &[0, 0, 3, 0, 0, 6, 0, 0],
                &[0, 0, 0, 1, 0, 0, 0, 0],
                &[0, 0, 0, 0, 3, 6, 0, 0],
                &[0, 0, 0, 0, 0, 1, 0, 4],
                &[0, 0, 0, 0, 0, 0, 3, 0],
                &[0, 0, 0, 0, 0, 0, 0, 1],
            ],
        ),
    ];
    for (k, rows) in printed {
        let want = ExactMatrix::from_i64(rows).expect("rectangular");
        let got = delta_submatrix(k).map_err(|e| e.to_string())?;
        ensure(got == want, || format!("Delta_{k} differs:\n{}", got.render_text()))?;
    }
    let mut dets = Vec::new();
    for k in (0..=12).step_by(2) {
        let r = p7_blocks(k).map_err(|e| e.to_string())?;
        ensure(r.holds(), || format!("block structure fails at k = {k}: {r:?}"))?;
        dets.push(r.determinant.to_string());
    }
    Ok(format!("5 matrices match, block structure holds for k <= 12, det {dets:?}"))
}

fn multiplicativity() -> Result<usize, String> {
    let comps: Vec<Composition> = (1..=6).flat_map(all_compositions).collect();
    let pq: Vec<(u64, u64)> = (1..=6u64).flat_map(|q| (0..q).map(move |p| (p, q))).collect();
    let pairs: Vec<(&Composition, &Composition)> =
        comps.iter().enumerate().flat_map(|(i, a)| comps[i..].iter().map(move |b| (a, b))).collect();
    let failures: usize = pairs
        .par_iter()
        .map(|(a, b)| {
            let prod = boxast(a, b).map_coeffs(|x| BigRational::from_integer(x.clone()));
            pq.iter()
                .filter(|&&(p, q)| {
                    let lhs = phi(p, q, &prod).expect("p < q");
                    lhs != phi_single(p, q, a).expect("p < q") * phi_single(p, q, b).expect("p < q")
                })
                .count()
        })
        .sum();
    ensure(failures == 0, || format!("{failures} multiplicativity failures"))?;
    Ok(pairs.len() * pq.len())
}

fn property_suites() -> Outcome {
    let mult = multiplicativity()?;

    // odd-entry bound over every admissible composition
    for k in 0..=10 {
        for a in admissible(k) {
            let bound = a.weight() as i64 - 2 * a.height() as i64;
            let d = delta_class(&DualityClass::of(&a).expect("admissible"));
            for b in d.support() {
                let odd = b.entries().iter().filter(|&&e| e % 2 == 1).count() as i64;
                ensure(odd <= bound, || format!("({b}) in delta([{a}]) has {odd} odd entries, bound {bound}"))?;
            }
        }
    }

    // distinct columns, coefficient sums and Ker(alpha) inside M_k
    for k in 0..=12 {
        let cls = classes(k);
        let mut seen = HashSet::new();
        for c in &cls {
            ensure(seen.insert(format!("{}", delta_class(c))), || format!("two classes share delta at k = {k}"))?;
        }
        if k <= 10 {
            let dk = delta_k_matrix(k);
            let basis = dk.kernel_basis();
            for v in basis.vectors() {
                let s: BigInt = v.iter().sum();
                ensure(s == BigInt::from(0), || format!("M_{k} basis vector with coefficient sum {s}"))?;
            }
            if k >= 1 {
                for v in alpha_matrix(k).kernel_basis().vectors() {
                    ensure(dk.mul_vec(v).iter().all(|x| *x == BigInt::from(0)), || format!("Ker(alpha_{k}) not in M_{k}"))?;
                }
            }
        }
    }

    // duality, word round trip and mu inversion
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for k in 0..=12 {
        for a in admissible(k) {
            let d = a.dual().map_err(|e| e.to_string())?;
            ensure(d.dual().ok() == Some(a.clone()), || format!("dual not an involution at ({a})"))?;
            ensure(d.weight() == k, || format!("dual changes weight at ({a})"))?;
            ensure(Composition::from_word(&a.to_word()).ok() == Some(a.clone()), || format!("word round trip at ({a})"))?;
        }
        if k >= 2 {
            let pool = admissible(k);
            for _ in 0..20 {
                let l: LinComb<Composition, BigInt> = (0..4)
                    .map(|_| (pool.choose(&mut rng).expect("non-empty").clone(), BigInt::from(rng.gen_range(-9..=9))))
                    .collect();
                let back = mu_invert(&mu(&l).map_err(|e| e.to_string())?, k).map_err(|e| e.to_string())?;
                ensure(back == l, || format!("mu inversion fails at weight {k}"))?;
            }
        }
    }
    Ok(format!("{mult} multiplicativity checks; bound, distinctness, sums and inversion hold"))
}

fn determinant_lemma() -> Outcome {
    let mut dets = Vec::new();
    for k in (3..=13).step_by(2) {
        let d = th7_block_matrix(k).and_then(|m| m.determinant()).map_err(|e| e.to_string())?;
        ensure(d != BigInt::from(0), || format!("zero determinant at k = {k}"))?;
        dets.push(k);
    }
    Ok(format!("nonzero determinant for k = {dets:?}"))
}

fn random_composition(rng: &mut ChaCha8Rng, depth: usize, max_entry: u32, admissible: bool) -> Composition {
    let mut e: Vec<u32> = (0..depth).map(|_| rng.gen_range(1..=max_entry)).collect();
    if admissible && e[0] < 2 {
        e[0] = 2;
    }
    Composition::new(&e).expect("small entries")
}

fn oracles() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..30 {
        let depth = rng.gen_range(1..=3);
        let a = random_composition(&mut rng, depth, 4, false);
        let n = rng.gen_range(0..=6u64);
        let x = sigma_tail(&a, n, 30).map_err(|e| e.to_string())?;
        let entries: Vec<i64> = a.entries().iter().map(|&e| i64::from(e)).collect();
        let y = sigma_oracle(&entries, n, 15).map_err(|e| format!("({a}): {e}"))?;
        ensure(x.truncate(y.prec()).overlaps(&y) && y.error_below(15), || format!("sigma({a})_{n}: {x} vs {y}"))?;
    }

    let ev = ZetaTailEvaluator::new(20, 6).map_err(|e| e.to_string())?;
    for _ in 0..20 {
        let depth = rng.gen_range(1..=3);
        let a = random_composition(&mut rng, depth, 3, true);
        let n = rng.gen_range(2..=6u64);
        let x = ev.tail(&DualityClass::of(&a).expect("admissible"), n);
        let y = zeta_double_tail_oracle(&a, n, n, 10).map_err(|e| format!("({a}): {e}"))?;
        ensure(x.truncate(y.prec()).overlaps(&y) && y.error_below(10), || format!("zeta({a})_{{{n},{n}}}: {x} vs {y}"))?;
    }

    let mut cases = vec![(comp("3,1"), 2u64, 5u64)];
    while cases.len() < 10 {
        let depth = rng.gen_range(1..=3);
        let a = random_composition(&mut rng, depth, 3, true);
        let b = a.dual().expect("admissible");
        let (m, n) = (rng.gen_range(2..=5u64), rng.gen_range(2..=5u64));
        if u64::from(a.entries()[0]) + m >= 4 && u64::from(b.entries()[0]) + n >= 4 {
            cases.push((a, m, n));
        }
    }
    for (a, m, n) in &cases {
        let x = zeta_double_tail_oracle(a, *m, *n, 10).map_err(|e| e.to_string())?;
        let y = zeta_double_tail_oracle(&a.dual().expect("admissible"), *n, *m, 10).map_err(|e| e.to_string())?;
        ensure(x.overlaps(&y), || format!("duality fails for ({a}) at m={m}, n={n}"))?;
    }
    Ok(format!("30 sigma pairs, 20 zeta pairs, {} duality pairs", cases.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("delta tables and the two methods", delta_tables),
        ("rank tables of Ker(alpha_k) and M_k", rank_tables),
        ("M_k by intersection equals Ker(delta_k)", intersection),
        ("numeric identity suite", numeric_suite),
        ("zeta tails against sigma(delta)", t1_spot),
        ("closed forms and weight-5 matrices", closed_forms),
        ("polynomial t family", th18),
        ("coefficients of zeta(k) at t = -1/2", bbb_constants),
        ("Delta_k matrices and block structure", delta_matrices),
        ("property suites", property_suites),
        ("determinant of the block matrix", determinant_lemma),
        ("oracle equivalence", oracles),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = f();
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("PASS criterion {:>2}: {name} ({secs:.1}s) {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {:>2}: {name} ({secs:.1}s) {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
