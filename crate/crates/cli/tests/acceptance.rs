//! Acceptance suite: one PASS/FAIL line per criterion, each with its time
//! limit. Exits nonzero if any criterion fails.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use mahonian::bijections::{
    enumerate_good_pairs, enumerate_marked_pairs, enumerate_signed_tuples, factor_few_inversions,
    fixed_point_split, phi, phi_fixed_points, psi, psi_case, theta, theta_inverse, GoodPair,
};
use mahonian::compositions::{divisor_sum, enumerate_compositions, partition_counts};
use mahonian::numbers::{
    catalan_number, cycle_type_formula, knuth_netto, knuth_netto_terms, m_series, mahonian_table,
    r_series, subdiagonal_series, x_catalan, RMethod, SubdiagonalMethod,
};
use mahonian::perm::{all_permutations, enumerate_catalan_set, enumerate_with_inversions};
use mahonian::IntegerSeries;
use num_bigint::BigInt;

type Outcome = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lib<T>(r: mahonian::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn cli(args: &[&str]) -> Result<String, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_mahonian"))
        .args(args)
        .env_remove("MAHONIAN_ORDER")
        .env_remove("MAHONIAN_BOUND")
        .output()
        .map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!("{args:?}: {}", String::from_utf8_lossy(&out.stderr)));
    }
    String::from_utf8(out.stdout).map_err(|e| e.to_string())
}

fn ints(line: &str, sep: char) -> Vec<u64> {
    line.split(sep).map(|v| v.trim().parse().unwrap()).collect()
}

fn same_series(a: &IntegerSeries, b: &IntegerSeries, to: usize, what: &str) -> Outcome {
    match (0..=to).find(|&n| a.coeff(n) != b.coeff(n)) {
        Some(n) => Err(format!("{what}: coefficient {n}: {} vs {}", a.coeff(n), b.coeff(n))),
        None => Ok(()),
    }
}

/// The triangle as printed, rows 0..=9 and columns 0..=9.
const TRIANGLE: [[u64; 10]; 10] = [
    [1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [1, 1, 0, 0, 0, 0, 0, 0, 0, 0],
    [1, 2, 2, 1, 0, 0, 0, 0, 0, 0],
    [1, 3, 5, 6, 5, 3, 1, 0, 0, 0],
    [1, 4, 9, 15, 20, 22, 20, 15, 9, 4],
    [1, 5, 14, 29, 49, 71, 90, 101, 101, 90],
    [1, 6, 20, 49, 98, 169, 259, 359, 455, 531],
    [1, 7, 27, 76, 174, 343, 602, 961, 1415, 1940],
    [1, 8, 35, 111, 285, 628, 1230, 2191, 3606, 5545],
];

fn ac1_triangle() -> Outcome {
    let out = cli(&["table", "9"])?;
    let rows: Vec<Vec<u64>> = out.lines().map(|l| ints(l, ' ')).collect();
    ensure(rows.len() == 10, || format!("{} rows", rows.len()))?;
    for (n, want) in TRIANGLE.iter().enumerate() {
        for (k, &w) in want.iter().enumerate() {
            let got = rows[n].get(k).copied().unwrap_or(0);
            ensure(got == w, || format!("I_{n}({k}) = {got}, expected {w}"))?;
        }
    }
    Ok(())
}

fn ac2_subdiagonal_displays() -> Outcome {
    let displays: [(&str, [u64; 9]); 3] = [
        ("S_0", [1, 0, 0, 1, 5, 22, 90, 359, 1415]),
        ("S_1", [0, 1, 1, 2, 6, 20, 71, 259, 961]),
        ("S_2", [0, 0, 1, 2, 5, 15, 49, 169, 602]),
    ];
    for (name, want) in displays {
        let got = ints(cli(&["series", name, "--order", "8"])?.trim(), ',');
        ensure(got == want, || format!("{name}: {got:?}"))?;
    }
    Ok(())
}

fn ac3_knuth_netto() -> Outcome {
    let table = mahonian_table(60);
    for n in 0..=60 {
        for k in 0..=n {
            let v = lib(knuth_netto(n, k))?;
            ensure(v == table.get(n, k), || format!("I_{n}({k}): {v} vs {}", table.get(n, k)))?;
        }
    }
    let terms: Vec<String> = lib(knuth_netto_terms(6, 6))?.iter().map(ToString::to_string).collect();
    let want = ["+ binom(11, 6)", "- binom(9, 4)", "- binom(10, 5)", "+ binom(6, 1)"];
    ensure(terms == want, || format!("terms of I_6(6): {terms:?}"))?;
    ensure(lib(knuth_netto(6, 6))? == BigInt::from(90), || "I_6(6) != 90".into())
}

fn ac4_series_theorems() -> Outcome {
    let order = 40;
    let xc = x_catalan(order);
    let s = |i| subdiagonal_series(i, order, SubdiagonalMethod::DiagonalOfDp);
    for i in 0..=5 {
        same_series(&s(i + 1), &(&xc * &s(i)), order, &format!("S_{} = xC S_{i}", i + 1))?;
    }
    let r = lib(r_series(order, RMethod::Product))?;
    let x_minus_x2 = &IntegerSeries::x(order) - &IntegerSeries::monomial(1, 2, order);
    same_series(&r, &lib(s(0).compose(&x_minus_x2))?, order, "S_0(x - x^2) = R")?;
    same_series(&s(0), &lib(r.compose(&xc))?, order, "R(xC) = S_0")
}

fn ac5_r_constructions() -> Outcome {
    let order = 200;
    let product = lib(r_series(order, RMethod::Product))?;
    for m in [RMethod::InverseOfOneMinusM, RMethod::DivisorRecursion] {
        same_series(&product, &lib(r_series(order, m))?, order, m.name())?;
    }
    let want = [1, 0, 0, 1, 2, 5, 9, 19, 37, 74];
    let got: Vec<BigInt> = product.coefficients()[..10].to_vec();
    ensure(got == want.map(BigInt::from), || format!("R starts {got:?}"))
}

fn ac6_involutions() -> Outcome {
    let r = lib(r_series(10, RMethod::Product))?;
    for n in 0..=10 {
        let rn = r.coeff(n).clone();

        let tuples = lib(enumerate_signed_tuples(n))?;
        for t in &tuples {
            let image = phi(t);
            let fixed = t.partitions().is_empty() && t.tail().lir() % 2 == 0;
            ensure(phi(&image) == *t, || format!("phi is not an involution at {t}"))?;
            ensure(image.weight() == n, || format!("phi({t}) changes weight"))?;
            ensure(fixed == (image == *t), || format!("fixed points of phi wrong at {t}"))?;
            ensure(fixed || image.sign() == -t.sign(), || format!("phi({t}) keeps sign"))?;
        }
        let phi_sum: i64 = tuples.iter().map(|t| t.sign()).sum();

        let pairs = lib(enumerate_marked_pairs(n))?;
        let mut images = BTreeSet::new();
        for p in &pairs {
            let image = psi(p);
            ensure(psi(&image) == *p, || format!("psi is not an involution at {p}"))?;
            ensure(image.weight() == n, || format!("psi({p}) changes weight"))?;
            let fixed = psi_case(p).is_none();
            ensure(fixed == (image == *p), || format!("psi fixed-point test wrong at {p}"))?;
            if !fixed {
                ensure(image.sign() == -p.sign(), || format!("psi({p}) keeps sign"))?;
                continue;
            }
            let g = lib(theta(p))?;
            ensure(g.sign() == p.sign(), || format!("theta({p}) = {g} changes sign"))?;
            ensure(lib(theta_inverse(&g))? == *p, || format!("theta^-1(theta({p})) differs"))?;
            let sigma = lib(fixed_point_split(p))?.sigma as i64;
            ensure(g.mu().dmax() == sigma, || format!("dmax(mu) != |sigma| at {p}"))?;
            ensure(images.insert(g.clone()), || format!("theta collides at {g}"))?;
        }
        let good = lib(enumerate_good_pairs(n))?;
        let all: BTreeSet<GoodPair> = good.iter().cloned().collect();
        ensure(images == all, || format!("theta is not onto the good pairs of {n}"))?;

        let t_sum: i64 = pairs.iter().map(|p| p.sign()).sum();
        let g_sum: i64 = good.iter().map(GoodPair::sign).sum();
        let fix = lib(phi_fixed_points(n))?.len() as i64;
        let even = lib(enumerate_compositions(n))?
            .iter()
            .filter(|c| c.lir() % 2 == 0)
            .count() as i64;
        for (what, v) in [
            ("T_n", t_sum),
            ("good pairs", g_sum),
            ("Fix_n(phi)", fix),
            ("lir even", even),
            ("R_n", phi_sum),
        ] {
            ensure(BigInt::from(v) == rn, || format!("n={n}: {what} gives {v}, [x^n]R = {rn}"))?;
        }
    }
    Ok(())
}

fn ac7_factorization() -> Outcome {
    for i in 0..=2 {
        for n in i + 1..=8 {
            let mut image = BTreeSet::new();
            for p in lib(enumerate_with_inversions(n, n - i - 1))? {
                let f = lib(factor_few_inversions(&p, i))?;
                ensure(f.recombine() == p, || format!("{p} does not recombine"))?;
                ensure(image.insert((f.sigma, f.tau)), || format!("collision at {p}"))?;
            }
            let mut target = BTreeSet::new();
            // τ carries |τ| - 1 inversions, so it is never empty.
            for k in i..n {
                for s in lib(enumerate_with_inversions(k, k - i))? {
                    for t in lib(enumerate_catalan_set(n - k))? {
                        target.insert((s.clone(), t));
                    }
                }
            }
            ensure(image == target, || format!("n={n}, i={i}: image differs from target"))?;
        }
    }
    for n in 1..=8 {
        let c = lib(enumerate_catalan_set(n))?.len();
        ensure(BigInt::from(c) == catalan_number(n - 1), || format!("|C_{n}| = {c}"))?;
    }
    Ok(())
}

fn ac8_pointed_identities() -> Outcome {
    let order = 60;
    let expected = |n: usize| -> BigInt {
        (BigInt::from(1) << n) - 1 - divisor_sum(n as u64).unwrap()
    };
    let r = lib(r_series(order, RMethod::Product))?;
    let log_derivative = &r.pointing() * &lib(r.inverse())?;
    let m = m_series(order);
    let one_minus_m = &IntegerSeries::one(order) - &m;
    let pointed = &m.pointing() * &lib(one_minus_m.inverse())?;
    for n in 1..=order {
        let e = expected(n);
        ensure(*log_derivative.coeff(n) == e, || format!("x R'/R at {n}"))?;
        ensure(*pointed.coeff(n) == e, || format!("x M'/(1 - M) at {n}"))?;
    }

    let m200 = m_series(200);
    let p = partition_counts(200);
    for n in 1..=200 {
        let formula: BigInt = p[..n].iter().sum::<BigInt>() - &p[n];
        ensure(*m200.coeff(n) == formula, || format!("[x^{n}] M"))?;
    }

    for n in 0..=15 {
        let v = lib(cycle_type_formula(n))?;
        ensure(v == *r.coeff(n), || format!("cycle-type formula at {n}: {v}"))?;
    }
    Ok(())
}

/// Weakly increasing subdiagonal sequences of length `len`.
fn weakly_increasing(len: usize) -> u64 {
    fn go(pos: usize, len: usize, prev: usize) -> u64 {
        if pos > len {
            1
        } else {
            (prev..pos).map(|v| go(pos + 1, len, v)).sum()
        }
    }
    go(1, len, 0)
}

fn ac9_oracles() -> Outcome {
    let table = mahonian_table(8);
    for n in 0..=8usize {
        let mut counts = vec![0u64; n * n.saturating_sub(1) / 2 + 1];
        for p in lib(all_permutations(n, 9))? {
            counts[p.inversions()] += 1;
            ensure(p.inversions() + p.component_count() >= n, || format!("CJS fails at {p}"))?;
        }
        for (k, &c) in counts.iter().enumerate() {
            ensure(BigInt::from(c) == table.get(n, k), || format!("I_{n}({k}): brute force {c}"))?;
        }
    }
    for len in 0..=12 {
        let c = weakly_increasing(len);
        ensure(BigInt::from(c) == catalan_number(len), || format!("length {len}: {c}"))?;
    }
    Ok(())
}

fn main() {
    let criteria: [(&str, fn() -> Outcome, u64); 9] = [
        ("AC1 Mahonian triangle rows 0-9", ac1_triangle, 1),
        ("AC2 S_0, S_1, S_2 displays to x^8", ac2_subdiagonal_displays, 1),
        ("AC3 Knuth-Netto equals DP for k <= n <= 60", ac3_knuth_netto, 10),
        ("AC4 S_i recursion and S_0/R substitutions to order 40", ac4_series_theorems, 5),
        ("AC5 three constructions of R agree to order 200", ac5_r_constructions, 10),
        ("AC6 phi, psi, theta and the signed-sum chain for n <= 10", ac6_involutions, 120),
        ("AC7 prefix factorization bijection for n <= 8", ac7_factorization, 120),
        ("AC8 pointed identities, M formula, cycle-type formula", ac8_pointed_identities, 30),
        ("AC9 brute-force oracles, CJS and inv-catalan", ac9_oracles, 120),
    ];
    let mut failed = 0;
    for (name, run, limit) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|()| {
            ensure(elapsed < Duration::from_secs(limit), || {
                format!("took {elapsed:.2?}, limit {limit}s")
            })
        });
        match outcome {
            Ok(()) => println!("PASS {name} ({elapsed:.2?} < {limit}s)"),
            Err(why) => {
                failed += 1;
                println!("FAIL {name}: {why}");
            }
        }
    }
    if failed > 0 {
        println!("{failed} of 9 criteria failed");
        std::process::exit(1);
    }
    println!("all 9 criteria passed");
}
