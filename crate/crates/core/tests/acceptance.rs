//! Acceptance criteria 1-13. Runs as a plain binary (no libtest harness)
//! so every criterion prints one PASS/FAIL line.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use djh_core::circuit::{run_djh, CircuitVerdict};
use djh_core::cyclotomic::{self, cyclotomic_poly, dephi_decompose, f_poly, N105_EXPONENTS};
use djh_core::group::{build_abelian, build_alternating4, build_cyclic, build_dihedral, build_symmetric};
use djh_core::linalg::{self, CMatrix};
use djh_core::promise::{self, FunctionProfile, GroupRingElement, PromiseFunction, Verdict};
use djh_core::qft::{fourier_matrix, verify_unitary};
use djh_core::representation::{builtin_irreps, verify_schur, weyl_unitarize, EntryIndex, IrrepSet};
use djh_core::{Error, FiniteGroup, IntPolynomial, DEFAULT_TOL};

type Outcome = Result<String, String>;
type PartRows = Vec<(u64, usize, u64)>;
/// Id, name, body and optional time limit.
type Criterion = (u32, &'static str, fn() -> Outcome, Option<Duration>);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        #[allow(clippy::neg_cmp_op_on_partial_ord)]
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn idx(i: usize, j: usize, k: usize) -> EntryIndex {
    EntryIndex::from_one_based(i, j, k).unwrap()
}

/// Every map `{0..x} → {0..h}` in odometer order.
fn all_images(x: usize, h: usize) -> Vec<Vec<usize>> {
    let total = h.pow(x as u32);
    (0..total)
        .map(|mut c| {
            (0..x)
                .map(|_| {
                    let d = c % h;
                    c /= h;
                    d
                })
                .collect()
        })
        .collect()
}

fn func(h: &FiniteGroup, image: Vec<usize>) -> PromiseFunction {
    PromiseFunction::new(h.clone(), image).unwrap()
}

fn criterion_1() -> Outcome {
    let z2 = build_cyclic(2).unwrap();
    let set = builtin_irreps(&z2).unwrap();
    let mut worst = 0.0f64;
    for image in all_images(2, 2) {
        let expect = if image[0] == image[1] { 1.0 } else { 0.0 };
        let rep = run_djh(&func(&z2, image.clone()), &set, idx(1, 1, 2), 1e-6).unwrap();
        let dev = (rep.probability_identity - expect).abs();
        worst = worst.max(dev);
        ensure!(dev < 1e-9, "f = {image:?}: probability {}", rep.probability_identity);
    }
    Ok(format!("4 functions, max deviation {worst:.1e}"))
}

fn criterion_2() -> Outcome {
    let z2 = build_cyclic(2).unwrap();
    let set = builtin_irreps(&z2).unwrap();
    let (mut constant, mut balanced, mut worst) = (0, 0, 0.0f64);
    for image in all_images(8, 2) {
        let ones = image.iter().filter(|&&v| v == 1).count();
        let expect = match ones {
            0 | 8 => 1.0,
            4 => 0.0,
            _ => continue,
        };
        if expect == 1.0 {
            constant += 1;
        } else {
            balanced += 1;
        }
        let rep = run_djh(&func(&z2, image.clone()), &set, idx(1, 1, 2), 1e-6).unwrap();
        let dev = (rep.probability_identity - expect).abs();
        worst = worst.max(dev);
        ensure!(dev < 1e-9, "f = {image:?}: probability {}", rep.probability_identity);
    }
    ensure!(
        constant == 2 && balanced == 70,
        "enumerated {constant} constant, {balanced} balanced"
    );
    Ok(format!("2 constant + 70 balanced, max deviation {worst:.1e}"))
}

fn criterion_3() -> Outcome {
    let s3 = build_dihedral(3).unwrap();
    let set = builtin_irreps(&s3).unwrap();
    let mut rng = StdRng::seed_from_u64(3);
    let mut worst = 0.0f64;
    let mut two_to_one: Vec<usize> = (0..6).flat_map(|h| [h, h]).collect();
    for _ in 0..200 {
        two_to_one.shuffle(&mut rng);
        let rep = run_djh(&func(&s3, two_to_one.clone()), &set, idx(1, 1, 2), 1e-6).unwrap();
        worst = worst.max(rep.probability_identity);
        ensure!(
            rep.verdict == CircuitVerdict::Balanced,
            "2-to-one f judged {:?}",
            rep.verdict
        );
    }
    for _ in 0..50 {
        let v = rng.gen_range(0..6);
        let rep = run_djh(&func(&s3, vec![v; 12]), &set, idx(1, 1, 2), 1e-6).unwrap();
        worst = worst.max(1.0 - rep.probability_identity);
        ensure!(
            rep.verdict == CircuitVerdict::Constant,
            "constant f judged {:?}",
            rep.verdict
        );
    }
    Ok(format!("250 functions decided, max deviation {worst:.1e}"))
}

fn criterion_4() -> Outcome {
    let mut summary = Vec::new();
    for h in [build_cyclic(4).unwrap(), build_dihedral(3).unwrap()] {
        let set = builtin_irreps(&h).unwrap();
        let (mut c, mut b, mut n) = (0, 0, 0);
        let images = all_images(4, h.order());
        for image in &images {
            let f = func(&h, image.clone());
            for k in 1..set.len() {
                for i in 0..set.irrep(k).dim() {
                    let verdict = promise::classify_definitional(&f, &set, k, i, DEFAULT_TOL)
                        .unwrap()
                        .verdict;
                    let p = run_djh(&f, &set, EntryIndex::new(k, i, 0), 1e-6)
                        .unwrap()
                        .probability_identity;
                    let ok = match verdict {
                        Verdict::Constant => {
                            c += 1;
                            p >= 1.0 - 1e-6
                        }
                        Verdict::Balanced => {
                            b += 1;
                            p <= 1e-6
                        }
                        Verdict::Neither => {
                            n += 1;
                            p > 1e-6 && p < 1.0 - 1e-6
                        }
                    };
                    ensure!(
                        ok,
                        "|H| = {}, f = {image:?}, (k,i) = ({},{}): {verdict:?} but p = {p}",
                        h.order(),
                        k + 1,
                        i + 1
                    );
                }
            }
        }
        summary.push(format!("|H|={}: {} functions, {c}C/{b}B/{n}N", h.order(), images.len()));
    }
    Ok(summary.join("; "))
}

fn criterion_5() -> Outcome {
    let s3 = build_dihedral(3).unwrap();
    let set = builtin_irreps(&s3).unwrap();
    let (a, b) = (1.0 / 6f64.sqrt(), 1.0 / 3f64.sqrt());
    let w = linalg::root_of_unity(1, 3) * b;
    let wb = linalg::root_of_unity(-1, 3) * b;
    let re = |x: f64| Complex64::new(x, 0.0);
    let z = re(0.0);
    // columns 1, r, r², s, r²s, rs as printed
    let columns = [0usize, 1, 2, 3, 5, 4];
    let table: [((usize, usize, usize), [Complex64; 6]); 6] = [
        ((1, 1, 1), [re(a); 6]),
        ((1, 1, 2), [re(a), re(a), re(a), re(-a), re(-a), re(-a)]),
        ((1, 1, 3), [re(b), w, wb, z, z, z]),
        ((1, 2, 3), [z, z, z, re(b), wb, w]),
        ((2, 1, 3), [z, z, z, re(b), w, wb]),
        ((2, 2, 3), [re(b), wb, w, z, z, z]),
    ];
    let mut worst = 0.0f64;
    for ((i, j, k), row) in table {
        for (col, expect) in columns.iter().zip(row) {
            let got = set.tau(k - 1, i - 1, j - 1, *col);
            worst = worst.max((got - expect).norm());
        }
    }
    ensure!(worst < 1e-12, "max deviation {worst:e}");
    Ok(format!("36 entries, max deviation {worst:.1e}"))
}

fn criterion_6_groups() -> Vec<(String, FiniteGroup)> {
    let mut groups: Vec<(String, FiniteGroup)> =
        (1..=16).map(|n| (format!("Z{n}"), build_cyclic(n).unwrap())).collect();
    groups.push(("Z2xZ3".into(), build_abelian(&[2, 3]).unwrap()));
    groups.extend((1..=8).map(|n| (format!("D{n}"), build_dihedral(n).unwrap())));
    groups.push(("S3".into(), build_symmetric(3).unwrap()));
    groups.push(("S4".into(), build_symmetric(4).unwrap()));
    groups.push(("A4".into(), build_alternating4().unwrap()));
    groups
}

fn criterion_6() -> Outcome {
    let (mut schur, mut unit) = (0.0f64, 0.0f64);
    let groups = criterion_6_groups();
    for (name, g) in &groups {
        let set = builtin_irreps(g).unwrap();
        let s = verify_schur(&set, 1e-9);
        let u = verify_unitary(&fourier_matrix(&set));
        ensure!(
            s.passed() && u.passed(1e-9),
            "{name}: Schur {:e}, unitarity {:e}",
            s.max_deviation,
            u.max_deviation()
        );
        schur = schur.max(s.max_deviation);
        unit = unit.max(u.max_deviation());
    }
    Ok(format!(
        "{} groups, Schur {schur:.1e}, FF*/F*F {unit:.1e}",
        groups.len()
    ))
}

fn random_invertible(rng: &mut StdRng, n: usize) -> CMatrix {
    loop {
        let data: Vec<f64> = (0..n * n).map(|_| rng.gen_range(-3..=3) as f64).collect();
        let m = linalg::from_real(n, n, &data);
        if m.determinant().norm() > 0.5 {
            return m;
        }
    }
}

fn criterion_7() -> Outcome {
    let mut rng = StdRng::seed_from_u64(7);
    let (mut count, mut unit, mut chars) = (0, 0.0f64, 0.0f64);
    for (name, g) in criterion_6_groups() {
        let set = builtin_irreps(&g).unwrap();
        for (k, rho) in set.irreps().iter().enumerate() {
            for _ in 0..20 {
                let t = random_invertible(&mut rng, rho.dim());
                let skewed = rho.conjugate(&t).unwrap();
                let fixed = weyl_unitarize(&g, &skewed, 1e-9).map_err(|e| format!("{name} irrep {}: {e}", k + 1))?;
                unit = unit.max(fixed.unitarity_defect());
                for (a, b) in fixed.characters().iter().zip(rho.characters()) {
                    chars = chars.max((a - b).norm());
                }
                count += 1;
            }
        }
    }
    ensure!(unit < 1e-9 && chars < 1e-9, "unitarity {unit:e}, characters {chars:e}");
    Ok(format!(
        "{count} conjugations, unitarity {unit:.1e}, characters {chars:.1e}"
    ))
}

/// Random functions mixing uniform draws, perfectly balanced maps and maps
/// into a single coset of a stabiliser, so all three verdicts occur.
fn random_function(rng: &mut StdRng, set: &IrrepSet) -> PromiseFunction {
    let h = set.group();
    let n = h.order();
    match rng.gen_range(0..4) {
        0 => {
            let x = rng.gen_range(1..=10);
            func(h, (0..x).map(|_| rng.gen_range(0..n)).collect())
        }
        1 => {
            let reps = rng.gen_range(1..=2);
            let mut image: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, reps)).collect();
            image.shuffle(rng);
            func(h, image)
        }
        2 => {
            let k = rng.gen_range(1..set.len());
            let i = rng.gen_range(0..set.irrep(k).dim());
            let stab = promise::stabilizer(set, k, i, DEFAULT_TOL).unwrap();
            let shift = rng.gen_range(0..n);
            let x = rng.gen_range(1..=6);
            let image = (0..x)
                .map(|_| h.mul(*stab.members().choose(rng).unwrap(), shift))
                .collect();
            func(h, image)
        }
        _ => {
            // a union of full cosets of a random subgroup tends to be balanced
            let gen = rng.gen_range(0..n);
            let sub = djh_core::group::subgroup_generated(h, &[gen]).unwrap();
            let cosets = djh_core::group::cosets(h, &sub);
            let picks = rng.gen_range(1..=cosets.len());
            let image = cosets.choose_multiple(rng, picks).flatten().copied().collect();
            func(h, image)
        }
    }
}

fn criterion_8() -> Outcome {
    let mut rng = StdRng::seed_from_u64(8);
    let mut tallies = Vec::new();
    for h in [build_dihedral(3).unwrap(), build_alternating4().unwrap()] {
        let set = builtin_irreps(&h).unwrap();
        let (mut c, mut b, mut n) = (0, 0, 0);
        for _ in 0..10_000 {
            let f = random_function(&mut rng, &set);
            for k in 1..set.len() {
                for i in 0..set.irrep(k).dim() {
                    match promise::classify_via_group_ring(&f, &set, k, i, DEFAULT_TOL) {
                        Ok(cl) => match cl.verdict {
                            Verdict::Constant => c += 1,
                            Verdict::Balanced => b += 1,
                            Verdict::Neither => n += 1,
                        },
                        Err(e) => return Err(format!("|H| = {}: {e}", h.order())),
                    }
                }
            }
        }
        tallies.push(format!("|H|={}: {c}C/{b}B/{n}N", h.order()));
    }

    let a4 = build_alternating4().unwrap();
    let set = builtin_irreps(&a4).unwrap();
    let el = |w: &str| a4.element_by_label(w).unwrap();
    let stab = promise::stabilizer(&set, 3, 0, DEFAULT_TOL).unwrap();
    ensure!(
        stab.members() == [el("I"), el("N2RN")],
        "stabiliser {:?}",
        stab.members()
    );
    let conditions = |m: &[i64]| {
        let c = |w: &str| m[el(w)];
        c("I") - c("R") + c("N2RN") - c("NRN2") == 0
            && c("N") - c("RN") + c("N2RN2") - c("NR") == 0
            && c("N2") - c("RN2") + c("N2R") - c("NRN") == 0
    };
    let mut members = 0;
    for t in 0..100 {
        let mut m: Vec<i64> = (0..12).map(|_| rng.gen_range(-3..=3)).collect();
        if t % 2 == 0 {
            // force the three conditions by solving for one coefficient each
            m[el("NRN2")] = m[el("I")] - m[el("R")] + m[el("N2RN")];
            m[el("NR")] = m[el("N")] - m[el("RN")] + m[el("N2RN2")];
            m[el("NRN")] = m[el("N2")] - m[el("RN2")] + m[el("N2R")];
        }
        let r = GroupRingElement::new(m.clone());
        let member = promise::annihilator_member(&r, &set, 3, 0, DEFAULT_TOL).unwrap();
        ensure!(member == conditions(&m), "element {m:?}: annihilator {member}");
        members += member as usize;
    }
    Ok(format!(
        "{}; A4 stabiliser {{I, N2RN}}; 100 elements ({members} in the annihilator)",
        tallies.join("; ")
    ))
}

/// Naive convolution, kept separate from the library's multiplication.
fn naive_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn trimmed(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

fn naive_add(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let len = a.len().max(b.len());
    trimmed(
        (0..len)
            .map(|i| a.get(i).cloned().unwrap_or_default() + b.get(i).cloned().unwrap_or_default())
            .collect(),
    )
}

fn ones(n: usize) -> Vec<BigInt> {
    vec![BigInt::one(); n]
}

fn criterion_9() -> Outcome {
    for n in 1..=200u64 {
        let family = cyclotomic::cyclotomic_family(n).unwrap();
        let prod = family
            .values()
            .fold(vec![BigInt::one()], |acc, p| naive_mul(&acc, p.coeffs()));
        let mut expect = vec![BigInt::zero(); n as usize + 1];
        expect[0] = BigInt::from(-1);
        expect[n as usize] = BigInt::one();
        ensure!(trimmed(prod) == expect, "product of Φ_d for d | {n} is not x^n - 1");
    }
    let phi15 = cyclotomic_poly(15).unwrap();
    ensure!(
        phi15.to_i64s() == Some(vec![1, -1, 0, 1, -1, 1, 0, -1, 1]),
        "Φ15 = {phi15}"
    );

    let mut rng = StdRng::seed_from_u64(9);
    for _ in 0..100 {
        let len = rng.gen_range(2..=4);
        let a: Vec<usize> = (0..len).map(|_| rng.gen_range(0..=30)).collect();
        let s = cyclotomic::gcd_combination(&a).unwrap();
        let d = a.iter().fold(0usize, |g, &x| num_integer::gcd(g, x + 1));
        let total = a.iter().zip(&s).fold(Vec::new(), |acc, (&ai, si)| {
            naive_add(&acc, &naive_mul(si.coeffs(), &ones(ai + 1)))
        });
        ensure!(total == ones(d), "gcd combination for {a:?} fails");
    }
    let primes = [2u64, 3, 5, 7, 11, 13];
    for _ in 0..100 {
        let count = rng.gen_range(1..=3);
        let chosen: Vec<u64> = primes.choose_multiple(&mut rng, count).copied().collect();
        let s = cyclotomic::prime_partition_of_unity(&chosen).unwrap();
        let m: u64 = chosen.iter().product();
        let total = chosen.iter().zip(&s).fold(Vec::new(), |acc, (&p, si)| {
            naive_add(&acc, &naive_mul(si.coeffs(), &ones((m / p) as usize)))
        });
        ensure!(total == ones(1), "partition of unity for {chosen:?} fails");
    }
    Ok("Π Φ_d = x^n - 1 for n ≤ 200; Φ15 as printed; 100 + 100 identities exact".into())
}

/// Profiles with `Σ p_t ≤ max_total` over `n` slots.
fn profiles(n: usize, max_total: u64) -> Vec<Vec<u64>> {
    fn rec(slot: usize, left: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if slot == cur.len() {
            out.push(cur.clone());
            return;
        }
        for v in 0..=left {
            cur[slot] = v;
            rec(slot + 1, left - v, cur, out);
        }
        cur[slot] = 0;
    }
    let mut out = Vec::new();
    rec(0, max_total, &mut vec![0; n], &mut out);
    out
}

/// Searches all ways of splitting each fibre between a `K_p` part and a
/// `K_q` part for one in which both parts cover their cosets evenly.
fn brute_force_cover_exists(counts: &[u64], n: usize, primes: &[usize]) -> bool {
    let np = n / primes[0];
    if primes.len() == 1 {
        return (0..n).all(|t| counts[t] == counts[t % np]);
    }
    let nq = n / primes[1];
    // u_j ranges over 0..=min fibre in its class
    let bounds: Vec<u64> = (0..np)
        .map(|j| (j..n).step_by(np).map(|t| counts[t]).min().unwrap())
        .collect();
    let mut u = vec![0u64; np];
    loop {
        let mut v: Vec<Option<u64>> = vec![None; nq];
        let ok = (0..n).all(|t| {
            let rest = counts[t] - u[t % np];
            match v[t % nq] {
                None => {
                    v[t % nq] = Some(rest);
                    true
                }
                Some(x) => x == rest,
            }
        });
        if ok {
            return true;
        }
        let mut pos = 0;
        loop {
            if pos == np {
                return false;
            }
            if u[pos] < bounds[pos] {
                u[pos] += 1;
                break;
            }
            u[pos] = 0;
            pos += 1;
        }
    }
}

fn eval_at_root(counts: &[u64], n: usize) -> f64 {
    counts
        .iter()
        .enumerate()
        .map(|(t, &c)| Complex64::from_polar(c as f64, 2.0 * std::f64::consts::PI * t as f64 / n as f64))
        .sum::<Complex64>()
        .norm()
}

fn criterion_10() -> Outcome {
    let mut summary = Vec::new();
    for (n, primes) in [(8usize, vec![2usize]), (12, vec![2, 3]), (18, vec![2, 3])] {
        let phi = cyclotomic_poly(n as u64).unwrap();
        let (mut total, mut balanced) = (0, 0);
        for counts in profiles(n, 6) {
            let profile = FunctionProfile::new(n, counts.clone()).unwrap();
            let g = profile.polynomial();
            let divisible = g.is_divisible_by(&phi);
            let decomposes = match dephi_decompose(&g, n as u64) {
                Ok(_) => true,
                Err(Error::NotBalanced(_)) => false,
                Err(e) => return Err(format!("n = {n}, {counts:?}: {e}")),
            };
            let cover = brute_force_cover_exists(&counts, n, &primes);
            let numeric = eval_at_root(&counts, n) < 1e-9;
            ensure!(
                divisible == decomposes && decomposes == cover && cover == numeric,
                "n = {n}, {counts:?}: Φ|P {divisible}, dephi {decomposes}, cover {cover}, P(ω)=0 {numeric}"
            );
            if decomposes && profile.total() > 0 {
                let f = profile.canonical_function().unwrap();
                let part = promise::even_cover_decompose(&f).unwrap();
                ensure!(partition_is_even(&f, &part), "n = {n}, {counts:?}: partition not even");
            }
            total += 1;
            balanced += decomposes as usize;
        }
        summary.push(format!("n={n}: {total} profiles, {balanced} balanced"));
    }
    let s1 = IntPolynomial::from_i64s(&[4, 2, 1, 0, 3]);
    let s2 = IntPolynomial::from_i64s(&[2, 0, 1]);
    let g = &(&s1 * &f_poly(3).substitute_power(5)) + &(&s2 * &f_poly(5).substitute_power(3));
    let dec = dephi_decompose(&g, 15).unwrap();
    ensure!(
        dec.s1 == s1 && dec.s2.as_ref() == Some(&s2),
        "n = 15 gives {} and {:?}",
        dec.s1,
        dec.s2
    );
    summary.push("n=15 example exact".into());
    Ok(summary.join("; "))
}

/// Direct count: each part covers every coset of its subgroup evenly with
/// the stated multiplicities, and the parts partition the domain.
fn partition_is_even(f: &PromiseFunction, part: &promise::EvenCoverPartition) -> bool {
    let n = part.modulus;
    let mut seen = vec![false; f.domain_size()];
    for p in &part.parts {
        let mut counts = vec![0u64; n];
        for &x in &p.domain {
            if std::mem::replace(&mut seen[x], true) {
                return false;
            }
            counts[f.eval(x)] += 1;
        }
        let step = p.subgroup_generator;
        if (0..n).any(|t| counts[t] != p.multiplicities[t % step]) {
            return false;
        }
    }
    seen.iter().all(|&s| s)
}

fn criterion_11() -> Outcome {
    let g = IntPolynomial::from_exponents(&N105_EXPONENTS);
    let certified = g.is_divisible_by(&cyclotomic_poly(105).unwrap());
    ensure!(certified, "Φ105 does not divide the 22-term polynomial");
    let refused = matches!(
        dephi_decompose(&g, 105),
        Err(Error::TooManyPrimes { n: 105, primes: 3 })
    );
    ensure!(refused, "decomposition was not refused");
    let numeric = eval_at_root(&g.to_i64s().unwrap().iter().map(|&c| c as u64).collect::<Vec<_>>(), 105);
    Ok(format!(
        "Φ105 | P exactly (|P(ω)| = {numeric:.1e}); decomposition refused for 3 primes"
    ))
}

fn criterion_12() -> Outcome {
    let z5 = build_cyclic(5).unwrap();
    let set = builtin_irreps(&z5).unwrap();
    let mut count = 0;
    for image in all_images(5, 5) {
        let f = func(&z5, image.clone());
        let constant = f.is_constant();
        let mut sorted = image.clone();
        sorted.sort_unstable();
        let bijection = sorted == [0, 1, 2, 3, 4];
        for k in 1..5 {
            let def = promise::classify_definitional(&f, &set, k, 0, DEFAULT_TOL)
                .unwrap()
                .verdict;
            let poly = promise::classify_polynomial(&f, k).unwrap();
            ensure!(def == poly, "f = {image:?}, k = {k}: {def:?} vs {poly:?}");
            ensure!(
                (def == Verdict::Constant) == constant,
                "f = {image:?}, k = {k}: constancy"
            );
        }
        let one = promise::classify_polynomial(&f, 1).unwrap();
        ensure!(
            (one == Verdict::Balanced) == bijection,
            "f = {image:?}: 1-balanced iff bijection"
        );
        count += 1;
    }
    Ok(format!("{count} functions Z5 -> Z5"))
}

fn criterion_13() -> Outcome {
    let check = |f: &PromiseFunction| -> Result<(PartRows, bool), String> {
        let n = f.codomain().order();
        let part = promise::even_cover_decompose(f).map_err(|e| e.to_string())?;
        ensure!(partition_is_even(f, &part), "partition fails the direct count");
        let mut printed_formula_holds = true;
        let rows = part
            .parts
            .iter()
            .map(|p| {
                let big_n = p.cover_count();
                if p.domain.len() as u64 != n as u64 * big_n / p.prime {
                    printed_formula_holds = false;
                }
                (p.prime, p.domain.len(), big_n)
            })
            .collect::<Vec<_>>();
        for &(p, size, big_n) in &rows {
            ensure!(size as u64 == p * big_n, "|X_{p}| = {size} but p·N = {}", p * big_n);
        }
        Ok((rows, printed_formula_holds))
    };

    let s1 = IntPolynomial::from_i64s(&[4, 2, 1, 0, 3]);
    let s2 = IntPolynomial::from_i64s(&[2, 0, 1]);
    let g = &(&s1 * &f_poly(3).substitute_power(5)) + &(&s2 * &f_poly(5).substitute_power(3));
    let counts: Vec<u64> = (0..15).map(|e| u64::try_from(g.coeff(e)).unwrap()).collect();
    let f = FunctionProfile::new(15, counts).unwrap().canonical_function().unwrap();
    let (rows, printed) = check(&f)?;
    ensure!(rows == vec![(3, 30, 10), (5, 15, 3)], "n = 15 parts {rows:?}");
    ensure!(!printed, "the printed formula unexpectedly holds at n = 15");

    let mut rng = StdRng::seed_from_u64(13);
    let moduli = [6u64, 10, 12, 14, 15, 18, 20, 21, 24, 28, 35, 36];
    let mut printed_holds = 0;
    for _ in 0..50 {
        let n = *moduli.choose(&mut rng).unwrap();
        let fac = cyclotomic::factorize(n);
        let (p, q) = (fac[0].0, fac[1].0);
        let rand_poly = |rng: &mut StdRng, len: u64| {
            IntPolynomial::from_i64s(&(0..len).map(|_| rng.gen_range(0..=3)).collect::<Vec<_>>())
        };
        let a = rand_poly(&mut rng, n / p);
        let b = rand_poly(&mut rng, n / q);
        let g = &(&a * &f_poly(p as usize).substitute_power((n / p) as usize))
            + &(&b * &f_poly(q as usize).substitute_power((n / q) as usize));
        if g.is_zero() {
            continue;
        }
        let counts: Vec<u64> = (0..n as usize).map(|e| u64::try_from(g.coeff(e)).unwrap()).collect();
        let f = FunctionProfile::new(n as usize, counts)
            .unwrap()
            .canonical_function()
            .unwrap();
        let (_, printed) = check(&f).map_err(|e| format!("n = {n}: {e}"))?;
        printed_holds += printed as usize;
    }
    Ok(format!(
        "|X_i| = p_i·N_i on n=15 (30 = 3·10, 15 = 5·3) and 50 random instances; n·N_i/p_i held in {printed_holds} of them"
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 13] = [
        (1, "Deutsch case", criterion_1, Some(Duration::from_secs(1))),
        (2, "Deutsch-Jozsa case", criterion_2, Some(Duration::from_secs(5))),
        (3, "Hoyer case", criterion_3, Some(Duration::from_secs(10))),
        (
            4,
            "circuit vs classification, exhaustive",
            criterion_4,
            Some(Duration::from_secs(120)),
        ),
        (5, "S3 tau table", criterion_5, None),
        (6, "Schur orthogonality and QFT unitarity", criterion_6, None),
        (7, "Weyl unitary trick", criterion_7, None),
        (8, "definition vs group ring", criterion_8, None),
        (9, "cyclotomic identities", criterion_9, None),
        (
            10,
            "decomposition and even covers",
            criterion_10,
            Some(Duration::from_secs(120)),
        ),
        (11, "n = 105 counterexample", criterion_11, Some(Duration::from_secs(1))),
        (12, "prime-order corollaries", criterion_12, None),
        (13, "cover part sizes", criterion_13, None),
    ];
    let mut failures = 0;
    for (id, name, run, limit) in criteria {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            Err(format!("panicked: {msg}"))
        });
        let elapsed = start.elapsed();
        let result = match (result, limit) {
            (Ok(_), Some(l)) if elapsed > l => Err(format!("took {elapsed:.2?}, limit {l:?}")),
            (r, _) => r,
        };
        match result {
            Ok(detail) => println!("PASS criterion {id:>2} ({name}): {detail} [{elapsed:.2?}]"),
            Err(why) => {
                failures += 1;
                println!("FAIL criterion {id:>2} ({name}): {why} [{elapsed:.2?}]");
            }
        }
    }
    println!("acceptance: {} passed, {failures} failed", 13 - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
