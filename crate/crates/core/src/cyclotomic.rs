//! Cyclotomic polynomials and the non-negative decomposition of
//! multiples of `Φ_n` for `n` with at most two prime factors.
//!
//! Everything here is exact integer arithmetic.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::poly::IntPolynomial;
use crate::{Error, Result};

/// Prime factorisation by trial division, ascending primes.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n) == [(n, 1)]
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Euler's totient.
pub fn totient(n: u64) -> u64 {
    factorize(n).iter().fold(n, |acc, &(p, _)| acc / p * (p - 1))
}

/// `xⁿ - 1`.
pub fn x_pow_minus_one(n: usize) -> IntPolynomial {
    &IntPolynomial::monomial(1, n) - &IntPolynomial::one()
}

/// `Φ_d` for every divisor `d` of `n`, each obtained from `x^d - 1` by
/// exact division by the `Φ_e` with `e | d`, `e < d`.
pub fn cyclotomic_family(n: u64) -> Result<BTreeMap<u64, IntPolynomial>> {
    if n == 0 {
        return Err(Error::Domain("cyclotomic polynomials need n ≥ 1".into()));
    }
    let mut family: BTreeMap<u64, IntPolynomial> = BTreeMap::new();
    for d in divisors(n) {
        let mut acc = x_pow_minus_one(d as usize);
        for e in divisors(d) {
            if e < d {
                acc = acc.exact_div(&family[&e])?;
            }
        }
        family.insert(d, acc);
    }
    Ok(family)
}

/// The `n`th cyclotomic polynomial.
pub fn cyclotomic_poly(n: u64) -> Result<IntPolynomial> {
    Ok(cyclotomic_family(n)?.remove(&n).expect("n divides n"))
}

/// `Fₙ = 1 + x + ⋯ + xⁿ⁻¹`.
pub fn f_poly(n: usize) -> IntPolynomial {
    IntPolynomial::new(vec![BigInt::from(1); n])
}

/// Checks `Φ_p(x^{n/p}) = Π_{d|s} Φ_{p^γ d}(x)` where `n = p^γ s`, `p ∤ s`.
pub fn verify_fr_identity(n: u64, p: u64) -> Result<bool> {
    if !is_prime(p) || n == 0 || !n.is_multiple_of(p) {
        return Err(Error::Domain(format!("{p} is not a prime divisor of {n}")));
    }
    let (mut s, mut pg) = (n, 1);
    while s % p == 0 {
        s /= p;
        pg *= p;
    }
    let family = cyclotomic_family(n)?;
    let lhs = family[&p].substitute_power((n / p) as usize);
    let rhs = divisors(s)
        .into_iter()
        .fold(IntPolynomial::one(), |acc, d| &acc * &family[&(pg * d)]);
    Ok(lhs == rhs)
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Two-term case: `s₁F_{a₁+1} + s₂F_{a₂+1} = F_d`, by the subtractive
/// Euclidean recursion `h = t·f + g` with `t = -x^{a₂-a₁}`.
fn gcd_pair(a1: usize, a2: usize) -> (IntPolynomial, IntPolynomial) {
    // iterative form of the recursion: record each step, then unwind
    let mut steps = Vec::new();
    let (mut x, mut y) = (a1, a2);
    loop {
        if x == y {
            break;
        }
        if x > y {
            steps.push(None);
            std::mem::swap(&mut x, &mut y);
        } else {
            steps.push(Some(y - x));
            y = y - x - 1;
        }
    }
    let (mut s1, mut s2) = (IntPolynomial::one(), IntPolynomial::zero());
    for step in steps.into_iter().rev() {
        match step {
            None => std::mem::swap(&mut s1, &mut s2),
            Some(shift) => {
                let t = IntPolynomial::monomial(-1, shift);
                s1 = &s1 + &(&s2 * &t);
            }
        }
    }
    (s1, s2)
}

fn check_combination(a: &[usize], s: &[IntPolynomial], d: usize) -> Result<()> {
    let total = a
        .iter()
        .zip(s)
        .fold(IntPolynomial::zero(), |acc, (&ai, si)| &acc + &(si * &f_poly(ai + 1)));
    if total == f_poly(d) {
        Ok(())
    } else {
        Err(Error::Inconsistent("gcd combination fails its identity".into()))
    }
}

/// `sᵢ` with `Σ sᵢ(1 + ⋯ + x^{aᵢ}) = 1 + ⋯ + x^{d-1}`, `d = gcd(aᵢ + 1)`.
pub fn gcd_combination(a: &[usize]) -> Result<Vec<IntPolynomial>> {
    if a.len() < 2 {
        return Err(Error::Domain("gcd_combination needs at least two lengths".into()));
    }
    let d = a.iter().fold(0, |g, &ai| gcd(g, ai + 1));
    let s = if a.len() == 2 {
        let (s1, s2) = gcd_pair(a[0], a[1]);
        vec![s1, s2]
    } else {
        let n = a.len();
        let d1 = a[..n - 1].iter().fold(0, |g, &ai| gcd(g, ai + 1));
        let d2 = gcd(a[n - 2] + 1, a[n - 1] + 1);
        let mut us = gcd_combination(&a[..n - 1])?;
        let (v1, v2) = gcd_pair(a[n - 2], a[n - 1]);
        let (u, v) = gcd_pair(d1 - 1, d2 - 1);
        for ui in us.iter_mut() {
            *ui = &*ui * &u;
        }
        us[n - 2] = &us[n - 2] + &(&v * &v1);
        us.push(&v * &v2);
        us
    };
    check_combination(a, &s, d)?;
    Ok(s)
}

/// `sᵢ` with `Σ sᵢ F_{m/pᵢ} = 1`, `m = Π pᵢ`.
pub fn prime_partition_of_unity(primes: &[u64]) -> Result<Vec<IntPolynomial>> {
    if primes.is_empty() {
        return Err(Error::Domain("no primes given".into()));
    }
    if let Some(p) = primes.iter().find(|&&p| !is_prime(p)) {
        return Err(Error::Domain(format!("{p} is not prime")));
    }
    let mut sorted = primes.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != primes.len() {
        return Err(Error::Domain("primes must be distinct".into()));
    }
    if primes.len() == 1 {
        return Ok(vec![IntPolynomial::one()]);
    }
    let m: u64 = primes.iter().product();
    let lengths: Vec<usize> = primes.iter().map(|p| (m / p) as usize - 1).collect();
    gcd_combination(&lengths)
}

/// `g = s₁·Φ_p(x^{n/p}) + s₂·Φ_q(x^{n/q})` with non-negative parts.
/// For prime powers `q` and `s₂` are absent.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DephiDecomposition {
    pub n: u64,
    pub p: u64,
    pub q: Option<u64>,
    pub s1: IntPolynomial,
    pub s2: Option<IntPolynomial>,
}

impl DephiDecomposition {
    /// `s₁Φ_p(x^{n/p}) (+ s₂Φ_q(x^{n/q}))`.
    pub fn recombine(&self) -> IntPolynomial {
        let part = |s: &IntPolynomial, r: u64| s * &f_poly(r as usize).substitute_power((self.n / r) as usize);
        let mut g = part(&self.s1, self.p);
        if let (Some(q), Some(s2)) = (self.q, &self.s2) {
            g = &g + &part(s2, q);
        }
        g
    }
}

fn slice(p: &IntPolynomial, from: usize, len: usize) -> Vec<BigInt> {
    (from..from + len).map(|e| p.coeff(e)).collect()
}

/// Non-negative decomposition of a multiple of `Φ_n` with non-negative
/// coefficients and degree below `n`.
pub fn dephi_decompose(g: &IntPolynomial, n: u64) -> Result<DephiDecomposition> {
    if n < 2 {
        return Err(Error::Domain("decomposition needs n ≥ 2".into()));
    }
    let factors = factorize(n);
    if factors.len() > 2 {
        return Err(Error::TooManyPrimes {
            n,
            primes: factors.len(),
        });
    }
    if !g.is_non_negative() {
        return Err(Error::Domain("polynomial has a negative coefficient".into()));
    }
    if g.degree().is_some_and(|d| d as u64 >= n) {
        return Err(Error::Domain(format!("degree exceeds n - 1 = {}", n - 1)));
    }
    let phi_n = cyclotomic_poly(n)?;
    let f = g.exact_div(&phi_n).map_err(|_| Error::NotBalanced(n))?;
    let p = factors[0].0;
    let n_us = n as usize;

    if factors.len() == 1 {
        let out = DephiDecomposition {
            n,
            p,
            q: None,
            s1: f,
            s2: None,
        };
        return verify_decomposition(g, out);
    }

    let q = factors[1].0;
    let (p_us, q_us) = (p as usize, q as usize);
    let k = n_us / (p_us * q_us);
    // partition of unity over (p, q): first multiplier goes with F_q, second with F_p
    let unity = prime_partition_of_unity(&[p, q])?;
    let (b, a) = (&unity[0], &unity[1]);
    let mut s_p = &f * &a.substitute_power(k);
    let mut s_q = &f * &b.substitute_power(k);

    // F_q(x^d)·F_p(x^{n/p}) = F_p(x^d)·F_q(x^{n/q}), so multiples of
    // F_q(x^d) move freely from s_p to s_q.
    let fq_d = f_poly(q_us).substitute_power(k);
    let fp_d = f_poly(p_us).substitute_power(k);
    let (quot, rem) = s_p.exact_divmod(&fq_d)?;
    s_p = rem;
    s_q = &s_q + &(&quot * &fp_d);

    let (n_p, n_q) = (n_us / p_us, n_us / q_us);
    if s_p.degree().is_some_and(|d| d >= n_p) || s_q.degree().is_some_and(|d| d >= n_q) {
        return Err(Error::Inconsistent("degree reduction left parts too large".into()));
    }

    // non-negativity repair, one residue class mod d = k at a time
    let d = k;
    let mut u = slice(&s_p, 0, n_p);
    let mut v = slice(&s_q, 0, n_q);
    for j in 0..d {
        let min_u = (0..q_us).map(|a| &u[a * d + j]).min().expect("q ≥ 2").clone();
        let min_v = (0..p_us).map(|b| &v[b * d + j]).min().expect("p ≥ 2").clone();
        let c = min_u.clone().min(min_v.clone());
        if !c.is_negative() {
            continue;
        }
        let shift = c.abs();
        if min_u <= min_v {
            for a in 0..q_us {
                u[a * d + j] += &shift;
            }
            for b in 0..p_us {
                v[b * d + j] -= &shift;
            }
        } else {
            for a in 0..q_us {
                u[a * d + j] -= &shift;
            }
            for b in 0..p_us {
                v[b * d + j] += &shift;
            }
        }
    }
    let out = DephiDecomposition {
        n,
        p,
        q: Some(q),
        s1: IntPolynomial::new(u),
        s2: Some(IntPolynomial::new(v)),
    };
    verify_decomposition(g, out)
}

fn verify_decomposition(g: &IntPolynomial, out: DephiDecomposition) -> Result<DephiDecomposition> {
    let parts_ok = out.s1.is_non_negative() && out.s2.as_ref().is_none_or(|s| s.is_non_negative());
    let deg_ok = |s: &IntPolynomial, r: u64| s.degree().is_none_or(|d| (d as u64) < out.n / r);
    let degrees_ok = deg_ok(&out.s1, out.p)
        && match (out.q, &out.s2) {
            (Some(q), Some(s)) => deg_ok(s, q),
            _ => true,
        };
    if !parts_ok || !degrees_ok || &out.recombine() != g {
        return Err(Error::Inconsistent(format!(
            "decomposition for n = {} failed verification",
            out.n
        )));
    }
    Ok(out)
}

/// Whether `p(e^{2πi/n}) = 0`, decided as `Φ_n | (p mod xⁿ - 1)`.
pub fn eval_at_root_of_unity_is_zero(p: &IntPolynomial, n: u64) -> Result<bool> {
    if n == 0 {
        return Err(Error::Domain("n must be positive".into()));
    }
    let reduced = p.fold_mod(n as usize);
    if reduced.is_zero() {
        return Ok(true);
    }
    Ok(reduced.is_divisible_by(&cyclotomic_poly(n)?))
}

/// The 22 exponents of the balanced profile for `n = 105`.
pub const N105_EXPONENTS: [usize; 22] = [
    0, 4, 13, 19, 21, 22, 34, 35, 37, 43, 52, 56, 58, 64, 67, 73, 79, 82, 88, 94, 97, 103,
];
