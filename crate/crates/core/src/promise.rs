//! ρᵏᵢ-constant / ρᵏᵢ-balanced classification of functions `f: X → H`.
//!
//! Three routes are provided: the definition (row `i` of `τᵏ` along the
//! image of `f`), the group ring (stabiliser cosets and the annihilator of
//! `eᵢ`), and for Abelian codomains the exact test `Φ_v | P_f̄`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::cyclotomic::{self, dephi_decompose};
use crate::group::{self, build_cyclic, FiniteGroup, GroupKind, Subgroup};
use crate::poly::IntPolynomial;
use crate::representation::{mixed_radix_digits, IrrepSet};
use crate::{Error, Result};

/// A map `X → H` with `X = {0, …, |X|-1}`, given by its image table.
#[derive(Debug, Clone, PartialEq)]
pub struct PromiseFunction {
    codomain: FiniteGroup,
    image: Vec<usize>,
}

impl PromiseFunction {
    pub fn new(codomain: FiniteGroup, image: Vec<usize>) -> Result<Self> {
        if image.is_empty() {
            return Err(Error::Domain("the domain must be non-empty".into()));
        }
        if let Some(&bad) = image.iter().find(|&&h| h >= codomain.order()) {
            return Err(Error::Index(format!(
                "image value {bad} outside a codomain of order {}",
                codomain.order()
            )));
        }
        Ok(PromiseFunction { codomain, image })
    }

    pub fn constant(codomain: FiniteGroup, domain_size: usize, value: usize) -> Result<Self> {
        Self::new(codomain, vec![value; domain_size])
    }

    pub fn domain_size(&self) -> usize {
        self.image.len()
    }

    pub fn codomain(&self) -> &FiniteGroup {
        &self.codomain
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn eval(&self, g: usize) -> usize {
        self.image[g]
    }

    /// `|f⁻¹(h)|` for every `h`.
    pub fn fiber_sizes(&self) -> Vec<u64> {
        let mut counts = vec![0; self.codomain.order()];
        for &h in &self.image {
            counts[h] += 1;
        }
        counts
    }

    /// Domain points mapped to `h`, ascending.
    pub fn fiber(&self, h: usize) -> Vec<usize> {
        (0..self.image.len()).filter(|&g| self.image[g] == h).collect()
    }

    pub fn is_constant(&self) -> bool {
        self.image.iter().all(|&h| h == self.image[0])
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    Constant,
    Balanced,
    Neither,
}

/// Outcome of a test at irrep `irrep`, row `row` (both zero-based).
///
/// `witness` holds the common row `(c_r)` for a constant verdict, and the
/// row sums `Σ_g τᵏᵢᵣ(f(g))` otherwise.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Classification {
    pub irrep: usize,
    pub row: usize,
    pub verdict: Verdict,
    pub witness: Vec<Complex64>,
    /// Set for the trivial irrep, where every function is constant and none
    /// is balanced.
    pub degenerate: bool,
}

fn row_values(f: &PromiseFunction, set: &IrrepSet, k: usize, i: usize, x: usize) -> Vec<Complex64> {
    (0..set.irrep(k).dim()).map(|r| set.tau(k, i, r, f.eval(x))).collect()
}

fn check_codomain(f: &PromiseFunction, set: &IrrepSet) -> Result<()> {
    if f.codomain() != set.group() {
        return Err(Error::Domain("the irrep set belongs to a different group".into()));
    }
    Ok(())
}

/// `Σ_g τᵏᵢᵣ(f(g))` for each `r`.
pub fn row_sums(f: &PromiseFunction, set: &IrrepSet, k: usize, i: usize) -> Vec<Complex64> {
    let dim = set.irrep(k).dim();
    let counts = f.fiber_sizes();
    (0..dim)
        .map(|r| {
            counts
                .iter()
                .enumerate()
                .filter(|(_, &c)| c > 0)
                .map(|(h, &c)| set.tau(k, i, r, h) * c as f64)
                .sum()
        })
        .collect()
}

/// Constant iff every `τᵏᵢᵣ(f(g))` has spread below `tol` over `g ∈ X`.
pub fn is_rho_constant(f: &PromiseFunction, set: &IrrepSet, k: usize, i: usize, tol: f64) -> Result<Classification> {
    check_codomain(f, set)?;
    set.check_position(k, i)?;
    let first = row_values(f, set, k, i, 0);
    let spread = (1..f.domain_size())
        .map(|x| {
            row_values(f, set, k, i, x)
                .iter()
                .zip(&first)
                .map(|(a, b)| (a - b).norm())
                .fold(0.0, f64::max)
        })
        .fold(0.0, f64::max);
    let constant = spread < tol;
    Ok(Classification {
        irrep: k,
        row: i,
        verdict: if constant { Verdict::Constant } else { Verdict::Neither },
        witness: if constant { first } else { row_sums(f, set, k, i) },
        degenerate: set.is_trivial_irrep(k),
    })
}

/// Balanced iff `|Σ_g τᵏᵢᵣ(f(g))| < tol` for every `r`. Never balanced at
/// the trivial irrep.
pub fn is_rho_balanced(f: &PromiseFunction, set: &IrrepSet, k: usize, i: usize, tol: f64) -> Result<Classification> {
    check_codomain(f, set)?;
    set.check_position(k, i)?;
    let sums = row_sums(f, set, k, i);
    let trivial = set.is_trivial_irrep(k);
    let balanced = !trivial && sums.iter().all(|s| s.norm() < tol);
    Ok(Classification {
        irrep: k,
        row: i,
        verdict: if balanced { Verdict::Balanced } else { Verdict::Neither },
        witness: sums,
        degenerate: trivial,
    })
}

/// Definitional classification: constant, balanced or neither.
pub fn classify_definitional(
    f: &PromiseFunction,
    set: &IrrepSet,
    k: usize,
    i: usize,
    tol: f64,
) -> Result<Classification> {
    let c = is_rho_constant(f, set, k, i, tol)?;
    if c.verdict == Verdict::Constant {
        return Ok(c);
    }
    is_rho_balanced(f, set, k, i, tol)
}

/// `r_f = Σ_j |f⁻¹(h_j)| h_j ∈ ℤH`, stored as its coefficient table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupRingElement {
    pub coeffs: Vec<i64>,
}

impl GroupRingElement {
    pub fn new(coeffs: Vec<i64>) -> Self {
        GroupRingElement { coeffs }
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.coeffs.len()).filter(|&h| self.coeffs[h] != 0).collect()
    }

    pub fn total(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    /// Non-negative with coefficient sum `domain_size`.
    pub fn is_admissible(&self, domain_size: usize) -> bool {
        self.coeffs.iter().all(|&c| c >= 0) && self.total() == domain_size as i64
    }
}

pub fn group_ring_element(f: &PromiseFunction) -> GroupRingElement {
    GroupRingElement::new(f.fiber_sizes().into_iter().map(|c| c as i64).collect())
}

/// `{h : eᵢρᵏ(h) = eᵢ}`.
pub fn stabilizer(set: &IrrepSet, k: usize, i: usize, tol: f64) -> Result<Subgroup> {
    set.check_position(k, i)?;
    let dim = set.irrep(k).dim();
    let members = set.group().elements().filter(|&h| {
        (0..dim).all(|r| {
            let target = if r == i { 1.0 } else { 0.0 };
            (set.rho(k, i, r, h) - Complex64::new(target, 0.0)).norm() < tol
        })
    });
    Subgroup::new(set.group(), members.collect::<Vec<_>>())
}

/// `eᵢ · Σ_j m_j ρᵏ(h_j)`.
pub fn annihilator_row(r: &GroupRingElement, set: &IrrepSet, k: usize, i: usize) -> Vec<Complex64> {
    let dim = set.irrep(k).dim();
    (0..dim)
        .map(|col| {
            r.coeffs
                .iter()
                .enumerate()
                .filter(|(_, &m)| m != 0)
                .map(|(h, &m)| set.rho(k, i, col, h) * m as f64)
                .sum()
        })
        .collect()
}

/// Whether `eᵢ · r = 0` under `ρᵏ`.
pub fn annihilator_member(r: &GroupRingElement, set: &IrrepSet, k: usize, i: usize, tol: f64) -> Result<bool> {
    set.check_position(k, i)?;
    if r.coeffs.len() != set.group().order() {
        return Err(Error::Index(format!(
            "{} coefficients for a group of order {}",
            r.coeffs.len(),
            set.group().order()
        )));
    }
    Ok(annihilator_row(r, set, k, i).iter().all(|z| z.norm() < tol))
}

/// Group-ring classification, cross-checked against the definition.
///
/// Constant iff the support of `r_f` lies in one right coset `Sh` of the
/// stabiliser of `eᵢ`; balanced iff `r_f` annihilates `eᵢ`.
pub fn classify_via_group_ring(
    f: &PromiseFunction,
    set: &IrrepSet,
    k: usize,
    i: usize,
    tol: f64,
) -> Result<Classification> {
    check_codomain(f, set)?;
    let stab = stabilizer(set, k, i, tol)?;
    let r_f = group_ring_element(f);
    let support = r_f.support();
    let h0 = support[0];
    let h0_inv = set.group().inv(h0);
    let in_one_coset = support.iter().all(|&h| stab.contains(set.group().mul(h, h0_inv)));
    let verdict = if in_one_coset {
        Verdict::Constant
    } else if !set.is_trivial_irrep(k) && annihilator_member(&r_f, set, k, i, tol)? {
        Verdict::Balanced
    } else {
        Verdict::Neither
    };
    let definitional = classify_definitional(f, set, k, i, tol)?;
    if definitional.verdict != verdict {
        return Err(Error::Inconsistent(format!(
            "at irrep {} row {}: definition says {:?}, group ring says {:?}",
            k + 1,
            i + 1,
            definitional.verdict,
            verdict
        )));
    }
    Ok(definitional)
}

fn check_abelian_decomposition(group: &FiniteGroup, decomposition: &[usize]) -> Result<()> {
    if !group.is_abelian() {
        return Err(Error::Unsupported("abelian reduction needs an Abelian codomain".into()));
    }
    if group.kind().cyclic_factors().as_deref() == Some(decomposition) {
        return Ok(());
    }
    let reference = group::build_abelian(decomposition)?;
    if reference.table() != group.table() {
        return Err(Error::Domain(format!(
            "codomain is not the product of cyclic groups {decomposition:?} in the standard encoding"
        )));
    }
    Ok(())
}

/// `f_m = φ_m ∘ f` into `ℤ_n`, `φ_m(a) = Σ a_j m_j (n / n_j) mod n`.
///
/// `f` is χ_m-constant (balanced) iff `f_m` is 1-constant (1-balanced).
pub fn abelian_reduce(f: &PromiseFunction, m: usize, decomposition: &[usize]) -> Result<PromiseFunction> {
    check_abelian_decomposition(f.codomain(), decomposition)?;
    let n: usize = decomposition.iter().product();
    if m >= n {
        return Err(Error::Index(format!("character {m} of a group of order {n}")));
    }
    let md = mixed_radix_digits(m, decomposition);
    let phi = |a: usize| {
        let ad = mixed_radix_digits(a, decomposition);
        decomposition
            .iter()
            .enumerate()
            .map(|(j, &nj)| ad[j] * md[j] * (n / nj))
            .sum::<usize>()
            % n
    };
    PromiseFunction::new(build_cyclic(n)?, f.image().iter().map(|&a| phi(a)).collect())
}

/// `f̄ = f mod v` for the character `k` of `ℤ_n`, with `d = gcd(k, n)`,
/// `k = ud`, `n = vd`.
#[derive(Debug, Clone, PartialEq)]
pub struct CyclicReduction {
    pub fbar: PromiseFunction,
    pub u: usize,
    pub v: usize,
    pub d: usize,
    /// `k = 0`: every function is 0-constant and none is 0-balanced.
    pub degenerate: bool,
}

fn cyclic_order(group: &FiniteGroup) -> Result<usize> {
    match group.kind() {
        GroupKind::Cyclic(n) => Ok(*n),
        _ => Err(Error::Unsupported("this operation needs a cyclic codomain".into())),
    }
}

pub fn cyclic_reduce(f: &PromiseFunction, k: usize) -> Result<CyclicReduction> {
    let n = cyclic_order(f.codomain())?;
    if k >= n {
        return Err(Error::Index(format!("character {k} of ℤ_{n}")));
    }
    let d = num_integer::gcd(k, n);
    let (u, v) = (k / d, n / d);
    let fbar = PromiseFunction::new(build_cyclic(v)?, f.image().iter().map(|&a| a % v).collect())?;
    Ok(CyclicReduction {
        fbar,
        u,
        v,
        d,
        degenerate: k == 0,
    })
}

/// Counts `p_t = |f⁻¹(t)|` for `f: X → ℤ_n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FunctionProfile {
    pub modulus: usize,
    pub counts: Vec<u64>,
}

impl FunctionProfile {
    pub fn new(modulus: usize, counts: Vec<u64>) -> Result<Self> {
        if modulus == 0 || counts.len() != modulus {
            return Err(Error::Domain(format!("{} counts for modulus {modulus}", counts.len())));
        }
        Ok(FunctionProfile { modulus, counts })
    }

    /// `P_f(x) = Σ p_t xᵗ`.
    pub fn polynomial(&self) -> IntPolynomial {
        IntPolynomial::from_i64s(&self.counts.iter().map(|&c| c as i64).collect::<Vec<_>>())
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// The function `X → ℤ_n` listing each `t` `p_t` times, ascending.
    pub fn canonical_function(&self) -> Result<PromiseFunction> {
        let image = self
            .counts
            .iter()
            .enumerate()
            .flat_map(|(t, &c)| std::iter::repeat_n(t, c as usize))
            .collect();
        PromiseFunction::new(build_cyclic(self.modulus)?, image)
    }
}

pub fn profile_polynomial(f: &PromiseFunction) -> Result<FunctionProfile> {
    let n = cyclic_order(f.codomain())?;
    FunctionProfile::new(n, f.fiber_sizes())
}

/// `Φ_n | P_f`, decided exactly.
pub fn is_one_balanced_exact(p: &FunctionProfile) -> Result<bool> {
    let phi = cyclotomic::cyclotomic_poly(p.modulus as u64)?;
    Ok(p.polynomial().is_divisible_by(&phi))
}

/// Classification at character `m` of an Abelian codomain by reduction to
/// `ℤ_v` and the exact divisibility test.
pub fn classify_polynomial(f: &PromiseFunction, m: usize) -> Result<Verdict> {
    let factors = f
        .codomain()
        .kind()
        .cyclic_factors()
        .ok_or_else(|| Error::Unsupported("polynomial route needs a product of cyclic groups".into()))?;
    let reduced = match f.codomain().kind() {
        GroupKind::Cyclic(_) => cyclic_reduce(f, m)?,
        _ => cyclic_reduce(&abelian_reduce(f, m, &factors)?, 1)?,
    };
    if reduced.fbar.is_constant() {
        return Ok(Verdict::Constant);
    }
    if is_one_balanced_exact(&profile_polynomial(&reduced.fbar)?)? {
        Ok(Verdict::Balanced)
    } else {
        Ok(Verdict::Neither)
    }
}

/// Multiplicity with which one coset of `K` is covered.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CosetCover {
    pub coset: Vec<usize>,
    /// Common fibre size over the coset, `None` if the sizes differ.
    pub multiplicity: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvenCoverReport {
    pub modulus: usize,
    pub subgroup: Vec<usize>,
    pub cosets: Vec<CosetCover>,
}

impl EvenCoverReport {
    pub fn all_even(&self) -> bool {
        self.cosets.iter().all(|c| c.multiplicity.is_some())
    }

    pub fn multiplicities(&self) -> Vec<Option<u64>> {
        self.cosets.iter().map(|c| c.multiplicity).collect()
    }
}

/// Per-coset fibre sizes of `f: X → ℤ_n` over `K = ⟨kgen⟩`.
pub fn even_cover_check(f: &PromiseFunction, kgen: usize) -> Result<EvenCoverReport> {
    let n = cyclic_order(f.codomain())?;
    if kgen >= n {
        return Err(Error::Index(format!("generator {kgen} of ℤ_{n}")));
    }
    let sub = group::subgroup_generated(f.codomain(), &[kgen])?;
    let counts = f.fiber_sizes();
    let cosets = group::cosets(f.codomain(), &sub)
        .into_iter()
        .map(|coset| {
            let first = counts[coset[0]];
            let multiplicity = coset.iter().all(|&t| counts[t] == first).then_some(first);
            CosetCover { coset, multiplicity }
        })
        .collect();
    Ok(EvenCoverReport {
        modulus: n,
        subgroup: sub.members().to_vec(),
        cosets,
    })
}

/// One block of an even-cover partition: `f` restricted to `domain`
/// covers each coset `t + K` of `K = ⟨n/prime⟩` exactly
/// `multiplicities[t]` times.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverPart {
    pub prime: u64,
    pub subgroup_generator: usize,
    pub domain: Vec<usize>,
    pub multiplicities: Vec<u64>,
}

impl CoverPart {
    /// `N`: the number of times each covered coset is hit, summed.
    pub fn cover_count(&self) -> u64 {
        self.multiplicities.iter().sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvenCoverPartition {
    pub modulus: usize,
    pub parts: Vec<CoverPart>,
}

fn coefficients_u64(p: &IntPolynomial, len: usize) -> Result<Vec<u64>> {
    (0..len)
        .map(|e| {
            u64::try_from(p.coeff(e)).map_err(|_| Error::Inconsistent("decomposition coefficient out of range".into()))
        })
        .collect()
}

/// Splits the domain of a 1-balanced `f: X → ℤ_n`, `n = p^α q^β`, into
/// `X_p` and `X_q` evenly covering the cosets of `K_p = ⟨n/p⟩` and
/// `K_q = ⟨n/q⟩` respectively. Each fibre gives its lowest domain points
/// to `X_p`.
pub fn even_cover_decompose(f: &PromiseFunction) -> Result<EvenCoverPartition> {
    let n = cyclic_order(f.codomain())?;
    if n < 2 {
        return Err(Error::Domain("even cover needs n ≥ 2".into()));
    }
    let profile = profile_polynomial(f)?;
    let dec = dephi_decompose(&profile.polynomial(), n as u64)?;
    let np = n / dec.p as usize;
    let u = coefficients_u64(&dec.s1, np)?;
    let (Some(q), Some(s2)) = (dec.q, &dec.s2) else {
        return Ok(EvenCoverPartition {
            modulus: n,
            parts: vec![CoverPart {
                prime: dec.p,
                subgroup_generator: np,
                domain: (0..f.domain_size()).collect(),
                multiplicities: u,
            }],
        });
    };
    let nq = n / q as usize;
    let v = coefficients_u64(s2, nq)?;
    let (mut xp, mut xq) = (Vec::new(), Vec::new());
    for t in 0..n {
        let fiber = f.fiber(t);
        let (a, b) = (u[t % np] as usize, v[t % nq] as usize);
        if fiber.len() != a + b {
            return Err(Error::Inconsistent(format!("fibre of {t} does not split as {a} + {b}")));
        }
        xp.extend_from_slice(&fiber[..a]);
        xq.extend_from_slice(&fiber[a..]);
    }
    xp.sort_unstable();
    xq.sort_unstable();
    Ok(EvenCoverPartition {
        modulus: n,
        parts: vec![
            CoverPart {
                prime: dec.p,
                subgroup_generator: np,
                domain: xp,
                multiplicities: u,
            },
            CoverPart {
                prime: q,
                subgroup_generator: nq,
                domain: xq,
                multiplicities: v,
            },
        ],
    })
}
