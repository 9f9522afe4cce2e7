//! Unitary irreducible representations and the indexing bijection `β`.
//!
//! Indices in this module are zero-based: the external triple `(i, j, k)`
//! (row, column, irrep, all from 1) is [`EntryIndex`] `{ irrep: k-1, row:
//! i-1, col: j-1 }`. The JSON formats and the CLI use the one-based form.

use std::collections::HashMap;
use std::fmt;

use nalgebra::SymmetricEigen;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::group::{self, a4_word_matrix, FiniteGroup, GroupKind, A4_WORDS};
use crate::linalg::{self, root_of_unity, CMatrix, ONE, ZERO};
use crate::{Error, Result, DEFAULT_TOL};

/// Position of a matrix entry: irrep `irrep`, row `row`, column `col`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct EntryIndex {
    pub irrep: usize,
    pub row: usize,
    pub col: usize,
}

impl EntryIndex {
    pub fn new(irrep: usize, row: usize, col: usize) -> Self {
        EntryIndex { irrep, row, col }
    }

    /// From the one-based `(i, j, k)` triple.
    pub fn from_one_based(i: usize, j: usize, k: usize) -> Result<Self> {
        if i == 0 || j == 0 || k == 0 {
            return Err(Error::Index(format!("({i},{j},{k}) must be one-based")));
        }
        Ok(EntryIndex::new(k - 1, i - 1, j - 1))
    }

    /// The one-based `(i, j, k)` triple.
    pub fn one_based(&self) -> [usize; 3] {
        [self.row + 1, self.col + 1, self.irrep + 1]
    }
}

impl fmt::Display for EntryIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [i, j, k] = self.one_based();
        write!(f, "({i},{j},{k})")
    }
}

/// A matrix representation: one `dim × dim` matrix per group element.
#[derive(Debug, Clone, PartialEq)]
pub struct Representation {
    dim: usize,
    matrices: Vec<CMatrix>,
}

impl Representation {
    /// Validates `ρ(g)ρ(h) = ρ(gh)` and `ρ(1) = I` within `tol` (scaled by the
    /// size of the entries, so non-unitary input is judged fairly).
    pub fn new(group: &FiniteGroup, matrices: Vec<CMatrix>, tol: f64) -> Result<Self> {
        let rep = Self::from_matrices_unchecked(matrices)?;
        rep.check_homomorphism(group, tol)?;
        Ok(rep)
    }

    pub(crate) fn from_matrices_unchecked(matrices: Vec<CMatrix>) -> Result<Self> {
        let dim = matrices
            .first()
            .map(|m| m.nrows())
            .ok_or_else(|| Error::InvalidRepresentation("no matrices".into()))?;
        if dim == 0 || matrices.iter().any(|m| m.nrows() != dim || m.ncols() != dim) {
            return Err(Error::InvalidRepresentation(
                "matrices must all be square of the same positive size".into(),
            ));
        }
        Ok(Representation { dim, matrices })
    }

    pub fn trivial(group: &FiniteGroup) -> Self {
        Representation {
            dim: 1,
            matrices: vec![CMatrix::from_element(1, 1, ONE); group.order()],
        }
    }

    fn check_homomorphism(&self, group: &FiniteGroup, tol: f64) -> Result<()> {
        if self.matrices.len() != group.order() {
            return Err(Error::InvalidRepresentation(format!(
                "{} matrices for a group of order {}",
                self.matrices.len(),
                group.order()
            )));
        }
        let scale = self
            .matrices
            .iter()
            .flat_map(|m| m.iter())
            .map(|z| z.norm())
            .fold(1.0, f64::max);
        let tol = tol * scale * scale;
        let id = CMatrix::identity(self.dim, self.dim);
        if linalg::max_abs_diff(&self.matrices[group.identity()], &id) > tol {
            return Err(Error::InvalidRepresentation(
                "ρ(identity) is not the identity matrix".into(),
            ));
        }
        for a in group.elements() {
            for b in group.elements() {
                let prod = &self.matrices[a] * &self.matrices[b];
                let dev = linalg::max_abs_diff(&prod, &self.matrices[group.mul(a, b)]);
                if dev > tol {
                    return Err(Error::InvalidRepresentation(format!(
                        "ρ({a})ρ({b}) ≠ ρ({a}·{b}) (deviation {dev:.3e})"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self, g: usize) -> &CMatrix {
        &self.matrices[g]
    }

    pub fn matrices(&self) -> &[CMatrix] {
        &self.matrices
    }

    pub fn character(&self, g: usize) -> Complex64 {
        linalg::trace(&self.matrices[g])
    }

    pub fn characters(&self) -> Vec<Complex64> {
        self.matrices.iter().map(linalg::trace).collect()
    }

    /// Largest `|ρ(g)ρ(g)* - I|` entry over the group.
    pub fn unitarity_defect(&self) -> f64 {
        self.matrices.iter().map(linalg::unitarity_defect).fold(0.0, f64::max)
    }

    /// `T⁻¹ρ(g)T` for every `g`.
    pub fn conjugate(&self, t: &CMatrix) -> Result<Self> {
        let t_inv = t
            .clone()
            .try_inverse()
            .ok_or_else(|| Error::Conditioning("conjugating matrix is singular".into()))?;
        Ok(Representation {
            dim: self.dim,
            matrices: self.matrices.iter().map(|m| &t_inv * m * t).collect(),
        })
    }

    /// Direct sum `ρ ⊕ σ`.
    pub fn direct_sum(&self, other: &Representation) -> Representation {
        let dim = self.dim + other.dim;
        let matrices = self
            .matrices
            .iter()
            .zip(&other.matrices)
            .map(|(a, b)| {
                let mut m = CMatrix::zeros(dim, dim);
                m.view_mut((0, 0), (self.dim, self.dim)).copy_from(a);
                m.view_mut((self.dim, self.dim), (other.dim, other.dim)).copy_from(b);
                m
            })
            .collect();
        Representation { dim, matrices }
    }
}

/// `(1/|G|) Σ_g |tr ρ(g)|²`; equals 1 exactly for irreducible `ρ`.
pub fn character_norm(group: &FiniteGroup, rho: &Representation) -> f64 {
    rho.matrices.iter().map(|m| linalg::trace(m).norm_sqr()).sum::<f64>() / group.order() as f64
}

pub fn is_irreducible(group: &FiniteGroup, rho: &Representation, tol: f64) -> bool {
    (character_norm(group, rho) - 1.0).abs() < tol
}

/// `(1/|G|) Σ_g χ_a(g) conj(χ_b(g))`.
pub fn character_inner_product(group: &FiniteGroup, a: &Representation, b: &Representation) -> Complex64 {
    a.matrices
        .iter()
        .zip(&b.matrices)
        .map(|(x, y)| linalg::trace(x) * linalg::trace(y).conj())
        .sum::<Complex64>()
        / group.order() as f64
}

/// Weyl's unitary trick: conjugates `rho` by the positive square root of
/// the group-averaged Gram matrix so that every `ρ_U(g)` is unitary.
///
/// With `C = Σ_g ρ(g)ρ(g)*` we have `ρ(g) C ρ(g)* = C`; writing `C = R²`
/// for Hermitian positive `R`, the representation `R⁻¹ρR` is unitary.
pub fn weyl_unitarize(group: &FiniteGroup, rho: &Representation, tol: f64) -> Result<Representation> {
    rho.check_homomorphism(group, tol)?;
    let n = rho.dim;
    let mut c = CMatrix::zeros(n, n);
    for m in &rho.matrices {
        c += m * m.adjoint();
    }
    let c_norm = c.norm();
    let eigen = SymmetricEigen::new(c.clone());
    let v = &eigen.eigenvectors;
    let d = &eigen.eigenvalues;
    let rebuilt = v * CMatrix::from_diagonal(&d.map(|x| Complex64::new(x, 0.0))) * v.adjoint();
    let residual = (&c - rebuilt).norm();
    if residual > 1e-10 * c_norm {
        return Err(Error::Conditioning(format!(
            "eigendecomposition residual {residual:.3e} exceeds 1e-10·‖C‖"
        )));
    }
    let (lo, hi) = d
        .iter()
        .fold((f64::INFINITY, 0.0f64), |(lo, hi), &x| (lo.min(x), hi.max(x)));
    // written negated so a NaN ratio is rejected too
    #[allow(clippy::neg_cmp_op_on_partial_ord)]
    if !(lo > 1e-12 * hi) {
        return Err(Error::Conditioning(format!(
            "invariant Gram matrix is near-singular (eigenvalues in [{lo:.3e}, {hi:.3e}])"
        )));
    }
    let diag = |f: fn(f64) -> f64| CMatrix::from_diagonal(&d.map(|x| Complex64::new(f(x), 0.0)));
    let r = v * diag(f64::sqrt) * v.adjoint();
    let r_inv = v * diag(|x| 1.0 / x.sqrt()) * v.adjoint();
    let matrices: Vec<CMatrix> = rho.matrices.iter().map(|m| &r_inv * m * &r).collect();
    let out = Representation { dim: n, matrices };
    let defect = out.unitarity_defect();
    if defect > tol {
        return Err(Error::Conditioning(format!(
            "unitarized matrices deviate from unitary by {defect:.3e}"
        )));
    }
    Ok(out)
}

/// A validated complete family of inequivalent unitary irreps together
/// with the bijection `β` from group elements to matrix-entry positions.
#[derive(Debug, Clone)]
pub struct IrrepSet {
    group: FiniteGroup,
    irreps: Vec<Representation>,
    beta: Vec<EntryIndex>,
    beta_inv: HashMap<EntryIndex, usize>,
}

/// Default `β`: identity ↦ `(0,0,0)`, the other elements in index order ↦
/// the remaining positions sorted by `(irrep, row, col)`.
pub fn default_beta(group: &FiniteGroup, dims: &[usize]) -> Vec<EntryIndex> {
    let positions = dims
        .iter()
        .enumerate()
        .flat_map(|(k, &d)| (0..d).flat_map(move |i| (0..d).map(move |j| EntryIndex::new(k, i, j))));
    let mut rest = positions.skip(1);
    group
        .elements()
        .map(|g| {
            if g == group.identity() {
                EntryIndex::new(0, 0, 0)
            } else {
                rest.next().expect("dimension count matches group order")
            }
        })
        .collect()
}

impl IrrepSet {
    /// Validates and assembles an irrep family. `beta = None` selects
    /// [`default_beta`].
    ///
    /// Checks: homomorphism, unitarity and irreducibility of each member;
    /// the first member is trivial; pairwise inequivalence through
    /// characters; `Σ dim² = |G|`; `β` is a bijection with `β(1) = (0,0,0)`.
    pub fn new(
        group: FiniteGroup,
        irreps: Vec<Representation>,
        beta: Option<Vec<EntryIndex>>,
        tol: f64,
    ) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidRepresentation(msg));
        if irreps.is_empty() {
            return bad("empty irrep list".into());
        }
        for (k, rho) in irreps.iter().enumerate() {
            rho.check_homomorphism(&group, tol)?;
            let defect = rho.unitarity_defect();
            if defect > tol {
                return bad(format!("irrep {} is not unitary (defect {defect:.3e})", k + 1));
            }
            let norm = character_norm(&group, rho);
            if (norm - 1.0).abs() > tol {
                return bad(format!("irrep {} is reducible (character norm {norm:.6})", k + 1));
            }
        }
        let first = &irreps[0];
        if first.dim != 1 || first.matrices.iter().any(|m| (m[(0, 0)] - ONE).norm() > tol) {
            return bad("the first irrep must be the trivial representation".into());
        }
        for a in 0..irreps.len() {
            for b in 0..a {
                let ip = character_inner_product(&group, &irreps[a], &irreps[b]).norm();
                if ip > tol {
                    return bad(format!("irreps {} and {} are equivalent", b + 1, a + 1));
                }
            }
        }
        let dims: Vec<usize> = irreps.iter().map(|r| r.dim).collect();
        let total: usize = dims.iter().map(|d| d * d).sum();
        if total != group.order() {
            return bad(format!("Σ dim² = {total} but |G| = {}", group.order()));
        }
        let beta = beta.unwrap_or_else(|| default_beta(&group, &dims));
        if beta.len() != group.order() {
            return bad(format!("β has {} entries for {} elements", beta.len(), group.order()));
        }
        let mut beta_inv = HashMap::with_capacity(beta.len());
        for (g, e) in beta.iter().enumerate() {
            if e.irrep >= dims.len() || e.row >= dims[e.irrep] || e.col >= dims[e.irrep] {
                return bad(format!("β({g}) = {e} is not a valid position"));
            }
            if beta_inv.insert(*e, g).is_some() {
                return bad(format!("β is not injective at {e}"));
            }
        }
        if beta[group.identity()] != EntryIndex::new(0, 0, 0) {
            return bad("β must send the identity to (1,1,1)".into());
        }
        Ok(IrrepSet {
            group,
            irreps,
            beta,
            beta_inv,
        })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn irreps(&self) -> &[Representation] {
        &self.irreps
    }

    pub fn irrep(&self, k: usize) -> &Representation {
        &self.irreps[k]
    }

    pub fn len(&self) -> usize {
        self.irreps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.irreps.is_empty()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.irreps.iter().map(|r| r.dim).collect()
    }

    pub fn beta(&self, g: usize) -> EntryIndex {
        self.beta[g]
    }

    pub fn beta_table(&self) -> &[EntryIndex] {
        &self.beta
    }

    /// The element `h` with `β(h) = idx`.
    pub fn element_at(&self, idx: EntryIndex) -> Option<usize> {
        self.beta_inv.get(&idx).copied()
    }

    pub fn check_position(&self, irrep: usize, row: usize) -> Result<()> {
        if irrep >= self.irreps.len() {
            return Err(Error::Index(format!("irrep {} of {}", irrep + 1, self.irreps.len())));
        }
        if row >= self.irreps[irrep].dim {
            return Err(Error::Index(format!(
                "row {} of a {}-dimensional irrep",
                row + 1,
                self.irreps[irrep].dim
            )));
        }
        Ok(())
    }

    /// `√(dim ρᵏ / |G|)`.
    pub fn scale(&self, irrep: usize) -> f64 {
        (self.irreps[irrep].dim as f64 / self.group.order() as f64).sqrt()
    }

    /// `ρᵏᵢⱼ(h)`.
    pub fn rho(&self, irrep: usize, row: usize, col: usize, h: usize) -> Complex64 {
        self.irreps[irrep].matrices[h][(row, col)]
    }

    /// `τᵏᵢⱼ(h) = √(dim ρᵏ / |G|) · ρᵏᵢⱼ(h)`.
    pub fn tau(&self, irrep: usize, row: usize, col: usize, h: usize) -> Complex64 {
        self.rho(irrep, row, col, h) * self.scale(irrep)
    }

    /// `τ_G^g(x)`: the normalised matrix entry selected by `β(g)`.
    pub fn tau_entry(&self, g: usize, x: usize) -> Complex64 {
        let e = self.beta[g];
        self.tau(e.irrep, e.row, e.col, x)
    }

    pub fn is_trivial_irrep(&self, irrep: usize) -> bool {
        irrep == 0
    }
}

/// Outcome of checking `⟨τ^{g₁}, τ^{g₂}⟩ = δ` over all pairs.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SchurReport {
    pub max_deviation: f64,
    pub pairs_checked: usize,
    /// Pairs whose deviation exceeds the tolerance (at most 32 listed).
    pub failures: Vec<(usize, usize, f64)>,
}

impl SchurReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn verify_schur(set: &IrrepSet, tol: f64) -> SchurReport {
    let n = set.group.order();
    let t = CMatrix::from_fn(n, n, |g, x| set.tau_entry(g, x));
    let gram = &t * t.adjoint();
    let mut report = SchurReport {
        max_deviation: 0.0,
        pairs_checked: n * n,
        failures: Vec::new(),
    };
    for a in 0..n {
        for b in 0..n {
            let target = if a == b { ONE } else { ZERO };
            let dev = (gram[(a, b)] - target).norm();
            report.max_deviation = report.max_deviation.max(dev);
            if dev > tol && report.failures.len() < 32 {
                report.failures.push((a, b, dev));
            }
        }
    }
    report
}

/// Mixed-radix digits of `g` for the factor orders `factors` (most
/// significant first), matching the direct-product encoding.
pub fn mixed_radix_digits(mut g: usize, factors: &[usize]) -> Vec<usize> {
    let mut digits = vec![0; factors.len()];
    for (d, &n) in digits.iter_mut().zip(factors).rev() {
        *d = g % n;
        g /= n;
    }
    digits
}

/// Characters of `⊕ ℤ_{n_j}`: `χ_m(a) = Π exp(2πi a_j m_j / n_j)`, with
/// `β(m) = (0, 0, m)`.
pub fn irreps_of_abelian(group: &FiniteGroup, decomposition: &[usize]) -> Result<IrrepSet> {
    if decomposition.is_empty() || decomposition.contains(&0) {
        return Err(Error::InvalidRepresentation(
            "decomposition needs positive factors".into(),
        ));
    }
    let matches_kind = group.kind().cyclic_factors().as_deref() == Some(decomposition);
    if !matches_kind {
        let reference = group::build_abelian(decomposition)?;
        if reference.table() != group.table() {
            return Err(Error::InvalidRepresentation(format!(
                "group is not the product of cyclic groups {decomposition:?} in the standard encoding"
            )));
        }
    }
    let n: usize = decomposition.iter().product();
    let digits: Vec<Vec<usize>> = (0..n).map(|g| mixed_radix_digits(g, decomposition)).collect();
    let irreps = (0..n)
        .map(|m| {
            let matrices = (0..n)
                .map(|a| {
                    let exponent: usize = decomposition
                        .iter()
                        .enumerate()
                        .map(|(j, &nj)| digits[a][j] * digits[m][j] * (n / nj))
                        .sum();
                    CMatrix::from_element(1, 1, root_of_unity((exponent % n) as i64, n as u64))
                })
                .collect();
            Representation { dim: 1, matrices }
        })
        .collect();
    IrrepSet::new(group.clone(), irreps, None, DEFAULT_TOL)
}

fn one_dim(values: impl IntoIterator<Item = Complex64>) -> Representation {
    Representation {
        dim: 1,
        matrices: values.into_iter().map(|v| CMatrix::from_element(1, 1, v)).collect(),
    }
}

fn dihedral_irreps(n: usize) -> Vec<Representation> {
    let sign = |refl: bool| if refl { -ONE } else { ONE };
    let elements: Vec<(bool, usize)> = (0..2 * n).map(|x| (x >= n, x % n)).collect();
    let mut out = vec![
        one_dim(elements.iter().map(|_| ONE)),
        one_dim(elements.iter().map(|&(s, _)| sign(s))),
    ];
    if n.is_multiple_of(2) {
        let alt = |a: usize| if a % 2 == 1 { -ONE } else { ONE };
        out.push(one_dim(elements.iter().map(|&(_, a)| alt(a))));
        out.push(one_dim(elements.iter().map(|&(s, a)| alt(a) * sign(s))));
    }
    for h in 1..=(n - 1) / 2 {
        let matrices = elements
            .iter()
            .map(|&(refl, a)| {
                let w = root_of_unity((h * a) as i64, n as u64);
                if refl {
                    CMatrix::from_row_slice(2, 2, &[ZERO, w, w.conj(), ZERO])
                } else {
                    CMatrix::from_row_slice(2, 2, &[w, ZERO, ZERO, w.conj()])
                }
            })
            .collect();
        out.push(Representation { dim: 2, matrices });
    }
    out
}

fn permutation_sign(p: &[usize]) -> i32 {
    let inversions = (0..p.len())
        .flat_map(|i| (i + 1..p.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| p[i] > p[j])
        .count();
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Orthonormal basis of the sum-zero subspace of `ℝ^m` (Helmert columns).
fn helmert(m: usize) -> CMatrix {
    let mut q = CMatrix::zeros(m, m - 1);
    for k in 1..m {
        let norm = ((k * (k + 1)) as f64).sqrt();
        for i in 0..k {
            q[(i, k - 1)] = Complex64::new(1.0 / norm, 0.0);
        }
        q[(k, k - 1)] = Complex64::new(-(k as f64) / norm, 0.0);
    }
    q
}

/// The standard (m-1)-dimensional irrep of `S_m` on the sum-zero subspace.
fn standard_matrix(p: &[usize], q: &CMatrix) -> CMatrix {
    let m = p.len();
    let mut perm = CMatrix::zeros(m, m);
    for (i, &pi) in p.iter().enumerate() {
        perm[(pi, i)] = ONE;
    }
    q.transpose() * perm * q
}

fn symmetric_irreps(m: usize) -> Result<Vec<Representation>> {
    let perms = group::permutations(m);
    let trivial = one_dim(perms.iter().map(|_| ONE));
    let sign_values: Vec<Complex64> = perms
        .iter()
        .map(|p| Complex64::new(permutation_sign(p) as f64, 0.0))
        .collect();
    let sign = one_dim(sign_values.iter().copied());
    let standard = |q: &CMatrix| Representation {
        dim: m - 1,
        matrices: perms.iter().map(|p| standard_matrix(p, q)).collect(),
    };
    match m {
        1 => Ok(vec![trivial]),
        2 => Ok(vec![trivial, sign]),
        3 => Ok(vec![trivial, sign, standard(&helmert(3))]),
        4 => {
            // S₄ acts on the three ways of pairing {0,1,2,3}; composing with
            // the standard irrep of S₃ gives the 2-dimensional irrep.
            let pairings = [[[0, 1], [2, 3]], [[0, 2], [1, 3]], [[0, 3], [1, 2]]];
            let canon = |pr: [[usize; 2]; 2]| {
                let mut a = [pr[0][0].min(pr[0][1]), pr[0][0].max(pr[0][1])];
                let mut b = [pr[1][0].min(pr[1][1]), pr[1][0].max(pr[1][1])];
                if a > b {
                    std::mem::swap(&mut a, &mut b);
                }
                [a, b]
            };
            let q3 = helmert(3);
            let two_dim = perms
                .iter()
                .map(|p| {
                    let induced: Vec<usize> = pairings
                        .iter()
                        .map(|pr| {
                            let image = canon([[p[pr[0][0]], p[pr[0][1]]], [p[pr[1][0]], p[pr[1][1]]]]);
                            pairings.iter().position(|x| *x == image).expect("pairing image")
                        })
                        .collect();
                    standard_matrix(&induced, &q3)
                })
                .collect();
            let std4 = standard(&helmert(4));
            let twisted = Representation {
                dim: 3,
                matrices: std4.matrices.iter().zip(&sign_values).map(|(m, s)| m * *s).collect(),
            };
            Ok(vec![
                trivial,
                sign,
                Representation {
                    dim: 2,
                    matrices: two_dim,
                },
                std4,
                twisted,
            ])
        }
        _ => Err(Error::Unsupported(format!("no built-in irreps for S_{m}"))),
    }
}

fn alternating4_irreps() -> Vec<Representation> {
    // exponent of N in each word, mod 3
    let n_count = |w: &str| -> usize {
        let mut total = 0;
        let mut chars = w.chars().peekable();
        while let Some(c) = chars.next() {
            if c == 'N' {
                total += match chars.peek().and_then(|d| d.to_digit(10)) {
                    Some(p) => {
                        chars.next();
                        p as usize
                    }
                    None => 1,
                };
            }
        }
        total % 3
    };
    let trivial = one_dim(A4_WORDS.iter().map(|_| ONE));
    let omega = one_dim(A4_WORDS.iter().map(|w| root_of_unity(n_count(w) as i64, 3)));
    let omega2 = one_dim(A4_WORDS.iter().map(|w| root_of_unity(2 * n_count(w) as i64, 3)));
    let three = Representation {
        dim: 3,
        matrices: A4_WORDS
            .iter()
            .map(|w| {
                let m = a4_word_matrix(w);
                CMatrix::from_fn(3, 3, |i, j| Complex64::new(m[i][j] as f64, 0.0))
            })
            .collect(),
    };
    vec![trivial, omega, omega2, three]
}

/// Rebuilds the group described by a structured kind.
pub fn group_from_kind(kind: &GroupKind) -> Result<FiniteGroup> {
    match kind {
        GroupKind::Cyclic(n) => group::build_cyclic(*n),
        GroupKind::Product(a, b) => group::build_direct_product(&group_from_kind(a)?, &group_from_kind(b)?),
        GroupKind::Dihedral(n) => group::build_dihedral(*n),
        GroupKind::Symmetric(m) => group::build_symmetric(*m),
        GroupKind::Alternating4 => group::build_alternating4(),
        GroupKind::Table => Err(Error::Unsupported("a table group has no structural description".into())),
    }
}

fn kind_irreps(kind: &GroupKind) -> Result<Vec<Representation>> {
    match kind {
        GroupKind::Cyclic(_) | GroupKind::Product(..) if kind.cyclic_factors().is_some() => {
            let factors = kind.cyclic_factors().expect("checked");
            let g = group_from_kind(kind)?;
            Ok(irreps_of_abelian(&g, &factors)?.irreps)
        }
        GroupKind::Product(a, b) => {
            // irreps of A × B are the tensor products ρ ⊗ σ
            let (ga, gb) = (group_from_kind(a)?, group_from_kind(b)?);
            let (ra, rb) = (kind_irreps(a)?, kind_irreps(b)?);
            let nb = gb.order();
            let mut out = Vec::with_capacity(ra.len() * rb.len());
            for x in &ra {
                for y in &rb {
                    let matrices = (0..ga.order() * nb)
                        .map(|g| linalg::kron(&x.matrices[g / nb], &y.matrices[g % nb]))
                        .collect();
                    out.push(Representation {
                        dim: x.dim * y.dim,
                        matrices,
                    });
                }
            }
            Ok(out)
        }
        GroupKind::Dihedral(n) => Ok(dihedral_irreps(*n)),
        GroupKind::Symmetric(m) => symmetric_irreps(*m),
        GroupKind::Alternating4 => Ok(alternating4_irreps()),
        GroupKind::Cyclic(_) | GroupKind::Table => Err(Error::Unsupported(
            "no built-in irreps for a group given only by its table".into(),
        )),
    }
}

/// Built-in irreps for cyclic groups, products of groups with built-in
/// irreps, dihedral groups, `S₁…S₄` and `A₄`, validated before return.
///
/// Orders: for `S₃ = D₃` trivial, alternating, 2-dimensional; for `A₄`
/// trivial, `N ↦ ω`, `N ↦ ω²`, then the 3-dimensional realisation.
pub fn builtin_irreps(group: &FiniteGroup) -> Result<IrrepSet> {
    if let Some(factors) = group.kind().cyclic_factors() {
        return irreps_of_abelian(group, &factors);
    }
    let irreps = kind_irreps(group.kind())?;
    IrrepSet::new(group.clone(), irreps, None, DEFAULT_TOL)
}
