//! Finite groups stored as dense multiplication tables.
//!
//! Elements are plain indices `0..order`. Each constructor fixes an encoding
//! so that labels, the indexing bijection of the irreps and test vectors are
//! reproducible:
//!
//! - `ℤ_n`: index `a` is the residue `a`.
//! - `A × B`: the pair `(i, j)` is index `i·|B| + j`.
//! - `D_n`: index `a < n` is `rᵃ`, index `n + a` is `rᵃs`.
//! - `S_m`: permutations of `0..m` in lexicographic order of one-line
//!   notation; the product `a·b` is the composition `a ∘ b` (apply `b` first).
//! - `A₄`: the twelve words `I, N, N², R, RN, …, N²RN²` in that order.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Largest order for which associativity is checked on every triple.
pub const EXHAUSTIVE_CHECK_LIMIT: usize = 256;

/// Largest order accepted at all.
pub const MAX_ORDER: usize = 1024;

/// How a group was built. Built-in irreps are only available for the
/// structured kinds.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum GroupKind {
    Cyclic(usize),
    Product(Box<GroupKind>, Box<GroupKind>),
    Dihedral(usize),
    Symmetric(usize),
    Alternating4,
    Table,
}

impl GroupKind {
    /// Orders of the cyclic factors if this is an iterated product of cyclic
    /// groups, most significant factor first.
    pub fn cyclic_factors(&self) -> Option<Vec<usize>> {
        match self {
            GroupKind::Cyclic(n) => Some(vec![*n]),
            GroupKind::Product(a, b) => {
                let mut f = a.cyclic_factors()?;
                f.extend(b.cyclic_factors()?);
                Some(f)
            }
            _ => None,
        }
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    mul_table: Vec<usize>,
    identity: usize,
    inv_table: Vec<usize>,
    labels: Vec<String>,
    kind: GroupKind,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("order", &self.order)
            .field("kind", &self.kind)
            .finish()
    }
}

impl FiniteGroup {
    /// Builds a group from a row-major table `mul[a][b] = a·b`.
    ///
    /// The identity and inverses are located from the table; every group
    /// axiom is checked (associativity exhaustively up to
    /// [`EXHAUSTIVE_CHECK_LIMIT`], by seeded spot checks above it).
    pub fn from_table(mul: Vec<Vec<usize>>, labels: Option<Vec<String>>, kind: GroupKind) -> Result<Self> {
        let order = mul.len();
        if order == 0 {
            return Err(Error::InvalidOrder("a group needs at least one element".into()));
        }
        if order > MAX_ORDER {
            return Err(Error::InvalidOrder(format!("order {order} exceeds {MAX_ORDER}")));
        }
        let mut mul_table = Vec::with_capacity(order * order);
        for (a, row) in mul.iter().enumerate() {
            if row.len() != order {
                return Err(Error::InvalidGroup(format!(
                    "row {a} has {} entries, expected {order}",
                    row.len()
                )));
            }
            for (b, &c) in row.iter().enumerate() {
                if c >= order {
                    return Err(Error::InvalidGroup(format!(
                        "closure: entry ({a}, {b}) = {c} is not an element"
                    )));
                }
                mul_table.push(c);
            }
        }
        let labels = match labels {
            Some(l) if l.len() != order => {
                return Err(Error::InvalidGroup(format!("{} labels for {order} elements", l.len())))
            }
            Some(l) => l,
            None => (0..order).map(|i| i.to_string()).collect(),
        };
        let at = |a: usize, b: usize| mul_table[a * order + b];
        let identity = (0..order)
            .find(|&e| (0..order).all(|g| at(e, g) == g && at(g, e) == g))
            .ok_or_else(|| Error::InvalidGroup("no identity element".into()))?;
        let mut inv_table = Vec::with_capacity(order);
        for g in 0..order {
            let inv = (0..order)
                .find(|&h| at(g, h) == identity && at(h, g) == identity)
                .ok_or_else(|| Error::InvalidGroup(format!("element {g} has no inverse")))?;
            inv_table.push(inv);
        }
        let group = FiniteGroup {
            order,
            mul_table,
            identity,
            inv_table,
            labels,
            kind,
        };
        group.validate()?;
        Ok(group)
    }

    /// Checks closure, identity, inverse and associativity laws.
    pub fn validate(&self) -> Result<()> {
        let n = self.order;
        if self.mul_table.len() != n * n || self.inv_table.len() != n || self.labels.len() != n {
            return Err(Error::InvalidGroup("table sizes do not match the order".into()));
        }
        if let Some(&c) = self.mul_table.iter().find(|&&c| c >= n) {
            return Err(Error::InvalidGroup(format!("closure: {c} is not an element")));
        }
        for g in 0..n {
            if self.mul(self.identity, g) != g || self.mul(g, self.identity) != g {
                return Err(Error::InvalidGroup(format!("identity law fails at {g}")));
            }
            if self.mul(g, self.inv(g)) != self.identity {
                return Err(Error::InvalidGroup(format!("inverse law fails at {g}")));
            }
        }
        if n <= EXHAUSTIVE_CHECK_LIMIT {
            for a in 0..n {
                for b in 0..n {
                    let ab = self.mul(a, b);
                    for c in 0..n {
                        if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                            return Err(Error::NotAssociative { a, b, c });
                        }
                    }
                }
            }
        } else {
            let mut rng = StdRng::seed_from_u64(0x5eed);
            for _ in 0..100_000 {
                let (a, b, c) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
                if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                    return Err(Error::NotAssociative { a, b, c });
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul_table[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, g: usize) -> usize {
        self.inv_table[g]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, g: usize) -> &str {
        &self.labels[g]
    }

    pub fn kind(&self) -> &GroupKind {
        &self.kind
    }

    pub fn element_by_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// The multiplication table as nested rows.
    pub fn table(&self) -> Vec<Vec<usize>> {
        self.mul_table.chunks(self.order).map(<[usize]>::to_vec).collect()
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    /// `gᵏ` for `k ≥ 0`.
    pub fn pow(&self, g: usize, k: usize) -> usize {
        (0..k).fold(self.identity, |acc, _| self.mul(acc, g))
    }
}

/// `ℤ_n` under addition.
pub fn build_cyclic(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::InvalidOrder("cyclic group of order 0".into()));
    }
    if n > MAX_ORDER {
        return Err(Error::InvalidOrder(format!("order {n} exceeds {MAX_ORDER}")));
    }
    let mul = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
    FiniteGroup::from_table(mul, None, GroupKind::Cyclic(n))
}

/// `A × B` with componentwise multiplication; `(i, j)` is encoded as `i·|B| + j`.
pub fn build_direct_product(a: &FiniteGroup, b: &FiniteGroup) -> Result<FiniteGroup> {
    let (na, nb) = (a.order(), b.order());
    if na * nb > MAX_ORDER {
        return Err(Error::InvalidOrder(format!("order {} exceeds {MAX_ORDER}", na * nb)));
    }
    let split = |x: usize| (x / nb, x % nb);
    let n = na * nb;
    let mul = (0..n)
        .map(|x| {
            let (x1, x2) = split(x);
            (0..n)
                .map(|y| {
                    let (y1, y2) = split(y);
                    a.mul(x1, y1) * nb + b.mul(x2, y2)
                })
                .collect()
        })
        .collect();
    let labels = (0..n)
        .map(|x| {
            let (x1, x2) = split(x);
            format!("({},{})", a.label(x1), b.label(x2))
        })
        .collect();
    let kind = GroupKind::Product(Box::new(a.kind().clone()), Box::new(b.kind().clone()));
    FiniteGroup::from_table(mul, Some(labels), kind)
}

/// Iterated product `ℤ_{n₁} × ℤ_{n₂} × …`.
pub fn build_abelian(factors: &[usize]) -> Result<FiniteGroup> {
    let (first, rest) = factors
        .split_first()
        .ok_or_else(|| Error::InvalidOrder("empty factor list".into()))?;
    rest.iter().try_fold(build_cyclic(*first)?, |acc, &n| {
        build_direct_product(&acc, &build_cyclic(n)?)
    })
}

/// The dihedral group of order `2n` generated by a rotation `r` and a
/// reflection `s` with `rⁿ = s² = 1`, `srs = r⁻¹`.
pub fn build_dihedral(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::InvalidOrder("dihedral group needs n ≥ 1".into()));
    }
    if 2 * n > MAX_ORDER {
        return Err(Error::InvalidOrder(format!("order {} exceeds {MAX_ORDER}", 2 * n)));
    }
    // (reflection?, rotation exponent)
    let decode = |x: usize| (x >= n, x % n);
    let encode = |refl: bool, a: usize| if refl { n + a } else { a };
    let mul = (0..2 * n)
        .map(|x| {
            let (sx, a) = decode(x);
            (0..2 * n)
                .map(|y| {
                    let (sy, b) = decode(y);
                    // rᵃsˣ · rᵇsʸ = r^{a ± b} s^{x+y}
                    let exp = if sx { (a + n - b) % n } else { (a + b) % n };
                    encode(sx ^ sy, exp)
                })
                .collect()
        })
        .collect();
    let rot = |a: usize| match a {
        0 => String::new(),
        1 => "r".to_string(),
        _ => format!("r{a}"),
    };
    let labels = (0..2 * n)
        .map(|x| {
            let (refl, a) = decode(x);
            match (refl, a) {
                (false, 0) => "1".to_string(),
                (false, _) => rot(a),
                (true, _) => format!("{}s", rot(a)),
            }
        })
        .collect();
    FiniteGroup::from_table(mul, Some(labels), GroupKind::Dihedral(n))
}

/// All permutations of `0..m` in lexicographic order of one-line notation.
pub fn permutations(m: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                rec(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::with_capacity(m), &mut vec![false; m], &mut out);
    out
}

/// The symmetric group `S_m` for `1 ≤ m ≤ 5`.
pub fn build_symmetric(m: usize) -> Result<FiniteGroup> {
    if m == 0 {
        return Err(Error::InvalidOrder("S_0 is not supported".into()));
    }
    if m > 5 {
        return Err(Error::Unsupported(format!(
            "S_{m} (order {}) is too large",
            (1..=m).product::<usize>()
        )));
    }
    let perms = permutations(m);
    let index: HashMap<&[usize], usize> = perms.iter().enumerate().map(|(i, p)| (p.as_slice(), i)).collect();
    let mul = perms
        .iter()
        .map(|a| {
            perms
                .iter()
                .map(|b| {
                    let ab: Vec<usize> = b.iter().map(|&x| a[x]).collect();
                    index[ab.as_slice()]
                })
                .collect()
        })
        .collect();
    let labels = perms
        .iter()
        .map(|p| p.iter().map(|d| d.to_string()).collect::<String>())
        .collect();
    FiniteGroup::from_table(mul, Some(labels), GroupKind::Symmetric(m))
}

/// 3×3 integer matrix used for the tetrahedral realisation of `A₄`.
pub type IntMat3 = [[i32; 3]; 3];

pub const A4_N: IntMat3 = [[0, 1, 0], [0, 0, 1], [1, 0, 0]];
pub const A4_R: IntMat3 = [[-1, 0, 0], [0, -1, 0], [0, 0, 1]];

/// Element words of `A₄` in the order used for indexing.
pub const A4_WORDS: [&str; 12] = [
    "I", "N", "N2", "R", "RN", "RN2", "NR", "NRN", "NRN2", "N2R", "N2RN", "N2RN2",
];

pub fn mat3_mul(a: &IntMat3, b: &IntMat3) -> IntMat3 {
    let mut c = [[0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            c[i][j] = (0..3).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    c
}

/// Evaluates a word such as `N2RN` as a product of the generator matrices.
pub fn a4_word_matrix(word: &str) -> IntMat3 {
    let identity = [[1, 0, 0], [0, 1, 0], [0, 0, 1]];
    if word == "I" {
        return identity;
    }
    let mut m = identity;
    let mut chars = word.chars().peekable();
    while let Some(c) = chars.next() {
        let gen = match c {
            'N' => A4_N,
            'R' => A4_R,
            other => panic!("unexpected letter {other:?} in A4 word"),
        };
        let power = match chars.peek() {
            Some(d) if d.is_ascii_digit() => {
                let p = d.to_digit(10).unwrap() as usize;
                chars.next();
                p
            }
            _ => 1,
        };
        for _ in 0..power {
            m = mat3_mul(&m, &gen);
        }
    }
    m
}

/// The alternating group `A₄` realised by the signed permutation matrices
/// generated by `N` and `R`, elements indexed in [`A4_WORDS`] order.
pub fn build_alternating4() -> Result<FiniteGroup> {
    let mats: Vec<IntMat3> = A4_WORDS.iter().map(|w| a4_word_matrix(w)).collect();
    let index = |m: &IntMat3| mats.iter().position(|x| x == m);
    let mut mul = Vec::with_capacity(12);
    for a in &mats {
        let mut row = Vec::with_capacity(12);
        for b in &mats {
            let ab = mat3_mul(a, b);
            row.push(
                index(&ab).ok_or_else(|| Error::InvalidGroup("A4 words are not closed under multiplication".into()))?,
            );
        }
        mul.push(row);
    }
    let labels = A4_WORDS.iter().map(|w| w.to_string()).collect();
    FiniteGroup::from_table(mul, Some(labels), GroupKind::Alternating4)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Subgroup {
    parent_order: usize,
    members: Vec<usize>,
}

impl Subgroup {
    /// Wraps a member set after checking it is a subgroup of `group`.
    pub fn new(group: &FiniteGroup, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let set: BTreeSet<usize> = members.into_iter().collect();
        if let Some(&g) = set.iter().find(|&&g| g >= group.order()) {
            return Err(Error::Index(format!("{g} is not an element")));
        }
        if !set.contains(&group.identity()) {
            return Err(Error::InvalidGroup("subset does not contain the identity".into()));
        }
        for &a in &set {
            if !set.contains(&group.inv(a)) {
                return Err(Error::InvalidGroup(format!("not closed under inverse at {a}")));
            }
            for &b in &set {
                if !set.contains(&group.mul(a, b)) {
                    return Err(Error::InvalidGroup(format!("not closed at ({a}, {b})")));
                }
            }
        }
        Ok(Subgroup {
            parent_order: group.order(),
            members: set.into_iter().collect(),
        })
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn parent_order(&self) -> usize {
        self.parent_order
    }

    pub fn contains(&self, g: usize) -> bool {
        self.members.binary_search(&g).is_ok()
    }
}

/// The smallest subgroup containing `gens`.
pub fn subgroup_generated(group: &FiniteGroup, gens: &[usize]) -> Result<Subgroup> {
    if let Some(&g) = gens.iter().find(|&&g| g >= group.order()) {
        return Err(Error::Index(format!("{g} is not an element")));
    }
    let mut members: BTreeSet<usize> = BTreeSet::from([group.identity()]);
    let mut frontier: Vec<usize> = vec![group.identity()];
    while let Some(x) = frontier.pop() {
        for &g in gens {
            let y = group.mul(x, g);
            if members.insert(y) {
                frontier.push(y);
            }
        }
    }
    // finite: closure under multiplication by generators already gives inverses
    Subgroup::new(group, members)
}

/// The right cosets `Sh` of `sub`, each sorted, ordered by least element.
pub fn cosets(group: &FiniteGroup, sub: &Subgroup) -> Vec<Vec<usize>> {
    let mut covered = vec![false; group.order()];
    let mut out = Vec::with_capacity(group.order() / sub.order().max(1));
    for h in group.elements() {
        if covered[h] {
            continue;
        }
        let mut coset: Vec<usize> = sub.members().iter().map(|&s| group.mul(s, h)).collect();
        coset.sort_unstable();
        for &x in &coset {
            covered[x] = true;
        }
        out.push(coset);
    }
    out
}
