//! JSON documents: group specs, irrep files, function specs and reports.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::group::{self, FiniteGroup, GroupKind};
use crate::linalg::CMatrix;
use crate::promise::{self, Classification, PromiseFunction, Verdict};
use crate::representation::{self, EntryIndex, IrrepSet, Representation};
use crate::{Error, Result};

pub const SCHEMA_VERSION: u32 = 1;

/// Wraps a report body with `schema_version` and `report` fields.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Versioned<T> {
    pub schema_version: u32,
    pub report: String,
    #[serde(flatten)]
    pub body: T,
}

impl<T> Versioned<T> {
    pub fn new(report: &str, body: T) -> Self {
        Versioned {
            schema_version: SCHEMA_VERSION,
            report: report.to_string(),
            body,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum GroupSpec {
    Cyclic {
        n: usize,
    },
    Dihedral {
        n: usize,
    },
    Symmetric {
        m: usize,
    },
    Alternating4,
    Product {
        factors: Vec<GroupSpec>,
    },
    Table {
        order: usize,
        mul: Vec<Vec<usize>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        labels: Option<Vec<String>>,
    },
}

impl GroupSpec {
    pub fn build(&self) -> Result<FiniteGroup> {
        match self {
            GroupSpec::Cyclic { n } => group::build_cyclic(*n),
            GroupSpec::Dihedral { n } => group::build_dihedral(*n),
            GroupSpec::Symmetric { m } => group::build_symmetric(*m),
            GroupSpec::Alternating4 => group::build_alternating4(),
            GroupSpec::Product { factors } => {
                let mut it = factors.iter();
                let first = it
                    .next()
                    .ok_or_else(|| Error::InvalidGroup("product needs at least one factor".into()))?
                    .build()?;
                it.try_fold(first, |acc, f| group::build_direct_product(&acc, &f.build()?))
            }
            GroupSpec::Table { order, mul, labels } => {
                if mul.len() != *order {
                    return Err(Error::InvalidGroup(format!(
                        "table has {} rows, order is {order}",
                        mul.len()
                    )));
                }
                FiniteGroup::from_table(mul.clone(), labels.clone(), GroupKind::Table)
            }
        }
    }
}

pub fn parse_group_spec(text: &str) -> Result<GroupSpec> {
    serde_json::from_str(text).map_err(|e| Error::Parse(format!("group spec: {e}")))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GroupReport {
    pub valid: bool,
    pub order: usize,
    pub abelian: bool,
    pub identity: usize,
    pub labels: Vec<String>,
    pub inverses: Vec<usize>,
    pub element_orders: Vec<usize>,
}

impl GroupReport {
    pub fn new(g: &FiniteGroup) -> Self {
        GroupReport {
            valid: true,
            order: g.order(),
            abelian: g.is_abelian(),
            identity: g.identity(),
            labels: g.labels().to_vec(),
            inverses: g.elements().map(|x| g.inv(x)).collect(),
            element_orders: g.elements().map(|x| g.element_order(x)).collect(),
        }
    }
}

/// Matrices as `[row][col] = [re, im]`.
pub type MatrixPairs = Vec<Vec<[f64; 2]>>;

pub fn matrix_to_pairs(m: &CMatrix) -> MatrixPairs {
    m.row_iter()
        .map(|row| row.iter().map(|z| [z.re, z.im]).collect())
        .collect()
}

pub fn matrix_from_pairs(rows: &MatrixPairs) -> Result<CMatrix> {
    let n = rows.len();
    if n == 0 || rows.iter().any(|r| r.len() != n) {
        return Err(Error::Parse("matrices must be square and non-empty".into()));
    }
    Ok(CMatrix::from_fn(n, n, |i, j| {
        Complex64::new(rows[i][j][0], rows[i][j][1])
    }))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IrrepEntry {
    /// One matrix per group element, in element-index order.
    pub matrices: Vec<MatrixPairs>,
}

/// A user-supplied irrep family. `beta` lists one-based `(i, j, k)` per
/// element; when absent the default ordering is used. With `unitarize`
/// each irrep is first passed through the Weyl trick.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IrrepFile {
    pub irreps: Vec<IrrepEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta: Option<Vec<[usize; 3]>>,
    #[serde(default)]
    pub unitarize: bool,
}

impl IrrepFile {
    pub fn from_set(set: &IrrepSet) -> Self {
        IrrepFile {
            irreps: set
                .irreps()
                .iter()
                .map(|r| IrrepEntry {
                    matrices: r.matrices().iter().map(matrix_to_pairs).collect(),
                })
                .collect(),
            beta: Some(set.beta_table().iter().map(EntryIndex::one_based).collect()),
            unitarize: false,
        }
    }

    /// Rebuilds and fully re-validates the family over `group`.
    pub fn load(&self, group: &FiniteGroup, tol: f64) -> Result<IrrepSet> {
        let mut irreps = Vec::with_capacity(self.irreps.len());
        for entry in &self.irreps {
            let mats = entry
                .matrices
                .iter()
                .map(matrix_from_pairs)
                .collect::<Result<Vec<_>>>()?;
            let rep = Representation::new(group, mats, tol)?;
            irreps.push(if self.unitarize {
                representation::weyl_unitarize(group, &rep, tol)?
            } else {
                rep
            });
        }
        let beta = match &self.beta {
            Some(b) => Some(
                b.iter()
                    .map(|&[i, j, k]| EntryIndex::from_one_based(i, j, k))
                    .collect::<Result<Vec<_>>>()?,
            ),
            None => None,
        };
        IrrepSet::new(group.clone(), irreps, beta, tol)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ImageValue {
    Index(usize),
    Label(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FunctionSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub id: Option<String>,
    /// May be omitted when the codomain is supplied separately.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub codomain: Option<GroupSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub domain_size: Option<usize>,
    pub image: Vec<ImageValue>,
}

impl FunctionSpec {
    pub fn build(&self) -> Result<PromiseFunction> {
        let spec = self
            .codomain
            .as_ref()
            .ok_or_else(|| Error::Parse("function spec has no codomain".into()))?;
        self.build_over(spec.build()?)
    }

    /// Resolves the image against an already-built codomain.
    pub fn build_over(&self, h: FiniteGroup) -> Result<PromiseFunction> {
        if let Some(n) = self.domain_size {
            if n != self.image.len() {
                return Err(Error::Parse(format!(
                    "domain_size is {n} but the image lists {} values",
                    self.image.len()
                )));
            }
        }
        let image = self
            .image
            .iter()
            .map(|v| match v {
                ImageValue::Index(i) => Ok(*i),
                ImageValue::Label(s) => h
                    .element_by_label(s)
                    .ok_or_else(|| Error::Parse(format!("unknown element label {s:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        PromiseFunction::new(h, image)
    }
}

pub fn parse_function_spec(text: &str) -> Result<FunctionSpec> {
    serde_json::from_str(text).map_err(|e| Error::Parse(format!("function spec: {e}")))
}

/// One row of a classification report, indices one-based.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassificationRow {
    pub k: usize,
    pub i: usize,
    pub verdict: Verdict,
    pub group_ring: Verdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub polynomial: Option<Verdict>,
    pub agree: bool,
    pub witness: Vec<Complex64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassificationReport {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub function_id: Option<String>,
    pub domain_size: usize,
    pub codomain_order: usize,
    pub rows: Vec<ClassificationRow>,
    pub all_agree: bool,
}

/// Classifies `f` at every non-trivial `(k, i)` by all applicable methods.
/// Disagreements are recorded, not raised.
pub fn classify_all(f: &PromiseFunction, set: &IrrepSet, tol: f64) -> Result<ClassificationReport> {
    let mut rows = Vec::new();
    let abelian_factors = f.codomain().kind().cyclic_factors();
    for k in 1..set.len() {
        for i in 0..set.irrep(k).dim() {
            let def: Classification = promise::classify_definitional(f, set, k, i, tol)?;
            let group_ring = match promise::classify_via_group_ring(f, set, k, i, tol) {
                Ok(c) => c.verdict,
                Err(Error::Inconsistent(_)) => group_ring_verdict(f, set, k, i, tol)?,
                Err(e) => return Err(e),
            };
            // characters of an Abelian codomain are indexed by elements
            let polynomial = match &abelian_factors {
                Some(_) => Some(promise::classify_polynomial(f, k)?),
                None => None,
            };
            let agree = group_ring == def.verdict && polynomial.is_none_or(|p| p == def.verdict);
            rows.push(ClassificationRow {
                k: k + 1,
                i: i + 1,
                verdict: def.verdict,
                group_ring,
                polynomial,
                agree,
                witness: def.witness,
            });
        }
    }
    let all_agree = rows.iter().all(|r| r.agree);
    Ok(ClassificationReport {
        function_id: None,
        domain_size: f.domain_size(),
        codomain_order: f.codomain().order(),
        rows,
        all_agree,
    })
}

fn group_ring_verdict(f: &PromiseFunction, set: &IrrepSet, k: usize, i: usize, tol: f64) -> Result<Verdict> {
    let stab = promise::stabilizer(set, k, i, tol)?;
    let r = promise::group_ring_element(f);
    let support = r.support();
    let h0_inv = set.group().inv(support[0]);
    if support.iter().all(|&h| stab.contains(set.group().mul(h, h0_inv))) {
        Ok(Verdict::Constant)
    } else if promise::annihilator_member(&r, set, k, i, tol)? {
        Ok(Verdict::Balanced)
    } else {
        Ok(Verdict::Neither)
    }
}
