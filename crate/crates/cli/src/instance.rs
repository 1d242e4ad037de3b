//! Instance files: JSON documents describing algebras, groups, actions,
//! subrings, corings-by-construction, and the tasks to run on them, all
//! referencing each other by string id.

use std::collections::{BTreeMap, HashSet};
use std::sync::Arc;

use serde::Deserialize;

use coring_core::algebra::{field_extension, FiniteAlgebra, Subring};
use coring_core::budget::Budget;
use coring_core::constructions::{
    comodule_algebra_coring, crossed_product, direct_sum_trivial_coring, dual_coring,
    group_algebra, sweedler, ComoduleAlgebra, ComoduleCoring, DualCoring, HopfData, SweedlerCoring,
};
use coring_core::coring::{Coring, Grouplike};
use coring_core::group::{FiniteGroup, GroupAction};
use coring_core::mat::Mat;

use crate::CliError;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    #[serde(default)]
    pub budget: Option<u64>,
    #[serde(default)]
    pub algebras: BTreeMap<String, AlgebraSpec>,
    #[serde(default)]
    pub groups: BTreeMap<String, GroupSpec>,
    #[serde(default)]
    pub actions: BTreeMap<String, ActionSpec>,
    #[serde(default)]
    pub subrings: BTreeMap<String, SubringSpec>,
    #[serde(default)]
    pub constructions: BTreeMap<String, ConstructionSpec>,
    #[serde(default)]
    pub tasks: Vec<TaskSpec>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraSpec {
    #[serde(default)]
    pub preset: Option<String>,
    #[serde(default)]
    pub p: Option<u64>,
    #[serde(default)]
    pub dim: Option<usize>,
    /// Structure constants `sc[i][j][k]`: coefficient of basis `k` in
    /// `e_i * e_j`.
    #[serde(default)]
    pub sc: Option<Vec<Vec<Vec<u64>>>>,
    #[serde(default)]
    pub unit: Option<Vec<u64>>,
    /// Extension degree for the `Fq` preset.
    #[serde(default)]
    pub n: Option<usize>,
    /// Group id for the `group_algebra` preset.
    #[serde(default)]
    pub group: Option<String>,
    /// Action id for the `crossed_product` preset.
    #[serde(default)]
    pub action: Option<String>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupSpec {
    #[serde(default)]
    pub preset: Option<String>,
    #[serde(default)]
    pub order: Option<usize>,
    #[serde(default)]
    pub table: Option<Vec<Vec<usize>>>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionSpec {
    pub group: String,
    pub algebra: String,
    /// One matrix per group element, as rows.
    pub maps: Vec<Vec<Vec<u64>>>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubringSpec {
    pub algebra: String,
    #[serde(default)]
    pub gens: Vec<Vec<u64>>,
    /// The whole algebra as a subring of itself.
    #[serde(default)]
    pub full: bool,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConstructionSpec {
    pub construction: String,
    #[serde(default)]
    pub algebra: Option<String>,
    #[serde(default)]
    pub subring: Option<String>,
    #[serde(default)]
    pub action: Option<String>,
    #[serde(default)]
    pub copies: Option<usize>,
    /// Inline group-algebra Hopf data for `comodule_algebra`.
    #[serde(default)]
    pub group_algebra: Option<GroupAlgebraSpec>,
    /// Explicit Hopf data for `comodule_algebra`.
    #[serde(default)]
    pub hopf: Option<HopfSpec>,
    /// Either the string "comul" (the algebra coacts on itself by its
    /// comultiplication) or an explicit matrix.
    #[serde(default)]
    pub coaction: Option<CoactionSpec>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupAlgebraSpec {
    pub p: u64,
    pub group: String,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HopfSpec {
    pub algebra: String,
    pub comul: Vec<Vec<u64>>,
    pub counit: Vec<Vec<u64>>,
    pub antipode: Vec<Vec<u64>>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum CoactionSpec {
    Named(String),
    Matrix(Vec<Vec<u64>>),
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TaskSpec {
    pub task: String,
    /// Construction id for coring tasks.
    #[serde(default)]
    pub of: Option<String>,
    /// Action id for the cohomology tasks.
    #[serde(default)]
    pub action: Option<String>,
    /// Base grouplike override (coordinates); defaults to the
    /// construction's distinguished grouplike.
    #[serde(default)]
    pub grouplike: Option<Vec<u64>>,
    #[serde(default)]
    pub expect_count: Option<usize>,
    #[serde(default)]
    pub expect_elements: Option<Vec<Vec<u64>>>,
    #[serde(default)]
    pub expect_dim: Option<usize>,
    #[serde(default)]
    pub expect_order: Option<usize>,
    #[serde(default)]
    pub expect_classes: Option<usize>,
    #[serde(default)]
    pub expect_group_order: Option<usize>,
    #[serde(default)]
    pub expect_all_galois: Option<bool>,
}

/// A built construction together with its distinguished grouplike.
pub enum Built {
    Sweedler(SweedlerCoring),
    DualCrossed(DualCoring),
    Comodule(Box<ComoduleCoring>),
    DirectSum { coring: Coring, base: Grouplike },
}

impl Built {
    pub fn coring(&self) -> &Coring {
        match self {
            Built::Sweedler(s) => &s.coring,
            Built::DualCrossed(d) => &d.coring,
            Built::Comodule(c) => &c.coring,
            Built::DirectSum { coring, .. } => coring,
        }
    }

    pub fn base(&self) -> &Grouplike {
        match self {
            Built::Sweedler(s) => &s.base,
            Built::DualCrossed(d) => &d.trace,
            Built::Comodule(c) => &c.base,
            Built::DirectSum { base, .. } => base,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Built::Sweedler(_) => "sweedler",
            Built::DualCrossed(_) => "dual_crossed",
            Built::Comodule(_) => "comodule_algebra",
            Built::DirectSum { .. } => "direct_sum",
        }
    }
}

/// Lazy id resolver with cycle detection. Every resolved object is validated
/// by the core constructors; errors carry the JSON pointer of the offending
/// entry.
pub struct Resolver {
    file: InstanceFile,
    pub budget: Budget,
    algebras: BTreeMap<String, Arc<FiniteAlgebra>>,
    groups: BTreeMap<String, Arc<FiniteGroup>>,
    actions: BTreeMap<String, GroupAction>,
    subrings: BTreeMap<String, (String, Subring)>,
    constructions: BTreeMap<String, Arc<Built>>,
    visiting: HashSet<String>,
}

fn validation<E: std::fmt::Display>(pointer: &str) -> impl Fn(E) -> CliError + '_ {
    move |e| CliError::Validation {
        pointer: pointer.to_string(),
        message: e.to_string(),
    }
}

fn missing(pointer: &str, what: &str) -> CliError {
    CliError::Validation {
        pointer: pointer.to_string(),
        message: format!("missing field `{what}`"),
    }
}

fn matrix_from_rows(pointer: &str, rows: &[Vec<u64>]) -> Result<Mat, CliError> {
    let cols = rows.first().map(|r| r.len()).unwrap_or(0);
    if rows.iter().any(|r| r.len() != cols) {
        return Err(CliError::Validation {
            pointer: pointer.to_string(),
            message: "ragged matrix rows".into(),
        });
    }
    Ok(Mat::from_rows(rows.to_vec(), cols))
}

impl Resolver {
    pub fn new(file: InstanceFile, budget_override: Option<u64>) -> Self {
        let mut budget = Budget::default();
        if let Some(n) = file.budget {
            budget.elements = n;
        }
        if let Some(n) = budget_override {
            budget = Budget::uniform(n);
        }
        Resolver {
            file,
            budget,
            algebras: BTreeMap::new(),
            groups: BTreeMap::new(),
            actions: BTreeMap::new(),
            subrings: BTreeMap::new(),
            constructions: BTreeMap::new(),
            visiting: HashSet::new(),
        }
    }

    pub fn tasks(&self) -> &[TaskSpec] {
        &self.file.tasks
    }

    fn enter(&mut self, key: String) -> Result<(), CliError> {
        if !self.visiting.insert(key.clone()) {
            return Err(CliError::Validation {
                pointer: key,
                message: "cyclic reference".into(),
            });
        }
        Ok(())
    }

    pub fn group(&mut self, id: &str) -> Result<Arc<FiniteGroup>, CliError> {
        if let Some(g) = self.groups.get(id) {
            return Ok(g.clone());
        }
        let pointer = format!("/groups/{id}");
        let spec = self
            .file
            .groups
            .get(id)
            .ok_or_else(|| missing(&pointer, "group definition"))?
            .clone();
        let group = match (spec.preset.as_deref(), &spec.table) {
            (Some("cyclic"), _) => {
                let order = spec.order.ok_or_else(|| missing(&pointer, "order"))?;
                FiniteGroup::cyclic(order)
            }
            (Some("trivial"), _) => FiniteGroup::trivial(),
            (None, Some(table)) => FiniteGroup::new(table.clone()).map_err(validation(&pointer))?,
            _ => {
                return Err(CliError::Validation {
                    pointer,
                    message: "expected `table` or preset `cyclic`/`trivial`".into(),
                })
            }
        };
        let group = Arc::new(group);
        self.groups.insert(id.to_string(), group.clone());
        Ok(group)
    }

    pub fn algebra(&mut self, id: &str) -> Result<Arc<FiniteAlgebra>, CliError> {
        if let Some(a) = self.algebras.get(id) {
            return Ok(a.clone());
        }
        let pointer = format!("/algebras/{id}");
        self.enter(pointer.clone())?;
        let spec = self
            .file
            .algebras
            .get(id)
            .ok_or_else(|| missing(&pointer, "algebra definition"))?
            .clone();
        let algebra = match spec.preset.as_deref() {
            None => {
                let p = spec.p.ok_or_else(|| missing(&pointer, "p"))?;
                let dim = spec.dim.ok_or_else(|| missing(&pointer, "dim"))?;
                let sc3 = spec.sc.clone().ok_or_else(|| missing(&pointer, "sc"))?;
                let unit = spec.unit.clone().ok_or_else(|| missing(&pointer, "unit"))?;
                let mut sc = Vec::with_capacity(dim * dim * dim);
                if sc3.len() != dim
                    || sc3.iter().any(|m| m.len() != dim)
                    || sc3.iter().flatten().any(|r| r.len() != dim)
                {
                    return Err(CliError::Validation {
                        pointer,
                        message: "sc must be a dim x dim x dim array".into(),
                    });
                }
                for plane in &sc3 {
                    for row in plane {
                        sc.extend_from_slice(row);
                    }
                }
                FiniteAlgebra::new(p, dim, sc, unit).map_err(validation(&pointer))?
            }
            Some("Fq") => {
                let p = spec.p.ok_or_else(|| missing(&pointer, "p"))?;
                let n = spec.n.ok_or_else(|| missing(&pointer, "n"))?;
                field_extension(p, n).map_err(validation(&pointer))?
            }
            Some("group_algebra") => {
                let p = spec.p.ok_or_else(|| missing(&pointer, "p"))?;
                let gid = spec
                    .group
                    .clone()
                    .ok_or_else(|| missing(&pointer, "group"))?;
                let group = self.group(&gid)?;
                let hopf = group_algebra(p, &group).map_err(validation(&pointer))?;
                hopf.algebra().as_ref().clone()
            }
            Some("crossed_product") => {
                let aid = spec
                    .action
                    .clone()
                    .ok_or_else(|| missing(&pointer, "action"))?;
                let action = self.action(&aid)?;
                let r = crossed_product(&action).map_err(validation(&pointer))?;
                r.algebra.as_ref().clone()
            }
            Some(other) => {
                return Err(CliError::Validation {
                    pointer,
                    message: format!("unknown algebra preset `{other}`"),
                })
            }
        };
        let algebra = Arc::new(algebra);
        self.visiting.remove(&pointer);
        self.algebras.insert(id.to_string(), algebra.clone());
        Ok(algebra)
    }

    pub fn action(&mut self, id: &str) -> Result<GroupAction, CliError> {
        if let Some(a) = self.actions.get(id) {
            return Ok(a.clone());
        }
        let pointer = format!("/actions/{id}");
        self.enter(pointer.clone())?;
        let spec = self
            .file
            .actions
            .get(id)
            .ok_or_else(|| missing(&pointer, "action definition"))?
            .clone();
        let (gid, aid, raw_maps) = (spec.group.clone(), spec.algebra.clone(), spec.maps.clone());
        let group = self.group(&gid)?;
        let algebra = self.algebra(&aid)?;
        let maps = raw_maps
            .iter()
            .map(|rows| matrix_from_rows(&pointer, rows))
            .collect::<Result<Vec<Mat>, CliError>>()?;
        let action = GroupAction::new(group, algebra, maps).map_err(validation(&pointer))?;
        self.visiting.remove(&pointer);
        self.actions.insert(id.to_string(), action.clone());
        Ok(action)
    }

    pub fn subring(&mut self, id: &str) -> Result<(String, Subring), CliError> {
        if let Some(s) = self.subrings.get(id) {
            return Ok(s.clone());
        }
        let pointer = format!("/subrings/{id}");
        let spec = self
            .file
            .subrings
            .get(id)
            .ok_or_else(|| missing(&pointer, "subring definition"))?
            .clone();
        let (aid, gens, full) = (spec.algebra.clone(), spec.gens.clone(), spec.full);
        let algebra = self.algebra(&aid)?;
        let subring = if full {
            Subring::full(&algebra)
        } else {
            algebra.subring_closure(&gens)
        };
        let entry = (aid, subring);
        self.subrings.insert(id.to_string(), entry.clone());
        Ok(entry)
    }

    pub fn construction(&mut self, id: &str) -> Result<Arc<Built>, CliError> {
        if let Some(c) = self.constructions.get(id) {
            return Ok(c.clone());
        }
        let pointer = format!("/constructions/{id}");
        self.enter(pointer.clone())?;
        let spec = self
            .file
            .constructions
            .get(id)
            .ok_or_else(|| missing(&pointer, "construction definition"))?
            .clone();
        let kind = spec.construction.clone();
        let built = match kind.as_str() {
            "sweedler" => {
                let aid = spec
                    .algebra
                    .clone()
                    .ok_or_else(|| missing(&pointer, "algebra"))?;
                let sid = spec
                    .subring
                    .clone()
                    .ok_or_else(|| missing(&pointer, "subring"))?;
                let algebra = self.algebra(&aid)?;
                let (sub_algebra, subring) = self.subring(&sid)?;
                if sub_algebra != aid {
                    return Err(CliError::Validation {
                        pointer,
                        message: format!("subring `{sid}` lives in algebra `{sub_algebra}`"),
                    });
                }
                Built::Sweedler(sweedler(&algebra, &subring).map_err(validation(&pointer))?)
            }
            "dual_crossed" => {
                let aid = spec
                    .action
                    .clone()
                    .ok_or_else(|| missing(&pointer, "action"))?;
                let action = self.action(&aid)?;
                Built::DualCrossed(dual_coring(&action).map_err(validation(&pointer))?)
            }
            "comodule_algebra" => {
                let hopf = match (&spec.group_algebra, &spec.hopf) {
                    (Some(ga), None) => {
                        let group = self.group(&ga.group.clone())?;
                        group_algebra(ga.p, &group).map_err(validation(&pointer))?
                    }
                    (None, Some(h)) => {
                        let algebra = self.algebra(&h.algebra.clone())?;
                        HopfData::new(
                            algebra,
                            matrix_from_rows(&pointer, &h.comul)?,
                            matrix_from_rows(&pointer, &h.counit)?,
                            matrix_from_rows(&pointer, &h.antipode)?,
                        )
                        .map_err(validation(&pointer))?
                    }
                    _ => {
                        return Err(CliError::Validation {
                            pointer,
                            message: "expected exactly one of `group_algebra` or `hopf`".into(),
                        })
                    }
                };
                let ca = match &spec.coaction {
                    Some(CoactionSpec::Named(name)) if name == "comul" => {
                        ComoduleAlgebra::regular(hopf).map_err(validation(&pointer))?
                    }
                    Some(CoactionSpec::Matrix(rows)) => {
                        let aid = spec
                            .algebra
                            .clone()
                            .ok_or_else(|| missing(&pointer, "algebra"))?;
                        let algebra = self.algebra(&aid)?;
                        let coaction = matrix_from_rows(&pointer, rows)?;
                        ComoduleAlgebra::new(algebra, hopf, coaction)
                            .map_err(validation(&pointer))?
                    }
                    Some(CoactionSpec::Named(other)) => {
                        return Err(CliError::Validation {
                            pointer,
                            message: format!("unknown coaction `{other}`"),
                        })
                    }
                    None => return Err(missing(&pointer, "coaction")),
                };
                Built::Comodule(Box::new(
                    comodule_algebra_coring(&ca).map_err(validation(&pointer))?,
                ))
            }
            "direct_sum" => {
                let aid = spec
                    .algebra
                    .clone()
                    .ok_or_else(|| missing(&pointer, "algebra"))?;
                let copies = spec.copies.unwrap_or(2);
                let algebra = self.algebra(&aid)?;
                let coring =
                    direct_sum_trivial_coring(&algebra, copies).map_err(validation(&pointer))?;
                let base = coring
                    .grouplikes(&self.budget)
                    .map_err(validation(&pointer))?
                    .into_iter()
                    .next()
                    .ok_or_else(|| CliError::Validation {
                        pointer: pointer.clone(),
                        message: "construction has no grouplikes".into(),
                    })?;
                Built::DirectSum { coring, base }
            }
            other => {
                return Err(CliError::Validation {
                    pointer,
                    message: format!("unknown construction `{other}`"),
                })
            }
        };
        let built = Arc::new(built);
        self.visiting.remove(&pointer);
        self.constructions.insert(id.to_string(), built.clone());
        Ok(built)
    }
}
