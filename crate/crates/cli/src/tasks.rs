//! The fixed task vocabulary, its execution against resolved constructions,
//! and the plain-language definitions behind `explain`.

use serde::Serialize;
use serde_json::{json, Value};

use coring_core::constructions::{clasico_check, gl_embedding_check, h1, theta, theta_inv, z1};
use coring_core::coring::Grouplike;
use coring_core::descent::{
    aut_orbits, d0, d1, exact_sequence_report, mejor_check, n1, unit_stabilizer, MejorOutcome,
};
use coring_core::error::Error;

use crate::instance::{Built, Resolver, TaskSpec};
use crate::CliError;

pub const TASK_NAMES: &[&str] = &[
    "validate",
    "grouplikes",
    "coinvariants",
    "galois",
    "d0",
    "d1",
    "n1",
    "aut",
    "exactseq",
    "mejor",
    "z1",
    "h1",
    "theta",
    "clasico",
    "gl-embedding",
];

/// One-paragraph definition of what a task computes and checks.
pub fn explain(task: &str) -> Result<&'static str, CliError> {
    let text = match task {
        "validate" => {
            "validate: builds the referenced construction and re-checks every axiom along the \
             way: associativity and unit laws for algebras, automorphism and composition laws \
             for group actions, representation and commutation laws for bimodule actions, \
             well-definedness of tensor quotients, and coassociativity plus the two counit laws \
             for the coring."
        }
        "grouplikes" => {
            "grouplikes: enumerates the elements g of the coring with comul(g) = g (x) g and \
             counit(g) = 1. The search solves the affine counit condition first and filters the \
             quadratic comultiplication condition over that subspace. These elements parametrize \
             the comodule structures on the base ring."
        }
        "coinvariants" => {
            "coinvariants: computes the subring A^g = { a in A : a.g = g.a } of elements that \
             commute with the grouplike through the bimodule actions; it is the endomorphism \
             ring of the comodule attached to g."
        }
        "galois" => {
            "galois: builds the canonical map A (x)_{A^g} A -> C, a (x) a' -> a.g.a', for each \
             grouplike and tests bijectivity. A grouplike is Galois exactly when its canonical \
             map is bijective."
        }
        "d0" => {
            "d0: the zeroth descent cohomology group at g, which is the unit group U(A^g) of \
             the coinvariant subring."
        }
        "d1" => {
            "d1: the first descent cohomology pointed set at g: the orbits of the unit \
             conjugation action (alpha, g) -> alpha.g.alpha^{-1} on the grouplike set, pointed \
             at the orbit of g."
        }
        "n1" => {
            "n1: the noncommutative refinement of d1: orbits of the subgroup \
             U(A)_g = { alpha : alpha.A^g = A^g.alpha } acting on the grouplikes, together with \
             the canonical surjection onto d1."
        }
        "aut" => {
            "aut: computes the coring automorphism group, the invertible A-bilinear \
             endomorphisms commuting with comultiplication and counit, returned with \
             composition and inverse tables."
        }
        "exactseq" => {
            "exactseq: verifies the exact sequence 1 -> U(A^g) -> U(A)_g -> Aut(C) at a Galois \
             grouplike: the map alpha -> can_g . psi_{alpha^{-1}} . can_g^{-1} is a \
             homomorphism with kernel exactly U(A^g); when unit conjugation is transitive on \
             the Galois grouplikes, it is onto and induces Aut(C) = U(A)_g / U(A^g), checked on \
             coset representatives."
        }
        "mejor" => {
            "mejor: at a Galois grouplike with transitive unit conjugation, checks the \
             equivalence of (i) U(A)_g = U(A), (ii) the same for every Galois h, and (iii) \
             transitivity of Aut(C) on the Galois grouplikes. When they hold it transports the \
             group structure of Aut(C) onto the Galois set through phi -> phi(g) and verifies \
             exactness of 1 -> U(A^g) -> U(A) -> Gal(C) -> 1."
        }
        "z1" => {
            "z1: enumerates the nonabelian 1-cocycles of the action: unit-valued functions on \
             the group with f(identity) = 1 satisfying f(xy) = f(y) . f(x)^y."
        }
        "h1" => {
            "h1: partitions the 1-cocycles into cohomology classes (f and h are cohomologous \
             when f(x) = alpha^{-1} . h(x) . alpha^x for one fixed unit alpha), pointed at the \
             class of the trivial cocycle."
        }
        "theta" => {
            "theta: checks the dictionary between grouplikes of the dual crossed-product coring \
             and 1-cocycles: restriction to the group basis and the reverse assignment \
             x.a -> f(x).a are mutually inverse bijections, and the trace map corresponds to \
             the trivial cocycle."
        }
        "clasico" => {
            "clasico: verifies that descent data of the dual crossed-product coring at the \
             trace matches nonabelian group cohomology: D0 equals H0 as unit groups, \
             conjugate grouplikes correspond exactly to cohomologous cocycles, and the \
             dictionary induces a base-point preserving bijection D1 -> H1."
        }
        "gl-embedding" => {
            "gl-embedding: verifies that h -> 1 (x) h maps the grouplikes of the Hopf algebra \
             into the grouplikes of A (x) H injectively and multiplicatively for the \
             transported group structure on the Galois grouplikes."
        }
        other => return Err(CliError::UnknownTask(other.to_string())),
    };
    Ok(text)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    #[serde(rename = "pass")]
    Pass,
    #[serde(rename = "fail")]
    Fail,
    #[serde(rename = "not-applicable")]
    NotApplicable,
}

#[derive(Debug, Serialize)]
pub struct TaskResult {
    pub task: String,
    pub target: String,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    pub data: Value,
}

fn expect_eq<T: PartialEq + std::fmt::Debug>(
    failures: &mut Vec<String>,
    what: &str,
    expected: &Option<T>,
    got: &T,
) {
    if let Some(e) = expected {
        if e != got {
            failures.push(format!("{what}: expected {e:?}, got {got:?}"));
        }
    }
}

fn require(failures: &mut Vec<String>, what: &str, ok: bool) {
    if !ok {
        failures.push(format!("{what} failed"));
    }
}

fn finish(task: &str, target: &str, failures: Vec<String>, data: Value) -> TaskResult {
    TaskResult {
        task: task.to_string(),
        target: target.to_string(),
        verdict: if failures.is_empty() {
            Verdict::Pass
        } else {
            Verdict::Fail
        },
        detail: if failures.is_empty() {
            None
        } else {
            Some(failures.join("; "))
        },
        data,
    }
}

fn base_grouplike(built: &Built, spec: &TaskSpec) -> Result<Grouplike, Error> {
    match &spec.grouplike {
        Some(v) => built.coring().grouplike(v.clone()),
        None => Ok(built.base().clone()),
    }
}

fn orbit_json(classes: &coring_core::descent::PointedOrbitSet) -> Value {
    json!({
        "classes": classes.len(),
        "orbits": classes.orbits(),
        "distinguished": classes.distinguished(),
    })
}

/// A computation error inside a task (a budget refusal, most commonly) is
/// reported as a failing verdict rather than aborting the run.
fn refusal(task: &str, target: &str, err: Error) -> TaskResult {
    TaskResult {
        task: task.to_string(),
        target: target.to_string(),
        verdict: Verdict::Fail,
        detail: Some(format!("refused: {err}")),
        data: json!({}),
    }
}

pub fn run_task(resolver: &mut Resolver, spec: &TaskSpec) -> Result<TaskResult, CliError> {
    if !TASK_NAMES.contains(&spec.task.as_str()) {
        return Err(CliError::UnknownTask(spec.task.clone()));
    }
    let name = spec.task.as_str();
    if matches!(name, "z1" | "h1") {
        let aid = spec.action.clone().ok_or_else(|| CliError::Validation {
            pointer: format!("/tasks/{name}"),
            message: "missing `action` reference".into(),
        })?;
        let action = resolver.action(&aid)?;
        let result = action_task(resolver, spec, &aid, &action);
        return Ok(result.unwrap_or_else(|e| refusal(name, &aid, e)));
    }
    let target = spec.of.clone().ok_or_else(|| CliError::Validation {
        pointer: format!("/tasks/{name}"),
        message: "missing `of` reference to a construction".into(),
    })?;
    let built = resolver.construction(&target)?;
    match coring_task(resolver, spec, &target, &built) {
        Ok(Some(result)) => Ok(result),
        Ok(None) => Err(CliError::Validation {
            pointer: format!("/tasks/{name}"),
            message: format!("construction `{target}` has the wrong kind for this task"),
        }),
        Err(e) => Ok(refusal(name, &target, e)),
    }
}

fn action_task(
    resolver: &Resolver,
    spec: &TaskSpec,
    aid: &str,
    action: &coring_core::group::GroupAction,
) -> Result<TaskResult, Error> {
    let budget = resolver.budget;
    let name = spec.task.as_str();
    let units = action.algebra().units(budget.elements)?;
    let mut failures = Vec::new();
    Ok(match name {
        "z1" => {
            let cocycles = z1(action, &units, &budget)?;
            expect_eq(
                &mut failures,
                "cocycle count",
                &spec.expect_count,
                &cocycles.len(),
            );
            let values: Vec<Vec<Vec<u64>>> = cocycles.iter().map(|c| c.values().to_vec()).collect();
            finish(
                name,
                aid,
                failures,
                json!({
                    "count": cocycles.len(),
                    "cocycles": values,
                }),
            )
        }
        _ => {
            let classes = h1(action, &units, &budget)?;
            expect_eq(
                &mut failures,
                "class count",
                &spec.expect_classes,
                &classes.len(),
            );
            finish(name, aid, failures, orbit_json(&classes))
        }
    })
}

/// `Ok(None)` signals a construction-kind mismatch (a file-level error);
/// computation errors surface as `Err` and become failing verdicts.
fn coring_task(
    resolver: &Resolver,
    spec: &TaskSpec,
    target: &str,
    built: &Built,
) -> Result<Option<TaskResult>, Error> {
    let budget = resolver.budget;
    let name = spec.task.as_str();
    let coring = built.coring();
    let algebra = coring.algebra().clone();
    let mut failures = Vec::new();

    let result = match name {
        "validate" => finish(
            name,
            target,
            failures,
            json!({
                "construction": built.kind(),
                "carrier_dim": coring.dim(),
                "algebra_dim": algebra.dim(),
                "p": algebra.p(),
            }),
        ),
        "grouplikes" => {
            let gls = coring.grouplikes(&budget)?;
            let elements: Vec<Vec<u64>> = gls.iter().map(|g| g.elem().to_vec()).collect();
            expect_eq(
                &mut failures,
                "grouplike count",
                &spec.expect_count,
                &gls.len(),
            );
            if let Some(expected) = &spec.expect_elements {
                let mut expected = expected.clone();
                expected.sort();
                if expected != elements {
                    failures.push(format!(
                        "grouplike set: expected {expected:?}, got {elements:?}"
                    ));
                }
            }
            finish(
                name,
                target,
                failures,
                json!({
                    "count": elements.len(),
                    "elements": elements,
                }),
            )
        }
        "coinvariants" => {
            let g = base_grouplike(built, spec)?;
            let coinv = coring.coinvariants(&g);
            expect_eq(
                &mut failures,
                "coinvariant dimension",
                &spec.expect_dim,
                &coinv.dim(),
            );
            finish(
                name,
                target,
                failures,
                json!({
                    "grouplike": g.elem(),
                    "dim": coinv.dim(),
                    "basis": coinv.basis(),
                }),
            )
        }
        "galois" => {
            let gls = coring.grouplikes(&budget)?;
            let mut galois = Vec::new();
            for g in &gls {
                if coring.is_galois(g)? {
                    galois.push(g.elem().to_vec());
                }
            }
            expect_eq(
                &mut failures,
                "Galois count",
                &spec.expect_count,
                &galois.len(),
            );
            if let Some(all) = spec.expect_all_galois {
                require(
                    &mut failures,
                    "all grouplikes Galois",
                    (galois.len() == gls.len()) == all,
                );
            }
            finish(
                name,
                target,
                failures,
                json!({
                    "grouplike_count": gls.len(),
                    "galois_count": galois.len(),
                    "galois": galois,
                }),
            )
        }
        "d0" => {
            let g = base_grouplike(built, spec)?;
            let group = d0(coring, &g, &budget)?;
            expect_eq(&mut failures, "order", &spec.expect_order, &group.order());
            finish(
                name,
                target,
                failures,
                json!({
                    "grouplike": g.elem(),
                    "order": group.order(),
                    "elements": group.elements(),
                }),
            )
        }
        "d1" => {
            let g = base_grouplike(built, spec)?;
            let units = algebra.units(budget.elements)?;
            let classes = d1(coring, &g, &units, &budget)?;
            expect_eq(
                &mut failures,
                "class count",
                &spec.expect_classes,
                &classes.len(),
            );
            finish(name, target, failures, orbit_json(&classes))
        }
        "n1" => {
            let g = base_grouplike(built, spec)?;
            let units = algebra.units(budget.elements)?;
            let report = n1(coring, &g, &units, &budget)?;
            expect_eq(
                &mut failures,
                "class count",
                &spec.expect_classes,
                &report.classes.len(),
            );
            require(&mut failures, "surjection onto d1", report.surjection_ok);
            let stabilizer = unit_stabilizer(coring, &g, &units)?;
            finish(
                name,
                target,
                failures,
                json!({
                    "classes": report.classes.len(),
                    "orbits": report.classes.orbits(),
                    "distinguished": report.classes.distinguished(),
                    "d1_classes": report.d1.len(),
                    "surjection": report.surjection,
                    "stabilizer_order": stabilizer.order(),
                }),
            )
        }
        "aut" => {
            let aut = coring.coring_automorphisms(&budget)?;
            expect_eq(&mut failures, "order", &spec.expect_order, &aut.order());
            let orbits = aut_orbits(coring, &aut, &budget)?;
            let matrices: Vec<Vec<&[u64]>> = aut
                .elements()
                .iter()
                .map(|m| (0..m.rows()).map(|i| m.row(i)).collect())
                .collect();
            finish(
                name,
                target,
                failures,
                json!({
                    "order": aut.order(),
                    "matrices": matrices,
                    "grouplike_orbits": orbits.orbits(),
                }),
            )
        }
        "exactseq" => {
            let g = base_grouplike(built, spec)?;
            let units = algebra.units(budget.elements)?;
            let aut = coring.coring_automorphisms(&budget)?;
            let report = exact_sequence_report(coring, &g, &units, &aut, &budget)?;
            require(
                &mut failures,
                "exact sequence verification",
                report.passed(),
            );
            expect_eq(
                &mut failures,
                "automorphism order",
                &spec.expect_order,
                &report.aut_order,
            );
            finish(
                name,
                target,
                failures,
                json!({
                    "stabilizer_order": report.stabilizer_order,
                    "coinvariant_unit_order": report.coinvariant_unit_order,
                    "aut_order": report.aut_order,
                    "kernel_is_coinvariant_units": report.kernel_is_coinvariant_units,
                    "coinvariant_units_normal": report.coinvariant_units_normal,
                    "phi_homomorphism": report.phi_homomorphism,
                    "phi_antihomomorphism": report.phi_antihomomorphism,
                    "transitive_on_galois": report.transitive_on_galois,
                    "surjective": report.surjective,
                    "coset_bijection": report.coset_bijection,
                    "coset_count": report.coset_count,
                }),
            )
        }
        "mejor" => {
            let g = base_grouplike(built, spec)?;
            let units = algebra.units(budget.elements)?;
            let aut = coring.coring_automorphisms(&budget)?;
            match mejor_check(coring, &g, &units, &aut, &budget)? {
                MejorOutcome::NotApplicable { reason } => TaskResult {
                    task: name.to_string(),
                    target: target.to_string(),
                    verdict: Verdict::NotApplicable,
                    detail: Some(reason),
                    data: json!({}),
                },
                MejorOutcome::Checked(report) => {
                    require(&mut failures, "equivalence and transport", report.passed());
                    let group = report.galois_group.as_ref().map(|t| {
                        json!({
                            "order": t.order(),
                            "elements": t.elements,
                            "mul": t.mul,
                            "identity": t.id,
                        })
                    });
                    if let Some(expected) = spec.expect_group_order {
                        let got = report.galois_group.as_ref().map(|t| t.order());
                        if got != Some(expected) {
                            failures.push(format!(
                                "Galois group order: expected {expected}, got {got:?}"
                            ));
                        }
                    }
                    finish(
                        name,
                        target,
                        failures,
                        json!({
                            "cond_stabilizer_full": report.cond_stabilizer_full,
                            "cond_all_stabilizers_full": report.cond_all_stabilizers_full,
                            "cond_aut_transitive": report.cond_aut_transitive,
                            "conditions_equivalent": report.conditions_equivalent,
                            "conditions_hold": report.conditions_hold,
                            "generator_spans_carrier": report.generator_spans_carrier,
                            "coinvariants_all_equal": report.coinvariants_all_equal,
                            "xi_bijective": report.xi_bijective,
                            "sequence_exact": report.sequence_exact,
                            "galois_group": group,
                        }),
                    )
                }
            }
        }
        "theta" => {
            let Built::DualCrossed(dual) = built else {
                return Ok(None);
            };
            let units = algebra.units(budget.elements)?;
            let report = clasico_check(dual, &units, &budget)?;
            require(&mut failures, "theta bijection", report.theta_bijective);
            require(
                &mut failures,
                "trace corresponds to the trivial cocycle",
                report.trace_maps_to_trivial,
            );
            // round-trip spot data for the report
            let cocycle = theta(dual, &dual.trace)?;
            let back = theta_inv(dual, &cocycle)?;
            require(&mut failures, "trace round trip", back == dual.trace);
            finish(
                name,
                target,
                failures,
                json!({
                    "grouplike_count": report.grouplike_count,
                    "cocycle_count": report.z1_count,
                    "trace_cocycle": cocycle.values(),
                }),
            )
        }
        "clasico" => {
            let Built::DualCrossed(dual) = built else {
                return Ok(None);
            };
            let units = algebra.units(budget.elements)?;
            let report = clasico_check(dual, &units, &budget)?;
            require(
                &mut failures,
                "descent matches group cohomology",
                report.passed(),
            );
            finish(
                name,
                target,
                failures,
                json!({
                    "z1_count": report.z1_count,
                    "grouplike_count": report.grouplike_count,
                    "theta_bijective": report.theta_bijective,
                    "trace_maps_to_trivial": report.trace_maps_to_trivial,
                    "conjugate_iff_cohomologous": report.conjugate_iff_cohomologous,
                    "pointed_bijection": report.pointed_bijection,
                    "d0_equals_h0": report.d0_equals_h0,
                    "d1_classes": report.d1_classes,
                    "h1_classes": report.h1_classes,
                }),
            )
        }
        "gl-embedding" => {
            let Built::Comodule(cac) = built else {
                return Ok(None);
            };
            let units = algebra.units(budget.elements)?;
            let aut = coring.coring_automorphisms(&budget)?;
            let report = gl_embedding_check(cac, &units, &aut, &budget)?;
            require(&mut failures, "group monomorphism", report.passed());
            finish(
                name,
                target,
                failures,
                json!({
                    "hopf_grouplikes": report.hopf_grouplikes,
                    "hopf_grouplikes_form_group": report.hopf_grouplikes_form_group,
                    "images_are_grouplike": report.images_are_grouplike,
                    "injective": report.injective,
                    "multiplicative": report.multiplicative,
                }),
            )
        }
        _ => unreachable!("vocabulary checked above"),
    };
    Ok(Some(result))
}
