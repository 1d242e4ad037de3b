#![allow(dead_code)]

//! Shared fixtures for the integration suites: the bundled instances, the
//! brute-force oracles, and the instance-level property suite.
//!
//! The oracles deliberately avoid the optimized search paths: grouplikes are
//! enumerated over the whole carrier and checked against the defining matrix
//! identities, and orbits are computed by the full unit-times-point product.

use std::sync::Arc;

use coring_core::algebra::{field_extension, FiniteAlgebra, Subring};
use coring_core::budget::Budget;
use coring_core::constructions::{
    comodule_algebra_coring, direct_sum_trivial_coring, dual_coring, group_algebra, sweedler,
    ComoduleAlgebra, ComoduleCoring, DualCoring, SweedlerCoring,
};
use coring_core::coring::{Coring, Grouplike};
use coring_core::descent::{
    d0, d1, exact_sequence_report, mejor_check, n1, phi_g, unit_stabilizer, MejorOutcome,
};
use coring_core::fp::VectorIter;
use coring_core::group::{frobenius_matrix, FiniteGroup, GroupAction};
use coring_core::mat::Mat;
use coring_core::tensor::twisted_identity_map;

pub fn budget() -> Budget {
    Budget::default()
}

pub fn f2() -> Arc<FiniteAlgebra> {
    Arc::new(FiniteAlgebra::new(2, 1, vec![1], vec![1]).unwrap())
}

pub fn f3() -> Arc<FiniteAlgebra> {
    Arc::new(FiniteAlgebra::new(3, 1, vec![1], vec![1]).unwrap())
}

pub fn f4() -> Arc<FiniteAlgebra> {
    Arc::new(field_extension(2, 2).unwrap())
}

/// The matrix algebra M_2(F_2) on the basis {E11, E12, E21, E22}.
pub fn m2_f2() -> Arc<FiniteAlgebra> {
    let dim = 4;
    let mut sc = vec![0u64; dim * dim * dim];
    for a in 0..2usize {
        for b in 0..2 {
            for c in 0..2 {
                for d in 0..2 {
                    // E_{ab} E_{cd} = [b = c] E_{ad}
                    if b == c {
                        sc[((a * 2 + b) * dim + (c * 2 + d)) * dim + (a * 2 + d)] = 1;
                    }
                }
            }
        }
    }
    Arc::new(FiniteAlgebra::new(2, dim, sc, vec![1, 0, 0, 1]).unwrap())
}

/// C_2 acting on M_2(F_2) by conjugation with the transvection I + E12.
pub fn inner_conjugation_action() -> GroupAction {
    let a = m2_f2();
    let s = vec![1u64, 1, 0, 1];
    let s_inv = a.inverse(&s).unwrap();
    let conj = Mat::from_columns_with(4, 4, |j| a.mul(&a.mul(&s, &a.basis_elem(j)), &s_inv));
    GroupAction::new(
        Arc::new(FiniteGroup::cyclic(2)),
        a,
        vec![Mat::identity(4), conj],
    )
    .unwrap()
}

pub fn inner_conjugation_dual() -> DualCoring {
    dual_coring(&inner_conjugation_action()).unwrap()
}

pub fn sweedler_f4_f2() -> SweedlerCoring {
    let a = f4();
    sweedler(&a, &Subring::prime(&a)).unwrap()
}

pub fn frobenius_action() -> GroupAction {
    let a = f4();
    GroupAction::new(
        Arc::new(FiniteGroup::cyclic(2)),
        a.clone(),
        vec![Mat::identity(2), frobenius_matrix(&a)],
    )
    .unwrap()
}

pub fn hilbert90_dual() -> DualCoring {
    dual_coring(&frobenius_action()).unwrap()
}

pub fn group_algebra_comodule() -> ComoduleCoring {
    let hopf = group_algebra(3, &FiniteGroup::cyclic(2)).unwrap();
    let ca = ComoduleAlgebra::regular(hopf).unwrap();
    comodule_algebra_coring(&ca).unwrap()
}

pub struct Instance {
    pub name: &'static str,
    pub coring: Coring,
    pub base: Grouplike,
}

/// The six bundled instances of the verification suites.
pub fn bundled_instances() -> Vec<Instance> {
    let mut out = Vec::new();
    let sw = sweedler_f4_f2();
    out.push(Instance {
        name: "sweedler_f4_f2",
        base: sw.base.clone(),
        coring: sw.coring,
    });
    let dual = hilbert90_dual();
    out.push(Instance {
        name: "hilbert90_c2_f4",
        base: dual.trace.clone(),
        coring: dual.coring,
    });
    let cac = group_algebra_comodule();
    out.push(Instance {
        name: "group_algebra_f3_c2",
        base: cac.base.clone(),
        coring: cac.coring,
    });
    for (name, algebra) in [("trivial_f2", f2()), ("trivial_f3", f3())] {
        let coring = coring_core::constructions::trivial_coring(&algebra).unwrap();
        let base = coring.grouplikes(&budget()).unwrap().remove(0);
        out.push(Instance { name, coring, base });
    }
    let coring = direct_sum_trivial_coring(&f2(), 2).unwrap();
    let base = coring.grouplikes(&budget()).unwrap().remove(0);
    out.push(Instance {
        name: "direct_sum_f2",
        coring,
        base,
    });
    let dual = inner_conjugation_dual();
    out.push(Instance {
        name: "inner_c2_m2f2",
        base: dual.trace.clone(),
        coring: dual.coring,
    });
    out
}

/// Grouplikes by exhaustive enumeration of the whole carrier, checked
/// against the defining matrix identities.
pub fn brute_force_grouplikes(coring: &Coring) -> Vec<Vec<u64>> {
    let fp = coring.algebra().fp();
    let mut out = Vec::new();
    for v in VectorIter::new(fp.modulus(), coring.dim()) {
        let counit_ok = coring.counit().matrix().apply(fp, &v) == *coring.algebra().unit();
        let comul_ok = coring.comul().matrix().apply(fp, &v) == coring.cc().pure(&v, &v);
        if counit_ok && comul_ok {
            out.push(v);
        }
    }
    out
}

/// Conjugation orbits by the full product of units against points, returned
/// in the same canonical form as `PointedOrbitSet::orbits`.
pub fn full_product_orbits(
    coring: &Coring,
    points: &[Grouplike],
    units: &coring_core::algebra::UnitGroup,
) -> Vec<Vec<Vec<u64>>> {
    let n = points.len();
    let mut class = (0..n).collect::<Vec<usize>>();
    let find_point = |v: &[u64]| points.iter().position(|p| p.elem() == v).unwrap();
    for (i, g) in points.iter().enumerate() {
        for alpha in units.elements() {
            let image = coring.conjugate_grouplike(alpha, g).unwrap();
            let j = find_point(image.elem());
            // union by relabeling
            let (a, b) = (class[i], class[j]);
            if a != b {
                let keep = a.min(b);
                for c in class.iter_mut() {
                    if *c == a || *c == b {
                        *c = keep;
                    }
                }
            }
        }
    }
    let mut ids: Vec<usize> = class.clone();
    ids.sort_unstable();
    ids.dedup();
    let mut orbits: Vec<Vec<Vec<u64>>> = ids
        .iter()
        .map(|&id| {
            let mut orbit: Vec<Vec<u64>> = (0..n)
                .filter(|&i| class[i] == id)
                .map(|i| points[i].elem().to_vec())
                .collect();
            orbit.sort();
            orbit
        })
        .collect();
    orbits.sort();
    orbits
}

/// The instance-level property suite. Every clause is an exact check;
/// returns (clause, verdict) pairs.
pub fn property_suite(inst: &Instance) -> Vec<(String, bool)> {
    let coring = &inst.coring;
    let algebra = coring.algebra().clone();
    let fp = algebra.fp();
    let budget = budget();
    let units = algebra.units(budget.elements).unwrap();
    let grouplikes = coring.grouplikes(&budget).unwrap();
    let aut = coring.coring_automorphisms(&budget).unwrap();
    let galois: Vec<Grouplike> = coring.galois_grouplikes(&budget).unwrap();
    let mut out: Vec<(String, bool)> = Vec::new();
    let mut push = |name: &str, ok: bool| out.push((name.to_string(), ok));

    // A^{alpha g alpha^{-1}} = alpha A^g alpha^{-1} for every pair
    let mut iguales = true;
    for g in &grouplikes {
        let coinv = coring.coinvariants(g);
        for i in 0..units.len() {
            let alpha = units.elem(i);
            let conj = coring.conjugate_grouplike(alpha, g).unwrap();
            let lhs = coring.coinvariants(&conj);
            let rhs = algebra
                .conjugate_subring(units.inverse_of(i), &coinv)
                .unwrap();
            iguales &= lhs == rhs;
        }
    }
    push("coinvariants_of_conjugate", iguales);

    // can_{alpha g alpha^{-1}} . psi_{alpha^{-1}} = can_g as matrices
    let mut triangle = true;
    for g in &grouplikes {
        let can_g = coring.canonical_map(g).unwrap();
        for i in 0..units.len() {
            let alpha = units.elem(i);
            let alpha_inv = units.inverse_of(i);
            let conj = coring.conjugate_grouplike(alpha, g).unwrap();
            let can_h = coring.canonical_map(&conj).unwrap();
            let psi = twisted_identity_map(&can_g.tensor, &can_h.tensor, alpha_inv, alpha).unwrap();
            let composite = can_h.map.matrix().mul(fp, &psi);
            triangle &= composite == *can_g.map.matrix();
        }
    }
    push("canonical_map_conjugation_triangle", triangle);

    // conjugates of Galois grouplikes are Galois
    let mut galois_stable = true;
    for g in &grouplikes {
        let is_g = coring.is_galois(g).unwrap();
        for alpha in units.elements() {
            let conj = coring.conjugate_grouplike(alpha, g).unwrap();
            galois_stable &= coring.is_galois(&conj).unwrap() == is_g;
        }
    }
    push("galois_stable_under_conjugation", galois_stable);

    // automorphisms preserve coinvariants and satisfy can_{phi(g)} = phi . can_g
    let mut aut_coinvariants = true;
    let mut aut_triangle = true;
    for g in &grouplikes {
        let coinv = coring.coinvariants(g);
        let can_g = coring.canonical_map(g).unwrap();
        for m in aut.elements() {
            let image = coring.apply_aut(m, g).unwrap();
            aut_coinvariants &= coring.coinvariants(&image) == coinv;
            let can_image = coring.canonical_map(&image).unwrap();
            aut_triangle &= *can_image.map.matrix() == m.mul(fp, can_g.map.matrix());
        }
    }
    push("aut_fixes_coinvariants", aut_coinvariants);
    push("aut_canonical_triangle", aut_triangle);

    // for Galois g, h: A^g = A^h iff some automorphism sends h to g
    let mut aut_detects_coinvariants = true;
    for g in &galois {
        for h in &galois {
            let same = coring.coinvariants(g) == coring.coinvariants(h);
            let reachable = aut
                .elements()
                .iter()
                .any(|m| m.apply(fp, h.elem()) == *g.elem());
            aut_detects_coinvariants &= same == reachable;
        }
    }
    push("aut_orbit_iff_same_coinvariants", aut_detects_coinvariants);

    // normality of U(A^g) in U(A)_g, and conjugation of stabilizers
    let mut normal = true;
    let mut stab_conj = true;
    for g in &grouplikes {
        let coinv_units = d0(coring, g, &budget).unwrap();
        let stab = unit_stabilizer(coring, g, &units).unwrap();
        for beta in stab.elements() {
            let beta_inv = algebra.inverse(beta).unwrap();
            for u in coinv_units.elements() {
                normal &= coinv_units.contains(&algebra.mul(&algebra.mul(beta, u), &beta_inv));
            }
        }
        for i in 0..units.len() {
            let beta = units.elem(i);
            let beta_inv = units.inverse_of(i);
            let mut conjugated: Vec<Vec<u64>> = stab
                .elements()
                .iter()
                .map(|alpha| algebra.mul(&algebra.mul(beta, alpha), beta_inv))
                .collect();
            conjugated.sort();
            let image = coring.conjugate_grouplike(beta, g).unwrap();
            let image_stab = unit_stabilizer(coring, &image, &units).unwrap();
            stab_conj &= conjugated == image_stab.elements();
        }
    }
    push("coinvariant_units_normal_in_stabilizer", normal);
    push("stabilizer_conjugation", stab_conj);

    // kernel of phi_g is exactly U(A^g), for every Galois grouplike
    let mut kernel_exact = true;
    for g in &galois {
        let phi = phi_g(coring, g, &units).unwrap();
        let coinv_units = d0(coring, g, &budget).unwrap();
        kernel_exact &= phi.kernel == coinv_units;
    }
    push("phi_kernel_is_coinvariant_units", kernel_exact);

    // the two actions commute: phi(alpha.g.alpha^{-1}) = alpha.phi(g).alpha^{-1}
    let mut commute = true;
    for g in &grouplikes {
        for m in aut.elements() {
            for alpha in units.elements() {
                let lhs = m.apply(fp, coring.conjugate_grouplike(alpha, g).unwrap().elem());
                let rhs = coring
                    .conjugate_grouplike(alpha, &coring.apply_aut(m, g).unwrap())
                    .unwrap();
                commute &= lhs == *rhs.elem();
            }
        }
    }
    push("unit_and_aut_actions_commute", commute);

    // anti-homomorphism of the twisting maps on the stabilizer
    let mut anti = true;
    for g in &grouplikes {
        let can = coring.canonical_map(g).unwrap();
        let stab = unit_stabilizer(coring, g, &units).unwrap();
        for alpha in stab.elements() {
            let alpha_inv = algebra.inverse(alpha).unwrap();
            let psi_a = twisted_identity_map(&can.tensor, &can.tensor, alpha, &alpha_inv).unwrap();
            for beta in stab.elements() {
                let beta_inv = algebra.inverse(beta).unwrap();
                let psi_b =
                    twisted_identity_map(&can.tensor, &can.tensor, beta, &beta_inv).unwrap();
                let ab = algebra.mul(alpha, beta);
                let ab_inv = algebra.inverse(&ab).unwrap();
                let psi_ab = twisted_identity_map(&can.tensor, &can.tensor, &ab, &ab_inv).unwrap();
                anti &= psi_ab == psi_b.mul(fp, &psi_a);
            }
        }
    }
    push("twisting_is_antihomomorphism", anti);

    // automorphism orbits: the Galois set is a union of orbits, and when
    // the group-transport hypotheses hold the unit orbits agree with them
    let phi_orbits = coring_core::descent::aut_orbits(coring, &aut, &budget).unwrap();
    let galois_set: Vec<&[u64]> = galois.iter().map(|g| g.elem()).collect();
    let galois_union = phi_orbits.orbits().iter().all(|orbit| {
        let inside = orbit
            .iter()
            .filter(|p| galois_set.contains(&p.as_slice()))
            .count();
        inside == 0 || inside == orbit.len()
    });
    push("galois_is_union_of_aut_orbits", galois_union);

    // N1 -> D1 surjection and partition bookkeeping
    let fine = n1(coring, &inst.base, &units, &budget).unwrap();
    push("n1_to_d1_surjection", fine.surjection_ok);
    let coarse = d1(coring, &inst.base, &units, &budget).unwrap();
    push(
        "d1_partitions_grouplikes",
        coarse.total_points() == grouplikes.len(),
    );
    let orbit_sizes_divide = coarse
        .orbits()
        .iter()
        .all(|o| !units.is_empty() && units.len().is_multiple_of(o.len()));
    push("orbit_sizes_divide_unit_order", orbit_sizes_divide);

    // commutative base: the stabilizer is everything, so N1 = D1
    if algebra.is_commutative() {
        push("commutative_n1_equals_d1", fine.classes == coarse);
    }

    // division-ring conclusion: with a Galois point and a division-ring
    // side, every grouplike is Galois and conjugation is transitive
    if let Some(g) = galois.first() {
        let division_side = algebra.is_division_ring(budget.elements).unwrap()
            || is_division_subring(&algebra, &coring.coinvariants(g), &budget);
        if division_side {
            let single_orbit = coarse.len() == 1;
            push(
                "division_ring_forces_all_galois",
                galois.len() == grouplikes.len() && single_orbit,
            );
        }
    }

    // exact sequence data is consistent when a Galois base point exists
    if galois.iter().any(|g| g.elem() == inst.base.elem()) {
        let report = exact_sequence_report(coring, &inst.base, &units, &aut, &budget).unwrap();
        push("exact_sequence_report", report.passed());
        push("phi_is_homomorphism", report.phi_homomorphism);

        // under the transport hypotheses the automorphism orbits refine to
        // the same partition as unit conjugation
        if let MejorOutcome::Checked(mejor) =
            mejor_check(coring, &inst.base, &units, &aut, &budget).unwrap()
        {
            if mejor.conditions_hold {
                let unit_orbits = d1(coring, &inst.base, &units, &budget).unwrap();
                push(
                    "aut_and_unit_orbits_agree_under_transport",
                    phi_orbits == unit_orbits,
                );
            }
        }
    }

    out
}

fn is_division_subring(algebra: &FiniteAlgebra, subring: &Subring, budget: &Budget) -> bool {
    subring
        .elements(algebra, budget.elements)
        .unwrap()
        .all(|v| v.iter().all(|&x| x == 0) || algebra.is_unit(&v))
}

/// Assert every clause of a suite, with a readable failure message.
pub fn assert_suite(name: &str, clauses: &[(String, bool)]) {
    let failed: Vec<&str> = clauses
        .iter()
        .filter(|(_, ok)| !ok)
        .map(|(n, _)| n.as_str())
        .collect();
    assert!(
        failed.is_empty(),
        "{name}: failing clauses: {failed:?} (of {} total)",
        clauses.len()
    );
}
