//! Nonabelian 1-cocycles of a group action on the unit group, their
//! cohomology classes, and the dictionary between cocycles and grouplikes of
//! the dual crossed-product coring.

use std::collections::HashMap;

use crate::algebra::{AlgElem, UnitGroup};
use crate::budget::Budget;
use crate::constructions::crossed::DualCoring;
use crate::coring::Grouplike;
use crate::descent::{d0, d1, PointedOrbitSet, UnitSubgroup};
use crate::error::{Error, Result};
use crate::fp::pow_u128;
use crate::group::GroupAction;

/// A unit-valued function on the group with `f(id) = 1` satisfying the
/// twisted identity `f(xy) = f(y) * f(x)^y`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Cocycle {
    values: Vec<AlgElem>,
}

impl Cocycle {
    pub fn new(action: &GroupAction, values: Vec<AlgElem>) -> Result<Self> {
        let algebra = action.algebra();
        let group = action.group();
        if values.len() != group.order() {
            return Err(Error::Mismatch {
                expected: format!("{} values", group.order()),
                got: format!("{}", values.len()),
            });
        }
        for v in &values {
            if !algebra.is_unit(v) {
                return Err(Error::NotAUnit);
            }
        }
        let id = group.id();
        if values[id] != *algebra.unit() {
            return Err(Error::NotACocycle { x: id, y: id });
        }
        for x in group.elements() {
            for y in group.elements() {
                let lhs = &values[group.mul(x, y)];
                let rhs = algebra.mul(&values[y], &action.apply(y, &values[x]));
                if *lhs != rhs {
                    return Err(Error::NotACocycle { x, y });
                }
            }
        }
        Ok(Cocycle { values })
    }

    pub fn trivial(action: &GroupAction) -> Self {
        Cocycle {
            values: vec![action.algebra().unit().clone(); action.group().order()],
        }
    }

    pub fn values(&self) -> &[AlgElem] {
        &self.values
    }

    pub fn value(&self, x: usize) -> &AlgElem {
        &self.values[x]
    }

    /// Concatenated coordinates, the point form used in orbit sets.
    pub fn flatten(&self) -> Vec<u64> {
        self.values.iter().flatten().copied().collect()
    }
}

/// Restriction of a dual-coring grouplike to the group basis: the cocycle
/// `x -> h(x)`.
pub fn theta(dual: &DualCoring, h: &Grouplike) -> Result<Cocycle> {
    let group = dual.action.group();
    let values: Vec<AlgElem> = group
        .elements()
        .map(|x| dual.block(h.elem(), x).to_vec())
        .collect();
    Cocycle::new(&dual.action, values)
}

/// The inverse dictionary: a cocycle determines the right A-linear map
/// `x.a -> f(x).a`, which is a grouplike of the dual coring.
pub fn theta_inv(dual: &DualCoring, f: &Cocycle) -> Result<Grouplike> {
    dual.coring.grouplike(f.flatten())
}

/// All 1-cocycles, sorted. Candidate values are assigned on a generating set
/// of the group, extended along the identity `f(x.s) = f(s) * f(x)^s`, and
/// full tables failing the identity anywhere are rejected.
pub fn z1(action: &GroupAction, units: &UnitGroup, budget: &Budget) -> Result<Vec<Cocycle>> {
    let algebra = action.algebra();
    let group = action.group();
    let n = group.order();

    // greedy generating set and a spanning order: each non-identity element
    // is reached as known * generator
    let mut gens: Vec<usize> = Vec::new();
    let mut reach: Vec<Option<(usize, usize)>> = vec![None; n]; // (known, gen)
    let mut known = vec![group.id()];
    let mut in_known = vec![false; n];
    in_known[group.id()] = true;
    loop {
        let mut i = 0;
        while i < known.len() {
            let x = known[i];
            for &s in &gens {
                let z = group.mul(x, s);
                if !in_known[z] {
                    in_known[z] = true;
                    reach[z] = Some((x, s));
                    known.push(z);
                }
            }
            i += 1;
        }
        match (0..n).find(|&x| !in_known[x]) {
            Some(next) => gens.push(next),
            None => break,
        }
    }

    let needed = pow_u128(units.len() as u64, gens.len());
    if needed > budget.elements as u128 {
        return Err(Error::TooLarge {
            needed,
            budget: budget.elements,
        });
    }

    let mut out = Vec::new();
    let mut assignment = vec![0usize; gens.len()];
    loop {
        let mut values: Vec<Option<AlgElem>> = vec![None; n];
        values[group.id()] = Some(algebra.unit().clone());
        for (slot, &g) in gens.iter().enumerate() {
            values[g] = Some(units.elem(assignment[slot]).clone());
        }
        for &z in &known {
            if values[z].is_some() {
                continue;
            }
            let (x, s) = reach[z].expect("spanning order covers the group");
            let fx = values[x].clone().expect("prefix already assigned");
            let fs = values[s].clone().expect("generators assigned");
            values[z] = Some(algebra.mul(&fs, &action.apply(s, &fx)));
        }
        let table: Vec<AlgElem> = values.into_iter().map(|v| v.expect("filled")).collect();
        if let Ok(cocycle) = Cocycle::new(action, table) {
            out.push(cocycle);
        }
        // odometer over unit assignments
        let mut pos = gens.len();
        loop {
            if pos == 0 {
                out.sort();
                out.dedup();
                return Ok(out);
            }
            pos -= 1;
            assignment[pos] += 1;
            if assignment[pos] < units.len() {
                break;
            }
            assignment[pos] = 0;
        }
    }
}

/// `f` and `h` are cohomologous when `f(x) = alpha^{-1} h(x) alpha^x` for
/// some unit `alpha` and every `x`.
pub fn are_cohomologous(action: &GroupAction, f: &Cocycle, h: &Cocycle, units: &UnitGroup) -> bool {
    let algebra = action.algebra();
    let group = action.group();
    (0..units.len()).any(|i| {
        let alpha = units.elem(i);
        let alpha_inv = units.inverse_of(i);
        group.elements().all(|x| {
            let twisted = algebra.mul(&algebra.mul(alpha_inv, h.value(x)), &action.apply(x, alpha));
            *f.value(x) == twisted
        })
    })
}

/// `H^0`: the subgroup of units fixed by every group element.
pub fn h0(action: &GroupAction, units: &UnitGroup) -> Result<UnitSubgroup> {
    let elements: Vec<AlgElem> = units
        .elements()
        .iter()
        .filter(|alpha| {
            action
                .group()
                .elements()
                .all(|x| action.apply(x, alpha) == **alpha)
        })
        .cloned()
        .collect();
    UnitSubgroup::new(action.algebra(), elements)
}

/// `H^1`: cohomology classes of 1-cocycles, pointed at the class of the
/// trivial cocycle.
pub fn h1(action: &GroupAction, units: &UnitGroup, budget: &Budget) -> Result<PointedOrbitSet> {
    let algebra = action.algebra();
    let group = action.group();
    let cocycles = z1(action, units, budget)?;
    let index: HashMap<Vec<u64>, usize> = cocycles
        .iter()
        .enumerate()
        .map(|(i, c)| (c.flatten(), i))
        .collect();
    let gens: Vec<usize> = units.generators(algebra);
    let mut class_of: Vec<Option<usize>> = vec![None; cocycles.len()];
    let mut orbits: Vec<Vec<Vec<u64>>> = Vec::new();
    for start in 0..cocycles.len() {
        if class_of[start].is_some() {
            continue;
        }
        let id = orbits.len();
        let mut orbit = Vec::new();
        let mut queue = vec![start];
        class_of[start] = Some(id);
        orbit.push(cocycles[start].flatten());
        while let Some(cur) = queue.pop() {
            for &gi in &gens {
                let alpha = units.elem(gi);
                let alpha_inv = units.inverse_of(gi);
                let twisted: Vec<AlgElem> = group
                    .elements()
                    .map(|x| {
                        algebra.mul(
                            &algebra.mul(alpha_inv, cocycles[cur].value(x)),
                            &action.apply(x, alpha),
                        )
                    })
                    .collect();
                let key: Vec<u64> = twisted.iter().flatten().copied().collect();
                let j = *index.get(&key).expect("twist of a cocycle is a cocycle");
                if class_of[j].is_none() {
                    class_of[j] = Some(id);
                    orbit.push(key);
                    queue.push(j);
                }
            }
        }
        orbits.push(orbit);
    }
    PointedOrbitSet::from_orbits(orbits, &Cocycle::trivial(action).flatten())
}

/// Structured comparison of the descent data of the dual coring at the trace
/// with the nonabelian cohomology of the action.
#[derive(Debug, Clone)]
pub struct ClasicoReport {
    pub z1_count: usize,
    pub grouplike_count: usize,
    /// Theta and its inverse are mutually inverse bijections.
    pub theta_bijective: bool,
    /// The trace corresponds to the trivial cocycle.
    pub trace_maps_to_trivial: bool,
    /// Grouplikes are conjugate exactly when their cocycles are cohomologous.
    pub conjugate_iff_cohomologous: bool,
    /// Theta induces a base-point preserving bijection `D1 -> H1`.
    pub pointed_bijection: bool,
    /// `D0` at the trace equals `H^0` as a set of units.
    pub d0_equals_h0: bool,
    pub d1_classes: usize,
    pub h1_classes: usize,
}

impl ClasicoReport {
    pub fn passed(&self) -> bool {
        self.theta_bijective
            && self.trace_maps_to_trivial
            && self.conjugate_iff_cohomologous
            && self.pointed_bijection
            && self.d0_equals_h0
    }
}

pub fn clasico_check(
    dual: &DualCoring,
    units: &UnitGroup,
    budget: &Budget,
) -> Result<ClasicoReport> {
    let action = &dual.action;
    let grouplikes = dual.coring.grouplikes(budget)?;
    let cocycles = z1(action, units, budget)?;

    let mut theta_bijective = grouplikes.len() == cocycles.len();
    if theta_bijective {
        for g in &grouplikes {
            match theta(dual, g) {
                Ok(c) => {
                    theta_bijective &= theta_inv(dual, &c)? == *g;
                    theta_bijective &= cocycles.contains(&c);
                }
                Err(_) => theta_bijective = false,
            }
        }
        for c in &cocycles {
            let g = theta_inv(dual, c)?;
            theta_bijective &= theta(dual, &g)? == *c;
        }
    }
    let trace_maps_to_trivial = theta(dual, &dual.trace)? == Cocycle::trivial(action);

    let classes = d1(&dual.coring, &dual.trace, units, budget)?;
    let mut conjugate_iff_cohomologous = true;
    for g in &grouplikes {
        for h in &grouplikes {
            let conjugate = classes.class_of(g.elem()) == classes.class_of(h.elem());
            let cohomologous = are_cohomologous(action, &theta(dual, g)?, &theta(dual, h)?, units);
            conjugate_iff_cohomologous &= conjugate == cohomologous;
        }
    }

    let coh_classes = h1(action, units, budget)?;
    let mut pointed_bijection = classes.len() == coh_classes.len();
    if pointed_bijection {
        let mut images = Vec::new();
        for orbit in classes.orbits() {
            let rep = dual.coring.grouplike(orbit[0].clone())?;
            let image = coh_classes
                .class_of(&theta(dual, &rep)?.flatten())
                .expect("cocycle of a grouplike is in Z1");
            // the whole orbit must land in one class
            for point in orbit {
                let g = dual.coring.grouplike(point.clone())?;
                pointed_bijection &=
                    coh_classes.class_of(&theta(dual, &g)?.flatten()) == Some(image);
            }
            images.push(image);
        }
        let mut distinct = images.clone();
        distinct.sort_unstable();
        distinct.dedup();
        pointed_bijection &= distinct.len() == images.len();
        pointed_bijection &=
            images.get(classes.distinguished()) == Some(&coh_classes.distinguished());
    }

    let d0_group = d0(&dual.coring, &dual.trace, budget)?;
    let invariant_units = h0(action, units)?;
    let d0_equals_h0 = d0_group == invariant_units;

    Ok(ClasicoReport {
        z1_count: cocycles.len(),
        grouplike_count: grouplikes.len(),
        theta_bijective,
        trace_maps_to_trivial,
        conjugate_iff_cohomologous,
        pointed_bijection,
        d0_equals_h0,
        d1_classes: classes.len(),
        h1_classes: coh_classes.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::FiniteAlgebra;
    use crate::constructions::crossed::dual_coring;
    use crate::group::{frobenius_matrix, FiniteGroup, GroupAction};
    use crate::mat::Mat;
    use std::sync::Arc;

    fn frobenius_action() -> GroupAction {
        let sc = vec![1, 0, 0, 1, 0, 1, 1, 1];
        let a = Arc::new(FiniteAlgebra::new(2, 2, sc, vec![1, 0]).unwrap());
        GroupAction::new(
            Arc::new(FiniteGroup::cyclic(2)),
            a.clone(),
            vec![Mat::identity(2), frobenius_matrix(&a)],
        )
        .unwrap()
    }

    #[test]
    fn hilbert_90_for_frobenius_on_f4() {
        let action = frobenius_action();
        let budget = Budget::default();
        let units = action.algebra().units(budget.elements).unwrap();
        // every unit u of F_4 satisfies u * u^sigma = u^3 = 1
        let cocycles = z1(&action, &units, &budget).unwrap();
        assert_eq!(cocycles.len(), 3);
        let classes = h1(&action, &units, &budget).unwrap();
        assert!(classes.is_trivial());
        // invariant units of the Frobenius: only 1
        assert_eq!(h0(&action, &units).unwrap().order(), 1);
    }

    #[test]
    fn cocycle_validation() {
        let action = frobenius_action();
        let a = action.algebra().clone();
        // sigma -> w is a cocycle: w * w^sigma = w^3 = 1
        let w = vec![0u64, 1];
        assert!(Cocycle::new(&action, vec![a.unit().clone(), w]).is_ok());
        // a non-unit value is rejected
        assert!(matches!(
            Cocycle::new(&action, vec![a.unit().clone(), vec![0, 0]]),
            Err(Error::NotAUnit)
        ));
    }

    #[test]
    fn theta_round_trip_on_the_trace() {
        let action = frobenius_action();
        let dual = dual_coring(&action).unwrap();
        let t = theta(&dual, &dual.trace).unwrap();
        assert_eq!(t, Cocycle::trivial(&action));
        assert_eq!(theta_inv(&dual, &t).unwrap(), dual.trace);
    }

    #[test]
    fn trivial_group_has_one_cocycle() {
        let sc = vec![1, 0, 0, 1, 0, 1, 1, 1];
        let a = Arc::new(FiniteAlgebra::new(2, 2, sc, vec![1, 0]).unwrap());
        let action = GroupAction::trivial(a);
        let budget = Budget::default();
        let units = action.algebra().units(budget.elements).unwrap();
        let cocycles = z1(&action, &units, &budget).unwrap();
        assert_eq!(cocycles.len(), 1);
        let classes = h1(&action, &units, &budget).unwrap();
        assert!(classes.is_trivial());
    }
}
