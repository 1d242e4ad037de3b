//! Coring factories: Sweedler corings of ring extensions, duals of crossed
//! products with the cocycle dictionary, comodule-algebra corings, and the
//! diagonal direct-sum coring used as a non-Galois control.

pub mod cocycle;
pub mod crossed;
pub mod hopf;
pub mod sweedler;

pub use cocycle::{
    are_cohomologous, clasico_check, h0, h1, theta, theta_inv, z1, ClasicoReport, Cocycle,
};
pub use crossed::{crossed_product, dual_coring, upsilon, CrossedProduct, DualCoring};
pub use hopf::{
    comodule_algebra_coring, gl_embedding_check, group_algebra, ComoduleAlgebra, ComoduleCoring,
    GlEmbeddingReport, HopfData,
};
pub use sweedler::{psi_iso, sweedler, PsiIso, SweedlerCoring};

use std::sync::Arc;

use crate::algebra::FiniteAlgebra;
use crate::bimodule::Bimodule;
use crate::coring::Coring;
use crate::error::Result;
use crate::mat::Mat;
use crate::tensor::TensorModule;

/// A direct sum of `copies` trivial corings on `A`: the carrier is
/// `A^copies`, comultiplication is diagonal per summand, and the counit
/// forgets the summand. For more than one copy the summand grouplikes are
/// not Galois (the canonical map lands in a single summand).
pub fn direct_sum_trivial_coring(algebra: &Arc<FiniteAlgebra>, copies: usize) -> Result<Coring> {
    let fp = algebra.fp();
    let da = algebra.dim();
    let dim = copies * da;
    let id_n = Mat::identity(copies);
    let lact: Vec<Mat> = (0..da)
        .map(|k| id_n.kron(fp, &algebra.left_mul_mat(&algebra.basis_elem(k))))
        .collect();
    let ract: Vec<Mat> = (0..da)
        .map(|k| id_n.kron(fp, &algebra.right_mul_mat(&algebra.basis_elem(k))))
        .collect();
    let carrier = Arc::new(Bimodule::new(algebra.clone(), dim, lact, ract)?);
    let cc = TensorModule::tensor_over(
        carrier.clone(),
        crate::algebra::Subring::full(algebra),
        carrier.clone(),
    )?;
    let comul = Mat::from_columns_with(cc.dim(), dim, |col| {
        let (s, i) = (col / da, col % da);
        let mut left = vec![0u64; dim];
        left[s * da + i] = 1;
        let mut right = vec![0u64; dim];
        for (k, &c) in algebra.unit().iter().enumerate() {
            right[s * da + k] = c;
        }
        cc.pure(&left, &right)
    });
    let counit = Mat::from_columns_with(da, dim, |col| {
        let i = col % da;
        algebra.basis_elem(i)
    });
    Coring::new(carrier, comul, counit)
}

/// The trivial coring `C = A`.
pub fn trivial_coring(algebra: &Arc<FiniteAlgebra>) -> Result<Coring> {
    direct_sum_trivial_coring(algebra, 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::budget::Budget;
    use crate::descent::{mejor_check, MejorOutcome};

    fn f2() -> Arc<FiniteAlgebra> {
        Arc::new(FiniteAlgebra::new(2, 1, vec![1], vec![1]).unwrap())
    }

    #[test]
    fn direct_sum_has_non_galois_grouplikes() {
        let a = f2();
        let coring = direct_sum_trivial_coring(&a, 2).unwrap();
        let budget = Budget::default();
        let gls = coring.grouplikes(&budget).unwrap();
        assert_eq!(gls.len(), 2);
        for g in &gls {
            assert!(!coring.is_galois(g).unwrap());
            // the canonical map has rank 1 into the 2-dim carrier
            let can = coring.canonical_map(g).unwrap();
            assert_eq!(can.map.rank(), 1);
        }
        // the two summand grouplikes are separate conjugation classes
        let units = a.units(budget.elements).unwrap();
        let classes = crate::descent::d1(&coring, &gls[0], &units, &budget).unwrap();
        assert_eq!(classes.len(), 2);
        // no Galois base point: the group-structure check is not applicable
        let aut = coring.coring_automorphisms(&budget).unwrap();
        match mejor_check(&coring, &gls[0], &units, &aut, &budget).unwrap() {
            MejorOutcome::NotApplicable { .. } => {}
            MejorOutcome::Checked(_) => panic!("expected NotApplicable"),
        }
    }

    #[test]
    fn trivial_coring_is_one_dimensional_over_fp() {
        let a = f2();
        let coring = trivial_coring(&a).unwrap();
        assert_eq!(coring.dim(), 1);
        let gls = coring.grouplikes(&Budget::default()).unwrap();
        assert_eq!(gls.len(), 1);
        assert!(coring.is_galois(&gls[0]).unwrap());
    }
}
