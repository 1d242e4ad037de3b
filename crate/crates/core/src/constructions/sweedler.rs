//! The Sweedler coring `A (x)_B A` of a ring extension `B <= A`, and the
//! coring isomorphisms `psi_alpha` that twist the base subring.

use std::sync::Arc;

use crate::algebra::{FiniteAlgebra, Subring};
use crate::bimodule::Bimodule;
use crate::coring::{Coring, Grouplike};
use crate::error::{Error, Result};
use crate::mat::Mat;
use crate::tensor::{tensor_pair_map, twisted_identity_map, TensorModule};

/// The Sweedler coring of an extension, with its distinguished grouplike
/// `1 (x) 1` and the underlying tensor quotient.
#[derive(Debug, Clone)]
pub struct SweedlerCoring {
    pub coring: Coring,
    pub base: Grouplike,
    pub tensor: TensorModule,
    pub subring: Subring,
}

/// Build `A (x)_B A` with comultiplication `a (x) a' -> (a (x) 1) (x)_A (1 (x) a')`
/// and counit the multiplication map.
pub fn sweedler(algebra: &Arc<FiniteAlgebra>, subring: &Subring) -> Result<SweedlerCoring> {
    let fp = algebra.fp();
    let reg = Arc::new(Bimodule::regular(algebra.clone()));
    let tensor = TensorModule::tensor_over(reg.clone(), subring.clone(), reg)?;
    let carrier = tensor.induced().clone();
    let d = algebra.dim();

    // the tensor square is rebuilt identically inside Coring::new; build it
    // here once more to express the comultiplication columns
    let cc = TensorModule::tensor_over(carrier.clone(), Subring::full(algebra), carrier.clone())?;
    let left_leg: Vec<Vec<u64>> = (0..d)
        .map(|i| tensor.pure(&algebra.basis_elem(i), algebra.unit()))
        .collect();
    let right_leg: Vec<Vec<u64>> = (0..d)
        .map(|j| tensor.pure(algebra.unit(), &algebra.basis_elem(j)))
        .collect();
    let comul = Mat::from_columns_with(cc.dim(), carrier.dim(), |u| {
        let coeffs = tensor.section().column(u);
        let mut out = vec![0u64; cc.dim()];
        for i in 0..d {
            for j in 0..d {
                let c = coeffs[i * d + j];
                if c != 0 {
                    let term = cc.pure(&left_leg[i], &right_leg[j]);
                    out = fp.add_vec(&out, &fp.scale_vec(c, &term));
                }
            }
        }
        out
    });
    let counit = Mat::from_columns_with(d, carrier.dim(), |u| {
        let coeffs = tensor.section().column(u);
        let mut out = vec![0u64; d];
        for i in 0..d {
            for j in 0..d {
                let c = coeffs[i * d + j];
                if c != 0 {
                    let prod = algebra.mul(&algebra.basis_elem(i), &algebra.basis_elem(j));
                    out = fp.add_vec(&out, &fp.scale_vec(c, &prod));
                }
            }
        }
        out
    });
    let coring = Coring::new(carrier, comul, counit)?;
    let base = coring.grouplike(tensor.pure(algebra.unit(), algebra.unit()))?;
    Ok(SweedlerCoring {
        coring,
        base,
        tensor,
        subring: subring.clone(),
    })
}

/// The coring isomorphism `psi_alpha : A (x)_B A -> A (x)_{alpha^{-1} B alpha} A`,
/// `a (x) a' -> a.alpha (x) alpha^{-1}.a'`, verified bijective and compatible
/// with both coring structures.
#[derive(Debug, Clone)]
pub struct PsiIso {
    pub source: SweedlerCoring,
    pub target: SweedlerCoring,
    pub matrix: Mat,
}

pub fn psi_iso(algebra: &Arc<FiniteAlgebra>, subring: &Subring, alpha: &[u64]) -> Result<PsiIso> {
    let fp = algebra.fp();
    let alpha_inv = algebra.inverse(alpha)?;
    let conjugated = algebra.conjugate_subring(alpha, subring)?;
    let source = sweedler(algebra, subring)?;
    let target = sweedler(algebra, &conjugated)?;
    let matrix = twisted_identity_map(&source.tensor, &target.tensor, alpha, &alpha_inv)?;
    if !matrix.is_invertible(fp) {
        return Err(Error::Mismatch {
            expected: "bijective twisting map".into(),
            got: format!("rank {}", matrix.rank(fp)),
        });
    }
    // counit compatibility
    if target.coring.counit().matrix().mul(fp, &matrix) != *source.coring.counit().matrix() {
        return Err(Error::Mismatch {
            expected: "counit-compatible twisting map".into(),
            got: "counit changes under psi".into(),
        });
    }
    // comultiplication compatibility through psi (x) psi
    let psi_psi = tensor_pair_map(source.coring.cc(), target.coring.cc(), &matrix, &matrix)?;
    let lhs = target.coring.comul().matrix().mul(fp, &matrix);
    let rhs = psi_psi.mul(fp, source.coring.comul().matrix());
    if lhs != rhs {
        return Err(Error::Mismatch {
            expected: "comultiplication-compatible twisting map".into(),
            got: "comultiplication changes under psi".into(),
        });
    }
    Ok(PsiIso {
        source,
        target,
        matrix,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::budget::Budget;

    fn f4() -> Arc<FiniteAlgebra> {
        let sc = vec![1, 0, 0, 1, 0, 1, 1, 1];
        Arc::new(FiniteAlgebra::new(2, 2, sc, vec![1, 0]).unwrap())
    }

    #[test]
    fn sweedler_over_the_whole_algebra_is_trivial() {
        let a = f4();
        let sw = sweedler(&a, &Subring::full(&a)).unwrap();
        assert_eq!(sw.coring.dim(), 2);
        let gls = sw.coring.grouplikes(&Budget::default()).unwrap();
        assert_eq!(gls.len(), 1);
        assert_eq!(gls[0], sw.base);
    }

    #[test]
    fn sweedler_f4_over_f2() {
        let a = f4();
        let sw = sweedler(&a, &Subring::prime(&a)).unwrap();
        assert_eq!(sw.coring.dim(), 4);
        let gls = sw.coring.grouplikes(&Budget::default()).unwrap();
        assert_eq!(gls.len(), 3);
        // the grouplikes are exactly alpha (x) alpha^{-1} over the units
        let units = a.units(1 << 10).unwrap();
        let mut expected: Vec<Vec<u64>> = (0..units.len())
            .map(|i| sw.tensor.pure(units.elem(i), units.inverse_of(i)))
            .collect();
        expected.sort();
        let got: Vec<Vec<u64>> = gls.iter().map(|g| g.elem().to_vec()).collect();
        assert_eq!(got, expected);
        // coinvariants at 1 (x) 1 is the base subring
        let coinv = sw.coring.coinvariants(&sw.base);
        assert_eq!(coinv, Subring::prime(&a));
    }

    #[test]
    fn counit_of_sweedler_is_multiplication() {
        let a = f4();
        let sw = sweedler(&a, &Subring::prime(&a)).unwrap();
        // rank 2 with 2-dimensional kernel
        assert_eq!(sw.coring.counit().rank(), 2);
        assert_eq!(sw.coring.counit().kernel().len(), 2);
        let w = vec![0u64, 1];
        let w2 = vec![1u64, 1];
        let v = sw.tensor.pure(&w, &w2);
        assert_eq!(sw.coring.counit().apply(&v), a.mul(&w, &w2));
    }

    #[test]
    fn psi_of_one_is_identity() {
        let a = f4();
        let psi = psi_iso(&a, &Subring::prime(&a), &[1, 0]).unwrap();
        assert_eq!(psi.matrix, Mat::identity(4));
    }

    #[test]
    fn psi_is_an_antihomomorphism_on_the_subring_stabilizer() {
        // the prime subfield is central, so every unit stabilizes it and all
        // the twisted maps are endomorphisms of the same coring
        let a = f4();
        let b = Subring::prime(&a);
        let fp = *a.fp();
        let units = a.units(1 << 10).unwrap();
        for alpha in units.elements() {
            for beta in units.elements() {
                let psi_a = psi_iso(&a, &b, alpha).unwrap().matrix;
                let psi_b = psi_iso(&a, &b, beta).unwrap().matrix;
                let psi_ab = psi_iso(&a, &b, &a.mul(alpha, beta)).unwrap().matrix;
                assert_eq!(psi_ab, psi_b.mul(&fp, &psi_a));
            }
        }
    }

    #[test]
    fn hom_space_between_conjugate_grouplikes() {
        let a = f4();
        let sw = sweedler(&a, &Subring::prime(&a)).unwrap();
        let w = vec![0u64, 1];
        // h = w . (1 (x) 1) . w^{-1} = w (x) w^2
        let h = sw.coring.conjugate_grouplike(&w, &sw.base).unwrap();
        assert_eq!(h.elem(), sw.tensor.pure(&w, &[1, 1]).as_slice());
        // { a : a.g = h.a } = w . F2
        let homs = sw.coring.comodule_homs(&sw.base, &h);
        assert_eq!(homs, vec![vec![0, 1]]);
        // an invertible member of the hom-space conjugates g to h
        for alpha in &homs {
            if a.is_unit(alpha) {
                assert_eq!(sw.coring.conjugate_grouplike(alpha, &sw.base).unwrap(), h);
            }
        }
    }
}
