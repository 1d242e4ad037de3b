//! Crossed products `G * A` of a group action, and the dual coring on
//! `Hom_A(G*A, A)`.
//!
//! `R = G*A` is the free right A-module with basis `G`, multiplied by
//! `(x.a)(y.b) = (xy).(a^y b)`; the twisted commutation rule is
//! `a.x = x.a^x`. Its right dual carries an A-coring structure: a right
//! A-linear map `phi` is stored in dual-basis coordinates `(phi(x))_{x in G}`
//! as a vector in `A^{|G|}`, block `x` holding the coordinates of `phi(x)`.

use std::sync::Arc;

use crate::algebra::{AlgElem, FiniteAlgebra};
use crate::bimodule::Bimodule;
use crate::coring::{Coring, Grouplike};
use crate::error::Result;
use crate::group::GroupAction;
use crate::mat::Mat;

/// The crossed product algebra with its embeddings.
#[derive(Debug, Clone)]
pub struct CrossedProduct {
    pub algebra: Arc<FiniteAlgebra>,
    pub action: GroupAction,
}

impl CrossedProduct {
    /// Index of the basis vector `x . e_i`.
    pub fn basis_index(&self, x: usize, i: usize) -> usize {
        x * self.action.algebra().dim() + i
    }

    /// `x . 1_A`.
    pub fn embed_group(&self, x: usize) -> AlgElem {
        let base = self.action.algebra();
        let mut v = vec![0; self.algebra.dim()];
        for (i, &c) in base.unit().iter().enumerate() {
            v[self.basis_index(x, i)] = c;
        }
        v
    }

    /// `1_G . a`.
    pub fn embed_algebra(&self, a: &[u64]) -> AlgElem {
        let mut v = vec![0; self.algebra.dim()];
        for (i, &c) in a.iter().enumerate() {
            v[self.basis_index(self.action.group().id(), i)] = c;
        }
        v
    }
}

/// Build `G * A`; associativity is re-validated by the algebra constructor.
pub fn crossed_product(action: &GroupAction) -> Result<CrossedProduct> {
    let base = action.algebra();
    let group = action.group();
    let da = base.dim();
    let n = group.order();
    let dim = n * da;
    let mut sc = vec![0u64; dim * dim * dim];
    for x in group.elements() {
        for i in 0..da {
            for y in group.elements() {
                for j in 0..da {
                    // (x.e_i)(y.e_j) = (xy).(e_i^y * e_j)
                    let twisted = action.apply(y, &base.basis_elem(i));
                    let prod = base.mul(&twisted, &base.basis_elem(j));
                    let xy = group.mul(x, y);
                    let row = x * da + i;
                    let col = y * da + j;
                    for (k, &c) in prod.iter().enumerate() {
                        sc[(row * dim + col) * dim + (xy * da + k)] = c;
                    }
                }
            }
        }
    }
    let mut unit = vec![0u64; dim];
    for (i, &c) in base.unit().iter().enumerate() {
        unit[group.id() * da + i] = c;
    }
    let algebra = Arc::new(FiniteAlgebra::new(base.p(), dim, sc, unit)?);
    Ok(CrossedProduct {
        algebra,
        action: action.clone(),
    })
}

/// The dual coring `R^*` of a crossed product, with the trace grouplike.
#[derive(Debug, Clone)]
pub struct DualCoring {
    pub coring: Coring,
    pub trace: Grouplike,
    pub action: GroupAction,
}

impl DualCoring {
    /// The coordinates of `phi(x)` for a carrier vector.
    pub fn block<'a>(&self, v: &'a [u64], x: usize) -> &'a [u64] {
        let da = self.action.algebra().dim();
        &v[x * da..(x + 1) * da]
    }
}

/// Build the coring on `R^* = Hom_A(R, A)`: bimodule actions
/// `(a.phi)(r) = a.phi(r)` and `(phi.a)(r) = phi(a.r)`, comultiplication
/// `phi -> sum_x (phi.x) (x) x^*` with `(phi.x)(r) = phi(x.r)`, and counit
/// `phi -> phi(1_R)`. The trace map (`phi(x) = 1` for every `x`) is returned
/// as a validated grouplike.
pub fn dual_coring(action: &GroupAction) -> Result<DualCoring> {
    let base = action.algebra().clone();
    let group = action.group().clone();
    let fp = base.fp();
    let da = base.dim();
    let n = group.order();
    let dim = n * da;

    // left action: block-diagonal left multiplication;
    // right action on block x: right multiplication by a^x
    let mut lact = Vec::with_capacity(da);
    let mut ract = Vec::with_capacity(da);
    for k in 0..da {
        let mut l = Mat::zero(dim, dim);
        let mut r = Mat::zero(dim, dim);
        for x in group.elements() {
            let lk = base.left_mul_mat(&base.basis_elem(k));
            let rk = base.right_mul_mat(&action.apply(x, &base.basis_elem(k)));
            for i in 0..da {
                for j in 0..da {
                    l[(x * da + i, x * da + j)] = lk[(i, j)];
                    r[(x * da + i, x * da + j)] = rk[(i, j)];
                }
            }
        }
        lact.push(l);
        ract.push(r);
    }
    let carrier = Arc::new(Bimodule::new(base.clone(), dim, lact, ract)?);

    let cc = crate::tensor::TensorModule::tensor_over(
        carrier.clone(),
        crate::algebra::Subring::full(&base),
        carrier.clone(),
    )?;
    // comul(delta_{(y,i)}) = sum_x delta_{(x^{-1}y, i)} (x) x^*
    let dual_basis: Vec<Vec<u64>> = group
        .elements()
        .map(|x| {
            let mut v = vec![0u64; dim];
            for (k, &c) in base.unit().iter().enumerate() {
                v[x * da + k] = c;
            }
            v
        })
        .collect();
    let comul = Mat::from_columns_with(cc.dim(), dim, |col| {
        let (y, i) = (col / da, col % da);
        let mut out = vec![0u64; cc.dim()];
        for x in group.elements() {
            let shifted = group.mul(group.inv(x), y);
            let mut left = vec![0u64; dim];
            left[shifted * da + i] = 1;
            out = fp.add_vec(&out, &cc.pure(&left, &dual_basis[x]));
        }
        out
    });
    // counit(phi) = phi(1_R) = phi(identity block)
    let counit = Mat::from_columns_with(da, dim, |col| {
        let (y, i) = (col / da, col % da);
        let mut out = vec![0u64; da];
        if y == group.id() {
            out[i] = 1;
        }
        out
    });
    let coring = Coring::new(carrier, comul, counit)?;

    let mut trace_vec = vec![0u64; dim];
    for x in group.elements() {
        for (k, &c) in base.unit().iter().enumerate() {
            trace_vec[x * da + k] = c;
        }
    }
    let trace = coring.grouplike(trace_vec)?;
    Ok(DualCoring {
        coring,
        trace,
        action: action.clone(),
    })
}

/// The identification `Upsilon : R^* (x)_A R^* -> (R (x)_A R)^*`,
/// `phi (x) psi -> (r (x) t -> phi(psi(r).t))`, as a matrix out of the cached
/// tensor square. `(R (x) R)^*` is coordinatized on the free basis
/// `{x (x) y}` with blocks of size `dim A` indexed by `(x, y)`.
pub fn upsilon(dual: &DualCoring) -> Mat {
    let base = dual.action.algebra();
    let group = dual.action.group();
    let fp = base.fp();
    let da = base.dim();
    let n = group.order();
    let dim = n * da;
    let cc = dual.coring.cc();
    // raw basis delta_{(v,i)} (x) delta_{(w,j)} evaluates on x (x) y to
    // [y = v][x = w] e_i * (e_j)^v
    let w = Mat::from_columns_with(n * n * da, dim * dim, |col| {
        let (left, right) = (col / dim, col % dim);
        let (v, i) = (left / da, left % da);
        let (wg, j) = (right / da, right % da);
        let value = base.mul(
            &base.basis_elem(i),
            &dual.action.apply(v, &base.basis_elem(j)),
        );
        let mut out = vec![0u64; n * n * da];
        let block = wg * n + v;
        for (k, &c) in value.iter().enumerate() {
            out[block * da + k] = c;
        }
        out
    });
    w.mul(fp, cc.section())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::budget::Budget;
    use crate::group::{frobenius_matrix, FiniteGroup};

    fn f4() -> Arc<FiniteAlgebra> {
        let sc = vec![1, 0, 0, 1, 0, 1, 1, 1];
        Arc::new(FiniteAlgebra::new(2, 2, sc, vec![1, 0]).unwrap())
    }

    fn frobenius_action() -> GroupAction {
        let a = f4();
        GroupAction::new(
            Arc::new(FiniteGroup::cyclic(2)),
            a.clone(),
            vec![Mat::identity(2), frobenius_matrix(&a)],
        )
        .unwrap()
    }

    #[test]
    fn trivial_crossed_product_is_the_algebra() {
        let a = f4();
        let r = crossed_product(&GroupAction::trivial(a.clone())).unwrap();
        assert_eq!(r.algebra.dim(), a.dim());
        assert_eq!(r.algebra.unit(), a.unit());
    }

    #[test]
    fn c2_star_f4_multiplication() {
        let r = crossed_product(&frobenius_action()).unwrap();
        assert_eq!(r.algebra.dim(), 4);
        // sigma^2 = e
        let sigma = r.embed_group(1);
        assert_eq!(r.algebra.mul(&sigma, &sigma), r.embed_group(0));
        // twisted commutation: a.x = x.a^x for all basis a and x
        let base = r.action.algebra().clone();
        for x in r.action.group().clone().elements() {
            for i in 0..base.dim() {
                let a = r.embed_algebra(&base.basis_elem(i));
                let xg = r.embed_group(x);
                let lhs = r.algebra.mul(&a, &xg);
                let twisted = r.action.apply(x, &base.basis_elem(i));
                let rhs = r.algebra.mul(&xg, &r.embed_algebra(&twisted));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn dual_coring_of_frobenius() {
        let dual = dual_coring(&frobenius_action()).unwrap();
        assert_eq!(dual.coring.dim(), 4);
        // trace in dual coordinates is (1, 1): unit in each block
        assert_eq!(dual.trace.elem(), &[1, 0, 1, 0]);
        // coinvariants of the trace = invariants of the action = F_2
        let coinv = dual.coring.coinvariants(&dual.trace);
        assert_eq!(coinv.dim(), 1);
        assert_eq!(coinv.basis(), &[vec![1, 0]]);
        // the trace is Galois
        assert!(dual.coring.is_galois(&dual.trace).unwrap());
        // three grouplikes, one per unit of F_4
        assert_eq!(dual.coring.grouplikes(&Budget::default()).unwrap().len(), 3);
    }

    #[test]
    fn trivial_group_dual_is_trivial_coring() {
        let a = f4();
        let dual = dual_coring(&GroupAction::trivial(a.clone())).unwrap();
        assert_eq!(dual.coring.dim(), 2);
        assert_eq!(dual.trace.elem(), a.unit().as_slice());
    }

    #[test]
    fn upsilon_identifies_the_tensor_square() {
        let dual = dual_coring(&frobenius_action()).unwrap();
        let u = upsilon(&dual);
        let fp = dual.action.algebra().fp();
        // injective on the quotient, onto the free dual of R (x) R
        assert_eq!(u.rank(fp), dual.coring.cc().dim());
        assert_eq!(u.rows(), u.rank(fp));
    }
}
