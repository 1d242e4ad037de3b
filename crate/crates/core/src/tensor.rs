//! Tensor products of bimodules over a subring, materialized as explicit
//! quotient spaces.
//!
//! The raw space of `M (x)_B N` is `F_p^(dim M * dim N)` with basis `(i, j)`
//! ordered lexicographically as `i * dim N + j`. The balancing subspace is
//! spanned by `m.b (x) n - m (x) b.n` over basis vectors `m, n` and subring
//! basis elements `b`. The quotient keeps a projection matrix and a section
//! (one-sided inverse), so every downstream identity is a matrix identity.

use std::sync::Arc;

use crate::algebra::Subring;
use crate::bimodule::Bimodule;
use crate::error::{Error, Result};
use crate::mat::{echelon_basis, outer, Mat};

#[derive(Debug, Clone)]
pub struct TensorModule {
    left: Arc<Bimodule>,
    right: Arc<Bimodule>,
    middle: Subring,
    dim: usize,
    project: Mat,
    section: Mat,
    balancing: Vec<Vec<u64>>,
    induced: Arc<Bimodule>,
}

/// Quotient of `F_p^width` by the span of `gens`: returns (projection,
/// section, echelon basis of the subspace). The quotient coordinates are the
/// non-pivot raw coordinates, in increasing column order.
fn quotient_maps(fp: &crate::fp::Fp, gens: &[Vec<u64>], width: usize) -> (Mat, Mat, Vec<Vec<u64>>) {
    let basis = echelon_basis(fp, gens, width);
    let mut is_pivot = vec![false; width];
    let mut pivot_row = vec![usize::MAX; width];
    for (r, row) in basis.iter().enumerate() {
        let lead = row.iter().position(|&x| x != 0).expect("zero row");
        is_pivot[lead] = true;
        pivot_row[lead] = r;
    }
    let free: Vec<usize> = (0..width).filter(|&j| !is_pivot[j]).collect();
    let q = free.len();
    let mut project = Mat::zero(q, width);
    for (t, &c) in free.iter().enumerate() {
        project[(t, c)] = 1;
    }
    for j in 0..width {
        if is_pivot[j] {
            // e_j is congruent to minus the free part of its echelon row
            let row = &basis[pivot_row[j]];
            for (t, &c) in free.iter().enumerate() {
                project[(t, j)] = fp.neg(row[c]);
            }
        }
    }
    let mut section = Mat::zero(width, q);
    for (t, &c) in free.iter().enumerate() {
        section[(c, t)] = 1;
    }
    (project, section, basis)
}

impl TensorModule {
    /// `M (x)_B N` for bimodules over the same algebra and a subring `B`.
    pub fn tensor_over(
        left: Arc<Bimodule>,
        middle: Subring,
        right: Arc<Bimodule>,
    ) -> Result<TensorModule> {
        if left.algebra() != right.algebra() {
            return Err(Error::Mismatch {
                expected: "bimodules over the same algebra".into(),
                got: "different parent algebras".into(),
            });
        }
        let algebra = left.algebra().clone();
        let fp = algebra.fp();
        let (l, r) = (left.dim(), right.dim());
        let raw = l * r;

        let mut gens = Vec::new();
        for b in middle.basis() {
            let right_on_left = left.ract_of(b);
            let left_on_right = right.lact_of(b);
            for i in 0..l {
                let mb = right_on_left.column(i);
                let ei: Vec<u64> = (0..l).map(|t| u64::from(t == i)).collect();
                for j in 0..r {
                    let ej: Vec<u64> = (0..r).map(|t| u64::from(t == j)).collect();
                    let bn = left_on_right.column(j);
                    let w1 = outer(fp, &mb, &ej);
                    let w2 = outer(fp, &ei, &bn);
                    gens.push(fp.sub_vec(&w1, &w2));
                }
            }
        }
        let (project, section, balancing) = quotient_maps(fp, &gens, raw);
        let dim = project.rows();

        let id_l = Mat::identity(l);
        let id_r = Mat::identity(r);
        let mut lact = Vec::with_capacity(algebra.dim());
        let mut ract = Vec::with_capacity(algebra.dim());
        for i in 0..algebra.dim() {
            let raw_l = left.lact_basis(i).kron(fp, &id_r);
            let raw_r = id_l.kron(fp, right.ract_basis(i));
            for (g, bal) in balancing.iter().enumerate() {
                if !project
                    .apply(fp, &raw_l.apply(fp, bal))
                    .iter()
                    .all(|&x| x == 0)
                    || !project
                        .apply(fp, &raw_r.apply(fp, bal))
                        .iter()
                        .all(|&x| x == 0)
                {
                    return Err(Error::NotWellDefined { generator: g });
                }
            }
            lact.push(project.mul(fp, &raw_l).mul(fp, &section));
            ract.push(project.mul(fp, &raw_r).mul(fp, &section));
        }
        let induced = Arc::new(Bimodule::new(algebra, dim, lact, ract)?);
        Ok(TensorModule {
            left,
            right,
            middle,
            dim,
            project,
            section,
            balancing,
            induced,
        })
    }

    pub fn left(&self) -> &Arc<Bimodule> {
        &self.left
    }

    pub fn right(&self) -> &Arc<Bimodule> {
        &self.right
    }

    pub fn middle(&self) -> &Subring {
        &self.middle
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn project(&self) -> &Mat {
        &self.project
    }

    pub fn section(&self) -> &Mat {
        &self.section
    }

    pub fn balancing(&self) -> &[Vec<u64>] {
        &self.balancing
    }

    /// The quotient as an A-bimodule.
    pub fn induced(&self) -> &Arc<Bimodule> {
        &self.induced
    }

    /// Image of the pure tensor `m (x) n` in quotient coordinates.
    pub fn pure(&self, m: &[u64], n: &[u64]) -> Vec<u64> {
        let fp = self.left.algebra().fp();
        self.project.apply(fp, &outer(fp, m, n))
    }

    /// Same constituents (up to structural equality)?
    fn same_shape(&self, other: &TensorModule) -> bool {
        self.left == other.left && self.right == other.right && self.middle == other.middle
    }
}

/// The map `f (x) g : M (x)_B N -> M' (x)_B' N'` induced on quotients by a
/// pair of bimodule-map matrices. Fails with `NotWellDefined` if the raw map
/// does not send the source balancing subspace into the target one.
pub fn tensor_pair_map(src: &TensorModule, dst: &TensorModule, f: &Mat, g: &Mat) -> Result<Mat> {
    let composite = tensor_pair_map_unchecked(src, dst, f, g)?;
    let fp = src.left().algebra().fp();
    let raw = f.kron(fp, g);
    for (i, bal) in src.balancing.iter().enumerate() {
        let image = dst.project.apply(fp, &raw.apply(fp, bal));
        if image.iter().any(|&x| x != 0) {
            return Err(Error::NotWellDefined { generator: i });
        }
    }
    Ok(composite)
}

/// As [`tensor_pair_map`] but without the balancing check: the composite
/// `project . (f kron g) . section` through the canonical section. Used while
/// validating coring axioms, where the maps are not yet known to be good.
pub fn tensor_pair_map_unchecked(
    src: &TensorModule,
    dst: &TensorModule,
    f: &Mat,
    g: &Mat,
) -> Result<Mat> {
    if f.cols() != src.left().dim()
        || g.cols() != src.right().dim()
        || f.rows() != dst.left().dim()
        || g.rows() != dst.right().dim()
    {
        return Err(Error::Mismatch {
            expected: "factor maps matching the tensor constituents".into(),
            got: format!("{}x{} and {}x{}", f.rows(), f.cols(), g.rows(), g.cols()),
        });
    }
    let fp = src.left().algebra().fp();
    let raw = f.kron(fp, g);
    Ok(dst.project.mul(fp, &raw).mul(fp, &src.section))
}

/// Collapse `M (x)_B A -> M`, `m (x) a -> m.a` (right factor must be the
/// regular bimodule).
pub fn unit_collapse_right(t: &TensorModule) -> Mat {
    let fp = t.left().algebra().fp();
    let (l, r) = (t.left().dim(), t.right().dim());
    let w = Mat::from_columns_with(l, l * r, |col| {
        let (i, j) = (col / r, col % r);
        t.left().ract_basis(j).column(i)
    });
    w.mul(fp, &t.section)
}

/// Collapse `A (x)_B M -> M`, `a (x) m -> a.m` (left factor must be the
/// regular bimodule).
pub fn unit_collapse_left(t: &TensorModule) -> Mat {
    let fp = t.left().algebra().fp();
    let (l, r) = (t.left().dim(), t.right().dim());
    let w = Mat::from_columns_with(r, l * r, |col| {
        let (i, j) = (col / r, col % r);
        t.right().lact_basis(i).column(j)
    });
    w.mul(fp, &t.section)
}

/// The canonical associativity isomorphism
/// `(M (x)_B N) (x)_B P -> M (x)_B (N (x)_B P)` in quotient coordinates.
///
/// Arguments name the four quotients involved: `mn = M(x)N`,
/// `mn_p = (M(x)N)(x)P`, `np = N(x)P`, `m_np = M(x)(N(x)P)`.
pub fn assoc_iso(
    mn: &TensorModule,
    mn_p: &TensorModule,
    np: &TensorModule,
    m_np: &TensorModule,
) -> Result<Mat> {
    let ok = *mn_p.left() == *mn.induced()
        && *m_np.right() == *np.induced()
        && mn.left == m_np.left
        && mn.right == np.left
        && mn_p.right == np.right
        && mn.middle == np.middle
        && mn.middle == mn_p.middle
        && mn.middle == m_np.middle;
    if !ok {
        return Err(Error::Mismatch {
            expected: "tensors built from the same three factors".into(),
            got: "mismatched constituents".into(),
        });
    }
    let fp = mn.left().algebra().fp();
    let m = mn.left().dim();
    let n = mn.right().dim();
    let p = np.right().dim();
    let q_np = np.dim();

    // raw basis (u, k) of (M(x)N) (x) P maps to sum over (i, j) of the
    // section coefficients of u, placed at m (x) pure_np(j, k)
    let w = Mat::from_columns_with(m_np.dim(), mn.dim() * p, |col| {
        let (u, k) = (col / p, col % p);
        let coeffs = mn.section.column(u);
        let mut raw = vec![0u64; m * q_np];
        for i in 0..m {
            for j in 0..n {
                let c = coeffs[i * n + j];
                if c == 0 {
                    continue;
                }
                let piece = np.project.column(j * p + k);
                for (t, &x) in piece.iter().enumerate() {
                    raw[i * q_np + t] = fp.add(raw[i * q_np + t], fp.mul(c, x));
                }
            }
        }
        m_np.project.apply(fp, &raw)
    });
    for (g, bal) in mn_p.balancing.iter().enumerate() {
        let image = w.apply(fp, bal);
        if image.iter().any(|&x| x != 0) {
            return Err(Error::NotWellDefined { generator: g });
        }
    }
    let iso = w.mul(fp, &mn_p.section);
    if !iso.is_invertible(fp) {
        return Err(Error::Mismatch {
            expected: "bijective associativity map".into(),
            got: format!("rank {}", iso.rank(fp)),
        });
    }
    Ok(iso)
}

/// Both tensors must be `A (x)_B A` and `A (x)_B' A` over the regular
/// bimodule; returns the matrix of `a (x) a' -> a.alpha (x) alpha^{-1}.a'`
/// on quotient coordinates, checking well-definedness.
pub fn twisted_identity_map(
    src: &TensorModule,
    dst: &TensorModule,
    alpha: &[u64],
    alpha_inv: &[u64],
) -> Result<Mat> {
    let algebra = src.left().algebra().clone();
    let fp = algebra.fp();
    let d = algebra.dim();
    let w = Mat::from_columns_with(dst.dim(), d * d, |col| {
        let (i, j) = (col / d, col % d);
        let u = algebra.mul(&algebra.basis_elem(i), alpha);
        let v = algebra.mul(alpha_inv, &algebra.basis_elem(j));
        dst.pure(&u, &v)
    });
    for (g, bal) in src.balancing.iter().enumerate() {
        if w.apply(fp, bal).iter().any(|&x| x != 0) {
            return Err(Error::NotWellDefined { generator: g });
        }
    }
    Ok(w.mul(fp, &src.section))
}

impl PartialEq for TensorModule {
    fn eq(&self, other: &Self) -> bool {
        self.same_shape(other) && self.project == other.project
    }
}

impl Eq for TensorModule {}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::FiniteAlgebra;

    fn f4() -> Arc<FiniteAlgebra> {
        let sc = vec![1, 0, 0, 1, 0, 1, 1, 1];
        Arc::new(FiniteAlgebra::new(2, 2, sc, vec![1, 0]).unwrap())
    }

    fn regular(a: &Arc<FiniteAlgebra>) -> Arc<Bimodule> {
        Arc::new(Bimodule::regular(a.clone()))
    }

    #[test]
    fn tensor_over_whole_algebra_collapses() {
        let a = f4();
        let reg = regular(&a);
        let t = TensorModule::tensor_over(reg.clone(), Subring::full(&a), reg).unwrap();
        assert_eq!(t.dim(), a.dim());
        // 1 (x) 1 is nonzero in the quotient
        let one = t.pure(a.unit(), a.unit());
        assert!(one.iter().any(|&x| x != 0));
    }

    #[test]
    fn tensor_over_prime_subfield_is_full() {
        let a = f4();
        let reg = regular(&a);
        let t = TensorModule::tensor_over(reg.clone(), Subring::prime(&a), reg).unwrap();
        assert_eq!(t.dim(), 4);
        // w (x) w^2 is distinct from 1 (x) 1
        let x = t.pure(&[0, 1], &[1, 1]);
        let y = t.pure(&[1, 0], &[1, 0]);
        assert_ne!(x, y);
        assert!(x.iter().any(|&v| v != 0));
    }

    #[test]
    fn balancing_moves_middle_elements() {
        let a = f4();
        let reg = regular(&a);
        let t = TensorModule::tensor_over(reg.clone(), Subring::full(&a), reg).unwrap();
        // m.b (x) n = m (x) b.n for b in the middle
        let w = vec![0u64, 1];
        let lhs = t.pure(&a.mul(&[1, 0], &w), &[1, 1]);
        let rhs = t.pure(&[1, 0], &a.mul(&w, &[1, 1]));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn projection_section_identities() {
        let a = f4();
        let reg = regular(&a);
        let fp = *a.fp();
        for middle in [Subring::prime(&a), Subring::full(&a)] {
            let t = TensorModule::tensor_over(reg.clone(), middle, reg.clone()).unwrap();
            let ps = t.project().mul(&fp, t.section());
            assert_eq!(ps, Mat::identity(t.dim()));
            // kernel of project is exactly the balancing subspace
            assert_eq!(t.project().kernel(&fp).len(), t.balancing().len());
            for bal in t.balancing() {
                assert!(t.project().apply(&fp, bal).iter().all(|&x| x == 0));
            }
        }
    }

    #[test]
    fn induced_actions_act_on_pure_tensors() {
        let a = f4();
        let reg = regular(&a);
        let t = TensorModule::tensor_over(reg.clone(), Subring::prime(&a), reg).unwrap();
        let w = vec![0u64, 1];
        for i in 0..2usize {
            let e = a.basis_elem(i);
            let lhs = t.induced().act_left(&e, &t.pure(&w, &[1, 1]));
            let rhs = t.pure(&a.mul(&e, &w), &[1, 1]);
            assert_eq!(lhs, rhs);
            let lhs = t.induced().act_right(&t.pure(&w, &[1, 1]), &e);
            let rhs = t.pure(&w, &a.mul(&[1, 1], &e));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn triple_tensor_associator_is_bijective() {
        let a = f4();
        let reg = regular(&a);
        let b = Subring::prime(&a);
        let mn = TensorModule::tensor_over(reg.clone(), b.clone(), reg.clone()).unwrap();
        let np = TensorModule::tensor_over(reg.clone(), b.clone(), reg.clone()).unwrap();
        let mn_p = TensorModule::tensor_over(mn.induced().clone(), b.clone(), reg.clone()).unwrap();
        let m_np = TensorModule::tensor_over(reg.clone(), b.clone(), np.induced().clone()).unwrap();
        assert_eq!(mn_p.dim(), 8);
        let iso = assoc_iso(&mn, &mn_p, &np, &m_np).unwrap();
        // defining property on pure tensors: (m(x)n)(x)p -> m(x)(n(x)p)
        let fp = *a.fp();
        let (m, n, p) = (vec![0u64, 1], vec![1u64, 1], vec![1u64, 0]);
        let lhs = iso.apply(&fp, &mn_p.pure(&mn.pure(&m, &n), &p));
        let rhs = m_np.pure(&m, &np.pure(&n, &p));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn unit_collapse_maps() {
        let a = f4();
        let reg = regular(&a);
        let t = TensorModule::tensor_over(reg.clone(), Subring::full(&a), reg).unwrap();
        let fp = *a.fp();
        let right = unit_collapse_right(&t);
        let left = unit_collapse_left(&t);
        let w = vec![0u64, 1];
        let v = t.pure(&w, &[1, 1]);
        assert_eq!(right.apply(&fp, &v), a.mul(&w, &[1, 1]));
        assert_eq!(left.apply(&fp, &v), a.mul(&w, &[1, 1]));
    }
}
