//! Hopf algebras over F_p, comodule algebras, and the coring `A (x) H`
//! attached to a comodule algebra.
//!
//! Tensor products over the base field need no balancing, so `H (x) H` is
//! coordinatized on the flat basis `(i, j) -> i * dim H + j` throughout.

use std::sync::Arc;

use crate::algebra::{AlgElem, FiniteAlgebra, Subring, UnitGroup};
use crate::bimodule::Bimodule;
use crate::budget::Budget;
use crate::coring::{Coring, CoringAutGroup, Grouplike};
use crate::descent::{mejor_check, MejorOutcome};
use crate::error::{Error, Result};
use crate::fp::{check_budget, VectorIter};
use crate::group::FiniteGroup;
use crate::mat::{outer, Mat};
use crate::tensor::TensorModule;

/// A Hopf algebra over F_p: an algebra with comultiplication, counit, and
/// antipode matrices, all axioms validated exhaustively.
#[derive(Debug, Clone)]
pub struct HopfData {
    algebra: Arc<FiniteAlgebra>,
    comul: Mat,
    counit: Mat,
    antipode: Mat,
}

impl HopfData {
    pub fn new(
        algebra: Arc<FiniteAlgebra>,
        comul: Mat,
        counit: Mat,
        antipode: Mat,
    ) -> Result<Self> {
        let d = algebra.dim();
        let fp = algebra.fp();
        if comul.rows() != d * d
            || comul.cols() != d
            || counit.rows() != 1
            || counit.cols() != d
            || antipode.rows() != d
            || antipode.cols() != d
        {
            return Err(Error::Mismatch {
                expected: "comul d^2 x d, counit 1 x d, antipode d x d".into(),
                got: format!(
                    "{}x{}, {}x{}, {}x{}",
                    comul.rows(),
                    comul.cols(),
                    counit.rows(),
                    counit.cols(),
                    antipode.rows(),
                    antipode.cols()
                ),
            });
        }
        let hopf = HopfData {
            algebra: algebra.clone(),
            comul,
            counit,
            antipode,
        };

        let id = Mat::identity(d);
        // coassociativity on the flat triple index
        let lhs = hopf.comul.kron(fp, &id).mul(fp, &hopf.comul);
        let rhs = id.kron(fp, &hopf.comul).mul(fp, &hopf.comul);
        if lhs != rhs {
            let witness = (0..d)
                .find(|&j| lhs.column(j) != rhs.column(j))
                .unwrap_or(0);
            return Err(Error::NotCoassociative { witness });
        }
        // counit laws
        let left = hopf.counit.kron(fp, &id).mul(fp, &hopf.comul);
        let right = id.kron(fp, &hopf.counit).mul(fp, &hopf.comul);
        if left != id {
            return Err(Error::CounitFails {
                witness: (0..d)
                    .find(|&j| left.column(j) != id.column(j))
                    .unwrap_or(0),
                side: crate::error::Side::Left,
            });
        }
        if right != id {
            return Err(Error::CounitFails {
                witness: (0..d)
                    .find(|&j| right.column(j) != id.column(j))
                    .unwrap_or(0),
                side: crate::error::Side::Right,
            });
        }
        // comultiplication and counit are algebra maps
        if hopf.comul.apply(fp, algebra.unit()) != outer(fp, algebra.unit(), algebra.unit()) {
            return Err(Error::Mismatch {
                expected: "comul(1) = 1 (x) 1".into(),
                got: "different image of the unit".into(),
            });
        }
        if hopf.counit.apply(fp, algebra.unit()) != vec![1] {
            return Err(Error::Mismatch {
                expected: "counit(1) = 1".into(),
                got: "different image of the unit".into(),
            });
        }
        for i in 0..d {
            for j in 0..d {
                let prod = algebra.mul(&algebra.basis_elem(i), &algebra.basis_elem(j));
                let lhs = hopf.comul.apply(fp, &prod);
                let rhs = hopf.mul_hh(&hopf.comul.column(i), &hopf.comul.column(j));
                if lhs != rhs {
                    return Err(Error::Mismatch {
                        expected: format!("comul multiplicative at basis pair ({i}, {j})"),
                        got: "comul(ab) != comul(a) comul(b)".into(),
                    });
                }
                let el = hopf.counit.apply(fp, &prod)[0];
                let er = fp.mul(
                    hopf.counit.apply(fp, &algebra.basis_elem(i))[0],
                    hopf.counit.apply(fp, &algebra.basis_elem(j))[0],
                );
                if el != er {
                    return Err(Error::Mismatch {
                        expected: format!("counit multiplicative at basis pair ({i}, {j})"),
                        got: "counit(ab) != counit(a) counit(b)".into(),
                    });
                }
            }
        }
        // antipode convolution identities: m (S (x) id) comul = unit . counit
        let mult = hopf.multiplication_matrix();
        let conv_left = mult
            .mul(fp, &hopf.antipode.kron(fp, &id))
            .mul(fp, &hopf.comul);
        let conv_right = mult
            .mul(fp, &id.kron(fp, &hopf.antipode))
            .mul(fp, &hopf.comul);
        let unit_counit =
            Mat::from_columns_with(d, d, |j| fp.scale_vec(hopf.counit[(0, j)], algebra.unit()));
        if conv_left != unit_counit || conv_right != unit_counit {
            return Err(Error::Mismatch {
                expected: "antipode convolution inverse to the identity".into(),
                got: "convolution identities fail".into(),
            });
        }
        Ok(hopf)
    }

    pub fn algebra(&self) -> &Arc<FiniteAlgebra> {
        &self.algebra
    }

    pub fn comul(&self) -> &Mat {
        &self.comul
    }

    pub fn counit(&self) -> &Mat {
        &self.counit
    }

    pub fn antipode(&self) -> &Mat {
        &self.antipode
    }

    /// Multiplication `H (x) H -> H` on flat coordinates.
    fn multiplication_matrix(&self) -> Mat {
        let d = self.algebra.dim();
        Mat::from_columns_with(d, d * d, |col| {
            let (i, j) = (col / d, col % d);
            self.algebra
                .mul(&self.algebra.basis_elem(i), &self.algebra.basis_elem(j))
        })
    }

    /// Product on `H (x) H`, `(a (x) b)(c (x) d) = ac (x) bd`.
    fn mul_hh(&self, u: &[u64], v: &[u64]) -> Vec<u64> {
        let d = self.algebra.dim();
        let fp = self.algebra.fp();
        let mut out = vec![0u64; d * d];
        for i1 in 0..d {
            for j1 in 0..d {
                let c1 = u[i1 * d + j1];
                if c1 == 0 {
                    continue;
                }
                for i2 in 0..d {
                    for j2 in 0..d {
                        let c2 = v[i2 * d + j2];
                        if c2 == 0 {
                            continue;
                        }
                        let c = fp.mul(c1, c2);
                        let a = self
                            .algebra
                            .mul(&self.algebra.basis_elem(i1), &self.algebra.basis_elem(i2));
                        let b = self
                            .algebra
                            .mul(&self.algebra.basis_elem(j1), &self.algebra.basis_elem(j2));
                        for (k, &ca) in a.iter().enumerate() {
                            if ca == 0 {
                                continue;
                            }
                            for (l, &cb) in b.iter().enumerate() {
                                if cb != 0 {
                                    let idx = k * d + l;
                                    out[idx] = fp.add(out[idx], fp.mul(c, fp.mul(ca, cb)));
                                }
                            }
                        }
                    }
                }
            }
        }
        out
    }

    /// Grouplike elements of the Hopf algebra itself: `comul(h) = h (x) h`,
    /// `counit(h) = 1`. They form a group under multiplication.
    pub fn grouplikes(&self, budget: &Budget) -> Result<Vec<AlgElem>> {
        let fp = self.algebra.fp();
        let Some(h0) = self.counit.solve(fp, &[1]) else {
            return Ok(Vec::new());
        };
        let kernel = self.counit.kernel(fp);
        check_budget(fp.modulus(), kernel.len(), budget.elements)?;
        let mut out = Vec::new();
        for coeffs in VectorIter::new(fp.modulus(), kernel.len()) {
            let mut h = h0.clone();
            for (c, k) in coeffs.iter().zip(&kernel) {
                if *c != 0 {
                    h = fp.add_vec(&h, &fp.scale_vec(*c, k));
                }
            }
            if self.comul.apply(fp, &h) == outer(fp, &h, &h) {
                out.push(h);
            }
        }
        out.sort();
        Ok(out)
    }
}

/// The group algebra `F_p[G]` with its standard Hopf structure: group
/// elements are grouplike, the antipode inverts.
pub fn group_algebra(p: u64, group: &FiniteGroup) -> Result<HopfData> {
    let n = group.order();
    let mut sc = vec![0u64; n * n * n];
    for x in 0..n {
        for y in 0..n {
            sc[(x * n + y) * n + group.mul(x, y)] = 1;
        }
    }
    let mut unit = vec![0u64; n];
    unit[group.id()] = 1;
    let algebra = Arc::new(FiniteAlgebra::new(p, n, sc, unit)?);
    let comul = Mat::from_columns_with(n * n, n, |x| {
        let mut v = vec![0u64; n * n];
        v[x * n + x] = 1;
        v
    });
    let counit = Mat::from_rows(vec![vec![1; n]], n);
    let antipode = Mat::from_columns_with(n, n, |x| {
        let mut v = vec![0u64; n];
        v[group.inv(x)] = 1;
        v
    });
    HopfData::new(algebra, comul, counit, antipode)
}

/// A right H-comodule algebra: an algebra `A` with a coaction
/// `A -> A (x) H` that is an algebra map, coassociative and counital.
#[derive(Debug, Clone)]
pub struct ComoduleAlgebra {
    algebra: Arc<FiniteAlgebra>,
    hopf: HopfData,
    coaction: Mat,
}

impl ComoduleAlgebra {
    pub fn new(algebra: Arc<FiniteAlgebra>, hopf: HopfData, coaction: Mat) -> Result<Self> {
        let da = algebra.dim();
        let dh = hopf.algebra().dim();
        let fp = algebra.fp();
        if algebra.p() != hopf.algebra().p() {
            return Err(Error::Mismatch {
                expected: "matching characteristic".into(),
                got: format!("{} vs {}", algebra.p(), hopf.algebra().p()),
            });
        }
        if coaction.rows() != da * dh || coaction.cols() != da {
            return Err(Error::Mismatch {
                expected: format!("{}x{} coaction", da * dh, da),
                got: format!("{}x{}", coaction.rows(), coaction.cols()),
            });
        }
        let ca = ComoduleAlgebra {
            algebra: algebra.clone(),
            hopf,
            coaction,
        };
        // coaction is an algebra map
        if ca.coaction.apply(fp, algebra.unit())
            != outer(fp, algebra.unit(), ca.hopf.algebra().unit())
        {
            return Err(Error::Mismatch {
                expected: "coaction(1) = 1 (x) 1".into(),
                got: "different image of the unit".into(),
            });
        }
        for i in 0..da {
            for j in 0..da {
                let prod = algebra.mul(&algebra.basis_elem(i), &algebra.basis_elem(j));
                let lhs = ca.coaction.apply(fp, &prod);
                let rhs = ca.mul_ah(&ca.coaction.column(i), &ca.coaction.column(j));
                if lhs != rhs {
                    return Err(Error::Mismatch {
                        expected: format!("coaction multiplicative at ({i}, {j})"),
                        got: "coaction(ab) != coaction(a) coaction(b)".into(),
                    });
                }
            }
        }
        // coassociativity over the Hopf comultiplication and counitality
        let id_a = Mat::identity(da);
        let id_h = Mat::identity(dh);
        let lhs = id_a.kron(fp, ca.hopf.comul()).mul(fp, &ca.coaction);
        let rhs = ca.coaction.kron(fp, &id_h).mul(fp, &ca.coaction);
        if lhs != rhs {
            return Err(Error::NotCoassociative { witness: 0 });
        }
        let counital = id_a.kron(fp, ca.hopf.counit()).mul(fp, &ca.coaction);
        if counital != id_a {
            return Err(Error::CounitFails {
                witness: 0,
                side: crate::error::Side::Right,
            });
        }
        Ok(ca)
    }

    /// `A = H` coacting on itself by the comultiplication.
    pub fn regular(hopf: HopfData) -> Result<Self> {
        let algebra = hopf.algebra().clone();
        let coaction = hopf.comul().clone();
        ComoduleAlgebra::new(algebra, hopf, coaction)
    }

    pub fn algebra(&self) -> &Arc<FiniteAlgebra> {
        &self.algebra
    }

    pub fn hopf(&self) -> &HopfData {
        &self.hopf
    }

    pub fn coaction(&self) -> &Mat {
        &self.coaction
    }

    /// Product on `A (x) H`.
    fn mul_ah(&self, u: &[u64], v: &[u64]) -> Vec<u64> {
        let da = self.algebra.dim();
        let dh = self.hopf.algebra().dim();
        let fp = self.algebra.fp();
        let mut out = vec![0u64; da * dh];
        for i1 in 0..da {
            for j1 in 0..dh {
                let c1 = u[i1 * dh + j1];
                if c1 == 0 {
                    continue;
                }
                for i2 in 0..da {
                    for j2 in 0..dh {
                        let c2 = v[i2 * dh + j2];
                        if c2 == 0 {
                            continue;
                        }
                        let c = fp.mul(c1, c2);
                        let a = self
                            .algebra
                            .mul(&self.algebra.basis_elem(i1), &self.algebra.basis_elem(i2));
                        let h = self.hopf.algebra().mul(
                            &self.hopf.algebra().basis_elem(j1),
                            &self.hopf.algebra().basis_elem(j2),
                        );
                        for (k, &ca) in a.iter().enumerate() {
                            if ca == 0 {
                                continue;
                            }
                            for (l, &ch) in h.iter().enumerate() {
                                if ch != 0 {
                                    let idx = k * dh + l;
                                    out[idx] = fp.add(out[idx], fp.mul(c, fp.mul(ca, ch)));
                                }
                            }
                        }
                    }
                }
            }
        }
        out
    }
}

/// The coring `A (x) H` of a comodule algebra, with the distinguished
/// grouplike `1 (x) 1` and the coaction-defined coinvariants.
#[derive(Debug, Clone)]
pub struct ComoduleCoring {
    pub coring: Coring,
    pub base: Grouplike,
    pub comodule: ComoduleAlgebra,
    /// `{ a : coaction(a) = a (x) 1 }`, verified to equal the coring
    /// coinvariants at the base grouplike.
    pub declared_coinvariants: Subring,
}

/// Build the coring structure on `A (x) H`: left action by multiplication on
/// the first factor, right action `(a (x) h).a' = a.a'_(0) (x) h.a'_(1)`,
/// comultiplication `a (x) h -> (a (x) h_(1)) (x)_A (1 (x) h_(2))`, counit
/// `a (x) h -> a . counit_H(h)`.
pub fn comodule_algebra_coring(ca: &ComoduleAlgebra) -> Result<ComoduleCoring> {
    let algebra = ca.algebra().clone();
    let h = ca.hopf().algebra().clone();
    let fp = algebra.fp();
    let (da, dh) = (algebra.dim(), h.dim());
    let dim = da * dh;

    let id_h = Mat::identity(dh);
    let mut lact = Vec::with_capacity(da);
    let mut ract = Vec::with_capacity(da);
    for k in 0..da {
        lact.push(algebra.left_mul_mat(&algebra.basis_elem(k)).kron(fp, &id_h));
        let rho_k = ca.coaction().column(k);
        let mut r = Mat::zero(dim, dim);
        for i in 0..da {
            for j in 0..dh {
                let c = rho_k[i * dh + j];
                if c == 0 {
                    continue;
                }
                let term = algebra
                    .right_mul_mat(&algebra.basis_elem(i))
                    .kron(fp, &h.right_mul_mat(&h.basis_elem(j)))
                    .scale(fp, c);
                r = r.add(fp, &term);
            }
        }
        ract.push(r);
    }
    let carrier = Arc::new(Bimodule::new(algebra.clone(), dim, lact, ract)?);

    let cc = TensorModule::tensor_over(carrier.clone(), Subring::full(&algebra), carrier.clone())?;
    let comul = Mat::from_columns_with(cc.dim(), dim, |col| {
        let (i, j) = (col / dh, col % dh);
        let delta_j = ca.hopf().comul().column(j);
        let mut out = vec![0u64; cc.dim()];
        for u in 0..dh {
            for v in 0..dh {
                let c = delta_j[u * dh + v];
                if c == 0 {
                    continue;
                }
                let mut left = vec![0u64; dim];
                left[i * dh + u] = 1;
                let mut right = vec![0u64; dim];
                for (k, &ck) in algebra.unit().iter().enumerate() {
                    right[k * dh + v] = ck;
                }
                out = fp.add_vec(&out, &fp.scale_vec(c, &cc.pure(&left, &right)));
            }
        }
        out
    });
    let counit = Mat::from_columns_with(da, dim, |col| {
        let (i, j) = (col / dh, col % dh);
        let e = ca.hopf().counit()[(0, j)];
        fp.scale_vec(e, &algebra.basis_elem(i))
    });
    let coring = Coring::new(carrier, comul, counit)?;
    let base = coring.grouplike(outer(fp, algebra.unit(), h.unit()))?;

    // coinvariants from the coaction: kernel of a -> coaction(a) - a (x) 1
    let delta = Mat::from_columns_with(dim, da, |k| {
        let rho = ca.coaction().column(k);
        let embedded = outer(fp, &algebra.basis_elem(k), h.unit());
        fp.sub_vec(&rho, &embedded)
    });
    let declared_coinvariants = Subring::new(&algebra, &delta.kernel(fp))?;
    if declared_coinvariants != coring.coinvariants(&base) {
        return Err(Error::Mismatch {
            expected: "coaction coinvariants equal to coring coinvariants".into(),
            got: "different subrings".into(),
        });
    }
    Ok(ComoduleCoring {
        coring,
        base,
        comodule: ca.clone(),
        declared_coinvariants,
    })
}

/// Verification that `h -> 1 (x) h` embeds the grouplikes of `H` into the
/// grouplikes of `A (x) H` as a group monomorphism, using the transported
/// group structure on the Galois grouplikes.
#[derive(Debug, Clone)]
pub struct GlEmbeddingReport {
    pub hopf_grouplikes: Vec<AlgElem>,
    pub hopf_grouplikes_form_group: bool,
    pub images_are_grouplike: bool,
    pub injective: bool,
    /// Multiplicativity against the transported Galois group; absent when
    /// the transport hypotheses fail.
    pub multiplicative: Option<bool>,
}

impl GlEmbeddingReport {
    pub fn passed(&self) -> bool {
        self.hopf_grouplikes_form_group
            && self.images_are_grouplike
            && self.injective
            && self.multiplicative != Some(false)
    }
}

pub fn gl_embedding_check(
    cac: &ComoduleCoring,
    units: &UnitGroup,
    aut: &CoringAutGroup,
    budget: &Budget,
) -> Result<GlEmbeddingReport> {
    let hopf = cac.comodule.hopf();
    let h = hopf.algebra();
    let algebra = cac.comodule.algebra();
    let fp = algebra.fp();
    let gl_h = hopf.grouplikes(budget)?;

    let mut form_group = gl_h.contains(h.unit());
    for x in &gl_h {
        for y in &gl_h {
            form_group &= gl_h.contains(&h.mul(x, y));
        }
        form_group &= match h.inverse(x) {
            Ok(inv) => gl_h.contains(&inv),
            Err(_) => false,
        };
    }

    let embed = |x: &[u64]| outer(fp, algebra.unit(), x);
    let mut images_are_grouplike = true;
    let mut images = Vec::new();
    for x in &gl_h {
        let v = embed(x);
        images_are_grouplike &= cac.coring.check_grouplike(&v).is_ok();
        images.push(v);
    }
    let mut distinct = images.clone();
    distinct.sort();
    distinct.dedup();
    let injective = distinct.len() == images.len();

    let multiplicative = match mejor_check(&cac.coring, &cac.base, units, aut, budget)? {
        MejorOutcome::Checked(report) => report.galois_group.as_ref().map(|table| {
            let mut ok = true;
            for x in &gl_h {
                for y in &gl_h {
                    let (Some(ix), Some(iy), Some(ixy)) = (
                        table.index_of(&embed(x)),
                        table.index_of(&embed(y)),
                        table.index_of(&embed(&h.mul(x, y))),
                    ) else {
                        ok = false;
                        continue;
                    };
                    ok &= table.mul_idx(ix, iy) == ixy;
                }
            }
            ok
        }),
        MejorOutcome::NotApplicable { .. } => None,
    };

    Ok(GlEmbeddingReport {
        hopf_grouplikes: gl_h,
        hopf_grouplikes_form_group: form_group,
        images_are_grouplike,
        injective,
        multiplicative,
    })
}
