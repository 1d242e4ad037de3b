//! Corings over a finite algebra: axiom validation, grouplike enumeration,
//! coinvariant subrings, comodule hom-spaces, the canonical map and the
//! Galois predicate, and the coring automorphism group.

use std::collections::HashMap;
use std::sync::Arc;

use crate::algebra::{AlgElem, FiniteAlgebra, Subring};
use crate::bimodule::{Bimodule, BimoduleMap};
use crate::budget::Budget;
use crate::error::{Error, Result, Side};
use crate::fp::{check_budget, VectorIter};
use crate::mat::{echelon_basis, Mat};
use crate::tensor::{
    assoc_iso, tensor_pair_map_unchecked, unit_collapse_left, unit_collapse_right, TensorModule,
};

/// A coring `(C, comul, counit)` over an algebra `A`: an `A`-bimodule with a
/// coassociative comultiplication `C -> C (x)_A C` and a counit `C -> A`,
/// both A-bilinear. Construction validates every axiom as an exact matrix
/// identity.
#[derive(Debug, Clone)]
pub struct Coring {
    carrier: Arc<Bimodule>,
    regular: Arc<Bimodule>,
    cc: TensorModule,
    comul: BimoduleMap,
    counit: BimoduleMap,
}

/// An element `g` with `comul(g) = g (x) g` and `counit(g) = 1`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Grouplike {
    elem: AlgElem,
}

impl Grouplike {
    pub fn elem(&self) -> &[u64] {
        &self.elem
    }
}

/// The canonical morphism `A (x)_{A^g} A -> C`, `a (x) a' -> a.g.a'`,
/// together with the tensor quotient it is defined on.
#[derive(Debug, Clone)]
pub struct CanonicalMap {
    pub tensor: TensorModule,
    pub map: BimoduleMap,
}

impl CanonicalMap {
    pub fn is_bijective(&self) -> bool {
        self.map.is_bijective()
    }
}

impl Coring {
    /// Validate a coring. The axioms are checked in this order, each with a
    /// carrier-basis witness: coassociativity, the two counit laws, then
    /// A-bilinearity of comultiplication and counit.
    pub fn new(carrier: Arc<Bimodule>, comul: Mat, counit: Mat) -> Result<Self> {
        let algebra = carrier.algebra().clone();
        let fp = algebra.fp();
        let c = carrier.dim();
        let full = Subring::full(&algebra);
        let regular = Arc::new(Bimodule::regular(algebra.clone()));

        let cc = TensorModule::tensor_over(carrier.clone(), full.clone(), carrier.clone())?;
        if comul.rows() != cc.dim() || comul.cols() != c {
            return Err(Error::Mismatch {
                expected: format!("{}x{} comultiplication", cc.dim(), c),
                got: format!("{}x{}", comul.rows(), comul.cols()),
            });
        }
        if counit.rows() != algebra.dim() || counit.cols() != c {
            return Err(Error::Mismatch {
                expected: format!("{}x{} counit", algebra.dim(), c),
                got: format!("{}x{}", counit.rows(), counit.cols()),
            });
        }

        // coassociativity through the canonical associator
        let id_c = Mat::identity(c);
        let c_cc = TensorModule::tensor_over(carrier.clone(), full.clone(), cc.induced().clone())?;
        let cc_c = TensorModule::tensor_over(cc.induced().clone(), full.clone(), carrier.clone())?;
        let lhs = tensor_pair_map_unchecked(&cc, &c_cc, &id_c, &comul)?.mul(fp, &comul);
        let pre = tensor_pair_map_unchecked(&cc, &cc_c, &comul, &id_c)?.mul(fp, &comul);
        let iso = assoc_iso(&cc, &cc_c, &cc, &c_cc)?;
        let rhs = iso.mul(fp, &pre);
        if lhs != rhs {
            let witness = (0..c)
                .find(|&j| lhs.column(j) != rhs.column(j))
                .unwrap_or(0);
            return Err(Error::NotCoassociative { witness });
        }

        // counit laws, collapsed through the unit identifications
        let c_a = TensorModule::tensor_over(carrier.clone(), full.clone(), regular.clone())?;
        let a_c = TensorModule::tensor_over(regular.clone(), full, carrier.clone())?;
        let right_law = unit_collapse_right(&c_a)
            .mul(fp, &tensor_pair_map_unchecked(&cc, &c_a, &id_c, &counit)?)
            .mul(fp, &comul);
        if right_law != id_c {
            let witness = (0..c)
                .find(|&j| right_law.column(j) != id_c.column(j))
                .unwrap_or(0);
            return Err(Error::CounitFails {
                witness,
                side: Side::Right,
            });
        }
        let left_law = unit_collapse_left(&a_c)
            .mul(fp, &tensor_pair_map_unchecked(&cc, &a_c, &counit, &id_c)?)
            .mul(fp, &comul);
        if left_law != id_c {
            let witness = (0..c)
                .find(|&j| left_law.column(j) != id_c.column(j))
                .unwrap_or(0);
            return Err(Error::CounitFails {
                witness,
                side: Side::Left,
            });
        }

        let comul = BimoduleMap::new(carrier.clone(), cc.induced().clone(), comul)?;
        let counit = BimoduleMap::new(carrier.clone(), regular.clone(), counit)?;
        Ok(Coring {
            carrier,
            regular,
            cc,
            comul,
            counit,
        })
    }

    pub fn algebra(&self) -> &Arc<FiniteAlgebra> {
        self.carrier.algebra()
    }

    pub fn carrier(&self) -> &Arc<Bimodule> {
        &self.carrier
    }

    pub fn regular(&self) -> &Arc<Bimodule> {
        &self.regular
    }

    pub fn dim(&self) -> usize {
        self.carrier.dim()
    }

    /// The cached tensor square `C (x)_A C`.
    pub fn cc(&self) -> &TensorModule {
        &self.cc
    }

    pub fn comul(&self) -> &BimoduleMap {
        &self.comul
    }

    pub fn counit(&self) -> &BimoduleMap {
        &self.counit
    }

    /// Check the two grouplike equations for an element of the carrier.
    pub fn check_grouplike(&self, v: &[u64]) -> Result<()> {
        if self.counit.apply(v) != *self.algebra().unit() {
            return Err(Error::NotAGrouplike {
                condition: "counit",
            });
        }
        if self.comul.apply(v) != self.cc.pure(v, v) {
            return Err(Error::NotAGrouplike {
                condition: "comultiplication",
            });
        }
        Ok(())
    }

    /// Validate an element as a grouplike.
    pub fn grouplike(&self, v: Vec<u64>) -> Result<Grouplike> {
        self.check_grouplike(&v)?;
        Ok(Grouplike { elem: v })
    }

    /// All grouplike elements, lexicographically sorted.
    ///
    /// Search strategy: solve the affine condition `counit(g) = 1` first
    /// (particular solution plus kernel of the counit), then filter the
    /// quadratic condition `comul(g) = g (x) g` over that affine subspace.
    pub fn grouplikes(&self, budget: &Budget) -> Result<Vec<Grouplike>> {
        let fp = self.algebra().fp();
        let Some(g0) = self.counit.matrix().solve(fp, self.algebra().unit()) else {
            return Ok(Vec::new());
        };
        let kernel = self.counit.matrix().kernel(fp);
        check_budget(fp.modulus(), kernel.len(), budget.elements)?;
        let mut out = Vec::new();
        for coeffs in VectorIter::new(fp.modulus(), kernel.len()) {
            let mut g = g0.clone();
            for (c, k) in coeffs.iter().zip(&kernel) {
                if *c != 0 {
                    g = fp.add_vec(&g, &fp.scale_vec(*c, k));
                }
            }
            if self.comul.apply(&g) == self.cc.pure(&g, &g) {
                out.push(Grouplike { elem: g });
            }
        }
        out.sort();
        Ok(out)
    }

    /// The coinvariant subring `A^g = { a : a.g = g.a }`.
    pub fn coinvariants(&self, g: &Grouplike) -> Subring {
        let algebra = self.algebra();
        let fp = algebra.fp();
        let m = Mat::from_columns_with(self.dim(), algebra.dim(), |i| {
            let ag = self.carrier.lact_basis(i).apply(fp, &g.elem);
            let ga = self.carrier.ract_basis(i).apply(fp, &g.elem);
            fp.sub_vec(&ag, &ga)
        });
        let basis = m.kernel(fp);
        Subring::new(algebra, &basis).expect("coinvariants form a subring")
    }

    /// Basis of the comodule hom-space `{ a in A : a.g = h.a }`.
    pub fn comodule_homs(&self, g: &Grouplike, h: &Grouplike) -> Vec<AlgElem> {
        let algebra = self.algebra();
        let fp = algebra.fp();
        let m = Mat::from_columns_with(self.dim(), algebra.dim(), |i| {
            let ag = self.carrier.lact_basis(i).apply(fp, &g.elem);
            let ha = self.carrier.ract_basis(i).apply(fp, &h.elem);
            fp.sub_vec(&ag, &ha)
        });
        echelon_basis(fp, &m.kernel(fp), algebra.dim())
    }

    /// `alpha . g . alpha^{-1}` through the bimodule actions; the result is
    /// re-validated as a grouplike.
    pub fn conjugate_grouplike(&self, alpha: &[u64], g: &Grouplike) -> Result<Grouplike> {
        let algebra = self.algebra();
        let alpha_inv = algebra.inverse(alpha)?;
        let v = self
            .carrier
            .act_left(alpha, &self.carrier.act_right(&g.elem, &alpha_inv));
        self.grouplike(v)
    }

    /// The image of a coring endomorphism matrix on a grouplike, re-validated.
    pub fn apply_aut(&self, aut: &Mat, g: &Grouplike) -> Result<Grouplike> {
        let v = aut.apply(self.algebra().fp(), &g.elem);
        self.grouplike(v)
    }

    /// The canonical morphism `can_g : A (x)_{A^g} A -> C`.
    pub fn canonical_map(&self, g: &Grouplike) -> Result<CanonicalMap> {
        let algebra = self.algebra().clone();
        let fp = algebra.fp();
        let coinv = self.coinvariants(g);
        let tensor = TensorModule::tensor_over(self.regular.clone(), coinv, self.regular.clone())?;
        let d = algebra.dim();
        let w = Mat::from_columns_with(self.dim(), d * d, |col| {
            let (i, j) = (col / d, col % d);
            let ga = self.carrier.act_right(&g.elem, &algebra.basis_elem(j));
            self.carrier.act_left(&algebra.basis_elem(i), &ga)
        });
        for (idx, bal) in tensor.balancing().iter().enumerate() {
            if w.apply(fp, bal).iter().any(|&x| x != 0) {
                return Err(Error::NotWellDefined { generator: idx });
            }
        }
        let matrix = w.mul(fp, tensor.section());
        let map = BimoduleMap::new(tensor.induced().clone(), self.carrier.clone(), matrix)?;
        Ok(CanonicalMap { tensor, map })
    }

    /// `g` is Galois when `can_g` is bijective.
    pub fn is_galois(&self, g: &Grouplike) -> Result<bool> {
        Ok(self.canonical_map(g)?.is_bijective())
    }

    pub fn galois_grouplikes(&self, budget: &Budget) -> Result<Vec<Grouplike>> {
        let mut out = Vec::new();
        for g in self.grouplikes(budget)? {
            if self.is_galois(&g)? {
                out.push(g);
            }
        }
        Ok(out)
    }

    /// Rank of the A-bimodule span of `g` inside the carrier (the span of
    /// all `a.g.a'`). Equals `dim C` exactly when `g` generates `C` as a
    /// bimodule.
    pub fn bimodule_span_rank(&self, g: &Grouplike) -> usize {
        let algebra = self.algebra();
        let fp = algebra.fp();
        let d = algebra.dim();
        let w = Mat::from_columns_with(self.dim(), d * d, |col| {
            let (i, j) = (col / d, col % d);
            let ga = self.carrier.act_right(&g.elem, &algebra.basis_elem(j));
            self.carrier.act_left(&algebra.basis_elem(i), &ga)
        });
        w.rank(fp)
    }

    /// Check that a matrix is a coring automorphism: an invertible A-bilinear
    /// endomorphism commuting with comultiplication and counit.
    pub fn check_coring_aut(&self, m: &Mat) -> Result<()> {
        let fp = self.algebra().fp();
        BimoduleMap::new(self.carrier.clone(), self.carrier.clone(), m.clone())?;
        if !m.is_invertible(fp) {
            return Err(Error::NotACoringAut {
                condition: "invertibility",
            });
        }
        if self.counit.matrix().mul(fp, m) != *self.counit.matrix() {
            return Err(Error::NotACoringAut {
                condition: "counit",
            });
        }
        let phi_phi = tensor_pair_map_unchecked(&self.cc, &self.cc, m, m)?;
        let lhs = self.comul.matrix().mul(fp, m);
        let rhs = phi_phi.mul(fp, self.comul.matrix());
        if lhs != rhs {
            return Err(Error::NotACoringAut {
                condition: "comultiplication",
            });
        }
        Ok(())
    }

    /// The full coring automorphism group.
    ///
    /// The bilinearity and counit conditions are linear in the matrix
    /// entries, so the search solves them first (the identity is a particular
    /// solution) and then filters the quadratic comultiplication condition
    /// and invertibility over the affine solution space.
    pub fn coring_automorphisms(&self, budget: &Budget) -> Result<CoringAutGroup> {
        let algebra = self.algebra();
        let fp = algebra.fp();
        let c = self.dim();
        let n = c * c;
        let entry = |r: usize, s: usize| r * c + s;

        let mut rows: Vec<Vec<u64>> = Vec::new();
        for side in [Side::Left, Side::Right] {
            for i in 0..algebra.dim() {
                let act = match side {
                    Side::Left => self.carrier.lact_basis(i),
                    Side::Right => self.carrier.ract_basis(i),
                };
                for a in 0..c {
                    for b in 0..c {
                        let mut row = vec![0u64; n];
                        for r in 0..c {
                            row[entry(r, b)] = fp.add(row[entry(r, b)], act[(a, r)]);
                        }
                        for s in 0..c {
                            row[entry(a, s)] = fp.sub(row[entry(a, s)], act[(s, b)]);
                        }
                        rows.push(row);
                    }
                }
            }
        }
        let eps = self.counit.matrix();
        for a in 0..algebra.dim() {
            for b in 0..c {
                let mut row = vec![0u64; n];
                for r in 0..c {
                    row[entry(r, b)] = eps[(a, r)];
                }
                rows.push(row);
            }
        }
        let system = Mat::from_rows(rows, n);
        let kernel = system.kernel(fp);
        check_budget(fp.modulus(), kernel.len(), budget.aut_candidates)?;

        let identity_vec: Vec<u64> = Mat::identity(c).data().to_vec();
        let mut elements: Vec<Mat> = Vec::new();
        for coeffs in VectorIter::new(fp.modulus(), kernel.len()) {
            let mut v = identity_vec.clone();
            for (cf, k) in coeffs.iter().zip(&kernel) {
                if *cf != 0 {
                    v = fp.add_vec(&v, &fp.scale_vec(*cf, k));
                }
            }
            let m = Mat::from_rows(v.chunks(c).map(|r| r.to_vec()).collect(), c);
            if !m.is_invertible(fp) {
                continue;
            }
            let phi_phi = tensor_pair_map_unchecked(&self.cc, &self.cc, &m, &m)?;
            if self.comul.matrix().mul(fp, &m) == phi_phi.mul(fp, self.comul.matrix()) {
                elements.push(m);
            }
        }
        elements.sort_by(|a, b| a.data().cmp(b.data()));
        CoringAutGroup::from_elements(self, elements)
    }
}

/// A single validated coring automorphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoringAut {
    matrix: Mat,
}

impl CoringAut {
    pub fn new(coring: &Coring, matrix: Mat) -> Result<Self> {
        coring.check_coring_aut(&matrix)?;
        Ok(CoringAut { matrix })
    }

    pub fn matrix(&self) -> &Mat {
        &self.matrix
    }
}

/// The automorphism group of a coring with composition and inverse tables.
/// Elements are sorted by flattened matrix data; composition is function
/// composition, `compose(i, j)` applies `j` first.
#[derive(Debug, Clone)]
pub struct CoringAutGroup {
    elements: Vec<Mat>,
    mul: Vec<usize>,
    inv: Vec<usize>,
    id: usize,
}

impl CoringAutGroup {
    fn from_elements(coring: &Coring, elements: Vec<Mat>) -> Result<Self> {
        let fp = coring.algebra().fp();
        let order = elements.len();
        let index: HashMap<&[u64], usize> = elements
            .iter()
            .enumerate()
            .map(|(i, m)| (m.data(), i))
            .collect();
        let lookup = |m: &Mat| -> Result<usize> {
            index.get(m.data()).copied().ok_or(Error::NotACoringAut {
                condition: "closure under composition",
            })
        };
        let mut mul = vec![0; order * order];
        let mut inv = vec![0; order];
        for i in 0..order {
            for j in 0..order {
                mul[i * order + j] = lookup(&elements[i].mul(fp, &elements[j]))?;
            }
            inv[i] = lookup(&elements[i].inverse(fp).ok_or(Error::NotACoringAut {
                condition: "invertibility",
            })?)?;
        }
        let id = lookup(&Mat::identity(coring.dim()))?;
        Ok(CoringAutGroup {
            elements,
            mul,
            inv,
            id,
        })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Mat] {
        &self.elements
    }

    pub fn elem(&self, i: usize) -> &Mat {
        &self.elements[i]
    }

    /// Index of `phi_i . phi_j` (apply `j` first).
    pub fn compose(&self, i: usize, j: usize) -> usize {
        self.mul[i * self.elements.len() + j]
    }

    pub fn inv(&self, i: usize) -> usize {
        self.inv[i]
    }

    pub fn id(&self) -> usize {
        self.id
    }

    pub fn index_of(&self, m: &Mat) -> Option<usize> {
        self.elements.iter().position(|e| e == m)
    }
}
