//! Finite-dimensional associative unital algebras over prime fields.
//!
//! An algebra is given by its structure-constant tensor: `sc[i][j][k]` is the
//! coefficient of basis vector `k` in the product `e_i * e_j`. Elements are
//! coordinate vectors over F_p. All axioms are validated exhaustively at
//! construction time, so downstream code may assume associativity and a
//! two-sided unit.

use std::collections::HashMap;

use crate::error::{Error, Result, Side};
use crate::fp::{check_budget, Fp, VectorIter};
use crate::mat::{echelon_basis, subspace_contains, Mat};

/// Coordinates of an algebra element in the defining basis.
pub type AlgElem = Vec<u64>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteAlgebra {
    fp: Fp,
    dim: usize,
    sc: Vec<u64>,
    unit: AlgElem,
    left_basis: Vec<Mat>,
    right_basis: Vec<Mat>,
}

impl FiniteAlgebra {
    /// Validate structure constants and unit; rejects non-prime moduli,
    /// non-associative products, and failed unit laws.
    pub fn new(p: u64, dim: usize, sc: Vec<u64>, unit: Vec<u64>) -> Result<Self> {
        let fp = Fp::new(p)?;
        if dim == 0 || sc.len() != dim * dim * dim || unit.len() != dim {
            return Err(Error::Mismatch {
                expected: format!(
                    "dim >= 1, {} structure constants, unit of length {}",
                    dim * dim * dim,
                    dim
                ),
                got: format!(
                    "dim {}, {} constants, unit of length {}",
                    dim,
                    sc.len(),
                    unit.len()
                ),
            });
        }
        let sc: Vec<u64> = sc.into_iter().map(|x| fp.reduce(x)).collect();
        let unit: Vec<u64> = unit.into_iter().map(|x| fp.reduce(x)).collect();

        // Left/right multiplication matrices of the basis elements double as
        // the regular bimodule actions, so cache them up front.
        let left_basis: Vec<Mat> = (0..dim)
            .map(|i| {
                Mat::from_columns_with(dim, dim, |j| {
                    (0..dim).map(|k| sc[(i * dim + j) * dim + k]).collect()
                })
            })
            .collect();
        let right_basis: Vec<Mat> = (0..dim)
            .map(|i| {
                Mat::from_columns_with(dim, dim, |j| {
                    (0..dim).map(|k| sc[(j * dim + i) * dim + k]).collect()
                })
            })
            .collect();

        let alg = FiniteAlgebra {
            fp,
            dim,
            sc,
            unit,
            left_basis,
            right_basis,
        };

        for i in 0..dim {
            for j in 0..dim {
                let eij = alg.mul_basis(i, j);
                for k in 0..dim {
                    let lhs = alg.mul(&eij, &alg.basis_elem(k));
                    let rhs = alg.mul(&alg.basis_elem(i), &alg.mul_basis(j, k));
                    if lhs != rhs {
                        return Err(Error::NotAssociative { i, j, k });
                    }
                }
            }
        }
        for i in 0..dim {
            let e = alg.basis_elem(i);
            if alg.mul(&alg.unit, &e) != e {
                return Err(Error::NoUnit {
                    witness: i,
                    side: Side::Left,
                });
            }
            if alg.mul(&e, &alg.unit) != e {
                return Err(Error::NoUnit {
                    witness: i,
                    side: Side::Right,
                });
            }
        }
        Ok(alg)
    }

    pub fn fp(&self) -> &Fp {
        &self.fp
    }

    pub fn p(&self) -> u64 {
        self.fp.modulus()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &AlgElem {
        &self.unit
    }

    pub fn zero(&self) -> AlgElem {
        vec![0; self.dim]
    }

    pub fn basis_elem(&self, i: usize) -> AlgElem {
        let mut v = vec![0; self.dim];
        v[i] = 1;
        v
    }

    fn mul_basis(&self, i: usize, j: usize) -> AlgElem {
        (0..self.dim)
            .map(|k| self.sc[(i * self.dim + j) * self.dim + k])
            .collect()
    }

    pub fn mul(&self, a: &[u64], b: &[u64]) -> AlgElem {
        assert_eq!(a.len(), self.dim);
        assert_eq!(b.len(), self.dim);
        let mut out = vec![0; self.dim];
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                if bj == 0 {
                    continue;
                }
                let c = self.fp.mul(ai, bj);
                let row =
                    &self.sc[(i * self.dim + j) * self.dim..(i * self.dim + j + 1) * self.dim];
                for (o, &s) in out.iter_mut().zip(row) {
                    if s != 0 {
                        *o = self.fp.add(*o, self.fp.mul(c, s));
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, a: &[u64], b: &[u64]) -> AlgElem {
        self.fp.add_vec(a, b)
    }

    pub fn sub(&self, a: &[u64], b: &[u64]) -> AlgElem {
        self.fp.sub_vec(a, b)
    }

    /// Matrix of `x -> a * x`.
    pub fn left_mul_mat(&self, a: &[u64]) -> Mat {
        let mut m = Mat::zero(self.dim, self.dim);
        for (i, &c) in a.iter().enumerate() {
            if c != 0 {
                m = m.add(&self.fp, &self.left_basis[i].scale(&self.fp, c));
            }
        }
        m
    }

    /// Matrix of `x -> x * a`.
    pub fn right_mul_mat(&self, a: &[u64]) -> Mat {
        let mut m = Mat::zero(self.dim, self.dim);
        for (i, &c) in a.iter().enumerate() {
            if c != 0 {
                m = m.add(&self.fp, &self.right_basis[i].scale(&self.fp, c));
            }
        }
        m
    }

    pub(crate) fn left_basis_mats(&self) -> &[Mat] {
        &self.left_basis
    }

    pub(crate) fn right_basis_mats(&self) -> &[Mat] {
        &self.right_basis
    }

    /// Two-sided inverse, found by solving `a * x = 1` and checking
    /// `x * a = 1`.
    pub fn inverse(&self, a: &[u64]) -> Result<AlgElem> {
        let x = self
            .left_mul_mat(a)
            .solve(&self.fp, &self.unit)
            .ok_or(Error::NotAUnit)?;
        if self.mul(&x, a) != self.unit {
            return Err(Error::NotAUnit);
        }
        Ok(x)
    }

    pub fn is_unit(&self, a: &[u64]) -> bool {
        self.inverse(a).is_ok()
    }

    /// All elements of the algebra in lexicographic coordinate order.
    pub fn elements(&self, budget: u64) -> Result<impl Iterator<Item = AlgElem> + '_> {
        check_budget(self.p(), self.dim, budget)?;
        Ok(VectorIter::new(self.p(), self.dim))
    }

    /// The unit group, enumerated exhaustively.
    pub fn units(&self, budget: u64) -> Result<UnitGroup> {
        let mut elements = Vec::new();
        let mut inverses = Vec::new();
        for v in self.elements(budget)? {
            if let Ok(inv) = self.inverse(&v) {
                elements.push(v);
                inverses.push(inv);
            }
        }
        // VectorIter already yields lexicographically sorted coordinates.
        let index: HashMap<AlgElem, usize> = elements
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, v)| (v, i))
            .collect();
        let inv = inverses.iter().map(|v| index[v]).collect();
        Ok(UnitGroup {
            elements,
            inv,
            index,
        })
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (0..self.dim).all(|j| self.mul_basis(i, j) == self.mul_basis(j, i)))
    }

    /// Every nonzero element invertible.
    pub fn is_division_ring(&self, budget: u64) -> Result<bool> {
        for v in self.elements(budget)? {
            if v.iter().any(|&x| x != 0) && !self.is_unit(&v) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Smallest unital subalgebra containing the generators: the fixed point
    /// of span-then-multiply iteration.
    pub fn subring_closure(&self, gens: &[AlgElem]) -> Subring {
        let mut spanning: Vec<AlgElem> = vec![self.unit.clone()];
        spanning.extend(gens.iter().cloned());
        let mut basis = echelon_basis(&self.fp, &spanning, self.dim);
        loop {
            let mut extended = basis.clone();
            for a in &basis {
                for b in &basis {
                    extended.push(self.mul(a, b));
                }
            }
            let next = echelon_basis(&self.fp, &extended, self.dim);
            if next.len() == basis.len() {
                return Subring { basis: next };
            }
            basis = next;
        }
    }

    /// The subring `alpha^{-1} B alpha` for a unit `alpha`.
    pub fn conjugate_subring(&self, alpha: &[u64], b: &Subring) -> Result<Subring> {
        let alpha_inv = self.inverse(alpha)?;
        let conjugated: Vec<AlgElem> = b
            .basis
            .iter()
            .map(|v| self.mul(&self.mul(&alpha_inv, v), alpha))
            .collect();
        Subring::new(self, &conjugated)
    }
}

/// The field F_{p^n} as an F_p-algebra on the basis `1, x, ..., x^(n-1)`
/// modulo the first irreducible monic polynomial of degree `n` in the
/// little-endian coefficient order (for p = 2, n = 2 this is x^2 + x + 1).
pub fn field_extension(p: u64, n: usize) -> Result<FiniteAlgebra> {
    let fp = Fp::new(p)?;
    if n == 0 {
        return Err(Error::Mismatch {
            expected: "degree >= 1".into(),
            got: "0".into(),
        });
    }
    // reduce x^k mod the monic polynomial x^n + tail
    let reduce_mul = |tail: &[u64], a: &[u64], b: &[u64]| -> Vec<u64> {
        let mut prod = vec![0u64; 2 * n];
        for (i, &ca) in a.iter().enumerate() {
            for (j, &cb) in b.iter().enumerate() {
                prod[i + j] = fp.add(prod[i + j], fp.mul(ca, cb));
            }
        }
        for k in (n..2 * n).rev() {
            let c = prod[k];
            if c != 0 {
                prod[k] = 0;
                for (t, &coeff) in tail.iter().enumerate() {
                    prod[k - n + t] = fp.sub(prod[k - n + t], fp.mul(c, coeff));
                }
            }
        }
        prod.truncate(n);
        prod
    };
    let is_irreducible = |tail: &[u64]| -> bool {
        // no nonzero polynomial of degree < n may multiply with another to
        // give x^n + tail; test via gcd-free brute force: x^n + tail has a
        // factor of degree d <= n/2 iff some monic degree-d polynomial
        // divides it
        for d in 1..=n / 2 {
            let mut coeffs = vec![0u64; d];
            loop {
                // candidate divisor x^d + coeffs; long-divide x^n + tail
                let mut rem: Vec<u64> = tail.to_vec();
                rem.push(1); // x^n
                for k in (d..=n).rev() {
                    let c = rem[k];
                    if c != 0 {
                        rem[k] = 0;
                        for (t, &q) in coeffs.iter().enumerate() {
                            rem[k - d + t] = fp.sub(rem[k - d + t], fp.mul(c, q));
                        }
                    }
                }
                if rem.iter().all(|&x| x == 0) {
                    return false;
                }
                let mut pos = 0;
                loop {
                    if pos == d {
                        // exhausted all divisors of this degree
                        coeffs.clear();
                        break;
                    }
                    coeffs[pos] += 1;
                    if coeffs[pos] < p {
                        break;
                    }
                    coeffs[pos] = 0;
                    pos += 1;
                }
                if coeffs.is_empty() {
                    break;
                }
            }
        }
        true
    };
    let mut tail = vec![0u64; n];
    let modulus = loop {
        if is_irreducible(&tail) {
            break tail;
        }
        let mut pos = 0;
        loop {
            if pos == n {
                return Err(Error::Mismatch {
                    expected: "an irreducible polynomial".into(),
                    got: "none found".into(),
                });
            }
            tail[pos] += 1;
            if tail[pos] < p {
                break;
            }
            tail[pos] = 0;
            pos += 1;
        }
    };
    let mut sc = vec![0u64; n * n * n];
    for i in 0..n {
        for j in 0..n {
            let mut a = vec![0u64; n];
            a[i] = 1;
            let mut b = vec![0u64; n];
            b[j] = 1;
            let prod = reduce_mul(&modulus, &a, &b);
            for (k, &c) in prod.iter().enumerate() {
                sc[(i * n + j) * n + k] = c;
            }
        }
    }
    let mut unit = vec![0u64; n];
    unit[0] = 1;
    FiniteAlgebra::new(p, n, sc, unit)
}

/// An F_p-subspace of the algebra that contains the unit and is closed under
/// multiplication, stored as a reduced echelon basis. The echelon form is
/// canonical, so derived equality is subspace equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subring {
    basis: Vec<AlgElem>,
}

impl Subring {
    /// Echelonize the spanning set and verify the subring axioms.
    pub fn new(algebra: &FiniteAlgebra, spanning: &[AlgElem]) -> Result<Self> {
        let basis = echelon_basis(algebra.fp(), spanning, algebra.dim());
        let sub = Subring { basis };
        if !sub.contains(algebra.fp(), algebra.unit()) {
            return Err(Error::NotASubring {
                reason: "does not contain the unit",
            });
        }
        for a in &sub.basis {
            for b in &sub.basis {
                if !sub.contains(algebra.fp(), &algebra.mul(a, b)) {
                    return Err(Error::NotASubring {
                        reason: "not closed under multiplication",
                    });
                }
            }
        }
        Ok(sub)
    }

    /// The whole algebra as a subring of itself.
    pub fn full(algebra: &FiniteAlgebra) -> Self {
        Subring {
            basis: (0..algebra.dim()).map(|i| algebra.basis_elem(i)).collect(),
        }
    }

    /// The prime subfield `F_p * 1`.
    pub fn prime(algebra: &FiniteAlgebra) -> Self {
        Subring {
            basis: echelon_basis(algebra.fp(), &[algebra.unit().clone()], algebra.dim()),
        }
    }

    pub fn basis(&self) -> &[AlgElem] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn contains(&self, fp: &Fp, v: &[u64]) -> bool {
        subspace_contains(fp, &self.basis, v)
    }

    /// All elements of the subring, lexicographic in the span coefficients.
    pub fn elements<'a>(
        &'a self,
        algebra: &'a FiniteAlgebra,
        budget: u64,
    ) -> Result<impl Iterator<Item = AlgElem> + 'a> {
        check_budget(algebra.p(), self.dim(), budget)?;
        let fp = *algebra.fp();
        let dim = algebra.dim();
        Ok(VectorIter::new(algebra.p(), self.dim()).map(move |coeffs| {
            let mut v = vec![0; dim];
            for (c, b) in coeffs.iter().zip(&self.basis) {
                if *c != 0 {
                    v = fp.add_vec(&v, &fp.scale_vec(*c, b));
                }
            }
            v
        }))
    }
}

/// The group of units of a finite algebra, with an inverse table, sorted
/// lexicographically by coordinates.
#[derive(Debug, Clone)]
pub struct UnitGroup {
    elements: Vec<AlgElem>,
    inv: Vec<usize>,
    index: HashMap<AlgElem, usize>,
}

impl UnitGroup {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[AlgElem] {
        &self.elements
    }

    pub fn elem(&self, i: usize) -> &AlgElem {
        &self.elements[i]
    }

    pub fn inverse_of(&self, i: usize) -> &AlgElem {
        &self.elements[self.inv[i]]
    }

    pub fn inv_idx(&self, i: usize) -> usize {
        self.inv[i]
    }

    pub fn index_of(&self, v: &[u64]) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        self.index.contains_key(v)
    }

    /// A small generating set, picked greedily in element order.
    pub fn generators(&self, algebra: &FiniteAlgebra) -> Vec<usize> {
        let mut gens: Vec<usize> = Vec::new();
        let mut generated = vec![false; self.len()];
        if let Some(one) = self.index_of(algebra.unit()) {
            generated[one] = true;
        }
        for candidate in 0..self.len() {
            if generated[candidate] {
                continue;
            }
            gens.push(candidate);
            // close the generated set under multiplication by the new generator
            let mut frontier: Vec<usize> = generated
                .iter()
                .enumerate()
                .filter(|(_, &g)| g)
                .map(|(i, _)| i)
                .collect();
            while let Some(i) = frontier.pop() {
                for &g in &gens {
                    for prod in [
                        algebra.mul(self.elem(i), self.elem(g)),
                        algebra.mul(self.elem(g), self.elem(i)),
                    ] {
                        let j = self.index_of(&prod).expect("units closed under product");
                        if !generated[j] {
                            generated[j] = true;
                            frontier.push(j);
                        }
                    }
                }
            }
        }
        gens
    }
}
