//! A-bimodules as F_p-spaces with explicit action matrices, and the
//! A-bilinear maps between them.

use std::sync::Arc;

use crate::algebra::FiniteAlgebra;
use crate::error::{Error, Result, Side};
use crate::mat::Mat;

/// An A-bimodule: an F_p-space with one matrix per algebra basis element for
/// the left action and one for the right action. Actions are validated to be
/// unital associative representations that commute with each other.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bimodule {
    algebra: Arc<FiniteAlgebra>,
    dim: usize,
    lact: Vec<Mat>,
    ract: Vec<Mat>,
}

impl Bimodule {
    pub fn new(
        algebra: Arc<FiniteAlgebra>,
        dim: usize,
        lact: Vec<Mat>,
        ract: Vec<Mat>,
    ) -> Result<Self> {
        let adim = algebra.dim();
        let fp = algebra.fp();
        if lact.len() != adim || ract.len() != adim {
            return Err(Error::Mismatch {
                expected: format!("{adim} action matrices per side"),
                got: format!("{} left, {} right", lact.len(), ract.len()),
            });
        }
        for m in lact.iter().chain(&ract) {
            if m.rows() != dim || m.cols() != dim {
                return Err(Error::Mismatch {
                    expected: format!("{dim}x{dim} action matrices"),
                    got: format!("{}x{}", m.rows(), m.cols()),
                });
            }
        }
        let module = Bimodule {
            algebra: algebra.clone(),
            dim,
            lact,
            ract,
        };

        // unit acts as identity on both sides
        let id = Mat::identity(dim);
        if module.lact_of(algebra.unit()) != id {
            return Err(Error::NoUnit {
                witness: 0,
                side: Side::Left,
            });
        }
        if module.ract_of(algebra.unit()) != id {
            return Err(Error::NoUnit {
                witness: 0,
                side: Side::Right,
            });
        }
        // (ab)m = a(bm) and m(ab) = (ma)b on basis pairs
        for i in 0..adim {
            for j in 0..adim {
                let prod = algebra.mul(&algebra.basis_elem(i), &algebra.basis_elem(j));
                if module.lact_of(&prod) != module.lact[i].mul(fp, &module.lact[j]) {
                    return Err(Error::NotARepresentation {
                        side: Side::Left,
                        i,
                        j,
                    });
                }
                if module.ract_of(&prod) != module.ract[j].mul(fp, &module.ract[i]) {
                    return Err(Error::NotARepresentation {
                        side: Side::Right,
                        i,
                        j,
                    });
                }
                let lr = module.lact[i].mul(fp, &module.ract[j]);
                let rl = module.ract[j].mul(fp, &module.lact[i]);
                if lr != rl {
                    return Err(Error::ActionsDoNotCommute { i, j });
                }
            }
        }
        Ok(module)
    }

    /// The algebra over itself by left and right multiplication.
    pub fn regular(algebra: Arc<FiniteAlgebra>) -> Self {
        Bimodule {
            dim: algebra.dim(),
            lact: algebra.left_basis_mats().to_vec(),
            ract: algebra.right_basis_mats().to_vec(),
            algebra,
        }
    }

    pub fn algebra(&self) -> &Arc<FiniteAlgebra> {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn lact_basis(&self, i: usize) -> &Mat {
        &self.lact[i]
    }

    pub fn ract_basis(&self, i: usize) -> &Mat {
        &self.ract[i]
    }

    /// Matrix of `m -> a.m`.
    pub fn lact_of(&self, a: &[u64]) -> Mat {
        let fp = self.algebra.fp();
        let mut out = Mat::zero(self.dim, self.dim);
        for (i, &c) in a.iter().enumerate() {
            if c != 0 {
                out = out.add(fp, &self.lact[i].scale(fp, c));
            }
        }
        out
    }

    /// Matrix of `m -> m.a`.
    pub fn ract_of(&self, a: &[u64]) -> Mat {
        let fp = self.algebra.fp();
        let mut out = Mat::zero(self.dim, self.dim);
        for (i, &c) in a.iter().enumerate() {
            if c != 0 {
                out = out.add(fp, &self.ract[i].scale(fp, c));
            }
        }
        out
    }

    pub fn act_left(&self, a: &[u64], m: &[u64]) -> Vec<u64> {
        self.lact_of(a).apply(self.algebra.fp(), m)
    }

    pub fn act_right(&self, m: &[u64], a: &[u64]) -> Vec<u64> {
        self.ract_of(a).apply(self.algebra.fp(), m)
    }
}

/// An A-bilinear map between two bimodules over the same algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BimoduleMap {
    source: Arc<Bimodule>,
    target: Arc<Bimodule>,
    matrix: Mat,
}

impl BimoduleMap {
    pub fn new(source: Arc<Bimodule>, target: Arc<Bimodule>, matrix: Mat) -> Result<Self> {
        if source.algebra() != target.algebra() {
            return Err(Error::Mismatch {
                expected: "bimodules over the same algebra".into(),
                got: "different parent algebras".into(),
            });
        }
        if matrix.rows() != target.dim() || matrix.cols() != source.dim() {
            return Err(Error::Mismatch {
                expected: format!("{}x{} matrix", target.dim(), source.dim()),
                got: format!("{}x{}", matrix.rows(), matrix.cols()),
            });
        }
        let fp = source.algebra().fp();
        for i in 0..source.algebra().dim() {
            let left = target.lact_basis(i).mul(fp, &matrix);
            let left2 = matrix.mul(fp, source.lact_basis(i));
            if left != left2 {
                let basis = (0..source.dim())
                    .find(|&j| left.column(j) != left2.column(j))
                    .unwrap_or(0);
                return Err(Error::NotBilinear {
                    side: Side::Left,
                    alg: i,
                    basis,
                });
            }
            let right = target.ract_basis(i).mul(fp, &matrix);
            let right2 = matrix.mul(fp, source.ract_basis(i));
            if right != right2 {
                let basis = (0..source.dim())
                    .find(|&j| right.column(j) != right2.column(j))
                    .unwrap_or(0);
                return Err(Error::NotBilinear {
                    side: Side::Right,
                    alg: i,
                    basis,
                });
            }
        }
        Ok(BimoduleMap {
            source,
            target,
            matrix,
        })
    }

    pub fn identity(module: Arc<Bimodule>) -> Self {
        BimoduleMap {
            matrix: Mat::identity(module.dim()),
            source: module.clone(),
            target: module,
        }
    }

    pub fn source(&self) -> &Arc<Bimodule> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Bimodule> {
        &self.target
    }

    pub fn matrix(&self) -> &Mat {
        &self.matrix
    }

    pub fn apply(&self, v: &[u64]) -> Vec<u64> {
        self.matrix.apply(self.source.algebra().fp(), v)
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank(self.source.algebra().fp())
    }

    pub fn kernel(&self) -> Vec<Vec<u64>> {
        self.matrix.kernel(self.source.algebra().fp())
    }

    pub fn is_bijective(&self) -> bool {
        self.source.dim() == self.target.dim() && self.rank() == self.source.dim()
    }

    /// Diagrammatic composition: apply `self` first, then `next`.
    pub fn then(&self, next: &BimoduleMap) -> Result<BimoduleMap> {
        if self.target != next.source {
            return Err(Error::Mismatch {
                expected: "matching middle bimodule".into(),
                got: "different target/source".into(),
            });
        }
        let fp = self.source.algebra().fp();
        Ok(BimoduleMap {
            source: self.source.clone(),
            target: next.target.clone(),
            matrix: next.matrix.mul(fp, &self.matrix),
        })
    }
}
