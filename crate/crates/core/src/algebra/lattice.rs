use super::{hermite_rows, IntScalar, Matrix};

/// Sublattice of ℤⁿ stored by its canonical Hermite basis, so `==` is lattice equality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice<T> {
    dim: usize,
    basis: Matrix<T>,
}

impl<T: IntScalar> Lattice<T> {
    pub fn zero(dim: usize) -> Self {
        Lattice {
            dim,
            basis: Matrix::zeros(0, dim),
        }
    }

    pub fn full(dim: usize) -> Self {
        Lattice {
            dim,
            basis: Matrix::identity(dim),
        }
    }

    pub fn span(rows: &Matrix<T>) -> Self {
        Lattice {
            dim: rows.cols(),
            basis: hermite_rows(rows),
        }
    }

    pub fn from_vectors(dim: usize, vectors: Vec<Vec<T>>) -> Self {
        Self::span(&Matrix::from_rows(dim, vectors))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &Matrix<T> {
        &self.basis
    }

    pub fn is_full(&self) -> bool {
        self.basis == Matrix::identity(self.dim)
    }

    pub fn sum(&self, other: &Lattice<T>) -> Lattice<T> {
        assert_eq!(self.dim, other.dim);
        Lattice::span(&self.basis.vstack(&other.basis))
    }

    pub fn insert(&mut self, v: Vec<T>) {
        if self.contains(&v) {
            return;
        }
        let mut m = self.basis.clone();
        m.push_row(v);
        self.basis = hermite_rows(&m);
    }

    /// Coefficients of `v` in the Hermite basis, or `None` when `v` is outside.
    pub fn coordinates(&self, v: &[T]) -> Option<Vec<T>> {
        assert_eq!(v.len(), self.dim);
        let mut rest = v.to_vec();
        let mut coeffs = Vec::with_capacity(self.basis.rows());
        let mut col = 0;
        for r in 0..self.basis.rows() {
            let row = self.basis.row(r);
            while row[col].is_zero() {
                if !rest[col].is_zero() {
                    return None;
                }
                col += 1;
            }
            let (q, rem) = rest[col].div_mod_floor(&row[col]);
            if !rem.is_zero() {
                return None;
            }
            for (x, b) in rest.iter_mut().zip(row) {
                *x = x.clone() - q.clone() * b.clone();
            }
            coeffs.push(q);
            col += 1;
        }
        if rest.iter().all(|x| x.is_zero()) {
            Some(coeffs)
        } else {
            None
        }
    }

    pub fn contains(&self, v: &[T]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains_lattice(&self, other: &Lattice<T>) -> bool {
        other.basis.row_iter().all(|r| self.contains(r))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn membership_and_sum() {
        let l: Lattice<i64> = Lattice::from_vectors(2, vec![vec![2, 0], vec![0, 3]]);
        assert!(l.contains(&[4, -3]));
        assert!(!l.contains(&[1, 0]));
        let coords = l.coordinates(&[4, 6]).unwrap();
        assert_eq!(coords, vec![2, 2]);
        let m = Lattice::from_vectors(2, vec![vec![1, 1]]);
        let s = l.sum(&m);
        assert!(s.is_full());
        let mut z = Lattice::zero(2);
        z.insert(vec![2, 0]);
        z.insert(vec![0, 3]);
        assert_eq!(z, l);
    }
}
