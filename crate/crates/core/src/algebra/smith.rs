//! Hermite and Smith normal forms over the integers.

use super::{IntScalar, Matrix};

/// `u · m · v = d` with `u`, `v` unimodular and `d` diagonal, `d₁ | d₂ | …`.
/// `v_inv` is carried along so callers can lift normal-form coordinates back
/// to the original generators without inverting `v` themselves.
#[derive(Clone, Debug)]
pub struct SmithDecomposition<T> {
    pub u: Matrix<T>,
    pub d: Matrix<T>,
    pub v: Matrix<T>,
    pub v_inv: Matrix<T>,
}

impl<T: IntScalar> SmithDecomposition<T> {
    /// Number of non-zero diagonal entries.
    pub fn rank(&self) -> usize {
        self.d.diagonal().iter().filter(|x| !x.is_zero()).count()
    }

    /// Checks `u·m·v = d`, unimodularity, the divisibility chain and `v·v_inv = 1`.
    pub fn verify(&self, m: &Matrix<T>) -> bool {
        if self.u.mul(m).mul(&self.v) != self.d {
            return false;
        }
        if !self.d.is_diagonal() {
            return false;
        }
        let diag = self.d.diagonal();
        for w in diag.windows(2) {
            if w[1].is_zero() {
                continue;
            }
            if w[0].is_zero() || !w[1].is_multiple_of(&w[0]) {
                return false;
            }
        }
        if diag.iter().any(|x| x.is_negative()) {
            return false;
        }
        self.u.is_unimodular() && self.v.is_unimodular() && self.v.mul(&self.v_inv) == Matrix::identity(self.v.rows())
    }
}

/// Row-style Hermite normal form: returns a basis of the row lattice of `m`
/// in echelon form with positive pivots and entries above each pivot reduced
/// into `[0, pivot)`. The result is canonical for the lattice.
pub fn hermite_rows<T: IntScalar>(m: &Matrix<T>) -> Matrix<T> {
    let mut a = m.clone();
    let rows = a.rows();
    let cols = a.cols();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        loop {
            let pivot = (r..rows)
                .filter(|&i| !a[(i, c)].is_zero())
                .min_by(|&i, &j| a[(i, c)].abs().cmp(&a[(j, c)].abs()));
            let Some(p) = pivot else { break };
            a.swap_rows(r, p);
            let mut clean = true;
            for i in r + 1..rows {
                if a[(i, c)].is_zero() {
                    continue;
                }
                let q = a[(i, c)].div_floor(&a[(r, c)]);
                a.add_row_multiple(i, r, &-q);
                if !a[(i, c)].is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        if a[(r, c)].is_zero() {
            continue;
        }
        if a[(r, c)].is_negative() {
            a.negate_row(r);
        }
        for i in 0..r {
            let q = a[(i, c)].div_floor(&a[(r, c)]);
            a.add_row_multiple(i, r, &-q);
        }
        r += 1;
    }
    a.select_rows(&(0..r).collect::<Vec<_>>())
}

fn min_nonzero<T: IntScalar>(d: &Matrix<T>, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..d.rows() {
        for j in t..d.cols() {
            if d[(i, j)].is_zero() {
                continue;
            }
            match best {
                Some((bi, bj)) if d[(bi, bj)].abs() <= d[(i, j)].abs() => {}
                _ => best = Some((i, j)),
            }
        }
    }
    best
}

/// Smith normal form with both transformation matrices.
pub fn smith_normal_form<T: IntScalar>(m: &Matrix<T>) -> SmithDecomposition<T> {
    let (rows, cols) = (m.rows(), m.cols());
    let mut d = m.clone();
    let mut u = Matrix::identity(rows);
    let mut v = Matrix::identity(cols);
    let mut v_inv = Matrix::identity(cols);

    let mut t = 0;
    while t < rows.min(cols) {
        let Some((pi, pj)) = min_nonzero(&d, t) else { break };
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        v.swap_cols(t, pj);
        v_inv.swap_rows(t, pj);

        loop {
            let mut residue = false;
            for i in t + 1..rows {
                if d[(i, t)].is_zero() {
                    continue;
                }
                let q = d[(i, t)].div_floor(&d[(t, t)]);
                d.add_row_multiple(i, t, &-q.clone());
                u.add_row_multiple(i, t, &-q);
                residue |= !d[(i, t)].is_zero();
            }
            for j in t + 1..cols {
                if d[(t, j)].is_zero() {
                    continue;
                }
                let q = d[(t, j)].div_floor(&d[(t, t)]);
                d.add_col_multiple(j, t, &-q.clone());
                v.add_col_multiple(j, t, &-q.clone());
                v_inv.add_row_multiple(t, j, &q);
                residue |= !d[(t, j)].is_zero();
            }
            if residue {
                // a strictly smaller remainder sits in row t or column t
                let mut best = (t, t);
                for i in t + 1..rows {
                    if !d[(i, t)].is_zero() && d[(i, t)].abs() < d[best].abs() {
                        best = (i, t);
                    }
                }
                for j in t + 1..cols {
                    if !d[(t, j)].is_zero() && d[(t, j)].abs() < d[best].abs() {
                        best = (t, j);
                    }
                }
                let (bi, bj) = best;
                d.swap_rows(t, bi);
                u.swap_rows(t, bi);
                d.swap_cols(t, bj);
                v.swap_cols(t, bj);
                v_inv.swap_rows(t, bj);
                continue;
            }
            let offender = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| !d[(i, j)].is_multiple_of(&d[(t, t)]));
            match offender {
                Some((i, _)) => {
                    let one = T::one();
                    d.add_row_multiple(t, i, &one);
                    u.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }
        if d[(t, t)].is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
        t += 1;
    }

    let out = SmithDecomposition { u, d, v, v_inv };
    if cfg!(debug_assertions) {
        assert!(out.verify(m), "Smith normal form postcondition violated for {m:?}");
    }
    out
}

/// Basis (as rows) of `{ x : x · a = 0 }`.
pub fn left_kernel<T: IntScalar>(a: &Matrix<T>) -> Matrix<T> {
    let snf = smith_normal_form(a);
    let rank = snf.rank();
    snf.u.select_rows(&(rank..a.rows()).collect::<Vec<_>>())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn big(rows: &[Vec<i64>], cols: usize) -> Matrix<BigInt> {
        Matrix::from_i64_rows(cols, rows)
    }

    #[test]
    fn snf_of_diag_2_3() {
        let m = big(&[vec![2, 0], vec![0, 3]], 2);
        let s = smith_normal_form(&m);
        assert_eq!(s.d, big(&[vec![1, 0], vec![0, 6]], 2));
        // direct multiplication, independent of `verify`
        assert_eq!(s.u.mul(&m).mul(&s.v), s.d);
    }

    #[test]
    fn snf_zero_and_identity() {
        let z = big(&[vec![0]], 1);
        assert_eq!(smith_normal_form(&z).d, z);
        let id: Matrix<BigInt> = Matrix::identity(3);
        assert_eq!(smith_normal_form(&id).d, id);
    }

    #[test]
    fn snf_classic_example() {
        let m: Matrix<i64> = Matrix::from_i64_rows(
            4,
            &[
                vec![-6, 111, -36, 6],
                vec![5, -672, 210, 74],
                vec![0, -255, 81, 24],
                vec![-7, 255, -81, -10],
            ],
        );
        let s = smith_normal_form(&m);
        assert_eq!(s.d.diagonal(), vec![1, 3, 21, 0]);
    }

    #[test]
    fn snf_rectangular() {
        let m = big(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]], 3);
        let s = smith_normal_form(&m);
        assert_eq!(
            s.d.diagonal(),
            vec![2, 6, 12].into_iter().map(BigInt::from).collect::<Vec<_>>()
        );
        let wide = big(&[vec![4, 6, 10]], 3);
        assert_eq!(smith_normal_form(&wide).d.diagonal(), vec![BigInt::from(2)]);
    }

    #[test]
    fn hermite_is_canonical() {
        let a = big(&[vec![2, 4], vec![0, 3]], 2);
        let b = big(&[vec![2, 7], vec![2, 4], vec![0, 6]], 2);
        assert_eq!(hermite_rows(&a), hermite_rows(&b));
        assert_eq!(hermite_rows(&a), big(&[vec![2, 1], vec![0, 3]], 2));
    }

    #[test]
    fn kernel_vectors_annihilate() {
        let a = big(&[vec![1, 2], vec![2, 4], vec![3, 1]], 2);
        let k = left_kernel(&a);
        assert_eq!(k.rows(), 1);
        assert!(k.mul(&a).is_zero());
    }
}
