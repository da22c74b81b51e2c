//! Finitely presented abelian groups and homomorphisms between them.

use std::fmt;

use serde::Serialize;

use super::{hermite_rows, left_kernel, smith_normal_form, IntScalar, Lattice, Matrix};

/// `ℤ^g / rowspan(relations)`, together with its Smith data.
///
/// Two presentations compare equal when their invariants (free rank and
/// torsion chain) agree; the relation matrices themselves are not canonical.
#[derive(Clone, Debug)]
pub struct Presentation<T> {
    generators: usize,
    relations: Lattice<T>,
    rank: usize,
    torsion: Vec<T>,
    // x ↦ x·v reduces entrywise modulo `diag`; v_inv lifts back
    v: Matrix<T>,
    v_inv: Matrix<T>,
    diag: Vec<T>,
}

impl<T: IntScalar> Presentation<T> {
    /// Cokernel of the relation matrix: `ℤ^cols / rowspan(m)`.
    pub fn cokernel(m: &Matrix<T>) -> Self {
        let relations = Lattice::span(m);
        Self::from_lattice(relations)
    }

    pub fn from_lattice(relations: Lattice<T>) -> Self {
        let g = relations.dim();
        let snf = smith_normal_form(relations.basis());
        let mut diag: Vec<T> = snf.d.diagonal();
        diag.resize(g, T::zero());
        let torsion: Vec<T> = diag.iter().filter(|d| !d.is_zero() && !d.is_one()).cloned().collect();
        let rank = diag.iter().filter(|d| d.is_zero()).count();
        Presentation {
            generators: g,
            relations,
            rank,
            torsion,
            v: snf.v,
            v_inv: snf.v_inv,
            diag,
        }
    }

    pub fn free(n: usize) -> Self {
        Self::from_lattice(Lattice::zero(n))
    }

    pub fn trivial() -> Self {
        Self::free(0)
    }

    /// Direct sum of cyclic groups `ℤ/d` (`d = 0` meaning `ℤ`).
    pub fn cyclic_sum(moduli: &[T]) -> Self {
        let n = moduli.len();
        let mut m = Matrix::zeros(n, n);
        for (i, d) in moduli.iter().enumerate() {
            m[(i, i)] = d.clone();
        }
        Self::cokernel(&m)
    }

    pub fn generators(&self) -> usize {
        self.generators
    }

    pub fn relations(&self) -> &Lattice<T> {
        &self.relations
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn torsion(&self) -> &[T] {
        &self.torsion
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.rank == 0
    }

    /// Group order for finite groups.
    pub fn order(&self) -> Option<T> {
        if self.rank > 0 {
            return None;
        }
        Some(self.torsion.iter().fold(T::one(), |a, b| a * b.clone()))
    }

    /// Number of normal-form coordinates (`rank + torsion.len()`).
    pub fn normal_len(&self) -> usize {
        self.rank + self.torsion.len()
    }

    /// Normal-form moduli in coordinate order (`0` for a free coordinate).
    pub fn normal_moduli(&self) -> Vec<T> {
        self.diag.iter().filter(|d| !d.is_one()).cloned().collect()
    }

    /// Coordinates of the class of `x ∈ ℤ^g` in `⊕ ℤ/dᵢ`, torsion coordinates
    /// reduced into `[0, dᵢ)`. Equal classes give equal vectors.
    pub fn normal_coords(&self, x: &[T]) -> Vec<T> {
        assert_eq!(x.len(), self.generators, "vector has wrong length");
        let y = self.v.left_apply(x);
        y.into_iter()
            .zip(&self.diag)
            .filter(|(_, d)| !d.is_one())
            .map(|(c, d)| if d.is_zero() { c } else { c.mod_floor(d) })
            .collect()
    }

    pub fn is_zero_class(&self, x: &[T]) -> bool {
        self.relations.contains(x)
    }

    pub fn same_class(&self, x: &[T], y: &[T]) -> bool {
        let diff: Vec<T> = x.iter().zip(y).map(|(a, b)| a.clone() - b.clone()).collect();
        self.is_zero_class(&diff)
    }

    /// Representative in `ℤ^g` of the `k`-th normal-form generator.
    pub fn lift(&self, k: usize) -> Vec<T> {
        let idx: Vec<usize> = (0..self.generators).filter(|&i| !self.diag[i].is_one()).collect();
        self.v_inv.row_vec(idx[k])
    }

    pub fn unit_vector(&self, i: usize) -> Vec<T> {
        let mut v = vec![T::zero(); self.generators];
        v[i] = T::one();
        v
    }
}

impl<T: IntScalar> PartialEq for Presentation<T> {
    fn eq(&self, other: &Self) -> bool {
        self.rank == other.rank && self.torsion == other.torsion
    }
}

impl<T: IntScalar> Eq for Presentation<T> {}

impl<T: IntScalar> fmt::Display for Presentation<T> {
    /// `0`, `Z`, `Z^2 + Z/2 + Z/6`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for t in &self.torsion {
            parts.push(format!("Z/{t}"));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// Invariant summary used in machine output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PresentationSummary {
    pub generators: usize,
    pub rank: usize,
    pub torsion: Vec<String>,
    pub relations: Vec<Vec<String>>,
    pub display: String,
}

impl<T: IntScalar> Presentation<T> {
    pub fn summary(&self) -> PresentationSummary {
        PresentationSummary {
            generators: self.generators,
            rank: self.rank,
            torsion: self.torsion.iter().map(|t| t.to_string()).collect(),
            relations: self
                .relations
                .basis()
                .row_iter()
                .map(|r| r.iter().map(|x| x.to_string()).collect())
                .collect(),
            display: self.to_string(),
        }
    }
}

/// Homomorphism between presentations given on generators: `x ↦ x · matrix`.
#[derive(Clone, Debug)]
pub struct PresentationMap<T> {
    pub source: Presentation<T>,
    pub target: Presentation<T>,
    pub matrix: Matrix<T>,
}

impl<T: IntScalar> PresentationMap<T> {
    pub fn new(source: Presentation<T>, target: Presentation<T>, matrix: Matrix<T>) -> Self {
        assert_eq!(matrix.rows(), source.generators());
        assert_eq!(matrix.cols(), target.generators());
        PresentationMap { source, target, matrix }
    }

    pub fn apply(&self, x: &[T]) -> Vec<T> {
        self.matrix.left_apply(x)
    }

    /// Relations of the source that are not sent to relations of the target.
    pub fn violated_relations(&self) -> Vec<Vec<T>> {
        self.source
            .relations()
            .basis()
            .row_iter()
            .filter(|r| !self.target.is_zero_class(&self.apply(r)))
            .map(|r| r.to_vec())
            .collect()
    }

    pub fn is_well_defined(&self) -> bool {
        self.violated_relations().is_empty()
    }

    /// `{ x ∈ ℤ^g_src : x ↦ 0 }`, a lattice containing the source relations.
    pub fn kernel_lattice(&self) -> Lattice<T> {
        let stacked = self.matrix.vstack(self.target.relations().basis());
        let k = left_kernel(&stacked);
        let g = self.source.generators();
        let proj = k.truncate_cols(g);
        Lattice::span(&proj).sum(self.source.relations())
    }

    /// Image together with the target relations, as a lattice in `ℤ^g_tgt`.
    pub fn image_lattice(&self) -> Lattice<T> {
        Lattice::span(&self.matrix).sum(self.target.relations())
    }

    pub fn is_injective(&self) -> bool {
        self.kernel_lattice() == *self.source.relations()
    }

    pub fn is_surjective(&self) -> bool {
        self.image_lattice().is_full()
    }

    pub fn is_isomorphism(&self) -> bool {
        self.is_well_defined() && self.is_injective() && self.is_surjective()
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.row_iter().all(|r| self.target.is_zero_class(r))
    }

    pub fn compose(&self, after: &PresentationMap<T>) -> PresentationMap<T> {
        PresentationMap::new(
            self.source.clone(),
            after.target.clone(),
            self.matrix.mul(&after.matrix),
        )
    }

    /// Kernel as a group in its own right, plus the basis used as its generators
    /// (vectors in `ℤ^g_src`).
    pub fn kernel(&self) -> (Presentation<T>, Matrix<T>) {
        subquotient(&self.kernel_lattice(), self.source.relations())
    }

    /// Cokernel of the map as a quotient of the target.
    pub fn cokernel(&self) -> Presentation<T> {
        Presentation::from_lattice(self.image_lattice())
    }

    /// Equality of the two maps as homomorphisms (agree on every generator
    /// modulo target relations).
    pub fn agrees_with(&self, other: &PresentationMap<T>) -> bool {
        (0..self.matrix.rows()).all(|i| self.target.same_class(self.matrix.row(i), other.matrix.row(i)))
    }
}

/// `big / small` for lattices `small ⊆ big`, presented on the Hermite basis of `big`.
pub fn subquotient<T: IntScalar>(big: &Lattice<T>, small: &Lattice<T>) -> (Presentation<T>, Matrix<T>) {
    let basis = big.basis().clone();
    let k = basis.rows();
    let rels: Vec<Vec<T>> = small
        .basis()
        .row_iter()
        .map(|r| big.coordinates(r).expect("subquotient requires small ⊆ big"))
        .collect();
    let rel_matrix = Matrix::from_rows(k, rels);
    (Presentation::cokernel(&hermite_rows(&rel_matrix)), basis)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type P = Presentation<BigInt>;

    fn m(rows: &[Vec<i64>], cols: usize) -> Matrix<BigInt> {
        Matrix::from_i64_rows(cols, rows)
    }

    #[test]
    fn cokernel_examples() {
        let z2 = P::cokernel(&m(&[vec![2]], 1));
        assert_eq!(z2.to_string(), "Z/2");
        let free = P::cokernel(&Matrix::zeros(0, 2));
        assert_eq!(free.to_string(), "Z^2");
        let z6 = P::cokernel(&m(&[vec![2, 0], vec![0, 3]], 2));
        assert_eq!(z6.to_string(), "Z/6");
        assert_eq!(z6.order(), Some(BigInt::from(6)));
    }

    #[test]
    fn normal_coords_identify_classes() {
        let p = P::cokernel(&m(&[vec![2, 0], vec![0, 3]], 2));
        let a = p.normal_coords(&[BigInt::from(1), BigInt::from(0)]);
        let b = p.normal_coords(&[BigInt::from(3), BigInt::from(3)]);
        assert_eq!(a, b);
        assert!(p.same_class(&[BigInt::from(1), BigInt::from(0)], &[BigInt::from(3), BigInt::from(3)]));
        let lifted = p.lift(0);
        let coords = p.normal_coords(&lifted);
        assert_eq!(coords, vec![BigInt::from(1)]);
    }

    #[test]
    fn map_kernel_and_image() {
        // ℤ → ℤ/4, 1 ↦ 2: kernel 2ℤ ≅ ℤ, image ℤ/2
        let src = P::free(1);
        let tgt = P::cokernel(&m(&[vec![4]], 1));
        let f = PresentationMap::new(src, tgt, m(&[vec![2]], 1));
        assert!(f.is_well_defined());
        assert!(!f.is_injective());
        assert!(!f.is_surjective());
        let (k, basis) = f.kernel();
        assert_eq!(k.to_string(), "Z");
        assert_eq!(basis, m(&[vec![2]], 1));
        assert_eq!(f.cokernel().to_string(), "Z/2");
    }

    #[test]
    fn ill_defined_map_reports_relation() {
        // ℤ/2 → ℤ/3 sending the generator to 1 is not a homomorphism
        let f = PresentationMap::new(
            P::cokernel(&m(&[vec![2]], 1)),
            P::cokernel(&m(&[vec![3]], 1)),
            m(&[vec![1]], 1),
        );
        assert!(!f.is_well_defined());
        assert_eq!(f.violated_relations().len(), 1);
    }
}
