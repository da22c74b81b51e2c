use num_bigint::BigInt;
use serde::Serialize;

use super::{Lattice, Matrix, Presentation};

/// Element of a [`FinAbGroup`]: one residue per cyclic factor.
pub type Coords = Vec<u64>;

/// Finite abelian group `ℤ/d₁ × … × ℤ/d_k`, each `dᵢ ≥ 1`.
///
/// Elements are residue tuples; index encodings are mixed radix with the
/// first coordinate most significant, so index order is lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct FinAbGroup {
    moduli: Vec<u64>,
}

impl FinAbGroup {
    /// # Panics
    /// If some modulus is zero.
    pub fn new(moduli: Vec<u64>) -> Self {
        assert!(moduli.iter().all(|&d| d >= 1), "cyclic moduli must be at least 1");
        FinAbGroup { moduli }
    }

    pub fn trivial() -> Self {
        FinAbGroup { moduli: Vec::new() }
    }

    pub fn cyclic(d: u64) -> Self {
        Self::new(vec![d])
    }

    /// Product group, coordinates of `self` first.
    pub fn product(&self, other: &FinAbGroup) -> FinAbGroup {
        let mut moduli = self.moduli.clone();
        moduli.extend(&other.moduli);
        FinAbGroup { moduli }
    }

    pub fn power(&self, n: usize) -> FinAbGroup {
        FinAbGroup {
            moduli: self.moduli.repeat(n),
        }
    }

    pub fn moduli(&self) -> &[u64] {
        &self.moduli
    }

    /// Number of cyclic factors (generators).
    pub fn ngens(&self) -> usize {
        self.moduli.len()
    }

    pub fn order(&self) -> u128 {
        self.moduli.iter().map(|&d| d as u128).product()
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    /// Least common multiple of the moduli.
    pub fn exponent(&self) -> u64 {
        self.moduli.iter().fold(1, |acc, &d| num_integer::lcm(acc, d))
    }

    pub fn zero(&self) -> Coords {
        vec![0; self.moduli.len()]
    }

    pub fn generator(&self, i: usize) -> Coords {
        let mut x = self.zero();
        x[i] = 1 % self.moduli[i];
        x
    }

    pub fn contains(&self, x: &[u64]) -> bool {
        x.len() == self.moduli.len() && x.iter().zip(&self.moduli).all(|(a, d)| a < d)
    }

    pub fn add(&self, x: &[u64], y: &[u64]) -> Coords {
        x.iter()
            .zip(y)
            .zip(&self.moduli)
            .map(|((a, b), &d)| ((*a as u128 + *b as u128) % d as u128) as u64)
            .collect()
    }

    pub fn add_assign(&self, acc: &mut [u64], y: &[u64]) {
        for ((a, b), &d) in acc.iter_mut().zip(y).zip(&self.moduli) {
            *a = ((*a as u128 + *b as u128) % d as u128) as u64;
        }
    }

    pub fn neg(&self, x: &[u64]) -> Coords {
        x.iter().zip(&self.moduli).map(|(a, &d)| (d - a % d) % d).collect()
    }

    pub fn sub(&self, x: &[u64], y: &[u64]) -> Coords {
        self.add(x, &self.neg(y))
    }

    /// Integer multiple `k · x`.
    pub fn scale(&self, k: i128, x: &[u64]) -> Coords {
        x.iter()
            .zip(&self.moduli)
            .map(|(a, &d)| {
                let d = d as i128;
                ((k.rem_euclid(d) * (*a as i128)).rem_euclid(d)) as u64
            })
            .collect()
    }

    /// Reduces arbitrary integer coordinates into canonical residues.
    pub fn reduce(&self, x: &[i128]) -> Coords {
        x.iter()
            .zip(&self.moduli)
            .map(|(a, &d)| a.rem_euclid(d as i128) as u64)
            .collect()
    }

    pub fn is_zero(&self, x: &[u64]) -> bool {
        x.iter().all(|&a| a == 0)
    }

    /// Additive order of an element.
    pub fn element_order(&self, x: &[u64]) -> u64 {
        x.iter()
            .zip(&self.moduli)
            .map(|(&a, &d)| d / num_integer::gcd(a, d))
            .fold(1, num_integer::lcm)
    }

    pub fn encode(&self, x: &[u64]) -> u64 {
        x.iter().zip(&self.moduli).fold(0, |acc, (a, d)| acc * d + a)
    }

    pub fn decode(&self, mut idx: u64) -> Coords {
        let mut x = vec![0; self.moduli.len()];
        for (slot, &d) in x.iter_mut().zip(&self.moduli).rev() {
            *slot = idx % d;
            idx /= d;
        }
        x
    }

    /// All elements in lexicographic order.
    pub fn elements(&self) -> impl Iterator<Item = Coords> + '_ {
        let n = self.order() as u64;
        (0..n).map(move |i| self.decode(i))
    }

    /// The group as a presentation `ℤ^k / diag(d)`.
    pub fn presentation(&self) -> Presentation<BigInt> {
        let moduli: Vec<BigInt> = self.moduli.iter().map(|&d| BigInt::from(d)).collect();
        Presentation::cyclic_sum(&moduli)
    }

    /// Lattice of integer lifts of the subgroup generated by `gens`.
    pub fn subgroup_lattice(&self, gens: &[Coords]) -> Lattice<BigInt> {
        let k = self.moduli.len();
        let mut rows: Vec<Vec<BigInt>> = (0..k)
            .map(|i| {
                let mut r = vec![BigInt::from(0); k];
                r[i] = BigInt::from(self.moduli[i]);
                r
            })
            .collect();
        rows.extend(gens.iter().map(|g| g.iter().map(|&a| BigInt::from(a)).collect()));
        Lattice::span(&Matrix::from_rows(k, rows))
    }

    /// Membership of `x` in the subgroup generated by `gens`.
    pub fn in_subgroup(&self, gens: &[Coords], x: &[u64]) -> bool {
        let v: Vec<BigInt> = x.iter().map(|&a| BigInt::from(a)).collect();
        self.subgroup_lattice(gens).contains(&v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_encoding() {
        let g = FinAbGroup::new(vec![2, 3]);
        assert_eq!(g.order(), 6);
        assert_eq!(g.add(&[1, 2], &[1, 2]), vec![0, 1]);
        assert_eq!(g.neg(&[1, 1]), vec![1, 2]);
        assert_eq!(g.scale(-1, &[1, 1]), vec![1, 2]);
        assert_eq!(g.element_order(&[1, 1]), 6);
        for i in 0..6 {
            assert_eq!(g.encode(&g.decode(i)), i);
        }
        let elems: Vec<_> = g.elements().collect();
        assert_eq!(elems[1], vec![0, 1]);
        assert_eq!(elems[3], vec![1, 0]);
    }

    #[test]
    fn trivial_factor() {
        let g = FinAbGroup::new(vec![1, 4]);
        assert_eq!(g.order(), 4);
        assert_eq!(g.generator(0), vec![0, 0]);
        assert_eq!(g.presentation().to_string(), "Z/4");
        assert!(FinAbGroup::trivial().is_trivial());
    }

    #[test]
    fn subgroup_membership() {
        let g = FinAbGroup::cyclic(4);
        assert!(g.in_subgroup(&[vec![2]], &[0]));
        assert!(g.in_subgroup(&[vec![2]], &[2]));
        assert!(!g.in_subgroup(&[vec![2]], &[1]));
    }
}
