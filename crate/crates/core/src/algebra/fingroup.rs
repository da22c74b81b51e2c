use std::collections::VecDeque;

use num_bigint::BigInt;

use super::{Lattice, Presentation};
use crate::error::{Error, Result};

/// Practical ceiling on group order; the full table has `n²` entries.
pub const GROUP_ORDER_CEILING: usize = 10_000;

/// Finite group stored by its full multiplication table.
///
/// `mul(a, b)` is the product `a·b`; element `identity` is the neutral element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinGroup {
    order: usize,
    table: Vec<u32>,
    identity: usize,
    inverse: Vec<u32>,
}

impl FinGroup {
    /// Validates associativity, identity and inverses exhaustively.
    pub fn from_table(order: usize, table: Vec<u32>, identity: usize) -> Result<Self> {
        if order == 0 || order > GROUP_ORDER_CEILING {
            return Err(Error::Structure(format!(
                "group order {order} outside 1..={GROUP_ORDER_CEILING}"
            )));
        }
        if table.len() != order * order || table.iter().any(|&x| x as usize >= order) {
            return Err(Error::Structure("malformed multiplication table".into()));
        }
        if identity >= order {
            return Err(Error::Structure("identity index out of range".into()));
        }
        let g = Self::from_table_unchecked(order, table, identity)?;
        for a in 0..order {
            if g.mul(identity, a) != a || g.mul(a, identity) != a {
                return Err(Error::Axiom(format!("identity fails on element {a}")));
            }
        }
        for a in 0..order {
            for b in 0..order {
                let ab = g.mul(a, b);
                for c in 0..order {
                    if g.mul(ab, c) != g.mul(a, g.mul(b, c)) {
                        return Err(Error::Axiom(format!("associativity fails on ({a}, {b}, {c})")));
                    }
                }
            }
        }
        Ok(g)
    }

    /// Builds the group when the table is known to come from an associative
    /// operation (matrix products, permutation composition). Inverses are still
    /// located and their absence is an error.
    pub(crate) fn from_table_unchecked(order: usize, table: Vec<u32>, identity: usize) -> Result<Self> {
        let mut inverse = vec![u32::MAX; order];
        for a in 0..order {
            for b in 0..order {
                if table[a * order + b] as usize == identity {
                    inverse[a] = b as u32;
                    break;
                }
            }
            if inverse[a] == u32::MAX || table[inverse[a] as usize * order + a] as usize != identity {
                return Err(Error::Axiom(format!("element {a} has no two-sided inverse")));
            }
        }
        Ok(FinGroup {
            order,
            table,
            identity,
            inverse,
        })
    }

    /// Cyclic group `ℤ/n` with element `k` standing for `k`.
    pub fn cyclic(n: usize) -> Self {
        let table = (0..n).flat_map(|a| (0..n).map(move |b| ((a + b) % n) as u32)).collect();
        Self::from_table_unchecked(n, table, 0).expect("cyclic group table")
    }

    /// Symmetric group on `n` letters, elements in lexicographic order of
    /// permutations; product is composition `(a·b)(i) = a(b(i))`.
    pub fn symmetric(n: usize) -> Self {
        let perms = permutations(n);
        let index = |p: &[usize]| perms.iter().position(|q| q == p).unwrap();
        let mut table = Vec::with_capacity(perms.len() * perms.len());
        for a in &perms {
            for b in &perms {
                let c: Vec<usize> = (0..n).map(|i| a[b[i]]).collect();
                table.push(index(&c) as u32);
            }
        }
        Self::from_table_unchecked(perms.len(), table, 0).expect("symmetric group table")
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }

    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Subgroup generated by `gens`, as a membership mask.
    pub fn subgroup_closure(&self, gens: &[usize]) -> Vec<bool> {
        let mut member = vec![false; self.order];
        member[self.identity] = true;
        let mut queue = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if !member[y] {
                    member[y] = true;
                    queue.push_back(y);
                }
            }
        }
        member
    }

    /// Greedy generating set: scan elements in index order, keep those not yet generated.
    pub fn generating_set(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut member = self.subgroup_closure(&gens);
        for a in 0..self.order {
            if !member[a] {
                gens.push(a);
                member = self.subgroup_closure(&gens);
            }
        }
        gens
    }

    /// Commutator subgroup `[G, G]` as a membership mask: normal closure of the
    /// commutators of a generating set.
    pub fn commutator_subgroup(&self) -> Vec<bool> {
        let gens = self.generating_set();
        let mut seeds: Vec<usize> = Vec::new();
        for &a in &gens {
            for &b in &gens {
                let c = self.commutator(a, b);
                if c != self.identity && !seeds.contains(&c) {
                    seeds.push(c);
                }
            }
        }
        let mut member = self.subgroup_closure(&seeds);
        loop {
            let mut grown = false;
            let current: Vec<usize> = (0..self.order).filter(|&x| member[x]).collect();
            for &h in &current {
                for &g in &gens {
                    let conj = self.mul(self.mul(self.inv(g), h), g);
                    if !member[conj] {
                        seeds.push(conj);
                        grown = true;
                    }
                }
            }
            if !grown {
                return member;
            }
            member = self.subgroup_closure(&seeds);
        }
    }

    /// `G / N` for a normal subgroup mask; returns the quotient and the coset label of each element.
    pub fn quotient(&self, normal: &[bool]) -> (FinGroup, Vec<usize>) {
        let mut label = vec![usize::MAX; self.order];
        let mut reps = Vec::new();
        for a in 0..self.order {
            if label[a] != usize::MAX {
                continue;
            }
            let id = reps.len();
            reps.push(a);
            for n in (0..self.order).filter(|&n| normal[n]) {
                label[self.mul(a, n)] = id;
            }
        }
        let q = reps.len();
        let table = reps
            .iter()
            .flat_map(|&a| reps.iter().map(move |&b| (a, b)))
            .map(|(a, b)| label[self.mul(a, b)] as u32)
            .collect();
        let quotient = FinGroup::from_table_unchecked(q, table, label[self.identity])
            .expect("quotient by a normal subgroup is a group");
        (quotient, label)
    }

    /// Decomposes an abelian group table into its invariant factors. The
    /// relation lattice on a generating set is spanned by the cycles of the
    /// Cayley graph (one relation per edge against a BFS spanning tree).
    /// Returns the presentation and the generating set used.
    pub fn abelian_invariants(&self) -> (Presentation<BigInt>, Vec<usize>) {
        let (p, gens, _) = self.abelian_words();
        (p, gens)
    }

    /// As `abelian_invariants`, plus each element as a word in the generating set.
    fn abelian_words(&self) -> (Presentation<BigInt>, Vec<usize>, Vec<Vec<BigInt>>) {
        debug_assert!(self.is_abelian());
        let gens = self.generating_set();
        let k = gens.len();
        let mut word: Vec<Option<Vec<i64>>> = vec![None; self.order];
        word[self.identity] = Some(vec![0; k]);
        let mut queue = VecDeque::from([self.identity]);
        let mut relations = Lattice::zero(k);
        while let Some(x) = queue.pop_front() {
            let wx = word[x].clone().unwrap();
            for (i, &g) in gens.iter().enumerate() {
                let y = self.mul(x, g);
                let mut step = wx.clone();
                step[i] += 1;
                match &word[y] {
                    None => {
                        word[y] = Some(step);
                        queue.push_back(y);
                    }
                    Some(wy) => {
                        let rel: Vec<BigInt> = step.iter().zip(wy).map(|(a, b)| BigInt::from(a - b)).collect();
                        if rel.iter().any(|v| v != &BigInt::from(0)) {
                            relations.insert(rel);
                        }
                    }
                }
            }
        }
        let words = word
            .into_iter()
            .map(|w| w.unwrap().into_iter().map(BigInt::from).collect())
            .collect();
        (Presentation::from_lattice(relations), gens, words)
    }

    /// `G / [G, G]` with the class of every element, as a vector over the presentation's generators.
    pub fn abelianization_map(&self) -> (Presentation<BigInt>, Vec<Vec<BigInt>>) {
        let comm = self.commutator_subgroup();
        let (q, label) = self.quotient(&comm);
        let (p, _, words) = q.abelian_words();
        (p, label.iter().map(|&l| words[l].clone()).collect())
    }

    /// Abelianization `G / [G, G]`.
    pub fn abelianization(&self) -> Presentation<BigInt> {
        let comm = self.commutator_subgroup();
        let (q, _) = self.quotient(&comm);
        q.abelian_invariants().0
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                rec(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_group() {
        let g = FinGroup::cyclic(1);
        assert_eq!(g.abelianization().to_string(), "0");
    }

    #[test]
    fn s3_abelianizes_to_z2() {
        let s3 = FinGroup::symmetric(3);
        assert_eq!(s3.order(), 6);
        // brute force: the subgroup generated by every commutator is A₃ (order 3)
        let all: Vec<usize> = (0..6)
            .flat_map(|a| (0..6).map(move |b| (a, b)))
            .map(|(a, b)| s3.commutator(a, b))
            .collect();
        let brute = s3.subgroup_closure(&all);
        assert_eq!(brute.iter().filter(|&&m| m).count(), 3);
        assert_eq!(s3.commutator_subgroup(), brute);
        assert_eq!(s3.abelianization().to_string(), "Z/2");
    }

    #[test]
    fn abelian_groups_are_fixed() {
        assert_eq!(FinGroup::cyclic(4).abelianization().to_string(), "Z/4");
        assert_eq!(FinGroup::cyclic(12).abelianization().to_string(), "Z/12");
    }

    #[test]
    fn validated_table_rejects_nonassociative() {
        // a Latin square with identity 0 that is not associative
        let table = vec![
            0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3, 3, 2, 4, 0, 1, 4, 3, 1, 2, 0,
        ];
        assert!(FinGroup::from_table(5, table, 0).is_err());
        assert!(FinGroup::from_table(3, FinGroup::cyclic(3).table.clone(), 0).is_ok());
    }
}
