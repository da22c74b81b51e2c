use super::FiniteRingoid;
use crate::algebra::Coords;
use crate::error::{Error, Result};

/// Largest total number of table entries we are willing to allocate.
pub const TABLE_CEILING: u64 = 1 << 25;

/// Addition and composition tables on element indices.
///
/// Element indices are the mixed-radix encodings of [`crate::algebra::FinAbGroup`],
/// so `0` is always the zero morphism.
#[derive(Clone, Debug)]
pub struct ElementTables {
    n: usize,
    sizes: Vec<u32>,
    add: Vec<Vec<u32>>,
    neg: Vec<Vec<u32>>,
    mul: Vec<Vec<u32>>,
    identity: Option<Vec<u32>>,
}

impl ElementTables {
    pub fn new(r: &FiniteRingoid) -> Result<Self> {
        let n = r.num_objects();
        let mut sizes = Vec::with_capacity(n * n);
        let mut total: u64 = 0;
        for a in 0..n {
            for b in 0..n {
                let s = r.hom(a, b).order();
                if s > u32::MAX as u128 {
                    return Err(Error::Unsupported("hom-set too large to tabulate".into()));
                }
                sizes.push(s as u32);
                total = total.saturating_add((s * s) as u64);
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    total = total.saturating_add(sizes[a * n + b] as u64 * sizes[b * n + c] as u64);
                }
            }
        }
        if total > TABLE_CEILING {
            return Err(Error::Unsupported(format!(
                "element tables need {total} entries, above the ceiling {TABLE_CEILING}"
            )));
        }

        let mut add = Vec::with_capacity(n * n);
        let mut neg = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                let h = r.hom(a, b);
                let elems: Vec<Coords> = h.elements().collect();
                let mut t = Vec::with_capacity(elems.len() * elems.len());
                for x in &elems {
                    for y in &elems {
                        t.push(h.encode(&h.add(x, y)) as u32);
                    }
                }
                add.push(t);
                neg.push(elems.iter().map(|x| h.encode(&h.neg(x)) as u32).collect());
            }
        }

        let mut mul = Vec::with_capacity(n * n * n);
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let (hab, hbc, hac) = (r.hom(a, b), r.hom(b, c), r.hom(a, c));
                    let xs: Vec<Coords> = hab.elements().collect();
                    let mut t = Vec::with_capacity(xs.len() * hbc.order() as usize);
                    for y in hbc.elements() {
                        for x in &xs {
                            t.push(hac.encode(&r.compose(a, b, c, &y, x)) as u32);
                        }
                    }
                    mul.push(t);
                }
            }
        }

        let identity = r.identities().map(|ids| {
            ids.iter()
                .enumerate()
                .map(|(a, e)| r.hom(a, a).encode(e) as u32)
                .collect()
        });

        Ok(ElementTables {
            n,
            sizes,
            add,
            neg,
            mul,
            identity,
        })
    }

    pub fn num_objects(&self) -> usize {
        self.n
    }

    pub fn size(&self, a: usize, b: usize) -> u32 {
        self.sizes[a * self.n + b]
    }

    pub fn add(&self, a: usize, b: usize, x: u32, y: u32) -> u32 {
        let s = self.size(a, b) as usize;
        self.add[a * self.n + b][x as usize * s + y as usize]
    }

    pub fn neg(&self, a: usize, b: usize, x: u32) -> u32 {
        self.neg[a * self.n + b][x as usize]
    }

    /// Index of `y ∘ x` for `x ∈ Hom(a,b)`, `y ∈ Hom(b,c)`.
    pub fn mul(&self, a: usize, b: usize, c: usize, y: u32, x: u32) -> u32 {
        let s = self.size(a, b) as usize;
        self.mul[(a * self.n + b) * self.n + c][y as usize * s + x as usize]
    }

    pub fn identity(&self, a: usize) -> Option<u32> {
        self.identity.as_ref().map(|ids| ids[a])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn tables_agree_with_coordinates() {
        let r = catalog::matrix_ring_f2();
        let t = ElementTables::new(&r).unwrap();
        let h = r.hom(0, 0);
        assert_eq!(t.size(0, 0), 16);
        for x in 0..16u32 {
            for y in 0..16u32 {
                let (cx, cy) = (h.decode(x as u64), h.decode(y as u64));
                assert_eq!(t.add(0, 0, x, y) as u64, h.encode(&h.add(&cx, &cy)));
                assert_eq!(t.mul(0, 0, 0, y, x) as u64, h.encode(&r.compose(0, 0, 0, &cy, &cx)));
            }
        }
        let e = t.identity(0).unwrap();
        for x in 0..16 {
            assert_eq!(t.mul(0, 0, 0, e, x), x);
        }
    }
}
