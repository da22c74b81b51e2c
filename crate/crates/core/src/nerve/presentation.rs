use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;

use crate::algebra::{Lattice, Presentation};

/// A letter: generator index and exponent `±1`.
pub type Letter = (usize, i8);
pub type Word = Vec<Letter>;

/// Finite group presentation `⟨ generators | relators ⟩`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupPresentation {
    pub names: Vec<String>,
    pub relators: Vec<Word>,
}

fn inverse(w: &[Letter]) -> Word {
    w.iter().rev().map(|&(g, e)| (g, -e)).collect()
}

/// Free and cyclic reduction.
fn reduce(w: &[Letter]) -> Word {
    let mut out: Word = Vec::with_capacity(w.len());
    for &l in w {
        match out.last() {
            Some(&(g, e)) if g == l.0 && e == -l.1 => {
                out.pop();
            }
            _ => out.push(l),
        }
    }
    while out.len() >= 2 {
        let (f, l) = (out[0], out[out.len() - 1]);
        if f.0 == l.0 && f.1 == -l.1 {
            out.pop();
            out.remove(0);
        } else {
            break;
        }
    }
    out
}

/// Cyclic rotation and inversion class representative, to drop duplicate relators.
fn canonical(w: &[Letter]) -> Word {
    let mut best: Option<Word> = None;
    for cand in [w.to_vec(), inverse(w)] {
        for k in 0..cand.len().max(1) {
            let mut r = cand[k..].to_vec();
            r.extend_from_slice(&cand[..k]);
            if best.as_ref().is_none_or(|b| r < *b) {
                best = Some(r);
            }
        }
    }
    best.unwrap_or_default()
}

impl GroupPresentation {
    pub fn new(names: Vec<String>, relators: Vec<Word>) -> Self {
        GroupPresentation { names, relators }
    }

    pub fn num_generators(&self) -> usize {
        self.names.len()
    }

    /// Exponent-sum matrix: the abelianization.
    pub fn abelianization(&self) -> Presentation<BigInt> {
        let n = self.names.len();
        let rows = self
            .relators
            .iter()
            .map(|w| {
                let mut v = vec![BigInt::from(0); n];
                for &(g, e) in w {
                    v[g] += e as i32;
                }
                v
            })
            .collect();
        Presentation::from_lattice(Lattice::from_vectors(n, rows))
    }

    /// Tietze reduction: a generator occurring exactly once in some relator is
    /// solved for, substituted everywhere, and removed together with that relator.
    ///
    /// Returns the reduced presentation and, for every original generator, a word
    /// in the surviving generators.
    pub fn simplify(&self) -> (GroupPresentation, Vec<Word>) {
        let n = self.names.len();
        let mut rels: Vec<Word> = self.relators.iter().map(|w| reduce(w)).collect();
        // value[g] = current expression of original generator g
        let mut value: Vec<Word> = (0..n).map(|g| vec![(g, 1)]).collect();
        let mut alive = vec![true; n];
        loop {
            rels.retain(|w| !w.is_empty());
            let mut seen = BTreeSet::new();
            rels.retain(|w| seen.insert(canonical(w)));
            // shortest relator with a once-occurring generator; the latest such generator
            let mut pick: Option<(usize, usize, usize)> = None;
            for (ri, w) in rels.iter().enumerate() {
                let mut count = vec![0usize; n];
                for &(g, _) in w {
                    count[g] += 1;
                }
                if let Some(g) = (0..n).rev().find(|&g| count[g] == 1) {
                    let better = match pick {
                        None => true,
                        Some((_, _, len)) => w.len() < len,
                    };
                    if better {
                        pick = Some((ri, g, w.len()));
                    }
                }
            }
            let Some((ri, g, _)) = pick else { break };
            let w = rels.remove(ri);
            let pos = w.iter().position(|l| l.0 == g).unwrap();
            // w = u g^e v = 1, so g^e = u⁻¹ v⁻¹ up to rotation: g^e = (v u)⁻¹
            let mut vu = w[pos + 1..].to_vec();
            vu.extend_from_slice(&w[..pos]);
            let ge = inverse(&vu);
            let sol = if w[pos].1 == 1 { ge } else { inverse(&ge) };
            let substitute = |word: &[Letter]| -> Word {
                let mut out = Vec::new();
                for &(h, e) in word {
                    if h == g {
                        if e == 1 {
                            out.extend_from_slice(&sol);
                        } else {
                            out.extend(inverse(&sol));
                        }
                    } else {
                        out.push((h, e));
                    }
                }
                reduce_free(&out)
            };
            rels = rels.iter().map(|r| reduce(&substitute(r))).collect();
            value = value.iter().map(|v| substitute(v)).collect();
            alive[g] = false;
        }
        // renumber survivors
        let mut new_index = vec![usize::MAX; n];
        let mut names = Vec::new();
        for g in 0..n {
            if alive[g] {
                new_index[g] = names.len();
                names.push(self.names[g].clone());
            }
        }
        let renumber = |w: &Word| -> Word { w.iter().map(|&(g, e)| (new_index[g], e)).collect() };
        let relators = rels.iter().map(renumber).collect();
        let value = value.iter().map(renumber).collect();
        (GroupPresentation { names, relators }, value)
    }
}

fn reduce_free(w: &[Letter]) -> Word {
    let mut out: Word = Vec::with_capacity(w.len());
    for &l in w {
        match out.last() {
            Some(&(g, e)) if g == l.0 && e == -l.1 => {
                out.pop();
            }
            _ => out.push(l),
        }
    }
    out
}

impl fmt::Display for GroupPresentation {
    /// `<x, y | x y x^-1 y^-1>`; an empty relator list prints as `-`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letter = |&(g, e): &Letter| {
            if e == 1 {
                self.names[g].clone()
            } else {
                format!("{}^-1", self.names[g])
            }
        };
        let rels: Vec<String> = self
            .relators
            .iter()
            .map(|w| w.iter().map(letter).collect::<Vec<_>>().join(" "))
            .collect();
        let rels = if rels.is_empty() {
            "-".to_string()
        } else {
            rels.join(", ")
        };
        write!(f, "<{} | {}>", self.names.join(", "), rels)
    }
}
