use std::fmt;

use serde::Serialize;

use super::{FiniteRingoid, RingoidHom};
use crate::algebra::{Coords, FinAbGroup};

/// One failed axiom together with the generators that witness it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Violation {
    /// A structure constant is not killed by the orders of its two generators.
    Bilinearity {
        objects: [String; 3],
        left: usize,
        right: usize,
    },
    /// `(z∘y)∘x ≠ z∘(y∘x)` on generators `x ∈ Hom(a,b)`, `y ∈ Hom(b,c)`, `z ∈ Hom(c,d)`.
    Associativity {
        objects: [String; 4],
        gens: [usize; 3],
        left: Coords,
        right: Coords,
    },
    /// `e_b ∘ x ≠ x` or `x ∘ e_a ≠ x` for generator `x ∈ Hom(a,b)`.
    Identity {
        objects: [String; 2],
        gen: usize,
        side: Side,
        got: Coords,
    },
    ScalarRingInvalid(Vec<Violation>),
    ScalarRingNotUnital,
    ScalarRingNotCommutative {
        gens: [usize; 2],
    },
    /// An action constant is not killed by the orders of its two generators.
    ActionBilinearity {
        objects: [String; 2],
        scalar: usize,
        gen: usize,
    },
    /// `1·x ≠ x`.
    ActionUnit {
        objects: [String; 2],
        gen: usize,
    },
    /// `(rs)x ≠ r(sx)`.
    ActionAssociativity {
        objects: [String; 2],
        scalars: [usize; 2],
        gen: usize,
    },
    /// `r(y∘x) ≠ y∘(r x)` (right) or `r(y∘x) ≠ (r y)∘x` (left) on generators.
    Moduloid {
        objects: [String; 3],
        scalar: usize,
        gens: [usize; 2],
        side: Side,
    },
    /// A homomorphism image is not killed by the order of its generator.
    HomWellDefined {
        objects: [String; 2],
        gen: usize,
    },
    /// `F(y∘x) ≠ F(y)∘F(x)`.
    Multiplicativity {
        objects: [String; 3],
        gens: [usize; 2],
        left: Coords,
        right: Coords,
    },
    /// `F(e_a) ≠ e_{F a}`.
    UnitPreservation {
        object: String,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Side {
    Left,
    Right,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Violation::*;
        match self {
            Bilinearity { objects: [a, b, c], left, right } => write!(
                f,
                "bilinearity: constant for g{left} in Hom({a},{b}) and g{right} in Hom({b},{c}) is not killed by their orders"
            ),
            Associativity {
                objects: [a, b, c, d],
                gens: [x, y, z],
                left,
                right,
            } => write!(
                f,
                "associativity: x=g{x} in Hom({a},{b}), y=g{y} in Hom({b},{c}), z=g{z} in Hom({c},{d}): (zy)x = {left:?} but z(yx) = {right:?}"
            ),
            Identity { objects: [a, b], gen, side, got } => {
                let lhs = match side {
                    Side::Left => format!("e_{b}·x"),
                    Side::Right => format!("x·e_{a}"),
                };
                write!(f, "identity: x=g{gen} in Hom({a},{b}): {lhs} = {got:?}")
            }
            ScalarRingInvalid(v) => {
                write!(f, "scalar ring invalid:")?;
                for w in v {
                    write!(f, " [{w}]")?;
                }
                Ok(())
            }
            ScalarRingNotUnital => write!(f, "scalar ring has no unit"),
            ScalarRingNotCommutative { gens: [r, s] } => {
                write!(f, "scalar ring not commutative on generators r{r}, r{s}")
            }
            ActionBilinearity { objects: [a, b], scalar, gen } => write!(
                f,
                "action: r{scalar}·g{gen} in Hom({a},{b}) is not killed by their orders"
            ),
            ActionUnit { objects: [a, b], gen } => {
                write!(f, "action: 1·g{gen} != g{gen} in Hom({a},{b})")
            }
            ActionAssociativity {
                objects: [a, b],
                scalars: [r, s],
                gen,
            } => write!(f, "action: (r{r} r{s})·g{gen} != r{r}·(r{s}·g{gen}) in Hom({a},{b})"),
            Moduloid {
                objects: [a, b, c],
                scalar,
                gens: [x, y],
                side,
            } => {
                let rhs = match side {
                    Side::Left => format!("(r{scalar} y)x"),
                    Side::Right => format!("y(r{scalar} x)"),
                };
                write!(
                    f,
                    "moduloid: r{scalar}(yx) != {rhs} for x=g{x} in Hom({a},{b}), y=g{y} in Hom({b},{c})"
                )
            }
            HomWellDefined { objects: [a, b], gen } => write!(
                f,
                "homomorphism: image of g{gen} in Hom({a},{b}) is not killed by its order"
            ),
            Multiplicativity {
                objects: [a, b, c],
                gens: [x, y],
                left,
                right,
            } => write!(
                f,
                "multiplicativity: x=g{x} in Hom({a},{b}), y=g{y} in Hom({b},{c}): F(yx) = {left:?} but F(y)F(x) = {right:?}"
            ),
            UnitPreservation { object } => write!(f, "unit: F(e_{object}) is not an identity"),
        }
    }
}

/// Outcome of an axiom check; clean when no violation was found.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_clean() {
            return write!(f, "clean");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

fn killed_by(h: &FinAbGroup, k: u64, x: &[u64]) -> bool {
    h.is_zero(&h.scale(k as i128, x))
}

fn gcd(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}

/// Checks every ringoid and moduloid axiom on generators.
pub fn validate(r: &FiniteRingoid) -> ValidationReport {
    let mut out = Vec::new();
    let n = r.num_objects();
    let name = |a: usize| r.object_name(a).to_string();

    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let (hab, hbc, hac) = (r.hom(a, b), r.hom(b, c), r.hom(a, c));
                for j in 0..hab.ngens() {
                    for i in 0..hbc.ngens() {
                        let k = gcd(hab.moduli()[j], hbc.moduli()[i]);
                        if !killed_by(hac, k, r.constant(a, b, c, j, i)) {
                            out.push(Violation::Bilinearity {
                                objects: [name(a), name(b), name(c)],
                                left: j,
                                right: i,
                            });
                        }
                    }
                }
            }
        }
    }

    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    let (hab, hbc, hcd) = (r.hom(a, b), r.hom(b, c), r.hom(c, d));
                    for x in 0..hab.ngens() {
                        let gx = hab.generator(x);
                        for y in 0..hbc.ngens() {
                            let gy = hbc.generator(y);
                            let yx = r.compose(a, b, c, &gy, &gx);
                            for z in 0..hcd.ngens() {
                                let gz = hcd.generator(z);
                                let zy = r.compose(b, c, d, &gz, &gy);
                                let left = r.compose(a, b, d, &zy, &gx);
                                let right = r.compose(a, c, d, &gz, &yx);
                                if left != right {
                                    out.push(Violation::Associativity {
                                        objects: [name(a), name(b), name(c), name(d)],
                                        gens: [x, y, z],
                                        left,
                                        right,
                                    });
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    if r.is_unital() {
        for a in 0..n {
            for b in 0..n {
                let h = r.hom(a, b);
                let ea = r.identity(a).unwrap();
                let eb = r.identity(b).unwrap();
                for g in 0..h.ngens() {
                    let x = h.generator(g);
                    let left = r.compose(a, b, b, eb, &x);
                    if left != x {
                        out.push(Violation::Identity {
                            objects: [name(a), name(b)],
                            gen: g,
                            side: Side::Left,
                            got: left,
                        });
                    }
                    let right = r.compose(a, a, b, &x, ea);
                    if right != x {
                        out.push(Violation::Identity {
                            objects: [name(a), name(b)],
                            gen: g,
                            side: Side::Right,
                            got: right,
                        });
                    }
                }
            }
        }
    }

    if let Some(s) = r.scalar() {
        validate_scalars(r, s.ring(), &mut out);
    }

    ValidationReport { violations: out }
}

fn validate_scalars(r: &FiniteRingoid, ring: &FiniteRingoid, out: &mut Vec<Violation>) {
    let n = r.num_objects();
    let name = |a: usize| r.object_name(a).to_string();
    let inner = validate(ring);
    if !inner.is_clean() {
        out.push(Violation::ScalarRingInvalid(inner.violations));
        return;
    }
    let rg = ring.ring_group();
    let Some(one) = ring.ring_one() else {
        out.push(Violation::ScalarRingNotUnital);
        return;
    };
    for p in 0..rg.ngens() {
        for q in 0..p {
            let (gp, gq) = (rg.generator(p), rg.generator(q));
            if ring.ring_mul(&gp, &gq) != ring.ring_mul(&gq, &gp) {
                out.push(Violation::ScalarRingNotCommutative { gens: [q, p] });
            }
        }
    }

    for a in 0..n {
        for b in 0..n {
            let h = r.hom(a, b);
            for s in 0..rg.ngens() {
                for g in 0..h.ngens() {
                    let k = gcd(rg.moduli()[s], h.moduli()[g]);
                    if !killed_by(h, k, r.action_constant(a, b, s, g).unwrap()) {
                        out.push(Violation::ActionBilinearity {
                            objects: [name(a), name(b)],
                            scalar: s,
                            gen: g,
                        });
                    }
                }
            }
            for g in 0..h.ngens() {
                let x = h.generator(g);
                if r.act(a, b, one, &x).unwrap() != x {
                    out.push(Violation::ActionUnit {
                        objects: [name(a), name(b)],
                        gen: g,
                    });
                }
                for p in 0..rg.ngens() {
                    let gp = rg.generator(p);
                    for q in 0..rg.ngens() {
                        let gq = rg.generator(q);
                        let lhs = r.act(a, b, &ring.ring_mul(&gq, &gp), &x).unwrap();
                        let rhs = r.act(a, b, &gp, &r.act(a, b, &gq, &x).unwrap()).unwrap();
                        if lhs != rhs {
                            out.push(Violation::ActionAssociativity {
                                objects: [name(a), name(b)],
                                scalars: [p, q],
                                gen: g,
                            });
                        }
                    }
                }
            }
        }
    }

    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let (hab, hbc) = (r.hom(a, b), r.hom(b, c));
                for s in 0..rg.ngens() {
                    let gs = rg.generator(s);
                    for x in 0..hab.ngens() {
                        let gx = hab.generator(x);
                        let rx = r.act(a, b, &gs, &gx).unwrap();
                        for y in 0..hbc.ngens() {
                            let gy = hbc.generator(y);
                            let lhs = r.act(a, c, &gs, &r.compose(a, b, c, &gy, &gx)).unwrap();
                            let ry = r.act(b, c, &gs, &gy).unwrap();
                            for (side, rhs) in [
                                (Side::Right, r.compose(a, b, c, &gy, &rx)),
                                (Side::Left, r.compose(a, b, c, &ry, &gx)),
                            ] {
                                if lhs != rhs {
                                    out.push(Violation::Moduloid {
                                        objects: [name(a), name(b), name(c)],
                                        scalar: s,
                                        gens: [x, y],
                                        side,
                                    });
                                }
                            }
                        }
                    }
                }
            }
        }
    }
}

/// Checks additivity, multiplicativity and unit preservation of a homomorphism on generators.
pub fn validate_hom(f: &RingoidHom) -> ValidationReport {
    let mut out = Vec::new();
    let (src, tgt) = (f.source(), f.target());
    let n = src.num_objects();
    let name = |a: usize| src.object_name(a).to_string();
    for a in 0..n {
        for b in 0..n {
            let h = src.hom(a, b);
            let th = tgt.hom(f.object(a), f.object(b));
            for g in 0..h.ngens() {
                if !killed_by(th, h.moduli()[g], f.generator_image(a, b, g)) {
                    out.push(Violation::HomWellDefined {
                        objects: [name(a), name(b)],
                        gen: g,
                    });
                }
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let (hab, hbc) = (src.hom(a, b), src.hom(b, c));
                let (fa, fb, fc) = (f.object(a), f.object(b), f.object(c));
                for x in 0..hab.ngens() {
                    let gx = hab.generator(x);
                    for y in 0..hbc.ngens() {
                        let gy = hbc.generator(y);
                        let left = f.apply(a, c, &src.compose(a, b, c, &gy, &gx));
                        let right = tgt.compose(fa, fb, fc, &f.apply(b, c, &gy), &f.apply(a, b, &gx));
                        if left != right {
                            out.push(Violation::Multiplicativity {
                                objects: [name(a), name(b), name(c)],
                                gens: [x, y],
                                left,
                                right,
                            });
                        }
                    }
                }
            }
        }
    }
    if src.is_unital() && tgt.is_unital() {
        for a in 0..n {
            let image = f.apply(a, a, src.identity(a).unwrap());
            if &image != tgt.identity(f.object(a)).unwrap() {
                out.push(Violation::UnitPreservation { object: name(a) });
            }
        }
    }
    ValidationReport { violations: out }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::ringoid::RingoidBuilder;
    use std::sync::Arc;

    #[test]
    fn catalog_rings_are_clean() {
        for r in [
            catalog::prime_field(2),
            catalog::prime_field(3),
            catalog::cyclic_ring(4),
            catalog::matrix_ring_f2(),
            catalog::f2_c2(),
            catalog::f2_times_f2(),
            catalog::zero_ring(),
        ] {
            assert!(validate(&r).is_clean(), "{}: {}", r.name(), validate(&r));
        }
    }

    #[test]
    fn z4_over_itself_checks_moduloid_axioms() {
        let z4 = Arc::new(catalog::cyclic_ring(4));
        let m = catalog::over_itself(&z4);
        assert!(m.scalar().is_some());
        assert!(validate(&m).is_clean());
    }

    #[test]
    fn nonassociative_product_is_witnessed() {
        // a∘a = b, b∘a = a, everything else 0: (a∘a)∘a = a but a∘(a∘a) = 0
        let mut b = RingoidBuilder::new("bad");
        let o = b.object("o");
        b.hom(o, o, vec![2, 2]);
        b.compose(o, o, o, 0, 0, vec![0, 1]);
        b.compose(o, o, o, 0, 1, vec![1, 0]);
        let r = b.build().unwrap();
        let report = validate(&r);
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, Violation::Associativity { .. })));
    }

    #[test]
    fn bad_scalar_action_is_witnessed() {
        let f2 = Arc::new(catalog::prime_field(2));
        let mut b = RingoidBuilder::new("m");
        let o = b.object("o");
        b.hom(o, o, vec![2]);
        b.compose(o, o, o, 0, 0, vec![1]);
        b.scalar(f2);
        // 1·x = 0 breaks the unit axiom
        let r = b.build().unwrap();
        assert!(validate(&r)
            .violations
            .iter()
            .any(|v| matches!(v, Violation::ActionUnit { .. })));
    }
}
