use kringoid::algebra::{cokernel, smith_normal_form};
use kringoid::{AbPresentation, FinGroup, IntMatrix};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

fn matrix(max_dim: usize) -> impl Strategy<Value = IntMatrix> {
    (1..=max_dim, 1..=max_dim).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec(-12i64..=12, c), r)
            .prop_map(move |rows| IntMatrix::from_i64_rows(c, &rows))
    })
}

fn square(max_dim: usize) -> impl Strategy<Value = IntMatrix> {
    (1..=max_dim).prop_flat_map(|n| {
        prop::collection::vec(prop::collection::vec(-6i64..=6, n), n)
            .prop_map(move |rows| IntMatrix::from_i64_rows(n, &rows))
    })
}

#[derive(Clone, Debug)]
enum Move {
    AddRow(usize, usize, i64),
    AddCol(usize, usize, i64),
    SwapRows(usize, usize),
    SwapCols(usize, usize),
    NegRow(usize),
    NegCol(usize),
}

fn moves() -> impl Strategy<Value = Vec<Move>> {
    let m = prop_oneof![
        (0..8usize, 0..8usize, -5i64..=5).prop_map(|(a, b, k)| Move::AddRow(a, b, k)),
        (0..8usize, 0..8usize, -5i64..=5).prop_map(|(a, b, k)| Move::AddCol(a, b, k)),
        (0..8usize, 0..8usize).prop_map(|(a, b)| Move::SwapRows(a, b)),
        (0..8usize, 0..8usize).prop_map(|(a, b)| Move::SwapCols(a, b)),
        (0..8usize).prop_map(Move::NegRow),
        (0..8usize).prop_map(Move::NegCol),
    ];
    prop::collection::vec(m, 0..12)
}

fn apply(m: &mut IntMatrix, mv: &Move) {
    let (r, c) = (m.rows(), m.cols());
    match *mv {
        Move::AddRow(a, b, k) if a % r != b % r => m.add_row_multiple(a % r, b % r, &BigInt::from(k)),
        Move::AddCol(a, b, k) if a % c != b % c => m.add_col_multiple(a % c, b % c, &BigInt::from(k)),
        Move::SwapRows(a, b) => m.swap_rows(a % r, b % r),
        Move::SwapCols(a, b) => m.swap_cols(a % c, b % c),
        Move::NegRow(a) => m.negate_row(a % r),
        Move::NegCol(a) => m.negate_col(a % c),
        _ => {}
    }
}

/// Direct product of cyclic groups as a multiplication table, elements in mixed radix.
fn abelian_table(moduli: &[usize]) -> FinGroup {
    let order: usize = moduli.iter().product();
    let digits = |mut x: usize| {
        moduli
            .iter()
            .map(|&d| {
                let v = x % d;
                x /= d;
                v
            })
            .collect::<Vec<_>>()
    };
    let pack = |v: &[usize]| v.iter().zip(moduli).rev().fold(0, |acc, (&x, &d)| acc * d + x);
    let mut table = Vec::with_capacity(order * order);
    for a in 0..order {
        for b in 0..order {
            let (x, y) = (digits(a), digits(b));
            let s: Vec<usize> = x.iter().zip(&y).zip(moduli).map(|((p, q), d)| (p + q) % d).collect();
            table.push(pack(&s) as u32);
        }
    }
    FinGroup::from_table(order, table, 0).unwrap()
}

proptest! {
    #[test]
    fn smith_decomposition_verifies(m in matrix(5)) {
        let s = smith_normal_form(&m);
        prop_assert!(s.verify(&m));
        let d = s.d.diagonal();
        for w in d.windows(2) {
            if !w[0].is_zero() {
                prop_assert_eq!(&w[1] % &w[0], BigInt::from(0));
            }
        }
    }

    #[test]
    fn cokernel_ignores_unimodular_moves(m in matrix(4), mv in moves()) {
        let mut n = m.clone();
        for x in &mv {
            apply(&mut n, x);
        }
        prop_assert_eq!(cokernel(&m), cokernel(&n));
    }

    #[test]
    fn square_cokernel_order_is_the_determinant(sq in square(4)) {
        let det = sq.determinant().abs();
        let q: AbPresentation = cokernel(&sq);
        if det.is_zero() {
            prop_assert!(!q.is_finite());
        } else {
            prop_assert_eq!(q.order(), Some(det));
        }
    }

    #[test]
    fn abelian_tables_abelianize_to_themselves(moduli in prop::collection::vec(1usize..=5, 1..=3)) {
        let g = abelian_table(&moduli);
        let expected = AbPresentation::cyclic_sum(&moduli.iter().map(|&d| BigInt::from(d)).collect::<Vec<_>>());
        prop_assert_eq!(g.abelianization(), expected);
    }
}
