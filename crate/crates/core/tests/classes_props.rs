mod common;

use common::class;
use motspec_core::oracle::fiber::brute_fiber_class;
use motspec_core::{fiber_class, fiber_class_with_solutions, hsp1, ExponentMatrix, Frac, MonClass, SpectrumPoly};
use proptest::prelude::*;

proptest! {
    #[test]
    fn class_ring_axioms((k, x, y, z) in (0usize..=3).prop_flat_map(|k| (Just(k), class(k, 12), class(k, 12), class(k, 12)))) {
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&x * &MonClass::one(k), x.clone());
        prop_assert!((&x - &x).is_zero());
        let l = MonClass::lefschetz(k);
        let l_inv = MonClass::lefschetz_pow(k, -1);
        prop_assert_eq!(&l * &l_inv, MonClass::one(k));
        prop_assert_eq!(&l * &x, &x * &l);
        prop_assert_eq!(x.shift_l(1), &l * &x);
    }

    #[test]
    fn hsp1_additive_and_lefschetz(x in class(1, 12), y in class(1, 12)) {
        prop_assert_eq!(hsp1(&(&x + &y)).unwrap(), &hsp1(&x).unwrap() + &hsp1(&y).unwrap());
        let lx = &MonClass::lefschetz(1) * &x;
        prop_assert_eq!(hsp1(&lx).unwrap(), &SpectrumPoly::t(1, 1) * &hsp1(&x).unwrap());
    }
}

fn det(a: &[Vec<Frac>]) -> Frac {
    if a.is_empty() {
        return Frac::one();
    }
    (0..a.len()).fold(Frac::zero(), |acc, j| {
        let minor: Vec<Vec<Frac>> = a[1..]
            .iter()
            .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, x)| x.clone()).collect())
            .collect();
        let term = &a[0][j] * &det(&minor);
        if j % 2 == 0 {
            &acc + &term
        } else {
            &acc - &term
        }
    })
}

/// Solutions of `M theta = e_i` supported on the columns `cols`, by Cramer.
fn cramer(rows: &[Vec<i64>], cols: &[usize]) -> Option<Vec<Vec<Frac>>> {
    let a: Vec<Vec<Frac>> = rows.iter().map(|r| cols.iter().map(|&c| Frac::from_int(r[c])).collect()).collect();
    let d = det(&a);
    if d.is_zero() {
        return None;
    }
    let m = rows[0].len();
    Some(
        (0..rows.len())
            .map(|i| {
                let mut theta = vec![Frac::zero(); m];
                for (slot, &c) in cols.iter().enumerate() {
                    let mut b = a.clone();
                    for (r, row) in b.iter_mut().enumerate() {
                        row[slot] = Frac::from_int(i64::from(r == i));
                    }
                    theta[c] = &det(&b) / &d;
                }
                theta
            })
            .collect(),
    )
}

fn subsets(m: usize, r: usize) -> Vec<Vec<usize>> {
    (0u32..1 << m)
        .filter(|s| s.count_ones() as usize == r)
        .map(|s| (0..m).filter(|&i| s >> i & 1 == 1).collect())
        .collect()
}

fn matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=4)
        .prop_flat_map(|m| (1usize..=m.min(3)).prop_map(move |r| (r, m)))
        .prop_flat_map(|(r, m)| prop::collection::vec(prop::collection::vec(-4i64..=4, m), r))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]
    #[test]
    fn fiber_class_independent_of_solutions(
        rows in matrix(),
        shifts in prop::collection::vec(-3i64..=3, 16),
        c in common::frac(5),
    ) {
        let Ok(m) = ExponentMatrix::from_rows(rows.clone()) else { return Ok(()) };
        let Ok(reference) = fiber_class(&m) else { return Ok(()) };
        let (r, n) = (rows.len(), rows[0].len());
        let sols: Vec<Vec<Vec<Frac>>> = subsets(n, r).iter().filter_map(|s| cramer(&rows, s)).collect();
        prop_assert!(!sols.is_empty());
        for (k, base) in sols.iter().enumerate() {
            // base + c (other - base) + s (third - base) is again a solution
            let other = &sols[(k + 1) % sols.len()];
            let third = &sols[(k + 2) % sols.len()];
            let s = Frac::from_int(shifts[k % shifts.len()]);
            let thetas: Vec<Vec<Frac>> = (0..r)
                .map(|i| {
                    (0..n)
                        .map(|j| {
                            let a = &base[i][j];
                            a + &(&c * &(&other[i][j] - a)) + &s * &(&third[i][j] - a)
                        })
                        .collect()
                })
                .collect();
            prop_assert_eq!(&fiber_class_with_solutions(&m, &thetas).unwrap(), &reference);
        }
    }
}

fn all_matrices(r: usize, m: usize, f: &mut impl FnMut(Vec<Vec<i64>>)) {
    let cells = r * m;
    let total = 5usize.pow(cells as u32);
    for code in 0..total {
        let mut c = code;
        let rows = (0..r)
            .map(|_| {
                (0..m)
                    .map(|_| {
                        let v = (c % 5) as i64;
                        c /= 5;
                        v
                    })
                    .collect()
            })
            .collect();
        f(rows);
    }
}

#[test]
fn fiber_class_matches_enumeration() {
    let mut checked = 0;
    for (r, m) in [(1, 1), (1, 2), (1, 3), (2, 2), (2, 3)] {
        all_matrices(r, m, &mut |rows| {
            let fast = ExponentMatrix::from_rows(rows.clone()).and_then(|x| fiber_class(&x));
            let slow = brute_fiber_class(&rows);
            match (fast, slow) {
                (Ok(a), Ok(b)) => {
                    assert_eq!(a, b, "{rows:?}");
                    checked += 1;
                }
                (Err(_), Err(_)) => {}
                (a, b) => panic!("{rows:?}: {a:?} vs {b:?}"),
            }
        });
    }
    assert!(checked > 1000);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]
    #[test]
    fn square_fiber_class_matches_enumeration(rows in prop::collection::vec(prop::collection::vec(0i64..=4, 3), 3)) {
        let fast = ExponentMatrix::from_rows(rows.clone()).and_then(|x| fiber_class(&x));
        let slow = brute_fiber_class(&rows);
        match (fast, slow) {
            (Ok(a), Ok(b)) => prop_assert_eq!(a, b),
            (Err(_), Err(_)) => {}
            (a, b) => prop_assert!(false, "{:?}: {:?} vs {:?}", rows, a, b),
        }
    }
}
