use motspec_core::{
    cone_limit, cone_series_truncated, delta_membership, euler_char, gamma_cone, Cone, LinForm, MonClass, RationalSeries,
    Relation, SeriesTerm,
};
use motspec_core::cones::gamma_cap_m;
use proptest::prelude::*;

fn random_cone(dim: usize, forms: Vec<(Vec<i64>, u8)>) -> Cone {
    let mut c = Cone::orthant(dim).unwrap();
    for (f, r) in forms {
        let rel = match r % 3 {
            0 => Relation::Ge,
            1 => Relation::Gt,
            _ => Relation::Eq,
        };
        c.constrain(LinForm(f), rel).unwrap();
    }
    c
}

type ConeInput = (usize, Vec<(Vec<i64>, u8)>, Vec<i64>);

fn cone_input() -> impl Strategy<Value = ConeInput> {
    (1usize..=4).prop_flat_map(|d| {
        (
            Just(d),
            prop::collection::vec((prop::collection::vec(-3i64..=3, d), 0u8..3), 0..3),
            prop::collection::vec(-3i64..=3, d),
        )
    })
}

proptest! {
    #[test]
    fn euler_char_additive_under_splitting((d, forms, h) in cone_input()) {
        let c = random_cone(d, forms);
        let neg: Vec<i64> = h.iter().map(|x| -x).collect();
        let pos = c.clone().with(LinForm(h.clone()), Relation::Gt).unwrap();
        let wall = c.clone().with(LinForm(h), Relation::Eq).unwrap();
        let below = c.clone().with(LinForm(neg), Relation::Gt).unwrap();
        prop_assert_eq!(euler_char(&c), euler_char(&pos) + euler_char(&wall) + euler_char(&below));
    }
}

/// Unimodular generators in `N^d` obtained from the identity by column additions.
fn unimodular(d: usize, ops: &[(usize, usize)]) -> Vec<Vec<i64>> {
    let mut g: Vec<Vec<i64>> = (0..d).map(|i| (0..d).map(|j| i64::from(i == j)).collect()).collect();
    for &(a, b) in ops {
        let (a, b) = (a % d, b % d);
        if a != b {
            let src = g[b].clone();
            for (x, y) in g[a].iter_mut().zip(src) {
                *x += y;
            }
        }
    }
    g
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]
    #[test]
    fn unimodular_closed_form(
        d in 1usize..=4,
        ops in prop::collection::vec((0usize..4, 0usize..4), 0..3),
        ell in prop::collection::vec(1i64..=3, 4),
        nu in prop::collection::vec(1i64..=3, 4),
    ) {
        let gens = unimodular(d, &ops);
        let cone = Cone::open_simplicial(&gens).unwrap();
        let ell = LinForm(ell[..d].to_vec());
        let nu = LinForm(nu[..d].to_vec());
        let factors: Vec<(i64, u64)> = gens.iter().map(|g| (-nu.eval(g), ell.eval(g) as u64)).collect();
        let mut closed = RationalSeries::zero(0);
        closed.push(SeriesTerm::new(MonClass::one(0), factors).unwrap()).unwrap();
        prop_assert_eq!(cone_series_truncated(&cone, &ell, &nu, 25).unwrap(), closed.expand(25));
        let sign = if d % 2 == 0 { 1 } else { -1 };
        prop_assert_eq!(closed.limit(), MonClass::one(0).scale(sign));
        prop_assert_eq!(cone_limit(&cone, &ell, &nu).unwrap(), sign);
        prop_assert_eq!(euler_char(&cone), sign);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]
    #[test]
    fn inequality_cones_have_limit_zero(
        n in 2usize..=4,
        split in 1usize..=3,
        a in prop::collection::vec(1i64..=5, 4),
        ell in prop::collection::vec(1i64..=3, 4),
    ) {
        prop_assume!(split < n);
        // sum_{i < split} a_i x_i <= sum_{i >= split} a_i x_i
        let form: Vec<i64> = (0..n).map(|i| if i < split { -a[i] } else { a[i] }).collect();
        let cone = Cone::orthant(n).unwrap().with(LinForm(form), Relation::Ge).unwrap();
        let ell = LinForm(ell[..n].to_vec());
        prop_assert_eq!(cone_limit(&cone, &ell, &ell).unwrap(), 0);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]
    #[test]
    fn truncated_zeta_cone_limits(
        n in 1usize..=3,
        k_size in 0usize..=2,
        n_f in prop::collection::vec(1i64..=4, 3),
        n_g in prop::collection::vec(1i64..=4, 3),
        extra in 0i64..=2,
    ) {
        prop_assume!(k_size < n || k_size == 0);
        // components before k_size lie outside C (n_g = 0)
        let n_g: Vec<i64> = (0..n).map(|i| if i < k_size { 0 } else { n_g[i] }).collect();
        let n_f = n_f[..n].to_vec();
        let gamma0 = (k_size..n).map(|i| (n_f[i] + n_g[i] - 1) / n_g[i]).max().unwrap();
        let gamma = gamma0 + extra;
        let form: Vec<i64> = (0..n).map(|i| gamma * n_g[i] - n_f[i]).collect();
        let cone = Cone::orthant(n).unwrap().with(LinForm(form.clone()), Relation::Ge).unwrap();
        let ell = LinForm(n_g.clone());
        let nu = LinForm(vec![1; n]);
        let expect = if k_size == 0 { if n % 2 == 0 { 1 } else { -1 } } else { 0 };
        prop_assert_eq!(cone_limit(&cone, &ell, &nu).unwrap(), expect);
        // truncation against the defining sum over k_i >= 1
        let t = cone_series_truncated(&cone, &ell, &nu, 12).unwrap();
        let mut brute = motspec_core::TPolynomial::zero(0, 12);
        let mut k = vec![1i64; n];
        loop {
            let deg: i64 = k.iter().zip(&n_g).map(|(a, b)| a * b).sum();
            let inside: i64 = k.iter().zip(&form).map(|(a, b)| a * b).sum();
            if inside >= 0 && (0..=12).contains(&deg) {
                brute.add_to(deg as usize, &MonClass::lefschetz_pow(0, -k.iter().sum::<i64>()));
            }
            let mut i = 0;
            while i < n {
                k[i] += 1;
                if k[i] <= 12 * (gamma + 1) {
                    break;
                }
                k[i] = 1;
                i += 1;
            }
            if i == n {
                break;
            }
        }
        prop_assert_eq!(t, brute);
    }
}

proptest! {
    #[test]
    fn monomial_gamma_cones(n in 1usize..=4, rows in prop::collection::vec(prop::collection::vec(0i64..=3, 4), 0..3)) {
        let rows: Vec<Vec<i64>> = rows.into_iter().map(|r| r[..n].to_vec()).collect();
        let (nonempty, dim) = gamma_cone(&rows, n).unwrap();
        let vanish = rows.iter().all(|r| r.iter().all(|&x| x == 0));
        prop_assert_eq!(nonempty, vanish);
        if vanish {
            prop_assert_eq!(dim, n);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]
    #[test]
    fn delta_membership_matches_euler_route(
        n in 1usize..=3,
        rows in prop::collection::vec(prop::collection::vec(-2i64..=2, 3), 0..2),
        n_f in prop::collection::vec(0i64..=3, 3),
        n_g in prop::collection::vec(0i64..=3, 3),
    ) {
        let rows: Vec<Vec<i64>> = rows.into_iter().map(|r| r[..n].to_vec()).collect();
        let (n_f, n_g) = (n_f[..n].to_vec(), n_g[..n].to_vec());
        prop_assume!(n_g.iter().any(|&g| g != 0));
        let member = delta_membership(&rows, &n_f, &n_g).unwrap();
        let (nonempty, dim) = gamma_cone(&rows, n).unwrap();
        let chi = euler_char(&gamma_cap_m(&rows, &n_f, &n_g, 1_000_000).unwrap());
        let full = if dim % 2 == 0 { 1 } else { -1 };
        if member {
            prop_assert!(nonempty);
            prop_assert_eq!(chi, full);
        } else {
            prop_assert_eq!(chi, 0);
        }
    }
}
