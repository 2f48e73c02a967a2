use motspec_core::resolution::{arc_oracle_zeta, iterated, monomial_datum, nearby, product_nearby, zeta};
use motspec_core::{box_product, Cover, Functions, MonClass, ResolutionDatum};

fn exponent_tuples(d: usize, max: u64) -> Vec<Vec<u64>> {
    if d == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for t in exponent_tuples(d - 1, max) {
        for a in 1..=max {
            let mut v = t.clone();
            v.push(a);
            out.push(v);
        }
    }
    out
}

#[test]
fn monomial_zeta_matches_arc_counting() {
    for d in 1..=3 {
        for a in exponent_tuples(d, 4) {
            let datum = monomial_datum(&a).unwrap();
            let engine = zeta(&datum).unwrap().expand(20);
            assert_eq!(engine, arc_oracle_zeta(&a, 20).unwrap(), "exponents {a:?}");
        }
    }
}

/// A synthetic normal-crossing datum with a chain of exceptional curves.
fn chain_datum() -> ResolutionDatum {
    let mut d = ResolutionDatum::new(2, true, Functions::G).unwrap();
    d.add_component("A", 3, 4, 2).unwrap();
    d.add_component("B", 0, 6, 3).unwrap();
    d.add_component("C", 0, 2, 1).unwrap();
    d.add_component("S", 0, 1, 1).unwrap();
    let p1_minus = |k: i64| &MonClass::lefschetz(0) - &MonClass::one(0).scale(k - 1);
    d.add_stratum(&["A"], p1_minus(1), Cover::Split).unwrap();
    d.add_stratum(&["B"], p1_minus(3), Cover::Split).unwrap();
    d.add_stratum(&["C"], p1_minus(1), Cover::Split).unwrap();
    d.add_stratum(&["A", "B"], MonClass::one(0), Cover::Split).unwrap();
    d.add_stratum(&["B", "C"], MonClass::one(0), Cover::Split).unwrap();
    d.add_stratum(&["B", "S"], MonClass::one(0), Cover::Split).unwrap();
    d
}

#[test]
fn nearby_is_minus_limit_of_zeta() {
    let mut data: Vec<ResolutionDatum> = exponent_tuples(2, 4).iter().map(|a| monomial_datum(a).unwrap()).collect();
    data.push(chain_datum());
    for d in &data {
        assert_eq!(nearby(d).unwrap(), -&zeta(d).unwrap().limit());
    }
}

fn product_joint(a: &[u64], b: &[u64]) -> ResolutionDatum {
    let mut d = ResolutionDatum::new(a.len() + b.len(), true, Functions::FG).unwrap();
    let mut ids = Vec::new();
    for (i, &x) in a.iter().enumerate() {
        ids.push(format!("x{i}"));
        d.add_component(&ids[ids.len() - 1], x, 0, 1).unwrap();
    }
    for (i, &y) in b.iter().enumerate() {
        ids.push(format!("y{i}"));
        d.add_component(&ids[ids.len() - 1], 0, y, 1).unwrap();
    }
    let refs: Vec<&str> = ids.iter().map(String::as_str).collect();
    d.add_stratum(&refs, MonClass::one(0), Cover::Split).unwrap();
    d
}

#[test]
fn product_type_iterated_cycles() {
    for a in exponent_tuples(1, 4).into_iter().chain(exponent_tuples(2, 3)) {
        for b in exponent_tuples(1, 4).into_iter().chain(exponent_tuples(2, 2)) {
            let joint = product_joint(&a, &b);
            let f = monomial_datum(&a).unwrap();
            let g = monomial_datum(&b).unwrap();
            let expect = box_product(&nearby(&f).unwrap(), &nearby(&g).unwrap());
            assert_eq!(iterated(&joint).unwrap(), expect, "f exponents {a:?}, g exponents {b:?}");
            assert_eq!(product_nearby(&f, &g).unwrap(), expect);
        }
    }
}

#[test]
fn joint_strata_have_rank_two() {
    let mut d = ResolutionDatum::new(2, true, Functions::FG).unwrap();
    assert!(d.add_component("x", 0, 0, 1).is_err());
    for a in exponent_tuples(2, 3) {
        for b in exponent_tuples(1, 3) {
            let joint = product_joint(&a, &b);
            for s in joint.strata() {
                let comps = joint.components();
                let f_row: Vec<i64> = s.components.iter().map(|&i| comps[i].n_f as i64).collect();
                let g_row: Vec<i64> = s.components.iter().map(|&i| comps[i].n_g as i64).collect();
                let m = motspec_core::ExponentMatrix::from_rows(vec![f_row, g_row]).unwrap();
                assert_eq!(m.rank(), 2);
            }
        }
    }
    d.add_component("x", 2, 0, 1).unwrap();
    d.add_component("y", 0, 2, 1).unwrap();
    d.add_stratum(&["x", "y"], MonClass::one(0), Cover::Split).unwrap();
    assert!(iterated(&d).is_ok());
}
