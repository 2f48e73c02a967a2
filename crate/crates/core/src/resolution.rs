//! Zeta functions, nearby and vanishing cycles, iterated vanishing cycles and
//! thresholds computed from log-resolution data.

use crate::classes::{box_product, fiber_class, ExponentMatrix, MonClass};
use crate::datum::{Cover, Functions, ResolutionDatum, Stratum};
use crate::error::CoreError;
use crate::oracle::fiber::brute_fiber_class;
use crate::series::{RationalSeries, SeriesTerm, TPolynomial};
use crate::spectra::Frac;

fn sign(n: usize) -> i64 {
    if n.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn stratum_error(d: &ResolutionDatum, s: &Stratum, reason: impl Into<String>) -> CoreError {
    CoreError::Stratum {
        stratum: d.stratum_label(s),
        reason: reason.into(),
    }
}

fn labels(d: &ResolutionDatum, idx: &[usize]) -> Vec<String> {
    idx.iter().map(|&i| d.components()[i].id.clone()).collect()
}

/// `[U_I]` for the single function `g`.
fn cover_class_g(d: &ResolutionDatum, s: &Stratum) -> Result<MonClass, CoreError> {
    match (&s.cover, d.functions()) {
        (Cover::Explicit(c), Functions::G) => Ok(c.clone()),
        (Cover::Explicit(_), Functions::FG) => Err(stratum_error(
            d,
            s,
            "explicit two-function cover cannot be used for a single-function computation",
        )),
        (Cover::Split, _) => {
            let row: Vec<i64> = s.components.iter().map(|&i| d.components()[i].n_g as i64).collect();
            let m = ExponentMatrix::new(vec![row], labels(d, &s.components))?;
            let fiber = fiber_class(&m).map_err(|e| stratum_error(d, s, e.to_string()))?;
            Ok(&s.base_class.extend_arity(1) * &fiber)
        }
    }
}

/// Checks the zeta-function preconditions; `Ok(false)` means `g = 0`.
fn check_g_datum(d: &ResolutionDatum) -> Result<bool, CoreError> {
    if d.components().iter().all(|c| c.n_g == 0) {
        return Ok(false);
    }
    if let Some(c) = d.components().iter().find(|c| c.n_g == 0) {
        return Err(CoreError::Datum(format!(
            "component {:?} has Ng = 0; boundary components are only supported by nearby_open",
            c.id
        )));
    }
    Ok(true)
}

/// `Z_g(T) = sum_I [U_I] prod_{i in I} p_{-nu_i, N_i}`.
pub fn zeta(d: &ResolutionDatum) -> Result<RationalSeries, CoreError> {
    let mut z = RationalSeries::zero(1);
    if !check_g_datum(d)? {
        return Ok(z);
    }
    for s in d.strata() {
        let factors = s
            .components
            .iter()
            .map(|&i| {
                let c = &d.components()[i];
                (-(c.nu as i64), c.n_g)
            })
            .collect();
        z.push(SeriesTerm::new(cover_class_g(d, s)?, factors)?)?;
    }
    Ok(z)
}

/// `S_g = -sum_I (-1)^|I| [U_I]`.
pub fn nearby(d: &ResolutionDatum) -> Result<MonClass, CoreError> {
    let mut out = MonClass::zero(1);
    if !check_g_datum(d)? {
        return Ok(out);
    }
    for s in d.strata() {
        out = &out + &cover_class_g(d, s)?.scale(-sign(s.components.len()));
    }
    Ok(out)
}

/// `S_{g,U} = -sum_{I ⊆ C} (-1)^|I| [U_I]` with `C = { N_g > 0 }`.
pub fn nearby_open(d: &ResolutionDatum) -> Result<MonClass, CoreError> {
    let mut out = MonClass::zero(1);
    for s in d.strata() {
        if s.components.iter().all(|&i| d.components()[i].n_g > 0) {
            out = &out + &cover_class_g(d, s)?.scale(-sign(s.components.len()));
        }
    }
    Ok(out)
}

/// `S^phi = (-1)^(d-1) (S_g - 1)` for data local over a point.
pub fn vanishing(d: &ResolutionDatum) -> Result<MonClass, CoreError> {
    if !d.is_local() {
        return Err(CoreError::Datum(
            "vanishing cycles need a local datum (strata restricted over the base point)".into(),
        ));
    }
    let s = &nearby(d)? - &MonClass::one(1);
    Ok(s.scale(sign(d.dimension() - 1)))
}

/// `sup N_f / N_g` over components with `N_g > 0`; for local data only
/// components appearing in some stratum count.
pub fn gamma_threshold(d: &ResolutionDatum) -> Result<Frac, CoreError> {
    let mut seen = vec![!d.is_local(); d.components().len()];
    for s in d.strata() {
        for &i in &s.components {
            seen[i] = true;
        }
    }
    d.components()
        .iter()
        .zip(&seen)
        .filter(|(c, &s)| s && c.n_g > 0)
        .map(|(c, _)| Frac::new(c.n_f as i64, c.n_g as i64))
        .max()
        .ok_or(CoreError::EmptyThresholdDomain)
}

fn require_joint(d: &ResolutionDatum) -> Result<(), CoreError> {
    if d.functions() != Functions::FG {
        return Err(CoreError::Datum("functions: a joint datum must declare [\"f\", \"g\"]".into()));
    }
    Ok(())
}

/// Splits a stratum into `K = I \ C` and `J = I ∩ C`.
fn split_kj(d: &ResolutionDatum, s: &Stratum) -> (Vec<usize>, Vec<usize>) {
    s.components.iter().partition(|&&i| d.components()[i].n_g == 0)
}

/// `[U_{K,J}]` for the pair `(f, g)`.
fn cover_class_fg(d: &ResolutionDatum, s: &Stratum) -> Result<MonClass, CoreError> {
    match &s.cover {
        Cover::Explicit(c) => Ok(c.clone()),
        Cover::Split => {
            let comps = &d.components();
            let f_row: Vec<i64> = s.components.iter().map(|&i| comps[i].n_f as i64).collect();
            let g_row: Vec<i64> = s.components.iter().map(|&i| comps[i].n_g as i64).collect();
            let m = ExponentMatrix::new(vec![f_row, g_row], labels(d, &s.components))?;
            let fiber = fiber_class(&m).map_err(|e| {
                stratum_error(d, s, format!("{e}; supply an explicit cover for this stratum"))
            })?;
            Ok(&s.base_class.extend_arity(2) * &fiber)
        }
    }
}

/// `S_g(S_f) = sum over I with K, J nonempty of (-1)^|I| [U_{K,J}]`.
pub fn iterated(d: &ResolutionDatum) -> Result<MonClass, CoreError> {
    require_joint(d)?;
    let mut out = MonClass::zero(2);
    for s in d.strata() {
        let (k, j) = split_kj(d, s);
        if k.is_empty() || j.is_empty() {
            continue;
        }
        if let Some(&i) = k.iter().find(|&&i| d.components()[i].n_f == 0) {
            return Err(stratum_error(
                d,
                s,
                format!("component {:?} has Nf = Ng = 0", d.components()[i].id),
            ));
        }
        out = &out + &cover_class_fg(d, s)?.scale(sign(s.components.len()));
    }
    Ok(out)
}

/// `S_g([X_0(f)])` with trivial first monodromy, computed from the strata.
/// Assumes the resolution is an isomorphism over `X_0(f) \ X_0(g)`.
pub fn iterated_trivial_part(d: &ResolutionDatum) -> Result<MonClass, CoreError> {
    require_joint(d)?;
    let mut out = MonClass::zero(2);
    for s in d.strata() {
        let (k, j) = split_kj(d, s);
        if k.is_empty() || j.is_empty() {
            continue;
        }
        if let Cover::Explicit(_) = s.cover {
            return Err(stratum_error(
                d,
                s,
                "the trivial-monodromy part cannot be separated from an explicit cover",
            ));
        }
        let g_row: Vec<i64> = j.iter().map(|&i| d.components()[i].n_g as i64).collect();
        let fiber = fiber_class(&ExponentMatrix::new(vec![g_row], labels(d, &j))?)?;
        let term = &s.base_class.extend_arity(2) * &fiber.insert_trivial_slot(0);
        out = &out + &term.scale(-sign(j.len()));
    }
    Ok(out)
}

/// `S_g(S_f^phi) = (-1)^(d-1) (S_g(S_f) - S_g([G_m x X_0(f)]))` for local
/// joint data.
pub fn iterated_vanishing(d: &ResolutionDatum) -> Result<MonClass, CoreError> {
    if !d.is_local() {
        return Err(CoreError::Datum("iterated vanishing cycles need a local joint datum".into()));
    }
    let diff = &iterated(d)? - &iterated_trivial_part(d)?;
    Ok(diff.scale(sign(d.dimension() - 1)))
}

/// Identity-resolution datum of `prod x_i^{a_i}` on affine space, local at 0.
pub fn monomial_datum(exponents: &[u64]) -> Result<ResolutionDatum, CoreError> {
    if exponents.is_empty() || exponents.contains(&0) {
        return Err(CoreError::NonPositive("monomial exponents must be at least 1"));
    }
    let mut d = ResolutionDatum::new(exponents.len(), true, Functions::G)?;
    let ids: Vec<String> = (1..=exponents.len()).map(|i| format!("x{i}")).collect();
    for (id, &a) in ids.iter().zip(exponents) {
        d.add_component(id, 0, a, 1)?;
    }
    let refs: Vec<&str> = ids.iter().map(String::as_str).collect();
    d.add_stratum(&refs, MonClass::one(0), Cover::Split)?;
    Ok(d)
}

/// Jet-counting realization of `sum_n [X_n] L^(-n d) T^n` for
/// `g = prod x_i^{a_i}` at the origin, up to `T^n_max`: arcs with
/// `ord x_i = k_i >= 1` contribute `[fiber of leading coefficients] L^(-sum k_i)`.
pub fn arc_oracle_zeta(exponents: &[u64], n_max: usize) -> Result<TPolynomial, CoreError> {
    if exponents.is_empty() || exponents.contains(&0) {
        return Err(CoreError::NonPositive("monomial exponents must be at least 1"));
    }
    let leading = brute_fiber_class(&[exponents.iter().map(|&a| a as i64).collect()])?;
    let mut out = TPolynomial::zero(1, n_max);
    let d = exponents.len();
    let mut k = vec![1u64; d];
    loop {
        let order: u64 = exponents.iter().zip(&k).map(|(a, k)| a * k).sum();
        if order as usize <= n_max {
            let total: u64 = k.iter().sum();
            out.add_to(order as usize, &leading.shift_l(-(total as i64)));
        }
        // next k with bounded order
        let mut i = 0;
        loop {
            if i == d {
                return Ok(out);
            }
            k[i] += 1;
            let order: u64 = exponents.iter().zip(&k).map(|(a, k)| a * k).sum();
            if order as usize <= n_max {
                break;
            }
            k[i] = 1;
            i += 1;
        }
    }
}

/// `S_{f_1} ⊠ S_{f_2}`: the product-type expectation for iterated cycles.
pub fn product_nearby(f_datum: &ResolutionDatum, g_datum: &ResolutionDatum) -> Result<MonClass, CoreError> {
    Ok(box_product(&nearby(f_datum)?, &nearby(g_datum)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectra::QmodZ;

    fn roots(a: i64, from: i64) -> MonClass {
        let mut c = MonClass::zero(1);
        for k in from..a {
            c.add_monomial(vec![QmodZ::from_ratio(k, a)], 0, 0, 1);
        }
        c
    }

    #[test]
    fn monomial_zeta() {
        for a in 1..=6u64 {
            let d = monomial_datum(&[a]).unwrap();
            let z = zeta(&d).unwrap();
            assert_eq!(z.terms().len(), 1);
            assert_eq!(z.terms()[0].factors(), &[(-1, a)]);
            assert_eq!(z.terms()[0].coefficient(), &roots(a as i64, 0));
            let e = z.expand(a as usize);
            assert_eq!(e.coefficient(a as usize), &roots(a as i64, 0).shift_l(-1));
            assert_eq!(nearby(&d).unwrap(), roots(a as i64, 0));
            assert_eq!(vanishing(&d).unwrap(), roots(a as i64, 1));
            assert_eq!(nearby(&d).unwrap(), -&z.limit());
        }
    }

    #[test]
    fn smooth_point() {
        let d = monomial_datum(&[1]).unwrap();
        assert_eq!(nearby(&d).unwrap(), MonClass::one(1));
        assert!(vanishing(&d).unwrap().is_zero());
    }

    #[test]
    fn zero_function() {
        let mut d = ResolutionDatum::new(1, true, Functions::G).unwrap();
        d.add_component("F", 2, 0, 1).unwrap();
        d.add_stratum(&["F"], MonClass::one(0), Cover::Split).unwrap();
        assert!(zeta(&d).unwrap().terms().is_empty());
        assert!(nearby(&d).unwrap().is_zero());
    }

    #[test]
    fn boundary_components_need_nearby_open() {
        let mut d = ResolutionDatum::new(2, true, Functions::G).unwrap();
        d.add_component("E", 0, 2, 1).unwrap();
        d.add_component("F", 1, 0, 1).unwrap();
        d.add_stratum(&["E"], MonClass::lefschetz(0), Cover::Split).unwrap();
        d.add_stratum(&["E", "F"], MonClass::one(0), Cover::Split).unwrap();
        assert!(zeta(&d).is_err());
        let open = nearby_open(&d).unwrap();
        assert_eq!(open, &MonClass::lefschetz(1) * &roots(2, 0));
    }

    #[test]
    fn thresholds() {
        let mut d = ResolutionDatum::new(2, true, Functions::FG).unwrap();
        d.add_component("a", 3, 1, 1).unwrap();
        d.add_component("b", 1, 1, 1).unwrap();
        d.add_stratum(&["a", "b"], MonClass::one(0), Cover::Split).unwrap();
        assert_eq!(gamma_threshold(&d).unwrap(), Frac::from_int(3));
        let mut e = ResolutionDatum::new(1, true, Functions::FG).unwrap();
        e.add_component("a", 2, 0, 1).unwrap();
        e.add_stratum(&["a"], MonClass::one(0), Cover::Split).unwrap();
        assert_eq!(gamma_threshold(&e), Err(CoreError::EmptyThresholdDomain));
    }

    fn joint(nx: (u64, u64), ny: (u64, u64)) -> ResolutionDatum {
        let mut d = ResolutionDatum::new(2, true, Functions::FG).unwrap();
        d.add_component("x", nx.0, nx.1, 1).unwrap();
        d.add_component("y", ny.0, ny.1, 1).unwrap();
        d.add_stratum(&["x", "y"], MonClass::one(0), Cover::Split).unwrap();
        d
    }

    #[test]
    fn iterated_examples() {
        assert_eq!(iterated(&joint((1, 0), (0, 1))).unwrap(), MonClass::one(2));
        let d = joint((2, 0), (1, 1));
        assert_eq!(
            iterated(&d).unwrap(),
            &MonClass::mono2((0, 1), (0, 1), 0, 0) + &MonClass::mono2((1, 2), (1, 2), 0, 0)
        );
        assert_eq!(iterated_trivial_part(&d).unwrap(), MonClass::one(2));
        assert_eq!(iterated_vanishing(&d).unwrap(), -&MonClass::mono2((1, 2), (1, 2), 0, 0));
        assert_eq!(gamma_threshold(&d).unwrap(), Frac::one());
        let mut only_b = ResolutionDatum::new(1, true, Functions::FG).unwrap();
        only_b.add_component("x", 2, 0, 1).unwrap();
        only_b.add_stratum(&["x"], MonClass::one(0), Cover::Split).unwrap();
        assert!(iterated(&only_b).unwrap().is_zero());
    }

    #[test]
    fn arc_oracle_examples() {
        let e = arc_oracle_zeta(&[3], 3).unwrap();
        assert_eq!(e.coefficient(3), &roots(3, 0).shift_l(-1));
        assert!(e.coefficient(2).is_zero());
        let e = arc_oracle_zeta(&[1, 1], 2).unwrap();
        let l_minus_1 = &MonClass::lefschetz(1) - &MonClass::one(1);
        assert_eq!(e.coefficient(2), &l_minus_1.shift_l(-2));
        assert!(e.coefficient(1).is_zero());
    }
}
