//! Thom-Sebastiani sums and quasi-homogeneous spectra.

use motspec_core::{convolve, hsp1, CoreError, MonClass, QmodZ, SpectrumPoly};

/// Vanishing-cycle class of `f_1 + f_2` in separate variables.
pub fn thom_sebastiani(phi_f: &MonClass, phi_g: &MonClass) -> Result<MonClass, CoreError> {
    convolve(phi_f, phi_g)
}

/// `sum_{k=1}^{a-1} (k/a, 0, 0)`, the vanishing class of `x^a`.
pub fn one_variable_vanishing(a: u64) -> Result<MonClass, CoreError> {
    if a == 0 {
        return Err(CoreError::NonPositive("exponents must be at least 1"));
    }
    let mut out = MonClass::zero(1);
    for k in 1..a {
        out.add_monomial(vec![QmodZ::from_ratio(k as i64, a as i64)], 0, 0, 1);
    }
    Ok(out)
}

/// Vanishing class of `x_1^a_1 + ... + x_d^a_d`.
pub fn quasihomog_class(exponents: &[u64]) -> Result<MonClass, CoreError> {
    let (first, rest) = exponents
        .split_first()
        .ok_or(CoreError::NonPositive("at least one exponent is needed"))?;
    let mut acc = one_variable_vanishing(*first)?;
    for &a in rest {
        acc = thom_sebastiani(&acc, &one_variable_vanishing(a)?)?;
    }
    Ok(acc)
}

pub fn quasihomog_spectrum(exponents: &[u64]) -> Result<SpectrumPoly, CoreError> {
    hsp1(&quasihomog_class(exponents)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sums() {
        assert_eq!(quasihomog_class(&[2, 2]).unwrap(), MonClass::mono1(0, 1, 1, 1));
        let cusp = &MonClass::mono1(5, 6, 0, 1) + &MonClass::mono1(1, 6, 1, 0);
        assert_eq!(quasihomog_class(&[2, 3]).unwrap(), cusp);
        assert_eq!(quasihomog_spectrum(&[2, 3]).unwrap(), &SpectrumPoly::t(5, 6) + &SpectrumPoly::t(7, 6));
        assert!(thom_sebastiani(&MonClass::zero(1), &cusp).unwrap().is_zero());
        assert!(quasihomog_spectrum(&[]).is_err());
    }
}
