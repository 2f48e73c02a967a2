//! Rational series generated by `p_{e,j}(T) = L^e T^j / (1 - L^e T^j)` with
//! monodromic coefficients, their limit as `T -> infinity`, and truncations.

use std::collections::BTreeMap;
use std::fmt;

use crate::classes::MonClass;
use crate::error::CoreError;

/// `coefficient * prod p_{e,j}` over a multiset of factors `(e, j)`, `j >= 1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SeriesTerm {
    coefficient: MonClass,
    factors: Vec<(i64, u64)>,
}

impl SeriesTerm {
    pub fn new(coefficient: MonClass, mut factors: Vec<(i64, u64)>) -> Result<SeriesTerm, CoreError> {
        if factors.iter().any(|&(_, j)| j == 0) {
            return Err(CoreError::NonPositive("series factors need j >= 1"));
        }
        factors.sort_unstable();
        Ok(SeriesTerm { coefficient, factors })
    }

    pub fn coefficient(&self) -> &MonClass {
        &self.coefficient
    }

    /// Sorted factor multiset.
    pub fn factors(&self) -> &[(i64, u64)] {
        &self.factors
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalSeries {
    arity: usize,
    terms: Vec<SeriesTerm>,
}

impl RationalSeries {
    pub fn zero(arity: usize) -> RationalSeries {
        RationalSeries {
            arity,
            terms: Vec::new(),
        }
    }

    pub fn constant(c: MonClass) -> RationalSeries {
        RationalSeries {
            arity: c.arity(),
            terms: vec![SeriesTerm {
                coefficient: c,
                factors: Vec::new(),
            }],
        }
    }

    /// The single generator `p_{e,j}` with unit coefficient.
    pub fn generator(arity: usize, e: i64, j: u64) -> Result<RationalSeries, CoreError> {
        let term = SeriesTerm::new(MonClass::one(arity), vec![(e, j)])?;
        Ok(RationalSeries { arity, terms: vec![term] })
    }

    pub fn push(&mut self, term: SeriesTerm) -> Result<(), CoreError> {
        if term.coefficient.arity() != self.arity {
            return Err(CoreError::ArityMismatch {
                left: self.arity,
                right: term.coefficient.arity(),
            });
        }
        self.terms.push(term);
        Ok(())
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn terms(&self) -> &[SeriesTerm] {
        &self.terms
    }

    pub fn checked_add(&self, other: &RationalSeries) -> Result<RationalSeries, CoreError> {
        if self.arity != other.arity {
            return Err(CoreError::ArityMismatch {
                left: self.arity,
                right: other.arity,
            });
        }
        let mut out = self.clone();
        out.terms.extend(other.terms.iter().cloned());
        Ok(out)
    }

    pub fn checked_mul(&self, other: &RationalSeries) -> Result<RationalSeries, CoreError> {
        if self.arity != other.arity {
            return Err(CoreError::ArityMismatch {
                left: self.arity,
                right: other.arity,
            });
        }
        let mut out = RationalSeries::zero(self.arity);
        for a in &self.terms {
            for b in &other.terms {
                let mut factors = a.factors.clone();
                factors.extend_from_slice(&b.factors);
                factors.sort_unstable();
                out.terms.push(SeriesTerm {
                    coefficient: &a.coefficient * &b.coefficient,
                    factors,
                });
            }
        }
        Ok(out)
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale_by(&self, c: &MonClass) -> Result<RationalSeries, CoreError> {
        let mut out = RationalSeries::zero(self.arity);
        for t in &self.terms {
            out.terms.push(SeriesTerm {
                coefficient: t.coefficient.checked_mul(c)?,
                factors: t.factors.clone(),
            });
        }
        Ok(out)
    }

    /// Merges terms with equal factor multisets and drops zero coefficients.
    pub fn collect(&self) -> RationalSeries {
        let mut by_factors: BTreeMap<Vec<(i64, u64)>, MonClass> = BTreeMap::new();
        for t in &self.terms {
            let slot = by_factors
                .entry(t.factors.clone())
                .or_insert_with(|| MonClass::zero(self.arity));
            *slot = &*slot + &t.coefficient;
        }
        RationalSeries {
            arity: self.arity,
            terms: by_factors
                .into_iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|(factors, coefficient)| SeriesTerm { coefficient, factors })
                .collect(),
        }
    }

    /// `sum coefficient * (-1)^(number of factors)`.
    pub fn limit(&self) -> MonClass {
        let mut out = MonClass::zero(self.arity);
        for t in &self.terms {
            let sign = if t.factors.len() % 2 == 0 { 1 } else { -1 };
            out = &out + &t.coefficient.scale(sign);
        }
        out
    }

    /// Truncated expansion up to and including `T^n`.
    pub fn expand(&self, n: usize) -> TPolynomial {
        let mut out = TPolynomial::zero(self.arity, n);
        for t in &self.terms {
            let mut acc = LaurentSeries::one(n);
            for &(e, j) in &t.factors {
                acc = acc.mul(&LaurentSeries::generator(e, j, n));
            }
            for (deg, lpoly) in acc.coeffs.iter().enumerate() {
                for (&k, &mult) in lpoly {
                    let piece = t.coefficient.shift_l(k).scale(mult);
                    out.coeffs[deg] = &out.coeffs[deg] + &piece;
                }
            }
        }
        out
    }
}

impl fmt::Display for RationalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({})", t.coefficient)?;
            for (e, j) in &t.factors {
                write!(f, " * p({e},{j})")?;
            }
        }
        Ok(())
    }
}

/// Truncated power series in `T` with coefficients in `Z[L, L^-1]`,
/// each stored as exponent-of-L to multiplicity.
struct LaurentSeries {
    coeffs: Vec<BTreeMap<i64, i64>>,
}

impl LaurentSeries {
    fn one(n: usize) -> LaurentSeries {
        let mut coeffs = vec![BTreeMap::new(); n + 1];
        coeffs[0].insert(0, 1);
        LaurentSeries { coeffs }
    }

    fn generator(e: i64, j: u64, n: usize) -> LaurentSeries {
        let mut coeffs = vec![BTreeMap::new(); n + 1];
        let j = j as usize;
        let mut m = 1usize;
        while j * m <= n {
            coeffs[j * m].insert(e * m as i64, 1);
            m += 1;
        }
        LaurentSeries { coeffs }
    }

    fn mul(&self, other: &LaurentSeries) -> LaurentSeries {
        let n = self.coeffs.len() - 1;
        let mut coeffs: Vec<BTreeMap<i64, i64>> = vec![BTreeMap::new(); n + 1];
        for (a, pa) in self.coeffs.iter().enumerate() {
            if pa.is_empty() {
                continue;
            }
            for (b, pb) in other.coeffs.iter().enumerate().take(n + 1 - a) {
                for (&ka, &ma) in pa {
                    for (&kb, &mb) in pb {
                        let slot = coeffs[a + b].entry(ka + kb).or_insert(0);
                        *slot += ma * mb;
                    }
                }
            }
        }
        for c in coeffs.iter_mut() {
            c.retain(|_, v| *v != 0);
        }
        LaurentSeries { coeffs }
    }
}

/// A polynomial in `T` of bounded degree with [`MonClass`] coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TPolynomial {
    arity: usize,
    coeffs: Vec<MonClass>,
}

impl TPolynomial {
    /// Zero polynomial holding coefficients of `T^0 ..= T^n`.
    pub fn zero(arity: usize, n: usize) -> TPolynomial {
        TPolynomial {
            arity,
            coeffs: vec![MonClass::zero(arity); n + 1],
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn degree_bound(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coefficient(&self, deg: usize) -> &MonClass {
        &self.coeffs[deg]
    }

    pub fn coefficients(&self) -> &[MonClass] {
        &self.coeffs
    }

    pub fn add_to(&mut self, deg: usize, c: &MonClass) {
        self.coeffs[deg] = &self.coeffs[deg] + c;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Product truncated at the smaller degree bound.
    pub fn mul_truncated(&self, other: &TPolynomial) -> TPolynomial {
        let n = self.degree_bound().min(other.degree_bound());
        let mut out = TPolynomial::zero(self.arity, n);
        for a in 0..=n {
            if self.coeffs[a].is_zero() {
                continue;
            }
            for b in 0..=n - a {
                if !other.coeffs[b].is_zero() {
                    out.coeffs[a + b] = &out.coeffs[a + b] + &(&self.coeffs[a] * &other.coeffs[b]);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &TPolynomial) -> TPolynomial {
        let n = self.degree_bound().min(other.degree_bound());
        TPolynomial {
            arity: self.arity,
            coeffs: (0..=n).map(|i| &self.coeffs[i] + &other.coeffs[i]).collect(),
        }
    }
}

impl fmt::Display for TPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match deg {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*T")?,
                _ => write!(f, "({c})*T^{deg}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(n: i64) -> MonClass {
        MonClass::lefschetz_pow(1, n)
    }

    #[test]
    fn ops_examples() {
        let p = RationalSeries::generator(1, -1, 2).unwrap();
        let sum = p.checked_add(&p).unwrap().collect();
        assert_eq!(sum.terms().len(), 1);
        assert_eq!(sum.terms()[0].coefficient(), &MonClass::one(1).scale(2));
        let q = RationalSeries::generator(1, 0, 1).unwrap();
        let sq = q.checked_mul(&q).unwrap();
        assert_eq!(sq.terms()[0].factors(), &[(0, 1), (0, 1)]);
        let one = RationalSeries::constant(MonClass::one(1));
        assert_eq!(p.checked_mul(&one).unwrap(), p);
        assert!(p.checked_add(&RationalSeries::zero(2)).is_err());
    }

    #[test]
    fn limit_examples() {
        let a = RationalSeries::generator(1, -1, 2).unwrap();
        let b = RationalSeries::generator(1, 0, 3).unwrap();
        assert_eq!(a.checked_mul(&b).unwrap().limit(), MonClass::one(1));
        assert_eq!(a.limit(), MonClass::one(1).scale(-1));
        let c = MonClass::mono1(1, 3, 2, 0);
        assert_eq!(RationalSeries::constant(c.clone()).limit(), c);
    }

    #[test]
    fn expand_examples() {
        let a = RationalSeries::generator(1, -1, 2).unwrap().expand(5);
        let mut expect = TPolynomial::zero(1, 5);
        expect.add_to(2, &l(-1));
        expect.add_to(4, &l(-2));
        assert_eq!(a, expect);

        let c = MonClass::mono1(1, 2, 0, 0);
        let e = RationalSeries::constant(c.clone()).expand(4);
        assert_eq!(e.coefficient(0), &c);
        assert!(e.coefficients()[1..].iter().all(|x| x.is_zero()));

        let q = RationalSeries::generator(1, 0, 1).unwrap();
        let sq = q.checked_mul(&q).unwrap().expand(3);
        assert!(sq.coefficient(1).is_zero());
        assert_eq!(sq.coefficient(2), &MonClass::one(1));
        assert_eq!(sq.coefficient(3), &MonClass::one(1).scale(2));
    }
}
