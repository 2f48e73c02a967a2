//! Exact rationals, residues mod Z and the spectrum rings `Z[Q]` and
//! `Z[(Q/Z)^2 x Z]`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::CoreError;

/// An exact rational number, always in lowest terms with positive denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Frac(BigRational);

impl Frac {
    /// Builds `num/den`. Panics if `den == 0`.
    pub fn new(num: i64, den: i64) -> Frac {
        assert!(den != 0, "zero denominator");
        Frac(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_big(num: BigInt, den: BigInt) -> Result<Frac, CoreError> {
        if den.is_zero() {
            return Err(CoreError::ZeroDenominator);
        }
        Ok(Frac(BigRational::new(num, den)))
    }

    pub fn from_int(n: i64) -> Frac {
        Frac(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_bigint(n: BigInt) -> Frac {
        Frac(BigRational::from_integer(n))
    }

    pub fn zero() -> Frac {
        Frac(BigRational::zero())
    }

    pub fn one() -> Frac {
        Frac(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn floor(&self) -> BigInt {
        self.0.floor().to_integer()
    }

    /// `self - floor(self)`, in `[0, 1)`.
    pub fn fract(&self) -> Frac {
        Frac(&self.0 - self.0.floor())
    }

    pub fn abs(&self) -> Frac {
        Frac(self.0.abs())
    }

    pub fn recip(&self) -> Frac {
        Frac(self.0.recip())
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    pub fn as_ratio(&self) -> &BigRational {
        &self.0
    }

    pub fn from_ratio(r: BigRational) -> Frac {
        Frac(r)
    }
}

impl fmt::Display for Frac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Frac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Frac {
    type Err = CoreError;

    fn from_str(s: &str) -> Result<Frac, CoreError> {
        let bad = || CoreError::Parse(format!("not a rational number: {s:?}"));
        let s = s.trim();
        match s.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                Frac::from_big(n, d)
            }
            None => Ok(Frac::from_bigint(s.parse().map_err(|_| bad())?)),
        }
    }
}

impl From<i64> for Frac {
    fn from(n: i64) -> Frac {
        Frac::from_int(n)
    }
}

macro_rules! frac_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<&Frac> for &Frac {
            type Output = Frac;
            fn $m(self, rhs: &Frac) -> Frac {
                Frac((&self.0).$m(&rhs.0))
            }
        }
        impl $tr<Frac> for Frac {
            type Output = Frac;
            fn $m(self, rhs: Frac) -> Frac {
                Frac(self.0.$m(rhs.0))
            }
        }
        impl $tr<&Frac> for Frac {
            type Output = Frac;
            fn $m(self, rhs: &Frac) -> Frac {
                Frac(self.0.$m(&rhs.0))
            }
        }
    };
}
frac_binop!(Add, add);
frac_binop!(Sub, sub);
frac_binop!(Mul, mul);
frac_binop!(Div, div);

impl Neg for Frac {
    type Output = Frac;
    fn neg(self) -> Frac {
        Frac(-self.0)
    }
}

impl Neg for &Frac {
    type Output = Frac;
    fn neg(self) -> Frac {
        Frac(-&self.0)
    }
}

/// An element of `Q/Z`, stored as its representative in `[0, 1)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct QmodZ(Frac);

impl QmodZ {
    pub fn new(x: &Frac) -> QmodZ {
        QmodZ(x.fract())
    }

    /// `num/den mod 1`.
    pub fn from_ratio(num: i64, den: i64) -> QmodZ {
        QmodZ::new(&Frac::new(num, den))
    }

    pub fn zero() -> QmodZ {
        QmodZ(Frac::zero())
    }

    /// The section `s : Q/Z -> [0,1)`.
    pub fn s(&self) -> &Frac {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// Multiplication by an integer.
    pub fn times(&self, n: i64) -> QmodZ {
        QmodZ::new(&(&self.0 * &Frac::from_int(n)))
    }
}

impl fmt::Display for QmodZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for QmodZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl Add<&QmodZ> for &QmodZ {
    type Output = QmodZ;
    fn add(self, rhs: &QmodZ) -> QmodZ {
        QmodZ::new(&(&self.0 + &rhs.0))
    }
}

impl Sub<&QmodZ> for &QmodZ {
    type Output = QmodZ;
    fn sub(self, rhs: &QmodZ) -> QmodZ {
        QmodZ::new(&(&self.0 - &rhs.0))
    }
}

impl Neg for &QmodZ {
    type Output = QmodZ;
    fn neg(self) -> QmodZ {
        QmodZ::new(&-&self.0)
    }
}

fn insert_term<K: Ord>(map: &mut BTreeMap<K, i64>, key: K, mult: i64) {
    if mult == 0 {
        return;
    }
    let entry = map.entry(key);
    match entry {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(mult);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            *o.get_mut() += mult;
            if *o.get() == 0 {
                o.remove();
            }
        }
    }
}

pub(crate) fn add_term<K: Ord>(map: &mut BTreeMap<K, i64>, key: K, mult: i64) {
    insert_term(map, key, mult)
}

/// An element of the group ring `Z[Q]`, written as a fractional Laurent
/// polynomial in `t`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct SpectrumPoly {
    terms: BTreeMap<Frac, i64>,
}

impl SpectrumPoly {
    pub fn zero() -> SpectrumPoly {
        SpectrumPoly::default()
    }

    pub fn one() -> SpectrumPoly {
        SpectrumPoly::monomial(Frac::zero(), 1)
    }

    /// `mult * t^exp`.
    pub fn monomial(exp: Frac, mult: i64) -> SpectrumPoly {
        let mut p = SpectrumPoly::zero();
        p.add_monomial(exp, mult);
        p
    }

    /// `t^(num/den)`.
    pub fn t(num: i64, den: i64) -> SpectrumPoly {
        SpectrumPoly::monomial(Frac::new(num, den), 1)
    }

    pub fn add_monomial(&mut self, exp: Frac, mult: i64) {
        insert_term(&mut self.terms, exp, mult);
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&Frac, i64)> {
        self.terms.iter().map(|(k, v)| (k, *v))
    }

    pub fn coefficient(&self, exp: &Frac) -> i64 {
        self.terms.get(exp).copied().unwrap_or(0)
    }

    pub fn scale(&self, c: i64) -> SpectrumPoly {
        if c == 0 {
            return SpectrumPoly::zero();
        }
        SpectrumPoly {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    /// Multiplies every exponent by `c` (the substitution `t -> t^c`).
    pub fn substitute_power(&self, c: &Frac) -> SpectrumPoly {
        let mut out = SpectrumPoly::zero();
        for (k, v) in &self.terms {
            out.add_monomial(k * c, *v);
        }
        out
    }

    /// Sum of multiplicities (the value at `t = 1`).
    pub fn total_multiplicity(&self) -> i64 {
        self.terms.values().sum()
    }
}

impl Add<&SpectrumPoly> for &SpectrumPoly {
    type Output = SpectrumPoly;
    fn add(self, rhs: &SpectrumPoly) -> SpectrumPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&SpectrumPoly> for SpectrumPoly {
    fn add_assign(&mut self, rhs: &SpectrumPoly) {
        for (k, v) in &rhs.terms {
            insert_term(&mut self.terms, k.clone(), *v);
        }
    }
}

impl Sub<&SpectrumPoly> for &SpectrumPoly {
    type Output = SpectrumPoly;
    fn sub(self, rhs: &SpectrumPoly) -> SpectrumPoly {
        let mut out = self.clone();
        for (k, v) in &rhs.terms {
            insert_term(&mut out.terms, k.clone(), -*v);
        }
        out
    }
}

impl Neg for &SpectrumPoly {
    type Output = SpectrumPoly;
    fn neg(self) -> SpectrumPoly {
        self.scale(-1)
    }
}

impl Mul<&SpectrumPoly> for &SpectrumPoly {
    type Output = SpectrumPoly;
    fn mul(self, rhs: &SpectrumPoly) -> SpectrumPoly {
        let mut out = SpectrumPoly::zero();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                insert_term(&mut out.terms, a + b, x * y);
            }
        }
        out
    }
}

macro_rules! owned_ops {
    ($t:ty) => {
        impl Add for $t {
            type Output = $t;
            fn add(self, rhs: $t) -> $t {
                &self + &rhs
            }
        }
        impl Sub for $t {
            type Output = $t;
            fn sub(self, rhs: $t) -> $t {
                &self - &rhs
            }
        }
        impl Mul for $t {
            type Output = $t;
            fn mul(self, rhs: $t) -> $t {
                &self * &rhs
            }
        }
        impl Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                -&self
            }
        }
    };
}
owned_ops!(SpectrumPoly);
owned_ops!(BiSpectrumPoly);

fn write_mult(f: &mut fmt::Formatter<'_>, first: bool, mult: i64) -> fmt::Result {
    let mag = mult.unsigned_abs();
    match (first, mult < 0) {
        (true, false) => {}
        (true, true) => write!(f, "-")?,
        (false, false) => write!(f, " + ")?,
        (false, true) => write!(f, " - ")?,
    }
    if mag != 1 {
        write!(f, "{mag}*")?;
    }
    Ok(())
}

/// Renders terms in ascending order as `<mult>*t^(<num>/<den>)`, e.g.
/// `t^(5/6) + t^(7/6)`; the zero polynomial renders as `0`.
impl fmt::Display for SpectrumPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (exp, mult)) in self.terms.iter().enumerate() {
            write_mult(f, i == 0, *mult)?;
            write!(f, "t^({exp})")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SpectrumPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Monomial key `t^a u^b v^c` of `Z[(Q/Z)^2 x Z]`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct BiKey {
    pub a: QmodZ,
    pub b: QmodZ,
    pub c: i64,
}

/// An element of `Z[(Q/Z)^2 x Z]`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BiSpectrumPoly {
    terms: BTreeMap<BiKey, i64>,
}

impl BiSpectrumPoly {
    pub fn zero() -> BiSpectrumPoly {
        BiSpectrumPoly::default()
    }

    pub fn one() -> BiSpectrumPoly {
        BiSpectrumPoly::monomial(QmodZ::zero(), QmodZ::zero(), 0, 1)
    }

    pub fn monomial(a: QmodZ, b: QmodZ, c: i64, mult: i64) -> BiSpectrumPoly {
        let mut p = BiSpectrumPoly::zero();
        p.add_monomial(a, b, c, mult);
        p
    }

    pub fn add_monomial(&mut self, a: QmodZ, b: QmodZ, c: i64, mult: i64) {
        insert_term(&mut self.terms, BiKey { a, b, c }, mult);
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BiKey, i64)> {
        self.terms.iter().map(|(k, v)| (k, *v))
    }

    pub fn scale(&self, c: i64) -> BiSpectrumPoly {
        if c == 0 {
            return BiSpectrumPoly::zero();
        }
        BiSpectrumPoly {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }
}

impl Add<&BiSpectrumPoly> for &BiSpectrumPoly {
    type Output = BiSpectrumPoly;
    fn add(self, rhs: &BiSpectrumPoly) -> BiSpectrumPoly {
        let mut out = self.clone();
        for (k, v) in &rhs.terms {
            insert_term(&mut out.terms, k.clone(), *v);
        }
        out
    }
}

impl Sub<&BiSpectrumPoly> for &BiSpectrumPoly {
    type Output = BiSpectrumPoly;
    fn sub(self, rhs: &BiSpectrumPoly) -> BiSpectrumPoly {
        let mut out = self.clone();
        for (k, v) in &rhs.terms {
            insert_term(&mut out.terms, k.clone(), -*v);
        }
        out
    }
}

impl Neg for &BiSpectrumPoly {
    type Output = BiSpectrumPoly;
    fn neg(self) -> BiSpectrumPoly {
        self.scale(-1)
    }
}

impl Mul<&BiSpectrumPoly> for &BiSpectrumPoly {
    type Output = BiSpectrumPoly;
    fn mul(self, rhs: &BiSpectrumPoly) -> BiSpectrumPoly {
        let mut out = BiSpectrumPoly::zero();
        for (x, m) in &self.terms {
            for (y, n) in &rhs.terms {
                let key = BiKey {
                    a: &x.a + &y.a,
                    b: &x.b + &y.b,
                    c: x.c + y.c,
                };
                insert_term(&mut out.terms, key, m * n);
            }
        }
        out
    }
}

impl fmt::Display for BiSpectrumPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, mult)) in self.terms.iter().enumerate() {
            write_mult(f, i == 0, *mult)?;
            write!(f, "t^({})*u^({})*v^({})", k.a, k.b, k.c)?;
        }
        Ok(())
    }
}

impl fmt::Debug for BiSpectrumPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `t^a u^b v^c -> t^(s(a) + s(b) + c)`.
pub fn delta(x: &BiSpectrumPoly) -> SpectrumPoly {
    let mut out = SpectrumPoly::zero();
    for (k, m) in x.terms() {
        out.add_monomial(k.a.s() + k.b.s() + Frac::from_int(k.c), m);
    }
    out
}

/// `t^a u^b v^c -> t^(s(a) + s(b)/n + c)`.
pub fn delta_n(x: &BiSpectrumPoly, n: u64) -> SpectrumPoly {
    assert!(n >= 1, "delta_n needs n >= 1");
    let n = Frac::from_bigint(BigInt::from(n));
    let mut out = SpectrumPoly::zero();
    for (k, m) in x.terms() {
        out.add_monomial(k.a.s() + &(k.b.s() / &n) + Frac::from_int(k.c), m);
    }
    out
}

/// `(1 - t) / (1 - t^(1/m)) = sum_{i<m} t^(i/m)`.
pub fn geometric_factor(m: u64) -> SpectrumPoly {
    assert!(m >= 1, "geometric_factor needs m >= 1");
    let den = BigInt::from(m);
    let mut out = SpectrumPoly::zero();
    for i in 0..m {
        out.add_monomial(Frac(BigRational::new(BigInt::from(i), den.clone())), 1);
    }
    out
}

/// `sum over (alpha, beta) of t^(alpha + beta/(m n)) * geometric_factor(m n)`.
pub fn steenbrink_rhs(pairs: &[(Frac, Frac)], m: u64, n: u64) -> Result<SpectrumPoly, CoreError> {
    if m == 0 || n == 0 {
        return Err(CoreError::NonPositive("m and N must be at least 1"));
    }
    let mn = m.checked_mul(n).ok_or(CoreError::NonPositive("m*N overflows"))?;
    let geo = geometric_factor(mn);
    let mn_frac = Frac::from_bigint(BigInt::from(mn));
    let mut shifts = SpectrumPoly::zero();
    for (alpha, beta) in pairs {
        if beta.is_negative() || *beta >= Frac::one() {
            return Err(CoreError::ResidueOutOfRange(beta.clone()));
        }
        shifts.add_monomial(alpha + &(beta / &mn_frac), 1);
    }
    Ok(&shifts * &geo)
}

/// Least common multiple of the exponent denominators (1 for zero).
pub fn common_denominator(p: &SpectrumPoly) -> BigInt {
    p.terms().fold(BigInt::one(), |acc, (e, _)| acc.lcm(e.denom()))
}
