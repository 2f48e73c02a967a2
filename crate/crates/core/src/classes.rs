//! Monodromic Hodge classes: virtual Hodge classes graded by `k` commuting
//! finite-order monodromies, and the torus-fiber classes of monomial maps.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::error::CoreError;
use crate::snf::{smith, to_big};
use crate::spectra::{add_term, BiSpectrumPoly, Frac, QmodZ, SpectrumPoly};

/// Basis monomial: eigenvalues `exp(2 pi i a_k)` and Hodge bidegree `(p, q)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct MonKey {
    pub eigen: Vec<QmodZ>,
    pub p: i64,
    pub q: i64,
}

impl MonKey {
    pub fn new(eigen: Vec<QmodZ>, p: i64, q: i64) -> MonKey {
        MonKey { eigen, p, q }
    }
}

/// A finitely supported integer combination of [`MonKey`]s of a fixed arity.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonClass {
    arity: usize,
    terms: BTreeMap<MonKey, i64>,
}

impl MonClass {
    pub fn zero(arity: usize) -> MonClass {
        MonClass {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(arity: usize) -> MonClass {
        MonClass::monomial(vec![QmodZ::zero(); arity], 0, 0, 1)
    }

    /// The Lefschetz class `L`.
    pub fn lefschetz(arity: usize) -> MonClass {
        MonClass::monomial(vec![QmodZ::zero(); arity], 1, 1, 1)
    }

    /// `L^n` for any integer `n`.
    pub fn lefschetz_pow(arity: usize, n: i64) -> MonClass {
        MonClass::monomial(vec![QmodZ::zero(); arity], n, n, 1)
    }

    pub fn monomial(eigen: Vec<QmodZ>, p: i64, q: i64, mult: i64) -> MonClass {
        let mut c = MonClass::zero(eigen.len());
        c.add_monomial(eigen, p, q, mult);
        c
    }

    /// Arity-1 monomial `(num/den, p, q)`.
    pub fn mono1(num: i64, den: i64, p: i64, q: i64) -> MonClass {
        MonClass::monomial(vec![QmodZ::from_ratio(num, den)], p, q, 1)
    }

    /// Arity-2 monomial `((a, b), p, q)` with `a = an/ad`, `b = bn/bd`.
    pub fn mono2(a: (i64, i64), b: (i64, i64), p: i64, q: i64) -> MonClass {
        MonClass::monomial(vec![QmodZ::from_ratio(a.0, a.1), QmodZ::from_ratio(b.0, b.1)], p, q, 1)
    }

    /// Panics if the eigenvalue tuple has the wrong length.
    pub fn add_monomial(&mut self, eigen: Vec<QmodZ>, p: i64, q: i64, mult: i64) {
        assert_eq!(eigen.len(), self.arity, "eigenvalue tuple length must equal the arity");
        add_term(&mut self.terms, MonKey { eigen, p, q }, mult);
    }

    pub fn add_key(&mut self, key: MonKey, mult: i64) {
        assert_eq!(key.eigen.len(), self.arity, "eigenvalue tuple length must equal the arity");
        add_term(&mut self.terms, key, mult);
    }

    pub fn arity(&self) -> usize {
        self.arity
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

    pub fn terms(&self) -> impl Iterator<Item = (&MonKey, i64)> {
        self.terms.iter().map(|(k, v)| (k, *v))
    }

    pub fn coefficient(&self, key: &MonKey) -> i64 {
        self.terms.get(key).copied().unwrap_or(0)
    }

    pub fn scale(&self, c: i64) -> MonClass {
        let mut out = MonClass::zero(self.arity);
        if c != 0 {
            for (k, v) in &self.terms {
                out.terms.insert(k.clone(), v * c);
            }
        }
        out
    }

    /// Multiplication by `L^n`.
    pub fn shift_l(&self, n: i64) -> MonClass {
        MonClass {
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (MonKey::new(k.eigen.clone(), k.p + n, k.q + n), *v))
                .collect(),
        }
    }

    /// Sum of multiplicities: the Euler characteristic `chi_c` of the class.
    pub fn euler_characteristic(&self) -> i64 {
        self.terms.values().sum()
    }

    fn check_arity(&self, other: &MonClass) -> Result<(), CoreError> {
        if self.arity != other.arity {
            return Err(CoreError::ArityMismatch {
                left: self.arity,
                right: other.arity,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &MonClass) -> Result<MonClass, CoreError> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (k, v) in &other.terms {
            add_term(&mut out.terms, k.clone(), *v);
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &MonClass) -> Result<MonClass, CoreError> {
        self.checked_add(&other.scale(-1))
    }

    pub fn checked_mul(&self, other: &MonClass) -> Result<MonClass, CoreError> {
        self.check_arity(other)?;
        let mut out = MonClass::zero(self.arity);
        for (x, m) in &self.terms {
            for (y, n) in &other.terms {
                let eigen = x.eigen.iter().zip(&y.eigen).map(|(a, b)| a + b).collect();
                add_term(&mut out.terms, MonKey::new(eigen, x.p + y.p, x.q + y.q), m * n);
            }
        }
        Ok(out)
    }

    /// `self^n` for `n >= 0`.
    pub fn pow(&self, n: u32) -> MonClass {
        let mut out = MonClass::one(self.arity);
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// Appends `extra` zero eigenvalues to every key.
    pub fn extend_arity(&self, extra: usize) -> MonClass {
        let mut out = MonClass::zero(self.arity + extra);
        for (k, v) in &self.terms {
            let mut eigen = k.eigen.clone();
            eigen.extend(std::iter::repeat_n(QmodZ::zero(), extra));
            out.terms.insert(MonKey::new(eigen, k.p, k.q), *v);
        }
        out
    }

    /// Inserts a zero eigenvalue at position `slot` (0-based) of every key.
    pub fn insert_trivial_slot(&self, slot: usize) -> MonClass {
        assert!(slot <= self.arity);
        let mut out = MonClass::zero(self.arity + 1);
        for (k, v) in &self.terms {
            let mut eigen = k.eigen.clone();
            eigen.insert(slot, QmodZ::zero());
            out.terms.insert(MonKey::new(eigen, k.p, k.q), *v);
        }
        out
    }

    /// Forgets all monodromies (arity becomes 0).
    pub fn forget_monodromy(&self) -> MonClass {
        let mut out = MonClass::zero(0);
        for (k, v) in &self.terms {
            add_term(&mut out.terms, MonKey::new(Vec::new(), k.p, k.q), *v);
        }
        out
    }
}

impl Add<&MonClass> for &MonClass {
    type Output = MonClass;
    /// Panics on arity mismatch; see [`MonClass::checked_add`].
    fn add(self, rhs: &MonClass) -> MonClass {
        self.checked_add(rhs).expect("MonClass addition")
    }
}

impl Sub<&MonClass> for &MonClass {
    type Output = MonClass;
    fn sub(self, rhs: &MonClass) -> MonClass {
        self.checked_sub(rhs).expect("MonClass subtraction")
    }
}

impl Mul<&MonClass> for &MonClass {
    type Output = MonClass;
    fn mul(self, rhs: &MonClass) -> MonClass {
        self.checked_mul(rhs).expect("MonClass multiplication")
    }
}

impl Neg for &MonClass {
    type Output = MonClass;
    fn neg(self) -> MonClass {
        self.scale(-1)
    }
}

impl Add for MonClass {
    type Output = MonClass;
    fn add(self, rhs: MonClass) -> MonClass {
        &self + &rhs
    }
}

impl Sub for MonClass {
    type Output = MonClass;
    fn sub(self, rhs: MonClass) -> MonClass {
        &self - &rhs
    }
}

impl Mul for MonClass {
    type Output = MonClass;
    fn mul(self, rhs: MonClass) -> MonClass {
        &self * &rhs
    }
}

impl Neg for MonClass {
    type Output = MonClass;
    fn neg(self) -> MonClass {
        self.scale(-1)
    }
}

/// Renders as e.g. `2*[1/2,1/3](1,0) - [0,0](0,0)`.
impl fmt::Display for MonClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, m)) in self.terms.iter().enumerate() {
            let mag = m.unsigned_abs();
            match (i == 0, *m < 0) {
                (true, false) => {}
                (true, true) => write!(f, "-")?,
                (false, false) => write!(f, " + ")?,
                (false, true) => write!(f, " - ")?,
            }
            if mag != 1 {
                write!(f, "{mag}*")?;
            }
            write!(f, "[")?;
            for (j, e) in k.eigen.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{e}")?;
            }
            write!(f, "]({},{})", k.p, k.q)?;
        }
        Ok(())
    }
}

impl fmt::Debug for MonClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MonClass<{}>({})", self.arity, self)
    }
}

/// External product: concatenates eigenvalue tuples and adds bidegrees.
pub fn box_product(x: &MonClass, y: &MonClass) -> MonClass {
    let mut out = MonClass::zero(x.arity + y.arity);
    for (a, m) in x.terms() {
        for (b, n) in y.terms() {
            let mut eigen = a.eigen.clone();
            eigen.extend(b.eigen.iter().cloned());
            add_term(&mut out.terms, MonKey::new(eigen, a.p + b.p, a.q + b.q), m * n);
        }
    }
    out
}

/// `(alpha, p, q) -> t^(alpha + p)`.
pub fn hsp1(x: &MonClass) -> Result<SpectrumPoly, CoreError> {
    if x.arity != 1 {
        return Err(CoreError::WrongArity {
            expected: 1,
            found: x.arity,
        });
    }
    let mut out = SpectrumPoly::zero();
    for (k, m) in x.terms() {
        out.add_monomial(k.eigen[0].s() + &Frac::from_int(k.p), m);
    }
    Ok(out)
}

/// `((alpha, beta), p, q) -> t^alpha u^beta v^p`.
pub fn hsp2(x: &MonClass) -> Result<BiSpectrumPoly, CoreError> {
    if x.arity != 2 {
        return Err(CoreError::WrongArity {
            expected: 2,
            found: x.arity,
        });
    }
    let mut out = BiSpectrumPoly::zero();
    for (k, m) in x.terms() {
        out.add_monomial(k.eigen[0].clone(), k.eigen[1].clone(), k.p, m);
    }
    Ok(out)
}

/// The Hodge spectrum of a vanishing-cycle class: `hsp1(x)`.
pub fn sp_from_class(x: &MonClass) -> Result<SpectrumPoly, CoreError> {
    hsp1(x)
}

/// An `r x m` integer matrix of multiplicities, columns labelled by component.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExponentMatrix {
    rows: Vec<Vec<i64>>,
    labels: Vec<String>,
}

impl ExponentMatrix {
    pub fn new(rows: Vec<Vec<i64>>, labels: Vec<String>) -> Result<ExponentMatrix, CoreError> {
        let m = labels.len();
        if rows.is_empty() {
            return Err(CoreError::BadMatrix("no rows".into()));
        }
        if rows.iter().any(|r| r.len() != m) {
            return Err(CoreError::BadMatrix("row length differs from the number of labels".into()));
        }
        Ok(ExponentMatrix { rows, labels })
    }

    /// Unlabelled matrix; columns are named `0, 1, ...`.
    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<ExponentMatrix, CoreError> {
        let m = rows.first().map_or(0, |r| r.len());
        ExponentMatrix::new(rows, (0..m).map(|i| i.to_string()).collect())
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.labels.len()
    }

    pub fn rank(&self) -> usize {
        smith(&to_big(&self.rows)).rank
    }
}

fn check_fiber_pre(m: &ExponentMatrix) -> Result<(), CoreError> {
    let rank = m.rank();
    if rank != m.nrows() {
        return Err(CoreError::RankDeficient {
            rank,
            rows: m.nrows(),
        });
    }
    for j in 0..m.ncols() {
        if m.rows.iter().all(|r| r[j] == 0) {
            return Err(CoreError::ZeroColumn(j));
        }
    }
    Ok(())
}

/// Class of `{ y in G_m^m : y^(row_i) = 1 }` with its `r` translation
/// monodromies, `(L - 1)^(m - r) * sum over torsion characters`.
#[allow(clippy::needless_range_loop)]
pub fn fiber_class(m: &ExponentMatrix) -> Result<MonClass, CoreError> {
    check_fiber_pre(m)?;
    let s = smith(&to_big(&m.rows));
    let r = m.nrows();
    // <chi_c, theta^(k)> = sum_i c_i U_ik / d_i for the canonical solutions.
    let pairing = |c: &[BigInt], k: usize| -> QmodZ {
        let mut acc = Frac::zero();
        for i in 0..r {
            acc = acc + Frac::from_big(&c[i] * &s.u[i][k], s.d[i].clone()).expect("nonzero invariant factor");
        }
        QmodZ::new(&acc)
    };
    Ok(assemble(m, &s.d, pairing))
}

/// As [`fiber_class`] but with caller-supplied rational solutions of
/// `M theta^(i) = e_i`, paired against explicit torsion representatives.
pub fn fiber_class_with_solutions(m: &ExponentMatrix, thetas: &[Vec<Frac>]) -> Result<MonClass, CoreError> {
    check_fiber_pre(m)?;
    let r = m.nrows();
    if thetas.len() != r {
        return Err(CoreError::BadMatrix("one solution per row is required".into()));
    }
    for (i, theta) in thetas.iter().enumerate() {
        if theta.len() != m.ncols() {
            return Err(CoreError::BadSolution(i));
        }
        for (row_idx, row) in m.rows.iter().enumerate() {
            let v = row
                .iter()
                .zip(theta)
                .fold(Frac::zero(), |acc, (&a, t)| acc + &(Frac::from_int(a) * t));
            let expect = if row_idx == i { Frac::one() } else { Frac::zero() };
            if v != expect {
                return Err(CoreError::BadSolution(i));
            }
        }
    }
    let s = smith(&to_big(&m.rows));
    let pairing = |c: &[BigInt], k: usize| -> QmodZ {
        // representative w = sum_i c_i * (row i of V^-1)
        let mut acc = Frac::zero();
        for (j, th) in thetas[k].iter().enumerate() {
            let w_j: BigInt = (0..r).map(|i| &c[i] * &s.v_inv[i][j]).sum();
            if !w_j.is_zero() {
                acc = acc + &(Frac::from_bigint(w_j) * th);
            }
        }
        QmodZ::new(&acc)
    };
    Ok(assemble(m, &s.d, pairing))
}

fn assemble(m: &ExponentMatrix, d: &[BigInt], pairing: impl Fn(&[BigInt], usize) -> QmodZ) -> MonClass {
    let r = m.nrows();
    let dims: Vec<u64> = d[..r].iter().map(|x| x.to_u64().expect("invariant factor fits in u64")).collect();
    let mut out = MonClass::zero(r);
    let mut c = vec![0u64; r];
    loop {
        let cb: Vec<BigInt> = c.iter().map(|&x| BigInt::from(x)).collect();
        let eigen = (0..r).map(|k| pairing(&cb, k)).collect();
        out.add_monomial(eigen, 0, 0, 1);
        // odometer over prod Z/d_i
        let mut i = 0;
        loop {
            if i == r {
                let torus_dim = (m.ncols() - r) as u32;
                let l_minus_one = &MonClass::lefschetz(r) - &MonClass::one(r);
                return &out * &l_minus_one.pow(torus_dim);
            }
            c[i] += 1;
            if c[i] < dims[i] {
                break;
            }
            c[i] = 0;
            i += 1;
        }
    }
}
