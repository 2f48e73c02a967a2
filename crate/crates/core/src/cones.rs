//! Rational polyhedral cones in the open positive orthant: truncated
//! lattice-point series, compact-support Euler characteristics, and the
//! `Gamma(I)` / `M_gamma` combinatorics of iterated vanishing cycles.

use std::fmt;

use crate::classes::MonClass;
use crate::error::CoreError;
use crate::lp::{fracs, System};
use crate::series::TPolynomial;
use crate::snf::{smith, to_big};
use crate::spectra::Frac;

pub const MAX_CONE_DIM: usize = 6;

/// An integral linear form on `Z^I`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LinForm(pub Vec<i64>);

impl LinForm {
    pub fn new(coeffs: Vec<i64>) -> LinForm {
        LinForm(coeffs)
    }

    pub fn eval(&self, k: &[i64]) -> i64 {
        self.0.iter().zip(k).map(|(a, x)| a * x).sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Relation {
    /// `form >= 0`
    Ge,
    /// `form > 0`
    Gt,
    /// `form = 0`
    Eq,
}

/// `{ x in R^n_{>0} : each constraint holds }`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Cone {
    dim: usize,
    constraints: Vec<(LinForm, Relation)>,
}

impl Cone {
    /// The open orthant `R^dim_{>0}`.
    pub fn orthant(dim: usize) -> Result<Cone, CoreError> {
        if dim > MAX_CONE_DIM {
            return Err(CoreError::DimensionTooLarge(dim));
        }
        Ok(Cone {
            dim,
            constraints: Vec::new(),
        })
    }

    pub fn with(mut self, form: LinForm, rel: Relation) -> Result<Cone, CoreError> {
        if form.len() != self.dim {
            return Err(CoreError::FormLength {
                expected: self.dim,
                found: form.len(),
            });
        }
        self.constraints.push((form, rel));
        Ok(self)
    }

    pub fn constrain(&mut self, form: LinForm, rel: Relation) -> Result<(), CoreError> {
        let c = std::mem::replace(self, Cone { dim: 0, constraints: Vec::new() });
        *self = c.with(form, rel)?;
        Ok(())
    }

    /// The open simplicial cone `{ sum lambda_i g_i : lambda_i > 0 }` for `dim`
    /// linearly independent generators, intersected with the open orthant.
    pub fn open_simplicial(generators: &[Vec<i64>]) -> Result<Cone, CoreError> {
        let d = generators.len();
        if generators.iter().any(|g| g.len() != d) {
            return Err(CoreError::BadMatrix("need dim generators of length dim".into()));
        }
        let inv = rational_inverse(generators).ok_or_else(|| CoreError::BadMatrix("generators are dependent".into()))?;
        // row i of G^{-1} (G has the generators as columns) is the i-th facet normal
        let mut cone = Cone::orthant(d)?;
        for row in inv {
            let den = row.iter().fold(num_bigint::BigInt::from(1), |acc, x| {
                num_integer::Integer::lcm(&acc, x.denom())
            });
            let scaled: Vec<i64> = row
                .iter()
                .map(|x| {
                    let v = x * &Frac::from_bigint(den.clone());
                    num_traits::ToPrimitive::to_i64(v.numer()).expect("facet normal fits in i64")
                })
                .collect();
            cone = cone.with(LinForm(scaled), Relation::Gt)?;
        }
        Ok(cone)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn constraints(&self) -> &[(LinForm, Relation)] {
        &self.constraints
    }

    pub fn contains(&self, x: &[i64]) -> bool {
        x.len() == self.dim
            && x.iter().all(|&v| v > 0)
            && self.constraints.iter().all(|(f, r)| {
                let v = f.eval(x);
                match r {
                    Relation::Ge => v >= 0,
                    Relation::Gt => v > 0,
                    Relation::Eq => v == 0,
                }
            })
    }

    fn unit(&self, i: usize) -> Vec<i64> {
        let mut e = vec![0; self.dim];
        e[i] = 1;
        e
    }

    /// Homogeneous strict inequalities rescaled to `>= 1`.
    fn open_system(&self) -> System {
        let mut s = System::new(self.dim);
        for i in 0..self.dim {
            s.ge_int(&self.unit(i), 1);
        }
        for (f, r) in &self.constraints {
            match r {
                Relation::Ge => s.ge_int(&f.0, 0),
                Relation::Gt => s.ge_int(&f.0, 1),
                Relation::Eq => s.eq_int(&f.0, 0),
            };
        }
        s
    }

    /// The closure (valid as a description of the closure when nonempty).
    fn closure_system(&self) -> System {
        let mut s = System::new(self.dim);
        for i in 0..self.dim {
            s.ge_int(&self.unit(i), 0);
        }
        for (f, r) in &self.constraints {
            match r {
                Relation::Ge | Relation::Gt => s.ge_int(&f.0, 0),
                Relation::Eq => s.eq_int(&f.0, 0),
            };
        }
        s
    }

    pub fn is_empty(&self) -> bool {
        self.dim == 0 || !self.open_system().feasible()
    }

    /// Checks that `form` is positive on the closure minus the origin.
    pub fn check_positive(&self, form: &LinForm) -> Result<(), CoreError> {
        if form.len() != self.dim {
            return Err(CoreError::FormLength {
                expected: self.dim,
                found: form.len(),
            });
        }
        if self.is_empty() {
            return Ok(());
        }
        let mut s = self.closure_system();
        s.ge_int(&form.0.iter().map(|x| -x).collect::<Vec<_>>(), 0);
        s.ge_int(&vec![1; self.dim], 1);
        if s.feasible() {
            return Err(CoreError::NotPositive(format!("{:?} vanishes or is negative on the cone", form.0)));
        }
        Ok(())
    }
}

impl fmt::Display for Cone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{x in R^{}_>0", self.dim)?;
        for (form, r) in &self.constraints {
            let op = match r {
                Relation::Ge => ">=",
                Relation::Gt => ">",
                Relation::Eq => "=",
            };
            write!(f, ", {:?}.x {op} 0", form.0)?;
        }
        write!(f, "}}")
    }
}

#[allow(clippy::needless_range_loop)]
fn rational_inverse(g: &[Vec<i64>]) -> Option<Vec<Vec<Frac>>> {
    let d = g.len();
    // columns of G are the generators; build G then invert by Gauss-Jordan
    let mut a: Vec<Vec<Frac>> = (0..d)
        .map(|i| {
            let mut row: Vec<Frac> = (0..d).map(|j| Frac::from_int(g[j][i])).collect();
            row.extend((0..d).map(|j| if i == j { Frac::one() } else { Frac::zero() }));
            row
        })
        .collect();
    for col in 0..d {
        let piv = (col..d).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        let p = a[col][col].clone();
        for x in a[col].iter_mut() {
            *x = &*x / &p;
        }
        for r in 0..d {
            if r != col && !a[r][col].is_zero() {
                let factor = a[r][col].clone();
                for c in 0..2 * d {
                    let t = &factor * &a[col][c];
                    a[r][c] = &a[r][c] - &t;
                }
            }
        }
    }
    Some(a.into_iter().map(|row| row[d..].to_vec()).collect())
}

pub(crate) fn int_rank(rows: &[Vec<i64>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    smith(&to_big(rows)).rank
}

/// Compact-support Euler characteristic: each `>= 0` constraint splits into
/// its `= 0` and `> 0` parts, and every nonempty relatively open piece
/// contributes `(-1)^dim`.
pub fn euler_char(cone: &Cone) -> i64 {
    let ge: Vec<usize> = (0..cone.constraints.len())
        .filter(|&i| cone.constraints[i].1 == Relation::Ge)
        .collect();
    let mut total = 0;
    for mask in 0u64..(1u64 << ge.len()) {
        let mut piece = cone.clone();
        for (bit, &idx) in ge.iter().enumerate() {
            piece.constraints[idx].1 = if mask >> bit & 1 == 1 { Relation::Eq } else { Relation::Gt };
        }
        if piece.is_empty() {
            continue;
        }
        let eqs: Vec<Vec<i64>> = piece
            .constraints
            .iter()
            .filter(|(_, r)| *r == Relation::Eq)
            .map(|(f, _)| f.0.clone())
            .collect();
        let dim = cone.dim - int_rank(&eqs);
        total += if dim.is_multiple_of(2) { 1 } else { -1 };
    }
    total
}

/// `sum over k in cone ∩ N^n_{>0}, ell(k) <= n of T^ell(k) L^(-nu(k))`.
pub fn cone_series_truncated(cone: &Cone, ell: &LinForm, nu: &LinForm, n: usize) -> Result<TPolynomial, CoreError> {
    cone.check_positive(ell)?;
    cone.check_positive(nu)?;
    let mut out = TPolynomial::zero(0, n);
    if cone.is_empty() {
        return Ok(out);
    }
    let mut bounded = cone.closure_system();
    bounded.ge(fracs(&ell.0.iter().map(|x| -x).collect::<Vec<_>>()), Frac::from_int(-(n as i64)));
    let mut ub = Vec::with_capacity(cone.dim);
    for i in 0..cone.dim {
        match bounded.bounds(i) {
            None => return Ok(out),
            Some((_, Some(hi))) => ub.push(hi.floor().try_into().unwrap_or(i64::MAX)),
            Some((_, None)) => return Err(CoreError::NotPositive("lattice region is unbounded".into())),
        }
    }
    let mut k = vec![1i64; cone.dim];
    if ub.iter().any(|&u| u < 1) {
        return Ok(out);
    }
    loop {
        if cone.contains(&k) {
            let deg = ell.eval(&k);
            if deg >= 0 && (deg as usize) <= n {
                out.add_to(deg as usize, &MonClass::lefschetz_pow(0, -nu.eval(&k)));
            }
        }
        let mut i = 0;
        loop {
            if i == cone.dim {
                return Ok(out);
            }
            k[i] += 1;
            if k[i] <= ub[i] {
                break;
            }
            k[i] = 1;
            i += 1;
        }
    }
}

/// The limit `T -> infinity` of the full cone series, `chi_c(cone)`.
pub fn cone_limit(cone: &Cone, ell: &LinForm, nu: &LinForm) -> Result<i64, CoreError> {
    cone.check_positive(ell)?;
    cone.check_positive(nu)?;
    Ok(euler_char(cone))
}

/// `Gamma(I) = { x > 0 : rows . x = 0 }`: nonemptiness and dimension.
pub fn gamma_cone(rows: &[Vec<i64>], n: usize) -> Result<(bool, usize), CoreError> {
    let cone = gamma_as_cone(rows, n)?;
    if cone.is_empty() {
        return Ok((false, 0));
    }
    Ok((true, n - int_rank(rows)))
}

fn gamma_as_cone(rows: &[Vec<i64>], n: usize) -> Result<Cone, CoreError> {
    let mut cone = Cone::orthant(n)?;
    for r in rows {
        cone.constrain(LinForm(r.clone()), Relation::Eq)?;
    }
    Ok(cone)
}

/// `Gamma(I) ∩ M_gamma` with `M_gamma = { n_f . x <= gamma * n_g . x }`.
pub fn gamma_cap_m(rows: &[Vec<i64>], n_f: &[i64], n_g: &[i64], gamma: i64) -> Result<Cone, CoreError> {
    let form: Vec<i64> = n_g.iter().zip(n_f).map(|(g, f)| gamma * g - f).collect();
    gamma_as_cone(rows, n_f.len())?.with(LinForm(form), Relation::Ge)
}

/// Whether `Gamma(I)` is nonempty and contained in `M_gamma` for all large
/// `gamma`. `n_g` is zero outside `C ∩ I`.
pub fn delta_membership(rows: &[Vec<i64>], n_f: &[i64], n_g: &[i64]) -> Result<bool, CoreError> {
    let n = n_f.len();
    if n_g.len() != n {
        return Err(CoreError::FormLength {
            expected: n,
            found: n_g.len(),
        });
    }
    let cone = gamma_as_cone(rows, n)?;
    if cone.is_empty() || n_g.iter().all(|&g| g == 0) {
        return Ok(false);
    }
    // unbounded ratio iff a closure point has n_g = 0 and n_f >= 1
    let mut s = cone.closure_system();
    s.eq_int(n_g, 0);
    s.ge_int(n_f, 1);
    Ok(!s.feasible())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(k: i64) -> MonClass {
        MonClass::lefschetz_pow(0, k)
    }

    #[test]
    fn series_examples() {
        let c = Cone::orthant(2).unwrap();
        let f = LinForm(vec![1, 1]);
        let s = cone_series_truncated(&c, &f, &f, 3).unwrap();
        let mut expect = TPolynomial::zero(0, 3);
        expect.add_to(2, &l(-2));
        expect.add_to(3, &l(-3).scale(2));
        assert_eq!(s, expect);

        let ray = Cone::orthant(1).unwrap();
        let s = cone_series_truncated(&ray, &LinForm(vec![2]), &LinForm(vec![1]), 4).unwrap();
        let mut expect = TPolynomial::zero(0, 4);
        expect.add_to(2, &l(-1));
        expect.add_to(4, &l(-2));
        assert_eq!(s, expect);

        let empty = Cone::orthant(2).unwrap().with(LinForm(vec![-1, -1]), Relation::Ge).unwrap();
        assert!(cone_series_truncated(&empty, &f, &f, 5).unwrap().is_zero());
    }

    #[test]
    fn positivity_is_checked() {
        let c = Cone::orthant(2).unwrap();
        assert!(cone_series_truncated(&c, &LinForm(vec![1, 0]), &LinForm(vec![1, 1]), 3).is_err());
        let wedge = c.with(LinForm(vec![-1, 2]), Relation::Ge).unwrap();
        assert!(cone_limit(&wedge, &LinForm(vec![1, -1]), &LinForm(vec![1, 1])).is_err());
    }

    #[test]
    fn euler_examples() {
        assert_eq!(euler_char(&Cone::orthant(2).unwrap()), 1);
        assert_eq!(euler_char(&Cone::orthant(3).unwrap()), -1);
        let half = Cone::orthant(2).unwrap().with(LinForm(vec![-1, 1]), Relation::Ge).unwrap();
        assert_eq!(euler_char(&half), 0);
        let empty = Cone::orthant(2).unwrap().with(LinForm(vec![-1, -1]), Relation::Gt).unwrap();
        assert_eq!(euler_char(&empty), 0);
        assert_eq!(cone_limit(&Cone::orthant(1).unwrap(), &LinForm(vec![1]), &LinForm(vec![1])).unwrap(), -1);
    }

    #[test]
    fn dimension_bound() {
        assert!(matches!(Cone::orthant(7), Err(CoreError::DimensionTooLarge(7))));
    }

    #[test]
    fn gamma_examples() {
        assert_eq!(gamma_cone(&[vec![0, 0, 0]], 3).unwrap(), (true, 3));
        assert_eq!(gamma_cone(&[vec![1, 2]], 2).unwrap(), (false, 0));
        assert_eq!(gamma_cone(&[vec![1, -1]], 2).unwrap(), (true, 1));
    }

    #[test]
    fn delta_examples() {
        assert!(delta_membership(&[vec![0, 0]], &[3, 1], &[1, 2]).unwrap());
        assert!(!delta_membership(&[vec![0, 0]], &[3, 1], &[0, 0]).unwrap());
        // recession direction (0,1) has n_g = 0 and n_f > 0
        assert!(!delta_membership(&[vec![0, 0]], &[0, 1], &[1, 0]).unwrap());
        assert!(delta_membership(&[vec![1, -1]], &[0, 1], &[1, 0]).unwrap());
    }

    #[test]
    fn simplicial_cone() {
        let c = Cone::open_simplicial(&[vec![1, 0], vec![1, 1]]).unwrap();
        assert!(c.contains(&[2, 1]));
        assert!(!c.contains(&[1, 1]));
        assert!(!c.contains(&[1, 2]));
        assert_eq!(euler_char(&c), 1);
    }
}
