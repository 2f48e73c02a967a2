//! Exact linear feasibility and projection by Fourier-Motzkin elimination.
//! Intended for the small systems arising from cones of dimension <= 6.

use std::collections::BTreeMap;

use crate::spectra::Frac;

/// A system of constraints `a . x >= b` and `a . x = b` over `Q^n`.
#[derive(Clone, Debug, Default)]
pub struct System {
    n: usize,
    ineqs: Vec<(Vec<Frac>, Frac)>,
    eqs: Vec<(Vec<Frac>, Frac)>,
}

pub(crate) fn fracs(v: &[i64]) -> Vec<Frac> {
    v.iter().map(|&x| Frac::from_int(x)).collect()
}

impl System {
    pub fn new(n: usize) -> System {
        System {
            n,
            ineqs: Vec::new(),
            eqs: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// `a . x >= b`
    pub fn ge(&mut self, a: Vec<Frac>, b: Frac) -> &mut System {
        assert_eq!(a.len(), self.n);
        self.ineqs.push((a, b));
        self
    }

    /// `a . x = b`
    pub fn eq(&mut self, a: Vec<Frac>, b: Frac) -> &mut System {
        assert_eq!(a.len(), self.n);
        self.eqs.push((a, b));
        self
    }

    pub fn ge_int(&mut self, a: &[i64], b: i64) -> &mut System {
        self.ge(fracs(a), Frac::from_int(b))
    }

    pub fn eq_int(&mut self, a: &[i64], b: i64) -> &mut System {
        self.eq(fracs(a), Frac::from_int(b))
    }

    pub fn feasible(&self) -> bool {
        self.project(None).is_some()
    }

    /// Exact bounds `(lower, upper)` of `x_var` over the feasible set, `None`
    /// when the system is infeasible. A missing bound means unbounded.
    pub fn bounds(&self, var: usize) -> Option<(Option<Frac>, Option<Frac>)> {
        let cons = self.project(Some(var))?;
        let mut lo: Option<Frac> = None;
        let mut hi: Option<Frac> = None;
        for (a, b) in cons {
            let c = &a[var];
            if c.is_positive() {
                let v = &b / c;
                if lo.as_ref().is_none_or(|l| v > *l) {
                    lo = Some(v);
                }
            } else if c.is_negative() {
                let v = &b / c;
                if hi.as_ref().is_none_or(|h| v < *h) {
                    hi = Some(v);
                }
            }
        }
        if let (Some(l), Some(h)) = (&lo, &hi) {
            if l > h {
                return None;
            }
        }
        Some((lo, hi))
    }

    /// Eliminates every variable except `keep`; returns the remaining
    /// inequalities or `None` if infeasibility was detected.
    #[allow(clippy::needless_range_loop)]
    fn project(&self, keep: Option<usize>) -> Option<Vec<(Vec<Frac>, Frac)>> {
        let mut ineqs = self.ineqs.clone();
        let mut eqs = self.eqs.clone();
        let mut eliminated = vec![false; self.n];

        // Gaussian substitution of the equalities.
        while let Some((a, b)) = eqs.pop() {
            let pivot = (0..self.n).find(|&j| !a[j].is_zero() && Some(j) != keep);
            let Some(j) = pivot else {
                match keep.filter(|&k| !a[k].is_zero()) {
                    // an equality on the kept variable becomes two inequalities
                    Some(_) => {
                        ineqs.push((a.clone(), b.clone()));
                        ineqs.push((a.iter().map(|x| -x).collect(), -&b));
                    }
                    None if !b.is_zero() => return None,
                    None => {}
                }
                continue;
            };
            let substitute = |row: &mut (Vec<Frac>, Frac)| {
                if row.0[j].is_zero() {
                    return;
                }
                let factor = &row.0[j] / &a[j];
                for k in 0..self.n {
                    let d = &factor * &a[k];
                    row.0[k] = &row.0[k] - &d;
                }
                row.1 = &row.1 - &(&factor * &b);
            };
            for row in ineqs.iter_mut() {
                substitute(row);
            }
            for row in eqs.iter_mut() {
                substitute(row);
            }
            eliminated[j] = true;
        }

        let mut cons = normalize(ineqs)?;
        loop {
            // pick the remaining variable with the cheapest elimination
            let mut best: Option<(usize, usize)> = None;
            for j in 0..self.n {
                if eliminated[j] || Some(j) == keep {
                    continue;
                }
                let pos = cons.iter().filter(|(a, _)| a[j].is_positive()).count();
                let neg = cons.iter().filter(|(a, _)| a[j].is_negative()).count();
                if pos + neg == 0 {
                    eliminated[j] = true;
                    continue;
                }
                let cost = pos * neg;
                if best.is_none_or(|(_, c)| cost < c) {
                    best = Some((j, cost));
                }
            }
            let Some((j, _)) = best else { break };
            let (mut pos, mut neg, mut rest) = (Vec::new(), Vec::new(), Vec::new());
            for c in cons {
                if c.0[j].is_positive() {
                    pos.push(c);
                } else if c.0[j].is_negative() {
                    neg.push(c);
                } else {
                    rest.push(c);
                }
            }
            for (ap, bp) in &pos {
                for (an, bn) in &neg {
                    // scale so the j-coefficients cancel
                    let sp = -&an[j];
                    let sn = ap[j].clone();
                    let a: Vec<Frac> = (0..self.n).map(|k| &(&ap[k] * &sp) + &(&an[k] * &sn)).collect();
                    let b = &(bp * &sp) + &(bn * &sn);
                    rest.push((a, b));
                }
            }
            eliminated[j] = true;
            cons = normalize(rest)?;
        }
        Some(cons)
    }
}

/// Scales each inequality so its first nonzero coefficient has absolute value
/// one, keeps the strongest right-hand side per direction, and checks the
/// constant ones.
fn normalize(cons: Vec<(Vec<Frac>, Frac)>) -> Option<Vec<(Vec<Frac>, Frac)>> {
    let mut best: BTreeMap<Vec<Frac>, Frac> = BTreeMap::new();
    for (a, b) in cons {
        let Some(lead) = a.iter().find(|x| !x.is_zero()).map(|x| x.abs()) else {
            if b.is_positive() {
                return None;
            }
            continue;
        };
        let a: Vec<Frac> = a.iter().map(|x| x / &lead).collect();
        let b = &b / &lead;
        match best.get_mut(&a) {
            Some(old) => {
                if b > *old {
                    *old = b;
                }
            }
            None => {
                best.insert(a, b);
            }
        }
    }
    Some(best.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simple_feasibility() {
        let mut s = System::new(2);
        s.ge_int(&[1, 0], 1).ge_int(&[0, 1], 1).ge_int(&[-1, -1], -3);
        assert!(s.feasible());
        let (lo, hi) = s.bounds(0).unwrap();
        assert_eq!(lo, Some(Frac::one()));
        assert_eq!(hi, Some(Frac::from_int(2)));
        s.ge_int(&[-1, -1], -1);
        assert!(!s.feasible());
    }

    #[test]
    fn equalities() {
        let mut s = System::new(3);
        s.eq_int(&[1, -1, 0], 0).ge_int(&[1, 0, 0], 1).ge_int(&[0, 1, 0], 1).ge_int(&[0, 0, 1], 1);
        assert!(s.feasible());
        s.eq_int(&[1, 1, 0], 1);
        assert!(!s.feasible());
        let mut t = System::new(2);
        t.eq_int(&[2, 0], 3);
        assert_eq!(t.bounds(0).unwrap(), (Some(Frac::new(3, 2)), Some(Frac::new(3, 2))));
        assert_eq!(t.bounds(1).unwrap(), (None, None));
    }
}
