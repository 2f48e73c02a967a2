//! Brute-force torus-fiber classes by enumerating torsion points.
//!
//! The solution set `T = { y in G_m^m : y^(row_i) = 1 }` is sampled at its
//! `n`-torsion points `k / n`, components are identified as cosets of the
//! identity component's torsion, and the monodromies act on components by
//! translation. No Smith normal form is used.

use std::collections::{BTreeSet, HashMap};

use num_integer::Integer;

use crate::classes::MonClass;
use crate::error::CoreError;
use crate::spectra::{Frac, QmodZ};

#[allow(clippy::needless_range_loop)]
fn rational_rank(rows: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<Frac>> = rows.iter().map(|r| r.iter().map(|&x| Frac::from_int(x)).collect()).collect();
    let m = a.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..m {
        let Some(p) = (rank..a.len()).find(|&r| !a[r][col].is_zero()) else { continue };
        a.swap(rank, p);
        for r in 0..a.len() {
            if r != rank && !a[r][col].is_zero() {
                let f = &a[r][col] / &a[rank][col];
                for c in 0..m {
                    let t = &f * &a[rank][c];
                    a[r][c] = &a[r][c] - &t;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn det(a: &[Vec<i64>]) -> i64 {
    match a.len() {
        0 => 1,
        1 => a[0][0],
        n => (0..n)
            .map(|j| {
                let minor: Vec<Vec<i64>> = a[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &x)| x).collect())
                    .collect();
                let s = if j % 2 == 0 { 1 } else { -1 };
                s * a[0][j] * det(&minor)
            })
            .sum(),
    }
}

fn column_subsets(m: usize, r: usize) -> Vec<Vec<usize>> {
    if r == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for last in r - 1..m {
        for mut s in column_subsets(last, r - 1) {
            s.push(last);
            out.push(s);
        }
    }
    out
}

fn submatrix(rows: &[Vec<i64>], cols: &[usize]) -> Vec<Vec<i64>> {
    rows.iter().map(|r| cols.iter().map(|&c| r[c]).collect()).collect()
}

/// Solves `rows_S theta_S = e_i` by Cramer's rule, zero outside `S`.
fn cramer_solution(rows: &[Vec<i64>], cols: &[usize], i: usize) -> Vec<Frac> {
    let m = rows[0].len();
    let a = submatrix(rows, cols);
    let d = det(&a);
    let mut theta = vec![Frac::zero(); m];
    for (slot, &c) in cols.iter().enumerate() {
        let mut b = a.clone();
        for (r, row) in b.iter_mut().enumerate() {
            row[slot] = if r == i { 1 } else { 0 };
        }
        theta[c] = Frac::new(det(&b), d);
    }
    theta
}

fn reduce(v: &[i64], n: i64) -> Vec<i64> {
    v.iter().map(|x| x.rem_euclid(n)).collect()
}

fn add_mod(a: &[i64], b: &[i64], n: i64) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| (x + y).rem_euclid(n)).collect()
}

/// `n`-torsion of the identity component: the image of the integer kernel
/// lattice in `(Z/n)^m`, generated from kernel vectors in a growing box.
fn identity_component_torsion(rows: &[Vec<i64>], n: i64, torus_dim: usize) -> Result<BTreeSet<Vec<i64>>, CoreError> {
    let m = rows[0].len();
    let target = (n as u64).pow(torus_dim as u32) as usize;
    let mut bound = 1i64;
    loop {
        let mut gens = Vec::new();
        let mut v = vec![-bound; m];
        loop {
            if rows.iter().all(|r| r.iter().zip(&v).map(|(a, x)| a * x).sum::<i64>() == 0) {
                gens.push(reduce(&v, n));
            }
            let mut i = 0;
            loop {
                if i == m {
                    break;
                }
                v[i] += 1;
                if v[i] <= bound {
                    break;
                }
                v[i] = -bound;
                i += 1;
            }
            if i == m {
                break;
            }
        }
        let mut group: BTreeSet<Vec<i64>> = BTreeSet::from([vec![0; m]]);
        let mut frontier = vec![vec![0; m]];
        while let Some(x) = frontier.pop() {
            for g in &gens {
                let y = add_mod(&x, g, n);
                if group.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
        if group.len() == target {
            return Ok(group);
        }
        if group.len() > target || bound > 64 {
            return Err(CoreError::BadMatrix("kernel lattice search did not converge".into()));
        }
        bound *= 2;
    }
}

/// Class of the torus fiber with its translation monodromies, by direct
/// enumeration. Intended for small matrices (a few columns, small entries).
pub fn brute_fiber_class(rows: &[Vec<i64>]) -> Result<MonClass, CoreError> {
    let r = rows.len();
    let m = rows.first().map_or(0, |x| x.len());
    if r == 0 || rows.iter().any(|x| x.len() != m) {
        return Err(CoreError::BadMatrix("ragged or empty matrix".into()));
    }
    let rank = rational_rank(rows);
    if rank != r {
        return Err(CoreError::RankDeficient { rank, rows: r });
    }
    if let Some(j) = (0..m).find(|&j| rows.iter().all(|row| row[j] == 0)) {
        return Err(CoreError::ZeroColumn(j));
    }
    let torus_dim = m - r;

    // |torsion| is the gcd of maximal minors; translations come from a
    // Cramer solution on the smallest nonzero minor.
    let subsets = column_subsets(m, r);
    let minors: Vec<(i64, &Vec<usize>)> = subsets.iter().map(|s| (det(&submatrix(rows, s)).abs(), s)).collect();
    let order = minors.iter().fold(0i64, |g, (d, _)| g.gcd(d));
    let (_, cols) = minors.iter().filter(|(d, _)| *d > 0).min_by_key(|(d, _)| *d).expect("full rank");
    let thetas: Vec<Vec<Frac>> = (0..r).map(|i| cramer_solution(rows, cols, i)).collect();
    let mut n = order;
    for t in thetas.iter().flatten() {
        let d: i64 = t.denom().try_into().expect("small denominator");
        n = n.lcm(&d);
    }

    // all n-torsion points of T
    let mut points = Vec::new();
    let mut k = vec![0i64; m];
    loop {
        if rows.iter().all(|row| row.iter().zip(&k).map(|(a, x)| a * x).sum::<i64>() % n == 0) {
            points.push(k.clone());
        }
        let mut i = 0;
        while i < m {
            k[i] += 1;
            if k[i] < n {
                break;
            }
            k[i] = 0;
            i += 1;
        }
        if i == m {
            break;
        }
    }

    let identity = identity_component_torsion(rows, n, torus_dim)?;
    let mut component_of: HashMap<Vec<i64>, usize> = HashMap::new();
    let mut reps: Vec<Vec<i64>> = Vec::new();
    for p in &points {
        if component_of.contains_key(p) {
            continue;
        }
        let id = reps.len();
        reps.push(p.clone());
        for t in &identity {
            component_of.insert(add_mod(p, t, n), id);
        }
    }
    let count = reps.len();
    if count as i64 != order {
        return Err(CoreError::BadMatrix("component count disagrees with the minor gcd".into()));
    }

    // translation permutations of the components
    let perms: Vec<Vec<usize>> = thetas
        .iter()
        .map(|theta| {
            let h: Vec<i64> = theta
                .iter()
                .map(|t| {
                    let v = t * &Frac::from_int(n);
                    i64::try_from(v.numer()).expect("integral shift")
                })
                .collect();
            reps.iter().map(|rep| component_of[&add_mod(rep, &h, n)]).collect()
        })
        .collect();
    let orders: Vec<usize> = perms
        .iter()
        .map(|p| {
            let mut c = 0usize;
            let mut o = 1usize;
            loop {
                c = p[c];
                if c == 0 {
                    return o;
                }
                o += 1;
            }
        })
        .collect();
    let power_apply = |c: usize, exps: &[usize]| -> usize {
        let mut x = c;
        for (p, &e) in perms.iter().zip(exps) {
            for _ in 0..e {
                x = p[x];
            }
        }
        x
    };

    // relations among the translations, then the characters killing them
    let mut relations = Vec::new();
    let mut subgroup = BTreeSet::new();
    for_each_tuple(&orders, |e| {
        let image = power_apply(0, e);
        if image == 0 {
            relations.push(e.to_vec());
        }
        subgroup.insert(image);
    });
    let mut chars = Vec::new();
    for_each_tuple(&orders, |x| {
        let ok = relations.iter().all(|rel| {
            let s = rel
                .iter()
                .zip(x)
                .zip(&orders)
                .fold(Frac::zero(), |acc, ((&c, &xi), &o)| acc + Frac::new((c * xi) as i64, o as i64));
            s.is_integer()
        });
        if ok {
            chars.push(
                x.iter()
                    .zip(&orders)
                    .map(|(&xi, &o)| QmodZ::from_ratio(xi as i64, o as i64))
                    .collect::<Vec<_>>(),
            );
        }
    });
    if chars.len() != subgroup.len() || !count.is_multiple_of(subgroup.len()) {
        return Err(CoreError::BadMatrix("translation action is not free".into()));
    }
    let orbits = (count / subgroup.len()) as i64;
    let mut out = MonClass::zero(r);
    for eigen in chars {
        out.add_monomial(eigen, 0, 0, orbits);
    }
    let l_minus_one = &MonClass::lefschetz(r) - &MonClass::one(r);
    Ok(&out * &l_minus_one.pow(torus_dim as u32))
}

fn for_each_tuple(bounds: &[usize], mut f: impl FnMut(&[usize])) {
    let mut t = vec![0usize; bounds.len()];
    loop {
        f(&t);
        let mut i = 0;
        while i < t.len() {
            t[i] += 1;
            if t[i] < bounds[i] {
                break;
            }
            t[i] = 0;
            i += 1;
        }
        if i == t.len() {
            return;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_cases() {
        assert_eq!(
            brute_fiber_class(&[vec![2, 1], vec![0, 1]]).unwrap(),
            &MonClass::mono2((0, 1), (0, 1), 0, 0) + &MonClass::mono2((1, 2), (1, 2), 0, 0)
        );
        assert_eq!(brute_fiber_class(&[vec![2, 3]]).unwrap(), &MonClass::lefschetz(1) - &MonClass::one(1));
        assert_eq!(brute_fiber_class(&[vec![1, 0], vec![0, 1]]).unwrap(), MonClass::one(2));
        let mut c = MonClass::zero(1);
        for k in 0..5 {
            c.add_monomial(vec![QmodZ::from_ratio(k, 5)], 0, 0, 1);
        }
        assert_eq!(brute_fiber_class(&[vec![5]]).unwrap(), c);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(brute_fiber_class(&[vec![1, 2], vec![2, 4]]).is_err());
        assert!(brute_fiber_class(&[vec![0, 2]]).is_err());
    }
}
