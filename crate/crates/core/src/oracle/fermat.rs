//! Eigenspace decomposition of the compactly supported cohomology of the
//! affine Fermat curves `x^n + y^n = 1` and `x^n + y^n = 0` in `G_m^2` under
//! `mu_n x mu_n`, derived from fixed-point counts, the boundary permutation
//! modules and the standard basis of holomorphic forms. Used to re-derive the
//! two-grading collapse table by the invariants computation.

use std::collections::{BTreeMap, BTreeSet};

use crate::classes::MonClass;
use crate::spectra::{Frac, QmodZ};

/// Which affine Fermat curve.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Curve {
    /// `x^n + y^n = 1`
    One,
    /// `x^n + y^n = 0`
    Zero,
}

/// A one-dimensional eigenspace piece of `H^degree_c` with Hodge type `(p, q)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Piece {
    pub degree: u8,
    pub p: i64,
    pub q: i64,
}

/// Characters of `mu_n x mu_n` as exponent pairs in `(Z/n)^2`.
pub type Char = (u64, u64);

/// Pieces per character.
pub type Decomposition = BTreeMap<Char, Vec<Piece>>;

fn add(d: &mut Decomposition, c: Char, piece: Piece, mult: usize) {
    let e = d.entry(c).or_default();
    for _ in 0..mult {
        e.push(piece);
    }
    e.sort();
}

/// Isotypic multiplicities of a permutation module: a character appears once
/// per orbit on whose stabilizer it is trivial.
fn permutation_characters(n: u64, points: usize, act: impl Fn(u64, u64, usize) -> usize) -> BTreeMap<Char, usize> {
    let mut seen = vec![false; points];
    let mut out = BTreeMap::new();
    for start in 0..points {
        if seen[start] {
            continue;
        }
        let mut stab = Vec::new();
        for j in 0..n {
            for k in 0..n {
                let y = act(j, k, start);
                seen[y] = true;
                if y == start {
                    stab.push((j, k));
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                if stab.iter().all(|&(j, k)| (a * j + b * k) % n == 0) {
                    *out.entry((a, b)).or_insert(0) += 1;
                }
            }
        }
    }
    out
}

/// Euler characteristic with compact support of the fixed locus of `(j, k)`.
fn fixed_locus_euler(curve: Curve, n: u64, j: u64, k: u64) -> i64 {
    // on G_m^2, (zeta^j x, zeta^k y) = (x, y) forces j = k = 0
    if j != 0 || k != 0 {
        return 0;
    }
    let n = n as i64;
    match curve {
        // smooth projective closure of genus (n-1)(n-2)/2 minus 3n boundary points
        Curve::One => 2 - (n - 1) * (n - 2) - 3 * n,
        // n disjoint copies of G_m
        Curve::Zero => 0,
    }
}

/// Virtual character `sum (-1)^i H^i_c` by the Lefschetz fixed-point formula:
/// the multiplicity of each character is `(1/n^2) sum_g tr(g) chi(g)^{-1}`.
pub fn virtual_multiplicities(curve: Curve, n: u64) -> BTreeMap<Char, i64> {
    let total = (n * n) as i64;
    let mut out = BTreeMap::new();
    for a in 0..n {
        for b in 0..n {
            // only the identity has nonzero trace, and chi(e) = 1
            let mut sum = 0i64;
            for j in 0..n {
                for k in 0..n {
                    let tr = fixed_locus_euler(curve, n, j, k);
                    assert!(tr == 0 || (j == 0 && k == 0));
                    sum += tr;
                }
            }
            assert_eq!(sum % total, 0);
            out.insert((a, b), sum / total);
        }
    }
    out
}

/// Eigenspace pieces labelled by the pullback character.
pub fn eigenspaces(curve: Curve, n: u64) -> Decomposition {
    assert!(n >= 1);
    let mut d = Decomposition::new();
    match curve {
        Curve::One => {
            // irreducible curve: H^2_c is the trivial line of type (1,1)
            add(&mut d, (0, 0), Piece { degree: 2, p: 1, q: 1 }, 1);
            // weight 0 of H^1_c: boundary points modulo the constants.
            // points at infinity [x:y:0] with x/y = zeta_{2n}^{2l+1}: l -> l + j - k
            // points with x = 0, y = zeta^l: l -> l + k; points with y = 0, x = zeta^l: l -> l + j
            let nu = n as usize;
            let boundary = permutation_characters(n, 3 * nu, |j, k, pt| {
                let (block, l) = (pt / nu, (pt % nu) as u64);
                let shift = match block {
                    0 => (j + n - k) % n,
                    1 => k,
                    _ => j,
                };
                block * nu + ((l + shift) % n) as usize
            });
            for (c, m) in boundary {
                let m = if c == (0, 0) { m - 1 } else { m };
                add(&mut d, c, Piece { degree: 1, p: 0, q: 0 }, m);
            }
            // weight 1 of H^1_c is H^1 of the closure; H^{1,0} has basis
            // x^(a-1) y^(b-1) dx / y^(n-1), 1 <= a, b, a + b <= n - 1, whose
            // pullback under (zeta^j x, zeta^k y) scales by zeta^(ja + kb)
            for a in 1..n {
                for b in 1..n {
                    if a + b < n {
                        add(&mut d, (a, b), Piece { degree: 1, p: 1, q: 0 }, 1);
                        add(&mut d, (n - a, n - b), Piece { degree: 1, p: 0, q: 1 }, 1);
                    }
                }
            }
        }
        Curve::Zero => {
            // n lines y = xi x with xi^n = -1, each a copy of G_m; (j, k) maps
            // xi to xi zeta^(k-j); the stabilizer acts by rotation, trivially on cohomology
            let lines = permutation_characters(n, n as usize, |j, k, l| ((l as u64 + k + n - j) % n) as usize);
            for (c, m) in lines {
                add(&mut d, c, Piece { degree: 1, p: 0, q: 0 }, m);
                add(&mut d, c, Piece { degree: 2, p: 1, q: 1 }, m);
            }
        }
    }
    d
}

/// Eigenspace pieces relabelled by the inverse character.
pub fn eigenspaces_inverse_labels(curve: Curve, n: u64) -> Decomposition {
    eigenspaces(curve, n)
        .into_iter()
        .map(|((a, b), v)| (((n - a) % n, (n - b) % n), v))
        .collect()
}

/// The classical table stated directly in terms of `s(alpha) + s(beta)`.
pub fn stated_table(curve: Curve, n: u64) -> Decomposition {
    let mut d = Decomposition::new();
    for a in 0..n {
        for b in 0..n {
            match curve {
                Curve::One => {
                    if (a, b) == (0, 0) {
                        add(&mut d, (0, 0), Piece { degree: 1, p: 0, q: 0 }, 2);
                        add(&mut d, (0, 0), Piece { degree: 2, p: 1, q: 1 }, 1);
                    } else if a == 0 || b == 0 || (a + b) % n == 0 {
                        add(&mut d, (a, b), Piece { degree: 1, p: 0, q: 0 }, 1);
                    } else if a + b < n {
                        add(&mut d, (a, b), Piece { degree: 1, p: 0, q: 1 }, 1);
                    } else {
                        add(&mut d, (a, b), Piece { degree: 1, p: 1, q: 0 }, 1);
                    }
                }
                Curve::Zero => {
                    if (a + b) % n == 0 {
                        add(&mut d, (a, b), Piece { degree: 1, p: 0, q: 0 }, 1);
                        add(&mut d, (a, b), Piece { degree: 2, p: 1, q: 1 }, 1);
                    }
                }
            }
        }
    }
    d
}

/// Alternating rank per character of a decomposition.
pub fn alternating_ranks(d: &Decomposition) -> BTreeMap<Char, i64> {
    d.iter()
        .map(|(c, v)| (*c, v.iter().map(|p| if p.degree % 2 == 0 { 1 } else { -1 }).sum()))
        .collect()
}

fn exponent(x: &QmodZ, n: u64) -> u64 {
    let v = x.s() * &Frac::from_int(n as i64);
    assert!(v.is_integer(), "{n} is not a common denominator");
    u64::try_from(v.numer()).expect("residue in range")
}

/// `-[F_1 x^G A] + [F_0 x^G A]` for a one-dimensional `A` of character
/// `(alpha, beta)` and type `(p, q)`: the invariant part pairs `A` with the
/// pieces of inverse pullback character, and the residual `mu_n` acts
/// through `A` by the diagonal value `alpha + beta`.
pub fn collapse_monomial(alpha: &QmodZ, beta: &QmodZ, p: i64, q: i64, n: u64) -> MonClass {
    let (a, b) = (exponent(alpha, n), exponent(beta, n));
    let partner = ((n - a) % n, (n - b) % n);
    let merged = alpha + beta;
    let mut out = MonClass::zero(1);
    for (curve, sign) in [(Curve::One, -1i64), (Curve::Zero, 1)] {
        let d = eigenspaces(curve, n);
        for piece in d.get(&partner).into_iter().flatten() {
            let s = if piece.degree % 2 == 0 { 1 } else { -1 };
            out.add_monomial(vec![merged.clone()], p + piece.p, q + piece.q, sign * s);
        }
    }
    out
}

/// Characters appearing in either curve's decomposition.
pub fn support(n: u64) -> BTreeSet<Char> {
    let mut s: BTreeSet<Char> = eigenspaces(Curve::One, n).into_keys().collect();
    s.extend(eigenspaces(Curve::Zero, n).into_keys());
    s
}
