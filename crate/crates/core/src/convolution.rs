//! The convolution operator collapsing two monodromy gradings into one, the
//! convolution product, and the `N`-th power pushforward.

use num_bigint::BigInt;

use crate::classes::{box_product, MonClass, MonKey};
use crate::error::CoreError;
use crate::spectra::{Frac, QmodZ};

/// Image of the basis monomial `((alpha, beta), p, q)` under the collapse:
/// the merged eigenvalue and the new bidegree.
pub fn psi_table(alpha: &QmodZ, beta: &QmodZ, p: i64, q: i64) -> (QmodZ, i64, i64) {
    let sum = alpha + beta;
    if alpha.is_zero() || beta.is_zero() {
        return (sum, p, q);
    }
    if sum.is_zero() {
        return (sum, p + 1, q + 1);
    }
    if alpha.s() + beta.s() < Frac::one() {
        (sum, p, q + 1)
    } else {
        (sum, p + 1, q)
    }
}

/// Collapses gradings `i < j` (1-based) of every monomial; the merged
/// eigenvalue takes position `i` and position `j` is removed.
pub fn psi_sigma(x: &MonClass, pair: (usize, usize)) -> Result<MonClass, CoreError> {
    let (i, j) = pair;
    let k = x.arity();
    if i < 1 || i >= j || j > k {
        return Err(CoreError::PairOutOfRange { i, j, arity: k });
    }
    let mut out = MonClass::zero(k - 1);
    for (key, m) in x.terms() {
        let (merged, p, q) = psi_table(&key.eigen[i - 1], &key.eigen[j - 1], key.p, key.q);
        let mut eigen = key.eigen.clone();
        eigen[i - 1] = merged;
        eigen.remove(j - 1);
        out.add_key(MonKey::new(eigen, p, q), m);
    }
    Ok(out)
}

/// `x * y = psi_sigma(x ⊠ y)` on arity-1 classes.
pub fn convolve(x: &MonClass, y: &MonClass) -> Result<MonClass, CoreError> {
    for c in [x, y] {
        if c.arity() != 1 {
            return Err(CoreError::WrongArity {
                expected: 1,
                found: c.arity(),
            });
        }
    }
    psi_sigma(&box_product(x, y), (1, 2))
}

/// Three-fold collapse: gradings 1 and 2 first, then the remaining pair.
pub fn psi_sigma_123(x: &MonClass) -> Result<MonClass, CoreError> {
    psi_sigma_123_from(x, (1, 2))
}

/// Three-fold collapse starting from the given first pair.
pub fn psi_sigma_123_from(x: &MonClass, first: (usize, usize)) -> Result<MonClass, CoreError> {
    if x.arity() != 3 {
        return Err(CoreError::WrongArity {
            expected: 3,
            found: x.arity(),
        });
    }
    psi_sigma(&psi_sigma(x, first)?, (1, 2))
}

/// Pushforward along `b -> b^N` in the given (1-based) slot: an eigenvalue
/// `beta` becomes the `N` eigenvalues `(s(beta) + j) / N`.
pub fn pi_n_shriek(x: &MonClass, slot: usize, n: u64) -> Result<MonClass, CoreError> {
    if slot < 1 || slot > x.arity() {
        return Err(CoreError::SlotOutOfRange { slot, arity: x.arity() });
    }
    if n == 0 {
        return Err(CoreError::NonPositive("N must be at least 1"));
    }
    let n_frac = Frac::from_bigint(BigInt::from(n));
    let mut out = MonClass::zero(x.arity());
    for (key, m) in x.terms() {
        let base = key.eigen[slot - 1].s().clone();
        for j in 0..n {
            let mut eigen = key.eigen.clone();
            eigen[slot - 1] = QmodZ::new(&(&(&base + &Frac::from_bigint(BigInt::from(j))) / &n_frac));
            out.add_key(MonKey::new(eigen, key.p, key.q), m);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn psi_examples() {
        let x = MonClass::mono2((1, 2), (1, 2), 0, 0);
        assert_eq!(psi_sigma(&x, (1, 2)).unwrap(), MonClass::mono1(0, 1, 1, 1));
        let x = MonClass::mono2((1, 3), (1, 3), 0, 0);
        assert_eq!(psi_sigma(&x, (1, 2)).unwrap(), MonClass::mono1(2, 3, 0, 1));
        let x = MonClass::mono2((0, 1), (0, 1), 4, -2);
        assert_eq!(psi_sigma(&x, (1, 2)).unwrap(), MonClass::mono1(0, 1, 4, -2));
        let x = MonClass::mono2((1, 2), (2, 3), 0, 0);
        assert_eq!(psi_sigma(&x, (1, 2)).unwrap(), MonClass::mono1(1, 6, 1, 0));
        let x = MonClass::mono2((1, 5), (0, 1), 2, 1);
        assert_eq!(psi_sigma(&x, (1, 2)).unwrap(), MonClass::mono1(1, 5, 2, 1));
        assert!(psi_sigma(&x, (2, 3)).is_err());
        assert!(psi_sigma(&MonClass::one(1), (1, 2)).is_err());
    }

    #[test]
    fn convolve_examples() {
        let x = &MonClass::mono1(1, 7, 0, 0) + &MonClass::mono1(3, 4, 2, 1);
        assert_eq!(convolve(&x, &MonClass::one(1)).unwrap(), x);
        let h = MonClass::mono1(1, 2, 0, 0);
        assert_eq!(convolve(&h, &h).unwrap(), MonClass::lefschetz(1));
        let lhs = &convolve(&h, &MonClass::mono1(1, 3, 0, 0)).unwrap() + &convolve(&h, &MonClass::mono1(2, 3, 0, 0)).unwrap();
        assert_eq!(lhs, &MonClass::mono1(5, 6, 0, 1) + &MonClass::mono1(1, 6, 1, 0));
    }

    #[test]
    fn three_fold_unit() {
        let x = MonClass::monomial(vec![QmodZ::zero(); 3], 2, 5, 1);
        assert_eq!(psi_sigma_123(&x).unwrap(), MonClass::mono1(0, 1, 2, 5));
        assert!(psi_sigma_123(&MonClass::one(2)).is_err());
    }

    #[test]
    fn pushforward_examples() {
        let x = MonClass::mono1(1, 2, 0, 0);
        assert_eq!(
            pi_n_shriek(&x, 1, 2).unwrap(),
            &MonClass::mono1(1, 4, 0, 0) + &MonClass::mono1(3, 4, 0, 0)
        );
        assert_eq!(pi_n_shriek(&x, 1, 1).unwrap(), x);
        let z = MonClass::one(1);
        let expect = &(&MonClass::mono1(0, 1, 0, 0) + &MonClass::mono1(1, 3, 0, 0)) + &MonClass::mono1(2, 3, 0, 0);
        assert_eq!(pi_n_shriek(&z, 1, 3).unwrap(), expect);
        assert!(pi_n_shriek(&z, 2, 3).is_err());
    }
}
