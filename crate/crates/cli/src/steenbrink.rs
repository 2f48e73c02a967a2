//! Spectrum jumps along Iomdin series `f + g^N`.

use std::fmt;

use motspec_core::{delta_n, geometric_factor, hsp2, steenbrink_rhs, CoreError, Frac, MonClass, SpectrumPoly};

/// A branch of the critical locus with its transversal spectral pairs
/// `(alpha, beta)`, the order `e` of `g` on the branch and its multiplicity
/// `m`. The formula uses `e`; for a generic linear `g` the two agree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Branch {
    pub pairs: Vec<(Frac, Frac)>,
    pub e: u64,
    pub m: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TransversalData {
    pub branches: Vec<Branch>,
}

/// `sum_{l,j} t^(alpha + beta / (e_l N)) (1 - t) / (1 - t^(1 / (e_l N)))`.
pub fn steenbrink_conjecture_rhs(data: &TransversalData, n: u64) -> Result<SpectrumPoly, CoreError> {
    if n == 0 {
        return Err(CoreError::NonPositive("N must be at least 1"));
    }
    let mut out = SpectrumPoly::zero();
    for b in &data.branches {
        if b.e == 0 || b.m == 0 {
            return Err(CoreError::NonPositive("branch orders e and m must be at least 1"));
        }
        out += &steenbrink_rhs(&b.pairs, b.e, n)?;
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct SteenbrinkReport {
    pub n: u64,
    pub threshold: Frac,
    pub lhs: SpectrumPoly,
    pub rhs: SpectrumPoly,
}

impl SteenbrinkReport {
    /// Whether `N` exceeds the threshold, the range in which equality is claimed.
    pub fn in_hypothesis(&self) -> bool {
        Frac::from_int(self.n as i64) > self.threshold
    }

    pub fn equal(&self) -> bool {
        self.lhs == self.rhs
    }

    pub fn difference(&self) -> SpectrumPoly {
        &self.lhs - &self.rhs
    }

    /// Equality inside the hypothesis range; outside it any outcome passes.
    pub fn passed(&self) -> bool {
        self.equal() || !self.in_hypothesis()
    }
}

impl fmt::Display for SteenbrinkReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "N = {}, threshold = {}", self.n, self.threshold)?;
        if !self.in_hypothesis() {
            writeln!(f, "warning: N <= threshold, out of hypothesis")?;
        }
        writeln!(f, "LHS = {}", self.lhs)?;
        writeln!(f, "RHS = {}", self.rhs)?;
        if self.equal() {
            write!(f, "equal")
        } else {
            write!(f, "differ by {}", self.difference())
        }
    }
}

/// Compares `Sp_f - Sp_{f+g^N}` with `(1 - t)/(1 - t^(1/N)) delta_N(hsp2(x))`
/// for the iterated vanishing class `x`.
pub fn steenbrink_check(
    sp_f: &SpectrumPoly,
    sp_fgn: &SpectrumPoly,
    iterated_class: &MonClass,
    n: u64,
    threshold: &Frac,
) -> Result<SteenbrinkReport, CoreError> {
    if n == 0 {
        return Err(CoreError::NonPositive("N must be at least 1"));
    }
    let rhs = &geometric_factor(n) * &delta_n(&hsp2(iterated_class)?, n);
    Ok(SteenbrinkReport {
        n,
        threshold: threshold.clone(),
        lhs: sp_f - sp_fgn,
        rhs,
    })
}


/// The D-series instance: `f = x^2 y`, `g = y`, checked against the engine
/// spectra of `f` and `f + g^N` and the iterated class of the joint datum.
#[derive(Clone, Debug)]
pub struct DSeriesCheck {
    pub report: SteenbrinkReport,
    /// `steenbrink_conjecture_rhs` with the transversal pair `(1/2, 1/2)`, `e = 1`.
    pub conjecture: SpectrumPoly,
}

impl DSeriesCheck {
    /// `Sp(f + g^N) - Sp(f)` equals the conjectured correction term.
    pub fn conjecture_holds(&self) -> bool {
        -&self.report.lhs == self.conjecture
    }

    pub fn passed(&self) -> bool {
        !self.report.in_hypothesis() || (self.report.equal() && self.conjecture_holds())
    }
}

pub fn d_series_transversal() -> TransversalData {
    TransversalData {
        branches: vec![Branch {
            pairs: vec![(Frac::new(1, 2), Frac::new(1, 2))],
            e: 1,
            m: 1,
        }],
    }
}

pub fn d_series_check(n: u64) -> Result<DSeriesCheck, CoreError> {
    use crate::fixtures::{d_series_fixture, joint_datum, x2y_fixture};
    use motspec_core::hsp1;
    use motspec_core::resolution::{gamma_threshold, iterated_vanishing, vanishing};

    let sp_f = hsp1(&vanishing(&x2y_fixture()?.datum)?)?;
    let sp_fgn = hsp1(&vanishing(&d_series_fixture(n)?.datum)?)?;
    let joint = joint_datum()?;
    let report = steenbrink_check(&sp_f, &sp_fgn, &iterated_vanishing(&joint)?, n, &gamma_threshold(&joint)?)?;
    Ok(DSeriesCheck {
        report,
        conjecture: steenbrink_conjecture_rhs(&d_series_transversal(), n)?,
    })
}
