//! Standard singularity data with expected values and their provenance.
//!
//! Plane-curve data are built from dual graphs of embedded resolutions. An
//! exceptional curve `E` with multiplicity `N` meeting the other components
//! with multiplicities `m_j` carries the class of the unramified `mu_N` cover
//! of `E°`, split into eigenspaces: for `alpha = l / N` the puncture `j` is
//! trivial when `alpha m_j` is an integer, and the nontrivial punctures give
//! `h^{1,0} = sum {-alpha m_j} - 1` and `h^{0,1} = sum {alpha m_j} - 1`.

use std::fmt;

use motspec_core::oracle::fiber::brute_fiber_class;
use motspec_core::resolution::{arc_oracle_zeta, monomial_datum, vanishing, zeta};
use motspec_core::{box_product, CoreError, Cover, Frac, Functions, MonClass, QmodZ, ResolutionDatum, SpectrumPoly};

use crate::ts::quasihomog_spectrum;

/// Weighted dual graph of an embedded resolution of a plane-curve germ.
#[derive(Clone, Debug, Default)]
pub struct DualGraph {
    /// Exceptional curves as `(id, N, nu)`.
    pub exceptional: Vec<(String, u64, u64)>,
    /// Strict-transform branches as `(id, N)`.
    pub branches: Vec<(String, u64)>,
    pub edges: Vec<(String, String)>,
}

impl DualGraph {
    pub fn new() -> DualGraph {
        DualGraph::default()
    }

    pub fn exceptional(mut self, id: &str, n: u64, nu: u64) -> DualGraph {
        self.exceptional.push((id.into(), n, nu));
        self
    }

    pub fn branch(mut self, id: &str, n: u64) -> DualGraph {
        self.branches.push((id.into(), n));
        self
    }

    pub fn edge(mut self, a: &str, b: &str) -> DualGraph {
        self.edges.push((a.into(), b.into()));
        self
    }

    fn multiplicity(&self, id: &str) -> Option<u64> {
        self.exceptional
            .iter()
            .map(|(i, n, _)| (i, *n))
            .chain(self.branches.iter().map(|(i, n)| (i, *n)))
            .find(|(i, _)| *i == id)
            .map(|(_, n)| n)
    }

    fn neighbours(&self, id: &str) -> Vec<u64> {
        self.edges
            .iter()
            .filter_map(|(a, b)| {
                if a == id {
                    self.multiplicity(b)
                } else if b == id {
                    self.multiplicity(a)
                } else {
                    None
                }
            })
            .collect()
    }

    /// Local datum of `g` over the origin.
    pub fn build(&self) -> Result<ResolutionDatum, CoreError> {
        let mut d = ResolutionDatum::new(2, true, Functions::G)?;
        for (id, n, nu) in &self.exceptional {
            d.add_component(id, 0, *n, *nu)?;
        }
        for (id, n) in &self.branches {
            d.add_component(id, 0, *n, 1)?;
        }
        for (a, b) in &self.edges {
            if self.multiplicity(a).is_none() || self.multiplicity(b).is_none() {
                return Err(CoreError::Datum(format!("edge {a}-{b} names an unknown component")));
            }
            if self.branches.iter().any(|(i, _)| i == a) && self.branches.iter().any(|(i, _)| i == b) {
                return Err(CoreError::Datum(format!("branches {a} and {b} meet outside the exceptional divisor")));
            }
        }
        for (id, n, _) in &self.exceptional {
            let m = self.neighbours(id);
            // E.E = -(sum m_j) / N must be an integer
            if m.iter().sum::<u64>() % n != 0 {
                return Err(CoreError::Datum(format!("{id}: neighbour multiplicities do not sum to a multiple of N = {n}")));
            }
            d.add_stratum(&[id], MonClass::one(0), Cover::Explicit(cover_class(*n, &m)))?;
        }
        for (a, b) in &self.edges {
            d.add_stratum(&[a, b], MonClass::one(0), Cover::Split)?;
        }
        Ok(d)
    }
}

/// Eigenspace class of the `mu_n` cover of `P^1` minus the points of
/// multiplicities `m`.
pub fn cover_class(n: u64, m: &[u64]) -> MonClass {
    let k = m.len() as i64;
    let mut out = MonClass::zero(1);
    for l in 0..n {
        let alpha = QmodZ::from_ratio(l as i64, n as i64);
        let parts: Vec<Frac> = m.iter().map(|&mj| Frac::new((l * mj % n) as i64, n as i64)).collect();
        let trivial = parts.iter().filter(|x| x.is_zero()).count() as i64;
        if trivial == k {
            out.add_monomial(vec![alpha.clone()], 1, 1, 1);
            out.add_monomial(vec![alpha], 0, 0, 1 - k);
            continue;
        }
        let up: Frac = parts.iter().fold(Frac::zero(), |acc, x| acc + x.clone());
        let down: Frac = parts
            .iter()
            .filter(|x| !x.is_zero())
            .fold(Frac::zero(), |acc, x| acc + (Frac::one() - x.clone()));
        let h01 = i64::try_from(up.numer()).expect("integral sum") - 1;
        let h10 = i64::try_from(down.numer()).expect("integral sum") - 1;
        out.add_monomial(vec![alpha.clone()], 0, 0, -trivial);
        out.add_monomial(vec![alpha.clone()], 1, 0, -h10);
        out.add_monomial(vec![alpha], 0, 1, -h01);
    }
    out
}

/// Spectrum of an isolated quasi-homogeneous singularity with the given
/// weights: `prod_i (t^w_i - t) / (1 - t^w_i)`, expanded below degree `d`.
pub fn weights_spectrum(weights: &[Frac]) -> SpectrumPoly {
    let d = Frac::from_int(weights.len() as i64);
    let below = |p: SpectrumPoly| {
        let mut out = SpectrumPoly::zero();
        for (e, m) in p.terms() {
            if *e < d {
                out.add_monomial(e.clone(), m);
            }
        }
        out
    };
    let mut acc = SpectrumPoly::one();
    for w in weights {
        let mut geo = SpectrumPoly::zero();
        let mut e = Frac::zero();
        while e < d {
            geo.add_monomial(e.clone(), 1);
            e = e + w.clone();
        }
        let mut num = SpectrumPoly::monomial(w.clone(), 1);
        num.add_monomial(Frac::one(), -1);
        acc = below(&acc * &below(&num * &geo));
    }
    acc
}

/// Which engine output a fixture pins.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expected {
    /// Hodge spectrum of the vanishing cycles.
    Spectrum(SpectrumPoly),
    /// Iterated vanishing-cycle class of a joint datum.
    Iterated(MonClass),
}

#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: String,
    pub description: String,
    pub datum: ResolutionDatum,
    pub expected: Expected,
    /// How the expected value was obtained.
    pub provenance: String,
}

impl fmt::Display for Fixture {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let value = match &self.expected {
            Expected::Spectrum(s) => format!("Sp = {s}"),
            Expected::Iterated(c) => format!("S_g(S_f^phi) = {c}"),
        };
        write!(f, "{}: {}\n  {value}\n  provenance: {}", self.name, self.description, self.provenance)
    }
}

pub fn monomial_fixture(a: u64) -> Result<Fixture, CoreError> {
    let expected = weights_spectrum(&[Frac::new(1, a as i64)]);
    Ok(Fixture {
        name: format!("x{a}"),
        description: format!("x^{a} on the line, identity resolution"),
        datum: monomial_datum(&[a])?,
        expected: Expected::Spectrum(expected),
        provenance: "weights formula with w = 1/a; zeta checked against arc counting".into(),
    })
}

pub fn a1_fixture() -> Result<Fixture, CoreError> {
    let g = DualGraph::new().exceptional("E", 2, 2).branch("L1", 1).branch("L2", 1).edge("E", "L1").edge("E", "L2");
    Ok(Fixture {
        name: "a1".into(),
        description: "xy, one blowup".into(),
        datum: g.build()?,
        expected: Expected::Spectrum(weights_spectrum(&[Frac::new(1, 2), Frac::new(1, 2)])),
        provenance: "weights formula with w = (1/2, 1/2)".into(),
    })
}

/// `x^2 + y^3`: three blowups, exceptional curves with `N = (2, 3, 6)` and
/// `nu = (2, 3, 5)`, the last one meeting the strict transform.
pub fn cusp_graph() -> DualGraph {
    DualGraph::new()
        .exceptional("E1", 2, 2)
        .exceptional("E2", 3, 3)
        .exceptional("E3", 6, 5)
        .branch("C", 1)
        .edge("E1", "E3")
        .edge("E2", "E3")
        .edge("E3", "C")
}

pub fn cusp_fixture() -> Result<Fixture, CoreError> {
    Ok(Fixture {
        name: "cusp".into(),
        description: "x^2 + y^3, three blowups".into(),
        datum: cusp_graph().build()?,
        expected: Expected::Spectrum(weights_spectrum(&[Frac::new(1, 2), Frac::new(1, 3)])),
        provenance: "weights formula with w = (1/2, 1/3); Thom-Sebastiani of (2, 3)".into(),
    })
}

/// Embedded resolution of `y (x^2 + y^(n-1))` at the origin.
pub fn d_series_graph(n: u64) -> Option<DualGraph> {
    let g = DualGraph::new();
    Some(match n {
        2 => g
            .exceptional("E1", 2, 2)
            .exceptional("E2", 4, 3)
            .branch("L", 1)
            .branch("C", 1)
            .edge("E1", "E2")
            .edge("E2", "L")
            .edge("E2", "C"),
        3 => g
            .exceptional("E", 3, 2)
            .branch("L", 1)
            .branch("C1", 1)
            .branch("C2", 1)
            .edge("E", "L")
            .edge("E", "C1")
            .edge("E", "C2"),
        4 => g
            .exceptional("E1", 3, 2)
            .exceptional("E2", 4, 3)
            .exceptional("E3", 8, 5)
            .branch("L", 1)
            .branch("C", 1)
            .edge("E1", "E3")
            .edge("E2", "E3")
            .edge("E1", "L")
            .edge("E3", "C"),
        5 => g
            .exceptional("E1", 3, 2)
            .exceptional("E2", 5, 3)
            .branch("L", 1)
            .branch("C1", 1)
            .branch("C2", 1)
            .edge("E1", "E2")
            .edge("E1", "L")
            .edge("E2", "C1")
            .edge("E2", "C2"),
        _ => return None,
    })
}

/// `f + g^n` for `f = x^2 y`, `g = y`, as a datum of the single function.
pub fn d_series_fixture(n: u64) -> Result<Fixture, CoreError> {
    let (datum, description) = if n == 1 {
        // y (x^2 + 1) is a unit times y near the origin
        let mut d = ResolutionDatum::new(2, true, Functions::G)?;
        d.add_component("L", 0, 1, 1)?;
        d.add_stratum(&["L"], MonClass::one(0), Cover::Split)?;
        (d, "y (x^2 + 1), smooth at the origin".to_string())
    } else {
        let g = d_series_graph(n).ok_or(CoreError::NonPositive("D-series fixtures cover N = 1..5"))?;
        (g.build()?, format!("y (x^2 + y^{}), embedded resolution", n - 1))
    };
    let expected = if n == 1 {
        SpectrumPoly::zero()
    } else {
        weights_spectrum(&[Frac::new(n as i64 - 1, 2 * n as i64), Frac::new(1, n as i64)])
    };
    let provenance = if n == 1 {
        "smooth germ, no vanishing cohomology".to_string()
    } else {
        format!("weights formula with w = ({}/{}, 1/{n})", n - 1, 2 * n)
    };
    Ok(Fixture {
        name: format!("d{n}"),
        description,
        datum,
        expected: Expected::Spectrum(expected),
        provenance,
    })
}

/// `f = x^2 y` at the origin, identity resolution.
pub fn x2y_fixture() -> Result<Fixture, CoreError> {
    Ok(Fixture {
        name: "x2y".into(),
        description: "x^2 y, identity resolution".into(),
        datum: monomial_datum(&[2, 1])?,
        expected: Expected::Spectrum(SpectrumPoly::t(1, 1)),
        provenance: "Milnor fiber {x^2 y = 1} = G_m, enumerated by brute-force fiber counting".into(),
    })
}

/// The pair `(x^2 y, y)` at the origin.
pub fn joint_datum() -> Result<ResolutionDatum, CoreError> {
    let mut d = ResolutionDatum::new(2, true, Functions::FG)?;
    d.add_component("X", 2, 0, 1)?;
    d.add_component("Y", 1, 1, 1)?;
    d.add_stratum(&["X", "Y"], MonClass::one(0), Cover::Split)?;
    Ok(d)
}

pub fn joint_fixture() -> Result<Fixture, CoreError> {
    Ok(Fixture {
        name: "x2y-y".into(),
        description: "(f, g) = (x^2 y, y), identity resolution".into(),
        datum: joint_datum()?,
        expected: Expected::Iterated(MonClass::mono2((1, 2), (1, 2), 0, 0).scale(-1)),
        provenance: "brute-force fiber of {x^2 y = 1, y = 1} minus the trivial-monodromy part".into(),
    })
}

/// Every shipped fixture.
pub fn all() -> Result<Vec<Fixture>, CoreError> {
    let mut out = Vec::new();
    for a in 2..=8 {
        out.push(monomial_fixture(a)?);
    }
    out.push(a1_fixture()?);
    out.push(cusp_fixture()?);
    for n in 1..=5 {
        out.push(d_series_fixture(n)?);
    }
    out.push(x2y_fixture()?);
    out.push(joint_fixture()?);
    Ok(out)
}

pub fn by_name(name: &str) -> Result<Option<Fixture>, CoreError> {
    Ok(all()?.into_iter().find(|f| f.name == name))
}

/// Engine value of a fixture, comparable with its expected value.
pub fn engine_value(f: &Fixture) -> Result<Expected, CoreError> {
    Ok(match f.expected {
        Expected::Spectrum(_) => Expected::Spectrum(motspec_core::hsp1(&vanishing(&f.datum)?)?),
        Expected::Iterated(_) => Expected::Iterated(motspec_core::resolution::iterated_vanishing(&f.datum)?),
    })
}

/// Outcome of re-running one derivation oracle.
#[derive(Clone, Debug)]
pub struct Rederivation {
    pub fixture: String,
    pub oracle: String,
    pub ok: bool,
    pub detail: String,
}

impl fmt::Display for Rederivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.ok { "ok  " } else { "FAIL" };
        write!(f, "{tag} {:<8} {:<34} {}", self.fixture, self.oracle, self.detail)
    }
}

fn record(out: &mut Vec<Rederivation>, fixture: &str, oracle: &str, ok: bool, detail: String) {
    out.push(Rederivation {
        fixture: fixture.into(),
        oracle: oracle.into(),
        ok,
        detail,
    });
}

/// Re-runs the derivation oracles of every fixture and compares with the
/// stored value and the engine.
pub fn rederive() -> Result<Vec<Rederivation>, CoreError> {
    let mut out = Vec::new();
    for f in all()? {
        let engine = engine_value(&f)?;
        match (&f.expected, &engine) {
            (Expected::Spectrum(want), Expected::Spectrum(got)) => {
                record(&mut out, &f.name, "engine vanishing spectrum", want == got, format!("{got}"));
            }
            (Expected::Iterated(want), Expected::Iterated(got)) => {
                record(&mut out, &f.name, "engine iterated vanishing class", want == got, format!("{got}"));
            }
            _ => unreachable!("engine_value mirrors the expected kind"),
        }
    }
    for a in 2..=8u64 {
        let d = monomial_datum(&[a])?;
        let ok = zeta(&d)?.expand(30) == arc_oracle_zeta(&[a], 30)?;
        record(&mut out, &format!("x{a}"), "arc counting to T^30", ok, "zeta expansion".into());
    }
    let cusp = quasihomog_spectrum(&[2, 3])?;
    let want = weights_spectrum(&[Frac::new(1, 2), Frac::new(1, 3)]);
    record(&mut out, "cusp", "Thom-Sebastiani of (2, 3)", cusp == want, format!("{cusp}"));
    // x^2 y: S_g = -[U] and S^phi = -(S_g - 1) = [U] + 1
    let fiber = brute_fiber_class(&[vec![2, 1]])?;
    let sp = motspec_core::hsp1(&(&fiber + &MonClass::one(1)))?;
    record(&mut out, "x2y", "brute-force fiber enumeration", sp == SpectrumPoly::t(1, 1), format!("{sp}"));
    // (x^2 y, y): S_g(S_f) = [U] and the trivial part is the fiber of y alone
    let joint = brute_fiber_class(&[vec![2, 1], vec![0, 1]])?;
    let trivial = box_product(&MonClass::one(1), &brute_fiber_class(&[vec![1]])?);
    let iter = (&joint - &trivial).scale(-1);
    let want = MonClass::mono2((1, 2), (1, 2), 0, 0).scale(-1);
    record(&mut out, "x2y-y", "brute-force fiber enumeration", iter == want, format!("{iter}"));
    Ok(out)
}
