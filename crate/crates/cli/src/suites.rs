//! Seeded randomized checks run by `motspec check`.

use std::fmt;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use motspec_core::convolution::psi_sigma_123_from;
use motspec_core::oracle::fermat::{collapse_monomial, eigenspaces_inverse_labels, stated_table, Curve};
use motspec_core::oracle::fiber::brute_fiber_class;
use motspec_core::resolution::{arc_oracle_zeta, monomial_datum, nearby, zeta};
use motspec_core::{
    box_product, cone_limit, cone_series_truncated, convolve, delta, delta_n, euler_char, fiber_class, hsp1, hsp2,
    pi_n_shriek, psi_sigma, psi_sigma_123, psi_table, BiSpectrumPoly, Cone, CoreError, ExponentMatrix, Frac, LinForm,
    MonClass, QmodZ, RationalSeries, Relation, SeriesTerm, SpectrumPoly,
};

use crate::fixtures::{self, engine_value};
use crate::steenbrink::d_series_check;
use crate::ts::quasihomog_spectrum;

pub const SUITES: [&str; 4] = ["rings", "cones", "psi", "steenbrink"];

/// One named property with its case count and failing cases.
#[derive(Clone, Debug)]
pub struct CheckResult {
    pub suite: &'static str,
    pub name: &'static str,
    pub cases: usize,
    pub failures: Vec<String>,
    /// Informational lines, e.g. cases outside a theorem's hypothesis.
    pub notes: Vec<String>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed() { "ok  " } else { "FAIL" };
        write!(f, "{tag} {}/{} ({} cases)", self.suite, self.name, self.cases)?;
        for n in &self.notes {
            write!(f, "\n     note: {n}")?;
        }
        for x in self.failures.iter().take(5) {
            write!(f, "\n     {x}")?;
        }
        Ok(())
    }
}

struct Check {
    result: CheckResult,
}

impl Check {
    fn new(suite: &'static str, name: &'static str) -> Check {
        Check {
            result: CheckResult {
                suite,
                name,
                cases: 0,
                failures: Vec::new(),
                notes: Vec::new(),
            },
        }
    }

    fn case(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.result.cases += 1;
        if !ok {
            self.result.failures.push(what());
        }
    }

    fn error(&mut self, e: CoreError) {
        self.result.cases += 1;
        self.result.failures.push(format!("error: {e}"));
    }

    fn done(self) -> CheckResult {
        self.result
    }
}

/// Runs `body` and turns an error into a failing case.
fn guarded(c: &mut Check, body: impl FnOnce(&mut Check) -> Result<(), CoreError>) {
    if let Err(e) = body(c) {
        c.error(e);
    }
}

fn residue(rng: &mut ChaCha8Rng, max_den: i64) -> QmodZ {
    let d = rng.gen_range(1..=max_den);
    QmodZ::from_ratio(rng.gen_range(0..d), d)
}

fn frac(rng: &mut ChaCha8Rng, max_den: i64) -> Frac {
    let d = rng.gen_range(1..=max_den);
    Frac::new(rng.gen_range(-3 * d..=3 * d), d)
}

/// Random class with denominators at most `max_den` and `|p|, |q| <= 5`.
pub fn random_class(rng: &mut ChaCha8Rng, arity: usize, max_den: i64) -> MonClass {
    let mut out = MonClass::zero(arity);
    for _ in 0..rng.gen_range(0..5) {
        let eigen = (0..arity).map(|_| residue(rng, max_den)).collect();
        out.add_monomial(eigen, rng.gen_range(-5..=5), rng.gen_range(-5..=5), rng.gen_range(-3..=3));
    }
    out
}

fn random_spectrum(rng: &mut ChaCha8Rng) -> SpectrumPoly {
    let mut out = SpectrumPoly::zero();
    for _ in 0..rng.gen_range(0..5) {
        out.add_monomial(frac(rng, 12), rng.gen_range(-3..=3));
    }
    out
}

fn random_bi(rng: &mut ChaCha8Rng) -> BiSpectrumPoly {
    let mut out = BiSpectrumPoly::zero();
    for _ in 0..rng.gen_range(0..5) {
        out.add_monomial(residue(rng, 12), residue(rng, 12), rng.gen_range(-3..=3), rng.gen_range(-3..=3));
    }
    out
}

pub fn rings(rng: &mut ChaCha8Rng) -> Vec<CheckResult> {
    let mut out = Vec::new();

    let mut c = Check::new("rings", "spectrum ring axioms");
    for _ in 0..200 {
        let (a, b, x) = (random_spectrum(rng), random_spectrum(rng), random_spectrum(rng));
        let ok = &a + &b == &b + &a
            && &a * &b == &b * &a
            && &(&a * &b) * &x == &a * &(&b * &x)
            && &a * &(&b + &x) == &(&a * &b) + &(&a * &x)
            && &a * &SpectrumPoly::one() == a
            && (&a + &(-&a)).is_zero();
        c.case(ok, || format!("a = {a}, b = {b}, c = {x}"));
    }
    out.push(c.done());

    let mut c = Check::new("rings", "class ring axioms and L");
    for _ in 0..200 {
        let arity = rng.gen_range(0..=2);
        let (a, b, x) = (random_class(rng, arity, 12), random_class(rng, arity, 12), random_class(rng, arity, 12));
        let l = MonClass::lefschetz(arity);
        let ok = &a + &b == &b + &a
            && &a * &b == &b * &a
            && &(&a * &b) * &x == &a * &(&b * &x)
            && &a * &(&b + &x) == &(&a * &b) + &(&a * &x)
            && &a * &MonClass::one(arity) == a
            && &(&a * &l) * &MonClass::lefschetz_pow(arity, -1) == a;
        c.case(ok, || format!("a = {a}, b = {b}, c = {x}"));
    }
    out.push(c.done());

    let mut c = Check::new("rings", "hsp1 additive, L shifts by t");
    for _ in 0..200 {
        let (a, b) = (random_class(rng, 1, 12), random_class(rng, 1, 12));
        guarded(&mut c, |c| {
            let sum = hsp1(&(&a + &b))? == &hsp1(&a)? + &hsp1(&b)?;
            let shift = hsp1(&(&a * &MonClass::lefschetz(1)))? == &hsp1(&a)? * &SpectrumPoly::t(1, 1);
            c.case(sum && shift, || format!("a = {a}, b = {b}"));
            Ok(())
        });
    }
    out.push(c.done());

    let mut c = Check::new("rings", "delta and delta_N additive, delta_1 = delta");
    for _ in 0..200 {
        let (a, b) = (random_bi(rng), random_bi(rng));
        let n = rng.gen_range(1..=6);
        let sum = &a + &b;
        let ok = delta(&sum) == &delta(&a) + &delta(&b)
            && delta_n(&sum, n) == &delta_n(&a, n) + &delta_n(&b, n)
            && delta_n(&a, 1) == delta(&a);
        c.case(ok, || format!("a = {a}, b = {b}, N = {n}"));
    }
    out.push(c.done());

    let mut c = Check::new("rings", "fiber class vs torsion enumeration");
    let mut tried = 0;
    while tried < 100 {
        let r = rng.gen_range(1..=2);
        let m = rng.gen_range(r..=3);
        let rows: Vec<Vec<i64>> = (0..r).map(|_| (0..m).map(|_| rng.gen_range(0..=4)).collect()).collect();
        let (Ok(mat), Ok(brute)) = (ExponentMatrix::from_rows(rows.clone()), brute_fiber_class(&rows)) else {
            continue;
        };
        tried += 1;
        match fiber_class(&mat) {
            Ok(x) => c.case(x == brute, || format!("{rows:?}: {x} vs {brute}")),
            Err(e) => c.error(e),
        }
    }
    out.push(c.done());
    out
}

/// Unimodular generators obtained from the identity by column additions.
fn unimodular(rng: &mut ChaCha8Rng, d: usize) -> Vec<Vec<i64>> {
    let mut g: Vec<Vec<i64>> = (0..d).map(|i| (0..d).map(|j| i64::from(i == j)).collect()).collect();
    for _ in 0..rng.gen_range(0..3) {
        let (a, b) = (rng.gen_range(0..d), rng.gen_range(0..d));
        if a != b {
            let src = g[b].clone();
            for (x, y) in g[a].iter_mut().zip(src) {
                *x += y;
            }
        }
    }
    g
}

pub fn cones(rng: &mut ChaCha8Rng) -> Vec<CheckResult> {
    let mut out = Vec::new();

    let mut c = Check::new("cones", "unimodular open cones have limit (-1)^dim");
    for _ in 0..40 {
        let d = rng.gen_range(1..=4);
        let gens = unimodular(rng, d);
        let ell = LinForm((0..d).map(|_| rng.gen_range(1..=3)).collect());
        let nu = LinForm((0..d).map(|_| rng.gen_range(1..=3)).collect());
        guarded(&mut c, |c| {
            let cone = Cone::open_simplicial(&gens)?;
            let factors: Vec<(i64, u64)> = gens.iter().map(|g| (-nu.eval(g), ell.eval(g) as u64)).collect();
            let mut closed = RationalSeries::zero(0);
            closed.push(SeriesTerm::new(MonClass::one(0), factors)?)?;
            let sign = if d % 2 == 0 { 1 } else { -1 };
            let ok = cone_series_truncated(&cone, &ell, &nu, 15)? == closed.expand(15)
                && cone_limit(&cone, &ell, &nu)? == sign
                && closed.limit() == MonClass::one(0).scale(sign);
            c.case(ok, || format!("generators {gens:?}"));
            Ok(())
        });
    }
    out.push(c.done());

    let mut c = Check::new("cones", "inequality cones have limit 0");
    let mut tried = 0;
    while tried < 50 {
        let n = rng.gen_range(2..=4);
        let split = rng.gen_range(1..n);
        tried += 1;
        let form: Vec<i64> = (0..n)
            .map(|i| {
                let a = rng.gen_range(1..=5);
                if i < split {
                    -a
                } else {
                    a
                }
            })
            .collect();
        let ell = LinForm((0..n).map(|_| rng.gen_range(1..=3)).collect());
        guarded(&mut c, |c| {
            let cone = Cone::orthant(n)?.with(LinForm(form.clone()), Relation::Ge)?;
            let lim = cone_limit(&cone, &ell, &ell)?;
            c.case(lim == 0, || format!("form {form:?}: limit {lim}"));
            Ok(())
        });
    }
    out.push(c.done());

    let mut c = Check::new("cones", "Euler characteristic additive under splitting");
    for _ in 0..100 {
        let d = rng.gen_range(1..=4);
        let mut cone = Cone::orthant(d).expect("positive dimension");
        for _ in 0..rng.gen_range(0..3) {
            let f = LinForm((0..d).map(|_| rng.gen_range(-3..=3)).collect());
            let rel = [Relation::Ge, Relation::Gt, Relation::Eq][rng.gen_range(0..3)];
            if let Err(e) = cone.constrain(f, rel) {
                c.error(e);
            }
        }
        let h: Vec<i64> = (0..d).map(|_| rng.gen_range(-3..=3)).collect();
        let neg: Vec<i64> = h.iter().map(|x| -x).collect();
        guarded(&mut c, |c| {
            let pos = cone.clone().with(LinForm(h.clone()), Relation::Gt)?;
            let wall = cone.clone().with(LinForm(h.clone()), Relation::Eq)?;
            let below = cone.clone().with(LinForm(neg), Relation::Gt)?;
            let ok = euler_char(&cone) == euler_char(&pos) + euler_char(&wall) + euler_char(&below);
            c.case(ok, || format!("hyperplane {h:?}"));
            Ok(())
        });
    }
    out.push(c.done());
    out
}

/// `(1 - u)/(1 - u^(1/N))` applied after `u -> u^(1/N)`, residues in `[0, 1)`.
fn pushforward_spectrum(p: &BiSpectrumPoly, n: u64) -> BiSpectrumPoly {
    let mut out = BiSpectrumPoly::zero();
    let nf = Frac::from_int(n as i64);
    for (k, m) in p.terms() {
        let b = k.b.s() / &nf;
        for j in 0..n {
            out.add_monomial(k.a.clone(), QmodZ::new(&(&b + &Frac::new(j as i64, n as i64))), k.c, m);
        }
    }
    out
}

pub fn psi(rng: &mut ChaCha8Rng) -> Vec<CheckResult> {
    let mut out = Vec::new();

    let mut c = Check::new("psi", "hsp1 of the collapse equals delta of hsp2");
    for _ in 0..500 {
        let x = random_class(rng, 2, 12);
        guarded(&mut c, |c| {
            let ok = hsp1(&psi_sigma(&x, (1, 2))?)? == delta(&hsp2(&x)?);
            c.case(ok, || format!("x = {x}"));
            Ok(())
        });
    }
    out.push(c.done());

    let mut c = Check::new("psi", "convolution commutative, associative, unital");
    for _ in 0..200 {
        let (x, y, z) = (random_class(rng, 1, 12), random_class(rng, 1, 12), random_class(rng, 1, 12));
        guarded(&mut c, |c| {
            let unit = MonClass::one(1);
            let ok = convolve(&x, &unit)? == x
                && convolve(&x, &y)? == convolve(&y, &x)?
                && convolve(&convolve(&x, &y)?, &z)? == convolve(&x, &convolve(&y, &z)?)?;
            c.case(ok, || format!("x = {x}, y = {y}, z = {z}"));
            Ok(())
        });
    }
    out.push(c.done());

    let mut c = Check::new("psi", "three-slot collapse independent of order");
    for _ in 0..200 {
        let x = random_class(rng, 3, 12);
        guarded(&mut c, |c| {
            let a = psi_sigma_123(&x)?;
            let ok = psi_sigma_123_from(&x, (1, 3))? == a && psi_sigma_123_from(&x, (2, 3))? == a;
            c.case(ok, || format!("x = {x}"));
            Ok(())
        });
    }
    out.push(c.done());

    let mut c = Check::new("psi", "three-fold join multiplies spectra");
    for _ in 0..200 {
        let (x, y, z) = (random_class(rng, 1, 12), random_class(rng, 1, 12), random_class(rng, 1, 12));
        guarded(&mut c, |c| {
            let joint = box_product(&box_product(&x, &y), &z);
            let ok = hsp1(&psi_sigma_123(&joint)?)? == &(&hsp1(&x)? * &hsp1(&y)?) * &hsp1(&z)?;
            c.case(ok, || format!("x = {x}, y = {y}, z = {z}"));
            Ok(())
        });
    }
    out.push(c.done());

    let mut c = Check::new("psi", "pushforward along u -> u^N");
    for _ in 0..100 {
        let x = random_class(rng, 2, 12);
        let n = rng.gen_range(1..=6);
        guarded(&mut c, |c| {
            let ok = hsp2(&pi_n_shriek(&x, 2, n)?)? == pushforward_spectrum(&hsp2(&x)?, n);
            c.case(ok, || format!("x = {x}, N = {n}"));
            Ok(())
        });
    }
    out.push(c.done());

    let mut c = Check::new("psi", "table vs Fermat curve eigenspaces");
    for n in 2..=8u64 {
        for curve in [Curve::One, Curve::Zero] {
            c.case(eigenspaces_inverse_labels(curve, n) == stated_table(curve, n), || {
                format!("{curve:?} n = {n}")
            });
        }
        for a in 0..n as i64 {
            for b in 0..n as i64 {
                let (alpha, beta) = (QmodZ::from_ratio(a, n as i64), QmodZ::from_ratio(b, n as i64));
                let (e, p, q) = psi_table(&alpha, &beta, 0, 0);
                let ok = collapse_monomial(&alpha, &beta, 0, 0, n) == MonClass::monomial(vec![e], p, q, 1);
                c.case(ok, || format!("n = {n}, ({alpha}, {beta})"));
            }
        }
    }
    out.push(c.done());
    out
}

pub fn steenbrink(_rng: &mut ChaCha8Rng) -> Vec<CheckResult> {
    let mut out = Vec::new();

    let mut c = Check::new("steenbrink", "fixtures agree with the engine");
    guarded(&mut c, |c| {
        for f in fixtures::all()? {
            let got = engine_value(&f)?;
            let ok = got == f.expected;
            c.case(ok, || format!("{}: engine {got:?}", f.name));
        }
        Ok(())
    });
    out.push(c.done());

    let mut c = Check::new("steenbrink", "x^a zeta vs arc counting, nearby = -limit");
    for a in 2..=8u64 {
        guarded(&mut c, |c| {
            let d = monomial_datum(&[a])?;
            let z = zeta(&d)?;
            let ok = z.expand(30) == arc_oracle_zeta(&[a], 30)? && nearby(&d)? == -&z.limit();
            c.case(ok, || format!("a = {a}"));
            Ok(())
        });
    }
    out.push(c.done());

    let mut c = Check::new("steenbrink", "cusp: Thom-Sebastiani vs resolution");
    guarded(&mut c, |c| {
        let ts = quasihomog_spectrum(&[2, 3])?;
        let engine = hsp1(&motspec_core::resolution::vanishing(&fixtures::cusp_graph().build()?)?)?;
        let want = &SpectrumPoly::t(5, 6) + &SpectrumPoly::t(7, 6);
        c.case(ts == engine && engine == want, || format!("ts {ts}, engine {engine}"));
        Ok(())
    });
    out.push(c.done());

    let mut c = Check::new("steenbrink", "D-series jumps, f = x^2 y, g = y");
    for n in 1..=5 {
        guarded(&mut c, |c| {
            let r = d_series_check(n)?;
            if !r.report.in_hypothesis() {
                c.result.notes.push(format!(
                    "N = {n} <= threshold {}: out of hypothesis, LHS - RHS = {}",
                    r.report.threshold,
                    r.report.difference()
                ));
            }
            c.case(r.passed(), || format!("N = {n}\n{}", r.report));
            Ok(())
        });
    }
    out.push(c.done());
    out
}

/// Runs the named suite (or `all`) with a fixed seed.
pub fn run(name: &str, seed: u64) -> Option<Vec<CheckResult>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pick: Vec<&str> = match name {
        "all" => SUITES.to_vec(),
        s if SUITES.contains(&s) => vec![s],
        _ => return None,
    };
    let mut out = Vec::new();
    for s in pick {
        out.extend(match s {
            "rings" => rings(&mut rng),
            "cones" => cones(&mut rng),
            "psi" => psi(&mut rng),
            _ => steenbrink(&mut rng),
        });
    }
    Some(out)
}
