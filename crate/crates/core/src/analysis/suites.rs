//! Suite runners behind `weylcheb verify`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{Signed, ToPrimitive};
use serde::Serialize;
use serde_json::{json, Value};

use super::laplacian::{Frame, LaplacianCheck};
use super::{
    dominant_box, random_alpha_point, random_dominant, rng_for, symmetry_suite, torus_inner_product, GridSamples,
};
use crate::chebyshev::{
    classical_identities_check, classical_t, classical_u, fundamental_values, generic_threshold,
    is_congruence_homogeneous, recursion_relation, substitute_p, PolynomialBuilder, XPolynomial,
};
use crate::error::{Error, Result};
use crate::exp_ring::{decompose_into_c, exp_sum, multiply};
use crate::lie::{congruence_number, omega_to_e, Rank, Weight};
use crate::orbit_functions::matrix::{determinant_leibniz, determinant_lu, permanent_naive, permanent_ryser};
use crate::orbit_functions::{
    det_d_minus, eval_c, eval_e, eval_s, exponential_matrix, perm_d_plus, sdet_d_alt, OrbitFunction, OrbitKind,
};
use crate::weyl;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    All,
    Ortho,
    Laplace,
    Symmetry,
    Chebyshev,
    Detforms,
}

impl Suite {
    pub const EACH: [Suite; 5] = [Suite::Ortho, Suite::Laplace, Suite::Symmetry, Suite::Chebyshev, Suite::Detforms];

    fn default_rank_bound(self) -> usize {
        match self {
            Suite::Detforms => 4,
            _ => 3,
        }
    }

    fn max_rank_bound(self) -> usize {
        match self {
            Suite::Ortho => 4,
            Suite::Detforms => 6,
            _ => 5,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::All => "all",
            Suite::Ortho => "ortho",
            Suite::Laplace => "laplace",
            Suite::Symmetry => "symmetry",
            Suite::Chebyshev => "chebyshev",
            Suite::Detforms => "detforms",
        })
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "all" => Ok(Suite::All),
            "ortho" => Ok(Suite::Ortho),
            "laplace" => Ok(Suite::Laplace),
            "symmetry" => Ok(Suite::Symmetry),
            "chebyshev" => Ok(Suite::Chebyshev),
            "detforms" => Ok(Suite::Detforms),
            _ => Err(Error::UnknownKind(s.to_string())),
        }
    }
}

/// Largest coordinate accepted for weights drawn by the suites.
pub const MAX_COORD_BOUND: i64 = 4;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SuiteConfig {
    /// Highest rank tested; each suite has its own default.
    pub rank_bound: Option<usize>,
    pub coord_bound: i64,
    pub seed: u64,
    /// Multiplies every floating-point tolerance.
    pub tolerance_scale: f64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { rank_bound: None, coord_bound: 3, seed: super::DEFAULT_SEED, tolerance_scale: 1.0 }
    }
}

impl SuiteConfig {
    fn ranks(&self, suite: Suite) -> Vec<Rank> {
        let top = self.rank_bound.unwrap_or_else(|| suite.default_rank_bound());
        (1..=top).map(|n| Rank::with_limit(n, crate::lie::HARD_MAX_RANK).expect("validated")).collect()
    }

    fn validate(&self, suite: Suite) -> Result<()> {
        let suites: Vec<Suite> = if suite == Suite::All { Suite::EACH.to_vec() } else { vec![suite] };
        if let Some(r) = self.rank_bound {
            let max = suites.iter().map(|s| s.max_rank_bound()).min().unwrap_or(1);
            if r == 0 || r > max {
                return Err(Error::RankOutOfRange { rank: r, max });
            }
        }
        if !(1..=MAX_COORD_BOUND).contains(&self.coord_bound) {
            return Err(Error::BoundOutOfRange {
                name: "coordinate bound",
                value: self.coord_bound,
                max: MAX_COORD_BOUND,
            });
        }
        if !(self.tolerance_scale.is_finite() && self.tolerance_scale > 0.0) {
            return Err(Error::InvalidTolerance(self.tolerance_scale));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub suite: Suite,
    pub name: String,
    pub passed: bool,
    pub summary: String,
    pub data: Value,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub seed: u64,
    pub rank_bound: Option<usize>,
    pub coord_bound: i64,
    pub tolerance_scale: f64,
    pub checks: Vec<CheckResult>,
    pub passed: bool,
}

impl SuiteReport {
    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> + '_ {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "suite {} (seed {}, rank bound {}, coord bound {}, tolerance scale {})",
            self.suite,
            self.seed,
            self.rank_bound.map_or_else(|| "default".to_string(), |r| r.to_string()),
            self.coord_bound,
            self.tolerance_scale
        )?;
        for c in &self.checks {
            writeln!(f, "{} {}/{}: {}", if c.passed { "PASS" } else { "FAIL" }, c.suite, c.name, c.summary)?;
        }
        let failed = self.failures().count();
        write!(f, "{} of {} checks passed", self.checks.len() - failed, self.checks.len())
    }
}

struct Recorder {
    suite: Suite,
    checks: Vec<CheckResult>,
}

impl Recorder {
    fn record(&mut self, name: impl Into<String>, passed: bool, summary: impl Into<String>, data: Value) {
        self.checks.push(CheckResult { suite: self.suite, name: name.into(), passed, summary: summary.into(), data });
    }
}

pub fn run_suite(suite: Suite, config: &SuiteConfig) -> Result<SuiteReport> {
    config.validate(suite)?;
    let mut checks = Vec::new();
    let suites: Vec<Suite> = if suite == Suite::All { Suite::EACH.to_vec() } else { vec![suite] };
    for s in suites {
        let mut rec = Recorder { suite: s, checks: Vec::new() };
        match s {
            Suite::Ortho => ortho(config, &mut rec)?,
            Suite::Laplace => laplace(config, &mut rec)?,
            Suite::Symmetry => symmetry(config, &mut rec)?,
            Suite::Chebyshev => chebyshev(config, &mut rec)?,
            Suite::Detforms => detforms(config, &mut rec)?,
            Suite::All => unreachable!("expanded above"),
        }
        checks.extend(rec.checks);
    }
    let passed = checks.iter().all(|c| c.passed);
    Ok(SuiteReport {
        suite,
        seed: config.seed,
        rank_bound: config.rank_bound,
        coord_bound: config.coord_bound,
        tolerance_scale: config.tolerance_scale,
        checks,
        passed,
    })
}

/// Quadrature is run for ranks up to this; the grid has `N^n` points.
const QUADRATURE_MAX_RANK: usize = 3;
pub const QUADRATURE_POINTS: usize = 16;
const QUADRATURE_TOLERANCE: f64 = 1e-9;

fn ortho(config: &SuiteConfig, rec: &mut Recorder) -> Result<()> {
    for rank in config.ranks(Suite::Ortho) {
        let weights = dominant_box(rank, config.coord_bound);
        for kind in OrbitKind::ALL {
            let labels: Vec<&Weight> =
                weights.iter().filter(|w| kind != OrbitKind::S || w.is_strictly_dominant()).collect();
            let sums = labels.iter().map(|w| exp_sum(w, kind)).collect::<Result<Vec<_>>>()?;
            let diagonal = |w: &Weight| -> Result<BigInt> {
                let o = weyl::orbit(w)?;
                Ok(BigInt::from(match kind {
                    OrbitKind::C => o.len(),
                    OrbitKind::S => rank.weyl_order() as usize,
                    OrbitKind::E => o.even_len(),
                }))
            };
            let mut exact = vec![vec![BigInt::from(0); labels.len()]; labels.len()];
            let mut max_dev = BigInt::from(0);
            let mut pairs = 0usize;
            for i in 0..labels.len() {
                for j in i..labels.len() {
                    let v = torus_inner_product(&sums[i], &sums[j])?;
                    let expected = if i == j { diagonal(labels[i])? } else { BigInt::from(0) };
                    let dev = (&v - expected).abs();
                    if dev > max_dev {
                        max_dev = dev;
                    }
                    exact[i][j] = v;
                    pairs += 1;
                }
            }
            rec.record(
                format!("{rank} {kind} exact"),
                max_dev == BigInt::from(0),
                format!("{pairs} pairs, max |<F,F'> - expected| = {max_dev}"),
                json!({"rank": rank, "kind": kind, "pairs": pairs, "max_deviation": max_dev.to_i64()}),
            );

            if rank.get() > QUADRATURE_MAX_RANK {
                continue;
            }
            let grids = labels
                .iter()
                .map(|w| Ok(GridSamples::new(&OrbitFunction::new(kind, w)?, QUADRATURE_POINTS)))
                .collect::<Result<Vec<_>>>()?;
            let mut max_dev = 0.0f64;
            let mut flagged = 0usize;
            for i in 0..labels.len() {
                for j in i..labels.len() {
                    let q = grids[i].inner(&grids[j]);
                    let expected = exact[i][j].to_f64().unwrap_or(f64::NAN);
                    max_dev = max_dev.max((q.value() - Complex64::new(expected, 0.0)).norm());
                    flagged += q.aliasing_possible as usize;
                }
            }
            rec.record(
                format!("{rank} {kind} quadrature N={QUADRATURE_POINTS}"),
                max_dev < QUADRATURE_TOLERANCE * config.tolerance_scale,
                format!("max deviation {max_dev:.3e}, {flagged} pairs below the sampling bound"),
                json!({"rank": rank, "kind": kind, "points_per_axis": QUADRATURE_POINTS,
                       "max_deviation": max_dev, "aliasing_flagged_pairs": flagged}),
            );
        }
    }

    // Undersampling must show up as a wrong value.
    let l = Weight::from_coords(vec![2])?;
    let q = super::quadrature_inner_product(OrbitKind::C, &l, &l, 4)?;
    let dev = (q.value() - Complex64::new(2.0, 0.0)).norm();
    rec.record(
        "aliasing negative test",
        q.aliasing_possible && dev > 0.5,
        format!("A1 C(2) with N=4 gives {:.6} instead of 2 (flagged: {})", q.re, q.aliasing_possible),
        json!({"value": q.re, "expected": 2, "flagged": q.aliasing_possible}),
    );
    Ok(())
}

pub const LAPLACIAN_STEP: f64 = 1e-3;
pub const LAPLACIAN_POINTS: usize = 20;
pub const LAPLACIAN_TOLERANCE: f64 = 1e-4;

fn laplace(config: &SuiteConfig, rec: &mut Recorder) -> Result<()> {
    let mut rng = rng_for(config.seed, 2);
    for rank in config.ranks(Suite::Laplace) {
        let mut labels = vec![Weight::fundamental(rank, 1)?, Weight::rho(rank)];
        let strict: Vec<i64> =
            (0..rank.get()).map(|_| rand::Rng::gen_range(&mut rng, 1..=config.coord_bound.min(2))).collect();
        labels.push(Weight::new(rank, strict)?);
        labels.dedup();
        let mut cases = vec![(OrbitKind::C, Weight::zero(rank))];
        for l in &labels {
            for kind in OrbitKind::ALL {
                if kind != OrbitKind::S || l.is_strictly_dominant() {
                    cases.push((kind, l.clone()));
                }
            }
        }
        for (kind, l) in cases {
            let c = LaplacianCheck::run(kind, &l, LAPLACIAN_STEP, LAPLACIAN_POINTS, &mut rng, Frame::GramSchmidt)?;
            record_laplacian(rec, &c, config.tolerance_scale);
        }
        let c = LaplacianCheck::run(OrbitKind::S, &Weight::rho(rank), LAPLACIAN_STEP, 5, &mut rng, Frame::Helmert)?;
        record_laplacian(rec, &c, config.tolerance_scale);
    }
    Ok(())
}

fn record_laplacian(rec: &mut Recorder, c: &LaplacianCheck, scale: f64) {
    let ratio_ok = c.norm_squared == 0.0 || (3.0..=5.0).contains(&c.aggregate_ratio);
    let passed = !c.inconclusive && c.points > 0 && c.max_relative_error < LAPLACIAN_TOLERANCE * scale && ratio_ok;
    rec.record(
        format!("{} {}{} {:?}", c.lambda.rank(), c.kind, c.lambda, c.frame),
        passed,
        format!(
            "{} points, max rel err {:.3e} (h) {:.3e} (h/2), ratio {:.3} [per point {:.3}..{:.3}]",
            c.points,
            c.max_relative_error,
            c.max_relative_error_half,
            c.aggregate_ratio,
            c.min_point_ratio,
            c.max_point_ratio
        ),
        serde_json::to_value(c).unwrap_or(Value::Null),
    );
}

pub const SYMMETRY_TRIALS: usize = 100;
pub const SYMMETRY_TOLERANCE: f64 = 1e-12;

fn symmetry(config: &SuiteConfig, rec: &mut Recorder) -> Result<()> {
    let mut rng = rng_for(config.seed, 3);
    for rank in config.ranks(Suite::Symmetry) {
        let mut labels = vec![Weight::zero(rank), Weight::rho(rank)];
        for _ in 0..3 {
            labels.push(random_dominant(&mut rng, rank, config.coord_bound));
        }
        for l in labels {
            let r = symmetry_suite(&l, SYMMETRY_TRIALS, SYMMETRY_TOLERANCE * config.tolerance_scale, &mut rng)?;
            rec.record(
                format!("{rank} {l}"),
                r.passed,
                format!("{} trials, max deviation / |W_λ| = {:.3e}", r.trials, r.max_deviation()),
                serde_json::to_value(&r).unwrap_or(Value::Null),
            );
        }
    }
    Ok(())
}

fn chebyshev(config: &SuiteConfig, rec: &mut Recorder) -> Result<()> {
    let a1 = Rank::new(1)?;
    let mut b1 = PolynomialBuilder::new(a1);
    let mut bad = Vec::new();
    for m in 0..=20usize {
        let l = Weight::new(a1, vec![m as i64])?;
        let t = b1.poly_t(&l)?.to_classical()?;
        let expected_t = if m == 0 { classical_t(0) } else { classical_t(m).scale(&BigInt::from(2)) };
        let u = b1.poly_u(&l)?.to_classical()?;
        if t != expected_t || u != classical_u(m) {
            bad.push(m);
        }
    }
    rec.record(
        "A1 equivalence m=0..20",
        bad.is_empty(),
        format!("T(m) at X=2z equals 2 T_m (m >= 1) and U(m) equals U_m; mismatches {bad:?}"),
        json!({"mismatches": bad}),
    );

    type Build = fn(&mut PolynomialBuilder, &Weight) -> Result<XPolynomial>;
    let listed: [(&str, i64, Build, &str); 6] = [
        ("C_2", 2, PolynomialBuilder::poly_t, "X^2 - 2"),
        ("C_3", 3, PolynomialBuilder::poly_t, "X^3 - 3X"),
        ("C_4", 4, PolynomialBuilder::poly_t, "X^4 - 4X^2 + 2"),
        ("chi_2", 2, PolynomialBuilder::poly_u, "X^2 - 1"),
        ("chi_3", 3, PolynomialBuilder::poly_u, "X^3 - 2X"),
        ("chi_4", 4, PolynomialBuilder::poly_u, "X^4 - 3X^2 + 1"),
    ];
    for (name, m, build, expected) in listed {
        let got = build(&mut b1, &Weight::new(a1, vec![m])?)?.to_string();
        rec.record(
            format!("listed {name}"),
            got == expected,
            got.to_string(),
            json!({"got": got, "expected": expected}),
        );
    }

    let failing: Vec<usize> = (0..=20).filter(|&m| !classical_identities_check(m).passed()).collect();
    rec.record(
        "classical identities m=0..20",
        failing.is_empty(),
        format!("derivative, U-difference and both mixed relations; failing {failing:?}"),
        json!({"failing": failing}),
    );

    let mut rng = rng_for(config.seed, 4);
    for rank in config.ranks(Suite::Chebyshev).into_iter().filter(|r| r.get() <= 3) {
        let mut builder = PolynomialBuilder::new(rank);
        let weights = dominant_box(rank, config.coord_bound.min(3));
        let points: Vec<_> = (0..5).map(|_| random_alpha_point(&mut rng, rank)).collect();
        let values = points.iter().map(fundamental_values).collect::<Result<Vec<_>>>()?;
        let mut max_rel = 0.0f64;
        let mut t_homogeneous = true;
        let mut u_homogeneous = true;
        for l in &weights {
            let p = builder.poly_t(l)?;
            t_homogeneous &= is_congruence_homogeneous(&p, l);
            u_homogeneous &= is_congruence_homogeneous(&builder.poly_u(l)?, l);
            for (x, v) in points.iter().zip(&values) {
                let expected = eval_c(l, x)?;
                let got = p.evaluate(v)?;
                max_rel = max_rel.max((got - expected).norm() / expected.norm().max(1.0));
            }
        }
        rec.record(
            format!("{rank} evaluation consistency"),
            max_rel < 1e-9,
            format!("{} polynomials at 5 points, max relative deviation {max_rel:.3e}", weights.len()),
            json!({"rank": rank, "polynomials": weights.len(), "max_relative_deviation": max_rel}),
        );
        rec.record(
            format!("{rank} congruence classes of T"),
            t_homogeneous,
            "every monomial of T(λ) lies in the class of λ",
            json!({"rank": rank, "homogeneous": t_homogeneous}),
        );
        rec.record(
            format!("{rank} congruence classes of U"),
            u_homogeneous,
            "every monomial of U(λ) lies in the class of λ",
            json!({"rank": rank, "homogeneous": u_homogeneous}),
        );

        for j in 1..=rank.get() {
            let t = generic_threshold(rank, j, 4, 1)?;
            let a = Weight::new(rank, vec![t.threshold.unwrap_or(4); rank.get()])?;
            let r = recursion_relation(j, &a)?;
            rec.record(
                format!("{rank} recursion X{j}"),
                t.threshold.is_some() && r.term_count() == r.generic_term_count(),
                format!(
                    "{} terms (expected {}), generic from coordinate {}",
                    r.term_count(),
                    r.generic_term_count(),
                    t.threshold.map_or_else(|| "none".to_string(), |v| v.to_string())
                ),
                json!({"threshold": t, "relation": r.to_json()}),
            );
        }
    }

    let a2 = Rank::new(2)?;
    for (m1, m2) in [(1i64, 1i64), (2, 1), (1, 2)] {
        let l = Weight::new(a2, vec![m1, m2])?;
        let pc = substitute_p(&l, OrbitKind::C)?;
        let ps = substitute_p(&l, OrbitKind::S)?;
        let listing = [
            ([m1, m2], 1),
            ([-m1, m1 + m2], -1),
            ([m1 + m2, -m2], -1),
            ([-m2, -m1], -1),
            ([-m1 - m2, m1], 1),
            ([m2, -m1 - m2], 1),
        ];
        let ok = pc.len() == 6
            && ps.len() == 6
            && listing.iter().all(|(e, s)| pc.coeff(e) == BigInt::from(1) && ps.coeff(e) == BigInt::from(*s));
        rec.record(
            format!("A2 P^C, P^S at {l}"),
            ok,
            format!("P^C = {pc}; P^S = {ps}"),
            json!({"lambda": l, "PC": pc.to_json(&l, crate::chebyshev::PolyKind::PC)["terms"],
                   "PS": ps.to_json(&l, crate::chebyshev::PolyKind::PS)["terms"]}),
        );
    }
    Ok(())
}

pub const DETFORM_SAMPLES: usize = 100;
pub const DETFORM_TOLERANCE: f64 = 1e-9;

fn detforms(config: &SuiteConfig, rec: &mut Recorder) -> Result<()> {
    let mut rng = rng_for(config.seed, 5);
    for rank in config.ranks(Suite::Detforms) {
        let (mut plus, mut minus, mut alt, mut half, mut routes) = (0.0f64, 0.0f64, 0.0f64, 0.0f64, 0.0f64);
        let mut generic = 0usize;
        for _ in 0..DETFORM_SAMPLES {
            let l = random_dominant(&mut rng, rank, config.coord_bound);
            let x = random_alpha_point(&mut rng, rank);
            let (le, xe) = (omega_to_e(&l), x.to_e());
            let orbit = weyl::orbit(&l)?;
            generic += l.is_strictly_dominant() as usize;
            let k = rank.weyl_order() as f64 / orbit.len() as f64;
            let k_even = rank.weyl_order() as f64 / (2 * orbit.even_len()) as f64;
            let (dp, dm, da) = (perm_d_plus(&le, &xe)?, det_d_minus(&le, &xe)?, sdet_d_alt(&le, &xe)?);
            plus = plus.max((dp - eval_c(&l, &x)? * k).norm());
            minus = minus.max((dm - eval_s(&l, &x)?.value).norm());
            alt = alt.max((da - eval_e(&l, &x)? * k_even).norm());
            half = half.max((da - (dp + dm) * 0.5).norm());
            let m = exponential_matrix(&le, &xe)?;
            routes = routes
                .max((permanent_ryser(&m) - permanent_naive(&m)).norm())
                .max((determinant_lu(&m) - determinant_leibniz(&m)).norm());
        }
        let all = [plus, minus, alt, half, routes];
        let passed = all.iter().all(|&d| d < DETFORM_TOLERANCE * config.tolerance_scale);
        rec.record(
            format!("{rank} D-forms"),
            passed,
            format!(
                "{DETFORM_SAMPLES} samples ({generic} generic): |D+ - kC| {plus:.2e}, |D- - S| {minus:.2e}, \
                 |DAlt - k'E| {alt:.2e}, |DAlt - (D+ + D-)/2| {half:.2e}, routes {routes:.2e}"
            ),
            json!({"rank": rank, "samples": DETFORM_SAMPLES, "generic_samples": generic,
                   "d_plus": plus, "d_minus": minus, "d_alt": alt, "d_alt_half_sum": half, "routes": routes}),
        );
    }
    Ok(())
}

/// Decomposition round-trip for one pair, shared with the acceptance tests.
#[derive(Debug, Clone, Serialize)]
pub struct RoundTrip {
    pub nonnegative: bool,
    pub reexpands: bool,
    pub congruence: bool,
}

pub fn decomposition_round_trip(a: &Weight, b: &Weight) -> Result<RoundTrip> {
    let product = multiply(&exp_sum(a, OrbitKind::C)?, &exp_sum(b, OrbitKind::C)?)?;
    let dec = decompose_into_c(&product)?;
    let n1 = a.rank().dim();
    let class = (congruence_number(a) + congruence_number(b)) % n1;
    let nonnegative = dec.terms().all(|(_, m)| m.is_positive());
    let congruence = dec.terms().all(|(w, _)| congruence_number(w) == class);
    Ok(RoundTrip { nonnegative, reexpands: dec.expand() == product, congruence })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_validation() {
        let bad = SuiteConfig { rank_bound: Some(9), ..SuiteConfig::default() };
        assert!(run_suite(Suite::Ortho, &bad).is_err());
        let bad = SuiteConfig { coord_bound: 0, ..SuiteConfig::default() };
        assert!(run_suite(Suite::Symmetry, &bad).is_err());
        let bad = SuiteConfig { tolerance_scale: 0.0, ..SuiteConfig::default() };
        assert!(run_suite(Suite::Chebyshev, &bad).is_err());
    }

    #[test]
    fn suite_names() {
        for s in Suite::EACH {
            assert_eq!(s.to_string().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn small_suites_pass() {
        let config = SuiteConfig { rank_bound: Some(2), coord_bound: 2, ..SuiteConfig::default() };
        for s in Suite::EACH {
            let r = run_suite(s, &config).unwrap();
            assert!(r.passed, "{r}");
        }
    }
}
