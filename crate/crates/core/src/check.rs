//! Randomized property suites with exact oracles.
//!
//! Each property draws its inputs from its own [`Sampler`], seeded from the
//! run seed and the property's position, so reports are reproducible byte
//! for byte. A failing trial records its inputs as canonical JSON.

use std::fmt;

use crate::compound::exterior_power_map;
use crate::determinant::{cauchy_binet, det_laplace, det_leibniz};
use crate::error::{domain_err, Error, Result};
use crate::forms::PolyForm;
use crate::index::{binomial, enum_combinations};
use crate::json::Json;
use crate::matrix::Matrix;
use crate::multivector::{clutch, GradedElement};
use crate::random::Sampler;
use crate::scalar::{int, Scalar};
use crate::tensor::Tensor;
use crate::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Functoriality,
    Wedge,
    Alt,
    Laplace,
    Binet,
    Dforms,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Functoriality,
        Suite::Wedge,
        Suite::Alt,
        Suite::Laplace,
        Suite::Binet,
        Suite::Dforms,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Functoriality => "functoriality",
            Suite::Wedge => "wedge",
            Suite::Alt => "alt",
            Suite::Laplace => "laplace",
            Suite::Binet => "binet",
            Suite::Dforms => "dforms",
        }
    }

    /// A suite name, or `all` for every suite in canonical order.
    pub fn parse(s: &str) -> Result<Vec<Suite>> {
        if s == "all" {
            return Ok(Suite::ALL.to_vec());
        }
        Suite::ALL
            .iter()
            .find(|suite| suite.name() == s)
            .map(|&suite| vec![suite])
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }

    fn properties(self) -> &'static [(&'static str, Property)] {
        match self {
            Suite::Functoriality => &[
                ("compound_of_product", compound_of_product),
                ("compound_of_identity", compound_of_identity),
                ("compound_of_transpose", compound_of_transpose),
                ("top_compound_is_det", top_compound_is_det),
            ],
            Suite::Wedge => &[
                ("graded_anticommutativity", graded_anticommutativity),
                ("associativity", associativity),
                ("unit_law", unit_law),
                ("clutch_composition", clutch_composition),
                ("clutch_matrix_product", clutch_matrix_product),
            ],
            Suite::Alt => &[
                ("projector", alt_projector),
                ("image_alternating", alt_image_alternating),
                ("linearity", alt_linearity),
                ("embed_project_roundtrip", embed_project_roundtrip),
                ("wedge_compatibility", wedge_compatibility),
            ],
            Suite::Laplace => &[
                ("leibniz_eq_laplace_all_rowsets", leibniz_eq_laplace),
                ("leibniz_eq_top_compound", leibniz_eq_top_compound),
                ("row_swap_negates", row_swap_negates),
                ("multiplicativity", det_multiplicativity),
                ("transpose_invariance", det_transpose_invariance),
            ],
            Suite::Binet => &[
                ("binet_eq_det_of_product", binet_eq_det_of_product),
                ("binet_tall_inner_vanishes", binet_tall_inner_vanishes),
            ],
            Suite::Dforms => &[
                ("nilpotency", nilpotency),
                ("graded_leibniz", graded_leibniz),
                ("pointwise_wedge", pointwise_wedge),
                ("increment_law", increment_law),
            ],
        }
    }
}

/// One trial: `Ok(())` on success, `Err(description)` on a violation.
type Trial = std::result::Result<(), String>;
type Property = fn(&mut Sampler, usize) -> Trial;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CheckConfig {
    /// Largest ambient dimension drawn.
    pub n: usize,
    pub trials: usize,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyOutcome {
    pub suite: Suite,
    pub property: &'static str,
    pub passed: usize,
    pub trials: usize,
    /// First failing trial, if any.
    pub counterexample: Option<String>,
}

impl PropertyOutcome {
    pub fn ok(&self) -> bool {
        self.passed == self.trials
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub config: CheckConfig,
    pub outcomes: Vec<PropertyOutcome>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.outcomes.iter().all(PropertyOutcome::ok)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = &self.config;
        writeln!(f, "check n={} trials={} seed={}", c.n, c.trials, c.seed)?;
        for o in &self.outcomes {
            let verdict = if o.ok() { "pass" } else { "FAIL" };
            writeln!(f, "{}/{}: {}/{} {verdict}", o.suite.name(), o.property, o.passed, o.trials)?;
            if let Some(cx) = &o.counterexample {
                writeln!(f, "  counterexample: {cx}")?;
            }
        }
        let total = self.outcomes.len();
        let good = self.outcomes.iter().filter(|o| o.ok()).count();
        writeln!(
            f,
            "summary: {good}/{total} properties passed: {}",
            if self.all_passed() { "PASS" } else { "FAIL" }
        )
    }
}

fn property_seed(seed: u64, slot: u64) -> u64 {
    seed ^ 0x9E37_79B9_7F4A_7C15u64.wrapping_mul(slot + 1)
}

pub fn run(suites: &[Suite], config: CheckConfig) -> Result<Report> {
    if config.trials == 0 {
        return domain_err("trials must be at least 1");
    }
    if config.n == 0 {
        return domain_err("n must be at least 1");
    }
    let mut outcomes = Vec::new();
    for &suite in suites {
        let suite_slot = Suite::ALL.iter().position(|&s| s == suite).expect("listed") as u64;
        for (k, (name, prop)) in suite.properties().iter().enumerate() {
            let mut sampler = Sampler::new(property_seed(config.seed, suite_slot * 64 + k as u64));
            let mut passed = 0;
            let mut counterexample = None;
            for trial in 0..config.trials {
                match prop(&mut sampler, config.n) {
                    Ok(()) => passed += 1,
                    Err(msg) => {
                        counterexample.get_or_insert_with(|| format!("trial {trial}: {msg}"));
                    }
                }
            }
            outcomes.push(PropertyOutcome {
                suite,
                property: name,
                passed,
                trials: config.trials,
                counterexample,
            });
        }
    }
    Ok(Report { config, outcomes })
}

macro_rules! ensure {
    ($cond:expr, $($arg:tt)*) => {
        if !$cond {
            return Err(format!($($arg)*));
        }
    };
}

fn e<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(|err| format!("unexpected error: {err}"))
}

fn compound_of_product(s: &mut Sampler, n: usize) -> Trial {
    let (r, k, c) = (s.usize_in(1, n), s.usize_in(1, n), s.usize_in(1, n));
    let a = s.int_matrix(r, k, 3);
    let b = s.int_matrix(k, c, 3);
    let ab = e(a.matmul(&b))?;
    for m in 0..=r.min(k).min(c) {
        let lhs = e(exterior_power_map(&ab, m))?;
        let rhs = e(e(exterior_power_map(&a, m))?.matmul(&e(exterior_power_map(&b, m))?))?;
        ensure!(lhs == rhs, "m={m} A={} B={}", a.to_json(), b.to_json());
    }
    Ok(())
}

fn compound_of_identity(s: &mut Sampler, n: usize) -> Trial {
    let size = s.usize_in(0, n);
    for m in 0..=size {
        let c = e(exterior_power_map(&Matrix::<Rational>::identity(size), m))?;
        ensure!(c == Matrix::identity(binomial(size, m)), "size={size} m={m}");
    }
    Ok(())
}

fn compound_of_transpose(s: &mut Sampler, n: usize) -> Trial {
    let (r, c) = (s.usize_in(1, n), s.usize_in(1, n));
    let a = s.rational_matrix(r, c);
    for m in 0..=r.min(c) {
        let lhs = e(exterior_power_map(&a.transpose(), m))?;
        let rhs = e(exterior_power_map(&a, m))?.transpose();
        ensure!(lhs == rhs, "m={m} A={}", a.to_json());
    }
    Ok(())
}

fn top_compound_is_det(s: &mut Sampler, n: usize) -> Trial {
    let size = s.usize_in(1, n.min(7));
    let a = s.int_matrix(size, size, 3);
    let top = e(exterior_power_map(&a, size))?;
    let det = e(det_leibniz(&a))?;
    ensure!(top == e(Matrix::new(1, 1, vec![det]))?, "A={}", a.to_json());
    Ok(())
}

fn small_dim(s: &mut Sampler, n: usize, cap: usize) -> usize {
    s.usize_in(1, n.min(cap))
}

fn graded_anticommutativity(s: &mut Sampler, n: usize) -> Trial {
    let d = small_dim(s, n, 6);
    let p = s.usize_in(0, d.min(3));
    let q = s.usize_in(0, d.min(3));
    let u = s.multivector(d, p);
    let v = s.multivector(d, q);
    let uv = e(u.wedge(&v))?;
    let vu = e(v.wedge(&u))?;
    let vu = if (p * q) % 2 == 0 { vu } else { vu.neg() };
    ensure!(uv == vu, "u={} v={}", u.to_json(), v.to_json());
    Ok(())
}

fn associativity(s: &mut Sampler, n: usize) -> Trial {
    let d = small_dim(s, n, 5);
    let (u, v, w) = (s.graded(d), s.graded(d), s.graded(d));
    let left = e(e(u.wedge(&v))?.wedge(&w))?;
    let right = e(u.wedge(&e(v.wedge(&w))?))?;
    ensure!(left == right, "u={} v={} w={}", u.to_json(), v.to_json(), w.to_json());
    Ok(())
}

fn unit_law(s: &mut Sampler, n: usize) -> Trial {
    let d = small_dim(s, n, 6);
    let w = s.graded(d);
    let one = GradedElement::one(d);
    ensure!(e(one.wedge(&w))? == w, "left unit, w={}", w.to_json());
    ensure!(e(w.wedge(&one))? == w, "right unit, w={}", w.to_json());
    ensure!(e(clutch(one).apply(&w))? == w, "clutch(1), w={}", w.to_json());
    Ok(())
}

fn clutch_composition(s: &mut Sampler, n: usize) -> Trial {
    let d = small_dim(s, n, 5);
    let (u, v, w) = (s.graded(d), s.graded(d), s.graded(d));
    let (cu, cv) = (clutch(u.clone()), clutch(v.clone()));
    let stepwise = e(cu.apply(&e(cv.apply(&w))?))?;
    let fused = e(clutch(e(u.wedge(&v))?).apply(&w))?;
    ensure!(stepwise == fused, "u={} v={} w={}", u.to_json(), v.to_json(), w.to_json());
    ensure!(e(e(cu.compose(&cv))?.apply(&w))? == fused, "compose, u={} v={}", u.to_json(), v.to_json());
    Ok(())
}

fn clutch_matrix_product(s: &mut Sampler, n: usize) -> Trial {
    let d = small_dim(s, n, 4);
    let (u, v) = (s.graded(d), s.graded(d));
    let product = e(clutch(u.clone()).matrix().matmul(&clutch(v.clone()).matrix()))?;
    let fused = clutch(e(u.wedge(&v))?).matrix();
    ensure!(product == fused, "u={} v={}", u.to_json(), v.to_json());
    Ok(())
}

fn random_tensor(s: &mut Sampler, n: usize) -> Tensor<Rational> {
    let d = small_dim(s, n, 4);
    let m = s.usize_in(0, d.min(3));
    s.tensor(d, m)
}

fn alt_projector(s: &mut Sampler, n: usize) -> Trial {
    let t = random_tensor(s, n);
    let once = t.alt();
    ensure!(once.alt() == once, "t={}", t.to_json());
    Ok(())
}

fn alt_image_alternating(s: &mut Sampler, n: usize) -> Trial {
    let t = random_tensor(s, n);
    ensure!(t.alt().is_alternating(), "t={}", t.to_json());
    Ok(())
}

fn alt_linearity(s: &mut Sampler, n: usize) -> Trial {
    let t = random_tensor(s, n);
    let u = s.tensor(t.dim(), t.order());
    let (a, b) = (s.small_rational(), s.small_rational());
    let lhs = e(t.scale(&a).add(&u.scale(&b)))?.alt();
    let rhs = e(t.alt().scale(&a).add(&u.alt().scale(&b)))?;
    ensure!(lhs == rhs, "a={a} b={b} s={} t={}", t.to_json(), u.to_json());
    Ok(())
}

fn embed_project_roundtrip(s: &mut Sampler, n: usize) -> Trial {
    let d = small_dim(s, n, 5);
    let m = s.usize_in(0, d.min(4));
    let v = s.multivector(d, m);
    let t = e(Tensor::embed_multivector(&v))?;
    ensure!(t.is_alternating(), "embedding not alternating, v={}", v.to_json());
    ensure!(e(t.project_multivector())? == v, "v={}", v.to_json());
    Ok(())
}

fn wedge_compatibility(s: &mut Sampler, n: usize) -> Trial {
    let d = small_dim(s, n, 4);
    let total = s.usize_in(0, d);
    let p = s.usize_in(0, total);
    let q = total - p;
    let (u, v) = (s.multivector(d, p), s.multivector(d, q));
    let lhs = e(Tensor::embed_multivector(&e(u.wedge(&v))?))?;
    let product = e(e(Tensor::embed_multivector(&u))?.tensor_product(&e(Tensor::embed_multivector(&v))?))?;
    let rhs = product.alt().scale(&Rational::from_usize(binomial(total, p)));
    ensure!(lhs == rhs, "u={} v={}", u.to_json(), v.to_json());
    Ok(())
}

fn square(s: &mut Sampler, n: usize, cap: usize) -> Matrix<Rational> {
    let size = s.usize_in(1, n.min(cap));
    s.int_matrix(size, size, 3)
}

fn leibniz_eq_laplace(s: &mut Sampler, n: usize) -> Trial {
    let a = square(s, n, 7);
    let det = e(det_leibniz(&a))?;
    for m in 1..=a.rows() {
        for rows in e(enum_combinations(a.rows(), m))? {
            let lap = e(det_laplace(&a, &rows))?;
            ensure!(lap == det, "rows=({rows}) A={}", a.to_json());
        }
    }
    Ok(())
}

fn leibniz_eq_top_compound(s: &mut Sampler, n: usize) -> Trial {
    let a = square(s, n, 7);
    let top = e(exterior_power_map(&a, a.rows()))?;
    ensure!(*top.get(0, 0) == e(det_leibniz(&a))?, "A={}", a.to_json());
    Ok(())
}

fn row_swap_negates(s: &mut Sampler, n: usize) -> Trial {
    let a = square(s, n, 7);
    let size = a.rows();
    let (i, j) = (s.usize_in(0, size - 1), s.usize_in(0, size - 1));
    let mut swapped = a.clone();
    swapped.swap_rows(i, j);
    let det = e(det_leibniz(&a))?;
    let expected = if i == j { det } else { -det };
    ensure!(e(det_leibniz(&swapped))? == expected, "swap {i},{j} A={}", a.to_json());
    if size >= 2 && i != j {
        let mut repeated = a.clone();
        for c in 0..size {
            repeated.set(j, c, a.get(i, c).clone());
        }
        ensure!(e(det_leibniz(&repeated))? == int(0), "repeated row, A={}", repeated.to_json());
    }
    Ok(())
}

fn det_multiplicativity(s: &mut Sampler, n: usize) -> Trial {
    let a = square(s, n, 6);
    let b = s.rational_matrix(a.rows(), a.rows());
    let lhs = e(det_leibniz(&e(a.matmul(&b))?))?;
    ensure!(lhs == e(det_leibniz(&a))? * e(det_leibniz(&b))?, "A={} B={}", a.to_json(), b.to_json());
    Ok(())
}

fn det_transpose_invariance(s: &mut Sampler, n: usize) -> Trial {
    let a = square(s, n, 7);
    ensure!(e(det_leibniz(&a))? == e(det_leibniz(&a.transpose()))?, "A={}", a.to_json());
    Ok(())
}

fn binet_eq_det_of_product(s: &mut Sampler, n: usize) -> Trial {
    let r = s.usize_in(1, n.min(7));
    let k = s.usize_in(r, n.max(r));
    let a = s.int_matrix(r, k, 3);
    let b = s.int_matrix(k, r, 3);
    let lhs = e(cauchy_binet(&a, &b))?;
    let rhs = e(det_leibniz(&e(a.matmul(&b))?))?;
    ensure!(lhs == rhs, "A={} B={}", a.to_json(), b.to_json());
    Ok(())
}

fn binet_tall_inner_vanishes(s: &mut Sampler, n: usize) -> Trial {
    let r = s.usize_in(1, n.min(7));
    let k = s.usize_in(0, r - 1);
    let a = s.int_matrix(r, k, 3);
    let b = s.int_matrix(k, r, 3);
    ensure!(e(cauchy_binet(&a, &b))? == int(0), "A={} B={}", a.to_json(), b.to_json());
    ensure!(e(det_leibniz(&e(a.matmul(&b))?))? == int(0), "rank-deficient product, A={}", a.to_json());
    Ok(())
}

fn random_form(s: &mut Sampler, nv: usize) -> PolyForm<Rational> {
    let m = s.usize_in(0, nv);
    s.form(nv, m, 3)
}

fn nilpotency(s: &mut Sampler, n: usize) -> Trial {
    let nv = small_dim(s, n, 4);
    let a = random_form(s, nv);
    let dd = a.exterior_derivative().exterior_derivative();
    ensure!(dd.is_zero(), "alpha={}", a.to_json());
    Ok(())
}

fn graded_leibniz(s: &mut Sampler, n: usize) -> Trial {
    let nv = small_dim(s, n, 4);
    let (a, b) = (random_form(s, nv), random_form(s, nv));
    let lhs = e(a.wedge(&b))?.exterior_derivative();
    let first = e(a.exterior_derivative().wedge(&b))?;
    let second = e(a.wedge(&b.exterior_derivative()))?;
    let second = if a.grade() % 2 == 0 { second } else { second.scale(&-Rational::from_int(1)) };
    ensure!(lhs == e(first.add(&second))?, "alpha={} beta={}", a.to_json(), b.to_json());
    Ok(())
}

fn pointwise_wedge(s: &mut Sampler, n: usize) -> Trial {
    let nv = small_dim(s, n, 4);
    let (a, b) = (random_form(s, nv), random_form(s, nv));
    let x = s.point(nv);
    let lhs = e(e(a.wedge(&b))?.evaluate(&x))?;
    let rhs = e(e(a.evaluate(&x))?.wedge(&e(b.evaluate(&x))?))?;
    ensure!(lhs == rhs, "alpha={} beta={} x={x:?}", a.to_json(), b.to_json());
    Ok(())
}

fn increment_law(s: &mut Sampler, n: usize) -> Trial {
    let nv = small_dim(s, n, 4);
    let f = s.polynomial(nv, 3, 6);
    let i = s.usize_in(1, nv);
    let x = s.point(nv);
    let mut h = s.small_rational();
    if num_traits::Zero::is_zero(&h) {
        h = int(1);
    }
    let fx = PolyForm::function(f.clone());
    let quotient = e(f.divided_difference(i, &x))?;
    let slope = e(e(f.partial(i))?.eval(&x))?;
    ensure!(e(quotient.eval(&[int(0)]))? == slope, "limit, f={} i={i} x={x:?}", fx.to_json());
    let mut moved = x.clone();
    moved[i - 1] = moved[i - 1].clone() + h.clone();
    let direct = (e(f.eval(&moved))? - e(f.eval(&x))?) / h.clone();
    ensure!(e(quotient.eval(&[h.clone()]))? == direct, "quotient, f={} i={i} x={x:?} h={h}", fx.to_json());
    Ok(())
}
