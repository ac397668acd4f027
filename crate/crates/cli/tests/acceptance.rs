//! Exit criteria. Each criterion prints one PASS/FAIL line; the process
//! fails if any criterion fails or exceeds its time budget.

use std::collections::BTreeMap;
use std::process::Command;
use std::time::{Duration, Instant};

use extalg::compound::{apply_map, exterior_power_map};
use extalg::determinant::{cauchy_binet, det_laplace, det_leibniz};
use extalg::index::{
    binomial, enum_combinations, enum_injections, enum_permutations, enum_placements,
    falling_factorial, Combination, Injection,
};
use extalg::multivector::{clutch, contract, pair};
use extalg::random::Sampler;
use extalg::scalar::int;
use extalg::{Dual, GradedElement, Matrix, Multivector, Rational, Scalar, Tensor};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($arg:tt)*) => {
        if !$cond {
            return Err(format!($($arg)*));
        }
    };
}

fn ok<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn counting_laws() -> Outcome {
    let mut cases = 0;
    for n in 0..=8usize {
        for m in 0..=n {
            let c = ok(enum_combinations(n, m))?.count();
            let j = ok(enum_injections(n, m))?.count();
            let p = ok(enum_placements(n, m))?.count();
            ensure!(c == binomial(n, m), "C({n},{m}) = {c}");
            ensure!(j == falling_factorial(n, m), "injections({n},{m}) = {j}");
            ensure!(p == n.pow(m as u32), "placements({n},{m}) = {p}");
            cases += 1;
        }
    }
    Ok(format!("{cases} (n, m) pairs"))
}

fn isomorphism_law() -> Outcome {
    let mut total = 0;
    for n in 0..=6usize {
        for m in 0..=n {
            let mut fibers: BTreeMap<Combination, usize> = BTreeMap::new();
            for j in ok(enum_injections(n, m))? {
                let (c, p) = j.decompose();
                ensure!(ok(Injection::recompose(&c, &p))? == j, "roundtrip of {j}");
                *fibers.entry(c).or_default() += 1;
                total += 1;
            }
            let m_fact: usize = (1..=m).product();
            ensure!(fibers.len() == binomial(n, m), "fiber count at ({n},{m})");
            ensure!(fibers.values().all(|&k| k == m_fact), "fiber sizes at ({n},{m})");
            for c in ok(enum_combinations(n, m))? {
                for p in enum_permutations(m) {
                    let j = ok(Injection::recompose(&c, &p))?;
                    ensure!(j.decompose() == (c.clone(), p.clone()), "reverse roundtrip ({c}) {p}");
                }
            }
        }
    }
    Ok(format!("{total} injections"))
}

fn determinant_equivalence() -> Outcome {
    let mut s = Sampler::new(0xA11CE);
    let trials = 210;
    for t in 0..trials {
        let size = 1 + t % 6;
        let a = s.int_matrix(size, size, 4);
        let det = ok(det_leibniz(&a))?;
        let top = ok(exterior_power_map(&a, size))?;
        ensure!(*top.get(0, 0) == det, "top compound, trial {t}");
        for m in 1..=size {
            for rows in ok(enum_combinations(size, m))? {
                ensure!(ok(det_laplace(&a, &rows))? == det, "laplace rows ({rows}), trial {t}");
            }
        }
    }
    Ok(format!("{trials} matrices, sizes 1..6"))
}

fn functoriality() -> Outcome {
    let mut s = Sampler::new(0xF00);
    let trials = 120;
    for t in 0..trials {
        let (r, k, c) = (s.usize_in(1, 5), s.usize_in(1, 5), s.usize_in(1, 5));
        let a = s.int_matrix(r, k, 3);
        let b = s.rational_matrix(k, c);
        let ab = ok(a.matmul(&b))?;
        for m in 0..=r.min(k).min(c) {
            let lhs = ok(exterior_power_map(&ab, m))?;
            let rhs = ok(ok(exterior_power_map(&a, m))?.matmul(&ok(exterior_power_map(&b, m))?))?;
            ensure!(lhs == rhs, "trial {t} m={m}");
        }
        let size = 1 + t % 5;
        for m in 0..=size {
            let id = ok(exterior_power_map(&Matrix::<Rational>::identity(size), m))?;
            ensure!(id == Matrix::identity(binomial(size, m)), "identity {size} m={m}");
        }
    }
    Ok(format!("{trials} composable pairs"))
}

fn cauchy_binet_witness() -> Outcome {
    let mut s = Sampler::new(0xB1E7);
    let trials = 120;
    for t in 0..trials {
        let r = s.usize_in(1, 6);
        let k = s.usize_in(r, 6);
        let a = s.int_matrix(r, k, 3);
        let b = s.int_matrix(k, r, 3);
        let lhs = ok(cauchy_binet(&a, &b))?;
        let rhs = ok(det_leibniz(&ok(a.matmul(&b))?))?;
        ensure!(lhs == rhs, "trial {t}: {r}x{k}");
    }
    Ok(format!("{trials} pairs"))
}

fn alternation_projector() -> Outcome {
    let mut s = Sampler::new(0xA17);
    let mut checked = 0;
    for n in 1..=4usize {
        for m in 0..=n.min(3) {
            for _ in 0..3 {
                let t = s.tensor(n, m);
                let a = t.alt();
                ensure!(a.alt() == a, "projector n={n} m={m}");
                ensure!(a.is_alternating(), "image n={n} m={m}");
                checked += 1;
            }
        }
        for m in 0..=n {
            for c in ok(enum_combinations(n, m))? {
                let v = Multivector::<Rational>::basis(c);
                ensure!(ok(ok(Tensor::embed_multivector(&v))?.project_multivector())? == v, "roundtrip n={n}");
            }
            let v = s.multivector(n, m);
            ensure!(ok(ok(Tensor::embed_multivector(&v))?.project_multivector())? == v, "random roundtrip n={n}");
        }
        for p in 0..=n {
            for q in 0..=n - p {
                let (u, v) = (s.multivector(n, p), s.multivector(n, q));
                let lhs = ok(Tensor::embed_multivector(&ok(u.wedge(&v))?))?;
                let prod = ok(ok(Tensor::embed_multivector(&u))?.tensor_product(&ok(Tensor::embed_multivector(&v))?))?;
                let rhs = prod.alt().scale(&Rational::from_usize(binomial(p + q, p)));
                ensure!(lhs == rhs, "wedge compatibility n={n} p={p} q={q}");
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} tensor checks, n <= 4"))
}

fn grassmann_laws() -> Outcome {
    let mut s = Sampler::new(0x6A55);
    let trials = 220;
    for t in 0..trials {
        let n = 1 + t % 5;
        let (p, q) = (s.usize_in(0, n.min(3)), s.usize_in(0, n.min(3)));
        let (u, v) = (s.multivector(n, p), s.multivector(n, q));
        let vu = ok(v.wedge(&u))?;
        let vu = if p * q % 2 == 1 { vu.neg() } else { vu };
        ensure!(ok(u.wedge(&v))? == vu, "anticommutativity trial {t}");
        let (a, b, c) = (s.graded(n), s.graded(n), s.graded(n));
        ensure!(
            ok(ok(a.wedge(&b))?.wedge(&c))? == ok(a.wedge(&ok(b.wedge(&c))?))?,
            "associativity trial {t}"
        );
        let one = GradedElement::one(n);
        ensure!(ok(clutch(one).apply(&c))? == c, "unit trial {t}");
        let stepwise = ok(clutch(a.clone()).apply(&ok(clutch(b.clone()).apply(&c))?))?;
        ensure!(stepwise == ok(clutch(ok(a.wedge(&b))?).apply(&c))?, "clutch composition trial {t}");
    }
    Ok(format!("{trials} trials, n <= 5"))
}

fn pairing_laws() -> Outcome {
    for n in 0..=5usize {
        for m in 0..=n {
            let basis: Vec<_> = ok(enum_combinations(n, m))?.collect();
            for (i, a) in basis.iter().enumerate() {
                for (j, b) in basis.iter().enumerate() {
                    let g = ok(pair(&Dual(Multivector::<Rational>::basis(a.clone())), &Multivector::basis(b.clone())))?;
                    ensure!(g == if i == j { int(1) } else { int(0) }, "gram n={n} ({a}) ({b})");
                }
            }
            if m == 0 {
                continue;
            }
            for index in &basis {
                for target in &basis {
                    let mut v = Multivector::<Rational>::basis(target.clone());
                    for &k in index.word() {
                        let x = Dual(Multivector::basis(ok(Combination::new(n, vec![k]))?));
                        v = ok(contract(&x, &v))?;
                    }
                    let paired = ok(pair(&Dual(Multivector::basis(index.clone())), &Multivector::basis(target.clone())))?;
                    ensure!(v.coeff(&Combination::empty(n)) == paired, "contraction ({index}) ({target})");
                }
            }
        }
    }
    let mut s = Sampler::new(0x9A1);
    for t in 0..100 {
        let (r, c) = (s.usize_in(1, 5), s.usize_in(1, 5));
        let m = s.usize_in(0, r.min(c));
        let a = s.rational_matrix(r, c);
        let (v, w) = (s.multivector(c, m), s.multivector(r, m));
        let lhs = ok(pair(&Dual(w.clone()), &ok(apply_map(&a, &v))?))?;
        let rhs = ok(pair(&Dual(ok(apply_map(&a.transpose(), &w))?), &v))?;
        ensure!(lhs == rhs, "adjointness trial {t}");
    }
    Ok("gram n <= 5, 100 adjointness trials".into())
}

fn differential_laws() -> Outcome {
    let mut s = Sampler::new(0xD1FF);
    let trials = 220;
    for t in 0..trials {
        let n = 1 + t % 4;
        let (p, q) = (s.usize_in(0, n), s.usize_in(0, n));
        let (a, b) = (s.form(n, p, 3), s.form(n, q, 3));
        ensure!(a.exterior_derivative().exterior_derivative().is_zero(), "d^2 trial {t}");
        let lhs = ok(a.wedge(&b))?.exterior_derivative();
        let second = ok(a.wedge(&b.exterior_derivative()))?;
        let second = if p % 2 == 1 { second.scale(&int(-1)) } else { second };
        let rhs = ok(ok(a.exterior_derivative().wedge(&b))?.add(&second))?;
        ensure!(lhs == rhs, "graded Leibniz trial {t}");
    }
    let points = 60;
    for t in 0..points {
        let n = s.usize_in(1, 4);
        let f = s.polynomial(n, 3, 6);
        let x = s.point(n);
        let i = s.usize_in(1, n);
        let mut h = s.small_rational();
        if h == int(0) {
            h = int(1);
        }
        let quotient = ok(f.divided_difference(i, &x))?;
        let slope = ok(ok(f.partial(i))?.eval(&x))?;
        ensure!(ok(quotient.eval(&[int(0)]))? == slope, "limit at point {t}");
        let mut moved = x.clone();
        moved[i - 1] += h.clone();
        let direct = (ok(f.eval(&moved))? - ok(f.eval(&x))?) / h.clone();
        ensure!(ok(quotient.eval(&[h]))? == direct, "divided difference at point {t}");
    }
    Ok(format!("{trials} form pairs, {points} points"))
}

fn cli_determinism() -> Outcome {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_extalg"))
            .args(["check", "--suite", "all", "--n", "3", "--trials", "10", "--seed", "1"])
            .output()
            .map_err(|e| e.to_string())
    };
    let (first, second) = (run()?, run()?);
    ensure!(first.status.success(), "first run exited with {:?}", first.status.code());
    ensure!(second.status.success(), "second run exited with {:?}", second.status.code());
    ensure!(first.stdout == second.stdout, "reports differ");
    ensure!(!first.stdout.is_empty(), "empty report");
    Ok(format!("{} identical bytes", first.stdout.len()))
}

struct Criterion {
    name: &'static str,
    budget: Option<Duration>,
    run: fn() -> Outcome,
}

fn main() {
    let secs = |s| Some(Duration::from_secs(s));
    let criteria = [
        Criterion { name: "counting laws", budget: secs(5), run: counting_laws },
        Criterion { name: "isomorphism law", budget: None, run: isomorphism_law },
        Criterion { name: "determinant oracle equivalence", budget: secs(30), run: determinant_equivalence },
        Criterion { name: "functoriality", budget: None, run: functoriality },
        Criterion { name: "cauchy-binet witness", budget: None, run: cauchy_binet_witness },
        Criterion { name: "alternation projector", budget: None, run: alternation_projector },
        Criterion { name: "grassmann laws", budget: None, run: grassmann_laws },
        Criterion { name: "pairing laws", budget: None, run: pairing_laws },
        Criterion { name: "differential laws", budget: secs(30), run: differential_laws },
        Criterion { name: "cli determinism", budget: None, run: cli_determinism },
    ];
    let mut failures = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let outcome = match (outcome, c.budget) {
            (Ok(_), Some(b)) if elapsed > b => Err(format!("took {elapsed:.2?}, budget {b:?}")),
            (o, _) => o,
        };
        match outcome {
            Ok(detail) => println!("PASS {} ({detail}; {elapsed:.2?})", c.name),
            Err(why) => {
                failures += 1;
                println!("FAIL {} ({why}; {elapsed:.2?})", c.name);
            }
        }
    }
    println!("acceptance: {}/{} criteria passed", criteria.len() - failures, criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}
