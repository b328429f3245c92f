//! Prints one PASS/FAIL line per acceptance criterion and exits nonzero if
//! any fails. Runs without the libtest harness so the lines always show.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use common::*;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};
use serde_json::{json, Value};
use whfact_cli::{parse_polynomial, parse_rational_function, run_command, InputDocument};
use whfact_core::{
    fredholm_of, fredholm_report, is_minus_unit, is_plus_unit, qr_split_at_zero, smith_decompose, split_by_circle,
    verify_triangular_split, verify_wh, wh_factorize, Error, MatPoly, Polynomial, RatMatFun, RatMatrix,
    WHFactorization,
};

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn write_doc(dir: &Path, name: &str, rows: &[&[&str]]) -> PathBuf {
    let doc = InputDocument {
        size: rows.len(),
        entries: rows.iter().map(|r| r.iter().map(|s| s.to_string()).collect()).collect(),
    };
    let p = dir.join(name);
    std::fs::write(&p, serde_json::to_string(&doc).unwrap()).unwrap();
    p
}

fn cli_json(args: &[&str]) -> Result<Value, String> {
    let out = run_command(["whfact", "--json", "-"].into_iter().chain(args.iter().copied()));
    if out.code != 0 {
        return Err(format!("exit {}: {}", out.code, out.stderr.trim()));
    }
    serde_json::from_str(&out.stdout).map_err(|e| e.to_string())
}

fn golden_rows() -> &'static [&'static [&'static str]] {
    &[&["1", "1/(z-1)"], &["0", "1"]]
}

fn xi_rows() -> &'static [&'static [&'static str]] {
    &[&["1/(z-1)^3", "0"], &["z^2/(z-1)^4", "z^5/(z-1)^4"]]
}

fn rat(rows: &[&[&str]]) -> RatMatrix {
    RatMatrix::new(rows.iter().map(|r| r.iter().map(|s| parse_rational_function(s).unwrap()).collect()).collect())
        .unwrap()
}

fn poly(s: &str) -> Polynomial {
    parse_polynomial(s).unwrap()
}

fn matpoly(rows: &[&[&str]]) -> MatPoly {
    MatPoly::new(rows.iter().map(|r| r.iter().map(|s| poly(s)).collect()).collect()).unwrap()
}

fn golden_end_to_end(dir: &Path) -> Outcome {
    let input = write_doc(dir, "golden.json", golden_rows());
    let start = Instant::now();
    let v = cli_json(&["factor", input.to_str().unwrap()])?;
    let elapsed = start.elapsed();
    let wire: whfact_cli::FactorizationWire = serde_json::from_value(v["factorization"].clone()).map_err(|e| e.to_string())?;
    let fact = wire.decode().map_err(|e| e.to_string())?;
    let expected = WHFactorization {
        k: 2,
        omega_minus: rat(&[&["-1/z - 1", "-1/z^2"], &["1", "1/z - 1"]]),
        omega_circ: vec![parse_rational_function("z-1").unwrap(), parse_rational_function("1/(z-1)").unwrap()],
        p0: matpoly(&[&["1", "0"], &["z^3+z^2-z", "z^4"]]),
        omega_plus: rat(&[&["-z", "-1"], &["1", "0"]]),
    };
    ensure(fact == expected, format!("factorization differs: {fact:?}"))?;
    ensure(elapsed < Duration::from_secs(1), format!("took {elapsed:?}"))?;
    Ok(format!("k = 2 and all four factors bit-exact, {} ms", elapsed.as_millis()))
}

fn golden_trace() -> Outcome {
    let om = RatMatFun::from_matrix(rat(golden_rows())).map_err(|e| e.to_string())?;
    let (_, t) = wh_factorize(&om).map_err(|e| e.to_string())?;
    ensure(t.smith1.d == vec![poly("(z-1)^2"), poly("1")], "Smith(P1)")?;
    ensure(t.smith2.d == vec![poly("z^2*(z-1)^2"), poly("1")], "Smith(P2)")?;
    ensure(t.p3.det() == poly("z^4"), "det P3")?;
    let qs: Vec<MatPoly> = t.split3.steps.iter().map(|s| s.q.clone()).collect();
    let expected = vec![
        matpoly(&[&["1", "0"], &["0", "z"]]),
        matpoly(&[&["1", "0"], &["-z", "z^2"]]),
        matpoly(&[&["1", "0"], &["z^2-z", "z^3"]]),
        matpoly(&[&["1", "0"], &["z^3+z^2-z", "z^4"]]),
    ];
    ensure(qs == expected, format!("Q sequence {qs:?}"))?;
    ensure(t.checks.all_passed(), t.checks.to_string())?;
    Ok(format!("Smith D1, D2, det P3 = z^4, Q1..Q4 exact; {} trace checks pass", t.checks.checks.len()))
}

fn example_xi(dir: &Path) -> Outcome {
    let input = write_doc(dir, "xi.json", xi_rows());
    let v = cli_json(&["fredholm", input.to_str().unwrap()])?;
    ensure(v["is_fredholm"] == true && v["index"] == 2, format!("fredholm output {v}"))?;
    // the hand factorization with n = (3, 2)
    let zm1 = poly("z-1");
    let circ = vec![parse_rational_function("1/(z-1)^3").unwrap(), parse_rational_function("1/(z-1)^4").unwrap()];
    let minus = rat(&[&["-1", "(z-1)/z^2"], &["0", "1"]]);
    let plus = rat(&[&["-z^3", "1"], &["1", "0"]]);
    let second = WHFactorization {
        k: 0,
        omega_minus: minus.inverse().map_err(|e| e.to_string())?,
        omega_circ: circ,
        p0: MatPoly::diagonal(&[Polynomial::z_pow(3), Polynomial::z_pow(2)]),
        omega_plus: plus.inverse().map_err(|e| e.to_string())?,
    };
    let xi = RatMatFun::from_matrix(rat(xi_rows())).map_err(|e| e.to_string())?;
    ensure(xi.q == zm1.pow(4), "q of Xi")?;
    let rep = verify_wh(&xi, &second);
    ensure(rep.passed("product") == Some(true), rep.to_string())?;
    let r = fredholm_report(&second).map_err(|e| e.to_string())?;
    ensure(r.n_exponents == vec![3, 2] && r.index == Some(2), format!("{r:?}"))?;
    Ok(format!("CLI index 2 (n = {}); hand factorization n = (3, 2) also index 2", v["n_exponents"]))
}

fn not_fredholm(dir: &Path) -> Outcome {
    let a = write_doc(dir, "s5.json", golden_rows());
    let b = write_doc(dir, "unitdet.json", &[&["(z+1)/(z-1)", "0"], &["0", "(z-1)/(z+1)"]]);
    let va = cli_json(&["fredholm", a.to_str().unwrap()])?;
    let vb = cli_json(&["fredholm", b.to_str().unwrap()])?;
    ensure(va["is_fredholm"] == false && va["witnesses"] == json!(["z-1"]), va.to_string())?;
    ensure(vb["is_fredholm"] == false, vb.to_string())?;
    let det = rat(&[&["(z+1)/(z-1)", "0"], &["0", "(z-1)/(z+1)"]]).det();
    ensure(det == parse_rational_function("1").unwrap(), "det is not 1")?;
    Ok(format!("both not Fredholm; witnesses {} and {}", va["witnesses"], vb["witnesses"]))
}

fn bezout_diagonalization(dir: &Path) -> Outcome {
    let input = write_doc(dir, "xi.json", xi_rows());
    let v = cli_json(&["diag2x2", input.to_str().unwrap()])?;
    let middle: Vec<whfact_cli::document::RatFunWire> =
        serde_json::from_value(v["middle"].clone()).map_err(|e| e.to_string())?;
    let middle: Vec<_> = middle.iter().map(|w| w.decode().unwrap()).collect();
    let expected = vec![
        parse_rational_function("z^3/(z-1)^3").unwrap(),
        parse_rational_function("z^2/(z-1)^4").unwrap(),
    ];
    ensure(middle == expected, format!("middle {middle:?}"))?;
    let d = whfact_core::diagonalize_2x2(&rat(xi_rows())).map_err(|e| e.to_string())?;
    let product = RatMatrix::product(&[&d.omega_minus, &rat(xi_rows()), &d.omega_plus]).map_err(|e| e.to_string())?;
    ensure(product == RatMatrix::diagonal(&d.middle), "outer product")?;
    ensure(
        is_minus_unit(&d.omega_minus).unwrap_or(false) && is_plus_unit(&d.omega_plus).unwrap_or(false),
        "outer factors are not units",
    )?;
    let bad = write_doc(dir, "bad.json", &[&["1", "0"], &["(z+1)/(z-1)", "z^2/(z-1)"]]);
    let out = run_command(["whfact", "diag2x2", bad.to_str().unwrap()]);
    ensure(out.code == 2 && out.stderr.starts_with("ConditionFailed"), format!("violating input: {out:?}"))?;
    Ok("middle = diag(z^3/(z-1)^3, z^2/(z-1)^4) with exact unit product; violating input gives ConditionFailed".into())
}

fn runner(cases: u32) -> TestRunner {
    TestRunner::new_with_rng(
        Config { cases, failure_persistence: None, ..Config::default() },
        TestRng::deterministic_rng(RngAlgorithm::ChaCha),
    )
}

fn property_suite() -> Outcome {
    let start = Instant::now();
    runner(200)
        .run(&omega_strategy(), |plan| {
            let om = build_omega(&plan);
            let (fact, trace) = wh_factorize(&om).map_err(|e| TestCaseError::fail(e.to_string()))?;
            prop_assert!(trace.checks.all_passed(), "{}", trace.checks);
            let rep = verify_wh(&om, &fact);
            prop_assert!(rep.all_passed(), "{}", rep);
            prop_assert_eq!(rep.passed("circle_smith"), Some(true));
            Ok(())
        })
        .map_err(|e| format!("pipeline: {e}"))?;
    runner(200)
        .run(&(matpoly_strategy(), shear_strategy(), shear_strategy()), |(plan, us, vs)| {
            let p = build_matpoly(&plan);
            let m = p.size();
            let moved = MatPoly::product(&[&poly_shears(m, &us), &p, &poly_shears(m, &vs).transpose()]).unwrap();
            prop_assert_eq!(smith_decompose(&moved).unwrap().d, smith_decompose(&p).unwrap().d);
            Ok(())
        })
        .map_err(|e| format!("Smith invariance: {e}"))?;
    runner(200)
        .run(&planted_strategy(), |(n, fill, shears)| {
            let q0 = planted_q(&n, &fill);
            let f = q0.mul(&poly_shears(n.len(), &shears)).unwrap();
            let s = qr_split_at_zero(&f).unwrap();
            prop_assert_eq!(&s.n_exponents, &n);
            prop_assert_eq!(&s.q, &q0);
            prop_assert!(verify_triangular_split(&f, &s).all_passed());
            Ok(())
        })
        .map_err(|e| format!("triangular split: {e}"))?;
    runner(200)
        .run(&matpoly_strategy(), |plan| {
            let p = build_matpoly(&plan);
            let rev = p.reverse(p.degree().unwrap()).unwrap();
            let (d, dr) = (smith_decompose(&p).unwrap().d, smith_decompose(&rev).unwrap().d);
            for alpha in nonzero_roots() {
                let inv = alpha.inv().unwrap();
                for (a, b) in d.iter().zip(&dr) {
                    prop_assert_eq!(multiplicity(a, &alpha), multiplicity(b, &inv));
                }
            }
            Ok(())
        })
        .map_err(|e| format!("reciprocal roots: {e}"))?;
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(60), format!("took {elapsed:?}"))?;
    Ok(format!("4 x 200 cases (pipeline + verify_wh, Smith invariance, planted split, reciprocal roots) in {:.1} s", elapsed.as_secs_f64()))
}

fn mixed_location() -> Outcome {
    match split_by_circle(&poly("z^2 - z - 1")) {
        Err(Error::MixedLocationFactor { factor }) => Ok(format!("split_by_circle(z^2-z-1) -> MixedLocationFactor ({factor})")),
        other => Err(format!("{other:?}")),
    }
}

fn index_invariance() -> Outcome {
    let strategy = (omega_strategy(), shear_strategy(), any::<bool>(), shear_strategy(), any::<bool>());
    runner(50)
        .run(&strategy, |(plan, us, us_scalar, vs, vs_scalar)| {
            let om = build_omega(&plan);
            let m = om.size();
            let u = minus_unit(m, &us, us_scalar);
            let v = plus_unit(m, &vs, vs_scalar);
            prop_assert!(is_minus_unit(&u).unwrap() && is_plus_unit(&v).unwrap());
            let moved = RatMatFun::from_matrix(RatMatrix::product(&[&u, &om.omega, &v]).unwrap()).unwrap();
            let (a, b) = (fredholm_of(&om).unwrap(), fredholm_of(&moved).unwrap());
            prop_assert_eq!((a.is_fredholm, a.index), (b.is_fredholm, b.index));
            Ok(())
        })
        .map_err(|e| e.to_string())?;
    Ok("50 random (Omega, U, V) triples: verdict and index unchanged".into())
}

fn main() {
    let dir = tempfile::tempdir().expect("temporary directory");
    let d = dir.path();
    let criteria: Vec<Criterion> = vec![
        ("golden factorization", Box::new(|| golden_end_to_end(d))),
        ("golden trace checkpoints", Box::new(golden_trace)),
        ("Xi Fredholm index 2", Box::new(|| example_xi(d))),
        ("not-Fredholm cases", Box::new(|| not_fredholm(d))),
        ("2x2 Bezout diagonalization", Box::new(|| bezout_diagonalization(d))),
        ("property suite", Box::new(property_suite)),
        ("mixed-location error", Box::new(mixed_location)),
        ("index invariance", Box::new(index_invariance)),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            let msg = p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        match outcome {
            Ok(detail) => println!("criterion {}: PASS  {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
