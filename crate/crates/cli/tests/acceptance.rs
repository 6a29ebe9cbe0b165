//! Acceptance suite: one test per criterion, each printing a single
//! `criterion N: PASS|FAIL` line. Comparisons are exact; the only
//! tolerances are the wall-clock budgets below.

use std::process::Command;
use std::time::{Duration, Instant};

use hopfcalc::cohen::{
    combinatorial_james_hopf, equal_in_group, exponent_relator, represent, repeated_index_relator, GroupGenerator,
    GroupWord,
};
use hopfcalc::freealg::{
    coproduct, identity_convolution_power, iterated_coproduct, reduced_identity_power, AlgebraContext, EndoMap,
};
use hopfcalc::modarith::{binomial_prime_power_valuation, CoefficientRing};
use num_bigint::BigUint;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

const BUDGET_H2_BETA4: Duration = Duration::from_secs(1);
const BUDGET_HOPF_WHITEHEAD: Duration = Duration::from_secs(10);
const BUDGET_POWER: Duration = Duration::from_secs(60);
const BUDGET_PROPERTIES: Duration = Duration::from_secs(300);
const RELATOR_TRIALS: u32 = 200;
const PROPERTY_SEED: u64 = 0;

struct Run {
    reports: Vec<Value>,
    exit_code: i32,
    elapsed: Duration,
}

fn hopfcalc(args: &[&str]) -> Run {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_hopfcalc"))
        .args(args)
        .arg("--json")
        .output()
        .expect("binary runs");
    let elapsed = start.elapsed();
    let stdout = String::from_utf8(out.stdout).expect("utf-8 output");
    let reports = match serde_json::from_str::<Value>(&stdout) {
        Ok(Value::Array(v)) => v,
        _ => Vec::new(),
    };
    Run {
        reports,
        exit_code: out.status.code().unwrap_or(-1),
        elapsed,
    }
}

fn status(r: &Value) -> &str {
    r["status"].as_str().unwrap_or("missing")
}

fn verdict(criterion: u32, pass: bool, detail: &str) {
    println!("criterion {criterion}: {} {detail}", if pass { "PASS" } else { "FAIL" });
    assert!(pass, "criterion {criterion} failed: {detail}");
}

#[test]
fn criterion_1_h2_beta4() {
    let run = hopfcalc(&["verify", "h2-beta4"]);
    let report = run.reports.first();
    let passed = report.is_some_and(|r| status(r) == "pass") && run.exit_code == 0;
    let in_time = run.elapsed < BUDGET_H2_BETA4;
    if let Some(w) = report.and_then(|r| r["witness"].as_str()) {
        println!("{w}");
    }
    verdict(
        1,
        passed && in_time,
        &format!("routes agree over Z: {passed}; {:?} (budget {:?})", run.elapsed, BUDGET_H2_BETA4),
    );
}

#[test]
fn criterion_2_hopf_whitehead() {
    let mut failures = Vec::new();
    let mut total = Duration::ZERO;
    for (n, k) in [(3, 2), (4, 3), (5, 2), (5, 3), (5, 4), (7, 2)] {
        let run = hopfcalc(&["verify", "hopf-whitehead", "--n", &n.to_string(), "--k", &k.to_string()]);
        total += run.elapsed;
        let Some(r) = run.reports.first() else {
            failures.push(format!("({n},{k}) no report"));
            continue;
        };
        let routes: Vec<&str> = r["params"]["routes"]
            .as_array()
            .map(|a| a.iter().filter_map(Value::as_str).collect())
            .unwrap_or_default();
        let want_combinatorial = matches!((n, k), (3, 2) | (4, 3));
        if status(r) != "pass" || !routes.contains(&"homological") {
            failures.push(format!("({n},{k}) {}", status(r)));
        }
        if want_combinatorial && !routes.contains(&"combinatorial") {
            failures.push(format!("({n},{k}) combinatorial route not run"));
        }
    }
    if total >= BUDGET_HOPF_WHITEHEAD {
        failures.push(format!("took {total:?}"));
    }
    verdict(2, failures.is_empty(), &format!("6 instances in {total:?}; {failures:?}"));
}

#[test]
fn criterion_3_power_map() {
    let mut failures = Vec::new();
    let mut total = Duration::ZERO;
    for (p, r, t, dim, required) in [(2, 1, 1, 3, true), (3, 1, 0, 2, true), (2, 2, 0, 1, true), (2, 1, 2, 5, false)] {
        let args = [p, r, t, dim].map(|v: u32| v.to_string());
        let run = hopfcalc(&["verify", "power", "--p", &args[0], "--r", &args[1], "--t", &args[2], "--dim", &args[3]]);
        total += run.elapsed;
        let s = run.reports.first().map(status).unwrap_or("missing");
        let ok = s == "pass" || (!required && s == "skipped");
        if !ok {
            failures.push(format!("({p},{r},{t},{dim}) {s}"));
        }
        if s == "pass" && (t >= 1 || r >= 2) && run.reports[0]["params"]["sharpness_word"].is_null() {
            failures.push(format!("({p},{r},{t},{dim}) no sharpness witness"));
        }
        println!("  power ({p},{r},{t},{dim}): {s}");
    }
    if total >= BUDGET_POWER {
        failures.push(format!("took {total:?}"));
    }
    verdict(3, failures.is_empty(), &format!("in {total:?}; {failures:?}"));
}

#[test]
fn criterion_4_obstruction() {
    let mut failures = Vec::new();
    for (p, r, t) in [(2u32, 1u32, 0u32), (2, 2, 0), (2, 1, 1)] {
        let args = [p, r, t].map(|v| v.to_string());
        let run = hopfcalc(&["verify", "obstruction", "--p", &args[0], "--r", &args[1], "--t", &args[2]]);
        let Some(rep) = run.reports.first() else {
            failures.push(format!("({p},{r},{t}) no report"));
            continue;
        };
        let params = &rep["params"];
        let expected = (r - 1).to_string();
        let ok = status(rep) == "pass"
            && params["valuation"].as_str() == Some(expected.as_str())
            && params["binomial_valuation"].as_u64() == Some(u64::from(r - 1));
        if !ok {
            failures.push(format!("({p},{r},{t}) {rep}"));
        }
        println!("  obstruction ({p},{r},{t}): scalar {}", params["scalar"]);
    }
    verdict(4, failures.is_empty(), &format!("{failures:?}"));
}

#[test]
fn criterion_5_cmn() {
    let mut failures = Vec::new();
    for (p, t) in [(2, 1), (3, 1), (2, 2), (5, 1)] {
        let run = hopfcalc(&["verify", "cmn", "--p", &p.to_string(), "--t", &t.to_string()]);
        let s = run.reports.first().map(status).unwrap_or("missing");
        if s != "pass" {
            failures.push(format!("({p},{t}) {s}"));
        }
    }
    verdict(5, failures.is_empty(), &format!("p^t in {{2,3,4,5}}; {failures:?}"));
}

#[test]
fn criterion_6_trace_lemmas() {
    let run = hopfcalc(&["verify", "trace", "--n", "5", "--trials", "200", "--seed", "0"]);
    let s = run.reports.first().map(status).unwrap_or("missing");
    verdict(6, s == "pass" && run.exit_code == 0, &format!("n=5, 200 trials, seed 0: {s} in {:?}", run.elapsed));
}

/// `ν_p(m!)` by Legendre's formula.
fn legendre(mut m: u64, p: u64) -> u64 {
    let mut v = 0;
    while m > 0 {
        m /= p;
        v += m;
    }
    v
}

fn kummer_suite() -> Result<String, String> {
    let mut checked = 0u64;
    for p in [2u64, 3, 5, 7] {
        for a in 0..=6u32 {
            let n = p.pow(a);
            // Exact binomials with repeated division where they stay small.
            let mut exact = (n <= 1024).then(BigUint::one);
            for k in 1..=n {
                let got = binomial_prime_power_valuation(p, a, k).map_err(|e| e.to_string())? as u64;
                let by_legendre = legendre(n, p) - legendre(k, p) - legendre(n - k, p);
                let mut nu_k = 0;
                let mut kk = k;
                while kk % p == 0 {
                    kk /= p;
                    nu_k += 1;
                }
                if got != by_legendre || got != u64::from(a) - nu_k {
                    return Err(format!("p={p} a={a} k={k}: {got} vs Legendre {by_legendre}"));
                }
                if let Some(c) = exact.as_mut() {
                    *c *= n - k + 1;
                    *c /= k;
                    let mut rest = c.clone();
                    let mut v = 0u64;
                    let pb = BigUint::from(p);
                    while !rest.is_zero() && (&rest % &pb).is_zero() {
                        rest /= &pb;
                        v += 1;
                    }
                    if v != got {
                        return Err(format!("p={p} a={a} k={k}: {got} vs exact {v}"));
                    }
                }
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} binomials"))
}

fn convolution_suite() -> Result<String, String> {
    let err = |e: hopfcalc::Error| e.to_string();
    let ctx = AlgebraContext::new(3, 4, CoefficientRing::INTEGERS).map_err(err)?;
    let id = EndoMap::identity(ctx);
    let bar = reduced_identity_power(ctx, 1).map_err(err)?;
    let sq = id.convolve(&id).map_err(err)?;
    let unit = EndoMap::unit(ctx);
    let maps = [("Id", &id), ("IdBar", &bar), ("Id*Id", &sq)];
    for (nf, f) in maps {
        if !f.convolve(&unit).map_err(err)?.agrees_with(f, 4).map_err(err)?
            || !unit.convolve(f).map_err(err)?.agrees_with(f, 4).map_err(err)?
        {
            return Err(format!("unit law fails for {nf}"));
        }
        for (ng, g) in maps {
            for (nh, h) in maps {
                let left = f.convolve(g).map_err(err)?.convolve(h).map_err(err)?;
                let right = f.convolve(&g.convolve(h).map_err(err)?).map_err(err)?;
                if let Some(w) = left.first_disagreement(&right, 4).map_err(err)? {
                    return Err(format!("({nf}*{ng})*{nh} differs at {w}"));
                }
            }
        }
    }
    for m in 1..=6u32 {
        let mut sum = EndoMap::unit(ctx);
        for k in 1..=m {
            let c = hopfcalc::modarith::binomial(u64::from(m), u64::from(k));
            let c: i64 = c.try_into().map_err(|_| "binomial overflow".to_string())?;
            sum = sum.plus(&reduced_identity_power(ctx, k).map_err(err)?.scaled(c)).map_err(err)?;
        }
        let direct = identity_convolution_power(ctx, m).map_err(err)?;
        if let Some(w) = direct.first_disagreement(&sum, 4).map_err(err)? {
            return Err(format!("binomial expansion of Id^*{m} differs at {w}"));
        }
    }
    Ok("associativity, unit laws, binomial expansion m <= 6 on degree <= 4".into())
}

fn coassociativity_suite() -> Result<String, String> {
    let ctx = AlgebraContext::new(3, 4, CoefficientRing::INTEGERS).map_err(|e| e.to_string())?;
    let words = ctx.basis_words_up_to(4);
    for w in &words {
        let d = coproduct(w);
        let triple = iterated_coproduct(w, 3).map_err(|e| e.to_string())?;
        if d.expand_slot(0).map_err(|e| e.to_string())? != triple
            || d.expand_slot(1).map_err(|e| e.to_string())? != triple
        {
            return Err(format!("coassociativity fails on {w}"));
        }
    }
    Ok(format!("{} words", words.len()))
}

fn random_word(rng: &mut ChaCha8Rng, n: u32, k: usize, max_len: usize) -> GroupWord {
    let len = rng.gen_range(0..=max_len);
    let syllables = (0..len).map(|_| {
        let block: Vec<u32> = (0..k).map(|_| rng.gen_range(1..=n)).collect();
        let e = [-2i64, -1, 1, 2][rng.gen_range(0..4)];
        (GroupGenerator::new(block), e)
    });
    GroupWord::from_syllables(n, k, syllables.collect::<Vec<_>>()).expect("indices in range")
}

fn representation_suite() -> Result<String, String> {
    let z = CoefficientRing::INTEGERS;
    let mut rng = ChaCha8Rng::seed_from_u64(PROPERTY_SEED);
    let mut pairs = 0;
    for (n, k) in [(2u32, 1usize), (3, 1), (4, 1), (4, 2), (5, 2)] {
        for _ in 0..100 {
            let a = random_word(&mut rng, n, k, 8);
            let b = random_word(&mut rng, n, k, 8);
            let prod = represent(&a.product(&b).map_err(|e| e.to_string())?, z);
            if prod != represent(&a, z).multiply(&represent(&b, z)).map_err(|e| e.to_string())? {
                return Err(format!("multiplicativity fails for {a} and {b}"));
            }
            if !represent(&a, z).multiply(&represent(&a.inverse(), z)).map_err(|e| e.to_string())?.is_one() {
                return Err(format!("inverse law fails for {a}"));
            }
            pairs += 1;
        }
    }
    Ok(format!("{pairs} random pairs"))
}

fn random_relator(rng: &mut ChaCha8Rng, n: u32) -> GroupWord {
    let l = rng.gen_range(2..=3);
    let mut blocks: Vec<Vec<u32>> = (0..l).map(|_| vec![rng.gen_range(1..=n)]).collect();
    let exps: Vec<i64> = (0..l).map(|_| [-2i64, -1, 1, 2][rng.gen_range(0..4)]).collect();
    if rng.gen_bool(0.5) {
        let s = rng.gen_range(0..l);
        let mut t = rng.gen_range(0..l);
        if t == s {
            t = (s + 1) % l;
        }
        blocks[t] = blocks[s].clone();
        repeated_index_relator(n, 1, &blocks, &exps).expect("index repeated")
    } else {
        exponent_relator(n, 1, &blocks, &exps).expect("valid relator")
    }
}

fn relation_invariance_suite() -> Result<String, String> {
    let z = CoefficientRing::INTEGERS;
    let mut rng = ChaCha8Rng::seed_from_u64(PROPERTY_SEED);
    for trial in 0..RELATOR_TRIALS {
        let n = rng.gen_range(1..=3);
        let w = random_word(&mut rng, n, 1, 6);
        let r = random_relator(&mut rng, n);
        let (a, b) = w.split_at(rng.gen_range(0..=w.len()));
        let w2 = a.product(&r).and_then(|x| x.product(&b)).map_err(|e| e.to_string())?;
        let h = combinatorial_james_hopf(&w, 2).map_err(|e| e.to_string())?;
        let h2 = combinatorial_james_hopf(&w2, 2).map_err(|e| e.to_string())?;
        if !equal_in_group(&h, &h2, z).map_err(|e| e.to_string())? {
            return Err(format!("trial {trial}: H2({w}) and H2({w2}) differ"));
        }
    }
    Ok(format!("{RELATOR_TRIALS} seeded trials"))
}

type Suite = fn() -> Result<String, String>;

#[test]
fn criterion_7_property_suites() {
    let start = Instant::now();
    let suites: [(&str, Suite); 5] = [
        ("Kummer valuation, p <= 7, a <= 6", kummer_suite),
        ("convolution laws", convolution_suite),
        ("coassociativity", coassociativity_suite),
        ("representation laws", representation_suite),
        ("H_2 relation invariance", relation_invariance_suite),
    ];
    let mut failures = Vec::new();
    for (name, suite) in suites {
        match suite() {
            Ok(detail) => println!("  {name}: ok ({detail})"),
            Err(e) => {
                println!("  {name}: {e}");
                failures.push(name);
            }
        }
    }
    let elapsed = start.elapsed();
    let in_time = elapsed < BUDGET_PROPERTIES;
    verdict(7, failures.is_empty() && in_time, &format!("5 suites in {elapsed:?}; failing: {failures:?}"));
}
