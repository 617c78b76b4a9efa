//! Acceptance suite. Every criterion is an exact-equality check; each prints
//! one PASS/FAIL line and the process exits nonzero if any fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use qident_core::arith::{Poly, Rational};
use qident_core::divisor::{divisor_series, divisor_series_check, sigma};
use qident_core::identities::{
    master_first_index_grid_proof, verify_suite, EntryStatus, Identity, IntRange, SuiteConfig, SuiteEntry,
};
use qident_core::qseries::{gauss_binomial, has_nonnegative_integer_coeffs};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn suite(ids: &[Identity], n: (i64, i64), m: (i64, i64), tau: (i64, i64)) -> SuiteConfig {
    SuiteConfig {
        identities: ids.to_vec(),
        n_range: IntRange::new(n.0, n.1),
        m_range: IntRange::new(m.0, m.1),
        tau_range: IntRange::new(tau.0, tau.1),
        samples: 5,
        seed: 42,
        ..SuiteConfig::default()
    }
}

/// Fails on any failure or skip; reports per-identity pass counts.
fn all_pass(entries: &[SuiteEntry]) -> Outcome {
    if let Some(e) = entries.iter().find(|e| e.status != EntryStatus::Pass) {
        return Err(format!(
            "{:?} {}: {}",
            e.status,
            serde_json::to_string(&e.spec).unwrap(),
            e.reason
                .clone()
                .or_else(|| e.witness.as_ref().map(|w| w.relation.clone()))
                .unwrap_or_default()
        ));
    }
    let mut ids: Vec<Identity> = entries.iter().map(|e| e.identity).collect();
    ids.dedup();
    let counts: Vec<String> = ids
        .iter()
        .map(|id| format!("{id} {}", entries.iter().filter(|e| e.identity == *id).count()))
        .collect();
    Ok(counts.join(", "))
}

fn oracle_equivalence() -> Outcome {
    let mut cfg = suite(&[Identity::HsymOracle], (0, 5), (1, 1), (0, 5));
    cfg.samples = 6;
    let entries = verify_suite(&cfg);
    ensure(entries.len() >= 200, format!("only {} cases", entries.len()))?;
    all_pass(&entries)
}

fn partial_fractions_and_pole_sums() -> Outcome {
    let cfg = suite(&[Identity::PartialFraction, Identity::PoleSum], (1, 6), (1, 1), (0, 6));
    all_pass(&verify_suite(&cfg))
}

fn master_identity() -> Outcome {
    let cfg = suite(&[Identity::Master], (1, 6), (1, 1), (0, 4));
    let entries = verify_suite(&cfg);
    ensure(entries.len() == 21 * 5 * 5, format!("{} instances", entries.len()))?;
    all_pass(&entries)
}

fn first_index_identity() -> Outcome {
    let cfg = suite(&[Identity::MasterFirstIndex], (1, 6), (0, 9), (0, 0));
    let entries = verify_suite(&cfg);
    let mut covered = 0;
    let mut skipped = 0;
    for e in &entries {
        let (n, m) = (e.spec.n.unwrap(), e.spec.m.unwrap());
        let tau = m - n + 1;
        match e.status {
            EntryStatus::Fail => return Err(format!("failed at n = {n}, m = {m}")),
            EntryStatus::Skip => {
                ensure(tau < 0, format!("skip at n = {n}, m = {m} with tau = {tau}"))?;
                skipped += 1;
            }
            EntryStatus::Pass => {
                ensure(tau >= 0, "pass recorded for tau < 0")?;
                if m <= n + 3 {
                    covered += 1;
                }
            }
        }
    }
    // n - 1 <= m <= n + 3 has five values of m for every n, except n = 1 where m >= 0.
    ensure(covered == 6 * 5 * 5, format!("{covered} in-range instances"))?;
    ensure(skipped > 0, "no tau < 0 cells were exercised")?;
    Ok(format!("{covered} in-range pass, {skipped} skip"))
}

fn x_polynomial_and_coefficients() -> Outcome {
    // Each x-polynomial check also compares every x^i coefficient with the
    // double-sum formula of the coefficient identity.
    let cfg = suite(&[Identity::XPoly, Identity::XCoeff], (1, 6), (1, 4), (0, 0));
    all_pass(&verify_suite(&cfg))
}

fn dilcher_identity() -> Outcome {
    let cfg = suite(&[Identity::Dilcher], (1, 8), (1, 5), (0, 0));
    let entries = verify_suite(&cfg);
    ensure(entries.len() == 40, format!("{} instances", entries.len()))?;
    all_pass(&entries)
}

fn corollary_and_specializations() -> Outcome {
    let wide = suite(
        &[Identity::PfCorollary, Identity::XPolySimplePole],
        (0, 8),
        (1, 4),
        (0, 0),
    );
    let narrow = suite(&[Identity::XPolyUnitZ], (1, 6), (1, 4), (0, 0));
    let mut entries = verify_suite(&wide);
    entries.extend(verify_suite(&narrow));
    for e in &entries {
        if e.identity != Identity::XPolyUnitZ {
            ensure(!e.spec.z.as_ref().unwrap().is_one(), "sampled z = 1")?;
        }
    }
    all_pass(&entries)
}

fn divisor_cross_check() -> Outcome {
    let coeffs = divisor_series(64).map_err(|e| e.to_string())?;
    for (j, c) in coeffs.iter().enumerate().skip(1) {
        // Independent count: j is divisible by d for how many d <= j.
        let naive = (1..=j).filter(|d| j % d == 0).count() as u128;
        let trial = sigma(0, j as i64).map_err(|e| e.to_string())?;
        ensure(trial == naive, format!("sigma_0({j}) = {trial}, expected {naive}"))?;
        ensure(
            c == &Rational::from_integer(BigInt::from(trial)),
            format!("coefficient of q^{j} is {c}"),
        )?;
    }
    for n in 1..=64 {
        ensure(
            divisor_series_check(n).map_err(|e| e.to_string())?.passed,
            format!("n = {n}"),
        )?;
    }
    Ok("j <= 64".into())
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, j| acc * (n - j) / (j + 1))
}

fn gaussian_binomials() -> Outcome {
    let mut pascal: Vec<Vec<Poly>> = vec![vec![Poly::one()]];
    for n in 1..=12usize {
        let prev = &pascal[n - 1];
        let row = (0..=n)
            .map(|k| {
                let left = if k > 0 { prev[k - 1].clone() } else { Poly::zero() };
                let right = if k < n { prev[k].shift(k) } else { Poly::zero() };
                left + right
            })
            .collect();
        pascal.push(row);
    }
    let mut checked = 0;
    for n in 0..=12i64 {
        for k in 0..=n {
            let g = gauss_binomial(n, k).map_err(|e| e.to_string())?;
            let tag = format!("[{n}, {k}]");
            ensure(
                g == pascal[n as usize][k as usize],
                format!("{tag}: quotient != recurrence"),
            )?;
            ensure(g == gauss_binomial(n, n - k).unwrap(), format!("{tag}: not symmetric"))?;
            ensure(g.degree() == Some((k * (n - k)) as usize), format!("{tag}: degree"))?;
            let mut rev = g.coeffs().to_vec();
            rev.reverse();
            ensure(rev == g.coeffs(), format!("{tag}: not palindromic"))?;
            ensure(has_nonnegative_integer_coeffs(&g), format!("{tag}: coefficients"))?;
            let at_one = g.eval(&Rational::one()).to_integer().to_u64();
            ensure(
                at_one == Some(binomial(n as u64, k as u64)),
                format!("{tag}: q = 1 value"),
            )?;
            checked += 1;
        }
    }
    Ok(format!("{checked} coefficients"))
}

fn grid_proof() -> Outcome {
    let mut notes = Vec::new();
    for n in 1..=3 {
        let out = master_first_index_grid_proof(n, n).map_err(|e| e.to_string())?;
        let grid = out.spec.grid.clone().unwrap();
        ensure(out.passed, format!("n = m = {n}: {:?}", out.witness))?;
        let expected: usize = grid.degree_bounds.iter().map(|d| d + 1).product();
        ensure(grid.points == expected, "grid is not the full tensor product")?;
        notes.push(format!("n={n} D={:?} points={}", grid.degree_bounds, grid.points));
    }
    Ok(notes.join("; "))
}

fn qident(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_qident"))
        .args(args)
        .output()
        .expect("qident runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).expect("utf-8"),
    )
}

fn mutation_sensitivity() -> Outcome {
    let (code, out) = qident(&["verify", "--all", "--n-max", "4", "--mutate", "--seed", "42", "--json"]);
    ensure(code == 1, format!("exit code {code}"))?;
    let report: serde_json::Value = serde_json::from_str(&out).map_err(|e| e.to_string())?;
    let fails = report["summary"]["fail"].as_u64().unwrap_or(0);
    ensure(fails > 0, "no failures reported")?;
    let witnessed = report["results"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|r| r["status"] == "fail")
        .all(|r| {
            r["witness"]["terms"]
                .as_array()
                .is_some_and(|t| !t.is_empty() && t.iter().all(|t| t["num"].as_array().is_some_and(|n| !n.is_empty())))
        });
    ensure(witnessed, "failure without a nonzero witness")?;
    Ok(format!("exit 1, {fails} witnessed failures"))
}

fn strip_wall_time(json: &str) -> String {
    json.lines()
        .filter(|l| !l.trim_start().starts_with("\"wall_time_ms\""))
        .collect::<Vec<_>>()
        .join("\n")
}

fn determinism() -> Outcome {
    let args = ["verify", "--all", "--seed", "42", "--json"];
    let (c1, first) = qident(&args);
    let (c2, second) = qident(&args);
    ensure(c1 == 0 && c2 == 0, format!("exit codes {c1}, {c2}"))?;
    ensure(first.contains("\"wall_time_ms\""), "report lacks wall time")?;
    ensure(strip_wall_time(&first) == strip_wall_time(&second), "reports differ")?;
    Ok(format!("{} bytes identical", first.len()))
}

fn main() {
    let criteria: [Criterion; 12] = [
        ("h_series equals brute-force h_direct", oracle_equivalence),
        ("partial fractions and pole sums", partial_fractions_and_pole_sums),
        ("closed form of h_tau at (a-bq^k)/(c-zq^k)", master_identity),
        ("first-index closed form, tau < 0 skipped", first_index_identity),
        (
            "x-polynomial identity and its coefficients",
            x_polynomial_and_coefficients,
        ),
        ("Dilcher's identity with shifted cross-check", dilcher_identity),
        (
            "partial-fraction corollary and specializations",
            corollary_and_specializations,
        ),
        ("divisor counts from q-expansions", divisor_cross_check),
        ("Gaussian binomial properties", gaussian_binomials),
        ("interpolation-grid proof", grid_proof),
        ("mutation is detected", mutation_sensitivity),
        ("reports are deterministic", determinism),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        match result {
            Ok(detail) => println!("criterion {:>2} PASS  {name} ({detail}) [{}]", k + 1, secs(elapsed)),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why} [{}]", k + 1, secs(elapsed));
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}

fn secs(d: Duration) -> String {
    format!("{:.2}s", d.as_secs_f64())
}
