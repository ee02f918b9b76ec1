//! End-to-end acceptance run: one PASS/FAIL line per criterion.

use std::collections::BTreeMap;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use partlab_core::concave::{check_phi, phi, phi_inverse, ConcaveComposition};
use partlab_core::identities::{self, formulas, Perturbation};
use partlab_core::involution::{verify_involution, Flavor, Refinement};
use partlab_core::partition::Partition;
use partlab_core::series::Series;
use partlab_core::stats::{count, counts_up_to, distribution, StatKey};

type Outcome = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn worked_examples() -> Outcome {
    let c = |k, n| count(k, n, None).map_err(err);
    ensure(c(StatKey::F, 6)? == 3.into(), || "F(6) != 3".into())?;
    ensure(c(StatKey::F, 7)? == 5.into(), || "F(7) != 5".into())?;
    for (n, split) in [(7, 5), (6, 4)] {
        let (odd, even) = (c(StatKey::UFOdd, n)?, c(StatKey::UFEven, n)?);
        ensure(odd == split.into() && even == split.into(), || {
            format!("unflushed partitions of {n}: {odd} odd, {even} even")
        })?;
    }
    Ok("F(6)=3, F(7)=5, unflushed 7: 5/5, 6: 4/4".into())
}

fn bijection() -> Outcome {
    let known = [
        ("2>1>0=0<1<2", "(2,2,2)"),
        ("2>1=1<2", "(3,3)"),
        ("3>2>0=0<1<2", "(4,4)"),
    ];
    for (c, p) in known {
        let c: ConcaveComposition = c.parse().map_err(err)?;
        let p: Partition = p.parse().map_err(err)?;
        let image = phi(&c).map_err(err)?;
        ensure(image == p, || format!("{c} maps to {image}, expected {p}"))?;
        let back = phi_inverse(&p).map_err(err)?;
        ensure(back == c, || {
            format!("{p} pulls back to {back}, expected {c}")
        })?;
    }
    for n in 1..=25 {
        let s = check_phi(n).map_err(err)?;
        ensure(s.bijective, || format!("not a bijection at n={n}: {s:?}"))?;
    }
    Ok("three worked maps exact; bijective for 1 <= n <= 25".into())
}

fn generating_functions() -> Outcome {
    let n = 30;
    let f = counts_up_to(StatKey::F, n, None).map_err(err)?;
    let pr = counts_up_to(StatKey::PR, n, None).map_err(err)?;
    let flushed = formulas::flushed_fraction(n).map_err(err)?;
    let concave = formulas::concave_even_fraction(n).map_err(err)?;
    for k in 1..=n {
        ensure(flushed.coeff(k) == &f[k], || {
            format!("flushed series differs from F({k})")
        })?;
        let ce = partlab_core::concave::ce(k);
        ensure(concave.coeff(k) == &ce, || {
            format!("concave series differs from ce({k})")
        })?;
        ensure(pr[k] == f[k], || {
            format!("PR({k}) = {} but F({k}) = {}", pr[k], f[k])
        })?;
    }
    Ok(format!(
        "F, ce, PR agree with their series for 1 <= n <= {n}"
    ))
}

fn involutions() -> Outcome {
    let mut runs = vec![];
    for flavor in [Flavor::Alpha, Flavor::Alpha1, Flavor::Alpha2] {
        runs.push((flavor, 20, Refinement::None));
    }
    runs.push((Flavor::Alpha, 15, Refinement::TriangleSize));
    runs.push((Flavor::Alpha, 15, Refinement::TriangleSizePlusSmallest));
    for (flavor, w, r) in runs {
        let report = verify_involution(flavor, w, r).map_err(err)?;
        if !report.passed {
            let bad = report.weights.iter().find(|x| !x.passed).unwrap();
            return Err(format!(
                "{flavor} {r:?} weight {}: {}",
                bad.weight,
                bad.counterexample.as_deref().unwrap_or("")
            ));
        }
    }
    Ok("alpha, alpha1, alpha2 through weight 20; alpha z-refined through 15".into())
}

fn registry() -> Outcome {
    let required = [
        "eq1.1-flushed-gf",
        "eq1.2-ce-gf",
        "thm2.1",
        "cor2.2a",
        "cor2.2b",
        "eq2.4-phi",
        "eq2.5-psi",
        "eq2.6",
        "eq2.7",
        "thm2.3a",
        "thm2.3b",
        "cor2.4",
        "thm3.1-counts",
        "lem3.2",
        "thm3.3",
        "thm3.4-QE",
        "cor3.5a",
        "cor3.5b",
        "cor3.6-durfee",
        "thm3.7-fine",
        "cor3.8-ramanujan",
        "cor3.9a",
        "cor3.9b",
        "cor3.9s1",
        "cor3.9s2",
        "cor3.9s3",
        "thm3.10-counts",
        "lem4.1a",
        "lem4.1b",
        "eq4.3-fine-franklin",
        "eq4.4",
        "thm4.2-F-eq-PR",
        "thm4.3-ce-eq-IMPR",
        "cor4.4-unflushed-m-parts",
        "thm4.5-parity",
    ];
    for id in required {
        let case = identities::lookup(id).map_err(err)?;
        ensure(!case.optional, || format!("{id} is marked optional"))?;
    }
    let reports = identities::verify_all(&BTreeMap::new(), None).map_err(err)?;
    let failed: Vec<_> = reports
        .iter()
        .filter(|r| !r.optional && !r.verified())
        .map(|r| r.to_string())
        .collect();
    ensure(failed.is_empty(), || failed.join("; "))?;
    let required_count = reports.iter().filter(|r| !r.optional).count();
    let orders: std::collections::BTreeSet<_> = reports.iter().map(|r| r.order).collect();
    Ok(format!(
        "{required_count} required cases verified at default orders {orders:?}"
    ))
}

fn ramanujan() -> Outcome {
    let r = identities::verify_identity("cor3.8-ramanujan", Some(100)).map_err(err)?;
    ensure(r.verified(), || r.to_string())?;
    Ok("phi(-q) - 2 psi(-q) = f(q) through q^100".into())
}

fn frobenius_difference() -> Outcome {
    let n = 30;
    let series = formulas::frobenius_cleared_bi(n).map_err(err)?;
    for k in 0..=n {
        let de = distribution(StatKey::DeMn, k).map_err(err)?;
        let dn = distribution(StatKey::DoMn, k).map_err(err)?;
        let mut diff: BTreeMap<i64, num_bigint::BigInt> = de;
        for (m, c) in dn {
            *diff.entry(m).or_default() -= c;
        }
        diff.retain(|_, v| *v != 0.into());
        let mut expected = BTreeMap::new();
        if let Some(j) = (0..=k).find(|j| j * (j + 1) / 2 == k) {
            expected.insert(
                j as i64,
                num_bigint::BigInt::from(if j % 2 == 0 { 1 } else { -1 }),
            );
        }
        ensure(diff == expected, || {
            format!("n={k}: enumerated {diff:?}, expected {expected:?}")
        })?;
        let row = series.coeff(k);
        for m in 0..=k {
            let enumerated = diff.get(&(m as i64)).cloned().unwrap_or_default();
            ensure(row.coeff(m) == enumerated, || {
                format!(
                    "series coefficient of z^{m} q^{k} is {}, enumeration {enumerated}",
                    row.coeff(m)
                )
            })?;
        }
    }
    Ok(format!(
        "D_e - D_o is the signed triangular indicator for n <= {n}"
    ))
}

fn even_distinct() -> Outcome {
    let n = 40;
    let qe = counts_up_to(StatKey::QE, n, None).map_err(err)?;
    let q = counts_up_to(StatKey::Q, n, None).map_err(err)?;
    for k in 0..=n {
        let mut alt = num_bigint::BigInt::from(0);
        let mut j = 0;
        while j * j <= k {
            if j % 2 == 0 {
                alt += &q[k - j * j];
            } else {
                alt -= &q[k - j * j];
            }
            j += 1;
        }
        ensure(alt == qe[k], || {
            format!("Q_E({k}) = {} but the alternating sum is {alt}", qe[k])
        })?;
    }
    Ok(format!("Q_E(n) = sum (-1)^j Q(n - j^2) for n <= {n}"))
}

fn smallest_missing() -> Outcome {
    let n = 35;
    let a = counts_up_to(StatKey::FrobNoZeroTop, n, None).map_err(err)?;
    let b = counts_up_to(StatKey::SmallestMissingOdd, n, None).map_err(err)?;
    let s =
        &formulas::partition_gf(n).map_err(err)? * &formulas::theta_triangular(n).map_err(err)?;
    ensure(a == b, || "the two enumerations differ".into())?;
    ensure(Series::from_coeffs(n, a.clone()) == s, || {
        "enumeration differs from the series".into()
    })?;
    let head: Vec<String> = a[..5].iter().map(|c| c.to_string()).collect();
    ensure(head == ["1", "0", "1", "2", "3"], || {
        format!("head {head:?}")
    })?;
    Ok(format!(
        "both counts equal the series for n <= {n}; head {}",
        head.join(",")
    ))
}

fn unflushed() -> Outcome {
    for n in 1..=30 {
        let (o, e) = (
            count(StatKey::UFOdd, n, None).map_err(err)?,
            count(StatKey::UFEven, n, None).map_err(err)?,
        );
        ensure(o == e, || format!("n={n}: {o} odd, {e} even"))?;
    }
    for n in 0..=25 {
        let uf = distribution(StatKey::UF, n).map_err(err)?;
        let p = distribution(StatKey::P, n).map_err(err)?;
        let x = distribution(StatKey::XCor44, n).map_err(err)?;
        for m in 0..=n as i64 {
            let get =
                |d: &BTreeMap<i64, num_bigint::BigInt>| d.get(&m).cloned().unwrap_or_default();
            ensure(get(&uf) == get(&p) - get(&x), || {
                format!("UF({m},{n}) != p - X")
            })?;
        }
    }
    Ok("UF_odd = UF_even for n <= 30; UF(m,n) = p(m,n) - X(m,n) for n <= 25".into())
}

fn self_test() -> Outcome {
    let p = Perturbation {
        degree: 3,
        delta: 1.into(),
    };
    let reports = identities::verify_all(&BTreeMap::new(), Some(("thm2.1", &p))).map_err(err)?;
    let failed: Vec<_> = reports.iter().filter(|r| !r.verified()).collect();
    ensure(failed.len() == 1 && failed[0].id == "thm2.1", || {
        format!("{} cases failed", failed.len())
    })?;
    let degree = failed[0].first_discrepancy.as_ref().map(|d| d.degree);
    ensure(degree == Some(3), || {
        format!("discrepancy reported at {degree:?}")
    })?;

    let out = Command::new(env!("CARGO_BIN_EXE_partlab"))
        .args([
            "verify",
            "thm2.1",
            "--perturb-degree",
            "3",
            "--format",
            "json",
        ])
        .output()
        .map_err(err)?;
    let code = out.status.code();
    ensure(code == Some(1), || format!("exit status {code:?}"))?;
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).map_err(err)?;
    ensure(v["first_discrepancy"]["degree"] == 3, || {
        format!("report {v}")
    })?;
    Ok("perturbed thm2.1 fails alone at degree 3, CLI exits 1".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("worked examples", Duration::from_secs(1), worked_examples),
        ("bijection phi", Duration::from_secs(120), bijection),
        (
            "generating functions",
            Duration::from_secs(120),
            generating_functions,
        ),
        ("involutions", Duration::from_secs(300), involutions),
        ("identity registry", Duration::from_secs(300), registry),
        ("ramanujan relation", Duration::from_secs(30), ramanujan),
        ("D_e - D_o", Duration::from_secs(120), frobenius_difference),
        (
            "Q_E alternating sum",
            Duration::from_secs(120),
            even_distinct,
        ),
        (
            "smallest missing part",
            Duration::from_secs(120),
            smallest_missing,
        ),
        ("unflushed parity", Duration::from_secs(120), unflushed),
        ("self-test", Duration::from_secs(300), self_test),
    ];
    let mut failures = 0;
    for (i, (name, budget, f)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = f();
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|msg| {
            if elapsed <= budget {
                Ok(msg)
            } else {
                Err(format!("{msg}, but took {elapsed:.2?} (budget {budget:?})"))
            }
        });
        match outcome {
            Ok(msg) => println!("PASS {:>2} {name}: {msg} [{elapsed:.2?}]", i + 1),
            Err(msg) => {
                failures += 1;
                println!("FAIL {:>2} {name}: {msg} [{elapsed:.2?}]", i + 1);
            }
        }
    }
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
