//! Acceptance suite: prints one PASS/FAIL line per criterion and fails if
//! any criterion fails. Lines go straight to stdout so they survive test
//! output capture.

use std::io::Write;
use std::process::Command;
use std::time::{Duration, Instant};

use sptforge_core::bailey::{
    check_conjugate_pair, check_lemma_variant, check_limiting_lemma, check_pair_relation, BaileyPair, PairName, Rho,
    RESCALE_EXPONENTS,
};
use sptforge_core::combinatorics::{classic_spt, enumerate_partitions, j_fiber_check, spt_oracle};
use sptforge_core::qseries::{qpoch_inf, AnySeries, Mode, MonomialSpec, Term};
use sptforge_core::registry::{self, IdentityCase};
use sptforge_core::report::VerificationReport;
use sptforge_core::rings::Int;
use sptforge_core::sptcrank::{check_congruence, classic_spt_table, spt_table, SptFamily, CONGRUENCES};

type Outcome = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn report_ok(r: &VerificationReport) -> Outcome {
    ensure(r.is_verified(), || match (&r.first_mismatch, &r.error) {
        (Some(m), _) => format!("{} at order {}: q^{} lhs {} rhs {}", r.id, r.order, m.power, m.lhs, m.rhs),
        (None, Some(e)) => format!("{}: {e}", r.id),
        _ => format!("{} not verified", r.id),
    })
}

/// p(n) for 0 ≤ n ≤ n_max by the part-by-part recurrence.
fn partition_counts(n_max: usize) -> Vec<Int> {
    let mut p = vec![Int::from(0); n_max + 1];
    p[0] = Int::from(1);
    for part in 1..=n_max {
        for n in part..=n_max {
            let prev = p[n - part].clone();
            p[n] += &prev;
        }
    }
    p
}

fn threads() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

fn verify_ids(ids: &[&str], min_order: usize) -> Outcome {
    let cases: Vec<&IdentityCase> = ids
        .iter()
        .map(|id| registry::lookup(id).ok_or_else(|| format!("{id} missing from catalog")))
        .collect::<Result<_, _>>()?;
    let reports = registry::verify_cases(&cases, |c| c.default_order.max(min_order), threads()).map_err(|e| e.to_string())?;
    reports.iter().try_for_each(report_ok)
}

fn classic_anchor() -> Outcome {
    ensure(classic_spt(4) == Int::from(10), || format!("spt(4) = {}", classic_spt(4)))?;
    let inv = Term::one().over_all(&qpoch_inf(1, 1, 61));
    let s = AnySeries::evaluate(Mode::One, &[inv], 61, 0).map_err(|e| e.to_string())?;
    let s = s.as_integer().expect("integer series");
    let p = partition_counts(60);
    for n in 0..=60 {
        ensure(s.coeff(n) == &p[n], || format!("p({n}): series {} recurrence {}", s.coeff(n), p[n]))?;
    }
    for n in 0..=25u32 {
        let count = enumerate_partitions(n).len();
        ensure(Int::from(count) == p[n as usize], || format!("p({n}): enumeration {count}"))?;
    }
    Ok(())
}

fn b2_is_spt_minus_p() -> Outcome {
    let b2 = spt_table(SptFamily::B2, 200).map_err(|e| e.to_string())?;
    let spt = classic_spt_table(200).map_err(|e| e.to_string())?;
    let p = partition_counts(200);
    for n in 1..=200 {
        let want = &spt[n - 1] - &p[n];
        ensure(b2[n - 1] == want, || format!("n={n}: spt_B2 {} vs spt - p {want}", b2[n - 1]))?;
    }
    for n in 1..=40u32 {
        let want = classic_spt(n) - Int::from(enumerate_partitions(n).len());
        let got = spt_oracle(SptFamily::B2, n);
        ensure(got == want, || format!("enumeration n={n}: {got} vs {want}"))?;
    }
    Ok(())
}

fn j1_is_j2_plus_j3() -> Outcome {
    let [j1, j2, j3] = [SptFamily::J1, SptFamily::J2, SptFamily::J3].map(|f| spt_table(f, 200));
    let (j1, j2, j3) = (j1.map_err(|e| e.to_string())?, j2.map_err(|e| e.to_string())?, j3.map_err(|e| e.to_string())?);
    for n in 0..200 {
        ensure(j1[n] == &j2[n] + &j3[n], || format!("series n={}: {} vs {} + {}", n + 1, j1[n], j2[n], j3[n]))?;
    }
    for n in 1..=30u32 {
        let fiber = j_fiber_check(n);
        ensure(fiber.ok, || format!("fiber map n={n}: {}", fiber.failure.clone().unwrap_or_default()))?;
        let [a, b, c] = [SptFamily::J1, SptFamily::J2, SptFamily::J3].map(|f| spt_oracle(f, n));
        ensure(a == &b + &c, || format!("enumeration n={n}: {a} vs {b} + {c}"))?;
    }
    Ok(())
}

fn congruences() -> Outcome {
    for (f, p, b) in CONGRUENCES {
        let r = check_congruence(f, p, b, 300).map_err(|e| e.to_string())?;
        ensure(r.is_verified(), || match &r.failure {
            Some(x) => format!("{}: {} fails at {}: {}", r.id(), x.check, x.argument, x.detail),
            None => format!("{} not verified", r.id()),
        })?;
    }
    Ok(())
}

const SERIES: [&str; 7] =
    ["series_J1", "series_J2", "series_J3", "series_F3", "series_G4", "series_AG4", "series_J_additivity"];
const PRODUCTS: [&str; 3] = ["product_F3", "product_G4", "product_AG4"];
const DISSECTIONS: [(&str, usize); 7] = [
    ("dissect_F3_3", 240),
    ("dissect_B2_5", 250),
    ("dissect_F3_5", 250),
    ("dissect_G4_5", 250),
    ("dissect_AG4_5", 250),
    ("dissect_B2_7", 250),
    ("dissect_F3_7", 250),
];

fn dissections() -> Outcome {
    for (id, order) in DISSECTIONS {
        let r = registry::verify_case(id, Some(order)).map_err(|e| e.to_string())?;
        ensure(r.order == order, || format!("{id} ran at {} instead of {order}", r.order))?;
        report_ok(&r)?;
    }
    Ok(())
}

fn auxiliary_catalog() -> Outcome {
    let primary: Vec<&str> = SERIES.iter().chain(&PRODUCTS).copied().chain(DISSECTIONS.iter().map(|d| d.0)).collect();
    let rest: Vec<&str> = registry::catalog().iter().map(|c| c.id.as_str()).filter(|id| !primary.contains(id)).collect();
    ensure(rest.len() >= 30, || format!("only {} auxiliary cases", rest.len()))?;
    verify_ids(&rest, 0)
}

fn bailey_infrastructure() -> Outcome {
    let ok = |r: sptforge_core::Result<VerificationReport>| r.map_err(|e| e.to_string()).and_then(|r| report_ok(&r));
    for name in PairName::CATALOG {
        ok(check_pair_relation(&BaileyPair::catalog(name).map_err(|e| e.to_string())?, 25, 200))?;
    }
    ok(check_conjugate_pair(MonomialSpec::ONE, MonomialSpec::ONE, 10, 120))?;
    ok(check_conjugate_pair(MonomialSpec::zq(1, 0), MonomialSpec::q(2), 6, 120))?;
    let b2 = BaileyPair::catalog(PairName::B2).map_err(|e| e.to_string())?;
    let z = MonomialSpec::zq(1, 0);
    ok(check_limiting_lemma(&b2, Rho::Finite(z), Rho::Finite(z.inv()), 120))?;
    for k in 1..=7u8 {
        let mut verdicts = Vec::new();
        for s in RESCALE_EXPONENTS {
            for name in [PairName::GenericStar, PairName::GenericStarStar] {
                let p = BaileyPair::generic(name, MonomialSpec::q(s), 1).map_err(|e| e.to_string())?;
                let r = check_lemma_variant(k, &p, 120).map_err(|e| format!("variant {k}, s={s}: {e}"))?;
                verdicts.push(r.status);
                report_ok(&r)?;
            }
        }
        ensure(verdicts.windows(2).all(|w| w[0] == w[1]), || format!("variant {k} depends on s"))?;
    }
    let g4 = BaileyPair::catalog(PairName::G4).map_err(|e| e.to_string())?;
    ok(check_lemma_variant(1, &g4, 120))?;
    for j in 1..=3 {
        let p = BaileyPair::generic(PairName::GenericStar, MonomialSpec::q(4 * j - 2), 2).map_err(|e| e.to_string())?;
        ok(check_lemma_variant(7, &p, 120))?;
    }
    Ok(())
}

fn oracle_equivalence() -> Outcome {
    for f in SptFamily::ALL {
        let n_max = match f {
            SptFamily::F3 | SptFamily::G4 | SptFamily::AG4 => 30,
            _ => 40,
        };
        let series = spt_table(f, n_max).map_err(|e| e.to_string())?;
        for n in 1..=n_max {
            let o = spt_oracle(f, n as u32);
            ensure(o == series[n - 1], || format!("{f} n={n}: series {} oracle {o}", series[n - 1]))?;
        }
    }
    Ok(())
}

fn run_verify_all(parallelism: usize) -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_sptforge"))
        .args(["--no-timing", "--format", "json", "--parallelism", &parallelism.to_string(), "verify", "--id", "*"])
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.success(), || format!("parallelism {parallelism}: exit {:?}", out.status.code()))?;
    Ok(out.stdout)
}

fn determinism() -> Outcome {
    let a = run_verify_all(1)?;
    let b = run_verify_all(8)?;
    ensure(!a.is_empty() && a == b, || "reports differ between parallelism 1 and 8".into())
}

#[test]
fn acceptance_criteria() {
    let criteria: [(&str, Duration, fn() -> Outcome); 11] = [
        ("classic spt anchor and partition counts", Duration::from_secs(1), classic_anchor),
        ("spt_B2 = spt - p", Duration::from_secs(10), b2_is_spt_minus_p),
        ("spt_J1 = spt_J2 + spt_J3 with fiber map", Duration::from_secs(30), j1_is_j2_plus_j3),
        ("fifteen congruences to 300", Duration::from_secs(300), congruences),
        ("single-series identities to 120", Duration::from_secs(180), || verify_ids(&SERIES, 120)),
        ("product identities to 150", Duration::from_secs(60), || verify_ids(&PRODUCTS, 150)),
        ("seven dissections to 240/250/250", Duration::from_secs(600), dissections),
        ("auxiliary catalog at default orders", Duration::from_secs(600), auxiliary_catalog),
        ("Bailey infrastructure", Duration::from_secs(180), bailey_infrastructure),
        ("oracle equivalence", Duration::from_secs(300), oracle_equivalence),
        ("deterministic JSON reports", Duration::MAX, determinism),
    ];
    let mut failed = Vec::new();
    let mut stdout = std::io::stdout();
    for (i, (name, limit, check)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = check().and_then(|()| {
            let t = start.elapsed();
            ensure(t <= limit, || format!("took {t:.1?}, limit {limit:?}"))
        });
        let t = start.elapsed();
        let line = match &outcome {
            Ok(()) => format!("PASS criterion {:>2}: {name} ({t:.2?})", i + 1),
            Err(why) => format!("FAIL criterion {:>2}: {name}: {why}", i + 1),
        };
        writeln!(stdout, "{line}").unwrap();
        if outcome.is_err() {
            failed.push(i + 1);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
