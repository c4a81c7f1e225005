use sptforge_core::combinatorics::*;
use sptforge_core::qseries::{AnySeries, Mode, Term};
use sptforge_core::qseries::qpoch_inf;
use sptforge_core::sptcrank::{spt_table, SptFamily};

#[test]
fn oracles_match_series() {
    for f in SptFamily::ALL {
        let n_max = match f {
            SptFamily::F3 | SptFamily::G4 | SptFamily::AG4 => 30,
            _ => 40,
        };
        let series = spt_table(f, n_max).unwrap();
        for n in 1..=n_max {
            assert_eq!(spt_oracle(f, n as u32), series[n - 1], "{f} at n={n}");
        }
    }
}

#[test]
fn b2_is_spt_minus_p() {
    for n in 1..=40u32 {
        let p = enumerate_partitions(n).len() as i64;
        let d = classic_spt(n).to_i64().unwrap() - p;
        assert_eq!(spt_oracle(SptFamily::B2, n).to_i64(), Some(d));
    }
}

#[test]
fn partition_counts_match_generating_function() {
    let inv = Term::one().over_all(&qpoch_inf(1, 1, 61));
    let s = AnySeries::evaluate(Mode::One, &[inv], 61, 0).unwrap();
    let s = s.as_integer().unwrap();
    for n in 0..=60u32 {
        assert_eq!(Some(enumerate_partitions(n).len() as i64), s.coeff(n as usize).to_i64(), "n={n}");
    }
}

#[test]
fn j_fibers() {
    for n in 1..=30 {
        let r = j_fiber_check(n);
        assert!(r.ok, "n={n}: {:?}", r.failure);
    }
}

#[test]
fn classic_spt_series_matches_enumeration() {
    let s = sptforge_core::sptcrank::classic_spt_table(30).unwrap();
    assert_eq!(s[3].to_i64(), Some(10));
    for n in 1..=30u32 {
        assert_eq!(s[n as usize - 1], classic_spt(n), "n={n}");
    }
}
