//! Brute-force weighted counts for the spt-type functions.

use serde::{Deserialize, Serialize};

use crate::rings::Int;
use crate::sptcrank::SptFamily;

use super::partition::{enumerate_overpartitions, enumerate_partitions, Overpartition, Partition};

/// The classic spt(n): partitions of n counted by the multiplicity of their
/// smallest part.
pub fn classic_spt(n: u32) -> Int {
    Int::from(enumerate_partitions(n).iter().map(|p| p.spt() as i64).sum::<i64>())
}

/// Parts allowed in the J-family partitions with smallest part s: s..=top,
/// plus multiples of 3 that are at least 3s.
fn j_parts_ok(p: &Partition, top: u32) -> bool {
    let Some(s) = p.smallest() else { return false };
    p.parts().iter().all(|&x| x <= top || (x >= 3 * s && x % 3 == 0))
}

/// Membership in J1(n): no part in [2s, 3s), parts ≥ 3s divisible by 3.
pub fn in_j1(p: &Partition) -> bool {
    p.smallest().is_some_and(|s| j_parts_ok(p, 2 * s - 1))
}

/// Membership in J2(n): no part in (2s, 3s), parts ≥ 3s divisible by 3.
pub fn in_j2(p: &Partition) -> bool {
    p.smallest().is_some_and(|s| j_parts_ok(p, 2 * s))
}

/// Membership in J3(n): as J2 with the smallest part repeated.
pub fn in_j3(p: &Partition) -> bool {
    in_j2(p) && p.spt() >= 2
}

/// The partition half of an F3/G4/AG4 pair: its weight, or `None` when it is
/// not admissible.
fn first_component(family: SptFamily, p: &Partition) -> Option<i64> {
    let s = p.smallest()?;
    let spt = p.spt();
    match family {
        SptFamily::F3 => {
            let ok = spt % 2 == 1 && p.parts().iter().all(|&x| x < 2 * s || x % 2 == 0);
            ok.then(|| (spt as i64 + 1) / 2)
        }
        SptFamily::G4 | SptFamily::AG4 => {
            let least = if family == SptFamily::G4 { s + 2 } else { s };
            let ok = spt >= least
                && (spt + s) % 2 == 0
                && p.parts().iter().all(|&x| x <= 2 * s || x % 2 == 0)
                && p.parts().iter().all(|&x| x <= 4 * s || x % 4 == 2);
            let shift = if family == SptFamily::G4 { 0 } else { 2 };
            ok.then(|| (spt as i64 - s as i64 + shift) / 2)
        }
        _ => None,
    }
}

/// The overpartition half, given s = s(π₁): its sign, or `None` when it is
/// not admissible.
fn second_component(family: SptFamily, s: u32, o: &Overpartition) -> Option<i64> {
    let plain_ok = o.plain.parts().iter().all(|&x| x % 2 == 0) && o.smallest_plain().is_none_or(|x| x >= 2 * s + 2);
    let over_ok = o.smallest_overlined().is_none_or(|x| x >= s + 1);
    if !(plain_ok && over_ok) {
        return None;
    }
    match family {
        SptFamily::F3 => Some(if o.overlined_count() % 2 == 1 { -1 } else { 1 }),
        SptFamily::G4 | SptFamily::AG4 => {
            if o.overlined.iter().any(|&x| x >= 2 * s + 1 && x % 2 == 0) {
                return None;
            }
            Some(if (s as usize + o.k(s)) % 2 == 1 { -1 } else { 1 })
        }
        _ => None,
    }
}

fn pair_oracle(family: SptFamily, n: u32) -> i64 {
    let overs: Vec<Vec<Overpartition>> = (0..n).map(enumerate_overpartitions).collect();
    let mut total = 0i64;
    for m in 1..=n {
        for p in enumerate_partitions(m) {
            let Some(w) = first_component(family, &p) else { continue };
            let s = p.smallest().expect("nonempty");
            let signs: i64 = overs[(n - m) as usize].iter().filter_map(|o| second_component(family, s, o)).sum();
            total += w * signs;
        }
    }
    total
}

/// spt_X(n) counted directly from the combinatorial description of family X.
pub fn spt_oracle(family: SptFamily, n: u32) -> Int {
    let parts = || enumerate_partitions(n).into_iter();
    Int::from(match family {
        SptFamily::B2 => parts().map(|p| p.spt() as i64 - 1).filter(|&w| w > 0).sum::<i64>(),
        SptFamily::J1 => parts().filter(in_j1).map(|p| p.spt() as i64).sum(),
        SptFamily::J2 => parts().filter(in_j2).count() as i64,
        SptFamily::J3 => parts().filter(in_j3).count() as i64,
        SptFamily::F3 | SptFamily::G4 | SptFamily::AG4 => pair_oracle(family, n),
    })
}

/// Splits every part equal to 2s(π) into s(π) + s(π).
pub fn split_double_smallest(p: &Partition) -> Partition {
    let Some(s) = p.smallest() else { return p.clone() };
    let mut parts = Vec::with_capacity(p.len() * 2);
    for &x in p.parts() {
        if x == 2 * s {
            parts.extend([s, s]);
        } else {
            parts.push(x);
        }
    }
    Partition::new(parts)
}

/// Outcome of checking the fiber structure of J2(n) → J1(n) and J3(n) → J1(n).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberReport {
    pub n: u32,
    pub j1: usize,
    pub j2: usize,
    pub j3: usize,
    pub spt_j1: i64,
    pub ok: bool,
    pub failure: Option<String>,
}

/// Checks that splitting the parts 2s(π) maps J2(n) onto J1(n) with fibers
/// of size ⌊(spt+1)/2⌋ and J3(n) into J1(n) with fibers of size ⌊spt/2⌋,
/// where spt is taken on the image; hence spt_J1 = spt_J2 + spt_J3.
pub fn j_fiber_check(n: u32) -> FiberReport {
    use std::collections::HashMap;
    let all = enumerate_partitions(n);
    let j1: Vec<&Partition> = all.iter().filter(|p| in_j1(p)).collect();
    let j2: Vec<&Partition> = all.iter().filter(|p| in_j2(p)).collect();
    let j3: Vec<&Partition> = all.iter().filter(|p| in_j3(p)).collect();
    let spt_j1: i64 = j1.iter().map(|p| p.spt() as i64).sum();
    let mut failure = None;
    for (name, src, fiber) in [
        ("J2", &j2, (|k: u32| (k + 1) / 2) as fn(u32) -> u32),
        ("J3", &j3, (|k: u32| k / 2) as fn(u32) -> u32),
    ] {
        let mut counts: HashMap<Partition, u32> = HashMap::new();
        for p in src.iter() {
            let img = split_double_smallest(p);
            if !in_j1(&img) {
                failure.get_or_insert(format!("{name}: image of {p} is {img}, outside J1({n})"));
            }
            *counts.entry(img).or_default() += 1;
        }
        for t in &j1 {
            let got = counts.get(*t).copied().unwrap_or(0);
            if got != fiber(t.spt()) {
                failure.get_or_insert(format!("{name}: fiber over {t} has {got} elements, expected {}", fiber(t.spt())));
            }
        }
    }
    if failure.is_none() && spt_j1 != (j2.len() + j3.len()) as i64 {
        failure = Some(format!("spt_J1({n}) = {spt_j1} but |J2| + |J3| = {}", j2.len() + j3.len()));
    }
    FiberReport { n, j1: j1.len(), j2: j2.len(), j3: j3.len(), spt_j1, ok: failure.is_none(), failure }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classic_values() {
        let v: Vec<i64> = [1, 2, 4].iter().map(|&n| classic_spt(n).to_i64().unwrap()).collect();
        assert_eq!(v, [1, 3, 10]);
    }

    #[test]
    fn small_oracle_values() {
        assert_eq!(spt_oracle(SptFamily::B2, 4).to_i64(), Some(5));
        assert_eq!(spt_oracle(SptFamily::J2, 3).to_i64(), Some(3));
        assert_eq!(spt_oracle(SptFamily::J1, 2).to_i64(), Some(3));
    }

    #[test]
    fn fiber_over_ones() {
        let r = j_fiber_check(3);
        assert!(r.ok, "{:?}", r.failure);
        // (3), (2,1), (1,1,1) in J2(3); (2,1) and (1,1,1) both land on (1,1,1).
        assert_eq!(split_double_smallest(&Partition::new(vec![2, 1])), Partition::new(vec![1, 1, 1]));
        assert!(j_fiber_check(1).ok);
    }
}
