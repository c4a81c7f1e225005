//! Partitions, overpartitions and their statistics.

use serde::{Deserialize, Serialize};

/// A partition stored as a nonincreasing list of positive parts.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Sorts `parts` into nonincreasing order; zero parts are dropped.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Number of parts, #(π).
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Smallest part s(π); `None` for the empty partition.
    pub fn smallest(&self) -> Option<u32> {
        self.parts.last().copied()
    }

    /// Number of occurrences of the smallest part, spt(π).
    pub fn spt(&self) -> u32 {
        match self.smallest() {
            Some(s) => self.multiplicity(s),
            None => 0,
        }
    }

    pub fn multiplicity(&self, part: u32) -> u32 {
        self.parts.iter().filter(|&&p| p == part).count() as u32
    }
}

impl std::fmt::Display for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

/// An overpartition, identified with a pair of a partition (the plain parts)
/// and a set of distinct parts (the overlined ones).
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Overpartition {
    pub plain: Partition,
    /// Distinct, in decreasing order.
    pub overlined: Vec<u32>,
}

impl Overpartition {
    pub fn size(&self) -> u32 {
        self.plain.size() + self.overlined.iter().sum::<u32>()
    }

    /// Smallest non-overlined part, s^n(π).
    pub fn smallest_plain(&self) -> Option<u32> {
        self.plain.smallest()
    }

    /// Smallest overlined part, s^o(π).
    pub fn smallest_overlined(&self) -> Option<u32> {
        self.overlined.last().copied()
    }

    /// Number of overlined parts, #^o(π).
    pub fn overlined_count(&self) -> usize {
        self.overlined.len()
    }

    /// k_m(π): the number of overlined parts less than 2m + 1.
    pub fn k(&self, m: u32) -> usize {
        self.overlined.iter().filter(|&&p| p < 2 * m + 1).count()
    }
}

/// All partitions of n in decreasing lexicographic order, e.g. for n = 4:
/// 4, 3+1, 2+2, 2+1+1, 1+1+1+1.
pub fn enumerate_partitions(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fill(n, n, &mut cur, &mut |p| out.push(Partition { parts: p.to_vec() }));
    out
}

fn fill(rest: u32, max: u32, cur: &mut Vec<u32>, emit: &mut impl FnMut(&[u32])) {
    if rest == 0 {
        emit(cur);
        return;
    }
    for p in (1..=max.min(rest)).rev() {
        cur.push(p);
        fill(rest - p, p, cur, emit);
        cur.pop();
    }
}

/// Sets of distinct positive integers summing to n, largest part first.
pub fn enumerate_distinct_parts(n: u32) -> Vec<Vec<u32>> {
    fn go(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=max.min(rest)).rev() {
            cur.push(p);
            go(rest - p, p - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// All overpartitions of n.
pub fn enumerate_overpartitions(n: u32) -> Vec<Overpartition> {
    let mut out = Vec::new();
    for k in 0..=n {
        let distinct = enumerate_distinct_parts(n - k);
        for plain in enumerate_partitions(k) {
            for d in &distinct {
                out.push(Overpartition { plain: plain.clone(), overlined: d.clone() });
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partitions_of_four() {
        let ps: Vec<String> = enumerate_partitions(4).iter().map(|p| p.to_string()).collect();
        assert_eq!(ps, ["(4)", "(3,1)", "(2,2)", "(2,1,1)", "(1,1,1,1)"]);
        assert_eq!(enumerate_partitions(0), vec![Partition::new(vec![])]);
        assert_eq!(enumerate_partitions(9).len(), 30);
    }

    #[test]
    fn overpartition_counts() {
        // 1, 2, 4, 8, 14, 24: the overpartition numbers.
        let c: Vec<usize> = (0..6).map(|n| enumerate_overpartitions(n).len()).collect();
        assert_eq!(c, [1, 2, 4, 8, 14, 24]);
    }

    #[test]
    fn statistics() {
        let p = Partition::new(vec![1, 3, 1]);
        assert_eq!((p.smallest(), p.spt(), p.len()), (Some(1), 2, 3));
        let o = Overpartition { plain: Partition::new(vec![4]), overlined: vec![5, 2] };
        assert_eq!((o.smallest_plain(), o.smallest_overlined(), o.k(2)), (Some(4), Some(2), 1));
    }
}
