//! Set partitions of {1, ..., n} into exactly q nonempty parts.
//!
//! Enumeration walks restricted growth strings in lexicographic order, so the
//! stream is deterministic and needs no materialized list. A restricted
//! growth string with maximum value q-1 encodes a partition whose parts are
//! automatically ordered by smallest element, which is also the canonical
//! part order used everywhere else.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use num_bigint::BigUint;
use num_traits::{One, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PartitionError {
    /// q must be at least 1.
    NoParts,
    /// The partition does not have the expected number of parts.
    PartCountMismatch { expected: usize, got: usize },
}

impl fmt::Display for PartitionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PartitionError::NoParts => write!(f, "a partition needs at least one part"),
            PartitionError::PartCountMismatch { expected, got } => {
                write!(f, "expected {expected} parts, got {got}")
            }
        }
    }
}

impl core::error::Error for PartitionError {}

/// Partition of {1, ..., n} into disjoint nonempty parts, stored normalized:
/// indices ascending within parts, parts ordered by smallest element.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UnorderedPartition {
    parts: Vec<Vec<usize>>,
}

/// A partition with a fixed part order (indices still ascending within each
/// part).
#[derive(Clone, PartialEq, Eq)]
pub struct OrderedPartition {
    parts: Vec<Vec<usize>>,
}

/// Assignment of a Z/q exponent to every index: `g[alpha-1] = j - 1` when
/// alpha lies in the j-th part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Labeling {
    order: usize,
    exps: Vec<usize>,
}

impl UnorderedPartition {
    /// Builds a partition from arbitrary parts, normalizing the order.
    /// The parts must be disjoint and nonempty; indices are 1-based.
    pub fn new(mut parts: Vec<Vec<usize>>) -> Result<Self, String> {
        if parts.is_empty() {
            return Err(String::from("no parts"));
        }
        let mut seen = alloc::collections::BTreeSet::new();
        for part in &mut parts {
            if part.is_empty() {
                return Err(String::from("empty part"));
            }
            part.sort_unstable();
            for &i in part.iter() {
                if i == 0 {
                    return Err(String::from("indices are 1-based"));
                }
                if !seen.insert(i) {
                    return Err(alloc::format!("index {i} appears in more than one part"));
                }
            }
        }
        parts.sort_by_key(|p| p[0]);
        Ok(UnorderedPartition { parts })
    }

    pub fn parts(&self) -> &[Vec<usize>] {
        &self.parts
    }

    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    pub fn num_indices(&self) -> usize {
        self.parts.iter().map(Vec::len).sum()
    }

    /// True when the parts exactly cover {1, ..., n}.
    pub fn covers(&self, n: usize) -> bool {
        self.num_indices() == n && self.parts.iter().flatten().all(|&i| i >= 1 && i <= n)
    }

    /// Representative ordering: parts sorted by their smallest element.
    pub fn canonical_order(&self) -> OrderedPartition {
        OrderedPartition { parts: self.parts.clone() }
    }

    /// Parses the `1,4|2,5|3,6,7` text form. On failure reports the byte
    /// offset of the error in the input.
    pub fn parse(text: &str) -> Result<Self, PartitionParseError> {
        let mut parts: Vec<Vec<usize>> = Vec::new();
        let mut seen = alloc::collections::BTreeSet::new();
        let mut pos = 0usize;
        for part_text in text.split('|') {
            let mut part = Vec::new();
            let mut field_pos = pos;
            for field in part_text.split(',') {
                let trimmed = field.trim();
                let index: usize = trimmed.parse().map_err(|_| PartitionParseError {
                    position: field_pos,
                    message: alloc::format!("expected a 1-based index, found `{trimmed}`"),
                })?;
                if index == 0 {
                    return Err(PartitionParseError {
                        position: field_pos,
                        message: String::from("indices are 1-based"),
                    });
                }
                if !seen.insert(index) {
                    return Err(PartitionParseError {
                        position: field_pos,
                        message: alloc::format!("index {index} appears in more than one part"),
                    });
                }
                part.push(index);
                field_pos += field.len() + 1;
            }
            if part.is_empty() {
                return Err(PartitionParseError {
                    position: pos,
                    message: String::from("empty part"),
                });
            }
            part.sort_unstable();
            parts.push(part);
            pos += part_text.len() + 1;
        }
        parts.sort_by_key(|p| p[0]);
        Ok(UnorderedPartition { parts })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionParseError {
    pub position: usize,
    pub message: String,
}

impl fmt::Display for PartitionParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at byte {}: {}", self.position, self.message)
    }
}

impl core::error::Error for PartitionParseError {}

impl fmt::Display for UnorderedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, part) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, "|")?;
            }
            for (j, index) in part.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{index}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for UnorderedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UnorderedPartition({self})")
    }
}

impl OrderedPartition {
    pub fn new(parts: Vec<Vec<usize>>) -> Result<Self, String> {
        // Reuse the disjointness checks, then restore the requested order.
        let order: Vec<usize> = parts.iter().map(|p| *p.iter().min().unwrap_or(&0)).collect();
        let normalized = UnorderedPartition::new(parts)?;
        let mut by_min: alloc::collections::BTreeMap<usize, Vec<usize>> = normalized
            .parts
            .into_iter()
            .map(|p| (p[0], p))
            .collect();
        let parts = order
            .iter()
            .map(|m| by_min.remove(m).expect("part mins are unique"))
            .collect();
        Ok(OrderedPartition { parts })
    }

    pub fn parts(&self) -> &[Vec<usize>] {
        &self.parts
    }

    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    pub fn num_indices(&self) -> usize {
        self.parts.iter().map(Vec::len).sum()
    }

    /// Cyclic shift of the part order: (s_q, s_1, ..., s_{q-1}). Shifting
    /// adds 1 mod q to every label, which must not change the cocycle sign.
    pub fn rotate(&self) -> OrderedPartition {
        let mut parts = self.parts.clone();
        if let Some(last) = parts.pop() {
            parts.insert(0, last);
        }
        OrderedPartition { parts }
    }

    pub fn forget_order(&self) -> UnorderedPartition {
        let mut parts = self.parts.clone();
        parts.sort_by_key(|p| p[0]);
        UnorderedPartition { parts }
    }

    /// The Z/q labeling `alpha -> j - 1` for alpha in the j-th part.
    pub fn labeling(&self, q: usize) -> Result<Labeling, PartitionError> {
        if self.parts.len() != q {
            return Err(PartitionError::PartCountMismatch { expected: q, got: self.parts.len() });
        }
        let n = self.num_indices();
        let mut exps = vec![usize::MAX; n];
        for (j, part) in self.parts.iter().enumerate() {
            for &alpha in part {
                assert!(alpha >= 1 && alpha <= n, "index {alpha} out of range 1..={n}");
                exps[alpha - 1] = j;
            }
        }
        Ok(Labeling { order: q, exps })
    }
}

impl fmt::Display for OrderedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, part) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, "|")?;
            }
            for (j, index) in part.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{index}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for OrderedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OrderedPartition({self})")
    }
}

impl Labeling {
    /// Builds a labeling directly from exponents (values are reduced mod q).
    pub fn from_exponents(q: usize, exps: Vec<usize>) -> Self {
        let exps = exps.into_iter().map(|e| e % q).collect();
        Labeling { order: q, exps }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Exponent of the root of unity attached to a 1-based index.
    pub fn exponent(&self, alpha: usize) -> usize {
        self.exps[alpha - 1]
    }

    pub fn exponents(&self) -> &[usize] {
        &self.exps
    }

    pub fn len(&self) -> usize {
        self.exps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exps.is_empty()
    }

    /// Adds 1 mod q to every exponent (the cyclic part shift).
    pub fn rotate(&self) -> Labeling {
        let exps = self.exps.iter().map(|e| (e + 1) % self.order).collect();
        Labeling { order: self.order, exps }
    }
}

/// Stirling number of the second kind S(n, q) by the standard recurrence
/// S(n, q) = q S(n-1, q) + S(n-1, q-1).
pub fn stirling_count(n: usize, q: usize) -> BigUint {
    if n == 0 && q == 0 {
        return BigUint::one();
    }
    if q == 0 || q > n {
        return BigUint::zero();
    }
    let mut row: Vec<BigUint> = (0..=q).map(|_| BigUint::zero()).collect();
    row[0] = BigUint::one(); // S(0, 0)
    for _ in 1..=n {
        for j in (1..=q).rev() {
            row[j] = &row[j] * BigUint::from(j) + &row[j - 1];
        }
        row[0] = BigUint::zero();
    }
    row[q].clone()
}

/// Streams every partition of {1, ..., n} into exactly q nonempty parts, in
/// restricted-growth-string order, each exactly once. With `max_part` set,
/// partitions containing a part larger than `max_part` are skipped.
///
/// `q > n` yields an empty stream; `q == 0` is an error.
pub fn enumerate_partitions(
    n: usize,
    q: usize,
    max_part: Option<usize>,
) -> Result<PartitionIter, PartitionError> {
    if q == 0 {
        return Err(PartitionError::NoParts);
    }
    Ok(PartitionIter::new(n, q, max_part))
}

pub struct PartitionIter {
    n: usize,
    q: usize,
    max_part: Option<usize>,
    /// Restricted growth string; rgs[0] == 0.
    rgs: Vec<usize>,
    /// Running prefix maxima of `rgs`.
    prefix_max: Vec<usize>,
    started: bool,
    done: bool,
}

impl PartitionIter {
    fn new(n: usize, q: usize, max_part: Option<usize>) -> Self {
        let done = q > n || n == 0;
        PartitionIter {
            n,
            q,
            max_part,
            rgs: vec![0; n],
            prefix_max: vec![0; n],
            started: false,
            done,
        }
    }

    /// First string in lexicographic order: zeros, then the forced climb
    /// 1, 2, ..., q-1 at the tail.
    fn init_first(&mut self) {
        let (n, q) = (self.n, self.q);
        for i in 0..n {
            let forced = (q - 1).saturating_sub(n - 1 - i);
            self.rgs[i] = forced;
        }
        self.recompute_prefix_max(0);
    }

    fn recompute_prefix_max(&mut self, from: usize) {
        for i in from..self.n {
            let prev = if i == 0 { 0 } else { self.prefix_max[i - 1] };
            self.prefix_max[i] = prev.max(self.rgs[i]);
        }
    }

    /// Lexicographic successor among strings with maximum exactly q-1.
    fn advance(&mut self) -> bool {
        let (n, q) = (self.n, self.q);
        for i in (1..n).rev() {
            let prev_max = self.prefix_max[i - 1];
            let candidate = self.rgs[i] + 1;
            if candidate > prev_max + 1 || candidate > q - 1 {
                continue;
            }
            let new_max = prev_max.max(candidate);
            // The suffix must still be able to climb to q-1.
            if (q - 1).saturating_sub(new_max) > n - 1 - i {
                continue;
            }
            self.rgs[i] = candidate;
            let mut running = new_max;
            for j in i + 1..n {
                let forced = (q - 1).saturating_sub(n - 1 - j);
                self.rgs[j] = if forced > running { forced } else { 0 };
                running = running.max(self.rgs[j]);
            }
            self.recompute_prefix_max(i);
            return true;
        }
        false
    }

    fn current_partition(&self) -> UnorderedPartition {
        let mut parts: Vec<Vec<usize>> = vec![Vec::new(); self.q];
        for (i, &v) in self.rgs.iter().enumerate() {
            parts[v].push(i + 1);
        }
        UnorderedPartition { parts }
    }

    fn part_sizes_ok(&self) -> bool {
        match self.max_part {
            None => true,
            Some(cap) => {
                let mut counts = vec![0usize; self.q];
                for &v in &self.rgs {
                    counts[v] += 1;
                }
                counts.iter().all(|&c| c <= cap)
            }
        }
    }
}

impl Iterator for PartitionIter {
    type Item = UnorderedPartition;

    fn next(&mut self) -> Option<UnorderedPartition> {
        loop {
            if self.done {
                return None;
            }
            if !self.started {
                self.started = true;
                self.init_first();
            } else if !self.advance() {
                self.done = true;
                return None;
            }
            if self.part_sizes_ok() {
                return Some(self.current_partition());
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;
    use std::string::ToString;
    use std::vec::Vec;

    fn collect(n: usize, q: usize, max_part: Option<usize>) -> Vec<UnorderedPartition> {
        enumerate_partitions(n, q, max_part).unwrap().collect()
    }

    #[test]
    fn stirling_values() {
        assert_eq!(stirling_count(7, 3), BigUint::from(301u32));
        assert_eq!(stirling_count(10, 4), BigUint::from(34105u32));
        for n in 1..=8 {
            assert_eq!(stirling_count(n, 1), BigUint::one());
        }
        assert_eq!(stirling_count(0, 0), BigUint::one());
        assert_eq!(stirling_count(5, 0), BigUint::zero());
        assert_eq!(stirling_count(3, 5), BigUint::zero());
    }

    #[test]
    fn singleton_enumeration() {
        let got = collect(3, 3, None);
        assert_eq!(got.len(), 1);
        assert_eq!(got[0].to_string(), "1|2|3");
    }

    #[test]
    fn enumeration_matches_stirling_for_small_sizes() {
        for n in 1..=12usize {
            for q in 1..=n {
                let count = enumerate_partitions(n, q, None).unwrap().count();
                assert_eq!(
                    BigUint::from(count),
                    stirling_count(n, q),
                    "n={n} q={q}"
                );
            }
        }
    }

    #[test]
    fn no_duplicates_and_valid_cover() {
        let mut seen = HashSet::new();
        for p in collect(9, 4, None) {
            assert_eq!(p.num_parts(), 4);
            assert!(p.covers(9));
            assert!(seen.insert(p.to_string()), "duplicate {p}");
        }
        assert_eq!(BigUint::from(seen.len()), stirling_count(9, 4));
    }

    #[test]
    fn max_part_matches_brute_filter() {
        let filtered = collect(7, 3, Some(3));
        let brute: Vec<_> = collect(7, 3, None)
            .into_iter()
            .filter(|p| p.parts().iter().all(|part| part.len() <= 3))
            .collect();
        assert_eq!(filtered, brute);
        assert!(filtered.len() < 301);
    }

    #[test]
    fn degenerate_part_counts() {
        assert_eq!(collect(3, 5, None).len(), 0); // q > n: empty stream
        assert!(enumerate_partitions(5, 0, None).is_err());
    }

    #[test]
    fn canonical_order_sorts_parts_by_minimum() {
        let p = UnorderedPartition::new(vec![vec![5, 2], vec![3, 1], vec![4]]).unwrap();
        let ordered = p.canonical_order();
        assert_eq!(ordered.to_string(), "1,3|2,5|4");
        // idempotent
        assert_eq!(ordered.forget_order().canonical_order().to_string(), "1,3|2,5|4");
    }

    #[test]
    fn labeling_examples() {
        let p = OrderedPartition::new(vec![vec![1], vec![2], vec![3]]).unwrap();
        assert_eq!(p.labeling(3).unwrap().exponents(), &[0, 1, 2]);

        let p = OrderedPartition::new(vec![vec![1, 3], vec![2, 5], vec![4]]).unwrap();
        let lab = p.labeling(3).unwrap();
        assert_eq!(lab.exponents(), &[0, 1, 0, 2, 1]);

        // cyclic part shift adds 1 mod q to every exponent
        let rotated = p.rotate().labeling(3).unwrap();
        let expected: Vec<usize> = lab.exponents().iter().map(|e| (e + 1) % 3).collect();
        assert_eq!(rotated.exponents(), &expected[..]);

        assert!(p.labeling(4).is_err());
    }

    #[test]
    fn labeling_is_stable_across_part_presentation() {
        let a = UnorderedPartition::new(vec![vec![2, 5], vec![1, 3], vec![4]]).unwrap();
        let b = UnorderedPartition::new(vec![vec![4], vec![3, 1], vec![5, 2]]).unwrap();
        assert_eq!(a, b);
        assert_eq!(
            a.canonical_order().labeling(3).unwrap(),
            b.canonical_order().labeling(3).unwrap()
        );
    }

    #[test]
    fn parse_and_display_round_trip() {
        let p = UnorderedPartition::parse("1,4|2,5|3,6,7").unwrap();
        assert_eq!(p.to_string(), "1,4|2,5|3,6,7");
        assert!(p.covers(7));

        // normalization on parse
        let p = UnorderedPartition::parse("3,6,7|2,5|4,1").unwrap();
        assert_eq!(p.to_string(), "1,4|2,5|3,6,7");

        let err = UnorderedPartition::parse("1,2|2,3").unwrap_err();
        assert_eq!(err.position, 4);
        let err = UnorderedPartition::parse("1,x|2").unwrap_err();
        assert_eq!(err.position, 2);
        assert!(UnorderedPartition::parse("1,,2").is_err());
        assert!(UnorderedPartition::parse("0|1").is_err());
    }

    #[test]
    fn split_streams_cover_everything() {
        // Chunked consumption sees the same stream as one pass.
        let all = collect(8, 3, None);
        let mut chunked = Vec::new();
        let mut it = enumerate_partitions(8, 3, None).unwrap();
        loop {
            let batch: Vec<_> = it.by_ref().take(100).collect();
            if batch.is_empty() {
                break;
            }
            chunked.extend(batch);
        }
        assert_eq!(all, chunked);
    }
}
