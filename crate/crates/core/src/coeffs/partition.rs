//! Integer partitions, used as the index set for balance constraints and
//! for classifying colour patterns by shape.

use std::fmt;
use std::str::FromStr;

/// A partition of a small integer, stored as parts in descending order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QPartition {
    parts: Vec<u8>,
}

impl QPartition {
    /// Builds a partition from parts in any order; zero parts are dropped.
    pub fn of(parts: &[u8]) -> QPartition {
        let mut parts: Vec<u8> = parts.iter().copied().filter(|&p| p > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        QPartition { parts }
    }

    pub fn parts(&self) -> &[u8] {
        &self.parts
    }

    pub fn sum(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }
}

impl fmt::Display for QPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("0");
        }
        let text = self
            .parts
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join("+");
        f.write_str(&text)
    }
}

impl FromStr for QPartition {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "0" {
            return Ok(QPartition { parts: Vec::new() });
        }
        let mut parts = Vec::new();
        for piece in s.split('+') {
            let p: u8 = piece
                .trim()
                .parse()
                .map_err(|_| format!("bad partition part {piece}"))?;
            if p == 0 {
                return Err("zero part".to_string());
            }
            parts.push(p);
        }
        let sorted = {
            let mut copy = parts.clone();
            copy.sort_unstable_by(|a, b| b.cmp(a));
            copy
        };
        if sorted != parts {
            return Err(format!("parts not in descending order: {s}"));
        }
        Ok(QPartition { parts })
    }
}

/// All partitions of n in reverse lexicographic order, largest part first:
/// for n = 4 this is 4, 3+1, 2+2, 2+1+1, 1+1+1+1.
pub fn partitions_of(n: usize) -> Vec<QPartition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    descend(n as u8, n as u8, &mut current, &mut out);
    out
}

fn descend(remaining: u8, max_part: u8, current: &mut Vec<u8>, out: &mut Vec<QPartition>) {
    if remaining == 0 {
        out.push(QPartition {
            parts: current.clone(),
        });
        return;
    }
    let mut part = remaining.min(max_part);
    while part >= 1 {
        current.push(part);
        descend(remaining - part, part, current, out);
        current.pop();
        part -= 1;
    }
}

/// The partition recording how many times each distinct value occurs.
pub fn partition_of_multiset<T: Ord>(items: &[T]) -> QPartition {
    let mut sorted: Vec<&T> = items.iter().collect();
    sorted.sort();
    let mut parts = Vec::new();
    let mut run = 0u8;
    for i in 0..sorted.len() {
        run += 1;
        if i + 1 == sorted.len() || sorted[i + 1] != sorted[i] {
            parts.push(run);
            run = 0;
        }
    }
    QPartition::of(&parts)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partitions_of_four_in_order() {
        let parts = partitions_of(4);
        let texts: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
        assert_eq!(texts, ["4", "3+1", "2+2", "2+1+1", "1+1+1+1"]);
    }

    #[test]
    fn partition_counts() {
        assert_eq!(partitions_of(1).len(), 1);
        assert_eq!(partitions_of(2).len(), 2);
        assert_eq!(partitions_of(3).len(), 3);
        assert_eq!(partitions_of(4).len(), 5);
        assert_eq!(partitions_of(5).len(), 7);
        assert_eq!(partitions_of(6).len(), 11);
    }

    #[test]
    fn multiset_shapes() {
        assert_eq!(partition_of_multiset(&[7, 7, 7, 7]).to_string(), "4");
        assert_eq!(partition_of_multiset(&[1, 2, 1, 2]).to_string(), "2+2");
        assert_eq!(partition_of_multiset(&[3, 1, 4, 1]).to_string(), "2+1+1");
        assert_eq!(partition_of_multiset(&[9, 2, 5, 1]).to_string(), "1+1+1+1");
        assert_eq!(partition_of_multiset::<u8>(&[]).to_string(), "0");
    }

    #[test]
    fn display_round_trip() {
        for n in 1..=6 {
            for p in partitions_of(n) {
                let back: QPartition = p.to_string().parse().unwrap();
                assert_eq!(back, p);
            }
        }
        assert!("1+2".parse::<QPartition>().is_err());
        assert!("2+0".parse::<QPartition>().is_err());
    }
}
