//! Explicit canonical basic sets for Weyl types A, B and D.
//!
//! Type A uses e-regular partitions. Type B splits on the parity of `e`:
//! pairs of e-regular partitions when `e` is odd, and the charged
//! shift-plus-residue conditions with charges `(1, e/2)` when `e` is even.
//! Type D uses the restriction combinatorics of the type-B algebra with
//! unequal parameters: unordered pairs of distinct halves, and two signed
//! labels whenever the two halves coincide. The even-`e` conditions are
//! spelled out directly here rather than routed through the FLOTW
//! predicate, so the two can be compared as independent routes in tests.

use std::collections::BTreeSet;
use std::fmt;

use crate::combinat::{
    enumerate_multipartitions, is_e_regular, partitions_of, Multipartition, Node, Partition,
};

/// Sign tag of a split type-D label.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", if *self == Sign::Plus { "+" } else { "-" })
    }
}

/// Index object for a simple module of a type-D Hecke algebra: an unordered
/// pair of distinct bipartition halves, or a half with a sign when the two
/// halves coincide (possible only at even rank).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum TypeDLabel {
    Pair(Partition, Partition),
    Split(Partition, Sign),
}

impl fmt::Display for TypeDLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TypeDLabel::Pair(a, b) => write!(f, "[{a},{b}]"),
            TypeDLabel::Split(a, s) => write!(f, "[{a},{s}]"),
        }
    }
}

/// Canonical basic set in type A: all e-regular partitions of `n`.
pub fn basic_set_a(e: u32, n: u32) -> Vec<Partition> {
    partitions_of(n)
        .into_iter()
        .filter(|p| is_e_regular(p, e))
        .collect()
}

/// Right-end residue condition for a charged bipartition: for every row
/// length, at least one residue class is missing among the right ends of
/// the rows of that length. Written out directly for charges `(v0, v1)`.
fn right_end_condition(bipartition: &Multipartition, e: u32, v0: u32, v1: u32) -> bool {
    let mut by_len: std::collections::BTreeMap<u32, BTreeSet<u32>> =
        std::collections::BTreeMap::new();
    for (c, v) in [(0u32, v0), (1u32, v1)] {
        for (a0, &len) in bipartition.component(c).parts().iter().enumerate() {
            let node = Node::new(a0 as u32 + 1, len, c);
            let content = i64::from(len) - i64::from(node.row) + i64::from(v);
            by_len
                .entry(len)
                .or_default()
                .insert(content.rem_euclid(i64::from(e)) as u32);
        }
    }
    by_len.values().all(|residues| (residues.len() as u32) < e)
}

/// The printed even-`e` type-B membership test, charges `(1, e/2)`:
/// `l0_i >= l1_{i + e/2 - 1}`, `l1_i >= l0_{i + e/2 + 1}`, plus the
/// right-end residue condition.
fn type_b_even_member(bipartition: &Multipartition, e: u32) -> bool {
    let half = e / 2;
    let max_len = bipartition
        .components()
        .iter()
        .map(|c| c.len() as u32)
        .max()
        .unwrap_or(0);
    for i in 1..=max_len {
        if bipartition.part(0, i) < bipartition.part(1, i + half - 1) {
            return false;
        }
        if bipartition.part(1, i) < bipartition.part(0, i + half + 1) {
            return false;
        }
    }
    right_end_condition(bipartition, e, 1, half)
}

/// The printed even-`e` type-D membership test, charges `(0, e/2)`:
/// `l0_i >= l1_{i + e/2}`, `l1_i >= l0_{i + e/2}`, plus the right-end
/// residue condition.
fn type_d_even_member(bipartition: &Multipartition, e: u32) -> bool {
    let half = e / 2;
    let max_len = bipartition
        .components()
        .iter()
        .map(|c| c.len() as u32)
        .max()
        .unwrap_or(0);
    for i in 1..=max_len {
        if bipartition.part(0, i) < bipartition.part(1, i + half) {
            return false;
        }
        if bipartition.part(1, i) < bipartition.part(0, i + half) {
            return false;
        }
    }
    right_end_condition(bipartition, e, 0, half)
}

/// Canonical basic set in type B as a set of bipartitions. For odd `e`, all
/// pairs of e-regular partitions with ranks summing to `n`; for even `e`,
/// the bipartitions of `n` passing the charged `(1, e/2)` conditions.
pub fn basic_set_b(e: u32, n: u32) -> Vec<Multipartition> {
    enumerate_multipartitions(2, n)
        .into_iter()
        .filter(|bp| {
            if e % 2 == 1 {
                is_e_regular(bp.component(0), e) && is_e_regular(bp.component(1), e)
            } else {
                type_b_even_member(bp, e)
            }
        })
        .collect()
}

/// Folds a set of ordered bipartitions into type-D labels: swap-equivalent
/// pairs with distinct halves give one unordered pair label, and each
/// diagonal bipartition gives both signed labels.
pub fn fold_to_unordered(pairs: &[Multipartition]) -> Vec<TypeDLabel> {
    let mut out: BTreeSet<TypeDLabel> = BTreeSet::new();
    for bp in pairs {
        let (a, b) = (bp.component(0).clone(), bp.component(1).clone());
        if a == b {
            out.insert(TypeDLabel::Split(a.clone(), Sign::Plus));
            out.insert(TypeDLabel::Split(a, Sign::Minus));
        } else {
            let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
            out.insert(TypeDLabel::Pair(lo, hi));
        }
    }
    out.into_iter().collect()
}

/// Canonical basic set in type D. For odd `e`, pairs of e-regular
/// partitions; for even `e`, the charged `(0, e/2)` conditions. Both are
/// folded to unordered labels with signed splitting on the diagonal.
pub fn basic_set_d(e: u32, n: u32) -> Vec<TypeDLabel> {
    let qualifying: Vec<Multipartition> = enumerate_multipartitions(2, n)
        .into_iter()
        .filter(|bp| {
            if e % 2 == 1 {
                is_e_regular(bp.component(0), e) && is_e_regular(bp.component(1), e)
            } else {
                type_d_even_member(bp, e)
            }
        })
        .collect();
    fold_to_unordered(&qualifying)
}

/// JSON form `{"type": ..., "e": ..., "n": ..., "labels": [...]}` with pair
/// labels as two-element arrays and split labels as half/sign objects.
pub fn basic_set_json(kind: char, e: u32, n: u32) -> String {
    let labels: Vec<String> = match kind {
        'A' => basic_set_a(e, n)
            .iter()
            .map(|p| format!("\"{p}\""))
            .collect(),
        'B' => basic_set_b(e, n)
            .iter()
            .map(|bp| format!("\"{bp}\""))
            .collect(),
        'D' => basic_set_d(e, n)
            .iter()
            .map(|label| match label {
                TypeDLabel::Pair(a, b) => format!("[\"{a}\",\"{b}\"]"),
                TypeDLabel::Split(a, s) => format!("{{\"half\":\"{a}\",\"sign\":\"{s}\"}}"),
            })
            .collect(),
        _ => panic!("unknown type {kind}"),
    };
    format!(
        "{{\"type\":\"{kind}\",\"e\":{e},\"n\":{n},\"labels\":[{}]}}",
        labels.join(",")
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::{is_flotw, ChargeParams};
    use crate::crystal::generate_crystal;
    use crate::fock::OrderKind;
    use crate::llt::canonical_basis;

    fn p(text: &str) -> Partition {
        text.parse().unwrap()
    }

    #[test]
    fn basic_set_a_examples() {
        let texts = |e, n| -> Vec<String> {
            basic_set_a(e, n).iter().map(Partition::to_string).collect()
        };
        assert_eq!(texts(2, 3), vec!["3", "2.1"]);
        assert_eq!(texts(4, 3), vec!["3", "2.1", "1.1.1"]);
        assert_eq!(texts(2, 2), vec!["2"]);
    }

    #[test]
    fn basic_set_a_matches_flotw_crystal_layer() {
        for e in 2..=5u32 {
            let pr = ChargeParams::new(e, vec![0]).unwrap();
            let graph = generate_crystal(OrderKind::Flotw, &pr, 8);
            for n in 0..=8u32 {
                let mut from_set: Vec<Partition> = basic_set_a(e, n);
                from_set.sort();
                let mut from_crystal: Vec<Partition> = graph
                    .layer(n)
                    .iter()
                    .map(|mp| mp.component(0).clone())
                    .collect();
                from_crystal.sort();
                assert_eq!(from_set, from_crystal, "e={e} n={n}");
            }
        }
    }

    #[test]
    fn basic_set_a_counts_match_columns() {
        for e in 2..=4u32 {
            let pr = ChargeParams::new(e, vec![0]).unwrap();
            for n in 0..=6u32 {
                let cols = canonical_basis(&pr, n, OrderKind::Flotw).unwrap();
                assert_eq!(basic_set_a(e, n).len(), cols.len(), "e={e} n={n}");
            }
        }
    }

    #[test]
    fn basic_set_b_examples() {
        let texts = |e, n| -> Vec<String> {
            basic_set_b(e, n).iter().map(Multipartition::to_string).collect()
        };
        // e = 3 (odd), n = 1: single box in either component.
        assert_eq!(texts(3, 1), vec!["1|-", "-|1"]);
        // e = 3 (odd), n = 2: all pairs of 3-regular partitions.
        assert_eq!(texts(3, 2), vec!["2|-", "1.1|-", "1|1", "-|2", "-|1.1"]);
        // e = 2 (even), n = 1: membership via the charged (1,1) conditions.
        let pr = ChargeParams::new(2, vec![1, 1]).unwrap();
        let expected: Vec<String> = enumerate_multipartitions(2, 1)
            .into_iter()
            .filter(|bp| is_flotw(bp, &pr))
            .map(|bp| bp.to_string())
            .collect();
        assert_eq!(texts(2, 1), expected);
    }

    #[test]
    fn basic_set_b_even_matches_flotw_filter() {
        for e in [2u32, 4] {
            let pr = ChargeParams::new(e, vec![1, e / 2]).unwrap();
            for n in 0..=6u32 {
                let explicit = basic_set_b(e, n);
                let filtered: Vec<Multipartition> = enumerate_multipartitions(2, n)
                    .into_iter()
                    .filter(|bp| is_flotw(bp, &pr))
                    .collect();
                assert_eq!(explicit, filtered, "e={e} n={n}");
            }
        }
    }

    #[test]
    fn fold_examples() {
        let pairs: Vec<Multipartition> = vec!["1|-".parse().unwrap(), "-|1".parse().unwrap()];
        assert_eq!(
            fold_to_unordered(&pairs),
            vec![TypeDLabel::Pair(Partition::empty(), p("1"))]
        );
        let diag: Vec<Multipartition> = vec!["1|1".parse().unwrap()];
        assert_eq!(
            fold_to_unordered(&diag),
            vec![
                TypeDLabel::Split(p("1"), Sign::Plus),
                TypeDLabel::Split(p("1"), Sign::Minus)
            ]
        );
        assert!(fold_to_unordered(&[]).is_empty());
    }

    #[test]
    fn basic_set_d_examples() {
        // Odd rank: no split labels regardless of e.
        for e in 2..=4u32 {
            for label in basic_set_d(e, 3) {
                assert!(matches!(label, TypeDLabel::Pair(..)), "e={e}");
            }
        }

        // e = 3 (odd), n = 2: two distinct-half pairs and both signs of (1).
        let labels = basic_set_d(3, 2);
        assert_eq!(
            labels,
            vec![
                TypeDLabel::Pair(Partition::empty(), p("2")),
                TypeDLabel::Pair(Partition::empty(), p("1.1")),
                TypeDLabel::Split(p("1"), Sign::Plus),
                TypeDLabel::Split(p("1"), Sign::Minus),
            ]
            .into_iter()
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .collect::<Vec<_>>()
        );

        // e = 2 (even), n = 2: ((1),(1)) fails the right-end condition with
        // charges (0,1), so no split labels appear.
        let labels = basic_set_d(2, 2);
        assert!(labels.iter().all(|l| matches!(l, TypeDLabel::Pair(..))));
        let pr = ChargeParams::new(2, vec![0, 1]).unwrap();
        assert!(!is_flotw(&"1|1".parse::<Multipartition>().unwrap(), &pr));
    }

    #[test]
    fn basic_set_d_even_matches_flotw_filter() {
        for e in [2u32, 4] {
            let pr = ChargeParams::new(e, vec![0, e / 2]).unwrap();
            for n in 0..=6u32 {
                let filtered: Vec<Multipartition> = enumerate_multipartitions(2, n)
                    .into_iter()
                    .filter(|bp| is_flotw(bp, &pr))
                    .collect();
                assert_eq!(basic_set_d(e, n), fold_to_unordered(&filtered), "e={e} n={n}");
            }
        }
    }

    #[test]
    fn split_labels_come_in_sign_pairs() {
        for e in 2..=4u32 {
            for n in 0..=6u32 {
                let labels = basic_set_d(e, n);
                let split_count = labels
                    .iter()
                    .filter(|l| matches!(l, TypeDLabel::Split(..)))
                    .count();
                assert_eq!(split_count % 2, 0, "e={e} n={n}");
                for label in &labels {
                    if let TypeDLabel::Split(half, _) = label {
                        assert_eq!(half.rank() * 2, n);
                        assert!(labels.contains(&TypeDLabel::Split(half.clone(), Sign::Plus)));
                        assert!(labels.contains(&TypeDLabel::Split(half.clone(), Sign::Minus)));
                    }
                    if let TypeDLabel::Pair(a, b) = label {
                        assert_ne!(a, b);
                    }
                }
            }
        }
    }

    #[test]
    fn json_shapes() {
        let a = basic_set_json('A', 2, 2);
        assert_eq!(a, "{\"type\":\"A\",\"e\":2,\"n\":2,\"labels\":[\"2\"]}");
        let d = basic_set_json('D', 3, 2);
        assert!(d.contains("{\"half\":\"1\",\"sign\":\"+\"}"));
        assert!(d.contains("[\"-\",\"2\"]"));
    }
}
