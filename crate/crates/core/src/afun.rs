//! The combinatorial a-function on multipartitions and the a-sequence of
//! residues of a FLOTW multipartition.
//!
//! The a-value is computed from the shifted beta-numbers
//! `B'(j)_p = lambda^(j)_p - p + n + m^(j)` with `m^(j) = v_j - j*e/d + e`,
//! as the difference of two min-sums; the additive constant depending only
//! on `(e, v, n)` is deliberately omitted, so values are comparable only
//! within a fixed rank. That is the only way they are consumed here.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::combinat::{all_removable_nodes, is_flotw, ChargeParams, Multipartition, Node};
use crate::exactmath::Rational;
use crate::Error;

/// Run-length encoded residue sequence with distinct consecutive residues.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ASequence {
    runs: Vec<(u32, u32)>,
}

impl ASequence {
    /// Builds from runs, merging adjacent runs of equal residue.
    pub fn from_runs<I: IntoIterator<Item = (u32, u32)>>(runs: I) -> Self {
        let mut merged: Vec<(u32, u32)> = Vec::new();
        for (residue, mult) in runs {
            if mult == 0 {
                continue;
            }
            match merged.last_mut() {
                Some((r, m)) if *r == residue => *m += mult,
                _ => merged.push((residue, mult)),
            }
        }
        ASequence { runs: merged }
    }

    /// Runs `(residue, multiplicity)` in application order: the first run
    /// is applied first when building the monomial vector `A(lambda)`.
    pub fn runs(&self) -> &[(u32, u32)] {
        &self.runs
    }

    pub fn is_empty(&self) -> bool {
        self.runs.is_empty()
    }

    /// Sum of multiplicities, i.e. the rank of the source multipartition.
    pub fn total_multiplicity(&self) -> u32 {
        self.runs.iter().map(|&(_, m)| m).sum()
    }

    /// Runs expanded left to right into a flat residue sequence.
    pub fn flatten(&self) -> Vec<u32> {
        let mut out = Vec::new();
        for &(residue, mult) in &self.runs {
            for _ in 0..mult {
                out.push(residue);
            }
        }
        out
    }
}

impl fmt::Display for ASequence {
    /// Flat comma form, e.g. `3,2,2,1,1,3,0,0,0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let flat: Vec<String> = self.flatten().iter().map(u32::to_string).collect();
        write!(f, "{}", flat.join(","))
    }
}

/// The a-value `a_1(lambda)` at rank `n`, an exact rational. Only
/// differences within a fixed rank are meaningful.
pub fn a_value(lambda: &Multipartition, params: &ChargeParams, n: u32) -> Result<Rational, Error> {
    if lambda.rank() != n {
        return Err(Error::RankMismatch { expected: n, found: lambda.rank() });
    }
    let d = params.d();
    let e = params.e();
    let rat = |num: i64, den: i64| Rational::new(BigInt::from(num), BigInt::from(den));

    // m^(j) = v_j - j e / d + e, as an exact rational.
    let m: Vec<Rational> = (0..d)
        .map(|j| {
            rat(
                i64::from(params.charge(j)) * i64::from(d) - i64::from(j) * i64::from(e)
                    + i64::from(e) * i64::from(d),
                i64::from(d),
            )
        })
        .collect();

    // B'(j)_p = lambda^(j)_p - p + n + m^(j), for p = 1..n.
    let beta: Vec<Vec<Rational>> = (0..d)
        .map(|j| {
            (1..=n)
                .map(|p| {
                    rat(
                        i64::from(lambda.part(j, p)) - i64::from(p) + i64::from(n),
                        1,
                    ) + m[j as usize].clone()
                })
                .collect()
        })
        .collect();

    let mut total = Rational::zero();

    // First sum: over component pairs i <= j, all value pairs when i < j
    // and strictly decreasing pairs when i = j.
    for i in 0..d as usize {
        for j in i..d as usize {
            for a in &beta[i] {
                for b in &beta[j] {
                    if i == j && a <= b {
                        continue;
                    }
                    total += a.min(b).clone();
                }
            }
        }
    }

    // Second sum: for every beta entry a of every component and every
    // component j, sum min(k, m^(j)) over integers 1 <= k <= a.
    for entries in &beta {
        for a in entries {
            let kmax = a.floor().to_integer();
            if kmax.is_negative() || kmax.is_zero() {
                continue;
            }
            let kmax = i64::try_from(&kmax).expect("beta entries are small");
            for k in 1..=kmax {
                let k_rat = rat(k, 1);
                for mj in &m {
                    total -= k_rat.clone().min(mj.clone());
                }
            }
        }
    }

    Ok(total)
}

/// Compares two multipartitions of the same rank by a-value.
pub fn a_compare(
    lhs: &Multipartition,
    rhs: &Multipartition,
    params: &ChargeParams,
    n: u32,
) -> Result<std::cmp::Ordering, Error> {
    Ok(a_value(lhs, params, n)?.cmp(&a_value(rhs, params, n)?))
}

/// One peeling step of the a-sequence recursion: returns the residue `k`,
/// the removed nodes, and the resulting multipartition. The recursion
/// appends `k` with the removal multiplicity after the a-sequence of the
/// remainder.
pub fn a_sequence_step(
    lambda: &Multipartition,
    params: &ChargeParams,
) -> Result<(u32, Vec<Node>, Multipartition), Error> {
    let e = params.e();

    // Right ends of all rows: (length, residue, node, removable).
    let mut row_ends: Vec<(u32, u32, Node, bool)> = Vec::new();
    let removables = all_removable_nodes(lambda);
    for c in 0..lambda.d() {
        for (a0, &len) in lambda.component(c).parts().iter().enumerate() {
            let node = Node::new(a0 as u32 + 1, len, c);
            let removable = removables.contains(&node);
            row_ends.push((len, params.residue(node), node, removable));
        }
    }
    let l_max = row_ends.iter().map(|&(len, ..)| len).max().unwrap();

    // Residues occurring at the right ends of length-l_max rows.
    let ends_at_lmax: Vec<u32> = row_ends
        .iter()
        .filter(|&&(len, ..)| len == l_max)
        .map(|&(_, res, ..)| res)
        .collect();

    // Candidates: removable nodes on length-l_max parts whose residue k has
    // no (k-1)-node at the right end of any length-l_max part.
    let candidates: Vec<Node> = row_ends
        .iter()
        .filter(|&&(len, res, _, removable)| {
            len == l_max && removable && !ends_at_lmax.contains(&((res + e - 1) % e))
        })
        .map(|&(_, _, node, _)| node)
        .collect();
    if candidates.is_empty() {
        return Err(Error::NoValidResidue(format!(
            "no admissible removable node on the length-{l_max} parts of {lambda}"
        )));
    }

    // Deterministic choice: the FLOTW-highest candidate (smallest content,
    // then largest component).
    let xi = *candidates
        .iter()
        .max_by_key(|&&node| (std::cmp::Reverse(params.content(node)), node.component))
        .unwrap();
    let k = params.residue(xi);
    let k_minus_one = (k + e - 1) % e;

    // Longest part carrying a (k-1)-node at its right end; 0 if none.
    let threshold = row_ends
        .iter()
        .filter(|&&(_, res, ..)| res == k_minus_one)
        .map(|&(len, ..)| len)
        .max()
        .unwrap_or(0);

    // Remove every removable k-node on a part strictly longer than that.
    let removed: Vec<Node> = row_ends
        .iter()
        .filter(|&&(len, res, _, removable)| removable && res == k && len > threshold)
        .map(|&(_, _, node, _)| node)
        .collect();
    debug_assert!(removed.contains(&xi));

    let mut next = lambda.clone();
    for &node in &removed {
        next = next
            .with_node_removed(node)
            .expect("peeled nodes are removable");
    }
    Ok((k, removed, next))
}

/// The a-sequence of residues of a FLOTW multipartition, produced by the
/// peeling recursion: each step removes the removable k-nodes on all
/// sufficiently long parts and prepends the runs of the remainder.
pub fn a_sequence(lambda: &Multipartition, params: &ChargeParams) -> Result<ASequence, Error> {
    if !is_flotw(lambda, params) {
        return Err(Error::NotFlotw(lambda.to_string()));
    }
    let mut runs_rev: Vec<(u32, u32)> = Vec::new();
    let mut cur = lambda.clone();
    while cur.rank() > 0 {
        let (k, removed, next) = a_sequence_step(&cur, params)?;
        runs_rev.push((k, removed.len() as u32));
        cur = next;
    }
    runs_rev.reverse();
    Ok(ASequence::from_runs(runs_rev))
}
