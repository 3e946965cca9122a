//! Partitions, multipartitions, Young-diagram nodes and residues, the AM
//! and FLOTW node orders, FLOTW and e-regularity predicates, and the
//! Ariki-Koike parameter datum `{e; v_0, ..., v_{d-1}}`.

use std::fmt;
use std::str::FromStr;

use crate::Error;

/// A partition: weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Validates that `parts` is weakly decreasing and strictly positive.
    pub fn new(parts: Vec<u32>) -> Result<Self, Error> {
        for w in parts.windows(2) {
            if w[0] < w[1] {
                return Err(Error::Parse(format!("parts not weakly decreasing: {parts:?}")));
            }
        }
        if parts.contains(&0) {
            return Err(Error::Parse(format!("zero part in {parts:?}")));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn rank(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The `row`-th part, 1-based; 0 beyond the last row.
    pub fn part(&self, row: u32) -> u32 {
        if row == 0 {
            return 0;
        }
        self.parts.get(row as usize - 1).copied().unwrap_or(0)
    }

    /// Rows (1-based) whose right end can be removed leaving a partition.
    pub fn removable_rows(&self) -> Vec<u32> {
        let mut out = Vec::new();
        for a in 1..=self.parts.len() as u32 {
            if self.part(a) > self.part(a + 1) {
                out.push(a);
            }
        }
        out
    }

    /// Rows (1-based, up to `len + 1`) where a box can be appended.
    pub fn addable_rows(&self) -> Vec<u32> {
        let mut out = Vec::new();
        for a in 1..=self.parts.len() as u32 + 1 {
            if a == 1 || self.part(a - 1) > self.part(a) {
                out.push(a);
            }
        }
        out
    }
}

/// A node `(a, b, c)`: row `a >= 1`, column `b >= 1`, component
/// `c` in `[0, d)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Node {
    pub row: u32,
    pub col: u32,
    pub component: u32,
}

impl Node {
    pub fn new(row: u32, col: u32, component: u32) -> Self {
        Node { row, col, component }
    }
}

/// A d-tuple of partitions, indexing Specht modules and Fock basis vectors.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Multipartition {
    components: Vec<Partition>,
}

impl Multipartition {
    pub fn new(components: Vec<Partition>) -> Self {
        Multipartition { components }
    }

    /// The empty d-partition `(∅, ..., ∅)`.
    pub fn empty(d: u32) -> Self {
        Multipartition { components: vec![Partition::empty(); d as usize] }
    }

    pub fn d(&self) -> u32 {
        self.components.len() as u32
    }

    pub fn rank(&self) -> u32 {
        self.components.iter().map(Partition::rank).sum()
    }

    pub fn component(&self, c: u32) -> &Partition {
        &self.components[c as usize]
    }

    pub fn components(&self) -> &[Partition] {
        &self.components
    }

    /// Part length of row `row` in component `c` (0 beyond the diagram).
    pub fn part(&self, c: u32, row: u32) -> u32 {
        self.component(c).part(row)
    }

    pub fn contains(&self, node: Node) -> bool {
        node.component < self.d()
            && node.row >= 1
            && node.col >= 1
            && node.col <= self.part(node.component, node.row)
    }

    /// All nodes of the Young diagram, in (component, row, column) order.
    pub fn nodes(&self) -> Vec<Node> {
        let mut out = Vec::new();
        for (c, comp) in self.components.iter().enumerate() {
            for (a0, &len) in comp.parts().iter().enumerate() {
                for b in 1..=len {
                    out.push(Node::new(a0 as u32 + 1, b, c as u32));
                }
            }
        }
        out
    }

    /// Adds a box at `node` if the result is a valid diagram.
    pub fn with_node_added(&self, node: Node) -> Option<Self> {
        if node.component >= self.d() || node.row == 0 {
            return None;
        }
        let comp = self.component(node.component);
        if node.col != comp.part(node.row) + 1 {
            return None;
        }
        if node.row > 1 && comp.part(node.row - 1) < node.col {
            return None;
        }
        if node.row as usize > comp.len() + 1 {
            return None;
        }
        let mut parts = comp.parts().to_vec();
        if node.row as usize == parts.len() + 1 {
            parts.push(1);
        } else {
            parts[node.row as usize - 1] += 1;
        }
        let mut components = self.components.clone();
        components[node.component as usize] = Partition { parts };
        Some(Multipartition { components })
    }

    /// Removes the box at `node` if the result is a valid diagram.
    pub fn with_node_removed(&self, node: Node) -> Option<Self> {
        if !self.contains(node) {
            return None;
        }
        let comp = self.component(node.component);
        if node.col != comp.part(node.row) || comp.part(node.row + 1) == comp.part(node.row) {
            return None;
        }
        let mut parts = comp.parts().to_vec();
        parts[node.row as usize - 1] -= 1;
        if parts[node.row as usize - 1] == 0 {
            parts.pop();
        }
        let mut components = self.components.clone();
        components[node.component as usize] = Partition { parts };
        Some(Multipartition { components })
    }
}

/// The parameter datum `{e; v_0, ..., v_{d-1}}` with `e >= 2` and
/// `0 <= v_0 <= ... <= v_{d-1} < e`. Fixes residues, both node orders and
/// both module structures; the root of unity itself is never represented.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChargeParams {
    e: u32,
    charges: Vec<u32>,
}

impl ChargeParams {
    pub fn new(e: u32, charges: Vec<u32>) -> Result<Self, Error> {
        if e < 2 {
            return Err(Error::InvalidParameters(format!("e must be >= 2, got {e}")));
        }
        if charges.is_empty() {
            return Err(Error::InvalidParameters("empty charge list".into()));
        }
        for w in charges.windows(2) {
            if w[0] > w[1] {
                return Err(Error::InvalidParameters(format!(
                    "charges not weakly increasing: {charges:?}"
                )));
            }
        }
        if charges.iter().any(|&v| v >= e) {
            return Err(Error::InvalidParameters(format!(
                "charges must lie in [0, {e}): {charges:?}"
            )));
        }
        Ok(ChargeParams { e, charges })
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn d(&self) -> u32 {
        self.charges.len() as u32
    }

    pub fn charges(&self) -> &[u32] {
        &self.charges
    }

    pub fn charge(&self, c: u32) -> u32 {
        self.charges[c as usize]
    }

    /// The shifted content `b - a + v_c` of a node (not reduced mod `e`).
    pub fn content(&self, node: Node) -> i64 {
        i64::from(node.col) - i64::from(node.row) + i64::from(self.charge(node.component))
    }

    /// The residue `(b - a + v_c) mod e`, representative in `[0, e)`.
    pub fn residue(&self, node: Node) -> u32 {
        self.content(node).rem_euclid(i64::from(self.e)) as u32
    }
}

/// All partitions of `n` in decreasing lexicographic order.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    fn go(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        for p in (1..=n.min(max)).rev() {
            prefix.push(p);
            go(n - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n.max(1), &mut Vec::new(), &mut out);
    out
}

/// All d-partitions of rank `n`, each exactly once, lexicographically on
/// component sequences (components vary slowest first, each running through
/// decreasing ranks and decreasing lexicographic partition order).
pub fn enumerate_multipartitions(d: u32, n: u32) -> Vec<Multipartition> {
    assert!(d >= 1, "d must be positive");
    fn go(d: u32, n: u32) -> Vec<Vec<Partition>> {
        if d == 1 {
            return partitions_of(n).into_iter().map(|p| vec![p]).collect();
        }
        let mut out = Vec::new();
        for k in (0..=n).rev() {
            for head in partitions_of(k) {
                for tail in go(d - 1, n - k) {
                    let mut comps = Vec::with_capacity(d as usize);
                    comps.push(head.clone());
                    comps.extend(tail);
                    out.push(comps);
                }
            }
        }
        out
    }
    go(d, n).into_iter().map(Multipartition::new).collect()
}

/// All positions where an i-node can be added to `[lambda]`, in
/// (component, row) order.
pub fn addable_nodes(lambda: &Multipartition, i: u32, params: &ChargeParams) -> Vec<Node> {
    all_addable_nodes(lambda)
        .into_iter()
        .filter(|&n| params.residue(n) == i % params.e())
        .collect()
}

/// All i-nodes of `[lambda]` whose removal leaves a valid diagram, in
/// (component, row) order.
pub fn removable_nodes(lambda: &Multipartition, i: u32, params: &ChargeParams) -> Vec<Node> {
    all_removable_nodes(lambda)
        .into_iter()
        .filter(|&n| params.residue(n) == i % params.e())
        .collect()
}

/// Addable positions of any residue, in (component, row) order.
pub fn all_addable_nodes(lambda: &Multipartition) -> Vec<Node> {
    let mut out = Vec::new();
    for c in 0..lambda.d() {
        for a in lambda.component(c).addable_rows() {
            out.push(Node::new(a, lambda.part(c, a) + 1, c));
        }
    }
    out
}

/// Removable nodes of any residue, in (component, row) order.
pub fn all_removable_nodes(lambda: &Multipartition) -> Vec<Node> {
    let mut out = Vec::new();
    for c in 0..lambda.d() {
        for a in lambda.component(c).removable_rows() {
            out.push(Node::new(a, lambda.part(c, a), c));
        }
    }
    out
}

/// AM order: `gamma` is below `gamma'` iff `c < c'`, or `c = c'` and
/// `a < a'`.
pub fn am_below(gamma: Node, gamma_prime: Node) -> bool {
    gamma.component < gamma_prime.component
        || (gamma.component == gamma_prime.component && gamma.row < gamma_prime.row)
}

/// FLOTW order: `gamma` is above `gamma'` iff its shifted content is
/// smaller, or contents are equal and its component index is larger.
pub fn flotw_above(gamma: Node, gamma_prime: Node, params: &ChargeParams) -> bool {
    let (x, y) = (params.content(gamma), params.content(gamma_prime));
    x < y || (x == y && gamma.component > gamma_prime.component)
}

/// `true` iff no part value repeats `e` or more times.
pub fn is_e_regular(lambda: &Partition, e: u32) -> bool {
    let parts = lambda.parts();
    let mut run = 1;
    for w in parts.windows(2) {
        if w[0] == w[1] {
            run += 1;
            if run >= e {
                return false;
            }
        } else {
            run = 1;
        }
    }
    run < e || parts.is_empty()
}

/// The FLOTW membership test for `lambda` relative to
/// `{e; v_0, ..., v_{d-1}}`: the cyclic part-domination conditions plus the
/// right-end residue condition (for every row length, at least one residue
/// class does not occur at the right ends of rows of that length).
pub fn is_flotw(lambda: &Multipartition, params: &ChargeParams) -> bool {
    let d = lambda.d();
    assert_eq!(d, params.d(), "multipartition and parameter d mismatch");
    let e = params.e();
    let max_len = (0..d).map(|c| lambda.component(c).len() as u32).max().unwrap_or(0);

    // Condition (1): lambda^{(j)}_i >= lambda^{(j+1)}_{i + v_{j+1} - v_j},
    // cyclically with lambda^{(d-1)}_i >= lambda^{(0)}_{i + e + v_0 - v_{d-1}}.
    for j in 0..d {
        let (next, shift) = if j + 1 < d {
            (j + 1, params.charge(j + 1) - params.charge(j))
        } else {
            (0, e + params.charge(0) - params.charge(d - 1))
        };
        for i in 1..=max_len {
            if lambda.part(j, i) < lambda.part(next, i + shift) {
                return false;
            }
        }
    }

    // Condition (2): for each k > 0, the residues at the right ends of the
    // length-k rows do not cover all of Z/eZ.
    let mut by_len: std::collections::BTreeMap<u32, std::collections::BTreeSet<u32>> =
        std::collections::BTreeMap::new();
    for c in 0..d {
        for (a0, &len) in lambda.component(c).parts().iter().enumerate() {
            let node = Node::new(a0 as u32 + 1, len, c);
            by_len.entry(len).or_default().insert(params.residue(node));
        }
    }
    by_len.values().all(|residues| (residues.len() as u32) < e)
}

/// Ariki's semisimplicity criterion for the specialization
/// `u_j = eta_e^{v_j}`, `v = eta_e`: no relation `eta_e^{l + v_i} = eta_e^{v_j}`
/// for `i != j`, `|l| < n`, and `e > n`.
pub fn is_semisimple_regime(params: &ChargeParams, n: u32) -> bool {
    if n == 0 {
        return true;
    }
    if params.e() <= n {
        return false;
    }
    let e = i64::from(params.e());
    let d = params.d();
    for i in 0..d {
        for j in 0..d {
            if i == j {
                continue;
            }
            let diff = i64::from(params.charge(j)) - i64::from(params.charge(i));
            for l in -(i64::from(n) - 1)..i64::from(n) {
                if (l - diff).rem_euclid(e) == 0 {
                    return false;
                }
            }
        }
    }
    true
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "-");
        }
        let text: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "{}", text.join("."))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s == "-" {
            return Ok(Partition::empty());
        }
        if s.is_empty() {
            return Err(Error::Parse("empty partition text".into()));
        }
        let mut parts = Vec::new();
        for tok in s.split('.') {
            let p: u32 = tok
                .parse()
                .map_err(|_| Error::Parse(format!("bad part {tok:?} in {s:?}")))?;
            parts.push(p);
        }
        Partition::new(parts)
    }
}

impl fmt::Display for Multipartition {
    /// Components separated by `|`, parts by `.`, empty component `-`;
    /// e.g. `1|3.1|2.1.1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text: Vec<String> = self.components.iter().map(Partition::to_string).collect();
        write!(f, "{}", text.join("|"))
    }
}

impl FromStr for Multipartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty multipartition text".into()));
        }
        let mut components = Vec::new();
        for tok in s.split('|') {
            components.push(tok.parse::<Partition>()?);
        }
        Ok(Multipartition::new(components))
    }
}
