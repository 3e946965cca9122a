//! Normal and good nodes for both node orders, crystal graphs of the
//! highest weight module generated by the empty multipartition, Kleshchev
//! multipartitions, and the bijection between the AM and FLOTW crystals.
//!
//! Good nodes are computed by the signature procedure: list the addable and
//! removable i-nodes from lowest to highest in the relevant order, cancel
//! each removable node with the nearest unmatched addable node below it,
//! and keep the survivors. The good (removable) i-node is the highest
//! surviving removable node; the cogood (addable) i-node is the lowest
//! surviving addable node.

use std::collections::{BTreeMap, BTreeSet};

use crate::combinat::{addable_nodes, removable_nodes, ChargeParams, Multipartition, Node};
use crate::fock::{node_below, OrderKind};
use crate::Error;

/// The addable/removable i-node word of `lambda`, sorted from lowest to
/// highest in the given order. The boolean marks addable nodes.
fn node_word(
    lambda: &Multipartition,
    i: u32,
    order: OrderKind,
    params: &ChargeParams,
) -> Vec<(Node, bool)> {
    let mut word: Vec<(Node, bool)> = addable_nodes(lambda, i, params)
        .into_iter()
        .map(|n| (n, true))
        .chain(removable_nodes(lambda, i, params).into_iter().map(|n| (n, false)))
        .collect();
    word.sort_by(|(x, _), (y, _)| {
        if x == y {
            std::cmp::Ordering::Equal
        } else if node_below(*x, *y, order, params) {
            std::cmp::Ordering::Less
        } else {
            std::cmp::Ordering::Greater
        }
    });
    word
}

/// Signature cancellation: returns (surviving removable nodes, surviving
/// addable nodes), each in ascending order.
fn survivors(word: &[(Node, bool)]) -> (Vec<Node>, Vec<Node>) {
    let mut addable_stack: Vec<Node> = Vec::new();
    let mut normal_removables: Vec<Node> = Vec::new();
    for &(node, addable) in word {
        if addable {
            addable_stack.push(node);
        } else if addable_stack.pop().is_none() {
            normal_removables.push(node);
        }
    }
    (normal_removables, addable_stack)
}

/// The good i-node of `lambda`: the highest normal (surviving removable)
/// i-node, or `None` if no removable i-node survives cancellation.
pub fn good_node(
    lambda: &Multipartition,
    i: u32,
    order: OrderKind,
    params: &ChargeParams,
) -> Option<Node> {
    let (normal, _) = survivors(&node_word(lambda, i, order, params));
    normal.last().copied()
}

/// The target of the crystal edge labeled `i` out of `lambda`: adds a box
/// at the lowest surviving addable i-node, or `None` if no addable i-node
/// survives.
pub fn add_good_node(
    lambda: &Multipartition,
    i: u32,
    order: OrderKind,
    params: &ChargeParams,
) -> Option<Multipartition> {
    let (_, conormal) = survivors(&node_word(lambda, i, order, params));
    conormal
        .first()
        .map(|&n| lambda.with_node_added(n).expect("addable node"))
}

/// A crystal edge `source --residue--> target`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrystalEdge {
    pub source: Multipartition,
    pub residue: u32,
    pub target: Multipartition,
}

/// The crystal graph of the highest weight module generated by the empty
/// multipartition, truncated at a maximal rank. Vertices are grouped by
/// rank; every edge adds one good node.
#[derive(Clone, Debug)]
pub struct CrystalGraph {
    layers: Vec<Vec<Multipartition>>,
    edges: Vec<CrystalEdge>,
}

impl CrystalGraph {
    /// Vertices of rank `n`, in enumeration order.
    pub fn layer(&self, n: u32) -> &[Multipartition] {
        &self.layers[n as usize]
    }

    pub fn layers(&self) -> &[Vec<Multipartition>] {
        &self.layers
    }

    pub fn edges(&self) -> &[CrystalEdge] {
        &self.edges
    }

    pub fn max_rank(&self) -> u32 {
        self.layers.len() as u32 - 1
    }

    /// DOT export: one node statement per multipartition (textual form as
    /// identifier), one edge statement per crystal edge labeled by the
    /// residue.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph crystal {\n");
        for layer in &self.layers {
            for mp in layer {
                out.push_str(&format!("    \"{mp}\";\n"));
            }
        }
        for edge in &self.edges {
            out.push_str(&format!(
                "    \"{}\" -> \"{}\" [label=\"{}\"];\n",
                edge.source, edge.target, edge.residue
            ));
        }
        out.push_str("}\n");
        out
    }
}

/// Generates the crystal layer by layer from the empty multipartition,
/// following good-node additions for the given order, up to rank `n_max`.
pub fn generate_crystal(order: OrderKind, params: &ChargeParams, n_max: u32) -> CrystalGraph {
    let mut layers: Vec<Vec<Multipartition>> = vec![vec![Multipartition::empty(params.d())]];
    let mut edges = Vec::new();
    for n in 0..n_max {
        let mut next: BTreeSet<Multipartition> = BTreeSet::new();
        for lambda in &layers[n as usize] {
            for i in 0..params.e() {
                if let Some(mu) = add_good_node(lambda, i, order, params) {
                    edges.push(CrystalEdge {
                        source: lambda.clone(),
                        residue: i,
                        target: mu.clone(),
                    });
                    next.insert(mu);
                }
            }
        }
        layers.push(next.into_iter().collect());
    }
    CrystalGraph { layers, edges }
}

/// The rank-`n` vertex layer of the AM crystal: the Kleshchev
/// multipartitions of rank `n`, in enumeration order.
pub fn kleshchev_multipartitions(params: &ChargeParams, n: u32) -> Vec<Multipartition> {
    let graph = generate_crystal(OrderKind::Am, params, n);
    let layer: BTreeSet<&Multipartition> = graph.layer(n).iter().collect();
    crate::combinat::enumerate_multipartitions(params.d(), n)
        .into_iter()
        .filter(|mp| layer.contains(mp))
        .collect()
}

/// The residue word of a crystal vertex read off by repeatedly stripping
/// maximal runs of good nodes of the smallest admissible residue, returned
/// as runs `(residue, multiplicity)` in application order from the empty
/// multipartition.
pub(crate) fn crystal_path_runs(
    lambda: &Multipartition,
    order: OrderKind,
    params: &ChargeParams,
) -> Result<Vec<(u32, u32)>, Error> {
    let mut runs_rev: Vec<(u32, u32)> = Vec::new();
    let mut cur = lambda.clone();
    while cur.rank() > 0 {
        let mut chosen: Option<u32> = None;
        for i in 0..params.e() {
            if good_node(&cur, i, order, params).is_some() {
                chosen = Some(i);
                break;
            }
        }
        let i = chosen.ok_or_else(|| {
            Error::PathReplayFailure(format!("{cur} has no good node of any residue"))
        })?;
        let mut count = 0;
        while let Some(gamma) = good_node(&cur, i, order, params) {
            cur = cur.with_node_removed(gamma).expect("good node is removable");
            count += 1;
        }
        runs_rev.push((i, count));
    }
    runs_rev.reverse();
    Ok(runs_rev)
}

/// The bijection `c` from the rank-`n` AM crystal layer (Kleshchev
/// multipartitions) to the rank-`n` FLOTW crystal layer, computed by
/// replaying each vertex's residue word in the FLOTW crystal.
pub fn bijection_c(
    params: &ChargeParams,
    n: u32,
) -> Result<BTreeMap<Multipartition, Multipartition>, Error> {
    let mut map = BTreeMap::new();
    for lambda in kleshchev_multipartitions(params, n) {
        let runs = crystal_path_runs(&lambda, OrderKind::Am, params)?;
        let mut cur = Multipartition::empty(params.d());
        for (i, count) in runs {
            for _ in 0..count {
                cur = add_good_node(&cur, i, OrderKind::Flotw, params).ok_or_else(|| {
                    Error::PathReplayFailure(format!(
                        "no FLOTW edge labeled {i} out of {cur} while replaying {lambda}"
                    ))
                })?;
            }
        }
        map.insert(lambda, cur);
    }
    Ok(map)
}
