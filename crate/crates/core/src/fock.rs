//! The Fock space `F = ⊕_n F_n` with basis all d-partitions, and both
//! `U_q`-module structures on it: the Hayashi action (AM node order) and
//! the JMMO action (FLOTW node order). The two actions share the formulas
//!
//! ```text
//! f_i λ = Σ q^{N_i^b(λ,μ)} μ        over [μ] = [λ] ∪ {i-node}
//! e_i λ = Σ q^{-N_i^a(μ,λ)} μ       over [λ] = [μ] ∪ {i-node}
//! ```
//!
//! and differ only in which order decides "above" and "below" in the node
//! statistics `N_i^a`, `N_i^b`.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::combinat::{
    addable_nodes, am_below, flotw_above, removable_nodes, ChargeParams, Multipartition, Node,
};
use crate::exactmath::q_factorial;
use crate::{Error, LaurentPolynomial};

/// Which node order drives the module structure.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderKind {
    /// Component-then-row order; Hayashi action, Kleshchev combinatorics.
    Am,
    /// Content-then-component order; JMMO action, FLOTW combinatorics.
    Flotw,
}

/// `gamma` strictly below `gamma_prime` in the given order.
pub fn node_below(gamma: Node, gamma_prime: Node, order: OrderKind, params: &ChargeParams) -> bool {
    match order {
        OrderKind::Am => am_below(gamma, gamma_prime),
        OrderKind::Flotw => flotw_above(gamma_prime, gamma, params),
    }
}

/// `gamma` strictly above `gamma_prime` in the given order.
pub fn node_above(gamma: Node, gamma_prime: Node, order: OrderKind, params: &ChargeParams) -> bool {
    node_below(gamma_prime, gamma, order, params)
}

/// An element of the Fock space: finite map from multipartitions to nonzero
/// Laurent polynomials.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct FockVector {
    terms: BTreeMap<Multipartition, LaurentPolynomial>,
}

impl FockVector {
    pub fn zero() -> Self {
        FockVector { terms: BTreeMap::new() }
    }

    /// The basis vector `1 · lambda`.
    pub fn unit(lambda: Multipartition) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(lambda, LaurentPolynomial::one());
        FockVector { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Multipartition, &LaurentPolynomial)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, lambda: &Multipartition) -> LaurentPolynomial {
        self.terms.get(lambda).cloned().unwrap_or_else(LaurentPolynomial::zero)
    }

    /// Adds `coef · lambda`, keeping the canonical no-zero-coefficients form.
    pub fn add_term(&mut self, lambda: Multipartition, coef: LaurentPolynomial) {
        if coef.is_zero() {
            return;
        }
        match self.terms.remove(&lambda) {
            None => {
                self.terms.insert(lambda, coef);
            }
            Some(old) => {
                let sum = &old + &coef;
                if !sum.is_zero() {
                    self.terms.insert(lambda, sum);
                }
            }
        }
    }

    /// `self -= scale · other`.
    pub fn sub_scaled(&mut self, scale: &LaurentPolynomial, other: &FockVector) {
        for (mp, coef) in other.terms() {
            self.add_term(mp.clone(), -&(scale * coef));
        }
    }

    /// Coefficients evaluated at `q = 1`.
    pub fn at_q_one(&self) -> BTreeMap<Multipartition, BigInt> {
        self.terms
            .iter()
            .map(|(mp, c)| (mp.clone(), c.eval_at_one()))
            .collect()
    }

    /// JSON form: array of `{"mp": ..., "coef": ...}` sorted by the textual
    /// form of the multipartition.
    pub fn to_json(&self) -> String {
        let mut entries: Vec<(String, String)> = self
            .terms
            .iter()
            .map(|(mp, c)| (mp.to_string(), c.to_string()))
            .collect();
        entries.sort();
        let body: Vec<String> = entries
            .iter()
            .map(|(mp, coef)| format!("{{\"mp\":\"{mp}\",\"coef\":\"{coef}\"}}"))
            .collect();
        format!("[{}]", body.join(","))
    }
}

/// The single node of `[mu] \ [lambda]`, provided `mu` is `lambda` plus
/// exactly one box.
fn added_node(lambda: &Multipartition, mu: &Multipartition) -> Option<Node> {
    if lambda.d() != mu.d() || mu.rank() != lambda.rank() + 1 {
        return None;
    }
    let mut found: Option<Node> = None;
    for c in 0..lambda.d() {
        let rows = lambda.component(c).len().max(mu.component(c).len()) as u32;
        for a in 1..=rows {
            let (lp, mp) = (lambda.part(c, a), mu.part(c, a));
            if lp == mp {
                continue;
            }
            if mp == lp + 1 && found.is_none() {
                found = Some(Node::new(a, mp, c));
            } else {
                return None;
            }
        }
    }
    found
}

fn count_above(nodes: &[Node], gamma: Node, order: OrderKind, params: &ChargeParams) -> i64 {
    nodes.iter().filter(|&&n| node_above(n, gamma, order, params)).count() as i64
}

fn count_below(nodes: &[Node], gamma: Node, order: OrderKind, params: &ChargeParams) -> i64 {
    nodes.iter().filter(|&&n| node_below(n, gamma, order, params)).count() as i64
}

fn above_statistic(
    lambda: &Multipartition,
    mu: &Multipartition,
    gamma: Node,
    i: u32,
    order: OrderKind,
    params: &ChargeParams,
) -> i64 {
    count_above(&addable_nodes(lambda, i, params), gamma, order, params)
        - count_above(&removable_nodes(mu, i, params), gamma, order, params)
}

fn below_statistic(
    lambda: &Multipartition,
    mu: &Multipartition,
    gamma: Node,
    i: u32,
    order: OrderKind,
    params: &ChargeParams,
) -> i64 {
    count_below(&addable_nodes(lambda, i, params), gamma, order, params)
        - count_below(&removable_nodes(mu, i, params), gamma, order, params)
}

fn validated_added_node(
    lambda: &Multipartition,
    mu: &Multipartition,
    i: u32,
    params: &ChargeParams,
) -> Result<Node, Error> {
    let gamma = added_node(lambda, mu).ok_or_else(|| {
        Error::InvalidPair(format!("{mu} is not {lambda} plus one node"))
    })?;
    if params.residue(gamma) != i % params.e() {
        return Err(Error::InvalidPair(format!(
            "added node of {mu} over {lambda} has residue {}, not {i}",
            params.residue(gamma)
        )));
    }
    Ok(gamma)
}

/// `N_i^a(lambda, mu)`: addable i-nodes of `lambda` above the added node,
/// minus removable i-nodes of `mu` above it.
pub fn n_above(
    lambda: &Multipartition,
    mu: &Multipartition,
    i: u32,
    order: OrderKind,
    params: &ChargeParams,
) -> Result<i64, Error> {
    let gamma = validated_added_node(lambda, mu, i, params)?;
    Ok(above_statistic(lambda, mu, gamma, i, order, params))
}

/// `N_i^b(lambda, mu)`: the same signed count with "below".
pub fn n_below(
    lambda: &Multipartition,
    mu: &Multipartition,
    i: u32,
    order: OrderKind,
    params: &ChargeParams,
) -> Result<i64, Error> {
    let gamma = validated_added_node(lambda, mu, i, params)?;
    Ok(below_statistic(lambda, mu, gamma, i, order, params))
}

/// `N_i(lambda)`: number of addable i-nodes minus removable i-nodes.
pub fn n_total(lambda: &Multipartition, i: u32, params: &ChargeParams) -> i64 {
    addable_nodes(lambda, i, params).len() as i64
        - removable_nodes(lambda, i, params).len() as i64
}

/// `N_d(lambda)`: number of 0-nodes of the diagram.
pub fn n_zero_nodes(lambda: &Multipartition, params: &ChargeParams) -> i64 {
    lambda
        .nodes()
        .into_iter()
        .filter(|&n| params.residue(n) == 0)
        .count() as i64
}

/// The exponents of the diagonal `k`-action:
/// `(N_0(lambda), ..., N_{e-1}(lambda), N_d(lambda))`. Shared by both
/// module structures.
pub fn weight_exponents(lambda: &Multipartition, params: &ChargeParams) -> (Vec<i64>, i64) {
    let ns = (0..params.e()).map(|i| n_total(lambda, i, params)).collect();
    (ns, n_zero_nodes(lambda, params))
}

/// The action of `f_i`, extended linearly over the terms of `x`.
pub fn apply_f(i: u32, x: &FockVector, order: OrderKind, params: &ChargeParams) -> FockVector {
    let mut out = FockVector::zero();
    for (lambda, coef) in x.terms() {
        let addables = addable_nodes(lambda, i, params);
        for &gamma in &addables {
            let mu = lambda.with_node_added(gamma).expect("addable node");
            let removables_mu = removable_nodes(&mu, i, params);
            let exp = count_below(&addables, gamma, order, params)
                - count_below(&removables_mu, gamma, order, params);
            out.add_term(mu, coef * &LaurentPolynomial::q_pow(exp));
        }
    }
    out
}

/// The action of `e_i`, extended linearly over the terms of `x`.
pub fn apply_e(i: u32, x: &FockVector, order: OrderKind, params: &ChargeParams) -> FockVector {
    let mut out = FockVector::zero();
    for (lambda, coef) in x.terms() {
        let removables = removable_nodes(lambda, i, params);
        for &gamma in &removables {
            let mu = lambda.with_node_removed(gamma).expect("removable node");
            let addables_mu = addable_nodes(&mu, i, params);
            let exp = count_above(&addables_mu, gamma, order, params)
                - count_above(&removables, gamma, order, params);
            out.add_term(mu, coef * &LaurentPolynomial::q_pow(-exp));
        }
    }
    out
}

/// The divided power `f_i^{(l)} = f_i^l / [l]_q^!` applied to `x`.
///
/// Propagates [`Error::NonDivisibility`] from the exact division; that
/// error firing here indicates a bug in the action and is asserted never to
/// happen by the test grid.
pub fn apply_divided_f(
    i: u32,
    l: u32,
    x: &FockVector,
    order: OrderKind,
    params: &ChargeParams,
) -> Result<FockVector, Error> {
    let mut acc = x.clone();
    for _ in 0..l {
        acc = apply_f(i, &acc, order, params);
    }
    if l <= 1 {
        return Ok(acc);
    }
    let denom = q_factorial(l);
    let mut out = FockVector::zero();
    for (mp, coef) in acc.terms() {
        out.add_term(mp.clone(), coef.exact_div(&denom)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::enumerate_multipartitions;
    use crate::exactmath::q_integer;
    use crate::testutil::all_params;

    fn mp(text: &str) -> Multipartition {
        text.parse().unwrap()
    }

    fn params(e: u32, charges: &[u32]) -> ChargeParams {
        ChargeParams::new(e, charges.to_vec()).unwrap()
    }

    fn poly(terms: &[(i64, i64)]) -> LaurentPolynomial {
        LaurentPolynomial::from_terms(terms.iter().map(|&(e, c)| (e, BigInt::from(c))))
    }

    /// Signed q-integer: `[m]_q` for `m >= 0`, `-[-m]_q` for `m < 0`.
    fn signed_q_integer(m: i64) -> LaurentPolynomial {
        if m >= 0 {
            q_integer(m as u32)
        } else {
            -&q_integer((-m) as u32)
        }
    }

    #[test]
    fn n_statistics_examples() {
        let pr = params(2, &[0]);
        let empty = Multipartition::empty(1);
        for order in [OrderKind::Am, OrderKind::Flotw] {
            assert_eq!(n_above(&empty, &mp("1"), 0, order, &pr).unwrap(), 0);
            assert_eq!(n_below(&empty, &mp("1"), 0, order, &pr).unwrap(), 0);
        }
        // Oracle: addable 1-nodes of (1) are (1,2) and (2,1); the node (2,1)
        // is the AM-higher one.
        assert_eq!(n_above(&mp("1"), &mp("2"), 1, OrderKind::Am, &pr).unwrap(), 1);
        assert_eq!(n_below(&mp("1"), &mp("1.1"), 1, OrderKind::Am, &pr).unwrap(), 1);
        assert_eq!(n_below(&mp("1"), &mp("2"), 1, OrderKind::Am, &pr).unwrap(), 0);

        // Mismatched residue or shape signals an invalid pair.
        let pr3 = params(4, &[0, 2, 3]);
        let lam = mp("-|2.1|1.1.1");
        let mu = lam.with_node_added(Node::new(1, 3, 1)).unwrap();
        assert!(matches!(
            n_above(&lam, &mu, 3, OrderKind::Flotw, &pr3),
            Err(Error::InvalidPair(_))
        ));
        assert!(matches!(
            n_above(&mp("1"), &mp("3"), 1, OrderKind::Am, &pr),
            Err(Error::InvalidPair(_))
        ));

        // The added node (1,3,1) has residue 0; direct enumeration gives
        // four addable 0-nodes above it and no removable 0-nodes above it.
        assert_eq!(n_above(&lam, &mu, 0, OrderKind::Flotw, &pr3).unwrap(), 4);
        assert_eq!(n_below(&lam, &mu, 0, OrderKind::Flotw, &pr3).unwrap(), 0);
    }

    #[test]
    fn n_total_and_zero_nodes_examples() {
        let pr = params(2, &[0]);
        let empty = Multipartition::empty(1);
        assert_eq!(n_total(&empty, 0, &pr), 1);
        assert_eq!(n_total(&mp("1"), 1, &pr), 2);
        assert_eq!(n_total(&mp("1"), 0, &pr), -1);
        assert_eq!(n_zero_nodes(&empty, &pr), 0);
        assert_eq!(n_zero_nodes(&mp("2"), &pr), 1);
        let pr3 = params(4, &[0, 2, 3]);
        assert_eq!(n_zero_nodes(&mp("1|3.1|2.1.1"), &pr3), 3);
    }

    #[test]
    fn weight_exponents_examples() {
        let pr = params(2, &[0]);
        assert_eq!(weight_exponents(&Multipartition::empty(1), &pr), (vec![1, 0], 0));
        assert_eq!(weight_exponents(&mp("1"), &pr), (vec![-1, 2], 1));
        let pr3 = params(4, &[0, 2, 3]);
        assert_eq!(weight_exponents(&mp("1|3.1|2.1.1"), &pr3).1, 3);
    }

    #[test]
    fn apply_f_examples() {
        let pr = params(2, &[0]);
        let empty = FockVector::unit(Multipartition::empty(1));
        for order in [OrderKind::Am, OrderKind::Flotw] {
            let f0 = apply_f(0, &empty, order, &pr);
            assert_eq!(f0, FockVector::unit(mp("1")));
            assert!(apply_f(0, &FockVector::zero(), order, &pr).is_zero());
        }
        let f1 = apply_f(1, &FockVector::unit(mp("1")), OrderKind::Am, &pr);
        let mut expected = FockVector::zero();
        expected.add_term(mp("2"), LaurentPolynomial::one());
        expected.add_term(mp("1.1"), poly(&[(1, 1)]));
        assert_eq!(f1, expected);
    }

    #[test]
    fn apply_e_examples() {
        let pr = params(2, &[0]);
        for order in [OrderKind::Am, OrderKind::Flotw] {
            for i in 0..2 {
                assert!(apply_e(i, &FockVector::unit(Multipartition::empty(1)), order, &pr)
                    .is_zero());
            }
            assert_eq!(
                apply_e(0, &FockVector::unit(mp("1")), order, &pr),
                FockVector::unit(Multipartition::empty(1))
            );
        }
        // Direct enumeration: the addable 1-node (2,1) of (1) lies above the
        // removed node (1,2), so the exponent is -1.
        let e1 = apply_e(1, &FockVector::unit(mp("2")), OrderKind::Am, &pr);
        let mut expected = FockVector::zero();
        expected.add_term(mp("1"), poly(&[(-1, 1)]));
        assert_eq!(e1, expected);
    }

    #[test]
    fn apply_divided_examples() {
        let pr = params(2, &[0]);
        // l = 1 is plain f.
        let x = FockVector::unit(mp("1"));
        assert_eq!(
            apply_divided_f(1, 1, &x, OrderKind::Am, &pr).unwrap(),
            apply_f(1, &x, OrderKind::Am, &pr)
        );
        // f_0^2 on the vacuum vanishes: the second 0-node is not addable.
        let vac = FockVector::unit(Multipartition::empty(1));
        assert!(apply_divided_f(0, 2, &vac, OrderKind::Am, &pr).unwrap().is_zero());

        // Every coefficient of f_1 f_1 ((1),(1)) is divisible by [2]^!.
        let pr2 = params(2, &[0, 0]);
        let x = FockVector::unit(mp("1|1"));
        for order in [OrderKind::Am, OrderKind::Flotw] {
            let twice = apply_f(1, &apply_f(1, &x, order, &pr2), order, &pr2);
            let divided = apply_divided_f(1, 2, &x, order, &pr2).unwrap();
            assert!(!twice.is_zero());
            for (mp, c) in divided.terms() {
                assert_eq!(&(c * &q_factorial(2)), &twice.coefficient(mp));
            }
        }
    }

    #[test]
    fn rank_homogeneity_and_commutation() {
        for d in 1..=2u32 {
            for e in 2..=3u32 {
                for pr in all_params(e, d) {
                    for n in 0..=4u32 {
                        for lam in enumerate_multipartitions(d, n) {
                            let x = FockVector::unit(lam.clone());
                            for order in [OrderKind::Am, OrderKind::Flotw] {
                                for i in 0..e {
                                    let fx = apply_f(i, &x, order, &pr);
                                    for (mu, _) in fx.terms() {
                                        assert_eq!(mu.rank(), n + 1);
                                    }
                                    let ex = apply_e(i, &x, order, &pr);
                                    for (mu, _) in ex.terms() {
                                        assert_eq!(mu.rank(), n - 1);
                                    }
                                    // [e_i, f_i] acts on lam by [N_i(lam)]_q.
                                    let efx = apply_e(i, &fx, order, &pr);
                                    let fex = apply_f(i, &ex, order, &pr);
                                    let diag = &efx.coefficient(&lam) - &fex.coefficient(&lam);
                                    assert_eq!(
                                        diag,
                                        signed_q_integer(n_total(&lam, i, &pr)),
                                        "d={d} e={e} v={:?} lam={lam} i={i} {order:?}",
                                        pr.charges()
                                    );
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn divided_powers_always_divide() {
        for d in 1..=2u32 {
            for e in 2..=4u32 {
                let charge_sets: Vec<Vec<u32>> = if d == 1 {
                    vec![vec![0]]
                } else {
                    vec![vec![0, 0], vec![0, 1], vec![1, e - 1]]
                };
                for charges in charge_sets {
                    let pr = ChargeParams::new(e, charges).unwrap();
                    for n in 0..=5u32 {
                        for lam in enumerate_multipartitions(d, n) {
                            let x = FockVector::unit(lam);
                            for order in [OrderKind::Am, OrderKind::Flotw] {
                                for i in 0..e {
                                    for l in 1..=3u32 {
                                        assert!(apply_divided_f(i, l, &x, order, &pr).is_ok());
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn actions_agree_at_q_one() {
        for d in 1..=2u32 {
            for e in 2..=3u32 {
                for pr in all_params(e, d) {
                    for n in 0..=4u32 {
                        for lam in enumerate_multipartitions(d, n) {
                            let x = FockVector::unit(lam);
                            for i in 0..e {
                                let am = apply_f(i, &x, OrderKind::Am, &pr);
                                let fl = apply_f(i, &x, OrderKind::Flotw, &pr);
                                assert_eq!(am.at_q_one(), fl.at_q_one());
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn fock_json_form() {
        let mut x = FockVector::zero();
        x.add_term(mp("1.1"), poly(&[(1, 1)]));
        x.add_term(mp("2"), LaurentPolynomial::one());
        assert_eq!(
            x.to_json(),
            "[{\"mp\":\"1.1\",\"coef\":\"q\"},{\"mp\":\"2\",\"coef\":\"1\"}]"
        );
    }
}
