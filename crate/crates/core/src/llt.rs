//! Canonical bases by triangular elimination and decomposition matrices at
//! `q = 1`.
//!
//! For a FLOTW label the monomial vector `A(lambda)` is the product of
//! divided powers prescribed by the a-sequence, applied to the vacuum under
//! the JMMO action; it equals `lambda` plus terms of strictly larger
//! a-value. Columns are finished in weakly decreasing a-value order by
//! repeatedly subtracting bar-symmetric multiples of already-finished
//! columns until every off-label coefficient lies in `q Z[q]`.
//!
//! The AM branch runs the same elimination with Kleshchev labels and
//! monomial vectors built from each label's crystal path (maximal runs of
//! good nodes, applied as divided powers under the Hayashi action). Only
//! its `q = 1` matrix is consumed, for the two-action agreement check.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::afun::{a_sequence, a_value};
use crate::combinat::{enumerate_multipartitions, is_flotw, ChargeParams, Multipartition};
use crate::crystal::{bijection_c, crystal_path_runs, kleshchev_multipartitions};
use crate::exactmath::Rational;
use crate::fock::{apply_divided_f, FockVector, OrderKind};
use crate::{Error, LaurentPolynomial};

/// One column of the canonical basis: the label and its expansion in the
/// standard basis. The label coefficient is exactly 1 and every other
/// coefficient lies in `q Z[q]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalBasisColumn {
    pub label: Multipartition,
    pub vector: FockVector,
}

/// Decomposition matrix at `q = 1`: rows are all d-partitions of `n`,
/// columns are the crystal labels of rank `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionMatrix {
    row_labels: Vec<Multipartition>,
    column_labels: Vec<Multipartition>,
    entries: Vec<Vec<BigInt>>,
}

impl DecompositionMatrix {
    fn from_columns(row_labels: Vec<Multipartition>, columns: &[CanonicalBasisColumn]) -> Self {
        let column_labels: Vec<Multipartition> =
            columns.iter().map(|c| c.label.clone()).collect();
        let entries = row_labels
            .iter()
            .map(|row| {
                columns
                    .iter()
                    .map(|col| col.vector.coefficient(row).eval_at_one())
                    .collect()
            })
            .collect();
        DecompositionMatrix { row_labels, column_labels, entries }
    }

    pub fn row_labels(&self) -> &[Multipartition] {
        &self.row_labels
    }

    pub fn column_labels(&self) -> &[Multipartition] {
        &self.column_labels
    }

    pub fn entry(&self, row: usize, col: usize) -> &BigInt {
        &self.entries[row][col]
    }

    pub fn entry_by_label(&self, row: &Multipartition, col: &Multipartition) -> Option<&BigInt> {
        let r = self.row_labels.iter().position(|m| m == row)?;
        let c = self.column_labels.iter().position(|m| m == col)?;
        Some(&self.entries[r][c])
    }

    /// `true` iff rows and columns carry the same labels and the matrix is
    /// the identity under that alignment.
    pub fn is_identity(&self) -> bool {
        if self.row_labels != self.column_labels {
            return false;
        }
        self.entries.iter().enumerate().all(|(r, row)| {
            row.iter()
                .enumerate()
                .all(|(c, x)| if r == c { x.is_one() } else { x.is_zero() })
        })
    }

    /// Tab-separated form: header row of column labels, leading column of
    /// row labels.
    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        for col in &self.column_labels {
            out.push('\t');
            out.push_str(&col.to_string());
        }
        out.push('\n');
        for (r, row) in self.entries.iter().enumerate() {
            out.push_str(&self.row_labels[r].to_string());
            for x in row {
                out.push('\t');
                out.push_str(&x.to_string());
            }
            out.push('\n');
        }
        out
    }
}

/// The monomial vector `A(lambda)` of a FLOTW multipartition: divided
/// powers from its a-sequence (first run applied first) acting on the
/// vacuum under the JMMO action.
pub fn a_vector(lambda: &Multipartition, params: &ChargeParams) -> Result<FockVector, Error> {
    let seq = a_sequence(lambda, params)?;
    let mut x = FockVector::unit(Multipartition::empty(params.d()));
    for &(i, mult) in seq.runs() {
        x = apply_divided_f(i, mult, &x, OrderKind::Flotw, params)?;
    }
    Ok(x)
}

/// Monomial vector of a Kleshchev multipartition: the residue word of its
/// crystal path grouped into maximal runs, applied as divided powers under
/// the Hayashi action.
fn am_monomial(lambda: &Multipartition, params: &ChargeParams) -> Result<FockVector, Error> {
    let runs = crystal_path_runs(lambda, OrderKind::Am, params)?;
    let mut x = FockVector::unit(Multipartition::empty(params.d()));
    for (i, mult) in runs {
        x = apply_divided_f(i, mult, &x, OrderKind::Am, params)?;
    }
    Ok(x)
}

/// The unique bar-symmetric Laurent polynomial agreeing with `p` on all
/// exponents `<= 0`.
fn bar_completion(p: &LaurentPolynomial) -> LaurentPolynomial {
    let mut terms: Vec<(i64, BigInt)> = Vec::new();
    for (exp, c) in p.terms() {
        if exp < 0 {
            terms.push((exp, c.clone()));
            terms.push((-exp, c.clone()));
        } else if exp == 0 {
            terms.push((0, c.clone()));
        }
    }
    LaurentPolynomial::from_terms(terms)
}

/// State of the triangular-elimination pass over one label set.
struct Eliminator<'a, K: Ord, F: FnMut(&Multipartition) -> Result<FockVector, Error>> {
    priority: &'a BTreeMap<Multipartition, K>,
    monomial: F,
    /// The FLOTW pass forbids building a column before one of its offenders
    /// (a triangularity violation); the Hayashi pass builds offending
    /// columns on demand instead, failing only on a cyclic dependency.
    on_demand: bool,
    cap: usize,
    finished: BTreeMap<Multipartition, FockVector>,
    in_progress: std::collections::BTreeSet<Multipartition>,
}

impl<'a, K: Ord, F: FnMut(&Multipartition) -> Result<FockVector, Error>> Eliminator<'a, K, F> {
    /// Clears the exponent-`<= 0` tail of the working vector by subtracting
    /// bar-symmetric multiples of finished columns, selecting at each step
    /// the offending label of maximal priority (ties by textual order).
    fn build(&mut self, label: &Multipartition) -> Result<(), Error> {
        if self.finished.contains_key(label) {
            return Ok(());
        }
        if !self.in_progress.insert(label.clone()) {
            return Err(Error::EliminationStuck(format!(
                "cyclic column dependency through {label}"
            )));
        }
        let mut work = (self.monomial)(label)?;
        let mut steps = 0;
        loop {
            let offender = work
                .terms()
                .filter(|(mp, c)| {
                    *mp != label && self.priority.contains_key(mp) && !c.is_in_q_z_q()
                })
                .max_by(|(x, _), (y, _)| {
                    self.priority[*x]
                        .cmp(&self.priority[*y])
                        .then_with(|| y.to_string().cmp(&x.to_string()))
                })
                .map(|(mp, c)| (mp.clone(), c.clone()));
            let (mp, coef) = match offender {
                Some(pair) => pair,
                None => break,
            };
            if !self.finished.contains_key(&mp) {
                if !self.on_demand {
                    return Err(Error::EliminationStuck(format!(
                        "coefficient ({coef}) at {mp} in column {label} sits on no finished column"
                    )));
                }
                self.build(&mp)?;
                continue;
            }
            work.sub_scaled(&bar_completion(&coef), &self.finished[&mp]);
            steps += 1;
            if steps > self.cap {
                return Err(Error::EliminationStuck(format!(
                    "elimination for column {label} exceeded {} subtractions",
                    self.cap
                )));
            }
        }
        for (mp, c) in work.terms() {
            if mp != label && !c.is_in_q_z_q() {
                return Err(Error::EliminationStuck(format!(
                    "coefficient ({c}) at {mp} in column {label} sits on no finished column"
                )));
            }
        }
        if !work.coefficient(label).is_one() {
            return Err(Error::EliminationStuck(format!(
                "column {label} finished with diagonal coefficient {}",
                work.coefficient(label)
            )));
        }
        self.in_progress.remove(label);
        self.finished.insert(label.clone(), work);
        Ok(())
    }
}

fn labels_for(params: &ChargeParams, n: u32, order: OrderKind) -> Vec<Multipartition> {
    match order {
        OrderKind::Flotw => enumerate_multipartitions(params.d(), n)
            .into_iter()
            .filter(|l| is_flotw(l, params))
            .collect(),
        OrderKind::Am => kleshchev_multipartitions(params, n),
    }
}

/// Priority key for the Hayashi branch: the negated cumulative sums of the
/// zero-padded component rows, concatenated from the last component to the
/// first. Sorting by this key in decreasing order runs through the labels
/// in increasing charged dominance order, which is the triangular direction
/// of the Hayashi monomials.
fn dominance_priority(lambda: &Multipartition, n: u32) -> Vec<i64> {
    let mut out = Vec::with_capacity((lambda.d() * n) as usize);
    let mut acc: i64 = 0;
    for c in (0..lambda.d()).rev() {
        for row in 1..=n.max(1) {
            acc += i64::from(lambda.part(c, row));
            out.push(-acc);
        }
    }
    out
}

fn build_columns<K: Ord>(
    labels: &[Multipartition],
    priority: &BTreeMap<Multipartition, K>,
    monomial: impl FnMut(&Multipartition) -> Result<FockVector, Error>,
    on_demand: bool,
) -> Result<BTreeMap<Multipartition, FockVector>, Error> {
    // Weakly decreasing priority; among equal priorities, textual order.
    let mut processing: Vec<&Multipartition> = labels.iter().collect();
    processing.sort_by(|x, y| {
        priority[*y]
            .cmp(&priority[*x])
            .then_with(|| x.to_string().cmp(&y.to_string()))
    });
    let mut eliminator = Eliminator {
        priority,
        monomial,
        on_demand,
        cap: 1000 * (labels.len() + 1),
        finished: BTreeMap::new(),
        in_progress: std::collections::BTreeSet::new(),
    };
    for label in processing {
        eliminator.build(label)?;
    }
    Ok(eliminator.finished)
}

/// The canonical basis of the rank-`n` layer for the given order, one
/// column per crystal label, in enumeration order of the labels.
///
/// FLOTW columns are processed in weakly decreasing a-value order, matching
/// the a-triangularity of the monomial vectors `A(lambda)`. Hayashi columns
/// are processed along the charged dominance order instead, which is the
/// triangular direction on that side; only the `q = 1` content of those
/// columns is consumed downstream.
pub fn canonical_basis(
    params: &ChargeParams,
    n: u32,
    order: OrderKind,
) -> Result<Vec<CanonicalBasisColumn>, Error> {
    let labels = labels_for(params, n, order);
    let finished = match order {
        OrderKind::Flotw => {
            let mut a_of: BTreeMap<Multipartition, Rational> = BTreeMap::new();
            for label in &labels {
                a_of.insert(label.clone(), a_value(label, params, n)?);
            }
            build_columns(&labels, &a_of, |label| a_vector(label, params), false)?
        }
        OrderKind::Am => {
            let priority: BTreeMap<Multipartition, Vec<i64>> = labels
                .iter()
                .map(|l| (l.clone(), dominance_priority(l, n)))
                .collect();
            build_columns(&labels, &priority, |label| am_monomial(label, params), true)?
        }
    };

    let index: BTreeMap<Multipartition, usize> = enumerate_multipartitions(params.d(), n)
        .into_iter()
        .enumerate()
        .map(|(i, mp)| (mp, i))
        .collect();
    let mut columns: Vec<CanonicalBasisColumn> = finished
        .into_iter()
        .map(|(label, vector)| CanonicalBasisColumn { label, vector })
        .collect();
    columns.sort_by_key(|col| index[&col.label]);
    Ok(columns)
}

/// The decomposition matrix at `q = 1` for the given order: entry
/// `(mu, lambda)` is the evaluation at 1 of the coefficient of `mu` in the
/// canonical-basis column of `lambda`.
pub fn decomposition_matrix(
    params: &ChargeParams,
    n: u32,
    order: OrderKind,
) -> Result<DecompositionMatrix, Error> {
    let columns = canonical_basis(params, n, order)?;
    Ok(DecompositionMatrix::from_columns(
        enumerate_multipartitions(params.d(), n),
        &columns,
    ))
}

/// Outcome of a single verification check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub passed: bool,
    pub failures: Vec<String>,
}

impl CheckResult {
    fn from_failures(failures: Vec<String>) -> Self {
        CheckResult { passed: failures.is_empty(), failures }
    }
}

/// Structured report of the canonical-basic-set checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CbsReport {
    /// Diagonal entries are 1 on FLOTW columns.
    pub diagonal_ones: CheckResult,
    /// Every nonzero off-diagonal entry sits at strictly larger a-value.
    pub a_triangularity: CheckResult,
    /// AM and FLOTW decomposition matrices coincide after relabeling
    /// columns through the crystal bijection.
    pub matrices_agree: CheckResult,
}

impl CbsReport {
    pub fn all_passed(&self) -> bool {
        self.diagonal_ones.passed && self.a_triangularity.passed && self.matrices_agree.passed
    }

    pub fn to_json(&self) -> String {
        fn check(c: &CheckResult) -> String {
            let failures: Vec<String> =
                c.failures.iter().map(|f| format!("\"{f}\"")).collect();
            format!(
                "{{\"passed\":{},\"failures\":[{}]}}",
                c.passed,
                failures.join(",")
            )
        }
        format!(
            "{{\"diagonal_ones\":{},\"a_triangularity\":{},\"matrices_agree\":{}}}",
            check(&self.diagonal_ones),
            check(&self.a_triangularity),
            check(&self.matrices_agree)
        )
    }
}

impl std::fmt::Display for CbsReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (name, check) in [
            ("diagonal-ones", &self.diagonal_ones),
            ("a-triangularity", &self.a_triangularity),
            ("two-action-agreement", &self.matrices_agree),
        ] {
            writeln!(f, "{name}: {}", if check.passed { "pass" } else { "fail" })?;
            for failure in &check.failures {
                writeln!(f, "    {failure}")?;
            }
        }
        Ok(())
    }
}

/// Runs the three canonical-basic-set checks on computed data and returns
/// a structured report; failures are report entries, not errors.
pub fn verify_cbs(params: &ChargeParams, n: u32) -> Result<CbsReport, Error> {
    let rows = enumerate_multipartitions(params.d(), n);
    let flotw_columns = canonical_basis(params, n, OrderKind::Flotw)?;
    let am_columns = canonical_basis(params, n, OrderKind::Am)?;
    let c_map = bijection_c(params, n)?;

    let mut a_of: BTreeMap<Multipartition, Rational> = BTreeMap::new();
    for row in &rows {
        a_of.insert(row.clone(), a_value(row, params, n)?);
    }

    let mut diagonal_failures = Vec::new();
    let mut triangular_failures = Vec::new();
    for col in &flotw_columns {
        if !col.vector.coefficient(&col.label).is_one() {
            diagonal_failures.push(format!("column {} has non-unit diagonal", col.label));
        }
        for (mu, coef) in col.vector.terms() {
            if mu == &col.label {
                continue;
            }
            if !coef.eval_at_one().is_zero() && a_of[mu] <= a_of[&col.label] {
                triangular_failures.push(format!(
                    "entry ({mu}, {}) nonzero with a({mu}) <= a({})",
                    col.label, col.label
                ));
            }
        }
    }

    let flotw_by_label: BTreeMap<&Multipartition, &CanonicalBasisColumn> =
        flotw_columns.iter().map(|c| (&c.label, c)).collect();
    let mut agreement_failures = Vec::new();
    if am_columns.len() != flotw_columns.len() {
        agreement_failures.push(format!(
            "column counts differ: {} Kleshchev vs {} FLOTW",
            am_columns.len(),
            flotw_columns.len()
        ));
    }
    for am_col in &am_columns {
        let image = match c_map.get(&am_col.label) {
            Some(image) => image,
            None => {
                agreement_failures
                    .push(format!("bijection is missing label {}", am_col.label));
                continue;
            }
        };
        let flotw_col = match flotw_by_label.get(image) {
            Some(col) => col,
            None => {
                agreement_failures
                    .push(format!("no FLOTW column labeled {image} = c({})", am_col.label));
                continue;
            }
        };
        for row in &rows {
            let lhs = am_col.vector.coefficient(row).eval_at_one();
            let rhs = flotw_col.vector.coefficient(row).eval_at_one();
            if lhs != rhs {
                agreement_failures.push(format!(
                    "entry ({row}, {}): AM gives {lhs}, FLOTW column {image} gives {rhs}",
                    am_col.label
                ));
            }
        }
    }

    Ok(CbsReport {
        diagonal_ones: CheckResult::from_failures(diagonal_failures),
        a_triangularity: CheckResult::from_failures(triangular_failures),
        matrices_agree: CheckResult::from_failures(agreement_failures),
    })
}
