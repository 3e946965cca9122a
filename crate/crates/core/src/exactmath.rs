//! Exact arithmetic: sparse Laurent polynomials in `q` over the integers,
//! q-integers, q-factorials, Gaussian binomials, and exact rationals.
//!
//! Every Fock-space coefficient and decomposition polynomial in this crate
//! is carried by [`LaurentPoly`]. The coefficient scalar is generic over an
//! integer-like ring; the crate-level alias [`crate::LaurentPolynomial`]
//! fixes arbitrary-precision [`num_bigint::BigInt`] coefficients, which is
//! what every higher module uses.
//!
//! All values are immutable after construction and every operation is a
//! pure function.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_traits::Signed;

use crate::Error;

/// Exact rationals, stored in lowest terms with positive denominator.
pub use num_rational::BigRational as Rational;

/// Coefficient scalar for [`LaurentPoly`]: an exact signed integer ring.
///
/// Implemented by `i64`, `i128`, [`num_bigint::BigInt`], and anything else
/// satisfying the `num` traits below.
pub trait Coeff: Integer + Signed + Clone + fmt::Debug + fmt::Display {}
impl<T: Integer + Signed + Clone + fmt::Debug + fmt::Display> Coeff for T {}

/// Sparse Laurent polynomial `sum_k c_k q^k` with integer exponents.
///
/// Canonical form: no stored coefficient is zero and the zero polynomial is
/// the empty map, so structural equality is polynomial equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPoly<C> {
    terms: BTreeMap<i64, C>,
}

impl<C: Coeff> LaurentPoly<C> {
    pub fn zero() -> Self {
        LaurentPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(C::one(), 0)
    }

    /// The monomial `c q^exp` (canonicalized if `c = 0`).
    pub fn monomial(c: C, exp: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        LaurentPoly { terms }
    }

    /// The monomial `q^exp`.
    pub fn q_pow(exp: i64) -> Self {
        Self::monomial(C::one(), exp)
    }

    /// Build from (exponent, coefficient) pairs, merging and pruning zeros.
    pub fn from_terms<I: IntoIterator<Item = (i64, C)>>(iter: I) -> Self {
        let mut terms: BTreeMap<i64, C> = BTreeMap::new();
        for (exp, c) in iter {
            Self::add_into(&mut terms, exp, c);
        }
        LaurentPoly { terms }
    }

    fn add_into(terms: &mut BTreeMap<i64, C>, exp: i64, c: C) {
        if c.is_zero() {
            return;
        }
        match terms.remove(&exp) {
            None => {
                terms.insert(exp, c);
            }
            Some(old) => {
                let sum = old + c;
                if !sum.is_zero() {
                    terms.insert(exp, sum);
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms.get(&0).map(|c| c.is_one()).unwrap_or(false)
    }

    /// Coefficient of `q^exp` (zero if absent).
    pub fn coefficient(&self, exp: i64) -> C {
        self.terms.get(&exp).cloned().unwrap_or_else(C::zero)
    }

    /// Terms in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &C)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// `true` iff every term has exponent `>= 1` (membership in `q Z[q]`;
    /// the zero polynomial qualifies).
    pub fn is_in_q_z_q(&self) -> bool {
        self.min_exp().map(|m| m >= 1).unwrap_or(true)
    }

    /// The involution `q -> q^{-1}`: negates every exponent.
    pub fn bar(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Sum of all coefficients, i.e. the evaluation at `q = 1`.
    pub fn eval_at_one(&self) -> C {
        self.terms
            .values()
            .fold(C::zero(), |acc, c| acc + c.clone())
    }

    pub fn scaled(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, k)| (*e, k.clone() * c.clone()))
                .collect(),
        }
    }

    /// Exact division: returns `s` with `s * divisor = self`, or
    /// [`Error::NonDivisibility`] if no exact quotient exists (including a
    /// zero divisor).
    ///
    /// Implemented by leading-term elimination from the highest exponent
    /// down, failing fast on a coefficient that does not divide or on a
    /// quotient exponent falling below the only possible trailing exponent.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self, Error> {
        if divisor.is_zero() {
            return Err(Error::NonDivisibility);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let d_max = divisor.max_exp().unwrap();
        let d_lead = divisor.terms.get(&d_max).unwrap().clone();
        // An exact quotient s satisfies min_exp(s) = min_exp(p) - min_exp(d).
        let low_bound = self.min_exp().unwrap() - divisor.min_exp().unwrap();
        let mut rem = self.clone();
        let mut quot: BTreeMap<i64, C> = BTreeMap::new();
        while let Some((&r_max, r_lead)) = rem.terms.iter().next_back() {
            let q_exp = r_max - d_max;
            if q_exp < low_bound {
                return Err(Error::NonDivisibility);
            }
            let (q_c, r_c) = r_lead.div_rem(&d_lead);
            if !r_c.is_zero() {
                return Err(Error::NonDivisibility);
            }
            for (e, c) in divisor.terms.iter() {
                Self::add_into(&mut rem.terms, e + q_exp, c.clone().neg() * q_c.clone());
            }
            quot.insert(q_exp, q_c);
        }
        Ok(LaurentPoly { terms: quot })
    }
}

impl<C: Coeff> Add for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn add(self, rhs: &LaurentPoly<C>) -> LaurentPoly<C> {
        let mut terms = self.terms.clone();
        for (e, c) in rhs.terms.iter() {
            LaurentPoly::add_into(&mut terms, *e, c.clone());
        }
        LaurentPoly { terms }
    }
}

impl<C: Coeff> Sub for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn sub(self, rhs: &LaurentPoly<C>) -> LaurentPoly<C> {
        let mut terms = self.terms.clone();
        for (e, c) in rhs.terms.iter() {
            LaurentPoly::add_into(&mut terms, *e, c.clone().neg());
        }
        LaurentPoly { terms }
    }
}

impl<C: Coeff> Neg for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn neg(self) -> LaurentPoly<C> {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (*e, c.clone().neg()))
                .collect(),
        }
    }
}

impl<C: Coeff> Mul for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn mul(self, rhs: &LaurentPoly<C>) -> LaurentPoly<C> {
        let mut terms = BTreeMap::new();
        for (e1, c1) in self.terms.iter() {
            for (e2, c2) in rhs.terms.iter() {
                LaurentPoly::add_into(&mut terms, e1 + e2, c1.clone() * c2.clone());
            }
        }
        LaurentPoly { terms }
    }
}

impl<C: Coeff> Add for LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn add(self, rhs: LaurentPoly<C>) -> LaurentPoly<C> {
        &self + &rhs
    }
}

impl<C: Coeff> Sub for LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn sub(self, rhs: LaurentPoly<C>) -> LaurentPoly<C> {
        &self - &rhs
    }
}

impl<C: Coeff> Mul for LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn mul(self, rhs: LaurentPoly<C>) -> LaurentPoly<C> {
        &self * &rhs
    }
}

impl<C: Coeff> Neg for LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn neg(self) -> LaurentPoly<C> {
        -&self
    }
}

/// The q-integer `[j]_q = q^{j-1} + q^{j-3} + ... + q^{1-j}`; `[0]_q = 0`.
pub fn q_integer<C: Coeff>(j: u32) -> LaurentPoly<C> {
    let j = i64::from(j);
    LaurentPoly::from_terms((0..j).map(|k| (j - 1 - 2 * k, C::one())))
}

/// The q-factorial `[j]_q^! = [1]_q [2]_q ... [j]_q`; `[0]_q^! = 1`.
pub fn q_factorial<C: Coeff>(j: u32) -> LaurentPoly<C> {
    let mut acc = LaurentPoly::one();
    for k in 1..=j {
        acc = &acc * &q_integer(k);
    }
    acc
}

/// The Gaussian binomial `[l choose j]_q = [l]^! / ([j]^! [l-j]^!)`;
/// zero when `j > l`.
pub fn gauss_binomial<C: Coeff>(l: u32, j: u32) -> LaurentPoly<C> {
    if j > l {
        return LaurentPoly::zero();
    }
    let num = q_factorial::<C>(l);
    let den = &q_factorial::<C>(j) * &q_factorial::<C>(l - j);
    num.exact_div(&den)
        .expect("q-factorial always divides the larger q-factorial")
}

impl<C: Coeff> fmt::Display for LaurentPoly<C> {
    /// Textual form used in all CLI and JSON output: terms in decreasing
    /// exponent order, e.g. `q^2 + 2 + q^-2`; zero prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (exp, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit = mag.is_one();
            match (*exp, unit) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{mag}q")?,
                (e, true) => write!(f, "q^{e}")?,
                (e, false) => write!(f, "{mag}q^{e}")?,
            }
        }
        Ok(())
    }
}
