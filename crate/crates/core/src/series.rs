//! Truncated power series over a ring, Bessel-function determinants for
//! tableaux and chamber walks, and the coefficient identities behind the
//! Baxter-number formula for hesitating walks.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::{binomial, factorial, Field, Ring};

/// A power series in `t` known modulo `t^(known)`. Exact polynomials have
/// `known == usize::MAX`, so sums and products with them keep the other
/// operand's precision.
#[derive(Clone, Debug)]
pub struct PowerSeries<F> {
    coeffs: Vec<F>,
    known: usize,
}

const EXACT: usize = usize::MAX;

impl<F: Ring> PowerSeries<F> {
    /// Series with coefficients `t^0 ..= t^order` known.
    pub fn new(mut coeffs: Vec<F>, order: usize) -> Self {
        coeffs.truncate(order + 1);
        Self { coeffs, known: order + 1 }
    }

    /// An exact polynomial.
    pub fn polynomial(coeffs: Vec<F>) -> Self {
        Self { coeffs, known: EXACT }
    }

    pub fn constant(c: F) -> Self {
        Self::polynomial(vec![c])
    }

    /// Highest power whose coefficient is known; `None` for exact polynomials.
    pub fn order(&self) -> Option<usize> {
        (self.known != EXACT).then(|| self.known - 1)
    }

    pub fn coeff(&self, n: usize) -> F {
        assert!(n < self.known, "coefficient {n} is beyond the truncation order");
        self.coeffs.get(n).cloned().unwrap_or_else(F::zero)
    }

    /// All known coefficients; for exact polynomials up to the degree.
    pub fn coeffs(&self) -> Vec<F> {
        let len = if self.known == EXACT { self.coeffs.len() } else { self.known };
        (0..len).map(|n| self.coeff(n)).collect()
    }

    pub fn truncate(&self, order: usize) -> Self {
        let known = self.known.min(order + 1);
        let coeffs = self.coeffs.iter().take(known).cloned().collect();
        Self { coeffs, known }
    }

    /// Substitutes `c t` for `t`.
    pub fn scale_argument(&self, c: &F) -> Self {
        let mut pow = F::one();
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| {
                let v = a.clone() * pow.clone();
                pow = pow.clone() * c.clone();
                v
            })
            .collect();
        Self { coeffs, known: self.known }
    }
}

impl<F: Field> PowerSeries<F> {
    /// `n! [t^n]`, the count an exponential generating function records.
    pub fn egf_coefficient(&self, n: usize) -> F {
        self.coeff(n) * F::from_integer(&factorial(n as u64))
    }
}

impl PowerSeries<BigRational> {
    /// `n! [t^n]` as an integer; errors if it is not one.
    pub fn egf_integer(&self, n: usize) -> Result<BigInt> {
        let v = self.egf_coefficient(n);
        if !v.is_integer() {
            return Err(Error::InexactDivision(format!("EGF coefficient {n} is {v}")));
        }
        Ok(v.to_integer())
    }
}

impl<F: Ring> PartialEq for PowerSeries<F> {
    fn eq(&self, other: &Self) -> bool {
        if self.known != other.known {
            return false;
        }
        let len = self.coeffs.len().max(other.coeffs.len());
        (0..len).all(|n| {
            let a = self.coeffs.get(n).cloned().unwrap_or_else(F::zero);
            let b = other.coeffs.get(n).cloned().unwrap_or_else(F::zero);
            a == b
        })
    }
}

impl<F: Ring> Add for PowerSeries<F> {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        let known = self.known.min(rhs.known);
        let len = self.coeffs.len().max(rhs.coeffs.len()).min(known);
        let coeffs = (0..len)
            .map(|n| {
                let a = self.coeffs.get(n).cloned().unwrap_or_else(F::zero);
                let b = rhs.coeffs.get(n).cloned().unwrap_or_else(F::zero);
                a + b
            })
            .collect();
        Self { coeffs, known }
    }
}

impl<F: Ring> Neg for PowerSeries<F> {
    type Output = Self;

    fn neg(self) -> Self {
        Self { coeffs: self.coeffs.into_iter().map(|a| -a).collect(), known: self.known }
    }
}

impl<F: Ring> Sub for PowerSeries<F> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<F: Ring> Mul for PowerSeries<F> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        let known = self.known.min(rhs.known);
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return Self { coeffs: Vec::new(), known };
        }
        let len = (self.coeffs.len() + rhs.coeffs.len() - 1).min(known);
        let mut coeffs = vec![F::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate().take(len) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(len - i) {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self { coeffs, known }
    }
}

impl<F: Ring> Zero for PowerSeries<F> {
    fn zero() -> Self {
        Self::polynomial(Vec::new())
    }

    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
}

impl<F: Ring> One for PowerSeries<F> {
    fn one() -> Self {
        Self::constant(F::one())
    }
}

/// Determinant by cofactor expansion along the first row; only ring
/// operations are used, so it works for series and symbolic polynomials.
pub fn determinant<R: Ring>(m: &[Vec<R>]) -> R {
    let k = m.len();
    assert!(m.iter().all(|row| row.len() == k), "determinant of a non-square matrix");
    match k {
        0 => R::one(),
        1 => m[0][0].clone(),
        _ => {
            let mut acc = R::zero();
            for c in 0..k {
                if m[0][c].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<R>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|&(j, _)| j != c).map(|(_, v)| v.clone()).collect())
                    .collect();
                let term = m[0][c].clone() * determinant(&minor);
                acc = if c % 2 == 0 { acc + term } else { acc - term };
            }
            acc
        }
    }
}

/// `b_j(t) = Σ_n t^(2n+|j|) / (n! (n+|j|)!)`, known up to `t^order`.
pub fn bessel_series<F: Field>(j: i64, order: usize) -> PowerSeries<F> {
    let j = j.unsigned_abs() as usize;
    let mut coeffs = vec![F::zero(); order + 1];
    let mut n = 0;
    while 2 * n + j <= order {
        let denom = factorial(n as u64) * factorial((n + j) as u64);
        coeffs[2 * n + j] = F::from_ratio(&BigInt::one(), &denom);
        n += 1;
    }
    PowerSeries::new(coeffs, order)
}

fn syt_matrix<R: Ring>(k: usize, b: impl Fn(i64) -> R) -> Vec<Vec<R>> {
    (1..=k as i64)
        .map(|i| (1..=k as i64).map(|j| b(i - j) + b(i + j - 1)).collect())
        .collect()
}

/// EGF of standard Young tableaux of height at most `2k`.
pub fn syt_egf<F: Field>(k: usize, order: usize) -> PowerSeries<F> {
    determinant(&syt_matrix(k, |j| bessel_series::<F>(j, order)))
}

/// The same determinant, expanded symbolically in the `b_j`.
pub fn syt_egf_symbolic(k: usize) -> BesselPoly {
    determinant(&syt_matrix(k, BesselPoly::b))
}

fn check_strict(p: &[i64]) -> Result<()> {
    if p.iter().all(|&v| v > 0) && p.windows(2).all(|w| w[0] > w[1]) {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("{p:?} is not strictly decreasing and positive")))
    }
}

/// EGF by length of oscillating walks from `lambda` to `mu` in
/// `x_1 > ... > x_k > 0`.
pub fn grabiner_magyar<F: Field>(lambda: &[i64], mu: &[i64], order: usize) -> Result<PowerSeries<F>> {
    if lambda.len() != mu.len() {
        return Err(Error::InvalidArgument("points of different dimensions".into()));
    }
    check_strict(lambda)?;
    check_strict(mu)?;
    let m: Vec<Vec<PowerSeries<F>>> = mu
        .iter()
        .map(|&mi| {
            lambda
                .iter()
                .map(|&lj| bessel_series::<F>(mi - lj, order) - bessel_series::<F>(mi + lj, order))
                .collect()
        })
        .collect();
    Ok(determinant(&m))
}

/// EGF of oscillating walks from `δ` to any `δ + m e_1`. Reaching
/// `δ + m e_1` takes at least `m` steps, so the sum stops at `m = order`.
pub fn osc_row_egf<F: Field>(k: usize, order: usize) -> PowerSeries<F> {
    let delta = crate::sequence::delta(k);
    let mut acc = PowerSeries::<F>::zero().truncate(order);
    for m in 0..=order as i64 {
        let mut mu = delta.clone();
        mu[0] += m;
        acc = acc + grabiner_magyar::<F>(&delta, &mu, order).expect("δ-based points are strict");
    }
    acc
}

/// Integer polynomials in the symbols `b_0, b_1, ...`. Monomials are
/// exponent vectors without trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BesselPoly {
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl BesselPoly {
    /// The symbol `b_|j|`.
    pub fn b(j: i64) -> Self {
        let mut e = vec![0; j.unsigned_abs() as usize + 1];
        e[j.unsigned_abs() as usize] = 1;
        Self { terms: BTreeMap::from([(e, BigInt::one())]) }
    }

    pub fn integer(c: i64) -> Self {
        let mut p = Self::default();
        if c != 0 {
            p.terms.insert(Vec::new(), BigInt::from(c));
        }
        p
    }

    fn add_term(&mut self, e: Vec<u32>, c: BigInt) {
        let entry = self.terms.entry(e).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    /// Substitutes the truncated Bessel series for the symbols.
    pub fn evaluate<F: Field>(&self, order: usize) -> PowerSeries<F> {
        let mut acc = PowerSeries::<F>::zero().truncate(order);
        for (e, c) in &self.terms {
            let mut term = PowerSeries::constant(F::from_integer(c)).truncate(order);
            for (j, &p) in e.iter().enumerate() {
                for _ in 0..p {
                    term = term * bessel_series::<F>(j as i64, order);
                }
            }
            acc = acc + term;
        }
        acc
    }
}

impl Add for BesselPoly {
    type Output = Self;

    fn add(mut self, rhs: Self) -> Self {
        for (e, c) in rhs.terms {
            self.add_term(e, c);
        }
        self
    }
}

impl Neg for BesselPoly {
    type Output = Self;

    fn neg(self) -> Self {
        Self { terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect() }
    }
}

impl Sub for BesselPoly {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Mul for BesselPoly {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        let mut out = Self::default();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let mut e = vec![0; ea.len().max(eb.len())];
                for (i, v) in ea.iter().enumerate().chain(eb.iter().enumerate()) {
                    e[i] += v;
                }
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

impl Zero for BesselPoly {
    fn zero() -> Self {
        Self::default()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for BesselPoly {
    fn one() -> Self {
        Self::integer(1)
    }
}

impl fmt::Display for BesselPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // Highest-degree monomials first, then lexicographic in b_0, b_1, ...
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| {
            let deg = |e: &Vec<u32>| e.iter().sum::<u32>();
            deg(b).cmp(&deg(a)).then_with(|| b.cmp(a))
        });
        for (t, (e, c)) in terms.iter().enumerate() {
            match (t, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let abs = c.abs();
            let symbols: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|&(_, &p)| p > 0)
                .map(|(j, &p)| if p == 1 { format!("b{j}") } else { format!("b{j}^{p}") })
                .collect();
            match (abs.is_one(), symbols.is_empty()) {
                (_, true) => write!(f, "{abs}")?,
                (true, false) => write!(f, "{}", symbols.join("*"))?,
                (false, false) => write!(f, "{abs}*{}", symbols.join("*"))?,
            }
        }
        Ok(())
    }
}

/// `k/(n+1) C(n+1, j) C(n+1, j+k) C(n, j-l)`.
pub fn a_term(n: i64, l: i64, k: i64, j: i64) -> BigRational {
    let num = BigInt::from(k) * binomial(n + 1, j) * binomial(n + 1, j + k) * binomial(n, j - l);
    BigRational::new(num, BigInt::from(n + 1))
}

/// `[t^n] A_{l,k}(t)`, the sum of [`a_term`] over its finite support `0 <= j <= n + 1`.
pub fn a_coeff(l: i64, k: i64, n: i64) -> BigRational {
    (0..=n + 1).map(|j| a_term(n, l, k, j)).sum()
}

/// `C(n+1, j-1) C(n+1, j) C(n+1, j+1) / (C(n+1, 1) C(n+1, 2))`.
pub fn b_term(n: i64, j: i64) -> BigRational {
    let num = binomial(n + 1, j - 1) * binomial(n + 1, j) * binomial(n + 1, j + 1);
    BigRational::new(num, binomial(n + 1, 1) * binomial(n + 1, 2))
}

/// The Baxter number `B_n`, as a sum of [`b_term`] with one exact division.
pub fn baxter(n: u64) -> Result<BigUint> {
    if n < 1 {
        return Err(Error::InvalidArgument("Baxter numbers start at n = 1".into()));
    }
    let n = n as i64;
    let num: BigInt = (1..=n)
        .map(|j| binomial(n + 1, j - 1) * binomial(n + 1, j) * binomial(n + 1, j + 1))
        .sum();
    let den = binomial(n + 1, 1) * binomial(n + 1, 2);
    let (q, r) = num.div_rem(&den);
    if !r.is_zero() {
        return Err(Error::InexactDivision(format!("B_{n}: {num} / {den} leaves {r}")));
    }
    Ok(q.to_biguint().expect("nonnegative"))
}

/// Which identity failed first, and where.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityFailure {
    pub identity: String,
    pub n: i64,
    pub j: Option<i64>,
}

/// Results of [`identity_checks`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub n_max: i64,
    pub cases: usize,
    pub holds: bool,
    pub first_failure: Option<IdentityFailure>,
}

/// Checks, for `0 <= n <= n_max` and every `j` that can matter, the two
/// vanishing relations, the Baxter relation, and that the ten-term
/// combination of `[t^n] A_{l,k}` equals `B_{n+1}`.
pub fn identity_checks(n_max: i64) -> IdentityReport {
    let a = a_term;
    let zero = BigRational::zero;
    let mut cases = 0;
    let mut first_failure = None;
    let mut fail = |identity: &str, n: i64, j: Option<i64>| {
        first_failure.get_or_insert_with(|| IdentityFailure { identity: identity.into(), n, j });
    };
    for n in 0..=n_max {
        // a_n(l, k, j) vanishes unless 0 <= j <= n + 1; the shifts below move j by at most 2.
        for j in -4..=n + 6 {
            cases += 3;
            let first = a(n, 4, 1, n - j + 2) + a(n, 1, 3, j - 1) - a(n, 2, 2, n - j + 1) - a(n, 3, 2, j);
            if first != zero() {
                fail("A41+A13-A22-A32", n, Some(j));
            }
            let second = a(n, 1, 1, n - j) + a(n, 2, 1, j + 1) - a(n, 0, 2, j);
            if second != zero() {
                fail("A11+A21-A02", n, Some(j));
            }
            let third = a(n, 0, 1, j) + a(n, 3, 1, j + 1) - a(n, 1, 2, j);
            if third != b_term(n + 1, j + 1) {
                fail("A01+A31-A12=b", n, Some(j));
            }
        }
        cases += 1;
        let w: BigRational = (0..=4).map(|r| a_coeff(r, 1, n)).sum::<BigRational>() + a_coeff(1, 3, n)
            - (0..=3).map(|r| a_coeff(r, 2, n)).sum::<BigRational>();
        let b = baxter(n as u64 + 1).expect("n + 1 >= 1");
        if w != BigRational::from_integer(BigInt::from(b)) {
            fail("W=B", n, None);
        }
    }
    IdentityReport { n_max, cases, holds: first_failure.is_none(), first_failure }
}

/// `[t^n] (A_{0,1} + A_{3,1} - A_{1,2})` for `0 <= n <= n_max`.
pub fn w_series(n_max: usize) -> Result<Vec<BigUint>> {
    (0..=n_max as i64)
        .map(|n| {
            let v = a_coeff(0, 1, n) + a_coeff(3, 1, n) - a_coeff(1, 2, n);
            if !v.is_integer() || v.is_negative() {
                return Err(Error::InexactDivision(format!("[t^{n}] W = {v}")));
            }
            Ok(v.to_integer().to_biguint().expect("nonnegative"))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableau::enumerate_syt;
    use crate::walks::{count_walks_to, Domain, WalkSpec};
    use crate::sequence::TableauKind;

    type Q = BigRational;

    fn int(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn bessel_basics() {
        let b0 = bessel_series::<Q>(0, 12);
        assert_eq!(b0.coeff(0), Q::one());
        assert_eq!(b0.coeff(1), Q::zero());
        assert_eq!(bessel_series::<Q>(-2, 12), bessel_series::<Q>(2, 12));
        let f = bessel_series::<f64>(1, 5);
        assert_eq!(f.coeff(3), 0.5);
    }

    #[test]
    fn height_two_egf_calibration() {
        let y2 = bessel_series::<Q>(0, 10) + bessel_series::<Q>(1, 10);
        assert_eq!(y2, syt_egf::<Q>(1, 10));
        for n in 0..=10 {
            assert_eq!(y2.egf_integer(n).unwrap(), int(enumerate_syt(n, 2).len() as i64), "n={n}");
        }
    }

    #[test]
    fn height_four_egf() {
        let y4 = syt_egf::<Q>(2, 10);
        for n in 0..=10 {
            assert_eq!(y4.egf_integer(n).unwrap(), int(enumerate_syt(n, 4).len() as i64));
        }
    }

    #[test]
    fn symbolic_height_four() {
        let b = BesselPoly::b;
        let expected = b(0) * b(0) + b(0) * b(1) + b(0) * b(3)
            - BesselPoly::integer(2) * b(1) * b(2)
            - b(2) * b(2)
            - b(1) * b(1)
            + b(1) * b(3);
        let got = syt_egf_symbolic(2);
        assert_eq!(got, expected);
        assert_eq!(got.to_string(), "b0^2 + b0*b1 + b0*b3 - b1^2 - 2*b1*b2 + b1*b3 - b2^2");
        assert_eq!(syt_egf_symbolic(1).to_string(), "b0 + b1");
        assert_eq!(got.evaluate::<Q>(12), syt_egf::<Q>(2, 12));
    }

    #[test]
    fn walk_argument_calibration() {
        // Half-line excursion from 1: one walk of length 0, one of length 2.
        let e = grabiner_magyar::<Q>(&[1], &[1], 8).unwrap();
        assert_eq!(e.egf_integer(0).unwrap(), int(1));
        assert_eq!(e.egf_integer(2).unwrap(), int(1));
        for k in 1..=2 {
            let delta = crate::sequence::delta(k);
            for m in 0..=3 {
                let mut mu = delta.clone();
                mu[0] += m;
                let s = grabiner_magyar::<Q>(&delta, &mu, 10).unwrap();
                for n in 0..=10 {
                    let spec = WalkSpec::new(TableauKind::Oscillating, Domain::Shifted, k, n);
                    let c: u64 = count_walks_to(&spec, |x| x == mu.as_slice()).unwrap();
                    assert_eq!(s.egf_integer(n).unwrap(), int(c as i64), "k={k} m={m} n={n}");
                }
            }
        }
        assert!(grabiner_magyar::<Q>(&[1, 2], &[2, 1], 4).is_err());
    }

    #[test]
    fn row_ending_walks_equal_tableaux() {
        for k in 1..=2 {
            assert_eq!(osc_row_egf::<Q>(k, 12), syt_egf::<Q>(k, 12));
        }
    }

    #[test]
    fn truncation_propagates() {
        let a = bessel_series::<Q>(0, 4);
        let b = bessel_series::<Q>(0, 8);
        assert_eq!((a.clone() * b.clone()).order(), Some(4));
        assert_eq!((a + b).order(), Some(4));
        assert_eq!(PowerSeries::<Q>::one().order(), None);
    }

    #[test]
    fn baxter_values() {
        assert!(baxter(0).is_err());
        let expect = [1u64, 2, 6, 22, 92, 422, 2074, 10754, 58202, 326240, 1882960];
        for (i, &b) in expect.iter().enumerate() {
            assert_eq!(baxter(i as u64 + 1).unwrap(), BigUint::from(b));
        }
    }

    #[test]
    fn identities_and_w() {
        let r = identity_checks(20);
        assert!(r.holds, "{:?}", r.first_failure);
        let w = w_series(10).unwrap();
        for (n, v) in w.iter().enumerate() {
            assert_eq!(*v, baxter(n as u64 + 1).unwrap());
        }
        assert_eq!(a_coeff(0, 1, 0), Q::one());
    }
}
