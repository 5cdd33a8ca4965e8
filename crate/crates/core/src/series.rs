//! Exact polynomials, rational functions with factored denominators, and
//! rational fitting of integer sequences.
//!
//! The rational functions that occur in this crate all have denominators of
//! the shape `c * prod_j (1 - j t)^{e_j}` with positive integers `j`; the
//! [`RationalFunction`] type stores that factorization explicitly so that
//! pole sets and residues can be read off exactly.

use std::collections::BTreeMap;
use std::fmt;

use num::{BigInt, BigRational, One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::q;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SeriesError {
    #[error("insufficient terms: {0}")]
    InsufficientTerms(String),
    #[error("no rational function with the requested pole structure fits the data")]
    NoFit,
    #[error("denominator does not factor into (1 - j t) binomials")]
    UnfactorableDenominator,
    #[error("limit diverges: {0}")]
    LimitDiverges(String),
}

/// Polynomial with exact rational coefficients, low degree first, no trailing
/// zeros.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Polynomial {
    coeffs: Vec<BigRational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(q(1))
    }

    pub fn constant(c: BigRational) -> Self {
        Polynomial { coeffs: vec![c] }.normalized()
    }

    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        Polynomial { coeffs }.normalized()
    }

    pub fn from_int_coeffs(coeffs: &[i64]) -> Self {
        Polynomial::from_coeffs(coeffs.iter().map(|&c| q(c)).collect())
    }

    /// The monomial `c * t^k`.
    pub fn monomial(c: BigRational, k: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); k + 1];
        coeffs[k] = c;
        Polynomial { coeffs }.normalized()
    }

    /// `1 - j t`.
    pub fn one_minus_jt(j: u32) -> Self {
        Polynomial::from_coeffs(vec![q(1), -q(j as i64)])
    }

    fn normalized(mut self) -> Self {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + other.coeff(k)).collect();
        Polynomial::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial { coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &BigRational) -> Polynomial {
        Polynomial::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Truncation mod `t^{k+1}`.
    pub fn truncate(&self, k: usize) -> Polynomial {
        Polynomial::from_coeffs(self.coeffs.iter().take(k + 1).cloned().collect())
    }

    /// Exact division, when the remainder is zero.
    pub fn div_exact(&self, divisor: &Polynomial) -> Option<Polynomial> {
        let (quot, rem) = self.div_rem(divisor);
        rem.is_zero().then_some(quot)
    }

    pub fn div_rem(&self, divisor: &Polynomial) -> (Polynomial, Polynomial) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let mut rem = self.clone();
        let dd = divisor.degree().unwrap();
        let lead = divisor.coeffs[dd].clone();
        let mut quot = vec![
            BigRational::zero();
            self.coeffs.len().saturating_sub(divisor.coeffs.len()) + 1
        ];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let c = &rem.coeffs[rd] / &lead;
            let k = rd - dd;
            quot[k] = c.clone();
            let mut coeffs = rem.coeffs.clone();
            for (i, d) in divisor.coeffs.iter().enumerate() {
                coeffs[k + i] -= &c * d;
            }
            rem = Polynomial::from_coeffs(coeffs);
        }
        (Polynomial::from_coeffs(quot), rem)
    }

    fn gcd(&self, other: &Polynomial) -> Polynomial {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        if let Some(d) = a.degree() {
            let lead = a.coeffs[d].clone();
            a = a.scale(&(BigRational::one() / lead));
        }
        a
    }

    /// True if every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Coefficients as integers; panics when a coefficient is fractional.
    pub fn int_coeffs(&self) -> Vec<BigInt> {
        self.coeffs.iter().map(|c| c.to_integer()).collect()
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if k == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{k}")?,
            }
        }
        Ok(())
    }
}

/// Behaviour of a rational function at the point `t = 1/j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Residue {
    /// No pole; the partial-fraction coefficient is zero.
    None,
    /// Simple pole; carries the coefficient of `1/(1 - j t)`.
    Simple(BigRational),
    /// Pole of order at least two; carries the leading coefficient of
    /// `1/(1 - j t)^order`.
    Higher { order: u32, leading: BigRational },
}

/// Rational function `num / (unit * prod_j (1 - j t)^{e_j})`, reduced.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalFunction {
    num: Polynomial,
    den_unit: BigRational,
    den_factors: BTreeMap<u32, u32>,
}

impl RationalFunction {
    pub fn zero() -> Self {
        RationalFunction {
            num: Polynomial::zero(),
            den_unit: BigRational::one(),
            den_factors: BTreeMap::new(),
        }
    }

    pub fn from_polynomial(p: Polynomial) -> Self {
        RationalFunction { num: p, den_unit: BigRational::one(), den_factors: BTreeMap::new() }
    }

    /// `num / prod (1 - j t)^{e_j}`; reduces on construction.
    pub fn new(num: Polynomial, den_factors: &[(u32, u32)]) -> Self {
        let mut factors = BTreeMap::new();
        for &(j, e) in den_factors {
            if e > 0 {
                *factors.entry(j).or_insert(0) += e;
            }
        }
        RationalFunction { num, den_unit: BigRational::one(), den_factors: factors }.reduced()
    }

    /// Builds from a raw numerator/denominator pair.  Fails when the
    /// denominator has a root that is not of the form `1/j`.
    pub fn from_num_den(num: Polynomial, den: Polynomial) -> Result<Self, SeriesError> {
        assert!(!den.is_zero(), "zero denominator");
        let g = num.gcd(&den);
        let (num, den) = if g.degree().unwrap_or(0) > 0 {
            (num.div_exact(&g).unwrap(), den.div_exact(&g).unwrap())
        } else {
            (num, den)
        };
        let mut rest = den.clone();
        let mut factors = BTreeMap::new();
        while rest.degree().unwrap_or(0) > 0 {
            let mut found = false;
            for j in candidate_pole_reciprocals(&rest) {
                if rest.eval(&qr_inv(j)).is_zero() {
                    rest = rest.div_exact(&Polynomial::one_minus_jt(j)).unwrap();
                    *factors.entry(j).or_insert(0) += 1;
                    found = true;
                    break;
                }
            }
            if !found {
                return Err(SeriesError::UnfactorableDenominator);
            }
        }
        let unit = rest.coeff(0);
        Ok(RationalFunction { num: num.scale(&(BigRational::one() / &unit)), den_unit: BigRational::one(), den_factors: factors }
            .reduced())
    }

    fn reduced(mut self) -> Self {
        if self.num.is_zero() {
            self.den_factors.clear();
            self.den_unit = BigRational::one();
            return self;
        }
        let js: Vec<u32> = self.den_factors.keys().cloned().collect();
        for j in js {
            while *self.den_factors.get(&j).unwrap_or(&0) > 0
                && self.num.eval(&qr_inv(j)).is_zero()
            {
                self.num = self.num.div_exact(&Polynomial::one_minus_jt(j)).unwrap();
                let e = self.den_factors.get_mut(&j).unwrap();
                *e -= 1;
                if *e == 0 {
                    self.den_factors.remove(&j);
                }
            }
        }
        if !self.den_unit.is_one() {
            self.num = self.num.scale(&(BigRational::one() / &self.den_unit));
            self.den_unit = BigRational::one();
        }
        self
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    /// Denominator exponents as `(j, e_j)` pairs, ascending in `j`.
    pub fn denominator_factors(&self) -> Vec<(u32, u32)> {
        self.den_factors.iter().map(|(&j, &e)| (j, e)).collect()
    }

    pub fn denominator(&self) -> Polynomial {
        let mut d = Polynomial::constant(self.den_unit.clone());
        for (&j, &e) in &self.den_factors {
            for _ in 0..e {
                d = d.mul(&Polynomial::one_minus_jt(j));
            }
        }
        d
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, other: &RationalFunction) -> RationalFunction {
        let mut factors = self.den_factors.clone();
        for (&j, &e) in &other.den_factors {
            let cur = factors.entry(j).or_insert(0);
            *cur = (*cur).max(e);
        }
        let mut num = Polynomial::zero();
        for (part, unit) in [(self, &self.den_unit), (other, &other.den_unit)] {
            let mut p = part.num.scale(&(BigRational::one() / unit));
            for (&j, &e) in &factors {
                let have = part.den_factors.get(&j).copied().unwrap_or(0);
                for _ in have..e {
                    p = p.mul(&Polynomial::one_minus_jt(j));
                }
            }
            num = num.add(&p);
        }
        RationalFunction { num, den_unit: BigRational::one(), den_factors: factors }.reduced()
    }

    pub fn neg(&self) -> RationalFunction {
        RationalFunction {
            num: self.num.neg(),
            den_unit: self.den_unit.clone(),
            den_factors: self.den_factors.clone(),
        }
    }

    pub fn sub(&self, other: &RationalFunction) -> RationalFunction {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &RationalFunction) -> RationalFunction {
        let mut factors = self.den_factors.clone();
        for (&j, &e) in &other.den_factors {
            *factors.entry(j).or_insert(0) += e;
        }
        RationalFunction {
            num: self.num.mul(&other.num),
            den_unit: &self.den_unit * &other.den_unit,
            den_factors: factors,
        }
        .reduced()
    }

    pub fn scale(&self, c: &BigRational) -> RationalFunction {
        RationalFunction {
            num: self.num.scale(c),
            den_unit: self.den_unit.clone(),
            den_factors: self.den_factors.clone(),
        }
        .reduced()
    }

    /// Power-series coefficients `a_0 .. a_n`.
    pub fn series_coefficients(&self, n: usize) -> Vec<BigRational> {
        // a = num * den^{-1} as a power series
        let den = self.denominator();
        let d0 = den.coeff(0);
        let mut inv = vec![BigRational::zero(); n + 1];
        inv[0] = BigRational::one() / &d0;
        for k in 1..=n {
            let mut s = BigRational::zero();
            for i in 1..=k {
                s += den.coeff(i) * &inv[k - i];
            }
            inv[k] = -s / &d0;
        }
        (0..=n)
            .map(|k| {
                let mut s = BigRational::zero();
                for i in 0..=k {
                    s += self.num.coeff(i) * &inv[k - i];
                }
                s
            })
            .collect()
    }

    /// Reciprocal pole locations: the set of `j` with `(1 - j t)` dividing the
    /// reduced denominator.
    pub fn pole_set(&self) -> Vec<u32> {
        self.den_factors.keys().cloned().collect()
    }

    pub fn pole_order(&self, j: u32) -> u32 {
        self.den_factors.get(&j).copied().unwrap_or(0)
    }

    /// Partial-fraction data at `1/j`: the coefficient of `1/(1 - j t)` when
    /// the pole is simple, or the leading datum for a higher-order pole.
    pub fn residue_at(&self, j: u32) -> Residue {
        let e = self.pole_order(j);
        if e == 0 {
            return Residue::None;
        }
        // leading coefficient: lim_{t -> 1/j} (1 - j t)^e * R(t)
        let x = qr_inv(j);
        let mut den_rest = self.den_unit.clone();
        for (&j2, &e2) in &self.den_factors {
            if j2 != j {
                let f = BigRational::one() - q(j2 as i64) * &x;
                for _ in 0..e2 {
                    den_rest *= &f;
                }
            }
        }
        let leading = self.num.eval(&x) / den_rest;
        if e == 1 {
            Residue::Simple(leading)
        } else {
            Residue::Higher { order: e, leading }
        }
    }

    /// The limit `lim_n a_n / j^n` of the coefficient sequence, which exists
    /// exactly when every pole reciprocal is `<= j` and the pole at `1/j` (if
    /// any) is simple.
    pub fn limit_residue(&self, j: u32) -> Result<BigRational, SeriesError> {
        if let Some(&jmax) = self.den_factors.keys().max() {
            if jmax > j {
                return Err(SeriesError::LimitDiverges(format!(
                    "pole at 1/{jmax} dominates 1/{j}"
                )));
            }
        }
        match self.residue_at(j) {
            Residue::None => Ok(BigRational::zero()),
            Residue::Simple(c) => Ok(c),
            Residue::Higher { order, .. } => Err(SeriesError::LimitDiverges(format!(
                "pole of order {order} at 1/{j}"
            ))),
        }
    }

    /// Canonical JSON form `{num: ["p/q", ...], den: [[j, e], ...]}`.
    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Repr {
            num: Vec<String>,
            den: Vec<(u32, u32)>,
        }
        serde_json::to_value(Repr {
            num: self.num.coeffs().iter().map(rational_string).collect(),
            den: self.denominator_factors(),
        })
        .unwrap()
    }
}

pub fn rational_string(c: &BigRational) -> String {
    format!("{}/{}", c.numer(), c.denom())
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den_factors.is_empty() {
            return write!(f, "{}", self.num);
        }
        write!(f, "({}) / (", self.num)?;
        let mut first = true;
        for (&j, &e) in &self.den_factors {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            write!(f, "(1-{j}t)")?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        write!(f, ")")
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn qr_inv(j: u32) -> BigRational {
    BigRational::new(BigInt::from(1), BigInt::from(j as i64))
}

fn candidate_pole_reciprocals(p: &Polynomial) -> Vec<u32> {
    // roots 1/j of p correspond to integer roots j of the reversed
    // polynomial, which divide its constant coefficient (the leading
    // coefficient of p after clearing rational denominators)
    let deg = match p.degree() {
        None | Some(0) => return Vec::new(),
        Some(d) => d,
    };
    let mut lcm = BigInt::one();
    for c in p.coeffs() {
        lcm = num::integer::lcm(lcm, c.denom().clone());
    }
    let lead: BigInt = (p.coeff(deg) * BigRational::from_integer(lcm)).to_integer();
    let lead = num::abs(lead);
    (1u32..=1000)
        .filter(|&j| (&lead % BigInt::from(j)).is_zero())
        .collect()
}

/// Fits a rational function with denominator `prod_{j<=pole_bound} (1-jt)^{e_j}`,
/// `e_j <= mult_bound`, to the integer sequence `terms[0], terms[1], ...`.
///
/// Candidate denominators are tried in increasing total degree, then
/// lexicographically.  A candidate is accepted only when the final
/// `verify_margin` terms, which never constrain the numerator, are reproduced
/// exactly.
pub fn fit_rational(
    terms: &[BigInt],
    pole_bound: u32,
    mult_bound: u32,
    verify_margin: usize,
) -> Result<RationalFunction, SeriesError> {
    if terms.is_empty() {
        return Err(SeriesError::InsufficientTerms("no terms given".into()));
    }
    let n = terms.len() - 1; // highest known index
    let a = Polynomial::from_coeffs(
        terms.iter().map(|t| BigRational::from_integer(t.clone())).collect(),
    );
    if a.is_zero() {
        return Ok(RationalFunction::zero());
    }
    let max_total = pole_bound * mult_bound;
    for total in 0..=max_total {
        for mults in multiplicity_vectors(pole_bound, mult_bound, total) {
            let mut den = Polynomial::one();
            for (idx, &e) in mults.iter().enumerate() {
                let j = idx as u32 + 1;
                for _ in 0..e {
                    den = den.mul(&Polynomial::one_minus_jt(j));
                }
            }
            let b = a.mul(&den).truncate(n);
            if b.degree().map_or(true, |d| d + verify_margin <= n) {
                let factors: Vec<(u32, u32)> = mults
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(idx, &e)| (idx as u32 + 1, e))
                    .collect();
                return Ok(RationalFunction::new(b, &factors));
            }
        }
    }
    if max_total as usize + verify_margin > n {
        // part of the candidate space cannot be certified with this few terms
        Err(SeriesError::InsufficientTerms(format!(
            "{} terms cannot certify denominators up to degree {max_total} with margin {verify_margin}",
            terms.len()
        )))
    } else {
        Err(SeriesError::NoFit)
    }
}

/// All vectors `(e_1, ..., e_m)` with `0 <= e_j <= mult_bound` and fixed sum,
/// in lexicographic order.
fn multiplicity_vectors(pole_bound: u32, mult_bound: u32, total: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; pole_bound as usize];
    fn rec(cur: &mut Vec<u32>, pos: usize, left: u32, mult_bound: u32, out: &mut Vec<Vec<u32>>) {
        if pos == cur.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let remaining_cap = mult_bound * (cur.len() - pos - 1) as u32;
        for e in 0..=mult_bound.min(left) {
            if left - e <= remaining_cap {
                cur[pos] = e;
                rec(cur, pos + 1, left - e, mult_bound, out);
            }
        }
        cur[pos] = 0;
    }
    rec(&mut cur, 0, total, mult_bound, &mut out);
    out
}
