//! Flats of the type A/B reflection arrangements, combinatorially.
//!
//! A flat of the rank-`n` type B arrangement is a zero block together with a
//! set partition of the remaining indices into signed blocks; within a block
//! the coordinates agree up to the recorded signs, and the whole sign vector
//! of a block is only defined up to a global flip, so the smallest element of
//! each block is normalized to carry `+`.  Contractions and localizations of
//! such flats stay inside the world of products `B_b x prod A_{a_i}`, which
//! is what [`ArrIsoType`] records.

use std::collections::BTreeMap;
use std::fmt;

use num::{BigInt, BigRational, One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::series::Polynomial;
use crate::q;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ArrangementError {
    #[error("n = {0} exceeds the configured bound {1} for this operation")]
    BoundExceeded(usize, usize),
    #[error("type D arrangements are not supported: the class is not closed under contraction")]
    TypeDUnsupported,
}

/// Isomorphism type `B_b x prod_i A-factor(alpha_i)`.
///
/// An A-factor of size `a` is the braid arrangement on `a` coordinates
/// (Coxeter type `A_{a-1}`); sizes `<= 1` contribute empty factors and are
/// normalized away, so `alpha` holds entries `>= 2` in descending order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ArrIsoType {
    pub b: usize,
    pub alpha: Vec<usize>,
}

impl ArrIsoType {
    pub fn new(b: usize, mut alpha: Vec<usize>) -> Self {
        alpha.retain(|&a| a >= 2);
        alpha.sort_unstable_by(|x, y| y.cmp(x));
        ArrIsoType { b, alpha }
    }

    pub fn empty() -> Self {
        ArrIsoType { b: 0, alpha: Vec::new() }
    }

    pub fn pure_b(b: usize) -> Self {
        ArrIsoType { b, alpha: Vec::new() }
    }

    pub fn pure_a(size: usize) -> Self {
        ArrIsoType::new(0, vec![size])
    }

    pub fn is_empty_arrangement(&self) -> bool {
        self.b == 0 && self.alpha.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.b + self.alpha.iter().map(|a| a - 1).sum::<usize>()
    }

    pub fn product(&self, other: &ArrIsoType) -> ArrIsoType {
        let mut alpha = self.alpha.clone();
        alpha.extend_from_slice(&other.alpha);
        ArrIsoType::new(self.b + other.b, alpha)
    }

    /// Canonical string form, e.g. `B3*A2*A2`.
    pub fn canonical_string(&self) -> String {
        let mut s = format!("B{}", self.b);
        for a in &self.alpha {
            s.push_str(&format!("*A{a}"));
        }
        s
    }

    pub fn parse(s: &str) -> Option<ArrIsoType> {
        let mut parts = s.split('*');
        let b = parts.next()?.strip_prefix('B')?.parse().ok()?;
        let mut alpha = Vec::new();
        for p in parts {
            alpha.push(p.strip_prefix('A')?.parse().ok()?);
        }
        Some(ArrIsoType::new(b, alpha))
    }
}

impl fmt::Debug for ArrIsoType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.canonical_string())
    }
}

impl fmt::Display for ArrIsoType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.canonical_string())
    }
}

/// Signed block: indices with signs, smallest index normalized to `+1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct SignedBlock {
    pub elements: Vec<usize>,
    pub signs: Vec<i8>,
}

impl SignedBlock {
    /// Builds from (index, sign) pairs; sorts and normalizes the global flip.
    pub fn new(mut items: Vec<(usize, i8)>) -> Self {
        items.sort_unstable();
        let flip = items[0].1 < 0;
        let (elements, signs) = items
            .into_iter()
            .map(|(e, s)| (e, if flip { -s } else { s }))
            .unzip();
        SignedBlock { elements, signs }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn sign_of(&self, e: usize) -> Option<i8> {
        self.elements.iter().position(|&x| x == e).map(|i| self.signs[i])
    }
}

/// Flat of the type B arrangement on `n` coordinates.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct FlatDescriptor {
    pub n: usize,
    pub zero_block: Vec<usize>,
    pub signed_blocks: Vec<SignedBlock>,
}

impl FlatDescriptor {
    pub fn new(n: usize, mut zero_block: Vec<usize>, mut signed_blocks: Vec<SignedBlock>) -> Self {
        zero_block.sort_unstable();
        signed_blocks.sort();
        FlatDescriptor { n, zero_block, signed_blocks }
    }

    /// Dimension of the flat as a subspace: one per signed block.
    pub fn dim(&self) -> usize {
        self.signed_blocks.len()
    }

    pub fn rank(&self) -> usize {
        self.n - self.dim()
    }

    /// Whole space: all singleton blocks.
    pub fn bottom(n: usize) -> Self {
        FlatDescriptor {
            n,
            zero_block: Vec::new(),
            signed_blocks: (1..=n).map(|e| SignedBlock { elements: vec![e], signs: vec![1] }).collect(),
        }
    }

    /// Origin: everything in the zero block.
    pub fn top(n: usize) -> Self {
        FlatDescriptor { n, zero_block: (1..=n).collect(), signed_blocks: Vec::new() }
    }

    /// Subspace containment, as lattice order: `self <= other` iff the
    /// subspace of `self` contains that of `other` (the bottom flat is the
    /// whole space).
    pub fn leq(&self, other: &FlatDescriptor) -> bool {
        assert_eq!(self.n, other.n);
        // every constraint of self must hold on other
        for &e in &self.zero_block {
            if !other.zero_block.contains(&e) {
                return false;
            }
        }
        for block in &self.signed_blocks {
            // the block must land inside other's zero block, or inside a
            // single signed block with proportional signs
            let all_zero = block.elements.iter().all(|e| other.zero_block.contains(e));
            if all_zero {
                continue;
            }
            let host = other
                .signed_blocks
                .iter()
                .find(|ob| block.elements.iter().all(|e| ob.sign_of(*e).is_some()));
            match host {
                None => return false,
                Some(ob) => {
                    let rel: Vec<i8> = block
                        .elements
                        .iter()
                        .zip(&block.signs)
                        .map(|(e, s)| s * ob.sign_of(*e).unwrap())
                        .collect();
                    if !(rel.iter().all(|&r| r == rel[0])) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// The arrangement induced inside the flat: pure `B_m` with `m` the
    /// number of signed blocks.
    pub fn contraction_type(&self) -> ArrIsoType {
        ArrIsoType::pure_b(self.dim())
    }

    /// The arrangement of hyperplanes containing the flat, in the quotient:
    /// `B_{|zero|} x prod A_{block sizes}`.
    pub fn localization_type(&self) -> ArrIsoType {
        ArrIsoType::new(self.zero_block.len(), self.signed_blocks.iter().map(SignedBlock::len).collect())
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).unwrap()
    }
}

/// Default enumeration bound for [`flats_b`].
pub const FLATS_DEFAULT_BOUND: usize = 8;

/// All flats of the rank-`n` type B arrangement, in a fixed deterministic
/// order.
pub fn flats_b(n: usize) -> Result<Vec<FlatDescriptor>, ArrangementError> {
    flats_b_bounded(n, FLATS_DEFAULT_BOUND)
}

pub fn flats_b_bounded(n: usize, bound: usize) -> Result<Vec<FlatDescriptor>, ArrangementError> {
    if n > bound {
        return Err(ArrangementError::BoundExceeded(n, bound));
    }
    let mut out = Vec::new();
    for zero_mask in 0u32..(1 << n) {
        let zero_block: Vec<usize> = (1..=n).filter(|e| zero_mask >> (e - 1) & 1 == 1).collect();
        let rest: Vec<usize> = (1..=n).filter(|e| zero_mask >> (e - 1) & 1 == 0).collect();
        signed_partitions(&rest, &mut Vec::new(), &mut |blocks| {
            out.push(FlatDescriptor::new(n, zero_block.clone(), blocks.to_vec()));
        });
    }
    out.sort();
    Ok(out)
}

/// Enumerates partitions of `rest` into signed blocks (canonical signs),
/// invoking `f` on each.
fn signed_partitions(
    rest: &[usize],
    acc: &mut Vec<SignedBlock>,
    f: &mut impl FnMut(&[SignedBlock]),
) {
    match rest.split_first() {
        None => f(acc),
        Some((&first, tail)) => {
            // choose the block of `first`: a subset of tail plus sign pattern
            let t = tail.len();
            for mask in 0u32..(1 << t) {
                let members: Vec<usize> =
                    tail.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
                let remaining: Vec<usize> =
                    tail.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 0).map(|(_, &e)| e).collect();
                let k = members.len();
                for signs in 0u32..(1 << k) {
                    let mut items = vec![(first, 1i8)];
                    for (i, &e) in members.iter().enumerate() {
                        items.push((e, if signs >> i & 1 == 1 { -1 } else { 1 }));
                    }
                    acc.push(SignedBlock::new(items));
                    signed_partitions(&remaining, acc, f);
                    acc.pop();
                }
            }
        }
    }
}

/// All set partitions of `{1..=size}`, as block lists.
pub fn set_partitions(size: usize) -> Vec<Vec<Vec<usize>>> {
    let elements: Vec<usize> = (1..=size).collect();
    let mut out = Vec::new();
    fn rec(rest: &[usize], acc: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        match rest.split_first() {
            None => out.push(acc.clone()),
            Some((&first, tail)) => {
                let t = tail.len();
                for mask in 0u32..(1 << t) {
                    let mut block = vec![first];
                    let mut remaining = Vec::new();
                    for (i, &e) in tail.iter().enumerate() {
                        if mask >> i & 1 == 1 {
                            block.push(e);
                        } else {
                            remaining.push(e);
                        }
                    }
                    acc.push(block);
                    rec(&remaining, acc, out);
                    acc.pop();
                }
            }
        }
    }
    rec(&elements, &mut Vec::new(), &mut out);
    out
}

/// Characteristic polynomial of an isomorphism type, multiplicative over
/// factors: a `B_b` factor contributes `prod_{k=1}^{b} (t - (2k-1))`, an
/// A-factor of size `a` contributes `prod_{k=1}^{a-1} (t - k)`.  The two
/// closed forms are validated against the brute-force Moebius computation at
/// small rank (see the tests) and trusted beyond it.
pub fn char_poly(t: &ArrIsoType) -> Polynomial {
    let mut p = Polynomial::one();
    for k in 1..=t.b {
        p = p.mul(&Polynomial::from_int_coeffs(&[-(2 * k as i64 - 1), 1]));
    }
    for &a in &t.alpha {
        for k in 1..a {
            p = p.mul(&Polynomial::from_int_coeffs(&[-(k as i64), 1]));
        }
    }
    p
}

/// Poincare polynomial of the Orlik-Solomon algebra of the type, via the
/// standard identity `(-t)^r chi(-1/t)`, so the coefficient of `t^k` is the
/// k-th (unsigned) Whitney number.
pub fn os_hilbert(t: &ArrIsoType) -> Polynomial {
    whitney_from_char(&char_poly(t), t.rank())
}

pub fn whitney_from_char(chi: &Polynomial, rank: usize) -> Polynomial {
    let mut coeffs = vec![BigRational::zero(); rank + 1];
    for k in 0..=rank {
        let c = chi.coeff(k);
        let sign = if (rank + k) % 2 == 0 { q(1) } else { q(-1) };
        coeffs[rank - k] = c * sign;
    }
    Polynomial::from_coeffs(coeffs)
}

/// One lattice element with its Moebius value.
#[derive(Clone, Debug)]
pub struct LatticePoint {
    pub label: String,
    pub dim: usize,
    pub moebius: BigInt,
}

/// Explicit geometric lattice slice with Moebius values `mu(bottom, F)`, for
/// brute-force validation at small rank.
#[derive(Clone, Debug)]
pub struct GeometricLatticeSlice {
    pub points: Vec<LatticePoint>,
    pub ambient_dim: usize,
}

impl GeometricLatticeSlice {
    /// `sum_F mu(bottom, F) t^{dim F}`.
    pub fn characteristic_polynomial(&self) -> Polynomial {
        let mut coeffs = vec![BigRational::zero(); self.ambient_dim + 1];
        for p in &self.points {
            coeffs[p.dim] += BigRational::from_integer(p.moebius.clone());
        }
        Polynomial::from_coeffs(coeffs)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoxeterKind {
    A,
    B,
}

pub const MOEBIUS_ORACLE_BOUND: usize = 6;

/// Brute-force lattice with Moebius values, `mu(0, F) = -sum_{G < F} mu(0, G)`.
///
/// For type B the lattice is the full flat list of [`flats_b`]; for type A it
/// is the partition lattice of a `size`-element set living in the sum-zero
/// subspace (ambient dimension `size - 1`).
pub fn mobius_oracle(n: usize, kind: CoxeterKind) -> Result<GeometricLatticeSlice, ArrangementError> {
    if n > MOEBIUS_ORACLE_BOUND {
        return Err(ArrangementError::BoundExceeded(n, MOEBIUS_ORACLE_BOUND));
    }
    match kind {
        CoxeterKind::B => {
            let mut flats = flats_b(n)?;
            flats.sort_by_key(|f| f.rank());
            let mut mu: Vec<BigInt> = Vec::with_capacity(flats.len());
            for i in 0..flats.len() {
                let mut m = if i == 0 { BigInt::one() } else { BigInt::ZERO };
                for j in 0..i {
                    if flats[j].leq(&flats[i]) && flats[j] != flats[i] {
                        let mj = mu[j].clone();
                        m -= mj;
                    }
                }
                if i == 0 {
                    m = BigInt::one();
                }
                mu.push(m);
            }
            let points = flats
                .iter()
                .zip(&mu)
                .map(|(f, m)| LatticePoint {
                    label: format!("{f:?}"),
                    dim: f.dim(),
                    moebius: m.clone(),
                })
                .collect();
            Ok(GeometricLatticeSlice { points, ambient_dim: n })
        }
        CoxeterKind::A => {
            let mut parts = set_partitions(n);
            parts.sort_by_key(|p| n - p.len()); // by rank
            let leq = |p: &Vec<Vec<usize>>, r: &Vec<Vec<usize>>| -> bool {
                // p <= r iff p refines r
                p.iter().all(|bp| {
                    r.iter().any(|br| bp.iter().all(|e| br.contains(e)))
                })
            };
            let mut mu: Vec<BigInt> = Vec::with_capacity(parts.len());
            for i in 0..parts.len() {
                let mut m = BigInt::one();
                if i > 0 {
                    m = BigInt::ZERO;
                    for j in 0..i {
                        if parts[j] != parts[i] && leq(&parts[j], &parts[i]) {
                            let mj = mu[j].clone();
                            m -= mj;
                        }
                    }
                }
                mu.push(m);
            }
            let points = parts
                .iter()
                .zip(&mu)
                .map(|(p, m)| LatticePoint {
                    label: format!("{p:?}"),
                    dim: p.len() - 1,
                    moebius: m.clone(),
                })
                .collect();
            Ok(GeometricLatticeSlice { points, ambient_dim: n - 1 })
        }
    }
}

/// Count of flats of `B_n` with a given (localization, contraction) pair,
/// from the closed multinomial formula.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusEntry {
    pub localization: ArrIsoType,
    pub contraction: ArrIsoType,
    pub count: BigInt,
}

/// Closed-form census of flats grouped by isomorphism-type data.
///
/// For `B_n`: a zero block of size `z` and signed blocks of sizes
/// `a_1 >= ... >= a_p` occur in `C(n, z) (n-z)! / (prod a_k! prod m_s!) *
/// prod 2^{a_k - 1}` flats, where `m_s` counts blocks of equal size `s`.
/// For an A-factor of size `n`: set partitions with block sizes `lambda`
/// occur `n! / (prod a_k! prod m_s!)` times.
pub fn flat_type_census(n: usize, kind: CoxeterKind) -> Vec<CensusEntry> {
    let mut out = Vec::new();
    match kind {
        CoxeterKind::B => {
            for z in 0..=n {
                for lambda in partitions_of(n - z) {
                    let mut count = binomial(n, z) * multinomial_blocks(n - z, &lambda);
                    for &a in &lambda {
                        count *= BigInt::from(2).pow(a as u32 - 1);
                    }
                    out.push(CensusEntry {
                        localization: ArrIsoType::new(z, lambda.clone()),
                        contraction: ArrIsoType::pure_b(lambda.len()),
                        count,
                    });
                }
            }
        }
        CoxeterKind::A => {
            for lambda in partitions_of(n) {
                let count = multinomial_blocks(n, &lambda);
                out.push(CensusEntry {
                    localization: ArrIsoType::new(0, lambda.clone()),
                    contraction: ArrIsoType::pure_a(lambda.len()),
                    count,
                });
            }
        }
    }
    out.sort_by(|a, b| {
        (a.contraction.clone(), a.localization.clone())
            .cmp(&(b.contraction.clone(), b.localization.clone()))
    });
    out
}

/// Number of set partitions of a `total`-set with block sizes `lambda`:
/// `total! / (prod a_k! prod m_s!)`.
fn multinomial_blocks(total: usize, lambda: &[usize]) -> BigInt {
    let mut r = factorial(total);
    for &a in lambda {
        r /= factorial(a);
    }
    let mut mult: BTreeMap<usize, usize> = BTreeMap::new();
    for &a in lambda {
        *mult.entry(a).or_insert(0) += 1;
    }
    for (_, m) in mult {
        r /= factorial(m);
    }
    r
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::ZERO;
    }
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// Partitions of `n` as descending part lists.
pub fn partitions_of(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    fn rec(left: usize, max: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(acc.clone());
            return;
        }
        for part in (1..=left.min(max)).rev() {
            acc.push(part);
            rec(left - part, part, acc, out);
            acc.pop();
        }
    }
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flat_counts_small() {
        assert_eq!(flats_b(1).unwrap().len(), 2);
        assert_eq!(flats_b(2).unwrap().len(), 6);
        assert_eq!(flats_b(3).unwrap().len(), 24);
        // dim-1 flats of B_3: (3^3 - 1)/2 = 13
        let dim1 = flats_b(3).unwrap().into_iter().filter(|f| f.dim() == 1).count();
        assert_eq!(dim1, 13);
        assert!(matches!(flats_b(9), Err(ArrangementError::BoundExceeded(9, 8))));
    }

    #[test]
    fn b2_flats_by_rank() {
        let flats = flats_b(2).unwrap();
        let by_dim =
            |d: usize| flats.iter().filter(|f| f.dim() == d).count();
        assert_eq!((by_dim(2), by_dim(1), by_dim(0)), (1, 4, 1));
    }

    #[test]
    fn contraction_and_localization_types() {
        let bottom = FlatDescriptor::bottom(3);
        assert_eq!(bottom.contraction_type(), ArrIsoType::pure_b(3));
        assert_eq!(bottom.localization_type(), ArrIsoType::empty());
        let top = FlatDescriptor::top(3);
        assert_eq!(top.contraction_type(), ArrIsoType::pure_b(0));
        assert_eq!(top.localization_type(), ArrIsoType::pure_b(3));
        let f = FlatDescriptor::new(
            3,
            vec![3],
            vec![SignedBlock::new(vec![(1, 1), (2, 1)])],
        );
        assert_eq!(f.contraction_type(), ArrIsoType::pure_b(1));
        assert_eq!(f.localization_type(), ArrIsoType::new(1, vec![2]));
        // rank additivity over every flat
        for n in 1..=4 {
            for f in flats_b(n).unwrap() {
                assert_eq!(
                    f.contraction_type().rank() + f.localization_type().rank(),
                    n
                );
            }
        }
    }

    #[test]
    fn char_poly_closed_forms_match_moebius_oracle() {
        for n in 1..=4usize {
            let oracle = mobius_oracle(n, CoxeterKind::B).unwrap().characteristic_polynomial();
            assert_eq!(oracle, char_poly(&ArrIsoType::pure_b(n)), "B_{n}");
        }
        for a in 2..=5usize {
            let oracle = mobius_oracle(a, CoxeterKind::A).unwrap().characteristic_polynomial();
            assert_eq!(oracle, char_poly(&ArrIsoType::pure_a(a)), "A size {a}");
        }
    }

    #[test]
    fn char_poly_examples() {
        assert_eq!(char_poly(&ArrIsoType::pure_b(2)), Polynomial::from_int_coeffs(&[3, -4, 1]));
        assert_eq!(char_poly(&ArrIsoType::pure_a(3)), Polynomial::from_int_coeffs(&[2, -3, 1]));
        assert_eq!(char_poly(&ArrIsoType::empty()), Polynomial::one());
        assert_eq!(char_poly(&ArrIsoType::pure_b(1)), Polynomial::from_int_coeffs(&[-1, 1]));
    }

    #[test]
    fn char_poly_multiplicative() {
        let t1 = ArrIsoType::new(2, vec![3]);
        let t2 = ArrIsoType::new(1, vec![2, 2]);
        assert_eq!(
            char_poly(&t1.product(&t2)),
            char_poly(&t1).mul(&char_poly(&t2))
        );
    }

    #[test]
    fn moebius_sums_reproduce_char_poly() {
        for n in 1..=5usize {
            let slice = mobius_oracle(n, CoxeterKind::B).unwrap();
            assert_eq!(
                slice.characteristic_polynomial(),
                char_poly(&ArrIsoType::pure_b(n)),
                "B_{n} Whitney sums"
            );
        }
    }

    #[test]
    fn os_hilbert_values() {
        assert_eq!(os_hilbert(&ArrIsoType::pure_b(2)), Polynomial::from_int_coeffs(&[1, 4, 3]));
        assert_eq!(os_hilbert(&ArrIsoType::empty()), Polynomial::one());
        for n in 1..=6usize {
            let h = os_hilbert(&ArrIsoType::pure_b(n));
            assert_eq!(h.coeff(1), q((n * n) as i64), "degree-1 coefficient of B_{n}");
            assert_eq!(h.degree(), Some(n));
            assert!(h.coeffs().iter().all(|c| c > &q(0)), "positivity for B_{n}");
        }
    }

    #[test]
    fn census_totals_and_cross_check() {
        // closed-form census vs brute-force flats, grouped by type pair
        for n in 1..=5usize {
            let census = flat_type_census(n, CoxeterKind::B);
            let total: BigInt = census.iter().map(|e| e.count.clone()).sum();
            let flats = flats_b(n).unwrap();
            assert_eq!(total, BigInt::from(flats.len()), "total at n={n}");
            let mut grouped: BTreeMap<(ArrIsoType, ArrIsoType), BigInt> = BTreeMap::new();
            for f in &flats {
                *grouped
                    .entry((f.localization_type(), f.contraction_type()))
                    .or_insert(BigInt::ZERO) += 1;
            }
            for e in &census {
                assert_eq!(
                    grouped.get(&(e.localization.clone(), e.contraction.clone())),
                    Some(&e.count),
                    "census entry {e:?} at n={n}"
                );
            }
            assert_eq!(grouped.len(), census.len());
        }
    }

    #[test]
    fn census_b2_shape() {
        let census = flat_type_census(2, CoxeterKind::B);
        let total: BigInt = census.iter().map(|e| e.count.clone()).sum();
        assert_eq!(total, BigInt::from(6));
        let rank1: BigInt = census
            .iter()
            .filter(|e| e.contraction == ArrIsoType::pure_b(1))
            .map(|e| e.count.clone())
            .sum();
        assert_eq!(rank1, BigInt::from(4));
    }

    #[test]
    fn census_b3_dim1_total() {
        let census = flat_type_census(3, CoxeterKind::B);
        let dim1: BigInt = census
            .iter()
            .filter(|e| e.contraction == ArrIsoType::pure_b(1))
            .map(|e| e.count.clone())
            .sum();
        assert_eq!(dim1, BigInt::from(13));
    }

    #[test]
    fn canonical_strings() {
        let t = ArrIsoType::new(3, vec![2, 2]);
        assert_eq!(t.canonical_string(), "B3*A2*A2");
        assert_eq!(ArrIsoType::parse("B3*A2*A2"), Some(t));
        assert_eq!(ArrIsoType::new(0, vec![1, 1]).canonical_string(), "B0");
    }

    #[test]
    fn flat_order_sanity() {
        let flats = flats_b(2).unwrap();
        let bottom = FlatDescriptor::bottom(2);
        let top = FlatDescriptor::top(2);
        for f in &flats {
            assert!(bottom.leq(f));
            assert!(f.leq(&top));
        }
        // hyperplane x1 = x2 is not below x1 = -x2
        let same = FlatDescriptor::new(2, vec![], vec![SignedBlock::new(vec![(1, 1), (2, 1)])]);
        let anti = FlatDescriptor::new(2, vec![], vec![SignedBlock::new(vec![(1, 1), (2, -1)])]);
        assert!(!same.leq(&anti) && !anti.leq(&same));
        assert!(same.leq(&top) && anti.leq(&top));
    }

    #[test]
    fn flat_json_export() {
        let f = FlatDescriptor::new(3, vec![2], vec![SignedBlock::new(vec![(1, 1), (3, -1)])]);
        let js = f.to_json();
        assert_eq!(js["zero_block"], serde_json::json!([2]));
        assert_eq!(js["signed_blocks"][0]["signs"], serde_json::json!([1, -1]));
    }
}
