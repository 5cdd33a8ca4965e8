//! Finite sets with involutions and equivariant surjections.
//!
//! The canonical object with `n` free orbits is `[-n, n] = {-n, ..., n}` with
//! the negation involution; `0` is the unique fixed point.  A morphism
//! `[-n, n] -> [-d, d]` is stored by the images of `1..=n` only, so
//! equivariance (`phi(-i) = -phi(i)`, `phi(0) = 0`) holds by construction and
//! is never checked at runtime.  Surjectivity is checked once, when a
//! morphism is built.

use num::{BigInt, One};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CategoryError {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("image {value} out of range for target with {target_d} free orbits")]
    ImageOutOfRange { value: i64, target_d: usize },
    #[error("map is not surjective: target orbit {0} is not hit")]
    NotSurjective(usize),
    #[error("invalid signed permutation: {0}")]
    InvalidSignedPerm(String),
}

/// Object of the signed category: the interval `[-n, n]` with negation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BObject {
    pub free_orbits: usize,
}

impl BObject {
    pub fn new(free_orbits: usize) -> Self {
        BObject { free_orbits }
    }

    /// Number of elements, `2n + 1`.
    pub fn cardinality(&self) -> usize {
        2 * self.free_orbits + 1
    }
}

/// Object of the plain category: the set `[n] = {1, ..., n}`, `n >= 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AObject {
    pub size: usize,
}

impl AObject {
    pub fn new(size: usize) -> Self {
        assert!(size >= 1, "objects are nonempty");
        AObject { size }
    }
}

/// Equivariant surjection `[-n, n] -> [-d, d]`, stored by the images of the
/// positive elements.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BMorphism {
    pub source_n: usize,
    pub target_d: usize,
    pub images: Vec<i64>,
}

impl std::fmt::Debug for BMorphism {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{}->{}: {:?}]", self.source_n, self.target_d, self.images)
    }
}

impl BMorphism {
    pub fn new(source_n: usize, target_d: usize, images: Vec<i64>) -> Result<Self, CategoryError> {
        if images.len() != source_n {
            return Err(CategoryError::ShapeMismatch(format!(
                "expected {source_n} images, got {}",
                images.len()
            )));
        }
        for &v in &images {
            if v.unsigned_abs() as usize > target_d {
                return Err(CategoryError::ImageOutOfRange { value: v, target_d });
            }
        }
        let m = BMorphism { source_n, target_d, images };
        match m.missing_target_orbit() {
            Some(k) => Err(CategoryError::NotSurjective(k)),
            None => Ok(m),
        }
    }

    fn missing_target_orbit(&self) -> Option<usize> {
        (1..=self.target_d).find(|&k| !self.images.iter().any(|&v| v.unsigned_abs() as usize == k))
    }

    pub fn identity(n: usize) -> Self {
        BMorphism { source_n: n, target_d: n, images: (1..=n as i64).collect() }
    }

    /// Image of any element of `[-n, n]`.
    pub fn apply(&self, x: i64) -> i64 {
        match x {
            0 => 0,
            x if x > 0 => self.images[(x - 1) as usize],
            x => -self.images[(-x - 1) as usize],
        }
    }

    pub fn source(&self) -> BObject {
        BObject::new(self.source_n)
    }

    pub fn target(&self) -> BObject {
        BObject::new(self.target_d)
    }

    /// `self . inner`, defined when `inner` lands in the source of `self`.
    pub fn compose_after(&self, inner: &BMorphism) -> Result<BMorphism, CategoryError> {
        if inner.target_d != self.source_n {
            return Err(CategoryError::ShapeMismatch(format!(
                "cannot compose [{}->{}] after [{}->{}]",
                self.source_n, self.target_d, inner.source_n, inner.target_d
            )));
        }
        let images = inner.images.iter().map(|&v| self.apply(v)).collect();
        // surjectivity of a composite of surjections is automatic
        Ok(BMorphism { source_n: inner.source_n, target_d: self.target_d, images })
    }

    /// Size of the fiber over `+k` (for `k = 0` this counts the whole zero
    /// fiber minus the fixed point, i.e. the free orbits over `0`).
    pub fn fiber_abs_count(&self, k: usize) -> usize {
        self.images.iter().filter(|v| v.unsigned_abs() as usize == k).count()
    }

    /// Canonical representative of the orbit under post-composition by the
    /// target's automorphism group: relabel target orbits in order of first
    /// occurrence, making each first occurrence positive.
    pub fn orbit_canonical(&self) -> BMorphism {
        let mut relabel: Vec<Option<(usize, i64)>> = vec![None; self.target_d + 1];
        let mut next = 1usize;
        let mut images = Vec::with_capacity(self.source_n);
        for &v in &self.images {
            if v == 0 {
                images.push(0);
                continue;
            }
            let k = v.unsigned_abs() as usize;
            let (label, sign) = *relabel[k].get_or_insert_with(|| {
                let assigned = (next, v.signum());
                next += 1;
                assigned
            });
            images.push(label as i64 * sign * v.signum());
        }
        BMorphism { source_n: self.source_n, target_d: self.target_d, images }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).unwrap()
    }
}

/// All equivariant surjections `[-n, n] -> [-d, d]`, in lexicographic order
/// of the `images` vector.
pub fn enumerate_hom(n: usize, d: usize) -> Vec<BMorphism> {
    let mut out = Vec::new();
    let letters: Vec<i64> = (-(d as i64)..=d as i64).collect();
    let mut images = vec![0i64; n];
    fn rec(
        pos: usize,
        n: usize,
        d: usize,
        letters: &[i64],
        images: &mut Vec<i64>,
        out: &mut Vec<BMorphism>,
    ) {
        if pos == n {
            let m = BMorphism { source_n: n, target_d: d, images: images.clone() };
            if m.missing_target_orbit().is_none() {
                out.push(m);
            }
            return;
        }
        for &l in letters {
            images[pos] = l;
            rec(pos + 1, n, d, letters, images, out);
        }
    }
    rec(0, n, d, &letters, &mut images, &mut out);
    out
}

/// Number of equivariant surjections `[-n, n] -> [-d, d]`, by
/// inclusion-exclusion over the missed target orbits:
/// `sum_j (-1)^j C(d, j) (2(d-j)+1)^n`.  The total number of equivariant
/// maps is `(2d+1)^n`.
pub fn hom_count(n: usize, d: usize) -> BigInt {
    let mut total = BigInt::ZERO;
    let mut binom = BigInt::one();
    for j in 0..=d {
        let base = BigInt::from(2 * (d - j) + 1);
        let term = &binom * base.pow(n as u32);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
        binom = binom * BigInt::from(d - j) / BigInt::from(j + 1);
    }
    total
}

/// Order of the hyperoctahedral group `W_n`, `2^n n!`.
pub fn hyperoctahedral_order(n: usize) -> BigInt {
    let mut r = BigInt::one();
    for k in 1..=n {
        r *= BigInt::from(2 * k);
    }
    r
}

/// One representative per orbit of `Hom([-n,n], [-d,d])` under
/// post-composition by automorphisms of the target, in lexicographic order.
pub fn orbit_classes(n: usize, d: usize) -> Vec<BMorphism> {
    let mut out: Vec<BMorphism> = enumerate_hom(n, d)
        .into_iter()
        .filter(|m| m.orbit_canonical() == *m)
        .collect();
    out.sort();
    out
}

/// Orbit count `hom_count / |W_d|` (the automorphism action on surjections
/// is free; for `d > n` the hom set is empty and the count is zero).
pub fn orbit_count(n: usize, d: usize) -> BigInt {
    let h = hom_count(n, d);
    let w = hyperoctahedral_order(d);
    debug_assert!((&h % &w) == BigInt::ZERO);
    h / w
}

/// Order of the stabilizer of a surjection under precomposition:
/// `2^z z! * prod_k b_k!` with `z` free orbits over `0` and `b_k` the size of
/// the fiber over `k`.
pub fn stabilizer_order(m: &BMorphism) -> BigInt {
    let z = m.fiber_abs_count(0);
    let mut r = hyperoctahedral_order(z);
    for k in 1..=m.target_d {
        let b = m.fiber_abs_count(k);
        for i in 1..=b {
            r *= BigInt::from(i);
        }
    }
    r
}

/// Signed permutation of `[-n, n]`: images of `1..=n`, absolute values a
/// permutation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct SignedPerm {
    pub images: Vec<i64>,
}

impl SignedPerm {
    pub fn new(images: Vec<i64>) -> Result<Self, CategoryError> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            let a = v.unsigned_abs() as usize;
            if a == 0 || a > n || seen[a] {
                return Err(CategoryError::InvalidSignedPerm(format!("{images:?}")));
            }
            seen[a] = true;
        }
        Ok(SignedPerm { images })
    }

    pub fn identity(n: usize) -> Self {
        SignedPerm { images: (1..=n as i64).collect() }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, x: i64) -> i64 {
        match x {
            0 => 0,
            x if x > 0 => self.images[(x - 1) as usize],
            x => -self.images[(-x - 1) as usize],
        }
    }

    /// `self . other` as functions.
    pub fn compose_after(&self, other: &SignedPerm) -> SignedPerm {
        assert_eq!(self.n(), other.n());
        SignedPerm { images: (1..=self.n() as i64).map(|i| self.apply(other.apply(i))).collect() }
    }

    pub fn inverse(&self) -> SignedPerm {
        let mut images = vec![0i64; self.n()];
        for (i, &v) in self.images.iter().enumerate() {
            let a = v.unsigned_abs() as usize;
            images[a - 1] = if v > 0 { i as i64 + 1 } else { -(i as i64 + 1) };
        }
        SignedPerm { images }
    }

    /// All elements of `W_n`; use only for small `n`.
    pub fn all(n: usize) -> Vec<SignedPerm> {
        use itertools::Itertools;
        let mut out = Vec::new();
        for perm in (1..=n as i64).permutations(n) {
            for mask in 0..(1u32 << n) {
                let images = perm
                    .iter()
                    .enumerate()
                    .map(|(i, &v)| if mask >> i & 1 == 1 { -v } else { v })
                    .collect();
                out.push(SignedPerm { images });
            }
        }
        out
    }

    /// Signed cycle type: partitions formed by the lengths of positive and
    /// negative cycles.  A cycle is negative when the signs flip an odd
    /// number of times around it.
    pub fn signed_cycle_type(&self) -> (Vec<usize>, Vec<usize>) {
        let n = self.n();
        let mut seen = vec![false; n + 1];
        let (mut pos, mut neg) = (Vec::new(), Vec::new());
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut sign = 1i64;
            let mut cur = start as i64;
            loop {
                seen[cur.unsigned_abs() as usize] = true;
                let next = self.apply(cur);
                sign *= next.signum();
                len += 1;
                cur = next.abs();
                if cur == start as i64 {
                    break;
                }
            }
            if sign > 0 {
                pos.push(len);
            } else {
                neg.push(len);
            }
        }
        pos.sort_unstable_by(|a, b| b.cmp(a));
        neg.sort_unstable_by(|a, b| b.cmp(a));
        (pos, neg)
    }
}

/// Precomposition action: `phi . w`.
pub fn act(w: &SignedPerm, phi: &BMorphism) -> Result<BMorphism, CategoryError> {
    if w.n() != phi.source_n {
        return Err(CategoryError::ShapeMismatch(format!(
            "permutation of [{}] cannot act on a morphism with source {}",
            w.n(),
            phi.source_n
        )));
    }
    let images = (1..=phi.source_n as i64).map(|i| phi.apply(w.apply(i))).collect();
    Ok(BMorphism { source_n: phi.source_n, target_d: phi.target_d, images })
}

/// Surjection `[n] -> [m]` in the plain category.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct ASurjection {
    pub source_n: usize,
    pub target_m: usize,
    pub images: Vec<usize>,
}

impl ASurjection {
    pub fn new(source_n: usize, target_m: usize, images: Vec<usize>) -> Result<Self, CategoryError> {
        if images.len() != source_n {
            return Err(CategoryError::ShapeMismatch(format!(
                "expected {source_n} images, got {}",
                images.len()
            )));
        }
        for &v in &images {
            if v == 0 || v > target_m {
                return Err(CategoryError::ImageOutOfRange { value: v as i64, target_d: target_m });
            }
        }
        if let Some(k) = (1..=target_m).find(|k| !images.contains(k)) {
            return Err(CategoryError::NotSurjective(k));
        }
        Ok(ASurjection { source_n, target_m, images })
    }

    pub fn identity(n: usize) -> Self {
        ASurjection { source_n: n, target_m: n, images: (1..=n).collect() }
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x - 1]
    }

    pub fn compose_after(&self, inner: &ASurjection) -> Result<ASurjection, CategoryError> {
        if inner.target_m != self.source_n {
            return Err(CategoryError::ShapeMismatch("composition shape".into()));
        }
        let images = inner.images.iter().map(|&v| self.apply(v)).collect();
        Ok(ASurjection { source_n: inner.source_n, target_m: self.target_m, images })
    }
}

/// All surjections `[n] -> [m]`, lexicographic.
pub fn enumerate_a_surjections(n: usize, m: usize) -> Vec<ASurjection> {
    let mut out = Vec::new();
    let mut images = vec![0usize; n];
    fn rec(pos: usize, n: usize, m: usize, images: &mut Vec<usize>, out: &mut Vec<ASurjection>) {
        if pos == n {
            if (1..=m).all(|k| images.contains(&k)) {
                out.push(ASurjection { source_n: n, target_m: m, images: images.clone() });
            }
            return;
        }
        for v in 1..=m {
            images[pos] = v;
            rec(pos + 1, n, m, images, out);
        }
    }
    rec(0, n, m, &mut images, &mut out);
    out
}
