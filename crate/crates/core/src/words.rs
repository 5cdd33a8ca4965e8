//! Ordered surjections, the first-occurrence word order, and ideal automata.
//!
//! With the canonical total order `-n < ... < -1 < 0 < 1 < ... < n` on
//! `[-n, n]`, a surjection is *ordered* when for every positive target
//! element the smallest-magnitude preimage is positive (condition (i)) and
//! these smallest magnitudes are increasing in the target (condition (ii)).
//! Reading off the images of `1..=n` embeds ordered surjections into words
//! over the target alphabet; the relevant partial order on words is
//! "subword containing the first occurrence of every orbit".

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::category::{BMorphism, SignedPerm};
use crate::series::{Polynomial, RationalFunction, SeriesError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WordError {
    #[error("alphabet mismatch: [{0}] vs [{1}]")]
    AlphabetMismatch(usize, usize),
    #[error("letter {0} out of range for alphabet [-{1},{1}]")]
    LetterOutOfRange(i64, usize),
    #[error("composite of ordered morphisms violates the order conditions: {0}")]
    CompositionInvariantViolated(String),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// Word over the signed alphabet `[-n, n]` (zero is a letter).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Word {
    pub alphabet_n: usize,
    pub letters: Vec<i64>,
}

impl std::fmt::Debug for Word {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "w{:?}", self.letters)
    }
}

impl Word {
    pub fn new(alphabet_n: usize, letters: Vec<i64>) -> Result<Self, WordError> {
        for &l in &letters {
            if l.unsigned_abs() as usize > alphabet_n {
                return Err(WordError::LetterOutOfRange(l, alphabet_n));
            }
        }
        Ok(Word { alphabet_n, letters })
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(&self.letters).unwrap()
    }
}

/// Ordered-surjection wrapper: a morphism with its two order-condition flags.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OsbMorphism {
    pub inner: BMorphism,
    /// (i): every positive target element's first preimage orbit is hit
    /// positively.
    pub first_occurrence_positive: bool,
    /// (ii): first occurrences appear in increasing target order.
    pub first_occurrences_increasing: bool,
}

impl OsbMorphism {
    pub fn analyze(inner: BMorphism) -> Self {
        let (i, ii) = order_conditions(&inner);
        OsbMorphism { inner, first_occurrence_positive: i, first_occurrences_increasing: ii }
    }

    pub fn is_valid(&self) -> bool {
        self.first_occurrence_positive && self.first_occurrences_increasing
    }
}

/// First index (1-based) at which the target orbit `{±k}` is hit, if any.
fn first_occurrence(phi: &BMorphism, k: usize) -> Option<usize> {
    phi.images.iter().position(|v| v.unsigned_abs() as usize == k).map(|p| p + 1)
}

fn order_conditions(phi: &BMorphism) -> (bool, bool) {
    let mut cond_i = true;
    let mut firsts = Vec::with_capacity(phi.target_d);
    for k in 1..=phi.target_d {
        let p = first_occurrence(phi, k).expect("surjectivity guarantees a preimage");
        if phi.images[p - 1] < 0 {
            cond_i = false;
        }
        firsts.push(p);
    }
    let cond_ii = firsts.windows(2).all(|w| w[0] < w[1]);
    (cond_i, cond_ii)
}

/// Conditions (i) and (ii) under the canonical orders.
pub fn is_osb_morphism(phi: &BMorphism) -> bool {
    let (i, ii) = order_conditions(phi);
    i && ii
}

/// Composition inside the ordered category.  The order conditions are stable
/// under composition; a violation would be an internal error.
pub fn osb_compose(psi: &OsbMorphism, phi: &OsbMorphism) -> Result<OsbMorphism, WordError> {
    assert!(psi.is_valid() && phi.is_valid(), "osb_compose requires valid ordered morphisms");
    let composite = psi
        .inner
        .compose_after(&phi.inner)
        .map_err(|e| WordError::CompositionInvariantViolated(e.to_string()))?;
    let out = OsbMorphism::analyze(composite);
    if !out.is_valid() {
        return Err(WordError::CompositionInvariantViolated(format!("{:?}", out.inner)));
    }
    Ok(out)
}

/// Word order: `w1 <= w2` when `w1` embeds as a subword of `w2` whose image
/// contains, for every position of `w2`, an earlier-or-equal selected
/// position carrying the same orbit.  Equivalently the embedding hits the
/// first occurrence of every orbit appearing in `w2`.
///
/// The empty word is treated as a minimum: the principal ideal it generates
/// is the full language (every orbit's first occurrence is selected
/// vacuously).
pub fn word_leq(w1: &Word, w2: &Word) -> Result<bool, WordError> {
    if w1.alphabet_n != w2.alphabet_n {
        return Err(WordError::AlphabetMismatch(w1.alphabet_n, w2.alphabet_n));
    }
    if w1.is_empty() {
        return Ok(true);
    }
    let (a, b) = (&w1.letters, &w2.letters);
    let (m, n) = (a.len(), b.len());
    if m > n {
        return Ok(false);
    }
    // required positions: first occurrence of each orbit |letter| in w2
    let mut seen = BTreeSet::new();
    let mut required = vec![false; n];
    for (j, &l) in b.iter().enumerate() {
        if seen.insert(l.unsigned_abs()) {
            required[j] = true;
        }
    }
    // ok[i][j]: a[i..] embeds into b[j..] hitting all required positions >= j
    let mut ok = vec![vec![false; n + 1]; m + 1];
    ok[m][n] = true;
    for i in (0..=m).rev() {
        for j in (0..n).rev() {
            let skip = !required[j] && ok[i][j + 1];
            let take = i < m && a[i] == b[j] && ok[i + 1][j + 1];
            ok[i][j] = skip || take;
        }
    }
    Ok(ok[0][0])
}

/// Reads off the images of the positive source elements as a word over the
/// target alphabet.
pub fn iota(phi: &BMorphism) -> Word {
    Word { alphabet_n: phi.target_d, letters: phi.images.clone() }
}

/// Deterministic automaton recognizing a principal ideal of the word order.
///
/// States `0..=k` track the matched prefix of the generating word; a dead
/// state absorbs everything else, so the transition function is total.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealAutomaton {
    pub alphabet_n: usize,
    pub num_states: usize,
    pub start: usize,
    pub dead: Option<usize>,
    pub accepting: BTreeSet<usize>,
    /// `transitions[s]` maps each letter (indexed `letter + n`) to a state.
    pub transitions: Vec<Vec<usize>>,
}

impl IdealAutomaton {
    fn letter_index(&self, l: i64) -> usize {
        (l + self.alphabet_n as i64) as usize
    }

    /// Automaton for `{v : v >= w}`.  The greedy left-to-right parse of the
    /// chain language `e1 P1* e2 P2* ... ek Pk*` is optimal, so the chain
    /// with one dead state is already deterministic and minimal enough.
    pub fn principal_ideal(w: &Word) -> IdealAutomaton {
        let n = w.alphabet_n;
        let k = w.len();
        let sigma = 2 * n + 1;
        if k == 0 {
            // convention: the full language
            return IdealAutomaton {
                alphabet_n: n,
                num_states: 1,
                start: 0,
                dead: None,
                accepting: BTreeSet::from([0]),
                transitions: vec![vec![0; sigma]],
            };
        }
        let dead = k + 1;
        let mut transitions = vec![vec![dead; sigma]; k + 2];
        // allowed[s] = absolute letters usable as self-loops in state s
        let mut allowed: BTreeSet<u64> = BTreeSet::new();
        for s in 0..=k {
            for l in -(n as i64)..=n as i64 {
                let idx = (l + n as i64) as usize;
                if s < k && l == w.letters[s] {
                    transitions[s][idx] = s + 1;
                } else if allowed.contains(&l.unsigned_abs()) {
                    transitions[s][idx] = s;
                }
            }
            if s < k {
                allowed.insert(w.letters[s].unsigned_abs());
            }
        }
        IdealAutomaton {
            alphabet_n: n,
            num_states: k + 2,
            start: 0,
            dead: Some(dead),
            accepting: BTreeSet::from([k]),
            transitions,
        }
    }

    /// Automaton accepting nothing.
    pub fn empty_language(alphabet_n: usize) -> IdealAutomaton {
        let sigma = 2 * alphabet_n + 1;
        IdealAutomaton {
            alphabet_n,
            num_states: 1,
            start: 0,
            dead: Some(0),
            accepting: BTreeSet::new(),
            transitions: vec![vec![0; sigma]],
        }
    }

    pub fn accepts(&self, w: &Word) -> bool {
        let mut s = self.start;
        for &l in &w.letters {
            s = self.transitions[s][self.letter_index(l)];
        }
        self.accepting.contains(&s)
    }

    /// Number of accepted words of each length `0..=max_len`, by iterating
    /// the transition count matrix.
    pub fn count_by_length(&self, max_len: usize) -> Vec<num::BigInt> {
        use num::BigInt;
        let mut state_counts = vec![BigInt::ZERO; self.num_states];
        state_counts[self.start] = BigInt::from(1);
        let mut out = Vec::with_capacity(max_len + 1);
        for _ in 0..=max_len {
            let total = self
                .accepting
                .iter()
                .fold(BigInt::ZERO, |acc, &s| acc + &state_counts[s]);
            out.push(total);
            let mut next = vec![BigInt::ZERO; self.num_states];
            for (s, row) in self.transitions.iter().enumerate() {
                if state_counts[s] == BigInt::ZERO {
                    continue;
                }
                for &t in row {
                    next[t] += &state_counts[s];
                }
            }
            state_counts = next;
        }
        out
    }

    /// Plain-text transition table.
    pub fn transition_table(&self) -> String {
        use std::fmt::Write;
        let mut out = String::new();
        let letters: Vec<i64> = (-(self.alphabet_n as i64)..=self.alphabet_n as i64).collect();
        writeln!(out, "states: {}  start: {}  accepting: {:?}", self.num_states, self.start, self.accepting).unwrap();
        for (s, row) in self.transitions.iter().enumerate() {
            let marks = format!(
                "{}{}",
                if self.accepting.contains(&s) { "*" } else { " " },
                if Some(s) == self.dead { "x" } else { " " }
            );
            let cells: Vec<String> =
                letters.iter().zip(row).map(|(l, t)| format!("{l}:{t}")).collect();
            writeln!(out, "{marks}{s:>3} | {}", cells.join(" ")).unwrap();
        }
        out
    }

    /// GraphViz DOT form for inspection.
    pub fn to_dot(&self) -> String {
        use std::fmt::Write;
        let mut out = String::from("digraph ideal {\n  rankdir=LR;\n");
        for s in 0..self.num_states {
            let shape = if self.accepting.contains(&s) { "doublecircle" } else { "circle" };
            writeln!(out, "  s{s} [shape={shape}];").unwrap();
        }
        // group parallel edges by target
        for (s, row) in self.transitions.iter().enumerate() {
            let mut by_target: BTreeMap<usize, Vec<i64>> = BTreeMap::new();
            for (idx, &t) in row.iter().enumerate() {
                by_target.entry(t).or_default().push(idx as i64 - self.alphabet_n as i64);
            }
            for (t, ls) in by_target {
                let label: Vec<String> = ls.iter().map(|l| l.to_string()).collect();
                writeln!(out, "  s{s} -> s{t} [label=\"{}\"];", label.join(",")).unwrap();
            }
        }
        out.push_str("}\n");
        out
    }

    /// Exact generating function `sum_len (#accepted words of length len) t^len`.
    pub fn counting_series(&self) -> Result<RationalFunction, WordError> {
        // solve (I - tM) g = accept-indicator over Q(t) by elimination, where
        // M[s][u] = number of letters moving s to u
        let n = self.num_states;
        let mut m = vec![vec![0i64; n]; n];
        for (s, row) in self.transitions.iter().enumerate() {
            for &t in row {
                m[s][t] += 1;
            }
        }
        // build augmented rational-polynomial matrix [I - tM | acc]
        let mut a: Vec<Vec<Polynomial>> = (0..n)
            .map(|i| {
                (0..=n)
                    .map(|j| {
                        if j == n {
                            if self.accepting.contains(&i) {
                                Polynomial::one()
                            } else {
                                Polynomial::zero()
                            }
                        } else {
                            let diag = if i == j { Polynomial::one() } else { Polynomial::zero() };
                            diag.sub(&Polynomial::from_int_coeffs(&[0, m[i][j]]))
                        }
                    })
                    .collect()
            })
            .collect();
        // fraction-free Gaussian elimination, tracking numerator/denominator
        // polynomials implicitly by cross-multiplication
        let mut row_of_col = vec![usize::MAX; n];
        let mut used = vec![false; n];
        for col in 0..n {
            let piv = (0..n).find(|&r| !used[r] && !a[r][col].is_zero());
            let piv = match piv {
                Some(p) => p,
                None => continue,
            };
            used[piv] = true;
            row_of_col[col] = piv;
            let pv = a[piv][col].clone();
            for r in 0..n {
                if r != piv && !a[r][col].is_zero() {
                    let f = a[r][col].clone();
                    for c in 0..=n {
                        let t = a[r][c].mul(&pv).sub(&a[piv][c].mul(&f));
                        a[r][c] = t;
                    }
                }
            }
        }
        // back out g_start = rhs / pivot as an exact rational function
        let r = row_of_col[self.start];
        if r == usize::MAX {
            return Ok(RationalFunction::zero());
        }
        let num = a[r][n].clone();
        let den = a[r][self.start].clone();
        if num.is_zero() {
            return Ok(RationalFunction::zero());
        }
        Ok(RationalFunction::from_num_den(num, den)?)
    }
}

/// Counting series of the principal ideal generated by `w`.
pub fn ideal_series(aut: &IdealAutomaton) -> Result<RationalFunction, WordError> {
    aut.counting_series()
}

/// Minimal elements of the upward closure of `S`, restricted to words of
/// length at most `length_bound`.
pub fn minimal_elements(s: &[Word], length_bound: usize) -> Result<Vec<Word>, WordError> {
    let mut candidates: Vec<Word> =
        s.iter().filter(|w| w.len() <= length_bound).cloned().collect();
    candidates.sort();
    candidates.dedup();
    let mut out = Vec::new();
    'outer: for w in &candidates {
        for v in &candidates {
            // v < w strictly, by antisymmetry, since the list is deduplicated
            if v != w && word_leq(v, w)? {
                continue 'outer;
            }
        }
        out.push(w.clone());
    }
    Ok(out)
}

/// Relabels the source so the surjection becomes ordered: sort the positive
/// source elements by image magnitude (stably) and flip the signs of orbits
/// with negative images.  The resulting image word is the sorted magnitude
/// sequence, the lexicographically smallest weakly order preserving choice.
pub fn lift_order(phi: &BMorphism) -> (SignedPerm, OsbMorphism) {
    let n = phi.source_n;
    let mut order: Vec<usize> = (1..=n).collect();
    order.sort_by_key(|&i| phi.images[i - 1].unsigned_abs());
    let images = order
        .iter()
        .map(|&i| if phi.images[i - 1] < 0 { -(i as i64) } else { i as i64 })
        .collect();
    let w = SignedPerm::new(images).expect("relabeling is a signed permutation");
    let lifted = crate::category::act(&w, phi).expect("sizes match");
    let out = OsbMorphism::analyze(lifted);
    debug_assert!(out.is_valid());
    (w, out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::enumerate_hom;
    use rand::{Rng, SeedableRng};

    fn word(n: usize, letters: &[i64]) -> Word {
        Word::new(n, letters.to_vec()).unwrap()
    }

    #[test]
    fn order_conditions_examples() {
        let good = BMorphism::new(2, 1, vec![1, 1]).unwrap();
        assert!(is_osb_morphism(&good));
        let bad = BMorphism::new(2, 1, vec![-1, 1]).unwrap();
        assert!(!is_osb_morphism(&bad));
        for n in 0..=4 {
            assert!(is_osb_morphism(&BMorphism::identity(n)));
        }
    }

    #[test]
    fn composition_stays_ordered_exhaustively() {
        for a in 0..=3usize {
            for b in 0..=a {
                for c in 0..=b {
                    let outer: Vec<_> = enumerate_hom(b, c)
                        .into_iter()
                        .map(OsbMorphism::analyze)
                        .filter(OsbMorphism::is_valid)
                        .collect();
                    let inner: Vec<_> = enumerate_hom(a, b)
                        .into_iter()
                        .map(OsbMorphism::analyze)
                        .filter(OsbMorphism::is_valid)
                        .collect();
                    for psi in &outer {
                        for phi in &inner {
                            let comp = osb_compose(psi, phi).unwrap();
                            assert!(comp.is_valid());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn composition_hand_example() {
        let phi = OsbMorphism::analyze(BMorphism::new(3, 2, vec![1, 1, 2]).unwrap());
        let psi = OsbMorphism::analyze(BMorphism::new(2, 1, vec![1, 1]).unwrap());
        assert!(phi.is_valid() && psi.is_valid());
        let comp = osb_compose(&psi, &phi).unwrap();
        assert_eq!(comp.inner.images, vec![1, 1, 1]);
    }

    #[test]
    fn word_order_examples() {
        let w11 = word(1, &[1, 1]);
        let w1 = word(1, &[1]);
        assert!(word_leq(&w1, &w11).unwrap());
        assert!(!word_leq(&w11, &w1).unwrap());
        // "1" is not below "2 1": position 1 carries orbit 2, never selected
        let w21 = word(2, &[2, 1]);
        assert!(!word_leq(&word(2, &[1]), &w21).unwrap());
        assert!(word_leq(&word(2, &[2]), &w21).unwrap());
        // reflexivity
        for w in [&w11, &w1, &w21] {
            assert!(word_leq(w, w).unwrap());
        }
        assert!(word_leq(&word(1, &[1]), &word(2, &[1])).is_err());
    }

    fn random_word(rng: &mut impl Rng, n: usize, max_len: usize) -> Word {
        let len = rng.gen_range(0..=max_len);
        let letters =
            (0..len).map(|_| rng.gen_range(-(n as i64)..=n as i64)).collect();
        Word { alphabet_n: n, letters }
    }

    #[test]
    fn word_order_is_partial_order_randomized() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..4000 {
            let a = random_word(&mut rng, 2, 8);
            let b = random_word(&mut rng, 2, 8);
            let c = random_word(&mut rng, 2, 8);
            assert!(word_leq(&a, &a).unwrap());
            if word_leq(&a, &b).unwrap() && word_leq(&b, &a).unwrap() {
                assert_eq!(a, b, "antisymmetry");
            }
            if word_leq(&a, &b).unwrap() && word_leq(&b, &c).unwrap() {
                assert!(word_leq(&a, &c).unwrap(), "transitivity: {a:?} {b:?} {c:?}");
            }
        }
    }

    #[test]
    fn iota_reads_images() {
        assert_eq!(iota(&BMorphism::identity(2)), word(2, &[1, 2]));
        assert_eq!(iota(&BMorphism::new(2, 1, vec![1, 1]).unwrap()), word(1, &[1, 1]));
    }

    /// Brute-force morphism order: phi <= phi' iff phi' = phi . psi for some
    /// ordered psi.
    fn morphism_leq(phi: &BMorphism, phi2: &BMorphism) -> bool {
        assert_eq!(phi.target_d, phi2.target_d);
        enumerate_hom(phi2.source_n, phi.source_n)
            .into_iter()
            .filter(is_osb_morphism)
            .any(|psi| phi.compose_after(&psi).unwrap() == *phi2)
    }

    #[test]
    fn iota_is_strictly_order_preserving() {
        for m in 0..=2usize {
            let mut morphisms = Vec::new();
            for n in 0..=4usize {
                morphisms.extend(
                    enumerate_hom(n, m).into_iter().filter(is_osb_morphism),
                );
            }
            for phi in &morphisms {
                for phi2 in &morphisms {
                    let lhs = morphism_leq(phi, phi2);
                    let rhs = word_leq(&iota(phi), &iota(phi2)).unwrap();
                    assert_eq!(lhs, rhs, "{phi:?} vs {phi2:?}");
                }
            }
        }
    }

    #[test]
    fn iota_image_is_principal_ideal() {
        // words of length n arising from ordered surjections [-n,n] -> [-m,m]
        // are exactly the length-n words above "1 2 ... m"
        for m in 0..=2usize {
            let gen = Word::new(m, (1..=m as i64).collect()).unwrap();
            let aut = IdealAutomaton::principal_ideal(&gen);
            for n in 0..=4usize {
                let image: BTreeSet<Word> = enumerate_hom(n, m)
                    .into_iter()
                    .filter(is_osb_morphism)
                    .map(|phi| iota(&phi))
                    .collect();
                let ideal_words: BTreeSet<Word> = all_words(m, n)
                    .into_iter()
                    .filter(|w| aut.accepts(w))
                    .collect();
                assert_eq!(image, ideal_words, "m={m} n={n}");
            }
        }
    }

    fn all_words(n: usize, len: usize) -> Vec<Word> {
        let mut out = vec![Word { alphabet_n: n, letters: Vec::new() }];
        for _ in 0..len {
            let mut next = Vec::new();
            for w in &out {
                for l in -(n as i64)..=n as i64 {
                    let mut letters = w.letters.clone();
                    letters.push(l);
                    next.push(Word { alphabet_n: n, letters });
                }
            }
            out = next;
        }
        out.retain(|w| w.len() == len);
        out
    }

    #[test]
    fn automaton_agrees_with_word_order() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..40 {
            let w = {
                let mut w = random_word(&mut rng, 2, 3);
                while w.is_empty() {
                    w = random_word(&mut rng, 2, 3);
                }
                w
            };
            let aut = IdealAutomaton::principal_ideal(&w);
            assert!(aut.accepts(&w), "reflexivity: {w:?}");
            assert!(aut.num_states <= w.len() + 2);
            for len in 0..=5 {
                for v in all_words(2, len) {
                    assert_eq!(
                        aut.accepts(&v),
                        word_leq(&w, &v).unwrap(),
                        "w={w:?} v={v:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn automaton_counts_match_brute_enumeration() {
        for (n, letters) in [(1usize, vec![1i64]), (2, vec![1, 2]), (1, vec![1, 1]), (2, vec![1, -2, 1])] {
            let w = word(n, &letters);
            let aut = IdealAutomaton::principal_ideal(&w);
            let counts = aut.count_by_length(6);
            for len in 0..=6 {
                let brute = all_words(n, len)
                    .into_iter()
                    .filter(|v| word_leq(&w, v).unwrap())
                    .count();
                assert_eq!(counts[len], num::BigInt::from(brute), "w={w:?} len={len}");
            }
        }
    }

    #[test]
    fn singleton_ideal_counts_are_powers_of_two() {
        // I_"1" over [-1,1]: nonempty words over {1,-1} starting with 1
        let aut = IdealAutomaton::principal_ideal(&word(1, &[1]));
        let counts = aut.count_by_length(6);
        assert_eq!(counts[0], num::BigInt::ZERO);
        for len in 1..=6usize {
            assert_eq!(counts[len], num::BigInt::from(2i64.pow(len as u32 - 1)));
        }
    }

    #[test]
    fn ideal_series_closed_forms() {
        use crate::series::Polynomial;
        // I_"1" over [-1,1]: t/(1-2t)
        let s1 = ideal_series(&IdealAutomaton::principal_ideal(&word(1, &[1]))).unwrap();
        assert_eq!(
            s1,
            RationalFunction::new(Polynomial::from_int_coeffs(&[0, 1]), &[(2, 1)])
        );
        // I_"1 2" over [-2,2]: t^2/((1-2t)(1-4t))
        let s12 = ideal_series(&IdealAutomaton::principal_ideal(&word(2, &[1, 2]))).unwrap();
        assert_eq!(
            s12,
            RationalFunction::new(Polynomial::from_int_coeffs(&[0, 0, 1]), &[(2, 1), (4, 1)])
        );
        // empty language
        let s0 = ideal_series(&IdealAutomaton::empty_language(2)).unwrap();
        assert!(s0.is_zero());
    }

    #[test]
    fn ideal_series_matches_automaton_counts() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..30 {
            let w = random_word(&mut rng, 2, 5);
            let aut = IdealAutomaton::principal_ideal(&w);
            let series = ideal_series(&aut).unwrap();
            let counts = aut.count_by_length(10);
            let coeffs = series.series_coefficients(10);
            for len in 0..=10 {
                assert_eq!(coeffs[len], crate::BigRational::from_integer(counts[len].clone()));
            }
            // pole containment for alphabet [-m, m]
            let bound = 2 * w.alphabet_n as u32 + 1;
            assert!(series.pole_set().into_iter().all(|j| j <= bound), "{w:?}");
        }
    }

    #[test]
    fn minimal_elements_basics() {
        let s = vec![word(1, &[1, 1]), word(1, &[1])];
        assert_eq!(minimal_elements(&s, 8).unwrap(), vec![word(1, &[1])]);
        let single = vec![word(2, &[2, -1])];
        assert_eq!(minimal_elements(&single, 8).unwrap(), single);
    }

    #[test]
    fn minimal_elements_randomized_against_closure() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(13);
        for _ in 0..20 {
            let s: Vec<Word> = (0..rng.gen_range(1..5)).map(|_| random_word(&mut rng, 2, 4)).collect();
            let mins = minimal_elements(&s, 8).unwrap();
            // antichain
            for (i, a) in mins.iter().enumerate() {
                for (j, b) in mins.iter().enumerate() {
                    if i != j {
                        assert!(!word_leq(a, b).unwrap() || a == b);
                    }
                }
            }
            // every closure member up to length 5 dominates a minimal element
            for len in 0..=5 {
                for v in all_words(2, len) {
                    let in_closure = s.iter().any(|w| word_leq(w, &v).unwrap());
                    let dominated = mins.iter().any(|m| word_leq(m, &v).unwrap());
                    assert_eq!(in_closure, dominated, "v={v:?} S={s:?}");
                }
            }
        }
    }

    #[test]
    fn lift_order_examples() {
        let phi = BMorphism::new(2, 1, vec![-1, 1]).unwrap();
        let (_, lifted) = lift_order(&phi);
        assert!(lifted.is_valid());
        assert_eq!(lifted.inner.images, vec![1, 1]);
        // already ordered morphisms lift to themselves under the stable sort
        let id = BMorphism::identity(3);
        let (w, lifted) = lift_order(&id);
        assert_eq!(w, SignedPerm::identity(3));
        assert_eq!(lifted.inner, id);
    }

    #[test]
    fn every_surjection_lifts() {
        for n in 0..=4usize {
            for d in 0..=2.min(n) {
                for phi in enumerate_hom(n, d) {
                    let (w, lifted) = lift_order(&phi);
                    assert!(lifted.is_valid(), "{phi:?}");
                    assert_eq!(crate::category::act(&w, &phi).unwrap(), lifted.inner);
                }
            }
        }
    }

    #[test]
    fn automaton_exports() {
        let aut = IdealAutomaton::principal_ideal(&word(1, &[1]));
        let table = aut.transition_table();
        assert!(table.contains("start: 0"));
        let dot = aut.to_dot();
        assert!(dot.starts_with("digraph"));
        assert!(dot.contains("doublecircle"));
    }
}
