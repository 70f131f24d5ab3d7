//! Finite subsets of ℕ under sumset addition.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigUint;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::num::{gcd_u64, Natural};

/// A finite nonempty set of nonnegative integers, stored strictly increasing.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FiniteSet<T = BigUint> {
    elements: Vec<T>,
}

impl<T: Natural> FiniteSet<T> {
    /// Builds a set from arbitrary elements; duplicates are dropped.
    pub fn new(mut elements: Vec<T>) -> Result<Self> {
        if elements.is_empty() {
            return Err(Error::EmptySet);
        }
        elements.sort_unstable();
        elements.dedup();
        Ok(Self { elements })
    }

    pub fn from_u64s(values: &[u64]) -> Result<Self> {
        Self::new(values.iter().map(|&v| T::of_u64(v)).collect())
    }

    pub fn singleton(value: T) -> Self {
        Self {
            elements: vec![value],
        }
    }

    /// The identity `{0}`.
    pub fn zero() -> Self {
        Self::singleton(T::zero())
    }

    pub fn elements(&self) -> &[T] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn min(&self) -> &T {
        &self.elements[0]
    }

    pub fn max(&self) -> &T {
        self.elements.last().expect("nonempty")
    }

    pub fn is_singleton(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn contains(&self, value: &T) -> bool {
        self.elements.binary_search(value).is_ok()
    }

    /// `A + B = {a + b : a ∈ A, b ∈ B}`.
    pub fn add(&self, other: &Self) -> Self {
        let mut sums = Vec::with_capacity(self.len() * other.len());
        for a in &self.elements {
            for b in &other.elements {
                sums.push(a.add_exact(b));
            }
        }
        sums.sort_unstable();
        sums.dedup();
        Self { elements: sums }
    }

    /// Adds the same integer to every element.
    pub fn shift(&self, offset: &T) -> Self {
        Self {
            elements: self.elements.iter().map(|e| e.add_exact(offset)).collect(),
        }
    }

    /// `times ⊗ A`, the sum of `times` copies of `A`; `0 ⊗ A = {0}`.
    pub fn fold(&self, times: u64) -> Self {
        let mut result = Self::zero();
        let mut power = self.clone();
        let mut remaining = times;
        while remaining > 0 {
            if remaining & 1 == 1 {
                result = result.add(&power);
            }
            remaining >>= 1;
            if remaining > 0 {
                power = power.add(&power);
            }
        }
        result
    }

    /// Splits `A` as `{min A} + Ã` with `min Ã = 0`.
    pub fn normalize(&self) -> (T, Self) {
        let offset = self.min().clone();
        let shifted = self
            .elements
            .iter()
            .map(|e| e.clone() - offset.clone())
            .collect();
        (offset, Self { elements: shifted })
    }
}

impl<T: Natural> fmt::Display for FiniteSet<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.elements.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

impl<T: Natural> fmt::Debug for FiniteSet<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<T: Natural> Serialize for FiniteSet<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = serializer.serialize_seq(Some(self.len()))?;
        for e in &self.elements {
            seq.serialize_element(&crate::io::JsonNat::from_natural(e))?;
        }
        seq.end()
    }
}

impl<'de, T: Natural> Deserialize<'de> for FiniteSet<T> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw: Vec<crate::io::JsonNat> = Vec::deserialize(deserializer)?;
        let elements = raw
            .iter()
            .map(|n| {
                n.to_natural::<T>()
                    .ok_or_else(|| serde::de::Error::custom("set element out of range"))
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        // Sets must arrive strictly increasing, the same form they are written in.
        if elements.windows(2).any(|w| w[0] >= w[1]) {
            return Err(serde::de::Error::custom(
                "set elements must be strictly increasing",
            ));
        }
        FiniteSet::new(elements).map_err(serde::de::Error::custom)
    }
}

/// Exponent vector over the generators of a semigroup: `Σ wᵢ ⊗ Aᵢ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GeneratorWord(pub Vec<u64>);

impl GeneratorWord {
    pub fn zero(len: usize) -> Self {
        Self(vec![0; len])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn exponents(&self) -> &[u64] {
        &self.0
    }
}

impl From<Vec<u64>> for GeneratorWord {
    fn from(v: Vec<u64>) -> Self {
        Self(v)
    }
}

/// `n ⊗ {0,ka} + m ⊗ {0,kb}`, the grid set A_{nm}.
pub fn grid_set<T: Natural>(n: u64, m: u64, k: u64, a: u64, b: u64) -> Result<FiniteSet<T>> {
    check_grid_params(k, a, b)?;
    let ka = FiniteSet::new(vec![T::zero(), T::of_u64(k).mul_exact(&T::of_u64(a))])?;
    let kb = FiniteSet::new(vec![T::zero(), T::of_u64(k).mul_exact(&T::of_u64(b))])?;
    Ok(ka.fold(n).add(&kb.fold(m)))
}

pub(crate) fn check_grid_params(k: u64, a: u64, b: u64) -> Result<()> {
    if k == 0 {
        return Err(Error::InvalidGrid("k must be positive".into()));
    }
    if a == 0 || a >= b {
        return Err(Error::InvalidGrid(format!(
            "need 0 < a < b, got a={a}, b={b}"
        )));
    }
    if gcd_u64(a, b) != 1 {
        return Err(Error::InvalidGrid(format!("gcd({a},{b}) != 1")));
    }
    Ok(())
}

/// Evaluates `Σ wᵢ ⊗ gensᵢ`; the all-zero word gives `{0}`.
pub fn eval_word<T: Natural>(word: &GeneratorWord, gens: &[FiniteSet<T>]) -> Result<FiniteSet<T>> {
    if word.len() != gens.len() {
        return Err(Error::WordLength {
            word: word.len(),
            generators: gens.len(),
        });
    }
    Ok(word
        .0
        .iter()
        .zip(gens)
        .filter(|(&w, _)| w > 0)
        .fold(FiniteSet::zero(), |acc, (&w, g)| acc.add(&g.fold(w))))
}

/// All words of total degree `1..=max_degree` in graded-lex order
/// (by degree, then lexicographically decreasing).
pub fn words_up_to_degree(generators: usize, max_degree: u64) -> Vec<GeneratorWord> {
    let mut out = Vec::new();
    for d in 1..=max_degree {
        let mut current = vec![0u64; generators];
        words_of_degree(&mut current, 0, d, &mut out);
    }
    out
}

fn words_of_degree(
    current: &mut Vec<u64>,
    index: usize,
    remaining: u64,
    out: &mut Vec<GeneratorWord>,
) {
    if index + 1 == current.len() {
        current[index] = remaining;
        out.push(GeneratorWord(current.clone()));
        current[index] = 0;
        return;
    }
    if current.is_empty() {
        return;
    }
    for e in (0..=remaining).rev() {
        current[index] = e;
        words_of_degree(current, index + 1, remaining - e, out);
    }
    current[index] = 0;
}

/// Brute-force relation oracle: every pair `(u, v)` of words of total degree
/// at most `max_degree` with `u > v` lexicographically and equal evaluations.
/// Pairs come back sorted.
pub fn relations_up_to_degree<T: Natural>(
    gens: &[FiniteSet<T>],
    max_degree: u64,
) -> Vec<(GeneratorWord, GeneratorWord)> {
    let words = words_up_to_degree(gens.len(), max_degree);
    let mut values: HashMap<GeneratorWord, FiniteSet<T>> = HashMap::with_capacity(words.len() + 1);
    values.insert(GeneratorWord::zero(gens.len()), FiniteSet::zero());
    let mut classes: HashMap<FiniteSet<T>, Vec<GeneratorWord>> = HashMap::new();
    for w in words {
        // Extend a word of one lower degree by the first generator it uses.
        let i = w.0.iter().position(|&e| e > 0).expect("degree >= 1");
        let mut prev = w.clone();
        prev.0[i] -= 1;
        let value = values[&prev].add(&gens[i]);
        classes.entry(value.clone()).or_default().push(w.clone());
        values.insert(w, value);
    }
    let mut pairs = Vec::new();
    for class in classes.values() {
        for u in class {
            for v in class {
                if u > v {
                    pairs.push((u.clone(), v.clone()));
                }
            }
        }
    }
    pairs.sort();
    pairs
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn set(v: &[u64]) -> FiniteSet {
        FiniteSet::from_u64s(v).unwrap()
    }

    fn brute_sum(a: &[u64], b: &[u64]) -> Vec<u64> {
        let mut out: Vec<u64> = a
            .iter()
            .flat_map(|x| b.iter().map(move |y| x + y))
            .collect();
        out.sort();
        out.dedup();
        out
    }

    #[test]
    fn add_examples() {
        assert_eq!(
            set(&[1, 3]).add(&set(&[1, 2, 3])),
            set(&brute_sum(&[1, 3], &[1, 2, 3]))
        );
        assert_eq!(set(&[1, 3]).add(&set(&[1, 2, 3])), set(&[2, 3, 4, 5, 6]));
        assert_eq!(set(&[1, 2, 3]).add(&set(&[1, 2, 3])), set(&[2, 3, 4, 5, 6]));
        assert_eq!(set(&[0]).add(&set(&[5, 9])), set(&[5, 9]));
        assert_eq!(set(&[3]).add(&set(&[7, 10, 13])), set(&[10, 13, 16]));
    }

    #[test]
    fn fold_examples() {
        assert_eq!(
            set(&[1, 2, 4, 5]).fold(2),
            set(&(2..=10).collect::<Vec<_>>())
        );
        assert_eq!(set(&[1, 2, 3, 4, 5]).fold(2), set(&[1, 2, 4, 5]).fold(2));
        assert_eq!(set(&[7, 10, 13]).fold(0), set(&[0]));
        assert_eq!(set(&[0, 3]).fold(3), set(&[0, 3, 6, 9]));
    }

    #[test]
    fn grid_examples() {
        assert_eq!(grid_set::<BigUint>(2, 0, 3, 1, 2).unwrap(), set(&[0, 3, 6]));
        assert_eq!(grid_set::<BigUint>(0, 1, 3, 1, 2).unwrap(), set(&[0, 6]));
        assert_eq!(grid_set::<BigUint>(0, 0, 5, 2, 3).unwrap(), set(&[0]));
        assert!(grid_set::<u64>(1, 1, 1, 2, 2).is_err());
        assert!(grid_set::<u64>(1, 1, 1, 3, 2).is_err());
        assert!(grid_set::<u64>(1, 1, 1, 2, 4).is_err());
        assert!(grid_set::<u64>(1, 1, 0, 1, 2).is_err());
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(
            set(&[7, 10, 13]).normalize(),
            (BigUint::from(7u8), set(&[0, 3, 6]))
        );
        assert_eq!(
            set(&[0, 3, 6, 9]).normalize(),
            (BigUint::from(0u8), set(&[0, 3, 6, 9]))
        );
        assert_eq!(set(&[5]).normalize(), (BigUint::from(5u8), set(&[0])));
    }

    #[test]
    fn empty_set_rejected() {
        assert_eq!(FiniteSet::<u64>::new(vec![]), Err(Error::EmptySet));
    }

    #[test]
    fn json_form() {
        let s = set(&[7, 10, 13]);
        assert_eq!(serde_json::to_string(&s).unwrap(), "[7,10,13]");
        let back: FiniteSet = serde_json::from_str("[7,10,13]").unwrap();
        assert_eq!(back, s);
        assert!(serde_json::from_str::<FiniteSet>("[]").is_err());
        assert!(serde_json::from_str::<FiniteSet>("[3,1]").is_err());
    }

    fn ex13() -> Vec<FiniteSet> {
        vec![
            set(&[3]),
            set(&[4]),
            set(&[6, 12]),
            set(&[7, 10, 13]),
            set(&[0, 3, 6, 9]),
        ]
    }

    #[test]
    fn eval_word_examples() {
        let gens = ex13();
        let lhs = eval_word(&vec![1, 0, 0, 1, 1].into(), &gens).unwrap();
        let direct = set(&[3]).add(&set(&[7, 10, 13])).add(&set(&[0, 3, 6, 9]));
        assert_eq!(lhs, direct);
        assert_eq!(lhs, eval_word(&vec![0, 1, 1, 0, 1].into(), &gens).unwrap());
        assert_eq!(
            eval_word(&GeneratorWord::zero(5), &gens).unwrap(),
            set(&[0])
        );
        assert_eq!(
            eval_word(&vec![7, 0, 0, 0, 2].into(), &gens).unwrap(),
            eval_word(&vec![0, 0, 0, 3, 0].into(), &gens).unwrap()
        );
        assert!(matches!(
            eval_word(&vec![1, 2].into(), &gens),
            Err(Error::WordLength {
                word: 2,
                generators: 5
            })
        ));
    }

    #[test]
    fn words_are_graded_and_complete() {
        let words = words_up_to_degree(3, 3);
        // C(3+3,3) - 1 nonzero words.
        assert_eq!(words.len(), 19);
        assert!(words
            .windows(2)
            .all(|w| w[0].degree() < w[1].degree() || w[0] > w[1]));
        assert!(words_up_to_degree(0, 3).is_empty());
    }

    #[test]
    fn relation_oracle_examples() {
        let pair = vec![set(&[0, 3]), set(&[0, 6])];
        let rels = relations_up_to_degree(&pair, 3);
        assert!(rels.contains(&(vec![3, 0].into(), vec![1, 1].into())));
        assert!(relations_up_to_degree(&[set(&[5])], 4).is_empty());
        let rels = relations_up_to_degree(&ex13(), 3);
        assert!(rels.contains(&(vec![1, 0, 0, 1, 1].into(), vec![0, 1, 1, 0, 1].into())));
        assert!(!rels.contains(&(vec![1, 0, 0, 1, 0].into(), vec![0, 1, 1, 0, 0].into())));
        assert!(rels.windows(2).all(|w| w[0] < w[1]));
        assert!(rels.iter().all(|(u, v)| u > v));
    }

    fn arb_set() -> impl Strategy<Value = FiniteSet<u64>> {
        prop::collection::vec(0u64..30, 1..5).prop_map(|v| FiniteSet::new(v).unwrap())
    }

    proptest! {
        #[test]
        fn add_is_commutative_and_associative(a in arb_set(), b in arb_set(), c in arb_set()) {
            prop_assert_eq!(a.add(&b), b.add(&a));
            prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
            prop_assert_eq!(a.add(&FiniteSet::zero()), a.clone());
            prop_assert_eq!(a.fold(1), a.clone());
            let sum = a.add(&b);
            prop_assert_eq!(sum.elements(), &brute_sum(a.elements(), b.elements())[..]);
            prop_assert!(a.add(&b).len() <= a.len() * b.len());
            prop_assert_eq!(*a.add(&b).min(), a.min() + b.min());
            prop_assert_eq!(*a.add(&b).max(), a.max() + b.max());
        }

        #[test]
        fn fold_laws(a in arb_set(), b in arb_set(), x in 0u64..=6, y in 0u64..=6) {
            prop_assert_eq!(a.fold(y).fold(x), a.fold(x * y));
            prop_assert_eq!(a.add(&b).fold(x), a.fold(x).add(&b.fold(x)));
            let mut naive = FiniteSet::zero();
            for _ in 0..x { naive = naive.add(&a); }
            prop_assert_eq!(a.fold(x), naive);
        }

        #[test]
        fn word_extremes(gens in prop::collection::vec(arb_set(), 1..4), seed in prop::collection::vec(0u64..4, 3)) {
            let w = GeneratorWord(seed[..gens.len()].to_vec());
            let v = eval_word(&w, &gens).unwrap();
            let lo: u64 = w.0.iter().zip(&gens).map(|(e, g)| e * g.min()).sum();
            let hi: u64 = w.0.iter().zip(&gens).map(|(e, g)| e * g.max()).sum();
            prop_assert_eq!(*v.min(), lo);
            prop_assert_eq!(*v.max(), hi);
        }

        #[test]
        fn grid_matches_enumeration(n in 0u64..4, m in 0u64..4, k in 1u64..4, ab in prop::sample::select(vec![(1u64, 2u64), (1, 3), (2, 3), (3, 4), (2, 5)])) {
            let (a, b) = ab;
            let grid = grid_set::<u64>(n, m, k, a, b).unwrap();
            let mut direct = Vec::new();
            for i in 0..=n { for j in 0..=m { direct.push(i * k * a + j * k * b); } }
            prop_assert_eq!(grid, FiniteSet::new(direct).unwrap());
        }
    }
}
