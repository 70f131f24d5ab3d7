use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::num::Natural;

/// Ordered list of distinct variable names.
#[derive(Clone, PartialEq, Eq)]
pub struct VariableContext {
    names: Arc<[String]>,
    index: Arc<HashMap<String, usize>>,
}

impl VariableContext {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(names.len());
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() || !n.chars().all(|c| c.is_alphanumeric() || c == '_') {
                return Err(Error::Parse(format!("invalid variable name {n:?}")));
            }
            if index.insert(n.clone(), i).is_some() {
                return Err(Error::DuplicateVariable(n.clone()));
            }
        }
        Ok(Self {
            names: names.into(),
            index: Arc::new(index),
        })
    }

    /// `prefix1 … prefixN`.
    pub fn numbered(prefix: &str, count: usize) -> Self {
        Self::new((1..=count).map(|i| format!("{prefix}{i}"))).expect("numbered names are distinct")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    pub fn indices_of<S: AsRef<str>>(&self, names: &[S]) -> Result<Vec<usize>> {
        names.iter().map(|n| self.index_of(n.as_ref())).collect()
    }

    pub(crate) fn check<E: Natural>(&self, m: &Monomial<E>) -> Result<()> {
        if m.nvars() != self.len() {
            return Err(Error::ContextMismatch {
                expected: self.len(),
                found: m.nvars(),
            });
        }
        Ok(())
    }
}

impl fmt::Debug for VariableContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.names.iter()).finish()
    }
}

/// Exponent vector `X^α`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Monomial<E = BigUint> {
    exps: Vec<E>,
}

impl<E: Natural> Monomial<E> {
    pub fn new(exps: Vec<E>) -> Self {
        Self { exps }
    }

    pub fn from_u64s(exps: &[u64]) -> Self {
        Self {
            exps: exps.iter().map(|&e| E::of_u64(e)).collect(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self {
            exps: vec![E::zero(); nvars],
        }
    }

    pub fn var(nvars: usize, index: usize, power: E) -> Self {
        let mut m = Self::one(nvars);
        m.exps[index] = power;
        m
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[E] {
        &self.exps
    }

    pub fn into_exponents(self) -> Vec<E> {
        self.exps
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|e| e.is_zero())
    }

    pub fn degree(&self) -> E {
        self.exps.iter().fold(E::zero(), |acc, e| acc.add_exact(e))
    }

    pub fn divides(&self, other: &Self) -> bool {
        debug_assert_eq!(self.nvars(), other.nvars());
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a.add_exact(b))
                .collect(),
        }
    }

    /// `self / other`, when `other` divides `self`.
    pub fn div(&self, other: &Self) -> Option<Self> {
        self.exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a.checked_sub(b))
            .collect::<Option<Vec<_>>>()
            .map(|exps| Self { exps })
    }

    pub fn lcm(&self, other: &Self) -> Self {
        Self {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a.max(b).clone())
                .collect(),
        }
    }

    pub fn gcd(&self, other: &Self) -> Self {
        Self {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a.min(b).clone())
                .collect(),
        }
    }

    pub fn is_coprime(&self, other: &Self) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(a, b)| a.is_zero() || b.is_zero())
    }

    /// Indices of variables with a positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, e)| !e.is_zero())
            .map(|(i, _)| i)
    }

    /// True when every variable outside `allowed` has exponent zero.
    pub fn supported_on(&self, allowed: &[bool]) -> bool {
        self.exps
            .iter()
            .zip(allowed)
            .all(|(e, &ok)| ok || e.is_zero())
    }

    /// Reorders variables: position `i` of the result holds `self[perm[i]]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        Self {
            exps: perm.iter().map(|&p| self.exps[p].clone()).collect(),
        }
    }

    pub fn restrict(&self, indices: &[usize]) -> Self {
        self.permuted(indices)
    }

    /// Exponents as `u64`, when all of them fit.
    pub fn to_u64s(&self) -> Option<Vec<u64>> {
        self.exps.iter().map(|e| e.to_u64()).collect()
    }
}
