//! Hilbert bases of homogeneous linear Diophantine systems.
//!
//! The solver is the Contejean–Devie completion: starting from the unit
//! vectors, a non-solution `x` is extended by `e_j` only when `A e_j` points
//! back towards the origin from `A x` (`⟨Ax, Ae_j⟩ < 0`), and candidates
//! above an already found solution are discarded. Levels are total degrees,
//! so solutions appear in order of degree and each one found is minimal.

use std::collections::HashMap;

use num_bigint::BigInt;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::lattice::DiophantineSystem;
use crate::num::Int;

/// Minimal nonzero solutions of `Ax = 0, x ≥ 0`, sorted by degree and then
/// lexicographically decreasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HilbertBasisSet {
    nvars: usize,
    elements: Vec<Vec<u64>>,
}

impl HilbertBasisSet {
    /// Sorts `elements` into the canonical order.
    pub fn new(nvars: usize, mut elements: Vec<Vec<u64>>) -> Self {
        sort_graded(&mut elements);
        elements.dedup();
        Self { nvars, elements }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn elements(&self) -> &[Vec<u64>] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// No element is coordinatewise below another.
    pub fn is_minimal(&self) -> bool {
        self.elements.iter().enumerate().all(|(i, a)| {
            self.elements
                .iter()
                .enumerate()
                .all(|(j, b)| i == j || !dominates(a, b))
        })
    }
}

fn sort_graded(v: &mut [Vec<u64>]) {
    v.sort_by(|a, b| {
        let da: u64 = a.iter().sum();
        let db: u64 = b.iter().sum();
        da.cmp(&db).then_with(|| b.cmp(a))
    });
}

/// `a ≥ b` coordinatewise.
pub fn dominates(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x >= y)
}

/// The Hilbert basis of `{x ∈ ℕⁿ : Ax = 0}`.
pub fn hilbert_basis<Z: Int>(sys: &DiophantineSystem<Z>) -> HilbertBasisSet {
    let n = sys.nvars();
    let rows = sys.big_rows();
    let small: Option<Vec<Vec<i64>>> = rows
        .iter()
        .map(|r| r.iter().map(|x| i64::try_from(x).ok()).collect())
        .collect();
    let found = small
        .and_then(|r| complete::<i64>(&columns(&r, n), n))
        .or_else(|| complete::<BigInt>(&columns(&rows, n), n))
        .expect("arbitrary precision does not overflow");
    HilbertBasisSet::new(n, found)
}

fn columns<Z: Clone>(rows: &[Vec<Z>], n: usize) -> Vec<Vec<Z>> {
    (0..n)
        .map(|j| rows.iter().map(|r| r[j].clone()).collect())
        .collect()
}

/// The completion itself; `None` when fixed-width arithmetic overflows.
fn complete<Z: Int>(cols: &[Vec<Z>], n: usize) -> Option<Vec<Vec<u64>>> {
    let dot = |u: &[Z], v: &[Z]| -> Option<Z> {
        u.iter()
            .zip(v)
            .try_fold(Z::zero(), |acc, (a, b)| acc.checked_add(&a.checked_mul(b)?))
    };
    let add = |u: &[Z], v: &[Z]| -> Option<Vec<Z>> {
        u.iter().zip(v).map(|(a, b)| a.checked_add(b)).collect()
    };

    let mut basis: Vec<Vec<u64>> = Vec::new();
    let mut frontier: Vec<(Vec<u64>, Vec<Z>)> = (0..n)
        .map(|j| {
            let mut x = vec![0u64; n];
            x[j] = 1;
            (x, cols[j].clone())
        })
        .collect();
    while !frontier.is_empty() {
        let mut rest = Vec::with_capacity(frontier.len());
        for (x, ax) in frontier {
            if ax.iter().all(|v| v.is_zero()) {
                basis.push(x);
            } else {
                rest.push((x, ax));
            }
        }
        let mut next: HashMap<Vec<u64>, Vec<Z>> = HashMap::new();
        for (x, ax) in &rest {
            for j in 0..n {
                if !dot(ax, &cols[j])?.is_negative() {
                    continue;
                }
                let mut y = x.clone();
                y[j] += 1;
                if next.contains_key(&y) || basis.iter().any(|b| dominates(&y, b)) {
                    continue;
                }
                let ay = add(ax, &cols[j])?;
                next.insert(y, ay);
            }
        }
        frontier = next.into_iter().collect();
    }
    Some(basis)
}

#[derive(Serialize, Deserialize)]
struct BasisJson {
    elements: Vec<Vec<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    nvars: Option<usize>,
}

impl Serialize for HilbertBasisSet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let nvars = self.elements.is_empty().then_some(self.nvars);
        BasisJson {
            elements: self.elements.clone(),
            nvars,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for HilbertBasisSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = BasisJson::deserialize(d)?;
        let nvars = match (raw.nvars, raw.elements.first()) {
            (Some(n), _) => n,
            (None, Some(e)) => e.len(),
            (None, None) => return Err(D::Error::custom("an empty basis needs \"nvars\"")),
        };
        if raw.elements.iter().any(|e| e.len() != nvars) {
            return Err(D::Error::custom("basis elements have different lengths"));
        }
        Ok(Self::new(nvars, raw.elements))
    }
}
