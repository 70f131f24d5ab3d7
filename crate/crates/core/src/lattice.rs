//! Integer lattices spanned by binomial exponent differences, and their
//! defining homogeneous equations.

use num_bigint::BigInt;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::binomial::BinomialIdeal;
use crate::error::{Error, Result};
use crate::io::JsonInt;
use crate::linalg;
use crate::num::{Int, Natural};

/// The subgroup of ℤⁿ spanned by `generators`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntegerLattice<Z = BigInt> {
    dim: usize,
    generators: Vec<Vec<Z>>,
}

impl<Z: Int> IntegerLattice<Z> {
    pub fn new(dim: usize, generators: Vec<Vec<Z>>) -> Result<Self> {
        if let Some(g) = generators.iter().find(|g| g.len() != dim) {
            return Err(Error::ContextMismatch {
                expected: dim,
                found: g.len(),
            });
        }
        Ok(Self { dim, generators })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[Vec<Z>] {
        &self.generators
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    fn big_rows(&self) -> Vec<Vec<BigInt>> {
        self.generators
            .iter()
            .map(|g| g.iter().map(Int::to_bigint).collect())
            .collect()
    }

    pub fn rank(&self) -> usize {
        linalg::rank(&self.big_rows(), self.dim)
    }

    /// True when the lattice equals its saturation `(ℚ·L) ∩ ℤⁿ`, i.e. every
    /// invariant factor of the generator matrix is 1.
    pub fn is_saturated(&self) -> bool {
        linalg::invariant_factors(&self.big_rows(), self.dim)
            .iter()
            .all(|f| *f == BigInt::from(1))
    }
}

/// The lattice spanned by `lead − trail` over the ideal's generators,
/// without duplicates and sorted lexicographically.
pub fn lattice_from_ideal<E: Natural, Z: Int>(
    ideal: &BinomialIdeal<E>,
) -> Result<IntegerLattice<Z>> {
    let mut vectors: Vec<Vec<Z>> = ideal
        .generators()
        .iter()
        .map(|b| {
            b.exponent_difference()
                .iter()
                .map(|d| {
                    Z::from_bigint(d)
                        .ok_or_else(|| Error::Parse(format!("lattice entry {d} out of range")))
                })
                .collect::<Result<Vec<Z>>>()
        })
        .collect::<Result<_>>()?;
    vectors.sort();
    vectors.dedup();
    IntegerLattice::new(ideal.nvars(), vectors)
}

/// The homogeneous system `Ax = 0`; its solutions of interest are `x ≥ 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DiophantineSystem<Z = BigInt> {
    nvars: usize,
    equations: Vec<Vec<Z>>,
}

impl<Z: Int> DiophantineSystem<Z> {
    pub fn new(nvars: usize, equations: Vec<Vec<Z>>) -> Result<Self> {
        if let Some(r) = equations.iter().find(|r| r.len() != nvars) {
            return Err(Error::ContextMismatch {
                expected: nvars,
                found: r.len(),
            });
        }
        Ok(Self { nvars, equations })
    }

    pub fn from_i64_rows(nvars: usize, rows: &[Vec<i64>]) -> Result<Self> {
        Self::new(
            nvars,
            rows.iter()
                .map(|r| r.iter().map(|&x| Z::of_i64(x)).collect())
                .collect(),
        )
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn equations(&self) -> &[Vec<Z>] {
        &self.equations
    }

    pub fn big_rows(&self) -> Vec<Vec<BigInt>> {
        self.equations
            .iter()
            .map(|r| r.iter().map(Int::to_bigint).collect())
            .collect()
    }

    /// The system `(A | −A)(x, y) = 0` in twice as many variables.
    pub fn doubled(&self) -> Self {
        let equations = self
            .equations
            .iter()
            .map(|r| {
                r.iter()
                    .cloned()
                    .chain(r.iter().map(|x| Z::zero() - x.clone()))
                    .collect()
            })
            .collect();
        Self {
            nvars: 2 * self.nvars,
            equations,
        }
    }

    /// `Ax` for an integer point.
    pub fn evaluate(&self, x: &[u64]) -> Vec<BigInt> {
        self.equations
            .iter()
            .map(|r| {
                r.iter()
                    .zip(x)
                    .map(|(a, &xi)| a.to_bigint() * BigInt::from(xi))
                    .sum()
            })
            .collect()
    }

    pub fn is_solution(&self, x: &[u64]) -> bool {
        x.len() == self.nvars && self.evaluate(x).iter().all(|v| *v == BigInt::from(0))
    }

    /// Same solution space over ℚ.
    pub fn row_equivalent(&self, other: &Self) -> bool {
        self.nvars == other.nvars
            && linalg::row_equivalent(&self.big_rows(), &other.big_rows(), self.nvars)
    }

    /// Reorders the variables: variable `i` of the result is `perm[i]` of `self`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let equations = self
            .equations
            .iter()
            .map(|r| perm.iter().map(|&p| r[p].clone()).collect())
            .collect();
        Self {
            nvars: self.nvars,
            equations,
        }
    }
}

/// The equations of the rational span of `L`: a basis of all `v` with
/// `v·g = 0` for every generator `g`, in reduced echelon form with
/// primitive integer rows. Its nonnegative solutions describe the
/// saturation of `L`.
pub fn lattice_equations<Z: Int>(lattice: &IntegerLattice<Z>) -> Result<DiophantineSystem<Z>> {
    let kernel = linalg::kernel(&lattice.big_rows(), lattice.dim);
    let canonical = linalg::canonical_row_basis(&kernel, lattice.dim);
    let rows = canonical
        .iter()
        .map(|r| {
            r.iter()
                .map(|x| {
                    Z::from_bigint(x)
                        .ok_or_else(|| Error::Parse(format!("equation entry {x} out of range")))
                })
                .collect::<Result<Vec<Z>>>()
        })
        .collect::<Result<_>>()?;
    DiophantineSystem::new(lattice.dim, rows)
}

#[derive(Serialize, Deserialize)]
struct SystemJson {
    equations: Vec<Vec<JsonInt>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    nvars: Option<usize>,
}

impl<Z: Int> Serialize for DiophantineSystem<Z> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let equations = self
            .equations
            .iter()
            .map(|r| r.iter().map(JsonInt::from_int).collect())
            .collect();
        let nvars = self.equations.is_empty().then_some(self.nvars);
        SystemJson { equations, nvars }.serialize(s)
    }
}

impl<'de, Z: Int> Deserialize<'de> for DiophantineSystem<Z> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = SystemJson::deserialize(d)?;
        let nvars = match (raw.nvars, raw.equations.first()) {
            (Some(n), _) => n,
            (None, Some(r)) => r.len(),
            (None, None) => return Err(D::Error::custom("an empty system needs \"nvars\"")),
        };
        let rows = raw
            .equations
            .iter()
            .map(|r| {
                r.iter()
                    .map(|x| {
                        x.to_int::<Z>()
                            .ok_or_else(|| D::Error::custom("entry out of range"))
                    })
                    .collect()
            })
            .collect::<std::result::Result<Vec<Vec<Z>>, D::Error>>()?;
        Self::new(nvars, rows).map_err(D::Error::custom)
    }
}
